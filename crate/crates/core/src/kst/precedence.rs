//! Prerequisite relations and their correspondence with knowledge spaces.
//!
//! A precedence relation generates the family of its down-sets (every state
//! holding an item also holds all its prerequisites). Going back, the surmise
//! relation of a family reads off which items every state containing `q`
//! also contains. For down-set families the round trip yields the transitive
//! closure of the original relation.

use std::collections::{BTreeSet, VecDeque};

use super::domain::{Domain, Item, KnowledgeState};
use super::error::{KstError, KstResult};
use super::structure::KnowledgeStructure;

/// Default upper bound on the number of states a relation may generate.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// An acyclic "p precedes q" relation over a domain. Reflexive pairs are implied and never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecedenceRelation {
    domain: Domain,
    pairs: BTreeSet<(usize, usize)>,
}

impl PrecedenceRelation {
    pub fn new<I, A, B>(domain: Domain, pairs: I) -> KstResult<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let lookup = |id: &str| {
            domain
                .index_of(id)
                .ok_or_else(|| KstError::UnknownItem(id.to_string()))
        };
        let mut indexed = BTreeSet::new();
        for (p, q) in pairs {
            let (p, q) = (lookup(p.as_ref())?, lookup(q.as_ref())?);
            if p != q {
                indexed.insert((p, q));
            }
        }
        let relation = PrecedenceRelation { domain, pairs: indexed };
        relation.topological_order()?;
        Ok(relation)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs as (prerequisite, dependent), ordered by item position.
    pub fn pairs(&self) -> impl Iterator<Item = (&Item, &Item)> + '_ {
        self.pairs
            .iter()
            .map(|&(p, q)| (self.domain.item(p), self.domain.item(q)))
    }

    pub fn index_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn precedes(&self, p: &str, q: &str) -> bool {
        match (self.domain.index_of(p), self.domain.index_of(q)) {
            (Some(p), Some(q)) => self.pairs.contains(&(p, q)),
            _ => false,
        }
    }

    /// Direct prerequisites of every item, as states.
    fn predecessor_masks(&self) -> Vec<KnowledgeState> {
        let n = self.domain.len();
        let mut masks = vec![KnowledgeState::empty(n); n];
        for &(p, q) in &self.pairs {
            masks[q].insert(p);
        }
        masks
    }

    /// Kahn's algorithm, smallest ready item first. Fails on a cycle.
    fn topological_order(&self) -> KstResult<Vec<usize>> {
        let n = self.domain.len();
        let mut indegree = vec![0usize; n];
        let mut successors = vec![Vec::new(); n];
        for &(p, q) in &self.pairs {
            indegree[q] += 1;
            successors[p].push(q);
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(next) = ready.pop_first() {
            order.push(next);
            for &q in &successors[next] {
                indegree[q] -= 1;
                if indegree[q] == 0 {
                    ready.insert(q);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).expect("cycle leaves an item unplaced");
            return Err(KstError::CyclicPrecedence(self.domain.item(stuck).to_string()));
        }
        Ok(order)
    }

    /// All pairs implied by transitivity.
    pub fn transitive_closure(&self) -> PrecedenceRelation {
        let n = self.domain.len();
        let mut successors = vec![Vec::new(); n];
        for &(p, q) in &self.pairs {
            successors[p].push(q);
        }
        let mut pairs = BTreeSet::new();
        for start in 0..n {
            let mut seen = vec![false; n];
            let mut queue: VecDeque<usize> = successors[start].iter().copied().collect();
            while let Some(q) = queue.pop_front() {
                if std::mem::replace(&mut seen[q], true) {
                    continue;
                }
                pairs.insert((start, q));
                queue.extend(successors[q].iter().copied());
            }
        }
        PrecedenceRelation {
            domain: self.domain.clone(),
            pairs,
        }
    }
}

/// The family of all down-sets of `prec`, or `TooManyStates` once it exceeds `cap`.
pub fn states_from_precedence(prec: &PrecedenceRelation, cap: usize) -> KstResult<KnowledgeStructure> {
    if cap == 0 {
        return Err(KstError::InvalidCap);
    }
    let order = prec.topological_order()?;
    let preds = prec.predecessor_masks();
    let mut out = Vec::new();
    let mut current = prec.domain.empty_state();
    collect_down_sets(&order, &preds, &mut current, &mut out, cap)?;
    KnowledgeStructure::new(prec.domain.clone(), out)
}

// Walks a linear extension deciding each item in turn; an item may be included
// only once all its prerequisites are, so every leaf is a distinct down-set.
fn collect_down_sets(
    order: &[usize],
    preds: &[KnowledgeState],
    current: &mut KnowledgeState,
    out: &mut Vec<KnowledgeState>,
    cap: usize,
) -> KstResult<()> {
    let Some((&item, rest)) = order.split_first() else {
        if out.len() == cap {
            return Err(KstError::TooManyStates {
                count_estimate: cap + 1,
                cap,
            });
        }
        out.push(current.clone());
        return Ok(());
    };
    collect_down_sets(rest, preds, current, out, cap)?;
    if preds[item].is_subset(current) {
        current.insert(item);
        let result = collect_down_sets(rest, preds, current, out, cap);
        current.remove(item);
        result?;
    }
    Ok(())
}

/// Pairs `(p, q)`, `p ≠ q`, such that every state containing `q` also contains `p`.
pub fn surmise_relation(family: &KnowledgeStructure) -> KstResult<PrecedenceRelation> {
    let domain = family.domain();
    let n = domain.len();
    let mut required = Vec::with_capacity(n);
    for q in 0..n {
        let mut containing = family.states().iter().filter(|s| s.contains(q));
        let first = containing
            .next()
            .ok_or_else(|| KstError::ItemNeverPresent(domain.item(q).to_string()))?;
        required.push(containing.fold(first.clone(), |acc, s| acc.intersection(s)));
    }
    let mut pairs = BTreeSet::new();
    for (q, needs) in required.iter().enumerate() {
        for p in needs.iter().filter(|&p| p != q) {
            if required[p].contains(q) {
                let (a, b) = (p.min(q), p.max(q));
                return Err(KstError::NotAPartialOrder(
                    domain.item(a).to_string(),
                    domain.item(b).to_string(),
                ));
            }
            pairs.insert((p, q));
        }
    }
    Ok(PrecedenceRelation {
        domain: domain.clone(),
        pairs,
    })
}

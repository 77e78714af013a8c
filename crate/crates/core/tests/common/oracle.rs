//! Brute-force reference implementations over `u32` bitmasks.
//!
//! These follow the textbook definitions literally (pairwise loops, BFS over
//! one-item moves, subset filtering) and share no code with `ksf_core::kst`.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use ksf_core::kst::{Domain, KnowledgeState, KnowledgeStructure, PrecedenceRelation};
use rand::Rng;

pub type Mask = u32;

pub fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

pub fn domain(n: usize) -> Domain {
    Domain::new(letters(n)).unwrap()
}

pub fn to_structure(n: usize, family: &[Mask]) -> KnowledgeStructure {
    let states = family
        .iter()
        .map(|&m| KnowledgeState::from_indices(n, (0..n).filter(|&i| m & (1 << i) != 0)));
    KnowledgeStructure::new(domain(n), states).unwrap()
}

pub fn to_mask(state: &KnowledgeState) -> Mask {
    state.iter().fold(0, |acc, i| acc | (1 << i))
}

pub fn from_structure(f: &KnowledgeStructure) -> BTreeSet<Mask> {
    f.states().iter().map(to_mask).collect()
}

/// Every family over `n` items that contains both `∅` and the full set.
pub fn families_with_endpoints(n: usize) -> impl Iterator<Item = Vec<Mask>> {
    let full: Mask = (1 << n) - 1;
    let middle: Vec<Mask> = (1..full).collect();
    let count: u64 = 1 << middle.len();
    (0..count).map(move |choice| {
        let mut fam = vec![0];
        fam.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice & (1 << i) != 0)
                .map(|(_, &m)| m),
        );
        if full != 0 {
            fam.push(full);
        }
        fam
    })
}

pub fn union_closed(fam: &[Mask]) -> bool {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    fam.iter().all(|a| fam.iter().all(|b| set.contains(&(a | b))))
}

pub fn intersection_closed(fam: &[Mask]) -> bool {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    fam.iter().all(|a| fam.iter().all(|b| set.contains(&(a & b))))
}

pub fn accessible(fam: &[Mask]) -> bool {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    fam.iter()
        .filter(|&&k| k != 0)
        .all(|&k| (0..32).any(|i| k & (1 << i) != 0 && set.contains(&(k & !(1 << i)))))
}

fn one_step_distance(fam: &[Mask], from: Mask, to: Mask, allowed: impl Fn(Mask) -> bool) -> Option<u32> {
    let set: HashSet<Mask> = fam.iter().copied().filter(|&m| allowed(m)).collect();
    let mut dist = std::collections::HashMap::from([(from, 0u32)]);
    let mut queue = VecDeque::from([from]);
    while let Some(k) = queue.pop_front() {
        if k == to {
            return dist.get(&k).copied();
        }
        for i in 0..32 {
            let next = k ^ (1 << i);
            if set.contains(&next) && !dist.contains_key(&next) {
                dist.insert(next, dist[&k] + 1);
                queue.push_back(next);
            }
        }
    }
    None
}

pub fn well_graded(fam: &[Mask]) -> bool {
    fam.iter().all(|&k| {
        fam.iter()
            .all(|&l| one_step_distance(fam, k, l, |_| true) == Some((k ^ l).count_ones()))
    })
}

/// Chain from `K` up to `L` through states between them, one item per step.
pub fn smooth(fam: &[Mask]) -> bool {
    fam.iter().all(|&k| {
        fam.iter().filter(|&&l| k & !l == 0).all(|&l| {
            one_step_distance(fam, k, l, |m| k & !m == 0 && m & !l == 0).is_some()
        })
    })
}

pub fn consistent(fam: &[Mask], n: usize) -> bool {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    fam.iter().all(|&k| {
        fam.iter().filter(|&&l| k & !l == 0).all(|&l| {
            (0..n).all(|q| !set.contains(&(k | 1 << q)) || set.contains(&(l | 1 << q)))
        })
    })
}

pub fn inner_fringe(fam: &[Mask], k: Mask, n: usize) -> Mask {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    (0..n)
        .filter(|&q| k & (1 << q) != 0 && set.contains(&(k & !(1 << q))))
        .fold(0, |acc, q| acc | 1 << q)
}

pub fn outer_fringe(fam: &[Mask], k: Mask, n: usize) -> Mask {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    (0..n)
        .filter(|&q| k & (1 << q) == 0 && set.contains(&(k | 1 << q)))
        .fold(0, |acc, q| acc | 1 << q)
}

/// All subsets closed under predecessors of `pairs` (p precedes q).
pub fn down_sets(n: usize, pairs: &[(usize, usize)]) -> BTreeSet<Mask> {
    (0..(1 as Mask) << n)
        .filter(|&s| {
            pairs
                .iter()
                .all(|&(p, q)| s & (1 << q) == 0 || s & (1 << p) != 0)
        })
        .collect()
}

/// Floyd–Warshall reachability, reflexive pairs dropped.
pub fn transitive_closure(n: usize, pairs: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    let mut reach = vec![vec![false; n]; n];
    for &(p, q) in pairs {
        reach[p][q] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && reach[i][j])
        .collect()
}

/// Orders of the items where every prefix is a state.
pub fn count_gradations(fam: &[Mask], n: usize) -> usize {
    let set: HashSet<Mask> = fam.iter().copied().collect();
    fn walk(set: &HashSet<Mask>, current: Mask, full: Mask, n: usize) -> usize {
        if current == full {
            return 1;
        }
        (0..n)
            .filter(|&q| current & (1 << q) == 0 && set.contains(&(current | 1 << q)))
            .map(|q| walk(set, current | 1 << q, full, n))
            .sum()
    }
    if !set.contains(&0) {
        return 0;
    }
    walk(&set, 0, (1 << n) - 1, n)
}

/// A random DAG on `n` items: edges only go from earlier to later positions
/// of a random permutation.
pub fn random_dag(rng: &mut impl Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[a], perm[b]));
            }
        }
    }
    pairs
}

pub fn relation(n: usize, pairs: &[(usize, usize)]) -> PrecedenceRelation {
    let names = letters(n);
    PrecedenceRelation::new(
        domain(n),
        pairs.iter().map(|&(p, q)| (names[p].clone(), names[q].clone())),
    )
    .unwrap()
}

pub fn relation_pairs(r: &PrecedenceRelation) -> BTreeSet<(usize, usize)> {
    r.index_pairs().clone()
}

//! Items, domains and knowledge states.
//!
//! A [`KnowledgeState`] is a fixed-width bit vector indexed by the position of
//! each item in its [`Domain`]. Domains keep their items in ascending id order,
//! so bit `i` always refers to the `i`-th smallest id.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::error::{KstError, KstResult};

const WORD: usize = 64;

/// A problem type of the domain, identified by an opaque non-empty id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(String);

impl Item {
    pub fn new(id: impl Into<String>) -> KstResult<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(KstError::EmptyItemId);
        }
        Ok(Item(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The finite item set a structure is built over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    items: Vec<Item>,
    index: HashMap<String, usize>,
}

impl Domain {
    /// Builds a domain from item ids in any order. Rejects empty input and duplicates.
    pub fn new<I, S>(ids: I) -> KstResult<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut items = ids
            .into_iter()
            .map(Item::new)
            .collect::<KstResult<Vec<_>>>()?;
        if items.is_empty() {
            return Err(KstError::EmptyDomain);
        }
        items.sort();
        if let Some(pair) = items.windows(2).find(|w| w[0] == w[1]) {
            return Err(KstError::DuplicateItem(pair[0].0.clone()));
        }
        let index = items
            .iter()
            .enumerate()
            .map(|(i, item)| (item.0.clone(), i))
            .collect();
        Ok(Domain { items, index })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Items in ascending id order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn item(&self, index: usize) -> &Item {
        &self.items[index]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn empty_state(&self) -> KnowledgeState {
        KnowledgeState::empty(self.len())
    }

    pub fn full_state(&self) -> KnowledgeState {
        KnowledgeState::full(self.len())
    }

    /// Builds the state holding exactly the given ids.
    pub fn state<I, S>(&self, ids: I) -> KstResult<KnowledgeState>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut state = self.empty_state();
        for id in ids {
            let id = id.as_ref();
            let idx = self
                .index_of(id)
                .ok_or_else(|| KstError::UnknownItem(id.to_string()))?;
            state.insert(idx);
        }
        Ok(state)
    }

    /// Ids of the state's members, ascending.
    pub fn ids<'a>(&'a self, state: &'a KnowledgeState) -> impl Iterator<Item = &'a str> + 'a {
        state.iter().map(move |i| self.items[i].as_str())
    }

    pub fn id_vec(&self, state: &KnowledgeState) -> Vec<String> {
        self.ids(state).map(str::to_string).collect()
    }
}

/// A subset of a domain, stored as a bit vector.
///
/// Ordering is the canonical family order: by cardinality, then by the
/// ascending list of member indices compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KnowledgeState {
    width: usize,
    words: Box<[u64]>,
}

impl KnowledgeState {
    pub fn empty(width: usize) -> Self {
        KnowledgeState {
            width,
            words: vec![0; width.div_ceil(WORD)].into_boxed_slice(),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut state = Self::empty(width);
        for (i, word) in state.words.iter_mut().enumerate() {
            let remaining = width - i * WORD;
            *word = if remaining >= WORD {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        state
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut state = Self::empty(width);
        for i in indices {
            state.insert(i);
        }
        state
    }

    /// Number of domain items the state is defined over.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.width && self.words[index / WORD] & (1 << (index % WORD)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.width, "item index {index} out of range");
        self.words[index / WORD] |= 1 << (index % WORD);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.width, "item index {index} out of range");
        self.words[index / WORD] &= !(1 << (index % WORD));
    }

    pub fn with(&self, index: usize) -> Self {
        let mut next = self.clone();
        next.insert(index);
        next
    }

    pub fn without(&self, index: usize) -> Self {
        let mut next = self.clone();
        next.remove(index);
        next
    }

    /// Flips membership of one item.
    pub fn toggled(&self, index: usize) -> Self {
        if self.contains(index) {
            self.without(index)
        } else {
            self.with(index)
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Member indices, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.width, other.width, "states over different domains");
        KnowledgeState {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl Ord for KnowledgeState {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.width.cmp(&other.width))
    }
}

impl PartialOrd for KnowledgeState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KnowledgeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

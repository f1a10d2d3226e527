//! Dense membership sets over the vertices or edges of a fixed graph.

use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vertices;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Edges;

/// Subset of `0..universe`. The marker says whether the indices are vertex
/// indices or edge ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet<K> {
    bits: Vec<bool>,
    len: usize,
    _kind: PhantomData<K>,
}

pub type VertexSet = ElementSet<Vertices>;
pub type EdgeSet = ElementSet<Edges>;

impl<K> ElementSet<K> {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: vec![false; universe],
            len: 0,
            _kind: PhantomData,
        }
    }

    pub fn full(universe: usize) -> Self {
        ElementSet {
            bits: vec![true; universe],
            len: universe,
            _kind: PhantomData,
        }
    }

    /// Duplicates are merged; an index outside the universe is an error.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Result<Self> {
        let mut set = Self::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::precondition(format!(
                    "element {i} outside universe of size {universe}"
                )));
            }
            set.insert(i);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.bits.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.get(i).copied().unwrap_or(false)
    }

    /// Returns `true` if `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        let slot = &mut self.bits[i];
        if *slot {
            false
        } else {
            *slot = true;
            self.len += 1;
            true
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe() == other.universe()
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.universe(), other.universe());
        for i in other.iter() {
            self.insert(i);
        }
    }
}

impl EdgeSet {
    /// Edge set of `g` from endpoint pairs in either orientation.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = EdgeSet::empty(g.edge_count());
        for (u, v) in pairs {
            let id = g
                .edge_id(u, v)
                .ok_or_else(|| Error::precondition(format!("({u}, {v}) is not an edge")))?;
            set.insert(id);
        }
        Ok(set)
    }

    pub fn pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.iter().map(|id| g.edge(id)).collect()
    }
}

impl<K> fmt::Debug for ElementSet<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

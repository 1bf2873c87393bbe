//! Nice solutions for all ρ-small connected sets.
//!
//! For a connected `S`, `Γ[S]` is the largest `q` such that `G[S]` has a
//! `P_q`-witness structure whose last bag contains every vertex of `S` with a
//! neighbor outside `S`. Sets are processed by increasing size; each set `S`
//! is extended by every connected `A ⊆ V∖S` containing `N(S)` that keeps
//! `S ∪ A` small, and `S ∪ A` inherits `Γ[S] + 1` with `A` as its new last bag.

use std::ops::ControlFlow;

use rustc_hash::FxHashMap;

use crate::enumerate::{enumerate_small_connected, for_each_extender};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::{Graph, VertexSet, WitnessStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaEntry {
    pub gamma: usize,
    /// Last bag of the best structure found; absent when `gamma == 1`.
    pub pred: Option<VertexSet>,
}

#[derive(Clone, Debug)]
pub struct GammaTable {
    rho: Fraction,
    keys: Vec<VertexSet>,
    entries: FxHashMap<VertexSet, GammaEntry>,
}

impl GammaTable {
    pub fn rho(&self) -> Fraction {
        self.rho
    }

    /// Keys by ascending size, ties by canonical encoding.
    pub fn keys(&self) -> &[VertexSet] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, s: VertexSet) -> Option<GammaEntry> {
        self.entries.get(&s).copied()
    }

    pub fn gamma(&self, s: VertexSet) -> Option<usize> {
        self.entries.get(&s).map(|e| e.gamma)
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.entries.contains_key(&s)
    }

    /// `(set, entry)` pairs in key order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, GammaEntry)> + '_ {
        self.keys.iter().map(move |&s| (s, self.entries[&s]))
    }
}

pub fn compute_gamma(g: &Graph, rho: Fraction) -> GammaTable {
    let keys = enumerate_small_connected(g, rho);
    let mut entries: FxHashMap<VertexSet, GammaEntry> = FxHashMap::default();
    entries.reserve(keys.len());
    for &s in &keys {
        entries.insert(s, GammaEntry { gamma: 1, pred: None });
    }
    let cap = rho.floor_of(g.n());
    for &s in &keys {
        let base = entries[&s].gamma;
        let _ = for_each_extender(g, s, cap - s.len(), |a, _| {
            // |N[S ∪ A]| = |S| + |A| + |N_{G-S}(A)| <= cap, so S ∪ A is a key
            let e = entries.get_mut(&(s | a)).expect("extension of a key is a key");
            if base + 1 > e.gamma {
                e.gamma = base + 1;
                e.pred = Some(a);
            }
            ControlFlow::Continue(())
        });
    }
    GammaTable { rho, keys, entries }
}

/// Witness structure of `G[s]` achieving `Γ[s]`, with the boundary of `s`
/// inside the last bag.
pub fn reconstruct(table: &GammaTable, s: VertexSet) -> Result<WitnessStructure> {
    let mut parts = Vec::new();
    let mut cur = s;
    loop {
        let e = table.get(cur).ok_or(Error::KeyAbsent)?;
        match e.pred {
            Some(a) => {
                parts.push(a);
                cur -= a;
            }
            None => {
                parts.push(cur);
                break;
            }
        }
    }
    parts.reverse();
    Ok(WitnessStructure::new(parts))
}

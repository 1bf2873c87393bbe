//! Connected-set enumeration by frontier branching.
//!
//! Every enumerator here grows a connected set `A` inside a domain `D`. At each
//! node the smallest frontier vertex (a domain neighbor of `A` not yet decided)
//! is either added to `A` or excluded for the rest of the branch. A leaf is
//! reached once the frontier is empty, so each connected set containing the
//! seed and avoiding the initially excluded vertices is produced exactly once.
//! Closed-neighborhood size `|A| + |N_D(A)|` only grows along a branch, which
//! makes it a sound pruning bound.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::{Graph, VertexSet};

/// Parameters for [`enumerate_extenders`]: connected `A ⊆ V∖base` with
/// `N(base) ⊆ A`, `|A| = a` and `|N_{G-base}(A)| = b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtenderQuery {
    pub base: VertexSet,
    pub a: usize,
    pub b: usize,
}

pub(crate) struct Grower<'g, F> {
    g: &'g Graph,
    domain: VertexSet,
    required: VertexSet,
    max_closed: usize,
    visit: F,
}

impl<'g, F> Grower<'g, F>
where
    F: FnMut(VertexSet, VertexSet) -> ControlFlow<()>,
{
    /// `visit(A, N_D(A))` is called for each connected `A ⊆ domain` grown from
    /// `seed` that avoids `excluded`, contains `required`, and fits the budgets.
    pub(crate) fn new(g: &'g Graph, domain: VertexSet, visit: F) -> Self {
        Grower {
            g,
            domain,
            required: VertexSet::EMPTY,
            max_closed: usize::MAX,
            visit,
        }
    }

    pub(crate) fn required(mut self, required: VertexSet) -> Self {
        self.required = required;
        self
    }

    pub(crate) fn max_closed(mut self, k: usize) -> Self {
        self.max_closed = k;
        self
    }

    pub(crate) fn run(&mut self, seed: usize, excluded: VertexSet) -> ControlFlow<()> {
        debug_assert!(self.domain.contains(seed) && !excluded.contains(seed));
        if excluded.intersects(self.required) {
            return ControlFlow::Continue(());
        }
        let a = VertexSet::singleton(seed);
        let nbr = self.g.adj(seed) & self.domain;
        self.grow(a, excluded, nbr)
    }

    fn grow(&mut self, a: VertexSet, excluded: VertexSet, nbr: VertexSet) -> ControlFlow<()> {
        if a.len() + nbr.len() > self.max_closed {
            return ControlFlow::Continue(());
        }
        let frontier = nbr - excluded;
        let Some(v) = frontier.min() else {
            if self.required.is_subset(a) {
                return (self.visit)(a, nbr);
            }
            return ControlFlow::Continue(());
        };
        let a2 = a.with(v);
        let nbr2 = (nbr | self.g.adj(v) & self.domain) - a2;
        self.grow(a2, excluded, nbr2)?;
        if !self.required.contains(v) {
            self.grow(a, excluded.with(v), nbr)?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit(A, N_D(A))` for every connected `A ⊆ domain` with
/// `|A| + |N_D(A)| <= max_closed`, each exactly once.
pub(crate) fn for_each_connected_in<F>(g: &Graph, domain: VertexSet, max_closed: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet, VertexSet) -> ControlFlow<()>,
{
    let mut grower = Grower::new(g, domain, &mut visit).max_closed(max_closed);
    for v in domain {
        // sets whose minimum is v
        grower.run(v, domain & VertexSet::full(v))?;
    }
    ControlFlow::Continue(())
}

/// Non-empty connected sets `S` with `|N[S]| <= ρn`, sorted by size and then
/// by canonical encoding.
pub fn enumerate_small_connected(g: &Graph, rho: Fraction) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_connected_in(g, g.vertices(), rho.floor_of(g.n()), |a, _| {
        out.push(a);
        ControlFlow::Continue(())
    });
    out.sort_unstable_by_key(|s| (s.len(), s.bits()));
    out
}

/// Streams every connected `A ⊆ V∖base` with `N(base) ⊆ A` and
/// `|A| + |N_{G-base}(A)| <= budget` as `visit(A, N_{G-base}(A))`.
///
/// Nothing is produced when `N(base)` is empty.
pub fn for_each_extender<F>(g: &Graph, base: VertexSet, budget: usize, visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet, VertexSet) -> ControlFlow<()>,
{
    let q = g.neighborhood(base);
    let Some(seed) = q.min() else {
        return ControlFlow::Continue(());
    };
    let domain = g.vertices() - base;
    Grower::new(g, domain, visit)
        .required(q)
        .max_closed(budget)
        .run(seed, VertexSet::EMPTY)
}

/// Extender sets for `q`, sorted by canonical encoding.
pub fn enumerate_extenders(g: &Graph, q: ExtenderQuery) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_extender(g, q.base, q.a + q.b, |a, nbr| {
        if a.len() == q.a && nbr.len() == q.b {
            out.push(a);
        }
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

/// `1 / (μ^μ (1-μ)^(1-μ))`, the base of the exponential bound on the number
/// of subsets of size at most `μn`. Reporting only.
pub fn g_of(mu: Fraction) -> Result<f64> {
    if mu.is_zero() || mu.complement().is_zero() {
        return Err(Error::DomainError(mu.to_string()));
    }
    let m = mu.to_f64();
    Ok(1.0 / (m.powf(m) * (1.0 - m).powf(1.0 - m)))
}

/// Calls `visit` on every subset of `universe` with at most `k` members,
/// grouped by ascending size.
pub fn for_each_subset_of_size_at_most<F>(universe: VertexSet, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let elems = universe.to_vec();
    for size in 0..=k.min(elems.len()) {
        combinations(&elems, size, 0, VertexSet::EMPTY, &mut visit)?;
    }
    ControlFlow::Continue(())
}

fn combinations<F>(elems: &[usize], left: usize, from: usize, acc: VertexSet, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    if left == 0 {
        return visit(acc);
    }
    for i in from..=elems.len() - left {
        combinations(elems, left - 1, i + 1, acc.with(elems[i]), visit)?;
    }
    ControlFlow::Continue(())
}

/// Every subset of `universe` with at most `μ|universe|` members, `∅` included.
pub fn enumerate_subsets_at_most(universe: VertexSet, mu: Fraction) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_subset_of_size_at_most(universe, mu.floor_of(universe.len()), |s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out
}

//! The four shape-restricted Path Contraction searches.
//!
//! Each returns the best `t` it can certify together with a witness structure
//! of that length.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::dcs::{solve_2dcs_in, solve_3dcs_in};
use crate::enumerate::for_each_subset_of_size_at_most;
use crate::eppc::{compute_gamma, reconstruct, GammaTable};
use crate::error::Error;
use crate::fraction::Fraction;
use crate::graph::{Graph, VertexSet, WitnessStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subroutine {
    Soepc,
    Bpc,
    Tdcpc,
    Nsoepc,
}

impl Subroutine {
    /// Fixed evaluation and tie-break order.
    pub const ALL: [Subroutine; 4] = [
        Subroutine::Soepc,
        Subroutine::Bpc,
        Subroutine::Tdcpc,
        Subroutine::Nsoepc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subroutine::Soepc => "soepc",
            Subroutine::Bpc => "bpc",
            Subroutine::Tdcpc => "tdcpc",
            Subroutine::Nsoepc => "nsoepc",
        }
    }

    pub fn run(self, g: &Graph, param: Fraction) -> SubroutineResult {
        match self {
            Subroutine::Soepc => soepc(g, param),
            Subroutine::Bpc => bpc(g, param),
            Subroutine::Tdcpc => tdcpc(g, param),
            Subroutine::Nsoepc => nsoepc(g, param),
        }
    }
}

impl fmt::Display for Subroutine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subroutine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Subroutine::ALL
            .into_iter()
            .find(|r| r.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown subroutine `{s}`"),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubroutineResult {
    pub subroutine: Subroutine,
    pub t: usize,
    pub witness: Option<WitnessStructure>,
}

impl SubroutineResult {
    fn new(subroutine: Subroutine, witness: WitnessStructure) -> Self {
        SubroutineResult {
            subroutine,
            t: witness.t(),
            witness: Some(witness),
        }
    }
}

/// Two-bag structure: one vertex whose removal leaves the rest connected
/// (the last vertex reached by a breadth-first search), and everything else.
pub fn two_bag_witness(g: &Graph) -> WitnessStructure {
    debug_assert!(g.n() >= 2 && g.is_connected());
    let mut seen = VertexSet::singleton(0);
    let mut frontier = seen;
    let mut last = 0;
    while !frontier.is_empty() {
        let next = g.neighbor_union(frontier) - seen;
        if let Some(v) = next.max() {
            last = v;
        }
        seen |= next;
        frontier = next;
    }
    let leaf = VertexSet::singleton(last);
    WitnessStructure::new(vec![g.vertices() - leaf, leaf])
}

/// Contracts the components of `G[s]` and `G - s` and returns them in path
/// order when the result is a path.
fn contracted_path(g: &Graph, s: VertexSet) -> Option<(Vec<VertexSet>, Vec<VertexSet>)> {
    let inside = g.components(s);
    let outside = g.components(g.vertices() - s);
    let mut parts = inside;
    let split = parts.len();
    parts.extend(outside);
    let order = g.quotient_unchecked(&parts).path_order()?;
    let outside = parts[split..].to_vec();
    Some((order.into_iter().map(|i| parts[i]).collect(), outside))
}

/// Witness structures whose odd or even bags hold at most `βn/2` vertices:
/// guess that side and contract.
pub fn soepc(g: &Graph, beta: Fraction) -> SubroutineResult {
    let n = g.n();
    let mut best = vec![g.vertices()];
    let _ = for_each_subset_of_size_at_most(g.vertices(), beta.half().floor_of(n), |s| {
        if let Some((order, _)) = contracted_path(g, s) {
            if order.len() > best.len() {
                best = order;
            }
        }
        ControlFlow::Continue(())
    });
    SubroutineResult::new(Subroutine::Soepc, WitnessStructure::new(best))
}

fn joined(table: &GammaTable, left: VertexSet, middle: &[VertexSet], right: VertexSet) -> WitnessStructure {
    let mut parts = reconstruct(table, left).expect("left side is a key").into_parts();
    parts.extend_from_slice(middle);
    let mut tail = reconstruct(table, right).expect("right side is a key").into_parts();
    tail.reverse();
    parts.extend(tail);
    WitnessStructure::new(parts)
}

/// Witness structures that split into a prefix and suffix whose closed
/// neighborhoods both have at most `αn` vertices.
pub fn bpc(g: &Graph, alpha: Fraction) -> SubroutineResult {
    let table = compute_gamma(g, alpha);
    let all = g.vertices();
    let mut best: Option<(usize, VertexSet)> = None;
    for (s, e) in table.iter() {
        let rest = all - s;
        if let Some(other) = table.gamma(rest) {
            let t = e.gamma + other;
            if best.is_none_or(|(b, _)| t > b) {
                best = Some((t, s));
            }
        }
    }
    let witness = match best {
        Some((_, s)) => joined(&table, s, &[], all - s),
        None => WitnessStructure::new(vec![all]),
    };
    SubroutineResult::new(Subroutine::Bpc, witness)
}

/// Witness structures with two consecutive bags covering at least `γn`
/// vertices: guess the rest `S`, read both flanks from the table, and split
/// `V ∖ S` into the two heavy bags.
pub fn tdcpc(g: &Graph, gamma: Fraction) -> SubroutineResult {
    let n = g.n();
    let all = g.vertices();
    let bound = gamma.half().complement();
    let mut table: Option<GammaTable> = None;
    let mut best: Option<WitnessStructure> = None;
    let _ = for_each_subset_of_size_at_most(all, gamma.complement().floor_of(n), |s| {
        if g.component_count_capped(s, 2) != 2 {
            return ControlFlow::Continue(());
        }
        let comps = g.components(s);
        let (s1, s2) = (comps[0], comps[1]);
        if !bound.admits(g.closed_neighborhood(s1).len(), n) || !bound.admits(g.closed_neighborhood(s2).len(), n) {
            return ControlFlow::Continue(());
        }
        let (z1, z2) = (g.neighborhood(s1), g.neighborhood(s2));
        if z1.intersects(z2) {
            return ControlFlow::Continue(());
        }
        let table = table.get_or_insert_with(|| compute_gamma(g, bound));
        let t = table.gamma(s1).expect("small component") + table.gamma(s2).expect("small component") + 2;
        if best.as_ref().is_some_and(|b| b.t() >= t) {
            return ControlFlow::Continue(());
        }
        if let Some(b) = solve_2dcs_in(g, all - s, z1, z2) {
            best = Some(joined(table, s1, &[b.v1, b.v2], s2));
        }
        ControlFlow::Continue(())
    });
    let witness = best.unwrap_or_else(|| two_bag_witness(g));
    SubroutineResult::new(Subroutine::Tdcpc, witness)
}

/// Witness structures where, apart from one interior bag `W_i`, the bags of
/// the same parity as `W_i` hold at most `εn` vertices: guess those bags as
/// `S`, contract, and split the component holding `W_i` three ways.
///
/// A component with no neighboring part of `S` (only when `S` is empty) has
/// both terminal sets guessed, which is how three-bag structures are found.
pub fn nsoepc(g: &Graph, eps: Fraction) -> SubroutineResult {
    let n = g.n();
    let all = g.vertices();
    let mut best: Option<WitnessStructure> = None;
    let _ = for_each_subset_of_size_at_most(all, eps.floor_of(n), |s| {
        if s == all {
            return ControlFlow::Continue(());
        }
        let Some((order, outside)) = contracted_path(g, s) else {
            return ControlFlow::Continue(());
        };
        let t = order.len() + 2;
        if best.as_ref().is_some_and(|b| b.t() >= t) {
            return ControlFlow::Continue(());
        }
        for &c_star in &outside {
            let pos = order.iter().position(|&p| p == c_star).expect("component is a bag");
            let flank = |i: Option<usize>| i.and_then(|i| order.get(i)).copied();
            let before = flank(pos.checked_sub(1));
            let after = flank(Some(pos + 1));
            // C1 is the neighboring S-component with the smaller minimum
            let (c1, c2, c1_before) = match (before, after) {
                (Some(b), Some(a)) if a.min() < b.min() => (Some(a), Some(b), false),
                (Some(b), a) => (Some(b), a, true),
                (None, a) => (a, None, false),
            };
            let z = |c: Option<VertexSet>| c.map_or(VertexSet::EMPTY, |c| g.neighborhood(c) & c_star);
            if let Some(tri) = solve_3dcs_in(g, c_star, z(c1), z(c2)) {
                let split = if c1_before {
                    [tri.v1, tri.u, tri.v2]
                } else {
                    [tri.v2, tri.u, tri.v1]
                };
                let mut parts = order[..pos].to_vec();
                parts.extend_from_slice(&split);
                parts.extend_from_slice(&order[pos + 1..]);
                best = Some(WitnessStructure::new(parts));
                break;
            }
        }
        ControlFlow::Continue(())
    });
    let witness = best.unwrap_or_else(|| two_bag_witness(g));
    SubroutineResult::new(Subroutine::Nsoepc, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    fn frac(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn certified(g: &Graph, r: &SubroutineResult) -> usize {
        let w = r.witness.as_ref().unwrap();
        assert!(w.check(g).is_ok(), "{:?} {:?}", r.subroutine, w);
        assert_eq!(w.t(), r.t);
        r.t
    }

    #[test]
    fn soepc_examples() {
        assert_eq!(certified(&path(4), &soepc(&path(4), Fraction::ONE)), 4);
        assert_eq!(certified(&path(4), &soepc(&path(4), frac(1, 2))), 3);
        assert_eq!(certified(&complete(4), &soepc(&complete(4), Fraction::ONE)), 2);
    }

    #[test]
    fn bpc_examples() {
        assert_eq!(certified(&path(4), &bpc(&path(4), Fraction::ONE)), 4);
        assert_eq!(certified(&complete(4), &bpc(&complete(4), Fraction::ONE)), 2);
        assert_eq!(certified(&complete(4), &bpc(&complete(4), frac(1, 2))), 1);
    }

    #[test]
    fn tdcpc_examples() {
        assert_eq!(certified(&path(4), &tdcpc(&path(4), frac(1, 2))), 4);
        assert_eq!(certified(&complete(4), &tdcpc(&complete(4), frac(1, 2))), 2);
        assert_eq!(certified(&path(4), &tdcpc(&path(4), Fraction::ONE)), 2);
    }

    #[test]
    fn nsoepc_examples() {
        assert_eq!(certified(&path(4), &nsoepc(&path(4), frac(1, 4))), 4);
        assert_eq!(certified(&complete(4), &nsoepc(&complete(4), frac(1, 4))), 2);
        assert_eq!(certified(&cycle(4), &nsoepc(&cycle(4), frac(1, 2))), 2);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(certified(&star, &nsoepc(&star, frac(1, 100))), 3);
    }

    #[test]
    fn two_bag_split_is_valid() {
        for g in [path(5), cycle(6), complete(5)] {
            let w = two_bag_witness(&g);
            assert_eq!(w.t(), 2);
            assert!(w.check(&g).is_ok());
        }
    }

    #[test]
    fn names_round_trip() {
        for r in Subroutine::ALL {
            assert_eq!(r.name().parse::<Subroutine>().unwrap(), r);
        }
        assert!("nope".parse::<Subroutine>().is_err());
    }
}

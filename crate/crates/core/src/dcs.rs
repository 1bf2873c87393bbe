//! Disjoint connected subgraph problems with two and three parts.
//!
//! Every solver has a crate-internal `*_in` form that works on the induced
//! subgraph `G[domain]` without relabeling; the public functions run on the
//! whole vertex set.

use std::ops::ControlFlow;

use crate::enumerate::{for_each_connected_in, Grower};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, WitnessStructure};

/// `(V_1, V_2)` with both sides connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl Bipartition {
    pub fn is_solution(&self, g: &Graph, z1: VertexSet, z2: VertexSet) -> bool {
        self.is_solution_in(g, g.vertices(), z1, z2)
    }

    pub(crate) fn is_solution_in(&self, g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> bool {
        !self.v1.intersects(self.v2)
            && self.v1 | self.v2 == domain
            && z1.is_subset(self.v1)
            && z2.is_subset(self.v2)
            && g.is_connected_set(self.v1)
            && g.is_connected_set(self.v2)
    }
}

/// `(V_1, U, V_2)` where `U` is connected and `G - U` consists of exactly the
/// two components `G[V_1]` and `G[V_2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriPartition {
    pub v1: VertexSet,
    pub u: VertexSet,
    pub v2: VertexSet,
}

impl TriPartition {
    pub fn is_solution(&self, g: &Graph, z1: VertexSet, z2: VertexSet) -> bool {
        self.is_solution_in(g, g.vertices(), z1, z2)
    }

    pub(crate) fn is_solution_in(&self, g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> bool {
        let TriPartition { v1, u, v2 } = *self;
        !v1.intersects(u)
            && !v1.intersects(v2)
            && !u.intersects(v2)
            && v1 | u | v2 == domain
            && z1.is_subset(v1)
            && z2.is_subset(v2)
            && g.is_connected_set(v1)
            && g.is_connected_set(u)
            && g.is_connected_set(v2)
            && !g.sets_adjacent(v1, v2)
    }

    pub fn reversed(&self) -> TriPartition {
        TriPartition {
            v1: self.v2,
            u: self.u,
            v2: self.v1,
        }
    }
}

fn check_disjoint(z1: VertexSet, z2: VertexSet) -> Result<()> {
    if z1.intersects(z2) {
        return Err(Error::TerminalsOverlap);
    }
    Ok(())
}

fn check_terminals(z1: VertexSet, z2: VertexSet) -> Result<()> {
    check_disjoint(z1, z2)?;
    if z1.is_empty() || z2.is_empty() {
        return Err(Error::EmptyTerminal);
    }
    Ok(())
}

/// Partition into connected `V_1 ⊇ z1` and `V_2 ⊇ z2`, if one exists.
pub fn solve_2dcs(g: &Graph, z1: VertexSet, z2: VertexSet) -> Result<Option<Bipartition>> {
    check_terminals(z1, z2)?;
    Ok(solve_2dcs_in(g, g.vertices(), z1, z2))
}

pub(crate) fn solve_2dcs_in(g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> Option<Bipartition> {
    let seed = z1.min()?;
    let mut found = None;
    let _ = Grower::new(g, domain, |a: VertexSet, _| {
        let rest = domain - a;
        if !rest.is_empty() && g.is_connected_set(rest) {
            found = Some(Bipartition { v1: a, v2: rest });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })
    .required(z1)
    .run(seed, z2);
    debug_assert!(found.is_none_or(|b| b.is_solution_in(g, domain, z1, z2)));
    found
}

/// Whether removing `v` from `G[within]` splits `z` across components.
fn is_separator(g: &Graph, within: VertexSet, z: VertexSet, v: usize) -> bool {
    let rest = within.without(v);
    let zs = z - VertexSet::singleton(v);
    match zs.min() {
        Some(first) => !zs.is_subset(g.component_of(rest, first)),
        None => false,
    }
}

/// A `z`-connector `s` is minimal iff dropping any single non-terminal
/// disconnects the terminals.
fn is_minimal_connector(g: &Graph, s: VertexSet, z: VertexSet) -> bool {
    (s - z).iter().all(|v| is_separator(g, s, z, v))
}

pub(crate) fn for_each_minimal_connector_in<F>(
    g: &Graph,
    domain: VertexSet,
    z: VertexSet,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let Some(seed) = z.min() else {
        return ControlFlow::Continue(());
    };
    Grower::new(g, domain, |s: VertexSet, _| {
        if is_minimal_connector(g, s, z) {
            visit(s)?;
        }
        ControlFlow::Continue(())
    })
    .required(z)
    .run(seed, VertexSet::EMPTY)
}

/// All minimal `z`-connectors, sorted by canonical encoding.
pub fn enumerate_minimal_connectors(g: &Graph, z: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_minimal_connector_in(g, g.vertices(), z, |s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

fn movable_vertex(g: &Graph, side: VertexSet, z: VertexSet, u: VertexSet) -> Option<usize> {
    let touching = (side - z) & g.neighborhood(u);
    touching.iter().find(|&v| !is_separator(g, side, z, v))
}

/// Migrates non-separating boundary vertices (with whatever they strand) into
/// `U` until none remain. Side 1 is scanned before side 2.
pub fn make_immovable(g: &Graph, sol: TriPartition, z1: VertexSet, z2: VertexSet) -> Result<TriPartition> {
    check_terminals(z1, z2)?;
    if !sol.is_solution(g, z1, z2) {
        return Err(Error::InvalidSolution);
    }
    let mut cur = sol;
    loop {
        if let Some(v) = movable_vertex(g, cur.v1, z1, cur.u) {
            let keep = g.component_of(cur.v1.without(v), z1.min().unwrap());
            cur.u |= cur.v1 - keep;
            cur.v1 = keep;
        } else if let Some(v) = movable_vertex(g, cur.v2, z2, cur.u) {
            let keep = g.component_of(cur.v2.without(v), z2.min().unwrap());
            cur.u |= cur.v2 - keep;
            cur.v2 = keep;
        } else {
            debug_assert!(cur.is_solution(g, z1, z2));
            return Ok(cur);
        }
    }
}

pub fn is_immovable(g: &Graph, sol: TriPartition, z1: VertexSet, z2: VertexSet) -> Result<bool> {
    check_terminals(z1, z2)?;
    if !sol.is_solution(g, z1, z2) {
        return Err(Error::InvalidSolution);
    }
    Ok(movable_vertex(g, sol.v1, z1, sol.u).is_none() && movable_vertex(g, sol.v2, z2, sol.u).is_none())
}

/// 3-DCS via minimal connectors of `Z_1 ∪ Z_2` in `G` plus one edge between
/// the sides.
pub fn solve_small_3dcs(g: &Graph, z1: VertexSet, z2: VertexSet) -> Result<Option<TriPartition>> {
    check_terminals(z1, z2)?;
    Ok(small_3dcs_in(g, g.vertices(), z1, z2))
}

pub(crate) fn small_3dcs_in(g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> Option<TriPartition> {
    if g.sets_adjacent(z1, z2) || !g.is_connected_set(domain) {
        return None;
    }
    let aux = g.with_edge(z1.min()?, z2.min()?);
    let mut found = None;
    let _ = for_each_minimal_connector_in(&aux, domain, z1 | z2, |s| {
        match assemble_from_connector(g, domain, s, z1, z2) {
            Some(sol) => {
                found = Some(sol);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    debug_assert!(found.is_none_or(|t| t.is_solution_in(g, domain, z1, z2)));
    found
}

/// Accepts a connector whose two halves leave exactly one component of
/// `G - S` touching both, and builds the tri-partition around it.
fn assemble_from_connector(
    g: &Graph,
    domain: VertexSet,
    s: VertexSet,
    z1: VertexSet,
    z2: VertexSet,
) -> Option<TriPartition> {
    let s1 = g.component_of(s, z1.min()?);
    let s2 = s - s1;
    if !z1.is_subset(s1) || !z2.is_subset(s2) || !g.is_connected_set(s2) {
        return None;
    }
    let (n1, n2) = (g.neighborhood(s1), g.neighborhood(s2));
    let mut both = None;
    let (mut v1, mut v2) = (s1, s2);
    for c in g.components(domain - s) {
        match (n1.intersects(c), n2.intersects(c)) {
            (true, true) => {
                if both.replace(c).is_some() {
                    return None;
                }
            }
            (true, false) => v1 |= c,
            (false, true) => v2 |= c,
            (false, false) => return None,
        }
    }
    Some(TriPartition { v1, u: both?, v2 })
}

/// 3-DCS with possibly empty terminal sets; an empty side is replaced by
/// every possible single-vertex guess.
pub fn solve_3dcs(g: &Graph, z1: VertexSet, z2: VertexSet) -> Result<Option<TriPartition>> {
    check_disjoint(z1, z2)?;
    Ok(solve_3dcs_in(g, g.vertices(), z1, z2))
}

pub(crate) fn solve_3dcs_in(g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> Option<TriPartition> {
    if !g.is_connected_set(domain) || !z1.is_subset(domain) || !z2.is_subset(domain) {
        return None;
    }
    match (z1.is_empty(), z2.is_empty()) {
        (false, false) => solve_3dcs_terminals(g, domain, z1, z2),
        (false, true) => (domain - z1)
            .iter()
            .find_map(|y| solve_3dcs_terminals(g, domain, z1, VertexSet::singleton(y))),
        (true, false) => (domain - z2)
            .iter()
            .find_map(|x| solve_3dcs_terminals(g, domain, VertexSet::singleton(x), z2)),
        (true, true) => {
            // (V_1, U, V_2) and (V_2, U, V_1) are both solutions, so x < y suffices
            domain.iter().find_map(|x| {
                (domain - VertexSet::full(x + 1))
                    .iter()
                    .find_map(|y| solve_3dcs_terminals(g, domain, VertexSet::singleton(x), VertexSet::singleton(y)))
            })
        }
    }
}

/// Terminal count at most 0.092 times the domain size selects the connector
/// route.
fn terminals_are_small(z: VertexSet, domain: VertexSet) -> bool {
    z.len() * 1000 <= 92 * domain.len()
}

fn solve_3dcs_terminals(g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> Option<TriPartition> {
    if terminals_are_small(z1 | z2, domain) {
        small_3dcs_in(g, domain, z1, z2)
    } else {
        separator_3dcs_in(g, domain, z1, z2)
    }
}

/// Tries every connected `U ⊆ domain ∖ (Z_1 ∪ Z_2)`.
pub(crate) fn separator_3dcs_in(g: &Graph, domain: VertexSet, z1: VertexSet, z2: VertexSet) -> Option<TriPartition> {
    if g.sets_adjacent(z1, z2) {
        return None;
    }
    let first = z1.min()?;
    let mut found = None;
    let _ = for_each_connected_in(g, domain - (z1 | z2), usize::MAX, |u, _| {
        let rest = domain - u;
        let v1 = g.component_of(rest, first);
        let v2 = rest - v1;
        if z1.is_subset(v1) && z2.is_subset(v2) && g.is_connected_set(v2) {
            found = Some(TriPartition { v1, u, v2 });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// A `P_5`-witness structure with singleton end bags, if one exists.
pub fn p5_witness(g: &Graph) -> Option<WitnessStructure> {
    let n = g.n();
    if n < 5 || !g.is_connected() {
        return None;
    }
    let all = g.vertices();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            let (nx, ny) = (g.adj(x), g.adj(y));
            if nx.intersects(ny) {
                continue;
            }
            let domain = all.without(x).without(y);
            if let Some(t) = solve_3dcs_in(g, domain, nx, ny) {
                let parts = vec![VertexSet::singleton(x), t.v1, t.u, t.v2, VertexSet::singleton(y)];
                return Some(WitnessStructure::new(parts));
            }
        }
    }
    None
}

/// Whether `g` contracts to the path on five vertices.
pub fn p5_contract(g: &Graph) -> bool {
    p5_witness(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, path, set};

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    #[test]
    fn two_dcs_examples() {
        let p3 = path(3);
        let b = solve_2dcs(&p3, set(&[0]), set(&[2])).unwrap().unwrap();
        assert!(b.is_solution(&p3, set(&[0]), set(&[2])));
        assert_eq!(solve_2dcs(&p3, set(&[0, 2]), set(&[1])).unwrap(), None);
        let k3 = complete(3);
        let b = solve_2dcs(&k3, set(&[0]), set(&[1])).unwrap().unwrap();
        assert!(b.is_solution(&k3, set(&[0]), set(&[1])));
        assert_eq!(solve_2dcs(&k3, set(&[0]), set(&[0, 1])), Err(Error::TerminalsOverlap));
        assert_eq!(solve_2dcs(&k3, VertexSet::EMPTY, set(&[1])), Err(Error::EmptyTerminal));
    }

    #[test]
    fn minimal_connector_examples() {
        let p4 = path(4);
        assert_eq!(enumerate_minimal_connectors(&p4, set(&[0, 3])), vec![p4.vertices()]);
        assert_eq!(
            enumerate_minimal_connectors(&star(3), set(&[1, 2])),
            vec![set(&[0, 1, 2])]
        );
        assert_eq!(enumerate_minimal_connectors(&p4, set(&[2])), vec![set(&[2])]);
        // both routes around a 4-cycle are minimal
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            enumerate_minimal_connectors(&c4, set(&[0, 2])),
            vec![set(&[0, 1, 2]), set(&[0, 2, 3])]
        );
    }

    #[test]
    fn immovable_examples() {
        let p5 = path(5);
        let (z1, z2) = (set(&[0]), set(&[4]));
        let sol = TriPartition {
            v1: set(&[0, 1]),
            u: set(&[2]),
            v2: set(&[3, 4]),
        };
        assert_eq!(is_immovable(&p5, sol, z1, z2), Ok(false));
        let fixed = make_immovable(&p5, sol, z1, z2).unwrap();
        assert_eq!(
            fixed,
            TriPartition {
                v1: set(&[0]),
                u: set(&[1, 2, 3]),
                v2: set(&[4])
            }
        );
        assert_eq!(is_immovable(&p5, fixed, z1, z2), Ok(true));
        assert_eq!(make_immovable(&p5, fixed, z1, z2), Ok(fixed));

        let p3 = path(3);
        let sol = TriPartition {
            v1: set(&[0]),
            u: set(&[1]),
            v2: set(&[2]),
        };
        assert_eq!(make_immovable(&p3, sol, set(&[0]), set(&[2])), Ok(sol));
        assert_eq!(is_immovable(&p3, sol, set(&[0]), set(&[2])), Ok(true));

        let bad = TriPartition {
            v1: set(&[0, 1]),
            u: VertexSet::EMPTY,
            v2: set(&[2]),
        };
        assert_eq!(
            make_immovable(&p3, bad, set(&[0]), set(&[2])),
            Err(Error::InvalidSolution)
        );
    }

    #[test]
    fn small_three_dcs_examples() {
        let p5 = path(5);
        let t = solve_small_3dcs(&p5, set(&[0]), set(&[4])).unwrap().unwrap();
        assert!(t.is_solution(&p5, set(&[0]), set(&[4])));
        assert_eq!(solve_small_3dcs(&complete(3), set(&[0]), set(&[1])).unwrap(), None);
        assert_eq!(solve_small_3dcs(&p5, set(&[0]), set(&[1])).unwrap(), None);
    }

    #[test]
    fn three_dcs_examples() {
        let p5 = path(5);
        assert!(solve_3dcs(&p5, set(&[0]), set(&[4])).unwrap().is_some());
        let s = star(3);
        let t = solve_3dcs(&s, set(&[1]), set(&[2])).unwrap().unwrap();
        assert_eq!(
            t,
            TriPartition {
                v1: set(&[1]),
                u: set(&[0, 3]),
                v2: set(&[2])
            }
        );
        assert_eq!(solve_3dcs(&complete(4), set(&[0]), set(&[1])).unwrap(), None);
        // guessed terminals
        let t = solve_3dcs(&path(3), VertexSet::EMPTY, VertexSet::EMPTY)
            .unwrap()
            .unwrap();
        assert!(t.is_solution(&path(3), VertexSet::EMPTY, VertexSet::EMPTY));
        assert_eq!(solve_3dcs(&complete(4), set(&[0]), VertexSet::EMPTY).unwrap(), None);
    }

    #[test]
    fn routes_agree_on_paths() {
        for n in 3..30 {
            let g = path(n);
            let d = g.vertices();
            let (z1, z2) = (set(&[0]), set(&[n - 1]));
            assert!(small_3dcs_in(&g, d, z1, z2).is_some());
            assert!(separator_3dcs_in(&g, d, z1, z2).is_some());
        }
    }

    #[test]
    fn p5_examples() {
        assert!(p5_contract(&path(5)));
        assert!(p5_contract(&path(7)));
        assert!(!p5_contract(&complete(4)));
        assert!(!p5_contract(&star(6)));
        let w = p5_witness(&path(7)).unwrap();
        assert!(w.check(&path(7)).is_ok());
    }
}

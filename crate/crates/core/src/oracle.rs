//! Exhaustive referees for small graphs.
//!
//! Nothing here uses the enumeration, table or partition solvers; only the
//! graph primitives. Every witness structure `(W_1, ..., W_t)` of a connected
//! graph is recovered from the two-coloring "odd bags vs even bags" by
//! contracting monochromatic components, which is what the searches below
//! iterate over.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::{Graph, VertexSet, WitnessStructure};

/// Largest vertex count accepted by [`connected_graphs`].
pub const MAX_GENERATED_VERTICES: usize = 7;

/// Members of `domain` selected by the low bits of `mask`, in ascending order.
fn spread(domain: &[usize], mask: u64) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    for (i, &v) in domain.iter().enumerate() {
        if mask >> i & 1 == 1 {
            s.insert(v);
        }
    }
    s
}

/// Orders `parts` along a path if their adjacency pattern forms one.
fn path_arrangement(g: &Graph, parts: &[VertexSet]) -> Option<Vec<VertexSet>> {
    let k = parts.len();
    if k == 1 {
        return Some(parts.to_vec());
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut edges = 0;
    for i in 0..k {
        for j in i + 1..k {
            if g.sets_adjacent(parts[i], parts[j]) {
                nbrs[i].push(j);
                nbrs[j].push(i);
                edges += 1;
                if nbrs[i].len() > 2 || nbrs[j].len() > 2 || edges >= k {
                    return None;
                }
            }
        }
    }
    let start = (0..k).find(|&i| nbrs[i].len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = nbrs[cur].iter().find(|&&w| w != prev) {
        prev = cur;
        cur = next;
        order.push(cur);
    }
    (order.len() == k).then(|| order.into_iter().map(|i| parts[i]).collect())
}

/// Visits every witness structure of `G[domain]` once per orientation.
fn for_each_structure<F>(g: &Graph, domain: VertexSet, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[VertexSet]) -> ControlFlow<()>,
{
    let verts = domain.to_vec();
    if verts.is_empty() {
        return ControlFlow::Continue(());
    }
    assert!(verts.len() <= 40, "exhaustive search over more than 40 vertices");
    // the first vertex is always in the first color class
    for mask in 0..1u64 << (verts.len() - 1) {
        let red = spread(&verts[1..], mask);
        let blue = domain - red;
        let mut parts = g.components(red);
        parts.extend(g.components(blue));
        if let Some(order) = path_arrangement(g, &parts) {
            visit(&order)?;
            if order.len() > 1 {
                let rev: Vec<VertexSet> = order.iter().rev().copied().collect();
                visit(&rev)?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// All witness structures of `g`, each orientation listed separately.
pub fn all_witness_structures(g: &Graph) -> Vec<WitnessStructure> {
    let mut out = Vec::new();
    let _ = for_each_structure(g, g.vertices(), |parts| {
        out.push(WitnessStructure::new(parts.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Largest `t` with `g` contractible to `P_t`, by trying every two-coloring.
pub fn oracle_path_contraction(g: &Graph) -> Result<(usize, WitnessStructure)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<Vec<VertexSet>> = None;
    let _ = for_each_structure(g, g.vertices(), |parts| {
        if best.as_ref().is_none_or(|b| parts.len() > b.len()) {
            best = Some(parts.to_vec());
        }
        ControlFlow::Continue(())
    });
    let parts = best.expect("a connected graph has the one-bag structure");
    Ok((parts.len(), WitnessStructure::new(parts)))
}

/// Largest `q` such that `G[s]` has a `P_q`-witness structure whose last bag
/// holds every member of `s` with a neighbor outside `s`.
pub fn oracle_nice_solution(g: &Graph, s: VertexSet) -> Result<usize> {
    if !g.is_connected_set(s) {
        return Err(Error::NotConnected);
    }
    let phi = g.boundary(s);
    let mut best = 0;
    let _ = for_each_structure(g, s, |parts| {
        if parts.len() > best && phi.is_subset(parts[parts.len() - 1]) {
            best = parts.len();
        }
        ControlFlow::Continue(())
    });
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcsParts {
    Two,
    Three,
}

/// Visits `(V_1, U, V_2)` for every valid partition; `U` is empty for
/// [`DcsParts::Two`].
pub fn for_each_dcs_solution<F>(g: &Graph, parts: DcsParts, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet, VertexSet, VertexSet) -> ControlFlow<()>,
{
    let n = g.n();
    let all = g.vertices();
    match parts {
        DcsParts::Two => {
            assert!(n <= 40);
            for mask in 0..1u64 << n {
                let v1 = VertexSet::from_bits(mask as u128);
                let v2 = all - v1;
                if g.is_connected_set(v1) && g.is_connected_set(v2) {
                    visit(v1, VertexSet::EMPTY, v2)?;
                }
            }
        }
        DcsParts::Three => {
            assert!(n <= 20);
            let total = 3u64.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let (mut v1, mut u, mut v2) = (VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
                for v in 0..n {
                    match c % 3 {
                        0 => v1.insert(v),
                        1 => u.insert(v),
                        _ => v2.insert(v),
                    }
                    c /= 3;
                }
                if g.is_connected_set(v1) && g.is_connected_set(u) && g.is_connected_set(v2) && !g.sets_adjacent(v1, v2)
                {
                    visit(v1, u, v2)?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// Exhaustive 2-DCS / 3-DCS verdict.
pub fn oracle_dcs(g: &Graph, z1: VertexSet, z2: VertexSet, parts: DcsParts) -> Result<bool> {
    if z1.intersects(z2) {
        return Err(Error::TerminalsOverlap);
    }
    let flow = for_each_dcs_solution(g, parts, |v1, _, v2| {
        if z1.is_subset(v1) && z2.is_subset(v2) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(flow.is_break())
}

/// Every labeled connected graph on `n` vertices, by filtering all edge
/// subsets.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_GENERATED_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "generated graph order",
            limit: MAX_GENERATED_VERTICES,
        });
    }
    if n == 0 {
        return Err(Error::Parse {
            line: 0,
            msg: "graph needs at least one vertex".into(),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    Ok((0..1u64 << m).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("pairs are in range");
        g.is_connected().then_some(g)
    }))
}

/// Witness-structure shapes targeted by the four subroutines, with their
/// threshold parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `|OS| <= βn/2` or `|ES| <= βn/2`.
    SmallOddEven(Fraction),
    /// Some split point with both sides' closed neighborhoods at most `αn`.
    Balanced(Fraction),
    /// Two interior consecutive bags covering at least `γn`, with both flanks
    /// non-empty and having closed neighborhoods at most `(1 - γ/2)n`.
    HeavyPair(Fraction),
    /// An interior bag `W_i` such that the same-parity bags other than `W_i`
    /// hold at most `εn` vertices.
    NearSmallOddEven(Fraction),
}

impl Shape {
    fn floor(&self) -> usize {
        match self {
            Shape::SmallOddEven(_) | Shape::Balanced(_) => 1,
            Shape::HeavyPair(_) | Shape::NearSmallOddEven(_) => 2,
        }
    }

    pub fn admits(&self, g: &Graph, parts: &[VertexSet]) -> bool {
        let n = g.n();
        let t = parts.len();
        let union = |r: std::ops::Range<usize>| parts[r].iter().fold(VertexSet::EMPTY, |a, &p| a | p);
        let parity = |start: usize| {
            parts
                .iter()
                .skip(start)
                .step_by(2)
                .fold(VertexSet::EMPTY, |a, &p| a | p)
        };
        match *self {
            Shape::SmallOddEven(beta) => {
                let half = beta.half();
                half.admits(parity(0).len(), n) || half.admits(parity(1).len(), n)
            }
            Shape::Balanced(alpha) => (1..t).any(|i| {
                alpha.admits(g.closed_neighborhood(union(0..i)).len(), n)
                    && alpha.admits(g.closed_neighborhood(union(i..t)).len(), n)
            }),
            Shape::HeavyPair(gamma) => {
                let bound = gamma.half().complement();
                t >= 3
                    && (1..t.saturating_sub(2)).any(|i| {
                        // bags i and i+1, zero-based
                        let heavy = (parts[i] | parts[i + 1]).len();
                        gamma.complement().admits(n - heavy, n)
                            && bound.admits(g.closed_neighborhood(union(0..i)).len(), n)
                            && bound.admits(g.closed_neighborhood(union(i + 2..t)).len(), n)
                    })
            }
            Shape::NearSmallOddEven(eps) => {
                t >= 3
                    && (1..t - 1).any(|i| {
                        let rest = parity(i % 2) - parts[i];
                        eps.admits(rest.len(), n)
                    })
            }
        }
    }
}

/// Best `t` over witness structures of the given shape, or the shape's floor
/// (1 for the first two, 2 for the others) if none qualifies.
pub fn oracle_shape_best(g: &Graph, shape: Shape) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = shape.floor();
    let _ = for_each_structure(g, g.vertices(), |parts| {
        if parts.len() > best && shape.admits(g, parts) {
            best = parts.len();
        }
        ControlFlow::Continue(())
    });
    Ok(best)
}

#![allow(dead_code)]

use std::collections::HashSet;

use pathcontract::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// G(n, p) conditioned on connectivity, by rejection.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn subsets_up_to(universe: VertexSet, k: usize) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::EMPTY];
    for v in universe {
        let grown: Vec<VertexSet> = out.iter().filter(|s| s.len() < k).map(|s| s.with(v)).collect();
        out.extend(grown);
    }
    out
}

/// Splits each color class by the multiset of neighbor colors until stable;
/// new colors are ranks of `(old color, sorted neighbor colors)`, so the
/// result does not depend on vertex labels.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    loop {
        let classes = colors.iter().collect::<HashSet<_>>().len();
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.adj(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        for v in 0..n {
            colors[v] = uniq.binary_search(&sigs[v]).unwrap();
        }
        if uniq.len() == classes {
            return;
        }
    }
}

fn code_of(g: &Graph, colors: &[usize]) -> u128 {
    let n = g.n();
    let mut code = 0u128;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            let u = colors.iter().position(|&c| c == i).unwrap();
            let v = colors.iter().position(|&c| c == j).unwrap();
            if g.has_edge(u, v) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn canon_search(g: &Graph, mut colors: Vec<usize>) -> u128 {
    refine(g, &mut colors);
    let n = g.n();
    let mut counts = vec![0; n];
    for &c in &colors {
        counts[c] += 1;
    }
    let Some(cell) = (0..n).find(|&c| counts[c] > 1) else {
        return code_of(g, &colors);
    };
    (0..n)
        .filter(|&v| colors[v] == cell)
        .map(|v| {
            let split: Vec<usize> = (0..n).map(|u| 2 * colors[u] + usize::from(u != v)).collect();
            canon_search(g, split)
        })
        .min()
        .unwrap()
}

/// Isomorphism-invariant code of a graph with at most 16 vertices.
pub fn canonical_code(g: &Graph) -> u128 {
    assert!(g.n() <= 16);
    canon_search(g, vec![0; g.n()])
}

/// One list of representatives per isomorphism class of connected graphs
/// for each size `0..=max` (index 0 is empty). Size `n` is grown from size
/// `n - 1` by adding a vertex; every connected graph has a vertex whose
/// removal keeps it connected.
pub fn connected_classes_up_to(max: usize) -> Vec<Vec<Graph>> {
    let mut all: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::new(1).unwrap()]];
    for n in 2..=max {
        let prev = &all[n - 1];
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for h in prev {
            for mask in 1..1u64 << (n - 1) {
                let mut g = Graph::from_edges(n, h.edges()).unwrap();
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, n - 1).unwrap();
                    }
                }
                if seen.insert(canonical_code(&g)) {
                    out.push(g);
                }
            }
        }
        all.push(out);
    }
    all
}

pub fn slow_tests_enabled() -> bool {
    std::env::var("PC_SLOW").is_ok_and(|v| !v.is_empty() && v != "0")
}

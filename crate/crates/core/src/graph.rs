//! Graphs on at most [`MAX_VERTICES`] vertices with bitset adjacency.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex capacity of [`VertexSet`] (two 64-bit words).
pub const MAX_VERTICES: usize = 128;

/// A set of vertices drawn from `0..MAX_VERTICES`.
///
/// The backing word doubles as the canonical encoding: two sets are equal iff
/// [`VertexSet::bits`] agree, and the derived `Ord` orders by that encoding.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

macro_rules! set_op {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Complement with respect to all [`MAX_VERTICES`] slots; intersect with
/// [`VertexSet::full`] to stay inside a graph.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                msg: "graph needs at least one vertex".into(),
            });
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; repeated edges collapse.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("edge {u} {v} out of range for n={n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: 0,
                msg: format!("self-loop at {u}"),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    /// Union of the neighbor sets of `s`, members of `s` included.
    #[inline]
    pub fn neighbor_union(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in s {
            acc |= self.adj[v];
        }
        acc
    }

    /// `N(s)`: vertices outside `s` adjacent to some member of `s`.
    #[inline]
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighbor_union(s) - s
    }

    /// `N[s] = s ∪ N(s)`.
    #[inline]
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.neighbor_union(s) | s
    }

    /// `Φ(s)`: members of `s` with a neighbor outside `s`.
    pub fn boundary(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| !self.adj[v].is_subset(s)).collect()
    }

    /// Whether some edge joins `a` and `b`.
    #[inline]
    pub fn sets_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        if a.len() <= b.len() {
            a.iter().any(|v| self.adj[v].intersects(b))
        } else {
            b.iter().any(|v| self.adj[v].intersects(a))
        }
    }

    /// Vertex set of the component of `G[s]` containing `v` (`v` must lie in `s`).
    pub fn component_of(&self, s: VertexSet, v: usize) -> VertexSet {
        debug_assert!(s.contains(v));
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self.neighbor_union(frontier) & (s - comp);
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Components of `G[s]`, ordered by their minimum member.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(rest, v);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// Number of components of `G[s]`, stopping early once `cap` is exceeded.
    pub fn component_count_capped(&self, s: VertexSet, cap: usize) -> usize {
        let mut rest = s;
        let mut k = 0;
        while let Some(v) = rest.min() {
            k += 1;
            if k > cap {
                break;
            }
            rest -= self.component_of(rest, v);
        }
        k
    }

    /// Whether `G[s]` is non-empty and connected.
    #[inline]
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            Some(v) => self.component_of(s, v) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Contracts each part to a single vertex; vertex `i` of the result is `parts[i]`.
    pub fn quotient(&self, parts: &[VertexSet]) -> Result<Graph> {
        let mut seen = VertexSet::EMPTY;
        for &p in parts {
            if p.is_empty() || seen.intersects(p) || !p.is_subset(self.vertices()) {
                return Err(Error::NotAPartition);
            }
            seen |= p;
        }
        if seen != self.vertices() {
            return Err(Error::NotAPartition);
        }
        if let Some(i) = parts.iter().position(|&p| !self.is_connected_set(p)) {
            return Err(Error::PartNotConnected { part: i });
        }
        Ok(self.quotient_unchecked(parts))
    }

    pub(crate) fn quotient_unchecked(&self, parts: &[VertexSet]) -> Graph {
        let mut owner = [0u8; MAX_VERTICES];
        for (i, p) in parts.iter().enumerate() {
            for v in p.iter() {
                owner[v] = i as u8;
            }
        }
        let mut q = Graph {
            adj: vec![VertexSet::EMPTY; parts.len()],
        };
        for (i, &p) in parts.iter().enumerate() {
            for v in self.neighborhood(p).iter() {
                let j = owner[v] as usize;
                q.adj[i].insert(j);
                q.adj[j].insert(i);
            }
        }
        q
    }

    /// `Some(t)` if the graph is isomorphic to the path `P_t`.
    pub fn as_path_length(&self) -> Option<usize> {
        self.path_order().map(|order| order.len())
    }

    /// Vertices in path order (starting from the smaller endpoint) if the
    /// graph is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.n();
        if n == 1 {
            return Some(vec![0]);
        }
        if self.adj.iter().any(|a| a.len() > 2 || a.is_empty()) || self.edge_count() != n - 1 {
            return None;
        }
        let start = (0..n).find(|&v| self.degree(v) == 1)?;
        let mut order = Vec::with_capacity(n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            let next = self.adj[cur].iter().find(|&w| w != prev);
            match next {
                Some(w) if order.len() < n => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        // n-1 edges plus a full walk means connected and acyclic
        (order.len() == n).then_some(order)
    }

    /// `G[s]` relabeled to `0..|s|`, with the map from new to old labels.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let old: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(old.len().max(1))?;
        if old.is_empty() {
            return Err(Error::NotConnected);
        }
        let mut new_of = [usize::MAX; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        for (i, &v) in old.iter().enumerate() {
            for w in (self.adj[v] & s).iter() {
                g.adj[i].insert(new_of[w]);
            }
        }
        Ok((g, old))
    }

    /// Copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g
    }

    /// Serializes in the text format accepted by [`Graph::from_str`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Header `n m`, then `m` lines `u v`. Lines starting with `#` and blank
    /// lines are skipped.
    fn from_str(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line: usize, msg: String| Error::Parse { line, msg };

        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n m`".into()))?;
        let nums = parse_pair(header).ok_or_else(|| err(hline, format!("bad header `{header}`")))?;
        let (n, m) = nums;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
            });
        }
        let mut g = Graph::new(n).map_err(|_| err(hline, "graph needs at least one vertex".into()))?;
        let mut count = 0;
        for (ln, l) in lines {
            count += 1;
            if count > m {
                return Err(err(ln, format!("more than {m} edge lines")));
            }
            let (u, v) = parse_pair(l).ok_or_else(|| err(ln, format!("bad edge line `{l}`")))?;
            if u == v {
                return Err(err(ln, format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(err(ln, format!("edge {u} {v} out of range for n={n}")));
            }
            g.add_edge(u, v)?;
        }
        if count < m {
            return Err(err(hline, format!("expected {m} edge lines, found {count}")));
        }
        Ok(g)
    }
}

fn parse_pair(l: &str) -> Option<(usize, usize)> {
    let mut it = l.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Why a candidate witness structure was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    NoParts,
    EmptyPart(usize),
    OutOfRange(usize),
    Overlap(usize),
    Uncovered,
    DisconnectedPart(usize),
    NonConsecutiveAdjacent(usize, usize),
    ConsecutiveNotAdjacent(usize),
}

impl WitnessViolation {
    /// Stable short code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            WitnessViolation::NoParts => "no-parts",
            WitnessViolation::EmptyPart(_) => "empty-part",
            WitnessViolation::OutOfRange(_) => "out-of-range",
            WitnessViolation::Overlap(_) => "overlap",
            WitnessViolation::Uncovered => "uncovered",
            WitnessViolation::DisconnectedPart(_) => "disconnected-part",
            WitnessViolation::NonConsecutiveAdjacent(..) => "non-consecutive-adjacent",
            WitnessViolation::ConsecutiveNotAdjacent(_) => "consecutive-not-adjacent",
        }
    }
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessViolation::NoParts => write!(f, "witness has no parts"),
            WitnessViolation::EmptyPart(i) => write!(f, "part {} is empty", i + 1),
            WitnessViolation::OutOfRange(i) => write!(f, "part {} leaves the vertex set", i + 1),
            WitnessViolation::Overlap(i) => write!(f, "part {} overlaps an earlier part", i + 1),
            WitnessViolation::Uncovered => write!(f, "parts do not cover every vertex"),
            WitnessViolation::DisconnectedPart(i) => write!(f, "part {} is not connected", i + 1),
            WitnessViolation::NonConsecutiveAdjacent(i, j) => {
                write!(f, "parts {} and {} are adjacent", i + 1, j + 1)
            }
            WitnessViolation::ConsecutiveNotAdjacent(i) => {
                write!(f, "parts {} and {} are not adjacent", i + 1, i + 2)
            }
        }
    }
}

/// Ordered partition `(W_1, ..., W_t)` certifying contraction to `P_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessStructure {
    parts: Vec<VertexSet>,
}

impl WitnessStructure {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        WitnessStructure { parts }
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    /// `OS`: union of `W_1, W_3, ...` (1-indexed).
    pub fn odd_set(&self) -> VertexSet {
        self.parts.iter().step_by(2).fold(VertexSet::EMPTY, |a, &p| a | p)
    }

    /// `ES`: union of `W_2, W_4, ...` (1-indexed).
    pub fn even_set(&self) -> VertexSet {
        self.parts
            .iter()
            .skip(1)
            .step_by(2)
            .fold(VertexSet::EMPTY, |a, &p| a | p)
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WitnessStructure { parts }
    }

    /// Checks every witness invariant against `g`.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), WitnessViolation> {
        self.check_within(g, g.vertices())
    }

    /// Checks the invariants against the induced subgraph `G[domain]`.
    pub fn check_within(&self, g: &Graph, domain: VertexSet) -> std::result::Result<(), WitnessViolation> {
        if self.parts.is_empty() {
            return Err(WitnessViolation::NoParts);
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &p) in self.parts.iter().enumerate() {
            if p.is_empty() {
                return Err(WitnessViolation::EmptyPart(i));
            }
            if !p.is_subset(domain) {
                return Err(WitnessViolation::OutOfRange(i));
            }
            if seen.intersects(p) {
                return Err(WitnessViolation::Overlap(i));
            }
            seen |= p;
        }
        if seen != domain {
            return Err(WitnessViolation::Uncovered);
        }
        for (i, &p) in self.parts.iter().enumerate() {
            if !g.is_connected_set(p) {
                return Err(WitnessViolation::DisconnectedPart(i));
            }
        }
        for (i, &p) in self.parts.iter().enumerate() {
            let nb = g.neighborhood(p) & domain;
            for (j, &q) in self.parts.iter().enumerate().skip(i + 1) {
                let adjacent = nb.intersects(q);
                if j == i + 1 && !adjacent {
                    return Err(WitnessViolation::ConsecutiveNotAdjacent(i));
                }
                if j > i + 1 && adjacent {
                    return Err(WitnessViolation::NonConsecutiveAdjacent(i, j));
                }
            }
        }
        Ok(())
    }
}

/// Whether `w` is a valid path witness structure of `g`.
pub fn verify_witness(g: &Graph, w: &WitnessStructure) -> bool {
    w.check(g).is_ok()
}

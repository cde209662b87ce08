//! Signed multigraphs.
//!
//! Vertices are `0..vertex_count`, edges are identified by their position in
//! the edge list. Loops (`u == v`) and parallel edges are allowed. Every
//! operation returns a new graph; values are never mutated after
//! construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge subsets are single machine words.
pub const MAX_EDGES: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn positive(u: usize, v: usize) -> Self {
        Edge::new(u, v, Sign::Positive)
    }

    pub fn negative(u: usize, v: usize) -> Self {
        Edge::new(u, v, Sign::Negative)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint at the given side (0 is `u`, 1 is `v`).
    pub fn end(&self, side: u8) -> usize {
        if side == 0 {
            self.u
        } else {
            self.v
        }
    }

    pub fn other_end(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A set of edge indices, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSubset(bits)
    }

    pub fn full(edge_count: usize) -> Self {
        debug_assert!(edge_count <= MAX_EDGES);
        EdgeSubset((1u64 << edge_count) - 1)
    }

    pub fn singleton(e: usize) -> Self {
        EdgeSubset(1u64 << e)
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(edges: I) -> Self {
        EdgeSubset(edges.into_iter().fold(0, |acc, e| acc | (1u64 << e)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        EdgeSubset(self.0 | (1u64 << e))
    }

    pub fn without(self, e: usize) -> Self {
        EdgeSubset(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, edge_count: usize) -> Self {
        EdgeSubset(!self.0 & EdgeSubset::full(edge_count).0)
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Every subset of `{0, .., edge_count - 1}`, in bitmask order.
    pub fn all(edge_count: usize) -> impl Iterator<Item = EdgeSubset> {
        (0..=EdgeSubset::full(edge_count).0).map(EdgeSubset)
    }
}

/// `k`, `k_b` and `k_u` of a spanning subgraph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComponentProfile {
    pub components: usize,
    pub balanced: usize,
    pub unbalanced: usize,
}

/// Connected components of a spanning subgraph together with a vertex
/// potential witnessing balance.
#[derive(Clone, Debug)]
pub struct Components {
    /// Dense component label per vertex.
    pub label: Vec<usize>,
    /// Per component: does it contain an unbalanced cycle?
    pub unbalanced: Vec<bool>,
    /// `potential[v]` satisfies `sigma(e) = s(u) s(v)` on every edge of a
    /// balanced component.
    pub potential: Vec<Sign>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.unbalanced.len()
    }

    pub fn profile(&self) -> ComponentProfile {
        let unbalanced = self.unbalanced.iter().filter(|&&u| u).count();
        ComponentProfile {
            components: self.count(),
            balanced: self.count() - unbalanced,
            unbalanced,
        }
    }

    /// Vertices of each component, in increasing order.
    pub fn vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); self.count()];
        for (v, &c) in self.label.iter().enumerate() {
            sets[c].push(v);
        }
        sets
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphRole {
    Bridge,
    Loop,
    Ordinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameRole {
    Coloop,
    Loop,
    Ordinary,
}

/// Role of an edge in the cycle matroid and in the signed-graphic matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeClass {
    pub graph_role: GraphRole,
    pub frame_role: FrameRole,
    pub circuit_path_edge: bool,
}

impl EdgeClass {
    /// The seven combinations that can occur in a signed graph.
    pub const ROWS: [EdgeClass; 7] = [
        EdgeClass::row(GraphRole::Ordinary, FrameRole::Ordinary, false),
        EdgeClass::row(GraphRole::Ordinary, FrameRole::Coloop, false),
        EdgeClass::row(GraphRole::Bridge, FrameRole::Ordinary, true),
        EdgeClass::row(GraphRole::Bridge, FrameRole::Coloop, false),
        EdgeClass::row(GraphRole::Loop, FrameRole::Ordinary, false),
        EdgeClass::row(GraphRole::Loop, FrameRole::Coloop, false),
        EdgeClass::row(GraphRole::Loop, FrameRole::Loop, false),
    ];

    const fn row(graph_role: GraphRole, frame_role: FrameRole, circuit_path_edge: bool) -> Self {
        EdgeClass { graph_role, frame_role, circuit_path_edge }
    }
}

/// Union-find with a parity bit per node, relative to its parent.
struct ParityForest {
    parent: Vec<usize>,
    negative: Vec<bool>,
    unbalanced: Vec<bool>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        ParityForest {
            parent: (0..n).collect(),
            negative: vec![false; n],
            unbalanced: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let mut root = x;
        let mut parity = false;
        while self.parent[root] != root {
            parity ^= self.negative[root];
            root = self.parent[root];
        }
        // path compression, rewriting parities relative to the root
        let mut cur = x;
        let mut cur_parity = parity;
        while self.parent[cur] != root && cur != root {
            let next = self.parent[cur];
            let next_parity = cur_parity ^ self.negative[cur];
            self.parent[cur] = root;
            self.negative[cur] = cur_parity;
            cur = next;
            cur_parity = next_parity;
        }
        (root, parity)
    }

    fn add_edge(&mut self, e: &Edge) {
        let negative = e.sign.is_negative();
        if e.is_loop() {
            if negative {
                let (r, _) = self.find(e.u);
                self.unbalanced[r] = true;
            }
            return;
        }
        let (ru, pu) = self.find(e.u);
        let (rv, pv) = self.find(e.v);
        if ru == rv {
            if pu ^ pv != negative {
                self.unbalanced[ru] = true;
            }
        } else {
            self.parent[ru] = rv;
            self.negative[ru] = pu ^ pv ^ negative;
            self.unbalanced[rv] |= self.unbalanced[ru];
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(edges.len()));
        }
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= vertex_count {
                    return Err(Error::InvalidVertex { vertex: x, vertex_count });
                }
            }
        }
        Ok(SignedGraph { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Self {
        SignedGraph { vertex_count, edges: Vec::new() }
    }

    /// A single vertex carrying `count` loops of the given sign.
    pub fn bouquet(count: usize, sign: Sign) -> Result<Self> {
        SignedGraph::new(1, vec![Edge::new(0, 0, sign); count])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::InvalidEdge { edge: e, edge_count: self.edges.len() })
    }

    pub fn full_set(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub fn components(&self, a: EdgeSubset) -> Components {
        let n = self.vertex_count;
        let mut forest = ParityForest::new(n);
        for e in a.iter() {
            forest.add_edge(&self.edges[e]);
        }
        let mut label = vec![usize::MAX; n];
        let mut potential = vec![Sign::Positive; n];
        let mut root_label = vec![usize::MAX; n];
        let mut unbalanced = Vec::new();
        for v in 0..n {
            let (r, p) = forest.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = unbalanced.len();
                unbalanced.push(forest.unbalanced[r]);
            }
            label[v] = root_label[r];
            potential[v] = if p { Sign::Negative } else { Sign::Positive };
        }
        Components { label, unbalanced, potential }
    }

    /// `k`, `k_b`, `k_u` of the spanning subgraph `(V, a)`.
    pub fn component_profile(&self, a: EdgeSubset) -> ComponentProfile {
        self.components(a).profile()
    }

    pub fn profile(&self) -> ComponentProfile {
        self.component_profile(self.full_set())
    }

    pub fn is_balanced(&self) -> bool {
        self.profile().unbalanced == 0
    }

    /// Rank of `a` in the cycle matroid: `|V| - k(V, a)`.
    pub fn cycle_rank(&self, a: EdgeSubset) -> usize {
        self.vertex_count - self.component_profile(a).components
    }

    /// Rank of `a` in the signed-graphic matroid: `|V| - k_b(V, a)`.
    pub fn frame_rank(&self, a: EdgeSubset) -> usize {
        self.vertex_count - self.component_profile(a).balanced
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            Err(Error::InvalidVertex { vertex: v, vertex_count: self.vertex_count })
        } else {
            Ok(())
        }
    }

    /// Negate the sign of every non-loop edge at `v`.
    pub fn switch(&self, v: usize) -> Result<SignedGraph> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if !e.is_loop() && (e.u == v || e.v == v) {
                    Edge { sign: e.sign.flip(), ..*e }
                } else {
                    *e
                }
            })
            .collect();
        Ok(SignedGraph { vertex_count: self.vertex_count, edges })
    }

    /// Switch at every vertex of `set` (in any order; switching commutes).
    pub fn switch_set(&self, set: &[usize]) -> Result<SignedGraph> {
        let mut g = self.clone();
        for &v in set {
            g = g.switch(v)?;
        }
        Ok(g)
    }

    pub fn delete(&self, e: usize) -> Result<SignedGraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(SignedGraph { vertex_count: self.vertex_count, edges })
    }

    /// Contract a positive edge. The larger endpoint is merged into the
    /// smaller one and vertices above it are renumbered down by one. A
    /// positive loop is deleted.
    pub fn contract(&self, e: usize) -> Result<SignedGraph> {
        let edge = *self.edge(e)?;
        if edge.sign.is_negative() {
            return Err(Error::NegativeContraction(e));
        }
        if edge.is_loop() {
            return self.delete(e);
        }
        let keep = edge.u.min(edge.v);
        let gone = edge.u.max(edge.v);
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, f)| Edge::new(relabel(f.u), relabel(f.v), f.sign))
            .collect();
        Ok(SignedGraph { vertex_count: self.vertex_count - 1, edges })
    }

    pub fn is_bridge(&self, e: usize) -> Result<bool> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        let rest = self.components(self.full_set().without(e));
        Ok(rest.label[edge.u] != rest.label[edge.v])
    }

    /// A bridge whose removal leaves both of its sides unbalanced.
    pub fn is_circuit_path_edge(&self, e: usize) -> Result<bool> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        let rest = self.components(self.full_set().without(e));
        let (cu, cv) = (rest.label[edge.u], rest.label[edge.v]);
        Ok(cu != cv && rest.unbalanced[cu] && rest.unbalanced[cv])
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeClass> {
        let edge = *self.edge(e)?;
        let graph_role = if edge.is_loop() {
            GraphRole::Loop
        } else if self.is_bridge(e)? {
            GraphRole::Bridge
        } else {
            GraphRole::Ordinary
        };
        let full = self.full_set();
        let frame_role = if self.frame_rank(EdgeSubset::singleton(e)) == 0 {
            FrameRole::Loop
        } else if self.frame_rank(full.without(e)) + 1 == self.frame_rank(full) {
            FrameRole::Coloop
        } else {
            FrameRole::Ordinary
        };
        Ok(EdgeClass { graph_role, frame_role, circuit_path_edge: self.is_circuit_path_edge(e)? })
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> Result<SignedGraph> {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::new(e.u + shift, e.v + shift, e.sign)));
        SignedGraph::new(self.vertex_count + other.vertex_count, edges)
    }

    /// Reorder edges: edge `i` of the result is edge `order[i]` of `self`.
    pub fn permute_edges(&self, order: &[usize]) -> Result<SignedGraph> {
        let mut seen = vec![false; self.edges.len()];
        if order.len() != self.edges.len() {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut edges = Vec::with_capacity(order.len());
        for &i in order {
            let e = *self.edge(i)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!("edge {i} repeated in permutation")));
            }
            edges.push(e);
        }
        Ok(SignedGraph { vertex_count: self.vertex_count, edges })
    }

    /// The subgraph induced on `vertices` (which should be a union of
    /// components), with vertices renumbered in the given order. Also
    /// returns the original index of every retained edge.
    pub fn induced(&self, vertices: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let mut map = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            map[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if map[e.u] != usize::MAX && map[e.v] != usize::MAX {
                edges.push(Edge::new(map[e.u], map[e.v], e.sign));
                origin.push(i);
            }
        }
        Ok((SignedGraph { vertex_count: vertices.len(), edges }, origin))
    }

    /// Same underlying graph, every edge positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|e| Edge { sign: Sign::Positive, ..*e }).collect(),
        }
    }
}

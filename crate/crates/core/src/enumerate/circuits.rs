//! Circuits of the signed-graphic matroid and the closed walks that
//! traverse them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Sign, SignedGraph};

/// Largest edge mask whose subsets are scanned for simple cycles.
const MAX_CYCLE_SCAN: usize = 26;

/// A simple cycle listed as a closed walk: `edges[i]` joins `vertices[i]` to
/// `vertices[i + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub balanced: bool,
}

impl Cycle {
    pub fn edge_set(&self) -> EdgeSubset {
        EdgeSubset::from_edges(self.edges.iter().copied())
    }

    /// The same cycle started at `v`.
    fn rotated_to(&self, v: usize) -> Cycle {
        let i = self.vertices.iter().position(|&x| x == v).expect("vertex on cycle");
        let mut c = self.clone();
        c.vertices.rotate_left(i);
        c.edges.rotate_left(i);
        c
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircuitKind {
    BalancedCycle,
    TightHandcuff,
    LooseHandcuff,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub kind: CircuitKind,
    /// One balanced cycle, or two unbalanced cycles.
    pub cycles: Vec<Cycle>,
    /// For a loose handcuff: path edges from the first cycle to the second.
    pub path: Vec<usize>,
    /// Vertices along the path, one more than its edges.
    pub path_vertices: Vec<usize>,
}

impl Circuit {
    pub fn edge_set(&self) -> EdgeSubset {
        self.cycles
            .iter()
            .fold(EdgeSubset::from_edges(self.path.iter().copied()), |acc, c| acc.union(c.edge_set()))
    }
}

/// One step of a walk: leave `vertex` along `edge` through half-edge `side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkStep {
    pub vertex: usize,
    pub edge: usize,
    pub side: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircuitWalk {
    pub steps: Vec<WalkStep>,
}

/// Half-edge of `e` at `v`; loops always use side 0.
fn side_at(g: &SignedGraph, e: usize, v: usize) -> u8 {
    let edge = g.edges()[e];
    if edge.is_loop() || edge.u == v {
        0
    } else {
        1
    }
}

impl CircuitWalk {
    fn from_pairs(g: &SignedGraph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        CircuitWalk {
            steps: pairs
                .into_iter()
                .map(|(vertex, edge)| WalkStep { vertex, edge, side: side_at(g, edge, vertex) })
                .collect(),
        }
    }

    /// The same closed walk traversed backwards from the same start.
    pub fn reversed(&self, g: &SignedGraph) -> CircuitWalk {
        let k = self.steps.len();
        CircuitWalk::from_pairs(
            g,
            (0..k).map(|i| {
                let step = self.steps[k - 1 - i];
                let next = if k - i < k { self.steps[k - i].vertex } else { self.steps[0].vertex };
                (next, step.edge)
            }),
        )
    }

    /// Product of edge signs along the walk.
    pub fn sign(&self, g: &SignedGraph) -> Sign {
        self.steps.iter().fold(Sign::Positive, |s, st| s.times(g.edges()[st.edge].sign))
    }

    /// Is this a closed walk in `g`?
    pub fn is_closed(&self, g: &SignedGraph) -> bool {
        let k = self.steps.len();
        (0..k).all(|i| {
            let st = self.steps[i];
            let next = self.steps[(i + 1) % k].vertex;
            let e = g.edges()[st.edge];
            (e.u == st.vertex && e.v == next) || (e.v == st.vertex && e.u == next)
        })
    }
}

/// The walk of a circuit: a cycle once, or both cycles once with the path
/// traversed forward and then back.
pub fn circuit_walk(g: &SignedGraph, c: &Circuit) -> CircuitWalk {
    let cycle_pairs = |cy: &Cycle| cy.vertices.iter().copied().zip(cy.edges.iter().copied()).collect::<Vec<_>>();
    match c.kind {
        CircuitKind::BalancedCycle => CircuitWalk::from_pairs(g, cycle_pairs(&c.cycles[0])),
        CircuitKind::TightHandcuff => {
            let w = *c.cycles[0]
                .vertices
                .iter()
                .find(|v| c.cycles[1].vertices.contains(v))
                .expect("shared vertex");
            let mut pairs = cycle_pairs(&c.cycles[0].rotated_to(w));
            pairs.extend(cycle_pairs(&c.cycles[1].rotated_to(w)));
            CircuitWalk::from_pairs(g, pairs)
        }
        CircuitKind::LooseHandcuff => {
            let pv = &c.path_vertices;
            let (start, end) = (pv[0], pv[pv.len() - 1]);
            let mut pairs = cycle_pairs(&c.cycles[0].rotated_to(start));
            pairs.extend(pv.iter().copied().zip(c.path.iter().copied()));
            pairs.extend(cycle_pairs(&c.cycles[1].rotated_to(end)));
            pairs.extend((0..c.path.len()).rev().map(|i| (pv[i + 1], c.path[i])));
            CircuitWalk::from_pairs(g, pairs)
        }
    }
}

/// Every simple cycle using only edges of `mask`, ordered by edge set.
pub fn simple_cycles_in(g: &SignedGraph, mask: EdgeSubset) -> Result<Vec<Cycle>> {
    if mask.len() > MAX_CYCLE_SCAN {
        return Err(Error::BudgetExceeded { needed: 1u128 << mask.len(), budget: 1u64 << MAX_CYCLE_SCAN });
    }
    let members: Vec<usize> = mask.iter().collect();
    let mut cycles = Vec::new();
    let mut degree = vec![0u32; g.vertex_count()];
    for bits in 1u64..1u64 << members.len() {
        let chosen: Vec<usize> = (0..members.len()).filter(|&i| bits >> i & 1 == 1).map(|i| members[i]).collect();
        for &e in &chosen {
            let edge = g.edges()[e];
            degree[edge.u] += 1;
            degree[edge.v] += 1;
        }
        let two_regular = chosen.iter().all(|&e| {
            let edge = g.edges()[e];
            degree[edge.u] == 2 && degree[edge.v] == 2
        });
        for &e in &chosen {
            let edge = g.edges()[e];
            degree[edge.u] = 0;
            degree[edge.v] = 0;
        }
        if two_regular {
            if let Some(c) = trace_cycle(g, &chosen) {
                cycles.push(c);
            }
        }
    }
    cycles.sort_by_key(|c| c.edge_set());
    Ok(cycles)
}

/// Walk a 2-regular edge set from its smallest vertex; `None` unless it is
/// a single cycle.
fn trace_cycle(g: &SignedGraph, edges: &[usize]) -> Option<Cycle> {
    let start = edges.iter().map(|&e| g.edges()[e].u.min(g.edges()[e].v)).min()?;
    let mut used = vec![false; edges.len()];
    let mut vertices = Vec::new();
    let mut order = Vec::new();
    let mut v = start;
    loop {
        let next = (0..edges.len()).find(|&i| {
            let e = g.edges()[edges[i]];
            !used[i] && (e.u == v || e.v == v)
        });
        let Some(i) = next else { break };
        used[i] = true;
        vertices.push(v);
        order.push(edges[i]);
        v = g.edges()[edges[i]].other_end(v);
        if v == start {
            break;
        }
    }
    if order.len() != edges.len() || v != start {
        return None;
    }
    let sign = order.iter().fold(Sign::Positive, |s, &e| s.times(g.edges()[e].sign));
    Some(Cycle { vertices, edges: order, balanced: sign == Sign::Positive })
}

/// Simple paths from any vertex of `from` to any vertex of `to`, with
/// interior vertices outside `blocked`, using edges of `mask`.
fn connecting_paths(
    g: &SignedGraph,
    mask: EdgeSubset,
    from: &BTreeSet<usize>,
    to: &BTreeSet<usize>,
    blocked: &BTreeSet<usize>,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    struct Search<'a> {
        g: &'a SignedGraph,
        mask: EdgeSubset,
        to: &'a BTreeSet<usize>,
        blocked: &'a BTreeSet<usize>,
        vertices: Vec<usize>,
        edges: Vec<usize>,
        out: Vec<(Vec<usize>, Vec<usize>)>,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize) {
            for e in self.mask.iter() {
                let edge = self.g.edges()[e];
                if edge.is_loop() || (edge.u != v && edge.v != v) {
                    continue;
                }
                let w = edge.other_end(v);
                if self.vertices.contains(&w) {
                    continue;
                }
                if self.to.contains(&w) {
                    let mut vs = self.vertices.clone();
                    vs.push(w);
                    let mut es = self.edges.clone();
                    es.push(e);
                    self.out.push((vs, es));
                } else if !self.blocked.contains(&w) {
                    self.vertices.push(w);
                    self.edges.push(e);
                    self.go(w);
                    self.vertices.pop();
                    self.edges.pop();
                }
            }
        }
    }
    let mut s = Search { g, mask, to, blocked, vertices: Vec::new(), edges: Vec::new(), out: Vec::new() };
    for &v in from {
        s.vertices = vec![v];
        s.edges.clear();
        s.go(v);
    }
    s.out
}

/// Circuits of the signed-graphic matroid restricted to `mask`.
pub fn enumerate_circuits_in(g: &SignedGraph, mask: EdgeSubset) -> Result<Vec<Circuit>> {
    let cycles = simple_cycles_in(g, mask)?;
    let mut out = Vec::new();
    for c in cycles.iter().filter(|c| c.balanced) {
        out.push(Circuit { kind: CircuitKind::BalancedCycle, cycles: vec![c.clone()], path: vec![], path_vertices: vec![] });
    }
    let unbalanced: Vec<&Cycle> = cycles.iter().filter(|c| !c.balanced).collect();
    for (i, c1) in unbalanced.iter().enumerate() {
        let v1: BTreeSet<usize> = c1.vertices.iter().copied().collect();
        for c2 in &unbalanced[i + 1..] {
            let v2: BTreeSet<usize> = c2.vertices.iter().copied().collect();
            let shared = v1.intersection(&v2).count();
            if shared == 1 && c1.edge_set().intersection(c2.edge_set()).is_empty() {
                out.push(Circuit {
                    kind: CircuitKind::TightHandcuff,
                    cycles: vec![(*c1).clone(), (*c2).clone()],
                    path: vec![],
                    path_vertices: vec![],
                });
            } else if shared == 0 {
                let blocked: BTreeSet<usize> = v1.union(&v2).copied().collect();
                let free = mask.difference(c1.edge_set()).difference(c2.edge_set());
                for (vs, es) in connecting_paths(g, free, &v1, &v2, &blocked) {
                    out.push(Circuit {
                        kind: CircuitKind::LooseHandcuff,
                        cycles: vec![(*c1).clone(), (*c2).clone()],
                        path: es,
                        path_vertices: vs,
                    });
                }
            }
        }
    }
    out.sort_by_key(|c| (c.edge_set(), c.kind));
    out.dedup_by_key(|c| c.edge_set());
    Ok(out)
}

pub fn enumerate_circuits(g: &SignedGraph) -> Result<Vec<Circuit>> {
    enumerate_circuits_in(g, g.full_set())
}

/// Unbalanced simple cycles of `g`.
pub fn unbalanced_cycles(g: &SignedGraph) -> Result<Vec<Cycle>> {
    Ok(simple_cycles_in(g, g.full_set())?.into_iter().filter(|c| !c.balanced).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use crate::matroid::{circuits, frame_matroid};

    fn handcuff() -> SignedGraph {
        SignedGraph::new(2, vec![Edge::positive(0, 1), Edge::negative(0, 0), Edge::negative(1, 1)])
            .unwrap()
    }

    #[test]
    fn handcuff_has_one_loose_circuit() {
        let h = handcuff();
        let cs = enumerate_circuits(&h).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, CircuitKind::LooseHandcuff);
        assert_eq!(cs[0].path, vec![0]);
        let w = circuit_walk(&h, &cs[0]);
        assert_eq!(w.steps.len(), 4);
        assert!(w.is_closed(&h));
        assert_eq!(w.sign(&h), Sign::Positive);
    }

    #[test]
    fn small_cases() {
        let tri = SignedGraph::new(3, vec![Edge::positive(0, 1), Edge::positive(1, 2), Edge::positive(2, 0)])
            .unwrap();
        let cs = enumerate_circuits(&tri).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, CircuitKind::BalancedCycle);
        let neg = SignedGraph::bouquet(1, Sign::Negative).unwrap();
        assert!(enumerate_circuits(&neg).unwrap().is_empty());
        let tight = SignedGraph::bouquet(2, Sign::Negative).unwrap();
        let cs = enumerate_circuits(&tight).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, CircuitKind::TightHandcuff);
    }

    #[test]
    fn matches_rank_function() {
        // theta graph with a negative loop hanging off a path
        let g = SignedGraph::new(
            4,
            vec![
                Edge::positive(0, 1),
                Edge::negative(0, 1),
                Edge::positive(1, 2),
                Edge::negative(2, 0),
                Edge::positive(2, 3),
                Edge::negative(3, 3),
            ],
        )
        .unwrap();
        let structural: Vec<EdgeSubset> = enumerate_circuits(&g).unwrap().iter().map(Circuit::edge_set).collect();
        let mut from_ranks = circuits(&frame_matroid(&g));
        from_ranks.sort();
        assert_eq!(structural, from_ranks);
        for c in enumerate_circuits(&g).unwrap() {
            let w = circuit_walk(&g, &c);
            assert!(w.is_closed(&g));
            assert_eq!(w.sign(&g), Sign::Positive);
            let r = w.reversed(&g);
            assert!(r.is_closed(&g));
            assert_eq!(r.steps.len(), w.steps.len());
        }
    }
}

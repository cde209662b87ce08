//! Exhaustive families of small signed graphs.

use crate::graph::{Edge, Sign, SignedGraph};

/// Every signed multigraph on `1..=max_vertices` vertices with at most
/// `max_edges` edges (loops and parallel edges included), under every sign
/// pattern. Isomorphic copies are kept.
pub fn battery(max_vertices: usize, max_edges: usize) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut chosen = Vec::new();
        multisets(&slots, 0, max_edges, &mut chosen, &mut |pairs| {
            for signs in 0u32..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| {
                        let sign = if signs >> i & 1 == 1 { Sign::Negative } else { Sign::Positive };
                        Edge::new(u, v, sign)
                    })
                    .collect();
                out.push(SignedGraph::new(n, edges).expect("endpoints in range"));
            }
        });
    }
    out
}

fn multisets<F: FnMut(&[(usize, usize)])>(
    slots: &[(usize, usize)],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut F,
) {
    emit(chosen);
    if remaining == 0 {
        return;
    }
    for i in from..slots.len() {
        chosen.push(slots[i]);
        multisets(slots, i, remaining - 1, chosen, emit);
        chosen.pop();
    }
}

/// Graphs with at most three vertices and four edges.
pub fn standard_battery() -> Vec<SignedGraph> {
    battery(3, 4)
}

/// One-line description such as `v2 0-1+ 0-0- 1-1-`.
pub fn label(g: &SignedGraph) -> String {
    let mut out = format!("v{}", g.vertex_count());
    for e in g.edges() {
        out.push_str(&format!(" {}-{}{}", e.u, e.v, e.sign.symbol()));
    }
    out
}

//! Vertex colorings of signed graphs.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSubset, Sign, SignedGraph};
use crate::group::{FiniteAbelianGroup, GroupTable};

/// Count maps `V -> {0..colors}` for which `accept(edge, f(u), f(v))` holds on
/// every edge. Edges are checked as soon as both endpoints are colored.
fn count_vertex_maps<F>(g: &SignedGraph, colors: usize, budget: Budget, accept: F) -> Result<u128>
where
    F: Fn(&Edge, usize, usize) -> bool,
{
    budget.check_power(colors as u64, g.vertex_count())?;
    let mut closes: Vec<Vec<Edge>> = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        closes[e.u.max(e.v)].push(*e);
    }
    let mut f = vec![0usize; g.vertex_count()];
    Ok(color_from(0, colors, &closes, &mut f, &accept))
}

fn color_from<F>(v: usize, colors: usize, closes: &[Vec<Edge>], f: &mut [usize], accept: &F) -> u128
where
    F: Fn(&Edge, usize, usize) -> bool,
{
    if v == f.len() {
        return 1;
    }
    let mut total = 0;
    for c in 0..colors {
        f[v] = c;
        if closes[v].iter().all(|e| accept(e, f[e.u], f[e.v])) {
            total += color_from(v + 1, colors, closes, f, accept);
        }
    }
    total
}

/// Colorings by `{-n, .., n}` (or `{+-1, .., +-n}` when `nonzero`) with
/// `f(u) != sigma(e) f(v)` on every edge.
pub fn count_colorings_zaslavsky(g: &SignedGraph, n: u64, nonzero: bool, budget: Budget) -> Result<u128> {
    let n = n as i64;
    let palette: Vec<i64> = (-n..=n).filter(|&c| !nonzero || c != 0).collect();
    count_vertex_maps(g, palette.len(), budget, |e, a, b| palette[a] != e.sign.as_i64() * palette[b])
}

/// `sum_A (-1)^{|A|} t^{k_b(A)}`, optionally restricted to balanced `(V, A)`.
pub fn zaslavsky_chromatic_subset(g: &SignedGraph, t: u64, balanced_only: bool) -> BigInt {
    let t = BigInt::from(t);
    let mut total = BigInt::zero();
    for a in EdgeSubset::all(g.edge_count()) {
        let p = g.component_profile(a);
        if balanced_only && p.unbalanced > 0 {
            continue;
        }
        let term = num_traits::pow(t.clone(), p.balanced);
        if a.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn check_involution(x_size: usize, iota: &[usize]) -> Result<usize> {
    if iota.len() != x_size {
        return Err(Error::InvalidArgument(format!("involution has {} entries, expected {x_size}", iota.len())));
    }
    for (x, &y) in iota.iter().enumerate() {
        if y >= x_size || iota[y] != x {
            return Err(Error::InvalidArgument("map is not an involution".into()));
        }
    }
    Ok(iota.iter().enumerate().filter(|&(x, &y)| x == y).count())
}

/// Maps `f: V -> X` with `f(u) != f(v)` on positive edges and
/// `iota(f(u)) != f(v)` on negative edges.
pub fn count_xiota_colorings(g: &SignedGraph, x_size: usize, iota: &[usize], budget: Budget) -> Result<u128> {
    check_involution(x_size, iota)?;
    count_vertex_maps(g, x_size, budget, |e, a, b| match e.sign {
        Sign::Positive => a != b,
        Sign::Negative => iota[a] != b,
    })
}

/// Maps improper on every edge; equals `t^{k_u} |X|^{k_b}`.
pub fn count_all_improper(g: &SignedGraph, x_size: usize, iota: &[usize], budget: Budget) -> Result<u128> {
    check_involution(x_size, iota)?;
    count_vertex_maps(g, x_size, budget, |e, a, b| match e.sign {
        Sign::Positive => a == b,
        Sign::Negative => iota[a] == b,
    })
}

/// `t^{k_u} |X|^{k_b}` with `t` the number of fixed points.
pub fn all_improper_closed_form(g: &SignedGraph, x_size: usize, fixed: usize) -> BigInt {
    let p = g.profile();
    num_traits::pow(BigInt::from(fixed), p.unbalanced) * num_traits::pow(BigInt::from(x_size), p.balanced)
}

/// Proper colorings by group elements: `f(u) != f(v)` on positive edges,
/// `-f(u) != f(v)` on negative edges.
pub fn count_group_colorings(g: &SignedGraph, group: &FiniteAbelianGroup, budget: Budget) -> Result<u128> {
    let table = GroupTable::new(group)?;
    let iota: Vec<usize> = (0..table.order() as u32).map(|a| table.neg(a) as usize).collect();
    count_xiota_colorings(g, table.order(), &iota, budget)
}

/// Every involution of `{0, .., n-1}`, as index permutations.
pub fn all_involutions(n: usize) -> Vec<Vec<usize>> {
    fn extend(iota: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = iota.iter().position(Option::is_none) else {
            out.push(iota.iter().map(|y| y.expect("assigned")).collect());
            return;
        };
        iota[x] = Some(x);
        extend(iota, out);
        for y in x + 1..iota.len() {
            if iota[y].is_none() {
                iota[x] = Some(y);
                iota[y] = Some(x);
                extend(iota, out);
                iota[y] = None;
            }
        }
        iota[x] = None;
    }
    let mut out = Vec::new();
    extend(&mut vec![None; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn grp(s: &str) -> FiniteAbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn zaslavsky_counts() {
        let neg = SignedGraph::bouquet(1, Sign::Negative).unwrap();
        assert_eq!(count_colorings_zaslavsky(&neg, 1, false, Budget::unlimited()).unwrap(), 2);
        let k2 = SignedGraph::new(2, vec![Edge::positive(0, 1)]).unwrap();
        assert_eq!(count_colorings_zaslavsky(&k2, 1, false, Budget::unlimited()).unwrap(), 6);
        assert_eq!(zaslavsky_chromatic_subset(&k2, 3, false), BigInt::from(6));
        assert_eq!(zaslavsky_chromatic_subset(&neg, 3, false), BigInt::from(2));
        // balanced nonzero case is the ordinary chromatic polynomial
        let tri = SignedGraph::new(3, vec![Edge::positive(0, 1), Edge::positive(1, 2), Edge::positive(2, 0)])
            .unwrap();
        assert_eq!(count_colorings_zaslavsky(&tri, 2, true, Budget::unlimited()).unwrap(), 4 * 3 * 2);
        assert_eq!(zaslavsky_chromatic_subset(&tri, 4, true), BigInt::from(24));
    }

    #[test]
    fn involution_colorings() {
        let neg = SignedGraph::bouquet(1, Sign::Negative).unwrap();
        assert_eq!(count_xiota_colorings(&neg, 3, &[0, 2, 1], Budget::unlimited()).unwrap(), 2);
        let z2 = grp("Z2");
        let h = SignedGraph::new(2, vec![Edge::positive(0, 1), Edge::negative(0, 0), Edge::negative(1, 1)])
            .unwrap();
        assert_eq!(
            count_group_colorings(&h, &z2, Budget::unlimited()).unwrap(),
            count_xiota_colorings(&h, 2, &[0, 1], Budget::unlimited()).unwrap()
        );
        // the identity involution ignores signs
        let mixed = SignedGraph::new(3, vec![Edge::negative(0, 1), Edge::positive(1, 2)]).unwrap();
        assert_eq!(
            count_xiota_colorings(&mixed, 4, &[0, 1, 2, 3], Budget::unlimited()).unwrap(),
            count_xiota_colorings(&mixed.underlying(), 4, &[0, 1, 2, 3], Budget::unlimited()).unwrap()
        );
        assert!(count_xiota_colorings(&neg, 3, &[1, 2, 0], Budget::unlimited()).is_err());
    }

    #[test]
    fn improper_everywhere() {
        let h = SignedGraph::new(2, vec![Edge::positive(0, 1), Edge::negative(0, 0), Edge::negative(1, 1)])
            .unwrap();
        for iota in all_involutions(5) {
            let t = iota.iter().enumerate().filter(|&(a, &b)| a == b).count();
            assert_eq!(
                BigInt::from(count_all_improper(&h, 5, &iota, Budget::unlimited()).unwrap()),
                all_improper_closed_form(&h, 5, t)
            );
        }
    }

    #[test]
    fn involutions_are_exhaustive() {
        // 1, 1, 2, 4, 10, 26 involutions on 0..5 points
        let counts: Vec<usize> = (0..6).map(|n| all_involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26]);
        for iota in all_involutions(4) {
            assert!(check_involution(4, &iota).is_ok());
        }
    }
}

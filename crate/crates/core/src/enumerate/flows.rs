//! Group-valued flows.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::orientation::{default_orientation, Orientation};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, SignedGraph};
use crate::group::{FiniteAbelianGroup, GroupTable};

/// Brute-force count of `f: E -> G` obeying Kirchhoff's law at every
/// vertex, using the default orientation.
pub fn count_flows(g: &SignedGraph, group: &FiniteAbelianGroup, nowhere_zero: bool, budget: Budget) -> Result<u128> {
    count_flows_oriented(g, &default_orientation(g), group, nowhere_zero, budget)
}

pub fn count_flows_oriented(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    nowhere_zero: bool,
    budget: Budget,
) -> Result<u128> {
    omega.validate(g)?;
    budget.check_power(group.order(), g.edge_count())?;
    let table = GroupTable::new(group)?;
    // vertices whose last incident edge is `e` are checked after assigning e
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    let mut last = vec![None; g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        last[e.u] = Some(i);
        last[e.v] = Some(i);
    }
    for (v, l) in last.iter().enumerate() {
        if let Some(i) = l {
            closes[*i].push(v);
        }
    }
    let mut search = FlowSearch {
        g,
        omega,
        table: &table,
        closes: &closes,
        nowhere_zero,
        excess: vec![0u32; g.vertex_count()],
    };
    Ok(search.run(0))
}

struct FlowSearch<'a> {
    g: &'a SignedGraph,
    omega: &'a Orientation,
    table: &'a GroupTable,
    closes: &'a [Vec<usize>],
    nowhere_zero: bool,
    excess: Vec<u32>,
}

impl FlowSearch<'_> {
    fn run(&mut self, e: usize) -> u128 {
        if e == self.g.edge_count() {
            return 1;
        }
        let edge = self.g.edges()[e];
        let (wu, wv) = (self.omega.omega(e, 0), self.omega.omega(e, 1));
        let start = if self.nowhere_zero { 1 } else { 0 };
        let mut total = 0;
        for x in start..self.table.order() as u32 {
            let (su, sv) = (self.excess[edge.u], self.excess[edge.v]);
            if edge.is_loop() {
                self.excess[edge.u] = self.table.add(su, self.table.scale(wu + wv, x));
            } else {
                self.excess[edge.u] = self.table.add(su, self.table.scale(wu, x));
                self.excess[edge.v] = self.table.add(sv, self.table.scale(wv, x));
            }
            if self.closes[e].iter().all(|&v| self.excess[v] == 0) {
                total += self.run(e + 1);
            }
            self.excess[edge.u] = su;
            self.excess[edge.v] = sv;
        }
        total
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// `|G|^{|E|-|V|+k_b} (|G|/|2G|)^{k_u}`.
pub fn count_flows_closed_form(g: &SignedGraph, group: &FiniteAbelianGroup) -> BigInt {
    let p = g.profile();
    let nullity = g.edge_count() + p.balanced - g.vertex_count();
    num_traits::pow(big(group.order()), nullity) * num_traits::pow(big(group.two_torsion_order()), p.unbalanced)
}

/// Inclusion-exclusion over edge subsets:
/// `sum_A (-1)^{|E-A|} |G|^{|A|-|V|+k_b(A)} (|G|/|2G|)^{k_u(A)}`.
pub fn count_nz_flows_subset(g: &SignedGraph, group: &FiniteAbelianGroup) -> Result<BigInt> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let (order, torsion) = (big(group.order()), big(group.two_torsion_order()));
    let mut total = BigInt::zero();
    for a in EdgeSubset::all(m) {
        let p = g.component_profile(a);
        let term = num_traits::pow(order.clone(), a.len() + p.balanced - n) * num_traits::pow(torsion.clone(), p.unbalanced);
        if (m - a.len()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    if total.is_negative() {
        return Err(Error::Invariant(format!("nowhere-zero flow sum is negative: {total}")));
    }
    Ok(total)
}

/// `q` over `Z_n` for `n` in `ns`, by brute force.
pub fn flow_counts_over_cyclic(g: &SignedGraph, ns: &[u64], budget: Budget) -> Result<Vec<(u64, u128)>> {
    ns.iter()
        .map(|&n| Ok((n, count_flows(g, &FiniteAbelianGroup::cyclic(n)?, true, budget)?)))
        .collect()
}

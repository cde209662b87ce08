//! The coboundary map from vertex colorings to edge functions.

use std::collections::HashSet;

use super::orientation::{default_orientation, Orientation};
use super::tensions::{for_each_tension, TensionMode, TensionSystem};
use super::EdgeFunction;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::group::{FiniteAbelianGroup, GroupElement, GroupTable};

fn delta_indices(g: &SignedGraph, omega: &Orientation, table: &GroupTable, coloring: &[u32], out: &mut [u32]) {
    for (i, e) in g.edges().iter().enumerate() {
        let (wu, wv) = (omega.omega(i, 0), omega.omega(i, 1));
        out[i] = if e.is_loop() {
            table.scale(wu + wv, coloring[e.u])
        } else {
            table.add(table.scale(wu, coloring[e.u]), table.scale(wv, coloring[e.v]))
        };
    }
}

/// `(delta g)(e) = omega(u, e) g(u) + omega(v, e) g(v)`.
pub fn delta(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    coloring: &[GroupElement],
) -> Result<EdgeFunction> {
    omega.validate(g)?;
    if coloring.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "coloring has {} values, graph has {} vertices",
            coloring.len(),
            g.vertex_count()
        )));
    }
    let table = GroupTable::new(group)?;
    let idx: Vec<u32> = coloring.iter().map(|x| Ok(group.index_of(x)? as u32)).collect::<Result<_>>()?;
    let mut out = vec![0; g.edge_count()];
    delta_indices(g, omega, &table, &idx, &mut out);
    Ok(EdgeFunction { values: out.iter().map(|&x| table.element(x)).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaStats {
    pub colorings: u128,
    pub kernel_size: u128,
    pub image_size: u128,
    pub potential_differences: u128,
    /// Every image is a potential difference and every potential difference
    /// is an image.
    pub image_is_potential_differences: bool,
}

/// Compare the image of `delta` over all colorings with the potential
/// differences found by brute force.
pub fn delta_image_stats(g: &SignedGraph, group: &FiniteAbelianGroup, budget: Budget) -> Result<DeltaStats> {
    let omega = default_orientation(g);
    let table = GroupTable::new(group)?;
    let order = table.order() as u64;
    budget.check_power(order, g.vertex_count())?;
    let system = TensionSystem::new(g, &omega)?;
    let mut image: HashSet<Vec<u32>> = HashSet::new();
    let mut kernel = 0u128;
    let mut coloring = vec![0u32; g.vertex_count()];
    let mut out = vec![0u32; g.edge_count()];
    let total = order.pow(g.vertex_count() as u32);
    let mut all_pd = true;
    for mut index in 0..total {
        for c in coloring.iter_mut().rev() {
            *c = (index % order) as u32;
            index /= order;
        }
        delta_indices(g, &omega, &table, &coloring, &mut out);
        if out.iter().all(|&x| x == 0) {
            kernel += 1;
        }
        all_pd &= system.is_potential_difference(&table, &out);
        image.insert(out.clone());
    }
    let mut pds = 0u128;
    let mut covered = true;
    for_each_tension(g, &omega, &table, TensionMode::Brute, budget, |f| {
        if system.is_potential_difference(&table, f) {
            pds += 1;
            covered &= image.contains(f);
        }
        Ok(())
    })?;
    Ok(DeltaStats {
        colorings: total as u128,
        kernel_size: kernel,
        image_size: image.len() as u128,
        potential_differences: pds,
        image_is_potential_differences: all_pd && covered,
    })
}

/// `|G|^{k_b} |G_2|^{k_u}`, with `G_2` the elements of order dividing two.
pub fn kernel_closed_form(g: &SignedGraph, group: &FiniteAbelianGroup) -> u128 {
    let p = g.profile();
    (group.order() as u128).pow(p.balanced as u32) * (group.two_torsion_order() as u128).pow(p.unbalanced as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Sign};

    #[test]
    fn kernel_and_image() {
        let graphs = [
            SignedGraph::new(2, vec![Edge::positive(0, 1), Edge::negative(0, 0), Edge::negative(1, 1)]).unwrap(),
            SignedGraph::bouquet(2, Sign::Negative).unwrap(),
            SignedGraph::new(3, vec![Edge::negative(0, 1), Edge::positive(1, 2)]).unwrap(),
        ];
        for g in &graphs {
            for spec in ["Z2", "Z4", "Z3", "Z2xZ2"] {
                let gr: FiniteAbelianGroup = spec.parse().unwrap();
                let s = delta_image_stats(g, &gr, Budget::unlimited()).unwrap();
                assert_eq!(s.kernel_size, kernel_closed_form(g, &gr));
                assert_eq!(s.kernel_size * s.image_size, s.colorings);
                assert!(s.image_is_potential_differences);
                assert_eq!(s.image_size, s.potential_differences);
            }
        }
    }

    #[test]
    fn explicit_value() {
        let k2 = SignedGraph::new(2, vec![Edge::positive(0, 1)]).unwrap();
        let z5: FiniteAbelianGroup = "Z5".parse().unwrap();
        let c = [z5.element(&[3]).unwrap(), z5.element(&[1]).unwrap()];
        let f = delta(&k2, &default_orientation(&k2), &z5, &c).unwrap();
        assert_eq!(f.values[0], z5.element(&[2]).unwrap());
    }
}

//! Group-valued tensions and potential differences, checked against the
//! circuit walks of the signed graph.

use std::collections::{BTreeMap, HashSet};

use super::circuits::{circuit_walk, enumerate_circuits, enumerate_circuits_in, simple_cycles_in, CircuitWalk};
use super::orientation::{default_orientation, Orientation};
use super::EdgeFunction;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Sign, SignedGraph};
use crate::group::{FiniteAbelianGroup, GroupElement, GroupTable};

/// Sparse linear form `sum c_e f(e)`.
pub type LinearForm = Vec<(usize, i64)>;

/// Coefficient of every edge in the height of a walk:
/// `omega(v_i, e_i) * prod_{j<i} sigma(e_j)`, accumulated per edge.
pub fn walk_coefficients(g: &SignedGraph, omega: &Orientation, walk: &CircuitWalk) -> Vec<i64> {
    let mut coef = vec![0i64; g.edge_count()];
    let mut prefix = 1i64;
    for st in &walk.steps {
        coef[st.edge] += omega.omega(st.edge, st.side) * prefix;
        prefix *= g.edges()[st.edge].sign.as_i64();
    }
    coef
}

fn sparse(coef: &[i64]) -> LinearForm {
    coef.iter().enumerate().filter(|&(_, &c)| c != 0).map(|(e, &c)| (e, c)).collect()
}

fn evaluate(table: &GroupTable, form: &LinearForm, f: &[u32]) -> u32 {
    form.iter().fold(0, |acc, &(e, c)| table.add(acc, table.scale(c, f[e])))
}

/// The defining equations of tensions and potential differences of one
/// signed graph under one orientation.
#[derive(Clone, Debug)]
pub struct TensionSystem {
    rows: Vec<LinearForm>,
    /// Unbalanced simple cycles with the component containing them.
    unbalanced: Vec<(usize, Vec<usize>)>,
    unbalanced_components: Vec<bool>,
}

impl TensionSystem {
    pub fn new(g: &SignedGraph, omega: &Orientation) -> Result<Self> {
        TensionSystem::build(g, omega, false)
    }

    /// Same equations from walks traversed in the opposite direction.
    pub fn with_reversed_walks(g: &SignedGraph, omega: &Orientation) -> Result<Self> {
        TensionSystem::build(g, omega, true)
    }

    fn build(g: &SignedGraph, omega: &Orientation, reverse: bool) -> Result<Self> {
        omega.validate(g)?;
        let rows = enumerate_circuits(g)?
            .iter()
            .map(|c| {
                let w = circuit_walk(g, c);
                let w = if reverse { w.reversed(g) } else { w };
                sparse(&walk_coefficients(g, omega, &w))
            })
            .collect();
        let comps = g.components(g.full_set());
        let unbalanced = simple_cycles_in(g, g.full_set())?
            .into_iter()
            .filter(|c| !c.balanced)
            .map(|c| (comps.label[c.vertices[0]], c.edges))
            .collect();
        Ok(TensionSystem { rows, unbalanced, unbalanced_components: comps.unbalanced })
    }

    pub fn rows(&self) -> &[LinearForm] {
        &self.rows
    }

    pub fn is_tension(&self, table: &GroupTable, f: &[u32]) -> bool {
        self.rows.iter().all(|r| evaluate(table, r, f) == 0)
    }

    pub fn is_potential_difference(&self, table: &GroupTable, f: &[u32]) -> bool {
        self.is_tension(table, f) && self.unbalanced.iter().all(|(_, c)| table.in_two_g(cycle_sum(table, c, f)))
    }

    /// Coset of `2G` containing the edge sum of every unbalanced cycle, per
    /// component; `None` for balanced components. Fails if two cycles of one
    /// component disagree.
    pub fn component_cosets(&self, table: &GroupTable, f: &[u32]) -> Result<Vec<Option<u32>>> {
        let mut out: Vec<Option<u32>> = vec![None; self.unbalanced_components.len()];
        for (comp, cycle) in &self.unbalanced {
            let coset = table.coset(cycle_sum(table, cycle, f));
            match out[*comp] {
                None => out[*comp] = Some(coset),
                Some(c) if c != coset => {
                    return Err(Error::Invariant(format!(
                        "unbalanced cycles of component {comp} lie in different cosets of 2G"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(out)
    }
}

fn cycle_sum(table: &GroupTable, cycle: &[usize], f: &[u32]) -> u32 {
    cycle.iter().fold(0, |acc, &e| table.add(acc, f[e]))
}

fn indices(group: &FiniteAbelianGroup, f: &EdgeFunction, edges: usize) -> Result<Vec<u32>> {
    if f.values.len() != edges {
        return Err(Error::InvalidArgument(format!("edge function has {} values, graph has {edges} edges", f.values.len())));
    }
    f.values.iter().map(|x| Ok(group.index_of(x)? as u32)).collect()
}

pub fn is_tension(g: &SignedGraph, omega: &Orientation, group: &FiniteAbelianGroup, f: &EdgeFunction) -> Result<bool> {
    let table = GroupTable::new(group)?;
    let system = TensionSystem::new(g, omega)?;
    Ok(system.is_tension(&table, &indices(group, f, g.edge_count())?))
}

pub fn is_potential_difference(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    f: &EdgeFunction,
) -> Result<bool> {
    let table = GroupTable::new(group)?;
    let system = TensionSystem::new(g, omega)?;
    Ok(system.is_potential_difference(&table, &indices(group, f, g.edge_count())?))
}

/// A spanning tree per component, plus one edge closing an unbalanced
/// cycle in every unbalanced component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedBasis {
    pub edges: EdgeSubset,
}

pub fn connected_basis(g: &SignedGraph) -> ConnectedBasis {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = EdgeSubset::EMPTY;
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            tree = tree.with(i);
        }
    }
    let forest = g.components(tree);
    let whole = g.components(g.full_set());
    let mut closed = vec![false; whole.count()];
    let mut edges = tree;
    for (i, e) in g.edges().iter().enumerate() {
        let c = whole.label[e.u];
        if tree.contains(i) || closed[c] || !whole.unbalanced[c] {
            continue;
        }
        if forest.potential[e.u].times(forest.potential[e.v]) != e.sign {
            edges = edges.with(i);
            closed[c] = true;
        }
    }
    ConnectedBasis { edges }
}

impl ConnectedBasis {
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        if !self.edges.is_subset_of(g.full_set()) {
            return Err(Error::InvalidBasis("edge outside the graph".into()));
        }
        let whole = g.components(g.full_set());
        let part = g.components(self.edges);
        if part.count() != whole.count() {
            return Err(Error::InvalidBasis("does not span every component".into()));
        }
        let sets = part.vertex_sets();
        for (c, vertices) in sets.iter().enumerate() {
            let size = self.edges.iter().filter(|&e| part.label[g.edges()[e].u] == c).count();
            let original = whole.label[vertices[0]];
            let expected = if whole.unbalanced[original] { vertices.len() } else { vertices.len() - 1 };
            if size != expected || part.unbalanced[c] != whole.unbalanced[original] {
                return Err(Error::InvalidBasis(format!("component containing vertex {} has the wrong shape", vertices[0])));
            }
        }
        Ok(())
    }
}

/// Values on non-basis edges as linear forms in the basis values.
#[derive(Clone, Debug)]
pub struct ExtensionPlan {
    pub basis: Vec<usize>,
    pub solved: Vec<(usize, LinearForm)>,
}

pub fn extension_plan(g: &SignedGraph, omega: &Orientation, basis: &ConnectedBasis) -> Result<ExtensionPlan> {
    basis.validate(g)?;
    omega.validate(g)?;
    let mut solved = Vec::new();
    for e in basis.edges.complement(g.edge_count()).iter() {
        let mask = basis.edges.with(e);
        let circuit = enumerate_circuits_in(g, mask)?
            .into_iter()
            .find(|c| c.edge_set().contains(e))
            .ok_or_else(|| Error::InvalidBasis(format!("edge {e} closes no circuit")))?;
        let coef = walk_coefficients(g, omega, &circuit_walk(g, &circuit));
        let ce = coef[e];
        if ce.abs() != 1 {
            return Err(Error::InvalidBasis(format!("edge {e} has coefficient {ce} in its circuit")));
        }
        let form = coef
            .iter()
            .enumerate()
            .filter(|&(j, &c)| j != e && c != 0)
            .map(|(j, &c)| (j, -ce * c))
            .collect();
        solved.push((e, form));
    }
    Ok(ExtensionPlan { basis: basis.edges.iter().collect(), solved })
}

impl ExtensionPlan {
    /// Fill in `f` on non-basis edges; basis values must already be set.
    pub fn extend(&self, table: &GroupTable, f: &mut [u32]) {
        for (e, form) in &self.solved {
            f[*e] = evaluate(table, form, f);
        }
    }
}

/// The unique tension agreeing with `values` on the basis edges (listed in
/// increasing edge order).
pub fn extend_tension_from_basis(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    basis: &ConnectedBasis,
    values: &[GroupElement],
) -> Result<EdgeFunction> {
    let plan = extension_plan(g, omega, basis)?;
    if values.len() != plan.basis.len() {
        return Err(Error::InvalidArgument(format!("expected {} basis values, got {}", plan.basis.len(), values.len())));
    }
    let table = GroupTable::new(group)?;
    let mut f = vec![0u32; g.edge_count()];
    for (&e, x) in plan.basis.iter().zip(values) {
        f[e] = group.index_of(x)? as u32;
    }
    plan.extend(&table, &mut f);
    Ok(EdgeFunction { values: f.iter().map(|&x| table.element(x)).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensionMode {
    /// Scan every edge function.
    Brute,
    /// Extend every assignment on a connected basis.
    Basis,
}

/// Visit every tension of `g` (as element indices) in either mode.
pub fn for_each_tension<F>(
    g: &SignedGraph,
    omega: &Orientation,
    table: &GroupTable,
    mode: TensionMode,
    budget: Budget,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    let system = TensionSystem::new(g, omega)?;
    let order = table.order() as u64;
    match mode {
        TensionMode::Brute => {
            budget.check_power(order, g.edge_count())?;
            let mut closing: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
            for (i, row) in system.rows.iter().enumerate() {
                if let Some(&(last, _)) = row.last() {
                    closing[last].push(i);
                }
            }
            let mut f = vec![0u32; g.edge_count()];
            brute(&system, table, &closing, 0, &mut f, &mut visit)
        }
        TensionMode::Basis => {
            let plan = extension_plan(g, omega, &connected_basis(g))?;
            budget.check_power(order, plan.basis.len())?;
            let mut f = vec![0u32; g.edge_count()];
            let total = order.pow(plan.basis.len() as u32);
            for mut index in 0..total {
                for &e in plan.basis.iter().rev() {
                    f[e] = (index % order) as u32;
                    index /= order;
                }
                plan.extend(table, &mut f);
                if !system.is_tension(table, &f) {
                    return Err(Error::Invariant("basis extension is not a tension".into()));
                }
                visit(&f)?;
            }
            Ok(())
        }
    }
}

fn brute<F>(
    system: &TensionSystem,
    table: &GroupTable,
    closing: &[Vec<usize>],
    e: usize,
    f: &mut [u32],
    visit: &mut F,
) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    if e == f.len() {
        return visit(f);
    }
    for x in 0..table.order() as u32 {
        f[e] = x;
        if closing[e].iter().all(|&r| evaluate(table, &system.rows[r], f) == 0) {
            brute(system, table, closing, e + 1, f, visit)?;
        }
    }
    f[e] = 0;
    Ok(())
}

/// Every tension as a vector of element indices, in the visiting order of
/// the chosen mode.
pub fn enumerate_tensions(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    mode: TensionMode,
    budget: Budget,
) -> Result<Vec<Vec<u32>>> {
    let table = GroupTable::new(group)?;
    let mut out = Vec::new();
    for_each_tension(g, omega, &table, mode, budget, |f| {
        out.push(f.to_vec());
        Ok(())
    })?;
    Ok(out)
}

/// Nowhere-zero tensions of one component, by coset of its unbalanced
/// cycle sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCosets {
    pub vertices: Vec<usize>,
    pub unbalanced: bool,
    pub by_coset: BTreeMap<GroupElement, u128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensionCounts {
    pub tensions: u128,
    pub potential_differences: u128,
    pub nowhere_zero_tensions: u128,
    pub nowhere_zero_potential_differences: u128,
    /// For each coset `u + 2G`: nowhere-zero tensions whose unbalanced cycle
    /// sums all lie in `u + 2G`.
    pub by_coset: BTreeMap<GroupElement, u128>,
    pub components: Vec<ComponentCosets>,
}

pub fn count_tensions(g: &SignedGraph, group: &FiniteAbelianGroup, mode: TensionMode, budget: Budget) -> Result<TensionCounts> {
    count_tensions_oriented(g, &default_orientation(g), group, mode, budget)
}

pub fn count_tensions_oriented(
    g: &SignedGraph,
    omega: &Orientation,
    group: &FiniteAbelianGroup,
    mode: TensionMode,
    budget: Budget,
) -> Result<TensionCounts> {
    let table = GroupTable::new(group)?;
    let system = TensionSystem::new(g, omega)?;
    let reps: Vec<u32> = group.coset_reps().iter().map(|r| group.index_of(r).expect("rep") as u32).collect();
    let mut counts = [0u128; 4];
    let mut by_coset: BTreeMap<u32, u128> = reps.iter().map(|&r| (r, 0)).collect();
    for_each_tension(g, omega, &table, mode, budget, |f| {
        let cosets = system.component_cosets(&table, f)?;
        let pd = cosets.iter().all(|c| c.is_none_or(|x| x == 0));
        let nz = f.iter().all(|&x| x != 0);
        counts[0] += 1;
        counts[1] += pd as u128;
        counts[2] += nz as u128;
        counts[3] += (nz && pd) as u128;
        if nz {
            let present: HashSet<u32> = cosets.iter().flatten().copied().collect();
            match present.len() {
                0 => by_coset.values_mut().for_each(|c| *c += 1),
                1 => *by_coset.get_mut(present.iter().next().expect("one")).expect("rep") += 1,
                _ => {}
            }
        }
        Ok(())
    })?;
    let by_coset: BTreeMap<GroupElement, u128> = by_coset.into_iter().map(|(r, c)| (table.element(r), c)).collect();
    let comps = g.components(g.full_set());
    let components = if comps.count() == 1 {
        vec![ComponentCosets { vertices: (0..g.vertex_count()).collect(), unbalanced: comps.unbalanced[0], by_coset: by_coset.clone() }]
    } else {
        let mut out = Vec::new();
        for (c, vertices) in comps.vertex_sets().into_iter().enumerate() {
            let (sub, origin) = g.induced(&vertices)?;
            let sides = origin.iter().map(|&e| omega.sides(e)).collect();
            let sub_omega = Orientation::new(&sub, sides)?;
            let inner = count_tensions_oriented(&sub, &sub_omega, group, mode, budget)?;
            out.push(ComponentCosets { vertices, unbalanced: comps.unbalanced[c], by_coset: inner.by_coset });
        }
        out
    };
    Ok(TensionCounts {
        tensions: counts[0],
        potential_differences: counts[1],
        nowhere_zero_tensions: counts[2],
        nowhere_zero_potential_differences: counts[3],
        by_coset,
        components,
    })
}

/// Height forms of all positive closed walks with at most `max_len` steps,
/// deduplicated. Loops are entered through side 0.
pub fn positive_closed_walk_forms(g: &SignedGraph, omega: &Orientation, max_len: usize) -> Vec<Vec<i64>> {
    let mut forms: HashSet<Vec<i64>> = HashSet::new();
    for start in 0..g.vertex_count() {
        let mut layer: HashSet<(usize, Sign, Vec<i64>)> = HashSet::new();
        layer.insert((start, Sign::Positive, vec![0; g.edge_count()]));
        for _ in 0..max_len {
            let mut next = HashSet::new();
            for (v, sign, coef) in &layer {
                for (i, e) in g.edges().iter().enumerate() {
                    if e.u != *v && e.v != *v {
                        continue;
                    }
                    let side = if e.is_loop() || e.u == *v { 0 } else { 1 };
                    let mut c = coef.clone();
                    c[i] += omega.omega(i, side) * sign.as_i64();
                    let s = sign.times(e.sign);
                    let w = e.other_end(*v);
                    if w == start && s == Sign::Positive {
                        forms.insert(c.clone());
                    }
                    next.insert((w, s, c));
                }
            }
            layer = next;
        }
    }
    let mut out: Vec<Vec<i64>> = forms.into_iter().collect();
    out.sort();
    out
}

/// Does `f` give height zero on every listed form?
pub fn satisfies_forms(table: &GroupTable, forms: &[Vec<i64>], f: &[u32]) -> bool {
    forms.iter().all(|form| {
        form.iter().zip(f).fold(0, |acc, (&c, &x)| table.add(acc, table.scale(c, x))) == 0
    })
}

//! Cross-checks of every polynomial evaluation against an independent
//! enumerator, collected into a machine-readable report.

use std::fmt::Display;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::battery::label;
use crate::budget::Budget;
use crate::enumerate::circuits::enumerate_circuits;
use crate::enumerate::colorings::{
    all_involutions, count_colorings_zaslavsky, count_group_colorings, count_xiota_colorings,
    zaslavsky_chromatic_subset,
};
use crate::enumerate::delta::{delta_image_stats, kernel_closed_form};
use crate::enumerate::flows::{count_flows, count_flows_closed_form, count_nz_flows_subset};
use crate::enumerate::tensions::{count_tensions, TensionCounts, TensionMode};
use crate::error::Result;
use crate::graph::{EdgeSubset, FrameRole, SignedGraph};
use crate::group::FiniteAbelianGroup;
use crate::io::{parse_graph_document, render_graph, GraphDocument};
use crate::matroid::{
    check_duality_ordered, check_duality_swapped, cycle_matroid, frame_matroid, joint_tutte, matroid_tutte,
    specialize_to_m1, specialize_to_m2, ExplicitMatroid, RankOracle, MAX_GROUND,
};
use crate::poly::TriPoly;
use crate::tutte::{
    nowhere_zero_tensions, recipe_evaluate, signed_tutte_dc, signed_tutte_subset, table1_point, Meaning,
    RecipeParams,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub graph: String,
    pub group: Option<String>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    fn from_records(graphs: usize, mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (&a.check, &a.graph, &a.group).cmp(&(&b.check, &b.graph, &b.group)));
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary { graphs, checks: records.len(), passed, failed: records.len() - passed };
        VerifyReport { summary, records }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub groups: Vec<FiniteAbelianGroup>,
    pub budget: Budget,
    /// Graphs with more edges are skipped.
    pub max_edges: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        let groups = ["Z2", "Z3", "Z4", "Z2xZ2"].iter().map(|s| s.parse().expect("group")).collect();
        VerifyOptions { groups, budget: Budget::default(), max_edges: 8 }
    }
}

struct Cell<'a> {
    graph: &'a str,
    group: Option<String>,
    out: Vec<CheckRecord>,
}

impl Cell<'_> {
    /// Record that every listed value agrees with the first one.
    fn agree<T: Display>(&mut self, check: &str, parts: Vec<(&str, Result<T>)>) {
        let rendered: Vec<(&str, std::result::Result<String, String>)> = parts
            .into_iter()
            .map(|(name, v)| (name, v.map(|x| x.to_string()).map_err(|e| format!("error: {e}"))))
            .collect();
        let pass = rendered.iter().all(|(_, v)| v.is_ok())
            && rendered.windows(2).all(|w| w[0].1 == w[1].1);
        let show = |(name, v): &(&str, std::result::Result<String, String>)| match v {
            Ok(s) | Err(s) => format!("{name}={s}"),
        };
        let (first, rest) = rendered.split_first().expect("at least one value");
        self.out.push(CheckRecord {
            check: check.to_string(),
            graph: self.graph.to_string(),
            group: self.group.clone(),
            expected: show(first),
            actual: rest.iter().map(show).collect::<Vec<_>>().join(", "),
            pass,
        });
    }

    fn holds(&mut self, check: &str, what: &str, value: Result<bool>) {
        self.agree(check, vec![("expected", Ok(true)), (what, value)]);
    }
}

fn big(n: u128) -> BigInt {
    BigInt::from(n)
}

fn pow(base: u64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

fn graph_checks(g: &SignedGraph, name: &str, budget: Budget) -> Vec<CheckRecord> {
    let mut cell = Cell { graph: name, group: None, out: Vec::new() };
    let t = signed_tutte_subset(g);

    let doc = GraphDocument::new(g.clone());
    cell.holds("graph.roundtrip", "parse(render)", parse_graph_document(&render_graph(&doc)).map(|d| d == doc));
    cell.holds("graph.classify", "frame roles match circuits", classify_matches_circuits(g));

    cell.agree("poly.dc-vs-subset", vec![("subset", Ok(t.clone())), ("dc", Ok(signed_tutte_dc(g)))]);
    let switched: Result<Vec<TriPoly>> =
        (0..g.vertex_count()).map(|v| g.switch(v).map(|s| signed_tutte_subset(&s))).collect();
    cell.holds("poly.switching", "switched polynomials equal", switched.map(|s| s.iter().all(|p| *p == t)));
    let reversed: Vec<usize> = (0..g.edge_count()).rev().collect();
    cell.agree(
        "poly.edge-order",
        vec![("original", Ok(t.clone())), ("reversed", g.permute_edges(&reversed).map(|h| signed_tutte_subset(&h)))],
    );

    if g.edge_count() <= MAX_GROUND {
        let (m, f) = (cycle_matroid(g), frame_matroid(g));
        let s = joint_tutte(&m, &f);
        let via_m = s.as_ref().map_err(Clone::clone).and_then(|s| specialize_to_m1(s, m.full_rank()));
        let via_f = s.as_ref().map_err(Clone::clone).and_then(|s| specialize_to_m2(s, f.full_rank()));
        cell.agree("matroid.specialize-cycle", vec![("direct", Ok(matroid_tutte(&m))), ("joint", via_m)]);
        cell.agree("matroid.specialize-frame", vec![("direct", Ok(matroid_tutte(&f))), ("joint", via_f)]);
        cell.holds("matroid.duality-swapped", "identity", check_duality_swapped(&m, &f));
        cell.holds("matroid.duality-ordered", "identity", check_duality_ordered(&m, &f));
    }

    for n in 1..=2u64 {
        let point = table1_point(&Meaning::ProperColorings { n }, &FiniteAbelianGroup::trivial(), g);
        cell.agree(
            &format!("colorings.zaslavsky-{}", 2 * n + 1),
            vec![
                ("eval", point.and_then(|p| p.count(&t))),
                ("brute", count_colorings_zaslavsky(g, n, false, budget).map(big)),
                ("subset", Ok(zaslavsky_chromatic_subset(g, 2 * n + 1, false))),
            ],
        );
        let point = table1_point(&Meaning::ProperNonzeroColorings { n }, &FiniteAbelianGroup::trivial(), g);
        cell.agree(
            &format!("colorings.zaslavsky-nonzero-{}", 2 * n),
            vec![
                ("eval", point.and_then(|p| p.count(&t))),
                ("brute", count_colorings_zaslavsky(g, n, true, budget).map(big)),
                ("subset", Ok(zaslavsky_chromatic_subset(g, 2 * n, true))),
            ],
        );
    }
    for iota in all_involutions(3) {
        let fixed = iota.iter().enumerate().filter(|&(a, &b)| a == b).count() as u64;
        let point = table1_point(&Meaning::InvolutionColorings { size: 3, fixed }, &FiniteAbelianGroup::trivial(), g);
        cell.agree(
            &format!("colorings.involution-{iota:?}"),
            vec![("eval", point.and_then(|p| p.count(&t))), ("brute", count_xiota_colorings(g, 3, &iota, budget).map(big))],
        );
    }
    cell.out
}

fn classify_matches_circuits(g: &SignedGraph) -> Result<bool> {
    let circuits: Vec<EdgeSubset> = enumerate_circuits(g)?.iter().map(|c| c.edge_set()).collect();
    for e in 0..g.edge_count() {
        let role = g.classify_edge(e)?.frame_role;
        let in_some = circuits.iter().any(|c| c.contains(e));
        let alone = circuits.contains(&EdgeSubset::singleton(e));
        let expected = if alone {
            FrameRole::Loop
        } else if in_some {
            FrameRole::Ordinary
        } else {
            FrameRole::Coloop
        };
        if role != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn group_checks(g: &SignedGraph, name: &str, group: &FiniteAbelianGroup, budget: Budget) -> Vec<CheckRecord> {
    let mut cell = Cell { graph: name, group: Some(group.to_string()), out: Vec::new() };
    let t = signed_tutte_subset(g);
    let eval = |meaning: Meaning| table1_point(&meaning, group, g).and_then(|p| p.count(&t));
    let recipe = |p: RecipeParams| recipe_evaluate(g, &p).and_then(crate::tutte::to_count);
    let p = g.profile();
    let (order, two_g) = (group.order(), group.two_g_order());

    let nz_flows = count_flows(g, group, true, budget).map(big);
    cell.agree(
        "flows.nowhere-zero",
        vec![
            ("eval", eval(Meaning::NowhereZeroFlows)),
            ("brute", nz_flows.clone()),
            ("subset", count_nz_flows_subset(g, group)),
            ("recipe", recipe(RecipeParams::flows(group))),
        ],
    );
    cell.agree(
        "flows.all",
        vec![("closed-form", Ok(count_flows_closed_form(g, group))), ("brute", count_flows(g, group, false, budget).map(big))],
    );
    cell.agree(
        "colorings.group",
        vec![("eval", eval(Meaning::ProperGroupColorings)), ("brute", count_group_colorings(g, group, budget).map(big))],
    );

    let brute = count_tensions(g, group, TensionMode::Brute, budget);
    let basis = count_tensions(g, group, TensionMode::Basis, budget);
    let field = |f: fn(&TensionCounts) -> u128| brute.as_ref().map(|c| big(f(c))).map_err(Clone::clone);
    cell.agree(
        "tensions.all",
        vec![
            ("closed-form", Ok(pow(order, g.vertex_count() - p.balanced))),
            ("brute", field(|c| c.tensions)),
            ("recipe", recipe(RecipeParams::tensions(group))),
        ],
    );
    cell.agree(
        "tensions.potential-differences",
        vec![
            ("closed-form", Ok(pow(order, g.vertex_count() - p.components) * pow(two_g, p.unbalanced))),
            ("brute", field(|c| c.potential_differences)),
            ("recipe", recipe(RecipeParams::potential_differences(group))),
        ],
    );
    cell.agree(
        "tensions.nowhere-zero-potential-differences",
        vec![
            ("eval", eval(Meaning::NowhereZeroPotentialDifferences)),
            ("brute", field(|c| c.nowhere_zero_potential_differences)),
            ("recipe", recipe(RecipeParams::nowhere_zero_potential_differences(group))),
        ],
    );
    cell.agree(
        "tensions.nowhere-zero",
        vec![("eval", nowhere_zero_tensions(g, group)), ("brute", field(|c| c.nowhere_zero_tensions))],
    );
    cell.holds(
        "tensions.basis-enumeration",
        "basis counts equal brute counts",
        match (&brute, &basis) {
            (Ok(a), Ok(b)) => Ok(a == b),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        },
    );
    if let Ok(counts) = &brute {
        coset_checks(&mut cell, g, group, counts);
    }

    let stats = delta_image_stats(g, group, budget);
    cell.agree(
        "delta.kernel",
        vec![
            ("closed-form", Ok(big(kernel_closed_form(g, group)))),
            ("brute", stats.as_ref().map(|s| big(s.kernel_size)).map_err(Clone::clone)),
        ],
    );
    cell.holds(
        "delta.image",
        "image equals potential differences",
        stats.map(|s| s.image_is_potential_differences && s.kernel_size * s.image_size == s.colorings),
    );
    cell.out
}

/// Per component: the zero class counts nowhere-zero potential
/// differences, every other class the off-coset evaluation.
fn coset_checks(cell: &mut Cell, g: &SignedGraph, group: &FiniteAbelianGroup, counts: &TensionCounts) {
    for comp in &counts.components {
        let sub = match g.induced(&comp.vertices) {
            Ok((sub, _)) => sub,
            Err(e) => {
                cell.holds("tensions.coset", "component", Err(e));
                continue;
            }
        };
        let t = signed_tutte_subset(&sub);
        for (rep, &count) in &comp.by_coset {
            let meaning = if group.is_zero(rep) { Meaning::NowhereZeroPotentialDifferences } else { Meaning::TensionsOffCoset };
            let check = format!("tensions.coset-{rep}-component-{}", comp.vertices[0]);
            cell.agree(
                &check,
                vec![("eval", table1_point(&meaning, group, &sub).and_then(|p| p.count(&t))), ("brute", Ok(big(count)))],
            );
        }
    }
}

/// Every check for one graph over every group.
pub fn verify_graph(g: &SignedGraph, name: Option<&str>, options: &VerifyOptions) -> VerifyReport {
    verify_graphs(&[(name.map(str::to_string).unwrap_or_else(|| label(g)), g.clone())], options)
}

/// Every check for every named graph, fanned out over graph and group cells.
pub fn verify_graphs(graphs: &[(String, SignedGraph)], options: &VerifyOptions) -> VerifyReport {
    let selected: Vec<&(String, SignedGraph)> =
        graphs.iter().filter(|(_, g)| g.edge_count() <= options.max_edges).collect();
    let cells: Vec<(usize, Option<usize>)> = (0..selected.len())
        .flat_map(|i| std::iter::once((i, None)).chain((0..options.groups.len()).map(move |j| (i, Some(j)))))
        .collect();
    let records: Vec<CheckRecord> = cells
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let (name, g) = selected[i];
            match j {
                None => graph_checks(g, name, options.budget),
                Some(j) => group_checks(g, name, &options.groups[j], options.budget),
            }
        })
        .collect();
    VerifyReport::from_records(selected.len(), records)
}

/// Battery graphs are named by index and edge list.
pub fn verify_battery(graphs: &[SignedGraph], options: &VerifyOptions) -> VerifyReport {
    let named: Vec<(String, SignedGraph)> =
        graphs.iter().enumerate().map(|(i, g)| (format!("{i:04} {}", label(g)), g.clone())).collect();
    verify_graphs(&named, options)
}

/// Rank axioms of an explicit matroid.
pub fn verify_matroid(m: &ExplicitMatroid, name: &str) -> VerifyReport {
    let verdict = match m.validate() {
        Ok(()) => "valid".to_string(),
        Err(v) => v.to_string(),
    };
    let record = CheckRecord {
        check: "matroid.axioms".into(),
        graph: name.to_string(),
        group: None,
        expected: "valid".into(),
        pass: verdict == "valid",
        actual: verdict,
    };
    VerifyReport::from_records(0, vec![record])
}

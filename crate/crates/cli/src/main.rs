use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sigtutte::battery::{battery, label};
use sigtutte::budget::Budget;
use sigtutte::enumerate::colorings::{count_colorings_zaslavsky, count_group_colorings};
use sigtutte::enumerate::flows::{count_flows, count_flows_closed_form};
use sigtutte::enumerate::tensions::{count_tensions, TensionMode};
use sigtutte::io::{parse_graph_as, parse_matroid, GraphDocument, GraphFormat};
use sigtutte::matroid::joint_tutte;
use sigtutte::tutte::{nowhere_zero_tensions, signed_tutte_dc, signed_tutte_subset, table1_point, Meaning};
use sigtutte::verify::{verify_battery, verify_graph, verify_matroid, VerifyOptions, VerifyReport};
use sigtutte::{FiniteAbelianGroup, Rational, SignedGraph, TriPoly};

/// Signed Tutte polynomials and the counts they encode.
#[derive(Parser)]
#[command(name = "sigtutte", version)]
struct Cli {
    /// Maximum number of candidates a brute-force scan may visit
    /// (default from SIGTUTTE_BUDGET, else 100000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the signed Tutte polynomial of a graph file.
    Poly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Evaluate the signed Tutte polynomial at a rational point.
    Eval {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Count flows, colorings, tensions or potential differences.
    Count(CountArgs),
    /// Print the joint Tutte polynomial of two matroid files on one ground set.
    Joint { first: PathBuf, second: PathBuf },
    /// Cross-check every evaluation against brute force.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Subset,
    Dc,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Flows,
    Colorings,
    Ncolorings,
    Tensions,
    Pd,
}

#[derive(Args)]
struct CountArgs {
    file: PathBuf,
    #[arg(value_enum)]
    what: What,
    /// Group such as Z3 or Z2xZ4.
    #[arg(long)]
    group: Option<FiniteAbelianGroup>,
    /// Color bound for Zaslavsky colorings.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    nowhere_zero: bool,
    /// Count by enumeration only.
    #[arg(long, conflicts_with = "both")]
    brute: bool,
    /// Print both the evaluation and the enumeration.
    #[arg(long)]
    both: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph or matroid file.
    #[arg(required_unless_present = "battery", conflicts_with = "battery")]
    file: Option<PathBuf>,
    /// Every graph with at most three vertices and `--max-edges` edges.
    #[arg(long)]
    battery: bool,
    #[arg(long, value_delimiter = ',', default_value = "Z2,Z3,Z4,Z2xZ2")]
    groups: Vec<FiniteAbelianGroup>,
    #[arg(long, default_value_t = 4)]
    max_edges: usize,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<GraphDocument> {
    let text = read(path)?;
    parse_graph_as(&text, GraphFormat::from_path(path)).with_context(|| format!("parsing {}", path.display()))
}

fn diff(a: &TriPoly, b: &TriPoly) -> String {
    let mut lines = Vec::new();
    let keys: std::collections::BTreeSet<_> = a.terms().map(|(e, _)| *e).chain(b.terms().map(|(e, _)| *e)).collect();
    for e in keys {
        let (x, y) = (a.coefficient(e), b.coefficient(e));
        if x != y {
            lines.push(format!("  X^{} Y^{} Z^{}: subset {x}, dc {y}", e[0], e[1], e[2]));
        }
    }
    lines.join("\n")
}

fn cmd_poly(path: &Path, method: Method) -> Result<()> {
    let g = load_graph(path)?.graph;
    let t = match method {
        Method::Subset => signed_tutte_subset(&g),
        Method::Dc => signed_tutte_dc(&g),
        Method::Both => {
            let (s, d) = (signed_tutte_subset(&g), signed_tutte_dc(&g));
            if s != d {
                bail!("subset expansion and deletion-contraction disagree:\n{}", diff(&s, &d));
            }
            s
        }
    };
    println!("{t}");
    Ok(())
}

fn group_of(args: &CountArgs) -> Result<&FiniteAbelianGroup> {
    args.group.as_ref().context("this count needs --group")
}

fn print_counts(eval: Option<String>, brute: Option<String>) {
    match (eval, brute) {
        (Some(e), Some(b)) => println!("evaluation: {e}\nbrute force: {b}"),
        (Some(v), None) | (None, Some(v)) => println!("{v}"),
        (None, None) => {}
    }
}

fn cmd_count(args: &CountArgs, budget: Budget) -> Result<()> {
    let g = load_graph(&args.file)?.graph;
    let t = signed_tutte_subset(&g);
    let (want_eval, want_brute) = (!args.brute, args.brute || args.both);
    let point = |m: Meaning, grp: &FiniteAbelianGroup| -> Result<String> {
        Ok(table1_point(&m, grp, &g)?.count(&t)?.to_string())
    };
    let (eval, brute) = match args.what {
        What::Flows => {
            let grp = group_of(args)?;
            let eval = if args.nowhere_zero {
                point(Meaning::NowhereZeroFlows, grp)?
            } else {
                count_flows_closed_form(&g, grp).to_string()
            };
            let brute = want_brute.then(|| count_flows(&g, grp, args.nowhere_zero, budget)).transpose()?;
            (eval, brute.map(|b| b.to_string()))
        }
        What::Colorings | What::Ncolorings => {
            let nonzero = args.what == What::Ncolorings;
            match (args.n, args.group.as_ref()) {
                (Some(n), None) => {
                    let m = if nonzero { Meaning::ProperNonzeroColorings { n } } else { Meaning::ProperColorings { n } };
                    let eval = point(m, &FiniteAbelianGroup::trivial())?;
                    let brute = want_brute.then(|| count_colorings_zaslavsky(&g, n, nonzero, budget)).transpose()?;
                    (eval, brute.map(|b| b.to_string()))
                }
                (None, Some(grp)) if !nonzero => {
                    let eval = point(Meaning::ProperGroupColorings, grp)?;
                    let brute = want_brute.then(|| count_group_colorings(&g, grp, budget)).transpose()?;
                    (eval, brute.map(|b| b.to_string()))
                }
                _ => bail!("colorings need exactly one of --n or --group; ncolorings needs --n"),
            }
        }
        What::Tensions | What::Pd => return count_tensions_cmd(args, &g, &t, budget),
    };
    print_counts(want_eval.then_some(eval), brute);
    Ok(())
}

fn count_tensions_cmd(args: &CountArgs, g: &SignedGraph, t: &TriPoly, budget: Budget) -> Result<()> {
    let grp = group_of(args)?;
    let p = g.profile();
    let (want_eval, want_brute) = (!args.brute, args.brute || args.both);
    let pd = args.what == What::Pd;
    let eval = match (pd, args.nowhere_zero) {
        (true, true) => table1_point(&Meaning::NowhereZeroPotentialDifferences, grp, g)?.count(t)?.to_string(),
        (false, true) => nowhere_zero_tensions(g, grp)?.to_string(),
        (true, false) => {
            let v = power(grp.order(), g.vertex_count() - p.components)? * power(grp.two_g_order(), p.unbalanced)?;
            v.to_string()
        }
        (false, false) => power(grp.order(), g.vertex_count() - p.balanced)?.to_string(),
    };
    let counts = if want_brute { Some(count_tensions(g, grp, TensionMode::Brute, budget)?) } else { None };
    let brute = counts.as_ref().map(|c| {
        match (pd, args.nowhere_zero) {
            (true, true) => c.nowhere_zero_potential_differences,
            (false, true) => c.nowhere_zero_tensions,
            (true, false) => c.potential_differences,
            (false, false) => c.tensions,
        }
        .to_string()
    });
    print_counts(want_eval.then_some(eval), brute);
    if !pd && args.nowhere_zero && p.components > 1 {
        print_coset_tables(g, grp, counts.as_ref(), want_eval)?;
    }
    Ok(())
}

fn power(base: u64, exp: usize) -> Result<u128> {
    (base as u128).checked_pow(exp as u32).context("count does not fit in 128 bits")
}

/// Per component: nowhere-zero tensions whose unbalanced cycle sums lie in
/// each coset of `2G`.
fn print_coset_tables(
    g: &SignedGraph,
    grp: &FiniteAbelianGroup,
    counts: Option<&sigtutte::enumerate::TensionCounts>,
    want_eval: bool,
) -> Result<()> {
    let comps = g.components(g.full_set());
    for (c, vertices) in comps.vertex_sets().into_iter().enumerate() {
        let kind = if comps.unbalanced[c] { "unbalanced" } else { "balanced" };
        println!("component {c} vertices {vertices:?} ({kind})");
        let (sub, _) = g.induced(&vertices)?;
        let t = signed_tutte_subset(&sub);
        for rep in grp.coset_reps() {
            let mut cols = vec![format!("  coset {rep}+2G:")];
            if want_eval {
                let m = if grp.is_zero(&rep) { Meaning::NowhereZeroPotentialDifferences } else { Meaning::TensionsOffCoset };
                cols.push(format!("evaluation {}", table1_point(&m, grp, &sub)?.count(&t)?));
            }
            if let Some(counts) = counts {
                let brute = counts.components[c].by_coset.get(&rep).copied().unwrap_or(0);
                cols.push(format!("brute force {brute}"));
            }
            println!("{}", cols.join(" "));
        }
    }
    Ok(())
}

fn cmd_joint(first: &Path, second: &Path) -> Result<()> {
    let m1 = parse_matroid(&read(first)?).with_context(|| format!("parsing {}", first.display()))?;
    let m2 = parse_matroid(&read(second)?).with_context(|| format!("parsing {}", second.display()))?;
    for (m, path) in [(&m1, first), (&m2, second)] {
        m.validate().with_context(|| format!("{} is not a matroid", path.display()))?;
    }
    println!("{}", joint_tutte(&m1, &m2)?);
    Ok(())
}

fn looks_like_matroid(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("ground"))
}

fn cmd_verify(args: &VerifyArgs, budget: Budget) -> Result<bool> {
    let options = VerifyOptions { groups: args.groups.clone(), budget, max_edges: args.max_edges };
    let report: VerifyReport = if args.battery {
        verify_battery(&battery(3, args.max_edges), &options)
    } else {
        let path = args.file.as_ref().expect("clap requires a file");
        let text = read(path)?;
        let name = path.display().to_string();
        if looks_like_matroid(&text) {
            let m = parse_matroid(&text).with_context(|| format!("parsing {name}"))?;
            verify_matroid(&m, &name)
        } else {
            let doc = parse_graph_as(&text, GraphFormat::from_path(path)).with_context(|| format!("parsing {name}"))?;
            let options = VerifyOptions { max_edges: usize::MAX, ..options };
            verify_graph(&doc.graph, Some(doc.name.as_deref().unwrap_or(&label(&doc.graph))), &options)
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for r in report.failures() {
            let group = r.group.as_deref().map(|g| format!(" [{g}]")).unwrap_or_default();
            println!("FAIL {} {}{group}: {} vs {}", r.check, r.graph, r.expected, r.actual);
        }
        let s = &report.summary;
        println!("{} graphs, {} checks, {} passed, {} failed", s.graphs, s.checks, s.passed, s.failed);
    }
    Ok(report.all_passed())
}

fn run(cli: Cli) -> Result<bool> {
    let budget = cli.budget.map(Budget).unwrap_or_else(Budget::from_env);
    match &cli.command {
        Command::Poly { file, method } => cmd_poly(file, *method)?,
        Command::Eval { file, x, y, z } => {
            let g = load_graph(file)?.graph;
            println!("{}", signed_tutte_subset(&g).eval(x, y, z));
        }
        Command::Count(args) => cmd_count(args, budget)?,
        Command::Joint { first, second } => cmd_joint(first, second)?,
        Command::Verify(args) => return cmd_verify(args, budget),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

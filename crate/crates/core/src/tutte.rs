//! The trivariate Tutte polynomial of a signed graph: subset expansion,
//! deletion-contraction, and the evaluations it encodes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, GraphRole, Sign, SignedGraph};
use crate::group::FiniteAbelianGroup;
use crate::poly::{integer, pow_rational, pow_signed, Rational, TriPoly, Var};
use crate::subsets::{expand_binomials, histogram};

/// `sum_A (X-1)^{k(A)-k} (Y-1)^{|A|-|V|+k_b(A)} (Z-1)^{k_u(A)}`.
pub fn signed_tutte_subset(g: &SignedGraph) -> TriPoly {
    let n = g.vertex_count();
    let k = g.profile().components;
    let h = histogram(g.edge_count(), |a| {
        let p = g.component_profile(a);
        [(p.components - k) as u32, (a.len() + p.balanced - n) as u32, p.unbalanced as u32]
    });
    expand_binomials(&h)
}

/// `1 + (Z-1)(1 + Y + ... + Y^{l-1})` for a vertex carrying `l` negative
/// loops.
pub fn bouquet_polynomial(loops: usize) -> TriPoly {
    if loops == 0 {
        return TriPoly::one();
    }
    let mut geometric = TriPoly::zero();
    for i in 0..loops as u32 {
        geometric += &TriPoly::monomial(1, [0, i, 0]);
    }
    &TriPoly::one() + &(&TriPoly::pow_binomial(Var::Z, 1) * &geometric)
}

/// Deletion-contraction on the lowest-index non-loop edge, switching first
/// if that edge is negative.
pub fn signed_tutte_dc(g: &SignedGraph) -> TriPoly {
    dc(g.clone())
}

fn dc(g: SignedGraph) -> TriPoly {
    if let Some(e) = g.edges().iter().position(|e| !e.is_loop()) {
        let edge = g.edges()[e];
        let g = if edge.sign == Sign::Negative { g.switch(edge.u).expect("endpoint") } else { g };
        let class = g.classify_edge(e).expect("edge");
        let contracted = g.contract(e).expect("positive edge");
        return match (class.graph_role, class.circuit_path_edge) {
            (GraphRole::Bridge, true) => {
                let deleted = g.delete(e).expect("edge");
                &dc(contracted) + &(&TriPoly::pow_binomial(Var::X, 1) * &dc(deleted))
            }
            (GraphRole::Bridge, false) => &TriPoly::var(Var::X) * &dc(contracted),
            _ => {
                let deleted = g.delete(e).expect("edge");
                &dc(contracted) + &dc(deleted)
            }
        };
    }
    if let Some(e) = g.edges().iter().position(|e| e.sign == Sign::Positive) {
        return &TriPoly::var(Var::Y) * &dc(g.delete(e).expect("edge"));
    }
    let mut loops = vec![0usize; g.vertex_count()];
    for e in g.edges() {
        loops[e.u] += 1;
    }
    loops.into_iter().fold(TriPoly::one(), |acc, l| &acc * &bouquet_polynomial(l))
}

/// `u^{k} T(u+1, v+1, 1/u+1)`.
pub fn dichromatic(g: &SignedGraph, u: &Rational, v: &Rational) -> Result<Rational> {
    if u.is_zero() {
        return Err(Error::ZeroU);
    }
    let t = signed_tutte_subset(g);
    let one = Rational::one();
    let k = g.profile().components as u32;
    Ok(pow_rational(u, k) * t.eval(&(u + &one), &(v + &one), &(u.recip() + &one)))
}

/// `sum_A u^{k_b(A)} v^{|A|-|V|+k_b(A)}`.
pub fn dichromatic_subset(g: &SignedGraph, u: &Rational, v: &Rational) -> Rational {
    let n = g.vertex_count();
    EdgeSubset::all(g.edge_count())
        .map(|a| {
            let kb = g.component_profile(a).balanced;
            pow_rational(u, kb as u32) * pow_rational(v, (a.len() + kb - n) as u32)
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecipeParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RecipeParams {
    pub fn from_integers(v: [i64; 6]) -> Self {
        let [alpha, beta, gamma, x, y, z] = v.map(integer);
        RecipeParams { alpha, beta, gamma, x, y, z }
    }

    /// Nowhere-zero flows.
    pub fn flows(group: &FiniteAbelianGroup) -> Self {
        let (g, g2) = (group.order() as i64, group.two_g_order() as i64);
        RecipeParams {
            alpha: integer(1),
            beta: integer(-1),
            gamma: integer(-1),
            x: integer(0),
            y: integer(g - 1),
            z: Rational::new(BigInt::from(g), BigInt::from(g2)) - integer(1),
        }
    }

    /// All potential differences.
    pub fn potential_differences(group: &FiniteAbelianGroup) -> Self {
        let (g, g2) = (group.order() as i64, group.two_g_order() as i64);
        RecipeParams::from_integers([0, 1, g2, g, 1, g2])
    }

    /// All tensions.
    pub fn tensions(group: &FiniteAbelianGroup) -> Self {
        let g = group.order() as i64;
        RecipeParams::from_integers([0, 1, g, g, 1, g])
    }

    /// Nowhere-zero potential differences.
    pub fn nowhere_zero_potential_differences(group: &FiniteAbelianGroup) -> Self {
        let (g, g2) = (group.order() as i64, group.two_g_order() as i64);
        RecipeParams::from_integers([-1, 1, g2, g - 1, 0, g2 - 1])
    }
}

struct Ranks {
    cycle: usize,
    frame: usize,
}

fn ranks(g: &SignedGraph, a: EdgeSubset) -> Ranks {
    let p = g.component_profile(a);
    Ranks { cycle: g.vertex_count() - p.components, frame: g.vertex_count() - p.balanced }
}

/// `alpha^{r_M(E)} beta^{|E|-r_F(E)} gamma^{r_F(E)-r_M(E)} T(x/alpha, y/beta, z/gamma)`.
pub fn recipe_via_polynomial(g: &SignedGraph, p: &RecipeParams) -> Result<Rational> {
    if p.alpha.is_zero() || p.beta.is_zero() || p.gamma.is_zero() {
        return Err(Error::InvalidArgument("polynomial path needs alpha, beta, gamma nonzero".into()));
    }
    let t = signed_tutte_subset(g);
    let full = ranks(g, g.full_set());
    let m = g.edge_count();
    let value = t.eval(&(&p.x / &p.alpha), &(&p.y / &p.beta), &(&p.z / &p.gamma));
    Ok(pow_rational(&p.alpha, full.cycle as u32)
        * pow_rational(&p.beta, (m - full.frame) as u32)
        * pow_rational(&p.gamma, (full.frame - full.cycle) as u32)
        * value)
}

/// The same invariant as a direct sum over edge subsets; valid when alpha
/// or beta vanish.
pub fn recipe_via_subsets(g: &SignedGraph, p: &RecipeParams) -> Result<Rational> {
    if p.gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    let full = ranks(g, g.full_set());
    let m = g.edge_count() as i64;
    let (dx, dy, dz) = (&p.x - &p.alpha, &p.y - &p.beta, &p.z - &p.gamma);
    let mut total = Rational::zero();
    for a in EdgeSubset::all(g.edge_count()) {
        let r = ranks(g, a);
        let (rm, rf, size) = (r.cycle as i64, r.frame as i64, a.len() as i64);
        let (rme, rfe) = (full.cycle as i64, full.frame as i64);
        let factors = [
            (&p.alpha, rm),
            (&p.beta, m - size + rf - rfe),
            (&p.gamma, rfe - rf - (rme - rm)),
            (&dx, rme - rm),
            (&dy, size - rf),
            (&dz, rf - rm),
        ];
        let mut term = Rational::one();
        for (base, e) in factors {
            term *= pow_signed(base, e).ok_or(Error::ZeroGamma)?;
        }
        total += term;
    }
    Ok(total)
}

pub fn recipe_evaluate(g: &SignedGraph, p: &RecipeParams) -> Result<Rational> {
    if p.gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    if p.alpha.is_zero() || p.beta.is_zero() {
        recipe_via_subsets(g, p)
    } else {
        recipe_via_polynomial(g, p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meaning {
    NowhereZeroFlows,
    ProperGroupColorings,
    NowhereZeroPotentialDifferences,
    /// Nowhere-zero tensions whose unbalanced-cycle sums avoid `2G`.
    TensionsOffCoset,
    Dichromatic { u: Rational, v: Rational },
    ProperColorings { n: u64 },
    ProperNonzeroColorings { n: u64 },
    /// Colorings by a set of `size` colors under an involution with `fixed`
    /// fixed points.
    InvolutionColorings { size: u64, fixed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    pub prefactor: Rational,
    pub meaning: Meaning,
}

impl EvaluationPoint {
    pub fn evaluate(&self, t: &TriPoly) -> Rational {
        &self.prefactor * t.eval(&self.x, &self.y, &self.z)
    }

    /// The evaluation as an exact nonnegative integer.
    pub fn count(&self, t: &TriPoly) -> Result<BigInt> {
        to_count(self.evaluate(t))
    }
}

pub(crate) fn to_count(value: Rational) -> Result<BigInt> {
    if !value.is_integer() || value < Rational::zero() {
        return Err(Error::Invariant(format!("count evaluated to {value}, not a nonnegative integer")));
    }
    Ok(value.to_integer())
}

fn sign_power(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        integer(1)
    } else {
        integer(-1)
    }
}

fn ratio(n: u64, d: u64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The point and prefactor at which `T` counts `meaning` for `g`.
pub fn table1_point(meaning: &Meaning, group: &FiniteAbelianGroup, g: &SignedGraph) -> Result<EvaluationPoint> {
    let p = g.profile();
    let (n, m, k) = (g.vertex_count(), g.edge_count(), p.components);
    let order = group.order();
    let two_g = group.two_g_order();
    let rank = n - k;
    let one = integer(1);
    let (x, y, z, prefactor) = match meaning {
        Meaning::NowhereZeroFlows => {
            (integer(0), &one - int(order), &one - ratio(order, two_g), sign_power(m + k - n))
        }
        Meaning::ProperGroupColorings => (
            &one - int(order),
            integer(0),
            &one - ratio(1, two_g),
            sign_power(rank) * pow_rational(&int(order), k as u32),
        ),
        Meaning::NowhereZeroPotentialDifferences => (
            &one - int(order),
            integer(0),
            &one - ratio(1, two_g),
            sign_power(rank) * pow_rational(&int(two_g), p.unbalanced as u32),
        ),
        Meaning::TensionsOffCoset => (
            &one - int(order),
            integer(0),
            one.clone(),
            sign_power(rank) * pow_rational(&int(two_g), p.unbalanced as u32),
        ),
        Meaning::Dichromatic { u, v } => {
            if u.is_zero() {
                return Err(Error::ZeroU);
            }
            (u + &one, v + &one, u.recip() + &one, pow_rational(u, k as u32))
        }
        Meaning::ProperColorings { n: colors } => (
            -int(2 * colors),
            integer(0),
            ratio(2 * colors, 2 * colors + 1),
            sign_power(rank) * pow_rational(&int(2 * colors + 1), k as u32),
        ),
        Meaning::ProperNonzeroColorings { n: colors } => (
            &one - int(2 * colors),
            integer(0),
            one.clone(),
            sign_power(rank) * pow_rational(&int(2 * colors), k as u32),
        ),
        Meaning::InvolutionColorings { size, fixed } => {
            if *size == 0 {
                return Err(Error::InvalidArgument("color set must be nonempty".into()));
            }
            (
                &one - int(*size),
                integer(0),
                &one - ratio(*fixed, *size),
                sign_power(rank) * pow_rational(&int(*size), k as u32),
            )
        }
    };
    Ok(EvaluationPoint { x, y, z, prefactor, meaning: meaning.clone() })
}

/// Nowhere-zero tensions of a connected unbalanced signed graph from two
/// evaluations of its polynomial.
pub fn nowhere_zero_tensions_connected(g: &SignedGraph, t: &TriPoly, group: &FiniteAbelianGroup) -> Result<BigInt> {
    let p = g.profile();
    if p.components != 1 || p.unbalanced != 1 {
        return Err(Error::InvalidArgument("graph must be connected and unbalanced".into()));
    }
    let (order, two_g) = (group.order(), group.two_g_order());
    let one = integer(1);
    let x = &one - int(order);
    let first = t.eval(&x, &integer(0), &(&one - ratio(1, two_g)));
    let second = t.eval(&x, &integer(0), &one);
    let value = sign_power(g.vertex_count() - 1)
        * int(two_g)
        * (first + (ratio(order, two_g) - &one) * second);
    to_count(value)
}

/// Nowhere-zero tensions of any signed graph, multiplying per-component
/// evaluations.
pub fn nowhere_zero_tensions(g: &SignedGraph, group: &FiniteAbelianGroup) -> Result<BigInt> {
    let comps = g.components(g.full_set());
    let mut total = BigInt::one();
    for (c, vertices) in comps.vertex_sets().into_iter().enumerate() {
        let (sub, _) = g.induced(&vertices)?;
        let t = signed_tutte_subset(&sub);
        let count = if comps.unbalanced[c] {
            nowhere_zero_tensions_connected(&sub, &t, group)?
        } else {
            table1_point(&Meaning::NowhereZeroPotentialDifferences, group, &sub)?.count(&t)?
        };
        total *= count;
    }
    Ok(total)
}

//! Matroids given by rank functions, and the joint Tutte polynomial of a
//! pair of matroids on a common ground set.

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, SignedGraph};
use crate::poly::{Fraction, TriPoly, Var};
use crate::subsets::{expand_binomials, histogram};

/// Largest ground set for which rank tables are materialised.
pub const MAX_GROUND: usize = 20;

pub trait RankOracle: Sync {
    fn ground_size(&self) -> usize;
    fn rank(&self, a: EdgeSubset) -> usize;

    fn full_rank(&self) -> usize {
        self.rank(EdgeSubset::full(self.ground_size()))
    }
}

/// Rank `|V| - k(V, A)`; signs are ignored.
#[derive(Clone, Debug)]
pub struct CycleMatroid(pub SignedGraph);

/// Rank `|V| - k_b(V, A)`.
#[derive(Clone, Debug)]
pub struct FrameMatroid(pub SignedGraph);

pub fn cycle_matroid(g: &SignedGraph) -> CycleMatroid {
    CycleMatroid(g.clone())
}

pub fn frame_matroid(g: &SignedGraph) -> FrameMatroid {
    FrameMatroid(g.clone())
}

impl RankOracle for CycleMatroid {
    fn ground_size(&self) -> usize {
        self.0.edge_count()
    }
    fn rank(&self, a: EdgeSubset) -> usize {
        self.0.cycle_rank(a)
    }
}

impl RankOracle for FrameMatroid {
    fn ground_size(&self) -> usize {
        self.0.edge_count()
    }
    fn rank(&self, a: EdgeSubset) -> usize {
        self.0.frame_rank(a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("rank of the empty set is {0}, expected 0")]
    EmptySet(usize),
    #[error("monotonicity/unit increase: r({set:#b}) = {before} but r({set:#b} + element {element}) = {after}")]
    UnitIncrease { set: u64, element: usize, before: usize, after: usize },
    #[error("submodularity: r({a:#b}) + r({b:#b}) < r({a:#b} | {b:#b}) + r({a:#b} & {b:#b})")]
    Submodularity { a: u64, b: u64 },
}

/// A matroid stored as its full rank table, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitMatroid {
    ground_size: usize,
    ranks: Vec<u8>,
}

impl RankOracle for ExplicitMatroid {
    fn ground_size(&self) -> usize {
        self.ground_size
    }
    fn rank(&self, a: EdgeSubset) -> usize {
        self.ranks[a.bits() as usize] as usize
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

impl ExplicitMatroid {
    /// Table in bitmask order. Axioms are not checked here; see
    /// [`ExplicitMatroid::validate`].
    pub fn from_ranks(ground_size: usize, ranks: Vec<usize>) -> Result<Self> {
        check_ground(ground_size)?;
        if ranks.len() != 1 << ground_size {
            return Err(Error::InvalidArgument(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << ground_size
            )));
        }
        if let Some(&r) = ranks.iter().find(|&&r| r > ground_size) {
            return Err(Error::InvalidArgument(format!("rank {r} exceeds ground size {ground_size}")));
        }
        Ok(ExplicitMatroid { ground_size, ranks: ranks.into_iter().map(|r| r as u8).collect() })
    }

    pub fn from_oracle(m: &dyn RankOracle) -> Result<Self> {
        let n = m.ground_size();
        check_ground(n)?;
        let ranks = EdgeSubset::all(n).map(|a| m.rank(a) as u8).collect();
        Ok(ExplicitMatroid { ground_size: n, ranks })
    }

    /// Rank of `A` is the largest intersection of `A` with a basis. The
    /// resulting table is checked against the rank axioms.
    pub fn from_bases(ground_size: usize, bases: &[u64]) -> Result<Self> {
        check_ground(ground_size)?;
        let full = EdgeSubset::full(ground_size).bits();
        if bases.is_empty() {
            return Err(Error::InvalidArgument("no bases given".into()));
        }
        let r = bases[0].count_ones();
        for &b in bases {
            if b & !full != 0 {
                return Err(Error::InvalidArgument(format!("basis {b:#b} outside ground set")));
            }
            if b.count_ones() != r {
                return Err(Error::InvalidArgument("bases have different sizes".into()));
            }
        }
        let ranks = (0..=full)
            .map(|a| bases.iter().map(|b| (a & b).count_ones()).max().unwrap_or(0) as u8)
            .collect();
        let m = ExplicitMatroid { ground_size, ranks };
        m.validate()?;
        let mut listed: Vec<u64> = bases.to_vec();
        listed.sort_unstable();
        listed.dedup();
        let derived: Vec<u64> =
            (0..=full).filter(|&a| a.count_ones() == r && m.ranks[a as usize] as u32 == r).collect();
        if derived != listed {
            return Err(Error::InvalidArgument("basis list is not closed under exchange".into()));
        }
        Ok(m)
    }

    pub fn free(n: usize) -> Result<Self> {
        check_ground(n)?;
        ExplicitMatroid::from_ranks(n, (0..1u64 << n).map(|a| a.count_ones() as usize).collect())
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_ground(n)?;
        ExplicitMatroid::from_ranks(n, vec![0; 1 << n])
    }

    pub fn uniform(rank: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        ExplicitMatroid::from_ranks(n, (0..1u64 << n).map(|a| (a.count_ones() as usize).min(rank)).collect())
    }

    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.ranks.iter().map(|&r| r as usize)
    }

    pub fn validate(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.ground_size;
        let r = |a: u64| self.ranks[a as usize] as usize;
        if r(0) != 0 {
            return Err(AxiomViolation::EmptySet(r(0)));
        }
        for a in 0..1u64 << n {
            for e in 0..n {
                if a >> e & 1 == 1 {
                    continue;
                }
                let (before, after) = (r(a), r(a | 1 << e));
                if after < before || after > before + 1 {
                    return Err(AxiomViolation::UnitIncrease { set: a, element: e, before, after });
                }
            }
        }
        // with unit increase, submodularity reduces to the local form
        for a in 0..1u64 << n {
            for e in 0..n {
                if a >> e & 1 == 1 {
                    continue;
                }
                for f in e + 1..n {
                    if a >> f & 1 == 1 {
                        continue;
                    }
                    let (ae, af) = (a | 1 << e, a | 1 << f);
                    if r(ae) + r(af) < r(ae | af) + r(a) {
                        return Err(AxiomViolation::Submodularity { a: ae, b: af });
                    }
                }
            }
        }
        Ok(())
    }

    /// Minimal dependent sets, in bitmask order.
    pub fn circuits(&self) -> Vec<EdgeSubset> {
        circuits(self)
    }
}

/// `r*(A) = r(E \ A) + |A| - r(E)`.
pub fn dual(m: &dyn RankOracle) -> Result<ExplicitMatroid> {
    let n = m.ground_size();
    check_ground(n)?;
    let total = m.full_rank();
    let ranks = EdgeSubset::all(n)
        .map(|a| (m.rank(a.complement(n)) + a.len() - total) as u8)
        .collect();
    Ok(ExplicitMatroid { ground_size: n, ranks })
}

/// Minimal dependent sets of any rank oracle, in bitmask order.
pub fn circuits(m: &dyn RankOracle) -> Vec<EdgeSubset> {
    EdgeSubset::all(m.ground_size())
        .filter(|&c| {
            !c.is_empty() && m.rank(c) + 1 == c.len() && c.iter().all(|e| m.rank(c.without(e)) == c.len() - 1)
        })
        .collect()
}

fn same_ground(m1: &dyn RankOracle, m2: &dyn RankOracle) -> Result<usize> {
    if m1.ground_size() != m2.ground_size() {
        return Err(Error::GroundSizeMismatch(m1.ground_size(), m2.ground_size()));
    }
    Ok(m1.ground_size())
}

/// `sum_A (X-1)^{r1(E)-r1(A)} (Y-1)^{|A|-r2(A)} (Z-1)^{r2(A)+r1(E)-r1(A)}`.
pub fn joint_tutte(m1: &dyn RankOracle, m2: &dyn RankOracle) -> Result<TriPoly> {
    let n = same_ground(m1, m2)?;
    let r1e = m1.full_rank();
    let h = histogram(n, |a| {
        let (r1, r2) = (m1.rank(a), m2.rank(a));
        [(r1e - r1) as u32, (a.len() - r2) as u32, (r2 + r1e - r1) as u32]
    });
    Ok(expand_binomials(&h))
}

/// Classical Tutte polynomial in `X, Y`.
pub fn matroid_tutte(m: &dyn RankOracle) -> TriPoly {
    let re = m.full_rank();
    let h = histogram(m.ground_size(), |a| {
        let r = m.rank(a);
        [(re - r) as u32, (a.len() - r) as u32, 0]
    });
    expand_binomials(&h)
}

/// `(Y-1)^{-r1(E)} S(X, Y, Y)`.
pub fn specialize_to_m1(s: &TriPoly, r1e: usize) -> Result<TriPoly> {
    s.substitute(Var::Z, &TriPoly::var(Var::Y)).divide_by_binomial(Var::Y, r1e as u32)
}

/// `(X-1)^{r2(E)} S(X, Y, X/(X-1))`.
pub fn specialize_to_m2(s: &TriPoly, r2e: usize) -> Result<TriPoly> {
    let z = Fraction::new(TriPoly::var(Var::X), TriPoly::pow_binomial(Var::X, 1));
    let (num, d) = s.compose([&Fraction::var(Var::X), &Fraction::var(Var::Y), &z]);
    let (r2e, dz) = (r2e as u32, d[2]);
    if r2e >= dz {
        Ok(&num * &TriPoly::pow_binomial(Var::X, r2e - dz))
    } else {
        num.divide_by_binomial(Var::X, dz - r2e)
    }
}

/// Does `lhs == rhs * prod_v (v-1)^{exps[v]}` hold? Negative exponents are
/// moved to the left-hand side.
fn equal_up_to_binomials(lhs: &TriPoly, rhs: &TriPoly, exps: [i64; 3]) -> bool {
    let mut left = lhs.clone();
    let mut right = rhs.clone();
    for (v, &e) in Var::ALL.iter().zip(&exps) {
        let factor = TriPoly::pow_binomial(*v, e.unsigned_abs() as u32);
        if e >= 0 {
            right = &right * &factor;
        } else {
            left = &left * &factor;
        }
    }
    left == right
}

/// `S_{M2*,M1*}(X,Y,Z) = (Z-1)^{|E|} S_{M1,M2}(Y, X, Z/(Z-1))`.
pub fn check_duality_swapped(m1: &dyn RankOracle, m2: &dyn RankOracle) -> Result<bool> {
    let n = same_ground(m1, m2)?;
    let lhs = joint_tutte(&dual(m2)?, &dual(m1)?)?;
    let s = joint_tutte(m1, m2)?;
    let z = Fraction::new(TriPoly::var(Var::Z), TriPoly::pow_binomial(Var::Z, 1));
    let (num, d) = s.compose([&Fraction::var(Var::Y), &Fraction::var(Var::X), &z]);
    Ok(equal_up_to_binomials(&lhs, &num, [0, 0, n as i64 - d[2] as i64]))
}

/// `S_{M1*,M2*}(X,Y,Z) = (X-1)^{-r1(E)} (Y-1)^{r2(E)} (Z-1)^{|E|-r1(E)-r2(E)}
///  S_{M1,M2}(Y, X, 1 + (X-1)(Z-1)/(Y-1))`.
pub fn check_duality_ordered(m1: &dyn RankOracle, m2: &dyn RankOracle) -> Result<bool> {
    let n = same_ground(m1, m2)? as i64;
    let (r1e, r2e) = (m1.full_rank() as i64, m2.full_rank() as i64);
    let lhs = joint_tutte(&dual(m1)?, &dual(m2)?)?;
    let s = joint_tutte(m1, m2)?;
    let y1 = TriPoly::pow_binomial(Var::Y, 1);
    let shifted = &y1 + &(&TriPoly::pow_binomial(Var::X, 1) * &TriPoly::pow_binomial(Var::Z, 1));
    let z = Fraction::new(shifted, y1);
    let (num, d) = s.compose([&Fraction::var(Var::Y), &Fraction::var(Var::X), &z]);
    Ok(equal_up_to_binomials(&lhs, &num, [-r1e, r2e - d[2] as i64, n - r1e - r2e]))
}

/// Every circuit of `m2` is a union of circuits of `m1`.
pub fn is_perspective(m2: &dyn RankOracle, m1: &dyn RankOracle) -> Result<bool> {
    let n = same_ground(m1, m2)?;
    check_ground(n)?;
    let small = circuits(m1);
    Ok(circuits(m2).into_iter().all(|c| {
        let covered = small
            .iter()
            .filter(|d| d.is_subset_of(c))
            .fold(EdgeSubset::EMPTY, |acc, d| acc.union(*d));
        covered == c
    }))
}

/// `W^{r2(E)} S(X, Y, (W+1)/W)` written in the variable `Z` for `W`, if it
/// is a polynomial.
pub fn las_vergnas_form(m1: &dyn RankOracle, m2: &dyn RankOracle) -> Result<Option<TriPoly>> {
    let s = joint_tutte(m1, m2)?;
    let z = Fraction::new(&TriPoly::var(Var::Z) + &TriPoly::one(), TriPoly::var(Var::Z));
    let (num, d) = s.compose([&Fraction::var(Var::X), &Fraction::var(Var::Y), &z]);
    let r2e = m2.full_rank() as u32;
    if r2e >= d[2] {
        Ok(Some(num.shift(Var::Z, r2e - d[2])))
    } else {
        Ok(num.divide_by_power(Var::Z, d[2] - r2e).ok())
    }
}

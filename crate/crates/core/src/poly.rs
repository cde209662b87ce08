//! Sparse polynomials in `X, Y, Z` with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    fn slot(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> char {
        ['X', 'Y', 'Z'][self.slot()]
    }
}

pub type Exponent = [u32; 3];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn one() -> Self {
        TriPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TriPoly::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: impl Into<BigInt>, exp: Exponent) -> Self {
        let mut p = TriPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        let mut exp = [0; 3];
        exp[v.slot()] = 1;
        TriPoly::monomial(1, exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(terms: I) -> Self {
        let mut p = TriPoly::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: Exponent) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.slot()]).max().unwrap_or(0)
    }

    /// `(v - 1)^exp`, expanded.
    pub fn pow_binomial(v: Var, exp: u32) -> Self {
        let mut p = TriPoly::zero();
        let mut c = BigInt::one();
        for i in 0..=exp {
            let mut e = [0; 3];
            e[v.slot()] = exp - i;
            let sign = if i % 2 == 0 { c.clone() } else { -c.clone() };
            p.add_term(e, sign);
            c = c * BigInt::from(exp - i) / BigInt::from(i + 1);
        }
        p
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = TriPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TriPoly::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, v: Var, k: u32) -> Self {
        TriPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[v.slot()] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let point = [x, y, z];
        let mut powers: [Vec<Rational>; 3] = Default::default();
        for (slot, table) in powers.iter_mut().enumerate() {
            let d = self.terms.keys().map(|e| e[slot]).max().unwrap_or(0);
            table.push(Rational::one());
            for i in 1..=d as usize {
                let next = &table[i - 1] * point[slot];
                table.push(next);
            }
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let term = &powers[0][e[0] as usize] * &powers[1][e[1] as usize] * &powers[2][e[2] as usize];
            total += term * Rational::from_integer(c.clone());
        }
        total
    }

    pub fn eval_int(&self, x: i64, y: i64, z: i64) -> Rational {
        self.eval(&integer(x), &integer(y), &integer(z))
    }

    /// Restrict `Z` to a rational value.
    pub fn substitute_z(&self, z: &Rational) -> RatBiPoly {
        let mut out = RatBiPoly::default();
        for (e, c) in &self.terms {
            let value = Rational::from_integer(c.clone()) * pow_rational(z, e[2]);
            out.add_term([e[0], e[1]], value);
        }
        out
    }

    /// Replace one variable by another polynomial.
    pub fn substitute(&self, v: Var, with: &TriPoly) -> TriPoly {
        let d = self.degree(v);
        let mut powers = vec![TriPoly::one()];
        for i in 1..=d as usize {
            let next = &powers[i - 1] * with;
            powers.push(next);
        }
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[v.slot()] = 0;
            out += &(&powers[e[v.slot()] as usize] * &TriPoly::monomial(c.clone(), rest));
        }
        out
    }

    /// Simultaneous substitution of rational functions `num_i / den_i` for
    /// `X, Y, Z`. Returns the numerator `N` and exponents `d` such that the
    /// result equals `N / (den_x^d[0] den_y^d[1] den_z^d[2])`, where each
    /// `d[i]` is the degree of `self` in that variable.
    pub fn compose(&self, subs: [&Fraction; 3]) -> (TriPoly, Exponent) {
        let degrees = [self.degree(Var::X), self.degree(Var::Y), self.degree(Var::Z)];
        let tables: Vec<Vec<TriPoly>> = (0..3)
            .map(|slot| {
                let d = degrees[slot] as usize;
                let num_pows = powers_of(&subs[slot].num, d);
                let den_pows = powers_of(&subs[slot].den, d);
                (0..=d).map(|i| &num_pows[i] * &den_pows[d - i]).collect()
            })
            .collect();
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            let term = &(&tables[0][e[0] as usize] * &tables[1][e[1] as usize]) * &tables[2][e[2] as usize];
            out += &term.scale(c);
        }
        (out, degrees)
    }

    /// Exact quotient by `(v - 1)^exp`.
    pub fn divide_by_binomial(&self, v: Var, exp: u32) -> Result<TriPoly> {
        let mut current = self.clone();
        for _ in 0..exp {
            current = current.divide_once(v)?.ok_or(Error::NotDivisible { var: v.name(), exp })?;
        }
        Ok(current)
    }

    /// Synthetic division by `(v - 1)`; `None` if the remainder is nonzero.
    fn divide_once(&self, v: Var) -> Result<Option<TriPoly>> {
        let s = v.slot();
        // group terms by the exponents of the other two variables
        let mut groups: BTreeMap<Exponent, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = *e;
            key[s] = 0;
            groups.entry(key).or_default().insert(e[s], c.clone());
        }
        let mut out = TriPoly::zero();
        for (key, column) in groups {
            let top = *column.keys().next_back().expect("nonempty");
            let mut carry = BigInt::zero();
            for d in (0..=top).rev() {
                carry += column.get(&d).cloned().unwrap_or_default();
                if d == 0 {
                    if !carry.is_zero() {
                        return Ok(None);
                    }
                } else {
                    let mut e = key;
                    e[s] = d - 1;
                    out.add_term(e, carry.clone());
                }
            }
        }
        Ok(Some(out))
    }

    /// Exact quotient by `v^exp`.
    pub fn divide_by_power(&self, v: Var, exp: u32) -> Result<TriPoly> {
        let s = v.slot();
        let mut out = TriPoly::zero();
        for (e, c) in &self.terms {
            if e[s] < exp {
                return Err(Error::InvalidArgument(format!("polynomial is not divisible by {}^{exp}", v.name())));
            }
            let mut e = *e;
            e[s] -= exp;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

fn powers_of(p: &TriPoly, d: usize) -> Vec<TriPoly> {
    let mut out = vec![TriPoly::one()];
    for i in 1..=d {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

pub fn pow_rational(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// `x^e` for a possibly negative exponent; `None` for `0^{<0}`.
pub fn pow_signed(x: &Rational, e: i64) -> Option<Rational> {
    if e >= 0 {
        Some(pow_rational(x, e as u32))
    } else if x.is_zero() {
        None
    } else {
        Some(pow_rational(&x.recip(), (-e) as u32))
    }
}

/// A rational function `num / den` used for substitutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: TriPoly,
    pub den: TriPoly,
}

impl Fraction {
    pub fn new(num: TriPoly, den: TriPoly) -> Self {
        Fraction { num, den }
    }

    pub fn poly(p: TriPoly) -> Self {
        Fraction { num: p, den: TriPoly::one() }
    }

    pub fn var(v: Var) -> Self {
        Fraction::poly(TriPoly::var(v))
    }
}

/// Polynomial in `X, Y` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatBiPoly {
    terms: BTreeMap<[u32; 2], Rational>,
}

impl RatBiPoly {
    fn add_term(&mut self, exp: [u32; 2], c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coefficient(&self, exp: [u32; 2]) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 2], &Rational)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * pow_rational(x, e[0]) * pow_rational(y, e[1]))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TriPoly {
    type Output = TriPoly;
    fn add(mut self, rhs: TriPoly) -> TriPoly {
        self += &rhs;
        self
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -&self
    }
}

impl Sub<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Sub for TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: TriPoly) -> TriPoly {
        &self - &rhs
    }
}

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        out
    }
}

impl Mul for TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: TriPoly) -> TriPoly {
        &self * &rhs
    }
}

/// Total degree descending, then exponent triple descending.
fn graded_lex_desc(a: &Exponent, b: &Exponent) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl TriPoly {
    /// Terms in printing order.
    pub fn sorted_terms(&self) -> Vec<(Exponent, BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        terms.sort_by(|a, b| graded_lex_desc(&a.0, &b.0));
        terms
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            let constant = e == [0, 0, 0];
            if constant || !magnitude.is_one() {
                factors.push(magnitude.to_string());
            }
            for v in Var::ALL {
                match e[v.slot()] {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    k => factors.push(format!("{}^{k}", v.name())),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for TriPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut previous: Option<char> = None;
        let mut gap = false;
        for c in s.chars() {
            if c.is_whitespace() {
                gap = true;
                continue;
            }
            if gap && c.is_ascii_alphanumeric() && previous.is_some_and(|p| p.is_ascii_alphanumeric()) {
                return Err(Error::parse(1, "missing operator between factors"));
            }
            previous = Some(c);
            gap = false;
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(1, "empty polynomial"));
        }
        let mut out = TriPoly::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut i = 0;
        while i <= bytes.len() {
            let boundary = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start);
            if boundary {
                let (exp, c) = parse_term(&compact[start..i])?;
                out.add_term(exp, c);
                start = i;
            }
            i += 1;
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(Exponent, BigInt)> {
    let (negative, body) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err(Error::parse(1, format!("dangling sign in {term:?}")));
    }
    let mut coefficient = BigInt::one();
    let mut exp = [0u32; 3];
    for factor in body.split('*') {
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => {
                let p: u32 = p.parse().map_err(|_| Error::parse(1, format!("bad exponent in {factor:?}")))?;
                (b, p)
            }
            None => (factor, 1),
        };
        let slot = match base {
            "X" | "x" => Some(0),
            "Y" | "y" => Some(1),
            "Z" | "z" => Some(2),
            _ => None,
        };
        match slot {
            Some(s) => {
                exp[s] = exp[s]
                    .checked_add(power)
                    .ok_or_else(|| Error::parse(1, "exponent overflow"))?;
            }
            None => {
                if base.is_empty() || !base.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(1, format!("bad factor {factor:?}")));
                }
                let value: BigInt = base.parse().map_err(|_| Error::parse(1, format!("bad number {base:?}")))?;
                coefficient *= num_traits::pow(value, power as usize);
            }
        }
    }
    if negative {
        coefficient = -coefficient;
    }
    Ok((exp, coefficient))
}

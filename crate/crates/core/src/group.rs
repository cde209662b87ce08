//! Finite abelian groups presented as products of cyclic groups.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z_{n_1} x ... x Z_{n_k}`. Factors of order one are dropped, so the
/// trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    pub residues: Vec<u64>,
}

impl GroupElement {
    pub fn new(residues: Vec<u64>) -> Self {
        GroupElement { residues }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
        }
        let moduli: Vec<u64> = moduli.into_iter().filter(|&n| n > 1).collect();
        let mut order: u64 = 1;
        for &n in &moduli {
            order = order
                .checked_mul(n)
                .ok_or_else(|| Error::InvalidGroup("group order overflows 64 bits".into()))?;
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        FiniteAbelianGroup::new(vec![n])
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { moduli: Vec::new() }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// `|2G|`.
    pub fn two_g_order(&self) -> u64 {
        self.moduli.iter().map(|&n| n / n.gcd(&2)).product()
    }

    /// `|G_2| = |{x : 2x = 0}| = |G| / |2G|`.
    pub fn two_torsion_order(&self) -> u64 {
        self.moduli.iter().map(|&n| n.gcd(&2)).product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::new(vec![0; self.moduli.len()])
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if a.residues.len() != self.moduli.len() {
            return Err(Error::ShapeMismatch { expected: self.moduli.len(), actual: a.residues.len() });
        }
        Ok(())
    }

    /// Reduce arbitrary integers into an element.
    pub fn element(&self, values: &[i64]) -> Result<GroupElement> {
        if values.len() != self.moduli.len() {
            return Err(Error::ShapeMismatch { expected: self.moduli.len(), actual: values.len() });
        }
        Ok(GroupElement::new(
            values
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| (x as i128).rem_euclid(n as i128) as u64)
                .collect(),
        ))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement::new(
            a.residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| ((x as u128 + y as u128) % n as u128) as u64)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement::new(
            a.residues.iter().zip(&self.moduli).map(|(&x, &n)| (n - x % n) % n).collect(),
        ))
    }

    pub fn scale(&self, c: i64, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement::new(
            a.residues
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| (c as i128 * x as i128).rem_euclid(n as i128) as u64)
                .collect(),
        ))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.residues.iter().all(|&x| x == 0)
    }

    pub fn in_two_g(&self, a: &GroupElement) -> Result<bool> {
        self.check(a)?;
        Ok(a.residues.iter().zip(&self.moduli).all(|(&x, &n)| n % 2 == 1 || x % 2 == 0))
    }

    /// Canonical representative of `a + 2G`: every even factor reduced mod 2,
    /// every odd factor set to zero.
    pub fn coset_rep_of(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement::new(
            a.residues.iter().zip(&self.moduli).map(|(&x, &n)| if n % 2 == 0 { x % 2 } else { 0 }).collect(),
        ))
    }

    /// One representative per coset of `2G`, in lexicographic order.
    pub fn coset_reps(&self) -> Vec<GroupElement> {
        let shape: Vec<u64> = self.moduli.iter().map(|&n| n.gcd(&2)).collect();
        lexicographic(&shape).collect()
    }

    /// All elements in lexicographic order of residues.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        lexicographic(&self.moduli)
    }

    /// Position of `a` in [`Self::elements`].
    pub fn index_of(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        let mut index = 0u64;
        for (&x, &n) in a.residues.iter().zip(&self.moduli) {
            if x >= n {
                return Err(Error::InvalidArgument(format!("residue {x} out of range for Z{n}")));
            }
            index = index * n + x;
        }
        Ok(index)
    }

    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut residues = vec![0; self.moduli.len()];
        for (r, &n) in residues.iter_mut().zip(&self.moduli).rev() {
            *r = index % n;
            index /= n;
        }
        GroupElement::new(residues)
    }
}

fn lexicographic(shape: &[u64]) -> impl Iterator<Item = GroupElement> + '_ {
    let total: u64 = shape.iter().product();
    (0..total).map(move |mut index| {
        let mut residues = vec![0; shape.len()];
        for (r, &n) in residues.iter_mut().zip(shape).rev() {
            *r = index % n;
            index /= n;
        }
        GroupElement::new(residues)
    })
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = Error;

    /// `"Z4xZ2"`, case-insensitive; `""` and `"Z1"` are the trivial group.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(FiniteAbelianGroup::trivial());
        }
        let mut moduli = Vec::new();
        for part in s.split(['x', 'X', '*']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| Error::InvalidGroup(format!("expected Z<n>, got {part:?}")))?;
            let n: u64 = digits
                .parse()
                .map_err(|_| Error::InvalidGroup(format!("bad cyclic order {digits:?}")))?;
            moduli.push(n);
        }
        FiniteAbelianGroup::new(moduli)
    }
}

/// Index-based arithmetic for the enumerators. Elements are positions in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct GroupTable {
    group: FiniteAbelianGroup,
    order: usize,
    radix: Vec<usize>,
    add: Vec<u32>,
    neg: Vec<u32>,
    in_two_g: Vec<bool>,
    coset: Vec<u32>,
}

/// Largest group order the enumerators accept.
pub const MAX_TABLE_ORDER: u64 = 1 << 20;
const MAX_ADD_TABLE_ORDER: usize = 1024;

impl GroupTable {
    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        let order = group.order();
        if order > MAX_TABLE_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} too large to enumerate")));
        }
        let order = order as usize;
        let mut radix = vec![1usize; group.moduli.len()];
        for i in (0..group.moduli.len().saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * group.moduli[i + 1] as usize;
        }
        let mut table = GroupTable {
            group: group.clone(),
            order,
            radix,
            add: Vec::new(),
            neg: Vec::new(),
            in_two_g: Vec::with_capacity(order),
            coset: Vec::with_capacity(order),
        };
        table.neg = (0..order).map(|a| table.combine(a, 0, -1) as u32).collect();
        for a in 0..order {
            let e = group.element_at(a as u64);
            table.in_two_g.push(group.in_two_g(&e).expect("shape"));
            let rep = group.coset_rep_of(&e).expect("shape");
            table.coset.push(group.index_of(&rep).expect("shape") as u32);
        }
        if order <= MAX_ADD_TABLE_ORDER {
            let mut add = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    add.push(table.combine(a, b, 1) as u32);
                }
            }
            table.add = add;
        }
        Ok(table)
    }

    /// Digitwise `sa * a + b`, with `sa = ±1`.
    fn combine(&self, a: usize, b: usize, sa: i64) -> usize {
        let mut out = 0usize;
        for (i, &n) in self.group.moduli.iter().enumerate() {
            let n = n as i64;
            let da = (a / self.radix[i]) as i64 % n;
            let db = (b / self.radix[i]) as i64 % n;
            out += ((sa * da + db).rem_euclid(n)) as usize * self.radix[i];
        }
        out
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.add.is_empty() {
            self.combine(a as usize, b as usize, 1) as u32
        } else {
            self.add[a as usize * self.order + b as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, c: i64, a: u32) -> u32 {
        let base = if c < 0 { self.neg(a) } else { a };
        let mut m = c.unsigned_abs();
        let mut acc = 0u32;
        let mut pow = base;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, pow);
            }
            pow = self.add(pow, pow);
            m >>= 1;
        }
        acc
    }

    #[inline]
    pub fn in_two_g(&self, a: u32) -> bool {
        self.in_two_g[a as usize]
    }

    /// Index of the canonical coset representative.
    #[inline]
    pub fn coset(&self, a: u32) -> u32 {
        self.coset[a as usize]
    }

    pub fn element(&self, a: u32) -> GroupElement {
        self.group.element_at(a as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FiniteAbelianGroup {
        s.parse().unwrap()
    }

    fn el(r: &[u64]) -> GroupElement {
        GroupElement::new(r.to_vec())
    }

    #[test]
    fn arithmetic() {
        let z4 = g("Z4");
        assert_eq!(z4.add(&el(&[3]), &el(&[3])).unwrap(), el(&[2]));
        assert_eq!(z4.scale(2, &el(&[3])).unwrap(), el(&[2]));
        let z2z3 = g("Z2xZ3");
        assert_eq!(z2z3.neg(&el(&[1, 2])).unwrap(), el(&[1, 1]));
        assert_eq!(
            z4.add(&el(&[1]), &el(&[1, 0])),
            Err(Error::ShapeMismatch { expected: 1, actual: 2 })
        );
    }

    #[test]
    fn doubling_subgroup() {
        let z4 = g("Z4");
        assert!(z4.in_two_g(&el(&[2])).unwrap());
        assert!(!z4.in_two_g(&el(&[1])).unwrap());
        assert_eq!(z4.two_g_order(), 2);
        let z3 = g("z3");
        assert!(z3.elements().all(|x| z3.in_two_g(&x).unwrap()));
        assert_eq!(z3.two_g_order(), 3);
        let z2z4 = g("Z2xZ4");
        assert_eq!(z2z4.two_g_order(), 2);
        assert_eq!(z2z4.order() / z2z4.two_g_order(), 4);
    }

    #[test]
    fn subgroup_orders_by_enumeration() {
        for spec in ["Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z2xZ4", "Z4xZ6", "Z2xZ32"] {
            let grp = g(spec);
            let doubles: std::collections::BTreeSet<_> =
                grp.elements().map(|x| grp.scale(2, &x).unwrap()).collect();
            assert_eq!(doubles.len() as u64, grp.two_g_order(), "{spec}");
            let members = grp.elements().filter(|x| grp.in_two_g(x).unwrap()).count();
            assert_eq!(members as u64, grp.two_g_order(), "{spec}");
            let torsion = grp.elements().filter(|x| grp.is_zero(&grp.scale(2, x).unwrap())).count();
            assert_eq!(torsion as u64, grp.order() / grp.two_g_order(), "{spec}");
            assert_eq!(torsion as u64, grp.two_torsion_order(), "{spec}");
        }
    }

    #[test]
    fn cosets() {
        let z4 = g("Z4");
        assert_eq!(z4.coset_reps(), vec![el(&[0]), el(&[1])]);
        assert_eq!(z4.coset_rep_of(&el(&[3])).unwrap(), el(&[1]));
        for spec in ["Z2", "Z6", "Z2xZ4", "Z3xZ2"] {
            let grp = g(spec);
            for x in grp.elements() {
                let nx = grp.neg(&x).unwrap();
                assert_eq!(grp.coset_rep_of(&x).unwrap(), grp.coset_rep_of(&nx).unwrap());
                let diff = grp.add(&x, &grp.neg(&grp.coset_rep_of(&x).unwrap()).unwrap()).unwrap();
                assert!(grp.in_two_g(&diff).unwrap());
            }
            assert_eq!(grp.coset_reps().len() as u64, grp.two_torsion_order());
        }
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(g("Z2").elements().collect::<Vec<_>>(), vec![el(&[0]), el(&[1])]);
        assert_eq!(g("Z1").elements().collect::<Vec<_>>(), vec![el(&[])]);
        assert_eq!(g("").order(), 1);
        let z2z3 = g("Z2xZ3");
        let all: Vec<_> = z2z3.elements().collect();
        assert_eq!(all[1], el(&[0, 1]));
        assert_eq!(all[3], el(&[1, 0]));
        for (i, x) in all.iter().enumerate() {
            assert_eq!(z2z3.index_of(x).unwrap(), i as u64);
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(g("Z4xZ2xZ3").moduli(), &[4, 2, 3]);
        assert_eq!(g("z4XZ2").moduli(), &[4, 2]);
        assert_eq!(g("Z4xZ2").to_string(), "Z4xZ2");
        assert!("Z0".parse::<FiniteAbelianGroup>().is_err());
        assert!("Q4".parse::<FiniteAbelianGroup>().is_err());
        assert!("Zx".parse::<FiniteAbelianGroup>().is_err());
    }

    #[test]
    fn table_matches_elementwise_ops() {
        for spec in ["Z1", "Z2", "Z6", "Z2xZ4", "Z3xZ3"] {
            let grp = g(spec);
            let t = GroupTable::new(&grp).unwrap();
            for a in 0..t.order() as u32 {
                let ea = t.element(a);
                assert_eq!(t.element(t.neg(a)), grp.neg(&ea).unwrap());
                assert_eq!(t.in_two_g(a), grp.in_two_g(&ea).unwrap());
                assert_eq!(t.element(t.coset(a)), grp.coset_rep_of(&ea).unwrap());
                for c in -3..=3 {
                    assert_eq!(t.element(t.scale(c, a)), grp.scale(c, &ea).unwrap());
                }
                for b in 0..t.order() as u32 {
                    assert_eq!(t.element(t.add(a, b)), grp.add(&ea, &t.element(b)).unwrap());
                }
            }
        }
    }
}

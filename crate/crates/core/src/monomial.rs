//! Exact monomial and monomial-ideal arithmetic.
//!
//! A [`Monomial`] is an exponent vector over a fixed number of variables.
//! A [`MonomialIdeal`] always stores its unique minimal generating set,
//! sorted in decreasing lexicographic order (`x1 > x2 > ...`), so the
//! `i`-th generator is a stable index that complexes can refer to.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exponents: vec![0; n] }
    }

    /// `z_var^degree` in `n` variables.
    pub fn pure_power(n: usize, var: usize, degree: u32) -> Self {
        let mut exponents = vec![0; n];
        exponents[var] = degree;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// Index of the variable when this is a pure power `z_i^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        match self.support().as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub(crate) fn lcm_assign(&mut self, other: &Monomial) {
        for (a, &b) in self.exponents.iter_mut().zip(&other.exponents) {
            *a = (*a).max(b);
        }
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `self` divides `other / z_i` for every variable `z_i` dividing `other`.
    ///
    /// Plain divisibility is also required, so nothing but `1` strictly
    /// divides `1`.
    pub fn strictly_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.strictly_divides_unchecked(other))
    }

    pub(crate) fn strictly_divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| if b > 0 { a < b } else { a == 0 })
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exponents })
    }

    /// Exact quotient `self / divisor`.
    pub fn checked_div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_dim(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::NotDivisible {
                divisor: format!("{:?}", divisor.exponents),
                dividend: format!("{:?}", self.exponents),
            });
        }
        Ok(Monomial { exponents: self.exponents.iter().zip(&divisor.exponents).map(|(a, b)| a - b).collect() })
    }

    /// Human syntax such as `x^2*y`, using the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { monomial: self, names }
    }
}

struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.monomial.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "z{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Default variable names `z1, ..., zn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("z{i}")).collect()
}

/// Removes every generator divisible by another one, deduplicates, and
/// sorts the survivors in decreasing lexicographic order.
pub fn minimalize(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    if let Some(first) = gens.first() {
        for g in gens {
            first.check_dim(g)?;
        }
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    // Increasing total degree: a divisor is never visited after its multiples.
    sorted.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| b.cmp(a)));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    Ok(kept)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient_dim: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(ambient_dim: usize, gens: &[Monomial]) -> Result<Self> {
        for g in gens {
            if g.dim() != ambient_dim {
                return Err(Error::DimensionMismatch { left: ambient_dim, right: g.dim() });
            }
        }
        Ok(MonomialIdeal { ambient_dim, generators: minimalize(gens)? })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ambient_dim: usize, exps: &[&[u32]]) -> Result<Self> {
        let gens: Vec<Monomial> = exps.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::new(ambient_dim, &gens)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        MonomialIdeal { ambient_dim, generators: Vec::new() }
    }

    pub fn unit(ambient_dim: usize) -> Self {
        MonomialIdeal { ambient_dim, generators: vec![Monomial::one(ambient_dim)] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.ambient_dim != n {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: n });
        }
        Ok(())
    }

    /// Largest exponent of any variable in any generator.
    pub fn max_exponent(&self) -> u32 {
        self.generators.iter().flat_map(|g| g.exponents.iter().copied()).max().unwrap_or(0)
    }

    /// Per-variable maximal degree among the generators.
    pub fn max_degrees(&self) -> Vec<u32> {
        let mut d = vec![0; self.ambient_dim];
        for g in &self.generators {
            for (di, &e) in d.iter_mut().zip(&g.exponents) {
                *di = (*di).max(e);
            }
        }
        d
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        self.check_dim(m.dim())?;
        Ok(self.member_unchecked(m))
    }

    pub(crate) fn member_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// `other` is contained in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        Ok(other.generators.iter().all(|g| self.member_unchecked(g)))
    }

    /// `other ⊆ self` decided by membership of every monomial in the box
    /// bounded by the largest degrees of both ideals. Beyond that box
    /// membership no longer changes, so this agrees with
    /// [`contains_ideal`](Self::contains_ideal).
    pub fn contains_ideal_on_box(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.ambient_dim)?;
        let bounds: Vec<u32> =
            self.max_degrees().iter().zip(other.max_degrees()).map(|(&a, b)| a.max(b)).collect();
        let mut ok = true;
        for_each_in_box(&bounds, |m| ok &= !other.member_unchecked(m) || self.member_unchecked(m));
        Ok(ok)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient_dim)?;
        let lcms: Vec<Monomial> = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm_unchecked(b)))
            .collect();
        Ok(MonomialIdeal { ambient_dim: self.ambient_dim, generators: minimalize(&lcms)? })
    }

    /// Every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> Result<bool> {
        self.require_nonzero()?;
        Ok((0..self.ambient_dim).all(|i| {
            self.generators.iter().any(|g| g.exponents.iter().enumerate().all(|(j, &e)| j == i || e == 0))
        }))
    }

    /// Whenever two generators share a positive degree in some variable, a
    /// third generator strictly divides their lcm.
    pub fn is_generic(&self) -> Result<bool> {
        self.require_nonzero()?;
        let gens = &self.generators;
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !shares_positive_degree(&gens[i], &gens[j]) {
                    continue;
                }
                let lcm = gens[i].lcm_unchecked(&gens[j]);
                let witnessed = gens
                    .iter()
                    .enumerate()
                    .any(|(k, g)| k != i && k != j && g.strictly_divides_unchecked(&lcm));
                if !witnessed {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No two generators share a positive degree in any variable.
    pub fn is_strongly_generic(&self) -> Result<bool> {
        self.require_nonzero()?;
        let gens = &self.generators;
        Ok((0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| !shares_positive_degree(&gens[i], &gens[j]))))
    }

    /// `self ⊆ m^b`.
    pub fn contained_in_irreducible(&self, b: &IrreducibleIdeal) -> Result<bool> {
        self.check_dim(b.exponent().dim())?;
        Ok(self.generators.iter().all(|g| b.contains_unchecked(g)))
    }

    /// Human syntax `(x^2, x*y, y^2)`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

fn shares_positive_degree(a: &Monomial, b: &Monomial) -> bool {
    a.exponents.iter().zip(&b.exponents).any(|(&x, &y)| x > 0 && x == y)
}

struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.ideal.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        f.write_str(")")
    }
}

/// The irreducible ideal `m^b = (z_i^{b_i} : b_i > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleIdeal {
    exponent: Monomial,
}

impl IrreducibleIdeal {
    pub fn new(exponent: Monomial) -> Self {
        IrreducibleIdeal { exponent }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        IrreducibleIdeal { exponent: Monomial::new(exps.to_vec()) }
    }

    pub fn exponent(&self) -> &Monomial {
        &self.exponent
    }

    pub fn support(&self) -> Vec<usize> {
        self.exponent.support()
    }

    /// The all-zero exponent gives the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.exponent.is_one()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.exponent.check_dim(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.exponent.exponents.iter().zip(&m.exponents).any(|(&b, &e)| b > 0 && e >= b)
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &IrreducibleIdeal) -> bool {
        self.exponent
            .exponents
            .iter()
            .zip(&other.exponent.exponents)
            .all(|(&b, &c)| b == 0 || (c > 0 && b >= c))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.exponent.dim();
        let gens: Vec<Monomial> =
            self.exponent.exponents.iter().enumerate().filter(|(_, &b)| b > 0).map(|(i, &b)| Monomial::pure_power(n, i, b)).collect();
        MonomialIdeal::new(n, &gens).expect("pure powers share the ambient dimension")
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        IrreducibleDisplay { ideal: self, names }
    }
}

struct IrreducibleDisplay<'a> {
    ideal: &'a IrreducibleIdeal,
    names: &'a [String],
}

impl fmt::Display for IrreducibleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ideal.exponent.dim();
        f.write_str("(")?;
        let mut first = true;
        for (i, &b) in self.ideal.exponent.exponents.iter().enumerate() {
            if b == 0 {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{}", Monomial::pure_power(n, i, b).display_with(self.names))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.dim())))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.ambient_dim)))
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.exponent.dim())))
    }
}

/// Intersection of a family of irreducible ideals; the empty family gives
/// the unit ideal.
pub fn intersect_irreducibles(n: usize, comps: &[IrreducibleIdeal]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for c in comps {
        acc = acc.intersect(&c.to_ideal())?;
    }
    Ok(acc)
}

/// Calls `f` on every monomial of the box `[0, bound_i]^n`.
pub fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&Monomial)) {
    let mut cur = Monomial::one(bounds.len());
    loop {
        f(&cur);
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return;
            }
            if cur.exponents[i] < bounds[i] {
                cur.exponents[i] += 1;
                break;
            }
            cur.exponents[i] = 0;
            i += 1;
        }
    }
}

//! Exact scalar arithmetic and the sparse polynomial/series containers
//! shared by every other module.
//!
//! All computations run either over the rationals (characteristic 0) or over
//! a prime field F_p; the two are never mixed inside one value. The field is
//! carried as a [`FieldTag`] on every container and checked at every binary
//! operation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArithError {
    #[error("coefficient field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
}

/// The coefficient field of a computation: Q or F_p with p prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Char0,
    Fp(u64),
}

impl FieldTag {
    /// Prime-field tag; validates primality of `p`.
    pub fn prime(p: u64) -> Result<FieldTag, ArithError> {
        if is_prime(p) {
            Ok(FieldTag::Fp(p))
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Char0 => 0,
            FieldTag::Fp(p) => *p,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Char0 => write!(f, "Q"),
            FieldTag::Fp(p) => write!(f, "F_{}", p),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    val: u64,
    p: u64,
}

impl PrimeFieldElem {
    pub fn new(val: i64, p: u64) -> PrimeFieldElem {
        let m = val.rem_euclid(p as i64) as u64;
        PrimeFieldElem { val: m, p }
    }

    pub fn from_bigint(val: &BigInt, p: u64) -> PrimeFieldElem {
        let m = val.mod_floor_u64(p);
        PrimeFieldElem { val: m, p }
    }

    pub fn value(&self) -> u64 {
        self.val
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn add(self, o: PrimeFieldElem) -> PrimeFieldElem {
        debug_assert_eq!(self.p, o.p);
        PrimeFieldElem { val: (self.val + o.val) % self.p, p: self.p }
    }

    fn sub(self, o: PrimeFieldElem) -> PrimeFieldElem {
        debug_assert_eq!(self.p, o.p);
        PrimeFieldElem { val: (self.p + self.val - o.val) % self.p, p: self.p }
    }

    fn mul(self, o: PrimeFieldElem) -> PrimeFieldElem {
        debug_assert_eq!(self.p, o.p);
        let v = (self.val as u128 * o.val as u128) % self.p as u128;
        PrimeFieldElem { val: v as u64, p: self.p }
    }

    fn inv(self) -> Option<PrimeFieldElem> {
        if self.val == 0 {
            return None;
        }
        // Fermat: val^(p-2) mod p
        let mut acc = 1u128;
        let mut base = self.val as u128;
        let mut e = self.p - 2;
        let p = self.p as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Some(PrimeFieldElem { val: acc as u64, p: self.p })
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

/// A scalar of the ambient field: an exact rational or an F_p element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rat(ExactRat),
    Fp(PrimeFieldElem),
}

impl Coefficient {
    pub fn zero(tag: FieldTag) -> Coefficient {
        match tag {
            FieldTag::Char0 => Coefficient::Rat(ExactRat::zero()),
            FieldTag::Fp(p) => Coefficient::Fp(PrimeFieldElem::new(0, p)),
        }
    }

    pub fn one(tag: FieldTag) -> Coefficient {
        match tag {
            FieldTag::Char0 => Coefficient::Rat(ExactRat::one()),
            FieldTag::Fp(p) => Coefficient::Fp(PrimeFieldElem::new(1, p)),
        }
    }

    pub fn from_int(v: i64, tag: FieldTag) -> Coefficient {
        match tag {
            FieldTag::Char0 => Coefficient::Rat(ExactRat::from(BigInt::from(v))),
            FieldTag::Fp(p) => Coefficient::Fp(PrimeFieldElem::new(v, p)),
        }
    }

    pub fn from_bigint(v: &BigInt, tag: FieldTag) -> Coefficient {
        match tag {
            FieldTag::Char0 => Coefficient::Rat(ExactRat::from(v.clone())),
            FieldTag::Fp(p) => Coefficient::Fp(PrimeFieldElem::from_bigint(v, p)),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            Coefficient::Rat(_) => FieldTag::Char0,
            Coefficient::Fp(e) => FieldTag::Fp(e.p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rat(r) => r.is_zero(),
            Coefficient::Fp(e) => e.val == 0,
        }
    }

    pub fn as_rat(&self) -> Option<&ExactRat> {
        match self {
            Coefficient::Rat(r) => Some(r),
            Coefficient::Fp(_) => None,
        }
    }

    fn check(&self, o: &Coefficient) {
        if self.tag() != o.tag() {
            panic!("coefficient field mismatch: {} vs {}", self.tag(), o.tag());
        }
    }

    pub fn add(&self, o: &Coefficient) -> Coefficient {
        self.check(o);
        match (self, o) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a + b),
            (Coefficient::Fp(a), Coefficient::Fp(b)) => Coefficient::Fp(a.add(*b)),
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, o: &Coefficient) -> Coefficient {
        self.check(o);
        match (self, o) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a - b),
            (Coefficient::Fp(a), Coefficient::Fp(b)) => Coefficient::Fp(a.sub(*b)),
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, o: &Coefficient) -> Coefficient {
        self.check(o);
        match (self, o) {
            (Coefficient::Rat(a), Coefficient::Rat(b)) => Coefficient::Rat(a * b),
            (Coefficient::Fp(a), Coefficient::Fp(b)) => Coefficient::Fp(a.mul(*b)),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rat(a) => Coefficient::Rat(-a),
            Coefficient::Fp(a) => Coefficient::Fp(PrimeFieldElem::new(0, a.p).sub(*a)),
        }
    }

    pub fn inv(&self) -> Result<Coefficient, ArithError> {
        match self {
            Coefficient::Rat(a) => {
                if a.is_zero() {
                    Err(ArithError::DivisionByZero)
                } else {
                    Ok(Coefficient::Rat(a.recip()))
                }
            }
            Coefficient::Fp(a) => a.inv().map(Coefficient::Fp).ok_or(ArithError::DivisionByZero),
        }
    }

    pub fn div(&self, o: &Coefficient) -> Result<Coefficient, ArithError> {
        Ok(self.mul(&o.inv()?))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rat(r) => write!(f, "{}", r),
            Coefficient::Fp(e) => write!(f, "{}", e.val),
        }
    }
}

/// Binomial coefficient C(n, k) with the convention C(n, k) = 0 for k < 0
/// or k > n.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(n, k) reduced into the field named by `tag`.
pub fn binomial_in(n: u64, k: i64, tag: FieldTag) -> Coefficient {
    Coefficient::from_bigint(&binomial(n, k), tag)
}

/// Sparse bivariate polynomial over one coefficient field. The term map is
/// keyed by (x-exponent, y-exponent); zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Coefficient>,
    tag: FieldTag,
}

impl BivariatePoly {
    pub fn zero(tag: FieldTag) -> BivariatePoly {
        BivariatePoly { terms: BTreeMap::new(), tag }
    }

    pub fn monomial(xe: u32, ye: u32, c: Coefficient) -> BivariatePoly {
        let tag = c.tag();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xe, ye), c);
        }
        BivariatePoly { terms, tag }
    }

    pub fn from_terms<I>(tag: FieldTag, it: I) -> Result<BivariatePoly, ArithError>
    where
        I: IntoIterator<Item = ((u32, u32), Coefficient)>,
    {
        let mut out = BivariatePoly::zero(tag);
        for (k, c) in it {
            if c.tag() != tag {
                return Err(ArithError::FieldMismatch(tag, c.tag()));
            }
            out.add_term(k.0, k.1, &c);
        }
        Ok(out)
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Coefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, xe: u32, ye: u32) -> Coefficient {
        self.terms
            .get(&(xe, ye))
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.tag))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn max_y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    fn add_term(&mut self, xe: u32, ye: u32, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, ye));
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, o: &BivariatePoly) -> Result<(), ArithError> {
        if self.tag != o.tag {
            return Err(ArithError::FieldMismatch(self.tag, o.tag));
        }
        Ok(())
    }

    pub fn add(&self, o: &BivariatePoly) -> Result<BivariatePoly, ArithError> {
        self.check(o)?;
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &BivariatePoly) -> Result<BivariatePoly, ArithError> {
        self.check(o)?;
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, &c.neg());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> BivariatePoly {
        if c.is_zero() {
            return BivariatePoly::zero(self.tag);
        }
        let mut out = BivariatePoly::zero(self.tag);
        for (&(i, j), a) in &self.terms {
            out.add_term(i, j, &a.mul(c));
        }
        out
    }

    pub fn mul(&self, o: &BivariatePoly) -> Result<BivariatePoly, ArithError> {
        self.check(o)?;
        let mut out = BivariatePoly::zero(self.tag);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term(i1 + i2, j1 + j2, &c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// (x + y)^m expanded over the field named by `tag`.
    pub fn xy_binomial_power(m: u32, tag: FieldTag) -> BivariatePoly {
        let mut out = BivariatePoly::zero(tag);
        for i in 0..=m {
            out.add_term(i, m - i, &binomial_in(m as u64, i as i64, tag));
        }
        out
    }

    /// Divides one factor (x + y) out of `self` exactly, or reports failure.
    /// Long division in y: (x + y) is monic of degree 1 in y, so the
    /// remainder is self evaluated at y = -x.
    fn divide_by_x_plus_y(&self) -> Option<BivariatePoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut rem = self.terms.clone();
        let mut quot = BivariatePoly::zero(self.tag);
        let max_y = self.max_y_degree().unwrap();
        for j in (1..=max_y).rev() {
            // quotient slice at y^(j-1) is the remainder slice at y^j
            let slice: Vec<(u32, Coefficient)> = rem
                .iter()
                .filter(|(&(_, yj), _)| yj == j)
                .map(|(&(xi, _), c)| (xi, c.clone()))
                .collect();
            for (xi, c) in slice {
                rem.remove(&(xi, j));
                quot.add_term(xi, j - 1, &c);
                // subtract c * x^(xi+1) y^(j-1)
                let key = (xi + 1, j - 1);
                let cur = rem.get(&key).cloned().unwrap_or_else(|| Coefficient::zero(self.tag));
                let nv = cur.sub(&c);
                if nv.is_zero() {
                    rem.remove(&key);
                } else {
                    rem.insert(key, nv);
                }
            }
        }
        if rem.is_empty() {
            Some(quot)
        } else {
            None
        }
    }
}

/// Exact quotient f / (x + y)^m, or `None` when (x + y)^m does not divide f.
pub fn divide_by_binomial_power(f: &BivariatePoly, m: u32) -> Option<BivariatePoly> {
    let mut cur = f.clone();
    for _ in 0..m {
        cur = cur.divide_by_x_plus_y()?;
    }
    Some(cur)
}

/// The y = 0 restriction of f as a univariate series in x.
pub fn substitute_y_zero(f: &BivariatePoly) -> TruncatedSeries {
    let trunc = f
        .terms
        .keys()
        .filter(|&&(_, j)| j == 0)
        .map(|&(i, _)| i)
        .max()
        .unwrap_or(0);
    let mut s = TruncatedSeries::zero(trunc, f.tag);
    for (&(i, j), c) in &f.terms {
        if j == 0 {
            s.set(i, c.clone());
        }
    }
    s
}

/// The series g_1 collecting the terms of f with y-exponent exactly 1.
pub fn y_linear_coefficient(f: &BivariatePoly) -> TruncatedSeries {
    let trunc = f
        .terms
        .keys()
        .filter(|&&(_, j)| j == 1)
        .map(|&(i, _)| i)
        .max()
        .unwrap_or(0);
    let mut s = TruncatedSeries::zero(trunc, f.tag);
    for (&(i, j), c) in &f.terms {
        if j == 1 {
            s.set(i, c.clone());
        }
    }
    s
}

/// Alias for [`BivariatePoly::mul`] under the name the rest of the crate
/// reads naturally.
pub fn poly_mul(a: &BivariatePoly, b: &BivariatePoly) -> Result<BivariatePoly, ArithError> {
    a.mul(b)
}

/// Univariate power series in x with exact coefficients, truncated at
/// degree `trunc` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<u32, Coefficient>,
    trunc: u32,
    tag: FieldTag,
}

impl TruncatedSeries {
    pub fn zero(trunc: u32, tag: FieldTag) -> TruncatedSeries {
        TruncatedSeries { coeffs: BTreeMap::new(), trunc, tag }
    }

    pub fn monomial(deg: u32, c: Coefficient, trunc: u32) -> TruncatedSeries {
        let tag = c.tag();
        let mut s = TruncatedSeries::zero(trunc, tag);
        s.set(deg, c);
        s
    }

    pub fn from_coeffs<I>(tag: FieldTag, trunc: u32, it: I) -> TruncatedSeries
    where
        I: IntoIterator<Item = (u32, Coefficient)>,
    {
        let mut s = TruncatedSeries::zero(trunc, tag);
        for (d, c) in it {
            s.set(d, c);
        }
        s
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn set(&mut self, deg: u32, c: Coefficient) {
        if deg > self.trunc || c.is_zero() {
            self.coeffs.remove(&deg);
            return;
        }
        self.coeffs.insert(deg, c);
    }

    pub fn coefficient(&self, deg: u32) -> Coefficient {
        self.coeffs
            .get(&deg)
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.tag))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &Coefficient)> {
        self.coeffs.iter()
    }

    /// The x-adic order, or `None` when the series is 0 up to its truncation.
    pub fn ord(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.coeffs.values().next()
    }

    pub fn truncate(&self, trunc: u32) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(trunc, self.tag);
        for (&d, c) in &self.coeffs {
            if d <= trunc {
                s.coeffs.insert(d, c.clone());
            }
        }
        s
    }

    pub fn add(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, ArithError> {
        if self.tag != o.tag {
            return Err(ArithError::FieldMismatch(self.tag, o.tag));
        }
        let trunc = self.trunc.min(o.trunc);
        let mut s = self.truncate(trunc);
        for (&d, c) in &o.coeffs {
            if d <= trunc {
                let v = s.coefficient(d).add(c);
                s.set(d, v);
            }
        }
        Ok(s)
    }

    pub fn sub(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, ArithError> {
        self.add(&o.scale(&Coefficient::one(o.tag).neg()))
    }

    pub fn scale(&self, c: &Coefficient) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.trunc, self.tag);
        for (&d, a) in &self.coeffs {
            s.set(d, a.mul(c));
        }
        s
    }

    pub fn mul(&self, o: &TruncatedSeries) -> Result<TruncatedSeries, ArithError> {
        if self.tag != o.tag {
            return Err(ArithError::FieldMismatch(self.tag, o.tag));
        }
        let trunc = self.trunc.min(o.trunc);
        let mut s = TruncatedSeries::zero(trunc, self.tag);
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &o.coeffs {
                if d1 + d2 <= trunc {
                    let v = s.coefficient(d1 + d2).add(&c1.mul(c2));
                    s.set(d1 + d2, v);
                }
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Coefficient {
        Coefficient::from_int(v, FieldTag::Char0)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_pascal_identity() {
        for n in 1..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    fn x_plus_y(tag: FieldTag) -> BivariatePoly {
        BivariatePoly::xy_binomial_power(1, tag)
    }

    #[test]
    fn poly_mul_square() {
        let s = x_plus_y(FieldTag::Char0);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coefficient(2, 0), q(1));
        assert_eq!(sq.coefficient(1, 1), q(2));
        assert_eq!(sq.coefficient(0, 2), q(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn poly_mul_identity() {
        let p = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(3)), ((0, 1), q(-5))],
        )
        .unwrap();
        let one = BivariatePoly::monomial(0, 0, q(1));
        assert_eq!(p.mul(&one).unwrap(), p);
    }

    #[test]
    fn poly_mul_char2_freshman_dream() {
        let tag = FieldTag::prime(2).unwrap();
        let s = x_plus_y(tag);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.coefficient(1, 1), Coefficient::zero(tag));
        assert_eq!(sq.num_terms(), 2);
    }

    #[test]
    fn poly_mul_rejects_field_mix() {
        let a = x_plus_y(FieldTag::Char0);
        let b = x_plus_y(FieldTag::prime(2).unwrap());
        assert!(matches!(a.mul(&b), Err(ArithError::FieldMismatch(_, _))));
        assert!(matches!(a.add(&b), Err(ArithError::FieldMismatch(_, _))));
    }

    #[test]
    fn divide_binomial_square() {
        let sq = BivariatePoly::xy_binomial_power(2, FieldTag::Char0);
        let qt = divide_by_binomial_power(&sq, 2).unwrap();
        assert_eq!(qt, BivariatePoly::monomial(0, 0, q(1)));
    }

    #[test]
    fn divide_binomial_not_divisible() {
        let xsq = BivariatePoly::monomial(2, 0, q(1));
        assert!(divide_by_binomial_power(&xsq, 1).is_none());
    }

    #[test]
    fn divide_binomial_cube_by_square() {
        let cube = BivariatePoly::xy_binomial_power(3, FieldTag::Char0);
        let qt = divide_by_binomial_power(&cube, 2).unwrap();
        assert_eq!(qt, BivariatePoly::xy_binomial_power(1, FieldTag::Char0));
    }

    #[test]
    fn substitute_y_zero_drops_y_terms() {
        let p = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(1)), ((1, 1), q(5))],
        )
        .unwrap();
        let s = substitute_y_zero(&p);
        assert_eq!(s.ord(), Some(2));
        assert_eq!(s.coefficient(2), q(1));
        let y3 = BivariatePoly::monomial(0, 3, q(1));
        assert!(substitute_y_zero(&y3).is_zero());
    }

    #[test]
    fn y_linear_part() {
        let p = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(1)), ((1, 1), q(3))],
        )
        .unwrap();
        let g1 = y_linear_coefficient(&p);
        assert_eq!(g1.ord(), Some(1));
        assert_eq!(g1.coefficient(1), q(3));

        let sq = BivariatePoly::xy_binomial_power(2, FieldTag::Char0);
        let g1 = y_linear_coefficient(&sq);
        assert_eq!(g1.coefficient(1), q(2));

        let tag2 = FieldTag::prime(2).unwrap();
        let sq2 = BivariatePoly::xy_binomial_power(2, tag2);
        assert!(y_linear_coefficient(&sq2).is_zero());
    }

    #[test]
    fn prime_field_inverse() {
        let tag = FieldTag::prime(7).unwrap();
        for v in 1..7 {
            let c = Coefficient::from_int(v, tag);
            assert_eq!(c.mul(&c.inv().unwrap()), Coefficient::one(tag));
        }
        assert!(FieldTag::prime(6).is_err());
        assert!(FieldTag::prime(1).is_err());
    }

    #[test]
    fn rational_stored_reduced() {
        use num_traits::Signed;
        let a = Coefficient::Rat(ExactRat::new(BigInt::from(2), BigInt::from(-4)));
        match &a {
            Coefficient::Rat(r) => {
                assert!(r.denom().is_positive());
                assert_eq!(r.numer(), &BigInt::from(-1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }
}

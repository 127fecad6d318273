//! Exact arithmetic: arbitrary-precision rationals, squarefree decomposition,
//! and elements of quadratic extensions `Q(√d)`.
//!
//! Every value here is immutable once built and every operation is a pure
//! function, so all types are `Send + Sync`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Trial-division bound used by [`squarefree_decompose`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no squarefree decomposition")]
    ZeroRadicand,
    #[error("square-part extraction needs factors above the trial-division bound {bound}")]
    FactorBoundExceeded { bound: u64 },
    #[error("quadratic extension radicands differ: {left} vs {right}")]
    RadicandMismatch { left: BigInt, right: BigInt },
    #[error("{0} is not a squarefree non-square integer")]
    InvalidRadicand(BigInt),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// A field element usable as a polynomial coefficient.
///
/// Constants are produced from an existing element (`zero_like`, `one_like`)
/// because a quadratic-extension element only knows its field through the
/// radicand it carries.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Image of a rational in the same field as `self`.
    fn rational_like(&self, r: &Rational) -> Self;

    fn int_like(&self, k: i64) -> Self {
        self.rational_like(&Rational::from(k))
    }

    /// Determinant of a square matrix whose entries share `sample`'s field.
    fn determinant(rows: Vec<Vec<Self>>, sample: &Self) -> Self {
        bareiss_determinant(rows, sample)
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_determinant<F: Field>(mut m: Vec<Vec<F>>, sample: &F) -> F {
    let n = m.len();
    if n == 0 {
        return sample.one_like();
    }
    let mut negate = false;
    let mut prev = sample.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return sample.zero_like(),
            }
        }
        let prev_inv = prev.inverse().expect("pivot is nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v * prev_inv.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Bareiss over `Z`: every intermediate entry is a minor, so the divisions
/// by the previous pivot are exact integer divisions.
fn integer_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact rational number in canonical form (positive denominator, reduced).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ExactError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ExactError> {
        Rational::one().checked_div(self)
    }

    /// `self^k`, with `x^0 = 1` for every `x` including zero.
    pub fn pow(&self, k: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), k as usize))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `2^k` as a rational.
    pub fn two_pow(k: u32) -> Rational {
        Rational::from_integer(BigInt::one() << k as usize)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Accepts `p` or `p/q` with optional sign and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_integer(
                t.parse::<BigInt>().map_err(|_| bad())?,
            )),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn pow(&self, k: u32) -> Self {
        Rational::pow(self, k)
    }

    /// Clears denominators row by row, then runs integer Bareiss.
    fn determinant(rows: Vec<Vec<Self>>, _sample: &Self) -> Self {
        let mut scale = BigInt::one();
        let int_rows = rows
            .into_iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
                scale *= l;
                out
            })
            .collect();
        Rational(BigRational::new(integer_bareiss(int_rows), scale))
    }
}

/// `input = squarefree_part · square_part²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    /// Positive rational `r`.
    pub square_part: Rational,
    /// Signed squarefree integer `d`, same sign as the input.
    pub squarefree_part: BigInt,
}

impl SquarefreeDecomposition {
    pub fn recompose(&self) -> Rational {
        Rational::from_integer(self.squarefree_part.clone()) * self.square_part.pow(2)
    }
}

/// Splits a nonzero rational as `d · r²` using the default factor bound.
pub fn squarefree_decompose(x: &Rational) -> Result<SquarefreeDecomposition, ExactError> {
    squarefree_decompose_with_bound(x, DEFAULT_FACTOR_BOUND)
}

/// Splits a nonzero rational as `d · r²`, trial dividing by every integer up
/// to `bound`.
///
/// `p/q = (p·q)/q²`, so only the integer `|p|·q` is factored.
pub fn squarefree_decompose_with_bound(
    x: &Rational,
    bound: u64,
) -> Result<SquarefreeDecomposition, ExactError> {
    if x.is_zero() {
        return Err(ExactError::ZeroRadicand);
    }
    let n = (x.numer().magnitude() * x.denom().magnitude()).clone();
    let (kernel, root) = integer_squarefree(n, bound)?;
    let sign = if x.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    };
    Ok(SquarefreeDecomposition {
        square_part: Rational::new(BigInt::from(root), x.denom().clone())?,
        squarefree_part: BigInt::from_biguint(sign, kernel),
    })
}

/// Returns `(k, m)` with `n = k·m²` and `k` squarefree.
fn integer_squarefree(n: BigUint, bound: u64) -> Result<(BigUint, BigUint), ExactError> {
    match n.to_u128() {
        Some(small) => {
            small_squarefree(small, bound).map(|(k, m)| (BigUint::from(k), BigUint::from(m)))
        }
        None => big_squarefree(n, bound),
    }
}

fn small_squarefree(mut n: u128, bound: u64) -> Result<(u128, u128), ExactError> {
    let (mut kernel, mut root) = (1u128, 1u128);
    let mut p: u128 = 2;
    let bound = bound as u128;
    while p <= bound && p * p <= n {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                kernel *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n == 1 {
        return Ok((kernel, root));
    }
    let limit = p.min(bound + 1);
    if limit.checked_mul(limit).is_none_or(|l2| l2 > n) {
        return Ok((kernel * n, root));
    }
    let s = n.isqrt();
    if s * s == n {
        return Ok((kernel, root * s));
    }
    if limit.checked_pow(3).is_none_or(|l3| l3 > n) {
        return Ok((kernel * n, root));
    }
    Err(ExactError::FactorBoundExceeded {
        bound: bound as u64,
    })
}

fn big_squarefree(mut n: BigUint, bound: u64) -> Result<(BigUint, BigUint), ExactError> {
    let mut kernel = BigUint::one();
    let mut root = BigUint::one();
    let mut p: u64 = 2;
    while p <= bound {
        if BigUint::from(p) * BigUint::from(p) > n {
            break;
        }
        let mut e = 0u32;
        while (&n % p).is_zero() {
            n /= p;
            e += 1;
        }
        if e > 0 {
            root *= BigUint::from(p).pow(e / 2);
            if e % 2 == 1 {
                kernel *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Ok((kernel, root));
    }
    // Every prime factor of the cofactor exceeds min(p, bound).
    let limit = BigUint::from(p.min(bound.saturating_add(1)));
    if &limit * &limit > n {
        // prime
        kernel *= n;
        return Ok((kernel, root));
    }
    let s = n.sqrt();
    if &s * &s == n {
        root *= s;
        return Ok((kernel, root));
    }
    if &limit * &limit * &limit > n {
        // At most two prime factors, not a square: distinct primes.
        kernel *= n;
        return Ok((kernel, root));
    }
    Err(ExactError::FactorBoundExceeded { bound })
}

/// Decides whether `x = r²` for a rational `r`; returns the nonnegative root.
///
/// Reduced `p/q` is a square iff `p ≥ 0` and both `p` and `q` are integer
/// squares, so no factoring is needed.
pub fn is_perfect_square(x: &Rational) -> (bool, Option<Rational>) {
    if x.is_negative() {
        return (false, None);
    }
    let p = x.numer().sqrt();
    let q = x.denom().sqrt();
    if &p * &p == *x.numer() && &q * &q == *x.denom() {
        (true, Some(Rational(BigRational::new(p, q))))
    } else {
        (false, None)
    }
}

/// Rational `k`-th root of `x` when one exists; the real root for odd `k`,
/// the nonnegative one for even `k`.
pub fn rational_nth_root(x: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let p = x.numer().nth_root(k);
    let q = x.denom().nth_root(k);
    if num_traits::pow(p.clone(), k as usize) == *x.numer()
        && num_traits::pow(q.clone(), k as usize) == *x.denom()
    {
        Some(Rational(BigRational::new(p, q)))
    } else {
        None
    }
}

/// The quadratic field `Q(√d)` with `d` squarefree and not 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: BigInt,
}

impl QuadField {
    pub fn new(d: impl Into<BigInt>) -> Result<Self, ExactError> {
        let d = d.into();
        if d.is_zero() || d.is_one() {
            return Err(ExactError::InvalidRadicand(d));
        }
        let dec = squarefree_decompose(&Rational::from_integer(d.clone()))?;
        if dec.squarefree_part != d {
            return Err(ExactError::InvalidRadicand(d));
        }
        Ok(QuadField { d })
    }

    /// Skips the squarefree check; `d` must already be a squarefree part.
    pub(crate) fn from_squarefree(d: BigInt) -> Self {
        debug_assert!(!d.is_zero() && !d.is_one());
        QuadField { d }
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn elem(&self, a: Rational, b: Rational) -> QuadExtElem {
        QuadExtElem {
            a,
            b,
            field: self.clone(),
        }
    }

    pub fn from_rational(&self, a: Rational) -> QuadExtElem {
        self.elem(a, Rational::zero())
    }

    pub fn zero(&self) -> QuadExtElem {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> QuadExtElem {
        self.from_rational(Rational::one())
    }

    /// `√d` itself.
    pub fn sqrt_d(&self) -> QuadExtElem {
        self.elem(Rational::zero(), Rational::one())
    }
}

/// `a + b√d` in `Q(√d)`.
///
/// The operator impls panic when radicands differ; use the `checked_*`
/// methods where operands may come from different fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    a: Rational,
    b: Rational,
    field: QuadField,
}

impl QuadExtElem {
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.field.d
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn conjugate(&self) -> QuadExtElem {
        self.field.elem(self.a.clone(), -&self.b)
    }

    /// `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        self.a.pow(2) - Rational::from_integer(self.field.d.clone()) * self.b.pow(2)
    }

    pub fn trace(&self) -> Rational {
        &self.a + &self.a
    }

    fn same_field(&self, rhs: &QuadExtElem) -> Result<(), ExactError> {
        if self.field.d != rhs.field.d {
            return Err(ExactError::RadicandMismatch {
                left: self.field.d.clone(),
                right: rhs.field.d.clone(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &QuadExtElem) -> Result<QuadExtElem, ExactError> {
        self.same_field(rhs)?;
        Ok(self.field.elem(&self.a + &rhs.a, &self.b + &rhs.b))
    }

    pub fn checked_sub(&self, rhs: &QuadExtElem) -> Result<QuadExtElem, ExactError> {
        self.same_field(rhs)?;
        Ok(self.field.elem(&self.a - &rhs.a, &self.b - &rhs.b))
    }

    pub fn checked_mul(&self, rhs: &QuadExtElem) -> Result<QuadExtElem, ExactError> {
        self.same_field(rhs)?;
        let d = Rational::from_integer(self.field.d.clone());
        let a = &self.a * &rhs.a + d * (&self.b * &rhs.b);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(self.field.elem(a, b))
    }

    /// `x / y = x·ȳ / N(y)`.
    pub fn checked_div(&self, rhs: &QuadExtElem) -> Result<QuadExtElem, ExactError> {
        self.same_field(rhs)?;
        let n = rhs.norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let num = self.checked_mul(&rhs.conjugate())?;
        Ok(self
            .field
            .elem(num.a.checked_div(&n)?, num.b.checked_div(&n)?))
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        use num_complex::Complex64;
        let d = self.field.d.to_f64().unwrap_or(f64::NAN);
        let root = if d >= 0.0 {
            Complex64::new(d.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-d).sqrt())
        };
        Complex64::new(self.a.to_f64(), 0.0) + root * self.b.to_f64()
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.field.d)
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! quad_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for QuadExtElem {
            type Output = QuadExtElem;
            fn $method(self, rhs: QuadExtElem) -> QuadExtElem {
                match self.$checked(&rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);

impl Neg for QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        QuadExtElem {
            a: -self.a,
            b: -self.b,
            field: self.field,
        }
    }
}

impl Field for QuadExtElem {
    fn zero_like(&self) -> Self {
        self.field.from_rational(Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.field.from_rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        QuadExtElem::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.one_like().checked_div(self).ok()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        self.field.from_rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        let half = q(2, 4);
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(
            q(7, 1).checked_div(&Rational::zero()),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(ExactError::DivisionByZero));
        assert_eq!(q(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn integer_pow_examples() {
        assert_eq!(Rational::from(2).pow(3), Rational::from(8));
        assert_eq!(q(-1, 2).pow(3), q(-1, 8));
        assert_eq!(Rational::from(5).pow(0), Rational::one());
        assert_eq!(Rational::zero().pow(0), Rational::one());
    }

    #[test]
    fn parse_rational() {
        assert_eq!("-6/4".parse::<Rational>().unwrap(), q(-3, 2));
        assert_eq!(" 12 ".parse::<Rational>().unwrap(), Rational::from(12));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    // Independent oracle: full factorization by naive trial division on i64.
    fn naive_squarefree(n: i64) -> (i64, i64) {
        let mut m = n.abs();
        let (mut kernel, mut root) = (1, 1);
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                kernel *= p;
            }
            p += 1;
        }
        (kernel * n.signum(), root)
    }

    #[test]
    fn squarefree_examples() {
        for (x, d, r) in [(3136, 1, 56), (32, 2, 4), (-8, -2, 2)] {
            assert_eq!(naive_squarefree(x), (d, r));
            let dec = squarefree_decompose(&Rational::from(x)).unwrap();
            assert_eq!(dec.squarefree_part, BigInt::from(d));
            assert_eq!(dec.square_part, Rational::from(r));
        }
        assert_eq!(
            squarefree_decompose(&Rational::zero()),
            Err(ExactError::ZeroRadicand)
        );
        let dec = squarefree_decompose(&q(3, 8)).unwrap();
        assert_eq!(dec.squarefree_part, BigInt::from(6));
        assert_eq!(dec.square_part, q(1, 4));
    }

    #[test]
    fn squarefree_large_cofactors() {
        // 1000003 is prime, above a small bound.
        let p = 1_000_003i64;
        let dec = squarefree_decompose_with_bound(&Rational::from(p * p * 12), 100).unwrap();
        assert_eq!(dec.squarefree_part, BigInt::from(3));
        assert_eq!(dec.square_part, Rational::from(2 * p));
        let dec = squarefree_decompose_with_bound(&Rational::from(p * 7), 100).unwrap();
        assert_eq!(dec.squarefree_part, BigInt::from(7 * p));
        // p·p'·p'' with all three above the bound cannot be classified
        let big = BigInt::from(1_000_003u64) * 1_000_033u64 * 1_000_037u64;
        assert_eq!(
            squarefree_decompose_with_bound(&Rational::from(big), 100),
            Err(ExactError::FactorBoundExceeded { bound: 100 })
        );
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(
            is_perfect_square(&Rational::from(3136)),
            (true, Some(Rational::from(56)))
        );
        assert_eq!(is_perfect_square(&Rational::from(392)), (false, None));
        assert_eq!(
            is_perfect_square(&Rational::zero()),
            (true, Some(Rational::zero()))
        );
        assert_eq!(is_perfect_square(&q(9, 49)), (true, Some(q(3, 7))));
        assert_eq!(is_perfect_square(&Rational::from(-4)), (false, None));
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&q(1, 64), 6), Some(q(1, 2)));
        assert_eq!(rational_nth_root(&q(-27, 8), 3), Some(q(-3, 2)));
        assert_eq!(rational_nth_root(&q(-16, 1), 4), None);
        assert_eq!(rational_nth_root(&q(2, 1), 2), None);
        assert_eq!(
            rational_nth_root(&Rational::zero(), 5),
            Some(Rational::zero())
        );
    }

    #[test]
    fn quadext_examples() {
        let k = QuadField::new(2).unwrap();
        let x = k.elem(Rational::one(), Rational::one());
        let y = k.elem(Rational::one(), -Rational::one());
        assert_eq!(x.clone() * y, k.from_rational(Rational::from(-1)));

        let z = k.elem(Rational::from(3), Rational::one());
        let inv = k.from_rational(Rational::one()).checked_div(&z).unwrap();
        assert_eq!(inv, k.elem(q(3, 7), q(-1, 7)));
        assert_eq!(inv * z, k.one());

        let k3 = QuadField::new(3).unwrap();
        let w = k3.elem(Rational::one(), Rational::one());
        assert!(matches!(
            x.checked_add(&w),
            Err(ExactError::RadicandMismatch { .. })
        ));
        assert_eq!(x.checked_div(&k.zero()), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn quad_field_rejects_bad_radicands() {
        assert!(QuadField::new(4).is_err());
        assert!(QuadField::new(12).is_err());
        assert!(QuadField::new(1).is_err());
        assert!(QuadField::new(0).is_err());
        assert!(QuadField::new(-1).is_ok());
        assert!(QuadField::new(-15).is_ok());
    }

    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        if m.is_empty() {
            return Rational::one();
        }
        let mut total = Rational::zero();
        for (j, x) in m[0].iter().enumerate() {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = x * &cofactor_det(&minor);
            total = if j % 2 == 0 {
                total + term
            } else {
                total - term
            };
        }
        total
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-60i64..=60, 1i64..=40).prop_map(|(n, d)| q(n, d))
    }

    fn quad_elem(d: i64) -> impl Strategy<Value = QuadExtElem> {
        (small_rational(), small_rational())
            .prop_map(move |(a, b)| QuadField::from_squarefree(BigInt::from(d)).elem(a, b))
    }

    fn radicand() -> impl Strategy<Value = i64> {
        prop::sample::select(vec![-7i64, -3, -2, -1, 2, 3, 5, 6, 10, 31])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rational_field_axioms(x in small_rational(), y in small_rational(), z in small_rational()) {
            prop_assert_eq!((&x + &y) + z.clone(), &x + &(&y + &z));
            prop_assert_eq!((&x * &y) * z.clone(), &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.recip().unwrap(), Rational::one());
            }
            prop_assert_eq!(&x + &(-&x), Rational::zero());
        }

        #[test]
        fn quad_field_axioms(
            (x, y, z) in radicand().prop_flat_map(|d| (quad_elem(d), quad_elem(d), quad_elem(d)))
        ) {
            prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(
                x.clone() * (y.clone() + z.clone()),
                x.clone() * y.clone() + x.clone() * z.clone()
            );
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inverse().unwrap(), x.one_like());
                prop_assert_eq!(y.checked_div(&x).unwrap() * x.clone(), y.clone());
            }
            prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        }

        #[test]
        fn determinant_paths_agree(
            m in prop::collection::vec(prop::collection::vec(small_rational(), 4), 4)
        ) {
            let generic = bareiss_determinant(m.clone(), &Rational::zero());
            let integer = <Rational as Field>::determinant(m.clone(), &Rational::zero());
            prop_assert_eq!(&generic, &integer);
            prop_assert_eq!(generic, cofactor_det(&m));
        }

        #[test]
        fn squarefree_recomposes(x in small_rational()) {
            prop_assume!(!x.is_zero());
            let dec = squarefree_decompose(&x).unwrap();
            prop_assert_eq!(dec.recompose(), x.clone());
            prop_assert!(!dec.square_part.is_negative());
            prop_assert_eq!(dec.squarefree_part.sign(), x.numer().sign());
            let k = dec.squarefree_part.magnitude().to_u64().unwrap();
            for p in (2..).take_while(|p| p * p <= k) {
                prop_assert!(!k.is_multiple_of(p * p));
            }
        }

        #[test]
        fn native_and_bigint_factoring_agree(n in 1u64..=u64::MAX, bound in 10u64..=2000) {
            let small = small_squarefree(n as u128, bound)
                .map(|(k, m)| (BigUint::from(k), BigUint::from(m)));
            prop_assert_eq!(small, big_squarefree(BigUint::from(n), bound));
        }

        #[test]
        fn square_of_rational_is_square(x in small_rational()) {
            prop_assert_eq!(is_perfect_square(&x.pow(2)), (true, Some(x.abs())));
        }
    }
}

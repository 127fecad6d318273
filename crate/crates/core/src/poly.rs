//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use thiserror::Error;

use crate::exact::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least {min}, got {got:?}")]
    DegreeTooLow { min: usize, got: Option<usize> },
}

/// Coefficients in ascending order of exponent, trimmed so the last stored
/// coefficient is nonzero. The zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(sample: &F, terms: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut coeffs: Vec<F> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, sample.zero_like());
            }
            coeffs[e] = coeffs[e].clone() + c;
        }
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&F> {
        self.coeffs.get(k)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.int_like(k as i64) * c.clone())
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(x.zero_like(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(r·x)`.
    pub fn compose_scale(&self, r: &F) -> Self {
        let mut scale = match self.coeffs.first() {
            Some(c) => c.one_like(),
            None => return Polynomial::zero(),
        };
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * scale.clone());
            scale = scale * r.clone();
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(Field::inverse) {
            Some(inv) => self.scale(&inv),
            None => Polynomial::zero(),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lc_inv = divisor
            .leading()
            .and_then(Field::inverse)
            .expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let Some(sample) = rem.first().cloned() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![sample.zero_like(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lc_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Resultant as the determinant of the Sylvester matrix, rows of `self`
    /// first.
    ///
    /// With `p = self` of degree `m` and leading coefficient `a`, this equals
    /// `a^{deg q} · ∏ q(α)` over the roots `α` of `p`.
    pub fn resultant(&self, q: &Self) -> Result<F, PolyError> {
        let (m, n) = match (self.degree(), q.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return Err(PolyError::ZeroPolynomial),
        };
        let sample = self.coeffs[0].clone();
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for (poly, deg, count) in [(self, m, n), (q, n, m)] {
            for shift in 0..count {
                let mut row = vec![sample.zero_like(); size];
                for (k, c) in poly.coeffs.iter().enumerate() {
                    row[shift + deg - k] = c.clone();
                }
                rows.push(row);
            }
        }
        Ok(F::determinant(rows, &sample))
    }

    /// `(−1)^{d(d−1)/2} · res(p, p′) / lc(p)`; zero iff `p` has a repeated
    /// root.
    pub fn discriminant(&self) -> Result<F, PolyError> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            got => return Err(PolyError::DegreeTooLow { min: 1, got }),
        };
        let lc = self.leading().expect("nonzero").clone();
        let res = self.resultant(&self.derivative())?;
        let disc = res * lc.inverse().expect("nonzero leading");
        Ok(if (d * (d - 1) / 2) % 2 == 1 {
            -disc
        } else {
            disc
        })
    }

    /// Exponent patterns `e ≡ residue (mod δ)` over the support, with the
    /// largest such δ for each residue class that applies.
    ///
    /// Residue 0 needs a nonzero constant term and reports
    /// `s = deg/δ − 1` (interior coefficients of `x^{δ(s+1)} + … + 1`).
    /// Residue 1 needs a zero constant term and reports `s = (deg − 1)/δ`,
    /// the degree of `g` in `x·g(x^δ)`.
    pub fn delta_support(&self) -> Result<Vec<DeltaSupport>, PolyError> {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            got => return Err(PolyError::DegreeTooLow { min: 1, got }),
        };
        let support: Vec<usize> = self.support().collect();
        let mut out = Vec::new();
        if support[0] == 0 {
            let delta = support[1..].iter().fold(0usize, |g, &e| g.gcd(&e));
            out.push(DeltaSupport {
                delta,
                residue: 0,
                s: deg / delta - 1,
            });
        } else {
            // gcd is 0 for a lone term c·x, which has no period
            let delta = support.iter().fold(0usize, |g, &e| g.gcd(&(e - 1)));
            if delta > 0 {
                out.push(DeltaSupport {
                    delta,
                    residue: 1,
                    s: (deg - 1) / delta,
                });
            }
        }
        Ok(out)
    }
}

/// Support pattern of a polynomial: all exponents are `≡ residue (mod delta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaSupport {
    pub delta: usize,
    pub residue: u8,
    pub s: usize,
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (k, c) in short.into_iter().enumerate() {
            long[k] = long[k].clone() + c;
        }
        Polynomial::new(long)
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Polynomial<Rational> {
    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }
}

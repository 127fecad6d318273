//! Superelliptic curves `y^n = f(x)` over `Q`: validation, genus, and the
//! `g(x^δ)` / `x·g(x^δ)` normal forms that signal an extra automorphism.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::exact::{rational_nth_root, Rational};
use crate::poly::Polynomial;

/// A single reason a pair `(n, f)` fails to define a curve of genus ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ExponentTooSmall { n: u64 },
    DegreeNotAboveExponent { n: u64, d: Option<usize> },
    RepeatedRoot,
    GenusTooSmall { genus: u64 },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::ExponentTooSmall { .. } => "exponent_too_small",
            Violation::DegreeNotAboveExponent { .. } => "degree_not_above_exponent",
            Violation::RepeatedRoot => "repeated_root",
            Violation::GenusTooSmall { .. } => "genus_too_small",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ExponentTooSmall { n } => write!(f, "exponent n = {n} is below 2"),
            Violation::DegreeNotAboveExponent { n, d } => match d {
                Some(d) => write!(f, "deg f = {d} does not exceed n = {n}"),
                None => write!(f, "f is the zero polynomial"),
            },
            Violation::RepeatedRoot => write!(f, "f has a repeated root (zero discriminant)"),
            Violation::GenusTooSmall { genus } => write!(f, "genus {genus} is below 2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid curve: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("genus formula needs n >= 2 and d > n, got n = {n}, d = {d}")]
    GenusDomain { n: u64, d: u64 },
    #[error("genus formula gave a non-integer for n = {n}, d = {d}")]
    NonIntegralGenus { n: u64, d: u64 },
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("delta = {delta} does not fit the exponent support of f")]
    DeltaMismatch { delta: usize },
}

/// `g = 1 + (nd − n − d − gcd(n, d))/2`.
pub fn genus(n: u64, d: u64) -> Result<u64, CurveError> {
    if n < 2 || d <= n {
        return Err(CurveError::GenusDomain { n, d });
    }
    let twice = n * d - n - d - n.gcd(&d) + 2;
    if !twice.is_multiple_of(2) {
        return Err(CurveError::NonIntegralGenus { n, d });
    }
    Ok(twice / 2)
}

/// A validated curve `y^n = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperellipticCurve {
    n: u64,
    f: Polynomial<Rational>,
}

impl SuperellipticCurve {
    /// Checks every condition and reports all that fail, not only the first.
    pub fn validate(n: u64, f: Polynomial<Rational>) -> Result<Self, CurveError> {
        let mut violations = Vec::new();
        let d = f.degree();
        if n < 2 {
            violations.push(Violation::ExponentTooSmall { n });
        }
        if d.is_none_or(|d| d as u64 <= n) {
            violations.push(Violation::DegreeNotAboveExponent { n, d });
        }
        if let Ok(disc) = f.discriminant() {
            if disc.is_zero() {
                violations.push(Violation::RepeatedRoot);
            }
        }
        if let Some(d) = d {
            if let Ok(g) = genus(n, d as u64) {
                if g < 2 {
                    violations.push(Violation::GenusTooSmall { genus: g });
                }
            }
        }
        if violations.is_empty() {
            Ok(SuperellipticCurve { n, f })
        } else {
            Err(CurveError::Invalid(violations))
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn f(&self) -> &Polynomial<Rational> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("validated curves have deg f > n")
    }

    pub fn genus(&self) -> u64 {
        genus(self.n, self.degree() as u64).expect("validated")
    }

    /// The curve `y^n = f(r·x)`.
    pub fn rescale_x(&self, r: &Rational) -> Result<Self, CurveError> {
        if r.is_zero() {
            return Err(CurveError::ZeroScale);
        }
        Ok(SuperellipticCurve {
            n: self.n,
            f: self.f.compose_scale(r),
        })
    }

    /// Largest-δ normal form readable from the support of `f`.
    pub fn classify_normal_form(&self) -> NormalForm {
        let patterns = self.f.delta_support().unwrap_or_default();
        let best = patterns
            .iter()
            .filter(|p| p.delta >= 2)
            .max_by_key(|p| (p.delta, p.residue == 0));
        match best {
            Some(p) if p.residue == 0 => self.read_g_delta(p.delta),
            Some(p) => self.read_xg_delta(p.delta),
            None => NormalForm::none(
                patterns.iter().map(|p| p.delta).max().unwrap_or(0),
                "no exponent pattern with delta >= 2; no extra automorphism is visible from f",
            ),
        }
    }

    /// Normal form with δ pinned by the caller. δ must divide the period of
    /// the support; useful when `a_1 = 0` makes the detected δ too large.
    pub fn classify_with_delta(&self, delta: usize) -> Result<NormalForm, CurveError> {
        let patterns = self.f.delta_support().unwrap_or_default();
        let fits = |residue: u8| {
            patterns
                .iter()
                .any(|p| p.residue == residue && delta >= 2 && p.delta % delta == 0)
        };
        if fits(0) {
            Ok(self.read_g_delta(delta))
        } else if fits(1) {
            Ok(self.read_xg_delta(delta))
        } else {
            Err(CurveError::DeltaMismatch { delta })
        }
    }

    fn read_g_delta(&self, delta: usize) -> NormalForm {
        let deg = self.degree();
        let s = deg / delta - 1;
        let c0 = self.f.coeff(0).cloned().unwrap_or_default();
        if c0 != Rational::one() {
            return NormalForm::none(
                delta,
                &format!(
                    "constant term {c0} is not 1; the g(x^delta) normal form needs constant 1"
                ),
            );
        }
        let (f, rescale) = match self.normalize_leading(deg, &Rational::one()) {
            Ok(v) => v,
            Err(msg) => return NormalForm::none(delta, &msg),
        };
        let a = (1..=s)
            .map(|i| f.coeff(i * delta).cloned().unwrap_or_default())
            .collect();
        NormalForm {
            kind: NormalFormKind::GDelta,
            delta,
            s,
            a,
            rescale,
            diagnostic: None,
        }
    }

    fn read_xg_delta(&self, delta: usize) -> NormalForm {
        let deg = self.degree();
        let s = (deg - 1) / delta;
        let c1 = self.f.coeff(1).cloned().unwrap_or_default();
        let Ok(r) = c1.recip() else {
            return NormalForm::none(delta, "coefficient of x vanishes");
        };
        // f(r x) has x-coefficient c1·r = 1; its leading coefficient must then be 1 too.
        let scale = if r == Rational::one() {
            None
        } else {
            Some(r.clone())
        };
        let f = self.f.compose_scale(&r);
        if f.leading() != Some(&Rational::one()) {
            return NormalForm::none(
                delta,
                "no rational rescaling makes both the x coefficient and the leading coefficient 1",
            );
        }
        let a = (1..s)
            .map(|i| f.coeff(1 + i * delta).cloned().unwrap_or_default())
            .collect();
        NormalForm {
            kind: NormalFormKind::XGDelta,
            delta,
            s,
            a,
            rescale: scale,
            diagnostic: None,
        }
    }

    /// Finds rational `r` with `lc·r^deg = target` and returns `f(r x)`.
    fn normalize_leading(
        &self,
        deg: usize,
        target: &Rational,
    ) -> Result<(Polynomial<Rational>, Option<Rational>), String> {
        let lc = self.f.leading().expect("nonzero").clone();
        if &lc == target {
            return Ok((self.f.clone(), None));
        }
        let ratio = target.checked_div(&lc).map_err(|e| e.to_string())?;
        match rational_nth_root(&ratio, deg as u32) {
            Some(r) => Ok((self.f.compose_scale(&r), Some(r))),
            None => Err(format!(
                "leading coefficient {lc} needs a {deg}-th root outside Q to normalize"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormKind {
    /// `x^{δ(s+1)} + a_s x^{δs} + … + a_1 x^δ + 1`
    GDelta,
    /// `x·g(x^δ)` with `g` monic of degree `s` and constant term 1
    XGDelta,
    None,
}

impl NormalFormKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            NormalFormKind::GDelta => "GDelta",
            NormalFormKind::XGDelta => "XGDelta",
            NormalFormKind::None => "None",
        }
    }
}

/// Result of normal-form classification.
///
/// For `GDelta`, `a = (a_1, …, a_s)` with `a_i` the coefficient of `x^{δi}`.
/// For `XGDelta`, `a = (a_1, …, a_{s−1})` with `a_i` the coefficient of
/// `x^{1+δi}`. `rescale` is the `r` used when `f(r x)` was needed to reach
/// the normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    pub delta: usize,
    pub s: usize,
    pub a: Vec<Rational>,
    pub rescale: Option<Rational>,
    pub diagnostic: Option<String>,
}

impl NormalForm {
    fn none(delta: usize, why: &str) -> Self {
        NormalForm {
            kind: NormalFormKind::None,
            delta,
            s: 0,
            a: Vec::new(),
            rescale: None,
            diagnostic: Some(why.to_string()),
        }
    }
}

/// `x^{δ(s+1)} + a_s x^{δs} + … + a_1 x^δ + 1`.
pub fn g_delta_polynomial(a: &[Rational], delta: usize) -> Polynomial<Rational> {
    let s = a.len();
    let one = Rational::one();
    let terms = std::iter::once((0, one.clone()))
        .chain(
            a.iter()
                .enumerate()
                .map(|(i, c)| ((i + 1) * delta, c.clone())),
        )
        .chain(std::iter::once(((s + 1) * delta, one)));
    Polynomial::from_terms(&Rational::zero(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_ints(c)
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(2, 6), Ok(2));
        assert_eq!(genus(2, 5), Ok(2));
        assert_eq!(genus(3, 4), Ok(3));
        assert_eq!(genus(2, 3), Ok(1));
        assert!(matches!(genus(1, 4), Err(CurveError::GenusDomain { .. })));
        assert!(matches!(genus(4, 4), Err(CurveError::GenusDomain { .. })));
    }

    #[test]
    fn genus_integral_and_coprime_case() {
        for n in 2u64..40 {
            for d in n + 1..=40 {
                let g = genus(n, d).unwrap();
                assert!(g >= 1);
                if n.gcd(&d) == 1 {
                    assert_eq!(2 * g, (n - 1) * (d - 1));
                }
            }
        }
    }

    #[test]
    fn validate_examples() {
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 3, 0, 2, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2);

        // (x² − 1)²(x² − 4)
        let f = p(&[-1, 0, 1]) * p(&[-1, 0, 1]) * p(&[-4, 0, 1]);
        assert_eq!(
            SuperellipticCurve::validate(2, f),
            Err(CurveError::Invalid(vec![Violation::RepeatedRoot]))
        );
        assert_eq!(
            SuperellipticCurve::validate(2, p(&[1, 1, 0, 1])),
            Err(CurveError::Invalid(vec![Violation::GenusTooSmall {
                genus: 1
            }]))
        );
    }

    #[test]
    fn validate_reports_each_condition() {
        let good = p(&[1, 0, 3, 0, 2, 0, 1]);
        // n too small also makes d > n hold but genus undefined
        let err = SuperellipticCurve::validate(1, good.clone()).unwrap_err();
        assert_eq!(
            err,
            CurveError::Invalid(vec![Violation::ExponentTooSmall { n: 1 }])
        );
        let err = SuperellipticCurve::validate(7, good).unwrap_err();
        assert_eq!(
            err,
            CurveError::Invalid(vec![Violation::DegreeNotAboveExponent { n: 7, d: Some(6) }])
        );
        let f = p(&[0, 0, 1, 1]);
        let err = SuperellipticCurve::validate(1, f).unwrap_err();
        assert_eq!(
            err,
            CurveError::Invalid(vec![
                Violation::ExponentTooSmall { n: 1 },
                Violation::RepeatedRoot
            ])
        );
    }

    #[test]
    fn classify_examples() {
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 3, 0, 2, 0, 1])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!(nf.kind, NormalFormKind::GDelta);
        assert_eq!((nf.delta, nf.s), (2, 2));
        assert_eq!(nf.a, vec![r(3), r(2)]);

        let c = SuperellipticCurve::validate(3, p(&[0, 1, 0, 0, 5, 0, 0, 1])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!(nf.kind, NormalFormKind::XGDelta);
        assert_eq!((nf.delta, nf.s), (3, 2));
        assert_eq!(nf.a, vec![r(5)]);

        let c = SuperellipticCurve::validate(2, p(&[1, 1, 0, 1, 0, 1])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!(nf.kind, NormalFormKind::None);
        assert_eq!(nf.delta, 1);
        assert!(nf.diagnostic.is_some());
    }

    #[test]
    fn classify_normalizes_leading_coefficient_when_rational() {
        // 64x⁶ + 3x² + 1 → r = 1/2 gives x⁶ + (3/4)x² + 1
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 3, 0, 0, 0, 64])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!(nf.kind, NormalFormKind::GDelta);
        assert_eq!(nf.rescale, Some(Rational::new(1, 2).unwrap()));
        assert_eq!(nf.a, vec![Rational::new(3, 4).unwrap(), r(0)]);

        let c = SuperellipticCurve::validate(2, p(&[1, 0, 3, 0, 0, 0, 2])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!(nf.kind, NormalFormKind::None);
        assert!(nf.diagnostic.unwrap().contains("root outside Q"));

        let c = SuperellipticCurve::validate(2, p(&[3, 0, 3, 0, 0, 0, 1])).unwrap();
        assert_eq!(c.classify_normal_form().kind, NormalFormKind::None);
    }

    #[test]
    fn delta_override() {
        // x⁸ + 3x⁴ + 1 reads as δ = 4, s = 1; pinning δ = 2 recovers s = 3, a = (0, 3, 0)
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 0, 0, 3, 0, 0, 0, 1])).unwrap();
        let nf = c.classify_normal_form();
        assert_eq!((nf.delta, nf.s), (4, 1));
        let nf = c.classify_with_delta(2).unwrap();
        assert_eq!((nf.delta, nf.s), (2, 3));
        assert_eq!(nf.a, vec![r(0), r(3), r(0)]);
        assert_eq!(
            c.classify_with_delta(3),
            Err(CurveError::DeltaMismatch { delta: 3 })
        );
    }

    #[test]
    fn rescale_examples() {
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 3, 0, 2, 0, 1])).unwrap();
        assert_eq!(c.rescale_x(&r(1)).unwrap(), c);
        let c = SuperellipticCurve::validate(2, p(&[1, 0, 0, 0, 0, 0, 64])).unwrap();
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(c.rescale_x(&half).unwrap().f(), &p(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(c.rescale_x(&r(0)), Err(CurveError::ZeroScale));
    }

    fn coeff() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn classify_recovers_synthesized_shape(
            delta in 2usize..=4,
            a in prop::collection::vec(coeff(), 2..=4),
        ) {
            prop_assume!(!a[0].is_zero());
            let f = g_delta_polynomial(&a, delta);
            prop_assume!(!f.discriminant().unwrap().is_zero());
            let c = SuperellipticCurve::validate(2, f).unwrap();
            let nf = c.classify_normal_form();
            prop_assert_eq!(nf.kind, NormalFormKind::GDelta);
            prop_assert_eq!(nf.delta, delta);
            prop_assert_eq!(nf.s, a.len());
            prop_assert_eq!(nf.a, a);
        }

        #[test]
        fn rescale_roundtrip(a in prop::collection::vec(coeff(), 2..=3), r in coeff()) {
            prop_assume!(!r.is_zero());
            let f = g_delta_polynomial(&a, 2);
            prop_assume!(!f.discriminant().unwrap().is_zero());
            let c = SuperellipticCurve::validate(3, f).unwrap();
            let back = c.rescale_x(&r).unwrap().rescale_x(&r.recip().unwrap()).unwrap();
            prop_assert_eq!(back, c);
        }
    }
}

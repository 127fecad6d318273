//! Dihedral invariants of `y^n = x^{δ(s+1)} + a_s x^{δs} + … + a_1 x^δ + 1`
//! and reconstruction of a model over the minimal field of definition.
//!
//! The invariants are
//!
//! ```text
//! s_i = a_1^{s+1−i} a_i + a_s^{s+1−i} a_{s+1−i}     (i = 1, …, s)
//! ```
//!
//! so `s_1 = a_1^{s+1} + a_s^{s+1}` and `s_s = 2 a_1 a_s`. The substitution
//! `x → a_s^{1/δ} x` turns the curve into
//!
//! ```text
//! y^n = A x^{δ(s+1)} + A x^{δs} + Σ_{i<s} c_i x^{δi} + 1,   A = a_s^{s+1},  c_i = a_i a_s^i
//! ```
//!
//! where `A` is a root of `2^{s+1} A² − 2^{s+1} s_1 A + s_s^{s+1} = 0` with
//! discriminant `Δ_s = 2^{s+1}(2^{s+1} s_1² − 4 s_s^{s+1})`. The other root
//! is `a_1^{s+1}`, so `B = a_1^{s+1} − a_s^{s+1} = s_1 − 2A` and
//!
//! ```text
//! c_i = (s_s^i s_i / 2^i − A s_{s+1−i}) / (s_1 − 2A).
//! ```
//!
//! The model therefore lives over `Q(√Δ_s)`, which is `Q` itself exactly when
//! `Δ_s` is a rational square.
//!
//! A closed form that circulates for the same coefficients,
//! `2^{s−i} s_1 (s_s^i s_i − A s_{s+1−i}) / (2^s s_1² − s_s^{s+1})`, does not
//! reproduce `a_i a_s^i`: for `a = (2, 1)` it gives `144/65` where the true
//! value is `2`. The `s_1 − 2A` form above is the one implemented, and the
//! roundtrip harness ([`roundtrip_verify`]) checks it against forward
//! evaluation.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use thiserror::Error;

use crate::exact::{
    is_perfect_square, squarefree_decompose, ExactError, Field, QuadExtElem, QuadField, Rational,
};
use crate::poly::Polynomial;

/// Relative deviation accepted by [`numeric_crosscheck`].
pub const CROSSCHECK_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DihedralError {
    #[error("dihedral invariants need s >= 2, got s = {s}")]
    TooFewCoefficients { s: usize },
    #[error(
        "degenerate locus: Δ_s = 0, so a_1^(s+1) = a_s^(s+1) and the automorphism group is \
         larger; reconstruction needs a different normal form"
    )]
    DegenerateLocus,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `(n, δ, s)`: the curve exponent, the automorphism order on `x`, and the
/// number of interior coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub n: u64,
    pub delta: usize,
    pub s: usize,
}

/// `(s_1, …, s_s)` together with the shape they belong to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralInvariants {
    s_values: Vec<Rational>,
    shape: Shape,
}

/// Computes `(s_1, …, s_s)` from the interior coefficients `(a_1, …, a_s)`.
pub fn compute_invariants(
    a: &[Rational],
    n: u64,
    delta: usize,
) -> Result<DihedralInvariants, DihedralError> {
    let s = a.len();
    if s < 2 {
        return Err(DihedralError::TooFewCoefficients { s });
    }
    let (a1, a_s) = (&a[0], &a[s - 1]);
    let s_values = (1..=s)
        .map(|i| {
            let e = (s + 1 - i) as u32;
            a1.pow(e) * &a[i - 1] + a_s.pow(e) * &a[s - i]
        })
        .collect();
    Ok(DihedralInvariants {
        s_values,
        shape: Shape { n, delta, s },
    })
}

impl DihedralInvariants {
    /// Wraps externally supplied invariant values; `s` is their count.
    pub fn new(s_values: Vec<Rational>, n: u64, delta: usize) -> Result<Self, DihedralError> {
        let s = s_values.len();
        if s < 2 {
            return Err(DihedralError::TooFewCoefficients { s });
        }
        Ok(DihedralInvariants {
            s_values,
            shape: Shape { n, delta, s },
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.s_values
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `s_i`, 1-indexed.
    pub fn get(&self, i: usize) -> &Rational {
        &self.s_values[i - 1]
    }

    fn s(&self) -> usize {
        self.shape.s
    }

    /// `Δ_s = 2^{s+1}(2^{s+1} s_1² − 4 s_s^{s+1})`.
    pub fn discriminant(&self) -> Rational {
        let s = self.s() as u32;
        let two = Rational::two_pow(s + 1);
        let inner = &two * &self.get(1).pow(2) - Rational::from(4) * self.get(self.s()).pow(s + 1);
        two * inner
    }

    /// Coefficients of `2^{s+1} A² − 2^{s+1} s_1 A + s_s^{s+1}`, ascending.
    pub fn quadratic(&self) -> Polynomial<Rational> {
        let s = self.s() as u32;
        let two = Rational::two_pow(s + 1);
        Polynomial::new(vec![
            self.get(self.s()).pow(s + 1),
            -(&two * self.get(1)),
            two,
        ])
    }

    /// Both roots `A = (s_1 ± √Δ_s / 2^{s+1}) / 2`, in `Q` when `Δ_s` is a
    /// square and in `Q(√d)` (d the squarefree part of `Δ_s`) otherwise.
    pub fn solve_a(&self) -> Result<RootPair, DihedralError> {
        let delta_s = self.discriminant();
        let half_s1 = self.get(1).checked_div(&Rational::from(2))?;
        let scale = Rational::two_pow(self.s() as u32 + 2).recip()?;
        if let (true, Some(root)) = is_perfect_square(&delta_s) {
            let offset = root * &scale;
            return Ok(RootPair {
                plus: FieldElement::Rational(&half_s1 + &offset),
                minus: FieldElement::Rational(&half_s1 - &offset),
            });
        }
        let dec = squarefree_decompose(&delta_s)?;
        let field = QuadField::from_squarefree(dec.squarefree_part);
        let offset = dec.square_part * &scale;
        Ok(RootPair {
            plus: FieldElement::Quadratic(field.elem(half_s1.clone(), offset.clone())),
            minus: FieldElement::Quadratic(field.elem(half_s1, -offset)),
        })
    }

    /// Whether the field of moduli `Q(s_1, …, s_s) = Q` is already a field of
    /// definition, and otherwise which quadratic extension is needed.
    pub fn field_of_definition(&self) -> Result<FieldReport, DihedralError> {
        let delta_s = self.discriminant();
        if delta_s.is_zero() {
            return Ok(FieldReport {
                delta_s,
                squarefree_radicand: None,
                is_square: true,
                is_degenerate: true,
                field: FieldDescription::BaseField,
            });
        }
        let (is_square, _) = is_perfect_square(&delta_s);
        let dec = squarefree_decompose(&delta_s)?;
        let field = if is_square {
            FieldDescription::BaseField
        } else {
            FieldDescription::QuadraticExtension(dec.squarefree_part.clone())
        };
        Ok(FieldReport {
            delta_s,
            squarefree_radicand: Some(dec.squarefree_part),
            is_square,
            is_degenerate: false,
            field,
        })
    }

    /// The model `y^n = A x^{δ(s+1)} + A x^{δs} + Σ c_i x^{δi} + 1` for the
    /// chosen root `A`.
    pub fn reconstruct(&self, choice: RootChoice) -> Result<ReconstructedCurve, DihedralError> {
        if self.discriminant().is_zero() {
            return Err(DihedralError::DegenerateLocus);
        }
        let roots = self.solve_a()?;
        let leading = roots.get(choice).clone();
        let c_values = match &leading {
            FieldElement::Rational(a) => self
                .coefficients_for(a)
                .into_iter()
                .map(FieldElement::Rational)
                .collect(),
            FieldElement::Quadratic(a) => self
                .coefficients_for(a)
                .into_iter()
                .map(FieldElement::Quadratic)
                .collect(),
        };
        Ok(ReconstructedCurve {
            leading,
            c_values,
            shape: self.shape,
            root_choice: choice,
        })
    }

    /// `c_i = (s_s^i s_i / 2^i − A s_{s+1−i}) / (s_1 − 2A)` for `i < s`.
    fn coefficients_for<F: Field>(&self, a: &F) -> Vec<F> {
        let s = self.s();
        let b = a.rational_like(self.get(1)) - a.int_like(2) * a.clone();
        let b_inv = b.inverse().expect("s_1 - 2A vanishes only when Δ_s = 0");
        let s_last = self.get(s);
        (1..s)
            .map(|i| {
                let head = s_last.pow(i as u32) * self.get(i);
                let head = head
                    .checked_div(&Rational::two_pow(i as u32))
                    .expect("nonzero");
                let tail = a.clone() * a.rational_like(self.get(s + 1 - i));
                (a.rational_like(&head) - tail) * b_inv.clone()
            })
            .collect()
    }
}

/// An element of `Q` or of one fixed `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    Quadratic(QuadExtElem),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Quadratic(q) => q.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Quadratic(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            FieldElement::Rational(r) => Complex64::new(r.to_f64(), 0.0),
            FieldElement::Quadratic(q) => q.to_complex(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Quadratic(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    /// `A = (s_1 + √Δ_s / 2^{s+1}) / 2`
    Plus,
    /// `A = (s_1 − √Δ_s / 2^{s+1}) / 2`
    Minus,
}

impl RootChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootChoice::Plus => "plus",
            RootChoice::Minus => "minus",
        }
    }

    pub fn other(&self) -> RootChoice {
        match self {
            RootChoice::Plus => RootChoice::Minus,
            RootChoice::Minus => RootChoice::Plus,
        }
    }
}

impl std::str::FromStr for RootChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" => Ok(RootChoice::Plus),
            "minus" => Ok(RootChoice::Minus),
            other => Err(format!("root must be plus or minus, got {other:?}")),
        }
    }
}

/// The two roots of the quadratic in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPair {
    pub plus: FieldElement,
    pub minus: FieldElement,
}

impl RootPair {
    pub fn get(&self, choice: RootChoice) -> &FieldElement {
        match choice {
            RootChoice::Plus => &self.plus,
            RootChoice::Minus => &self.minus,
        }
    }

    /// `minus`, unless that root is zero (then `s_s = 0` and the model with
    /// `A = 0` collapses), in which case `plus`.
    pub fn default_choice(&self) -> RootChoice {
        if self.minus.is_zero() {
            RootChoice::Plus
        } else {
            RootChoice::Minus
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.plus, FieldElement::Rational(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescription {
    /// The field of moduli itself.
    BaseField,
    /// `F(√d)`.
    QuadraticExtension(BigInt),
}

impl fmt::Display for FieldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescription::BaseField => write!(f, "F"),
            FieldDescription::QuadraticExtension(d) => write!(f, "F(sqrt({d}))"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldReport {
    pub delta_s: Rational,
    /// `None` only when `Δ_s = 0`.
    pub squarefree_radicand: Option<BigInt>,
    pub is_square: bool,
    pub is_degenerate: bool,
    pub field: FieldDescription,
}

impl FieldReport {
    /// Field of moduli equals the minimal field of definition.
    pub fn moduli_is_definition(&self) -> bool {
        self.field == FieldDescription::BaseField
    }
}

/// `y^n = A x^{δ(s+1)} + A x^{δs} + c_{s−1} x^{δ(s−1)} + … + c_1 x^δ + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructedCurve {
    pub leading: FieldElement,
    /// `(c_1, …, c_{s−1})`.
    pub c_values: Vec<FieldElement>,
    pub shape: Shape,
    pub root_choice: RootChoice,
}

impl ReconstructedCurve {
    /// `(exponent, coefficient)` for exponents `δ·0, δ·1, …, δ(s+1)`.
    pub fn terms(&self) -> Vec<(usize, FieldElement)> {
        let delta = self.shape.delta;
        let one = match &self.leading {
            FieldElement::Rational(_) => FieldElement::Rational(Rational::one()),
            FieldElement::Quadratic(q) => FieldElement::Quadratic(q.one_like()),
        };
        let mut out = vec![(0, one)];
        for (i, c) in self.c_values.iter().enumerate() {
            out.push(((i + 1) * delta, c.clone()));
        }
        out.push((self.shape.s * delta, self.leading.clone()));
        out.push(((self.shape.s + 1) * delta, self.leading.clone()));
        out
    }

    /// `A = 0` gives the constant right-hand side `1`, which is not a curve.
    pub fn is_degenerate_model(&self) -> bool {
        self.leading.is_zero()
    }

    pub fn rational_polynomial(&self) -> Option<Polynomial<Rational>> {
        let terms: Option<Vec<_>> = self
            .terms()
            .into_iter()
            .map(|(e, c)| c.as_rational().map(|r| (e, r.clone())))
            .collect();
        Some(Polynomial::from_terms(&Rational::zero(), terms?))
    }

    pub fn quadratic_polynomial(&self) -> Option<Polynomial<QuadExtElem>> {
        let FieldElement::Quadratic(sample) = &self.leading else {
            return None;
        };
        let terms = self.terms().into_iter().map(|(e, c)| match c {
            FieldElement::Quadratic(q) => (e, q),
            FieldElement::Rational(r) => (e, sample.rational_like(&r)),
        });
        Some(Polynomial::from_terms(sample, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundtripStatus {
    Pass,
    Fail(String),
    SkippedDegenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    pub invariants: DihedralInvariants,
    pub status: RoundtripStatus,
    pub root_choice: Option<RootChoice>,
    /// `A` from the reconstruction.
    pub leading: Option<Rational>,
    /// `c_i` from the reconstruction.
    pub c_values: Vec<Rational>,
    /// Whether the invariants were also re-derived from `{A, c_i}` (needs `A ≠ 0`).
    pub products_checked: bool,
}

/// Computes invariants from `a`, reconstructs with the root equal to
/// `a_s^{s+1}`, and checks `A = a_s^{s+1}` and `c_i = a_i a_s^i` exactly.
///
/// When `A ≠ 0` it also rebuilds every `s_j` as
/// `(s_s/2)^{s+1−j} c_j / A + c_{s+1−j}` (with `c_s = A`) and compares.
pub fn roundtrip_verify(
    a: &[Rational],
    n: u64,
    delta: usize,
) -> Result<RoundtripReport, DihedralError> {
    let inv = compute_invariants(a, n, delta)?;
    let s = a.len();
    let mut report = RoundtripReport {
        invariants: inv.clone(),
        status: RoundtripStatus::Pass,
        root_choice: None,
        leading: None,
        c_values: Vec::new(),
        products_checked: false,
    };
    if inv.discriminant().is_zero() {
        report.status = RoundtripStatus::SkippedDegenerate;
        return Ok(report);
    }
    let a_s = &a[s - 1];
    let target = a_s.pow(s as u32 + 1);
    let roots = inv.solve_a()?;
    let choice = [RootChoice::Minus, RootChoice::Plus]
        .into_iter()
        .find(|&c| roots.get(c).as_rational() == Some(&target));
    let Some(choice) = choice else {
        report.status = RoundtripStatus::Fail(format!("a_s^(s+1) = {target} is not a root"));
        return Ok(report);
    };
    report.root_choice = Some(choice);
    let rec = inv.reconstruct(choice)?;
    let leading = rec.leading.as_rational().cloned().expect("rational root");
    let c: Vec<Rational> = rec
        .c_values
        .iter()
        .map(|v| v.as_rational().cloned().expect("rational field"))
        .collect();
    report.leading = Some(leading.clone());
    report.c_values = c.clone();

    if leading != target {
        report.status = RoundtripStatus::Fail(format!("A = {leading}, expected {target}"));
        return Ok(report);
    }
    for i in 1..s {
        let expected = &a[i - 1] * &a_s.pow(i as u32);
        if c[i - 1] != expected {
            report.status =
                RoundtripStatus::Fail(format!("c_{i} = {}, expected {expected}", c[i - 1]));
            return Ok(report);
        }
    }

    if !leading.is_zero() {
        let half_ss = inv.get(s).checked_div(&Rational::from(2))?;
        let c_full = |j: usize| {
            if j == s {
                leading.clone()
            } else {
                c[j - 1].clone()
            }
        };
        for j in 1..=s {
            let rebuilt = (half_ss.pow((s + 1 - j) as u32) * c_full(j)).checked_div(&leading)?
                + c_full(s + 1 - j);
            if &rebuilt != inv.get(j) {
                report.status = RoundtripStatus::Fail(format!(
                    "s_{j} rebuilt from products = {rebuilt}, expected {}",
                    inv.get(j)
                ));
                return Ok(report);
            }
        }
        report.products_checked = true;
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrosscheckReport {
    /// `max_j |s_j(numeric) − s_j| / max(1, |s_j|)`; `None` when `A = 0`.
    pub max_relative_deviation: Option<f64>,
    pub passed: bool,
    pub note: Option<String>,
}

/// Floating-point check of a reconstruction: embeds the field in `C`, takes
/// `a_s = A^{1/(s+1)}` (principal branch), `a_i = c_i / a_s^i`, and
/// recomputes the invariants.
pub fn numeric_crosscheck(
    inv: &DihedralInvariants,
    choice: RootChoice,
) -> Result<CrosscheckReport, DihedralError> {
    let rec = inv.reconstruct(choice)?;
    let s = inv.shape().s;
    if rec.is_degenerate_model() {
        return Ok(CrosscheckReport {
            max_relative_deviation: None,
            passed: false,
            note: Some("chosen root A is 0; a_s cannot be recovered".to_string()),
        });
    }
    let big_a = rec.leading.to_complex();
    let a_s = big_a.powf(1.0 / (s as f64 + 1.0));
    let mut a: Vec<Complex64> = rec
        .c_values
        .iter()
        .enumerate()
        .map(|(k, c)| c.to_complex() / a_s.powi(k as i32 + 1))
        .collect();
    a.push(a_s);
    let mut worst = 0.0f64;
    for i in 1..=s {
        let e = (s + 1 - i) as i32;
        let numeric = a[0].powi(e) * a[i - 1] + a[s - 1].powi(e) * a[s - i];
        let exact = inv.get(i).to_f64();
        let dev = (numeric - Complex64::new(exact, 0.0)).norm() / exact.abs().max(1.0);
        worst = worst.max(dev);
    }
    Ok(CrosscheckReport {
        max_relative_deviation: Some(worst),
        passed: worst < CROSSCHECK_TOLERANCE,
        note: None,
    })
}

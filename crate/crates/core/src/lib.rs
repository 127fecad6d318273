//! Exact arithmetic toolkit for superelliptic curves `y^n = f(x)` with an
//! extra automorphism: dihedral invariants, the field-of-moduli versus
//! field-of-definition decision, and reconstruction of a model over the
//! minimal field of definition.

pub mod curve;
pub mod dihedral;
pub mod exact;
pub mod poly;
pub mod sampling;

pub use curve::{genus, NormalForm, NormalFormKind, SuperellipticCurve};
pub use dihedral::{
    compute_invariants, numeric_crosscheck, roundtrip_verify, DihedralError, DihedralInvariants,
    FieldDescription, FieldElement, FieldReport, ReconstructedCurve, RootChoice, RootPair,
};
pub use exact::{Field, QuadExtElem, QuadField, Rational};
pub use poly::Polynomial;

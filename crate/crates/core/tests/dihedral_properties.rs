use num_bigint::BigInt;
use proptest::prelude::*;
use superelliptic_core::dihedral::{compute_invariants, roundtrip_verify, RoundtripStatus};
use superelliptic_core::exact::{Field, QuadExtElem, QuadField};
use superelliptic_core::{DihedralInvariants, FieldElement, Polynomial, Rational, RootChoice};

fn rational(height: i64) -> impl Strategy<Value = Rational> {
    (-height..=height, 1..=height).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn tuple(max_s: usize, height: i64) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(height), 2..=max_s)
}

/// Both roots lifted into one common field (Q, or the Q(√d) they share).
type Lifted = (
    Box<dyn Fn(&Rational) -> QuadExtElem>,
    QuadExtElem,
    QuadExtElem,
);

fn lift(roots: &superelliptic_core::RootPair) -> Lifted {
    let field = match &roots.plus {
        FieldElement::Quadratic(q) => q.field().clone(),
        // Q embeds in any Q(√d); pick d = −1 as the carrier
        FieldElement::Rational(_) => QuadField::new(-1).unwrap(),
    };
    let to = |e: &FieldElement, f: &QuadField| match e {
        FieldElement::Rational(r) => f.from_rational(r.clone()),
        FieldElement::Quadratic(q) => q.clone(),
    };
    let plus = to(&roots.plus, &field);
    let minus = to(&roots.minus, &field);
    let f2 = field.clone();
    (
        Box::new(move |r: &Rational| f2.from_rational(r.clone())),
        plus,
        minus,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn swap_invariance(a in tuple(8, 50)) {
        let rev: Vec<Rational> = a.iter().rev().cloned().collect();
        prop_assert_eq!(compute_invariants(&a, 2, 1).unwrap(), compute_invariants(&rev, 2, 1).unwrap());
    }

    #[test]
    fn vieta_membership_and_b_identity(vals in prop::collection::vec(rational(20), 2..=5)) {
        let inv = DihedralInvariants::new(vals, 2, 1).unwrap();
        let s = inv.shape().s as u32;
        let roots = inv.solve_a().unwrap();
        let (emb, plus, minus) = lift(&roots);

        prop_assert_eq!(plus.clone() + minus.clone(), emb(inv.get(1)));
        let prod = inv.get(inv.shape().s).pow(s + 1).checked_div(&Rational::two_pow(s + 1)).unwrap();
        prop_assert_eq!(plus.clone() * minus.clone(), emb(&prod));

        let quad = inv.quadratic();
        let lifted = Polynomial::new(quad.coeffs().iter().map(&emb).collect());
        prop_assert!(lifted.evaluate(&plus).is_zero());
        prop_assert!(lifted.evaluate(&minus).is_zero());

        let b = emb(inv.get(1)) - plus.int_like(2) * plus.clone();
        let rhs = inv.discriminant().checked_div(&Rational::two_pow(2 * (s + 1))).unwrap();
        prop_assert_eq!(b.clone() * b, emb(&rhs));

        let report = inv.field_of_definition().unwrap();
        prop_assert_eq!(report.is_square, roots.is_rational());
        if !report.is_square {
            let d = report.squarefree_radicand.clone().unwrap();
            prop_assert_eq!(plus.d(), &d);
        }
    }

    #[test]
    fn roundtrip_is_exact(a in tuple(8, 50)) {
        let rep = roundtrip_verify(&a, 2, 1).unwrap();
        prop_assert!(matches!(rep.status, RoundtripStatus::Pass | RoundtripStatus::SkippedDegenerate), "{:?}", rep.status);
    }

    #[test]
    fn other_root_reconstructs_reversed_tuple(a in tuple(6, 30)) {
        let inv = compute_invariants(&a, 2, 1).unwrap();
        prop_assume!(!inv.discriminant().is_zero());
        let rep = roundtrip_verify(&a, 2, 1).unwrap();
        let other = rep.root_choice.unwrap().other();
        let rec = inv.reconstruct(other).unwrap();
        let rev: Vec<Rational> = a.iter().rev().cloned().collect();
        let rev_rep = roundtrip_verify(&rev, 2, 1).unwrap();
        prop_assert_eq!(rev_rep.status, RoundtripStatus::Pass);
        prop_assert_eq!(rec.leading.as_rational(), rev_rep.leading.as_ref());
        let c: Vec<Rational> = rec.c_values.iter().map(|c| c.as_rational().unwrap().clone()).collect();
        prop_assert_eq!(c, rev_rep.c_values);
    }
}

#[test]
fn degenerate_tuples_have_zero_discriminant() {
    // a_1^{s+1} = a_s^{s+1}: a_s = a_1, and a_s = −a_1 when s + 1 is even
    let mut count = 0;
    for k in 1..=50i64 {
        for s in [2usize, 3] {
            let a1 = Rational::new(k, 7).unwrap();
            let a_s = if s % 2 == 1 && k % 2 == 0 {
                -a1.clone()
            } else {
                a1.clone()
            };
            let mut a = vec![Rational::from(k - 25); s];
            a[0] = a1;
            a[s - 1] = a_s;
            let inv = compute_invariants(&a, 3, 2).unwrap();
            assert!(inv.discriminant().is_zero());
            assert_eq!(
                roundtrip_verify(&a, 3, 2).unwrap().status,
                RoundtripStatus::SkippedDegenerate
            );
            count += 1;
        }
    }
    assert_eq!(count, 100);
}

#[test]
fn discriminant_sign_determines_real_or_imaginary_field() {
    let inv = DihedralInvariants::new(vec![Rational::from(1), Rational::from(3)], 2, 2).unwrap();
    // Δ_s = 8·(8 − 4·27) = −800 = −2·20²
    let rep = inv.field_of_definition().unwrap();
    assert_eq!(rep.delta_s, Rational::from(-800));
    assert_eq!(rep.squarefree_radicand, Some(BigInt::from(-2)));
    let rec = inv.reconstruct(RootChoice::Minus).unwrap();
    assert!(matches!(rec.leading, FieldElement::Quadratic(ref q) if q.d() == &BigInt::from(-2)));
}

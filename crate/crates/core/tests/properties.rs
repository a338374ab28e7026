//! Cross-module properties over randomly generated monoid bialgebras and
//! the fixed families, using only the public API.

use bialg_core::canonical::{build_boxslash, build_oslash, s_residuals, s_witness, t_identities, t_witness};
use bialg_core::cofree::{cofree_hopf, iterate_k};
use bialg_core::convolution::{conv_inverse, is_antipode};
use bialg_core::envelope::{hopf_envelope, iterate_q};
use bialg_core::families::{radford_adjoin_unit, radford_dual, sweedler_h4};
use bialg_core::monoid::{
    enveloping_group, monoid_bialgebra, random_transformation_monoid, units_and_left_units, FiniteMonoid,
};
use bialg_core::{Bialgebra, Endo, Field, Side, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3))]
}

fn monoid() -> impl Strategy<Value = FiniteMonoid> {
    (any::<u64>(), 2usize..=4, 1usize..=2).prop_filter_map("monoid larger than 6", |(seed, degree, gens)| {
        random_transformation_monoid(&mut ChaCha8Rng::seed_from_u64(seed), degree, gens, 6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monoid_bases_are_grouplike_without_primitives(m in monoid(), f in field()) {
        let b = monoid_bialgebra(&m, f).unwrap();
        prop_assert!((0..b.dim()).all(|g| b.is_grouplike(&b.basis_vector(g))));
        if f == Field::Rational {
            prop_assert_eq!(b.primitives().dim(), 0);
        }
    }

    #[test]
    fn quotient_by_zero_is_identity(m in monoid(), f in field()) {
        let b = monoid_bialgebra(&m, f).unwrap();
        let (copy, projection) = b.quotient_by_biideal(&Subspace::zero(f, b.dim())).unwrap();
        prop_assert_eq!(copy.dim(), b.dim());
        prop_assert!(projection.matrix.is_identity());
        prop_assert!(projection.is_bialgebra_map());
    }

    #[test]
    fn canonical_maps_have_their_shape(m in monoid(), f in field()) {
        let b = monoid_bialgebra(&m, f).unwrap();
        let oslash = build_oslash(&b).unwrap();
        let boxslash = build_boxslash(&b).unwrap();
        prop_assert!(oslash.i_surjective());
        prop_assert!(boxslash.p_injective());
        prop_assert!(s_residuals(&oslash, &s_witness(&oslash).unwrap()).unwrap().all());
        prop_assert!(t_identities(&boxslash, &t_witness(&boxslash).unwrap()).unwrap().all());
    }

    #[test]
    fn envelope_and_cofree_match_the_monoid(m in monoid(), f in field()) {
        let b = monoid_bialgebra(&m, f).unwrap();
        let env = hopf_envelope(&b).unwrap();
        prop_assert!(env.hopf.verify_axioms().all_hold());
        prop_assert!(is_antipode(&env.hopf, &env.antipode).unwrap());
        prop_assert_eq!(env.hopf.dim(), enveloping_group(&m, f).unwrap().group.size());
        let cofree = cofree_hopf(&b).unwrap();
        prop_assert!(cofree.hopf.verify_axioms().all_hold());
        prop_assert_eq!(cofree.hopf.dim(), units_and_left_units(&m).unwrap().units.len());
        prop_assert!(iterate_q(&b).unwrap().1 <= 1);
        prop_assert!(iterate_k(&b).unwrap().1 <= 1);
    }
}

fn has_antipode(b: &Bialgebra) -> bool {
    conv_inverse(b, &Endo::identity(b), Side::TwoSided).unwrap().is_some()
}

#[test]
fn hopf_inputs_are_their_own_envelope_and_cofree() {
    let h4 = sweedler_h4(Field::Rational).unwrap();
    assert!(has_antipode(&h4));
    assert_eq!(hopf_envelope(&h4).unwrap().hopf.dim(), 4);
    assert_eq!(cofree_hopf(&h4).unwrap().hopf.dim(), 4);
}

#[test]
fn radford_families_collapse_to_the_ground_field() {
    for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
        for n in 1..=4 {
            let b = radford_dual(f, n).unwrap();
            assert_eq!(hopf_envelope(&b).unwrap().hopf.dim(), 1, "n = {n} over {f}");
            assert_eq!(cofree_hopf(&b).unwrap().hopf.dim(), 1, "n = {n} over {f}");
        }
    }
    let c = bialg_core::families::matrix_coalgebra(Field::Prime(3), 2).unwrap();
    let r = radford_adjoin_unit(&c).unwrap();
    assert!(!has_antipode(&r));
    assert_eq!(hopf_envelope(&r).unwrap().hopf.dim(), 1);
}

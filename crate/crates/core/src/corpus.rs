//! Built-in fixtures and the invariant suite run over each of them.

use crate::bialgebra::{Bialgebra, Side};
use crate::canonical::{
    build_boxslash, build_oslash, frobenius_report_from, s_residuals, s_witness, t_identities, t_witness,
};
use crate::cofree::{basis_aligned_sub_bialgebras, cocommutative_cofree, cofree_hopf, duality_check, iterate_k};
use crate::convolution::{
    central_n_antipode, conv_inverse, convolution_unit_between, convolve, is_antipode, minimal_n_antipode, Endo,
};
use crate::envelope::{cocommutative_envelope_check, hopf_envelope, iterate_q, oslash_iso_check};
use crate::error::{Error, Result};
use crate::families::{
    grouplike_coalgebra, matrix_coalgebra, quotient_quantum_plane, radford_adjoin_unit, radford_dual, sweedler_h4,
};
use crate::linalg::{Field, Matrix, Subspace};
use crate::monoid::{
    cancellativity_cross_check, cyclic_group, direct_product, enveloping_group, localization_check, monogenic,
    monoid_bialgebra, units_and_left_units, FiniteMonoid,
};

/// A named bialgebra, with the monoid it came from when there is one.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub bialgebra: Bialgebra,
    pub monoid: Option<FiniteMonoid>,
}

impl Fixture {
    pub fn from_monoid(name: impl Into<String>, monoid: FiniteMonoid, field: Field) -> Result<Self> {
        Ok(Fixture {
            name: name.into(),
            bialgebra: monoid_bialgebra(&monoid, field)?,
            monoid: Some(monoid),
        })
    }

    fn plain(name: &str, bialgebra: Bialgebra) -> Self {
        Fixture {
            name: name.to_string(),
            bialgebra,
            monoid: None,
        }
    }
}

const SUBSET_SEARCH_LIMIT: usize = 8;

pub const BUILTIN_NAMES: &[&str] = &[
    "quantum-plane",
    "sweedler",
    "radford-matrix",
    "radford-grouplike",
    "radford-dual-1",
    "radford-dual-2",
    "radford-dual-3",
    "cyclic-2",
    "cyclic-3",
    "c2xc3",
    "periodic-2-3",
    "idempotent",
    "nilpotent-2",
    "nilpotent-3",
    "periodic-1-2",
    "periodic-1-2xc2",
];

/// Monoid behind a monoid fixture name.
pub fn builtin_monoid(name: &str) -> Option<Result<FiniteMonoid>> {
    Some(match name {
        "cyclic-2" => cyclic_group(2),
        "cyclic-3" => cyclic_group(3),
        "c2xc3" => cyclic_group(2).and_then(|a| Ok(direct_product(&a, &cyclic_group(3)?))),
        "periodic-2-3" => monogenic(2, 3),
        "idempotent" => monogenic(1, 1),
        "nilpotent-2" => monogenic(2, 1),
        "nilpotent-3" => monogenic(3, 1),
        "periodic-1-2" => monogenic(1, 2),
        "periodic-1-2xc2" => monogenic(1, 2).and_then(|a| Ok(direct_product(&a, &cyclic_group(2)?))),
        _ => return None,
    })
}

pub fn builtin(name: &str, field: Field) -> Result<Fixture> {
    if let Some(monoid) = builtin_monoid(name) {
        return Fixture::from_monoid(name, monoid?, field);
    }
    let bialgebra = match name {
        "quantum-plane" => quotient_quantum_plane(field)?,
        "sweedler" => sweedler_h4(field)?,
        "radford-matrix" => radford_adjoin_unit(&matrix_coalgebra(field, 2)?)?,
        "radford-grouplike" => radford_adjoin_unit(&grouplike_coalgebra(field, 1)?)?,
        "radford-dual-1" => radford_dual(field, 1)?,
        "radford-dual-2" => radford_dual(field, 2)?,
        "radford-dual-3" => radford_dual(field, 3)?,
        _ => return Err(Error::Unsupported(format!("no built-in fixture named {name}"))),
    };
    Ok(Fixture::plain(name, bialgebra))
}

/// Every built-in fixture available over `field`.
pub fn builtin_fixtures(field: Field) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for name in BUILTIN_NAMES {
        match builtin(name, field) {
            Ok(f) => out.push(f),
            Err(Error::Unsupported(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

/// Dimensions and invariant outcomes for one fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub ker_i_dim: usize,
    pub oslash_dim: usize,
    pub boxslash_dim: usize,
    pub hopf_dim: usize,
    pub cofree_dim: usize,
    pub cofree_dual_dim: usize,
    pub left_n: usize,
    pub right_n: usize,
    pub central_n: usize,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name)
    }
}

fn flip_stable(b: &Bialgebra, coinvariants: &Subspace) -> Result<bool> {
    let d = b.dim();
    let field = b.field();
    let tau = Matrix::from_fn(field, d * d, d * d, |r, c| {
        if r == (c % d) * d + c / d {
            field.one()
        } else {
            field.zero()
        }
    });
    Ok(&coinvariants.map_through(&tau)? == coinvariants)
}

/// Runs every pipeline on `fixture` and records the invariants they must
/// satisfy. Errors are reserved for failures inside a pipeline.
pub fn run_invariants(fixture: &Fixture) -> Result<InvariantReport> {
    let b = &fixture.bialgebra;
    let mut checks = Vec::new();
    let mut check = |name: &'static str, holds: bool| checks.push(Check { name, holds });

    let oslash = build_oslash(b)?;
    let boxslash = build_boxslash(b)?;
    check("i surjective", oslash.i_surjective());
    check("p injective", boxslash.p_injective());

    let frobenius = frobenius_report_from(&oslash, &boxslash)?;
    check("frobenius conditions coincide", frobenius.consistent);

    let s = s_witness(&oslash)?;
    check("S residuals lie in ker i", s_residuals(&oslash, &s)?.all());
    let t = t_witness(&boxslash)?;
    check("T identities on im p", t_identities(&boxslash, &t)?.all());

    let envelope = hopf_envelope(b)?;
    check(
        "envelope is a Hopf algebra",
        envelope.hopf.verify_axioms().all_hold() && is_antipode(&envelope.hopf, &envelope.antipode)?,
    );
    check(
        "envelope map is a bialgebra map",
        envelope.structure_map.is_bialgebra_map(),
    );
    check(
        "dim H = dim B - dim ker i",
        envelope.hopf.dim() + oslash.ker_i().dim() == b.dim(),
    );
    let (q_fix, q_steps) = iterate_q(b)?;
    check("Q stabilizes in one step", q_steps <= 1 && q_fix == envelope.hopf);
    check("B⊘B ≅ H(B)", oslash_iso_check(b)?.holds());

    let cofree = cofree_hopf(b)?;
    check(
        "cofree is a Hopf algebra",
        cofree.hopf.verify_axioms().all_hold() && is_antipode(&cofree.hopf, &cofree.antipode)?,
    );
    check("cofree map is a bialgebra map", cofree.structure_map.is_bialgebra_map());
    check("dim C = dim B⊠B", cofree.hopf.dim() == boxslash.dim());
    let k = &cofree.structure_map.matrix;
    let k_s = k.mul(cofree.antipode.matrix())?;
    let unit = convolution_unit_between(&cofree.hopf, b);
    check(
        "k two-sided convolution invertible",
        convolve(&cofree.hopf, b, k, &k_s)? == unit && convolve(&cofree.hopf, b, &k_s, k)? == unit,
    );
    if b.dim() <= SUBSET_SEARCH_LIMIT {
        let c = k.image();
        let mut larger_without_antipode = true;
        for w in basis_aligned_sub_bialgebras(b)? {
            if c.is_subspace_of(&w) && w.dim() > c.dim() {
                let (sub, _) = b.sub_bialgebra(&w)?;
                larger_without_antipode &= conv_inverse(&sub, &Endo::identity(&sub), Side::TwoSided)?.is_none();
            }
        }
        check("no larger basis-aligned sub-bialgebra is Hopf", larger_without_antipode);
    }
    let (k_fix, k_steps) = iterate_k(b)?;
    check("K stabilizes in one step", k_steps <= 1 && k_fix == cofree.hopf);

    let duality = duality_check(b)?;
    check("C(B*) ≅ H(B)*", duality.holds());

    let left = minimal_n_antipode(b, Side::Left)?;
    let right = minimal_n_antipode(b, Side::Right)?;
    let central = central_n_antipode(b)?;
    check("left and central n agree", left.n == central.n);
    check("right and central n agree", right.n == central.n);

    if b.is_cocommutative() {
        check("flip is the transported antipode", cocommutative_envelope_check(b)?);
        let cocofree = cocommutative_cofree(b)?;
        let stable = flip_stable(b, boxslash.subspace())?;
        check(
            "dim C^c ≤ dim B⊠B with equality iff flip-stable",
            cocofree.hopf.dim() <= boxslash.dim() && (cocofree.hopf.dim() == boxslash.dim()) == stable,
        );
        if cofree.hopf.is_cocommutative() {
            check(
                "C^c agrees with C when C is cocommutative",
                cocofree.hopf.dim() == cofree.hopf.dim(),
            );
        }
    }

    if let Some(m) = &fixture.monoid {
        let field = b.field();
        check(
            "cancellation matches i and p",
            cancellativity_cross_check(m, field)?.agrees(),
        );
        let units = units_and_left_units(m)?;
        check("C(kM) has dimension |units|", cofree.hopf.dim() == units.units.len());
        let group = enveloping_group(m, field)?;
        check("|G(M)| = dim H(kM)", group.group.size() == envelope.hopf.dim());
        if let Some(loc) = localization_check(m, field)? {
            check("ker i generated by localization relations", loc.matches());
        }
    }

    Ok(InvariantReport {
        name: fixture.name.clone(),
        field: b.field(),
        dim: b.dim(),
        ker_i_dim: oslash.ker_i().dim(),
        oslash_dim: oslash.quotient_dim(),
        boxslash_dim: boxslash.dim(),
        hopf_dim: envelope.hopf.dim(),
        cofree_dim: cofree.hopf.dim(),
        cofree_dual_dim: duality.cofree_dual_dim,
        left_n: left.n,
        right_n: right.n,
        central_n: central.n,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_passes_over_the_rationals() {
        for fixture in builtin_fixtures(Field::Rational).unwrap() {
            let r = run_invariants(&fixture).unwrap();
            assert!(r.all_hold(), "{}: {:?}", r.name, r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn every_builtin_passes_over_small_prime_fields() {
        for field in [Field::Prime(2), Field::Prime(3)] {
            for fixture in builtin_fixtures(field).unwrap() {
                let r = run_invariants(&fixture).unwrap();
                assert!(
                    r.all_hold(),
                    "{} over {field}: {:?}",
                    r.name,
                    r.failures().collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn characteristic_two_skips_signed_fixtures() {
        let names: Vec<String> = builtin_fixtures(Field::Prime(2))
            .unwrap()
            .into_iter()
            .map(|f| f.name)
            .collect();
        assert!(!names.contains(&"quantum-plane".to_string()));
        assert!(names.contains(&"periodic-2-3".to_string()));
    }

    #[test]
    fn golden_dimensions() {
        let r = run_invariants(&builtin("quantum-plane", Field::Rational).unwrap()).unwrap();
        assert_eq!(
            (
                r.dim,
                r.ker_i_dim,
                r.oslash_dim,
                r.hopf_dim,
                r.cofree_dim,
                r.cofree_dual_dim
            ),
            (6, 2, 4, 4, 1, 4)
        );
        assert_eq!((r.left_n, r.right_n, r.central_n), (1, 1, 1));
        let r = run_invariants(&builtin("periodic-2-3", Field::Rational).unwrap()).unwrap();
        assert_eq!((r.hopf_dim, r.cofree_dim, r.cofree_dual_dim, r.central_n), (3, 1, 3, 2));
        let r = run_invariants(&builtin("radford-matrix", Field::Rational).unwrap()).unwrap();
        assert_eq!((r.dim, r.hopf_dim, r.cofree_dim, r.left_n), (5, 1, 1, 1));
    }
}

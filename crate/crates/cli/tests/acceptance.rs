//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! (visible with `--nocapture`); the test fails if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;

use bialg_core::canonical::{build_boxslash, build_oslash};
use bialg_core::cofree::cofree_hopf;
use bialg_core::convolution::{antipode_shape_check, central_n_antipode, id_power, is_n_antipode, minimal_n_antipode};
use bialg_core::corpus::{builtin, builtin_fixtures, run_invariants, Fixture};
use bialg_core::envelope::hopf_envelope;
use bialg_core::families::{
    grouplike_coalgebra, grouplike_scan, matrix_coalgebra, quotient_quantum_plane, radford_adjoin_unit, radford_dual,
};
use bialg_core::monoid::{
    cyclic_group, direct_product, enveloping_group, monogenic, monoid_bialgebra, random_transformation_monoid,
    FiniteMonoid,
};
use bialg_core::oracle::{all_monoids, coinvariant_count, relation_count};
use bialg_core::{Bialgebra, Endo, Field, Scalar, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn e(err: impl std::fmt::Display) -> String {
    err.to_string()
}

fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&c| field.from_i64(c)).collect()
}

const Q: Field = Field::Rational;
const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(2), Field::Prime(3)];

// Basis order of the quotient quantum plane: 1, x, x², y, xy, x²y.
fn quantum_plane_envelope_and_cofree() -> Outcome {
    let b = quotient_quantum_plane(Q).map_err(e)?;
    ensure(b.dim() == 6, || format!("dim {}", b.dim()))?;
    let oslash = build_oslash(&b).map_err(e)?;
    let ker = oslash.ker_i();
    ensure(ker.dim() == 2, || format!("dim ker i = {}", ker.dim()))?;
    ensure(ker.contains(&ints(Q, &[-1, 0, 1, 0, 0, 0])), || "x²−1 ∉ ker i".into())?;
    ensure(oslash.quotient_dim() == 4, || {
        format!("dim B⊘B = {}", oslash.quotient_dim())
    })?;

    let env = hopf_envelope(&b).map_err(e)?;
    let h = &env.hopf;
    ensure(h.dim() == 4, || format!("dim H = {}", h.dim()))?;
    ensure(h.verify_axioms().all_hold(), || "H fails an axiom".into())?;
    let q = &env.structure_map.matrix;
    let qx = q.column(1);
    ensure(h.multiply(&qx, &qx) == q.column(0), || "q(x)² ≠ 1".into())?;
    ensure(is_n_antipode(h, &env.antipode, 0, Side::TwoSided).map_err(e)?, || {
        "envelope antipode fails S*Id = u∘ε = Id*S".into()
    })?;

    let c = cofree_hopf(&b).map_err(e)?;
    ensure(c.hopf.dim() == 1, || format!("dim C = {}", c.hopf.dim()))?;
    ensure(b.primitives().dim() == 0, || "nonzero primitives".into())
}

fn n_antipode_indices() -> Outcome {
    let b = quotient_quantum_plane(Q).map_err(e)?;
    let left = minimal_n_antipode(&b, Side::Left).map_err(e)?;
    ensure(left.n == 1, || format!("quantum plane n = {}", left.n))?;

    let id = id_power(&b, 1);
    let two_id = id.matrix().scale(&Q.from_i64(2));
    let s = Endo::new(two_id.sub(id_power(&b, 3).matrix()).map_err(e)?).map_err(e)?;
    ensure(s.apply(&b.basis_vector(1)) == b.basis_vector(1), || "S(x) ≠ x".into())?;
    ensure(s.apply(&b.basis_vector(3)) == ints(Q, &[0, 0, 0, 1, -1, -1]), || {
        "S(y) ≠ (1−x−x²)y".into()
    })?;
    ensure(is_n_antipode(&b, &s, 1, Side::TwoSided).map_err(e)?, || {
        "2Id − Id^{*3} is not a 1-antipode".into()
    })?;
    ensure(antipode_shape_check(&b, &s).map_err(e)?.anti_algebra, || {
        "S not anti-multiplicative".into()
    })?;

    for n in 1..=3 {
        let m = monogenic(n, 1).map_err(e)?;
        let kb = monoid_bialgebra(&m, Q).map_err(e)?;
        let found = minimal_n_antipode(&kb, Side::Left).map_err(e)?.n;
        ensure(found == n, || format!("x^{} = x^{n}: index {found}", n + 1))?;
    }

    for field in FIELDS {
        for fixture in builtin_fixtures(field).map_err(e)? {
            let b = &fixture.bialgebra;
            let left = minimal_n_antipode(b, Side::Left).map_err(e)?.n;
            let central = central_n_antipode(b).map_err(e)?.n;
            ensure(left == central, || {
                format!("{} over {field}: left {left}, central {central}", fixture.name)
            })?;
        }
    }
    Ok(())
}

fn is_isomorphism_onto(m: &FiniteMonoid, group: &FiniteMonoid, map: &[usize]) -> bool {
    let mut seen = vec![false; group.size()];
    for &c in map {
        seen[c] = true;
    }
    group.size() == m.size()
        && seen.iter().all(|&s| s)
        && (0..m.size()).all(|a| (0..m.size()).all(|b| map[m.mul(a, b)] == group.mul(map[a], map[b])))
}

fn periodic_monoid_and_groups() -> Outcome {
    let m = monogenic(2, 3).map_err(e)?;
    let b = monoid_bialgebra(&m, Q).map_err(e)?;
    ensure(b.dim() == 5, || format!("dim kM = {}", b.dim()))?;
    ensure(hopf_envelope(&b).map_err(e)?.hopf.dim() == 3, || "dim H ≠ 3".into())?;
    let env = enveloping_group(&m, Q).map_err(e)?;
    let generator_order = (1..=3).find(|&k| {
        let mut g = env.group.identity();
        for _ in 0..k {
            g = env.group.mul(g, env.map[1]);
        }
        g == env.group.identity()
    });
    ensure(
        env.group.size() == 3 && env.group.is_group() && env.group.is_commutative() && generator_order == Some(3),
        || "enveloping group is not C₃".into(),
    )?;
    ensure(cofree_hopf(&b).map_err(e)?.hopf.dim() == 1, || "dim C ≠ 1".into())?;

    let mut groups: Vec<FiniteMonoid> = (1..=5).map(cyclic_group).collect::<Result<_, _>>().map_err(e)?;
    groups.push(direct_product(
        &cyclic_group(2).map_err(e)?,
        &cyclic_group(3).map_err(e)?,
    ));
    groups.push(direct_product(
        &cyclic_group(2).map_err(e)?,
        &cyclic_group(2).map_err(e)?,
    ));
    groups.extend((1..=3).flat_map(all_monoids).filter(FiniteMonoid::is_group));
    for field in FIELDS {
        for g in &groups {
            let env = enveloping_group(g, field).map_err(e)?;
            ensure(is_isomorphism_onto(g, &env.group, &env.map), || {
                format!("G(M) ≇ M for a group of order {} over {field}", g.size())
            })?;
        }
    }
    Ok(())
}

fn radford_families() -> Outcome {
    let b = radford_dual(Q, 2).map_err(e)?;
    ensure(b.dim() == 3, || format!("dim {}", b.dim()))?;
    ensure(id_power(&b, 2) == id_power(&b, 1), || "Id^{*2} ≠ Id".into())?;
    let found = grouplike_scan(&b, &[-1, 0, 1]);
    let one = ints(Q, &[1, 0, 0]);
    let other = ints(Q, &[1, 0, -1]);
    ensure(
        found.len() == 2 && found.contains(&one) && found.contains(&other),
        || format!("grouplikes found: {found:?}"),
    )?;
    ensure(hopf_envelope(&b).map_err(e)?.hopf.dim() == 1, || {
        "dual family: dim H ≠ 1".into()
    })?;
    ensure(cofree_hopf(&b).map_err(e)?.hopf.dim() == 1, || {
        "dual family: dim C ≠ 1".into()
    })?;

    let r = radford_adjoin_unit(&matrix_coalgebra(Q, 2).map_err(e)?).map_err(e)?;
    ensure(r.dim() == 5, || format!("adjoin-unit dim {}", r.dim()))?;
    ensure(hopf_envelope(&r).map_err(e)?.hopf.dim() == 1, || {
        "adjoin-unit: H ≠ k".into()
    })?;
    let c = cofree_hopf(&r).map_err(e)?;
    ensure(
        c.hopf.dim() == 1 && c.structure_map.matrix.column(0) == r.unit(),
        || "adjoin-unit: C ≠ k·1".into(),
    )?;
    let n = minimal_n_antipode(&r, Side::Left).map_err(e)?;
    ensure(n.n == 1, || format!("adjoin-unit index {}", n.n))?;
    let counit_unit = id_power(&r, 0);
    ensure(is_n_antipode(&r, &counit_unit, 1, Side::TwoSided).map_err(e)?, || {
        "u∘ε is not a two-sided 1-antipode".into()
    })
}

fn duality() -> Outcome {
    for field in FIELDS {
        for fixture in builtin_fixtures(field).map_err(e)? {
            let r = run_invariants(&fixture).map_err(e)?;
            ensure(r.cofree_dual_dim == r.hopf_dim, || {
                format!(
                    "{} over {field}: dim C(B*) {} vs dim H {}",
                    r.name, r.cofree_dual_dim, r.hopf_dim
                )
            })?;
            let failed: Vec<&str> = r.failures().filter(|f| f.starts_with("C(B*)")).collect();
            ensure(failed.is_empty(), || format!("{} over {field}: {failed:?}", r.name))?;
        }
    }
    let r = run_invariants(&builtin("quantum-plane", Q).map_err(e)?).map_err(e)?;
    ensure(r.cofree_dual_dim == 4, || {
        format!("quantum plane dim C(B*) = {}", r.cofree_dual_dim)
    })
}

fn random_monoids(seed: u64, count: usize) -> Vec<FiniteMonoid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let degree = rng.gen_range(2..=4);
        let gens = rng.gen_range(1..=2);
        if let Some(m) = random_transformation_monoid(&mut rng, degree, gens, 6) {
            out.push(m);
        }
    }
    out
}

fn property_suite() -> Outcome {
    let monoids = random_monoids(0x5eed, 12);
    for field in FIELDS {
        let mut fixtures = builtin_fixtures(field).map_err(e)?;
        for (k, m) in monoids.iter().enumerate() {
            fixtures.push(Fixture::from_monoid(format!("random-{k}"), m.clone(), field).map_err(e)?);
        }
        for fixture in &fixtures {
            let r = run_invariants(fixture).map_err(e)?;
            ensure(r.all_hold(), || {
                format!("{} over {field}: {:?}", r.name, r.failures().collect::<Vec<_>>())
            })?;
        }
    }
    Ok(())
}

fn micro_oracle() -> Outcome {
    let f2 = Field::Prime(2);
    let mut family: Vec<(String, Bialgebra)> = Vec::new();
    for size in 1..=3 {
        for (k, m) in all_monoids(size).into_iter().enumerate() {
            family.push((format!("monoid {size}/{k}"), monoid_bialgebra(&m, f2).map_err(e)?));
        }
    }
    for n in 1..=2 {
        family.push((format!("radford dual {n}"), radford_dual(f2, n).map_err(e)?));
    }
    for k in 1..=2 {
        let c = grouplike_coalgebra(f2, k).map_err(e)?;
        family.push((
            format!("adjoin unit to {k} grouplikes"),
            radford_adjoin_unit(&c).map_err(e)?,
        ));
    }
    for (name, b) in &family {
        let d = b.dim();
        let invariants = build_boxslash(b).map_err(e)?.dim();
        let coinv = coinvariant_count(b).map_err(e)?;
        ensure(coinv == 1 << invariants, || {
            format!("{name}: |ker γ| = {coinv}, dim {invariants}")
        })?;
        let quotient = build_oslash(b).map_err(e)?.quotient_dim();
        let relations = relation_count(b).map_err(e)?;
        ensure(relations == 1 << (d * d - quotient), || {
            format!("{name}: {relations} relations, dim B⊘B {quotient}")
        })?;
    }
    Ok(())
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn bialg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bialg"))
        .args(args)
        .output()
        .expect("bialg runs")
}

fn cli_determinism() -> Outcome {
    let plane = fixtures_dir().join("quantum_plane.json");
    let plane = plane.to_str().ok_or("non-UTF-8 path")?;
    for args in [vec!["envelope", plane], vec!["--full", "envelope", plane]] {
        let first = bialg(&args);
        let second = bialg(&args);
        ensure(first.status.success(), || {
            format!("{args:?} exit {:?}", first.status.code())
        })?;
        ensure(first.stdout == second.stdout, || format!("{args:?}: reports differ"))?;
    }
    for (file, command, witness) in [
        ("broken_coassociativity.json", vec!["verify"], "coassociativity fails"),
        ("broken_coassociativity.json", vec!["envelope"], "coassociativity fails"),
        ("broken_monoid.json", vec!["monoid", "units"], "associativity fails at"),
        ("malformed.json", vec!["verify"], "line"),
    ] {
        let path = fixtures_dir().join(file);
        let mut args = command.clone();
        args.push(path.to_str().ok_or("non-UTF-8 path")?);
        let out = bialg(&args);
        ensure(out.status.code() == Some(2), || {
            format!("{file}: exit {:?}", out.status.code())
        })?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(stderr.contains(witness), || format!("{file}: no witness in `{stderr}`"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        (
            "1 quotient quantum plane envelope and cofree",
            quantum_plane_envelope_and_cofree,
        ),
        ("2 minimal n-antipode indices", n_antipode_indices),
        ("3 periodic monoid and enveloping groups", periodic_monoid_and_groups),
        ("4 Radford families", radford_families),
        ("5 duality of envelope and cofree", duality),
        ("6 property suite over the corpus", property_suite),
        ("7 GF(2) enumeration oracle", micro_oracle),
        ("8 CLI determinism and corrupt inputs", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(why) => {
                println!("FAIL criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

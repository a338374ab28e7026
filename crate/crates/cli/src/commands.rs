//! One function per subcommand, each producing a serializable report, a
//! short text summary and an exit status.

use bialg_core::canonical::{build_boxslash, build_oslash, frobenius_report_from};
use bialg_core::cofree::{cocommutative_cofree, cofree_hopf, duality_check, iterate_k};
use bialg_core::convolution::{central_n_antipode, minimal_n_antipode};
use bialg_core::corpus::{builtin_fixtures, run_invariants, Fixture, InvariantReport};
use bialg_core::envelope::{hopf_envelope, iterate_q, oslash_iso_check};
use bialg_core::linalg::vector::format_combination;
use bialg_core::monoid::{
    cancellativity_cross_check, enveloping_group, random_transformation_monoid, units_and_left_units, FiniteMonoid,
};
use bialg_core::{Bialgebra, Endo, Field, Matrix, NAntipodeResult, Scalar, Side, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::document::{BialgebraDocument, Document, MonoidDocument};
use crate::error::CliError;
use crate::input::Input;

pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub exit: u8,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, summary: String, exit: u8) -> Self {
        Outcome {
            report: serde_json::to_value(report).expect("reports serialize"),
            summary,
            exit,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub full: bool,
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors()
        .map(|r| r.iter().map(Scalar::to_string).collect())
        .collect()
}

fn elements(b: &Bialgebra, s: &Subspace) -> Vec<String> {
    s.basis_vectors().map(|v| b.format_element(v)).collect()
}

fn images(b: &Bialgebra, target_labels: &[String], map: &Matrix) -> Vec<String> {
    map.columns()
        .iter()
        .zip(b.labels())
        .map(|(col, label)| format!("{label} ↦ {}", format_combination(col, target_labels)))
        .collect()
}

fn endo_images(b: &Bialgebra, s: &Endo) -> Vec<String> {
    images(b, b.labels(), s.matrix())
}

fn tensor_labels(b: &Bialgebra) -> Vec<String> {
    b.labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

#[derive(Serialize)]
struct Header<'a> {
    command: &'a str,
    input: &'a str,
    field: String,
    dim: usize,
}

fn header<'a>(command: &'a str, input: &'a Input) -> Header<'a> {
    Header {
        command,
        input: &input.origin,
        field: input.bialgebra.field().to_string(),
        dim: input.bialgebra.dim(),
    }
}

#[derive(Serialize)]
struct AxiomEntry {
    axiom: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    valid: bool,
    axioms: Vec<AxiomEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    commutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cocommutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitives_dim: Option<usize>,
}

pub fn verify(input: &Input) -> Result<Outcome, CliError> {
    let b = &input.bialgebra;
    let report = b.verify_axioms();
    let valid = report.all_hold();
    let axioms = report
        .checks
        .iter()
        .map(|c| AxiomEntry {
            axiom: c.axiom.to_string(),
            holds: c.holds(),
            witness: c.witness.as_ref().map(ToString::to_string),
        })
        .collect();
    let summary = match report.failures().next() {
        None => format!("{}: all bialgebra axioms hold (dim {})", input.origin, b.dim()),
        Some((axiom, witness)) => format!("{}: {axiom} fails at {witness}", input.origin),
    };
    let r = VerifyReport {
        header: header("verify", input),
        valid,
        axioms,
        commutative: valid.then(|| b.is_commutative()),
        cocommutative: valid.then(|| b.is_cocommutative()),
        primitives_dim: valid.then(|| b.primitives().dim()),
    };
    Ok(Outcome::new(&r, summary, if valid { 0 } else { 2 }))
}

#[derive(Serialize)]
struct OslashReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    oslash_dim: usize,
    oslash_basis: Vec<String>,
    ker_i_dim: usize,
    ker_i_basis: Vec<String>,
    i_surjective: bool,
    i_injective: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    i_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    projection: Option<Vec<Vec<String>>>,
}

pub fn oslash(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let os = build_oslash(b)?;
    let r = OslashReport {
        header: header("oslash", input),
        oslash_dim: os.quotient_dim(),
        oslash_basis: os.coalgebra().labels().to_vec(),
        ker_i_dim: os.ker_i().dim(),
        ker_i_basis: elements(b, os.ker_i()),
        i_surjective: os.i_surjective(),
        i_injective: os.i_injective(),
        i_matrix: opts.full.then(|| matrix_rows(os.i_matrix())),
        projection: opts.full.then(|| matrix_rows(os.projection())),
    };
    let summary = format!(
        "{}: dim B⊘B = {}, dim ker i = {}, i surjective: {}",
        input.origin, r.oslash_dim, r.ker_i_dim, r.i_surjective
    );
    Ok(Outcome::new(&r, summary, 0))
}

#[derive(Serialize)]
struct BoxslashReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    boxslash_dim: usize,
    boxslash_basis: Vec<String>,
    im_p_basis: Vec<String>,
    p_injective: bool,
    p_surjective: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_matrix: Option<Vec<Vec<String>>>,
}

pub fn boxslash(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let bs = build_boxslash(b)?;
    let labels = tensor_labels(b);
    let r = BoxslashReport {
        header: header("boxslash", input),
        boxslash_dim: bs.dim(),
        boxslash_basis: bs
            .subspace()
            .basis_vectors()
            .map(|v| format_combination(v, &labels))
            .collect(),
        im_p_basis: elements(b, bs.im_p()),
        p_injective: bs.p_injective(),
        p_surjective: bs.p_surjective(),
        p_matrix: opts.full.then(|| matrix_rows(bs.p_matrix())),
    };
    let summary = format!(
        "{}: dim B⊠B = {}, p injective: {}, p surjective: {}",
        input.origin, r.boxslash_dim, r.p_injective, r.p_surjective
    );
    Ok(Outcome::new(&r, summary, 0))
}

#[derive(Serialize)]
struct FrobeniusJson<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    i_bijective: bool,
    p_bijective: bool,
    right_antipode: bool,
    right_antipode_anti_bialgebra: bool,
    can_bijective: bool,
    can_prime_bijective: bool,
    consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    right_antipode_images: Option<Vec<String>>,
}

pub fn frobenius(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let report = frobenius_report_from(&build_oslash(b)?, &build_boxslash(b)?)?;
    let r = FrobeniusJson {
        header: header("frobenius", input),
        i_bijective: report.i_bijective,
        p_bijective: report.p_bijective,
        right_antipode: report.right_antipode.is_some(),
        right_antipode_anti_bialgebra: report.right_antipode_anti_bialgebra,
        can_bijective: report.can_bijective,
        can_prime_bijective: report.can_prime_bijective,
        consistent: report.consistent,
        right_antipode_images: if opts.full {
            report.right_antipode.as_ref().map(|s| endo_images(b, s))
        } else {
            None
        },
    };
    let summary = format!(
        "{}: i bijective {}, p bijective {}, anti-bialgebra right antipode {}",
        input.origin,
        r.i_bijective,
        r.p_bijective,
        report.antipode_condition()
    );
    Ok(Outcome::new(&r, summary, if report.consistent { 0 } else { 3 }))
}

#[derive(Serialize)]
struct NAntipodeEntry {
    n: usize,
    central: bool,
    images: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct NAntipodeReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    left: NAntipodeEntry,
    right: NAntipodeEntry,
    central: NAntipodeEntry,
    indices_agree: bool,
}

fn n_entry(b: &Bialgebra, r: &NAntipodeResult, opts: Options) -> NAntipodeEntry {
    NAntipodeEntry {
        n: r.n,
        central: r.central,
        images: endo_images(b, &r.antipode),
        matrix: opts.full.then(|| matrix_rows(r.antipode.matrix())),
    }
}

pub fn nantipode(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let left = minimal_n_antipode(b, Side::Left)?;
    let right = minimal_n_antipode(b, Side::Right)?;
    let central = central_n_antipode(b)?;
    let agree = left.n == central.n && right.n == central.n;
    let r = NAntipodeReport {
        header: header("nantipode", input),
        left: n_entry(b, &left, opts),
        right: n_entry(b, &right, opts),
        central: n_entry(b, &central, opts),
        indices_agree: agree,
    };
    let summary = format!(
        "{}: minimal n = {} (left), {} (right), {} (central)",
        input.origin, left.n, right.n, central.n
    );
    Ok(Outcome::new(&r, summary, if agree { 0 } else { 3 }))
}

#[derive(Serialize)]
struct HopfJson {
    dim: usize,
    labels: Vec<String>,
    structure_map: Vec<String>,
    antipode: Vec<String>,
    antipode_verified: bool,
    steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    document: Option<Document>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure_matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    antipode_matrix: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct EnvelopeReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    ker_i_dim: usize,
    ker_i_basis: Vec<String>,
    oslash_iso: bool,
    hopf: HopfJson,
}

pub fn envelope(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let os = build_oslash(b)?;
    let env = hopf_envelope(b)?;
    let (_, steps) = iterate_q(b)?;
    let iso = oslash_iso_check(b)?.holds();
    let h = &env.hopf;
    let r = EnvelopeReport {
        header: header("envelope", input),
        ker_i_dim: os.ker_i().dim(),
        ker_i_basis: elements(b, os.ker_i()),
        oslash_iso: iso,
        hopf: HopfJson {
            dim: h.dim(),
            labels: h.labels().to_vec(),
            structure_map: images(b, h.labels(), &env.structure_map.matrix),
            antipode: endo_images(h, &env.antipode),
            antipode_verified: true,
            steps,
            document: opts
                .full
                .then(|| Document::Bialgebra(BialgebraDocument::from_bialgebra(h))),
            structure_matrix: opts.full.then(|| matrix_rows(&env.structure_map.matrix)),
            antipode_matrix: opts.full.then(|| matrix_rows(env.antipode.matrix())),
        },
    };
    let summary = format!(
        "{}: H dim {}, ker i dim {}, antipode present, B⊘B ≅ H: {}",
        input.origin,
        h.dim(),
        r.ker_i_dim,
        iso
    );
    Ok(Outcome::new(&r, summary, if iso { 0 } else { 3 }))
}

#[derive(Serialize)]
struct CofreeReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    basis: Vec<String>,
    hopf: HopfJson,
}

fn sub_hopf_json(b: &Bialgebra, res: &bialg_core::HopfResult, steps: usize, opts: Options) -> HopfJson {
    let h = &res.hopf;
    HopfJson {
        dim: h.dim(),
        labels: h.labels().to_vec(),
        structure_map: images(h, b.labels(), &res.structure_map.matrix),
        antipode: endo_images(h, &res.antipode),
        antipode_verified: true,
        steps,
        document: opts
            .full
            .then(|| Document::Bialgebra(BialgebraDocument::from_bialgebra(h))),
        structure_matrix: opts.full.then(|| matrix_rows(&res.structure_map.matrix)),
        antipode_matrix: opts.full.then(|| matrix_rows(res.antipode.matrix())),
    }
}

pub fn cofree(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let res = cofree_hopf(b)?;
    let (_, steps) = iterate_k(b)?;
    let basis = res
        .structure_map
        .matrix
        .columns()
        .iter()
        .map(|c| b.format_element(c))
        .collect();
    let r = CofreeReport {
        header: header("cofree", input),
        basis,
        hopf: sub_hopf_json(b, &res, steps, opts),
    };
    let summary = format!("{}: C dim {}, antipode present", input.origin, res.hopf.dim());
    Ok(Outcome::new(&r, summary, 0))
}

pub fn cocofree(input: &Input, opts: Options) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let res = cocommutative_cofree(b)?;
    let r = CofreeReport {
        header: header("cocofree", input),
        basis: res.hopf.labels().to_vec(),
        hopf: sub_hopf_json(b, &res, 0, opts),
    };
    let summary = format!("{}: cocommutative cofree dim {}", input.origin, res.hopf.dim());
    Ok(Outcome::new(&r, summary, 0))
}

#[derive(Serialize)]
struct DualReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    envelope_dim: usize,
    cofree_dual_dim: usize,
    transpose_injective: bool,
    transpose_bialgebra_map: bool,
    image_equals_k_of_dual: bool,
    holds: bool,
}

pub fn dualcheck(input: &Input) -> Result<Outcome, CliError> {
    let b = input.verified()?;
    let d = duality_check(b)?;
    let r = DualReport {
        header: header("dualcheck", input),
        envelope_dim: d.envelope_dim,
        cofree_dual_dim: d.cofree_dual_dim,
        transpose_injective: d.injective,
        transpose_bialgebra_map: d.bialgebra_map,
        image_equals_k_of_dual: d.image_matches,
        holds: d.holds(),
    };
    let summary = format!(
        "{}: dim H(B) = {}, dim C(B*) = {}, duality holds: {}",
        input.origin, d.envelope_dim, d.cofree_dual_dim, r.holds
    );
    Ok(Outcome::new(&r, summary, if r.holds { 0 } else { 3 }))
}

#[derive(Serialize)]
struct Pseudoinverse {
    element: String,
    pseudoinverse: String,
}

#[derive(Serialize)]
struct Cancellation {
    right_cancellative: bool,
    unique_right_inverses: bool,
    is_group: bool,
    i_injective: bool,
    p_injective: bool,
    p_surjective: bool,
    agrees: bool,
}

#[derive(Serialize)]
struct UnitsReport<'a> {
    command: &'a str,
    input: &'a str,
    field: String,
    size: usize,
    units: Vec<String>,
    left_units: Vec<String>,
    regulars: Vec<String>,
    pseudoinverses: Vec<Pseudoinverse>,
    cancellation: Cancellation,
}

pub fn monoid_units(origin: &str, m: &FiniteMonoid, field: Field) -> Result<Outcome, CliError> {
    let units = units_and_left_units(m)?;
    let cross = cancellativity_cross_check(m, field)?;
    let name = |i: &usize| m.labels()[*i].clone();
    let r = UnitsReport {
        command: "monoid units",
        input: origin,
        field: field.to_string(),
        size: m.size(),
        units: units.units.iter().map(name).collect(),
        left_units: units.left_units.iter().map(name).collect(),
        regulars: units.regulars.iter().map(name).collect(),
        pseudoinverses: units
            .pseudoinverses
            .iter()
            .enumerate()
            .filter_map(|(x, y)| {
                y.map(|y| Pseudoinverse {
                    element: name(&x),
                    pseudoinverse: name(&y),
                })
            })
            .collect(),
        cancellation: Cancellation {
            right_cancellative: cross.table.right_cancellative,
            unique_right_inverses: cross.table.unique_right_inverses,
            is_group: cross.table.is_group,
            i_injective: cross.i_injective,
            p_injective: cross.p_injective,
            p_surjective: cross.p_surjective,
            agrees: cross.agrees(),
        },
    };
    let summary = format!(
        "{origin}: {} units, {} regular elements, table and linear diagnostics agree: {}",
        r.units.len(),
        r.regulars.len(),
        cross.agrees()
    );
    Ok(Outcome::new(&r, summary, if cross.agrees() { 0 } else { 3 }))
}

#[derive(Serialize)]
struct ClassEntry {
    element: String,
    class: String,
}

#[derive(Serialize)]
struct EnvGroupReport<'a> {
    command: &'a str,
    input: &'a str,
    field: String,
    size: usize,
    group_size: usize,
    group: MonoidDocument,
    map: Vec<ClassEntry>,
}

pub fn monoid_envgroup(origin: &str, m: &FiniteMonoid, field: Field) -> Result<Outcome, CliError> {
    let env = enveloping_group(m, field)?;
    let r = EnvGroupReport {
        command: "monoid envgroup",
        input: origin,
        field: field.to_string(),
        size: m.size(),
        group_size: env.group.size(),
        group: MonoidDocument::from_monoid(&env.group),
        map: env
            .map
            .iter()
            .enumerate()
            .map(|(g, &c)| ClassEntry {
                element: m.labels()[g].clone(),
                class: env.group.labels()[c].clone(),
            })
            .collect(),
    };
    let summary = format!("{origin}: enveloping group of order {}", env.group.size());
    Ok(Outcome::new(&r, summary, 0))
}

#[derive(Serialize)]
struct FixtureJson {
    name: String,
    field: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dims: Option<Dims>,
    failures: Vec<String>,
    checks: usize,
}

#[derive(Serialize)]
struct Dims {
    dim: usize,
    ker_i: usize,
    oslash: usize,
    boxslash: usize,
    hopf: usize,
    cofree: usize,
    cofree_dual: usize,
    n_left: usize,
    n_right: usize,
    n_central: usize,
}

fn fixture_json(fixture: &Fixture, outcome: Result<InvariantReport, bialg_core::Error>) -> FixtureJson {
    let field = fixture.bialgebra.field().to_string();
    match outcome {
        Ok(r) => FixtureJson {
            name: fixture.name.clone(),
            field,
            ok: r.all_hold(),
            error: None,
            failures: r.failures().map(str::to_string).collect(),
            checks: r.checks.len(),
            dims: Some(Dims {
                dim: r.dim,
                ker_i: r.ker_i_dim,
                oslash: r.oslash_dim,
                boxslash: r.boxslash_dim,
                hopf: r.hopf_dim,
                cofree: r.cofree_dim,
                cofree_dual: r.cofree_dual_dim,
                n_left: r.left_n,
                n_right: r.right_n,
                n_central: r.central_n,
            }),
        },
        Err(e) => FixtureJson {
            name: fixture.name.clone(),
            field,
            ok: false,
            error: Some(e.to_string()),
            failures: Vec::new(),
            checks: 0,
            dims: None,
        },
    }
}

#[derive(Serialize)]
struct CorpusReport {
    command: &'static str,
    fields: Vec<String>,
    random: usize,
    seed: u64,
    total: usize,
    failed: usize,
    fixtures: Vec<FixtureJson>,
}

/// Random transformation monoids of size at most 6, deterministic in `seed`.
pub fn random_monoids(count: usize, seed: u64) -> Vec<FiniteMonoid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let gens = rng.gen_range(1..=2);
        if let Some(m) = random_transformation_monoid(&mut rng, 3, gens, 6) {
            out.push(m);
        }
    }
    out
}

pub fn corpus(fields: &[Field], random: usize, seed: u64) -> Result<Outcome, CliError> {
    let monoids = random_monoids(random, seed);
    let mut fixtures = Vec::new();
    for &field in fields {
        fixtures.extend(builtin_fixtures(field)?);
        for (n, m) in monoids.iter().enumerate() {
            fixtures.push(Fixture::from_monoid(format!("random-{n}"), m.clone(), field)?);
        }
    }
    let results: Vec<FixtureJson> = fixtures
        .par_iter()
        .map(|f| fixture_json(f, run_invariants(f)))
        .collect();
    let failed = results.iter().filter(|r| !r.ok).count();
    let r = CorpusReport {
        command: "corpus",
        fields: fields.iter().map(ToString::to_string).collect(),
        random,
        seed,
        total: results.len(),
        failed,
        fixtures: results,
    };
    let summary = format!("corpus: {} fixtures, {} failing", r.total, failed);
    if failed > 0 {
        let mut lines = vec![summary];
        for f in r.fixtures.iter().filter(|f| !f.ok) {
            let why = f.error.clone().unwrap_or_else(|| f.failures.join(", "));
            lines.push(format!("  {} over {}: {why}", f.name, f.field));
        }
        return Ok(Outcome::new(
            &r,
            lines.join("\n"),
            CliError::Corpus { failed, total: r.total }.exit_code(),
        ));
    }
    Ok(Outcome::new(&r, summary, 0))
}

pub fn export(input: &Input) -> Result<Outcome, CliError> {
    let doc = match &input.monoid {
        Some(m) => Document::Monoid(MonoidDocument::from_monoid(m)),
        None => Document::Bialgebra(BialgebraDocument::from_bialgebra(&input.bialgebra)),
    };
    Ok(Outcome::new(&doc, format!("{}: exported", input.origin), 0))
}

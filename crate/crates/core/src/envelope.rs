//! The Hopf envelope of a finite-dimensional bialgebra as the quotient
//! `Q(B) = B/ker(i_B)`, its antipode and the isomorphism `B⊘B ≅ H(B)`.

use std::fmt;

use crate::bialgebra::{Bialgebra, BialgebraMorphism, Side};
use crate::canonical::{build_oslash, s_witness, OslashSpace};
use crate::convolution::{conv_inverse, convolution_unit_between, convolve, is_antipode, Endo};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The structure map is a surjection `B → H`.
    Quotient,
    /// The structure map is an inclusion `C → B`.
    Sub,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Quotient => "quotient",
            Direction::Sub => "sub",
        })
    }
}

/// A Hopf algebra together with its antipode and its structure map to or
/// from the input bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfResult {
    pub hopf: Bialgebra,
    pub antipode: Endo,
    pub structure_map: BialgebraMorphism,
    pub direction: Direction,
}

/// `B/ker(i_B)` with its projection; `ker(i_B)` must already be a two-sided ideal.
pub fn q_of(b: &Bialgebra) -> Result<(Bialgebra, BialgebraMorphism)> {
    q_of_with(&build_oslash(b)?)
}

fn q_of_with(oslash: &OslashSpace) -> Result<(Bialgebra, BialgebraMorphism)> {
    let b = oslash.source();
    let ker = oslash.ker_i();
    for side in [Side::Right, Side::TwoSided] {
        let closure = b.ideal_closure(ker, side)?;
        if &closure != ker {
            return Err(Error::invariant(format!(
                "ker(i_B) has dimension {} but its {side} ideal closure has dimension {}",
                ker.dim(),
                closure.dim()
            )));
        }
    }
    b.quotient_by_biideal(ker)
        .map_err(|e| Error::invariant(format!("ker(i_B) is not a bi-ideal: {e}")))
}

pub fn hopf_envelope(b: &Bialgebra) -> Result<HopfResult> {
    hopf_envelope_with(&build_oslash(b)?)
}

pub(crate) fn hopf_envelope_with(oslash: &OslashSpace) -> Result<HopfResult> {
    let b = oslash.source();
    let (hopf, q) = q_of_with(oslash)?;
    let antipode = conv_inverse(&hopf, &Endo::identity(&hopf), Side::TwoSided)?
        .ok_or_else(|| Error::invariant("Q(B) has no antipode"))?;
    if !is_antipode(&hopf, &antipode)? {
        return Err(Error::invariant("antipode of Q(B) fails an antipode identity"));
    }
    let transported = q.matrix.mul(s_witness(oslash)?.matrix())?;
    if transported != antipode.matrix().mul(&q.matrix)? {
        return Err(Error::invariant("q∘S differs from S_H∘q"));
    }
    if convolve(b, &hopf, &q.matrix, &transported)? != convolution_unit_between(b, &hopf) {
        return Err(Error::invariant("q∘S is not a right convolution inverse of q"));
    }
    Ok(HopfResult {
        hopf,
        antipode,
        structure_map: q,
        direction: Direction::Quotient,
    })
}

/// Outcome of checking `x⊘y ↦ q(x)·S(q(y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OslashIso {
    /// `dim H × dim B⊘B`.
    pub matrix: Matrix,
    pub well_defined: bool,
    pub bijective: bool,
    pub coalgebra_map: bool,
    /// The map composed with `i_B` equals `q`.
    pub extends_q: bool,
}

impl OslashIso {
    pub fn holds(&self) -> bool {
        self.well_defined && self.bijective && self.coalgebra_map && self.extends_q
    }
}

pub fn oslash_iso_check(b: &Bialgebra) -> Result<OslashIso> {
    let oslash = build_oslash(b)?;
    let envelope = hopf_envelope_with(&oslash)?;
    oslash_iso_with(&oslash, &envelope)
}

pub(crate) fn oslash_iso_with(oslash: &OslashSpace, envelope: &HopfResult) -> Result<OslashIso> {
    let h = &envelope.hopf;
    let q_cols = envelope.structure_map.matrix.columns();
    let s_q: Vec<Vec<Scalar>> = q_cols.iter().map(|c| envelope.antipode.apply(c)).collect();
    let on_tensors: Vec<Vec<Scalar>> = q_cols
        .iter()
        .flat_map(|qx| s_q.iter().map(move |sy| h.multiply(qx, sy)))
        .collect();
    let on_tensors = Matrix::from_columns(h.field(), h.dim(), &on_tensors)?;
    let well_defined = oslash
        .relations()
        .basis_vectors()
        .all(|w| vector::is_zero(&on_tensors.mul_vec(w).expect("d² coordinates")));
    let matrix = on_tensors.mul(&oslash.lift_matrix())?;
    let bijective = matrix.rows() == matrix.cols() && matrix.rank() == matrix.rows();
    let coalgebra_map = oslash.coalgebra().is_morphism_to(&h.coalgebra(), &matrix)?;
    let extends_q = matrix.mul(oslash.i_matrix())? == envelope.structure_map.matrix;
    Ok(OslashIso {
        matrix,
        well_defined,
        bijective,
        coalgebra_map,
        extends_q,
    })
}

fn flip_matrix(b: &Bialgebra) -> Matrix {
    let d = b.dim();
    let field = b.field();
    Matrix::from_fn(field, d * d, d * d, |r, c| {
        if r == (c % d) * d + c / d {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// For cocommutative `B`: the flip `x⊘y ↦ y⊘x` is well defined and is the
/// antipode of `H(B)` transported along the isomorphism `B⊘B ≅ H(B)`.
pub fn cocommutative_envelope_check(b: &Bialgebra) -> Result<bool> {
    if !b.is_cocommutative() {
        return Err(Error::precondition("cocommutative", "Δ differs from Δ^cop"));
    }
    let oslash = build_oslash(b)?;
    let envelope = hopf_envelope_with(&oslash)?;
    let iso = oslash_iso_with(&oslash, &envelope)?;
    if !iso.holds() {
        return Ok(false);
    }
    let tau = flip_matrix(b);
    let relations = oslash.relations();
    let descends = relations
        .basis_vectors()
        .all(|w| relations.contains(&tau.mul_vec(w).expect("d² coordinates")));
    if !descends {
        return Ok(false);
    }
    let flip = oslash.projection().mul(&tau)?.mul(&oslash.lift_matrix())?;
    Ok(iso.matrix.mul(&flip)? == envelope.antipode.matrix().mul(&iso.matrix)?)
}

/// Repeats `B ↦ Q(B)` until `i` is injective; returns the fixpoint and the
/// number of nontrivial steps, which must be at most one.
pub fn iterate_q(b: &Bialgebra) -> Result<(Bialgebra, usize)> {
    let mut current = b.clone();
    let mut steps = 0;
    loop {
        let oslash = build_oslash(&current)?;
        if oslash.i_injective() {
            break;
        }
        current = q_of_with(&oslash)?.0;
        steps += 1;
    }
    if steps > 1 {
        return Err(Error::invariant(format!("Q needed {steps} steps to stabilize")));
    }
    Ok((current, steps))
}

/// `ker(i_B)`, the bi-ideal that `Q` divides out.
pub fn ker_i(b: &Bialgebra) -> Result<Subspace> {
    Ok(build_oslash(b)?.ker_i().clone())
}

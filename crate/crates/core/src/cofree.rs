//! The cofree Hopf algebra of a finite-dimensional bialgebra as
//! `K(B) = {b | Δ(b) ∈ im(p_B)⊗B}`, its cocommutative variant and the
//! duality with the Hopf envelope.

use crate::bialgebra::{morphism_check, Bialgebra, BialgebraMorphism, Side};
use crate::canonical::{build_boxslash, t_witness, BoxslashSpace};
use crate::convolution::{conv_inverse, convolution_unit_between, convolve, is_antipode, Endo};
use crate::envelope::{hopf_envelope, Direction, HopfResult};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

/// Elements `b` with `Δ(b) ∈ w⊗B`.
fn left_coideal_kernel(b: &Bialgebra, w: &Subspace) -> Result<Subspace> {
    let d = b.dim();
    let ann = w.annihilator();
    if ann.rows() == 0 {
        return Ok(Subspace::full(b.field(), d));
    }
    let condition = ann.kron(&Matrix::identity(b.field(), d))?.mul(b.comult_matrix())?;
    Ok(condition.kernel())
}

/// `Δ(w) ⊆ w⊗w`.
pub fn is_subcoalgebra(b: &Bialgebra, w: &Subspace) -> Result<bool> {
    let d = b.dim();
    let ann = w.annihilator();
    if ann.rows() == 0 {
        return Ok(true);
    }
    let id = Matrix::identity(b.field(), d);
    let left = ann.kron(&id)?.mul(b.comult_matrix())?;
    let right = id.kron(&ann)?.mul(b.comult_matrix())?;
    Ok(w.basis_vectors().all(|v| {
        left.mul_vec(v).expect("d coordinates").iter().all(Scalar::is_zero)
            && right.mul_vec(v).expect("d coordinates").iter().all(Scalar::is_zero)
    }))
}

/// `K(B)` as a subspace, checked to coincide with `im(p_B)`.
pub fn k_subspace(b: &Bialgebra) -> Result<Subspace> {
    k_subspace_with(&build_boxslash(b)?)
}

fn k_subspace_with(boxslash: &BoxslashSpace) -> Result<Subspace> {
    let b = boxslash.source();
    let k = left_coideal_kernel(b, boxslash.im_p())?;
    if &k != boxslash.im_p() {
        return Err(Error::invariant(format!(
            "K(B) has dimension {} but im(p_B) has dimension {}",
            k.dim(),
            boxslash.im_p().dim()
        )));
    }
    Ok(k)
}

pub fn k_of(b: &Bialgebra) -> Result<(Bialgebra, BialgebraMorphism)> {
    let k = k_subspace(b)?;
    b.sub_bialgebra(&k)
        .map_err(|e| Error::invariant(format!("K(B) is not a sub-bialgebra: {e}")))
}

pub fn cofree_hopf(b: &Bialgebra) -> Result<HopfResult> {
    let boxslash = build_boxslash(b)?;
    let k = k_subspace_with(&boxslash)?;
    if k.dim() != boxslash.dim() {
        return Err(Error::invariant("dim K(B) differs from dim B⊠B"));
    }
    let (hopf, inclusion) = b
        .sub_bialgebra(&k)
        .map_err(|e| Error::invariant(format!("K(B) is not a sub-bialgebra: {e}")))?;
    let antipode = conv_inverse(&hopf, &Endo::identity(&hopf), Side::TwoSided)?
        .ok_or_else(|| Error::invariant("K(B) has no antipode"))?;
    if !is_antipode(&hopf, &antipode)? {
        return Err(Error::invariant("antipode of K(B) fails an antipode identity"));
    }
    let t = t_witness(&boxslash)?;
    let t_k = t.matrix().mul(&inclusion.matrix)?;
    if convolve(&hopf, b, &inclusion.matrix, &t_k)? != convolution_unit_between(&hopf, b) {
        return Err(Error::invariant("T∘k is not a right convolution inverse of k"));
    }
    Ok(HopfResult {
        hopf,
        antipode,
        structure_map: inclusion,
        direction: Direction::Sub,
    })
}

/// Repeats `B ↦ K(B)` to a fixpoint; at most one step may be nontrivial.
pub fn iterate_k(b: &Bialgebra) -> Result<(Bialgebra, usize)> {
    let mut current = b.clone();
    let mut steps = 0;
    loop {
        let k = k_subspace(&current)?;
        if k.is_full() {
            break;
        }
        current = current
            .sub_bialgebra(&k)
            .map_err(|e| Error::invariant(format!("K(B) is not a sub-bialgebra: {e}")))?
            .0;
        steps += 1;
    }
    if steps > 1 {
        return Err(Error::invariant(format!("K needed {steps} steps to stabilize")));
    }
    Ok((current, steps))
}

fn flip_matrix(d: usize, field: Field) -> Matrix {
    Matrix::from_fn(field, d * d, d * d, |r, c| {
        if r == (c % d) * d + c / d {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// `{Σ x⊗y ∈ ker γ | Σ y⊗x ∈ ker γ}` as a sub-bialgebra of `B⊗B^op`, with the
/// flip as antipode and `x⊗y ↦ x·ε(y)` as structure map.
pub fn cocommutative_cofree(b: &Bialgebra) -> Result<HopfResult> {
    if !b.is_cocommutative() {
        return Err(Error::precondition("cocommutative", "Δ differs from Δ^cop"));
    }
    let d = b.dim();
    let field = b.field();
    let boxslash = build_boxslash(b)?;
    let tau = flip_matrix(d, field);
    let coinvariants = boxslash.subspace();
    let flipped = coinvariants.map_through(&tau)?;
    let stable = coinvariants.intersection(&flipped)?;
    let ambient = b.tensor(&b.op())?;
    let (hopf, inclusion) = ambient
        .sub_bialgebra(&stable)
        .map_err(|e| Error::invariant(format!("flip-stable coinvariants: {e}")))?;
    let cols: Vec<Vec<Scalar>> = stable
        .basis_vectors()
        .map(|w| {
            stable
                .coordinates(&tau.mul_vec(w).expect("d² coordinates"))
                .ok_or_else(|| Error::invariant("flip leaves the flip-stable coinvariants"))
        })
        .collect::<Result<_>>()?;
    let antipode = Endo::new(Matrix::from_columns(field, stable.dim(), &cols)?)?;
    if !is_antipode(&hopf, &antipode)? {
        return Err(Error::invariant("restricted flip is not an antipode"));
    }
    let p = Matrix::from_fn(field, d, d * d, |x, idx| {
        if idx / d == x {
            b.counit()[idx % d].clone()
        } else {
            field.zero()
        }
    });
    let structure = morphism_check(&p.mul(&inclusion.matrix)?, &hopf, b)?;
    if !structure.is_bialgebra_map() {
        return Err(Error::invariant(
            "p_B restricted to the cocommutative cofree is not a bialgebra map",
        ));
    }
    Ok(HopfResult {
        hopf,
        antipode,
        structure_map: structure,
        direction: Direction::Sub,
    })
}

/// Checks on `qᵀ : H(B)* → B*` against `K(B*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub envelope_dim: usize,
    pub cofree_dual_dim: usize,
    pub injective: bool,
    pub bialgebra_map: bool,
    pub image_matches: bool,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.envelope_dim == self.cofree_dual_dim && self.injective && self.bialgebra_map && self.image_matches
    }
}

pub fn duality_check(b: &Bialgebra) -> Result<DualityReport> {
    let envelope = hopf_envelope(b)?;
    let dual = b.dual();
    let k = k_subspace(&dual)?;
    let qt = envelope.structure_map.matrix.transpose();
    let morphism = morphism_check(&qt, &envelope.hopf.dual(), &dual)?;
    Ok(DualityReport {
        envelope_dim: envelope.hopf.dim(),
        cofree_dual_dim: k.dim(),
        injective: qt.rank() == qt.cols(),
        bialgebra_map: morphism.is_bialgebra_map(),
        image_matches: qt.image() == k,
    })
}

/// Sub-bialgebras spanned by subsets of the basis, by exhaustive search.
pub fn basis_aligned_sub_bialgebras(b: &Bialgebra) -> Result<Vec<Subspace>> {
    let d = b.dim();
    let field = b.field();
    if d > 12 {
        return Err(Error::Unsupported(format!("subset search over {d} basis elements")));
    }
    let mut found = Vec::new();
    for mask in 1u32..(1 << d) {
        let w = Subspace::span(
            field,
            d,
            (0..d).filter(|i| mask >> i & 1 == 1).map(|i| b.basis_vector(i)),
        )?;
        if w.contains(b.unit()) && closed_under_products(b, &w) && is_subcoalgebra(b, &w)? {
            found.push(w);
        }
    }
    Ok(found)
}

fn closed_under_products(b: &Bialgebra, w: &Subspace) -> bool {
    w.basis_vectors()
        .all(|x| w.basis_vectors().all(|y| w.contains(&b.multiply(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::tests::cyclic;
    use crate::families::{matrix_coalgebra, quotient_quantum_plane, radford_adjoin_unit, radford_dual, sweedler_h4};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn hopf_input_is_its_own_cofree() {
        for b in [cyclic(q(), 3), sweedler_h4(q()).unwrap()] {
            let r = cofree_hopf(&b).unwrap();
            assert_eq!(r.hopf.dim(), b.dim());
            assert_eq!(iterate_k(&b).unwrap().1, 0);
        }
    }

    #[test]
    fn quantum_plane_cofree_is_trivial() {
        let b = quotient_quantum_plane(q()).unwrap();
        let r = cofree_hopf(&b).unwrap();
        assert_eq!(r.hopf.dim(), 1);
        assert_eq!(r.direction, Direction::Sub);
        assert_eq!(iterate_k(&b).unwrap(), (r.hopf.clone(), 1));
        assert!(matches!(cocommutative_cofree(&b), Err(Error::Precondition { .. })));
    }

    #[test]
    fn radford_cofree_is_trivial() {
        let b = radford_dual(q(), 2).unwrap();
        let r = cofree_hopf(&b).unwrap();
        assert_eq!(r.hopf.dim(), 1);
        assert_eq!(r.structure_map.matrix.column(0), b.unit());
        let adjoined = radford_adjoin_unit(&matrix_coalgebra(q(), 2).unwrap()).unwrap();
        assert_eq!(cofree_hopf(&adjoined).unwrap().hopf.dim(), 1);
    }

    #[test]
    fn duality_with_envelope() {
        let b = quotient_quantum_plane(q()).unwrap();
        let r = duality_check(&b).unwrap();
        assert!(r.holds());
        assert_eq!(r.cofree_dual_dim, 4);
        assert!(duality_check(&cyclic(q(), 2)).unwrap().holds());
    }

    #[test]
    fn group_cocommutative_cofree_is_everything() {
        let b = cyclic(q(), 3);
        let r = cocommutative_cofree(&b).unwrap();
        assert_eq!(r.hopf.dim(), 3);
        assert_eq!(r.hopf.dim(), build_boxslash(&b).unwrap().dim());
    }

    #[test]
    fn larger_sub_bialgebras_have_no_antipode() {
        for b in [quotient_quantum_plane(q()).unwrap(), radford_dual(q(), 2).unwrap()] {
            let c = k_subspace(&b).unwrap();
            let subs = basis_aligned_sub_bialgebras(&b).unwrap();
            assert!(subs.iter().any(Subspace::is_full));
            for w in subs.iter().filter(|w| c.is_subspace_of(w) && w.dim() > c.dim()) {
                let (sub, _) = b.sub_bialgebra(w).unwrap();
                assert!(conv_inverse(&sub, &Endo::identity(&sub), Side::TwoSided)
                    .unwrap()
                    .is_none());
            }
        }
    }
}

//! The quotient `B⊘B = (B⊗B)/(B⊗B)Δ(B⁺)` with the map `i_B(b) = b⊘1`, the
//! coinvariants `B⊠B = ker γ ⊆ B⊗B` with `p_B(x⊠y) = x·ε(y)`, the witnesses
//! `S` and `T` extracted from them, and the Frobenius-type diagnostics.

use crate::bialgebra::{Bialgebra, Side};
use crate::coalgebra::Coalgebra;
use crate::convolution::{antipode_shape_check, conv, conv_inverse, conv_unit, Endo};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Quotient, Scalar, Subspace};

/// `B⊘B` with its projection, quotient coalgebra and the map `i_B`.
#[derive(Clone, Debug)]
pub struct OslashSpace {
    source: Bialgebra,
    relations: Subspace,
    quotient: Quotient,
    projection: Matrix,
    coalgebra: Coalgebra,
    i_matrix: Matrix,
    ker_i: Subspace,
    surjective: bool,
    injective: bool,
}

impl OslashSpace {
    pub fn source(&self) -> &Bialgebra {
        &self.source
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient.dim()
    }

    /// The subspace `(B⊗B)Δ(B⁺)` of `B⊗B` killed by the projection.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `quotient_dim × d²` matrix of `π : B⊗B → B⊘B`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Representative in `B⊗B` of each quotient basis element.
    pub fn lift_matrix(&self) -> Matrix {
        self.quotient.lift_matrix()
    }

    pub fn representatives(&self) -> &[usize] {
        self.quotient.representatives()
    }

    /// Quotient coalgebra, `Δ(x⊘y) = (x₁⊘y₂)⊗(x₂⊘y₁)` and `ε(x⊘y) = ε(x)ε(y)`.
    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn i_matrix(&self) -> &Matrix {
        &self.i_matrix
    }

    pub fn ker_i(&self) -> &Subspace {
        &self.ker_i
    }

    pub fn i_surjective(&self) -> bool {
        self.surjective
    }

    pub fn i_injective(&self) -> bool {
        self.injective
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quotient.project(v)
    }

    /// Class of `x⊘y`.
    pub fn class_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.project(&vector::kron(x, y))
    }

    /// Left `B⊗B`-action `(a⊗b)·(x⊘y) = ax⊘by` on a quotient vector.
    pub fn act(&self, a: &[Scalar], b: &[Scalar], class: &[Scalar]) -> Vec<Scalar> {
        let rep = self.quotient.lift(class);
        let moved = self.source.tensor_multiply(&vector::kron(a, b), &rep);
        self.project(&moved)
    }
}

/// Images `x h₁ ⊗ y h₂` spanning `(B⊗B)Δ(B⁺)`, over basis `x, y` and a
/// basis of `B⁺`.
fn relation_vectors(b: &Bialgebra, plus: &Subspace) -> Vec<Vec<Scalar>> {
    let d = b.dim();
    let field = b.field();
    let left: Vec<Matrix> = (0..d).map(|x| b.left_mult_matrix(&b.basis_vector(x))).collect();
    let left_t: Vec<Matrix> = left.iter().map(Matrix::transpose).collect();
    let mut out = Vec::with_capacity(d * d * plus.dim());
    for h in plus.basis_vectors() {
        let t = Matrix::new(field, d, d, b.coproduct(h)).expect("d×d");
        for lx in &left {
            let lt = lx.mul(&t).expect("d×d");
            for ly_t in &left_t {
                out.push(lt.mul(ly_t).expect("d×d").entries().to_vec());
            }
        }
    }
    out
}

/// Coproduct of `w ∈ B⊗B` in `B⊗B^cop`, pushed through `π⊗π`.
fn projected_cop_coproduct(b: &Bialgebra, proj_cols: &[Vec<Scalar>], q: usize, w: &[Scalar]) -> Vec<Scalar> {
    let d = b.dim();
    let mut out = vector::zeros(b.field(), q * q);
    for (idx, c) in w.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (x, y) = (idx / d, idx % d);
        for (x1, x2, s) in b.basis_coproduct(x) {
            for (y1, y2, t) in b.basis_coproduct(y) {
                let coeff = c * &(s * t);
                let left = &proj_cols[x1 * d + y2];
                let right = &proj_cols[x2 * d + y1];
                vector::axpy(&mut out, &coeff, &vector::kron(left, right));
            }
        }
    }
    out
}

pub fn build_oslash(b: &Bialgebra) -> Result<OslashSpace> {
    let d = b.dim();
    let field = b.field();
    let plus = b.augmentation_ideal()?;
    let relations = Subspace::span(field, d * d, relation_vectors(b, &plus))?;
    let quotient = Quotient::new(relations.clone());
    let projection = quotient.projection_matrix();
    let q = quotient.dim();
    let proj_cols = projection.columns();

    for w in relations.basis_vectors() {
        let eps: Scalar = w
            .iter()
            .enumerate()
            .map(|(idx, c)| c * &(&b.counit()[idx / d] * &b.counit()[idx % d]))
            .fold(field.zero(), |acc, x| acc + x);
        if !eps.is_zero() || !vector::is_zero(&projected_cop_coproduct(b, &proj_cols, q, w)) {
            return Err(Error::invariant(format!(
                "relations of B⊘B are not a coideal of B⊗B^cop at {}",
                vector::format_combination(w, &tensor_labels(b))
            )));
        }
        for a in 0..d {
            let e = b.basis_vector(a);
            let moved = [
                b.tensor_multiply(&vector::kron(&e, b.unit()), w),
                b.tensor_multiply(&vector::kron(b.unit(), &e), w),
            ];
            if moved.iter().any(|m| !relations.contains(m)) {
                return Err(Error::invariant("relations of B⊘B are not a left B⊗B-submodule"));
            }
        }
    }

    let reps = quotient.representatives().to_vec();
    let comult_cols: Vec<Vec<Scalar>> = reps
        .iter()
        .map(|&r| projected_cop_coproduct(b, &proj_cols, q, &vector::unit(field, d * d, r)))
        .collect();
    let comult = Matrix::from_columns(field, q * q, &comult_cols)?;
    let counit = reps.iter().map(|&r| &b.counit()[r / d] * &b.counit()[r % d]).collect();
    let labels = reps
        .iter()
        .map(|&r| format!("{}⊘{}", b.labels()[r / d], b.labels()[r % d]))
        .collect();
    let coalgebra = Coalgebra::new(field, labels, comult, counit)?;
    coalgebra
        .verify()
        .map_err(|e| Error::invariant(format!("quotient coalgebra B⊘B: {e}")))?;

    let i_cols: Vec<Vec<Scalar>> = (0..d)
        .map(|k| projection.mul_vec(&vector::kron(&b.basis_vector(k), b.unit())))
        .collect::<Result<_>>()?;
    let i_matrix = Matrix::from_columns(field, q, &i_cols)?;
    let rank = i_matrix.rank();
    let ker_i = i_matrix.kernel();
    Ok(OslashSpace {
        source: b.clone(),
        relations,
        quotient,
        projection,
        coalgebra,
        surjective: rank == q,
        injective: ker_i.is_zero(),
        i_matrix,
        ker_i,
    })
}

fn tensor_labels(b: &Bialgebra) -> Vec<String> {
    b.labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// `B⊠B` with its algebra structure and the map `p_B`.
#[derive(Clone, Debug)]
pub struct BoxslashSpace {
    source: Bialgebra,
    subspace: Subspace,
    mult: Matrix,
    unit: Vec<Scalar>,
    p_matrix: Matrix,
    im_p: Subspace,
    injective: bool,
    surjective: bool,
}

impl BoxslashSpace {
    pub fn source(&self) -> &Bialgebra {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// `ker γ` inside `B⊗B`.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// `d² × dim` matrix whose columns are the basis of `B⊠B`.
    pub fn inclusion(&self) -> Matrix {
        self.subspace.inclusion()
    }

    /// `dim × dim²` structure constants of `(u⊠v)(x⊠y) = ux⊠yv`.
    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn p_matrix(&self) -> &Matrix {
        &self.p_matrix
    }

    pub fn im_p(&self) -> &Subspace {
        &self.im_p
    }

    pub fn p_injective(&self) -> bool {
        self.injective
    }

    pub fn p_surjective(&self) -> bool {
        self.surjective
    }
}

/// Matrix of `γ(x⊗y) = x₁⊗y₁⊗x₂y₂ − x⊗y⊗1`, from `B⊗B` to `B⊗B⊗B`.
pub fn gamma_matrix(b: &Bialgebra) -> Matrix {
    let d = b.dim();
    let field = b.field();
    let mut gamma = Matrix::zeros(field, d * d * d, d * d);
    for x in 0..d {
        for y in 0..d {
            let col = x * d + y;
            for (x1, x2, s) in b.basis_coproduct(x) {
                for (y1, y2, t) in b.basis_coproduct(y) {
                    let coeff = s * t;
                    for (k, c) in b.basis_product(*x2, *y2) {
                        gamma.add_to((x1 * d + y1) * d + k, col, &(&coeff * c));
                    }
                }
            }
            for (k, u) in b.unit().iter().enumerate() {
                if !u.is_zero() {
                    gamma.add_to((x * d + y) * d + k, col, &(-u));
                }
            }
        }
    }
    gamma
}

/// `(u⊗v)(x⊗y) = ux⊗yv`, the multiplication of `B⊗B^op`.
pub(crate) fn opposite_tensor_product(b: &Bialgebra, z: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
    let d = b.dim();
    let mut out = vector::zeros(b.field(), d * d);
    for (p, zc) in z.iter().enumerate() {
        if zc.is_zero() {
            continue;
        }
        let (u, v) = (p / d, p % d);
        for (r, wc) in w.iter().enumerate() {
            if wc.is_zero() {
                continue;
            }
            let (x, y) = (r / d, r % d);
            let coeff = zc * wc;
            for (k, s) in b.basis_product(u, x) {
                for (l, t) in b.basis_product(y, v) {
                    out[k * d + l] += &(&coeff * &(s * t));
                }
            }
        }
    }
    out
}

pub fn build_boxslash(b: &Bialgebra) -> Result<BoxslashSpace> {
    let d = b.dim();
    let field = b.field();
    let subspace = gamma_matrix(b).kernel();
    let basis: Vec<Vec<Scalar>> = subspace.basis_vectors().map(<[Scalar]>::to_vec).collect();
    let m = basis.len();

    let mut mult = Matrix::zeros(field, m, m * m);
    for (s, z) in basis.iter().enumerate() {
        for (t, w) in basis.iter().enumerate() {
            let p = opposite_tensor_product(b, z, w);
            let coords = subspace
                .coordinates(&p)
                .ok_or_else(|| Error::invariant("B⊠B is not closed under its product"))?;
            for (k, c) in coords.into_iter().enumerate() {
                mult.set(k, s * m + t, c);
            }
        }
    }
    let one = vector::kron(b.unit(), b.unit());
    let unit = subspace
        .coordinates(&one)
        .ok_or_else(|| Error::invariant("1⊗1 is not coinvariant"))?;
    check_algebra(&mult, &unit, m).map_err(|what| Error::invariant(format!("B⊠B algebra: {what}")))?;

    for z in &basis {
        let mut collapsed = vector::zeros(field, d);
        let mut scalar = field.zero();
        for (idx, c) in z.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, y) = (idx / d, idx % d);
            vector::axpy(&mut collapsed, c, &b.multiply(&b.basis_vector(x), &b.basis_vector(y)));
            scalar += &(c * &(&b.counit()[x] * &b.counit()[y]));
        }
        if collapsed != vector::scale(&scalar, b.unit()) {
            return Err(Error::invariant("coinvariant element with Σxy ≠ ε(x)ε(y)1"));
        }
    }

    let p_cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|z| {
            let mut v = vector::zeros(field, d);
            for (idx, c) in z.iter().enumerate() {
                if !c.is_zero() {
                    v[idx / d] += &(c * &b.counit()[idx % d]);
                }
            }
            v
        })
        .collect();
    let p_matrix = Matrix::from_columns(field, d, &p_cols)?;
    let im_p = p_matrix.image();
    Ok(BoxslashSpace {
        source: b.clone(),
        injective: im_p.dim() == m,
        surjective: im_p.dim() == d,
        subspace,
        mult,
        unit,
        p_matrix,
        im_p,
    })
}

fn check_algebra(mult: &Matrix, unit: &[Scalar], m: usize) -> std::result::Result<(), String> {
    let field = mult.field();
    let prod =
        |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> { mult.mul_vec(&vector::kron(a, b)).expect("m² coordinates") };
    for i in 0..m {
        let ei = vector::unit(field, m, i);
        if prod(unit, &ei) != ei || prod(&ei, unit) != ei {
            return Err(format!("unit fails on basis element {i}"));
        }
        for j in 0..m {
            let ej = vector::unit(field, m, j);
            let ij = prod(&ei, &ej);
            for k in 0..m {
                let ek = vector::unit(field, m, k);
                if prod(&ij, &ek) != prod(&ei, &prod(&ej, &ek)) {
                    return Err(format!("associativity fails at ({i}, {j}, {k})"));
                }
            }
        }
    }
    Ok(())
}

/// `S(y) = s(1⊘y)` for the free-variables-zero section `s` of `i_B`;
/// satisfies `S(y)⊘1 = 1⊘y`.
pub fn s_witness(oslash: &OslashSpace) -> Result<Endo> {
    let b = oslash.source();
    let d = b.dim();
    let targets: Vec<Vec<Scalar>> = (0..d).map(|y| oslash.class_of(b.unit(), &b.basis_vector(y))).collect();
    let rhs = Matrix::from_columns(b.field(), oslash.quotient_dim(), &targets)?;
    let s = oslash
        .i_matrix()
        .solve_columns(&rhs)?
        .ok_or_else(|| Error::precondition("i_B surjective", "some 1⊘y has no preimage under i_B"))?;
    let check = oslash.i_matrix().mul(&s)?;
    if check != rhs {
        return Err(Error::invariant("section of i_B does not split it"));
    }
    Endo::new(s)
}

/// `T = (ε⊗id)∘t` for a retraction `t` of `p_B`: `t` inverts `p_B` on
/// `im(p_B)` and vanishes on the unit vectors at non-pivot coordinates.
pub fn t_witness(boxslash: &BoxslashSpace) -> Result<Endo> {
    let b = boxslash.source();
    let d = b.dim();
    let field = b.field();
    if !boxslash.p_injective() {
        return Err(Error::precondition("p_B injective", "p_B has a nonzero kernel"));
    }
    let im = boxslash.im_p();
    let m = boxslash.dim();
    let mut t = Matrix::zeros(field, m, d);
    for (row, w) in im.basis_vectors().enumerate() {
        let z = boxslash
            .p_matrix()
            .solve(w)?
            .ok_or_else(|| Error::invariant("image basis vector outside im(p_B)"))?;
        let pivot = im.pivots()[row];
        for (s, c) in z.into_iter().enumerate() {
            t.set(s, pivot, c);
        }
    }
    let eps_id = Matrix::from_fn(field, d, d * d, |y, idx| {
        if idx % d == y {
            b.counit()[idx / d].clone()
        } else {
            field.zero()
        }
    });
    let incl = boxslash.inclusion();
    let big_t = eps_id.mul(&incl)?.mul(&t)?;
    // T(x^i)ε(y_i) = ε(x^i)y_i on every basis element of B⊠B.
    let lhs = big_t.mul(boxslash.p_matrix())?;
    let rhs = eps_id.mul(&incl)?;
    if lhs != rhs {
        return Err(Error::invariant("T fails T(x)ε(y) = ε(x)y on B⊠B"));
    }
    Endo::new(big_t)
}

/// Residual identities of the `S` witness modulo `ker(i_B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SResiduals {
    /// `S(ab) − S(b)S(a) ∈ ker(i_B)`.
    pub anti_multiplicative: bool,
    /// `a₁S(a₂) − ε(a)1 ∈ ker(i_B)`.
    pub right_inverse: bool,
    /// `S(a₂)⊗S(a₁) − S(a)₁⊗S(a)₂ ∈ ker(i_B)⊗B + B⊗ker(i_B)`.
    pub anti_comultiplicative: bool,
}

impl SResiduals {
    pub fn all(&self) -> bool {
        self.anti_multiplicative && self.right_inverse && self.anti_comultiplicative
    }
}

pub fn s_residuals(oslash: &OslashSpace, s: &Endo) -> Result<SResiduals> {
    let b = oslash.source();
    let d = b.dim();
    let field = b.field();
    let q = Quotient::new(oslash.ker_i().clone()).projection_matrix();
    let vanishes = |v: &[Scalar]| vector::is_zero(&q.mul_vec(v).expect("d coordinates"));
    let cols = s.matrix().columns();
    let anti_multiplicative = (0..d).all(|i| {
        (0..d).all(|j| {
            let ab = b.multiply(&b.basis_vector(i), &b.basis_vector(j));
            vanishes(&vector::sub(&s.apply(&ab), &b.multiply(&cols[j], &cols[i])))
        })
    });
    let right_inverse = (0..d).all(|k| {
        let mut acc = vector::scale(&(-&b.counit()[k]), b.unit());
        for (i, j, c) in b.basis_coproduct(k) {
            vector::axpy(&mut acc, c, &b.multiply(&b.basis_vector(*i), &cols[*j]));
        }
        vanishes(&acc)
    });
    let qt = q.transpose();
    let anti_comultiplicative = (0..d).all(|k| {
        let mut acc = vector::scale(&field.from_i64(-1), &b.coproduct(&cols[k]));
        for (i, j, c) in b.basis_coproduct(k) {
            vector::axpy(&mut acc, c, &vector::kron(&cols[*j], &cols[*i]));
        }
        let as_matrix = Matrix::new(field, d, d, acc).expect("d×d");
        q.mul(&as_matrix).and_then(|m| m.mul(&qt)).expect("shapes").is_zero()
    });
    Ok(SResiduals {
        anti_multiplicative,
        right_inverse,
        anti_comultiplicative,
    })
}

/// Identities of the `T` witness on `im(p_B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TIdentities {
    /// `a₁T(a₂) = ε(a)1`.
    pub right_inverse: bool,
    /// `T(a₁)⊗T(a₂) = T(a)₂⊗T(a)₁`.
    pub anti_comultiplicative: bool,
    /// `T(ab) = T(b)T(a)`.
    pub anti_multiplicative: bool,
}

impl TIdentities {
    pub fn all(&self) -> bool {
        self.right_inverse && self.anti_comultiplicative && self.anti_multiplicative
    }
}

pub fn t_identities(boxslash: &BoxslashSpace, t: &Endo) -> Result<TIdentities> {
    let b = boxslash.source();
    let d = b.dim();
    let field = b.field();
    let cols = t.matrix().columns();
    let basis: Vec<Vec<Scalar>> = boxslash.im_p().basis_vectors().map(<[Scalar]>::to_vec).collect();
    let right_inverse = basis.iter().all(|a| {
        let delta = b.coproduct(a);
        let mut acc = vector::scale(&(-b.counit_of(a)), b.unit());
        for (idx, c) in delta.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut acc, c, &b.multiply(&b.basis_vector(idx / d), &cols[idx % d]));
            }
        }
        vector::is_zero(&acc)
    });
    let anti_comultiplicative = basis.iter().all(|a| {
        let delta = b.coproduct(a);
        let mut lhs = vector::zeros(field, d * d);
        for (idx, c) in delta.iter().enumerate() {
            if !c.is_zero() {
                vector::axpy(&mut lhs, c, &vector::kron(&cols[idx / d], &cols[idx % d]));
            }
        }
        let image = b.coproduct(&t.apply(a));
        let flipped: Vec<Scalar> = (0..d * d).map(|idx| image[(idx % d) * d + idx / d].clone()).collect();
        lhs == flipped
    });
    let anti_multiplicative = basis.iter().all(|a| {
        basis
            .iter()
            .all(|c| t.apply(&b.multiply(a, c)) == b.multiply(&t.apply(c), &t.apply(a)))
    });
    Ok(TIdentities {
        right_inverse,
        anti_comultiplicative,
        anti_multiplicative,
    })
}

/// The three equivalent conditions, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub i_bijective: bool,
    pub p_bijective: bool,
    /// A right convolution inverse of `Id`, when one exists.
    pub right_antipode: Option<Endo>,
    /// Whether that right inverse is anti-multiplicative and anti-comultiplicative.
    pub right_antipode_anti_bialgebra: bool,
    /// `y ↦ i_B⁻¹(1⊘y)`, defined when `i_B` is bijective.
    pub right_antipode_from_i: Option<Endo>,
    /// `x⊗y ↦ xy₁⊗y₂` is bijective.
    pub can_bijective: bool,
    /// `x⊗y ↦ x₁⊗x₂y` is bijective.
    pub can_prime_bijective: bool,
    pub consistent: bool,
}

impl FrobeniusReport {
    pub fn antipode_condition(&self) -> bool {
        self.right_antipode.is_some() && self.right_antipode_anti_bialgebra
    }
}

fn can_matrices(b: &Bialgebra) -> (Matrix, Matrix) {
    let d = b.dim();
    let field = b.field();
    let mut can = Matrix::zeros(field, d * d, d * d);
    let mut can_prime = Matrix::zeros(field, d * d, d * d);
    for x in 0..d {
        for y in 0..d {
            let col = x * d + y;
            for (y1, y2, c) in b.basis_coproduct(y) {
                for (k, s) in b.basis_product(x, *y1) {
                    can.add_to(k * d + y2, col, &(c * s));
                }
            }
            for (x1, x2, c) in b.basis_coproduct(x) {
                for (k, s) in b.basis_product(*x2, y) {
                    can_prime.add_to(x1 * d + k, col, &(c * s));
                }
            }
        }
    }
    (can, can_prime)
}

pub fn frobenius_report(b: &Bialgebra) -> Result<FrobeniusReport> {
    let oslash = build_oslash(b)?;
    let boxslash = build_boxslash(b)?;
    frobenius_report_from(&oslash, &boxslash)
}

pub fn frobenius_report_from(oslash: &OslashSpace, boxslash: &BoxslashSpace) -> Result<FrobeniusReport> {
    let b = oslash.source();
    let d = b.dim();
    let i_bijective = oslash.i_injective() && oslash.i_surjective();
    let p_bijective = boxslash.p_injective() && boxslash.p_surjective();
    let id = Endo::identity(b);
    let right_antipode = conv_inverse(b, &id, Side::Right)?;
    let right_antipode_anti_bialgebra = match &right_antipode {
        Some(s) => {
            let shape = antipode_shape_check(b, s)?;
            shape.anti_algebra && shape.anti_coalgebra
        }
        None => false,
    };
    let mut from_i_ok = true;
    let right_antipode_from_i = if i_bijective {
        let s = s_witness(oslash)?;
        let shape = antipode_shape_check(b, &s)?;
        from_i_ok = conv(b, &id, &s)? == conv_unit(b)
            && shape.anti_algebra
            && shape.anti_coalgebra
            && Some(&s) == right_antipode.as_ref();
        Some(s)
    } else {
        None
    };
    let (can, can_prime) = can_matrices(b);
    let antipode_condition = right_antipode.is_some() && right_antipode_anti_bialgebra;
    Ok(FrobeniusReport {
        i_bijective,
        p_bijective,
        right_antipode,
        right_antipode_anti_bialgebra,
        right_antipode_from_i,
        can_bijective: can.rank() == d * d,
        can_prime_bijective: can_prime.rank() == d * d,
        consistent: i_bijective == p_bijective && p_bijective == antipode_condition && from_i_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::tests::{cyclic, quantum_plane};
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rational
    }

    /// `k⟨x | x² = x⟩` with `x` grouplike.
    fn idempotent(field: Field) -> Bialgebra {
        Bialgebra::from_fns(
            field,
            vec!["1".into(), "x".into()],
            |a, b| vector::unit(field, 2, if a + b > 0 { 1 } else { 0 }),
            |k| vector::unit(field, 4, k * 2 + k),
            vector::unit(field, 2, 0),
            vec![field.one(); 2],
        )
        .unwrap()
    }

    #[test]
    fn ground_field() {
        let k = cyclic(q(), 1);
        let os = build_oslash(&k).unwrap();
        assert_eq!(os.quotient_dim(), 1);
        assert!(os.i_matrix().is_identity());
        assert_eq!(build_boxslash(&k).unwrap().dim(), 1);
    }

    #[test]
    fn quantum_plane_oslash() {
        let b = quantum_plane(q());
        let os = build_oslash(&b).unwrap();
        assert_eq!(os.quotient_dim(), 4);
        assert_eq!(os.ker_i().dim(), 2);
        assert!(os.i_surjective());
        assert!(!os.i_injective());
        let f = q();
        let x2_minus_1 = vec![f.from_i64(-1), f.zero(), f.one(), f.zero(), f.zero(), f.zero()];
        assert!(os.ker_i().contains(&x2_minus_1));
        assert_eq!(os.i_matrix().rank() + os.ker_i().dim(), b.dim());
    }

    #[test]
    fn quantum_plane_boxslash() {
        let b = quantum_plane(q());
        let bs = build_boxslash(&b).unwrap();
        assert!(bs.p_injective());
        assert!(!bs.p_surjective());
        assert_eq!(bs.dim(), bs.p_matrix().rank());
        assert_eq!(bs.dim(), 1);
    }

    #[test]
    fn group_algebra_frobenius() {
        let c2 = cyclic(q(), 2);
        let os = build_oslash(&c2).unwrap();
        assert_eq!(os.quotient_dim(), 2);
        assert!(os.i_injective() && os.i_surjective());
        let r = frobenius_report(&c2).unwrap();
        assert!(r.i_bijective && r.p_bijective && r.antipode_condition() && r.consistent);
        assert!(r.right_antipode_from_i.unwrap().matrix().is_identity());
        assert!(r.can_bijective && r.can_prime_bijective);
        let s = s_witness(&os).unwrap();
        assert!(s.matrix().is_identity());
        let t = t_witness(&build_boxslash(&c2).unwrap()).unwrap();
        assert!(t.matrix().is_identity());
    }

    #[test]
    fn non_hopf_frobenius() {
        for b in [quantum_plane(q()), idempotent(q())] {
            let r = frobenius_report(&b).unwrap();
            assert!(!r.i_bijective && !r.p_bijective && r.right_antipode.is_none());
            assert!(r.consistent);
        }
        let os = build_oslash(&idempotent(q())).unwrap();
        assert!(os.i_surjective() && !os.i_injective());
        let bs = build_boxslash(&idempotent(q())).unwrap();
        assert!(bs.p_injective() && !bs.p_surjective());
    }

    #[test]
    fn witnesses_satisfy_their_identities() {
        for b in [
            quantum_plane(q()),
            idempotent(q()),
            cyclic(q(), 3),
            quantum_plane(Field::Prime(3)),
        ] {
            let os = build_oslash(&b).unwrap();
            let s = s_witness(&os).unwrap();
            for y in 0..b.dim() {
                let lhs = os.class_of(&s.apply(&b.basis_vector(y)), b.unit());
                assert_eq!(lhs, os.class_of(b.unit(), &b.basis_vector(y)));
            }
            assert!(s_residuals(&os, &s).unwrap().all());
            let bs = build_boxslash(&b).unwrap();
            let t = t_witness(&bs).unwrap();
            assert!(t_identities(&bs, &t).unwrap().all());
        }
    }

    #[test]
    fn action_descends() {
        let b = quantum_plane(q());
        let os = build_oslash(&b).unwrap();
        let x = b.basis_vector(1);
        let y = b.basis_vector(3);
        let cls = os.class_of(&y, &x);
        assert_eq!(
            os.act(&x, &y, &cls),
            os.class_of(&b.multiply(&x, &y), &b.multiply(&y, &x))
        );
    }
    #[test]
    fn gf2_enumeration_oracle() {
        let f = Field::Prime(2);
        for b in [cyclic(f, 2), cyclic(f, 3), idempotent(f)] {
            assert_eq!(
                crate::oracle::coinvariant_count(&b).unwrap(),
                1 << build_boxslash(&b).unwrap().dim()
            );
            let os = build_oslash(&b).unwrap();
            assert_eq!(
                crate::oracle::relation_count(&b).unwrap(),
                1 << (b.dim() * b.dim() - os.quotient_dim())
            );
        }
    }
}

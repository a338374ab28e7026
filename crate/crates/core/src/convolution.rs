//! The convolution algebra `End(B)` with `f*g = m∘(f⊗g)∘Δ` and unit `u∘ε`:
//! powers of the identity, convolution inverses and n-antipodes.

use crate::bialgebra::{Bialgebra, Side};
use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar, Subspace};

/// A linear endomorphism of a bialgebra, as a square matrix acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endo(Matrix);

impl Endo {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::shape(format!(
                "endomorphism must be square, got {}×{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Endo(matrix))
    }

    pub fn identity(b: &Bialgebra) -> Self {
        Endo(Matrix::identity(b.field(), b.dim()))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.0
            .mul_vec(v)
            .expect("endomorphism applied to a vector of its own dimension")
    }

    /// Row-major flattening, the coordinate vector used by the linear solves.
    fn flatten(&self) -> Vec<Scalar> {
        self.0.entries().to_vec()
    }

    fn unflatten(b: &Bialgebra, v: Vec<Scalar>) -> Endo {
        Endo(Matrix::new(b.field(), b.dim(), b.dim(), v).expect("d² coordinates"))
    }

    fn check(&self, b: &Bialgebra) -> Result<()> {
        if self.dim() != b.dim() {
            return Err(Error::Dimension {
                expected: b.dim(),
                found: self.dim(),
            });
        }
        if self.0.field() != b.field() {
            return Err(Error::FieldMismatch {
                left: b.field(),
                right: self.0.field(),
            });
        }
        Ok(())
    }
}

/// Convolution of `f, g : source → target` (both `target.dim × source.dim`).
pub fn convolve(source: &Bialgebra, target: &Bialgebra, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    for m in [f, g] {
        if (m.rows(), m.cols()) != (target.dim(), source.dim()) {
            return Err(Error::shape(format!(
                "convolution factors must be {}×{}, got {}×{}",
                target.dim(),
                source.dim(),
                m.rows(),
                m.cols()
            )));
        }
    }
    let f_cols = f.columns();
    let g_cols = g.columns();
    let cols: Vec<Vec<Scalar>> = (0..source.dim())
        .map(|k| {
            let mut out = vector::zeros(target.field(), target.dim());
            for (i, j, c) in source.basis_coproduct(k) {
                let p = target.multiply(&f_cols[*i], &g_cols[*j]);
                vector::axpy(&mut out, c, &p);
            }
            out
        })
        .collect();
    Matrix::from_columns(target.field(), target.dim(), &cols)
}

/// `u_target ∘ ε_source`, the unit of the convolution algebra `Hom(source, target)`.
pub fn convolution_unit_between(source: &Bialgebra, target: &Bialgebra) -> Matrix {
    Matrix::from_fn(target.field(), target.dim(), source.dim(), |r, c| {
        &target.unit()[r] * &source.counit()[c]
    })
}

pub fn conv(b: &Bialgebra, f: &Endo, g: &Endo) -> Result<Endo> {
    f.check(b)?;
    g.check(b)?;
    Ok(Endo(convolve(b, b, &f.0, &g.0)?))
}

pub fn conv_unit(b: &Bialgebra) -> Endo {
    Endo(convolution_unit_between(b, b))
}

/// `f^{*k}` by repeated squaring.
pub fn conv_power(b: &Bialgebra, f: &Endo, mut k: u64) -> Result<Endo> {
    f.check(b)?;
    let mut acc = conv_unit(b);
    let mut base = f.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = conv(b, &acc, &base)?;
        }
        k >>= 1;
        if k > 0 {
            base = conv(b, &base, &base)?;
        }
    }
    Ok(acc)
}

/// `Id^{*k}`.
pub fn id_power(b: &Bialgebra, k: u64) -> Endo {
    conv_power(b, &Endo::identity(b), k).expect("identity matches its bialgebra")
}

/// Matrix of the linear map `S ↦ S * f` on row-major coordinates of `S`.
pub fn right_conv_operator(b: &Bialgebra, f: &Endo) -> Result<Matrix> {
    f.check(b)?;
    let d = b.dim();
    let f_cols = f.0.columns();
    // e_r · f(e_j)
    let prods: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|r| {
            let e = b.basis_vector(r);
            f_cols.iter().map(|col| b.multiply(&e, col)).collect()
        })
        .collect();
    let mut op = Matrix::zeros(b.field(), d * d, d * d);
    for k in 0..d {
        for (i, j, c) in b.basis_coproduct(k) {
            for (r, row) in prods.iter().enumerate() {
                for (o, x) in row[*j].iter().enumerate() {
                    if !x.is_zero() {
                        op.add_to(o * d + k, r * d + i, &(c * x));
                    }
                }
            }
        }
    }
    Ok(op)
}

/// Matrix of the linear map `S ↦ f * S` on row-major coordinates of `S`.
pub fn left_conv_operator(b: &Bialgebra, f: &Endo) -> Result<Matrix> {
    f.check(b)?;
    let d = b.dim();
    let f_cols = f.0.columns();
    // f(e_i) · e_r
    let prods: Vec<Vec<Vec<Scalar>>> = f_cols
        .iter()
        .map(|col| (0..d).map(|r| b.multiply(col, &b.basis_vector(r))).collect())
        .collect();
    let mut op = Matrix::zeros(b.field(), d * d, d * d);
    for k in 0..d {
        for (i, j, c) in b.basis_coproduct(k) {
            for (r, p) in prods[*i].iter().enumerate() {
                for (o, x) in p.iter().enumerate() {
                    if !x.is_zero() {
                        op.add_to(o * d + k, r * d + j, &(c * x));
                    }
                }
            }
        }
    }
    Ok(op)
}

/// Solves `S * f = target` (`Side::Left`) or `f * S = target` (`Side::Right`).
fn solve_convolution(b: &Bialgebra, f: &Endo, target: &Endo, side: Side) -> Result<Option<Endo>> {
    let op = match side {
        Side::Left => right_conv_operator(b, f)?,
        Side::Right => left_conv_operator(b, f)?,
        Side::TwoSided => unreachable!("two-sided systems are solved one side at a time"),
    };
    Ok(op.solve(&target.flatten())?.map(|x| Endo::unflatten(b, x)))
}

/// A convolution inverse of `f`.
///
/// `Side::Right` asks for `g` with `f * g = u∘ε`, `Side::Left` for `g * f = u∘ε`.
/// A two-sided inverse is unique, so it is found as a right inverse and then
/// checked on the left.
pub fn conv_inverse(b: &Bialgebra, f: &Endo, side: Side) -> Result<Option<Endo>> {
    let unit = conv_unit(b);
    match side {
        Side::Left | Side::Right => solve_convolution(b, f, &unit, side),
        Side::TwoSided => {
            let Some(g) = solve_convolution(b, f, &unit, Side::Right)? else {
                return Ok(None);
            };
            Ok((conv(b, &g, f)? == unit).then_some(g))
        }
    }
}

/// Whether `s` is a two-sided convolution inverse of the identity.
pub fn is_antipode(b: &Bialgebra, s: &Endo) -> Result<bool> {
    let id = Endo::identity(b);
    let unit = conv_unit(b);
    Ok(conv(b, s, &id)? == unit && conv(b, &id, s)? == unit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NAntipodeResult {
    pub n: usize,
    pub antipode: Endo,
    pub sided: Side,
    /// Whether the returned map lies in the subalgebra generated by `Id`.
    pub central: bool,
}

/// Basis `u∘ε, Id, Id^{*2}, …` of the convolution subalgebra generated by
/// `Id`, stopping at the first linear dependence.
pub fn identity_subalgebra(b: &Bialgebra) -> Vec<Endo> {
    let d = b.dim();
    let id = Endo::identity(b);
    let mut powers = vec![conv_unit(b)];
    let mut span = Subspace::span(b.field(), d * d, [powers[0].flatten()]).expect("d² coordinates");
    loop {
        let next = conv(b, powers.last().expect("nonempty"), &id).expect("same bialgebra");
        let flat = next.flatten();
        if span.contains(&flat) {
            return powers;
        }
        span = span
            .sum(&Subspace::span(b.field(), d * d, [flat]).expect("d² coordinates"))
            .expect("same ambient");
        powers.push(next);
    }
}

fn in_identity_subalgebra(b: &Bialgebra, s: &Endo, basis: &[Endo]) -> bool {
    let span = Subspace::span(b.field(), b.dim() * b.dim(), basis.iter().map(Endo::flatten)).expect("d² coordinates");
    span.contains(&s.flatten())
}

/// Smallest `n` admitting `S` with `S * Id^{*(n+1)} = Id^{*n}` (`Side::Left`)
/// or `Id^{*(n+1)} * S = Id^{*n}` (`Side::Right`), one linear solve per `n`.
pub fn minimal_n_antipode(b: &Bialgebra, side: Side) -> Result<NAntipodeResult> {
    if side == Side::TwoSided {
        return central_n_antipode(b);
    }
    let id = Endo::identity(b);
    let cap = b.dim() * b.dim() + 1;
    let mut lower = conv_unit(b);
    for n in 0..=cap {
        let upper = conv(b, &lower, &id)?;
        if let Some(s) = solve_convolution(b, &upper, &lower, side)? {
            let basis = identity_subalgebra(b);
            let central = in_identity_subalgebra(b, &s, &basis);
            return Ok(NAntipodeResult {
                n,
                antipode: s,
                sided: side,
                central,
            });
        }
        lower = upper;
    }
    Err(Error::invariant(format!(
        "no {side} n-antipode with n ≤ {cap} on a finite-dimensional bialgebra"
    )))
}

pub fn minimal_left_n_antipode(b: &Bialgebra) -> Result<NAntipodeResult> {
    minimal_n_antipode(b, Side::Left)
}

pub fn minimal_right_n_antipode(b: &Bialgebra) -> Result<NAntipodeResult> {
    minimal_n_antipode(b, Side::Right)
}

/// Smallest `n` with an n-antipode inside the subalgebra generated by `Id`.
/// Such an `S` commutes with `Id`, so it is an n-antipode on both sides.
pub fn central_n_antipode(b: &Bialgebra) -> Result<NAntipodeResult> {
    let basis = identity_subalgebra(b);
    let m = basis.len();
    let id = Endo::identity(b);
    let mut powers = basis.clone();
    while powers.len() < 2 * m + 2 {
        let next = conv(b, powers.last().expect("nonempty"), &id)?;
        powers.push(next);
    }
    let field = b.field();
    let d = b.dim();
    for n in 0..=m {
        // Id^{*n} = Σ c_j Id^{*j} * Id^{*(n+1)} = Σ c_j Id^{*(j+n+1)}
        let cols: Vec<Vec<Scalar>> = (0..m).map(|j| powers[j + n + 1].flatten()).collect();
        let system = Matrix::from_columns(field, d * d, &cols)?;
        let Some(coeffs) = system.solve(&powers[n].flatten())? else {
            continue;
        };
        let mut flat = vector::zeros(field, d * d);
        for (c, p) in coeffs.iter().zip(&basis) {
            vector::axpy(&mut flat, c, &p.flatten());
        }
        let s = Endo::unflatten(b, flat);
        let upper = &powers[n + 1];
        let lower = &powers[n];
        let holds =
            conv(b, &s, upper)? == *lower && conv(b, upper, &s)? == *lower && conv(b, &s, &id)? == conv(b, &id, &s)?;
        if !holds {
            return Err(Error::invariant("central n-antipode fails its defining identities"));
        }
        return Ok(NAntipodeResult {
            n,
            antipode: s,
            sided: Side::TwoSided,
            central: true,
        });
    }
    Err(Error::invariant(
        "identity is algebraic in the convolution algebra but no central n-antipode was found",
    ))
}

/// Whether `s` satisfies the left (`S * Id^{*(n+1)} = Id^{*n}`) or right
/// n-antipode identity for the given `n`.
pub fn is_n_antipode(b: &Bialgebra, s: &Endo, n: u64, side: Side) -> Result<bool> {
    let lower = id_power(b, n);
    let upper = id_power(b, n + 1);
    let left = || -> Result<bool> { Ok(conv(b, s, &upper)? == lower) };
    let right = || -> Result<bool> { Ok(conv(b, &upper, s)? == lower) };
    Ok(match side {
        Side::Left => left()?,
        Side::Right => right()?,
        Side::TwoSided => left()? && right()?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeCheck {
    /// `S(ab) = S(b)S(a)` on all basis pairs.
    pub anti_algebra: bool,
    /// `(S⊗S)∘Δ = Δ^cop∘S` on the basis.
    pub anti_coalgebra: bool,
}

pub fn antipode_shape_check(b: &Bialgebra, s: &Endo) -> Result<ShapeCheck> {
    s.check(b)?;
    let d = b.dim();
    let cols = s.0.columns();
    let anti_algebra = (0..d).all(|i| {
        (0..d).all(|j| {
            let p = b.multiply(&b.basis_vector(i), &b.basis_vector(j));
            s.apply(&p) == b.multiply(&cols[j], &cols[i])
        })
    });
    let anti_coalgebra = (0..d).all(|k| {
        let lhs = b.coproduct(&cols[k]);
        let mut rhs = vector::zeros(b.field(), d * d);
        for (i, j, c) in b.basis_coproduct(k) {
            vector::axpy(&mut rhs, c, &vector::kron(&cols[*j], &cols[*i]));
        }
        lhs == rhs
    });
    Ok(ShapeCheck {
        anti_algebra,
        anti_coalgebra,
    })
}

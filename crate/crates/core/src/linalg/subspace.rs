//! Subspaces in canonical reduced row-echelon form, and quotients by them.

use super::matrix::{Echelon, Matrix};
use super::{vector, Field, Scalar};
use crate::error::{Error, Result};

/// A subspace of `field^ambient` stored by its reduced row-echelon basis.
///
/// Because the basis is canonical, `==` is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        let m = Matrix::from_rows(field, ambient, &rows)?;
        Ok(Self::from_echelon(ambient, m.rref()))
    }

    pub(crate) fn from_echelon(ambient: usize, ech: Echelon) -> Self {
        debug_assert_eq!(ech.matrix.cols(), ambient);
        Subspace {
            ambient,
            basis: ech.matrix,
            pivots: ech.pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        Ok(())
    }

    /// `v` minus its component along the basis; zero at every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut r, &(-c), self.basis.row(row));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient && vector::is_zero(&self.reduce(v))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vector::zeros(self.field(), self.ambient);
        for (row, c) in coords.iter().enumerate() {
            vector::axpy(&mut v, c, self.basis.row(row));
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis_vectors().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Self::from_echelon(self.ambient, stacked.rref()))
    }

    /// Intersection through the kernel of `[Uᵀ | −Vᵀ]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        let system = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().scale(&field.from_i64(-1)))?;
        let kernel = system.kernel();
        let vectors = kernel
            .basis_vectors()
            .map(|k| self.combine(&k[..self.dim()]))
            .collect::<Vec<_>>();
        Subspace::span(field, self.ambient, vectors)
    }

    /// Non-pivot coordinates; the matching unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Rows form a basis of the covectors vanishing on the subspace.
    pub fn annihilator(&self) -> Matrix {
        let ker = self.basis.kernel();
        ker.basis.clone()
    }

    /// Image of the subspace under `map` (an `n × ambient` matrix).
    pub fn map_through(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::Dimension {
                expected: self.ambient,
                found: map.cols(),
            });
        }
        let images: Result<Vec<_>> = self.basis_vectors().map(|v| map.mul_vec(v)).collect();
        Subspace::span(self.field(), map.rows(), images?)
    }
}

/// The quotient `field^n / sub`, with basis the unit vectors at the
/// complement indices of `sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    sub: Subspace,
    reps: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: Subspace) -> Self {
        let reps = sub.complement_indices();
        Quotient { sub, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.sub.reduce(v);
        self.reps.iter().map(|&i| r[i].clone()).collect()
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        let mut v = vector::zeros(self.sub.field(), self.ambient_dim());
        for (&i, c) in self.reps.iter().zip(coords) {
            v[i] = c.clone();
        }
        v
    }

    /// `dim × ambient` matrix of the projection.
    pub fn projection_matrix(&self) -> Matrix {
        let field = self.sub.field();
        let n = self.ambient_dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.project(&vector::unit(field, n, j))).collect();
        Matrix::from_columns(field, self.dim(), &cols).expect("projection columns")
    }

    /// `ambient × dim` matrix sending quotient coordinates to representatives.
    pub fn lift_matrix(&self) -> Matrix {
        let field = self.sub.field();
        Matrix::from_fn(field, self.ambient_dim(), self.dim(), |r, c| {
            if self.reps[c] == r {
                field.one()
            } else {
                field.zero()
            }
        })
    }
}

//! Coalgebras by structure constants, and the coalgebra axiom checks shared
//! with bialgebras.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

/// Sparse coproduct of one basis element: `(i, j, c)` stands for `c·e_i⊗e_j`.
pub type SparseCoproduct = Vec<(usize, usize, Scalar)>;

/// The axiom families checked by [`crate::bialgebra::Bialgebra::verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    Unitality,
    Coassociativity,
    Counitality,
    Compatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counitality => "counitality",
            Axiom::Compatibility => "compatibility",
        };
        f.write_str(name)
    }
}

/// The first failing instance of an axiom: basis indices and the nonzero
/// difference of the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self
            .residual
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{k}: {c}"))
            .collect();
        write!(
            f,
            "basis indices {:?}, nonzero residual {{{}}}",
            self.indices,
            nonzero.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub witness: Option<AxiomWitness>,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(AxiomCheck::holds)
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.checks.iter().filter(|c| c.axiom == axiom).all(AxiomCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = (Axiom, &AxiomWitness)> {
        self.checks
            .iter()
            .filter_map(|c| c.witness.as_ref().map(|w| (c.axiom, w)))
    }

    pub(crate) fn into_result(self) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some((axiom, witness)) => Err(Error::InvalidBialgebra {
                axiom: axiom.to_string(),
                witness: witness.to_string(),
            }),
        }
    }
}

pub(crate) fn sparse_columns(comult: &Matrix, dim: usize) -> Vec<SparseCoproduct> {
    (0..comult.cols())
        .map(|k| {
            (0..comult.rows())
                .filter_map(|r| {
                    let c = comult.get(r, k);
                    (!c.is_zero()).then(|| (r / dim, r % dim, c.clone()))
                })
                .collect()
        })
        .collect()
}

pub(crate) fn coassociativity_witness(
    field: Field,
    dim: usize,
    coproducts: &[SparseCoproduct],
) -> Option<AxiomWitness> {
    for (k, terms) in coproducts.iter().enumerate() {
        let mut residual = vector::zeros(field, dim * dim * dim);
        for (i, j, c) in terms {
            for (a, b, c2) in &coproducts[*i] {
                residual[(a * dim + b) * dim + j] += &(c * c2);
            }
            for (a, b, c2) in &coproducts[*j] {
                residual[i * dim * dim + a * dim + b] -= &(c * c2);
            }
        }
        if !vector::is_zero(&residual) {
            return Some(AxiomWitness {
                indices: vec![k],
                residual,
            });
        }
    }
    None
}

pub(crate) fn counitality_witness(
    field: Field,
    dim: usize,
    coproducts: &[SparseCoproduct],
    counit: &[Scalar],
) -> Option<AxiomWitness> {
    for (k, terms) in coproducts.iter().enumerate() {
        let mut left = vector::zeros(field, dim);
        let mut right = vector::zeros(field, dim);
        for (i, j, c) in terms {
            left[*j] += &(c * &counit[*i]);
            right[*i] += &(c * &counit[*j]);
        }
        let target = vector::unit(field, dim, k);
        for side in [left, right] {
            let residual = vector::sub(&side, &target);
            if !vector::is_zero(&residual) {
                return Some(AxiomWitness {
                    indices: vec![k],
                    residual,
                });
            }
        }
    }
    None
}

/// A coalgebra given by `Δ` as a `d² × d` matrix and `ε` as a covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    labels: Vec<String>,
    comult: Matrix,
    counit: Vec<Scalar>,
    coproducts: Vec<SparseCoproduct>,
}

impl Coalgebra {
    /// Shape-checked constructor; axioms are checked by [`Coalgebra::verify`].
    pub fn new(field: Field, labels: Vec<String>, comult: Matrix, counit: Vec<Scalar>) -> Result<Self> {
        let dim = labels.len();
        if comult.rows() != dim * dim || comult.cols() != dim {
            return Err(Error::shape(format!(
                "comultiplication of a {dim}-dimensional coalgebra must be {}×{dim}, got {}×{}",
                dim * dim,
                comult.rows(),
                comult.cols()
            )));
        }
        if counit.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                found: counit.len(),
            });
        }
        if comult.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: comult.field(),
            });
        }
        if let Some(bad) = counit.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        let coproducts = sparse_columns(&comult, dim);
        Ok(Coalgebra {
            field,
            labels,
            comult,
            counit,
            coproducts,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn coproduct(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[k]
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let d = self.dim();
        AxiomReport {
            checks: vec![
                AxiomCheck {
                    axiom: Axiom::Coassociativity,
                    witness: coassociativity_witness(self.field, d, &self.coproducts),
                },
                AxiomCheck {
                    axiom: Axiom::Counitality,
                    witness: counitality_witness(self.field, d, &self.coproducts, &self.counit),
                },
            ],
        }
    }

    pub fn verify(&self) -> Result<()> {
        self.check_axioms().into_result()
    }

    /// Whether `matrix` (target × source) commutes with both comultiplications
    /// and counits.
    pub fn is_morphism_to(&self, target: &Coalgebra, matrix: &Matrix) -> Result<bool> {
        coalgebra_map_holds(
            (self.dim(), &self.coproducts, &self.counit),
            (target.dim(), &target.coproducts, &target.counit),
            matrix,
        )
    }
}

type CoalgebraView<'a> = (usize, &'a [SparseCoproduct], &'a [Scalar]);

pub(crate) fn coalgebra_map_holds(
    source: CoalgebraView<'_>,
    target: CoalgebraView<'_>,
    matrix: &Matrix,
) -> Result<bool> {
    let (sd, s_cop, s_eps) = source;
    let (td, t_cop, t_eps) = target;
    if matrix.rows() != td || matrix.cols() != sd {
        return Err(Error::shape(format!(
            "map must be {td}×{sd}, got {}×{}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let field = matrix.field();
    let columns = matrix.columns();
    for k in 0..sd {
        let image = &columns[k];
        let eps: Scalar = vector::dot(image, t_eps);
        if eps != s_eps[k] {
            return Ok(false);
        }
        let mut lhs = vector::zeros(field, td * td);
        for (t, c) in image.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, b, c2) in &t_cop[t] {
                lhs[a * td + b] += &(c * c2);
            }
        }
        let mut rhs = vector::zeros(field, td * td);
        for (i, j, c) in &s_cop[k] {
            let part = vector::kron(&columns[*i], &columns[*j]);
            vector::axpy(&mut rhs, c, &part);
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

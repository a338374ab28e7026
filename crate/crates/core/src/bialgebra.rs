//! Finite-dimensional bialgebras given by structure constants.

use std::fmt;

use crate::coalgebra::{
    coalgebra_map_holds, coassociativity_witness, counitality_witness, sparse_columns, Axiom, AxiomCheck, AxiomReport,
    AxiomWitness, Coalgebra, SparseCoproduct,
};
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Quotient, Scalar, Subspace};

/// Which side(s) an ideal closure, inverse or antipode refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

/// A bialgebra on the basis `e_0, …, e_{d−1}`.
///
/// * `mult` is `d × d²`; column `i·d + j` holds the coordinates of `e_i·e_j`.
/// * `comult` is `d² × d`; column `k` holds `Δ(e_k)` with `e_i⊗e_j` at row `i·d + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    field: Field,
    labels: Vec<String>,
    mult: Matrix,
    comult: Matrix,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    products: Vec<Vec<(usize, Scalar)>>,
    coproducts: Vec<SparseCoproduct>,
}

impl Bialgebra {
    /// Shape-checked constructor. Use [`Bialgebra::verified`] to also check axioms.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: Matrix,
        comult: Matrix,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::shape("a bialgebra has dimension at least 1"));
        }
        if (mult.rows(), mult.cols()) != (d, d * d) {
            return Err(Error::shape(format!(
                "multiplication must be {d}×{}, got {}×{}",
                d * d,
                mult.rows(),
                mult.cols()
            )));
        }
        if (comult.rows(), comult.cols()) != (d * d, d) {
            return Err(Error::shape(format!(
                "comultiplication must be {}×{d}, got {}×{}",
                d * d,
                comult.rows(),
                comult.cols()
            )));
        }
        for v in [&unit, &counit] {
            if v.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        let fields = [mult.field(), comult.field()]
            .into_iter()
            .chain(unit.iter().chain(&counit).map(Scalar::field));
        for other in fields {
            if other != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: other,
                });
            }
        }
        let products = (0..d * d)
            .map(|col| {
                (0..d)
                    .filter_map(|k| {
                        let c = mult.get(k, col);
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let coproducts = sparse_columns(&comult, d);
        Ok(Bialgebra {
            field,
            labels,
            mult,
            comult,
            unit,
            counit,
            products,
            coproducts,
        })
    }

    /// Constructor that also requires every bialgebra axiom to hold.
    pub fn verified(
        field: Field,
        labels: Vec<String>,
        mult: Matrix,
        comult: Matrix,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let b = Self::new(field, labels, mult, comult, unit, counit)?;
        b.verify_axioms().into_result()?;
        Ok(b)
    }

    /// Builds the structure tensors from closures giving `e_i·e_j` (length `d`)
    /// and `Δ(e_k)` (length `d²`).
    pub fn from_fns(
        field: Field,
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
        coproduct: impl Fn(usize) -> Vec<Scalar>,
        unit: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let d = labels.len();
        let mut mult_cols = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult_cols.push(product(i, j));
            }
        }
        let comult_cols: Vec<Vec<Scalar>> = (0..d).map(coproduct).collect();
        let mult = Matrix::from_columns(field, d, &mult_cols)?;
        let comult = Matrix::from_columns(field, d * d, &comult_cols)?;
        Self::verified(field, labels, mult, comult, unit, counit)
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

    pub fn mult_matrix(&self) -> &Matrix {
        &self.mult
    }

    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Sparse coordinates of `e_i·e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    /// Sparse `Δ(e_k)`.
    pub fn basis_coproduct(&self, k: usize) -> &[(usize, usize, Scalar)] {
        &self.coproducts[k]
    }

    pub(crate) fn sparse_coproducts(&self) -> &[SparseCoproduct] {
        &self.coproducts
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        vector::unit(self.field, self.dim(), i)
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        vector::format_combination(v, &self.labels)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vector::zeros(self.field, d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, s) in &self.products[i * d + j] {
                    out[*k] += &(&c * s);
                }
            }
        }
        out
    }

    /// Matrix of `b ↦ a·b`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim())
            .map(|j| self.multiply(a, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("square")
    }

    /// Matrix of `b ↦ b·a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim())
            .map(|j| self.multiply(&self.basis_vector(j), a))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("square")
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vector::zeros(self.field, d * d);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, j, c) in &self.coproducts[k] {
                out[i * d + j] += &(x * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        vector::dot(v, &self.counit)
    }

    /// Componentwise product in `B⊗B`: `(a⊗b)(c⊗e) = ac⊗be`.
    pub fn tensor_multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vector::zeros(self.field, d * d);
        for (p, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            let (a, b) = (p / d, p % d);
            for (q, yv) in y.iter().enumerate() {
                if yv.is_zero() {
                    continue;
                }
                let (c, e) = (q / d, q % d);
                let coeff = xv * yv;
                for (k, s) in &self.products[a * d + c] {
                    for (l, t) in &self.products[b * d + e] {
                        out[k * d + l] += &(&coeff * &(s * t));
                    }
                }
            }
        }
        out
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let f = self.field;
        let mut checks = Vec::with_capacity(5);

        let assoc = (|| {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let mut residual = vector::zeros(f, d);
                        for (m, s) in self.basis_product(i, j) {
                            for (n, t) in self.basis_product(*m, k) {
                                residual[*n] += &(s * t);
                            }
                        }
                        for (m, s) in self.basis_product(j, k) {
                            for (n, t) in self.basis_product(i, *m) {
                                residual[*n] -= &(s * t);
                            }
                        }
                        if !vector::is_zero(&residual) {
                            return Some(AxiomWitness {
                                indices: vec![i, j, k],
                                residual,
                            });
                        }
                    }
                }
            }
            None
        })();
        checks.push(AxiomCheck {
            axiom: Axiom::Associativity,
            witness: assoc,
        });

        let unital = (0..d).find_map(|i| {
            let e = self.basis_vector(i);
            [self.multiply(&self.unit, &e), self.multiply(&e, &self.unit)]
                .into_iter()
                .map(|side| vector::sub(&side, &e))
                .find(|r| !vector::is_zero(r))
                .map(|residual| AxiomWitness {
                    indices: vec![i],
                    residual,
                })
        });
        checks.push(AxiomCheck {
            axiom: Axiom::Unitality,
            witness: unital,
        });

        checks.push(AxiomCheck {
            axiom: Axiom::Coassociativity,
            witness: coassociativity_witness(f, d, &self.coproducts),
        });
        checks.push(AxiomCheck {
            axiom: Axiom::Counitality,
            witness: counitality_witness(f, d, &self.coproducts, &self.counit),
        });
        checks.push(AxiomCheck {
            axiom: Axiom::Compatibility,
            witness: self.compatibility_witness(),
        });
        AxiomReport { checks }
    }

    fn compatibility_witness(&self) -> Option<AxiomWitness> {
        let d = self.dim();
        let f = self.field;
        for i in 0..d {
            for j in 0..d {
                let prod = self.multiply(&self.basis_vector(i), &self.basis_vector(j));
                let lhs = self.coproduct(&prod);
                let rhs = self.tensor_multiply(
                    &self.coproduct(&self.basis_vector(i)),
                    &self.coproduct(&self.basis_vector(j)),
                );
                let residual = vector::sub(&lhs, &rhs);
                if !vector::is_zero(&residual) {
                    return Some(AxiomWitness {
                        indices: vec![i, j],
                        residual,
                    });
                }
                let eps = &self.counit_of(&prod) - &(&self.counit[i] * &self.counit[j]);
                if !eps.is_zero() {
                    return Some(AxiomWitness {
                        indices: vec![i, j],
                        residual: vec![eps],
                    });
                }
            }
        }
        let unit_residual = vector::sub(&self.coproduct(&self.unit), &vector::kron(&self.unit, &self.unit));
        if !vector::is_zero(&unit_residual) {
            return Some(AxiomWitness {
                indices: vec![],
                residual: unit_residual,
            });
        }
        let eps_unit = &self.counit_of(&self.unit) - &f.one();
        if !eps_unit.is_zero() {
            return Some(AxiomWitness {
                indices: vec![],
                residual: vec![eps_unit],
            });
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mult.column(i * d + j) == self.mult.column(j * d + i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.comult.row(i * d + j) == self.comult.row(j * d + i)))
    }

    /// Same coalgebra, multiplication `a ·op b = b·a`.
    pub fn op(&self) -> Bialgebra {
        let d = self.dim();
        let mult = Matrix::from_fn(self.field, d, d * d, |k, col| {
            self.mult.get(k, (col % d) * d + col / d).clone()
        });
        Bialgebra::new(
            self.field,
            self.labels.clone(),
            mult,
            self.comult.clone(),
            self.unit.clone(),
            self.counit.clone(),
        )
        .expect("shapes preserved")
    }

    /// Same algebra, comultiplication with the tensor legs swapped.
    pub fn cop(&self) -> Bialgebra {
        let d = self.dim();
        let comult = Matrix::from_fn(self.field, d * d, d, |row, k| {
            self.comult.get((row % d) * d + row / d, k).clone()
        });
        Bialgebra::new(
            self.field,
            self.labels.clone(),
            self.mult.clone(),
            comult,
            self.unit.clone(),
            self.counit.clone(),
        )
        .expect("shapes preserved")
    }

    /// Linear dual on the dual basis: multiplication and comultiplication
    /// transpose into each other, unit and counit swap.
    pub fn dual(&self) -> Bialgebra {
        Bialgebra::new(
            self.field,
            self.labels.iter().map(|l| format!("{l}*")).collect(),
            self.comult.transpose(),
            self.mult.transpose(),
            self.counit.clone(),
            self.unit.clone(),
        )
        .expect("shapes preserved")
    }

    /// Tensor product bialgebra with basis `e_a⊗f_b` at index `a·dim(other) + b`.
    pub fn tensor(&self, other: &Bialgebra) -> Result<Bialgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        let (d1, d2) = (self.dim(), other.dim());
        let n = d1 * d2;
        let f = self.field;
        let mut mult = Matrix::zeros(f, n, n * n);
        for a in 0..d1 {
            for b in 0..d2 {
                for c in 0..d1 {
                    for e in 0..d2 {
                        let col = (a * d2 + b) * n + c * d2 + e;
                        for (k, s) in self.basis_product(a, c) {
                            for (l, t) in other.basis_product(b, e) {
                                mult.add_to(k * d2 + l, col, &(s * t));
                            }
                        }
                    }
                }
            }
        }
        let mut comult = Matrix::zeros(f, n * n, n);
        for a in 0..d1 {
            for b in 0..d2 {
                for (i, j, s) in self.basis_coproduct(a) {
                    for (k, l, t) in other.basis_coproduct(b) {
                        let left = i * d2 + k;
                        let right = j * d2 + l;
                        comult.add_to(left * n + right, a * d2 + b, &(s * t));
                    }
                }
            }
        }
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Bialgebra::new(
            f,
            labels,
            mult,
            comult,
            vector::kron(&self.unit, &other.unit),
            vector::kron(&self.counit, &other.counit),
        )
    }

    /// The coalgebra underlying the bialgebra.
    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra::new(
            self.field,
            self.labels.clone(),
            self.comult.clone(),
            self.counit.clone(),
        )
        .expect("shapes preserved")
    }

    /// `B⁺ = ker ε`, checked to be a two-sided ideal.
    pub fn augmentation_ideal(&self) -> Result<Subspace> {
        if vector::is_zero(&self.counit) {
            return Err(Error::InvalidBialgebra {
                axiom: "counitality".into(),
                witness: "counit is identically zero".into(),
            });
        }
        let row = Matrix::new(self.field, 1, self.dim(), self.counit.clone())?;
        let ideal = row.kernel();
        if !self.is_ideal(&ideal, Side::TwoSided) {
            return Err(Error::invariant("kernel of the counit is not an ideal"));
        }
        Ok(ideal)
    }

    fn check_inside(&self, v: &Subspace) -> Result<()> {
        if v.ambient_dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                found: v.ambient_dim(),
            });
        }
        Ok(())
    }

    /// First product `e_i·w` (left) or `w·e_i` (right) escaping `v`.
    fn ideal_escape(&self, v: &Subspace, side: Side) -> Option<Vec<Scalar>> {
        for w in v.basis_vectors() {
            for i in 0..self.dim() {
                let e = self.basis_vector(i);
                if matches!(side, Side::Left | Side::TwoSided) {
                    let p = self.multiply(&e, w);
                    if !v.contains(&p) {
                        return Some(p);
                    }
                }
                if matches!(side, Side::Right | Side::TwoSided) {
                    let p = self.multiply(w, &e);
                    if !v.contains(&p) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, v: &Subspace, side: Side) -> bool {
        v.ambient_dim() == self.dim() && self.ideal_escape(v, side).is_none()
    }

    /// Smallest left, right or two-sided ideal containing `v`.
    pub fn ideal_closure(&self, v: &Subspace, side: Side) -> Result<Subspace> {
        self.check_inside(v)?;
        let mut current = v.clone();
        loop {
            let mut gens: Vec<Vec<Scalar>> = current.basis_vectors().map(<[Scalar]>::to_vec).collect();
            for w in current.basis_vectors() {
                for i in 0..self.dim() {
                    let e = self.basis_vector(i);
                    if matches!(side, Side::Left | Side::TwoSided) {
                        gens.push(self.multiply(&e, w));
                    }
                    if matches!(side, Side::Right | Side::TwoSided) {
                        gens.push(self.multiply(w, &e));
                    }
                }
            }
            let next = Subspace::span(self.field, self.dim(), gens)?;
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
    }

    fn coideal_escape(&self, v: &Subspace) -> Option<Vec<Scalar>> {
        let quotient = Quotient::new(v.clone());
        let proj = quotient.projection_matrix();
        let d = self.dim();
        for w in v.basis_vectors() {
            if !self.counit_of(w).is_zero() {
                return Some(w.to_vec());
            }
            let delta = self.coproduct(w);
            let as_matrix = Matrix::new(self.field, d, d, delta).expect("d×d");
            let projected = proj
                .mul(&as_matrix)
                .and_then(|m| m.mul(&proj.transpose()))
                .expect("compatible shapes");
            if !projected.is_zero() {
                return Some(w.to_vec());
            }
        }
        None
    }

    /// `ε(v) = 0` and `Δ(v) ⊆ v⊗B + B⊗v`.
    pub fn is_coideal(&self, v: &Subspace) -> bool {
        v.ambient_dim() == self.dim() && self.coideal_escape(v).is_none()
    }

    /// Quotient by a bi-ideal, on the complement-representative basis.
    pub fn quotient_by_biideal(&self, ideal: &Subspace) -> Result<(Bialgebra, BialgebraMorphism)> {
        self.check_inside(ideal)?;
        if let Some(p) = self.ideal_escape(ideal, Side::TwoSided) {
            return Err(Error::precondition(
                "two-sided ideal",
                format!("product {} leaves the subspace", self.format_element(&p)),
            ));
        }
        if let Some(w) = self.coideal_escape(ideal) {
            return Err(Error::precondition(
                "coideal",
                format!("{} violates the coideal condition", self.format_element(&w)),
            ));
        }
        let quotient = Quotient::new(ideal.clone());
        let reps = quotient.representatives().to_vec();
        let proj = quotient.projection_matrix();
        let q = reps.len();
        let proj_cols = proj.columns();
        let product = |r: usize, s: usize| {
            let p = self.multiply(&self.basis_vector(reps[r]), &self.basis_vector(reps[s]));
            proj.mul_vec(&p).expect("projection shape")
        };
        let coproduct = |r: usize| {
            let mut out = vector::zeros(self.field, q * q);
            for (i, j, c) in self.basis_coproduct(reps[r]) {
                vector::axpy(&mut out, c, &vector::kron(&proj_cols[*i], &proj_cols[*j]));
            }
            out
        };
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let unit = proj.mul_vec(&self.unit)?;
        let counit = reps.iter().map(|&r| self.counit[r].clone()).collect();
        let quotient_bialgebra = Bialgebra::from_fns(self.field, labels, product, coproduct, unit, counit)
            .map_err(|e| Error::invariant(format!("quotient by a bi-ideal: {e}")))?;
        let morphism = morphism_check(&proj, self, &quotient_bialgebra)?;
        if !morphism.is_bialgebra_map() {
            return Err(Error::invariant("projection onto a quotient is not a bialgebra map"));
        }
        Ok((quotient_bialgebra, morphism))
    }

    /// Restriction to a sub-bialgebra, on the canonical basis of `w`.
    pub fn sub_bialgebra(&self, w: &Subspace) -> Result<(Bialgebra, BialgebraMorphism)> {
        self.check_inside(w)?;
        let d = self.dim();
        if !w.contains(&self.unit) {
            return Err(Error::precondition("contains unit", "1 is not in the subspace"));
        }
        let basis: Vec<Vec<Scalar>> = w.basis_vectors().map(<[Scalar]>::to_vec).collect();
        let m = basis.len();
        let mut products = Vec::with_capacity(m * m);
        for a in &basis {
            for b in &basis {
                let p = self.multiply(a, b);
                let coords = w.coordinates(&p).ok_or_else(|| {
                    Error::precondition(
                        "closed under multiplication",
                        format!(
                            "({})·({}) = {} leaves the subspace",
                            self.format_element(a),
                            self.format_element(b),
                            self.format_element(&p)
                        ),
                    )
                })?;
                products.push(coords);
            }
        }
        let pivots = w.pivots();
        let mut coproducts = Vec::with_capacity(m);
        for a in &basis {
            let delta = self.coproduct(a);
            let mut coords = vector::zeros(self.field, m * m);
            let mut rebuilt = vector::zeros(self.field, d * d);
            for (s, ps) in pivots.iter().enumerate() {
                for (t, pt) in pivots.iter().enumerate() {
                    let c = delta[ps * d + pt].clone();
                    if !c.is_zero() {
                        vector::axpy(&mut rebuilt, &c, &vector::kron(&basis[s], &basis[t]));
                        coords[s * m + t] = c;
                    }
                }
            }
            if rebuilt != delta {
                return Err(Error::precondition(
                    "subcoalgebra",
                    format!("Δ({}) leaves w⊗w", self.format_element(a)),
                ));
            }
            coproducts.push(coords);
        }
        let labels = basis.iter().map(|v| self.format_element(v)).collect();
        let unit = w.coordinates(&self.unit).expect("unit checked above");
        let counit = basis.iter().map(|v| self.counit_of(v)).collect();
        let sub = Bialgebra::from_fns(
            self.field,
            labels,
            |i, j| products[i * m + j].clone(),
            |k| coproducts[k].clone(),
            unit,
            counit,
        )
        .map_err(|e| Error::invariant(format!("sub-bialgebra: {e}")))?;
        let morphism = morphism_check(&w.inclusion(), &sub, self)?;
        if !morphism.is_bialgebra_map() {
            return Err(Error::invariant("inclusion of a sub-bialgebra is not a bialgebra map"));
        }
        Ok((sub, morphism))
    }

    /// Solutions of `Δ(z) = z⊗1 + 1⊗z`.
    pub fn primitives(&self) -> Subspace {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|k| {
                let e = self.basis_vector(k);
                let mut col = self.comult.column(k);
                col = vector::sub(&col, &vector::kron(&e, &self.unit));
                vector::sub(&col, &vector::kron(&self.unit, &e))
            })
            .collect();
        Matrix::from_columns(self.field, d * d, &cols)
            .expect("column lengths")
            .kernel()
    }

    /// `Δ(v) = v⊗v` and `ε(v) = 1`.
    pub fn is_grouplike(&self, v: &[Scalar]) -> bool {
        v.len() == self.dim() && self.counit_of(v).is_one() && self.coproduct(v) == vector::kron(v, v)
    }
}

/// A linear map between bialgebras together with the outcome of the
/// algebra-map and coalgebra-map checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraMorphism {
    pub source: Bialgebra,
    pub target: Bialgebra,
    /// `target.dim() × source.dim()`.
    pub matrix: Matrix,
    pub algebra_map: bool,
    pub coalgebra_map: bool,
}

impl BialgebraMorphism {
    pub fn is_bialgebra_map(&self) -> bool {
        self.algebra_map && self.coalgebra_map
    }
}

/// Checks exactly whether `f` respects the algebra and coalgebra structures.
pub fn morphism_check(f: &Matrix, source: &Bialgebra, target: &Bialgebra) -> Result<BialgebraMorphism> {
    if (f.rows(), f.cols()) != (target.dim(), source.dim()) {
        return Err(Error::shape(format!(
            "map must be {}×{}, got {}×{}",
            target.dim(),
            source.dim(),
            f.rows(),
            f.cols()
        )));
    }
    if f.field() != source.field() || f.field() != target.field() {
        return Err(Error::FieldMismatch {
            left: source.field(),
            right: f.field(),
        });
    }
    let images = f.columns();
    let unit_ok = f.mul_vec(source.unit())? == target.unit();
    let algebra_map = unit_ok
        && (0..source.dim()).all(|i| {
            (0..source.dim()).all(|j| {
                let p = source.multiply(&source.basis_vector(i), &source.basis_vector(j));
                f.mul_vec(&p).expect("shape") == target.multiply(&images[i], &images[j])
            })
        });
    let coalgebra_map = coalgebra_map_holds(
        (source.dim(), source.sparse_coproducts(), source.counit()),
        (target.dim(), target.sparse_coproducts(), target.counit()),
        f,
    )?;
    Ok(BialgebraMorphism {
        source: source.clone(),
        target: target.clone(),
        matrix: f.clone(),
        algebra_map,
        coalgebra_map,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Group algebra of `Z/n` from its table, written independently of the
    /// monoid module.
    pub(crate) fn cyclic(field: Field, n: usize) -> Bialgebra {
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Bialgebra::from_fns(
            field,
            labels,
            |i, j| vector::unit(field, n, (i + j) % n),
            |k| vector::unit(field, n * n, k * n + k),
            vector::unit(field, n, 0),
            vec![field.one(); n],
        )
        .unwrap()
    }

    /// `k⟨x,y | yx = −xy, x³ = x, y² = 0⟩` with basis `x^a y^b` at `3b + a`,
    /// built from the normal-form multiplication rule.
    pub(crate) fn quantum_plane(field: Field) -> Bialgebra {
        let idx = |a: usize, b: usize| 3 * b + a;
        let reduce = |e: usize| if e >= 3 { e - 2 } else { e };
        let product = |i: usize, j: usize| {
            let (a, b) = (i % 3, i / 3);
            let (c, e) = (j % 3, j / 3);
            let mut v = vector::zeros(field, 6);
            if b + e < 2 {
                let sign = if b * c % 2 == 1 { -1 } else { 1 };
                v[idx(reduce(a + c), b + e)] = field.from_i64(sign);
            }
            v
        };
        // Δ(x^a) = x^a⊗x^a, Δ(x^a y) = x^{a+1}⊗x^a y + x^a y⊗x^a.
        let coproduct = |k: usize| {
            let (a, b) = (k % 3, k / 3);
            let mut v = vector::zeros(field, 36);
            if b == 0 {
                v[idx(a, 0) * 6 + idx(a, 0)] = field.one();
            } else {
                v[idx(reduce(a + 1), 0) * 6 + idx(a, 1)] += &field.one();
                v[idx(a, 1) * 6 + idx(a, 0)] += &field.one();
            }
            v
        };
        let labels = ["1", "x", "x^2", "y", "xy", "x^2y"].map(String::from).to_vec();
        let counit = (0..6).map(|k| if k < 3 { field.one() } else { field.zero() }).collect();
        Bialgebra::from_fns(field, labels, product, coproduct, vector::unit(field, 6, 0), counit).unwrap()
    }

    fn q() -> Field {
        Field::Rational
    }

    fn span(b: &Bialgebra, vs: &[&[i64]]) -> Subspace {
        let f = b.field();
        Subspace::span(
            f,
            b.dim(),
            vs.iter().map(|v| v.iter().map(|&x| f.from_i64(x)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_verifies() {
        assert!(cyclic(q(), 2).verify_axioms().all_hold());
    }

    #[test]
    fn quantum_plane_verifies() {
        let b = quantum_plane(q());
        assert_eq!(b.dim(), 6);
        assert!(b.verify_axioms().all_hold());
        assert!(!b.is_cocommutative());
        assert!(!b.is_commutative());
    }

    #[test]
    fn corrupted_coproduct_breaks_compatibility() {
        let b = quantum_plane(q());
        let f = q();
        let mut comult = b.comult_matrix().clone();
        for r in 0..36 {
            comult.set(r, 3, f.zero());
        }
        comult.set(3 * 6 + 3, 3, f.one());
        let bad = Bialgebra::new(
            f,
            b.labels().to_vec(),
            b.mult_matrix().clone(),
            comult,
            b.unit().to_vec(),
            b.counit().to_vec(),
        )
        .unwrap();
        let report = bad.verify_axioms();
        assert!(!report.holds(Axiom::Compatibility));
        let (_, witness) = report.failures().find(|(a, _)| *a == Axiom::Compatibility).unwrap();
        assert!(!vector::is_zero(&witness.residual));
        assert!(Bialgebra::verified(
            f,
            bad.labels().to_vec(),
            bad.mult_matrix().clone(),
            bad.comult_matrix().clone(),
            bad.unit().to_vec(),
            bad.counit().to_vec()
        )
        .is_err());
    }

    #[test]
    fn shape_errors_precede_checks() {
        let f = q();
        let r = Bialgebra::new(
            f,
            vec!["1".into()],
            Matrix::zeros(f, 1, 2),
            Matrix::zeros(f, 1, 1),
            vec![f.one()],
            vec![f.one()],
        );
        assert!(matches!(r, Err(Error::Shape(_))));
    }

    #[test]
    fn derived_bialgebras() {
        let b = quantum_plane(q());
        assert_eq!(b.op().op(), b);
        assert_eq!(b.cop().cop(), b);
        let dd = b.dual().dual();
        assert_eq!(dd.mult_matrix(), b.mult_matrix());
        assert_eq!(dd.comult_matrix(), b.comult_matrix());
        assert_eq!((dd.unit(), dd.counit()), (b.unit(), b.counit()));
        for derived in [b.op(), b.cop(), b.dual(), b.tensor(&cyclic(q(), 2)).unwrap()] {
            assert!(derived.verify_axioms().all_hold());
        }
    }

    #[test]
    fn augmentation_ideals() {
        let k = cyclic(q(), 1);
        assert!(k.augmentation_ideal().unwrap().is_zero());
        let b = quantum_plane(q());
        let plus = b.augmentation_ideal().unwrap();
        assert_eq!(plus.dim(), 5);
        let f = q();
        let x_minus_one = vec![f.from_i64(-1), f.one(), f.zero(), f.zero(), f.zero(), f.zero()];
        assert!(plus.contains(&x_minus_one));
        assert!(plus.contains(&b.basis_vector(3)));
        let c2 = cyclic(q(), 2);
        assert_eq!(c2.augmentation_ideal().unwrap(), span(&c2, &[&[-1, 1]]));
        assert!(c2.is_coideal(&c2.augmentation_ideal().unwrap()));
    }

    #[test]
    fn closures_and_coideals() {
        let b = quantum_plane(q());
        let x2_minus_1 = span(&b, &[&[-1, 0, 1, 0, 0, 0]]);
        let closure = b.ideal_closure(&x2_minus_1, Side::Left).unwrap();
        assert_eq!(closure, span(&b, &[&[-1, 0, 1, 0, 0, 0], &[0, 0, 0, -1, 0, 1]]));
        assert_eq!(b.ideal_closure(&closure, Side::TwoSided).unwrap(), closure);
        assert!(b.is_coideal(&closure));
        assert!(!b.is_coideal(&span(&b, &[&[1, 0, 0, 0, 0, 0]])));
        let zero = Subspace::zero(q(), 6);
        assert!(b.ideal_closure(&zero, Side::TwoSided).unwrap().is_zero());
        let full = Subspace::full(q(), 6);
        assert!(b.ideal_closure(&full, Side::Left).unwrap().is_full());
    }

    #[test]
    fn quotient_to_sweedler_presentation() {
        let b = quantum_plane(q());
        let ideal = span(&b, &[&[-1, 0, 1, 0, 0, 0], &[0, 0, 0, -1, 0, 1]]);
        let (h, proj) = b.quotient_by_biideal(&ideal).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(proj.is_bialgebra_map());
        let f = q();
        let xbar = proj.matrix.column(1);
        let ybar = proj.matrix.column(3);
        assert_eq!(h.multiply(&xbar, &xbar), h.unit());
        assert!(vector::is_zero(&h.multiply(&ybar, &ybar)));
        assert_eq!(
            h.multiply(&ybar, &xbar),
            vector::scale(&f.from_i64(-1), &h.multiply(&xbar, &ybar))
        );
    }

    #[test]
    fn quotient_rejects_non_ideal_and_non_coideal() {
        let b = quantum_plane(q());
        let not_ideal = span(&b, &[&[-1, 0, 1, 0, 0, 0]]);
        assert!(matches!(
            b.quotient_by_biideal(&not_ideal),
            Err(Error::Precondition {
                check: "two-sided ideal",
                ..
            })
        ));
        let c2 = cyclic(q(), 2);
        let ideal_not_coideal = span(&c2, &[&[1, 1]]);
        assert!(matches!(
            c2.quotient_by_biideal(&ideal_not_coideal),
            Err(Error::Precondition { check: "coideal", .. })
        ));
    }

    #[test]
    fn trivial_quotients() {
        let b = quantum_plane(q());
        let (same, proj) = b.quotient_by_biideal(&Subspace::zero(q(), 6)).unwrap();
        assert_eq!(same, b);
        assert!(proj.matrix.is_identity());
        let (k, _) = b.quotient_by_biideal(&b.augmentation_ideal().unwrap()).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn sub_bialgebras() {
        let b = quantum_plane(q());
        let (full, inc) = b.sub_bialgebra(&Subspace::full(q(), 6)).unwrap();
        assert_eq!(full.mult_matrix(), b.mult_matrix());
        assert!(inc.matrix.is_identity());
        let (k, _) = b.sub_bialgebra(&span(&b, &[&[1, 0, 0, 0, 0, 0]])).unwrap();
        assert_eq!(k.dim(), 1);
        let grouplikes = span(&b, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0]]);
        assert_eq!(b.sub_bialgebra(&grouplikes).unwrap().0.dim(), 3);
        assert!(matches!(
            b.sub_bialgebra(&span(&b, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0]])),
            Err(Error::Precondition {
                check: "subcoalgebra",
                ..
            })
        ));
        assert!(matches!(
            b.sub_bialgebra(&span(&b, &[&[0, 1, 0, 0, 0, 0]])),
            Err(Error::Precondition {
                check: "contains unit",
                ..
            })
        ));
    }

    #[test]
    fn primitives_and_grouplikes() {
        assert_eq!(quantum_plane(q()).primitives().dim(), 0);
        let c2 = cyclic(q(), 2);
        assert_eq!(c2.primitives().dim(), 0);
        assert!((0..2).all(|i| c2.is_grouplike(&c2.basis_vector(i))));
        assert!(c2.is_grouplike(c2.unit()));
        let f = q();
        assert!(!c2.is_grouplike(&[f.one(), f.one()]));
    }

    #[test]
    fn morphism_flags() {
        let b = quantum_plane(q());
        let id = morphism_check(&Matrix::identity(q(), 6), &b, &b).unwrap();
        assert!(id.is_bialgebra_map());
        let k = cyclic(q(), 1);
        let counit = Matrix::new(q(), 1, 6, b.counit().to_vec()).unwrap();
        let eps = morphism_check(&counit, &b, &k).unwrap();
        assert!(eps.is_bialgebra_map());
        let unit = Matrix::new(q(), 6, 1, b.unit().to_vec()).unwrap();
        let collapse = morphism_check(&unit.mul(&counit).unwrap(), &b, &b).unwrap();
        assert!(collapse.algebra_map && collapse.coalgebra_map);
        let doubled = morphism_check(&Matrix::identity(q(), 6).scale(&q().from_i64(2)), &b, &b).unwrap();
        assert!(!doubled.algebra_map && !doubled.coalgebra_map);
        assert!(morphism_check(&Matrix::identity(q(), 5), &b, &b).is_err());
    }

    proptest! {
        #[test]
        fn op_and_dual_are_involutions(n in 1usize..5, p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
            let b = cyclic(Field::Prime(p), n);
            prop_assert_eq!(b.op().op(), b.clone());
            let dd = b.dual().dual();
            prop_assert_eq!(dd.mult_matrix(), b.mult_matrix());
            prop_assert!(b.dual().verify_axioms().all_hold());
        }
    }
}

//! Named bialgebras and coalgebras used as fixtures: the quotient quantum
//! plane, Sweedler's four-dimensional Hopf algebra, matrix and grouplike
//! coalgebras, unit adjunction to a coalgebra and the dual Radford family.

use crate::bialgebra::Bialgebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};

fn require_odd_characteristic(field: Field, name: &str) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported(format!("{name} needs characteristic ≠ 2")));
    }
    Ok(())
}

/// `k⟨x,y | yx = −xy, x³ = x, y² = 0⟩` with `Δx = x⊗x`, `Δy = x⊗y + y⊗1`.
///
/// Basis order `1, x, x², y, xy, x²y`, so `x^a y^b` sits at index `3b + a`.
pub fn quotient_quantum_plane(field: Field) -> Result<Bialgebra> {
    require_odd_characteristic(field, "the quotient quantum plane")?;
    let idx = |a: usize, b: usize| 3 * b + a;
    let reduce = |e: usize| if e >= 3 { e - 2 } else { e };
    let product = |i: usize, j: usize| {
        let (a, b) = (i % 3, i / 3);
        let (c, e) = (j % 3, j / 3);
        let mut v = vector::zeros(field, 6);
        if b + e < 2 {
            // moving y past x^c contributes (−1)^c
            let sign = if b == 1 && c % 2 == 1 { -1 } else { 1 };
            v[idx(reduce(a + c), b + e)] = field.from_i64(sign);
        }
        v
    };
    let coproduct = |k: usize| {
        let (a, b) = (k % 3, k / 3);
        let mut v = vector::zeros(field, 36);
        if b == 0 {
            v[idx(a, 0) * 6 + idx(a, 0)] = field.one();
        } else {
            // Δ(x^a y) = x^{a+1}⊗x^a y + x^a y⊗x^a
            v[idx(reduce(a + 1), 0) * 6 + idx(a, 1)] += &field.one();
            v[idx(a, 1) * 6 + idx(a, 0)] += &field.one();
        }
        v
    };
    let labels = ["1", "x", "x^2", "y", "xy", "x^2y"].map(String::from).to_vec();
    let counit = (0..6).map(|k| if k < 3 { field.one() } else { field.zero() }).collect();
    Bialgebra::from_fns(field, labels, product, coproduct, vector::unit(field, 6, 0), counit)
}

/// Sweedler's Hopf algebra `k⟨g,x | g² = 1, x² = 0, xg = −gx⟩` with
/// `Δg = g⊗g`, `Δx = g⊗x + x⊗1`, on the basis `1, g, x, gx`.
pub fn sweedler_h4(field: Field) -> Result<Bialgebra> {
    require_odd_characteristic(field, "Sweedler's Hopf algebra")?;
    let idx = |a: usize, b: usize| 2 * b + a;
    let product = |i: usize, j: usize| {
        let (a, b) = (i % 2, i / 2);
        let (c, e) = (j % 2, j / 2);
        let mut v = vector::zeros(field, 4);
        if b + e < 2 {
            let sign = if b == 1 && c == 1 { -1 } else { 1 };
            v[idx((a + c) % 2, b + e)] = field.from_i64(sign);
        }
        v
    };
    let coproduct = |k: usize| {
        let (a, b) = (k % 2, k / 2);
        let mut v = vector::zeros(field, 16);
        if b == 0 {
            v[idx(a, 0) * 4 + idx(a, 0)] = field.one();
        } else {
            v[idx((a + 1) % 2, 0) * 4 + idx(a, 1)] += &field.one();
            v[idx(a, 1) * 4 + idx(a, 0)] += &field.one();
        }
        v
    };
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let counit = (0..4).map(|k| if k < 2 { field.one() } else { field.zero() }).collect();
    Bialgebra::from_fns(field, labels, product, coproduct, vector::unit(field, 4, 0), counit)
}

/// The `n×n` matrix coalgebra: `Δ(e_ij) = Σ_k e_ik⊗e_kj`, `ε(e_ij) = δ_ij`.
pub fn matrix_coalgebra(field: Field, n: usize) -> Result<Coalgebra> {
    let d = n * n;
    let mut comult = Matrix::zeros(field, d * d, d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                comult.set((i * n + k) * d + k * n + j, i * n + j, field.one());
            }
        }
    }
    let labels = (0..d).map(|r| format!("e{}{}", r / n + 1, r % n + 1)).collect();
    let counit = (0..d)
        .map(|r| if r / n == r % n { field.one() } else { field.zero() })
        .collect();
    Coalgebra::new(field, labels, comult, counit)
}

/// `k` grouplike elements `g₀, …, g_{k−1}`.
pub fn grouplike_coalgebra(field: Field, k: usize) -> Result<Coalgebra> {
    let comult = Matrix::from_fn(
        field,
        k * k,
        k,
        |r, c| {
            if r == c * k + c {
                field.one()
            } else {
                field.zero()
            }
        },
    );
    let labels = (0..k).map(|i| format!("g{i}")).collect();
    Coalgebra::new(field, labels, comult, vec![field.one(); k])
}

/// `k·1 ⊕ C` with `c·c′ = ε(c)c′`; the unit sits at index 0 and `C` follows
/// in its own order.
pub fn radford_adjoin_unit(coalgebra: &Coalgebra) -> Result<Bialgebra> {
    coalgebra
        .verify()
        .map_err(|e| Error::precondition("valid coalgebra", e.to_string()))?;
    let field = coalgebra.field();
    let c = coalgebra.dim();
    let d = c + 1;
    let product = |i: usize, j: usize| {
        if i == 0 {
            vector::unit(field, d, j)
        } else if j == 0 {
            vector::unit(field, d, i)
        } else {
            vector::scale(&coalgebra.counit()[i - 1], &vector::unit(field, d, j))
        }
    };
    let coproduct = |k: usize| {
        let mut v = vector::zeros(field, d * d);
        if k == 0 {
            v[0] = field.one();
        } else {
            for (i, j, s) in coalgebra.coproduct(k - 1) {
                v[(i + 1) * d + j + 1] += s;
            }
        }
        v
    };
    let mut labels = vec!["1".to_string()];
    labels.extend(coalgebra.labels().iter().cloned());
    let mut counit = vec![field.one()];
    counit.extend(coalgebra.counit().iter().cloned());
    Bialgebra::from_fns(field, labels, product, coproduct, vector::unit(field, d, 0), counit)
}

/// `k⟨x | x^{n+1} = x⟩` with `Δx = 1⊗x + x⊗(1 − xⁿ)` and `ε(x) = 0`, on the
/// basis `1, x, …, xⁿ`.
pub fn radford_dual(field: Field, n: usize) -> Result<Bialgebra> {
    if n == 0 {
        return Err(Error::precondition("n ≥ 1", "order 0 requested"));
    }
    let d = n + 1;
    let reduce = |e: usize| if e <= n { e } else { (e - 1) % n + 1 };
    let product = |i: usize, j: usize| vector::unit(field, d, reduce(i + j));
    let coproduct = |t: usize| {
        let mut v = vector::zeros(field, d * d);
        if t == 0 {
            v[0] = field.one();
        } else {
            // Δ(x^t) = 1⊗x^t + x^t⊗(1 − xⁿ)
            v[t] += &field.one();
            v[t * d] += &field.one();
            v[t * d + n] -= &field.one();
        }
        v
    };
    let labels = (0..d)
        .map(|e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        })
        .collect();
    let counit = (0..d)
        .map(|e| if e == 0 { field.one() } else { field.zero() })
        .collect();
    Bialgebra::from_fns(field, labels, product, coproduct, vector::unit(field, d, 0), counit)
}

/// Grouplike elements among all vectors with coordinates in `coefficients`.
pub fn grouplike_scan(b: &Bialgebra, coefficients: &[i64]) -> Vec<Vec<Scalar>> {
    let d = b.dim();
    let field = b.field();
    let base = coefficients.len();
    let total = base.checked_pow(d as u32).expect("scan size fits in usize");
    let mut found = Vec::new();
    for mut code in 0..total {
        let v: Vec<Scalar> = (0..d)
            .map(|_| {
                let c = coefficients[code % base];
                code /= base;
                field.from_i64(c)
            })
            .collect();
        if b.is_grouplike(&v) && !found.contains(&v) {
            found.push(v);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolution::{id_power, minimal_left_n_antipode, Endo};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn quantum_plane_cube_of_identity() {
        let b = quotient_quantum_plane(q()).unwrap();
        assert_eq!(b.dim(), 6);
        let y = b.basis_vector(3);
        let expected: Vec<Scalar> = [0, 0, 0, 1, 1, 1].iter().map(|&c| q().from_i64(c)).collect();
        assert_eq!(id_power(&b, 3).apply(&y), expected);
    }

    #[test]
    fn characteristic_two_is_rejected() {
        assert!(matches!(
            quotient_quantum_plane(Field::Prime(2)),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(sweedler_h4(Field::Prime(2)), Err(Error::Unsupported(_))));
        assert!(quotient_quantum_plane(Field::Prime(3)).is_ok());
    }

    #[test]
    fn sweedler_is_hopf() {
        let h = sweedler_h4(q()).unwrap();
        assert!(
            crate::convolution::conv_inverse(&h, &Endo::identity(&h), crate::Side::TwoSided)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn adjoined_unit_is_idempotent_under_convolution() {
        let c = matrix_coalgebra(q(), 2).unwrap();
        let b = radford_adjoin_unit(&c).unwrap();
        assert_eq!(b.dim(), 5);
        assert_eq!(id_power(&b, 2), Endo::identity(&b));
        let r = minimal_left_n_antipode(&b).unwrap();
        assert_eq!(r.n, 1);
        assert!(
            crate::convolution::is_n_antipode(&b, &crate::convolution::conv_unit(&b), 1, crate::Side::TwoSided)
                .unwrap()
        );
    }

    #[test]
    fn adjoined_unit_on_a_grouplike_is_idempotent_monoid() {
        let b = radford_adjoin_unit(&grouplike_coalgebra(q(), 1).unwrap()).unwrap();
        let x = b.basis_vector(1);
        assert_eq!(b.multiply(&x, &x), x);
        assert!(b.is_grouplike(&x));
    }

    #[test]
    fn invalid_coalgebra_is_a_precondition_error() {
        let c = grouplike_coalgebra(q(), 2).unwrap();
        let bad = Coalgebra::new(
            q(),
            c.labels().to_vec(),
            c.comult_matrix().clone(),
            vec![q().one(), q().zero()],
        )
        .unwrap();
        assert!(matches!(radford_adjoin_unit(&bad), Err(Error::Precondition { .. })));
    }

    #[test]
    fn radford_dual_family() {
        for n in 1..=4 {
            let b = radford_dual(q(), n).unwrap();
            assert_eq!(id_power(&b, 2), Endo::identity(&b));
        }
        let b = radford_dual(q(), 2).unwrap();
        let f = q();
        let found = grouplike_scan(&b, &[-1, 0, 1]);
        let one = vec![f.one(), f.zero(), f.zero()];
        let other = vec![f.one(), f.zero(), f.from_i64(-1)];
        assert_eq!(found.len(), 2);
        assert!(found.contains(&one) && found.contains(&other));
    }
}

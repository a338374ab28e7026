//! Brute-force counts over GF(2) by enumerating every vector of `B⊗B`,
//! independent of the elimination routines.

use std::collections::HashSet;

use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Scalar};
use crate::monoid::FiniteMonoid;

const MAX_TENSOR_DIM: usize = 16;

fn gf2_vectors(n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let f = Field::Prime(2);
    (0u32..1 << n).map(move |mask| (0..n).map(|i| f.from_i64(((mask >> i) & 1) as i64)).collect())
}

fn check(b: &Bialgebra) -> Result<()> {
    if b.field() != Field::Prime(2) {
        return Err(Error::Unsupported(format!("enumeration oracle over {}", b.field())));
    }
    if b.dim() * b.dim() > MAX_TENSOR_DIM {
        return Err(Error::Unsupported(format!("enumeration over dimension {}", b.dim())));
    }
    Ok(())
}

/// `x₁⊗y₁⊗x₂y₂ − x⊗y⊗1`, evaluated term by term.
fn gamma(b: &Bialgebra, v: &[Scalar]) -> Vec<Scalar> {
    let d = b.dim();
    let mut out = vector::zeros(b.field(), d * d * d);
    for (idx, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (x, y) = (b.basis_vector(idx / d), b.basis_vector(idx % d));
        let dx = b.coproduct(&x);
        let dy = b.coproduct(&y);
        for (r, s) in dx.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (t, u) in dy.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                let prod = b.multiply(&b.basis_vector(r % d), &b.basis_vector(t % d));
                let head = vector::kron(&b.basis_vector(r / d), &b.basis_vector(t / d));
                vector::axpy(&mut out, &(c * &(s * u)), &vector::kron(&head, &prod));
            }
        }
        vector::axpy(&mut out, &(-c), &vector::kron(&vector::kron(&x, &y), b.unit()));
    }
    out
}

/// Number of coinvariant elements of `B⊗B`, i.e. `2^{dim B⊠B}`.
pub fn coinvariant_count(b: &Bialgebra) -> Result<usize> {
    check(b)?;
    let d = b.dim();
    Ok(gf2_vectors(d * d).filter(|v| vector::is_zero(&gamma(b, v))).count())
}

/// Size of the span of `x h₁ ⊗ y h₂` over basis `x, y` and `h = e_k − ε(e_k)1`,
/// grown as a set, i.e. `2^{d² − dim B⊘B}`.
pub fn relation_count(b: &Bialgebra) -> Result<usize> {
    check(b)?;
    let d = b.dim();
    let mut span: HashSet<Vec<Scalar>> = HashSet::from([vector::zeros(b.field(), d * d)]);
    for k in 0..d {
        let mut h = b.basis_vector(k);
        vector::axpy(&mut h, &(-&b.counit()[k]), b.unit());
        let dh = b.coproduct(&h);
        for x in 0..d {
            for y in 0..d {
                let gen = b.tensor_multiply(&vector::kron(&b.basis_vector(x), &b.basis_vector(y)), &dh);
                if span.contains(&gen) {
                    continue;
                }
                let grown: Vec<Vec<Scalar>> = span.iter().map(|v| vector::add(v, &gen)).collect();
                span.extend(grown);
            }
        }
    }
    Ok(span.len())
}

/// Every monoid table on `0..size` with identity `0`; isomorphic copies are kept.
pub fn all_monoids(size: usize) -> Vec<FiniteMonoid> {
    if size == 0 {
        return Vec::new();
    }
    let free = (size - 1) * (size - 1);
    let total = size.pow(free as u32);
    let labels: Vec<String> = (0..size)
        .map(|i| if i == 0 { "1".into() } else { format!("m{i}") })
        .collect();
    (0..total)
        .filter_map(|mut code| {
            let table = (0..size)
                .map(|a| {
                    (0..size)
                        .map(|c| {
                            if a == 0 {
                                c
                            } else if c == 0 {
                                a
                            } else {
                                let v = code % size;
                                code /= size;
                                v
                            }
                        })
                        .collect()
                })
                .collect();
            FiniteMonoid::validated(table, 0, labels.clone()).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_monoid_counts() {
        assert_eq!(all_monoids(1).len(), 1);
        assert_eq!(all_monoids(2).len(), 2);
        // labelled monoids of order 3 with identity 0
        assert_eq!(all_monoids(3).len(), 11);
    }

    #[test]
    fn rejects_other_fields() {
        let b = crate::monoid::monoid_bialgebra(&crate::monoid::cyclic_group(2).unwrap(), Field::Rational).unwrap();
        assert!(coinvariant_count(&b).is_err());
    }
}

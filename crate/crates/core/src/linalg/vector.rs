//! Helpers for coordinate vectors stored as `Vec<Scalar>`.

use super::{Field, Scalar};

pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

/// `y += c·x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    assert_eq!(y.len(), x.len(), "vector length mismatch");
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(c * xi);
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    assert!(!a.is_empty(), "dot product of empty vectors has no field");
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Coordinates of `a ⊗ b` with index `i·len(b) + j`.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Renders a vector as a linear combination of labelled basis elements.
pub fn format_combination(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit_label = label == "1";
        if magnitude.is_one() {
            out.push_str(label);
        } else if unit_label {
            out.push_str(&magnitude.to_string());
        } else {
            out.push_str(&format!("{magnitude}·{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_rendering() {
        let f = Field::Rational;
        let labels: Vec<String> = ["1", "x", "y"].iter().map(|s| s.to_string()).collect();
        let v = vec![f.from_i64(-1), f.zero(), f.from_i64(2)];
        assert_eq!(format_combination(&v, &labels), "-1 + 2·y");
        let w = vec![f.zero(), f.from_i64(1), f.from_i64(-1)];
        assert_eq!(format_combination(&w, &labels), "x - y");
        assert_eq!(format_combination(&zeros(f, 3), &labels), "0");
    }

    #[test]
    fn kron_layout() {
        let f = Field::Prime(5);
        let a = vec![f.from_i64(1), f.from_i64(2)];
        let b = vec![f.from_i64(3), f.from_i64(4), f.from_i64(0)];
        let k = kron(&a, &b);
        assert_eq!(k[4], f.from_i64(8));
        assert_eq!(k.len(), 6);
    }
}

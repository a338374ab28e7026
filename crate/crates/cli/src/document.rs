//! JSON interchange for bialgebras and monoids.
//!
//! Structure constants are sparse rows `[i, j, k, numerator, denominator]`;
//! numbers that do not fit in an `i64` are written as decimal strings.

use std::fmt;
use std::str::FromStr;

use bialg_core::monoid::FiniteMonoid;
use bialg_core::{Bialgebra, Field, Matrix, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn from_bigint(n: &BigInt) -> Self {
        i64::try_from(n)
            .map(Int::Small)
            .unwrap_or_else(|_| Int::Big(n.to_string()))
    }

    fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Int::Small(n) => Ok(BigInt::from(*n)),
            Int::Big(s) => BigInt::from_str(s).map_err(|_| format!("`{s}` is not an integer")),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(n) => write!(f, "{n}"),
            Int::Big(s) => f.write_str(s),
        }
    }
}

pub type TripleEntry = (usize, usize, usize, Int, Int);
pub type PairEntry = (usize, Int, Int);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraDocument {
    pub schema: u32,
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `[i, j, k, num, den]`: `e_i·e_j` has coefficient `num/den` on `e_k`.
    pub mult: Vec<TripleEntry>,
    /// `[k, i, j, num, den]`: `Δ(e_k)` has coefficient `num/den` on `e_i⊗e_j`.
    pub comult: Vec<TripleEntry>,
    pub unit: Vec<PairEntry>,
    pub counit: Vec<PairEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDocument {
    pub schema: u32,
    pub size: usize,
    pub identity: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Bialgebra(BialgebraDocument),
    Monoid(MonoidDocument),
}

pub fn parse_document(text: &str, origin: &str) -> Result<Document, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::parse(origin, e.to_string()))?;
    let schema = match &doc {
        Document::Bialgebra(b) => b.schema,
        Document::Monoid(m) => m.schema,
    };
    if schema != SCHEMA_VERSION {
        return Err(CliError::parse(origin, format!("unsupported schema version {schema}")));
    }
    Ok(doc)
}

fn scalar_entry(c: &Scalar) -> (Int, Int) {
    let (n, d) = c.numer_denom();
    (Int::from_bigint(&n), Int::from_bigint(&d))
}

impl BialgebraDocument {
    /// Canonical document: entries sorted by index, zeros omitted.
    pub fn from_bialgebra(b: &Bialgebra) -> Self {
        let d = b.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in b.basis_product(i, j) {
                    let (n, den) = scalar_entry(c);
                    mult.push((i, j, *k, n, den));
                }
            }
        }
        let mut comult = Vec::new();
        for k in 0..d {
            let mut terms = b.basis_coproduct(k).to_vec();
            terms.sort_by_key(|(i, j, _)| (*i, *j));
            for (i, j, c) in terms {
                let (n, den) = scalar_entry(&c);
                comult.push((k, i, j, n, den));
            }
        }
        let pairs = |v: &[Scalar]| -> Vec<PairEntry> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let (n, den) = scalar_entry(c);
                    (i, n, den)
                })
                .collect()
        };
        BialgebraDocument {
            schema: SCHEMA_VERSION,
            field: b.field().to_string(),
            dim: d,
            labels: b.labels().to_vec(),
            mult,
            comult,
            unit: pairs(b.unit()),
            counit: pairs(b.counit()),
        }
    }

    /// Builds the bialgebra without checking axioms; `field` overrides the
    /// document's field when given.
    pub fn to_bialgebra(&self, field: Option<Field>, origin: &str) -> Result<Bialgebra, CliError> {
        let err = |msg: String| CliError::parse(origin, msg);
        let declared: Field = self.field.parse().map_err(|e| err(format!("field: {e}")))?;
        let field = field.unwrap_or(declared);
        let d = self.dim;
        if d == 0 {
            return Err(err("dim must be at least 1".into()));
        }
        if self.labels.len() != d {
            return Err(err(format!(
                "labels: expected {d} entries, found {}",
                self.labels.len()
            )));
        }
        let scalar = |place: String, num: &Int, den: &Int| -> Result<Scalar, CliError> {
            let n = num.to_bigint().map_err(|m| err(format!("{place}: {m}")))?;
            let q = den.to_bigint().map_err(|m| err(format!("{place}: {m}")))?;
            if q == BigInt::from(0) {
                return Err(err(format!("{place}: zero denominator")));
            }
            if let Field::Prime(p) = declared {
                if q != BigInt::from(1) || n < BigInt::from(0) || n >= BigInt::from(p) {
                    return Err(err(format!(
                        "{place}: GF({p}) entries must be integers in [0, {p}) over 1"
                    )));
                }
            }
            field.from_ratio(&n, &q).map_err(|e| err(format!("{place}: {e}")))
        };
        let in_range = |place: &str, idx: &[usize]| -> Result<(), CliError> {
            match idx.iter().find(|&&i| i >= d) {
                Some(i) => Err(err(format!("{place}: index {i} out of range for dimension {d}"))),
                None => Ok(()),
            }
        };
        let mut mult = Matrix::zeros(field, d, d * d);
        let mut seen = std::collections::BTreeSet::new();
        for (n, (i, j, k, num, den)) in self.mult.iter().enumerate() {
            let place = format!("mult[{n}]");
            in_range(&place, &[*i, *j, *k])?;
            if !seen.insert((*i, *j, *k)) {
                return Err(err(format!("{place}: duplicate entry ({i}, {j}, {k})")));
            }
            mult.set(*k, i * d + j, scalar(place, num, den)?);
        }
        let mut comult = Matrix::zeros(field, d * d, d);
        seen.clear();
        for (n, (k, i, j, num, den)) in self.comult.iter().enumerate() {
            let place = format!("comult[{n}]");
            in_range(&place, &[*k, *i, *j])?;
            if !seen.insert((*k, *i, *j)) {
                return Err(err(format!("{place}: duplicate entry ({k}, {i}, {j})")));
            }
            comult.set(i * d + j, *k, scalar(place, num, den)?);
        }
        let vector = |name: &str, entries: &[PairEntry]| -> Result<Vec<Scalar>, CliError> {
            let mut v = vec![field.zero(); d];
            let mut seen = std::collections::BTreeSet::new();
            for (n, (i, num, den)) in entries.iter().enumerate() {
                let place = format!("{name}[{n}]");
                in_range(&place, &[*i])?;
                if !seen.insert(*i) {
                    return Err(err(format!("{place}: duplicate index {i}")));
                }
                v[*i] = scalar(place, num, den)?;
            }
            Ok(v)
        };
        let unit = vector("unit", &self.unit)?;
        let counit = vector("counit", &self.counit)?;
        Bialgebra::new(field, self.labels.clone(), mult, comult, unit, counit).map_err(|e| err(e.to_string()))
    }
}

impl MonoidDocument {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidDocument {
            schema: SCHEMA_VERSION,
            size: m.size(),
            identity: m.identity(),
            labels: m.labels().to_vec(),
            table: m.table().to_vec(),
        }
    }

    /// Shape-checked monoid; axioms are checked separately so failures can
    /// carry a witness.
    pub fn to_monoid(&self, origin: &str) -> Result<FiniteMonoid, CliError> {
        if self.table.len() != self.size {
            return Err(CliError::parse(
                origin,
                format!("table: expected {} rows, found {}", self.size, self.table.len()),
            ));
        }
        FiniteMonoid::from_table(self.table.clone(), self.identity, self.labels.clone())
            .map_err(|e| CliError::parse(origin, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bialg_core::families::quotient_quantum_plane;
    use bialg_core::monoid::{monogenic, random_transformation_monoid};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bialgebra_documents_round_trip() {
        let b = quotient_quantum_plane(Field::Rational).unwrap();
        let doc = BialgebraDocument::from_bialgebra(&b);
        let text = serde_json::to_string(&Document::Bialgebra(doc.clone())).unwrap();
        let Document::Bialgebra(parsed) = parse_document(&text, "mem").unwrap() else {
            panic!("expected a bialgebra document");
        };
        assert_eq!(parsed, doc);
        assert_eq!(parsed.to_bialgebra(None, "mem").unwrap(), b);
    }

    #[test]
    fn monoid_documents_round_trip() {
        let m = monogenic(2, 3).unwrap();
        let doc = MonoidDocument::from_monoid(&m);
        assert_eq!(doc.to_monoid("mem").unwrap(), m);
    }

    #[test]
    fn big_integers_survive() {
        let big = Int::from_bigint(&BigInt::from_str("123456789012345678901234567890").unwrap());
        assert!(matches!(big, Int::Big(_)));
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<Int>(&text).unwrap(), big);
    }

    #[test]
    fn malformed_entries_name_their_location() {
        let b = quotient_quantum_plane(Field::Rational).unwrap();
        let mut doc = BialgebraDocument::from_bialgebra(&b);
        doc.mult[2].2 = 9;
        let e = doc.to_bialgebra(None, "mem").unwrap_err().to_string();
        assert!(e.contains("mult[2]"), "{e}");
        let mut doc = BialgebraDocument::from_bialgebra(&b);
        doc.unit[0].2 = Int::Small(0);
        assert!(doc
            .to_bialgebra(None, "mem")
            .unwrap_err()
            .to_string()
            .contains("zero denominator"));
    }

    #[test]
    fn prime_field_entries_are_reduced() {
        let b = quotient_quantum_plane(Field::Prime(3)).unwrap();
        let mut doc = BialgebraDocument::from_bialgebra(&b);
        doc.mult[0].3 = Int::Small(4);
        assert!(doc.to_bialgebra(None, "mem").is_err());
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let e = parse_document("{\n  \"kind\": \"monoid\",\n  \"size\": }", "bad.json").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }

    proptest! {
        #[test]
        fn monoid_documents_survive_json(seed in any::<u64>(), gens in 1usize..=2) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if let Some(m) = random_transformation_monoid(&mut rng, 3, gens, 8) {
                let text = serde_json::to_string(&Document::Monoid(MonoidDocument::from_monoid(&m))).unwrap();
                let Document::Monoid(doc) = parse_document(&text, "mem").unwrap() else {
                    panic!("expected a monoid document");
                };
                prop_assert_eq!(doc.to_monoid("mem").unwrap(), m);
            }
        }

        #[test]
        fn scaled_structure_constants_survive_json(num in -1000i64..1000, den in 1i64..1000) {
            let b = quotient_quantum_plane(Field::Rational).unwrap();
            let mut doc = BialgebraDocument::from_bialgebra(&b);
            doc.mult[0].3 = Int::Small(num);
            doc.mult[0].4 = Int::Small(den);
            let parsed = doc.to_bialgebra(None, "mem").unwrap();
            let again = BialgebraDocument::from_bialgebra(&parsed);
            let text = serde_json::to_string(&Document::Bialgebra(again.clone())).unwrap();
            let Document::Bialgebra(reparsed) = parse_document(&text, "mem").unwrap() else {
                panic!("expected a bialgebra document");
            };
            prop_assert_eq!(reparsed.to_bialgebra(None, "mem").unwrap(), parsed);
        }
    }
}

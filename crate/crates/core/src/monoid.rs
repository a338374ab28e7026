//! Finite monoids given by multiplication tables, their bialgebras, units and
//! enveloping groups.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::bialgebra::{Bialgebra, Side};
use crate::canonical::{build_boxslash, build_oslash};
use crate::envelope::hopf_envelope;
use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Scalar, Subspace};

/// A monoid on `0..size` with `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    identity: usize,
    labels: Vec<String>,
}

/// Why a table fails to be a monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidDefect {
    /// `(a·b)·c ≠ a·(b·c)`.
    Associativity(usize, usize, usize),
    /// `e·g ≠ g` or `g·e ≠ g`.
    Identity(usize),
}

impl fmt::Display for MonoidDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidDefect::Associativity(a, b, c) => write!(f, "associativity fails at ({a}, {b}, {c})"),
            MonoidDefect::Identity(g) => write!(f, "identity fails on element {g}"),
        }
    }
}

impl FiniteMonoid {
    /// Shape-checked table; the monoid axioms are checked by [`FiniteMonoid::defect`].
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Monoid("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: labels.len(),
            });
        }
        if identity >= n {
            return Err(Error::Monoid(format!("identity index {identity} out of range")));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Monoid(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(b) = row.iter().position(|&c| c >= n) {
                return Err(Error::Monoid(format!("entry ({a}, {b}) out of range")));
            }
        }
        Ok(FiniteMonoid {
            table,
            identity,
            labels,
        })
    }

    /// [`FiniteMonoid::from_table`] followed by the axiom check.
    pub fn validated(table: Vec<Vec<usize>>, identity: usize, labels: Vec<String>) -> Result<Self> {
        let m = Self::from_table(table, identity, labels)?;
        match m.defect() {
            None => Ok(m),
            Some(defect) => Err(Error::Monoid(defect.to_string())),
        }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// First failing axiom instance, scanning identity then all triples.
    pub fn defect(&self) -> Option<MonoidDefect> {
        let n = self.size();
        let e = self.identity;
        if let Some(g) = (0..n).find(|&g| self.mul(e, g) != g || self.mul(g, e) != g) {
            return Some(MonoidDefect::Identity(g));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some(MonoidDefect::Associativity(a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> bool {
        self.defect().is_none()
    }

    fn inverse_of(&self, g: usize) -> Option<usize> {
        (0..self.size()).find(|&h| self.mul(g, h) == self.identity && self.mul(h, g) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|g| self.inverse_of(g).is_some())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest submonoid containing `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let next = self.mul(a, g);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Greedy generating set in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = self.generated_by(&gens);
        for g in 0..self.size() {
            if !reached.contains(&g) {
                gens.push(g);
                reached = self.generated_by(&gens);
            }
        }
        gens
    }
}

/// `⟨x | x^{index+period} = x^index⟩` on `x⁰, …, x^{index+period−1}`.
pub fn monogenic(index: usize, period: usize) -> Result<FiniteMonoid> {
    if period == 0 {
        return Err(Error::Monoid("period must be at least 1".into()));
    }
    let n = index + period;
    let reduce = |e: usize| if e < n { e } else { index + (e - index) % period };
    let table = (0..n).map(|a| (0..n).map(|b| reduce(a + b)).collect()).collect();
    let labels = (0..n)
        .map(|e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        })
        .collect();
    FiniteMonoid::validated(table, 0, labels)
}

pub fn cyclic_group(order: usize) -> Result<FiniteMonoid> {
    monogenic(0, order)
}

/// `A × B` with `(a, b)` at index `a·|B| + b`.
pub fn direct_product(left: &FiniteMonoid, right: &FiniteMonoid) -> FiniteMonoid {
    let (n, m) = (left.size(), right.size());
    let table = (0..n * m)
        .map(|p| {
            (0..n * m)
                .map(|q| left.mul(p / m, q / m) * m + right.mul(p % m, q % m))
                .collect()
        })
        .collect();
    let labels = (0..n * m)
        .map(|p| format!("({},{})", left.labels[p / m], right.labels[p % m]))
        .collect();
    FiniteMonoid {
        table,
        identity: left.identity * m + right.identity,
        labels,
    }
}

/// The monoid of self-maps of `0..degree` generated by `generators` random
/// maps, composed left to right; `None` when it exceeds `max_size`.
pub fn random_transformation_monoid<R: Rng>(
    rng: &mut R,
    degree: usize,
    generators: usize,
    max_size: usize,
) -> Option<FiniteMonoid> {
    let gens: Vec<Vec<usize>> = (0..generators)
        .map(|_| (0..degree).map(|_| rng.gen_range(0..degree)).collect())
        .collect();
    let identity: Vec<usize> = (0..degree).collect();
    let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&x| g[x]).collect() };
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut cursor = 0;
    while cursor < elements.len() {
        for g in &gens {
            let next = compose(&elements[cursor], g);
            if !index.contains_key(&next) {
                if elements.len() == max_size {
                    return None;
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }
    let table = elements
        .iter()
        .map(|f| elements.iter().map(|g| index[&compose(f, g)]).collect())
        .collect();
    let labels = elements
        .iter()
        .map(|f| f.iter().map(usize::to_string).collect::<Vec<_>>().join(""))
        .collect();
    FiniteMonoid::validated(table, 0, labels).ok()
}

/// Units, left units, regular elements and the least pseudoinverse of each
/// regular element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitReport {
    pub units: Vec<usize>,
    pub left_units: Vec<usize>,
    pub regulars: Vec<usize>,
    /// Smallest `y` with `x·y·x = x`, per element.
    pub pseudoinverses: Vec<Option<usize>>,
}

pub fn units_and_left_units(m: &FiniteMonoid) -> Result<UnitReport> {
    let n = m.size();
    let e = m.identity();
    let units: Vec<usize> = (0..n).filter(|&g| m.inverse_of(g).is_some()).collect();
    let left_units: Vec<usize> = (0..n).filter(|&g| (0..n).any(|h| m.mul(g, h) == e)).collect();
    if units != left_units {
        return Err(Error::invariant("a finite monoid has a one-sided unit"));
    }
    let pseudoinverses: Vec<Option<usize>> = (0..n).map(|x| (0..n).find(|&y| m.mul(m.mul(x, y), x) == x)).collect();
    let regulars = (0..n).filter(|&x| pseudoinverses[x].is_some()).collect();
    Ok(UnitReport {
        units,
        left_units,
        regulars,
        pseudoinverses,
    })
}

/// `kM` with every element grouplike.
pub fn monoid_bialgebra(m: &FiniteMonoid, field: Field) -> Result<Bialgebra> {
    let n = m.size();
    Bialgebra::from_fns(
        field,
        m.labels.clone(),
        |a, b| vector::unit(field, n, m.mul(a, b)),
        |k| vector::unit(field, n * n, k * n + k),
        vector::unit(field, n, m.identity),
        vec![field.one(); n],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CancellativityReport {
    pub right_cancellative: bool,
    pub unique_right_inverses: bool,
    pub is_group: bool,
}

pub fn cancellativity_report(m: &FiniteMonoid) -> CancellativityReport {
    let n = m.size();
    let right_cancellative = (0..n).all(|c| {
        let column: BTreeSet<usize> = (0..n).map(|a| m.mul(a, c)).collect();
        column.len() == n
    });
    let unique_right_inverses = (0..n).all(|g| (0..n).filter(|&h| m.mul(g, h) == m.identity()).count() <= 1);
    CancellativityReport {
        right_cancellative,
        unique_right_inverses,
        is_group: m.is_group(),
    }
}

/// Table-level booleans next to the linear-algebra diagnostics of `kM`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CancellativityCrossCheck {
    pub table: CancellativityReport,
    pub i_injective: bool,
    pub p_injective: bool,
    pub p_surjective: bool,
}

impl CancellativityCrossCheck {
    pub fn agrees(&self) -> bool {
        self.table.right_cancellative == self.i_injective
            && self.table.unique_right_inverses == self.p_injective
            && self.table.is_group == self.p_surjective
    }
}

pub fn cancellativity_cross_check(m: &FiniteMonoid, field: Field) -> Result<CancellativityCrossCheck> {
    let b = monoid_bialgebra(m, field)?;
    let oslash = build_oslash(&b)?;
    let boxslash = build_boxslash(&b)?;
    Ok(CancellativityCrossCheck {
        table: cancellativity_report(m),
        i_injective: oslash.i_injective(),
        p_injective: boxslash.p_injective(),
        p_surjective: boxslash.p_surjective(),
    })
}

/// The enveloping group and the map sending each monoid element to its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingGroup {
    pub group: FiniteMonoid,
    pub map: Vec<usize>,
}

/// Reads the enveloping group off the Hopf envelope of `kM`: the images of
/// the basis are grouplikes, and their distinct values form the group.
pub fn enveloping_group(m: &FiniteMonoid, field: Field) -> Result<EnvelopingGroup> {
    let b = monoid_bialgebra(m, field)?;
    let envelope = hopf_envelope(&b)?;
    let h = &envelope.hopf;
    let images = envelope.structure_map.matrix.columns();
    let mut distinct: Vec<Vec<Scalar>> = Vec::new();
    let mut labels = Vec::new();
    let mut map = Vec::with_capacity(m.size());
    for (g, image) in images.iter().enumerate() {
        if !h.is_grouplike(image) {
            return Err(Error::invariant(format!("image of {} is not grouplike", m.labels[g])));
        }
        let idx = match distinct.iter().position(|v| v == image) {
            Some(idx) => idx,
            None => {
                distinct.push(image.clone());
                labels.push(m.labels[g].clone());
                distinct.len() - 1
            }
        };
        map.push(idx);
    }
    let k = distinct.len();
    let table = (0..k)
        .map(|a| {
            (0..k)
                .map(|c| {
                    let p = h.multiply(&distinct[a], &distinct[c]);
                    distinct
                        .iter()
                        .position(|v| *v == p)
                        .ok_or_else(|| Error::invariant("product of classes is not a class"))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let group = FiniteMonoid::validated(table, map[m.identity()], labels)
        .map_err(|e| Error::invariant(format!("enveloping group table: {e}")))?;
    if !group.is_group() || k != h.dim() {
        return Err(Error::invariant(format!(
            "{k} distinct grouplike classes in an envelope of dimension {}",
            h.dim()
        )));
    }
    Ok(EnvelopingGroup { group, map })
}

/// Generators `x` paired with some `y` satisfying `y⊘1 = 1⊘x`, and the
/// comparison of the ideal they generate with `ker(i_B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizationCheck {
    pub pairs: Vec<(usize, usize)>,
    pub ideal: Subspace,
    pub kernel: Subspace,
}

impl LocalizationCheck {
    pub fn matches(&self) -> bool {
        self.ideal == self.kernel
    }
}

/// `None` when some generator has no partner `y`.
pub fn localization_check(m: &FiniteMonoid, field: Field) -> Result<Option<LocalizationCheck>> {
    let b = monoid_bialgebra(m, field)?;
    let oslash = build_oslash(&b)?;
    let one = b.unit().to_vec();
    let mut pairs = Vec::new();
    for x in m.generators() {
        let target = oslash.class_of(&one, &b.basis_vector(x));
        let Some(y) = (0..m.size()).find(|&y| oslash.class_of(&b.basis_vector(y), &one) == target) else {
            return Ok(None);
        };
        pairs.push((x, y));
    }
    let n = m.size();
    let mut relations = Vec::new();
    for &(x, y) in &pairs {
        for p in [m.mul(y, x), m.mul(x, y)] {
            let mut v = vector::unit(field, n, p);
            v[m.identity()] -= &field.one();
            relations.push(v);
        }
    }
    let span = Subspace::span(field, n, relations)?;
    let ideal = b.ideal_closure(&span, Side::TwoSided)?;
    Ok(Some(LocalizationCheck {
        pairs,
        ideal,
        kernel: oslash.ker_i().clone(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cofree::{cocommutative_cofree, cofree_hopf, iterate_k};
    use crate::convolution::central_n_antipode;
    use crate::envelope::{cocommutative_envelope_check, iterate_q};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn monogenic_shapes() {
        assert!(cyclic_group(3).unwrap().is_group());
        assert_eq!(monogenic(2, 3).unwrap().size(), 5);
        let idem = monogenic(1, 1).unwrap();
        assert_eq!(idem.mul(1, 1), 1);
        assert!(monogenic(1, 0).is_err());
    }

    #[test]
    fn broken_table_has_a_witness() {
        let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 0]];
        let m = FiniteMonoid::from_table(table, 0, vec!["1".into(), "a".into(), "b".into()]).unwrap();
        assert!(!m.validate());
        let Some(MonoidDefect::Associativity(a, b, c)) = m.defect() else {
            panic!("expected an associativity failure");
        };
        assert_ne!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
        assert!(FiniteMonoid::from_table(vec![vec![0, 5]], 0, vec!["1".into()]).is_err());
    }

    #[test]
    fn units_of_monogenic_monoids() {
        let r = units_and_left_units(&monogenic(2, 3).unwrap()).unwrap();
        assert_eq!(r.units, vec![0]);
        let idem = monogenic(1, 1).unwrap();
        let r = units_and_left_units(&idem).unwrap();
        assert!(r.regulars.contains(&1));
        assert_eq!(idem.mul(idem.mul(1, 1), 1), 1);
        let g = cyclic_group(4).unwrap();
        let r = units_and_left_units(&g).unwrap();
        assert_eq!(r.units.len(), 4);
        assert_eq!(r.regulars.len(), 4);
    }

    #[test]
    fn periodic_monoid_pipeline() {
        let m = monogenic(2, 3).unwrap();
        let b = monoid_bialgebra(&m, q()).unwrap();
        assert_eq!(b.dim(), 5);
        let env = enveloping_group(&m, q()).unwrap();
        assert_eq!(env.group.size(), 3);
        assert!(env.group.is_group() && env.group.is_commutative());
        assert_eq!(env.map, vec![0, 1, 2, 0, 1]);
        assert_eq!(cofree_hopf(&b).unwrap().hopf.dim(), 1);
        assert_eq!(iterate_k(&b).unwrap().1, 1);
        assert_eq!(iterate_q(&b).unwrap().1, 1);
        assert_eq!(central_n_antipode(&b).unwrap().n, 2);
        assert!(cocommutative_envelope_check(&b).unwrap());
        assert_eq!(cocommutative_cofree(&b).unwrap().hopf.dim(), 1);
    }

    #[test]
    fn idempotent_monoid_cross_check() {
        let m = monogenic(1, 1).unwrap();
        let c = cancellativity_cross_check(&m, q()).unwrap();
        assert!(!c.table.right_cancellative && c.table.unique_right_inverses && !c.table.is_group);
        assert!(c.agrees());
        assert_eq!(enveloping_group(&m, q()).unwrap().group.size(), 1);
    }

    #[test]
    fn group_is_its_own_enveloping_group() {
        let g = direct_product(&cyclic_group(2).unwrap(), &cyclic_group(3).unwrap());
        assert!(g.validate());
        let env = enveloping_group(&g, q()).unwrap();
        assert_eq!(env.group.table(), g.table());
        assert_eq!(env.map, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn localization_of_periodic_monoid() {
        let m = monogenic(2, 3).unwrap();
        let check = localization_check(&m, q()).unwrap().unwrap();
        assert!(check.matches());
        assert_eq!(check.kernel.dim(), 2);
        let f = q();
        let x3_minus_1 = [-1, 0, 0, 1, 0].map(|c| f.from_i64(c)).to_vec();
        let x4_minus_x = [0, -1, 0, 0, 1].map(|c| f.from_i64(c)).to_vec();
        assert!(check.kernel.contains(&x3_minus_1) && check.kernel.contains(&x4_minus_x));
    }

    #[test]
    fn generators_generate() {
        let m = direct_product(&monogenic(1, 2).unwrap(), &cyclic_group(2).unwrap());
        assert_eq!(m.generated_by(&m.generators()).len(), m.size());
    }

    fn random_monoid(seed: u64) -> FiniteMonoid {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let gens = rng.gen_range(1..=2);
            if let Some(m) = random_transformation_monoid(&mut rng, 3, gens, 6) {
                return m;
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_monoids_satisfy_unit_and_cancellation_laws(seed in any::<u64>(), which in 0usize..3) {
            let m = random_monoid(seed);
            prop_assert!(m.validate());
            let field = [Field::Rational, Field::Prime(2), Field::Prime(3)][which];
            let c = cancellativity_cross_check(&m, field).unwrap();
            prop_assert!(c.agrees());
            let units = units_and_left_units(&m).unwrap();
            let cofree = cofree_hopf(&monoid_bialgebra(&m, field).unwrap()).unwrap();
            prop_assert_eq!(cofree.hopf.dim(), units.units.len());
            let env = enveloping_group(&m, field).unwrap();
            prop_assert!(env.group.is_group());
        }
    }
}

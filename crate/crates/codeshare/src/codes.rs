//! Linear [n,k] codes over finite fields: duals, parity checks,
//! codeword enumeration, minimal-support computation, and Reed-Solomon
//! construction.
//!
//! Codes are identified by their codeword sets: equality compares RREF
//! canonical generators, not the stored matrices. Coordinates and
//! support indices are 1-based to match the participant numbering used
//! everywhere downstream.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::galois::{Field, FieldElement, FieldEmbedding};
use crate::matfield::MatrixF;
use crate::{Error, Result};

/// Cap on brute-force codeword enumeration (q^k words).
pub const MAX_ENUMERATION: u64 = 1 << 20;

/// A set of coordinate indices, strictly increasing, 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SupportSet(Vec<usize>);

impl SupportSet {
    /// Sorts and deduplicates; rejects indices below 1.
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if indices.iter().any(|&i| i == 0) {
            return Err(Error::ParticipantRange { index: 0, n: 0 });
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(SupportSet(indices))
    }

    pub fn empty() -> Self {
        SupportSet(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.0.iter().all(|i| other.contains(*i))
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        SupportSet(v)
    }

    pub fn max_index(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// Bitmask with bit i-1 set for each member i. Callers keep n <= 20.
    pub fn mask(&self) -> u32 {
        self.0.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
    }

    pub fn from_mask(mut mask: u32) -> SupportSet {
        let mut v = Vec::new();
        while mask != 0 {
            let bit = mask.trailing_zeros() as usize;
            v.push(bit + 1);
            mask &= mask - 1;
        }
        SupportSet(v)
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", idx)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for SupportSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        SupportSet::new(v).map_err(serde::de::Error::custom)
    }
}

/// Keeps only the inclusion-minimal members, sorted lexicographically.
pub fn minimal_antichain(mut family: Vec<SupportSet>) -> Vec<SupportSet> {
    family.sort();
    family.dedup();
    let keep: Vec<bool> = family
        .iter()
        .map(|s| !family.iter().any(|t| t != s && t.is_subset_of(s)))
        .collect();
    family
        .into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

// ---------------------------------------------------------------------
// Linear codes
// ---------------------------------------------------------------------

/// An [n,k] linear code given by a full-rank generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    generator: MatrixF,
}

impl LinearCode {
    /// Builds a code from a generator matrix; rejects rank-deficient
    /// input rather than silently dropping rows.
    pub fn from_generator(generator: MatrixF) -> Result<Self> {
        let k = generator.rows();
        let n = generator.cols();
        if k < 1 || k > n {
            return Err(Error::RankDeficient);
        }
        if generator.rank() != k {
            return Err(Error::RankDeficient);
        }
        Ok(LinearCode { field: generator.field().clone(), n, k, generator })
    }

    /// The code {x : Hx = 0}. A zero-rank H (including the 0 x n matrix)
    /// yields the full [n,n] code.
    pub fn from_parity(h: &MatrixF, n: usize) -> Result<Self> {
        if h.cols() != n {
            return Err(Error::Shape(format!(
                "parity check has {} columns but n = {}",
                h.cols(),
                n
            )));
        }
        let basis = h.kernel_basis();
        if basis.is_empty() {
            return Err(Error::RankDeficient);
        }
        let generator = MatrixF::from_rows(h.field(), basis)?;
        Self::from_generator(generator)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Code length n.
    pub fn len(&self) -> usize {
        self.n
    }

    /// Code dimension k.
    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &MatrixF {
        &self.generator
    }

    /// RREF of the generator; two codes are equal iff these agree.
    pub fn canonical_generator(&self) -> MatrixF {
        self.generator.rref().matrix
    }

    /// Canonical (n-k) x n parity-check matrix H with G H^T = 0, built
    /// from the RREF free-column parametrization of the generator's
    /// kernel. For k = n this is the empty 0 x n matrix.
    pub fn parity_check(&self) -> MatrixF {
        let basis = self.generator.kernel_basis();
        if basis.is_empty() {
            return MatrixF::empty(&self.field, self.n);
        }
        MatrixF::from_rows(&self.field, basis).expect("kernel vectors share a length")
    }

    /// The [n, n-k] dual code; errors for k = n because the dual would
    /// be the zero code.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k == self.n {
            return Err(Error::ZeroDualCode);
        }
        LinearCode::from_generator(self.parity_check())
    }

    /// True when H x = 0.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        self.parity_check().mat_vec(word).iter().all(FieldElement::is_zero)
    }

    /// All q^k codewords in message-encoding order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = Vec<FieldElement>> + '_> {
        let q = self.field.size();
        let total = q
            .checked_pow(self.k as u32)
            .filter(|&t| t <= MAX_ENUMERATION)
            .ok_or(Error::EnumerationBound { needed: u64::MAX, bound: MAX_ENUMERATION })?;
        Ok((0..total).map(move |index| {
            let mut message = Vec::with_capacity(self.k);
            let mut v = index;
            for _ in 0..self.k {
                message.push(self.field.element_from_encoding(v % q).expect("digit in range"));
                v /= q;
            }
            (0..self.n)
                .map(|j| {
                    let mut acc = self.field.zero();
                    for (i, mi) in message.iter().enumerate() {
                        acc = &acc + &(mi * self.generator.entry(i, j));
                    }
                    acc
                })
                .collect()
        }))
    }

    /// Supports of the minimal codewords: enumerate all q^k codewords,
    /// collect nonzero supports, and discard any support that strictly
    /// contains another. Sorted lexicographically.
    pub fn minimal_supports(&self) -> Result<Vec<SupportSet>> {
        let mut supports = BTreeSet::new();
        for word in self.codewords()? {
            let indices: Vec<usize> = word
                .iter()
                .enumerate()
                .filter_map(|(j, e)| (!e.is_zero()).then_some(j + 1))
                .collect();
            if !indices.is_empty() {
                supports.insert(SupportSet(indices));
            }
        }
        Ok(minimal_antichain(supports.into_iter().collect()))
    }

    /// Same code over an extension field via the given embedding.
    pub fn embed(&self, e: &FieldEmbedding) -> Result<LinearCode> {
        if *e.source() != self.field {
            return Err(Error::FieldMismatch);
        }
        LinearCode::from_generator(self.generator.embed(e))
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.k == other.k
            && self.canonical_generator() == other.canonical_generator()
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code over {}", self.n, self.k, self.field)
    }
}

/// Reed-Solomon code: generator row i holds the i-th powers of the
/// evaluation points, a Vandermonde matrix of guaranteed rank k.
pub fn reed_solomon(
    field: &Field,
    n: usize,
    k: usize,
    points: &[FieldElement],
) -> Result<LinearCode> {
    if k < 1 || k > n {
        return Err(Error::RankDeficient);
    }
    let max = field.size() - 1;
    if n as u64 > max {
        return Err(Error::LengthExceedsField { n, q: field.size(), max });
    }
    if points.len() != n {
        return Err(Error::Shape(format!("expected {} evaluation points, got {}", n, points.len())));
    }
    if points.iter().any(|p| p.field() != field) {
        return Err(Error::FieldMismatch);
    }
    if points.iter().any(FieldElement::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let distinct: BTreeSet<u64> = points.iter().map(FieldElement::encoding).collect();
    if distinct.len() != n {
        return Err(Error::RepeatedPoint);
    }
    let rows = (0..k)
        .map(|i| points.iter().map(|p| p.pow(i as u64)).collect())
        .collect();
    LinearCode::from_generator(MatrixF::from_rows(field, rows)?)
}

// ---------------------------------------------------------------------
// Serialization:
// {"field": {...}, "n": int, "k": int, "generator": [[int, ...], ...]}
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CodeFile {
    field: Field,
    n: usize,
    k: usize,
    generator: Vec<Vec<u64>>,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CodeFile {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            generator: self.generator.encodings(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = CodeFile::deserialize(deserializer)?;
        let generator = MatrixF::from_encodings(&file.field, &file.generator, file.n)
            .map_err(serde::de::Error::custom)?;
        let code = LinearCode::from_generator(generator).map_err(serde::de::Error::custom)?;
        if code.dim() != file.k {
            return Err(serde::de::Error::custom(format!(
                "stored k = {} but the generator has {} rows",
                file.k,
                code.dim()
            )));
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, m: usize) -> Field {
        Field::new(p, m).unwrap()
    }

    fn code(field: &Field, rows: &[Vec<u64>], n: usize) -> LinearCode {
        LinearCode::from_generator(MatrixF::from_encodings(field, rows, n).unwrap()).unwrap()
    }

    fn even_weight_32() -> LinearCode {
        code(&gf(2, 1), &[vec![1, 1, 0], vec![0, 1, 1]], 3)
    }

    fn supports(sets: &[&[usize]]) -> Vec<SupportSet> {
        sets.iter().map(|s| SupportSet::new(s.to_vec()).unwrap()).collect()
    }

    #[test]
    fn repetition_code_from_single_row() {
        let c = code(&gf(2, 1), &[vec![1, 1, 1]], 3);
        assert_eq!((c.len(), c.dim()), (3, 1));
    }

    #[test]
    fn from_parity_even_weight_codewords() {
        let f = gf(2, 1);
        let h = MatrixF::from_encodings(&f, &[vec![1, 1, 1]], 3).unwrap();
        let c = LinearCode::from_parity(&h, 3).unwrap();
        assert_eq!((c.len(), c.dim()), (3, 2));
        let words: BTreeSet<Vec<u64>> = c
            .codewords()
            .unwrap()
            .map(|w| w.iter().map(|e| e.encoding()).collect())
            .collect();
        let expected: BTreeSet<Vec<u64>> =
            [vec![0, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]].into_iter().collect();
        assert_eq!(words, expected);
        assert_eq!(c, even_weight_32());
    }

    #[test]
    fn from_parity_with_no_constraints_is_full_code() {
        let f = gf(2, 1);
        let h = MatrixF::empty(&f, 1);
        let c = LinearCode::from_parity(&h, 1).unwrap();
        assert_eq!((c.len(), c.dim()), (1, 1));
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = gf(2, 1);
        let g = MatrixF::from_encodings(&f, &[vec![1, 1], vec![1, 1]], 2).unwrap();
        assert!(matches!(LinearCode::from_generator(g), Err(Error::RankDeficient)));
    }

    #[test]
    fn parity_check_examples() {
        assert_eq!(even_weight_32().parity_check().encodings(), vec![vec![1, 1, 1]]);
        let full = code(&gf(2, 1), &[vec![1]], 1);
        assert_eq!(full.parity_check().rows(), 0);
        let rep2 = code(&gf(2, 1), &[vec![1, 1]], 2);
        assert_eq!(rep2.parity_check().encodings(), vec![vec![1, 1]]);
    }

    #[test]
    fn parity_check_is_orthogonal_and_full_rank() {
        for c in [even_weight_32(), code(&gf(3, 1), &[vec![1, 2, 0], vec![0, 1, 2]], 3)] {
            let h = c.parity_check();
            assert!(c.generator().matmul(&h.transpose()).unwrap().is_zero());
            assert_eq!(h.rank(), c.len() - c.dim());
        }
    }

    #[test]
    fn dual_of_even_weight_is_repetition() {
        let dual = even_weight_32().dual().unwrap();
        assert_eq!(dual, code(&gf(2, 1), &[vec![1, 1, 1]], 3));
    }

    #[test]
    fn self_dual_code() {
        let c = code(&gf(2, 1), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4);
        assert_eq!(c.dual().unwrap(), c);
    }

    #[test]
    fn biduality() {
        for c in [
            even_weight_32(),
            code(&gf(2, 1), &[vec![1, 1, 1]], 3),
            code(&gf(5, 1), &[vec![1, 2, 3]], 3),
        ] {
            assert_eq!(c.dual().unwrap().dual().unwrap(), c);
        }
    }

    #[test]
    fn dual_of_full_code_is_rejected() {
        let full = code(&gf(2, 1), &[vec![1]], 1);
        assert!(matches!(full.dual(), Err(Error::ZeroDualCode)));
    }

    #[test]
    fn minimal_supports_examples() {
        assert_eq!(
            even_weight_32().minimal_supports().unwrap(),
            supports(&[&[1, 2], &[1, 3], &[2, 3]])
        );
        let rep3 = code(&gf(2, 1), &[vec![1, 1, 1]], 3);
        assert_eq!(rep3.minimal_supports().unwrap(), supports(&[&[1, 2, 3]]));
        // 1111 is a codeword but its support contains both minimal ones.
        let pair = code(&gf(2, 1), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4);
        assert_eq!(pair.minimal_supports().unwrap(), supports(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn reed_solomon_generator_and_supports() {
        let f = gf(2, 2);
        let points = f.nonzero_elements(3).unwrap();
        let rs = reed_solomon(&f, 3, 2, &points).unwrap();
        assert_eq!(rs.generator().encodings(), vec![vec![1, 1, 1], vec![1, 2, 3]]);
        // Enumerating the 16 codewords: every 2-subset of {1,2,3}.
        assert_eq!(
            rs.minimal_supports().unwrap(),
            supports(&[&[1, 2], &[1, 3], &[2, 3]])
        );
    }

    #[test]
    fn reed_solomon_over_gf5() {
        let f = gf(5, 1);
        let points = f.nonzero_elements(4).unwrap();
        let rs = reed_solomon(&f, 4, 2, &points).unwrap();
        // Enumerating the 25 codewords: every 3-subset of {1,2,3,4}.
        assert_eq!(
            rs.minimal_supports().unwrap(),
            supports(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
    }

    #[test]
    fn reed_solomon_rejects_bad_points() {
        let f = gf(2, 2);
        let el = |e: u64| f.element_from_encoding(e).unwrap();
        assert!(matches!(
            reed_solomon(&f, 2, 1, &[el(1), el(1)]),
            Err(Error::RepeatedPoint)
        ));
        assert!(matches!(
            reed_solomon(&f, 2, 1, &[el(0), el(1)]),
            Err(Error::ZeroPoint)
        ));
        assert!(matches!(
            reed_solomon(&f, 3, 2, &f.nonzero_elements(2).unwrap()),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            reed_solomon(&f, 4, 2, &f.nonzero_elements(3).unwrap()),
            Err(Error::LengthExceedsField { .. })
        ));
        assert!(matches!(
            f.nonzero_elements(4),
            Err(Error::LengthExceedsField { .. })
        ));
    }

    #[test]
    fn mds_property_small_lengths() {
        // For Reed-Solomon, the minimal supports are exactly the
        // (n-k+1)-subsets. Checked over GF(7) and GF(8).
        use itertools::Itertools;
        for field in [gf(7, 1), gf(2, 3)] {
            for n in 2..=5usize {
                for k in 1..=n {
                    let rs = reed_solomon(&field, n, k, &field.nonzero_elements(n).unwrap()).unwrap();
                    let expected: Vec<SupportSet> = (1..=n)
                        .combinations(n - k + 1)
                        .map(|c| SupportSet::new(c).unwrap())
                        .collect();
                    assert_eq!(rs.minimal_supports().unwrap(), expected, "RS({},{}) over {}", n, k, field);
                }
            }
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let f = gf(2, 2);
        let g = MatrixF::identity(&f, 11);
        let c = LinearCode::from_generator(g).unwrap();
        // 4^11 = 2^22 > 2^20.
        assert!(matches!(c.minimal_supports(), Err(Error::EnumerationBound { .. })));
    }

    #[test]
    fn support_set_normalizes_and_validates() {
        let s = SupportSet::new(vec![3, 1, 3, 2]).unwrap();
        assert_eq!(s.indices(), &[1, 2, 3]);
        assert!(SupportSet::new(vec![0, 1]).is_err());
        assert_eq!(SupportSet::from_mask(s.mask()), s);
        assert_eq!(format!("{}", s), "{1,2,3}");
    }

    #[test]
    fn code_json_roundtrip() {
        let c = even_weight_32();
        let json = serde_json::to_string(&c).unwrap();
        let back: LinearCode = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        // A rank-deficient stored generator must be rejected on load.
        let bad = r#"{"field":{"p":2,"m":1,"modulus":[0,1]},"n":2,"k":2,"generator":[[1,1],[1,1]]}"#;
        assert!(serde_json::from_str::<LinearCode>(bad).is_err());
    }

    fn arb_small_binary_code() -> impl Strategy<Value = LinearCode> {
        (1usize..=4).prop_flat_map(|n| {
            (1usize..=n, Just(n)).prop_flat_map(|(k, n)| {
                proptest::collection::vec(0u64..2, k * n).prop_filter_map(
                    "full rank",
                    move |encs| {
                        let f = Field::new(2, 1).unwrap();
                        let rows: Vec<Vec<u64>> =
                            encs.chunks(n).map(|c| c.to_vec()).collect();
                        let m = MatrixF::from_encodings(&f, &rows, n).ok()?;
                        LinearCode::from_generator(m).ok()
                    },
                )
            })
        })
    }

    proptest! {
        #[test]
        fn minimal_supports_form_an_antichain(c in arb_small_binary_code()) {
            let mins = c.minimal_supports().unwrap();
            for a in &mins {
                for b in &mins {
                    if a != b {
                        prop_assert!(!a.is_subset_of(b));
                    }
                }
            }
            // Every nonzero codeword's support contains a minimal one.
            for w in c.codewords().unwrap() {
                let sup: Vec<usize> = w
                    .iter()
                    .enumerate()
                    .filter_map(|(j, e)| (!e.is_zero()).then_some(j + 1))
                    .collect();
                if sup.is_empty() {
                    continue;
                }
                let sup = SupportSet::new(sup).unwrap();
                prop_assert!(mins.iter().any(|m| m.is_subset_of(&sup)));
            }
        }

        #[test]
        fn dual_dimension_and_orthogonality(c in arb_small_binary_code()) {
            prop_assume!(c.dim() < c.len());
            let d = c.dual().unwrap();
            prop_assert_eq!(d.dim(), c.len() - c.dim());
            let prod = c.generator().matmul(&d.generator().transpose()).unwrap();
            prop_assert!(prod.is_zero());
        }

        #[test]
        fn column_scaling_leaves_minimal_supports_alone(
            c in arb_small_binary_code(),
            scale_encs in proptest::collection::vec(1u64..4, 4),
        ) {
            prop_assume!(c.dim() < c.len());
            // Scale the parity check columns by nonzero GF(4) elements;
            // the dependence relations, hence the minimal supports, are
            // unchanged.
            let f4 = Field::new(2, 2).unwrap();
            let e = FieldEmbedding::new(c.field(), &f4).unwrap();
            let mut h = c.parity_check().embed(&e);
            for j in 0..h.cols() {
                let s = f4.element_from_encoding(scale_encs[j % scale_encs.len()]).unwrap();
                h.scale_col(j, &s);
            }
            let scaled = LinearCode::from_parity(&h, c.len()).unwrap();
            prop_assert_eq!(scaled.minimal_supports().unwrap(), c.minimal_supports().unwrap());
        }
    }
}

//! Vector space constructions: the column-rescaling sum normalization,
//! the composite construction over a block partition, the single-code
//! and threshold constructions, and the brute-force `realizes` verifier.
//!
//! A construction maps participants to vectors in F^D; a set can recover
//! the secret exactly when e_1 = (1, 0, ..., 0) lies in the span of its
//! vectors. All algorithm choices are canonical (lexicographic support
//! order, first canonical kernel vector, smallest rescaled column,
//! smallest admissible scaling factor, degree-doubling extensions), so
//! identical inputs produce bit-identical outputs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::access::{AccessStructure, BlockPartition, MAX_SCAN_PARTICIPANTS};
use crate::codes::{LinearCode, SupportSet};
use crate::galois::{Field, FieldElement, FieldEmbedding};
use crate::matfield::{solve_membership, MatrixF};
use crate::{Error, Result};

/// A map from participants to F^D with implicit target e_1.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorSpaceConstruction {
    field: Field,
    dim: usize,
    n: usize,
    table: Vec<Vec<FieldElement>>,
}

impl VectorSpaceConstruction {
    pub fn new(field: &Field, dim: usize, table: Vec<Vec<FieldElement>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("ambient dimension must be at least 1".into()));
        }
        if table.is_empty() {
            return Err(Error::Shape("a construction needs at least one participant".into()));
        }
        for v in &table {
            if v.len() != dim {
                return Err(Error::Shape(format!(
                    "table vector has length {}, expected {}",
                    v.len(),
                    dim
                )));
            }
            if v.iter().any(|e| e.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(VectorSpaceConstruction { field: field.clone(), dim, n: table.len(), table })
    }

    /// The one-participant, one-dimensional construction {(1)}.
    pub fn trivial(field: &Field) -> Self {
        VectorSpaceConstruction {
            field: field.clone(),
            dim: 1,
            n: 1,
            table: vec![vec![field.one()]],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn participants(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[Vec<FieldElement>] {
        &self.table
    }

    /// Vector of participant j (1-based).
    pub fn vector(&self, j: usize) -> &[FieldElement] {
        &self.table[j - 1]
    }

    /// The implicit target e_1 = (1, 0, ..., 0).
    pub fn target(&self) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); self.dim];
        v[0] = self.field.one();
        v
    }

    /// Participants mapped to the zero vector; legal but worth flagging
    /// because they can never contribute to any qualified set.
    pub fn zero_participants(&self) -> Vec<usize> {
        self.table
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.iter().all(FieldElement::is_zero).then_some(i + 1))
            .collect()
    }
}

impl fmt::Debug for VectorSpaceConstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "VectorSpaceConstruction(n={}, dim={}, field={}, table={:?})",
            self.n,
            self.dim,
            self.field,
            self.table
                .iter()
                .map(|v| v.iter().map(FieldElement::encoding).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        )
    }
}

// ---------------------------------------------------------------------
// Sum normalization
// ---------------------------------------------------------------------

/// Witnesses produced by [`sum_normalize`]: one full-length coefficient
/// vector per minimal support, in lexicographic support order. Each is a
/// codeword of the normalized code with support equal to its minimal
/// support and nonzero coordinate sum.
#[derive(Clone, Debug)]
pub struct WitnessTable {
    supports: Vec<SupportSet>,
    witnesses: Vec<Vec<FieldElement>>,
}

impl WitnessTable {
    pub fn supports(&self) -> &[SupportSet] {
        &self.supports
    }

    pub fn witnesses(&self) -> &[Vec<FieldElement>] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }
}

#[derive(Serialize)]
struct WitnessFile {
    supports: Vec<SupportSet>,
    witnesses: Vec<Vec<u64>>,
}

impl Serialize for WitnessTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessFile {
            supports: self.supports.clone(),
            witnesses: self
                .witnesses
                .iter()
                .map(|w| w.iter().map(FieldElement::encoding).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Result of [`sum_normalize`]: the rescaled code, the exact parity
/// check the algorithm ended with (the composite construction consumes
/// its columns), the witness table, and the chain of field extensions
/// taken along the way.
#[derive(Clone, Debug)]
pub struct SumNormalized {
    pub code: LinearCode,
    pub parity: MatrixF,
    pub witnesses: WitnessTable,
    pub chain: Vec<FieldEmbedding>,
}

impl SumNormalized {
    pub fn field(&self) -> &Field {
        self.parity.field()
    }
}

fn coord_sum(v: &[FieldElement], field: &Field) -> FieldElement {
    v.iter().fold(field.zero(), |acc, e| &acc + e)
}

fn expand_local(field: &Field, n: usize, cols: &[usize], local: &[FieldElement]) -> Vec<FieldElement> {
    let mut full = vec![field.zero(); n];
    for (&c, e) in cols.iter().zip(local) {
        full[c] = e.clone();
    }
    full
}

/// Rescales parity-check columns (extending the scalar field when
/// necessary) until every minimal support owns a codeword with nonzero
/// coordinate sum, without changing the access structure of the code.
///
/// Minimal supports are processed in lexicographic order. For each one,
/// the canonical kernel basis of the column submatrix is inspected; if
/// some basis vector already has nonzero coordinate sum, the first such
/// vector is recorded. Otherwise the first canonical kernel vector is
/// taken, the column at the smallest support index with a nonzero
/// coefficient is divided by the smallest admissible factor, and every
/// stored witness is updated in place. A factor is admissible when it is
/// nonzero, changes the new witness sum away from zero, and preserves
/// every previously established nonzero sum; when the current field has
/// no admissible factor, the field degree is doubled and everything is
/// re-embedded.
pub fn sum_normalize(code: &LinearCode) -> Result<SumNormalized> {
    let supports = code.minimal_supports()?;
    let n = code.len();
    let mut field = code.field().clone();
    let mut parity = code.parity_check();
    let mut chain: Vec<FieldEmbedding> = Vec::new();
    let mut witnesses: Vec<Vec<FieldElement>> = Vec::new();

    for (t, support) in supports.iter().enumerate() {
        let cols: Vec<usize> = support.indices().iter().map(|&i| i - 1).collect();
        let basis = parity.columns(&cols).kernel_basis();
        debug_assert!(!basis.is_empty(), "a minimal support always carries a codeword");

        if let Some(found) = basis.iter().find(|v| !coord_sum(v, &field).is_zero()) {
            let full = expand_local(&field, n, &cols, found);
            debug_assert!(full.iter().enumerate().all(|(i, e)| e.is_zero() != support.contains(i + 1)));
            witnesses.push(full);
            continue;
        }

        // Every combination on this support sums to zero: rescale one
        // column. The kernel here is one-dimensional (two independent
        // codewords sharing a minimal support would combine to a smaller
        // support), so the first basis vector is the only choice.
        let mut local = basis.into_iter().next().expect("nonempty basis");
        let j_local = local
            .iter()
            .position(|e| !e.is_zero())
            .expect("kernel vector is nonzero");
        let j = cols[j_local];

        let gamma = loop {
            match pick_gamma(&field, &local, j_local, j, &supports[..t], &witnesses) {
                Some(gamma) => break gamma,
                None => {
                    let next = Field::new(field.characteristic(), field.degree() * 2)?;
                    let e = FieldEmbedding::new(&field, &next)?;
                    parity = parity.embed(&e);
                    for w in &mut witnesses {
                        *w = e.apply_vec(w);
                    }
                    local = e.apply_vec(&local);
                    chain.push(e);
                    field = next;
                }
            }
        };

        parity.scale_col(j, &gamma.inverse()?);
        for w in &mut witnesses {
            w[j] = &w[j] * &gamma;
        }
        local[j_local] = &local[j_local] * &gamma;
        witnesses.push(expand_local(&field, n, &cols, &local));
    }

    let code = LinearCode::from_parity(&parity, n)?;
    Ok(SumNormalized {
        code,
        parity,
        witnesses: WitnessTable { supports, witnesses },
        chain,
    })
}

/// Smallest-encoding nonzero factor gamma such that dividing column `j`
/// by gamma gives the pending witness a nonzero sum and keeps every
/// stored witness sum nonzero. Each stored witness w with a nonzero j-th
/// coefficient rules out exactly the gamma with w_j * gamma = w_j - sum(w).
fn pick_gamma(
    field: &Field,
    local: &[FieldElement],
    j_local: usize,
    j: usize,
    prior_supports: &[SupportSet],
    witnesses: &[Vec<FieldElement>],
) -> Option<FieldElement> {
    let mut excluded: Vec<u64> = Vec::new();
    let lambda_j = &local[j_local];
    let sum = coord_sum(local, field);
    // gamma = (lambda_j - sum) / lambda_j leaves the new sum at zero.
    excluded.push(
        (&(lambda_j - &sum)).div(lambda_j).expect("lambda_j is nonzero").encoding(),
    );
    for (support, w) in prior_supports.iter().zip(witnesses) {
        if !support.contains(j + 1) {
            continue;
        }
        let wsum = coord_sum(w, field);
        // gamma = (w_j - sum(w)) / w_j collapses this witness's sum.
        excluded.push((&(&w[j] - &wsum)).div(&w[j]).expect("w_j is nonzero").encoding());
    }
    (1..field.size())
        .find(|enc| !excluded.contains(enc))
        .map(|enc| field.element_from_encoding(enc).expect("encoding in range"))
}

// ---------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------

/// The Vandermonde construction for the (t, n) threshold structure:
/// participant i is mapped to (1, a_i, a_i^2, ..., a_i^{t-1}) where a_i
/// is the i-th nonzero field element in canonical encoding order.
pub fn threshold_construction(t: usize, n: usize, field: &Field) -> Result<VectorSpaceConstruction> {
    if t < 1 || t > n {
        return Err(Error::ThresholdRange { t, n });
    }
    let points = field.nonzero_elements(n)?;
    let table = points
        .iter()
        .map(|a| (0..t as u64).map(|e| a.pow(e)).collect())
        .collect();
    VectorSpaceConstruction::new(field, t, table)
}

fn lcm(a: usize, b: usize) -> usize {
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    a / gcd(a, b) * b
}

/// The composite construction: sum-normalize every block code, embed the
/// outer construction and all normalized parity checks into the common
/// field (degree = lcm of all degrees), and concatenate. Participant j
/// of block i is mapped to the outer vector of its block followed by one
/// slot per block, all zero except slot i which holds column j of that
/// block's normalized parity check. The ambient dimension is the outer
/// dimension plus the sum of the parity-check heights n_i - k_i.
pub fn compose_construction(
    outer: &VectorSpaceConstruction,
    codes: &[LinearCode],
    partition: &BlockPartition,
) -> Result<VectorSpaceConstruction> {
    let r = outer.participants();
    if codes.len() != r || partition.len() != r {
        return Err(Error::BlockMismatch(format!(
            "outer construction has {} participants, got {} codes and {} partition sizes",
            r,
            codes.len(),
            partition.len()
        )));
    }
    for (i, (code, &size)) in codes.iter().zip(partition.blocks()).enumerate() {
        if code.len() != size {
            return Err(Error::BlockMismatch(format!(
                "block {}: partition size {} but the code has length {}",
                i + 1,
                size,
                code.len()
            )));
        }
    }
    let p = outer.field().characteristic();
    if codes.iter().any(|c| c.field().characteristic() != p) {
        return Err(Error::CharacteristicMismatch);
    }

    let normalized: Vec<SumNormalized> = codes.iter().map(sum_normalize).collect::<Result<_>>()?;

    let degree = normalized
        .iter()
        .fold(outer.field().degree(), |acc, nz| lcm(acc, nz.field().degree()));
    let common = Field::new(p, degree)?;
    let outer_embed = FieldEmbedding::new(outer.field(), &common)?;
    let parities: Vec<MatrixF> = normalized
        .iter()
        .map(|nz| {
            let e = FieldEmbedding::new(nz.field(), &common)?;
            Ok(nz.parity.embed(&e))
        })
        .collect::<Result<_>>()?;

    let heights: Vec<usize> = parities.iter().map(MatrixF::rows).collect();
    let dim = outer.dim() + heights.iter().sum::<usize>();

    let mut table = Vec::with_capacity(partition.total());
    for i in 0..r {
        for j in 0..partition.blocks()[i] {
            let mut v = outer_embed.apply_vec(outer.vector(i + 1));
            for (l, other) in parities.iter().enumerate() {
                if l == i {
                    v.extend(other.col(j));
                } else {
                    v.extend(std::iter::repeat_with(|| common.zero()).take(heights[l]));
                }
            }
            debug_assert_eq!(v.len(), dim);
            table.push(v);
        }
    }
    VectorSpaceConstruction::new(&common, dim, table)
}

/// The construction realizing the structure of a single code: the
/// composite construction with the trivial one-participant outer map,
/// i.e. participant j is mapped to (1, h_j) over the normalized parity
/// check.
pub fn code_construction(code: &LinearCode) -> Result<VectorSpaceConstruction> {
    let outer = VectorSpaceConstruction::trivial(code.field());
    let partition = BlockPartition::new(vec![code.len()])?;
    compose_construction(&outer, std::slice::from_ref(code), &partition)
}

// ---------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------

/// How a counterexample subset fails.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    QualifiedButUnreachable,
    UnqualifiedButReachable,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::QualifiedButUnreachable => write!(f, "qualified but unreachable"),
            Direction::UnqualifiedButReachable => write!(f, "reachable but unqualified"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub subset: SupportSet,
    pub direction: Direction,
}

/// Verdict of [`realizes`]: either the construction realizes the
/// structure on every subset, or the lexicographically first subset
/// where span membership of e_1 and qualification disagree.
#[derive(Clone, Debug)]
pub struct RealizesVerdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
    pub subsets_scanned: u64,
}

/// Exhaustive check that e_1 lies in the span of a subset's vectors
/// exactly when the subset is qualified.
pub fn realizes(
    construction: &VectorSpaceConstruction,
    structure: &AccessStructure,
) -> Result<RealizesVerdict> {
    let n = construction.participants();
    if structure.participants() != n {
        return Err(Error::BlockMismatch(format!(
            "construction has {} participants but the structure has {}",
            n,
            structure.participants()
        )));
    }
    if n > MAX_SCAN_PARTICIPANTS {
        return Err(Error::ScanBound { n, bound: MAX_SCAN_PARTICIPANTS });
    }
    let target = construction.target();
    let mut counterexample: Option<Counterexample> = None;
    for mask in 0..(1u64 << n) as u32 {
        let subset = SupportSet::from_mask(mask);
        let vectors: Vec<Vec<FieldElement>> = subset
            .indices()
            .iter()
            .map(|&j| construction.vector(j).to_vec())
            .collect();
        let reachable = solve_membership(&vectors, &target).is_some();
        let qualified = structure.is_qualified(&subset);
        if reachable == qualified {
            continue;
        }
        let direction = if qualified {
            Direction::QualifiedButUnreachable
        } else {
            Direction::UnqualifiedButReachable
        };
        if counterexample.as_ref().is_none_or(|c| subset < c.subset) {
            counterexample = Some(Counterexample { subset, direction });
        }
    }
    Ok(RealizesVerdict {
        holds: counterexample.is_none(),
        counterexample,
        subsets_scanned: 1u64 << n,
    })
}

// ---------------------------------------------------------------------
// Serialization:
// {"field": {...}, "dim": int, "n": int, "table": [[int, ...], ...]}
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ConstructionFile {
    field: Field,
    dim: usize,
    n: usize,
    table: Vec<Vec<u64>>,
}

impl Serialize for VectorSpaceConstruction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ConstructionFile {
            field: self.field.clone(),
            dim: self.dim,
            n: self.n,
            table: self
                .table
                .iter()
                .map(|v| v.iter().map(FieldElement::encoding).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VectorSpaceConstruction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = ConstructionFile::deserialize(deserializer)?;
        if file.table.len() != file.n {
            return Err(serde::de::Error::custom(format!(
                "table has {} vectors but n = {}",
                file.table.len(),
                file.n
            )));
        }
        let table = file
            .table
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&e| file.field.element_from_encoding(e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        VectorSpaceConstruction::new(&file.field, file.dim, table).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matfield::MatrixF;

    fn gf(p: u64, m: usize) -> Field {
        Field::new(p, m).unwrap()
    }

    fn code(field: &Field, rows: &[Vec<u64>], n: usize) -> LinearCode {
        LinearCode::from_generator(MatrixF::from_encodings(field, rows, n).unwrap()).unwrap()
    }

    fn even_weight_32() -> LinearCode {
        code(&gf(2, 1), &[vec![1, 1, 0], vec![0, 1, 1]], 3)
    }

    fn encodings(vs: &[Vec<FieldElement>]) -> Vec<Vec<u64>> {
        vs.iter().map(|v| v.iter().map(FieldElement::encoding).collect()).collect()
    }

    fn same_line(a: &[FieldElement], b_encs: &[u64]) -> bool {
        // b = c * a for some nonzero scalar c.
        let field = a[0].field();
        let b: Vec<FieldElement> = b_encs
            .iter()
            .map(|&e| field.element_from_encoding(e).unwrap())
            .collect();
        let Some((ai, bi)) = a.iter().zip(&b).find(|(ai, _)| !ai.is_zero()) else {
            return false;
        };
        if bi.is_zero() {
            return false;
        }
        let c = bi.div(ai).unwrap();
        a.iter().zip(&b).all(|(ai, bi)| &(ai * &c) == bi)
    }

    #[test]
    fn sum_normalize_even_weight_code() {
        // Replaying the three rescaling steps by hand: supports {1,2},
        // {1,3}, {2,3}; the first forces the jump to GF(4) and factor w,
        // the second already sums to w^2, the third excludes {0,1,w} and
        // rescales by w^2, leaving H = [w^2, w, 1].
        let nz = sum_normalize(&even_weight_32()).unwrap();
        assert_eq!(nz.field(), &gf(2, 2));
        assert_eq!(nz.parity.encodings(), vec![vec![3, 2, 1]]);
        assert_eq!(nz.chain.len(), 1);
        assert_eq!(
            nz.witnesses.supports(),
            &[
                SupportSet::new(vec![1, 2]).unwrap(),
                SupportSet::new(vec![1, 3]).unwrap(),
                SupportSet::new(vec![2, 3]).unwrap(),
            ]
        );
        // Frozen algorithm output; each witness spans the same kernel
        // line as (1,w,0), (1,0,w^2), (0,1,w) respectively.
        assert_eq!(
            encodings(nz.witnesses.witnesses()),
            vec![vec![2, 3, 0], vec![2, 0, 1], vec![0, 3, 1]]
        );
        assert!(same_line(&nz.witnesses.witnesses()[0], &[1, 2, 0]));
        assert!(same_line(&nz.witnesses.witnesses()[1], &[1, 0, 3]));
        assert!(same_line(&nz.witnesses.witnesses()[2], &[0, 1, 2]));
        for w in nz.witnesses.witnesses() {
            assert!(!coord_sum(w, nz.field()).is_zero());
            assert!(nz.parity.mat_vec(w).iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn sum_normalize_already_normal_code() {
        let f3 = gf(3, 1);
        let h = MatrixF::from_encodings(&f3, &[vec![1, 2]], 2).unwrap();
        let original = LinearCode::from_parity(&h, 2).unwrap();
        let nz = sum_normalize(&original).unwrap();
        assert_eq!(nz.code, original);
        assert!(nz.chain.is_empty());
        assert_eq!(encodings(nz.witnesses.witnesses()), vec![vec![1, 1]]);
    }

    #[test]
    fn sum_normalize_repetition_pair() {
        let rep2 = code(&gf(2, 1), &[vec![1, 1]], 2);
        let nz = sum_normalize(&rep2).unwrap();
        // Forbidden set {0,1} forces gamma = w; H becomes [w^2, 1].
        assert_eq!(nz.parity.encodings(), vec![vec![3, 1]]);
        assert_eq!(encodings(nz.witnesses.witnesses()), vec![vec![2, 1]]);
        let sum = coord_sum(&nz.witnesses.witnesses()[0], nz.field());
        assert_eq!(sum.encoding(), 3);
    }

    #[test]
    fn sum_normalize_full_code_needs_nothing() {
        let full = code(&gf(2, 1), &[vec![1, 0], vec![0, 1]], 2);
        let nz = sum_normalize(&full).unwrap();
        assert_eq!(nz.field(), &gf(2, 1));
        assert_eq!(nz.parity.rows(), 0);
        assert_eq!(encodings(nz.witnesses.witnesses()), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn sum_normalize_preserves_structure() {
        for c in [
            even_weight_32(),
            code(&gf(2, 1), &[vec![1, 1, 1]], 3),
            code(&gf(2, 1), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4),
            code(&gf(3, 1), &[vec![1, 1, 1], vec![0, 1, 2]], 3),
        ] {
            let nz = sum_normalize(&c).unwrap();
            assert_eq!(
                nz.code.minimal_supports().unwrap(),
                c.minimal_supports().unwrap(),
                "structure changed for {:?}",
                c
            );
        }
    }

    #[test]
    fn sum_normalize_is_deterministic() {
        let a = sum_normalize(&even_weight_32()).unwrap();
        let b = sum_normalize(&even_weight_32()).unwrap();
        assert_eq!(a.parity.encodings(), b.parity.encodings());
        assert_eq!(encodings(a.witnesses.witnesses()), encodings(b.witnesses.witnesses()));
    }

    #[test]
    fn threshold_construction_tables() {
        let f4 = gf(2, 2);
        let phi = threshold_construction(2, 3, &f4).unwrap();
        assert_eq!(
            encodings(phi.table()),
            vec![vec![1, 1], vec![1, 2], vec![1, 3]]
        );
        let phi1 = threshold_construction(1, 3, &gf(5, 1)).unwrap();
        assert_eq!(encodings(phi1.table()), vec![vec![1], vec![1], vec![1]]);
        assert!(matches!(
            threshold_construction(2, 4, &f4),
            Err(Error::LengthExceedsField { .. })
        ));
    }

    #[test]
    fn threshold_construction_realizes_threshold() {
        let phi = threshold_construction(2, 3, &gf(2, 2)).unwrap();
        let gamma = AccessStructure::threshold(2, 3).unwrap();
        let verdict = realizes(&phi, &gamma).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.subsets_scanned, 8);
    }

    #[test]
    fn code_construction_of_even_weight_code() {
        let phi = code_construction(&even_weight_32()).unwrap();
        assert_eq!(phi.dim(), 2);
        assert_eq!(phi.field(), &gf(2, 2));
        assert_eq!(encodings(phi.table()), vec![vec![1, 3], vec![1, 2], vec![1, 1]]);
        let verdict = realizes(&phi, &AccessStructure::threshold(2, 3).unwrap()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn code_construction_of_repetition_code() {
        let rep3 = code(&gf(2, 1), &[vec![1, 1, 1]], 3);
        let phi = code_construction(&rep3).unwrap();
        let verdict = realizes(&phi, &AccessStructure::threshold(3, 3).unwrap()).unwrap();
        assert!(verdict.holds, "counterexample: {:?}", verdict.counterexample);
    }

    #[test]
    fn code_construction_of_full_code() {
        let full = code(&gf(2, 1), &[vec![1]], 1);
        let phi = code_construction(&full).unwrap();
        assert_eq!(phi.dim(), 1);
        assert_eq!(encodings(phi.table()), vec![vec![1]]);
        let verdict = realizes(&phi, &AccessStructure::threshold(1, 1).unwrap()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn compose_construction_two_blocks() {
        // Outer (2,2) over GF(4) with table {(1,1),(0,1)}; blocks are the
        // repetition [2,1] code and the full [1,1] code over GF(2).
        let f4 = gf(2, 2);
        let el = |e: u64| f4.element_from_encoding(e).unwrap();
        let outer = VectorSpaceConstruction::new(
            &f4,
            2,
            vec![vec![el(1), el(1)], vec![el(0), el(1)]],
        )
        .unwrap();
        let rep2 = code(&gf(2, 1), &[vec![1, 1]], 2);
        let full1 = code(&gf(2, 1), &[vec![1]], 1);
        let partition = BlockPartition::new(vec![2, 1]).unwrap();
        let phi = compose_construction(&outer, &[rep2.clone(), full1.clone()], &partition).unwrap();
        assert_eq!(phi.dim(), 3);
        assert_eq!(
            encodings(phi.table()),
            vec![vec![1, 1, 3], vec![1, 1, 1], vec![0, 1, 0]]
        );
        // The composite structure has the single minimal set {1,2,3}.
        let parts = vec![
            AccessStructure::of_code(&rep2).unwrap(),
            AccessStructure::of_code(&full1).unwrap(),
        ];
        let gamma = AccessStructure::threshold(2, 2).unwrap().compose(&parts, &partition).unwrap();
        assert_eq!(gamma.minimal(), &[SupportSet::new(vec![1, 2, 3]).unwrap()]);
        assert!(realizes(&phi, &gamma).unwrap().holds);
    }

    #[test]
    fn compose_construction_rejects_mixed_characteristics() {
        let outer = VectorSpaceConstruction::trivial(&gf(2, 1));
        let c3 = code(&gf(3, 1), &[vec![1, 1]], 2);
        let partition = BlockPartition::new(vec![2]).unwrap();
        assert!(matches!(
            compose_construction(&outer, &[c3], &partition),
            Err(Error::CharacteristicMismatch)
        ));
    }

    #[test]
    fn compose_construction_checks_block_sizes() {
        let outer = VectorSpaceConstruction::trivial(&gf(2, 1));
        let c = even_weight_32();
        let partition = BlockPartition::new(vec![2]).unwrap();
        assert!(matches!(
            compose_construction(&outer, &[c], &partition),
            Err(Error::BlockMismatch(_))
        ));
    }

    #[test]
    fn realizes_counterexample_direction() {
        let phi = code_construction(&even_weight_32()).unwrap();
        let verdict = realizes(&phi, &AccessStructure::threshold(3, 3).unwrap()).unwrap();
        assert!(!verdict.holds);
        let ce = verdict.counterexample.unwrap();
        assert_eq!(ce.subset, SupportSet::new(vec![1, 2]).unwrap());
        assert_eq!(ce.direction, Direction::UnqualifiedButReachable);
    }

    #[test]
    fn realizes_trivial_construction() {
        let phi = VectorSpaceConstruction::trivial(&gf(2, 1));
        let verdict = realizes(&phi, &AccessStructure::threshold(1, 1).unwrap()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn structure_survives_scalar_extension() {
        // Embedding a code's generator into an extension field leaves the
        // minimal supports unchanged.
        let c = even_weight_32();
        let e = FieldEmbedding::new(&gf(2, 1), &gf(2, 2)).unwrap();
        let extended = c.embed(&e).unwrap();
        assert_eq!(
            extended.minimal_supports().unwrap(),
            c.minimal_supports().unwrap()
        );
        let e4 = FieldEmbedding::new(&gf(2, 1), &gf(2, 4)).unwrap();
        let c4 = code(&gf(2, 1), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]], 4);
        assert_eq!(
            c4.embed(&e4).unwrap().minimal_supports().unwrap(),
            c4.minimal_supports().unwrap()
        );
    }

    #[test]
    fn construction_json_roundtrip() {
        let phi = code_construction(&even_weight_32()).unwrap();
        let json = serde_json::to_string(&phi).unwrap();
        let back: VectorSpaceConstruction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);
        let bad = r#"{"field":{"p":2,"m":1,"modulus":[0,1]},"dim":2,"n":1,"table":[[1]]}"#;
        assert!(serde_json::from_str::<VectorSpaceConstruction>(bad).is_err());
    }

    #[test]
    fn witness_table_serializes_supports_and_encodings() {
        let nz = sum_normalize(&even_weight_32()).unwrap();
        let json = serde_json::to_string(&nz.witnesses).unwrap();
        assert_eq!(
            json,
            r#"{"supports":[[1,2],[1,3],[2,3]],"witnesses":[[2,3,0],[2,0,1],[0,3,1]]}"#
        );
    }
}

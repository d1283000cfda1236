//! Monotone access structures stored as antichains of minimal qualified
//! sets, with duality, thresholds, code-derived structures, and
//! composition over a block partition.
//!
//! Duality and composition are computed by exhaustive subset scans, so
//! the participant count is capped at [`MAX_SCAN_PARTICIPANTS`]. The
//! structure of a code is the monotone closure of its codeword-support
//! family, which is the antichain of its minimal supports.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::codes::{minimal_antichain, LinearCode, SupportSet};
use crate::{Error, Result};

/// Subset scans walk all 2^n subsets; 20 participants is the cap.
pub const MAX_SCAN_PARTICIPANTS: usize = 20;

/// A monotone access structure on participants {1, ..., n}, stored as
/// the antichain of its minimal qualified sets (sorted, nonempty).
#[derive(Clone, PartialEq, Eq)]
pub struct AccessStructure {
    n: usize,
    minimal: Vec<SupportSet>,
}

impl AccessStructure {
    /// Monotone closure of the given family, stored as the antichain of
    /// its inclusion-minimal members.
    pub fn from_supports(n: usize, family: Vec<SupportSet>) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        for s in &family {
            if s.is_empty() {
                return Err(Error::EmptySet);
            }
            if s.max_index() > n {
                return Err(Error::ParticipantRange { index: s.max_index(), n });
            }
        }
        Ok(AccessStructure { n, minimal: minimal_antichain(family) })
    }

    /// The structure realized by a code: minimal sets are exactly the
    /// code's minimal supports.
    pub fn of_code(code: &LinearCode) -> Result<Self> {
        Self::from_supports(code.len(), code.minimal_supports()?)
    }

    /// The (t, n) threshold structure: qualified = cardinality >= t.
    pub fn threshold(t: usize, n: usize) -> Result<Self> {
        if t < 1 || t > n {
            return Err(Error::ThresholdRange { t, n });
        }
        let minimal = (1..=n)
            .combinations(t)
            .map(|c| SupportSet::new(c).expect("combinations are sorted and positive"))
            .collect();
        Ok(AccessStructure { n, minimal })
    }

    pub fn participants(&self) -> usize {
        self.n
    }

    pub fn minimal(&self) -> &[SupportSet] {
        &self.minimal
    }

    /// True iff the set contains some minimal qualified set.
    pub fn is_qualified(&self, set: &SupportSet) -> bool {
        self.minimal.iter().any(|m| m.is_subset_of(set))
    }

    fn minimal_masks(&self) -> Vec<u32> {
        self.minimal.iter().map(SupportSet::mask).collect()
    }

    fn check_scan_bound(n: usize) -> Result<()> {
        if n > MAX_SCAN_PARTICIPANTS {
            return Err(Error::ScanBound { n, bound: MAX_SCAN_PARTICIPANTS });
        }
        Ok(())
    }

    /// The dual structure {A : complement of A is unqualified}, found by
    /// an exhaustive subset scan.
    pub fn dual(&self) -> Result<AccessStructure> {
        Self::check_scan_bound(self.n)?;
        let masks = self.minimal_masks();
        let full: u32 = mask_full(self.n);
        let dual_qualified = |a: u32| !qualified_mask(&masks, full & !a);
        let minimal = minimal_sets_of_oracle(self.n, dual_qualified);
        AccessStructure::from_supports(self.n, minimal)
    }

    /// The composite structure: A is qualified iff the set of blocks
    /// whose restriction of A is qualified in its part structure is
    /// itself qualified in `self`.
    pub fn compose(
        &self,
        parts: &[AccessStructure],
        partition: &BlockPartition,
    ) -> Result<AccessStructure> {
        if parts.len() != self.n || partition.blocks().len() != self.n {
            return Err(Error::BlockMismatch(format!(
                "outer structure has {} blocks, got {} parts and {} partition sizes",
                self.n,
                parts.len(),
                partition.blocks().len()
            )));
        }
        for (i, (part, &size)) in parts.iter().zip(partition.blocks()).enumerate() {
            if part.participants() != size {
                return Err(Error::BlockMismatch(format!(
                    "block {}: partition size {} but the part has {} participants",
                    i + 1,
                    size,
                    part.participants()
                )));
            }
        }
        let total = partition.total();
        Self::check_scan_bound(total)?;

        let outer_masks = self.minimal_masks();
        let part_masks: Vec<Vec<u32>> = parts.iter().map(|p| p.minimal_masks()).collect();
        let offsets: Vec<usize> = (0..self.n).map(|i| partition.offset(i)).collect();
        let sizes: Vec<usize> = partition.blocks().to_vec();

        let qualified = |a: u32| {
            let mut block_set: u32 = 0;
            for i in 0..self.n {
                let local = (a >> offsets[i]) & mask_full(sizes[i]);
                if qualified_mask(&part_masks[i], local) {
                    block_set |= 1 << i;
                }
            }
            qualified_mask(&outer_masks, block_set)
        };
        let minimal = minimal_sets_of_oracle(total, qualified);
        AccessStructure::from_supports(total, minimal)
    }
}

impl fmt::Debug for AccessStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AccessStructure(n={}, minimal=[", self.n)?;
        for (i, s) in self.minimal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, "])")
    }
}

fn mask_full(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

fn qualified_mask(minimal_masks: &[u32], a: u32) -> bool {
    minimal_masks.iter().any(|&m| a & m == m)
}

/// Minimal sets of a monotone family given by a membership oracle:
/// a qualified set is minimal when removing any single member makes it
/// unqualified. The oracle must be monotone; the 2^n scan never checks.
fn minimal_sets_of_oracle(n: usize, qualified: impl Fn(u32) -> bool) -> Vec<SupportSet> {
    let mut out = Vec::new();
    for a in 0..(1u64 << n) as u32 {
        if !qualified(a) {
            continue;
        }
        let mut m = a;
        let mut minimal = true;
        while m != 0 {
            let bit = m & m.wrapping_neg();
            if qualified(a & !bit) {
                minimal = false;
                break;
            }
            m &= m - 1;
        }
        if minimal {
            out.push(SupportSet::from_mask(a));
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------
// Block partitions
// ---------------------------------------------------------------------

/// A partition of {1, ..., N} into consecutive blocks of the given
/// sizes; block i owns the global indices offset_i + 1 ..= offset_i + n_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockPartition {
    sizes: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(Error::BlockMismatch("block sizes must be positive".into()));
        }
        Ok(BlockPartition { sizes })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Sum of the sizes of the blocks before block `i` (0-based).
    pub fn offset(&self, i: usize) -> usize {
        self.sizes[..i].iter().sum()
    }

    /// Shifts a local support of block `i` to global numbering.
    pub fn globalize(&self, i: usize, local: &SupportSet) -> SupportSet {
        let off = self.offset(i);
        SupportSet::new(local.indices().iter().map(|&j| j + off).collect())
            .expect("shifting preserves validity")
    }
}

// ---------------------------------------------------------------------
// Proposition probes
// ---------------------------------------------------------------------

/// Outcome of comparing two structures or families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProbeVerdict {
    Equal,
    /// The lexicographically first subset on which the two sides differ.
    Unequal { counterexample: SupportSet },
    /// The comparison could not be formed (e.g. a dual code of a full
    /// [n,n] block would be the zero code).
    Undefined { reason: String },
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbeVerdict::Equal => write!(f, "EQUAL"),
            ProbeVerdict::Unequal { counterexample } => {
                write!(f, "UNEQUAL (counterexample {})", counterexample)
            }
            ProbeVerdict::Undefined { reason } => write!(f, "UNDEFINED ({})", reason),
        }
    }
}

/// Report of the two composition identities probed empirically.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    /// Minimal sets of the composite vs the family of block-wise unions
    /// of minimal sets.
    pub minimal_identity: ProbeVerdict,
    /// Dual of the composite vs the composite of duals over dual codes.
    pub duality: ProbeVerdict,
}

/// Compares minimal(compose(outer, [structure_of_code(C_i)])) with the
/// family of unions of per-block minimal supports taken over the outer
/// minimal sets, and the dual of the composite with the composite of the
/// dual structure over the dual codes.
pub fn probe_propositions(
    outer: &AccessStructure,
    codes: &[LinearCode],
    partition: &BlockPartition,
) -> Result<ProbeReport> {
    let parts: Vec<AccessStructure> =
        codes.iter().map(AccessStructure::of_code).collect::<Result<_>>()?;
    let composed = outer.compose(&parts, partition)?;

    // (a) minimal-sets identity.
    let mut union_family: Vec<SupportSet> = Vec::new();
    for block_set in outer.minimal() {
        let choices: Vec<Vec<SupportSet>> = block_set
            .indices()
            .iter()
            .map(|&i| {
                parts[i - 1]
                    .minimal()
                    .iter()
                    .map(|m| partition.globalize(i - 1, m))
                    .collect()
            })
            .collect();
        for pick in choices.iter().multi_cartesian_product() {
            let mut union = SupportSet::empty();
            for s in pick {
                union = union.union(s);
            }
            union_family.push(union);
        }
    }
    union_family.sort();
    union_family.dedup();
    let minimal_identity = compare_families(composed.minimal(), &union_family);

    // (b) duality identity.
    let duality = match codes.iter().map(LinearCode::dual).collect::<Result<Vec<_>>>() {
        Err(Error::ZeroDualCode) => ProbeVerdict::Undefined {
            reason: "a block code is the full [n,n] code; its dual is the zero code".into(),
        },
        Err(e) => return Err(e),
        Ok(duals) => {
            let dual_parts: Vec<AccessStructure> =
                duals.iter().map(AccessStructure::of_code).collect::<Result<_>>()?;
            let lhs = composed.dual()?;
            let rhs = outer.dual()?.compose(&dual_parts, partition)?;
            compare_structures(&lhs, &rhs)
        }
    };

    Ok(ProbeReport { minimal_identity, duality })
}

/// Lexicographically first member of the symmetric difference, if any.
fn compare_families(lhs: &[SupportSet], rhs: &[SupportSet]) -> ProbeVerdict {
    if lhs == rhs {
        return ProbeVerdict::Equal;
    }
    let in_one: Vec<&SupportSet> = lhs
        .iter()
        .filter(|s| !rhs.contains(s))
        .chain(rhs.iter().filter(|s| !lhs.contains(s)))
        .collect();
    let counterexample = in_one.into_iter().min().expect("families differ").clone();
    ProbeVerdict::Unequal { counterexample }
}

/// Full subset scan; reports the lexicographically first subset whose
/// qualified-membership differs.
fn compare_structures(lhs: &AccessStructure, rhs: &AccessStructure) -> ProbeVerdict {
    debug_assert_eq!(lhs.participants(), rhs.participants());
    let n = lhs.participants();
    let lhs_masks = lhs.minimal_masks();
    let rhs_masks = rhs.minimal_masks();
    let mut best: Option<SupportSet> = None;
    for a in 0..(1u64 << n) as u32 {
        if qualified_mask(&lhs_masks, a) != qualified_mask(&rhs_masks, a) {
            let s = SupportSet::from_mask(a);
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
    }
    match best {
        None => ProbeVerdict::Equal,
        Some(counterexample) => ProbeVerdict::Unequal { counterexample },
    }
}

// ---------------------------------------------------------------------
// Serialization:
//   structure: {"n": int, "minimal": [[int, ...], ...]}
//   partition: {"blocks": [int, ...]}
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct StructureFile {
    n: usize,
    minimal: Vec<SupportSet>,
}

impl Serialize for AccessStructure {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StructureFile { n: self.n, minimal: self.minimal.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AccessStructure {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = StructureFile::deserialize(deserializer)?;
        let structure = AccessStructure::from_supports(file.n, file.minimal.clone())
            .map_err(serde::de::Error::custom)?;
        let mut sorted = file.minimal;
        sorted.sort();
        if structure.minimal() != sorted {
            return Err(serde::de::Error::custom(Error::NotAntichain));
        }
        Ok(structure)
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionFile {
    blocks: Vec<usize>,
}

impl Serialize for BlockPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionFile { blocks: self.sizes.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BlockPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = PartitionFile::deserialize(deserializer)?;
        BlockPartition::new(file.blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;
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

    fn set(s: &[usize]) -> SupportSet {
        SupportSet::new(s.to_vec()).unwrap()
    }

    fn sets(family: &[&[usize]]) -> Vec<SupportSet> {
        family.iter().map(|s| set(s)).collect()
    }

    #[test]
    fn from_supports_minimizes() {
        let g = AccessStructure::from_supports(3, sets(&[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]))
            .unwrap();
        assert_eq!(g.minimal(), sets(&[&[1, 2], &[1, 3], &[2, 3]]));
        let g = AccessStructure::from_supports(3, sets(&[&[1], &[1, 2]])).unwrap();
        assert_eq!(g.minimal(), sets(&[&[1]]));
        let g = AccessStructure::from_supports(4, sets(&[&[1, 3], &[2, 4]])).unwrap();
        assert_eq!(g.minimal(), sets(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn from_supports_rejects_bad_input() {
        assert!(matches!(
            AccessStructure::from_supports(3, vec![]),
            Err(Error::EmptyFamily)
        ));
        assert!(matches!(
            AccessStructure::from_supports(3, vec![SupportSet::empty()]),
            Err(Error::EmptySet)
        ));
        assert!(matches!(
            AccessStructure::from_supports(2, sets(&[&[3]])),
            Err(Error::ParticipantRange { .. })
        ));
    }

    #[test]
    fn structure_of_codes() {
        let g = AccessStructure::of_code(&even_weight_32()).unwrap();
        assert_eq!(g, AccessStructure::threshold(2, 3).unwrap());
        let rep = code(&gf(2, 1), &[vec![1, 1, 1]], 3);
        assert_eq!(
            AccessStructure::of_code(&rep).unwrap(),
            AccessStructure::threshold(3, 3).unwrap()
        );
        let f4 = gf(2, 2);
        let rs = crate::codes::reed_solomon(&f4, 3, 2, &f4.nonzero_elements(3).unwrap()).unwrap();
        assert_eq!(
            AccessStructure::of_code(&rs).unwrap(),
            AccessStructure::threshold(2, 3).unwrap()
        );
    }

    #[test]
    fn threshold_families() {
        assert_eq!(AccessStructure::threshold(1, 2).unwrap().minimal(), sets(&[&[1], &[2]]));
        assert_eq!(
            AccessStructure::threshold(2, 3).unwrap().minimal(),
            sets(&[&[1, 2], &[1, 3], &[2, 3]])
        );
        assert_eq!(AccessStructure::threshold(3, 3).unwrap().minimal(), sets(&[&[1, 2, 3]]));
        assert!(matches!(
            AccessStructure::threshold(0, 2),
            Err(Error::ThresholdRange { .. })
        ));
        assert!(matches!(
            AccessStructure::threshold(4, 3),
            Err(Error::ThresholdRange { .. })
        ));
    }

    #[test]
    fn qualification() {
        let g23 = AccessStructure::threshold(2, 3).unwrap();
        assert!(g23.is_qualified(&set(&[1, 3])));
        assert!(!g23.is_qualified(&set(&[2])));
        let g = AccessStructure::from_supports(4, sets(&[&[1, 3], &[2, 4]])).unwrap();
        assert!(g.is_qualified(&set(&[1, 2, 3])));
        assert!(!g23.is_qualified(&SupportSet::empty()));
    }

    #[test]
    fn dual_structures() {
        let g23 = AccessStructure::threshold(2, 3).unwrap();
        assert_eq!(g23.dual().unwrap(), g23);
        assert_eq!(
            AccessStructure::threshold(1, 2).unwrap().dual().unwrap(),
            AccessStructure::threshold(2, 2).unwrap()
        );
        let g = AccessStructure::from_supports(4, sets(&[&[1, 3], &[2, 4]])).unwrap();
        assert_eq!(g.dual().unwrap().dual().unwrap(), g);
    }

    #[test]
    fn dual_is_an_involution_exhaustively() {
        // Every antichain-generated structure on up to 4 participants.
        for n in 1..=4usize {
            let subsets: Vec<SupportSet> =
                (1u32..(1 << n)).map(SupportSet::from_mask).collect();
            for picks in 1u32..(1 << subsets.len().min(5)) {
                let family: Vec<SupportSet> = subsets
                    .iter()
                    .enumerate()
                    .filter_map(|(i, s)| (picks >> i & 1 == 1).then(|| s.clone()))
                    .collect();
                let g = AccessStructure::from_supports(n, family).unwrap();
                assert_eq!(g.dual().unwrap().dual().unwrap(), g);
            }
        }
    }

    #[test]
    fn compose_examples() {
        // (2,2) over a (1,2) block {1,2} and a (1,1) block {3}.
        let outer = AccessStructure::threshold(2, 2).unwrap();
        let parts = vec![
            AccessStructure::threshold(1, 2).unwrap(),
            AccessStructure::threshold(1, 1).unwrap(),
        ];
        let partition = BlockPartition::new(vec![2, 1]).unwrap();
        let composite = outer.compose(&parts, &partition).unwrap();
        assert_eq!(composite.minimal(), sets(&[&[1, 3], &[2, 3]]));

        // (1,1) outer composition is the identity.
        let single = AccessStructure::threshold(1, 1).unwrap();
        let g23 = AccessStructure::threshold(2, 3).unwrap();
        let id = single
            .compose(std::slice::from_ref(&g23), &BlockPartition::new(vec![3]).unwrap())
            .unwrap();
        assert_eq!(id, g23);

        // (1,2) outer: either block suffices.
        let outer = AccessStructure::threshold(1, 2).unwrap();
        let parts = vec![
            AccessStructure::threshold(1, 2).unwrap(),
            AccessStructure::threshold(1, 1).unwrap(),
        ];
        let composite = outer.compose(&parts, &partition).unwrap();
        assert_eq!(composite.minimal(), sets(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn compose_threshold_of_singletons_is_threshold() {
        for (t, r) in [(1, 3), (2, 3), (3, 3), (2, 4)] {
            let outer = AccessStructure::threshold(t, r).unwrap();
            let parts: Vec<AccessStructure> =
                (0..r).map(|_| AccessStructure::threshold(1, 1).unwrap()).collect();
            let partition = BlockPartition::new(vec![1; r]).unwrap();
            assert_eq!(outer.compose(&parts, &partition).unwrap(), outer);
        }
    }

    #[test]
    fn compose_validates_arity() {
        let outer = AccessStructure::threshold(2, 2).unwrap();
        let parts = vec![AccessStructure::threshold(1, 2).unwrap()];
        let partition = BlockPartition::new(vec![2]).unwrap();
        assert!(matches!(
            outer.compose(&parts, &partition),
            Err(Error::BlockMismatch(_))
        ));
        let parts2 = vec![
            AccessStructure::threshold(1, 2).unwrap(),
            AccessStructure::threshold(1, 2).unwrap(),
        ];
        let partition2 = BlockPartition::new(vec![2, 1]).unwrap();
        assert!(matches!(
            outer.compose(&parts2, &partition2),
            Err(Error::BlockMismatch(_))
        ));
    }

    #[test]
    fn monotonicity_of_qualification() {
        let g = AccessStructure::from_supports(5, sets(&[&[1, 2], &[3, 4, 5]])).unwrap();
        for a in 0u32..(1 << 5) {
            for b in 0u32..(1 << 5) {
                if a & b == a {
                    let qa = g.is_qualified(&SupportSet::from_mask(a));
                    let qb = g.is_qualified(&SupportSet::from_mask(b));
                    assert!(!qa || qb, "monotonicity violated for {:b} <= {:b}", a, b);
                }
            }
        }
    }

    #[test]
    fn probe_minimal_identity_on_single_block() {
        let outer = AccessStructure::threshold(1, 1).unwrap();
        let codes = vec![even_weight_32()];
        let partition = BlockPartition::new(vec![3]).unwrap();
        let report = probe_propositions(&outer, &codes, &partition).unwrap();
        assert_eq!(report.minimal_identity, ProbeVerdict::Equal);
    }

    #[test]
    fn probe_duality_counterexample_on_even_weight_code() {
        // dual((2,3)) = (2,3) but the dual code is the repetition code,
        // whose structure is (3,3); the first differing subset is {1,2}.
        let outer = AccessStructure::threshold(1, 1).unwrap();
        let codes = vec![even_weight_32()];
        let partition = BlockPartition::new(vec![3]).unwrap();
        let report = probe_propositions(&outer, &codes, &partition).unwrap();
        assert_eq!(
            report.duality,
            ProbeVerdict::Unequal { counterexample: set(&[1, 2]) }
        );
    }

    #[test]
    fn probe_minimal_identity_on_two_repetition_blocks() {
        let outer = AccessStructure::threshold(2, 2).unwrap();
        let rep2 = code(&gf(2, 1), &[vec![1, 1]], 2);
        let codes = vec![rep2.clone(), rep2];
        let partition = BlockPartition::new(vec![2, 2]).unwrap();
        let report = probe_propositions(&outer, &codes, &partition).unwrap();
        assert_eq!(report.minimal_identity, ProbeVerdict::Equal);
        let composed = outer
            .compose(
                &[
                    AccessStructure::threshold(2, 2).unwrap(),
                    AccessStructure::threshold(2, 2).unwrap(),
                ],
                &partition,
            )
            .unwrap();
        assert_eq!(composed.minimal(), sets(&[&[1, 2, 3, 4]]));
    }

    #[test]
    fn probe_duality_undefined_for_full_block() {
        let outer = AccessStructure::threshold(1, 1).unwrap();
        let full = code(&gf(2, 1), &[vec![1]], 1);
        let partition = BlockPartition::new(vec![1]).unwrap();
        let report = probe_propositions(&outer, &[full], &partition).unwrap();
        assert!(matches!(report.duality, ProbeVerdict::Undefined { .. }));
    }

    #[test]
    fn scan_bound_is_enforced() {
        let g = AccessStructure::from_supports(21, sets(&[&[1]])).unwrap();
        assert!(matches!(g.dual(), Err(Error::ScanBound { .. })));
    }

    #[test]
    fn structure_json_roundtrip() {
        let g = AccessStructure::threshold(2, 3).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":3,"minimal":[[1,2],[1,3],[2,3]]}"#);
        let back: AccessStructure = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        // A non-antichain family is rejected on load.
        let bad = r#"{"n":3,"minimal":[[1],[1,2]]}"#;
        assert!(serde_json::from_str::<AccessStructure>(bad).is_err());
    }

    #[test]
    fn partition_json_roundtrip() {
        let p = BlockPartition::new(vec![2, 1]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"blocks":[2,1]}"#);
        assert_eq!(serde_json::from_str::<BlockPartition>(&json).unwrap(), p);
        assert!(serde_json::from_str::<BlockPartition>(r#"{"blocks":[0]}"#).is_err());
    }
}

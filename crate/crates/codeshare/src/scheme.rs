//! Operational secret sharing on top of a vector space construction:
//! dealing shares, reconstructing secrets, and exhaustively auditing
//! perfectness.
//!
//! Dealing is Brickell-style: the dealer draws a vector a with
//! a_1 = secret and hands participant j the inner product with the
//! participant's construction vector. Reconstruction solves for a
//! combination reaching e_1 and takes the same combination of shares.
//! The audit enumerates every dealer vector and buckets by what a
//! coalition sees, turning "learns nothing" into exact counting.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::codes::SupportSet;
use crate::construction::VectorSpaceConstruction;
use crate::galois::FieldElement;
use crate::matfield::{solve_membership, MatrixF};
use crate::{Error, Result};

/// Cap on exhaustive dealer-vector enumeration (q^D vectors).
pub const MAX_AUDIT_VECTORS: u64 = 1 << 16;

/// Deterministic 64-bit generator (splitmix64): the state advances by
/// the golden-ratio constant and the output is a bijective scramble of
/// the state. Dealer randomness derives from this so every bundle is
/// reproducible from its seed.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw reduced into 0..bound (rejection-free).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// SHA-256 over the canonical construction file bytes, hex-encoded.
pub fn construction_digest(construction: &VectorSpaceConstruction) -> String {
    let bytes = serde_json::to_vec(construction).expect("constructions always serialize");
    let hash = Sha256::digest(&bytes);
    hash.iter().map(|b| format!("{:02x}", b)).collect()
}

/// Shares dealt from one dealer vector, tied to a construction by
/// digest. The dealer vector itself is kept only in memory for audits
/// and never serialized.
#[derive(Clone, Debug)]
pub struct ShareBundle {
    construction_digest: String,
    shares: BTreeMap<usize, FieldElement>,
    dealer_vector: Option<Vec<FieldElement>>,
}

impl ShareBundle {
    pub fn construction_digest(&self) -> &str {
        &self.construction_digest
    }

    pub fn shares(&self) -> &BTreeMap<usize, FieldElement> {
        &self.shares
    }

    pub fn share(&self, participant: usize) -> Option<&FieldElement> {
        self.shares.get(&participant)
    }

    pub fn dealer_vector(&self) -> Option<&[FieldElement]> {
        self.dealer_vector.as_deref()
    }
}

/// Deals shares from an explicit dealer vector: share_j = <a, Phi(P_j)>.
/// The secret is a_1.
pub fn deal_from_vector(
    construction: &VectorSpaceConstruction,
    dealer: &[FieldElement],
) -> Result<ShareBundle> {
    if dealer.len() != construction.dim() {
        return Err(Error::Shape(format!(
            "dealer vector has length {}, expected {}",
            dealer.len(),
            construction.dim()
        )));
    }
    if dealer.iter().any(|e| e.field() != construction.field()) {
        return Err(Error::FieldMismatch);
    }
    let field = construction.field();
    let shares = (1..=construction.participants())
        .map(|j| {
            let mut acc = field.zero();
            for (a, v) in dealer.iter().zip(construction.vector(j)) {
                acc = &acc + &(a * v);
            }
            (j, acc)
        })
        .collect();
    Ok(ShareBundle {
        construction_digest: construction_digest(construction),
        shares,
        dealer_vector: Some(dealer.to_vec()),
    })
}

/// Deals shares for a secret: the dealer vector has a_1 = secret and the
/// remaining coordinates drawn from the seeded generator.
pub fn deal(
    construction: &VectorSpaceConstruction,
    secret: &FieldElement,
    seed: u64,
) -> Result<ShareBundle> {
    if secret.field() != construction.field() {
        return Err(Error::FieldMismatch);
    }
    let field = construction.field();
    let mut rng = SplitMix64::new(seed);
    let mut dealer = Vec::with_capacity(construction.dim());
    dealer.push(secret.clone());
    for _ in 1..construction.dim() {
        let enc = rng.next_below(field.size());
        dealer.push(field.element_from_encoding(enc).expect("reduced encoding"));
    }
    deal_from_vector(construction, &dealer)
}

/// Recovers the secret from the shares of a qualified set: find lambda
/// with sum lambda_j Phi(P_j) = e_1 and return sum lambda_j share_j.
///
/// Any superset of a qualified set works. When the provided vectors are
/// linearly dependent the system is overdetermined, and shares that no
/// dealer vector could have produced are reported as inconsistent.
pub fn reconstruct(
    construction: &VectorSpaceConstruction,
    set: &SupportSet,
    shares: &BTreeMap<usize, FieldElement>,
) -> Result<FieldElement> {
    if set.max_index() > construction.participants() {
        return Err(Error::ParticipantRange {
            index: set.max_index(),
            n: construction.participants(),
        });
    }
    let field = construction.field();
    let mut vectors = Vec::with_capacity(set.len());
    let mut provided = Vec::with_capacity(set.len());
    for &j in set.indices() {
        let share = shares.get(&j).ok_or(Error::MissingShare(j))?;
        if share.field() != field {
            return Err(Error::FieldMismatch);
        }
        vectors.push(construction.vector(j).to_vec());
        provided.push(share.clone());
    }
    let lambda = solve_membership(&vectors, &construction.target())
        .ok_or_else(|| Error::UnqualifiedSet(set.to_string()))?;

    // Overdetermined input: every dependence among the vectors must also
    // hold among the shares.
    if !vectors.is_empty() {
        let columns = MatrixF::from_rows(field, vectors.clone())?.transpose();
        for relation in columns.kernel_basis() {
            let mut acc = field.zero();
            for (c, s) in relation.iter().zip(&provided) {
                acc = &acc + &(c * s);
            }
            if !acc.is_zero() {
                return Err(Error::InconsistentShares);
            }
        }
    }

    let mut secret = field.zero();
    for (l, s) in lambda.iter().zip(&provided) {
        secret = &secret + &(l * s);
    }
    Ok(secret)
}

// ---------------------------------------------------------------------
// Perfectness audit
// ---------------------------------------------------------------------

/// One observed share assignment for the audited set, with how often
/// each secret produces it.
#[derive(Clone, Debug)]
pub struct AuditBucket {
    /// Share encodings in the order of the audited set's indices.
    pub shares: Vec<u64>,
    /// secret encoding -> number of dealer vectors.
    pub secret_counts: BTreeMap<u64, u64>,
}

/// Outcome of exhausting all dealer vectors for one coalition.
#[derive(Clone, Debug)]
pub struct AuditReport {
    /// Every bucket shows every secret equally often: the coalition
    /// learns nothing.
    pub perfect: bool,
    /// Every bucket pins down exactly one secret.
    pub determined: bool,
    pub dealer_vectors: u64,
    pub buckets: Vec<AuditBucket>,
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} dealer vectors, {} buckets)",
            if self.determined {
                "DETERMINED"
            } else if self.perfect {
                "PERFECT"
            } else {
                "LEAKY"
            },
            self.dealer_vectors,
            self.buckets.len()
        )
    }
}

/// Share encodings for every dealer vector of a construction, built once
/// and reused across subset audits. Row `index` holds the n shares of
/// the dealer vector whose coordinates are the base-q digits of `index`
/// (so the secret of row `index` is `index % q`).
///
/// The table is filled incrementally: stepping the dealer odometer
/// changes a few coordinates, and each change shifts every share by a
/// precomputed delta, so the build costs O(q^D * n) additions instead of
/// O(q^D * n * D) multiplications.
pub struct ShareTable {
    q: u64,
    dim: usize,
    n: usize,
    rows: Vec<u32>,
}

impl ShareTable {
    pub fn build(construction: &VectorSpaceConstruction) -> Result<Self> {
        let field = construction.field();
        let q = field.size();
        let dim = construction.dim();
        let n = construction.participants();
        let total = q
            .checked_pow(dim as u32)
            .filter(|&t| t <= MAX_AUDIT_VECTORS)
            .ok_or(Error::EnumerationBound { needed: u64::MAX, bound: MAX_AUDIT_VECTORS })?;

        if dim == 1 {
            // One dealer coordinate: row `c` simply holds c * v_j.
            let mut rows = Vec::with_capacity(q as usize * n);
            for a in field.elements() {
                for j in 1..=n {
                    rows.push((&a * &construction.vector(j)[0]).encoding() as u32);
                }
            }
            return Ok(ShareTable { q, dim, n, rows });
        }

        // q^dim <= 2^16 with dim >= 2 keeps q at 256 or below, so the
        // q x q addition table stays small.
        // delta[d][c][j]: share shift for participant j when dealer digit
        // d steps from encoding c to c + 1 (wrapping to 0 at q - 1).
        let elements: Vec<FieldElement> = field.elements().collect();
        let mut delta = vec![vec![vec![0u32; n]; q as usize]; dim];
        for d in 0..dim {
            for c in 0..q as usize {
                let next = &elements[(c + 1) % q as usize];
                let step = next - &elements[c];
                for j in 0..n {
                    delta[d][c][j] = (&step * &construction.vector(j + 1)[d]).encoding() as u32;
                }
            }
        }
        let add: Vec<u32> = {
            // add[a * q + b] = encoding of elements a + b.
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q as usize {
                for b in 0..q as usize {
                    table[a * q as usize + b] = (&elements[a] + &elements[b]).encoding() as u32;
                }
            }
            table
        };

        let mut rows = vec![0u32; (total as usize) * n];
        let mut digits = vec![0u64; dim];
        let mut shares = vec![0u32; n];
        for index in 0..total as usize {
            rows[index * n..(index + 1) * n].copy_from_slice(&shares);
            // Advance the odometer and fold the per-digit deltas in.
            for d in 0..dim {
                let c = digits[d];
                for j in 0..n {
                    shares[j] = add[(shares[j] as u64 * q + delta[d][c as usize][j] as u64) as usize];
                }
                if c + 1 < q {
                    digits[d] = c + 1;
                    break;
                }
                digits[d] = 0;
            }
        }
        Ok(ShareTable { q, dim, n, rows })
    }

    pub fn dealer_vectors(&self) -> u64 {
        self.q.pow(self.dim as u32)
    }

    /// Buckets every dealer vector by the shares the set observes and
    /// counts secrets per bucket.
    pub fn audit(&self, set: &SupportSet) -> Result<AuditReport> {
        if set.max_index() > self.n {
            return Err(Error::ParticipantRange { index: set.max_index(), n: self.n });
        }
        let members: Vec<usize> = set.indices().iter().map(|&j| j - 1).collect();
        let total = self.dealer_vectors();
        let bits = (64 - (self.q - 1).leading_zeros()).max(1) as usize;
        let mut buckets: BTreeMap<Vec<u32>, BTreeMap<u64, u64>> = BTreeMap::new();

        if bits * members.len() <= 128 {
            // Packed fast path: one u128 key per observed share tuple.
            let mut packed: std::collections::HashMap<u128, BTreeMap<u64, u64>> =
                std::collections::HashMap::new();
            for index in 0..total as usize {
                let row = &self.rows[index * self.n..(index + 1) * self.n];
                let mut key: u128 = 0;
                for &j in &members {
                    key = key << bits | row[j] as u128;
                }
                let secret = index as u64 % self.q;
                *packed.entry(key).or_default().entry(secret).or_default() += 1;
            }
            for (key, counts) in packed {
                let mut shares = vec![0u32; members.len()];
                let mut k = key;
                for slot in shares.iter_mut().rev() {
                    *slot = (k & ((1 << bits) - 1)) as u32;
                    k >>= bits;
                }
                buckets.insert(shares, counts);
            }
        } else {
            for index in 0..total as usize {
                let row = &self.rows[index * self.n..(index + 1) * self.n];
                let observed: Vec<u32> = members.iter().map(|&j| row[j]).collect();
                let secret = index as u64 % self.q;
                *buckets.entry(observed).or_default().entry(secret).or_default() += 1;
            }
        }

        let perfect = buckets.values().all(|counts| {
            counts.len() as u64 == self.q
                && counts.values().all(|&c| c == counts.values().next().copied().unwrap_or(0))
        });
        let determined = buckets.values().all(|counts| counts.len() == 1);
        Ok(AuditReport {
            perfect,
            determined,
            dealer_vectors: total,
            buckets: buckets
                .into_iter()
                .map(|(shares, secret_counts)| AuditBucket {
                    shares: shares.into_iter().map(u64::from).collect(),
                    secret_counts,
                })
                .collect(),
        })
    }
}

/// Enumerates all q^D dealer vectors, buckets them by the shares the set
/// observes, and counts secrets per bucket. PERFECT means uniform counts
/// within every bucket; DETERMINED means a single secret per bucket.
pub fn perfectness_audit(
    construction: &VectorSpaceConstruction,
    set: &SupportSet,
) -> Result<AuditReport> {
    ShareTable::build(construction)?.audit(set)
}

// ---------------------------------------------------------------------
// Serialization:
// {"construction_digest": hex, "shares": {"1": int, ...}}
// ---------------------------------------------------------------------

/// On-disk form of a share bundle; share values are canonical encodings
/// and the field is implied by the referenced construction.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ShareFile {
    pub construction_digest: String,
    pub shares: BTreeMap<usize, u64>,
}

impl ShareBundle {
    pub fn to_file(&self) -> ShareFile {
        ShareFile {
            construction_digest: self.construction_digest.clone(),
            shares: self.shares.iter().map(|(&j, e)| (j, e.encoding())).collect(),
        }
    }

    /// Rebinds a share file to its construction, verifying the digest.
    pub fn from_file(file: &ShareFile, construction: &VectorSpaceConstruction) -> Result<Self> {
        let want = construction_digest(construction);
        if file.construction_digest != want {
            return Err(Error::DigestMismatch {
                got: file.construction_digest.clone(),
                want,
            });
        }
        let field = construction.field();
        let mut shares = BTreeMap::new();
        for (&j, &enc) in &file.shares {
            if j == 0 || j > construction.participants() {
                return Err(Error::ParticipantRange { index: j, n: construction.participants() });
            }
            shares.insert(j, field.element_from_encoding(enc)?);
        }
        Ok(ShareBundle {
            construction_digest: file.construction_digest.clone(),
            shares,
            dealer_vector: None,
        })
    }
}

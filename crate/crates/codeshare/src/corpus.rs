//! Desk-scale verification corpus: exhaustive enumeration of small
//! binary codes, seeded random composite instances, and the eight
//! verification suites behind `corpus run`.
//!
//! Every suite is exact: no tolerances, only counted failures. A suite
//! that finds nothing wrong reports the number of cases it exhausted.

use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::access::{probe_propositions, AccessStructure, BlockPartition, ProbeVerdict};
use crate::codes::{reed_solomon, LinearCode, SupportSet};
use crate::construction::{
    code_construction, compose_construction, realizes, sum_normalize, threshold_construction,
    SumNormalized, VectorSpaceConstruction,
};
use crate::galois::{Field, FieldEmbedding, FieldElement};
use crate::matfield::MatrixF;
use crate::scheme::{deal, reconstruct, ShareTable, SplitMix64};
use crate::{Error, Result};

/// Seed for the randomized composite instances; fixed so every run
/// exercises the same corpus.
pub const COMPOSITE_SEED: u64 = 0xC0DE_5EED;

/// Outcome of one verification suite.
pub struct SuiteResult {
    pub id: usize,
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub detail: String,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {} {:<22} {} ({} cases, {:.1}s{}{})",
            self.id,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.elapsed.as_secs_f64(),
            if self.detail.is_empty() { "" } else { "; " },
            self.detail
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, "\n  first failure: {}", first)?;
        }
        Ok(())
    }
}

fn finish(
    id: usize,
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    detail: String,
    start: Instant,
) -> SuiteResult {
    SuiteResult { id, name, cases, failures, detail, elapsed: start.elapsed() }
}

// ---------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------

/// Every binary linear code of length <= n_max, one per subspace, via
/// the RREF-canonical generator matrices: choose pivot columns, then all
/// assignments of the free positions to the right of each pivot.
pub fn binary_codes_up_to(n_max: usize) -> Vec<LinearCode> {
    let f2 = Field::new(2, 1).expect("GF(2) exists");
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            for pivots in (0..n).combinations(k) {
                let free: Vec<(usize, usize)> = (0..k)
                    .flat_map(|i| {
                        let pivots = pivots.clone();
                        ((pivots[i] + 1)..n)
                            .filter(move |j| !pivots.contains(j))
                            .map(move |j| (i, j))
                    })
                    .collect();
                for assignment in 0..(1u64 << free.len()) {
                    let mut rows = vec![vec![0u64; n]; k];
                    for (i, &p) in pivots.iter().enumerate() {
                        rows[i][p] = 1;
                    }
                    for (bit, &(i, j)) in free.iter().enumerate() {
                        rows[i][j] = assignment >> bit & 1;
                    }
                    let generator =
                        MatrixF::from_encodings(&f2, &rows, n).expect("shape is consistent");
                    out.push(LinearCode::from_generator(generator).expect("pivot rows are independent"));
                }
            }
        }
    }
    out
}

/// One randomized composite: a threshold outer structure with its
/// Vandermonde construction, and one random code per block.
pub struct CompositeInstance {
    pub outer_structure: AccessStructure,
    pub outer_construction: VectorSpaceConstruction,
    pub codes: Vec<LinearCode>,
    pub partition: BlockPartition,
}

impl CompositeInstance {
    pub fn composite_structure(&self) -> Result<AccessStructure> {
        let parts: Vec<AccessStructure> =
            self.codes.iter().map(AccessStructure::of_code).collect::<Result<_>>()?;
        self.outer_structure.compose(&parts, &self.partition)
    }

    pub fn composite_construction(&self) -> Result<VectorSpaceConstruction> {
        compose_construction(&self.outer_construction, &self.codes, &self.partition)
    }
}

fn random_full_rank_code(rng: &mut SplitMix64, field: &Field, n: usize, k: usize) -> LinearCode {
    loop {
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.next_below(field.size())).collect())
            .collect();
        let m = MatrixF::from_encodings(field, &rows, n).expect("consistent shape");
        if let Ok(code) = LinearCode::from_generator(m) {
            return code;
        }
    }
}

/// Seeded random composites: outer threshold (t, r) with r <= 3, block
/// codes over GF(2) or GF(3) of length <= 4, composite size <= 10. The
/// outer construction lives over GF(4) or GF(9) so three distinct
/// nonzero evaluation points always exist.
pub fn random_composites(count: usize, seed: u64) -> Vec<CompositeInstance> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = if rng.next_below(2) == 0 { 2 } else { 3 };
        let base = Field::new(p, 1).expect("prime field");
        let outer_field = Field::new(p, 2).expect("quadratic extension");
        let r = 1 + rng.next_below(3) as usize;
        let t = 1 + rng.next_below(r as u64) as usize;

        let mut budget = 10usize;
        let mut sizes = Vec::with_capacity(r);
        for i in 0..r {
            let remaining_blocks = r - i - 1;
            let max = (budget - remaining_blocks).min(4);
            let size = 1 + rng.next_below(max as u64) as usize;
            sizes.push(size);
            budget -= size;
        }
        let codes: Vec<LinearCode> = sizes
            .iter()
            .map(|&n| {
                let k = 1 + rng.next_below(n as u64) as usize;
                random_full_rank_code(&mut rng, &base, n, k)
            })
            .collect();

        out.push(CompositeInstance {
            outer_structure: AccessStructure::threshold(t, r).expect("t <= r"),
            outer_construction: threshold_construction(t, r, &outer_field)
                .expect("r <= q - 1 for the quadratic extension"),
            codes,
            partition: BlockPartition::new(sizes).expect("positive sizes"),
        });
    }
    out
}

// ---------------------------------------------------------------------
// Independent sum-normalization check
// ---------------------------------------------------------------------

/// Checks both normalization conditions by full codeword enumeration of
/// the output code: the minimal-support antichains of input and output
/// agree, and every minimal support owns a recorded witness codeword
/// with full support and nonzero coordinate sum, as well as some
/// enumerated codeword with the same properties.
pub fn check_sum_normalization(
    original: &LinearCode,
    normalized: &SumNormalized,
) -> std::result::Result<(), String> {
    let field = normalized.field().clone();
    let before = original.minimal_supports().map_err(|e| e.to_string())?;
    let after = normalized.code.minimal_supports().map_err(|e| e.to_string())?;
    if before != after {
        return Err(format!(
            "minimal supports changed: {:?} -> {:?}",
            before, after
        ));
    }

    let sum = |w: &[FieldElement]| w.iter().fold(field.zero(), |acc, e| &acc + e);
    let support_of = |w: &[FieldElement]| {
        SupportSet::new(
            w.iter()
                .enumerate()
                .filter_map(|(i, e)| (!e.is_zero()).then_some(i + 1))
                .collect(),
        )
        .ok()
    };

    if normalized.witnesses.supports() != before.as_slice() {
        return Err("witness table does not list the minimal supports in order".into());
    }
    for (support, witness) in before.iter().zip(normalized.witnesses.witnesses()) {
        if support_of(witness).as_ref() != Some(support) {
            return Err(format!("witness for {} has the wrong support", support));
        }
        if !normalized.code.contains(witness) {
            return Err(format!("witness for {} is not a codeword", support));
        }
        if sum(witness).is_zero() {
            return Err(format!("witness for {} has zero coordinate sum", support));
        }
    }

    // Independent of the witness table: some enumerated codeword must
    // realize each minimal support with nonzero sum.
    let mut satisfied = vec![false; before.len()];
    for word in normalized.code.codewords().map_err(|e| e.to_string())? {
        if sum(&word).is_zero() {
            continue;
        }
        if let Some(sup) = support_of(&word) {
            if let Ok(pos) = before.binary_search(&sup) {
                satisfied[pos] = true;
            }
        }
    }
    if let Some(missing) = satisfied.iter().position(|s| !s) {
        return Err(format!(
            "no enumerated codeword with support {} has nonzero sum",
            before[missing]
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------

/// Suite 1: every binary code of length <= 5 admits a construction that
/// realizes its structure.
pub fn suite_corollary() -> SuiteResult {
    let start = Instant::now();
    let corpus = binary_codes_up_to(5);
    let mut failures = Vec::new();
    for code in &corpus {
        let outcome = code_construction(code)
            .and_then(|phi| Ok((AccessStructure::of_code(code)?, phi)))
            .and_then(|(gamma, phi)| realizes(&phi, &gamma));
        match outcome {
            Ok(verdict) if verdict.holds => {}
            Ok(verdict) => failures.push(format!(
                "{:?}: counterexample {:?}",
                code, verdict.counterexample
            )),
            Err(e) => failures.push(format!("{:?}: {}", code, e)),
        }
    }
    let detail = format!("all binary codes with n <= 5 ({} codes)", corpus.len());
    finish(1, "corollary", corpus.len(), failures, detail, start)
}

/// Suite 2: sum normalization preserves the structure and equips every
/// minimal support with a nonzero-sum codeword, on the same corpus.
pub fn suite_lemma() -> SuiteResult {
    let start = Instant::now();
    let corpus = binary_codes_up_to(5);
    let mut failures = Vec::new();
    let mut extended = 0usize;
    for code in &corpus {
        match sum_normalize(code) {
            Ok(nz) => {
                if !nz.chain.is_empty() {
                    extended += 1;
                }
                if let Err(msg) = check_sum_normalization(code, &nz) {
                    failures.push(format!("{:?}: {}", code, msg));
                }
            }
            Err(e) => failures.push(format!("{:?}: {}", code, e)),
        }
    }
    let detail = format!("{} codes needed a field extension", extended);
    finish(2, "sum-normalization", corpus.len(), failures, detail, start)
}

/// Suite 3: on randomized composites, the composite construction
/// realizes the composite structure.
pub fn suite_theorem() -> SuiteResult {
    let start = Instant::now();
    let instances = random_composites(50, COMPOSITE_SEED);
    let mut failures = Vec::new();
    for (i, instance) in instances.iter().enumerate() {
        let outcome = instance
            .composite_structure()
            .and_then(|gamma| Ok((instance.composite_construction()?, gamma)))
            .and_then(|(phi, gamma)| realizes(&phi, &gamma));
        match outcome {
            Ok(verdict) if verdict.holds => {}
            Ok(verdict) => failures.push(format!(
                "instance {}: counterexample {:?}",
                i, verdict.counterexample
            )),
            Err(e) => failures.push(format!("instance {}: {}", i, e)),
        }
    }
    finish(3, "composite-theorem", instances.len(), failures, "50 seeded composites".into(), start)
}

/// Suite 4: Reed-Solomon codes have pure threshold structures,
/// threshold(n - k + 1, n), over GF(7) and GF(8).
pub fn suite_remark_rs() -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for field in [Field::new(7, 1), Field::new(2, 3)] {
        let field = field.expect("small fields exist");
        for n in 2..=5usize {
            for k in 2..=n {
                cases += 1;
                let outcome = field
                    .nonzero_elements(n)
                    .and_then(|points| reed_solomon(&field, n, k, &points))
                    .and_then(|rs| AccessStructure::of_code(&rs))
                    .and_then(|got| Ok((got, AccessStructure::threshold(n - k + 1, n)?)));
                match outcome {
                    Ok((got, want)) if got == want => {}
                    Ok((got, _)) => failures.push(format!(
                        "RS({},{}) over {}: structure {:?}",
                        n, k, field, got
                    )),
                    Err(e) => failures.push(format!("RS({},{}) over {}: {}", n, k, field, e)),
                }
            }
        }
    }
    finish(4, "reed-solomon", cases, failures, "2 <= k <= n <= 5 over GF(7), GF(8)".into(), start)
}

/// Suite 5: the minimal-sets identity holds on every suite 3 instance:
/// the composite's minimal sets are exactly the block-wise unions of
/// minimal sets over the outer minimal sets.
pub fn suite_probe_minimal() -> SuiteResult {
    let start = Instant::now();
    let instances = random_composites(50, COMPOSITE_SEED);
    let mut failures = Vec::new();
    for (i, instance) in instances.iter().enumerate() {
        match probe_propositions(&instance.outer_structure, &instance.codes, &instance.partition) {
            Ok(report) => match report.minimal_identity {
                ProbeVerdict::Equal => {}
                other => failures.push(format!("instance {}: {}", i, other)),
            },
            Err(e) => failures.push(format!("instance {}: {}", i, e)),
        }
    }
    finish(5, "probe-minimal-sets", instances.len(), failures, "verdict (a) on suite 3 corpus".into(), start)
}

/// Suite 6: the duality probe agrees with a direct subset-scan oracle on
/// every suite 3 instance, and the candidate counterexample (trivial
/// outer structure over the even-weight [3,2] binary code) is confirmed:
/// the duality identity fails there first at {1,2}.
pub fn suite_probe_duality() -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut tally = DualityTally::default();

    let instances = random_composites(50, COMPOSITE_SEED);
    for (i, instance) in instances.iter().enumerate() {
        check_duality_instance(
            &format!("instance {}", i),
            &instance.outer_structure,
            &instance.codes,
            &instance.partition,
            &mut failures,
            &mut tally,
        );
    }

    // The candidate counterexample, confirmed rather than assumed.
    let f2 = Field::new(2, 1).expect("GF(2) exists");
    let even32 = LinearCode::from_generator(
        MatrixF::from_encodings(&f2, &[vec![1, 1, 0], vec![0, 1, 1]], 3).expect("shape"),
    )
    .expect("full rank");
    let outer = AccessStructure::threshold(1, 1).expect("trivial threshold");
    let partition = BlockPartition::new(vec![3]).expect("positive");
    let report = check_duality_instance(
        "even-weight [3,2]",
        &outer,
        &[even32],
        &partition,
        &mut failures,
        &mut tally,
    );
    match report.map(|r| r.duality) {
        Some(ProbeVerdict::Unequal { counterexample })
            if counterexample == SupportSet::new(vec![1, 2]).expect("valid") => {}
        other => failures.push(format!(
            "even-weight [3,2]: expected UNEQUAL at {{1,2}}, got {:?}",
            other.map(|v| v.to_string())
        )),
    }

    let cases = instances.len() + 1;
    let detail = format!(
        "{} equal, {} unequal, {} undefined",
        tally.equal, tally.unequal, tally.undefined
    );
    finish(6, "probe-duality", cases, failures, detail, start)
}

#[derive(Default)]
struct DualityTally {
    equal: usize,
    unequal: usize,
    undefined: usize,
}

/// Runs the probe on one instance and checks its duality verdict against
/// a direct recomputation of both sides; a reported counterexample must
/// actually distinguish them.
fn check_duality_instance(
    label: &str,
    outer: &AccessStructure,
    codes: &[LinearCode],
    partition: &BlockPartition,
    failures: &mut Vec<String>,
    tally: &mut DualityTally,
) -> Option<crate::access::ProbeReport> {
    let report = match probe_propositions(outer, codes, partition) {
        Ok(r) => r,
        Err(e) => {
            failures.push(format!("{}: probe failed: {}", label, e));
            return None;
        }
    };
    let both_sides = || -> Result<Option<(AccessStructure, AccessStructure)>> {
        let duals: Vec<LinearCode> = match codes.iter().map(LinearCode::dual).collect() {
            Ok(d) => d,
            Err(Error::ZeroDualCode) => return Ok(None),
            Err(e) => return Err(e),
        };
        let parts: Vec<AccessStructure> =
            codes.iter().map(AccessStructure::of_code).collect::<Result<_>>()?;
        let dual_parts: Vec<AccessStructure> =
            duals.iter().map(AccessStructure::of_code).collect::<Result<_>>()?;
        let lhs = outer.compose(&parts, partition)?.dual()?;
        let rhs = outer.dual()?.compose(&dual_parts, partition)?;
        Ok(Some((lhs, rhs)))
    };
    match (both_sides(), &report.duality) {
        (Ok(None), ProbeVerdict::Undefined { .. }) => tally.undefined += 1,
        (Ok(Some((lhs, rhs))), ProbeVerdict::Equal) if lhs == rhs => tally.equal += 1,
        (Ok(Some((lhs, rhs))), ProbeVerdict::Unequal { counterexample }) if lhs != rhs => {
            if lhs.is_qualified(counterexample) != rhs.is_qualified(counterexample) {
                tally.unequal += 1;
            } else {
                failures.push(format!(
                    "{}: reported counterexample {} does not distinguish the sides",
                    label, counterexample
                ));
            }
        }
        (Ok(_), verdict) => failures.push(format!(
            "{}: probe verdict {} disagrees with the scan oracle",
            label, verdict
        )),
        (Err(e), _) => failures.push(format!("{}: oracle failed: {}", label, e)),
    }
    Some(report)
}

/// Suite 7: on constructions small enough for exhaustive dealing,
/// reconstruct(deal(secret)) returns the secret for every qualified set
/// (five seeds each), every unqualified set audits PERFECT, and every
/// qualified set audits DETERMINED.
pub fn suite_scheme() -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut selected: Vec<(String, VectorSpaceConstruction, AccessStructure)> = Vec::new();

    let audit_budget: u64 = 1 << 24;
    let eligible = |phi: &VectorSpaceConstruction| -> bool {
        let q = phi.field().size();
        match q.checked_pow(phi.dim() as u32) {
            Some(vectors) if vectors <= crate::scheme::MAX_AUDIT_VECTORS => {
                vectors.saturating_mul(1 << phi.participants()) <= audit_budget
            }
            _ => false,
        }
    };

    for instance in random_composites(50, COMPOSITE_SEED) {
        if selected.len() >= 5 {
            break;
        }
        let (Ok(phi), Ok(gamma)) =
            (instance.composite_construction(), instance.composite_structure())
        else {
            continue;
        };
        if eligible(&phi) {
            selected.push((format!("composite n={}", phi.participants()), phi, gamma));
        }
    }
    for code in binary_codes_up_to(5) {
        if selected.len() >= 20 {
            break;
        }
        let (Ok(phi), Ok(gamma)) = (code_construction(&code), AccessStructure::of_code(&code))
        else {
            continue;
        };
        if eligible(&phi) {
            selected.push((format!("{:?}", code), phi, gamma));
        }
    }

    for (label, phi, gamma) in &selected {
        let field = phi.field().clone();
        let n = phi.participants();

        let table = match ShareTable::build(phi) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("{}: share table: {}", label, e));
                continue;
            }
        };
        for mask in 0..(1u64 << n) as u32 {
            let subset = SupportSet::from_mask(mask);
            let qualified = gamma.is_qualified(&subset);
            match table.audit(&subset) {
                Ok(report) => {
                    if qualified && !report.determined {
                        failures.push(format!("{}: qualified {} not DETERMINED", label, subset));
                    }
                    if !qualified && !report.perfect {
                        failures.push(format!("{}: unqualified {} not PERFECT", label, subset));
                    }
                }
                Err(e) => failures.push(format!("{}: audit {}: {}", label, subset, e)),
            }
            if !qualified {
                continue;
            }
            for seed in 0..5u64 {
                let secret = field
                    .element_from_encoding(seed % field.size())
                    .expect("reduced encoding");
                let outcome = deal(phi, &secret, seed)
                    .and_then(|bundle| reconstruct(phi, &subset, bundle.shares()));
                match outcome {
                    Ok(got) if got == secret => {}
                    Ok(got) => failures.push(format!(
                        "{}: {} seed {}: reconstructed {} instead of {}",
                        label, subset, seed, got, secret
                    )),
                    Err(e) => failures.push(format!("{}: {} seed {}: {}", label, subset, seed, e)),
                }
            }
        }
    }

    let detail = format!("{} constructions audited exhaustively", selected.len());
    finish(7, "scheme", selected.len(), failures, detail, start)
}

/// Suite 8: field axioms exhaustively for all fields of size <= 16,
/// embedding homomorphisms for GF(4) -> GF(16) and GF(2) -> GF(256),
/// and rank-nullity on 500 random matrices.
pub fn suite_algebra() -> SuiteResult {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0usize;

    let fields: Vec<(u64, usize)> = vec![
        (2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4),
    ];
    for (p, m) in fields {
        cases += 1;
        let field = match Field::new(p, m) {
            Ok(f) => f,
            Err(e) => {
                failures.push(format!("GF({}^{}): {}", p, m, e));
                continue;
            }
        };
        if let Err(msg) = check_field_axioms(&field) {
            failures.push(format!("{}: {}", field, msg));
        }
    }

    for (src, dst) in [((2u64, 2usize), (2u64, 4usize)), ((2, 1), (2, 8))] {
        cases += 1;
        let outcome = (|| -> Result<std::result::Result<(), String>> {
            let source = Field::new(src.0, src.1)?;
            let target = Field::new(dst.0, dst.1)?;
            let e = FieldEmbedding::new(&source, &target)?;
            Ok(check_embedding(&e))
        })();
        match outcome {
            Ok(Ok(())) => {}
            Ok(Err(msg)) => failures.push(msg),
            Err(e) => failures.push(format!("embedding {:?} -> {:?}: {}", src, dst, e)),
        }
    }

    let mut rng = SplitMix64::new(8);
    let pool: Vec<Field> = [(2, 1), (3, 1), (2, 2), (5, 1)]
        .into_iter()
        .map(|(p, m)| Field::new(p, m).expect("small fields exist"))
        .collect();
    for _ in 0..500 {
        cases += 1;
        let field = &pool[rng.next_below(pool.len() as u64) as usize];
        let rows = 1 + rng.next_below(5) as usize;
        let cols = 1 + rng.next_below(5) as usize;
        let encs: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.next_below(field.size())).collect())
            .collect();
        let m = MatrixF::from_encodings(field, &encs, cols).expect("consistent shape");
        let kernel = m.kernel_basis();
        if m.rank() + kernel.len() != cols {
            failures.push(format!("rank-nullity violated for {:?}", m));
        }
        for v in &kernel {
            if !m.mat_vec(v).iter().all(FieldElement::is_zero) {
                failures.push(format!("kernel vector not annihilated for {:?}", m));
            }
        }
    }

    finish(8, "algebra", cases, failures, "axioms, embeddings, rank-nullity".into(), start)
}

fn check_field_axioms(field: &Field) -> std::result::Result<(), String> {
    let els: Vec<FieldElement> = field.elements().collect();
    for a in &els {
        if &(a + &field.zero()) != a {
            return Err(format!("additive identity fails at {}", a));
        }
        if &(a * &field.one()) != a {
            return Err(format!("multiplicative identity fails at {}", a));
        }
        if !(a + &(-a)).is_zero() {
            return Err(format!("additive inverse fails at {}", a));
        }
        if !a.is_zero() {
            let inv = a.inverse().map_err(|e| e.to_string())?;
            if !(a * &inv).is_one() {
                return Err(format!("multiplicative inverse fails at {}", a));
            }
        }
        for b in &els {
            if a + b != b + a {
                return Err(format!("addition not commutative at {}, {}", a, b));
            }
            if a * b != b * a {
                return Err(format!("multiplication not commutative at {}, {}", a, b));
            }
            for c in &els {
                if &(a + b) + c != a + &(b + c) {
                    return Err(format!("addition not associative at {}, {}, {}", a, b, c));
                }
                if &(a * b) * c != a * &(b * c) {
                    return Err(format!("multiplication not associative at {}, {}, {}", a, b, c));
                }
                if a * &(b + c) != &(a * b) + &(a * c) {
                    return Err(format!("distributivity fails at {}, {}, {}", a, b, c));
                }
            }
        }
    }
    Ok(())
}

fn check_embedding(e: &FieldEmbedding) -> std::result::Result<(), String> {
    let els: Vec<FieldElement> = e.source().elements().collect();
    let mut seen = std::collections::HashSet::new();
    for a in &els {
        if !seen.insert(e.apply(a).encoding()) {
            return Err(format!("embedding of {} not injective at {}", e.source(), a));
        }
        for b in &els {
            if e.apply(&(a + b)) != &e.apply(a) + &e.apply(b) {
                return Err(format!("embedding not additive at {}, {}", a, b));
            }
            if e.apply(&(a * b)) != &e.apply(a) * &e.apply(b) {
                return Err(format!("embedding not multiplicative at {}, {}", a, b));
            }
        }
    }
    Ok(())
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteResult> {
    vec![
        suite_corollary(),
        suite_lemma(),
        suite_theorem(),
        suite_remark_rs(),
        suite_probe_minimal(),
        suite_probe_duality(),
        suite_scheme(),
        suite_algebra(),
    ]
}

/// Runs a single suite by its 1-based id.
pub fn run_one(id: usize) -> Option<SuiteResult> {
    match id {
        1 => Some(suite_corollary()),
        2 => Some(suite_lemma()),
        3 => Some(suite_theorem()),
        4 => Some(suite_remark_rs()),
        5 => Some(suite_probe_minimal()),
        6 => Some(suite_probe_duality()),
        7 => Some(suite_scheme()),
        8 => Some(suite_algebra()),
        _ => None,
    }
}

//! Command-line front end: batch construction, verification, dealing,
//! and auditing over JSON files.
//!
//! Exit codes: 0 on success or a verified claim, 1 on a mathematically
//! meaningful failure (a realizes counterexample, a probe inequality, an
//! audit failure, a failed corpus suite), 2 on invalid input or a
//! violated precondition.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use codeshare::access::{probe_propositions, AccessStructure, BlockPartition, ProbeVerdict};
use codeshare::codes::{reed_solomon, LinearCode, SupportSet};
use codeshare::construction::{
    code_construction, compose_construction, realizes, sum_normalize, threshold_construction,
    VectorSpaceConstruction,
};
use codeshare::corpus;
use codeshare::galois::Field;
use codeshare::scheme::{
    construction_digest, deal, perfectness_audit, reconstruct, ShareBundle, ShareFile,
};

#[derive(Parser)]
#[command(name = "codeshare", version, about = "Secret sharing schemes built from linear codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field files.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Linear code files.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Access structure files.
    #[command(subcommand)]
    Structure(StructureCmd),
    /// Vector space constructions.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Dealing and reconstructing shares.
    #[command(subcommand)]
    Share(ShareCmd),
    /// Exhaustive perfectness audits.
    #[command(subcommand)]
    Audit(AuditCmd),
    /// Empirical probes of the composition identities.
    #[command(subcommand)]
    Probe(ProbeCmd),
    /// The desk-scale verification corpus.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Write the field GF(p^m) with the canonical smallest modulus.
    New {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// List the minimal codeword supports of a code.
    MinimalSupports {
        code: PathBuf,
        /// Also write the induced access structure.
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write the dual code.
    Dual {
        code: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write a Reed-Solomon code.
    Rs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Field file.
        #[arg(long)]
        field: PathBuf,
        /// Evaluation point encodings; defaults to the first n nonzero
        /// elements.
        #[arg(long, value_delimiter = ',')]
        points: Option<Vec<u64>>,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Subcommand)]
enum StructureCmd {
    /// Write the (t, n) threshold structure.
    Threshold {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Compose block structures under an outer structure.
    Compose {
        outer: PathBuf,
        /// One structure file per block.
        #[arg(required = true)]
        parts: Vec<PathBuf>,
        #[command(flatten)]
        blocks: BlocksArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write the dual structure.
    Dual {
        structure: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Write the access structure of a code.
    OfCode {
        code: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Rescale a code so every minimal support owns a nonzero-sum
    /// codeword; writes the normalized code.
    Normalize {
        code: PathBuf,
        #[command(flatten)]
        out: OutputArg,
        /// Also write the witness table.
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Build the composite construction from an outer construction and
    /// one code per block.
    Compose {
        outer: PathBuf,
        #[arg(required = true)]
        codes: Vec<PathBuf>,
        #[command(flatten)]
        blocks: BlocksArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Build the construction realizing a single code's structure.
    Code {
        code: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Build the Vandermonde construction for a threshold structure.
    Threshold {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        field: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Check by exhaustive subset scan that a construction realizes a
    /// structure. Exit 1 with the first counterexample when it does not.
    Verify {
        construction: PathBuf,
        structure: PathBuf,
        #[command(flatten)]
        scan: ScanArg,
    },
}

#[derive(Subcommand)]
enum ShareCmd {
    /// Deal shares for a secret with a seeded dealer vector.
    Deal {
        construction: PathBuf,
        /// Secret as a canonical field encoding.
        #[arg(long)]
        secret: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Reconstruct the secret from a share file.
    Reconstruct {
        construction: PathBuf,
        shares: PathBuf,
        /// Participants to use, e.g. --participants 1,2.
        #[arg(long, value_delimiter = ',', required = true)]
        participants: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum AuditCmd {
    /// Enumerate every dealer vector and verify that the coalition's
    /// view is PERFECT (unqualified) or DETERMINED (qualified).
    Perfect {
        construction: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        participants: Vec<usize>,
        /// Print the share-bucket distribution table.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Subcommand)]
enum ProbeCmd {
    /// Probe the minimal-sets and duality identities for a composite of
    /// codes. Exit 1 when an identity fails.
    Propositions {
        outer: PathBuf,
        #[arg(required = true)]
        codes: Vec<PathBuf>,
        #[command(flatten)]
        blocks: BlocksArg,
        #[command(flatten)]
        scan: ScanArg,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run the verification suites and print one line per suite.
    Run {
        /// Run a single suite (1..=8) instead of all.
        #[arg(long)]
        suite: Option<usize>,
    },
}

#[derive(Args)]
struct OutputArg {
    /// Write the resulting JSON to this path.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BlocksArg {
    /// Block sizes, e.g. --blocks 2,1.
    #[arg(long, value_delimiter = ',', required = true)]
    blocks: Vec<usize>,
}

#[derive(Args)]
struct ScanArg {
    /// Refuse subset scans larger than this many subsets.
    #[arg(long, default_value_t = 1 << 20)]
    max_subsets: u64,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))
}

/// Canonical compact JSON, exactly the bytes the digest covers.
fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let bytes = serde_json::to_vec(value).context("serializing")?;
    std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn maybe_write<T: Serialize>(out: &OutputArg, value: &T) -> Result<()> {
    if let Some(path) = &out.output {
        write_json(path.as_path(), value)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn check_scan(scan: &ScanArg, participants: usize) -> Result<()> {
    let needed = 1u64
        .checked_shl(participants as u32)
        .ok_or_else(|| anyhow!("2^{} subsets overflow the scan budget", participants))?;
    if needed > scan.max_subsets {
        bail!(
            "scanning {} participants needs {} subsets, above the --max-subsets bound {}",
            participants,
            needed,
            scan.max_subsets
        );
    }
    Ok(())
}

fn support_set(participants: &[usize]) -> Result<SupportSet> {
    SupportSet::new(participants.to_vec()).map_err(Into::into)
}

fn load_composite_inputs(
    outer: &Path,
    code_paths: &[PathBuf],
    blocks: &BlocksArg,
) -> Result<(Vec<LinearCode>, BlockPartition)> {
    let codes: Vec<LinearCode> = code_paths
        .iter()
        .map(|p| read_json::<LinearCode>(p))
        .collect::<Result<_>>()?;
    let partition = BlockPartition::new(blocks.blocks.clone())
        .with_context(|| format!("partition for {}", outer.display()))?;
    Ok((codes, partition))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Field(FieldCmd::New { p, m, out }) => {
            let field = Field::new(p, m)?;
            println!(
                "{} with modulus {:?} (size {})",
                field,
                field.modulus(),
                field.size()
            );
            maybe_write(&out, &field)?;
            Ok(0)
        }

        Command::Code(CodeCmd::MinimalSupports { code, out }) => {
            let code: LinearCode = read_json(&code)?;
            let structure = AccessStructure::of_code(&code)?;
            println!("{} minimal supports:", structure.minimal().len());
            for s in structure.minimal() {
                println!("  {}", s);
            }
            maybe_write(&out, &structure)?;
            Ok(0)
        }
        Command::Code(CodeCmd::Dual { code, out }) => {
            let code: LinearCode = read_json(&code)?;
            let dual = code.dual()?;
            println!("dual is a {:?}", dual);
            maybe_write(&out, &dual)?;
            Ok(0)
        }
        Command::Code(CodeCmd::Rs { n, k, field, points, out }) => {
            let field: Field = read_json(&field)?;
            let points = match points {
                Some(encs) => encs
                    .into_iter()
                    .map(|e| field.element_from_encoding(e))
                    .collect::<codeshare::Result<Vec<_>>>()?,
                None => field.nonzero_elements(n)?,
            };
            let code = reed_solomon(&field, n, k, &points)?;
            println!("built {:?}", code);
            maybe_write(&out, &code)?;
            Ok(0)
        }

        Command::Structure(StructureCmd::Threshold { t, n, out }) => {
            let structure = AccessStructure::threshold(t, n)?;
            println!(
                "threshold ({},{}) with {} minimal sets",
                t,
                n,
                structure.minimal().len()
            );
            maybe_write(&out, &structure)?;
            Ok(0)
        }
        Command::Structure(StructureCmd::Compose { outer, parts, blocks, out }) => {
            let outer_structure: AccessStructure = read_json(&outer)?;
            let part_structures: Vec<AccessStructure> = parts
                .iter()
                .map(|p| read_json::<AccessStructure>(p))
                .collect::<Result<_>>()?;
            let partition = BlockPartition::new(blocks.blocks.clone())?;
            let composite = outer_structure.compose(&part_structures, &partition)?;
            print_structure("composite", &composite);
            maybe_write(&out, &composite)?;
            Ok(0)
        }
        Command::Structure(StructureCmd::Dual { structure, out }) => {
            let structure: AccessStructure = read_json(&structure)?;
            let dual = structure.dual()?;
            print_structure("dual", &dual);
            maybe_write(&out, &dual)?;
            Ok(0)
        }
        Command::Structure(StructureCmd::OfCode { code, out }) => {
            let code: LinearCode = read_json(&code)?;
            let structure = AccessStructure::of_code(&code)?;
            print_structure("structure", &structure);
            maybe_write(&out, &structure)?;
            Ok(0)
        }

        Command::Construct(ConstructCmd::Normalize { code, out, witnesses }) => {
            let code: LinearCode = read_json(&code)?;
            let normalized = sum_normalize(&code)?;
            println!(
                "normalized over {} after {} field extension(s); parity check {:?}",
                normalized.field(),
                normalized.chain.len(),
                normalized.parity.encodings()
            );
            maybe_write(&out, &normalized.code)?;
            if let Some(path) = witnesses {
                write_json(&path, &normalized.witnesses)?;
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Construct(ConstructCmd::Compose { outer, codes, blocks, out }) => {
            let outer_construction: VectorSpaceConstruction = read_json(&outer)?;
            let (code_list, partition) = load_composite_inputs(&outer, &codes, &blocks)?;
            let phi = compose_construction(&outer_construction, &code_list, &partition)?;
            print_construction(&phi);
            maybe_write(&out, &phi)?;
            Ok(0)
        }
        Command::Construct(ConstructCmd::Code { code, out }) => {
            let code: LinearCode = read_json(&code)?;
            let phi = code_construction(&code)?;
            print_construction(&phi);
            maybe_write(&out, &phi)?;
            Ok(0)
        }
        Command::Construct(ConstructCmd::Threshold { t, n, field, out }) => {
            let field: Field = read_json(&field)?;
            let phi = threshold_construction(t, n, &field)?;
            print_construction(&phi);
            maybe_write(&out, &phi)?;
            Ok(0)
        }
        Command::Construct(ConstructCmd::Verify { construction, structure, scan }) => {
            let phi: VectorSpaceConstruction = read_json(&construction)?;
            let gamma: AccessStructure = read_json(&structure)?;
            check_scan(&scan, phi.participants())?;
            let verdict = realizes(&phi, &gamma)?;
            match verdict.counterexample {
                None => {
                    println!("realizes: true ({} subsets scanned)", verdict.subsets_scanned);
                    Ok(0)
                }
                Some(ce) => {
                    println!(
                        "realizes: false (counterexample {}: {})",
                        ce.subset, ce.direction
                    );
                    Ok(1)
                }
            }
        }

        Command::Share(ShareCmd::Deal { construction, secret, seed, out }) => {
            let phi: VectorSpaceConstruction = read_json(&construction)?;
            let secret = phi.field().element_from_encoding(secret)?;
            let bundle = deal(&phi, &secret, seed)?;
            println!(
                "dealt {} shares over {} (digest {})",
                phi.participants(),
                phi.field(),
                &bundle.construction_digest()[..12]
            );
            for (j, share) in bundle.shares() {
                println!("  participant {}: {}", j, share);
            }
            maybe_write(&out, &bundle.to_file())?;
            Ok(0)
        }
        Command::Share(ShareCmd::Reconstruct { construction, shares, participants }) => {
            let phi: VectorSpaceConstruction = read_json(&construction)?;
            let file: ShareFile = read_json(&shares)?;
            let bundle = ShareBundle::from_file(&file, &phi)?;
            let set = support_set(&participants)?;
            let secret = reconstruct(&phi, &set, bundle.shares())?;
            println!("secret: {}", secret);
            Ok(0)
        }

        Command::Audit(AuditCmd::Perfect { construction, participants, table }) => {
            let phi: VectorSpaceConstruction = read_json(&construction)?;
            let set = support_set(&participants)?;
            let qualified = codeshare::matfield::solve_membership(
                &set.indices().iter().map(|&j| phi.vector(j).to_vec()).collect::<Vec<_>>(),
                &phi.target(),
            )
            .is_some();
            let report = perfectness_audit(&phi, &set)?;
            println!(
                "audit {}: {} ({})",
                set,
                report,
                if qualified { "qualified" } else { "unqualified" }
            );
            if table {
                for bucket in &report.buckets {
                    println!("  shares {:?}: secrets {:?}", bucket.shares, bucket.secret_counts);
                }
            }
            let pass = if qualified { report.determined } else { report.perfect };
            Ok(if pass { 0 } else { 1 })
        }

        Command::Probe(ProbeCmd::Propositions { outer, codes, blocks, scan }) => {
            let outer_structure: AccessStructure = read_json(&outer)?;
            let (code_list, partition) = load_composite_inputs(&outer, &codes, &blocks)?;
            check_scan(&scan, partition.total())?;
            let report = probe_propositions(&outer_structure, &code_list, &partition)?;
            println!("minimal-sets identity: {}", report.minimal_identity);
            println!("duality identity:      {}", report.duality);
            let unequal = matches!(report.minimal_identity, ProbeVerdict::Unequal { .. })
                || matches!(report.duality, ProbeVerdict::Unequal { .. });
            Ok(if unequal { 1 } else { 0 })
        }

        Command::Corpus(CorpusCmd::Run { suite }) => {
            let results = match suite {
                None => corpus::run_all(),
                Some(id) => vec![corpus::run_one(id)
                    .ok_or_else(|| anyhow!("no suite {}; valid ids are 1..=8", id))?],
            };
            let mut all_pass = true;
            for result in &results {
                println!("{}", result);
                all_pass &= result.passed();
            }
            println!("{}", if all_pass { "all suites passed" } else { "SUITE FAILURES" });
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn print_structure(label: &str, structure: &AccessStructure) {
    println!(
        "{} on {} participants, {} minimal sets:",
        label,
        structure.participants(),
        structure.minimal().len()
    );
    for s in structure.minimal() {
        println!("  {}", s);
    }
}

fn print_construction(phi: &VectorSpaceConstruction) {
    println!(
        "construction over {} with dimension {} for {} participants (digest {})",
        phi.field(),
        phi.dim(),
        phi.participants(),
        &construction_digest(phi)[..12]
    );
    let zeros = phi.zero_participants();
    if !zeros.is_empty() {
        println!("warning: participants {:?} are mapped to the zero vector", zeros);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

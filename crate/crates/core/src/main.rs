use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use fq_stabilizer::descriptor::CodeDescriptor;
use fq_stabilizer::gf::FieldCtx;
use fq_stabilizer::puncture::puncture;
use fq_stabilizer::search::{
    block_code_from_r, circulant_scan, is_alpha_good, sample_good, Alpha, SampleOutcome, ScanOptions,
    DEFAULT_SUBSET_BUDGET,
};
use fq_stabilizer::stabcode::{min_distance, DistanceMode, DistanceOptions, SearchStatus, DEFAULT_BUDGET};
use fq_stabilizer::verify::{all_sparse_codewords, check_kl, code_space_basis, DEFAULT_DENSE_LIMIT};
use fq_stabilizer::{Error, FqMat, Result};

#[derive(Parser)]
#[command(name = "fqstab", version, about = "Stabilizer codes over F_q from symmetric matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a code descriptor and write it back with k filled in
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print n and k
    Report {
        #[arg(long)]
        code: PathBuf,
    },
    /// Exact minimum distance by enumeration of the symplectic dual
    Distance {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        pure: bool,
        /// Stop at the first element of weight at most D and exit with status 1
        #[arg(long, value_name = "D")]
        early_exit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Check the Knill-Laflamme conditions for all errors of weight at most 2t
    VerifyKl {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_DENSE_LIMIT)]
        max_dim: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Dump the code-space basis vectors (dense limit applies to generic codes only)
    Codewords {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DENSE_LIMIT)]
        max_dim: usize,
    },
    /// Scan binary circulant first rows for codes of distance at least D
    SearchCirculant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Comma-separated coefficients c_0,...,c_r
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long)]
        min_d: usize,
        /// Try every binary row, not only palindromic ones
        #[arg(long)]
        all_rows: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Sample fair-coin matrices until one is alpha-good
    SampleGood {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Alpha,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_tries: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Build the [[2n,1]] block code from an alpha-good matrix
    BlockCode {
        #[arg(long = "R", value_name = "FILE")]
        r: PathBuf,
        #[arg(long)]
        alpha: Alpha,
        #[arg(long)]
        out: PathBuf,
    },
    /// Puncture a pure code at one coordinate
    Puncture {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        coord: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Serialize)]
struct SampleSidecar {
    seed: u64,
    tries: u64,
    alpha: String,
    n: usize,
}

fn load_code(path: &Path) -> Result<fq_stabilizer::StabilizerCode> {
    CodeDescriptor::load(path)?.to_code()
}

fn parse_modulus(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|c| c.trim().parse().map_err(|_| Error::Parse(format!("bad modulus coefficient {c:?}"))))
        .collect()
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Build { spec, out } => {
            let mut desc = CodeDescriptor::load(&spec)?;
            let code = desc.to_code()?;
            desc.k = Some(code.k());
            desc.save(&out)?;
            println!("n={}\nk={}", code.n(), code.k());
            Ok(0)
        }
        Command::Report { code } => {
            let code = load_code(&code)?;
            println!("n={}\nk={}", code.n(), code.k());
            Ok(0)
        }
        Command::Distance { code, pure, early_exit, workers, budget } => {
            let code = load_code(&code)?;
            let mode = if pure { DistanceMode::Pure } else { DistanceMode::Standard };
            let report = min_distance(&code, &DistanceOptions { mode, early_exit, workers, budget })?;
            print!("{}", report.to_text());
            Ok(if report.status == SearchStatus::LowerBoundFailed { 1 } else { 0 })
        }
        Command::VerifyKl { code, t, max_dim, workers } => {
            let code = load_code(&code)?;
            let report = check_kl(&code, t, max_dim, workers)?;
            print!("{}", report.to_text());
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Codewords { code, out, max_dim } => {
            let code = load_code(&code)?;
            let text: Vec<String> = if code.quadratic_data().is_some() {
                all_sparse_codewords(&code)?.iter().map(|psi| psi.dump(code.field(), code.k())).collect()
            } else {
                code_space_basis(&code, max_dim)?.iter().map(|psi| psi.dump(code.k())).collect()
            };
            std::fs::write(&out, text.join("\n"))?;
            println!("codewords={}", text.len());
            Ok(0)
        }
        Command::SearchCirculant { n, p, r, modulus, min_d, all_rows, workers, budget } => {
            let modulus = modulus.as_deref().map(parse_modulus).transpose()?;
            let field = FieldCtx::new(p, r, modulus.as_deref())?;
            let hits = circulant_scan(n, &field, min_d, !all_rows, &ScanOptions { workers, budget })?;
            for h in &hits {
                println!("{}", h.to_line());
            }
            Ok(0)
        }
        Command::SampleGood { n, alpha, seed, max_tries, out, workers } => {
            match sample_good(n, alpha, seed, max_tries, workers)? {
                SampleOutcome::Found { r, tries } => {
                    std::fs::write(&out, r.to_fqm())?;
                    let sidecar = SampleSidecar { seed, tries, alpha: alpha.to_string(), n };
                    let mut side = out.clone().into_os_string();
                    side.push(".json");
                    std::fs::write(&side, serde_json::to_string_pretty(&sidecar).expect("sidecar serializes") + "\n")?;
                    println!("found=true\nseed={seed}\ntries={tries}\nalpha={alpha}");
                    Ok(0)
                }
                SampleOutcome::Failure { tries } => {
                    println!("found=false\nseed={seed}\ntries={tries}\nalpha={alpha}");
                    Ok(1)
                }
            }
        }
        Command::BlockCode { r, alpha, out } => {
            let r = FqMat::parse_fqm(&std::fs::read_to_string(&r)?)?;
            let goodness = is_alpha_good(&r, alpha, 1, DEFAULT_SUBSET_BUDGET)?;
            let code = block_code_from_r(&r)?;
            CodeDescriptor::from_code(&code).save(&out)?;
            println!(
                "n={}\nk={}\ngood={}\nguaranteed_d={}",
                code.n(),
                code.k(),
                goodness.good,
                alpha.floor_times(r.rows())
            );
            if let Some(v) = goodness.violation {
                let subset: Vec<String> = v.subset.iter().map(usize::to_string).collect();
                println!("violation={} subset={} weight={}", v.kind, subset.join(","), v.weight);
                return Ok(1);
            }
            Ok(0)
        }
        Command::Puncture { code, coord, out, workers, budget } => {
            let code = load_code(&code)?;
            let opts = DistanceOptions { workers, budget, ..Default::default() };
            let punctured = puncture(&code, coord, &opts)?;
            CodeDescriptor::from_code(&punctured).save(&out)?;
            println!("n={}\nk={}", punctured.n(), punctured.k());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

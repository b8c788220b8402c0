//! Command-line surface: construct MUB families, verify designs and
//! SIC-POVMs, partition qualifying 2-designs, and report MUB-count bounds.
//!
//! Exit codes: 0 = success / property holds, 1 = property fails (with the
//! worst residual or structural witness on stderr), 2 = usage or input
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mubkit::builtin::sic_povm;
use mubkit::constructions::{
    construction_gr, construction_mols, construction_wf, maximal_mubs, pauli_classes,
    simultaneous_diagonalize,
};
use mubkit::designs::{certify, mub_count_bounds, sic_check, CertifyOptions, DesignReport};
use mubkit::io::{read_vector_set, write_vector_set, VectorSetFile};
use mubkit::partition::partition_into_mubs;
use mubkit::tol::{DESIGN_TOL, ORTHOGONALITY_TOL};
use mubkit::{Error, MubFamily, VectorSet};

/// Environment variable overriding the default tolerance (flags win).
const TOL_ENV: &str = "MUBKIT_TOL";

#[derive(Parser)]
#[command(name = "mubkit", version, about = "Mutually unbiased bases and projective designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Pick the maximal construction for the dimension.
    Auto,
    /// Finite-field construction (odd prime powers).
    Wf,
    /// Galois-ring construction (powers of two).
    Gr,
    /// Pauli-class diagonalization (primes).
    Pauli,
    /// Latin-square construction (square dimensions; not maximal).
    Mols,
    /// Built-in SIC-POVM fiducial orbit (d = 2, 3).
    Sic,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a vector set and write it as JSON.
    Construct {
        /// Ambient dimension d.
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Seed for the randomized diagonalization (pauli method only).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a vector-set file as a projective t-design.
    Verify {
        path: PathBuf,
        /// Largest Welch order to evaluate.
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Design-order residual tolerance (default 1e-9, or MUBKIT_TOL).
        #[arg(long)]
        tol: Option<f64>,
        /// Check the SIC-POVM property instead of reporting only.
        #[arg(long)]
        sic: bool,
        /// Random probes for the pointwise check (0 disables it).
        #[arg(long, default_value_t = 100)]
        probes: usize,
        /// Seed for the probe vectors.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fail (exit 1) unless the design order is at least this.
        #[arg(long)]
        expect_design: Option<usize>,
    },
    /// Split a qualifying 2-design into its d+1 unbiased bases.
    Partition {
        path: PathBuf,
        /// Directory receiving one JSON file per recovered basis.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Orthogonality-edge tolerance (default 1e-8, or MUBKIT_TOL).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print lower/upper bounds on the number of MUBs in dimension N.
    Bounds { n: u64 },
}

/// Restore the default SIGPIPE disposition so piping into `head` & friends
/// terminates the process quietly instead of panicking on a write error.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Construct { dim, method, seed, out } => cmd_construct(dim, method, seed, out),
        Command::Verify { path, kmax, tol, sic, probes, seed, expect_design } => {
            cmd_verify(&path, kmax, tol, sic, probes, seed, expect_design)
        }
        Command::Partition { path, out, tol } => cmd_partition(&path, out, tol),
        Command::Bounds { n } => cmd_bounds(n),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn env_tol() -> Option<f64> {
    std::env::var(TOL_ENV).ok().and_then(|s| s.parse().ok())
}

fn resolve_tol(flag: Option<f64>, default: f64) -> f64 {
    flag.or_else(env_tol).unwrap_or(default)
}

fn is_property_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::PartitionSize { .. }
            | Error::AngleSet(_)
            | Error::NotTwoDesign { .. }
            | Error::PartitionStructure(_)
            | Error::NotUnbiased { .. }
            | Error::NotOrthogonalPair { .. }
    )
}

fn cmd_construct(
    dim: usize,
    method: Method,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let (set, provenance) = match method {
        Method::Auto => family_union(maximal_mubs(dim)?),
        Method::Wf => family_union(construction_wf(dim)?),
        Method::Gr => {
            let n = dim
                .is_power_of_two()
                .then(|| dim.trailing_zeros() as usize)
                .filter(|&n| n > 0)
                .ok_or(Error::NotPrimePower(dim as u64))?;
            family_union(construction_gr(n)?)
        }
        Method::Pauli => {
            let classes = pauli_classes(dim)?;
            family_union(simultaneous_diagonalize(&classes, seed)?)
        }
        Method::Mols => {
            let base = (dim as f64).sqrt().round() as usize;
            if base * base != dim || base < 2 {
                return Err(Error::NotPrimePower(dim as u64));
            }
            family_union(construction_mols(base, None)?)
        }
        Method::Sic => {
            let set = sic_povm(dim)?;
            let provenance = mubkit::Provenance {
                construction: "sic".into(),
                parameters: format!("dim={dim}, fiducial=builtin"),
            };
            (set, provenance)
        }
    };
    match out {
        Some(path) => {
            write_vector_set(&path, &set, Some(&provenance))?;
            println!(
                "wrote {} vectors (dim {}) to {}",
                set.len(),
                set.dim(),
                path.display()
            );
        }
        None => {
            let file = VectorSetFile::from_set(&set, Some(&provenance));
            println!("{}", serde_json::to_string_pretty(&file)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_union(fam: MubFamily) -> (VectorSet, mubkit::Provenance) {
    let union = fam.union();
    (union, fam.provenance().clone())
}

fn cmd_verify(
    path: &Path,
    kmax: usize,
    tol: Option<f64>,
    sic: bool,
    probes: usize,
    seed: u64,
    expect_design: Option<usize>,
) -> Result<ExitCode, Error> {
    let (set, _) = read_vector_set(path)?;
    let opts = CertifyOptions {
        k_max: kmax.max(2),
        design_tol: resolve_tol(tol, DESIGN_TOL),
        probes,
        seed,
        ..CertifyOptions::default()
    };
    let report = certify(&set, &opts)?;
    print_report(path, &report, &opts);

    if sic {
        let sic_report = sic_check(&set, opts.overlap_tol);
        if !sic_report.is_sic {
            eprintln!(
                "not a SIC-POVM: size {} (expected {}), worst angle residual {:.3e}",
                sic_report.size, sic_report.expected_size, sic_report.worst_angle_residual
            );
            return Ok(ExitCode::from(1));
        }
    }
    if let Some(t) = expect_design {
        if report.design_order() < t {
            let worst = report
                .welch
                .entries
                .iter()
                .filter(|e| e.k <= t)
                .map(|e| e.residual.abs())
                .fold(0.0, f64::max);
            eprintln!(
                "design order {} below expected {t} (worst residual {worst:.3e})",
                report.design_order()
            );
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(path: &Path, report: &DesignReport, opts: &CertifyOptions) {
    println!("set: {} ({} vectors in C^{})", path.display(), report.size, report.dim);
    println!();
    println!("angle set (cluster tol {:.1e}):", report.angles.cluster_tol());
    println!("  {:<14} multiplicity", "value");
    for (v, m) in report.angles.values().iter().zip(report.angles.multiplicities()) {
        println!("  {v:<14.9} {m}");
    }
    if report.angles.is_ambiguous() {
        println!("  warning: clusters closer than 10x the tolerance; values are ambiguous");
    }
    let regularity = if report.subdegrees.regular { "regular" } else { "not regular" };
    println!("subdegrees: {regularity}");
    println!();
    println!("welch residuals (tol {:.1e}):", opts.design_tol);
    println!("  {:<3} {:<22} {:<22} residual", "k", "sum", "bound");
    for e in &report.welch.entries {
        println!("  {:<3} {:<22.15e} {:<22.15e} {:+.3e}", e.k, e.sum, e.bound, e.residual);
    }
    println!("design order: {}", report.design_order());
    for pp in &report.per_point {
        println!(
            "per-point residual (k = {}, {} probes): {:.3e}",
            pp.k, opts.probes, pp.max_residual
        );
    }
    let tightness = if report.frame.tight { "tight" } else { "not tight" };
    println!(
        "frame bounds: A = {:.12}, B = {:.12} ({tightness}; |F|/d = {:.12})",
        report.frame.lower,
        report.frame.upper,
        report.size as f64 / report.dim as f64
    );
    println!("mub union: {}", if report.mub_union { "yes" } else { "no" });
    println!(
        "sic: {} (size {}, angle target {:.6})",
        if report.sic.is_sic { "yes" } else { "no" },
        report.sic.size,
        report.sic.target_angle
    );
    println!();
    let machine = json!({
        "command": "verify",
        "path": path.display().to_string(),
        "dim": report.dim,
        "size": report.size,
        "angles": report.angles.values(),
        "multiplicities": report.angles.multiplicities(),
        "regular": report.subdegrees.regular,
        "welch": report.welch.entries.iter().map(|e| json!({
            "k": e.k, "sum": e.sum, "bound": e.bound, "residual": e.residual,
        })).collect::<Vec<_>>(),
        "design_order": report.design_order(),
        "per_point": report.per_point.iter().map(|p| json!({
            "k": p.k, "max_residual": p.max_residual,
        })).collect::<Vec<_>>(),
        "frame": {"lower": report.frame.lower, "upper": report.frame.upper, "tight": report.frame.tight},
        "mub_union": report.mub_union,
        "sic": report.sic.is_sic,
    });
    println!("{machine}");
}

fn cmd_partition(
    path: &Path,
    out: Option<PathBuf>,
    tol: Option<f64>,
) -> Result<ExitCode, Error> {
    let (set, _) = read_vector_set(path)?;
    let tol = resolve_tol(tol, ORTHOGONALITY_TOL);
    let fam = match partition_into_mubs(&set, tol) {
        Ok(fam) => fam,
        Err(e) if is_property_failure(&e) => {
            eprintln!("partition failed: {e}");
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e),
    };
    println!(
        "partitioned {} vectors into {} mutually unbiased bases of C^{}",
        set.len(),
        fam.bases().len(),
        fam.dim()
    );
    if let Some(dir) = out {
        std::fs::create_dir_all(&dir)?;
        for (i, basis) in fam.bases().iter().enumerate() {
            let file = dir.join(format!("basis_{i}.json"));
            write_vector_set(&file, basis, Some(fam.provenance()))?;
            println!("  B{i} -> {}", file.display());
        }
    }
    let machine = json!({
        "command": "partition",
        "path": path.display().to_string(),
        "dim": fam.dim(),
        "bases": fam.bases().len(),
        "tol": tol,
    });
    println!("{machine}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(n: u64) -> Result<ExitCode, Error> {
    let report = mub_count_bounds(n)?;
    println!("{} <= M({}) <= {}", report.lower, report.n, report.upper);
    println!("  lower: {}", report.lower_rule);
    println!("  upper: {}", report.upper_rule);
    if let Some(note) = &report.mols_note {
        println!("  note: {note}");
    }
    let machine = json!({
        "command": "bounds",
        "n": report.n,
        "lower": report.lower,
        "upper": report.upper,
        "lower_rule": report.lower_rule,
        "upper_rule": report.upper_rule,
        "mols_note": report.mols_note,
    });
    println!("{machine}");
    Ok(ExitCode::SUCCESS)
}

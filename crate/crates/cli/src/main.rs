//! Command-line front end: exact counts, brute-force enumerations,
//! identity verification sweeps, count tables, and OEIS b-file
//! cross-checks for binary necklaces, Lyndon words, and rotation
//! classes of residue subsets.
//!
//! Exit codes: 0 success, 1 verification failure or sequence mismatch,
//! 2 usage or parameter error. All output is deterministic.

mod bfile;

use clap::{Parser, Subcommand, ValueEnum};
use necklaces::identities::{self, Failure, VerificationReport};
use necklaces::numtheory::divisors;
use necklaces::oracle::Oracle;
use necklaces::{counting, ResidueSubset};
use num_bigint::BigUint;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "necklaces",
    version,
    about = "Exact counts, enumerations, and cross-verified identities for binary necklaces, \
             Lyndon words, and rotation classes of residue subsets",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    /// Cap brute-force enumerations at 2^BITS items (defaults: subset
    /// censuses 2^20, binary words 2^16, orbit walks 2^24)
    #[arg(long, global = true, value_name = "BITS")]
    max_enum: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count in decimal
    Count {
        formula: CountFormula,
        /// Exact period (exact-period, period-classes) or word length (moreau, macmahon)
        #[arg(long)]
        n: Option<u64>,
        /// Density: number of residues in the subset
        #[arg(long)]
        r: Option<u64>,
        /// Modulus / word length
        #[arg(long)]
        k: Option<u64>,
        /// Alphabet size (moreau, macmahon)
        #[arg(long)]
        alphabet: Option<u64>,
    },
    /// List words or subsets, one per line, in lexicographic order
    Enumerate {
        kind: EnumerateKind,
        /// Word length / modulus
        #[arg(long)]
        length: u64,
        /// Restrict to words with this many ones (subsets of this size)
        #[arg(long)]
        density: Option<u64>,
        /// Exact period to filter on (subsets-by-period only)
        #[arg(long)]
        period: Option<u64>,
    },
    /// Sweep one identity over a parameter grid and print a JSON report
    Verify {
        identity: Identity,
        /// Largest modulus / word length in the grid
        #[arg(long)]
        k_max: Option<u64>,
        /// Largest first parameter in the grid (corollary3, corollary4, witness, burnside)
        #[arg(long)]
        n_max: Option<u64>,
        /// Largest prime swept (corollary3, corollary4)
        #[arg(long)]
        p_max: Option<u64>,
        /// Largest prime exponent swept (corollary3)
        #[arg(long)]
        alpha_max: Option<u64>,
        /// Largest factorization argument swept (lemma2)
        #[arg(long)]
        a_max: Option<u64>,
        /// Largest quotient argument swept (lemma3)
        #[arg(long)]
        q_max: Option<u64>,
        /// Alphabet size, repeatable (burnside; default 2 and 3)
        #[arg(long)]
        alphabet: Vec<u64>,
        /// Append one synthetic failure to the report (negative control
        /// for exit-code tests); the report then exits 1 by design
        #[arg(long)]
        seed_failure: bool,
    },
    /// Emit a table of counts over parameter ranges as CSV or JSON
    Table {
        formula: CountFormula,
        /// Modulus / word-length range, e.g. 1..8 (inclusive)
        #[arg(long)]
        k: Option<RangeArg>,
        /// Density range to clip the triangle to (optional)
        #[arg(long)]
        r: Option<RangeArg>,
        /// Word-length range (moreau, macmahon)
        #[arg(long)]
        n: Option<RangeArg>,
        /// Alphabet size (moreau, macmahon)
        #[arg(long)]
        alphabet: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Compare a single-argument formula against a local OEIS b-file
    OeisCheck {
        /// Path to the b-file ("index value" lines, '#' comments)
        bfile: std::path::PathBuf,
        formula: OeisFormula,
        /// Added to each b-file index to obtain the formula argument
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
        /// Alphabet size (moreau, macmahon)
        #[arg(long)]
        alphabet: Option<u64>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CountFormula {
    /// Subsets of Z_k with r members and exact period n
    ExactPeriod,
    /// Rotation classes of subsets of Z_k with r members and exact period n
    PeriodClasses,
    /// Rotation classes of r-member subsets of Z_k (binary necklaces of density r)
    FixedDensity,
    /// Aperiodic binary rotation classes of length k (Lyndon word count)
    Aperiodic,
    /// All binary rotation classes of length k
    Necklaces,
    /// Aperiodic rotation classes of length n over a q-letter alphabet
    Moreau,
    /// All rotation classes of length n over a q-letter alphabet
    Macmahon,
}

impl CountFormula {
    fn name(self) -> &'static str {
        match self {
            CountFormula::ExactPeriod => "exact-period",
            CountFormula::PeriodClasses => "period-classes",
            CountFormula::FixedDensity => "fixed-density",
            CountFormula::Aperiodic => "aperiodic",
            CountFormula::Necklaces => "necklaces",
            CountFormula::Moreau => "moreau",
            CountFormula::Macmahon => "macmahon",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    /// Binary Lyndon words (lexicographically least aperiodic rotations)
    Lyndon,
    /// Lexicographically least word of every binary rotation class
    Necklaces,
    /// Subsets of Z_length with the given density and exact period
    SubsetsByPeriod,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Identity {
    /// Exact-period subset counts: divisor-sum formula vs exhaustive census
    Theorem1,
    /// Fixed-density class counts: closed form vs definitional sum vs census
    Theorem2,
    /// Aperiodic class counts: definitional total vs closed form vs Lyndon enumeration
    Theorem3,
    /// Necklace totals: density-by-density sum vs closed form vs oracle classes
    Theorem4,
    /// Mobius binomial sums divisible by the modulus
    Corollary1,
    /// Totient binomial sums divisible by the modulus
    Corollary2,
    /// Binomial congruence at prime-power scale, modulo n*p
    Corollary3,
    /// Binomial congruence at prime scale, modulo p
    Corollary4,
    /// Alternating ordered-factorization sums equal the Mobius function
    Lemma2,
    /// Mobius divisor quotients sum to phi(q)/q exactly
    Lemma3,
    /// Chain expansion bijects full-period subsets across moduli
    Bijection,
    /// Arithmetic progressions witness full-period subsets
    Witness,
    /// Averaged fixed-point counts equal direct orbit enumeration
    Burnside,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OeisFormula {
    /// Aperiodic binary rotation classes (argument is the word length)
    Aperiodic,
    /// All binary rotation classes (argument is the word length)
    Necklaces,
    /// Aperiodic rotation classes over a given alphabet (requires --alphabet)
    Moreau,
    /// All rotation classes over a given alphabet (requires --alphabet)
    Macmahon,
    /// Predicts the index itself (plumbing check)
    Identity,
}

impl OeisFormula {
    fn name(self) -> &'static str {
        match self {
            OeisFormula::Aperiodic => "aperiodic",
            OeisFormula::Necklaces => "necklaces",
            OeisFormula::Moreau => "moreau",
            OeisFormula::Macmahon => "macmahon",
            OeisFormula::Identity => "identity",
        }
    }

    /// Smallest formula argument that is in the domain; smaller mapped
    /// indices are skipped rather than reported as errors.
    fn domain_min(self) -> i64 {
        match self {
            OeisFormula::Aperiodic | OeisFormula::Necklaces => 2,
            OeisFormula::Moreau | OeisFormula::Macmahon => 1,
            OeisFormula::Identity => 0,
        }
    }
}

/// Inclusive integer range written "lo..hi", or a single value "v".
#[derive(Copy, Clone, PartialEq, Eq)]
struct RangeArg {
    lo: u64,
    hi: u64,
}

impl RangeArg {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let parse =
            |t: &str| u64::from_str(t).map_err(|_| format!("{t:?} is not a nonnegative integer"));
        match text.split_once("..") {
            Some((lo, hi)) => Ok(RangeArg {
                lo: parse(lo)?,
                hi: parse(hi)?,
            }),
            None => {
                let v = parse(text)?;
                Ok(RangeArg { lo: v, hi: v })
            }
        }
    }
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (e.g. `... | head`) instead of
    // panicking mid-print; this restores the usual unix filter behavior
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::try_parse().unwrap_or_else(|error| {
        let code = if error.use_stderr() { 2 } else { 0 };
        let _ = error.print();
        std::process::exit(code);
    });
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let oracle = match cli.max_enum {
        Some(bits) => Oracle::with_max_enum(bits),
        None => Oracle::new(),
    };
    match cli.command {
        Command::Count {
            formula,
            n,
            r,
            k,
            alphabet,
        } => {
            let count = evaluate_count(formula, n, r, k, alphabet)?;
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            kind,
            length,
            density,
            period,
        } => {
            for line in enumerate_lines(&oracle, kind, length, density, period)? {
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            k_max,
            n_max,
            p_max,
            alpha_max,
            a_max,
            q_max,
            alphabet,
            seed_failure,
        } => {
            let grid = GridBounds {
                k_max,
                n_max,
                p_max,
                alpha_max,
                a_max,
                q_max,
                alphabet,
            };
            let mut report = run_verifier(&oracle, identity, grid)?;
            if seed_failure {
                report.cases_checked += 1;
                report.failures.push(Failure {
                    parameters: vec![("seeded".to_string(), 1)],
                    expected: "no injected failure".to_string(),
                    actual: "synthetic failure injected by --seed-failure".to_string(),
                });
            }
            let json =
                serde_json::to_string_pretty(&report).expect("report serialization cannot fail");
            println!("{json}");
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Table {
            formula,
            k,
            r,
            n,
            alphabet,
            format,
        } => {
            let table = build_table(formula, k, r, n, alphabet)?;
            match format {
                OutputFormat::Csv => print!("{}", table.to_csv()),
                OutputFormat::Json => {
                    let json = serde_json::to_string_pretty(&table.to_json())
                        .expect("table serialization cannot fail");
                    println!("{json}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OeisCheck {
            bfile,
            formula,
            offset,
            alphabet,
        } => oeis_check(&bfile, formula, offset, alphabet),
    }
}

fn required(formula: &str, flag: &str, value: Option<u64>) -> Result<u64, String> {
    value.ok_or_else(|| format!("{formula} requires --{flag}"))
}

fn forbidden(formula: &str, flag: &str, value: Option<u64>) -> Result<(), String> {
    match value {
        Some(_) => Err(format!("{formula} does not take --{flag}")),
        None => Ok(()),
    }
}

fn evaluate_count(
    formula: CountFormula,
    n: Option<u64>,
    r: Option<u64>,
    k: Option<u64>,
    alphabet: Option<u64>,
) -> Result<BigUint, String> {
    let name = formula.name();
    let count = match formula {
        CountFormula::ExactPeriod | CountFormula::PeriodClasses => {
            forbidden(name, "alphabet", alphabet)?;
            let n = required(name, "n", n)?;
            let r = required(name, "r", r)?;
            let k = required(name, "k", k)?;
            if formula == CountFormula::ExactPeriod {
                counting::exact_period_subset_count(n, r, k)
            } else {
                counting::period_class_count(n, r, k)
            }
        }
        CountFormula::FixedDensity => {
            forbidden(name, "n", n)?;
            forbidden(name, "alphabet", alphabet)?;
            let r = required(name, "r", r)?;
            let k = required(name, "k", k)?;
            counting::fixed_density_necklace_count(r, k)
        }
        CountFormula::Aperiodic | CountFormula::Necklaces => {
            forbidden(name, "n", n)?;
            forbidden(name, "r", r)?;
            forbidden(name, "alphabet", alphabet)?;
            let k = required(name, "k", k)?;
            if formula == CountFormula::Aperiodic {
                counting::aperiodic_binary_count(k)
            } else {
                counting::binary_necklace_closed_form(k)
            }
        }
        CountFormula::Moreau | CountFormula::Macmahon => {
            forbidden(name, "r", r)?;
            forbidden(name, "k", k)?;
            let n = required(name, "n", n)?;
            let alphabet = required(name, "alphabet", alphabet)?;
            if formula == CountFormula::Moreau {
                counting::moreau(n, alphabet)
            } else {
                counting::macmahon(n, alphabet)
            }
        }
    };
    count.map_err(|e| e.to_string())
}

fn enumerate_lines(
    oracle: &Oracle,
    kind: EnumerateKind,
    length: u64,
    density: Option<u64>,
    period: Option<u64>,
) -> Result<Vec<String>, String> {
    match kind {
        EnumerateKind::Lyndon => {
            forbidden("lyndon", "period", period)?;
            oracle
                .enumerate_lyndon(length, density)
                .map_err(|e| e.to_string())
        }
        EnumerateKind::Necklaces => {
            forbidden("necklaces", "period", period)?;
            let classes = oracle
                .enumerate_necklace_classes(length, density)
                .map_err(|e| e.to_string())?;
            let mut words: Vec<String> =
                classes.iter().map(|class| class.lex_least_word()).collect();
            words.sort();
            Ok(words)
        }
        EnumerateKind::SubsetsByPeriod => {
            let r = required("subsets-by-period", "density", density)?;
            let n = required("subsets-by-period", "period", period)?;
            if r == 0 {
                return Err("subsets-by-period requires a density of at least 1".to_string());
            }
            let mut subsets: Vec<Vec<u64>> = oracle
                .subsets_with_period(length, r, n)
                .map_err(|e| e.to_string())?
                .iter()
                .map(ResidueSubset::members)
                .collect();
            subsets.sort();
            Ok(subsets
                .into_iter()
                .map(|members| {
                    members
                        .into_iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect())
        }
    }
}

struct GridBounds {
    k_max: Option<u64>,
    n_max: Option<u64>,
    p_max: Option<u64>,
    alpha_max: Option<u64>,
    a_max: Option<u64>,
    q_max: Option<u64>,
    alphabet: Vec<u64>,
}

impl GridBounds {
    /// Reject flags that the chosen identity does not sweep, so a typo
    /// cannot silently fall back to a default grid.
    fn allow_only(&self, identity: &str, allowed: &[&str]) -> Result<(), String> {
        let present: &[(&str, bool)] = &[
            ("k-max", self.k_max.is_some()),
            ("n-max", self.n_max.is_some()),
            ("p-max", self.p_max.is_some()),
            ("alpha-max", self.alpha_max.is_some()),
            ("a-max", self.a_max.is_some()),
            ("q-max", self.q_max.is_some()),
            ("alphabet", !self.alphabet.is_empty()),
        ];
        for &(flag, given) in present {
            if given && !allowed.contains(&flag) {
                return Err(format!("{identity} does not take --{flag}"));
            }
        }
        Ok(())
    }
}

fn run_verifier(
    oracle: &Oracle,
    identity: Identity,
    grid: GridBounds,
) -> Result<VerificationReport, String> {
    let report = match identity {
        Identity::Theorem1 => {
            grid.allow_only("theorem1", &["k-max"])?;
            identities::verify_exact_period_counts(grid.k_max.unwrap_or(12), oracle)
        }
        Identity::Theorem2 => {
            grid.allow_only("theorem2", &["k-max"])?;
            identities::verify_fixed_density_counts(grid.k_max.unwrap_or(12), oracle)
        }
        Identity::Theorem3 => {
            grid.allow_only("theorem3", &["k-max"])?;
            identities::verify_aperiodic_counts(grid.k_max.unwrap_or(12), oracle)
        }
        Identity::Theorem4 => {
            grid.allow_only("theorem4", &["k-max"])?;
            identities::resolve_necklace_total_relation(grid.k_max.unwrap_or(12), oracle)
        }
        Identity::Corollary1 => {
            grid.allow_only("corollary1", &["k-max"])?;
            identities::verify_mobius_congruence(grid.k_max.unwrap_or(60))
        }
        Identity::Corollary2 => {
            grid.allow_only("corollary2", &["k-max"])?;
            identities::verify_totient_congruence(grid.k_max.unwrap_or(60))
        }
        Identity::Corollary3 => {
            grid.allow_only("corollary3", &["n-max", "p-max", "alpha-max"])?;
            identities::verify_lucas_prime_power_grid(
                grid.n_max.unwrap_or(8),
                grid.p_max.unwrap_or(5),
                grid.alpha_max.unwrap_or(3),
            )
        }
        Identity::Corollary4 => {
            grid.allow_only("corollary4", &["n-max", "p-max"])?;
            identities::verify_lucas_basic_grid(grid.n_max.unwrap_or(12), grid.p_max.unwrap_or(13))
        }
        Identity::Lemma2 => {
            grid.allow_only("lemma2", &["a-max"])?;
            identities::verify_mobius_factorization(grid.a_max.unwrap_or(200))
        }
        Identity::Lemma3 => {
            grid.allow_only("lemma3", &["q-max"])?;
            identities::verify_totient_quotient(grid.q_max.unwrap_or(500))
        }
        Identity::Bijection => {
            grid.allow_only("bijection", &["k-max"])?;
            identities::verify_period_bijection(grid.k_max.unwrap_or(12), oracle)
        }
        Identity::Witness => {
            grid.allow_only("witness", &["n-max"])?;
            identities::verify_arithmetic_witnesses(grid.n_max.unwrap_or(30))
        }
        Identity::Burnside => {
            grid.allow_only("burnside", &["n-max", "alphabet"])?;
            let alphabets = if grid.alphabet.is_empty() {
                vec![2, 3]
            } else {
                grid.alphabet.clone()
            };
            identities::verify_burnside_orbits(grid.n_max.unwrap_or(12), &alphabets, oracle)
        }
    };
    report.map_err(|e| e.to_string())
}

fn build_table(
    formula: CountFormula,
    k: Option<RangeArg>,
    r: Option<RangeArg>,
    n: Option<RangeArg>,
    alphabet: Option<u64>,
) -> Result<counting::CountTable, String> {
    let name = formula.name();
    let range_required = |flag: &str, value: Option<RangeArg>| {
        value.ok_or_else(|| format!("{name} requires --{flag} with a range like 1..8"))
    };
    let range_forbidden = |flag: &str, value: Option<RangeArg>| match value {
        Some(_) => Err(format!("{name} does not take --{flag}")),
        None => Ok(()),
    };
    let density_clip = |row: u64, clip: Option<RangeArg>| -> Vec<u64> {
        let full = RangeArg { lo: 1, hi: row };
        let clip = clip.unwrap_or(full);
        (full.lo.max(clip.lo)..=full.hi.min(clip.hi)).collect()
    };
    let mut table;
    match formula {
        CountFormula::ExactPeriod | CountFormula::PeriodClasses => {
            range_forbidden("n", n)?;
            forbidden(name, "alphabet", alphabet)?;
            let k_range = range_required("k", k)?;
            table =
                counting::CountTable::new(vec!["k".to_string(), "r".to_string(), "n".to_string()]);
            for k in k_range.iter() {
                for r in density_clip(k, r) {
                    for n in divisors(k) {
                        let count = if formula == CountFormula::ExactPeriod {
                            counting::exact_period_subset_count(n, r, k)
                        } else {
                            counting::period_class_count(n, r, k)
                        }
                        .map_err(|e| e.to_string())?;
                        table.push(vec![k, r, n], count);
                    }
                }
            }
        }
        CountFormula::FixedDensity => {
            range_forbidden("n", n)?;
            forbidden(name, "alphabet", alphabet)?;
            let k_range = range_required("k", k)?;
            table = counting::CountTable::new(vec!["k".to_string(), "r".to_string()]);
            for k in k_range.iter() {
                for r in density_clip(k, r) {
                    let count =
                        counting::fixed_density_necklace_count(r, k).map_err(|e| e.to_string())?;
                    table.push(vec![k, r], count);
                }
            }
        }
        CountFormula::Aperiodic | CountFormula::Necklaces => {
            range_forbidden("n", n)?;
            range_forbidden("r", r)?;
            forbidden(name, "alphabet", alphabet)?;
            let k_range = range_required("k", k)?;
            table = counting::CountTable::new(vec!["k".to_string()]);
            for k in k_range.iter() {
                let count = if formula == CountFormula::Aperiodic {
                    counting::aperiodic_binary_count(k)
                } else {
                    counting::binary_necklace_closed_form(k)
                }
                .map_err(|e| e.to_string())?;
                table.push(vec![k], count);
            }
        }
        CountFormula::Moreau | CountFormula::Macmahon => {
            range_forbidden("k", k)?;
            range_forbidden("r", r)?;
            let n_range = range_required("n", n)?;
            let alphabet = required(name, "alphabet", alphabet)?;
            table = counting::CountTable::new(vec!["n".to_string(), "alphabet".to_string()]);
            for n in n_range.iter() {
                let count = if formula == CountFormula::Moreau {
                    counting::moreau(n, alphabet)
                } else {
                    counting::macmahon(n, alphabet)
                }
                .map_err(|e| e.to_string())?;
                table.push(vec![n, alphabet], count);
            }
        }
    }
    Ok(table)
}

fn oeis_check(
    path: &std::path::Path,
    formula: OeisFormula,
    offset: i64,
    alphabet: Option<u64>,
) -> Result<ExitCode, String> {
    let name = formula.name();
    let alphabet = match formula {
        OeisFormula::Moreau | OeisFormula::Macmahon => Some(required(name, "alphabet", alphabet)?),
        _ => {
            forbidden(name, "alphabet", alphabet)?;
            None
        }
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let bfile = bfile::BFile::parse(&label, &text)?;
    let mut compared = 0u64;
    let mut first_index: Option<i64> = None;
    let mut last_index = 0i64;
    for (index, value) in &bfile.entries {
        let argument = index
            .checked_add(offset)
            .ok_or_else(|| format!("index {index} plus offset {offset} overflows"))?;
        if argument < formula.domain_min() {
            continue;
        }
        let argument = argument as u64;
        let predicted = match formula {
            OeisFormula::Aperiodic => {
                counting::aperiodic_binary_count(argument).map_err(|e| e.to_string())?
            }
            OeisFormula::Necklaces => {
                counting::binary_necklace_closed_form(argument).map_err(|e| e.to_string())?
            }
            OeisFormula::Moreau => {
                counting::moreau(argument, alphabet.unwrap()).map_err(|e| e.to_string())?
            }
            OeisFormula::Macmahon => {
                counting::macmahon(argument, alphabet.unwrap()).map_err(|e| e.to_string())?
            }
            OeisFormula::Identity => BigUint::from(argument),
        };
        if &predicted != value {
            println!(
                "mismatch at index {index}: {label} has {value}, {name}({argument}) = {predicted}"
            );
            return Ok(ExitCode::from(1));
        }
        compared += 1;
        if first_index.is_none() {
            first_index = Some(*index);
        }
        last_index = *index;
    }
    match first_index {
        None => Err(format!(
            "no overlap: no index of {label} maps into the domain of {name} with offset {offset}"
        )),
        Some(first) => {
            println!("match: {label} agrees with {name} on {compared} entries (indices {first}..{last_index})");
            Ok(ExitCode::SUCCESS)
        }
    }
}

//! The `ctk` command line: compute tables, analyze them, run the verification suites,
//! and evaluate the family formulas.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{self, all_passed, decimal, Classified, Verdict};
use crate::chartab::CharacterTable;
use crate::dixon;
use crate::error::{Error, Result};
use crate::families;
use crate::fixtures::{self, FixtureTable};
use crate::permgroup::{GeneratorSet, DEFAULT_ENUM_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

/// Seed and size of the root-sum congruence suite.
pub const CONGRUENCE_SEED: u64 = 2024;
pub const CONGRUENCE_CASES: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "ctk", version, about = "Exact character tables and root-of-unity statistics")]
pub struct RunConfig {
    /// Maximum number of group elements to enumerate (overrides CTK_ENUM_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a character table from permutation generators.
    Table {
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Report θ, θ′, counts and verdicts for one table.
    Analyze(AnalyzeArgs),
    /// Run a verification suite over a fixture corpus.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Directory of `.gens` and `.prod` files; the built-in catalog if absent.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Formulas and checks for Suz(q), L₂(q) and Aₙ.
    Family {
        #[command(subcommand)]
        family: Family,
    },
    /// Character table of the direct product of two tables.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
pub struct AnalyzeInput {
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long)]
    pub gens: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: AnalyzeInput,
    /// Treat a loaded table as the table of a nilpotent group.
    #[arg(long)]
    pub nilpotent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Classical,
    Nilpotent,
    Primepower,
    Identities,
    Congruence,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Suz {
        #[arg(long)]
        q: u64,
    },
    L2 {
        #[arg(long, required_unless_present = "up_to")]
        q: Option<u64>,
        /// Sweep every prime power from 4 up to this bound.
        #[arg(long, conflicts_with = "q")]
        up_to: Option<u64>,
    },
    Alt {
        #[arg(long)]
        n: usize,
    },
}

/// Exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::ZeroOrder | Error::NotCoprime { .. } => EXIT_PARSE,
        Error::EnumerationCap { .. } | Error::NoPrime { .. } => EXIT_RESOURCE,
        Error::Validation(_) | Error::Internal(_) => EXIT_VERIFY,
        Error::InvalidParameter(_) | Error::Io(_) => EXIT_USAGE,
    }
}

/// Parses `args`, runs, and reports; returns the process exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match run(&config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn resolve_cap(config: &RunConfig) -> Result<usize> {
    let cap = match config.cap {
        Some(c) => c,
        None => match std::env::var("CTK_ENUM_CAP") {
            Ok(v) => v.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("CTK_ENUM_CAP={v} is not a positive integer"))
            })?,
            Err(_) => DEFAULT_ENUM_CAP,
        },
    };
    if cap == 0 {
        return Err(Error::InvalidParameter("the enumeration cap must be positive".into()));
    }
    Ok(cap)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("G")
        .to_owned()
}

fn load_gens(path: &Path) -> Result<GeneratorSet> {
    let mut set = GeneratorSet::parse(&read(path)?)?;
    if set.name.is_none() {
        set.name = Some(stem(path));
    }
    Ok(set)
}

fn load_table(path: &Path) -> Result<CharacterTable> {
    CharacterTable::load(&read(path)?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

fn verdict_lines(prefix: &str, verdicts: &[Verdict]) -> String {
    verdicts
        .iter()
        .map(|v| {
            format!(
                "{prefix}[{}] {}: {}\n",
                if v.passed { "pass" } else { "FAIL" },
                v.name,
                v.detail
            )
        })
        .collect()
}

fn status(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let cap = resolve_cap(config)?;
    match &config.command {
        Command::Table { gens, out: path, name } => {
            let set = load_gens(gens)?;
            let group = set.enumerate_with_cap(cap)?;
            let name = name.clone().or(set.name.clone()).unwrap();
            let table = dixon::character_table(&group, &name)?;
            emit(out, path.as_deref(), &table.render())?;
            if config.verbose {
                eprintln!("{name}: order {}, {} classes", table.group_order, table.num_classes());
            }
            Ok(EXIT_OK)
        }
        Command::Analyze(args) => {
            let (table, nilpotent) = match (&args.input.table, &args.input.gens) {
                (Some(t), _) => (load_table(t)?, args.nilpotent),
                (None, Some(g)) => {
                    let set = load_gens(g)?;
                    let group = set.enumerate_with_cap(cap)?;
                    let table = dixon::character_table(&group, set.name.as_deref().unwrap())?;
                    (table, args.nilpotent || group.is_nilpotent())
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = analysis::analyze(&table, nilpotent);
            if config.json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                out.write_all(report.to_text().as_bytes())?;
            }
            Ok(status(report.passed()))
        }
        Command::Verify { suite, fixtures: dir } => verify(config, *suite, dir.as_deref(), cap, out),
        Command::Family { family } => run_family(config, family, cap, out),
        Command::Product { a, b, out: path } => {
            let ta = load_table(a)?;
            let tb = load_table(b)?;
            let table = ta.direct_product(&tb).validated()?;
            emit(out, path.as_deref(), &table.render())?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct TableVerdicts<'a> {
    table: &'a str,
    nilpotent: bool,
    verdicts: Vec<Verdict>,
}

/// Verdicts of one suite on one fixture table; `None` when the suite does not apply.
pub fn suite_verdicts(suite: Suite, fixture: &FixtureTable) -> Option<Vec<Verdict>> {
    let cl = Classified::new(&fixture.table);
    let identities = || {
        let violations = fixture.table.validate();
        let mut v = cl.galois_mean_identities();
        v.push(Verdict {
            name: "table_invariants".into(),
            passed: violations.is_empty(),
            detail: match violations.first() {
                None => "orthogonality and structure hold exactly".into(),
                Some(first) => format!("{first} ({} violations)", violations.len()),
            },
        });
        v
    };
    let nilpotent = || cl.nilpotent_theorems(true).expect("flag is set");
    match suite {
        Suite::Classical => Some(cl.classical_bounds()),
        Suite::Primepower => Some(cl.prime_power_lemmas()),
        Suite::Identities => Some(identities()),
        Suite::Nilpotent => fixture.nilpotent.then(nilpotent),
        Suite::Congruence => None,
        Suite::All => {
            let mut v = identities();
            v.extend(cl.classical_bounds());
            v.extend(cl.prime_power_lemmas());
            if fixture.nilpotent {
                v.extend(nilpotent());
            }
            Some(v)
        }
    }
}

fn verify(
    config: &RunConfig,
    suite: Suite,
    dir: Option<&Path>,
    cap: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut results = Vec::new();
    if suite != Suite::Congruence {
        let (sets, recipes) = match dir {
            Some(d) => fixtures::load_dir(d)?,
            None => (fixtures::catalog(), fixtures::product_recipes()),
        };
        for fixture in fixtures::compute_tables(&sets, &recipes, cap)? {
            if let Some(verdicts) = suite_verdicts(suite, &fixture) {
                results.push((fixture.table.name.clone(), fixture.nilpotent, verdicts));
            }
        }
    }
    if matches!(suite, Suite::Congruence | Suite::All) {
        let cases = analysis::congruence_cases(CONGRUENCE_SEED, CONGRUENCE_CASES);
        let verdict = analysis::verify_congruence_cases(&cases)?;
        results.push(("root sums".into(), false, vec![verdict]));
    }
    let passed = results.iter().all(|(_, _, v)| all_passed(v));
    if config.json {
        let doc: Vec<_> = results
            .iter()
            .map(|(name, nilpotent, verdicts)| TableVerdicts {
                table: name,
                nilpotent: *nilpotent,
                verdicts: verdicts.clone(),
            })
            .collect();
        out.write_all(json(&doc).as_bytes())?;
    } else {
        for (name, _, verdicts) in &results {
            if config.verbose || !all_passed(verdicts) {
                out.write_all(verdict_lines(&format!("{name}: "), verdicts).as_bytes())?;
            } else {
                writeln!(out, "{name}: {} checks pass", verdicts.len())?;
            }
        }
        let total: usize = results.iter().map(|r| r.2.len()).sum();
        let failed: usize = results
            .iter()
            .map(|r| r.2.iter().filter(|v| !v.passed).count())
            .sum();
        writeln!(out, "{} tables, {total} checks, {failed} failed", results.len())?;
    }
    Ok(status(passed))
}

#[derive(Serialize)]
struct FamilyReport {
    family: String,
    parameter: u64,
    theta: Option<String>,
    theta_decimal: Option<String>,
    theta_prime: Option<String>,
    theta_prime_decimal: Option<String>,
    verdicts: Vec<Verdict>,
}

fn rational_fields(q: &num_rational::BigRational) -> (Option<String>, Option<String>) {
    (Some(q.to_string()), Some(decimal(q, 10)))
}

fn run_family(config: &RunConfig, family: &Family, cap: usize, out: &mut dyn Write) -> Result<i32> {
    let reports = match family {
        Family::Suz { q } => {
            let theta = families::suz_theta(*q)?;
            let theta_prime = families::suz_theta_prime(*q)?;
            let mut verdicts = families::suz_consistency(*q)?;
            verdicts.extend(families::suz_gamma_classification(*q)?);
            let (t, td) = rational_fields(&theta);
            let (tp, tpd) = rational_fields(&theta_prime);
            vec![FamilyReport {
                family: "suz".into(),
                parameter: *q,
                theta: t,
                theta_decimal: td,
                theta_prime: tp,
                theta_prime_decimal: tpd,
                verdicts,
            }]
        }
        Family::L2 { q, up_to } => {
            let qs = match (q, up_to) {
                (Some(q), _) => vec![*q],
                (None, Some(hi)) => families::prime_powers(4, *hi),
                (None, None) => unreachable!("clap requires q or up_to"),
            };
            let half = num_rational::BigRational::new(1.into(), 2.into());
            qs.iter()
                .map(|&q| {
                    let b = families::l2_bounds(q)?;
                    let c = &b.census;
                    let census = format!(
                        "|G| = {}, |Cl| = {}, |G0| = {}, |G1| = {}",
                        c.group_order, c.class_count, c.g0, c.g1
                    );
                    let (t, td) = rational_fields(&b.lb_theta);
                    let (tp, tpd) = rational_fields(&b.lb_theta_prime);
                    Ok(FamilyReport {
                        family: "l2".into(),
                        parameter: q,
                        theta: t,
                        theta_decimal: td,
                        theta_prime: tp,
                        theta_prime_decimal: tpd,
                        verdicts: vec![
                            Verdict {
                                name: "theta_lower_bound_gt_half".into(),
                                passed: b.lb_theta > half,
                                detail: census.clone(),
                            },
                            Verdict {
                                name: "theta_prime_lower_bound_gt_half".into(),
                                passed: b.lb_theta_prime > half,
                                detail: census,
                            },
                        ],
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        Family::Alt { n } => {
            let rep = families::alt_verify_with_cap(*n, cap)?;
            let (t, td) = rational_fields(&rep.theta);
            let (tp, tpd) = rational_fields(&rep.theta_prime);
            vec![FamilyReport {
                family: "alt".into(),
                parameter: *n as u64,
                theta: t,
                theta_decimal: td,
                theta_prime: tp,
                theta_prime_decimal: tpd,
                verdicts: rep.verdicts,
            }]
        }
    };
    let passed = reports.iter().all(|r| all_passed(&r.verdicts));
    if config.json {
        out.write_all(json(&reports).as_bytes())?;
        return Ok(status(passed));
    }
    let sweep = reports.len() > 1;
    for r in &reports {
        if sweep && !config.verbose && all_passed(&r.verdicts) {
            continue;
        }
        let label = match r.family.as_str() {
            "suz" => format!("Suz({})", r.parameter),
            "l2" => format!("L2({})", r.parameter),
            _ => format!("A{}", r.parameter),
        };
        let (kind, kind_prime) = if r.family == "l2" {
            ("theta >=", "theta' >=")
        } else {
            ("theta =", "theta' =")
        };
        writeln!(
            out,
            "{label}\n  {kind} {} ~ {}\n  {kind_prime} {} ~ {}",
            r.theta.as_deref().unwrap_or("-"),
            r.theta_decimal.as_deref().unwrap_or("-"),
            r.theta_prime.as_deref().unwrap_or("-"),
            r.theta_prime_decimal.as_deref().unwrap_or("-"),
        )?;
        out.write_all(verdict_lines("  ", &r.verdicts).as_bytes())?;
    }
    if sweep {
        let failed = reports.iter().filter(|r| !all_passed(&r.verdicts)).count();
        writeln!(out, "{} prime powers checked, {failed} failed", reports.len())?;
    }
    Ok(status(passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("ctk").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["family", "l2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn suzuki_family_output() {
        let (code, out, _) = run_args(&["family", "suz", "--q", "8"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("0.5713942308"), "{out}");
        assert!(out.contains("8/11 ~ 0.7272727273"), "{out}");
        assert!(!out.contains("FAIL"));
    }

    #[test]
    fn invalid_family_parameter() {
        let (code, _, err) = run_args(&["family", "suz", "--q", "16"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Suzuki parameter"));
    }

    #[test]
    fn exit_codes_for_errors() {
        assert_eq!(exit_code(&Error::EnumerationCap { cap: 3 }), EXIT_RESOURCE);
        assert_eq!(exit_code(&Error::parse(1, 1, "x")), EXIT_PARSE);
        assert_eq!(exit_code(&Error::Validation(vec![])), EXIT_VERIFY);
    }
}

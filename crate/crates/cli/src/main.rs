//! `nambu`: verify and compute with Nambu-Poisson structures given as
//! `nambu-structure/1` JSON files.

mod structure;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use nambu_core::{algebroid, cohomology, CheckReport, Execution, Form, JetBasisConfig, Multivector, Polynomial};
use serde_json::{json, Value};

use structure::Loaded;

const REPORT_SCHEMA: &str = "nambu-report/1";

const CHECKS: &[&str] = &[
    "fundamental-identity",
    "invariance",
    "anchor",
    "leibniz",
    "characterization",
    "sharp-d",
    "phi-morphism",
    "skew-symmetry",
    "lie-of-lambda",
    "lsv",
    "modular-cocycle",
    "coboundary-square",
    "modular-tensoriality",
];

const DEFAULT_CHECKS: &[&str] = &[
    "fundamental-identity",
    "invariance",
    "anchor",
    "leibniz",
    "characterization",
    "lsv",
    "modular-cocycle",
];

#[derive(Parser)]
#[command(name = "nambu", version, about = "Exact verification of Nambu-Poisson structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Print only failures.
    #[arg(long, global = true)]
    quiet: bool,

    /// Run sweeps on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity verifiers; exits 2 if any check fails.
    Check {
        file: PathBuf,
        /// Comma-separated check names (default: the file's list, else the standard set).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Maximal monomial degree of the test basis (at least 2).
        #[arg(long)]
        jet_degree: Option<u32>,
        /// Sweep every slot over the full test basis.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Compute a bracket, Hamiltonian field, anchor image or modular vector.
    Compute {
        file: PathBuf,
        what: What,
        /// Forms for `bracket`/`sharp`, functions for `hamiltonian`.
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Search for f with ∂⁰f equal to the modular vector.
    Witness {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Modular,
    Bracket,
    Hamiltonian,
    Sharp,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Modular => "modular",
            What::Bracket => "bracket",
            What::Hamiltonian => "hamiltonian",
            What::Sharp => "sharp",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Loaded> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let loaded = structure::parse(&text).and_then(|f| f.validate(CHECKS))?;
    Ok(loaded)
}

fn run(cli: &Cli) -> anyhow::Result<(String, u8)> {
    let execution = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match &cli.command {
        Command::Check {
            file,
            checks,
            jet_degree,
            exhaustive,
        } => {
            let loaded = load(file)?;
            let names: Vec<String> = match (checks, &loaded.checks) {
                (Some(c), _) | (None, Some(c)) => c.clone(),
                (None, None) => DEFAULT_CHECKS.iter().map(|s| s.to_string()).collect(),
            };
            if let Some(bad) = names.iter().find(|n| !CHECKS.contains(&n.as_str())) {
                bail!("--checks: unknown check \"{bad}\" (known: {})", CHECKS.join(", "));
            }
            let degree = jet_degree
                .or(loaded.jet_degree)
                .unwrap_or(JetBasisConfig::DEFAULT_DEGREE);
            let cfg = JetBasisConfig::new(degree)
                .context("--jet-degree")?
                .exhaustive(*exhaustive)
                .with_execution(execution);
            let mut reports = Vec::new();
            for name in &names {
                let report = run_check(name, &loaded, &cfg).with_context(|| format!("check {name}"))?;
                reports.push(report);
            }
            let ok = reports.iter().all(CheckReport::passed);
            let out = if cli.json {
                let value = json!({
                    "schema": REPORT_SCHEMA,
                    "command": "check",
                    "dimension": loaded.structure.dim(),
                    "order": loaded.structure.order(),
                    "jet_degree": degree,
                    "checks": reports,
                    "verdict": if ok { "pass" } else { "fail" },
                });
                to_json(&value)
            } else {
                let mut s = String::new();
                if !cli.quiet {
                    let st = &loaded.structure;
                    writeln!(
                        s,
                        "structure: m = {}, n = {}, lambda = {}",
                        st.dim(),
                        st.order(),
                        st.lambda()
                    )?;
                    writeln!(s, "jet degree: {degree}")?;
                }
                for r in reports.iter().filter(|r| !cli.quiet || !r.passed()) {
                    writeln!(s, "{r}")?;
                }
                if !cli.quiet {
                    writeln!(s, "verdict: {}", if ok { "PASS" } else { "FAIL" })?;
                }
                s
            };
            Ok((out, if ok { 0 } else { 2 }))
        }
        Command::Compute { file, what, args } => {
            let loaded = load(file)?;
            let result = compute(&loaded, *what, args)?;
            let out = if cli.json {
                to_json(&json!({
                    "schema": REPORT_SCHEMA,
                    "command": "compute",
                    "what": what.name(),
                    "arguments": args,
                    "result": result,
                }))
            } else {
                format!("{result}\n")
            };
            Ok((out, 0))
        }
        Command::Witness { file, max_degree } => {
            let loaded = load(file)?;
            let st = &loaded.structure;
            let report = cohomology::exactness_witness(st, &loaded.volume, *max_degree)?;
            let component = |c: &[usize]| Multivector::basis(st.dim(), c).map(|b| b.to_string());
            let out = if cli.json {
                let obstruction = match &report.obstruction {
                    None => Value::Null,
                    Some(o) => json!({
                        "component": component(&o.component)?,
                        "variable": o.variable,
                        "equation": o.equation,
                    }),
                };
                to_json(&json!({
                    "schema": REPORT_SCHEMA,
                    "command": "witness",
                    "search_degree": report.search_degree,
                    "feasible": report.feasible,
                    "witness": report.witness.as_ref().map(Polynomial::to_string),
                    "obstruction": obstruction,
                    "nontrivial_within_polynomials": report.nontrivial_within_polynomials(),
                }))
            } else {
                let mut s = String::new();
                if !cli.quiet {
                    writeln!(s, "search degree: {}", report.search_degree)?;
                }
                match &report.witness {
                    Some(w) => writeln!(s, "feasible: yes\nwitness: {w}")?,
                    None => writeln!(s, "feasible: no")?,
                }
                if let Some(o) = &report.obstruction {
                    writeln!(s, "obstruction: component {}: {}", component(&o.component)?, o.equation)?;
                    writeln!(
                        s,
                        "nontrivial within polynomials; the component equation has no smooth solution"
                    )?;
                }
                s
            };
            Ok((out, 0))
        }
    }
}

fn run_check(name: &str, l: &Loaded, cfg: &JetBasisConfig) -> nambu_core::Result<CheckReport> {
    let s = &l.structure;
    match name {
        "fundamental-identity" => Ok(s.check_fundamental_identity(cfg)),
        "invariance" => Ok(s.check_invariance(cfg)),
        "anchor" => algebroid::verify_anchor_morphism(s, cfg),
        "leibniz" => algebroid::verify_leibniz_identity(s, cfg),
        "characterization" => algebroid::verify_characterization(s, cfg),
        "sharp-d" => algebroid::verify_sharp_d_identity(s, cfg),
        "phi-morphism" => algebroid::verify_phi_morphism(s, cfg),
        "skew-symmetry" => algebroid::verify_skew_symmetry(s, cfg),
        "lie-of-lambda" => algebroid::verify_lie_of_lambda(s, cfg),
        "lsv" => cohomology::verify_lsv(s, &l.volume, cfg),
        "modular-cocycle" => cohomology::verify_modular_cocycle(s, &l.volume, cfg),
        "coboundary-square" => cohomology::verify_coboundary_square(s, cfg),
        "modular-tensoriality" => cohomology::verify_modular_tensoriality(s, &l.volume, cfg),
        other => unreachable!("unvalidated check {other}"),
    }
}

fn compute(l: &Loaded, what: What, args: &[String]) -> anyhow::Result<String> {
    let s = &l.structure;
    let (m, n) = (s.dim(), s.order());
    let expect = |k: usize| -> anyhow::Result<()> {
        if args.len() != k {
            bail!("{} expects {k} argument(s), got {}", what.name(), args.len());
        }
        Ok(())
    };
    let form = |i: usize| Form::parse(&args[i], m, n - 1).with_context(|| format!("argument {}", i + 1));
    Ok(match what {
        What::Modular => {
            expect(0)?;
            cohomology::modular_mv(s, &l.volume)?.to_string()
        }
        What::Bracket => {
            expect(2)?;
            algebroid::lbracket(s, &form(0)?, &form(1)?)?.to_string()
        }
        What::Sharp => {
            expect(1)?;
            s.sharp(&form(0)?)?.to_string()
        }
        What::Hamiltonian => {
            expect(n - 1)?;
            let fs = args
                .iter()
                .enumerate()
                .map(|(i, a)| Polynomial::parse(a, m).with_context(|| format!("argument {}", i + 1)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            s.hamiltonian(&fs)?.to_string()
        }
    })
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

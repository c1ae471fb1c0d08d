use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use lieschur::catalog;
use lieschur::suite::{run_suite, SuiteConfig};
use lieschur::{Algebra, Rational};
use lieschur_cli::file::{AlgebraFile, Loaded};
use lieschur_cli::report::{analyze_json, multiplier_json, pair_json, ValidateJson};
use lieschur_cli::CliError;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "lieschur", version, about = "Schur multipliers of Lie superalgebras and of pairs, computed exactly")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; rely on the exit code.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check grading, super antisymmetry and the graded Jacobi identity.
    Validate { file: PathBuf },
    /// Center, derived algebra, lower central series; pair data if an ideal is given.
    Analyze { file: PathBuf },
    /// dim M(L) with boundary ranks, the exterior-square bound and the defect.
    Multiplier { file: PathBuf },
    /// dim M(N, L) for the ideal named in the file.
    Pair {
        file: PathBuf,
        /// Complement labels, overriding the file and the search.
        #[arg(long, value_delimiter = ',')]
        complement: Option<Vec<String>>,
    },
    /// Write a family instance as an algebra file.
    Catalog {
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full regression suite.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// abelian (m|n)
    Abelian,
    /// H(m), dimension 2m+1
    HeisenbergLie,
    /// even center, dimension (2m+1|n)
    HeisenbergEven,
    /// odd center, dimension (n|n+1)
    HeisenbergOdd,
    /// [x, y] = y on (1|1)
    Solvable11,
    /// [y, y] = x on (1|1)
    Heisenberg11,
}

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.quiet {
            return;
        }
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("plain data serializes"));
        } else {
            println!("{}", text());
        }
    }
}

fn load_valid(path: &Path) -> Result<Loaded, CliError> {
    let loaded = AlgebraFile::load(path)?;
    let report = loaded.algebra.validate();
    if !report.is_valid() {
        let lines = report.describe(&loaded.algebra);
        return Err(CliError::Invalid(format!("{}: not a Lie superalgebra\n  {}", loaded.name, lines.join("\n  "))));
    }
    Ok(loaded)
}

fn dims(d: (usize, usize)) -> String {
    format!("({}|{})", d.0, d.1)
}

fn span(labels: &[String]) -> String {
    if labels.is_empty() {
        "0".into()
    } else {
        format!("span{{{}}}", labels.join(", "))
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let out = Out { json: cli.json, quiet: cli.quiet };
    match cli.command {
        Command::Validate { file } => {
            let loaded = AlgebraFile::load(&file)?;
            let report = loaded.algebra.validate();
            let json = ValidateJson {
                name: loaded.name.clone(),
                valid: report.is_valid(),
                violations: report.describe(&loaded.algebra),
            };
            out.emit(&json, || {
                let head = format!("{} {}: ", json.name, dims(loaded.algebra.dims()));
                if json.valid {
                    head + "valid"
                } else {
                    format!("{head}{} violations\n  {}", json.violations.len(), json.violations.join("\n  "))
                }
            });
            Ok(json.valid)
        }
        Command::Analyze { file } => {
            let loaded = load_valid(&file)?;
            let j = analyze_json(&loaded.name, &loaded.algebra, loaded.ideal.as_ref())?;
            out.emit(&j, || {
                let lcs: Vec<String> = j.lower_central_series.iter().map(|&d| dims(d)).collect();
                let mut s = format!(
                    "{} {}\n  center         {}\n  derived        {}\n  lower central  {}\n  nilpotency     {}",
                    j.name,
                    dims(j.dims),
                    span(&j.center),
                    span(&j.derived),
                    lcs.join(" > "),
                    j.nilpotency
                );
                if let Some(p) = &j.pair {
                    s += &format!(
                        "\n  ideal N        {}\n  Z(N,L)         {}\n  [N,L]          {}",
                        span(&p.ideal),
                        span(&p.pair_center),
                        span(&p.commutator)
                    );
                }
                s
            });
            Ok(true)
        }
        Command::Multiplier { file } => {
            let loaded = load_valid(&file)?;
            let j = multiplier_json(&loaded.name, &loaded.algebra);
            out.emit(&j, || {
                let mut s = format!(
                    "{} {}\n  |wedge2| = {}, |wedge3| = {}\n  rank d2 = {}, rank d3 = {}\n  dim M(L) = {}\n  bound = {}, t(L) = {}",
                    j.name,
                    dims(j.dims),
                    j.wedge2,
                    j.wedge3,
                    j.rank_d2,
                    j.rank_d3,
                    j.dim_M,
                    j.bound,
                    j.t
                );
                for (name, b) in &j.bounds {
                    s += &format!("\n  {name:<22} bound {:>4}  value {:>4}  slack {:>4}", b.bound, b.value, b.slack);
                }
                for (name, c) in &j.checks {
                    s += &format!("\n  check {name}: {} ({})", c.status, c.detail);
                }
                s
            });
            Ok(true)
        }
        Command::Pair { file, complement } => {
            let loaded = load_valid(&file)?;
            let pair = loaded.pair(complement.as_deref())?;
            let j = pair_json(&loaded.name, &pair)?;
            out.emit(&j, || {
                let mut s = format!(
                    "{}: N {} in L, L/N {}\n  complement {}{}\n  dim M(L) = {}, dim M(L/N) = {}\n  dim M(N,L) = {}\n  dim [N,L] = {}, dim Z(N,L) = {}\n  bound = {}, t(N,L) = {}",
                    j.name,
                    dims(j.dim_N),
                    dims(j.dim_quotient),
                    span(&j.complement),
                    if j.complement_is_ideal { " (an ideal)" } else { "" },
                    j.dim_M_algebra,
                    j.dim_M_quotient,
                    j.dim_M,
                    j.dim_commutator,
                    dims(j.dim_pair_center),
                    j.bound,
                    j.t
                );
                for (name, b) in &j.bounds {
                    s += &format!("\n  {name:<22} bound {:>4}  value {:>4}  slack {:>4}", b.bound, b.value, b.slack);
                }
                for (name, c) in &j.checks {
                    s += &format!("\n  check {name}: {} ({})", c.status, c.detail);
                }
                s
            });
            Ok(true)
        }
        Command::Catalog { family, m, n, output } => {
            let out_of_family = |e: lieschur::Error| CliError::Input(e.to_string());
            let (name, alg): (String, Algebra) = match family {
                FamilyArg::Abelian => (format!("abelian({m}|{n})"), catalog::abelian(m, n)),
                FamilyArg::HeisenbergLie => (format!("H({m})"), catalog::heisenberg_lie(m).map_err(out_of_family)?),
                FamilyArg::HeisenbergEven => {
                    (format!("Heven({m},{n})"), catalog::heisenberg_even(m, n).map_err(out_of_family)?)
                }
                FamilyArg::HeisenbergOdd => (format!("Hodd({n})"), catalog::heisenberg_odd(n).map_err(out_of_family)?),
                FamilyArg::Solvable11 => {
                    ("solvable(1|1)".into(), catalog::nonabelian_11(catalog::NonAbelian11::Solvable))
                }
                FamilyArg::Heisenberg11 => {
                    ("heisenberg(1|1)".into(), catalog::nonabelian_11(catalog::NonAbelian11::Heisenberg))
                }
            };
            let text = AlgebraFile::from_algebra(&name, &alg).to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, text + "\n")
                        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    if !out.quiet && !out.json {
                        println!("wrote {name} to {}", path.display());
                    }
                }
                None if !out.quiet => println!("{text}"),
                None => {}
            }
            Ok(true)
        }
        Command::Selftest { max_dim, seed } => {
            let config = SuiteConfig { max_dim, seed, ..SuiteConfig::default() };
            let start = Instant::now();
            let results = run_suite::<Rational>(&config);
            let elapsed = start.elapsed();
            let ok = results.iter().all(|r| r.passed());
            #[derive(Serialize)]
            struct Row<'a> {
                id: u8,
                title: &'a str,
                passed: bool,
                checked: usize,
                failures: &'a [String],
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|r| Row {
                    id: r.id,
                    title: r.title,
                    passed: r.passed(),
                    checked: r.checked,
                    failures: &r.failures,
                })
                .collect();
            out.emit(&rows, || {
                let mut s = String::new();
                for r in &results {
                    s += &format!("{r}\n");
                    for f in r.failures.iter().take(5) {
                        s += &format!("       {f}\n");
                    }
                }
                s + &format!("{} in {:.2}s", if ok { "all criteria pass" } else { "FAILURES" }, elapsed.as_secs_f64())
            });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fuzzord::generate::{self, GenerateParams, Kind};
use fuzzord::laws::{Sweep, DEFAULT_SAMPLES, DEFAULT_SEED};
use fuzzord::model::{load_model, ModelBundle, Validation};
use fuzzord::order::DEFAULT_BUDGET;
use fuzzord::search::{self, Family, SearchConfig};
use fuzzord::tolerance::{self, BlockMode, CompletenessOracle, ToleranceAnalysis};
use fuzzord::{dot, power, suite, ChainKind, Error, Result};

#[derive(Parser)]
#[command(name = "fuzzord", version, about = "Check fuzzy ordered sets, complete tolerances and their factors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fast,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Order,
    Factor,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Lukasiewicz,
    Godel,
    Goguen,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchFamily {
    Tolerance,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Load a model and check the lattice and order axioms.
    Validate { file: PathBuf },
    /// Run a named property suite.
    Suite {
        file: PathBuf,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random instances per check when a domain exceeds the budget.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Plain text lines instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Infimum, supremum and cones of a named L-set.
    Infsup {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Test a relation for completeness.
    CheckComplete {
        file: PathBuf,
        #[arg(long)]
        relation: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Maximal blocks of a complete tolerance.
    Blocks {
        file: PathBuf,
        #[arg(long)]
        relation: String,
        #[arg(long, value_enum, default_value = "fast")]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Factorize by a complete tolerance and write the factor as DOT.
    Factor {
        file: PathBuf,
        #[arg(long)]
        relation: String,
        #[arg(long)]
        dot: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List every complete tolerance with its endpoint maps.
    EnumerateCtol {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Look for a relation meeting both bound clauses without being compatible.
    SearchOpenProblem {
        file: PathBuf,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "tolerance")]
        family: SearchFamily,
        /// Write the verdict here as well as to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a model document.
    Generate {
        #[arg(long)]
        kind: String,
        #[arg(long, value_enum, default_value = "lukasiewicz")]
        family: FamilyArg,
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Carrier `L^k`; 1 is the lattice itself.
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Comma separated degree names for random relations.
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<String>>,
        /// Random relations are reflexive and symmetric.
        #[arg(long)]
        tolerance: bool,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hasse diagram of the order or of a factor, as DOT on stdout.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        /// Tolerance to factor by, for `--what factor`.
        #[arg(long)]
        relation: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Power relation degrees between two sets, or the power-relations suite.
    PowerCheck {
        file: PathBuf,
        #[arg(long)]
        relation: String,
        #[arg(long, requires = "right")]
        left: Option<String>,
        #[arg(long, requires = "left")]
        right: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// What a command prints and how it exits.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn json(v: &Value, ok: bool) -> Self {
        Outcome {
            stdout: format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize")),
            code: if ok { 0 } else { 1 },
        }
    }
}

fn strict(path: &Path) -> Result<ModelBundle> {
    load_model(path, Validation::Strict)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => {
            let m = strict(&file)?;
            let v = json!({
                "valid": true,
                "lattice": m.lattice.element_names(),
                "carrier": m.ordered.as_ref().map(|p| p.carrier().names().to_vec()),
                "sets": m.sets.keys().collect::<Vec<_>>(),
                "relations": m.relations.keys().collect::<Vec<_>>(),
                "pairs": m.pairs.keys().collect::<Vec<_>>(),
            });
            Ok(Outcome::json(&v, true))
        }
        Command::Suite {
            file,
            suite: name,
            budget,
            seed,
            samples,
            text,
        } => {
            let m = load_model(&file, Validation::Lenient)?;
            let sweep = Sweep { budget, seed, samples };
            let rep = suite::run_suite(&m, &name, &sweep)?;
            if text {
                Ok(Outcome {
                    stdout: rep.text(),
                    code: if rep.passed { 0 } else { 1 },
                })
            } else {
                Ok(Outcome::json(&serde_json::to_value(&rep).expect("serializable"), rep.passed))
            }
        }
        Command::Infsup { file, set } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let v = m.set(&set)?;
            let name = |i: Option<usize>| i.map(|i| p.name(i).to_string());
            let mut out = json!({
                "set": tolerance::membership_json(v),
                "inf": name(p.infimum(v)?),
                "sup": name(p.supremum(v)?),
                "lower_cone": tolerance::membership_json(&p.lower_cone(v)?),
                "upper_cone": tolerance::membership_json(&p.upper_cone(v)?),
            });
            if let Some(pl) = &m.power {
                out["closed_form_inf"] = json!(p.name(pl.closed_form_inf(v)?));
                out["closed_form_sup"] = json!(p.name(pl.closed_form_sup(v)?));
            }
            Ok(Outcome::json(&out, true))
        }
        Command::CheckComplete {
            file,
            relation,
            mode,
            budget,
        } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let r = m.relation(&relation)?;
            let is_tol = r.properties()?.tolerance;
            let mut out = serde_json::Map::new();
            out.insert("relation".into(), json!(relation));
            let mut verdicts = Vec::new();
            if matches!(mode, Mode::Fast | Mode::Both) && (is_tol || matches!(mode, Mode::Fast)) {
                let a = ToleranceAnalysis::new(p, r, budget)?;
                verdicts.push(a.complete());
                out.insert("fast".into(), a.to_json());
            }
            if matches!(mode, Mode::Brute | Mode::Both) {
                let oracle = CompletenessOracle::new(p, budget)?;
                let rep = oracle.check(r)?;
                verdicts.push(rep.complete());
                out.insert("brute".into(), oracle.report_json(&rep));
            }
            let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
            let complete = agree && verdicts.iter().all(|&c| c);
            if verdicts.len() == 2 {
                out.insert("agree".into(), json!(agree));
            }
            out.insert("complete".into(), json!(complete));
            Ok(Outcome::json(&Value::Object(out), complete))
        }
        Command::Blocks {
            file,
            relation,
            mode,
            budget,
        } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let r = m.relation(&relation)?;
            let modes: &[BlockMode] = match mode {
                Mode::Fast => &[BlockMode::Fast],
                Mode::Brute => &[BlockMode::Brute],
                Mode::Both => &[BlockMode::Fast, BlockMode::Brute],
            };
            let mut out = serde_json::Map::new();
            let mut lists = Vec::new();
            for &bm in modes {
                let mut blocks = tolerance::maximal_blocks(p, r, bm, budget)?;
                blocks.sort_by_key(|b| b.membership().iter().map(|d| d.index()).collect::<Vec<_>>());
                let key = if bm == BlockMode::Fast { "fast" } else { "brute" };
                out.insert(key.into(), json!(blocks.iter().map(tolerance::membership_json).collect::<Vec<_>>()));
                lists.push(blocks);
            }
            let agree = lists.windows(2).all(|w| w[0] == w[1]);
            if lists.len() == 2 {
                out.insert("agree".into(), json!(agree));
            }
            Ok(Outcome::json(&Value::Object(out), agree))
        }
        Command::Factor {
            file,
            relation,
            dot: dot_path,
            budget,
        } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let r = m.relation(&relation)?;
            let a = ToleranceAnalysis::new(p, r, budget)?;
            let Some(f) = &a.factor else {
                let why = match a.fast.reconstruction_defect {
                    Some((u, v, given, rebuilt)) => format!(
                        "defect at ({}, {}): given {}, endpoints give {}",
                        p.name(u),
                        p.name(v),
                        p.lattice().name(given),
                        p.lattice().name(rebuilt)
                    ),
                    None => "endpoint maps are not an extensive Galois connection".into(),
                };
                return Err(Error::NotComplete(format!("`{relation}` cannot be factored: {why}")));
            };
            write_file(&dot_path, &dot::to_dot(&f.ordered, &format!("U/{relation}")))?;
            Ok(Outcome::json(&a.to_json(), true))
        }
        Command::EnumerateCtol { file, budget } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let all = tolerance::enumerate_complete_tolerances(p, budget)?;
            let items: Vec<Value> = all
                .iter()
                .map(|r| {
                    let e = tolerance::endpoint_maps(p, r).expect("complete tolerances have endpoints");
                    let names = |v: &[usize]| v.iter().map(|&x| p.name(x).to_string()).collect::<Vec<_>>();
                    json!({ "relation": tolerance::matrix_json(r), "lower": names(&e.f), "upper": names(&e.g) })
                })
                .collect();
            Ok(Outcome::json(&json!({ "count": all.len(), "tolerances": items }), true))
        }
        Command::SearchOpenProblem {
            file,
            trials,
            seed,
            family,
            out,
        } => {
            let m = strict(&file)?;
            let pool = search::model_pool(&m.lattice, m.ordered.as_ref())?;
            let family = match family {
                SearchFamily::Tolerance => Family::Tolerance,
                SearchFamily::General => Family::General,
            };
            let v = search::search_compat_counterexample(&pool, &SearchConfig { trials, seed, family });
            let o = Outcome::json(&serde_json::to_value(&v).expect("serializable"), true);
            if let Some(path) = out {
                write_file(&path, &o.stdout)?;
            }
            Ok(o)
        }
        Command::Generate {
            kind,
            family,
            size,
            power,
            degrees,
            tolerance,
            seed,
            out,
        } => {
            let family = match family {
                FamilyArg::Lukasiewicz => ChainKind::Lukasiewicz,
                FamilyArg::Godel => ChainKind::Godel,
                FamilyArg::Goguen => ChainKind::Goguen,
            };
            let mut params = GenerateParams::new(kind.parse::<Kind>()?, family, size, seed);
            params.power = power;
            params.degrees = degrees;
            params.tolerance = tolerance;
            let o = Outcome::json(&generate::generate(&params)?.to_json(), true);
            if let Some(path) = out {
                write_file(&path, &o.stdout)?;
            }
            Ok(o)
        }
        Command::ExportDot {
            file,
            what,
            relation,
            budget,
        } => {
            let m = strict(&file)?;
            let p = m.ordered()?;
            let text = match what {
                What::Order => dot::to_dot(p, "U"),
                What::Factor => {
                    let name = relation
                        .ok_or_else(|| Error::Precondition("--what factor needs --relation".into()))?;
                    let f = tolerance::factor(p, m.relation(&name)?, budget)?;
                    dot::to_dot(&f.ordered, &format!("U/{name}"))
                }
            };
            Ok(Outcome { stdout: text, code: 0 })
        }
        Command::PowerCheck {
            file,
            relation,
            left,
            right,
            budget,
            seed,
        } => {
            let m = strict(&file)?;
            let r = m.relation(&relation)?;
            match (left, right) {
                (Some(a), Some(b)) => {
                    let (sa, sb) = (m.set(&a)?, m.set(&b)?);
                    let l = &m.lattice;
                    let v = json!({
                        "relation": relation,
                        "left": a,
                        "right": b,
                        "forward": l.name(power::forward(r, sa, sb)?),
                        "backward": l.name(power::backward(r, sa, sb)?),
                        "power": l.name(power::power(r, sa, sb)?),
                    });
                    Ok(Outcome::json(&v, true))
                }
                _ => {
                    let p = m.ordered()?;
                    let rep = fuzzord::laws::power::power_relations(p, &[(relation, r.clone())], &Sweep::new(budget, seed));
                    let v = json!({ "passed": rep.passed(), "checks": rep.checks });
                    Ok(Outcome::json(&v, rep.passed()))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! `possibilist`: command-line front end for C1 and classical possibilistic
//! reasoning.
//!
//! Exit codes: 0 entailed/valid/success, 1 not entailed/invalid/failed check,
//! 2 usage or input error, 3 resource bound.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use possibilist_core::c1::find_countermodel;
use possibilist_core::classical::classical_countermodel;
use possibilist_core::defaults::{g_chain, parse_defaults, ranks_to_levels, z_rank, RankedDefaults};
use possibilist_core::formula::atoms_of;
use possibilist_core::pkb::{check_p_properties, parse_kb, ClosureRow, PossibilisticKB};
use possibilist_core::possibility::{check_necessity_axioms, AxiomSample, SampleCounts};
use possibilist_core::sample::{rng, FormulaGen};
use possibilist_core::{parse, Backend, Config, Error, Formula, Logic};

#[derive(Parser)]
#[command(name = "possibilist", version, about = "Possibilistic reasoning over classical logic and C1")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest atom set enumerated classically.
    #[arg(long, global = true)]
    max_atoms: Option<usize>,
    /// Largest evaluation set searched in C1.
    #[arg(long, global = true)]
    max_evalset: Option<usize>,
    /// Only require v(!!f) = 1 => v(f) = 1.
    #[arg(long, global = true)]
    weak_neg: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicArg {
    C1,
    Classical,
}

impl From<LogicArg> for Logic {
    fn from(l: LogicArg) -> Logic {
        match l {
            LogicArg::C1 => Logic::C1,
            LogicArg::Classical => Logic::Classical,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide validity of a formula.
    Valid {
        formula: String,
        #[arg(long, value_enum, default_value_t = LogicArg::C1)]
        logic: LogicArg,
    },
    /// Decide C1 entailment; premises are formulas or files of formulas.
    #[command(name = "c1-entail")]
    C1Entail {
        #[arg(long, num_args = 1.., required = true)]
        premises: Vec<String>,
        goal: String,
    },
    /// Paraconsistent acceptance of a formula by a knowledge base.
    Entail { kb: PathBuf, formula: String },
    /// Closure table: N(q), N(!q), N(!q^) per query.
    Closure {
        kb: PathBuf,
        /// One query per line; defaults to the knowledge base's atoms.
        #[arg(long)]
        queries: Option<PathBuf>,
    },
    /// Conditional acceptance of `antecedent |~ consequent`.
    Cond { kb: PathBuf, antecedent: String, consequent: String },
    /// Inconsistency degree of a classical knowledge base.
    Incons { kb: PathBuf },
    /// Multiset union of two knowledge bases.
    Fuse {
        kb1: PathBuf,
        kb2: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Tolerance ranking of a default theory.
    Zrank { defaults: PathBuf },
    /// Acceptance under the filtered default theory.
    Defaults { defaults: PathBuf, query: String },
    /// Property report for the closure of a knowledge base.
    CheckProps {
        kb: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sampled formula pairs.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Necessity-axiom report for the closure of a knowledge base.
    CheckAxioms {
        kb: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failure of a verb, mapped onto the exit-code contract.
enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_resource_bound() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn config(global: &Global) -> Config {
    let mut config = Config::default();
    if let Some(n) = global.max_atoms {
        config.max_atoms = n;
    }
    if let Some(n) = global.max_evalset {
        config.max_evalset = n;
    }
    config.weak_negation = global.weak_neg;
    config
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| Failure::Input(format!("in formula {text:?}: {e}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_kb(path: &Path, config: &Config) -> Result<PossibilisticKB, Failure> {
    let text = read(path)?;
    let kb = parse_kb(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
    Ok(kb.with_config(config.clone()))
}

fn load_defaults(path: &Path, config: &Config) -> Result<RankedDefaults, Failure> {
    let text = read(path)?;
    let (facts, rules) = parse_defaults(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
    Ok(RankedDefaults::build(facts, rules, config.clone())?)
}

/// Formulas one per line, `#` comments, reported with file positions.
fn load_formulas(path: &Path) -> Result<Vec<Formula>, Failure> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split_once('#').map_or(line, |(b, _)| b);
        if body.trim().is_empty() {
            continue;
        }
        let f = parse(body).map_err(|e| {
            let column = if e.line == 1 { e.column } else { 1 };
            Failure::Input(format!("{}:{}:{}: {}", path.display(), n + e.line, column, e.message))
        })?;
        out.push(f);
    }
    Ok(out)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ACCEPT"
    } else {
        "REJECT"
    }
}

fn row_line(row: &ClosureRow, format: Format) -> String {
    match format {
        Format::Text => format!("{} N={} N_neg={} N_badly={}", verdict(row.accepted()), row.n, row.n_neg, row.n_badly),
        Format::Tsv => format!("{}\t{}\t{}\t{}\t{}", row.query, row.n, row.n_neg, row.n_badly, verdict(row.accepted())),
    }
}

fn countermodel_lines(out: &mut String, values: impl Iterator<Item = (String, bool)>) {
    out.push_str("countermodel:\n");
    for (f, v) in values {
        let _ = writeln!(out, "  {f}={}", v as u8);
    }
}

fn decide(premises: &[Formula], goal: &Formula, logic: Logic, config: &Config, format: Format, word: (&str, &str)) -> Outcome {
    let counter: Option<Vec<(String, bool)>> = match logic {
        Logic::C1 => find_countermodel(premises, goal, config)?.map(|m| m.values().map(|(f, v)| (f.render(), v)).collect()),
        Logic::Classical => classical_countermodel(premises, goal, config)?
            .map(|v| v.assignment().iter().map(|(a, b)| (a.clone(), *b)).collect()),
    };
    let ok = counter.is_none();
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "{}", if ok { word.0 } else { word.1 });
            if let Some(values) = counter {
                countermodel_lines(&mut out, values.into_iter());
            }
        }
        Format::Tsv => {
            let _ = writeln!(out, "{goal}\t{}\t{}", logic, if ok { word.0 } else { word.1 });
        }
    }
    Ok((out, ok))
}

fn run(cli: Cli) -> Outcome {
    let config = config(&cli.global);
    let format = cli.global.format;
    match cli.command {
        Command::Valid { formula: text, logic } => {
            decide(&[], &formula(&text)?, logic.into(), &config, format, ("VALID", "INVALID"))
        }
        Command::C1Entail { premises, goal } => {
            let mut fs = Vec::new();
            for p in &premises {
                let path = Path::new(p);
                if path.is_file() {
                    fs.extend(load_formulas(path)?);
                } else {
                    fs.push(formula(p)?);
                }
            }
            decide(&fs, &formula(&goal)?, Logic::C1, &config, format, ("ENTAILED", "NOT ENTAILED"))
        }
        Command::Entail { kb, formula: text } => {
            let kb = load_kb(&kb, &config)?;
            let row = kb.closure_row(&formula(&text)?)?;
            Ok((format!("{}\n", row_line(&row, format)), row.accepted()))
        }
        Command::Closure { kb, queries } => {
            let kb = load_kb(&kb, &config)?;
            let queries = match queries {
                Some(path) => load_formulas(&path)?,
                None => atoms_of(kb.items().iter().map(|i| &i.formula)).into_iter().map(Formula::atom).collect(),
            };
            let rows = kb.closure_report(&queries)?;
            let mut out = String::new();
            match format {
                Format::Text => {
                    let width = rows.iter().map(|r| r.query.render().len()).max().unwrap_or(5).max(5);
                    let _ = writeln!(out, "{:<width$}  {:<6} {:<6} {:<8} verdict", "query", "N", "N_neg", "N_badly");
                    for r in &rows {
                        let _ = writeln!(
                            out,
                            "{:<width$}  {:<6} {:<6} {:<8} {}",
                            r.query.render(),
                            r.n.to_string(),
                            r.n_neg.to_string(),
                            r.n_badly.to_string(),
                            verdict(r.accepted())
                        );
                    }
                }
                Format::Tsv => {
                    out.push_str("query\tN\tN_neg\tN_badly\tverdict\n");
                    for r in &rows {
                        let _ = writeln!(out, "{}", row_line(r, format));
                    }
                }
            }
            Ok((out, true))
        }
        Command::Cond { kb, antecedent, consequent } => {
            let kb = load_kb(&kb, &config)?;
            let (a, c) = (formula(&antecedent)?, formula(&consequent)?);
            let v = kb.cond_entails(&a, &c)?;
            let n = kb.closure_value(&Formula::implies(a.clone(), c.clone()))?;
            let n_badly = kb.closure_value(&Formula::implies(a.clone(), c.badly()))?;
            let n_neg = kb.closure_value(&Formula::implies(a.clone(), c.negated()))?;
            let out = match format {
                Format::Text => format!(
                    "{} N(a->c)={n} N(a->!c^)={n_badly} N(a->!c)={n_neg}{}\n",
                    verdict(v.badly),
                    if v.agree() { "" } else { " (readings disagree)" }
                ),
                Format::Tsv => format!("{a}\t{c}\t{n}\t{n_neg}\t{n_badly}\t{}\n", verdict(v.badly)),
            };
            Ok((out, v.badly))
        }
        Command::Incons { kb } => {
            let kb = load_kb(&kb, &config)?;
            let level = kb.inconsistency_degree()?;
            let out = match format {
                Format::Text => format!("Incons={level}\n"),
                Format::Tsv => format!("{level}\n"),
            };
            Ok((out, true))
        }
        Command::Fuse { kb1, kb2, output } => {
            let fused = load_kb(&kb1, &config)?.fuse(&load_kb(&kb2, &config)?)?;
            std::fs::write(&output, fused.to_text())
                .map_err(|e| Failure::Input(format!("{}: {e}", output.display())))?;
            Ok((format!("wrote {} items to {}\n", fused.len(), output.display()), true))
        }
        Command::Zrank { defaults } => {
            let text = read(&defaults)?;
            let (_, rules) =
                parse_defaults(&text).map_err(|e| Failure::Input(format!("{}:{e}", defaults.display())))?;
            let ranks = z_rank(&rules, &config)?;
            let leveled = ranks_to_levels(&ranks)?;
            let mut out = String::new();
            let mut next = leveled.iter();
            for (k, rank) in ranks.iter().enumerate() {
                for rule in rank {
                    let (_, level) = next.next().expect("one level per rule");
                    let plain = format!("{} => {}", rule.antecedent, rule.consequent);
                    let _ = match format {
                        Format::Text => writeln!(out, "rank {k} level {level}: {plain}"),
                        Format::Tsv => writeln!(out, "{k}\t{level}\t{plain}"),
                    };
                }
            }
            Ok((out, true))
        }
        Command::Defaults { defaults, query } => {
            let rd = load_defaults(&defaults, &config)?;
            let q = formula(&query)?;
            let chain = g_chain(&rd)?;
            let fixed = chain.last().expect("non-empty chain");
            let row = fixed.to_kb().closure_row(&q)?;
            let mut out = String::new();
            if format == Format::Text {
                for (k, stage) in chain.iter().enumerate() {
                    let _ = writeln!(out, "G{k}: {} rules", stage.rules.len());
                }
                for rule in rd.rules.iter().filter(|r| !fixed.rules.contains(r)) {
                    let _ = writeln!(out, "dropped: {} => {}", rule.antecedent, rule.consequent);
                }
            }
            let _ = writeln!(out, "{}", row_line(&row, format));
            Ok((out, row.accepted()))
        }
        Command::CheckProps { kb, seed, samples } => {
            let kb = load_kb(&kb, &config)?.with_logic(Logic::C1);
            let gen = generator(&kb)?;
            let mut r = rng(seed);
            let pairs: Vec<(Formula, Formula)> = (0..samples).map(|_| gen.pair(&mut r)).collect();
            let report = check_p_properties(&kb, &pairs)?;
            let (mut held, mut checked) = (0, 0);
            for q in pairs.iter().flat_map(|(a, b)| [a, b]) {
                checked += 1;
                held += (kb.poss_entails(q)? == (kb.closure_value(q)? > kb.closure_value(&q.negated())?)) as usize;
            }
            let mut out = String::new();
            let _ = writeln!(out, "PROP Prop18: {} {held}/{checked}", if held == checked { "PASS" } else { "FAIL" });
            out.push_str(&report.to_string());
            Ok((out, report.passed() && held == checked))
        }
        Command::CheckAxioms { kb, seed } => {
            let kb = load_kb(&kb, &config)?;
            let gen = generator(&kb)?;
            let backend = Backend::new(kb.logic(), config.clone());
            let counts = SampleCounts { refutable: 0, ..SampleCounts::default() };
            let sample = AxiomSample::generate(&gen, &backend, counts, &mut rng(seed))?;
            let m = kb.closure_map(&sample.necessity_queries())?;
            let report = check_necessity_axioms(&m, &backend, &sample)?;
            Ok((report.to_string(), report.all_passed()))
        }
    }
}

/// Random formulas of depth 2 over the knowledge base's atoms.
fn generator(kb: &PossibilisticKB) -> Result<FormulaGen, Failure> {
    let atoms: Vec<String> = atoms_of(kb.items().iter().map(|i| &i.formula)).into_iter().collect();
    if atoms.is_empty() {
        return Err(Failure::Input("knowledge base has no atoms to sample over".into()));
    }
    Ok(FormulaGen::new(&atoms, 2))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource bound: {msg}");
            ExitCode::from(3)
        }
    }
}

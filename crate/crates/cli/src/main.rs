use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hankel_core::graphs::{
    builtin, classify_labeling, enumerate_rooted_labelings, is_rooted_labeling, parse_graph, LabeledGraph,
};
use hankel_core::groebner::{buchberger, initial_ideal};
use hankel_core::hankel::{
    hankel_edge_ideal, minimal_prime_candidates, property_report_with, verify_minimal_primes, verify_theorem,
    Radicality, ReportOptions, StructuredPrime, TheoremTag,
};
use hankel_core::ideal_ops::height;
use hankel_core::ring::MonomialOrder;
use hankel_core::{Budget, Error, DEFAULT_PAIR_BUDGET};

#[derive(Parser)]
#[command(name = "hankel", version, about = "Hankel edge ideals of labeled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Revlex)]
    order: OrderArg,

    /// Maximum number of S-pair reductions per Groebner basis computation.
    #[arg(long, global = true, env = "HANKEL_BUDGET", default_value_t = DEFAULT_PAIR_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Revlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Revlex => MonomialOrder::RevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph file (`n <count>` header, then `e i j` lines).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in fixture: fig1..fig4, lN, cN, kN, kN-e, t1-N, t2-N.
    #[arg(long)]
    builtin: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<LabeledGraph> {
        if let Some(path) = &self.graph {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(parse_graph(&text)?);
        }
        let name = self.builtin.as_deref().expect("clap enforces one source");
        Ok(builtin(name)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of I_G, one per line.
    Gen(GraphSource),
    /// Reduced Groebner basis of I_G.
    Gb(GraphSource),
    /// Initial ideal of I_G.
    Initial(GraphSource),
    Height(GraphSource),
    /// Labeling classes: Hamiltonian, semi-Hamiltonian, closed, rooted.
    Classify(GraphSource),
    /// Verify a list of minimal primes (the built-in list when none given).
    Minprimes {
        #[command(flatten)]
        source: GraphSource,
        /// Candidate prime, e.g. `vars=1,2;minors=3..5`. Repeatable.
        #[arg(long = "candidate")]
        candidates: Vec<String>,
    },
    /// Check one structural property.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        source: GraphSource,
    },
    /// Run a theorem's instance family.
    Verify {
        /// One of thm2.2, cor2.3, prop2.6, cor2.7, thm3.1, thm3.2, prop3.5, prop2.8-radical.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the rooted labelings of a tree.
    EnumRooted(GraphSource),
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Ci,
    AlmostCi,
    Radical,
    Report,
}

struct Outcome {
    command: &'static str,
    input: Value,
    text: Vec<String>,
    result: Value,
    evidence: Vec<String>,
    ok: bool,
}

impl Outcome {
    fn new(command: &'static str, g: &LabeledGraph) -> Self {
        Outcome {
            command,
            input: graph_input(g),
            text: Vec::new(),
            result: Value::Null,
            evidence: Vec::new(),
            ok: true,
        }
    }
}

fn graph_input(g: &LabeledGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a, b]).collect();
    json!({ "n": g.n(), "edges": edges })
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    input: &'a Value,
    order: String,
    result: &'a Value,
    evidence: &'a [String],
    budget_used: u64,
}

fn run(cli: &Cli, budget: &Budget) -> Result<Outcome> {
    let ord: MonomialOrder = cli.order.into();
    let out = match &cli.command {
        Command::Gen(src) => {
            let g = src.load()?;
            let h = hankel_edge_ideal(&g)?;
            let lines: Vec<String> = h.generators().map(|(_, p)| p.to_string_by(MonomialOrder::Lex)).collect();
            let mut out = Outcome::new("gen", &g);
            out.result = json!(lines);
            out.text = lines;
            out
        }
        Command::Gb(src) => {
            let g = src.load()?;
            let gb = buchberger(hankel_edge_ideal(&g)?.ideal(), ord, budget)?;
            let lines: Vec<String> = gb.elements().iter().map(|p| p.to_string_by(ord)).collect();
            let mut out = Outcome::new("gb", &g);
            out.evidence.push(format!("{} pairs processed", gb.pairs_processed()));
            out.result = json!({ "basis": lines });
            out.text = lines;
            out
        }
        Command::Initial(src) => {
            let g = src.load()?;
            let ini = initial_ideal(hankel_edge_ideal(&g)?.ideal(), ord, budget)?;
            let gens: Vec<String> = ini.generators().iter().map(|m| m.to_string()).collect();
            let mut out = Outcome::new("initial", &g);
            out.text.push(ini.to_string());
            out.result = json!({ "generators": gens });
            out
        }
        Command::Height(src) => {
            let g = src.load()?;
            let ht = height(hankel_edge_ideal(&g)?.ideal(), ord, budget)?;
            let mut out = Outcome::new("height", &g);
            out.text.push(format!("height = {ht}"));
            out.result = json!({ "height": ht });
            out
        }
        Command::Classify(src) => {
            let g = src.load()?;
            let class = classify_labeling(&g);
            let rooted = match is_rooted_labeling(&g) {
                Ok(cert) => Some(cert.is_some()),
                Err(Error::NotATree) => None,
                Err(e) => return Err(e.into()),
            };
            let mut out = Outcome::new("classify", &g);
            out.text = vec![
                format!("labeled hamiltonian: {}", class.labeled_hamiltonian),
                format!("labeled semi-hamiltonian: {}", class.labeled_semi_hamiltonian),
                format!("closed labeling: {}", class.closed_labeling),
                format!("tree: {}", class.tree),
                format!("path: {}", class.path),
                format!("connected: {}", class.connected),
                match rooted {
                    Some(r) => format!("rooted labeling: {r}"),
                    None => "rooted labeling: not a tree".into(),
                },
            ];
            let mut result = serde_json::to_value(class)?;
            result["rooted_labeling"] = json!(rooted);
            out.result = result;
            out
        }
        Command::Minprimes { source, candidates } => {
            let g = source.load()?;
            let h = hankel_edge_ideal(&g)?;
            let list: Vec<StructuredPrime> = if candidates.is_empty() {
                minimal_prime_candidates(&g)?
            } else {
                candidates
                    .iter()
                    .map(|c| c.parse::<StructuredPrime>().with_context(|| format!("candidate `{c}`")))
                    .collect::<Result<_>>()?
            };
            let report = verify_minimal_primes(&h, &list, budget)?;
            let mut out = Outcome::new("minprimes", &g);
            for v in &report.verdicts {
                out.text.push(format!(
                    "{}: contains I_G {}, incomparable {}",
                    v.prime, v.contains_ideal, v.incomparable_with_others
                ));
            }
            out.evidence.push(format!("I_G in intersection: {}", report.ideal_in_intersection));
            out.evidence.push(format!("intersection in radical: {}", report.intersection_in_radical));
            out.ok = report.verified();
            out.text.push(format!("verified: {}", out.ok));
            let mut result = serde_json::to_value(&report)?;
            result["ok"] = json!(out.ok);
            out.result = result;
            out
        }
        Command::Check { property, source } => {
            let g = source.load()?;
            let opts = ReportOptions {
                radicality: matches!(property, Property::Radical | Property::Report),
                order: ord,
            };
            let r = property_report_with(&g, budget, opts)?;
            let mut out = Outcome::new("check", &g);
            let (ok, line) = match property {
                Property::Ci => (r.is_ci, format!("CI: {} (mu={}, height={})", r.is_ci, r.mu, r.height)),
                Property::AlmostCi => (
                    r.is_almost_ci,
                    format!("almost CI: {} (mu={}, height={})", r.is_almost_ci, r.mu, r.height),
                ),
                Property::Radical => (r.is_radical == Radicality::Radical, format!("radical: {}", radical_word(r.is_radical))),
                Property::Report => (
                    true,
                    format!(
                        "mu={} (minimal: {}), height={}, CI: {}, almost CI: {}, radical: {}",
                        r.mu,
                        r.mu_minimal,
                        r.height,
                        r.is_ci,
                        r.is_almost_ci,
                        radical_word(r.is_radical)
                    ),
                ),
            };
            out.ok = ok;
            out.text.push(line);
            out.evidence = r.evidence.clone();
            let mut result = serde_json::to_value(&r)?;
            result.as_object_mut().expect("struct").remove("evidence");
            result["property"] = json!(property.to_possible_value().expect("named").get_name());
            result["ok"] = json!(ok);
            out.result = result;
            out
        }
        Command::Verify {
            theorem,
            min_n,
            max_n,
            jobs,
        } => {
            let tag: TheoremTag = theorem.parse()?;
            let (lo, hi) = tag.bounds();
            let (lo, hi) = (min_n.unwrap_or(lo), max_n.unwrap_or(hi));
            let report = verify_theorem(tag, lo..=hi, *jobs, budget)?;
            let mut text = Vec::new();
            for (n, passed, total) in report.per_n() {
                let verdict = if passed == total { "pass" } else { "FAIL" };
                text.push(format!("{tag} n={n}: {verdict} ({passed}/{total})"));
            }
            for r in report.instances.iter().filter(|r| !r.passed) {
                text.push(format!("  failed {}: {}", r.key, r.detail));
            }
            text.push(format!(
                "{tag}: {} ({} passed, {} failed)",
                if report.ok { "ok" } else { "FALSIFIED" },
                report.passed,
                report.failed
            ));
            Outcome {
                command: "verify",
                input: json!({ "n": Value::Null, "edges": Value::Null, "theorem": tag.tag(), "n_min": report.n_min, "n_max": report.n_max }),
                text,
                evidence: vec![report.statement.to_string()],
                ok: report.ok,
                result: serde_json::to_value(&report)?,
            }
        }
        Command::EnumRooted(src) => {
            let g = src.load()?;
            let labelings = enumerate_rooted_labelings(&g)?;
            let mut out = Outcome::new("enum-rooted", &g);
            out.text = labelings.iter().map(|t| t.to_string()).collect();
            out.text.push(format!("{} rooted labelings", labelings.len()));
            out.result = json!({ "count": labelings.len(), "labelings": labelings });
            out
        }
    };
    Ok(out)
}

fn radical_word(r: Radicality) -> &'static str {
    match r {
        Radicality::Radical => "true",
        Radicality::NotRadical => "false",
        Radicality::Unknown => "unknown",
        Radicality::NotChecked => "not checked",
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.budget);
    let outcome = match run(&cli, &budget) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    if cli.json {
        let ord: MonomialOrder = cli.order.into();
        let report = JsonReport {
            command: outcome.command,
            input: &outcome.input,
            order: ord.name(),
            result: &outcome.result,
            evidence: &outcome.evidence,
            budget_used: budget.used(),
        };
        match serde_json::to_string_pretty(&report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        for line in &outcome.text {
            println!("{line}");
        }
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

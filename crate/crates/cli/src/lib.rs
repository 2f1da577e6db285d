//! Command-line front end for `liecohom`.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! everything that would be written to standard output and standard error,
//! so the binary is a thin wrapper and tests can call it in process.

pub mod doc;
pub mod report;

use clap::{Parser, Subcommand};
use liecohom::abgroup::Subgroup;
use liecohom::cohomology::{h2_with, Limits};
use liecohom::extensions::{brute_equivalent, classify_extensions_with};
use liecohom::fiveterm::check_five_term_with;
use liecohom::liering::{LieIdeal, LieRing};
use liecohom::schur::schur_multiplier_with;
use liecohom::FinAbGroup;
use sha2::{Digest, Sha256};

use doc::{load_cocycle, load_ring, rows, LieRingDocument, FORMAT};
use report::{
    CocycleTables, ExtensionEntry, FiveTermVerdicts, MapInfo, OracleCheck, Payload, Report,
    ScheduleRow, SubgroupInfo, ViolationInfo, DETERMINISM,
};

pub const MAX_ORDER_ENV: &str = "LIECOHOM_MAX_ORDER";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Document { path: String, message: String },
    #[error(transparent)]
    Math(#[from] liecohom::Error),
    #[error("oracle disagrees with the cohomology classification")]
    OracleDisagrees,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "liecohom",
    version,
    about = "Second cohomology of finite Lie rings"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest ring order accepted by the cohomology engine.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a Lie ring document.
    Validate { ring: String },
    /// Orders, center and derived ideal.
    Info { ring: String },
    /// H^2(L, A) for trivial coefficients A.
    H2 {
        ring: String,
        /// Moduli of A, comma separated.
        #[arg(long, value_parser = parse_moduli)]
        coeff: Moduli,
    },
    /// Central extensions of L by A up to equivalence.
    Classify {
        ring: String,
        #[arg(long, value_parser = parse_moduli)]
        coeff: Moduli,
        /// Cross-check every pair of classes by exhaustive search.
        #[arg(long)]
        oracle: bool,
        /// Largest |H^2| that will be enumerated.
        #[arg(long, value_name = "N")]
        budget: Option<u128>,
    },
    /// Check the five-term sequence for a central ideal.
    FiveTerm {
        ring: String,
        /// `center`, or generators as `v1;v2;...` with comma-separated coefficients.
        #[arg(long, default_value = "center", value_parser = parse_ideal)]
        ideal: IdealSpec,
        #[arg(long, value_parser = parse_moduli)]
        coeff: Moduli,
    },
    /// Schur multiplier.
    Schur { ring: String },
    /// Check a cocycle file and report its class.
    CocycleCheck { file: String },
}

#[derive(Debug, Clone)]
struct Moduli(Vec<i64>);

#[derive(Debug, Clone)]
enum IdealSpec {
    Center,
    Generators(Vec<Vec<i64>>),
}

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("\"{t}\" is not an integer"))
        })
        .collect()
}

fn parse_moduli(s: &str) -> Result<Moduli, String> {
    let v = parse_ints(s)?;
    if let Some(m) = v.iter().find(|&&m| m < 1) {
        return Err(format!("modulus {m} must be at least 1"));
    }
    Ok(Moduli(v))
}

fn parse_ideal(s: &str) -> Result<IdealSpec, String> {
    if s.trim() == "center" {
        return Ok(IdealSpec::Center);
    }
    s.split(';')
        .map(parse_ints)
        .collect::<Result<_, _>>()
        .map(IdealSpec::Generators)
}

/// Run with `LIECOHOM_MAX_ORDER` taken from the process environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let env = std::env::var(MAX_ORDER_ENV).ok();
    run_with_env(args, env.as_deref())
}

pub fn run_with_env<I, T>(args: I, max_order_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            let body = text.split("\n\nUsage:").next().unwrap_or_default();
            let body = body.strip_prefix("error: ").unwrap_or(body);
            let body = body
                .split("For more information")
                .next()
                .unwrap_or_default();
            let line = body.split_whitespace().collect::<Vec<_>>().join(" ");
            return fail(&CliError::Usage(line));
        }
    };
    match execute(&cli, &args, max_order_env) {
        Ok((code, stdout, diagnostic)) => Outcome {
            code,
            stdout,
            stderr: diagnostic.map(|d| one_line(&d)).unwrap_or_default(),
        },
        Err(e) => fail(&e),
    }
}

fn one_line(msg: &str) -> String {
    format!("error: {}\n", msg.replace('\n', " "))
}

fn fail(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: one_line(&e.to_string()),
    }
}

fn limits(cli: &Cli, env: Option<&str>) -> Result<Limits, CliError> {
    let mut l = Limits::default();
    if let Some(v) = env {
        l.max_order = v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_ORDER_ENV}=\"{v}\" is not a nonnegative integer"
            ))
        })?;
    }
    if let Some(m) = cli.max_order {
        l.max_order = m;
    }
    Ok(l)
}

pub fn show_group(factors: &[u64]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|&&d| d > 1)
        .map(|d| format!("Z/{d}"))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn show_vec(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn subgroup_info(s: &Subgroup) -> Result<SubgroupInfo, CliError> {
    Ok(SubgroupInfo {
        order: s.order().to_string(),
        invariant_factors: s.as_group()?.group().invariant_factors(),
        generators: s.canonical_generators(),
    })
}

fn coeff_group(m: &Moduli) -> Result<FinAbGroup, CliError> {
    Ok(FinAbGroup::new(&m.0)?)
}

type Executed = (i32, String, Option<String>);

fn execute(cli: &Cli, args: &[String], env: Option<&str>) -> Result<Executed, CliError> {
    let limits = limits(cli, env)?;
    let (bytes, payload, text, verdict) = match &cli.command {
        Command::Validate { ring } => {
            let loaded = load_ring(ring)?;
            let l = &loaded.value;
            let order = l.additive().order().to_string();
            let center_order = l.center().subgroup.order().to_string();
            let text = format!("valid Lie ring, order {order}, center order {center_order}\n");
            let payload = Payload::Validate {
                order,
                invariant_factors: l.additive().invariant_factors(),
                center_order,
            };
            (loaded.bytes, payload, text, None)
        }
        Command::Info { ring } => {
            let loaded = load_ring(ring)?;
            let l = &loaded.value;
            let center = subgroup_info(&l.center().subgroup)?;
            let derived = subgroup_info(&l.derived().subgroup)?;
            let doc = LieRingDocument::from_ring(l);
            let mut text = format!(
                "order {}, additive group {}\nabelian: {}\n",
                l.additive().order(),
                show_group(&l.additive().invariant_factors()),
                if l.is_abelian() { "yes" } else { "no" }
            );
            for (k, v) in &doc.bracket {
                let (i, j) = k.split_once(',').expect("own key format");
                let v: Vec<u64> = v.iter().map(|&c| c as u64).collect();
                text.push_str(&format!("[g{i}, g{j}] = {}\n", show_vec(&v)));
            }
            for (name, s) in [("center", &center), ("derived", &derived)] {
                let gens: Vec<String> = s.generators.iter().map(|g| show_vec(g)).collect();
                text.push_str(&format!(
                    "{name}: order {}, {}, generated by {}\n",
                    s.order,
                    show_group(&s.invariant_factors),
                    if gens.is_empty() {
                        "0".to_string()
                    } else {
                        gens.join(", ")
                    }
                ));
            }
            let payload = Payload::Info {
                order: l.additive().order().to_string(),
                invariant_factors: l.additive().invariant_factors(),
                abelian: l.is_abelian(),
                brackets: doc
                    .bracket
                    .into_iter()
                    .map(|(k, v)| (k, v.into_iter().map(|c| c as u64).collect()))
                    .collect(),
                center,
                derived,
            };
            (loaded.bytes, payload, text, None)
        }
        Command::H2 { ring, coeff } => {
            let loaded = load_ring(ring)?;
            let l = &loaded.value;
            let a = coeff_group(coeff)?;
            let h = h2_with(l, &a, &limits)?;
            let n = l.size().expect("checked by limits");
            let k = h.group().rank();
            let representatives = h
                .reps()
                .iter()
                .enumerate()
                .map(|(i, c)| CocycleTables {
                    class: (0..k).map(|j| u64::from(i == j)).collect(),
                    f: rows(c.f_table(), n),
                    g: rows(c.g_table(), n),
                })
                .collect();
            let text = format!(
                "H2 = {}\n|Z2| = {}, |B2| = {}\n",
                show_group(h.group().moduli()),
                h.z2_order(),
                h.b2_order()
            );
            let payload = Payload::H2 {
                coeff: a.moduli().to_vec(),
                invariant_factors: h.group().moduli().to_vec(),
                z2_order: h.z2_order().to_string(),
                b2_order: h.b2_order().to_string(),
                representatives,
            };
            (loaded.bytes, payload, text, None)
        }
        Command::Classify {
            ring,
            coeff,
            oracle,
            budget,
        } => {
            let loaded = load_ring(ring)?;
            let l = &loaded.value;
            let a = coeff_group(coeff)?;
            let mut lim = limits;
            if let Some(b) = budget {
                lim.class_budget = *b;
            }
            let h = h2_with(l, &a, &lim)?;
            let classes = classify_extensions_with(l, &a, &lim)?;
            let oracle = if *oracle {
                let mut pairs = 0u64;
                for (i, e) in classes.iter().enumerate() {
                    for f in &classes[i..] {
                        let same = brute_equivalent(&e.extension, &f.extension)?;
                        if same != (e.class == f.class) {
                            return Err(CliError::OracleDisagrees);
                        }
                        pairs += 1;
                    }
                }
                Some(OracleCheck { pairs, agree: true })
            } else {
                None
            };
            let mut text = format!(
                "H2 = {}, {} classes\n",
                show_group(h.group().moduli()),
                classes.len()
            );
            for c in &classes {
                text.push_str(&format!(
                    "class {}: B = {}{}\n",
                    show_vec(&c.class),
                    show_group(&c.invariants),
                    if c.split { ", split" } else { "" }
                ));
            }
            if let Some(o) = &oracle {
                text.push_str(&format!("oracle: {} pairs agree\n", o.pairs));
            }
            let entries = classes
                .iter()
                .map(|c| ExtensionEntry {
                    class: c.class.clone(),
                    split: c.split,
                    invariant_factors: c.invariants.clone(),
                    total: LieRingDocument::from_ring(c.extension.total()),
                    iota: c.extension.iota().images().to_vec(),
                    beta: c.extension.beta().map().images().to_vec(),
                })
                .collect();
            let payload = Payload::Classify {
                coeff: a.moduli().to_vec(),
                h2: h.group().moduli().to_vec(),
                classes: entries,
                oracle,
            };
            (loaded.bytes, payload, text, None)
        }
        Command::FiveTerm { ring, ideal, coeff } => {
            let loaded = load_ring(ring)?;
            let l = &loaded.value;
            let a = coeff_group(coeff)?;
            let h = resolve_ideal(l, ideal)?;
            let rep = check_five_term_with(l, &h, &a, &limits)?;
            let names = ["Hom(L/H,A)", "Hom(L,A)", "Hom(H,A)", "H2(L/H,A)", "H2(L,A)"];
            let marks = [
                rep.inf_injective,
                rep.exact_at_hom_l,
                rep.exact_at_hom_h,
                rep.exact_at_h2_quotient,
            ];
            let ideal_info = subgroup_info(&rep.ideal)?;
            let mut text = format!(
                "H = {} of order {}\n",
                show_group(&ideal_info.invariant_factors),
                ideal_info.order
            );
            for (i, name) in names.iter().enumerate() {
                let verdict = match marks.get(i) {
                    Some(true) => "  exact",
                    Some(false) => "  NOT exact",
                    None => "",
                };
                text.push_str(&format!(
                    "{name:<11} = {}{verdict}\n",
                    show_group(&rep.groups[i].invariant_factors())
                ));
            }
            let exact = rep.all_exact();
            text.push_str(if exact {
                "sequence: exact\n"
            } else {
                "sequence: NOT exact\n"
            });
            let maps = [
                ("inf_hom", &rep.inf_hom),
                ("res", &rep.res),
                ("tra", &rep.tra),
                ("inf_h2", &rep.inf_h2),
            ]
            .into_iter()
            .map(|(name, m)| MapInfo {
                name: name.to_string(),
                images: m.images().to_vec(),
            })
            .collect();
            let payload = Payload::FiveTerm {
                coeff: a.moduli().to_vec(),
                ideal: ideal_info,
                groups: rep.groups.iter().map(|g| g.moduli().to_vec()).collect(),
                maps,
                verdicts: FiveTermVerdicts {
                    inf_hom_injective: rep.inf_injective,
                    exact_at_hom_l: rep.exact_at_hom_l,
                    exact_at_hom_h: rep.exact_at_hom_h,
                    exact_at_h2_quotient: rep.exact_at_h2_quotient,
                },
                exact,
            };
            (loaded.bytes, payload, text, None)
        }
        Command::Schur { ring } => {
            let loaded = load_ring(ring)?;
            let m = schur_multiplier_with(&loaded.value, &limits)?;
            let mut text = format!("M(L) = {}\n", show_group(&m.group.invariant_factors()));
            for s in &m.schedule {
                text.push_str(&format!(
                    "N = {}: H2 = {}, multiplier = {}\n",
                    s.modulus,
                    show_group(&s.h2),
                    show_group(&s.multiplier)
                ));
            }
            text.push_str(&format!(
                "stable: {}\n",
                if m.stable { "yes" } else { "no" }
            ));
            let payload = Payload::Schur {
                multiplier: m.group.invariant_factors(),
                stable: m.stable,
                schedule: m
                    .schedule
                    .iter()
                    .map(|s| ScheduleRow {
                        modulus: s.modulus,
                        h2: s.h2.clone(),
                        multiplier: s.multiplier.clone(),
                    })
                    .collect(),
            };
            (loaded.bytes, payload, text, None)
        }
        Command::CocycleCheck { file } => {
            let loaded = load_cocycle(file)?;
            let c = &loaded.value;
            limits.check_ring(c.ring())?;
            let coeff = c.coeff().moduli().to_vec();
            match c.check()? {
                Some(v) => {
                    let text = format!(
                        "not a cocycle: condition ({}) fails at x={}, y={}, z={}\n",
                        v.condition, v.witness.0, v.witness.1, v.witness.2
                    );
                    let payload = Payload::CocycleCheck {
                        coeff,
                        cocycle: false,
                        violation: Some(ViolationInfo {
                            condition: v.condition,
                            x: v.witness.0,
                            y: v.witness.1,
                            z: v.witness.2,
                        }),
                        class: None,
                        h2: None,
                    };
                    let diag = liecohom::Error::from(v).to_string();
                    (loaded.bytes, payload, text, Some((1, diag)))
                }
                None => {
                    let h = h2_with(c.ring(), c.coeff(), &limits)?;
                    let class = h.class_of(c)?;
                    let text = format!(
                        "cocycle, class {} in H2 = {}\n",
                        show_vec(&class),
                        show_group(h.group().moduli())
                    );
                    let payload = Payload::CocycleCheck {
                        coeff,
                        cocycle: true,
                        violation: None,
                        class: Some(class),
                        h2: Some(h.group().moduli().to_vec()),
                    };
                    (loaded.bytes, payload, text, None)
                }
            }
        }
    };
    let out = if cli.json {
        Report {
            format: FORMAT,
            command: args.iter().skip(1).cloned().collect(),
            input_sha256: format!("{:x}", Sha256::digest(&bytes)),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            determinism: DETERMINISM.to_string(),
            result: payload,
        }
        .to_json()
    } else {
        text
    };
    let (code, diag) = match verdict {
        Some((code, d)) => (code, Some(d)),
        None => (0, None),
    };
    Ok((code, out, diag))
}

fn resolve_ideal(l: &LieRing, spec: &IdealSpec) -> Result<LieIdeal, CliError> {
    match spec {
        IdealSpec::Center => Ok(l.center()),
        IdealSpec::Generators(gens) => {
            let g = l.additive();
            let elems = gens
                .iter()
                .map(|v| g.element(v))
                .collect::<Result<Vec<_>, _>>()?;
            let s = Subgroup::new(g, &elems)?;
            Ok(l.central_ideal(s)?)
        }
    }
}

//! `spectral`: build finite commutative rings, inspect their spectra and
//! hull/kernel structure, classify ideals, enumerate filters, run the
//! claim suite, and hunt for counterexamples to weakened claims.
//!
//! Exit codes: 0 success (and hunts that find or miss a witness), 1 build
//! or runtime failure (including a non-green verify), 2 usage or parse
//! errors, 3 a hunt stopped by a resource cap.

mod specparse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use spectral_core::caps::Caps;
use spectral_core::classes::{classify_ideal, closure_hy, SFamily, Variant};
use spectral_core::error::Error as CoreError;
use spectral_core::ideal::{all_ideals, span, Ideal};
use spectral_core::lattice::{
    build_lattice, filters, galois_filter_to_ideal, galois_ideal_to_filter, FilterKind,
};
use spectral_core::ring::{build_ring, Ring, RingSpec};
use spectral_core::space::{build_space, hull_ideal, kernel, YSelector};
use spectral_core::spectrum::{ring_flags, spectrum, spectrum_label};
use spectral_core::suite::{
    default_corpus, hunt, registry, run_suite, Case, CheckConfig, Status,
};

#[derive(Parser)]
#[command(
    name = "spectral",
    about = "Exact computation on finite commutative rings: spectra, hull/kernel operators, ideal classes, filters, and a machine-checked claim suite",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a ring and print its operation tables
    Define {
        /// Ring spec: Z/n, GF(p)[x]/(f), products with `x`, or table:PATH
        #[arg(long)]
        ring: String,
        /// Emit JSON (re-ingestable as a table ring) instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the prime spectrum, the radicals, and the ring class flags
    Spec {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify one ideal against the hull-based ideal classes
    Classify {
        #[arg(long)]
        ring: String,
        /// Selector for Y: spec, max, min, idx:0,2, or minover:<gens>
        #[arg(long, default_value = "spec")]
        y: String,
        /// Generator list in the ring's canonical element encoding
        #[arg(long)]
        ideal: String,
        /// Evaluate every named condition variant, not just the defaults
        #[arg(long)]
        all_variants: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the three closures of one ideal
    Closures {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "spec")]
        y: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        json: bool,
    },
    /// Dump the lattice of hull sets with witness generators
    Lattice {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "spec")]
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate filters of the hull lattice
    Filters {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "spec")]
        y: String,
        /// all, proper, prime, or ultra
        #[arg(long, default_value = "all")]
        kind: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the claim suite over a corpus
    Verify {
        /// `default` or a path to a JSON list of {ring, selector} cases
        #[arg(long, default_value = "default")]
        corpus: String,
        /// Write the JSONL report here (`-` for stdout)
        #[arg(long)]
        json: Option<String>,
        /// Run cases on one thread
        #[arg(long)]
        sequential: bool,
        /// List the registered claims instead of running them
        #[arg(long)]
        list: bool,
    },
    /// Weaken one claim by dropping a hypothesis and scan for a witness
    Hunt {
        /// Claim id, T1 through T35
        #[arg(long)]
        theorem: String,
        /// Named hypothesis to drop; omit to hunt the claim as stated
        #[arg(long)]
        drop: Option<String>,
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Build(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure::Build(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match Caps::from_env() {
        Ok(caps) => caps,
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string(), "kind": "usage"}));
            return ExitCode::from(2);
        }
    };
    match run(cli.command, caps) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({"error": msg, "kind": "usage"}));
            ExitCode::from(2)
        }
        Err(Failure::Build(msg)) => {
            eprintln!("{}", json!({"error": msg, "kind": "build"}));
            ExitCode::from(1)
        }
    }
}

struct RingEnv {
    ring: std::sync::Arc<Ring>,
    ideals: Vec<Ideal>,
    spectrum: spectral_core::spectrum::Spectrum,
}

fn ring_env(spec: &RingSpec, caps: &Caps) -> Result<RingEnv, Failure> {
    let ring = build_ring(spec, caps)?;
    let ideals = all_ideals(&ring, caps)?;
    let spectrum = spectrum(&ring, &ideals);
    Ok(RingEnv { ring, ideals, spectrum })
}

fn parse_case(ring: &str, selector: &str) -> Result<(RingSpec, YSelector), Failure> {
    let spec = specparse::parse_ring_spec(ring).map_err(usage)?;
    let sel = specparse::parse_selector(selector, &spec).map_err(usage)?;
    Ok((spec, sel))
}

fn load_corpus(arg: &str, caps: &Caps) -> Result<Vec<Case>, Failure> {
    if arg == "default" {
        return Ok(default_corpus(caps)?);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| usage(format!("reading corpus `{arg}`: {e}")))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("parsing corpus `{arg}`: {e}")))
}

fn run(command: Command, caps: Caps) -> Result<u8, Failure> {
    match command {
        Command::Define { ring, json } => {
            let spec = specparse::parse_ring_spec(&ring).map_err(usage)?;
            let ring = build_ring(&spec, &caps)?;
            let n = ring.size();
            let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
                (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
            };
            let add = table(&|a, b| ring.add(a, b));
            let mul = table(&|a, b| ring.mul(a, b));
            if json {
                println!(
                    "{}",
                    json!({
                        "ring": ring.label(),
                        "size": n,
                        "zero": ring.zero(),
                        "one": ring.one(),
                        "elements": (0..n).map(|a| ring.elem_label(a)).collect::<Vec<_>>(),
                        "add": add,
                        "mul": mul,
                    })
                );
            } else {
                println!("{}  (size {n}, zero {}, one {})", ring.label(), ring.zero(), ring.one());
                println!(
                    "elements: {}",
                    (0..n).map(|a| ring.elem_label(a)).collect::<Vec<_>>().join(" ")
                );
                for (name, t) in [("add", &add), ("mul", &mul)] {
                    println!("{name}:");
                    for row in t {
                        println!(
                            "  {}",
                            row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Spec { ring, json } => {
            let spec = specparse::parse_ring_spec(&ring).map_err(usage)?;
            let env = ring_env(&spec, &caps)?;
            let flags = ring_flags(&env.ring, &env.ideals, &env.spectrum)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "ring": env.ring.label(),
                        "primes": env.spectrum.primes.iter().map(|p| p.gens_label()).collect::<Vec<_>>(),
                        "rad": env.spectrum.rad.gens_label(),
                        "jac": env.spectrum.jac.gens_label(),
                        "flags": flags,
                    })
                );
            } else {
                println!("Spec({}) = {}", env.ring.label(), spectrum_label(&env.spectrum));
                println!(
                    "Rad = {}, Jac = {}",
                    env.spectrum.rad.gens_label(),
                    env.spectrum.jac.gens_label()
                );
                println!(
                    "reduced {}, semiprimitive {}, regular {}, gelfand {}, weakly_regular {}, property_A {}, ac {}",
                    flags.reduced,
                    flags.semiprimitive,
                    flags.regular_ring,
                    flags.gelfand,
                    flags.weakly_regular,
                    flags.property_a,
                    flags.ac_ring
                );
            }
            Ok(0)
        }
        Command::Classify { ring, y, ideal, all_variants, json } => {
            let (spec, sel) = parse_case(&ring, &y)?;
            let gens = specparse::parse_gens(&ideal, &spec).map_err(usage)?;
            let env = ring_env(&spec, &caps)?;
            let space = build_space(&env.ring, &env.spectrum, &sel)?;
            let family = SFamily::build(&space, &env.ideals);
            let target = span(&env.ring, &gens)?;
            let variants = if all_variants { Variant::all() } else { Vec::new() };
            let report = classify_ideal(&space, &family, &target, &variants)?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("{}", target);
                println!(
                    "semiprime {}, hy {}, strong_hy {}, y_hilbert {}",
                    report.semiprime, report.hy, report.strong_hy, report.y_hilbert
                );
                for (id, value) in &report.variants {
                    println!("  {id}: {value}");
                }
            }
            Ok(0)
        }
        Command::Closures { ring, y, ideal, json } => {
            let (spec, sel) = parse_case(&ring, &y)?;
            let gens = specparse::parse_gens(&ideal, &spec).map_err(usage)?;
            let env = ring_env(&spec, &caps)?;
            let space = build_space(&env.ring, &env.spectrum, &sel)?;
            let lattice = build_lattice(&space, &env.ideals)?;
            let target = span(&env.ring, &gens)?;
            let hy = closure_hy(&space, &target);
            let strong = {
                let f = galois_ideal_to_filter(&lattice, &target)?;
                galois_filter_to_ideal(&lattice, &f)?
            };
            let kh = kernel(&space, &hull_ideal(&space, &target));
            if json {
                println!(
                    "{}",
                    json!({
                        "ideal": target.gens_label(),
                        "closure_hy": hy.gens_label(),
                        "closure_strong": strong.gens_label(),
                        "kernel_hull": kh.gens_label(),
                    })
                );
            } else {
                println!("I    = {}", target);
                println!("I_H  = {}", hy);
                println!("I_SH = {}", strong);
                println!("khY  = {}", kh);
            }
            Ok(0)
        }
        Command::Lattice { ring, y, json } => {
            let (spec, sel) = parse_case(&ring, &y)?;
            let env = ring_env(&spec, &caps)?;
            let space = build_space(&env.ring, &env.spectrum, &sel)?;
            let lattice = build_lattice(&space, &env.ideals)?;
            if json {
                let elements: Vec<_> = lattice
                    .elements()
                    .iter()
                    .map(|e| {
                        json!({
                            "hull": space.set_label(&e.set),
                            "witness": e.witness.iter().map(|&g| env.ring.elem_label(g)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({"ring": env.ring.label(), "y": space.label(), "elements": elements})
                );
            } else {
                println!(
                    "lattice over Y={} on {} ({} elements)",
                    space.label(),
                    env.ring.label(),
                    lattice.len()
                );
                for e in lattice.elements() {
                    let witness: Vec<&str> =
                        e.witness.iter().map(|&g| env.ring.elem_label(g)).collect();
                    println!("  {} -> hull({{{}}})", space.set_label(&e.set), witness.join(","));
                }
            }
            Ok(0)
        }
        Command::Filters { ring, y, kind, json } => {
            let (spec, sel) = parse_case(&ring, &y)?;
            let kind = match kind.as_str() {
                "all" => FilterKind::All,
                "proper" => FilterKind::Proper,
                "prime" => FilterKind::Prime,
                "ultra" => FilterKind::Ultra,
                other => return Err(usage(format!("unknown filter kind `{other}`"))),
            };
            let env = ring_env(&spec, &caps)?;
            let space = build_space(&env.ring, &env.spectrum, &sel)?;
            let lattice = build_lattice(&space, &env.ideals)?;
            let infos = filters(&lattice, kind, &caps)?;
            if json {
                let list: Vec<_> = infos
                    .iter()
                    .map(|f| {
                        json!({
                            "members": f.filter.iter()
                                .map(|i| space.set_label(&lattice.elements()[i].set))
                                .collect::<Vec<_>>(),
                            "proper": f.proper,
                            "prime": f.prime,
                            "ultra": f.ultra,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({"ring": env.ring.label(), "y": space.label(), "filters": list})
                );
            } else {
                println!(
                    "{} filters over Y={} on {}",
                    infos.len(),
                    space.label(),
                    env.ring.label()
                );
                for f in &infos {
                    println!("  {}", lattice.filter_label(f));
                }
            }
            Ok(0)
        }
        Command::Verify { corpus, json, sequential, list } => {
            if list {
                if json.as_deref() == Some("-") {
                    let entries: Vec<_> = registry()
                        .iter()
                        .map(|e| json!({"id": e.id, "claim": e.claim, "hypotheses": e.hypotheses}))
                        .collect();
                    println!("{}", json!(entries));
                } else {
                    for e in registry() {
                        let hyps = if e.hypotheses.is_empty() {
                            String::new()
                        } else {
                            format!("  [hypotheses: {}]", e.hypotheses.join(", "))
                        };
                        println!("{:>4}  {}{}", e.id, e.claim, hyps);
                    }
                }
                return Ok(0);
            }
            let cases = load_corpus(&corpus, &caps)?;
            let config = CheckConfig::new(caps);
            let report = run_suite(&cases, &config, !sequential);
            let jsonl = report.to_jsonl();
            match json.as_deref() {
                Some("-") => print!("{jsonl}"),
                Some(path) => {
                    std::fs::write(path, &jsonl)
                        .map_err(|e| Failure::Build(format!("writing `{path}`: {e}")))?;
                    print_verify_summary(&report);
                }
                None => print_verify_summary(&report),
            }
            Ok(if report.has_failures() { 1 } else { 0 })
        }
        Command::Hunt { theorem, drop, corpus, json } => {
            let cases = load_corpus(&corpus, &caps)?;
            let config = CheckConfig::new(caps);
            let outcome = match hunt(&cases, &theorem, drop.as_deref(), &config) {
                Ok(outcome) => outcome,
                Err(e @ (CoreError::UnknownClaim(_) | CoreError::UnknownHypothesis { .. })) => {
                    return Err(usage(e))
                }
                Err(e) => return Err(e.into()),
            };
            if json {
                println!("{}", serde_json::to_string(&outcome).expect("serializable"));
            } else if let Some(case) = &outcome.witness_case {
                println!("{}: witness in {case}", outcome.theorem);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.witness).expect("serializable")
                );
            } else {
                println!(
                    "{}: no witness across {} cases ({} instances visited)",
                    outcome.theorem, outcome.cases, outcome.visited
                );
            }
            Ok(if outcome.cap_exceeded { 3 } else { 0 })
        }
    }
}

fn print_verify_summary(report: &spectral_core::suite::Report) {
    let s = &report.summary;
    for r in &report.results {
        if !matches!(r.status, Status::Pass | Status::Vacuous) {
            println!(
                "{:<14} {:>4} {:?} {}",
                r.case,
                r.theorem,
                r.status,
                r.error.as_deref().unwrap_or("")
            );
        }
    }
    println!(
        "{} cases, {} checks: {} pass, {} vacuous, {} failures, {} cap-exceeded, {} errors",
        s.cases, s.checks, s.pass, s.vacuous, s.fail, s.cap_exceeded, s.errors
    );
}

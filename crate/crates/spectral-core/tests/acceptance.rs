//! Acceptance suite: eight go/no-go criteria, each one test printing one
//! PASS/FAIL line (`cargo test --test acceptance -- --nocapture` to see
//! the lines). All comparisons are exact set/count equalities; the only
//! tolerance is the wall-clock budget on the full verification run.

use std::sync::Arc;
use std::time::Instant;

use spectral_core::caps::Caps;
use spectral_core::classes::{in_class, IdealClass, SFamily};
use spectral_core::ideal::{all_ideals, annihilator, intersect_all, Ideal};
use spectral_core::lattice::{
    build_lattice, filters, galois_filter_to_ideal, galois_ideal_to_filter,
    min_prime_filters_over, FilterKind, HYLattice,
};
use spectral_core::ring::{build_ring, Ring, RingSpec};
use spectral_core::space::{build_space, hull, hull_ideal, kernel, topo, TopoOp, YSpace};
use spectral_core::spectrum::{is_prime, spectrum, Spectrum};
use spectral_core::suite::{
    default_corpus, hunt, run_suite, Case, CheckConfig, Status,
};

const VERIFY_BUDGET_SECS: u64 = 300;
const MIN_VARIANT_EVALUATIONS: u64 = 10_000;

struct Env {
    case: Case,
    ring: Arc<Ring>,
    ideals: Vec<Ideal>,
    spectrum: Spectrum,
    space: Arc<YSpace>,
    lattice: HYLattice,
}

fn environments() -> Vec<Env> {
    let caps = Caps::default();
    default_corpus(&caps)
        .unwrap()
        .into_iter()
        .map(|case| {
            let ring = build_ring(&case.ring, &caps).unwrap();
            let ideals = all_ideals(&ring, &caps).unwrap();
            let sp = spectrum(&ring, &ideals);
            let space = build_space(&ring, &sp, &case.selector).unwrap();
            let lattice = build_lattice(&space, &ideals).unwrap();
            Env { case, ring, ideals, spectrum: sp, space, lattice }
        })
        .collect()
}

fn announce(criterion: &str, desc: &str) {
    println!("ACCEPTANCE {criterion} {desc}: PASS");
}

#[test]
fn c1_suite_green_within_budget() {
    let caps = Caps::default();
    let corpus = default_corpus(&caps).unwrap();
    let start = Instant::now();
    let report = run_suite(&corpus, &CheckConfig::new(caps), true);
    let elapsed = start.elapsed();
    for r in &report.results {
        assert!(
            matches!(r.status, Status::Pass | Status::Vacuous),
            "{} {} -> {:?} witness={:?} error={:?}",
            r.case,
            r.theorem,
            r.status,
            r.witness,
            r.error
        );
    }
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.errors, 0);
    assert_eq!(report.summary.cap_exceeded, 0);
    assert_eq!(report.summary.checks, corpus.len() * 35);
    assert!(
        elapsed.as_secs() < VERIFY_BUDGET_SECS,
        "verification took {elapsed:?}, budget {VERIFY_BUDGET_SECS}s"
    );
    announce(
        "C1",
        &format!(
            "verify over {} cases, {} checks, 0 failures, {:?}",
            corpus.len(),
            report.summary.checks,
            elapsed
        ),
    );
}

#[test]
fn c2_variant_agreement_bundle() {
    let caps = Caps::default();
    let corpus = default_corpus(&caps).unwrap();
    let config = CheckConfig::new(caps);
    let report = run_suite(&corpus, &config, true);
    let mut evaluations = 0u64;
    for r in &report.results {
        if r.theorem == "T3" || r.theorem == "T4" {
            assert_eq!(r.status, Status::Pass, "{} {}: {:?}", r.case, r.theorem, r.witness);
            evaluations += r.visited;
        }
    }
    assert!(
        evaluations >= MIN_VARIANT_EVALUATIONS,
        "only {evaluations} variant evaluations, need {MIN_VARIANT_EVALUATIONS}"
    );
    announce("C2", &format!("{evaluations} (ring, Y, ideal, variant) evaluations, all agreeing"));
}

#[test]
fn c3_independent_oracles_agree() {
    let mut closure_pairs = 0usize;
    let mut interior_pairs = 0usize;
    for env in environments() {
        for ideal in &env.ideals {
            let via_filter = {
                let f = galois_ideal_to_filter(&env.lattice, ideal).unwrap();
                galois_filter_to_ideal(&env.lattice, &f).unwrap()
            };
            let via_kernel_hull = kernel(&env.space, &hull_ideal(&env.space, ideal));
            assert_eq!(
                via_filter,
                via_kernel_hull,
                "{}: strong closure routes disagree on {}",
                env.case.label(),
                ideal.gens_label()
            );
            closure_pairs += 1;
        }
        if env.space.ky().is_zero() {
            let family = SFamily::build(&env.space, &env.ideals);
            for (s, set) in family.sets.iter().enumerate() {
                let topological = topo(&env.space, &family.hulls[s], TopoOp::Interior);
                let ann = annihilator(&env.ring, set).unwrap();
                let formula =
                    topo(&env.space, &hull_ideal(&env.space, &ann), TopoOp::Complement);
                assert_eq!(
                    topological,
                    formula,
                    "{}: interior routes disagree on {:?}",
                    env.case.label(),
                    set
                );
                interior_pairs += 1;
            }
        }
    }
    announce(
        "C3",
        &format!("{closure_pairs} closure route pairs and {interior_pairs} interior route pairs, all exactly equal"),
    );
}

#[test]
fn c4_finite_selector_coincidence() {
    let mut checked = 0usize;
    for env in environments() {
        for ideal in &env.ideals {
            let hy = in_class(&env.space, ideal, IdealClass::Hy);
            let strong = in_class(&env.space, ideal, IdealClass::Strong);
            let hilbert = in_class(&env.space, ideal, IdealClass::Hilbert);
            assert!(
                hy == strong && strong == hilbert,
                "{}: classes split on {}: {hy}/{strong}/{hilbert}",
                env.case.label(),
                ideal.gens_label()
            );
            let closure_h = spectral_core::classes::closure_hy(&env.space, ideal);
            let closure_s = {
                let f = galois_ideal_to_filter(&env.lattice, ideal).unwrap();
                galois_filter_to_ideal(&env.lattice, &f).unwrap()
            };
            let kernel_hull = kernel(&env.space, &hull_ideal(&env.space, ideal));
            assert!(
                closure_h == closure_s && closure_s == kernel_hull,
                "{}: closures split on {}",
                env.case.label(),
                ideal.gens_label()
            );
            checked += 1;
        }
    }
    announce("C4", &format!("{checked} (case, ideal) pairs; classes and closures coincide exactly"));
}

#[test]
fn c5_filter_ideal_correspondence() {
    let caps = Caps::default();
    let mut cases = 0usize;
    for env in environments() {
        let infos = filters(&env.lattice, FilterKind::All, &caps).unwrap();
        let strongs: Vec<&Ideal> = env
            .ideals
            .iter()
            .filter(|i| in_class(&env.space, i, IdealClass::Strong))
            .collect();

        let prime_filters = infos.iter().filter(|f| f.prime).count();
        let prime_strong = strongs.iter().filter(|i| is_prime(i)).count();
        assert_eq!(prime_filters, prime_strong, "{}: prime counts differ", env.case.label());

        let ultra = infos.iter().filter(|f| f.ultra).count();
        let proper_strong: Vec<&&Ideal> = strongs.iter().filter(|i| i.is_proper()).collect();
        let maximal_proper_strong = proper_strong
            .iter()
            .filter(|i| proper_strong.iter().all(|j| j == *i || !i.is_subset(j)))
            .count();
        assert_eq!(ultra, maximal_proper_strong, "{}: ultra counts differ", env.case.label());

        // Min(F) corresponds to Min over the preimage, filter by filter
        for info in infos.iter().filter(|f| f.proper) {
            let min_filters = min_prime_filters_over(&env.lattice, &info.filter, &caps).unwrap();
            let preimage = galois_filter_to_ideal(&env.lattice, &info.filter).unwrap();
            let primes_over: Vec<&Ideal> = env
                .spectrum
                .primes
                .iter()
                .filter(|p| preimage.is_subset(p))
                .collect();
            let min_ideals: Vec<&&Ideal> = primes_over
                .iter()
                .filter(|p| primes_over.iter().all(|q| q == *p || !q.is_subset(p)))
                .collect();
            assert_eq!(
                min_filters.len(),
                min_ideals.len(),
                "{}: minimal counts differ",
                env.case.label()
            );
            let mapped: Vec<Ideal> = min_filters
                .iter()
                .map(|f| galois_filter_to_ideal(&env.lattice, f).unwrap())
                .collect();
            for m in &mapped {
                assert!(
                    min_ideals.iter().any(|p| **p == m),
                    "{}: minimal prime filter maps outside the minimal primes",
                    env.case.label()
                );
            }
            let distinct = mapped
                .iter()
                .enumerate()
                .all(|(i, m)| mapped.iter().skip(i + 1).all(|n| n != m));
            assert!(distinct, "{}: minimal filter map not injective", env.case.label());
        }
        cases += 1;
    }
    announce("C5", &format!("filter/ideal correspondences biject on all {cases} cases"));
}

#[test]
fn c6_regularity_matches_squarefree_moduli() {
    let caps = Caps::default();
    let mut checked = 0usize;
    for n in 2usize..=36 {
        let ring = build_ring(&RingSpec::Modular { n }, &caps).unwrap();
        let ideals = all_ideals(&ring, &caps).unwrap();
        let sp = spectrum(&ring, &ideals);
        let space = build_space(&ring, &sp, &spectral_core::space::YSelector::Spec).unwrap();
        let every_strong = ideals.iter().all(|i| in_class(&space, i, IdealClass::Strong));
        let all_in_class = every_strong && space.ky().is_zero();
        let squarefree = (2..=n).all(|d| d * d > n || n % (d * d) != 0);
        assert_eq!(all_in_class, squarefree, "Z/{n}");
        checked += 1;
    }
    announce("C6", &format!("{checked} moduli: every-ideal-strong with zero kernel iff squarefree"));
}

#[test]
fn c7_hunter_sanity() {
    let caps = Caps::default();
    let config = CheckConfig::new(caps);
    let corpus = default_corpus(&caps).unwrap();

    // dropping the kernel hypothesis must surface the advertised witness
    let outcome = hunt(&corpus, "T5", Some("kY=0"), &config).unwrap();
    assert_eq!(outcome.witness_case.as_deref(), Some("Z/4 | Y=spec"), "{outcome:?}");
    let witness = outcome.witness.expect("witness");
    let detail = &witness["detail"];
    assert_eq!(detail["s"], serde_json::json!(["2"]));
    assert_eq!(detail["interior_of_hull"], serde_json::json!("{<2>}"));
    assert_eq!(detail["complement_of_annihilator_hull"], serde_json::json!("{}"));

    // with nothing dropped, every claim survives the whole corpus
    for entry in spectral_core::suite::registry() {
        let outcome = hunt(&corpus, entry.id, None, &config).unwrap();
        assert!(
            outcome.witness.is_none() && !outcome.cap_exceeded,
            "{}: unexpected witness {:?}",
            entry.id,
            outcome.witness
        );
    }
    announce("C7", "dropped-hypothesis witness found at (Z/4, spec) with S={2}; zero witnesses otherwise");
}

#[test]
fn c8_verify_output_is_deterministic() {
    let caps = Caps::default();
    let corpus = default_corpus(&caps).unwrap();
    let config = CheckConfig::new(caps);
    let first = run_suite(&corpus, &config, true).to_jsonl();
    let second = run_suite(&corpus, &config, true).to_jsonl();
    assert_eq!(first, second, "two runs produced different bytes");
    // and the parallel schedule must not leak into the output either
    let sequential = run_suite(&corpus, &config, false).to_jsonl();
    assert_eq!(first, sequential, "parallel and sequential outputs differ");
    announce("C8", &format!("byte-identical runs ({} bytes of JSONL)", first.len()));
}

#[test]
fn intersection_helper_matches_kernel() {
    // tiny guard for the helper the criteria lean on
    let caps = Caps::default();
    let ring = build_ring(&RingSpec::Modular { n: 12 }, &caps).unwrap();
    let ideals = all_ideals(&ring, &caps).unwrap();
    let sp = spectrum(&ring, &ideals);
    let meet = intersect_all(&ring, sp.primes.iter());
    assert_eq!(meet, sp.rad);
    let space = build_space(&ring, &sp, &spectral_core::space::YSelector::Spec).unwrap();
    assert_eq!(kernel(&space, &hull(&space, &[0])), sp.rad);
}

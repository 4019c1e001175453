//! Property tests for the module invariants: closure laws, Galois laws,
//! the span-factoring lemmas, and the Artinian sanity wall, over randomly
//! drawn rings, ideals and subsets.

use std::sync::Arc;

use proptest::prelude::*;

use spectral_core::caps::Caps;
use spectral_core::classes::{closure_hy, in_class, IdealClass};
use spectral_core::ideal::{
    all_ideals, annihilator, colon, combine, quasi_regular, radical, saturate, span, zero_ideal,
    CombineOp, MultSet,
};
use spectral_core::ring::{build_ring, classify_element, Ring, RingSpec};
use spectral_core::space::{
    build_space, hull, hull_ideal, kernel, topo, TopoOp, YSelector, YSpace, YSet,
};
use spectral_core::spectrum::{min_primes_over, spectrum, Spectrum};

fn ring_pool() -> Vec<RingSpec> {
    let mut pool: Vec<RingSpec> = (2..=24).map(|n| RingSpec::Modular { n }).collect();
    pool.push(RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] });
    pool.push(RingSpec::PolyQuotient { p: 2, f: vec![0, 0, 1] });
    pool.push(RingSpec::PolyQuotient { p: 3, f: vec![0, 0, 1] });
    pool.push(RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 4 }]));
    pool.push(RingSpec::Product(vec![RingSpec::Modular { n: 6 }, RingSpec::Modular { n: 2 }]));
    pool
}

#[derive(Debug)]
struct Setup {
    ring: Arc<Ring>,
    spectrum: Spectrum,
    space: Arc<YSpace>,
}

fn setup(pool_index: usize, selector_seed: usize) -> Setup {
    let caps = Caps::default();
    let pool = ring_pool();
    let spec = &pool[pool_index % pool.len()];
    let ring = build_ring(spec, &caps).unwrap();
    let ideals = &all_ideals(&ring, &caps).unwrap();
    let spectrum = spectrum(&ring, ideals);
    let k = spectrum.primes.len();
    let selector = if selector_seed.is_multiple_of(3) || k == 0 {
        YSelector::Spec
    } else {
        YSelector::Indices(vec![selector_seed % k])
    };
    let space = build_space(&ring, &spectrum, &selector).unwrap();
    Setup { ring, spectrum, space }
}

fn pick_elems(ring: &Ring, seeds: &[usize]) -> Vec<usize> {
    seeds.iter().map(|&s| s % ring.size()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_is_a_closure_operator(
        pool in 0usize..32,
        seeds in proptest::collection::vec(0usize..4096, 0..4),
        extra in 0usize..4096,
    ) {
        let s = setup(pool, 0);
        let gens = pick_elems(&s.ring, &seeds);
        let spanned = span(&s.ring, &gens).unwrap();
        // extensive
        prop_assert!(gens.iter().all(|&g| spanned.contains(g)));
        // idempotent
        let members: Vec<usize> = spanned.iter().collect();
        prop_assert_eq!(&span(&s.ring, &members).unwrap(), &spanned);
        // monotone
        let mut bigger = gens.clone();
        bigger.push(extra % s.ring.size());
        prop_assert!(spanned.is_subset(&span(&s.ring, &bigger).unwrap()));
    }

    #[test]
    fn colon_and_annihilator_laws(
        pool in 0usize..32,
        seeds in proptest::collection::vec(0usize..4096, 1..4),
    ) {
        let s = setup(pool, 0);
        let elems = pick_elems(&s.ring, &seeds);
        // triple annihilator collapses
        let a1 = annihilator(&s.ring, &elems).unwrap();
        let a2 = annihilator(&s.ring, &a1.iter().collect::<Vec<_>>()).unwrap();
        let a3 = annihilator(&s.ring, &a2.iter().collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(a1, a3);
        // colon by the unity is the identity
        let ideal = span(&s.ring, &elems).unwrap();
        prop_assert_eq!(&colon(&ideal, &[s.ring.one()]).unwrap(), &ideal);
    }

    #[test]
    fn radical_and_saturation_are_closures(
        pool in 0usize..32,
        seeds in proptest::collection::vec(0usize..4096, 0..3),
        mult_seed in 0usize..4096,
    ) {
        let s = setup(pool, 0);
        let ideal = span(&s.ring, &pick_elems(&s.ring, &seeds)).unwrap();
        let rad = radical(&ideal);
        prop_assert!(ideal.is_subset(&rad));
        prop_assert_eq!(&radical(&rad), &rad);
        // radical equals the intersection of the minimal primes over
        if ideal.is_proper() {
            let over = min_primes_over(&s.spectrum, &ideal).unwrap();
            let mut meet = spectral_core::ideal::whole_ideal(&s.ring);
            for p in over {
                meet = combine(CombineOp::Intersect, &meet, p).unwrap();
            }
            prop_assert_eq!(&rad, &meet);
        }
        let mult = MultSet::closure(&s.ring, &[mult_seed % s.ring.size()]).unwrap();
        let sat = saturate(&ideal, &mult).unwrap();
        prop_assert!(ideal.is_subset(&sat));
        prop_assert_eq!(&saturate(&sat, &mult).unwrap(), &sat);
    }

    #[test]
    fn hulls_factor_through_spans(
        pool in 0usize..32,
        sel in 0usize..3,
        seeds in proptest::collection::vec(0usize..4096, 0..4),
    ) {
        let s = setup(pool, sel);
        let gens = pick_elems(&s.ring, &seeds);
        let ideal = span(&s.ring, &gens).unwrap();
        let members: Vec<usize> = ideal.iter().collect();
        prop_assert_eq!(hull(&s.space, &gens), hull(&s.space, &members));
        prop_assert_eq!(hull(&s.space, &gens), hull_ideal(&s.space, &ideal));
    }

    #[test]
    fn hull_kernel_galois_laws(
        pool in 0usize..32,
        sel in 0usize..3,
        seeds in proptest::collection::vec(0usize..4096, 0..4),
        mask_seed in 0u32..256,
    ) {
        let s = setup(pool, sel);
        let ideal = span(&s.ring, &pick_elems(&s.ring, &seeds)).unwrap();
        let h = hull_ideal(&s.space, &ideal);
        // antitone Galois: I inside kernel(hull(I)); T inside hull(kernel(T))
        prop_assert!(ideal.is_subset(&kernel(&s.space, &h)));
        let mut t = YSet::empty(s.space.len());
        for i in 0..s.space.len() {
            if mask_seed & (1 << i) != 0 {
                t.mask.insert(i);
            }
        }
        let closure = hull_ideal(&s.space, &kernel(&s.space, &t));
        prop_assert!(t.is_subset(&closure));
        // triple compositions collapse
        prop_assert_eq!(hull_ideal(&s.space, &kernel(&s.space, &h)), h.clone());
        let k = kernel(&s.space, &t);
        prop_assert_eq!(kernel(&s.space, &hull_ideal(&s.space, &k)), k);
    }

    #[test]
    fn closure_topology_is_kuratowski(
        pool in 0usize..32,
        sel in 0usize..3,
        mask_a in 0u32..256,
        mask_b in 0u32..256,
    ) {
        let s = setup(pool, sel);
        let make = |mask: u32| {
            let mut t = YSet::empty(s.space.len());
            for i in 0..s.space.len() {
                if mask & (1 << i) != 0 {
                    t.mask.insert(i);
                }
            }
            t
        };
        let a = make(mask_a);
        let b = make(mask_b);
        let cl = |t: &YSet| topo(&s.space, t, TopoOp::Closure);
        prop_assert!(a.is_subset(&cl(&a)));
        prop_assert_eq!(cl(&cl(&a)), cl(&a));
        if a.is_subset(&b) {
            prop_assert!(cl(&a).is_subset(&cl(&b)));
        }
        prop_assert_eq!(cl(&a.union(&b)), cl(&a).union(&cl(&b)));
        prop_assert_eq!(cl(&YSet::empty(s.space.len())), YSet::empty(s.space.len()));
    }

    #[test]
    fn lattice_of_ideals_and_product_bound(
        pool in 0usize..32,
        sa in proptest::collection::vec(0usize..4096, 0..3),
        sb in proptest::collection::vec(0usize..4096, 0..3),
    ) {
        let s = setup(pool, 0);
        let a = span(&s.ring, &pick_elems(&s.ring, &sa)).unwrap();
        let b = span(&s.ring, &pick_elems(&s.ring, &sb)).unwrap();
        let sum = combine(CombineOp::Sum, &a, &b).unwrap();
        let meet = combine(CombineOp::Intersect, &a, &b).unwrap();
        let prod = combine(CombineOp::Product, &a, &b).unwrap();
        prop_assert!(a.is_subset(&sum) && b.is_subset(&sum));
        prop_assert!(meet.is_subset(&a) && meet.is_subset(&b));
        prop_assert!(prod.is_subset(&meet));
    }

    #[test]
    fn closure_hy_is_a_closure_operator(
        pool in 0usize..32,
        sel in 0usize..3,
        seeds in proptest::collection::vec(0usize..4096, 0..3),
        extra in 0usize..4096,
    ) {
        let s = setup(pool, sel);
        let ideal = span(&s.ring, &pick_elems(&s.ring, &seeds)).unwrap();
        let closed = closure_hy(&s.space, &ideal);
        prop_assert!(ideal.is_subset(&closed));
        prop_assert_eq!(&closure_hy(&s.space, &closed), &closed);
        prop_assert!(in_class(&s.space, &closed, IdealClass::Hy));
        let mut bigger_gens: Vec<usize> = ideal.gens().to_vec();
        bigger_gens.push(extra % s.ring.size());
        let bigger = span(&s.ring, &bigger_gens).unwrap();
        prop_assert!(closed.is_subset(&closure_hy(&s.space, &bigger)));
    }

    #[test]
    fn purity_chain(
        pool in 0usize..32,
        seeds in proptest::collection::vec(0usize..4096, 0..3),
    ) {
        let s = setup(pool, 0);
        let ideal = span(&s.ring, &pick_elems(&s.ring, &seeds)).unwrap();
        // a regular ideal is pure
        let regular = ideal
            .iter()
            .all(|a| classify_element(&s.ring, a).unwrap().regular);
        if regular {
            prop_assert_eq!(&quasi_regular(&ideal), &ideal);
        }
        // the quasi-regular part never overshoots
        prop_assert!(quasi_regular(&ideal).is_subset(&ideal));
    }
}

#[test]
fn artinian_sanity_wall() {
    // Min = Max = Spec and Rad = Jac on every corpus ring
    let caps = Caps::default();
    for spec in ring_pool() {
        let ring = build_ring(&spec, &caps).unwrap();
        let ideals = all_ideals(&ring, &caps).unwrap();
        let sp = spectrum(&ring, &ideals);
        assert!(sp.min_mask.iter().all(|&m| m), "{spec}");
        assert!(sp.max_mask.iter().all(|&m| m), "{spec}");
        assert_eq!(sp.rad, sp.jac, "{spec}");
        assert_eq!(sp.rad, radical(&zero_ideal(&ring)), "{spec}");
    }
}

#[test]
fn constructed_rings_satisfy_the_axioms() {
    let caps = Caps::default();
    for spec in ring_pool() {
        let ring = build_ring(&spec, &caps).unwrap();
        ring.verify_axioms().unwrap_or_else(|e| panic!("{spec}: {e}"));
    }
}

#[test]
fn element_classes_in_modular_rings_match_number_theory() {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let caps = Caps::default();
    for n in 2usize..=36 {
        let ring = build_ring(&RingSpec::Modular { n }, &caps).unwrap();
        let rad_n: usize = (2..=n).filter(|p| n % p == 0 && (2..*p).all(|d| p % d != 0)).product();
        for a in 0..n {
            let class = classify_element(&ring, a).unwrap();
            assert_eq!(class.unit, gcd(a, n) == 1, "Z/{n}, unit {a}");
            let nilpotent = if a == 0 { true } else { rad_n != 1 && a % rad_n == 0 };
            assert_eq!(class.nilpotent, nilpotent, "Z/{n}, nilpotent {a}");
            // structural implications
            assert!(!class.unit || class.regular);
            assert!(!class.unit || !class.zero_divisor);
            assert!(!class.idempotent || class.regular);
            assert!(!(class.nilpotent && class.idempotent) || a == 0);
        }
    }
}

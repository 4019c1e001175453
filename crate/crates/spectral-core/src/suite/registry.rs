//! The claim registry: 35 machine-checkable statements about hull-based
//! ideal classes, evaluated exhaustively on one case at a time.
//!
//! Quantifier realizations follow two lemmas that are themselves tested:
//! hulls and kernels factor through spans, so quantifiers over arbitrary
//! subsets `S` of the ring run over all singletons plus canonical
//! generator sets of all ideals, and quantifiers over finite subsets of an
//! ideal run over generator subsets plus the full member set. Named
//! hypotheses can be dropped by the hunter; a dropped hypothesis guards
//! nothing, so the weakened claim is evaluated on every instance.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::classes::{
    closure_hy, eval_variant, in_class, FFamily, IdealClass, SFamily, Variant,
};
use crate::error::{Error, Result};
use crate::ideal::{
    all_ideals, annihilator, colon, colon_ideal, combine, intersect_all, quasi_regular, radical,
    saturate, socle, zero_component, CombineOp, Ideal, MultSet,
};
use crate::lattice::{
    build_lattice, filters, galois_filter_to_ideal, galois_ideal_to_filter, transport,
    transport_quotient_lenient, FilterInfo, FilterKind, HYFilter, TransportTarget,
};
use crate::ring::{all_subrings, build_subring, quotient_ring, Elem};
use crate::space::{
    build_space, hull, hull_ideal, hy_property, kernel, topo, TopoOp, YSelector,
    YSpace, YSet,
};
use crate::spectrum::{is_prime, min_primes_over, ring_flags, spectrum};
use crate::suite::{CaseContext, CheckConfig, Probe};

type CheckFn = fn(&CaseContext, &CheckConfig, &mut Probe) -> Result<()>;

/// One registry entry: a stable id, a one-line statement of the claim,
/// the named hypotheses the hunter may drop, and the check itself.
pub struct TheoremEntry {
    pub id: &'static str,
    pub claim: &'static str,
    pub hypotheses: &'static [&'static str],
    pub run: CheckFn,
}

pub fn registry() -> &'static [TheoremEntry] {
    &REGISTRY
}

pub fn find_entry(id: &str) -> Result<&'static TheoremEntry> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn wit(ctx: &CaseContext, detail: Value) -> Value {
    json!({
        "ring": ctx.ring.label(),
        "y": ctx.space.label(),
        "detail": detail,
    })
}

fn labels(ctx: &CaseContext, elems: &[Elem]) -> Vec<String> {
    elems.iter().map(|&e| ctx.ring.elem_label(e).to_string()).collect()
}

/// Kernel-of-hull as an ideal.
fn kernel_hull(space: &YSpace, ideal: &Ideal) -> Ideal {
    kernel(space, &hull_ideal(space, ideal))
}

/// Smallest class member containing `ideal`, by scanning the full ideal
/// list; serves as the independent oracle for the closure operators.
fn oracle_smallest(space: &YSpace, ideals: &[Ideal], class: IdealClass, ideal: &Ideal) -> Ideal {
    intersect_all(
        space.ring(),
        ideals.iter().filter(|j| ideal.is_subset(j) && in_class(space, j, class)),
    )
}

fn class_of(ctx: &CaseContext, idx: usize, class: IdealClass) -> bool {
    match class {
        IdealClass::Hy => ctx.class[idx].hy,
        IdealClass::Strong => ctx.class[idx].strong_hy,
        IdealClass::Hilbert => ctx.class[idx].y_hilbert,
    }
}

const CLASSES: [(IdealClass, &str); 3] = [
    (IdealClass::Hy, "hy"),
    (IdealClass::Strong, "strong_hy"),
    (IdealClass::Hilbert, "y_hilbert"),
];

/// The spectrum-subset family used by cross-space claims: the full
/// spectrum, every singleton, every pair.
fn selector_spaces(ctx: &CaseContext) -> Result<Vec<Arc<YSpace>>> {
    let mut out = vec![build_space(&ctx.ring, &ctx.spectrum, &YSelector::Spec)?];
    let k = ctx.spectrum.primes.len();
    for i in 0..k {
        out.push(build_space(&ctx.ring, &ctx.spectrum, &YSelector::Indices(vec![i]))?);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            out.push(build_space(&ctx.ring, &ctx.spectrum, &YSelector::Indices(vec![i, j]))?);
        }
    }
    Ok(out)
}

/// Maximal members of `pool` under inclusion.
fn maximal_ideals_of(pool: &[&Ideal]) -> Vec<Ideal> {
    pool.iter()
        .filter(|i| pool.iter().all(|j| j == *i || !i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect()
}

// ---------------------------------------------------------------------
// T1 .. T9: hull/kernel calculus
// ---------------------------------------------------------------------

/// Colon of `k(Y)` by any set equals the kernel of the hull complement.
fn t1(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let ky = ctx.space.ky().clone();
    for (s, set) in ctx.family.sets.iter().enumerate() {
        let lhs = colon(&ky, set)?;
        let complement = topo(&ctx.space, &ctx.family.hulls[s], TopoOp::Complement);
        let rhs = kernel(&ctx.space, &complement);
        probe.check(lhs == rhs, || {
            wit(ctx, json!({
                "s": labels(ctx, set),
                "colon": lhs.gens_label(),
                "kernel_of_hull_complement": rhs.gens_label(),
            }))
        });
    }
    Ok(())
}

/// The hull sets form a ring of sets: hulls turn ideal sums into meets
/// and ideal products into joins, with `hull(0) = Y` and `hull(R)` empty,
/// and the materialized lattice is closed under both operations through
/// its witnesses.
fn t2(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let space = &ctx.space;
    probe.check(hull(space, &[ctx.ring.zero()]) == YSet::full(space.len()), || {
        wit(ctx, json!({"clause": "hull of 0 is Y"}))
    });
    probe.check(hull(space, &[ctx.ring.one()]).is_empty(), || {
        wit(ctx, json!({"clause": "hull of 1 is empty"}))
    });
    for i in &ctx.ideals {
        for j in &ctx.ideals {
            let sum = combine(CombineOp::Sum, i, j)?;
            let prod = combine(CombineOp::Product, i, j)?;
            let hi = hull_ideal(space, i);
            let hj = hull_ideal(space, j);
            probe.check(hull_ideal(space, &sum) == hi.intersect(&hj), || {
                wit(ctx, json!({
                    "clause": "hull(I+J) = hull(I) meet hull(J)",
                    "i": i.gens_label(),
                    "j": j.gens_label(),
                }))
            });
            probe.check(hull_ideal(space, &prod) == hi.union(&hj), || {
                wit(ctx, json!({
                    "clause": "hull(IJ) = hull(I) join hull(J)",
                    "i": i.gens_label(),
                    "j": j.gens_label(),
                }))
            });
        }
    }
    let lattice = &ctx.lattice;
    for a in 0..lattice.len() {
        for b in 0..lattice.len() {
            let wa = lattice.elements()[a].witness.clone();
            let wb = &lattice.elements()[b].witness;
            let mut union_wit = wa.clone();
            union_wit.extend_from_slice(wb);
            let meet = lattice.elements()[a].set.intersect(&lattice.elements()[b].set);
            probe.check(hull(space, &union_wit) == meet, || {
                wit(ctx, json!({"clause": "meet realized by witness union", "a": a, "b": b}))
            });
            let mut prod_wit: Vec<Elem> = Vec::new();
            for &x in &wa {
                for &y in wb.iter() {
                    prod_wit.push(ctx.ring.mul(x, y));
                }
            }
            let join = lattice.elements()[a].set.union(&lattice.elements()[b].set);
            // the product witness of anything against the empty witness
            // set collapses to the hull of 0, which only matches when the
            // other side is already full; join against the top is the top
            let expected = if wa.is_empty() || wb.is_empty() {
                YSet::full(space.len())
            } else {
                join.clone()
            };
            probe.check(hull(space, &prod_wit) == expected, || {
                wit(ctx, json!({"clause": "join realized by witness products", "a": a, "b": b}))
            });
        }
    }
    Ok(())
}

/// All single-element formulations of the first class agree.
fn t3(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (idx, ideal) in ctx.ideals.iter().enumerate() {
        let reference = ctx.class[idx].hy;
        for &variant in Variant::hy_all() {
            let got = eval_variant(&ctx.space, &ctx.family, ideal, variant);
            probe.check(got == reference, || {
                wit(ctx, json!({
                    "ideal": ideal.gens_label(),
                    "variant": variant.id(),
                    "got": got,
                    "reference": reference,
                }))
            });
        }
    }
    Ok(())
}

/// All finite-subset formulations of the strong class agree.
fn t4(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (idx, ideal) in ctx.ideals.iter().enumerate() {
        let reference = ctx.class[idx].strong_hy;
        for &variant in Variant::strong_all() {
            let got = eval_variant(&ctx.space, &ctx.family, ideal, variant);
            probe.check(got == reference, || {
                wit(ctx, json!({
                    "ideal": ideal.gens_label(),
                    "variant": variant.id(),
                    "got": got,
                    "reference": reference,
                }))
            });
        }
    }
    Ok(())
}

/// With `k(Y) = 0`, the interior of any hull is the complement of the
/// hull of the annihilator. The interior side is computed topologically,
/// so the two routes are independent.
fn t5(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    if !ctx.ky_is_zero() && cfg.keeps("kY=0") {
        return Ok(());
    }
    for (s, set) in ctx.family.sets.iter().enumerate() {
        let inside = topo(&ctx.space, &ctx.family.hulls[s], TopoOp::Interior);
        let ann = annihilator(&ctx.ring, set)?;
        let formula = topo(&ctx.space, &hull_ideal(&ctx.space, &ann), TopoOp::Complement);
        probe.check(inside == formula, || {
            wit(ctx, json!({
                "s": labels(ctx, set),
                "interior_of_hull": ctx.space.set_label(&inside),
                "complement_of_annihilator_hull": ctx.space.set_label(&formula),
            }))
        });
    }
    Ok(())
}

/// Interior comparisons agree between `Y` and the full spectrum exactly
/// when `k(Y)` is the nilradical; with `k(Y) = 0` every kernel-hull sits
/// inside the double annihilator.
fn t6(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let full = &ctx.min_space;
    let ky_is_rad = *ctx.space.ky() == ctx.spectrum.rad;

    let int_y: Vec<YSet> = ctx
        .family
        .hulls
        .iter()
        .map(|h| topo(&ctx.space, h, TopoOp::Interior))
        .collect();
    let int_x: Vec<YSet> = ctx
        .min_family
        .hulls
        .iter()
        .map(|h| topo(full, h, TopoOp::Interior))
        .collect();

    let mut b_holds = true;
    let mut c_holds = true;
    for s in 0..ctx.family.len() {
        for t in 0..ctx.family.len() {
            probe.tick();
            let y_sub = int_y[s].is_subset(&ctx.family.hulls[t]);
            let x_sub = int_x[s].is_subset(&ctx.min_family.hulls[t]);
            if y_sub != x_sub {
                b_holds = false;
            }
            let y_eq = int_y[s] == int_y[t];
            let x_eq = int_x[s] == int_x[t];
            if y_eq != x_eq {
                c_holds = false;
            }
        }
    }
    probe.check(b_holds == ky_is_rad, || {
        wit(ctx, json!({"clause": "interior inclusions transfer iff k(Y)=Rad", "transfer": b_holds, "ky_is_rad": ky_is_rad}))
    });
    probe.check(c_holds == ky_is_rad, || {
        wit(ctx, json!({"clause": "interior equalities transfer iff k(Y)=Rad", "transfer": c_holds, "ky_is_rad": ky_is_rad}))
    });

    if ctx.ky_is_zero() || !cfg.keeps("kY=0") {
        for (s, set) in ctx.family.sets.iter().enumerate() {
            let ann = annihilator(&ctx.ring, set)?;
            let divisors: Vec<Elem> = ann.iter().collect();
            let ann2 = annihilator(&ctx.ring, &divisors)?;
            probe.check(ctx.family.kh[s].is_subset(ann2.members()), || {
                wit(ctx, json!({
                    "clause": "kernel-hull inside double annihilator",
                    "s": labels(ctx, set),
                    "double_annihilator": ann2.gens_label(),
                }))
            });
        }
    }
    Ok(())
}

/// Hulls of finite sets are clopen over any subset of the minimal primes
/// (all of the spectrum, for a finite ring).
fn t7(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (s, set) in ctx.family.sets.iter().enumerate() {
        let inside = topo(&ctx.space, &ctx.family.hulls[s], TopoOp::Interior);
        probe.check(inside == ctx.family.hulls[s], || {
            wit(ctx, json!({
                "s": labels(ctx, set),
                "hull": ctx.space.set_label(&ctx.family.hulls[s]),
                "interior": ctx.space.set_label(&inside),
            }))
        });
    }
    Ok(())
}

/// With `k(Y) = Rad`, membership in the min-space class is equivalent to
/// both interior-based conditions over `Y`.
fn t8(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let ky_is_rad = *ctx.space.ky() == ctx.spectrum.rad;
    if !ky_is_rad && cfg.keeps("kY=Rad") {
        return Ok(());
    }
    let int_elem: Vec<YSet> = ctx
        .ring
        .elems()
        .map(|b| topo(&ctx.space, ctx.space.elem_hull(b), TopoOp::Interior))
        .collect();
    for ideal in &ctx.ideals {
        let z_min = in_class(&ctx.min_space, ideal, IdealClass::Hy);
        let cond_b = ideal.iter().all(|b| {
            ctx.ring
                .elems()
                .all(|a| !int_elem[b].is_subset(ctx.space.elem_hull(a)) || ideal.contains(a))
        });
        let cond_c = ideal.iter().all(|b| {
            (0..ctx.family.len()).all(|s| {
                !int_elem[b].is_subset(&ctx.family.hulls[s])
                    || ctx.family.sets[s].iter().all(|&a| ideal.contains(a))
            })
        });
        probe.check(z_min == cond_b && z_min == cond_c, || {
            wit(ctx, json!({
                "ideal": ideal.gens_label(),
                "min_space_class": z_min,
                "single_element_form": cond_b,
                "set_form": cond_c,
            }))
        });
    }
    Ok(())
}

/// Five statements tied together: `k(Y) = Rad`, the min-space classes
/// embedding into the `Y` classes (plain and strong), and the kernel-hull
/// comparisons for sets and single elements.
fn t9(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for _ in 0..(2 * ctx.ideals.len() + ctx.family.len() + ctx.ring.size()) {
        probe.tick();
    }
    let a = *ctx.space.ky() == ctx.spectrum.rad;
    let b = ctx.ideals.iter().all(|i| {
        !in_class(&ctx.min_space, i, IdealClass::Hy) || in_class(&ctx.space, i, IdealClass::Hy)
    });
    let c = ctx.ideals.iter().all(|i| {
        !in_class(&ctx.min_space, i, IdealClass::Strong)
            || in_class(&ctx.space, i, IdealClass::Strong)
    });
    let d = (0..ctx.family.len()).all(|s| ctx.family.kh[s].is_subset(&ctx.min_family.kh[s]));
    let e = ctx
        .ring
        .elems()
        .all(|x| ctx.space.elem_kh(x).is_subset(ctx.min_space.elem_kh(x)));
    probe.check(b == a && c == a && d == a && e == a, || {
        wit(ctx, json!({
            "ky_is_rad": a,
            "min_class_into_y_class": b,
            "min_strong_into_y_strong": c,
            "kernel_hull_comparison_sets": d,
            "kernel_hull_comparison_elements": e,
        }))
    });
    Ok(())
}

// ---------------------------------------------------------------------
// T10 .. T13: semiprimeness, minimal primes, the hull-pair property
// ---------------------------------------------------------------------

/// Every first-class ideal is semiprime, i.e. radical-closed and an
/// intersection of the primes over it.
fn t10(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (idx, ideal) in ctx.ideals.iter().enumerate() {
        if !ctx.class[idx].hy {
            continue;
        }
        let rad = radical(ideal);
        let by_primes = if ideal.is_whole() {
            ideal.clone()
        } else {
            intersect_all(&ctx.ring, min_primes_over(&ctx.spectrum, ideal)?)
        };
        probe.check(rad == *ideal && by_primes == *ideal, || {
            wit(ctx, json!({
                "ideal": ideal.gens_label(),
                "radical": rad.gens_label(),
                "prime_intersection": by_primes.gens_label(),
            }))
        });
    }
    Ok(())
}

/// Minimal primes over a class ideal inherit the class.
fn t11(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        for (idx, ideal) in ctx.ideals.iter().enumerate() {
            if ideal.is_whole() {
                continue;
            }
            if cfg.keeps("ideal-in-class") && !class_of(ctx, idx, class) {
                continue;
            }
            for p in min_primes_over(&ctx.spectrum, ideal)? {
                probe.check(in_class(&ctx.space, p, class), || {
                    wit(ctx, json!({
                        "class": name,
                        "ideal": ideal.gens_label(),
                        "minimal_prime": p.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

/// An ideal is in the class exactly when it is the intersection of its
/// minimal class primes, and every maximal proper class member is prime.
fn t12(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        for (idx, ideal) in ctx.ideals.iter().enumerate() {
            let lhs = class_of(ctx, idx, class);
            let rhs = if ideal.is_whole() {
                true
            } else {
                let class_primes: Vec<&Ideal> = min_primes_over(&ctx.spectrum, ideal)?
                    .into_iter()
                    .filter(|p| in_class(&ctx.space, p, class))
                    .collect();
                intersect_all(&ctx.ring, class_primes) == *ideal
            };
            probe.check(lhs == rhs, || {
                wit(ctx, json!({
                    "class": name,
                    "ideal": ideal.gens_label(),
                    "in_class": lhs,
                    "is_intersection_of_minimal_class_primes": rhs,
                }))
            });
        }
        let proper: Vec<&Ideal> = ctx
            .ideals
            .iter()
            .enumerate()
            .filter(|(idx, i)| i.is_proper() && class_of(ctx, *idx, class))
            .map(|(_, i)| i)
            .collect();
        for maximal in maximal_ideals_of(&proper) {
            probe.check(is_prime(&maximal), || {
                wit(ctx, json!({
                    "class": name,
                    "clause": "maximal proper class member is prime",
                    "ideal": maximal.gens_label(),
                }))
            });
        }
    }
    Ok(())
}

/// Four equivalent statements: the hull-pair property over `Y`, single
/// colon realizability for sets and for pairs over `k(Y)`, and the
/// annihilator condition in the quotient by `k(Y)`.
fn t13(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let ky = ctx.space.ky().clone();
    for _ in 0..(ctx.family.len() + ctx.ring.size() * ctx.ring.size()) {
        probe.tick();
    }
    let a = hy_property(&ctx.space).0;
    let b = (0..ctx.family.len()).all(|s| {
        let lhs = colon(&ky, &ctx.family.sets[s]).expect("nonempty");
        ctx.ring.elems().any(|c| colon(&ky, &[c]).expect("nonempty") == lhs)
    });
    let c = ctx.ring.elems().all(|x| {
        ctx.ring.elems().all(|y| {
            let lhs = combine(
                CombineOp::Intersect,
                &colon(&ky, &[x]).expect("nonempty"),
                &colon(&ky, &[y]).expect("nonempty"),
            )
            .expect("same ring");
            ctx.ring.elems().any(|z| colon(&ky, &[z]).expect("nonempty") == lhs)
        })
    });
    let d = {
        let members: Vec<bool> = ctx.ring.elems().map(|e| ky.contains(e)).collect();
        let (q, _) = quotient_ring(&ctx.ring, &members)?;
        let qideals = all_ideals(&q, &cfg.caps)?;
        let qspec = spectrum(&q, &qideals);
        ring_flags(&q, &qideals, &qspec)?.ac_ring
    };
    probe.check(a == b && a == c && a == d, || {
        wit(ctx, json!({
            "hull_pair_property": a,
            "colon_realizable_sets": b,
            "colon_realizable_pairs": c,
            "quotient_annihilator_condition": d,
        }))
    });
    Ok(())
}

// ---------------------------------------------------------------------
// T14 .. T19: the Galois pair and the filter correspondences
// ---------------------------------------------------------------------

struct GaloisTables {
    /// filter assigned to `ideals[i]`
    fwd: Vec<HYFilter>,
    /// ideal assigned to `filters[i]`
    back: Vec<Ideal>,
}

fn galois_tables(ctx: &CaseContext, infos: &[FilterInfo]) -> Result<GaloisTables> {
    let fwd = ctx
        .ideals
        .iter()
        .map(|i| galois_ideal_to_filter(&ctx.lattice, i))
        .collect::<Result<Vec<_>>>()?;
    let back = infos
        .iter()
        .map(|f| galois_filter_to_ideal(&ctx.lattice, &f.filter))
        .collect::<Result<Vec<_>>>()?;
    Ok(GaloisTables { fwd, back })
}

/// The ideal-to-filter map is residuated: both maps are monotone, the
/// round trips are inflationary/identity, the triple compositions
/// collapse, strong membership is the fixed-point condition, and every
/// filter preimage is strong. Properness transfers when the selector
/// covers the spectrum or the ideal is strong.
fn t14(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let tables = galois_tables(ctx, infos)?;
    let whole_filter_len = ctx.lattice.len();

    for (fi, info) in infos.iter().enumerate() {
        let preimage = &tables.back[fi];
        probe.check((preimage.is_whole()) == (info.filter.len() == whole_filter_len), || {
            wit(ctx, json!({"clause": "preimage is everything iff filter is improper", "filter": fi}))
        });
        let round = galois_ideal_to_filter(&ctx.lattice, preimage).expect("filter");
        probe.check(round == info.filter, || {
            wit(ctx, json!({"clause": "filter round trip is the identity", "filter": fi}))
        });
        probe.check(in_class(&ctx.space, preimage, IdealClass::Strong), || {
            wit(ctx, json!({"clause": "filter preimage is strong", "filter": fi}))
        });
        let back_again = galois_filter_to_ideal(&ctx.lattice, &round)?;
        probe.check(back_again == *preimage, || {
            wit(ctx, json!({"clause": "triple composition collapses on filters", "filter": fi}))
        });
    }

    for (ii, ideal) in ctx.ideals.iter().enumerate() {
        let image = &tables.fwd[ii];
        let closure = galois_filter_to_ideal(&ctx.lattice, image)?;
        probe.check(ideal.is_subset(&closure), || {
            wit(ctx, json!({"clause": "ideal sits inside its round trip", "ideal": ideal.gens_label()}))
        });
        probe.check(
            ctx.class[ii].strong_hy == (closure == *ideal),
            || {
                wit(ctx, json!({
                    "clause": "strong membership is the fixed-point condition",
                    "ideal": ideal.gens_label(),
                }))
            },
        );
        let triple = galois_ideal_to_filter(&ctx.lattice, &closure).expect("filter");
        probe.check(triple == *image, || {
            wit(ctx, json!({"clause": "triple composition collapses on ideals", "ideal": ideal.gens_label()}))
        });
        if ideal.is_proper() && ctx.class[ii].strong_hy {
            probe.check(ctx.lattice.is_proper_filter(image), || {
                wit(ctx, json!({"clause": "proper strong ideal has a proper image", "ideal": ideal.gens_label()}))
            });
        }
        if ideal.is_proper() && (ctx.max_in_y() || !cfg.keeps("Max in Y")) {
            probe.check(ctx.lattice.is_proper_filter(image), || {
                wit(ctx, json!({"clause": "full selector keeps images proper", "ideal": ideal.gens_label()}))
            });
        }
    }

    for (ia, a) in ctx.ideals.iter().enumerate() {
        for (ib, b) in ctx.ideals.iter().enumerate() {
            if a.is_subset(b) {
                probe.check(tables.fwd[ia].is_subset(&tables.fwd[ib]), || {
                    wit(ctx, json!({"clause": "ideal map is monotone", "a": a.gens_label(), "b": b.gens_label()}))
                });
            }
        }
    }
    for (fa, a) in infos.iter().enumerate() {
        for (fb, b) in infos.iter().enumerate() {
            if a.filter.is_subset(&b.filter) {
                probe.check(tables.back[fa].is_subset(&tables.back[fb]), || {
                    wit(ctx, json!({"clause": "filter map is monotone", "a": fa, "b": fb}))
                });
            }
        }
    }
    Ok(())
}

/// The ideal-to-filter map restricts to an order isomorphism between
/// strong-class ideals and filters.
fn t15(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let tables = galois_tables(ctx, infos)?;

    for (fa, a) in infos.iter().enumerate() {
        for (fb, b) in infos.iter().enumerate() {
            probe.check((a.filter == b.filter) == (tables.back[fa] == tables.back[fb]), || {
                wit(ctx, json!({"clause": "filter preimages separate filters", "a": fa, "b": fb}))
            });
        }
    }

    let strong: Vec<usize> = (0..ctx.ideals.len()).filter(|&i| ctx.class[i].strong_hy).collect();
    for &ia in &strong {
        for &ib in &strong {
            probe.check(
                (tables.fwd[ia] == tables.fwd[ib]) == (ctx.ideals[ia] == ctx.ideals[ib]),
                || {
                    wit(ctx, json!({
                        "clause": "images separate strong ideals",
                        "a": ctx.ideals[ia].gens_label(),
                        "b": ctx.ideals[ib].gens_label(),
                    }))
                },
            );
            probe.check(
                ctx.ideals[ia].is_subset(&ctx.ideals[ib])
                    == tables.fwd[ia].is_subset(&tables.fwd[ib]),
                || {
                    wit(ctx, json!({
                        "clause": "order embeds both ways",
                        "a": ctx.ideals[ia].gens_label(),
                        "b": ctx.ideals[ib].gens_label(),
                    }))
                },
            );
        }
    }

    // surjectivity onto all filters
    probe.check(strong.len() == infos.len(), || {
        wit(ctx, json!({
            "clause": "strong ideals and filters are equinumerous",
            "strong": strong.len(),
            "filters": infos.len(),
        }))
    });
    for info in infos {
        probe.check(strong.iter().any(|&i| tables.fwd[i] == info.filter), || {
            wit(ctx, json!({"clause": "every filter is an image"}))
        });
    }
    Ok(())
}

fn is_maximal_ideal(ctx: &CaseContext, ideal: &Ideal) -> bool {
    ctx.spectrum
        .primes
        .iter()
        .zip(&ctx.spectrum.max_mask)
        .any(|(p, &m)| m && p == ideal)
}

/// Prime strong ideals correspond to prime filters, maximal proper strong
/// ideals to ultrafilters, and with the full selector the ultrafilter
/// preimages are exactly the maximal ideals.
fn t16(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let tables = galois_tables(ctx, infos)?;

    for (fi, info) in infos.iter().enumerate() {
        let preimage = &tables.back[fi];
        probe.check(is_prime(preimage) == info.prime, || {
            wit(ctx, json!({"clause": "prime filters have prime preimages", "filter": fi}))
        });
    }
    for (ii, ideal) in ctx.ideals.iter().enumerate() {
        if !ctx.class[ii].strong_hy {
            continue;
        }
        let image_prime = infos
            .iter()
            .find(|info| info.filter == tables.fwd[ii])
            .map(|info| info.prime)
            .unwrap_or(false);
        probe.check(is_prime(ideal) == image_prime, || {
            wit(ctx, json!({"clause": "strong prime ideals map to prime filters", "ideal": ideal.gens_label()}))
        });
    }

    // bijection on the prime layer
    let prime_strong: Vec<usize> = (0..ctx.ideals.len())
        .filter(|&i| ctx.class[i].strong_hy && is_prime(&ctx.ideals[i]))
        .collect();
    let prime_filters: Vec<&FilterInfo> = infos.iter().filter(|f| f.prime).collect();
    probe.check(prime_strong.len() == prime_filters.len(), || {
        wit(ctx, json!({
            "clause": "prime strong ideals and prime filters are equinumerous",
            "prime_strong": prime_strong.len(),
            "prime_filters": prime_filters.len(),
        }))
    });
    for f in &prime_filters {
        probe.check(prime_strong.iter().any(|&i| tables.fwd[i] == f.filter), || {
            wit(ctx, json!({"clause": "every prime filter is an image"}))
        });
    }

    // maximal proper strong ideals = ultrafilter preimages
    let proper_strong: Vec<&Ideal> = (0..ctx.ideals.len())
        .filter(|&i| ctx.class[i].strong_hy && ctx.ideals[i].is_proper())
        .map(|i| &ctx.ideals[i])
        .collect();
    let maximal_strong = maximal_ideals_of(&proper_strong);
    let ultra: Vec<&FilterInfo> = infos.iter().filter(|f| f.ultra).collect();
    for ideal in &ctx.ideals {
        let is_maximal_strong = maximal_strong.contains(ideal);
        let from_ultra = ultra.iter().any(|f| {
            infos
                .iter()
                .position(|info| info.filter == f.filter)
                .map(|fi| tables.back[fi] == *ideal)
                .unwrap_or(false)
        });
        probe.check(is_maximal_strong == from_ultra, || {
            wit(ctx, json!({
                "clause": "maximal proper strong ideals are exactly ultrafilter preimages",
                "ideal": ideal.gens_label(),
            }))
        });
    }
    probe.check(maximal_strong.len() == ultra.len(), || {
        wit(ctx, json!({
            "clause": "maximal proper strong ideals and ultrafilters are equinumerous",
            "maximal_strong": maximal_strong.len(),
            "ultra": ultra.len(),
        }))
    });

    if ctx.max_in_y() || !cfg.keeps("Max in Y") {
        for (ii, ideal) in ctx.ideals.iter().enumerate() {
            if is_maximal_ideal(ctx, ideal) {
                let image_ultra = infos
                    .iter()
                    .find(|info| info.filter == tables.fwd[ii])
                    .map(|info| info.ultra)
                    .unwrap_or(false);
                probe.check(image_ultra, || {
                    wit(ctx, json!({"clause": "maximal ideals map to ultrafilters", "ideal": ideal.gens_label()}))
                });
            }
            if ctx.class[ii].strong_hy {
                let image_ultra = infos
                    .iter()
                    .find(|info| info.filter == tables.fwd[ii])
                    .map(|info| info.ultra)
                    .unwrap_or(false);
                probe.check(image_ultra == is_maximal_ideal(ctx, ideal), || {
                    wit(ctx, json!({"clause": "strong ideals with ultra images are maximal", "ideal": ideal.gens_label()}))
                });
            }
        }
        for (fi, info) in infos.iter().enumerate() {
            probe.check(info.ultra == is_maximal_ideal(ctx, &tables.back[fi]), || {
                wit(ctx, json!({"clause": "ultrafilters have maximal preimages", "filter": fi}))
            });
        }
    }
    Ok(())
}

/// A proper filter disjoint from a union-closed set extends to a prime
/// filter still disjoint from it.
fn t17(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let lattice = &ctx.lattice;
    if lattice.len() > 16 {
        return Err(Error::FilterCapExceeded { size: lattice.len(), cap: 16 });
    }
    let primes: Vec<&FilterInfo> = infos.iter().filter(|f| f.prime).collect();
    for f in infos.iter().filter(|f| f.proper) {
        for mask in 0u32..(1 << lattice.len()) {
            let members: Vec<usize> =
                (0..lattice.len()).filter(|&i| mask & (1 << i) != 0).collect();
            let union_closed = members
                .iter()
                .all(|&i| members.iter().all(|&j| members.contains(&lattice.join(i, j))));
            if !union_closed {
                continue;
            }
            let disjoint = members.iter().all(|&i| !f.filter.contains(i));
            if !disjoint {
                continue;
            }
            let found = primes.iter().any(|p| {
                f.filter.is_subset(&p.filter) && members.iter().all(|&i| !p.filter.contains(i))
            });
            probe.check(found, || {
                wit(ctx, json!({
                    "filter": format!("{:?}", f.filter.iter().collect::<Vec<_>>()),
                    "union_closed_set": members,
                }))
            });
        }
    }
    Ok(())
}

/// A prime filter over a proper filter is minimal exactly when each of
/// its members joins with some non-member back into the base filter; over
/// the trivial filter the join must be the whole space.
fn t18(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let lattice = &ctx.lattice;
    let primes: Vec<&FilterInfo> = infos.iter().filter(|f| f.prime).collect();
    let top = lattice.top();
    for f in infos.iter().filter(|f| f.proper) {
        let over: Vec<&&FilterInfo> =
            primes.iter().filter(|p| f.filter.is_subset(&p.filter)).collect();
        for p in &over {
            let minimal = over
                .iter()
                .all(|q| q.filter == p.filter || !q.filter.is_subset(&p.filter));
            let exchange = p.filter.iter().all(|a| {
                (0..lattice.len())
                    .any(|b| !p.filter.contains(b) && f.filter.contains(lattice.join(a, b)))
            });
            probe.check(minimal == exchange, || {
                wit(ctx, json!({
                    "clause": "exchange characterization",
                    "filter": f.filter.iter().collect::<Vec<_>>(),
                    "prime": p.filter.iter().collect::<Vec<_>>(),
                }))
            });
        }
    }
    // trivial base filter: join with a non-member must reach the top
    let trivial = lattice.up_set(top);
    let over: Vec<&&FilterInfo> = primes.iter().filter(|p| trivial.is_subset(&p.filter)).collect();
    for p in &over {
        let minimal = over.iter().all(|q| q.filter == p.filter || !q.filter.is_subset(&p.filter));
        let exchange = p
            .filter
            .iter()
            .all(|a| (0..lattice.len()).any(|b| !p.filter.contains(b) && lattice.join(a, b) == top));
        probe.check(minimal == exchange, || {
            wit(ctx, json!({
                "clause": "exchange over the trivial filter reaches the top",
                "prime": p.filter.iter().collect::<Vec<_>>(),
            }))
        });
    }
    Ok(())
}

/// Minimality of prime filters matches minimality of their prime ideal
/// preimages, in both directions, and every filter is the intersection of
/// its minimal prime filters.
fn t19(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    let lattice = &ctx.lattice;
    let tables = galois_tables(ctx, infos)?;
    let primes: Vec<usize> = (0..infos.len()).filter(|&i| infos[i].prime).collect();

    for (fi, f) in infos.iter().enumerate() {
        if !f.proper {
            continue;
        }
        let over: Vec<usize> = primes
            .iter()
            .copied()
            .filter(|&p| f.filter.is_subset(&infos[p].filter))
            .collect();
        for &p in &over {
            let filter_minimal = over
                .iter()
                .all(|&q| infos[q].filter == infos[p].filter || !infos[q].filter.is_subset(&infos[p].filter));
            // ideal side: minimality among prime ideals over the preimage
            let base = &tables.back[fi];
            let prime_ideals_over: Vec<&Ideal> = ctx
                .spectrum
                .primes
                .iter()
                .filter(|q| base.is_subset(q))
                .collect();
            let target = &tables.back[p];
            let ideal_minimal = prime_ideals_over.contains(&target)
                && prime_ideals_over.iter().all(|q| *q == target || !q.is_subset(target));
            probe.check(filter_minimal == ideal_minimal, || {
                wit(ctx, json!({
                    "clause": "filter minimality matches ideal minimality",
                    "filter": fi,
                    "prime_filter": p,
                }))
            });
        }
    }

    // strong ideal side
    for (ii, ideal) in ctx.ideals.iter().enumerate() {
        if !ctx.class[ii].strong_hy || ideal.is_whole() {
            continue;
        }
        let image = &tables.fwd[ii];
        for p in &ctx.spectrum.primes {
            if !ideal.is_subset(p) {
                continue;
            }
            let in_min = min_primes_over(&ctx.spectrum, ideal)?.contains(&p);
            let p_image = galois_ideal_to_filter(lattice, p).expect("filter");
            let over: Vec<usize> = primes
                .iter()
                .copied()
                .filter(|&q| image.is_subset(&infos[q].filter))
                .collect();
            let image_minimal = over.iter().any(|&q| infos[q].filter == p_image)
                && over
                    .iter()
                    .all(|&q| infos[q].filter == p_image || !infos[q].filter.is_subset(&p_image));
            probe.check(in_min == image_minimal, || {
                wit(ctx, json!({
                    "clause": "ideal minimality matches filter minimality",
                    "ideal": ideal.gens_label(),
                    "prime": p.gens_label(),
                }))
            });
        }
    }

    // every filter is the meet of its minimal prime filters
    for f in infos {
        let over: Vec<usize> = primes
            .iter()
            .copied()
            .filter(|&p| f.filter.is_subset(&infos[p].filter))
            .collect();
        let minimal: Vec<usize> = over
            .iter()
            .copied()
            .filter(|&p| {
                over.iter()
                    .all(|&q| infos[q].filter == infos[p].filter || !infos[q].filter.is_subset(&infos[p].filter))
            })
            .collect();
        let mut meet = HYFilter {
            members: {
                let mut m = fixedbitset::FixedBitSet::with_capacity(lattice.len());
                m.insert_range(..);
                m
            },
        };
        for &p in &minimal {
            meet.members.intersect_with(&infos[p].filter.members);
        }
        probe.check(meet == f.filter, || {
            wit(ctx, json!({
                "clause": "filter equals intersection of minimal prime filters",
                "filter": f.filter.iter().collect::<Vec<_>>(),
            }))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------
// T20 .. T21: transports
// ---------------------------------------------------------------------

/// Filters transport along quotients by ideals inside `k(Y)`: the image
/// is a filter, primeness and maximality transfer, and the Galois
/// preimages correspond. With the containment dropped, the raw image
/// construction is attempted and its defects are reported as witnesses.
fn t20(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    for ideal in &ctx.ideals {
        let contained = ideal.is_subset(ctx.space.ky());
        if !contained && cfg.keeps("I inside kY") {
            continue;
        }
        for (fi, info) in infos.iter().enumerate() {
            if contained {
                let t = transport(&ctx.lattice, TransportTarget::Quotient(ideal), &info.filter, &cfg.caps)?;
                // transport itself asserts filterhood and the ideal
                // correspondence; here the kind flags must transfer
                let tinfos = filters(&t.lattice, FilterKind::All, &cfg.caps)?;
                let tinfo = tinfos
                    .iter()
                    .find(|i| i.filter == t.filter)
                    .ok_or_else(|| Error::InternalDisagreement("transported filter not enumerated".into()))?;
                probe.check(tinfo.prime == info.prime, || {
                    wit(ctx, json!({"clause": "primeness transfers to the quotient", "ideal": ideal.gens_label(), "filter": fi}))
                });
                probe.check(tinfo.ultra == info.ultra, || {
                    wit(ctx, json!({"clause": "maximality transfers to the quotient", "ideal": ideal.gens_label(), "filter": fi}))
                });
            } else {
                let verdict = transport_quotient_lenient(&ctx.lattice, ideal, &info.filter, &cfg.caps)?;
                probe.check(verdict.ok, || {
                    wit(ctx, json!({
                        "clause": "raw quotient transport without the containment",
                        "ideal": ideal.gens_label(),
                        "filter": fi,
                        "defect": verdict.reason,
                    }))
                });
            }
        }
    }
    Ok(())
}

/// Filters transport along subring contractions: contracted hulls match
/// pointwise contraction, images are filters with corresponding
/// preimages, every filter downstairs is an image, class membership
/// contracts, and maximal class members correspond.
fn t21(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let infos = ctx.filters()?;
    for carrier in all_subrings(&ctx.ring) {
        let (sub, emb) = build_subring(&ctx.ring, &carrier)?;
        // clause (a): contraction commutes with hulls, checked on the
        // subring's own quantifier family
        let first = transport(
            &ctx.lattice,
            TransportTarget::Subring(&sub, &emb),
            &ctx.lattice.up_set(ctx.lattice.top()),
            &cfg.caps,
        )?;
        let sspace = &first.space;
        let sideals = &first.ideals;
        // position of each contracted prime in the deduplicated list
        let contraction_pos: Vec<usize> = ctx
            .space
            .primes()
            .iter()
            .map(|p| {
                let mut mask = fixedbitset::FixedBitSet::with_capacity(sub.size());
                for x in sub.elems() {
                    if p.contains(emb.map[x]) {
                        mask.insert(x);
                    }
                }
                sspace
                    .primes()
                    .iter()
                    .position(|q| *q.members() == mask)
                    .expect("contracted prime is listed")
            })
            .collect();
        let sub_family = SFamily::build(sspace, sideals);
        for (s, set) in sub_family.sets.iter().enumerate() {
            let image: Vec<Elem> = set.iter().map(|&x| emb.map[x]).collect();
            let ambient = hull(&ctx.space, &image);
            let mut expected = YSet::empty(sspace.len());
            for p in ambient.iter() {
                expected.mask.insert(contraction_pos[p]);
            }
            probe.check(sub_family.hulls[s] == expected, || {
                wit(ctx, json!({
                    "clause": "contracted hull is the pointwise contraction",
                    "subring_size": sub.size(),
                    "s": set.clone(),
                }))
            });
        }

        // clauses (b), (d): every filter transports to a filter with the
        // corresponding preimage (asserted inside transport); collect the
        // images for clause (c)
        let mut images: Vec<HYFilter> = Vec::new();
        for info in infos {
            let t = transport(&ctx.lattice, TransportTarget::Subring(&sub, &emb), &info.filter, &cfg.caps)?;
            probe.check(t.lattice.is_filter(&t.filter), || {
                wit(ctx, json!({"clause": "subring transport is a filter", "subring_size": sub.size()}))
            });
            if !images.contains(&t.filter) {
                images.push(t.filter);
            }
        }
        let slattice = build_lattice(sspace, sideals)?;
        let sfilters = filters(&slattice, FilterKind::All, &cfg.caps)?;
        probe.check(sfilters.iter().all(|f| images.contains(&f.filter)), || {
            wit(ctx, json!({
                "clause": "every filter downstairs is a transported image",
                "subring_size": sub.size(),
            }))
        });

        // clause (e): class membership contracts
        for (class, name) in CLASSES {
            for (idx, ideal) in ctx.ideals.iter().enumerate() {
                if !class_of(ctx, idx, class) {
                    continue;
                }
                let mut mask = fixedbitset::FixedBitSet::with_capacity(sub.size());
                for x in sub.elems() {
                    if ideal.contains(emb.map[x]) {
                        mask.insert(x);
                    }
                }
                let contracted = Ideal::from_members(Arc::clone(&sub), mask);
                probe.check(in_class(sspace, &contracted, class), || {
                    wit(ctx, json!({
                        "clause": "class membership contracts to the subring",
                        "class": name,
                        "ideal": ideal.gens_label(),
                        "subring_size": sub.size(),
                    }))
                });
            }
        }

        // clause (f): maximal proper class members correspond under
        // contraction
        for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
            let proper: Vec<&Ideal> = ctx
                .ideals
                .iter()
                .enumerate()
                .filter(|(idx, i)| i.is_proper() && class_of(ctx, *idx, class))
                .map(|(_, i)| i)
                .collect();
            let upstairs: Vec<Ideal> = maximal_ideals_of(&proper)
                .into_iter()
                .map(|m| {
                    let mut mask = fixedbitset::FixedBitSet::with_capacity(sub.size());
                    for x in sub.elems() {
                        if m.contains(emb.map[x]) {
                            mask.insert(x);
                        }
                    }
                    Ideal::from_members(Arc::clone(&sub), mask)
                })
                .collect();
            let sproper: Vec<&Ideal> = sideals
                .iter()
                .filter(|i| i.is_proper() && in_class(sspace, i, class))
                .collect();
            let downstairs = maximal_ideals_of(&sproper);
            let same = downstairs.iter().all(|d| upstairs.contains(d))
                && upstairs.iter().all(|u| downstairs.contains(u));
            probe.check(same, || {
                wit(ctx, json!({
                    "clause": "maximal class members correspond under contraction",
                    "class": name,
                    "subring_size": sub.size(),
                }))
            });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// T22 .. T26: generated classes and the regularity characterization
// ---------------------------------------------------------------------

/// Colon by an arbitrary ideal preserves each class.
fn t22(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (class, name) in CLASSES {
        for (idx, j) in ctx.ideals.iter().enumerate() {
            if !class_of(ctx, idx, class) {
                continue;
            }
            for i in &ctx.ideals {
                let quotient = colon_ideal(j, i)?;
                probe.check(in_class(&ctx.space, &quotient, class), || {
                    wit(ctx, json!({
                        "class": name,
                        "j": j.gens_label(),
                        "i": i.gens_label(),
                        "colon": quotient.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

/// Under `k(Y) = 0` in a semiprimitive Gelfand or weakly regular ring,
/// the minimal members of the three classes coincide.
fn t23(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let ring_ok = (ctx.flags.semiprimitive && ctx.flags.gelfand) || ctx.flags.weakly_regular;
    if (!ctx.ky_is_zero() && cfg.keeps("kY=0")) || (!ring_ok && cfg.keeps("gelfand-or-weakly-regular")) {
        return Ok(());
    }
    for _ in 0..(3 * ctx.ideals.len()) {
        probe.tick();
    }
    let minimal = |class: IdealClass| -> Vec<&Ideal> {
        let members: Vec<(usize, &Ideal)> = ctx
            .ideals
            .iter()
            .enumerate()
            .filter(|(idx, i)| !i.is_zero() && class_of(ctx, *idx, class))
            .collect();
        members
            .iter()
            .filter(|(_, i)| {
                members.iter().all(|(_, j)| j == i || !j.is_subset(i))
            })
            .map(|(_, i)| *i)
            .collect()
    };
    let hy = minimal(IdealClass::Hy);
    let strong = minimal(IdealClass::Strong);
    let hilbert = minimal(IdealClass::Hilbert);
    probe.check(hy == strong && strong == hilbert, || {
        wit(ctx, json!({
            "hy_minimal": hy.iter().map(|i| i.gens_label()).collect::<Vec<_>>(),
            "strong_minimal": strong.iter().map(|i| i.gens_label()).collect::<Vec<_>>(),
            "hilbert_minimal": hilbert.iter().map(|i| i.gens_label()).collect::<Vec<_>>(),
        }))
    });
    Ok(())
}

/// The multiplicative sets quantified over by the saturation claims:
/// powers of each element, complements of primes, and `1 + I` for every
/// ideal.
fn mult_family(ctx: &CaseContext) -> Result<Vec<(String, MultSet)>> {
    let mut out = Vec::new();
    for a in ctx.ring.elems() {
        out.push((format!("powers({})", ctx.ring.elem_label(a)), MultSet::closure(&ctx.ring, &[a])?));
    }
    for p in &ctx.spectrum.primes {
        out.push((format!("complement({})", p.gens_label()), MultSet::complement_of(p)?));
    }
    for i in &ctx.ideals {
        if i.is_proper() {
            out.push((format!("one_plus({})", i.gens_label()), MultSet::one_plus(i)));
        }
    }
    Ok(out)
}

/// Saturating a class ideal by a disjoint multiplicative set yields a
/// proper class ideal; with `k(Y) = 0` the zero components, quasi-regular
/// parts, pure ideals and the socle are all strong.
fn t24(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let family = mult_family(ctx)?;
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        for (label, mult) in &family {
            for (idx, ideal) in ctx.ideals.iter().enumerate() {
                if !class_of(ctx, idx, class) {
                    continue;
                }
                if mult.intersects(ideal) && cfg.keeps("A disjoint from I") {
                    continue;
                }
                let saturated = saturate(ideal, mult)?;
                probe.check(saturated.is_proper() && in_class(&ctx.space, &saturated, class), || {
                    wit(ctx, json!({
                        "class": name,
                        "ideal": ideal.gens_label(),
                        "mult_set": label,
                        "saturation": saturated.gens_label(),
                        "proper": saturated.is_proper(),
                    }))
                });
            }
        }
    }
    if ctx.ky_is_zero() || !cfg.keeps("kY=0") {
        for p in &ctx.spectrum.primes {
            let o_p = zero_component(p)?;
            probe.check(
                in_class(&ctx.space, &o_p, IdealClass::Strong)
                    && in_class(&ctx.space, &o_p, IdealClass::Hy),
                || {
                    wit(ctx, json!({
                        "clause": "zero component is strong",
                        "prime": p.gens_label(),
                        "zero_component": o_p.gens_label(),
                    }))
                },
            );
        }
        for ideal in &ctx.ideals {
            let m = quasi_regular(ideal);
            probe.check(in_class(&ctx.space, &m, IdealClass::Strong), || {
                wit(ctx, json!({
                    "clause": "quasi-regular part is strong",
                    "ideal": ideal.gens_label(),
                    "quasi_regular": m.gens_label(),
                }))
            });
            let pure = quasi_regular(ideal) == *ideal;
            if pure {
                probe.check(in_class(&ctx.space, ideal, IdealClass::Strong), || {
                    wit(ctx, json!({"clause": "pure ideals are strong", "ideal": ideal.gens_label()}))
                });
            }
        }
        let soc = socle(&ctx.ring, &ctx.ideals);
        probe.check(in_class(&ctx.space, &soc, IdealClass::Strong), || {
            wit(ctx, json!({"clause": "socle of a reduced ring is strong", "socle": soc.gens_label()}))
        });
    }
    Ok(())
}

/// Every finitely generated strong ideal is hull-kernel closed (in a
/// finite ring: every strong ideal), and the three classes agree on
/// principal ideals.
fn t25(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (idx, ideal) in ctx.ideals.iter().enumerate() {
        if ctx.class[idx].strong_hy {
            probe.check(ctx.class[idx].y_hilbert, || {
                wit(ctx, json!({
                    "clause": "finitely generated strong ideal is hull-kernel closed",
                    "ideal": ideal.gens_label(),
                }))
            });
        }
    }
    for a in ctx.ring.elems() {
        let principal = crate::ideal::span(&ctx.ring, &[a])?;
        let hy = in_class(&ctx.space, &principal, IdealClass::Hy);
        let strong = in_class(&ctx.space, &principal, IdealClass::Strong);
        let hilbert = in_class(&ctx.space, &principal, IdealClass::Hilbert);
        probe.check(hy == strong && strong == hilbert, || {
            wit(ctx, json!({
                "generator": ctx.ring.elem_label(a),
                "hy": hy,
                "strong": strong,
                "hilbert": hilbert,
            }))
        });
    }
    Ok(())
}

/// Ten statements that stand or fall together: every ideal (resp. every
/// two-generated, every principal ideal) in each class, `k(Y) = 0` with a
/// regular ring, and the essential-ideal variants. Two-generated spans
/// realize the finitely-generated versions; they sit between the full and
/// principal quantifiers in the equivalence chain, so the realization is
/// faithful.
fn t26(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let keep_ky = cfg.keeps("kY=0");
    let ky0 = ctx.ky_is_zero();
    let gate = |stmt: bool| -> bool {
        if keep_ky {
            ky0 && stmt
        } else {
            stmt
        }
    };

    for _ in 0..(2 * ctx.ideals.len() + ctx.ring.size() * ctx.ring.size() + ctx.ring.size()) {
        probe.tick();
    }
    let a = (0..ctx.ideals.len()).all(|i| ctx.class[i].strong_hy);
    let two_generated: Vec<Ideal> = {
        let mut out = Vec::new();
        for x in ctx.ring.elems() {
            for y in ctx.ring.elems() {
                let i = crate::ideal::span(&ctx.ring, &[x, y])?;
                if !out.contains(&i) {
                    out.push(i);
                }
            }
        }
        out
    };
    let b = two_generated.iter().all(|i| in_class(&ctx.space, i, IdealClass::Strong));
    let c = two_generated.iter().all(|i| in_class(&ctx.space, i, IdealClass::Hilbert));
    let d = (0..ctx.ideals.len()).all(|i| ctx.class[i].hy);
    let principal: Vec<Ideal> = {
        let mut out = Vec::new();
        for x in ctx.ring.elems() {
            let i = crate::ideal::span(&ctx.ring, &[x])?;
            if !out.contains(&i) {
                out.push(i);
            }
        }
        out
    };
    let e = principal.iter().all(|i| in_class(&ctx.space, i, IdealClass::Hy));
    let f = principal.iter().all(|i| in_class(&ctx.space, i, IdealClass::Strong));
    let g = principal.iter().all(|i| in_class(&ctx.space, i, IdealClass::Hilbert));
    let h = gate(ctx.flags.regular_ring);
    let essential: Vec<usize> = (0..ctx.ideals.len())
        .filter(|&i| {
            let ideal = &ctx.ideals[i];
            ctx.ideals
                .iter()
                .filter(|j| !j.is_zero())
                .all(|j| !combine(CombineOp::Intersect, ideal, j).expect("same ring").is_zero())
        })
        .collect();
    let k = gate(essential.iter().all(|&i| ctx.class[i].strong_hy));
    let l = gate(essential.iter().all(|&i| ctx.class[i].hy));

    let all = [a, b, c, d, e, f, g, h, k, l];
    probe.check(all.iter().all(|&v| v == a), || {
        wit(ctx, json!({
            "every_ideal_strong": a,
            "every_two_generated_strong": b,
            "every_two_generated_hilbert": c,
            "every_ideal_hy": d,
            "every_principal_hy": e,
            "every_principal_strong": f,
            "every_principal_hilbert": g,
            "ky_zero_and_regular": h,
            "ky_zero_and_essential_strong": k,
            "ky_zero_and_essential_hy": l,
        }))
    });
    Ok(())
}

// ---------------------------------------------------------------------
// T27 .. T31: coincidence, products, homomorphisms, maximal members
// ---------------------------------------------------------------------

/// Over a finite selector the three classes coincide, and so do the three
/// closures, computed by three genuinely different routes.
fn t27(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (idx, ideal) in ctx.ideals.iter().enumerate() {
        let r = &ctx.class[idx];
        probe.check(r.hy == r.strong_hy && r.strong_hy == r.y_hilbert, || {
            wit(ctx, json!({
                "ideal": ideal.gens_label(),
                "hy": r.hy,
                "strong_hy": r.strong_hy,
                "y_hilbert": r.y_hilbert,
            }))
        });
        let via_chain = closure_hy(&ctx.space, ideal);
        let via_filters = {
            let f = galois_ideal_to_filter(&ctx.lattice, ideal)?;
            galois_filter_to_ideal(&ctx.lattice, &f)?
        };
        let via_kernel = kernel_hull(&ctx.space, ideal);
        probe.check(via_chain == via_filters && via_filters == via_kernel, || {
            wit(ctx, json!({
                "ideal": ideal.gens_label(),
                "chain_closure": via_chain.gens_label(),
                "filter_closure": via_filters.gens_label(),
                "kernel_hull": via_kernel.gens_label(),
            }))
        });
    }
    Ok(())
}

/// A product of class ideals is in the class exactly when it equals the
/// intersection.
fn t28(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (class, name) in CLASSES {
        for (ia, a) in ctx.ideals.iter().enumerate() {
            if !class_of(ctx, ia, class) {
                continue;
            }
            for (ib, b) in ctx.ideals.iter().enumerate() {
                if !class_of(ctx, ib, class) {
                    continue;
                }
                let prod = combine(CombineOp::Product, a, b)?;
                let meet = combine(CombineOp::Intersect, a, b)?;
                probe.check(in_class(&ctx.space, &prod, class) == (prod == meet), || {
                    wit(ctx, json!({
                        "class": name,
                        "a": a.gens_label(),
                        "b": b.gens_label(),
                        "product": prod.gens_label(),
                        "intersection": meet.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

/// Contraction along homomorphisms: quotient projections contract class
/// ideals iff the selected primes contract; within one ring the classes
/// transfer between spectrum subsets as governed by membership of the
/// primes themselves, and a shared kernel is exactly what makes one
/// class absorb into another.
fn t29(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    // identity-homomorphism transfer between selector subsets
    let spaces = selector_spaces(ctx)?;
    for x in &spaces {
        for y in &spaces {
            for (class, name) in CLASSES {
                let lhs = y.primes().iter().all(|p| in_class(x, p, class));
                let rhs = ctx
                    .ideals
                    .iter()
                    .all(|i| !in_class(y, i, class) || in_class(x, i, class));
                probe.check(lhs == rhs, || {
                    wit(ctx, json!({
                        "clause": "transfer iff primes are in the class",
                        "class": name,
                        "x": x.label(),
                        "y": y.label(),
                    }))
                });
                // subset monotonicity
                let x_in_y = x
                    .primes()
                    .iter()
                    .all(|p| y.primes().iter().any(|q| q == p));
                if x_in_y {
                    let mono = ctx
                        .ideals
                        .iter()
                        .all(|i| !in_class(x, i, class) || in_class(y, i, class));
                    probe.check(mono, || {
                        wit(ctx, json!({
                            "clause": "smaller selector gives stronger class",
                            "class": name,
                            "x": x.label(),
                            "y": y.label(),
                        }))
                    });
                    let y_primes_in_x = y.primes().iter().all(|p| in_class(x, p, class));
                    if y_primes_in_x {
                        let coincide = ctx
                            .ideals
                            .iter()
                            .all(|i| in_class(x, i, class) == in_class(y, i, class));
                        probe.check(coincide, || {
                            wit(ctx, json!({
                                "clause": "classes coincide when the larger primes contract",
                                "class": name,
                                "x": x.label(),
                                "y": y.label(),
                            }))
                        });
                    }
                }
            }
            // shared kernel criterion, for the plain and strong classes
            if x.ky().is_subset(y.ky()) {
                for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
                    let absorb = ctx
                        .ideals
                        .iter()
                        .all(|i| !in_class(x, i, class) || in_class(y, i, class));
                    probe.check(absorb == (x.ky() == y.ky()), || {
                        wit(ctx, json!({
                            "clause": "absorption iff the kernels agree",
                            "class": name,
                            "x": x.label(),
                            "y": y.label(),
                        }))
                    });
                }
            }
        }
    }

    // quotient projections
    for ideal in &ctx.ideals {
        let members: Vec<bool> = ctx.ring.elems().map(|e| ideal.contains(e)).collect();
        let (q, proj) = quotient_ring(&ctx.ring, &members)?;
        let qideals = all_ideals(&q, &cfg.caps)?;
        let qspec = spectrum(&q, &qideals);
        let qspace = build_space(&q, &qspec, &YSelector::Spec)?;
        let contract = |j: &Ideal| -> Ideal {
            let mut mask = fixedbitset::FixedBitSet::with_capacity(ctx.ring.size());
            for a in ctx.ring.elems() {
                if j.contains(proj.map[a]) {
                    mask.insert(a);
                }
            }
            Ideal::from_members(Arc::clone(&ctx.ring), mask)
        };
        for (class, name) in CLASSES {
            let lhs = qspace
                .primes()
                .iter()
                .all(|p| in_class(&ctx.space, &contract(p), class));
            let rhs = qideals
                .iter()
                .all(|j| !in_class(&qspace, j, class) || in_class(&ctx.space, &contract(j), class));
            probe.check(lhs == rhs, || {
                wit(ctx, json!({
                    "clause": "quotient contraction iff contracted primes are in the class",
                    "class": name,
                    "ideal": ideal.gens_label(),
                }))
            });
        }

        // the induced selector on the quotient: primes of Y over the
        // ideal; membership upstairs and downstairs must agree
        let over_positions: Vec<usize> = (0..ctx.space.len())
            .filter(|&i| ideal.is_subset(&ctx.space.primes()[i]))
            .collect();
        let over_primes: Vec<Ideal> = over_positions
            .iter()
            .map(|&i| {
                let p = &ctx.space.primes()[i];
                let mut mask = fixedbitset::FixedBitSet::with_capacity(q.size());
                for a in p.iter() {
                    mask.insert(proj.map[a]);
                }
                Ideal::from_members(Arc::clone(&q), mask)
            })
            .collect();
        let over_space = {
            let positions: Vec<usize> = (0..over_primes.len()).collect();
            let primes: Vec<Ideal> = over_primes.clone();
            Arc::new(crate::space::space_from_primes(
                Arc::clone(&q),
                primes,
                YSelector::Indices(positions),
            ))
        };
        for (class, name) in CLASSES {
            for j in &ctx.ideals {
                if !ideal.is_subset(j) {
                    continue;
                }
                let mut mask = fixedbitset::FixedBitSet::with_capacity(q.size());
                for a in j.iter() {
                    mask.insert(proj.map[a]);
                }
                let image = Ideal::from_members(Arc::clone(&q), mask);
                probe.check(
                    in_class(&over_space, &image, class) == in_class(&ctx.space, j, class),
                    || {
                        wit(ctx, json!({
                            "clause": "membership passes to the quotient selector",
                            "class": name,
                            "modulus": ideal.gens_label(),
                            "ideal": j.gens_label(),
                        }))
                    },
                );
            }
        }
    }

    Ok(())
}

/// Saturation images of class ideals stay in the class, with no
/// disjointness required (the image may be the whole ring).
fn t30(ctx: &CaseContext, _cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let family = mult_family(ctx)?;
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        for (label, mult) in &family {
            for (idx, ideal) in ctx.ideals.iter().enumerate() {
                if !class_of(ctx, idx, class) {
                    continue;
                }
                let saturated = saturate(ideal, mult)?;
                probe.check(in_class(&ctx.space, &saturated, class), || {
                    wit(ctx, json!({
                        "class": name,
                        "ideal": ideal.gens_label(),
                        "mult_set": label,
                        "saturation": saturated.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

/// Maximal class members exist in every interval over a proper class
/// ideal; below a prime over `k(Y)` they are prime; with `k(Y) = 0`
/// every prime is in the class or contains a maximal class member that is
/// prime.
fn t31(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        let proper_members: Vec<usize> = (0..ctx.ideals.len())
            .filter(|&i| ctx.ideals[i].is_proper() && class_of(ctx, i, class))
            .collect();
        if proper_members.is_empty() {
            continue;
        }
        // (a) intervals [I, J] and the two half-bounded forms
        for &ii in &proper_members {
            let base = &ctx.ideals[ii];
            for j in &ctx.ideals {
                if !base.is_subset(j) {
                    continue;
                }
                let pool: Vec<&Ideal> = proper_members
                    .iter()
                    .map(|&k| &ctx.ideals[k])
                    .filter(|m| base.is_subset(m) && m.is_subset(j))
                    .collect();
                probe.check(!maximal_ideals_of(&pool).is_empty(), || {
                    wit(ctx, json!({
                        "clause": "interval admits a maximal class member",
                        "class": name,
                        "lo": base.gens_label(),
                        "hi": j.gens_label(),
                    }))
                });
            }
        }
        let ky = ctx.space.ky();
        for j in &ctx.ideals {
            if !ky.is_subset(j) {
                continue;
            }
            let pool: Vec<&Ideal> = proper_members
                .iter()
                .map(|&k| &ctx.ideals[k])
                .filter(|m| m.is_subset(j))
                .collect();
            probe.check(!maximal_ideals_of(&pool).is_empty(), || {
                wit(ctx, json!({
                    "clause": "down-set of an ideal over the kernel admits a maximal class member",
                    "class": name,
                    "hi": j.gens_label(),
                }))
            });
        }
        // (b) below a prime over k(Y), maximal class members are prime
        for p in &ctx.spectrum.primes {
            if !ky.is_subset(p) {
                continue;
            }
            let pool: Vec<&Ideal> = proper_members
                .iter()
                .map(|&k| &ctx.ideals[k])
                .filter(|m| m.is_subset(p))
                .collect();
            for m in maximal_ideals_of(&pool) {
                probe.check(is_prime(&m), || {
                    wit(ctx, json!({
                        "clause": "maximal class member under a prime is prime",
                        "class": name,
                        "prime": p.gens_label(),
                        "member": m.gens_label(),
                    }))
                });
            }
        }
        // (c) with k(Y) = 0
        if ctx.ky_is_zero() || !cfg.keeps("kY=0") {
            for p in &ctx.spectrum.primes {
                let in_cls = in_class(&ctx.space, p, class);
                let pool: Vec<&Ideal> = proper_members
                    .iter()
                    .map(|&k| &ctx.ideals[k])
                    .filter(|m| m.is_subset(p))
                    .collect();
                let has_prime_max = maximal_ideals_of(&pool).iter().any(is_prime);
                probe.check(in_cls || has_prime_max, || {
                    wit(ctx, json!({
                        "clause": "prime is in the class or holds a prime maximal member",
                        "class": name,
                        "prime": p.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// T32 .. T35: closure characterizations and zero-divisor corollaries
// ---------------------------------------------------------------------

/// The smallest class overideals admit all their advertised
/// characterizations: the Galois round trip, the existential hull forms,
/// the union/sum of finite-subset kernel hulls, monotone collapse under
/// powers and radicals, multiplicativity over products and meets, the
/// elementwise chain fixpoint, cross-selector monotonicity, and the
/// quasi-regular equalities.
fn t32(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let space = &ctx.space;
    let ring = &ctx.ring;
    let hy_prop = hy_property(space).0;

    for ideal in &ctx.ideals {
        let sh_oracle = oracle_smallest(space, &ctx.ideals, IdealClass::Strong, ideal);
        let h_oracle = oracle_smallest(space, &ctx.ideals, IdealClass::Hy, ideal);

        // Galois round trip
        let round = {
            let f = galois_ideal_to_filter(&ctx.lattice, ideal)?;
            galois_filter_to_ideal(&ctx.lattice, &f)?
        };
        probe.check(round == sh_oracle, || {
            wit(ctx, json!({
                "clause": "strong closure is the Galois round trip",
                "ideal": ideal.gens_label(),
                "round_trip": round.gens_label(),
                "oracle": sh_oracle.gens_label(),
            }))
        });

        // existential hull forms over the finite-subset family
        let ff = FFamily::build(space, ideal);
        let mut by_hull = fixedbitset::FixedBitSet::with_capacity(ring.size());
        let mut by_kh = fixedbitset::FixedBitSet::with_capacity(ring.size());
        for a in ring.elems() {
            if ff.hulls.iter().any(|hf| hf.is_subset(space.elem_hull(a))) {
                by_hull.insert(a);
            }
            if ff.kh.iter().any(|kh| space.elem_kh(a).is_subset(kh)) {
                by_kh.insert(a);
            }
        }
        probe.check(by_hull == *sh_oracle.members() && by_kh == *sh_oracle.members(), || {
            wit(ctx, json!({
                "clause": "existential hull forms match the strong closure",
                "ideal": ideal.gens_label(),
            }))
        });

        // union and sum of finite-subset kernel hulls
        let mut union = fixedbitset::FixedBitSet::with_capacity(ring.size());
        for kh in &ff.kh {
            union.union_with(kh);
        }
        let span_of_union = crate::ideal::span(ring, &union.ones().collect::<Vec<_>>())?;
        probe.check(union == *sh_oracle.members() && span_of_union == sh_oracle, || {
            wit(ctx, json!({
                "clause": "strong closure is the union (and sum) of finite-subset kernel hulls",
                "ideal": ideal.gens_label(),
            }))
        });

        // with the hull-pair property, the plain closure agrees and has a
        // single-element form
        if hy_prop || !cfg.keeps("hull-pair property") {
            let mut single = fixedbitset::FixedBitSet::with_capacity(ring.size());
            for a in ring.elems() {
                if ideal.iter().any(|b| space.elem_hull(b).is_subset(space.elem_hull(a))) {
                    single.insert(a);
                }
            }
            probe.check(h_oracle == sh_oracle && single == *sh_oracle.members(), || {
                wit(ctx, json!({
                    "clause": "hull-pair property collapses the closures to a single-element form",
                    "ideal": ideal.gens_label(),
                }))
            });
        }

        // the elementwise chain reaches the plain closure
        let chain = closure_hy(space, ideal);
        probe.check(chain == h_oracle, || {
            wit(ctx, json!({
                "clause": "elementwise chain fixpoint is the plain closure",
                "ideal": ideal.gens_label(),
                "chain": chain.gens_label(),
                "oracle": h_oracle.gens_label(),
            }))
        });

        // inclusion chain and collapse under squares and radicals
        let square = combine(CombineOp::Product, ideal, ideal)?;
        let rad = radical(ideal);
        let kh = kernel_hull(space, ideal);
        probe.check(
            square.is_subset(ideal)
                && ideal.is_subset(&rad)
                && rad.is_subset(&h_oracle)
                && h_oracle.is_subset(&sh_oracle)
                && sh_oracle.is_subset(&kh),
            || {
                wit(ctx, json!({
                    "clause": "inclusion chain through the closures",
                    "ideal": ideal.gens_label(),
                }))
            },
        );
        let collapse = |j: &Ideal| -> Result<(Ideal, Ideal, Ideal)> {
            Ok((
                oracle_smallest(space, &ctx.ideals, IdealClass::Hy, j),
                oracle_smallest(space, &ctx.ideals, IdealClass::Strong, j),
                kernel_hull(space, j),
            ))
        };
        let (h_sq, sh_sq, kh_sq) = collapse(&square)?;
        let (h_rad, sh_rad, kh_rad) = collapse(&rad)?;
        probe.check(
            h_sq == h_oracle
                && h_rad == h_oracle
                && sh_sq == sh_oracle
                && sh_rad == sh_oracle
                && kh_sq == kh
                && kh_rad == kh,
            || {
                wit(ctx, json!({
                    "clause": "squares and radicals share all three closures",
                    "ideal": ideal.gens_label(),
                }))
            },
        );
    }

    // multiplicativity over products and meets
    for a in &ctx.ideals {
        for b in &ctx.ideals {
            let prod = combine(CombineOp::Product, a, b)?;
            let meet = combine(CombineOp::Intersect, a, b)?;
            for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
                let close = |j: &Ideal| oracle_smallest(space, &ctx.ideals, class, j);
                let lhs = close(&prod);
                let mid = combine(CombineOp::Intersect, &close(a), &close(b))?;
                let rhs = close(&meet);
                probe.check(lhs == mid && mid == rhs, || {
                    wit(ctx, json!({
                        "clause": "closure turns products and meets into meets",
                        "class": name,
                        "a": a.gens_label(),
                        "b": b.gens_label(),
                    }))
                });
            }
            let lhs = kernel_hull(space, &prod);
            let mid = combine(
                CombineOp::Intersect,
                &kernel_hull(space, a),
                &kernel_hull(space, b),
            )?;
            let rhs = kernel_hull(space, &meet);
            probe.check(lhs == mid && mid == rhs, || {
                wit(ctx, json!({
                    "clause": "kernel hull turns products and meets into meets",
                    "a": a.gens_label(),
                    "b": b.gens_label(),
                }))
            });
        }
    }

    // cross-selector monotonicity
    let spaces = selector_spaces(ctx)?;
    for x in &spaces {
        for y in &spaces {
            for (class, name) in CLASSES {
                if !y.primes().iter().all(|p| in_class(x, p, class)) {
                    continue;
                }
                for i in &ctx.ideals {
                    let cx = match class {
                        IdealClass::Hy => oracle_smallest(x, &ctx.ideals, IdealClass::Hy, i),
                        IdealClass::Strong => oracle_smallest(x, &ctx.ideals, IdealClass::Strong, i),
                        IdealClass::Hilbert => kernel_hull(x, i),
                    };
                    let cy = match class {
                        IdealClass::Hy => oracle_smallest(y, &ctx.ideals, IdealClass::Hy, i),
                        IdealClass::Strong => oracle_smallest(y, &ctx.ideals, IdealClass::Strong, i),
                        IdealClass::Hilbert => kernel_hull(y, i),
                    };
                    probe.check(cx.is_subset(&cy), || {
                        wit(ctx, json!({
                            "clause": "closure grows with the selector when its primes contract",
                            "class": name,
                            "x": x.label(),
                            "y": y.label(),
                            "ideal": i.gens_label(),
                        }))
                    });
                }
            }
        }
    }

    // quasi-regular equalities
    if ctx.ky_is_zero() || !cfg.keeps("kY=0") {
        for ideal in &ctx.ideals {
            let m = quasi_regular(ideal);
            let h = oracle_smallest(space, &ctx.ideals, IdealClass::Hy, &m);
            let sh = oracle_smallest(space, &ctx.ideals, IdealClass::Strong, &m);
            probe.check(h == m && sh == m, || {
                wit(ctx, json!({
                    "clause": "quasi-regular parts are closure-fixed",
                    "ideal": ideal.gens_label(),
                }))
            });
        }
    }
    if ctx.max_in_y() || !cfg.keeps("Max in Y") {
        for ideal in &ctx.ideals {
            let m = quasi_regular(ideal);
            let mh = quasi_regular(&oracle_smallest(space, &ctx.ideals, IdealClass::Hy, ideal));
            let msh = quasi_regular(&oracle_smallest(space, &ctx.ideals, IdealClass::Strong, ideal));
            let mkh = quasi_regular(&kernel_hull(space, ideal));
            probe.check(m == mh && m == msh && m == mkh, || {
                wit(ctx, json!({
                    "clause": "quasi-regular part is blind to the closures",
                    "ideal": ideal.gens_label(),
                }))
            });
        }
    }
    Ok(())
}

/// Under property A with `k(Y) = 0`, ideals of zero divisors sit inside
/// proper class ideals, and maximal ideals of zero divisors are in the
/// class.
fn t33(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let hyp_ky = ctx.ky_is_zero() || !cfg.keeps("kY=0");
    let hyp_pa = ctx.flags.property_a || !cfg.keeps("property A");
    let hyp_red = ctx.flags.reduced || !cfg.keeps("reduced");
    let singular = |ideal: &Ideal| -> bool {
        ideal.iter().all(|a| a == ctx.ring.zero() || ctx.elem_classes[a].zero_divisor)
    };

    if hyp_ky && hyp_pa && hyp_red {
        for ideal in &ctx.ideals {
            if !singular(ideal) {
                continue;
            }
            let sh = oracle_smallest(&ctx.space, &ctx.ideals, IdealClass::Strong, ideal);
            let h = oracle_smallest(&ctx.space, &ctx.ideals, IdealClass::Hy, ideal);
            probe.check(sh.is_proper() && h.is_proper(), || {
                wit(ctx, json!({
                    "clause": "zero-divisor ideal has proper closures",
                    "ideal": ideal.gens_label(),
                    "strong_closure": sh.gens_label(),
                }))
            });
        }
    }
    if hyp_ky && hyp_pa {
        for (p, &maximal) in ctx.spectrum.primes.iter().zip(&ctx.spectrum.max_mask) {
            if !maximal || !singular(p) {
                continue;
            }
            probe.check(
                in_class(&ctx.space, p, IdealClass::Hy)
                    && in_class(&ctx.space, p, IdealClass::Strong),
                || {
                    wit(ctx, json!({
                        "clause": "maximal ideal of zero divisors is in the class",
                        "ideal": p.gens_label(),
                    }))
                },
            );
        }
        for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
            let proper: Vec<&Ideal> = ctx
                .ideals
                .iter()
                .enumerate()
                .filter(|(idx, i)| i.is_proper() && class_of(ctx, *idx, class))
                .map(|(_, i)| i)
                .collect();
            let maximal_members = maximal_ideals_of(&proper);
            for ideal in &ctx.ideals {
                if !singular(ideal) {
                    continue;
                }
                let found = maximal_members
                    .iter()
                    .any(|m| ideal.is_subset(m) && is_prime(m));
                probe.check(found, || {
                    wit(ctx, json!({
                        "clause": "zero-divisor ideal sits under a prime maximal class member",
                        "class": name,
                        "ideal": ideal.gens_label(),
                    }))
                });
            }
        }
    }
    Ok(())
}

/// Sums: a sum of class ideals is in the class exactly when closure
/// distributes over it; closures always distribute up to one more
/// closure; and with the full selector a sum is everything exactly when
/// the closed sum is.
fn t34(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    let space = &ctx.space;
    for (class, name) in [(IdealClass::Hy, "hy"), (IdealClass::Strong, "strong_hy")] {
        let close = |j: &Ideal| oracle_smallest(space, &ctx.ideals, class, j);
        for (ia, a) in ctx.ideals.iter().enumerate() {
            for (ib, b) in ctx.ideals.iter().enumerate() {
                let sum = combine(CombineOp::Sum, a, b)?;
                if class_of(ctx, ia, class) && class_of(ctx, ib, class) {
                    let closed_sum = close(&sum);
                    let sum_of_closed = combine(CombineOp::Sum, &close(a), &close(b))?;
                    probe.check(
                        in_class(space, &sum, class) == (closed_sum == sum_of_closed),
                        || {
                            wit(ctx, json!({
                                "clause": "sum is in the class iff closure distributes",
                                "class": name,
                                "a": a.gens_label(),
                                "b": b.gens_label(),
                            }))
                        },
                    );
                }
                let lhs = close(&sum);
                let rhs = close(&combine(CombineOp::Sum, &close(a), &close(b))?);
                probe.check(lhs == rhs, || {
                    wit(ctx, json!({
                        "clause": "closing the sum ignores inner closures",
                        "class": name,
                        "a": a.gens_label(),
                        "b": b.gens_label(),
                    }))
                });
                if ctx.max_in_y() || !cfg.keeps("Max in Y") {
                    let closed_sum_whole =
                        combine(CombineOp::Sum, &close(a), &close(b))?.is_whole();
                    probe.check(sum.is_whole() == closed_sum_whole, || {
                        wit(ctx, json!({
                            "clause": "sum is everything iff the closed sum is",
                            "class": name,
                            "a": a.gens_label(),
                            "b": b.gens_label(),
                        }))
                    });
                }
            }
        }
    }
    Ok(())
}

/// With `k(Y) = 0`, the strong closure over the minimal primes has an
/// interior characterization over `Y`.
fn t35(ctx: &CaseContext, cfg: &CheckConfig, probe: &mut Probe) -> Result<()> {
    if !ctx.ky_is_zero() && cfg.keeps("kY=0") {
        return Ok(());
    }
    for ideal in &ctx.ideals {
        let min_closure = oracle_smallest(&ctx.min_space, &ctx.ideals, IdealClass::Strong, ideal);
        let ff = FFamily::build(&ctx.space, ideal);
        let interiors: Vec<YSet> =
            ff.hulls.iter().map(|h| topo(&ctx.space, h, TopoOp::Interior)).collect();
        let mut by_interior = fixedbitset::FixedBitSet::with_capacity(ctx.ring.size());
        for a in ctx.ring.elems() {
            if interiors.iter().any(|i| i.is_subset(ctx.space.elem_hull(a))) {
                by_interior.insert(a);
            }
        }
        probe.check(by_interior == *min_closure.members(), || {
            wit(ctx, json!({
                "ideal": ideal.gens_label(),
                "min_space_strong_closure": min_closure.gens_label(),
            }))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------
// the registry table
// ---------------------------------------------------------------------

static REGISTRY: [TheoremEntry; 35] = [
    TheoremEntry {
        id: "T1",
        claim: "colon of the space kernel by any set is the kernel of the hull complement",
        hypotheses: &[],
        run: t1,
    },
    TheoremEntry {
        id: "T2",
        claim: "hull sets of finite sets form a bounded distributive lattice of sets",
        hypotheses: &[],
        run: t2,
    },
    TheoremEntry {
        id: "T3",
        claim: "all single-element class conditions agree",
        hypotheses: &[],
        run: t3,
    },
    TheoremEntry {
        id: "T4",
        claim: "all finite-subset class conditions agree",
        hypotheses: &[],
        run: t4,
    },
    TheoremEntry {
        id: "T5",
        claim: "interiors of hulls obey the annihilator formula",
        hypotheses: &["kY=0"],
        run: t5,
    },
    TheoremEntry {
        id: "T6",
        claim: "interior comparisons transfer to the full spectrum iff the kernel is the nilradical; kernel hulls sit inside double annihilators",
        hypotheses: &["kY=0"],
        run: t6,
    },
    TheoremEntry {
        id: "T7",
        claim: "hulls of finite sets over minimal primes are clopen",
        hypotheses: &[],
        run: t7,
    },
    TheoremEntry {
        id: "T8",
        claim: "interior conditions characterize the min-space class when the kernel is the nilradical",
        hypotheses: &["kY=Rad"],
        run: t8,
    },
    TheoremEntry {
        id: "T9",
        claim: "kernel-equals-nilradical is equivalent to min-space classes embedding",
        hypotheses: &[],
        run: t9,
    },
    TheoremEntry {
        id: "T10",
        claim: "every first-class ideal is semiprime",
        hypotheses: &[],
        run: t10,
    },
    TheoremEntry {
        id: "T11",
        claim: "minimal primes over a class ideal inherit the class",
        hypotheses: &["ideal-in-class"],
        run: t11,
    },
    TheoremEntry {
        id: "T12",
        claim: "class ideals are intersections of their minimal class primes; maximal proper class members are prime",
        hypotheses: &[],
        run: t12,
    },
    TheoremEntry {
        id: "T13",
        claim: "the hull-pair property matches colon realizability and the quotient annihilator condition",
        hypotheses: &[],
        run: t13,
    },
    TheoremEntry {
        id: "T14",
        claim: "the ideal-to-filter map is residuated with the preimage as residual",
        hypotheses: &["Max in Y"],
        run: t14,
    },
    TheoremEntry {
        id: "T15",
        claim: "the ideal-to-filter map is an order isomorphism on strong ideals",
        hypotheses: &[],
        run: t15,
    },
    TheoremEntry {
        id: "T16",
        claim: "prime and maximal strong ideals correspond to prime filters and ultrafilters",
        hypotheses: &["Max in Y"],
        run: t16,
    },
    TheoremEntry {
        id: "T17",
        claim: "proper filters separate from disjoint union-closed sets by prime filters",
        hypotheses: &[],
        run: t17,
    },
    TheoremEntry {
        id: "T18",
        claim: "minimal prime filters satisfy the exchange characterization",
        hypotheses: &[],
        run: t18,
    },
    TheoremEntry {
        id: "T19",
        claim: "minimal prime filters correspond to minimal primes over the preimage; every filter is their intersection",
        hypotheses: &[],
        run: t19,
    },
    TheoremEntry {
        id: "T20",
        claim: "filters transport along quotients with matching preimages",
        hypotheses: &["I inside kY"],
        run: t20,
    },
    TheoremEntry {
        id: "T21",
        claim: "filters transport along subring contractions with matching preimages",
        hypotheses: &[],
        run: t21,
    },
    TheoremEntry {
        id: "T22",
        claim: "colon by any ideal preserves each class",
        hypotheses: &[],
        run: t22,
    },
    TheoremEntry {
        id: "T23",
        claim: "minimal class members coincide across classes in semiprimitive Gelfand or weakly regular rings",
        hypotheses: &["kY=0", "gelfand-or-weakly-regular"],
        run: t23,
    },
    TheoremEntry {
        id: "T24",
        claim: "saturation by a disjoint multiplicative set gives a proper class ideal; zero components, quasi-regular parts, pure ideals and the socle are strong",
        hypotheses: &["A disjoint from I", "kY=0"],
        run: t24,
    },
    TheoremEntry {
        id: "T25",
        claim: "finitely generated strong ideals are hull-kernel closed; principal ideals do not separate the classes",
        hypotheses: &[],
        run: t25,
    },
    TheoremEntry {
        id: "T26",
        claim: "every-ideal-in-class is equivalent to a zero kernel with a regular ring",
        hypotheses: &["kY=0"],
        run: t26,
    },
    TheoremEntry {
        id: "T27",
        claim: "over a finite selector the three classes and their closures coincide",
        hypotheses: &[],
        run: t27,
    },
    TheoremEntry {
        id: "T28",
        claim: "a product of class ideals is in the class iff it equals the intersection",
        hypotheses: &[],
        run: t28,
    },
    TheoremEntry {
        id: "T29",
        claim: "class membership contracts along homomorphisms and transfers between spectrum subsets",
        hypotheses: &[],
        run: t29,
    },
    TheoremEntry {
        id: "T30",
        claim: "saturation images of class ideals stay in the class",
        hypotheses: &[],
        run: t30,
    },
    TheoremEntry {
        id: "T31",
        claim: "maximal class members exist in intervals and under primes are prime",
        hypotheses: &["kY=0"],
        run: t31,
    },
    TheoremEntry {
        id: "T32",
        claim: "the closure operators admit all their algebraic characterizations",
        hypotheses: &["hull-pair property", "kY=0", "Max in Y"],
        run: t32,
    },
    TheoremEntry {
        id: "T33",
        claim: "zero-divisor ideals embed in proper class ideals under property A",
        hypotheses: &["reduced", "kY=0", "property A"],
        run: t33,
    },
    TheoremEntry {
        id: "T34",
        claim: "sums of class ideals are governed by closure additivity",
        hypotheses: &["Max in Y"],
        run: t34,
    },
    TheoremEntry {
        id: "T35",
        claim: "the min-space strong closure has an interior characterization",
        hypotheses: &["kY=0"],
        run: t35,
    },
];

//! Ideal classification against hull-based conditions, the associated
//! closure operators, and searches for extremal members of each class.
//!
//! Three nested classes over a space `Y`:
//!
//! * `hy`: membership of `a` forces membership of everything in
//!   `kernel(hull({a}))`;
//! * `strong_hy`: the same with finite subsets in place of single
//!   elements;
//! * `y_hilbert`: the ideal equals `kernel(hull(I))`, i.e. it is an
//!   intersection of members of `Y`.
//!
//! Each class has many equivalent formulations; they are implemented as
//! named variants so their agreement can be checked mechanically.
//! Quantifiers over arbitrary subsets `S` of the ring are evaluated over
//! all singletons plus the canonical generator sets of all ideals, and
//! quantifiers over finite subsets `F` of an ideal over subsets of its
//! canonical generators plus the full member set. Both realizations are
//! sound because hulls and kernels factor through spans; the factoring is
//! itself a tested lemma.

use std::collections::BTreeMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{radical, span, Ideal};
use crate::lattice::{galois_filter_to_ideal, galois_ideal_to_filter, HYLattice};
use crate::ring::Elem;
use crate::space::{hull, hull_ideal, kernel, kernel_hull_mask, YSpace, YSet};

/// The three ideal classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealClass {
    Hy,
    Strong,
    Hilbert,
}

/// Named condition variants. The letters follow the two equivalence
/// bundles they come from plus the defining equation for the Hilbert
/// class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    HyA,
    HyB,
    HyC,
    HyD,
    HyE,
    HyF,
    HyG,
    HyH,
    HyK,
    StrongA,
    StrongB,
    StrongC,
    StrongD,
    StrongE,
    StrongF,
    StrongG,
    StrongK,
    StrongL,
    StrongM,
    StrongN,
    StrongO,
    HilbertDef,
}

impl Variant {
    pub fn id(&self) -> &'static str {
        match self {
            Variant::HyA => "hy_a",
            Variant::HyB => "hy_b",
            Variant::HyC => "hy_c",
            Variant::HyD => "hy_d",
            Variant::HyE => "hy_e",
            Variant::HyF => "hy_f",
            Variant::HyG => "hy_g",
            Variant::HyH => "hy_h",
            Variant::HyK => "hy_k",
            Variant::StrongA => "strong_a",
            Variant::StrongB => "strong_b",
            Variant::StrongC => "strong_c",
            Variant::StrongD => "strong_d",
            Variant::StrongE => "strong_e",
            Variant::StrongF => "strong_f",
            Variant::StrongG => "strong_g",
            Variant::StrongK => "strong_k",
            Variant::StrongL => "strong_l",
            Variant::StrongM => "strong_m",
            Variant::StrongN => "strong_n",
            Variant::StrongO => "strong_o",
            Variant::HilbertDef => "hilbert_def",
        }
    }

    pub fn class(&self) -> IdealClass {
        match self {
            Variant::HyA
            | Variant::HyB
            | Variant::HyC
            | Variant::HyD
            | Variant::HyE
            | Variant::HyF
            | Variant::HyG
            | Variant::HyH
            | Variant::HyK => IdealClass::Hy,
            Variant::HilbertDef => IdealClass::Hilbert,
            _ => IdealClass::Strong,
        }
    }

    pub fn hy_all() -> &'static [Variant] {
        &[
            Variant::HyA,
            Variant::HyB,
            Variant::HyC,
            Variant::HyD,
            Variant::HyE,
            Variant::HyF,
            Variant::HyG,
            Variant::HyH,
            Variant::HyK,
        ]
    }

    pub fn strong_all() -> &'static [Variant] {
        &[
            Variant::StrongA,
            Variant::StrongB,
            Variant::StrongC,
            Variant::StrongD,
            Variant::StrongE,
            Variant::StrongF,
            Variant::StrongG,
            Variant::StrongK,
            Variant::StrongL,
            Variant::StrongM,
            Variant::StrongN,
            Variant::StrongO,
        ]
    }

    pub fn all() -> Vec<Variant> {
        let mut v = Variant::hy_all().to_vec();
        v.extend_from_slice(Variant::strong_all());
        v.push(Variant::HilbertDef);
        v
    }
}

/// Classification of one ideal, with every requested variant recorded.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub ideal: String,
    pub semiprime: bool,
    pub hy: bool,
    pub strong_hy: bool,
    pub y_hilbert: bool,
    pub variants: BTreeMap<String, bool>,
}

/// The realized quantifier family for `S` ranging over subsets of the
/// ring: all singletons, then the canonical generator sets of all ideals
/// (the empty generator set of the zero ideal replaced by `{0}`). Hulls
/// and kernel-hull masks are precomputed once per space.
#[derive(Debug, Clone)]
pub struct SFamily {
    pub sets: Vec<Vec<Elem>>,
    pub hulls: Vec<YSet>,
    pub kh: Vec<FixedBitSet>,
}

impl SFamily {
    pub fn build(space: &YSpace, ideals: &[Ideal]) -> SFamily {
        let ring = space.ring();
        let mut sets: Vec<Vec<Elem>> = ring.elems().map(|a| vec![a]).collect();
        for ideal in ideals {
            if ideal.gens().is_empty() {
                sets.push(vec![ring.zero()]);
            } else {
                sets.push(ideal.gens().to_vec());
            }
        }
        let hulls: Vec<YSet> = sets.iter().map(|s| hull(space, s)).collect();
        let kh: Vec<FixedBitSet> = sets.iter().map(|s| kernel_hull_mask(space, s)).collect();
        SFamily { sets, hulls, kh }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// The realized quantifier family for finite subsets `F` of one ideal:
/// every subset of the canonical generators plus the full member list.
pub struct FFamily {
    pub sets: Vec<Vec<Elem>>,
    pub hulls: Vec<YSet>,
    pub kh: Vec<FixedBitSet>,
}

impl FFamily {
    pub fn build(space: &YSpace, ideal: &Ideal) -> FFamily {
        let gens = ideal.gens();
        let mut sets: Vec<Vec<Elem>> = Vec::with_capacity((1 << gens.len()) + 1);
        for mask in 0..(1usize << gens.len()) {
            let subset: Vec<Elem> = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &g)| g)
                .collect();
            sets.push(subset);
        }
        sets.push(ideal.iter().collect());
        let hulls: Vec<YSet> = sets.iter().map(|s| hull(space, s)).collect();
        let kh: Vec<FixedBitSet> = sets.iter().map(|s| kernel_hull_mask(space, s)).collect();
        FFamily { sets, hulls, kh }
    }
}

fn subset_of_ideal(members: &FixedBitSet, s: &[Elem]) -> bool {
    s.iter().all(|&a| members.contains(a))
}

/// Evaluate one variant on one ideal.
pub fn eval_variant(
    space: &YSpace,
    family: &SFamily,
    ideal: &Ideal,
    variant: Variant,
) -> bool {
    let ring = space.ring();
    let members = ideal.members();
    match variant {
        Variant::HyA => ideal.iter().all(|a| {
            let ha = space.elem_hull(a);
            (0..family.len()).all(|s| {
                !ha.is_subset(&family.hulls[s]) || subset_of_ideal(members, &family.sets[s])
            })
        }),
        Variant::HyB => ideal.iter().all(|a| {
            let ha = space.elem_hull(a);
            (0..family.len()).all(|s| {
                *ha != family.hulls[s] || subset_of_ideal(members, &family.sets[s])
            })
        }),
        Variant::HyC => ideal.iter().all(|a| {
            let ha = space.elem_hull(a);
            ring.elems().all(|b| *ha != *space.elem_hull(b) || members.contains(b))
        }),
        Variant::HyD => ideal.iter().all(|a| {
            let ha = space.elem_hull(a);
            ring.elems().all(|b| !ha.is_subset(space.elem_hull(b)) || members.contains(b))
        }),
        Variant::HyE => ideal.iter().all(|a| space.elem_kh(a).is_subset(members)),
        Variant::HyF => ideal.iter().all(|a| {
            let kha = space.elem_kh(a);
            (0..family.len()).all(|s| {
                !family.kh[s].is_subset(kha) || subset_of_ideal(members, &family.sets[s])
            })
        }),
        Variant::HyG => ideal.iter().all(|a| {
            let kha = space.elem_kh(a);
            (0..family.len()).all(|s| {
                family.kh[s] != *kha || subset_of_ideal(members, &family.sets[s])
            })
        }),
        Variant::HyH => ideal.iter().all(|a| {
            let kha = space.elem_kh(a);
            ring.elems().all(|b| *space.elem_kh(b) != *kha || members.contains(b))
        }),
        Variant::HyK => ideal.iter().all(|a| {
            let kha = space.elem_kh(a);
            ring.elems().all(|b| !space.elem_kh(b).is_subset(kha) || members.contains(b))
        }),
        Variant::StrongA => {
            let ff = FFamily::build(space, ideal);
            ff.hulls.iter().all(|hf| {
                (0..family.len()).all(|s| {
                    *hf != family.hulls[s] || subset_of_ideal(members, &family.sets[s])
                })
            })
        }
        Variant::StrongB => {
            let ff = FFamily::build(space, ideal);
            ff.hulls.iter().all(|hf| {
                (0..family.len()).all(|s| {
                    *hf != family.hulls[s] || subset_of_ideal(members, &family.sets[s])
                })
            })
        }
        Variant::StrongC => {
            let ff = FFamily::build(space, ideal);
            ff.hulls.iter().all(|hf| {
                (0..family.len()).all(|s| {
                    !hf.is_subset(&family.hulls[s]) || subset_of_ideal(members, &family.sets[s])
                })
            })
        }
        Variant::StrongD => {
            let ff = FFamily::build(space, ideal);
            ring.elems().all(|a| {
                let ha = space.elem_hull(a);
                !ff.hulls.iter().any(|hf| hf == ha) || members.contains(a)
            })
        }
        Variant::StrongE => {
            let ff = FFamily::build(space, ideal);
            (0..family.len()).all(|s| {
                !ff.hulls.iter().any(|hf| *hf == family.hulls[s])
                    || subset_of_ideal(members, &family.sets[s])
            })
        }
        Variant::StrongF => {
            let ff = FFamily::build(space, ideal);
            ff.hulls.iter().all(|hf| {
                ring.elems().all(|a| *hf != *space.elem_hull(a) || members.contains(a))
            })
        }
        Variant::StrongG => {
            let ff = FFamily::build(space, ideal);
            ff.hulls.iter().all(|hf| {
                ring.elems().all(|a| !hf.is_subset(space.elem_hull(a)) || members.contains(a))
            })
        }
        Variant::StrongK => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| kh.is_subset(members))
        }
        Variant::StrongL => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| {
                ring.elems().all(|a| *space.elem_kh(a) != *kh || members.contains(a))
            })
        }
        Variant::StrongM => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| {
                ring.elems().all(|a| !space.elem_kh(a).is_subset(kh) || members.contains(a))
            })
        }
        Variant::StrongN => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| {
                (0..family.len()).all(|s| {
                    family.kh[s] != *kh || subset_of_ideal(members, &family.sets[s])
                })
            })
        }
        Variant::StrongO => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| {
                (0..family.len()).all(|s| {
                    !family.kh[s].is_subset(kh) || subset_of_ideal(members, &family.sets[s])
                })
            })
        }
        Variant::HilbertDef => kernel_hull_mask(space, ideal.gens()) == *ideal.members(),
    }
}

/// Default membership test for a class, using the cheapest condition:
/// the single-element kernel-hull condition for `hy`, the finite-subset
/// kernel-hull condition for `strong_hy`, and the defining equation for
/// `y_hilbert`.
pub fn in_class(space: &YSpace, ideal: &Ideal, class: IdealClass) -> bool {
    match class {
        IdealClass::Hy => ideal.iter().all(|a| space.elem_kh(a).is_subset(ideal.members())),
        IdealClass::Strong => {
            let ff = FFamily::build(space, ideal);
            ff.kh.iter().all(|kh| kh.is_subset(ideal.members()))
        }
        IdealClass::Hilbert => kernel_hull_mask(space, ideal.gens()) == *ideal.members(),
    }
}

/// Classify one ideal; `variants` beyond the defaults are opt-in.
pub fn classify_ideal(
    space: &YSpace,
    family: &SFamily,
    ideal: &Ideal,
    variants: &[Variant],
) -> Result<ClassReport> {
    if !Arc::ptr_eq(ideal.ring(), space.ring()) {
        return Err(Error::RingMismatch);
    }
    let semiprime = radical(ideal) == *ideal;
    let hy = in_class(space, ideal, IdealClass::Hy);
    let strong_hy = in_class(space, ideal, IdealClass::Strong);
    let y_hilbert = in_class(space, ideal, IdealClass::Hilbert);
    let mut map = BTreeMap::new();
    for &v in variants {
        map.insert(v.id().to_string(), eval_variant(space, family, ideal, v));
    }
    Ok(ClassReport {
        ideal: ideal.gens_label(),
        semiprime,
        hy,
        strong_hy,
        y_hilbert,
        variants: map,
    })
}

/// Smallest `hy`-class ideal containing `I`, as the finite fixpoint of
/// summing single-element kernel hulls.
pub fn closure_hy(space: &YSpace, ideal: &Ideal) -> Ideal {
    let ring = space.ring();
    let mut current = ideal.clone();
    loop {
        let mut gens: Vec<Elem> = current.gens().to_vec();
        let mut mask = current.members().clone();
        for a in current.iter() {
            mask.union_with(space.elem_kh(a));
        }
        if mask == *current.members() {
            return current;
        }
        gens.extend(mask.ones());
        current = span(ring, &gens).expect("valid elements");
    }
}

/// Smallest `strong_hy`-class ideal containing `I`, computed two
/// independent ways: through the filter machinery on the hull lattice and
/// directly as kernel-of-hull. The two must agree, and for a finite space
/// they must also agree with the `hy` closure.
pub fn closure_strong(space: &YSpace, lattice: &HYLattice, ideal: &Ideal) -> Result<Ideal> {
    let via_filter = {
        let filter = galois_ideal_to_filter(lattice, ideal)?;
        galois_filter_to_ideal(lattice, &filter)?
    };
    let via_kernel_hull = kernel(space, &hull_ideal(space, ideal));
    if via_filter != via_kernel_hull {
        return Err(Error::InternalDisagreement(format!(
            "strong closure of {}: filter route {} vs kernel-hull route {}",
            ideal.gens_label(),
            via_filter.gens_label(),
            via_kernel_hull.gens_label()
        )));
    }
    let via_hy = closure_hy(space, ideal);
    if via_hy != via_kernel_hull {
        return Err(Error::InternalDisagreement(format!(
            "closures of {} differ on a finite space: {} vs {}",
            ideal.gens_label(),
            via_hy.gens_label(),
            via_kernel_hull.gens_label()
        )));
    }
    Ok(via_kernel_hull)
}

/// `kernel(hull(I))`, the smallest intersection of members of `Y`
/// containing `I`.
pub fn kernel_hull(space: &YSpace, ideal: &Ideal) -> Ideal {
    kernel(space, &hull_ideal(space, ideal))
}

/// What to search for in `extremal_search`.
#[derive(Debug, Clone)]
pub enum ExtremalKind {
    /// Maximal members of the class that are proper and lie in `[lo, hi]`.
    MaxlInInterval { lo: Ideal, hi: Ideal },
    /// Maximal proper members of the class.
    MaximalProper,
    /// Nonzero members of the class containing no class member except 0;
    /// requires `k(Y) = 0`.
    MinimalNonzero,
}

/// Exhaustive extremal search over the precomputed ideal list.
pub fn extremal_search(
    space: &YSpace,
    ideals: &[Ideal],
    kind: &ExtremalKind,
    class: IdealClass,
) -> Result<Vec<Ideal>> {
    let in_cls: Vec<bool> = ideals.iter().map(|i| in_class(space, i, class)).collect();
    let pool: Vec<&Ideal> = match kind {
        ExtremalKind::MaxlInInterval { lo, hi } => {
            if !in_class(space, lo, class) || lo.is_whole() {
                return Err(Error::Precondition(
                    "interval base must be a proper ideal of the class".into(),
                ));
            }
            if !lo.is_subset(hi) {
                return Err(Error::Precondition("interval base exceeds its top".into()));
            }
            ideals
                .iter()
                .zip(&in_cls)
                .filter(|(i, &c)| c && i.is_proper() && lo.is_subset(i) && i.is_subset(hi))
                .map(|(i, _)| i)
                .collect()
        }
        ExtremalKind::MaximalProper => ideals
            .iter()
            .zip(&in_cls)
            .filter(|(i, &c)| c && i.is_proper())
            .map(|(i, _)| i)
            .collect(),
        ExtremalKind::MinimalNonzero => {
            if !space.ky().is_zero() {
                return Err(Error::Precondition(
                    "minimal-class search requires k(Y) = 0".into(),
                ));
            }
            ideals
                .iter()
                .zip(&in_cls)
                .filter(|(i, &c)| c && !i.is_zero())
                .map(|(i, _)| i)
                .collect()
        }
    };
    let extremal: Vec<Ideal> = match kind {
        ExtremalKind::MinimalNonzero => pool
            .iter()
            .filter(|i| pool.iter().all(|j| j == *i || !j.is_subset(i)))
            .map(|i| (*i).clone())
            .collect(),
        _ => pool
            .iter()
            .filter(|i| pool.iter().all(|j| j == *i || !i.is_subset(j)))
            .map(|i| (*i).clone())
            .collect(),
    };
    Ok(extremal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::ideal::{all_ideals, zero_ideal};
    use crate::lattice::build_lattice;
    use crate::ring::{build_ring, Ring, RingSpec};
    use crate::space::{build_space, YSelector};
    use crate::spectrum::spectrum;

    struct Env {
        ring: Arc<Ring>,
        ideals: Vec<Ideal>,
        space: Arc<YSpace>,
        family: SFamily,
        lattice: HYLattice,
    }

    fn env(spec: &RingSpec, sel: YSelector) -> Env {
        let caps = Caps::default();
        let ring = build_ring(spec, &caps).unwrap();
        let ideals = all_ideals(&ring, &caps).unwrap();
        let s = spectrum(&ring, &ideals);
        let space = build_space(&ring, &s, &sel).unwrap();
        let family = SFamily::build(&space, &ideals);
        let lattice = build_lattice(&space, &ideals).unwrap();
        Env { ring, ideals, space, family, lattice }
    }

    #[test]
    fn classify_examples_in_z12() {
        let e = env(&RingSpec::Modular { n: 12 }, YSelector::Spec);
        let i4 = span(&e.ring, &[4]).unwrap();
        let r = classify_ideal(&e.space, &e.family, &i4, &Variant::all()).unwrap();
        assert!(!r.semiprime && !r.hy && !r.strong_hy && !r.y_hilbert);
        assert!(r.variants.values().all(|&v| !v));

        let i6 = span(&e.ring, &[6]).unwrap();
        let r = classify_ideal(&e.space, &e.family, &i6, &Variant::all()).unwrap();
        assert!(r.semiprime && r.hy && r.strong_hy && r.y_hilbert);
        assert!(r.variants.values().all(|&v| v));

        let z = zero_ideal(&e.ring);
        let r = classify_ideal(&e.space, &e.family, &z, &[]).unwrap();
        assert!(!r.semiprime && !r.hy);
    }

    #[test]
    fn closures_in_z12() {
        let e = env(&RingSpec::Modular { n: 12 }, YSelector::Spec);
        let i4 = span(&e.ring, &[4]).unwrap();
        assert_eq!(closure_hy(&e.space, &i4).gens_label(), "<2>");
        let z = zero_ideal(&e.ring);
        assert_eq!(closure_hy(&e.space, &z).gens_label(), "<6>");
        let i6 = span(&e.ring, &[6]).unwrap();
        assert_eq!(closure_hy(&e.space, &i6), i6);

        assert_eq!(closure_strong(&e.space, &e.lattice, &z).unwrap().gens_label(), "<6>");
        assert_eq!(closure_strong(&e.space, &e.lattice, &i4).unwrap().gens_label(), "<2>");
        let ky = e.space.ky().clone();
        assert_eq!(closure_strong(&e.space, &e.lattice, &ky).unwrap(), ky);
    }

    #[test]
    fn extremal_searches() {
        let e = env(&RingSpec::Modular { n: 12 }, YSelector::Spec);
        let maxl = extremal_search(&e.space, &e.ideals, &ExtremalKind::MaximalProper, IdealClass::Strong)
            .unwrap();
        let labels: Vec<String> = maxl.iter().map(|i| i.gens_label()).collect();
        assert_eq!(labels, vec!["<3>", "<2>"]);

        let i6 = span(&e.ring, &[6]).unwrap();
        let i2 = span(&e.ring, &[2]).unwrap();
        let maxl = extremal_search(
            &e.space,
            &e.ideals,
            &ExtremalKind::MaxlInInterval { lo: i6, hi: i2.clone() },
            IdealClass::Hy,
        )
        .unwrap();
        assert_eq!(maxl, vec![i2]);

        let e6 = env(&RingSpec::Modular { n: 6 }, YSelector::Spec);
        let minl =
            extremal_search(&e6.space, &e6.ideals, &ExtremalKind::MinimalNonzero, IdealClass::Hy)
                .unwrap();
        let labels: Vec<String> = minl.iter().map(|i| i.gens_label()).collect();
        assert_eq!(labels, vec!["<3>", "<2>"]);

        // k(Y) != 0 must be rejected for the minimal search
        let e4 = env(&RingSpec::Modular { n: 4 }, YSelector::Spec);
        assert!(extremal_search(&e4.space, &e4.ideals, &ExtremalKind::MinimalNonzero, IdealClass::Hy)
            .is_err());
    }

    #[test]
    fn variant_agreement_on_a_sample() {
        for spec in [RingSpec::Modular { n: 12 }, RingSpec::Modular { n: 30 }] {
            let e = env(&spec, YSelector::Spec);
            for ideal in &e.ideals {
                let hy: Vec<bool> = Variant::hy_all()
                    .iter()
                    .map(|&v| eval_variant(&e.space, &e.family, ideal, v))
                    .collect();
                assert!(
                    hy.iter().all(|&b| b == hy[0]),
                    "{spec}, {}: {hy:?}",
                    ideal.gens_label()
                );
                let strong: Vec<bool> = Variant::strong_all()
                    .iter()
                    .map(|&v| eval_variant(&e.space, &e.family, ideal, v))
                    .collect();
                assert!(strong.iter().all(|&b| b == strong[0]));
            }
        }
    }
}

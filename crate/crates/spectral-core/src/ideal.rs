//! Ideals of a finite ring and the operators built from them: span, sum,
//! product, intersection, colon, annihilator, radical, saturation, the
//! quasi-regular part, zero components, the socle, and ideal flags.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::{classify_element, Elem, Ring};

/// An ideal, stored as a member bit vector plus a canonical generating
/// list (greedy over ascending element order, pruned to an irredundant set).
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    members: FixedBitSet,
    gens: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Ideal {}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then by the member list lexicographically.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.gens.iter().map(|&g| self.ring.elem_label(g)).collect();
        let members: Vec<&str> = self.members.ones().map(|a| self.ring.elem_label(a)).collect();
        write!(f, "<{}> = {{{}}}", gens.join(","), members.join(","))
    }
}

impl Ideal {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn size(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size() == self.ring.size()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Short display used in reports: `<g1,g2>`, `<0>` for the zero ideal,
    /// and `<1>` for the whole ring.
    pub fn gens_label(&self) -> String {
        if self.gens.is_empty() {
            return format!("<{}>", self.ring.elem_label(self.ring.zero()));
        }
        let gens: Vec<&str> = self.gens.iter().map(|&g| self.ring.elem_label(g)).collect();
        format!("<{}>", gens.join(","))
    }

    /// Rebuild an ideal from a member mask. Debug builds verify the mask is
    /// actually an ideal.
    pub(crate) fn from_members(ring: Arc<Ring>, members: FixedBitSet) -> Ideal {
        debug_assert!(is_ideal_mask(&ring, &members), "mask is not an ideal");
        let gens = canonical_gens(&ring, &members);
        Ideal { ring, members, gens }
    }

    pub(crate) fn member_mask_from(ring: &Ring, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(ring.size());
        for e in elems {
            mask.insert(e);
        }
        mask
    }
}

fn is_ideal_mask(ring: &Ring, mask: &FixedBitSet) -> bool {
    if !mask.contains(ring.zero()) {
        return false;
    }
    for a in mask.ones() {
        for b in mask.ones() {
            if !mask.contains(ring.add(a, b)) {
                return false;
            }
        }
        for r in ring.elems() {
            if !mask.contains(ring.mul(r, a)) {
                return false;
            }
        }
    }
    true
}

/// Greedy canonical generators: scan elements in ascending order, adjoin
/// any element not yet spanned, then prune generators that became
/// redundant. Deterministic and irredundant.
fn canonical_gens(ring: &Arc<Ring>, members: &FixedBitSet) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut spanned = span_mask(ring, &[]);
    for a in members.ones() {
        if !spanned.contains(a) {
            gens.push(a);
            spanned = span_mask(ring, &gens);
            if spanned == *members {
                break;
            }
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut trimmed = gens.clone();
        trimmed.remove(i);
        if span_mask(ring, &trimmed) == *members {
            gens = trimmed;
        } else {
            i += 1;
        }
    }
    gens
}

fn span_mask(ring: &Ring, gens: &[Elem]) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(ring.size());
    let mut queue: Vec<Elem> = Vec::new();
    let push = |x: Elem, mask: &mut FixedBitSet, queue: &mut Vec<Elem>| {
        if !mask.contains(x) {
            mask.insert(x);
            queue.push(x);
        }
    };
    push(ring.zero(), &mut mask, &mut queue);
    for &g in gens {
        push(g, &mut mask, &mut queue);
    }
    while let Some(x) = queue.pop() {
        for r in ring.elems() {
            push(ring.mul(r, x), &mut mask, &mut queue);
        }
        let current: Vec<Elem> = mask.ones().collect();
        for y in current {
            push(ring.add(x, y), &mut mask, &mut queue);
        }
    }
    mask
}

/// Smallest ideal containing `gens`.
pub fn span(ring: &Arc<Ring>, gens: &[Elem]) -> Result<Ideal> {
    for &g in gens {
        ring.check_index(g)?;
    }
    let members = span_mask(ring, gens);
    Ok(Ideal::from_members(Arc::clone(ring), members))
}

pub fn zero_ideal(ring: &Arc<Ring>) -> Ideal {
    span(ring, &[]).expect("zero ideal")
}

pub fn whole_ideal(ring: &Arc<Ring>) -> Ideal {
    span(ring, &[ring.one()]).expect("unit ideal")
}

/// Every ideal of the ring exactly once, sorted by (size, members).
/// Computed by closing the set of principal ideals under pairwise sums.
pub fn all_ideals(ring: &Arc<Ring>, caps: &Caps) -> Result<Vec<Ideal>> {
    let mut masks: Vec<FixedBitSet> = Vec::new();
    for a in ring.elems() {
        let m = span_mask(ring, &[a]);
        if !masks.contains(&m) {
            masks.push(m);
        }
    }
    let mut frontier: Vec<usize> = (0..masks.len()).collect();
    while let Some(i) = frontier.pop() {
        let base = masks[i].clone();
        for j in 0..masks.len() {
            let mut union: Vec<Elem> = base.ones().collect();
            union.extend(masks[j].ones());
            let sum = span_mask(ring, &union);
            if !masks.contains(&sum) {
                masks.push(sum);
                frontier.push(masks.len() - 1);
                if masks.len() > caps.ideal_enum {
                    return Err(Error::IdealCapExceeded { cap: caps.ideal_enum });
                }
            }
        }
    }
    let mut ideals: Vec<Ideal> = masks
        .into_iter()
        .map(|m| Ideal::from_members(Arc::clone(ring), m))
        .collect();
    ideals.sort();
    Ok(ideals)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
    Intersect,
}

/// Sum, product, or intersection of two ideals of the same ring.
pub fn combine(op: CombineOp, lhs: &Ideal, rhs: &Ideal) -> Result<Ideal> {
    if !Arc::ptr_eq(&lhs.ring, &rhs.ring) {
        return Err(Error::RingMismatch);
    }
    let ring = &lhs.ring;
    match op {
        CombineOp::Sum => {
            let mut gens: Vec<Elem> = lhs.gens.clone();
            gens.extend_from_slice(&rhs.gens);
            span(ring, &gens)
        }
        CombineOp::Product => {
            let mut gens: Vec<Elem> = Vec::new();
            for a in lhs.iter() {
                for b in rhs.iter() {
                    gens.push(ring.mul(a, b));
                }
            }
            span(ring, &gens)
        }
        CombineOp::Intersect => {
            let mut members = lhs.members.clone();
            members.intersect_with(&rhs.members);
            Ok(Ideal::from_members(Arc::clone(ring), members))
        }
    }
}

/// Intersection of an arbitrary family; the whole ring when empty.
pub fn intersect_all<'a>(ring: &Arc<Ring>, ideals: impl IntoIterator<Item = &'a Ideal>) -> Ideal {
    let mut members = whole_ideal(ring).members;
    for i in ideals {
        members.intersect_with(&i.members);
    }
    Ideal::from_members(Arc::clone(ring), members)
}

/// `(I : S) = {x : xs in I for all s in S}`. `S` must be nonempty; use the
/// singleton `{0}` for span-equivalent questions about the empty set.
pub fn colon(ideal: &Ideal, divisors: &[Elem]) -> Result<Ideal> {
    if divisors.is_empty() {
        return Err(Error::EmptyColonSet);
    }
    let ring = &ideal.ring;
    for &s in divisors {
        ring.check_index(s)?;
    }
    let mut members = FixedBitSet::with_capacity(ring.size());
    for x in ring.elems() {
        if divisors.iter().all(|&s| ideal.contains(ring.mul(x, s))) {
            members.insert(x);
        }
    }
    Ok(Ideal::from_members(Arc::clone(ring), members))
}

/// `(I : J)` over the members of `J`.
pub fn colon_ideal(ideal: &Ideal, divisor: &Ideal) -> Result<Ideal> {
    if !Arc::ptr_eq(&ideal.ring, &divisor.ring) {
        return Err(Error::RingMismatch);
    }
    let divisors: Vec<Elem> = divisor.iter().collect();
    colon(ideal, &divisors)
}

/// `Ann(S) = (0 : S)`.
pub fn annihilator(ring: &Arc<Ring>, divisors: &[Elem]) -> Result<Ideal> {
    colon(&zero_ideal(ring), divisors)
}

/// `{a : a^k in I for some k <= size}`. Element powers cycle within the
/// carrier size, so that bound is exact.
pub fn radical(ideal: &Ideal) -> Ideal {
    let ring = &ideal.ring;
    let mut members = FixedBitSet::with_capacity(ring.size());
    for a in ring.elems() {
        let mut power = a;
        for _ in 0..ring.size() {
            if ideal.contains(power) {
                members.insert(a);
                break;
            }
            power = ring.mul(power, a);
        }
    }
    Ideal::from_members(Arc::clone(ring), members)
}

/// A multiplicatively closed subset containing 1. The constructor closes
/// its seed, so callers never hand-close.
#[derive(Debug, Clone)]
pub struct MultSet {
    ring: Arc<Ring>,
    members: FixedBitSet,
}

impl MultSet {
    pub fn closure(ring: &Arc<Ring>, seed: &[Elem]) -> Result<MultSet> {
        for &s in seed {
            ring.check_index(s)?;
        }
        let mut members = FixedBitSet::with_capacity(ring.size());
        let mut queue = vec![ring.one()];
        members.insert(ring.one());
        for &s in seed {
            if !members.contains(s) {
                members.insert(s);
                queue.push(s);
            }
        }
        while let Some(x) = queue.pop() {
            let current: Vec<Elem> = members.ones().collect();
            for y in current {
                let p = ring.mul(x, y);
                if !members.contains(p) {
                    members.insert(p);
                    queue.push(p);
                }
            }
        }
        Ok(MultSet { ring: Arc::clone(ring), members })
    }

    /// The complement of a prime ideal.
    pub fn complement_of(prime: &Ideal) -> Result<MultSet> {
        let ring = &prime.ring;
        if prime.contains(ring.one()) {
            return Err(Error::BadMultSet("complement of an improper ideal misses 1".into()));
        }
        let mut members = FixedBitSet::with_capacity(ring.size());
        for a in ring.elems() {
            if !prime.contains(a) {
                members.insert(a);
            }
        }
        let set = MultSet { ring: Arc::clone(ring), members };
        set.validate()?;
        Ok(set)
    }

    /// `1 + I`, already multiplicatively closed for any ideal `I`.
    pub fn one_plus(ideal: &Ideal) -> MultSet {
        let ring = &ideal.ring;
        let mut members = FixedBitSet::with_capacity(ring.size());
        for i in ideal.iter() {
            members.insert(ring.add(ring.one(), i));
        }
        let set = MultSet { ring: Arc::clone(ring), members };
        debug_assert!(set.validate().is_ok());
        set
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn validate(&self) -> Result<()> {
        if !self.members.contains(self.ring.one()) {
            return Err(Error::BadMultSet("1 is missing".into()));
        }
        for a in self.members.ones() {
            for b in self.members.ones() {
                if !self.members.contains(self.ring.mul(a, b)) {
                    return Err(Error::BadMultSet(format!("not closed at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    pub fn intersects(&self, ideal: &Ideal) -> bool {
        self.members.ones().any(|a| ideal.contains(a))
    }
}

/// Saturation `I_A = {r : ra in I for some a in A}`.
pub fn saturate(ideal: &Ideal, mult: &MultSet) -> Result<Ideal> {
    if !Arc::ptr_eq(&ideal.ring, &mult.ring) {
        return Err(Error::RingMismatch);
    }
    mult.validate()?;
    let ring = &ideal.ring;
    let mut members = FixedBitSet::with_capacity(ring.size());
    for r in ring.elems() {
        if mult.iter().any(|a| ideal.contains(ring.mul(r, a))) {
            members.insert(r);
        }
    }
    Ok(Ideal::from_members(Arc::clone(ring), members))
}

/// Quasi-regular part `m(I) = {a : a = ai for some i in I}`, computed as
/// the saturation of 0 by `1 + I`.
pub fn quasi_regular(ideal: &Ideal) -> Ideal {
    let mult = MultSet::one_plus(ideal);
    saturate(&zero_ideal(&ideal.ring), &mult).expect("one_plus sets are valid")
}

/// Zero component `O_P`, the saturation of 0 by the complement of the
/// prime `P`.
pub fn zero_component(prime: &Ideal) -> Result<Ideal> {
    let mult = MultSet::complement_of(prime)?;
    saturate(&zero_ideal(&prime.ring), &mult)
}

/// Sum of all minimal nonzero ideals; the zero ideal when there are none.
pub fn socle(ring: &Arc<Ring>, ideals: &[Ideal]) -> Ideal {
    let minimal: Vec<&Ideal> = ideals
        .iter()
        .filter(|i| {
            !i.is_zero()
                && ideals
                    .iter()
                    .all(|j| j.is_zero() || !j.is_subset(i) || j == *i)
        })
        .collect();
    let mut gens: Vec<Elem> = Vec::new();
    for i in &minimal {
        gens.extend(i.gens());
    }
    span(ring, &gens).expect("socle gens are valid")
}

/// Structural flags of a single ideal, relative to the full ideal list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub pure: bool,
    pub regular_ideal: bool,
    pub essential: bool,
    pub singular: bool,
    pub minimal_nonzero: bool,
}

/// Flags: pure (`I = m(I)`), regular (every element regular), singular
/// (every element zero or a zero divisor), essential (nonzero meet with
/// every nonzero ideal; the standard definition, adopted here because the
/// source literature uses the term without defining it), minimal nonzero.
pub fn ideal_flags(ideal: &Ideal, all: &[Ideal]) -> Result<IdealFlags> {
    let ring = &ideal.ring;
    let pure = quasi_regular(ideal) == *ideal;
    let mut regular_ideal = true;
    let mut singular = true;
    for a in ideal.iter() {
        let class = classify_element(ring, a)?;
        regular_ideal &= class.regular;
        singular &= a == ring.zero() || class.zero_divisor;
    }
    let essential = all
        .iter()
        .filter(|j| !j.is_zero())
        .all(|j| combine(CombineOp::Intersect, ideal, j).map(|m| !m.is_zero()).unwrap_or(false));
    let minimal_nonzero = !ideal.is_zero()
        && all
            .iter()
            .all(|j| j.is_zero() || !j.is_subset(ideal) || j == ideal);
    Ok(IdealFlags { pure, regular_ideal, essential, singular, minimal_nonzero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingSpec};

    fn zn(n: usize) -> Arc<Ring> {
        build_ring(&RingSpec::Modular { n }, &Caps::default()).unwrap()
    }

    fn members(i: &Ideal) -> Vec<usize> {
        i.iter().collect()
    }

    #[test]
    fn span_examples() {
        let r6 = zn(6);
        assert_eq!(members(&span(&r6, &[4]).unwrap()), vec![0, 2, 4]);

        let r12 = zn(12);
        assert_eq!(members(&span(&r12, &[]).unwrap()), vec![0]);
        // oracle fixed by the additive subgroup generated by {4, 6} in Z/12
        assert_eq!(members(&span(&r12, &[4, 6]).unwrap()), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn all_ideals_match_divisor_counts() {
        let caps = Caps::default();
        let r6 = zn(6);
        let ideals = all_ideals(&r6, &caps).unwrap();
        assert_eq!(ideals.len(), 4);

        let r12 = zn(12);
        let ideals = all_ideals(&r12, &caps).unwrap();
        assert_eq!(ideals.len(), 6);
        // sorted by (size, members): {0}, <6>, <4>, <3>, <2>, R
        let sizes: Vec<usize> = ideals.iter().map(|i| i.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);

        let gf4 = build_ring(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }, &caps).unwrap();
        assert_eq!(all_ideals(&gf4, &caps).unwrap().len(), 2);
    }

    #[test]
    fn combine_examples() {
        let r6 = zn(6);
        let i2 = span(&r6, &[2]).unwrap();
        let i3 = span(&r6, &[3]).unwrap();
        assert!(combine(CombineOp::Sum, &i2, &i3).unwrap().is_whole());
        assert!(combine(CombineOp::Product, &i2, &i3).unwrap().is_zero());

        let r12 = zn(12);
        let i2 = span(&r12, &[2]).unwrap();
        let i3 = span(&r12, &[3]).unwrap();
        let meet = combine(CombineOp::Intersect, &i2, &i3).unwrap();
        assert_eq!(members(&meet), vec![0, 6]);
    }

    #[test]
    fn colon_and_annihilator() {
        let r12 = zn(12);
        let i4 = span(&r12, &[4]).unwrap();
        assert_eq!(members(&colon(&i4, &[2]).unwrap()), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(members(&annihilator(&r12, &[4]).unwrap()), vec![0, 3, 6, 9]);
        let i5 = span(&r12, &[5]).unwrap();
        assert_eq!(colon(&i5, &[1]).unwrap(), i5);
        assert!(matches!(colon(&i4, &[]), Err(Error::EmptyColonSet)));
    }

    #[test]
    fn radical_examples() {
        let r12 = zn(12);
        assert_eq!(members(&radical(&span(&r12, &[4]).unwrap())), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(members(&radical(&zero_ideal(&r12))), vec![0, 6]);

        let gf4 = build_ring(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }, &Caps::default()).unwrap();
        assert!(radical(&zero_ideal(&gf4)).is_zero());
    }

    #[test]
    fn saturation_examples() {
        let r12 = zn(12);
        let powers_of_two = MultSet::closure(&r12, &[2]).unwrap();
        assert_eq!(powers_of_two.iter().collect::<Vec<_>>(), vec![1, 2, 4, 8]);
        let sat = saturate(&zero_ideal(&r12), &powers_of_two).unwrap();
        assert_eq!(members(&sat), vec![0, 3, 6, 9]);

        let r4 = zn(4);
        let i2 = span(&r4, &[2]).unwrap();
        assert!(quasi_regular(&i2).is_zero());

        let p2 = span(&r12, &[2]).unwrap();
        assert_eq!(members(&zero_component(&p2).unwrap()), vec![0, 4, 8]);
    }

    #[test]
    fn socle_examples() {
        let caps = Caps::default();
        let r12 = zn(12);
        let ideals = all_ideals(&r12, &caps).unwrap();
        assert_eq!(members(&socle(&r12, &ideals)), vec![0, 2, 4, 6, 8, 10]);

        let r6 = zn(6);
        let ideals = all_ideals(&r6, &caps).unwrap();
        assert!(socle(&r6, &ideals).is_whole());

        let gf4 = build_ring(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }, &caps).unwrap();
        let ideals = all_ideals(&gf4, &caps).unwrap();
        assert!(socle(&gf4, &ideals).is_whole());
    }

    #[test]
    fn flags_examples() {
        let caps = Caps::default();
        let r6 = zn(6);
        let ideals = all_ideals(&r6, &caps).unwrap();
        let i2 = span(&r6, &[2]).unwrap();
        let flags = ideal_flags(&i2, &ideals).unwrap();
        assert!(flags.pure && flags.regular_ideal && flags.singular);
        assert!(!flags.essential);

        let r4 = zn(4);
        let ideals = all_ideals(&r4, &caps).unwrap();
        let i2 = span(&r4, &[2]).unwrap();
        let flags = ideal_flags(&i2, &ideals).unwrap();
        assert!(!flags.pure);
        assert!(flags.singular && flags.essential && flags.minimal_nonzero);

        let whole = whole_ideal(&r4);
        assert!(ideal_flags(&whole, &ideals).unwrap().pure);
    }

    #[test]
    fn display_format() {
        let r12 = zn(12);
        let i2 = span(&r12, &[2]).unwrap();
        assert_eq!(i2.to_string(), "<2> = {0,2,4,6,8,10}");
        assert_eq!(i2.gens_label(), "<2>");
        assert_eq!(zero_ideal(&r12).gens_label(), "<0>");
    }
}

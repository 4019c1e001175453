//! The finite distributive lattice of hull sets `{hull(F) : F finite}`,
//! its filters, the Galois pair between ideals and filters, and the
//! transport of filters along quotient maps and subring inclusions.
//!
//! Lattice elements are hulls of ideals (hulls factor through spans, so
//! that exhausts the hulls of finite sets). In a finite lattice every
//! filter is principal: the meet of all members is itself a member and
//! generates the filter as an up-set. Enumeration leans on that fact and
//! validates each candidate against the filter axioms.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, Ideal};
use crate::ring::{quotient_ring, Elem, Hom, Ring};
use crate::space::{hull, hull_ideal, YSelector, YSpace, YSet};

/// One lattice element: a hull set together with a witness generator set
/// that realizes it.
#[derive(Debug, Clone)]
pub struct LatticeElt {
    pub set: YSet,
    pub witness: Vec<Elem>,
}

/// The lattice itself. Meet is intersection, join is union; both stay
/// inside the element list by construction (validated at build).
#[derive(Debug, Clone)]
pub struct HYLattice {
    space: Arc<YSpace>,
    elements: Vec<LatticeElt>,
}

/// A filter, stored as the set of lattice element indices it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HYFilter {
    pub members: FixedBitSet,
}

impl HYFilter {
    pub fn contains(&self, idx: usize) -> bool {
        self.members.contains(idx)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_subset(&self, other: &HYFilter) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// An enumerated filter with its kind flags.
#[derive(Debug, Clone)]
pub struct FilterInfo {
    pub filter: HYFilter,
    pub proper: bool,
    pub prime: bool,
    pub ultra: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterKind {
    All,
    Proper,
    Prime,
    Ultra,
}

impl HYLattice {
    pub fn space(&self) -> &Arc<YSpace> {
        &self.space
    }

    pub fn elements(&self) -> &[LatticeElt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, set: &YSet) -> Option<usize> {
        self.elements.iter().position(|e| e.set == *set)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.elements[i].set.is_subset(&self.elements[j].set)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let set = self.elements[i].set.intersect(&self.elements[j].set);
        self.index_of(&set).expect("lattice is meet-closed")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let set = self.elements[i].set.union(&self.elements[j].set);
        self.index_of(&set).expect("lattice is join-closed")
    }

    /// Index of the empty hull (always present as the hull of the whole
    /// ring).
    pub fn bottom(&self) -> usize {
        self.elements.iter().position(|e| e.set.is_empty()).expect("hull of 1 is empty")
    }

    /// Index of the full hull `Y` (always present as the hull of 0).
    pub fn top(&self) -> usize {
        let full = YSet::full(self.space.len());
        self.index_of(&full).expect("hull of 0 is Y")
    }

    /// Principal filter `{e : e >= x}`.
    pub fn up_set(&self, x: usize) -> HYFilter {
        let mut members = FixedBitSet::with_capacity(self.len());
        for (i, e) in self.elements.iter().enumerate() {
            if self.elements[x].set.is_subset(&e.set) {
                members.insert(i);
            }
        }
        HYFilter { members }
    }

    /// Filter axioms: nonempty, upward closed, meet closed.
    pub fn is_filter(&self, f: &HYFilter) -> bool {
        if f.is_empty() {
            return false;
        }
        for i in f.iter() {
            for j in 0..self.len() {
                if self.le(i, j) && !f.contains(j) {
                    return false;
                }
            }
            for j in f.iter() {
                if !f.contains(self.meet(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_proper_filter(&self, f: &HYFilter) -> bool {
        !f.contains(self.bottom())
    }

    /// Prime: proper, and membership of a join forces membership of a
    /// part.
    pub fn is_prime_filter(&self, f: &HYFilter) -> bool {
        if !self.is_proper_filter(f) {
            return false;
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                if f.contains(self.join(i, j)) && !f.contains(i) && !f.contains(j) {
                    return false;
                }
            }
        }
        true
    }

    /// Render a filter as its sorted member hulls with kind tags.
    pub fn filter_label(&self, info: &FilterInfo) -> String {
        let sets: Vec<String> =
            info.filter.iter().map(|i| self.space.set_label(&self.elements[i].set)).collect();
        let mut tags = String::new();
        if info.prime {
            tags.push_str(" [prime]");
        }
        if info.ultra {
            tags.push_str(" [ultra]");
        }
        format!("{{{}}}{}", sets.join(", "), tags)
    }
}

/// Build the lattice for a space from the precomputed ideal list.
pub fn build_lattice(space: &Arc<YSpace>, ideals: &[Ideal]) -> Result<HYLattice> {
    let mut elements: Vec<LatticeElt> = Vec::new();
    for ideal in ideals {
        let set = hull_ideal(space, ideal);
        if !elements.iter().any(|e| e.set == set) {
            elements.push(LatticeElt { set, witness: ideal.gens().to_vec() });
        }
    }
    elements.sort_by(|a, b| {
        let ka = (a.set.len(), a.set.iter().collect::<Vec<_>>());
        let kb = (b.set.len(), b.set.iter().collect::<Vec<_>>());
        ka.cmp(&kb)
    });
    let lattice = HYLattice { space: Arc::clone(space), elements };
    for i in 0..lattice.len() {
        for j in 0..lattice.len() {
            let meet = lattice.elements[i].set.intersect(&lattice.elements[j].set);
            let join = lattice.elements[i].set.union(&lattice.elements[j].set);
            if lattice.index_of(&meet).is_none() || lattice.index_of(&join).is_none() {
                return Err(Error::InternalDisagreement(
                    "hull lattice is not closed under meet/join".into(),
                ));
            }
        }
    }
    Ok(lattice)
}

/// Enumerate filters. Every filter of a finite lattice is a principal
/// up-set, so the enumeration walks `up_set(x)` over all elements and
/// filters by kind; each candidate is validated against the axioms.
pub fn filters(lattice: &HYLattice, kind: FilterKind, caps: &Caps) -> Result<Vec<FilterInfo>> {
    if kind == FilterKind::All && lattice.len() > caps.lattice_all {
        return Err(Error::FilterCapExceeded { size: lattice.len(), cap: caps.lattice_all });
    }
    if lattice.len() > caps.check_filters {
        return Err(Error::FilterCapExceeded { size: lattice.len(), cap: caps.check_filters });
    }
    let mut all: Vec<FilterInfo> = (0..lattice.len())
        .map(|x| {
            let filter = lattice.up_set(x);
            debug_assert!(lattice.is_filter(&filter));
            let proper = lattice.is_proper_filter(&filter);
            let prime = lattice.is_prime_filter(&filter);
            FilterInfo { filter, proper, prime, ultra: false }
        })
        .collect();
    // ultra = maximal proper, by pairwise inclusion over the proper ones
    let proper: Vec<FixedBitSet> =
        all.iter().filter(|f| f.proper).map(|f| f.filter.members.clone()).collect();
    for info in all.iter_mut() {
        info.ultra = info.proper
            && proper
                .iter()
                .all(|other| *other == info.filter.members || !info.filter.members.is_subset(other));
    }
    all.sort_by(|a, b| {
        let ka = (a.filter.len(), a.filter.iter().collect::<Vec<_>>());
        let kb = (b.filter.len(), b.filter.iter().collect::<Vec<_>>());
        ka.cmp(&kb)
    });
    Ok(all
        .into_iter()
        .filter(|f| match kind {
            FilterKind::All => true,
            FilterKind::Proper => f.proper,
            FilterKind::Prime => f.prime,
            FilterKind::Ultra => f.ultra,
        })
        .collect())
}

/// The filter generated by the hulls of the generator subsets of an
/// ideal: its upward closure in the lattice. Validated before return.
pub fn galois_ideal_to_filter(lattice: &HYLattice, ideal: &Ideal) -> Result<HYFilter> {
    let space = lattice.space();
    if !Arc::ptr_eq(ideal.ring(), space.ring()) {
        return Err(Error::RingMismatch);
    }
    let gens = ideal.gens();
    let mut seed: Vec<YSet> = Vec::with_capacity(1 << gens.len());
    for mask in 0..(1usize << gens.len()) {
        let subset: Vec<Elem> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &g)| g)
            .collect();
        seed.push(hull(space, &subset));
    }
    let mut members = FixedBitSet::with_capacity(lattice.len());
    for (i, e) in lattice.elements().iter().enumerate() {
        if seed.iter().any(|s| s.is_subset(&e.set)) {
            members.insert(i);
        }
    }
    let filter = HYFilter { members };
    if !lattice.is_filter(&filter) {
        return Err(Error::InternalDisagreement(
            "generated up-set fails the filter axioms".into(),
        ));
    }
    Ok(filter)
}

/// `{a : hull({a}) is in the filter}`, verified to be an ideal.
pub fn galois_filter_to_ideal(lattice: &HYLattice, filter: &HYFilter) -> Result<Ideal> {
    let space = lattice.space();
    let ring = space.ring();
    let mut members = FixedBitSet::with_capacity(ring.size());
    for a in ring.elems() {
        let idx = lattice
            .index_of(space.elem_hull(a))
            .ok_or_else(|| Error::InternalDisagreement("element hull missing from lattice".into()))?;
        if filter.contains(idx) {
            members.insert(a);
        }
    }
    // explicit ideal verification: this is a checked consequence, not an
    // assumption
    if !members.contains(ring.zero()) {
        return Err(Error::InternalDisagreement("filter preimage misses 0".into()));
    }
    for a in members.ones() {
        for b in members.ones() {
            if !members.contains(ring.add(a, b)) {
                return Err(Error::InternalDisagreement("filter preimage not additively closed".into()));
            }
        }
        for r in ring.elems() {
            if !members.contains(ring.mul(r, a)) {
                return Err(Error::InternalDisagreement("filter preimage not an ideal".into()));
            }
        }
    }
    Ok(Ideal::from_members(Arc::clone(ring), members))
}

/// Prime filters containing `f`, minimal among those; `f` must be proper.
/// The result is cross-checked against the exchange characterization: a
/// prime filter over `f` is minimal exactly when every member `A` admits
/// a non-member `B` with the join of `A` and `B` in `f`.
pub fn min_prime_filters_over(
    lattice: &HYLattice,
    f: &HYFilter,
    caps: &Caps,
) -> Result<Vec<HYFilter>> {
    if !lattice.is_proper_filter(f) {
        return Err(Error::Precondition("minimal prime filters require a proper filter".into()));
    }
    let primes: Vec<FilterInfo> = filters(lattice, FilterKind::Prime, caps)?;
    let over: Vec<&FilterInfo> =
        primes.iter().filter(|p| f.is_subset(&p.filter)).collect();
    let minimal: Vec<HYFilter> = over
        .iter()
        .filter(|p| over.iter().all(|q| q.filter == p.filter || !q.filter.is_subset(&p.filter)))
        .map(|p| p.filter.clone())
        .collect();
    for p in &over {
        let exchange = p.filter.iter().all(|a| {
            (0..lattice.len()).any(|b| !p.filter.contains(b) && f.contains(lattice.join(a, b)))
        });
        let is_minimal = minimal.contains(&p.filter);
        if exchange != is_minimal {
            return Err(Error::InternalDisagreement(
                "minimal prime filters disagree with the exchange characterization".into(),
            ));
        }
    }
    Ok(minimal)
}

/// Where a filter is being transported to.
pub enum TransportTarget<'a> {
    /// Quotient by an ideal contained in `k(Y)`.
    Quotient(&'a Ideal),
    /// A subring given with its inclusion homomorphism.
    Subring(&'a Arc<Ring>, &'a Hom),
}

/// A transported space with its lattice, the transported filter, and the
/// connecting homomorphism (projection for quotients, inclusion for
/// subrings).
pub struct Transported {
    pub space: Arc<YSpace>,
    pub ideals: Vec<Ideal>,
    pub lattice: HYLattice,
    pub filter: HYFilter,
    pub hom: Hom,
}

/// Transport a filter to a quotient or subring space. Both directions
/// assert the ideal correspondence between the two Galois preimages and
/// fail loudly on any mismatch.
pub fn transport(
    lattice: &HYLattice,
    target: TransportTarget<'_>,
    filter: &HYFilter,
    caps: &Caps,
) -> Result<Transported> {
    match target {
        TransportTarget::Quotient(ideal) => transport_quotient(lattice, ideal, filter, caps),
        TransportTarget::Subring(sub, emb) => transport_subring(lattice, sub, emb, filter, caps),
    }
}

fn transport_quotient(
    lattice: &HYLattice,
    ideal: &Ideal,
    filter: &HYFilter,
    caps: &Caps,
) -> Result<Transported> {
    let space = lattice.space();
    let ring = space.ring();
    if !Arc::ptr_eq(ideal.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_subset(space.ky()) {
        return Err(Error::IdealNotInKernel);
    }
    let members: Vec<bool> = ring.elems().map(|a| ideal.contains(a)).collect();
    let (q, proj) = quotient_ring(ring, &members)?;
    let primes: Vec<Ideal> = space
        .primes()
        .iter()
        .map(|p| {
            let mut mask = FixedBitSet::with_capacity(q.size());
            for a in p.iter() {
                mask.insert(proj.map[a]);
            }
            Ideal::from_members(Arc::clone(&q), mask)
        })
        .collect();
    let qspace = Arc::new(YSpace::from_primes(
        Arc::clone(&q),
        primes,
        YSelector::Indices((0..space.len()).collect()),
    ));
    let qideals = all_ideals(&q, caps)?;
    let qlattice = build_lattice(&qspace, &qideals)?;

    // positions are preserved: a sits in P exactly when its coset sits in
    // P's image, so each old hull re-reads as a new hull verbatim
    let mut members = FixedBitSet::with_capacity(qlattice.len());
    for e in filter.iter() {
        let set = &lattice.elements()[e].set;
        let idx = qlattice.index_of(set).ok_or_else(|| {
            Error::InternalDisagreement("transported hull missing from quotient lattice".into())
        })?;
        members.insert(idx);
    }
    let qfilter = HYFilter { members };
    if !qlattice.is_filter(&qfilter) {
        return Err(Error::InternalDisagreement("quotient transport is not a filter".into()));
    }

    let ideal_above = galois_filter_to_ideal(lattice, filter)?;
    let mut image = FixedBitSet::with_capacity(q.size());
    for a in ideal_above.iter() {
        image.insert(proj.map[a]);
    }
    let transported_ideal = galois_filter_to_ideal(&qlattice, &qfilter)?;
    if image != *transported_ideal.members() {
        return Err(Error::InternalDisagreement(
            "quotient transport breaks the ideal correspondence".into(),
        ));
    }
    Ok(Transported { space: qspace, ideals: qideals, lattice: qlattice, filter: qfilter, hom: proj })
}

/// Verdict of a raw quotient transport attempt that skips the kernel
/// containment guard. Used by the hunter to probe what actually breaks
/// when the containment hypothesis is dropped.
pub struct TransportVerdict {
    pub ok: bool,
    pub reason: String,
}

pub fn transport_quotient_lenient(
    lattice: &HYLattice,
    ideal: &Ideal,
    filter: &HYFilter,
    caps: &Caps,
) -> Result<TransportVerdict> {
    let space = lattice.space();
    let ring = space.ring();
    let members: Vec<bool> = ring.elems().map(|a| ideal.contains(a)).collect();
    let (q, proj) = quotient_ring(ring, &members)?;
    // images of the selected primes; without the containment these may be
    // improper or fail primality
    let primes: Vec<Ideal> = space
        .primes()
        .iter()
        .map(|p| {
            let mut mask = FixedBitSet::with_capacity(q.size());
            for a in p.iter() {
                mask.insert(proj.map[a]);
            }
            let mut closure: Vec<Elem> = mask.ones().collect();
            closure.sort_unstable();
            crate::ideal::span(&q, &closure)
        })
        .collect::<Result<_>>()?;
    let qspace = Arc::new(YSpace::from_primes(
        Arc::clone(&q),
        primes,
        YSelector::Indices((0..space.len()).collect()),
    ));
    let qideals = all_ideals(&q, caps)?;
    let qlattice = build_lattice(&qspace, &qideals)?;
    let mut qmembers = FixedBitSet::with_capacity(qlattice.len());
    for e in filter.iter() {
        let set = &lattice.elements()[e].set;
        match qlattice.index_of(set) {
            Some(idx) => qmembers.insert(idx),
            None => {
                return Ok(TransportVerdict {
                    ok: false,
                    reason: format!(
                        "hull {} is not realized over the image primes",
                        space.set_label(set)
                    ),
                })
            }
        }
    }
    let qfilter = HYFilter { members: qmembers };
    if !qlattice.is_filter(&qfilter) {
        return Ok(TransportVerdict { ok: false, reason: "image is not a filter".into() });
    }
    let ideal_above = galois_filter_to_ideal(lattice, filter)?;
    let mut image = FixedBitSet::with_capacity(q.size());
    for a in ideal_above.iter() {
        image.insert(proj.map[a]);
    }
    let transported_ideal = galois_filter_to_ideal(&qlattice, &qfilter)?;
    if image != *transported_ideal.members() {
        return Ok(TransportVerdict {
            ok: false,
            reason: "the two preimages disagree".into(),
        });
    }
    Ok(TransportVerdict { ok: true, reason: String::new() })
}

fn transport_subring(
    lattice: &HYLattice,
    sub: &Arc<Ring>,
    emb: &Hom,
    filter: &HYFilter,
    caps: &Caps,
) -> Result<Transported> {
    let space = lattice.space();
    let ring = space.ring();
    if !Arc::ptr_eq(&emb.target, ring) || !Arc::ptr_eq(&emb.source, sub) {
        return Err(Error::RingMismatch);
    }
    // contract each prime and deduplicate, keeping first occurrences
    let mut primes: Vec<Ideal> = Vec::new();
    for p in space.primes() {
        let mut mask = FixedBitSet::with_capacity(sub.size());
        for x in sub.elems() {
            if p.contains(emb.map[x]) {
                mask.insert(x);
            }
        }
        let contracted = Ideal::from_members(Arc::clone(sub), mask);
        if !primes.contains(&contracted) {
            primes.push(contracted);
        }
    }
    let k = primes.len();
    let sspace = Arc::new(YSpace::from_primes(
        Arc::clone(sub),
        primes,
        YSelector::Indices((0..k).collect()),
    ));
    let sideals = all_ideals(sub, caps)?;
    let slattice = build_lattice(&sspace, &sideals)?;

    // the transported filter collects hulls (in the contracted space) of
    // those subring sets whose ambient hull lies in the filter
    let mut members = FixedBitSet::with_capacity(slattice.len());
    for ideal in &sideals {
        let image: Vec<Elem> = ideal.iter().map(|x| emb.map[x]).collect();
        let ambient = hull(space, &image);
        let ambient_idx = lattice.index_of(&ambient).ok_or_else(|| {
            Error::InternalDisagreement("ambient hull missing from lattice".into())
        })?;
        if filter.contains(ambient_idx) {
            let local = hull_ideal(&sspace, ideal);
            let idx = slattice.index_of(&local).ok_or_else(|| {
                Error::InternalDisagreement("contracted hull missing from lattice".into())
            })?;
            members.insert(idx);
        }
    }
    let sfilter = HYFilter { members };
    if !slattice.is_filter(&sfilter) {
        return Err(Error::InternalDisagreement("subring transport is not a filter".into()));
    }

    let ideal_above = galois_filter_to_ideal(lattice, filter)?;
    let mut contracted = FixedBitSet::with_capacity(sub.size());
    for x in sub.elems() {
        if ideal_above.contains(emb.map[x]) {
            contracted.insert(x);
        }
    }
    let transported_ideal = galois_filter_to_ideal(&slattice, &sfilter)?;
    if contracted != *transported_ideal.members() {
        return Err(Error::InternalDisagreement(
            "subring transport breaks the ideal correspondence".into(),
        ));
    }
    Ok(Transported {
        space: sspace,
        ideals: sideals,
        lattice: slattice,
        filter: sfilter,
        hom: emb.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::span;
    use crate::ring::{build_ring, build_subring, RingSpec};
    use crate::space::build_space;
    use crate::spectrum::spectrum;

    struct Env {
        ring: Arc<Ring>,
        ideals: Vec<Ideal>,
        lattice: HYLattice,
    }

    fn env(spec: &RingSpec) -> Env {
        let caps = Caps::default();
        let ring = build_ring(spec, &caps).unwrap();
        let ideals = all_ideals(&ring, &caps).unwrap();
        let s = spectrum(&ring, &ideals);
        let space = build_space(&ring, &s, &YSelector::Spec).unwrap();
        let lattice = build_lattice(&space, &ideals).unwrap();
        Env { ring, ideals, lattice }
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(env(&RingSpec::Modular { n: 6 }).lattice.len(), 4);
        assert_eq!(env(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }).lattice.len(), 2);
        assert_eq!(env(&RingSpec::Modular { n: 4 }).lattice.len(), 2);
    }

    #[test]
    fn filters_of_z6() {
        let e = env(&RingSpec::Modular { n: 6 });
        let caps = Caps::default();
        let proper = filters(&e.lattice, FilterKind::Proper, &caps).unwrap();
        assert_eq!(proper.len(), 3);
        let prime = filters(&e.lattice, FilterKind::Prime, &caps).unwrap();
        assert_eq!(prime.len(), 2);
        let ultra = filters(&e.lattice, FilterKind::Ultra, &caps).unwrap();
        assert_eq!(ultra.len(), 2);
        assert_eq!(prime[0].filter, ultra[0].filter);
    }

    #[test]
    fn filters_of_a_field() {
        let e = env(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] });
        let caps = Caps::default();
        let proper = filters(&e.lattice, FilterKind::Proper, &caps).unwrap();
        assert_eq!(proper.len(), 1);
        assert!(proper[0].prime && proper[0].ultra);
    }

    #[test]
    fn galois_round_trip_in_z6() {
        let e = env(&RingSpec::Modular { n: 6 });
        let i2 = span(&e.ring, &[2]).unwrap();
        let f = galois_ideal_to_filter(&e.lattice, &i2).unwrap();
        assert_eq!(f.len(), 2);
        let back = galois_filter_to_ideal(&e.lattice, &f).unwrap();
        assert_eq!(back, i2);

        let whole = span(&e.ring, &[1]).unwrap();
        let f = galois_ideal_to_filter(&e.lattice, &whole).unwrap();
        assert_eq!(f.len(), e.lattice.len());
        assert!(galois_filter_to_ideal(&e.lattice, &f).unwrap().is_whole());
    }

    #[test]
    fn minimal_prime_filters_in_z6() {
        let e = env(&RingSpec::Modular { n: 6 });
        let caps = Caps::default();
        let trivial = e.lattice.up_set(e.lattice.top());
        let min = min_prime_filters_over(&e.lattice, &trivial, &caps).unwrap();
        assert_eq!(min.len(), 2);

        let i2 = span(&e.ring, &[2]).unwrap();
        let f = galois_ideal_to_filter(&e.lattice, &i2).unwrap();
        let min = min_prime_filters_over(&e.lattice, &f, &caps).unwrap();
        assert_eq!(min, vec![f]);
    }

    #[test]
    fn quotient_transport_z12_by_6() {
        let e = env(&RingSpec::Modular { n: 12 });
        let caps = Caps::default();
        let i6 = span(&e.ring, &[6]).unwrap();
        let i2 = span(&e.ring, &[2]).unwrap();
        let f = galois_ideal_to_filter(&e.lattice, &i2).unwrap();
        let t = transport(&e.lattice, TransportTarget::Quotient(&i6), &f, &caps).unwrap();
        assert_eq!(t.space.ring().size(), 6);
        assert_eq!(t.space.len(), 2);
        assert_eq!(t.filter.len(), f.len());

        let i4 = span(&e.ring, &[4]).unwrap();
        assert!(matches!(
            transport(&e.lattice, TransportTarget::Quotient(&i4), &f, &caps),
            Err(Error::IdealNotInKernel)
        ));
    }

    #[test]
    fn subring_transport_diagonal() {
        let prod = RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 2 }]);
        let e = env(&prod);
        let caps = Caps::default();
        let (sub, emb) = build_subring(&e.ring, &[0, 3]).unwrap();
        let trivial = e.lattice.up_set(e.lattice.top());
        let t = transport(&e.lattice, TransportTarget::Subring(&sub, &emb), &trivial, &caps).unwrap();
        // both coordinate primes contract to the zero ideal of the diagonal
        assert_eq!(t.space.len(), 1);
        assert!(t.space.primes()[0].is_zero());
        let _ = &e.ideals;
    }
}

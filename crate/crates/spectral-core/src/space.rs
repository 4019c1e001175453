//! A chosen subset `Y` of the prime spectrum carrying its Zariski
//! topology: hull and kernel operators, closure/interior/complement, and
//! the hull-pair property (every intersection of two element hulls is
//! again an element hull).

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{intersect_all, span, Ideal};
use crate::ring::{Elem, Ring};
use crate::spectrum::{min_primes_over, Spectrum};

/// How to pick `Y` out of a spectrum. For finite rings `spec`, `max` and
/// `min` coincide; `build_space` asserts that instead of assuming it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum YSelector {
    Spec,
    Max,
    Min,
    Indices(Vec<usize>),
    MinOver(Vec<Elem>),
}

impl std::fmt::Display for YSelector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            YSelector::Spec => write!(f, "spec"),
            YSelector::Max => write!(f, "max"),
            YSelector::Min => write!(f, "min"),
            YSelector::Indices(ix) => {
                let parts: Vec<String> = ix.iter().map(|i| i.to_string()).collect();
                write!(f, "idx:{}", parts.join(","))
            }
            YSelector::MinOver(gens) => {
                let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                write!(f, "minover:{}", parts.join(","))
            }
        }
    }
}

/// A subset of `YSpace.primes`, by position mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSet {
    pub mask: FixedBitSet,
}

impl YSet {
    pub fn empty(len: usize) -> YSet {
        YSet { mask: FixedBitSet::with_capacity(len) }
    }

    pub fn full(len: usize) -> YSet {
        let mut mask = FixedBitSet::with_capacity(len);
        mask.insert_range(..);
        YSet { mask }
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.contains(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.ones()
    }

    pub fn is_subset(&self, other: &YSet) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersect(&self, other: &YSet) -> YSet {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        YSet { mask }
    }

    pub fn union(&self, other: &YSet) -> YSet {
        let mut mask = self.mask.clone();
        mask.union_with(&other.mask);
        YSet { mask }
    }
}

/// `Y` with its kernel `k(Y)` and per-element hull caches.
#[derive(Debug, Clone)]
pub struct YSpace {
    ring: Arc<Ring>,
    primes: Vec<Ideal>,
    ky: Ideal,
    selector: YSelector,
    /// `elem_hulls[a]` = hull of the single element `a`.
    elem_hulls: Vec<YSet>,
    /// member mask of `kernel(hull({a}))` for each element `a`.
    elem_kh: Vec<FixedBitSet>,
}

impl YSpace {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn ky(&self) -> &Ideal {
        &self.ky
    }

    pub fn selector(&self) -> &YSelector {
        &self.selector
    }

    pub fn elem_hull(&self, a: Elem) -> &YSet {
        &self.elem_hulls[a]
    }

    /// Members of `kernel(hull({a}))` as a bitset over the carrier.
    pub fn elem_kh(&self, a: Elem) -> &FixedBitSet {
        &self.elem_kh[a]
    }

    pub fn label(&self) -> String {
        self.selector.to_string()
    }

    /// Render a `YSet` as its sorted prime labels, e.g. `{<2>}`.
    pub fn set_label(&self, t: &YSet) -> String {
        let labels: Vec<String> = t.iter().map(|i| self.primes[i].gens_label()).collect();
        format!("{{{}}}", labels.join(","))
    }

    pub(crate) fn from_primes(ring: Arc<Ring>, primes: Vec<Ideal>, selector: YSelector) -> YSpace {
        let ky = intersect_all(&ring, primes.iter());
        let elem_hulls: Vec<YSet> = ring
            .elems()
            .map(|a| {
                let mut mask = FixedBitSet::with_capacity(primes.len());
                for (i, p) in primes.iter().enumerate() {
                    if p.contains(a) {
                        mask.insert(i);
                    }
                }
                YSet { mask }
            })
            .collect();
        let elem_kh: Vec<FixedBitSet> = ring
            .elems()
            .map(|a| {
                let mut members = Ideal::member_mask_from(&ring, ring.elems());
                for i in elem_hulls[a].iter() {
                    members.intersect_with(primes[i].members());
                }
                members
            })
            .collect();
        YSpace { ring, primes, ky, selector, elem_hulls, elem_kh }
    }
}

/// Assemble a space directly from a prime list; used by transports that
/// land on derived rings.
pub(crate) fn space_from_primes(ring: Arc<Ring>, primes: Vec<Ideal>, sel: YSelector) -> YSpace {
    YSpace::from_primes(ring, primes, sel)
}

/// Materialize the space selected by `sel`.
pub fn build_space(ring: &Arc<Ring>, spectrum: &Spectrum, sel: &YSelector) -> Result<Arc<YSpace>> {
    let primes: Vec<Ideal> = match sel {
        YSelector::Spec => spectrum.primes.clone(),
        YSelector::Max => {
            let all: Vec<Ideal> = spectrum
                .primes
                .iter()
                .zip(&spectrum.max_mask)
                .filter(|(_, &m)| m)
                .map(|(p, _)| p.clone())
                .collect();
            if all.len() != spectrum.primes.len() {
                return Err(Error::InternalDisagreement(
                    "maximal ideals do not exhaust the spectrum of a finite ring".into(),
                ));
            }
            all
        }
        YSelector::Min => {
            let all: Vec<Ideal> = spectrum
                .primes
                .iter()
                .zip(&spectrum.min_mask)
                .filter(|(_, &m)| m)
                .map(|(p, _)| p.clone())
                .collect();
            if all.len() != spectrum.primes.len() {
                return Err(Error::InternalDisagreement(
                    "minimal primes do not exhaust the spectrum of a finite ring".into(),
                ));
            }
            all
        }
        YSelector::Indices(ix) => {
            let mut ix = ix.clone();
            ix.sort_unstable();
            ix.dedup();
            let mut primes = Vec::with_capacity(ix.len());
            for i in ix {
                let p = spectrum.primes.get(i).ok_or(Error::BadPrimeIndex(i))?;
                primes.push(p.clone());
            }
            primes
        }
        YSelector::MinOver(gens) => {
            let ideal = span(ring, gens)?;
            if ideal.is_whole() {
                return Err(Error::ImproperIdeal);
            }
            min_primes_over(spectrum, &ideal)?.into_iter().cloned().collect()
        }
    };
    Ok(Arc::new(YSpace::from_primes(Arc::clone(ring), primes, sel.clone())))
}

/// `hull(S) = {P in Y : S is contained in P}`; the whole of `Y` when `S`
/// is empty.
pub fn hull(space: &YSpace, elems: &[Elem]) -> YSet {
    let mut set = YSet::full(space.len());
    for &a in elems {
        set.mask.intersect_with(&space.elem_hulls[a].mask);
    }
    set
}

/// Hull of an ideal, through its canonical generators (hulls factor
/// through spans).
pub fn hull_ideal(space: &YSpace, ideal: &Ideal) -> YSet {
    hull(space, ideal.gens())
}

/// `kernel(T)`, the intersection of the primes in `T`; the whole ring for
/// the empty set.
pub fn kernel(space: &YSpace, t: &YSet) -> Ideal {
    intersect_all(&space.ring, t.iter().map(|i| &space.primes[i]))
}

/// Member mask of `kernel(hull(S))` without building the `Ideal`.
pub fn kernel_hull_mask(space: &YSpace, elems: &[Elem]) -> FixedBitSet {
    let t = hull(space, elems);
    let mut members = Ideal::member_mask_from(&space.ring, space.ring.elems());
    for i in t.iter() {
        members.intersect_with(space.primes[i].members());
    }
    members
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopoOp {
    Closure,
    Interior,
    Complement,
}

/// Closure is hull-of-kernel; interior goes through the complement of the
/// closure of the complement, deliberately not through any annihilator
/// formula so the latter stays an independently checkable claim.
pub fn topo(space: &YSpace, t: &YSet, op: TopoOp) -> YSet {
    match op {
        TopoOp::Closure => hull_ideal(space, &kernel(space, t)),
        TopoOp::Complement => {
            let mut mask = YSet::full(space.len()).mask;
            mask.difference_with(&t.mask);
            YSet { mask }
        }
        TopoOp::Interior => {
            let co = topo(space, t, TopoOp::Complement);
            let closed = topo(space, &co, TopoOp::Closure);
            topo(space, &closed, TopoOp::Complement)
        }
    }
}

/// Search every element pair for a single element whose hull realizes the
/// pair's hull intersection; returns the offending pair on failure.
pub fn hy_property(space: &YSpace) -> (bool, Option<(Elem, Elem)>) {
    let ring = &space.ring;
    for a in ring.elems() {
        for b in ring.elems() {
            let meet = space.elem_hulls[a].intersect(&space.elem_hulls[b]);
            if !ring.elems().any(|c| space.elem_hulls[c] == meet) {
                return (false, Some((a, b)));
            }
        }
    }
    (true, None)
}

//! Everything a check needs about one case, computed once and shared.

use std::sync::Arc;

use crate::caps::Caps;
use crate::classes::{classify_ideal, ClassReport, SFamily};
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, zero_ideal, Ideal};
use crate::lattice::{build_lattice, filters, FilterInfo, FilterKind, HYLattice};
use crate::ring::{build_ring, classify_element, ElementClassSet, Ring};
use crate::space::{build_space, YSelector, YSpace};
use crate::spectrum::{ring_flags, spectrum, RingClassFlags, Spectrum};
use crate::suite::Case;

/// Immutable per-case context. Checks treat it as read-only; distinct
/// cases may be processed concurrently.
pub struct CaseContext {
    pub case: Case,
    pub ring: Arc<Ring>,
    pub ideals: Vec<Ideal>,
    pub spectrum: Spectrum,
    pub space: Arc<YSpace>,
    pub family: SFamily,
    pub lattice: HYLattice,
    pub min_space: Arc<YSpace>,
    pub min_family: SFamily,
    pub flags: RingClassFlags,
    pub elem_classes: Vec<ElementClassSet>,
    /// Default classification (no extra variants) of `ideals[i]`.
    pub class: Vec<ClassReport>,
    filters_all: Result<Vec<FilterInfo>>,
}

impl CaseContext {
    pub fn build(case: &Case, caps: &Caps) -> Result<CaseContext> {
        let ring = build_ring(&case.ring, caps)?;
        let ideals = all_ideals(&ring, caps)?;
        let spectrum = spectrum(&ring, &ideals);

        // sanity wall: a finite ring is Artinian, so minimal and maximal
        // primes must both exhaust the spectrum and the two radicals must
        // coincide
        if spectrum.min_mask.iter().any(|&m| !m)
            || spectrum.max_mask.iter().any(|&m| !m)
            || spectrum.rad != spectrum.jac
        {
            return Err(Error::InternalDisagreement(
                "finite spectrum does not collapse to its minimal/maximal primes".into(),
            ));
        }

        let space = build_space(&ring, &spectrum, &case.selector)?;
        let family = SFamily::build(&space, &ideals);
        let lattice = build_lattice(&space, &ideals)?;
        let min_space = build_space(&ring, &spectrum, &YSelector::Min)?;
        let min_family = SFamily::build(&min_space, &ideals);
        let flags = ring_flags(&ring, &ideals, &spectrum)?;
        let elem_classes = ring
            .elems()
            .map(|a| classify_element(&ring, a))
            .collect::<Result<Vec<_>>>()?;
        let class = ideals
            .iter()
            .map(|i| classify_ideal(&space, &family, i, &[]))
            .collect::<Result<Vec<_>>>()?;
        let filters_all = filters(&lattice, FilterKind::All, caps);
        Ok(CaseContext {
            case: case.clone(),
            ring,
            ideals,
            spectrum,
            space,
            family,
            lattice,
            min_space,
            min_family,
            flags,
            elem_classes,
            class,
            filters_all,
        })
    }

    /// All filters of the hull lattice, or the cap error that prevented
    /// their enumeration.
    pub fn filters(&self) -> Result<&[FilterInfo]> {
        match &self.filters_all {
            Ok(f) => Ok(f),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn ky_is_zero(&self) -> bool {
        self.space.ky().is_zero()
    }

    /// `Max(R)` inside `Y`, i.e. the selector covers the whole spectrum.
    pub fn max_in_y(&self) -> bool {
        self.space.len() == self.spectrum.primes.len()
    }

    pub fn zero(&self) -> Ideal {
        zero_ideal(&self.ring)
    }

    /// Position of an ideal in the canonical ideal list.
    pub fn ideal_index(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.iter().position(|i| i == ideal)
    }
}

//! Prime and maximal ideals of a finite ring, associated prime divisors,
//! fixed-place testing, and global ring-class predicates.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{annihilator, colon, intersect_all, zero_ideal, Ideal};
use crate::ring::{classify_element, Elem, Ring};

/// The prime spectrum with minimal/maximal masks and the two radicals.
/// In a finite ring the minimal and maximal masks always cover everything
/// (finite implies Artinian); that collapse is asserted by the suite, not
/// assumed here.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub primes: Vec<Ideal>,
    pub min_mask: Vec<bool>,
    pub max_mask: Vec<bool>,
    pub rad: Ideal,
    pub jac: Ideal,
}

/// Global ring classes decided by exhaustive scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingClassFlags {
    pub reduced: bool,
    pub semiprimitive: bool,
    pub regular_ring: bool,
    pub gelfand: bool,
    pub weakly_regular: bool,
    pub property_a: bool,
    pub ac_ring: bool,
}

/// Primality by the full pair scan: proper, and `ab in I` forces a or b in.
pub fn is_prime(ideal: &Ideal) -> bool {
    if ideal.is_whole() {
        return false;
    }
    let ring = ideal.ring();
    for a in ring.elems() {
        if ideal.contains(a) {
            continue;
        }
        for b in ring.elems() {
            if !ideal.contains(b) && ideal.contains(ring.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Compute the spectrum from the precomputed ideal list. Primes are
/// ordered by their canonical generator lists so that `Spec(Z/12)` reads
/// `[<2>, <3>]`.
pub fn spectrum(ring: &Arc<Ring>, ideals: &[Ideal]) -> Spectrum {
    let mut primes: Vec<Ideal> = ideals.iter().filter(|i| is_prime(i)).cloned().collect();
    primes.sort_by(|a, b| {
        a.gens()
            .cmp(b.gens())
            .then_with(|| a.cmp(b))
    });
    let min_mask: Vec<bool> = primes
        .iter()
        .map(|p| primes.iter().all(|q| q == p || !q.is_subset(p)))
        .collect();
    let max_mask: Vec<bool> = primes
        .iter()
        .map(|p| primes.iter().all(|q| q == p || !p.is_subset(q)))
        .collect();
    let rad = intersect_all(ring, primes.iter().zip(&min_mask).filter(|(_, &m)| m).map(|(p, _)| p));
    let jac = intersect_all(ring, primes.iter().zip(&max_mask).filter(|(_, &m)| m).map(|(p, _)| p));
    Spectrum { primes, min_mask, max_mask, rad, jac }
}

/// Minimal primes over a proper ideal `I`.
pub fn min_primes_over<'a>(spec: &'a Spectrum, ideal: &Ideal) -> Result<Vec<&'a Ideal>> {
    if ideal.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    let over: Vec<&Ideal> = spec.primes.iter().filter(|p| ideal.is_subset(p)).collect();
    Ok(over
        .iter()
        .filter(|p| over.iter().all(|q| q == *p || !q.is_subset(p)))
        .copied()
        .collect())
}

/// Associated prime divisors `B(I) = { P prime : (I : x) = P for some x }`
/// with their witnesses, and the fixed-place verdict `I = intersection of
/// B(I)` (the empty intersection being the whole ring).
pub fn bourbaki(spec: &Spectrum, ideal: &Ideal) -> Result<(Vec<(Ideal, Elem)>, bool)> {
    if ideal.is_whole() {
        return Err(Error::ImproperIdeal);
    }
    let ring = ideal.ring();
    let mut divisors: Vec<(Ideal, Elem)> = Vec::new();
    for p in &spec.primes {
        let witness = ring.elems().find(|&x| {
            colon(ideal, &[x]).map(|q| q == *p).unwrap_or(false)
        });
        if let Some(x) = witness {
            divisors.push((p.clone(), x));
        }
    }
    let meet = intersect_all(ring, divisors.iter().map(|(p, _)| p));
    let fixed_place = meet == *ideal;
    Ok((divisors, fixed_place))
}

/// All seven global flags.
pub fn ring_flags(ring: &Arc<Ring>, ideals: &[Ideal], spec: &Spectrum) -> Result<RingClassFlags> {
    let zero = zero_ideal(ring);
    let reduced = spec.rad == zero;
    let semiprimitive = spec.jac == zero;

    let classes: Vec<_> = ring
        .elems()
        .map(|a| classify_element(ring, a))
        .collect::<Result<_>>()?;
    let regular_ring = classes.iter().all(|c| c.regular);

    let maximal: Vec<&Ideal> = spec
        .primes
        .iter()
        .zip(&spec.max_mask)
        .filter(|(_, &m)| m)
        .map(|(p, _)| p)
        .collect();
    let gelfand = spec
        .primes
        .iter()
        .all(|p| maximal.iter().filter(|m| p.is_subset(m)).count() == 1);

    let weakly_regular = ideals.iter().filter(|i| !i.is_zero()).all(|i| {
        i.iter().any(|e| e != ring.zero() && ring.mul(e, e) == e)
    });

    // every ideal of zero-divisors must have a nonzero annihilator; in a
    // finite ring quantifying over all ideals covers the finitely
    // generated ones
    let property_a = ideals.iter().all(|i| {
        let all_zd = i.iter().all(|a| a == ring.zero() || classes[a].zero_divisor);
        if !all_zd {
            return true;
        }
        let divisors: Vec<Elem> = i.iter().collect();
        !annihilator(ring, &divisors).expect("nonempty").is_zero()
    });

    // Ann(F) depends only on span(F), so quantifying over canonical
    // generator sets of all ideals covers every finite subset
    let ac_ring = ideals.iter().all(|i| {
        let divisors: Vec<Elem> = i.iter().collect();
        let ann = annihilator(ring, &divisors).expect("nonempty");
        ring.elems().any(|c| annihilator(ring, &[c]).expect("nonempty") == ann)
    });

    Ok(RingClassFlags {
        reduced,
        semiprimitive,
        regular_ring,
        gelfand,
        weakly_regular,
        property_a,
        ac_ring,
    })
}

/// Render the prime list the way reports do: `[<2>, <3>]`.
pub fn spectrum_label(spec: &Spectrum) -> String {
    let labels: Vec<String> = spec.primes.iter().map(|p| p.gens_label()).collect();
    format!("[{}]", labels.join(", "))
}

/// `radical(I)` must agree with the intersection of the minimal primes
/// over `I`; used as a cross-check by tests and the suite.
pub fn radical_via_primes(spec: &Spectrum, ideal: &Ideal) -> Ideal {
    if ideal.is_whole() {
        return ideal.clone();
    }
    let over = min_primes_over(spec, ideal).expect("proper");
    intersect_all(ideal.ring(), over)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::ideal::{all_ideals, radical, span};
    use crate::ring::{build_ring, RingSpec};

    fn ctx(spec: &RingSpec) -> (Arc<Ring>, Vec<Ideal>, Spectrum) {
        let caps = Caps::default();
        let ring = build_ring(spec, &caps).unwrap();
        let ideals = all_ideals(&ring, &caps).unwrap();
        let spectrum = spectrum(&ring, &ideals);
        (ring, ideals, spectrum)
    }

    #[test]
    fn spectrum_of_z12() {
        let (_, _, spec) = ctx(&RingSpec::Modular { n: 12 });
        let labels: Vec<String> = spec.primes.iter().map(|p| p.gens_label()).collect();
        assert_eq!(labels, vec!["<2>", "<3>"]);
        assert!(spec.min_mask.iter().all(|&m| m));
        assert!(spec.max_mask.iter().all(|&m| m));
        assert_eq!(spec.rad.iter().collect::<Vec<_>>(), vec![0, 6]);
        assert_eq!(spec.rad, spec.jac);
        assert_eq!(spectrum_label(&spec), "[<2>, <3>]");
    }

    #[test]
    fn spectrum_of_fields_and_local_rings() {
        let (_, _, spec) = ctx(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] });
        assert_eq!(spec.primes.len(), 1);
        assert!(spec.rad.is_zero());

        let (_, _, spec) = ctx(&RingSpec::PolyQuotient { p: 2, f: vec![0, 0, 1] });
        assert_eq!(spec.primes.len(), 1);
        assert_eq!(spec.primes[0].size(), 2);
        assert_eq!(spec.rad, spec.primes[0]);
    }

    #[test]
    fn min_primes_over_examples() {
        let (ring, _, spec) = ctx(&RingSpec::Modular { n: 12 });
        let i4 = span(&ring, &[4]).unwrap();
        let over = min_primes_over(&spec, &i4).unwrap();
        assert_eq!(over.len(), 1);
        assert_eq!(over[0].gens_label(), "<2>");

        let over = min_primes_over(&spec, &zero_ideal(&ring)).unwrap();
        assert_eq!(over.len(), 2);

        let p2 = span(&ring, &[2]).unwrap();
        let over = min_primes_over(&spec, &p2).unwrap();
        assert_eq!(over, vec![&p2]);
    }

    #[test]
    fn bourbaki_examples() {
        let (ring, _, spec) = ctx(&RingSpec::Modular { n: 12 });
        let (divisors, fixed) = bourbaki(&spec, &zero_ideal(&ring)).unwrap();
        let labels: Vec<String> = divisors.iter().map(|(p, _)| p.gens_label()).collect();
        assert_eq!(labels, vec!["<2>", "<3>"]);
        assert!(!fixed);
        for (p, x) in &divisors {
            assert_eq!(&annihilator(&ring, &[*x]).unwrap(), p);
        }

        let (ring, _, spec) = ctx(&RingSpec::Modular { n: 6 });
        let (divisors, fixed) = bourbaki(&spec, &zero_ideal(&ring)).unwrap();
        assert_eq!(divisors.len(), 2);
        assert!(fixed);

        let (ring, _, spec) = ctx(&RingSpec::Modular { n: 5 });
        let (divisors, fixed) = bourbaki(&spec, &zero_ideal(&ring)).unwrap();
        assert_eq!(divisors.len(), 1);
        assert!(fixed);
    }

    #[test]
    fn flags_for_small_rings() {
        let (ring, ideals, spec) = ctx(&RingSpec::Modular { n: 6 });
        let flags = ring_flags(&ring, &ideals, &spec).unwrap();
        assert!(
            flags.reduced
                && flags.semiprimitive
                && flags.regular_ring
                && flags.gelfand
                && flags.weakly_regular
                && flags.property_a
                && flags.ac_ring
        );

        let (ring, ideals, spec) = ctx(&RingSpec::Modular { n: 4 });
        let flags = ring_flags(&ring, &ideals, &spec).unwrap();
        assert!(!flags.reduced && !flags.regular_ring);
        assert!(flags.gelfand && flags.property_a);

        let (ring, ideals, spec) = ctx(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] });
        let flags = ring_flags(&ring, &ideals, &spec).unwrap();
        assert!(flags.reduced && flags.regular_ring && flags.ac_ring);
    }

    #[test]
    fn radical_agrees_with_min_prime_intersection() {
        for n in 2..=20 {
            let (_, ideals, spec) = ctx(&RingSpec::Modular { n });
            for i in &ideals {
                assert_eq!(radical(i), radical_via_primes(&spec, i), "Z/{n}, {}", i.gens_label());
            }
        }
    }

    #[test]
    fn regular_iff_squarefree() {
        for n in 2..=36 {
            let (ring, ideals, spec) = ctx(&RingSpec::Modular { n });
            let squarefree = (2..=n).filter(|d| d * d <= n).all(|d| n % (d * d) != 0);
            let flags = ring_flags(&ring, &ideals, &spec).unwrap();
            assert_eq!(flags.regular_ring, squarefree, "Z/{n}");
        }
    }
}

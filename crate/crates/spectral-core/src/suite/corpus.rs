//! The default verification corpus: modular rings `Z/2 .. Z/36`, a few
//! polynomial quotients, small products, and for every ring the full
//! spectrum selector plus every singleton and pair of prime indices.

use crate::caps::Caps;
use crate::error::Result;
use crate::ideal::all_ideals;
use crate::ring::{build_ring, RingSpec};
use crate::space::YSelector;
use crate::spectrum::spectrum;
use crate::suite::Case;

fn ring_specs() -> Vec<RingSpec> {
    let mut specs: Vec<RingSpec> = (2..=36).map(|n| RingSpec::Modular { n }).collect();
    specs.push(RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }); // GF(4)
    specs.push(RingSpec::PolyQuotient { p: 2, f: vec![0, 0, 1] }); // GF(2)[x]/(x^2)
    specs.push(RingSpec::PolyQuotient { p: 3, f: vec![0, 0, 1] }); // GF(3)[x]/(x^2)
    specs.push(RingSpec::PolyQuotient { p: 2, f: vec![0, 0, 0, 1] }); // GF(2)[x]/(x^3)
    specs.push(RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 4 }]));
    specs.push(RingSpec::Product(vec![RingSpec::Modular { n: 6 }, RingSpec::Modular { n: 2 }]));
    specs.push(RingSpec::Product(vec![RingSpec::Modular { n: 4 }, RingSpec::Modular { n: 9 }]));
    specs
}

/// Build the default corpus. Selector enumeration needs each ring's prime
/// count, so the rings are built once here.
pub fn default_corpus(caps: &Caps) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for spec in ring_specs() {
        let ring = build_ring(&spec, caps)?;
        let ideals = all_ideals(&ring, caps)?;
        let primes = spectrum(&ring, &ideals).primes.len();
        cases.push(Case { ring: spec.clone(), selector: YSelector::Spec });
        for i in 0..primes {
            cases.push(Case { ring: spec.clone(), selector: YSelector::Indices(vec![i]) });
        }
        for i in 0..primes {
            for j in (i + 1)..primes {
                cases.push(Case { ring: spec.clone(), selector: YSelector::Indices(vec![i, j]) });
            }
        }
    }
    Ok(cases)
}

/// A deliberately corrupted table ring; building it must surface an axiom
/// violation in the report rather than a crash.
pub fn corrupted_table_case() -> Case {
    Case {
        ring: RingSpec::Table {
            size: 2,
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 0], vec![0, 0]],
            zero: 0,
            one: 1,
        },
        selector: YSelector::Spec,
    }
}

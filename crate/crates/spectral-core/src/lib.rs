//! Exact computation on finite commutative rings with unity.
//!
//! The crate builds small rings from specs, enumerates their ideals and
//! prime spectra, equips any subset of the spectrum with its hull/kernel
//! operators, classifies ideals against hull-based closure conditions,
//! materializes the finite distributive lattice of hull sets with its
//! filters, and runs a registry of machine-checkable claims over a corpus
//! of rings, with a counterexample hunter for weakened hypotheses.

pub mod caps;
pub mod error;
pub mod classes;
pub mod ideal;
pub mod lattice;
pub mod ring;
pub mod space;
pub mod spectrum;
pub mod suite;

pub use caps::Caps;
pub use error::{Error, Result};

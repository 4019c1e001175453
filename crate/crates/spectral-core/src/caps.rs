//! Resource caps. Every algorithm in this crate is exhaustive, so hard
//! ceilings keep a run bounded no matter what input it is pointed at.

use crate::error::{Error, Result};

/// Caps applied during construction and during suite checks.
///
/// `carrier` bounds ring construction, `ideal_enum` bounds `all_ideals`,
/// and the three `check_*` fields bound what a single suite check will
/// visit before reporting `cap-exceeded`. `lattice_all` bounds exhaustive
/// filter enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub carrier: usize,
    pub ideal_enum: usize,
    pub check_elements: usize,
    pub check_ideals: usize,
    pub check_filters: usize,
    pub lattice_all: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            carrier: 4096,
            ideal_enum: 65536,
            check_elements: 256,
            check_ideals: 1024,
            check_filters: 4096,
            lattice_all: 20,
        }
    }
}

impl Caps {
    /// Parse an override string of the form `elements=256,ideals=1024,filters=4096`.
    /// Unknown keys are rejected; omitted keys keep their defaults.
    pub fn with_overrides(spec: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::BadCaps(format!("expected key=value, got `{part}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::BadCaps(format!("`{value}` is not a number")))?;
            match key.trim() {
                "elements" => caps.check_elements = value,
                "ideals" => caps.check_ideals = value,
                "filters" => caps.check_filters = value,
                "carrier" => caps.carrier = value,
                other => return Err(Error::BadCaps(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    /// Caps taken from the `SPECTRAL_CAPS` environment variable, falling
    /// back to defaults when it is unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var("SPECTRAL_CAPS") {
            Ok(spec) => Caps::with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_string_is_parsed() {
        let caps = Caps::with_overrides("elements=100, ideals=7,filters=9").unwrap();
        assert_eq!(caps.check_elements, 100);
        assert_eq!(caps.check_ideals, 7);
        assert_eq!(caps.check_filters, 9);
        assert_eq!(caps.carrier, 4096);
    }

    #[test]
    fn unknown_key_is_rejected() {
        assert!(Caps::with_overrides("bogus=1").is_err());
        assert!(Caps::with_overrides("elements").is_err());
    }
}

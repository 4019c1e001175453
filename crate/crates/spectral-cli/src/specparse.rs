//! Parsers for the command-line mini-languages: ring specs, selectors,
//! and ideal generator lists.
//!
//! Ring grammar:
//!
//! ```text
//! ring := "Z/" INT | "GF(" INT ")[x]/(" poly ")" | ring "x" ring | "table:" PATH
//! ```
//!
//! Products split on `x` at nesting depth zero, so the `[x]` and the
//! polynomial variable never collide with the separator. Elements are
//! written in each ring's canonical encoding: plain residues for `Z/n`,
//! ascending-degree coefficient tuples like `(1,1)` for polynomial
//! quotients, nested tuples like `((1,0),2)` for products, and carrier
//! indices for table rings.

use anyhow::{anyhow, bail, Context, Result};

use spectral_core::ring::RingSpec;
use spectral_core::space::YSelector;

/// Split `input` on `x` separators that sit outside any parentheses or
/// brackets.
fn split_product(input: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in input.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth = depth.saturating_sub(1),
            'x' if depth == 0 => {
                parts.push(&input[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&input[start..]);
    parts
}

pub fn parse_ring_spec(input: &str) -> Result<RingSpec> {
    let parts = split_product(input);
    if parts.len() > 1 {
        let factors = parts
            .iter()
            .map(|p| parse_atom(p.trim()))
            .collect::<Result<Vec<_>>>()?;
        return Ok(RingSpec::Product(factors));
    }
    parse_atom(input.trim())
}

fn parse_atom(atom: &str) -> Result<RingSpec> {
    if let Some(rest) = atom.strip_prefix("Z/") {
        let n: usize = rest.trim().parse().with_context(|| format!("bad modulus `{rest}`"))?;
        if n == 0 {
            bail!("modulus must be >= 1");
        }
        return Ok(RingSpec::Modular { n });
    }
    if let Some(rest) = atom.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| anyhow!("missing `)` after the field order"))?;
        let p: usize = rest[..close]
            .trim()
            .parse()
            .with_context(|| format!("bad field order `{}`", &rest[..close]))?;
        let tail = &rest[close + 1..];
        let tail = tail
            .strip_prefix("[x]/(")
            .ok_or_else(|| anyhow!("expected `[x]/(` after `GF({p})`"))?;
        let poly_end =
            tail.rfind(')').ok_or_else(|| anyhow!("missing `)` after the polynomial"))?;
        let coeffs = parse_poly(&tail[..poly_end], p)?;
        return Ok(RingSpec::PolyQuotient { p, f: coeffs });
    }
    if let Some(path) = atom.strip_prefix("table:") {
        return load_table(path.trim());
    }
    bail!("cannot parse ring spec `{atom}`: expected Z/n, GF(p)[x]/(f), a product, or table:PATH")
}

/// Parse `x^2+x+1`-style polynomials into ascending coefficient vectors,
/// reducing coefficients mod `p`.
fn parse_poly(text: &str, p: usize) -> Result<Vec<usize>> {
    if p < 2 {
        bail!("field order must be at least 2");
    }
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        bail!("empty polynomial");
    }
    let mut coeffs: Vec<usize> = Vec::new();
    let mut bump = |deg: usize, c: usize| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] = (coeffs[deg] + c) % p;
    };
    for term in cleaned.split('+') {
        if term.is_empty() {
            bail!("empty term in polynomial `{text}`");
        }
        if let Some(rest) = term.split_once('x') {
            let coeff = if rest.0.is_empty() {
                1
            } else {
                rest.0.parse::<usize>().with_context(|| format!("bad coefficient in `{term}`"))?
            };
            let deg = if rest.1.is_empty() {
                1
            } else {
                rest.1
                    .strip_prefix('^')
                    .ok_or_else(|| anyhow!("expected `^` in `{term}`"))?
                    .parse::<usize>()
                    .with_context(|| format!("bad exponent in `{term}`"))?
            };
            bump(deg, coeff);
        } else {
            let c: usize = term.parse().with_context(|| format!("bad constant `{term}`"))?;
            bump(0, c);
        }
    }
    Ok(coeffs)
}

/// Table-ring ingestion file:
/// `{"size": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j}`.
fn load_table(path: &str) -> Result<RingSpec> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading `{path}`"))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing `{path}`"))?;
    let size = value["size"].as_u64().ok_or_else(|| anyhow!("missing `size`"))? as usize;
    let grid = |key: &str| -> Result<Vec<Vec<usize>>> {
        value[key]
            .as_array()
            .ok_or_else(|| anyhow!("missing `{key}`"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| anyhow!("`{key}` rows must be arrays"))?
                    .iter()
                    .map(|v| {
                        v.as_u64().map(|n| n as usize).ok_or_else(|| anyhow!("bad entry in `{key}`"))
                    })
                    .collect()
            })
            .collect()
    };
    Ok(RingSpec::Table {
        size,
        add: grid("add")?,
        mul: grid("mul")?,
        zero: value["zero"].as_u64().ok_or_else(|| anyhow!("missing `zero`"))? as usize,
        one: value["one"].as_u64().ok_or_else(|| anyhow!("missing `one`"))? as usize,
    })
}

/// Selector forms: `spec`, `max`, `min`, `idx:0,2`, `minover:<gens>`.
pub fn parse_selector(input: &str, ring: &RingSpec) -> Result<YSelector> {
    match input.trim() {
        "spec" => Ok(YSelector::Spec),
        "max" => Ok(YSelector::Max),
        "min" => Ok(YSelector::Min),
        other => {
            if let Some(list) = other.strip_prefix("idx:") {
                let indices = list
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad index `{t}`")))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(YSelector::Indices(indices));
            }
            if let Some(gens) = other.strip_prefix("minover:") {
                return Ok(YSelector::MinOver(parse_gens(gens, ring)?));
            }
            bail!("cannot parse selector `{other}`: expected spec, max, min, idx:..., or minover:...")
        }
    }
}

#[derive(Debug, Clone)]
enum ElemAst {
    Int(usize),
    Tuple(Vec<ElemAst>),
}

fn split_top_commas(input: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in input.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&input[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&input[start..]);
    parts
}

fn parse_elem_ast(text: &str) -> Result<ElemAst> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| anyhow!("unbalanced parentheses in `{text}`"))?;
        let parts = split_top_commas(inner)
            .into_iter()
            .map(parse_elem_ast)
            .collect::<Result<Vec<_>>>()?;
        return Ok(ElemAst::Tuple(parts));
    }
    Ok(ElemAst::Int(text.parse().with_context(|| format!("bad element `{text}`"))?))
}

fn spec_size(spec: &RingSpec) -> Result<usize> {
    Ok(match spec {
        RingSpec::Modular { n } => *n,
        RingSpec::PolyQuotient { p, f } => p.pow((f.len().saturating_sub(1)) as u32),
        RingSpec::Product(parts) => {
            let mut size = 1usize;
            for part in parts {
                size = size
                    .checked_mul(spec_size(part)?)
                    .ok_or_else(|| anyhow!("product carrier overflows"))?;
            }
            size
        }
        RingSpec::Table { size, .. } => *size,
    })
}

/// Map one element AST onto its canonical index for `spec`.
fn encode_elem(ast: &ElemAst, spec: &RingSpec) -> Result<usize> {
    match (ast, spec) {
        (ElemAst::Int(v), RingSpec::Modular { n }) => Ok(v % n),
        (ElemAst::Int(v), RingSpec::Table { size, .. }) => {
            if v >= size {
                bail!("index {v} out of range for a table ring of size {size}");
            }
            Ok(*v)
        }
        (ElemAst::Tuple(coeffs), RingSpec::PolyQuotient { p, f }) => {
            let deg = f.len().saturating_sub(1);
            if coeffs.len() > deg {
                bail!("coefficient tuple longer than the quotient degree {deg}");
            }
            let mut index = 0usize;
            for (i, c) in coeffs.iter().enumerate() {
                let ElemAst::Int(c) = c else { bail!("polynomial coefficients must be integers") };
                index += (c % p) * p.pow(i as u32);
            }
            Ok(index)
        }
        (ElemAst::Int(v), RingSpec::PolyQuotient { p, f }) => {
            // a bare integer means the constant polynomial
            let _ = f;
            Ok(v % p)
        }
        (ElemAst::Tuple(coords), RingSpec::Product(parts)) => {
            if coords.len() != parts.len() {
                bail!("tuple arity {} does not match {} factors", coords.len(), parts.len());
            }
            let mut index = 0usize;
            for (coord, part) in coords.iter().zip(parts) {
                index = index * spec_size(part)? + encode_elem(coord, part)?;
            }
            Ok(index)
        }
        (ElemAst::Tuple(_), _) => bail!("tuple element given for a non-product, non-polynomial ring"),
        (ElemAst::Int(_), RingSpec::Product(_)) => {
            bail!("product ring elements must be written as tuples")
        }
    }
}

/// Parse a comma-separated generator list in the ring's canonical element
/// encoding. An empty string denotes the zero ideal.
pub fn parse_gens(input: &str, ring: &RingSpec) -> Result<Vec<usize>> {
    let input = input.trim();
    if input.is_empty() {
        return Ok(Vec::new());
    }
    split_top_commas(input)
        .into_iter()
        .map(|t| encode_elem(&parse_elem_ast(t)?, ring))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_grammar() {
        assert_eq!(parse_ring_spec("Z/12").unwrap(), RingSpec::Modular { n: 12 });
        assert_eq!(
            parse_ring_spec("GF(2)[x]/(x^2+x+1)").unwrap(),
            RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }
        );
        assert_eq!(
            parse_ring_spec("Z/2 x Z/4").unwrap(),
            RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 4 }])
        );
        assert_eq!(
            parse_ring_spec("GF(3)[x]/(x^2) x Z/2").unwrap(),
            RingSpec::Product(vec![
                RingSpec::PolyQuotient { p: 3, f: vec![0, 0, 1] },
                RingSpec::Modular { n: 2 }
            ])
        );
        assert!(parse_ring_spec("Z/0").is_err());
        assert!(parse_ring_spec("Q").is_err());
    }

    #[test]
    fn gens_encoding() {
        let z12 = RingSpec::Modular { n: 12 };
        assert_eq!(parse_gens("4", &z12).unwrap(), vec![4]);
        assert_eq!(parse_gens("4, 6", &z12).unwrap(), vec![4, 6]);
        assert_eq!(parse_gens("", &z12).unwrap(), Vec::<usize>::new());

        let gf4 = RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] };
        assert_eq!(parse_gens("(0,1)", &gf4).unwrap(), vec![2]);
        assert_eq!(parse_gens("(1,1)", &gf4).unwrap(), vec![3]);

        let prod = RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 4 }]);
        assert_eq!(parse_gens("(1,3)", &prod).unwrap(), vec![7]);
        assert_eq!(parse_gens("(0,1),(1,0)", &prod).unwrap(), vec![1, 4]);
        assert!(parse_gens("3", &prod).is_err());
    }

    #[test]
    fn selector_forms() {
        let z12 = RingSpec::Modular { n: 12 };
        assert_eq!(parse_selector("spec", &z12).unwrap(), YSelector::Spec);
        assert_eq!(parse_selector("idx:0,1", &z12).unwrap(), YSelector::Indices(vec![0, 1]));
        assert_eq!(parse_selector("minover:4", &z12).unwrap(), YSelector::MinOver(vec![4]));
        assert!(parse_selector("everything", &z12).is_err());
    }
}

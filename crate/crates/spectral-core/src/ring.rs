//! Finite commutative rings with unity, given by total operation tables.
//!
//! Carriers are indexed `0..size`. The index encoding is fixed per
//! constructor so that every downstream enumeration is deterministic:
//!
//! * modular ring `Z/n`: index = residue;
//! * polynomial quotient `GF(p)[x]/(f)`: index = the base-`p` numeral whose
//!   digit `i` is the coefficient of `x^i`;
//! * product: mixed radix, first factor most significant;
//! * table ring: whatever the ingested table says, validated eagerly.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};

/// Element index into a ring carrier.
pub type Elem = usize;

/// Recipe for a ring. `build_ring` turns one of these into operation tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingSpec {
    /// `Z/n`, residues `0..n`.
    Modular { n: usize },
    /// `GF(p)[x]/(f)` with `f` monic of degree >= 1; `f[i]` is the
    /// coefficient of `x^i`.
    PolyQuotient { p: usize, f: Vec<usize> },
    /// Direct product of the listed rings.
    Product(Vec<RingSpec>),
    /// Explicit tables, validated against all ring laws at build time.
    Table {
        size: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Modular { n } => write!(f, "Z/{n}"),
            RingSpec::PolyQuotient { p, f: poly } => {
                write!(f, "GF({p})[x]/({})", poly_label(poly))
            }
            RingSpec::Product(parts) => {
                let labels: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", labels.join(" x "))
            }
            RingSpec::Table { size, .. } => write!(f, "table({size})"),
        }
    }
}

fn poly_label(coeffs: &[usize]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (deg, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// A finite commutative ring with unity. Immutable once built; share it
/// behind an `Arc` across workers.
#[derive(Debug, Clone)]
pub struct Ring {
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Elem,
    spec: RingSpec,
    labels: Vec<String>,
}

/// Flags from the exhaustive witness search over a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementClassSet {
    pub unit: bool,
    pub idempotent: bool,
    pub nilpotent: bool,
    pub zero_divisor: bool,
    pub regular: bool,
}

/// A validated ring homomorphism given element-wise.
#[derive(Debug, Clone)]
pub struct Hom {
    pub source: Arc<Ring>,
    pub target: Arc<Ring>,
    pub map: Vec<Elem>,
}

impl Ring {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn label(&self) -> String {
        self.spec.to_string()
    }

    pub fn elem_label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn check_index(&self, a: Elem) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                size: self.size,
            })
        }
    }

    /// `a^k` with `k >= 1`.
    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Exhaustive verification of all commutative-ring-with-unity laws.
    /// `O(size^3)`; run eagerly on ingested tables and by the test suite
    /// on constructed rings.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return Err(Error::AxiomViolation { law: "additive identity", a, b: self.zero, c: 0 });
            }
            if self.mul(a, self.one) != a {
                return Err(Error::AxiomViolation { law: "multiplicative identity", a, b: self.one, c: 0 });
            }
            if self.add(a, self.neg(a)) != self.zero {
                return Err(Error::AxiomViolation { law: "additive inverse", a, b: self.neg(a), c: 0 });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::AxiomViolation { law: "addition commutes", a, b, c: 0 });
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::AxiomViolation { law: "multiplication commutes", a, b, c: 0 });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(Error::AxiomViolation { law: "addition associates", a, b, c });
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::AxiomViolation { law: "multiplication associates", a, b, c });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::AxiomViolation { law: "distributivity", a, b, c });
                    }
                }
            }
        }
        if self.size > 1 && self.zero == self.one {
            return Err(Error::AxiomViolation { law: "zero differs from one", a: self.zero, b: self.one, c: 0 });
        }
        Ok(())
    }
}

fn derive_neg(size: usize, add: &[Elem], zero: Elem) -> Result<Vec<Elem>> {
    let mut neg = vec![usize::MAX; size];
    for a in 0..size {
        for b in 0..size {
            if add[a * size + b] == zero {
                neg[a] = b;
                break;
            }
        }
        if neg[a] == usize::MAX {
            return Err(Error::AxiomViolation { law: "additive inverse", a, b: 0, c: 0 });
        }
    }
    Ok(neg)
}

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Build a ring from a spec, enforcing the carrier cap.
/// Carrier size a spec will produce, without building any tables.
fn carrier_size(spec: &RingSpec) -> Option<usize> {
    match spec {
        RingSpec::Modular { n } => Some(*n),
        RingSpec::PolyQuotient { p, f } => {
            p.checked_pow(u32::try_from(f.len().saturating_sub(1)).ok()?)
        }
        RingSpec::Product(parts) => {
            parts.iter().try_fold(1usize, |acc, p| acc.checked_mul(carrier_size(p)?))
        }
        RingSpec::Table { size, .. } => Some(*size),
    }
}

pub fn build_ring(spec: &RingSpec, caps: &Caps) -> Result<Arc<Ring>> {
    // reject oversized carriers before any table is allocated
    let size = carrier_size(spec)
        .ok_or(Error::SizeCapExceeded { size: usize::MAX, cap: caps.carrier })?;
    if size > caps.carrier {
        return Err(Error::SizeCapExceeded { size, cap: caps.carrier });
    }
    let ring = match spec {
        RingSpec::Modular { n } => build_modular(*n)?,
        RingSpec::PolyQuotient { p, f } => build_poly_quotient(*p, f)?,
        RingSpec::Product(parts) => build_product(parts, caps)?,
        RingSpec::Table { size, add, mul, zero, one } => {
            build_table(*size, add, mul, *zero, *one, spec.clone())?
        }
    };
    Ok(Arc::new(ring))
}

fn build_modular(n: usize) -> Result<Ring> {
    if n == 0 {
        return Err(Error::BadTable("modulus must be >= 1".into()));
    }
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = (a + b) % n;
            mul[a * n + b] = (a * b) % n;
        }
    }
    let neg = (0..n).map(|a| (n - a) % n).collect();
    Ok(Ring {
        size: n,
        add,
        mul,
        neg,
        zero: 0,
        one: 1 % n,
        spec: RingSpec::Modular { n },
        labels: (0..n).map(|a| a.to_string()).collect(),
    })
}

fn build_poly_quotient(p: usize, f: &[usize]) -> Result<Ring> {
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let deg = f.len().saturating_sub(1);
    if deg < 1 || f[deg] != 1 || f.iter().any(|&c| c >= p) {
        return Err(Error::BadPolynomial);
    }
    let size = p.checked_pow(deg as u32).ok_or(Error::SizeCapExceeded { size: usize::MAX, cap: 0 })?;

    // index <-> coefficient vector: digit i (base p) = coefficient of x^i
    let digits = |mut v: usize| -> Vec<usize> {
        let mut out = vec![0; deg];
        for d in out.iter_mut() {
            *d = v % p;
            v /= p;
        }
        out
    };
    let pack = |coeffs: &[usize]| -> usize {
        coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    };

    // reduce an arbitrary-degree coefficient vector mod f, then mod p
    let reduce = |mut cs: Vec<usize>| -> Vec<usize> {
        for c in cs.iter_mut() {
            *c %= p;
        }
        while cs.len() > deg {
            let top = cs.pop().unwrap();
            if top == 0 {
                continue;
            }
            let shift = cs.len() - deg;
            for i in 0..deg {
                // subtract top * f[i] * x^(i+shift)
                let sub = (top * f[i]) % p;
                cs[i + shift] = (cs[i + shift] + p - sub) % p;
            }
        }
        cs.resize(deg, 0);
        cs
    };

    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        let da = digits(a);
        for b in 0..size {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * size + b] = pack(&sum);
            let mut prod = vec![0; 2 * deg];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            mul[a * size + b] = pack(&reduce(prod));
        }
    }
    let neg = derive_neg(size, &add, 0)?;
    let labels = (0..size).map(|a| poly_label(&digits(a))).collect();
    Ok(Ring {
        size,
        add,
        mul,
        neg,
        zero: 0,
        one: 1,
        spec: RingSpec::PolyQuotient { p, f: f.to_vec() },
        labels,
    })
}

fn build_product(parts: &[RingSpec], caps: &Caps) -> Result<Ring> {
    if parts.is_empty() {
        return Err(Error::BadTable("product of no rings".into()));
    }
    let factors: Vec<Arc<Ring>> = parts.iter().map(|s| build_ring(s, caps)).collect::<Result<_>>()?;
    let size = factors.iter().try_fold(1usize, |acc, r| {
        let next = acc.checked_mul(r.size)?;
        (next <= caps.carrier).then_some(next)
    });
    let size = size.ok_or(Error::SizeCapExceeded { size: usize::MAX, cap: caps.carrier })?;

    // mixed radix, first factor most significant
    let split = |mut v: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (slot, r) in out.iter_mut().zip(&factors).rev() {
            *slot = v % r.size;
            v /= r.size;
        }
        out
    };
    let join = |coords: &[usize]| -> usize {
        coords.iter().zip(&factors).fold(0, |acc, (&c, r)| acc * r.size + c)
    };

    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        let ca = split(a);
        for b in 0..size {
            let cb = split(b);
            let s: Vec<usize> = ca.iter().zip(&cb).zip(&factors).map(|((&x, &y), r)| r.add(x, y)).collect();
            let p: Vec<usize> = ca.iter().zip(&cb).zip(&factors).map(|((&x, &y), r)| r.mul(x, y)).collect();
            add[a * size + b] = join(&s);
            mul[a * size + b] = join(&p);
        }
    }
    let zero = join(&factors.iter().map(|r| r.zero).collect::<Vec<_>>());
    let one = join(&factors.iter().map(|r| r.one).collect::<Vec<_>>());
    let neg = derive_neg(size, &add, zero)?;
    let labels = (0..size)
        .map(|a| {
            let coords = split(a);
            let parts: Vec<&str> = coords.iter().zip(&factors).map(|(&c, r)| r.elem_label(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(Ring {
        size,
        add,
        mul,
        neg,
        zero,
        one,
        spec: RingSpec::Product(parts.to_vec()),
        labels,
    })
}

fn build_table(
    size: usize,
    add_rows: &[Vec<usize>],
    mul_rows: &[Vec<usize>],
    zero: usize,
    one: usize,
    spec: RingSpec,
) -> Result<Ring> {
    if size == 0 {
        return Err(Error::BadTable("empty carrier".into()));
    }
    if add_rows.len() != size || mul_rows.len() != size {
        return Err(Error::BadTable("table row count differs from size".into()));
    }
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for rows in [add_rows, mul_rows] {
        for row in rows {
            if row.len() != size {
                return Err(Error::BadTable("table row length differs from size".into()));
            }
            for &v in row {
                if v >= size {
                    return Err(Error::BadTable(format!("entry {v} out of range")));
                }
            }
        }
    }
    for row in add_rows {
        add.extend_from_slice(row);
    }
    for row in mul_rows {
        mul.extend_from_slice(row);
    }
    if zero >= size || one >= size {
        return Err(Error::BadTable("zero/one out of range".into()));
    }
    let neg = derive_neg(size, &add, zero)?;
    let ring = Ring {
        size,
        add,
        mul,
        neg,
        zero,
        one,
        spec,
        labels: (0..size).map(|a| a.to_string()).collect(),
    };
    ring.verify_axioms()?;
    Ok(ring)
}

/// Build a table ring over an explicit carrier relabeling of `parent`.
/// `carrier[i]` is the parent element playing index `i`; the carrier must
/// already be closed under the parent operations.
fn table_on_subset(parent: &Ring, carrier: &[Elem], spec_label: RingSpec) -> Result<Ring> {
    let size = carrier.len();
    let pos = |x: Elem| carrier.iter().position(|&c| c == x);
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for (i, &a) in carrier.iter().enumerate() {
        for (j, &b) in carrier.iter().enumerate() {
            add[i * size + j] = pos(parent.add(a, b))
                .ok_or(Error::NotClosed { op: "addition", a, b })?;
            mul[i * size + j] = pos(parent.mul(a, b))
                .ok_or(Error::NotClosed { op: "multiplication", a, b })?;
        }
    }
    let zero = pos(parent.zero).ok_or(Error::NotClosed { op: "zero", a: parent.zero, b: 0 })?;
    let one = pos(parent.one).ok_or(Error::MissingUnity)?;
    let neg = derive_neg(size, &add, zero)?;
    Ok(Ring {
        size,
        add,
        mul,
        neg,
        zero,
        one,
        spec: spec_label,
        labels: carrier.iter().map(|&a| parent.elem_label(a).to_string()).collect(),
    })
}

/// Arithmetic on validated indices; `b` must be present exactly for the
/// binary operations.
pub fn elem_arith(ring: &Ring, op: ArithOp, a: Elem, b: Option<Elem>) -> Result<Elem> {
    ring.check_index(a)?;
    if let Some(b) = b {
        ring.check_index(b)?;
    }
    match (op, b) {
        (ArithOp::Add, Some(b)) => Ok(ring.add(a, b)),
        (ArithOp::Mul, Some(b)) => Ok(ring.mul(a, b)),
        (ArithOp::Neg, None) => Ok(ring.neg(a)),
        _ => Err(Error::Precondition("operand count does not match the operation".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

/// Flags by exhaustive witness search:
/// unit `ab=1`, regular `a=a^2 b`, zero divisor `a != 0` and `ab=0` for some
/// `b != 0`, nilpotent `a^k = 0` for some `k <= size`, idempotent `a^2 = a`.
pub fn classify_element(ring: &Ring, a: Elem) -> Result<ElementClassSet> {
    ring.check_index(a)?;
    let unit = ring.elems().any(|b| ring.mul(a, b) == ring.one());
    let regular = ring.elems().any(|b| ring.mul(ring.mul(a, a), b) == a);
    let zero_divisor =
        a != ring.zero() && ring.elems().any(|b| b != ring.zero() && ring.mul(a, b) == ring.zero());
    let idempotent = ring.mul(a, a) == a;
    let mut nilpotent = false;
    let mut power = a;
    for _ in 0..ring.size() {
        if power == ring.zero() {
            nilpotent = true;
            break;
        }
        power = ring.mul(power, a);
    }
    Ok(ElementClassSet { unit, idempotent, nilpotent, zero_divisor, regular })
}

/// Validate a homomorphism table: zero to zero, one to one, and both
/// operation laws over all pairs.
pub fn build_hom(source: Arc<Ring>, target: Arc<Ring>, map: Vec<Elem>) -> Result<Hom> {
    if map.len() != source.size() {
        return Err(Error::Precondition("map length differs from source size".into()));
    }
    for &v in &map {
        target.check_index(v)?;
    }
    if map[source.zero()] != target.zero() {
        return Err(Error::HomViolation { law: "zero maps to zero", a: source.zero(), b: 0 });
    }
    if map[source.one()] != target.one() {
        return Err(Error::HomViolation { law: "one maps to one", a: source.one(), b: 0 });
    }
    for a in source.elems() {
        for b in source.elems() {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Err(Error::HomViolation { law: "additivity", a, b });
            }
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(Error::HomViolation { law: "multiplicativity", a, b });
            }
        }
    }
    Ok(Hom { source, target, map })
}

/// Build the subring on `subset` (which must contain 0 and 1 and be closed
/// under the ring operations) together with its inclusion homomorphism.
pub fn build_subring(ring: &Arc<Ring>, subset: &[Elem]) -> Result<(Arc<Ring>, Hom)> {
    let mut carrier: Vec<Elem> = subset.to_vec();
    carrier.sort_unstable();
    carrier.dedup();
    for &a in &carrier {
        ring.check_index(a)?;
    }
    if !carrier.contains(&ring.one()) {
        return Err(Error::MissingUnity);
    }
    if !carrier.contains(&ring.zero()) {
        return Err(Error::NotClosed { op: "zero membership", a: ring.zero(), b: 0 });
    }
    for &a in &carrier {
        if !carrier.contains(&ring.neg(a)) {
            return Err(Error::NotClosed { op: "negation", a, b: 0 });
        }
        for &b in &carrier {
            if !carrier.contains(&ring.add(a, b)) {
                return Err(Error::NotClosed { op: "addition", a, b });
            }
            if !carrier.contains(&ring.mul(a, b)) {
                return Err(Error::NotClosed { op: "multiplication", a, b });
            }
        }
    }
    let sub = Arc::new(table_on_subset(
        ring,
        &carrier,
        RingSpec::Table {
            size: carrier.len(),
            add: Vec::new(),
            mul: Vec::new(),
            zero: 0,
            one: 0,
        },
    )?);
    let hom = build_hom(Arc::clone(&sub), Arc::clone(ring), carrier)?;
    Ok((sub, hom))
}

/// Close a subset under 1, negation, addition and multiplication; the
/// smallest subring containing `seed`.
pub fn subring_closure(ring: &Ring, seed: &[Elem]) -> Vec<Elem> {
    let mut in_set = vec![false; ring.size()];
    let mut queue: Vec<Elem> = Vec::new();
    let push = |x: Elem, in_set: &mut Vec<bool>, queue: &mut Vec<Elem>| {
        if !in_set[x] {
            in_set[x] = true;
            queue.push(x);
        }
    };
    push(ring.zero(), &mut in_set, &mut queue);
    push(ring.one(), &mut in_set, &mut queue);
    for &s in seed {
        push(s, &mut in_set, &mut queue);
    }
    let mut members: Vec<Elem> = Vec::new();
    while let Some(x) = queue.pop() {
        members.push(x);
        push(ring.neg(x), &mut in_set, &mut queue);
        for &y in &members {
            push(ring.add(x, y), &mut in_set, &mut queue);
            push(ring.mul(x, y), &mut in_set, &mut queue);
        }
    }
    members.sort_unstable();
    members
}

/// All subrings of `ring` that share its unity, smallest first. Found by
/// closing the prime subring and repeatedly adjoining single elements.
pub fn all_subrings(ring: &Arc<Ring>) -> Vec<Vec<Elem>> {
    let mut found: Vec<Vec<Elem>> = vec![subring_closure(ring, &[])];
    let mut frontier = found.clone();
    while let Some(base) = frontier.pop() {
        for x in ring.elems() {
            if base.contains(&x) {
                continue;
            }
            let mut seed = base.clone();
            seed.push(x);
            let closed = subring_closure(ring, &seed);
            if !found.contains(&closed) {
                found.push(closed.clone());
                frontier.push(closed);
            }
        }
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found
}

/// Quotient ring `R/I` as a table ring on cosets, with the projection
/// homomorphism. Cosets are labelled by their least representative and
/// ordered by it.
pub fn quotient_ring(ring: &Arc<Ring>, ideal_members: &[bool]) -> Result<(Arc<Ring>, Hom)> {
    let n = ring.size();
    if ideal_members.len() != n {
        return Err(Error::RingMismatch);
    }
    let mut coset_rep = vec![usize::MAX; n];
    let mut reps: Vec<Elem> = Vec::new();
    for a in ring.elems() {
        if coset_rep[a] != usize::MAX {
            continue;
        }
        // a + I, represented by its least member a (ascending scan)
        reps.push(a);
        for i in ring.elems().filter(|&i| ideal_members[i]) {
            let m = ring.add(a, i);
            if coset_rep[m] == usize::MAX {
                coset_rep[m] = a;
            }
        }
        coset_rep[a] = a;
    }
    let rank = |rep: Elem| reps.iter().position(|&r| r == rep).unwrap();
    let size = reps.len();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * size + j] = rank(coset_rep[ring.add(a, b)]);
            mul[i * size + j] = rank(coset_rep[ring.mul(a, b)]);
        }
    }
    let zero = rank(coset_rep[ring.zero()]);
    let one = rank(coset_rep[ring.one()]);
    let neg = derive_neg(size, &add, zero)?;
    let labels = reps.iter().map(|&r| format!("[{}]", ring.elem_label(r))).collect();
    let quotient = Arc::new(Ring {
        size,
        add,
        mul,
        neg,
        zero,
        one,
        spec: RingSpec::Table { size, add: Vec::new(), mul: Vec::new(), zero, one },
        labels,
    });
    let map: Vec<Elem> = ring.elems().map(|a| rank(coset_rep[a])).collect();
    let hom = build_hom(Arc::clone(ring), Arc::clone(&quotient), map)?;
    Ok((quotient, hom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn zn(n: usize) -> Arc<Ring> {
        build_ring(&RingSpec::Modular { n }, &caps()).unwrap()
    }

    #[test]
    fn modular_six() {
        let r = zn(6);
        assert_eq!(r.size(), 6);
        assert_eq!(r.zero(), 0);
        assert_eq!(r.one(), 1);
        assert_eq!(elem_arith(&r, ArithOp::Add, 2, Some(5)).unwrap(), 1);
        assert_eq!(elem_arith(&r, ArithOp::Mul, 4, Some(4)).unwrap(), 4);
        assert_eq!(elem_arith(&r, ArithOp::Neg, 2, None).unwrap(), 4);
        assert!(elem_arith(&r, ArithOp::Add, 2, Some(9)).is_err());
        r.verify_axioms().unwrap();
    }

    #[test]
    fn gf4_every_nonzero_element_is_a_unit() {
        let r = build_ring(&RingSpec::PolyQuotient { p: 2, f: vec![1, 1, 1] }, &caps()).unwrap();
        assert_eq!(r.size(), 4);
        r.verify_axioms().unwrap();
        for a in 1..4 {
            assert!(classify_element(&r, a).unwrap().unit, "element {a} should be a unit");
        }
        assert!(!classify_element(&r, 0).unwrap().unit);
    }

    #[test]
    fn table_with_broken_identity_is_rejected() {
        // 2-element table where 1*1 = 0
        let spec = RingSpec::Table {
            size: 2,
            add: vec![vec![0, 1], vec![1, 0]],
            mul: vec![vec![0, 0], vec![0, 0]],
            zero: 0,
            one: 1,
        };
        match build_ring(&spec, &caps()) {
            Err(Error::AxiomViolation { law, .. }) => assert_eq!(law, "multiplicative identity"),
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn classify_in_z6_and_z4() {
        let r6 = zn(6);
        let c = classify_element(&r6, 3).unwrap();
        assert!(c.idempotent && c.zero_divisor && c.regular);
        assert!(!c.unit && !c.nilpotent);

        let r4 = zn(4);
        let c = classify_element(&r4, 2).unwrap();
        assert!(c.nilpotent && c.zero_divisor);
        assert!(!c.regular && !c.unit && !c.idempotent);

        let c = classify_element(&r4, 1).unwrap();
        assert!(c.unit && c.idempotent && c.regular);
    }

    #[test]
    fn canonical_projection_is_a_hom() {
        let r12 = zn(12);
        let r6 = zn(6);
        let map: Vec<usize> = (0..12).map(|a| a % 6).collect();
        build_hom(Arc::clone(&r12), Arc::clone(&r6), map).unwrap();

        let ident: Vec<usize> = (0..6).collect();
        build_hom(Arc::clone(&r6), Arc::clone(&r6), ident).unwrap();

        let r4 = zn(4);
        let r2 = zn(2);
        build_hom(Arc::clone(&r4), Arc::clone(&r2), vec![0, 1, 0, 1]).unwrap();
        match build_hom(r4, r2, vec![0, 0, 0, 0]) {
            Err(Error::HomViolation { law, .. }) => assert_eq!(law, "one maps to one"),
            other => panic!("expected hom violation, got {other:?}"),
        }
    }

    #[test]
    fn subring_needs_the_shared_unity() {
        let r6 = zn(6);
        assert!(matches!(build_subring(&r6, &[0, 3]), Err(Error::MissingUnity)));
        let (sub, _) = build_subring(&r6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(sub.size(), 6);
    }

    #[test]
    fn diagonal_subring_of_z2_squared() {
        let prod = build_ring(
            &RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 2 }]),
            &caps(),
        )
        .unwrap();
        // (0,0) has index 0, (1,1) has index 3
        let (sub, emb) = build_subring(&prod, &[0, 3]).unwrap();
        assert_eq!(sub.size(), 2);
        sub.verify_axioms().unwrap();
        assert_eq!(emb.map, vec![0, 3]);
    }

    #[test]
    fn product_unit_count_multiplies() {
        let units = |r: &Ring| r.elems().filter(|&a| classify_element(r, a).unwrap().unit).count();
        let a = zn(6);
        let b = zn(4);
        let prod = build_ring(
            &RingSpec::Product(vec![RingSpec::Modular { n: 6 }, RingSpec::Modular { n: 4 }]),
            &caps(),
        )
        .unwrap();
        assert_eq!(units(&prod), units(&a) * units(&b));
    }

    #[test]
    fn quotient_of_z12_by_six_is_z6() {
        let r12 = zn(12);
        let members: Vec<bool> = (0..12).map(|a| a % 6 == 0).collect();
        let (q, proj) = quotient_ring(&r12, &members).unwrap();
        assert_eq!(q.size(), 6);
        q.verify_axioms().unwrap();
        assert_eq!(proj.map[7], proj.map[1]);
        assert_ne!(proj.map[7], proj.map[2]);
    }

    #[test]
    fn subring_enumeration_finds_the_proper_ones() {
        let r = build_ring(
            &RingSpec::Product(vec![RingSpec::Modular { n: 2 }, RingSpec::Modular { n: 4 }]),
            &caps(),
        )
        .unwrap();
        let subs = all_subrings(&r);
        // the closure of (1,1) and the full ring
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].len(), 4);
        assert_eq!(subs[1].len(), 8);

        // Z/n has no proper subring containing 1
        let z9 = zn(9);
        assert_eq!(all_subrings(&z9).len(), 1);
    }

    #[test]
    fn nonprime_modulus_for_poly_quotient_is_rejected() {
        let err = build_ring(&RingSpec::PolyQuotient { p: 4, f: vec![1, 0, 1] }, &caps());
        assert_eq!(err.unwrap_err(), Error::NonPrimeModulus(4));
        let err = build_ring(&RingSpec::PolyQuotient { p: 2, f: vec![1] }, &caps());
        assert_eq!(err.unwrap_err(), Error::BadPolynomial);
        let err = build_ring(&RingSpec::PolyQuotient { p: 3, f: vec![1, 2, 2] }, &caps());
        assert_eq!(err.unwrap_err(), Error::BadPolynomial, "non-monic remainder polynomial");
    }
}

#[cfg(test)]
mod cap_tests {
    use super::*;

    #[test]
    fn oversized_carriers_are_rejected_before_allocation() {
        let caps = Caps::default();
        // 2^13 = 8192 > 4096
        let spec = RingSpec::PolyQuotient { p: 2, f: {
            let mut f = vec![0; 14];
            f[13] = 1;
            f
        }};
        assert!(matches!(build_ring(&spec, &caps), Err(Error::SizeCapExceeded { size: 8192, .. })));
        let spec = RingSpec::Modular { n: 5000 };
        assert!(matches!(build_ring(&spec, &caps), Err(Error::SizeCapExceeded { .. })));
        // the cap is overridable
        let caps = Caps::with_overrides("carrier=5000").unwrap();
        assert!(build_ring(&RingSpec::Modular { n: 5000 }, &caps).is_ok());
    }
}

//! Exact arithmetic for finite commutative rings with identity: `Z_n`,
//! `GF(p^n)` and finite products of those.
//!
//! Elements are stored as an index in `[0, |R|)`. The index is the canonical
//! encoding: the residue for `Z_n`, the base-`p` reading of the coefficient
//! vector (constant term most significant) for `GF(p^n)`, and the mixed-radix
//! reading of the component tuple (first component most significant) for
//! products. Index order therefore coincides with lexicographic order of the
//! encodings.

mod crt;
pub mod poly;
mod spec;

use std::fmt;

pub use crt::{crt_map, CrtMap};
pub use spec::RingSpec;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;
pub const DEFAULT_MAX_DEGREE: u32 = 8;
/// Rings up to this order carry precomputed addition and multiplication tables.
const TABLE_MAX_ORDER: u32 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingLimits {
    pub max_order: u64,
    pub max_degree: u32,
}

impl Default for RingLimits {
    fn default() -> Self {
        RingLimits {
            max_order: DEFAULT_MAX_ORDER,
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// Identifies the ring an element belongs to. Two handles built from the same
/// resolved spec share an id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    ring: RingId,
    value: u32,
}

impl Elem {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn ring(self) -> RingId {
        self.ring
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingCensus {
    pub order: u64,
    pub units: Vec<Elem>,
    pub zero_divisors: Vec<Elem>,
    pub zero: Elem,
    pub one: Elem,
}

#[derive(Clone, Debug)]
enum Kind {
    ZMod {
        n: u32,
    },
    Galois {
        p: u32,
        degree: u32,
        modulus: Vec<u32>,
    },
    Product {
        factors: Vec<Ring>,
        strides: Vec<u32>,
    },
}

#[derive(Clone, Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// Immutable arithmetic handle for a finite commutative ring.
#[derive(Clone, Debug)]
pub struct Ring {
    spec: RingSpec,
    id: RingId,
    order: u32,
    one: u32,
    kind: Kind,
    unit: Vec<bool>,
    unit_count: u32,
    tables: Option<Tables>,
}

fn fnv1a(s: &str) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    for b in s.bytes() {
        h ^= b as u32;
        h = h.wrapping_mul(0x0100_0193);
    }
    h
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn cap_check(order: u128, limits: &RingLimits) -> Result<()> {
    if order > limits.max_order as u128 {
        return Err(Error::CapExceeded {
            what: "ring order",
            size: order,
            cap: limits.max_order as u128,
        });
    }
    Ok(())
}

impl Ring {
    pub fn new(spec: &RingSpec) -> Result<Ring> {
        Ring::with_limits(spec, RingLimits::default())
    }

    pub fn with_limits(spec: &RingSpec, limits: RingLimits) -> Result<Ring> {
        let (resolved, kind, order, one) = Ring::resolve(spec, &limits, true)?;
        Ok(Ring::finish(resolved, kind, order, one))
    }

    pub fn parse(spec: &str) -> Result<Ring> {
        Ring::new(&spec.parse()?)
    }

    fn resolve(
        spec: &RingSpec,
        limits: &RingLimits,
        top: bool,
    ) -> Result<(RingSpec, Kind, u32, u32)> {
        match spec {
            RingSpec::ZMod(n) => {
                if *n < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "modulus {n} must be at least 2"
                    )));
                }
                cap_check(*n as u128, limits)?;
                let n = *n as u32;
                Ok((spec.clone(), Kind::ZMod { n }, n, 1))
            }
            RingSpec::GaloisField { p, degree, modulus } => {
                if !poly::is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if *degree == 0 {
                    return Err(Error::InvalidSpec("field degree must be at least 1".into()));
                }
                if *degree > limits.max_degree {
                    return Err(Error::CapExceeded {
                        what: "field degree",
                        size: *degree as u128,
                        cap: limits.max_degree as u128,
                    });
                }
                let order = (*p as u128).checked_pow(*degree).unwrap_or(u128::MAX);
                cap_check(order, limits)?;
                let p32 = *p as u32;
                let modulus = match modulus {
                    Some(m) => {
                        if m.len() != *degree as usize + 1 {
                            return Err(Error::InvalidModulus(format!(
                                "expected {} coefficients, got {}",
                                degree + 1,
                                m.len()
                            )));
                        }
                        if m.iter().any(|&c| c >= p32) {
                            return Err(Error::InvalidModulus(format!(
                                "coefficient out of range for Z_{p}"
                            )));
                        }
                        if m[*degree as usize] != 1 {
                            return Err(Error::InvalidModulus("not monic".into()));
                        }
                        if !poly::is_irreducible(m, p32) {
                            return Err(Error::InvalidModulus("reducible".into()));
                        }
                        m.clone()
                    }
                    None => poly::find_irreducible(*p, *degree, limits.max_degree)?,
                };
                let resolved = RingSpec::GaloisField {
                    p: *p,
                    degree: *degree,
                    modulus: if *degree == 1 {
                        None
                    } else {
                        Some(modulus.clone())
                    },
                };
                let one = (*p as u32).pow(*degree - 1);
                Ok((
                    resolved,
                    Kind::Galois {
                        p: p32,
                        degree: *degree,
                        modulus,
                    },
                    order as u32,
                    one,
                ))
            }
            RingSpec::Product(parts) => {
                if !top {
                    return Err(Error::InvalidSpec(
                        "nested products are not supported".into(),
                    ));
                }
                if parts.is_empty() {
                    return Err(Error::InvalidSpec("empty product".into()));
                }
                let mut factors = Vec::with_capacity(parts.len());
                let mut order: u128 = 1;
                for part in parts {
                    let (resolved, kind, o, one) = Ring::resolve(part, limits, false)?;
                    order = order.saturating_mul(o as u128);
                    cap_check(order, limits)?;
                    factors.push(Ring::finish(resolved, kind, o, one));
                }
                let mut strides = vec![1u32; factors.len()];
                for k in (0..factors.len().saturating_sub(1)).rev() {
                    strides[k] = strides[k + 1] * factors[k + 1].order;
                }
                let one = factors.iter().zip(&strides).map(|(f, s)| f.one * s).sum();
                let resolved = RingSpec::Product(factors.iter().map(|f| f.spec.clone()).collect());
                Ok((
                    resolved,
                    Kind::Product { factors, strides },
                    order as u32,
                    one,
                ))
            }
        }
    }

    fn finish(spec: RingSpec, kind: Kind, order: u32, one: u32) -> Ring {
        let id = RingId(fnv1a(&spec.to_string()));
        let mut ring = Ring {
            spec,
            id,
            order,
            one,
            kind,
            unit: Vec::new(),
            unit_count: 0,
            tables: None,
        };
        ring.unit = (0..order).map(|v| ring.unit_raw(v)).collect();
        ring.unit_count = ring.unit.iter().filter(|&&u| u).count() as u32;
        if order <= TABLE_MAX_ORDER {
            let n = order as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..order {
                for b in 0..order {
                    add[a as usize * n + b as usize] = ring.add_raw(a, b);
                    mul[a as usize * n + b as usize] = ring.mul_raw(a, b);
                }
            }
            let neg = (0..order).map(|a| ring.neg_raw(a)).collect();
            ring.tables = Some(Tables { add, mul, neg });
        }
        ring
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn unit_count(&self) -> u64 {
        self.unit_count as u64
    }

    /// Number of nonzero zero divisors.
    pub fn zero_divisor_count(&self) -> u64 {
        self.order as u64 - self.unit_count as u64 - 1
    }

    pub fn is_field(&self) -> bool {
        self.unit_count + 1 == self.order
    }

    /// Factor rings of a product; empty for base rings.
    pub fn factors(&self) -> &[Ring] {
        match &self.kind {
            Kind::Product { factors, .. } => factors,
            _ => &[],
        }
    }

    /// Monic modulus polynomial (low-to-high) of a Galois field.
    pub fn modulus(&self) -> Option<&[u32]> {
        match &self.kind {
            Kind::Galois { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    // ---- value-level arithmetic -------------------------------------------

    fn gf_decode(p: u32, degree: u32, mut v: u32) -> Vec<u32> {
        let mut c = vec![0u32; degree as usize];
        for i in (0..degree as usize).rev() {
            c[i] = v % p;
            v /= p;
        }
        c
    }

    fn gf_encode(p: u32, coeffs: &[u32], degree: u32) -> u32 {
        (0..degree as usize).fold(0u32, |acc, i| acc * p + coeffs.get(i).copied().unwrap_or(0))
    }

    fn split<'a>(
        strides: &'a [u32],
        factors: &'a [Ring],
        v: u32,
    ) -> impl Iterator<Item = u32> + 'a {
        strides
            .iter()
            .zip(factors)
            .map(move |(s, f)| (v / s) % f.order)
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => ((a as u64 + b as u64) % *n as u64) as u32,
            Kind::Galois { p, degree, .. } => {
                let (x, y) = (
                    Self::gf_decode(*p, *degree, a),
                    Self::gf_decode(*p, *degree, b),
                );
                let s: Vec<u32> = x.iter().zip(&y).map(|(i, j)| (i + j) % p).collect();
                Self::gf_encode(*p, &s, *degree)
            }
            Kind::Product { factors, strides } => Self::split(strides, factors, a)
                .zip(Self::split(strides, factors, b))
                .zip(factors.iter().zip(strides))
                .map(|((x, y), (f, s))| f.add_v(x, y) * s)
                .sum(),
        }
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => ((a as u64 * b as u64) % *n as u64) as u32,
            Kind::Galois { p, degree, modulus } => {
                let x = Self::gf_decode(*p, *degree, a);
                let y = Self::gf_decode(*p, *degree, b);
                let prod = poly::rem_monic(&poly::mul(&x, &y, *p), modulus, *p);
                Self::gf_encode(*p, &prod, *degree)
            }
            Kind::Product { factors, strides } => Self::split(strides, factors, a)
                .zip(Self::split(strides, factors, b))
                .zip(factors.iter().zip(strides))
                .map(|((x, y), (f, s))| f.mul_v(x, y) * s)
                .sum(),
        }
    }

    fn neg_raw(&self, a: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => (n - a) % n,
            Kind::Galois { p, degree, .. } => {
                let x = Self::gf_decode(*p, *degree, a);
                let s: Vec<u32> = x.iter().map(|c| (p - c) % p).collect();
                Self::gf_encode(*p, &s, *degree)
            }
            Kind::Product { factors, strides } => Self::split(strides, factors, a)
                .zip(factors.iter().zip(strides))
                .map(|(x, (f, s))| f.neg_v(x) * s)
                .sum(),
        }
    }

    fn unit_raw(&self, a: u32) -> bool {
        match &self.kind {
            Kind::ZMod { n } => gcd(a as u64, *n as u64) == 1,
            Kind::Galois { .. } => a != 0,
            Kind::Product { factors, strides } => Self::split(strides, factors, a)
                .zip(factors)
                .all(|(x, f)| f.unit[x as usize]),
        }
    }

    #[inline]
    pub(crate) fn add_v(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[a as usize * self.order as usize + b as usize],
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_v(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.order as usize + b as usize],
            None => self.mul_raw(a, b),
        }
    }

    #[inline]
    pub(crate) fn neg_v(&self, a: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_raw(a),
        }
    }

    #[inline]
    pub(crate) fn sub_v(&self, a: u32, b: u32) -> u32 {
        self.add_v(a, self.neg_v(b))
    }

    // ---- element-level API --------------------------------------------------

    #[inline]
    pub(crate) fn wrap(&self, value: u32) -> Elem {
        debug_assert!(value < self.order);
        Elem {
            ring: self.id,
            value,
        }
    }

    /// Element with the given canonical index.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value >= self.order {
            return Err(Error::InvalidArgument(format!(
                "index {value} out of range for ring of order {}",
                self.order
            )));
        }
        Ok(self.wrap(value))
    }

    /// Reduces an integer into the ring through the unital map `Z -> R`.
    pub fn from_int(&self, k: i64) -> Elem {
        let mut acc = 0u32;
        for _ in 0..k.unsigned_abs() % self.characteristic() {
            acc = self.add_v(acc, self.one);
        }
        let v = if k < 0 { self.neg_v(acc) } else { acc };
        self.wrap(v)
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> u64 {
        let mut acc = self.one;
        let mut k = 1u64;
        while acc != 0 {
            acc = self.add_v(acc, self.one);
            k += 1;
        }
        k
    }

    pub fn zero(&self) -> Elem {
        self.wrap(0)
    }

    pub fn one(&self) -> Elem {
        self.wrap(self.one)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order).map(move |v| self.wrap(v))
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        e.ring == self.id && e.value < self.order
    }

    fn check(&self, e: Elem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        self.wrap(self.add_v(a.value, b.value))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        self.wrap(self.sub_v(a.value, b.value))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        self.wrap(self.mul_v(a.value, b.value))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        debug_assert!(self.contains(a));
        self.wrap(self.neg_v(a.value))
    }

    /// Checked arithmetic; `b` is required for binary operations and ignored
    /// for negation.
    pub fn arith(&self, op: ArithOp, a: Elem, b: Option<Elem>) -> Result<Elem> {
        self.check(a)?;
        if op == ArithOp::Neg {
            return Ok(self.neg(a));
        }
        let b = b.ok_or_else(|| Error::InvalidArgument(format!("{op:?} needs two operands")))?;
        self.check(b)?;
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Neg => unreachable!(),
        })
    }

    #[inline]
    pub fn is_zero(&self, a: Elem) -> bool {
        a.value == 0
    }

    #[inline]
    pub fn is_unit(&self, a: Elem) -> bool {
        self.unit[a.value as usize]
    }

    /// Nonzero non-unit.
    #[inline]
    pub fn is_zero_divisor(&self, a: Elem) -> bool {
        a.value != 0 && !self.unit[a.value as usize]
    }

    pub fn census(&self) -> RingCensus {
        RingCensus {
            order: self.order as u64,
            units: self.elements().filter(|&e| self.is_unit(e)).collect(),
            zero_divisors: self
                .elements()
                .filter(|&e| self.is_zero_divisor(e))
                .collect(),
            zero: self.zero(),
            one: self.one(),
        }
    }

    fn inverse_v(&self, a: u32) -> u32 {
        match &self.kind {
            Kind::ZMod { n } => {
                let (mut r0, mut r1) = (*n as i64, a as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                t0.rem_euclid(*n as i64) as u32
            }
            Kind::Galois { .. } => {
                // a^(q-2)
                let mut exp = self.order - 2;
                let (mut base, mut acc) = (a, self.one);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = self.mul_v(acc, base);
                    }
                    base = self.mul_v(base, base);
                    exp >>= 1;
                }
                acc
            }
            Kind::Product { factors, strides } => Self::split(strides, factors, a)
                .zip(factors.iter().zip(strides))
                .map(|(x, (f, s))| f.inverse_v(x) * s)
                .sum(),
        }
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        if !self.is_unit(a) {
            return Err(Error::NotAUnit(self.format_elem(a)));
        }
        Ok(self.wrap(self.inverse_v(a.value)))
    }

    /// `{ s : s r = 0 }` in canonical order.
    pub fn annihilator(&self, r: Elem) -> Vec<Elem> {
        self.elements()
            .filter(|&s| self.mul_v(s.value, r.value) == 0)
            .collect()
    }

    pub fn annihilator_size(&self, r: Elem) -> u64 {
        (0..self.order)
            .filter(|&s| self.mul_v(s, r.value) == 0)
            .count() as u64
    }

    /// Number of pairs `(x, y)` with `n1 x + n2 y = 0`.
    ///
    /// `x -> n1 x` is additive, so each target `-n2 y` in the image of
    /// multiplication by `n1` has exactly `|Ann(n1)|` preimages.
    pub fn count_syzygies(&self, n1: Elem, n2: Elem) -> u64 {
        let mut image = vec![false; self.order as usize];
        let mut kernel = 0u64;
        for x in 0..self.order {
            let v = self.mul_v(n1.value, x);
            image[v as usize] = true;
            if v == 0 {
                kernel += 1;
            }
        }
        let hits = (0..self.order)
            .filter(|&y| image[self.neg_v(self.mul_v(n2.value, y)) as usize])
            .count() as u64;
        kernel * hits
    }

    // ---- literals -----------------------------------------------------------

    /// Element literal: decimal residue for `Z_n` and prime fields, a
    /// polynomial in `x` (highest degree first) for extension fields, and a
    /// parenthesised tuple for products.
    pub fn format_elem(&self, a: Elem) -> String {
        self.format_v(a.value)
    }

    fn format_v(&self, v: u32) -> String {
        match &self.kind {
            Kind::ZMod { .. } => v.to_string(),
            Kind::Galois { p, degree, .. } => {
                if *degree == 1 {
                    return v.to_string();
                }
                let c = Self::gf_decode(*p, *degree, v);
                let mut terms = Vec::new();
                for (i, &ci) in c.iter().enumerate().rev() {
                    if ci == 0 {
                        continue;
                    }
                    let coeff = if ci == 1 && i > 0 {
                        String::new()
                    } else {
                        ci.to_string()
                    };
                    terms.push(match i {
                        0 => coeff,
                        1 => format!("{coeff}x"),
                        _ => format!("{coeff}x^{i}"),
                    });
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Kind::Product { factors, strides } => {
                let parts: Vec<String> = Self::split(strides, factors, v)
                    .zip(factors)
                    .map(|(x, f)| f.format_v(x))
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        self.parse_v(s.trim()).map(|v| self.wrap(v))
    }

    fn parse_v(&self, s: &str) -> Result<u32> {
        let bad = || Error::Parse(format!("`{s}` is not an element of {}", self.spec));
        match &self.kind {
            Kind::ZMod { n } => {
                let k: i64 = s.parse().map_err(|_| bad())?;
                Ok(k.rem_euclid(*n as i64) as u32)
            }
            Kind::Galois { p, degree, .. } => {
                let mut coeffs = vec![0u64; *degree as usize];
                for term in s.split('+').map(str::trim) {
                    if term.is_empty() {
                        return Err(bad());
                    }
                    let (coeff, power) = match term.find('x') {
                        None => (term.parse::<u64>().map_err(|_| bad())?, 0usize),
                        Some(pos) => {
                            let head = term[..pos].trim_end_matches('*');
                            let coeff = if head.is_empty() {
                                1
                            } else {
                                head.parse::<u64>().map_err(|_| bad())?
                            };
                            let tail = &term[pos + 1..];
                            let power = if tail.is_empty() {
                                1
                            } else {
                                tail.strip_prefix('^')
                                    .and_then(|t| t.parse::<usize>().ok())
                                    .ok_or_else(bad)?
                            };
                            (coeff, power)
                        }
                    };
                    if power >= *degree as usize {
                        return Err(bad());
                    }
                    coeffs[power] = (coeffs[power] + coeff) % *p as u64;
                }
                let c: Vec<u32> = coeffs.into_iter().map(|c| c as u32).collect();
                Ok(Self::gf_encode(*p, &c, *degree))
            }
            Kind::Product { factors, strides } => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let parts = split_top_level(inner);
                if parts.len() != factors.len() {
                    return Err(bad());
                }
                let mut v = 0u32;
                for ((part, f), stride) in parts.iter().zip(factors).zip(strides) {
                    v += f.parse_v(part.trim())? * stride;
                }
                Ok(v)
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

/// Splits on commas that are not nested inside brackets or parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Euler's totient by trial-division factorisation.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

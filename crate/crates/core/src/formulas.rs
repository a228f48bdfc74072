//! Closed-form predictions, evaluated in arbitrary precision.
//!
//! Several printed formulas admit two readings. Each such predictor takes a
//! [`Reading`]: `Corrected` is the one that agrees with enumeration,
//! `Printed` is kept so the disagreement can be demonstrated.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Diameter, InvariantReport};
use crate::ring::{euler_phi, poly, Ring};
use crate::trimat::{self, Class, ClassTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    Corrected,
    Printed,
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn pw(p: u64, e: u32) -> BigInt {
    Pow::pow(big(p), e)
}

/// `sum c_i p^{e_i}` with possibly negative exponents. The sum is multiplied
/// through by `p^k` for the most negative exponent, evaluated, and divided
/// back; a nonzero remainder means the expression is not an integer.
fn clear_denominators(p: u64, terms: &[(BigInt, i64)]) -> Result<BigInt> {
    let shift = terms
        .iter()
        .map(|&(_, e)| e)
        .min()
        .unwrap_or(0)
        .min(0)
        .unsigned_abs() as u32;
    let scaled: BigInt = terms
        .iter()
        .map(|(c, e)| c * pw(p, (e + shift as i64) as u32))
        .sum();
    let denom = pw(p, shift);
    if !(&scaled % &denom).is_zero() {
        return Err(Error::NonIntegral(format!("{scaled} / {p}^{shift}")));
    }
    Ok(scaled / denom)
}

fn require_prime(p: u64) -> Result<()> {
    if poly::is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Degree of a noncentral canonical matrix from its shape. For the shape
/// with two zero-divisor entries the corrected count is `S|R| - |R| - 1`;
/// the printed one has `S|R|^2`.
pub fn predict_class_degree(ring: &Ring, tag: &ClassTag, reading: Reading) -> Result<BigInt> {
    let actual = trimat::class_of_pair(ring, tag.x, tag.y).ok_or(Error::CentralMatrix)?;
    if actual != tag.class {
        return Err(Error::TagMismatch(format!(
            "({}, {}) has shape {actual}, not {}",
            ring.format_elem(tag.x),
            ring.format_elem(tag.y),
            tag.class
        )));
    }
    let r = big(ring.order());
    let base = &r * &r - &r - 1;
    Ok(match tag.class {
        Class::A1 | Class::A2 | Class::A3 | Class::A7 | Class::A8 => base,
        Class::A4 => big(ring.annihilator_size(tag.x)) * &r * &r - &r - 1,
        Class::A5 => big(ring.annihilator_size(tag.y)) * &r * &r - &r - 1,
        Class::A6 => {
            let s = big(ring.count_syzygies(tag.x, tag.y));
            match reading {
                Reading::Corrected => s * &r - &r - 1,
                Reading::Printed => s * &r * &r - &r - 1,
            }
        }
    })
}

/// Degree sum over each shape class: `|R|` shifts of every canonical pair
/// times its predicted degree.
pub fn predict_class_sums(ring: &Ring, reading: Reading, pair_cap: u64) -> Result<[BigInt; 8]> {
    let r = ring.order();
    if r as u128 * r as u128 > pair_cap as u128 {
        return Err(Error::CapExceeded {
            what: "canonical pairs",
            size: r as u128 * r as u128,
            cap: pair_cap as u128,
        });
    }
    let mut sums: [BigInt; 8] = Default::default();
    for x in ring.elements() {
        for y in ring.elements() {
            if let Some(class) = trimat::class_of_pair(ring, x, y) {
                let d = predict_class_degree(ring, &ClassTag { class, x, y }, reading)?;
                sums[class.index()] += d * r;
            }
        }
    }
    Ok(sums)
}

/// `|E| = (1/2) sum_i d(A_i*)`.
pub fn predict_total_edges(ring: &Ring, pair_cap: u64) -> Result<BigInt> {
    let sums = predict_class_sums(ring, Reading::Corrected, pair_cap)?;
    Ok(sums.iter().sum::<BigInt>() / 2)
}

/// `(1/2) q (q^2 - 1)(q^2 - q - 1)` for `q = p^n`.
pub fn predict_edges_field(p: u64, n: u32) -> Result<BigInt> {
    require_prime(p)?;
    let q = pw(p, n);
    Ok(&q * (&q * &q - 1) * (&q * &q - &q - 1) / 2)
}

/// Edge count over a product of fields of orders `pm` and `qn`. The
/// corrected reading groups the unit counts as `2(|U1| + |U2|)`, the printed
/// one as `2|U1| + |U2|`.
pub fn predict_edges_product(pm: u64, qn: u64, reading: Reading) -> Result<BigInt> {
    for k in [pm, qn] {
        if crate::ring::prime_power(k).is_none() {
            return Err(Error::InvalidArgument(format!("{k} is not a prime power")));
        }
    }
    let (a, b) = (big(pm), big(qn));
    let r = &a * &b;
    let u1 = &a - 1;
    let u2 = &b - 1;
    let u = &u1 * &u2;
    let y = &r * &r - &r - 1;
    let z = &a * &a * &b * &b * &b - &r - 1;
    let w = &a * &a * &a * &b * &b - &r - 1;
    let inner = match reading {
        Reading::Corrected => 4 + &u + 2 * (&u1 + &u2),
        Reading::Printed => 4 + &u + 2 * &u1 + &u2,
    };
    let total: BigInt = y * &u * inner + z * &u1 * (2 + &u1) + w * &u2 * (2 + &u2);
    let twice: BigInt = r * total;
    if (&twice % BigInt::from(2)).is_zero() {
        Ok(twice / 2)
    } else {
        Err(Error::NonIntegral(format!("{twice} / 2")))
    }
}

/// Degree sum over the (unit, zero-divisor) shape in `Tr(Z_n)`. The printed
/// reading applies `phi` to the last factor as well.
pub fn predict_unit_zero_divisor_sum(n: u64, reading: Reading) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus {n} below 2")));
    }
    let phi = euler_phi(n);
    let x = n - phi - 1;
    let last = n * n - n - 1;
    let last = match reading {
        Reading::Corrected => big(last),
        Reading::Printed => big(euler_phi(last)),
    };
    Ok(big(n) * big(phi) * big(x) * last)
}

/// Predicted quantities for `Tr(Z_{p^n})`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerPrediction {
    /// Degree sum over each of the two one-sided zero-divisor shapes.
    pub zero_divisor_sum: BigInt,
    /// The `alpha` term of the two-zero-divisor sum.
    pub alpha_term: BigInt,
    /// The `beta` term, in the requested reading.
    pub beta_term: BigInt,
    /// `2 alpha - beta`.
    pub double_zero_divisor_sum: BigInt,
    pub omega: BigInt,
    pub independence: BigInt,
}

/// The `beta` term reads `p^{2n+r}` in the derivation and `p^{2n+1}` where it
/// is stated; only the former matches enumeration once `n > 2`.
pub fn predict_prime_power(p: u64, n: u32, beta: Reading) -> Result<PrimePowerPrediction> {
    require_prime(p)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("exponent {n} below 2")));
    }
    let n = n as i64;
    let c1 = big(p - 1);
    let c2 = &c1 * &c1;
    let e0 = 2 * n - 1;
    let mut zd = Vec::new();
    let mut alpha = Vec::new();
    let mut beta_terms = Vec::new();
    for r in 1..n {
        zd.extend([(c1.clone(), e0 + 2 * n), (-&c1, e0 + n - r), (-&c1, e0 - r)]);
        alpha.extend([
            (c1.clone(), e0 + 3 * n - r),
            (c1.clone(), e0 + n - r),
            (c1.clone(), e0 - r),
            (-&c1, e0 + 2 * n - 2 * r),
            (-&c1, e0 + n - 2 * r),
            (-&c1, e0 + 2 * n),
        ]);
        let lead = 3 * n - 2 * r - 2;
        let top = match beta {
            Reading::Corrected => 2 * n + r,
            Reading::Printed => 2 * n + 1,
        };
        beta_terms.extend([(c2.clone(), lead + top), (-&c2, lead + n), (-&c2, lead)]);
    }
    let zero_divisor_sum = clear_denominators(p, &zd)?;
    let alpha_term = clear_denominators(p, &alpha)?;
    let beta_term = clear_denominators(p, &beta_terms)?;
    let q = pw(p, n as u32);
    Ok(PrimePowerPrediction {
        zero_divisor_sum,
        double_zero_divisor_sum: 2 * &alpha_term - &beta_term,
        alpha_term,
        beta_term,
        omega: &q * (&q - 1),
        independence: &q * (pw(p, 2 * n as u32) - pw(p, 2 * n as u32 - 2)),
    })
}

/// Per-shape degree sums and the total edge count for `Tr(Z_{p^2})`, as
/// polynomials in `p`.
pub fn predict_square_modulus(p: u64) -> Result<([BigInt; 8], BigInt)> {
    require_prime(p)?;
    let p: BigInt = big(p);
    let p2: BigInt = &p * &p;
    let p4: BigInt = &p2 * &p2;
    let p5: BigInt = &p4 * &p;
    let f: BigInt = &p4 - &p2 - 1;
    let g: BigInt = &p5 - &p2 - 1;
    let q: BigInt = &p - 1;
    let a1 = &p2 * &p * &q * &f;
    let a3 = &p4 * &q * &q * &f;
    let a4 = &p2 * &q * &g;
    let a6 = &p2 * &q * &q * &g;
    let a7 = &p2 * &p * &q * &q * &f;
    let sums = [a1.clone(), a1, a3, a4.clone(), a4, a6, a7.clone(), a7];
    let total = &p2 * (&p2 - 1) * (&p4 * &p2 + &p5 - &p4 - 2 * &p2 - 1) / 2;
    Ok((sums, total))
}

/// Structure of the commuting graph over a field of order `p^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldStructure {
    pub components: BigInt,
    pub component_size: BigInt,
    pub edges_per_component: BigInt,
    pub regular_degree: BigInt,
    pub omega: BigInt,
    pub alpha: BigInt,
    pub diameter: Diameter,
}

pub fn predict_field_structure(p: u64, n: u32) -> Result<FieldStructure> {
    require_prime(p)?;
    let q = pw(p, n);
    let size = &q * &q - &q;
    Ok(FieldStructure {
        components: &q + 1,
        edges_per_component: &size * (&size - 1) / 2,
        regular_degree: &size - 1,
        omega: size.clone(),
        component_size: size,
        alpha: q + 1,
        diameter: Diameter::Infinite,
    })
}

/// Structure of the commuting graph over `Z_m`, `m` composite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularStructure {
    pub connected: bool,
    pub diameter: u64,
    pub omega: BigInt,
    /// Number of maximum cliques exhibited.
    pub max_clique_count_claimed: u64,
}

fn require_composite(m: u64) -> Result<()> {
    if m < 4 || poly::is_prime(m) {
        return Err(Error::InvalidArgument(format!("{m} is not composite")));
    }
    Ok(())
}

pub fn predict_zm_structure(m: u64) -> Result<ModularStructure> {
    require_composite(m)?;
    Ok(ModularStructure {
        connected: true,
        diameter: 3,
        omega: big(m) * big(m - 1),
        max_clique_count_claimed: 2,
    })
}

/// Conjectured independence number `n phi(n) (2n - phi(n))` for composite `n`.
pub fn conjecture_alpha_zn(n: u64) -> Result<BigInt> {
    require_composite(n)?;
    let phi = euler_phi(n);
    Ok(big(n) * big(phi) * big(2 * n - phi))
}

/// A predicted or measured quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Infinity,
    Bool(bool),
    /// Verified bounds from an exhausted search.
    Bounds(BigInt, BigInt),
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Value {
        Value::Int(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Value {
        Value::Int(big(v))
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Value {
        Value::Bool(v)
    }
}

impl From<Diameter> for Value {
    fn from(d: Diameter) -> Value {
        match d {
            Diameter::Finite(v) => Value::from(v),
            Diameter::Infinite => Value::Infinity,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Infinity => f.write_str("infinity"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Bounds(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Integers that fit `i64` serialise as JSON numbers, larger ones as decimal
/// strings.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Int(v) => match v.to_i64() {
                Some(i) => s.serialize_i64(i),
                None => s.serialize_str(&v.to_string()),
            },
            Value::Infinity => s.serialize_str("infinity"),
            Value::Bool(b) => s.serialize_bool(*b),
            Value::Bounds(lo, hi) => {
                use serde::ser::SerializeSeq;
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(&Value::Int(lo.clone()))?;
                seq.serialize_element(&Value::Int(hi.clone()))?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Value;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a decimal string, a bool, \"infinity\" or [lower, upper]")
            }
            fn visit_bool<E: de::Error>(self, v: bool) -> std::result::Result<Value, E> {
                Ok(Value::Bool(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Value, E> {
                Ok(Value::Int(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Value, E> {
                Ok(Value::Int(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Value, E> {
                if v == "infinity" {
                    return Ok(Value::Infinity);
                }
                v.parse::<BigInt>()
                    .map(Value::Int)
                    .map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
            fn visit_seq<A: de::SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Value, A::Error> {
                let mut next = || -> std::result::Result<BigInt, A::Error> {
                    match seq.next_element::<Value>()? {
                        Some(Value::Int(v)) => Ok(v),
                        _ => Err(de::Error::custom("bounds need two integers")),
                    }
                };
                let lo = next()?;
                let hi = next()?;
                Ok(Value::Bounds(lo, hi))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    #[default]
    Equal,
    /// The measured value must be at least the predicted one.
    AtLeast,
}

impl Comparison {
    fn is_equal(&self) -> bool {
        *self == Comparison::Equal
    }
}

fn is_false(b: &bool) -> bool {
    !b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub name: String,
    pub paper_ref: String,
    pub predicted: Value,
    pub measured: Option<Value>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub erratum: Option<String>,
    #[serde(default, skip_serializing_if = "Comparison::is_equal")]
    pub comparison: Comparison,
    /// Conjecture rows are reported but never decide the outcome.
    #[serde(default, skip_serializing_if = "is_false")]
    pub conjecture: bool,
}

impl Prediction {
    /// Row comparing `predicted` with `measured`; no measurement means no
    /// verdict.
    pub fn new(
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        predicted: impl Into<Value>,
        measured: Option<Value>,
    ) -> Prediction {
        let mut row = Prediction {
            name: name.into(),
            paper_ref: paper_ref.into(),
            predicted: predicted.into(),
            measured,
            matches: None,
            erratum: None,
            comparison: Comparison::Equal,
            conjecture: false,
        };
        row.rejudge();
        row
    }

    pub fn with_erratum(mut self, note: impl Into<String>) -> Prediction {
        self.erratum = Some(note.into());
        self
    }

    pub fn at_least(mut self) -> Prediction {
        self.comparison = Comparison::AtLeast;
        self.rejudge();
        self
    }

    pub fn as_conjecture(mut self) -> Prediction {
        self.conjecture = true;
        self
    }

    fn rejudge(&mut self) {
        self.matches = match (&self.measured, self.comparison, &self.predicted) {
            (None | Some(Value::Bounds(..)), _, _) => None,
            (Some(Value::Int(m)), Comparison::AtLeast, Value::Int(p)) => Some(m >= p),
            (Some(m), _, p) => Some(p == m),
        };
    }

    /// False only for a gating row whose measurement contradicts it.
    pub fn passes(&self) -> bool {
        self.conjecture || self.matches != Some(false)
    }
}

/// An invariant report together with the predictions checked against it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionReport {
    #[serde(flatten)]
    pub report: InvariantReport,
    pub predictions: Vec<Prediction>,
}

impl PredictionReport {
    pub fn all_pass(&self) -> bool {
        self.predictions.iter().all(Prediction::passes)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `|x|` as `u64`, when it fits.
pub fn to_u64(v: &BigInt) -> Option<u64> {
    if v.is_negative() {
        None
    } else {
        v.to_u64()
    }
}

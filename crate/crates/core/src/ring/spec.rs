use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Description of a finite commutative ring with identity.
///
/// Textual grammar: `zmod:<n>`, `gf:<p>^<n>[:<modulus coefficients low-to-high>]`,
/// `prod:<spec>,<spec>,...`. Modulus coefficients are single digits
/// (`gf:2^3:1101` is `Z_2[x]/(1 + x + x^3)`) or `.`-separated when `p > 10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    ZMod(u64),
    GaloisField {
        p: u64,
        degree: u32,
        modulus: Option<Vec<u32>>,
    },
    Product(Vec<RingSpec>),
}

impl RingSpec {
    pub fn zmod(n: u64) -> Self {
        RingSpec::ZMod(n)
    }

    pub fn gf(p: u64, degree: u32) -> Self {
        RingSpec::GaloisField {
            p,
            degree,
            modulus: None,
        }
    }

    pub fn product(factors: Vec<RingSpec>) -> Self {
        RingSpec::Product(factors)
    }
}

fn parse_u64(s: &str, whole: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidSpec(whole.to_string()))
}

fn parse_base(s: &str, whole: &str) -> Result<RingSpec> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("zmod:") {
        return Ok(RingSpec::ZMod(parse_u64(rest, whole)?));
    }
    if let Some(rest) = s.strip_prefix("gf:") {
        let mut parts = rest.splitn(2, ':');
        let order = parts.next().unwrap_or_default();
        let modulus = parts.next();
        let (p, n) = order
            .split_once('^')
            .ok_or_else(|| Error::InvalidSpec(whole.to_string()))?;
        let p = parse_u64(p, whole)?;
        let degree = u32::try_from(parse_u64(n, whole)?)
            .map_err(|_| Error::InvalidSpec(whole.to_string()))?;
        let modulus = match modulus {
            None => None,
            Some(m) => {
                let coeffs: Option<Vec<u32>> = if m.contains('.') {
                    m.split('.').map(|c| c.trim().parse::<u32>().ok()).collect()
                } else {
                    m.chars().map(|c| c.to_digit(10)).collect()
                };
                match coeffs {
                    Some(c) if !c.is_empty() => Some(c),
                    _ => return Err(Error::InvalidSpec(whole.to_string())),
                }
            }
        };
        return Ok(RingSpec::GaloisField { p, degree, modulus });
    }
    Err(Error::InvalidSpec(whole.to_string()))
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("prod:") {
            let factors = rest
                .split(',')
                .map(|f| parse_base(f, s))
                .collect::<Result<Vec<_>>>()?;
            if factors.is_empty() {
                return Err(Error::InvalidSpec(s.to_string()));
            }
            return Ok(RingSpec::Product(factors));
        }
        parse_base(t, s)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ZMod(n) => write!(f, "zmod:{n}"),
            RingSpec::GaloisField { p, degree, modulus } => {
                write!(f, "gf:{p}^{degree}")?;
                if let Some(m) = modulus {
                    let body: Vec<String> = m.iter().map(u32::to_string).collect();
                    if *p > 10 {
                        write!(f, ":{}", body.join("."))?;
                    } else {
                        write!(f, ":{}", body.concat())?;
                    }
                }
                Ok(())
            }
            RingSpec::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(ToString::to_string).collect();
                write!(f, "prod:{}", parts.join(","))
            }
        }
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

//! Dense polynomials over a prime field, coefficients stored low-to-high.

use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Drops trailing zero coefficients.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = trim(a.to_vec());
    let p64 = p as u64;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = lead * c as u64 % p64;
            let slot = &mut r[shift + i];
            *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Monic polynomials of the given degree, in lexicographic order of their
/// coefficients compared from the constant term upwards.
pub(crate) fn monic_of_degree(p: u32, degree: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |mut k| {
        // constant term varies slowest
        let mut coeffs = vec![0u32; degree + 1];
        for i in (0..degree).rev() {
            coeffs[i] = (k % p as u64) as u32;
            k /= p as u64;
        }
        coeffs[degree] = 1;
        coeffs
    })
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let degree = poly.len() - 1;
    for d in 1..=degree / 2 {
        for divisor in monic_of_degree(p, d) {
            if rem_monic(&poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of the given
/// degree over `Z_p`, coefficients low-to-high and including the leading one.
pub fn find_irreducible(p: u64, degree: u32, max_degree: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if degree > max_degree {
        return Err(Error::CapExceeded {
            what: "polynomial degree",
            size: degree as u128,
            cap: max_degree as u128,
        });
    }
    let p32 =
        u32::try_from(p).map_err(|_| Error::InvalidArgument(format!("prime {p} too large")))?;
    monic_of_degree(p32, degree as usize)
        .find(|f| is_irreducible(f, p32))
        .ok_or_else(|| {
            Error::InvalidModulus(format!("no irreducible of degree {degree} over Z_{p}"))
        })
}

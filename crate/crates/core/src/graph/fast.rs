//! Edge counts from canonical representatives.
//!
//! A noncentral `A` and its coset `A + aI` have the same centralizer, which is
//! `{commuting canonical pairs} + R I`. With `c(A)` counting the noncentral
//! canonical matrices commuting with `A` (itself included),
//! `deg(A) = |R| c(A) - 1`.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::trimat::{self, Class, Ut2};

/// Largest `|R|^2` accepted by the quadratic canonical-pair scan.
pub const DEFAULT_PAIR_CAP: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalDegree {
    pub matrix: Ut2,
    pub class: Class,
    /// Degree shared by all `|R|` members of the coset.
    pub degree: u64,
}

/// Degree of every noncentral canonical matrix `[[x,y],[0,0]]`, in `(x, y)` order.
pub fn canonical_degrees(ring: &Ring, pair_cap: u64) -> Result<Vec<CanonicalDegree>> {
    let r = ring.order();
    let pairs = r as u128 * r as u128;
    if pairs > pair_cap as u128 {
        return Err(Error::CapExceeded {
            what: "canonical pairs",
            size: pairs,
            cap: pair_cap as u128,
        });
    }
    let zero = ring.zero();
    let reps: Vec<Ut2> = ring
        .elements()
        .flat_map(|x| ring.elements().map(move |y| Ut2::new(x, y, zero)))
        .filter(|m| !(ring.is_zero(m.x) && ring.is_zero(m.y)))
        .collect();
    Ok(reps
        .iter()
        .map(|a| {
            let c = reps
                .iter()
                .filter(|b| trimat::commutes_unchecked(ring, a, b))
                .count() as u64;
            CanonicalDegree {
                matrix: *a,
                class: trimat::class_of(ring, a).expect("noncentral"),
                degree: r * c - 1,
            }
        })
        .collect())
}

/// `|E|` without building the graph: `(1/2) sum_A |R| deg(A)` over canonical `A`.
pub fn edge_count_fast(ring: &Ring, pair_cap: u64) -> Result<u64> {
    let r = ring.order();
    let total: u64 = canonical_degrees(ring, pair_cap)?
        .iter()
        .map(|d| r * d.degree)
        .sum();
    Ok(total / 2)
}

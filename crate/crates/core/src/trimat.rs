//! 2x2 upper-triangular matrices `[[x, y], [0, z]]` over a finite commutative
//! ring, central-shift canonical forms and the eight shape classes of
//! noncentral canonical matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{split_top_level, Elem, Ring};

pub const DEFAULT_VERTEX_CAP: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ut2 {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl Ut2 {
    pub fn new(x: Elem, y: Elem, z: Elem) -> Ut2 {
        Ut2 { x, y, z }
    }

    pub fn scalar(ring: &Ring, a: Elem) -> Ut2 {
        Ut2::new(a, ring.zero(), a)
    }

    pub fn identity(ring: &Ring) -> Ut2 {
        Ut2::scalar(ring, ring.one())
    }

    pub fn from_values(ring: &Ring, x: u32, y: u32, z: u32) -> Result<Ut2> {
        Ok(Ut2::new(ring.elem(x)?, ring.elem(y)?, ring.elem(z)?))
    }

    pub fn belongs_to(&self, ring: &Ring) -> bool {
        ring.contains(self.x) && ring.contains(self.y) && ring.contains(self.z)
    }

    /// Literal `[[x,y],[0,z]]`.
    pub fn literal(&self, ring: &Ring) -> String {
        format!(
            "[[{},{}],[0,{}]]",
            ring.format_elem(self.x),
            ring.format_elem(self.y),
            ring.format_elem(self.z)
        )
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Ut2> {
        let bad = || Error::Parse(format!("`{s}` is not a matrix literal [[x,y],[0,z]]"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let rows = split_top_level(inner);
        if rows.len() != 2 {
            return Err(bad());
        }
        let row = |r: &str| -> Result<Vec<String>> {
            let body = r
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(bad)?;
            let cells: Vec<String> = split_top_level(body)
                .into_iter()
                .map(String::from)
                .collect();
            if cells.len() != 2 {
                return Err(bad());
            }
            Ok(cells)
        };
        let top = row(rows[0])?;
        let bottom = row(rows[1])?;
        if bottom[0] != "0" && !ring.is_zero(ring.parse_elem(&bottom[0])?) {
            return Err(Error::Parse(format!("`{s}` is not upper triangular")));
        }
        Ok(Ut2::new(
            ring.parse_elem(&top[0])?,
            ring.parse_elem(&top[1])?,
            ring.parse_elem(&bottom[1])?,
        ))
    }
}

fn check(ring: &Ring, ms: &[&Ut2]) -> Result<()> {
    if ms.iter().all(|m| m.belongs_to(ring)) {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

pub fn add(ring: &Ring, a: &Ut2, b: &Ut2) -> Result<Ut2> {
    check(ring, &[a, b])?;
    Ok(Ut2::new(
        ring.add(a.x, b.x),
        ring.add(a.y, b.y),
        ring.add(a.z, b.z),
    ))
}

/// `[[a,b],[0,c]] * [[x,y],[0,z]] = [[ax, ay + bz], [0, cz]]`.
pub fn mul(ring: &Ring, a: &Ut2, b: &Ut2) -> Result<Ut2> {
    check(ring, &[a, b])?;
    Ok(mul_unchecked(ring, a, b))
}

#[inline]
pub(crate) fn mul_unchecked(ring: &Ring, a: &Ut2, b: &Ut2) -> Ut2 {
    Ut2::new(
        ring.mul(a.x, b.x),
        ring.add(ring.mul(a.x, b.y), ring.mul(a.y, b.z)),
        ring.mul(a.z, b.z),
    )
}

pub fn commutes(ring: &Ring, a: &Ut2, b: &Ut2) -> Result<bool> {
    check(ring, &[a, b])?;
    Ok(commutes_unchecked(ring, a, b))
}

/// The diagonal of a product of triangular matrices over a commutative ring
/// never depends on the order, so only the top-right entries are compared.
#[inline]
pub(crate) fn commutes_unchecked(ring: &Ring, a: &Ut2, b: &Ut2) -> bool {
    let (ax, ay, az) = (a.x.value(), a.y.value(), a.z.value());
    let (bx, by, bz) = (b.x.value(), b.y.value(), b.z.value());
    ring.add_v(ring.mul_v(ax, by), ring.mul_v(ay, bz))
        == ring.add_v(ring.mul_v(bx, ay), ring.mul_v(by, az))
}

/// Center of `Tr(R)` for commutative `R` is the scalar matrices.
pub fn is_central(ring: &Ring, a: &Ut2) -> bool {
    a.x == a.z && ring.is_zero(a.y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub matrix: Ut2,
    pub shift: Elem,
}

/// `A - zI` where `z` is the bottom-right entry of `A`.
pub fn canonicalize(ring: &Ring, a: &Ut2) -> Canonical {
    Canonical {
        matrix: Ut2::new(ring.sub(a.x, a.z), a.y, ring.zero()),
        shift: a.z,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
}

impl Class {
    pub const ALL: [Class; 8] = [
        Class::A1,
        Class::A2,
        Class::A3,
        Class::A4,
        Class::A5,
        Class::A6,
        Class::A7,
        Class::A8,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.index() + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassTag {
    pub class: Class,
    pub x: Elem,
    pub y: Elem,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Zero,
    Unit,
    ZeroDivisor,
}

fn kind(ring: &Ring, e: Elem) -> Kind {
    if ring.is_zero(e) {
        Kind::Zero
    } else if ring.is_unit(e) {
        Kind::Unit
    } else {
        Kind::ZeroDivisor
    }
}

/// Class of the canonical pair `(x, y)`; `None` for `(0, 0)`.
pub(crate) fn class_of_pair(ring: &Ring, x: Elem, y: Elem) -> Option<Class> {
    use Kind::*;
    Some(match (kind(ring, x), kind(ring, y)) {
        (Zero, Zero) => return None,
        (Unit, Zero) => Class::A1,
        (Zero, Unit) => Class::A2,
        (Unit, Unit) => Class::A3,
        (ZeroDivisor, Zero) => Class::A4,
        (Zero, ZeroDivisor) => Class::A5,
        (ZeroDivisor, ZeroDivisor) => Class::A6,
        (Unit, ZeroDivisor) => Class::A7,
        (ZeroDivisor, Unit) => Class::A8,
    })
}

pub fn classify(ring: &Ring, canonical: &Ut2) -> Result<ClassTag> {
    check(ring, &[canonical])?;
    if !ring.is_zero(canonical.z) {
        return Err(Error::NotCanonical);
    }
    let class = class_of_pair(ring, canonical.x, canonical.y).ok_or(Error::CentralMatrix)?;
    Ok(ClassTag {
        class,
        x: canonical.x,
        y: canonical.y,
    })
}

/// Class of an arbitrary noncentral matrix via its canonical form.
pub fn class_of(ring: &Ring, a: &Ut2) -> Result<Class> {
    Ok(classify(ring, &canonicalize(ring, a).matrix)?.class)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPartition {
    pub counts: [u64; 8],
    pub total: u64,
    /// Whether the counts were confirmed by classifying every canonical pair.
    pub exhaustive: bool,
}

impl ClassPartition {
    pub fn count(&self, class: Class) -> u64 {
        self.counts[class.index()]
    }
}

/// Class sizes from the coset descriptions, `|R|` times the number of
/// canonical pairs of each shape.
pub fn class_sizes_formula(ring: &Ring) -> ClassPartition {
    let r = ring.order();
    let u = ring.unit_count();
    let x = ring.zero_divisor_count();
    let counts = [
        r * u,
        r * u,
        r * u * u,
        r * x,
        r * x,
        r * x * x,
        r * u * x,
        r * u * x,
    ];
    ClassPartition {
        counts,
        total: counts.iter().sum(),
        exhaustive: false,
    }
}

/// Class sizes by the formula, cross-checked by classifying every canonical
/// pair when `|R|^2` is within `pair_cap`.
pub fn class_sizes(ring: &Ring, pair_cap: u64) -> Result<ClassPartition> {
    let formula = class_sizes_formula(ring);
    let r = ring.order();
    if r * r > pair_cap {
        return Ok(formula);
    }
    let mut counts = [0u64; 8];
    for x in ring.elements() {
        for y in ring.elements() {
            if let Some(c) = class_of_pair(ring, x, y) {
                counts[c.index()] += r;
            }
        }
    }
    if counts != formula.counts {
        return Err(Error::TagMismatch(format!(
            "class census {counts:?} disagrees with coset formula {:?}",
            formula.counts
        )));
    }
    Ok(ClassPartition {
        counts,
        total: counts.iter().sum(),
        exhaustive: true,
    })
}

/// `|R|^3 - |R|`.
pub fn vertex_count(ring: &Ring) -> u64 {
    let r = ring.order();
    r * r * r - r
}

/// All noncentral matrices ordered lexicographically by `(x, y, z)`.
pub fn enumerate_vertices(ring: &Ring, cap: u64) -> Result<Vec<Ut2>> {
    let r = ring.order() as u128;
    let count = r * r * r - r;
    if count > cap as u128 {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: count,
            cap: cap as u128,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    for x in ring.elements() {
        for y in ring.elements() {
            for z in ring.elements() {
                let m = Ut2::new(x, y, z);
                if !is_central(ring, &m) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ring: &Ring, x: u32, y: u32, z: u32) -> Ut2 {
        Ut2::from_values(ring, x, y, z).unwrap()
    }

    #[test]
    fn products_over_z2() {
        let r = Ring::parse("zmod:2").unwrap();
        let e11 = m(&r, 1, 0, 0);
        let e12 = m(&r, 0, 1, 0);
        assert_eq!(mul(&r, &e11, &e12).unwrap(), e12);
        assert_eq!(mul(&r, &e12, &e11).unwrap(), m(&r, 0, 0, 0));
        assert!(!commutes(&r, &e11, &e12).unwrap());
        let b = m(&r, 1, 1, 0);
        assert_eq!(mul(&r, &Ut2::identity(&r), &b).unwrap(), b);
    }

    #[test]
    fn commutes_is_reflexive_and_scalars_are_central() {
        let r = Ring::parse("zmod:6").unwrap();
        let verts = enumerate_vertices(&r, DEFAULT_VERTEX_CAP).unwrap();
        for a in verts.iter().step_by(7) {
            assert!(commutes(&r, a, a).unwrap());
            for s in r.elements() {
                assert!(commutes(&r, &Ut2::scalar(&r, s), a).unwrap());
            }
        }
    }

    #[test]
    fn commutes_matches_product_comparison() {
        let r = Ring::parse("gf:2^2").unwrap();
        let verts = enumerate_vertices(&r, DEFAULT_VERTEX_CAP).unwrap();
        for a in &verts {
            for b in verts.iter().step_by(5) {
                let ab = mul(&r, a, b).unwrap();
                let ba = mul(&r, b, a).unwrap();
                assert_eq!(commutes(&r, a, b).unwrap(), ab == ba);
            }
        }
    }

    #[test]
    fn mixed_rings_rejected() {
        let r = Ring::parse("zmod:4").unwrap();
        let s = Ring::parse("zmod:5").unwrap();
        let a = Ut2::identity(&r);
        let b = Ut2::identity(&s);
        assert!(matches!(mul(&r, &a, &b), Err(Error::MixedRings)));
        assert!(matches!(commutes(&r, &a, &b), Err(Error::MixedRings)));
        assert!(matches!(classify(&s, &a), Err(Error::MixedRings)));
    }

    #[test]
    fn canonical_forms() {
        let r = Ring::parse("zmod:8").unwrap();
        let c = canonicalize(&r, &m(&r, 3, 5, 2));
        assert_eq!(c.matrix, m(&r, 1, 5, 0));
        assert_eq!(c.shift.value(), 2);
        let already = m(&r, 6, 3, 0);
        assert_eq!(canonicalize(&r, &already).matrix, already);
        assert_eq!(canonicalize(&r, &already).shift, r.zero());
        let c = canonicalize(&r, &Ut2::scalar(&r, r.elem(5).unwrap()));
        assert_eq!(c.matrix, m(&r, 0, 0, 0));
        assert_eq!(c.shift.value(), 5);
    }

    #[test]
    fn classification_table() {
        let r = Ring::parse("zmod:8").unwrap();
        assert_eq!(classify(&r, &m(&r, 1, 5, 0)).unwrap().class, Class::A3);
        assert_eq!(classify(&r, &m(&r, 2, 0, 0)).unwrap().class, Class::A4);
        assert_eq!(classify(&r, &m(&r, 1, 2, 0)).unwrap().class, Class::A7);
        assert_eq!(classify(&r, &m(&r, 4, 6, 0)).unwrap().class, Class::A6);
        assert_eq!(classify(&r, &m(&r, 6, 3, 0)).unwrap().class, Class::A8);
        assert_eq!(classify(&r, &m(&r, 0, 4, 0)).unwrap().class, Class::A5);
        assert_eq!(classify(&r, &m(&r, 0, 7, 0)).unwrap().class, Class::A2);
        assert_eq!(classify(&r, &m(&r, 5, 0, 0)).unwrap().class, Class::A1);
        assert!(matches!(
            classify(&r, &m(&r, 0, 0, 0)),
            Err(Error::CentralMatrix)
        ));
        assert!(matches!(
            classify(&r, &m(&r, 1, 5, 2)),
            Err(Error::NotCanonical)
        ));
    }

    #[test]
    fn class_sizes_z8() {
        let r = Ring::parse("zmod:8").unwrap();
        let p = class_sizes(&r, 1 << 20).unwrap();
        assert_eq!(p.counts, [32, 32, 128, 24, 24, 72, 96, 96]);
        assert_eq!(p.total, 504);
        assert!(p.exhaustive);
    }

    #[test]
    fn class_sizes_fields_and_z4() {
        for (spec, q) in [("gf:5^1", 5u64), ("gf:2^3", 8), ("gf:3^2", 9)] {
            let r = Ring::parse(spec).unwrap();
            let p = class_sizes(&r, 1 << 20).unwrap();
            assert_eq!(
                p.counts,
                [
                    q * (q - 1),
                    q * (q - 1),
                    q * (q - 1) * (q - 1),
                    0,
                    0,
                    0,
                    0,
                    0
                ]
            );
        }
        let z4 = Ring::parse("zmod:4").unwrap();
        assert_eq!(class_sizes(&z4, 1 << 20).unwrap().total, 60);
        let formula_only = class_sizes(&z4, 4).unwrap();
        assert!(!formula_only.exhaustive);
        assert_eq!(formula_only.total, 60);
    }

    #[test]
    fn vertex_enumeration() {
        let z2 = Ring::parse("zmod:2").unwrap();
        let v = enumerate_vertices(&z2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(v.len(), 6);
        assert!(!v.contains(&m(&z2, 0, 0, 0)));
        assert!(!v.contains(&Ut2::identity(&z2)));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        let z10 = Ring::parse("zmod:10").unwrap();
        assert_eq!(
            enumerate_vertices(&z10, DEFAULT_VERTEX_CAP).unwrap().len(),
            990
        );
        assert!(matches!(
            enumerate_vertices(&z10, 500),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn matrix_literals() {
        let r = Ring::parse("prod:zmod:2,gf:2^2").unwrap();
        let a = Ut2::parse(&r, "[[(1,x),(0,1)],[0,(1,x+1)]]").unwrap();
        assert_eq!(a.literal(&r), "[[(1,x),(0,1)],[0,(1,x+1)]]");
        assert_eq!(Ut2::parse(&r, &a.literal(&r)).unwrap(), a);
        let z8 = Ring::parse("zmod:8").unwrap();
        assert_eq!(
            Ut2::parse(&z8, "[[3, 5], [0, 2]]").unwrap(),
            m(&z8, 3, 5, 2)
        );
        assert!(Ut2::parse(&z8, "[[3,5],[1,2]]").is_err());
        assert!(Ut2::parse(&z8, "[[3,5]]").is_err());
    }
}

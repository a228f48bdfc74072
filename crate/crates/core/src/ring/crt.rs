use super::{gcd, Elem, Ring, RingSpec};
use crate::error::{Error, Result};

/// The ring isomorphism `Z_mn -> Z_m x Z_n`, `x -> (x mod m, x mod n)`.
#[derive(Clone, Debug)]
pub struct CrtMap {
    m: u64,
    n: u64,
    source: Ring,
    target: Ring,
}

pub fn crt_map(m: u64, n: u64) -> Result<CrtMap> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "crt moduli must be at least 2, got {m} and {n}"
        )));
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let source = Ring::new(&RingSpec::ZMod(m * n))?;
    let target = Ring::new(&RingSpec::Product(vec![
        RingSpec::ZMod(m),
        RingSpec::ZMod(n),
    ]))?;
    Ok(CrtMap {
        m,
        n,
        source,
        target,
    })
}

impl CrtMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn residues(&self, x: u64) -> (u64, u64) {
        (x % self.m, x % self.n)
    }

    pub fn apply(&self, x: Elem) -> Result<Elem> {
        if !self.source.contains(x) {
            return Err(Error::MixedRings);
        }
        let (a, b) = self.residues(x.value() as u64);
        // the first component is the most significant digit
        Ok(self.target.wrap((a * self.n + b) as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        let map = crt_map(2, 5).unwrap();
        assert_eq!(map.residues(7), (1, 2));
        assert_eq!(map.residues(0), (0, 0));
        let seven = map.source().elem(7).unwrap();
        assert_eq!(map.target().format_elem(map.apply(seven).unwrap()), "(1,2)");
    }

    #[test]
    fn non_coprime_is_an_error() {
        assert!(matches!(
            crt_map(4, 6),
            Err(Error::NotCoprime { m: 4, n: 6 })
        ));
    }

    #[test]
    fn is_a_ring_isomorphism() {
        for (m, n) in [(2, 3), (2, 5), (3, 4), (4, 9), (5, 7), (8, 125)] {
            let map = crt_map(m, n).unwrap();
            let (src, dst) = (map.source(), map.target());
            let image: Vec<Elem> = src.elements().map(|x| map.apply(x).unwrap()).collect();
            let mut seen = vec![false; dst.order() as usize];
            for y in &image {
                assert!(!std::mem::replace(&mut seen[y.value() as usize], true));
            }
            assert_eq!(image[1], dst.one());
            for a in src.elements() {
                for b in src.elements() {
                    let (ia, ib) = (image[a.value() as usize], image[b.value() as usize]);
                    assert_eq!(image[src.add(a, b).value() as usize], dst.add(ia, ib));
                    assert_eq!(image[src.mul(a, b).value() as usize], dst.mul(ia, ib));
                }
            }
        }
    }
}

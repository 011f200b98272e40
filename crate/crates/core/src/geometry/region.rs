//! Open regions cut out by finitely many generalized-circle constraints.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cad;
use super::constraint::GenCircle;
use crate::gaussian::GaussianInt;

/// Side length of the sample grid over the unit square.
pub const GRID: i64 = 64;

/// An open intersection of constraints in canonical form: no constraint is
/// implied by the others, duplicates are removed, and the list is sorted.
/// Two regions are equal as sets exactly when their constraint lists agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region {
    constraints: Vec<GenCircle>,
}

impl Region {
    /// The open fundamental square `(-1/2, 1/2)^2`.
    pub fn fundamental() -> Region {
        Region {
            constraints: square_edges().to_vec(),
        }
        .sorted()
    }

    /// Canonical region for the intersection, or `None` when it is empty.
    pub fn from_constraints(cs: Vec<GenCircle>) -> Option<Region> {
        let mut cs = cs;
        cs.sort();
        cs.dedup();
        prefilter(&mut cs)?;
        witness_of(&cs)?;
        let mut i = 0;
        while i < cs.len() {
            let mut probe: Vec<GenCircle> = cs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| c.clone())
                .collect();
            probe.push(cs[i].complement());
            if witness_of(&probe).is_none() {
                cs.remove(i);
            } else {
                i += 1;
            }
        }
        Some(Region { constraints: cs })
    }

    /// Builds a region without pruning. Used for images of canonical
    /// regions under bijections, which stay canonical.
    fn from_canonical(cs: Vec<GenCircle>) -> Region {
        Region { constraints: cs }.sorted()
    }

    fn sorted(mut self) -> Region {
        self.constraints.sort();
        self
    }

    pub fn constraints(&self) -> &[GenCircle] {
        &self.constraints
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        self.constraints.iter().all(|c| c.contains(x, y))
    }

    /// A rational point of the region.
    pub fn witness(&self) -> Option<(BigRational, BigRational)> {
        witness_of(&self.constraints)
    }

    /// Intersection with another region, canonicalized.
    pub fn intersect(&self, other: &Region) -> Option<Region> {
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        Region::from_constraints(cs)
    }

    /// Membership bits over the grid `((2j - 63)/128, (2k - 63)/128)`.
    pub fn fingerprint(&self) -> Vec<u64> {
        (0..GRID)
            .map(|row| {
                let y = 2 * row - (GRID - 1);
                (0..GRID).fold(0u64, |bits, col| {
                    let x = 2 * col - (GRID - 1);
                    let inside = self
                        .constraints
                        .iter()
                        .all(|c| c.contains_scaled(x, y, 2 * GRID));
                    bits | (u64::from(inside) << col)
                })
            })
            .collect()
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" & "))
    }
}

fn square_edges() -> [GenCircle; 4] {
    [
        GenCircle::from_i64(0, 2, 0, -1),
        GenCircle::from_i64(0, -2, 0, -1),
        GenCircle::from_i64(0, 0, 2, -1),
        GenCircle::from_i64(0, 0, -2, -1),
    ]
}

/// When all four square edges are present, constraints that hold on the
/// whole closed square are dropped and any constraint failing on the whole
/// square proves emptiness. Returns `None` for an empty region.
fn prefilter(cs: &mut Vec<GenCircle>) -> Option<()> {
    let edges = square_edges();
    if !edges.iter().all(|e| cs.binary_search(e).is_ok()) {
        return Some(());
    }
    let mut keep = Vec::with_capacity(cs.len());
    for c in cs.drain(..) {
        if edges.contains(&c) {
            keep.push(c);
            continue;
        }
        let (lo, hi) = c.range_on_unit_square();
        if !lo.is_negative() {
            return None;
        }
        if !hi.is_negative() {
            keep.push(c);
        }
    }
    *cs = keep;
    Some(())
}

/// Grid search first, exact decomposition second.
fn witness_of(cs: &[GenCircle]) -> Option<(BigRational, BigRational)> {
    if cs.is_empty() {
        return Some((BigRational::zero(), BigRational::zero()));
    }
    for row in 0..GRID {
        let y = 2 * row - (GRID - 1);
        for col in 0..GRID {
            let x = 2 * col - (GRID - 1);
            if cs.iter().all(|c| c.contains_scaled(x, y, 2 * GRID)) {
                let s = BigRational::from_integer((2 * GRID).into());
                return Some((
                    BigRational::from_integer(x.into()) / &s,
                    BigRational::from_integer(y.into()) / &s,
                ));
            }
        }
    }
    cad::witness(cs)
}

/// Image of the region under `z -> 1/z`.
pub fn invert_region(r: &Region) -> Region {
    Region::from_canonical(r.constraints.iter().map(GenCircle::inverted).collect())
}

/// Image of the region under `z -> z + t`.
pub fn translate_region(r: &Region, t: &GaussianInt) -> Region {
    Region::from_canonical(r.constraints.iter().map(|c| c.translated(t)).collect())
}

/// The open first-order cylinder of `a`: points of the open square whose
/// reciprocal lies in the open square around `a`.
pub fn cylinder_one(a: &GaussianInt) -> crate::Result<Option<Region>> {
    if !crate::hcf::digit_in_alphabet(a) {
        return Err(crate::Error::DigitNotInAlphabet(a.to_string()));
    }
    let f = Region::fundamental();
    let shifted = invert_region(&translate_region(&f, a));
    Ok(f.intersect(&shifted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    #[test]
    fn fundamental_is_canonical() {
        let f = Region::fundamental();
        assert_eq!(
            Region::from_constraints(f.constraints().to_vec()),
            Some(f.clone())
        );
        assert!(f.contains(&r(0, 1), &r(0, 1)));
        assert!(!f.contains(&r(1, 2), &r(0, 1)));
        assert_eq!(
            f.fingerprint().iter().map(|w| w.count_ones()).sum::<u32>(),
            4096
        );
    }

    #[test]
    fn redundant_constraints_are_pruned() {
        let mut cs = Region::fundamental().constraints().to_vec();
        cs.push(GenCircle::from_i64(1, 0, 0, -1)); // unit disc contains the square
        cs.push(GenCircle::from_i64(0, 1, 0, -1)); // x < 1
        let reg = Region::from_constraints(cs).unwrap();
        assert_eq!(reg, Region::fundamental());
    }

    #[test]
    fn inversion_of_square() {
        // the image avoids the four closed unit discs around +-1, +-i
        let inv = invert_region(&Region::fundamental());
        assert_eq!(inv.constraints().len(), 4);
        assert!(inv.contains(&r(3, 1), &r(3, 1)));
        assert!(!inv.contains(&r(3, 2), &r(0, 1)));
        assert!(!inv.contains(&r(0, 1), &r(-3, 2)));
        assert_eq!(invert_region(&inv), Region::fundamental());
    }

    #[test]
    fn translation_round_trip() {
        let f = Region::fundamental();
        let t = g(3, -2);
        let moved = translate_region(&f, &t);
        assert!(moved.contains(&r(3, 1), &r(-2, 1)));
        assert_eq!(translate_region(&moved, &-t), f);
        assert_eq!(translate_region(&f, &GaussianInt::zero()), f);
    }

    #[test]
    fn cylinders() {
        assert!(cylinder_one(&g(1, 1)).unwrap().is_some());
        assert!(cylinder_one(&g(5, -3)).unwrap().is_some());
        assert!(cylinder_one(&g(0, 1)).is_err());
        // reciprocal identity for the cylinder of 1+i
        let c = cylinder_one(&g(1, 1)).unwrap().unwrap();
        let (x, y) = c.witness().unwrap();
        let n = &x * &x + &y * &y;
        let (ix, iy) = (&x / &n, -&y / &n);
        let back = translate_region(&Region::fundamental(), &g(1, 1));
        assert!(back.contains(&ix, &iy));
    }
}

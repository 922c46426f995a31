//! Representation spaces `E_V(F_q)`, their points and the group action.

use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use super::fq::{mat_inv, mat_mul, Fq};
use crate::error::{Error, Result};
use crate::qring::Prime;
use crate::quiverlab::{DimensionVector, Quiver};

/// Default enumeration budget, `2^24` points.
pub const DEFAULT_BUDGET: u128 = 1 << 24;

/// `E_V = ⊕_arrows Hom(V_s, V_t)` over `F_q`.
///
/// Points are indexed by reading all matrix entries (arrow by arrow, each
/// matrix row-major) as base-`q` digits, least significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpace {
    quiver: Quiver,
    nu: DimensionVector,
    q: Prime,
    f: Fq,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    entries: usize,
}

/// One matrix per arrow, `ν_t x ν_s`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RepPoint {
    pub mats: Vec<Vec<u32>>,
}

impl RepSpace {
    pub fn new(quiver: &Quiver, nu: &DimensionVector, q: Prime) -> Result<Self> {
        quiver.check_dimension(nu)?;
        let shapes: Vec<(usize, usize)> = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| (nu[t] as usize, nu[s] as usize))
            .collect();
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut entries = 0;
        for &(r, c) in &shapes {
            offsets.push(entries);
            entries += r * c;
        }
        Ok(Self {
            quiver: quiver.clone(),
            nu: nu.clone(),
            q,
            f: Fq::new(q),
            shapes,
            offsets,
            entries,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn nu(&self) -> &DimensionVector {
        &self.nu
    }

    pub fn q(&self) -> Prime {
        self.q
    }

    pub fn field(&self) -> Fq {
        self.f
    }

    pub fn dim(&self, i: usize) -> usize {
        self.nu[i] as usize
    }

    /// `(rows, cols) = (ν_t, ν_s)` for each arrow.
    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.shapes
    }

    pub fn entry_count(&self) -> usize {
        self.entries
    }

    /// `q^N`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.q.get() as u128).checked_pow(self.entries as u32).unwrap_or(u128::MAX)
    }

    pub fn check_budget(&self, budget: u128) -> Result<()> {
        if self.size() > budget {
            return Err(Error::InstanceTooLarge {
                size: self.size(),
                budget,
            });
        }
        Ok(())
    }

    pub fn same_family(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.q == other.q
    }

    pub fn point(&self, mut index: u64) -> RepPoint {
        let p = self.q.get();
        let mats = self
            .shapes
            .iter()
            .map(|&(r, c)| {
                (0..r * c)
                    .map(|_| {
                        let d = (index % p) as u32;
                        index /= p;
                        d
                    })
                    .collect()
            })
            .collect();
        RepPoint { mats }
    }

    pub fn index(&self, x: &RepPoint) -> u64 {
        let p = self.q.get();
        let mut idx = 0u64;
        for m in x.mats.iter().rev() {
            for &e in m.iter().rev() {
                idx = idx * p + e as u64;
            }
        }
        idx
    }

    /// Every point, in index order.
    pub fn enumerate_points(&self, budget: u128) -> Result<impl Iterator<Item = RepPoint> + '_> {
        self.check_budget(budget)?;
        Ok((0..self.size() as u64).map(move |i| self.point(i)))
    }

    pub fn zero_point(&self) -> RepPoint {
        self.point(0)
    }

    /// `x_ω v`.
    pub fn apply(&self, x: &RepPoint, arrow: usize, v: &[u32]) -> Vec<u32> {
        let (r, c) = self.shapes[arrow];
        super::fq::mat_vec(self.f, &x.mats[arrow], r, c, v)
    }

    /// `|G_V(F_q)| = prod_i prod_(k < ν_i) (q^ν_i - q^k)`.
    pub fn group_order(&self) -> BigInt {
        let q = BigInt::from(self.q.get());
        let mut acc = BigInt::from(1);
        for i in 0..self.nu.len() {
            let n = self.nu[i] as usize;
            let qn = num_traits::pow(q.clone(), n);
            for k in 0..n {
                acc *= &qn - num_traits::pow(q.clone(), k);
            }
        }
        acc
    }

    /// A uniformly random element of `G_V`, one invertible matrix per vertex.
    pub fn random_group_element<R: Rng>(&self, rng: &mut R) -> Vec<Vec<u32>> {
        (0..self.nu.len())
            .map(|i| {
                let n = self.dim(i);
                loop {
                    let m: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..self.f.p())).collect();
                    if n == 0 || mat_inv(self.f, &m, n).is_some() {
                        break m;
                    }
                }
            })
            .collect()
    }

    /// `(g x)_ω = g_t x_ω g_s^-1`.
    pub fn act(&self, g: &[Vec<u32>], x: &RepPoint) -> RepPoint {
        let invs: Vec<Vec<u32>> = (0..self.nu.len())
            .map(|i| mat_inv(self.f, &g[i], self.dim(i)).unwrap_or_default())
            .collect();
        let mats = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let (r, c) = self.shapes[k];
                let left = mat_mul(self.f, &g[t], &x.mats[k], r, r, c);
                mat_mul(self.f, &left, &invs[s], r, c, c)
            })
            .collect();
        RepPoint { mats }
    }

    pub fn random_point<R: Rng>(&self, rng: &mut R) -> RepPoint {
        RepPoint {
            mats: self
                .shapes
                .iter()
                .map(|&(r, c)| (0..r * c).map(|_| rng.gen_range(0..self.f.p())).collect())
                .collect(),
        }
    }
}

/// How a pointwise check covered `E_V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Coverage {
    /// Every point.
    Full,
    /// Every point whose component at `arrow` is one of `representatives`,
    /// one per orbit of the automorphism group acting on that component.
    /// Every `G_V`-orbit meets this set.
    OrbitSlice { arrow: usize, representatives: usize },
    /// A random sample; results are partial.
    Truncated { sampled: usize },
}

impl Coverage {
    pub fn is_truncated(&self) -> bool {
        matches!(self, Coverage::Truncated { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Coverage::Full => "full",
            Coverage::OrbitSlice { .. } => "orbit_slice",
            Coverage::Truncated { .. } => "truncated",
        }
    }
}

/// Largest single-arrow component space handled by the orbit slice.
const SLICE_COMPONENT_LIMIT: u128 = 1 << 20;
const SAMPLE_SIZE: usize = 20_000;

type Move = Box<dyn Fn(&[u32]) -> Vec<u32>>;

/// Orbit representatives (smallest component index in each orbit) for the
/// action of `GL_s x GL_t` (or conjugation, for a loop) on one arrow's
/// component.
pub fn component_orbit_representatives(space: &RepSpace, arrow: usize) -> Vec<u64> {
    let f = space.field();
    let p = f.p() as u64;
    let (r, c) = space.shapes()[arrow];
    let (s, t) = space.quiver().arrows()[arrow];
    let len = r * c;
    let total = p.pow(len as u32);
    let decode = |mut idx: u64| -> Vec<u32> {
        (0..len)
            .map(|_| {
                let d = (idx % p) as u32;
                idx /= p;
                d
            })
            .collect()
    };
    let encode = |m: &[u32]| m.iter().rev().fold(0u64, |acc, &e| acc * p + e as u64);
    let gens = |n: usize| -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let id = |i: usize, j: usize| u32::from(i == j);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.push((0..n * n).map(|k| (id(k / n, k % n) + u32::from(k / n == i && k % n == j)) % f.p()).collect());
                }
            }
        }
        if n > 0 && f.p() > 2 {
            let g = space.q().primitive_root() as u32;
            out.push((0..n * n).map(|k| if k == 0 { g } else { id(k / n, k % n) }).collect());
        }
        out
    };
    // each generator acts as a permutation of the component space
    let moves: Vec<Move> = if s == t {
        gens(r)
            .into_iter()
            .map(|g| {
                let gi = mat_inv(f, &g, r).unwrap();
                Box::new(move |x: &[u32]| mat_mul(f, &mat_mul(f, &g, x, r, r, r), &gi, r, r, r)) as Move
            })
            .collect()
    } else {
        let mut m: Vec<Move> = Vec::new();
        for g in gens(r) {
            m.push(Box::new(move |x: &[u32]| mat_mul(f, &g, x, r, r, c)));
        }
        for g in gens(c) {
            m.push(Box::new(move |x: &[u32]| mat_mul(f, x, &g, r, c, c)));
        }
        m
    };
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        reps.push(start);
        seen[start as usize] = true;
        stack.push(start);
        while let Some(cur) = stack.pop() {
            let m = decode(cur);
            for mv in &moves {
                let next = encode(&mv(&m));
                if !seen[next as usize] {
                    seen[next as usize] = true;
                    stack.push(next);
                }
            }
        }
    }
    reps
}

/// Points to visit for a check that is invariant under `G_V`: everything if
/// it fits the budget, an orbit slice if that fits, a seeded sample otherwise.
pub fn coverage_points<R: Rng>(space: &RepSpace, budget: u128, rng: &mut R) -> (Vec<u64>, Coverage) {
    if space.size() <= budget {
        return ((0..space.size() as u64).collect(), Coverage::Full);
    }
    let p = space.q().get() as u128;
    let best = (0..space.shapes().len())
        .filter(|&k| {
            let (r, c) = space.shapes()[k];
            r * c > 0 && p.checked_pow((r * c) as u32).is_some_and(|s| s <= SLICE_COMPONENT_LIMIT)
        })
        .max_by_key(|&k| space.shapes()[k].0 * space.shapes()[k].1);
    if let Some(arrow) = best {
        let reps = component_orbit_representatives(space, arrow);
        let (r, c) = space.shapes()[arrow];
        let rest = space.size() / p.pow((r * c) as u32);
        if (reps.len() as u128) * rest <= budget {
            let off = space.offsets[arrow] as u32;
            let low = p.pow(off) as u64;
            let width = p.pow(off + (r * c) as u32) as u64;
            let mut pts = Vec::with_capacity(reps.len() * rest as usize);
            for &rep in &reps {
                for other in 0..rest as u64 {
                    let lo = other % low;
                    let hi = other / low;
                    pts.push(lo + rep * low + hi * width);
                }
            }
            pts.sort_unstable();
            return (
                pts,
                Coverage::OrbitSlice {
                    arrow,
                    representatives: reps.len(),
                },
            );
        }
    }
    let n = SAMPLE_SIZE.min(budget as usize);
    let pts = (0..n).map(|_| space.index(&space.random_point(rng))).collect();
    (pts, Coverage::Truncated { sampled: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverlab::presets;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn point_counts() {
        let j = RepSpace::new(&presets::jordan(), &DimensionVector::new(vec![1]), prime(2)).unwrap();
        assert_eq!(j.enumerate_points(DEFAULT_BUDGET).unwrap().count(), 2);
        let t = RepSpace::new(&presets::two_loop(), &DimensionVector::new(vec![2]), prime(2)).unwrap();
        assert_eq!(t.size(), 256);
        let a = RepSpace::new(&presets::a2(), &DimensionVector::new(vec![1, 1]), prime(3)).unwrap();
        assert_eq!(a.enumerate_points(DEFAULT_BUDGET).unwrap().count(), 3);
        let big = RepSpace::new(&presets::two_loop(), &DimensionVector::new(vec![4]), prime(3)).unwrap();
        assert!(matches!(big.check_budget(DEFAULT_BUDGET), Err(Error::InstanceTooLarge { .. })));
    }

    #[test]
    fn index_round_trip() {
        let s = RepSpace::new(&presets::mixed(2), &DimensionVector::new(vec![1, 2]), prime(3)).unwrap();
        for i in [0u64, 1, 17, 4000, s.size() as u64 - 1] {
            assert_eq!(s.index(&s.point(i)), i);
        }
    }

    #[test]
    fn conjugacy_classes() {
        // similarity classes of 2x2 matrices over F_q: q^2 + q
        for p in [2u64, 3] {
            let s = RepSpace::new(&presets::jordan(), &DimensionVector::new(vec![2]), prime(p)).unwrap();
            assert_eq!(component_orbit_representatives(&s, 0).len() as u64, p * p + p);
        }
        // 3x3 over F_2: q^3 + q^2 + q = 14
        let s = RepSpace::new(&presets::jordan(), &DimensionVector::new(vec![3]), prime(2)).unwrap();
        assert_eq!(component_orbit_representatives(&s, 0).len(), 14);
        // rank classes for a non-loop arrow
        let a = RepSpace::new(&presets::a2(), &DimensionVector::new(vec![2, 3]), prime(3)).unwrap();
        assert_eq!(component_orbit_representatives(&a, 0).len(), 3);
    }

    #[test]
    fn slice_and_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = RepSpace::new(&presets::two_loop(), &DimensionVector::new(vec![2]), prime(3)).unwrap();
        let (pts, cov) = coverage_points(&s, 1000, &mut rng);
        assert_eq!(cov, Coverage::OrbitSlice { arrow: 1, representatives: 12 });
        assert_eq!(pts.len(), 12 * 81);
        let g = s.random_group_element(&mut rng);
        let x = s.random_point(&mut rng);
        assert_eq!(s.group_order(), BigInt::from(48));
        let gx = s.act(&g, &x);
        assert_eq!(s.act(&s.random_group_element(&mut rng), &gx).mats.len(), 2);
    }
}

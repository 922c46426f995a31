//! Functions on `E_V(F_q)`: flag-count tables, the induction product and the
//! tabulated Green pairing.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::flags::{count_stable_flags, graded_subspaces, is_invariant, quotient_point, sub_point};
use super::space::RepSpace;
use crate::error::{Error, Result};
use crate::qring::{Prime, QuadraticFieldElement};
use crate::quiverlab::{flag_dims, induction_dims, DimensionVector, FlagType, Quiver};

/// `v^vexp * counts[x]`, with `v = sqrt q`. The natural form of `ℓ_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountFunction {
    pub space: RepSpace,
    pub counts: Vec<u64>,
    pub vexp: i64,
}

/// A function `E_V(F_q) -> Q(sqrt q)`, stored as a full value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallFunction {
    pub space: RepSpace,
    pub values: Vec<QuadraticFieldElement>,
}

/// Stable-flag counts at every point.
pub fn flag_count_table(space: &RepSpace, f: &FlagType, budget: u128) -> Result<Vec<u64>> {
    space.check_budget(budget)?;
    (0..space.size() as u64)
        .map(|i| count_stable_flags(space, &space.point(i), f))
        .collect()
}

/// `ℓ_f = v^(-dim F̃_f) · #{x-stable flags of type f}` as a count table.
pub fn l_counts(q: &Quiver, f: &FlagType, p: Prime, budget: u128) -> Result<CountFunction> {
    f.validate(q)?;
    let space = RepSpace::new(q, &f.degree(q.vertex_count()), p)?;
    let counts = flag_count_table(&space, f, budget)?;
    Ok(CountFunction {
        vexp: -flag_dims(q, f).dim_tilde,
        space,
        counts,
    })
}

pub fn l_function(q: &Quiver, f: &FlagType, p: Prime, budget: u128) -> Result<HallFunction> {
    Ok(l_counts(q, f, p, budget)?.to_hall())
}

impl CountFunction {
    pub fn to_hall(&self) -> HallFunction {
        let p = self.space.q();
        let scale = QuadraticFieldElement::sqrt_q_pow(self.vexp, p);
        HallFunction {
            space: self.space.clone(),
            values: self
                .counts
                .iter()
                .map(|&c| scale.scale(&BigRational::from_integer(BigInt::from(c))))
                .collect(),
        }
    }
}

impl HallFunction {
    /// The constant function `1` on the one-point space of degree zero.
    pub fn unit(q: &Quiver, p: Prime) -> Self {
        let space = RepSpace::new(q, &DimensionVector::zero(q.vertex_count()), p).unwrap();
        Self {
            space,
            values: vec![QuadraticFieldElement::one(p)],
        }
    }

    pub fn constant(space: &RepSpace, c: QuadraticFieldElement, budget: u128) -> Result<Self> {
        space.check_budget(budget)?;
        Ok(Self {
            space: space.clone(),
            values: vec![c; space.size() as usize],
        })
    }

    pub fn degree(&self) -> &DimensionVector {
        self.space.nu()
    }

    pub fn linear_combination(terms: &[(QuadraticFieldElement, &HallFunction)]) -> Result<Self> {
        let (_, first) = terms.first().ok_or(Error::SpaceMismatch)?;
        if terms.iter().any(|(_, h)| h.space != first.space) {
            return Err(Error::SpaceMismatch);
        }
        let zero = QuadraticFieldElement::zero(first.space.q());
        let values = (0..first.values.len())
            .map(|k| terms.iter().fold(zero.clone(), |acc, (c, h)| &acc + &(c * &h.values[k])))
            .collect();
        Ok(Self {
            space: first.space.clone(),
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Self {
            space: self.space.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(QuadraticFieldElement::is_zero)
    }

    /// First `(x, g)` with `f(g x) != f(x)` among `samples` random draws.
    pub fn orbit_counterexample<R: Rng>(&self, samples: usize, rng: &mut R) -> Option<(u64, u64)> {
        let s = &self.space;
        for _ in 0..samples {
            let x = s.random_point(rng);
            let g = s.random_group_element(rng);
            let (i, j) = (s.index(&x), s.index(&s.act(&g, &x)));
            if self.values[i as usize] != self.values[j as usize] {
                return Some((i, j));
            }
        }
        None
    }
}

/// The `v`-power twist of the induction product:
/// `sign (d1 - d2) + diag sum_i t_i w_i + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub sign: i64,
    pub diag: i64,
    pub offset: i64,
}

/// The twist fixed by calibration against the concatenation identity.
pub const DEFAULT_TWIST: Twist = Twist {
    sign: -1,
    diag: 0,
    offset: 0,
};

impl Twist {
    pub fn exponent(&self, q: &Quiver, t: &DimensionVector, w: &DimensionVector) -> i64 {
        let (d1, d2) = induction_dims(q, t, w).expect("degrees match the quiver");
        let diag: i64 = (0..t.len()).map(|i| (t[i] * w[i]) as i64).sum();
        self.sign * (d1 - d2) + self.diag * diag + self.offset
    }

    /// The grid searched by calibration.
    pub fn candidates() -> Vec<Twist> {
        let mut out = Vec::new();
        for sign in [-1, 1] {
            for diag in -2..=2 {
                for offset in -1..=1 {
                    out.push(Twist { sign, diag, offset });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for Twist {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(d1-d2) {:+}·Σt_iw_i {:+}", self.sign, self.diag, self.offset)
    }
}

/// `(f ∘ g)(x) = v^twist sum_(W' ⊆ V invariant, dim W' = deg g) f(x_(V/W')) g(x_W')`.
pub fn hall_product(f: &HallFunction, g: &HallFunction, twist: Twist, budget: u128) -> Result<HallFunction> {
    if !f.space.same_family(&g.space) {
        return Err(Error::SpaceMismatch);
    }
    let q = f.space.quiver();
    let (t, w) = (f.degree(), g.degree());
    let space = RepSpace::new(q, &t.add(w), f.space.q())?;
    space.check_budget(budget)?;
    let scale = QuadraticFieldElement::sqrt_q_pow(twist.exponent(q, t, w), space.q());
    let subs = graded_subspaces(&space, w);
    let zero = QuadraticFieldElement::zero(space.q());
    let values = (0..space.size() as u64)
        .map(|idx| {
            let x = space.point(idx);
            let mut acc = zero.clone();
            for sub in &subs {
                if !is_invariant(&space, &x, sub) {
                    continue;
                }
                let a = &f.values[f.space.index(&quotient_point(&space, &x, sub)) as usize];
                if a.is_zero() {
                    continue;
                }
                let b = &g.values[g.space.index(&sub_point(&space, &x, sub)) as usize];
                acc = &acc + &(a * b);
            }
            &acc * &scale
        })
        .collect();
    Ok(HallFunction { space, values })
}

/// `|G_V|^-1 sum_x f(x) g(x)`; zero across different degrees.
pub fn green_pairing(f: &HallFunction, g: &HallFunction) -> Result<QuadraticFieldElement> {
    if !f.space.same_family(&g.space) {
        return Err(Error::SpaceMismatch);
    }
    let p = f.space.q();
    if f.space != g.space {
        return Ok(QuadraticFieldElement::zero(p));
    }
    let sum = f
        .values
        .iter()
        .zip(&g.values)
        .fold(QuadraticFieldElement::zero(p), |acc, (a, b)| &acc + &(a * b));
    Ok(sum.scale(&BigRational::new(BigInt::from(1), f.space.group_order())))
}

/// Exact comparison of `sqrt(q)^a * m` and `sqrt(q)^b * n` for integers.
pub fn vq_eq(m: u64, a: i64, n: u64, b: i64, q: Prime) -> bool {
    if m == 0 || n == 0 {
        return m == n;
    }
    let d = a - b;
    if d % 2 != 0 {
        return false;
    }
    let k = (d / 2).unsigned_abs() as u32;
    let qq = BigInt::from(q.get()).pow(k);
    if d >= 0 {
        BigInt::from(m) * qq == BigInt::from(n)
    } else {
        BigInt::from(m) == BigInt::from(n) * qq
    }
}

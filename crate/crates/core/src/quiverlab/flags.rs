//! Flag types and the dimension formulas attached to them.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::quiver::{DimensionVector, Quiver};
use crate::error::{Error, Result};
use crate::qring::{gaussian_multinomial, LaurentPolynomial};

/// A flag type `(i, a)`: vertex sequence and positive multiplicities.
///
/// Step `l` peels off `a_l` dimensions at vertex `i_l`, reading the flag from
/// the top: `V = V^0 ⊃ V^1 ⊃ ... ⊃ V^n = 0` with `V^(l-1)/V^l` of dimension
/// `a_l e_(i_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagType {
    verts: Vec<usize>,
    mults: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagMode {
    All,
    FullFlag,
}

impl FlagType {
    pub fn new(verts: Vec<usize>, mults: Vec<u32>) -> Result<Self> {
        if verts.len() != mults.len() {
            return Err(Error::InvalidFlagType(format!(
                "{} vertices but {} multiplicities",
                verts.len(),
                mults.len()
            )));
        }
        if mults.contains(&0) {
            return Err(Error::NonPositive(0));
        }
        Ok(Self { verts, mults })
    }

    /// The one-step type `((i),(n))`.
    pub fn single(i: usize, n: u32) -> Self {
        Self::new(vec![i], vec![n]).expect("positive multiplicity")
    }

    /// Parses `"r:2,s:3"` or `"r,s,s"` (multiplicity one).
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let mut verts = Vec::new();
        let mut mults = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, m) = part.split_once(':').unwrap_or((part, "1"));
            verts.push(q.vertex_index(l.trim())?);
            let m: i64 = m
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in `{part}`")))?;
            if m <= 0 {
                return Err(Error::NonPositive(m));
            }
            mults.push(m as u32);
        }
        Self::new(verts, mults)
    }

    pub fn validate(&self, q: &Quiver) -> Result<()> {
        match self.verts.iter().find(|&&i| i >= q.vertex_count()) {
            Some(i) => Err(Error::UnknownVertex(i.to_string())),
            None => Ok(()),
        }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.verts.iter().copied().zip(self.mults.iter().copied())
    }

    pub fn degree(&self, vertices: usize) -> DimensionVector {
        let mut d = DimensionVector::zero(vertices);
        for (i, a) in self.steps() {
            d[i] += a;
        }
        d
    }

    /// Every imaginary step has multiplicity one.
    pub fn is_full_flag(&self, q: &Quiver) -> bool {
        self.steps().all(|(i, a)| a == 1 || !q.is_imaginary(i))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut verts = self.verts.clone();
        verts.extend_from_slice(&other.verts);
        let mut mults = self.mults.clone();
        mults.extend_from_slice(&other.mults);
        Self { verts, mults }
    }

    /// Splits after the first `k` steps.
    pub fn split_at(&self, k: usize) -> (Self, Self) {
        (
            Self {
                verts: self.verts[..k].to_vec(),
                mults: self.mults[..k].to_vec(),
            },
            Self {
                verts: self.verts[k..].to_vec(),
                mults: self.mults[k..].to_vec(),
            },
        )
    }

    pub fn display(&self, q: &Quiver) -> String {
        let v: Vec<&str> = self.verts.iter().map(|&i| q.label(i)).collect();
        let m: Vec<String> = self.mults.iter().map(u32::to_string).collect();
        format!("(({}),({}))", v.join(","), m.join(","))
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.verts.iter().map(|i| (i + 1).to_string()).collect();
        let m: Vec<String> = self.mults.iter().map(u32::to_string).collect();
        write!(f, "(({}),({}))", v.join(","), m.join(","))
    }
}

/// Expands every imaginary step `(i, m)` into `m` unit steps.
pub fn bridge_type(q: &Quiver, f: &FlagType) -> FlagType {
    let mut verts = Vec::new();
    let mut mults = Vec::new();
    for (i, a) in f.steps() {
        if q.is_imaginary(i) {
            verts.extend(std::iter::repeat_n(i, a as usize));
            mults.extend(std::iter::repeat_n(1, a as usize));
        } else {
            verts.push(i);
            mults.push(a);
        }
    }
    FlagType { verts, mults }
}

/// All flag types of degree `nu`, sorted lexicographically by
/// (vertex sequence, multiplicity sequence).
pub fn enumerate_flag_types(q: &Quiver, nu: &DimensionVector, mode: FlagMode) -> Vec<FlagType> {
    fn go(q: &Quiver, rest: &mut DimensionVector, mode: FlagMode, prefix: &mut FlagType, out: &mut Vec<FlagType>) {
        if rest.is_zero() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let max = if mode == FlagMode::FullFlag && q.is_imaginary(i) { rest[i].min(1) } else { rest[i] };
            for a in 1..=max {
                rest[i] -= a;
                prefix.verts.push(i);
                prefix.mults.push(a);
                go(q, rest, mode, prefix, out);
                prefix.verts.pop();
                prefix.mults.pop();
                rest[i] += a;
            }
        }
    }
    let mut out = Vec::new();
    if nu.is_zero() {
        return out;
    }
    let mut rest = nu.clone();
    let mut prefix = FlagType {
        verts: vec![],
        mults: vec![],
    };
    go(q, &mut rest, mode, &mut prefix, &mut out);
    out.sort();
    out
}

/// Dimensions of the flag variety, the incidence variety and the point count
/// of the flag variety in the symmetric normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagDims {
    pub dim_flag: i64,
    pub dim_tilde: i64,
    /// Product over vertices of Gaussian multinomials. Evaluated at
    /// `v = sqrt q` and multiplied by `sqrt(q)^dim_flag` it counts `F_q`-points.
    #[serde(serialize_with = "display_ser")]
    pub flag_point_count: LaurentPolynomial,
}

fn display_ser<S: serde::Serializer, T: fmt::Display>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn flag_dims(q: &Quiver, f: &FlagType) -> FlagDims {
    let steps: Vec<(usize, u32)> = f.steps().collect();
    let mut dim_flag = 0i64;
    let mut fiber = 0i64;
    for (l, &(il, al)) in steps.iter().enumerate() {
        for &(im, am) in &steps[l + 1..] {
            let prod = (al * am) as i64;
            if il == im {
                dim_flag += prod;
            }
            let arrows = q.arrows().iter().filter(|&&(s, t)| s == il && t == im).count() as i64;
            fiber += arrows * prod;
        }
    }
    let flag_point_count = (0..q.vertex_count()).fold(LaurentPolynomial::one(), |acc, i| {
        let parts: Vec<u32> = steps.iter().filter(|s| s.0 == i).map(|s| s.1).collect();
        &acc * &gaussian_multinomial(&parts)
    });
    FlagDims {
        dim_flag,
        dim_tilde: dim_flag + fiber,
        flag_point_count,
    }
}

/// `(d1, d2)` for the induction diagram with quotient degree `t` and
/// subrepresentation degree `w`.
pub fn induction_dims(q: &Quiver, t: &DimensionVector, w: &DimensionVector) -> Result<(i64, i64)> {
    q.check_dimension(t)?;
    q.check_dimension(w)?;
    let n = q.vertex_count();
    let d2: i64 = (0..n).map(|i| (t[i] * t[i] + w[i] * w[i]) as i64).sum();
    let arrows: i64 = q.arrows().iter().map(|&(s, tt)| (t[s] * w[tt]) as i64).sum();
    let diag: i64 = (0..n).map(|i| (t[i] * w[i]) as i64).sum();
    Ok((d2 + arrows + diag, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverlab::presets;

    #[test]
    fn enumerate_small() {
        let j = presets::jordan();
        let nu = DimensionVector::new(vec![2]);
        let all = enumerate_flag_types(&j, &nu, FlagMode::All);
        assert_eq!(all, vec![FlagType::single(0, 2), FlagType::new(vec![0, 0], vec![1, 1]).unwrap()]);
        assert_eq!(enumerate_flag_types(&j, &nu, FlagMode::FullFlag).len(), 1);
        let a2 = presets::a2();
        let t = enumerate_flag_types(&a2, &DimensionVector::new(vec![1, 1]), FlagMode::All);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].display(&a2), "((1,2),(1,1))");
        assert_eq!(t[1].display(&a2), "((2,1),(1,1))");
    }

    #[test]
    fn bridge() {
        let q = Quiver::from_labels(&["r", "s"], &[("r", "s"), ("s", "s")]).unwrap();
        let f = FlagType::parse(&q, "r:2,s:3").unwrap();
        let b = bridge_type(&q, &f);
        assert_eq!(b.display(&q), "((r,s,s,s),(2,1,1,1))");
        assert_eq!(bridge_type(&q, &b), b);
        assert_eq!(b.degree(2), f.degree(2));
        assert!(b.is_full_flag(&q));
        assert_eq!(bridge_type(&q, &FlagType::parse(&q, "r:3").unwrap()).display(&q), "((r),(3))");
        assert!(FlagType::parse(&q, "r:0").is_err());
    }

    #[test]
    fn dims() {
        let j = presets::jordan();
        let d = flag_dims(&j, &FlagType::new(vec![0, 0], vec![1, 1]).unwrap());
        assert_eq!((d.dim_flag, d.dim_tilde), (1, 2));
        let a2 = presets::a2();
        let d = flag_dims(&a2, &FlagType::new(vec![1, 0], vec![1, 1]).unwrap());
        assert_eq!((d.dim_flag, d.dim_tilde), (0, 0));
        let d = flag_dims(&a2, &FlagType::new(vec![0, 1], vec![1, 1]).unwrap());
        assert_eq!((d.dim_flag, d.dim_tilde), (0, 1));
        assert_eq!(flag_dims(&j, &FlagType::single(0, 3)).dim_flag, 0);
    }

    #[test]
    fn induction() {
        let j = presets::jordan();
        let e = DimensionVector::new(vec![1]);
        assert_eq!(induction_dims(&j, &e, &e).unwrap(), (4, 2));
        let a2 = presets::a2();
        let (e1, e2) = (DimensionVector::unit(2, 0), DimensionVector::unit(2, 1));
        assert_eq!(induction_dims(&a2, &e1, &e2).unwrap(), (3, 2));
        let (d1, d2) = induction_dims(&a2, &e1, &DimensionVector::zero(2)).unwrap();
        assert_eq!(d1, d2);
    }
}

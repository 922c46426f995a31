//! Green-pairing Gram matrices of flag-count functions, span ranks, kernel
//! fingerprints and finite-field primitive spaces.
//!
//! The pairing `(ℓ_f, ℓ_g)` is computed without touching `E_V`: the sum
//! `sum_x N_f(x) N_g(x)` counts triples `(x, F1, F2)` with both flags
//! `x`-stable. For fixed flags the admissible `x` form a linear space
//! `E(F1, F2)`, and `G_V` acts transitively on flags of one type, so
//!
//! `(ℓ_f, ℓ_g) = |F_f| / |G_V| · v^(-dt_f - dt_g) · sum_(F2 ∈ F_g) q^dim E(F1°, F2)`
//!
//! with `F1°` the coordinate flag of type `f`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::flags::{enumerate_flags, full_graded, GradedSubspace};
use super::fq::{rank, Fq, Subspace};
use super::functions::{green_pairing, l_function};
use super::space::RepSpace;
use crate::error::{Error, Result};
use crate::qring::{ExactMatrix, Prime, QuadraticFieldElement};
use crate::quiverlab::{enumerate_flag_types, flag_dims, DimensionVector, FlagMode, FlagType, Quiver};

/// The chain `V = V^0 ⊃ V^1 ⊃ ... ⊃ V^n = 0` of the coordinate flag of type `f`:
/// at each vertex the first coordinates are peeled off first.
fn coordinate_chain(space: &RepSpace, f: &FlagType) -> Vec<GradedSubspace> {
    let n = space.nu().len();
    let mut removed = vec![0usize; n];
    let mut chain = vec![full_graded(space)];
    for (i, a) in f.steps() {
        removed[i] += a as usize;
        let mut next = chain.last().unwrap().clone();
        let dim = space.dim(i);
        next[i] = Subspace {
            ambient: dim,
            basis: (removed[i]..dim)
                .map(|k| (0..dim).map(|j| u32::from(j == k)).collect())
                .collect(),
            pivots: (removed[i]..dim).collect(),
        };
        chain.push(next);
    }
    chain
}

fn full_chain(space: &RepSpace, inner: Vec<GradedSubspace>) -> Vec<GradedSubspace> {
    let mut chain = vec![full_graded(space)];
    chain.extend(inner);
    chain.push((0..space.nu().len()).map(|i| Subspace::zero(space.dim(i))).collect());
    chain
}

/// Linear conditions on `X ∈ Hom(V_s, V_t)` (unknown `(r, c)` at `r ν_s + c`)
/// saying `X(V^(l-1)_s) ⊆ V^l_t` for every step.
fn stability_rows(f: Fq, chain: &[GradedSubspace], s: usize, t: usize, ns: usize) -> Vec<Vec<u32>> {
    let mut rows = Vec::new();
    for l in 1..chain.len() {
        let ann = chain[l][t].annihilator(f);
        for b in &chain[l - 1][s].basis {
            for a in &ann {
                let mut row = vec![0; a.len() * ns];
                for (r, &ar) in a.iter().enumerate() {
                    if ar == 0 {
                        continue;
                    }
                    for (c, &bc) in b.iter().enumerate() {
                        row[r * ns + c] = f.mul(ar, bc);
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// `dim E(F1, F2)` summed over arrows.
fn common_stable_dim(space: &RepSpace, fixed: &[Vec<Vec<u32>>], chain: &[GradedSubspace]) -> usize {
    let f = space.field();
    let mut dim = 0;
    for (k, &(s, t)) in space.quiver().arrows().iter().enumerate() {
        let (nt, ns) = space.shapes()[k];
        if nt * ns == 0 {
            continue;
        }
        let mut rows = fixed[k].clone();
        rows.extend(stability_rows(f, chain, s, t, ns));
        dim += nt * ns - if rows.is_empty() { 0 } else { rank(f, &rows) };
    }
    dim
}

/// Gram matrix of `ℓ_f` for the given flag types (all of degree `nu`),
/// computed through flag pairs.
pub fn flag_pair_gram(q: &Quiver, nu: &DimensionVector, p: Prime, types: &[FlagType]) -> Result<ExactMatrix<QuadraticFieldElement>> {
    let space = RepSpace::new(q, nu, p)?;
    for t in types {
        if t.degree(q.vertex_count()) != *nu {
            return Err(Error::InvalidFlagType(format!("{} is not of degree {nu}", t.display(q))));
        }
    }
    let f = space.field();
    let chains: Vec<Vec<Vec<GradedSubspace>>> = types
        .iter()
        .map(|t| enumerate_flags(&space, t).into_iter().map(|c| full_chain(&space, c)).collect())
        .collect();
    let fixed: Vec<Vec<Vec<Vec<u32>>>> = types
        .iter()
        .map(|t| {
            let chain = coordinate_chain(&space, t);
            space
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(k, &(s, tt))| stability_rows(f, &chain, s, tt, space.shapes()[k].1))
                .collect()
        })
        .collect();
    let dt: Vec<i64> = types.iter().map(|t| flag_dims(q, t).dim_tilde).collect();
    let group = space.group_order();
    let qq = BigInt::from(p.get());
    let n = types.len();
    let mut m = ExactMatrix::zeros(n, n, &QuadraticFieldElement::one(p));
    for a in 0..n {
        for b in a..n {
            let sum: BigInt = chains[b]
                .iter()
                .map(|c| qq.pow(common_stable_dim(&space, &fixed[a], c) as u32))
                .sum();
            let ratio = BigRational::new(sum * BigInt::from(chains[a].len()), group.clone());
            let value = QuadraticFieldElement::sqrt_q_pow(-dt[a] - dt[b], p).scale(&ratio);
            m.set(b, a, value.clone());
            m.set(a, b, value);
        }
    }
    Ok(m)
}

/// The same Gram matrix from full value tables; only for small spaces.
pub fn tabulated_gram(q: &Quiver, p: Prime, types: &[FlagType], budget: u128) -> Result<ExactMatrix<QuadraticFieldElement>> {
    let fs = types
        .iter()
        .map(|t| l_function(q, t, p, budget))
        .collect::<Result<Vec<_>>>()?;
    let n = fs.len();
    let mut m = ExactMatrix::zeros(n, n, &QuadraticFieldElement::one(p));
    for a in 0..n {
        for b in a..n {
            let v = green_pairing(&fs[a], &fs[b])?;
            m.set(b, a, v.clone());
            m.set(a, b, v);
        }
    }
    Ok(m)
}

/// Rank and dependency space of a family of monomial functions.
#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub degree: DimensionVector,
    pub q: u64,
    pub monomials: Vec<String>,
    pub rank: usize,
    /// Reduced row-echelon basis of the linear dependencies among the
    /// monomials, over `Q(sqrt q)`.
    #[serde(serialize_with = "ser_rows")]
    pub fingerprint: Vec<Vec<QuadraticFieldElement>>,
}

fn ser_rows<S: serde::Serializer>(rows: &[Vec<QuadraticFieldElement>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        let strs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&strs)?;
    }
    seq.end()
}

/// Canonical basis of the kernel of `m`.
pub fn kernel_fingerprint(m: &ExactMatrix<QuadraticFieldElement>) -> Vec<Vec<QuadraticFieldElement>> {
    let k = m.kernel();
    if k.is_empty() {
        return k;
    }
    let cols = m.ncols();
    ExactMatrix::from_rows(k, cols, m.unit())
        .expect("kernel vectors share the field")
        .reduced_echelon()
        .rows
}

pub fn span_analysis(q: &Quiver, nu: &DimensionVector, p: Prime, monomials: &[FlagType]) -> Result<SpanReport> {
    let g = flag_pair_gram(q, nu, p, monomials)?;
    let fingerprint = kernel_fingerprint(&g);
    Ok(SpanReport {
        degree: nu.clone(),
        q: p.get(),
        monomials: monomials.iter().map(|t| t.display(q)).collect(),
        rank: monomials.len() - fingerprint.len(),
        fingerprint,
    })
}

pub fn span_analysis_mode(q: &Quiver, nu: &DimensionVector, p: Prime, mode: FlagMode) -> Result<SpanReport> {
    span_analysis(q, nu, p, &enumerate_flag_types(q, nu, mode))
}

/// Finite-field primitive space at degree `m e_i`.
#[derive(Clone, Debug)]
pub struct PrimitiveFq {
    pub dim: usize,
    pub monomials: Vec<FlagType>,
    /// Coefficients over `monomials`, normalized so that the single-step
    /// monomial has coefficient one.
    pub xi: Vec<QuadraticFieldElement>,
}

/// Elements of the monomial span orthogonal to every product of two lower
/// monomials. Those products are exactly the multi-step monomials, so the
/// space is `{c : G[multi, all] c = 0}` modulo `ker G`.
pub fn primitive_space_fq(q: &Quiver, i: usize, m: u32, p: Prime) -> Result<PrimitiveFq> {
    if m == 0 {
        return Err(Error::NonPositive(0));
    }
    if !q.is_imaginary(i) {
        return Err(Error::NotImaginary(q.label(i).to_string()));
    }
    let nu = DimensionVector::unit(q.vertex_count(), i).scaled(m);
    let monomials = enumerate_flag_types(q, &nu, FlagMode::All);
    let g = flag_pair_gram(q, &nu, p, &monomials)?;
    let single = monomials.iter().position(|t| t.len() == 1).unwrap();
    let multi: Vec<usize> = (0..monomials.len()).filter(|&k| k != single).collect();
    let k_multi = g.select_rows(&multi).kernel();
    let nullity = g.kernel().len();
    let v = k_multi
        .iter()
        .find(|v| !v[single].is_zero())
        .ok_or_else(|| Error::Parse("no primitive vector found".into()))?;
    let inv = v[single].inv().unwrap();
    Ok(PrimitiveFq {
        dim: k_multi.len() - nullity,
        xi: v.iter().map(|x| x * &inv).collect(),
        monomials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallfq::space::DEFAULT_BUDGET;
    use crate::quiverlab::presets;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn flag_pairs_match_tables() {
        let cases: Vec<(Quiver, Vec<u32>)> = vec![
            (presets::jordan(), vec![2]),
            (presets::jordan(), vec![3]),
            (presets::two_loop(), vec![2]),
            (presets::a2(), vec![2, 1]),
            (presets::mixed(1), vec![1, 2]),
        ];
        for (q, nu) in cases {
            let nu = DimensionVector::new(nu);
            for prime in [2, 3] {
                let types = enumerate_flag_types(&q, &nu, FlagMode::All);
                let a = flag_pair_gram(&q, &nu, p(prime), &types).unwrap();
                let b = tabulated_gram(&q, p(prime), &types, DEFAULT_BUDGET).unwrap();
                assert_eq!(a, b, "{} at {nu}, q = {prime}", q.to_json());
            }
        }
    }

    #[test]
    fn known_ranks() {
        let a2 = presets::a2();
        let r = span_analysis_mode(&a2, &DimensionVector::new(vec![2, 1]), p(2), FlagMode::FullFlag).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.fingerprint.len(), r.monomials.len() - 2);
        let j = presets::jordan();
        let r = span_analysis_mode(&j, &DimensionVector::new(vec![3]), p(2), FlagMode::All).unwrap();
        assert_eq!(r.rank, 3);
        let single = span_analysis(&j, &DimensionVector::new(vec![2]), p(3), &[FlagType::single(0, 2)]).unwrap();
        assert_eq!((single.rank, single.fingerprint.len()), (1, 0));
    }

    #[test]
    fn gram_is_psd() {
        let q = presets::mixed(1);
        let nu = DimensionVector::new(vec![2, 1]);
        let g = flag_pair_gram(&q, &nu, p(3), &enumerate_flag_types(&q, &nu, FlagMode::All)).unwrap();
        assert!(g.is_positive_semidefinite());
    }

    #[test]
    fn primitive_dims() {
        let j = presets::jordan();
        for m in 1..=2 {
            let pr = primitive_space_fq(&j, 0, m, p(2)).unwrap();
            assert_eq!(pr.dim, 1);
        }
        assert!(primitive_space_fq(&presets::a2(), 0, 2, p(2)).is_err());
    }
}

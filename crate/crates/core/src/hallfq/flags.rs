//! Graded subspaces, stable flag counting and induced subquotient points.

use super::fq::{enumerate_subspaces, subspaces_between, Fq, Subspace};
use super::space::{RepPoint, RepSpace};
use crate::error::{Error, Result};
use crate::quiverlab::{DimensionVector, FlagType};

/// One subspace per vertex.
pub type GradedSubspace = Vec<Subspace>;

pub fn full_graded(space: &RepSpace) -> GradedSubspace {
    (0..space.nu().len()).map(|i| Subspace::full(space.dim(i))).collect()
}

/// `sum_(ω : t(ω) = i) x_ω(W_s(ω))`.
fn image_into(space: &RepSpace, x: &RepPoint, w: &GradedSubspace, i: usize) -> Subspace {
    let f = space.field();
    let mut vecs = Vec::new();
    for (k, &(s, t)) in space.quiver().arrows().iter().enumerate() {
        if t == i {
            for b in &w[s].basis {
                vecs.push(space.apply(x, k, b));
            }
        }
    }
    Subspace::span(f, space.dim(i), vecs)
}

/// Number of `x`-stable flags of type `f`: `x_ω(V^(l-1)_s) ⊆ V^l_t` for
/// every arrow and step.
pub fn count_stable_flags(space: &RepSpace, x: &RepPoint, f: &FlagType) -> Result<u64> {
    if f.degree(space.nu().len()) != *space.nu() {
        return Err(Error::DimensionMismatch {
            expected: space.nu().total() as usize,
            got: f.degree(space.nu().len()).total() as usize,
        });
    }
    let steps: Vec<(usize, u32)> = f.steps().collect();
    Ok(count_rec(space, x, &full_graded(space), &steps))
}

fn count_rec(space: &RepSpace, x: &RepPoint, cur: &GradedSubspace, steps: &[(usize, u32)]) -> u64 {
    let Some(&(i, a)) = steps.first() else {
        return 1;
    };
    let u = image_into(space, x, cur, i);
    let target = cur[i].dim() - a as usize;
    if u.dim() > target {
        return 0;
    }
    let rest = &steps[1..];
    if target == 0 {
        // the only choice is zero, which contains u = 0
        let mut next = cur.clone();
        next[i] = Subspace::zero(space.dim(i));
        return count_rec(space, x, &next, rest);
    }
    let f = space.field();
    let mut total = 0;
    for w in subspaces_between(f, &u, &cur[i], target) {
        let mut next = cur.clone();
        next[i] = w;
        total += count_rec(space, x, &next, rest);
    }
    total
}

/// All flags of type `f` in `V`, each as the chain `V^1, ..., V^(n-1)`
/// (the ends `V` and `0` are implicit).
pub fn enumerate_flags(space: &RepSpace, f: &FlagType) -> Vec<Vec<GradedSubspace>> {
    fn go(
        space: &RepSpace,
        cur: &GradedSubspace,
        steps: &[(usize, u32)],
        chain: &mut Vec<GradedSubspace>,
        out: &mut Vec<Vec<GradedSubspace>>,
    ) {
        let Some(&(i, a)) = steps.first() else {
            out.push(chain.clone());
            return;
        };
        let target = cur[i].dim() - a as usize;
        let zero = Subspace::zero(space.dim(i));
        for w in subspaces_between(space.field(), &zero, &cur[i], target) {
            let mut next = cur.clone();
            next[i] = w;
            chain.push(next.clone());
            go(space, &next, &steps[1..], chain, out);
            chain.pop();
        }
    }
    let steps: Vec<(usize, u32)> = f.steps().collect();
    let mut out = Vec::new();
    go(space, &full_graded(space), &steps, &mut Vec::new(), &mut out);
    for chain in out.iter_mut() {
        chain.pop();
    }
    out
}

/// Graded subspaces of dimension `w`, as the product of per-vertex lists.
pub fn graded_subspaces(space: &RepSpace, w: &DimensionVector) -> Vec<GradedSubspace> {
    let f = space.field();
    let mut out: Vec<GradedSubspace> = vec![vec![]];
    for i in 0..space.nu().len() {
        let options = enumerate_subspaces(f, space.dim(i), w[i] as usize);
        out = out
            .into_iter()
            .flat_map(|g| {
                options.iter().map(move |s| {
                    let mut h = g.clone();
                    h.push(s.clone());
                    h
                })
            })
            .collect();
    }
    out
}

pub fn is_invariant(space: &RepSpace, x: &RepPoint, w: &GradedSubspace) -> bool {
    let f = space.field();
    space.quiver().arrows().iter().enumerate().all(|(k, &(s, t))| {
        w[s].basis.iter().all(|b| w[t].contains(f, &space.apply(x, k, b)))
    })
}

/// Restriction `x_W` in the echelon basis of `W`: the coordinates of
/// `x_ω b` are its entries at the pivot columns of `W_t`.
pub fn sub_point(space: &RepSpace, x: &RepPoint, w: &GradedSubspace) -> RepPoint {
    let mats = space
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let cols: Vec<Vec<u32>> = w[s].basis.iter().map(|b| space.apply(x, k, b)).collect();
            let rows = w[t].dim();
            let mut m = vec![0; rows * cols.len()];
            for (c, y) in cols.iter().enumerate() {
                for (r, &p) in w[t].pivots.iter().enumerate() {
                    m[r * cols.len() + c] = y[p];
                }
            }
            m
        })
        .collect();
    RepPoint { mats }
}

/// Quotient `x_(V/W)` in the basis of coordinate vectors at the free columns
/// of `W`: reduce `x_ω e_j` modulo `W_t` and read the free coordinates.
pub fn quotient_point(space: &RepSpace, x: &RepPoint, w: &GradedSubspace) -> RepPoint {
    let f = space.field();
    let mats = space
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let src = w[s].free_columns();
            let tgt = w[t].free_columns();
            let (rows, ncols) = (tgt.len(), src.len());
            let (_, full_cols) = space.shapes()[k];
            let mut m = vec![0; rows * ncols];
            for (c, &j) in src.iter().enumerate() {
                let col: Vec<u32> = (0..space.dim(t)).map(|r| x.mats[k][r * full_cols + j]).collect();
                let red = w[t].reduce(f, &col);
                for (r, &i) in tgt.iter().enumerate() {
                    m[r * ncols + c] = red[i];
                }
            }
            m
        })
        .collect();
    RepPoint { mats }
}

/// `W ∩ V_i` closure data for [`n_i_of_point`].
fn loop_closure(space: &RepSpace, x: &RepPoint, i: usize, start: Subspace) -> Subspace {
    let f: Fq = space.field();
    let loops: Vec<usize> = (0..space.quiver().arrows().len())
        .filter(|&k| space.quiver().arrows()[k] == (i, i))
        .collect();
    let mut cur = start;
    loop {
        let mut vecs = cur.basis.clone();
        for &k in &loops {
            for b in &cur.basis {
                vecs.push(space.apply(x, k, b));
            }
        }
        let next = Subspace::span(f, space.dim(i), vecs);
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// `n_i(x)`: codimension in `V_i` of the images of non-loop arrows into `i`,
/// closed under the loops at `i`.
pub fn n_i_of_point(space: &RepSpace, x: &RepPoint, i: usize) -> Result<usize> {
    if !space.quiver().is_sink(i) {
        return Err(Error::NotSink(space.quiver().label(i).to_string()));
    }
    let f = space.field();
    let mut vecs = Vec::new();
    for (k, &(s, t)) in space.quiver().arrows().iter().enumerate() {
        if t == i && s != i {
            for j in 0..space.dim(s) {
                let e: Vec<u32> = (0..space.dim(s)).map(|c| u32::from(c == j)).collect();
                vecs.push(space.apply(x, k, &e));
            }
        }
    }
    let start = Subspace::span(f, space.dim(i), vecs);
    Ok(space.dim(i) - loop_closure(space, x, i, start).dim())
}

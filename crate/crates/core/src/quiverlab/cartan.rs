//! Euler forms and Borcherds-Cartan matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::quiver::{DimensionVector, Quiver};
use crate::error::{Error, Result};

/// `<a, b> = sum_i a_i b_i - sum_arrows a_s b_t`.
pub fn euler_form(q: &Quiver, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
    q.check_dimension(a)?;
    q.check_dimension(b)?;
    let diag: i64 = (0..q.vertex_count()).map(|i| (a[i] * b[i]) as i64).sum();
    let arrows: i64 = q.arrows().iter().map(|&(s, t)| (a[s] * b[t]) as i64).sum();
    Ok(diag - arrows)
}

pub fn symmetric_form(q: &Quiver, a: &DimensionVector, b: &DimensionVector) -> Result<i64> {
    Ok(euler_form(q, a, b)? + euler_form(q, b, a)?)
}

/// An index of a (possibly extended) Borcherds-Cartan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CartanIndex {
    Vertex(usize),
    /// The index `n i` for an imaginary vertex `i`.
    Extended { vertex: usize, n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub indices: Vec<CartanIndex>,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<i64>>,
    pub real: Vec<bool>,
}

impl CartanMatrix {
    /// Builds and validates a matrix; tags are derived from the diagonal.
    pub fn new(indices: Vec<CartanIndex>, labels: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = indices.len();
        if labels.len() != n || entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Ragged);
        }
        let real = (0..n).map(|i| entries[i][i] == 2).collect();
        Ok(Self {
            indices,
            labels,
            entries,
            real,
        })
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Symmetric, diagonal in `{2, 0, -2, ...}`, off-diagonal nonpositive.
    pub fn is_borcherds(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            let d = self.entries[i][i];
            (d == 2 || (d <= 0 && d % 2 == 0))
                && (0..n).all(|j| self.entries[i][j] == self.entries[j][i] && (i == j || self.entries[i][j] <= 0))
        })
    }

    /// Copy with entry `(i, j)` and `(j, i)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: i64) -> Self {
        let mut c = self.clone();
        c.entries[i][j] = value;
        c.entries[j][i] = value;
        c.real = (0..c.size()).map(|k| c.entries[k][k] == 2).collect();
        c
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (k, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            let tag = if self.real[k] { "real" } else { "imaginary" };
            out.push_str(&format!("{:>4}  [{}]  {tag}\n", self.labels[k], cells.join(" ")));
        }
        out
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub fn cartan_matrix(q: &Quiver) -> CartanMatrix {
    let n = q.vertex_count();
    let e = |i| DimensionVector::unit(n, i);
    let entries = (0..n)
        .map(|i| (0..n).map(|j| symmetric_form(q, &e(i), &e(j)).unwrap()).collect())
        .collect();
    CartanMatrix::new(
        (0..n).map(CartanIndex::Vertex).collect(),
        q.labels().to_vec(),
        entries,
    )
    .unwrap()
}

/// `C ≈ D`: identical off-diagonal entries and identical real/imaginary tags.
pub fn approx_equivalent(c: &CartanMatrix, d: &CartanMatrix) -> Result<bool> {
    if c.indices != d.indices {
        return Err(Error::IndexMismatch);
    }
    let n = c.size();
    let off = (0..n).all(|i| (0..n).all(|j| i == j || c.entries[i][j] == d.entries[i][j]));
    Ok(off && c.real == d.real)
}

/// The matrix on real vertices plus `(i, n)` for imaginary `i`, `1 <= n <= cutoff`.
/// Entries are `(deg a, deg b)` with `deg (i, n) = n e_i`.
pub fn extend_cartan(q: &Quiver, cutoff: u32) -> CartanMatrix {
    let c = cartan_matrix(q);
    let mut indices = Vec::new();
    for i in 0..q.vertex_count() {
        if q.is_imaginary(i) {
            indices.extend((1..=cutoff).map(|n| CartanIndex::Extended { vertex: i, n }));
        } else {
            indices.push(CartanIndex::Vertex(i));
        }
    }
    let split = |ix: &CartanIndex| match *ix {
        CartanIndex::Vertex(v) => (v, 1i64),
        CartanIndex::Extended { vertex, n } => (vertex, n as i64),
    };
    let entries = indices
        .iter()
        .map(|a| {
            let (i, n) = split(a);
            indices
                .iter()
                .map(|b| {
                    let (j, m) = split(b);
                    n * m * c.get(i, j)
                })
                .collect()
        })
        .collect();
    let labels = indices
        .iter()
        .map(|ix| match *ix {
            CartanIndex::Vertex(v) => q.label(v).to_string(),
            CartanIndex::Extended { vertex, n } => format!("{}[{n}]", q.label(vertex)),
        })
        .collect();
    CartanMatrix::new(indices, labels, entries).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverlab::presets;

    #[test]
    fn forms() {
        let a2 = presets::a2();
        let (e1, e2) = (DimensionVector::unit(2, 0), DimensionVector::unit(2, 1));
        assert_eq!(euler_form(&a2, &e1, &e2).unwrap(), -1);
        assert_eq!(symmetric_form(&a2, &e1, &e2).unwrap(), -1);
        let e = DimensionVector::unit(1, 0);
        assert_eq!(euler_form(&presets::jordan(), &e, &e).unwrap(), 0);
        assert_eq!(euler_form(&presets::two_loop(), &e, &e).unwrap(), -1);
        assert_eq!(symmetric_form(&presets::two_loop(), &e, &e).unwrap(), -2);
        assert!(euler_form(&a2, &e, &e).is_err());
    }

    #[test]
    fn cartan() {
        assert_eq!(cartan_matrix(&presets::a2()).entries, vec![vec![2, -1], vec![-1, 2]]);
        let m = cartan_matrix(&presets::mixed(1));
        assert_eq!(m.entries, vec![vec![2, -1], vec![-1, 0]]);
        assert_eq!(m.real, vec![true, false]);
        assert_eq!(cartan_matrix(&presets::two_loop()).entries, vec![vec![-2]]);
        let multi = Quiver::from_labels(&["1", "2"], &[("1", "2"), ("1", "2")]).unwrap();
        assert_eq!(cartan_matrix(&multi).get(0, 1), -2);
    }

    #[test]
    fn equivalence() {
        let c = cartan_matrix(&presets::jordan());
        let d = cartan_matrix(&presets::two_loop());
        assert!(approx_equivalent(&c, &d).unwrap());
        assert!(approx_equivalent(&c, &c).unwrap());
        let real = cartan_matrix(&Quiver::from_labels(&["1"], &[]).unwrap());
        assert!(!approx_equivalent(&c, &real).unwrap());
        assert!(approx_equivalent(&c, &cartan_matrix(&presets::a2())).is_err());
    }

    #[test]
    fn extended() {
        let j = extend_cartan(&presets::jordan(), 3);
        assert_eq!(j.size(), 3);
        assert!(j.entries.iter().flatten().all(|&x| x == 0));
        let t = extend_cartan(&presets::two_loop(), 2);
        assert_eq!(t.get(0, 1), -4);
        let m = extend_cartan(&presets::mixed(1), 3);
        assert_eq!(m.labels, vec!["1", "2[1]", "2[2]", "2[3]"]);
        assert_eq!(m.get(0, 3), -3);
        assert_eq!(m.real, vec![true, false, false, false]);
    }
}

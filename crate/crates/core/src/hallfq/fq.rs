//! Linear algebra over a prime field `F_p` with small `p`.

use crate::qring::Prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fq {
    p: u32,
}

impl Fq {
    pub fn new(q: Prime) -> Self {
        assert!(q.get() < 1 << 15, "field too large for u32 arithmetic");
        Self { p: q.get() as u32 }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let mut r = 1;
        let mut b = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// `y += c * x`.
    #[inline]
    pub fn axpy(self, y: &mut [u32], c: u32, x: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &b) in y.iter_mut().zip(x) {
            *a = (*a + c * b) % self.p;
        }
    }
}

/// Reduced row-echelon form in place; zero rows are dropped. Returns the
/// pivot columns.
pub fn rref(f: Fq, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = f.neg(row[c]);
                f.axpy(row, factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: Fq, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// `m * v` for a row-major `rows x cols` matrix.
#[inline]
pub fn mat_vec(f: Fq, m: &[u32], rows: usize, cols: usize, v: &[u32]) -> Vec<u32> {
    (0..rows)
        .map(|r| {
            let row = &m[r * cols..(r + 1) * cols];
            row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % f.p())
        })
        .collect()
}

/// Row-major product of `a` (`n x k`) and `b` (`k x m`).
pub fn mat_mul(f: Fq, a: &[u32], b: &[u32], n: usize, k: usize, m: usize) -> Vec<u32> {
    let mut out = vec![0; n * m];
    for i in 0..n {
        for l in 0..k {
            let x = a[i * k + l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i * m + j] = (out[i * m + j] + x * b[l * m + j]) % f.p();
            }
        }
    }
    out
}

/// Inverse of a square row-major matrix, `None` if singular.
pub fn mat_inv(f: Fq, a: &[u32], n: usize) -> Option<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut r = a[i * n..(i + 1) * n].to_vec();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let piv = rref(f, &mut rows);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(rows.iter().flat_map(|r| r[n..].iter().copied()).collect())
}

/// A subspace of `F_p^n`, stored as its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self {
            ambient: n,
            basis: vec![],
            pivots: vec![],
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient: n,
            basis: (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(f: Fq, n: usize, vecs: Vec<Vec<u32>>) -> Self {
        let mut basis: Vec<Vec<u32>> = vecs.into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
        let pivots = if basis.is_empty() { vec![] } else { rref(f, &mut basis) };
        Self {
            ambient: n,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in
    /// the subspace. The result vanishes at every pivot column.
    pub fn reduce(&self, f: Fq, v: &[u32]) -> Vec<u32> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if c != 0 {
                f.axpy(&mut r, f.neg(c), b);
            }
        }
        r
    }

    pub fn contains(&self, f: Fq, v: &[u32]) -> bool {
        self.reduce(f, v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, f: Fq, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(f, b))
    }

    /// Non-pivot columns: the coordinate complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Functionals vanishing on the subspace, one per free column.
    pub fn annihilator(&self, f: Fq) -> Vec<Vec<u32>> {
        self.free_columns()
            .into_iter()
            .map(|j| {
                let mut a = vec![0; self.ambient];
                a[j] = 1;
                for (b, &p) in self.basis.iter().zip(&self.pivots) {
                    a[p] = f.neg(b[j]);
                }
                a
            })
            .collect()
    }
}

/// All `k`-dimensional subspaces of `F_p^n`, grouped by pivot set.
pub fn enumerate_subspaces(f: Fq, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let p = f.p();
    for pivots in combinations(n, k) {
        // free slots: row r, column c > pivots[r], c not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pv = &pivots;
                (pv[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let total = (p as u64).pow(slots.len() as u32);
        for mut code in 0..total {
            let mut basis = vec![vec![0u32; n]; k];
            for (r, &c) in pivots.iter().enumerate() {
                basis[r][c] = 1;
            }
            for &(r, c) in &slots {
                basis[r][c] = (code % p as u64) as u32;
                code /= p as u64;
            }
            out.push(Subspace {
                ambient: n,
                basis,
                pivots: pivots.clone(),
            });
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Subspaces `S` with `lower ⊆ S ⊆ upper` and `dim S = d`.
pub fn subspaces_between(f: Fq, lower: &Subspace, upper: &Subspace, d: usize) -> Vec<Subspace> {
    if d < lower.dim() || d > upper.dim() {
        return vec![];
    }
    let n = upper.ambient;
    // extend a basis of `lower` to one of `upper`
    let mut acc = lower.clone();
    let mut extra = Vec::new();
    for b in &upper.basis {
        if !acc.contains(f, b) {
            extra.push(b.clone());
            let mut vecs = acc.basis.clone();
            vecs.push(b.clone());
            acc = Subspace::span(f, n, vecs);
        }
    }
    let c = extra.len();
    let need = d - lower.dim();
    if need == 0 {
        return vec![lower.clone()];
    }
    if need == c {
        return vec![upper.clone()];
    }
    enumerate_subspaces(f, c, need)
        .into_iter()
        .map(|s| {
            let mut vecs = lower.basis.clone();
            for row in &s.basis {
                let mut v = vec![0; n];
                for (coef, e) in row.iter().zip(&extra) {
                    f.axpy(&mut v, *coef, e);
                }
                vecs.push(v);
            }
            Subspace::span(f, n, vecs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> Fq {
        Fq::new(Prime::new(p).unwrap())
    }

    #[test]
    fn arithmetic() {
        let f = field(5);
        assert_eq!(f.mul(f.inv(3), 3), 1);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(0), 0);
    }

    #[test]
    fn subspace_counts_are_gaussian() {
        // (n choose k)_q for q = 2: n = 4 gives 1, 15, 35, 15, 1
        let f = field(2);
        let counts: Vec<usize> = (0..=4).map(|k| enumerate_subspaces(f, 4, k).len()).collect();
        assert_eq!(counts, vec![1, 15, 35, 15, 1]);
        let f3 = field(3);
        assert_eq!(enumerate_subspaces(f3, 3, 1).len(), 13);
    }

    #[test]
    fn between_and_annihilator() {
        let f = field(3);
        let line = Subspace::span(f, 3, vec![vec![1, 1, 0]]);
        let planes = subspaces_between(f, &line, &Subspace::full(3), 2);
        assert_eq!(planes.len(), 4);
        assert!(planes.iter().all(|p| p.contains_space(f, &line)));
        for p in &planes {
            for a in p.annihilator(f) {
                for b in &p.basis {
                    assert_eq!(a.iter().zip(b).map(|(x, y)| x * y).sum::<u32>() % 3, 0);
                }
            }
        }
    }

    #[test]
    fn inverse() {
        let f = field(3);
        let a = vec![1, 2, 0, 1];
        let inv = mat_inv(f, &a, 2).unwrap();
        assert_eq!(mat_mul(f, &a, &inv, 2, 2, 2), vec![1, 0, 0, 1]);
        assert!(mat_inv(f, &[1, 1, 1, 1], 2).is_none());
    }
}

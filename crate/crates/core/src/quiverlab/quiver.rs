//! Finite quivers with loops and multi-arrows.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Index, IndexMut};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowFile {
    src: String,
    tgt: String,
}

/// A quiver. Vertices are ordered by input order; arrows are `(source, target)`
/// vertex indices. Loop counts and the real/imaginary split are derived on
/// demand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new<S: Into<String>>(labels: Vec<S>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (k, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), k).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        for &(s, t) in &arrows {
            let bad = [s, t].into_iter().find(|&v| v >= labels.len());
            if let Some(v) = bad {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        Ok(Self { labels, arrows })
    }

    /// Builds a quiver from labelled arrows.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Self> {
        let q = Self::new(vertices.to_vec(), vec![])?;
        let arrows = arrows
            .iter()
            .map(|(s, t)| Ok((q.vertex_index(s)?, q.vertex_index(t)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { arrows, ..q })
    }

    /// Parses the JSON quiver format. Syntax errors carry line and column,
    /// dangling endpoints name the arrow and the label.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: QuiverFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        let q = Self::new(file.vertices, vec![])?;
        let mut arrows = Vec::with_capacity(file.arrows.len());
        for (k, a) in file.arrows.iter().enumerate() {
            let end = |label: &str, role: &str| {
                q.vertex_index(label).map_err(|_| {
                    Error::Parse(format!("arrow #{k}: {role} refers to unknown vertex `{label}`"))
                })
            };
            arrows.push((end(&a.src, "src")?, end(&a.tgt, "tgt")?));
        }
        Ok(Self { arrows, ..q })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.labels.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| ArrowFile {
                    src: self.labels[s].clone(),
                    tgt: self.labels[t].clone(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("quiver serializes")
    }

    /// SHA-256 of the canonical JSON form, hex encoded.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// `l_i`, the number of loops at `i`.
    pub fn loop_count(&self, i: usize) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == i && t == i).count()
    }

    pub fn is_imaginary(&self, i: usize) -> bool {
        self.loop_count(i) > 0
    }

    pub fn imaginary_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| self.is_imaginary(i)).collect()
    }

    pub fn real_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| !self.is_imaginary(i)).collect()
    }

    /// Indices of arrows that are not loops.
    pub fn non_loop_arrows(&self) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].0 != self.arrows[k].1).collect()
    }

    /// Reverses arrow `k`. Loops are left alone.
    pub fn flip_arrow(&self, k: usize) -> Self {
        let mut q = self.clone();
        let (s, t) = q.arrows[k];
        q.arrows[k] = (t, s);
        q
    }

    /// Same vertices, loops removed.
    pub fn positive_part_quiver(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            arrows: self.arrows.iter().copied().filter(|(s, t)| s != t).collect(),
        }
    }

    /// `i` receives no non-loop arrow out of itself, i.e. it is a sink of the
    /// loop-free part.
    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, t)| s != i || t == i)
    }

    pub fn check_dimension(&self, d: &DimensionVector) -> Result<()> {
        if d.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count(),
                got: d.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Preset quivers used throughout the test suites.
pub mod presets {
    use super::Quiver;

    /// One vertex, one loop.
    pub fn jordan() -> Quiver {
        Quiver::from_labels(&["1"], &[("1", "1")]).unwrap()
    }

    /// One vertex, two loops.
    pub fn two_loop() -> Quiver {
        Quiver::from_labels(&["1"], &[("1", "1"), ("1", "1")]).unwrap()
    }

    /// `1 -> 2`.
    pub fn a2() -> Quiver {
        Quiver::from_labels(&["1", "2"], &[("1", "2")]).unwrap()
    }

    /// `1 -> 2` with `loops` loops at `2`.
    pub fn mixed(loops: usize) -> Quiver {
        let mut arrows = vec![("1", "2")];
        arrows.extend(std::iter::repeat_n(("2", "2"), loops));
        Quiver::from_labels(&["1", "2"], &arrows).unwrap()
    }

    pub fn by_name(name: &str) -> Option<Quiver> {
        Some(match name {
            "jordan" => jordan(),
            "two_loop" => two_loop(),
            "a2" => a2(),
            "mixed1" => mixed(1),
            "mixed2" => mixed(2),
            _ => return None,
        })
    }

    pub const NAMES: [&str; 5] = ["jordan", "two_loop", "a2", "mixed1", "mixed2"];
}

/// Multiplicities per vertex, in the quiver's vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(Vec<u32>);

impl DimensionVector {
    pub fn new(v: Vec<u32>) -> Self {
        Self(v)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut d = Self::zero(n);
        d.0[i] = 1;
        d
    }

    /// From `(label, multiplicity)` pairs.
    pub fn from_labels(q: &Quiver, entries: &[(&str, u32)]) -> Result<Self> {
        let mut d = Self::zero(q.vertex_count());
        for (l, m) in entries {
            d.0[q.vertex_index(l)?] += m;
        }
        Ok(d)
    }

    /// Parses `"2"` (single vertex), `"2,1"` (positional) or `"1:2,2:1"`.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let bad = || Error::Parse(format!("cannot read dimension vector `{text}`"));
        if parts.iter().any(|p| p.contains(':')) {
            let mut d = Self::zero(q.vertex_count());
            for p in parts {
                let (l, m) = p.split_once(':').ok_or_else(bad)?;
                d.0[q.vertex_index(l.trim())?] += m.trim().parse::<u32>().map_err(|_| bad())?;
            }
            return Ok(d);
        }
        let v = parts
            .iter()
            .map(|p| p.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let d = Self(v);
        q.check_dimension(&d)?;
        Ok(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn scaled(&self, n: u32) -> Self {
        Self(self.0.iter().map(|a| a * n).collect())
    }

    /// All nonzero dimension vectors `d` with `d <= self`, ordered by total
    /// then lexicographically.
    pub fn nonzero_below(&self) -> Vec<Self> {
        let mut out = vec![Self::zero(self.len())];
        for (i, &m) in self.0.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|d| {
                    (0..=m).map(move |k| {
                        let mut e = d.clone();
                        e.0[i] = k;
                        e
                    })
                })
                .collect();
        }
        out.retain(|d| !d.is_zero());
        out.sort_by(|a, b| a.total().cmp(&b.total()).then(a.cmp(b)));
        out
    }

    /// All nonzero dimension vectors with total at most `n`.
    pub fn all_up_to_total(vertices: usize, n: u32) -> Vec<Self> {
        let mut out: Vec<Self> = Self(vec![n; vertices])
            .nonzero_below()
            .into_iter()
            .filter(|d| d.total() <= n)
            .collect();
        out.dedup();
        out
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| if m == 1 { format!("e{}", q.label(i)) } else { format!("{m}e{}", q.label(i)) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl Index<usize> for DimensionVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl IndexMut<usize> for DimensionVector {
    fn index_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.0[i]
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let q = Quiver::from_json(r#"{"vertices":["1"],"arrows":[{"src":"1","tgt":"1"}]}"#).unwrap();
        assert_eq!(q, presets::jordan());
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
        assert_eq!(q.content_hash().len(), 64);
    }

    #[test]
    fn rejects_bad_files() {
        let dangling = Quiver::from_json(r#"{"vertices":["1"],"arrows":[{"src":"1","tgt":"x"}]}"#);
        match dangling {
            Err(Error::Parse(m)) => assert!(m.contains("`x`") && m.contains("arrow #0")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Quiver::from_json(r#"{"vertices":["1","1"],"arrows":[]}"#),
            Err(Error::DuplicateVertex(_))
        ));
        match Quiver::from_json("{\"vertices\":[\"1\"],\n \"arrows\": [}") {
            Err(Error::Parse(m)) => assert!(m.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loops_and_parts() {
        let m = presets::mixed(2);
        assert_eq!(m.loop_count(1), 2);
        assert_eq!(m.imaginary_vertices(), vec![1]);
        assert_eq!(m.real_vertices(), vec![0]);
        assert_eq!(m.positive_part_quiver().arrows(), &[(0, 1)]);
        assert!(m.is_sink(1) && !m.is_sink(0));
        assert_eq!(m.flip_arrow(0).arrows()[0], (1, 0));
        assert!(presets::jordan().positive_part_quiver().arrows().is_empty());
    }

    #[test]
    fn dimension_vectors() {
        let q = presets::a2();
        let d = DimensionVector::parse(&q, "1:2,2:1").unwrap();
        assert_eq!(d, DimensionVector::new(vec![2, 1]));
        assert_eq!(DimensionVector::parse(&q, "2,1").unwrap(), d);
        assert!(DimensionVector::parse(&q, "3:1").is_err());
        assert_eq!(d.nonzero_below().len(), 5);
        assert_eq!(DimensionVector::all_up_to_total(2, 2).len(), 5);
        assert_eq!(d.display(&q), "2e1+e2");
    }
}

//! Content-addressed on-disk cache for flag-count tables.
//!
//! File layout (little endian): magic `QHTB`, format version `u32`,
//! `vexp: i64`, `len: u64`, `len` counts as `u64`, then the SHA-256 of
//! everything before it. Any mismatch evicts the entry.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::functions::{flag_count_table, CountFunction};
use super::space::RepSpace;
use crate::error::Result;
use crate::qring::Prime;
use crate::quiverlab::{flag_dims, FlagType, Quiver};

const MAGIC: &[u8; 4] = b"QHTB";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

/// Outcome of a cache lookup, for diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    Evicted,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(q: &Quiver, f: &FlagType, p: Prime) -> String {
        let text = format!(
            "v{FORMAT_VERSION}|{}|{}|{}|{:?}|{:?}",
            q.content_hash(),
            f.degree(q.vertex_count()),
            p,
            f.verts(),
            f.mults()
        );
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.qht"))
    }

    /// `ℓ_f` as a count table, read from disk when a valid entry exists.
    /// I/O problems fall back to recomputation.
    pub fn l_counts(&self, q: &Quiver, f: &FlagType, p: Prime, budget: u128) -> Result<(CountFunction, CacheStatus)> {
        f.validate(q)?;
        let space = RepSpace::new(q, &f.degree(q.vertex_count()), p)?;
        space.check_budget(budget)?;
        let path = self.path_for(&Self::key(q, f, p));
        let mut status = CacheStatus::Miss;
        if let Ok(bytes) = fs::read(&path) {
            match decode(&bytes, space.size() as usize) {
                Some((vexp, counts)) => return Ok((CountFunction { space, counts, vexp }, CacheStatus::Hit)),
                None => {
                    let _ = fs::remove_file(&path);
                    status = CacheStatus::Evicted;
                }
            }
        }
        let counts = flag_count_table(&space, f, budget)?;
        let vexp = -flag_dims(q, f).dim_tilde;
        if fs::create_dir_all(&self.dir).is_ok() {
            let tmp = path.with_extension("tmp");
            if fs::write(&tmp, encode(vexp, &counts)).is_ok() {
                let _ = fs::rename(&tmp, &path);
            }
        }
        Ok((CountFunction { space, counts, vexp }, status))
    }
}

pub fn encode(vexp: i64, counts: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(24 + 8 * counts.len() + 32);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&vexp.to_le_bytes());
    out.extend_from_slice(&(counts.len() as u64).to_le_bytes());
    for c in counts {
        out.extend_from_slice(&c.to_le_bytes());
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

pub fn decode(bytes: &[u8], expected_len: usize) -> Option<(i64, Vec<u64>)> {
    if bytes.len() < 24 + 32 || &bytes[..4] != MAGIC {
        return None;
    }
    let (body, digest) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(body).as_slice() != digest {
        return None;
    }
    let word = |k: usize| -> [u8; 8] { body[k..k + 8].try_into().unwrap() };
    let version = u32::from_le_bytes(body[4..8].try_into().unwrap());
    let vexp = i64::from_le_bytes(word(8));
    let len = u64::from_le_bytes(word(16)) as usize;
    if version != FORMAT_VERSION || len != expected_len || body.len() != 24 + 8 * len {
        return None;
    }
    Some((vexp, (0..len).map(|k| u64::from_le_bytes(word(24 + 8 * k))).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallfq::space::DEFAULT_BUDGET;
    use crate::quiverlab::presets;

    #[test]
    fn round_trip_and_eviction() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        let q = presets::jordan();
        let f = FlagType::new(vec![0, 0], vec![1, 1]).unwrap();
        let p = Prime::new(3).unwrap();
        let (a, s1) = cache.l_counts(&q, &f, p, DEFAULT_BUDGET).unwrap();
        let (b, s2) = cache.l_counts(&q, &f, p, DEFAULT_BUDGET).unwrap();
        assert_eq!((s1, s2), (CacheStatus::Miss, CacheStatus::Hit));
        assert_eq!(a, b);
        let path = cache.path_for(&TableCache::key(&q, &f, p));
        let mut bytes = fs::read(&path).unwrap();
        bytes[30] ^= 1;
        fs::write(&path, &bytes).unwrap();
        let (c, s3) = cache.l_counts(&q, &f, p, DEFAULT_BUDGET).unwrap();
        assert_eq!(s3, CacheStatus::Evicted);
        assert_eq!(c, a);
        assert_eq!(fs::read(&path).unwrap(), encode(a.vexp, &a.counts));
    }
}

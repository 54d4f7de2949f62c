//! The Leech lattice in raw integer coordinates.
//!
//! A vector is stored as its 24 integer coordinates (indexed like
//! [`crate::golay::LABELS`]); the form is `⟨x,y⟩ = −(x·y)/8`, so the
//! lattice is even, unimodular and negative definite.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::golay::{GolayCode, IndexSet24};
use crate::lattice::{hermite_normal_form, IntMatrix};

pub const DIM: usize = 24;
pub const MINIMAL_VECTOR_COUNT: usize = 196_560;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeechVector(pub [i64; DIM]);

impl LeechVector {
    pub const ZERO: LeechVector = LeechVector([0; DIM]);

    /// `ν_S`: the indicator vector of a set.
    pub fn indicator(set: IndexSet24) -> Self {
        let mut c = [0; DIM];
        for p in set.positions() {
            c[p] = 1;
        }
        LeechVector(c)
    }

    pub fn unit(position: usize) -> Self {
        let mut c = [0; DIM];
        c[position] = 1;
        LeechVector(c)
    }

    /// `ν_Ω`, the all-ones vector.
    pub fn omega() -> Self {
        LeechVector([1; DIM])
    }

    pub fn coords(&self) -> &[i64; DIM] {
        &self.0
    }

    pub fn raw_dot(&self, other: &LeechVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn raw_norm(&self) -> i64 {
        self.raw_dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for LeechVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Add for LeechVector {
    type Output = LeechVector;
    fn add(mut self, rhs: LeechVector) -> LeechVector {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl Sub for LeechVector {
    type Output = LeechVector;
    fn sub(mut self, rhs: LeechVector) -> LeechVector {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
        self
    }
}

impl Neg for LeechVector {
    type Output = LeechVector;
    fn neg(mut self) -> LeechVector {
        for a in self.0.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul<LeechVector> for i64 {
    type Output = LeechVector;
    fn mul(self, mut v: LeechVector) -> LeechVector {
        for a in v.0.iter_mut() {
            *a *= self;
        }
        v
    }
}

/// `⟨x,y⟩ = −(x·y)/8`.
pub fn inner(x: &LeechVector, y: &LeechVector) -> Result<i64> {
    let d = x.raw_dot(y);
    if d % 8 != 0 {
        return Err(Error::NonIntegral(format!("raw product {d} is not divisible by 8")));
    }
    Ok(-d / 8)
}

/// Upper-triangular Hermite basis of the lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct LeechBasis {
    rows: [[i64; DIM]; DIM],
}

impl LeechBasis {
    pub fn rows(&self) -> &[[i64; DIM]; DIM] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> LeechVector {
        LeechVector(self.rows[i])
    }

    /// Coefficients of `v` in this basis, if it is a member.
    pub fn coefficients(&self, v: &LeechVector) -> Option<[i64; DIM]> {
        let mut rest = v.0;
        let mut coef = [0; DIM];
        for i in 0..DIM {
            let pivot = self.rows[i][i];
            if rest[i] % pivot != 0 {
                return None;
            }
            let c = rest[i] / pivot;
            coef[i] = c;
            if c != 0 {
                for j in i..DIM {
                    rest[j] -= c * self.rows[i][j];
                }
            }
        }
        Some(coef)
    }

    pub fn contains(&self, v: &LeechVector) -> bool {
        self.coefficients(v).is_some()
    }

    pub fn raw_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows)
    }

    /// Gram matrix of the basis under `⟨,⟩`.
    pub fn gram_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..DIM)
            .map(|i| (0..DIM).map(|j| inner(&self.row(i), &self.row(j))).collect())
            .collect()
    }

    /// SHA-256 over the little-endian coordinates, hex encoded.
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        for row in &self.rows {
            for c in row {
                h.update(c.to_le_bytes());
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for LeechBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

/// Generators `ν_Ω − 4ν_∞` and `2ν_K` for every octad `K`.
pub fn generators(code: &GolayCode) -> Vec<LeechVector> {
    let mut gens = vec![LeechVector::omega() - 4 * LeechVector::unit(0)];
    gens.extend(code.octads().iter().map(|&o| 2 * LeechVector::indicator(o)));
    gens
}

pub fn build_basis(code: &GolayCode) -> Result<LeechBasis> {
    let gens: Vec<[i64; DIM]> = generators(code).iter().map(|g| g.0).collect();
    let h = hermite_normal_form(&IntMatrix::from_rows(&gens));
    let mut rows = [[0i64; DIM]; DIM];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = h[(i, j)]
                .to_i64()
                .ok_or_else(|| Error::OutOfRange("basis entry exceeds i64".into()))?;
        }
    }
    let rank = (0..DIM).filter(|&i| rows[i][i] != 0).count();
    if rank != DIM {
        return Err(Error::RankDeficiency { expected: DIM, actual: rank });
    }
    let basis = LeechBasis { rows };
    let det = IntMatrix::from_rows(&basis.gram_rows()?).determinant();
    if det != 1.into() {
        return Err(Error::ConstructionFailure(format!("Gram determinant is {det}, expected 1")));
    }
    Ok(basis)
}

/// Counts per shape class of the minimal vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ShapeCounts {
    pub fours: usize,
    pub octads: usize,
    pub odd: usize,
}

impl ShapeCounts {
    pub fn total(&self) -> usize {
        self.fours + self.octads + self.odd
    }
}

#[derive(Clone, Debug)]
pub struct MinimalVectors {
    pub vectors: Vec<LeechVector>,
    pub shapes: ShapeCounts,
}

/// All vectors of norm −4, sorted lexicographically.
///
/// Candidates come from three shape families and each one is kept only if
/// the membership test accepts it:
/// `(±4²,0²²)` over every pair and sign, `(±2⁸,0¹⁶)` over every octad and
/// every sign pattern, and `(∓3,±1²³)` as `ν_Ω − 4ν_i` with the signs
/// flipped on a codeword.
pub fn minimal_vectors(basis: &LeechBasis, code: &GolayCode) -> MinimalVectors {
    let fours: Vec<LeechVector> = (0..DIM)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..DIM).flat_map(move |j| {
                [(4, 4), (4, -4), (-4, 4), (-4, -4)].into_iter().map(move |(a, b)| {
                    let mut c = [0; DIM];
                    c[i] = a;
                    c[j] = b;
                    LeechVector(c)
                })
            })
        })
        .filter(|v| basis.contains(v))
        .collect();

    let octads: Vec<LeechVector> = code
        .octads()
        .par_iter()
        .flat_map_iter(|&o| {
            let pos: Vec<usize> = o.positions().collect();
            (0u32..256).map(move |signs| {
                let mut c = [0; DIM];
                for (k, &p) in pos.iter().enumerate() {
                    c[p] = if signs >> k & 1 == 1 { -2 } else { 2 };
                }
                LeechVector(c)
            })
        })
        .filter(|v| basis.contains(v))
        .collect();

    let odd: Vec<LeechVector> = code
        .codewords()
        .par_iter()
        .flat_map_iter(|&w| {
            (0..DIM).map(move |i| {
                let mut c = [1; DIM];
                c[i] = -3;
                for p in w.positions() {
                    c[p] = -c[p];
                }
                LeechVector(c)
            })
        })
        .filter(|v| basis.contains(v))
        .collect();

    let shapes = ShapeCounts { fours: fours.len(), octads: octads.len(), odd: odd.len() };
    let mut vectors = fours;
    vectors.extend(octads);
    vectors.extend(odd);
    vectors.par_sort_unstable();
    vectors.dedup();
    MinimalVectors { vectors, shapes }
}

/// Every basis row has coordinates of a single parity. Since reduction mod 2
/// is additive, the same then holds for every lattice vector, so a vector
/// with an odd coordinate has raw norm at least 24.
pub fn has_uniform_parity(basis: &LeechBasis) -> bool {
    basis.rows.iter().all(|r| r.iter().all(|&c| (c - r[0]) % 2 == 0))
}

/// Exhaustive search for vectors of norm −2 (raw norm 16).
///
/// With uniform parity, such a vector has only even coordinates, so its
/// shape is `(±4,0²³)` or `(±2⁴,0²⁰)`; all of these are tested. Returns the
/// members found (expected empty) and the number of candidates examined, or
/// `None` if the parity argument does not apply.
pub fn norm_minus_two_vectors(basis: &LeechBasis) -> Option<(Vec<LeechVector>, usize)> {
    if !has_uniform_parity(basis) {
        return None;
    }
    let mut candidates = Vec::new();
    for i in 0..DIM {
        for s in [4, -4] {
            let mut c = [0; DIM];
            c[i] = s;
            candidates.push(LeechVector(c));
        }
    }
    for mask in 0u32..1 << DIM {
        if mask.count_ones() != 4 {
            continue;
        }
        let pos: Vec<usize> = (0..DIM).filter(|&p| mask >> p & 1 == 1).collect();
        for signs in 0..16u32 {
            let mut c = [0; DIM];
            for (k, &p) in pos.iter().enumerate() {
                c[p] = if signs >> k & 1 == 1 { -2 } else { 2 };
            }
            candidates.push(LeechVector(c));
        }
    }
    let found = candidates.par_iter().filter(|v| basis.contains(v)).copied().collect();
    Some((found, candidates.len()))
}

/// Serialize as a `u32` count followed by 24 little-endian `i16` per vector.
pub fn encode_cache(vectors: &[LeechVector]) -> Result<Vec<u8>> {
    let count = u32::try_from(vectors.len())
        .map_err(|_| Error::OutOfRange("too many vectors for the cache format".into()))?;
    let mut out = Vec::with_capacity(4 + vectors.len() * DIM * 2);
    out.extend_from_slice(&count.to_le_bytes());
    for v in vectors {
        for &c in &v.0 {
            let c = i16::try_from(c)
                .map_err(|_| Error::OutOfRange(format!("coordinate {c} exceeds i16")))?;
            out.extend_from_slice(&c.to_le_bytes());
        }
    }
    Ok(out)
}

pub fn decode_cache(bytes: &[u8]) -> Result<Vec<LeechVector>> {
    let bad = || Error::InvalidInput("malformed minimal-vector cache".into());
    let (head, body) = bytes.split_at_checked(4).ok_or_else(bad)?;
    let count = u32::from_le_bytes(head.try_into().expect("4 bytes")) as usize;
    if body.len() != count * DIM * 2 {
        return Err(bad());
    }
    Ok(body
        .chunks_exact(DIM * 2)
        .map(|chunk| {
            let mut c = [0i64; DIM];
            for (k, pair) in chunk.chunks_exact(2).enumerate() {
                c[k] = i16::from_le_bytes([pair[0], pair[1]]) as i64;
            }
            LeechVector(c)
        })
        .collect())
}

pub fn cache_path(dir: &Path, basis: &LeechBasis) -> PathBuf {
    dir.join(format!("leech-min-{}.bin", &basis.content_hash()[..16]))
}

/// Where the minimal vectors came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CacheOutcome {
    Computed,
    Loaded,
    /// A cache file existed but failed validation and was recomputed.
    Rejected,
}

/// Load the minimal vectors from `dir` if a valid cache exists, otherwise
/// compute and write one. A loaded file is fully revalidated: right count,
/// sorted, every vector of norm −4 and a lattice member.
pub fn minimal_vectors_cached(
    basis: &LeechBasis,
    code: &GolayCode,
    dir: &Path,
) -> Result<(Vec<LeechVector>, CacheOutcome)> {
    let path = cache_path(dir, basis);
    let mut outcome = CacheOutcome::Computed;
    if let Ok(bytes) = fs::read(&path) {
        match decode_cache(&bytes) {
            Ok(vs) if validate_minimal(basis, &vs) => return Ok((vs, CacheOutcome::Loaded)),
            _ => {
                log::warn!("discarding invalid cache {}", path.display());
                outcome = CacheOutcome::Rejected;
            }
        }
    }
    let vs = minimal_vectors(basis, code).vectors;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    fs::File::create(&tmp)?.write_all(&encode_cache(&vs)?)?;
    fs::rename(&tmp, &path)?;
    Ok((vs, outcome))
}

fn validate_minimal(basis: &LeechBasis, vs: &[LeechVector]) -> bool {
    vs.len() == MINIMAL_VECTOR_COUNT
        && vs.windows(2).all(|w| w[0] < w[1])
        && vs.par_iter().all(|v| v.raw_norm() == 32 && basis.contains(v))
}

pub fn vectors_json(vectors: &[LeechVector]) -> Result<String> {
    Ok(serde_json::to_string(vectors)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golay::build_code;

    #[test]
    fn arithmetic() {
        let x = 4 * LeechVector::unit(0) + LeechVector::omega();
        let y = 4 * LeechVector::unit(1) + LeechVector::omega();
        assert_eq!(inner(&x, &x).unwrap(), -6);
        assert_eq!(inner(&x, &y).unwrap(), -4);
        assert_eq!(inner(&LeechVector::ZERO, &x).unwrap(), 0);
        assert!(inner(&LeechVector::unit(0), &LeechVector::unit(0)).is_err());
        assert_eq!(-(-x), x);
        assert_eq!(x - x, LeechVector::ZERO);
    }

    #[test]
    fn cache_round_trip() {
        let vs = vec![LeechVector::omega(), -3 * LeechVector::unit(5)];
        let bytes = encode_cache(&vs).unwrap();
        assert_eq!(bytes.len(), 4 + 2 * 48);
        assert_eq!(&bytes[..4], &[2, 0, 0, 0]);
        assert_eq!(decode_cache(&bytes).unwrap(), vs);
        assert!(decode_cache(&bytes[..10]).is_err());
        assert!(encode_cache(&[40_000 * LeechVector::unit(0)]).is_err());
    }

    #[test]
    fn basis_is_triangular() {
        let code = build_code().unwrap();
        let b = build_basis(&code).unwrap();
        for i in 0..DIM {
            assert!(b.rows()[i][i] > 0);
            assert!((0..i).all(|j| b.rows()[i][j] == 0));
        }
        let det: i64 = (0..DIM).map(|i| b.rows()[i][i]).product();
        assert_eq!(det, 8i64.pow(12));
    }
}

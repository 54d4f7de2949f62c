//! Exact integer-lattice algebra: Gram matrices, normal forms, orthogonal
//! complements, discriminant groups, signatures and root systems.
//!
//! Lattices are described in coordinates with respect to a fixed ambient
//! basis: a sublattice is a matrix whose rows are coordinate vectors, and the
//! ambient form is its Gram matrix in that basis.

mod ade;
mod matrix;
mod normal_form;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use ade::{root_system_type, RootType};
pub use matrix::{solve_rational, IntMatrix};
pub use normal_form::{
    hermite_normal_form, hermite_with_transform, left_kernel, row_lattice_basis,
    smith_normal_form, Hermite, Smith,
};

/// Symmetric integer matrix of a bilinear form.
#[derive(Clone, PartialEq, Eq)]
pub struct GramMatrix(IntMatrix);

impl GramMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::InvalidInput("Gram matrix must be square and symmetric".into()));
        }
        Ok(GramMatrix(m))
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    /// The hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> Self {
        GramMatrix(IntMatrix::from_rows(&[[0i64, 1], [1, 0]]))
    }

    /// Negative definite root lattice `D_n` (negated Cartan matrix).
    pub fn d_n(n: usize) -> Self {
        assert!(n >= 4);
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(-2);
        }
        // chain 0-1-…-(n-2), node n-1 attached to n-3
        for i in 0..n - 2 {
            m[(i, i + 1)] = BigInt::one();
            m[(i + 1, i)] = BigInt::one();
        }
        m[(n - 1, n - 3)] = BigInt::one();
        m[(n - 3, n - 1)] = BigInt::one();
        GramMatrix(m)
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &GramMatrix) -> GramMatrix {
        let (a, b) = (self.dim(), other.dim());
        let mut m = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                m[(i, j)] = self.0[(i, j)].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[(a + i, a + j)] = other.0[(i, j)].clone();
            }
        }
        GramMatrix(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn is_even(&self) -> bool {
        (0..self.dim()).all(|i| (&self.0[(i, i)] % 2i32).is_zero())
    }

    /// Pairing of two coordinate vectors.
    pub fn pair(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for i in 0..self.dim() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                s += &a[i] * &self.0[(i, j)] * &b[j];
            }
        }
        s
    }

    /// Gram matrix of the sublattice spanned by the rows of `basis`.
    pub fn restrict(&self, basis: &IntMatrix) -> GramMatrix {
        GramMatrix(&(basis * &self.0) * &basis.transpose())
    }

    /// Counts of positive and negative squares, by exact rational
    /// congruence diagonalization.
    pub fn signature(&self) -> Result<(usize, usize)> {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> = self.0.to_rational();
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(p) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                    sym_swap(&mut a, k, p);
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // e_k += e_j gives diagonal 2·a[k][j] ≠ 0
                    sym_add(&mut a, k, j);
                } else {
                    // row k vanishes: e_k lies in the radical
                    return Err(Error::DegenerateForm);
                }
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
                for j in k..n {
                    let v = &f * &a[j][k];
                    a[j][i] -= v;
                }
            }
        }
        Ok((pos, neg))
    }

    pub fn discriminant_group(&self) -> DiscriminantGroup {
        let smith = smith_normal_form(&self.0);
        let divisors = smith
            .invariant_factors()
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .collect();
        DiscriminantGroup { divisors }
    }

    pub fn to_json(&self) -> Result<String> {
        let rows = self.0.to_i64_rows()?;
        Ok(serde_json::to_string(&rows)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(s)?;
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::InvalidInput("Gram matrix must be square".into()));
        }
        Self::from_rows(&rows)
    }
}

fn sym_swap(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Congruence `e_i ← e_i + e_j`.
fn sym_add(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    let n = a.len();
    for c in 0..n {
        let v = a[j][c].clone();
        a[i][c] += v;
    }
    for r in 0..n {
        let v = a[r][j].clone();
        a[r][i] += v;
    }
}

impl fmt::Debug for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gram{:?}", self.0)
    }
}

/// Elementary divisors (> 1) of a Gram matrix, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantGroup {
    pub divisors: Vec<BigInt>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    pub fn divisors_i64(&self) -> Vec<i64> {
        self.divisors.iter().map(|d| d.try_into().expect("small divisor")).collect()
    }
}

impl fmt::Display for DiscriminantGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.divisors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Basis (in ambient coordinates) of `{v : ⟨v,s⟩ = 0 for all rows s of sub}`.
pub fn orthogonal_complement(gram: &GramMatrix, sub: &IntMatrix) -> IntMatrix {
    // v·G·Sᵀ = 0
    let pairing = gram.matrix() * &sub.transpose();
    left_kernel(&pairing)
}

/// Whether the rows of `sub` span a primitive sublattice of the ambient
/// coordinate lattice: independent rows and all invariant factors 1.
pub fn is_primitive(sub: &IntMatrix) -> bool {
    let factors = smith_normal_form(sub).invariant_factors();
    factors.len() == sub.rows() && factors.iter().all(|f| f.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(GramMatrix::hyperbolic_plane().signature().unwrap(), (1, 1));
        assert_eq!(GramMatrix::d_n(4).signature().unwrap(), (0, 4));
        let degenerate = GramMatrix::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert!(matches!(degenerate.signature(), Err(Error::DegenerateForm)));
        let u3 = GramMatrix::hyperbolic_plane()
            .direct_sum(&GramMatrix::hyperbolic_plane())
            .direct_sum(&GramMatrix::d_n(20));
        assert_eq!(u3.signature().unwrap(), (2, 22));
    }

    #[test]
    fn d4_discriminant() {
        let g = GramMatrix::d_n(4);
        assert_eq!(g.determinant(), BigInt::from(4));
        assert_eq!(g.discriminant_group().divisors_i64(), vec![2, 2]);
        assert_eq!(GramMatrix::d_n(5).discriminant_group().divisors_i64(), vec![4]);
    }

    #[test]
    fn complement_of_hyperbolic_plane() {
        let uu = GramMatrix::hyperbolic_plane().direct_sum(&GramMatrix::hyperbolic_plane());
        let sub = IntMatrix::from_rows(&[[1i64, 0, 0, 0], [0, 1, 0, 0]]);
        let c = orthogonal_complement(&uu, &sub);
        assert_eq!(c.rows(), 2);
        let g = uu.restrict(&c);
        assert_eq!(g, GramMatrix::hyperbolic_plane());
        assert!(is_primitive(&c));
    }

    #[test]
    fn primitivity() {
        let sub = IntMatrix::from_rows(&[[2i64, 0]]);
        assert!(!is_primitive(&sub));
        assert!(is_primitive(&IntMatrix::from_rows(&[[1i64, 0]])));
        assert!(is_primitive(&IntMatrix::from_rows(&[[2i64, 3]])));
    }

    #[test]
    fn gram_json_round_trip() {
        let g = GramMatrix::d_n(4);
        let s = g.to_json().unwrap();
        assert_eq!(s, "[[-2,1,0,0],[1,-2,1,1],[0,1,-2,0],[0,1,0,-2]]");
        assert_eq!(GramMatrix::from_json(&s).unwrap(), g);
        assert!(GramMatrix::from_json("[[1,2],[3,4]]").is_err());
    }
}

//! Hermite and Smith normal forms over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Row-style Hermite normal form `H = U·A`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Number of nonzero rows of `h`.
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
}

/// Smith normal form `U·M·V = D`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Nonzero diagonal entries in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Row echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`. Row operations are mirrored into `u` when
/// present.
fn echelonize(a: &mut IntMatrix, mut u: Option<&mut IntMatrix>) -> (usize, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&i, &j| a[(i, c)].abs().cmp(&a[(j, c)].abs()));
            let Some(p) = best else { break };
            a.swap_rows(p, r);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(p, r);
            }
            let mut done = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -a[(i, c)].div_floor(&a[(r, c)]);
                a.add_row_multiple(i, r, &q);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, r, &q);
                }
                if !a[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r);
            }
        }
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&a[(r, c)]);
            a.add_row_multiple(i, r, &q);
            if let Some(u) = u.as_deref_mut() {
                u.add_row_multiple(i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

/// Hermite normal form of the row lattice of `a` (zero rows kept at the end).
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    echelonize(&mut h, None);
    h
}

pub fn hermite_with_transform(a: &IntMatrix) -> Hermite {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let (rank, pivots) = echelonize(&mut h, Some(&mut u));
    Hermite { h, u, rank, pivots }
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row
/// lattice.
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let (rank, _) = echelonize(&mut h, None);
    h.select_rows(&(0..rank).collect::<Vec<_>>())
}

/// Basis of the left kernel `{v ∈ Zⁿ : v·A = 0}`, in Hermite normal form.
/// The result spans a saturated sublattice.
pub fn left_kernel(a: &IntMatrix) -> IntMatrix {
    let herm = hermite_with_transform(a);
    let kernel_rows: Vec<usize> = (herm.rank..a.rows()).collect();
    if kernel_rows.is_empty() {
        return IntMatrix::zeros(0, a.rows());
    }
    row_lattice_basis(&herm.u.select_rows(&kernel_rows))
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v);
            };
            d.swap_rows(pi, t);
            u.swap_rows(pi, t);
            d.swap_cols(pj, t);
            v.swap_cols(pj, t);

            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(mut d: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> Smith {
    for t in 0..d.rows().min(d.cols()) {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn is_diagonal_chain(d: &IntMatrix) -> bool {
        let n = d.rows().min(d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j && !d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        (1..n).all(|i| {
            let (a, b) = (&d[(i - 1, i - 1)], &d[(i, i)]);
            if a.is_zero() {
                b.is_zero()
            } else {
                b.is_multiple_of(a)
            }
        })
    }

    #[test]
    fn smith_examples() {
        let s = smith_normal_form(&mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(1)]);
        let s = smith_normal_form(&mat(&[&[-2]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
        let s = smith_normal_form(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        let f: Vec<i64> = s.invariant_factors().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(f, vec![2, 6, 12]);
    }

    #[test]
    fn hermite_and_kernel() {
        let a = mat(&[&[2, 4], &[1, 2], &[3, 7]]);
        let h = hermite_with_transform(&a);
        assert_eq!(&h.u * &a, h.h);
        assert_eq!(h.rank, 2);
        assert_eq!(h.u.determinant().abs(), BigInt::from(1));
        let k = left_kernel(&a);
        assert_eq!(k.rows(), 1);
        assert!((&k * &a).is_zero());
        assert_eq!(k.row_vec(0), vec![BigInt::from(1), BigInt::from(-2), BigInt::from(0)]);
    }

    #[test]
    fn determinant_bareiss() {
        assert_eq!(mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).determinant(), BigInt::from(4));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn smith_round_trip(entries in proptest::collection::vec(-20i64..20, 12), rows in 1usize..5) {
            let cols = 12 / rows.max(1);
            let rows_v: Vec<Vec<i64>> = (0..rows).map(|i| entries[i*cols..(i+1)*cols].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows_v);
            let s = smith_normal_form(&m);
            prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
            prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
            prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
            prop_assert!(is_diagonal_chain(&s.d));
        }

        #[test]
        fn hermite_round_trip(entries in proptest::collection::vec(-30i64..30, 15)) {
            let rows_v: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let m = IntMatrix::from_rows(&rows_v);
            let h = hermite_with_transform(&m);
            prop_assert_eq!(&h.u * &m, h.h.clone());
            prop_assert_eq!(h.u.determinant().abs(), BigInt::from(1));
            let k = left_kernel(&m);
            prop_assert_eq!(k.rows() + h.rank, m.rows());
            prop_assert!((&k * &m).is_zero());
        }
    }
}

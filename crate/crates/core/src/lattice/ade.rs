//! Recognition of ADE root systems from the Dynkin graph of a root basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::GramMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootType {
    A(usize),
    D(usize),
    E(usize),
}

impl RootType {
    pub fn rank(self) -> usize {
        match self {
            RootType::A(n) | RootType::D(n) | RootType::E(n) => n,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::A(n) => write!(f, "A{n}"),
            RootType::D(n) => write!(f, "D{n}"),
            RootType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Classify the root lattice spanned by a set of `(-2)`-vectors whose
/// pairwise products lie in `{0, 1}`, given their Gram matrix.
///
/// Each connected component of the Dynkin graph is matched by shape: a path
/// is `A_n`; a tree with one branch vertex and arms `(1,1,k)` is `D_{k+3}`;
/// arms `(1,2,2)`, `(1,2,3)`, `(1,2,4)` are `E6`, `E7`, `E8`. The result is
/// sorted.
pub fn root_system_type(gram: &GramMatrix) -> Result<Vec<RootType>> {
    let n = gram.dim();
    let minus_two = BigInt::from(-2);
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        if *gram.entry(i, i) != minus_two {
            return Err(Error::NotRootBasis(format!("vector {i} has norm {}", gram.entry(i, i))));
        }
        for j in i + 1..n {
            let e = gram.entry(i, j);
            if e.is_one() {
                adj[i].push(j);
                adj[j].push(i);
            } else if !e.is_zero() {
                return Err(Error::NotRootBasis(format!("product ({i},{j}) = {e}")));
            }
        }
    }

    let mut seen = vec![false; n];
    let mut types = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < component.len() {
            for &w in &adj[component[k]] {
                if !seen[w] {
                    seen[w] = true;
                    component.push(w);
                }
            }
            k += 1;
        }
        types.push(classify_component(&component, &adj)?);
    }
    types.sort();
    Ok(types)
}

fn classify_component(component: &[usize], adj: &[Vec<usize>]) -> Result<RootType> {
    let size = component.len();
    let edges: usize = component.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges != size - 1 {
        return Err(Error::NotRootBasis("Dynkin graph contains a cycle".into()));
    }
    let branch: Vec<usize> = component.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Ok(RootType::A(size)),
        [center] if adj[*center].len() == 3 => {
            let mut arms: Vec<usize> =
                adj[*center].iter().map(|&s| arm_length(*center, s, adj)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Ok(RootType::D(k + 3)),
                [1, 2, 2] => Ok(RootType::E(6)),
                [1, 2, 3] => Ok(RootType::E(7)),
                [1, 2, 4] => Ok(RootType::E(8)),
                _ => Err(Error::NotRootBasis(format!("arms {arms:?} are not of ADE type"))),
            }
        }
        _ => Err(Error::NotRootBasis("more than one branch vertex or degree > 3".into())),
    }
}

/// Number of vertices on the arm leaving `center` through `first`.
fn arm_length(center: usize, first: usize, adj: &[Vec<usize>]) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return len,
            [w] => {
                prev = cur;
                cur = *w;
                len += 1;
            }
            _ => unreachable!("single branch vertex"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(n: usize, edges: &[(usize, usize)]) -> GramMatrix {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = -2;
        }
        for &(a, b) in edges {
            rows[a][b] = 1;
            rows[b][a] = 1;
        }
        GramMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(root_system_type(&gram(1, &[])).unwrap(), vec![RootType::A(1)]);
        assert_eq!(root_system_type(&gram(3, &[(0, 1), (1, 2)])).unwrap(), vec![RootType::A(3)]);
        let d4 = gram(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(root_system_type(&d4).unwrap(), vec![RootType::D(4)]);
        let d5 = gram(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        assert_eq!(root_system_type(&d5).unwrap(), vec![RootType::D(5)]);
        let e6 = gram(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]);
        assert_eq!(root_system_type(&e6).unwrap(), vec![RootType::E(6)]);
        let e7 = gram(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        assert_eq!(root_system_type(&e7).unwrap(), vec![RootType::E(7)]);
        let e8 = gram(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]);
        assert_eq!(root_system_type(&e8).unwrap(), vec![RootType::E(8)]);
        let d4a1 = gram(5, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(root_system_type(&d4a1).unwrap(), vec![RootType::A(1), RootType::D(4)]);
    }

    #[test]
    fn rejects_non_ade() {
        // affine D4
        let d4_affine = gram(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(root_system_type(&d4_affine).is_err());
        // triangle
        assert!(root_system_type(&gram(3, &[(0, 1), (1, 2), (0, 2)])).is_err());
        // wrong norm
        let bad = GramMatrix::from_rows(&[vec![-4]]).unwrap();
        assert!(root_system_type(&bad).is_err());
        let neg = GramMatrix::from_rows(&[vec![-2, -1], vec![-1, -2]]).unwrap();
        assert!(root_system_type(&neg).is_err());
        // E9 arms (1,2,5)
        let e9 = gram(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)]);
        assert!(root_system_type(&e9).is_err());
    }

    #[test]
    fn permutation_invariant() {
        let a = gram(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        let b = gram(5, &[(4, 3), (4, 2), (4, 1), (1, 0)]);
        assert_eq!(root_system_type(&a).unwrap(), root_system_type(&b).unwrap());
    }
}

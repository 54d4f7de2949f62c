//! The even unimodular Lorentzian lattice `L = Λ ⊥ U` and its Leech roots.
//!
//! A vector `λ + m·f + n·g` is stored as `(λ, m, n)` with `f² = g² = 0` and
//! `⟨f,g⟩ = 1`. Exported coordinates are the 24 Leech coordinates followed
//! by `m` and `n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::golay::{label_position, todd_name, IndexSet24, LABELS, TODD_K};
use crate::graph::IncidenceGraph;
use crate::lattice::{
    is_primitive, orthogonal_complement, root_system_type, solve_rational, GramMatrix, IntMatrix,
    RootType,
};
use crate::leech::{inner, LeechBasis, LeechVector, DIM};

pub const L_DIM: usize = DIM + 2;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LorentzVector {
    pub lambda: LeechVector,
    pub m: i64,
    pub n: i64,
}

impl LorentzVector {
    pub const ZERO: LorentzVector = LorentzVector { lambda: LeechVector::ZERO, m: 0, n: 0 };

    pub fn new(lambda: LeechVector, m: i64, n: i64) -> Self {
        LorentzVector { lambda, m, n }
    }

    pub fn pair(&self, other: &LorentzVector) -> Result<i64> {
        Ok(inner(&self.lambda, &other.lambda)? + self.m * other.n + self.n * other.m)
    }

    pub fn norm(&self) -> Result<i64> {
        self.pair(self)
    }

    pub fn coords(&self) -> [i64; L_DIM] {
        let mut c = [0; L_DIM];
        c[..DIM].copy_from_slice(&self.lambda.0);
        c[DIM] = self.m;
        c[DIM + 1] = self.n;
        c
    }

    pub fn from_coords(c: &[i64; L_DIM]) -> Self {
        let mut lambda = [0; DIM];
        lambda.copy_from_slice(&c[..DIM]);
        LorentzVector { lambda: LeechVector(lambda), m: c[DIM], n: c[DIM + 1] }
    }
}

impl fmt::Debug for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {}, {})", self.lambda, self.m, self.n)
    }
}

impl Add for LorentzVector {
    type Output = LorentzVector;
    fn add(self, rhs: LorentzVector) -> LorentzVector {
        LorentzVector::new(self.lambda + rhs.lambda, self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for LorentzVector {
    type Output = LorentzVector;
    fn sub(self, rhs: LorentzVector) -> LorentzVector {
        self + -rhs
    }
}

impl Neg for LorentzVector {
    type Output = LorentzVector;
    fn neg(self) -> LorentzVector {
        LorentzVector::new(-self.lambda, -self.m, -self.n)
    }
}

impl Mul<LorentzVector> for i64 {
    type Output = LorentzVector;
    fn mul(self, v: LorentzVector) -> LorentzVector {
        LorentzVector::new(self * v.lambda, self * v.m, self * v.n)
    }
}

pub fn sum(vs: impl IntoIterator<Item = LorentzVector>) -> LorentzVector {
    vs.into_iter().fold(LorentzVector::ZERO, |a, b| a + b)
}

/// Pairing on raw coordinates; the Leech part carries the factor `−1/8`.
fn pair_raw(a: &[i64; L_DIM], b: &[i64; L_DIM]) -> Rational64 {
    let dot: i64 = a[..DIM].iter().zip(&b[..DIM]).map(|(x, y)| x * y).sum();
    Rational64::new(-dot, 8) + Rational64::from_integer(a[DIM] * b[DIM + 1] + a[DIM + 1] * b[DIM])
}

/// `(λ, 1, −1 − ⟨λ,λ⟩/2)`, a vector of norm −2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeechRoot(LorentzVector);

impl LeechRoot {
    pub fn vector(&self) -> LorentzVector {
        self.0
    }

    pub fn lambda(&self) -> &LeechVector {
        &self.0.lambda
    }

    pub fn pair(&self, other: &LeechRoot) -> i64 {
        self.0.pair(&other.0).expect("roots lie in L")
    }

    pub fn pair_vector(&self, v: &LorentzVector) -> Result<i64> {
        self.0.pair(v)
    }
}

impl fmt::Debug for LeechRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn make_root(basis: &LeechBasis, lambda: LeechVector) -> Result<LeechRoot> {
    if !basis.contains(&lambda) {
        return Err(Error::NotMember(format!("{lambda:?} is not in the Leech lattice")));
    }
    let n = -1 - inner(&lambda, &lambda)? / 2;
    Ok(LeechRoot(LorentzVector::new(lambda, 1, n)))
}

/// `w = (0,0,1)`, pairing to 1 with every Leech root.
pub fn weyl_vector() -> LorentzVector {
    LorentzVector::new(LeechVector::ZERO, 0, 1)
}

/// The vector `T`: 3 on `{∞,0,1}`, −1 on the rest of `K`, 1 elsewhere.
pub fn t_vector() -> LeechVector {
    let mut c = [1; DIM];
    for (k, label) in TODD_K.iter().enumerate() {
        c[label_position(label).expect("label")] = if k < 3 { 3 } else { -1 };
    }
    LeechVector(c)
}

/// The roots `x, y, z, t` spanning a `D₄` with center `z`.
#[derive(Clone, Debug)]
pub struct D4Embedding {
    pub x: LeechRoot,
    pub y: LeechRoot,
    pub z: LeechRoot,
    pub t: LeechRoot,
}

impl D4Embedding {
    pub fn new(basis: &LeechBasis) -> Result<Self> {
        let omega = LeechVector::omega();
        let emb = D4Embedding {
            x: make_root(basis, 4 * LeechVector::unit(0) + omega)?,
            y: make_root(basis, 4 * LeechVector::unit(1) + omega)?,
            z: make_root(basis, LeechVector::ZERO)?,
            t: make_root(basis, t_vector())?,
        };
        let types = root_system_type(&emb.gram())?;
        if types != [RootType::D(4)] {
            return Err(Error::StructureViolation(format!("x,y,z,t span {types:?}, not D4")));
        }
        Ok(emb)
    }

    pub fn roots(&self) -> [LeechRoot; 4] {
        [self.x, self.y, self.z, self.t]
    }

    pub fn gram(&self) -> GramMatrix {
        gram_of(&self.roots().map(|r| r.vector()))
    }

    /// Orthogonal projection of `v` onto `R^⊥ ⊗ Q`, solving against the Gram
    /// matrix of `R`.
    pub fn project_orthogonal(&self, v: &LorentzVector) -> Result<RationalVector> {
        let roots = self.roots();
        let g = self.gram().matrix().to_rational();
        let rhs: Vec<BigRational> = roots
            .iter()
            .map(|r| Ok(BigRational::from_integer(r.pair_vector(v)?.into())))
            .collect::<Result<_>>()?;
        let c = solve_rational(&g, &rhs)?;
        let den = c.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        let den_i = den.to_i64().ok_or_else(|| Error::OutOfRange("denominator".into()))?;
        let mut num = v.coords().map(|x| x * den_i);
        for (ci, r) in c.iter().zip(roots) {
            let k = (ci * BigRational::from_integer(den.clone())).to_integer();
            let k = k.to_i64().ok_or_else(|| Error::OutOfRange("coefficient".into()))?;
            for (a, b) in num.iter_mut().zip(r.vector().coords()) {
                *a -= k * b;
            }
        }
        Ok(RationalVector::new(num, den_i))
    }
}

pub fn gram_of(vs: &[LorentzVector]) -> GramMatrix {
    let rows: Vec<Vec<i64>> = vs
        .iter()
        .map(|a| vs.iter().map(|b| a.pair(b).expect("lattice vectors")).collect())
        .collect();
    GramMatrix::from_rows(&rows).expect("symmetric")
}

/// Vector of `L ⊗ Q` with an explicit positive denominator, kept reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RationalVector {
    pub numerators: [i64; L_DIM],
    pub denominator: i64,
}

impl RationalVector {
    pub fn new(mut numerators: [i64; L_DIM], mut denominator: i64) -> Self {
        assert!(denominator != 0);
        if denominator < 0 {
            denominator = -denominator;
            numerators.iter_mut().for_each(|x| *x = -*x);
        }
        let g = numerators.iter().fold(denominator, |g, &x| g.gcd(&x));
        RationalVector { numerators: numerators.map(|x| x / g), denominator: denominator / g }
    }

    pub fn from_lattice(v: &LorentzVector) -> Self {
        RationalVector { numerators: v.coords(), denominator: 1 }
    }

    pub fn pair(&self, other: &RationalVector) -> Rational64 {
        pair_raw(&self.numerators, &other.numerators)
            / Rational64::from_integer(self.denominator * other.denominator)
    }

    pub fn pair_lattice(&self, v: &LorentzVector) -> Rational64 {
        self.pair(&RationalVector::from_lattice(v))
    }

    pub fn norm(&self) -> Rational64 {
        self.pair(self)
    }

    pub fn scale(&self, q: Rational64) -> RationalVector {
        RationalVector::new(self.numerators.map(|x| x * q.numer()), self.denominator * q.denom())
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        let den = self.denominator.lcm(&other.denominator);
        let (a, b) = (den / self.denominator, den / other.denominator);
        let mut num = [0; L_DIM];
        for i in 0..L_DIM {
            num[i] = a * self.numerators[i] + b * other.numerators[i];
        }
        RationalVector::new(num, den)
    }

    /// Smallest `d > 0` with `d·v ∈ L`. This can exceed the coordinate
    /// denominator, since integral coordinates need not give a member of `Λ`.
    pub fn lattice_denominator(&self, basis: &LeechBasis) -> Option<i64> {
        (1..=64).map(|k| k * self.denominator).find(|&d| {
            let v = self.scale(Rational64::from_integer(d));
            v.denominator == 1 && basis.contains(&LorentzVector::from_coords(&v.numerators).lambda)
        })
    }

    /// The lattice vector, if the denominator is 1 and the Leech part lies
    /// in `Λ`.
    pub fn to_lattice(&self, basis: &LeechBasis) -> Result<LorentzVector> {
        if self.denominator != 1 {
            return Err(Error::NonIntegral(format!("denominator {}", self.denominator)));
        }
        let v = LorentzVector::from_coords(&self.numerators);
        if !basis.contains(&v.lambda) {
            return Err(Error::NonIntegral("Leech part is not in the lattice".into()));
        }
        Ok(v)
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.numerators, self.denominator)
    }
}

/// Roots `(λ,1,n)` over all minimal vectors `λ` that pair to zero with every
/// root in `targets`, sorted.
///
/// For a Leech root `r = (λ,1,n)` we have `⟨r,z⟩ = n − 1`, so `⟨r,z⟩ = 0`
/// exactly when `⟨λ,λ⟩ = −4`. Any set of targets containing `z` therefore
/// draws its roots from the minimal vectors; this is asserted on every
/// candidate.
fn roots_with_products(
    basis: &LeechBasis,
    minvecs: &[LeechVector],
    targets: &[(LeechRoot, i64)],
) -> Vec<LeechRoot> {
    let mut out: Vec<LeechRoot> = minvecs
        .par_iter()
        .map(|&l| make_root(basis, l).expect("minimal vectors are members"))
        .filter(|r| targets.iter().all(|(t, p)| r.pair(t) == *p))
        .collect();
    out.sort();
    out
}

fn assert_z_lemma(emb: &D4Embedding, roots: &[LeechRoot]) {
    for r in roots {
        assert_eq!(r.vector().n, 1);
        assert_eq!(r.pair(&emb.z), 0);
    }
}

/// The 42 Leech roots orthogonal to `R = ⟨x,y,z,t⟩`.
pub fn roots_orthogonal_to_r(
    emb: &D4Embedding,
    basis: &LeechBasis,
    minvecs: &[LeechVector],
) -> Vec<LeechRoot> {
    let targets: Vec<_> = emb.roots().into_iter().map(|r| (r, 0)).collect();
    let out = roots_with_products(basis, minvecs, &targets);
    assert_z_lemma(emb, &out);
    out
}

/// Leech roots orthogonal to `x`, `y` and `z`.
pub fn roots_orthogonal_to_xyz(
    emb: &D4Embedding,
    basis: &LeechBasis,
    minvecs: &[LeechVector],
) -> Vec<LeechRoot> {
    let out = roots_with_products(basis, minvecs, &[(emb.x, 0), (emb.y, 0), (emb.z, 0)]);
    assert_z_lemma(emb, &out);
    out
}

/// Leech roots orthogonal to `z` and to two of `x, y, t`, pairing to 1 with
/// the third; together with `R` each spans a `D₅`.
pub fn roots_attaching_d5(
    emb: &D4Embedding,
    basis: &LeechBasis,
    minvecs: &[LeechVector],
) -> Vec<LeechRoot> {
    let legs = [emb.x, emb.y, emb.t];
    let mut out = Vec::new();
    for (k, _) in legs.iter().enumerate() {
        let mut targets = vec![(emb.z, 0)];
        targets.extend(legs.iter().enumerate().map(|(j, &r)| (r, (j == k) as i64)));
        out.extend(roots_with_products(basis, minvecs, &targets));
    }
    out.sort();
    assert_z_lemma(emb, &out);
    out
}

/// Which of `x, y, t` a `D₅`-attaching root meets.
pub fn attached_leg(emb: &D4Embedding, r: &LeechRoot) -> Option<char> {
    [('x', emb.x), ('y', emb.y), ('t', emb.t)]
        .into_iter()
        .find(|(_, l)| r.pair(l) == 1)
        .map(|(c, _)| c)
}

/// Shape class of the Leech part of a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Zero,
    /// `(±4², 0²²)`
    Fours,
    /// `(±2⁸, 0¹⁶)`
    Octad,
    /// `(∓3, ±1²³)`
    Odd,
    Other,
}

pub fn shape(l: &LeechVector) -> Shape {
    let mut abs: Vec<i64> = l.0.iter().map(|c| c.abs()).collect();
    abs.sort_unstable();
    let count = |v: i64| abs.iter().filter(|&&c| c == v).count();
    if count(0) == DIM {
        Shape::Zero
    } else if count(4) == 2 && count(0) == 22 {
        Shape::Fours
    } else if count(2) == 8 && count(0) == 16 {
        Shape::Octad
    } else if count(3) == 1 && count(1) == 23 {
        Shape::Odd
    } else {
        Shape::Other
    }
}

/// Human-readable name of a root: the Todd name for `2ν_O`, otherwise a
/// description of the Leech part.
pub fn root_name(r: &LeechRoot) -> String {
    let l = r.lambda();
    let support = IndexSet24::from_positions((0..DIM).filter(|&i| l.0[i] != 0)).expect("24");
    match shape(l) {
        Shape::Zero => "0".into(),
        Shape::Octad if l.0.iter().all(|&c| c >= 0) => todd_name(support)
            .unwrap_or_else(|| format!("2v{{{}}}", support.labels().join(","))),
        Shape::Fours if l.0.iter().all(|&c| c >= 0) => {
            let p: Vec<&str> = support.labels();
            format!("4v{}+4v{}", p[0], p[1])
        }
        Shape::Odd if l.0.iter().filter(|&&c| c == -3).count() == 1 && l.0.iter().all(|&c| c != -1) => {
            let k = l.0.iter().position(|&c| c == -3).expect("one -3");
            format!("vO-4v{}", LABELS[k])
        }
        _ => format!("{l:?}"),
    }
}

/// The cusp-side root `4ν_∞ + 4ν₀`.
pub fn cusp_lambda() -> LeechVector {
    4 * LeechVector::unit(0) + 4 * LeechVector::unit(1)
}

/// The 42 roots with their intersection graph. Part 0 ("A") is the family
/// containing the root of `4ν_∞ + 4ν₀`.
#[derive(Clone, Debug)]
pub struct CurveGraph {
    pub roots: Vec<LeechRoot>,
    pub graph: IncidenceGraph,
}

impl CurveGraph {
    pub fn family(&self, part: u8) -> Vec<LeechRoot> {
        (0..self.roots.len())
            .filter(|&i| self.graph.part(i) == part)
            .map(|i| self.roots[i])
            .collect()
    }
}

/// Intersection graph of the 42 roots: an edge when the product is 1.
/// Fails unless every product is 0 or 1, the graph is bipartite with parts
/// of 21, and each vertex meets exactly 5 others.
pub fn incidence_graph(roots: &[LeechRoot]) -> Result<CurveGraph> {
    let n = roots.len();
    for i in 0..n {
        for j in i + 1..n {
            let p = roots[i].pair(&roots[j]);
            if p != 0 && p != 1 {
                return Err(Error::StructureViolation(format!(
                    "product {p} between {} and {}",
                    root_name(&roots[i]),
                    root_name(&roots[j])
                )));
            }
        }
    }
    let cusp = roots
        .iter()
        .position(|r| *r.lambda() == cusp_lambda())
        .ok_or_else(|| Error::StructureViolation("cusp root 4v_inf+4v_0 missing".into()))?;
    // 2-colour from the cusp root
    let mut part: Vec<Option<u8>> = vec![None; n];
    part[cusp] = Some(0);
    let mut stack = vec![cusp];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if roots[u].pair(&roots[v]) != 1 {
                continue;
            }
            let want = 1 - part[u].expect("coloured");
            match part[v] {
                None => {
                    part[v] = Some(want);
                    stack.push(v);
                }
                Some(p) if p != want => {
                    return Err(Error::StructureViolation("graph is not bipartite".into()))
                }
                _ => {}
            }
        }
    }
    let parts: Vec<u8> = part
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::StructureViolation("graph is disconnected".into())))
        .collect::<Result<_>>()?;
    let labels = roots.iter().map(root_name).collect();
    let mut graph = IncidenceGraph::new(labels, parts)?;
    for i in 0..n {
        for j in i + 1..n {
            if roots[i].pair(&roots[j]) == 1 {
                graph.add_edge(i, j);
            }
        }
    }
    let sizes = graph.summary().part_sizes;
    if sizes != [21, 21] || !graph.is_regular(5) {
        return Err(Error::StructureViolation(format!(
            "parts {sizes:?}, degrees {:?}",
            graph.summary().degrees
        )));
    }
    Ok(CurveGraph { roots: roots.to_vec(), graph })
}

/// `w′ = w + 5z + 3x + 3y + 3t`.
pub fn weyl_projection_closed_form(emb: &D4Embedding) -> LorentzVector {
    weyl_vector()
        + 5 * emb.z.vector()
        + 3 * emb.x.vector()
        + 3 * emb.y.vector()
        + 3 * emb.t.vector()
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylProjection {
    pub closed_form: [i64; L_DIM],
    pub solved: RationalVector,
    pub agree: bool,
    pub norm: i64,
}

/// Projection of `w` onto `R^⊥ ⊗ Q`, by solving and by the closed form.
pub fn weyl_projection(emb: &D4Embedding) -> Result<WeylProjection> {
    let closed = weyl_projection_closed_form(emb);
    let solved = emb.project_orthogonal(&weyl_vector())?;
    Ok(WeylProjection {
        closed_form: closed.coords(),
        solved,
        agree: solved == RationalVector::from_lattice(&closed),
        norm: closed.norm()?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HSumReport {
    pub sum_matches: bool,
    pub all_pairings_one: bool,
}

impl HSumReport {
    pub fn passed(&self) -> bool {
        self.sum_matches && self.all_pairings_one
    }
}

/// `3w′ = Σ roots` and `⟨w′, r⟩ = 1` for each root.
pub fn verify_h_sum(roots: &[LorentzVector], w_prime: &LorentzVector) -> Result<HSumReport> {
    let all_pairings_one = roots
        .iter()
        .map(|r| r.pair(w_prime))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|&p| p == 1);
    Ok(HSumReport { sum_matches: 3 * *w_prime == sum(roots.iter().copied()), all_pairings_one })
}

/// `l = (2h + Σ_A)/7` with `h = w′`.
pub fn class_l(family_a: &[LorentzVector], h: &LorentzVector) -> Result<LorentzVector> {
    let total = 2 * *h + sum(family_a.iter().copied());
    let c = total.coords();
    if c.iter().any(|x| x % 7 != 0) {
        return Err(Error::NonIntegral("(2h + sum of A) is not divisible by 7".into()));
    }
    Ok(LorentzVector::from_coords(&c.map(|x| x / 7)))
}

/// Projection `r′` of a root to `R^⊥ ⊗ Q`.
pub fn project_mod_r(emb: &D4Embedding, r: &LeechRoot) -> Result<RationalVector> {
    emb.project_orthogonal(&r.vector())
}

/// `s_{r′}(v) = v + 2⟨r′,v⟩r′` for `⟨r′,r′⟩ = −1`.
pub fn reflect(r_prime: &RationalVector, v: &RationalVector) -> RationalVector {
    let c = r_prime.pair(v) * Rational64::from_integer(2);
    v.add(&r_prime.scale(c))
}

/// `reflect` for a lattice vector, requiring an integral image.
pub fn reflect_lattice(
    r_prime: &RationalVector,
    v: &LorentzVector,
    basis: &LeechBasis,
) -> Result<LorentzVector> {
    reflect(r_prime, &RationalVector::from_lattice(v)).to_lattice(basis)
}

/// The sublattice `R` and its orthogonal complement inside `L`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplementReport {
    pub rank: usize,
    pub determinant: String,
    pub signature: (usize, usize),
    pub even: bool,
    pub divisors: Vec<i64>,
    pub sub_primitive: bool,
    pub complement_primitive: bool,
}

/// Basis of `L` in the coordinates `(λ, m, n)`: the Leech basis rows, `f`
/// and `g`.
pub fn lorentz_basis_rows(basis: &LeechBasis) -> Vec<[i64; L_DIM]> {
    let mut rows: Vec<[i64; L_DIM]> =
        (0..DIM).map(|i| LorentzVector::new(basis.row(i), 0, 0).coords()).collect();
    rows.push(LorentzVector::new(LeechVector::ZERO, 1, 0).coords());
    rows.push(LorentzVector::new(LeechVector::ZERO, 0, 1).coords());
    rows
}

/// Coefficients of `v` in [`lorentz_basis_rows`].
pub fn lorentz_coefficients(basis: &LeechBasis, v: &LorentzVector) -> Result<Vec<i64>> {
    let mut c = basis
        .coefficients(&v.lambda)
        .ok_or_else(|| Error::NotMember(format!("{:?}", v.lambda)))?
        .to_vec();
    c.push(v.m);
    c.push(v.n);
    Ok(c)
}

/// Gram matrix of `L` in [`lorentz_basis_rows`].
pub fn lorentz_gram(basis: &LeechBasis) -> Result<GramMatrix> {
    let rows: Vec<LorentzVector> =
        lorentz_basis_rows(basis).iter().map(LorentzVector::from_coords).collect();
    let g: Vec<Vec<i64>> =
        rows.iter().map(|a| rows.iter().map(|b| a.pair(b)).collect()).collect::<Result<_>>()?;
    GramMatrix::from_rows(&g)
}

fn complement_parts(basis: &LeechBasis, sub: &[LorentzVector]) -> Result<(IntMatrix, IntMatrix, GramMatrix)> {
    let gram = lorentz_gram(basis)?;
    let coeffs: Vec<Vec<i64>> =
        sub.iter().map(|v| lorentz_coefficients(basis, v)).collect::<Result<_>>()?;
    let sub_m = IntMatrix::from_rows(&coeffs);
    let comp = orthogonal_complement(&gram, &sub_m);
    let cg = gram.restrict(&comp);
    Ok((sub_m, comp, cg))
}

/// Gram matrix of the complement in `L` of the span of `sub`, in a
/// deterministic kernel basis.
pub fn complement_gram(basis: &LeechBasis, sub: &[LorentzVector]) -> Result<GramMatrix> {
    Ok(complement_parts(basis, sub)?.2)
}

/// Complement in `L` of the span of `sub`.
pub fn complement_in_l(basis: &LeechBasis, sub: &[LorentzVector]) -> Result<ComplementReport> {
    let (sub_m, comp, cg) = complement_parts(basis, sub)?;
    Ok(ComplementReport {
        rank: comp.rows(),
        determinant: cg.determinant().to_string(),
        signature: cg.signature()?,
        even: cg.is_even(),
        divisors: cg.discriminant_group().divisors_i64(),
        sub_primitive: is_primitive(&sub_m),
        complement_primitive: is_primitive(&comp),
    })
}

/// Four minimal-vector roots `a₁,a₂,b₁,b₂` spanning `A₂ ⊥ A₂`: the first
/// such quadruple in sorted order with `⟨a₁,a₂⟩ = ⟨b₁,b₂⟩ = 1` and all
/// cross products 0. The search is confined to the first `pool` minimal
/// vectors.
pub fn find_a2_a2(basis: &LeechBasis, minvecs: &[LeechVector], pool: usize) -> Option<[LeechRoot; 4]> {
    let c: Vec<LeechRoot> = minvecs
        .iter()
        .take(pool)
        .map(|&l| make_root(basis, l).expect("member"))
        .collect();
    for (i, &a1) in c.iter().enumerate() {
        for &a2 in &c[i + 1..] {
            if a1.pair(&a2) != 1 {
                continue;
            }
            for (k, &b1) in c.iter().enumerate() {
                if b1.pair(&a1) != 0 || b1.pair(&a2) != 0 {
                    continue;
                }
                for &b2 in &c[k + 1..] {
                    if b2.pair(&b1) == 1 && b2.pair(&a1) == 0 && b2.pair(&a2) == 0 {
                        return Some([a1, a2, b1, b2]);
                    }
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub lambda: [i64; DIM],
    pub m: i64,
    pub n: i64,
    pub family: Option<char>,
}

pub fn root_records(roots: &[LeechRoot], family: impl Fn(usize) -> Option<char>) -> Vec<RootRecord> {
    roots
        .iter()
        .enumerate()
        .map(|(i, r)| RootRecord {
            lambda: r.lambda().0,
            m: r.vector().m,
            n: r.vector().n,
            family: family(i),
        })
        .collect()
}

/// Intersection matrix of a set of roots.
pub fn intersection_matrix(roots: &[LeechRoot]) -> Vec<Vec<i64>> {
    roots.iter().map(|a| roots.iter().map(|b| a.pair(b)).collect()).collect()
}

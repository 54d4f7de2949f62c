//! The explicit surface models: the sextic double plane, the quintic span,
//! the Dickson quartic and the quartic surface, the bidegree (2,1)/(1,2)
//! model in `P² × P²`, and the Weierstrass equations.

use serde::Serialize;

use super::field::{projective_points, Field};
use super::poly::{Poly, MAX_VARS};
use crate::error::{Error, Result};
use crate::graph::IncidenceGraph;

pub const X: [&str; 3] = ["x0", "x1", "x2"];
pub const X4: [&str; 4] = ["x0", "x1", "x2", "x3"];
pub const XY: [&str; 6] = ["x0", "x1", "x2", "y0", "y1", "y2"];
pub const WEIERSTRASS_VARS: [&str; 4] = ["t", "tau", "x", "y"];

fn parse(field: &'static Field, names: &[&str], s: &str) -> Poly {
    Poly::parse(field, names, s).expect("well-formed model equation")
}

/// Fields scanned for extension stability: F4, then F16 and F64 up to
/// `ext_degree` (1, 2 or 3).
pub fn scan_fields(ext_degree: u32) -> Result<Vec<&'static Field>> {
    match ext_degree {
        1..=3 => Ok([Field::f4(), Field::f16(), Field::f64()][..ext_degree as usize].to_vec()),
        _ => Err(Error::OutOfRange(format!("extension degree {ext_degree} (expected 1..=3)"))),
    }
}

/// `x0·x1·x2·(x0³ + x1³ + x2³)`.
pub fn sextic(field: &'static Field) -> Poly {
    parse(field, &X, "x0^4*x1*x2 + x0*x1^4*x2 + x0*x1*x2^4")
}

/// The PGL(3,2)-invariant plane quartic.
pub fn dickson_quartic(field: &'static Field) -> Poly {
    parse(
        field,
        &X,
        "x0^4 + x1^4 + x2^4 + x0^2*x1^2 + x0^2*x2^2 + x1^2*x2^2 \
         + x0^2*x1*x2 + x0*x1^2*x2 + x0*x1*x2^2",
    )
}

/// `x3⁴ + F4(x0,x1,x2)`.
pub fn quartic_surface(field: &'static Field) -> Poly {
    let f = dickson_quartic(field);
    let vars: Vec<Poly> = (0..3).map(|i| Poly::var(field, 4, i)).collect();
    &f.compose(&vars) + &Poly::var(field, 4, 3).pow(4)
}

/// The seven singular points of the quartic surface.
pub const QUARTIC_SINGULAR_POINTS: [[u8; 4]; 7] = [
    [1, 1, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 0, 1, 1],
    [1, 1, 1, 1],
];

/// Points of `P^{n−1}(field)` where every partial of `p` vanishes, and
/// `p` itself when `with_p` is set.
pub fn common_partial_zeros(p: &Poly, field: &'static Field, with_p: bool) -> Result<Vec<Vec<u8>>> {
    let p = p.lift(field)?;
    let mut eqs = p.gradient();
    eqs.retain(|q| !q.is_zero());
    if with_p {
        eqs.push(p.clone());
    }
    Ok(projective_points(field, p.nvars() - 1)
        .into_iter()
        .filter(|pt| eqs.iter().all(|q| q.eval(pt) == 0))
        .collect())
}

/// Singular points of the hypersurface `p = 0`. In characteristic 2 the
/// Euler relation `Σ xᵢ∂ᵢp = deg(p)·p` gives nothing for even degree, so
/// `p = 0` is added explicitly there.
pub fn singular_points(p: &Poly, field: &'static Field) -> Result<Vec<Vec<u8>>> {
    let even = p.degree().is_some_and(|d| d % 2 == 0);
    common_partial_zeros(p, field, even)
}

/// Points of `P²(F4)` as vectors of field elements of `field`.
pub fn pg2_f4_points(field: &'static Field) -> Result<Vec<Vec<u8>>> {
    projective_points(Field::f4(), 2)
        .into_iter()
        .map(|p| p.iter().map(|&c| field.f4_element(c)).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SexticReport {
    /// `(field order, number of points, equals P²(F4))`
    pub scans: Vec<(usize, usize, bool)>,
}

impl SexticReport {
    pub fn passed(&self) -> bool {
        self.scans.iter().all(|&(_, n, eq)| n == 21 && eq)
    }
}

pub fn sextic_check(fields: &[&'static Field]) -> Result<SexticReport> {
    let f6 = sextic(Field::f4());
    let mut scans = Vec::new();
    for &field in fields {
        let zeros = common_partial_zeros(&f6, field, false)?;
        let mut expected = pg2_f4_points(field)?;
        expected.sort();
        scans.push((field.order(), zeros.len(), zeros == expected));
    }
    Ok(SexticReport { scans })
}

/// Rank of a matrix over `field`.
pub fn rank(field: &Field, rows: &[Vec<u8>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("nonzero pivot");
        let pivot_row: Vec<u8> = m[r].iter().map(|&x| field.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= field.mul(k, y);
                }
            }
        }
        m[r] = pivot_row;
        r += 1;
    }
    r
}

/// Basis of `{v : M v = 0}`.
pub fn nullspace(field: &Field, rows: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("nonzero pivot");
        m[r] = m[r].iter().map(|&x| field.mul(x, inv)).collect();
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= field.mul(k, y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u8; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = m[i][free];
            }
            v
        })
        .collect()
}

fn monomials_of_degree(nvars: usize, d: u8) -> Vec<[u8; MAX_VARS]> {
    let mut out = Vec::new();
    fn rec(i: usize, n: usize, left: u8, cur: &mut [u8; MAX_VARS], out: &mut Vec<[u8; MAX_VARS]>) {
        if i == n - 1 {
            cur[i] = left;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, n, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, nvars, d, &mut [0; MAX_VARS], &mut out);
    out
}

/// The three quintics `xᵢ⁴xⱼ + xⱼ⁴xᵢ`.
pub fn listed_quintics() -> Vec<Poly> {
    let f = Field::f4();
    ["x0^4*x1 + x1^4*x0", "x0^4*x2 + x2^4*x0", "x2^4*x1 + x1^4*x2"]
        .iter()
        .map(|s| parse(f, &X, s))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct QuinticReport {
    pub monomials: usize,
    pub evaluation_rank: usize,
    pub kernel_dim: usize,
    pub listed_vanish: bool,
    pub listed_rank: usize,
}

impl QuinticReport {
    pub fn passed(&self) -> bool {
        self.kernel_dim == 3 && self.listed_vanish && self.listed_rank == 3
    }
}

/// Degree-5 plane curves through the 21 points of `P²(F4)`.
pub fn quintic_kernel() -> QuinticReport {
    let f = Field::f4();
    let monos = monomials_of_degree(3, 5);
    let points = projective_points(f, 2);
    let matrix: Vec<Vec<u8>> = points
        .iter()
        .map(|pt| monos.iter().map(|e| Poly::monomial(f, 3, *e, 1).eval(pt)).collect())
        .collect();
    let evaluation_rank = rank(f, &matrix);
    let listed = listed_quintics();
    let listed_vanish = listed.iter().all(|q| points.iter().all(|pt| q.eval(pt) == 0));
    let coeffs: Vec<Vec<u8>> =
        listed.iter().map(|q| monos.iter().map(|e| q.coefficient(e)).collect()).collect();
    QuinticReport {
        monomials: monos.len(),
        evaluation_rank,
        kernel_dim: monos.len() - evaluation_rank,
        listed_vanish,
        listed_rank: rank(f, &coeffs),
    }
}

/// All invertible 3×3 matrices over F2.
pub fn gl3_f2() -> Vec<[[u8; 3]; 3]> {
    let f = Field::f2();
    (0u32..512)
        .map(|bits| {
            let mut m = [[0u8; 3]; 3];
            for (k, e) in m.iter_mut().flatten().enumerate() {
                *e = (bits >> k & 1) as u8;
            }
            m
        })
        .filter(|m| rank(f, &m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()) == 3)
        .collect()
}

/// Linear substitution `x ↦ g·x`.
pub fn linear_substitution(p: &Poly, g: &[[u8; 3]; 3]) -> Poly {
    let field = p.field();
    let subs: Vec<Poly> = (0..3)
        .map(|i| {
            (0..3).fold(Poly::zero(field, 3), |acc, j| {
                &acc + &Poly::var(field, 3, j).scale(g[i][j])
            })
        })
        .collect();
    p.compose(&subs)
}

#[derive(Clone, Debug, Serialize)]
pub struct DicksonReport {
    pub group_order: usize,
    pub invariant: usize,
}

impl DicksonReport {
    pub fn passed(&self) -> bool {
        self.group_order == 168 && self.invariant == 168
    }
}

pub fn dickson_invariance() -> DicksonReport {
    let f = dickson_quartic(Field::f2());
    let group = gl3_f2();
    let invariant = group.iter().filter(|g| linear_substitution(&f, g) == f).count();
    DicksonReport { group_order: group.len(), invariant }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularReport {
    /// `(field order, singular points found, equal to the listed seven)`
    pub scans: Vec<(usize, usize, bool)>,
}

impl SingularReport {
    pub fn passed(&self) -> bool {
        self.scans.iter().all(|&(_, n, ok)| n == 7 && ok)
    }
}

pub fn quartic_singularities(fields: &[&'static Field]) -> Result<SingularReport> {
    let y = quartic_surface(Field::f2());
    let mut expected: Vec<Vec<u8>> = QUARTIC_SINGULAR_POINTS.iter().map(|p| p.to_vec()).collect();
    expected.sort();
    let mut scans = Vec::new();
    for &field in std::iter::once(&Field::f2()).chain(fields) {
        let pts = singular_points(&y.lift(field)?, field)?;
        scans.push((field.order(), pts.len(), pts == expected));
    }
    Ok(SingularReport { scans })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCone {
    pub multiplicity: u32,
    /// Rank of the quadratic part when the multiplicity is 2.
    pub quadric_rank: Option<usize>,
}

/// Rank of a quadratic form in characteristic 2: the rank of its polar
/// (alternating) form, plus one if the form is nonzero on the polar
/// radical.
pub fn quadric_rank(q: &Poly) -> usize {
    let field = q.field();
    let n = q.nvars();
    let mut b = vec![vec![0u8; n]; n];
    for (e, &c) in q.terms() {
        let vars: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        if let [i, j] = vars[..] {
            b[i][j] = c;
            b[j][i] = c;
        }
    }
    let radical = nullspace(field, &b, n);
    let anisotropic = radical.iter().any(|v| q.eval(v) != 0);
    rank(field, &b) + anisotropic as usize
}

/// Multiplicity and tangent-cone rank of `p = 0` at a projective point.
pub fn tangent_cone(p: &Poly, point: &[u8]) -> Result<TangentCone> {
    let field = p.field();
    let n = p.nvars();
    if p.eval(point) != 0 {
        return Err(Error::InvalidInput(format!("{point:?} is not on the hypersurface")));
    }
    let j = point.iter().position(|&c| c != 0).ok_or_else(|| {
        Error::InvalidInput("the zero vector is not a projective point".into())
    })?;
    let inv = field.inv(point[j]).expect("nonzero");
    let subs: Vec<Poly> = (0..n)
        .map(|i| {
            let c = Poly::constant(field, n, field.mul(point[i], inv));
            if i == j {
                c
            } else {
                &c + &Poly::var(field, n, i)
            }
        })
        .collect();
    let local = p.compose(&subs);
    let m = local.min_degree().ok_or_else(|| {
        Error::InvalidInput("polynomial vanishes identically in the chart".into())
    })?;
    if m <= 1 {
        return Err(Error::NonsingularPoint(format!("{point:?}")));
    }
    let quadric_rank = (m == 2).then(|| quadric_rank(&local.homogeneous_part(2)));
    Ok(TangentCone { multiplicity: m, quadric_rank })
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneConic {
    pub plane: [u8; 3],
    pub is_square: bool,
    pub singular_on_conic: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleConicReport {
    pub planes: Vec<PlaneConic>,
    pub example_matches: bool,
}

impl DoubleConicReport {
    pub fn passed(&self) -> bool {
        self.planes.len() == 7
            && self.planes.iter().all(|p| p.is_square && p.singular_on_conic == 3)
            && self.example_matches
    }
}

/// Eliminate `x_i` using the plane `a·x = 0`, where `i` is the first index
/// with `aᵢ = 1`.
fn restrict_to_plane(p: &Poly, a: &[u8]) -> Poly {
    let field = p.field();
    let n = p.nvars();
    let i = a.iter().position(|&c| c == 1).expect("normalized plane");
    let lin = (0..a.len())
        .filter(|&j| j != i)
        .fold(Poly::zero(field, n), |acc, j| &acc + &Poly::var(field, n, j).scale(a[j]));
    p.substitute(i, &lin)
}

pub fn plane_double_conics() -> DoubleConicReport {
    let f = Field::f2();
    let y = quartic_surface(f);
    let mut planes = Vec::new();
    let mut example_matches = false;
    for a in projective_points(f, 2) {
        let restricted = restrict_to_plane(&y, &a);
        let conic = restricted.sqrt();
        let singular_on_conic = conic.as_ref().map_or(0, |c| {
            QUARTIC_SINGULAR_POINTS
                .iter()
                .filter(|p| (0..3).fold(0, |s, k| s ^ (a[k] & p[k])) == 0 && c.eval(&p[..]) == 0)
                .count()
        });
        if a == [1, 1, 1] {
            let given = parse(f, &X4, "x0^2 + x1^2 + x2^2 + x3^2 + x0*x1 + x0*x2 + x1*x2");
            example_matches = conic.as_ref() == Some(&restrict_to_plane(&given, &a));
        }
        planes.push(PlaneConic {
            plane: [a[0], a[1], a[2]],
            is_square: conic.is_some(),
            singular_on_conic,
        });
    }
    DoubleConicReport { planes, example_matches }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub restriction_matches_listed: bool,
    pub product_identity: bool,
    pub conjugate_pair: bool,
    pub singular_points_on_both: bool,
    pub q1_on_q1_only: bool,
    pub q2_on_q2_only: bool,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.restriction_matches_listed
            && self.product_identity
            && self.conjugate_pair
            && self.singular_points_on_both
            && self.q1_on_q1_only
            && self.q2_on_q2_only
    }
}

/// The plane `x1 + x3 = 0` cuts the quartic surface in two conjugate
/// conics over F4.
pub fn quartic_split() -> SplitReport {
    let f = Field::f4();
    let y = quartic_surface(f);
    let restricted = y.substitute(3, &Poly::var(f, 4, 1));
    let listed = parse(
        f,
        &X4,
        "x0^4 + x2^4 + x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2 + x0^2*x1*x2 + x0*x1^2*x2 + x0*x1*x2^2",
    );
    let q1 = parse(f, &X4, "x0^2 + a*x2^2 + x0*x1 + a*x1*x2");
    let q2 = parse(f, &X4, "x0^2 + a^2*x2^2 + x0*x1 + a^2*x1*x2");
    let (a, a2) = (f.f4_element(2).expect("a"), f.f4_element(3).expect("a^2"));
    let p14: [[u8; 4]; 4] = [[0, 1, 0, 1], [1, 1, 0, 1], [0, 1, 1, 1], [1, 1, 1, 1]];
    let pt1 = [1, 0, a, 0];
    let pt2 = [1, 0, a2, 0];
    SplitReport {
        restriction_matches_listed: restricted == listed,
        product_identity: &q1 * &q2 == restricted,
        conjugate_pair: q1.conjugate() == q2 && q2.conjugate() == q1,
        singular_points_on_both: p14
            .iter()
            .all(|p| y.eval(p) == 0 && q1.eval(p) == 0 && q2.eval(p) == 0),
        q1_on_q1_only: q1.eval(&pt1) == 0 && q2.eval(&pt1) != 0,
        q2_on_q2_only: q2.eval(&pt2) == 0 && q1.eval(&pt2) != 0,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentConeReport {
    pub cones: Vec<([u8; 4], TangentCone)>,
}

impl TangentConeReport {
    pub fn passed(&self) -> bool {
        self.cones.len() == 7
            && self
                .cones
                .iter()
                .all(|(_, c)| c.multiplicity == 2 && c.quadric_rank == Some(2))
    }
}

pub fn quartic_tangent_cones() -> Result<TangentConeReport> {
    let y = quartic_surface(Field::f2());
    let cones = QUARTIC_SINGULAR_POINTS
        .iter()
        .map(|p| Ok((*p, tangent_cone(&y, p)?)))
        .collect::<Result<_>>()?;
    Ok(TangentConeReport { cones })
}

/// `x0·y0² + x1·y1² + x2·y2²` and `y0·x0² + y1·x1² + y2·x2²`.
pub fn mukai_forms(field: &'static Field) -> (Poly, Poly) {
    (
        parse(field, &XY, "x0*y0^2 + x1*y1^2 + x2*y2^2"),
        parse(field, &XY, "y0*x0^2 + y1*x1^2 + y2*x2^2"),
    )
}

/// Fix the `x` (offset 0) or `y` (offset 3) block to a point.
fn fix_block(p: &Poly, offset: usize, point: &[u8]) -> Poly {
    let field = p.field();
    let subs: Vec<Poly> = (0..6)
        .map(|i| {
            if (offset..offset + 3).contains(&i) {
                Poly::constant(field, 6, point[i - offset])
            } else {
                Poly::var(field, 6, i)
            }
        })
        .collect();
    p.compose(&subs)
}

#[derive(Clone, Debug)]
pub struct MukaiReport {
    pub curves_contained: usize,
    pub switched_contained: usize,
    /// Part 0: curves `x = a`; part 1: curves `y = b`.
    pub incidence: IncidenceGraph,
}

impl MukaiReport {
    pub fn passed(&self) -> bool {
        self.curves_contained == 21
            && self.switched_contained == 21
            && self.incidence.is_regular(5)
            && self.incidence.respects_parts()
    }
}

/// The 21 + 21 curves on `V1 ∩ V2`: `x = a` with `Σ aᵢyᵢ² = 0`, and
/// `y = b` with `Σ bᵢxᵢ² = 0`, for `a, b ∈ P²(F4)`. On the first kind
/// `V1` restricts to the curve's own equation and `V2` to its square root
/// (`a⁴ = a`), so the check is `(V2|)² = V1|`. Incidence is tested over
/// F16 by evaluating both curve equations at the candidate point `(a, b)`.
pub fn mukai_curves() -> Result<MukaiReport> {
    let f4 = Field::f4();
    let (v1, v2) = mukai_forms(f4);
    let points = projective_points(f4, 2);
    let curves_contained = points
        .iter()
        .filter(|a| fix_block(&v2, 0, a).frobenius() == fix_block(&v1, 0, a))
        .count();
    let switched_contained = points
        .iter()
        .filter(|b| fix_block(&v1, 3, b).frobenius() == fix_block(&v2, 3, b))
        .count();

    let f16 = Field::f16();
    let (w1, w2) = mukai_forms(f16);
    let lifted: Vec<Vec<u8>> = pg2_f4_points(f16)?;
    let mut labels: Vec<String> = lifted.iter().map(|p| format!("x={p:?}")).collect();
    labels.extend(lifted.iter().map(|p| format!("y={p:?}")));
    let mut parts = vec![0u8; 21];
    parts.extend([1u8; 21]);
    let mut incidence = IncidenceGraph::new(labels, parts)?;
    for (i, a) in lifted.iter().enumerate() {
        let curve_a = fix_block(&w1, 0, a);
        for (j, b) in lifted.iter().enumerate() {
            let curve_b = fix_block(&w2, 3, b);
            let pt: Vec<u8> = a.iter().chain(b).copied().collect();
            if curve_a.eval(&pt) == 0 && curve_b.eval(&pt) == 0 {
                incidence.add_edge(i, 21 + j);
            }
        }
    }
    Ok(MukaiReport { curves_contained, switched_contained, incidence })
}

#[derive(Clone, Debug, Serialize)]
pub struct WeierstrassReport {
    pub partial_y_zero: bool,
    pub partial_x: String,
    pub partial_t: String,
    /// Affine `(t, x, y)` singular points found over the scanned field.
    pub singular_points: Vec<[u8; 3]>,
    pub scan_field_order: usize,
    pub transform_identity: bool,
    pub difference_is_t11_times_unit_relation: bool,
    pub rescaled_smooth: bool,
}

impl WeierstrassReport {
    pub fn passed(&self) -> bool {
        self.partial_y_zero
            && self.singular_points == [[0, 0, 0]]
            && self.transform_identity
            && self.difference_is_t11_times_unit_relation
            && self.rescaled_smooth
    }
}

/// `y² + x³ + t¹¹`: its affine singular locus, and the change of chart
/// `x → t⁴x`, `y → t⁶y`, `t = 1/τ` in `F2[t,τ,x,y]/(tτ − 1)`.
pub fn weierstrass_checks(scan_field: &'static Field) -> WeierstrassReport {
    let f2 = Field::f2();
    let v = &WEIERSTRASS_VARS;
    let w = parse(f2, v, "y^2 + x^3 + t^11");
    let px = w.partial(2);
    let pt = w.partial(0);
    let py = w.partial(3);

    let wq = w.lift(scan_field).expect("F2 coefficients");
    let eqs = [wq.clone(), wq.partial(0), wq.partial(2), wq.partial(3)];
    let mut singular_points = Vec::new();
    for t in scan_field.elements() {
        for x in scan_field.elements() {
            for y in scan_field.elements() {
                let p = [t, 0, x, y];
                if eqs.iter().all(|e| e.eval(&p) == 0) {
                    singular_points.push([t, x, y]);
                }
            }
        }
    }

    let subs = [
        Poly::var(f2, 4, 0),
        Poly::var(f2, 4, 1),
        parse(f2, v, "t^4*x"),
        parse(f2, v, "t^6*y"),
    ];
    let transformed = w.compose(&subs);
    let rescaled = parse(f2, v, "y^2 + x^3 + tau");
    let target = &parse(f2, v, "t^12") * &rescaled;
    let difference = &transformed + &target;
    let rescaled_smooth = rescaled.partial(1) == Poly::constant(f2, 4, 1);

    WeierstrassReport {
        partial_y_zero: py.is_zero(),
        partial_x: format!("{px:?}"),
        partial_t: format!("{pt:?}"),
        singular_points,
        scan_field_order: scan_field.order(),
        transform_identity: difference.reduce_inverse_pair(0, 1).is_zero(),
        difference_is_t11_times_unit_relation: difference == parse(f2, v, "t^11 + t^12*tau"),
        rescaled_smooth,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials_of_degree(3, 5).len(), 21);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
    }

    #[test]
    fn rank_and_nullspace() {
        let f = Field::f4();
        let m = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(rank(f, &m), 2);
        let k = nullspace(f, &m, 3);
        assert_eq!(k, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn quadric_ranks() {
        let f = Field::f2();
        assert_eq!(quadric_rank(&parse(f, &X, "x0*x1")), 2);
        assert_eq!(quadric_rank(&parse(f, &X, "x0^2")), 1);
        assert_eq!(quadric_rank(&parse(f, &X, "x0*x1 + x2^2")), 3);
        assert_eq!(quadric_rank(&parse(f, &X, "x0^2 + x1^2")), 1);
    }

    #[test]
    fn smooth_point_is_rejected() {
        let f = Field::f2();
        let q = parse(f, &X, "x0*x1 + x2^2");
        assert!(matches!(tangent_cone(&q, &[1, 0, 0]), Err(Error::NonsingularPoint(_))));
        assert!(tangent_cone(&q, &[1, 1, 0]).is_err());
    }

    #[test]
    fn gl3_order() {
        assert_eq!(gl3_f2().len(), 168);
    }
}

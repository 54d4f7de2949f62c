//! Sparse multivariate polynomials over a binary field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 6;

pub type Monomial = [u8; MAX_VARS];

#[derive(Clone, PartialEq)]
pub struct Poly {
    field: &'static Field,
    nvars: usize,
    terms: BTreeMap<Monomial, u8>,
}

impl Poly {
    pub fn zero(field: &'static Field, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &'static Field, nvars: usize, c: u8) -> Self {
        Self::monomial(field, nvars, [0; MAX_VARS], c)
    }

    pub fn monomial(field: &'static Field, nvars: usize, exps: Monomial, c: u8) -> Self {
        let mut p = Self::zero(field, nvars);
        assert!(exps[nvars..].iter().all(|&e| e == 0), "exponent on a missing variable");
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(field: &'static Field, nvars: usize, i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Self::monomial(field, nvars, e, 1)
    }

    /// Parse a sum of products such as `x0^4 + a*x1*x2 + a^2*x3`.
    ///
    /// Factors are variable names from `names` with an optional `^e`, the
    /// F4 constants `a` and `a^2`, or the integers `0` and `1`. Integer
    /// coefficients are reduced mod 2.
    pub fn parse(field: &'static Field, names: &[&str], s: &str) -> Result<Self> {
        let bad = |m: String| Error::InvalidInput(format!("cannot parse {s:?}: {m}"));
        let mut out = Self::zero(field, names.len());
        for term in s.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(bad("empty term".into()));
            }
            let mut exps = [0u8; MAX_VARS];
            let mut coef = 1u8;
            for factor in term.split('*').map(str::trim) {
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => {
                        (b.trim(), e.trim().parse::<u32>().map_err(|e| bad(e.to_string()))?)
                    }
                    None => (factor, 1),
                };
                if let Some(i) = names.iter().position(|n| *n == base) {
                    let total = exps[i] as u32 + e;
                    exps[i] = u8::try_from(total).map_err(|_| bad("exponent too large".into()))?;
                } else if base == "a" {
                    let a = field.f4_element(2)?;
                    coef = field.mul(coef, field.pow(a, e));
                } else if let Ok(k) = base.parse::<u64>() {
                    coef = field.mul(coef, (k % 2) as u8);
                } else {
                    return Err(bad(format!("unknown factor {base:?}")));
                }
            }
            out = &out + &Self::monomial(field, names.len(), exps, coef);
        }
        Ok(out)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &u8)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &Monomial) -> u8 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Monomial, c: u8) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exps).or_insert(0);
        *e ^= c;
        if *e == 0 {
            self.terms.remove(&exps);
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    /// Lowest total degree among the terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            if mono_degree(e) == d {
                p.terms.insert(*e, c);
            }
        }
        p
    }

    pub fn scale(&self, c: u8) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        if c != 0 {
            for (e, &k) in &self.terms {
                p.terms.insert(*e, self.field.mul(k, c));
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::constant(self.field, self.nvars, 1);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.frobenius();
            }
        }
        result
    }

    pub fn eval(&self, point: &[u8]) -> u8 {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let f = self.field;
        self.terms.iter().fold(0, |acc, (e, &c)| {
            let m = (0..self.nvars).fold(c, |m, i| f.mul(m, f.pow(point[i], e[i] as u32)));
            acc ^ m
        })
    }

    /// `p(q₀, …, q_{n−1})`; all `qᵢ` share a variable count.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let nv = subs.first().map_or(0, |q| q.nvars);
        let mut powers: Vec<BTreeMap<u8, Poly>> = vec![BTreeMap::new(); self.nvars];
        let mut out = Poly::zero(self.field, nv);
        for (e, &c) in &self.terms {
            let mut t = Poly::constant(self.field, nv, c);
            for i in 0..self.nvars {
                if e[i] > 0 {
                    let qi = powers[i].entry(e[i]).or_insert_with(|| subs[i].pow(e[i] as u32));
                    t = &t * qi;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitute a single variable, keeping the others.
    pub fn substitute(&self, var: usize, q: &Poly) -> Poly {
        let subs: Vec<Poly> = (0..self.nvars)
            .map(|i| if i == var { q.clone() } else { Poly::var(self.field, self.nvars, i) })
            .collect();
        self.compose(&subs)
    }

    /// Formal partial derivative; even exponents vanish.
    pub fn partial(&self, var: usize) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            if e[var] % 2 == 1 {
                let mut d = *e;
                d[var] -= 1;
                p.add_term(d, c);
            }
        }
        p
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// `p²`, computed as `Σ c² m²`.
    pub fn frobenius(&self) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            p.terms.insert(e.map(|x| x * 2), self.field.frobenius(c));
        }
        p
    }

    /// Apply the Frobenius to the coefficients only.
    pub fn conjugate(&self) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            p.terms.insert(*e, self.field.frobenius(c));
        }
        p
    }

    /// Square root, if every exponent is even.
    pub fn sqrt(&self) -> Option<Poly> {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            if e.iter().any(|x| x % 2 == 1) {
                return None;
            }
            p.terms.insert(e.map(|x| x / 2), self.field.sqrt(c));
        }
        Some(p)
    }

    /// Same polynomial over a larger field, mapping F4 coefficients.
    pub fn lift(&self, target: &'static Field) -> Result<Poly> {
        let mut p = Poly::zero(target, self.nvars);
        for (e, &c) in &self.terms {
            let idx = self.field.f4_index(c).ok_or_else(|| {
                Error::Unsupported("only coefficients in F4 can be lifted".into())
            })?;
            p.add_term(*e, target.f4_element(idx)?);
        }
        Ok(p)
    }

    /// Reduce modulo `xᵢxⱼ − 1` by cancelling common powers of the two
    /// variables.
    pub fn reduce_inverse_pair(&self, i: usize, j: usize) -> Poly {
        let mut p = Poly::zero(self.field, self.nvars);
        for (e, &c) in &self.terms {
            let k = e[i].min(e[j]);
            let mut r = *e;
            r[i] -= k;
            r[j] -= k;
            p.add_term(r, c);
        }
        p
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(e, &c)| TermRecord { exps: e[..self.nvars].to_vec(), coeff: c })
            .collect()
    }

    pub fn from_records(field: &'static Field, nvars: usize, records: &[TermRecord]) -> Result<Poly> {
        let mut p = Poly::zero(field, nvars);
        for r in records {
            if r.exps.len() != nvars || r.coeff as usize >= field.order() {
                return Err(Error::InvalidInput(format!("bad term {r:?}")));
            }
            let mut e = [0; MAX_VARS];
            e[..nvars].copy_from_slice(&r.exps);
            p.add_term(e, r.coeff);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_records())?)
    }

    pub fn from_json(field: &'static Field, nvars: usize, s: &str) -> Result<Poly> {
        let records: Vec<TermRecord> = serde_json::from_str(s)?;
        Self::from_records(field, nvars, &records)
    }
}

/// JSON form of one term: exponents and the coefficient's field index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exps: Vec<u8>,
    pub coeff: u8,
}

fn mono_degree(e: &Monomial) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, &c) in &rhs.terms {
            p.add_term(*e, c);
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut p = Poly::zero(self.field, self.nvars);
        for (a, &c) in &self.terms {
            for (b, &d) in &rhs.terms {
                let mut e = *a;
                for i in 0..MAX_VARS {
                    e[i] = e[i].checked_add(b[i]).expect("exponent overflow");
                }
                p.add_term(e, self.field.mul(c, d));
            }
        }
        p
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, &c)| {
                let mut factors = Vec::new();
                if c != 1 || e.iter().all(|&x| x == 0) {
                    factors.push(format!("[{c}]"));
                }
                for (i, &x) in e[..self.nvars].iter().enumerate() {
                    match x {
                        0 => {}
                        1 => factors.push(format!("x{i}")),
                        _ => factors.push(format!("x{i}^{x}")),
                    }
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> Poly {
        Poly::parse(Field::f4(), &XYZ, s).unwrap()
    }

    #[test]
    fn partials_in_char_two() {
        assert_eq!(p("x^3").partial(0), p("x^2"));
        assert!(p("y^2").partial(1).is_zero());
        assert!(p("z^4").partial(2).is_zero());
        assert_eq!(p("x*y + x^2*z").partial(0), p("y"));
    }

    #[test]
    fn parse_and_arithmetic() {
        assert!((&p("x + y") + &p("y + x")).is_zero());
        assert_eq!(p("a * a"), p("a^2"));
        assert_eq!(p("a^2 + a"), p("1"));
        assert_eq!(&p("x + y") * &p("x + y"), p("x^2 + y^2"));
        assert!(Poly::parse(Field::f4(), &XYZ, "x + w").is_err());
        assert!(Poly::parse(Field::f4(), &XYZ, "x + ").is_err());
        assert_eq!(p("x^2*y + x*y^2").substitute(1, &p("x")), Poly::zero(Field::f4(), 3));
        assert_eq!(p("x^4 + a*y^2").sqrt().unwrap(), p("x^2 + a^2*y"));
        assert!(p("x*y").sqrt().is_none());
        assert_eq!(p("a*x").conjugate(), p("a^2*x"));
        assert_eq!(p("x + a").eval(&[2, 0, 0]), 0);
    }

    #[test]
    fn reduce_modulo_inverse_pair() {
        let f = Field::f2();
        let q = Poly::parse(f, &["t", "u"], "t^3*u^2 + t + t*u").unwrap();
        assert_eq!(q.reduce_inverse_pair(0, 1), Poly::parse(f, &["t", "u"], "1").unwrap());
    }

    #[test]
    fn json_round_trip() {
        let q = p("a*x^2*z + y");
        let s = q.to_json().unwrap();
        assert_eq!(Poly::from_json(Field::f4(), 3, &s).unwrap(), q);
        assert!(Poly::from_json(Field::f4(), 2, &s).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u8..4, 0u8..4, 0u8..4), 0u8..16), 0..8).prop_map(|terms| {
            let f = Field::f16();
            let mut q = Poly::zero(f, 3);
            for ((a, b, c), k) in terms {
                q = &q + &Poly::monomial(f, 3, [a, b, c, 0, 0, 0], k);
            }
            q
        })
    }

    proptest! {
        #[test]
        fn frobenius_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a + &b).frobenius(), &a.frobenius() + &b.frobenius());
            prop_assert_eq!((&a * &b).frobenius(), &a.frobenius() * &b.frobenius());
            prop_assert_eq!(a.frobenius(), &a * &a);
            prop_assert!((&a + &a).is_zero());
        }

        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly(), v in 0usize..3) {
            let lhs = (&a * &b).partial(v);
            let rhs = &(&a * &b.partial(v)) + &(&b * &a.partial(v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), pt in proptest::collection::vec(0u8..16, 3)) {
            let f = Field::f16();
            prop_assert_eq!((&a * &b).eval(&pt), f.mul(a.eval(&pt), b.eval(&pt)));
            prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) ^ b.eval(&pt));
        }
    }
}

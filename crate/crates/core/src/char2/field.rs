//! Binary fields GF(2^k) for k ∈ {1, 2, 4, 6} by log/antilog tables.
//!
//! Elements are `u8` in the polynomial basis, so addition is XOR.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub struct Field {
    degree: u32,
    order: usize,
    exp: Vec<u8>,
    log: Vec<u8>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        self.degree == other.degree
    }
}

/// Primitive polynomial for each supported degree.
fn modulus(degree: u32) -> Option<u32> {
    match degree {
        1 => Some(0b11),
        2 => Some(0b111),
        4 => Some(0x13),
        6 => Some(0x43),
        _ => None,
    }
}

impl Field {
    fn build(degree: u32) -> Field {
        let poly = modulus(degree).expect("supported degree");
        let order = 1usize << degree;
        let n = order - 1;
        let mut exp = vec![0u8; 2 * n];
        let mut log = vec![0u8; order];
        let mut x: u32 = 1;
        for (i, e) in exp.iter_mut().take(n).enumerate() {
            *e = x as u8;
            log[x as usize] = i as u8;
            x <<= 1;
            if x & (1 << degree) != 0 {
                x ^= poly;
            }
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Field { degree, order, exp, log }
    }

    /// The field with `2^degree` elements.
    pub fn get(degree: u32) -> Result<&'static Field> {
        static F2: OnceLock<Field> = OnceLock::new();
        static F4: OnceLock<Field> = OnceLock::new();
        static F16: OnceLock<Field> = OnceLock::new();
        static F64: OnceLock<Field> = OnceLock::new();
        let cell = match degree {
            1 => &F2,
            2 => &F4,
            4 => &F16,
            6 => &F64,
            _ => return Err(Error::Unsupported(format!("GF(2^{degree})"))),
        };
        Ok(cell.get_or_init(|| Field::build(degree)))
    }

    pub fn f2() -> &'static Field {
        Self::get(1).expect("GF(2)")
    }

    pub fn f4() -> &'static Field {
        Self::get(2).expect("GF(4)")
    }

    pub fn f16() -> &'static Field {
        Self::get(4).expect("GF(16)")
    }

    pub fn f64() -> &'static Field {
        Self::get(6).expect("GF(64)")
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order as u8
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
        }
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        if a == 0 {
            return None;
        }
        let n = self.order - 1;
        Some(self.exp[(n - self.log[a as usize] as usize) % n])
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.order - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * e as u64) % n) as usize]
    }

    /// `x ↦ x²`.
    pub fn frobenius(&self, a: u8) -> u8 {
        self.mul(a, a)
    }

    /// The unique square root, `x^(q/2)`.
    pub fn sqrt(&self, a: u8) -> u8 {
        self.pow(a, (self.order / 2) as u32)
    }

    /// Primitive element.
    pub fn generator(&self) -> u8 {
        self.exp[1 % (self.order - 1)]
    }

    pub fn contains_f4(&self) -> bool {
        self.degree.is_multiple_of(2)
    }

    /// Image of `{0, 1, a, a²}` (index 0..4) with `a² = a + 1`: the cube
    /// roots of unity are `g^((q−1)/3)`.
    pub fn f4_element(&self, index: u8) -> Result<u8> {
        match index {
            0 | 1 => Ok(index),
            2 | 3 if self.contains_f4() => {
                let step = (self.order - 1) / 3;
                Ok(self.exp[step * (index as usize - 1)])
            }
            _ => Err(Error::Unsupported(format!("F4 element {index} in {self:?}"))),
        }
    }

    /// Index in `{0,1,a,a²}` of an element of the F4 subfield.
    pub fn f4_index(&self, x: u8) -> Option<u8> {
        (0..4).find(|&i| self.f4_element(i).ok() == Some(x))
    }
}

/// Projective points of `P^n(F)` with the first nonzero coordinate 1, in
/// lexicographic order of the coordinate vectors.
pub fn projective_points(field: &Field, n: usize) -> Vec<Vec<u8>> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in 0..=n {
        let free = n - lead;
        for idx in 0..q.pow(free as u32) {
            let mut p = vec![0u8; n + 1];
            p[lead] = 1;
            let mut r = idx;
            for k in (lead + 1..=n).rev() {
                p[k] = (r % q) as u8;
                r /= q;
            }
            out.push(p);
        }
    }
    out.sort();
    out
}

//! Arithmetic in GF(2^m), 3 ≤ m ≤ 16, with α = x as the primitive element.
//!
//! Elements are bit vectors of polynomials over GF(2) of degree < m.
//! Multiplication and inversion go through log/antilog tables built once per
//! field; both report to [`crate::metrics`].

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use crate::error::{Error, Result};
use crate::metrics;

/// An element of GF(2^m), stored as its bit representation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

// Characteristic 2: subtraction is addition.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Conventional primitive polynomial for GF(2^m), or `None` outside 3..=16.
pub fn default_primitive_poly(m: u32) -> Option<u32> {
    let p = match m {
        3 => 0xB,
        4 => 0x13,
        5 => 0x25,
        6 => 0x43,
        7 => 0x89,
        8 => 0x11D,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        13 => 0x201B,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100B,
        _ => return None,
    };
    Some(p)
}

/// The field GF(2^m) together with its log/antilog tables.
///
/// Immutable once built; share it freely between threads.
#[derive(Clone)]
pub struct Field {
    m: u32,
    prim_poly: u32,
    /// α^i for i in 0..2(q-1), doubled so a product of logs needs no reduction.
    exp: Vec<u16>,
    /// log_α(e) for nonzero e; entry 0 is unused.
    log: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("m", &self.m)
            .field("prim_poly", &format_args!("{:#x}", self.prim_poly))
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.prim_poly == other.prim_poly
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(2^m) from `prim_poly`, rejecting polynomials for which
    /// α = x does not have multiplicative order 2^m − 1.
    pub fn new(m: u32, prim_poly: u32) -> Result<Field> {
        if !(3..=16).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        if prim_poly >> m != 1 {
            return Err(Error::NotPrimitive { m, poly: prim_poly });
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u16; order + 1];
        let mut x: u32 = 1;
        for i in 0..order {
            if i > 0 && x == 1 {
                // α returned to 1 early, so its order is below 2^m − 1.
                return Err(Error::NotPrimitive { m, poly: prim_poly });
            }
            exp[i] = x as u16;
            exp[i + order] = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x >> m != 0 {
                x ^= prim_poly;
            }
        }
        if x != 1 {
            return Err(Error::NotPrimitive { m, poly: prim_poly });
        }
        Ok(Field {
            m,
            prim_poly,
            exp,
            log,
        })
    }

    /// GF(2^m) with its conventional primitive polynomial.
    pub fn with_default_poly(m: u32) -> Result<Field> {
        let poly = default_primitive_poly(m).ok_or(Error::UnsupportedDegree(m))?;
        Field::new(m, poly)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn prim_poly(&self) -> u32 {
        self.prim_poly
    }

    /// Number of elements, 2^m.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Multiplicative order of α, 2^m − 1. This is also the RS block length.
    pub fn order(&self) -> usize {
        self.size() - 1
    }

    /// Checked conversion from a raw value.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if (value as usize) < self.size() {
            Ok(FieldElement(value as u16))
        } else {
            Err(Error::ElementOutOfRange { value, m: self.m })
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        metrics::count_mul();
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let idx = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[idx])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        metrics::count_inv();
        let order = self.order();
        Ok(FieldElement(self.exp[order - self.log[a.0 as usize] as usize]))
    }

    /// α^j, with j reduced modulo 2^m − 1 (negative exponents allowed).
    pub fn alpha_pow(&self, j: i64) -> FieldElement {
        let idx = j.rem_euclid(self.order() as i64) as usize;
        FieldElement(self.exp[idx])
    }

    /// Discrete log base α, `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        (!a.is_zero()).then(|| self.log[a.0 as usize] as usize)
    }

    /// All elements in increasing value order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(|v| FieldElement(v as u16))
    }
}

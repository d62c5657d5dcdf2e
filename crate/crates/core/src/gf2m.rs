//! Arithmetic in GF(2^m) for 1 <= m <= 16, polynomial basis.
//!
//! Elements are bit patterns: bit `k` of [`Fe`] is the coefficient of `x^k`
//! in the representative polynomial. Addition is XOR, multiplication is
//! carry-less shift-and-XOR followed by reduction by the field modulus.
//!
//! The field elements are enumerated as `omega_i = Fe(i)`, so `omega_0 = 0`.

use std::fmt;

use crate::error::{Error, Result};

pub const MIN_DEGREE: u32 = 1;
pub const MAX_DEGREE: u32 = 16;

/// Element of GF(2^m), stored as its polynomial-basis bit pattern.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Description of GF(2^m): extension degree, reduction modulus and order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldParams {
    m: u32,
    modulus: u32,
    q: u32,
}

/// Moduli pinned for reproducible test vectors. Every other degree uses the
/// numerically smallest irreducible polynomial.
const PINNED_MODULI: [(u32, u32); 5] = [
    (1, 0b10),
    (2, 0b111),
    (3, 0b1011),
    (4, 0b1_0011),
    (8, 0x11B),
];

impl FieldParams {
    /// Builds GF(2^m) with the fixed modulus table.
    pub fn new(m: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::Config(format!(
                "extension degree {m} outside supported range {MIN_DEGREE}..={MAX_DEGREE}"
            )));
        }
        let modulus = match PINNED_MODULI.iter().find(|(d, _)| *d == m) {
            Some(&(_, p)) => p,
            None => smallest_irreducible(m),
        };
        Self::with_modulus(m, modulus)
    }

    /// Builds GF(2^m) from an explicit modulus, checking that it has degree
    /// exactly `m` and is irreducible over GF(2).
    pub fn with_modulus(m: u32, modulus: u32) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) {
            return Err(Error::Config(format!(
                "extension degree {m} outside supported range {MIN_DEGREE}..={MAX_DEGREE}"
            )));
        }
        if gf2_degree(modulus) != Some(m) {
            return Err(Error::Config(format!(
                "modulus {modulus:#x} does not have degree {m}"
            )));
        }
        if !is_irreducible(modulus) {
            return Err(Error::Config(format!(
                "modulus {modulus:#x} is reducible over GF(2)"
            )));
        }
        Ok(FieldParams {
            m,
            modulus,
            q: 1 << m,
        })
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Field order `2^m`.
    #[inline]
    pub fn q(&self) -> usize {
        self.q as usize
    }

    /// Checked conversion from a bit pattern.
    pub fn element(&self, bits: u64) -> Result<Fe> {
        if bits >= self.q as u64 {
            return Err(Error::Domain(format!(
                "value {bits} is not an element of GF(2^{}) (must be < {})",
                self.m, self.q
            )));
        }
        Ok(Fe(bits as u32))
    }

    #[inline]
    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.q
    }

    /// `omega_i`, the i-th element in the canonical enumeration.
    pub fn enumerate(&self, i: usize) -> Result<Fe> {
        if i >= self.q() {
            return Err(Error::Index {
                index: i,
                bound: self.q(),
            });
        }
        Ok(Fe(i as u32))
    }

    /// Unchecked `omega_i` for hot loops; caller guarantees `i < q`.
    #[inline]
    pub(crate) fn omega(&self, i: usize) -> Fe {
        debug_assert!(i < self.q());
        Fe(i as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let mut x = a.0;
        let mut y = b.0;
        let mut acc = 0u32;
        for _ in 0..self.m {
            if y & 1 != 0 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & self.q != 0 {
                x ^= self.modulus;
            }
        }
        Fe(acc)
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, computed as `a^(q-2)`.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::Domain("zero has no multiplicative inverse".into()));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}

/// Degree of a GF(2)[x] polynomial encoded as a bit mask.
fn gf2_degree(p: u32) -> Option<u32> {
    (p != 0).then(|| 31 - p.leading_zeros())
}

fn gf2_rem(mut a: u32, b: u32) -> u32 {
    let db = gf2_degree(b).expect("nonzero divisor");
    while let Some(da) = gf2_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division with every polynomial of
/// degree 1..=deg/2.
pub fn is_irreducible(p: u32) -> bool {
    let Some(d) = gf2_degree(p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for div_deg in 1..=d / 2 {
        for low in 0..(1u32 << div_deg) {
            if gf2_rem(p, (1 << div_deg) | low) == 0 {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(m: u32) -> u32 {
    ((1u32 << m)..(2u32 << m))
        .find(|&p| is_irreducible(p))
        .expect("an irreducible polynomial exists in every degree")
}

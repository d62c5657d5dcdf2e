//! Dense polynomials over GF(2^m).
//!
//! The stored length is meaningful: a polynomial of length `l` is viewed as
//! an element of `F[x]_l` even when its top coefficients are zero. All
//! routines are value-oblivious, so their operation counts depend on
//! lengths only.

use crate::counts::{Arith, OpSink};
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldParams,
    coeffs: Vec<Fe>,
}

impl Polynomial {
    pub fn new(field: FieldParams, coeffs: Vec<Fe>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(**c)) {
            return Err(Error::Domain(format!(
                "coefficient {bad} is not an element of GF(2^{})",
                field.m()
            )));
        }
        Ok(Polynomial { field, coeffs })
    }

    pub fn zero(field: FieldParams, len: usize) -> Self {
        Polynomial {
            field,
            coeffs: vec![Fe::ZERO; len],
        }
    }

    pub fn constant(field: FieldParams, c: Fe) -> Self {
        Polynomial {
            field,
            coeffs: vec![c],
        }
    }

    /// `coeff * x^k`, stored with length `k + 1`.
    pub fn monomial(field: FieldParams, k: usize, coeff: Fe) -> Self {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = coeff;
        Polynomial { field, coeffs }
    }

    /// `x + w`
    pub fn linear(field: FieldParams, w: Fe) -> Self {
        Polynomial {
            field,
            coeffs: vec![w, Fe::ONE],
        }
    }

    pub fn field(&self) -> &FieldParams {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Copy with trailing zeros removed.
    pub fn trimmed(&self) -> Self {
        let len = self.degree().map_or(0, |d| d + 1);
        Polynomial {
            field: self.field,
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    /// Copy zero-padded (or truncated) to `len` coefficients.
    pub fn resized(&self, len: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, Fe::ZERO);
        Polynomial {
            field: self.field,
            coeffs,
        }
    }

    /// Equality as polynomials, ignoring stored length.
    pub fn same_as(&self, other: &Polynomial) -> bool {
        self.field == other.field && self.trimmed().coeffs == other.trimmed().coeffs
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Domain(format!(
                "polynomials over different fields (GF(2^{}) vs GF(2^{}))",
                self.field.m(),
                other.field.m()
            )));
        }
        Ok(())
    }

    /// Coefficient-wise sum; length is the longer of the two.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let len = self.len().max(other.len());
        let coeffs = (0..len)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial {
            field: self.field,
            coeffs,
        })
    }

    pub fn scale(&self, s: Fe) -> Polynomial {
        Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(|&c| self.field.mul(c, s)).collect(),
        }
    }

    /// Schoolbook product of length `len(P) + len(Q) - 1`.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        if self.is_empty() || other.is_empty() {
            return Ok(Polynomial::zero(self.field, 0));
        }
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.len() + other.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Polynomial {
            field: self.field,
            coeffs: out,
        })
    }

    /// `self^e`, computed by repeated multiplication.
    pub fn pow(&self, e: usize) -> Polynomial {
        (0..e).fold(Polynomial::constant(self.field, Fe::ONE), |acc, _| {
            acc.mul(self).expect("same field")
        })
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg remainder < deg divisor`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::Domain("division by the zero polynomial".into()));
        };
        let f = &self.field;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; self.len().saturating_sub(dd).max(1)];
        for k in (dd..self.len()).rev() {
            let t = f.mul(rem[k], lead_inv);
            quot[k - dd] = t;
            for (j, &d) in divisor.coeffs[..=dd].iter().enumerate() {
                rem[k - dd + j] = f.add(rem[k - dd + j], f.mul(t, d));
            }
        }
        rem.truncate(dd.max(1));
        rem.resize(dd.max(1), Fe::ZERO);
        Ok((
            Polynomial {
                field: self.field,
                coeffs: quot,
            },
            Polynomial {
                field: self.field,
                coeffs: rem,
            },
        ))
    }

    /// Horner evaluation: `len - 1` multiplications and additions.
    pub fn eval(&self, w: Fe) -> Fe {
        horner(&mut Arith::plain(self.field), &self.coeffs, w)
    }

    /// Coefficients of `P(x + w)`, same length as `P`.
    pub fn taylor_shift(&self, w: Fe) -> Polynomial {
        self.taylor_shift_truncated(w, self.len())
    }

    /// First `keep` coefficients of `P(x + w)` (zero-padded if `keep`
    /// exceeds the length). Reducing modulo `x^keep` at each Horner step
    /// keeps the cost at `O(len * keep)`.
    pub fn taylor_shift_truncated(&self, w: Fe, keep: usize) -> Polynomial {
        let f = &self.field;
        let mut acc = vec![Fe::ZERO; keep];
        if keep > 0 {
            for &c in self.coeffs.iter().rev() {
                // acc <- acc * (x + w) + c  (mod x^keep)
                for t in (1..keep).rev() {
                    acc[t] = f.add(acc[t - 1], f.mul(w, acc[t]));
                }
                acc[0] = f.add(f.mul(w, acc[0]), c);
            }
        }
        Polynomial {
            field: self.field,
            coeffs: acc,
        }
    }
}

/// Horner's rule over a coefficient slice, counted through `ctx`.
pub(crate) fn horner<S: OpSink>(ctx: &mut Arith<S>, coeffs: &[Fe], w: Fe) -> Fe {
    let Some((&top, rest)) = coeffs.split_last() else {
        return Fe::ZERO;
    };
    rest.iter().rev().fold(top, |acc, &c| {
        let t = ctx.mul(acc, w);
        ctx.add(t, c)
    })
}

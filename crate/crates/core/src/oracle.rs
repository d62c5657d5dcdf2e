//! Brute-force reference paths for Hasse derivatives and the Hermite
//! problems. These are independent of the fast transforms and serve as
//! their correctness oracles; they make no attempt at efficiency beyond
//! staying polynomial in the length.

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldParams};
use crate::poly::Polynomial;

/// `binom(k, i) mod 2`, by Lucas' theorem: odd iff every set bit of `i` is
/// also set in `k`.
#[inline]
pub fn binom_is_odd(k: usize, i: usize) -> bool {
    k & i == i
}

/// The `i`-th Hasse derivative. Output length is `max(len - i, 1)`.
pub fn hasse_derivative(p: &Polynomial, i: usize) -> Polynomial {
    let len = p.len().saturating_sub(i).max(1);
    let mut out = vec![Fe::ZERO; len];
    for k in i..p.len() {
        if binom_is_odd(k, i) {
            out[k - i] = p.coeffs()[k];
        }
    }
    Polynomial::new(*p.field(), out).expect("coefficients come from p")
}

fn check_len(field: &FieldParams, p: &Polynomial, len: usize) -> Result<()> {
    if len == 0 {
        return Err(Error::Domain("Hermite length must be at least 1".into()));
    }
    if p.field() != field {
        return Err(Error::Domain("polynomial is over a different field".into()));
    }
    if p.len() > len {
        return Err(Error::Domain(format!(
            "polynomial has {} coefficients, more than the length {len}",
            p.len()
        )));
    }
    Ok(())
}

/// `h[i] = (D^(i div q) P)(omega_(i mod q))` for `i < len`, read off the
/// Taylor expansion of `P` at each point.
pub fn hermite_eval_naive(p: &Polynomial, len: usize) -> Result<Vec<Fe>> {
    let field = *p.field();
    check_len(&field, p, len)?;
    let q = field.q();
    let mut h = vec![Fe::ZERO; len];
    for j in 0..q.min(len) {
        // derivative orders needed at omega_j
        let orders = (len - j).div_ceil(q);
        let shifted = p.taylor_shift_truncated(field.omega(j), orders);
        for (s, &v) in shifted.coeffs().iter().enumerate() {
            h[s * q + j] = v;
        }
    }
    Ok(h)
}

/// The `len x len` matrix `M` with `M f = h` for the length-`len` Hermite
/// problem: `M[i][k] = binom(k, d) * omega^(k - d)` where `d = i div q`,
/// `omega = omega_(i mod q)`.
pub fn hermite_matrix(field: &FieldParams, len: usize) -> Vec<Vec<Fe>> {
    let q = field.q();
    (0..len)
        .map(|i| {
            let d = i / q;
            let w = field.omega(i % q);
            let mut row = vec![Fe::ZERO; len];
            let mut pw = Fe::ONE;
            for (k, slot) in row.iter_mut().enumerate().skip(d) {
                if binom_is_odd(k, d) {
                    *slot = pw;
                }
                pw = field.mul(pw, w);
            }
            row
        })
        .collect()
}

/// Unique `P` in `F[x]_len` with `hermite_eval_naive(P, len) = h`.
pub fn hermite_interp_naive(h: &[Fe], len: usize, field: &FieldParams) -> Result<Polynomial> {
    let mut out = hermite_interp_naive_many(std::slice::from_ref(&h.to_vec()), len, field)?;
    Ok(out.pop().expect("one right-hand side"))
}

/// Solves several interpolation instances of the same length with a single
/// elimination over the shared matrix.
pub fn hermite_interp_naive_many(
    hs: &[Vec<Fe>],
    len: usize,
    field: &FieldParams,
) -> Result<Vec<Polynomial>> {
    if len == 0 {
        return Err(Error::Domain("Hermite length must be at least 1".into()));
    }
    for h in hs {
        if h.len() != len {
            return Err(Error::Domain(format!(
                "expected {len} Hermite values, got {}",
                h.len()
            )));
        }
        if let Some(bad) = h.iter().find(|v| !field.contains(**v)) {
            return Err(Error::Domain(format!("value {bad} is not a field element")));
        }
    }
    let rhs = hs.len();
    let width = len + rhs;
    let mut a: Vec<Fe> = Vec::with_capacity(len * width);
    for (i, row) in hermite_matrix(field, len).into_iter().enumerate() {
        a.extend(row);
        a.extend(hs.iter().map(|h| h[i]));
    }
    let f = field;

    // Forward elimination with row swaps on any nonzero pivot.
    for col in 0..len {
        let pivot = (col..len)
            .find(|&r| !a[r * width + col].is_zero())
            .ok_or_else(|| Error::Internal(format!("Hermite matrix singular at column {col}")))?;
        if pivot != col {
            for k in 0..width {
                a.swap(pivot * width + k, col * width + k);
            }
        }
        let inv = f.inv(a[col * width + col])?;
        for k in col..width {
            a[col * width + k] = f.mul(a[col * width + k], inv);
        }
        let (top, bottom) = a.split_at_mut((col + 1) * width);
        let prow = &top[col * width..];
        for row in bottom.chunks_exact_mut(width) {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            for k in col..width {
                row[k] = f.add(row[k], f.mul(factor, prow[k]));
            }
        }
    }

    // Back substitution on the unit upper-triangular system.
    for col in (0..len).rev() {
        let (top, bottom) = a.split_at_mut(col * width);
        let prow = &bottom[..width];
        for row in top.chunks_exact_mut(width) {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            row[col] = Fe::ZERO;
            for k in len..width {
                row[k] = f.add(row[k], f.mul(factor, prow[k]));
            }
        }
    }

    (0..rhs)
        .map(|s| Polynomial::new(*field, (0..len).map(|i| a[i * width + len + s]).collect()))
        .collect()
}

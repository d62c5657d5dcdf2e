//! Standard multipoint evaluation and interpolation over all `q` field
//! points: the base cases the Hermite recursions bottom out in.
//!
//! Both routines are value-oblivious, so a base call with truncation `c`
//! always costs the same number of operations.

use crate::counts::{Arith, Kind, OpSink};
use crate::error::Result;
use crate::gf2m::Fe;
use crate::poly::horner;

/// `a[i] <- F(omega_i)` for `i < c`, where `a` holds the `q` coefficients of
/// `F`. Entries `i >= c` are left untouched. Horner per point:
/// `c (q - 1)` multiplications and additions.
pub(crate) fn evaluate<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], c: usize) {
    let q = ctx.field().q();
    debug_assert_eq!(a.len(), q);
    debug_assert!((1..=q).contains(&c));
    ctx.enter_base();
    let coeffs = a.to_vec();
    for (i, slot) in a[..c].iter_mut().enumerate() {
        let w = ctx.field().omega(i);
        *slot = horner(ctx, &coeffs, w);
    }
    ctx.exit_base(Kind::Eval, c);
}

/// Recovers all coefficients of `F` in `F[x]_q` from `a[i] = F(omega_i)`
/// (`i < c`) and `a[i] = f_i` (`i >= c`).
///
/// The values of the high part `H = sum_{k >= c} f_k x^k` are stripped off
/// first; the remaining values determine the low part, found by Newton
/// interpolation through `omega_0, ..., omega_(c-1)`.
pub(crate) fn interpolate<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], c: usize) -> Result<()> {
    let q = ctx.field().q();
    debug_assert_eq!(a.len(), q);
    debug_assert!((1..=q).contains(&c));
    ctx.enter_base();

    if c < q {
        let (low, high) = a.split_at_mut(c);
        for (i, v) in low.iter_mut().enumerate() {
            let w = ctx.field().omega(i);
            // H(w) = w^c * sum_k f_(c+k) w^k
            let mut acc = horner(ctx, high, w);
            for _ in 0..c {
                acc = ctx.mul(acc, w);
            }
            *v = ctx.add(*v, acc);
        }
    }

    // Divided differences, in place: a[i] <- [omega_0, ..., omega_i] v.
    for j in 1..c {
        for i in (j..c).rev() {
            let num = ctx.add(a[i], a[i - 1]);
            let (wi, wj) = (ctx.field().omega(i), ctx.field().omega(i - j));
            let den = ctx.add(wi, wj);
            let inv = ctx.inv(den)?;
            a[i] = ctx.mul(num, inv);
        }
    }

    // Newton form to monomial basis:
    // P <- d_(c-1); then P <- P (x + omega_k) + d_k for k = c-2, ..., 0.
    let mut p = vec![Fe::ZERO; c];
    p[0] = a[c - 1];
    for (deg, k) in (0..c - 1).rev().enumerate() {
        let w = ctx.field().omega(k);
        p[deg + 1] = p[deg];
        for t in (1..=deg).rev() {
            let s = ctx.mul(w, p[t]);
            p[t] = ctx.add(p[t - 1], s);
        }
        let s = ctx.mul(w, p[0]);
        p[0] = ctx.add(s, a[k]);
    }
    a[..c].copy_from_slice(&p);

    ctx.exit_base(Kind::Interp, c);
    Ok(())
}

//! Divide-and-conquer Hermite evaluation and interpolation over GF(2^m).
//!
//! A length `2^n q` instance is split through
//! `F = F_1 (x^q + x)^(2^(n-1)) + F_0`: the first `2^(n-1) q` outputs
//! depend on `F_0` alone and the rest are the outputs of
//! `F_1 + D^(2^(n-1)) F_0`. The split and its inverse need only XORs, so
//! every multiplication happens in the `q`-point base cases.
//!
//! Everything operates in place on a buffer of exactly `2^n q` elements.
//! Output index `i` stands for derivative order `i div q` at `omega_(i mod q)`.
//! The truncation parameter `c` restricts the work to the first `c` outputs
//! (evaluation) or the first `c` inputs being values (interpolation).

mod base;

use crate::counts::{Arith, OpSink};
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldParams};
use crate::poly::Polynomial;

/// `floor(i / j)`
pub fn bdiv(i: usize, j: usize) -> Result<usize> {
    if j == 0 {
        return Err(Error::Domain("division by zero".into()));
    }
    Ok(i / j)
}

/// `i - floor(i / j) j`
pub fn bmod(i: usize, j: usize) -> Result<usize> {
    if j == 0 {
        return Err(Error::Domain("division by zero".into()));
    }
    Ok(i % j)
}

/// `i - (ceil(i / j) - 1) j`, taking values in `1..=j`.
pub fn modstar(i: usize, j: usize) -> Result<usize> {
    if j == 0 {
        return Err(Error::Domain("division by zero".into()));
    }
    if i == 0 {
        return Err(Error::Domain("mod* is defined for i >= 1".into()));
    }
    Ok(modstar_unchecked(i, j))
}

#[inline]
pub(crate) fn modstar_unchecked(i: usize, j: usize) -> usize {
    i - (i.div_ceil(j) - 1) * j
}

/// Recursion depth for a length-`len` problem: `ceil(log2(ceil(len / q)))`.
pub fn depth_for_len(q: usize, len: usize) -> u32 {
    crate::counts::ceil_log2(len.div_ceil(q).max(1))
}

/// Working vector of `2^n q` field elements shared by both transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteBuffer {
    field: FieldParams,
    n: u32,
    a: Vec<Fe>,
}

impl HermiteBuffer {
    pub fn zeroed(field: FieldParams, n: u32) -> Self {
        HermiteBuffer {
            field,
            n,
            a: vec![Fe::ZERO; field.q() << n],
        }
    }

    /// Wraps `data`, which must hold exactly `2^n q` field elements.
    pub fn from_vec(field: FieldParams, n: u32, data: Vec<Fe>) -> Result<Self> {
        let want = field.q() << n;
        if data.len() != want {
            return Err(Error::Domain(format!(
                "buffer of depth {n} over GF(2^{}) needs {want} entries, got {}",
                field.m(),
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|v| !field.contains(**v)) {
            return Err(Error::Domain(format!("{bad} is not a field element")));
        }
        Ok(HermiteBuffer { field, n, a: data })
    }

    /// Copies `prefix` into a zeroed buffer of depth `n`.
    pub fn padded(field: FieldParams, n: u32, prefix: &[Fe]) -> Result<Self> {
        let mut data = prefix.to_vec();
        let want = field.q() << n;
        if data.len() > want {
            return Err(Error::Domain(format!(
                "{} entries do not fit a buffer of {want}",
                data.len()
            )));
        }
        data.resize(want, Fe::ZERO);
        Self::from_vec(field, n, data)
    }

    pub fn field(&self) -> &FieldParams {
        &self.field
    }

    pub fn depth(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn as_slice(&self) -> &[Fe] {
        &self.a
    }

    pub fn as_mut_slice(&mut self) -> &mut [Fe] {
        &mut self.a
    }

    pub fn into_vec(self) -> Vec<Fe> {
        self.a
    }

    fn check_ctx<S: OpSink>(&self, ctx: &Arith<S>) -> Result<()> {
        if *ctx.field() != self.field {
            return Err(Error::Domain(
                "arithmetic context and buffer use different fields".into(),
            ));
        }
        Ok(())
    }

    fn check_c(&self, c: usize) -> Result<()> {
        if !(1..=self.len()).contains(&c) {
            return Err(Error::Domain(format!(
                "truncation c = {c} outside 1..={}",
                self.len()
            )));
        }
        Ok(())
    }
}

/// Standard evaluation on a single block (`n = 0`).
pub fn evaluate_base<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    if buf.n != 0 {
        return Err(Error::Domain(
            "base evaluation needs a depth-0 buffer".into(),
        ));
    }
    buf.check_c(c)?;
    base::evaluate(ctx, &mut buf.a, c);
    Ok(())
}

/// Standard interpolation on a single block (`n = 0`).
pub fn interpolate_base<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    if buf.n != 0 {
        return Err(Error::Domain(
            "base interpolation needs a depth-0 buffer".into(),
        ));
    }
    buf.check_c(c)?;
    base::interpolate(ctx, &mut buf.a, c)
}

/// Computes the coefficients of `F_0` in the low half, skipping indices
/// below `c`. An involution for fixed `c`.
pub fn prepare_left<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    if buf.n == 0 {
        return Err(Error::Domain("prepare_left needs depth >= 1".into()));
    }
    if c > buf.len() {
        return Err(Error::Domain(format!("c = {c} exceeds {}", buf.len())));
    }
    prepare_left_raw(ctx, &mut buf.a, buf.n, c);
    Ok(())
}

/// Completes the right half to the coefficients of `F_1 + D^(2^(n-1)) F_0`
/// at indices `>= c`, given `F_0` in the low half. Requires
/// `2^(n-1) q < c <= 2^n q`.
pub fn prepare_right<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    if buf.n == 0 {
        return Err(Error::Domain("prepare_right needs depth >= 1".into()));
    }
    let half = buf.len() / 2;
    if !(half + 1..=buf.len()).contains(&c) {
        return Err(Error::Domain(format!(
            "prepare_right needs {} <= c <= {}, got {c}",
            half + 1,
            buf.len()
        )));
    }
    prepare_right_raw(ctx, &mut buf.a, buf.n, c);
    Ok(())
}

/// Overwrites `a[i]` with `(D^(i div q) F)(omega_(i mod q))` for `i < c`,
/// where the buffer initially holds the coefficients of `F`. Entries at
/// `i >= c` are left holding intermediates.
pub fn hermite_evaluate<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    buf.check_c(c)?;
    evaluate_rec(ctx, &mut buf.a, buf.n, c);
    Ok(())
}

/// Inverse of [`hermite_evaluate`]: on entry `a[i]` holds Hermite values for
/// `i < c` and coefficients `f_i` for `i >= c`; on exit every `a[i] = f_i`.
pub fn hermite_interpolate<S: OpSink>(
    ctx: &mut Arith<S>,
    buf: &mut HermiteBuffer,
    c: usize,
) -> Result<()> {
    buf.check_ctx(ctx)?;
    buf.check_c(c)?;
    interpolate_rec(ctx, &mut buf.a, buf.n, c)
}

/// Length-`len` Hermite evaluation of `p`, by zero padding to `2^n q` with
/// `n = ceil(log2(ceil(len / q)))` and truncating at `c = len`.
pub fn hermite_evaluate_len<S: OpSink>(
    ctx: &mut Arith<S>,
    p: &Polynomial,
    len: usize,
) -> Result<Vec<Fe>> {
    if p.field() != ctx.field() {
        return Err(Error::Domain("polynomial is over a different field".into()));
    }
    evaluate_slice(ctx, p.coeffs(), len)
}

/// Length-`len` Hermite interpolation: the unique `F` in `F[x]_len` whose
/// Hermite values are `h`.
pub fn hermite_interpolate_len<S: OpSink>(
    ctx: &mut Arith<S>,
    h: &[Fe],
    len: usize,
) -> Result<Polynomial> {
    let field = *ctx.field();
    let coeffs = interpolate_slice(ctx, h, len)?;
    Polynomial::new(field, coeffs)
}

pub(crate) fn evaluate_slice<S: OpSink>(
    ctx: &mut Arith<S>,
    coeffs: &[Fe],
    len: usize,
) -> Result<Vec<Fe>> {
    if len == 0 {
        return Err(Error::Domain("Hermite length must be at least 1".into()));
    }
    if coeffs.len() > len {
        return Err(Error::Domain(format!(
            "{} coefficients exceed the length {len}",
            coeffs.len()
        )));
    }
    let field = *ctx.field();
    let mut buf = HermiteBuffer::padded(field, depth_for_len(field.q(), len), coeffs)?;
    hermite_evaluate(ctx, &mut buf, len)?;
    let mut out = buf.into_vec();
    out.truncate(len);
    Ok(out)
}

pub(crate) fn interpolate_slice<S: OpSink>(
    ctx: &mut Arith<S>,
    h: &[Fe],
    len: usize,
) -> Result<Vec<Fe>> {
    if len == 0 {
        return Err(Error::Domain("Hermite length must be at least 1".into()));
    }
    if h.len() != len {
        return Err(Error::Domain(format!(
            "expected {len} Hermite values, got {}",
            h.len()
        )));
    }
    let field = *ctx.field();
    let mut buf = HermiteBuffer::padded(field, depth_for_len(field.q(), len), h)?;
    hermite_interpolate(ctx, &mut buf, len)?;
    let mut out = buf.into_vec();
    if out[len..].iter().any(|v| !v.is_zero()) {
        return Err(Error::Internal(
            "padding coefficients did not return to zero".into(),
        ));
    }
    out.truncate(len);
    Ok(out)
}

/// `D^(2^(n-1)) F` for `F` in `F[x]_(2^(n-1) q)`, computed by the same index
/// shuffle the transforms use (no multiplications, no binomials).
pub fn half_order_derivative(field: FieldParams, f: &[Fe], n: u32) -> Result<Vec<Fe>> {
    if n == 0 {
        return Err(Error::Domain("half_order_derivative needs n >= 1".into()));
    }
    let half = field.q() << (n - 1);
    if f.len() > half {
        return Err(Error::Domain(format!(
            "{} coefficients exceed {half}",
            f.len()
        )));
    }
    let mut buf = HermiteBuffer::padded(field, n, f)?;
    add_half_derivative(&mut Arith::plain(field), &mut buf.a, n);
    Ok(buf.a.split_off(half))
}

/// Shuffle step: `a[2^n i + j] += a[2^n i + j - (q-1) 2^(n-1)]` for
/// `i in q/2..q`, `j < 2^(n-1)`. Adds `D^(2^(n-1)) F_0` (low half) into the
/// high half.
fn add_half_derivative<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], n: u32) {
    let q = ctx.field().q();
    let p = 1usize << (n - 1);
    let back = (q - 1) * p;
    for i in q / 2..q {
        for j in 0..p {
            let t = (i << n) + j;
            a[t] = ctx.add(a[t], a[t - back]);
        }
    }
}

pub(crate) fn prepare_left_raw<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], n: u32, c: usize) {
    let q = ctx.field().q();
    let p = 1usize << (n - 1);
    let half = p * q;
    for i in c.max(p)..half {
        a[i] = ctx.add(a[i], a[half - p + i]);
    }
    for i in c.max(p)..2 * p {
        a[i] = ctx.add(a[i], a[2 * half - 2 * p + i]);
    }
}

pub(crate) fn prepare_right_raw<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], n: u32, c: usize) {
    let q = ctx.field().q();
    let p = 1usize << (n - 1);
    let half = p * q;
    debug_assert!(c > half);
    for i in (c..half + p).rev() {
        a[i] = ctx.add(a[i], a[half - p + i]);
    }
    let t = c >> n;
    let r = (c & ((1 << n) - 1)).min(p);
    let back = (q - 1) * p;
    for j in 0..r {
        for i in t + 1..q {
            let k = (i << n) + j;
            a[k] = ctx.add(a[k], a[k - back]);
        }
    }
    for j in r..p {
        for i in t..q {
            let k = (i << n) + j;
            a[k] = ctx.add(a[k], a[k - back]);
        }
    }
}

fn evaluate_rec<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], n: u32, c: usize) {
    if n == 0 {
        base::evaluate(ctx, a, c);
        return;
    }
    let q = ctx.field().q();
    let p = 1usize << (n - 1);
    let half = p * q;
    if c > half {
        // Must run downwards: for i < half the source index lies in
        // [half, half + p) whenever i < 2p, and those entries are
        // themselves updated earlier in this loop.
        for i in (p..half + p).rev() {
            a[i] = ctx.add(a[i], a[half - p + i]);
        }
        add_half_derivative(ctx, a, n);
        let (lo, hi) = a.split_at_mut(half);
        evaluate_rec(ctx, lo, n - 1, half);
        evaluate_rec(ctx, hi, n - 1, c - half);
    } else {
        prepare_left_raw(ctx, a, n, 0);
        evaluate_rec(ctx, &mut a[..half], n - 1, c);
    }
}

fn interpolate_rec<S: OpSink>(ctx: &mut Arith<S>, a: &mut [Fe], n: u32, c: usize) -> Result<()> {
    if n == 0 {
        return base::interpolate(ctx, a, c);
    }
    let q = ctx.field().q();
    let p = 1usize << (n - 1);
    let half = p * q;
    if c > half {
        interpolate_rec(ctx, &mut a[..half], n - 1, half)?;
        prepare_right_raw(ctx, a, n, c);
        interpolate_rec(ctx, &mut a[half..], n - 1, c - half)?;
        add_half_derivative(ctx, a, n);
        // Upwards: undoes the evaluation loop in reverse order.
        for i in p..half + p {
            a[i] = ctx.add(a[i], a[half - p + i]);
        }
    } else {
        prepare_left_raw(ctx, a, n, c);
        interpolate_rec(ctx, &mut a[..half], n - 1, c)?;
        prepare_left_raw(ctx, a, n, 0);
    }
    Ok(())
}

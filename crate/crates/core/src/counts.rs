//! Field-operation counting and the closed-form cost predictions for the
//! Hermite transforms.
//!
//! Every field operation performed by the transforms goes through an
//! [`Arith`] context. The context forwards events to an [`OpSink`]: either
//! [`NoCount`], which compiles away, or [`OpCounts`], which tallies
//! additions, multiplications and inversions and keeps a record of every
//! base-case call.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gf2m::{Fe, FieldParams};
use crate::hermite::{self, modstar_unchecked};

/// Which of the two transforms (or base cases) an event belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Eval,
    Interp,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Eval => "eval",
            Kind::Interp => "interp",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "eval" => Ok(Kind::Eval),
            "interp" => Ok(Kind::Interp),
            other => Err(format!(
                "unknown transform kind {other:?} (expected eval|interp)"
            )),
        }
    }
}

/// Receiver of operation events.
pub trait OpSink {
    fn on_add(&mut self);
    fn on_mul(&mut self);
    fn on_inv(&mut self);
    fn enter_base(&mut self);
    fn exit_base(&mut self, kind: Kind, c: usize);
}

/// Sink that discards every event.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCount;

impl OpSink for NoCount {
    #[inline(always)]
    fn on_add(&mut self) {}
    #[inline(always)]
    fn on_mul(&mut self) {}
    #[inline(always)]
    fn on_inv(&mut self) {}
    #[inline(always)]
    fn enter_base(&mut self) {}
    #[inline(always)]
    fn exit_base(&mut self, _: Kind, _: usize) {}
}

/// One invocation of a base-case evaluate/interpolate, with the operations
/// it performed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCall {
    pub kind: Kind,
    pub c: usize,
    pub adds: u64,
    pub muls: u64,
    pub invs: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub adds: u64,
    pub muls: u64,
    pub invs: u64,
    pub base_calls: Vec<BaseCall>,
    #[serde(skip)]
    open: Option<(u64, u64, u64)>,
}

impl OpCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn base_muls(&self) -> u64 {
        self.base_calls.iter().map(|b| b.muls).sum()
    }

    pub fn base_adds(&self) -> u64 {
        self.base_calls.iter().map(|b| b.adds).sum()
    }

    pub fn base_invs(&self) -> u64 {
        self.base_calls.iter().map(|b| b.invs).sum()
    }

    /// Multiplications performed outside any base call.
    pub fn reduction_muls(&self) -> u64 {
        self.muls - self.base_muls()
    }

    pub fn reduction_invs(&self) -> u64 {
        self.invs - self.base_invs()
    }

    /// `c` values of the base calls, in call order.
    pub fn base_sizes(&self) -> Vec<usize> {
        self.base_calls.iter().map(|b| b.c).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("OpCounts always serializes")
    }
}

impl OpSink for OpCounts {
    #[inline]
    fn on_add(&mut self) {
        self.adds += 1;
    }
    #[inline]
    fn on_mul(&mut self) {
        self.muls += 1;
    }
    #[inline]
    fn on_inv(&mut self) {
        self.invs += 1;
    }

    fn enter_base(&mut self) {
        assert!(self.open.is_none(), "base calls do not nest");
        self.open = Some((self.adds, self.muls, self.invs));
    }

    fn exit_base(&mut self, kind: Kind, c: usize) {
        let (a, m, i) = self.open.take().expect("exit_base without enter_base");
        self.base_calls.push(BaseCall {
            kind,
            c,
            adds: self.adds - a,
            muls: self.muls - m,
            invs: self.invs - i,
        });
    }
}

impl<S: OpSink + ?Sized> OpSink for &mut S {
    #[inline]
    fn on_add(&mut self) {
        (**self).on_add()
    }
    #[inline]
    fn on_mul(&mut self) {
        (**self).on_mul()
    }
    #[inline]
    fn on_inv(&mut self) {
        (**self).on_inv()
    }
    fn enter_base(&mut self) {
        (**self).enter_base()
    }
    fn exit_base(&mut self, kind: Kind, c: usize) {
        (**self).exit_base(kind, c)
    }
}

/// Arithmetic context: a field plus a sink that observes every operation.
#[derive(Debug)]
pub struct Arith<S: OpSink = NoCount> {
    field: FieldParams,
    sink: S,
}

impl Arith<NoCount> {
    pub fn plain(field: FieldParams) -> Self {
        Arith {
            field,
            sink: NoCount,
        }
    }
}

impl Arith<OpCounts> {
    pub fn counting(field: FieldParams) -> Self {
        Arith {
            field,
            sink: OpCounts::new(),
        }
    }
}

impl<S: OpSink> Arith<S> {
    pub fn new(field: FieldParams, sink: S) -> Self {
        Arith { field, sink }
    }

    #[inline]
    pub fn field(&self) -> &FieldParams {
        &self.field
    }

    pub fn sink(&self) -> &S {
        &self.sink
    }

    pub fn into_sink(self) -> S {
        self.sink
    }

    #[inline]
    pub fn add(&mut self, a: Fe, b: Fe) -> Fe {
        self.sink.on_add();
        self.field.add(a, b)
    }

    #[inline]
    pub fn mul(&mut self, a: Fe, b: Fe) -> Fe {
        self.sink.on_mul();
        self.field.mul(a, b)
    }

    pub fn inv(&mut self, a: Fe) -> Result<Fe> {
        self.sink.on_inv();
        self.field.inv(a)
    }

    pub(crate) fn enter_base(&mut self) {
        self.sink.enter_base();
    }

    pub(crate) fn exit_base(&mut self, kind: Kind, c: usize) {
        self.sink.exit_base(kind, c);
    }
}

/// Runs a length-`len` transform with a fresh counting context.
///
/// For [`Kind::Eval`] `input` holds at most `len` coefficients; for
/// [`Kind::Interp`] it holds exactly `len` Hermite values.
pub fn counted_run(
    field: FieldParams,
    kind: Kind,
    len: usize,
    input: &[Fe],
) -> Result<(Vec<Fe>, OpCounts)> {
    let mut ctx = Arith::counting(field);
    let out = match kind {
        Kind::Eval => hermite::evaluate_slice(&mut ctx, input, len)?,
        Kind::Interp => hermite::interpolate_slice(&mut ctx, input, len)?,
    };
    Ok((out, ctx.into_sink()))
}

#[inline]
fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `ceil(log2(k))` for `k >= 1`.
pub fn ceil_log2(k: usize) -> u32 {
    assert!(k >= 1);
    usize::BITS - (k - 1).leading_zeros()
}

/// Exact multiplication count of either transform in terms of the base
/// case's count `m0(c)`:
/// `M_n(c) = m0(q) * (ceil(c/q) - 1) + m0(c mod* q)`.
pub fn predicted_mul_count(m0: impl Fn(usize) -> u64, q: usize, n: u32, c: usize) -> u64 {
    debug_assert!(c >= 1 && c <= q << n);
    let blocks = ceil_div(c, q) as u64;
    m0(q) * (blocks - 1) + m0(modstar_unchecked(c, q))
}

/// Upper bound on the additions performed by a transform with recursion
/// depth `n` and truncation `c`, given the base case's additions for a full
/// block (`a0_full = A_0(q)`) and for the trailing block
/// (`a0_rem = A_0(c mod* q)`). Fractional terms are evaluated exactly and the
/// result is rounded up.
pub fn predicted_add_bound(
    a0_full: u64,
    a0_rem: u64,
    q: usize,
    n: u32,
    c: usize,
    kind: Kind,
) -> i64 {
    debug_assert!(c >= 1 && c <= q << n);
    let r = |x: i64| Ratio::from_integer(x);
    let blocks = ceil_div(c, q) as i64;
    let lg = ceil_log2(blocks as usize) as i64;
    let q_ = q as i64;
    let pow = 1i64 << n;
    let base = r(a0_full as i64 * (blocks - 1) + a0_rem as i64);
    let bound = match kind {
        Kind::Eval => {
            base + (Ratio::new(3 * lg, 4) - Ratio::new(1, 4)) * r((blocks - 1) * q_)
                + r((pow - 1) * q_)
        }
        Kind::Interp => {
            base + (Ratio::new(7 * lg, 4) - r(n as i64) - Ratio::new(3, 4)) * r((blocks - 1) * q_)
                + r((pow - 1) * (2 * q_ + 1))
        }
    };
    bound.ceil().to_integer()
}

/// Exact addition count at full length `c = 2^n q`:
/// `2^n (A_0(q) + (3/4) n q)`, or `None` when the closed form is not an
/// integer.
pub fn full_length_adds(a0_full: u64, q: usize, n: u32) -> Option<u64> {
    let v = Ratio::from_integer(1u64 << n)
        * (Ratio::from_integer(a0_full) + Ratio::new(3 * n as u64 * q as u64, 4));
    v.is_integer().then(|| v.to_integer())
}

/// Same quantity through the recurrence `A_k = 2 A_{k-1} + (3/4) 2^k q`,
/// in integers.
pub fn full_length_adds_recurrence(a0_full: u64, q: usize, n: u32) -> u64 {
    (1..=n).fold(a0_full, |prev, k| {
        let layer = 3 * (1u64 << k) * q as u64;
        debug_assert_eq!(layer % 4, 0);
        2 * prev + layer / 4
    })
}

/// Outcome of checking one counted run against the closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub expected_base_sizes: Vec<usize>,
    pub predicted_mul_count: u64,
    pub predicted_inv_count: u64,
    pub predicted_add_bound: i64,
    /// Exact additions at full length `c = 2^n q`; `None` otherwise.
    pub full_length_adds: Option<u64>,
    pub base_layout_pass: bool,
    pub reduction_mul_free: bool,
    pub mul_law_pass: bool,
    pub inv_law_pass: bool,
    pub add_bound_pass: bool,
    pub full_length_pass: Option<bool>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.base_layout_pass
            && self.reduction_mul_free
            && self.mul_law_pass
            && self.inv_law_pass
            && self.add_bound_pass
            && self.full_length_pass != Some(false)
    }
}

/// Per-call cost of the base case keyed by `c`, read from the measured
/// records. `None` if two calls with the same `c` disagree.
fn measured_cost(counts: &OpCounts, get: impl Fn(&BaseCall) -> u64) -> Option<Vec<(usize, u64)>> {
    let mut table: Vec<(usize, u64)> = Vec::new();
    for b in &counts.base_calls {
        match table.iter().find(|(c, _)| *c == b.c) {
            Some(&(_, v)) if v != get(b) => return None,
            Some(_) => {}
            None => table.push((b.c, get(b))),
        }
    }
    Some(table)
}

/// Checks a counted transform with depth `n` and truncation `c` against
/// the multiplication law, the addition bound and (at full length) the
/// exact addition count, using the base-case costs measured in the same
/// run.
pub fn check_laws(q: usize, n: u32, c: usize, kind: Kind, counts: &OpCounts) -> LawCheck {
    let blocks = c.div_ceil(q);
    let rem = modstar_unchecked(c, q);
    let mut expected = vec![q; blocks - 1];
    expected.push(rem);
    let base_layout_pass =
        counts.base_sizes() == expected && counts.base_calls.iter().all(|b| b.kind == kind);

    let lookup = |table: &Option<Vec<(usize, u64)>>, c: usize| {
        table
            .as_ref()
            .and_then(|t| t.iter().find(|(k, _)| *k == c).map(|&(_, v)| v))
            .unwrap_or(0)
    };
    let muls = measured_cost(counts, |b| b.muls);
    let invs = measured_cost(counts, |b| b.invs);
    let adds = measured_cost(counts, |b| b.adds);
    let predicted_muls = predicted_mul_count(|k| lookup(&muls, k), q, n, c);
    let predicted_invs = predicted_mul_count(|k| lookup(&invs, k), q, n, c);
    let a0_full = lookup(&adds, q);
    let a0_rem = lookup(&adds, rem);
    let add_bound = predicted_add_bound(a0_full, a0_rem, q, n, c, kind);

    let full = c == q << n;
    let exact_adds = full.then(|| {
        let closed = full_length_adds(a0_full, q, n);
        let rec = full_length_adds_recurrence(a0_full, q, n);
        debug_assert!(closed.is_none_or(|v| v == rec));
        rec
    });

    LawCheck {
        expected_base_sizes: expected,
        predicted_mul_count: predicted_muls,
        predicted_inv_count: predicted_invs,
        predicted_add_bound: add_bound,
        full_length_adds: exact_adds,
        base_layout_pass,
        reduction_mul_free: counts.reduction_muls() == 0 && counts.reduction_invs() == 0,
        mul_law_pass: muls.is_some() && counts.muls == predicted_muls,
        inv_law_pass: invs.is_some() && counts.invs == predicted_invs,
        add_bound_pass: adds.is_some() && (counts.adds as i64) <= add_bound,
        full_length_pass: exact_adds.map(|v| counts.adds == v),
    }
}

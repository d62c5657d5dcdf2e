//! Batch transforms over many independent instances.
//!
//! Each instance gets its own buffer and arithmetic context. With the
//! `parallel` feature (default) instances are spread over the rayon pool;
//! without it, or through the `_seq` variants, they run in order. Results
//! are always returned in input order.

use crate::counts::{Arith, Kind, OpCounts};
use crate::error::Result;
use crate::gf2m::{Fe, FieldParams};
use crate::hermite::{evaluate_slice, interpolate_slice};

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    map_seq(items, f)
}

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

fn eval_one(field: FieldParams, len: usize, coeffs: &[Fe]) -> Result<Vec<Fe>> {
    evaluate_slice(&mut Arith::plain(field), coeffs, len)
}

fn interp_one(field: FieldParams, len: usize, values: &[Fe]) -> Result<Vec<Fe>> {
    interpolate_slice(&mut Arith::plain(field), values, len)
}

/// Length-`len` Hermite evaluation of every coefficient vector in `inputs`.
pub fn evaluate_many(field: FieldParams, len: usize, inputs: &[Vec<Fe>]) -> Result<Vec<Vec<Fe>>> {
    map(inputs, |c| eval_one(field, len, c))
        .into_iter()
        .collect()
}

pub fn evaluate_many_seq(
    field: FieldParams,
    len: usize,
    inputs: &[Vec<Fe>],
) -> Result<Vec<Vec<Fe>>> {
    map_seq(inputs, |c| eval_one(field, len, c))
        .into_iter()
        .collect()
}

/// Length-`len` Hermite interpolation of every value vector in `inputs`.
pub fn interpolate_many(
    field: FieldParams,
    len: usize,
    inputs: &[Vec<Fe>],
) -> Result<Vec<Vec<Fe>>> {
    map(inputs, |v| interp_one(field, len, v))
        .into_iter()
        .collect()
}

pub fn interpolate_many_seq(
    field: FieldParams,
    len: usize,
    inputs: &[Vec<Fe>],
) -> Result<Vec<Vec<Fe>>> {
    map_seq(inputs, |v| interp_one(field, len, v))
        .into_iter()
        .collect()
}

/// Counted runs of one transform over many inputs.
pub fn counted_many(
    field: FieldParams,
    kind: Kind,
    len: usize,
    inputs: &[Vec<Fe>],
) -> Result<Vec<(Vec<Fe>, OpCounts)>> {
    map(inputs, |x| crate::counts::counted_run(field, kind, len, x))
        .into_iter()
        .collect()
}

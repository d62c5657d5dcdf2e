//! Fast Hermite evaluation and interpolation over binary finite fields.
//!
//! Given the coefficients of `F` of degree below `len`, Hermite evaluation
//! produces `h_i = (D^(i div q) F)(omega_(i mod q))` for `i < len`, where
//! `D^k` is the k-th Hasse derivative and `omega_0, ..., omega_(q-1)` are
//! all elements of GF(q), `q = 2^m`. Hermite interpolation inverts it.
//!
//! The transforms in [`hermite`] reduce a length-`len` instance to
//! `ceil(len / q)` standard evaluations or interpolations over the `q`
//! field points using only additions. [`oracle`] holds independent
//! brute-force versions and [`counts`] turns the cost formulas into
//! checkable predictions.
//!
//! ```
//! use gf2_hermite::{Arith, Fe, FieldParams, Polynomial};
//! use gf2_hermite::hermite::{hermite_evaluate_len, hermite_interpolate_len};
//!
//! let gf2 = FieldParams::new(1).unwrap();
//! let x3 = Polynomial::new(gf2, vec![Fe(0), Fe(0), Fe(0), Fe(1)]).unwrap();
//! let mut ctx = Arith::plain(gf2);
//! let h = hermite_evaluate_len(&mut ctx, &x3, 4).unwrap();
//! assert_eq!(h, vec![Fe(0), Fe(1), Fe(0), Fe(1)]);
//! assert_eq!(hermite_interpolate_len(&mut ctx, &h, 4).unwrap(), x3);
//! ```

pub mod batch;
pub mod cli;
pub mod counts;
pub mod error;
pub mod gf2m;
pub mod hermite;
pub mod oracle;
pub mod poly;
pub mod textfmt;

pub use counts::{Arith, Kind, NoCount, OpCounts, OpSink};
pub use error::{Error, Result};
pub use gf2m::{Fe, FieldParams};
pub use hermite::HermiteBuffer;
pub use poly::Polynomial;

//! Exact scalars and exact linear algebra.
//!
//! Everything here is exact: rationals are arbitrary precision, number-field
//! elements are reduced modulo a monic integer polynomial, and residues live
//! in a prime field. Ranks over the rationals use fraction-free
//! elimination on integer matrices with primitive rows.

mod field;
mod matrix;
mod numfield;

pub use field::{parse_rational, ModP, Rational, Scalar};
pub use matrix::{
    field_rank, integer_rank, is_prime, rank_mod_p, smith_normal_form, FieldMatrix, IntMatrix,
};
pub(crate) use matrix::{rank_mod_p_u64, reduce_mod};
pub use numfield::{NfElem, NumberField};

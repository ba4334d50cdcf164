//! Exact generalized Jordan and Weyr canonical forms over GF(p), Q and
//! GF(p)(t), explicit bases of their centralizers, and a brute-force
//! commutant oracle to check them against.

pub mod centralizer;
pub mod error;
pub mod field;
pub mod forms;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod poly;
mod polyops;
pub mod verify;

pub use centralizer::{CentralizerBasis, ParamSlot};
pub use error::{AlgebraError, Result};
pub use field::{field_arith, ArithOp, Field, FieldSelector, PrimeField, RatFn, RationalFunctions, Rationals};
pub use forms::{CanonicalSpec, Kind};
pub use matrix::{
    block_assemble, block_extract, conjugate_by_permutation, same_span, span_rank, BlockLayout, BlockPermutation, Mat,
};
pub use partition::SegreData;
pub use poly::{Irreducibility, Poly};

//! Exact computation with prime-order elements of finite general linear
//! groups: e-ppd and e-stingray elements, the explicit modules that carry
//! them, and Brauer-character criteria for recognising them.

pub mod classify;
pub mod cyclo;
pub mod error;
pub mod ffield;
pub mod fmatrix;
pub mod fpoly;
pub mod groups;
pub mod harness;
pub mod ppd;

pub use error::{Error, Result};

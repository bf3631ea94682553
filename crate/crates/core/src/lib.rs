//! Closed-form electromagnetics for RF transmission work.
//!
//! The crate covers distributed-parameter lines, steady-state and transient
//! line analysis, single-stub matching, Smith chart arithmetic and rendering,
//! plane waves in lossy media, reflection at planar interfaces, and
//! rectangular, circular, parallel-plate and coaxial guides.
//!
//! All quantities are SI. Time-harmonic fields use the `e^{+jωt}` convention
//! with forward waves varying as `e^{-γz}`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod boundary;
pub mod constants;
pub mod error;
pub mod guides;
pub mod lineparams;
pub mod linestate;
pub mod matcher;
pub mod planewave;
pub mod smithchart;
pub mod transient;

pub use error::{Error, Result};
pub use num_complex::Complex64 as Complex;

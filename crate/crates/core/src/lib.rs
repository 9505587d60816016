//! Daily electricity peak-load forecasting models and a benchmark harness.
//!
//! The crate implements, from first principles, the model families that are
//! commonly compared for national daily peak-load forecasting:
//!
//! * [`sarimax`] — seasonal ARIMA with exogenous regressors, estimated by
//!   conditional sum of squares with AIC/BIC order selection,
//! * [`neural`] — a NARX multilayer perceptron and an LSTM, trained by
//!   backpropagation (through time) with Adam,
//! * [`svr`] — ε-insensitive support vector regression solved by SMO,
//! * [`hybrid`] — linear-plus-residual decompositions (SARIMAX + ML),
//! * [`eval`] — error metrics, stratified k-fold CV, grid search, and a
//!   Table-style benchmark over all seven models,
//! * [`synth`] — a deterministic synthetic national-load generator so the
//!   full benchmark runs without proprietary data.
//!
//! The crate is `no_std`-compatible (`alloc` required); IO, file formats and
//! the CLI live in the companion `peakcast` crate. Everything here is pure
//! and deterministic: the same seed produces bit-identical results.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod calendar;
mod error;
pub mod eval;
pub mod features;
pub mod hybrid;
pub(crate) mod math;
pub mod neural;
pub mod optim;
pub mod rng;
pub mod sarimax;
pub mod scale;
pub mod series;
pub mod svr;
pub mod synth;

pub use error::{Error, Result};

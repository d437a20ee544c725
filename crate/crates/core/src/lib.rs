//! Dwell-time analysis for a Gaussian wavepacket crossing a damped inverted
//! parabolic barrier.
//!
//! The library is layered bottom-up:
//!
//! - [`special`]: error function, adaptive quadrature and a bracketed root
//!   finder, all self-contained;
//! - [`langevin`]: trajectory coefficients of the damped barrier-top motion
//!   and the linear response to a single bath oscillator;
//! - [`wavepacket`]: Gaussian packet moments, probability density, the two
//!   printed current conventions, and the short-time propagator;
//! - [`dwelltime`]: the truncated dwell-time integral, its closed forms, and
//!   a consistency report quantifying the discrepancies between the printed
//!   prefactor conventions;
//! - [`classical`]: traversal time of the matching classical particle with
//!   linear drag.
//!
//! Two printed conventions appear throughout ([`dwelltime::Convention`]):
//! `PaperLiteral` evaluates expressions exactly as printed in the source
//! material this follows, while `Rederived` uses the forms obtained by
//! carrying the substitutions through without dropping factors. The
//! rederived convention is internally consistent (the numeric time integral
//! reproduces it) and is the default everywhere.

#![forbid(unsafe_code)]

pub mod classical;
pub mod dwelltime;
mod error;
pub mod langevin;
pub mod special;
pub mod wavepacket;

pub use error::{Error, Result};

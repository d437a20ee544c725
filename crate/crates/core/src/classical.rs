//! Classical traversal time of a particle coasting against linear friction.
//!
//! A particle entering at speed v0 under v' = -gamma v crosses a slab of
//! width w in
//!
//! ```text
//! tau^CL = (1/gamma) ln(1 / (1 - gamma w / v0))
//! ```
//!
//! provided gamma w < v0, the condition for the particle to still be moving
//! at the far side. Expanding the logarithm to second order gives the
//! quadratic form alpha w^2 + beta w used for comparison with the quantum
//! dwell time, whose own growth in the barrier width is quasi-quadratic.
//!
//! The quadratic coefficient alpha carries the same convention split as the
//! dwell-time prefactors: the Taylor expansion of the exact logarithm gives
//! alpha = gamma/(2 v0^2), while the literal printed coefficient is
//! gamma/v0^2. Both are available through [`Convention`].

use crate::dwelltime::Convention;
use crate::error::{Error, Result};

/// Friction strength, entry speed and slab width of the classical run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalSpec {
    /// Friction coefficient of v' = -gamma v.
    pub gamma: f64,
    /// Entry speed.
    pub v0: f64,
    /// Slab width to traverse.
    pub w_cl: f64,
}

impl ClassicalSpec {
    /// Checks finiteness, signs and the traversal regime gamma w < v0.
    pub fn validated(self) -> Result<Self> {
        self.check()?;
        Ok(self)
    }

    fn check(&self) -> Result<()> {
        if !self.gamma.is_finite() || self.gamma < 0.0 {
            return Err(Error::config(
                "gamma",
                format!("must be non-negative, got {}", self.gamma),
            ));
        }
        if !self.v0.is_finite() || self.v0 <= 0.0 {
            return Err(Error::config(
                "v0",
                format!("must be positive, got {}", self.v0),
            ));
        }
        if !self.w_cl.is_finite() || self.w_cl <= 0.0 {
            return Err(Error::config(
                "w_cl",
                format!("must be positive, got {}", self.w_cl),
            ));
        }
        if self.gamma * self.w_cl >= self.v0 {
            return Err(Error::regime(format!(
                "particle stops inside the interval: gamma*w = {} >= v0 = {}",
                self.gamma * self.w_cl,
                self.v0
            )));
        }
        Ok(())
    }

    /// Frictionless crossing time w / v0.
    pub fn tau0(&self) -> f64 {
        self.w_cl / self.v0
    }

    /// Quadratic coefficient of the expanded traversal time.
    pub fn alpha(&self, convention: Convention) -> f64 {
        match convention {
            Convention::Rederived => self.gamma / (2.0 * self.v0 * self.v0),
            Convention::PaperLiteral => self.gamma / (self.v0 * self.v0),
        }
    }

    /// Linear coefficient 1/v0.
    pub fn beta(&self) -> f64 {
        1.0 / self.v0
    }
}

/// Exact traversal time (1/gamma) ln(1/(1 - gamma w / v0)); the gamma -> 0
/// limit w/v0 is taken analytically.
pub fn traversal_exact(spec: &ClassicalSpec) -> Result<f64> {
    spec.check()?;
    if spec.gamma == 0.0 {
        return Ok(spec.tau0());
    }
    let s = spec.gamma * spec.w_cl / spec.v0;
    Ok(-(-s).ln_1p() / spec.gamma)
}

/// Second-order traversal time alpha w^2 + beta w.
pub fn traversal_quadratic(spec: &ClassicalSpec, convention: Convention) -> Result<f64> {
    spec.check()?;
    Ok(spec.alpha(convention) * spec.w_cl * spec.w_cl + spec.beta() * spec.w_cl)
}

//! Special functions and scalar numerical routines.
//!
//! Nothing in this module knows about the physics. It provides the error
//! function, an adaptive Simpson integrator and a bisection root finder,
//! each reporting failures through [`Error`] instead of propagating NaN.

use crate::error::{Error, Result};

/// Outcome of an adaptive quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Best estimate of the integral.
    pub value: f64,
    /// Accumulated absolute error estimate; never negative.
    pub error_estimate: f64,
    /// Number of integrand evaluations performed; at least one.
    pub evaluations: u64,
}

/// Crossover between the Maclaurin series and the continued fraction.
///
/// Below this the alternating series loses at most two decimal digits to
/// cancellation; above it the complementary continued fraction converges in
/// a few dozen terms.
const ERF_SERIES_CUTOFF: f64 = 3.0;

/// Error function, relative accuracy better than 1e-12 on [-6, 6].
///
/// For |x| <= 3 the Maclaurin series
/// erf(x) = 2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1))
/// is summed directly; beyond that erfc is evaluated from its Laplace
/// continued fraction and subtracted from one.
pub fn erf(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("erf: non-finite argument {x}")));
    }
    Ok(erf_unchecked(x))
}

fn erf_unchecked(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x < 0.0 {
        return -erf_unchecked(-x);
    }
    if x <= ERF_SERIES_CUTOFF {
        erf_series(x)
    } else {
        1.0 - erfc_continued_fraction(x)
    }
}

fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    // power carries (-1)^n x^(2n+1) / n!
    let mut power = x;
    let mut sum = x;
    for n in 1..200u32 {
        power *= -x2 / f64::from(n);
        let term = power / f64::from(2 * n + 1);
        sum += term;
        if term.abs() < 1e-17 * x {
            break;
        }
    }
    std::f64::consts::FRAC_2_SQRT_PI * sum
}

/// Laplace continued fraction,
/// erfc(x) = e^(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
/// evaluated with the modified Lentz scheme. Valid for x well above one.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for n in 1..200u32 {
        let a = 0.5 * f64::from(n);
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (std::f64::consts::PI.sqrt() * f)
}

/// Hard cap on interval halvings in [`integrate_adaptive`].
const MAX_QUAD_DEPTH: u32 = 60;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`.
///
/// Each panel compares the two-half composite rule against the single-panel
/// rule; the Richardson estimate |S_fine - S_coarse|/15 must fit the panel's
/// tolerance share or the panel is halved, down to a depth of 60. Accepted
/// panels contribute their extrapolated value.
pub fn integrate_adaptive(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "integrate_adaptive: non-finite interval [{a}, {b}]"
        )));
    }
    if a > b {
        return Err(Error::domain(format!(
            "integrate_adaptive: interval reversed ({a} > {b})"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "integrate_adaptive: tolerance must be positive, got {tol}"
        )));
    }

    let mut ws = Workspace {
        f: &f,
        evaluations: 0,
        error_estimate: 0.0,
    };
    let fa = ws.eval(a)?;
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: ws.evaluations,
        });
    }
    let m = 0.5 * (a + b);
    let fm = ws.eval(m)?;
    let fb = ws.eval(b)?;
    let whole = simpson(fa, fm, fb, b - a);
    let value = ws.refine(a, b, fa, fm, fb, whole, tol, MAX_QUAD_DEPTH)?;
    Ok(QuadratureResult {
        value,
        error_estimate: ws.error_estimate,
        evaluations: ws.evaluations,
    })
}

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

struct Workspace<'a> {
    f: &'a dyn Fn(f64) -> f64,
    evaluations: u64,
    error_estimate: f64,
}

impl Workspace<'_> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.evaluations += 1;
        let y = (self.f)(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::domain(format!(
                "integrate_adaptive: integrand returned {y} at x = {x}"
            )))
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            self.error_estimate += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::Convergence {
                context: "integrate_adaptive: halving depth exhausted".into(),
                best: left + right + delta / 15.0,
                error: delta.abs() / 15.0,
                tol,
            });
        }
        let half = 0.5 * tol;
        Ok(self.refine(a, m, fa, flm, fm, left, half, depth - 1)?
            + self.refine(m, b, fm, frm, fb, right, half, depth - 1)?)
    }
}

/// Iteration cap for [`find_root_increasing`]; bisection reaches f64
/// resolution long before this.
const MAX_BISECTIONS: u32 = 200;

/// Bisection root finder for a monotone increasing function bracketing a
/// sign change on `[lo, hi]`. Returns the root to within `tol` on the
/// argument.
pub fn find_root_increasing(
    g: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::domain(format!(
            "find_root_increasing: invalid interval [{lo}, {hi}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "find_root_increasing: tolerance must be positive, got {tol}"
        )));
    }
    let check = |x: f64, gx: f64| -> Result<f64> {
        if gx.is_finite() {
            Ok(gx)
        } else {
            Err(Error::domain(format!(
                "find_root_increasing: g returned {gx} at x = {x}"
            )))
        }
    };
    let glo = check(lo, g(lo))?;
    if glo == 0.0 {
        return Ok(lo);
    }
    let ghi = check(hi, g(hi))?;
    if ghi == 0.0 {
        return Ok(hi);
    }
    if glo > 0.0 || ghi < 0.0 {
        return Err(Error::bracket(format!(
            "no sign change on [{lo}, {hi}]: g(lo) = {glo:e}, g(hi) = {ghi:e}"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let gm = check(mid, g(mid))?;
        if gm == 0.0 {
            return Ok(mid);
        }
        if gm < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

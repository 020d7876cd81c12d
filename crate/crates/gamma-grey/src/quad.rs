//! Shared numerical oracles: adaptive Gauss–Kronrod quadrature on finite,
//! semi-infinite and algebraically-singular domains, plus Monte Carlo
//! averaging with standard errors.
//!
//! Every oracle-side integral in the crate routes through this engine, while
//! closed forms route through `specfun`'s own double-exponential rule, so
//! closed-form-vs-oracle tests never share an approximation.

use crate::error::{Error, Result};
use crate::rng::rng_for;
use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

/// Tolerances and limits for one quadrature request.
#[derive(Debug, Clone, Copy)]
pub struct QuadSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of interval bisections in the adaptive loop.
    pub max_refinements: u32,
    /// Known algebraic endpoint exponent in [0,1), used by the singular rules.
    pub singularity_exponent: f64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_refinements: 4000,
            singularity_exponent: 0.0,
        }
    }
}

impl QuadSpec {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }
}

/// A quadrature value with its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
}

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK abscissae).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One G7/K15 panel: returns (kronrod value, |kronrod − gauss| error proxy).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = h * x;
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

/// Globally adaptive Gauss–Kronrod integration of `f` over [a, b].
///
/// Endpoints are never evaluated (the K15 nodes are interior), so integrable
/// endpoint singularities converge, just slowly; prefer the dedicated
/// singular rules when the exponent is known.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadSpec) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::Invalid(format!("bad interval [{a}, {b}]")));
    }
    let (v, e) = gk15(&f, a, b);
    let mut segs = vec![Segment {
        a,
        b,
        value: v,
        err: e,
    }];
    for _ in 0..spec.max_refinements {
        let total: f64 = segs.iter().map(|s| s.value).sum();
        let err: f64 = segs.iter().map(|s| s.err).sum();
        if err <= spec.abs_tol.max(spec.rel_tol * total.abs()) {
            return Ok(QuadResult {
                value: total,
                error_estimate: err,
            });
        }
        // split the worst segment
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .expect("non-empty");
        let s = segs.swap_remove(worst);
        let m = 0.5 * (s.a + s.b);
        if m <= s.a || m >= s.b {
            // interval exhausted at machine precision; keep it as-is
            segs.push(s);
            break;
        }
        let (v1, e1) = gk15(&f, s.a, m);
        let (v2, e2) = gk15(&f, m, s.b);
        segs.push(Segment {
            a: s.a,
            b: m,
            value: v1,
            err: e1,
        });
        segs.push(Segment {
            a: m,
            b: s.b,
            value: v2,
            err: e2,
        });
    }
    let total: f64 = segs.iter().map(|s| s.value).sum();
    let err: f64 = segs.iter().map(|s| s.err).sum();
    if err <= (10.0 * spec.abs_tol).max(10.0 * spec.rel_tol * total.abs()) {
        // close enough to be usable; report the honest estimate
        return Ok(QuadResult {
            value: total,
            error_estimate: err,
        });
    }
    Err(Error::Convergence(format!(
        "adaptive quadrature stalled on [{a}, {b}]: value {total:.6e}, err {err:.3e}"
    )))
}

/// ∫_a^∞ f, for integrands with exponential or algebraic (power < −1) decay.
///
/// Panels of doubling width are integrated adaptively until two consecutive
/// panels contribute below tolerance.
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: F, a: f64, spec: &QuadSpec) -> Result<QuadResult> {
    let mut total = 0.0;
    let mut err = 0.0;
    let mut lo = a;
    let mut width = 1.0f64.max(a.abs() * 0.5);
    let mut quiet = 0;
    for _ in 0..80 {
        let hi = lo + width;
        let r = integrate(&f, lo, hi, spec)?;
        total += r.value;
        err += r.error_estimate;
        let cutoff = spec.abs_tol.max(spec.rel_tol * total.abs());
        if r.value.abs() < cutoff {
            quiet += 1;
            if quiet >= 2 {
                return Ok(QuadResult {
                    value: total,
                    error_estimate: err + r.value.abs(),
                });
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        width *= 2.0;
    }
    Err(Error::Convergence(format!(
        "tail integration from {a} did not settle (value {total:.6e})"
    )))
}

/// ∫_lower^∞ f(x) dx where f has an algebraic singularity (x−lower)^{−exponent}
/// at the lower endpoint, exponent ∈ [0, 1).
///
/// The substitution x = lower + v^{1/(1−exponent)} absorbs the singularity:
/// f(x) dx = f(lower + v^{1/(1−ρ)}) · v^{ρ/(1−ρ)}/(1−ρ) dv with a bounded
/// transformed integrand.
pub fn integrate_singular<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    exponent: f64,
    spec: &QuadSpec,
) -> Result<QuadResult> {
    check_exponent(exponent)?;
    if exponent == 0.0 {
        return integrate_to_inf(f, lower, spec);
    }
    let p = 1.0 / (1.0 - exponent);
    let g = move |v: f64| {
        let x = lower + v.powf(p);
        f(x) * p * v.powf(p - 1.0)
    };
    integrate_to_inf(g, 0.0, spec)
}

/// Finite-interval companion of [`integrate_singular`]: ∫_lower^upper f,
/// singularity at the lower endpoint.
pub fn integrate_singular_to<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    upper: f64,
    exponent: f64,
    spec: &QuadSpec,
) -> Result<QuadResult> {
    check_exponent(exponent)?;
    if upper <= lower {
        return Err(Error::Invalid(format!("bad interval [{lower}, {upper}]")));
    }
    if exponent == 0.0 {
        return integrate(f, lower, upper, spec);
    }
    let p = 1.0 / (1.0 - exponent);
    let g = move |v: f64| {
        let x = lower + v.powf(p);
        f(x) * p * v.powf(p - 1.0)
    };
    integrate(g, 0.0, (upper - lower).powf(1.0 - exponent), spec)
}

/// ∫_a^b f with an algebraic singularity (b−x)^{−exponent} at the upper
/// endpoint.
pub fn integrate_right_singular<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    exponent: f64,
    spec: &QuadSpec,
) -> Result<QuadResult> {
    integrate_singular_to(move |w| f(a + b - w), a, b, exponent, spec)
}

fn check_exponent(exponent: f64) -> Result<()> {
    if !(0.0..1.0).contains(&exponent) {
        return Err(Error::Invalid(format!(
            "singularity exponent {exponent} outside [0, 1)"
        )));
    }
    Ok(())
}

/// Complex-valued wrapper: integrates the real and imaginary parts separately
/// through [`integrate_singular`].
pub fn integrate_singular_complex<F: Fn(f64) -> Complex64>(
    f: F,
    lower: f64,
    exponent: f64,
    spec: &QuadSpec,
) -> Result<Complex64> {
    let re = integrate_singular(|x| f(x).re, lower, exponent, spec)?;
    let im = integrate_singular(|x| f(x).im, lower, exponent, spec)?;
    Ok(Complex64::new(re.value, im.value))
}

/// Sample mean and standard error of a scalar sampler.
pub fn mc_mean<F: FnMut(&mut ChaCha8Rng) -> f64>(
    mut sampler: F,
    n: usize,
    seed: u64,
    stream: u64,
) -> Result<(f64, f64)> {
    if n < 100 {
        return Err(Error::Invalid(format!("mc_mean needs n >= 100, got {n}")));
    }
    let mut rng = rng_for(seed, stream);
    let mut sum = 0.0;
    let mut sumsq = 0.0;
    for _ in 0..n {
        let x = sampler(&mut rng);
        sum += x;
        sumsq += x * x;
    }
    let mean = sum / n as f64;
    let var = (sumsq / n as f64 - mean * mean).max(0.0) * n as f64 / (n as f64 - 1.0);
    Ok((mean, (var / n as f64).sqrt()))
}

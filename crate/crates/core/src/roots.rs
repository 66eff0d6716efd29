//! Simultaneous-iteration polynomial root refinement with a posteriori
//! inclusion radii, and the 1-D Mahler measure built on top of it.
//!
//! The refiner is the Aberth-Ehrlich method. After iteration stops, each
//! approximation `z_i` gets the radius
//!
//! ```text
//! r_i = n * |p(z_i)| / (|lead| * prod_{j != i} |z_i - z_j|)
//! ```
//!
//! The classical Gerschgorin-style inclusion result for these disks: the
//! union of the disks `D(z_i, r_i)` contains every root of `p`, and a
//! connected component made of `k` disks contains exactly `k` roots. That
//! stays valid whether or not the iteration converged, so the Mahler error
//! bound below is sound unconditionally; non-convergence merely makes the
//! radii (and hence the bound) large.
//!
//! The Mahler measure of `p = lead * prod (t - a_i)` is
//! `M(p) = |lead| * prod max(1, |a_i|)`. Roots whose inclusion disk touches
//! the unit circle, or that sit within the ambiguity radius of it, are
//! treated as on-circle (contributing nothing), and the possible
//! misclassification is folded into the reported error bound.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default iteration budget for the refiner.
pub const DEFAULT_MAX_ITER: u32 = 200;
/// Default relative step tolerance.
pub const DEFAULT_EPS: f64 = 1e-12;
/// Roots within this distance of the unit circle are treated as on-circle.
pub const NEAR_CIRCLE_RADIUS: f64 = 1e-9;

/// Refined roots with per-root inclusion radii.
#[derive(Clone, Debug)]
pub struct RefinedRoots {
    pub roots: Vec<Complex64>,
    /// Inclusion radius for each root (see module docs). Effective radii
    /// accounting for overlapping disks are in `cluster_radii`.
    pub radii: Vec<f64>,
    /// Per-root radius valid under any assignment of true roots to centers
    /// within a connected component of overlapping disks.
    pub cluster_radii: Vec<f64>,
    pub iterations: u32,
    pub converged: bool,
}

impl RefinedRoots {
    /// Number of roots with `||z| - 1| < threshold`.
    pub fn count_near_circle(&self, threshold: f64) -> usize {
        self.roots
            .iter()
            .filter(|z| (z.norm() - 1.0).abs() < threshold)
            .count()
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Find all roots of the polynomial with the given coefficients (constant
/// term first). Exact zero roots are split off first; the rest are refined
/// simultaneously.
pub fn refine_roots(coeffs: &[Complex64], max_iter: u32, eps: f64) -> Result<RefinedRoots> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().map(|x| x.norm_sqr() == 0.0).unwrap_or(false) {
        c.pop();
    }
    if c.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut zero_roots = 0usize;
    while c.first().map(|x| x.norm_sqr() == 0.0).unwrap_or(false) {
        c.remove(0);
        zero_roots += 1;
    }
    let n = c.len() - 1;

    let mut roots: Vec<Complex64> = Vec::with_capacity(n + zero_roots);
    let mut iterations = 0;
    let mut converged = true;

    if n >= 1 {
        let lead = c[n];
        // Initial guesses on a circle whose radius blends the Cauchy bounds.
        let upper = 1.0
            + c[..n]
                .iter()
                .map(|x| (x / lead).norm())
                .fold(0.0f64, f64::max);
        let tail_max = c[1..]
            .iter()
            .map(|x| x.norm())
            .fold(0.0f64, f64::max);
        let lower = if tail_max > 0.0 {
            c[0].norm() / (c[0].norm() + tail_max)
        } else {
            upper
        };
        let geo = (c[0].norm() / lead.norm()).powf(1.0 / n as f64);
        let r0 = geo.clamp(lower.max(1e-12), upper);
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.7;
                Complex64::from_polar(r0, angle)
            })
            .collect();

        if n == 1 {
            z[0] = -c[0] / c[1];
        } else {
            converged = false;
            for it in 0..max_iter {
                iterations = it + 1;
                let mut max_step = 0.0f64;
                for i in 0..n {
                    let (p, dp) = horner(&c, z[i]);
                    if p.norm_sqr() == 0.0 {
                        continue;
                    }
                    let newton = if dp.norm_sqr() == 0.0 {
                        // flat spot: nudge off it
                        Complex64::new(eps.max(1e-15), eps.max(1e-15))
                    } else {
                        p / dp
                    };
                    let mut s = Complex64::new(0.0, 0.0);
                    for j in 0..n {
                        if j != i {
                            let d = z[i] - z[j];
                            if d.norm_sqr() > 0.0 {
                                s += d.inv();
                            }
                        }
                    }
                    let denom = Complex64::new(1.0, 0.0) - newton * s;
                    let step = if denom.norm_sqr() > 0.0 {
                        newton / denom
                    } else {
                        newton
                    };
                    z[i] -= step;
                    let rel = step.norm() / (1.0 + z[i].norm());
                    max_step = max_step.max(rel);
                }
                if max_step <= eps {
                    converged = true;
                    break;
                }
            }
        }
        roots.extend_from_slice(&z);
    }

    for _ in 0..zero_roots {
        roots.push(Complex64::new(0.0, 0.0));
    }

    let radii = inclusion_radii(&c, &roots, zero_roots);
    let cluster_radii = cluster_effective_radii(&roots, &radii);
    Ok(RefinedRoots {
        roots,
        radii,
        cluster_radii,
        iterations,
        converged,
    })
}

/// Gerschgorin-style radii; stripped exact-zero roots get radius 0.
fn inclusion_radii(c: &[Complex64], roots: &[Complex64], zero_roots: usize) -> Vec<f64> {
    let n = c.len() - 1;
    let lead_ln = c[n].norm().ln();
    let mut radii = vec![0.0f64; roots.len()];
    for i in 0..n {
        let (p, _) = horner(c, roots[i]);
        if p.norm_sqr() == 0.0 {
            radii[i] = 0.0;
            continue;
        }
        // log-space to dodge under/overflow in the pairwise product
        let mut ln_r = (n as f64).ln() + p.norm().ln() - lead_ln;
        let mut separated = true;
        for j in 0..n {
            if j == i {
                continue;
            }
            let d = (roots[i] - roots[j]).norm();
            if d == 0.0 {
                separated = false;
                break;
            }
            ln_r -= d.ln();
        }
        radii[i] = if separated { ln_r.exp() } else { f64::INFINITY };
    }
    let _ = zero_roots; // zero roots keep radius 0: they are exact
    radii
}

/// For each center, the radius that covers every disk in its connected
/// component of the intersection graph. Any bijection between the true roots
/// of a component and its centers stays within these radii.
fn cluster_effective_radii(roots: &[Complex64], radii: &[f64]) -> Vec<f64> {
    let n = roots.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while comp[i] != i {
            comp[i] = comp[comp[i]];
            i = comp[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let touch = (roots[i] - roots[j]).norm() <= radii[i] + radii[j];
            if touch {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut out = vec![0.0f64; n];
    for i in 0..n {
        let ci = find(&mut comp, i);
        let mut r = radii[i];
        for j in 0..n {
            if find(&mut comp, j) == ci {
                r = r.max((roots[i] - roots[j]).norm() + radii[j]);
            }
        }
        out[i] = r;
    }
    out
}

/// Logarithmic Mahler measure of a complex-coefficient polynomial with a
/// certified error bound.
#[derive(Clone, Copy, Debug)]
pub struct Mahler1d {
    pub log_mahler: f64,
    pub error_bound: f64,
}

/// Compute `log M(p)` for the polynomial with the given coefficients
/// (constant term first). Errors on the zero polynomial or when the
/// achievable error bound exceeds `tol`.
pub fn mahler_1d(coeffs: &[Complex64], tol: f64) -> Result<Mahler1d> {
    if tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let mut c = coeffs.to_vec();
    while c.last().map(|x| x.norm_sqr() == 0.0).unwrap_or(false) {
        c.pop();
    }
    if c.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let n = c.len() - 1;
    let lead_ln = c[n].norm().ln();
    if n == 0 {
        return Ok(Mahler1d {
            log_mahler: lead_ln,
            error_bound: 4.0 * f64::EPSILON * (1.0 + lead_ln.abs()),
        });
    }

    let eps = DEFAULT_EPS.min(tol / (4.0 * (n as f64 + 1.0)));
    let refined = refine_roots(&c, DEFAULT_MAX_ITER, eps)?;

    let mut log_m = lead_ln;
    let mut err = 0.0f64;
    for (z, &radius) in refined.roots.iter().zip(&refined.cluster_radii) {
        let a = z.norm();
        if !radius.is_finite() {
            return Err(Error::NonConvergence(format!(
                "coincident approximations left an unbounded inclusion radius (degree {n})"
            )));
        }
        let band = NEAR_CIRCLE_RADIUS.max(radius);
        if (a - 1.0).abs() <= band {
            // treated as on-circle: contributes 0, ambiguity goes to the bound
            err += (a + radius - 1.0).max(0.0).ln_1p();
        } else if a > 1.0 {
            log_m += a.ln();
            err += (a / (a - radius)).ln();
        }
        // a < 1 - band: the whole disk is inside the circle, no contribution
    }
    err += 1e-13 * (n as f64 + 2.0);

    if err > tol {
        return Err(Error::NonConvergence(format!(
            "achieved error bound {err:.3e} exceeds tolerance {tol:.3e}"
        )));
    }
    Ok(Mahler1d {
        log_mahler: log_m,
        error_bound: err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn refine_linear() {
        let r = refine_roots(&[c(3.0), c(-2.0)], 100, 1e-12).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - c(1.5)).norm() < 1e-14);
    }

    #[test]
    fn refine_quadratic_complex_pair() {
        // t^2 + t + 1: primitive cube roots of unity
        let r = refine_roots(&[c(1.0), c(1.0), c(1.0)], 200, 1e-13).unwrap();
        assert!(r.converged);
        for z in &r.roots {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.re + 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn refine_splits_zero_roots() {
        // t^2 (t - 2)
        let r = refine_roots(&[c(0.0), c(0.0), c(-2.0), c(1.0)], 200, 1e-12).unwrap();
        let zeros = r.roots.iter().filter(|z| z.norm() == 0.0).count();
        assert_eq!(zeros, 2);
        assert!(r.roots.iter().any(|z| (z - c(2.0)).norm() < 1e-10));
    }

    #[test]
    fn inclusion_radii_are_small_after_convergence() {
        let r = refine_roots(&[c(-6.0), c(11.0), c(-6.0), c(1.0)], 200, 1e-13).unwrap();
        // roots 1, 2, 3
        for (z, rad) in r.roots.iter().zip(&r.radii) {
            assert!(*rad < 1e-9, "root {z} radius {rad}");
        }
    }

    #[test]
    fn mahler_furstenberg() {
        // M(3 - 2t) = |-2| * max(1, 3/2) = 3
        let m = mahler_1d(&[c(3.0), c(-2.0)], 1e-9).unwrap();
        assert!((m.log_mahler - 3.0f64.ln()).abs() < 1e-10);
        assert!(m.error_bound <= 1e-9);
    }

    #[test]
    fn mahler_constant() {
        let m = mahler_1d(&[c(5.0)], 1e-12).unwrap();
        assert!((m.log_mahler - 5.0f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn mahler_cyclotomic_is_zero() {
        let m = mahler_1d(&[c(1.0), c(1.0), c(1.0)], 1e-8).unwrap();
        assert!(m.log_mahler.abs() < 1e-10);
    }

    #[test]
    fn mahler_reciprocal_invariance() {
        // M(g) = M(reciprocal(g)) for g with g(0) != 0
        let g = [c(2.0), c(-7.0), c(3.0), c(5.0)];
        let rev = [c(5.0), c(3.0), c(-7.0), c(2.0)];
        let a = mahler_1d(&g, 1e-8).unwrap();
        let b = mahler_1d(&rev, 1e-8).unwrap();
        assert!((a.log_mahler - b.log_mahler).abs() <= a.error_bound + b.error_bound + 1e-12);
    }

    #[test]
    fn mahler_multiplicative() {
        // M(fg) = M(f) M(g)
        let f = [c(3.0), c(1.0), c(2.0)];
        let g = [c(-1.0), c(4.0)];
        // (3 + t + 2t^2)(-1 + 4t) = -3 + 11t + 2t^2 + 8t^3
        let fg = [c(-3.0), c(11.0), c(2.0), c(8.0)];
        let mf = mahler_1d(&f, 1e-8).unwrap();
        let mg = mahler_1d(&g, 1e-8).unwrap();
        let mfg = mahler_1d(&fg, 1e-8).unwrap();
        assert!(
            (mfg.log_mahler - mf.log_mahler - mg.log_mahler).abs()
                <= mf.error_bound + mg.error_bound + mfg.error_bound + 1e-12
        );
    }
}

//! Certified numerics for `f` on the unit torus `U^d`: zero-freeness
//! certificates, zero witnesses (floating and exact), and the
//! multi-dimensional Mahler measure by iterated quadrature.
//!
//! Certification is a Lipschitz grid argument. Writing
//! `F(theta) = f(e^{2 pi i theta_1}, ..., e^{2 pi i theta_d})`, the partial
//! derivative is `dF/dtheta_j = sum_m f_m (2 pi i m_j) e^{2 pi i <m,theta>}`,
//! so `|grad F| <= 2 pi sum_m |f_m| ||m||_2 =: L` everywhere. Every point of
//! the torus is within `sqrt(d)/(2N)` (half a grid-cell diagonal) of a node
//! of the uniform `N^d` grid, hence if the minimum of `|F|` over the grid
//! exceeds `L * sqrt(d)/(2N)` then `F` has no zero at all.

use std::io::Write;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::{self, Mahler1d};
use crate::univariate::{cyclotomic, UnivariateIntPoly};

/// Hard cap on the certification grid resolution.
pub const MAX_GRID: u32 = 4096;
/// Hard cap on total grid nodes (all dimensions combined).
pub const MAX_GRID_POINTS: u64 = 1 << 24;
/// Outer-grid doubling cap for the entropy quadrature.
pub const MAX_OUTER_GRID: u32 = 2048;
/// Default tolerance for witness refinement residuals.
pub const DEFAULT_WITNESS_TOL: f64 = 1e-10;
/// Error budget requested from each 1-D Mahler slice.
const SLICE_TOL: f64 = 1e-8;

/// A point of the torus, stored as angles in `[0, 1)` (fractions of a turn).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusPoint {
    pub angles: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TorusStatus {
    CertifiedNoZero,
    WitnessFound,
    Inconclusive,
}

/// Numeric witness produced by grid search plus refinement.
#[derive(Clone, Debug, Serialize)]
pub struct TorusWitness {
    pub point: TorusPoint,
    pub residual: f64,
}

/// Outcome of the grid certification of `V(f)` against the torus.
#[derive(Clone, Debug, Serialize)]
pub struct TorusCertificate {
    pub status: TorusStatus,
    pub grid_size: u32,
    pub min_modulus: f64,
    pub lipschitz_bound: f64,
    pub witness: Option<TorusWitness>,
}

/// Exact witness: a tuple of roots of unity, stored as reduced fractions of
/// a turn, on which `f` vanishes identically in `Z[t]/Phi_L(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootsOfUnityWitness {
    /// Per-coordinate angle `numerator/denominator` of a turn, reduced.
    pub angles: Vec<(u64, u64)>,
    /// Least common multiple of the component orders.
    pub order_lcm: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EntropyMethod {
    Roots1D,
    IteratedQuadrature,
}

/// Logarithmic Mahler measure of `f` with an error estimate.
///
/// For a nonzero integer Laurent polynomial `M(f) >= 1` (Kronecker), so any
/// correct report satisfies `log_mahler + error_estimate >= 0`; the estimate
/// is widened if the raw value dips below zero by rounding.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyResult {
    pub log_mahler: f64,
    pub error_estimate: f64,
    pub method: EntropyMethod,
    pub grid_size: u32,
    /// Quadrature nodes nudged by half a step because the slice degenerated.
    pub perturbed_nodes: u32,
}

/// `2 pi * sum_m |f_m| * ||m||_2`, an upper bound for `|grad F|` on the torus
/// (see the module docs for the derivation).
pub fn lipschitz_bound(f: &LaurentPoly) -> Result<f64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sum: f64 = f
        .terms()
        .map(|(m, c)| c.abs().to_f64().unwrap_or(f64::INFINITY) * m.norm())
        .sum();
    Ok(2.0 * std::f64::consts::PI * sum)
}

/// Evaluate `f` at the torus point with the given angles (fractions of a turn).
pub fn evaluate_at_angles(f: &LaurentPoly, angles: &[f64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in f.terms() {
        let mut phase = 0.0f64;
        for (&e, &theta) in m.exponents().iter().zip(angles) {
            phase += (e as f64) * theta;
        }
        phase = phase.rem_euclid(1.0);
        acc += Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * phase)
            * c.to_f64().unwrap_or(f64::INFINITY);
    }
    acc
}

fn grad_at_angles(f: &LaurentPoly, angles: &[f64]) -> Vec<Complex64> {
    let d = angles.len();
    let mut grad = vec![Complex64::new(0.0, 0.0); d];
    let two_pi = 2.0 * std::f64::consts::PI;
    for (m, c) in f.terms() {
        let mut phase = 0.0f64;
        for (&e, &theta) in m.exponents().iter().zip(angles) {
            phase += (e as f64) * theta;
        }
        let unit = Complex64::from_polar(1.0, two_pi * phase.rem_euclid(1.0))
            * c.to_f64().unwrap_or(f64::INFINITY);
        for (j, &e) in m.exponents().iter().enumerate() {
            grad[j] += unit * Complex64::new(0.0, two_pi * e as f64);
        }
    }
    grad
}

/// Iterate all nodes `k/N` of the uniform grid on `[0,1)^d` in fixed
/// lexicographic order, calling `visit(index_vector, angles)`.
fn for_each_grid_node(d: usize, n: u32, mut visit: impl FnMut(&[u32], &[f64])) {
    let mut idx = vec![0u32; d];
    let mut angles = vec![0.0f64; d];
    loop {
        for (a, &k) in angles.iter_mut().zip(&idx) {
            *a = k as f64 / n as f64;
        }
        visit(&idx, &angles);
        let mut carry = d;
        for j in (0..d).rev() {
            idx[j] += 1;
            if idx[j] < n {
                carry = j;
                break;
            }
            idx[j] = 0;
        }
        if carry == d {
            break;
        }
    }
}

/// Certify `V_C(f)` against the torus on a uniform `grid^d` lattice.
///
/// Returns `CertifiedNoZero` when the grid minimum of `|f|` beats the
/// Lipschitz slack, otherwise refines the best node by damped Gauss-Newton
/// on `|f|^2` and reports `WitnessFound` if the residual drops below
/// `witness_tol`, `Inconclusive` otherwise (the caller may enlarge the grid).
pub fn certify_no_torus_zero(
    f: &LaurentPoly,
    grid: u32,
    witness_tol: f64,
) -> Result<TorusCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if grid < 2 {
        return Err(Error::InvalidInput("grid must be at least 2".into()));
    }
    if grid > MAX_GRID {
        return Err(Error::GridBudget {
            requested: grid,
            max: MAX_GRID,
        });
    }
    let d = f.dim();
    let total = (grid as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if total > MAX_GRID_POINTS {
        return Err(Error::GridBudget {
            requested: grid,
            max: MAX_GRID,
        });
    }

    let lip = lipschitz_bound(f)?;
    let mut min_modulus = f64::INFINITY;
    let mut best = vec![0.0f64; d];
    for_each_grid_node(d, grid, |_, angles| {
        let v = evaluate_at_angles(f, angles).norm();
        if v < min_modulus {
            min_modulus = v;
            best.copy_from_slice(angles);
        }
    });

    let slack = lip * (d as f64).sqrt() / (2.0 * grid as f64);
    if min_modulus > slack {
        return Ok(TorusCertificate {
            status: TorusStatus::CertifiedNoZero,
            grid_size: grid,
            min_modulus,
            lipschitz_bound: lip,
            witness: None,
        });
    }

    let (point, residual) = refine_witness(f, &best);
    if residual < witness_tol {
        return Ok(TorusCertificate {
            status: TorusStatus::WitnessFound,
            grid_size: grid,
            min_modulus,
            lipschitz_bound: lip,
            witness: Some(TorusWitness {
                point: TorusPoint { angles: point },
                residual,
            }),
        });
    }
    Ok(TorusCertificate {
        status: TorusStatus::Inconclusive,
        grid_size: grid,
        min_modulus,
        lipschitz_bound: lip,
        witness: Some(TorusWitness {
            point: TorusPoint { angles: point },
            residual,
        }),
    })
}

/// Damped Gauss-Newton descent on `|f|^2` from `start`, 100-iteration budget
/// with step halving. Returns the refined angles (reduced mod 1) and `|f|`.
fn refine_witness(f: &LaurentPoly, start: &[f64]) -> (Vec<f64>, f64) {
    let d = start.len();
    let mut theta = start.to_vec();
    let mut value = evaluate_at_angles(f, &theta);
    for _ in 0..100 {
        if value.norm_sqr() == 0.0 {
            break;
        }
        let grad = grad_at_angles(f, &theta);
        // residual r = (Re f, Im f); J[.][j] = (Re df/dtheta_j, Im df/dtheta_j)
        let mut jtj = vec![vec![0.0f64; d]; d];
        let mut jtr = vec![0.0f64; d];
        for a in 0..d {
            jtr[a] = grad[a].re * value.re + grad[a].im * value.im;
            for b in 0..d {
                jtj[a][b] = grad[a].re * grad[b].re + grad[a].im * grad[b].im;
            }
        }
        let step = match solve_small(&mut jtj, &mut jtr) {
            Some(s) => s,
            None => {
                // singular normal equations: fall back to scaled gradient
                let g2: f64 = grad.iter().map(|g| g.norm_sqr()).sum();
                if g2 == 0.0 {
                    break;
                }
                grad.iter()
                    .map(|g| (g.re * value.re + g.im * value.im) / g2)
                    .collect()
            }
        };
        let mut alpha = 1.0f64;
        let mut improved = false;
        for _ in 0..30 {
            let cand: Vec<f64> = theta
                .iter()
                .zip(&step)
                .map(|(t, s)| (t - alpha * s).rem_euclid(1.0))
                .collect();
            let v = evaluate_at_angles(f, &cand);
            if v.norm_sqr() < value.norm_sqr() {
                theta = cand;
                value = v;
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (theta, value.norm())
}

/// Solve the small positive semidefinite system `A x = b` in place.
/// Returns `None` when a pivot degenerates.
fn solve_small(a: &mut [Vec<f64>], b: &mut [f64]) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let mut piv = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0f64; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in col + 1..n {
            s -= a[col][k] * x[k];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}

/// Search tuples of roots of unity of order at most `max_order` for an exact
/// zero of `f`.
///
/// Candidates are enumerated deterministically (denominators ascending, then
/// numerators, lexicographic across coordinates). A candidate with component
/// angles `a_i/n_i` is verified by mapping `u_i -> t^(a_i L / n_i)` with
/// `L = lcm(n_i)` and reducing exactly in `Z[t]/Phi_L(t)`: a zero is declared
/// only when the reduction vanishes identically.
pub fn roots_of_unity_witness(
    f: &LaurentPoly,
    max_order: u32,
) -> Result<Option<RootsOfUnityWitness>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if max_order < 1 {
        return Err(Error::InvalidInput("max_order must be at least 1".into()));
    }
    let d = f.dim();
    let mut fractions: Vec<(u64, u64)> = Vec::new();
    for n in 1..=max_order as u64 {
        for a in 0..n {
            if num_integer::gcd(a, n) == 1 || (a == 0 && n == 1) {
                fractions.push((a, n));
            }
        }
    }

    let mut phi_cache: std::collections::BTreeMap<u64, UnivariateIntPoly> =
        std::collections::BTreeMap::new();

    let mut pick = vec![0usize; d];
    loop {
        let tuple: Vec<(u64, u64)> = pick.iter().map(|&i| fractions[i]).collect();
        let lcm = tuple.iter().fold(1u64, |acc, &(_, n)| acc.lcm(&n));
        if exact_zero_at_tuple(f, &tuple, lcm, &mut phi_cache) {
            return Ok(Some(RootsOfUnityWitness {
                angles: tuple,
                order_lcm: lcm,
            }));
        }
        let mut carry = d;
        for j in (0..d).rev() {
            pick[j] += 1;
            if pick[j] < fractions.len() {
                carry = j;
                break;
            }
            pick[j] = 0;
        }
        if carry == d {
            break;
        }
    }
    Ok(None)
}

fn exact_zero_at_tuple(
    f: &LaurentPoly,
    tuple: &[(u64, u64)],
    lcm: u64,
    phi_cache: &mut std::collections::BTreeMap<u64, UnivariateIntPoly>,
) -> bool {
    let l = lcm as i64;
    let exps: Vec<i64> = tuple.iter().map(|&(a, n)| (a * (lcm / n)) as i64).collect();
    let mut acc = vec![BigInt::zero(); lcm as usize];
    for (m, c) in f.terms() {
        let mut e: i64 = 0;
        for (&mi, &ei) in m.exponents().iter().zip(&exps) {
            e = (e + (mi.rem_euclid(l)) * ei) % l;
        }
        acc[e.rem_euclid(l) as usize] += c;
    }
    if acc.iter().all(|c| c.is_zero()) {
        return true;
    }
    let phi = phi_cache
        .entry(lcm)
        .or_insert_with(|| cyclotomic(lcm))
        .clone();
    let poly = UnivariateIntPoly::from_coeffs(acc);
    poly_rem_monic(&poly, &phi).is_zero()
}

/// Remainder of `a` modulo the monic polynomial `b`. Exact integer division.
fn poly_rem_monic(a: &UnivariateIntPoly, b: &UnivariateIntPoly) -> UnivariateIntPoly {
    let db = b.degree().expect("monic divisor is nonzero");
    let mut rem = a.coeffs().to_vec();
    while rem.len() > db {
        let top = rem.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = rem.len() - db;
        for i in 0..db {
            let delta = &top * &b.coeffs()[i];
            rem[k + i] -= delta;
        }
    }
    UnivariateIntPoly::from_coeffs(rem)
}

/// Single-resolution quadrature average for `d >= 2`: the mean over the
/// `(d-1)`-dimensional uniform grid (size `n` per axis) of the 1-D log Mahler
/// measure of the `u1`-slice of `f`. Returns
/// `(average, mean slice error bound, perturbed node count)`.
pub fn quadrature_average(f: &LaurentPoly, n: u32) -> Result<(f64, f64, u32)> {
    let d = f.dim();
    if d < 2 {
        return Err(Error::InvalidInput(
            "quadrature_average requires d >= 2".into(),
        ));
    }
    let outer = d - 1;
    let nodes = (n as u64).checked_pow(outer as u32).unwrap_or(u64::MAX);
    if nodes > MAX_GRID_POINTS {
        return Err(Error::GridBudget {
            requested: n,
            max: MAX_OUTER_GRID,
        });
    }

    // u1-exponent range of the support (slice degree is fixed across nodes)
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (m, _) in f.terms() {
        lo = lo.min(m.exponents()[0]);
        hi = hi.max(m.exponents()[0]);
    }
    let width = (hi - lo) as usize + 1;
    let scale = 1.0 + f.coeff_mass();
    let degenerate_tol = 1e-12 * scale;

    let mut sum = 0.0f64;
    let mut err_sum = 0.0f64;
    let mut perturbed = 0u32;
    let mut failure: Option<Error> = None;

    for_each_grid_node(outer, n, |_, rest_angles| {
        if failure.is_some() {
            return;
        }
        let mut angles = rest_angles.to_vec();
        let mut slice = slice_coeffs(f, lo, width, &angles);
        if slice.iter().all(|c| c.norm() < degenerate_tol) {
            // degenerate slice: a u1-free factor vanishes here; nudge the
            // node by half a step
            perturbed += 1;
            for a in angles.iter_mut() {
                *a = (*a + 0.5 / n as f64).rem_euclid(1.0);
            }
            slice = slice_coeffs(f, lo, width, &angles);
        }
        match roots::mahler_1d(&slice, SLICE_TOL) {
            Ok(Mahler1d {
                log_mahler,
                error_bound,
            }) => {
                sum += log_mahler;
                err_sum += error_bound;
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let count = nodes as f64;
    Ok((sum / count, err_sum / count, perturbed))
}

/// Coefficients of `f` seen as a polynomial in `u1` with the remaining
/// variables frozen at the given angles (the `u1` angle slot is ignored).
fn slice_coeffs(f: &LaurentPoly, lo: i64, width: usize, rest_angles: &[f64]) -> Vec<Complex64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); width];
    for (m, c) in f.terms() {
        let mut phase = 0.0f64;
        for (j, &e) in m.exponents().iter().enumerate().skip(1) {
            phase += (e as f64) * rest_angles[j - 1];
        }
        let unit = Complex64::from_polar(1.0, two_pi * phase.rem_euclid(1.0));
        coeffs[(m.exponents()[0] - lo) as usize] +=
            unit * c.to_f64().unwrap_or(f64::INFINITY);
    }
    coeffs
}

/// Logarithmic Mahler measure of `f` (topological entropy is its absolute
/// value).
///
/// d = 1 uses the exact-root route on the based integer polynomial. For
/// d >= 2 the last `d-1` variables run over a uniform outer grid, each slice
/// is measured by [`roots::mahler_1d`], and the grid is doubled until the
/// successive difference plus mean slice error drops below `tol` or the
/// doubling cap is reached.
pub fn mahler_multi(f: &LaurentPoly, outer_grid: u32, tol: f64) -> Result<EntropyResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    if f.dim() == 1 {
        let (_, based) = f.translate_to_base()?;
        let coeffs = based.to_univariate()?.to_complex_coeffs();
        let m = roots::mahler_1d(&coeffs, tol.max(1e-12))?;
        let error_estimate = m.error_bound.max(-m.log_mahler);
        return Ok(EntropyResult {
            log_mahler: m.log_mahler,
            error_estimate,
            method: EntropyMethod::Roots1D,
            grid_size: 0,
            perturbed_nodes: 0,
        });
    }

    if outer_grid < 2 {
        return Err(Error::InvalidInput("outer grid must be at least 2".into()));
    }
    let mut n = outer_grid.min(MAX_OUTER_GRID);
    let (mut prev, _, mut perturbed) = quadrature_average(f, n)?;
    loop {
        let next_n = (n * 2).min(MAX_OUTER_GRID);
        if next_n == n {
            // cap reached without another doubling available
            return Ok(EntropyResult {
                log_mahler: prev,
                error_estimate: (2.0 * SLICE_TOL).max(-prev),
                method: EntropyMethod::IteratedQuadrature,
                grid_size: n,
                perturbed_nodes: perturbed,
            });
        }
        let (cur, slice_err, p) = quadrature_average(f, next_n)?;
        perturbed += p;
        let err = (cur - prev).abs() + slice_err;
        if err <= tol || next_n >= MAX_OUTER_GRID {
            return Ok(EntropyResult {
                log_mahler: cur,
                error_estimate: err.max(-cur),
                method: EntropyMethod::IteratedQuadrature,
                grid_size: next_n,
                perturbed_nodes: perturbed,
            });
        }
        prev = cur;
        n = next_n;
    }
}

/// Write the `|f|` grid as CSV: columns `theta1,...,thetad,modulus`.
pub fn write_modulus_grid_csv(
    f: &LaurentPoly,
    grid: u32,
    out: &mut dyn Write,
) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if grid < 2 || grid > MAX_GRID {
        return Err(Error::GridBudget {
            requested: grid,
            max: MAX_GRID,
        });
    }
    let d = f.dim();
    let total = (grid as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if total > MAX_GRID_POINTS {
        return Err(Error::GridBudget {
            requested: grid,
            max: MAX_GRID,
        });
    }
    let header: Vec<String> = (1..=d).map(|i| format!("theta{i}")).collect();
    writeln!(out, "{},modulus", header.join(","))
        .map_err(|e| Error::InvalidInput(format!("csv write failed: {e}")))?;
    let mut io_err = None;
    for_each_grid_node(d, grid, |_, angles| {
        if io_err.is_some() {
            return;
        }
        let v = evaluate_at_angles(f, angles).norm();
        let cols: Vec<String> = angles.iter().map(|a| format!("{a:.12}")).collect();
        if let Err(e) = writeln!(out, "{},{v:.12e}", cols.join(",")) {
            io_err = Some(Error::InvalidInput(format!("csv write failed: {e}")));
        }
    });
    match io_err {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn poly(s: &str) -> LaurentPoly {
        parse_poly(s, None).unwrap()
    }

    #[test]
    fn lipschitz_constant_is_zero() {
        assert_eq!(lipschitz_bound(&poly("5")).unwrap(), 0.0);
    }

    #[test]
    fn lipschitz_furstenberg() {
        let l = lipschitz_bound(&poly("3-2*u1")).unwrap();
        assert!((l - 4.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn lipschitz_ledrappier() {
        let l = lipschitz_bound(&poly("1+u1+u2")).unwrap();
        assert!((l - 4.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn certify_furstenberg() {
        let cert = certify_no_torus_zero(&poly("3-2*u1"), 64, DEFAULT_WITNESS_TOL).unwrap();
        assert_eq!(cert.status, TorusStatus::CertifiedNoZero);
        assert!((cert.min_modulus - 1.0).abs() < 1e-12);
    }

    #[test]
    fn certify_full_shift_term() {
        let cert = certify_no_torus_zero(&poly("2*u1"), 64, DEFAULT_WITNESS_TOL).unwrap();
        assert_eq!(cert.status, TorusStatus::CertifiedNoZero);
        assert!((cert.min_modulus - 2.0).abs() < 1e-12);
    }

    #[test]
    fn certify_ledrappier_finds_witness() {
        let cert = certify_no_torus_zero(&poly("1+u1+u2"), 64, DEFAULT_WITNESS_TOL).unwrap();
        assert_eq!(cert.status, TorusStatus::WitnessFound);
        let w = cert.witness.unwrap();
        assert!(w.residual < DEFAULT_WITNESS_TOL);
        let a = &w.point.angles;
        let near = |x: f64, y: f64| (x - y).abs() < 1e-6;
        assert!(
            (near(a[0], 1.0 / 3.0) && near(a[1], 2.0 / 3.0))
                || (near(a[0], 2.0 / 3.0) && near(a[1], 1.0 / 3.0)),
            "witness at {a:?}"
        );
    }

    #[test]
    fn rou_witness_ledrappier() {
        let w = roots_of_unity_witness(&poly("1+u1+u2"), 3).unwrap().unwrap();
        assert_eq!(w.order_lcm, 3);
        assert!(
            w.angles == vec![(1, 3), (2, 3)] || w.angles == vec![(2, 3), (1, 3)],
            "witness {:?}",
            w.angles
        );
    }

    #[test]
    fn rou_witness_minus_one() {
        let w = roots_of_unity_witness(&poly("1+u1"), 2).unwrap().unwrap();
        assert_eq!(w.angles, vec![(1, 2)]);
    }

    #[test]
    fn rou_witness_none_for_furstenberg() {
        assert!(roots_of_unity_witness(&poly("3-2*u1"), 12).unwrap().is_none());
    }

    #[test]
    fn mahler_furstenberg_roots_route() {
        let e = mahler_multi(&poly("3-2*u1"), 256, 1e-9).unwrap();
        assert_eq!(e.method, EntropyMethod::Roots1D);
        assert!((e.log_mahler - 3.0f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn mahler_of_monomial_is_zero() {
        let e = mahler_multi(&poly("u1"), 256, 1e-9).unwrap();
        assert!(e.log_mahler.abs() < 1e-12);
    }

    #[test]
    fn mahler_ledrappier_quadrature() {
        let e = mahler_multi(&poly("1+u1+u2"), 256, 1e-4).unwrap();
        assert_eq!(e.method, EntropyMethod::IteratedQuadrature);
        assert!((e.log_mahler - 0.3230659).abs() < 1e-4, "{}", e.log_mahler);
        assert!(e.log_mahler + e.error_estimate >= 0.0);
    }

    #[test]
    fn mahler_full_shift_exact() {
        // +-k u^m has log M = log |k| exactly
        for s in ["2*u1*u2", "-3*u1^2"] {
            let f = parse_poly(s, Some(2)).unwrap();
            let e = mahler_multi(&f, 64, 1e-9).unwrap();
            let k: f64 = if s.starts_with('-') { 3.0 } else { 2.0 };
            assert!((e.log_mahler - k.ln()).abs() < 1e-12, "{s}: {}", e.log_mahler);
        }
    }

    #[test]
    fn mahler_univariate_in_two_vars_matches_1d() {
        let f2 = parse_poly("3-2*u1", Some(2)).unwrap();
        let e2 = mahler_multi(&f2, 64, 1e-6).unwrap();
        let e1 = mahler_multi(&poly("3-2*u1"), 64, 1e-9).unwrap();
        assert!(
            (e2.log_mahler - e1.log_mahler).abs() <= e2.error_estimate + e1.error_estimate + 1e-9
        );
    }

    #[test]
    fn mahler_permutation_invariance() {
        let f = poly("1+u1+u2^2");
        let g = f.permute_variables(&[1, 0]).unwrap(); // 1 + u2 + u1^2
        let ef = mahler_multi(&f, 128, 1e-4).unwrap();
        let eg = mahler_multi(&g, 128, 1e-4).unwrap();
        assert!(
            (ef.log_mahler - eg.log_mahler).abs()
                <= ef.error_estimate + eg.error_estimate + 1e-6,
            "{} vs {}",
            ef.log_mahler,
            eg.log_mahler
        );
    }

    #[test]
    fn certify_never_contradicts_exact_witness() {
        for s in ["1+u1+u2", "1+u1", "u1+u2", "1+u1+u2+u1*u2", "2-u1-u2"] {
            let f = parse_poly(s, Some(2)).unwrap();
            let witness = roots_of_unity_witness(&f, 6).unwrap();
            let cert = certify_no_torus_zero(&f, 64, DEFAULT_WITNESS_TOL).unwrap();
            if witness.is_some() {
                assert_ne!(
                    cert.status,
                    TorusStatus::CertifiedNoZero,
                    "{s}: certificate contradicts exact witness"
                );
            }
        }
    }

    #[test]
    fn degenerate_slice_is_perturbed() {
        // (u2 - 1) * (u1 + 3): the theta2 = 0 slice vanishes identically
        let f = poly("u1*u2 + 3*u2 - u1 - 3");
        let e = mahler_multi(&f, 64, 1e-3).unwrap();
        assert!(e.perturbed_nodes > 0);
        // M(f) = M(u2 - 1) * M(u1 + 3) = 3
        assert!((e.log_mahler - 3.0f64.ln()).abs() < 0.05, "{}", e.log_mahler);
    }

    #[test]
    fn csv_grid_has_header_and_rows() {
        let mut buf = Vec::new();
        write_modulus_grid_csv(&poly("1+u1+u2"), 4, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "theta1,theta2,modulus");
        assert_eq!(lines.count(), 16);
    }
}

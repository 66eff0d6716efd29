//! Sparse exact arithmetic for integer Laurent polynomials in `d` commuting
//! variables `u1, ..., ud` (the group ring of Z^d over Z).
//!
//! A [`LaurentPoly`] is a finite map from exponent vectors to nonzero
//! arbitrary-precision coefficients. All ring operations are exact. The
//! canonical term order compares exponent vectors from the last coordinate
//! down to the first (colexicographic), so for d = 2 the constant term sorts
//! first, then powers of `u1`, then terms involving `u2`. This is the order
//! used for serialization and display.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest exponent magnitude accepted when building a polynomial.
/// Guards pathological inputs; raise via [`LaurentPoly::from_terms_with_limit`].
pub const DEFAULT_EXPONENT_LIMIT: i64 = 1_000_000;

/// Exponent vector of a single term, one entry per variable.
///
/// Entries may be negative. The ordering is colexicographic: the last
/// coordinate is most significant. This is a total order, which makes the
/// term map canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Euclidean norm of the exponent vector.
    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .map(|&e| (e as f64) * (e as f64))
            .sum::<f64>()
            .sqrt()
    }
}

impl From<Vec<i64>> for Monomial {
    fn from(v: Vec<i64>) -> Self {
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Colexicographic: last coordinate most significant. Vectors of
        // unequal length never coexist inside one polynomial; fall back to
        // length comparison so the order stays total.
        match self.0.len().cmp(&other.0.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse integer Laurent polynomial in `dim` variables.
///
/// Invariants: no zero coefficients are stored, every monomial has length
/// `dim`, and the zero polynomial is the empty term map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial in `dim` variables.
    pub fn zero(dim: usize) -> Self {
        LaurentPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(dim: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![0; dim]), c);
        }
        LaurentPoly { dim, terms }
    }

    /// The single variable `u{index}` (1-based) in `dim` variables.
    pub fn variable(dim: usize, index: usize) -> Result<Self> {
        if index == 0 || index > dim {
            return Err(Error::InvalidInput(format!(
                "variable index {index} out of range 1..={dim}"
            )));
        }
        let mut exps = vec![0; dim];
        exps[index - 1] = 1;
        Self::from_terms(dim, vec![(Monomial(exps), BigInt::one())])
    }

    /// Build a polynomial from raw `(monomial, coefficient)` pairs.
    ///
    /// Duplicate monomials are summed, zero coefficients dropped. Fails on a
    /// dimension mismatch or an exponent beyond [`DEFAULT_EXPONENT_LIMIT`].
    pub fn from_terms(
        dim: usize,
        raw: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        Self::from_terms_with_limit(dim, raw, DEFAULT_EXPONENT_LIMIT)
    }

    pub fn from_terms_with_limit(
        dim: usize,
        raw: impl IntoIterator<Item = (Monomial, BigInt)>,
        limit: i64,
    ) -> Result<Self> {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in raw {
            if m.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                });
            }
            if let Some(&e) = m.exponents().iter().find(|e| e.abs() > limit) {
                return Err(Error::ExponentLimit { exponent: e, limit });
            }
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The single `(monomial, coefficient)` pair if this is a one-term polynomial.
    pub fn single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// True for `±u^m`: a single term with coefficient ±1 (a unit of the ring).
    pub fn is_unit_monomial(&self) -> bool {
        self.single_term()
            .map(|(_, c)| c.abs().is_one())
            .unwrap_or(false)
    }

    /// Sum of absolute coefficient values, as f64.
    pub fn coeff_mass(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            dim: self.dim,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<i64> = ma
                    .exponents()
                    .iter()
                    .zip(mb.exponents())
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&e) = exps.iter().find(|e| e.abs() > DEFAULT_EXPONENT_LIMIT) {
                    return Err(Error::ExponentLimit {
                        exponent: e,
                        limit: DEFAULT_EXPONENT_LIMIT,
                    });
                }
                let entry = terms.entry(Monomial(exps)).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            dim: self.dim,
            terms,
        })
    }

    /// Multiply by the single term `c · u^m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Result<Self> {
        let single = LaurentPoly::from_terms(self.dim, vec![(m.clone(), c.clone())])?;
        self.mul(&single)
    }

    /// Evaluate at a point of (C*)^d in double precision.
    ///
    /// Each term costs one complex power per variable plus one multiply; the
    /// accumulated relative error is bounded by a small multiple of machine
    /// epsilon times the number of operations, so on the unit torus the
    /// absolute error is at most ~(total |m| per term + 2) · eps per unit of
    /// coefficient mass.
    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64> {
        if z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: z.len(),
            });
        }
        for (i, zi) in z.iter().enumerate() {
            if zi.norm_sqr() == 0.0 {
                return Err(Error::ZeroComponent(i));
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut term = Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
            for (zi, &e) in z.iter().zip(m.exponents()) {
                term *= zi.powi(e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point on the real axis.
    ///
    /// This is the exact path used for d = 1 root checks such as verifying
    /// `f(3/2) = 0` for `f = 3 - 2*u1`.
    pub fn evaluate_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: point.len(),
            });
        }
        for (i, p) in point.iter().enumerate() {
            if p.is_zero() {
                return Err(Error::ZeroComponent(i));
            }
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (p, &e) in point.iter().zip(m.exponents()) {
                term *= rational_pow(p, e);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Factor `f = u^m · f'` where `m` is the componentwise minimum of the
    /// support, so `f'` has all exponents >= 0 and attains 0 in every
    /// coordinate.
    pub fn translate_to_base(&self) -> Result<(Monomial, LaurentPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut min = vec![i64::MAX; self.dim];
        for m in self.terms.keys() {
            for (lo, &e) in min.iter_mut().zip(m.exponents()) {
                *lo = (*lo).min(e);
            }
        }
        let based = LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let exps: Vec<i64> = m
                        .exponents()
                        .iter()
                        .zip(&min)
                        .map(|(e, lo)| e - lo)
                        .collect();
                    (Monomial(exps), c.clone())
                })
                .collect(),
        };
        Ok((Monomial(min), based))
    }

    /// Detect a support lying on a single lattice line.
    ///
    /// If the support sits on `{base + k·direction : k = 0, 1, ...}` for a
    /// primitive integer `direction`, return the direction, the base point,
    /// and the univariate polynomial `g` with `g_k = f_{base + k·direction}`,
    /// so that `f = u^base · g(u^direction)` exactly. The direction is made
    /// canonical by requiring its first nonzero entry positive. A one-term
    /// polynomial collapses along the first unit vector with constant `g`.
    ///
    /// Returns `None` when the support is not collinear (or `f` is zero).
    pub fn collapse_collinear(&self) -> Option<CollinearCollapse> {
        use crate::univariate::UnivariateIntPoly;

        if self.is_zero() {
            return None;
        }
        let support: Vec<&Monomial> = self.terms.keys().collect();
        if support.len() == 1 {
            let mut dir = vec![0i64; self.dim];
            dir[0] = 1;
            return Some(CollinearCollapse {
                direction: Monomial(dir),
                base: support[0].clone(),
                poly: UnivariateIntPoly::from_coeffs(vec![self.terms[support[0]].clone()]),
            });
        }

        let p0 = support[0];
        let delta: Vec<i64> = support[1]
            .exponents()
            .iter()
            .zip(p0.exponents())
            .map(|(a, b)| a - b)
            .collect();
        let mut dir = primitive_vector(&delta)?;
        // Canonical orientation: first nonzero entry positive.
        if dir.iter().find(|&&e| e != 0).map(|&e| e < 0).unwrap_or(false) {
            for e in &mut dir {
                *e = -*e;
            }
        }
        let pivot = dir.iter().position(|&e| e != 0)?;

        let mut ks = Vec::with_capacity(support.len());
        for m in &support {
            let diff: Vec<i64> = m
                .exponents()
                .iter()
                .zip(p0.exponents())
                .map(|(a, b)| a - b)
                .collect();
            if diff[pivot] % dir[pivot] != 0 {
                return None;
            }
            let k = diff[pivot] / dir[pivot];
            let on_line = diff
                .iter()
                .zip(&dir)
                .all(|(&d, &n)| k.checked_mul(n) == Some(d));
            if !on_line {
                return None;
            }
            ks.push(k);
        }

        let k_min = *ks.iter().min().expect("nonempty support");
        let base: Vec<i64> = p0
            .exponents()
            .iter()
            .zip(&dir)
            .map(|(e, n)| e + k_min * n)
            .collect();
        let degree = (*ks.iter().max().unwrap() - k_min) as usize;
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        for (m, k) in support.iter().zip(&ks) {
            coeffs[(k - k_min) as usize] = self.terms[*m].clone();
        }
        Some(CollinearCollapse {
            direction: Monomial(dir),
            base: Monomial(base),
            poly: UnivariateIntPoly::from_coeffs(coeffs),
        })
    }

    /// Inverse of [`collapse_collinear`]: expand `u^base · g(u^direction)`.
    pub fn expand_along(
        dim: usize,
        collapse: &CollinearCollapse,
    ) -> Result<LaurentPoly> {
        let mut raw = Vec::new();
        for (k, c) in collapse.poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exps: Vec<i64> = collapse
                .base
                .exponents()
                .iter()
                .zip(collapse.direction.exponents())
                .map(|(b, n)| b + (k as i64) * n)
                .collect();
            raw.push((Monomial(exps), c.clone()));
        }
        LaurentPoly::from_terms(dim, raw)
    }

    /// View a one-variable polynomial with nonnegative exponents as a dense
    /// univariate polynomial. Errors unless `dim == 1` and the polynomial is
    /// based (no negative exponents).
    pub fn to_univariate(&self) -> Result<crate::univariate::UnivariateIntPoly> {
        if self.dim != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: self.dim,
            });
        }
        let mut max_exp = 0i64;
        for m in self.terms.keys() {
            let e = m.exponents()[0];
            if e < 0 {
                return Err(Error::InvalidInput(
                    "negative exponent; translate to base first".into(),
                ));
            }
            max_exp = max_exp.max(e);
        }
        let mut coeffs = vec![BigInt::zero(); (max_exp as usize) + 1];
        for (m, c) in &self.terms {
            coeffs[m.exponents()[0] as usize] = c.clone();
        }
        Ok(crate::univariate::UnivariateIntPoly::from_coeffs(coeffs))
    }

    /// Embed into a larger dimension by padding exponent vectors with zeros.
    pub fn embedded_in(&self, dim: usize) -> LaurentPoly {
        assert!(dim >= self.dim, "cannot shrink dimension");
        LaurentPoly {
            dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.exponents().to_vec();
                    exps.resize(dim, 0);
                    (Monomial(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Apply a permutation of the variables: entry `i` of `perm` is the new
    /// position of variable `i`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<LaurentPoly> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: perm.len(),
            });
        }
        let raw: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0i64; self.dim];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                (Monomial(exps), c.clone())
            })
            .collect();
        LaurentPoly::from_terms(self.dim, raw)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::parse::format_poly(self))
    }
}

/// Result of [`LaurentPoly::collapse_collinear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearCollapse {
    /// Primitive lattice direction, first nonzero entry positive.
    pub direction: Monomial,
    /// Support point at parameter 0 along the line.
    pub base: Monomial,
    /// Univariate coefficients along the line; constant term nonzero.
    pub poly: crate::univariate::UnivariateIntPoly,
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if exp > 0 {
        base.clone()
    } else {
        base.recip()
    };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Divide an integer vector by the gcd of its entries. `None` for the zero vector.
fn primitive_vector(v: &[i64]) -> Option<Vec<i64>> {
    let mut g: i64 = 0;
    for &e in v {
        g = num_integer::gcd(g, e.abs());
    }
    if g == 0 {
        return None;
    }
    Some(v.iter().map(|&e| e / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    fn poly(s: &str) -> LaurentPoly {
        parse::parse_poly(s, None).unwrap()
    }

    #[test]
    fn normalize_merges_duplicates() {
        let f = LaurentPoly::from_terms(
            2,
            vec![
                (Monomial::new(vec![0, 0]), BigInt::from(1)),
                (Monomial::new(vec![0, 0]), BigInt::from(2)),
            ],
        )
        .unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(&Monomial::new(vec![0, 0])), BigInt::from(3));
    }

    #[test]
    fn normalize_cancels_to_zero() {
        let f = LaurentPoly::from_terms(
            2,
            vec![
                (Monomial::new(vec![1, 0]), BigInt::from(1)),
                (Monomial::new(vec![1, 0]), BigInt::from(-1)),
            ],
        )
        .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn normalize_ledrappier() {
        // f = 1 + u1 + u2 keeps its three distinct terms
        let f = LaurentPoly::from_terms(
            2,
            vec![
                (Monomial::new(vec![0, 0]), BigInt::from(1)),
                (Monomial::new(vec![1, 0]), BigInt::from(1)),
                (Monomial::new(vec![0, 1]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f, poly("1+u1+u2"));
    }

    #[test]
    fn normalize_rejects_mixed_dimensions() {
        let err = LaurentPoly::from_terms(
            2,
            vec![
                (Monomial::new(vec![0, 0]), BigInt::from(1)),
                (Monomial::new(vec![1]), BigInt::from(1)),
            ],
        );
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mul_identity() {
        let f = poly("1+u1+u2");
        let one = LaurentPoly::constant(2, 1);
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn mul_unit_monomials_cancel() {
        let u = poly("u1");
        let uinv = poly("u1^-1");
        assert_eq!(u.mul(&uinv).unwrap(), LaurentPoly::constant(1, 1));
    }

    #[test]
    fn mul_difference_of_squares() {
        // (1+u1)(1-u1) = 1 - u1^2, expanded by hand
        let a = poly("1+u1");
        let b = poly("1-u1");
        assert_eq!(a.mul(&b).unwrap(), poly("1-u1^2"));
    }

    #[test]
    fn evaluate_ledrappier_at_cube_roots() {
        // omega = e^{2 pi i/3}: f(omega, omega^2) = 1 + omega + omega^2 = 0
        let f = poly("1+u1+u2");
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let v = f.evaluate(&[omega, omega * omega]).unwrap();
        assert!(v.norm() < 1e-12, "|f(w,w^2)| = {}", v.norm());
    }

    #[test]
    fn evaluate_rational_exact_root() {
        let f = poly("3-2*u1");
        let x = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert!(f.evaluate_rational(&[x]).unwrap().is_zero());
    }

    #[test]
    fn evaluate_constant() {
        let f = poly("5");
        let z = Complex64::new(0.3, -1.7);
        let v = f.evaluate(&[z]).unwrap();
        assert_eq!(v, Complex64::new(5.0, 0.0));
    }

    #[test]
    fn evaluate_rejects_zero_component() {
        let f = poly("u1^-1");
        assert!(matches!(
            f.evaluate(&[Complex64::new(0.0, 0.0)]),
            Err(Error::ZeroComponent(0))
        ));
    }

    #[test]
    fn translate_negative_exponents() {
        // u1 u2^-1 + u2^-1 = u^(0,-1) (u1 + 1)
        let f = poly("u1*u2^-1 + u2^-1");
        let (m, based) = f.translate_to_base().unwrap();
        assert_eq!(m, Monomial::new(vec![0, -1]));
        assert_eq!(based, poly("1+u1").embedded_in(2));
    }

    #[test]
    fn translate_already_based() {
        let f = poly("1+u1+u2");
        let (m, based) = f.translate_to_base().unwrap();
        assert!(m.is_origin());
        assert_eq!(based, f);
    }

    #[test]
    fn translate_monomial() {
        let f = poly("2*u1^3");
        let (m, based) = f.translate_to_base().unwrap();
        assert_eq!(m, Monomial::new(vec![3]));
        assert_eq!(based, LaurentPoly::constant(1, 2));
    }

    #[test]
    fn translate_recombines_exactly() {
        let f = poly("3*u1^-2*u2 - u1*u2^-3 + 7");
        let (m, based) = f.translate_to_base().unwrap();
        let back = based.mul_term(&m, &BigInt::one()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn collapse_rejects_triangle_support() {
        let f = poly("1+u1+u2");
        assert!(f.collapse_collinear().is_none());
    }

    #[test]
    fn collapse_two_term_line() {
        // u1 + u2 sits on the line (0,1) + k(1,-1); g = 1 + t
        let f = poly("u1+u2");
        let c = f.collapse_collinear().unwrap();
        assert_eq!(c.direction, Monomial::new(vec![1, -1]));
        assert_eq!(c.base, Monomial::new(vec![0, 1]));
        assert_eq!(c.poly.coeffs(), &[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(LaurentPoly::expand_along(2, &c).unwrap(), f);
    }

    #[test]
    fn collapse_even_powers() {
        let f = poly("1+u1^2+u1^4");
        let c = f.collapse_collinear().unwrap();
        assert_eq!(c.direction, Monomial::new(vec![1]));
        assert!(c.base.is_origin());
        assert_eq!(
            c.poly.coeffs(),
            &[
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn collapse_single_term() {
        let f = poly("2*u1^3*u2");
        let c = f.collapse_collinear().unwrap();
        assert_eq!(c.direction, Monomial::new(vec![1, 0]));
        assert_eq!(c.base, Monomial::new(vec![3, 1]));
        assert_eq!(c.poly.coeffs(), &[BigInt::from(2)]);
    }
}

//! Exact integer-polynomial machinery: subresultant gcd, squarefree parts,
//! Sturm root counting, and an exact count of distinct unit-circle roots.
//!
//! The unit-circle count works as follows. For squarefree `s`, every root of
//! `s` on `|t| = 1` satisfies `1/t = conj(t)`, which is again a root since the
//! coefficients are real, so all unit-circle roots divide
//! `h = gcd(s, reciprocal(s))`. The root set of `h` is closed under inversion,
//! hence `h` is self-reciprocal; after splitting off `t - 1` and `t + 1` the
//! remaining palindromic even part maps under `s = t + 1/t` to a real
//! polynomial whose roots in the open interval `(-2, 2)` correspond exactly to
//! conjugate pairs on the circle. Those are counted by a Sturm sequence, so
//! the final count is exact integer arithmetic throughout.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense integer polynomial, constant term first, no trailing zeros.
/// The zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivariateIntPoly {
    coeffs: Vec<BigInt>,
}

impl UnivariateIntPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UnivariateIntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariateIntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0))
            .collect()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UnivariateIntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative. Zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        g
    }

    /// Divide by the (positive) content, preserving the sign of the leading
    /// coefficient.
    pub fn primitive_signed(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        UnivariateIntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_signed();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Exact division; errors if `other` does not divide `self` in Z[t].
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (da, db) = (self.degree().unwrap(), other.degree().unwrap());
        if da < db {
            return Err(Error::InvalidInput("division is not exact".into()));
        }
        let lb = other.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = rem[k + db].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, &lb);
            if !r.is_zero() {
                return Err(Error::InvalidInput("division is not exact".into()));
            }
            for i in 0..=db {
                let delta = &q * &other.coeffs[i];
                rem[k + i] -= delta;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput("division is not exact".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: returns `r` with `lc(other)^(da-db+1) * self = q*other + r`.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let db = other.degree().expect("nonzero divisor");
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return self.clone(),
        };
        let lb = other.leading();
        let mut e = (da - db + 1) as i64;
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            let shifted = Self::monomial(lr, dr - db).mul(other);
            r = r.scale(&lb).sub(&shifted);
            e -= 1;
        }
        let mut scale = BigInt::one();
        for _ in 0..e {
            scale *= &lb;
        }
        r.scale(&scale)
    }

    /// Multiplicity of the rational root `x` (0 if not a root).
    pub fn root_multiplicity(&self, x: &BigRational) -> usize {
        let num = x.numer().clone();
        let den = x.denom().clone();
        // factor (den*t - num), primitive
        let factor = Self::from_coeffs(vec![-num, den]).primitive_signed();
        let mut g = self.clone();
        let mut mult = 0;
        while !g.is_zero() && g.eval_rational(x).is_zero() {
            g = g.exact_div(&factor).expect("root factor divides");
            mult += 1;
        }
        mult
    }
}

/// Exact gcd over Q scaled to a primitive integer polynomial with positive
/// leading coefficient. Subresultant pseudo-remainder sequence, so all
/// intermediate arithmetic stays in Z.
pub fn gcd_primitive(a: &UnivariateIntPoly, b: &UnivariateIntPoly) -> Result<UnivariateIntPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a.is_zero() {
        return Ok(b.primitive_positive());
    }
    if b.is_zero() {
        return Ok(a.primitive_positive());
    }
    let mut p = a.primitive_signed();
    let mut q = b.primitive_signed();
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    if q.degree() == Some(0) {
        return Ok(UnivariateIntPoly::one());
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = p.degree().unwrap() - q.degree().unwrap();
        let r = p.pseudo_rem(&q);
        if r.is_zero() {
            return Ok(q.primitive_positive());
        }
        if r.degree() == Some(0) {
            return Ok(UnivariateIntPoly::one());
        }
        p = q;
        // divide by g * h^delta (exact, by the subresultant theorem)
        let mut divisor = g.clone();
        for _ in 0..delta {
            divisor *= &h;
        }
        q = UnivariateIntPoly::from_coeffs(r.coeffs.iter().map(|c| c / &divisor).collect());
        g = p.leading();
        // h = g^delta * h^(1 - delta)
        if delta > 0 {
            let mut num = BigInt::one();
            for _ in 0..delta {
                num *= &g;
            }
            let mut den = BigInt::one();
            for _ in 0..delta - 1 {
                den *= &h;
            }
            h = num / den;
        }
    }
}

/// The product of the distinct irreducible factors: same roots, all simple.
/// Primitive with positive leading coefficient.
pub fn squarefree_part(g: &UnivariateIntPoly) -> Result<UnivariateIntPoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.degree() == Some(0) {
        return Ok(UnivariateIntPoly::one());
    }
    let d = gcd_primitive(g, &g.derivative())?;
    Ok(g.primitive_positive().exact_div(&d)?.primitive_positive())
}

/// `t^deg(g) * g(1/t)`: the coefficient list reversed. Requires `g(0) != 0`.
pub fn reciprocal(g: &UnivariateIntPoly) -> Result<UnivariateIntPoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "reciprocal requires a nonzero constant term; strip t-powers first".into(),
        ));
    }
    let mut coeffs = g.coeffs.clone();
    coeffs.reverse();
    Ok(UnivariateIntPoly::from_coeffs(coeffs))
}

fn sign_at(g: &UnivariateIntPoly, x: &BigRational) -> i8 {
    let v = g.eval_rational(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_chain(g: &UnivariateIntPoly) -> Vec<UnivariateIntPoly> {
    let mut chain = vec![g.primitive_signed()];
    let deriv = g.derivative();
    if deriv.is_zero() {
        return chain;
    }
    chain.push(deriv.primitive_signed());
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.degree().is_none() {
            break;
        }
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da < db {
            break;
        }
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // pseudo_rem multiplies by lc(b)^(da-db+1); flip so the stored element
        // is minus the true remainder times a positive constant.
        let mult_negative = b.leading().is_negative() && (da - db + 1) % 2 == 1;
        let next = if mult_negative { r } else { r.neg() };
        chain.push(next.primitive_signed());
    }
    chain
}

fn sign_changes(chain: &[UnivariateIntPoly], x: &BigRational) -> usize {
    let mut last: i8 = 0;
    let mut changes = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Exact number of real roots of squarefree `g` in the open interval `(a, b)`.
/// Errors if an endpoint is a root; see [`count_roots_open`] for the variant
/// that removes endpoint roots first.
pub fn sturm_count(g: &UnivariateIntPoly, a: &BigRational, b: &BigRational) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::InvalidInput("interval endpoints must satisfy a < b".into()));
    }
    if sign_at(g, a) == 0 {
        return Err(Error::EndpointRoot(a.to_string()));
    }
    if sign_at(g, b) == 0 {
        return Err(Error::EndpointRoot(b.to_string()));
    }
    let chain = sturm_chain(g);
    let va = sign_changes(&chain, a);
    let vb = sign_changes(&chain, b);
    if va < vb {
        return Err(Error::Inconsistency(
            "negative Sturm count; input was not squarefree".into(),
        ));
    }
    Ok(va - vb)
}

/// Root count on `(a, b)` for squarefree `g`, with rational endpoint roots
/// removed exactly (division by the corresponding primitive linear factor)
/// before counting, so endpoint collisions cannot occur.
pub fn count_roots_open(
    g: &UnivariateIntPoly,
    a: &BigRational,
    b: &BigRational,
) -> Result<usize> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = g.clone();
    for endpoint in [a, b] {
        while !g.is_zero() && g.eval_rational(endpoint).is_zero() {
            let factor = UnivariateIntPoly::from_coeffs(vec![
                -endpoint.numer().clone(),
                endpoint.denom().clone(),
            ])
            .primitive_signed();
            g = g.exact_div(&factor)?;
        }
    }
    if g.degree().map(|d| d == 0).unwrap_or(true) {
        return Ok(0);
    }
    sturm_count(&g, a, b)
}

/// Exact census of the distinct roots of `g` on the unit circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitCircleCertificate {
    /// Number of distinct roots on `|t| = 1`.
    pub count: usize,
    /// Multiplicity of the root `t = 1` in `g` (0 if absent).
    pub mult_at_one: usize,
    /// Multiplicity of the root `t = -1` in `g` (0 if absent).
    pub mult_at_minus_one: usize,
    /// Number of non-real conjugate pairs on the circle.
    pub conjugate_pairs: usize,
}

/// Exact count of distinct unit-circle roots of `g`. Requires `g(0) != 0`
/// (strip monomial factors first).
pub fn unit_circle_roots(g: &UnivariateIntPoly) -> Result<UnitCircleCertificate> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "unit_circle_roots requires g(0) != 0; strip t-powers first".into(),
        ));
    }
    let one = BigRational::one();
    let minus_one = -BigRational::one();
    let mult_at_one = g.root_multiplicity(&one);
    let mult_at_minus_one = g.root_multiplicity(&minus_one);

    let s = squarefree_part(g)?;
    let r = reciprocal(&s)?;
    let mut h = gcd_primitive(&s, &r)?;
    if mult_at_one > 0 {
        h = h.exact_div(&UnivariateIntPoly::from_i64(&[-1, 1]))?;
    }
    if mult_at_minus_one > 0 {
        h = h.exact_div(&UnivariateIntPoly::from_i64(&[1, 1]))?;
    }

    let conjugate_pairs = match h.degree() {
        None | Some(0) => 0,
        Some(deg) => {
            if deg % 2 != 0 {
                return Err(Error::Inconsistency(
                    "self-reciprocal part has odd degree".into(),
                ));
            }
            let k = deg / 2;
            let coeffs = h.coeffs();
            for j in 0..=deg {
                if coeffs[j] != coeffs[deg - j] {
                    return Err(Error::Inconsistency(
                        "expected a palindromic self-reciprocal part".into(),
                    ));
                }
            }
            // q(s) = a_k + sum_{j=1}^{k} a_{k+j} * P_j(s) where P_j(t + 1/t) = t^j + t^-j
            let mut q = UnivariateIntPoly::from_coeffs(vec![coeffs[k].clone()]);
            let mut p_prev = UnivariateIntPoly::from_i64(&[2]); // P_0
            let mut p_cur = UnivariateIntPoly::from_i64(&[0, 1]); // P_1
            let shift = UnivariateIntPoly::from_i64(&[0, 1]);
            for j in 1..=k {
                q = q.add(&p_cur.scale(&coeffs[k + j]));
                let p_next = shift.mul(&p_cur).sub(&p_prev);
                p_prev = p_cur;
                p_cur = p_next;
            }
            let q = squarefree_part(&q)?;
            let two = BigRational::from_integer(BigInt::from(2));
            count_roots_open(&q, &(-two.clone()), &two)?
        }
    };

    Ok(UnitCircleCertificate {
        count: usize::from(mult_at_one > 0) + usize::from(mult_at_minus_one > 0)
            + 2 * conjugate_pairs,
        mult_at_one,
        mult_at_minus_one,
        conjugate_pairs,
    })
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// The n-th cyclotomic polynomial, by iterated exact division of `t^n - 1`
/// by the cyclotomics of the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> UnivariateIntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut memo: BTreeMap<u64, UnivariateIntPoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut coeffs = vec![BigInt::zero(); (d as usize) + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d as usize] = BigInt::one();
        let mut p = UnivariateIntPoly::from_coeffs(coeffs);
        for e in divisors(d) {
            if e < d {
                p = p.exact_div(&memo[&e]).expect("cyclotomic division is exact");
            }
        }
        memo.insert(d, p);
    }
    memo.remove(&n).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UnivariateIntPoly {
        UnivariateIntPoly::from_i64(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gcd_with_common_factor() {
        // gcd(t^2 - 1, t - 1) = t - 1
        assert_eq!(gcd_primitive(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(gcd_primitive(&p(&[1, 1]), &p(&[-1, 1])).unwrap(), p(&[1]));
    }

    #[test]
    fn gcd_strips_content() {
        // gcd(2t+2, 4t+4) = t+1
        assert_eq!(gcd_primitive(&p(&[2, 2]), &p(&[4, 4])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn gcd_large_degree_subresultant() {
        // (t^4 + 3t - 2)(t^3 - 7t + 1) shares exactly t^3 - 7t + 1 with
        // (t^3 - 7t + 1)(t^2 + 5)
        let a = p(&[-2, 3, 0, 0, 1]).mul(&p(&[1, -7, 0, 1]));
        let b = p(&[1, -7, 0, 1]).mul(&p(&[5, 0, 1]));
        assert_eq!(gcd_primitive(&a, &b).unwrap(), p(&[1, -7, 0, 1]));
    }

    #[test]
    fn squarefree_double_root() {
        // (t-1)^2 -> t-1
        assert_eq!(squarefree_part(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn squarefree_already_squarefree() {
        assert_eq!(squarefree_part(&p(&[1, 0, 1])).unwrap(), p(&[1, 0, 1]));
    }

    #[test]
    fn squarefree_shared_factor_with_derivative() {
        // t^3 - t^2 = t^2 (t-1) -> t^2 - t
        assert_eq!(squarefree_part(&p(&[0, 0, -1, 1])).unwrap(), p(&[0, -1, 1]));
    }

    #[test]
    fn reciprocal_reverses() {
        assert_eq!(reciprocal(&p(&[3, -2])).unwrap(), p(&[-2, 3]));
        assert_eq!(reciprocal(&p(&[1, 1, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(reciprocal(&p(&[1, 0, 0, 2])).unwrap(), p(&[2, 0, 0, 1]));
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        assert!(reciprocal(&p(&[0, 1])).is_err());
    }

    #[test]
    fn sturm_sqrt_two() {
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &rat(0, 1), &rat(2, 1)).unwrap(), 1);
    }

    #[test]
    fn sturm_no_real_roots() {
        assert_eq!(
            sturm_count(&p(&[1, 0, 1]), &rat(-10, 1), &rat(10, 1)).unwrap(),
            0
        );
    }

    #[test]
    fn sturm_three_roots() {
        // t^3 - 3t has roots 0, +-sqrt(3), all inside (-2, 2)
        assert_eq!(
            sturm_count(&p(&[0, -3, 0, 1]), &rat(-2, 1), &rat(2, 1)).unwrap(),
            3
        );
    }

    #[test]
    fn sturm_rejects_endpoint_root() {
        assert!(matches!(
            sturm_count(&p(&[0, 1]), &rat(0, 1), &rat(1, 1)),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn open_count_removes_endpoint_roots() {
        // t(t^2 - 2): root at the endpoint 0 is excluded, sqrt(2) remains
        assert_eq!(
            count_roots_open(&p(&[0, -2, 0, 1]), &rat(0, 1), &rat(2, 1)).unwrap(),
            1
        );
    }

    #[test]
    fn sturm_partition_is_additive() {
        let g = p(&[0, -3, 0, 1]); // roots 0, +-sqrt(3)
        let whole = sturm_count(&g, &rat(-2, 1), &rat(2, 1)).unwrap();
        let left = sturm_count(&g, &rat(-2, 1), &rat(1, 2)).unwrap();
        let right = sturm_count(&g, &rat(1, 2), &rat(2, 1)).unwrap();
        assert_eq!(whole, left + right);
    }

    #[test]
    fn circle_count_furstenberg() {
        // 3 - 2t has its only root at 3/2, off the circle
        let cert = unit_circle_roots(&p(&[3, -2])).unwrap();
        assert_eq!(cert.count, 0);
    }

    #[test]
    fn circle_count_minus_one() {
        let cert = unit_circle_roots(&p(&[1, 1])).unwrap();
        assert_eq!(cert.count, 1);
        assert_eq!(cert.mult_at_minus_one, 1);
        assert_eq!(cert.mult_at_one, 0);
    }

    #[test]
    fn circle_count_primitive_cube_roots() {
        let cert = unit_circle_roots(&p(&[1, 1, 1])).unwrap();
        assert_eq!(cert.count, 2);
        assert_eq!(cert.conjugate_pairs, 1);
    }

    #[test]
    fn circle_count_reciprocal_pair_off_circle() {
        // (2t - 1)(t - 2) = 2t^2 - 5t + 2 is self-reciprocal with roots 1/2, 2:
        // none on the circle
        let cert = unit_circle_roots(&p(&[2, -5, 2])).unwrap();
        assert_eq!(cert.count, 0);
    }

    #[test]
    fn circle_count_with_multiplicity_at_one() {
        // (t-1)^2 (t^2+t+1): distinct circle roots are 1, w, conj(w)
        let g = p(&[1, -2, 1]).mul(&p(&[1, 1, 1]));
        let cert = unit_circle_roots(&g).unwrap();
        assert_eq!(cert.mult_at_one, 2);
        assert_eq!(cert.count, 3);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for n in 1..=30 {
            assert_eq!(cyclotomic(n).degree().unwrap() as u64, euler_phi(n), "n={n}");
        }
    }

    #[test]
    fn cyclotomic_roots_all_on_circle() {
        for n in 1..=100u64 {
            let phi = cyclotomic(n);
            let cert = unit_circle_roots(&phi).unwrap();
            assert_eq!(cert.count as u64, euler_phi(n), "n={n}");
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(97), 96);
        assert_eq!(euler_phi(100), 40);
    }
}

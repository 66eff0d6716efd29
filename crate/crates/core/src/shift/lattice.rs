//! Periodic points of mod-p polynomial subshifts on finite lattices.
//!
//! A lattice `(N_1, ..., N_d)` indexes the configurations fixed by the
//! sublattice `N_1 Z x ... x N_d Z`. The defining relation
//! `sum_m f_m x(n + m) = 0 (mod p)` becomes a linear system over the field
//! with p elements, with exponents wrapping modulo the lattice (Euclidean
//! remainders). Counting solutions is exact elimination: the kernel has some
//! dimension k and there are p^k periodic points.
//!
//! These finite models stand in for the torus-valued systems at desk scale;
//! they are analogues, not the solenoidal systems themselves.

use std::collections::BTreeMap;
use std::io::Write as IoWrite;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Default cap on the number of lattice cells.
pub const DEFAULT_CELL_CAP: u64 = 1 << 20;

/// Practical cap on the modulus so products fit in u64.
const MAX_PRIME: u64 = 1 << 31;

/// Periods of a finite quotient of Z^d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicLattice {
    periods: Vec<u32>,
}

impl PeriodicLattice {
    pub fn new(periods: Vec<u32>) -> Result<Self> {
        Self::with_cap(periods, DEFAULT_CELL_CAP)
    }

    pub fn with_cap(periods: Vec<u32>, cap: u64) -> Result<Self> {
        if periods.is_empty() || periods.iter().any(|&n| n == 0) {
            return Err(Error::InvalidInput(
                "lattice periods must be positive".into(),
            ));
        }
        let mut cells: u64 = 1;
        for &n in &periods {
            cells = cells
                .checked_mul(n as u64)
                .ok_or(Error::LatticeCap { cells: u64::MAX, cap })?;
        }
        if cells > cap {
            return Err(Error::LatticeCap { cells, cap });
        }
        Ok(PeriodicLattice { periods })
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn periods(&self) -> &[u32] {
        &self.periods
    }

    pub fn cells(&self) -> usize {
        self.periods.iter().map(|&n| n as usize).product()
    }

    /// Flat index of a site, wrapping each coordinate Euclidean-style.
    pub fn flatten(&self, site: &[i64]) -> usize {
        let mut idx = 0usize;
        for (&n, &s) in self.periods.iter().zip(site) {
            let wrapped = s.rem_euclid(n as i64) as usize;
            idx = idx * (n as usize) + wrapped;
        }
        idx
    }

    /// Inverse of [`flatten`].
    pub fn unflatten(&self, mut idx: usize) -> Vec<i64> {
        let mut site = vec![0i64; self.periods.len()];
        for j in (0..self.periods.len()).rev() {
            let n = self.periods[j] as usize;
            site[j] = (idx % n) as i64;
            idx /= n;
        }
        site
    }
}

/// A lattice configuration with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModPConfiguration {
    pub lattice: PeriodicLattice,
    pub p: u64,
    pub values: Vec<u64>,
}

impl ModPConfiguration {
    pub fn new(lattice: PeriodicLattice, p: u64, values: Vec<u64>) -> Result<Self> {
        if values.len() != lattice.cells() {
            return Err(Error::InvalidInput(format!(
                "expected {} values, got {}",
                lattice.cells(),
                values.len()
            )));
        }
        if values.iter().any(|&v| v >= p) {
            return Err(Error::InvalidInput("values must lie in [0, p)".into()));
        }
        Ok(ModPConfiguration { lattice, p, values })
    }

    /// Check the defining relation `sum_m f_m x(n + m) = 0 (mod p)` at every
    /// site, directly from the definition.
    pub fn satisfies(&self, f: &LaurentPoly) -> bool {
        let cells = self.lattice.cells();
        for idx in 0..cells {
            let site = self.lattice.unflatten(idx);
            let mut acc: u64 = 0;
            for (m, c) in f.terms() {
                let shifted: Vec<i64> = site
                    .iter()
                    .zip(m.exponents())
                    .map(|(&s, &e)| s + e)
                    .collect();
                let coeff = coeff_mod(c, self.p);
                acc = (acc + coeff * self.values[self.lattice.flatten(&shifted)]) % self.p;
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

fn coeff_mod(c: &BigInt, p: u64) -> u64 {
    let r = c % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits")
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p > MAX_PRIME {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Dense matrix over F_p, row-major.
struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }

    /// In-place reduced row echelon form with deterministic pivoting (first
    /// nonzero entry in column order). Returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let piv = (row..self.rows).find(|&r| self.at(r, col) != 0);
            let piv = match piv {
                Some(r) => r,
                None => continue,
            };
            for c in 0..self.cols {
                self.data.swap(row * self.cols + c, piv * self.cols + c);
            }
            let inv = inv_mod(self.at(row, col), self.p);
            for c in col..self.cols {
                *self.at_mut(row, c) = self.at(row, c) * inv % self.p;
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let delta = factor * self.at(row, c) % self.p;
                        *self.at_mut(r, c) = (self.at(r, c) + self.p - delta) % self.p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the null space, one vector per free column.
    fn kernel_basis(mut self) -> Vec<Vec<u64>> {
        let pivots = self.row_reduce();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = self.at(r, free);
                if coeff != 0 {
                    v[pc] = self.p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// The matrix of `x -> sum_m f_m * (shift by m of x)` on the lattice space.
fn operator_matrix(f: &LaurentPoly, p: u64, lattice: &PeriodicLattice) -> Result<FpMatrix> {
    if f.dim() != lattice.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: lattice.dim(),
        });
    }
    let cells = lattice.cells();
    let mut mat = FpMatrix::zero(p, cells, cells);
    for row in 0..cells {
        let site = lattice.unflatten(row);
        for (m, c) in f.terms() {
            let shifted: Vec<i64> = site
                .iter()
                .zip(m.exponents())
                .map(|(&s, &e)| s + e)
                .collect();
            let col = lattice.flatten(&shifted);
            let coeff = coeff_mod(c, p);
            *mat.at_mut(row, col) = (mat.at(row, col) + coeff) % p;
        }
    }
    Ok(mat)
}

/// Count of lattice-periodic points of the mod-p system of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicCount {
    pub kernel_dim: usize,
    /// `p^kernel_dim`.
    pub count: BigInt,
}

/// Exact periodic-point count: kernel dimension of the defining operator
/// over F_p, by elimination.
pub fn periodic_points_count(
    f: &LaurentPoly,
    p: u64,
    lattice: &PeriodicLattice,
) -> Result<PeriodicCount> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_prime(p)?;
    let mut mat = operator_matrix(f, p, lattice)?;
    let rank = mat.row_reduce().len();
    let kernel_dim = lattice.cells() - rank;
    let mut count = BigInt::one();
    for _ in 0..kernel_dim {
        count *= BigInt::from(p);
    }
    Ok(PeriodicCount { kernel_dim, count })
}

/// Image-chain dims of the endomorphism `alpha = multiplication by g` on the
/// periodic-point subgroup of `f` mod p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageChain {
    /// `dim alpha^k(K)` for `k = 0, 1, ...` ending with the first repeat.
    pub dims: Vec<usize>,
    /// Whether `alpha` is injective on the subgroup (kernel of `alpha`
    /// restricted to it is trivial).
    pub injective: bool,
    pub stabilized_dim: usize,
}

/// Iterate `alpha = mult-by-g` on the kernel subgroup of `f` and record the
/// image dimensions until two consecutive agree. Since `g` commutes with the
/// shifts, the kernel is `alpha`-invariant; dims are non-increasing and must
/// stabilize within `dim + 1` steps. When `alpha` is injective on the
/// subgroup the chain is constant and the stabilized image is the whole
/// subgroup, which is verified.
pub fn image_chain_stabilization(
    g: &LaurentPoly,
    f: &LaurentPoly,
    p: u64,
    lattice: &PeriodicLattice,
) -> Result<ImageChain> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_prime(p)?;
    let kernel = operator_matrix(f, p, lattice)?.kernel_basis();
    let k = kernel.len();
    let cells = lattice.cells();

    let alpha = if g.is_zero() {
        None
    } else {
        Some(operator_matrix(g, p, lattice)?)
    };
    let apply = |v: &[u64]| -> Vec<u64> {
        match &alpha {
            None => vec![0; cells],
            Some(mat) => {
                let mut out = vec![0u64; cells];
                for (r, o) in out.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for c in 0..cells {
                        let a = mat.at(r, c);
                        if a != 0 {
                            acc = (acc + a * v[c]) % p;
                        }
                    }
                    *o = acc;
                }
                out
            }
        }
    };

    let span_dim = |vecs: &[Vec<u64>]| -> usize {
        if vecs.is_empty() {
            return 0;
        }
        let mut mat = FpMatrix::zero(p, vecs.len(), cells);
        for (r, v) in vecs.iter().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                *mat.at_mut(r, c) = x;
            }
        }
        mat.row_reduce().len()
    };

    let mut current = kernel;
    let mut dims = vec![k];
    loop {
        let next: Vec<Vec<u64>> = current.iter().map(|v| apply(v)).collect();
        let dim = span_dim(&next);
        dims.push(dim);
        let len = dims.len();
        if dims[len - 1] == dims[len - 2] {
            break;
        }
        if len > k + 2 {
            return Err(Error::Inconsistency(
                "image chain failed to stabilize within dim + 1 steps".into(),
            ));
        }
        current = next;
    }

    let injective = dims.len() >= 2 && dims[1] == k;
    let stabilized_dim = *dims.last().unwrap();
    if injective && stabilized_dim != k {
        return Err(Error::Inconsistency(
            "injective multiplier but the stabilized image is a proper subgroup".into(),
        ));
    }
    Ok(ImageChain {
        dims,
        injective,
        stabilized_dim,
    })
}

/// Rectangular window `[x0, x1] x [y0, y1]`, inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub x0: i64,
    pub x1: i64,
    pub y0: i64,
    pub y1: i64,
}

impl Window {
    pub fn new(x0: i64, x1: i64, y0: i64, y1: i64) -> Result<Self> {
        if x0 > x1 || y0 > y1 {
            return Err(Error::InvalidInput("window corners are reversed".into()));
        }
        Ok(Window { x0, x1, y0, y1 })
    }
}

/// Reconstruct a window of the mod-p system of `f = 1 + u1 + u2` from data
/// on the cross-section `E = {n2 = 0} ∪ {n1 = 0, n2 < 0}`.
///
/// Upward rows use `x(n1, n2+1) = -x(n1+1, n2) - x(n1, n2)`; downward rows
/// use the relation solved for the other two corners, seeded by the column-0
/// values of E. The extension is unique: the restriction to E determines the
/// whole configuration. Required E data: row 0 on the widened column range
/// and, when the window dips below the axis, column 0 on `y0 <= n2 < 0`.
pub fn reconstruct_from_e(
    window_values: &BTreeMap<(i64, i64), u64>,
    p: u64,
    window: Window,
) -> Result<BTreeMap<(i64, i64), u64>> {
    check_prime(p)?;
    let up = window.y1.max(0);
    let (wx0, wx1) = if window.y0 < 0 {
        (window.x0.min(0), (window.x1 + up).max(0))
    } else {
        (window.x0, window.x1 + up)
    };

    let fetch = |pos: (i64, i64)| -> Result<u64> {
        match window_values.get(&pos) {
            Some(&v) if v < p => Ok(v),
            Some(&v) => Err(Error::InvalidInput(format!(
                "value {v} at {pos:?} is not a residue mod {p}"
            ))),
            None => Err(Error::InsufficientData(format!(
                "missing E-data at {pos:?} (needed for window \
                 [{}..{}]x[{}..{}])",
                window.x0, window.x1, window.y0, window.y1
            ))),
        }
    };

    let mut grid: BTreeMap<(i64, i64), u64> = BTreeMap::new();
    for x in wx0..=wx1 {
        grid.insert((x, 0), fetch((x, 0))?);
    }
    for y in window.y0..0 {
        grid.insert((0, y), fetch((0, y))?);
    }

    // upward: row y+1 from row y, one column shorter on the right each step
    for y in 0..window.y1 {
        for x in wx0..=(wx1 - (y - 0) - 1) {
            let a = grid[&(x + 1, y)];
            let b = grid[&(x, y)];
            grid.insert((x, y + 1), (2 * p - a - b) % p);
        }
    }
    // downward: row y from row y+1 plus the column-0 seed
    for y in (window.y0..0).rev() {
        for x in 0..wx1 {
            // x(n1+1, y) = -x(n1, y+1) - x(n1, y)
            let a = grid[&(x, y + 1)];
            let b = grid[&(x, y)];
            grid.insert((x + 1, y), (2 * p - a - b) % p);
        }
        for x in (wx0..0).rev() {
            // x(n1, y) = -x(n1, y+1) - x(n1+1, y)
            let a = grid[&(x, y + 1)];
            let b = grid[&(x + 1, y)];
            grid.insert((x, y), (2 * p - a - b) % p);
        }
    }

    let mut out = BTreeMap::new();
    for x in window.x0..=window.x1 {
        for y in window.y0..=window.y1 {
            out.insert((x, y), grid[&(x, y)]);
        }
    }
    Ok(out)
}

/// CSV of periodic-point counts over all lattices `(n1, ..., nd)` with
/// `1 <= n_i <= max_periods[i]`: columns `N1,...,Nd,kernel_dim,count`.
pub fn write_periodic_counts_csv(
    f: &LaurentPoly,
    p: u64,
    max_periods: &[u32],
    out: &mut dyn IoWrite,
) -> Result<()> {
    if max_periods.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: max_periods.len(),
        });
    }
    let header: Vec<String> = (1..=max_periods.len()).map(|i| format!("N{i}")).collect();
    writeln!(out, "{},kernel_dim,count", header.join(","))
        .map_err(|e| Error::InvalidInput(format!("csv write failed: {e}")))?;
    let mut periods = vec![1u32; max_periods.len()];
    loop {
        let lattice = PeriodicLattice::new(periods.clone())?;
        let counted = periodic_points_count(f, p, &lattice)?;
        let cols: Vec<String> = periods.iter().map(|n| n.to_string()).collect();
        writeln!(
            out,
            "{},{},{}",
            cols.join(","),
            counted.kernel_dim,
            counted.count
        )
        .map_err(|e| Error::InvalidInput(format!("csv write failed: {e}")))?;
        let mut carry = periods.len();
        for j in (0..periods.len()).rev() {
            periods[j] += 1;
            if periods[j] <= max_periods[j] {
                carry = j;
                break;
            }
            periods[j] = 1;
        }
        if carry == periods.len() {
            break;
        }
    }
    Ok(())
}

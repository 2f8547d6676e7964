//! Dense kernels: LU log-determinants, eigenvalues, and multiset matching.

use faer::{Mat, Side};
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A determinant stored as `exp(log_abs) * phase` with `|phase| = 1`.
///
/// Keeps determinants of matrices with thousands of rows representable when
/// the value itself would overflow or underflow `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDet {
    pub log_abs: f64,
    pub phase: Complex64,
}

impl LogDet {
    pub const ZERO: LogDet = LogDet {
        log_abs: f64::NEG_INFINITY,
        phase: Complex64::new(0.0, 0.0),
    };

    pub fn is_zero(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    pub fn value(&self) -> Complex64 {
        if self.is_zero() {
            Complex64::new(0.0, 0.0)
        } else {
            self.phase * self.log_abs.exp()
        }
    }

    /// Principal `1/k`-th power on the positive real branch; `None` unless the
    /// determinant is real and strictly positive (up to `1e-12` in phase).
    pub fn positive_root(&self, k: usize) -> Option<f64> {
        if self.is_zero() || (self.phase - 1.0).norm() > 1e-12 {
            return None;
        }
        Some((self.log_abs / k as f64).exp())
    }
}

/// LU factorisation with partial pivoting, accumulating `log|pivot|` and the
/// unit phase of the product. Consumes its input.
pub fn lu_log_det(mut a: DMatrix<Complex64>) -> LogDet {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "determinant of a non-square matrix");
    let mut log_abs = 0.0;
    let mut phase = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (mut piv, mut best) = (k, a[(k, k)].norm());
        for i in k + 1..n {
            let v = a[(i, k)].norm();
            if v > best {
                piv = i;
                best = v;
            }
        }
        if best == 0.0 {
            return LogDet::ZERO;
        }
        if piv != k {
            a.swap_rows(piv, k);
            phase = -phase;
        }
        let p = a[(k, k)];
        log_abs += best.ln();
        phase *= p / best;
        let inv = p.inv();
        for i in k + 1..n {
            let factor = a[(i, k)] * inv;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k + 1..n {
                let akj = a[(k, j)];
                a[(i, j)] -= factor * akj;
            }
        }
        // keep |phase| from drifting over thousands of pivots
        phase /= phase.norm();
    }
    LogDet { log_abs, phase }
}

/// Determinant of a complex matrix via [`lu_log_det`].
pub fn det(a: &DMatrix<Complex64>) -> Complex64 {
    lu_log_det(a.clone()).value()
}

/// Real matrix lifted to complex entries.
pub fn complexify(a: &DMatrix<f64>) -> DMatrix<Complex64> {
    a.map(|x| Complex64::new(x, 0.0))
}

/// `I - u M` for a real square matrix and complex `u`.
pub fn identity_minus_scaled(m: &DMatrix<f64>, u: Complex64) -> DMatrix<Complex64> {
    let n = m.nrows();
    DMatrix::from_fn(n, n, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        Complex64::new(delta, 0.0) - u * m[(i, j)]
    })
}

fn to_faer(m: &DMatrix<f64>) -> Mat<f64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let mut ev = to_faer(m)
        .self_adjoint_eigenvalues(Side::Lower)
        .expect("symmetric eigensolver failed");
    ev.sort_by(f64::total_cmp);
    ev
}

/// All eigenvalues of a real square matrix, sorted by `(re, im)`.
pub fn eigenvalues(m: &DMatrix<f64>) -> Result<Vec<Complex64>> {
    let raw = to_faer(m).eigenvalues().map_err(|_| Error::EigenFailure)?;
    let mut ev: Vec<Complex64> = raw.iter().map(|z| Complex64::new(z.re, z.im)).collect();
    sort_complex(&mut ev);
    Ok(ev)
}

/// Sorts by real part, then imaginary part.
pub fn sort_complex(v: &mut [Complex64]) {
    v.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
}

/// Greedy nearest-neighbour pairing of two eigenvalue multisets.
///
/// Both lists are sorted by `(re, im)`; each element of `left` in turn takes
/// its nearest unused partner in `right`. Returns the largest pairing
/// distance, or `None` if the sizes differ.
pub fn match_multisets(left: &[Complex64], right: &[Complex64]) -> Option<f64> {
    if left.len() != right.len() {
        return None;
    }
    let mut l = left.to_vec();
    let mut r = right.to_vec();
    sort_complex(&mut l);
    sort_complex(&mut r);
    let mut used = vec![false; r.len()];
    let mut worst: f64 = 0.0;
    for x in &l {
        let (idx, dist) = r
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, y)| (i, (x - y).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        used[idx] = true;
        worst = worst.max(dist);
    }
    Some(worst)
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn merge(&mut self, other: CompensatedSum) {
        self.add(other.sum);
        self.add(other.carry);
    }

    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::default();
        for x in iter {
            s.add(x);
        }
        s
    }
}

//! The generalized Grover matrix `Ũ(a, b)` and the matrices built around it.
//!
//! `Ũ` is indexed by arcs. Entry `(e, f)` is nonzero only when `f` feeds into
//! `e`, i.e. `t(f) = o(e)`, and carries the weight
//!
//! ```text
//! (2/d - 1) a + b   if f != e^{-1}
//! (2/d - 1) a       if f == e^{-1}
//! ```
//!
//! where `d = deg t(f) = deg o(e)`. At `a = b = 1` this is the Grover walk
//! operator, at `a = 0, b = 1` its positive support (the non-backtracking
//! operator), and at `b = 1` the one-parameter extension `U_a`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigenvalues, match_multisets, sort_complex};

/// Coin parameters `(a, b)` with `a ∈ [0, 1]` and finite `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    a: f64,
    b: f64,
}

impl CoinParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidParameter(format!("a = {a} outside [0, 1]")));
        }
        if !b.is_finite() {
            return Err(Error::InvalidParameter(format!("b = {b} is not finite")));
        }
        Ok(CoinParams { a, b })
    }

    /// The Grover walk, `a = b = 1`.
    pub const GROVER: CoinParams = CoinParams { a: 1.0, b: 1.0 };
    /// Positive support of the Grover walk, `a = 0, b = 1`.
    pub const POSITIVE_SUPPORT: CoinParams = CoinParams { a: 0.0, b: 1.0 };

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `η = (1 - q) a + b (q + 1)` for a `(q+1)`-regular graph.
    pub fn eta(&self, q: f64) -> f64 {
        (1.0 - q) * self.a + self.b * (q + 1.0)
    }

    /// `σ = b ((1 - q) a + b q)` for a `(q+1)`-regular graph.
    pub fn sigma(&self, q: f64) -> f64 {
        self.b * ((1.0 - q) * self.a + self.b * q)
    }

    /// Weight of passing from arc `f` into arc `e` at a vertex of degree `d`.
    #[inline]
    pub fn transfer_weight(&self, d: usize, backtrack: bool) -> f64 {
        let coin = (2.0 / d as f64 - 1.0) * self.a;
        if backtrack {
            coin
        } else {
            coin + self.b
        }
    }
}

/// Which operator an [`ArcMatrix`] holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArcOperator {
    GeneralizedGrover(CoinParams),
    PositiveSupport,
}

/// A `2m × 2m` matrix indexed by the canonical arc order of its graph.
#[derive(Debug, Clone)]
pub struct ArcMatrix {
    pub operator: ArcOperator,
    pub matrix: DMatrix<f64>,
}

impl ArcMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Row-major CSV with 17 significant digits, one row per arc.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim() {
            let row: Vec<String> = self
                .matrix
                .row(i)
                .iter()
                .map(|&x| format_sig17(x))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// 17 significant digits in scientific notation, `0` for exact zero.
pub fn format_sig17(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// `w(f, e)`: the entry `Ũ_{ef}`.
pub fn weight(g: &Graph, p: &CoinParams, f: usize, e: usize) -> f64 {
    let (fa, ea) = (g.arc(f), g.arc(e));
    if fa.terminus != ea.origin {
        return 0.0;
    }
    p.transfer_weight(g.degree(ea.origin), f == Graph::inverse(e))
}

pub fn build_generalized_grover(g: &Graph, p: &CoinParams) -> ArcMatrix {
    let dim = g.arc_count();
    let mut m = DMatrix::zeros(dim, dim);
    for e in 0..dim {
        let o = g.arc(e).origin;
        let d = g.degree(o);
        for &f in g.in_arcs(o) {
            m[(e, f)] = p.transfer_weight(d, f == Graph::inverse(e));
        }
    }
    ArcMatrix {
        operator: ArcOperator::GeneralizedGrover(*p),
        matrix: m,
    }
}

/// The Grover matrix: `2/d` on non-backtracking transitions, `2/d - 1` on
/// backtracking ones.
pub fn build_grover(g: &Graph) -> DMatrix<f64> {
    let dim = g.arc_count();
    DMatrix::from_fn(dim, dim, |e, f| {
        let o = g.arc(e).origin;
        if g.arc(f).terminus != o {
            return 0.0;
        }
        let two_over_d = 2.0 / g.degree(o) as f64;
        if f == Graph::inverse(e) {
            two_over_d - 1.0
        } else {
            two_over_d
        }
    })
}

/// The one-parameter extension `U_a`: `(2/d - 1) a + 1` forward,
/// `(2/d - 1) a` backtracking.
pub fn build_one_parameter_grover(g: &Graph, a: f64) -> DMatrix<f64> {
    let dim = g.arc_count();
    DMatrix::from_fn(dim, dim, |e, f| {
        let o = g.arc(e).origin;
        if g.arc(f).terminus != o {
            return 0.0;
        }
        let coin = (2.0 / g.degree(o) as f64 - 1.0) * a;
        if f == Graph::inverse(e) {
            coin
        } else {
            coin + 1.0
        }
    })
}

/// 0/1 matrix marking strictly positive entries.
pub fn positive_support(m: &DMatrix<f64>) -> DMatrix<f64> {
    m.map(|x| if x > 0.0 { 1.0 } else { 0.0 })
}

/// `A_d`: entry `(u, v)` is `(2 - deg u) a + b deg u` on arcs, else 0.
pub fn build_a_d(g: &Graph, p: &CoinParams) -> DMatrix<f64> {
    let n = g.n();
    let mut m = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let d = g.degree(x) as f64;
            m[(x, y)] = (2.0 - d) * p.a + p.b * d;
        }
    }
    m
}

/// Where a spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    Numerical,
    ClosedForm,
}

/// Eigenvalues with multiplicities. Values within `1e-10` of each other are
/// merged into one entry.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub entries: Vec<(Complex64, usize)>,
    pub source: SpectrumSource,
}

const MERGE_TOL: f64 = 1e-10;

impl SpectrumReport {
    pub fn from_values(mut values: Vec<Complex64>, source: SpectrumSource) -> Self {
        sort_complex(&mut values);
        let mut entries: Vec<(Complex64, usize)> = Vec::new();
        for v in values {
            match entries
                .iter_mut()
                .find(|(c, _)| (c - v).norm() <= MERGE_TOL)
            {
                Some(entry) => entry.1 += 1,
                None => entries.push((v, 1)),
            }
        }
        SpectrumReport { entries, source }
    }

    /// Total multiplicity.
    pub fn dim(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Flattened multiset, each value repeated by its multiplicity.
    pub fn values(&self) -> Vec<Complex64> {
        self.entries
            .iter()
            .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
            .collect()
    }

    /// Number of eigenvalues (with multiplicity) within `tol` of `target`.
    pub fn count_near(&self, target: Complex64, tol: f64) -> usize {
        self.values()
            .iter()
            .filter(|v| (*v - target).norm() <= tol)
            .count()
    }

    /// Largest greedy pairing distance to another report, `None` on size
    /// mismatch.
    pub fn distance(&self, other: &SpectrumReport) -> Option<f64> {
        match_multisets(&self.values(), &other.values())
    }

    /// How far the multiset is from being closed under conjugation.
    pub fn conjugation_defect(&self) -> f64 {
        let v = self.values();
        let conj: Vec<Complex64> = v.iter().map(|z| z.conj()).collect();
        match_multisets(&v, &conj).unwrap_or(f64::INFINITY)
    }
}

/// Dense eigenvalues of an arc matrix.
pub fn numerical_spectrum(m: &ArcMatrix) -> Result<SpectrumReport> {
    Ok(SpectrumReport::from_values(
        eigenvalues(&m.matrix)?,
        SpectrumSource::Numerical,
    ))
}

/// Closed-form spectrum of `Ũ(a, b)` on a `(q+1)`-regular graph: the roots of
/// `λ² - μηλ + σ = 0` for each `μ ∈ Spec(P)`, plus `+b` and `-b` each with
/// multiplicity `m - n`.
pub fn spectrum_closed_form(
    g: &Graph,
    p: &CoinParams,
    transition_spectrum: &[f64],
) -> Result<SpectrumReport> {
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    if transition_spectrum.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} transition eigenvalues, got {}",
            g.n(),
            transition_spectrum.len()
        )));
    }
    let q = degree as f64 - 1.0;
    let (eta, sigma) = (p.eta(q), p.sigma(q));
    let mut values = Vec::with_capacity(g.arc_count());
    for &mu in transition_spectrum {
        let half = mu * eta / 2.0;
        let root = Complex64::new(half * half - sigma, 0.0).sqrt();
        values.push(half + root);
        values.push(half - root);
    }
    let extra = g.m() - g.n();
    values.extend(std::iter::repeat_n(Complex64::new(p.b, 0.0), extra));
    values.extend(std::iter::repeat_n(Complex64::new(-p.b, 0.0), extra));
    Ok(SpectrumReport::from_values(
        values,
        SpectrumSource::ClosedForm,
    ))
}

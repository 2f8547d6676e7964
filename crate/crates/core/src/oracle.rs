//! Brute-force ground truth, kept independent of the matrix code paths.
//!
//! Arc weights here are recomputed from the case definition rather than
//! read from `Ũ`, so agreement with `tr Ũ^r` is a genuine cross-check.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grover::CoinParams;
use crate::linalg::CompensatedSum;

/// Maximum number of partial-path extensions per enumeration.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// A closed arc sequence `(e_1, .., e_r)` with `t(e_i) = o(e_{i+1})` cyclically.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleRecord {
    pub arcs: Vec<usize>,
    pub weight: f64,
    pub reduced: bool,
    pub base: usize,
}

/// `w(f, e)` straight from its definition.
fn step_weight(g: &Graph, a: f64, b: f64, f: usize, e: usize) -> f64 {
    let (fa, ea) = (g.arc(f), g.arc(e));
    if fa.terminus != ea.origin {
        return 0.0;
    }
    let d = g.degree(fa.terminus) as f64;
    if f == Graph::inverse(e) {
        (2.0 / d - 1.0) * a
    } else {
        (2.0 / d - 1.0) * a + b
    }
}

/// True when no consecutive pair, including the wrap `(e_r, e_1)`, backtracks.
pub fn is_cyclically_reduced(arcs: &[usize]) -> bool {
    let r = arcs.len();
    (0..r).all(|i| arcs[(i + 1) % r] != Graph::inverse(arcs[i]))
}

/// True when neither `C` nor `C²` contains a backtracking step, checked on
/// the literal sequences.
pub fn is_reduced_by_square(arcs: &[usize]) -> bool {
    let no_backtrack = |s: &[usize]| s.windows(2).all(|w| w[1] != Graph::inverse(w[0]));
    let doubled: Vec<usize> = arcs.iter().chain(arcs).copied().collect();
    no_backtrack(arcs) && no_backtrack(&doubled)
}

struct Enumerator<'g> {
    g: &'g Graph,
    a: f64,
    b: f64,
    steps: u64,
    path: Vec<usize>,
}

impl Enumerator<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > ENUMERATION_BUDGET {
            Err(Error::BudgetExceeded(ENUMERATION_BUDGET))
        } else {
            Ok(())
        }
    }

    /// Extends `path` to length `r`, calling `visit(path, weight)` for every
    /// closed sequence with nonzero weight.
    fn walk(&mut self, r: usize, weight: f64, visit: &mut dyn FnMut(&[usize], f64)) -> Result<()> {
        let last = *self.path.last().expect("walk starts from a seeded path");
        if self.path.len() == r {
            let first = self.path[0];
            let wrap = step_weight(self.g, self.a, self.b, last, first);
            if wrap != 0.0 {
                visit(&self.path, weight * wrap);
            }
            return Ok(());
        }
        let t = self.g.arc(last).terminus;
        for &next in self.g.out_arcs(t) {
            self.tick()?;
            let w = step_weight(self.g, self.a, self.b, last, next);
            if w == 0.0 {
                continue;
            }
            self.path.push(next);
            self.walk(r, weight * w, visit)?;
            self.path.pop();
        }
        Ok(())
    }
}

fn enumerate(
    g: &Graph,
    p: &CoinParams,
    r: usize,
    visit: &mut dyn FnMut(&[usize], f64),
) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("cycle length must be >= 1".into()));
    }
    let mut en = Enumerator {
        g,
        a: p.a(),
        b: p.b(),
        steps: 0,
        path: Vec::with_capacity(r),
    };
    for e in 0..g.arc_count() {
        en.tick()?;
        en.path.clear();
        en.path.push(e);
        en.walk(r, 1.0, visit)?;
    }
    Ok(())
}

/// Every closed arc sequence of length `r` with nonzero weight.
pub fn enumerate_cycles(g: &Graph, p: &CoinParams, r: usize) -> Result<Vec<CycleRecord>> {
    let mut out = Vec::new();
    enumerate(g, p, r, &mut |arcs, weight| {
        out.push(CycleRecord {
            arcs: arcs.to_vec(),
            weight,
            reduced: is_cyclically_reduced(arcs),
            base: g.arc(arcs[0]).origin,
        })
    })?;
    Ok(out)
}

/// `N_r = Σ w(C)` over all cycles of length `r`, by depth-first enumeration.
/// Terms are accumulated with compensation; `N_r` can reach `1e4` while the
/// comparison against `tr Ũ^r` is absolute.
pub fn brute_n_r(g: &Graph, p: &CoinParams, r: usize) -> Result<f64> {
    let mut total = CompensatedSum::default();
    enumerate(g, p, r, &mut |_, w| total.add(w))?;
    Ok(total.total())
}

/// Number of reduced `x0`-cycles of length `r`: closed non-backtracking arc
/// sequences starting at `x0` whose wrap step also does not backtrack.
pub fn count_reduced_based_cycles(g: &Graph, x0: usize, r: usize) -> Result<u64> {
    if g.min_degree() < 2 {
        return Err(Error::InvalidParameter(
            "reduced-cycle counts need min degree >= 2".into(),
        ));
    }
    if x0 >= g.n() || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "bad base vertex {x0} or length {r}"
        )));
    }
    fn go(
        g: &Graph,
        x0: usize,
        first: usize,
        last: usize,
        left: usize,
        steps: &mut u64,
    ) -> Result<u64> {
        if left == 0 {
            let closes = g.arc(last).terminus == x0 && first != Graph::inverse(last);
            return Ok(closes as u64);
        }
        let mut count = 0;
        for &next in g.out_arcs(g.arc(last).terminus) {
            *steps += 1;
            if *steps > ENUMERATION_BUDGET {
                return Err(Error::BudgetExceeded(ENUMERATION_BUDGET));
            }
            if next != Graph::inverse(last) {
                count += go(g, x0, first, next, left - 1, steps)?;
            }
        }
        Ok(count)
    }
    let mut steps = 0;
    let mut total = 0;
    for &e in g.out_arcs(x0) {
        total += go(g, x0, e, e, r - 1, &mut steps)?;
    }
    Ok(total)
}

/// Cofactor (Laplace) expansion along the first row; dimension at most 8.
pub fn naive_det(m: &DMatrix<Complex64>) -> Result<Complex64> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::InvalidParameter(
            "determinant of a non-square matrix".into(),
        ));
    }
    if n > 8 {
        return Err(Error::DimensionTooLarge(n));
    }
    fn expand(m: &DMatrix<Complex64>, rows: &[usize], cols: &[usize]) -> Complex64 {
        if rows.is_empty() {
            return Complex64::new(1.0, 0.0);
        }
        let (r, rest) = (rows[0], &rows[1..]);
        let mut sum = Complex64::new(0.0, 0.0);
        for (k, &col) in cols.iter().enumerate() {
            let entry = m[(r, col)];
            if entry == Complex64::new(0.0, 0.0) {
                continue;
            }
            let minor: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * entry * expand(m, rest, &minor);
        }
        sum
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(expand(m, &idx, &idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_cycle, build_petersen};
    use crate::linalg::det;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn no_loops_means_no_one_cycles() {
        let g = build_petersen();
        assert_eq!(
            brute_n_r(&g, &CoinParams::new(0.3, 2.0).unwrap(), 1).unwrap(),
            0.0
        );
    }

    #[test]
    fn known_small_sums() {
        let k4 = build_complete(4).unwrap();
        assert!((brute_n_r(&k4, &CoinParams::GROVER, 2).unwrap() - 4.0 / 3.0).abs() < 1e-14);
        let c3 = build_cycle(3).unwrap();
        assert_eq!(brute_n_r(&c3, &CoinParams::GROVER, 3).unwrap(), 6.0);
    }

    #[test]
    fn reduced_counts() {
        let c4 = build_cycle(4).unwrap();
        assert_eq!(count_reduced_based_cycles(&c4, 0, 4).unwrap(), 2);
        assert_eq!(count_reduced_based_cycles(&c4, 2, 3).unwrap(), 0);
        // directed triangles through a vertex of K4: 3 * 2
        let k4 = build_complete(4).unwrap();
        assert_eq!(count_reduced_based_cycles(&k4, 0, 3).unwrap(), 6);
    }

    #[test]
    fn wrap_backtracking_is_not_counted() {
        // length-4 walks like 0->1->2->3->0 then back along 0->3 would close
        // with a reversal at the wrap; filtering full enumeration must agree
        let k4 = build_complete(4).unwrap();
        let cycles = enumerate_cycles(&k4, &CoinParams::POSITIVE_SUPPORT, 4).unwrap();
        let based = cycles.iter().filter(|c| c.base == 0 && c.reduced).count() as u64;
        assert_eq!(based, count_reduced_based_cycles(&k4, 0, 4).unwrap());
    }

    #[test]
    fn reduced_definitions_agree() {
        let g = build_complete(4).unwrap();
        for r in 2..=5 {
            for c in enumerate_cycles(&g, &CoinParams::new(0.5, 1.0).unwrap(), r).unwrap() {
                assert_eq!(
                    is_cyclically_reduced(&c.arcs),
                    is_reduced_by_square(&c.arcs)
                );
            }
        }
    }

    #[test]
    fn cofactor_determinant() {
        let id = DMatrix::<Complex64>::identity(3, 3);
        assert_eq!(naive_det(&id).unwrap(), Complex64::new(1.0, 0.0));
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
        ]));
        assert_eq!(naive_det(&d).unwrap(), Complex64::new(6.0, 0.0));
        assert!(matches!(
            naive_det(&DMatrix::<Complex64>::identity(9, 9)),
            Err(Error::DimensionTooLarge(9))
        ));
    }

    #[test]
    fn cofactor_matches_lu_on_random_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let m = DMatrix::from_fn(6, 6, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let (a, b) = (naive_det(&m).unwrap(), det(&m));
        assert!((a - b).norm() <= 1e-12 * a.norm());
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_complete(8).unwrap();
        assert!(matches!(
            brute_n_r(&g, &CoinParams::new(0.5, 1.0).unwrap(), 12),
            Err(Error::BudgetExceeded(_))
        ));
    }
}

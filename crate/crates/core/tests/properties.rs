use grover_zeta::graph::{build_random_connected, build_random_regular, Graph};
use grover_zeta::grover::{
    build_generalized_grover, numerical_spectrum, positive_support, CoinParams,
};
use grover_zeta::verify::{verify_identity, Identity};
use grover_zeta::Complex64;
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (3usize..=8, 0.3f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| build_random_connected(n, p, seed).unwrap())
}

fn coin() -> impl Strategy<Value = CoinParams> {
    (0.0f64..=1.0, -2.0f64..=2.0).prop_map(|(a, b)| CoinParams::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_and_row_sums(g in graph(), p in coin()) {
        let u = build_generalized_grover(&g, &p).matrix;
        for e in 0..g.arc_count() {
            let o = g.arc(e).origin;
            for f in 0..g.arc_count() {
                if u[(e, f)] != 0.0 {
                    prop_assert_eq!(g.arc(f).terminus, o);
                }
            }
            let d = g.degree(o) as f64;
            let want = (2.0 - d) * p.a() + (d - 1.0) * p.b();
            prop_assert!((u.row(e).sum() - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn grover_matrix_is_orthogonal(g in graph()) {
        let u = build_generalized_grover(&g, &CoinParams::GROVER).matrix;
        let gram = u.transpose() * &u;
        for i in 0..gram.nrows() {
            for j in 0..gram.ncols() {
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((gram[(i, j)] - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn spectrum_is_closed_under_conjugation(g in graph(), p in coin()) {
        let s = numerical_spectrum(&build_generalized_grover(&g, &p)).unwrap();
        prop_assert_eq!(s.dim(), g.arc_count());
        prop_assert!(s.conjugation_defect() <= 1e-9);
    }

    #[test]
    fn positive_support_is_idempotent(g in graph(), p in coin()) {
        let s = positive_support(&build_generalized_grover(&g, &p).matrix);
        prop_assert!(s.iter().all(|&x| x == 0.0 || x == 1.0));
        prop_assert_eq!(positive_support(&s), s);
    }

    #[test]
    fn vertex_determinant_identity(g in graph(), p in coin(), r in 0.0f64..1.0, t in 0.0f64..std::f64::consts::TAU) {
        // keep |u| inside half the reciprocal of the largest absolute row sum
        let u_mat = build_generalized_grover(&g, &p).matrix;
        let norm = (0..u_mat.nrows()).map(|i| u_mat.row(i).abs().sum()).fold(0.0, f64::max).max(1.0);
        let u = Complex64::from_polar(0.5 * r / norm, t);
        let reps = verify_identity(Identity::KonnoSatoGeneralized, &g, &p, &[u]).unwrap();
        prop_assert!(reps[0].pass, "{:?}", reps[0]);
    }

    #[test]
    fn random_regular_is_reproducible(half_n in 3usize..8, k in 2usize..5, seed in any::<u64>()) {
        let n = 2 * half_n;
        prop_assume!(n > k);
        let a = build_random_regular(n, k, seed).unwrap();
        let b = build_random_regular(n, k, seed).unwrap();
        prop_assert_eq!(a.edges(), b.edges());
        prop_assert_eq!(a.regular_degree(), Some(k));
        prop_assert_eq!(a.m(), n * k / 2);
    }

    #[test]
    fn json_round_trip(g in graph()) {
        let back = Graph::from_json(g.name(), &g.to_json()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.n(), g.n());
    }
}

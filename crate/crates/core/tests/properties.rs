use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use paradromic_core::linkrel::paradrome_relations;
use paradromic_core::{BraidWord, IntMatrix, IntPoly};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(range, rows * cols).prop_map(move |v| {
        IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| IntPoly::from_i64(&c))
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

proptest! {
    #[test]
    fn pow_mod_is_a_homomorphism(a in matrix(3, 3, -5..=5), j in 0u64..6, k in 0u64..6, pi in 0usize..4) {
        let p = PRIMES[pi];
        let lhs = a.pow_mod(j + k, p).unwrap();
        let rhs = a.pow_mod(j, p).unwrap().mul(&a.pow_mod(k, p).unwrap()).unwrap();
        prop_assert_eq!(lhs.sub(&rhs).unwrap().rank_mod(p).unwrap(), 0);
    }

    #[test]
    fn rank_plus_nullity(rows in 0usize..5, cols in 0usize..5, seed in prop::collection::vec(-4i64..=4, 25), pi in 0usize..4) {
        let p = PRIMES[pi];
        let a = IntMatrix::new(rows, cols, seed[..rows * cols].iter().map(|&x| BigInt::from(x)).collect()).unwrap();
        let ns = a.nullspace_mod(p).unwrap();
        prop_assert_eq!(a.rank_mod(p).unwrap() + ns.len(), cols);
        for v in &ns {
            prop_assert!(v.is_null_for(&a));
        }
    }

    #[test]
    fn det_vanishes_mod_p_iff_rank_drops(a in matrix(4, 4, -6..=6), pi in 0usize..4) {
        let p = PRIMES[pi];
        let det = a.det().unwrap();
        let singular = det.mod_floor(&BigInt::from(p)).is_zero();
        prop_assert_eq!(singular, a.rank_mod(p).unwrap() < 4);
    }

    #[test]
    fn smith_factors_multiply_to_det(a in matrix(4, 4, -6..=6)) {
        let det = a.det().unwrap();
        let snf = a.smith_normal_form();
        for w in snf.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            } else {
                prop_assert!(w[0].is_zero() || w[1].is_zero());
            }
        }
        if !det.is_zero() {
            let prod: BigUint = snf.iter().product();
            prop_assert_eq!(BigInt::from(prod), det.abs());
        } else {
            prop_assert!(snf.last().unwrap().is_zero());
        }
    }

    #[test]
    fn char_poly_agrees_with_shifted_determinants(a in matrix(5, 5, -4..=4)) {
        let f = IntPoly::char_poly(&a).unwrap();
        prop_assert_eq!(f.degree(), Some(5));
        prop_assert_eq!(f.leading().cloned(), Some(BigInt::from(-1)));
        for x in -2i64..=3 {
            let direct = a.shift_diagonal(&BigInt::from(x)).unwrap().det().unwrap();
            prop_assert_eq!(f.eval_i64(x), direct);
        }
    }

    #[test]
    fn char_poly_degree_and_sign(n in 1usize..7, seed in prop::collection::vec(-3i64..=3, 36)) {
        let a = IntMatrix::new(n, n, seed[..n * n].iter().map(|&x| BigInt::from(x)).collect()).unwrap();
        let f = IntPoly::char_poly(&a).unwrap();
        prop_assert_eq!(f.degree(), Some(n));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(f.leading().cloned(), Some(BigInt::from(sign)));
    }

    #[test]
    fn exact_division_inverts_multiplication(q in poly(6), den in poly(4)) {
        prop_assume!(!den.is_zero());
        let num = &q * &den;
        prop_assert_eq!(num.div_exact(&den).unwrap(), q);
    }
}

fn generated_systems(max_arcs: usize) -> Vec<(String, paradromic_core::RelationSystem)> {
    let mut out = Vec::new();
    for m in 0..=8 {
        for n in 1..=8 {
            let sys = paradrome_relations(m, n).unwrap();
            if sys.arc_count() <= max_arcs {
                out.push((format!("P({},{})", m, n), sys));
            }
        }
    }
    for u in 0..=12 {
        for v in 1..=12 {
            let sys = BraidWord::torus(u, v).unwrap().relations();
            if sys.arc_count() <= max_arcs {
                out.push((format!("T({},{})", u, v), sys));
            }
        }
    }
    out
}

#[test]
fn coloring_rows_sum_to_zero() {
    for (name, sys) in generated_systems(60) {
        let m = sys.coloring_matrix();
        for r in 0..m.rows() {
            let s: BigInt = m.row(r).iter().sum();
            assert!(s.is_zero(), "{} row {}", name, r);
        }
    }
}

#[test]
fn generated_systems_are_square_and_well_formed() {
    for (name, sys) in generated_systems(200) {
        assert_eq!(sys.crossings().len(), sys.arc_count(), "{}", name);
        let mut under = vec![0usize; sys.arc_count()];
        for c in sys.crossings() {
            under[c.under_a] += 1;
            if c.under_b != c.under_a {
                under[c.under_b] += 1;
            }
        }
        assert!(under.iter().all(|&k| k <= 2 && k >= 1), "{}", name);
    }
}

#[test]
fn determinant_is_product_of_reduced_invariant_factors() {
    // independent route to the determinant through the Smith form
    for (name, sys) in generated_systems(30) {
        if sys.split_pieces() != 1 || sys.arc_count() == 0 {
            continue;
        }
        let snf = sys.coloring_matrix().smith_normal_form();
        let via_snf: BigUint = snf[..sys.arc_count() - 1].iter().product();
        assert_eq!(sys.link_determinant(), via_snf, "{}", name);
    }
}

#[test]
fn colorability_matches_determinant_divisibility() {
    for (name, sys) in generated_systems(60) {
        if sys.split_pieces() != 1 {
            continue;
        }
        let det = sys.link_determinant();
        for p in [2u64, 3, 5, 7, 11] {
            let divides = (&det % BigUint::from(p)).is_zero();
            assert_eq!(sys.is_p_colorable(p).unwrap(), divides, "{} p={}", name, p);
        }
    }
}

#[test]
fn found_colorings_are_valid() {
    for (name, sys) in generated_systems(40) {
        for p in [2u64, 3, 5, 7] {
            let found = sys.find_coloring(p).unwrap();
            assert_eq!(found.is_some(), sys.is_p_colorable(p).unwrap(), "{} p={}", name, p);
            if let Some(c) = found {
                assert!(!c.is_constant());
                let m = sys.coloring_matrix().pad_columns(sys.free_circles());
                assert!(c.is_null_for(&m), "{} p={}", name, p);
            }
        }
    }
}

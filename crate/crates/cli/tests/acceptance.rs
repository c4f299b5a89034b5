//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always shown.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use paradromic_core::linkrel::paradrome_relations;
use paradromic_core::paradrome::{
    classify, pattern_charpoly_closed_form, topological_type, torus_det, torus_knot_colorable, transfer_s,
    unit_eigenspace_is_constant,
};
use paradromic_core::{BraidWord, IntPoly, RelationSystem};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

type Outcome = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn charpoly_closed_form() -> Outcome {
    for n in (3..=13).step_by(2) {
        let actual = IntPoly::char_poly(&transfer_s(n).unwrap()).unwrap();
        let expected = pattern_charpoly_closed_form(n).unwrap();
        ensure(actual == expected, || format!("n={}: {} vs {}", n, actual, expected))?;
    }
    Ok(())
}

fn two_strip_law() -> Outcome {
    for m in 0..=30u64 {
        let sys = paradrome_relations(m as usize, 2).unwrap();
        for p in PRIMES {
            let colorable = sys.is_p_colorable(p).unwrap();
            ensure(colorable == (m % p == 0), || format!("P({},2) at p={}: colorable {}", m, p, colorable))?;
        }
        if m >= 1 {
            let d = torus_det(m, 2).unwrap();
            ensure(d == BigUint::from(m), || format!("det T({},2) = {}", m, d))?;
        }
    }
    Ok(())
}

fn nearly_invisible() -> Outcome {
    for (m, n) in [(3, 3), (5, 3), (7, 3), (3, 5), (5, 5), (3, 7), (9, 3)] {
        for p in [3, 5, 7, 11] {
            ensure(unit_eigenspace_is_constant(m, n, p).unwrap(), || format!("P({},{}) rank check at p={}", m, n, p))?;
        }
        let sys = paradrome_relations(m as usize, n as usize).unwrap();
        for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let colorable = sys.is_p_colorable(p).unwrap();
            ensure(colorable == (p == 2), || format!("P({},{}) at p={}: colorable {}", m, n, p, colorable))?;
        }
        let d = sys.link_determinant();
        ensure(d.count_ones() == 1 && d >= BigUint::from(2u32), || format!("det P({},{}) = {}", m, n, d))?;
    }
    Ok(())
}

fn even_grid() -> Outcome {
    for n in 2..=8u64 {
        for m in 0..=10u64 {
            if (m * n).is_odd() {
                continue;
            }
            let class = classify(m, n).unwrap().class;
            let det = torus_det(m * n / 2, n).unwrap();
            let sys = paradrome_relations(m as usize, n as usize).unwrap();
            for p in PRIMES {
                let by_class = class.admits(p);
                let by_det = (&det % p).is_zero();
                let by_diagram = sys.is_p_colorable(p).unwrap();
                ensure(by_class == by_det && by_det == by_diagram, || {
                    format!("P({},{}) at p={}: class {} det {} diagram {}", m, n, p, by_class, by_det, by_diagram)
                })?;
            }
        }
    }
    // spot values, confirmed on the braid diagram and, where affordable, by
    // counting colorings outright
    for (u, v, want) in [(3u64, 3u64, 4u64), (5, 5, 16), (6, 3, 0), (2, 2, 2)] {
        let d = torus_det(u, v).unwrap();
        ensure(d == BigUint::from(want), || format!("det T({},{}) = {}", u, v, d))?;
        let sys = BraidWord::torus(u as usize, v as usize).unwrap().relations();
        ensure(sys.link_determinant() == d, || format!("T({},{}): diagram det {}", u, v, sys.link_determinant()))?;
        for p in [2, 3, 5] {
            if let Ok(count) = sys.enumerate_colorings(p, 50_000_000) {
                let colorable = count > p.pow(sys.split_pieces() as u32);
                let divides = want % p == 0;
                ensure(colorable == divides, || format!("T({},{}) at p={}: {} colorings", u, v, p, count))?;
            }
        }
    }
    Ok(())
}

fn torus_knots() -> Outcome {
    for u in 1..=12u64 {
        for v in 1..=12u64 {
            if u.gcd(&v) != 1 {
                continue;
            }
            let sys = BraidWord::torus(u as usize, v as usize).unwrap().relations();
            for p in PRIMES {
                let formula = torus_knot_colorable(u, v, p).unwrap();
                let diagram = sys.is_p_colorable(p).unwrap();
                ensure(formula == diagram, || format!("T({},{}) at p={}: formula {} diagram {}", u, v, p, formula, diagram))?;
            }
            if u.is_odd() && v.is_odd() {
                ensure(sys.link_determinant().is_one(), || format!("T({},{}) det {}", u, v, sys.link_determinant()))?;
            }
        }
    }
    Ok(())
}

/// Every diagram the library generates on the small grid.
fn generated_systems(max_arcs: usize) -> Vec<(String, RelationSystem)> {
    let mut out = Vec::new();
    for n in 1..=12 {
        for m in 0..=12 {
            let sys = paradrome_relations(m, n).unwrap();
            if sys.arc_count() <= max_arcs {
                out.push((format!("P({},{})", m, n), sys));
            }
        }
    }
    for v in 1..=12 {
        for u in 0..=12 {
            let sys = BraidWord::torus(u, v).unwrap().relations();
            if sys.arc_count() <= max_arcs {
                out.push((format!("T({},{})", u, v), sys));
            }
        }
    }
    out
}

fn oracle_law() -> Outcome {
    // 5^12 colorings is the largest search space needed
    let budget = 5u64.pow(12) * 5;
    for (name, sys) in generated_systems(12) {
        for p in [2, 3, 5] {
            let count = sys.enumerate_colorings(p, budget).map_err(|e| format!("{}: {}", name, e))?;
            let dim = sys.coloring_dimension(p).unwrap() as u32;
            ensure(count == p.pow(dim), || format!("{} at p={}: {} colorings, dimension {}", name, p, count, dim))?;
        }
    }
    let trefoil = BraidWord::torus(3, 2).unwrap().relations();
    let count = trefoil.enumerate_colorings(3, budget).unwrap();
    ensure(count == 9, || format!("trefoil has {} colorings mod 3", count))
}

fn component_counts() -> Outcome {
    for m in 0..=8u64 {
        for n in 1..=8u64 {
            let expected = if n == 1 {
                1
            } else if (m * n).is_even() {
                (m * n / 2).gcd(&n)
            } else {
                (m * (n - 1) / 2).gcd(&(n - 1)) + 1
            };
            ensure(topological_type(m, n).unwrap().components() == expected, || format!("type of P({},{})", m, n))?;
            let got = paradrome_relations(m as usize, n as usize).unwrap().component_count() as u64;
            ensure(got == expected, || format!("P({},{}) has {} components, expected {}", m, n, got, expected))?;
        }
    }
    Ok(())
}

fn minor_invariance() -> Outcome {
    for (name, sys) in generated_systems(9) {
        let a = sys.coloring_matrix();
        if a.rows() == 0 {
            continue;
        }
        let first = a.minor_det(0, 0).unwrap().magnitude().clone();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let d = a.minor_det(i, j).unwrap().magnitude().clone();
                ensure(d == first, || format!("{}: minor ({},{}) is {}, minor (0,0) is {}", name, i, j, d, first))?;
            }
        }
        ensure(first == sys.link_determinant(), || format!("{}: link determinant differs from minors", name))?;
    }
    Ok(())
}

struct Criterion {
    label: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 8] = [
    Criterion { label: "characteristic polynomial closed form, n = 3..13", limit: Some(Duration::from_secs(1)), run: charpoly_closed_form },
    Criterion { label: "P(m,2) colorable iff p | m, det T(m,2) = m", limit: Some(Duration::from_secs(5)), run: two_strip_law },
    Criterion { label: "odd mn: only 2 colors, determinant 2^k", limit: Some(Duration::from_secs(30)), run: nearly_invisible },
    Criterion { label: "even mn grid: class, determinant and diagram agree", limit: Some(Duration::from_secs(60)), run: even_grid },
    Criterion { label: "torus knot colorability formula", limit: Some(Duration::from_secs(60)), run: torus_knots },
    Criterion { label: "enumerated colorings = p^dimension", limit: None, run: oracle_law },
    Criterion { label: "component counts for m, n <= 8", limit: None, run: component_counts },
    Criterion { label: "determinant independent of deleted minor", limit: None, run: minor_invariance },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&result, c.limit) {
            (Err(why), _) => Err(why.clone()),
            (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {:.2?}, limit {:.0?}", elapsed, limit)),
            (Ok(()), _) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("PASS  criterion {}: {} ({:.2?})", i + 1, c.label, elapsed),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {}: {}: {}", i + 1, c.label, why);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

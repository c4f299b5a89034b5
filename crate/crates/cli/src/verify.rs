//! Cross-checks between the closed forms, the classification, and the
//! diagrams themselves.
//!
//! Every check is independent; [`run`] evaluates them in parallel and returns
//! the outcomes in a fixed order.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use paradromic_core::linkrel::{paradrome_relations, DEFAULT_ENUMERATION_BUDGET};
use paradromic_core::paradrome::{
    classify, pattern_charpoly_closed_form, pattern_minor_recurrences_hold, topological_type,
    torus_det, torus_knot_colorable, transfer_s, transfer_t, unit_eigenspace_is_constant_for,
};
use paradromic_core::{BraidWord, IntMatrix, IntPoly, Pattern, RelationSystem, TopType};
use rayon::prelude::*;

pub type PatternMatrix = fn(usize) -> paradromic_core::Result<IntMatrix>;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_m: usize,
    pub max_n: usize,
    pub primes: Vec<u64>,
    /// Cap on `p^(arcs + circles)` for brute-force enumeration.
    pub budget: u64,
    /// Source of the odd-width transfer matrix; swapped out by negative tests.
    pub pattern_matrix: PatternMatrix,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_m: 8,
            max_n: 7,
            primes: vec![2, 3, 5, 7],
            budget: DEFAULT_ENUMERATION_BUDGET,
            pattern_matrix: transfer_s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL  {}: {}", self.name, why),
        }
    }
}

/// Accumulates cases for one check, remembering the first failure.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, name: &'static str) -> CheckOutcome {
        CheckOutcome { name, cases: self.cases, failure: self.failure }
    }
}

type Check = fn(&VerifyConfig) -> CheckOutcome;

const CHECKS: [Check; 15] = [
    check_pattern_charpoly,
    check_minor_recurrences,
    check_transfer_coherence,
    check_constant_fixed_point,
    check_colorability_triangle,
    check_oracle_law,
    check_component_counts,
    check_two_coloring_rule,
    check_unit_eigenspace,
    check_eigen_diagram_equivalence,
    check_torus_knots,
    check_minor_invariance,
    check_power_of_two,
    check_twist_paths_agree,
    check_torus_det_symmetry,
];

pub fn run(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    CHECKS.par_iter().map(|check| check(cfg)).collect()
}

fn odd_widths(cfg: &VerifyConfig) -> impl Iterator<Item = usize> {
    (3..=cfg.max_n.max(13)).step_by(2)
}

fn grid(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    (1..=cfg.max_n).flat_map(|n| (0..=cfg.max_m).map(move |m| (m, n))).collect()
}

fn odd_prime_list(cfg: &VerifyConfig) -> Vec<u64> {
    cfg.primes.iter().copied().filter(|&p| p != 2).collect()
}

fn divides(p: u64, d: &BigUint) -> bool {
    (d % BigUint::from(p)).is_zero()
}

fn check_pattern_charpoly(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for n in odd_widths(cfg) {
        let s = (cfg.pattern_matrix)(n);
        let ok = match &s {
            Ok(s) => IntPoly::char_poly(s).ok() == pattern_charpoly_closed_form(n).ok(),
            Err(_) => false,
        };
        t.check(ok, || format!("char poly of S_{} differs from -(λ-1)(λ^{}+1)", n, n - 1));
    }
    t.finish("characteristic polynomial of S_n")
}

fn check_minor_recurrences(_cfg: &VerifyConfig) -> CheckOutcome {
    let samples: Vec<i64> = (-4..=6).collect();
    let mut t = Tally::new();
    for k in 2..=8 {
        let ok = pattern_minor_recurrences_hold(k, &samples).unwrap_or(false);
        t.check(ok, || format!("minor recurrences fail at k={}", k));
    }
    t.finish("minor recurrences")
}

fn check_transfer_coherence(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for n in odd_widths(cfg) {
        let induced = Pattern::odd(n).and_then(|p| p.induced_transfer());
        let ok = induced.is_ok() && induced.ok() == (cfg.pattern_matrix)(n).ok();
        t.check(ok, || format!("pattern on {} strands does not induce S_{}", n, n));
    }
    let twist = Pattern::twist().induced_transfer();
    t.check(twist.ok() == Some(transfer_t()), || "twist does not induce T".into());
    t.finish("transfer matrices match their patterns")
}

fn check_constant_fixed_point(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    let ones = |n: usize| vec![num_bigint::BigInt::one(); n];
    t.check(transfer_t().apply(&ones(2)).ok() == Some(ones(2)), || "T·1 ≠ 1".into());
    for n in odd_widths(cfg) {
        let ok = (cfg.pattern_matrix)(n)
            .and_then(|s| s.apply(&ones(n)))
            .is_ok_and(|v| v == ones(n));
        t.check(ok, || format!("S_{}·1 ≠ 1", n));
    }
    t.finish("constant vectors are fixed")
}

fn check_colorability_triangle(cfg: &VerifyConfig) -> CheckOutcome {
    let cells: Vec<(Vec<bool>, String)> = grid(cfg)
        .par_iter()
        .map(|&(m, n)| {
            let mut oks = Vec::new();
            let mut first_bad = String::new();
            let class = classify(m as u64, n as u64).expect("valid cell");
            let sys = paradrome_relations(m, n).expect("valid cell");
            let torus = match class.top_type {
                TopType::Torus(t) => Some(torus_det(t.u(), t.v()).expect("torus")),
                _ => None,
            };
            for &p in &cfg.primes {
                let by_class = class.class.admits(p);
                let by_diagram = sys.is_p_colorable(p).expect("prime");
                let by_det = torus.as_ref().map_or(by_class, |d| divides(p, d));
                let ok = by_class == by_diagram && by_class == by_det;
                if !ok && first_bad.is_empty() {
                    first_bad = format!(
                        "P({},{}) p={}: class {} diagram {} determinant {}",
                        m, n, p, by_class, by_diagram, by_det
                    );
                }
                oks.push(ok);
            }
            (oks, first_bad)
        })
        .collect();
    let mut t = Tally::new();
    for (oks, bad) in cells {
        for ok in oks {
            t.check(ok, || bad.clone());
        }
    }
    t.finish("classification, diagram and determinant agree")
}

fn small_systems(cfg: &VerifyConfig, max_arcs: usize) -> Vec<(String, RelationSystem)> {
    let mut out = Vec::new();
    for (m, n) in grid(cfg) {
        let sys = paradrome_relations(m, n).expect("valid cell");
        if sys.arc_count() <= max_arcs {
            out.push((format!("P({},{})", m, n), sys));
        }
    }
    for u in 0..=12 {
        for v in 1..=12 {
            let sys = BraidWord::torus(u, v).expect("v ≥ 1").relations();
            if sys.arc_count() <= max_arcs {
                out.push((format!("T({},{})", u, v), sys));
            }
        }
    }
    out
}

fn check_oracle_law(cfg: &VerifyConfig) -> CheckOutcome {
    let systems = small_systems(cfg, 64);
    let results: Vec<(bool, String)> = systems
        .par_iter()
        .flat_map_iter(|(name, sys)| {
            cfg.primes.iter().filter_map(move |&p| {
                let count = sys.enumerate_colorings(p, cfg.budget).ok()?;
                let dim = sys.coloring_dimension(p).expect("prime");
                let expected = p.checked_pow(dim as u32);
                Some((
                    expected == Some(count),
                    format!("{} p={}: enumerated {} vs p^{}", name, p, count, dim),
                ))
            })
        })
        .collect();
    let mut t = Tally::new();
    for (ok, why) in results {
        t.check(ok, || why);
    }
    t.finish("brute-force coloring counts")
}

fn check_component_counts(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in grid(cfg) {
        let expected = topological_type(m as u64, n as u64).expect("valid").components();
        let got = paradrome_relations(m, n).expect("valid").component_count() as u64;
        t.check(got == expected, || format!("P({},{}) has {} components, expected {}", m, n, got, expected));
    }
    t.finish("component counts")
}

fn check_two_coloring_rule(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in grid(cfg) {
        let sys = paradrome_relations(m, n).expect("valid");
        let ok = sys.is_p_colorable(2).expect("prime") == (sys.component_count() >= 2);
        t.check(ok, || format!("P({},{}) breaks the 2-coloring rule", m, n));
    }
    t.finish("2-colorable iff several components")
}

fn odd_cells(cfg: &VerifyConfig) -> Vec<(usize, usize)> {
    grid(cfg).into_iter().filter(|&(m, n)| n > 1 && (m * n).is_odd()).collect()
}

fn check_unit_eigenspace(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in odd_cells(cfg) {
        for p in odd_prime_list(cfg) {
            let ok = (cfg.pattern_matrix)(n)
                .and_then(|s| unit_eigenspace_is_constant_for(&s, m as u64, p))
                .unwrap_or(false);
            t.check(ok, || format!("P({},{}) p={}: λ=1 eigenspace is larger than the constants", m, n, p));
        }
    }
    t.finish("λ=1 is a simple eigenvalue for odd mn")
}

fn check_eigen_diagram_equivalence(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in odd_cells(cfg) {
        let sys = paradrome_relations(m, n).expect("valid");
        let reps = (m * (n - 1) / 2) as u64;
        for &p in &cfg.primes {
            let eigen_nullity = (cfg.pattern_matrix)(n)
                .and_then(|s| s.pow_mod(reps, p)?.sub(&IntMatrix::identity(n)))
                .and_then(|a| a.rank_mod(p))
                .map(|r| n - r);
            let dim = sys.coloring_dimension(p).expect("prime");
            t.check(eigen_nullity == Ok(dim), || {
                format!("P({},{}) p={}: eigenspace {:?} vs diagram colorings {}", m, n, p, eigen_nullity, dim)
            });
        }
    }
    t.finish("eigenvectors of S_n^u are the diagram colorings")
}

fn check_torus_knots(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for u in 1..=12u64 {
        for v in 1..=12u64 {
            if u.gcd(&v) != 1 {
                continue;
            }
            let sys = BraidWord::torus(u as usize, v as usize).expect("v ≥ 1").relations();
            for &p in cfg.primes.iter().filter(|&&p| p <= 13) {
                let formula = torus_knot_colorable(u, v, p).expect("coprime");
                let diagram = sys.is_p_colorable(p).expect("prime");
                t.check(formula == diagram, || format!("T({},{}) p={}: formula {} diagram {}", u, v, p, formula, diagram));
            }
            if u % 2 == 1 && v % 2 == 1 {
                t.check(sys.link_determinant().is_one(), || format!("T({},{}) should have determinant 1", u, v));
            }
        }
    }
    t.finish("torus knot colorability")
}

fn check_minor_invariance(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (name, sys) in small_systems(cfg, 9) {
        let m = sys.coloring_matrix();
        if m.rows() == 0 || !m.is_square() {
            continue;
        }
        let reference = sys.link_determinant();
        let all_equal = (0..m.rows()).all(|i| {
            (0..m.cols()).all(|j| {
                let d = m.minor_det(i, j).expect("in range");
                d.magnitude() == &reference
            })
        });
        t.check(all_equal, || format!("{}: minors differ", name));
    }
    t.finish("determinant independent of deleted row and column")
}

fn check_power_of_two(cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for (m, n) in odd_cells(cfg).into_iter().filter(|&(m, n)| m <= 5 && n <= 5) {
        let d = paradrome_relations(m, n).expect("valid").link_determinant();
        let ok = d.count_ones() == 1 && d >= BigUint::from(2u32);
        t.check(ok, || format!("det P({},{}) = {} is not 2^k with k ≥ 1", m, n, d));
    }
    t.finish("torus link plus core has determinant 2^k")
}

fn check_twist_paths_agree(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for m in 0..=12 {
        let a = Pattern::twist().closure(m);
        let b = BraidWord::torus(m, 2).expect("two strands").relations();
        let same = a.link_determinant() == b.link_determinant()
            && [2, 3, 5, 7, 11, 13].iter().all(|&p| a.is_p_colorable(p).ok() == b.is_p_colorable(p).ok());
        t.check(same, || format!("P({},2): twist and braid diagrams disagree", m));
    }
    t.finish("twist and braid constructions of P(m,2) agree")
}

fn check_torus_det_symmetry(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut t = Tally::new();
    for u in 1..=10u64 {
        for v in 1..=10u64 {
            let ok = torus_det(u, v).ok() == torus_det(v, u).ok();
            t.check(ok, || format!("det T({},{}) ≠ det T({},{})", u, v, v, u));
        }
    }
    t.finish("torus determinant symmetric in u, v")
}

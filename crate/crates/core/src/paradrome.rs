//! Transfer matrices, topological types and colorability classes of the
//! paradromic rings `P(m,n)`, plus determinants of torus links.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linkrel::paradrome_relations;
use crate::{check_prime, Error, IntMatrix, IntPoly, Result};

/// Largest diagram (in arcs) for which [`classify`] computes the determinant
/// of a torus-link-plus-core exactly.
pub const DEFAULT_EXACT_ARC_LIMIT: u64 = 40;

/// `m` half twists, strip cut into `n` sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParadromeSpec {
    m: u64,
    n: u64,
}

impl ParadromeSpec {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameters("P(m,n) needs n ≥ 1"));
        }
        Ok(ParadromeSpec { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of repetitions of the odd-width pattern, `m(n−1)/2`.
    pub fn pattern_repetitions(&self) -> u64 {
        self.m * (self.n - 1) / 2
    }
}

/// The torus link `T(u,v)` with `d = gcd(u,v)` components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusSpec {
    u: u64,
    v: u64,
    d: u64,
}

impl TorusSpec {
    pub fn new(u: u64, v: u64) -> Result<Self> {
        if v == 0 {
            return Err(Error::BadParameters("T(u,v) needs v ≥ 1"));
        }
        Ok(TorusSpec { u, v, d: u.gcd(&v) })
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn components(&self) -> u64 {
        self.d
    }
}

impl fmt::Display for TorusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.u, self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TopType {
    Torus(TorusSpec),
    /// A torus link together with the core circle of the solid torus.
    TorusPlusCore(TorusSpec),
    /// A single unknotted circle, `T(0,1)`.
    Circle,
}

impl TopType {
    pub fn components(&self) -> u64 {
        match self {
            TopType::Torus(t) => t.components(),
            TopType::TorusPlusCore(t) => t.components() + 1,
            TopType::Circle => 1,
        }
    }
}

impl fmt::Display for TopType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopType::Torus(t) => write!(f, "{}", t),
            TopType::TorusPlusCore(t) => write!(f, "{}+C", t),
            TopType::Circle => f.write_str("T(0,1)"),
        }
    }
}

/// Which primes color a link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorClass {
    /// No prime.
    Invisible,
    /// Only 2.
    NearlyInvisible,
    /// Every prime.
    Rainbow,
    /// Exactly the primes dividing `k` (`k ≥ 2`).
    PrimesDividing(u64),
}

impl ColorClass {
    /// `PrimesDividing(k)`, with `k = 1` read as invisible and `k = 0` as rainbow.
    pub fn primes_dividing(k: u64) -> Self {
        match k {
            0 => ColorClass::Rainbow,
            1 => ColorClass::Invisible,
            k => ColorClass::PrimesDividing(k),
        }
    }

    /// Class of a link with the given determinant. Powers of two are
    /// reported as `NearlyInvisible`.
    pub fn from_determinant(det: &BigUint) -> Self {
        if det.is_zero() {
            ColorClass::Rainbow
        } else if det.is_one() {
            ColorClass::Invisible
        } else if det.count_ones() == 1 {
            ColorClass::NearlyInvisible
        } else {
            match det.to_u64() {
                Some(k) => ColorClass::PrimesDividing(k),
                None => ColorClass::Rainbow,
            }
        }
    }

    /// Is `p` (assumed prime) a coloring prime for this class?
    pub fn admits(&self, p: u64) -> bool {
        match *self {
            ColorClass::Invisible => false,
            ColorClass::NearlyInvisible => p == 2,
            ColorClass::Rainbow => true,
            ColorClass::PrimesDividing(k) => k % p == 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ColorClass::Invisible => "Invisible",
            ColorClass::NearlyInvisible => "NearlyInvisible",
            ColorClass::Rainbow => "Rainbow",
            ColorClass::PrimesDividing(_) => "PrimesDividing",
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            ColorClass::PrimesDividing(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ColorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorClass::PrimesDividing(k) => write!(f, "PrimesDividing({})", k),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DetInfo {
    Exact(BigUint),
    /// A power of two, at least 2, not computed because the diagram is large.
    PowerOfTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub top_type: TopType,
    pub class: ColorClass,
    pub det: DetInfo,
}

/// Transfer matrix of the single twist: colors `(x_1, x_2)` become
/// `(2x_1 − x_2, x_1)`.
pub fn transfer_t() -> IntMatrix {
    IntMatrix::from_rows(&[[2, -1], [1, 0]])
}

/// Transfer matrix `S_n` of the odd-width pattern (`n` odd, `n ≥ 3`).
///
/// First column is 2 except for a 1 in the last row, the superdiagonal is −1,
/// and the 2×2 block `[[−2, 1], [−1, 0]]` sits in rows `(n−1)/2, (n+1)/2` and
/// columns `(n+1)/2, (n+3)/2` (1-based).
pub fn transfer_s(n: usize) -> Result<IntMatrix> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadPatternWidth(n));
    }
    let mut s = IntMatrix::zeros(n, n);
    // 0-based: block rows r, r+1 and columns r+1, r+2
    let r = (n - 1) / 2 - 1;
    for i in 0..n - 1 {
        s.set(i, 0, 2);
        if i != r && i != r + 1 {
            s.set(i, i + 1, -1);
        }
    }
    s.set(n - 1, 0, 1);
    s.set(r, r + 1, -2);
    s.set(r, r + 2, 1);
    s.set(r + 1, r + 1, -1);
    Ok(s)
}

/// Closed form `−(λ−1)(λ^{n−1}+1)` of the characteristic polynomial of `S_n`.
pub fn pattern_charpoly_closed_form(n: usize) -> Result<IntPoly> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadPatternWidth(n));
    }
    let lambda_minus_one = IntPoly::from_i64(&[-1, 1]);
    let tail = &IntPoly::monomial(1, n - 1) + &IntPoly::one();
    Ok(-(&lambda_minus_one * &tail))
}

/// `Ā_k(λ)`: first row `(2−λ, −1, 0, …)`, second row `(2, 0, −1, 0, …)`, and
/// for `i ≥ 2` row `i` is `2` in column 0, `−λ` on the diagonal and `−1`
/// right of it.
fn minor_a_bar(k: usize, lambda: &BigInt) -> IntMatrix {
    let mut a = minor_d_bar(k, lambda);
    if k >= 2 {
        a.set(1, 1, 0);
    }
    a
}

/// `D̄_k(λ)`: like `Ā_k` but with `−λ` at `(1,1)` too.
fn minor_d_bar(k: usize, lambda: &BigInt) -> IntMatrix {
    let mut a = IntMatrix::zeros(k, k);
    for i in 0..k {
        a.set(i, 0, 2);
        if i > 0 {
            a.set(i, i, -lambda);
        }
        if i + 1 < k {
            a.set(i, i + 1, -1);
        }
    }
    if k > 0 {
        a.set(0, 0, BigInt::from(2) - lambda);
    }
    a
}

/// Checks, at each integer sample `λ0`, the minor identities behind the
/// closed form of the characteristic polynomial of `S_n`, for sizes up to `k`:
///
/// - `det Ā_j = 2 − λ0·det Ā_{j−1}` for `3 ≤ j ≤ k`,
/// - `(1+λ0)·det Ā_j = 2(1 − (−λ0)^{j−1})` for `2 ≤ j ≤ k`,
/// - `det D̄_j = 2 − λ0·det D̄_{j−1}` for `2 ≤ j ≤ k`,
/// - `(1+λ0)·det D̄_j = 2 − (−λ0)^j (1 − λ0)` for `2 ≤ j ≤ k`.
///
/// The closed forms are skipped at the pole `λ0 = −1`.
pub fn pattern_minor_recurrences_hold(k: usize, samples: &[i64]) -> Result<bool> {
    if k < 2 {
        return Err(Error::BadParameters("minor recurrences start at k = 2"));
    }
    if samples.len() < k + 2 {
        return Err(Error::TooFewSamplePoints { needed: k + 2, got: samples.len() });
    }
    let two = BigInt::from(2);
    for &x in samples {
        let lambda = BigInt::from(x);
        let neg_pow = |e: usize| BigInt::from(-x).pow(e as u32);
        let det_a: Vec<BigInt> =
            (0..=k).map(|j| minor_a_bar(j, &lambda).det().expect("square")).collect();
        let det_d: Vec<BigInt> =
            (0..=k).map(|j| minor_d_bar(j, &lambda).det().expect("square")).collect();
        for j in 2..=k {
            if j >= 3 && det_a[j] != &two - &lambda * &det_a[j - 1] {
                return Ok(false);
            }
            if det_d[j] != &two - &lambda * &det_d[j - 1] {
                return Ok(false);
            }
            if x != -1 {
                let scale = BigInt::from(1 + x);
                if &scale * &det_a[j] != &two * (BigInt::one() - neg_pow(j - 1)) {
                    return Ok(false);
                }
                if &scale * &det_d[j] != &two - neg_pow(j) * BigInt::from(1 - x) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Topological type of `P(m,n)`: a circle for `n = 1`, `T(mn/2, n)` for even
/// `mn`, and `T(m(n−1)/2, n−1)` plus the core for odd `mn`.
pub fn topological_type(m: u64, n: u64) -> Result<TopType> {
    let spec = ParadromeSpec::new(m, n)?;
    Ok(if n == 1 {
        TopType::Circle
    } else if (m * n).is_even() {
        TopType::Torus(TorusSpec::new(m * n / 2, n)?)
    } else {
        TopType::TorusPlusCore(TorusSpec::new(spec.pattern_repetitions(), n - 1)?)
    })
}

/// Colorability class of `P(m,n)` with the default exact-determinant limit.
pub fn classify(m: u64, n: u64) -> Result<Classification> {
    classify_with_limit(m, n, DEFAULT_EXACT_ARC_LIMIT)
}

/// Colorability class of `P(m,n)`.
///
/// Torus cases get their determinant from [`torus_det`]. For a torus link
/// plus core the determinant is computed from the diagram when it has at most
/// `max_arcs` arcs, and reported as [`DetInfo::PowerOfTwo`] otherwise.
pub fn classify_with_limit(m: u64, n: u64, max_arcs: u64) -> Result<Classification> {
    let top_type = topological_type(m, n)?;
    let (class, det) = match top_type {
        TopType::Circle => (ColorClass::Invisible, DetInfo::Exact(BigUint::one())),
        TopType::TorusPlusCore(_) => {
            let arcs = ParadromeSpec::new(m, n)?.pattern_repetitions() * n;
            let det = if arcs <= max_arcs {
                let sys = paradrome_relations(to_usize(m)?, to_usize(n)?)?;
                DetInfo::Exact(sys.link_determinant())
            } else {
                DetInfo::PowerOfTwo
            };
            (ColorClass::NearlyInvisible, det)
        }
        TopType::Torus(t) => {
            let class = if n == 2 {
                ColorClass::primes_dividing(m)
            } else if n == 4 && m.is_odd() {
                ColorClass::primes_dividing(2 * m)
            } else if n.is_odd() && (m / 2).is_odd() {
                ColorClass::NearlyInvisible
            } else {
                ColorClass::Rainbow
            };
            (class, DetInfo::Exact(torus_det(t.u(), t.v())?))
        }
    };
    Ok(Classification { top_type, class, det })
}

fn to_usize(x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::BadParameters("value does not fit in usize"))
}

/// `Δ(x) = (1−x)(1−x^{uv/d})^d / ((1−x^u)(1−x^v))` for `u, v ≥ 1`, with
/// `d = gcd(u,v)`, by exact polynomial division.
pub fn torus_delta(u: u64, v: u64) -> Result<IntPoly> {
    if u == 0 || v == 0 {
        return Err(Error::BadParameters("Δ(x) needs u, v ≥ 1"));
    }
    let d = u.gcd(&v);
    let l = to_usize(u / d * v)?;
    let d32 = u32::try_from(d).map_err(|_| Error::BadParameters("gcd too large"))?;
    let num = &IntPoly::one_minus_power(1) * &IntPoly::one_minus_power(l).pow(d32);
    let den = &IntPoly::one_minus_power(to_usize(u)?) * &IntPoly::one_minus_power(to_usize(v)?);
    num.div_exact(&den)
}

/// Determinant of the torus link `T(u,v)`, `|Δ(−1)|`.
///
/// `T(u,1)` is an unknot (determinant 1) and `T(0,v)` with `v ≥ 2` is an
/// unlink (determinant 0); both bypass the formula.
pub fn torus_det(u: u64, v: u64) -> Result<BigUint> {
    match (u, v) {
        (_, 0) => Err(Error::BadParameters("T(u,v) needs v ≥ 1")),
        (_, 1) => Ok(BigUint::one()),
        (0, _) => Ok(BigUint::zero()),
        _ => {
            let value = torus_delta(u, v)?.eval_i64(-1);
            Ok(value.abs().to_biguint().expect("nonnegative"))
        }
    }
}

/// Colorability of the torus knot `T(u,v)` (`gcd(u,v) = 1`) by the prime
/// `p`: either `u` is even and `p | v`, or `v` is even and `p | u`.
pub fn torus_knot_colorable(u: u64, v: u64, p: u64) -> Result<bool> {
    if u == 0 || v == 0 || u.gcd(&v) != 1 {
        return Err(Error::NotCoprime(u, v));
    }
    check_prime(p)?;
    Ok((u.is_even() && v % p == 0) || (v.is_even() && u % p == 0))
}

/// For odd `m`, odd `n > 1` and an odd prime `p`: is the λ = 1 eigenspace of
/// `S_n^{m(n−1)/2}` mod `p` just the constants, i.e. does
/// `S_n^{m(n−1)/2} − I` have rank `n − 1`?
pub fn unit_eigenspace_is_constant(m: u64, n: u64, p: u64) -> Result<bool> {
    unit_eigenspace_is_constant_for(&transfer_s(to_usize(n)?)?, m, p)
}

/// Same as [`unit_eigenspace_is_constant`] for a caller-supplied pattern
/// matrix of odd size `n`.
pub fn unit_eigenspace_is_constant_for(s: &IntMatrix, m: u64, p: u64) -> Result<bool> {
    let n = s.rows() as u64;
    if m.is_even() || n.is_even() || n < 3 {
        return Err(Error::BadParameters("need m odd and n odd with n > 1"));
    }
    check_prime(p)?;
    if p == 2 {
        return Err(Error::BadParameters("need an odd prime"));
    }
    let reps = m * (n - 1) / 2;
    let shifted = s.pow_mod(reps, p)?.sub(&IntMatrix::identity(s.rows()))?;
    Ok(shifted.rank_mod(p)? == s.rows() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn transfer_matrices() {
        assert_eq!(transfer_t(), IntMatrix::from_rows(&[[2, -1], [1, 0]]));
        let c = [BigInt::from(7), BigInt::from(7)];
        assert_eq!(transfer_t().apply(&c).unwrap(), c.to_vec());
        assert_eq!(transfer_t().det().unwrap(), BigInt::one());
        assert_eq!(
            transfer_s(3).unwrap(),
            IntMatrix::from_rows(&[[2, -2, 1], [2, -1, 0], [1, 0, 0]])
        );
        assert_eq!(transfer_s(4), Err(Error::BadPatternWidth(4)));
        assert_eq!(transfer_s(1), Err(Error::BadPatternWidth(1)));
    }

    #[test]
    fn transfer_s_five_block_position() {
        assert_eq!(
            transfer_s(5).unwrap(),
            IntMatrix::from_rows(&[
                [2, -1, 0, 0, 0],
                [2, 0, -2, 1, 0],
                [2, 0, -1, 0, 0],
                [2, 0, 0, 0, -1],
                [1, 0, 0, 0, 0],
            ])
        );
    }

    #[test]
    fn rows_sum_to_one() {
        for n in (3..=13).step_by(2) {
            let s = transfer_s(n).unwrap();
            let ones = alloc::vec![BigInt::one(); n];
            assert_eq!(s.apply(&ones).unwrap(), ones, "n={}", n);
        }
    }

    #[test]
    fn closed_form_charpoly() {
        assert_eq!(pattern_charpoly_closed_form(3).unwrap(), IntPoly::from_i64(&[1, -1, 1, -1]));
        assert_eq!(
            pattern_charpoly_closed_form(5).unwrap(),
            IntPoly::from_i64(&[1, -1, 0, 0, 1, -1])
        );
        for n in (3..=13).step_by(2) {
            let direct = IntPoly::char_poly(&transfer_s(n).unwrap()).unwrap();
            assert_eq!(direct, pattern_charpoly_closed_form(n).unwrap(), "n={}", n);
        }
        assert!(pattern_charpoly_closed_form(6).is_err());
    }

    #[test]
    fn minor_recurrences() {
        assert!(pattern_minor_recurrences_hold(2, &[0, 1, 2, 3]).unwrap());
        assert!(pattern_minor_recurrences_hold(6, &[-3, -2, 0, 1, 2, 3, 4, 5]).unwrap());
        // the pole is skipped, not failed
        assert!(pattern_minor_recurrences_hold(3, &[-1, 0, 1, 2, 3]).unwrap());
        assert_eq!(
            pattern_minor_recurrences_hold(4, &[0, 1, 2]),
            Err(Error::TooFewSamplePoints { needed: 6, got: 3 })
        );
        assert!(pattern_minor_recurrences_hold(1, &[0, 1, 2]).is_err());
    }

    #[test]
    fn minor_shapes() {
        let l = BigInt::from(5);
        assert_eq!(minor_a_bar(2, &l), IntMatrix::from_rows(&[[-3, -1], [2, 0]]));
        assert_eq!(
            minor_d_bar(3, &l),
            IntMatrix::from_rows(&[[-3, -1, 0], [2, -5, -1], [2, 0, -5]])
        );
    }

    #[test]
    fn topological_types() {
        assert_eq!(topological_type(3, 2).unwrap().to_string(), "T(3,2)");
        let p33 = topological_type(3, 3).unwrap();
        assert_eq!(p33.to_string(), "T(3,2)+C");
        assert_eq!(p33.components(), 2);
        assert_eq!(topological_type(7, 1).unwrap(), TopType::Circle);
        assert_eq!(topological_type(0, 3).unwrap().components(), 3);
        assert!(topological_type(1, 0).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = |m, n| classify(m, n).unwrap();
        assert_eq!(c(3, 2).class, ColorClass::PrimesDividing(3));
        assert_eq!(c(3, 2).det, DetInfo::Exact(BigUint::from(3u32)));
        assert_eq!(c(3, 3).class, ColorClass::NearlyInvisible);
        assert_eq!(c(2, 3).class, ColorClass::NearlyInvisible);
        assert_eq!(c(2, 3).det, DetInfo::Exact(BigUint::from(4u32)));
        assert_eq!(c(4, 3).class, ColorClass::Rainbow);
        assert_eq!(c(4, 3).det, DetInfo::Exact(BigUint::zero()));
        assert_eq!(c(1, 4).class, ColorClass::PrimesDividing(2));
        assert_eq!(c(9, 1).class, ColorClass::Invisible);
        assert_eq!(c(9, 1).det, DetInfo::Exact(BigUint::one()));
        assert_eq!(c(1, 2).class, ColorClass::Invisible);
        assert_eq!(c(0, 2).class, ColorClass::Rainbow);
        assert_eq!(classify_with_limit(3, 7, 40).unwrap().det, DetInfo::PowerOfTwo);
    }

    #[test]
    fn normalization() {
        assert_eq!(ColorClass::primes_dividing(0), ColorClass::Rainbow);
        assert_eq!(ColorClass::primes_dividing(1), ColorClass::Invisible);
        assert_eq!(ColorClass::primes_dividing(6).modulus(), Some(6));
        assert!(ColorClass::PrimesDividing(6).admits(3));
        assert!(!ColorClass::PrimesDividing(6).admits(5));
        assert_eq!(ColorClass::from_determinant(&BigUint::from(8u32)), ColorClass::NearlyInvisible);
    }

    #[test]
    fn torus_determinants() {
        let d = |u, v| torus_det(u, v).unwrap().to_u64().unwrap();
        assert_eq!((d(3, 2), d(5, 2), d(2, 2)), (3, 5, 2));
        assert_eq!((d(3, 3), d(5, 5), d(6, 3)), (4, 16, 0));
        assert_eq!((d(0, 1), d(7, 1), d(0, 4), d(1, 5)), (1, 1, 0, 1));
        assert_eq!(d(4, 2), 4);
        assert!(torus_det(3, 0).is_err());
    }

    #[test]
    fn torus_determinant_symmetry() {
        for u in 1..=9 {
            for v in 1..=9 {
                assert_eq!(torus_det(u, v).unwrap(), torus_det(v, u).unwrap(), "T({},{})", u, v);
            }
        }
    }

    #[test]
    fn torus_knots() {
        assert!(torus_knot_colorable(3, 2, 3).unwrap());
        assert!(!torus_knot_colorable(5, 2, 3).unwrap());
        for p in [2, 3, 5, 7, 11, 13] {
            assert!(!torus_knot_colorable(3, 5, p).unwrap());
        }
        assert_eq!(torus_knot_colorable(4, 2, 2), Err(Error::NotCoprime(4, 2)));
        assert_eq!(torus_knot_colorable(3, 2, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn simple_unit_eigenvalue() {
        assert!(unit_eigenspace_is_constant(3, 3, 3).unwrap());
        assert!(unit_eigenspace_is_constant(3, 3, 5).unwrap());
        assert!(unit_eigenspace_is_constant(5, 5, 7).unwrap());
        assert!(unit_eigenspace_is_constant(2, 3, 3).is_err());
        assert!(unit_eigenspace_is_constant(3, 3, 2).is_err());
        // char poly of S_3^3 is −(λ−1)(λ²+1)
        let cube = transfer_s(3).unwrap();
        let cube = cube.mul(&cube).unwrap().mul(&cube).unwrap();
        assert_eq!(IntPoly::char_poly(&cube).unwrap(), IntPoly::from_i64(&[1, -1, 1, -1]));
    }
}

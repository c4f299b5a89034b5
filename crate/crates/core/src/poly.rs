//! Integer-coefficient polynomials in one variable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, IntMatrix, Result};

/// Coefficients in ascending degree with no trailing zeros; the zero
/// polynomial has no coefficients. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `1 − x^k`.
    pub fn one_minus_power(k: usize) -> Self {
        &Self::one() - &Self::monomial(1, k)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `num / den` over the integers.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let Some(dd) = den.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if nd < dd {
            return Err(Error::NotDivisible);
        }
        let lead = den.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `det(A − λI)` by Berkowitz's division-free algorithm.
    pub fn char_poly(a: &IntMatrix) -> Result<IntPoly> {
        if !a.is_square() {
            return Err(Error::NotSquare(a.rows(), a.cols()));
        }
        let n = a.rows();
        // coefficients of det(λI − A_k), highest degree first, for the leading
        // k×k block A_k
        let mut v: Vec<BigInt> = vec![BigInt::one()];
        for k in 0..n {
            // Toeplitz column: 1, −a_kk, −R·C, −R·M·C, …, −R·M^(k−1)·C
            let mut t = Vec::with_capacity(k + 2);
            t.push(BigInt::one());
            t.push(-a.get(k, k).clone());
            let mut mc: Vec<BigInt> = (0..k).map(|i| a.get(i, k).clone()).collect();
            for _ in 0..k {
                let rc: BigInt = (0..k).map(|j| a.get(k, j) * &mc[j]).sum();
                t.push(-rc);
                mc = (0..k)
                    .map(|i| (0..k).map(|j| a.get(i, j) * &mc[j]).sum())
                    .collect();
            }
            let mut next = vec![BigInt::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    *slot += &t[i - j] * vj;
                }
            }
            v = next;
        }
        v.reverse();
        let p = IntPoly::new(v);
        Ok(if n % 2 == 1 { -p } else { p })
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn write_superscript(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
    if k >= 10 {
        write_superscript(f, k / 10)?;
    }
    write!(f, "{}", SUPERSCRIPTS[k % 10])
}

/// Prints in descending degree with `λ` as the variable, e.g. `-λ³+λ²-λ+1`.
/// The alternate form (`{:#}`) uses `x`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let var = if f.alternate() { 'x' } else { 'λ' };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            if k >= 1 {
                write!(f, "{}", var)?;
            }
            if k >= 2 {
                write_superscript(f, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

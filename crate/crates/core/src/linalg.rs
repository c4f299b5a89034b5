//! Dense exact linear algebra over the integers and over GF(p).
//!
//! Matrices hold arbitrary-precision entries: minors of coloring matrices grow
//! exponentially with the number of crossings, so fixed-width arithmetic is
//! not an option. Modular routines reduce once into `u64` residues and work
//! with `u128` products.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{check_prime, Error, Result};

/// Dense row-major matrix of big integers. The 0×0 matrix is legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(entries.len(), rows * cols));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows.
    ///
    /// Panics if the rows are ragged; this is meant for literals.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows in IntMatrix::from_rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.entries[r * self.cols + c] = value.into();
    }

    pub fn add_to(&mut self, r: usize, c: usize, delta: i64) {
        self.entries[r * self.cols + c] += delta;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare(self.rows, self.cols))
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// `A − λ·I` for an integer `λ`.
    pub fn shift_diagonal(&self, lambda: &BigInt) -> Result<IntMatrix> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols + i] -= lambda;
        }
        Ok(out)
    }

    /// Multiplies by an integer column vector.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Copy of the matrix with one row and one column removed.
    pub fn without(&self, drop_row: usize, drop_col: usize) -> Result<IntMatrix> {
        if drop_row >= self.rows {
            return Err(Error::IndexOutOfRange { index: drop_row, bound: self.rows });
        }
        if drop_col >= self.cols {
            return Err(Error::IndexOutOfRange { index: drop_col, bound: self.cols });
        }
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != drop_row) {
            for c in (0..self.cols).filter(|&c| c != drop_col) {
                entries.push(self.get(r, c).clone());
            }
        }
        Ok(IntMatrix { rows: self.rows - 1, cols: self.cols - 1, entries })
    }

    /// Appends `extra` all-zero columns.
    pub fn pad_columns(&self, extra: usize) -> IntMatrix {
        let cols = self.cols + extra;
        let mut out = IntMatrix::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[r * cols + c] = self.get(r, c).clone();
            }
        }
        out
    }

    fn residues(&self, p: u64) -> Vec<Vec<u64>> {
        let modulus = BigInt::from(p);
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| reduce(x, &modulus)).collect())
            .collect()
    }

    /// `A^k` with every entry reduced into `[0, p)`. `A^0` is the identity.
    pub fn pow_mod(&self, k: u64, p: u64) -> Result<IntMatrix> {
        self.require_square()?;
        if p < 2 {
            return Err(Error::ModulusTooSmall(p));
        }
        let n = self.rows;
        let mut base = self.residues(p);
        let mut acc: Vec<Vec<u64>> =
            (0..n).map(|i| (0..n).map(|j| u64::from(i == j) % p).collect()).collect();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, p);
            }
            e >>= 1;
            if e > 0 {
                base = mul_mod(&base, &base, p);
            }
        }
        let entries = acc.into_iter().flatten().map(BigInt::from).collect();
        Ok(IntMatrix { rows: n, cols: n, entries })
    }

    /// Rank over GF(p).
    pub fn rank_mod(&self, p: u64) -> Result<usize> {
        check_prime(p)?;
        let mut m = self.residues(p);
        Ok(rref_mod(&mut m, self.cols, p).len())
    }

    /// Basis of the right nullspace over GF(p), as the rows of the reduced
    /// echelon form of the nullspace. The basis is canonical for the subspace.
    pub fn nullspace_mod(&self, p: u64) -> Result<Vec<ModVector>> {
        check_prime(p)?;
        let mut m = self.residues(p);
        let pivots = rref_mod(&mut m, self.cols, p);
        let mut basis: Vec<Vec<u64>> = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[row][free]) % p;
            }
            basis.push(v);
        }
        let keep = rref_mod(&mut basis, self.cols, p).len();
        basis.truncate(keep);
        Ok(basis.into_iter().map(|coords| ModVector { modulus: p, coords }).collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination; the 0×0
    /// determinant is 1.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if pivot != k {
                a.swap(pivot, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinant of the matrix with `drop_row` and `drop_col` removed.
    pub fn minor_det(&self, drop_row: usize, drop_col: usize) -> Result<BigInt> {
        self.require_square()?;
        self.without(drop_row, drop_col)?.det()
    }

    /// Invariant factors `d_1 | d_2 | … ` of the Smith normal form, one per
    /// diagonal position (`min(rows, cols)` of them), zeros last.
    pub fn smith_normal_form(&self) -> Vec<BigUint> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| self.row(r).to_vec()).collect();
        let mut diag = Vec::with_capacity(rows.min(cols));
        for t in 0..rows.min(cols) {
            let Some((pr, pc)) = smallest_entry(&a, t..rows, t..cols) else {
                break;
            };
            a.swap(t, pr);
            swap_cols(&mut a, t, pc);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if !a[i][t].is_zero() {
                        let q = a[i][t].div_floor(&a[t][t]);
                        for j in t..cols {
                            let s = &q * &a[t][j];
                            a[i][j] -= s;
                        }
                        dirty |= !a[i][t].is_zero();
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() {
                        let q = a[t][j].div_floor(&a[t][t]);
                        for row in a.iter_mut().skip(t) {
                            let s = &q * &row[t];
                            row[j] -= s;
                        }
                        dirty |= !a[t][j].is_zero();
                    }
                }
                if dirty {
                    // a remainder is now smaller than the pivot
                    let (pr, pc) = smallest_in_cross(&a, t);
                    a.swap(t, pr);
                    swap_cols(&mut a, t, pc);
                    continue;
                }
                // pivot must divide the rest; otherwise fold the offending row in
                let offending = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match offending {
                    Some(i) => {
                        for j in t..cols {
                            let s = a[i][j].clone();
                            a[t][j] += s;
                        }
                    }
                    None => break,
                }
            }
            diag.push(a[t][t].abs().to_biguint().expect("absolute value"));
        }
        diag.resize(rows.min(cols), BigUint::zero());
        diag
    }
}

fn smallest_entry(
    a: &[Vec<BigInt>],
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut best = (t, t);
    let mut best_abs: Option<BigInt> = None;
    let cells = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
    for (i, j) in cells {
        if a[i][j].is_zero() {
            continue;
        }
        let v = a[i][j].abs();
        if best_abs.as_ref().is_none_or(|b| v < *b) {
            best = (i, j);
            best_abs = Some(v);
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

fn reduce(x: &BigInt, modulus: &BigInt) -> u64 {
    x.mod_floor(modulus).to_u64().expect("residue fits in u64")
}

fn mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k] as u128;
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = ((out[i][j] as u128 + aik * bk[j] as u128) % p as u128) as u64;
            }
        }
    }
    out
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u64(a, p - 2, p)
}

fn pow_mod_u64(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// In-place reduced row echelon form over GF(p); returns the pivot columns.
/// Zero rows end up at the bottom.
fn rref_mod(m: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c] as u128;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                let sub = f * y as u128 % p as u128;
                *x = ((*x as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", x)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// A vector of residues mod a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVector {
    modulus: u64,
    coords: Vec<u64>,
}

impl ModVector {
    /// Reduces arbitrary integers mod `p`.
    pub fn new(p: u64, coords: &[i64]) -> Result<Self> {
        check_prime(p)?;
        let coords = coords.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        Ok(ModVector { modulus: p, coords })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// True when every coordinate is equal (including the empty vector).
    pub fn is_constant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] == w[1])
    }

    /// Adds `c` to every coordinate.
    pub fn shifted(&self, c: u64) -> ModVector {
        let p = self.modulus;
        let coords = self.coords.iter().map(|&x| ((x as u128 + c as u128) % p as u128) as u64).collect();
        ModVector { modulus: p, coords }
    }

    /// True when `A·v ≡ 0 (mod p)`.
    pub fn is_null_for(&self, a: &IntMatrix) -> bool {
        if a.cols() != self.coords.len() {
            return false;
        }
        let p = BigInt::from(self.modulus);
        (0..a.rows()).all(|r| {
            let s: BigInt = a.row(r).iter().zip(&self.coords).map(|(x, &y)| x * BigInt::from(y)).sum();
            s.mod_floor(&p).is_zero()
        })
    }
}

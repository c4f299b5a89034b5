//! Fox p-colorings of paradromic rings `P(m,n)` and torus links `T(u,v)`.
//!
//! The crate is `no_std` (it needs `alloc`) and splits into four layers:
//!
//! - [`linalg`]: exact integer and GF(p) dense linear algebra,
//! - [`poly`]: integer polynomials and division-free characteristic polynomials,
//! - [`linkrel`]: link diagrams as crossing-relation systems, their coloring
//!   matrices, determinants, and a brute-force coloring counter,
//! - [`paradrome`]: transfer matrices, the characteristic polynomial of the
//!   odd-width pattern matrix, topological types and colorability classes.
//!
//! IO, file formats and the command line live in the `paradromic` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod linalg;
pub mod linkrel;
pub mod paradrome;
pub mod poly;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, ModVector};
pub use linkrel::{BraidWord, Crossing, Pattern, RelationSystem};
pub use paradrome::{ColorClass, Classification, DetInfo, ParadromeSpec, TopType, TorusSpec};
pub use poly::IntPoly;

/// Trial-division primality test; moduli here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        Err(Error::ModulusTooSmall(p))
    } else if !is_prime(p) {
        Err(Error::NotPrime(p))
    } else {
        Ok(())
    }
}

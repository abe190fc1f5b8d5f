//! Residue arithmetic in Z_d.

use crate::error::{Error, Result};

/// A modulus `d >= 1`. Residues are plain `u64` values in `0..d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(Modulus(d))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `d / 2`, only meaningful when `d` is even.
    #[inline]
    pub fn half(self) -> u64 {
        self.0 / 2
    }

    #[inline]
    pub fn contains(self, x: u64) -> bool {
        x < self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    /// Reduces a signed value into `0..d`.
    #[inline]
    pub fn reduce_i128(self, x: i128) -> u64 {
        x.rem_euclid(self.0 as i128) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        let d = self.0 as u128;
        ((a as u128 + d - (b as u128 % d)) % d) as u64
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    /// Inverse of 2 modulo an odd `d`.
    pub fn inverse_of_two(self) -> Option<u64> {
        if self.is_even() {
            None
        } else {
            // 2 * (d + 1) / 2 = d + 1 ≡ 1
            Some(self.reduce((self.0 / 2) + 1))
        }
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

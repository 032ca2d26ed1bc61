//! Finite fields of order `q <= 61` with `q = 1 mod 4`, as lookup tables.
//!
//! `GF(p^2)` is `GF(p)[a] / (f)` with `f = x^2 + 1` for `p = 3, 7` and
//! `f = x^2 + 2` for `p = 5`; element `c0 + c1 a` has index `c0 + c1 p`.

use crate::algebra::is_prime;
use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u64 = 61;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    pub q: usize,
    pub p: usize,
    pub degree: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// `(p, e, c)` such that `q = p^e` and, for `e = 2`, `x^2 + c` is the modulus.
fn presentation(q: u64) -> Option<(usize, u32, usize)> {
    if q % 4 != 1 || q > MAX_FIELD_ORDER {
        return None;
    }
    if is_prime(q) {
        return Some((q as usize, 1, 0));
    }
    match q {
        9 => Some((3, 2, 1)),
        25 => Some((5, 2, 2)),
        49 => Some((7, 2, 1)),
        _ => None,
    }
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, degree, c) = presentation(q).ok_or(Error::NotPrimePowerOneMod4(q))?;
        let q = q as usize;
        let split = |x: usize| (x % p, x / p);
        let join = |a: usize, b: usize| a % p + (b % p) * p;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            for y in 0..q {
                let (s, t) = if degree == 1 {
                    ((x + y) % p, x * y % p)
                } else {
                    let ((a0, a1), (b0, b1)) = (split(x), split(y));
                    // a^2 = -c
                    let r0 = a0 * b0 + (p - c) * (a1 * b1 % p);
                    let r1 = a0 * b1 + a1 * b0;
                    (join(a0 + b0, a1 + b1), join(r0, r1))
                };
                add[x * q + y] = s as u8;
                mul[x * q + y] = t as u8;
            }
        }
        Ok(FiniteField {
            q,
            p,
            degree,
            add,
            mul,
        })
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.q + y] as usize
    }

    pub fn neg(&self, x: usize) -> usize {
        (0..self.q).find(|&y| self.add(x, y) == 0).expect("additive inverse")
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Nonzero squares, as a membership vector.
    pub fn squares(&self) -> Vec<bool> {
        let mut sq = vec![false; self.q];
        for x in 1..self.q {
            sq[self.mul(x, x)] = true;
        }
        sq
    }

    /// The least nonzero non-square.
    pub fn non_square(&self) -> usize {
        let sq = self.squares();
        (1..self.q).find(|&x| !sq[x]).expect("odd order fields have non-squares")
    }
}

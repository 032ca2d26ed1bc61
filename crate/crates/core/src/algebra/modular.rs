use crate::error::{domain, Error, Result};

/// Dense matrix over GF(p). For `p = 2` rows are packed into 64-bit words and
/// eliminated with XOR; other primes use one `u64` per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    storage: Storage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Packed { words: usize, bits: Vec<u64> },
    Dense(Vec<u64>),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest modulus accepted; products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        if p > MAX_MODULUS {
            return domain(format!("modulus {p} exceeds {MAX_MODULUS}"));
        }
        if rows == 0 || cols == 0 {
            return domain(format!("matrix dimensions must be positive, got {rows}x{cols}"));
        }
        let storage = if p == 2 {
            let words = cols.div_ceil(64);
            Storage::Packed {
                words,
                bits: vec![0; rows * words],
            }
        } else {
            Storage::Dense(vec![0; rows * cols])
        };
        Ok(ModMatrix { rows, cols, p, storage })
    }

    pub fn from_fn(rows: usize, cols: usize, p: u64, mut f: impl FnMut(usize, usize) -> u64) -> Result<Self> {
        let mut m = ModMatrix::zeros(rows, cols, p)?;
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c) % p;
                if v != 0 {
                    m.set(r, c, v);
                }
            }
        }
        Ok(m)
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        ModMatrix::from_fn(n, n, p, |r, c| u64::from(r == c))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        match &self.storage {
            Storage::Packed { words, bits } => bits[r * words + c / 64] >> (c % 64) & 1,
            Storage::Dense(v) => v[r * self.cols + c],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        let value = value % self.p;
        match &mut self.storage {
            Storage::Packed { words, bits } => {
                let w = &mut bits[r * *words + c / 64];
                if value == 1 {
                    *w |= 1 << (c % 64);
                } else {
                    *w &= !(1 << (c % 64));
                }
            }
            Storage::Dense(v) => v[r * self.cols + c] = value,
        }
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix::zeros(self.cols, self.rows, self.p).expect("valid");
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    t.set(c, r, v);
                }
            }
        }
        t
    }

    /// `self * x` over GF(p).
    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols).fold(0u64, |acc, c| (acc + self.get(r, c) * (x[c] % self.p)) % self.p)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Pivots are the first nonzero entry found scanning columns left to right.
    fn reduce(&mut self) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        match &mut self.storage {
            Storage::Packed { words, bits } => {
                let words = *words;
                let mut r = 0;
                for c in 0..cols {
                    if r == rows {
                        break;
                    }
                    let (w, b) = (c / 64, c % 64);
                    let Some(pr) = (r..rows).find(|&i| bits[i * words + w] >> b & 1 == 1) else {
                        continue;
                    };
                    if pr != r {
                        for k in 0..words {
                            bits.swap(r * words + k, pr * words + k);
                        }
                    }
                    let pivot_row: Vec<u64> = bits[r * words..(r + 1) * words].to_vec();
                    for i in (0..rows).filter(|&i| i != r) {
                        if bits[i * words + w] >> b & 1 == 1 {
                            for (dst, src) in bits[i * words..(i + 1) * words].iter_mut().zip(&pivot_row) {
                                *dst ^= src;
                            }
                        }
                    }
                    pivots.push(c);
                    r += 1;
                }
            }
            Storage::Dense(v) => {
                let mut r = 0;
                for c in 0..cols {
                    if r == rows {
                        break;
                    }
                    let Some(pr) = (r..rows).find(|&i| v[i * cols + c] != 0) else {
                        continue;
                    };
                    if pr != r {
                        for k in 0..cols {
                            v.swap(r * cols + k, pr * cols + k);
                        }
                    }
                    let inv = mod_inverse(v[r * cols + c], p);
                    for k in 0..cols {
                        v[r * cols + k] = v[r * cols + k] * inv % p;
                    }
                    for i in (0..rows).filter(|&i| i != r) {
                        let f = v[i * cols + c];
                        if f == 0 {
                            continue;
                        }
                        for k in 0..cols {
                            let sub = f * v[r * cols + k] % p;
                            v[i * cols + k] = (v[i * cols + k] + p - sub) % p;
                        }
                    }
                    pivots.push(c);
                    r += 1;
                }
            }
        }
        pivots
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub fn rank_mod(m: &ModMatrix) -> usize {
    m.clone().reduce().len()
}

/// A basis of `{x : m x = 0}` over GF(p), one vector per free column, in
/// increasing order of the free column. Entries lie in `0..p`.
pub fn kernel_basis_mod(m: &ModMatrix) -> Vec<Vec<u64>> {
    let mut reduced = m.clone();
    let pivots = reduced.reduce();
    let p = m.p;
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![0u64; m.cols];
            x[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let a = reduced.get(r, f);
                x[pc] = (p - a) % p;
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_prime_rejected() {
        assert_eq!(ModMatrix::zeros(2, 2, 4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(ModMatrix::zeros(2, 2, 1), Err(Error::NonPrimeModulus(1)));
    }

    #[test]
    fn identity_mod_two() {
        let m = ModMatrix::identity(70, 2).unwrap();
        assert_eq!(rank_mod(&m), 70);
        assert!(kernel_basis_mod(&m).is_empty());
    }

    #[test]
    fn all_ones_even_square() {
        for k in 1..5 {
            let m = ModMatrix::from_fn(2 * k, 2 * k, 2, |_, _| 1).unwrap();
            assert_eq!(rank_mod(&m), 1);
            assert_eq!(kernel_basis_mod(&m).len(), 2 * k - 1);
        }
    }

    #[test]
    fn kernel_vectors_annihilate_mod_five() {
        let m = ModMatrix::from_fn(3, 5, 5, |r, c| (r * 3 + c * c + 1) as u64).unwrap();
        let basis = kernel_basis_mod(&m);
        assert_eq!(basis.len(), 5 - rank_mod(&m));
        for x in &basis {
            assert!(m.mul_vec(x).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // [[1,1],[1,-1]] has determinant -2
        let m2 = ModMatrix::from_fn(2, 2, 2, |_, _| 1).unwrap();
        let m3 = ModMatrix::from_fn(2, 2, 3, |r, c| if r == 1 && c == 1 { 2 } else { 1 }).unwrap();
        assert_eq!(rank_mod(&m2), 1);
        assert_eq!(rank_mod(&m3), 2);
    }
}

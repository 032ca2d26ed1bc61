//! Inclusion matrices `W_{t,k}` and Kneser adjacency matrices, with the rank
//! checks built on them.
//!
//! Rows and columns are indexed by subsets in colexicographic order, so the
//! row of the pair `{i, j}` in `W_{2,k}` is [`pair_index`](crate::graphkit::pair_index)`(i, j)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{binomial, is_prime, kernel_basis_mod, rank_exact, rank_mod, ExactMatrix, ModMatrix};
use crate::error::{domain, Error, Result};
use crate::graphkit::{pair_at, subsets, Graph, VertexSet};

/// Largest ground set for which matrices are materialised.
pub const MAX_V: usize = 16;
/// Largest ground set for the modular rank and kernel checks.
pub const MAX_V_MODULAR: usize = 12;
/// Largest kernel dimension that is enumerated exhaustively.
pub const MAX_KERNEL_DIM: usize = 20;

pub fn subset_rank(s: VertexSet) -> u64 {
    s.colex_rank()
}

pub fn subset_unrank(index: u64, size: usize, v: usize) -> Result<VertexSet> {
    VertexSet::colex_unrank(index, size, v)
}

/// A 0/1 matrix whose rows and columns are indexed by subsets of `{0..v-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetMatrix {
    pub v: usize,
    row_sets: Vec<VertexSet>,
    col_sets: Vec<VertexSet>,
    rule: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    Inclusion,
    Disjoint,
}

/// `W_{t,k}(T, K) = 1` iff `T ⊆ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionMatrix {
    pub t: usize,
    pub k: usize,
    pub matrix: SubsetMatrix,
}

/// `A_{t,v}(A, B) = 1` iff `A ∩ B = ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KneserMatrix {
    pub t: usize,
    pub matrix: SubsetMatrix,
}

impl SubsetMatrix {
    pub fn rows(&self) -> usize {
        self.row_sets.len()
    }

    pub fn cols(&self) -> usize {
        self.col_sets.len()
    }

    pub fn row_set(&self, r: usize) -> VertexSet {
        self.row_sets[r]
    }

    pub fn col_set(&self, c: usize) -> VertexSet {
        self.col_sets[c]
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> bool {
        let (a, b) = (self.row_sets[r], self.col_sets[c]);
        match self.rule {
            Rule::Inclusion => a.is_subset(b),
            Rule::Disjoint => a.intersection(b).is_empty(),
        }
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let one = BigRational::from_integer(1.into());
        ExactMatrix::from_fn(self.rows(), self.cols(), |r, c| {
            if self.entry(r, c) {
                one.clone()
            } else {
                BigRational::zero()
            }
        })
        .expect("subset matrices are nonempty")
    }

    pub fn to_mod(&self, p: u64) -> Result<ModMatrix> {
        ModMatrix::from_fn(self.rows(), self.cols(), p, |r, c| u64::from(self.entry(r, c)))
    }

    pub fn transpose_mod(&self, p: u64) -> Result<ModMatrix> {
        ModMatrix::from_fn(self.cols(), self.rows(), p, |r, c| u64::from(self.entry(c, r)))
    }

    /// The row vector `w` times this matrix, over the integers.
    pub fn left_mul(&self, w: &[i64]) -> Vec<i64> {
        assert_eq!(w.len(), self.rows());
        (0..self.cols())
            .map(|c| (0..self.rows()).filter(|&r| self.entry(r, c)).map(|r| w[r]).sum())
            .collect()
    }
}

fn check_v(v: usize) -> Result<()> {
    if v == 0 || v > MAX_V {
        return domain(format!("ground set size v={v} must lie in 1..={MAX_V}"));
    }
    Ok(())
}

pub fn build_w(t: usize, k: usize, v: usize) -> Result<InclusionMatrix> {
    check_v(v)?;
    if !(t <= k && k <= v) {
        return domain(format!("W_{{t,k}} needs 0 <= t <= k <= v, got t={t}, k={k}, v={v}"));
    }
    Ok(InclusionMatrix {
        t,
        k,
        matrix: SubsetMatrix {
            v,
            row_sets: subsets(v, t).collect(),
            col_sets: subsets(v, k).collect(),
            rule: Rule::Inclusion,
        },
    })
}

pub fn build_kneser(t: usize, v: usize) -> Result<KneserMatrix> {
    check_v(v)?;
    if t > v {
        return domain(format!("Kneser matrix needs t <= v, got t={t}, v={v}"));
    }
    let sets: Vec<VertexSet> = subsets(v, t).collect();
    Ok(KneserMatrix {
        t,
        matrix: SubsetMatrix {
            v,
            row_sets: sets.clone(),
            col_sets: sets,
            rule: Rule::Disjoint,
        },
    })
}

/// The field a rank was computed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Field::Rationals => s.serialize_str("Q"),
            Field::Prime(p) => s.serialize_u64(*p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub t: usize,
    pub k: usize,
    pub v: usize,
    pub p: Field,
    pub expected_rank: u64,
    pub computed_rank: u64,
    pub pass: bool,
}

fn small(b: BigInt) -> u64 {
    b.to_u64().expect("binomials at v <= 16 fit in u64")
}

fn check_t_range(t: usize, k: usize, v: usize) -> Result<()> {
    if k > v || t > k.min(v - k) {
        return domain(format!("need t <= min(k, v-k), got t={t}, k={k}, v={v}"));
    }
    Ok(())
}

/// Full row rank of `W_{t,k}` over the rationals.
pub fn verify_gottlieb_kantor(t: usize, k: usize, v: usize) -> Result<RankReport> {
    check_t_range(t, k, v)?;
    let w = build_w(t, k, v)?;
    let expected = small(binomial(v as i64, t as i64));
    let computed = rank_exact(&w.matrix.to_exact()) as u64;
    Ok(RankReport {
        t,
        k,
        v,
        p: Field::Rationals,
        expected_rank: expected,
        computed_rank: computed,
        pass: expected == computed,
    })
}

/// Non-singularity of the Kneser matrix `A_{t,v}` for `t <= v/2`.
pub fn verify_kneser_nonsingular(t: usize, v: usize) -> Result<RankReport> {
    if 2 * t > v {
        return domain(format!("need t <= v/2, got t={t}, v={v}"));
    }
    let a = build_kneser(t, v)?;
    let expected = small(binomial(v as i64, t as i64));
    let computed = rank_exact(&a.matrix.to_exact()) as u64;
    Ok(RankReport {
        t,
        k: v - t,
        v,
        p: Field::Rationals,
        expected_rank: expected,
        computed_rank: computed,
        pass: expected == computed,
    })
}

/// Rank of `W_{t,k}` over GF(p) predicted by Wilson's formula: the sum of
/// `C(v,i) - C(v,i-1)` over `0 <= i <= t` with `p` not dividing `C(k-i, t-i)`.
pub fn wilson_rank_expected(t: usize, k: usize, v: usize, p: u64) -> Result<BigInt> {
    check_t_range(t, k, v)?;
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let (t, k, v) = (t as i64, k as i64, v as i64);
    let modulus = BigInt::from(p);
    Ok((0..=t)
        .filter(|&i| !(binomial(k - i, t - i) % &modulus).is_zero())
        .map(|i| binomial(v, i) - binomial(v, i - 1))
        .sum())
}

pub fn verify_wilson(t: usize, k: usize, v: usize, p: u64) -> Result<RankReport> {
    if v > MAX_V_MODULAR {
        return domain(format!("modular rank checks need v <= {MAX_V_MODULAR}, got {v}"));
    }
    let expected = small(wilson_rank_expected(t, k, v, p)?);
    let w = build_w(t, k, v)?;
    let computed = rank_mod(&w.matrix.to_mod(p)?) as u64;
    Ok(RankReport {
        t,
        k,
        v,
        p: Field::Prime(p),
        expected_rank: expected,
        computed_rank: computed,
        pass: expected == computed,
    })
}

/// Every vector in the GF(2) kernel of the transpose of `W_{2,k}`, decoded as
/// a graph on `v` vertices (coordinate `i` is the pair `pair_at(i)`).
pub fn kernel_graphs_mod2(k: usize, v: usize) -> Result<Vec<Graph>> {
    if !(2 <= k && k + 2 <= v && v <= MAX_V_MODULAR) {
        return domain(format!("kernel graphs need 2 <= k <= v-2 and v <= {MAX_V_MODULAR}, got k={k}, v={v}"));
    }
    let w = build_w(2, k, v)?;
    let basis = kernel_basis_mod(&w.matrix.transpose_mod(2)?);
    if basis.len() > MAX_KERNEL_DIM {
        return Err(Error::KernelTooLarge {
            dim: basis.len(),
            max: MAX_KERNEL_DIM,
        });
    }
    let packed: Vec<u128> = basis
        .iter()
        .map(|x| x.iter().enumerate().fold(0u128, |acc, (i, &b)| acc | (b as u128) << i))
        .collect();
    (0u64..1 << packed.len())
        .map(|mask| {
            let word = VertexSet(mask).iter().fold(0u128, |acc, i| acc ^ packed[i]);
            let edges = (0..128).filter(|&i| word >> i & 1 == 1).map(pair_at);
            Graph::from_edges(v, edges)
        })
        .collect()
}

use std::fmt;

use crate::error::{Error, Result};

use super::composition::write_tuple;

/// A permutation of `[k]`. Stored zero-based; constructed, displayed and
/// parsed in one-line notation, one-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    /// From one-line notation with values in `1..=k`.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        let mut zero_based = Vec::with_capacity(k);
        for &v in &images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation in one-line notation: {images:?}"
                )));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation(zero_based))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Zero-based image of a zero-based point.
    pub fn apply0(&self, i: usize) -> usize {
        self.0[i]
    }

    /// One-based image of a one-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::arity(self.degree(), other.degree()));
        }
        Ok(Permutation(other.0.iter().map(|&j| self.0[j]).collect()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, '[', ']', self.0.iter().map(|v| v + 1))
    }
}

/// `σ ⊕ τ`: `σ` on the first block, `τ` shifted onto the second.
pub fn direct_sum(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let k = sigma.degree();
    let mut v = sigma.0.clone();
    v.extend(tau.0.iter().map(|&j| j + k));
    Permutation(v)
}

/// `τ[σ]` for `σ ∈ S_k`, `τ ∈ S_ℓ`: sends `ℓ(i−1)+j` to `k(τ(j)−1)+σ(i)`.
pub fn wreath_substitute(tau: &Permutation, sigma: &Permutation) -> Permutation {
    let (k, l) = (sigma.degree(), tau.degree());
    let mut v = vec![0; k * l];
    for i in 0..k {
        for j in 0..l {
            v[l * i + j] = k * tau.0[j] + sigma.0[i];
        }
    }
    Permutation(v)
}

/// The Zolotarev shuffle in `S_{kℓ}`: sends `k(j−1)+i` to `ℓ(i−1)+j`.
pub fn zolotarev(k: usize, l: usize) -> Permutation {
    let mut v = vec![0; k * l];
    for i in 0..k {
        for j in 0..l {
            v[k * j + i] = l * i + j;
        }
    }
    Permutation(v)
}

/// `σ^{×ℓ}`: sends `ℓ(i−1)+j` to `ℓ(σ(i)−1)+j`.
pub fn block_power(sigma: &Permutation, l: usize) -> Permutation {
    let k = sigma.degree();
    let mut v = vec![0; k * l];
    for i in 0..k {
        for j in 0..l {
            v[l * i + j] = l * sigma.0[i] + j;
        }
    }
    Permutation(v)
}

/// `τ^{k×}`: sends `k(j−1)+i` to `k(τ(j)−1)+i`.
pub fn interleave_power(tau: &Permutation, k: usize) -> Permutation {
    let l = tau.degree();
    let mut v = vec![0; k * l];
    for i in 0..k {
        for j in 0..l {
            v[k * j + i] = k * tau.0[j] + i;
        }
    }
    Permutation(v)
}

/// The permutation with the same relative order as `values`.
pub fn standardize(values: &[usize]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
        return Err(Error::InvalidInput(format!(
            "cannot standardize a list with repeated values: {values:?}"
        )));
    }
    let mut v = vec![0; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        v[i] = rank;
    }
    Ok(Permutation(v))
}

/// All permutations of `[k]` in lexicographic order of one-line notation.
pub fn permutations_of(k: usize) -> Vec<Permutation> {
    fn rec(k: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == k {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(k, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

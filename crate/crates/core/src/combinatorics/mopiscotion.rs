use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::composition::{compositions_of, Composition, WeakComposition};
use super::permutation::{permutations_of, standardize, Permutation};

/// A composition paired with a permutation of its positions; the canonical
/// basis key of PNSym.
///
/// Ordered by degree, then length, then the composition, then the
/// permutation, which is also the printing order of elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mopiscotion {
    alpha: Composition,
    sigma: Permutation,
}

impl Mopiscotion {
    pub fn new(alpha: Composition, sigma: Permutation) -> Result<Self> {
        if alpha.len() != sigma.degree() {
            return Err(Error::arity(alpha.len(), sigma.degree()));
        }
        Ok(Mopiscotion { alpha, sigma })
    }

    /// `(∅, ∅)`, the key of the unit.
    pub fn empty() -> Self {
        Mopiscotion {
            alpha: Composition::empty(),
            sigma: Permutation::identity(0),
        }
    }

    /// `((n), [1])`, or the empty key when `n = 0`.
    pub fn single(n: u32) -> Self {
        let alpha = Composition::single(n);
        let sigma = Permutation::identity(alpha.len());
        Mopiscotion { alpha, sigma }
    }

    /// `(α, id)`.
    pub fn with_identity(alpha: Composition) -> Self {
        let sigma = Permutation::identity(alpha.len());
        Mopiscotion { alpha, sigma }
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn degree(&self) -> usize {
        self.alpha.size()
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn to_weak(&self) -> WeakMopiscotion {
        WeakMopiscotion {
            alpha: self.alpha.to_weak(),
            sigma: self.sigma.clone(),
        }
    }
}

impl Ord for Mopiscotion {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.sigma.cmp(&other.sigma))
    }
}

impl PartialOrd for Mopiscotion {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mopiscotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.alpha, self.sigma)
    }
}

/// A weak composition paired with a permutation of its positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakMopiscotion {
    pub alpha: WeakComposition,
    pub sigma: Permutation,
}

impl WeakMopiscotion {
    pub fn new(alpha: WeakComposition, sigma: Permutation) -> Result<Self> {
        if alpha.len() != sigma.degree() {
            return Err(Error::arity(alpha.len(), sigma.degree()));
        }
        Ok(WeakMopiscotion { alpha, sigma })
    }

    pub fn reduce(&self) -> Mopiscotion {
        reduce(self)
    }
}

impl fmt::Display for WeakMopiscotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.alpha, self.sigma)
    }
}

/// Drops the zero entries of `α` and standardizes `σ` on the surviving positions.
pub fn reduce(wm: &WeakMopiscotion) -> Mopiscotion {
    let keep: Vec<usize> = (0..wm.alpha.len()).filter(|&i| wm.alpha[i] != 0).collect();
    let values: Vec<usize> = keep.iter().map(|&i| wm.sigma.apply0(i)).collect();
    let sigma = standardize(&values).expect("permutation values are distinct");
    Mopiscotion {
        alpha: wm.alpha.drop_zeros(),
        sigma,
    }
}

/// Every mopiscotion of the given size, in canonical order.
pub fn mopiscotions_of_size(n: usize) -> Vec<Mopiscotion> {
    let mut out: Vec<Mopiscotion> = compositions_of(n)
        .into_iter()
        .flat_map(|alpha| {
            permutations_of(alpha.len()).into_iter().map(move |sigma| Mopiscotion {
                alpha: alpha.clone(),
                sigma,
            })
        })
        .collect();
    out.sort();
    out
}

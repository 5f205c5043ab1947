//! Brute-force graded bialgebras on which `p_{α,σ} = m^{[k]} ∘ P_α ∘ σ⁻¹ ∘ Δ^{[k]}`
//! is evaluated literally.

mod models;

pub use models::{FreeElement, Letter, PrimitiveTensorModel, TensorSquare, TriangularModel, Word};

use num::One;

use crate::combinatorics::{Permutation, WeakComposition};
use crate::error::{Error, Result};
use crate::linear::{Combination, Rational};
use crate::pnsym::PnsymElement;

/// A connected graded bialgebra given on a basis.
pub trait GradedBialgebra {
    type Basis: Ord + Clone;

    fn degree(&self, b: &Self::Basis) -> u32;
    fn one(&self) -> Self::Basis;
    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Combination<Self::Basis>;
    /// `Δ^{[k]}(b)` as a combination of `k`-tuples; `k = 0` is the counit.
    fn delta_power_basis(&self, b: &Self::Basis, k: usize) -> Combination<Vec<Self::Basis>>;
}

/// An element of `H^{⊗k}` with its arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeTensor<B: Ord + Clone> {
    arity: usize,
    terms: Combination<Vec<B>>,
}

impl<B: Ord + Clone> FreeTensor<B> {
    pub fn zero(arity: usize) -> Self {
        FreeTensor { arity, terms: Combination::zero() }
    }

    pub fn pure(legs: Vec<B>) -> Self {
        FreeTensor { arity: legs.len(), terms: Combination::basis(legs) }
    }

    pub fn from_terms(arity: usize, terms: Combination<Vec<B>>) -> Result<Self> {
        if let Some(bad) = terms.keys().find(|t| t.len() != arity) {
            return Err(Error::arity(arity, bad.len()));
        }
        Ok(FreeTensor { arity, terms })
    }

    /// Arity-1 tensor from an element.
    pub fn from_element(f: &Combination<B>) -> Self {
        FreeTensor { arity: 1, terms: f.map_linear(|b| Combination::basis(vec![b.clone()])) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &Combination<Vec<B>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::arity(self.arity, other.arity));
        }
        Ok(FreeTensor { arity: self.arity, terms: &self.terms + &other.terms })
    }

    /// `self ⊗ other`, arities add.
    pub fn tensor(&self, other: &Self) -> Self {
        FreeTensor {
            arity: self.arity + other.arity,
            terms: self.terms.bilinear(&other.terms, |a, b| {
                let mut v = a.clone();
                v.extend(b.iter().cloned());
                Combination::basis(v)
            }),
        }
    }

    /// Splits every pure tensor into `blocks` consecutive runs of `block_len`
    /// legs and applies `f` to each run (the map `f^{⊗blocks}`).
    pub fn map_blocks(
        &self,
        blocks: usize,
        block_len: usize,
        out_arity: usize,
        mut f: impl FnMut(&[B]) -> FreeTensor<B>,
    ) -> Result<Self> {
        if self.arity != blocks * block_len {
            return Err(Error::arity(blocks * block_len, self.arity));
        }
        let mut out = Combination::zero();
        for (t, c) in self.terms.iter() {
            let mut acc = FreeTensor::pure(Vec::new());
            for b in 0..blocks {
                let piece = f(&t[b * block_len..(b + 1) * block_len]);
                if piece.arity != out_arity {
                    return Err(Error::arity(out_arity, piece.arity));
                }
                acc = acc.tensor(&piece);
            }
            out.add_assign_scaled(&acc.terms, c);
        }
        Ok(FreeTensor { arity: blocks * out_arity, terms: out })
    }
}

/// Product of a list of basis elements, in order.
fn mul_list<M: GradedBialgebra>(m: &M, legs: &[M::Basis]) -> Combination<M::Basis> {
    let mut acc = Combination::basis(m.one());
    for b in legs {
        acc = acc.map_linear(|a| m.mul_basis(a, b));
    }
    acc
}

pub fn mul<M: GradedBialgebra>(m: &M, f: &Combination<M::Basis>, g: &Combination<M::Basis>) -> Combination<M::Basis> {
    f.bilinear(g, |a, b| m.mul_basis(a, b))
}

/// `Δ^{[k]}`.
pub fn delta_power<M: GradedBialgebra>(m: &M, k: usize, f: &Combination<M::Basis>) -> FreeTensor<M::Basis> {
    FreeTensor { arity: k, terms: f.map_linear(|b| m.delta_power_basis(b, k)) }
}

/// `m^{[k]}`: multiplies the legs together.
pub fn m_power<M: GradedBialgebra>(m: &M, t: &FreeTensor<M::Basis>) -> Combination<M::Basis> {
    t.terms.map_linear(|legs| mul_list(m, legs))
}

pub fn counit<M: GradedBialgebra>(m: &M, f: &Combination<M::Basis>) -> Rational {
    delta_power(m, 0, f).terms.coeff(&Vec::new())
}

/// `P_α`: keeps the pure tensors whose leg degrees are `α`.
pub fn project_multi<M: GradedBialgebra>(
    m: &M,
    t: &FreeTensor<M::Basis>,
    alpha: &WeakComposition,
) -> Result<FreeTensor<M::Basis>> {
    if alpha.len() != t.arity {
        return Err(Error::arity(t.arity, alpha.len()));
    }
    let terms = t
        .terms
        .filter(|legs| legs.iter().zip(alpha.entries()).all(|(b, &a)| m.degree(b) == a));
    Ok(FreeTensor { arity: t.arity, terms })
}

/// Left action of `π`: leg `j` moves to position `π(j)`.
pub fn permute_tensor<B: Ord + Clone>(t: &FreeTensor<B>, pi: &Permutation) -> Result<FreeTensor<B>> {
    if pi.degree() != t.arity {
        return Err(Error::arity(t.arity, pi.degree()));
    }
    let terms = t.terms.map_linear(|legs| {
        let mut out = legs.clone();
        for (j, b) in legs.iter().enumerate() {
            out[pi.apply0(j)] = b.clone();
        }
        Combination::basis(out)
    });
    Ok(FreeTensor { arity: t.arity, terms })
}

/// `p_{α,σ}(f)`.
pub fn apply_pas<M: GradedBialgebra>(
    m: &M,
    alpha: &WeakComposition,
    sigma: &Permutation,
    f: &Combination<M::Basis>,
) -> Result<Combination<M::Basis>> {
    if alpha.len() != sigma.degree() {
        return Err(Error::arity(alpha.len(), sigma.degree()));
    }
    let k = alpha.len();
    let t = delta_power(m, k, f);
    let t = permute_tensor(&t, &sigma.inverse())?;
    let t = project_multi(m, &t, alpha)?;
    Ok(m_power(m, &t))
}

/// Projection `p_n` onto the degree-`n` component.
pub fn project<M: GradedBialgebra>(m: &M, n: u32, f: &Combination<M::Basis>) -> Combination<M::Basis> {
    f.filter(|b| m.degree(b) == n)
}

/// `(f ⋆ g)(x) = m ∘ (f ⊗ g) ∘ Δ (x)`.
pub fn convolve<M: GradedBialgebra>(
    m: &M,
    x: &Combination<M::Basis>,
    mut f: impl FnMut(&Combination<M::Basis>) -> Combination<M::Basis>,
    mut g: impl FnMut(&Combination<M::Basis>) -> Combination<M::Basis>,
) -> Combination<M::Basis> {
    let mut out = Combination::zero();
    for (legs, c) in delta_power(m, 2, x).terms.iter() {
        let a = f(&Combination::basis(legs[0].clone()));
        let b = g(&Combination::basis(legs[1].clone()));
        out.add_assign_scaled(&mul(m, &a, &b), c);
    }
    out
}

/// `u ∘ ε`.
pub fn unit_counit<M: GradedBialgebra>(m: &M, x: &Combination<M::Basis>) -> Combination<M::Basis> {
    Combination::term(counit(m, x), m.one())
}

/// `p_{α₁} ⋆ p_{α₂} ⋆ ⋯ ⋆ p_{α_k}` applied to `x`, through nested binary coproducts.
pub fn apply_convolution_of_projections<M: GradedBialgebra>(
    m: &M,
    alpha: &[u32],
    x: &Combination<M::Basis>,
) -> Combination<M::Basis> {
    match alpha {
        [] => unit_counit(m, x),
        [a] => project(m, *a, x),
        [a, rest @ ..] => convolve(m, x, |y| project(m, *a, y), |y| apply_convolution_of_projections(m, rest, y)),
    }
}

/// The action of PNSym on `H`: `F_{α,σ}` acts as `p_{α,σ}`.
pub fn evaluate_pnsym<M: GradedBialgebra>(m: &M, f: &PnsymElement, x: &Combination<M::Basis>) -> Combination<M::Basis> {
    let mut out = Combination::zero();
    for (key, c) in f.iter() {
        let y = apply_pas(m, &key.alpha().to_weak(), key.sigma(), x).expect("mopiscotion arity");
        out.add_assign_scaled(&y, c);
    }
    out
}

/// `p_{α,σ}` on the bialgebra `H ⊗ H`.
pub fn apply_pas_on_tensor_square<M: GradedBialgebra>(
    m: &M,
    alpha: &WeakComposition,
    sigma: &Permutation,
    x: &Combination<(M::Basis, M::Basis)>,
) -> Result<Combination<(M::Basis, M::Basis)>>
where
    M: Clone,
{
    apply_pas(&TensorSquare(m.clone()), alpha, sigma, x)
}

/// `f ⊗ g` as an element of the tensor square.
pub fn tensor_pair<B: Ord + Clone>(f: &Combination<B>, g: &Combination<B>) -> Combination<(B, B)> {
    f.bilinear(g, |a, b| Combination::basis((a.clone(), b.clone())))
}

/// `(m^{[ℓ]})^{⊗k}`: from arity `kℓ` to arity `k`.
pub fn m_power_blocks<M: GradedBialgebra>(
    m: &M,
    k: usize,
    l: usize,
    t: &FreeTensor<M::Basis>,
) -> Result<FreeTensor<M::Basis>> {
    t.map_blocks(k, l, 1, |legs| FreeTensor {
        arity: 1,
        terms: mul_list(m, legs).map_linear(|b| Combination::basis(vec![b.clone()])),
    })
}

/// `(Δ^{[k]})^{⊗ℓ}`: from arity `ℓ` to arity `kℓ`.
pub fn delta_power_blocks<M: GradedBialgebra>(
    m: &M,
    k: usize,
    l: usize,
    t: &FreeTensor<M::Basis>,
) -> Result<FreeTensor<M::Basis>> {
    t.map_blocks(l, 1, k, |legs| FreeTensor { arity: k, terms: m.delta_power_basis(&legs[0], k) })
}

/// Scalar `c` as an arity-0 tensor.
pub fn scalar_tensor<B: Ord + Clone>(c: Rational) -> FreeTensor<B> {
    FreeTensor { arity: 0, terms: Combination::term(c, Vec::new()) }
}

/// `1 ⊗ ⋯ ⊗ 1` with `k` legs.
pub fn unit_tensor<M: GradedBialgebra>(m: &M, k: usize) -> FreeTensor<M::Basis> {
    FreeTensor { arity: k, terms: Combination::term(Rational::one(), vec![m.one(); k]) }
}

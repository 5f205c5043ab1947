//! Just enough of NSym (complete basis `H_α`) to cross-check the projection.

use num::One;

use crate::combinatorics::{contingency_tables, flatten_lex, Composition, WeakComposition};
use crate::linear::{Combination, Rational};

pub type NsymElement = Combination<Composition>;

impl NsymElement {
    /// `H_α · H_β = H_{αβ}`.
    pub fn external_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| Self::basis(a.concat(b)))
    }

    /// `H_α ∗ H_β = Σ H_{flatten(t)}` over contingency tables, zero parts dropped.
    pub fn internal_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| {
            let mut out = Self::zero();
            for t in contingency_tables(&a.to_weak(), &b.to_weak()) {
                out.add_term(flatten_lex(&t).drop_zeros(), Rational::one());
            }
            out
        })
    }

    /// `Δ(H_α) = Σ_{β+γ=α} H_β ⊗ H_γ`.
    pub fn coproduct(&self) -> Combination<(Composition, Composition)> {
        self.map_linear(|a| {
            let mut out = Combination::zero();
            let parts = a.entries();
            let mut left = vec![0u32; parts.len()];
            loop {
                let right: Vec<u32> = parts.iter().zip(&left).map(|(x, y)| x - y).collect();
                out.add_term(
                    (
                        WeakComposition::new(left.clone()).drop_zeros(),
                        WeakComposition::new(right).drop_zeros(),
                    ),
                    Rational::one(),
                );
                let mut i = 0;
                loop {
                    if i == parts.len() {
                        return out;
                    }
                    if left[i] < parts[i] {
                        left[i] += 1;
                        break;
                    }
                    left[i] = 0;
                    i += 1;
                }
            }
        })
    }
}

//! The graded module PNSym with basis `F_{α,σ}` indexed by mopiscotions,
//! its external product `·`, internal product `∗`, coproduct, counit and
//! antipode, plus the projection to and section from NSym.

mod format;
mod nsym;

use std::collections::HashMap;

use num::{BigUint, One};
use rayon::prelude::*;

pub use format::{parse_element, ElementJson, TermJson};
pub use nsym::NsymElement;

use crate::combinatorics::{
    contingency_tables, direct_sum, flatten_lex, reduce, wreath_substitute, Mopiscotion, WeakComposition,
    WeakMopiscotion,
};
use crate::linear::{Combination, Rational};

const PARALLEL_PAIRS: usize = 512;

/// A finite rational combination of canonical basis elements `F_{α,σ}`.
pub type PnsymElement = Combination<Mopiscotion>;

/// An element of `PNSym ⊗ PNSym`.
pub type PnsymTensor = Combination<(Mopiscotion, Mopiscotion)>;

impl PnsymElement {
    /// The unit `F_{∅,∅}`.
    pub fn one() -> Self {
        Self::basis(Mopiscotion::empty())
    }

    /// `c · F_{(α,σ)^red}`.
    pub fn from_weak_term(coeff: Rational, wm: &WeakMopiscotion) -> Self {
        Self::term(coeff, reduce(wm))
    }

    /// `F_{α,σ}·F_{β,τ} = F_{αβ, σ⊕τ}`, extended bilinearly.
    pub fn external_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |a, b| Self::basis(external_basis(a, b)))
    }

    /// Internal product, summed over the contingency tables with row sums
    /// `α` and column sums `β`.
    pub fn internal_mul(&self, other: &Self) -> Self {
        if self.len() * other.len() < PARALLEL_PAIRS {
            return self.bilinear(other, internal_basis);
        }
        let left: Vec<_> = self.iter().collect();
        left.par_iter()
            .map(|(a, ca)| {
                let mut out = Self::zero();
                for (b, cb) in other.iter() {
                    out.add_assign_scaled(&internal_basis(a, b), &(*ca * cb));
                }
                out
            })
            .reduce(Self::zero, |x, y| x + y)
    }

    pub fn coproduct(&self) -> PnsymTensor {
        self.map_linear(coproduct_basis)
    }

    /// Coefficient of `F_{∅,∅}`.
    pub fn counit(&self) -> Rational {
        self.coeff(&Mopiscotion::empty())
    }

    pub fn degree_component(&self, n: usize) -> Self {
        self.filter(|k| k.degree() == n)
    }

    /// Largest degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.keys().map(Mopiscotion::degree).max()
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        self.filter(|k| k.degree() <= max_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.keys().map(Mopiscotion::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The antipode, via `S(x) = −x − Σ S(x′)·x″` over the reduced coproduct.
    pub fn antipode(&self) -> Self {
        let mut memo = HashMap::new();
        self.map_linear(|k| antipode_basis(k, &mut memo))
    }

    /// Convolution `m ∘ (f ⊗ g) ∘ Δ` of two linear maps, evaluated on `self`.
    pub fn convolve(&self, mut f: impl FnMut(&Self) -> Self, mut g: impl FnMut(&Self) -> Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in self.coproduct().iter() {
            let left = f(&Self::basis(a.clone()));
            let right = g(&Self::basis(b.clone()));
            out.add_assign_scaled(&left.external_mul(&right), c);
        }
        out
    }

    /// Projection `F_{α,σ} ↦ H_α` onto NSym.
    pub fn to_nsym(&self) -> NsymElement {
        self.map_linear(|k| NsymElement::basis(k.alpha().clone()))
    }

    /// Section `H_α ↦ F_{α,id}`.
    pub fn from_nsym(h: &NsymElement) -> Self {
        h.map_linear(|a| Self::basis(Mopiscotion::with_identity(a.clone())))
    }

    /// `self^{∗k}`; `k` must be at least 1 since `∗` has no global unit.
    pub fn internal_power(&self, k: usize) -> Self {
        assert!(k >= 1, "internal powers start at 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.internal_mul(self);
        }
        acc
    }

    /// `self^{·k}`, with `self^{·0} = 1`.
    pub fn external_power(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.external_mul(self);
        }
        acc
    }
}

impl PnsymTensor {
    /// Leg-wise external product on `PNSym ⊗ PNSym`.
    pub fn external_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |(a1, a2), (b1, b2)| {
            Self::basis((external_basis(a1, b1), external_basis(a2, b2)))
        })
    }

    /// Leg-wise internal product on `PNSym ⊗ PNSym`.
    pub fn internal_mul(&self, other: &Self) -> Self {
        self.bilinear(other, |(a1, a2), (b1, b2)| {
            let left = internal_basis(a1, b1);
            let right = internal_basis(a2, b2);
            tensor(&left, &right)
        })
    }

    /// Swaps the two legs.
    pub fn flip(&self) -> Self {
        self.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())).collect()
    }
}

/// `f ⊗ g` as an element of `PNSym ⊗ PNSym`.
pub fn tensor(f: &PnsymElement, g: &PnsymElement) -> PnsymTensor {
    f.bilinear(g, |a, b| PnsymTensor::basis((a.clone(), b.clone())))
}

fn external_basis(a: &Mopiscotion, b: &Mopiscotion) -> Mopiscotion {
    Mopiscotion::new(a.alpha().concat(b.alpha()), direct_sum(a.sigma(), b.sigma()))
        .expect("lengths agree")
}

fn internal_basis(a: &Mopiscotion, b: &Mopiscotion) -> PnsymElement {
    let mut out = PnsymElement::zero();
    if a.degree() != b.degree() {
        return out;
    }
    let perm = wreath_substitute(b.sigma(), a.sigma());
    for t in contingency_tables(&a.alpha().to_weak(), &b.alpha().to_weak()) {
        let wm = WeakMopiscotion {
            alpha: flatten_lex(&t),
            sigma: perm.clone(),
        };
        out.add_term(reduce(&wm), Rational::one());
    }
    out
}

fn coproduct_basis(key: &Mopiscotion) -> PnsymTensor {
    let alpha = key.alpha().entries();
    let mut out = PnsymTensor::zero();
    let mut left = vec![0u32; alpha.len()];
    loop {
        let right: Vec<u32> = alpha.iter().zip(&left).map(|(a, b)| a - b).collect();
        let l = reduce(&WeakMopiscotion {
            alpha: WeakComposition::new(left.clone()),
            sigma: key.sigma().clone(),
        });
        let r = reduce(&WeakMopiscotion {
            alpha: WeakComposition::new(right),
            sigma: key.sigma().clone(),
        });
        out.add_term((l, r), Rational::one());
        // odometer over 0 ≤ left_i ≤ α_i
        let mut i = 0;
        loop {
            if i == alpha.len() {
                return out;
            }
            if left[i] < alpha[i] {
                left[i] += 1;
                break;
            }
            left[i] = 0;
            i += 1;
        }
    }
}

fn antipode_basis(key: &Mopiscotion, memo: &mut HashMap<Mopiscotion, PnsymElement>) -> PnsymElement {
    if key.degree() == 0 {
        return PnsymElement::one();
    }
    if let Some(s) = memo.get(key) {
        return s.clone();
    }
    let mut out = -PnsymElement::basis(key.clone());
    for ((a, b), c) in coproduct_basis(key).iter() {
        if a.degree() == 0 || b.degree() == 0 {
            continue;
        }
        let sa = antipode_basis(a, memo);
        out.add_assign_scaled(&sa.external_mul(&PnsymElement::basis(b.clone())), &-c);
    }
    memo.insert(key.clone(), out.clone());
    out
}

/// Rank of the degree-`n` component: `Σ_k C(n−1, n−k)·k!`.
pub fn rank(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::from(0u32);
    // C(n-1, k-1) * k! for k = 1..=n, built incrementally
    let mut binom = BigUint::one();
    let mut fact = BigUint::one();
    for k in 1..=n {
        fact *= BigUint::from(k);
        if k > 1 {
            binom = binom * BigUint::from(n - k + 1) / BigUint::from(k - 1);
        }
        total += &binom * &fact;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Composition, Permutation};
    use crate::linear::rat;

    fn f(src: &str) -> PnsymElement {
        parse_element(src).unwrap()
    }

    #[test]
    fn from_weak_term_reduces() {
        let wm = |a: &[u32], s: &[usize]| {
            WeakMopiscotion::new(WeakComposition::new(a.to_vec()), Permutation::from_one_line(s.to_vec()).unwrap())
                .unwrap()
        };
        assert_eq!(PnsymElement::from_weak_term(rat(1), &wm(&[0, 1, 1, 0], &[4, 2, 3, 1])), f("F((1,1);[1,2])"));
        assert_eq!(PnsymElement::from_weak_term(rat(1), &wm(&[1, 0, 0, 1], &[4, 2, 3, 1])), f("F((1,1);[2,1])"));
        assert!(PnsymElement::from_weak_term(rat(0), &wm(&[2], &[1])).is_zero());
    }

    #[test]
    fn module_arithmetic() {
        assert!((f("F((1);[1])") + f("F((1);[1])").scale(&rat(-1))).is_zero());
        assert_eq!(f("2*F((2);[1])") + f("3*F((2);[1])"), f("5*F((2);[1])"));
        assert_eq!((f("F((1);[1])") + f("F((2);[1])")).len(), 2);
        assert!(f("F((2);[1])").scale(&rat(0)).is_zero());
    }

    #[test]
    fn external_examples() {
        assert_eq!(f("F((1);[1])").external_mul(&f("F((2);[1])")), f("F((1,2);[1,2])"));
        assert_eq!(f("F((2);[1])").external_mul(&f("F((1);[1])")), f("F((2,1);[1,2])"));
        let x = f("3*F((2,1);[2,1]) - F((1);[1])");
        assert_eq!(PnsymElement::one().external_mul(&x), x);
    }

    #[test]
    fn internal_examples() {
        let s = f("F((1,1);[2,1])");
        assert_eq!(s.internal_mul(&s), f("F((1,1);[1,2]) + F((1,1);[2,1])"));
        assert!(f("F((1);[1])").internal_mul(&f("F((2);[1])")).is_zero());
    }

    #[test]
    fn single_row_is_a_unit_in_its_degree() {
        for n in 1..=3u32 {
            let unit = PnsymElement::basis(Mopiscotion::single(n));
            for key in crate::combinatorics::mopiscotions_of_size(n as usize) {
                let x = PnsymElement::basis(key);
                assert_eq!(unit.internal_mul(&x), x);
                assert_eq!(x.internal_mul(&unit), x);
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let show = |t: &PnsymTensor| t.to_string();
        assert_eq!(show(&f("F((1);[1])").coproduct()), "F(();[]) (x) F((1);[1]) + F((1);[1]) (x) F(();[])");
        assert_eq!(
            show(&f("F((2);[1])").coproduct()),
            "F(();[]) (x) F((2);[1]) + F((1);[1]) (x) F((1);[1]) + F((2);[1]) (x) F(();[])"
        );
        assert_eq!(show(&PnsymElement::one().coproduct()), "F(();[]) (x) F(();[])");
    }

    #[test]
    fn counit_examples() {
        assert_eq!(PnsymElement::one().counit(), rat(1));
        assert_eq!(f("F((1);[1])").counit(), rat(0));
        assert_eq!(f("3*F(();[]) - 2*F((2,1);[2,1])").counit(), rat(3));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(f("F((1);[1])").antipode(), f("-F((1);[1])"));
        assert_eq!(f("F((2);[1])").antipode(), f("-F((2);[1]) + F((1,1);[1,2])"));
        assert_eq!(PnsymElement::one().antipode(), PnsymElement::one());
    }

    #[test]
    fn degree_component_examples() {
        let x = f("F((1);[1]) + F((2);[1])");
        assert_eq!(x.degree_component(2), f("F((2);[1])"));
        assert!(x.degree_component(5).is_zero());
        assert_eq!(PnsymElement::one().degree_component(0), PnsymElement::one());
    }

    #[test]
    fn rank_examples() {
        let expected = [1u32, 1, 3, 11, 49, 261, 1631, 11743];
        for (n, &r) in expected.iter().enumerate() {
            assert_eq!(rank(n), BigUint::from(r), "n = {n}");
        }
    }

    #[test]
    fn nsym_bridge_examples() {
        assert_eq!(f("F((1,1);[2,1])").to_nsym().to_string(), "H(1,1)");
        assert_eq!(PnsymElement::one().to_nsym().to_string(), "H()");
        assert_eq!(f("F((1,1);[1,2]) + F((1,1);[2,1])").to_nsym().to_string(), "2*H(1,1)");
        let h = NsymElement::basis(Composition::new(vec![2, 1]).unwrap());
        assert_eq!(PnsymElement::from_nsym(&h), f("F((2,1);[1,2])"));
        assert_eq!(PnsymElement::from_nsym(&NsymElement::basis(Composition::empty())), PnsymElement::one());
    }
}

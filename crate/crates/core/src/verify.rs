//! Exhaustive drivers that check the structural formulas against the oracle
//! models. Each family reports how many cases it ran and how many failed.

use std::fmt;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::combinatorics::{
    act_right, block_power, compositions_of, contingency_tables, direct_sum, flatten_lex, interleave_power,
    mopiscotions_of_size, permutations_of, row_sum_tables, weak_compositions_of, wreath_substitute, zolotarev,
    ContingencyTable, Mopiscotion, Permutation, WeakComposition, WeakMopiscotion,
};
use crate::linear::{rat, Combination};
use crate::oracle::{
    apply_convolution_of_projections, apply_pas, apply_pas_on_tensor_square, convolve, delta_power,
    delta_power_blocks, evaluate_pnsym, m_power, m_power_blocks, permute_tensor, project_multi, tensor_pair,
    FreeElement, FreeTensor, PrimitiveTensorModel, TriangularModel, Word,
};
use crate::pnsym::{rank, PnsymElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Description of the first failing case, if any.
    pub first_failure: Option<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "{tag} {:<28} cases={:<7} failures={}", self.name, self.cases, self.failures)?;
        if let Some(w) = &self.first_failure {
            write!(f, "  first: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// `n` of the triangular model.
    pub model_size: u32,
    /// Largest operator size `|α|` exercised.
    pub max_size: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { model_size: 4, max_size: 3 }
    }
}

fn run_family<C: Sync>(
    name: &'static str,
    cases: Vec<C>,
    check: impl Fn(&C) -> Result<(), String> + Sync,
) -> FamilyReport {
    let fails: Vec<String> = cases.par_iter().filter_map(|c| check(c).err()).collect();
    FamilyReport { name, cases: cases.len(), failures: fails.len(), first_failure: fails.into_iter().next() }
}

fn expect_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, what: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {} != {}", what(), lhs, rhs))
    }
}

fn expect_same<T: PartialEq + fmt::Debug>(lhs: &T, rhs: &T, what: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {:?} != {:?}", what(), lhs, rhs))
    }
}

fn words_up_to(m: &TriangularModel, d: u32) -> Vec<Word> {
    (0..=d).flat_map(|e| m.words_of_degree(e)).collect()
}

fn mopiscotions_up_to(s: usize) -> Vec<Mopiscotion> {
    (0..=s).flat_map(mopiscotions_of_size).collect()
}

fn basis(w: &Word) -> FreeElement {
    FreeElement::basis(w.clone())
}

fn pas(m: &TriangularModel, key: &Mopiscotion, x: &FreeElement) -> FreeElement {
    apply_pas(m, &key.alpha().to_weak(), key.sigma(), x).expect("arity")
}

fn random_weak_mopiscotion(rng: &mut StdRng, size: usize, max_len: usize) -> WeakMopiscotion {
    let len = rng.gen_range(1..=max_len);
    let alphas = weak_compositions_of(size, len);
    let alpha = alphas.choose(rng).expect("nonempty").clone();
    let sigma = permutations_of(len).choose(rng).expect("nonempty").clone();
    WeakMopiscotion::new(alpha, sigma).expect("same length")
}

/// Composition of two operators against the internal product expansion.
pub fn composition_formula(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size);
    let top = cfg.max_size.min(cfg.model_size.saturating_sub(1) as usize);
    let mut cases = Vec::new();
    for s in 0..=cfg.max_size {
        let keys = mopiscotions_of_size(s);
        let inputs: Vec<Word> = if s <= top { m.words_of_degree(s as u32) } else { Vec::new() };
        let gens: Vec<Word> = m.generators().into_iter().map(|((i, j), _)| Word::letter(i, j)).collect();
        for a in &keys {
            for b in &keys {
                for x in gens.iter().chain(inputs.iter().filter(|w| w.letters().len() > 1)) {
                    cases.push((a.to_weak(), b.to_weak(), x.clone()));
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let s = rng.gen_range(0..=cfg.max_size);
        let a = random_weak_mopiscotion(&mut rng, s, 3);
        let b = random_weak_mopiscotion(&mut rng, s, 3);
        let inputs = m.words_of_degree(s.min(top) as u32);
        let x = inputs.choose(&mut rng).expect("nonempty").clone();
        cases.push((a, b, x));
    }
    run_family("composition-formula", cases, |(a, b, x)| {
        let x = basis(x);
        let inner = apply_pas(&m, &b.alpha, &b.sigma, &x).expect("arity");
        let lhs = apply_pas(&m, &a.alpha, &a.sigma, &inner).expect("arity");
        let f = PnsymElement::from_weak_term(rat(1), a);
        let g = PnsymElement::from_weak_term(rat(1), b);
        let rhs = evaluate_pnsym(&m, &f.internal_mul(&g), &x);
        expect_eq(&lhs, &rhs, || format!("p{a} o p{b} on {x}"))
    })
}

/// Convolution of two operators against the external product.
pub fn convolution_formula(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size);
    let keys = mopiscotions_up_to(cfg.max_size);
    let words = words_up_to(&m, cfg.max_size as u32);
    let mut cases = Vec::new();
    for a in &keys {
        for b in &keys {
            if a.degree() + b.degree() <= cfg.max_size {
                for w in &words {
                    cases.push((a.clone(), b.clone(), w.clone()));
                }
            }
        }
    }
    run_family("convolution-formula", cases, |(a, b, w)| {
        let x = basis(w);
        let lhs = convolve(&m, &x, |y| pas(&m, a, y), |y| pas(&m, b, y));
        let alpha = a.alpha().concat(b.alpha()).to_weak();
        let rhs = apply_pas(&m, &alpha, &direct_sum(a.sigma(), b.sigma()), &x).expect("arity");
        expect_eq(&lhs, &rhs, || format!("p{a} * p{b} on {w}"))
    })
}

/// With `σ = id` the operator is a convolution of graded projections.
pub fn identity_permutation(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size);
    let words = words_up_to(&m, cfg.max_size as u32);
    let mut cases = Vec::new();
    for s in 0..=cfg.max_size {
        for len in 0..=cfg.max_size + 1 {
            for alpha in weak_compositions_of(s, len) {
                for w in &words {
                    cases.push((alpha.clone(), w.clone()));
                }
            }
        }
    }
    run_family("identity-permutation", cases, |(alpha, w)| {
        let x = basis(w);
        let lhs = apply_pas(&m, alpha, &Permutation::identity(alpha.len()), &x).expect("arity");
        let rhs = apply_convolution_of_projections(&m, alpha.entries(), &x);
        expect_eq(&lhs, &rhs, || format!("alpha={alpha} on {w}"))
    })
}

/// Weak keys act like their reductions.
pub fn reduction(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size);
    let gens: Vec<FreeElement> = m.generators().into_iter().map(|(_, g)| g).collect();
    let mut cases = Vec::new();
    for s in 0..=cfg.max_size {
        for len in 0..=cfg.max_size + 2 {
            for alpha in weak_compositions_of(s, len) {
                let zeros = alpha.entries().iter().filter(|&&a| a == 0).count();
                if zeros == 0 || zeros > 2 {
                    continue;
                }
                for sigma in permutations_of(len) {
                    cases.push(WeakMopiscotion::new(alpha.clone(), sigma).expect("same length"));
                }
            }
        }
    }
    run_family("reduction", cases, |wm| {
        let red = wm.reduce();
        for x in &gens {
            let lhs = apply_pas(&m, &wm.alpha, &wm.sigma, x).expect("arity");
            expect_eq(&lhs, &pas(&m, &red, x), || format!("{wm} on {x}"))?;
        }
        Ok(())
    })
}

/// `p_{α,σ}` kills other degrees and preserves degree `|α|`.
pub fn grading(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size);
    let words = words_up_to(&m, cfg.max_size as u32);
    let mut cases = Vec::new();
    for key in mopiscotions_up_to(cfg.max_size) {
        for w in &words {
            cases.push((key.clone(), w.clone()));
        }
    }
    run_family("grading", cases, |(key, w)| {
        let y = pas(&m, key, &basis(w));
        let ok = if w.degree() as usize == key.degree() {
            y.keys().all(|v| v.degree() == w.degree())
        } else {
            y.is_zero()
        };
        if ok {
            Ok(())
        } else {
            Err(format!("p{key} on {w} gives {y}"))
        }
    })
}

/// `p_{α,σ}` on `H ⊗ H` splits over `β + γ = α`.
pub fn tensor_square(cfg: VerifyConfig) -> FamilyReport {
    let m = TriangularModel::new(cfg.model_size.min(3));
    let words = words_up_to(&m, cfg.max_size as u32);
    let mut pairs = Vec::new();
    for a in &words {
        for b in &words {
            if (a.degree() + b.degree()) as usize <= cfg.max_size {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let mut cases = Vec::new();
    for key in mopiscotions_up_to(cfg.max_size) {
        for p in &pairs {
            cases.push((key.clone(), p.clone()));
        }
    }
    run_family("tensor-square", cases, |(key, (a, b))| {
        let alpha = key.alpha().to_weak();
        let x = tensor_pair(&basis(a), &basis(b));
        let lhs = apply_pas_on_tensor_square(&m, &alpha, key.sigma(), &x).expect("arity");
        let mut rhs = Combination::zero();
        for beta in splittings(&alpha) {
            let gamma: Vec<u32> = alpha.entries().iter().zip(&beta).map(|(x, y)| x - y).collect();
            let left = apply_pas(&m, &WeakComposition::new(beta), key.sigma(), &basis(a)).expect("arity");
            let right = apply_pas(&m, &WeakComposition::new(gamma), key.sigma(), &basis(b)).expect("arity");
            rhs = rhs + tensor_pair(&left, &right);
        }
        expect_same(&lhs, &rhs, || format!("p{key} on {a} (x) {b}"))
    })
}

/// All `β` with `0 ≤ β ≤ α` entrywise.
fn splittings(alpha: &WeakComposition) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &a in alpha.entries() {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=a).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out
}

/// On a cocommutative model the permutation does not matter.
pub fn cocommutative(cfg: VerifyConfig) -> FamilyReport {
    let m = PrimitiveTensorModel::new(2, cfg.max_size as u32);
    let words: Vec<Word> = (0..=cfg.max_size as u32).flat_map(|d| m.words_of_degree(d)).collect();
    let mut cases = Vec::new();
    for key in mopiscotions_up_to(cfg.max_size) {
        for w in &words {
            cases.push((key.clone(), w.clone()));
        }
    }
    run_family("cocommutative", cases, |(key, w)| {
        let alpha = key.alpha().to_weak();
        let x = basis(w);
        let lhs = apply_pas(&m, &alpha, key.sigma(), &x).expect("arity");
        let rhs = apply_pas(&m, &alpha, &Permutation::identity(alpha.len()), &x).expect("arity");
        expect_eq(&lhs, &rhs, || format!("p{key} on {w}"))
    })
}

/// The images of `x_{1,1+s}` under all `p_{α,σ}` with `|α| = s` are distinct monomials.
pub fn linear_independence(model_size: u32, max_size: usize) -> FamilyReport {
    let m = TriangularModel::new(model_size);
    let sizes: Vec<usize> = (1..=max_size.min(model_size.saturating_sub(1) as usize)).collect();
    run_family("linear-independence", sizes, |&s| {
        let x = m.generator(1, 1 + s as u32);
        let mut seen = std::collections::BTreeMap::new();
        for key in mopiscotions_of_size(s) {
            let y = pas(&m, &key, &x);
            let (w, c) = match (y.len(), y.first_term()) {
                (1, Some((w, c))) => (w.clone(), c.clone()),
                _ => return Err(format!("p{key}(x(1,{})) = {y} is not a monomial", 1 + s)),
            };
            if c != rat(1) {
                return Err(format!("p{key}(x(1,{})) = {y}", 1 + s));
            }
            if let Some(prev) = seen.insert(w.clone(), key.clone()) {
                return Err(format!("p{prev} and p{key} both give {w}"));
            }
        }
        if seen.len() != rank(s).try_into().unwrap_or(usize::MAX) {
            return Err(format!("size {s}: {} images", seen.len()));
        }
        Ok(())
    })
}

/// `τ^{k×} ∘ ζ⁻¹ ∘ σ^{×ℓ} = τ[σ]` for `k, ℓ ≤ max`.
pub fn zolotarev_factorization(max: usize) -> FamilyReport {
    let mut cases = Vec::new();
    for k in 0..=max {
        for l in 0..=max {
            for sigma in permutations_of(k) {
                for tau in permutations_of(l) {
                    cases.push((k, l, sigma.clone(), tau));
                }
            }
        }
    }
    run_family("zolotarev-factorization", cases, |(k, l, sigma, tau)| {
        let lhs = interleave_power(tau, *k)
            .compose(&zolotarev(*k, *l).inverse())
            .and_then(|p| p.compose(&block_power(sigma, *l)))
            .map_err(|e| e.to_string())?;
        let rhs = wreath_substitute(tau, sigma);
        expect_eq(&lhs, &rhs, || format!("sigma={sigma} tau={tau}"))?;
        let back = block_power(sigma, *l)
            .inverse()
            .compose(&zolotarev(*k, *l))
            .and_then(|p| p.compose(&interleave_power(tau, *k).inverse()))
            .map_err(|e| e.to_string())?;
        expect_eq(&back, &rhs.inverse(), || format!("inverse form, sigma={sigma} tau={tau}"))
    })
}

/// `τ[σ[ρ]] = (τ[σ])[ρ]` for all degrees `≤ max`.
pub fn wreath_associativity(max: usize) -> FamilyReport {
    let mut cases = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for sigma in permutations_of(a) {
                    for tau in permutations_of(b) {
                        for rho in permutations_of(c) {
                            cases.push((sigma.clone(), tau.clone(), rho));
                        }
                    }
                }
            }
        }
    }
    run_family("wreath-associativity", cases, |(sigma, tau, rho)| {
        let lhs = wreath_substitute(tau, &wreath_substitute(sigma, rho));
        let rhs = wreath_substitute(&wreath_substitute(tau, sigma), rho);
        expect_eq(&lhs, &rhs, || format!("{tau}[{sigma}[{rho}]]"))
    })
}

/// Reading a table through `ζ` or `σ^{×ℓ}` permutes it as expected.
pub fn table_readings(max: usize) -> FamilyReport {
    let mut cases: Vec<(ContingencyTable, Permutation)> = Vec::new();
    for k in 0..=max {
        for l in 0..=max {
            for s in 0..=max {
                for alpha in weak_compositions_of(s, k) {
                    for beta in weak_compositions_of(s, l) {
                        for t in contingency_tables(&alpha, &beta) {
                            for sigma in permutations_of(k) {
                                cases.push((t.clone(), sigma));
                            }
                        }
                    }
                }
            }
        }
    }
    run_family("table-readings", cases, |(t, sigma)| {
        let (k, l) = (t.rows(), t.cols());
        let flat = flatten_lex(t);
        let by_cols = act_right(&flat, &zolotarev(k, l)).map_err(|e| e.to_string())?;
        expect_eq(&by_cols, &t.column_major(), || format!("zeta on {t}"))?;
        let moved = act_right(&flat, &block_power(sigma, l)).map_err(|e| e.to_string())?;
        let mut cells = Vec::with_capacity(k * l);
        for i in 0..k {
            for j in 0..l {
                cells.push(t.get(sigma.apply0(i), j));
            }
        }
        expect_eq(&moved, &WeakComposition::new(cells), || format!("{sigma} on {t}"))
    })
}

/// Pure tensors whose legs are the unit or a generator.
fn pure_tensors(m: &TriangularModel, arity: usize) -> Vec<FreeTensor<Word>> {
    let mut legs = vec![Word::unit()];
    legs.extend(m.generators().into_iter().map(|((i, j), _)| Word::letter(i, j)));
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Word>| {
                legs.iter().map(move |w| {
                    let mut q = p.clone();
                    q.push(w.clone());
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(FreeTensor::pure).collect()
}

fn tensor_sum(parts: impl IntoIterator<Item = FreeTensor<Word>>, arity: usize) -> FreeTensor<Word> {
    parts.into_iter().fold(FreeTensor::zero(arity), |acc, t| acc.add(&t).expect("same arity"))
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

/// Identities between iterated (co)products, projections and permutations
/// on tensors, for `k, ℓ` with `kℓ ≤ 4`.
pub fn tensor_lemmas(model_size: u32) -> Vec<FamilyReport> {
    let m = TriangularModel::new(model_size);
    let mut shapes = Vec::new();
    for k in 0..=4usize {
        for l in 0..=4usize {
            if k * l <= 4 {
                shapes.push((k, l));
            }
        }
    }
    let mut reports = Vec::new();

    let mut cases = Vec::new();
    for &(k, l) in &shapes {
        for t in pure_tensors(&m, k * l) {
            cases.push((k, l, t));
        }
    }
    reports.push(run_family("iterated-product", cases.clone(), |(k, l, t)| {
        let lhs = m_power(&m, &m_power_blocks(&m, *k, *l, t).map_err(err)?);
        expect_eq(&lhs, &m_power(&m, t), || format!("k={k} l={l} {:?}", t.terms()))
    }));

    let words = words_up_to(&m, 3);
    let mut dcases = Vec::new();
    for &(k, l) in &shapes {
        for w in &words {
            dcases.push((k, l, w.clone()));
        }
    }
    reports.push(run_family("iterated-coproduct", dcases, |(k, l, w)| {
        let x = basis(w);
        let lhs = delta_power_blocks(&m, *k, *l, &delta_power(&m, *l, &x)).map_err(err)?;
        expect_same(&lhs, &delta_power(&m, k * l, &x), || format!("k={k} l={l} on {w}"))
    }));

    let mut mcases = Vec::new();
    for &(k, l) in &shapes {
        for t in pure_tensors(&m, l) {
            mcases.push((k, l, t));
        }
    }
    reports.push(run_family("coproduct-of-product", mcases, |(k, l, t)| {
        let spread = delta_power_blocks(&m, *k, *l, t).map_err(err)?;
        let shuffled = permute_tensor(&spread, &zolotarev(*k, *l)).map_err(err)?;
        let lhs = m_power_blocks(&m, *k, *l, &shuffled).map_err(err)?;
        let rhs = delta_power(&m, *k, &m_power(&m, t));
        expect_same(&lhs, &rhs, || format!("k={k} l={l} {:?}", t.terms()))
    }));

    let mut pcases = Vec::new();
    for &(k, l) in &shapes {
        for s in 0..=3 {
            for gamma in weak_compositions_of(s, k) {
                pcases.push((l, gamma));
            }
        }
    }
    reports.push(run_family("projection-through-product", pcases.clone(), |(l, gamma)| {
        let k = gamma.len();
        for t in pure_tensors(&m, k * l) {
            let lhs = project_multi(&m, &m_power_blocks(&m, k, *l, &t).map_err(err)?, gamma).map_err(err)?;
            let mut parts = Vec::new();
            for table in row_sum_tables(gamma, *l) {
                let p = project_multi(&m, &t, &flatten_lex(&table)).map_err(err)?;
                parts.push(m_power_blocks(&m, k, *l, &p).map_err(err)?);
            }
            expect_same(&lhs, &tensor_sum(parts, k), || format!("gamma={gamma} l={l} {:?}", t.terms()))?;
        }
        Ok(())
    }));

    reports.push(run_family("projection-through-coproduct", pcases, |(l, gamma)| {
        let k = gamma.len();
        for t in pure_tensors(&m, k) {
            let lhs = delta_power_blocks(&m, *l, k, &project_multi(&m, &t, gamma).map_err(err)?).map_err(err)?;
            let spread = delta_power_blocks(&m, *l, k, &t).map_err(err)?;
            let mut parts = Vec::new();
            for table in row_sum_tables(gamma, *l) {
                parts.push(project_multi(&m, &spread, &flatten_lex(&table)).map_err(err)?);
            }
            expect_same(&lhs, &tensor_sum(parts, k * l), || format!("gamma={gamma} l={l} {:?}", t.terms()))?;
        }
        Ok(())
    }));

    let mut qcases = Vec::new();
    for k in 0..=3usize {
        for s in 0..=3 {
            for gamma in weak_compositions_of(s, k) {
                for pi in permutations_of(k) {
                    qcases.push((gamma.clone(), pi));
                }
            }
        }
    }
    reports.push(run_family("projection-permutation", qcases, |(gamma, pi)| {
        for t in pure_tensors(&m, gamma.len()) {
            let lhs = project_multi(&m, &permute_tensor(&t, pi).map_err(err)?, gamma).map_err(err)?;
            let moved = act_right(gamma, pi).map_err(err)?;
            let rhs = permute_tensor(&project_multi(&m, &t, &moved).map_err(err)?, pi).map_err(err)?;
            expect_same(&lhs, &rhs, || format!("gamma={gamma} pi={pi}"))?;
            let lhs = permute_tensor(&project_multi(&m, &t, gamma).map_err(err)?, pi).map_err(err)?;
            let back = act_right(gamma, &pi.inverse()).map_err(err)?;
            let rhs = project_multi(&m, &permute_tensor(&t, pi).map_err(err)?, &back).map_err(err)?;
            expect_same(&lhs, &rhs, || format!("gamma={gamma} pi={pi}, other side"))?;
        }
        Ok(())
    }));

    let mut ppcases = Vec::new();
    for k in 0..=3usize {
        let all: Vec<WeakComposition> = (0..=3).flat_map(|s| weak_compositions_of(s, k)).collect();
        for a in &all {
            for b in &all {
                ppcases.push((a.clone(), b.clone()));
            }
        }
    }
    reports.push(run_family("projection-idempotence", ppcases, |(a, b)| {
        for t in pure_tensors(&m, a.len()) {
            let lhs = project_multi(&m, &project_multi(&m, &t, b).map_err(err)?, a).map_err(err)?;
            let rhs = if a == b { project_multi(&m, &t, a).map_err(err)? } else { FreeTensor::zero(a.len()) };
            expect_same(&lhs, &rhs, || format!("P{a} P{b}"))?;
        }
        Ok(())
    }));

    reports
}

/// Structural checks on PNSym itself, on every basis key up to `max_degree`.
pub fn basis_counts(max_degree: usize) -> FamilyReport {
    let degrees: Vec<usize> = (0..=max_degree).collect();
    run_family("basis-count", degrees, |&n| {
        let count: usize = compositions_of(n).iter().map(|a| permutations_of(a.len()).len()).sum();
        let listed = mopiscotions_of_size(n).len();
        let expected: usize = rank(n).try_into().map_err(|_| "rank overflow".to_string())?;
        if count == expected && listed == expected {
            Ok(())
        } else {
            Err(format!("degree {n}: enumerated {count}, listed {listed}, rank {expected}"))
        }
    })
}

/// Every oracle family at the given configuration, in a fixed order.
pub fn run_all(cfg: VerifyConfig) -> Vec<FamilyReport> {
    let mut out = vec![
        composition_formula(cfg),
        convolution_formula(cfg),
        identity_permutation(cfg),
        reduction(cfg),
        grading(cfg),
        tensor_square(cfg),
        cocommutative(cfg),
        linear_independence(cfg.model_size, cfg.max_size + 1),
        zolotarev_factorization(4),
        wreath_associativity(4),
        table_readings(3),
        basis_counts(6),
    ];
    out.extend(tensor_lemmas(cfg.model_size));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_configuration_passes() {
        let cfg = VerifyConfig { model_size: 3, max_size: 2 };
        for r in [composition_formula(cfg), convolution_formula(cfg), reduction(cfg), grading(cfg)] {
            assert!(r.passed(), "{r}");
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn report_line_format() {
        let r = FamilyReport { name: "grading", cases: 12, failures: 0, first_failure: None };
        assert_eq!(r.to_string(), "ok   grading                      cases=12      failures=0");
    }
}

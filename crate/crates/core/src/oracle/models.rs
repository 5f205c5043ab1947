use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linear::{write_terms, Combination};
use crate::text::Cursor;

use super::GradedBialgebra;

/// Generator `x_{i,j}` with `i < j`.
pub type Letter = (u32, u32);

/// Monomial in the generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    /// Drops `x_{k,k}` letters; rejects `i > j`.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if let Some(&(i, j)) = letters.iter().find(|(i, j)| i > j) {
            return Err(Error::InvalidInput(format!("letter x({i},{j}) has i > j")));
        }
        Ok(Word(letters.into_iter().filter(|(i, j)| i != j).collect()))
    }

    pub fn letter(i: u32, j: u32) -> Self {
        Word::new(vec![(i, j)]).expect("i <= j")
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(i, j)| j - i).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, j) in &self.0 {
            write!(f, "x({i},{j})")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        if c.eat('1') {
            c.expect_end()?;
            return Ok(Word::unit());
        }
        let mut letters = Vec::new();
        while !c.at_end() {
            let start = c.pos();
            c.expect('x')?;
            c.expect('(')?;
            let i = c.natural()? as u32;
            c.expect(',')?;
            let j = c.natural()? as u32;
            c.expect(')')?;
            if i > j {
                return Err(Error::parse(start, "letter needs i <= j"));
            }
            letters.push((i, j));
        }
        Word::new(letters)
    }
}

pub type FreeElement = Combination<Word>;

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter(), |w| w.to_string())
    }
}

/// `Δ^{[k]}` of a word, given `Δ^{[k]}` of each letter as a list of leg tuples.
fn word_delta_power(w: &Word, k: usize, letter_legs: impl Fn(Letter, usize) -> Vec<Vec<Word>>) -> Combination<Vec<Word>> {
    let mut acc: Combination<Vec<Word>> = Combination::basis(vec![Word::unit(); k]);
    for &l in w.letters() {
        let legs = letter_legs(l, k);
        let mut next = Combination::zero();
        for (t, c) in acc.iter() {
            for choice in &legs {
                let key: Vec<Word> = t.iter().zip(choice).map(|(a, b)| a.concat(b)).collect();
                next.add_term(key, c.clone());
            }
        }
        acc = next;
    }
    acc
}

/// All chains `i = u_0 ≤ u_1 ≤ … ≤ u_k = j`, returned as leg words `x_{u_{r-1},u_r}`.
fn chain_legs((i, j): Letter, k: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    if k == 0 {
        if i == j {
            out.push(Vec::new());
        }
        return out;
    }
    let mut u = vec![i; k + 1];
    u[k] = j;
    fn rec(u: &mut Vec<u32>, pos: usize, out: &mut Vec<Vec<Word>>) {
        let k = u.len() - 1;
        if pos == k {
            out.push((1..=k).map(|r| Word::letter(u[r - 1], u[r])).collect());
            return;
        }
        for v in u[pos - 1]..=u[k] {
            u[pos] = v;
            rec(u, pos + 1, out);
        }
    }
    rec(&mut u, 1, &mut out);
    out
}

/// Free algebra on `x_{i,j}` (`1 ≤ i < j ≤ n`) with `Δ(x_{i,j}) = Σ_k x_{i,k} ⊗ x_{k,j}`.
#[derive(Clone, Copy, Debug)]
pub struct TriangularModel {
    n: u32,
}

impl TriangularModel {
    pub fn new(n: u32) -> Self {
        TriangularModel { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generator(&self, i: u32, j: u32) -> FreeElement {
        assert!(1 <= i && i < j && j <= self.n, "x({i},{j}) is not a generator of model {}", self.n);
        FreeElement::basis(Word::letter(i, j))
    }

    /// All `x_{i,j}`, lexicographic in `(i, j)`.
    pub fn generators(&self) -> Vec<(Letter, FreeElement)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(((i, j), self.generator(i, j)));
            }
        }
        out
    }

    /// Every word of the given degree.
    pub fn words_of_degree(&self, d: u32) -> Vec<Word> {
        let letters: Vec<Letter> = self.generators().into_iter().map(|(l, _)| l).collect();
        let mut out = Vec::new();
        fn rec(letters: &[Letter], left: u32, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
            if left == 0 {
                out.push(Word(cur.clone()));
                return;
            }
            for &(i, j) in letters {
                if j - i <= left {
                    cur.push((i, j));
                    rec(letters, left - (j - i), cur, out);
                    cur.pop();
                }
            }
        }
        rec(&letters, d, &mut Vec::new(), &mut out);
        out
    }
}

impl GradedBialgebra for TriangularModel {
    type Basis = Word;

    fn degree(&self, b: &Word) -> u32 {
        b.degree()
    }

    fn one(&self) -> Word {
        Word::unit()
    }

    fn mul_basis(&self, a: &Word, b: &Word) -> Combination<Word> {
        Combination::basis(a.concat(b))
    }

    fn delta_power_basis(&self, b: &Word, k: usize) -> Combination<Vec<Word>> {
        word_delta_power(b, k, chain_legs)
    }
}

/// Free algebra on `g` primitive generators of degree 1, truncated above degree `cap`.
/// Generator `y_r` is written `x(r,r+1)`.
#[derive(Clone, Copy, Debug)]
pub struct PrimitiveTensorModel {
    g: u32,
    cap: u32,
}

impl PrimitiveTensorModel {
    pub fn new(g: u32, cap: u32) -> Self {
        PrimitiveTensorModel { g, cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn generator(&self, r: u32) -> FreeElement {
        assert!(1 <= r && r <= self.g);
        FreeElement::basis(Word::letter(r, r + 1))
    }

    pub fn words_of_degree(&self, d: u32) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        for _ in 0..d {
            out = out
                .iter()
                .flat_map(|w| (1..=self.g).map(move |r| w.concat(&Word::letter(r, r + 1))))
                .collect();
        }
        out
    }
}

impl GradedBialgebra for PrimitiveTensorModel {
    type Basis = Word;

    fn degree(&self, b: &Word) -> u32 {
        b.degree()
    }

    fn one(&self) -> Word {
        Word::unit()
    }

    fn mul_basis(&self, a: &Word, b: &Word) -> Combination<Word> {
        let w = a.concat(b);
        if w.degree() > self.cap {
            Combination::zero()
        } else {
            Combination::basis(w)
        }
    }

    fn delta_power_basis(&self, b: &Word, k: usize) -> Combination<Vec<Word>> {
        // a degree-1 letter has exactly the chains that put it in one leg
        word_delta_power(b, k, chain_legs)
    }
}

/// `H ⊗ H` with componentwise product and coproduct.
#[derive(Clone, Copy, Debug)]
pub struct TensorSquare<M>(pub M);

impl<M: GradedBialgebra> GradedBialgebra for TensorSquare<M> {
    type Basis = (M::Basis, M::Basis);

    fn degree(&self, (a, b): &Self::Basis) -> u32 {
        self.0.degree(a) + self.0.degree(b)
    }

    fn one(&self) -> Self::Basis {
        (self.0.one(), self.0.one())
    }

    fn mul_basis(&self, (a1, b1): &Self::Basis, (a2, b2): &Self::Basis) -> Combination<Self::Basis> {
        let left = self.0.mul_basis(a1, a2);
        let right = self.0.mul_basis(b1, b2);
        left.bilinear(&right, |a, b| Combination::basis((a.clone(), b.clone())))
    }

    fn delta_power_basis(&self, (a, b): &Self::Basis, k: usize) -> Combination<Vec<Self::Basis>> {
        let da = self.0.delta_power_basis(a, k);
        let db = self.0.delta_power_basis(b, k);
        da.bilinear(&db, |ta, tb| {
            Combination::basis(ta.iter().cloned().zip(tb.iter().cloned()).collect())
        })
    }
}

//! Identities between natural operators on connected graded bialgebras,
//! checked by expanding them in PNSym.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum   := unary (("+" | "-") unary)*
//! unary := "-" unary | conv
//! conv  := comp ("*" comp)*
//! comp  := pw ("o" pw)*
//! pw    := atom ("^" nat | "^*" nat)?
//! atom  := "p" nat | "id" | "S" | "ue" | rational atom | rational
//!        | "(" sum ")" | "F((a1,..);[s1,..])"
//! ```
//!
//! `*` is convolution, `o` is composition, `^k` a composition power and
//! `^*k` a convolution power. A rational followed by an atom scales it; a
//! lone rational `c` stands for `c·ue`.

use std::fmt;

use num::One;

use crate::combinatorics::{compositions_of, Composition, Mopiscotion};
use crate::error::{Error, Result};
use crate::linear::{format_rational, Rational};
use crate::oracle::{evaluate_pnsym, FreeElement, TriangularModel};
use crate::pnsym::PnsymElement;
use crate::text::Cursor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    /// Projection `p_n` onto degree `n`.
    Proj(u32),
    Id,
    Antipode,
    /// `u ∘ ε`.
    CounitUnit,
    /// `p_{α,σ}` given directly by its basis key.
    Basis(Mopiscotion),
    Sum(Box<OperatorExpr>, Box<OperatorExpr>),
    Difference(Box<OperatorExpr>, Box<OperatorExpr>),
    ScalarMul(Rational, Box<OperatorExpr>),
    Convolution(Box<OperatorExpr>, Box<OperatorExpr>),
    Composition(Box<OperatorExpr>, Box<OperatorExpr>),
    CompPower(Box<OperatorExpr>, u32),
    ConvPower(Box<OperatorExpr>, u32),
}

use OperatorExpr as E;

impl OperatorExpr {
    pub fn sum(a: E, b: E) -> E {
        E::Sum(Box::new(a), Box::new(b))
    }

    pub fn difference(a: E, b: E) -> E {
        E::Difference(Box::new(a), Box::new(b))
    }

    pub fn scalar(c: Rational, e: E) -> E {
        E::ScalarMul(c, Box::new(e))
    }

    pub fn conv(a: E, b: E) -> E {
        E::Convolution(Box::new(a), Box::new(b))
    }

    pub fn comp(a: E, b: E) -> E {
        E::Composition(Box::new(a), Box::new(b))
    }

    pub fn comp_power(e: E, k: u32) -> E {
        E::CompPower(Box::new(e), k)
    }

    pub fn conv_power(e: E, k: u32) -> E {
        E::ConvPower(Box::new(e), k)
    }

    fn level(&self) -> u8 {
        match self {
            E::Sum(..) | E::Difference(..) => 0,
            E::Convolution(..) => 2,
            E::Composition(..) => 3,
            E::CompPower(..) | E::ConvPower(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            E::Proj(n) => write!(f, "p{n}"),
            E::Id => f.write_str("id"),
            E::Antipode => f.write_str("S"),
            E::CounitUnit => f.write_str("ue"),
            E::Basis(k) => write!(f, "F{k}"),
            E::Sum(a, b) | E::Difference(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(if matches!(self, E::Sum(..)) { " + " } else { " - " })?;
                b.write_at(f, 1)
            }
            E::ScalarMul(c, e) => {
                write!(f, "{} ", format_rational(c))?;
                e.write_at(f, 5)
            }
            E::Convolution(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" * ")?;
                b.write_at(f, 3)
            }
            E::Composition(a, b) => {
                a.write_at(f, 3)?;
                f.write_str(" o ")?;
                b.write_at(f, 4)
            }
            E::CompPower(e, k) => {
                e.write_at(f, 5)?;
                write!(f, "^{k}")
            }
            E::ConvPower(e, k) => {
                e.write_at(f, 5)?;
                write!(f, "^*{k}")
            }
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl std::str::FromStr for OperatorExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(src: &str) -> Result<OperatorExpr> {
    let mut c = Cursor::new(src);
    let e = parse_sum(&mut c)?;
    c.expect_end()?;
    Ok(e)
}

fn parse_sum(c: &mut Cursor<'_>) -> Result<E> {
    let mut acc = parse_unary(c)?;
    loop {
        if c.eat('+') {
            acc = E::sum(acc, parse_unary(c)?);
        } else if c.eat('-') {
            acc = E::difference(acc, parse_unary(c)?);
        } else {
            return Ok(acc);
        }
    }
}

/// `-` directly followed by a digit starts a rational literal instead.
fn minus_then_digit(c: &mut Cursor<'_>) -> bool {
    c.peek() == Some('-') && c.rest()[1..].trim_start().starts_with(|ch: char| ch.is_ascii_digit())
}

fn parse_unary(c: &mut Cursor<'_>) -> Result<E> {
    if c.peek() == Some('-') && !minus_then_digit(c) {
        c.eat('-');
        return Ok(E::scalar(-Rational::one(), parse_unary(c)?));
    }
    parse_conv(c)
}

fn parse_conv(c: &mut Cursor<'_>) -> Result<E> {
    let mut acc = parse_comp(c)?;
    while c.eat('*') {
        acc = E::conv(acc, parse_comp(c)?);
    }
    Ok(acc)
}

fn at_compose(c: &mut Cursor<'_>) -> bool {
    c.peek() == Some('o') && !c.rest()[1..].starts_with(|ch: char| ch.is_ascii_alphanumeric())
}

fn parse_comp(c: &mut Cursor<'_>) -> Result<E> {
    let mut acc = parse_pw(c)?;
    while at_compose(c) {
        c.eat('o');
        acc = E::comp(acc, parse_pw(c)?);
    }
    Ok(acc)
}

fn exponent(c: &mut Cursor<'_>) -> Result<u32> {
    if c.peek() == Some('-') {
        return Err(c.error("negative exponent"));
    }
    let at = {
        c.skip_ws();
        c.pos()
    };
    let k = c.natural()?;
    u32::try_from(k).map_err(|_| Error::parse(at, "exponent too large"))
}

fn parse_pw(c: &mut Cursor<'_>) -> Result<E> {
    let base = parse_atom(c)?;
    if c.eat('^') {
        if c.eat('*') {
            return Ok(E::conv_power(base, exponent(c)?));
        }
        return Ok(E::comp_power(base, exponent(c)?));
    }
    Ok(base)
}

fn starts_atom(c: &mut Cursor<'_>) -> bool {
    match c.peek() {
        Some('(') => true,
        Some(ch) if ch.is_ascii_digit() => true,
        Some('-') => minus_then_digit(c),
        Some(ch) if ch.is_ascii_alphabetic() => !at_compose(c),
        _ => false,
    }
}

fn parse_atom(c: &mut Cursor<'_>) -> Result<E> {
    c.skip_ws();
    let start = c.pos();
    match c.peek() {
        None => Err(c.error("unexpected end of input")),
        Some('(') => {
            c.eat('(');
            let e = parse_sum(c)?;
            c.expect(')')?;
            Ok(e)
        }
        Some(ch) if ch == '-' || ch.is_ascii_digit() => {
            let neg = c.eat('-');
            let q = c.unsigned_rational()?;
            let q = if neg { -q } else { q };
            if starts_atom(c) {
                Ok(E::scalar(q, parse_atom(c)?))
            } else {
                Ok(E::scalar(q, E::CounitUnit))
            }
        }
        Some(ch) if ch.is_ascii_alphabetic() => {
            let word: String = c.rest().chars().take_while(|ch| ch.is_ascii_alphabetic()).collect();
            c.set_pos(start + word.len());
            match word.as_str() {
                "p" => {
                    let at = c.pos();
                    if !c.rest().starts_with(|ch: char| ch.is_ascii_digit()) {
                        return Err(Error::parse(at, "expected a degree after 'p'"));
                    }
                    let n = c.natural()?;
                    Ok(E::Proj(u32::try_from(n).map_err(|_| Error::parse(at, "degree too large"))?))
                }
                "id" => Ok(E::Id),
                "S" => Ok(E::Antipode),
                "ue" => Ok(E::CounitUnit),
                "F" => Ok(E::Basis(c.weak_mopiscotion()?.reduce())),
                _ => Err(Error::parse(start, format!("unknown atom '{word}'"))),
            }
        }
        Some(ch) => Err(Error::parse(start, format!("unexpected '{ch}'"))),
    }
}

/// Largest degree kept while expanding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionBudget {
    pub max_degree: usize,
}

impl ExpansionBudget {
    pub fn new(max_degree: usize) -> Self {
        ExpansionBudget { max_degree }
    }
}

/// `Σ_{n ≤ d} F_{(n)}`.
pub fn id_element(max_degree: usize) -> PnsymElement {
    (0..=max_degree).map(|n| (Mopiscotion::single(n as u32), Rational::one())).collect()
}

/// `Σ_α (−1)^{ℓ(α)} F_{α,id}` over compositions with `|α| ≤ d`.
pub fn antipode_element(max_degree: usize) -> PnsymElement {
    let mut out = PnsymElement::zero();
    for n in 0..=max_degree {
        for alpha in compositions_of(n) {
            let sign = if alpha.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
            out.add_term(Mopiscotion::with_identity(alpha), sign);
        }
    }
    out
}

/// The PNSym element representing `e`, truncated to degrees `≤ b.max_degree`.
pub fn expand(e: &OperatorExpr, b: ExpansionBudget) -> PnsymElement {
    let d = b.max_degree;
    let out = match e {
        E::Proj(n) => {
            if *n as usize <= d {
                PnsymElement::basis(Mopiscotion::single(*n))
            } else {
                PnsymElement::zero()
            }
        }
        E::Id => id_element(d),
        E::Antipode => antipode_element(d),
        E::CounitUnit => PnsymElement::one(),
        E::Basis(k) => PnsymElement::basis(k.clone()),
        E::Sum(x, y) => expand(x, b) + expand(y, b),
        E::Difference(x, y) => expand(x, b) - expand(y, b),
        E::ScalarMul(c, x) => expand(x, b).scale(c),
        E::Convolution(x, y) => expand(x, b).external_mul(&expand(y, b)),
        E::Composition(x, y) => expand(x, b).internal_mul(&expand(y, b)),
        E::CompPower(x, k) => {
            if *k == 0 {
                id_element(d)
            } else {
                let base = expand(x, b);
                let mut acc = base.clone();
                for _ in 1..*k {
                    acc = acc.internal_mul(&base).truncate(d);
                }
                acc
            }
        }
        E::ConvPower(x, k) => {
            let base = expand(x, b);
            let mut acc = PnsymElement::one();
            for _ in 0..*k {
                acc = acc.external_mul(&base).truncate(d);
            }
            acc
        }
    };
    out.truncate(d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The first surviving term in canonical order.
    Fails { key: Mopiscotion, coeff: Rational },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails { key, coeff } => {
                write!(f, "fails: {}", PnsymElement::term(coeff.clone(), key.clone()))
            }
        }
    }
}

/// Whether `e` vanishes on the degree-`m` component of every connected graded bialgebra.
pub fn check_zero_on_degree(e: &OperatorExpr, m: usize) -> Verdict {
    let part = expand(e, ExpansionBudget::new(m)).degree_component(m);
    match part.first_term() {
        None => Verdict::Holds,
        Some((k, c)) => Verdict::Fails { key: k.clone(), coeff: c.clone() },
    }
}

/// `F_{(i,j),id} − F_{(j,i),id}`.
pub fn commutator_element(i: u32, j: u32) -> PnsymElement {
    let ij = Mopiscotion::with_identity(Composition::new([i, j].into_iter().filter(|&x| x > 0).collect()).expect("positive"));
    let ji = Mopiscotion::with_identity(Composition::new([j, i].into_iter().filter(|&x| x > 0).collect()).expect("positive"));
    PnsymElement::basis(ij) - PnsymElement::basis(ji)
}

/// Smallest `k ≤ k_max` with `(F_{(i,j),id} − F_{(j,i),id})^{∗k} = 0`, computed in degree `i + j`.
pub fn k_value(i: u32, j: u32, k_max: u32) -> Option<u32> {
    k_value_with(i, j, k_max, |_, _| {})
}

/// As [`k_value`], reporting each power's term count as it goes.
pub fn k_value_with(i: u32, j: u32, k_max: u32, mut progress: impl FnMut(u32, usize)) -> Option<u32> {
    let x = commutator_element(i, j);
    let mut power = x.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.internal_mul(&x);
        }
        progress(k, power.len());
        if power.is_zero() {
            return Some(k);
        }
    }
    None
}

/// `(S∘S − id)^{∘k}`; the exponent is raised to 1 when `k = 0` so the
/// statement is not the trivially false `id = 0`.
pub fn squared_antipode_expr(k: u32) -> OperatorExpr {
    let s2_minus_id = E::difference(E::comp_power(E::Antipode, 2), E::Id);
    E::comp_power(s2_minus_id, k.max(1))
}

pub fn squared_antipode_check(k: u32) -> Verdict {
    check_zero_on_degree(&squared_antipode_expr(k), k as usize)
}

/// Compares `expand(S)` with the Hopf antipode of PNSym applied to `expand(id)`,
/// degree by degree up to `m`.
pub fn antipode_consistent(m: usize) -> bool {
    let direct = antipode_element(m);
    let via_hopf = id_element(m).antipode().truncate(m);
    let inverse = direct.external_mul(&id_element(m)).truncate(m);
    direct == via_hopf && inverse == PnsymElement::one()
}

/// Degree-`m` part of `e` applied to the generator `x_{1,m+1}` of the triangular model.
pub fn evaluate_on_model(e: &OperatorExpr, m: usize) -> FreeElement {
    let part = expand(e, ExpansionBudget::new(m)).degree_component(m);
    let model = TriangularModel::new(m as u32 + 1);
    if m == 0 {
        return evaluate_pnsym(&model, &part, &FreeElement::basis(crate::oracle::Word::unit()));
    }
    evaluate_pnsym(&model, &part, &model.generator(1, m as u32 + 1))
}

use std::fmt;

use num::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, Mopiscotion, Permutation, WeakComposition, WeakMopiscotion};
use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, write_terms, Combination, Rational};
use crate::text::Cursor;

use super::{NsymElement, PnsymElement, PnsymTensor};

impl fmt::Display for PnsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter(), |k| format!("F{k}"))
    }
}

impl fmt::Display for PnsymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter(), |(a, b)| format!("F{a} (x) F{b}"))
    }
}

impl fmt::Display for NsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter(), |a| format!("H{a}"))
    }
}

impl fmt::Display for Combination<(Composition, Composition)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.iter(), |(a, b)| format!("H{a} (x) H{b}"))
    }
}

/// Parses `c*F((a1,...,ak);[s1,...,sk]) - F(...) + ...` (or `0`).
/// Weak keys are accepted and reduced.
pub fn parse_element(src: &str) -> Result<PnsymElement> {
    let mut c = Cursor::new(src);
    let e = parse_element_at(&mut c)?;
    c.expect_end()?;
    Ok(e)
}

pub(crate) fn parse_element_at(c: &mut Cursor<'_>) -> Result<PnsymElement> {
    let mut out = PnsymElement::zero();
    if c.peek() == Some('0') {
        let save = c.pos();
        c.natural()?;
        if c.at_end() {
            return Ok(out);
        }
        c.set_pos(save);
    }
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        if c.eat('-') {
            sign = -sign;
        } else if !first && !c.eat('+') {
            if c.at_end() {
                break;
            }
            return Err(c.error("expected '+' or '-'"));
        } else if first {
            c.eat('+');
        }
        let coeff = if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            let q = c.unsigned_rational()?;
            c.expect('*')?;
            q
        } else {
            Rational::one()
        };
        let wm = f_atom(c)?;
        out.add_term(wm.reduce(), sign * coeff);
        first = false;
        if c.at_end() {
            break;
        }
    }
    Ok(out)
}

/// `F((..);[..])`
pub(crate) fn f_atom(c: &mut Cursor<'_>) -> Result<WeakMopiscotion> {
    c.expect('F')?;
    c.weak_mopiscotion()
}

/// One term of the JSON element form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub alpha: Vec<u32>,
    pub sigma: Vec<usize>,
}

pub type ElementJson = Vec<TermJson>;

impl PnsymElement {
    pub fn to_json_terms(&self) -> ElementJson {
        self.iter()
            .map(|(k, c)| TermJson {
                coeff: format_rational(c),
                alpha: k.alpha().entries().to_vec(),
                sigma: k.sigma().one_line(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("serializable")
    }

    /// Parses the JSON list form; weak keys are reduced.
    pub fn from_json(src: &str) -> Result<Self> {
        let terms: ElementJson =
            serde_json::from_str(src).map_err(|e| Error::InvalidInput(format!("bad element JSON: {e}")))?;
        let mut out = Self::zero();
        for t in terms {
            let coeff = parse_rational(&t.coeff)?;
            let wm = WeakMopiscotion::new(WeakComposition::new(t.alpha), Permutation::from_one_line(t.sigma)?)?;
            out.add_term(wm.reduce(), coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct TensorTermJson {
    coeff: String,
    left: KeyJson,
    right: KeyJson,
}

#[derive(Serialize)]
struct KeyJson {
    alpha: Vec<u32>,
    sigma: Vec<usize>,
}

impl From<&Mopiscotion> for KeyJson {
    fn from(k: &Mopiscotion) -> Self {
        KeyJson {
            alpha: k.alpha().entries().to_vec(),
            sigma: k.sigma().one_line(),
        }
    }
}

impl PnsymTensor {
    pub fn to_json(&self) -> String {
        let terms: Vec<TensorTermJson> = self
            .iter()
            .map(|((a, b), c)| TensorTermJson {
                coeff: format_rational(c),
                left: a.into(),
                right: b.into(),
            })
            .collect();
        serde_json::to_string(&terms).expect("serializable")
    }
}

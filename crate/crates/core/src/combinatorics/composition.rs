use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A finite tuple of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        WeakComposition(entries)
    }

    pub fn empty() -> Self {
        WeakComposition(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn concat(&self, other: &WeakComposition) -> WeakComposition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeakComposition(v)
    }

    /// The composition of nonzero entries.
    pub fn drop_zeros(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&a| a != 0).collect())
    }

    pub fn is_composition(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }
}

impl Index<usize> for WeakComposition {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        WeakComposition(v)
    }
}

impl From<Composition> for WeakComposition {
    fn from(c: Composition) -> Self {
        WeakComposition(c.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, '(', ')', self.0.iter())
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    open: char,
    close: char,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    write!(f, "{open}")?;
    for (n, x) in items.enumerate() {
        if n > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "{close}")
}

/// A finite tuple of strictly positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "composition entries must be positive: {entries:?}"
            )));
        }
        Ok(Composition(entries))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`, or `()` when `n = 0`.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Composition::empty()
        } else {
            Composition(vec![n])
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }
}

impl Index<usize> for Composition {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, '(', ')', self.0.iter())
    }
}

/// All compositions of `n`, grouped by length and lexicographic within a length.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        for w in weak_compositions_of(n - k, k) {
            out.push(Composition(w.0.iter().map(|&a| a + 1).collect()));
        }
    }
    out
}

/// All weak compositions of `n` with exactly `parts` entries, in lexicographic order.
pub fn weak_compositions_of(n: usize, parts: usize) -> Vec<WeakComposition> {
    fn rec(n: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if parts == 0 {
            if n == 0 {
                out.push(WeakComposition(prefix.clone()));
            }
            return;
        }
        if parts == 1 {
            prefix.push(n);
            out.push(WeakComposition(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            rec(n - a, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, parts, &mut Vec::new(), &mut out);
    out
}

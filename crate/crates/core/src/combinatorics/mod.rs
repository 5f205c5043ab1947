//! Weak compositions, permutations, mopiscotions and contingency tables,
//! together with the combinatorial maps the product formulas are built from.

mod composition;
mod contingency;
mod mopiscotion;
mod permutation;

pub use composition::{compositions_of, weak_compositions_of, Composition, WeakComposition};
pub use contingency::{contingency_tables, row_sum_tables, ContingencyTable, ContingencyTables};
pub use mopiscotion::{mopiscotions_of_size, reduce, Mopiscotion, WeakMopiscotion};
pub use permutation::{
    block_power, direct_sum, interleave_power, permutations_of, standardize, wreath_substitute,
    zolotarev, Permutation,
};

use crate::error::{Error, Result};

/// Right action `γ·π` on tuples: entry `i` of the result is `γ_{π(i)}`.
pub fn act_right(gamma: &WeakComposition, pi: &Permutation) -> Result<WeakComposition> {
    if gamma.len() != pi.degree() {
        return Err(Error::arity(pi.degree(), gamma.len()));
    }
    Ok(WeakComposition::new(
        (0..gamma.len()).map(|i| gamma[pi.apply0(i)]).collect(),
    ))
}

/// Row-major reading `(γ_{1,1}, γ_{1,2}, …, γ_{k,ℓ})` of a table.
pub fn flatten_lex(t: &ContingencyTable) -> WeakComposition {
    WeakComposition::new(t.cells().to_vec())
}

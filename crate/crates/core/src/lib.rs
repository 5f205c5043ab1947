pub mod checker;
pub mod combinatorics;
pub mod error;
pub mod linear;
pub mod oracle;
pub mod pnsym;
pub mod text;
pub mod verify;

pub use error::{Error, Result};

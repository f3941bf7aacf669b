//! Θ-rank of irreducible characters of finite symplectic, orthogonal and
//! unitary groups, computed exactly from symbols and Lusztig data.
//!
//! ```
//! use thetarank::{sym, theta_rank_symbol, World};
//!
//! // Steinberg character of Sp_6.
//! assert_eq!(theta_rank_symbol(World::SpO, &sym("[3,2,1,0|3,2,1]")).unwrap(), 6);
//! ```
//!
//! The guide under `book/` walks through every module; its code blocks run
//! as doc-tests of this crate.

pub mod branching;
pub mod correspondence;
pub mod datum;
pub mod error;
pub mod family;
pub mod partition;
pub mod symbol;
pub mod theta;
pub mod verify;
pub mod witness;

pub use branching::{
    datum_successors, distinguished_successor, induced_set, min_theta_over_induced, successors, SlotChoice,
};
pub use correspondence::{underline_theta, underline_theta_rank, PairCase, UnderlineTheta};
pub use datum::{embed_unipotent, LusztigDatum, OrthoSympDatum, Slot, UnitaryDatum};
pub use error::{Error, ParseError, Result};
pub use family::{
    count_symbols, enumerate_symbols, enumerate_unipotent, FamilyKind, GroupFamily, UnipotentChar, WittFamily, World,
};
pub use partition::{Bipartition, Partition};
pub use symbol::{sym, BetaSet, Symbol};
pub use theta::{first_occurrence, theta_rank, theta_rank_symbol, Tower};
pub use verify::{counting_oracle, run_suite, SuiteParams, SuiteReport};
pub use witness::{cuspidal, is_admissible, steinberg, witness, Witness};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    mod symbols {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/theta-rank.md")]
    mod theta_rank {}
    #[doc = include_str!("../../../book/src/data.md")]
    mod data {}
    #[doc = include_str!("../../../book/src/correspondence.md")]
    mod correspondence {}
    #[doc = include_str!("../../../book/src/branching.md")]
    mod branching {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}

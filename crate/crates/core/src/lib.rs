pub mod grossnum;
pub mod sequences;
pub mod simulate;
pub mod turing;

pub use grossnum::{Classification, GrossError, GrossNumber, Rational};

// The guide's chapters are compiled as doc-tests so their examples stay
// in sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gross-numbers.md")]
    mod gross_numbers {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/numeral-systems.md")]
    mod numeral_systems {}
    #[doc = include_str!("../../../book/src/turing-machines.md")]
    mod turing_machines {}
    #[doc = include_str!("../../../book/src/simulation.md")]
    mod simulation {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}

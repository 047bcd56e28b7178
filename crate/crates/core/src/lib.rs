//! Exact arithmetic for tame frieze patterns and lambda-quiddity cycles.
//!
//! A lambda-cycle is a sequence `(c_1, ..., c_m)` with
//! `eta(c_1) ... eta(c_m) = lambda * Id` where `eta(c) = [[c, -1], [1, 0]]`.
//! The crate verifies and glues cycles, builds their frieze patterns,
//! decides reducibility over a whole ring or a subset of it, decomposes
//! cycles into irreducible summands and enumerates cycles exhaustively over
//! finite candidate sets.
//!
//! ```
//! use frieze_lab::cycle::{cycle_sum, QuiddityCycle};
//!
//! let a = QuiddityCycle::from_ints(&[3, 0, -3, 0]).unwrap();
//! let b = QuiddityCycle::from_ints(&[-1, -1, -1]).unwrap();
//! let s = cycle_sum(&a, &b).unwrap();
//! assert_eq!(s.to_string(), "2,0,-3,-1,-1");
//! ```

pub mod cli;
pub mod cycle;
pub mod enumerate;
pub mod error;
pub mod eta;
pub mod frieze;
pub mod gauss;
pub mod io;
pub mod reduce;
pub mod ring;

pub use cycle::{DihedralElement, QuiddityCycle};
pub use error::{Error, Result};
pub use frieze::FriezePattern;
pub use ring::{Domain, RingElement, Sign, SubsetSpec};

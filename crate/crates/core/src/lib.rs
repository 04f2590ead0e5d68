//! Symbolic computation in the monoid of shrinking braids.
//!
//! Words in the crossings `s_i^{±1}` and the merges `x_i` are handled by [`word`].
//! Equality and the linear order `<_L` are decided through a faithful action on the
//! free group ([`representation`], [`freegroup`]). The remaining modules cover the
//! merge submonoid ([`xmonoid`]), the left-distributive operations on braids ([`ld`]),
//! the enveloping LD monoid of a finite LD system ([`envelope`]), and braid
//! coloring ([`coloring`]).
//!
//! ```
//! use sbraid::{RWord, representation::morphism_eq};
//!
//! let lhs: RWord = "x2 x1".parse().unwrap();
//! let rhs: RWord = "x1 x1".parse().unwrap();
//! assert!(morphism_eq(&lhs, &rhs));
//! ```

pub mod coloring;
pub mod envelope;
mod error;
pub mod freegroup;
pub mod ld;
pub mod representation;
mod text;
pub mod word;
pub mod xmonoid;

pub use coloring::{color, compose_colored, ColoredMorphism};
pub use envelope::{EnvElement, LDTable, OrbitAnswer};
pub use error::{Error, ParseError, Result};
pub use freegroup::{FLetter, FWord, Sign};
pub use ld::{BElement, LDTerm};
pub use representation::{cmp_l, morphism_eq};
pub use word::{Direction, Generator, Kind, RWord, Relation};
pub use xmonoid::{XSeq, XWord};

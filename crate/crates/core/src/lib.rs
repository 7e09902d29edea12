//! Exact combinatorics for the rational shuffle side: rational parking
//! functions, `m`-stable affine permutations, simultaneous cores, ribbon
//! tableaux with their spin, and Schur expansions of the resulting
//! quasisymmetric generating functions.

pub mod affine;
pub mod beta;
pub mod cores;
pub mod engine;
pub mod error;
pub mod kostka;
pub mod parking;
pub mod partition;
pub mod poly;
pub mod ribbon;
pub mod symfun;

pub use affine::AffinePermutation;
pub use beta::{BetaSet, RibbonMove};
pub use error::{Error, Result};
pub use parking::{DyckPath, ParkingFunction, WeightGrid};
pub use partition::{Partition, SkewShape};
pub use poly::CoeffPoly;
pub use ribbon::{Ribbon, SemistandardRibbonTableau, StandardRibbonTableau};
pub use symfun::{FundamentalExpansion, MonomialVector, SchurExpansion};

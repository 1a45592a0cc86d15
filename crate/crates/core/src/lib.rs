//! Strongly stable ideals, isotone-map duality, shift modules and their
//! resolutions.

pub mod duality;
pub mod error;
pub mod field;
pub mod fixture;
pub mod ideal;
pub mod isotone;
pub mod json;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod resolution;
pub mod sample;
pub mod shift_module;
pub mod ulex;

pub use error::{Error, Result};
pub use field::{Field, FieldConfig, PrimeField, RationalField};
pub use ideal::{sst_minimalize, SstIdeal};
pub use isotone::{Domain, ExtNat, FiniteBox, IsotoneMap, MapClass, Tail};
pub use linalg::Matrix;
pub use monomial::{Alphabet, Monomial, MultiDegree};
pub use resolution::{BettiTable, EkComplex, Grading, ShiftComplex, VerifyReport};
pub use shift_module::{Degree, FiniteShiftModule, GradedPieceTable, ShiftMorphism};

//! Atoms and sets of lengths in two factorization monoids: finite subsets of ℕ
//! under setwise addition, and nonzero monomial ideals of `K[X,Y]` under the
//! ideal product.

pub mod engine;
pub mod error;
pub mod experiments;
pub mod families;
pub mod graded_ideal;
pub mod lengths;
pub mod monomial_ideal;
pub mod oracle;
pub mod power_monoid;
pub mod target;
pub mod verify;

pub use engine::{Engine, Factorization, GradedMonoid, SearchConfig};
pub use error::{Error, Result};
pub use families::SumSequence;
pub use lengths::{Elasticity, LengthSet};
pub use monomial_ideal::{ExpPair, MonIdeal, MonomialMonoid};
pub use power_monoid::{NatSet, ReducedPowerMonoid};
pub use target::{parse_target, FamilyArgs, Target};
pub use verify::{Report, Status, Suite, VerifyConfig};

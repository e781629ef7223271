//! Exact polynomial invariants.

pub mod bracket;
pub mod homfly;
pub mod laurent1;
pub mod laurent2;
pub mod seifert;

pub use laurent1::Laurent1;
pub use laurent2::Laurent2;

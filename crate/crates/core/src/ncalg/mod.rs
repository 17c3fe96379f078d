//! Free algebra arithmetic, graded presentations, and degree-capped
//! quotient computations.

mod poly;
mod presentation;
mod quotient;
pub mod syntax;
mod word;

pub use poly::NCPoly;
pub use presentation::Presentation;
pub use quotient::{hilbert, minimal_relation_degrees, QuotientCache, DEFAULT_WORD_BUDGET};
pub use word::Word;

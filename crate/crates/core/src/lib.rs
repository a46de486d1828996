pub mod algebra;
pub mod builders;
pub mod cli;
pub mod error;
pub mod format;
pub mod homology;
pub mod interval;
pub mod koszul;
pub mod linalg;
pub mod numerology;
pub mod poset;
pub mod simplicial;
pub mod sr;

pub use error::{Error, Result};

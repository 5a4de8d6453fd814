pub mod coeffring;
pub mod dualform;
pub mod error;
pub mod hopfcore;
pub mod liebialg;
pub mod matrep;
pub mod ncengine;
pub mod outcome;
pub mod poissonlie;
pub mod suites;

pub use error::{Error, Result};
pub use outcome::{Outcome, Witness};

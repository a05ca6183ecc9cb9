pub mod cli;
pub mod convergents;
pub mod directive;
pub mod error;
pub mod exponent;
pub mod oracle;
pub mod recurrence;
pub mod rote;
pub mod sturmian;
pub mod surd;
pub mod verify;
pub mod words;

pub use error::{Error, Result};

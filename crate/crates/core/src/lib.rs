pub mod appendix;
pub mod cli;
pub mod closed;
pub mod counter;
pub mod error;
pub mod exact;
pub mod group;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};

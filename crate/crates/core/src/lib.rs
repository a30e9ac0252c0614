pub mod comod;
pub mod constructors;
pub mod context;
pub mod document;
pub mod error;
pub mod examples;
pub mod linalg;
pub mod qcat;
pub mod quantum;

pub use error::{Error, Result};

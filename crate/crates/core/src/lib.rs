pub mod error;
pub mod polyring;

pub use error::{Error, Result};
pub mod groebner;
pub mod hyper;
pub mod ci;
pub mod inertia;
pub mod oracle;
pub mod cli;

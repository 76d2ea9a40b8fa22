pub mod artinian;
pub mod error;
pub mod field;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod semigroup;
pub mod verifier;

pub use error::{Error, Result};

pub mod error;
pub mod exactla;
pub mod field;

pub use error::{Error, Result};
pub mod crossprod;
pub mod invmon;
pub mod monhom;
pub mod serial;
pub mod steinberg;

pub mod error;
pub mod fga;
pub mod gkm;
pub mod hecke;
pub mod qw;
pub mod ring;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};

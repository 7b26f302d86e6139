pub mod arith;
pub mod catalog;
pub mod cli;
pub mod engine;
pub mod error;
pub mod identities;
pub mod numthy;
pub mod padic;
pub mod summands;
pub mod wz;

//! Exact combinatorics around primitive ideals of `U(o(∞))` and `U(sp(∞))`.

pub mod branching;
pub mod cli;
pub mod cls;
pub mod half;
pub mod hecke;
pub mod primitive;
pub mod symbols;
pub mod tableaux;
pub mod weyl;

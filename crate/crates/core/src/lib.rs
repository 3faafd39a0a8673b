//! Three equivalent formalisms of recursion side by side: the lambda
//! calculus, Turing machines and a minimal Lisp, with constructions that
//! cross-check them and a small calculus of problems and their resolutions.

pub mod bridges;
pub mod cli;
pub mod lambda;
pub mod lisp;
pub mod problems;
pub mod sexpr;
pub mod turing;

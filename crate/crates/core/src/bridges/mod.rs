//! Constructions that cross between the formalisms: a compiler from Turing
//! machines to the Lisp, Merge and Zermelo numerals, the aⁿbⁿ recognizer
//! demonstration, and numeral addition carried out in all three engines.

mod anbn;
mod compile;
pub mod merge;
mod numerals;
mod set;

pub use anbn::{all_words, anbn_demo, anbn_member, AnbnReport};
pub use compile::{
    compare_with_simulator, compile_tm, compiled_fuel_per_step, input_words, run_compiled,
    CompiledOutcome, CompiledProgram, CompiledRun, EquivalenceReport, PLUMBING,
    REQUIRED_PRIMITIVES,
};
pub use merge::{merge, zermelo_decode, zermelo_encode};
pub use numerals::{church_sum, lisp_sum, turing_sum};
pub use set::FiniteSet;

use crate::turing::{parse_machine, Machine};

pub mod fixtures {
    //! Machine files bundled with the crate.

    pub const SUCC: &str = include_str!("../../assets/machines/succ.tm");
    pub const ADDER: &str = include_str!("../../assets/machines/adder.tm");
    pub const FLIPPER: &str = include_str!("../../assets/machines/flipper.tm");
    pub const RUNAWAY: &str = include_str!("../../assets/machines/runaway.tm");

    /// The machines used for compiler equivalence, by name.
    pub const EQUIVALENCE: [(&str, &str); 3] =
        [("succ", SUCC), ("adder", ADDER), ("flipper", FLIPPER)];
}

/// Parses one of the bundled machine texts.
pub fn fixture(text: &str) -> Machine {
    parse_machine(text).expect("bundled machine parses")
}

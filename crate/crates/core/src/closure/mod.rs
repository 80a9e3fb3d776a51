//! Closing the state space of a target `u_alpha` into a finite linear
//! system, streaming its terms and extracting the generating function.

mod solve;
mod system;

pub use solve::{guess_gf, solve_gf, GuessError, SolveError, SolveMethod, SolvedGf, AUTO_ELIMINATE_MAX_DIM, FIT_GUARD};
pub use system::{
    build_system, build_system_with_cache, stream_terms, BuildError, ClosureReport, Outcome, StateSystem, DEFAULT_LIMIT,
};

//! Product specifications, states, the evolution equation and brute-force
//! oracles.

mod dynamics;
mod oracle;
mod spec;
mod state;

pub use dynamics::{evolve, evolve_unpruned, initial_value, is_dead, DeadnessCache, EvolutionRow, Liveness};
pub use oracle::{expand_fn, state_oracle, u_alpha_oracle, u_alpha_oracle_terms, ArrayRows, OracleLimits};
pub use spec::{FactorTerm, ProductSpec, TargetAlpha};
pub use state::State;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SternError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("invalid alpha: {0}")]
    InvalidAlpha(String),
    #[error("exponent arithmetic overflowed 64 bits")]
    Overflow,
    #[error("resource bound exceeded: {needed} coefficients needed, limit is {limit}")]
    ResourceBound { needed: usize, limit: usize },
}

/// Root state of `u_alpha`: offset `i` repeated `alpha_i` times, all forms zero.
pub fn root_state(alpha: &TargetAlpha, spec: &ProductSpec) -> State {
    State::root(alpha, spec.order())
}

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::stern::{evolve, initial_value, DeadnessCache, Liveness, ProductSpec, State, SternError, TargetAlpha};

pub const DEFAULT_LIMIT: usize = 5000;

/// Number of frontier states kept in a limit report.
const FRONTIER_SAMPLE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Closed,
    LimitExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub state_count: usize,
    pub dead_discarded_count: usize,
    pub limit: usize,
    pub outcome: Outcome,
    /// Up to a few unexpanded states at abort, as `(d, beta)` lists.
    pub frontier_sample: Vec<Vec<(i64, Vec<i64>)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("state limit {} exceeded ({} states)", .0.limit, .0.state_count)]
    LimitExceeded(ClosureReport),
    #[error(transparent)]
    Stern(#[from] SternError),
}

/// The transfer system `f(n) = M f(n-1)`, `f(0) = v`, whose root component
/// is `u_alpha(n)`.
#[derive(Debug, Clone)]
pub struct StateSystem {
    states: Vec<State>,
    rows: Vec<Vec<(usize, BigInt)>>,
    /// The same rows when every coefficient fits in an `i64`.
    small_rows: Option<Vec<Vec<(u32, i64)>>>,
    v: Vec<BigInt>,
    report: ClosureReport,
}

impl StateSystem {
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    /// Row `s` of `M` as `(column, coefficient)` pairs, columns ascending.
    pub fn row(&self, s: usize) -> &[(usize, BigInt)] {
        &self.rows[s]
    }

    pub fn rows(&self) -> &[Vec<(usize, BigInt)>] {
        &self.rows
    }

    pub fn v(&self) -> &[BigInt] {
        &self.v
    }

    pub fn report(&self) -> &ClosureReport {
        &self.report
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `M x`.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.dim());
        match &self.small_rows {
            Some(rows) => rows
                .iter()
                .map(|row| {
                    let mut acc = BigInt::zero();
                    for &(t, c) in row {
                        let xt = &x[t as usize];
                        if !xt.is_zero() {
                            acc += xt * c;
                        }
                    }
                    acc
                })
                .collect(),
            None => self
                .rows
                .iter()
                .map(|row| row.iter().fold(BigInt::zero(), |acc, (t, c)| acc + &x[*t] * c))
                .collect(),
        }
    }

    /// `M^n v`, the values of every state at level `n`.
    pub fn level_values(&self, n: usize) -> Vec<BigInt> {
        let mut x = self.v.clone();
        for _ in 0..n {
            x = self.apply(&x);
        }
        x
    }
}

pub fn build_system(spec: &ProductSpec, alpha: &TargetAlpha, limit: usize) -> Result<StateSystem, BuildError> {
    build_system_with_cache(spec, alpha, limit, &DeadnessCache::new())
}

/// Breadth-first closure from the root state. Children are visited in
/// canonical order, so the indexing is a function of the inputs alone.
pub fn build_system_with_cache(
    spec: &ProductSpec,
    alpha: &TargetAlpha,
    limit: usize,
    cache: &DeadnessCache,
) -> Result<StateSystem, BuildError> {
    let root = State::root(alpha, spec.order());
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states = vec![root.clone()];
    index.insert(root.clone(), 0);
    let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);

    let root_dead = cache.classify(spec, &root) == Liveness::Dead;

    while let Some(s) = queue.pop_front() {
        debug_assert_eq!(s, rows.len());
        if s == 0 && root_dead {
            rows.push(Vec::new());
            continue;
        }
        let row = evolve(spec, &states[s], cache)?;
        let mut out = Vec::with_capacity(row.terms.len());
        for (c, target) in row.terms {
            let t = match index.get(&target) {
                Some(&t) => t,
                None => {
                    let t = states.len();
                    if t + 1 > limit {
                        let frontier_sample = std::iter::once(&target)
                            .chain(queue.iter().map(|&q| &states[q]))
                            .take(FRONTIER_SAMPLE)
                            .map(State::to_pairs)
                            .map(|v| v.into_iter().map(|(d, b)| (d, b.0)).collect())
                            .collect();
                        return Err(BuildError::LimitExceeded(ClosureReport {
                            state_count: t + 1,
                            dead_discarded_count: cache.dead_count(),
                            limit,
                            outcome: Outcome::LimitExceeded,
                            frontier_sample,
                        }));
                    }
                    index.insert(target.clone(), t);
                    states.push(target);
                    queue.push_back(t);
                    t
                }
            };
            out.push((t, c));
        }
        out.sort_by_key(|(t, _)| *t);
        rows.push(out);
    }

    let v = states.iter().map(|s| initial_value(spec, s)).collect();
    let small_rows = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(t, c)| Some((u32::try_from(*t).ok()?, c.to_i64()?)))
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>();
    let report = ClosureReport {
        state_count: states.len(),
        dead_discarded_count: cache.dead_count(),
        limit,
        outcome: Outcome::Closed,
        frontier_sample: Vec::new(),
    };
    Ok(StateSystem {
        states,
        rows,
        small_rows,
        v,
        report,
    })
}

/// `u(n) = (M^n v)[root]` for `n = 0..=n_max`.
pub fn stream_terms(sys: &StateSystem, n_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut x = sys.v.clone();
    out.push(x[sys.root()].clone());
    for _ in 0..n_max {
        x = sys.apply(&x);
        out.push(x[sys.root()].clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ZPoly;

    fn base() -> ProductSpec {
        ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1, 1], 2).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classical_squares_system() {
        let sys = build_system(&base(), &TargetAlpha::new(vec![2]).unwrap(), DEFAULT_LIMIT).unwrap();
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.row(0), &[(0, BigInt::from(3)), (1, BigInt::from(4))]);
        assert_eq!(sys.row(1), &[(0, BigInt::from(1)), (1, BigInt::from(2))]);
        assert_eq!(sys.v(), big(&[1, 0]).as_slice());
        assert_eq!(stream_terms(&sys, 4), big(&[1, 3, 13, 59, 269]));
        assert_eq!(sys.report().outcome, Outcome::Closed);
    }

    #[test]
    fn single_factor_system() {
        let sys = build_system(&base(), &TargetAlpha::new(vec![1]).unwrap(), DEFAULT_LIMIT).unwrap();
        assert_eq!(sys.dim(), 1);
        assert_eq!(sys.row(0), &[(0, BigInt::from(3))]);
        assert_eq!(stream_terms(&sys, 3), big(&[1, 3, 9, 27]));
    }

    #[test]
    fn limit_is_reported() {
        let alpha = TargetAlpha::new(vec![5]).unwrap();
        match build_system(&base(), &alpha, 3) {
            Err(BuildError::LimitExceeded(r)) => {
                assert_eq!(r.state_count, 4);
                assert_eq!(r.limit, 3);
                assert_eq!(r.outcome, Outcome::LimitExceeded);
                assert!(!r.frontier_sample.is_empty());
            }
            other => panic!("expected limit, got {other:?}"),
        }
    }

    #[test]
    fn deterministic_indexing() {
        let alpha = TargetAlpha::new(vec![1, 1, 1]).unwrap();
        let a = build_system(&base(), &alpha, DEFAULT_LIMIT).unwrap();
        let b = build_system(&base(), &alpha, DEFAULT_LIMIT).unwrap();
        assert_eq!(a.states(), b.states());
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.v(), b.v());
    }

    #[test]
    fn dead_root_gives_zero_system() {
        // F_n = 1, so a(n,k) a(n,k+1) vanishes identically
        let spec = ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1], 2).unwrap();
        let sys = build_system(&spec, &TargetAlpha::new(vec![1, 1]).unwrap(), 10).unwrap();
        assert_eq!(sys.dim(), 1);
        assert_eq!(stream_terms(&sys, 3), big(&[0, 0, 0, 0]));
    }
}

//! Transfer systems: oracle equivalence, method agreement, determinism.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;
use stern_gf::arith::{fit_recurrence, RationalGF, ZPoly};
use stern_gf::closure::{
    build_system, guess_gf, solve_gf, stream_terms, SolveMethod, AUTO_ELIMINATE_MAX_DIM, DEFAULT_LIMIT, FIT_GUARD,
};
use stern_gf::stern::{u_alpha_oracle_terms, OracleLimits};

#[test]
fn series_stream_and_oracle_agree() {
    for (name, spec, alpha) in closed_corpus() {
        let sys = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        let gf = solve_gf(&sys, SolveMethod::Auto).unwrap().gf;
        let stream = stream_terms(&sys, 8);
        let oracle = u_alpha_oracle_terms(&spec, &alpha, 8, OracleLimits::default()).unwrap();
        let series: Vec<BigRational> = gf.series(9);
        let as_q: Vec<BigRational> = oracle.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        assert_eq!(series, as_q, "{name}: series");
        assert_eq!(stream, oracle, "{name}: stream");
    }
}

#[test]
fn eliminate_and_fit_agree() {
    let mut compared = 0;
    for (name, spec, alpha) in closed_corpus() {
        let sys = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        if sys.dim() > AUTO_ELIMINATE_MAX_DIM {
            continue;
        }
        compared += 1;
        let e = solve_gf(&sys, SolveMethod::Eliminate).unwrap();
        let f = solve_gf(&sys, SolveMethod::Fit).unwrap();
        assert_eq!(e.gf, f.gf, "{name}");
        assert!(e.gf.den_degree() <= sys.dim(), "{name}: degree bound");
    }
    assert!(compared >= 10);
}

#[test]
fn fit_reproduces_guard_window() {
    for (name, spec, alpha) in closed_corpus() {
        let sys = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        let gf = solve_gf(&sys, SolveMethod::Fit).unwrap().gf;
        let n = 2 * sys.dim() + FIT_GUARD;
        let want: Vec<BigRational> = stream_terms(&sys, n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        assert_eq!(gf.series(n + 1), want, "{name}");
    }
}

#[test]
fn build_is_deterministic() {
    for (name, spec, alpha) in closed_corpus() {
        let a = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        let b = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        assert_eq!(a.states(), b.states(), "{name}");
        assert_eq!(a.rows(), b.rows(), "{name}");
        assert_eq!(a.v(), b.v(), "{name}");
    }
}

#[test]
fn guess_agrees_with_closure() {
    for (name, spec, alpha) in closed_corpus() {
        let sys = build_system(&spec, &alpha, DEFAULT_LIMIT).unwrap();
        let gf = solve_gf(&sys, SolveMethod::Auto).unwrap().gf;
        let d = gf.den_degree().max(gf.num().len());
        if 2 * d + 4 > 24 {
            continue;
        }
        let guessed = guess_gf(&spec, &alpha, 2 * d + 4, d, OracleLimits::default()).unwrap();
        assert_eq!(guessed, gf, "{name}");
    }
}

fn small_gf() -> impl Strategy<Value = RationalGF> {
    (
        prop::collection::vec(-9i64..10, 0..5),
        prop::collection::vec(-9i64..10, 0..5),
    )
        .prop_filter_map("not a power series", |(num, mut den)| {
            den.insert(0, 1);
            RationalGF::new(ZPoly::from_i64s(&num), ZPoly::from_i64s(&den)).ok()
        })
}

proptest! {
    #[test]
    fn fit_round_trip(gf in small_gf(), guard in 1usize..5) {
        let l = gf.den_degree().max(gf.num().len());
        let terms: Vec<BigInt> = gf.integer_series(2 * l + 1 + guard);
        prop_assert_eq!(fit_recurrence(&terms, l, guard).unwrap(), gf);
    }
}

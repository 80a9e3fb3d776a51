//! Guessing a generating function from brute-force terms, then confirming it
//! with the transfer system.

use stern_gf::stern::OracleLimits;
use stern_gf::{build_system, guess_gf, solve_gf, ProductSpec, SolveMethod, TargetAlpha, ZPoly};

fn main() {
    let spec = ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1, 1], 2).expect("valid spec");
    // sum_k a(n,k)^10
    let alpha = TargetAlpha::new(vec![10]).expect("valid alpha");

    let guessed = guess_gf(&spec, &alpha, 15, 6, OracleLimits::default()).expect("enough terms");
    println!("guessed from u(0..15): {}", guessed.pretty());

    let sys = build_system(&spec, &alpha, 5000).expect("closes");
    let proved = solve_gf(&sys, SolveMethod::Auto).expect("solves").gf;
    println!("from {} states:      {}", sys.dim(), proved.pretty());
    println!("agree: {}", guessed == proved);
}

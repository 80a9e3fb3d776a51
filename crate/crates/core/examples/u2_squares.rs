//! Sum of squares of the classical Stern array rows, by closing the state
//! space and eliminating.

use stern_gf::{build_system, solve_gf, stream_terms, ProductSpec, SolveMethod, TargetAlpha, ZPoly};

fn main() {
    // F_n(x) = prod_{i<n} (1 + x^{2^i} + x^{2^{i+1}})
    let spec = ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1, 1], 2).expect("valid spec");
    let alpha = TargetAlpha::new(vec![2]).expect("valid alpha");

    let sys = build_system(&spec, &alpha, 5000).expect("closes");
    println!("{} states:", sys.dim());
    for (i, s) in sys.states().iter().enumerate() {
        println!("  {i}: {s:?}");
    }
    let solved = solve_gf(&sys, SolveMethod::Eliminate).expect("solves");
    println!("generating function: {}", solved.gf.pretty());

    let terms: Vec<String> = stream_terms(&sys, 8).iter().map(ToString::to_string).collect();
    println!("u(0..8) = {}", terms.join(", "));
}

//! Fibonacci exponents: sum_k a(n,k)^r for F_n(x) = prod (1 + x^{F_{i+1}} + x^{F_{i+2}}).

use std::time::Instant;

use stern_gf::stern::FactorTerm;
use stern_gf::{build_system, solve_gf, CFiniteSeq, ProductSpec, SolveMethod, TargetAlpha, ZPoly};

fn main() {
    let max_r: u32 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("r is a number"));
    let seq = CFiniteSeq::new(vec![1, 2], vec![1, 1]).expect("valid sequence");
    let terms = vec![
        FactorTerm::new(1, vec![0, 0]),
        FactorTerm::new(1, vec![1, 0]),
        FactorTerm::new(1, vec![0, 1]),
    ];
    let spec = ProductSpec::new(ZPoly::from_i64s(&[1]), seq, terms).expect("valid spec");
    for r in 1..=max_r {
        let t = Instant::now();
        let alpha = TargetAlpha::new(vec![r]).expect("valid alpha");
        let sys = build_system(&spec, &alpha, 100_000).expect("closes");
        let gf = solve_gf(&sys, SolveMethod::Auto).expect("solves").gf;
        println!(
            "r = {r}: {} states, denominator degree {} ({:.2?})",
            sys.dim(),
            gf.den_degree(),
            t.elapsed()
        );
        if r <= 2 {
            println!("  {}", gf.pretty());
        }
    }
}

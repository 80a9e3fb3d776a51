//! The exponent sequence 2^i + 1 is not PV and the closure keeps growing;
//! the state limit turns that into a report.

use stern_gf::cfinite::pv_classify;
use stern_gf::closure::BuildError;
use stern_gf::stern::FactorTerm;
use stern_gf::{build_system, CFiniteSeq, ProductSpec, TargetAlpha, ZPoly};

fn main() {
    // f(i) = 2^i + 1: f(0) = 2, f(1) = 3, f(n+2) = 3 f(n+1) - 2 f(n)
    let seq = CFiniteSeq::new(vec![2, 3], vec![3, -2]).expect("valid sequence");
    println!("pv: {:?}", pv_classify(&seq).verdict);

    let terms = vec![
        FactorTerm::new(1, vec![0, 0]),
        FactorTerm::new(1, vec![1, 0]),
        FactorTerm::new(1, vec![0, 1]),
    ];
    let spec = ProductSpec::new(ZPoly::from_i64s(&[1]), seq, terms).expect("valid spec");
    let alpha = TargetAlpha::new(vec![2]).expect("valid alpha");

    for limit in [100, 1000, 10000] {
        match build_system(&spec, &alpha, limit) {
            Ok(sys) => println!("limit {limit}: closed with {} states", sys.dim()),
            Err(BuildError::LimitExceeded(report)) => {
                println!(
                    "limit {limit}: exceeded, {} states, {} dead discarded",
                    report.state_count, report.dead_discarded_count
                );
                if let Some(s) = report.frontier_sample.first() {
                    println!("  a frontier state: {s:?}");
                }
            }
            Err(e) => println!("limit {limit}: {e}"),
        }
    }
}

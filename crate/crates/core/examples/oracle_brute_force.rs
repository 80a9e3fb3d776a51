//! Direct expansion of F_n(x) and the correlation sums it defines.

use stern_gf::stern::{u_alpha_oracle_terms, ArrayRows, OracleLimits};
use stern_gf::SpecFile;

fn main() {
    let file = SpecFile::parse(
        r#"{"P": [1], "seq": {"init": [1, 2], "rec": [1, 1]},
            "factor": [{"c": 1, "e": [0, 0]}, {"c": 1, "e": [1, 0]}, {"c": 1, "e": [0, 1]}],
            "alpha": [1, 1]}"#,
    )
    .expect("valid spec file");
    let (spec, alpha) = (file.spec().expect("valid spec"), file.alpha().expect("alpha given"));

    let mut rows = ArrayRows::new(&spec, OracleLimits::default());
    for _ in 0..4 {
        println!("a({}, .) = {:?}", rows.level(), rows.to_vec());
        rows.advance().expect("small");
    }
    let terms = u_alpha_oracle_terms(&spec, &alpha, 12, OracleLimits::default()).expect("small");
    let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
    println!("sum_k a(n,k) a(n,k+1), n = 0..12: {}", shown.join(", "));
}

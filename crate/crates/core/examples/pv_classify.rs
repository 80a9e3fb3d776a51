//! PV classification of a few C-finite exponent sequences.

use stern_gf::cfinite::pv_classify;
use stern_gf::CFiniteSeq;

fn main() {
    let cases = [
        ("powers of 2", vec![1], vec![2]),
        ("Fibonacci", vec![0, 1], vec![1, 1]),
        ("Tribonacci", vec![0, 1, 1], vec![1, 1, 1]),
        ("Quadonacci", vec![0, 1, 1, 1], vec![1, 1, 1, 1]),
        ("2^i + 1", vec![2, 3], vec![3, -2]),
        ("Pell", vec![0, 1], vec![2, 1]),
        ("periodic", vec![1, 0], vec![0, 1]),
    ];
    for (name, init, rec) in cases {
        let seq = CFiniteSeq::new(init, rec).expect("valid sequence");
        let report = pv_classify(&seq);
        let largest = report.roots.first().map_or(0.0, |z| z.norm());
        println!(
            "{name:12} indicial {:?}, |largest root| {largest:.6}: {:?}",
            report.indicial, report.verdict
        );
    }
}

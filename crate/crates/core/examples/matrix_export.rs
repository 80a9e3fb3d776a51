//! Exporting the transfer system of a larger case and using it to stream
//! terms without solving.

use stern_gf::{build_system, stream_terms, SpecFile};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/tribonacci_u2.json").to_string());
    let file = SpecFile::read(path.as_ref()).expect("readable spec file");
    let (spec, alpha) = (file.spec().expect("valid spec"), file.alpha().expect("alpha given"));

    let sys = build_system(&spec, &alpha, 100_000).expect("closes");
    println!(
        "dim {}, {} nonzero entries, root {}",
        sys.dim(),
        sys.nonzeros(),
        sys.root()
    );
    for (i, row) in sys.rows().iter().enumerate().take(3) {
        println!("  row {i}: {row:?}");
    }
    let terms = stream_terms(&sys, 30);
    println!("u(30) = {}", terms[30]);
}

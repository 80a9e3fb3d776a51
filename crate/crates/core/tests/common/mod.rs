#![allow(dead_code)]

use std::path::PathBuf;

use stern_gf::arith::ZPoly;
use stern_gf::cfinite::CFiniteSeq;
use stern_gf::stern::{FactorTerm, ProductSpec, TargetAlpha};
use stern_gf::SpecFile;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture(name: &str) -> (ProductSpec, TargetAlpha) {
    let f = SpecFile::read(&fixture_path(name)).unwrap();
    (f.spec().unwrap(), f.alpha().unwrap())
}

pub fn alpha(a: &[u32]) -> TargetAlpha {
    TargetAlpha::new(a.to_vec()).unwrap()
}

pub fn base() -> ProductSpec {
    ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1, 1], 2).unwrap()
}

pub fn fibonacci() -> ProductSpec {
    two_term(vec![1, 2], vec![1, 1])
}

pub fn challenge() -> ProductSpec {
    two_term(vec![2, 3], vec![3, -2])
}

fn two_term(init: Vec<i64>, rec: Vec<i64>) -> ProductSpec {
    ProductSpec::new(
        ZPoly::from_i64s(&[1]),
        CFiniteSeq::new(init, rec).unwrap(),
        vec![
            FactorTerm::new(1, vec![0, 0]),
            FactorTerm::new(1, vec![1, 0]),
            FactorTerm::new(1, vec![0, 1]),
        ],
    )
    .unwrap()
}

/// Specs and targets whose closure is small enough for brute-force checks.
pub fn closed_corpus() -> Vec<(&'static str, ProductSpec, TargetAlpha)> {
    let tribonacci = ProductSpec::new(
        ZPoly::from_i64s(&[1]),
        CFiniteSeq::new(vec![1, 2, 4], vec![1, 1, 1]).unwrap(),
        vec![
            FactorTerm::new(1, vec![0, 0, 0]),
            FactorTerm::new(1, vec![1, 0, 0]),
            FactorTerm::new(1, vec![0, 1, 0]),
            FactorTerm::new(1, vec![0, 0, 1]),
        ],
    )
    .unwrap();
    vec![
        ("base [1]", base(), alpha(&[1])),
        ("base [2]", base(), alpha(&[2])),
        ("base [3]", base(), alpha(&[3])),
        ("base [1,1]", base(), alpha(&[1, 1])),
        ("base [1,0,1]", base(), alpha(&[1, 0, 1])),
        ("base [2,1]", base(), alpha(&[2, 1])),
        (
            "P=1+2x+x^3, Q=1+X+X^2 [2]",
            ProductSpec::b_power(ZPoly::from_i64s(&[1, 2, 0, 1]), &[1, 1, 1], 2).unwrap(),
            alpha(&[2]),
        ),
        (
            "Q=2-X+3X^2, b=3 [2]",
            ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[2, -1, 3], 3).unwrap(),
            alpha(&[2]),
        ),
        (
            "Q=1+X, b=2 [1,1]",
            ProductSpec::b_power(ZPoly::from_i64s(&[1]), &[1, 1], 2).unwrap(),
            alpha(&[1, 1]),
        ),
        ("fibonacci [2]", fibonacci(), alpha(&[2])),
        ("fibonacci [1,1]", fibonacci(), alpha(&[1, 1])),
        ("fibonacci [3]", fibonacci(), alpha(&[3])),
        ("tribonacci [2]", tribonacci, alpha(&[2])),
    ]
}

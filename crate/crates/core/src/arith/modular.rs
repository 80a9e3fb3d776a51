//! Word-sized prime field helpers: 62-bit primes, Berlekamp-Massey over
//! `F_p` and Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn reduce_mod(c: &BigInt, p: u64) -> u64 {
    let m = c.mod_floor(&BigInt::from(p));
    m.try_into().expect("residue fits in u64")
}

/// Deterministic Miller-Rabin; these bases are exact for all `n < 2^64`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

/// Connection polynomial (with `C_0 = 1`) and linear complexity over `F_p`.
pub(crate) fn berlekamp_massey_mod(s: &[u64], p: u64) -> (Vec<u64>, usize) {
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = 1u64;
    for n in 0..s.len() {
        let mut d = 0u64;
        for i in 0..=l.min(c.len() - 1) {
            d = (d + mulmod(c[i], s[n - i], p)) % p;
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = mulmod(d, powmod(bd, p - 2, p), p);
        let old = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, 0);
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] = (c[i + m] + p - mulmod(coef, *bi, p)) % p;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = old;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.truncate(l + 1);
    c.resize(l + 1, 0);
    (c, l)
}

/// Incremental Chinese remaindering of a vector of residues, lifted to the
/// symmetric range.
pub(crate) struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    pub(crate) fn new(len: usize) -> Self {
        Crt {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub(crate) fn add(&mut self, residues: &[u64], p: u64) {
        let pb = BigInt::from(p);
        let inv = powmod(reduce_mod(&self.modulus, p), p - 2, p);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let diff = (r + p - reduce_mod(x, p)) % p;
            let k = mulmod(diff, inv, p);
            *x += &self.modulus * k;
        }
        self.modulus *= pb;
        let half = &self.modulus >> 1;
        for x in self.values.iter_mut() {
            if *x > half {
                *x -= &self.modulus;
            } else if *x < -&half {
                *x += &self.modulus;
            }
        }
    }

    pub(crate) fn values(&self) -> &[BigInt] {
        &self.values
    }
}

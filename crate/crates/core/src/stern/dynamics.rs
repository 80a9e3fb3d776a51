//! The evolution equation and the dead-state test.
//!
//! With `a(n, k) = sum_j c_j a(n-1, k - <e_j, x_{n-1}>)` every factor
//! `a(n, k + d - <beta, x_n>)` of a state expands into
//! `sum_j c_j a(n-1, k + d - <beta' + e_j, x_{n-1}>)` where `beta'` is `beta`
//! translated one level down. Expanding the product over factors gives the
//! state's value at level `n` as an integer combination of states at `n-1`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::spec::is_nonneg;
use super::{ProductSpec, State, SternError};
use crate::cfinite::{dot, nonneg_from};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Liveness {
    Dead,
    Alive,
}

/// `f_S(n) = sum coeff * f_{S'}(n - 1)` over the listed targets, for `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionRow {
    pub terms: Vec<(BigInt, State)>,
}

/// Decides whether `f_S(n) = 0` for every `n >= 0`.
///
/// The supports of the factors sit inside `[0, U(n)]` shifted by
/// `<beta_i, x_n> - d_i`; if the spread of those shifts exceeds `U(n)` no `k`
/// makes every factor nonzero. This is checked exactly for `n <= horizon`.
/// Past the horizon one factor pair must carry a certificate that its gap
/// stays above the (dominating) support bound forever. Without a certificate
/// the state is reported alive.
pub fn is_dead(spec: &ProductSpec, s: &State) -> Liveness {
    DeadnessCache::new().classify(spec, s)
}

/// Memoized dead-state verdicts for one spec. Verdicts are pure functions of
/// the state, so concurrent inserts of the same key are idempotent.
#[derive(Debug, Default)]
pub struct DeadnessCache {
    verdicts: RwLock<HashMap<State, Liveness>>,
    tail_certs: RwLock<HashMap<Vec<i64>, bool>>,
}

impl DeadnessCache {
    pub fn new() -> Self {
        DeadnessCache::default()
    }

    pub fn classify(&self, spec: &ProductSpec, s: &State) -> Liveness {
        if let Some(v) = self.verdicts.read().unwrap().get(s) {
            return *v;
        }
        let v = self.compute(spec, s);
        self.verdicts.write().unwrap().insert(s.clone(), v);
        v
    }

    /// Number of memoized dead states.
    pub fn dead_count(&self) -> usize {
        self.verdicts
            .read()
            .unwrap()
            .values()
            .filter(|v| **v == Liveness::Dead)
            .count()
    }

    fn compute(&self, spec: &ProductSpec, s: &State) -> Liveness {
        let b = spec.bounds();
        for n in 0..=spec.horizon() {
            if !dead_at_level(spec, s, n) {
                return Liveness::Alive;
            }
        }
        let (Some(e_star), Some(tail_u)) = (&b.tail_exponent, &b.tail_support_at_horizon) else {
            return Liveness::Alive;
        };
        let h = spec.horizon();
        let xh = &b.windows[h];
        let shifts: Vec<BigInt> = s.factors().map(|(d, beta)| dot(beta, xh) - d).collect();
        let betas: Vec<(i64, &[i64])> = s.factors().collect();

        let mut pairs: Vec<(usize, usize, BigInt)> = Vec::new();
        for i in 0..shifts.len() {
            for k in 0..shifts.len() {
                if i == k {
                    continue;
                }
                let gap = &shifts[i] - &shifts[k] - tail_u;
                if gap.is_positive() {
                    pairs.push((i, k, gap));
                }
            }
        }
        pairs.sort_by(|a, b| b.2.cmp(&a.2));
        for (i, k, _) in pairs {
            let gamma: Vec<i64> = betas[i].1.iter().zip(betas[k].1).map(|(x, y)| x - y).collect();
            if self.gap_nondecreasing(spec, &gamma, &e_star.0) {
                return Liveness::Dead;
            }
        }
        Liveness::Alive
    }

    /// Certifies `<gamma, x_{n+1}> - <gamma, x_n> - <e*, x_n> >= 0` for all
    /// `n >= horizon`.
    fn gap_nondecreasing(&self, spec: &ProductSpec, gamma: &[i64], e_star: &[i64]) -> bool {
        let seq = spec.seq();
        let Ok(up) = seq.shift_level(&crate::cfinite::LinForm(gamma.to_vec())) else {
            return false;
        };
        let delta: Vec<i64> =
            up.0.iter()
                .zip(gamma)
                .zip(e_star)
                .map(|((u, g), e)| u - g - e)
                .collect();
        if let Some(v) = self.tail_certs.read().unwrap().get(&delta) {
            return *v;
        }
        let b = spec.bounds();
        let values: Vec<BigInt> = b.windows[spec.horizon()..].iter().map(|w| dot(&delta, w)).collect();
        let ok = nonneg_from(&values, &seq.indicial_poly());
        self.tail_certs.write().unwrap().insert(delta, ok);
        ok
    }
}

fn dead_at_level(spec: &ProductSpec, s: &State, n: usize) -> bool {
    let b = spec.bounds();
    if let (Some(x), Some(u)) = (&b.small_windows[n], b.small_support[n]) {
        if let Some(dead) = dead_at_level_small(s, x, u) {
            return dead;
        }
    }
    let x = &b.windows[n];
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for (d, beta) in s.factors() {
        let v = dot(beta, x) - d;
        if lo.as_ref().is_none_or(|l| v < *l) {
            lo = Some(v.clone());
        }
        if hi.as_ref().is_none_or(|h| v > *h) {
            hi = Some(v);
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => hi - lo > b.support[n],
        _ => false,
    }
}

fn dead_at_level_small(s: &State, x: &[i128], u: i128) -> Option<bool> {
    let mut lo = i128::MAX;
    let mut hi = i128::MIN;
    for (d, beta) in s.factors() {
        let mut v: i128 = -(d as i128);
        for (&bj, &xj) in beta.iter().zip(x) {
            if bj != 0 {
                v = v.checked_add((bj as i128).checked_mul(xj)?)?;
            }
        }
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Some(hi.checked_sub(lo)? > u)
}

/// Expands the evolution equation of an alive canonical state, dropping
/// dead targets.
pub fn evolve(spec: &ProductSpec, s: &State, cache: &DeadnessCache) -> Result<EvolutionRow, SternError> {
    let mut row = evolve_unpruned(spec, s)?;
    row.terms.retain(|(_, t)| cache.classify(spec, t) == Liveness::Alive);
    Ok(row)
}

/// The evolution equation with every nonzero target, dead or not.
pub fn evolve_unpruned(spec: &ProductSpec, s: &State) -> Result<EvolutionRow, SternError> {
    let seq = spec.seq();
    let l = spec.order();
    let w = l + 1;
    let mut shifted: Vec<i64> = Vec::with_capacity(s.flat().len());
    for (d, beta) in s.factors() {
        let down = seq
            .shift_level(&crate::cfinite::LinForm(beta.to_vec()))
            .map_err(|_| SternError::Overflow)?;
        shifted.extend_from_slice(&down.0);
        shifted.push(d);
    }

    let terms = spec.terms();
    let r = s.arity();
    let mut acc: HashMap<State, i128> = HashMap::new();
    let mut overflow = false;
    let mut buf = shifted.clone();
    let mut choice = vec![0usize; r];
    'outer: loop {
        let mut coeff: i128 = 1;
        for (i, &j) in choice.iter().enumerate() {
            let t = &terms[j];
            coeff = match coeff.checked_mul(t.c as i128) {
                Some(c) => c,
                None => {
                    overflow = true;
                    break 'outer;
                }
            };
            for k in 0..l {
                buf[i * w + k] = match shifted[i * w + k].checked_add(t.e.0[k]) {
                    Some(v) => v,
                    None => return Err(SternError::Overflow),
                };
            }
        }
        let target = State::from_flat(l, buf.clone());
        let slot = acc.entry(target).or_insert(0);
        match slot.checked_add(coeff) {
            Some(v) => *slot = v,
            None => {
                overflow = true;
                break 'outer;
            }
        }
        // next choice in odometer order
        let mut pos = 0;
        loop {
            if pos == r {
                break 'outer;
            }
            choice[pos] += 1;
            if choice[pos] < terms.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
    let mut merged: Vec<(BigInt, State)> = if overflow {
        evolve_big(spec, &shifted, r)?
    } else {
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(s, c)| (BigInt::from(c), s))
            .collect()
    };
    merged.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(EvolutionRow { terms: merged })
}

/// Arbitrary-precision fallback for coefficient overflow.
fn evolve_big(spec: &ProductSpec, shifted: &[i64], r: usize) -> Result<Vec<(BigInt, State)>, SternError> {
    let l = spec.order();
    let w = l + 1;
    let terms = spec.terms();
    let mut acc: HashMap<State, BigInt> = HashMap::new();
    let total = terms.len().pow(r as u32);
    let mut buf = shifted.to_vec();
    for mut idx in 0..total {
        let mut coeff = BigInt::from(1);
        for i in 0..r {
            let t = &terms[idx % terms.len()];
            idx /= terms.len();
            coeff *= t.c;
            for k in 0..l {
                buf[i * w + k] = shifted[i * w + k].checked_add(t.e.0[k]).ok_or(SternError::Overflow)?;
            }
        }
        *acc.entry(State::from_flat(l, buf.clone())).or_insert_with(BigInt::zero) += coeff;
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(s, c)| (c, s))
        .collect())
}

/// `f_S(0) = sum_{k in Z} prod_i p(k + d_i - <beta_i, x_0>)` with `p` the
/// coefficients of `P`.
pub fn initial_value(spec: &ProductSpec, s: &State) -> BigInt {
    let x0 = &spec.bounds().windows[0];
    let p = spec.p().coeffs();
    let deg = p.len() as i64 - 1;
    let shifts: Vec<BigInt> = s.factors().map(|(d, beta)| dot(beta, x0) - d).collect();
    let lo = shifts.iter().max().cloned().unwrap_or_default();
    let hi = shifts.iter().min().cloned().unwrap_or_default() + deg;
    let mut total = BigInt::zero();
    let mut k = lo;
    while k <= hi {
        let mut prod = BigInt::from(1);
        for sh in &shifts {
            let idx = &k - sh;
            debug_assert!(is_nonneg(&idx));
            let i: usize = (&idx).try_into().expect("index within P");
            prod *= &p[i];
            if prod.is_zero() {
                break;
            }
        }
        total += prod;
        k += 1;
    }
    total
}

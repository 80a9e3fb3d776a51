use std::fmt;

use crate::cfinite::LinForm;

use super::TargetAlpha;

/// A shifted correlation sum
/// `f_S(n) = sum_{k in Z} prod_i a(n, k + d_i - <beta_i, (f(n), ..., f(n+L-1))>)`.
///
/// Stored flat, one chunk of `L + 1` integers per factor laid out as
/// `[beta_0, ..., beta_{L-1}, d]`, so lexicographic chunk order is the
/// canonical factor order (by `beta`, then `d`). A canonical state has sorted
/// chunks and componentwise minimum `beta` equal to zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    order: u16,
    data: Box<[i64]>,
}

impl State {
    /// Canonical form of an arbitrary list of `(d, beta)` factors.
    pub fn canonicalize(raw: &[(i64, LinForm)]) -> State {
        let order = raw.first().map_or(0, |(_, b)| b.len());
        let mut data = Vec::with_capacity(raw.len() * (order + 1));
        for (d, beta) in raw {
            assert_eq!(beta.len(), order, "all factors need the same form length");
            data.extend_from_slice(&beta.0);
            data.push(*d);
        }
        State::from_flat(order, data)
    }

    /// Canonicalizes a flat buffer in the chunk layout described above.
    pub(crate) fn from_flat(order: usize, mut data: Vec<i64>) -> State {
        canonicalize_in_place(order, &mut data);
        State {
            order: order as u16,
            data: data.into_boxed_slice(),
        }
    }

    /// `alpha_i` factors with offset `i` and zero forms each.
    pub fn root(alpha: &TargetAlpha, order: usize) -> State {
        let raw: Vec<(i64, LinForm)> = alpha.offsets().into_iter().map(|d| (d, LinForm::zero(order))).collect();
        State::canonicalize(&raw)
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of factors `r`.
    pub fn arity(&self) -> usize {
        self.data.len() / (self.order() + 1)
    }

    pub(crate) fn flat(&self) -> &[i64] {
        &self.data
    }

    /// `(d_i, beta_i)` in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (i64, &[i64])> + '_ {
        let w = self.order() + 1;
        self.data.chunks_exact(w).map(move |c| (c[w - 1], &c[..w - 1]))
    }

    pub fn to_pairs(&self) -> Vec<(i64, LinForm)> {
        self.factors().map(|(d, b)| (d, LinForm(b.to_vec()))).collect()
    }
}

fn canonicalize_in_place(order: usize, data: &mut [i64]) {
    let w = order + 1;
    if data.is_empty() {
        return;
    }
    for k in 0..order {
        let min = data.iter().skip(k).step_by(w).copied().min().unwrap();
        if min != 0 {
            for x in data.iter_mut().skip(k).step_by(w) {
                *x -= min;
            }
        }
    }
    let r = data.len() / w;
    if r <= 1 {
        return;
    }
    // Insertion sort over chunks; arity is small.
    for i in 1..r {
        let mut j = i;
        while j > 0 && data[(j - 1) * w..j * w] > data[j * w..(j + 1) * w] {
            for k in 0..w {
                data.swap((j - 1) * w + k, j * w + k);
            }
            j -= 1;
        }
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, b)) in self.factors().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({d}, {b:?})")?;
        }
        f.write_str("}")
    }
}

//! Dominating sets, domination numbers and domination polynomials.
//!
//! Everything here is exact. Subset sweeps split the vertex set into a low
//! and a high half and precompute the union of closed neighborhoods for every
//! subset of each half, so testing one of the `2^n` subsets is a single OR.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, BitIter, Graph, VertexSet};

/// Largest order for full `2^n` subset sweeps.
pub const MAX_EXHAUSTIVE: usize = 24;

/// Default cap on the number of dominating sets materialized at once.
pub const DEFAULT_MAX_SETS: usize = 1 << 20;

/// Sweeps below this order stay on the calling thread.
const PARALLEL_SWEEP_ORDER: usize = 18;

fn check_exhaustive(g: &Graph) -> Result<()> {
    if g.n() > MAX_EXHAUSTIVE {
        Err(Error::TooLargeForExhaustive {
            n: g.n(),
            max: MAX_EXHAUSTIVE,
        })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn cover(closed: &[u64], set: u64) -> u64 {
    BitIter(set).fold(0, |acc, v| acc | closed[v])
}

/// Union of closed neighborhoods for every subset of `closed`.
fn cover_table(closed: &[u64]) -> Vec<u64> {
    let mut table = vec![0u64; 1 << closed.len()];
    for s in 1..table.len() {
        table[s] = table[s & (s - 1)] | closed[s.trailing_zeros() as usize];
    }
    table
}

/// Calls `f` on every `size`-subset of `0..n` in increasing mask order.
pub(crate) fn for_each_subset_of_size<B>(
    n: usize,
    size: usize,
    mut f: impl FnMut(u64) -> ControlFlow<B>,
) -> Option<B> {
    if size > n {
        return None;
    }
    if size == 0 {
        return f(0).break_value();
    }
    let limit = 1u128 << n;
    let mut x: u128 = (1u128 << size) - 1;
    while x < limit {
        if let ControlFlow::Break(b) = f(x as u64) {
            return Some(b);
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    None
}

/// True iff the closed neighborhoods of `s` cover every vertex.
pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(cover(&g.closed_masks(), s.bits()) == g.vertex_mask())
}

/// True iff `s` dominates and no `s ∖ {v}` does.
pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    let closed = g.closed_masks();
    Ok(minimal_dominating(&closed, g.vertex_mask(), s.bits()))
}

fn minimal_dominating(closed: &[u64], full: u64, s: u64) -> bool {
    cover(closed, s) == full && BitIter(s).all(|v| cover(closed, s & !(1 << v)) != full)
}

/// γ(G) by increasing-size search.
pub fn domination_number(g: &Graph) -> usize {
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    (1..=g.n())
        .find(|&size| {
            for_each_subset_of_size(g.n(), size, |s| {
                if cover(&closed, s) == full {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .is_some()
        })
        .unwrap_or(g.n())
}

/// Every dominating set of minimum cardinality, in canonical order.
pub fn gamma_sets(g: &Graph) -> Vec<VertexSet> {
    let gamma = domination_number(g);
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    let mut out = Vec::new();
    for_each_subset_of_size::<()>(g.n(), gamma, |s| {
        if cover(&closed, s) == full {
            out.push(VertexSet::from_bits(s));
        }
        ControlFlow::Continue(())
    });
    out
}

/// Γ(G): the largest minimal dominating set.
pub fn upper_domination_number(g: &Graph) -> Result<usize> {
    check_exhaustive(g)?;
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    let found = (1..=g.n()).rev().find(|&size| {
        for_each_subset_of_size(g.n(), size, |s| {
            if minimal_dominating(&closed, full, s) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_some()
    });
    Ok(found.unwrap_or(0))
}

/// All dominating sets of cardinality at most `k`, in canonical order
/// (cardinality, then mask), under the default output cap.
pub fn enumerate_dominating_sets(g: &Graph, k: usize) -> Result<Vec<VertexSet>> {
    enumerate_dominating_sets_capped(g, k, DEFAULT_MAX_SETS)
}

/// As [`enumerate_dominating_sets`] with an explicit cap. `k` is clamped to `|G|`.
pub fn enumerate_dominating_sets_capped(
    g: &Graph,
    k: usize,
    max_sets: usize,
) -> Result<Vec<VertexSet>> {
    check_exhaustive(g)?;
    let n = g.n();
    let closed = g.closed_masks();
    let full = g.vertex_mask();
    let mut out = Vec::new();
    for size in 0..=k.min(n) {
        let overflow = for_each_subset_of_size(n, size, |s| {
            if cover(&closed, s) == full {
                if out.len() == max_sets {
                    return ControlFlow::Break(());
                }
                out.push(VertexSet::from_bits(s));
            }
            ControlFlow::Continue(())
        });
        if overflow.is_some() {
            return Err(Error::OutputCapExceeded { cap: max_sets });
        }
    }
    Ok(out)
}

/// `d(G, i)` for `i = 0..=n` as machine integers.
pub fn dominating_set_counts(g: &Graph) -> Result<Vec<u64>> {
    check_exhaustive(g)?;
    let n = g.n();
    let closed = g.closed_masks();
    let full = full_mask(n);
    let lo_bits = n / 2;
    let low = cover_table(&closed[..lo_bits]);
    let high = cover_table(&closed[lo_bits..]);
    let low_pop: Vec<usize> = (0..low.len()).map(|s| s.count_ones() as usize).collect();

    let count_block = |hi: usize| {
        let mut counts = vec![0u64; n + 1];
        let ch = high[hi];
        let base = hi.count_ones() as usize;
        for (lo, &cl) in low.iter().enumerate() {
            if cl | ch == full {
                counts[base + low_pop[lo]] += 1;
            }
        }
        counts
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let counts = if n >= PARALLEL_SWEEP_ORDER {
        (0..high.len())
            .into_par_iter()
            .map(count_block)
            .reduce(|| vec![0u64; n + 1], add)
    } else {
        (0..high.len())
            .map(count_block)
            .fold(vec![0u64; n + 1], add)
    };
    Ok(counts)
}

/// The domination polynomial `D(G, x) = Σ d(G, i) x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationPolynomial {
    n: usize,
    coeffs: Vec<BigUint>,
}

impl DominationPolynomial {
    /// Wraps a coefficient vector of length `n + 1`.
    pub fn from_coefficients(coeffs: Vec<BigUint>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(DominationPolynomial {
            n: coeffs.len() - 1,
            coeffs,
        })
    }

    /// Order of the source graph.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `D(G, 1)`, the number of dominating sets.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Number of dominating sets of cardinality at most `k`, i.e. `|D_k(G)|`.
    pub fn count_up_to(&self, k: usize) -> BigUint {
        self.coeffs.iter().take(k.saturating_add(1)).sum()
    }

    /// Smallest `i` with `d(G, i) > 0`.
    pub fn min_degree_term(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| *c != BigUint::ZERO)
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|e| Error::InvalidArgument(format!("coefficient `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != json.n + 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                json.n + 1,
                coeffs.len()
            )));
        }
        Self::from_coefficients(coeffs)
    }
}

/// Wire form: decimal strings so large coefficients survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl fmt::Display for DominationPolynomial {
    /// Descending powers, unit coefficients elided: `x^3+3x^2+3x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = BigUint::from(1u32);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == BigUint::ZERO {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coeff = if *c == one && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn domination_polynomial(g: &Graph) -> Result<DominationPolynomial> {
    let counts = dominating_set_counts(g)?;
    DominationPolynomial::from_coefficients(counts.into_iter().map(BigUint::from).collect())
}

/// `D(G, 1) = |D_{|G|}(G)|`.
pub fn count_dominating_sets(g: &Graph) -> Result<BigUint> {
    Ok(dominating_set_counts(g)?
        .into_iter()
        .map(BigUint::from)
        .sum())
}

/// `|D_n(C_n)|` from the three-term recurrence seeded 1, 3, 7.
pub fn cycle_dominating_count(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "cycle order must be at least 1".into(),
        ));
    }
    let mut window = [
        BigUint::from(1u32),
        BigUint::from(3u32),
        BigUint::from(7u32),
    ];
    if n <= 3 {
        return Ok(window[n - 1].clone());
    }
    for _ in 4..=n {
        let next = &window[0] + &window[1] + &window[2];
        window.rotate_left(1);
        window[2] = next;
    }
    Ok(window[2].clone())
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}

/// `|D(G + H)| = (2^|G| − 1)(2^|H| − 1) + |D(G)| + |D(H)|`.
pub fn join_order_formula(g: &Graph, h: &Graph) -> Result<BigUint> {
    let cg = count_dominating_sets(g)?;
    let ch = count_dominating_sets(h)?;
    let one = BigUint::from(1u32);
    Ok((pow2(g.n()) - &one) * (pow2(h.n()) - &one) + cg + ch)
}

/// `|D(G ∘ H)| = (2^|H| + |D(H)|)^|G|`.
pub fn corona_order_formula(g: &Graph, h: &Graph) -> Result<BigUint> {
    check_exhaustive(g)?;
    let ch = count_dominating_sets(h)?;
    let base = pow2(h.n()) + ch;
    Ok(base.pow(g.n() as u32))
}

//! Clique counts of Turán graphs, exactly.
//!
//! `turan_coeff(n, k, d)` is the number of k-cliques of the complete
//! d-partite graph with near-equal parts on n vertices, i.e. the k-th
//! elementary symmetric function of the part sizes. Everything is big-integer
//! arithmetic: these values feed canonical representations, where a silent
//! overflow would corrupt results downstream.
//!
//! Two independent algorithms are provided. The elementary-symmetric dynamic
//! program is the reference; the triangle iteration of [`turan_row_pascal`]
//! exists purely as an independent witness and must agree entry for entry.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde_json::json;

use crate::report::{CheckReport, Verdict};

/// Part sizes of the balanced d-partition of n: `n mod d` parts of size
/// `ceil(n/d)`, the rest of size `floor(n/d)`.
pub fn part_sizes(n: u64, d: u32) -> Vec<u64> {
    let d64 = d as u64;
    let q = n / d64;
    let t = n % d64;
    (0..d64).map(|i| if i < t { q + 1 } else { q }).collect()
}

/// Number of k-cliques of the Turán graph on n vertices with d parts.
/// Extended by zero whenever `k > n`, `k < 0` or `n < 0`.
pub fn turan_coeff_big(n: &BigInt, k: i64, d: u32) -> BigUint {
    assert!(d >= 1, "the number of parts must be positive");
    if k < 0 || n.sign() == Sign::Minus {
        return BigUint::zero();
    }
    if BigInt::from(k) > *n {
        return BigUint::zero();
    }
    if k == 0 {
        return BigUint::one();
    }
    let n = n.to_biguint().expect("non-negative by the checks above");
    let k = k as usize;
    let d64 = BigUint::from(d);
    let q = &n / &d64;
    let t = (&n % &d64).to_u64_digits().first().copied().unwrap_or(0) as u32;
    // Elementary symmetric DP over the d parts.
    let mut e = vec![BigUint::zero(); k + 1];
    e[0] = BigUint::one();
    let mut push_part = |p: &BigUint, copies: u32| {
        if p.is_zero() {
            return;
        }
        for _ in 0..copies {
            for j in (1..=k).rev() {
                let add = &e[j - 1] * p;
                e[j] += add;
            }
        }
    };
    let q_plus = &q + 1u32;
    push_part(&q_plus, t);
    push_part(&q, d - t);
    e.pop().unwrap()
}

/// Convenience wrapper for machine-sized arguments.
pub fn turan_coeff(n: i64, k: i64, d: u32) -> BigUint {
    turan_coeff_big(&BigInt::from(n), k, d)
}

/// `turan_coeff` for arguments known to be small and non-negative, returned
/// as u64. Panics if the value does not fit; callers use it only at desk
/// scale (face counts of explicit complexes).
pub fn turan_coeff_u64(n: i64, k: i64, d: u32) -> u64 {
    let v = turan_coeff(n, k, d);
    v.to_u64_digits().first().copied().unwrap_or(0)
}

/// The row `(binom(n,0)_d, ..., binom(n,d)_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranRow {
    pub n: u64,
    pub d: u32,
    pub values: Vec<BigUint>,
}

/// Computes a Turán row by the triangle iteration: starting from
/// `m ∈ [d]`, `m ≡ n (mod d)`, each step builds a (d+2)-row triangle whose
/// left edge is all ones, whose right edge is the previous row (with a final
/// 0), and whose interior entries are sums of the two adjacent entries above;
/// the first d+1 entries of the last row form the row for `m + d`.
pub fn turan_row_pascal(n: u64, d: u32) -> TuranRow {
    assert!(n >= 1 && d >= 1);
    let d_us = d as usize;
    let mut m = ((n - 1) % d as u64) + 1;
    // Base case m <= d: the Turán graph is complete, so the row is binomial.
    let mut row: Vec<BigUint> = (0..=d_us)
        .map(|i| binomial_big(m, i as u64))
        .collect();
    while m < n {
        // Right edge of the triangle: the known row for m, then a final 0.
        let mut right_edge = row.clone();
        right_edge.push(BigUint::zero());
        let mut prev: Vec<BigUint> = vec![BigUint::one()];
        for (r, pinned) in right_edge.iter().enumerate().skip(1) {
            let mut next = Vec::with_capacity(r + 1);
            next.push(BigUint::one());
            for j in 1..r {
                next.push(&prev[j - 1] + &prev[j]);
            }
            next.push(pinned.clone());
            prev = next;
        }
        prev.pop();
        row = prev;
        m += d as u64;
    }
    TuranRow { n, d, values: row }
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact f-vector of the clique complex of the Turán graph, as coefficient
/// values; entry `k` is the number of (k-1)-faces. `n = 0` yields the trivial
/// complex's f-vector `(1)`.
pub fn turan_fvector_big(n: u64, d: u32) -> Vec<BigUint> {
    let top = n.min(d as u64) as i64;
    (0..=top)
        .map(|k| turan_coeff_big(&BigInt::from(n), k, d))
        .collect()
}

/// Checks that the h-vector of the Turán clique complex on n vertices equals
/// the f-vector of the one on n - d vertices (padded with zeros).
pub fn check_h_equals_f(n: u64, d: u32) -> CheckReport {
    assert!(n >= d as u64, "requires n >= d");
    let f: Vec<BigInt> = turan_fvector_big(n, d)
        .into_iter()
        .map(BigInt::from)
        .collect();
    // h_i from the defining identity, in signed big integers.
    let deg = f.len() - 1;
    let mut h = vec![BigInt::zero(); deg + 1];
    for (i, fi) in f.iter().enumerate() {
        for j in 0..=(deg - i) {
            let b = BigInt::from(binomial_big((deg - i) as u64, j as u64));
            let term = fi * b;
            if j % 2 == 0 {
                h[i + j] += term;
            } else {
                h[i + j] -= term;
            }
        }
    }
    let mut small: Vec<BigInt> = turan_fvector_big(n - d as u64, d)
        .into_iter()
        .map(BigInt::from)
        .collect();
    small.resize(deg + 1, BigInt::zero());
    let ok = h == small;
    CheckReport::new("TURAN_H_EQ_F", format!("n={n} d={d}"))
        .with_verdict(if ok { Verdict::Pass } else { Verdict::Fail })
        .with_witness(json!({
            "h": h.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "f_smaller": small.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }))
}

/// Checks the row-sum identity: the full row for m sums to the top entry of
/// the row for m + d.
pub fn check_sum_identity(m: u64, d: u32) -> CheckReport {
    assert!(m >= 1 && d >= 1);
    let lhs: BigUint = (0..=d as i64)
        .map(|k| turan_coeff_big(&BigInt::from(m), k, d))
        .sum();
    let rhs = turan_coeff_big(&BigInt::from(m + d as u64), d as i64, d);
    let ok = lhs == rhs;
    CheckReport::new("TURAN_SUM", format!("m={m} d={d}"))
        .with_verdict(if ok { Verdict::Pass } else { Verdict::Fail })
        .with_witness(json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }))
}

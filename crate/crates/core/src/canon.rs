//! Canonical representations of integers over Turán coefficients, the
//! shifted quantities N±, and the shadow operators.
//!
//! Every positive integer N has, for parameters r >= k >= 1, a unique
//! expansion
//!
//! ```text
//! N = binom(N_k, k)_r + binom(N_{k-1}, k-1)_{r-1} + ... + binom(N_{k-s}, k-s)_{r-s}
//! ```
//!
//! subject to `N_{k-i} - floor(N_{k-i}/(r-i)) > N_{k-i-1}` between consecutive
//! terms and `N_{k-s} >= k-s > 0` at the end. The greedy descent below picks
//! the largest leading index whose coefficient still fits, then recurses on
//! the remainder with both parameters decreased; the side conditions are
//! re-verified on the result, and [`enumerate_reps`] provides an independent
//! brute-force enumerator against which uniqueness is tested.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Error;
use crate::turan::turan_coeff_big;
use crate::Result;

/// `binom(n, k)_r` with a big non-negative index.
fn coeff(n: &BigUint, k: u32, r: u32) -> BigUint {
    turan_coeff_big(&BigInt::from(n.clone()), k as i64, r)
}

/// `binom(n, k)_r` with a possibly negative index.
fn coeff_signed(n: &BigInt, k: i64, r: u32) -> BigUint {
    turan_coeff_big(n, k, r)
}

/// The canonical representation of a positive integer for parameters
/// `(k, r)`. Term `i` is `binom(indices[i], k-i, r-i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonRep {
    k: u32,
    r: u32,
    indices: Vec<BigUint>,
}

impl CanonRep {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Number of trailing terms beyond the first.
    pub fn s(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn indices(&self) -> &[BigUint] {
        &self.indices
    }

    /// Terms as `(index, choose, subscript)` triples.
    pub fn terms(&self) -> Vec<(BigUint, u32, u32)> {
        self.indices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), self.k - i as u32, self.r - i as u32))
            .collect()
    }

    /// The represented integer.
    pub fn eval(&self) -> BigUint {
        self.indices
            .iter()
            .enumerate()
            .map(|(i, n)| coeff(n, self.k - i as u32, self.r - i as u32))
            .sum()
    }

    /// Verifies the defining side conditions.
    pub fn validate(&self) -> Result<()> {
        if self.indices.is_empty() || self.k == 0 || self.r < self.k {
            return Err(Error::Domain("empty or ill-parameterized representation".into()));
        }
        let s = self.s();
        if s >= self.k as usize {
            return Err(Error::Domain("too many terms: requires k - s > 0".into()));
        }
        for i in 0..s {
            let ri = self.r - i as u32;
            let bound = &self.indices[i] - &self.indices[i] / BigUint::from(ri);
            if bound <= self.indices[i + 1] {
                return Err(Error::Domain(format!(
                    "index gap violated at term {i}: {} vs {}",
                    self.indices[i], self.indices[i + 1]
                )));
            }
        }
        let last = &self.indices[s];
        if *last < BigUint::from(self.k - s as u32) {
            return Err(Error::Domain("final index below its choose parameter".into()));
        }
        Ok(())
    }

    /// N+ : every index grows by its subscript.
    pub fn shift_up(&self) -> BigUint {
        self.indices
            .iter()
            .enumerate()
            .map(|(i, n)| {
                let ri = self.r - i as u32;
                coeff(&(n + BigUint::from(ri)), self.k - i as u32, ri)
            })
            .sum()
    }

    /// The representation of N+ is the index-shifted term list; validated.
    pub fn shift_up_rep(&self) -> CanonRep {
        let rep = CanonRep {
            k: self.k,
            r: self.r,
            indices: self
                .indices
                .iter()
                .enumerate()
                .map(|(i, n)| n + BigUint::from(self.r - i as u32))
                .collect(),
        };
        rep.validate()
            .expect("index-shifted representation stays canonical");
        rep
    }

    /// N- : every index shrinks by its subscript; terms whose index drops
    /// below the choose parameter vanish.
    pub fn shift_down(&self) -> BigUint {
        self.indices
            .iter()
            .enumerate()
            .map(|(i, n)| {
                let ri = self.r - i as u32;
                let shifted = BigInt::from(n.clone()) - BigInt::from(ri);
                coeff_signed(&shifted, (self.k - i as u32) as i64, ri)
            })
            .sum()
    }

    /// The truncation point of the representation of N-: the largest term
    /// position that survives the downward shift, or None when N- = 0.
    pub fn shift_down_truncation(&self) -> Option<usize> {
        let mut s0 = None;
        for (i, n) in self.indices.iter().enumerate() {
            let ri = BigInt::from(self.r - i as u32);
            let ki = BigInt::from(self.k - i as u32);
            if BigInt::from(n.clone()) - ri >= ki {
                s0 = Some(i);
            }
        }
        s0
    }

    /// Term-sequence comparison: earlier indices dominate; a strict prefix is
    /// smaller. Only meaningful for representations with equal `(k, r)`.
    pub fn cmp_by_terms(&self, other: &CanonRep) -> Ordering {
        debug_assert_eq!((self.k, self.r), (other.k, other.r));
        for (a, b) in self.indices.iter().zip(other.indices.iter()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.indices.len().cmp(&other.indices.len())
    }
}

/// Largest index m with `binom(m, k)_r <= cap`, for cap >= 1.
fn largest_index(k: u32, r: u32, cap: &BigUint) -> BigUint {
    debug_assert!(!cap.is_zero());
    if k == 1 {
        // binom(m, 1)_r = m.
        return cap.clone();
    }
    let mut lo = BigUint::from(k); // coefficient 1 here
    let mut hi = &lo + 1u32;
    while coeff(&hi, k, r) <= *cap {
        lo = hi.clone();
        hi = &hi * 2u32;
    }
    // Invariant: coeff(lo) <= cap < coeff(hi).
    while &lo + 1u32 < hi {
        let mid = (&lo + &hi) / 2u32;
        if coeff(&mid, k, r) <= *cap {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy construction of the canonical representation, with the side
/// conditions verified on the result.
pub fn canonical_rep(n: &BigUint, k: u32, r: u32) -> Result<CanonRep> {
    if n.is_zero() {
        return Err(Error::Domain("canonical representation requires N >= 1".into()));
    }
    if k == 0 || r < k {
        return Err(Error::Domain(format!(
            "canonical representation requires r >= k >= 1, got k={k} r={r}"
        )));
    }
    let mut rem = n.clone();
    let mut indices = Vec::new();
    for i in 0..k {
        if rem.is_zero() {
            break;
        }
        let kk = k - i;
        let rr = r - i;
        let m = largest_index(kk, rr, &rem);
        rem -= coeff(&m, kk, rr);
        indices.push(m);
    }
    debug_assert!(rem.is_zero(), "greedy always terminates at choose = 1");
    let rep = CanonRep { k, r, indices };
    rep.validate().map_err(|e| {
        Error::Domain(format!(
            "greedy produced a non-canonical expansion for N={n}, k={k}, r={r}: {e}"
        ))
    })?;
    debug_assert_eq!(rep.eval(), *n);
    Ok(rep)
}

pub fn canonical_rep_u64(n: u64, k: u32, r: u32) -> Result<CanonRep> {
    canonical_rep(&BigUint::from(n), k, r)
}

/// Lower shadow: each term's choose parameter drops by one. Zero maps to
/// zero.
pub fn shadow_down(n: &BigUint, k: u32, r: u32) -> Result<BigUint> {
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = canonical_rep(n, k, r)?;
    Ok(rep
        .indices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            coeff_signed(
                &BigInt::from(m.clone()),
                (k - i as u32) as i64 - 1,
                r - i as u32,
            )
        })
        .sum())
}

/// Upper shadow: each term's choose parameter grows by one. Zero maps to
/// zero.
pub fn shadow_up(n: &BigUint, k: u32, r: u32) -> Result<BigUint> {
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = canonical_rep(n, k, r)?;
    Ok(rep
        .indices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            coeff_signed(
                &BigInt::from(m.clone()),
                (k - i as u32) as i64 + 1,
                r - i as u32,
            )
        })
        .sum())
}

/// Closed form of the j+1-fold composition of lower shadows
/// (choose parameters drop by j+1). Requires `0 <= j < k`.
pub fn iterate_shadow_down(n: &BigUint, k: u32, r: u32, j: u32) -> Result<BigUint> {
    if j >= k {
        return Err(Error::Domain(format!("iterated lower shadow needs j < k, got j={j} k={k}")));
    }
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = canonical_rep(n, k, r)?;
    Ok(rep
        .indices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            coeff_signed(
                &BigInt::from(m.clone()),
                (k as i64) - (j as i64) - 1 - i as i64,
                r - i as u32,
            )
        })
        .sum())
}

/// Closed form of the j+1-fold composition of upper shadows
/// (choose parameters grow by j+1). Any `j >= 0` is allowed.
pub fn iterate_shadow_up(n: &BigUint, k: u32, r: u32, j: u32) -> Result<BigUint> {
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    let rep = canonical_rep(n, k, r)?;
    Ok(rep
        .indices
        .iter()
        .enumerate()
        .map(|(i, m)| {
            coeff_signed(
                &BigInt::from(m.clone()),
                (k as i64) + (j as i64) + 1 - i as i64,
                r - i as u32,
            )
        })
        .sum())
}

/// Evaluates both sides of the shift comparison `L+ <= N  <=>  L <= N-` and
/// asserts their equivalence.
pub fn compare_shift(l: &BigUint, n: &BigUint, k: u32, r: u32) -> Result<(bool, bool)> {
    let l_rep = canonical_rep(l, k, r)?;
    let n_rep = canonical_rep(n, k, r)?;
    let lhs = l_rep.shift_up() <= *n;
    let rhs = *l <= n_rep.shift_down();
    assert_eq!(lhs, rhs, "shift comparison equivalence failed for L={l}, N={n}, k={k}, r={r}");
    Ok((lhs, rhs))
}

/// Brute-force enumeration of every index sequence satisfying the canonical
/// side conditions and summing to n. Independent of the greedy construction;
/// the uniqueness tests assert it returns exactly one sequence.
pub fn enumerate_reps(n: &BigUint, k: u32, r: u32) -> Vec<Vec<BigUint>> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec_enumerate(n.clone(), k, r, None, &mut acc, &mut out);
    out
}

fn rec_enumerate(
    target: BigUint,
    k: u32,
    r: u32,
    cap: Option<BigUint>,
    acc: &mut Vec<BigUint>,
    out: &mut Vec<Vec<BigUint>>,
) {
    if target.is_zero() {
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        return;
    }
    if k == 0 {
        return;
    }
    if k == 1 {
        // Single remaining term binom(m, 1)_r = m must absorb the target.
        let fits = match &cap {
            Some(c) => target <= *c,
            None => true,
        };
        if fits && !target.is_zero() {
            acc.push(target.clone());
            out.push(acc.clone());
            acc.pop();
        }
        return;
    }
    let mut m = BigUint::from(k);
    loop {
        if let Some(c) = &cap {
            if m > *c {
                break;
            }
        }
        let v = coeff(&m, k, r);
        if v > target {
            break;
        }
        // Next index must stay below m - floor(m/r).
        let next_cap = &m - &m / BigUint::from(r) - 1u32;
        acc.push(m.clone());
        rec_enumerate(&target - &v, k - 1, r - 1, Some(next_cap), acc, out);
        acc.pop();
        m += 1u32;
    }
}

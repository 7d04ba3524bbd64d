//! Reduced simplicial homology dimensions over a prime field, by exact
//! boundary-matrix rank.
//!
//! The reduced chain complex includes the empty face, so the degree-0
//! boundary map is the augmentation (an all-ones row) and the Betti vector
//! starts at dimension -1. Ranks come from Gaussian elimination over F_p;
//! for p = 2 rows are bit-packed u64 words and elimination is word-level XOR.

use crate::complex::Complex;
use crate::error::Error;
use crate::Result;

/// A prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: 2 }
    }
}

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    /// Rank by row elimination with row pivoting.
    pub fn rank(&self) -> usize {
        let p = self.field.p as u64;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as u64).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.field.inv(m[rank][col]);
            for x in m[rank][col..].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot_row = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col];
                    for (x, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x = (*x + (p - factor) * pv) % p;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Rank computed by eliminating the transpose (column pivoting); used as
    /// an independent route in the cross-check tests.
    pub fn rank_transposed(&self) -> usize {
        let mut t = FpMatrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t.rank()
    }

    /// Matrix product over the field.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.field, other.field);
        let p = self.field.p as u64;
        let mut out = FpMatrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) as u64 + a * other.get(k, c) as u64) % p;
                    out.data[r * other.cols + c] = v as u32;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// Boundary matrix of the map from k-chains to (k-1)-chains: rows are
/// (k-1)-faces (the empty face when k = 0, giving the augmentation), columns
/// are k-faces, entries are the alternating signs of vertex deletion mod p.
pub fn boundary_matrix(c: &Complex, k: usize, field: PrimeField) -> FpMatrix {
    let cols_faces = c.faces_of_size(k + 1);
    let rows_faces = c.faces_of_size(k);
    let mut m = FpMatrix::zero(field, rows_faces.len(), cols_faces.len());
    let p = field.p;
    for (j, f) in cols_faces.iter().enumerate() {
        for (t, b) in f.boundary_faces().iter().enumerate() {
            let i = rows_faces
                .binary_search(b)
                .expect("complex is closed under inclusion");
            let sign = if t % 2 == 0 { 1 } else { p - 1 };
            m.set(i, j, sign);
        }
    }
    m
}

/// Bit-packed boundary-matrix rank over F_2.
fn rank_gf2(c: &Complex, k: usize) -> usize {
    let cols = c.faces_of_size(k + 1).len();
    let rows_faces = c.faces_of_size(k);
    if cols == 0 || rows_faces.is_empty() {
        return 0;
    }
    let words = cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; words]; rows_faces.len()];
    for (j, f) in c.faces_of_size(k + 1).iter().enumerate() {
        for b in f.boundary_faces() {
            let i = rows_faces
                .binary_search(&b)
                .expect("complex is closed under inclusion");
            rows[i][j / 64] ^= 1 << (j % 64);
        }
    }
    // Word-level XOR elimination: reduce each row against the pivots found so
    // far; a surviving nonzero row becomes a new pivot.
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut row in rows {
        while let Some(lead) = leading_bit(&row) {
            match pivots.binary_search_by_key(&lead, |(l, _)| *l) {
                Ok(pos) => {
                    let (_, pivot) = &pivots[pos];
                    for (w, pw) in row.iter_mut().zip(pivot.iter()) {
                        *w ^= pw;
                    }
                }
                Err(pos) => {
                    pivots.insert(pos, (lead, row));
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Reduced Betti numbers `(beta_{-1}, beta_0, ..., beta_{dim})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    betas: Vec<u64>,
}

impl BettiVector {
    /// `beta_k`; zero outside the stored range.
    pub fn beta(&self, k: i32) -> u64 {
        let i = k + 1;
        if i < 0 || i as usize >= self.betas.len() {
            0
        } else {
            self.betas[i as usize]
        }
    }

    /// Entries from dimension -1 upward.
    pub fn entries(&self) -> &[u64] {
        &self.betas
    }

    /// Entries from dimension 0 upward.
    pub fn from_dim_zero(&self) -> &[u64] {
        &self.betas[1..]
    }

    pub fn is_all_zero(&self) -> bool {
        self.betas.iter().all(|&b| b == 0)
    }
}

/// Exact dimensions of reduced homology over the field, via
/// `beta_k = f_k - rank d_k - rank d_{k+1}`.
pub fn betti_vector(c: &Complex, field: PrimeField) -> BettiVector {
    let dim = c.dim();
    // ranks[k] = rank of the boundary map leaving k-chains, k = 0..=dim.
    let ranks: Vec<usize> = (0..=dim)
        .map(|k| {
            if field.p() == 2 {
                rank_gf2(c, k as usize)
            } else {
                boundary_matrix(c, k as usize, field).rank()
            }
        })
        .collect();
    let rank_at = |k: i32| -> u64 {
        if k < 0 || k as usize >= ranks.len() {
            0
        } else {
            ranks[k as usize] as u64
        }
    };
    let betas = (-1..=dim)
        .map(|k| c.f(k) - rank_at(k) - rank_at(k + 1))
        .collect();
    BettiVector { betas }
}

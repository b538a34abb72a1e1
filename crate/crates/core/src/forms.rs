//! Integer symmetric bilinear forms with exact invariants.
//!
//! Signatures are computed by symmetric congruence diagonalization over
//! arbitrary-precision rationals and determinants by fraction-free
//! elimination over arbitrary-precision integers, so every answer is exact
//! regardless of the size of the entries.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::f2::{solve_row, F2Matrix, F2Vec};
use crate::rat::{rat_int, Rat};
use crate::{Error, Result};

/// A symmetric bilinear form on `Z^n` given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntSymForm {
    entries: Vec<Vec<i64>>,
}

impl IntSymForm {
    /// Validates that `entries` is a square symmetric matrix. The empty
    /// matrix is the rank-zero form.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "matrix is not square: row {} has length {}, expected {}",
                    i,
                    row.len(),
                    n
                )));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Validation(format!(
                        "matrix is not symmetric at ({}, {}): {} != {}",
                        i, j, entries[i][j], entries[j][i]
                    )));
                }
            }
        }
        Ok(IntSymForm { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.entries[i][i]).collect()
    }

    /// Block sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &IntSymForm) -> IntSymForm {
        let n = self.dim();
        let m = other.dim();
        let mut entries = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            entries[i][..n].copy_from_slice(&self.entries[i]);
        }
        for i in 0..m {
            entries[n + i][n..].copy_from_slice(&other.entries[i]);
        }
        IntSymForm { entries }
    }

    pub fn negate(&self) -> IntSymForm {
        IntSymForm {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|x| -x).collect())
                .collect(),
        }
    }

    /// `v^T M v`, exactly.
    pub fn evaluate(&self, v: &[i64]) -> BigInt {
        assert_eq!(v.len(), self.dim());
        let mut acc = BigInt::zero();
        for (i, vi) in v.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                acc += BigInt::from(*vi) * BigInt::from(*vj) * BigInt::from(self.entries[i][j]);
            }
        }
        acc
    }
}

fn swap_sym(a: &mut [Vec<Rat>], k: usize, l: usize) {
    a.swap(k, l);
    for row in a.iter_mut() {
        row.swap(k, l);
    }
}

fn congruence_diagonal(form: &IntSymForm) -> Vec<Rat> {
    let n = form.dim();
    let mut a: Vec<Vec<Rat>> = form
        .entries
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let mut diag = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(l) = ((k + 1)..n).find(|&l| !a[l][l].is_zero()) {
                swap_sym(&mut a, k, l);
            } else {
                let mut off = None;
                'search: for i in k..n {
                    for j in (i + 1)..n {
                        if !a[i][j].is_zero() {
                            off = Some((i, j));
                            break 'search;
                        }
                    }
                }
                match off {
                    Some((i, j)) => {
                        for col in 0..n {
                            let t = a[j][col].clone();
                            a[i][col] += t;
                        }
                        for row in 0..n {
                            let t = a[row][j].clone();
                            a[row][i] += t;
                        }
                        if i != k {
                            swap_sym(&mut a, k, i);
                        }
                    }
                    None => {
                        diag.extend(std::iter::repeat_with(Rat::zero).take(n - k));
                        break;
                    }
                }
            }
        }
        let d = a[k][k].clone();
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for col in 0..n {
                let t = &f * &a[k][col];
                a[i][col] -= t;
            }
            for row in 0..n {
                let t = &f * &a[row][k];
                a[row][i] -= t;
            }
        }
        diag.push(d);
        k += 1;
    }
    diag
}

/// Counts of positive, negative, and zero entries in a diagonalization.
pub fn inertia(form: &IntSymForm) -> (usize, usize, usize) {
    let mut pos = 0;
    let mut neg = 0;
    let mut null = 0;
    for d in congruence_diagonal(form) {
        if d.is_zero() {
            null += 1;
        } else if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos, neg, null)
}

/// Signature (positive index minus negative index), exactly.
pub fn signature(form: &IntSymForm) -> i64 {
    let (pos, neg, _) = inertia(form);
    pos as i64 - neg as i64
}

/// Dimension of a maximal positive-definite subspace.
pub fn positive_index(form: &IntSymForm) -> usize {
    inertia(form).0
}

/// Signed determinant of the Gram matrix; the empty form has determinant 1.
pub fn determinant(form: &IntSymForm) -> BigInt {
    let n = form.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = form
        .entries
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..(n - 1) {
        if a[k][k].is_zero() {
            match ((k + 1)..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

const MAX_CHARACTERISTIC_KERNEL: usize = 16;

/// All 0/1 vectors `w` with `M w ≡ diag(M) (mod 2)`, in lexicographic order.
///
/// The solution set is an affine subspace of `F2^n`; if its dimension
/// exceeds 16 the enumeration is refused.
pub fn characteristic_solutions_mod2(form: &IntSymForm) -> Result<Vec<Vec<u8>>> {
    let n = form.dim();
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut m2 = F2Matrix::zero(n, n);
    let mut b = F2Vec::zero(n);
    for i in 0..n {
        for j in 0..n {
            m2.set(i, j, form.entries[i][j].rem_euclid(2) == 1);
        }
        b.set(i, form.entries[i][i].rem_euclid(2) == 1);
    }
    let (particular, kernel) = solve_row(&m2, &b).ok_or_else(|| {
        Error::Internal("characteristic equation has no mod-2 solution".into())
    })?;
    if kernel.len() > MAX_CHARACTERISTIC_KERNEL {
        return Err(Error::Unsupported(format!(
            "characteristic solution space has dimension {}, refusing to enumerate more than 2^{}",
            kernel.len(),
            MAX_CHARACTERISTIC_KERNEL
        )));
    }
    let mut out = Vec::with_capacity(1 << kernel.len());
    for mask in 0u32..(1 << kernel.len()) {
        let mut w = particular.clone();
        for (t, kv) in kernel.iter().enumerate() {
            if mask >> t & 1 == 1 {
                w.xor_assign(kv);
            }
        }
        out.push((0..n).map(|i| w.get(i) as u8).collect::<Vec<u8>>());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

//! Dense linear algebra over the field with two elements.
//!
//! Vectors are bit sets packed into `u64` blocks. Matrices store one bit row
//! per domain basis vector, so a matrix with `m` rows and `n` columns is the
//! linear map `F2^m -> F2^n` sending the i-th basis vector to row i, and
//! composition is ordinary matrix multiplication. Row spaces are images and
//! left kernels are kernels, which keeps Gaussian elimination row-oriented
//! throughout.

/// A bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Vec {
    blocks: Vec<u64>,
    len: usize,
}

impl F2Vec {
    pub fn zero(len: usize) -> Self {
        F2Vec {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = F2Vec::zero(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.blocks[i / 64] |= mask;
        } else {
            self.blocks[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.blocks[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| *b == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_set(&self) -> Option<usize> {
        for (k, b) in self.blocks.iter().enumerate() {
            if *b != 0 {
                return Some(k * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Parity of the intersection with `other`.
    pub fn dot(&self, other: &F2Vec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = F2Vec::zero(len);
        for i in indices {
            v.flip(i);
        }
        v
    }
}

/// A matrix over F2; the map `F2^rows -> F2^cols` by row-vector action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: Vec<F2Vec>,
    cols: usize,
}

impl F2Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        F2Matrix {
            rows: vec![F2Vec::zero(ncols); nrows],
            cols: ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zero(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<F2Vec>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        F2Matrix { rows, cols: ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i].flip(j);
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.rows[i]
    }

    /// `v * self` for a row vector `v` of length `nrows`.
    pub fn apply(&self, v: &F2Vec) -> F2Vec {
        debug_assert_eq!(v.len(), self.nrows());
        let mut out = F2Vec::zero(self.cols);
        for (k, b) in v.blocks.iter().enumerate() {
            let mut bits = *b;
            while bits != 0 {
                let i = k * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.xor_assign(&self.rows[i]);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &F2Matrix) -> F2Matrix {
        debug_assert_eq!(self.cols, rhs.nrows());
        let rows = self.rows.iter().map(|r| rhs.apply(r)).collect();
        F2Matrix::from_rows(rows, rhs.cols)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut out = F2Matrix::zero(self.cols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_set() {
                out.rows[j].set(i, true);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = RowBasis::new(self.cols, 0);
        let mut rank = 0;
        for r in &self.rows {
            let mut v = r.clone();
            let mut c = basis.zero_track();
            basis.reduce(&mut v, &mut c);
            if !v.is_zero() {
                basis.insert(v, c);
                rank += 1;
            }
        }
        rank
    }

    /// Basis of the row space (the image of the map).
    pub fn row_space_basis(&self) -> Vec<F2Vec> {
        let mut basis = RowBasis::new(self.cols, 0);
        let mut out = Vec::new();
        for r in &self.rows {
            let mut v = r.clone();
            let mut c = basis.zero_track();
            basis.reduce(&mut v, &mut c);
            if !v.is_zero() {
                basis.insert(v, c);
                out.push(r.clone());
            }
        }
        out
    }

    /// Basis of `{ v : v * self = 0 }`.
    pub fn left_kernel_basis(&self) -> Vec<F2Vec> {
        let n = self.nrows();
        let mut basis = RowBasis::new(self.cols, n);
        let mut kernel = Vec::new();
        for i in 0..n {
            let mut v = self.rows[i].clone();
            let mut c = F2Vec::basis(n, i);
            basis.reduce(&mut v, &mut c);
            if v.is_zero() {
                kernel.push(c);
            } else {
                basis.insert(v, c);
            }
        }
        kernel
    }
}

/// Incremental row-echelon basis with a tracked coefficient part.
struct RowBasis {
    rows: Vec<F2Vec>,
    tracks: Vec<F2Vec>,
    pivots: Vec<Option<usize>>,
    track_width: usize,
}

impl RowBasis {
    fn new(width: usize, track_width: usize) -> Self {
        RowBasis {
            rows: Vec::new(),
            tracks: Vec::new(),
            pivots: vec![None; width],
            track_width,
        }
    }

    /// Reduces `v` (and its coefficient part `c`) against the basis, in
    /// place. Afterwards `v` is zero iff the original lay in the span.
    fn reduce(&self, v: &mut F2Vec, c: &mut F2Vec) {
        while let Some(p) = v.first_set() {
            match self.pivots[p] {
                Some(r) => {
                    v.xor_assign(&self.rows[r]);
                    c.xor_assign(&self.tracks[r]);
                }
                None => break,
            }
        }
    }

    fn insert(&mut self, v: F2Vec, c: F2Vec) {
        let p = v.first_set().expect("nonzero row");
        debug_assert!(self.pivots[p].is_none());
        self.pivots[p] = Some(self.rows.len());
        self.rows.push(v);
        self.tracks.push(c);
    }

    fn zero_track(&self) -> F2Vec {
        F2Vec::zero(self.track_width)
    }
}

/// Solves `x * m = b`. Returns a particular solution and a basis of the
/// left kernel of `m`, so the full solution set is the affine span.
pub fn solve_row(m: &F2Matrix, b: &F2Vec) -> Option<(F2Vec, Vec<F2Vec>)> {
    debug_assert_eq!(b.len(), m.ncols());
    let n = m.nrows();
    let mut basis = RowBasis::new(m.ncols(), n);
    for i in 0..n {
        let mut v = m.rows[i].clone();
        let mut c = F2Vec::basis(n, i);
        basis.reduce(&mut v, &mut c);
        if !v.is_zero() {
            basis.insert(v, c);
        }
    }
    let mut r = b.clone();
    let mut coeff = basis.zero_track();
    basis.reduce(&mut r, &mut coeff);
    if !r.is_zero() {
        return None;
    }
    Some((coeff, m.left_kernel_basis()))
}

/// A quotient `Z / B` of subspaces of `F2^ambient`, with projection onto
/// quotient coordinates.
pub struct Quotient {
    width: usize,
    reps: Vec<F2Vec>,
    rows: Vec<F2Vec>,
    coeffs: Vec<F2Vec>,
    pivots: Vec<Option<usize>>,
}

impl Quotient {
    /// Builds the quotient of `span(cycles)` by `span(boundaries)`; the
    /// boundary span must lie inside the cycle span.
    pub fn new(width: usize, boundaries: &[F2Vec], cycles: &[F2Vec]) -> Self {
        let mut q = Quotient {
            width,
            reps: Vec::new(),
            rows: Vec::new(),
            coeffs: Vec::new(),
            pivots: vec![None; width],
        };
        for b in boundaries {
            q.absorb(b.clone(), None);
        }
        for z in cycles {
            let idx = q.reps.len();
            if q.absorb(z.clone(), Some(idx)) {
                q.reps.push(z.clone());
            }
        }
        q
    }

    fn absorb(&mut self, mut v: F2Vec, rep_idx: Option<usize>) -> bool {
        let mut c = F2Vec::zero(0);
        if let Some(i) = rep_idx {
            c = F2Vec::zero(i + 1);
            c.set(i, true);
        }
        while let Some(p) = v.first_set() {
            match self.pivots[p] {
                Some(r) => {
                    v.xor_assign(&self.rows[r]);
                    let other = &self.coeffs[r];
                    if other.len() > c.len() {
                        let mut grown = F2Vec::zero(other.len());
                        for i in c.iter_set() {
                            grown.set(i, true);
                        }
                        c = grown;
                    }
                    for i in other.iter_set() {
                        c.flip(i);
                    }
                }
                None => {
                    self.pivots[p] = Some(self.rows.len());
                    self.rows.push(v);
                    self.coeffs.push(c);
                    return rep_idx.is_some();
                }
            }
        }
        false
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, k: usize) -> &F2Vec {
        &self.reps[k]
    }

    /// Coordinates of `v` in the quotient, or `None` if `v` is not in the
    /// cycle span.
    pub fn project(&self, v: &F2Vec) -> Option<F2Vec> {
        debug_assert_eq!(v.len(), self.width);
        let mut v = v.clone();
        let mut c = F2Vec::zero(self.reps.len());
        while let Some(p) = v.first_set() {
            let r = self.pivots[p]?;
            v.xor_assign(&self.rows[r]);
            for i in self.coeffs[r].iter_set() {
                if i < c.len() {
                    c.flip(i);
                }
            }
        }
        Some(c)
    }
}

//! Borel cohomology via the total complex of the reduced cellular
//! cochains against the periodic free resolution of F2 over the group
//! ring: every differential is multiplication by (1+t) for the order-two
//! group, and the differentials alternate between (1+t) and (1+t)^3 for
//! the order-four group. The periodicity operator is the index shift of
//! the resolution and the restriction map is induced by the inclusion of
//! the fixed subcomplex.

use crate::f2::{F2Matrix, F2Vec, Quotient};
use crate::{Error, Result};

use super::{validate_gcw, Compiled, GCWComplex, Group};

/// Borel cohomology data of one complex up to a truncation bound.
#[derive(Clone, Debug)]
pub struct BorelCohomology {
    pub group: Group,
    pub bound: u32,
    /// Reduced Borel cohomology dimensions in degrees `0..=bound`.
    pub dims: Vec<usize>,
    /// Same for the fixed subcomplex.
    pub fixed_dims: Vec<usize>,
    /// Periodicity operator (degree shift 1 for Z2, 2 for Z4) as a matrix
    /// per starting degree `0..=bound - shift`.
    pub periodicity: Vec<F2Matrix>,
    /// Restriction to the fixed subcomplex per degree `0..=bound`.
    pub restriction: Vec<F2Matrix>,
}

fn block_size(c: &Compiled, n: usize, p: usize) -> usize {
    c.cells_of_dim(n - p)
}

fn offsets(c: &Compiled, n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(n + 2);
    let mut acc = 0;
    for p in 0..=n {
        out.push(acc);
        acc += block_size(c, n, p);
    }
    out.push(acc);
    out
}

fn total_dim(c: &Compiled, n: usize) -> usize {
    (0..=n).map(|p| block_size(c, n, p)).sum()
}

/// The differential of the total complex from degree `n` to `n + 1`.
fn differential(c: &Compiled, n: usize) -> F2Matrix {
    let off_n = offsets(c, n);
    let off_m = offsets(c, n + 1);
    let mut d = F2Matrix::zero(total_dim(c, n), total_dim(c, n + 1));
    for p in 0..=n {
        let q = n - p;
        if q as u32 > c.dim_max {
            continue;
        }
        for (local, &cell) in c.by_dim[q].iter().enumerate() {
            let row = off_n[p] + local;
            for &cb in &c.coboundary[cell] {
                d.flip(row, off_m[p] + c.pos_in_dim[cb]);
            }
            let hits = match (c.group, p % 2) {
                (Group::Z2, _) | (Group::Z4, 0) => 2,
                (Group::Z4, _) => 4,
            };
            let mut image = cell;
            for _ in 0..hits {
                d.flip(row, off_m[p + 1] + c.pos_in_dim[image]);
                image = c.action[image];
            }
        }
    }
    d
}

/// Basis index translation for the resolution shift `p -> p + k`.
fn shift_index_map(c: &Compiled, n: usize, k: usize) -> Vec<usize> {
    let off_n = offsets(c, n);
    let off_m = offsets(c, n + k);
    let mut map = vec![0usize; total_dim(c, n)];
    for p in 0..=n {
        for local in 0..block_size(c, n, p) {
            map[off_n[p] + local] = off_m[p + k] + local;
        }
    }
    map
}

fn tower(c: &Compiled, top: usize) -> Vec<Quotient> {
    let mut out = Vec::with_capacity(top + 1);
    let mut prev: Option<F2Matrix> = None;
    for n in 0..=top {
        let d = differential(c, n);
        if let Some(ref b) = prev {
            debug_assert_eq!(b.mul(&d).rank(), 0);
        }
        let boundaries: Vec<F2Vec> = match prev {
            Some(ref b) => (0..b.nrows()).map(|i| b.row(i).clone()).collect(),
            None => Vec::new(),
        };
        let cycles = d.left_kernel_basis();
        out.push(Quotient::new(total_dim(c, n), &boundaries, &cycles));
        prev = Some(d);
    }
    out
}

pub(crate) struct Engine {
    pub comp: Compiled,
    pub fixed: Compiled,
    fixed_index: Vec<usize>,
    x_q: Vec<Quotient>,
    f_q: Vec<Quotient>,
}

impl Engine {
    pub fn new(comp: Compiled, top: usize) -> Engine {
        let fixed = comp.fixed_subcomplex();
        let mut fixed_index = vec![usize::MAX; comp.cell_count()];
        let mut next = 0;
        for cell in 0..comp.cell_count() {
            if comp.h_fixed[cell] {
                fixed_index[cell] = next;
                next += 1;
            }
        }
        let x_q = tower(&comp, top);
        let f_q = tower(&fixed, top);
        Engine {
            comp,
            fixed,
            fixed_index,
            x_q,
            f_q,
        }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.x_q[n].dim()
    }

    pub fn fixed_dim(&self, n: usize) -> usize {
        self.f_q[n].dim()
    }

    /// The periodicity operator from degree `n` to `n + shift` on
    /// cohomology classes.
    pub fn period_matrix(&self, n: usize) -> Result<F2Matrix> {
        let k = self.comp.group.period();
        let map = shift_index_map(&self.comp, n, k);
        let source = &self.x_q[n];
        let target = &self.x_q[n + k];
        let mut rows = Vec::with_capacity(source.dim());
        for i in 0..source.dim() {
            let mut shifted = F2Vec::zero(total_dim(&self.comp, n + k));
            for bit in source.rep(i).iter_set() {
                shifted.set(map[bit], true);
            }
            let coords = target.project(&shifted).ok_or_else(|| {
                Error::Internal(format!("periodicity image in degree {n} is not a cocycle"))
            })?;
            rows.push(coords);
        }
        Ok(F2Matrix::from_rows(rows, target.dim()))
    }

    /// The restriction to the fixed subcomplex on cohomology in degree
    /// `n`.
    pub fn restriction_matrix(&self, n: usize) -> Result<F2Matrix> {
        let off_x = offsets(&self.comp, n);
        let off_f = offsets(&self.fixed, n);
        let source = &self.x_q[n];
        let target = &self.f_q[n];
        let width = total_dim(&self.fixed, n);
        let mut rows = Vec::with_capacity(source.dim());
        for i in 0..source.dim() {
            let mut restricted = F2Vec::zero(width);
            for bit in source.rep(i).iter_set() {
                let p = match off_x[1..].iter().position(|&o| bit < o) {
                    Some(p) => p,
                    None => unreachable!("basis index out of range"),
                };
                let cell = self.comp.by_dim[n - p][bit - off_x[p]];
                if self.comp.h_fixed[cell] {
                    let f = self.fixed_index[cell];
                    restricted.flip(off_f[p] + self.fixed.pos_in_dim[f]);
                }
            }
            let coords = target.project(&restricted).ok_or_else(|| {
                Error::Internal(format!("restriction image in degree {n} is not a cocycle"))
            })?;
            rows.push(coords);
        }
        Ok(F2Matrix::from_rows(rows, target.dim()))
    }
}

/// Computes Borel cohomology of a valid G-CW complex up to degree
/// `bound`, which must be at least `dim X + 4`.
pub fn borel_cohomology(x: &GCWComplex, bound: u32) -> Result<BorelCohomology> {
    let compiled = validate_gcw(x)?;
    let dim = x.dimension();
    if bound < dim + 4 {
        return Err(Error::Validation(format!(
            "truncation bound {bound} is below the required dim X + 4 = {}",
            dim + 4
        )));
    }
    let engine = Engine::new(compiled, bound as usize);
    let dims = (0..=bound as usize).map(|n| engine.dim(n)).collect();
    let fixed_dims = (0..=bound as usize).map(|n| engine.fixed_dim(n)).collect();
    let shift = x.group.period();
    let mut periodicity = Vec::new();
    for n in 0..=(bound as usize - shift) {
        periodicity.push(engine.period_matrix(n)?);
    }
    let mut restriction = Vec::new();
    for n in 0..=bound as usize {
        restriction.push(engine.restriction_matrix(n)?);
    }
    Ok(BorelCohomology {
        group: x.group,
        bound,
        dims,
        fixed_dims,
        periodicity,
        restriction,
    })
}

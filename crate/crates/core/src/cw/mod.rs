//! Finite pointed G-CW complexes over F2 for the cyclic groups of order
//! two and four, their Borel cohomology, and the derived invariants.
//!
//! A complex is a list of cells with mod-2 boundaries and a permutation
//! action of a fixed generator. All homological algebra happens in the
//! reduced cellular complex (the basepoint is collapsed); coefficients are
//! always F2, so cell orientations never enter.

mod borel;
mod invariants;
mod models;

pub use borel::{borel_cohomology, BorelCohomology};
pub use invariants::{
    d_invariant, d_invariant_with_bound, dbar_dunder, dbar_dunder_with_bound,
    local_map_height_check, spectrum_invariants, HeightCheck, HeightReport, SpectrumClass,
    SpectrumInvariants,
};
pub use models::{free_circle_z2, gtilde, representation_sphere, sphere_zero};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The acting group.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Group {
    Z2,
    Z4,
}

impl Group {
    pub fn order(self) -> usize {
        match self {
            Group::Z2 => 2,
            Group::Z4 => 4,
        }
    }

    /// Degree shift of the periodicity operator (W or U).
    pub fn period(self) -> usize {
        match self {
            Group::Z2 => 1,
            Group::Z4 => 2,
        }
    }
}

/// A real representation used for suspension.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Representation {
    /// The one-dimensional representation on which the generator acts by
    /// negation; the index-two subgroup acts trivially.
    Rtilde,
    /// The two-dimensional complex representation on which the generator
    /// of the order-four group acts by a quarter turn.
    C,
}

impl Representation {
    pub fn real_dimension(self) -> u32 {
        match self {
            Representation::Rtilde => 1,
            Representation::C => 2,
        }
    }

    /// Contribution to the declared level of a suspension.
    pub fn level_shift(self) -> u32 {
        match self {
            Representation::Rtilde => 1,
            Representation::C => 0,
        }
    }
}

/// One cell: identifier, dimension, and boundary as a mod-2 multiset of
/// identifiers (repeated entries cancel in pairs).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub id: String,
    pub dim: u32,
    #[serde(default)]
    pub bd: Vec<String>,
}

/// A finite pointed G-CW complex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GCWComplex {
    pub group: Group,
    /// Declared level: the fixed subcomplex must be a mod-2 homology
    /// sphere of this dimension.
    pub level: u32,
    pub basepoint: String,
    pub cells: Vec<Cell>,
    /// Image of every cell under the chosen generator of the group.
    pub gen_action: BTreeMap<String, String>,
}

const MAX_CELLS: usize = 2000;

impl GCWComplex {
    /// Cells other than the basepoint, in declaration order.
    pub fn reduced_cell_count(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn dimension(&self) -> u32 {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(0)
    }
}

/// Index form of the reduced complex used by all computations.
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub group: Group,
    pub level: u32,
    pub dim_max: u32,
    /// Reduced cell indices grouped by dimension.
    pub by_dim: Vec<Vec<usize>>,
    pub dim_of: Vec<u32>,
    pub pos_in_dim: Vec<usize>,
    /// Reduced mod-2 boundary, sorted index lists.
    pub boundary: Vec<Vec<usize>>,
    /// Cells whose boundary contains each cell, sorted.
    pub coboundary: Vec<Vec<usize>>,
    pub action: Vec<usize>,
    /// Fixed under the order-two subgroup.
    pub h_fixed: Vec<bool>,
}

impl Compiled {
    pub fn cell_count(&self) -> usize {
        self.dim_of.len()
    }

    pub fn cells_of_dim(&self, q: usize) -> usize {
        self.by_dim.get(q).map_or(0, Vec::len)
    }

    /// The fixed subcomplex with the restricted action, in the induced
    /// cell order.
    pub fn fixed_subcomplex(&self) -> Compiled {
        let keep: Vec<usize> = (0..self.cell_count()).filter(|&c| self.h_fixed[c]).collect();
        let mut new_index = vec![usize::MAX; self.cell_count()];
        for (new, &old) in keep.iter().enumerate() {
            new_index[old] = new;
        }
        let dim_of: Vec<u32> = keep.iter().map(|&c| self.dim_of[c]).collect();
        let dim_max = dim_of.iter().copied().max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); dim_max as usize + 1];
        let mut pos_in_dim = vec![0; keep.len()];
        for (new, &d) in dim_of.iter().enumerate() {
            pos_in_dim[new] = by_dim[d as usize].len();
            by_dim[d as usize].push(new);
        }
        let boundary: Vec<Vec<usize>> = keep
            .iter()
            .map(|&c| self.boundary[c].iter().map(|&b| new_index[b]).collect())
            .collect();
        let action: Vec<usize> = keep.iter().map(|&c| new_index[self.action[c]]).collect();
        let mut compiled = Compiled {
            group: self.group,
            level: self.level,
            dim_max,
            by_dim,
            dim_of,
            pos_in_dim,
            boundary,
            coboundary: Vec::new(),
            action,
            h_fixed: vec![true; keep.len()],
        };
        compiled.coboundary = coboundary_of(&compiled.boundary, compiled.cell_count());
        compiled
    }
}

fn coboundary_of(boundary: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (c, bd) in boundary.iter().enumerate() {
        for &b in bd {
            out[b].push(c);
        }
    }
    out
}

fn mod2_multiset(ids: &[usize]) -> Vec<usize> {
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(sorted[i]);
        }
        i = j;
    }
    out
}

/// Validates the G-CW axioms (well-formed cells, permutation action of
/// the right order commuting with the boundary, square-zero boundary) and
/// compiles the reduced complex.
pub(crate) fn validate_gcw(x: &GCWComplex) -> Result<Compiled> {
    if x.cells.len() > MAX_CELLS {
        return Err(Error::Unsupported(format!(
            "complex has {} cells, exceeding {MAX_CELLS}",
            x.cells.len()
        )));
    }
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, cell) in x.cells.iter().enumerate() {
        if cell.id.is_empty() {
            return Err(Error::Validation(format!("cell {i} has an empty id")));
        }
        if index.insert(&cell.id, i).is_some() {
            return Err(Error::Validation(format!("duplicate cell id {:?}", cell.id)));
        }
    }
    let &bp = index
        .get(x.basepoint.as_str())
        .ok_or_else(|| Error::Validation(format!("basepoint {:?} is not a cell", x.basepoint)))?;
    if x.cells[bp].dim != 0 {
        return Err(Error::Validation(format!(
            "basepoint {:?} must be zero-dimensional",
            x.basepoint
        )));
    }

    let n_full = x.cells.len();
    let mut full_boundary: Vec<Vec<usize>> = Vec::with_capacity(n_full);
    for cell in &x.cells {
        let mut bd = Vec::with_capacity(cell.bd.len());
        for b in &cell.bd {
            let &bi = index.get(b.as_str()).ok_or_else(|| {
                Error::Validation(format!("cell {:?} bounds unknown cell {:?}", cell.id, b))
            })?;
            if x.cells[bi].dim + 1 != cell.dim {
                return Err(Error::Validation(format!(
                    "cell {:?} of dimension {} has boundary cell {:?} of dimension {}",
                    cell.id, cell.dim, b, x.cells[bi].dim
                )));
            }
            bd.push(bi);
        }
        full_boundary.push(mod2_multiset(&bd));
    }

    if x.gen_action.len() != n_full {
        let missing: Vec<&str> = x
            .cells
            .iter()
            .map(|c| c.id.as_str())
            .filter(|id| !x.gen_action.contains_key(*id))
            .collect();
        return Err(Error::Validation(format!(
            "generator action must cover every cell; missing {missing:?}"
        )));
    }
    let mut action = vec![0usize; n_full];
    let mut image_seen = vec![false; n_full];
    for (from, to) in &x.gen_action {
        let &fi = index
            .get(from.as_str())
            .ok_or_else(|| Error::Validation(format!("action key {from:?} is not a cell")))?;
        let &ti = index
            .get(to.as_str())
            .ok_or_else(|| Error::Validation(format!("action image {to:?} is not a cell")))?;
        if x.cells[fi].dim != x.cells[ti].dim {
            return Err(Error::Validation(format!(
                "action does not preserve dimension: {from:?} -> {to:?}"
            )));
        }
        if image_seen[ti] {
            return Err(Error::Validation(format!(
                "action is not a permutation: {to:?} hit twice"
            )));
        }
        image_seen[ti] = true;
        action[fi] = ti;
    }
    if action[bp] != bp {
        return Err(Error::Validation(format!(
            "basepoint {:?} must be fixed by the action",
            x.basepoint
        )));
    }
    let mut power = (0..n_full).collect::<Vec<usize>>();
    for _ in 0..x.group.order() {
        power = power.iter().map(|&c| action[c]).collect();
    }
    if power.iter().enumerate().any(|(c, &pc)| c != pc) {
        return Err(Error::Validation(format!(
            "generator action does not have order dividing {}",
            x.group.order()
        )));
    }
    for c in 0..n_full {
        let translated: Vec<usize> = full_boundary[c].iter().map(|&b| action[b]).collect();
        if mod2_multiset(&translated) != full_boundary[action[c]] {
            return Err(Error::Validation(format!(
                "action does not commute with the boundary at cell {:?}",
                x.cells[c].id
            )));
        }
    }
    for c in 0..n_full {
        let mut second: Vec<usize> = Vec::new();
        for &b in &full_boundary[c] {
            second.extend_from_slice(&full_boundary[b]);
        }
        if !mod2_multiset(&second).is_empty() {
            return Err(Error::Validation(format!(
                "boundary of boundary is nonzero at cell {:?}",
                x.cells[c].id
            )));
        }
    }

    let reduced: Vec<usize> = (0..n_full).filter(|&c| c != bp).collect();
    let mut new_index = vec![usize::MAX; n_full];
    for (new, &old) in reduced.iter().enumerate() {
        new_index[old] = new;
    }
    let dim_of: Vec<u32> = reduced.iter().map(|&c| x.cells[c].dim).collect();
    let dim_max = dim_of.iter().copied().max().unwrap_or(0);
    let mut by_dim = vec![Vec::new(); dim_max as usize + 1];
    let mut pos_in_dim = vec![0; reduced.len()];
    for (new, &d) in dim_of.iter().enumerate() {
        pos_in_dim[new] = by_dim[d as usize].len();
        by_dim[d as usize].push(new);
    }
    let boundary: Vec<Vec<usize>> = reduced
        .iter()
        .map(|&c| {
            full_boundary[c]
                .iter()
                .filter(|&&b| b != bp)
                .map(|&b| new_index[b])
                .collect()
        })
        .collect();
    let action: Vec<usize> = reduced.iter().map(|&c| new_index[action[c]]).collect();
    let h_fixed: Vec<bool> = (0..reduced.len())
        .map(|c| match x.group {
            Group::Z2 => action[c] == c,
            Group::Z4 => action[action[c]] == c,
        })
        .collect();
    let coboundary = coboundary_of(&boundary, reduced.len());
    Ok(Compiled {
        group: x.group,
        level: x.level,
        dim_max,
        by_dim,
        dim_of,
        pos_in_dim,
        boundary,
        coboundary,
        action,
        h_fixed,
    })
}

/// Reduced mod-2 homology dimensions of a compiled complex, per degree.
pub(crate) fn reduced_homology_dims(c: &Compiled) -> Vec<usize> {
    use crate::f2::F2Matrix;
    let top = c.dim_max as usize;
    let mut ranks = vec![0usize; top + 2];
    for q in 1..=top {
        let rows = c.cells_of_dim(q);
        let cols = c.cells_of_dim(q - 1);
        let mut m = F2Matrix::zero(rows, cols);
        for (r, &cell) in c.by_dim[q].iter().enumerate() {
            for &b in &c.boundary[cell] {
                m.flip(r, c.pos_in_dim[b]);
            }
        }
        ranks[q] = m.rank();
    }
    (0..=top)
        .map(|q| c.cells_of_dim(q) - ranks[q] - ranks[q + 1])
        .collect()
}

/// Validates the stronger conditions required of an SWF-type complex: the
/// fixed subcomplex of the order-two subgroup is closed under the
/// boundary and has the reduced mod-2 homology of a sphere in the
/// declared level.
pub(crate) fn validate_swf(x: &GCWComplex) -> Result<Compiled> {
    let c = validate_gcw(x)?;
    let bad: BTreeSet<usize> = (0..c.cell_count())
        .filter(|&cell| c.h_fixed[cell] && c.boundary[cell].iter().any(|&b| !c.h_fixed[b]))
        .collect();
    if !bad.is_empty() {
        return Err(Error::Validation(format!(
            "fixed subcomplex is not closed under the boundary at {} cell(s)",
            bad.len()
        )));
    }
    let fixed = c.fixed_subcomplex();
    let dims = reduced_homology_dims(&fixed);
    let s = x.level as usize;
    let sphere_ok = dims.get(s) == Some(&1)
        && dims
            .iter()
            .enumerate()
            .all(|(q, &d)| d == usize::from(q == s));
    if !sphere_ok {
        return Err(Error::Validation(format!(
            "fixed subcomplex has reduced homology dimensions {dims:?}, expected a sphere in degree {s}"
        )));
    }
    Ok(c)
}

/// Smash product: pairs of reduced cells with the mod-2 Leibniz boundary
/// and the diagonal action; levels add.
pub fn smash(x: &GCWComplex, y: &GCWComplex) -> Result<GCWComplex> {
    if x.group != y.group {
        return Err(Error::Validation(format!(
            "smash requires matching groups, got {:?} and {:?}",
            x.group, y.group
        )));
    }
    validate_gcw(x)?;
    validate_gcw(y)?;
    let bp = "∗".to_string();
    let pair_id = |cx: &str, cy: &str| format!("{cx}∧{cy}");
    let mut cells = vec![Cell {
        id: bp.clone(),
        dim: 0,
        bd: vec![],
    }];
    let mut gen_action = BTreeMap::new();
    gen_action.insert(bp.clone(), bp.clone());
    let x_cells: Vec<&Cell> = x.cells.iter().filter(|c| c.id != x.basepoint).collect();
    let y_cells: Vec<&Cell> = y.cells.iter().filter(|c| c.id != y.basepoint).collect();
    let reduced_bd = |cell: &Cell, basepoint: &str| -> Vec<String> {
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for b in &cell.bd {
            *counts.entry(b.as_str()).or_default() += 1;
        }
        counts
            .into_iter()
            .filter(|&(id, k)| id != basepoint && k % 2 == 1)
            .map(|(id, _)| id.to_string())
            .collect()
    };
    for cx in &x_cells {
        for cy in &y_cells {
            let mut bd = Vec::new();
            for bx in reduced_bd(cx, &x.basepoint) {
                bd.push(pair_id(&bx, &cy.id));
            }
            for by in reduced_bd(cy, &y.basepoint) {
                bd.push(pair_id(&cx.id, &by));
            }
            cells.push(Cell {
                id: pair_id(&cx.id, &cy.id),
                dim: cx.dim + cy.dim,
                bd,
            });
            let tx = &x.gen_action[&cx.id];
            let ty = &y.gen_action[&cy.id];
            let image = if tx == &x.basepoint || ty == &y.basepoint {
                bp.clone()
            } else {
                pair_id(tx, ty)
            };
            gen_action.insert(pair_id(&cx.id, &cy.id), image);
        }
    }
    let out = GCWComplex {
        group: x.group,
        level: x.level + y.level,
        basepoint: bp,
        cells,
        gen_action,
    };
    validate_gcw(&out).map_err(|e| {
        Error::Internal(format!("smash produced an invalid complex: {e}"))
    })?;
    Ok(out)
}

/// Suspension by `count` copies of the representation sphere of `rep`.
pub fn suspend(x: &GCWComplex, rep: Representation, count: u32) -> Result<GCWComplex> {
    if rep == Representation::C && x.group != Group::Z4 {
        return Err(Error::Validation(
            "the complex representation requires the order-four group".into(),
        ));
    }
    let mut out = x.clone();
    for _ in 0..count {
        out = smash(&out, &models::representation_sphere(x.group, rep))?;
    }
    Ok(out)
}

/// Views an order-four complex through its order-two subgroup: same
/// cells, the generator acting by the square of the original generator.
pub fn restrict_to_h(x: &GCWComplex) -> Result<GCWComplex> {
    if x.group != Group::Z4 {
        return Err(Error::Validation(
            "restriction to the order-two subgroup applies to order-four complexes".into(),
        ));
    }
    validate_gcw(x)?;
    let gen_action: BTreeMap<String, String> = x
        .gen_action
        .iter()
        .map(|(from, mid)| (from.clone(), x.gen_action[mid].clone()))
        .collect();
    Ok(GCWComplex {
        group: Group::Z2,
        level: x.level,
        basepoint: x.basepoint.clone(),
        cells: x.cells.clone(),
        gen_action,
    })
}

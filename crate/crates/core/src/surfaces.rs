//! Enumeration of candidate (normal Euler number, first Betti number)
//! pairs for non-orientable surfaces in the four-ball bounded by a knot,
//! partitioned into obstructed and unobstructed regions.
//!
//! Three tests apply to each pair: the parity constraint from the
//! Gordon–Litherland form, the classical bound |σ − e/2| ≤ b₁, and the
//! strengthened bound −σ + e/2 + 1 ≤ b₁ available when the knot has
//! determinant one, vanishing Manolescu–Owens invariant, and negative
//! delta. The strengthened bound excludes exactly the boundary line
//! b₁ = −σ + e/2 of the classical region.

use serde::{Deserialize, Serialize};

use crate::froyshov::delta_triple;
use crate::links::{classical_invariants, LinkDesc};
use crate::rat::rat_int;
use crate::{Error, Result};

/// The finite search window: normal Euler numbers in `e_min..=e_max`,
/// first Betti numbers in `1..=h_max`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Window {
    pub e_min: i64,
    pub e_max: i64,
    pub h_max: i64,
}

impl Window {
    fn validate(&self) -> Result<()> {
        if self.e_min > self.e_max || self.h_max < 1 {
            return Err(Error::Validation(format!(
                "empty window: e in {}..={}, h in 1..={}",
                self.e_min, self.e_max, self.h_max
            )));
        }
        let cells = (self.e_max - self.e_min + 1).saturating_mul(self.h_max);
        if cells > 2_000_000 {
            return Err(Error::Unsupported(format!("window has {cells} cells")));
        }
        Ok(())
    }
}

/// Classification of one (e, h) pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum PairStatus {
    #[serde(rename = "obstructed-classical")]
    ObstructedClassical,
    #[serde(rename = "obstructed-real-froyshov")]
    ObstructedRealFroyshov,
    #[serde(rename = "unobstructed-by-these-tools")]
    Unobstructed,
}

impl PairStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PairStatus::ObstructedClassical => "obstructed-classical",
            PairStatus::ObstructedRealFroyshov => "obstructed-real-froyshov",
            PairStatus::Unobstructed => "unobstructed-by-these-tools",
        }
    }
}

/// One classified pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairEntry {
    pub e: i64,
    pub h: i64,
    pub status: PairStatus,
    pub reason: String,
}

/// The classified window together with the inputs that produced it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairRegion {
    pub window: Window,
    pub sigma: i64,
    pub determinant: u64,
    /// Whether the strengthened bound's hypotheses were all verified.
    pub strengthened_available: bool,
    pub classified: Vec<PairEntry>,
}

impl PairRegion {
    /// The unobstructed pairs, in window order.
    pub fn unobstructed(&self) -> Vec<(i64, i64)> {
        self.classified
            .iter()
            .filter(|p| p.status == PairStatus::Unobstructed)
            .map(|p| (p.e, p.h))
            .collect()
    }

    /// A plain-text grid, one row per h (descending), one column per e;
    /// `#` classical obstruction, `F` strengthened obstruction, `.`
    /// unobstructed.
    pub fn grid(&self) -> String {
        let width = (self.window.e_max - self.window.e_min + 1) as usize;
        let mut rows =
            vec![vec![b' '; width]; self.window.h_max as usize];
        for p in &self.classified {
            let col = (p.e - self.window.e_min) as usize;
            let row = (self.window.h_max - p.h) as usize;
            rows[row][col] = match p.status {
                PairStatus::ObstructedClassical => b'#',
                PairStatus::ObstructedRealFroyshov => b'F',
                PairStatus::Unobstructed => b'.',
            };
        }
        let mut out = String::new();
        for (i, row) in rows.iter().enumerate() {
            let h = self.window.h_max - i as i64;
            out.push_str(&format!("h={h:>3} |"));
            out.push_str(std::str::from_utf8(row).unwrap());
            out.push('\n');
        }
        out.push_str(&format!(
            "       e from {} to {}\n",
            self.window.e_min, self.window.e_max
        ));
        out
    }
}

/// Knots for which the Manolescu–Owens invariant is known to vanish; the
/// flag passed by the caller is OR-ed with this list.
pub fn mo_delta_known_zero(link: &LinkDesc) -> bool {
    match link.unmarked() {
        LinkDesc::Torus(p, q) => {
            let (p, q) = (*p.min(q), *p.max(q));
            p == 3 && q % 6 == 1
        }
        _ => false,
    }
}

/// Classifies every pair in the window for the given knot.
/// `sign_convention` (±1) replaces e by −e throughout, bridging the two
/// orientation conventions for the normal Euler number.
pub fn classify_pairs(
    link: &LinkDesc,
    window: Window,
    mo_delta_zero: bool,
    sign_convention: i64,
) -> Result<PairRegion> {
    if sign_convention != 1 && sign_convention != -1 {
        return Err(Error::Validation(format!(
            "sign convention must be 1 or -1, got {sign_convention}"
        )));
    }
    window.validate()?;
    let inv = classical_invariants(link)?;
    let sigma = inv.signature;
    let delta = delta_triple(link)?.delta;
    let mo_zero = mo_delta_zero || mo_delta_known_zero(link);
    let strengthened_available = inv.determinant == 1 && mo_zero && delta < rat_int(0);

    let mut classified = Vec::new();
    for e in window.e_min..=window.e_max {
        for h in 1..=window.h_max {
            let entry = classify_one(sigma, strengthened_available, e, h, sign_convention);
            classified.push(entry);
        }
    }
    Ok(PairRegion {
        window,
        sigma,
        determinant: inv.determinant,
        strengthened_available,
        classified,
    })
}

fn classify_one(
    sigma: i64,
    strengthened_available: bool,
    e: i64,
    h: i64,
    sign_convention: i64,
) -> PairEntry {
    let eo = sign_convention * e;
    if eo % 2 != 0 {
        return PairEntry {
            e,
            h,
            status: PairStatus::ObstructedClassical,
            reason: "normal Euler number must be even".into(),
        };
    }
    let defect = sigma - eo / 2;
    if (h - defect) % 2 != 0 {
        return PairEntry {
            e,
            h,
            status: PairStatus::ObstructedClassical,
            reason: format!("parity: h ≢ σ − e/2 = {defect} mod 2"),
        };
    }
    if h < defect.abs() {
        return PairEntry {
            e,
            h,
            status: PairStatus::ObstructedClassical,
            reason: format!("classical bound |σ − e/2| = {} exceeds h", defect.abs()),
        };
    }
    if strengthened_available && h == -sigma + eo / 2 {
        return PairEntry {
            e,
            h,
            status: PairStatus::ObstructedRealFroyshov,
            reason: format!("strengthened bound excludes h = −σ + e/2 = {h}"),
        };
    }
    PairEntry {
        e,
        h,
        status: PairStatus::Unobstructed,
        reason: "passes all implemented obstructions".into(),
    }
}

/// The parameterized family (−2 − 16n ± 2m, 1 + m + 2l) intersected with
/// a window, as a sorted deduplicated list.
pub fn unobstructed_family(n: i64, window: Window) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let base = -2 - 16 * n;
    for m in 0.. {
        let h_min = 1 + m;
        if h_min > window.h_max {
            break;
        }
        for e in [base - 2 * m, base + 2 * m] {
            if e < window.e_min || e > window.e_max {
                continue;
            }
            let mut h = h_min;
            while h <= window.h_max {
                out.push((e, h));
                h += 2;
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

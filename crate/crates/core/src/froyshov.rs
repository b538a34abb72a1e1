//! The delta invariant triple on supported link families, its connected
//! sum and mirror algebra, the spherical shortcut, and kappa
//! bookkeeping.
//!
//! Values come from three sources: a closed formula on two-bridge and
//! torus families, a fixed table for the supported Montesinos knots, and
//! composition rules for mirrors and connected sums. Nothing here runs
//! gauge theory; descriptors outside the supported families are refused.

use serde::{Deserialize, Serialize};

use crate::cw::{validate_gcw, SpectrumClass};
use crate::links::LinkDesc;
use crate::plumbing::{mubar, SeifertData};
use crate::rat::{denominator_divides, rat, rat_int, serde_wire, serde_wire_opt, Rat};
use crate::{Error, Result};

/// The delta invariant with its upper and lower companions.
///
/// `dbar` and `dunder` are absent when the composition rules cannot
/// produce them (a connected sum with a non-spherical summand); refusing
/// is preferred over guessing. `spherical` records that the underlying
/// class is a sphere class, in which case all three values coincide.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DeltaTriple {
    #[serde(with = "serde_wire")]
    pub delta: Rat,
    #[serde(with = "serde_wire_opt")]
    pub dbar: Option<Rat>,
    #[serde(with = "serde_wire_opt")]
    pub dunder: Option<Rat>,
    pub provenance: String,
    pub spherical: bool,
}

fn make_triple(
    delta: Rat,
    dbar: Option<Rat>,
    dunder: Option<Rat>,
    provenance: &str,
    spherical: bool,
) -> Result<DeltaTriple> {
    for value in [Some(&delta), dbar.as_ref(), dunder.as_ref()].into_iter().flatten() {
        if !denominator_divides(value, 16) {
            return Err(Error::Internal(format!(
                "delta value {value} has denominator not dividing 16"
            )));
        }
    }
    if let (Some(db), Some(du)) = (&dbar, &dunder) {
        if !(du <= &delta && &delta <= db) {
            return Err(Error::Internal(format!(
                "delta chain violated: {du} ≤ {delta} ≤ {db} fails"
            )));
        }
    }
    Ok(DeltaTriple {
        delta,
        dbar,
        dunder,
        provenance: provenance.to_string(),
        spherical,
    })
}

fn from_signature(sigma: i64, provenance: &str) -> Result<DeltaTriple> {
    let delta = rat(-sigma, 16);
    make_triple(delta.clone(), Some(delta.clone()), Some(delta), provenance, true)
}

fn montesinos_row(q: u64) -> (Rat, Rat, Rat, bool) {
    match q % 12 {
        11 => (rat(1, 2), rat(1, 2), rat_int(0), false),
        7 => (rat_int(0), rat_int(0), rat(-1, 2), false),
        1 => (rat_int(0), rat_int(0), rat_int(0), true),
        5 => (rat(1, 2), rat(1, 2), rat(1, 2), true),
        _ => unreachable!("validated Montesinos parameter is coprime to 6"),
    }
}

/// Computes the delta triple of a supported link descriptor.
pub fn delta_triple(link: &LinkDesc) -> Result<DeltaTriple> {
    link.validate()?;
    delta_inner(link)
}

fn delta_inner(link: &LinkDesc) -> Result<DeltaTriple> {
    match link {
        LinkDesc::Unknot => make_triple(
            rat_int(0),
            Some(rat_int(0)),
            Some(rat_int(0)),
            "spherical",
            true,
        ),
        LinkDesc::TwoBridge(p, q) => {
            from_signature(crate::links::link_signature(&LinkDesc::TwoBridge(*p, *q))?, "family-formula")
        }
        LinkDesc::Torus(p, q) => {
            let (p, q) = (*p, *q);
            if p == 2 || q == 2 {
                from_signature(
                    crate::links::link_signature(&LinkDesc::Torus(p, q))?,
                    "family-formula",
                )
            } else if p % 2 == 1 && q % 2 == 1 {
                let m = mubar(&SeifertData::new(vec![2, p, q])?)?;
                let delta = -m / rat_int(2);
                make_triple(
                    delta.clone(),
                    Some(delta.clone()),
                    Some(delta),
                    "family-formula",
                    true,
                )
            } else {
                Err(Error::Unsupported(format!(
                    "delta of the ({p},{q}) torus link requires gauge theory"
                )))
            }
        }
        LinkDesc::Montesinos236(q) => {
            let (dbar, delta, dunder, spherical) = montesinos_row(*q);
            make_triple(delta, Some(dbar), Some(dunder), "table", spherical)
        }
        LinkDesc::ConnectedSum(parts) => {
            let triples: Vec<DeltaTriple> =
                parts.iter().map(delta_inner).collect::<Result<_>>()?;
            let delta: Rat = triples.iter().map(|t| t.delta.clone()).sum();
            let spherical = triples.iter().all(|t| t.spherical);
            let (dbar, dunder) = if spherical {
                (Some(delta.clone()), Some(delta.clone()))
            } else {
                (None, None)
            };
            make_triple(delta, dbar, dunder, "sum/mirror-derived", spherical)
        }
        LinkDesc::Mirror(inner) => {
            let t = delta_inner(inner)?;
            make_triple(
                -t.delta,
                t.dunder.map(|v| -v),
                t.dbar.map(|v| -v),
                "sum/mirror-derived",
                t.spherical,
            )
        }
        LinkDesc::Marked { link, .. } => delta_inner(link),
        LinkDesc::SeifertMatrix(_) | LinkDesc::GoeritzMatrix { .. } => Err(Error::Unsupported(
            "delta of a bare matrix presentation requires gauge theory".into(),
        )),
    }
}

/// Shortcut for sphere classes: all three invariants equal −m/2 − n/2.
pub fn spherical_delta(class: &SpectrumClass) -> Result<Rat> {
    let compiled = validate_gcw(&class.x)?;
    let spherical = compiled.cell_count() == 1
        && class.x.dimension() == 0
        && class.x.level == 0;
    if !spherical {
        return Err(Error::Validation(
            "the spherical shortcut requires X = S⁰ at level 0".into(),
        ));
    }
    Ok(rat(-class.m, 2) - &class.n / rat_int(2))
}

/// Where a kappa value came from; kappa is always a validated input,
/// never computed here.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KappaSource {
    UserSupplied,
    Derived,
}

/// A candidate kappa value for one link.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KappaValue {
    #[serde(with = "serde_wire")]
    pub kappa: Rat,
    pub source: KappaSource,
}

/// Outcome of the two kappa consistency conditions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KappaReport {
    pub sigma: i64,
    /// (2κ + σ/8) reduced mod 2; zero iff the parity condition holds.
    #[serde(with = "serde_wire")]
    pub residue: Rat,
    pub parity_holds: bool,
    /// Same for the mirror, whose signature is −σ.
    #[serde(with = "serde_wire")]
    pub residue_mirror: Rat,
    pub parity_holds_mirror: bool,
    #[serde(with = "serde_wire")]
    pub kappa_sum: Rat,
    pub sum_nonnegative: bool,
    pub all_pass: bool,
}

fn mod_two(value: &Rat) -> Rat {
    let two = rat_int(2);
    value - (value / &two).floor() * two
}

/// Checks the parity condition 2κ + σ/8 ∈ 2Z for the link and its
/// mirror, and the positivity condition κ + κ_mirror ≥ 0.
pub fn kappa_checks(
    link: &LinkDesc,
    kappa: &KappaValue,
    kappa_mirror: &KappaValue,
) -> Result<KappaReport> {
    let sigma = crate::links::link_signature(link)?;
    let residue = mod_two(&(rat_int(2) * &kappa.kappa + rat(sigma, 8)));
    let residue_mirror = mod_two(&(rat_int(2) * &kappa_mirror.kappa + rat(-sigma, 8)));
    let kappa_sum = &kappa.kappa + &kappa_mirror.kappa;
    let parity_holds = residue == rat_int(0);
    let parity_holds_mirror = residue_mirror == rat_int(0);
    let sum_nonnegative = kappa_sum >= rat_int(0);
    Ok(KappaReport {
        sigma,
        residue,
        parity_holds,
        residue_mirror,
        parity_holds_mirror,
        kappa_sum,
        sum_nonnegative,
        all_pass: parity_holds && parity_holds_mirror && sum_nonnegative,
    })
}

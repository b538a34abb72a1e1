//! Homology of the double cover of D⁴ branched over a properly embedded
//! surface, and exact evaluators for the associated inequalities: the
//! delta inequality for surface cobordisms, the dbar/dunder variants,
//! the closed-manifold obstruction, and the non-orientable genus bound.
//!
//! Every evaluator is pure rational arithmetic on user-supplied
//! homological data; no topology is recomputed here, so each inequality
//! is testable in isolation.

use serde::{Deserialize, Serialize};

use crate::froyshov::DeltaTriple;
use crate::rat::{expect_integer, rat, rat_int, serde_wire, serde_wire_opt, Rat};
use crate::{Error, Result};

/// Homological data of a surface cobordism (X, S) between links: X is a
/// compact oriented four-manifold with boundary S³ ⊔ S³, S a properly
/// embedded surface in X with boundary the two links.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SurfaceCobordismData {
    pub bplus_x: i64,
    pub sigma_x: i64,
    pub b1_s: i64,
    /// Self-intersection (normal Euler) number of S.
    pub s_dot_s: i64,
    pub sigma_l: i64,
    pub sigma_lp: i64,
    /// ⟨c₁(s)², [Σ(S)]⟩ for a chosen spin-c structure, when known.
    #[serde(default, with = "serde_wire_opt")]
    pub c1_sq: Option<Rat>,
    #[serde(default)]
    pub spin: bool,
}

impl SurfaceCobordismData {
    fn validate(&self) -> Result<()> {
        if self.bplus_x < 0 {
            return Err(Error::Validation("bplus_x must be nonnegative".into()));
        }
        if self.b1_s < 0 {
            return Err(Error::Validation("b1_s must be nonnegative".into()));
        }
        Ok(())
    }
}

/// Homology of the branched double cover Σ(S) of X along S.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BranchedCoverHomology {
    pub sigma: i64,
    pub b2: i64,
    #[serde(with = "serde_wire")]
    pub bplus: Rat,
    pub b1: i64,
    pub b3: i64,
}

/// The three branched-cover quantities as unchecked rationals: signature,
/// second Betti number, and positive part. Used to test that the third
/// formula is forced by the first two.
pub fn branched_homology_raw(d: &SurfaceCobordismData) -> (Rat, Rat, Rat) {
    let sigma = rat_int(2 * d.sigma_x) - rat(d.s_dot_s, 2) - rat_int(d.sigma_l)
        + rat_int(d.sigma_lp);
    let b2 = rat_int(2 * (2 * d.bplus_x - d.sigma_x) + d.b1_s);
    let bplus = rat_int(2 * d.bplus_x) + rat(d.b1_s, 2) - rat(d.s_dot_s, 4)
        - rat(d.sigma_l, 2)
        + rat(d.sigma_lp, 2);
    (sigma, b2, bplus)
}

/// Computes the homology of the branched double cover, rejecting data
/// whose formulas yield non-integral or negative values.
pub fn branched_homology(d: &SurfaceCobordismData) -> Result<BranchedCoverHomology> {
    d.validate()?;
    let (sigma, b2, bplus) = branched_homology_raw(d);
    let sigma = expect_integer(&sigma, "signature of the branched cover")?;
    let b2 = expect_integer(&b2, "b2 of the branched cover")?;
    let bplus_int = expect_integer(&bplus, "bplus of the branched cover")?;
    use num_traits::{Signed, ToPrimitive};
    if bplus_int.is_negative() {
        return Err(Error::Validation(format!(
            "inconsistent data: branched cover bplus = {bplus_int} is negative"
        )));
    }
    let to_i64 = |v: num_bigint::BigInt, what: &str| {
        v.to_i64()
            .ok_or_else(|| Error::Unsupported(format!("{what} exceeds 64 bits")))
    };
    Ok(BranchedCoverHomology {
        sigma: to_i64(sigma, "signature")?,
        b2: to_i64(b2, "b2")?,
        bplus,
        b1: 0,
        b3: 0,
    })
}

/// The hypothesis quantity b⁺(X) + ½b₁(S) − ¼S∘S − ½σ(L) + ½σ(L′); it
/// equals the branched cover's b⁺ minus b⁺(X), so it is nonnegative for
/// consistent data.
pub fn cobordism_hypothesis(d: &SurfaceCobordismData) -> Rat {
    rat_int(d.bplus_x) + rat(d.b1_s, 2) - rat(d.s_dot_s, 4) - rat(d.sigma_l, 2)
        + rat(d.sigma_lp, 2)
}

/// Report of the delta inequality for a surface cobordism.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Ineq1Report {
    #[serde(with = "serde_wire")]
    pub hypothesis: Rat,
    /// The inequality only applies when the hypothesis quantity is zero.
    pub hypothesis_holds: bool,
    /// False when the hypothesis quantity is negative, which no actual
    /// cobordism can produce.
    pub consistent: bool,
    #[serde(with = "serde_wire")]
    pub lhs: Rat,
    #[serde(with = "serde_wire")]
    pub rhs: Rat,
    /// lhs ≤ rhs; meaningful only when the hypothesis holds. A violation
    /// under a holding hypothesis certifies that no such surface and
    /// spin-c data exist.
    pub satisfied: bool,
}

/// Evaluates δ(L) + (1/16)(c₁² − 2σ(X) − ½S∘S − σ(L) + σ(L′)) ≤ δ(L′).
pub fn check_ineq1(d: &SurfaceCobordismData, delta_l: &Rat, delta_lp: &Rat) -> Result<Ineq1Report> {
    d.validate()?;
    let c1_sq = d.c1_sq.clone().ok_or_else(|| {
        Error::Validation("the delta inequality needs c1_sq in the cobordism data".into())
    })?;
    let hypothesis = cobordism_hypothesis(d);
    let correction = (c1_sq
        - rat_int(2 * d.sigma_x)
        - rat(d.s_dot_s, 2)
        - rat_int(d.sigma_l)
        + rat_int(d.sigma_lp))
        / rat_int(16);
    let lhs = delta_l + correction;
    let rhs = delta_lp.clone();
    Ok(Ineq1Report {
        hypothesis_holds: hypothesis == rat_int(0),
        consistent: hypothesis >= rat_int(0),
        hypothesis,
        satisfied: lhs <= rhs,
        lhs,
        rhs,
    })
}

/// One evaluated inequality in a dbar/dunder report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IneqLine {
    pub name: String,
    #[serde(with = "serde_wire")]
    pub lhs: Rat,
    #[serde(with = "serde_wire")]
    pub rhs: Rat,
    pub satisfied: bool,
}

/// Which branch of the dbar/dunder evaluation applied.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ineq2Branch {
    /// Hypothesis quantity zero: both one-sided inequalities.
    Parallel,
    /// Hypothesis quantity one: the mixed dunder-to-dbar inequality.
    Mixed,
    /// Hypothesis quantity neither zero nor one: nothing to evaluate.
    Inapplicable,
}

/// Report of the dbar/dunder inequalities for a surface cobordism.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Ineq2Report {
    /// Hypothesis quantity in the ½b₁(S) form used for branching.
    #[serde(with = "serde_wire")]
    pub hypothesis: Rat,
    /// The same quantity with b₁(S) in place of ½b₁(S); the source
    /// statement is ambiguous between the two, so both are reported.
    #[serde(with = "serde_wire")]
    pub hypothesis_genus_form: Rat,
    pub hypothesis_forms_disagree: bool,
    pub branch: Ineq2Branch,
    /// The mixed branch additionally requires a spin structure.
    pub spin_required_and_missing: bool,
    pub lines: Vec<IneqLine>,
    pub all_satisfied: bool,
}

/// Evaluates the dbar and dunder inequalities (hypothesis quantity 0) or
/// the mixed dunder-to-dbar inequality (hypothesis quantity 1, spin
/// required), with correction (1/16)(−2σ(X) + ½S∘S + σ(L) − σ(L′)).
pub fn check_ineq2_and_theorem_b(
    d: &SurfaceCobordismData,
    source: &DeltaTriple,
    target: &DeltaTriple,
) -> Result<Ineq2Report> {
    d.validate()?;
    let hypothesis = cobordism_hypothesis(d);
    let hypothesis_genus_form = &hypothesis + rat(d.b1_s, 2);
    let correction = (rat_int(-2 * d.sigma_x) + rat(d.s_dot_s, 2) + rat_int(d.sigma_l)
        - rat_int(d.sigma_lp))
        / rat_int(16);
    let need = |value: &Option<Rat>, what: &str| -> Result<Rat> {
        value.clone().ok_or_else(|| {
            Error::Validation(format!("the {what} value is unavailable for this triple"))
        })
    };
    let mut lines = Vec::new();
    let mut spin_required_and_missing = false;
    let branch = if hypothesis == rat_int(0) {
        let lhs = need(&source.dbar, "dbar")? + &correction;
        let rhs = need(&target.dbar, "dbar")?;
        lines.push(IneqLine {
            name: "dbar".into(),
            satisfied: lhs <= rhs,
            lhs,
            rhs,
        });
        let lhs = need(&source.dunder, "dunder")? + &correction;
        let rhs = need(&target.dunder, "dunder")?;
        lines.push(IneqLine {
            name: "dunder".into(),
            satisfied: lhs <= rhs,
            lhs,
            rhs,
        });
        Ineq2Branch::Parallel
    } else if hypothesis == rat_int(1) {
        if d.spin {
            let lhs = need(&source.dunder, "dunder")? + &correction;
            let rhs = need(&target.dbar, "dbar")?;
            lines.push(IneqLine {
                name: "dunder-to-dbar".into(),
                satisfied: lhs <= rhs,
                lhs,
                rhs,
            });
            Ineq2Branch::Mixed
        } else {
            spin_required_and_missing = true;
            Ineq2Branch::Inapplicable
        }
    } else {
        Ineq2Branch::Inapplicable
    };
    let all_satisfied = branch != Ineq2Branch::Inapplicable && lines.iter().all(|l| l.satisfied);
    Ok(Ineq2Report {
        hypothesis_forms_disagree: hypothesis != hypothesis_genus_form,
        hypothesis,
        hypothesis_genus_form,
        branch,
        spin_required_and_missing,
        lines,
        all_satisfied,
    })
}

/// Report of the closed-manifold obstruction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClosedReport {
    /// The evaluation applies only when b⁺ equals its invariant part.
    pub applicable: bool,
    #[serde(with = "serde_wire")]
    pub value: Rat,
    /// True when applicable and c₁² − σ > 0: no smooth odd involution
    /// with the stated homological action exists.
    pub obstruction_fires: bool,
}

/// Evaluates c₁² − σ(W) ≤ 0 for a closed manifold whose b⁺ is entirely
/// invariant under the involution.
pub fn check_closed(c1_sq: &Rat, sigma_w: i64, bplus: i64, bplus_inv: i64) -> ClosedReport {
    let applicable = bplus == bplus_inv;
    let value = c1_sq - rat_int(sigma_w);
    ClosedReport {
        applicable,
        obstruction_fires: applicable && value > rat_int(0),
        value,
    }
}

/// Which lower bound for b₁ is in force.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActiveBound {
    Classical,
    Strengthened,
}

/// Report of the non-orientable first Betti number bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct UnorientedBoundReport {
    pub hypotheses_met: bool,
    pub classical: i64,
    pub strengthened: Option<i64>,
    pub bound: i64,
    pub active: ActiveBound,
}

/// Lower bound for b₁ of a non-orientable surface in D⁴ with boundary
/// the knot: always the classical |σ − e/2|, improved to
/// max(|σ − e/2|, −σ + e/2 + 1) when det = 1, the Manolescu–Owens
/// invariant vanishes, and delta is negative.
pub fn unoriented_bound(
    sigma_k: i64,
    e: i64,
    delta_k: &Rat,
    det_k: u64,
    mo_delta_zero: bool,
) -> Result<UnorientedBoundReport> {
    if e % 2 != 0 {
        return Err(Error::Validation(format!(
            "normal Euler number must be even, got {e}"
        )));
    }
    let classical = (sigma_k - e / 2).abs();
    let hypotheses_met = det_k == 1 && mo_delta_zero && *delta_k < rat_int(0);
    if hypotheses_met {
        let strengthened = -sigma_k + e / 2 + 1;
        let (bound, active) = if strengthened > classical {
            (strengthened, ActiveBound::Strengthened)
        } else {
            (classical, ActiveBound::Classical)
        };
        Ok(UnorientedBoundReport {
            hypotheses_met,
            classical,
            strengthened: Some(strengthened),
            bound,
            active,
        })
    } else {
        Ok(UnorientedBoundReport {
            hypotheses_met,
            classical,
            strengthened: None,
            bound: classical,
            active: ActiveBound::Classical,
        })
    }
}

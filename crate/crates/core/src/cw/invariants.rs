//! The invariants d (order-two group) and d̄, d̲ (order-four group), plus
//! their rational shifts for formally desuspended classes and the
//! arithmetic checker for asserted local maps.

use crate::f2::F2Matrix;
use crate::rat::{rat_int, Rat};
use crate::{Error, Result};

use super::borel::Engine;
use super::{validate_swf, GCWComplex, Group};

fn is_nonzero(m: &F2Matrix) -> bool {
    (0..m.nrows()).any(|i| !m.row(i).is_zero())
}

/// Minimal degree carrying a class with nonzero restriction to the fixed
/// subcomplex. Requires the order-two group.
pub fn d_invariant(x: &GCWComplex) -> Result<i64> {
    d_invariant_with_bound(x, x.dimension() + 12)
}

/// As [`d_invariant`] with an explicit truncation bound, at least
/// `dim X + 4`. The result does not depend on the bound.
pub fn d_invariant_with_bound(x: &GCWComplex, bound: u32) -> Result<i64> {
    if x.group != Group::Z2 {
        return Err(Error::Validation(
            "the d invariant requires the order-two group".into(),
        ));
    }
    let compiled = validate_swf(x)?;
    let dim = x.dimension();
    if bound < dim + 4 {
        return Err(Error::Validation(format!(
            "truncation bound {bound} is below the required dim X + 4 = {}",
            dim + 4
        )));
    }
    let engine = Engine::new(compiled, bound as usize);
    for m in 0..=(dim as usize + 4) {
        if is_nonzero(&engine.restriction_matrix(m)?) {
            return Ok(m as i64);
        }
    }
    Err(Error::Internal(format!(
        "no class with nonzero restriction in degrees 0..={}",
        dim + 4
    )))
}

/// Returns (d̄, d̲) for an order-four complex of declared level s: d̄ is
/// the minimal degree of the parity of s carrying a class that survives
/// the periodicity operator, and d̲ is the minimal such degree of the
/// opposite parity, minus one.
pub fn dbar_dunder(x: &GCWComplex) -> Result<(i64, i64)> {
    dbar_dunder_with_bound(x, x.dimension() + 12)
}

/// As [`dbar_dunder`] with an explicit truncation bound, at least
/// `dim X + 8`. The result does not depend on the bound.
pub fn dbar_dunder_with_bound(x: &GCWComplex, bound: u32) -> Result<(i64, i64)> {
    if x.group != Group::Z4 {
        return Err(Error::Validation(
            "the d̄ and d̲ invariants require the order-four group".into(),
        ));
    }
    let compiled = validate_swf(x)?;
    let dim = x.dimension() as usize;
    if (bound as usize) < dim + 8 {
        return Err(Error::Validation(format!(
            "truncation bound {bound} is below the required dim X + 8 = {}",
            dim + 8
        )));
    }
    let engine = Engine::new(compiled, bound as usize);

    let u_power_nonzero = |m: usize, l: usize| -> Result<bool> {
        if engine.dim(m) == 0 {
            return Ok(false);
        }
        if l == 0 {
            return Ok(true);
        }
        let mut composite = engine.period_matrix(m)?;
        for step in 1..l {
            composite = composite.mul(&engine.period_matrix(m + 2 * step)?);
        }
        Ok(is_nonzero(&composite))
    };
    let survives = |m: usize| -> Result<bool> {
        let l0 = (dim + 3).saturating_sub(m).div_ceil(2);
        let first = u_power_nonzero(m, l0)?;
        for extra in 1..=2 {
            if u_power_nonzero(m, l0 + extra)? != first {
                return Err(Error::Internal(format!(
                    "periodicity survival unstable in degree {m}"
                )));
            }
        }
        Ok(first)
    };
    let minimum = |parity: usize| -> Result<i64> {
        let mut m = parity;
        while m <= dim + 2 {
            if survives(m)? {
                return Ok(m as i64);
            }
            m += 2;
        }
        Err(Error::Internal(format!(
            "no surviving class of parity {parity} in degrees 0..={}",
            dim + 2
        )))
    };

    let s = x.level as usize % 2;
    let dbar = minimum(s)?;
    let dunder = minimum(1 - s)? - 1;
    Ok((dbar, dunder))
}

/// A formally desuspended complex: the class of X shifted down by m
/// suspensions on the sphere side and n on the representation side.
#[derive(Clone, Debug)]
pub struct SpectrumClass {
    pub x: GCWComplex,
    pub m: i64,
    pub n: Rat,
}

/// The shifted invariants of a spectrum class, as exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpectrumInvariants {
    Z2 { d: Rat },
    Z4 { dbar: Rat, dunder: Rat },
}

/// d(X,m,n) = d(X) − m − n for the order-two group; d̄/d̲(X,m,n) =
/// d̄/d̲(X) − m − 2n for the order-four group.
pub fn spectrum_invariants(s: &SpectrumClass) -> Result<SpectrumInvariants> {
    let m = rat_int(s.m);
    match s.x.group {
        Group::Z2 => {
            let d = rat_int(d_invariant(&s.x)?) - &m - &s.n;
            Ok(SpectrumInvariants::Z2 { d })
        }
        Group::Z4 => {
            let (dbar, dunder) = dbar_dunder(&s.x)?;
            let shift = m + rat_int(2) * &s.n;
            Ok(SpectrumInvariants::Z4 {
                dbar: rat_int(dbar) - &shift,
                dunder: rat_int(dunder) - &shift,
            })
        }
    }
}

/// One evaluated inequality of a local-map height check.
#[derive(Clone, Debug)]
pub struct HeightCheck {
    pub name: &'static str,
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

/// The full report: every inequality a local map of the given height
/// would have to satisfy, with an overall verdict.
#[derive(Clone, Debug)]
pub struct HeightReport {
    pub checks: Vec<HeightCheck>,
    pub all_hold: bool,
}

/// Checks the height inequalities for an asserted local map from
/// `source` to `target` of the given height: d + l ≤ d′ for the
/// order-two group; d̄ + 2l ≤ d̄′, d̲ + 2l ≤ d̲′, and the cross variant
/// d̲ + 2l ≤ d̄′ for the order-four group. This validates asserted maps;
/// it does not construct them.
pub fn local_map_height_check(
    source: &SpectrumInvariants,
    target: &SpectrumInvariants,
    height: &Rat,
) -> Result<HeightReport> {
    let check = |name: &'static str, lhs: Rat, rhs: &Rat| HeightCheck {
        name,
        holds: lhs <= *rhs,
        lhs,
        rhs: rhs.clone(),
    };
    let checks = match (source, target) {
        (SpectrumInvariants::Z2 { d }, SpectrumInvariants::Z2 { d: d2 }) => {
            vec![check("d", d + height, d2)]
        }
        (
            SpectrumInvariants::Z4 { dbar, dunder },
            SpectrumInvariants::Z4 {
                dbar: dbar2,
                dunder: dunder2,
            },
        ) => {
            let two_l = rat_int(2) * height;
            vec![
                check("dbar", dbar + &two_l, dbar2),
                check("dunder", dunder + &two_l, dunder2),
                check("dunder-to-dbar", dunder + &two_l, dbar2),
            ]
        }
        _ => {
            return Err(Error::Validation(
                "height check requires invariants for the same group".into(),
            ))
        }
    };
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(HeightReport { checks, all_hold })
}

#[cfg(test)]
mod tests {
    use super::super::models::{free_circle_z2, gtilde, sphere_zero};
    use super::super::{restrict_to_h, smash, suspend, Representation};
    use super::*;
    use crate::rat::rat;

    #[test]
    fn sphere_invariants_vanish() {
        assert_eq!(d_invariant(&sphere_zero(Group::Z2)).unwrap(), 0);
        assert_eq!(dbar_dunder(&sphere_zero(Group::Z4)).unwrap(), (0, 0));
    }

    #[test]
    fn suspension_of_free_orbit() {
        assert_eq!(dbar_dunder(&gtilde(Group::Z4)).unwrap(), (2, 0));
        assert_eq!(d_invariant(&gtilde(Group::Z2)).unwrap(), 1);
        assert_eq!(d_invariant(&restrict_to_h(&gtilde(Group::Z4)).unwrap()).unwrap(), 1);
    }

    #[test]
    fn suspensions_shift_invariants() {
        let s2 = sphere_zero(Group::Z2);
        let s4 = sphere_zero(Group::Z4);
        assert_eq!(
            d_invariant(&suspend(&s2, Representation::Rtilde, 1).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            dbar_dunder(&suspend(&s4, Representation::Rtilde, 1).unwrap()).unwrap(),
            (1, 1)
        );
        assert_eq!(
            dbar_dunder(&suspend(&s4, Representation::C, 1).unwrap()).unwrap(),
            (2, 2)
        );
        assert_eq!(
            dbar_dunder(&suspend(&gtilde(Group::Z4), Representation::Rtilde, 2).unwrap()).unwrap(),
            (4, 2)
        );
    }

    #[test]
    fn smash_of_free_orbit_suspensions() {
        let g = gtilde(Group::Z4);
        let gg = smash(&g, &g).unwrap();
        assert_eq!(gg.level, 0);
        let (dbar, dunder) = dbar_dunder(&gg).unwrap();
        assert!(dunder >= 0);
        assert!(dunder <= dbar);
        assert_eq!((dbar - dunder) % 2, 0);

        let g2 = gtilde(Group::Z2);
        let gg2 = smash(&g2, &g2).unwrap();
        assert!(d_invariant(&gg2).unwrap() >= 2 * d_invariant(&g2).unwrap());
    }

    #[test]
    fn invariants_reject_wrong_group_and_non_swf() {
        assert!(d_invariant(&sphere_zero(Group::Z4)).is_err());
        assert!(dbar_dunder(&sphere_zero(Group::Z2)).is_err());
        assert!(d_invariant(&free_circle_z2()).is_err());
    }

    #[test]
    fn truncation_bound_does_not_change_results() {
        let g = gtilde(Group::Z4);
        let base = g.dimension() + 8;
        let reference = dbar_dunder_with_bound(&g, base).unwrap();
        assert_eq!(dbar_dunder_with_bound(&g, base + 2).unwrap(), reference);
        assert_eq!(dbar_dunder_with_bound(&g, base + 4).unwrap(), reference);
        let g2 = gtilde(Group::Z2);
        let d0 = d_invariant_with_bound(&g2, g2.dimension() + 4).unwrap();
        assert_eq!(d_invariant_with_bound(&g2, g2.dimension() + 6).unwrap(), d0);
        assert!(dbar_dunder_with_bound(&g, 3).is_err());
    }

    #[test]
    fn spectrum_shifts() {
        let gt = SpectrumClass {
            x: gtilde(Group::Z4),
            m: 0,
            n: rat(1, 4),
        };
        assert_eq!(
            spectrum_invariants(&gt).unwrap(),
            SpectrumInvariants::Z4 {
                dbar: rat(3, 2),
                dunder: rat(-1, 2),
            }
        );
        let sp = SpectrumClass {
            x: sphere_zero(Group::Z4),
            m: 0,
            n: rat(-1, 4),
        };
        assert_eq!(
            spectrum_invariants(&sp).unwrap(),
            SpectrumInvariants::Z4 {
                dbar: rat(1, 2),
                dunder: rat(1, 2),
            }
        );
        let zero = SpectrumClass {
            x: sphere_zero(Group::Z2),
            m: 0,
            n: rat_int(0),
        };
        assert_eq!(
            spectrum_invariants(&zero).unwrap(),
            SpectrumInvariants::Z2 { d: rat_int(0) }
        );
    }

    #[test]
    fn spherical_duality() {
        for (m, n) in [(0i64, rat(1, 4)), (2, rat(-3, 4)), (-1, rat_int(2))] {
            let plus = SpectrumClass {
                x: sphere_zero(Group::Z4),
                m,
                n: n.clone(),
            };
            let minus = SpectrumClass {
                x: sphere_zero(Group::Z4),
                m: -m,
                n: -n.clone(),
            };
            let (i_plus, i_minus) = (
                spectrum_invariants(&plus).unwrap(),
                spectrum_invariants(&minus).unwrap(),
            );
            if let (
                SpectrumInvariants::Z4 { dunder, .. },
                SpectrumInvariants::Z4 { dbar, .. },
            ) = (i_plus, i_minus)
            {
                assert_eq!(dunder, -dbar);
            } else {
                unreachable!();
            }
        }
    }

    #[test]
    fn height_checks() {
        let z2 = |d: i64| SpectrumInvariants::Z2 { d: rat_int(d) };
        let report = local_map_height_check(&z2(0), &z2(0), &rat_int(0)).unwrap();
        assert!(report.all_hold);

        let z4 = |dbar: i64, dunder: i64| SpectrumInvariants::Z4 {
            dbar: rat_int(dbar),
            dunder: rat_int(dunder),
        };
        let report = local_map_height_check(&z4(0, 0), &z4(2, 2), &rat_int(1)).unwrap();
        assert!(report.all_hold);
        assert!(report.checks.iter().all(|c| c.holds));

        let report = local_map_height_check(&z4(0, 0), &z4(0, 0), &rat_int(1)).unwrap();
        assert!(!report.all_hold);
        let cross = report
            .checks
            .iter()
            .find(|c| c.name == "dunder-to-dbar")
            .unwrap();
        assert!(!cross.holds);
        assert_eq!(cross.lhs, rat_int(2));

        assert!(local_map_height_check(&z2(0), &z4(0, 0), &rat_int(0)).is_err());
    }
}

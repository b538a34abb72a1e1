//! Symbolic link descriptors and their classical invariants.
//!
//! The supported families carry two independent computation paths
//! (closed-form production route and explicit-diagram Seifert oracle) that
//! the test suite compares exhaustively on the small-parameter range.

mod torus;
mod twobridge;

pub use torus::{torus_seifert_matrix, torus_signature_counting};
pub use twobridge::{twobridge_seifert_matrix, twobridge_signature};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::forms::{determinant, signature, IntSymForm};
use crate::{Error, Result};

/// A link described symbolically or by an explicit matrix presentation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkDesc {
    /// The (p, q) torus knot, `gcd(p, q) = 1`, both parameters at least 2.
    Torus(u64, u64),
    /// The two-bridge knot K(p, q), p odd, `0 < q < p` coprime; p = 1 is
    /// the unknot.
    TwoBridge(u64, u64),
    /// The Montesinos knot M(2, 3, n) for n = 5 or congruent to 1 or 5
    /// mod 6.
    Montesinos236(u64),
    /// A link presented by an explicit integer Seifert matrix.
    #[serde(rename = "seifert")]
    SeifertMatrix(Vec<Vec<i64>>),
    /// A link presented by a symmetric Goeritz matrix together with its
    /// correction term; the signature is `signature(form) - correction`.
    #[serde(rename = "goeritz")]
    GoeritzMatrix {
        form: Vec<Vec<i64>>,
        correction: i64,
    },
    /// Connected sum of the parts; the empty sum is the unknot.
    #[serde(rename = "sum")]
    ConnectedSum(Vec<LinkDesc>),
    /// Mirror image.
    Mirror(Box<LinkDesc>),
    Unknot,
    /// A link carrying an opaque orientation marker; the marker is
    /// preserved through serialization but never interpreted.
    Marked { link: Box<LinkDesc>, marker: String },
}

/// Signature and determinant of a link.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub signature: i64,
    pub determinant: u64,
}

impl LinkDesc {
    /// Checks the parameter constraints of every node in the descriptor.
    pub fn validate(&self) -> Result<()> {
        match self {
            LinkDesc::Torus(p, q) => torus::validate_torus(*p, *q),
            LinkDesc::TwoBridge(p, q) => twobridge::validate_twobridge(*p, *q),
            LinkDesc::Montesinos236(n) => {
                if *n < 5 || (*n % 6 != 1 && *n % 6 != 5) {
                    Err(Error::Validation(format!(
                        "Montesinos parameter must be at least 5 and congruent to 1 or 5 mod 6, got {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            LinkDesc::SeifertMatrix(v) => check_square(v).map(|_| ()),
            LinkDesc::GoeritzMatrix { form, .. } => {
                IntSymForm::new(form.clone()).map(|_| ())
            }
            LinkDesc::ConnectedSum(parts) => parts.iter().try_for_each(LinkDesc::validate),
            LinkDesc::Mirror(inner) => inner.validate(),
            LinkDesc::Unknot => Ok(()),
            LinkDesc::Marked { link, .. } => link.validate(),
        }
    }

    /// Strips `Marked` wrappers.
    pub fn unmarked(&self) -> &LinkDesc {
        match self {
            LinkDesc::Marked { link, .. } => link.unmarked(),
            other => other,
        }
    }
}

fn check_square(v: &[Vec<i64>]) -> Result<usize> {
    let n = v.len();
    for (i, row) in v.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Validation(format!(
                "matrix is not square: row {} has length {}, expected {}",
                i,
                row.len(),
                n
            )));
        }
    }
    Ok(n)
}

/// `V + V^T` of a square integer matrix, as a symmetric form.
pub fn symmetrized(v: &[Vec<i64>]) -> Result<IntSymForm> {
    let n = check_square(v)?;
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            entries[i][j] = v[i][j].checked_add(v[j][i]).ok_or_else(|| {
                Error::Validation(format!("entry overflow at ({i}, {j}) in V + V^T"))
            })?;
        }
    }
    IntSymForm::new(entries)
}

/// Signature of `V + V^T` for a Seifert matrix `V`.
pub fn seifert_signature(v: &[Vec<i64>]) -> Result<i64> {
    Ok(signature(&symmetrized(v)?))
}

/// `|det(V + V^T)|` for a Seifert matrix `V`.
pub fn seifert_determinant(v: &[Vec<i64>]) -> Result<u64> {
    big_to_u64(determinant(&symmetrized(v)?).abs())
}

fn big_to_u64(d: BigInt) -> Result<u64> {
    d.to_u64()
        .ok_or_else(|| Error::Unsupported("determinant exceeds 64 bits".into()))
}

const MAX_TORUS_DETERMINANT_RANK: u64 = 4096;

/// Signature of the link.
pub fn link_signature(link: &LinkDesc) -> Result<i64> {
    link.validate()?;
    signature_inner(link)
}

fn signature_inner(link: &LinkDesc) -> Result<i64> {
    match link {
        LinkDesc::Torus(p, q) => Ok(torus_signature_counting(*p, *q)),
        LinkDesc::TwoBridge(p, q) => Ok(twobridge_signature(*p, *q)),
        LinkDesc::Montesinos236(_) => Err(Error::Unsupported(
            "signature of a Montesinos descriptor is available only through a matrix presentation supplied by the caller"
                .into(),
        )),
        LinkDesc::SeifertMatrix(v) => seifert_signature(v),
        LinkDesc::GoeritzMatrix { form, correction } => {
            Ok(signature(&IntSymForm::new(form.clone())?) - correction)
        }
        LinkDesc::ConnectedSum(parts) => parts.iter().map(signature_inner).sum(),
        LinkDesc::Mirror(inner) => Ok(-signature_inner(inner)?),
        LinkDesc::Unknot => Ok(0),
        LinkDesc::Marked { link, .. } => signature_inner(link),
    }
}

/// Determinant of the link, always nonnegative.
pub fn link_determinant(link: &LinkDesc) -> Result<u64> {
    link.validate()?;
    big_to_u64(determinant_inner(link)?)
}

fn determinant_inner(link: &LinkDesc) -> Result<BigInt> {
    match link {
        LinkDesc::Torus(p, q) => {
            if (p - 1) * (q - 1) > MAX_TORUS_DETERMINANT_RANK {
                return Err(Error::Unsupported(format!(
                    "torus Seifert matrix rank exceeds {MAX_TORUS_DETERMINANT_RANK}"
                )));
            }
            let v = torus_seifert_matrix(*p, *q);
            Ok(determinant(&symmetrized(&v)?).abs())
        }
        LinkDesc::TwoBridge(p, _) => Ok(BigInt::from(*p)),
        LinkDesc::Montesinos236(_) => Ok(BigInt::one()),
        LinkDesc::SeifertMatrix(v) => Ok(determinant(&symmetrized(v)?).abs()),
        LinkDesc::GoeritzMatrix { form, .. } => {
            Ok(determinant(&IntSymForm::new(form.clone())?).abs())
        }
        LinkDesc::ConnectedSum(parts) => {
            let mut acc = BigInt::one();
            for part in parts {
                acc *= determinant_inner(part)?;
            }
            Ok(acc)
        }
        LinkDesc::Mirror(inner) => determinant_inner(inner),
        LinkDesc::Unknot => Ok(BigInt::one()),
        LinkDesc::Marked { link, .. } => determinant_inner(link),
    }
}

/// Both classical invariants.
pub fn classical_invariants(link: &LinkDesc) -> Result<ClassicalInvariants> {
    Ok(ClassicalInvariants {
        signature: link_signature(link)?,
        determinant: link_determinant(link)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn torus(p: u64, q: u64) -> LinkDesc {
        LinkDesc::Torus(p, q)
    }

    #[test]
    fn json_round_trips() {
        let cases = vec![
            (json!({"torus": [3, 7]}), torus(3, 7)),
            (json!({"twobridge": [3, 1]}), LinkDesc::TwoBridge(3, 1)),
            (json!({"montesinos236": 11}), LinkDesc::Montesinos236(11)),
            (
                json!({"seifert": [[-1, 1], [0, -1]]}),
                LinkDesc::SeifertMatrix(vec![vec![-1, 1], vec![0, -1]]),
            ),
            (
                json!({"goeritz": {"form": [[3]], "correction": 1}}),
                LinkDesc::GoeritzMatrix {
                    form: vec![vec![3]],
                    correction: 1,
                },
            ),
            (
                json!({"sum": [{"torus": [2, 3]}, "unknot"]}),
                LinkDesc::ConnectedSum(vec![torus(2, 3), LinkDesc::Unknot]),
            ),
            (
                json!({"mirror": {"torus": [2, 3]}}),
                LinkDesc::Mirror(Box::new(torus(2, 3))),
            ),
            (json!("unknot"), LinkDesc::Unknot),
            (
                json!({"marked": {"link": "unknot", "marker": "tag"}}),
                LinkDesc::Marked {
                    link: Box::new(LinkDesc::Unknot),
                    marker: "tag".into(),
                },
            ),
        ];
        for (value, desc) in cases {
            let parsed: LinkDesc = serde_json::from_value(value.clone()).unwrap();
            assert_eq!(parsed, desc);
            assert_eq!(serde_json::to_value(&desc).unwrap(), value);
        }
    }

    #[test]
    fn trefoil_invariants() {
        let t23 = classical_invariants(&torus(2, 3)).unwrap();
        assert_eq!(t23.signature, -2);
        assert_eq!(t23.determinant, 3);
        let k31 = classical_invariants(&LinkDesc::TwoBridge(3, 1)).unwrap();
        assert_eq!(k31.signature, -2);
        assert_eq!(k31.determinant, 3);
    }

    #[test]
    fn unknot_and_sum_and_mirror() {
        assert_eq!(
            classical_invariants(&LinkDesc::Unknot).unwrap(),
            ClassicalInvariants { signature: 0, determinant: 1 }
        );
        let mirror = LinkDesc::Mirror(Box::new(torus(2, 3)));
        assert_eq!(
            classical_invariants(&mirror).unwrap(),
            ClassicalInvariants { signature: 2, determinant: 3 }
        );
        let sum = LinkDesc::ConnectedSum(vec![torus(2, 3), mirror]);
        assert_eq!(
            classical_invariants(&sum).unwrap(),
            ClassicalInvariants { signature: 0, determinant: 9 }
        );
        assert_eq!(
            classical_invariants(&LinkDesc::ConnectedSum(vec![])).unwrap(),
            ClassicalInvariants { signature: 0, determinant: 1 }
        );
    }

    #[test]
    fn torus_3_7() {
        let inv = classical_invariants(&torus(3, 7)).unwrap();
        assert_eq!(inv.signature, -8);
        assert_eq!(inv.determinant, 1);
    }

    #[test]
    fn montesinos_paths() {
        let m = LinkDesc::Montesinos236(7);
        assert!(matches!(link_signature(&m), Err(Error::Unsupported(_))));
        assert_eq!(link_determinant(&m).unwrap(), 1);
        assert!(LinkDesc::Montesinos236(9).validate().is_err());
        assert!(LinkDesc::Montesinos236(1).validate().is_err());
    }

    #[test]
    fn explicit_matrices() {
        let seifert = LinkDesc::SeifertMatrix(vec![vec![-1, 1], vec![0, -1]]);
        let inv = classical_invariants(&seifert).unwrap();
        assert_eq!(inv.signature, -2);
        assert_eq!(inv.determinant, 3);
        let goeritz = LinkDesc::GoeritzMatrix {
            form: vec![vec![2, -1], vec![-1, 3]],
            correction: 4,
        };
        assert_eq!(link_signature(&goeritz).unwrap(), -2);
        assert_eq!(link_determinant(&goeritz).unwrap(), 5);
    }

    #[test]
    fn marked_is_transparent() {
        let marked = LinkDesc::Marked {
            link: Box::new(torus(2, 5)),
            marker: "reversed".into(),
        };
        assert_eq!(link_signature(&marked).unwrap(), -4);
        assert_eq!(marked.unmarked(), &torus(2, 5));
    }

    #[test]
    fn twobridge_agrees_with_torus_on_shared_knots() {
        for q in (3..=25u64).step_by(2) {
            assert_eq!(
                link_signature(&LinkDesc::TwoBridge(q, 1)).unwrap(),
                link_signature(&torus(2, q)).unwrap(),
                "K({q},1) vs T(2,{q})"
            );
            assert_eq!(
                link_determinant(&LinkDesc::TwoBridge(q, 1)).unwrap(),
                link_determinant(&torus(2, q)).unwrap()
            );
        }
    }

    #[test]
    fn unknot_two_bridge_alias() {
        assert_eq!(link_signature(&LinkDesc::TwoBridge(1, 0)).unwrap(), 0);
        assert_eq!(link_determinant(&LinkDesc::TwoBridge(1, 1)).unwrap(), 1);
    }

    #[test]
    fn validation_rejections() {
        assert!(torus(2, 4).validate().is_err());
        assert!(torus(1, 3).validate().is_err());
        assert!(LinkDesc::TwoBridge(4, 1).validate().is_err());
        assert!(LinkDesc::SeifertMatrix(vec![vec![0, 1]]).validate().is_err());
        assert!(LinkDesc::GoeritzMatrix { form: vec![vec![0, 1], vec![2, 0]], correction: 0 }
            .validate()
            .is_err());
        let nested = LinkDesc::ConnectedSum(vec![torus(2, 3), torus(2, 2)]);
        assert!(nested.validate().is_err());
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn mirror_negates_signature_and_keeps_determinant(p in 2u64..8, q in 2u64..12) {
            prop_assume!(LinkDesc::Torus(p, q).validate().is_ok());
            let link = torus(p, q);
            let mirror = LinkDesc::Mirror(Box::new(link.clone()));
            prop_assert_eq!(
                link_signature(&mirror).unwrap(),
                -link_signature(&link).unwrap()
            );
            prop_assert_eq!(
                link_determinant(&mirror).unwrap(),
                link_determinant(&link).unwrap()
            );
        }

        #[test]
        fn sum_adds_signatures_and_multiplies_determinants(
            p1 in 1u64..14, q1 in 1u64..14, p2 in 1u64..14, q2 in 1u64..14
        ) {
            let a = LinkDesc::TwoBridge(2 * p1 + 1, q1);
            let b = LinkDesc::TwoBridge(2 * p2 + 1, q2);
            prop_assume!(a.validate().is_ok() && b.validate().is_ok());
            let sum = LinkDesc::ConnectedSum(vec![a.clone(), b.clone()]);
            prop_assert_eq!(
                link_signature(&sum).unwrap(),
                link_signature(&a).unwrap() + link_signature(&b).unwrap()
            );
            prop_assert_eq!(
                link_determinant(&sum).unwrap(),
                link_determinant(&a).unwrap() * link_determinant(&b).unwrap()
            );
        }
    }
}

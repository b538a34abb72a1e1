//! Star-shaped plumbings bounding Seifert integral homology spheres, their
//! intersection lattices, integral Wu classes, and the mu-bar invariant.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::forms::{characteristic_solutions_mod2, inertia, signature, IntSymForm};
use crate::links::torus_signature_counting;
use crate::rat::{rat_int, Rat};
use crate::{Error, Result};

const MAX_MULTIPLICITY_PRODUCT: u64 = 1_000_000;
const MAX_VERTICES: usize = 1024;

/// Multiplicities of a Seifert homology sphere `Sigma(a_1, ..., a_n)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeifertData {
    #[serde(rename = "brieskorn")]
    pub multiplicities: Vec<u64>,
}

impl SeifertData {
    pub fn new(multiplicities: Vec<u64>) -> Result<Self> {
        let data = SeifertData { multiplicities };
        data.validate()?;
        Ok(data)
    }

    pub fn validate(&self) -> Result<()> {
        let mut product: u64 = 1;
        for (i, &a) in self.multiplicities.iter().enumerate() {
            if a == 0 {
                return Err(Error::Validation(format!(
                    "multiplicity {i} is zero; all multiplicities must be at least 1"
                )));
            }
            product = product
                .checked_mul(a)
                .filter(|&p| p <= MAX_MULTIPLICITY_PRODUCT)
                .ok_or_else(|| {
                    Error::Unsupported(format!(
                        "multiplicity product exceeds {MAX_MULTIPLICITY_PRODUCT}"
                    ))
                })?;
            for &b in &self.multiplicities[..i] {
                if gcd(a, b) != 1 {
                    return Err(Error::Validation(format!(
                        "multiplicities must be pairwise coprime; gcd({b}, {a}) > 1"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multiplicities with the trivial entries 1 removed.
    fn reduced(&self) -> Vec<u64> {
        self.multiplicities
            .iter()
            .copied()
            .filter(|&a| a > 1)
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Modular inverse of `a` mod `m` for coprime arguments.
fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m)
}

/// Negative continued fraction `a/b = c_1 - 1/(c_2 - 1/(...))` with all
/// quotients at least 2, for `0 < b < a`.
fn negative_cf(mut a: i64, mut b: i64) -> Vec<i64> {
    debug_assert!(0 < b && b < a);
    let mut out = Vec::new();
    while b > 0 {
        let c = a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0);
        out.push(c);
        (a, b) = (b, c * b - a);
    }
    out
}

/// A star-shaped plumbing tree with its intersection form.
///
/// Vertices are ordered center first, then each leg from the
/// center-adjacent vertex outward.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlumbingGraph {
    pub center: Option<i64>,
    pub legs: Vec<Vec<i64>>,
    intersection: IntSymForm,
}

impl PlumbingGraph {
    pub fn new(center: Option<i64>, legs: Vec<Vec<i64>>) -> Result<Self> {
        if center.is_none() && !legs.is_empty() {
            return Err(Error::Validation(
                "a plumbing with legs requires a central vertex".into(),
            ));
        }
        if legs.iter().any(|leg| leg.is_empty()) {
            return Err(Error::Validation("plumbing legs must be nonempty".into()));
        }
        let n = center.iter().len() + legs.iter().map(Vec::len).sum::<usize>();
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "plumbing has {n} vertices, exceeding {MAX_VERTICES}"
            )));
        }
        let mut m = vec![vec![0i64; n]; n];
        if let Some(w) = center {
            m[0][0] = w;
        }
        let mut next = 1;
        for leg in &legs {
            for (k, &w) in leg.iter().enumerate() {
                let v = next + k;
                m[v][v] = w;
                let prev = if k == 0 { 0 } else { v - 1 };
                m[prev][v] = 1;
                m[v][prev] = 1;
            }
            next += leg.len();
        }
        let intersection = IntSymForm::new(m)?;
        Ok(PlumbingGraph {
            center,
            legs,
            intersection,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.intersection.dim()
    }

    pub fn intersection(&self) -> &IntSymForm {
        &self.intersection
    }
}

/// Canonical negative-definite plumbing bounded by the Seifert sphere.
///
/// Solves the Seifert invariants `(b; (a_i, b_i))` with `0 < b_i < a_i`
/// exactly from the homology-sphere condition, expands each leg by the
/// negative continued fraction of `a_i / b_i`, and negates all weights.
/// The empty multiplicity list (or any list of ones) gives the empty
/// plumbing of the three-sphere.
pub fn canonical_plumbing(s: &SeifertData) -> Result<PlumbingGraph> {
    s.validate()?;
    let a: Vec<i64> = s.reduced().iter().map(|&x| x as i64).collect();
    if a.is_empty() {
        return PlumbingGraph::new(None, vec![]);
    }
    let product: i64 = a.iter().product();
    let mut numerator = 1i64;
    let mut legs = Vec::with_capacity(a.len());
    for &ai in &a {
        let cofactor = product / ai;
        let bi = (-mod_inverse(cofactor, ai)).rem_euclid(ai);
        debug_assert!(0 < bi && bi < ai);
        numerator += bi * cofactor;
        legs.push(negative_cf(ai, bi).into_iter().map(|c| -c).collect());
    }
    if numerator % product != 0 {
        return Err(Error::Internal(format!(
            "Seifert invariant solution is not integral for {:?}",
            s.multiplicities
        )));
    }
    let graph = PlumbingGraph::new(Some(-(numerator / product)), legs)?;
    let (pos, _, null) = inertia(graph.intersection());
    if pos != 0 || null != 0 {
        return Err(Error::Internal(
            "canonical plumbing is not negative definite".into(),
        ));
    }
    let det = crate::forms::determinant(graph.intersection());
    if det.to_i64().map(i64::abs) != Some(1) {
        return Err(Error::Internal(format!(
            "canonical plumbing has determinant {det}, expected a unit"
        )));
    }
    Ok(graph)
}

/// The unique 0/1 integral Wu class of the plumbing lattice, satisfying
/// `M w ≡ diag(M) mod 2`.
pub fn wu_class(g: &PlumbingGraph) -> Result<Vec<i64>> {
    let solutions = characteristic_solutions_mod2(g.intersection())?;
    match solutions.as_slice() {
        [unique] => Ok(unique.iter().map(|&b| b as i64).collect()),
        other => Err(Error::Internal(format!(
            "expected a unique 0/1 Wu class, found {}",
            other.len()
        ))),
    }
}

/// The mu-bar invariant `(signature(M) - w M w) / 8` of the Seifert
/// sphere, computed from its canonical plumbing and integral Wu class.
pub fn mubar(s: &SeifertData) -> Result<Rat> {
    let graph = canonical_plumbing(s)?;
    let w = wu_class(&graph)?;
    let sigma = signature(graph.intersection());
    let wmw = graph
        .intersection()
        .evaluate(&w)
        .to_i64()
        .ok_or_else(|| Error::Internal("Wu class norm overflow".into()))?;
    if (sigma - wmw) % 8 != 0 {
        return Err(Error::Internal(format!(
            "signature {sigma} minus Wu norm {wmw} is not divisible by 8"
        )));
    }
    Ok(rat_int((sigma - wmw) / 8))
}

/// Signature of the Milnor fiber of the Brieskorn sphere `Sigma(2, p, q)`,
/// which equals the signature of the (p, q) torus knot; used as an
/// independent parity cross-check on mu-bar.
pub fn brieskorn_2pq_fiber_signature(p: u64, q: u64) -> i64 {
    torus_signature_counting(p, q)
}

//! Built-in complexes: the two-point sphere, the unreduced suspension of
//! a free orbit, representation spheres, and a free-circle example.

use std::collections::BTreeMap;

use super::{Cell, GCWComplex, Group, Representation};

fn cell(id: &str, dim: u32, bd: &[&str]) -> Cell {
    Cell {
        id: id.to_string(),
        dim,
        bd: bd.iter().map(|s| s.to_string()).collect(),
    }
}

fn action(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// The sphere S^0: basepoint plus one fixed point, level zero.
pub fn sphere_zero(group: Group) -> GCWComplex {
    GCWComplex {
        group,
        level: 0,
        basepoint: "b".into(),
        cells: vec![cell("b", 0, &[]), cell("x", 0, &[])],
        gen_action: action(&[("b", "b"), ("x", "x")]),
    }
}

/// The unreduced suspension of a free orbit, based at one suspension
/// point. Both suspension points are fixed; everything else moves freely.
pub fn gtilde(group: Group) -> GCWComplex {
    let k = group.order();
    let mut cells = vec![cell("n", 0, &[]), cell("s", 0, &[])];
    let mut pairs: Vec<(String, String)> = vec![
        ("n".into(), "n".into()),
        ("s".into(), "s".into()),
    ];
    for i in 0..k {
        let j = (i + 1) % k;
        cells.push(cell(&format!("g{i}"), 0, &[]));
        pairs.push((format!("g{i}"), format!("g{j}")));
    }
    for i in 0..k {
        let j = (i + 1) % k;
        cells.push(Cell {
            id: format!("n{i}"),
            dim: 1,
            bd: vec!["n".into(), format!("g{i}")],
        });
        cells.push(Cell {
            id: format!("s{i}"),
            dim: 1,
            bd: vec!["s".into(), format!("g{i}")],
        });
        pairs.push((format!("n{i}"), format!("n{j}")));
        pairs.push((format!("s{i}"), format!("s{j}")));
    }
    GCWComplex {
        group,
        level: 0,
        basepoint: "n".into(),
        cells,
        gen_action: action(
            &pairs
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect::<Vec<_>>(),
        ),
    }
}

/// The one-point compactification of one copy of the given
/// representation, as a pointed G-CW complex.
///
/// For `Rtilde` this is a circle of declared level one. The order-four
/// model has a fixed vertex and two arcs swapped by the generator (the
/// order-two subgroup acts trivially); the order-two model is a circle
/// with trivial action. For `C` it is a rotation two-sphere: two fixed
/// poles, a free orbit of meridian arcs, and a free orbit of lune faces,
/// declared level zero.
pub fn representation_sphere(group: Group, rep: Representation) -> GCWComplex {
    match (group, rep) {
        (Group::Z2, Representation::Rtilde) => GCWComplex {
            group,
            level: 1,
            basepoint: "b".into(),
            cells: vec![cell("b", 0, &[]), cell("e", 1, &["b", "b"])],
            gen_action: action(&[("b", "b"), ("e", "e")]),
        },
        (Group::Z4, Representation::Rtilde) => GCWComplex {
            group,
            level: 1,
            basepoint: "b".into(),
            cells: vec![
                cell("b", 0, &[]),
                cell("v", 0, &[]),
                cell("a+", 1, &["b", "v"]),
                cell("a-", 1, &["b", "v"]),
            ],
            gen_action: action(&[("b", "b"), ("v", "v"), ("a+", "a-"), ("a-", "a+")]),
        },
        (Group::Z4, Representation::C) => {
            let mut cells = vec![cell("z", 0, &[]), cell("b", 0, &[])];
            let mut pairs: Vec<(String, String)> = vec![
                ("z".into(), "z".into()),
                ("b".into(), "b".into()),
            ];
            for i in 0..4usize {
                let j = (i + 1) % 4;
                cells.push(Cell {
                    id: format!("a{i}"),
                    dim: 1,
                    bd: vec!["z".into(), "b".into()],
                });
                cells.push(Cell {
                    id: format!("D{i}"),
                    dim: 2,
                    bd: vec![format!("a{i}"), format!("a{j}")],
                });
                for name in ["a", "D"] {
                    pairs.push((format!("{name}{i}"), format!("{name}{j}")));
                }
            }
            GCWComplex {
                group,
                level: 0,
                basepoint: "b".into(),
                cells,
                gen_action: action(
                    &pairs
                        .iter()
                        .map(|(a, b)| (a.as_str(), b.as_str()))
                        .collect::<Vec<_>>(),
                ),
            }
        }
        (Group::Z2, Representation::C) => {
            unreachable!("suspension rejects this combination before reaching the model")
        }
    }
}

/// A circle on which the order-two group acts freely, with a disjoint
/// basepoint. A valid G-CW complex, but its fixed set is empty, so it is
/// rejected by the invariant entry points.
pub fn free_circle_z2() -> GCWComplex {
    GCWComplex {
        group: Group::Z2,
        level: 0,
        basepoint: "b".into(),
        cells: vec![
            cell("b", 0, &[]),
            cell("v0", 0, &[]),
            cell("v1", 0, &[]),
            cell("e0", 1, &["v0", "v1"]),
            cell("e1", 1, &["v0", "v1"]),
        ],
        gen_action: action(&[
            ("b", "b"),
            ("v0", "v1"),
            ("v1", "v0"),
            ("e0", "e1"),
            ("e1", "e0"),
        ]),
    }
}

//! Deterministic generators for the concrete input families used throughout
//! the test and acceptance suites: wedges of circles, closed orientable
//! surfaces, the free-product tree orbit data, and the reflection circle.

use std::collections::BTreeMap;

use crate::action::{ExplicitAction, FiniteGroup, OrbitClass, OrbitData, StabOrder};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A wedge of `n` circles joined at vertex 0; each circle is a triangle of
/// edges through two fresh vertices. `χ = 1 - n`.
pub fn wedge_of_circles(n: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::MalformedInput("a wedge needs at least one circle".into()));
    }
    let mut maximal = Vec::new();
    for i in 0..n as i64 {
        let a = 2 * i + 1;
        let b = 2 * i + 2;
        maximal.push(vec![0, a]);
        maximal.push(vec![a, b]);
        maximal.push(vec![0, b]);
    }
    SimplicialComplex::from_maximal(&maximal)
}

/// A triangulated circle (= wedge of one circle).
pub fn circle() -> SimplicialComplex {
    wedge_of_circles(1).expect("n = 1 is valid")
}

/// The 7-vertex triangulation of the torus: vertices `0..7`, faces
/// `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
fn torus_faces() -> Vec<Vec<i64>> {
    let mut faces = Vec::new();
    for i in 0..7i64 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    faces
}

/// Closed orientable surface of genus `g >= 1`, built as an iterated
/// connected sum of 7-vertex tori: remove one triangle from each summand and
/// identify the boundary triangles. `χ = 2 - 2g`; minimality is not
/// attempted.
pub fn surface(g: usize) -> Result<SimplicialComplex> {
    if g == 0 {
        return Err(Error::MalformedInput(
            "surface genus must be at least 1 (the sphere is not in the corpus)".into(),
        ));
    }
    // triangles of the base torus used for gluing; disjoint from each other
    let entry = [0i64, 1, 3];
    let exit = [2i64, 4, 5];

    let mut faces: Vec<Vec<i64>> = torus_faces();
    let mut glue: Vec<i64> = exit.to_vec(); // current exit triangle in the sum
    let mut next_id: i64 = 7;

    for _ in 1..g {
        // remove the exit triangle of the running sum
        faces.retain(|f| {
            let mut s = f.clone();
            s.sort_unstable();
            s != glue
        });
        // relabel a fresh torus: entry -> glue, everything else fresh
        let mut relabel: BTreeMap<i64, i64> = BTreeMap::new();
        for (k, &v) in entry.iter().enumerate() {
            relabel.insert(v, glue[k]);
        }
        for v in 0..7i64 {
            relabel.entry(v).or_insert_with(|| {
                let id = next_id;
                next_id += 1;
                id
            });
        }
        for f in torus_faces() {
            let mut s: Vec<i64> = f.iter().map(|v| relabel[v]).collect();
            s.sort_unstable();
            if s == {
                let mut e: Vec<i64> = entry.iter().map(|v| relabel[v]).collect();
                e.sort_unstable();
                e
            } {
                continue; // the entry triangle is removed from the new copy
            }
            faces.push(s);
        }
        glue = {
            let mut e: Vec<i64> = exit.iter().map(|v| relabel[v]).collect();
            e.sort_unstable();
            e
        };
    }
    SimplicialComplex::from_maximal(&faces)
}

/// The 6-vertex triangulation of the real projective plane (the antipodal
/// quotient of the icosahedron). Used as a torsion oracle: `H_1 = Z/2`.
pub fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_maximal(&[
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 5, 6],
        vec![1, 2, 6],
        vec![2, 3, 5],
        vec![3, 4, 6],
        vec![2, 4, 5],
        vec![3, 5, 6],
        vec![2, 4, 6],
    ])
    .expect("valid face list")
}

/// Orbit data of the tree attached to the free product `Z/m * Z/n`: two
/// vertex orbits with cyclic stabilisers and one free edge orbit.
pub fn free_product_orbits(m: u64, n: u64) -> Result<OrbitData> {
    if m < 2 || n < 2 {
        return Err(Error::MalformedInput(
            "free-product factors must have order at least 2".into(),
        ));
    }
    let (label_m, label_n) = if m == n {
        (format!("Z/{m}"), format!("Z/{n}'"))
    } else {
        (format!("Z/{m}"), format!("Z/{n}"))
    };
    let mut stabilizers = BTreeMap::from([
        (label_m.clone(), StabOrder::Finite(m)),
        (label_n.clone(), StabOrder::Finite(n)),
        ("1".to_string(), StabOrder::Finite(1)),
    ]);
    stabilizers.insert("1".to_string(), StabOrder::Finite(1));
    Ok(OrbitData {
        orbits: vec![
            OrbitClass { dim: 0, stab: label_m },
            OrbitClass { dim: 0, stab: label_n },
            OrbitClass { dim: 1, stab: "1".to_string() },
        ],
        stabilizers,
        conjugacy: None,
    })
}

/// Orbit data of the `PSL(2,Z)` tree: stabilisers `Z/2` and `Z/3` at the two
/// vertex orbits, trivial on the edge orbit.
pub fn psl2z_tree_orbits() -> OrbitData {
    free_product_orbits(2, 3).expect("2 and 3 are valid orders")
}

/// The square circle (vertices E=0, N=1, W=2, S=3) with the reflection that
/// fixes E and W and swaps N and S.
pub fn reflection_circle() -> (SimplicialComplex, ExplicitAction) {
    let c = SimplicialComplex::from_maximal(&[
        vec![0, 1],
        vec![1, 2],
        vec![2, 3],
        vec![0, 3],
    ])
    .expect("valid square");
    let g = FiniteGroup::cyclic(2);
    let perms = vec![
        BTreeMap::from([(0, 0), (1, 1), (2, 2), (3, 3)]),
        BTreeMap::from([(0, 0), (1, 3), (2, 2), (3, 1)]),
    ];
    let a = ExplicitAction::new(g, perms).expect("two perms for Z/2");
    (c, a)
}

/// Solid simplices used by the dual-geometry corpus.
pub fn filled_triangle() -> SimplicialComplex {
    SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).expect("valid")
}

pub fn solid_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::from_maximal(&[vec![0, 1, 2, 3]]).expect("valid")
}

/// Boundary of the tetrahedron: the 2-sphere.
pub fn sphere() -> SimplicialComplex {
    SimplicialComplex::from_maximal(&[
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 3],
        vec![1, 2, 3],
    ])
    .expect("valid")
}

/// Build a complex by family name, as exposed by the `make` subcommand.
pub fn make(family: &str, params: &[String]) -> Result<MadeObject> {
    let want = |k: usize| -> Result<Vec<u64>> {
        if params.len() != k {
            return Err(Error::MalformedInput(format!(
                "family {family:?} expects {k} parameter(s), got {}",
                params.len()
            )));
        }
        params
            .iter()
            .map(|p| {
                p.parse::<u64>().map_err(|_| {
                    Error::MalformedInput(format!("parameter {p:?} is not a nonnegative integer"))
                })
            })
            .collect()
    };
    match family {
        "wedge" => {
            let p = want(1)?;
            Ok(MadeObject::Complex(wedge_of_circles(p[0] as usize)?))
        }
        "circle" => {
            want(0)?;
            Ok(MadeObject::Complex(circle()))
        }
        "surface" => {
            let p = want(1)?;
            Ok(MadeObject::Complex(surface(p[0] as usize)?))
        }
        "rp2" => {
            want(0)?;
            Ok(MadeObject::Complex(projective_plane()))
        }
        "sphere" => {
            want(0)?;
            Ok(MadeObject::Complex(sphere()))
        }
        "triangle" => {
            want(0)?;
            Ok(MadeObject::Complex(filled_triangle()))
        }
        "tetrahedron" => {
            want(0)?;
            Ok(MadeObject::Complex(solid_tetrahedron()))
        }
        "psl2z-orbits" => {
            want(0)?;
            Ok(MadeObject::Orbits(psl2z_tree_orbits()))
        }
        "free-product-orbits" => {
            let p = want(2)?;
            Ok(MadeObject::Orbits(free_product_orbits(p[0], p[1])?))
        }
        "reflection-circle" => {
            want(0)?;
            let (c, a) = reflection_circle();
            Ok(MadeObject::ComplexWithAction(c, a))
        }
        other => Err(Error::MalformedInput(format!(
            "unknown family {other:?}; known: wedge, circle, surface, rp2, sphere, \
             triangle, tetrahedron, psl2z-orbits, free-product-orbits, reflection-circle"
        ))),
    }
}

/// What a builder family produces.
pub enum MadeObject {
    Complex(SimplicialComplex),
    Orbits(OrbitData),
    ComplexWithAction(SimplicialComplex, ExplicitAction),
}

/// The standard corpus of complexes exercised by regression and
/// dual-geometry suites.
pub fn corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out = vec![
        ("circle".to_string(), circle()),
        ("wedge2".to_string(), wedge_of_circles(2).unwrap()),
        ("wedge3".to_string(), wedge_of_circles(3).unwrap()),
        ("triangle".to_string(), filled_triangle()),
        ("sphere".to_string(), sphere()),
        ("rp2".to_string(), projective_plane()),
        ("torus".to_string(), surface(1).unwrap()),
        ("genus2".to_string(), surface(2).unwrap()),
        ("tetrahedron".to_string(), solid_tetrahedron()),
    ];
    let (refl, _) = reflection_circle();
    out.push(("reflection-circle".to_string(), refl));
    out
}

//! JSON wire formats.
//!
//! - complex: `{"maximal_simplices": [[int,...],...], "colouring": {"v": int, ...}?}`
//! - action: `{"group": {"table": [[int,...]]}, "vertex_perms": {"elem": [vertex,...]}}`
//!   where each permutation array lists the images of the vertices in
//!   ascending vertex-id order
//! - orbit data: `{"orbits": [{"dim": int, "stab": "label"}], "stabilizers": {"label": int|"infinite"}}`
//! - matrices: arrays of decimal strings, row-major, to preserve arbitrary
//!   precision
//! - graded groups: `{"rank": r, "torsion": ["d1", ...]}` per degree

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::action::{ExplicitAction, FiniteGroup, OrbitData};
use crate::complex::{Colouring, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{FGAbelianGroup, IntMatrix};

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub maximal_simplices: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub colouring: Option<BTreeMap<String, usize>>,
}

pub fn complex_to_json(c: &SimplicialComplex, colouring: Option<&Colouring>) -> ComplexJson {
    // emit the inclusion-maximal simplices only
    let all: Vec<&Simplex> = c.simplices().collect();
    let maximal: Vec<Vec<i64>> = all
        .iter()
        .filter(|s| {
            !all.iter()
                .any(|t| t != *s && s.is_face_of(t))
        })
        .map(|s| s.vertices().to_vec())
        .collect();
    ComplexJson {
        maximal_simplices: maximal,
        colouring: colouring.map(|nu| {
            nu.entries().map(|(v, c)| (v.to_string(), *c)).collect()
        }),
    }
}

pub fn complex_from_json(json: &ComplexJson) -> Result<(SimplicialComplex, Option<Colouring>)> {
    let complex = SimplicialComplex::from_maximal(&json.maximal_simplices)?;
    let colouring = match &json.colouring {
        None => None,
        Some(map) => {
            let mut colours = BTreeMap::new();
            for (k, &c) in map {
                let v: i64 = k.parse().map_err(|_| {
                    Error::MalformedInput(format!("colouring key {k:?} is not a vertex id"))
                })?;
                colours.insert(v, c);
            }
            Some(Colouring::new(colours))
        }
    };
    Ok((complex, colouring))
}

pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, Option<Colouring>)> {
    let json: ComplexJson = serde_json::from_str(text)?;
    complex_from_json(&json)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ActionJson {
    pub group: GroupJson,
    pub vertex_perms: BTreeMap<String, Vec<i64>>,
}

pub fn action_to_json(c: &SimplicialComplex, a: &ExplicitAction) -> ActionJson {
    let vertices = c.vertex_ids();
    let table = (0..a.group.order())
        .map(|i| (0..a.group.order()).map(|j| a.group.mul(i, j)).collect())
        .collect();
    let vertex_perms = (0..a.group.order())
        .map(|g| {
            let images = vertices.iter().map(|v| a.perm(g)[v]).collect();
            (g.to_string(), images)
        })
        .collect();
    ActionJson { group: GroupJson { table }, vertex_perms }
}

pub fn action_from_json(json: &ActionJson, c: &SimplicialComplex) -> Result<ExplicitAction> {
    let group = FiniteGroup::new(json.group.table.clone())?;
    let vertices = c.vertex_ids();
    let mut perms = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let images = json.vertex_perms.get(&g.to_string()).ok_or_else(|| {
            Error::MalformedInput(format!("vertex_perms is missing element {g}"))
        })?;
        if images.len() != vertices.len() {
            return Err(Error::MalformedInput(format!(
                "permutation of element {g} lists {} images for {} vertices",
                images.len(),
                vertices.len()
            )));
        }
        perms.push(vertices.iter().copied().zip(images.iter().copied()).collect());
    }
    ExplicitAction::new(group, perms)
}

pub fn parse_orbit_data(text: &str) -> Result<OrbitData> {
    let data: OrbitData = serde_json::from_str(text)?;
    data.validate()?;
    Ok(data)
}

/// Matrices as arrays of decimal strings, row-major.
pub fn matrix_to_json(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<String>]) -> Result<IntMatrix> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::MalformedInput("ragged matrix rows".into()));
    }
    let mut out = Vec::with_capacity(r);
    for row in rows {
        let mut entries = Vec::with_capacity(c);
        for e in row {
            let v: BigInt = e.parse().map_err(|_| {
                Error::MalformedInput(format!("matrix entry {e:?} is not a decimal integer"))
            })?;
            entries.push(v);
        }
        out.push(entries);
    }
    Ok(IntMatrix::from_bigint_rows(out))
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJsonForm {
    pub rank: usize,
    pub torsion: Vec<String>,
}

pub fn group_to_json(g: &FGAbelianGroup) -> GroupJsonForm {
    GroupJsonForm {
        rank: g.rank(),
        torsion: g.torsion().iter().map(|d| d.to_string()).collect(),
    }
}

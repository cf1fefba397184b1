//! Mechanical exactness certificates for sequences of finitely generated
//! abelian groups.
//!
//! Groups are presented as `Z^g / (column lattice of R)`; maps are integer
//! matrices on generators. Exactness at a node is decided exactly: the
//! preimage lattice of the outgoing map's kernel is computed via a Smith
//! normal form kernel basis, and membership in the incoming map's image
//! lattice is decided by solving linear systems over `Z`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{
    element_order, in_column_lattice, kernel_basis, FGAbelianGroup, IntMatrix,
};

/// A finitely generated abelian group presented by generators and relation
/// columns.
#[derive(Debug, Clone)]
pub struct PresentedGroup {
    pub name: String,
    pub generators: usize,
    /// `generators x k` matrix; each column is a relation.
    pub relations: IntMatrix,
}

impl PresentedGroup {
    pub fn new(name: impl Into<String>, generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.rows(), generators);
        PresentedGroup { name: name.into(), generators, relations }
    }

    /// The canonical presentation of a group in invariant-factor form.
    pub fn from_group(name: impl Into<String>, g: &FGAbelianGroup) -> Self {
        PresentedGroup::new(name, g.generator_count(), g.presentation())
    }

    pub fn trivial(name: impl Into<String>) -> Self {
        PresentedGroup::new(name, 0, IntMatrix::zero(0, 0))
    }

    /// Order of the class of `v`, `None` meaning infinite.
    pub fn order_of(&self, v: &[BigInt]) -> Option<BigInt> {
        element_order(self.generators, &self.relations, v)
    }
}

/// A homomorphism between presented groups, as a matrix on generators.
#[derive(Debug, Clone)]
pub struct Hom {
    pub name: String,
    /// `to.generators x from.generators`.
    pub matrix: IntMatrix,
}

impl Hom {
    pub fn new(name: impl Into<String>, matrix: IntMatrix) -> Self {
        Hom { name: name.into(), matrix }
    }

    /// Well-defined iff every relation of the source maps into the relation
    /// lattice of the target.
    fn well_defined(&self, from: &PresentedGroup, to: &PresentedGroup) -> bool {
        (0..from.relations.cols()).all(|j| {
            let image = self.matrix.mul_vec(&from.relations.column(j));
            in_column_lattice(&to.relations, &image)
        })
    }
}

/// One verified statement inside a certificate.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A list of named pass/fail checks; the certificate passes when every
/// check does.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn record(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

/// A finite exact sequence `0 -> G_0 -> G_1 -> ... -> G_k -> 0` to be
/// verified. Maps are given between consecutive groups.
pub struct SequenceSpec {
    pub name: String,
    pub groups: Vec<PresentedGroup>,
    pub maps: Vec<Hom>,
}

/// Generators of the lattice `{ x | Mx ∈ column lattice of R }`, i.e. the
/// preimage of a subgroup's kernel: project the kernel of `[M | R]` onto the
/// `x` block.
fn preimage_lattice_generators(m: &IntMatrix, r: &IntMatrix) -> Vec<Vec<BigInt>> {
    let combined = m.hconcat(r);
    kernel_basis(&combined)
        .into_iter()
        .map(|v| v[..m.cols()].to_vec())
        .collect()
}

/// Verify exactness of the whole sequence (including injectivity of the
/// first map and surjectivity of the last). Every claim becomes one named
/// check in the certificate.
pub fn verify_exact_sequence(spec: &SequenceSpec) -> Certificate {
    let mut cert = Certificate::default();
    let groups = &spec.groups;
    let maps = &spec.maps;
    assert_eq!(maps.len() + 1, groups.len(), "one map between consecutive groups");

    for (i, map) in maps.iter().enumerate() {
        cert.record(
            format!("{}: {} is well-defined", spec.name, map.name),
            map.well_defined(&groups[i], &groups[i + 1]),
        );
    }

    // composites vanish
    for i in 0..maps.len().saturating_sub(1) {
        let comp = maps[i + 1].matrix.mul(&maps[i].matrix);
        let ok = (0..comp.cols()).all(|j| {
            in_column_lattice(&groups[i + 2].relations, &comp.column(j))
        });
        cert.record(
            format!(
                "{}: {} ∘ {} = 0",
                spec.name, maps[i + 1].name, maps[i].name
            ),
            ok,
        );
    }

    // injectivity at the head: ker(f_0) ⊆ relations of G_0
    {
        let pre = preimage_lattice_generators(&maps[0].matrix, &groups[1].relations);
        let ok = pre
            .iter()
            .all(|v| in_column_lattice(&groups[0].relations, v));
        cert.record(
            format!("{}: exact at {} (kernel of {} vanishes)", spec.name, groups[0].name, maps[0].name),
            ok,
        );
    }

    // interior nodes: ker(outgoing) ⊆ im(incoming) + relations
    for i in 1..groups.len() - 1 {
        let incoming = &maps[i - 1];
        let outgoing = &maps[i];
        let kernel_gens =
            preimage_lattice_generators(&outgoing.matrix, &groups[i + 1].relations);
        let image_lattice = incoming.matrix.hconcat(&groups[i].relations);
        let ok = kernel_gens
            .iter()
            .all(|v| in_column_lattice(&image_lattice, v));
        cert.record(
            format!(
                "{}: exact at {} (ker {} = im {})",
                spec.name, groups[i].name, outgoing.name, incoming.name
            ),
            ok,
        );
    }

    // surjectivity at the tail: im(last) + relations = Z^g
    {
        let last = maps.len() - 1;
        let g = &groups[groups.len() - 1];
        let image_lattice = maps[last].matrix.hconcat(&g.relations);
        let ok = (0..g.generators).all(|i| {
            let mut e = vec![BigInt::zero(); g.generators];
            e[i] = BigInt::from(1);
            in_column_lattice(&image_lattice, &e)
        });
        cert.record(
            format!("{}: exact at {} ({} is onto)", spec.name, g.name, maps[last].name),
            ok,
        );
    }

    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(name: &str) -> PresentedGroup {
        PresentedGroup::from_group(name, &FGAbelianGroup::free(1))
    }

    #[test]
    fn multiplication_by_n_sequence() {
        // 0 -> Z --n--> Z -> Z/n -> 0
        let n = 6i64;
        let zn = PresentedGroup::from_group(
            "Z/6",
            &FGAbelianGroup::new(0, vec![BigInt::from(n)]).unwrap(),
        );
        let spec = SequenceSpec {
            name: "mult".into(),
            groups: vec![z("Z"), z("Z"), zn],
            maps: vec![
                Hom::new("×6", IntMatrix::from_rows(&[vec![n]])),
                Hom::new("quot", IntMatrix::from_rows(&[vec![1]])),
            ],
        };
        let cert = verify_exact_sequence(&spec);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn broken_sequence_detected() {
        // 0 -> Z --2--> Z -> Z/6 -> 0 is not exact at Z/6's presentation
        let zn = PresentedGroup::from_group(
            "Z/6",
            &FGAbelianGroup::new(0, vec![BigInt::from(6)]).unwrap(),
        );
        let spec = SequenceSpec {
            name: "broken".into(),
            groups: vec![z("Z"), z("Z"), zn],
            maps: vec![
                Hom::new("×2", IntMatrix::from_rows(&[vec![2]])),
                Hom::new("quot", IntMatrix::from_rows(&[vec![1]])),
            ],
        };
        let cert = verify_exact_sequence(&spec);
        assert!(!cert.passed());
    }

    #[test]
    fn split_extension_with_torsion_sub() {
        // 0 -> Z/2 -> Z/2 ⊕ Z^2 -> Z^2 -> 0
        let sub = PresentedGroup::from_group(
            "Z/2",
            &FGAbelianGroup::new(0, vec![BigInt::from(2)]).unwrap(),
        );
        let mid = PresentedGroup::from_group(
            "Z^2+Z/2",
            &FGAbelianGroup::new(2, vec![BigInt::from(2)]).unwrap(),
        );
        let quot = PresentedGroup::from_group("Z^2", &FGAbelianGroup::free(2));
        // mid generators: [free1, free2, torsion]
        let spec = SequenceSpec {
            name: "split".into(),
            groups: vec![sub, mid, quot],
            maps: vec![
                Hom::new("incl", IntMatrix::from_rows(&[vec![0], vec![0], vec![1]])),
                Hom::new("proj", IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]])),
            ],
        };
        let cert = verify_exact_sequence(&spec);
        assert!(cert.passed(), "{cert}");
    }

    #[test]
    fn order_of_elements() {
        let g = PresentedGroup::from_group(
            "Z ⊕ Z/4",
            &FGAbelianGroup::new(1, vec![BigInt::from(4)]).unwrap(),
        );
        assert_eq!(g.order_of(&[BigInt::from(0), BigInt::from(1)]), Some(BigInt::from(4)));
        assert_eq!(g.order_of(&[BigInt::from(0), BigInt::from(2)]), Some(BigInt::from(2)));
        assert_eq!(g.order_of(&[BigInt::from(1), BigInt::from(0)]), None);
    }
}

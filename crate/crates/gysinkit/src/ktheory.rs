//! Integral (co)homology of simplicial complexes via Smith normal form, and
//! the K-theory/K-homology of low-dimensional complexes obtained by
//! collapsing the Atiyah-Hirzebruch filtration.
//!
//! Dimension at most 2 is guaranteed correct. Dimension 3 is allowed only
//! behind the `AssumeCollapse` mode, since the degree-3 differential is not
//! computed; dimension 4 and up is always an error.


use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, FGAbelianGroup, IntMatrix};

/// The simplicial chain complex over the integers: one boundary matrix per
/// positive degree, over lexicographically ordered simplex bases.
#[derive(Debug, Clone)]
pub struct ChainComplexZ {
    /// `bases[k]` lists the k-simplices in sorted order.
    pub bases: Vec<Vec<Simplex>>,
    /// `boundaries[k]` is the matrix of `∂_k : C_k → C_{k-1}` for `k >= 1`;
    /// index 0 holds the (empty) map out of degree zero.
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplexZ {
    pub fn dim(&self) -> usize {
        self.bases.len() - 1
    }

    /// `∂_k`, a zero-shaped matrix outside `1..=dim`.
    pub fn boundary(&self, k: usize) -> IntMatrix {
        if k == 0 || k > self.dim() {
            let rows = if k == 0 { 0 } else { self.bases[k - 1].len() };
            return IntMatrix::zero(rows, self.basis_size(k));
        }
        self.boundaries[k].clone()
    }

    pub fn basis_size(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, |b| b.len())
    }
}

/// Build the chain complex of a simplicial complex. The boundary of a
/// simplex alternates signs over its sorted vertex list, so `∂∂ = 0`.
pub fn chain_complex(c: &SimplicialComplex) -> ChainComplexZ {
    let dim = c.dim();
    let bases: Vec<Vec<Simplex>> = (0..=dim)
        .map(|k| c.simplices_of_dim(k).into_iter().cloned().collect())
        .collect();

    let mut boundaries = vec![IntMatrix::zero(0, bases[0].len())];
    for k in 1..=dim {
        let rows = bases[k - 1].len();
        let cols = bases[k].len();
        let mut m = IntMatrix::zero(rows, cols);
        let index: std::collections::HashMap<&Simplex, usize> =
            bases[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        for (j, s) in bases[k].iter().enumerate() {
            for (drop, face) in s.facets().into_iter().enumerate() {
                // facets() drops vertex `drop` in sorted order, sign (-1)^drop
                let i = index[&face];
                let sign = if drop % 2 == 0 { 1i64 } else { -1 };
                m.set(i, j, sign.into());
            }
        }
        boundaries.push(m);
    }
    ChainComplexZ { bases, boundaries }
}

/// A list of finitely generated abelian groups indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGroup {
    pub groups: Vec<FGAbelianGroup>,
}

impl GradedGroup {
    pub fn group(&self, k: usize) -> FGAbelianGroup {
        self.groups.get(k).cloned().unwrap_or_else(FGAbelianGroup::trivial)
    }

    /// Alternating sum of ranks.
    pub fn euler_char(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let r = g.rank() as i64;
                if k % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }
}

impl std::fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `H_k = ker ∂_k / im ∂_{k+1}` for one degree of any chain complex given by
/// consecutive boundary matrices (with `d_out ∘ d_in = 0`).
fn homology_at(d_out: &IntMatrix, d_in: &IntMatrix) -> FGAbelianGroup {
    debug_assert!(d_out.mul(d_in).is_zero(), "not a chain complex");
    let n = d_out.cols();
    let rank_out = smith_normal_form(d_out).rank();
    let snf_in = smith_normal_form(d_in);
    let rank_in = snf_in.rank();
    let torsion: Vec<_> = snf_in
        .invariant_factors()
        .into_iter()
        .filter(|d| *d > num_bigint::BigInt::from(1))
        .collect();
    let rank = n - rank_out - rank_in;
    FGAbelianGroup::from_orders(rank, &torsion)
}

/// Integral homology in all degrees `0..=dim`.
pub fn homology(c: &SimplicialComplex) -> GradedGroup {
    let cc = chain_complex(c);
    let groups = (0..=cc.dim())
        .map(|k| homology_at(&cc.boundary(k), &cc.boundary(k + 1)))
        .collect();
    GradedGroup { groups }
}

/// Integral cohomology, computed from the transposed boundary matrices:
/// `H^k = ker ∂_{k+1}^T / im ∂_k^T`.
pub fn cohomology(c: &SimplicialComplex) -> GradedGroup {
    let cc = chain_complex(c);
    let groups = (0..=cc.dim())
        .map(|k| homology_at(&cc.boundary(k + 1).transpose(), &cc.boundary(k).transpose()))
        .collect();
    GradedGroup { groups }
}

/// How to treat the Atiyah-Hirzebruch filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KMode {
    /// Only dimensions where the collapse is automatic (`dim <= 2`).
    Strict,
    /// Additionally allow dimension 3, assuming the degree-3 differential
    /// vanishes. The caller owns that assumption.
    AssumeCollapse,
}

impl std::str::FromStr for KMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(KMode::Strict),
            "assume-collapse" => Ok(KMode::AssumeCollapse),
            other => Err(Error::UnsupportedMode(format!(
                "unknown K-theory mode {other:?} (use strict or assume-collapse)"
            ))),
        }
    }
}

fn check_dim(dim: usize, mode: KMode) -> Result<()> {
    match mode {
        KMode::Strict if dim >= 3 => Err(Error::UnsupportedDimension {
            dim,
            reason: "strict mode guarantees the filtration collapse only up to dimension 2; \
                     pass assume-collapse for dimension 3"
                .into(),
        }),
        _ if dim >= 4 => Err(Error::UnsupportedDimension {
            dim,
            reason: "dimension 4 and up is out of scope".into(),
        }),
        _ => Ok(()),
    }
}

/// Topological K-theory under the collapsed filtration:
/// `K^0 = H^0 ⊕ H^2`, `K^1 = H^1 ⊕ H^3`.
pub fn k_groups(
    c: &SimplicialComplex,
    mode: KMode,
) -> Result<(FGAbelianGroup, FGAbelianGroup)> {
    check_dim(c.dim(), mode)?;
    let h = cohomology(c);
    Ok((h.group(0).direct_sum(&h.group(2)), h.group(1).direct_sum(&h.group(3))))
}

/// K-homology under the collapsed filtration:
/// `K_0 = H_0 ⊕ H_2`, `K_1 = H_1 ⊕ H_3`.
pub fn k_homology(
    c: &SimplicialComplex,
    mode: KMode,
) -> Result<(FGAbelianGroup, FGAbelianGroup)> {
    check_dim(c.dim(), mode)?;
    let h = homology(c);
    Ok((h.group(0).direct_sum(&h.group(2)), h.group(1).direct_sum(&h.group(3))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use num_bigint::BigInt;

    fn grp(rank: usize, torsion: &[i64]) -> FGAbelianGroup {
        FGAbelianGroup::new(rank, torsion.iter().map(|&d| BigInt::from(d)).collect()).unwrap()
    }

    #[test]
    fn boundary_of_single_edge() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let cc = chain_complex(&c);
        let d1 = cc.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (2, 1));
        // sorted vertex basis [0], [1]; the edge drops vertex 0 with sign +
        assert_eq!(d1.get(0, 0), &BigInt::from(-1));
        assert_eq!(d1.get(1, 0), &BigInt::from(1));
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let cc = chain_complex(&c);
        assert_eq!(smith_normal_form(&cc.boundary(1)).rank(), 2);
    }

    #[test]
    fn boundary_squared_vanishes() {
        for (_, c) in builders::corpus() {
            let cc = chain_complex(&c);
            for k in 1..=cc.dim() {
                assert!(cc.boundary(k).mul(&cc.boundary(k + 1)).is_zero());
            }
        }
    }

    #[test]
    fn homology_of_circle() {
        let h = homology(&builders::circle());
        assert_eq!(h.groups, vec![grp(1, &[]), grp(1, &[])]);
    }

    #[test]
    fn homology_of_torus_and_genus_two() {
        let h1 = homology(&builders::surface(1).unwrap());
        assert_eq!(h1.groups, vec![grp(1, &[]), grp(2, &[]), grp(1, &[])]);
        let h2 = homology(&builders::surface(2).unwrap());
        assert_eq!(h2.groups, vec![grp(1, &[]), grp(4, &[]), grp(1, &[])]);
    }

    #[test]
    fn homology_of_projective_plane() {
        let p = builders::projective_plane();
        let h = homology(&p);
        assert_eq!(h.groups, vec![grp(1, &[]), grp(0, &[2]), grp(0, &[])]);
        let hc = cohomology(&p);
        assert_eq!(hc.group(2), grp(0, &[2]));
        assert_eq!(hc.group(1), grp(0, &[]));
    }

    #[test]
    fn homology_of_wedges() {
        for n in 1..=5 {
            let h = homology(&builders::wedge_of_circles(n).unwrap());
            assert_eq!(h.groups, vec![grp(1, &[]), grp(n, &[])], "wedge of {n}");
        }
    }

    #[test]
    fn euler_char_matches_rank_alternation() {
        for (name, c) in builders::corpus() {
            let h = homology(&c);
            assert_eq!(h.euler_char(), c.euler_char(), "{name}");
        }
    }

    #[test]
    fn h0_counts_components_and_h1_torsion_free() {
        let mut corpus = builders::corpus();
        corpus.push((
            "two pieces".into(),
            SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![7, 8]]).unwrap(),
        ));
        for (name, c) in corpus {
            let h = homology(&c);
            assert_eq!(h.group(0).rank(), c.components().len(), "{name}");
            assert!(h.group(0).is_free(), "{name}");
            let hc = cohomology(&c);
            assert!(hc.group(1).is_free(), "{name}: H^1 must be torsion-free");
        }
    }

    #[test]
    fn k_groups_examples() {
        let (k0, k1) = k_groups(&builders::wedge_of_circles(3).unwrap(), KMode::Strict).unwrap();
        assert_eq!(k0, grp(1, &[]));
        assert_eq!(k1, grp(3, &[]));

        let (k0, k1) = k_groups(&builders::surface(2).unwrap(), KMode::Strict).unwrap();
        assert_eq!(k0, grp(2, &[]));
        assert_eq!(k1, grp(4, &[]));

        let point = SimplicialComplex::from_maximal(&[vec![0]]).unwrap();
        let (k0, k1) = k_groups(&point, KMode::Strict).unwrap();
        assert_eq!(k0, grp(1, &[]));
        assert!(k1.is_trivial());
    }

    #[test]
    fn k_homology_examples() {
        let (k0, k1) = k_homology(&builders::wedge_of_circles(4).unwrap(), KMode::Strict).unwrap();
        assert_eq!(k0, grp(1, &[]));
        assert_eq!(k1, grp(4, &[]));

        let (k0, k1) = k_homology(&builders::surface(2).unwrap(), KMode::Strict).unwrap();
        assert_eq!(k0, grp(2, &[]));
        assert_eq!(k1, grp(4, &[]));
    }

    #[test]
    fn free_homology_makes_theory_and_homology_ranks_agree() {
        for c in [builders::wedge_of_circles(2).unwrap(), builders::surface(1).unwrap()] {
            let (k0, k1) = k_groups(&c, KMode::Strict).unwrap();
            let (h0, h1) = k_homology(&c, KMode::Strict).unwrap();
            assert_eq!(k0.rank(), h0.rank());
            assert_eq!(k1.rank(), h1.rank());
        }
    }

    #[test]
    fn dimension_gates() {
        let tetra = builders::solid_tetrahedron();
        assert!(matches!(
            k_groups(&tetra, KMode::Strict),
            Err(Error::UnsupportedDimension { dim: 3, .. })
        ));
        let (k0, k1) = k_groups(&tetra, KMode::AssumeCollapse).unwrap();
        assert_eq!(k0, grp(1, &[]));
        assert!(k1.is_trivial());

        let four = SimplicialComplex::from_maximal(&[vec![0, 1, 2, 3, 4]]).unwrap();
        assert!(k_groups(&four, KMode::AssumeCollapse).is_err());
        assert!(k_homology(&four, KMode::AssumeCollapse).is_err());
    }
}

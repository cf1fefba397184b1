//! Spectral support of the barycentric unit-vector field, the partial
//! section `q̄`, and the support-pattern algebra.
//!
//! The unit vector attached to a point has square-root coefficients, but
//! every assertion made here is a zero/nonzero statement, so only the
//! rational weights are ever materialised.

use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::{BarycentricPoint, ColouredComplex, Simplex, Subdivision};
use crate::error::{Error, Result};

use super::{collapse, in_region, retraction_q, EPoint, FaceSet, Region};

/// The support of the collapsed spectral vector at one point: an ascending
/// chain of simplices of the base complex, plus the exact collapsed image
/// point for diagnostics.
#[derive(Debug, Clone)]
pub struct SpectralSupport {
    /// Strictly ascending chain `σ_0 ⊂ σ_1 ⊂ ...` carrying positive weight.
    pub support: Vec<Simplex>,
    /// The colour image `|ν|(x)` before collapsing.
    pub colour_image: EPoint,
}

impl SpectralSupport {
    /// Every consecutive pair is a strict face inclusion; this is the chain
    /// certificate the support construction promises.
    pub fn is_chain(&self) -> bool {
        self.support
            .windows(2)
            .all(|w| w[0].is_face_of(&w[1]) && w[0] != w[1])
    }
}

/// Vertex weights of a subdivision point on the top simplex of its carrier
/// chain: a chain vertex contributes its weight spread evenly over the base
/// vertices it contains.
fn weights_on_top(
    x: &BarycentricPoint,
    sub: &Subdivision,
) -> Result<(Simplex, Vec<(i64, BigRational)>)> {
    let chain: Vec<&Simplex> = x
        .carrier()
        .vertices()
        .iter()
        .map(|&v| {
            sub.simplex_for(v).ok_or_else(|| {
                Error::MalformedInput(format!(
                    "carrier vertex {v} is not a subdivision vertex"
                ))
            })
        })
        .collect::<Result<_>>()?;
    let mut ordered = chain.clone();
    ordered.sort_by_key(|s| s.vertices().len());
    for w in ordered.windows(2) {
        if !w[0].is_face_of(w[1]) || w[0] == w[1] {
            return Err(Error::MalformedInput(format!(
                "carrier vertices do not form a strict face chain ({} vs {})",
                w[0], w[1]
            )));
        }
    }
    let top = (*ordered.last().expect("carrier is nonempty")).clone();

    let mut weights: Vec<(i64, BigRational)> = top
        .vertices()
        .iter()
        .map(|&v| (v, BigRational::zero()))
        .collect();
    for (sigma, weight) in chain.iter().zip(x.weights()) {
        let share = weight / BigRational::from_integer((sigma.vertices().len() as i64).into());
        for &v in sigma.vertices() {
            let slot = weights
                .iter_mut()
                .find(|(u, _)| *u == v)
                .expect("chain vertices lie in the top simplex");
            slot.1 += &share;
        }
    }
    Ok((top, weights))
}

/// The colour image `|ν|(x)` of a subdivision point, in the ambient
/// standard simplex of the base colouring.
pub fn colour_image(
    x: &BarycentricPoint,
    base: &ColouredComplex,
    sub: &Subdivision,
) -> Result<EPoint> {
    let (_, weights) = weights_on_top(x, sub)?;
    let mut coords = vec![BigRational::zero(); base.n + 1];
    for (v, w) in weights {
        let colour = base.colouring.colour(v).ok_or_else(|| {
            Error::Validation(format!("vertex {v} has no colour"))
        })?;
        coords[colour] += w;
    }
    EPoint::new(coords)
}

/// Support of the collapsed spectral vector `v(x) = v'(𝒞(x))`: collapse the
/// point inside its top simplex, then read off the chain of weight level
/// sets. Only positivity of rational weights is used.
pub fn spectral_support(
    x: &BarycentricPoint,
    base: &ColouredComplex,
    sub: &Subdivision,
    l: &BigRational,
) -> Result<SpectralSupport> {
    let (top, weights) = weights_on_top(x, sub)?;

    // push to colour coordinates, collapse there, pull back to the top
    // simplex (the collapse commutes with the colour identification)
    let mut coords = vec![BigRational::zero(); base.n + 1];
    for (v, w) in &weights {
        let colour = base.colouring.colour(*v).ok_or_else(|| {
            Error::Validation(format!("vertex {v} has no colour"))
        })?;
        coords[colour] += w;
    }
    let image = EPoint::new(coords)?;
    let collapsed = collapse(&image, l)?;
    let new_weights: Vec<(i64, BigRational)> = top
        .vertices()
        .iter()
        .map(|&v| {
            let colour = base.colouring.colour(v).expect("checked above");
            (v, collapsed.coord(colour).clone())
        })
        .collect();

    // level sets of the collapsed weights form the support chain
    let mut levels: Vec<BigRational> = new_weights
        .iter()
        .map(|(_, w)| w.clone())
        .filter(|w| !w.is_zero())
        .collect();
    levels.sort();
    levels.dedup();
    levels.reverse(); // descending

    let mut support = Vec::new();
    for level in &levels {
        let verts: Vec<i64> = new_weights
            .iter()
            .filter(|(_, w)| w >= level)
            .map(|(v, _)| *v)
            .collect();
        support.push(Simplex::new(verts)?);
    }

    Ok(SpectralSupport { support, colour_image: image })
}

/// The partial section `q̄(t, σ) = |ν|_σ^{-1}(q(t))`, defined for
/// `t ∈ R_{<=ν(σ)}`; outside that region the construction has no canonical
/// value and an error is returned.
pub fn bar_q(
    t: &EPoint,
    sigma: &Simplex,
    base: &ColouredComplex,
) -> Result<BarycentricPoint> {
    let colours = base.colouring.colour_set(sigma)?;
    let f = FaceSet::new(colours, base.n)?;
    if !in_region(t, &f, &Region::RLe) {
        return Err(Error::Validation(format!(
            "q̄({t}, {sigma}) is undefined: the point is outside R_<=ν(σ) = R_<={f}"
        )));
    }
    let q = retraction_q(t);
    let weights: Vec<BigRational> = sigma
        .vertices()
        .iter()
        .map(|&v| q.coord(base.colouring.colour(v).expect("colour checked")).clone())
        .collect();
    BarycentricPoint::new(sigma.clone(), weights)
}

/// A matrix-valued function sampled at finitely many points of `E`, indexed
/// by the simplices of a coloured complex. The support constraint requires
/// a nonzero `(σ, σ')` entry only where `t ∈ R_{<=ν(σ∩σ')}`.
#[derive(Debug, Clone)]
pub struct SampledPattern {
    pub simplices: Vec<Simplex>,
    /// One `(point, matrix)` pair per sample; matrices are dense over the
    /// simplex basis.
    pub samples: Vec<(EPoint, Vec<Vec<BigRational>>)>,
}

impl SampledPattern {
    /// First violation of the support constraint, if any.
    fn first_violation(&self, base: &ColouredComplex) -> Result<Option<(usize, usize, usize)>> {
        for (k, (t, matrix)) in self.samples.iter().enumerate() {
            for (i, row) in matrix.iter().enumerate() {
                for (j, entry) in row.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    if !allowed_region(t, &self.simplices[i], &self.simplices[j], base)? {
                        return Ok(Some((k, i, j)));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Is `t` inside `R_{<=ν(σ∩σ')}`? Pairs without a common face allow no
/// support at all (the empty region).
fn allowed_region(
    t: &EPoint,
    a: &Simplex,
    b: &Simplex,
    base: &ColouredComplex,
) -> Result<bool> {
    let f = match a.intersection(b) {
        Some(common) => FaceSet::new(base.colouring.colour_set(&common)?, base.n)?,
        None => FaceSet::empty(base.n),
    };
    Ok(in_region(t, &f, &Region::RLe))
}

/// Outcome of the product proof check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportProductOutcome {
    /// An input already violates its own support constraint (negative
    /// control): `which` names the offending factor (1 or 2).
    InputViolation { which: u8, sample: usize, row: usize, col: usize },
    /// Both inputs are valid and so is their pointwise product.
    ProductValid,
    /// Both inputs are valid but the product is not; this would contradict
    /// the closure of the support algebra under multiplication.
    ProductViolation { sample: usize, row: usize, col: usize },
}

/// Multiply two sampled patterns pointwise and check that the product again
/// satisfies the support constraint. Valid inputs must always produce
/// `ProductValid`; the interesting output is the negative control on
/// corrupted inputs.
#[allow(clippy::needless_range_loop)]
pub fn support_product_check(
    p1: &SampledPattern,
    p2: &SampledPattern,
    base: &ColouredComplex,
) -> Result<SupportProductOutcome> {
    if p1.simplices != p2.simplices || p1.samples.len() != p2.samples.len() {
        return Err(Error::MalformedInput(
            "patterns must share their simplex basis and sample points".into(),
        ));
    }
    if let Some((sample, row, col)) = p1.first_violation(base)? {
        return Ok(SupportProductOutcome::InputViolation { which: 1, sample, row, col });
    }
    if let Some((sample, row, col)) = p2.first_violation(base)? {
        return Ok(SupportProductOutcome::InputViolation { which: 2, sample, row, col });
    }

    let dim = p1.simplices.len();
    for (k, ((t1, m1), (t2, m2))) in p1.samples.iter().zip(&p2.samples).enumerate() {
        if t1 != t2 {
            return Err(Error::MalformedInput(
                "patterns are sampled at different points".into(),
            ));
        }
        for i in 0..dim {
            for j in 0..dim {
                let mut entry = BigRational::zero();
                for (s, m1_is) in m1[i].iter().enumerate() {
                    if m1_is.is_zero() || m2[s][j].is_zero() {
                        continue;
                    }
                    entry += m1_is * &m2[s][j];
                }
                if entry.is_zero() {
                    continue;
                }
                if !allowed_region(t1, &p1.simplices[i], &p1.simplices[j], base)? {
                    return Ok(SupportProductOutcome::ProductViolation {
                        sample: k,
                        row: i,
                        col: j,
                    });
                }
            }
        }
    }
    Ok(SupportProductOutcome::ProductValid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{barycentric_subdivision, SimplicialComplex};
    use crate::dual::rat;

    fn triangle_setup() -> (ColouredComplex, Subdivision) {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let sub = barycentric_subdivision(&c);
        let base = sub.coloured().unwrap();
        // subdivide once more to get points expressed over chains of `base`
        let sub2 = barycentric_subdivision(&base.complex);
        (base, sub2)
    }

    #[test]
    fn barycentre_support_is_a_single_vertex() {
        let (base, sub2) = triangle_setup();
        let l = rat(1, 8);
        for s in base.complex.simplices() {
            let v = sub2.vertex_for(s).unwrap();
            let x = BarycentricPoint::barycentre(&Simplex::vertex(v));
            let sup = spectral_support(&x, &base, &sub2, &l).unwrap();
            assert_eq!(sup.support, vec![s.clone()], "barycentre of {s}");
            assert!(sup.is_chain());
        }
    }

    #[test]
    fn interior_point_with_distinct_levels_gives_full_chain() {
        let (base, sub2) = triangle_setup();
        // a maximal chain of the base: vertex ⊂ edge ⊂ triangle
        let max = base
            .complex
            .simplices()
            .find(|s| s.dim() == 2)
            .unwrap()
            .clone();
        let chain: Vec<Simplex> = {
            let verts = max.vertices();
            vec![
                Simplex::new(vec![verts[0]]).unwrap(),
                Simplex::new(vec![verts[0], verts[1]]).unwrap(),
                max.clone(),
            ]
        };
        let carrier = Simplex::new(
            chain.iter().map(|s| sub2.vertex_for(s).unwrap()).collect(),
        )
        .unwrap();
        // top-vertex weights come out as (27/32, 3/32, 2/32); collapsing at
        // L = 4/32 caps only the first, so all three levels stay distinct
        let x = BarycentricPoint::new(carrier, vec![rat(12, 16), rat(1, 16), rat(3, 16)])
            .unwrap();
        let l = rat(1, 8);
        let sup = spectral_support(&x, &base, &sub2, &l).unwrap();
        assert!(sup.is_chain());
        assert_eq!(sup.support.len(), 3);
        assert_eq!(sup.support[2], max);
    }

    #[test]
    fn srf_statement_on_a_sample() {
        let (base, sub2) = triangle_setup();
        let params = crate::dual::DualParams::default_for(base.n);
        for s in base.complex.simplices().filter(|s| s.dim() >= 1) {
            let v = sub2.vertex_for(s).unwrap();
            let x = BarycentricPoint::barycentre(&Simplex::vertex(v));
            let sup = spectral_support(&x, &base, &sub2, &params.l).unwrap();
            for f in FaceSet::all_nonempty(base.n) {
                if !in_region(&sup.colour_image, &f, &Region::CR(params.l.clone())) {
                    continue;
                }
                for a in &sup.support {
                    for b in &sup.support {
                        let common = a.intersection(b).expect("chain members intersect");
                        let colours =
                            FaceSet::new(base.colouring.colour_set(&common).unwrap(), base.n)
                                .unwrap();
                        assert!(
                            f.is_subset(&colours),
                            "x over {s}: f = {f} not within ν({a} ∩ {b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bar_q_identity_on_sigma_and_error_outside() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let sub = barycentric_subdivision(&c);
        let base = sub.coloured().unwrap();
        // a vertex of colour 0 pulls (1,0,0) back to itself
        let v0 = base
            .complex
            .vertex_ids()
            .into_iter()
            .find(|&v| base.colouring.colour(v) == Some(0))
            .unwrap();
        let t = EPoint::vertex(0, base.n);
        let pulled = bar_q(&t, &Simplex::vertex(v0), &base).unwrap();
        assert_eq!(pulled, BarycentricPoint::barycentre(&Simplex::vertex(v0)));

        // on Σ ∩ |ν(σ)| the section inverts the colour map directly
        let edge = base
            .complex
            .simplices()
            .find(|s| s.dim() == 1)
            .unwrap()
            .clone();
        let c0 = base.colouring.colour(edge.vertices()[0]).unwrap();
        let c1 = base.colouring.colour(edge.vertices()[1]).unwrap();
        let mut coords = vec![rat(0, 1); base.n + 1];
        coords[c0] = rat(1, 3);
        coords[c1] = rat(2, 3);
        let t = EPoint::new(coords).unwrap();
        let pulled = bar_q(&t, &edge, &base).unwrap();
        assert_eq!(
            pulled,
            BarycentricPoint::new(edge.clone(), vec![rat(1, 3), rat(2, 3)]).unwrap()
        );

        // outside R_{<=ν(σ)} the section is undefined
        let vertex = Simplex::vertex(edge.vertices()[0]);
        let mut coords = vec![rat(0, 1); base.n + 1];
        // positive weight on a colour not in ν(vertex)
        coords[c0] = rat(1, 2);
        coords[c1] = rat(1, 2);
        let t = EPoint::new(coords).unwrap();
        assert!(bar_q(&t, &vertex, &base).is_err());
    }

    #[test]
    fn bar_q_compatibility_identity() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let sub = barycentric_subdivision(&c);
        let base = sub.coloured().unwrap();
        let simplices: Vec<Simplex> = base.complex.simplices().cloned().collect();
        for a in &simplices {
            for b in &simplices {
                let Some(common) = a.intersection(b) else { continue };
                let f =
                    FaceSet::new(base.colouring.colour_set(&common).unwrap(), base.n).unwrap();
                // a point of R_{<=f}: positive mass on f, negative off f
                let mut coords = vec![rat(0, 1); base.n + 1];
                let members: Vec<usize> = f.members().copied().collect();
                for &i in &members {
                    coords[i] = rat(3, 2 * members.len() as i64);
                }
                for (i, c) in coords.iter_mut().enumerate() {
                    if !f.contains(i) {
                        *c = rat(-1, 2 * (base.n as i64 + 1 - members.len() as i64));
                    }
                }
                let total: BigRational = coords.iter().cloned().sum();
                let t = EPoint::new(coords.iter().map(|c| c / &total).collect()).unwrap();
                assert!(in_region(&t, &f, &Region::RLe));
                let qa = bar_q(&t, a, &base).unwrap();
                let qb = bar_q(&t, b, &base).unwrap();
                assert_eq!(qa.minimal(), qb.minimal(), "t = {t}, a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn product_check_on_diagonal_and_corrupted_patterns() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let sub = barycentric_subdivision(&c);
        let base = sub.coloured().unwrap();
        let simplices: Vec<Simplex> = base.complex.simplices().cloned().collect();
        let dim = simplices.len();
        let points = [EPoint::barycentre(base.n), EPoint::vertex(0, base.n)];

        let diagonal = |scale: i64| -> SampledPattern {
            let samples = points
                .iter()
                .map(|t| {
                    let mut m = vec![vec![rat(0, 1); dim]; dim];
                    for (i, row) in m.iter_mut().enumerate() {
                        let f = FaceSet::new(
                            base.colouring.colour_set(&simplices[i]).unwrap(),
                            base.n,
                        )
                        .unwrap();
                        if in_region(t, &f, &Region::RLe) {
                            row[i] = rat(scale + i as i64, 1);
                        }
                    }
                    (t.clone(), m)
                })
                .collect();
            SampledPattern { simplices: simplices.clone(), samples }
        };
        let p1 = diagonal(1);
        let p2 = diagonal(2);
        assert_eq!(
            support_product_check(&p1, &p2, &base).unwrap(),
            SupportProductOutcome::ProductValid
        );

        // corrupt: nonzero entry for a disjoint pair
        let i = simplices.iter().position(|s| s.dim() == 0).unwrap();
        let j = simplices
            .iter()
            .position(|s| s.dim() == 0 && simplices[i].intersection(s).is_none())
            .unwrap();
        let mut bad = p1.clone();
        bad.samples[0].1[i][j] = rat(1, 1);
        assert_eq!(
            support_product_check(&bad, &p2, &base).unwrap(),
            SupportProductOutcome::InputViolation { which: 1, sample: 0, row: i, col: j }
        );
    }
}

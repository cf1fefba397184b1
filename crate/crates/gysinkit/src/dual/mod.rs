//! Exact-rational verification layer for the finite geometry of the
//! combinatorial dual: the hyperplane `E`, the sign/threshold regions
//! `R_f`, `R_{<=f}`, `CR_f`, the retraction `q`, the collapsing map, radial
//! expansion with its `δ` witness, and the spectral support machinery.
//!
//! Everything here is piecewise linear over `Q`; no floating point appears
//! anywhere, so every verified inequality is a proof at its sample point.

mod spectral;
mod suite;

pub use spectral::{
    bar_q, colour_image, spectral_support, support_product_check, SampledPattern,
    SpectralSupport, SupportProductOutcome,
};
pub use suite::{verify_dual, DualSuiteReport, GridName, SampleGrid, SuiteOptions, SuiteRow};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A point of the affine hyperplane `E = { t ∈ R^{n+1} | Σ t_i = 1 }`,
/// with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPoint {
    coords: Vec<BigRational>,
}

impl EPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::MalformedInput("a point of E needs coordinates".into()));
        }
        let total: BigRational = coords.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::MalformedInput(format!(
                "coordinates sum to {total}, expected 1"
            )));
        }
        Ok(EPoint { coords })
    }

    pub fn from_ints(coords: &[i64], denom: i64) -> Result<Self> {
        Self::new(coords.iter().map(|&c| rat(c, denom)).collect())
    }

    /// Ambient simplex dimension `n` (coordinates are indexed by `0..=n`).
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BigRational {
        &self.coords[i]
    }

    pub fn is_in_sigma(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// The barycentre of the standard simplex.
    pub fn barycentre(n: usize) -> Self {
        EPoint { coords: vec![rat(1, n as i64 + 1); n + 1] }
    }

    /// The vertex `e_i`.
    pub fn vertex(i: usize, n: usize) -> Self {
        let mut coords = vec![BigRational::zero(); n + 1];
        coords[i] = BigRational::one();
        EPoint { coords }
    }

    /// The barycentre `ξ_f` of a face.
    pub fn face_barycentre(f: &FaceSet) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::MalformedInput("the empty face has no barycentre".into()));
        }
        let w = BigRational::new(BigInt::one(), BigInt::from(f.len() as i64));
        let mut coords = vec![BigRational::zero(); f.n() + 1];
        for &i in f.members() {
            coords[i] = w.clone();
        }
        Ok(EPoint { coords })
    }

    /// Affine midpoint, which stays in `E`.
    pub fn midpoint(&self, other: &EPoint) -> EPoint {
        let half = rat(1, 2);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a + b) * &half)
            .collect();
        EPoint { coords }
    }
}

impl std::fmt::Display for EPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the colour set `{0, ..., n}`; the empty set is allowed only
/// as the colour set of the empty simplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceSet {
    members: BTreeSet<usize>,
    n: usize,
}

impl FaceSet {
    pub fn new(members: BTreeSet<usize>, n: usize) -> Result<Self> {
        if members.iter().any(|&i| i > n) {
            return Err(Error::MalformedInput(format!(
                "face member out of range 0..={n}"
            )));
        }
        Ok(FaceSet { members, n })
    }

    pub fn empty(n: usize) -> Self {
        FaceSet { members: BTreeSet::new(), n }
    }

    pub fn full(n: usize) -> Self {
        FaceSet { members: (0..=n).collect(), n }
    }

    pub fn from_slice(members: &[usize], n: usize) -> Result<Self> {
        Self::new(members.iter().copied().collect(), n)
    }

    /// All `2^{n+1} - 1` nonempty faces, in a deterministic order.
    pub fn all_nonempty(n: usize) -> Vec<FaceSet> {
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << (n + 1)) {
            let members = (0..=n).filter(|&i| mask & (1 << i) != 0).collect();
            out.push(FaceSet { members, n });
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> impl Iterator<Item = &usize> {
        self.members.iter()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn intersection(&self, other: &FaceSet) -> FaceSet {
        FaceSet {
            members: self.members.intersection(&other.members).copied().collect(),
            n: self.n,
        }
    }

    pub fn is_subset(&self, other: &FaceSet) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl std::fmt::Display for FaceSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Which region predicate to test in [`in_region`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    /// `R_f`: `t_i >= 0` on `f`, `t_i <= 0` off `f`.
    R,
    /// `R_{<=f}`: `t_i <= 0` off `f`.
    RLe,
    /// `CR_f ⊆ Σ`: `t_i >= L` on `f`, `0 <= t_i <= L` off `f`.
    CR(BigRational),
    /// The closed face `|f| ⊆ Σ`: `t_i >= 0` on `f`, `t_i = 0` off `f`.
    Face,
}

/// Exact membership test for the four region families. The empty-face
/// conventions need no special cases: no point of `E` has every coordinate
/// `<= 0`, so `R_∅`, `R_{<=∅}`, `CR_∅` and `|∅|` all come out empty.
pub fn in_region(t: &EPoint, f: &FaceSet, region: &Region) -> bool {
    debug_assert_eq!(t.n(), f.n());
    let zero = BigRational::zero();
    match region {
        Region::R => (0..=t.n()).all(|i| {
            if f.contains(i) {
                t.coord(i) >= &zero
            } else {
                t.coord(i) <= &zero
            }
        }),
        Region::RLe => (0..=t.n()).all(|i| f.contains(i) || t.coord(i) <= &zero),
        Region::CR(l) => (0..=t.n()).all(|i| {
            if f.contains(i) {
                t.coord(i) >= l
            } else {
                t.coord(i) >= &zero && t.coord(i) <= l
            }
        }),
        Region::Face => (0..=t.n()).all(|i| {
            if f.contains(i) {
                t.coord(i) >= &zero
            } else {
                t.coord(i).is_zero()
            }
        }),
    }
}

/// Homogeneous coordinates: rescale so the coordinates sum to one. Errors
/// on a zero sum.
pub fn homogeneous(coords: &[BigRational]) -> Result<EPoint> {
    let total: BigRational = coords.iter().cloned().sum();
    if total.is_zero() {
        return Err(Error::MalformedInput(
            "homogeneous coordinates need a nonzero sum".into(),
        ));
    }
    EPoint::new(coords.iter().map(|c| c / &total).collect())
}

/// The retraction `q : E → Σ`, clipping negatives and renormalising. Some
/// coordinate of an `E`-point is positive, so the clip never sums to zero.
pub fn retraction_q(t: &EPoint) -> EPoint {
    let zero = BigRational::zero();
    let clipped: Vec<BigRational> = t
        .coords()
        .iter()
        .map(|c| if c.is_negative() { zero.clone() } else { c.clone() })
        .collect();
    homogeneous(&clipped).expect("an E-point has a positive coordinate")
}

fn check_collapse_bound(l: &BigRational, n: usize) -> Result<()> {
    if l <= &BigRational::zero() || l >= &rat(1, n as i64 + 1) {
        return Err(Error::Validation(format!(
            "collapse level L = {l} is outside (0, 1/{})",
            n + 1
        )));
    }
    Ok(())
}

/// The collapsing map on `Σ`: cap every coordinate at `L`, then
/// renormalise. Requires `0 < L < 1/(n+1)` and `t ∈ Σ`.
pub fn collapse(t: &EPoint, l: &BigRational) -> Result<EPoint> {
    check_collapse_bound(l, t.n())?;
    if !t.is_in_sigma() {
        return Err(Error::Validation(format!("collapse input {t} is not in Σ")));
    }
    let capped: Vec<BigRational> = t
        .coords()
        .iter()
        .map(|c| if c > l { l.clone() } else { c.clone() })
        .collect();
    homogeneous(&capped)
}

/// Radial expansion about the barycentre: `t ↦ λt - (λ-1)/(n+1)` in every
/// coordinate. `λ = 1` is the identity; `λ < 1` is rejected.
pub fn radial_expand(t: &EPoint, lambda: &BigRational) -> Result<EPoint> {
    if lambda < &BigRational::one() {
        return Err(Error::Validation(format!(
            "radial expansion needs λ >= 1, got {lambda}"
        )));
    }
    let shift = (lambda - BigRational::one()) / rat(t.n() as i64 + 1, 1);
    EPoint::new(t.coords().iter().map(|c| lambda * c - &shift).collect())
}

/// The perturbation radius witnessing the expansion lemma:
/// `δ = (λ-1)/(n+1) - λL`, positive exactly when `λ > (1-(n+1)L)^{-1}`.
pub fn delta_witness(l: &BigRational, lambda: &BigRational, n: usize) -> Result<BigRational> {
    check_collapse_bound(l, n)?;
    let delta = (lambda - BigRational::one()) / rat(n as i64 + 1, 1) - lambda * l;
    if delta <= BigRational::zero() {
        return Err(Error::Validation(format!(
            "λ = {lambda} does not exceed the critical value (1-(n+1)L)^(-1) for L = {l}"
        )));
    }
    Ok(delta)
}

/// Validated parameters of the dual construction for one ambient dimension.
#[derive(Debug, Clone)]
pub struct DualParams {
    pub n: usize,
    pub l: BigRational,
    pub lambda: BigRational,
    pub delta: BigRational,
}

impl DualParams {
    pub fn new(n: usize, l: BigRational, lambda: BigRational) -> Result<Self> {
        let delta = delta_witness(&l, &lambda, n)?;
        Ok(DualParams { n, l, lambda, delta })
    }

    /// Comfortable defaults: `L = 1/(2(n+1))`, `λ = 4` (twice the critical
    /// value), `δ` from the witness formula.
    pub fn default_for(n: usize) -> Self {
        let l = BigRational::new(BigInt::one(), BigInt::from(2 * (n as i64 + 1)));
        Self::new(n, l, rat(4, 1)).expect("defaults satisfy the strict bounds")
    }

    /// The critical expansion factor `(1 - (n+1)L)^{-1}`.
    pub fn critical_lambda(&self) -> BigRational {
        let one = BigRational::one();
        &one / (&one - rat(self.n as i64 + 1, 1) * &self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneous_examples() {
        let p = homogeneous(&[rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(p, EPoint::vertex(0, 2));
        let p = homogeneous(&[rat(2, 1), rat(2, 1), rat(0, 1)]).unwrap();
        assert_eq!(p.coords(), &[rat(1, 2), rat(1, 2), rat(0, 1)]);
        let p = homogeneous(&[rat(1, 4), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(p, EPoint::vertex(0, 2));
        // scaling invariance
        let a = homogeneous(&[rat(3, 1), rat(-1, 1), rat(2, 1)]).unwrap();
        let b = homogeneous(&[rat(3, 2), rat(-1, 2), rat(1, 1)]).unwrap();
        assert_eq!(a, b);
        assert!(homogeneous(&[rat(1, 1), rat(-1, 1)]).is_err());
    }

    #[test]
    fn region_examples() {
        // R_full = Σ
        let full = FaceSet::full(2);
        let bc = EPoint::barycentre(2);
        assert!(in_region(&bc, &full, &Region::R));
        // R_∅ is empty on E
        let empty = FaceSet::empty(2);
        assert!(!in_region(&bc, &empty, &Region::R));
        assert!(!in_region(&bc, &empty, &Region::RLe));
        // signs: (1, -1/2, 1/2) ∈ R_{0,2}
        let t = EPoint::new(vec![rat(1, 1), rat(-1, 2), rat(1, 2)]).unwrap();
        let f02 = FaceSet::from_slice(&[0, 2], 2).unwrap();
        assert!(in_region(&t, &f02, &Region::R));
        let f01 = FaceSet::from_slice(&[0, 1], 2).unwrap();
        assert!(!in_region(&t, &f01, &Region::R));
        assert!(in_region(&t, &f02, &Region::RLe));
    }

    #[test]
    fn retraction_examples() {
        let bc = EPoint::barycentre(2);
        assert_eq!(retraction_q(&bc), bc);
        let t = EPoint::new(vec![rat(2, 1), rat(-1, 1)]).unwrap();
        assert_eq!(retraction_q(&t), EPoint::vertex(0, 1));
        let t = EPoint::new(vec![rat(3, 2), rat(-1, 4), rat(-1, 4)]).unwrap();
        assert_eq!(retraction_q(&t), EPoint::vertex(0, 2));
    }

    #[test]
    fn collapse_examples() {
        let l = rat(1, 4);
        let bc = EPoint::barycentre(2);
        assert_eq!(collapse(&bc, &l).unwrap(), bc);
        let v = EPoint::vertex(0, 2);
        assert_eq!(collapse(&v, &l).unwrap(), v);
        let t = EPoint::new(vec![rat(7, 10), rat(2, 10), rat(1, 10)]).unwrap();
        let c = collapse(&t, &l).unwrap();
        assert_eq!(c.coords(), &[rat(5, 11), rat(4, 11), rat(2, 11)]);
        // out-of-range L
        assert!(collapse(&bc, &rat(1, 2)).is_err());
        assert!(collapse(&bc, &rat(0, 1)).is_err());
    }

    #[test]
    fn radial_expansion_examples() {
        let bc = EPoint::barycentre(3);
        // λ = 1 is the identity
        let t = EPoint::new(vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)]).unwrap();
        assert_eq!(radial_expand(&t, &rat(1, 1)).unwrap(), t);
        // the barycentre is fixed for every λ
        assert_eq!(radial_expand(&bc, &rat(7, 2)).unwrap(), bc);
        assert!(radial_expand(&t, &rat(1, 2)).is_err());
    }

    #[test]
    fn delta_witness_examples() {
        // L = 1/5, n = 1, λ = 3: δ = 1 - 3/5 = 2/5
        assert_eq!(delta_witness(&rat(1, 5), &rat(3, 1), 1).unwrap(), rat(2, 5));
        // at the critical λ the witness degenerates
        assert!(delta_witness(&rat(1, 4), &rat(2, 1), 1).is_err());
    }

    #[test]
    fn default_params() {
        for n in 0..=4 {
            let p = DualParams::default_for(n);
            assert_eq!(p.lambda, rat(4, 1));
            assert_eq!(p.critical_lambda(), rat(2, 1));
            assert_eq!(p.delta, BigRational::new(BigInt::one(), BigInt::from(n as i64 + 1)));
        }
    }

    #[test]
    fn critical_lambda_identity_on_samples() {
        // CR_f = r_λ^{-1}(R_f) at λ = (1-(n+1)L)^{-1}, here n = 1, L = 1/4, λ = 2
        let l = rat(1, 4);
        let lambda = rat(2, 1);
        for a in 0..=12i64 {
            let s = EPoint::from_ints(&[a, 12 - a], 12).unwrap();
            let r = radial_expand(&s, &lambda).unwrap();
            for f in FaceSet::all_nonempty(1) {
                assert_eq!(
                    in_region(&s, &f, &Region::CR(l.clone())),
                    in_region(&r, &f, &Region::R),
                    "s = {s}, f = {f}"
                );
            }
        }
    }
}

//! Finite simplicial complexes: face closure, Euler characteristics,
//! barycentric subdivision with its canonical colouring, and the affine
//! colour map into the standard simplex.
//!
//! Simplices are nonempty strictly increasing lists of integer vertex ids;
//! the empty set is never a simplex. All geometry is exact rational.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nonempty simplex, stored as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<i64>,
}

impl Simplex {
    /// Build a simplex from an arbitrary vertex list. Vertices are sorted;
    /// duplicates or an empty list are malformed input.
    pub fn new(mut vertices: Vec<i64>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedInput("a simplex must be nonempty".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!(
                "duplicate vertex inside simplex {vertices:?}"
            )));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertex(v: i64) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// All nonempty proper faces (subsets), of every codimension.
    pub fn proper_faces(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut faces = Vec::new();
        // iterate over nonempty proper subsets by bitmask
        for mask in 1u32..((1u32 << n) - 1) {
            let verts: Vec<i64> = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            faces.push(Simplex { vertices: verts });
        }
        faces
    }

    /// Codimension-one faces, each obtained by dropping one vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|skip| {
                let verts: Vec<i64> = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                Simplex { vertices: verts }
            })
            .collect()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
    }

    /// Common face `self ∩ other`, when nonempty.
    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let common: Vec<i64> = self
            .vertices
            .iter()
            .filter(|v| other.vertices.binary_search(v).is_ok())
            .copied()
            .collect();
        if common.is_empty() {
            None
        } else {
            Some(Simplex { vertices: common })
        }
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A finite, face-closed, nonempty simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
    dim: usize,
}

impl SimplicialComplex {
    /// Face closure of the given simplices. The closure of an empty input is
    /// the empty complex, which is rejected.
    pub fn close_under_faces(maximal: &[Simplex]) -> Result<Self> {
        if maximal.is_empty() {
            return Err(Error::MalformedInput(
                "cannot construct an empty complex".into(),
            ));
        }
        let mut simplices = BTreeSet::new();
        for s in maximal {
            simplices.insert(s.clone());
            for f in s.proper_faces() {
                simplices.insert(f);
            }
        }
        let dim = simplices.iter().map(|s| s.dim()).max().unwrap();
        Ok(SimplicialComplex { simplices, dim })
    }

    /// Convenience: face closure from raw vertex lists.
    pub fn from_maximal(maximal: &[Vec<i64>]) -> Result<Self> {
        let simplices: Result<Vec<Simplex>> =
            maximal.iter().map(|v| Simplex::new(v.clone())).collect();
        Self::close_under_faces(&simplices?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    /// Simplices of dimension `k`, in sorted order.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| s.dim() == k).collect()
    }

    pub fn vertex_ids(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self
            .simplices
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Alternating sum of simplex counts per dimension.
    pub fn euler_char(&self) -> i64 {
        let mut chi: i64 = 0;
        for s in &self.simplices {
            if s.dim() % 2 == 0 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        chi
    }

    /// Connected components of the 1-skeleton; returns one sorted vertex set
    /// per component, sorted by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<i64>> {
        let vertices = self.vertex_ids();
        let mut parent: HashMap<i64, i64> = vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut HashMap<i64, i64>, v: i64) -> i64 {
            let p = parent[&v];
            if p == v {
                return v;
            }
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
        for s in self.simplices.iter().filter(|s| s.dim() == 1) {
            let (a, b) = (s.vertices()[0], s.vertices()[1]);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
        let mut comps: BTreeMap<i64, BTreeSet<i64>> = BTreeMap::new();
        for &v in &vertices {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().insert(v);
        }
        let mut out: Vec<BTreeSet<i64>> = comps.into_values().collect();
        out.sort_by_key(|c| *c.iter().next().unwrap());
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// A vertex colouring, injective on the vertices of every simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: BTreeMap<i64, usize>,
}

impl Colouring {
    pub fn new(colours: BTreeMap<i64, usize>) -> Self {
        Colouring { colours }
    }

    pub fn colour(&self, v: i64) -> Option<usize> {
        self.colours.get(&v).copied()
    }

    pub fn max_colour(&self) -> usize {
        self.colours.values().copied().max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&i64, &usize)> {
        self.colours.iter()
    }

    /// Colour set of a simplex (the extension of the colouring to faces).
    pub fn colour_set(&self, s: &Simplex) -> Result<BTreeSet<usize>> {
        s.vertices()
            .iter()
            .map(|v| {
                self.colour(*v).ok_or_else(|| {
                    Error::Validation(format!("vertex {v} has no colour"))
                })
            })
            .collect()
    }
}

/// Outcome of [`validate_colouring`]: either every simplex has pairwise
/// distinct vertex colours, or the first offending simplex is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColouringCheck {
    Ok,
    Violation { simplex: Simplex },
}

/// Check injectivity of the colouring on each simplex. The report names the
/// first offending simplex in sorted order.
pub fn validate_colouring(c: &SimplicialComplex, nu: &Colouring) -> Result<ColouringCheck> {
    for v in c.vertex_ids() {
        if nu.colour(v).is_none() {
            return Err(Error::Validation(format!(
                "colouring not defined on vertex {v}"
            )));
        }
    }
    for s in c.simplices() {
        let mut seen = HashSet::new();
        for v in s.vertices() {
            if !seen.insert(nu.colour(*v).unwrap()) {
                return Ok(ColouringCheck::Violation { simplex: s.clone() });
            }
        }
    }
    Ok(ColouringCheck::Ok)
}

/// A simplicial complex together with a validated colouring into `{0..n}`.
#[derive(Debug, Clone)]
pub struct ColouredComplex {
    pub complex: SimplicialComplex,
    pub colouring: Colouring,
    /// Ambient colour bound `n`; colours live in `{0, ..., n}`.
    pub n: usize,
}

impl ColouredComplex {
    pub fn new(complex: SimplicialComplex, colouring: Colouring) -> Result<Self> {
        match validate_colouring(&complex, &colouring)? {
            ColouringCheck::Ok => {}
            ColouringCheck::Violation { simplex } => {
                return Err(Error::Validation(format!(
                    "colouring is not injective on simplex {simplex}"
                )))
            }
        }
        let n = colouring.max_colour().max(complex.dim());
        Ok(ColouredComplex { complex, colouring, n })
    }
}

/// The barycentric subdivision of a complex, with the canonical colouring
/// and the bookkeeping identifying new vertices with old simplices.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub colouring: Colouring,
    /// `vertex_to_simplex[new vertex id] = simplex of the input complex`.
    pub vertex_to_simplex: Vec<Simplex>,
    simplex_to_vertex: HashMap<Simplex, i64>,
}

impl Subdivision {
    pub fn vertex_for(&self, s: &Simplex) -> Option<i64> {
        self.simplex_to_vertex.get(s).copied()
    }

    pub fn simplex_for(&self, v: i64) -> Option<&Simplex> {
        usize::try_from(v).ok().and_then(|i| self.vertex_to_simplex.get(i))
    }

    /// View the subdivision as a coloured complex (the canonical colouring
    /// sends a chain element to its dimension).
    pub fn coloured(&self) -> Result<ColouredComplex> {
        ColouredComplex::new(self.complex.clone(), self.colouring.clone())
    }
}

/// Barycentric subdivision. New vertices are the simplices of the input
/// (numbered in sorted order), new simplices are the strictly increasing
/// face chains, and the canonical colouring records chain-element dimension.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> Subdivision {
    let old: Vec<Simplex> = c.simplices().cloned().collect();
    let simplex_to_vertex: HashMap<Simplex, i64> = old
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as i64))
        .collect();

    // enumerate all strictly increasing chains in the face partial order
    let mut chains: Vec<Vec<i64>> = Vec::new();
    let mut memo: HashMap<Simplex, Vec<Vec<i64>>> = HashMap::new();
    fn chains_ending_at(
        s: &Simplex,
        c: &SimplicialComplex,
        ids: &HashMap<Simplex, i64>,
        memo: &mut HashMap<Simplex, Vec<Vec<i64>>>,
    ) -> Vec<Vec<i64>> {
        if let Some(cached) = memo.get(s) {
            return cached.clone();
        }
        let id = ids[s];
        let mut out = vec![vec![id]];
        for face in s.proper_faces() {
            if !c.contains(&face) {
                continue;
            }
            for mut chain in chains_ending_at(&face, c, ids, memo) {
                chain.push(id);
                out.push(chain);
            }
        }
        memo.insert(s.clone(), out.clone());
        out
    }
    for s in &old {
        chains.extend(chains_ending_at(s, c, &simplex_to_vertex, &mut memo));
    }

    let maximal: Vec<Simplex> = chains
        .into_iter()
        .map(|chain| Simplex::new(chain).expect("chain vertices are distinct ids"))
        .collect();
    let complex = SimplicialComplex::close_under_faces(&maximal)
        .expect("subdivision of a nonempty complex is nonempty");

    let colours: BTreeMap<i64, usize> = old
        .iter()
        .enumerate()
        .map(|(i, s)| (i as i64, s.dim()))
        .collect();

    Subdivision {
        complex,
        colouring: Colouring::new(colours),
        vertex_to_simplex: old,
        simplex_to_vertex,
    }
}

/// A point of a complex in barycentric coordinates: a carrier simplex and
/// nonnegative rational weights on its vertices summing to one.
#[derive(Debug, Clone)]
pub struct BarycentricPoint {
    carrier: Simplex,
    weights: Vec<BigRational>,
}

impl BarycentricPoint {
    pub fn new(carrier: Simplex, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != carrier.vertices().len() {
            return Err(Error::MalformedInput(
                "weight count does not match carrier vertex count".into(),
            ));
        }
        if weights.iter().any(|w| w < &BigRational::zero()) {
            return Err(Error::MalformedInput("negative barycentric weight".into()));
        }
        let total: BigRational = weights.iter().cloned().sum();
        if !total.is_one() {
            return Err(Error::MalformedInput(format!(
                "barycentric weights sum to {total}, expected 1"
            )));
        }
        Ok(BarycentricPoint { carrier, weights })
    }

    /// The barycentre of a simplex: equal weights on every vertex.
    pub fn barycentre(s: &Simplex) -> Self {
        let k = s.vertices().len();
        let w = BigRational::new(BigInt::one(), BigInt::from(k as i64));
        BarycentricPoint { carrier: s.clone(), weights: vec![w; k] }
    }

    pub fn carrier(&self) -> &Simplex {
        &self.carrier
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight_of(&self, v: i64) -> BigRational {
        match self.carrier.vertices().binary_search(&v) {
            Ok(i) => self.weights[i].clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Restrict to the vertices of strictly positive weight.
    pub fn minimal(&self) -> BarycentricPoint {
        let mut verts = Vec::new();
        let mut weights = Vec::new();
        for (v, w) in self.carrier.vertices().iter().zip(&self.weights) {
            if !w.is_zero() {
                verts.push(*v);
                weights.push(w.clone());
            }
        }
        BarycentricPoint {
            carrier: Simplex::new(verts).expect("positive weights exist"),
            weights,
        }
    }
}

impl PartialEq for BarycentricPoint {
    fn eq(&self, other: &Self) -> bool {
        let a = self.minimal();
        let b = other.minimal();
        a.carrier == b.carrier && a.weights == b.weights
    }
}

/// The affine colour map `|ν|` applied to one point: coordinate `i` of the
/// image is the total weight of carrier vertices of colour `i`. The output
/// lives in the standard simplex in `R^{n+1}`.
pub fn colour_map_point(
    x: &BarycentricPoint,
    nu: &Colouring,
    n: usize,
) -> Result<Vec<BigRational>> {
    let mut coords = vec![BigRational::zero(); n + 1];
    let mut seen = HashSet::new();
    for (v, w) in x.carrier().vertices().iter().zip(x.weights()) {
        let colour = nu
            .colour(*v)
            .ok_or_else(|| Error::Validation(format!("vertex {v} has no colour")))?;
        if colour > n {
            return Err(Error::Validation(format!(
                "colour {colour} exceeds ambient bound {n}"
            )));
        }
        if !seen.insert(colour) {
            return Err(Error::Validation(format!(
                "colouring is not injective on carrier {}",
                x.carrier()
            )));
        }
        coords[colour] += w;
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn closure_of_triangle() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(c.simplex_count(), 7);
        assert_eq!(c.simplices_of_dim(0).len(), 3);
        assert_eq!(c.simplices_of_dim(1).len(), 3);
        assert_eq!(c.simplices_of_dim(2).len(), 1);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn closure_single_vertex() {
        let c = SimplicialComplex::from_maximal(&[vec![0]]).unwrap();
        assert_eq!(c.simplex_count(), 1);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn closure_hollow_triangle() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(c.simplex_count(), 6);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn closure_rejects_bad_input() {
        assert!(SimplicialComplex::from_maximal(&[vec![0, 0, 1]]).is_err());
        assert!(SimplicialComplex::from_maximal(&[]).is_err());
        assert!(Simplex::new(vec![]).is_err());
    }

    #[test]
    fn closure_idempotent() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let all: Vec<Simplex> = c.simplices().cloned().collect();
        let again = SimplicialComplex::close_under_faces(&all).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn euler_characteristics() {
        let triangle = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(triangle.euler_char(), 1);
        let hollow = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(hollow.euler_char(), 0);
    }

    #[test]
    fn subdivision_of_edge() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let sub = barycentric_subdivision(&c);
        assert_eq!(sub.complex.simplices_of_dim(0).len(), 3);
        assert_eq!(sub.complex.simplices_of_dim(1).len(), 2);
        // colours: the two old vertices get 0, the old edge gets 1
        let colours: Vec<usize> = sub
            .complex
            .vertex_ids()
            .iter()
            .map(|&v| sub.colouring.colour(v).unwrap())
            .collect();
        assert_eq!(colours.iter().filter(|&&c| c == 0).count(), 2);
        assert_eq!(colours.iter().filter(|&&c| c == 1).count(), 1);
    }

    #[test]
    fn subdivision_of_triangle_counts() {
        // brute-force chain enumeration oracle: chains in the 7-element face
        // poset of a 2-simplex: 7 singletons, 12 pairs, 6 triples
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let sub = barycentric_subdivision(&c);
        assert_eq!(sub.complex.simplices_of_dim(0).len(), 7);
        assert_eq!(sub.complex.simplices_of_dim(1).len(), 12);
        assert_eq!(sub.complex.simplices_of_dim(2).len(), 6);
        assert_eq!(sub.complex.euler_char(), 1);
    }

    #[test]
    fn subdivision_preserves_euler_char() {
        let corpus = [
            SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap(),
            SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap(),
            SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![1, 2, 3], vec![4]]).unwrap(),
            SimplicialComplex::from_maximal(&[vec![0, 1, 2, 3]]).unwrap(),
        ];
        for c in corpus {
            let sub = barycentric_subdivision(&c);
            assert_eq!(sub.complex.euler_char(), c.euler_char());
        }
    }

    #[test]
    fn canonical_colouring_validates() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let sub = barycentric_subdivision(&c);
        assert_eq!(
            validate_colouring(&sub.complex, &sub.colouring).unwrap(),
            ColouringCheck::Ok
        );
    }

    #[test]
    fn colouring_violation_reported() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 0)]));
        let check = validate_colouring(&c, &nu).unwrap();
        assert_eq!(
            check,
            ColouringCheck::Violation { simplex: Simplex::new(vec![0, 1]).unwrap() }
        );
    }

    #[test]
    fn hollow_triangle_rainbow_colouring_ok() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
        assert_eq!(validate_colouring(&c, &nu).unwrap(), ColouringCheck::Ok);
    }

    #[test]
    fn colour_map_examples() {
        // vertex of colour 2, n = 2
        let nu = Colouring::new(BTreeMap::from([(5, 2)]));
        let x = BarycentricPoint::barycentre(&Simplex::vertex(5));
        assert_eq!(
            colour_map_point(&x, &nu, 2).unwrap(),
            vec![rat(0, 1), rat(0, 1), rat(1, 1)]
        );

        // midpoint of an edge coloured (0, 1)
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 1)]));
        let edge = Simplex::new(vec![0, 1]).unwrap();
        let mid = BarycentricPoint::new(edge, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(
            colour_map_point(&mid, &nu, 2).unwrap(),
            vec![rat(1, 2), rat(1, 2), rat(0, 1)]
        );

        // barycentre of a k-simplex maps to the barycentre of its colour face
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 2), (2, 1)]));
        let tri = Simplex::new(vec![0, 1, 2]).unwrap();
        let bc = BarycentricPoint::barycentre(&tri);
        assert_eq!(
            colour_map_point(&bc, &nu, 2).unwrap(),
            vec![rat(1, 3), rat(1, 3), rat(1, 3)]
        );
    }

    #[test]
    fn colour_map_rejects_invalid_colouring() {
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 0)]));
        let edge = Simplex::new(vec![0, 1]).unwrap();
        let mid = BarycentricPoint::new(edge, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(colour_map_point(&mid, &nu, 2).is_err());
    }

    #[test]
    fn colour_map_injective_on_simplex_samples() {
        let nu = Colouring::new(BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
        let tri = Simplex::new(vec![0, 1, 2]).unwrap();
        let mut samples = Vec::new();
        for a in 0..=4i64 {
            for b in 0..=(4 - a) {
                let c = 4 - a - b;
                samples.push(
                    BarycentricPoint::new(
                        tri.clone(),
                        vec![rat(a, 4), rat(b, 4), rat(c, 4)],
                    )
                    .unwrap(),
                );
            }
        }
        for (i, x) in samples.iter().enumerate() {
            for y in &samples[i + 1..] {
                assert_ne!(
                    colour_map_point(x, &nu, 2).unwrap(),
                    colour_map_point(y, &nu, 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn components_found() {
        let c =
            SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![5, 6], vec![9]]).unwrap();
        let comps = c.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], BTreeSet::from([0, 1, 2]));
        assert_eq!(comps[1], BTreeSet::from([5, 6]));
        assert_eq!(comps[2], BTreeSet::from([9]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn generated_complex() -> impl Strategy<Value = SimplicialComplex> {
            // up to five maximal simplices over an eight-vertex universe
            proptest::collection::vec(
                proptest::collection::btree_set(0i64..8, 1..=4),
                1..=5,
            )
            .prop_map(|sets| {
                let maximal: Vec<Vec<i64>> =
                    sets.into_iter().map(|s| s.into_iter().collect()).collect();
                SimplicialComplex::from_maximal(&maximal).expect("sets have distinct vertices")
            })
        }

        proptest! {
            #[test]
            fn closure_is_idempotent(c in generated_complex()) {
                let all: Vec<Simplex> = c.simplices().cloned().collect();
                prop_assert_eq!(SimplicialComplex::close_under_faces(&all).unwrap(), c);
            }

            #[test]
            fn subdivision_preserves_euler_char_generated(c in generated_complex()) {
                let sub = barycentric_subdivision(&c);
                prop_assert_eq!(sub.complex.euler_char(), c.euler_char());
                prop_assert_eq!(
                    validate_colouring(&sub.complex, &sub.colouring).unwrap(),
                    ColouringCheck::Ok
                );
            }
        }
    }
}

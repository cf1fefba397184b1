//! Group actions on simplicial complexes, in two presentations: an explicit
//! finite group acting by vertex permutations, or abstract orbit data
//! (dimension plus stabiliser label per orbit) for groups that cannot be
//! enumerated. Computes fixed-point subcomplexes, orbit/stabiliser tables,
//! the equivariant Euler decomposition and the Euler-Poincaré element.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{barycentric_subdivision, Simplex, SimplicialComplex, Subdivision};
use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Elements are indices
/// `0..n`; the table is validated at construction (identity, inverses,
/// associativity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedInput("empty multiplication table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&e| e >= n) {
                return Err(Error::MalformedInput(
                    "multiplication table is not square over 0..n".into(),
                ));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::Validation("group table has no identity".into()))?;
        for (i, row) in table.iter().enumerate() {
            if !(0..n).any(|j| row[j] == identity && table[j][i] == identity) {
                return Err(Error::Validation(format!("element {i} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup { table, identity: 0 }
    }

    /// Build a group from a closed set of permutations (of `0..k`); the
    /// element indices follow the order of `perms`.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index: HashMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = vec![vec![0; perms.len()]; perms.len()];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // (p ∘ q)(x) = p(q(x))
                let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                let k = *index.get(&composed).ok_or_else(|| {
                    Error::MalformedInput("permutation set is not closed".into())
                })?;
                table[i][j] = k;
            }
        }
        FiniteGroup::new(table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated group has inverses")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }

    /// Is the given element set closed under multiplication (hence a
    /// subgroup, the set being finite and nonempty)?
    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        if h.is_empty() {
            return false;
        }
        let set: BTreeSet<usize> = h.iter().copied().collect();
        set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// The conjugate `g H g^{-1}` as a sorted element list.
    pub fn conjugate(&self, g: usize, h: &[usize]) -> Vec<usize> {
        let gi = self.inv(g);
        let mut out: Vec<usize> = h.iter().map(|&x| self.mul(self.mul(g, x), gi)).collect();
        out.sort_unstable();
        out
    }

    /// Normaliser `N(H) = { g | g H g^{-1} = H }`.
    pub fn normaliser(&self, h: &[usize]) -> Vec<usize> {
        let mut sorted = h.to_vec();
        sorted.sort_unstable();
        self.elements().filter(|&g| self.conjugate(g, &sorted) == sorted).collect()
    }
}

/// An explicit action: one vertex permutation per group element.
#[derive(Debug, Clone)]
pub struct ExplicitAction {
    pub group: FiniteGroup,
    vertex_perms: Vec<BTreeMap<i64, i64>>,
}

impl ExplicitAction {
    pub fn new(group: FiniteGroup, vertex_perms: Vec<BTreeMap<i64, i64>>) -> Result<Self> {
        if vertex_perms.len() != group.order() {
            return Err(Error::MalformedInput(format!(
                "{} permutations supplied for a group of order {}",
                vertex_perms.len(),
                group.order()
            )));
        }
        Ok(ExplicitAction { group, vertex_perms })
    }

    pub fn apply_vertex(&self, g: usize, v: i64) -> Result<i64> {
        self.vertex_perms[g].get(&v).copied().ok_or_else(|| {
            Error::Validation(format!("permutation of element {g} is undefined on vertex {v}"))
        })
    }

    pub fn apply_simplex(&self, g: usize, s: &Simplex) -> Result<Simplex> {
        let verts: Result<Vec<i64>> =
            s.vertices().iter().map(|&v| self.apply_vertex(g, v)).collect();
        Simplex::new(verts?)
    }

    pub fn perm(&self, g: usize) -> &BTreeMap<i64, i64> {
        &self.vertex_perms[g]
    }
}

/// Tri-state outcome of [`validate_action`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionValidity {
    /// Simplicial, homomorphic, and every setwise stabiliser acts trivially.
    Ok,
    /// Only the stabiliser-triviality condition fails; one barycentric
    /// subdivision repairs it.
    NeedsSubdivision,
    Invalid(String),
}

/// Check the three action invariants: each permutation is a simplicial
/// automorphism, the assignment is a homomorphism, and every simplex fixed
/// setwise is fixed pointwise.
pub fn validate_action(c: &SimplicialComplex, a: &ExplicitAction) -> ActionValidity {
    let vertices = c.vertex_ids();
    let vertex_set: BTreeSet<i64> = vertices.iter().copied().collect();

    for g in a.group.elements() {
        let perm = a.perm(g);
        let mut image = BTreeSet::new();
        for &v in &vertices {
            match perm.get(&v) {
                Some(&w) if vertex_set.contains(&w) => {
                    image.insert(w);
                }
                Some(&w) => {
                    return ActionValidity::Invalid(format!(
                        "element {g} maps vertex {v} outside the complex (to {w})"
                    ))
                }
                None => {
                    return ActionValidity::Invalid(format!(
                        "permutation of element {g} is undefined on vertex {v}"
                    ))
                }
            }
        }
        if image.len() != vertices.len() {
            return ActionValidity::Invalid(format!("element {g} does not act bijectively"));
        }
    }

    for g in a.group.elements() {
        for h in a.group.elements() {
            let gh = a.group.mul(g, h);
            for &v in &vertices {
                let lhs = a.perm(gh)[&v];
                let rhs = a.perm(g)[&a.perm(h)[&v]];
                if lhs != rhs {
                    return ActionValidity::Invalid(format!(
                        "not a homomorphism: ({g}*{h}) and {g}∘{h} disagree on vertex {v}"
                    ));
                }
            }
        }
    }

    for g in a.group.elements() {
        for s in c.simplices() {
            let image = a.apply_simplex(g, s).expect("validated above");
            if !c.contains(&image) {
                return ActionValidity::Invalid(format!(
                    "element {g} maps simplex {s} to {image}, which is not in the complex"
                ));
            }
        }
    }

    for s in c.simplices() {
        for g in a.group.elements() {
            let image = a.apply_simplex(g, s).expect("validated above");
            if &image == s && s.vertices().iter().any(|&v| a.perm(g)[&v] != v) {
                return ActionValidity::NeedsSubdivision;
            }
        }
    }

    ActionValidity::Ok
}

/// Transport an action to the barycentric subdivision: the group permutes
/// the new vertices the way it permutes the old simplices.
pub fn subdivide_action(
    c: &SimplicialComplex,
    a: &ExplicitAction,
) -> Result<(Subdivision, ExplicitAction)> {
    let sub = barycentric_subdivision(c);
    let mut perms = Vec::with_capacity(a.group.order());
    for g in a.group.elements() {
        let mut perm = BTreeMap::new();
        for (i, s) in sub.vertex_to_simplex.iter().enumerate() {
            let image = a.apply_simplex(g, s)?;
            let w = sub.vertex_for(&image).ok_or_else(|| {
                Error::Validation(format!(
                    "element {g} maps simplex {s} outside the complex"
                ))
            })?;
            perm.insert(i as i64, w);
        }
        perms.push(perm);
    }
    let action = ExplicitAction::new(a.group.clone(), perms)?;
    Ok((sub, action))
}

/// A validated action, possibly after subdividing.
#[derive(Debug, Clone)]
pub struct RepairedAction {
    pub complex: SimplicialComplex,
    pub action: ExplicitAction,
    /// How many barycentric subdivisions were applied (0, 1 or 2).
    pub subdivisions: usize,
}

/// Validate and, on a `NeedsSubdivision` verdict, subdivide (at most twice)
/// and re-validate. One subdivision always suffices; the second is a
/// terminating safety margin, after which the action is reported invalid.
pub fn repair_action(c: &SimplicialComplex, a: &ExplicitAction) -> Result<RepairedAction> {
    let mut complex = c.clone();
    let mut action = a.clone();
    for round in 0..=2 {
        match validate_action(&complex, &action) {
            ActionValidity::Ok => {
                return Ok(RepairedAction { complex, action, subdivisions: round })
            }
            ActionValidity::Invalid(reason) => {
                return Err(Error::Validation(format!("invalid action: {reason}")))
            }
            ActionValidity::NeedsSubdivision if round < 2 => {
                let (sub, next) = subdivide_action(&complex, &action)?;
                complex = sub.complex;
                action = next;
            }
            ActionValidity::NeedsSubdivision => {
                return Err(Error::Validation(
                    "action still needs subdivision after two rounds".into(),
                ))
            }
        }
    }
    unreachable!()
}

/// One orbit of simplices: canonical representative (lexicographically
/// least), full orbit, and the stabiliser subgroup.
#[derive(Debug, Clone)]
pub struct OrbitInfo {
    pub representative: Simplex,
    pub orbit: Vec<Simplex>,
    pub stabiliser: Vec<usize>,
}

/// Enumerate orbits and stabilisers over all simplices. Requires a valid
/// action (see [`validate_action`]).
pub fn orbits_and_stabilisers(
    c: &SimplicialComplex,
    a: &ExplicitAction,
) -> Result<Vec<OrbitInfo>> {
    let mut seen: HashSet<Simplex> = HashSet::new();
    let mut out = Vec::new();
    for s in c.simplices() {
        if seen.contains(s) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut stabiliser = Vec::new();
        for g in a.group.elements() {
            let image = a.apply_simplex(g, s)?;
            if &image == s {
                stabiliser.push(g);
            }
            orbit.insert(image);
        }
        for member in &orbit {
            seen.insert(member.clone());
        }
        let orbit: Vec<Simplex> = orbit.into_iter().collect();
        out.push(OrbitInfo {
            representative: orbit[0].clone(),
            orbit,
            stabiliser,
        });
    }
    Ok(out)
}

/// A connected component of `N(H)\X^H`: one or more components of the fixed
/// complex `X^H`, merged when the normaliser maps one onto another.
#[derive(Debug, Clone)]
pub struct FixedComponent {
    /// Deterministic label: the least vertex id in the merged class.
    pub label: String,
    /// Vertex sets of the `X^H`-components in this class.
    pub vertex_sets: Vec<BTreeSet<i64>>,
    pub simplices: BTreeSet<Simplex>,
}

/// The subcomplex fixed pointwise by a subgroup, with its components.
#[derive(Debug, Clone)]
pub struct FixedSubcomplex {
    pub simplices: BTreeSet<Simplex>,
    /// Components of `N(H)\X^H`, sorted by label.
    pub components: Vec<FixedComponent>,
}

impl FixedSubcomplex {
    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn as_complex(&self) -> Option<SimplicialComplex> {
        if self.is_empty() {
            return None;
        }
        let all: Vec<Simplex> = self.simplices.iter().cloned().collect();
        Some(SimplicialComplex::close_under_faces(&all).expect("nonempty"))
    }
}

/// Simplices fixed pointwise by every element of `H`, with connected
/// components merged under the normaliser action.
pub fn fixed_subcomplex(
    c: &SimplicialComplex,
    a: &ExplicitAction,
    h: &[usize],
) -> Result<FixedSubcomplex> {
    if !a.group.is_subgroup(h) {
        return Err(Error::Validation(
            "H is not closed under multiplication".into(),
        ));
    }

    let mut fixed: BTreeSet<Simplex> = BTreeSet::new();
    for s in c.simplices() {
        let pointwise = h
            .iter()
            .all(|&g| s.vertices().iter().all(|&v| a.perm(g)[&v] == v));
        if pointwise {
            fixed.insert(s.clone());
        }
    }
    if fixed.is_empty() {
        return Ok(FixedSubcomplex { simplices: fixed, components: Vec::new() });
    }

    // components of the fixed set via its 1-skeleton
    let sub = SimplicialComplex::close_under_faces(&fixed.iter().cloned().collect::<Vec<_>>())
        .expect("nonempty");
    let comps = sub.components();

    // merge components under the normaliser
    let normaliser = a.group.normaliser(h);
    let comp_of_vertex: HashMap<i64, usize> = comps
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |&v| (v, i)))
        .collect();
    let mut class_of: Vec<usize> = (0..comps.len()).collect();
    fn find(class_of: &mut Vec<usize>, i: usize) -> usize {
        if class_of[i] == i {
            return i;
        }
        let r = find(class_of, class_of[i]);
        class_of[i] = r;
        r
    }
    for (i, comp) in comps.iter().enumerate() {
        let v = *comp.iter().next().unwrap();
        for &g in &normaliser {
            let w = a.perm(g)[&v];
            let j = comp_of_vertex[&w];
            let (ri, rj) = (find(&mut class_of, i), find(&mut class_of, j));
            if ri != rj {
                class_of[ri] = rj;
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..comps.len() {
        let r = find(&mut class_of, i);
        classes.entry(r).or_default().push(i);
    }

    let mut components = Vec::new();
    for members in classes.values() {
        let vertex_sets: Vec<BTreeSet<i64>> =
            members.iter().map(|&i| comps[i].clone()).collect();
        let least = vertex_sets
            .iter()
            .flat_map(|s| s.iter())
            .min()
            .copied()
            .unwrap();
        let all_vertices: BTreeSet<i64> =
            vertex_sets.iter().flatten().copied().collect();
        let simplices: BTreeSet<Simplex> = fixed
            .iter()
            .filter(|s| s.vertices().iter().all(|v| all_vertices.contains(v)))
            .cloned()
            .collect();
        components.push(FixedComponent {
            label: format!("v{least}"),
            vertex_sets,
            simplices,
        });
    }
    components.sort_by(|a, b| a.label.cmp(&b.label));

    Ok(FixedSubcomplex { simplices: fixed, components })
}

/// Order of a stabiliser in orbit data: finite, or a symbolic infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StabOrder {
    Finite(u64),
    #[serde(with = "infinite_str")]
    Infinite,
}

mod infinite_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str("infinite")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<(), D::Error> {
        let s = String::deserialize(d)?;
        match s.as_str() {
            "infinite" | "inf" => Ok(()),
            other => Err(de::Error::custom(format!("unknown stabiliser order: {other}"))),
        }
    }
}

impl std::fmt::Display for StabOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StabOrder::Finite(n) => write!(f, "{n}"),
            StabOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// One simplex orbit in abstract presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClass {
    pub dim: usize,
    pub stab: String,
}

/// Abstract orbit data: simplex orbits with stabiliser labels, and the
/// stabiliser order table. Suits infinite groups whose actions cannot be
/// enumerated; fixed-point sets are taken connected (one component per
/// stabiliser label), which is the strongly contractible regime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitData {
    pub orbits: Vec<OrbitClass>,
    pub stabilizers: BTreeMap<String, StabOrder>,
    /// Optional partial order on stabiliser labels (pairs `small <= large`),
    /// recording conjugacy-containment metadata.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjugacy: Option<Vec<(String, String)>>,
}

impl OrbitData {
    pub fn validate(&self) -> Result<()> {
        for orbit in &self.orbits {
            if !self.stabilizers.contains_key(&orbit.stab) {
                return Err(Error::Validation(format!(
                    "orbit references unknown stabiliser label {:?}",
                    orbit.stab
                )));
            }
        }
        Ok(())
    }
}

/// One term `χ(X,H,A) · dim_{H,A}` of the Euler decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTerm {
    pub stabiliser_class: String,
    pub component: String,
    pub multiplicity: i64,
}

/// The equivariant Euler decomposition: a formal integer combination of
/// restriction classes indexed by (stabiliser conjugacy class, fixed
/// component). Zero-multiplicity terms are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerDecomposition {
    pub terms: Vec<EulerTerm>,
}

impl EulerDecomposition {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Net multiplicity per stabiliser class, summed over components.
    pub fn by_class(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.stabiliser_class.clone()).or_insert(0) += t.multiplicity;
        }
        out
    }
}

impl std::fmt::Display for EulerDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut class_counts: BTreeMap<&str, usize> = BTreeMap::new();
        for t in &self.terms {
            *class_counts.entry(&t.stabiliser_class).or_insert(0) += 1;
        }
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.multiplicity.abs();
            if i == 0 {
                if t.multiplicity < 0 {
                    write!(f, "-")?;
                }
            } else if t.multiplicity < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag}·")?;
            }
            if class_counts[t.stabiliser_class.as_str()] > 1 {
                write!(f, "dim_{{{},{}}}", t.stabiliser_class, t.component)?;
            } else {
                write!(f, "dim_{{{}}}", t.stabiliser_class)?;
            }
        }
        Ok(())
    }
}

/// One aggregated term of the Euler-Poincaré element: a signed multiple of
/// the trivial-representation projection of one stabiliser class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauTerm {
    pub stabiliser_label: String,
    pub order: u64,
    pub sign: i8,
    pub multiplicity: u64,
}

/// The Euler-Poincaré element: the alternating sum of trivial-representation
/// projections over simplex orbits, aggregated per stabiliser class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalTau {
    pub terms: Vec<TauTerm>,
}

impl std::fmt::Display for FormalTau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i == 0 {
                if t.sign < 0 {
                    write!(f, "-")?;
                }
            } else if t.sign < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t.multiplicity != 1 {
                write!(f, "{}·", t.multiplicity)?;
            }
            write!(f, "τ({})", t.stabiliser_label)?;
        }
        Ok(())
    }
}

/// Deterministic label for a stabiliser subgroup: `1` for the trivial group,
/// `Z/k` when cyclic of order `k`, `H<k>` otherwise.
fn subgroup_label(g: &FiniteGroup, h: &[usize]) -> String {
    let k = h.len();
    if k == 1 {
        return "1".to_string();
    }
    if h.iter().any(|&x| g.element_order(x) == k) {
        format!("Z/{k}")
    } else {
        format!("H{k}")
    }
}

/// Internal: conjugacy analysis of the simplex stabilisers of an action.
struct StabiliserClasses {
    /// Sorted representatives (lexicographically least member of each class).
    representatives: Vec<Vec<usize>>,
    /// Disambiguated label per class, aligned with `representatives`.
    labels: Vec<String>,
    /// Map from any occurring stabiliser (sorted) to its class index.
    class_of: HashMap<Vec<usize>, usize>,
}

fn stabiliser_classes(g: &FiniteGroup, orbits: &[OrbitInfo]) -> StabiliserClasses {
    let mut distinct: BTreeSet<Vec<usize>> = BTreeSet::new();
    for o in orbits {
        let mut s = o.stabiliser.clone();
        s.sort_unstable();
        distinct.insert(s);
    }
    let mut representatives: Vec<Vec<usize>> = Vec::new();
    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for h in &distinct {
        if class_of.contains_key(h) {
            continue;
        }
        let idx = representatives.len();
        // the least conjugate is the canonical representative
        let mut conjugates: BTreeSet<Vec<usize>> = BTreeSet::new();
        for e in g.elements() {
            conjugates.insert(g.conjugate(e, h));
        }
        let rep = conjugates.iter().next().unwrap().clone();
        for c in conjugates {
            class_of.insert(c, idx);
        }
        representatives.push(rep);
    }
    // disambiguate duplicate labels deterministically
    let mut labels: Vec<String> =
        representatives.iter().map(|h| subgroup_label(g, h)).collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for l in &labels {
        *counts.entry(l.clone()).or_insert(0) += 1;
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for l in labels.iter_mut() {
        if counts[l.as_str()] > 1 {
            let n = seen.entry(l.clone()).or_insert(0);
            *n += 1;
            *l = format!("{l}#{n}");
        }
    }
    StabiliserClasses { representatives, labels, class_of }
}

/// Equivariant Euler decomposition of an explicit action. For each conjugacy
/// class `(H)` of simplex stabilisers and each component `A` of
/// `N(H)\X^H`, the multiplicity is the alternating count of
/// `N(H)`-orbits of simplices in `A` whose stabiliser is exactly `H`.
pub fn explicit_euler_decomposition(
    c: &SimplicialComplex,
    a: &ExplicitAction,
) -> Result<EulerDecomposition> {
    match validate_action(c, a) {
        ActionValidity::Ok => {}
        ActionValidity::NeedsSubdivision => {
            return Err(Error::Validation(
                "action needs barycentric subdivision first (see repair_action)".into(),
            ))
        }
        ActionValidity::Invalid(reason) => {
            return Err(Error::Validation(format!("invalid action: {reason}")))
        }
    }

    let orbits = orbits_and_stabilisers(c, a)?;
    let classes = stabiliser_classes(&a.group, &orbits);

    let mut terms = Vec::new();
    for (idx, h) in classes.representatives.iter().enumerate() {
        let fixed = fixed_subcomplex(c, a, h)?;
        let normaliser = a.group.normaliser(h);
        for component in &fixed.components {
            // simplices of this component whose stabiliser is exactly H
            let exact: Vec<&Simplex> = component
                .simplices
                .iter()
                .filter(|s| {
                    let mut stab: Vec<usize> = a
                        .group
                        .elements()
                        .filter(|&g| {
                            s.vertices().iter().all(|&v| a.perm(g)[&v] == v)
                        })
                        .collect();
                    stab.sort_unstable();
                    stab == *h
                })
                .collect();
            // alternating count of N(H)-orbits
            let mut seen: HashSet<Simplex> = HashSet::new();
            let mut multiplicity: i64 = 0;
            for s in exact {
                if seen.contains(s) {
                    continue;
                }
                for &n in &normaliser {
                    seen.insert(a.apply_simplex(n, s)?);
                }
                if s.dim() % 2 == 0 {
                    multiplicity += 1;
                } else {
                    multiplicity -= 1;
                }
            }
            if multiplicity != 0 {
                terms.push(EulerTerm {
                    stabiliser_class: classes.labels[idx].clone(),
                    component: component.label.clone(),
                    multiplicity,
                });
            }
        }
    }
    terms.sort_by(|a, b| {
        (&a.stabiliser_class, &a.component).cmp(&(&b.stabiliser_class, &b.component))
    });
    Ok(EulerDecomposition { terms })
}

/// Euler decomposition from abstract orbit data. Each stabiliser label is
/// taken to have one connected fixed component, so the multiplicity of a
/// label is the alternating orbit count.
pub fn orbit_euler_decomposition(data: &OrbitData) -> Result<EulerDecomposition> {
    data.validate()?;
    let mut by_label: BTreeMap<String, i64> = BTreeMap::new();
    for orbit in &data.orbits {
        let sign = if orbit.dim % 2 == 0 { 1 } else { -1 };
        *by_label.entry(orbit.stab.clone()).or_insert(0) += sign;
    }
    let terms = by_label
        .into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(label, multiplicity)| EulerTerm {
            stabiliser_class: label.clone(),
            component: label,
            multiplicity,
        })
        .collect();
    Ok(EulerDecomposition { terms })
}

/// Convert an explicit action into orbit data (labels from the conjugacy
/// analysis, one orbit entry per simplex orbit).
pub fn to_orbit_data(c: &SimplicialComplex, a: &ExplicitAction) -> Result<OrbitData> {
    let orbits = orbits_and_stabilisers(c, a)?;
    let classes = stabiliser_classes(&a.group, &orbits);
    let mut stabilizers = BTreeMap::new();
    for (idx, h) in classes.representatives.iter().enumerate() {
        stabilizers.insert(classes.labels[idx].clone(), StabOrder::Finite(h.len() as u64));
    }
    let orbit_list = orbits
        .iter()
        .map(|o| {
            let mut h = o.stabiliser.clone();
            h.sort_unstable();
            OrbitClass {
                dim: o.representative.dim(),
                stab: classes.labels[classes.class_of[&h]].clone(),
            }
        })
        .collect();
    Ok(OrbitData { orbits: orbit_list, stabilizers, conjugacy: None })
}

/// The Euler-Poincaré element from orbit data: sign `(-1)^dim` per orbit,
/// aggregated per stabiliser label. All stabiliser orders must be finite.
pub fn euler_poincare_element(data: &OrbitData) -> Result<FormalTau> {
    data.validate()?;
    let mut by_label: BTreeMap<String, (u64, i64)> = BTreeMap::new();
    for orbit in &data.orbits {
        let order = match data.stabilizers[&orbit.stab] {
            StabOrder::Finite(n) => n,
            StabOrder::Infinite => {
                return Err(Error::UnsupportedMode(format!(
                    "Euler-Poincaré element requires finite stabiliser orders; {:?} is infinite",
                    orbit.stab
                )))
            }
        };
        let sign = if orbit.dim % 2 == 0 { 1 } else { -1 };
        let entry = by_label.entry(orbit.stab.clone()).or_insert((order, 0));
        entry.1 += sign;
    }
    let terms = by_label
        .into_iter()
        .filter(|(_, (_, m))| *m != 0)
        .map(|(label, (order, m))| TauTerm {
            stabiliser_label: label,
            order,
            sign: if m < 0 { -1 } else { 1 },
            multiplicity: m.unsigned_abs(),
        })
        .collect();
    Ok(FormalTau { terms })
}

/// Euler-Poincaré element of an explicit action.
pub fn explicit_euler_poincare(
    c: &SimplicialComplex,
    a: &ExplicitAction,
) -> Result<FormalTau> {
    euler_poincare_element(&to_orbit_data(c, a)?)
}

/// Check that `τ(H) = |H|^{-1} Σ_{h∈H} h` is idempotent in the rational
/// group algebra of `G`.
pub fn tau_idempotent_check(g: &FiniteGroup, h: &[usize]) -> Result<bool> {
    if !g.is_subgroup(h) {
        return Err(Error::Validation("H is not a subgroup".into()));
    }
    let n = g.order();
    let mut tau = vec![BigRational::zero(); n];
    let coeff = BigRational::new(BigInt::one(), BigInt::from(h.len() as i64));
    for &x in h {
        tau[x] = coeff.clone();
    }
    let mut square = vec![BigRational::zero(); n];
    for (i, a) in tau.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in tau.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let k = g.mul(i, j);
            square[k] += a * b;
        }
    }
    Ok(square == tau)
}

/// Collapse a free (or at least quotient-regular) action to its orbit-space
/// complex: vertices become vertex orbits. Fails when the collapse is
/// degenerate (a simplex loses dimension, or two distinct orbits collide);
/// subdividing the input resolves this.
pub fn quotient_complex(c: &SimplicialComplex, a: &ExplicitAction) -> Result<SimplicialComplex> {
    let mut rep: BTreeMap<i64, i64> = BTreeMap::new();
    for &v in &c.vertex_ids() {
        let least = a
            .group
            .elements()
            .map(|g| a.perm(g)[&v])
            .min()
            .expect("group is nonempty");
        rep.insert(v, least);
    }
    let mut images: BTreeMap<Simplex, Simplex> = BTreeMap::new();
    for s in c.simplices() {
        let mapped: BTreeSet<i64> = s.vertices().iter().map(|v| rep[v]).collect();
        if mapped.len() != s.vertices().len() {
            return Err(Error::Validation(format!(
                "quotient collapse is degenerate on {s}; subdivide first"
            )));
        }
        let image = Simplex::new(mapped.into_iter().collect())?;
        images.insert(s.clone(), image);
    }
    // two simplices may only share an image when they lie in the same orbit
    let mut preimage: HashMap<&Simplex, &Simplex> = HashMap::new();
    for (s, img) in &images {
        if let Some(other) = preimage.insert(img, s) {
            let same_orbit = a
                .group
                .elements()
                .any(|g| a.apply_simplex(g, other).map(|t| &t == s).unwrap_or(false));
            if !same_orbit {
                return Err(Error::Validation(format!(
                    "quotient identifies distinct orbits ({other} and {s}); subdivide first"
                )));
            }
        }
    }
    let maximal: Vec<Simplex> = images.values().cloned().collect();
    SimplicialComplex::close_under_faces(&maximal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_swap() -> (SimplicialComplex, ExplicitAction) {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1]]).unwrap();
        let g = FiniteGroup::cyclic(2);
        let perms = vec![
            BTreeMap::from([(0, 0), (1, 1)]),
            BTreeMap::from([(0, 1), (1, 0)]),
        ];
        (c, ExplicitAction::new(g, perms).unwrap())
    }

    /// Square circle E=0, N=1, W=2, S=3 with the reflection fixing E and W.
    fn reflection_circle() -> (SimplicialComplex, ExplicitAction) {
        let c = SimplicialComplex::from_maximal(&[
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![0, 3],
        ])
        .unwrap();
        let g = FiniteGroup::cyclic(2);
        let perms = vec![
            BTreeMap::from([(0, 0), (1, 1), (2, 2), (3, 3)]),
            BTreeMap::from([(0, 0), (1, 3), (2, 2), (3, 1)]),
        ];
        (c, ExplicitAction::new(g, perms).unwrap())
    }

    fn trivial_action(c: &SimplicialComplex) -> ExplicitAction {
        let g = FiniteGroup::cyclic(1);
        let perm: BTreeMap<i64, i64> = c.vertex_ids().iter().map(|&v| (v, v)).collect();
        ExplicitAction::new(g, vec![perm]).unwrap()
    }

    #[test]
    fn group_table_validation() {
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 0]]).is_ok());
        // no identity
        assert!(FiniteGroup::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        // not associative (and not a group): Z/2 table corrupted
        assert!(FiniteGroup::new(vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]]).is_err());
    }

    #[test]
    fn edge_swap_needs_subdivision() {
        let (c, a) = edge_swap();
        assert_eq!(validate_action(&c, &a), ActionValidity::NeedsSubdivision);
    }

    #[test]
    fn edge_swap_ok_after_one_subdivision() {
        let (c, a) = edge_swap();
        let (sub, a1) = subdivide_action(&c, &a).unwrap();
        assert_eq!(validate_action(&sub.complex, &a1), ActionValidity::Ok);
        let repaired = repair_action(&c, &a).unwrap();
        assert_eq!(repaired.subdivisions, 1);
    }

    #[test]
    fn non_homomorphic_table_invalid() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let g = FiniteGroup::cyclic(3);
        // rotation assigned inconsistently: element 2 should be rotation², not id
        let rot = BTreeMap::from([(0, 1), (1, 2), (2, 0)]);
        let id = BTreeMap::from([(0, 0), (1, 1), (2, 2)]);
        let a = ExplicitAction::new(g, vec![id.clone(), rot, id]).unwrap();
        assert!(matches!(validate_action(&c, &a), ActionValidity::Invalid(_)));
    }

    #[test]
    fn trivial_group_orbits() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
        let a = trivial_action(&c);
        let orbits = orbits_and_stabilisers(&c, &a).unwrap();
        assert_eq!(orbits.len(), c.simplex_count());
        assert!(orbits.iter().all(|o| o.orbit.len() == 1 && o.stabiliser.len() == 1));
    }

    #[test]
    fn reflection_circle_orbits() {
        let (c, a) = reflection_circle();
        assert_eq!(validate_action(&c, &a), ActionValidity::Ok);
        let orbits = orbits_and_stabilisers(&c, &a).unwrap();
        let vertex_orbits: Vec<&OrbitInfo> =
            orbits.iter().filter(|o| o.representative.dim() == 0).collect();
        let edge_orbits: Vec<&OrbitInfo> =
            orbits.iter().filter(|o| o.representative.dim() == 1).collect();
        assert_eq!(vertex_orbits.len(), 3); // {E}, {W}, {N,S}
        assert_eq!(edge_orbits.len(), 2); // {EN,ES}, {NW,SW}
        for o in &orbits {
            assert_eq!(o.orbit.len() * o.stabiliser.len(), a.group.order());
        }
        let total: usize = orbits.iter().map(|o| o.orbit.len()).sum();
        assert_eq!(total, c.simplex_count());
    }

    #[test]
    fn rotation_on_subdivided_hollow_triangle() {
        // brute-force oracle: the rotation acts freely on the hexagon,
        // giving 2 vertex orbits and 2 edge orbits of size 3
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let g = FiniteGroup::cyclic(3);
        let id = BTreeMap::from([(0, 0), (1, 1), (2, 2)]);
        let rot = BTreeMap::from([(0, 1), (1, 2), (2, 0)]);
        let rot2 = BTreeMap::from([(0, 2), (1, 0), (2, 1)]);
        let a = ExplicitAction::new(g, vec![id, rot, rot2]).unwrap();
        let (sub, a1) = subdivide_action(&c, &a).unwrap();
        assert_eq!(validate_action(&sub.complex, &a1), ActionValidity::Ok);
        let orbits = orbits_and_stabilisers(&sub.complex, &a1).unwrap();
        let vertex_orbits = orbits.iter().filter(|o| o.representative.dim() == 0).count();
        let edge_orbits = orbits.iter().filter(|o| o.representative.dim() == 1).count();
        assert_eq!(vertex_orbits, 2);
        assert_eq!(edge_orbits, 2);
    }

    #[test]
    fn fixed_subcomplex_cases() {
        let (c, a) = reflection_circle();
        // trivial subgroup fixes everything
        let whole = fixed_subcomplex(&c, &a, &[0]).unwrap();
        assert_eq!(whole.simplices.len(), c.simplex_count());
        assert_eq!(whole.components.len(), 1);
        // the full reflection group fixes E and W only
        let fixed = fixed_subcomplex(&c, &a, &[0, 1]).unwrap();
        assert_eq!(fixed.simplices.len(), 2);
        assert_eq!(fixed.components.len(), 2);
        assert_eq!(fixed.components[0].label, "v0");
        assert_eq!(fixed.components[1].label, "v2");
        // not a subgroup
        assert!(fixed_subcomplex(&c, &a, &[1]).is_err());
    }

    #[test]
    fn free_action_has_empty_fixed_set() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let g = FiniteGroup::cyclic(3);
        let id = BTreeMap::from([(0, 0), (1, 1), (2, 2)]);
        let rot = BTreeMap::from([(0, 1), (1, 2), (2, 0)]);
        let rot2 = BTreeMap::from([(0, 2), (1, 0), (2, 1)]);
        let a = ExplicitAction::new(g, vec![id, rot, rot2]).unwrap();
        let (sub, a1) = subdivide_action(&c, &a).unwrap();
        let fixed = fixed_subcomplex(&sub.complex, &a1, &[0, 1, 2]).unwrap();
        assert!(fixed.is_empty());
    }

    #[test]
    fn trivial_group_decomposition_is_chi() {
        let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let a = trivial_action(&c);
        let d = explicit_euler_decomposition(&c, &a).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].stabiliser_class, "1");
        assert_eq!(d.terms[0].multiplicity, c.euler_char());
    }

    #[test]
    fn reflection_circle_decomposition() {
        let (c, a) = reflection_circle();
        let d = explicit_euler_decomposition(&c, &a).unwrap();
        // dim_{Z/2,E} + dim_{Z/2,W} - dim_1
        assert_eq!(d.terms.len(), 3);
        let by_class = d.by_class();
        assert_eq!(by_class["Z/2"], 2);
        assert_eq!(by_class["1"], -1);
        let z2_terms: Vec<&EulerTerm> =
            d.terms.iter().filter(|t| t.stabiliser_class == "Z/2").collect();
        assert_eq!(z2_terms.len(), 2);
        assert!(z2_terms.iter().all(|t| t.multiplicity == 1));
        assert!(!d.is_zero());
        assert_eq!(d.to_string(), "-dim_{1} + dim_{Z/2,v0} + dim_{Z/2,v2}");
    }

    #[test]
    fn psl2z_orbit_decomposition() {
        let data = OrbitData {
            orbits: vec![
                OrbitClass { dim: 0, stab: "Z/2".into() },
                OrbitClass { dim: 0, stab: "Z/3".into() },
                OrbitClass { dim: 1, stab: "1".into() },
            ],
            stabilizers: BTreeMap::from([
                ("Z/2".to_string(), StabOrder::Finite(2)),
                ("Z/3".to_string(), StabOrder::Finite(3)),
                ("1".to_string(), StabOrder::Finite(1)),
            ]),
            conjugacy: None,
        };
        let d = orbit_euler_decomposition(&data).unwrap();
        assert_eq!(d.to_string(), "-dim_{1} + dim_{Z/2} + dim_{Z/3}");

        let tau = euler_poincare_element(&data).unwrap();
        assert_eq!(tau.terms.len(), 3);
        assert_eq!(tau.to_string(), "-τ(1) + τ(Z/2) + τ(Z/3)");
    }

    #[test]
    fn decomposition_invariant_under_subdivision() {
        let path_reflection = || {
            let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2]]).unwrap();
            let g = FiniteGroup::cyclic(2);
            let perms = vec![
                BTreeMap::from([(0, 0), (1, 1), (2, 2)]),
                BTreeMap::from([(0, 2), (1, 1), (2, 0)]),
            ];
            (c, ExplicitAction::new(g, perms).unwrap())
        };
        let triangle_trivial = || {
            let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]).unwrap();
            let perm: BTreeMap<i64, i64> = c.vertex_ids().iter().map(|&v| (v, v)).collect();
            (c.clone(), ExplicitAction::new(FiniteGroup::cyclic(1), vec![perm]).unwrap())
        };
        for (c, a) in [reflection_circle(), path_reflection(), triangle_trivial()] {
            let d0 = explicit_euler_decomposition(&c, &a).unwrap();
            let (sub, a1) = subdivide_action(&c, &a).unwrap();
            let d1 = explicit_euler_decomposition(&sub.complex, &a1).unwrap();
            // term-by-term: same multiplicity list per stabiliser class
            assert_eq!(d0.by_class(), d1.by_class());
            let mult0: Vec<i64> = d0.terms.iter().map(|t| t.multiplicity).collect();
            let mult1: Vec<i64> = d1.terms.iter().map(|t| t.multiplicity).collect();
            assert_eq!(mult0, mult1);
        }
    }

    #[test]
    fn explicit_and_orbit_modes_agree_on_connected_fixed_sets() {
        // reflection of a path 0-1-2 across its midpoint: X^{Z/2} = {1}
        let c = SimplicialComplex::from_maximal(&[vec![0, 1], vec![1, 2]]).unwrap();
        let g = FiniteGroup::cyclic(2);
        let perms = vec![
            BTreeMap::from([(0, 0), (1, 1), (2, 2)]),
            BTreeMap::from([(0, 2), (1, 1), (2, 0)]),
        ];
        let a = ExplicitAction::new(g, perms).unwrap();
        assert_eq!(validate_action(&c, &a), ActionValidity::Ok);
        let explicit = explicit_euler_decomposition(&c, &a).unwrap();
        let orbit = orbit_euler_decomposition(&to_orbit_data(&c, &a).unwrap()).unwrap();
        assert_eq!(explicit.by_class(), orbit.by_class());
        assert_eq!(explicit.by_class(), BTreeMap::from([("Z/2".to_string(), 1)]));
    }

    #[test]
    fn euler_poincare_free_cocompact() {
        let data = OrbitData {
            orbits: vec![
                OrbitClass { dim: 0, stab: "1".into() },
                OrbitClass { dim: 1, stab: "1".into() },
                OrbitClass { dim: 1, stab: "1".into() },
                OrbitClass { dim: 1, stab: "1".into() },
            ],
            stabilizers: BTreeMap::from([("1".to_string(), StabOrder::Finite(1))]),
            conjugacy: None,
        };
        // wedge of 3 circles: chi = -2, so -2·τ(1)
        let tau = euler_poincare_element(&data).unwrap();
        assert_eq!(tau.terms.len(), 1);
        assert_eq!(tau.terms[0].sign, -1);
        assert_eq!(tau.terms[0].multiplicity, 2);
    }

    #[test]
    fn euler_poincare_rejects_infinite_and_handles_empty() {
        let data = OrbitData {
            orbits: vec![OrbitClass { dim: 0, stab: "L".into() }],
            stabilizers: BTreeMap::from([("L".to_string(), StabOrder::Infinite)]),
            conjugacy: None,
        };
        assert!(euler_poincare_element(&data).is_err());
        // the decomposition itself accepts symbolic infinite orders
        let d = orbit_euler_decomposition(&data).unwrap();
        assert_eq!(d.by_class(), BTreeMap::from([("L".to_string(), 1)]));

        let empty = OrbitData {
            orbits: vec![],
            stabilizers: BTreeMap::new(),
            conjugacy: None,
        };
        let tau = euler_poincare_element(&empty).unwrap();
        assert!(tau.terms.is_empty());
    }

    #[test]
    fn tau_idempotents() {
        let z2 = FiniteGroup::cyclic(2);
        assert!(tau_idempotent_check(&z2, &[0]).unwrap());
        assert!(tau_idempotent_check(&z2, &[0, 1]).unwrap());

        // S3 as permutations of {0,1,2}; Z/3 = the rotation subgroup
        let s3 = FiniteGroup::from_permutations(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
        ])
        .unwrap();
        assert_eq!(s3.order(), 6);
        assert!(tau_idempotent_check(&s3, &[0, 1, 2]).unwrap());

        // every subgroup of every corpus group, found by brute force
        for g in [FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(6), s3] {
            let n = g.order();
            for mask in 1u32..(1 << n) {
                let h: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if g.is_subgroup(&h) {
                    assert!(tau_idempotent_check(&g, &h).unwrap(), "order {n}, H = {h:?}");
                }
            }
        }
    }

    #[test]
    fn quotient_of_free_action() {
        // antipodal Z/2 on the hexagon circle: quotient is a triangle circle
        let c = SimplicialComplex::from_maximal(&[
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![4, 5],
            vec![0, 5],
        ])
        .unwrap();
        let g = FiniteGroup::cyclic(2);
        let id: BTreeMap<i64, i64> = (0..6).map(|v| (v, v)).collect();
        let anti: BTreeMap<i64, i64> = (0..6).map(|v| (v, (v + 3) % 6)).collect();
        let a = ExplicitAction::new(g, vec![id, anti]).unwrap();
        assert_eq!(validate_action(&c, &a), ActionValidity::Ok);
        let q = quotient_complex(&c, &a).unwrap();
        assert_eq!(q.euler_char(), 0);
        assert_eq!(q.simplices_of_dim(0).len(), 3);
        assert_eq!(q.simplices_of_dim(1).len(), 3);

        // free-action invariant: only trivial-stabiliser terms, summing to chi
        let d = explicit_euler_decomposition(&c, &a).unwrap();
        assert!(d.terms.iter().all(|t| t.stabiliser_class == "1"));
        let total: i64 = d.terms.iter().map(|t| t.multiplicity).sum();
        assert_eq!(total, q.euler_char());
    }

    #[test]
    fn quotient_rejects_degenerate_collapse() {
        // square circle with the antipodal action: the collapse is degenerate
        let c = SimplicialComplex::from_maximal(&[
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![0, 3],
        ])
        .unwrap();
        let g = FiniteGroup::cyclic(2);
        let id: BTreeMap<i64, i64> = (0..4).map(|v| (v, v)).collect();
        let anti: BTreeMap<i64, i64> = (0..4).map(|v| (v, (v + 2) % 4)).collect();
        let a = ExplicitAction::new(g, vec![id, anti]).unwrap();
        assert_eq!(validate_action(&c, &a), ActionValidity::Ok);
        assert!(quotient_complex(&c, &a).is_err());
        // one subdivision repairs it
        let (sub, a1) = subdivide_action(&c, &a).unwrap();
        let q = quotient_complex(&sub.complex, &a1).unwrap();
        assert_eq!(q.euler_char(), 0);
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let (c, a) = reflection_circle();
        let orbits = orbits_and_stabilisers(&c, &a).unwrap();
        for o in &orbits {
            assert_eq!(a.group.order() % o.orbit.len(), 0);
        }
    }
}

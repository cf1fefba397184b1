//! The dual-geometry verification suite: deterministic rational sample
//! grids, one pass/fail row per region equation or lemma, and the first
//! counterexample on failure.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::builders;
use crate::complex::{barycentric_subdivision, BarycentricPoint, ColouredComplex, Simplex, SimplicialComplex, Subdivision};
use crate::error::{Error, Result};

use super::spectral::{
    bar_q, spectral_support, support_product_check, SampledPattern,
    SupportProductOutcome,
};
use super::{
    collapse, in_region, radial_expand, rat, retraction_q, DualParams, EPoint, FaceSet, Region,
};

/// Named deterministic grids. The environment variable `GYSINKIT_SEED`
/// selects one; the grids contain no randomness, the name only sets the
/// density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridName {
    Coarse,
    Default,
    Fine,
}

impl GridName {
    pub fn from_env() -> Result<Self> {
        match std::env::var("GYSINKIT_SEED") {
            Err(_) => Ok(GridName::Default),
            Ok(v) => v.parse(),
        }
    }
}

impl std::str::FromStr for GridName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "" | "default" => Ok(GridName::Default),
            "coarse" => Ok(GridName::Coarse),
            "fine" => Ok(GridName::Fine),
            other => Err(Error::Validation(format!(
                "unknown grid name {other:?} (use coarse, default or fine)"
            ))),
        }
    }
}

impl std::fmt::Display for GridName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GridName::Coarse => write!(f, "coarse"),
            GridName::Default => write!(f, "default"),
            GridName::Fine => write!(f, "fine"),
        }
    }
}

/// Deterministic rational samples of `E` and `Σ` for one ambient dimension.
#[derive(Debug, Clone)]
pub struct SampleGrid {
    pub e_points: Vec<EPoint>,
    pub sigma_points: Vec<EPoint>,
}

/// All integer vectors of length `len` with entries in `[-bound, bound]`
/// summing to `target`.
fn bounded_sum_vectors(len: usize, bound: i64, target: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, bound: i64, target: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 0 {
            if target == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let remaining = (len as i64 - 1) * bound;
        for v in -bound..=bound {
            let rest = target - v;
            if rest.abs() > remaining {
                continue;
            }
            prefix.push(v);
            go(len - 1, bound, rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, bound, target, &mut Vec::new(), &mut out);
    out
}

/// Nonnegative compositions of `target` into `len` parts.
fn compositions(len: usize, target: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, target: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if len == 1 {
            prefix.push(target);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=target {
            prefix.push(v);
            go(len - 1, target - v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, target, &mut Vec::new(), &mut out);
    out
}

fn grid_denominators(name: GridName, n: usize) -> (Vec<i64>, Vec<i64>) {
    // (E denominators, Σ denominators)
    match (name, n) {
        (GridName::Coarse, 0..=2) => (vec![2, 3], vec![4, 6]),
        (GridName::Coarse, _) => (vec![2], vec![3]),
        (GridName::Default, 0..=2) => (vec![2, 3, 6], vec![4, 6, 12]),
        (GridName::Default, 3) => (vec![2, 3], vec![3, 6]),
        (GridName::Default, _) => (vec![2], vec![3, 4]),
        (GridName::Fine, 0..=2) => (vec![2, 3, 4, 6], vec![4, 6, 8, 12]),
        (GridName::Fine, 3) => (vec![2, 3], vec![3, 4, 6]),
        (GridName::Fine, _) => (vec![2, 3], vec![3, 4]),
    }
}

/// Build the sample grid for ambient dimension `n` at a collapse level `L`:
/// integer lattice slices of `E` and `Σ`, all face barycentres, their
/// pairwise midpoints, and the `CR`-corner points determined by `L`.
pub fn build_grid(n: usize, name: GridName, l: &BigRational) -> SampleGrid {
    let (e_denoms, s_denoms) = grid_denominators(name, n);
    let mut e_points = Vec::new();
    let mut sigma_points = Vec::new();

    for d in e_denoms {
        for v in bounded_sum_vectors(n + 1, d, d) {
            e_points.push(EPoint::from_ints(&v, d).expect("sums to d/d = 1"));
        }
    }
    for d in s_denoms {
        for v in compositions(n + 1, d) {
            sigma_points.push(EPoint::from_ints(&v, d).expect("sums to d/d = 1"));
        }
    }

    // region-boundary points: face barycentres, CR corners at level L, and
    // their pairwise midpoints
    let faces = FaceSet::all_nonempty(n);
    let mut boundary: Vec<EPoint> = Vec::new();
    for f in &faces {
        boundary.push(EPoint::face_barycentre(f).expect("nonempty face"));
        // corner of |f| ∩ CR_f: L on all of f except the least member,
        // which absorbs the rest
        let members: Vec<usize> = f.members().copied().collect();
        let mut coords = vec![BigRational::zero(); n + 1];
        let mut rest = BigRational::one();
        for &i in &members[1..] {
            coords[i] = l.clone();
            rest -= l;
        }
        coords[members[0]] = rest;
        boundary.push(EPoint::new(coords).expect("sums to one"));
    }
    let barycentre_count = boundary.len();
    for i in 0..barycentre_count {
        for j in i + 1..barycentre_count {
            let m = boundary[i].midpoint(&boundary[j]);
            boundary.push(m);
        }
    }
    for p in &boundary {
        if p.is_in_sigma() {
            sigma_points.push(p.clone());
        }
        e_points.push(p.clone());
    }

    // points of E with genuinely negative coordinates along face directions
    for f in &faces {
        if f.len() > n {
            continue;
        }
        let inside = EPoint::face_barycentre(f).expect("nonempty");
        let mut coords: Vec<BigRational> = inside.coords().to_vec();
        let outside = (n + 1 - f.len()) as i64;
        for (i, c) in coords.iter_mut().enumerate() {
            if f.contains(i) {
                *c = &*c * rat(3, 2);
            } else {
                *c = rat(-1, 2 * outside);
            }
        }
        e_points.push(EPoint::new(coords).expect("sums to one"));
    }

    SampleGrid { e_points, sigma_points }
}

/// One verified equation or lemma.
#[derive(Debug, Clone)]
pub struct SuiteRow {
    pub name: String,
    pub passed: bool,
    pub samples: usize,
    pub counterexample: Option<String>,
}

/// Outcome of the whole suite.
#[derive(Debug, Clone)]
pub struct DualSuiteReport {
    pub n: usize,
    pub grid: GridName,
    pub rows: Vec<SuiteRow>,
}

impl DualSuiteReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

impl std::fmt::Display for DualSuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "dual geometry suite (n = {}, grid = {})", self.n, self.grid)?;
        for r in &self.rows {
            write!(
                f,
                "  [{}] {} ({} samples)",
                if r.passed { "pass" } else { "FAIL" },
                r.name,
                r.samples
            )?;
            if let Some(ce) = &r.counterexample {
                write!(f, " counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// What to verify.
pub struct SuiteOptions {
    pub params: DualParams,
    pub grid: GridName,
    /// Base complexes for the simplicial rows; each is barycentrically
    /// subdivided to obtain its canonical colouring and must have dimension
    /// equal to `params.n`.
    pub complexes: Vec<(String, SimplicialComplex)>,
}

impl SuiteOptions {
    /// Region rows only.
    pub fn regions_only(params: DualParams, grid: GridName) -> Self {
        SuiteOptions { params, grid, complexes: Vec::new() }
    }

    /// The built-in corpus complexes of the matching dimension.
    pub fn with_corpus(params: DualParams, grid: GridName) -> Self {
        let complexes = builders::corpus()
            .into_iter()
            .filter(|(_, c)| c.dim() == params.n)
            .collect();
        SuiteOptions { params, grid, complexes }
    }
}

struct RowBuilder {
    name: String,
    passed: bool,
    samples: usize,
    counterexample: Option<String>,
}

impl RowBuilder {
    fn new(name: impl Into<String>) -> Self {
        RowBuilder { name: name.into(), passed: true, samples: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> SuiteRow {
        SuiteRow {
            name: self.name,
            passed: self.passed,
            samples: self.samples,
            counterexample: self.counterexample,
        }
    }
}

/// Run the suite: the region equations on the grids, then the simplicial
/// lemmas on every supplied complex.
pub fn verify_dual(opts: &SuiteOptions) -> Result<DualSuiteReport> {
    let params = &opts.params;
    let n = params.n;
    let l = &params.l;
    let grid = build_grid(n, opts.grid, l);
    let faces = FaceSet::all_nonempty(n);
    let faces_with_empty: Vec<FaceSet> = {
        let mut v = vec![FaceSet::empty(n)];
        v.extend(faces.iter().cloned());
        v
    };
    let mut rows = Vec::new();

    // q^{-1}(|f|) = R_{<=f}
    {
        let mut row = RowBuilder::new("q-preimage of each face equals R_<=f");
        for t in &grid.e_points {
            let q = retraction_q(t);
            for f in &faces_with_empty {
                let lhs = in_region(&q, f, &Region::Face);
                let rhs = in_region(t, f, &Region::RLe);
                row.check(lhs == rhs, || format!("t = {t}, f = {f}"));
            }
        }
        rows.push(row.finish());
    }

    // R_{<=f1} ∩ R_{<=f2} = R_{<=f1∩f2}
    {
        let mut row = RowBuilder::new("R_<= intersects along face intersections");
        for t in &grid.e_points {
            for (i, f1) in faces.iter().enumerate() {
                for f2 in &faces[i..] {
                    let lhs = in_region(t, f1, &Region::RLe) && in_region(t, f2, &Region::RLe);
                    let rhs = in_region(t, &f1.intersection(f2), &Region::RLe);
                    row.check(lhs == rhs, || format!("t = {t}, f1 = {f1}, f2 = {f2}"));
                }
            }
        }
        rows.push(row.finish());
    }

    // |f| ∩ CR_f description
    {
        let mut row = RowBuilder::new("face-and-CR region matches its inequality description");
        for s in &grid.sigma_points {
            for f in &faces {
                let lhs = in_region(s, f, &Region::Face)
                    && in_region(s, f, &Region::CR(l.clone()));
                let rhs = (0..=n).all(|i| {
                    if f.contains(i) {
                        s.coord(i) >= l
                    } else {
                        s.coord(i).is_zero()
                    }
                });
                row.check(lhs == rhs, || format!("s = {s}, f = {f}"));
            }
        }
        rows.push(row.finish());
    }

    // collapse maps |f| ∩ CR_f to the face barycentre
    {
        let mut row = RowBuilder::new("collapse sends face-and-CR points to the face barycentre");
        let mut hits = 0usize;
        for s in &grid.sigma_points {
            for f in &faces {
                if !(in_region(s, f, &Region::Face) && in_region(s, f, &Region::CR(l.clone()))) {
                    continue;
                }
                hits += 1;
                let expected = EPoint::face_barycentre(f)?;
                row.check(collapse(s, l)? == expected, || format!("s = {s}, f = {f}"));
            }
        }
        row.check(hits > 0, || "no sample hit any |f| ∩ CR_f region".into());
        rows.push(row.finish());
    }

    // CR_f = r_λ*^{-1}(R_f) at the critical λ*
    {
        let critical = params.critical_lambda();
        let mut row = RowBuilder::new("CR_f is the critical radial preimage of R_f");
        for s in &grid.sigma_points {
            let r = radial_expand(s, &critical)?;
            for f in &faces {
                let lhs = in_region(s, f, &Region::CR(l.clone()));
                let rhs = in_region(&r, f, &Region::R);
                row.check(lhs == rhs, || format!("s = {s}, f = {f}"));
            }
        }
        rows.push(row.finish());
    }

    // r_λ(CR_f) + B(δ) ⊆ R_{<=f} with the δ witness
    {
        let mut row = RowBuilder::new("expanded CR regions absorb the delta perturbation ball");
        let amplitude = &params.delta * rat(3, 4);
        let mut perturbations: Vec<Vec<BigRational>> = Vec::new();
        for pattern in bounded_sum_vectors(n + 1, 1, 0) {
            perturbations.push(pattern.iter().map(|&s| rat(s, 1) * &amplitude).collect());
        }
        for s in &grid.sigma_points {
            for f in &faces {
                if !in_region(s, f, &Region::CR(l.clone())) {
                    continue;
                }
                let r = radial_expand(s, &params.lambda)?;
                for b in &perturbations {
                    let shifted = EPoint::new(
                        r.coords().iter().zip(b).map(|(c, d)| c + d).collect(),
                    )?;
                    row.check(in_region(&shifted, f, &Region::RLe), || {
                        format!("s = {s}, f = {f}, perturbed = {shifted}")
                    });
                }
            }
        }
        rows.push(row.finish());
    }

    // coverage
    {
        let mut row = RowBuilder::new("R regions cover E");
        for t in &grid.e_points {
            row.check(
                faces.iter().any(|f| in_region(t, f, &Region::R)),
                || format!("t = {t}"),
            );
        }
        rows.push(row.finish());
        let mut row = RowBuilder::new("CR regions cover Sigma");
        for s in &grid.sigma_points {
            row.check(
                faces.iter().any(|f| in_region(s, f, &Region::CR(l.clone()))),
                || format!("s = {s}"),
            );
        }
        rows.push(row.finish());
    }

    // simplicial rows per complex
    for (name, complex) in &opts.complexes {
        if complex.dim() != n {
            return Err(Error::Validation(format!(
                "complex {name:?} has dimension {} but the suite runs at n = {n}",
                complex.dim()
            )));
        }
        let sub = barycentric_subdivision(complex);
        let base = sub.coloured()?;
        let sub2 = barycentric_subdivision(&base.complex);
        rows.extend(simplicial_rows(name, &base, &sub2, params, opts.grid)?);
    }

    Ok(DualSuiteReport { n, grid: opts.grid, rows })
}

/// Sample points of the coloured complex: weight grids over every maximal
/// carrier chain. Density adapts to the carrier count to stay at desk
/// scale, but never below denominator 2.
fn carrier_samples(
    base: &ColouredComplex,
    sub2: &Subdivision,
    grid: GridName,
) -> Vec<BarycentricPoint> {
    let maxdim = sub2.complex.dim();
    let carriers: Vec<Simplex> = sub2
        .complex
        .simplices_of_dim(maxdim)
        .into_iter()
        .cloned()
        .collect();
    let budget = match grid {
        GridName::Coarse => 2_000,
        GridName::Default => 8_000,
        GridName::Fine => 20_000,
    };
    let mut d = 4i64.min(2 + maxdim as i64);
    // shrink the weight grid until the sample count fits the budget
    let count_for = |d: i64| -> usize {
        compositions(maxdim + 1, d).len() * carriers.len()
    };
    while d > 2 && count_for(d) > budget {
        d -= 1;
    }
    let weight_grids = compositions(maxdim + 1, d);
    let _ = base;
    let mut out = Vec::new();
    for carrier in &carriers {
        for w in &weight_grids {
            out.push(
                BarycentricPoint::new(
                    carrier.clone(),
                    w.iter().map(|&a| rat(a, d)).collect(),
                )
                .expect("composition weights are a partition of one"),
            );
        }
    }
    out
}

fn simplicial_rows(
    name: &str,
    base: &ColouredComplex,
    sub2: &Subdivision,
    params: &DualParams,
    grid: GridName,
) -> Result<Vec<SuiteRow>> {
    let n = params.n;
    let l = &params.l;
    let faces = FaceSet::all_nonempty(n);
    let mut rows = Vec::new();

    let samples = carrier_samples(base, sub2, grid);

    // spectral support: chain certificate and the support lemma
    {
        let mut chain_row = RowBuilder::new(format!("spectral support is a chain [{name}]"));
        let mut srf_row =
            RowBuilder::new(format!("support pairs dominate every CR colour set [{name}]"));
        for x in &samples {
            let sup = spectral_support(x, base, sub2, l)?;
            chain_row.check(sup.is_chain() && !sup.support.is_empty(), || {
                format!("carrier {}, weights {:?}", x.carrier(), x.weights())
            });
            for f in &faces {
                if !in_region(&sup.colour_image, f, &Region::CR(l.clone())) {
                    continue;
                }
                // the support is a chain, so the smallest member is every
                // pairwise intersection; checking it covers all pairs
                let least = &sup.support[0];
                let colours = FaceSet::new(base.colouring.colour_set(least)?, n)?;
                srf_row.check(f.is_subset(&colours), || {
                    format!(
                        "x over {} at {}, f = {f}, least support {least}",
                        x.carrier(),
                        sup.colour_image
                    )
                });
            }
        }
        rows.push(chain_row.finish());
        rows.push(srf_row.finish());
    }

    // q̄ compatibility: q̄(t, σ) = q̄(t, σ') on R_{<=ν(σ∩σ')}
    {
        let mut row = RowBuilder::new(format!("bar-q agrees across common faces [{name}]"));
        let simplices: Vec<Simplex> = base.complex.simplices().cloned().collect();
        for tau in &simplices {
            let cofaces: Vec<&Simplex> = simplices
                .iter()
                .filter(|s| tau.is_face_of(s))
                .take(3)
                .collect();
            let f = FaceSet::new(base.colouring.colour_set(tau)?, n)?;
            let t_samples = rle_samples(&f, n);
            for (i, a) in cofaces.iter().enumerate() {
                for b in &cofaces[i + 1..] {
                    for t in &t_samples {
                        let qa = bar_q(t, a, base)?;
                        let qb = bar_q(t, b, base)?;
                        row.check(qa.minimal() == qb.minimal(), || {
                            format!("t = {t}, σ = {a}, σ' = {b}")
                        });
                    }
                }
            }
        }
        rows.push(row.finish());
    }

    // support-pattern product closure, with a corrupted negative control
    {
        let basis: Vec<Simplex> = if base.complex.simplex_count() <= 40 {
            base.complex.simplices().cloned().collect()
        } else {
            let top = base
                .complex
                .simplices_of_dim(base.complex.dim())
                .into_iter()
                .next()
                .expect("nonempty complex")
                .clone();
            let mut faces: Vec<Simplex> = top.proper_faces();
            faces.push(top);
            faces.sort();
            faces
        };
        let e_grid = build_grid(n, GridName::Coarse, l);
        let points: Vec<EPoint> = e_grid.e_points.into_iter().take(9).collect();
        let dim = basis.len();
        let pattern = |salt: i64| -> Result<SampledPattern> {
            let mut samples = Vec::new();
            for (k, t) in points.iter().enumerate() {
                let mut m = vec![vec![BigRational::zero(); dim]; dim];
                for (i, row_entries) in m.iter_mut().enumerate() {
                    for (j, entry) in row_entries.iter_mut().enumerate() {
                        let f = match basis[i].intersection(&basis[j]) {
                            Some(common) => {
                                FaceSet::new(base.colouring.colour_set(&common)?, n)?
                            }
                            None => FaceSet::empty(n),
                        };
                        if in_region(t, &f, &Region::RLe) {
                            let v = 1 + ((salt + i as i64 + 2 * j as i64 + k as i64) % 5);
                            *entry = rat(v, 3);
                        }
                    }
                }
                samples.push((t.clone(), m));
            }
            Ok(SampledPattern { simplices: basis.clone(), samples })
        };
        let p1 = pattern(1)?;
        let p2 = pattern(7)?;
        let outcome = support_product_check(&p1, &p2, base)?;
        let mut row = RowBuilder::new(format!("support patterns close under products [{name}]"));
        row.check(outcome == SupportProductOutcome::ProductValid, || format!("{outcome:?}"));
        rows.push(row.finish());

        // negative control: a nonzero entry for a disjoint pair must be caught
        let mut row = RowBuilder::new(format!("corrupted support pattern is detected [{name}]"));
        let disjoint = (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).find(
            |&(i, j)| basis[i].intersection(&basis[j]).is_none(),
        );
        match disjoint {
            Some((i, j)) => {
                let mut bad = p1.clone();
                bad.samples[0].1[i][j] = BigRational::one();
                let caught = matches!(
                    support_product_check(&bad, &p2, base)?,
                    SupportProductOutcome::InputViolation { which: 1, .. }
                );
                row.check(caught, || "corruption was not detected".into());
            }
            None => {
                // every pair of basis simplices meets; corrupt a region
                // violation instead: find (t, i, j) with t outside the region
                let mut corrupted = false;
                'outer: for (k, (t, _)) in p1.samples.iter().enumerate() {
                    for i in 0..dim {
                        for j in 0..dim {
                            let common = basis[i].intersection(&basis[j]).expect("all meet");
                            let f = FaceSet::new(base.colouring.colour_set(&common)?, n)?;
                            if !in_region(t, &f, &Region::RLe) {
                                let mut bad = p1.clone();
                                bad.samples[k].1[i][j] = BigRational::one();
                                corrupted = matches!(
                                    support_product_check(&bad, &p2, base)?,
                                    SupportProductOutcome::InputViolation { which: 1, .. }
                                );
                                break 'outer;
                            }
                        }
                    }
                }
                row.check(corrupted, || "no corruptible entry found or not detected".into());
            }
        }
        rows.push(row.finish());
    }

    Ok(rows)
}

/// A few deterministic samples of `R_{<=f}`: scale mass on `f` up and put
/// the slack as negative mass outside.
fn rle_samples(f: &FaceSet, n: usize) -> Vec<EPoint> {
    let mut out = Vec::new();
    let members: Vec<usize> = f.members().copied().collect();
    if members.is_empty() {
        return out;
    }
    let complement: Vec<usize> = (0..=n).filter(|i| !f.contains(*i)).collect();
    // pure face point
    out.push(EPoint::face_barycentre(f).expect("nonempty"));
    if !complement.is_empty() {
        // negative mass spread over the whole complement
        let mut coords = vec![BigRational::zero(); n + 1];
        for &i in &members {
            coords[i] = rat(3, 2 * members.len() as i64);
        }
        for &i in &complement {
            coords[i] = rat(-1, 2 * complement.len() as i64);
        }
        out.push(EPoint::new(coords).expect("sums to one"));
        // negative mass on a single complement coordinate
        let mut coords = vec![BigRational::zero(); n + 1];
        for &i in &members {
            coords[i] = rat(5, 4 * members.len() as i64);
        }
        coords[complement[0]] = rat(-1, 4);
        out.push(EPoint::new(coords).expect("sums to one"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_deterministic_and_nonempty() {
        let l = rat(1, 6);
        for n in 0..=4 {
            let g1 = build_grid(n, GridName::Default, &l);
            let g2 = build_grid(n, GridName::Default, &l);
            assert!(!g1.e_points.is_empty());
            assert!(!g1.sigma_points.is_empty());
            assert_eq!(g1.e_points, g2.e_points);
            assert_eq!(g1.sigma_points, g2.sigma_points);
            assert!(g1.sigma_points.iter().all(|p| p.is_in_sigma()));
        }
    }

    #[test]
    fn grid_names_parse() {
        assert_eq!("default".parse::<GridName>().unwrap(), GridName::Default);
        assert_eq!("coarse".parse::<GridName>().unwrap(), GridName::Coarse);
        assert_eq!("fine".parse::<GridName>().unwrap(), GridName::Fine);
        assert!("mystery".parse::<GridName>().is_err());
    }

    #[test]
    fn region_rows_pass_for_low_dimensions() {
        for n in 0..=2 {
            let params = DualParams::default_for(n);
            let report =
                verify_dual(&SuiteOptions::regions_only(params, GridName::Coarse)).unwrap();
            assert!(report.all_passed(), "n = {n}:\n{report}");
        }
    }

    #[test]
    fn simplicial_rows_pass_for_the_triangle() {
        let params = DualParams::default_for(2);
        let opts = SuiteOptions {
            params,
            grid: GridName::Coarse,
            complexes: vec![("triangle".into(), builders::filled_triangle())],
        };
        let report = verify_dual(&opts).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.rows.len() >= 12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let params = DualParams::default_for(2);
        let opts = SuiteOptions {
            params,
            grid: GridName::Coarse,
            complexes: vec![("circle".into(), builders::circle())],
        };
        assert!(verify_dual(&opts).is_err());
    }
}

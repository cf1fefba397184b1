//! The Gysin solver: K-theory of boundary crossed products for free
//! cocompact actions (via the four-term sequences attached to the quotient),
//! the unit-torsion rule, and the calculator for free products of two finite
//! cyclic groups.
//!
//! Every result ships with a mechanical certificate: the claimed exact
//! sequences are rebuilt as integer matrices and re-verified node by node.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::action::{orbit_euler_decomposition, EulerDecomposition};
use crate::builders::free_product_orbits;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactness::{verify_exact_sequence, Certificate, Hom, PresentedGroup, SequenceSpec};
use crate::ktheory::{cohomology, homology, KMode};
use crate::linalg::{abs_det, coker_and_ker, kernel_basis, FGAbelianGroup, IntMatrix};

/// Either a fully determined group, or the two ends of a short exact
/// sequence whose middle is not determined by them (the quotient has
/// torsion, so the extension need not split).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionOutcome {
    Resolved(FGAbelianGroup),
    Unresolved { sub: FGAbelianGroup, quot: FGAbelianGroup },
}

impl ExtensionOutcome {
    /// Rank is determined even when the extension is unresolved.
    pub fn rank(&self) -> usize {
        match self {
            ExtensionOutcome::Resolved(g) => g.rank(),
            ExtensionOutcome::Unresolved { sub, quot } => sub.rank() + quot.rank(),
        }
    }

    pub fn resolved(&self) -> Option<&FGAbelianGroup> {
        match self {
            ExtensionOutcome::Resolved(g) => Some(g),
            ExtensionOutcome::Unresolved { .. } => None,
        }
    }
}

impl std::fmt::Display for ExtensionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionOutcome::Resolved(g) => write!(f, "{g}"),
            ExtensionOutcome::Unresolved { sub, quot } => {
                write!(f, "extension of {quot} by {sub} (unresolved)")
            }
        }
    }
}

/// Order of the unit class in the boundary K-theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitTorsion {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for UnitTorsion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UnitTorsion::Finite(n) => write!(f, "{n}"),
            UnitTorsion::Infinite => write!(f, "infinite"),
        }
    }
}

/// Which pair of exact sequences produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// Compact quotient with nonzero Euler characteristic: the unit class
    /// spans a finite cyclic subgroup and the sequences interleave.
    CompactNonzeroChi,
    /// Noncompact quotient, vanishing Euler characteristic, or a fixed
    /// boundary point: both rows split into plain short exact sequences.
    SplitCase,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseTag::CompactNonzeroChi => write!(f, "compact-nonzero-chi"),
            CaseTag::SplitCase => write!(f, "split-case"),
        }
    }
}

/// Options for [`gysin_boundary`].
#[derive(Debug, Clone, Copy)]
pub struct GysinOptions {
    pub compact: bool,
    /// A boundary fixed point forces the split case regardless of `χ`.
    pub fixed_boundary_point: bool,
    pub mode: KMode,
}

impl GysinOptions {
    pub fn compact() -> Self {
        GysinOptions { compact: true, fixed_boundary_point: false, mode: KMode::Strict }
    }

    pub fn noncompact() -> Self {
        GysinOptions { compact: false, fixed_boundary_point: false, mode: KMode::Strict }
    }
}

/// K-theory of the boundary crossed product, with full provenance.
#[derive(Debug, Clone)]
pub struct GysinResult {
    pub k0: ExtensionOutcome,
    pub k1: ExtensionOutcome,
    pub unit_torsion: UnitTorsion,
    pub case_tag: CaseTag,
    pub chi: i64,
    pub compact: bool,
    /// True when a fixed boundary point overrode the compact-χ branch.
    pub split_override: bool,
    /// `K_0`, `K_1` of the group C*-algebra (K-homology of the quotient).
    pub k_group_algebra: (FGAbelianGroup, FGAbelianGroup),
    /// `K^0`, `K^1` of the quotient space.
    pub k_quotient: (FGAbelianGroup, FGAbelianGroup),
    pub certificate: Certificate,
    pub sketch: Vec<String>,
}

/// The unit-torsion rule: order `|χ|` iff the quotient is compact with
/// `χ != 0`, infinite otherwise.
pub fn unit_torsion_order(chi: i64, compact: bool) -> UnitTorsion {
    if compact && chi != 0 {
        UnitTorsion::Finite(chi.unsigned_abs())
    } else {
        UnitTorsion::Infinite
    }
}

/// Resolve an extension `0 -> sub -> ? -> quot -> 0`: a free quotient forces
/// a splitting; a torsion quotient is reported unresolved with both ends.
fn resolve_extension(sub: &FGAbelianGroup, quot: &FGAbelianGroup) -> ExtensionOutcome {
    if quot.is_free() {
        ExtensionOutcome::Resolved(sub.direct_sum(quot))
    } else {
        ExtensionOutcome::Unresolved { sub: sub.clone(), quot: quot.clone() }
    }
}

/// Presentation of the middle of a split extension: the generators of `sub`
/// followed by the generators of `quot`, with both relation sets and an
/// optional extra relation column in the `sub` block.
fn middle_presentation(
    name: &str,
    sub_gens: usize,
    sub_rels: &IntMatrix,
    quot: &FGAbelianGroup,
    extra_sub_relation: Option<&[BigInt]>,
) -> PresentedGroup {
    let quot_rels = quot.presentation();
    let gens = sub_gens + quot.generator_count();
    let cols = sub_rels.cols() + quot_rels.cols() + extra_sub_relation.map_or(0, |_| 1);
    let mut rel = IntMatrix::zero(gens, cols);
    for j in 0..sub_rels.cols() {
        for i in 0..sub_gens {
            rel.set(i, j, sub_rels.get(i, j).clone());
        }
    }
    for j in 0..quot_rels.cols() {
        for i in 0..quot.generator_count() {
            rel.set(sub_gens + i, sub_rels.cols() + j, quot_rels.get(i, j).clone());
        }
    }
    if let Some(extra) = extra_sub_relation {
        for (i, v) in extra.iter().enumerate() {
            rel.set(i, cols - 1, v.clone());
        }
    }
    PresentedGroup::new(name, gens, rel)
}

/// Inclusion of the first block into a concatenated presentation.
fn block_inclusion(total: usize, block: usize) -> IntMatrix {
    let mut m = IntMatrix::zero(total, block);
    for i in 0..block {
        m.set(i, i, BigInt::one());
    }
    m
}

/// Projection onto the last `block` generators of a concatenated
/// presentation.
fn block_projection(total: usize, block: usize) -> IntMatrix {
    let mut m = IntMatrix::zero(block, total);
    for i in 0..block {
        m.set(i, total - block + i, BigInt::one());
    }
    m
}

/// The canonical group of a presentation-by-columns.
fn group_of_columns(gens: usize, rel_cols: &IntMatrix) -> FGAbelianGroup {
    debug_assert_eq!(rel_cols.rows(), gens);
    coker_and_ker(rel_cols).0
}

/// Main entry: the boundary K-theory determined by a connected quotient
/// complex of dimension at most 2 (3 with `AssumeCollapse`).
pub fn gysin_boundary(quotient: &SimplicialComplex, opts: &GysinOptions) -> Result<GysinResult> {
    if !quotient.is_connected() {
        return Err(Error::Validation(
            "the quotient complex must be connected (the dimension functional needs a \
             single unit class)"
                .into(),
        ));
    }
    // reuse the dimension gate of the K-theory layer
    crate::ktheory::k_groups(quotient, opts.mode)?;

    let chi = quotient.euler_char();
    let h = homology(quotient);
    let hc = cohomology(quotient);

    // connected quotient: H_0 = H^0 = Z; the unit class is the H_0 generator
    let h2 = h.group(2).direct_sum(&FGAbelianGroup::trivial());
    let k0_cred = FGAbelianGroup::free(1).direct_sum(&h2); // H_0 ⊕ H_2, e_0 = [1]
    let k1_cred = h.group(1).direct_sum(&h.group(3));
    let hc2 = hc.group(2);
    let k0_coh = FGAbelianGroup::free(1).direct_sum(&hc2); // H^0 ⊕ H^2
    let k1_coh = hc.group(1).direct_sum(&hc.group(3));

    let mut sketch = vec![format!(
        "quotient: connected, dim {}, chi = {}",
        quotient.dim(),
        chi
    )];
    sketch.push(format!(
        "K_0(C*G) = {k0_cred}, K_1(C*G) = {k1_cred}, K^0 = {k0_coh}, K^1 = {k1_coh}"
    ));

    let compact_branch = opts.compact && chi != 0 && !opts.fixed_boundary_point;
    let split_override = opts.fixed_boundary_point && opts.compact && chi != 0;
    if split_override {
        sketch.push(
            "fixed boundary point: the connecting map vanishes, forcing the split case \
             despite compactness and nonzero chi"
                .into(),
        );
    }

    let mut cert = Certificate::default();
    let (k0, k1, case_tag, unit_torsion);

    if compact_branch {
        case_tag = CaseTag::CompactNonzeroChi;
        unit_torsion = unit_torsion_order(chi, true);

        // K0: 0 -> K0(C*G)/<chi·[1]> -> K0(∂) -> K^1 -> 0
        let gens = k0_cred.generator_count();
        let mut chi_rel = vec![BigInt::zero(); gens];
        chi_rel[0] = BigInt::from(chi);
        let mut sub_rels = k0_cred.presentation();
        sub_rels = sub_rels.hconcat(&IntMatrix::from_bigint_rows(
            chi_rel.iter().cloned().map(|v| vec![v]).collect(),
        ));
        let sub0 = group_of_columns(gens, &sub_rels);
        k0 = resolve_extension(&sub0, &k1_coh);
        sketch.push(format!(
            "K0(∂): 0 -> K0(C*G)/<chi[1]> = {sub0} -> K0(∂) -> K^1 = {k1_coh} -> 0{}",
            if k1_coh.is_free() { "; quotient free, splits" } else { "; unresolved" }
        ));

        // K1: 0 -> K1(C*G) -> K1(∂) -> ker(dim: K^0 -> Z) = H^2 -> 0
        k1 = resolve_extension(&k1_cred, &hc2);
        sketch.push(format!(
            "K1(∂): 0 -> K1(C*G) = {k1_cred} -> K1(∂) -> ker(dim) = {hc2} -> 0{}",
            if hc2.is_free() { "; quotient free, splits" } else { "; unresolved" }
        ));

        // certify sequence A: 0 -> Z --chi·[1]--> K0(C*G) -> K0(∂) -> K^1 -> 0
        if k0.resolved().is_some() {
            let cred = PresentedGroup::from_group("K0(C*G)", &k0_cred);
            let middle = middle_presentation(
                "K0(∂)",
                gens,
                &k0_cred.presentation(),
                &k1_coh,
                Some(&{
                    let mut v = vec![BigInt::zero(); gens];
                    v[0] = BigInt::from(chi);
                    v
                }),
            );
            let mid_gens = middle.generators;
            // reported group matches the presented middle
            cert.record(
                "K0(∂): presented extension middle matches the reported group",
                &group_of_columns(mid_gens, &middle.relations)
                    == k0.resolved().expect("checked"),
            );
            // order of the unit class in the middle
            let mut unit = vec![BigInt::zero(); mid_gens];
            unit[0] = BigInt::one();
            cert.record(
                format!("unit class has order |chi| = {} in K0(∂)", chi.abs()),
                middle.order_of(&unit) == Some(BigInt::from(chi.abs())),
            );
            let mut chi_map = IntMatrix::zero(gens, 1);
            chi_map.set(0, 0, BigInt::from(chi));
            let spec = SequenceSpec {
                name: "K0 row".into(),
                groups: vec![
                    PresentedGroup::from_group("<chi[1]>", &FGAbelianGroup::free(1)),
                    cred,
                    middle,
                    PresentedGroup::from_group("K^1", &k1_coh),
                ],
                maps: vec![
                    Hom::new("chi·[1]", chi_map),
                    Hom::new("u", block_inclusion(mid_gens, gens)),
                    Hom::new("restrict", block_projection(mid_gens, k1_coh.generator_count())),
                ],
            };
            cert.merge(verify_exact_sequence(&spec));
        }

        // certify sequence B: 0 -> K1(C*G) -> K1(∂) -> K^0 --dim--> Z -> 0
        if k1.resolved().is_some() {
            let sub_gens = k1_cred.generator_count();
            let middle =
                middle_presentation("K1(∂)", sub_gens, &k1_cred.presentation(), &hc2, None);
            let mid_gens = middle.generators;
            cert.record(
                "K1(∂): presented extension middle matches the reported group",
                &group_of_columns(mid_gens, &middle.relations)
                    == k1.resolved().expect("checked"),
            );
            // K^0 presented as e0 = H^0 generator, then the H^2 block
            let k0_coh_pres = PresentedGroup::from_group("K^0", &k0_coh);
            // middle -> K^0: kill the K1(C*G) block, send the H^2 block to
            // the H^2 generators of K^0 (free gens shifted by one, torsion
            // gens aligned at the tail of each list)
            let mut to_k0 = IntMatrix::zero(k0_coh.generator_count(), mid_gens);
            for j in 0..hc2.rank() {
                to_k0.set(1 + j, sub_gens + j, BigInt::one());
            }
            for j in 0..hc2.torsion().len() {
                to_k0.set(
                    1 + hc2.rank() + j,
                    sub_gens + hc2.rank() + j,
                    BigInt::one(),
                );
            }
            let mut dim_map = IntMatrix::zero(1, k0_coh.generator_count());
            dim_map.set(0, 0, BigInt::one());
            let spec = SequenceSpec {
                name: "K1 row".into(),
                groups: vec![
                    PresentedGroup::from_group("K1(C*G)", &k1_cred),
                    middle,
                    k0_coh_pres,
                    PresentedGroup::from_group("Z", &FGAbelianGroup::free(1)),
                ],
                maps: vec![
                    Hom::new("u", block_inclusion(mid_gens, sub_gens)),
                    Hom::new("restrict", to_k0),
                    Hom::new("dim", dim_map),
                ],
            };
            cert.merge(verify_exact_sequence(&spec));
        }
    } else {
        case_tag = CaseTag::SplitCase;
        // u_* is injective in the split case, so the unit class is never
        // torsion here (this also covers a fixed-point override of a
        // compact quotient with nonzero chi)
        unit_torsion = UnitTorsion::Infinite;

        k0 = resolve_extension(&k0_cred, &k1_coh);
        k1 = resolve_extension(&k1_cred, &k0_coh);
        sketch.push(format!(
            "K0(∂): 0 -> K0(C*G) = {k0_cred} -> K0(∂) -> K^1 = {k1_coh} -> 0"
        ));
        sketch.push(format!(
            "K1(∂): 0 -> K1(C*G) = {k1_cred} -> K1(∂) -> K^0 = {k0_coh} -> 0"
        ));

        for (row, sub, quot, outcome) in [
            ("K0 row", &k0_cred, &k1_coh, &k0),
            ("K1 row", &k1_cred, &k0_coh, &k1),
        ] {
            if outcome.resolved().is_none() {
                continue;
            }
            let sub_gens = sub.generator_count();
            let middle = middle_presentation(
                &format!("{row} middle"),
                sub_gens,
                &sub.presentation(),
                quot,
                None,
            );
            let mid_gens = middle.generators;
            cert.record(
                format!("{row}: presented extension middle matches the reported group"),
                &group_of_columns(mid_gens, &middle.relations)
                    == outcome.resolved().expect("checked"),
            );
            if row == "K0 row" {
                // the unit class maps injectively: infinite order
                let mut unit = vec![BigInt::zero(); mid_gens];
                unit[0] = BigInt::one();
                cert.record(
                    "unit class has infinite order in K0(∂)",
                    middle.order_of(&unit).is_none(),
                );
            }
            let spec = SequenceSpec {
                name: row.into(),
                groups: vec![
                    PresentedGroup::from_group("sub", sub),
                    middle,
                    PresentedGroup::from_group("quot", quot),
                ],
                maps: vec![
                    Hom::new("u", block_inclusion(mid_gens, sub_gens)),
                    Hom::new("restrict", block_projection(mid_gens, quot.generator_count())),
                ],
            };
            cert.merge(verify_exact_sequence(&spec));
        }
    }

    // rank bookkeeping across the six-term sequence
    let drop = usize::from(compact_branch);
    cert.record(
        "rank K0(∂) = rank K0(C*G) - [compact & chi != 0] + rank K^1",
        k0.rank() == k0_cred.rank() - drop + k1_coh.rank(),
    );
    cert.record(
        "rank K1(∂) = rank K1(C*G) + rank K^0 - [compact & chi != 0]",
        k1.rank() == k1_cred.rank() + k0_coh.rank() - drop,
    );
    let alternating = k0_coh.rank() as i64 - k0_cred.rank() as i64 + k0.rank() as i64
        - k1_coh.rank() as i64
        + k1_cred.rank() as i64
        - k1.rank() as i64;
    cert.record("alternating rank sum over the six nodes vanishes", alternating == 0);

    sketch.push(format!("unit torsion: {unit_torsion}"));

    Ok(GysinResult {
        k0,
        k1,
        unit_torsion,
        case_tag,
        chi,
        compact: opts.compact,
        split_override,
        k_group_algebra: (k0_cred, k1_cred),
        k_quotient: (k0_coh, k1_coh),
        certificate: cert,
        sketch,
    })
}

/// The torsion-free entry point of the solver (free cocompact or free
/// non-cocompact actions, described by their quotient complex).
pub fn gysin_torsion_free(quotient: &SimplicialComplex, compact: bool) -> Result<GysinResult> {
    let opts = if compact { GysinOptions::compact() } else { GysinOptions::noncompact() };
    gysin_boundary(quotient, &opts)
}

/// Human-readable annotation naming the branch a result used and whether a
/// boundary fixed point overrode the compact-χ branch.
pub fn split_case_report(result: &GysinResult) -> String {
    match (result.case_tag, result.split_override) {
        (CaseTag::CompactNonzeroChi, _) => format!(
            "compact quotient with chi = {} != 0: the unit class spans a cyclic subgroup \
             of order |chi| and the two rows interleave through it",
            result.chi
        ),
        (CaseTag::SplitCase, true) => format!(
            "split case (override): a boundary fixed point kills the connecting map, so \
             the rows split even though the quotient is compact with chi = {} != 0",
            result.chi
        ),
        (CaseTag::SplitCase, false) => {
            "split case: the rows split into short exact sequences".to_string()
        }
    }
}

/// Report for the free product `Z/m * Z/n` acting on its tree.
#[derive(Debug, Clone)]
pub struct FreeProductReport {
    pub m: u64,
    pub n: u64,
    /// `K^top_0(G) = (Z^m ⊕ Z^n) / <(ρ, -ρ)>` and `K^top_1(G) = 0`.
    pub ktop0: FGAbelianGroup,
    pub ktop1: FGAbelianGroup,
    /// `K_0` of the proper algebra: the kernel of `(dim, -dim)`.
    pub k0_proper: FGAbelianGroup,
    pub k1_proper: FGAbelianGroup,
    /// The committed matrix of `dim_{Z/m} + dim_{Z/n} - dim_1` in the bases
    /// documented by `derivation`.
    pub eul_matrix: IntMatrix,
    pub boundary_k0: FGAbelianGroup,
    pub boundary_k1: FGAbelianGroup,
    pub decomposition: EulerDecomposition,
    pub abs_det: BigInt,
    /// For `(m, n) != (2, 3)` the answer depends on the committed basis
    /// identifications and is not asserted as a theorem.
    pub model_dependent: bool,
    pub derivation: Vec<String>,
    pub certificate: Certificate,
}

/// Compute the boundary K-theory of `Z/m * Z/n` from the orbit data of its
/// tree, exhibiting the Euler class as an explicit integer matrix.
///
/// Representation rings carry the character basis `0..k`; `ρ` is the
/// all-ones (regular) vector. On the kernel of `(dim, -dim)` the three
/// restriction classes act by `(a, b) ↦ (a, 0)`, `(0, b)` and
/// `(dim a)·(ρ_m, 0)` respectively, the last using the identification
/// `(ρ, -ρ) ~ 0` that presents the induced class of the free orbit.
pub fn free_product_two_cyclic(m: u64, n: u64) -> Result<FreeProductReport> {
    if m < 2 || n < 2 {
        return Err(Error::MalformedInput(
            "free-product factors must have order at least 2".into(),
        ));
    }
    let mm = m as usize;
    let nn = n as usize;
    let g = mm + nn;
    let rank = g - 1;

    // committed kernel basis of (dim, -dim): (e_i, e_0) for i < m, then
    // (0, e_j - e_{j+1}) for j < n-1
    let mut kernel: Vec<Vec<i64>> = Vec::with_capacity(rank);
    for i in 0..mm {
        let mut v = vec![0i64; g];
        v[i] = 1;
        v[mm] = 1;
        kernel.push(v);
    }
    for j in 0..nn - 1 {
        let mut v = vec![0i64; g];
        v[mm + j] = 1;
        v[mm + j + 1] = -1;
        kernel.push(v);
    }

    // reduction modulo (ρ, -ρ): drop the last coordinate using
    // e_last ≡ Σ_{i<m} e_i − Σ_{m<=j<g-1} e_j
    let reduce = |x: &[i64]| -> Vec<i64> {
        let last = x[g - 1];
        (0..g - 1)
            .map(|i| if i < mm { x[i] + last } else { x[i] - last })
            .collect()
    };

    let mut eul = IntMatrix::zero(rank, rank);
    for (t, k) in kernel.iter().enumerate() {
        let (a, b) = k.split_at(mm);
        let dim_a: i64 = a.iter().sum();
        let mut x = vec![0i64; g];
        for i in 0..mm {
            x[i] = a[i] - dim_a; // (a, 0) − dim(a)·(ρ_m, 0)
        }
        x[mm..g].copy_from_slice(b); // + (0, b)
        for (r, val) in reduce(&x).into_iter().enumerate() {
            eul.set(r, t, BigInt::from(val));
        }
    }

    let (boundary_k0, boundary_k1) = coker_and_ker(&eul);
    let det = abs_det(&eul);

    let mut cert = Certificate::default();

    // K^top_0 computed two ways: free of rank m+n-1, and as the presented
    // quotient by the primitive relation (ρ, -ρ)
    let ktop0 = FGAbelianGroup::free(rank);
    let mut rho = IntMatrix::zero(g, 1);
    for i in 0..g {
        rho.set(i, 0, BigInt::from(if i < mm { 1 } else { -1 }));
    }
    cert.record(
        "K^top_0 = (Z^m ⊕ Z^n)/<(ρ,-ρ)> is free of rank m+n-1",
        group_of_columns(g, &rho) == ktop0,
    );

    // committed kernel basis really spans ker(dim, -dim)
    let mut dim_map = IntMatrix::zero(1, g);
    for i in 0..g {
        dim_map.set(0, i, BigInt::from(if i < mm { 1 } else { -1 }));
    }
    let committed = IntMatrix::from_rows(&kernel).transpose();
    let snf_kernel = kernel_basis(&dim_map);
    let all_in = snf_kernel
        .iter()
        .all(|v| crate::linalg::in_column_lattice(&committed, v))
        && (0..rank).all(|j| {
            dim_map
                .mul_vec(&committed.column(j))
                .iter()
                .all(|e| e.is_zero())
        });
    cert.record("committed basis spans ker(dim, -dim) exactly", all_in);

    // six-term collapse: 0 -> K1(∂) -> K0(proper) --Eul--> K^top_0 -> K0(∂) -> 0
    let nullity = rank - crate::linalg::smith_normal_form(&eul).rank();
    let ker_basis = kernel_basis(&eul);
    let mut ker_map = IntMatrix::zero(rank, nullity);
    for (j, v) in ker_basis.iter().enumerate() {
        for (i, e) in v.iter().enumerate() {
            ker_map.set(i, j, e.clone());
        }
    }
    let spec = SequenceSpec {
        name: "six-term collapse".into(),
        groups: vec![
            PresentedGroup::from_group("K1(∂)", &FGAbelianGroup::free(nullity)),
            PresentedGroup::from_group("K0(proper)", &FGAbelianGroup::free(rank)),
            PresentedGroup::from_group("K^top_0", &ktop0),
            PresentedGroup::new("K0(∂)", rank, eul.clone()),
        ],
        maps: vec![
            Hom::new("kernel inclusion", ker_map),
            Hom::new("Eul", eul.clone()),
            Hom::new("quotient", IntMatrix::identity(rank)),
        ],
    };
    cert.merge(verify_exact_sequence(&spec));
    cert.record(
        "reported K0(∂) equals the cokernel presentation",
        group_of_columns(rank, &eul) == boundary_k0,
    );
    let alternating =
        nullity as i64 - rank as i64 + rank as i64 - boundary_k0.rank() as i64;
    cert.record(
        "alternating rank sum over the four nonzero nodes vanishes",
        alternating == 0,
    );

    let orbits = free_product_orbits(m, n)?;
    let decomposition = orbit_euler_decomposition(&orbits)?;

    let mut derivation = vec![
        format!(
            "representation rings in the character basis: Rep(Z/{m}) = Z^{m}, Rep(Z/{n}) = Z^{n}"
        ),
        format!(
            "K0(proper) = ker(dim, -dim) with basis (e_i, e_0) for i < {m} and \
             (0, e_j - e_(j+1)) for j < {}",
            n - 1
        ),
        format!(
            "K^top_0 = Z^{g}/<(ρ, -ρ)> with basis the classes of e_0 .. e_{}",
            g - 2
        ),
        "restriction classes on a kernel element (a, b): dim_{Z/m} ↦ class of (a, 0); \
         dim_{Z/n} ↦ class of (0, b); dim_1 ↦ (dim a)·class of (ρ_m, 0), via the \
         identification (ρ_m, 0) ~ (0, ρ_n) forced by (ρ, -ρ) ~ 0"
            .to_string(),
        format!("committed Euler matrix has |det| = {det}"),
    ];
    let model_dependent = (m, n) != (2, 3);
    if model_dependent {
        derivation.push(
            "nonstandard factors: the boundary groups are the cokernel/kernel of the \
             committed matrix and depend on these identifications (model-dependent)"
                .to_string(),
        );
    }

    Ok(FreeProductReport {
        m,
        n,
        ktop0,
        ktop1: FGAbelianGroup::trivial(),
        k0_proper: FGAbelianGroup::free(rank),
        k1_proper: FGAbelianGroup::trivial(),
        eul_matrix: eul,
        boundary_k0,
        boundary_k1,
        decomposition,
        abs_det: det,
        model_dependent,
        derivation,
        certificate: cert,
    })
}

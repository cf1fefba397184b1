//! Computation reports: the library half of the command-line interface.
//!
//! Each subcommand parses its JSON inputs, runs the pipeline, re-validates
//! the numeric claims it is about to print, and produces a [`Report`] with
//! a human-readable body and a machine JSON value. Reports are byte-stable
//! for identical inputs: the pipelines are deterministic and JSON maps are
//! emitted in sorted key order.

use num_rational::BigRational;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::action::{
    euler_poincare_element, explicit_euler_decomposition, orbit_euler_decomposition,
    repair_action, to_orbit_data, EulerDecomposition, FormalTau, StabOrder,
};
use crate::builders::{self, MadeObject};
use crate::complex::barycentric_subdivision;
use crate::dual::{verify_dual, DualParams, DualSuiteReport, GridName, SuiteOptions};
use crate::error::{Error, Result};
use crate::exactness::Certificate;
use crate::gysin::{
    free_product_two_cyclic, gysin_boundary, ExtensionOutcome, GysinOptions, GysinResult,
    UnitTorsion,
};
use crate::io;
use crate::ktheory::{cohomology, homology, k_groups, k_homology, KMode};
use crate::linalg::FGAbelianGroup;

/// A numeric claim paired with the name of the invariant check that
/// validated it during this run.
#[derive(Debug, Clone)]
pub struct Claim {
    pub statement: String,
    pub validated_by: String,
}

/// Outcome of one subcommand.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub operations: Vec<String>,
    pub claims: Vec<Claim>,
    pub lines: Vec<String>,
    pub json: Value,
    /// False when an internal certificate check failed; the CLI then exits
    /// nonzero even though a report was produced.
    pub ok: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            input_digest: None,
            operations: Vec::new(),
            claims: Vec::new(),
            lines: Vec::new(),
            json: Value::Null,
            ok: true,
        }
    }

    fn digest(mut self, inputs: &[&str]) -> Self {
        let mut hasher = Sha256::new();
        for i in inputs {
            hasher.update(i.as_bytes());
            hasher.update([0u8]);
        }
        self.input_digest = Some(format!("{:x}", hasher.finalize()));
        self
    }

    fn op(&mut self, name: impl Into<String>) {
        self.operations.push(name.into());
    }

    fn claim(&mut self, statement: impl Into<String>, validated_by: impl Into<String>) {
        self.claims.push(Claim { statement: statement.into(), validated_by: validated_by.into() });
    }

    fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn render_human(&self) -> String {
        let mut out = format!("== {} ==\n", self.command);
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input digest: sha256:{d}\n"));
        }
        if !self.operations.is_empty() {
            out.push_str(&format!("operations: {}\n", self.operations.join(", ")));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        if !self.claims.is_empty() {
            out.push_str("claims:\n");
            for c in &self.claims {
                out.push_str(&format!("  {} [checked by: {}]\n", c.statement, c.validated_by));
            }
        }
        out.push_str(if self.ok { "status: ok\n" } else { "status: FAILED\n" });
        out
    }

    pub fn render_json(&self) -> String {
        let value = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "operations": self.operations,
            "claims": self.claims.iter().map(|c| json!({
                "statement": c.statement,
                "validated_by": c.validated_by,
            })).collect::<Vec<_>>(),
            "result": self.json,
            "ok": self.ok,
        });
        serde_json::to_string_pretty(&value).expect("report serialises")
    }
}

fn group_json(g: &FGAbelianGroup) -> Value {
    serde_json::to_value(io::group_to_json(g)).expect("group serialises")
}

fn certificate_json(c: &Certificate) -> Value {
    serde_json::to_value(&c.checks).expect("certificate serialises")
}

fn decomposition_json(d: &EulerDecomposition) -> Value {
    json!({
        "terms": d.terms.iter().map(|t| json!({
            "stabiliser_class": t.stabiliser_class,
            "component": t.component,
            "multiplicity": t.multiplicity,
        })).collect::<Vec<_>>(),
        "display": d.to_string(),
    })
}

fn tau_json(t: &FormalTau) -> Value {
    json!({
        "terms": t.terms.iter().map(|term| json!({
            "stabiliser_label": term.stabiliser_label,
            "order": term.order,
            "sign": term.sign,
            "multiplicity": term.multiplicity,
        })).collect::<Vec<_>>(),
        "display": t.to_string(),
    })
}

/// `chi`: the Euler characteristic, cross-checked on the barycentric
/// subdivision.
pub fn run_chi(complex_text: &str) -> Result<Report> {
    let (c, _) = io::parse_complex(complex_text)?;
    let mut r = Report::new("chi").digest(&[complex_text]);
    r.op("close_under_faces");
    r.op("euler_char");
    let chi = c.euler_char();
    let sub_chi = barycentric_subdivision(&c).complex.euler_char();
    let check = "euler characteristic is invariant under barycentric subdivision";
    if chi != sub_chi {
        r.ok = false;
    }
    r.claim(format!("chi = {chi}"), check);
    r.line(format!("chi = {chi}"));
    r.json = json!({ "chi": chi, "dim": c.dim(), "simplices": c.simplex_count() });
    Ok(r)
}

/// `homology`: integral homology and cohomology per degree.
pub fn run_homology(complex_text: &str) -> Result<Report> {
    let (c, _) = io::parse_complex(complex_text)?;
    let mut r = Report::new("homology").digest(&[complex_text]);
    r.op("chain_complex");
    r.op("homology");
    r.op("cohomology");
    let h = homology(&c);
    let hc = cohomology(&c);
    let chi = c.euler_char();
    let alt_ok = h.euler_char() == chi;
    if !alt_ok {
        r.ok = false;
    }
    r.claim(
        format!("H_* = {h}"),
        "alternating rank sum equals the Euler characteristic",
    );
    r.line(format!("H_*  = {h}"));
    r.line(format!("H^* = {hc}"));
    r.json = json!({
        "homology": h.groups.iter().map(group_json).collect::<Vec<_>>(),
        "cohomology": hc.groups.iter().map(group_json).collect::<Vec<_>>(),
        "chi": chi,
    });
    Ok(r)
}

/// `ktheory`: K-groups and K-homology of the complex.
pub fn run_ktheory(complex_text: &str, mode: KMode) -> Result<Report> {
    let (c, _) = io::parse_complex(complex_text)?;
    let mut r = Report::new("ktheory").digest(&[complex_text]);
    r.op("k_groups");
    r.op("k_homology");
    let (k0, k1) = k_groups(&c, mode)?;
    let (kh0, kh1) = k_homology(&c, mode)?;
    let h = homology(&c);
    let consistency = h.euler_char() == c.euler_char();
    if !consistency {
        r.ok = false;
    }
    r.claim(
        format!("K^0 = {k0}, K^1 = {k1}"),
        "degreewise collapse of the cohomology computed via Smith normal form",
    );
    if c.dim() >= 3 {
        r.line("note: dimension 3 uses the assumed filtration collapse");
    }
    r.line(format!("K^0 = {k0}, K^1 = {k1}"));
    r.line(format!("K_0 = {kh0}, K_1 = {kh1}"));
    r.json = json!({
        "k_theory": { "k0": group_json(&k0), "k1": group_json(&k1) },
        "k_homology": { "k0": group_json(&kh0), "k1": group_json(&kh1) },
        "mode": match mode { KMode::Strict => "strict", KMode::AssumeCollapse => "assume-collapse" },
    });
    Ok(r)
}

/// `euler-comb`: the equivariant Euler decomposition, from an explicit
/// action or from orbit data, plus the Euler-Poincaré element when all
/// stabiliser orders are finite.
pub fn run_euler_comb(
    complex_text: Option<&str>,
    action_text: Option<&str>,
    orbits_text: Option<&str>,
) -> Result<Report> {
    match (complex_text, action_text, orbits_text) {
        (Some(ct), Some(at), None) => {
            let (c, _) = io::parse_complex(ct)?;
            let action_json: io::ActionJson = serde_json::from_str(at)?;
            let a = io::action_from_json(&action_json, &c)?;
            let mut r = Report::new("euler-comb").digest(&[ct, at]);
            r.op("validate_action");
            let repaired = repair_action(&c, &a)?;
            if repaired.subdivisions > 0 {
                r.op(format!(
                    "barycentric_subdivision x{} (stabiliser triviality repair)",
                    repaired.subdivisions
                ));
                r.line(format!(
                    "action repaired by {} barycentric subdivision(s)",
                    repaired.subdivisions
                ));
            }
            r.op("equivariant_euler_decomposition");
            let d = explicit_euler_decomposition(&repaired.complex, &repaired.action)?;
            let orbit_data = to_orbit_data(&repaired.complex, &repaired.action)?;
            let orbit_total: usize = {
                use crate::action::orbits_and_stabilisers;
                let orbits = orbits_and_stabilisers(&repaired.complex, &repaired.action)?;
                let sizes_ok = orbits
                    .iter()
                    .all(|o| repaired.action.group.order() % o.orbit.len() == 0);
                let total: usize = orbits.iter().map(|o| o.orbit.len()).sum();
                if !sizes_ok || total != repaired.complex.simplex_count() {
                    r.ok = false;
                }
                total
            };
            r.claim(
                format!("Eul = {d}"),
                "orbit sizes divide the group order and orbits partition the simplex set",
            );
            r.line(format!("equivariant Euler decomposition: {d}"));
            let tau = euler_poincare_element(&orbit_data)?;
            r.op("euler_poincare_element");
            r.line(format!("Euler-Poincaré element: {tau}"));
            r.json = json!({
                "decomposition": decomposition_json(&d),
                "euler_poincare": tau_json(&tau),
                "orbit_count": orbit_data.orbits.len(),
                "simplices_covered": orbit_total,
                "subdivisions_applied": repaired.subdivisions,
            });
            Ok(r)
        }
        (None, None, Some(ot)) => {
            let data = io::parse_orbit_data(ot)?;
            let mut r = Report::new("euler-comb").digest(&[ot]);
            r.op("equivariant_euler_decomposition (orbit mode)");
            let d = orbit_euler_decomposition(&data)?;
            r.claim(
                format!("Eul = {d}"),
                "orbit data validated (every stabiliser label resolved)",
            );
            r.line(format!("equivariant Euler decomposition: {d}"));
            let all_finite = data
                .stabilizers
                .values()
                .all(|o| matches!(o, StabOrder::Finite(_)));
            let tau = if all_finite {
                let tau = euler_poincare_element(&data)?;
                r.op("euler_poincare_element");
                r.line(format!("Euler-Poincaré element: {tau}"));
                Some(tau)
            } else {
                r.line("Euler-Poincaré element skipped: symbolic infinite stabiliser");
                None
            };
            r.json = json!({
                "decomposition": decomposition_json(&d),
                "euler_poincare": tau.map(|t| tau_json(&t)),
            });
            Ok(r)
        }
        _ => Err(Error::MalformedInput(
            "euler-comb needs either --complex with --action, or --orbits".into(),
        )),
    }
}

fn extension_json(e: &ExtensionOutcome) -> Value {
    match e {
        ExtensionOutcome::Resolved(g) => json!({ "resolved": group_json(g) }),
        ExtensionOutcome::Unresolved { sub, quot } => json!({
            "unresolved": { "sub": group_json(sub), "quot": group_json(quot) }
        }),
    }
}

fn unit_torsion_json(u: &UnitTorsion) -> Value {
    match u {
        UnitTorsion::Finite(n) => json!(n),
        UnitTorsion::Infinite => json!("infinite"),
    }
}

fn gysin_json(g: &GysinResult) -> Value {
    json!({
        "case_tag": g.case_tag.to_string(),
        "branch": crate::gysin::split_case_report(g),
        "chi": g.chi,
        "compact": g.compact,
        "split_override": g.split_override,
        "k0": extension_json(&g.k0),
        "k1": extension_json(&g.k1),
        "unit_torsion": unit_torsion_json(&g.unit_torsion),
        "k_group_algebra": {
            "k0": group_json(&g.k_group_algebra.0),
            "k1": group_json(&g.k_group_algebra.1),
        },
        "k_quotient": {
            "k0": group_json(&g.k_quotient.0),
            "k1": group_json(&g.k_quotient.1),
        },
        "certificate": certificate_json(&g.certificate),
        "sketch": g.sketch,
    })
}

/// `gysin`: boundary K-theory from a quotient complex.
pub fn run_gysin(
    quotient_text: &str,
    compact: bool,
    fixed_boundary_point: bool,
    mode: KMode,
) -> Result<Report> {
    let (c, _) = io::parse_complex(quotient_text)?;
    let mut r = Report::new("gysin").digest(&[quotient_text]);
    r.op("euler_char");
    r.op("k_groups");
    r.op("k_homology");
    r.op("gysin_boundary");
    let opts = GysinOptions { compact, fixed_boundary_point, mode };
    let g = gysin_boundary(&c, &opts)?;
    if !g.certificate.passed() {
        r.ok = false;
    }
    r.claim(
        format!("K0(boundary) = {}", g.k0),
        "exact-sequence certificate (image = kernel at every node)",
    );
    r.claim(
        format!("K1(boundary) = {}", g.k1),
        "exact-sequence certificate (image = kernel at every node)",
    );
    r.claim(
        format!("unit torsion = {}", g.unit_torsion),
        "order of the unit class recomputed in the presented extension",
    );
    r.line(format!("branch: {}", g.case_tag));
    for s in &g.sketch {
        r.line(format!("  {s}"));
    }
    r.line(format!("K0(C(∂X)⋊G) = {}", g.k0));
    r.line(format!("K1(C(∂X)⋊G) = {}", g.k1));
    r.line(format!("unit torsion: {}", g.unit_torsion));
    r.line("certificate:");
    for check in &g.certificate.checks {
        r.line(format!(
            "  [{}] {}",
            if check.passed { "pass" } else { "FAIL" },
            check.name
        ));
    }
    r.json = gysin_json(&g);
    Ok(r)
}

/// `free-product`: the `Z/m * Z/n` boundary calculator.
pub fn run_free_product(m: u64, n: u64) -> Result<Report> {
    let mut r = Report::new("free-product").digest(&[&format!("{m} {n}")]);
    r.op("free_product_orbits");
    r.op("equivariant_euler_decomposition (orbit mode)");
    r.op("free_product_two_cyclic");
    let fp = free_product_two_cyclic(m, n)?;
    if !fp.certificate.passed() {
        r.ok = false;
    }
    r.claim(
        format!("K^top_0 = {}", fp.ktop0),
        "presented quotient by the primitive regular-character relation",
    );
    r.claim(
        format!("boundary K0 = {}, K1 = {}", fp.boundary_k0, fp.boundary_k1),
        "six-term collapse certificate (image = kernel at every node)",
    );
    r.line(format!("group: Z/{m} * Z/{n}"));
    r.line(format!("equivariant Euler decomposition: {}", fp.decomposition));
    r.line(format!("K^top_0 = {}, K^top_1 = {}", fp.ktop0, fp.ktop1));
    r.line(format!("K0(proper) = {}, K1(proper) = {}", fp.k0_proper, fp.k1_proper));
    r.line("Euler matrix (columns = images of the kernel basis):");
    for row in io::matrix_to_json(&fp.eul_matrix) {
        r.line(format!("  [{}]", row.join(", ")));
    }
    r.line(format!("|det| = {}", fp.abs_det));
    r.line(format!(
        "boundary K0 = coker = {}, boundary K1 = ker = {}",
        fp.boundary_k0, fp.boundary_k1
    ));
    for d in &fp.derivation {
        r.line(format!("  note: {d}"));
    }
    if fp.model_dependent {
        r.line("model-dependent: result depends on the committed basis identifications");
    }
    r.line("certificate:");
    for check in &fp.certificate.checks {
        r.line(format!(
            "  [{}] {}",
            if check.passed { "pass" } else { "FAIL" },
            check.name
        ));
    }
    if fp.boundary_k0.is_trivial() && fp.boundary_k1.is_trivial() {
        r.line("boundary K-theory vanishes");
    }
    r.json = json!({
        "m": m,
        "n": n,
        "ktop0": group_json(&fp.ktop0),
        "ktop1": group_json(&fp.ktop1),
        "k0_proper": group_json(&fp.k0_proper),
        "k1_proper": group_json(&fp.k1_proper),
        "eul_matrix": io::matrix_to_json(&fp.eul_matrix),
        "abs_det": fp.abs_det.to_string(),
        "boundary_k0": group_json(&fp.boundary_k0),
        "boundary_k1": group_json(&fp.boundary_k1),
        "euler_decomposition": decomposition_json(&fp.decomposition),
        "model_dependent": fp.model_dependent,
        "derivation": fp.derivation,
        "certificate": certificate_json(&fp.certificate),
    });
    Ok(r)
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let parse_int = |s: &str| -> Result<num_bigint::BigInt> {
        s.trim().parse().map_err(|_| {
            Error::MalformedInput(format!("{s:?} is not an integer"))
        })
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d == num_bigint::BigInt::from(0) {
                return Err(Error::MalformedInput("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(num)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

fn suite_json(report: &DualSuiteReport) -> Value {
    json!({
        "n": report.n,
        "grid": report.grid.to_string(),
        "rows": report.rows.iter().map(|row| json!({
            "name": row.name,
            "passed": row.passed,
            "samples": row.samples,
            "counterexample": row.counterexample,
        })).collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
    })
}

/// `verify-dual`: run the dual-geometry suite at one ambient dimension.
pub fn run_verify_dual(
    n: usize,
    l: Option<&str>,
    lambda: Option<&str>,
    complex_text: Option<&str>,
    grid: GridName,
) -> Result<Report> {
    let defaults = DualParams::default_for(n);
    let l = match l {
        Some(text) => parse_rational(text)?,
        None => defaults.l,
    };
    let lambda = match lambda {
        Some(text) => parse_rational(text)?,
        None => defaults.lambda,
    };
    let params = DualParams::new(n, l, lambda)?;

    let mut inputs = vec![format!("n={n} L={} lambda={} grid={grid}", params.l, params.lambda)];
    let mut opts = SuiteOptions::with_corpus(params, grid);
    if let Some(ct) = complex_text {
        inputs.push(ct.to_string());
        let (c, colouring) = io::parse_complex(ct)?;
        if let Some(nu) = colouring {
            // a supplied colouring must at least be valid; the suite itself
            // works on the subdivision's canonical colouring
            if let crate::complex::ColouringCheck::Violation { simplex } =
                crate::complex::validate_colouring(&c, &nu)?
            {
                return Err(Error::Validation(format!(
                    "supplied colouring is not injective on simplex {simplex}"
                )));
            }
        }
        opts.complexes.push(("input".into(), c));
    }
    let input_refs: Vec<&str> = inputs.iter().map(|s| s.as_str()).collect();

    let mut r = Report::new("verify-dual").digest(&input_refs);
    r.op("build_grid");
    r.op("verify_dual");
    let suite = verify_dual(&opts)?;
    if !suite.all_passed() {
        r.ok = false;
    }
    r.claim(
        format!(
            "{}/{} rows verified with zero counterexamples",
            suite.rows.iter().filter(|row| row.passed).count(),
            suite.rows.len()
        ),
        "exact rational evaluation on the deterministic grids",
    );
    for line in suite.to_string().lines() {
        r.line(line.to_string());
    }
    r.json = suite_json(&suite);
    Ok(r)
}

/// `make`: emit the JSON form of a builder family.
pub fn run_make(family: &str, params: &[String]) -> Result<Report> {
    let mut r = Report::new("make").digest(&[&format!("{family} {params:?}")]);
    r.op(format!("make {family}"));
    let made = builders::make(family, params)?;
    r.json = match &made {
        MadeObject::Complex(c) => {
            r.line(format!(
                "{family}: {} simplices, dim {}, chi = {}",
                c.simplex_count(),
                c.dim(),
                c.euler_char()
            ));
            serde_json::to_value(io::complex_to_json(c, None))?
        }
        MadeObject::Orbits(d) => {
            r.line(format!("{family}: {} orbits", d.orbits.len()));
            serde_json::to_value(d)?
        }
        MadeObject::ComplexWithAction(c, a) => {
            r.line(format!(
                "{family}: {} simplices with a group of order {}",
                c.simplex_count(),
                a.group.order()
            ));
            json!({
                "complex": serde_json::to_value(io::complex_to_json(c, None))?,
                "action": serde_json::to_value(io::action_to_json(c, a))?,
            })
        }
    };
    let check = "builder output passes its module validators";
    match &made {
        MadeObject::Complex(c) => r.claim(format!("chi = {}", c.euler_char()), check),
        MadeObject::Orbits(d) => r.claim(format!("{} orbits", d.orbits.len()), check),
        MadeObject::ComplexWithAction(..) => r.claim("complex with action".to_string(), check),
    }
    Ok(r)
}

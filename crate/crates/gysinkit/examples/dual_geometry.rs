//! The exact-rational dual geometry layer: regions, the retraction and
//! collapse maps, the delta witness, spectral supports, and the full
//! verification suite on a small complex.
//!
//! ```bash
//! cargo run -p gysinkit --example dual_geometry
//! ```

use gysinkit::builders;
use gysinkit::dual::{
    collapse, delta_witness, in_region, radial_expand, retraction_q, verify_dual, DualParams,
    EPoint, FaceSet, GridName, Region, SuiteOptions,
};

fn rat(n: i64, d: i64) -> num_rational::BigRational {
    num_rational::BigRational::new(n.into(), d.into())
}

fn main() -> gysinkit::Result<()> {
    let n = 2;
    let params = DualParams::default_for(n);
    println!(
        "parameters for n = {n}: L = {}, lambda = {}, delta = {}",
        params.l, params.lambda, params.delta
    );

    // the retraction q clips negatives and renormalises
    let t = EPoint::new(vec![rat(3, 2), rat(-1, 4), rat(-1, 4)])?;
    println!("q({t}) = {}", retraction_q(&t));

    // the collapse caps coordinates at L
    let s = EPoint::new(vec![rat(7, 10), rat(2, 10), rat(1, 10)])?;
    println!("collapse({s}) at L = 1/4: {}", collapse(&s, &rat(1, 4))?);

    // radial expansion and the region dictionary
    let f = FaceSet::from_slice(&[0, 2], n)?;
    let r = radial_expand(&s, &params.lambda)?;
    println!(
        "s in CR_{f}: {}, r_lambda(s) in R_{f}: {}",
        in_region(&s, &f, &Region::CR(params.l.clone())),
        in_region(&r, &f, &Region::R),
    );
    println!(
        "delta witness for L = 1/5, lambda = 3, n = 1: {}",
        delta_witness(&rat(1, 5), &rat(3, 1), 1)?
    );

    // the whole suite on the triangle corpus
    let opts = SuiteOptions {
        params,
        grid: GridName::Coarse,
        complexes: vec![("triangle".into(), builders::filled_triangle())],
    };
    let report = verify_dual(&opts)?;
    print!("\n{report}");
    println!("all passed: {}", report.all_passed());
    Ok(())
}

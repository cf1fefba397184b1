//! Boundary crossed-product K-theory through the Gysin solver: free groups,
//! surface groups, the degenerate circle, and the split-case override.
//!
//! ```bash
//! cargo run -p gysinkit --example gysin_boundary
//! ```

use gysinkit::builders;
use gysinkit::gysin::{gysin_boundary, gysin_torsion_free, split_case_report, GysinOptions};
use gysinkit::ktheory::KMode;

fn main() -> gysinkit::Result<()> {
    // free groups F_n: quotient is a wedge of n circles
    for n in 2..=4 {
        let wedge = builders::wedge_of_circles(n)?;
        let r = gysin_torsion_free(&wedge, true)?;
        println!(
            "F_{n}: K0 = {}, K1 = {}, unit torsion {} (certificate {})",
            r.k0,
            r.k1,
            r.unit_torsion,
            if r.certificate.passed() { "ok" } else { "FAILED" }
        );
    }

    // surface groups
    for g in 2..=3 {
        let s = builders::surface(g)?;
        let r = gysin_torsion_free(&s, true)?;
        println!(
            "genus {g}: K0 = {}, K1 = {}, unit torsion {}",
            r.k0, r.k1, r.unit_torsion
        );
    }

    // F_1 = Z: chi = 0 forces the split case, the boundary is two circles'
    // worth of K-theory
    let circle = builders::circle();
    let r = gysin_torsion_free(&circle, true)?;
    println!("\nZ acting on the line: {}", split_case_report(&r));
    println!("  K0 = {}, K1 = {}, unit torsion {}", r.k0, r.k1, r.unit_torsion);

    // a fixed boundary point kills the connecting map regardless of chi
    let wedge = builders::wedge_of_circles(3)?;
    let r = gysin_boundary(
        &wedge,
        &GysinOptions { compact: true, fixed_boundary_point: true, mode: KMode::Strict },
    )?;
    println!("\nwedge of 3 with a boundary fixed point: {}", split_case_report(&r));
    println!("  K0 = {}, K1 = {}, unit torsion {}", r.k0, r.k1, r.unit_torsion);
    Ok(())
}

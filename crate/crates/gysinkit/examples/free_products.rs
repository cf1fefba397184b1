//! The free-product calculator: boundary K-theory of Z/m * Z/n acting on
//! its tree, with the Euler class as an explicit integer matrix.
//!
//! ```bash
//! cargo run -p gysinkit --example free_products
//! ```

use gysinkit::gysin::free_product_two_cyclic;

fn main() -> gysinkit::Result<()> {
    for (m, n) in [(2u64, 3u64), (2, 2), (3, 3), (2, 5)] {
        let r = free_product_two_cyclic(m, n)?;
        println!("Z/{m} * Z/{n}:");
        println!("  Eul decomposition: {}", r.decomposition);
        println!("  K^top_0 = {}, K0(proper) = {}", r.ktop0, r.k0_proper);
        println!("  Euler matrix (|det| = {}):", r.abs_det);
        for i in 0..r.eul_matrix.rows() {
            let row: Vec<String> = (0..r.eul_matrix.cols())
                .map(|j| r.eul_matrix.get(i, j).to_string())
                .collect();
            println!("    [{}]", row.join(", "));
        }
        println!(
            "  boundary K0 = {}, K1 = {}{}",
            r.boundary_k0,
            r.boundary_k1,
            if r.model_dependent { "  (model-dependent)" } else { "" }
        );
        println!(
            "  certificate: {}",
            if r.certificate.passed() { "all checks pass" } else { "FAILED" }
        );
        println!();
    }
    Ok(())
}

//! Integral (co)homology via Smith normal form and the K-groups of the
//! standard corpus.
//!
//! ```bash
//! cargo run -p gysinkit --example homology_ktheory
//! ```

use gysinkit::builders;
use gysinkit::ktheory::{cohomology, homology, k_groups, k_homology, KMode};

fn main() -> gysinkit::Result<()> {
    for (name, c) in builders::corpus() {
        let h = homology(&c);
        let hc = cohomology(&c);
        println!("{name}: chi = {}", c.euler_char());
        println!("  H_*  = {h}");
        println!("  H^* = {hc}");
        let mode = if c.dim() >= 3 { KMode::AssumeCollapse } else { KMode::Strict };
        let (k0, k1) = k_groups(&c, mode)?;
        let (kh0, kh1) = k_homology(&c, mode)?;
        println!("  K^0 = {k0}, K^1 = {k1}");
        println!("  K_0 = {kh0}, K_1 = {kh1}");
    }

    // the projective plane carries the torsion: H_1 = Z/2 shows up in K^0
    // through H^2 by universal coefficients
    let p = builders::projective_plane();
    let (k0, _) = k_groups(&p, KMode::Strict)?;
    println!("\nprojective plane: K^0 = {k0} (the Z/2 is H^2)");
    Ok(())
}

//! Equivariant combinatorial Euler characteristics: the decomposition into
//! restriction classes, and the Euler-Poincaré element in the group
//! algebra.
//!
//! ```bash
//! cargo run -p gysinkit --example equivariant_euler
//! ```

use gysinkit::action::{
    euler_poincare_element, explicit_euler_decomposition, orbit_euler_decomposition,
    tau_idempotent_check, to_orbit_data, FiniteGroup,
};
use gysinkit::builders;

fn main() -> gysinkit::Result<()> {
    // the tree of Z/2 * Z/3: two vertex orbits with cyclic stabilisers and
    // one free edge orbit
    let tree = builders::psl2z_tree_orbits();
    let decomposition = orbit_euler_decomposition(&tree)?;
    println!("Z/2 * Z/3 tree:");
    println!("  Eul = {decomposition}");
    println!("  Euler-Poincaré element: {}", euler_poincare_element(&tree)?);

    // the reflection circle has two fixed components, one per fixed vertex,
    // and the decomposition does not vanish
    let (circle, reflection) = builders::reflection_circle();
    let d = explicit_euler_decomposition(&circle, &reflection)?;
    println!("\nreflection circle:");
    println!("  Eul = {d} (nonzero)");
    let tau = euler_poincare_element(&to_orbit_data(&circle, &reflection)?)?;
    println!("  Euler-Poincaré element: {tau}");

    // the projections behind the tau terms are idempotents in the rational
    // group algebra
    let z6 = FiniteGroup::cyclic(6);
    for h in [vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]] {
        println!(
            "  tau idempotent for a subgroup of order {} in Z/6: {}",
            h.len(),
            tau_idempotent_check(&z6, &h)?
        );
    }
    Ok(())
}

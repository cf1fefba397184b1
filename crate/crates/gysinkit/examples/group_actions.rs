//! Group actions on complexes: validation, the automatic subdivision
//! repair, orbit/stabiliser tables and fixed-point subcomplexes.
//!
//! ```bash
//! cargo run -p gysinkit --example group_actions
//! ```

use std::collections::BTreeMap;

use gysinkit::action::{
    fixed_subcomplex, orbits_and_stabilisers, repair_action, validate_action, ExplicitAction,
    FiniteGroup,
};
use gysinkit::builders;
use gysinkit::complex::SimplicialComplex;

fn main() -> gysinkit::Result<()> {
    // swapping the endpoints of an edge fixes the edge setwise but not
    // pointwise, so the validator asks for a subdivision
    let edge = SimplicialComplex::from_maximal(&[vec![0, 1]])?;
    let swap = ExplicitAction::new(
        FiniteGroup::cyclic(2),
        vec![
            BTreeMap::from([(0, 0), (1, 1)]),
            BTreeMap::from([(0, 1), (1, 0)]),
        ],
    )?;
    println!("edge swap: {:?}", validate_action(&edge, &swap));
    let repaired = repair_action(&edge, &swap)?;
    println!(
        "repaired with {} subdivision(s): {:?}",
        repaired.subdivisions,
        validate_action(&repaired.complex, &repaired.action)
    );

    // the reflection circle: E and W are fixed, N and S swap
    let (circle, reflection) = builders::reflection_circle();
    println!("\nreflection circle: {:?}", validate_action(&circle, &reflection));
    for orbit in orbits_and_stabilisers(&circle, &reflection)? {
        println!(
            "  orbit of {}: size {}, stabiliser order {}",
            orbit.representative,
            orbit.orbit.len(),
            orbit.stabiliser.len()
        );
    }

    let fixed = fixed_subcomplex(&circle, &reflection, &[0, 1])?;
    println!(
        "fixed by the reflection: {} simplices in {} components ({})",
        fixed.simplices.len(),
        fixed.components.len(),
        fixed
            .components
            .iter()
            .map(|c| c.label.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}

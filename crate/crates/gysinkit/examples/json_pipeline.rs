//! The JSON wire formats and the report layer, exercised end to end in
//! process (the same path the CLI drives).
//!
//! ```bash
//! cargo run -p gysinkit --example json_pipeline
//! ```

use gysinkit::builders;
use gysinkit::io;
use gysinkit::ktheory::KMode;
use gysinkit::report;

fn main() -> gysinkit::Result<()> {
    // serialise a wedge of 3 circles the way `make wedge 3` does
    let wedge = builders::wedge_of_circles(3)?;
    let complex_json = serde_json::to_string_pretty(&io::complex_to_json(&wedge, None))?;
    println!("complex JSON:\n{complex_json}\n");

    // feed it to the gysin report, as `gysin --quotient ... --compact` would
    let gysin = report::run_gysin(&complex_json, true, false, KMode::Strict)?;
    print!("{}", gysin.render_human());

    // machine output: byte-stable pretty JSON with sorted keys
    let machine = gysin.render_json();
    let value: serde_json::Value = serde_json::from_str(&machine)?;
    println!(
        "\nmachine K0: {}, unit torsion: {}",
        value["result"]["k0"]["resolved"], value["result"]["unit_torsion"]
    );

    // orbit data round trip
    let orbits = builders::psl2z_tree_orbits();
    let orbit_json = serde_json::to_string_pretty(&orbits)?;
    let euler = report::run_euler_comb(None, None, Some(&orbit_json))?;
    print!("\n{}", euler.render_human());
    Ok(())
}

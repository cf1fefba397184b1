//! Building complexes: face closure, Euler characteristics, barycentric
//! subdivision and the canonical colouring.
//!
//! ```bash
//! cargo run -p gysinkit --example build_complexes
//! ```

use gysinkit::complex::{
    barycentric_subdivision, validate_colouring, BarycentricPoint, ColouringCheck, Simplex,
    SimplicialComplex,
};

fn main() -> gysinkit::Result<()> {
    // a filled triangle with a dangling edge, closed under faces
    let c = SimplicialComplex::from_maximal(&[vec![0, 1, 2], vec![2, 3]])?;
    println!("complex with {} simplices, dim {}", c.simplex_count(), c.dim());
    for k in 0..=c.dim() {
        println!(
            "  {k}-simplices: {}",
            c.simplices_of_dim(k)
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    println!("chi = {}", c.euler_char());

    // barycentric subdivision: vertices are the old simplices, simplices
    // are the strictly increasing face chains, colours record dimension
    let sub = barycentric_subdivision(&c);
    println!(
        "\nsubdivision: {} simplices, chi = {} (unchanged)",
        sub.complex.simplex_count(),
        sub.complex.euler_char()
    );
    match validate_colouring(&sub.complex, &sub.colouring)? {
        ColouringCheck::Ok => println!("canonical colouring validates"),
        ColouringCheck::Violation { simplex } => println!("violation at {simplex}"),
    }
    let triangle_vertex = sub
        .vertex_for(&Simplex::new(vec![0, 1, 2])?)
        .expect("the triangle is a subdivision vertex");
    println!(
        "the old triangle became vertex {triangle_vertex} with colour {}",
        sub.colouring.colour(triangle_vertex).unwrap()
    );

    // the colour map sends the barycentre of a simplex to the barycentre of
    // its colour face
    let edge = Simplex::new(vec![0, 3])?; // an edge of the subdivision
    let mid = BarycentricPoint::barycentre(&edge);
    let image = gysinkit::complex::colour_map_point(&mid, &sub.colouring, sub.complex.dim())?;
    println!(
        "\ncolour image of the barycentre of {edge}: ({})",
        image.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

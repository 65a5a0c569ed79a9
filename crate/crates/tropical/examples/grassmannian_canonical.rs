//! Canonical forms of generated subspaces on the simplex.

use tropical::{
    config_to_grassmann, grassmann_canonical, subspace_eq, SimplexConfiguration, TropVector,
    GEOM_EPSILON,
};

fn v(c: &[f64]) -> TropVector {
    TropVector::new(c.to_vec()).unwrap()
}

fn main() {
    let gens = [v(&[1.0, 0.0, 1.0]), v(&[0.0, 1.0, 1.0])];
    let g = grassmann_canonical(&gens, true, GEOM_EPSILON).unwrap();
    println!("canonical configuration:");
    for p in g.points() {
        println!("  {:?}", p.coords());
    }

    // rescaling and reordering the generators changes nothing
    let other = [v(&[0.0, 3.0, 3.0]), v(&[2.0, 0.0, 2.0])];
    let h = grassmann_canonical(&other, true, GEOM_EPSILON).unwrap();
    println!("invariant under rescale + reorder: {}", subspace_eq(&g, &h, GEOM_EPSILON).unwrap());

    // round trip through the subspace reading
    let cfg = SimplexConfiguration::new(g.points().to_vec(), GEOM_EPSILON).unwrap();
    let subspace = config_to_grassmann(&cfg, true, GEOM_EPSILON).unwrap();
    let back = grassmann_canonical(subspace.generators(), true, GEOM_EPSILON).unwrap();
    println!("round trip is the identity: {}", subspace_eq(&g, &back, GEOM_EPSILON).unwrap());

    // more generators than ambient dimensions: a convex quadrilateral
    let quad = [
        v(&[1.0, 0.0, 0.0]),
        v(&[0.0, 1.0, 0.0]),
        v(&[0.0, 1.0, 1.0]),
        v(&[1.0, 0.0, 1.0]),
    ];
    let q = grassmann_canonical(&quad, true, GEOM_EPSILON).unwrap();
    println!("4 generators in 3 ambient dimensions canonicalize to {} points", q.points().len());

    // the open/closed flag distinguishes interior from closure
    println!(
        "open and closed variants compare equal: {}",
        subspace_eq(&g, &g.interior_map(), GEOM_EPSILON).unwrap()
    );
}

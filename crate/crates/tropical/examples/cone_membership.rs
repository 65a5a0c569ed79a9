//! Span membership: closed cones versus relative interiors, with LP
//! witnesses.

use tropical::{cone_contains, is_independent, relint_contains, TropVector, GEOM_EPSILON};

fn v(c: &[f64]) -> TropVector {
    TropVector::new(c.to_vec()).unwrap()
}

fn main() {
    let gens = vec![v(&[1.0, 0.0, 1.0]), v(&[0.0, 1.0, 1.0])];
    println!("independent? {}", is_independent(&gens, GEOM_EPSILON).unwrap());

    let interior = v(&[0.5, 1.5, 2.0]);
    let r = cone_contains(&gens, &interior, GEOM_EPSILON).unwrap();
    println!(
        "(0.5, 1.5, 2) in the closed span: {} with witness {:?}",
        r.feasible,
        r.witness.unwrap()
    );
    let r = relint_contains(&gens, &interior, GEOM_EPSILON).unwrap();
    println!("... and in the open span: {} (margin {})", r.feasible, r.margin);

    // a generator is on the boundary: closed yes, open no
    let boundary = gens[0].clone();
    println!(
        "generator itself: closed {}, open {}",
        cone_contains(&gens, &boundary, GEOM_EPSILON).unwrap().feasible,
        relint_contains(&gens, &boundary, GEOM_EPSILON).unwrap().feasible
    );

    // and a point off the cone entirely
    let outside = v(&[0.0, 0.0, 1.0]);
    let r = cone_contains(&gens, &outside, GEOM_EPSILON).unwrap();
    println!("(0, 0, 1) in the closed span: {} (witness {:?})", r.feasible, r.witness);
}

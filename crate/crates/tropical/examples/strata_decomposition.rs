//! The 2^n stratification of the nonnegative orthant and the stratum
//! decomposition of a generated subspace.

use tropical::{orthant_decomposition, ConicSubspace, TropVector, GEOM_EPSILON};

fn main() {
    for index in orthant_decomposition(3).unwrap() {
        println!("stratum {} has rank {}", index.bitstring(), index.rank());
    }

    let v = TropVector::new(vec![0.7, 0.0, 0.2]).unwrap();
    println!(
        "(0.7, 0, 0.2) lies in stratum {} (rank {})",
        v.component_index().bitstring(),
        v.component_index().rank()
    );
    println!(
        "its min-plus coordinates: {:?}",
        v.trop_coordinates().iter().map(|l| l.value()).collect::<Vec<_>>()
    );

    let c = ConicSubspace::new(
        vec![
            TropVector::new(vec![1.0, 0.0, 1.0]).unwrap(),
            TropVector::new(vec![0.0, 1.0, 1.0]).unwrap(),
        ],
        true,
        GEOM_EPSILON,
    )
    .unwrap();
    println!("subspace decomposition:");
    for (index, group) in c.subspace_decomposition() {
        println!(
            "  {} -> {:?}",
            index.bitstring(),
            group.iter().map(TropVector::coords).collect::<Vec<_>>()
        );
    }
}

//! The tropical orthogonal matrices: permutation matrices, their group
//! structure, and the actions they induce.

use tropical::matrix::{block_act, perm_act};
use tropical::{enumerate_orthogonal, Permutation, TropMatrix};

fn main() {
    for n in 1..=4 {
        println!("|O({n})| = {}", enumerate_orthogonal(n).unwrap().len());
    }

    let o3 = enumerate_orthogonal(3).unwrap();
    for m in &o3 {
        assert!(m.is_trop_orthogonal());
        assert_eq!(m.trop_inverse().unwrap(), m.transpose());
    }
    println!("every element satisfies inverse = transpose");

    // composition table via the permutation reading
    let sigma = |m: &TropMatrix| m.monomial_decompose().unwrap().sigma;
    let a = &o3[1];
    let b = &o3[2];
    let product = a.odot(b).unwrap();
    println!(
        "row supports compose: {:?} then {:?} gives {:?}",
        (0..3).map(|i| sigma(a).apply(i)).collect::<Vec<_>>(),
        (0..3).map(|i| sigma(b).apply(i)).collect::<Vec<_>>(),
        (0..3).map(|i| sigma(&product).apply(i)).collect::<Vec<_>>(),
    );

    // the column action on a rectangular matrix
    let m = TropMatrix::from_rows(vec![vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
    let swap = Permutation::transposition(3, 0, 2);
    let acted = perm_act(&swap, &m).unwrap();
    println!("columns 0 and 2 swapped: {:?}", acted.row_slices().collect::<Vec<_>>());

    // block-diagonal action on an invertible matrix, and stabilization
    let inv = TropMatrix::from_rows(vec![
        vec![0.0, 2.0, 0.0],
        vec![3.0, 0.0, 0.0],
        vec![0.0, 0.0, 5.0],
    ])
    .unwrap();
    let p = Permutation::transposition(2, 0, 1).matrix();
    let q = TropMatrix::identity(1);
    let moved = block_act(&p, &q, &inv).unwrap();
    assert!(moved.trop_inverse().is_ok());
    println!("diag(P, I) ⊙ A stays invertible");

    let s = p.stabilize();
    assert!(s.is_trop_orthogonal());
    println!("stabilized swap is orthogonal in one dimension up: {:?}", s.row_slices().collect::<Vec<_>>());
}

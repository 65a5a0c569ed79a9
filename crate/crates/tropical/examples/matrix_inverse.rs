//! Monomial matrices and the tropical inverse.

use tropical::TropMatrix;

fn show(label: &str, m: &TropMatrix) {
    println!("{label}:");
    for row in m.row_slices() {
        println!("  {row:?}");
    }
}

fn main() {
    let a = TropMatrix::from_rows(vec![vec![0.0, 2.0], vec![3.0, 0.0]]).unwrap();
    show("A", &a);

    let d = a.monomial_decompose().unwrap();
    println!("permutation images: {:?}", (0..2).map(|i| d.sigma.apply(i)).collect::<Vec<_>>());
    println!("diagonal: {:?}", d.diag);

    let b = a.trop_inverse().unwrap();
    show("A^{-1}", &b);
    assert_eq!(a.odot(&b).unwrap(), TropMatrix::identity(2));
    assert_eq!(b.odot(&a).unwrap(), TropMatrix::identity(2));
    println!("A ⊙ A^{{-1}} = A^{{-1}} ⊙ A = I");

    // a matrix with two nonzeros in a row has no inverse
    let sum = TropMatrix::from_rows(vec![vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    println!("[[1,1],[0,1]] invertible? {}", sum.trop_inverse().is_ok());

    // idempotents and the diagonal conditions
    let ones = TropMatrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
    println!(
        "all-ones idempotent? {} (conditions: {})",
        ones.is_idempotent(),
        ones.idempotent_necessary_conditions()
    );
    let grow = TropMatrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
    println!(
        "diag(2,1) idempotent? {} (conditions: {})",
        grow.is_idempotent(),
        grow.idempotent_necessary_conditions()
    );
}

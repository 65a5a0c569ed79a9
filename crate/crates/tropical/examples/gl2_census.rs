//! Exhaustive census of invertible 2x2 tropical matrices with entries in
//! the dyadic grid {0, 1/2, 1, 2}: brute-force right-inverse search over
//! the reciprocal-closed grid versus the monomial classification.

use tropical::TropMatrix;

fn main() {
    let entry_grid = [0.0, 0.5, 1.0, 2.0];
    let inverse_grid = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0];
    let identity = TropMatrix::identity(2);

    let mut invertible = 0usize;
    for a00 in entry_grid {
        for a01 in entry_grid {
            for a10 in entry_grid {
                for a11 in entry_grid {
                    let a = TropMatrix::new(2, 2, vec![a00, a01, a10, a11]).unwrap();
                    let mut has_right_inverse = false;
                    'search: for b00 in inverse_grid {
                        for b01 in inverse_grid {
                            for b10 in inverse_grid {
                                for b11 in inverse_grid {
                                    let b =
                                        TropMatrix::new(2, 2, vec![b00, b01, b10, b11]).unwrap();
                                    if a.odot(&b).unwrap() == identity {
                                        has_right_inverse = true;
                                        break 'search;
                                    }
                                }
                            }
                        }
                    }
                    let monomial = a.monomial_decompose().is_ok();
                    assert_eq!(
                        has_right_inverse, monomial,
                        "classification mismatch at {a:?}"
                    );
                    if monomial {
                        invertible += 1;
                        let b = a.trop_inverse().unwrap();
                        assert_eq!(a.odot(&b).unwrap(), identity);
                        assert_eq!(b.odot(&a).unwrap(), identity);
                    }
                }
            }
        }
    }
    println!("invertible 2x2 grid matrices: {invertible} of 256");
}

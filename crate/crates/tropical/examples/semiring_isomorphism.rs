//! The two scalar carriers and the log/exp isomorphism between them.

use tropical::scalar::{max_tau, min_tau};
use tropical::{MaxTimes, MinPlus};

fn main() {
    let a = MaxTimes::new(0.5).unwrap();
    let b = MaxTimes::new(2.0).unwrap();
    println!("max-times: {} ⊕ {} = {}", a.value(), b.value(), a.oplus(b).value());
    println!("max-times: {} ⊙ {} = {}", a.value(), b.value(), a.odot(b).value());

    let x = a.to_minplus();
    let y = b.to_minplus();
    println!("images under -ln: {} and {}", x.value(), y.value());
    println!("min-plus:  {} ⊕ {} = {}", x.value(), y.value(), x.oplus(y).value());
    println!("min-plus:  {} ⊙ {} = {}", x.value(), y.value(), x.odot(y).value());

    // the homomorphism identities, spelled out on this pair
    assert_eq!(a.oplus(b).to_minplus().value(), x.oplus(y).value());
    assert!((a.odot(b).to_minplus().value() - x.odot(y).value()).abs() < 1e-15);
    println!("⊕ and ⊙ commute with the isomorphism");

    // zero and infinity trade places
    assert!(MaxTimes::ZERO.to_minplus().is_infinite());
    assert_eq!(MinPlus::INFINITY.to_maxtimes(), MaxTimes::ZERO);
    println!("0 ↦ +∞ and back");

    // min and max from the absolute value
    println!("min_tau(3, 5) = {}", min_tau(3.0, 5.0, f64::abs));
    println!("max_tau(3, 5) = {}", max_tau(3.0, 5.0, f64::abs));
}

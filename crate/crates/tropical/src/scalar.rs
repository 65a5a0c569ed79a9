//! Scalar carriers of the tropical line and the generic min/max
//! constructions.
//!
//! [`MaxTimes`] is the nonnegative real half-line with `⊕ = max` and
//! `⊙ = ·`; [`MinPlus`] is the extended real line `R ∪ {+∞}` with
//! `⊕ = min` and `⊙ = +`.  The two are exchanged by the decreasing
//! semiring isomorphisms [`MaxTimes::to_minplus`] (`x ↦ -ln x`, `0 ↦ +∞`)
//! and [`MinPlus::to_maxtimes`] (`t ↦ e^{-t}`, `+∞ ↦ 0`).
//!
//! The module also carries two generic recipes for building a min (or max)
//! out of auxiliary structure: [`min_by_norm`] compares elements through a
//! norm, and [`min_tau`] / [`max_tau`] evaluate the projection formula
//! `(a + b ∓ τ(a − b)) / 2`.

use crate::error::TropError;

/// Relative tolerance for comparing derived (computed) quantities.
pub const REL_TOL: f64 = 1e-12;
/// Absolute floor below which the relative comparison degenerates.
pub const ABS_FLOOR: f64 = 1e-15;
/// Default epsilon for geometric predicates (LP pivots, proportionality,
/// configuration distinctness).
pub const GEOM_EPSILON: f64 = 1e-9;

/// Approximate equality at [`REL_TOL`] with the [`ABS_FLOOR`] floor.
pub fn rel_eq(a: f64, b: f64) -> bool {
    rel_eq_tol(a, b, REL_TOL)
}

/// Approximate equality at a caller-chosen relative tolerance.
pub fn rel_eq_tol(a: f64, b: f64, rel: f64) -> bool {
    if a == b {
        // also covers the two-infinities case
        return true;
    }
    (a - b).abs() <= ABS_FLOOR.max(rel * a.abs().max(b.abs()))
}

/// Element of the max-times carrier `(R_>=0, max, ·)`.
///
/// `0` is the ⊕-identity and the ⊙-absorbing element; `1` is the
/// ⊙-identity.  Values are finite and nonnegative by construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MaxTimes(f64);

impl MaxTimes {
    pub const ZERO: MaxTimes = MaxTimes(0.0);
    pub const ONE: MaxTimes = MaxTimes(1.0);

    pub fn new(value: f64) -> Result<Self, TropError> {
        if value.is_finite() && value >= 0.0 {
            Ok(MaxTimes(value))
        } else {
            Err(TropError::InvalidValue(format!(
                "max-times scalar must be finite and nonnegative, got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Tropical addition: `max(a, b)`.
    pub fn oplus(self, rhs: Self) -> Self {
        MaxTimes(self.0.max(rhs.0))
    }

    /// Tropical multiplication: the ordinary product.
    pub fn odot(self, rhs: Self) -> Self {
        MaxTimes(self.0 * rhs.0)
    }

    /// The isomorphism onto the min-plus carrier: `-ln x`, with `0 ↦ +∞`.
    pub fn to_minplus(self) -> MinPlus {
        if self.0 == 0.0 {
            MinPlus::INFINITY
        } else {
            MinPlus(-self.0.ln())
        }
    }
}

/// Element of the min-plus carrier `(R ∪ {+∞}, min, +)`.
///
/// `+∞` is the ⊕-identity and the ⊙-absorbing element; `0` is the
/// ⊙-identity.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MinPlus(f64);

impl MinPlus {
    pub const INFINITY: MinPlus = MinPlus(f64::INFINITY);
    pub const ZERO: MinPlus = MinPlus(0.0);

    pub fn new(value: f64) -> Result<Self, TropError> {
        if value.is_finite() || value == f64::INFINITY {
            Ok(MinPlus(value))
        } else {
            Err(TropError::InvalidValue(format!(
                "min-plus scalar must be finite or +inf, got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// Tropical addition: `min(a, b)`; `+∞` is neutral.
    pub fn oplus(self, rhs: Self) -> Self {
        MinPlus(self.0.min(rhs.0))
    }

    /// Tropical multiplication: `a + b`; `+∞` absorbs.
    pub fn odot(self, rhs: Self) -> Self {
        MinPlus(self.0 + rhs.0)
    }

    /// The isomorphism onto the max-times carrier: `e^{-t}`, with `+∞ ↦ 0`.
    pub fn to_maxtimes(self) -> MaxTimes {
        if self.is_infinite() {
            MaxTimes::ZERO
        } else {
            MaxTimes((-self.0).exp())
        }
    }
}

/// The norm-based minimum: returns `a` when `norm(a) <= norm(b)`, else `b`.
///
/// Ties between distinct elements are broken toward the left argument,
/// which makes the operation total and deterministic.
pub fn min_by_norm<T, N: Fn(&T) -> f64>(a: T, b: T, norm: N) -> T {
    if norm(&a) <= norm(&b) {
        a
    } else {
        b
    }
}

/// The projection minimum `(a + b - tau(a - b)) / 2`.
///
/// With `tau` the absolute value on the real line this is the binary min.
pub fn min_tau(a: f64, b: f64, tau: impl Fn(f64) -> f64) -> f64 {
    0.5 * (a + b - tau(a - b))
}

/// The dual maximum `(a + b + tau(a - b)) / 2`; with `tau = abs` this is
/// the binary max.
pub fn max_tau(a: f64, b: f64, tau: impl Fn(f64) -> f64) -> f64 {
    0.5 * (a + b + tau(a - b))
}

/// A carrier of real elements together with a self-map `tau`, validated as
/// a projection (`tau ∘ tau = tau`) or an involution (`tau ∘ tau = id`) on
/// the listed elements.
pub struct ProjectionCarrier<F: Fn(f64) -> f64> {
    elements: Vec<f64>,
    tau: F,
}

impl<F: Fn(f64) -> f64> ProjectionCarrier<F> {
    /// Builds a carrier whose `tau` must satisfy `tau(tau(x)) = tau(x)` on
    /// every listed element.
    pub fn projection(elements: Vec<f64>, tau: F) -> Result<Self, TropError> {
        for &x in &elements {
            let t = tau(x);
            if !rel_eq(tau(t), t) {
                return Err(TropError::InvalidValue(format!(
                    "tau is not a projection at {x}"
                )));
            }
        }
        Ok(ProjectionCarrier { elements, tau })
    }

    /// Builds a carrier whose `tau` must satisfy `tau(tau(x)) = x` on every
    /// listed element.
    pub fn involution(elements: Vec<f64>, tau: F) -> Result<Self, TropError> {
        for &x in &elements {
            if !rel_eq((tau)(tau(x)), x) {
                return Err(TropError::InvalidValue(format!(
                    "tau is not an involution at {x}"
                )));
            }
        }
        Ok(ProjectionCarrier { elements, tau })
    }

    pub fn elements(&self) -> &[f64] {
        &self.elements
    }

    pub fn min(&self, a: f64, b: f64) -> f64 {
        min_tau(a, b, &self.tau)
    }

    pub fn max(&self, a: f64, b: f64) -> f64 {
        max_tau(a, b, &self.tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maxtimes_oplus() {
        let a = MaxTimes::new(2.0).unwrap();
        let b = MaxTimes::new(3.0).unwrap();
        assert_eq!(a.oplus(b).value(), 3.0);
        assert_eq!(a.oplus(MaxTimes::ZERO).value(), 2.0);
        let h = MaxTimes::new(0.5).unwrap();
        assert_eq!(h.oplus(h).value(), 0.5);
    }

    #[test]
    fn maxtimes_odot() {
        let a = MaxTimes::new(2.0).unwrap();
        let b = MaxTimes::new(3.0).unwrap();
        assert_eq!(a.odot(b).value(), 6.0);
        assert_eq!(a.odot(MaxTimes::ONE).value(), 2.0);
        assert_eq!(a.odot(MaxTimes::ZERO).value(), 0.0);
    }

    #[test]
    fn minplus_oplus() {
        let one = MinPlus::new(1.0).unwrap();
        assert_eq!(one.oplus(MinPlus::INFINITY).value(), 1.0);
        assert_eq!(MinPlus::INFINITY.oplus(one).value(), 1.0);
        assert_eq!(
            MinPlus::new(2.0).unwrap().oplus(MinPlus::new(3.0).unwrap()).value(),
            2.0
        );
        assert!(MinPlus::INFINITY.oplus(MinPlus::INFINITY).is_infinite());
    }

    #[test]
    fn minplus_odot() {
        let a = MinPlus::new(2.0).unwrap();
        let b = MinPlus::new(3.0).unwrap();
        assert_eq!(a.odot(b).value(), 5.0);
        assert!(a.odot(MinPlus::INFINITY).is_infinite());
        assert_eq!(a.odot(MinPlus::ZERO).value(), 2.0);
    }

    #[test]
    fn isomorphism_anchor_values() {
        assert_eq!(MaxTimes::ONE.to_minplus().value(), 0.0);
        assert!(MaxTimes::ZERO.to_minplus().is_infinite());
        let e2 = MaxTimes::new((-2.0f64).exp()).unwrap();
        assert!(rel_eq(e2.to_minplus().value(), 2.0));

        assert_eq!(MinPlus::ZERO.to_maxtimes().value(), 1.0);
        assert_eq!(MinPlus::INFINITY.to_maxtimes().value(), 0.0);
        let ln2 = MinPlus::new(2.0f64.ln()).unwrap();
        assert!(rel_eq(ln2.to_maxtimes().value(), 0.5));
    }

    #[test]
    fn isomorphism_reverses_order() {
        let a = MaxTimes::new(0.3).unwrap();
        let b = MaxTimes::new(1.7).unwrap();
        assert!(a.value() <= b.value());
        assert!(a.to_minplus().value() >= b.to_minplus().value());
    }

    #[test]
    fn norm_minimum() {
        assert_eq!(min_by_norm(-3.0, 2.0, |x: &f64| x.abs()), 2.0);
        assert_eq!(min_by_norm(7.0, 7.0, |x: &f64| x.abs()), 7.0);
        // tie with distinct elements: left bias
        assert_eq!(min_by_norm(5.0, -5.0, |x: &f64| x.abs()), 5.0);
    }

    #[test]
    fn projection_min_max() {
        assert_eq!(min_tau(3.0, 5.0, f64::abs), 3.0);
        assert_eq!(min_tau(5.0, 3.0, f64::abs), 3.0);
        assert_eq!(min_tau(4.0, 4.0, f64::abs), 4.0);
        assert_eq!(max_tau(3.0, 5.0, f64::abs), 5.0);
        assert_eq!(max_tau(-1.0, 4.0, f64::abs), 4.0);
        assert_eq!(max_tau(4.0, 4.0, f64::abs), 4.0);
    }

    #[test]
    fn carrier_validation() {
        let xs: Vec<f64> = (-10..=10).map(|i| i as f64 / 3.0).collect();
        assert!(ProjectionCarrier::projection(xs.clone(), f64::abs).is_ok());
        assert!(ProjectionCarrier::involution(xs.clone(), f64::abs).is_err());
        assert!(ProjectionCarrier::involution(xs.clone(), |x| -x).is_ok());
        assert!(ProjectionCarrier::projection(xs, |x| x + 1.0).is_err());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(MaxTimes::new(-1.0).is_err());
        assert!(MaxTimes::new(f64::INFINITY).is_err());
        assert!(MaxTimes::new(f64::NAN).is_err());
        assert!(MinPlus::new(f64::NEG_INFINITY).is_err());
        assert!(MinPlus::new(f64::NAN).is_err());
        assert!(MinPlus::new(f64::INFINITY).is_ok());
    }
}

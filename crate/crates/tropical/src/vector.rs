//! Tropical vectors in the nonnegative orthant: componentwise ⊕, flow and
//! min-plus scalar actions, tropical inner product and norm, the tropical
//! sphere, and the stratum (component) index of a point.

use crate::error::TropError;
use crate::scalar::{rel_eq, MaxTimes, MinPlus};

/// A point of `R^n_>=0`, the model of `(R^tro)^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropVector {
    coords: Vec<f64>,
}

impl TropVector {
    /// Builds a vector; every coordinate must be finite and nonnegative.
    pub fn new(coords: Vec<f64>) -> Result<Self, TropError> {
        if coords.is_empty() {
            return Err(TropError::InvalidValue("vector must be nonempty".into()));
        }
        for &c in &coords {
            if !(c.is_finite() && c >= 0.0) {
                return Err(TropError::InvalidValue(format!(
                    "vector coordinates must be finite and nonnegative, got {c}"
                )));
            }
        }
        Ok(TropVector { coords })
    }

    pub fn zeros(n: usize) -> Self {
        TropVector { coords: vec![0.0; n] }
    }

    pub fn ones(n: usize) -> Self {
        TropVector { coords: vec![1.0; n] }
    }

    /// The `j`-th standard basis vector of `R^n_>=0` (0-based).
    pub fn basis(n: usize, j: usize) -> Self {
        let mut coords = vec![0.0; n];
        coords[j] = 1.0;
        TropVector { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    fn check_len(&self, other: &Self) -> Result<(), TropError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(TropError::DimensionMismatch(self.len(), other.len()))
        }
    }

    /// Componentwise maximum; the zero vector is the identity.
    pub fn oplus(&self, other: &Self) -> Result<Self, TropError> {
        self.check_len(other)?;
        Ok(TropVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.max(*b))
                .collect(),
        })
    }

    /// The standard flow: every coordinate multiplied by `e^{-r}`.
    pub fn flow(&self, r: f64) -> Self {
        let s = (-r).exp();
        TropVector {
            coords: self.coords.iter().map(|c| s * c).collect(),
        }
    }

    /// The min-plus scalar action: `e^{-t} · v` for finite `t`, the zero
    /// vector for `t = +∞`.
    pub fn scalar_act(&self, t: MinPlus) -> Self {
        if t.is_infinite() {
            TropVector::zeros(self.len())
        } else {
            self.flow(t.value())
        }
    }

    /// Tropical inner product: `max_i v_i * w_i`.
    pub fn inner(&self, other: &Self) -> Result<MaxTimes, TropError> {
        self.check_len(other)?;
        let m = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .fold(0.0f64, f64::max);
        Ok(MaxTimes::new(m).expect("products of nonnegative finite coords"))
    }

    /// Tropical norm: the maximum coordinate.
    pub fn norm(&self) -> MaxTimes {
        let m = self.coords.iter().copied().fold(0.0f64, f64::max);
        MaxTimes::new(m).expect("coords are finite and nonnegative")
    }

    /// True iff the vector lies on the tropical sphere: all coordinates
    /// at most 1 and at least one exactly 1.
    pub fn on_sphere(&self) -> bool {
        self.norm().value() == 1.0
    }

    /// ⊕ restricted to sphere points; the result stays on the sphere.
    pub fn sphere_oplus(&self, other: &Self) -> Result<Self, TropError> {
        if !self.on_sphere() || !other.on_sphere() {
            return Err(TropError::NotOnSphere);
        }
        self.oplus(other)
    }

    /// True iff `v = c·w` for some `c > 0`, within `eps` after sum
    /// normalization.
    pub fn is_proportional(&self, other: &Self, eps: f64) -> Result<bool, TropError> {
        self.check_len(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(TropError::ZeroVector);
        }
        let sa: f64 = self.coords.iter().sum();
        let sb: f64 = other.coords.iter().sum();
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| (a / sa - b / sb).abs() <= eps))
    }

    /// The stratum of the point: bit `j` is set iff coordinate `j` is
    /// strictly positive (exact test; zeros are combinatorial data).
    pub fn component_index(&self) -> ComponentIndex {
        ComponentIndex {
            bits: self.coords.iter().map(|&c| c > 0.0).collect(),
        }
    }

    /// Min-plus coordinates with respect to the standard basis: `-ln v_j`,
    /// with `+∞` at zero coordinates.  The vector is recovered as
    /// `⊕_j λ_j ⊙ u_j`.
    pub fn trop_coordinates(&self) -> Vec<MinPlus> {
        self.coords
            .iter()
            .map(|&c| MaxTimes::new(c).expect("invariant").to_minplus())
            .collect()
    }

    /// Approximate equality, coordinatewise at the library relative
    /// tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| rel_eq(*a, *b))
    }
}

/// Zero/positive pattern of a point of `R^n_>=0`, identifying its stratum.
///
/// The rank reads the bits as an n-digit binary numeral, most significant
/// first, plus one; ranks run from 1 (the origin stratum) to `2^n` (the
/// open interior).  Lexicographic order on the bits agrees with rank
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentIndex {
    bits: Vec<bool>,
}

impl ComponentIndex {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        ComponentIndex { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// 1 + the bits read as a binary numeral (most significant bit first).
    pub fn rank(&self) -> u64 {
        let mut v: u64 = 0;
        for &b in &self.bits {
            v = (v << 1) | u64::from(b);
        }
        v + 1
    }

    /// The bits as a string such as `"101"`.
    pub fn bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

//! Tropical projective space as the standard simplex, configuration
//! spaces, convex position, and canonical forms for elements of the
//! tropical Grassmannian.
//!
//! A line through the origin of the nonnegative orthant meets the
//! unit-coordinate-sum simplex exactly once; [`projectivize`] picks that
//! representative.  A k-subspace is generated by k tropically independent
//! vectors, and projectivizing its generators gives k pairwise-distinct
//! simplex points in convex position.  Sorting them lexicographically
//! yields a canonical form that is invariant under rescaling and
//! reordering of the generators.

use crate::cone::{cone_contains, is_independent, ConicSubspace};
use crate::error::TropError;
use crate::vector::TropVector;

/// A point of the standard simplex: nonnegative coordinates with unit sum.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self, TropError> {
        if coords.is_empty() {
            return Err(TropError::InvalidValue("simplex point must be nonempty".into()));
        }
        let sum: f64 = coords.iter().sum();
        if coords.iter().any(|&c| !(c.is_finite() && c >= 0.0)) || (sum - 1.0).abs() > 1e-12 {
            return Err(TropError::InvalidValue(
                "simplex point needs nonnegative coordinates summing to 1".into(),
            ));
        }
        Ok(SimplexPoint { coords })
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

    /// True iff some coordinate vanishes, i.e. the point lies on the
    /// simplex boundary.
    pub fn on_boundary(&self) -> bool {
        self.coords.contains(&0.0)
    }

    /// Sup-distance between two points of the same simplex.
    pub fn sup_distance(&self, other: &Self) -> Result<f64, TropError> {
        if self.len() != other.len() {
            return Err(TropError::DimensionMismatch(self.len(), other.len()));
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    pub fn to_vector(&self) -> TropVector {
        TropVector::new(self.coords.clone()).expect("simplex coords are valid")
    }

    fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            let ord = a.total_cmp(b);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// The unit-sum representative of the flow orbit of a nonzero vector.
pub fn projectivize(v: &TropVector) -> Result<SimplexPoint, TropError> {
    if v.is_zero() {
        return Err(TropError::ZeroVector);
    }
    let sum: f64 = v.coords().iter().sum();
    SimplexPoint::new(v.coords().iter().map(|c| c / sum).collect())
}

/// Do two nonzero vectors span the same line?
pub fn projective_eq(v: &TropVector, w: &TropVector, eps: f64) -> Result<bool, TropError> {
    if v.len() != w.len() {
        return Err(TropError::DimensionMismatch(v.len(), w.len()));
    }
    if v.is_zero() || w.is_zero() {
        return Err(TropError::ZeroVector);
    }
    Ok(projectivize(v)?.sup_distance(&projectivize(w)?)? <= eps)
}

/// An ordered list of pairwise-distinct simplex points.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexConfiguration {
    points: Vec<SimplexPoint>,
}

impl SimplexConfiguration {
    pub fn new(points: Vec<SimplexPoint>, eps: f64) -> Result<Self, TropError> {
        if !is_configuration(&points, eps)? {
            return Err(TropError::NotAConfiguration);
        }
        Ok(SimplexConfiguration { points })
    }

    pub fn points(&self) -> &[SimplexPoint] {
        &self.points
    }
}

/// True iff all pairwise sup-distances exceed `eps`.
pub fn is_configuration(points: &[SimplexPoint], eps: f64) -> Result<bool, TropError> {
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if p.sup_distance(q)? <= eps {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff no point lies in the convex hull of the others.
///
/// For unit-sum points hull membership coincides with closed-cone
/// membership, so each check is one LP feasibility query.
pub fn in_convex_position(points: &[SimplexPoint], eps: f64) -> Result<bool, TropError> {
    if !is_configuration(points, eps)? {
        return Err(TropError::NotAConfiguration);
    }
    for (i, p) in points.iter().enumerate() {
        let others: Vec<TropVector> = points
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.to_vector())
            .collect();
        if others.is_empty() {
            continue;
        }
        if cone_contains(&others, &p.to_vector(), eps)?.feasible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A tropical Grassmannian element: the canonical (lexicographically
/// sorted) simplex configuration of a k-subspace, plus the closed/open
/// flag distinguishing the cone from its relative interior.
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannElement {
    canonical: Vec<SimplexPoint>,
    closed: bool,
}

impl GrassmannElement {
    pub fn points(&self) -> &[SimplexPoint] {
        &self.canonical
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn ambient_dim(&self) -> usize {
        self.canonical[0].len()
    }

    /// The same subspace with the closed flag set.
    pub fn closure_map(&self) -> GrassmannElement {
        GrassmannElement { canonical: self.canonical.clone(), closed: true }
    }

    /// The same subspace with the closed flag cleared.
    pub fn interior_map(&self) -> GrassmannElement {
        GrassmannElement { canonical: self.canonical.clone(), closed: false }
    }
}

/// Canonicalizes an independent generator list: projectivize, verify
/// convex position, sort lexicographically.
pub fn grassmann_canonical(
    gens: &[TropVector],
    closed: bool,
    eps: f64,
) -> Result<GrassmannElement, TropError> {
    if gens.is_empty() {
        return Err(TropError::InvalidValue("a subspace needs generators".into()));
    }
    if !is_independent(gens, eps)? {
        return Err(TropError::NotIndependent);
    }
    let mut points: Vec<SimplexPoint> = gens
        .iter()
        .map(projectivize)
        .collect::<Result<_, _>>()?;
    // independence rules out coincident or hull-interior points
    assert!(is_configuration(&points, eps)?, "independent generators project to distinct points");
    assert!(in_convex_position(&points, eps)?, "independent generators are in convex position");
    points.sort_by(|a, b| a.lex_cmp(b));
    Ok(GrassmannElement { canonical: points, closed })
}

/// Reads a convex-position configuration back as a conic subspace; the
/// inverse of [`grassmann_canonical`] up to canonical form.
pub fn config_to_grassmann(
    cfg: &SimplexConfiguration,
    closed: bool,
    eps: f64,
) -> Result<ConicSubspace, TropError> {
    if !in_convex_position(cfg.points(), eps)? {
        return Err(TropError::NotConvexPosition);
    }
    let gens: Vec<TropVector> = cfg.points().iter().map(SimplexPoint::to_vector).collect();
    ConicSubspace::new(gens, closed, eps)
}

/// Equality of canonical forms: matching flags and pointwise agreement
/// within `eps`.
pub fn subspace_eq(a: &GrassmannElement, b: &GrassmannElement, eps: f64) -> Result<bool, TropError> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(TropError::DimensionMismatch(a.ambient_dim(), b.ambient_dim()));
    }
    if a.closed != b.closed || a.canonical.len() != b.canonical.len() {
        return Ok(false);
    }
    for (p, q) in a.canonical.iter().zip(&b.canonical) {
        if p.sup_distance(q)? > eps {
            return Ok(false);
        }
    }
    Ok(true)
}

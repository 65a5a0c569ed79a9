//! Convex-geometry engine: membership of points in finitely generated
//! cones (closed cones and relative interiors), tropical linear
//! independence, the `2^n` stratification of the nonnegative orthant, and
//! face/stratum decompositions of conic subspaces.
//!
//! Closed spans are exactly Euclidean cones; open spans are their relative
//! interiors, read as the strictly-positive-combination sets of the
//! generators.  Both membership tests reduce to LP feasibility; the
//! relative-interior test maximizes the minimum combination coefficient
//! and requires the optimum to clear the geometric epsilon.

use std::collections::BTreeMap;

use crate::error::TropError;
use crate::lp::{maximize, LpOutcome};
use crate::vector::{ComponentIndex, TropVector};

/// Outcome of a cone membership query.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityResult {
    pub feasible: bool,
    /// Combination coefficients reconstructing the query point, when one
    /// exists.
    pub witness: Option<Vec<f64>>,
    /// For relative-interior queries, the optimal minimum coefficient;
    /// for closed-cone queries, the smallest witness coefficient.
    /// `-inf` when no combination exists at all.
    pub margin: f64,
}

impl FeasibilityResult {
    fn infeasible() -> Self {
        FeasibilityResult { feasible: false, witness: None, margin: f64::NEG_INFINITY }
    }
}

fn check_dims(gens: &[TropVector], x: &TropVector) -> Result<(), TropError> {
    for g in gens {
        if g.len() != x.len() {
            return Err(TropError::DimensionMismatch(g.len(), x.len()));
        }
    }
    Ok(())
}

/// Is `x` a nonnegative Euclidean combination of the generators?
pub fn cone_contains(
    gens: &[TropVector],
    x: &TropVector,
    eps: f64,
) -> Result<FeasibilityResult, TropError> {
    check_dims(gens, x)?;
    let n = x.len();
    let k = gens.len();
    let a: Vec<Vec<f64>> = (0..n)
        .map(|i| gens.iter().map(|g| g.coords()[i]).collect())
        .collect();
    match maximize(&a, x.coords(), &vec![0.0; k], eps) {
        LpOutcome::Optimal { solution, .. } => {
            let margin = solution.iter().copied().fold(f64::INFINITY, f64::min);
            Ok(FeasibilityResult { feasible: true, witness: Some(solution), margin })
        }
        LpOutcome::Infeasible => Ok(FeasibilityResult::infeasible()),
        LpOutcome::Unbounded => unreachable!("feasibility problem has zero objective"),
    }
}

/// Is `x` a strictly positive combination of the generators?
///
/// Solves `max t` subject to `sum λ_i v_i = x`, `λ_i >= t`; membership
/// requires the optimum to exceed `eps`, and `margin` reports it.
pub fn relint_contains(
    gens: &[TropVector],
    x: &TropVector,
    eps: f64,
) -> Result<FeasibilityResult, TropError> {
    check_dims(gens, x)?;
    let n = x.len();
    let k = gens.len();
    if k == 0 {
        return Ok(FeasibilityResult::infeasible());
    }
    // substitute λ_i = t + μ_i with μ_i >= 0 and t = tp - tn free;
    // columns: μ_1..μ_k, tp, tn
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<f64> = gens.iter().map(|g| g.coords()[i]).collect();
        let s: f64 = row.iter().sum();
        row.push(s);
        row.push(-s);
        a.push(row);
    }
    let mut c = vec![0.0; k + 2];
    c[k] = 1.0;
    c[k + 1] = -1.0;
    match maximize(&a, x.coords(), &c, eps) {
        LpOutcome::Optimal { objective: t, solution } => {
            let feasible = t > eps;
            let witness = feasible.then(|| {
                solution[..k].iter().map(|mu| mu + t).collect::<Vec<f64>>()
            });
            Ok(FeasibilityResult { feasible, witness, margin: t })
        }
        LpOutcome::Infeasible => Ok(FeasibilityResult::infeasible()),
        // only reachable when every generator is the zero vector and x = 0
        LpOutcome::Unbounded => Ok(FeasibilityResult {
            feasible: true,
            witness: None,
            margin: f64::INFINITY,
        }),
    }
}

/// No vector is zero and none lies in the closed cone of the others.
/// For two vectors this is non-proportionality.
pub fn is_independent(vectors: &[TropVector], eps: f64) -> Result<bool, TropError> {
    if vectors.is_empty() {
        return Ok(true);
    }
    let n = vectors[0].len();
    for v in vectors {
        if v.len() != n {
            return Err(TropError::DimensionMismatch(v.len(), n));
        }
        if v.is_zero() {
            return Ok(false);
        }
    }
    for i in 0..vectors.len() {
        let others: Vec<TropVector> = vectors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        if cone_contains(&others, &vectors[i], eps)?.feasible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finitely generated conic subspace: the closed cone (`closed = true`)
/// or the relative interior of the cone over an independent set of
/// nonzero generators.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicSubspace {
    generators: Vec<TropVector>,
    closed: bool,
}

impl ConicSubspace {
    pub fn new(generators: Vec<TropVector>, closed: bool, eps: f64) -> Result<Self, TropError> {
        if generators.is_empty() {
            return Err(TropError::InvalidValue("a subspace needs generators".into()));
        }
        if !is_independent(&generators, eps)? {
            return Err(TropError::NotIndependent);
        }
        Ok(ConicSubspace { generators, closed })
    }

    pub fn generators(&self) -> &[TropVector] {
        &self.generators
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators[0].len()
    }

    /// Membership: the closed cone when `closed`, the relative interior
    /// otherwise.
    pub fn contains(&self, x: &TropVector, eps: f64) -> Result<bool, TropError> {
        span_contains(self, x, eps)
    }

    /// The generators lying in stratum `index` — the generating data of
    /// the face of the subspace inside that stratum.
    pub fn face_restrict(&self, index: &ComponentIndex) -> Result<Vec<TropVector>, TropError> {
        if index.len() != self.ambient_dim() {
            return Err(TropError::DimensionMismatch(index.len(), self.ambient_dim()));
        }
        Ok(self
            .generators
            .iter()
            .filter(|g| &g.component_index() == index)
            .cloned()
            .collect())
    }

    /// Groups the generators by stratum, keyed by component index in rank
    /// order.
    pub fn subspace_decomposition(&self) -> BTreeMap<ComponentIndex, Vec<TropVector>> {
        let mut map: BTreeMap<ComponentIndex, Vec<TropVector>> = BTreeMap::new();
        for g in &self.generators {
            map.entry(g.component_index()).or_default().push(g.clone());
        }
        map
    }
}

/// Dispatches to [`cone_contains`] or [`relint_contains`] according to the
/// subspace's closed flag.
pub fn span_contains(c: &ConicSubspace, x: &TropVector, eps: f64) -> Result<bool, TropError> {
    let result = if c.closed {
        cone_contains(&c.generators, x, eps)?
    } else {
        relint_contains(&c.generators, x, eps)?
    };
    Ok(result.feasible)
}

/// The `2^n` component indices of the orthant stratification, in rank
/// order.  Guarded at `n <= 16`.
pub fn orthant_decomposition(n: usize) -> Result<Vec<ComponentIndex>, TropError> {
    const MAX_N: usize = 16;
    if n == 0 || n > MAX_N {
        return Err(TropError::TooLarge(n, MAX_N));
    }
    Ok((0..1u64 << n)
        .map(|v| {
            ComponentIndex::from_bits((0..n).map(|j| v & (1 << (n - 1 - j)) != 0).collect())
        })
        .collect())
}

//! Pareto and cone dominance relations.
//!
//! Strict comparisons use exact floating-point comparison; no tolerance is
//! applied anywhere in the relations.

use crate::error::{check_dims, Result};

/// Choice of dominance relation for set-filtering operations.
#[derive(Debug, Clone, PartialEq)]
pub enum DominanceRelation {
    Pareto,
    /// Cone dominance with per-objective mixing coefficients `delta`.
    Cone(Vec<f64>),
}

pub(crate) fn dominates_raw(u: &[f64], v: &[f64]) -> bool {
    let mut strict = false;
    for (a, b) in u.iter().zip(v.iter()) {
        if a > b {
            return false;
        }
        if a < b {
            strict = true;
        }
    }
    strict
}

/// `u` dominates `v`: `u_i <= v_i` for all `i` and `u_j < v_j` for some `j`.
pub fn dominates(u: &[f64], v: &[f64]) -> Result<bool> {
    check_dims(u.len(), v.len())?;
    Ok(dominates_raw(u, v))
}

pub(crate) fn cone_transform(z: &[f64], delta: &[f64]) -> Vec<f64> {
    let total: f64 = z.iter().sum();
    z.iter()
        .zip(delta.iter())
        .map(|(zi, di)| zi + di * (total - zi))
        .collect()
}

/// Cone dominance: both vectors pass through `z'_i = z_i + delta_i * sum_{k != i} z_k`
/// and the transformed pair is compared with [`dominates`].
pub fn cone_dominates(u: &[f64], v: &[f64], delta: &[f64]) -> Result<bool> {
    check_dims(u.len(), v.len())?;
    check_dims(u.len(), delta.len())?;
    Ok(dominates_raw(
        &cone_transform(u, delta),
        &cone_transform(v, delta),
    ))
}

pub(crate) fn relation_holds(u: &[f64], v: &[f64], relation: &DominanceRelation) -> bool {
    match relation {
        DominanceRelation::Pareto => dominates_raw(u, v),
        DominanceRelation::Cone(delta) => {
            dominates_raw(&cone_transform(u, delta), &cone_transform(v, delta))
        }
    }
}

/// Members of `set` not dominated by any other member under `relation`.
/// Input order is preserved; mutually equal duplicates are all retained.
pub fn nondominated_filter<'a, T: AsRef<[f64]>>(
    set: &'a [T],
    relation: &DominanceRelation,
) -> Vec<&'a T> {
    set.iter()
        .filter(|z| {
            !set.iter()
                .any(|other| relation_holds(other.as_ref(), z.as_ref(), relation))
        })
        .collect()
}

/// Index form of [`nondominated_filter`], for callers that own the storage.
pub fn nondominated_indices<T: AsRef<[f64]>>(
    set: &[T],
    relation: &DominanceRelation,
) -> Vec<usize> {
    (0..set.len())
        .filter(|&i| {
            !set.iter()
                .any(|other| relation_holds(other.as_ref(), set[i].as_ref(), relation))
        })
        .collect()
}

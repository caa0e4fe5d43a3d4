//! Objective-space and decision-space value types shared by every module.

use crate::error::{check_dims, Error, Result};

/// A point in objective space, minimization convention. All entries finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector {
    values: Vec<f64>,
}

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "objective vector must be nonempty".into(),
            ));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "objective vector entry {v} is not finite"
            )));
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl std::ops::Index<usize> for ObjectiveVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

impl AsRef<[f64]> for ObjectiveVector {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

/// A decision vector in `[0,1]^n` with an optional cached objective image.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    variables: Vec<f64>,
    pub objectives: Option<ObjectiveVector>,
}

impl Solution {
    pub fn new(variables: Vec<f64>) -> Result<Self> {
        if let Some(v) = variables
            .iter()
            .find(|v| !v.is_finite() || **v < 0.0 || **v > 1.0)
        {
            return Err(Error::InvalidParameter(format!(
                "decision variable {v} outside [0,1]"
            )));
        }
        Ok(Self {
            variables,
            objectives: None,
        })
    }

    pub fn variables(&self) -> &[f64] {
        &self.variables
    }

    pub fn n(&self) -> usize {
        self.variables.len()
    }
}

/// Ideal and nadir objective vectors bounding a Pareto front.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontBounds {
    ideal: Vec<f64>,
    nadir: Vec<f64>,
}

impl FrontBounds {
    pub fn new(ideal: Vec<f64>, nadir: Vec<f64>) -> Result<Self> {
        check_dims(ideal.len(), nadir.len())?;
        if ideal.is_empty() {
            return Err(Error::InvalidParameter("bounds must be nonempty".into()));
        }
        for (i, n) in ideal.iter().zip(nadir.iter()) {
            if !(i.is_finite() && n.is_finite() && i < n) {
                return Err(Error::InvalidParameter(format!(
                    "ideal must lie strictly below nadir componentwise (got {i} vs {n})"
                )));
            }
        }
        Ok(Self { ideal, nadir })
    }

    /// Unit bounds `[0,1]^m`.
    pub fn unit(m: usize) -> Self {
        Self {
            ideal: vec![0.0; m],
            nadir: vec![1.0; m],
        }
    }

    pub fn m(&self) -> usize {
        self.ideal.len()
    }

    pub fn ideal(&self) -> &[f64] {
        &self.ideal
    }

    pub fn nadir(&self) -> &[f64] {
        &self.nadir
    }

    /// Maps `z` to `(z - ideal) / (nadir - ideal)` componentwise.
    pub fn normalize(&self, z: &[f64]) -> Result<Vec<f64>> {
        check_dims(self.m(), z.len())?;
        Ok(z.iter()
            .zip(self.ideal.iter().zip(self.nadir.iter()))
            .map(|(z, (i, n))| (z - i) / (n - i))
            .collect())
    }

    /// Inverse of [`FrontBounds::normalize`].
    pub fn denormalize(&self, zbar: &[f64]) -> Result<Vec<f64>> {
        check_dims(self.m(), zbar.len())?;
        Ok(zbar
            .iter()
            .zip(self.ideal.iter().zip(self.nadir.iter()))
            .map(|(z, (i, n))| i + z * (n - i))
            .collect())
    }
}

/// A sorted set of objective indices, 0-based internally. The paper's
/// 1-based convention appears only in parsing and printing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    members: Vec<usize>,
}

impl IndexSet {
    /// Builds from 0-based indices; sorts and rejects duplicates.
    pub fn new(mut members: Vec<usize>, m: usize) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidParameter("index set must be nonempty".into()));
        }
        members.sort_unstable();
        members.dedup();
        if let Some(&i) = members.iter().find(|&&i| i >= m) {
            return Err(Error::InvalidParameter(format!(
                "index {} out of range for m={m}",
                i + 1
            )));
        }
        Ok(Self { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn nu(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Complement within `[0, m)`.
    pub fn complement(&self, m: usize) -> Vec<usize> {
        (0..m).filter(|i| !self.contains(*i)).collect()
    }

    /// All `C(m, nu)` index sets of size `nu`, in lexicographic order.
    pub fn combinations(m: usize, nu: usize) -> Vec<IndexSet> {
        assert!(nu >= 1 && nu <= m);
        let mut out = Vec::new();
        let mut cur = (0..nu).collect::<Vec<_>>();
        loop {
            out.push(IndexSet {
                members: cur.clone(),
            });
            // advance to next lexicographic combination
            let mut i = nu;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] != i + m - nu {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            cur[i] += 1;
            for j in i + 1..nu {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }

    /// 1-based rendering like `{1,3}`, matching the written convention.
    pub fn label(&self) -> String {
        let inner = self
            .members
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{inner}}}")
    }
}

//! Exact volume of the convex enclosed region in the linear (`p = 1`) case.
//!
//! The region behind a reference point is an intersection of halfspaces:
//! one weighted subset constraint per nonempty coordinate subset plus the
//! reference-point box. Vertices come from solving every `m x m` subsystem
//! and keeping the solutions feasible for the whole system; the volume is a
//! fan over the vertex centroid, one cone per facet, with facet measures
//! obtained by recursing inside the facet hyperplane.

/// Feasibility slack for vertex acceptance, absolute in normalized
/// coordinates against unit-norm constraint rows.
const FEAS_TOL: f64 = 1e-9;
/// Vertices closer than this merge into one.
const DEDUP_TOL: f64 = 1e-8;
/// A vertex is incident to a facet when its residual is below this.
const ACTIVE_TOL: f64 = 1e-8;

/// One halfspace `a . z <= b` with `|a| = 1`.
#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub a: Vec<f64>,
    pub b: f64,
}

impl Row {
    fn normalized(mut a: Vec<f64>, mut b: f64) -> Option<Row> {
        let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return None;
        }
        a.iter_mut().for_each(|x| *x /= norm);
        b /= norm;
        Some(Row { a, b })
    }

    fn residual(&self, z: &[f64]) -> f64 {
        dot(&self.a, z) - self.b
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Halfspace system of `{ z : sum_j w_j min(z_j, 1) >= 1, 0 <= z <= rbar }`,
/// which is the weakly dominated set of a linear front with weights `w`
/// intersected with the reference box. Each subset `S` contributes
/// `sum_{j in S} w_j z_j >= 1 - sum_{j not in S} w_j`.
pub(crate) fn weighted_region_rows(weights: &[f64], rbar: &[f64]) -> Vec<Row> {
    let m = weights.len();
    let total: f64 = weights.iter().sum();
    let mut rows: Vec<Row> = Vec::with_capacity((1 << m) + 2 * m);
    for mask in 1u32..(1 << m) {
        let mut a = vec![0.0; m];
        let mut outside = 0.0;
        for j in 0..m {
            if mask & (1 << j) != 0 {
                a[j] = -weights[j];
            } else {
                outside += weights[j];
            }
        }
        if let Some(row) = Row::normalized(a, outside - 1.0) {
            rows.push(row);
        }
    }
    for j in 0..m {
        let mut a = vec![0.0; m];
        a[j] = 1.0;
        rows.push(Row { a, b: rbar[j] });
        // z_j >= 0 is implied by the singleton subset row unless the other
        // weights already sum past 1.
        if total - weights[j] > 1.0 + 1e-12 {
            let mut a = vec![0.0; m];
            a[j] = -1.0;
            rows.push(Row { a, b: 0.0 });
        }
    }
    dedupe_rows(rows)
}

fn dedupe_rows(rows: Vec<Row>) -> Vec<Row> {
    let mut kept: Vec<Row> = Vec::with_capacity(rows.len());
    for row in rows {
        let dup = kept.iter().any(|k| {
            (k.b - row.b).abs() < 1e-10
                && k.a
                    .iter()
                    .zip(row.a.iter())
                    .all(|(x, y)| (x - y).abs() < 1e-10)
        });
        if !dup {
            kept.push(row);
        }
    }
    kept
}

/// Solves `A x = b` (small dense system) by Gaussian elimination with
/// partial pivoting; `None` when numerically singular.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let (pivot_row, pivot_abs) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pivot_abs < 1e-10 {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// All vertices of `{ z : rows }`: feasible solutions of the `m`-subsets of
/// the constraint system, deduplicated.
pub(crate) fn enumerate_vertices(rows: &[Row], m: usize) -> Vec<Vec<f64>> {
    let n = rows.len();
    if n < m {
        return Vec::new();
    }
    let mut verts: Vec<Vec<f64>> = Vec::new();
    let mut keys: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut comb: Vec<usize> = (0..m).collect();
    loop {
        let a: Vec<Vec<f64>> = comb.iter().map(|&i| rows[i].a.clone()).collect();
        let b: Vec<f64> = comb.iter().map(|&i| rows[i].b).collect();
        if let Some(v) = solve(a, b) {
            if v.iter().all(|x| x.is_finite()) && rows.iter().all(|r| r.residual(&v) <= FEAS_TOL) {
                let key: Vec<i64> = v.iter().map(|x| (x / DEDUP_TOL).round() as i64).collect();
                if keys.insert(key) {
                    verts.push(v);
                }
            }
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return verts;
            }
            i -= 1;
            if comb[i] != i + n - m {
                break;
            }
            if i == 0 {
                return verts;
            }
        }
        comb[i] += 1;
        for j in i + 1..m {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Volume of the polytope `{ z : rows }` with the given vertex list, by a
/// centroid fan: one cone per facet, `vol = sum dist(c, facet) * |facet| / dim`.
pub(crate) fn fan_volume(rows: &[Row], verts: &[Vec<f64>], dim: usize) -> f64 {
    if verts.len() < dim + 1 {
        return 0.0;
    }
    if dim == 1 {
        let lo = verts.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
        let hi = verts.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
        return (hi - lo).max(0.0);
    }
    let mut centroid = vec![0.0; dim];
    for v in verts {
        for (c, x) in centroid.iter_mut().zip(v.iter()) {
            *c += x;
        }
    }
    centroid.iter_mut().for_each(|c| *c /= verts.len() as f64);

    let mut total = 0.0;
    for (i, row) in rows.iter().enumerate() {
        let active: Vec<&Vec<f64>> = verts
            .iter()
            .filter(|v| row.residual(v).abs() <= ACTIVE_TOL)
            .collect();
        if active.len() < dim {
            continue;
        }
        let height = -row.residual(&centroid);
        if height <= ACTIVE_TOL {
            continue;
        }
        // orthonormal basis of the facet hyperplane via a Householder
        // reflector mapping the facet normal onto e_1
        let basis = hyperplane_basis(&row.a);
        let origin = active[0].clone();
        let projected: Vec<Vec<f64>> = active
            .iter()
            .map(|v| {
                let shifted: Vec<f64> = v.iter().zip(origin.iter()).map(|(x, o)| x - o).collect();
                basis.iter().map(|q| dot(q, &shifted)).collect()
            })
            .collect();
        let mut sub_rows: Vec<Row> = Vec::with_capacity(rows.len());
        for (j, other) in rows.iter().enumerate() {
            if j == i {
                continue;
            }
            let a: Vec<f64> = basis.iter().map(|q| dot(q, &other.a)).collect();
            let b = other.b - dot(&other.a, &origin);
            if let Some(r) = Row::normalized(a, b) {
                sub_rows.push(r);
            }
        }
        let facet = fan_volume(&dedupe_rows(sub_rows), &projected, dim - 1);
        total += height * facet / dim as f64;
    }
    total
}

/// Orthonormal basis (`dim - 1` vectors) of the hyperplane `{ y : a . y = 0 }`
/// for a unit vector `a`, as the trailing columns of the Householder
/// reflector taking `a` to `+/-e_1`.
fn hyperplane_basis(a: &[f64]) -> Vec<Vec<f64>> {
    let dim = a.len();
    let alpha = if a[0] >= 0.0 { -1.0 } else { 1.0 };
    let mut u = a.to_vec();
    u[0] -= alpha;
    let unorm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut basis = Vec::with_capacity(dim - 1);
    for col in 1..dim {
        let mut e = vec![0.0; dim];
        e[col] = 1.0;
        if unorm > 1e-14 {
            let f = 2.0 * u[col] / (unorm * unorm);
            for (ei, ui) in e.iter_mut().zip(u.iter()) {
                *ei -= f * ui;
            }
        }
        basis.push(e);
    }
    basis
}

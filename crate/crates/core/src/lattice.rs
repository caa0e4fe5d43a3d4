//! Uniform simplex lattice (the Das-Dennis construction).

/// All points `w` on the unit simplex whose coordinates are multiples of
/// `1/h`. Yields `C(h + m - 1, m - 1)` points in lexicographic order.
pub fn simplex_lattice(m: usize, h: usize) -> Vec<Vec<f64>> {
    assert!(m >= 1 && h >= 1);
    let mut out = Vec::new();
    let mut parts = vec![0usize; m];
    fill(&mut out, &mut parts, 0, h, h);
    out
}

fn fill(out: &mut Vec<Vec<f64>>, parts: &mut [usize], slot: usize, left: usize, h: usize) {
    if slot + 1 == parts.len() {
        parts[slot] = left;
        out.push(parts.iter().map(|&k| k as f64 / h as f64).collect());
        return;
    }
    for k in 0..=left {
        parts[slot] = k;
        fill(out, parts, slot + 1, left - k, h);
    }
}

/// Lattice resolution `h` giving the smallest point count at or above `n`.
pub fn lattice_resolution_for(m: usize, n: usize) -> usize {
    let mut h = 1;
    while lattice_count(m, h) < n {
        h += 1;
    }
    h
}

/// `C(h + m - 1, m - 1)` without overflow for the sizes used here.
pub fn lattice_count(m: usize, h: usize) -> usize {
    let mut c = 1usize;
    for k in 1..m {
        c = c * (h + k) / k;
    }
    c
}

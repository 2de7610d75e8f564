//! Random finite lattices for property testing.

#![allow(clippy::needless_range_loop)]

use rand::Rng;

use crate::lattice::FiniteLattice;

/// Lattice of order ideals of a random poset on `k` points, where `i < j`
/// is related with probability `p` before transitive closure.
///
/// Always distributive. Returns `None` when it would exceed `max_size`.
pub fn random_distributive<R: Rng>(rng: &mut R, k: usize, p: f64, max_size: usize) -> Option<FiniteLattice> {
    assert!(k < 16, "ideal enumeration is exponential in k");
    let mut below = vec![0u32; k];
    for j in 0..k {
        for i in 0..j {
            if rng.random_bool(p) {
                below[j] |= (1 << i) | below[i];
            }
        }
    }
    let ideals: Vec<u32> = (0..1u32 << k)
        .filter(|&set| (0..k).all(|j| set & (1 << j) == 0 || below[j] & !set == 0))
        .collect();
    if ideals.len() > max_size {
        return None;
    }
    let labels = ideals.iter().map(|set| format!("{set:b}")).collect();
    let covers: Vec<(usize, usize)> = (0..ideals.len())
        .flat_map(|a| (0..ideals.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let (x, y) = (ideals[a], ideals[b]);
            x & !y == 0 && (y & !x).count_ones() == 1
        })
        .collect();
    Some(FiniteLattice::from_covers(labels, &covers).expect("ideals form a lattice"))
}

/// A random bounded poset on at most `max_size` points, resampled until it
/// is a lattice.
///
/// Interior points are related with probability `p` along a hidden linear
/// extension; a bottom and a top are adjoined.
pub fn random_lattice<R: Rng>(rng: &mut R, max_size: usize, p: f64) -> FiniteLattice {
    assert!(max_size >= 1);
    loop {
        let n = rng.random_range(1..=max_size);
        let interior = n.saturating_sub(2);
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        // Index 0 is the bottom, n - 1 the top, interior points in between.
        for i in 0..n {
            le[0][i] = true;
            le[i][n - 1] = true;
        }
        for j in 1..=interior {
            for i in 1..j {
                if rng.random_bool(p) {
                    le[i][j] = true;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        let labels = (0..n).map(|i| format!("p{i}")).collect();
        if let Ok(l) = FiniteLattice::from_order(labels, |a, b| le[a][b]) {
            return l;
        }
    }
}

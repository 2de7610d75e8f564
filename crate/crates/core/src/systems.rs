//! Named Coxeter systems used throughout the examples and tests.

use crate::coxeter::{Bond, CoxeterError, CoxeterMatrix, CoxeterSystem};

fn named(rank: usize, first: usize) -> Vec<String> {
    (first..first + rank).map(|i| format!("s{i}")).collect()
}

fn from_upper(rank: usize, first: usize, upper: &[u32]) -> CoxeterSystem {
    let bonds: Vec<Bond> = upper.iter().copied().map(Bond::from_encoded).collect();
    let m = CoxeterMatrix::from_upper(rank, &bonds).expect("preset matrix is valid");
    CoxeterSystem::new(m, named(rank, first)).expect("preset names are distinct")
}

/// Affine C̃₃ on `s0 … s3` with `(m01, m02, m03, m12, m13, m23) = (4, 2, 2, 3, 2, 4)`.
pub fn affine_c3() -> CoxeterSystem {
    from_upper(4, 0, &[4, 2, 2, 3, 2, 4])
}

/// A₂ on `s1, s2`.
pub fn a2() -> CoxeterSystem {
    from_upper(2, 1, &[3])
}

/// A₃ on `s1, s2, s3`.
pub fn a3() -> CoxeterSystem {
    from_upper(3, 1, &[3, 2, 3])
}

/// B₃ on `s1, s2, s3` with `(m12, m13, m23) = (4, 2, 3)`.
pub fn b3() -> CoxeterSystem {
    from_upper(3, 1, &[4, 2, 3])
}

/// H₃ on `s1, s2, s3` with `(m12, m13, m23) = (5, 2, 3)`; float arithmetic.
pub fn h3() -> CoxeterSystem {
    from_upper(3, 1, &[5, 2, 3])
}

/// Dihedral I₂(m) on `s1, s2`.
pub fn dihedral(m: Bond) -> CoxeterSystem {
    let matrix = CoxeterMatrix::from_upper(2, &[m]).expect("dihedral label is at least 2");
    CoxeterSystem::new(matrix, named(2, 1)).expect("distinct names")
}

/// Rank-3 system on `s1, s2, s3` from `(m12, m13, m23)`, with `0` meaning ∞.
pub fn rank3(m12: u32, m13: u32, m23: u32) -> Result<CoxeterSystem, CoxeterError> {
    let bonds = [m12, m13, m23].map(Bond::from_encoded);
    CoxeterSystem::new(CoxeterMatrix::from_upper(3, &bonds)?, named(3, 1))
}

/// Looks up a preset by name: `affine-c3`, `a2`, `a3`, `b3`, `h3`, or
/// `i2:<m>` where `<m>` is an integer, `inf` or `∞`.
pub fn preset(name: &str) -> Option<CoxeterSystem> {
    match name {
        "affine-c3" | "c3~" => Some(affine_c3()),
        "a2" => Some(a2()),
        "a3" => Some(a3()),
        "b3" => Some(b3()),
        "h3" => Some(h3()),
        _ => {
            let m = name.strip_prefix("i2:")?;
            let bond = match m {
                "inf" | "∞" | "0" => Bond::Infinite,
                _ => Bond::Finite(m.parse().ok().filter(|&m: &u32| m >= 2)?),
            };
            Some(dihedral(bond))
        }
    }
}

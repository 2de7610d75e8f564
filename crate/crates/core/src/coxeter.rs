//! Coxeter systems and their elements.
//!
//! Elements are stored by their ShortLex-least reduced word together with
//! the matrices of `w` and `w⁻¹` in the geometric representation, written in
//! the basis of simple roots. A generator `s` is a right descent of `w` when
//! `w(α_s)` is a negative root and a left descent when `w⁻¹(α_s)` is.

#![allow(clippy::needless_range_loop)]

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::arith::{root_sign, ArithError, Mat, QuadInt, Scalar, Sign, SIGN_TOLERANCE};

/// Label of an edge of the Coxeter diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    /// Decodes the integer file encoding, where `0` stands for ∞.
    pub fn from_encoded(m: u32) -> Bond {
        if m == 0 {
            Bond::Infinite
        } else {
            Bond::Finite(m)
        }
    }

    pub fn encoded(self) -> u32 {
        match self {
            Bond::Finite(m) => m,
            Bond::Infinite => 0,
        }
    }

    fn has_exact_form(self) -> bool {
        matches!(self, Bond::Finite(1 | 2 | 3 | 4 | 6) | Bond::Infinite)
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoxeterError {
    #[error("Coxeter matrix is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {rank}")]
    Ragged { row: usize, len: usize, rank: usize },
    #[error("asymmetric: m[{i}][{j}] = {a} but m[{j}][{i}] = {b}")]
    Asymmetric { i: usize, j: usize, a: Bond, b: Bond },
    #[error("bad diagonal: m[{i}][{i}] = {value}, expected 1")]
    BadDiagonal { i: usize, value: Bond },
    #[error("off-diagonal entry m[{i}][{j}] = {value} must be at least 2 or ∞")]
    OffDiagonal { i: usize, j: usize, value: Bond },
    #[error("expected {expected} generator names, got {found}")]
    NameCount { expected: usize, found: usize },
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("parabolic subsystem needs a nonempty generator set")]
    EmptyParabolic,
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("exact arithmetic requested but bond {0} needs floating point")]
    InexactBond(Bond),
    #[error("arithmetic precision: {0}")]
    Precision(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl From<ArithError> for CoxeterError {
    fn from(e: ArithError) -> Self {
        CoxeterError::Precision(e.to_string())
    }
}

/// Symmetric matrix of bond labels with ones on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Bond>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<Bond>>) -> Result<Self, CoxeterError> {
        let rank = rows.len();
        if rank == 0 {
            return Err(CoxeterError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != rank {
                return Err(CoxeterError::Ragged { row, len: r.len(), rank });
            }
        }
        for i in 0..rank {
            if rows[i][i] != Bond::Finite(1) {
                return Err(CoxeterError::BadDiagonal { i, value: rows[i][i] });
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(CoxeterError::Asymmetric { i, j, a: rows[i][j], b: rows[j][i] });
                }
                if i != j && matches!(rows[i][j], Bond::Finite(m) if m < 2) {
                    return Err(CoxeterError::OffDiagonal { i, j, value: rows[i][j] });
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer rows with `0` encoding ∞.
    pub fn from_encoded(rows: &[Vec<u32>]) -> Result<Self, CoxeterError> {
        CoxeterMatrix::new(
            rows.iter()
                .map(|r| r.iter().copied().map(Bond::from_encoded).collect())
                .collect(),
        )
    }

    /// Matrix from the upper-triangular labels `m_{ij}`, `i < j`, in row order.
    pub fn from_upper(rank: usize, upper: &[Bond]) -> Result<Self, CoxeterError> {
        let mut rows = vec![vec![Bond::Finite(2); rank]; rank];
        let mut it = upper.iter();
        for i in 0..rank {
            rows[i][i] = Bond::Finite(1);
            for j in i + 1..rank {
                let b = *it.next().ok_or(CoxeterError::Ragged { row: i, len: j, rank })?;
                rows[i][j] = b;
                rows[j][i] = b;
            }
        }
        CoxeterMatrix::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> Bond {
        self.entries[i * self.rank + j]
    }

    pub fn encoded_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.get(i, j).encoded()).collect())
            .collect()
    }

    fn restrict(&self, keep: &[usize]) -> CoxeterMatrix {
        let rows = keep.iter().map(|&i| keep.iter().map(|&j| self.get(i, j)).collect()).collect();
        CoxeterMatrix::new(rows).expect("restriction of a valid Coxeter matrix")
    }
}

/// Which number system carries the reflection matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    /// Exact when every label is in {2, 3, 4, 6, ∞}, float otherwise.
    Auto,
    Exact,
    Float,
}

#[derive(Debug)]
enum Kernel {
    Exact(Mat<QuadInt>),
    Float(Mat<f64>),
}

#[derive(Debug)]
struct SystemData {
    id: u64,
    matrix: CoxeterMatrix,
    names: Vec<String>,
    kernel: Kernel,
}

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

/// A Coxeter system `(W, S)` with named generators.
///
/// Cloning is cheap and clones compare equal; two independently built
/// systems never do, even with identical matrices.
#[derive(Debug, Clone)]
pub struct CoxeterSystem(Arc<SystemData>);

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for CoxeterSystem {}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix, names: Vec<String>) -> Result<Self, CoxeterError> {
        Self::with_arithmetic(matrix, names, Arithmetic::Auto)
    }

    /// Generators named `s0 … s(n-1)`.
    pub fn with_default_names(matrix: CoxeterMatrix) -> Self {
        let names = (0..matrix.rank()).map(|i| format!("s{i}")).collect();
        Self::new(matrix, names).expect("default names are distinct")
    }

    pub fn with_arithmetic(
        matrix: CoxeterMatrix,
        names: Vec<String>,
        arithmetic: Arithmetic,
    ) -> Result<Self, CoxeterError> {
        let n = matrix.rank();
        if names.len() != n {
            return Err(CoxeterError::NameCount { expected: n, found: names.len() });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(CoxeterError::DuplicateName(name.clone()));
            }
        }
        let inexact = matrix.entries.iter().find(|b| !b.has_exact_form()).copied();
        let exact = match (arithmetic, inexact) {
            (Arithmetic::Float, _) => false,
            (Arithmetic::Auto, found) => found.is_none(),
            (Arithmetic::Exact, None) => true,
            (Arithmetic::Exact, Some(b)) => return Err(CoxeterError::InexactBond(b)),
        };
        let kernel = if exact {
            Kernel::Exact(build_kernel(&matrix, exact_twice_form))
        } else {
            Kernel::Float(build_kernel(&matrix, float_twice_form))
        };
        Ok(CoxeterSystem(Arc::new(SystemData {
            id: NEXT_SYSTEM_ID.fetch_add(1, AtomicOrdering::Relaxed),
            matrix,
            names,
            kernel,
        })))
    }

    pub fn rank(&self) -> usize {
        self.0.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.0.matrix
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.0.names[s]
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.0.kernel, Kernel::Exact(_))
    }

    /// The bilinear form `B(α_i, α_j) = -cos(π / m_ij)`, with `-1` for ∞.
    pub fn form(&self) -> Vec<Vec<f64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| float_twice_form(self.0.matrix.get(i, j)) / 2.0).collect())
            .collect()
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, CoxeterError> {
        self.0
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CoxeterError::UnknownGenerator(name.to_string()))
    }

    /// Parses generator names separated by whitespace or commas. `ε` and
    /// the empty string denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, CoxeterError> {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty() && *t != "ε")
            .map(|t| self.generator_index(t))
            .collect()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(" ")
    }

    pub fn identity(&self) -> Element {
        let n = self.rank();
        let rep = match &self.0.kernel {
            Kernel::Exact(_) => Rep::Exact { fwd: Mat::identity(n), inv: Mat::identity(n) },
            Kernel::Float(_) => Rep::Float { fwd: Mat::identity(n), inv: Mat::identity(n) },
        };
        Element { sys: self.clone(), word: Vec::new(), rep }
    }

    pub fn generator(&self, s: usize) -> Result<Element, CoxeterError> {
        self.canonicalize(&[s])
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|s| self.generator(s).expect("index in range")).collect()
    }

    /// Element represented by an arbitrary word, in ShortLex normal form.
    pub fn canonicalize(&self, word: &[usize]) -> Result<Element, CoxeterError> {
        let rank = self.rank();
        if let Some(&index) = word.iter().find(|&&s| s >= rank) {
            return Err(CoxeterError::GeneratorOutOfRange { index, rank });
        }
        let (word, rep) = match &self.0.kernel {
            Kernel::Exact(k) => {
                let (w, fwd, inv) = normal_form(k, word)?;
                (w, Rep::Exact { fwd, inv })
            }
            Kernel::Float(k) => {
                let (w, fwd, inv) = normal_form(k, word)?;
                (w, Rep::Float { fwd, inv })
            }
        };
        Ok(Element { sys: self.clone(), word, rep })
    }

    pub fn parse_element(&self, text: &str) -> Result<Element, CoxeterError> {
        self.canonicalize(&self.parse_word(text)?)
    }

    /// The standard parabolic subsystem generated by `subset`.
    ///
    /// Generators keep their relative order and names; `embedding[i]` is the
    /// parent index of the subsystem's generator `i`.
    pub fn parabolic_subsystem(&self, subset: &[usize]) -> Result<Parabolic, CoxeterError> {
        let rank = self.rank();
        if let Some(&index) = subset.iter().find(|&&s| s >= rank) {
            return Err(CoxeterError::GeneratorOutOfRange { index, rank });
        }
        let keep: Vec<usize> = subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if keep.is_empty() {
            return Err(CoxeterError::EmptyParabolic);
        }
        let matrix = self.0.matrix.restrict(&keep);
        let names = keep.iter().map(|&i| self.0.names[i].clone()).collect();
        let arithmetic = if self.is_exact() { Arithmetic::Exact } else { Arithmetic::Float };
        let system = CoxeterSystem::with_arithmetic(matrix, names, arithmetic)?;
        Ok(Parabolic { parent: self.clone(), system, embedding: keep })
    }
}

/// A standard parabolic subsystem together with its embedding.
#[derive(Debug, Clone)]
pub struct Parabolic {
    pub parent: CoxeterSystem,
    pub system: CoxeterSystem,
    pub embedding: Vec<usize>,
}

impl Parabolic {
    pub fn embed_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&s| self.embedding[s]).collect()
    }

    pub fn embed(&self, w: &Element) -> Result<Element, CoxeterError> {
        if w.sys != self.system {
            return Err(CoxeterError::SystemMismatch);
        }
        self.parent.canonicalize(&self.embed_word(&w.word))
    }

    /// The preimage of a parent element, if it lies in the parabolic subgroup.
    pub fn restrict(&self, w: &Element) -> Result<Option<Element>, CoxeterError> {
        if w.sys != self.parent {
            return Err(CoxeterError::SystemMismatch);
        }
        let mut word = Vec::with_capacity(w.len());
        for &s in &w.word {
            match self.embedding.iter().position(|&e| e == s) {
                Some(i) => word.push(i),
                None => return Ok(None),
            }
        }
        self.system.canonicalize(&word).map(Some)
    }
}

fn exact_twice_form(b: Bond) -> QuadInt {
    match b {
        Bond::Finite(1) => QuadInt::int(2),
        Bond::Finite(2) => QuadInt::int(0),
        Bond::Finite(3) => QuadInt::int(-1),
        Bond::Finite(4) => QuadInt::new(0, -1, 0, 0),
        Bond::Finite(6) => QuadInt::new(0, 0, -1, 0),
        Bond::Infinite => QuadInt::int(-2),
        Bond::Finite(m) => unreachable!("label {m} has no exact form"),
    }
}

fn float_twice_form(b: Bond) -> f64 {
    match b {
        Bond::Finite(1) => 2.0,
        Bond::Finite(2) => 0.0,
        Bond::Finite(m) => -2.0 * (std::f64::consts::PI / m as f64).cos(),
        Bond::Infinite => -2.0,
    }
}

fn build_kernel<T: Scalar>(matrix: &CoxeterMatrix, f: impl Fn(Bond) -> T) -> Mat<T> {
    let n = matrix.rank();
    Mat { n, data: matrix.entries.iter().map(|&b| f(b)).collect() }
}

fn descent_sign<T: Scalar>(m: &Mat<T>, s: usize) -> Result<bool, CoxeterError> {
    match root_sign(m.column(s))? {
        Some(sign) => Ok(sign == Sign::Negative),
        None => Err(CoxeterError::Precision(format!(
            "root image of α_{s} is not sign-coherent beyond tolerance {SIGN_TOLERANCE}"
        ))),
    }
}

/// Canonical word, `M(w)` and `M(w⁻¹)`.
type NormalForm<T> = (Vec<usize>, Mat<T>, Mat<T>);

/// ShortLex normal form by repeatedly peeling the smallest left descent,
/// plus the matrices of the element and its inverse.
fn normal_form<T: Scalar>(kernel: &Mat<T>, word: &[usize]) -> Result<NormalForm<T>, CoxeterError> {
    let n = kernel.n;
    // M(w⁻¹) = σ_{a_k} ⋯ σ_{a_1}
    let mut rem_inv = Mat::identity(n);
    for &a in word {
        rem_inv.mul_reflection_left(a, kernel)?;
    }
    let mut canonical = Vec::with_capacity(word.len());
    'peel: loop {
        for s in 0..n {
            if descent_sign(&rem_inv, s)? {
                canonical.push(s);
                rem_inv.mul_reflection_right(s, kernel)?;
                continue 'peel;
            }
        }
        break;
    }
    let mut fwd = Mat::identity(n);
    let mut inv = Mat::identity(n);
    for &s in &canonical {
        fwd.mul_reflection_right(s, kernel)?;
        inv.mul_reflection_left(s, kernel)?;
    }
    Ok((canonical, fwd, inv))
}

#[derive(Debug, Clone)]
enum Rep {
    Exact { fwd: Mat<QuadInt>, inv: Mat<QuadInt> },
    Float { fwd: Mat<f64>, inv: Mat<f64> },
}

#[derive(Debug, Clone)]
enum InvMat {
    Exact(Mat<QuadInt>),
    Float(Mat<f64>),
}

/// Strips generators off the left of an element.
///
/// Only the matrix of the inverse of the remainder is tracked, so peeling a
/// letter costs one column operation and no normal-form computation.
#[derive(Debug, Clone)]
pub struct LeftPeeler {
    sys: CoxeterSystem,
    inv: InvMat,
    remaining: usize,
}

impl LeftPeeler {
    pub fn new(w: &Element) -> Self {
        let inv = match &w.rep {
            Rep::Exact { inv, .. } => InvMat::Exact(inv.clone()),
            Rep::Float { inv, .. } => InvMat::Float(inv.clone()),
        };
        LeftPeeler { sys: w.sys.clone(), inv, remaining: w.len() }
    }

    /// Length of the part not yet peeled.
    pub fn remaining_len(&self) -> usize {
        self.remaining
    }

    pub fn is_done(&self) -> bool {
        self.remaining == 0
    }

    pub fn is_descent(&self, s: usize) -> Result<bool, CoxeterError> {
        let rank = self.sys.rank();
        if s >= rank {
            return Err(CoxeterError::GeneratorOutOfRange { index: s, rank });
        }
        if self.remaining == 0 {
            return Ok(false);
        }
        match &self.inv {
            InvMat::Exact(m) => descent_sign(m, s),
            InvMat::Float(m) => descent_sign(m, s),
        }
    }

    /// Replaces the remainder `r` by `s·r`; `s` must be a left descent.
    pub fn peel(&mut self, s: usize) -> Result<(), CoxeterError> {
        if !self.is_descent(s)? {
            return Err(CoxeterError::Inconsistent(format!("{} is not a left descent", self.sys.name(s))));
        }
        match (&mut self.inv, &self.sys.0.kernel) {
            (InvMat::Exact(m), Kernel::Exact(k)) => m.mul_reflection_right(s, k)?,
            (InvMat::Float(m), Kernel::Float(k)) => m.mul_reflection_right(s, k)?,
            _ => unreachable!("one system, one arithmetic"),
        }
        self.remaining -= 1;
        Ok(())
    }
}

/// Simple-root coordinates of a root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootVector {
    pub coords: Vec<f64>,
}

impl RootVector {
    /// All coordinates weakly positive or all weakly negative, not all zero.
    pub fn is_sign_coherent(&self) -> bool {
        let pos = self.coords.iter().any(|&x| x >= SIGN_TOLERANCE);
        let neg = self.coords.iter().any(|&x| x <= -SIGN_TOLERANCE);
        pos != neg
    }

    pub fn is_negative(&self) -> bool {
        self.is_sign_coherent() && self.coords.iter().all(|&x| x < SIGN_TOLERANCE)
    }
}

/// An element of a Coxeter group.
///
/// Equality, hashing and ordering go through the canonical word; ordering
/// is by length first, then lexicographic on generator indices.
#[derive(Clone)]
pub struct Element {
    sys: CoxeterSystem,
    word: Vec<usize>,
    rep: Rep,
}

impl Element {
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// The ShortLex-least reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `ℓ_S(w)`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    fn check_generator(&self, s: usize) -> Result<(), CoxeterError> {
        let rank = self.sys.rank();
        if s >= rank {
            return Err(CoxeterError::GeneratorOutOfRange { index: s, rank });
        }
        Ok(())
    }

    fn same_system(&self, other: &Element) -> Result<(), CoxeterError> {
        if self.sys != other.sys {
            return Err(CoxeterError::SystemMismatch);
        }
        Ok(())
    }

    /// `ℓ(s·w) < ℓ(w)`.
    pub fn is_left_descent(&self, s: usize) -> Result<bool, CoxeterError> {
        self.check_generator(s)?;
        match &self.rep {
            Rep::Exact { inv, .. } => descent_sign(inv, s),
            Rep::Float { inv, .. } => descent_sign(inv, s),
        }
    }

    /// `ℓ(w·s) < ℓ(w)`.
    pub fn is_right_descent(&self, s: usize) -> Result<bool, CoxeterError> {
        self.check_generator(s)?;
        match &self.rep {
            Rep::Exact { fwd, .. } => descent_sign(fwd, s),
            Rep::Float { fwd, .. } => descent_sign(fwd, s),
        }
    }

    pub fn left_descents(&self) -> Result<Vec<usize>, CoxeterError> {
        let mut out = Vec::new();
        for s in 0..self.sys.rank() {
            if self.is_left_descent(s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    pub fn right_descents(&self) -> Result<Vec<usize>, CoxeterError> {
        let mut out = Vec::new();
        for s in 0..self.sys.rank() {
            if self.is_right_descent(s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Element) -> Result<Element, CoxeterError> {
        self.same_system(other)?;
        let word: Vec<usize> = self.word.iter().chain(&other.word).copied().collect();
        self.sys.canonicalize(&word)
    }

    pub fn inverse(&self) -> Result<Element, CoxeterError> {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        self.sys.canonicalize(&word)
    }

    /// `w·s`.
    pub fn times_generator(&self, s: usize) -> Result<Element, CoxeterError> {
        self.check_generator(s)?;
        let mut word = self.word.clone();
        word.push(s);
        self.sys.canonicalize(&word)
    }

    /// `s·w`.
    pub fn generator_times(&self, s: usize) -> Result<Element, CoxeterError> {
        self.check_generator(s)?;
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(s);
        word.extend_from_slice(&self.word);
        self.sys.canonicalize(&word)
    }

    /// Generators occurring in (every) reduced word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.word.iter().copied().collect()
    }

    /// `w(α_s)` in simple-root coordinates.
    pub fn root_image(&self, s: usize) -> Result<RootVector, CoxeterError> {
        self.check_generator(s)?;
        let coords = match &self.rep {
            Rep::Exact { fwd, .. } => fwd.column(s).map(|x| x.to_f64()).collect(),
            Rep::Float { fwd, .. } => fwd.column(s).collect(),
        };
        Ok(RootVector { coords })
    }

    /// The representation matrix of `w`, converted to `f64`.
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        match &self.rep {
            Rep::Exact { fwd, .. } => fwd.to_f64_rows(),
            Rep::Float { fwd, .. } => fwd.to_f64_rows(),
        }
    }

    /// Whether the representation matrices agree entrywise (exactly, or
    /// within tolerance on the float path).
    pub fn matrix_equals(&self, other: &Element) -> Result<bool, CoxeterError> {
        self.same_system(other)?;
        Ok(match (&self.rep, &other.rep) {
            (Rep::Exact { fwd: a, .. }, Rep::Exact { fwd: b, .. }) => a == b,
            (Rep::Float { fwd: a, .. }, Rep::Float { fwd: b, .. }) => a
                .data
                .iter()
                .zip(&b.data)
                .all(|(x, y)| (x - y).abs() < SIGN_TOLERANCE),
            _ => unreachable!("one system, one arithmetic"),
        })
    }

    /// Names joined by spaces; `ε` for the identity.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "ε".to_string()
        } else {
            self.sys.format_word(&self.word)
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.word == other.word
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sys.0.id.hash(state);
        self.word.hash(state);
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sys
            .0
            .id
            .cmp(&other.sys.0.id)
            .then(self.word.len().cmp(&other.word.len()))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", self.label())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems;

    fn a2() -> CoxeterSystem {
        systems::a2()
    }

    #[test]
    fn builds_affine_c3() {
        let sys = systems::affine_c3();
        assert_eq!(sys.rank(), 4);
        assert!(sys.is_exact());
        let m = sys.matrix();
        assert_eq!(m.get(0, 1), Bond::Finite(4));
        assert_eq!(m.get(2, 3), Bond::Finite(4));
        assert_eq!(m.get(1, 2), Bond::Finite(3));
        let form = sys.form();
        assert!((form[0][1] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(form[0][0], 1.0);
    }

    #[test]
    fn rank_one_system() {
        let sys = CoxeterSystem::new(CoxeterMatrix::from_encoded(&[vec![1]]).unwrap(), vec!["s".into()]).unwrap();
        let s = sys.generator(0).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.multiply(&s).unwrap().is_identity());
    }

    #[test]
    fn rejects_asymmetric_matrix() {
        let err = CoxeterMatrix::from_encoded(&[vec![1, 3], vec![2, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::Asymmetric { i: 0, j: 1, .. }));
        assert!(err.to_string().starts_with("asymmetric"));
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(matches!(
            CoxeterMatrix::from_encoded(&[vec![2, 3], vec![3, 1]]),
            Err(CoxeterError::BadDiagonal { i: 0, .. })
        ));
        assert!(matches!(
            CoxeterMatrix::from_encoded(&[vec![1, 1], vec![1, 1]]),
            Err(CoxeterError::OffDiagonal { i: 0, j: 1, .. })
        ));
        let m = CoxeterMatrix::from_encoded(&[vec![1, 3], vec![3, 1]]).unwrap();
        assert!(matches!(
            CoxeterSystem::new(m.clone(), vec!["a".into()]),
            Err(CoxeterError::NameCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            CoxeterSystem::new(m, vec!["a".into(), "a".into()]),
            Err(CoxeterError::DuplicateName(_))
        ));
    }

    #[test]
    fn identity_is_neutral() {
        let sys = systems::affine_c3();
        let e = sys.identity();
        assert_eq!(e.len(), 0);
        assert_eq!(e.label(), "ε");
        let w = sys.parse_element("s0 s2 s3 s2").unwrap();
        assert_eq!(e.multiply(&w).unwrap(), w);
        assert_eq!(w.multiply(&e).unwrap(), w);
        for s in 0..4 {
            assert!(!e.is_left_descent(s).unwrap());
        }
    }

    #[test]
    fn left_descents() {
        let sys = a2();
        let w = sys.parse_element("s1 s2").unwrap();
        assert!(w.is_left_descent(0).unwrap());
        assert!(!w.is_left_descent(1).unwrap());

        let c3 = systems::affine_c3();
        let w = c3.parse_element("s0 s2 s3 s2").unwrap();
        assert!(w.is_left_descent(2).unwrap());
        assert!(w.is_left_descent(0).unwrap());
        assert!(!w.is_left_descent(1).unwrap());
        assert!(!w.is_left_descent(3).unwrap());
    }

    #[test]
    fn canonical_forms() {
        let c3 = systems::affine_c3();
        let w = c3.canonicalize(&[2, 3, 2, 0]).unwrap();
        assert_eq!(w.word(), &[0, 2, 3, 2]);
        assert_eq!(w.len(), 4);
        assert!(c3.canonicalize(&[1, 1]).unwrap().is_identity());
        let sys = a2();
        assert_eq!(sys.canonicalize(&[1, 0, 1]).unwrap().word(), &[0, 1, 0]);
    }

    #[test]
    fn products_and_inverses() {
        let sys = a2();
        let s1 = sys.generator(0).unwrap();
        assert!(s1.multiply(&s1).unwrap().is_identity());
        let u = sys.parse_element("s1 s2").unwrap();
        let p = u.multiply(&s1).unwrap();
        assert_eq!(p.word(), &[0, 1, 0]);
        assert_eq!(u.inverse().unwrap().word(), &[1, 0]);
        assert!(u.multiply(&u.inverse().unwrap()).unwrap().is_identity());

        let c3 = systems::affine_c3();
        let p = c3.parse_element("s2 s3").unwrap().multiply(&c3.generator(2).unwrap()).unwrap();
        assert_eq!(p.label(), "s2 s3 s2");
    }

    #[test]
    fn cross_system_products_fail() {
        let a = a2();
        let b = a2();
        let x = a.generator(0).unwrap();
        let y = b.generator(0).unwrap();
        assert_ne!(x, y);
        assert_eq!(x.multiply(&y).unwrap_err(), CoxeterError::SystemMismatch);
    }

    #[test]
    fn parabolic_subsystems() {
        let c3 = systems::affine_c3();
        let p = c3.parabolic_subsystem(&[1, 2, 3]).unwrap();
        assert_eq!(p.system.rank(), 3);
        let m = p.system.matrix();
        assert_eq!((m.get(0, 1), m.get(0, 2), m.get(1, 2)), (Bond::Finite(3), Bond::Finite(2), Bond::Finite(4)));
        assert_eq!(p.system.names(), &["s1", "s2", "s3"]);
        let w = p.system.canonicalize(&[0, 1, 2]).unwrap();
        assert_eq!(p.embed(&w).unwrap().label(), "s1 s2 s3");
        assert!(p.restrict(&c3.generator(0).unwrap()).unwrap().is_none());

        let full = c3.parabolic_subsystem(&[0, 1, 2, 3]).unwrap();
        assert_eq!(full.system.matrix(), c3.matrix());
        assert_eq!(c3.parabolic_subsystem(&[0]).unwrap().system.rank(), 1);
        assert_eq!(c3.parabolic_subsystem(&[]).unwrap_err(), CoxeterError::EmptyParabolic);
    }

    #[test]
    fn exact_and_float_paths_agree_on_b3() {
        let m = CoxeterMatrix::from_upper(3, &[Bond::Finite(4), Bond::Finite(2), Bond::Finite(3)]).unwrap();
        let names: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        let exact = CoxeterSystem::with_arithmetic(m.clone(), names.clone(), Arithmetic::Exact).unwrap();
        let float = CoxeterSystem::with_arithmetic(m, names, Arithmetic::Float).unwrap();
        let word = [2, 1, 0, 1, 2, 1, 0, 1, 0, 2, 1, 2];
        assert_eq!(exact.canonicalize(&word).unwrap().word(), float.canonicalize(&word).unwrap().word());
    }

    #[test]
    fn label_five_forces_float() {
        let m = CoxeterMatrix::from_upper(2, &[Bond::Finite(5)]).unwrap();
        let sys = CoxeterSystem::with_default_names(m.clone());
        assert!(!sys.is_exact());
        assert!(matches!(
            CoxeterSystem::with_arithmetic(m, vec!["a".into(), "b".into()], Arithmetic::Exact),
            Err(CoxeterError::InexactBond(Bond::Finite(5)))
        ));
        // w_o of I₂(5) has length 5
        let w = sys.canonicalize(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(sys.canonicalize(&[1, 0, 1, 0, 1]).unwrap(), w);
    }

    #[test]
    fn matrix_equality_tracks_word_equality() {
        let sys = a2();
        let x = sys.canonicalize(&[0, 1, 0]).unwrap();
        let y = sys.canonicalize(&[1, 0, 1]).unwrap();
        assert!(x.matrix_equals(&y).unwrap());
        let z = sys.canonicalize(&[0, 1]).unwrap();
        assert!(!x.matrix_equals(&z).unwrap());
    }
}

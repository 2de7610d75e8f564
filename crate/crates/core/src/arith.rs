//! Scalars for the geometric representation.
//!
//! Bond labels in {2, 3, 4, 6, ∞} give reflection matrices with entries in
//! ℤ[√2, √3], which [`QuadInt`] represents exactly. Every other label falls
//! back to `f64` with a fixed sign tolerance.

use std::cmp::Ordering;
use std::fmt;

/// Sign tolerance for the floating-point path.
pub const SIGN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

/// Ring operations needed by the reflection matrices.
pub(crate) trait Scalar: Copy + fmt::Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, rhs: Self) -> Result<Self, ArithError>;
    fn sub(self, rhs: Self) -> Result<Self, ArithError>;
    fn mul(self, rhs: Self) -> Result<Self, ArithError>;
    /// Sign with zero meaning "indistinguishable from zero" on the float path.
    fn sign(self) -> Result<Sign, ArithError>;
    fn to_f64(self) -> f64;
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

/// `a + b√2 + c√3 + d√6` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadInt {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub d: i128,
}

impl QuadInt {
    pub const fn new(a: i128, b: i128, c: i128, d: i128) -> Self {
        QuadInt { a, b, c, d }
    }

    pub const fn int(a: i128) -> Self {
        QuadInt::new(a, 0, 0, 0)
    }
}

fn ck(v: Option<i128>) -> Result<i128, ArithError> {
    v.ok_or(ArithError::Overflow)
}

fn sum(terms: &[Option<i128>]) -> Result<i128, ArithError> {
    let mut acc: i128 = 0;
    for t in terms {
        acc = ck(acc.checked_add(ck(*t)?))?;
    }
    Ok(acc)
}

/// Sign of `a + b√2`.
fn sign_sqrt2(a: i128, b: i128) -> Result<Sign, ArithError> {
    let sa = Sign::of(a.cmp(&0));
    let sb = Sign::of(b.cmp(&0));
    if sb == Sign::Zero || sa == sb {
        return Ok(if sa == Sign::Zero { sb } else { sa });
    }
    if sa == Sign::Zero {
        return Ok(sb);
    }
    // Opposite signs: compare a² against 2b².
    let a2 = ck(a.checked_mul(a))?;
    let b2 = ck(ck(b.checked_mul(b))?.checked_mul(2))?;
    let s = Sign::of(a2.cmp(&b2));
    Ok(if sa == Sign::Positive { s } else { s.flip() })
}

impl Scalar for QuadInt {
    fn zero() -> Self {
        QuadInt::int(0)
    }

    fn one() -> Self {
        QuadInt::int(1)
    }

    fn add(self, r: Self) -> Result<Self, ArithError> {
        Ok(QuadInt::new(
            ck(self.a.checked_add(r.a))?,
            ck(self.b.checked_add(r.b))?,
            ck(self.c.checked_add(r.c))?,
            ck(self.d.checked_add(r.d))?,
        ))
    }

    fn sub(self, r: Self) -> Result<Self, ArithError> {
        Ok(QuadInt::new(
            ck(self.a.checked_sub(r.a))?,
            ck(self.b.checked_sub(r.b))?,
            ck(self.c.checked_sub(r.c))?,
            ck(self.d.checked_sub(r.d))?,
        ))
    }

    fn mul(self, r: Self) -> Result<Self, ArithError> {
        let QuadInt { a, b, c, d } = self;
        let QuadInt { a: e, b: f, c: g, d: h } = r;
        let m = |x: i128, y: i128, k: i128| x.checked_mul(y).and_then(|p| p.checked_mul(k));
        Ok(QuadInt::new(
            sum(&[m(a, e, 1), m(b, f, 2), m(c, g, 3), m(d, h, 6)])?,
            sum(&[m(a, f, 1), m(b, e, 1), m(c, h, 3), m(d, g, 3)])?,
            sum(&[m(a, g, 1), m(c, e, 1), m(b, h, 2), m(d, f, 2)])?,
            sum(&[m(a, h, 1), m(d, e, 1), m(b, g, 1), m(c, f, 1)])?,
        ))
    }

    fn sign(self) -> Result<Sign, ArithError> {
        // x = p + q√3 with p = a + b√2, q = c + d√2.
        let QuadInt { a, b, c, d } = self;
        let sp = sign_sqrt2(a, b)?;
        let sq = sign_sqrt2(c, d)?;
        if sq == Sign::Zero || sp == sq {
            return Ok(if sp == Sign::Zero { sq } else { sp });
        }
        if sp == Sign::Zero {
            return Ok(sq);
        }
        // p² - 3q² = (a² + 2b² - 3c² - 6d²) + (2ab - 6cd)√2
        let m = |x: i128, y: i128, k: i128| x.checked_mul(y).and_then(|p| p.checked_mul(k));
        let rational = sum(&[m(a, a, 1), m(b, b, 2), m(c, c, -3), m(d, d, -6)])?;
        let irrational = sum(&[m(a, b, 2), m(c, d, -6)])?;
        let s = sign_sqrt2(rational, irrational)?;
        Ok(if sp == Sign::Positive { s } else { s.flip() })
    }

    fn to_f64(self) -> f64 {
        let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
        self.a as f64 + self.b as f64 * r2 + self.c as f64 * r3 + self.d as f64 * r2 * r3
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn add(self, r: Self) -> Result<Self, ArithError> {
        Ok(self + r)
    }

    fn sub(self, r: Self) -> Result<Self, ArithError> {
        Ok(self - r)
    }

    fn mul(self, r: Self) -> Result<Self, ArithError> {
        Ok(self * r)
    }

    fn sign(self) -> Result<Sign, ArithError> {
        Ok(if self >= SIGN_TOLERANCE {
            Sign::Positive
        } else if self <= -SIGN_TOLERANCE {
            Sign::Negative
        } else {
            Sign::Zero
        })
    }

    fn to_f64(self) -> f64 {
        self
    }
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Mat<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Mat { n, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.n + c]
    }

    /// `self ← self · σ_s` where `kernel[s][j] = 2B(α_s, α_j)`.
    pub fn mul_reflection_right(&mut self, s: usize, kernel: &Mat<T>) -> Result<(), ArithError> {
        let n = self.n;
        for r in 0..n {
            let pivot = self.data[r * n + s];
            if pivot.is_zero() {
                continue;
            }
            for j in 0..n {
                let k = kernel.get(s, j);
                if k.is_zero() {
                    continue;
                }
                let cur = self.data[r * n + j];
                self.data[r * n + j] = cur.sub(pivot.mul(k)?)?;
            }
        }
        Ok(())
    }

    /// `self ← σ_s · self`; only row `s` changes.
    pub fn mul_reflection_left(&mut self, s: usize, kernel: &Mat<T>) -> Result<(), ArithError> {
        let n = self.n;
        for c in 0..n {
            let mut acc = T::zero();
            for j in 0..n {
                let k = kernel.get(s, j);
                if k.is_zero() {
                    continue;
                }
                acc = acc.add(k.mul(self.data[j * n + c])?)?;
            }
            let cur = self.data[s * n + c];
            self.data[s * n + c] = cur.sub(acc)?;
        }
        Ok(())
    }

    pub fn column(&self, c: usize) -> impl Iterator<Item = T> + '_ {
        (0..self.n).map(move |r| self.get(r, c))
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c).to_f64()).collect())
            .collect()
    }
}

/// Sign of a root given by its simple-root coordinates.
///
/// Returns `None` when the coordinates are not sign-coherent or all vanish,
/// which can only happen through loss of precision.
pub(crate) fn root_sign<T: Scalar>(coords: impl Iterator<Item = T>) -> Result<Option<Sign>, ArithError> {
    let (mut pos, mut neg) = (false, false);
    for x in coords {
        match x.sign()? {
            Sign::Positive => pos = true,
            Sign::Negative => neg = true,
            Sign::Zero => {}
        }
    }
    Ok(match (pos, neg) {
        (true, false) => Some(Sign::Positive),
        (false, true) => Some(Sign::Negative),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn quadint_products_of_radicals() {
        let r2 = QuadInt::new(0, 1, 0, 0);
        let r3 = QuadInt::new(0, 0, 1, 0);
        assert_eq!(r2.mul(r2).unwrap(), QuadInt::int(2));
        assert_eq!(r3.mul(r3).unwrap(), QuadInt::int(3));
        assert_eq!(r2.mul(r3).unwrap(), QuadInt::new(0, 0, 0, 1));
        let r6 = QuadInt::new(0, 0, 0, 1);
        assert_eq!(r6.mul(r2).unwrap(), QuadInt::new(0, 0, 2, 0));
        assert_eq!(r6.mul(r3).unwrap(), QuadInt::new(0, 3, 0, 0));
    }

    #[test]
    fn signs_near_cancellation() {
        // 7 - 5√2 ≈ -0.071
        assert_eq!(QuadInt::new(7, -5, 0, 0).sign().unwrap(), Sign::Negative);
        // 99 - 70√2 ≈ 0.00505
        assert_eq!(QuadInt::new(99, -70, 0, 0).sign().unwrap(), Sign::Positive);
        // 1 - 2√3 + √6 ≈ -0.0146
        assert_eq!(QuadInt::new(1, 0, -2, 1).sign().unwrap(), Sign::Negative);
        assert_eq!(QuadInt::new(-1, 0, 2, -1).sign().unwrap(), Sign::Positive);
        assert_eq!(QuadInt::int(0).sign().unwrap(), Sign::Zero);
    }

    #[test]
    fn float_tolerance_band_reads_as_zero() {
        assert_eq!(1e-12f64.sign().unwrap(), Sign::Zero);
        assert_eq!((-2e-9f64).sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn overflow_is_reported() {
        let big = QuadInt::int(i128::MAX / 2 + 1);
        assert_eq!(big.add(big), Err(ArithError::Overflow));
    }

    proptest! {
        #[test]
        fn exact_sign_agrees_with_float(a in -1000i128..1000, b in -1000i128..1000,
                                        c in -1000i128..1000, d in -1000i128..1000) {
            let x = QuadInt::new(a, b, c, d);
            let f = x.to_f64();
            prop_assume!(f.abs() > 1e-6);
            let expect = if f > 0.0 { Sign::Positive } else { Sign::Negative };
            prop_assert_eq!(x.sign().unwrap(), expect);
        }

        #[test]
        fn exact_mul_agrees_with_float(a in -50i128..50, b in -50i128..50, c in -50i128..50, d in -50i128..50,
                                       e in -50i128..50, f in -50i128..50, g in -50i128..50, h in -50i128..50) {
            let x = QuadInt::new(a, b, c, d);
            let y = QuadInt::new(e, f, g, h);
            let p = x.mul(y).unwrap().to_f64();
            prop_assert!((p - x.to_f64() * y.to_f64()).abs() < 1e-6 * (1.0 + p.abs()));
        }
    }
}

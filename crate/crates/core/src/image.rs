//! Core grid types: complex object-domain samples, Fourier-intensity
//! measurements, oversampled Fourier fields, and symmetry transforms.
//!
//! All grids are row-major; index (0,0) is the top-left corner. Values are
//! immutable after construction, so every type is safe to share across
//! threads.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::num::{wrap_angle, Scalar};

/// Relative threshold below which a pixel counts as zero when locating the
/// support: a pixel belongs to the support when |x| > eps * max|x|.
pub const SUPPORT_EPSILON: f64 = 1e-8;

/// Complex-valued object-domain sample.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexImage<T> {
    n1: usize,
    n2: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexImage<T> {
    pub fn new(n1: usize, n2: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if n1 == 0 || n2 == 0 || data.len() != n1 * n2 {
            return Err(Error::DimensionMismatch {
                context: "ComplexImage::new",
                expected: (n1, n2),
                found: (data.len(), 1),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { context: "ComplexImage::new" });
        }
        Ok(Self { n1, n2, data })
    }

    pub fn zeros(n1: usize, n2: usize) -> Self {
        Self { n1, n2, data: vec![Complex::new(T::zero(), T::zero()); n1 * n2] }
    }

    pub fn from_fn(n1: usize, n2: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n1 * n2);
        for r in 0..n1 {
            for c in 0..n2 {
                data.push(f(r, c));
            }
        }
        Self { n1, n2, data }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.n1
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.n2
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[r * self.n2 + c]
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Squared Frobenius norm.
    pub fn norm_sqr(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b)
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self { n1: self.n1, n2: self.n2, data: self.data.iter().map(|z| z * factor).collect() }
    }

    /// Bounding box of the entries with |x| > eps_rel * max|x|, or None when
    /// every entry falls below the threshold.
    pub fn support_box(&self, eps_rel: f64) -> Option<SupportBox> {
        let max = self.max_abs();
        if max == T::zero() {
            return None;
        }
        let thresh = max * crate::num::real::<T>(eps_rel);
        let mut bb: Option<SupportBox> = None;
        for r in 0..self.n1 {
            for c in 0..self.n2 {
                if self.get(r, c).norm() > thresh {
                    bb = Some(match bb {
                        None => SupportBox { r0: r, r1: r, c0: c, c1: c },
                        Some(b) => SupportBox {
                            r0: b.r0.min(r),
                            r1: b.r1.max(r),
                            c0: b.c0.min(c),
                            c1: b.c1.max(c),
                        },
                    });
                }
            }
        }
        bb
    }
}

/// Inclusive bounding box of an image support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportBox {
    pub r0: usize,
    pub r1: usize,
    pub c0: usize,
    pub c1: usize,
}

impl SupportBox {
    /// Midpoints of the min/max indices, rounded toward negative infinity.
    pub fn center(&self) -> (usize, usize) {
        ((self.r0 + self.r1) / 2, (self.c0 + self.c1) / 2)
    }

    /// Per-axis sums of the min and max indices; the box is symmetric under
    /// the lattice reflection n -> sums - n.
    pub fn index_sums(&self) -> (usize, usize) {
        (self.r0 + self.r1, self.c0 + self.c1)
    }
}

/// Nonnegative Fourier-intensity map Y = |F(X)|^2.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement<T> {
    m1: usize,
    m2: usize,
    data: Vec<T>,
}

impl<T: Scalar> Measurement<T> {
    pub fn new(m1: usize, m2: usize, data: Vec<T>) -> Result<Self> {
        if m1 == 0 || m2 == 0 || data.len() != m1 * m2 {
            return Err(Error::DimensionMismatch {
                context: "Measurement::new",
                expected: (m1, m2),
                found: (data.len(), 1),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { context: "Measurement::new" });
        }
        if data.iter().any(|v| *v < T::zero()) {
            return Err(Error::NegativeIntensity { context: "Measurement::new" });
        }
        Ok(Self { m1, m2, data })
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.m1
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.m2
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.m2 + c]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn max_value(&self) -> T {
        self.data.iter().copied().fold(T::zero(), T::max)
    }
}

/// Oversampled DFT coefficients of a ComplexImage.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierField<T> {
    m1: usize,
    m2: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> FourierField<T> {
    pub(crate) fn from_raw(m1: usize, m2: usize, data: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(data.len(), m1 * m2);
        Self { m1, m2, data }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.m1
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.m2
    }

    #[inline]
    pub fn get(&self, k1: usize, k2: usize) -> Complex<T> {
        self.data[k1 * self.m2 + k2]
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    /// Elementwise squared magnitudes.
    pub fn intensity(&self) -> Measurement<T> {
        Measurement {
            m1: self.m1,
            m2: self.m2,
            data: self.data.iter().map(|z| z.norm_sqr()).collect(),
        }
    }

    /// Conjugates every coefficient in place.
    pub fn conjugate(&mut self) {
        for z in &mut self.data {
            *z = z.conj();
        }
    }
}

/// Composition of the three intrinsic symmetries. Applied in a fixed order:
/// conjugate flip first, then translation by (t1, t2), then the global phase
/// factor e^{i theta}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetryTransform<T> {
    pub t1: isize,
    pub t2: isize,
    pub flip: bool,
    pub theta: T,
}

impl<T: Scalar> SymmetryTransform<T> {
    /// Builds a transform, wrapping theta into (-pi, pi].
    pub fn new(t1: isize, t2: isize, flip: bool, theta: T) -> Self {
        Self { t1, t2, flip, theta: wrap_angle(theta) }
    }

    pub fn identity() -> Self {
        Self { t1: 0, t2: 0, flip: false, theta: T::zero() }
    }
}

impl<T: Scalar> Default for SymmetryTransform<T> {
    fn default() -> Self {
        Self::identity()
    }
}

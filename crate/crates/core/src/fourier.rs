//! Oversampled discrete Fourier transforms and the phase-retrieval forward
//! model.
//!
//! Convention fixed here for the whole toolkit: the forward transform is the
//! plain unnormalized DFT of the image zero-padded to M1 x M2 (top-left
//! embedding), and the inverse carries the full 1/(M1*M2) factor followed by
//! a crop to the top-left N1 x N2 window. Under this convention
//! sum |F(x)|^2 = M1*M2 * sum |x|^2 (Parseval) and phase-only edits of the
//! field leave the intensity map untouched.

use std::sync::Arc;

use num_complex::Complex;
use num_rational::Ratio;
use rustfft::{Fft, FftPlanner};

use crate::canonical::PhaseMatrix;
use crate::error::{Error, Result};
use crate::image::{ComplexImage, FourierField, Measurement};
use crate::num::Scalar;

/// Oversampling factor, kept rational so measurement dimensions are exact.
pub type Oversample = Ratio<u32>;

/// Default 2x oversampling: a 32x32 object produces a 64x64 measurement.
pub fn default_oversample() -> Oversample {
    Ratio::from_integer(2)
}

/// Measurement dimensions ceil(oversample * N) per axis.
pub fn measurement_dims(n1: usize, n2: usize, oversample: Oversample) -> (usize, usize) {
    let num = *oversample.numer() as usize;
    let den = *oversample.denom() as usize;
    ((n1 * num + den - 1) / den, (n2 * num + den - 1) / den)
}

/// Row-column FFT plan for one grid shape.
pub(crate) struct Fft2<T> {
    m1: usize,
    m2: usize,
    row_fwd: Arc<dyn Fft<T>>,
    row_inv: Arc<dyn Fft<T>>,
    col_fwd: Arc<dyn Fft<T>>,
    col_inv: Arc<dyn Fft<T>>,
}

impl<T: Scalar> Fft2<T> {
    pub fn new(m1: usize, m2: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            m1,
            m2,
            row_fwd: planner.plan_fft_forward(m2),
            row_inv: planner.plan_fft_inverse(m2),
            col_fwd: planner.plan_fft_forward(m1),
            col_inv: planner.plan_fft_inverse(m1),
        }
    }

    fn transform(&self, data: &mut [Complex<T>], forward: bool) {
        debug_assert_eq!(data.len(), self.m1 * self.m2);
        let row = if forward { &self.row_fwd } else { &self.row_inv };
        let col = if forward { &self.col_fwd } else { &self.col_inv };
        for r in 0..self.m1 {
            row.process(&mut data[r * self.m2..(r + 1) * self.m2]);
        }
        let mut column = vec![Complex::new(T::zero(), T::zero()); self.m1];
        for c in 0..self.m2 {
            for r in 0..self.m1 {
                column[r] = data[r * self.m2 + c];
            }
            col.process(&mut column);
            for r in 0..self.m1 {
                data[r * self.m2 + c] = column[r];
            }
        }
    }

    /// Unnormalized forward DFT in place.
    pub fn forward(&self, data: &mut [Complex<T>]) {
        self.transform(data, true);
    }

    /// Inverse DFT in place, including the 1/(M1*M2) factor.
    pub fn inverse(&self, data: &mut [Complex<T>]) {
        self.transform(data, false);
        let scale = T::one() / T::from_usize(self.m1 * self.m2).unwrap();
        for z in data.iter_mut() {
            *z = z.scale(scale);
        }
    }
}

/// Unnormalized 2-D DFT of `x` zero-padded (top-left) to M1 x M2.
pub fn oversampled_dft<T: Scalar>(
    x: &ComplexImage<T>,
    m1: usize,
    m2: usize,
) -> Result<FourierField<T>> {
    let (n1, n2) = (x.height(), x.width());
    if m1 < n1 || m2 < n2 {
        return Err(Error::DimensionMismatch {
            context: "oversampled_dft",
            expected: (n1, n2),
            found: (m1, m2),
        });
    }
    let mut data = vec![Complex::new(T::zero(), T::zero()); m1 * m2];
    for r in 0..n1 {
        for c in 0..n2 {
            data[r * m2 + c] = x.get(r, c);
        }
    }
    Fft2::new(m1, m2).forward(&mut data);
    Ok(FourierField::from_raw(m1, m2, data))
}

/// Inverse DFT of `f` cropped to the top-left N1 x N2 window.
pub fn inverse_oversampled_dft<T: Scalar>(
    f: &FourierField<T>,
    n1: usize,
    n2: usize,
) -> Result<ComplexImage<T>> {
    let (m1, m2) = (f.height(), f.width());
    if n1 > m1 || n2 > m2 || n1 == 0 || n2 == 0 {
        return Err(Error::DimensionMismatch {
            context: "inverse_oversampled_dft",
            expected: (m1, m2),
            found: (n1, n2),
        });
    }
    let mut data = f.data().to_vec();
    Fft2::new(m1, m2).inverse(&mut data);
    let cropped =
        ComplexImage::from_fn(n1, n2, |r, c| data[r * m2 + c]);
    Ok(cropped)
}

/// Forward model Y = |F(X)|^2 at the given oversampling factor.
///
/// The measurement grid is ceil(oversample * N) per axis; the factor must be
/// large enough to satisfy the recoverability condition M >= 2N - 1.
pub fn forward_measure<T: Scalar>(
    x: &ComplexImage<T>,
    oversample: Oversample,
) -> Result<Measurement<T>> {
    let (n1, n2) = (x.height(), x.width());
    let (m1, m2) = measurement_dims(n1, n2, oversample);
    if m1 + 1 < 2 * n1 || m2 + 1 < 2 * n2 {
        return Err(Error::InvalidConfig(format!(
            "oversample {oversample} gives {m1}x{m2} measurement below the 2N-1 recoverability bound"
        )));
    }
    Ok(oversampled_dft(x, m1, m2)?.intensity())
}

/// Unit-modulus ramp exp(-i 2 pi (k1 t1 / M1 + k2 t2 / M2)).
///
/// Multiplying a field elementwise by the ramp equals transforming the image
/// translated by (t1, t2), for translations that keep the support inside the
/// frame. Index products are reduced modulo M per axis, so t = M yields the
/// all-ones matrix exactly.
pub fn fourier_phase_ramp<T: Scalar>(
    t1: isize,
    t2: isize,
    m1: usize,
    m2: usize,
) -> PhaseMatrix<T> {
    let axis = |m: usize, t: isize| -> Vec<Complex<T>> {
        let m_i = m as i64;
        (0..m)
            .map(|k| {
                let idx = ((k as i64 * t as i64) % m_i + m_i) % m_i;
                let angle = -(T::PI() + T::PI()) * T::from_i64(idx).unwrap()
                    / T::from_usize(m).unwrap();
                Complex::from_polar(T::one(), angle)
            })
            .collect()
    };
    let w1 = axis(m1, t1);
    let w2 = axis(m2, t2);
    let mut data = Vec::with_capacity(m1 * m2);
    for k1 in 0..m1 {
        for k2 in 0..m2 {
            data.push(w1[k1] * w2[k2]);
        }
    }
    PhaseMatrix::from_unit_data(m1, m2, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{direct_dft, random_image, rel_err};

    #[test]
    fn delta_transforms_to_constant() {
        let x = ComplexImage::new(1, 1, vec![Complex::new(1.0f64, 0.0)]).unwrap();
        let f = oversampled_dft(&x, 2, 2).unwrap();
        for z in f.data() {
            assert!((z - Complex::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn zeros_transform_to_zeros() {
        let x = ComplexImage::<f64>::zeros(4, 4);
        let f = oversampled_dft(&x, 8, 8).unwrap();
        assert!(f.data().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn rejects_undersized_target() {
        let x = ComplexImage::<f64>::zeros(4, 4);
        assert!(oversampled_dft(&x, 3, 8).is_err());
        let f = oversampled_dft(&x, 8, 8).unwrap();
        assert!(inverse_oversampled_dft(&f, 9, 4).is_err());
    }

    #[test]
    fn matches_direct_summation_oracle() {
        let x = random_image(8, 8, 0xABCD);
        let f = oversampled_dft(&x, 16, 16).unwrap();
        let oracle = direct_dft(&x, 16, 16);
        for (a, b) in f.data().iter().zip(oracle.iter()) {
            assert!((a - b).norm() <= 1e-10 * b.norm().max(1.0));
        }
    }

    #[test]
    fn parseval_under_fixed_normalization() {
        let x = random_image(8, 8, 7);
        let f = oversampled_dft(&x, 16, 16).unwrap();
        let lhs: f64 = f.data().iter().map(|z| z.norm_sqr()).sum();
        let rhs = 256.0 * x.norm_sqr();
        assert!(rel_err(lhs, rhs) < 1e-10);
    }

    #[test]
    fn round_trip_reconstructs() {
        let x = random_image(8, 8, 99);
        let f = oversampled_dft(&x, 16, 16).unwrap();
        let y = inverse_oversampled_dft(&f, 8, 8).unwrap();
        let max = x.max_abs();
        for (a, b) in x.data().iter().zip(y.data().iter()) {
            assert!((a - b).norm() <= 1e-12 * max);
        }
    }

    #[test]
    fn inverse_of_constant_field_is_delta() {
        let x = ComplexImage::new(1, 1, vec![Complex::new(1.0f64, 0.0)]).unwrap();
        let f = oversampled_dft(&x, 2, 2).unwrap();
        let y = inverse_oversampled_dft(&f, 1, 1).unwrap();
        assert!((y.get(0, 0) - Complex::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn forward_measure_dims_and_dc() {
        let x = random_image(32, 32, 5);
        let y = forward_measure(&x, default_oversample()).unwrap();
        assert_eq!((y.height(), y.width()), (64, 64));
        // DC bin is |sum x|^2 under the unnormalized forward transform.
        let s: Complex<f64> = x.data().iter().sum();
        assert!(rel_err(y.get(0, 0), s.norm_sqr()) < 1e-12);
    }

    #[test]
    fn forward_measure_rejects_degenerate_oversample() {
        let x = ComplexImage::<f64>::zeros(8, 8);
        assert!(forward_measure(&x, Ratio::new(3, 2)).is_err());
        // 2 - 1/N is still admissible: M = 15 = 2*8 - 1.
        assert!(forward_measure(&x, Ratio::new(15, 8)).is_ok());
    }

    #[test]
    fn forward_measure_of_zeros_is_zeros() {
        let x = ComplexImage::<f64>::zeros(4, 4);
        let y = forward_measure(&x, default_oversample()).unwrap();
        assert!(y.data().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn measurement_matches_squared_magnitude_oracle() {
        let x = random_image(8, 8, 21);
        let y = forward_measure(&x, default_oversample()).unwrap();
        let oracle = direct_dft(&x, 16, 16);
        for (v, z) in y.data().iter().zip(oracle.iter()) {
            assert!((v - z.norm_sqr()).abs() <= 1e-10 * z.norm_sqr().max(1.0));
        }
    }

    #[test]
    fn phase_ramp_identity_and_periodicity() {
        let ones = fourier_phase_ramp::<f64>(0, 0, 4, 6);
        assert!(ones.data().iter().all(|z| (z - Complex::new(1.0, 0.0)).norm() < 1e-15));
        let periodic = fourier_phase_ramp::<f64>(4, 0, 4, 6);
        assert!(periodic.data().iter().all(|z| (z - Complex::new(1.0, 0.0)).norm() < 1e-15));
    }

    #[test]
    fn ramp_matches_shifted_transform() {
        // Image with margins so the shift stays inside the frame.
        let small = random_image(5, 4, 17);
        let mut x = ComplexImage::<f64>::zeros(8, 8);
        let mut data = x.data().to_vec();
        for r in 0..5 {
            for c in 0..4 {
                data[(r + 1) * 8 + c + 1] = small.get(r, c);
            }
        }
        x = ComplexImage::new(8, 8, data).unwrap();
        let shifted = crate::symmetry::translate(&x, 1, 2).unwrap();
        let f = oversampled_dft(&x, 16, 16).unwrap();
        let f_shifted = oversampled_dft(&shifted, 16, 16).unwrap();
        let ramp = fourier_phase_ramp::<f64>(1, 2, 16, 16);
        let max = f_shifted.data().iter().map(|z| z.norm()).fold(0.0, f64::max);
        for k1 in 0..16 {
            for k2 in 0..16 {
                let expected = ramp.get(k1, k2) * f.get(k1, k2);
                assert!((expected - f_shifted.get(k1, k2)).norm() <= 1e-10 * max);
            }
        }
    }

    #[test]
    fn f32_round_trip() {
        let x64 = random_image(6, 6, 3);
        let x = ComplexImage::<f32>::from_fn(6, 6, |r, c| {
            let z = x64.get(r, c);
            Complex::new(z.re as f32, z.im as f32)
        });
        let f = oversampled_dft(&x, 12, 12).unwrap();
        let y = inverse_oversampled_dft(&f, 6, 6).unwrap();
        for (a, b) in x.data().iter().zip(y.data().iter()) {
            assert!((a - b).norm() <= 1e-5);
        }
    }
}

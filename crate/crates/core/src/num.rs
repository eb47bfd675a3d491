//! Scalar abstraction: the toolkit is generic over the real scalar type.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar the toolkit computes with: f32 or f64.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + rustfft::FftNum
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an f64 constant into the working scalar type.
#[inline]
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Wraps an angle into (-pi, pi].
pub fn wrap_angle<T: Scalar>(theta: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut t = theta % two_pi;
    if t > T::PI() {
        t -= two_pi;
    } else if t <= -T::PI() {
        t += two_pi;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_angle_range() {
        for k in -20..=20 {
            let theta = 0.37 + 1.11 * k as f64;
            let w = wrap_angle(theta);
            assert!(w > -std::f64::consts::PI && w <= std::f64::consts::PI);
            // same angle modulo 2 pi
            let d = (theta - w) / (2.0 * std::f64::consts::PI);
            assert!((d - d.round()).abs() < 1e-12);
        }
        assert_eq!(wrap_angle(std::f64::consts::PI), std::f64::consts::PI);
    }
}

//! Dimensionless electromagnetic primitives.
//!
//! Every length is measured in units of the emitter's transition wavelength,
//! so the transition wavenumber is exactly `2π`. The free-space Green tensor
//! away from the source point is
//!
//! ```text
//! G(r, r') = (k / 4π) [a(q) I - b(q) û⊗û] e^{iq},   q = k|r - r'|,
//! a(q) = 1/q + i/q² - 1/q³,   b(q) = 1/q + 3i/q² - 3/q³.
//! ```
//!
//! The contact term proportional to `δ(r - r')` is never evaluated: emitters
//! are required to sit strictly outside any material.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexScalar = Complex64;

/// Dimensionless wavenumber `k = ω/c` in units of inverse transition wavelength.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Wavenumber(f64);

impl Wavenumber {
    /// `k_A = 2π`: lengths in units of the transition wavelength.
    pub const TRANSITION: Wavenumber = Wavenumber(2.0 * PI);

    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 {
            Ok(Wavenumber(k))
        } else {
            Err(Error::Domain(format!("wavenumber must be positive, got {k}")))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for Wavenumber {
    fn default() -> Self {
        Wavenumber::TRANSITION
    }
}

/// A point in space, in units of the transition wavelength.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Position {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0.0, y: 0.0, z: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Position { x, y, z }
    }

    #[inline]
    pub fn dot(self, other: Position) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn from_array(a: [f64; 3]) -> Self {
        Position::new(a[0], a[1], a[2])
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Position {
    type Output = Position;
    #[inline]
    fn add(self, o: Position) -> Position {
        Position::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Position {
    type Output = Position;
    #[inline]
    fn sub(self, o: Position) -> Position {
        Position::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Position {
    type Output = Position;
    #[inline]
    fn mul(self, s: f64) -> Position {
        Position::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Position {
    type Output = Position;
    #[inline]
    fn neg(self) -> Position {
        Position::new(-self.x, -self.y, -self.z)
    }
}

/// Dense 3×3 complex tensor, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexTensor3(pub [[Complex64; 3]; 3]);

impl ComplexTensor3 {
    pub const ZERO: ComplexTensor3 = ComplexTensor3([[Complex64::new(0.0, 0.0); 3]; 3]);

    pub fn identity() -> Self {
        Self::diagonal(Complex64::new(1.0, 0.0))
    }

    pub fn diagonal(v: Complex64) -> Self {
        let mut t = Self::ZERO;
        for i in 0..3 {
            t.0[i][i] = v;
        }
        t
    }

    /// `alpha I + beta û⊗û` for a real unit vector `û`.
    #[inline]
    pub fn isotropic_plus_dyad(alpha: Complex64, beta: Complex64, unit: [f64; 3]) -> Self {
        let mut t = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = beta * (unit[i] * unit[j]);
            }
            t.0[i][i] += alpha;
        }
        t
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i];
            }
        }
        t
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut t = *self;
        t.0.iter_mut().flatten().for_each(|c| *c *= s);
        t
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut t = *self;
        t.0.iter_mut().flatten().for_each(|c| *c = f(*c));
        t
    }

    /// Elementwise imaginary part, as a complex tensor with zero imaginary part.
    pub fn imag(&self) -> Self {
        self.map(|c| Complex64::new(c.im, 0.0))
    }

    /// `d · T · d` for a real vector `d`.
    #[inline]
    pub fn contract(&self, d: [f64; 3]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                acc += self.0[i][j] * (d[i] * d[j]);
            }
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest asymmetry `|T_ij - T_ji|` relative to the largest entry.
    pub fn asymmetry(&self) -> f64 {
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0.0;
        }
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                worst = worst.max((self.0[i][j] - self.0[j][i]).norm());
            }
        }
        worst / scale
    }
}

impl Add for ComplexTensor3 {
    type Output = ComplexTensor3;
    fn add(self, o: ComplexTensor3) -> ComplexTensor3 {
        let mut t = self;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] += o.0[i][j];
            }
        }
        t
    }
}

fn check_q(q: f64) -> Result<()> {
    if q.is_finite() && q > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("q must be positive and finite, got {q}")))
    }
}

/// `a(q)` and `b(q)` together; the caller guarantees `q > 0`.
#[inline]
pub(crate) fn ab_unchecked(q: f64) -> (Complex64, Complex64) {
    let inv = 1.0 / q;
    let inv2 = inv * inv;
    let inv3 = inv2 * inv;
    (
        Complex64::new(inv - inv3, inv2),
        Complex64::new(inv - 3.0 * inv3, 3.0 * inv2),
    )
}

/// `a(q) = 1/q + i/q² - 1/q³`.
pub fn scalar_a(q: f64) -> Result<ComplexScalar> {
    check_q(q)?;
    Ok(ab_unchecked(q).0)
}

/// `b(q) = 1/q + 3i/q² - 3/q³`.
pub fn scalar_b(q: f64) -> Result<ComplexScalar> {
    check_q(q)?;
    Ok(ab_unchecked(q).1)
}

/// Free-space Green tensor between two distinct points.
pub fn vacuum_green(r: Position, rp: Position, k: Wavenumber) -> Result<ComplexTensor3> {
    let u = r - rp;
    let dist = u.norm();
    if dist.is_nan() || dist <= 0.0 {
        return Err(Error::Domain(
            "vacuum Green tensor requested at coincident points".into(),
        ));
    }
    let k = k.value();
    let q = k * dist;
    let (a, b) = ab_unchecked(q);
    let phase = Complex64::cis(q) * (k / (4.0 * PI));
    let unit = (u * (1.0 / dist)).to_array();
    Ok(ComplexTensor3::isotropic_plus_dyad(a * phase, -b * phase, unit))
}

/// `Im G(r, r) = (k / 6π) I`, the radiative part of the free-space tensor at
/// the source point. Contracted with a unit dipole it fixes the free-space
/// decay rate used for normalization.
pub fn vacuum_green_imag_coincident(k: Wavenumber) -> ComplexTensor3 {
    ComplexTensor3::diagonal(Complex64::new(k.value() / (6.0 * PI), 0.0))
}

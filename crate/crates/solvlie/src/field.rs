//! The scalar abstraction shared by the exact and the float pipelines.
//!
//! Exact scalars decide zero-ness exactly. [`Cf`] is a complex number over
//! double-double reals (about 106 mantissa bits) and decides zero-ness
//! against an absolute tolerance.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use twofloat::TwoFloat;

use crate::arith::{rational_to_f64, Rational, GR};

/// Absolute threshold below which a float scalar counts as zero.
pub const FLOAT_TOL: f64 = 1e-9;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    const EXACT: bool;
    fn conj(&self) -> Self;
    fn from_gaussian(z: &GR) -> Self;
    /// Pivot preference; only consulted by inexact scalars.
    fn magnitude(&self) -> f64;
    fn re(&self) -> Self;
    fn im(&self) -> Self;
    /// `i · self`
    fn times_i(&self) -> Self;

    /// Exact scalars ignore `tol`.
    fn is_negligible(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= tol
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(&GR::from(n))
    }
}

impl Field for GR {
    const EXACT: bool = true;
    fn conj(&self) -> Self {
        GR::conj(self)
    }
    fn from_gaussian(z: &GR) -> Self {
        z.clone()
    }
    fn magnitude(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        a.hypot(b)
    }
    fn re(&self) -> Self {
        GR::real(self.re.clone())
    }
    fn im(&self) -> Self {
        GR::real(self.im.clone())
    }
    fn times_i(&self) -> Self {
        GR::new(-self.im.clone(), self.re.clone())
    }
}

impl Field for Rational {
    const EXACT: bool = true;
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_gaussian(z: &GR) -> Self {
        assert!(z.im.is_zero(), "complex value in a real computation");
        z.re.clone()
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn re(&self) -> Self {
        self.clone()
    }
    fn im(&self) -> Self {
        <Rational as Zero>::zero()
    }
    fn times_i(&self) -> Self {
        panic!("times_i on a real scalar")
    }
}

pub fn tf(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// Double-double conversion that keeps the low word of a rational.
pub fn rational_to_tf(r: &Rational) -> TwoFloat {
    let hi = rational_to_f64(r);
    if !hi.is_finite() {
        return tf(hi);
    }
    let rest = match Rational::from_float(hi) {
        Some(h) => rational_to_f64(&(r - h)),
        None => 0.0,
    };
    TwoFloat::new_add(hi, rest)
}

const LN2_HI: f64 = std::f64::consts::LN_2;
const LN2_LO: f64 = 2.319_046_813_846_299_6e-17;

/// Double-double `e^x`. The `exp` shipped with `twofloat` loses about five
/// digits; this one reduces by `ln 2` and `2^-10`, sums a Taylor series and
/// squares back.
pub fn dd_exp(x: TwoFloat) -> TwoFloat {
    let xf = x.hi();
    if xf > 709.0 {
        return tf(f64::INFINITY);
    }
    if xf < -745.0 {
        return tf(0.0);
    }
    let k = (xf / LN2_HI).round();
    let ln2 = TwoFloat::new_add(LN2_HI, LN2_LO);
    let r = (x - ln2 * tf(k)) / tf(1024.0);
    let mut term = tf(1.0);
    let mut sum = tf(1.0);
    for i in 1..=14 {
        term = term * r / tf(i as f64);
        sum += term;
    }
    for _ in 0..10 {
        sum = sum * sum;
    }
    let scale = 2f64.powi(k as i32);
    TwoFloat::new_add(sum.hi() * scale, sum.lo() * scale)
}

/// Double-double natural logarithm by two Newton steps on `e^y = x`.
pub fn dd_ln(x: TwoFloat) -> TwoFloat {
    let mut y = tf(x.hi().ln());
    for _ in 0..2 {
        y = y + x * dd_exp(-y) - tf(1.0);
    }
    y
}

/// Complex number with double-double parts.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cf {
    pub re: TwoFloat,
    pub im: TwoFloat,
}

impl PartialEq for Cf {
    fn eq(&self, o: &Self) -> bool {
        self.re == o.re && self.im == o.im
    }
}

impl Cf {
    pub fn new(re: TwoFloat, im: TwoFloat) -> Self {
        Cf { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cf { re: tf(re), im: tf(im) }
    }

    pub fn abs(&self) -> TwoFloat {
        self.re.hypot(self.im)
    }

    pub fn abs_f64(&self) -> f64 {
        self.abs().hi()
    }

    pub fn arg(&self) -> f64 {
        self.im.hi().atan2(self.re.hi())
    }

    /// `e^{self}`
    pub fn exp(&self) -> Self {
        let m = dd_exp(self.re);
        Cf { re: m * self.im.cos(), im: m * self.im.sin() }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.hi() + self.re.lo(), self.im.hi() + self.im.lo())
    }
}

impl Add for Cf {
    type Output = Cf;
    fn add(self, o: Cf) -> Cf {
        Cf { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Cf {
    type Output = Cf;
    fn sub(self, o: Cf) -> Cf {
        Cf { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Cf {
    type Output = Cf;
    fn mul(self, o: Cf) -> Cf {
        Cf { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl Div for Cf {
    type Output = Cf;
    fn div(self, o: Cf) -> Cf {
        let n = o.re * o.re + o.im * o.im;
        Cf { re: (self.re * o.re + self.im * o.im) / n, im: (self.im * o.re - self.re * o.im) / n }
    }
}

impl Neg for Cf {
    type Output = Cf;
    fn neg(self) -> Cf {
        Cf { re: -self.re, im: -self.im }
    }
}

/// Zero-ness of a float scalar is decided against [`FLOAT_TOL`].
impl Zero for Cf {
    fn zero() -> Self {
        Cf::from_f64(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.abs_f64() <= FLOAT_TOL
    }
}

impl One for Cf {
    fn one() -> Self {
        Cf::from_f64(1.0, 0.0)
    }
}

impl Field for Cf {
    const EXACT: bool = false;
    fn conj(&self) -> Self {
        Cf { re: self.re, im: -self.im }
    }
    fn from_gaussian(z: &GR) -> Self {
        Cf { re: rational_to_tf(&z.re), im: rational_to_tf(&z.im) }
    }
    fn magnitude(&self) -> f64 {
        self.abs_f64()
    }
    fn re(&self) -> Self {
        Cf { re: self.re, im: tf(0.0) }
    }
    fn im(&self) -> Self {
        Cf { re: self.im, im: tf(0.0) }
    }
    fn times_i(&self) -> Self {
        Cf { re: -self.im, im: self.re }
    }
}

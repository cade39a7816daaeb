//! Exact arithmetic in `Q[sqrt 2]` (and its integral subring), generic over
//! the coefficient type.
//!
//! A value `a + b*sqrt(2)` is stored as the pair `(a, b)`. Every operation is
//! checked: coefficient overflow panics with a diagnostic instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Num, One, Signed, Zero};

/// Coefficient ring for [`QuadSqrt2`].
pub trait QuadBase:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Hash
    + Num
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
    fn to_big_rational(&self) -> BigRational;
}

/// Coefficient types that are fields, so that `Q[sqrt 2]` over them is a field too.
pub trait QuadField: QuadBase {}

macro_rules! int_base {
    ($($t:ty),*) => {$(
        impl QuadBase for $t {
            fn to_big_rational(&self) -> BigRational {
                BigRational::from_integer(BigInt::from(*self))
            }
        }
    )*};
}
int_base!(i64, i128);

impl QuadBase for BigInt {
    fn to_big_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

macro_rules! ratio_base {
    ($($t:ty),*) => {$(
        impl QuadBase for Ratio<$t> {
            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
        impl QuadField for Ratio<$t> {}
    )*};
}
ratio_base!(i64, i128);

impl QuadBase for BigRational {
    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }
}
impl QuadField for BigRational {}

/// `a + b*sqrt(2)` with coefficients in `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSqrt2<T: QuadBase> {
    pub a: T,
    pub b: T,
}

fn overflow() -> ! {
    panic!("coefficient overflow in Q[sqrt 2] arithmetic; use a wider coefficient type")
}

fn c_add<T: QuadBase>(x: &T, y: &T) -> T {
    x.checked_add(y).unwrap_or_else(|| overflow())
}
fn c_sub<T: QuadBase>(x: &T, y: &T) -> T {
    x.checked_sub(y).unwrap_or_else(|| overflow())
}
fn c_mul<T: QuadBase>(x: &T, y: &T) -> T {
    x.checked_mul(y).unwrap_or_else(|| overflow())
}

impl<T: QuadBase> QuadSqrt2<T> {
    pub fn new(a: T, b: T) -> Self {
        QuadSqrt2 { a, b }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero())
    }

    pub fn sqrt2() -> Self {
        Self::new(T::zero(), T::one())
    }

    pub fn from_int(n: i64) -> Self {
        let mut a = T::zero();
        let step = if n >= 0 { T::one() } else { -T::one() };
        for _ in 0..n.unsigned_abs() {
            a = c_add(&a, &step);
        }
        Self::new(a, T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of the real number `a + b*sqrt(2)`.
    ///
    /// When `a` and `b` have opposite signs the answer is decided by comparing
    /// `a^2` with `2 b^2`; the two never coincide unless both vanish.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&T::zero());
        let sb = self.b.cmp(&T::zero());
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                let lhs = self.a.checked_mul(&self.a);
                let rhs = self
                    .b
                    .checked_mul(&self.b)
                    .and_then(|bb| bb.checked_add(&bb));
                let a_dominates = match (lhs, rhs) {
                    (Some(l), Some(r)) => l > r,
                    _ => {
                        let a = self.a.to_big_rational();
                        let b = self.b.to_big_rational();
                        let two = BigRational::from_integer(BigInt::from(2));
                        &a * &a > &b * &b * two
                    }
                };
                if a_dominates {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b*sqrt(2)`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> T {
        let bb = c_mul(&self.b, &self.b);
        c_sub(&c_mul(&self.a, &self.a), &c_add(&bb, &bb))
    }

    pub fn to_big(&self) -> AlgNumber {
        QuadSqrt2::new(self.a.to_big_rational(), self.b.to_big_rational())
    }

    /// Lossy decimal approximation, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_big_rational().to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_big_rational().to_f64().unwrap_or(f64::NAN);
        a + b * std::f64::consts::SQRT_2
    }
}

impl<T: QuadField> QuadSqrt2<T> {
    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let conj = self.conjugate();
        Some(Self::new(conj.a / n.clone(), conj.b / n))
    }

    pub fn half(&self) -> Self {
        let two = T::one() + T::one();
        Self::new(self.a.clone() / two.clone(), self.b.clone() / two)
    }
}

impl<T: QuadBase> PartialOrd for QuadSqrt2<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: QuadBase> Ord for QuadSqrt2<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<T: QuadBase> Add for &QuadSqrt2<T> {
    type Output = QuadSqrt2<T>;
    fn add(self, rhs: Self) -> QuadSqrt2<T> {
        QuadSqrt2::new(c_add(&self.a, &rhs.a), c_add(&self.b, &rhs.b))
    }
}

impl<T: QuadBase> Sub for &QuadSqrt2<T> {
    type Output = QuadSqrt2<T>;
    fn sub(self, rhs: Self) -> QuadSqrt2<T> {
        QuadSqrt2::new(c_sub(&self.a, &rhs.a), c_sub(&self.b, &rhs.b))
    }
}

impl<T: QuadBase> Mul for &QuadSqrt2<T> {
    type Output = QuadSqrt2<T>;
    fn mul(self, rhs: Self) -> QuadSqrt2<T> {
        let aa = c_mul(&self.a, &rhs.a);
        let bb = c_mul(&self.b, &rhs.b);
        let ab = c_mul(&self.a, &rhs.b);
        let ba = c_mul(&self.b, &rhs.a);
        QuadSqrt2::new(c_add(&aa, &c_add(&bb, &bb)), c_add(&ab, &ba))
    }
}

impl<T: QuadBase> Neg for &QuadSqrt2<T> {
    type Output = QuadSqrt2<T>;
    fn neg(self) -> QuadSqrt2<T> {
        QuadSqrt2::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: QuadBase> $tr for QuadSqrt2<T> {
            type Output = QuadSqrt2<T>;
            fn $m(self, rhs: Self) -> QuadSqrt2<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: QuadBase> Neg for QuadSqrt2<T> {
    type Output = QuadSqrt2<T>;
    fn neg(self) -> QuadSqrt2<T> {
        -(&self)
    }
}

impl<T: QuadBase> fmt::Display for QuadSqrt2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}*sqrt2", self.a, -self.b.clone())
                } else {
                    write!(f, "{} + {}*sqrt2", self.a, self.b)
                }
            }
        }
    }
}

impl<T: QuadBase> fmt::Debug for QuadSqrt2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: QuadBase> serde::Serialize for QuadSqrt2<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<T: QuadBase> Zero for QuadSqrt2<T> {
    fn zero() -> Self {
        QuadSqrt2::zero()
    }
    fn is_zero(&self) -> bool {
        QuadSqrt2::is_zero(self)
    }
}

impl<T: QuadBase> One for QuadSqrt2<T> {
    fn one() -> Self {
        QuadSqrt2::one()
    }
}

/// Exact field elements used for bilinear-form values and root vectors.
pub type AlgNumber = QuadSqrt2<BigRational>;

/// Elements of `Z[sqrt 2]` with machine-size coefficients; the entries of the
/// reflection representation matrices live here.
pub type RingNumber = QuadSqrt2<i128>;

/// `2*B(e_s, e_t) = -2 cos(pi/m)` for `m` in {1, 2, 3, 4, inf}; `None` encodes infinity.
///
/// Doubling keeps the value inside `Z[sqrt 2]`.
pub fn doubled_cosine<T: QuadBase>(m: Option<u32>) -> QuadSqrt2<T> {
    match m {
        Some(1) => QuadSqrt2::from_int(2),
        Some(2) => QuadSqrt2::zero(),
        Some(3) => QuadSqrt2::from_int(-1),
        Some(4) => -QuadSqrt2::sqrt2(),
        None => QuadSqrt2::from_int(-2),
        Some(other) => panic!("unsupported Coxeter matrix entry {other}"),
    }
}

/// `B(e_s, e_t) = -cos(pi/m)` as an exact field element.
pub fn cosine_entry(m: Option<u32>) -> AlgNumber {
    doubled_cosine::<BigRational>(m).half()
}

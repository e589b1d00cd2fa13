//! Coefficient fields: exact rationals (characteristic 0) or the prime field
//! with `p < 2^31` elements.
//!
//! Scalars carry their own field tag so that arithmetic needs no external
//! context; mixing scalars from different fields is a programming error and
//! panics.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest admissible modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// Error raised for an inadmissible characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidCharacteristic(u64),
}

/// The coefficient field, identified by its characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The rational numbers.
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// Builds a field of the given characteristic (0 or a prime `< 2^31`).
    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 || (characteristic < MAX_MODULUS && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(FieldError::InvalidCharacteristic(characteristic))
        }
    }

    /// The characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// True when `char = 2`, the case in which all sign conditions collapse.
    pub fn is_char_two(&self) -> bool {
        self.characteristic == 2
    }

    /// The additive identity.
    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    /// The multiplicative identity.
    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// The image of an integer in the field.
    pub fn from_int(&self, n: i64) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
        } else {
            let p = self.characteristic as i64;
            Scalar::Modular {
                value: n.rem_euclid(p) as u64,
                modulus: self.characteristic,
            }
        }
    }

    /// The image of a big integer in the field.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(n.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            let r = n.mod_floor(&p);
            let value: u64 = r.try_into().expect("residue fits in u64");
            Scalar::Modular {
                value,
                modulus: self.characteristic,
            }
        }
    }

    /// `(-1)^e` in the field.
    pub fn sign(&self, e: i64) -> Scalar {
        if e.rem_euclid(2) == 0 {
            self.one()
        } else {
            self.from_int(-1)
        }
    }

    /// True if the scalar belongs to this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(_) => self.characteristic == 0,
            Scalar::Modular { modulus, .. } => *modulus == self.characteristic,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F{}", self.characteristic)
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl Scalar {
    /// The field this scalar lives in.
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::RATIONALS,
            Scalar::Modular { modulus, .. } => FieldSpec {
                characteristic: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// The rational value, if this is a characteristic-0 scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// A signed small-integer view: exact integers in characteristic 0, and
    /// the symmetric residue in `(-p/2, p/2]` for a prime field.
    pub fn to_small_int(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    i64::try_from(q.numer().clone()).ok()
                } else {
                    None
                }
            }
            Scalar::Modular { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                Some(if v > m / 2 { v - m } else { v })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: (a + p - b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Greatest common divisor of the numerators and least common multiple of
/// the denominators of a family of rationals; used to make a rational vector
/// primitive (integral with coprime entries) during fraction-free elimination.
pub fn rational_content<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> Option<BigRational> {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    let mut any = false;
    for q in values {
        if q.is_zero() {
            continue;
        }
        any = true;
        g = g.gcd(q.numer());
        l = l.lcm(q.denom());
    }
    if !any {
        return None;
    }
    Some(BigRational::new(g.abs(), l))
}

//! Coefficient scalars: exact Gaussian rationals with an optional float mode.
//!
//! Exact values are pairs of arbitrary-precision rationals `re + im*i`. Float
//! values carry a pair of doubles and compare with a componentwise tolerance
//! of [`FLOAT_TOL`]. Arithmetic between an exact and a float value promotes to
//! float; a single computation never mixes modes inside one element unless the
//! caller converts explicitly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Componentwise equality and pivot tolerance in float mode.
pub const FLOAT_TOL: f64 = 1e-9;

/// An element of the Gaussian rationals, or its float-mode stand-in.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact { re: BigRational, im: BigRational },
    Float { re: f64, im: f64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::Exact {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::Exact {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar::Exact {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact { re, im }
    }

    pub fn from_float(re: f64, im: f64) -> Self {
        Scalar::Float { re, im }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact { .. })
    }

    /// Zero test under the active mode: exact zero, or within [`FLOAT_TOL`].
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Float { re, im } => re.abs() <= FLOAT_TOL && im.abs() <= FLOAT_TOL,
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: re.clone(),
                im: -im.clone(),
            },
            Scalar::Float { re, im } => Scalar::Float { re: *re, im: -im },
        }
    }

    /// |z|^2 as a real scalar.
    pub fn abs_sq(&self) -> Scalar {
        let c = self.conj();
        self * &c
    }

    pub fn to_float(&self) -> Scalar {
        let (re, im) = self.to_f64_pair();
        Scalar::Float { re, im }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        match self {
            Scalar::Exact { re, im } => (
                re.to_f64().expect("rational to f64"),
                im.to_f64().expect("rational to f64"),
            ),
            Scalar::Float { re, im } => (*re, *im),
        }
    }

    /// Real part as an exact rational; `None` in float mode or if im != 0.
    pub fn as_real_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact { re, im } if im.is_zero() => Some(re),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        match self {
            Scalar::Exact { re, im } => {
                let norm = re * re + im * im;
                Ok(Scalar::Exact {
                    re: re / &norm,
                    im: -im / &norm,
                })
            }
            Scalar::Float { re, im } => {
                let norm = re * re + im * im;
                Ok(Scalar::Float {
                    re: re / norm,
                    im: -im / norm,
                })
            }
        }
    }

    /// Fast path for accumulating integer-matrix entries into scalars.
    pub fn mul_i64(&self, k: i64) -> Scalar {
        if k == 0 {
            return match self {
                Scalar::Exact { .. } => Scalar::zero(),
                Scalar::Float { .. } => Scalar::Float { re: 0.0, im: 0.0 },
            };
        }
        match self {
            Scalar::Exact { re, im } => {
                let k = BigRational::from_integer(BigInt::from(k));
                Scalar::Exact {
                    re: re * &k,
                    im: im * &k,
                }
            }
            Scalar::Float { re, im } => Scalar::Float {
                re: re * k as f64,
                im: im * k as f64,
            },
        }
    }

    /// Canonical `"p/q"` form of the real part; requires an exact real value.
    pub fn rational_string(&self) -> Result<String> {
        match self {
            Scalar::Exact { re, im } if im.is_zero() => Ok(rational_str(re)),
            _ => Err(Error::Parse("value is not an exact real rational".into())),
        }
    }

    /// Pinned amplitude form: exact values as `"p/q"`, floats as decimals.
    pub fn amp_strings(&self) -> (String, String) {
        match self {
            Scalar::Exact { re, im } => (rational_str(re), rational_str(im)),
            // Adding 0.0 normalizes negative zero.
            Scalar::Float { re, im } => (format!("{}", re + 0.0), format!("{}", im + 0.0)),
        }
    }

    /// Short human form: integers bare, rationals `p/q`, complex `a+bi`.
    pub fn short_string(&self) -> String {
        fn part(r: &BigRational) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                rational_str(r)
            }
        }
        match self {
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    part(re)
                } else if re.is_zero() {
                    format!("{}i", part(im))
                } else if im.is_negative() {
                    format!("{}{}i", part(re), part(im))
                } else {
                    format!("{}+{}i", part(re), part(im))
                }
            }
            Scalar::Float { re, im } => {
                // Clamp sub-tolerance noise and negative zero for display.
                let clamp = |x: f64| if x.abs() <= FLOAT_TOL { 0.0 } else { x };
                let (re, im) = (clamp(*re), clamp(*im));
                if im == 0.0 {
                    format!("{re}")
                } else {
                    format!("{re}{im:+}i")
                }
            }
        }
    }

    /// Parses `"p/q"`, a bare integer, or a decimal (the latter yields float mode).
    pub fn parse_real(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Scalar::Exact {
                re: BigRational::new(p, q),
                im: BigRational::zero(),
            })
        } else if let Ok(p) = s.parse::<BigInt>() {
            Ok(Scalar::Exact {
                re: BigRational::from_integer(p),
                im: BigRational::zero(),
            })
        } else if let Ok(f) = s.parse::<f64>() {
            Ok(Scalar::Float { re: f, im: 0.0 })
        } else {
            Err(Error::Parse(format!("bad scalar {s:?}")))
        }
    }
}

/// Canonical rational string: reduced, denominator positive, always `p/q`.
pub fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact { re: a, im: b }, Scalar::Exact { re: c, im: d }) => a == c && b == d,
            _ => {
                let (a, b) = self.to_f64_pair();
                let (c, d) = other.to_f64_pair();
                (a - c).abs() <= FLOAT_TOL && (b - d).abs() <= FLOAT_TOL
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short_string())
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident, $c:ident, $d:ident| $exact:expr, |$x:ident, $y:ident, $z:ident, $w:ident| $float:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact { re: $a, im: $b }, Scalar::Exact { re: $c, im: $d }) => $exact,
                    _ => {
                        let ($x, $y) = self.to_f64_pair();
                        let ($z, $w) = rhs.to_f64_pair();
                        $float
                    }
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(
    Add,
    add,
    |a, b, c, d| Scalar::Exact {
        re: a + c,
        im: b + d
    },
    |x, y, z, w| Scalar::Float {
        re: x + z,
        im: y + w
    }
);
scalar_binop!(
    Sub,
    sub,
    |a, b, c, d| Scalar::Exact {
        re: a - c,
        im: b - d
    },
    |x, y, z, w| Scalar::Float {
        re: x - z,
        im: y - w
    }
);
scalar_binop!(
    Mul,
    mul,
    |a, b, c, d| Scalar::Exact {
        re: a * c - b * d,
        im: a * d + b * c
    },
    |x, y, z, w| Scalar::Float {
        re: x * z - y * w,
        im: x * w + y * z
    }
);

impl Div for &Scalar {
    type Output = Scalar;
    // Field division is multiplication by the inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: -re.clone(),
                im: -im.clone(),
            },
            Scalar::Float { re, im } => Scalar::Float { re: -re, im: -im },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Best rational approximations of `x` by continued-fraction convergents,
/// restricted to denominators at most `max_den` and error at most `tol`.
/// Candidates are returned smallest denominator first.
pub fn rational_candidates(x: f64, max_den: u64, tol: f64) -> Vec<BigRational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    // Convergents p_k/q_k of the continued fraction of x.
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::from(0));
    let (mut p1, mut q1) = (BigInt::from(x.floor() as i64), BigInt::from(1));
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = BigRational::new(p1.clone(), q1.clone());
        if q1 <= BigInt::from(max_den) {
            let err = (approx.to_f64().unwrap_or(f64::INFINITY) - x).abs();
            if err <= tol {
                out.push(approx);
            }
        } else {
            break;
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = BigInt::from(a as i64);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_ops() {
        let a = Scalar::from_ratio(1, 2);
        let b = Scalar::i();
        let prod = &a * &b;
        assert_eq!(
            prod,
            Scalar::from_parts(BigRational::zero(), BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(&prod * &prod.inv().unwrap(), Scalar::one());
        assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn conjugation() {
        let z = Scalar::from_parts(BigRational::new(2.into(), 3.into()), BigRational::one());
        let zc = z.conj();
        assert_eq!(&z * &zc, Scalar::from_ratio(13, 9));
        assert_eq!(zc.conj(), z);
    }

    #[test]
    fn float_mode_tolerance() {
        let a = Scalar::from_float(1.0, 0.0);
        let b = Scalar::from_float(1.0 + 1e-12, 0.0);
        assert_eq!(a, b);
        let mixed = &Scalar::one() + &Scalar::from_float(0.0, 0.0);
        assert!(!mixed.is_exact());
        assert_eq!(mixed, Scalar::one());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Scalar::from_int(-1).amp_strings().0, "-1/1");
        assert_eq!(Scalar::from_ratio(2, -4).rational_string().unwrap(), "-1/2");
        assert_eq!(Scalar::from_int(3).short_string(), "3");
        assert_eq!((&Scalar::from_int(-1) * &Scalar::i()).short_string(), "-1i");
    }

    #[test]
    fn parse_round_trip() {
        let s = Scalar::parse_real("-7/3").unwrap();
        assert_eq!(s, Scalar::from_ratio(-7, 3));
        assert_eq!(Scalar::parse_real("4").unwrap(), Scalar::from_int(4));
        assert!(Scalar::parse_real("1/0").is_err());
        assert!(!Scalar::parse_real("0.25").unwrap().is_exact());
    }

    #[test]
    fn continued_fraction_recovers_rationals() {
        let x = -5.0 / 6.0;
        let c = rational_candidates(x, 1_000_000, 1e-9);
        assert!(c.contains(&BigRational::new((-5).into(), 6.into())));
        // Integers come out exactly.
        let c = rational_candidates(2.0, 1_000_000, 1e-9);
        assert_eq!(c[0], BigRational::from_integer(2.into()));
    }
}

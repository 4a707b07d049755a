use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Exact nonnegative rational `num / 2^shift`.
///
/// Kept normalized: either `num` is odd, or `shift` is zero (which covers zero itself).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigUint,
    shift: u64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            num: BigUint::zero(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_integer(1)
    }

    pub fn from_integer(k: u64) -> Self {
        Dyadic {
            num: BigUint::from(k),
            shift: 0,
        }
    }

    pub fn new(num: impl Into<BigUint>, shift: u64) -> Self {
        let mut d = Dyadic {
            num: num.into(),
            shift,
        };
        d.normalize();
        d
    }

    /// `(1/2)^exp`.
    pub fn half_pow(exp: u64) -> Self {
        Dyadic {
            num: BigUint::one(),
            shift: exp,
        }
    }

    /// The contribution `(1/2)^(d-1)` of a source at relative distance `d`;
    /// `d = 0` gives 2, and `None` (infinite distance) gives 0.
    pub fn decay_term(dist: Option<u32>) -> Self {
        match dist {
            None => Dyadic::zero(),
            Some(0) => Dyadic::from_integer(2),
            Some(d) => Dyadic::half_pow(u64::from(d) - 1),
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.shift = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.shift);
        if tz > 0 {
            self.num >>= tz;
            self.shift -= tz;
        }
    }

    /// Numerators of `self` and `other` over the common denominator `2^max(shift)`.
    fn aligned(&self, other: &Dyadic) -> (BigUint, BigUint, u64) {
        let shift = self.shift.max(other.shift);
        (
            &self.num << (shift - self.shift),
            &other.num << (shift - other.shift),
            shift,
        )
    }

    /// `f64` approximation for display only; never used in decisions.
    pub fn to_f64_lossy(&self) -> f64 {
        let digits = self.num.to_string();
        let value: f64 = digits.parse().unwrap_or(f64::INFINITY);
        value / 2f64.powi(self.shift.min(i32::MAX as u64) as i32)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, shift) = self.aligned(rhs);
        Dyadic::new(a + b, shift)
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, x| &acc + &x)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.num)
        } else if self.shift < 64 {
            write!(f, "{}/{}", self.num, 1u128 << self.shift)
        } else {
            write!(f, "{}/2^{}", self.num, self.shift)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Dyadic", 2)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("shift", &self.shift)?;
        st.end()
    }
}

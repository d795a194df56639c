use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A positive rational kept as an integer pair.
///
/// `reduced` records whether the pair is in lowest terms. Unreduced values
/// such as `3/3` are meaningful here because fractional powers with equal
/// values but different pairs are different graphs. Comparison and equality
/// are by value.
#[derive(Clone, Copy, Debug)]
pub struct RationalValue {
    pub num: u64,
    pub den: u64,
    pub reduced: bool,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RationalValue {
    /// The pair as given. Panics on a zero denominator.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den >= 1, "zero denominator");
        RationalValue {
            num,
            den,
            reduced: gcd(num, den) == 1,
        }
    }

    /// Lowest terms.
    pub fn reduced(num: u64, den: u64) -> Self {
        assert!(den >= 1, "zero denominator");
        let g = gcd(num, den).max(1);
        RationalValue {
            num: num / g,
            den: den / g,
            reduced: true,
        }
    }

    pub fn reduce(self) -> Self {
        Self::reduced(self.num, self.den)
    }

    pub fn integer(n: u64) -> Self {
        Self::new(n, 1)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact floor of the value.
    pub fn floor(self) -> u64 {
        self.num / self.den
    }

    /// Exact ceiling of the value.
    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

impl PartialEq for RationalValue {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RationalValue {}

impl PartialOrd for RationalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compares_by_value() {
        assert_eq!(RationalValue::new(3, 3), RationalValue::new(1, 1));
        assert!(!RationalValue::new(3, 3).reduced);
        assert!(RationalValue::new(5, 3) > RationalValue::new(3, 2));
        assert_eq!(RationalValue::new(15, 6).reduce().to_string(), "5/2");
        assert_eq!(RationalValue::new(7, 2).ceil(), 4);
        assert_eq!(RationalValue::new(7, 2).floor(), 3);
    }
}

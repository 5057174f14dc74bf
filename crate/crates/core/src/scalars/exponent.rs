use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A formal exponent `x = sum of coset symbols + integer offset`.
///
/// Coset id 0 is the integer coset and is never stored explicitly; a value
/// with an empty coset part is a plain integer. Entries of tableaux are
/// single-coset values `c + m`, but sums and differences of entries (which is
/// what the action formulas consume) may carry several coset symbols with
/// signed multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentValue {
    cosets: BTreeMap<u32, i32>,
    offset: i64,
}

impl ExponentValue {
    /// The integer-coset value `m`.
    pub fn integer(m: i64) -> Self {
        ExponentValue { cosets: BTreeMap::new(), offset: m }
    }

    /// The value `c + m` where `c` is a coset symbol (0 means the integer coset).
    pub fn in_coset(coset: u32, m: i64) -> Self {
        let mut cosets = BTreeMap::new();
        if coset != 0 {
            cosets.insert(coset, 1);
        }
        ExponentValue { cosets, offset: m }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// True when the value lies in the integer coset.
    pub fn is_integral(&self) -> bool {
        self.cosets.is_empty()
    }

    /// The coset id when the value has the entry form `c + m`; `Some(0)` for integers.
    pub fn single_coset(&self) -> Option<u32> {
        match self.cosets.len() {
            0 => Some(0),
            1 => {
                let (&c, &mult) = self.cosets.iter().next().unwrap();
                (mult == 1).then_some(c)
            }
            _ => None,
        }
    }

    /// Signed coset multiplicities (integer coset excluded).
    pub fn coset_part(&self) -> &BTreeMap<u32, i32> {
        &self.cosets
    }

    /// Two values differ by an integer exactly when their coset parts agree.
    pub fn same_coset_class(&self, other: &Self) -> bool {
        self.cosets == other.cosets
    }

    pub fn add_offset(&self, m: i64) -> Self {
        ExponentValue { cosets: self.cosets.clone(), offset: self.offset + m }
    }

    /// Scale by an integer (used for exponents like `2z - (x + y + 1)`).
    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let cosets = self
            .cosets
            .iter()
            .map(|(&c, &m)| (c, m * k as i32))
            .collect();
        ExponentValue { cosets, offset: self.offset * k }
    }

    fn merge(mut lhs: BTreeMap<u32, i32>, rhs: &BTreeMap<u32, i32>, sign: i32) -> BTreeMap<u32, i32> {
        for (&c, &m) in rhs {
            let e = lhs.entry(c).or_insert(0);
            *e += sign * m;
            if *e == 0 {
                lhs.remove(&c);
            }
        }
        lhs
    }
}

impl Add for &ExponentValue {
    type Output = ExponentValue;
    fn add(self, rhs: &ExponentValue) -> ExponentValue {
        ExponentValue {
            cosets: ExponentValue::merge(self.cosets.clone(), &rhs.cosets, 1),
            offset: self.offset + rhs.offset,
        }
    }
}

impl Sub for &ExponentValue {
    type Output = ExponentValue;
    fn sub(self, rhs: &ExponentValue) -> ExponentValue {
        ExponentValue {
            cosets: ExponentValue::merge(self.cosets.clone(), &rhs.cosets, -1),
            offset: self.offset - rhs.offset,
        }
    }
}

impl Neg for &ExponentValue {
    type Output = ExponentValue;
    fn neg(self) -> ExponentValue {
        ExponentValue {
            cosets: self.cosets.iter().map(|(&c, &m)| (c, -m)).collect(),
            offset: -self.offset,
        }
    }
}

impl fmt::Display for ExponentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cosets.is_empty() {
            return write!(f, "{}", self.offset);
        }
        let mut first = true;
        for (&c, &m) in &self.cosets {
            let sign = if m < 0 { "-" } else if first { "" } else { "+" };
            let mag = m.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}c{c}")?;
            } else {
                write!(f, "{sign}{mag}*c{c}")?;
            }
            first = false;
        }
        match self.offset.signum() {
            1 => write!(f, "+{}", self.offset),
            -1 => write!(f, "{}", self.offset),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_equal_cosets_is_integral() {
        let a = ExponentValue::in_coset(3, 5);
        let b = ExponentValue::in_coset(3, 2);
        let d = &a - &b;
        assert!(d.is_integral());
        assert_eq!(d.offset(), 3);
        assert_eq!(d, ExponentValue::integer(3));
    }

    #[test]
    fn negation_flips_offset_and_cosets() {
        let a = ExponentValue::in_coset(1, -2);
        let n = -&a;
        assert_eq!(n.offset(), 2);
        assert_eq!(n.coset_part().get(&1), Some(&-1));
        assert_eq!(&a + &n, ExponentValue::zero());
    }

    #[test]
    fn coset_zero_is_integer_coset() {
        assert_eq!(ExponentValue::in_coset(0, 7), ExponentValue::integer(7));
        assert_eq!(ExponentValue::integer(7).single_coset(), Some(0));
    }

    #[test]
    fn sums_accumulate_cosets() {
        let a = ExponentValue::in_coset(1, 0);
        let b = ExponentValue::in_coset(2, -1);
        let s = &a + &b;
        assert_eq!(s.single_coset(), None);
        assert_eq!(s.offset(), -1);
        assert_eq!(s.to_string(), "c1+c2-1");
    }

    #[test]
    fn scaling() {
        let a = ExponentValue::in_coset(1, 3);
        assert_eq!(a.scaled(2).to_string(), "2*c1+6");
        assert_eq!(a.scaled(0), ExponentValue::zero());
    }
}

use std::ops::{Add, Mul, Neg, Sub};

use super::LaurentPoly;

/// An element of `Q(q, a)` of the form `num / (1 - q^2)^k`.
///
/// Values are always kept canonical: if `k > 0` then `num` is not divisible by
/// `1 - q^2`, and zero is stored with `k = 0`. Structural equality is therefore
/// field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TraceValue {
    num: LaurentPoly,
    denom_exp: u32,
}

impl TraceValue {
    /// Builds `num / (1 - q^2)^denom_exp` and brings it to canonical form.
    pub fn new(num: LaurentPoly, denom_exp: u32) -> Self {
        let mut v = TraceValue { num, denom_exp };
        v.canonicalize_in_place();
        v
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        TraceValue { num, denom_exp: 0 }
    }

    /// The closed-strand value `(1 - a^2) / (1 - q^2)`.
    pub fn delta() -> Self {
        TraceValue {
            num: LaurentPoly::from_terms([(1, 0, 0), (-1, 0, 2)]),
            denom_exp: 1,
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.denom_exp == 0;
        }
        self.denom_exp == 0 || self.num.div_exact(&LaurentPoly::one_minus_q2()).is_err()
    }

    fn canonicalize_in_place(&mut self) {
        if self.num.is_zero() {
            self.denom_exp = 0;
            return;
        }
        let d = LaurentPoly::one_minus_q2();
        while self.denom_exp > 0 {
            match self.num.div_exact(&d) {
                Ok(z) => {
                    self.num = z;
                    self.denom_exp -= 1;
                }
                Err(_) => break,
            }
        }
    }

    /// Numerator over the larger denominator `(1 - q^2)^k`, for `k >= denom_exp`.
    pub fn numerator_at(&self, k: u32) -> LaurentPoly {
        assert!(k >= self.denom_exp, "cannot lower a denominator by lifting");
        if k == self.denom_exp {
            self.num.clone()
        } else {
            &self.num * &LaurentPoly::one_minus_q2().pow(k - self.denom_exp)
        }
    }

    /// Multiplies by a Laurent polynomial scalar.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::new(&self.num * c, self.denom_exp)
    }

    /// Multiplies by `±` a monomial. Units never affect canonical form.
    pub(crate) fn scale_unit(&self, c: &LaurentPoly) -> Self {
        debug_assert!(c.as_unit().is_some());
        TraceValue {
            num: &self.num * c,
            denom_exp: self.denom_exp,
        }
    }

    /// Equality by cross-multiplication, valid for non-canonical inputs too.
    pub fn cross_eq(&self, other: &TraceValue) -> bool {
        let k = self.denom_exp.max(other.denom_exp);
        self.numerator_at(k) == other.numerator_at(k)
    }

    pub(crate) fn into_parts(self) -> (LaurentPoly, u32) {
        (self.num, self.denom_exp)
    }
}

impl From<LaurentPoly> for TraceValue {
    fn from(p: LaurentPoly) -> Self {
        TraceValue::from_poly(p)
    }
}

impl Add<&TraceValue> for &TraceValue {
    type Output = TraceValue;
    fn add(self, rhs: &TraceValue) -> TraceValue {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let k = self.denom_exp.max(rhs.denom_exp);
        TraceValue::new(&self.numerator_at(k) + &rhs.numerator_at(k), k)
    }
}

impl Add for TraceValue {
    type Output = TraceValue;
    fn add(self, rhs: TraceValue) -> TraceValue {
        &self + &rhs
    }
}

impl Neg for &TraceValue {
    type Output = TraceValue;
    fn neg(self) -> TraceValue {
        TraceValue {
            num: -&self.num,
            denom_exp: self.denom_exp,
        }
    }
}

impl Neg for TraceValue {
    type Output = TraceValue;
    fn neg(self) -> TraceValue {
        -&self
    }
}

impl Sub<&TraceValue> for &TraceValue {
    type Output = TraceValue;
    fn sub(self, rhs: &TraceValue) -> TraceValue {
        self + &(-rhs)
    }
}

impl Sub for TraceValue {
    type Output = TraceValue;
    fn sub(self, rhs: TraceValue) -> TraceValue {
        &self - &rhs
    }
}

impl Mul<&TraceValue> for &TraceValue {
    type Output = TraceValue;
    fn mul(self, rhs: &TraceValue) -> TraceValue {
        TraceValue::new(&self.num * &rhs.num, self.denom_exp + rhs.denom_exp)
    }
}

impl Mul for TraceValue {
    type Output = TraceValue;
    fn mul(self, rhs: TraceValue) -> TraceValue {
        &self * &rhs
    }
}

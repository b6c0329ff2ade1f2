use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A monomial `q^q * a^a`.
///
/// Ordering is by `a` first, then `q`, which is the canonical display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub a: i32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, q: 0 };

    pub fn new(q: i32, a: i32) -> Self {
        Monomial { a, q }
    }

    pub fn is_one(&self) -> bool {
        self.a == 0 && self.q == 0
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            a: self.a + other.a,
            q: self.q + other.q,
        }
    }
}

/// Exact Laurent polynomial in `q` and `a` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural equality
/// is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c * q^q_exp * a^a_exp`.
    pub fn term(c: impl Into<BigInt>, q_exp: i32, a_exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(q_exp, a_exp), c.into());
        p
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::term(1, e, 0)
    }

    /// The monomial `a^e`.
    pub fn a_pow(e: i32) -> Self {
        Self::term(1, 0, e)
    }

    /// Builds a polynomial from `(coefficient, q_exp, a_exp)` triples, summing
    /// repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, q, a) in terms {
            p.add_term(Monomial::new(q, a), c.into());
        }
        p
    }

    /// `q - q^-1`, the Hecke quadratic-relation coefficient.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, 1, 0), (-1, -1, 0)])
    }

    /// `1 - q^2`, the only denominator a trace value ever carries.
    pub fn one_minus_q2() -> Self {
        Self::from_terms([(1, 0, 0), (-1, 2, 0)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: ascending `a` exponent, then ascending `q`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, q_exp: i32, a_exp: i32) -> BigInt {
        self.terms
            .get(&Monomial::new(q_exp, a_exp))
            .cloned()
            .unwrap_or_default()
    }

    /// True if any term has a nonzero power of `a`.
    pub fn involves_a(&self) -> bool {
        self.terms.keys().any(|m| m.a != 0)
    }

    /// Returns the monomial if `self` is `±1` times a single monomial, i.e. a
    /// unit of the ring.
    pub fn as_unit(&self) -> Option<(bool, Monomial)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((true, *m))
        } else if (-c).is_one() {
            Some((false, *m))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: &BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    /// Multiplies by the monomial `q^q_exp a^a_exp`.
    pub fn shift(&self, q_exp: i32, a_exp: i32) -> Self {
        let m = Monomial::new(q_exp, a_exp);
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division in the Laurent ring.
    ///
    /// Returns `z` with `z * d == self`, or `Error::NotDivisible`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let x_rows = self.rows();
        let d_rows = d.rows();
        div_exact_rows(&x_rows, &d_rows)
            .map(|rows| {
                let mut p = Self::zero();
                for (a, row) in rows {
                    for (q, c) in row {
                        p.add_term(Monomial::new(q, a), c);
                    }
                }
                p
            })
            .ok_or(Error::NotDivisible)
    }

    /// Groups terms by `a` exponent into univariate rows in `q`.
    fn rows(&self) -> BTreeMap<i32, Row> {
        let mut rows: BTreeMap<i32, Row> = BTreeMap::new();
        for (m, c) in &self.terms {
            rows.entry(m.a).or_default().insert(m.q, c.clone());
        }
        rows
    }

    /// Applies `f` to each monomial and re-collects terms.
    pub fn map_monomials(&self, mut f: impl FnMut(Monomial) -> Monomial) -> Self {
        let mut p = Self::zero();
        for (m, c) in &self.terms {
            p.add_term(f(*m), c.clone());
        }
        p
    }
}

type Row = BTreeMap<i32, BigInt>;

fn row_sub_scaled(r: &mut Row, d: &Row, c: &BigInt, shift: i32) {
    for (e, v) in d {
        let key = e + shift;
        let entry = r.entry(key).or_default();
        *entry -= v * c;
        if entry.is_zero() {
            r.remove(&key);
        }
    }
}

fn row_mul(x: &Row, y: &Row) -> Row {
    let mut out = Row::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let entry = out.entry(ex + ey).or_default();
            *entry += cx * cy;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn row_sub(r: &mut Row, d: &Row) {
    for (e, v) in d {
        let entry = r.entry(*e).or_default();
        *entry -= v;
        if entry.is_zero() {
            r.remove(e);
        }
    }
}

/// Exact division of univariate Laurent polynomials over the integers.
///
/// Any quotient exponent lies in `[min(x) - min(d), max(x) - max(d)]`; leaving
/// that window means the division is not exact.
fn div_exact_row(x: &Row, d: &Row) -> Option<Row> {
    if x.is_empty() {
        return Some(Row::new());
    }
    let (&d_lo, _) = d.first_key_value()?;
    let (&d_hi, d_lead) = d.last_key_value()?;
    let low = *x.first_key_value()?.0 - d_lo;
    let mut r = x.clone();
    let mut quot = Row::new();
    while let Some((&top, lead)) = r.last_key_value() {
        let e = top - d_hi;
        if e < low {
            return None;
        }
        let (c, rem) = lead.div_rem(d_lead);
        if !rem.is_zero() {
            return None;
        }
        row_sub_scaled(&mut r, d, &c, e);
        quot.insert(e, c);
    }
    Some(quot)
}

/// Bivariate exact division, treating polynomials as univariate in `a` with
/// coefficients in `Z[q, q^-1]`.
fn div_exact_rows(x: &BTreeMap<i32, Row>, d: &BTreeMap<i32, Row>) -> Option<BTreeMap<i32, Row>> {
    let (&d_lo, _) = d.first_key_value()?;
    let (&d_hi, d_lead) = d.last_key_value()?;
    let low = *x.first_key_value()?.0 - d_lo;
    let mut r = x.clone();
    let mut quot = BTreeMap::new();
    while let Some((&top, lead)) = r.last_key_value() {
        let e = top - d_hi;
        if e < low {
            return None;
        }
        let c = div_exact_row(lead, d_lead)?;
        for (da, drow) in d {
            let key = da + e;
            let prod = row_mul(drow, &c);
            let entry = r.entry(key).or_default();
            row_sub(entry, &prod);
            if entry.is_empty() {
                r.remove(&key);
            }
        }
        quot.insert(e, c);
    }
    Some(quot)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                out.add_term(m.mul(*n), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Sign-aware absolute value used by the text formatter.
pub(crate) fn split_sign(c: &BigInt) -> (bool, BigInt) {
    (c.is_negative(), c.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn add_examples() {
        assert!((q(1) + -q(1)).is_zero());
        let x = q(1) + LaurentPoly::a_pow(1);
        assert_eq!(x + q(1), LaurentPoly::from_terms([(2, 1, 0), (1, 0, 1)]));
        assert_eq!(LaurentPoly::one_minus_q2() + q(2), LaurentPoly::one());
    }

    #[test]
    fn mul_examples() {
        let plus = q(1) + q(-1);
        let minus = LaurentPoly::q_minus_q_inv();
        assert_eq!(&plus * &minus, q(2) - q(-2));
        assert_eq!(&minus * &LaurentPoly::one(), minus);
        assert_eq!(
            minus.pow(2),
            LaurentPoly::from_terms([(1, 2, 0), (-2, 0, 0), (1, -2, 0)])
        );
    }

    #[test]
    fn div_exact_examples() {
        let d = LaurentPoly::one_minus_q2();
        let one_minus_a2 = LaurentPoly::from_terms([(1, 0, 0), (-1, 0, 2)]);
        assert_eq!((&d * &one_minus_a2).div_exact(&d).unwrap(), one_minus_a2);
        assert!(matches!(one_minus_a2.div_exact(&d), Err(Error::NotDivisible)));
        assert!(LaurentPoly::zero().div_exact(&d).unwrap().is_zero());
        assert!(matches!(d.div_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn div_exact_rejects_non_integer_quotient() {
        let x = LaurentPoly::constant(3);
        assert!(x.div_exact(&LaurentPoly::constant(2)).is_err());
        assert_eq!(
            LaurentPoly::constant(6).div_exact(&LaurentPoly::constant(-2)).unwrap(),
            LaurentPoly::constant(-3)
        );
    }

    #[test]
    fn div_exact_by_units_and_mixed_divisors() {
        let x = LaurentPoly::from_terms([(5, -3, 2), (-7, 4, -1), (1, 0, 0)]);
        let unit = LaurentPoly::term(-1, 2, -3);
        assert_eq!((&x * &unit).div_exact(&unit).unwrap(), x);
        let d = LaurentPoly::from_terms([(2, 1, 1), (-1, -2, 0), (3, 0, -1)]);
        assert_eq!((&x * &d).div_exact(&d).unwrap(), x);
        let off = &(&x * &d) + &LaurentPoly::q_pow(9);
        assert!(off.div_exact(&d).is_err());
    }

    #[test]
    fn pow_zero_is_one() {
        assert!(q(5).pow(0).is_one());
    }
}

//! Text forms for [`LaurentPoly`] and [`TraceValue`].
//!
//! Two renderings share one term order (ascending `a` exponent, then
//! ascending `q` exponent):
//!
//! * the display form, e.g. `-q^-1 + q^-1*a^2`, used for human output;
//! * the explicit form, e.g. `-1*q^-1 + 1*q^-1*a^2`, where every term carries
//!   its coefficient and every nonzero exponent is written out. JSON uses it.
//!
//! Grammar accepted by the parser (whitespace is ignored):
//!
//! ```text
//! poly    := "0" | term (("+" | "-") term)*
//! term    := ["-" | "+"] factor ("*" factor)*
//! factor  := integer | var | var "^" ["-"] digits
//! var     := "q" | "a"
//! value   := poly | "(" poly ")" "/" "(1-q^2)^" digits
//! ```
//!
//! A `+` or `-` directly after `^` belongs to the exponent; anywhere else it
//! separates terms.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{split_sign, Monomial};
use super::{LaurentPoly, TraceValue};
use crate::error::Error;

fn write_var(out: &mut String, var: char, e: i32, explicit: bool) {
    if e == 0 {
        return;
    }
    if !out.is_empty() {
        out.push('*');
    }
    out.push(var);
    if e != 1 || explicit {
        let _ = write!(out, "^{e}");
    }
}

fn monomial_text(m: &Monomial, explicit: bool) -> String {
    let mut s = String::new();
    write_var(&mut s, 'q', m.q, explicit);
    write_var(&mut s, 'a', m.a, explicit);
    s
}

impl LaurentPoly {
    /// The explicit canonical form: `c*q^e*a^f` terms joined by ` + `.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mono = monomial_text(m, true);
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = split_sign(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = monomial_text(m, false);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn parse_exponent(s: &str, text: &str) -> Result<i32, Error> {
    s.parse::<i32>()
        .map_err(|_| Error::Parse(format!("bad exponent `{s}` in `{text}`")))
}

fn parse_term(term: &str, negative: bool, text: &str) -> Result<(BigInt, Monomial), Error> {
    if term.is_empty() {
        return Err(Error::Parse(format!("empty term in `{text}`")));
    }
    let mut coeff = BigInt::one();
    let mut mono = Monomial::ONE;
    for factor in term.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (v, Some(e)),
            None => (factor, None),
        };
        match var {
            "q" | "a" => {
                let e = match exp {
                    Some(e) => parse_exponent(e, text)?,
                    None => 1,
                };
                if var == "q" {
                    mono.q += e;
                } else {
                    mono.a += e;
                }
            }
            _ if exp.is_none() && !var.is_empty() && var.bytes().all(|b| b.is_ascii_digit()) => {
                coeff *= var
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{var}`")))?;
            }
            _ => return Err(Error::Parse(format!("bad factor `{factor}` in `{text}`"))),
        }
    }
    if negative {
        coeff = -coeff;
    }
    Ok((coeff, mono))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = LaurentPoly::zero();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    let (c, m) = parse_term(&current, negative, text)?;
                    poly = poly + LaurentPoly::term(c, m.q, m.a);
                    current.clear();
                    negative = false;
                } else if matches!(prev, Some(p) if p != '+' && p != '-') {
                    return Err(Error::Parse(format!("misplaced sign in `{text}`")));
                }
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        let (c, m) = parse_term(&current, negative, text)?;
        Ok(poly + LaurentPoly::term(c, m.q, m.a))
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_exp() == 0 {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / (1 - q^2)^{}", self.num(), self.denom_exp())
        }
    }
}

impl FromStr for TraceValue {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.rsplit_once("/(1-q^2)^") {
            Some((num, k)) => {
                let num = num
                    .strip_prefix('(')
                    .and_then(|n| n.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unbracketed numerator in `{text}`")))?;
                let k = k
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad denominator exponent in `{text}`")))?;
                Ok(TraceValue::new(num.parse()?, k))
            }
            None => Ok(TraceValue::from_poly(compact.parse()?)),
        }
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct TraceValueJson {
    num: LaurentPoly,
    denom_exp: u32,
}

impl Serialize for TraceValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TraceValueJson {
            num: self.num().clone(),
            denom_exp: self.denom_exp(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TraceValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = TraceValueJson::deserialize(d)?;
        Ok(TraceValue::new(raw.num, raw.denom_exp))
    }
}

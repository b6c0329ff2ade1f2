use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::homfly::{homfly_of_braid, HomflyValue};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

/// A Laurent polynomial in `t^{1/2}`.
///
/// Stored as a [`LaurentPoly`] in a single variable `s = t^{1/2}`, so the `q`
/// exponent of each term is the doubled `t` exponent and no `a` appears.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JonesValue(LaurentPoly);

impl JonesValue {
    pub fn one() -> Self {
        JonesValue(LaurentPoly::one())
    }

    /// `c * t^(doubled / 2)`.
    pub fn term(c: i64, doubled: i32) -> Self {
        JonesValue(LaurentPoly::term(c, doubled, 0))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i32)>) -> Self {
        JonesValue(LaurentPoly::from_terms(terms.into_iter().map(|(c, e)| (c, e, 0))))
    }

    /// `(doubled exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &num_bigint::BigInt)> + '_ {
        self.0.terms().map(|(m, c)| (m.q, c))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub(crate) fn as_poly(&self) -> LaurentPoly {
        self.0.clone()
    }

    pub fn mul(&self, other: &JonesValue) -> JonesValue {
        JonesValue(&self.0 * &other.0)
    }

    pub fn div_exact(&self, d: &JonesValue) -> Result<JonesValue> {
        self.0.div_exact(&d.0).map(JonesValue)
    }

    /// `-(t^{1/2} + t^{-1/2})`, the factor picked up by a split unknot.
    pub fn split_unknot_factor() -> JonesValue {
        let num = JonesValue::from_terms([(1, 2), (-1, -2)]);
        let den = JonesValue::from_terms([(1, -1), (-1, 1)]);
        num.div_exact(&den).expect("t - t^-1 is divisible by t^-1/2 - t^1/2")
    }
}

impl fmt::Display for JonesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = match e {
                0 => String::new(),
                2 => "t".to_string(),
                e if e % 2 == 0 => format!("t^{}", e / 2),
                e => format!("t^({e}/2)"),
            };
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

impl FromStr for JonesValue {
    type Err = Error;

    /// Parses the display form by rewriting `t^(k/2)` as `q^k` and `t^k` as
    /// `q^(2k)`, then reusing the Laurent polynomial parser.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.contains(['q', 'a']) {
            return Err(Error::Parse(format!("unexpected variable in `{text}`")));
        }
        let mut out = String::new();
        let mut rest = compact.as_str();
        while let Some(pos) = rest.find('t') {
            out.push_str(&rest[..pos]);
            rest = &rest[pos + 1..];
            let doubled = if let Some(r) = rest.strip_prefix("^(") {
                let close = r
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed exponent in `{text}`")))?;
                let body = &r[..close];
                rest = &r[close + 1..];
                let num = body
                    .strip_suffix("/2")
                    .ok_or_else(|| Error::Parse(format!("bad half exponent in `{text}`")))?;
                num.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?
            } else if let Some(r) = rest.strip_prefix('^') {
                let end = r
                    .char_indices()
                    .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
                    .map_or(r.len(), |(i, _)| i);
                let e: i32 = r[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
                rest = &r[end..];
                2 * e
            } else {
                2
            };
            out.push_str(&format!("q^{doubled}"));
        }
        out.push_str(rest);
        out.parse::<LaurentPoly>().map(JonesValue)
    }
}

impl Serialize for JonesValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for JonesValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which substitution turns HOMFLY into Jones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum MirrorBranch {
    /// `a = t`, `q = t^{-1/2}`.
    Standard,
    /// `a = t^{-1}`, `q = t^{1/2}`.
    Mirror,
}

impl MirrorBranch {
    pub fn name(self) -> &'static str {
        match self {
            MirrorBranch::Standard => "standard",
            MirrorBranch::Mirror => "mirror",
        }
    }

    /// Image of a monomial in `s = t^{1/2}`.
    fn substitute(self, m: Monomial) -> Monomial {
        let e = match self {
            MirrorBranch::Standard => -m.q + 2 * m.a,
            MirrorBranch::Mirror => m.q - 2 * m.a,
        };
        Monomial::new(e, 0)
    }
}

impl fmt::Display for MirrorBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Value of the Hopf link closure of `σ_1 σ_1`.
pub fn hopf_reference() -> JonesValue {
    JonesValue::from_terms([(-1, 5), (-1, 1)])
}

/// The substitution branch, frozen on first use as the one that sends the
/// closure of `σ_1 σ_1` to `-t^{5/2} - t^{1/2}`.
pub fn mirror_branch() -> MirrorBranch {
    static BRANCH: OnceLock<MirrorBranch> = OnceLock::new();
    *BRANCH.get_or_init(|| {
        let hopf = homfly_of_braid(&BraidWord::new(2, vec![1, 1]).expect("rank 2"));
        let unknot = homfly_of_braid(&BraidWord::identity(1).expect("rank 1"));
        let target = hopf_reference();
        let matches: Vec<MirrorBranch> = [MirrorBranch::Standard, MirrorBranch::Mirror]
            .into_iter()
            .filter(|&b| specialize(&hopf, &unknot, b).ok().as_ref() == Some(&target))
            .collect();
        assert_eq!(matches.len(), 1, "exactly one branch must reproduce the Hopf link");
        matches[0]
    })
}

/// `H(L) / H(unknot)` under the given substitution.
pub fn specialize(h: &HomflyValue, unknot: &HomflyValue, branch: MirrorBranch) -> Result<JonesValue> {
    let (num, k) = h.value.clone().into_parts();
    let (u_num, u_k) = unknot.value.clone().into_parts();
    let sub = |p: &LaurentPoly| p.map_monomials(|m| branch.substitute(m));
    let denom_base = sub(&LaurentPoly::one_minus_q2());
    let (top, bottom) = if k >= u_k {
        (sub(&num), &sub(&u_num) * &denom_base.pow(k - u_k))
    } else {
        (&sub(&num) * &denom_base.pow(u_k - k), sub(&u_num))
    };
    top.div_exact(&bottom).map(JonesValue)
}

/// Jones polynomial of the closure of `w`, normalized so the unknot is 1.
pub fn jones_of_braid(w: &BraidWord) -> Result<JonesValue> {
    let unknot = homfly_of_braid(&BraidWord::identity(1)?);
    specialize(&homfly_of_braid(w), &unknot, mirror_branch())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, rank: usize) -> BraidWord {
        BraidWord::parse(s, Some(rank)).unwrap()
    }

    #[test]
    fn branch_is_standard() {
        assert_eq!(mirror_branch(), MirrorBranch::Standard);
    }

    #[test]
    fn unknot_and_hopf() {
        assert!(jones_of_braid(&word("", 1)).unwrap().is_one());
        let hopf = jones_of_braid(&word("1 1", 2)).unwrap();
        assert_eq!(hopf, hopf_reference());
        assert_eq!(hopf.to_string(), "-t^(1/2) - t^(5/2)");
    }

    #[test]
    fn negative_hopf_is_the_mirror() {
        let v = jones_of_braid(&word("-1 -1", 2)).unwrap();
        assert_eq!(v, JonesValue::from_terms([(-1, -5), (-1, -1)]));
    }

    /// Right-handed trefoil `σ_1^3`: `t + t^3 - t^4`.
    #[test]
    fn trefoil() {
        let v = jones_of_braid(&word("1 1 1", 2)).unwrap();
        assert_eq!(v, JonesValue::from_terms([(1, 2), (1, 6), (-1, 8)]));
    }

    /// Figure-eight `σ_1 σ_2^-1 σ_1 σ_2^-1`: `t^-2 - t^-1 + 1 - t + t^2`.
    #[test]
    fn figure_eight() {
        let v = jones_of_braid(&word("1 -2 1 -2", 3)).unwrap();
        assert_eq!(v, JonesValue::from_terms([(1, -4), (-1, -2), (1, 0), (-1, 2), (1, 4)]));
    }

    #[test]
    fn split_factor() {
        assert_eq!(JonesValue::split_unknot_factor(), JonesValue::from_terms([(-1, 1), (-1, -1)]));
        let two = jones_of_braid(&word("", 2)).unwrap();
        assert_eq!(two, JonesValue::split_unknot_factor());
    }

    #[test]
    fn text_round_trip() {
        for v in [
            hopf_reference(),
            JonesValue::from_terms([(1, -4), (-3, -1), (2, 0), (-1, 2), (7, 9)]),
            JonesValue::one(),
        ] {
            assert_eq!(v.to_string().parse::<JonesValue>().unwrap(), v);
        }
        assert_eq!(
            JonesValue::from_terms([(1, -4), (-1, 2)]).to_string(),
            "t^-2 - t"
        );
        assert!("q + t".parse::<JonesValue>().is_err());
        assert!("t^(1/3)".parse::<JonesValue>().is_err());
    }
}

//! Dense polynomials in the spectral parameter `lambda` with exact rational
//! coefficients.
//!
//! [`LambdaPoly`] is the currency of the eigenvalue pipeline: the four
//! characteristic entries and their determinant are all values of this type,
//! so the determinant's coefficients can be compared literally against
//! hand-expanded references. The `Display`/`FromStr` pair is a lossless text
//! format (`−1 − 1/6·λ + 11/120·λ²`); whatever `Display` emits, `FromStr`
//! reads back to the identical coefficient sequence.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::transform::{parse_rational, rational_to_f64, Rational};

/// Polynomial in `lambda`, stored densely: `coeffs[k]` multiplies `lambda^k`.
///
/// The trailing (highest-index) coefficient is nonzero; the zero polynomial
/// is the empty coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    /// Normalizing constructor: strips trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·lambda^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        LambdaPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `lambda^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::new(coeffs)
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, lambda: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * lambda + c;
        }
        acc
    }

    /// Horner evaluation with the coefficients rounded to `f64` once.
    pub fn evaluate_f64(&self, lambda: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * lambda + rational_to_f64(c))
    }
}

const MINUS: char = '\u{2212}'; // −
const DOT: char = '\u{00B7}'; // ·
const LAMBDA: char = '\u{03BB}'; // λ

fn superscript(power: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    power
        .to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn superscript_digit_value(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|p| p as u32)
}

impl fmt::Display for LambdaPoly {
    /// Terms in ascending powers: `−1 − 1/6·λ + 11/120·λ² − 89/15360·λ³`.
    /// Unit coefficients on positive powers are elided (`λ²`, not `1·λ²`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "{MINUS}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " {MINUS} ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}{DOT}")?;
                    }
                    write!(f, "{LAMBDA}")?;
                    if k > 1 {
                        write!(f, "{}", superscript(k))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;

    /// Parses the `Display` format; also tolerates ASCII variants (`-` for
    /// `−`, `*` for `·`, `lambda^2` for `λ²`).
    fn from_str(s: &str) -> Result<Self> {
        let fail = |detail: &str| Error::ParsePoly(format!("{detail}: {s:?}"));
        let text = s.trim();
        if text.is_empty() {
            return Err(fail("empty polynomial"));
        }
        if text == "0" {
            return Ok(Self::zero());
        }
        // Split into signed terms at top-level +/− separators.
        let mut terms: Vec<(bool, String)> = Vec::new(); // (negative, body)
        let mut current = String::new();
        let mut negative = false;
        let mut seen_body = false;
        for ch in text.chars() {
            let is_minus = ch == MINUS || ch == '-';
            if (is_minus || ch == '+') && !seen_body {
                if is_minus {
                    negative = !negative;
                }
                continue;
            }
            if is_minus || ch == '+' {
                terms.push((negative, std::mem::take(&mut current)));
                negative = is_minus;
                seen_body = false;
                continue;
            }
            if !ch.is_whitespace() {
                seen_body = true;
            }
            current.push(ch);
        }
        terms.push((negative, current));

        let mut coeffs: Vec<Rational> = Vec::new();
        for (neg, body) in terms {
            let body = body.trim();
            if body.is_empty() {
                return Err(fail("empty term"));
            }
            let (coeff_text, power) = split_term(body).ok_or_else(|| fail("malformed term"))?;
            let coeff_text = coeff_text.trim().trim_end_matches([DOT, '*']).trim();
            let mut coeff = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text).map_err(|_| fail("bad coefficient"))?
            };
            if neg {
                coeff = -coeff;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(Self::new(coeffs))
    }
}

/// Splits one unsigned term into (coefficient text, power of lambda).
fn split_term(body: &str) -> Option<(&str, usize)> {
    let marker = if let Some(pos) = body.find(LAMBDA) {
        Some((pos, LAMBDA.len_utf8()))
    } else {
        body.find("lambda").map(|pos| (pos, "lambda".len()))
    };
    let Some((pos, marker_len)) = marker else {
        return Some((body, 0)); // constant term
    };
    let after = body[pos + marker_len..].trim();
    let power = if after.is_empty() {
        1
    } else if let Some(exp) = after.strip_prefix('^') {
        exp.trim().parse().ok()?
    } else {
        // Unicode superscript digits.
        let mut value: usize = 0;
        for c in after.chars() {
            value = value * 10 + superscript_digit_value(c)? as usize;
        }
        value
    };
    Some((&body[..pos], power))
}

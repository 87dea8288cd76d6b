//! Exact sums of square roots, used for edge and chain lengths.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A value `Σ c·√d` with rational coefficients `c` and distinct squarefree
/// radicands `d` (`d = 1` holds the rational part).
///
/// Square roots of distinct squarefree integers are linearly independent over
/// the rationals, so the term map is a canonical form: equality is term-wise
/// and a non-empty sum is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(BigUint::one(), c);
        out
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v.into()))
    }

    /// `c·√d` for any positive integer `d`; square factors of `d` are pulled
    /// into the coefficient.
    pub fn term(c: Rational, d: impl Into<BigUint>) -> Self {
        let d = d.into();
        let mut out = Self::zero();
        if d.is_zero() {
            return out;
        }
        let (outer, core) = squarefree_split(&d);
        out.add_term(core, c * Rational::from_integer(BigInt::from(outer)));
        out
    }

    /// Exact square root of a non-negative rational.
    pub fn sqrt_of(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::Domain(format!("square root of negative value {q}")));
        }
        // √(p/r) = √(p·r) / r
        let p = q.numer().to_biguint().expect("non-negative");
        let r = q.denom().to_biguint().expect("positive");
        let coeff = Rational::new(BigInt::one(), BigInt::from(r.clone()));
        Ok(Self::term(coeff, p * r))
    }

    fn add_term(&mut self, d: BigUint, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterator over `(d, c)` in increasing `d`.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `√d` (zero if absent); `d` must be squarefree.
    pub fn coefficient(&self, d: u64) -> Rational {
        self.terms
            .get(&BigUint::from(d))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn rational_part(&self) -> Rational {
        self.coefficient(1)
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|d| d.is_one())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero();
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * k);
        }
        out
    }

    /// Exact sign. Bounds each radical by integer square roots at growing
    /// precision until the interval excludes zero; this terminates because a
    /// non-empty canonical sum is non-zero.
    pub fn signum(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if self.is_rational() {
            return self.rational_part().cmp(&Rational::zero());
        }
        let mut bits: u64 = 64;
        loop {
            let (lo, hi) = self.enclosure(bits);
            if lo > Rational::zero() {
                return Ordering::Greater;
            }
            if hi < Rational::zero() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    /// Rational interval containing the value, each radical resolved to
    /// within `2^-bits`.
    pub fn enclosure(&self, bits: u64) -> (Rational, Rational) {
        let scale = BigUint::one() << bits;
        let denom = BigInt::from(scale.clone());
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (d, c) in &self.terms {
            if d.is_one() {
                lo += c;
                hi += c;
                continue;
            }
            let floor = (d * &scale * &scale).sqrt();
            let r_lo = Rational::new(BigInt::from(floor.clone()), denom.clone());
            let r_hi = Rational::new(BigInt::from(floor + 1u32), denom.clone());
            if c.is_positive() {
                lo += c * &r_lo;
                hi += c * &r_hi;
            } else {
                lo += c * &r_hi;
                hi += c * &r_lo;
            }
        }
        (lo, hi)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| {
                let cf = c.to_f64().unwrap_or(f64::NAN);
                let df = d.to_f64().unwrap_or(f64::NAN);
                cf * df.sqrt()
            })
            .sum()
    }

    /// Square of the value, as an exact radical sum.
    pub fn squared(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// Splits `m = outer²·core` with `core` squarefree.
pub fn squarefree_split(m: &BigUint) -> (BigUint, BigUint) {
    if let Some(small) = m.to_u64() {
        let (o, c) = squarefree_split_u64(small);
        return (o.into(), c.into());
    }
    let mut rest = m.clone();
    let mut outer = BigUint::one();
    let mut core = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p * &p <= rest {
        let mut exp = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            exp += 1;
        }
        for _ in 0..exp / 2 {
            outer *= &p;
        }
        if exp % 2 == 1 {
            core *= &p;
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    // What is left has at most two prime factors, both larger than p.
    let root = rest.sqrt();
    if &root * &root == rest {
        outer *= root;
    } else {
        core *= rest;
    }
    (outer, core)
}

fn squarefree_split_u64(mut rest: u64) -> (u64, u64) {
    let mut outer = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= rest {
        let mut exp = 0;
        while rest % p == 0 {
            rest /= p;
            exp += 1;
        }
        for _ in 0..exp / 2 {
            outer *= p;
        }
        if exp % 2 == 1 {
            core *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if root * root == rest {
        outer *= root;
    } else {
        core *= rest;
    }
    (outer, core)
}

impl Add for RadicalSum {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (d, c) in rhs.terms {
            self.add_term(d, c);
        }
        self
    }
}

impl Neg for RadicalSum {
    type Output = Self;

    fn neg(self) -> Self {
        RadicalSum {
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Sub for RadicalSum {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RadicalSum {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = RadicalSum::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                // √d1·√d2 = g·√(d1·d2/g²) with g = gcd(d1, d2), both squarefree.
                let g = num_integer::Integer::gcd(d1, d2);
                let core = (d1 / &g) * (d2 / &g);
                let c = c1 * c2 * Rational::from_integer(BigInt::from(g));
                out.add_term(core, c);
            }
        }
        out
    }
}

impl std::iter::Sum for RadicalSum {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RadicalSum::zero(), |a, b| a + b)
    }
}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadicalSum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl From<Rational> for RadicalSum {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl fmt::Display for RadicalSum {
    /// Renders as e.g. `20+6√2`, `(5/2)√5` or `-1+√3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if d.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write!(f, "√{d}")?;
        }
        Ok(())
    }
}

impl FromStr for RadicalSum {
    type Err = Error;

    /// Accepts the `Display` form; `sqrt(d)` may be used in place of `√d`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a radical sum: `{s}`"));
        let text: String = s
            .replace("sqrt(", "√(")
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*' && *c != '·')
            .collect();
        if text.is_empty() {
            return Err(bad());
        }
        // Split into signed terms at top-level +/- signs.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        for ch in text.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if !current.is_empty() {
                        pieces.push((negative, std::mem::take(&mut current)));
                    } else if ch == '-' && !pieces.is_empty() {
                        return Err(bad());
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(bad());
        }
        pieces.push((negative, current));

        let mut out = RadicalSum::zero();
        for (neg, piece) in pieces {
            let (coef_text, radicand) = match piece.find('√') {
                Some(idx) => {
                    let rad = piece[idx + '√'.len_utf8()..]
                        .trim_start_matches('(')
                        .trim_end_matches(')');
                    let d: BigUint = rad.parse().map_err(|_| bad())?;
                    (piece[..idx].to_string(), d)
                }
                None => (piece.clone(), BigUint::one()),
            };
            let coef_text = coef_text.trim_start_matches('(').trim_end_matches(')');
            let mut c = if coef_text.is_empty() {
                Rational::one()
            } else {
                coef_text.parse::<Rational>().map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            out = out + RadicalSum::term(c, radicand);
        }
        Ok(out)
    }
}

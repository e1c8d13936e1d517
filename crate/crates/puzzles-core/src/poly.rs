//! Exact multivariate polynomials in the equivariant variables y1, y2, ...
//!
//! Coefficients are arbitrary-precision integers. Terms are kept in a
//! canonical order (total degree descending, then the dense exponent vector
//! ascending), so equal polynomials print and serialize identically; the
//! weight y2 - y1 prints exactly so.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// A power product of variables, sparse and sorted by variable index.
/// Variables are 1-based; exponents are positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: u32) -> Monomial {
        debug_assert!(v >= 1);
        Monomial { factors: vec![(v, 1)] }
    }

    fn from_unsorted(mut factors: Vec<(u32, u32)>) -> Monomial {
        factors.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_unsorted(factors)
    }

    fn map_vars(&self, f: &dyn Fn(u32) -> u32) -> Monomial {
        Monomial::from_unsorted(self.factors.iter().map(|&(v, e)| (f(v), e)).collect())
    }

    /// Lexicographic comparison of the dense exponent vectors (e1, e2, ...).
    fn dense_cmp(&self, other: &Monomial) -> Ordering {
        let mut a = self.factors.iter().peekable();
        let mut b = other.factors.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    // The earlier variable has exponent 0 on the other side.
                    Ordering::Less => return ea.cmp(&0).then(Ordering::Greater),
                    Ordering::Greater => return 0.cmp(&eb).then(Ordering::Less),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.dense_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with BigInt coefficients; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::unit(), c);
        p
    }

    /// The weight factor y_j - y_i.
    pub fn var_diff(j: u32, i: u32) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(j), BigInt::one());
        p.add_term(Monomial::var(i), -BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> Poly {
        if k == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Value at y = 0: the constant term.
    pub fn eval_zero(&self) -> BigInt {
        self.terms.get(&Monomial::unit()).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Substitutes variables through `f` (a bijection on the variables in
    /// use, e.g. reversing an interval).
    pub fn apply_var_map(&self, f: impl Fn(u32) -> u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "y{}", v)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson {
    coeff: serde_json::Value,
    exps: BTreeMap<u32, u32>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let coeff = match i64::try_from(c.clone()) {
                Ok(v) => serde_json::Value::from(v),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            let exps = m.factors.iter().copied().collect();
            seq.serialize_element(&TermJson { coeff, exps })?;
        }
        seq.end()
    }
}

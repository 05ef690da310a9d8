//! Exact bivariate polynomials in `p` and `q` with arbitrary-precision integer
//! coefficients, together with the p,q-integers, p,q-factorials and p,q-Gaussian
//! coefficients built on top of them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// A polynomial in two variables `p` and `q` with `BigInt` coefficients.
///
/// The zero polynomial has an empty term map; stored coefficients are never zero.
/// Values are immutable once built: all arithmetic returns fresh polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivarPoly {
    // (p-exponent, q-exponent) -> nonzero coefficient
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// `c * p^dp * q^dq`; a zero coefficient yields the zero polynomial.
    pub fn monomial(dp: u32, dq: u32, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dp, dq), c);
        }
        Self { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dp: u32, dq: u32) -> BigInt {
        self.terms.get(&(dp, dq)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: total degree descending, then p-degree descending.
    pub fn canonical_terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&e, c)| (e, c)).collect();
        v.sort_by(|a, b| {
            let ta = a.0 .0 + a.0 .1;
            let tb = b.0 .0 + b.0 .1;
            tb.cmp(&ta).then(b.0 .0.cmp(&a.0 .0))
        });
        v
    }

    /// Exchange the roles of `p` and `q` in every term.
    pub fn swap_vars(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(dp, dq), c)| ((dq, dp), c.clone()))
            .collect();
        Self { terms }
    }

    /// `true` iff the polynomial is invariant under exchanging `p` and `q`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_vars()
    }

    pub fn eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(dp, dq), c) in &self.terms {
            acc += c * p.pow(dp) * q.pow(dq);
        }
        acc
    }

    fn insert_term(&mut self, e: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.insert_term(e, c.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(ap, aq), ac) in &self.terms {
            for (&(bp, bq), bc) in &rhs.terms {
                out.insert_term((ap + bp, aq + bq), ac * bc);
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((dp, dq), c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = render_vars(dp, dq);
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
        }
        Ok(())
    }
}

fn render_vars(dp: u32, dq: u32) -> String {
    let mut s = String::new();
    match dp {
        0 => {}
        1 => s.push('p'),
        _ => s.push_str(&format!("p^{dp}")),
    }
    match dq {
        0 => {}
        1 => s.push('q'),
        _ => s.push_str(&format!("q^{dq}")),
    }
    s
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    p: u32,
    q: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            terms: self
                .canonical_terms()
                .into_iter()
                .map(|((p, q), c)| TermRepr {
                    p,
                    q,
                    c: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut out = BivarPoly::zero();
        for t in repr.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            out.insert_term((t.p, t.q), c);
        }
        Ok(out)
    }
}

/// The p,q-integer `[r] = p^{r-1} + p^{r-2} q + ... + q^{r-1}`; `[0] = 0`.
pub fn pq_integer(r: u32) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for j in 0..r {
        out.insert_term((r - 1 - j, j), BigInt::one());
    }
    out
}

/// The p,q-factorial `[r]! = [1][2]...[r]`; `[0]! = 1`.
pub fn pq_factorial(r: u32) -> BivarPoly {
    let mut out = BivarPoly::one();
    for i in 1..=r {
        out = &out * &pq_integer(i);
    }
    out
}

/// The p,q-Gaussian coefficient `[n over k]`.
///
/// Computed division-free by the homogeneous Pascal recurrence
/// `G(n,k) = p^k G(n-1,k) + q^{n-k} G(n-1,k-1)` with `G(n,0) = 1`.
/// Returns zero when `k < 0` or `k > n`.
pub fn pq_gaussian(n: u32, k: i64) -> BivarPoly {
    if k < 0 || k > n as i64 {
        return BivarPoly::zero();
    }
    let k = k as u32;
    // row-by-row DP over the recurrence; row nn holds G(nn, 0..=min(nn,k))
    let mut row: Vec<BivarPoly> = vec![BivarPoly::one()];
    for nn in 1..=n {
        let top = k.min(nn);
        let mut next: Vec<BivarPoly> = Vec::with_capacity(top as usize + 1);
        next.push(BivarPoly::one());
        for kk in 1..=top {
            let mut g = BivarPoly::zero();
            if (kk as usize) < row.len() {
                g = &g + &(&BivarPoly::monomial(kk, 0, BigInt::one()) * &row[kk as usize]);
            }
            g = &g + &(&BivarPoly::monomial(0, nn - kk, BigInt::one()) * &row[kk as usize - 1]);
            next.push(g);
        }
        row = next;
    }
    row[k as usize].clone()
}

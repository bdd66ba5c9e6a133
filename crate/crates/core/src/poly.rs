//! Truncated multivariate polynomials with exact rational coefficients.
//!
//! Terms above the truncation degree are discarded by every operation, so a
//! value of truncation K carries the exact Taylor data of orders 0..=K.

use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

type Mono = Vec<u16>;

/// A polynomial in `nvars` variables, truncated at total degree `trunc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    nvars: usize,
    trunc: u32,
    terms: BTreeMap<Mono, BigRational>,
}

fn total_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

impl TruncPoly {
    pub fn zero(nvars: usize, trunc: u32) -> TruncPoly {
        TruncPoly {
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, trunc: u32, c: BigRational) -> TruncPoly {
        let mut p = TruncPoly::zero(nvars, trunc);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable x_i (0-based).
    pub fn var(nvars: usize, trunc: u32, i: usize) -> TruncPoly {
        let mut p = TruncPoly::zero(nvars, trunc);
        if trunc >= 1 {
            let mut m = vec![0; nvars];
            m[i] = 1;
            p.terms.insert(m, BigRational::from_integer(1.into()));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[u16]) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Smallest total degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(total_degree).min()
    }

    pub fn add_assign(&mut self, other: &TruncPoly) {
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TruncPoly, s: &BigRational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c * s;
            if entry.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn neg(&self) -> TruncPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&mut self, s: &BigRational) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= s;
        }
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.trunc);
        for (ma, ca) in &self.terms {
            let da = total_degree(ma);
            for (mb, cb) in &other.terms {
                if da + total_degree(mb) > self.trunc {
                    continue;
                }
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&m);
                }
            }
        }
        out
    }

    /// Multiply by variable x_i, truncating.
    pub fn mul_var(&self, i: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.trunc);
        for (m, c) in &self.terms {
            if total_degree(m) + 1 > self.trunc {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] += 1;
            out.terms.insert(m2, c.clone());
        }
        out
    }

    /// Partial derivative with respect to x_i.
    pub fn derivative(&self, i: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.trunc);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            out.terms
                .insert(m2, c * BigRational::from_integer((m[i] as i64).into()));
        }
        out
    }

    /// Re-truncate to a lower degree.
    pub fn truncated(&self, trunc: u32) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, trunc);
        for (m, c) in &self.terms {
            if total_degree(m) <= trunc {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// All exponent vectors in `nvars` variables of total degree at most `deg`,
/// in lexicographic order.
pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Mono> {
    let mut out = vec![vec![0u16; nvars]];
    for _ in 0..deg {
        let mut next = Vec::new();
        for m in &out {
            for i in 0..nvars {
                let mut m2 = m.clone();
                m2[i] += 1;
                next.push(m2);
            }
        }
        out.extend(next);
        out.sort();
        out.dedup();
    }
    out
}

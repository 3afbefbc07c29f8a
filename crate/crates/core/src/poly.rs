// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! Bivariate polynomials in `x, y` with exact integration along straight edges.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `sum c_ij x^i y^j`, stored sparsely with zero coefficients dropped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), f64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn monomial(c: f64, i: u32, j: u32) -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), f64)>) -> Self {
        let mut p = BivariatePoly::zero();
        for ((i, j), c) in terms {
            p.add_term(c, i, j);
        }
        p
    }

    fn add_term(&mut self, c: f64, i: u32, j: u32) {
        let e = self.terms.entry((i, j)).or_insert(0.0);
        *e += c;
        if *e == 0.0 {
            self.terms.remove(&(i, j));
        }
    }

    /// Nonzero terms keyed by `(power of x, power of y)`.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), f64> {
        &self.terms
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    pub fn d_dx(&self) -> Self {
        BivariatePoly::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|(&(i, j), &c)| ((i - 1, j), c * i as f64)),
        )
    }

    pub fn d_dy(&self) -> Self {
        BivariatePoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|(&(i, j), &c)| ((i, j - 1), c * j as f64)),
        )
    }

    pub fn add(&self, other: &BivariatePoly) -> Self {
        BivariatePoly::from_terms(self.terms.iter().chain(&other.terms).map(|(&k, &c)| (k, c)))
    }

    /// Coefficients in `s` of `P(a + s (b - a))`.
    pub(crate) fn along(&self, a: [f64; 2], b: [f64; 2]) -> Vec<f64> {
        let mut out = vec![0.0; self.degree() as usize + 1];
        for (&(i, j), &c) in &self.terms {
            let px = linear_power(a[0], b[0] - a[0], i);
            let py = linear_power(a[1], b[1] - a[1], j);
            for (k, v) in poly_mul(&px, &py).into_iter().enumerate() {
                out[k] += c * v;
            }
        }
        out
    }
}

/// Coefficients of `(c0 + c1 s)^m`.
pub(crate) fn linear_power(c0: f64, c1: f64, m: u32) -> Vec<f64> {
    let mut out = vec![1.0];
    for _ in 0..m {
        let mut next = vec![0.0; out.len() + 1];
        for (k, &v) in out.iter().enumerate() {
            next[k] += v * c0;
            next[k + 1] += v * c1;
        }
        out = next;
    }
    out
}

pub(crate) fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `int_0^1 sum c_k s^k ds`.
pub(crate) fn integrate_unit(c: &[f64]) -> f64 {
    c.iter().enumerate().map(|(k, v)| v / (k + 1) as f64).sum()
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut s = format!("{c}");
                for (v, e) in [("x", i), ("y", j)] {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*{v}")),
                        _ => s.push_str(&format!("*{v}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for BivariatePoly {
    type Err = Error;

    /// Parses sums of monomials such as `x^2 - 3*x*y + 0.5y^3 + 2`.
    /// Factors within a term may be joined by `*` or simply juxtaposed.
    fn from_str(s: &str) -> Result<Self> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = BivariatePoly::zero();
        let mut pos = 0;
        while pos < src.len() {
            let mut sign = 1.0;
            while pos < src.len() && (src[pos] == '+' || src[pos] == '-') {
                if src[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let (mut c, mut i, mut j) = (sign, 0u32, 0u32);
            let mut factors = 0;
            loop {
                if pos < src.len() && src[pos] == '*' && factors > 0 {
                    pos += 1;
                }
                let Some(&ch) = src.get(pos) else { break };
                if ch.is_ascii_digit() || ch == '.' {
                    let start = pos;
                    while pos < src.len()
                        && (src[pos].is_ascii_digit()
                            || src[pos] == '.'
                            || ((src[pos] == 'e' || src[pos] == 'E') && pos > start)
                            || ((src[pos] == '-' || src[pos] == '+') && matches!(src[pos - 1], 'e' | 'E')))
                    {
                        pos += 1;
                    }
                    let lit: String = src[start..pos].iter().collect();
                    c *= lit
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad number {lit:?}")))?;
                } else if ch == 'x' || ch == 'y' {
                    pos += 1;
                    let mut e = 1;
                    if src.get(pos) == Some(&'^') {
                        pos += 1;
                        let start = pos;
                        while pos < src.len() && src[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let lit: String = src[start..pos].iter().collect();
                        e = lit
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent {lit:?}")))?;
                    }
                    if ch == 'x' {
                        i += e;
                    } else {
                        j += e;
                    }
                } else if ch == '+' || ch == '-' {
                    break;
                } else {
                    return Err(Error::Parse(format!("unexpected {ch:?} at {pos}")));
                }
                factors += 1;
            }
            if factors == 0 {
                return Err(Error::Parse(format!("missing term at {pos}")));
            }
            p.add_term(c, i, j);
        }
        Ok(p)
    }
}

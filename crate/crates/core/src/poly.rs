//! Integer polynomials in the four variables `a, b, x, y`.
//!
//! Text form: a signed integer coefficient followed by optional factors
//! `v` or `v^e` with `v ∈ {a, b, x, y}`, terms joined by `+` / `-`.
//! Whitespace is ignored and a bare monomial has coefficient 1, so
//! `"1 x^1 y^5 - 10 x^3 y^3"` and `"xy^5-10x^3y^3"` are the same polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::{Error, Result};

/// Exponents of `(a, b, x, y)`.
pub type Exponents = [u32; 4];

const VARS: [char; 4] = ['a', 'b', 'x', 'y'];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly4 {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: impl Into<BigInt>, exps: Exponents) -> Self {
        let mut p = Poly4::zero();
        p.add_term(coeff.into(), exps);
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Exponents)>,
        C: Into<BigInt>,
    {
        let mut p = Poly4::zero();
        for (c, e) in terms {
            p.add_term(c.into(), e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: BigInt, exps: Exponents) {
        let slot = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Exact evaluation at any integer point.
    pub fn eval(&self, a: i64, b: i64, x: i64, y: i64) -> BigInt {
        match self.eval_i128(a, b, x, y) {
            Some(v) => BigInt::from(v),
            None => self.eval_big(a, b, x, y),
        }
    }

    /// Evaluation in `i128`, `None` on overflow.
    pub fn eval_i128(&self, a: i64, b: i64, x: i64, y: i64) -> Option<i128> {
        let point = [a as i128, b as i128, x as i128, y as i128];
        let mut acc: i128 = 0;
        for (exps, c) in &self.terms {
            let mut term = i128::try_from(c).ok()?;
            for (&e, &v) in exps.iter().zip(&point) {
                if e > 0 {
                    term = term.checked_mul(v.checked_pow(e)?)?;
                }
            }
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    fn eval_big(&self, a: i64, b: i64, x: i64, y: i64) -> BigInt {
        let point = [a, b, x, y].map(BigInt::from);
        self.terms
            .iter()
            .map(|(exps, c)| {
                exps.iter()
                    .zip(&point)
                    .fold(c.clone(), |acc, (&e, v)| if e == 0 { acc } else { acc * v.pow(e) })
            })
            .sum()
    }

    /// The polynomial `f(x, y, a, b)` (pairs exchanged).
    pub fn swap_pairs(&self) -> Poly4 {
        Poly4::from_terms(self.terms.iter().map(|(e, c)| (c.clone(), [e[2], e[3], e[0], e[1]])))
    }

    /// The polynomial `f(-a, -b, x, y)`.
    pub fn negate_first_pair(&self) -> Poly4 {
        Poly4::from_terms(self.terms.iter().map(|(e, c)| {
            let c = if (e[0] + e[1]) % 2 == 1 { -c } else { c.clone() };
            (c, *e)
        }))
    }

    pub fn sub(&self, other: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(-c, *e);
        }
        out
    }

    pub fn add(&self, other: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), *e);
        }
        out
    }

    /// `f(a,b,x,y) - f(x,y,a,b) - f(-a,-b,x,y) + f(x,y,-a,-b)` expanded.
    pub fn symmetry_defect(&self) -> Poly4 {
        let swapped = self.swap_pairs();
        // f(x,y,-a,-b): flip the second pair, then exchange pairs
        let swapped_neg = self.negate_second_pair().swap_pairs();
        self.sub(&swapped).sub(&self.negate_first_pair()).add(&swapped_neg)
    }

    /// The polynomial `f(a, b, -x, -y)`.
    pub fn negate_second_pair(&self) -> Poly4 {
        Poly4::from_terms(self.terms.iter().map(|(e, c)| {
            let c = if (e[2] + e[3]) % 2 == 1 { -c } else { c.clone() };
            (c, *e)
        }))
    }

    /// Whether `f(a,b,x,y) - f(x,y,a,b) = f(-a,-b,x,y) - f(x,y,-a,-b)`
    /// holds identically.
    pub fn symmetry_holds(&self) -> bool {
        self.symmetry_defect().is_zero()
    }
}

/// Exact running sum that stays in `i128` until it overflows.
#[derive(Debug, Clone, Default)]
pub struct ExactSum {
    small: i128,
    big: BigInt,
}

impl ExactSum {
    pub fn add_eval(&mut self, f: &Poly4, a: i64, b: i64, x: i64, y: i64) {
        match f.eval_i128(a, b, x, y) {
            Some(v) => self.add_small(v),
            None => self.big += f.eval_big(a, b, x, y),
        }
    }

    pub fn sub_eval(&mut self, f: &Poly4, a: i64, b: i64, x: i64, y: i64) {
        match f.eval_i128(a, b, x, y).and_then(i128::checked_neg) {
            Some(v) => self.add_small(v),
            None => self.big -= f.eval_big(a, b, x, y),
        }
    }

    fn add_small(&mut self, v: i128) {
        match self.small.checked_add(v) {
            Some(s) => self.small = s,
            None => {
                self.big += self.small;
                self.small = v;
            }
        }
    }

    pub fn total(&self) -> BigInt {
        &self.big + self.small
    }
}

/// Free function form of [`Poly4::symmetry_holds`].
pub fn symmetry_holds(f: &Poly4) -> bool {
    f.symmetry_holds()
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first, then lexicographic
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then(e2.cmp(e1))
        });
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", c.abs())?;
            for (v, &e) in VARS.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => write!(f, " {v}")?,
                    _ => write!(f, " {v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Usage(format!("malformed polynomial at offset {}: {msg}", self.pos))
    }

    fn number(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn parse(mut self) -> Result<Poly4> {
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let mut poly = Poly4::zero();
        let mut first = true;
        while self.pos < self.chars.len() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-' between terms")),
            };
            first = false;
            let (coeff, exps) = self.term()?;
            poly.add_term(if negative { -coeff } else { coeff }, exps);
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(BigInt, Exponents)> {
        let mut coeff = match self.number() {
            Some(digits) => digits.parse::<BigInt>().map_err(|_| self.err("bad coefficient"))?,
            None => BigInt::one(),
        };
        let mut exps = [0u32; 4];
        let mut factors = 0;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
            }
            let Some(c) = self.peek() else { break };
            if c.is_ascii_digit() {
                // a second numeric factor multiplies the coefficient
                let digits = self.number().expect("digit present");
                coeff *= digits.parse::<BigInt>().map_err(|_| self.err("bad coefficient"))?;
                factors += 1;
                continue;
            }
            let Some(slot) = VARS.iter().position(|&v| v == c) else {
                if c == '+' || c == '-' {
                    break;
                }
                return Err(self.err(&format!("unexpected character '{c}'")));
            };
            self.pos += 1;
            let mut e = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                let digits = self.number().ok_or_else(|| self.err("expected exponent after '^'"))?;
                e = digits.parse().map_err(|_| self.err("exponent out of range"))?;
            }
            exps[slot] += e;
            factors += 1;
        }
        if factors == 0 && self.chars.get(self.pos.wrapping_sub(1)).is_some_and(|c| *c == '+' || *c == '-') {
            return Err(self.err("dangling sign"));
        }
        Ok((coeff, exps))
    }
}

/// Random polynomial satisfying the symmetry condition by construction.
///
/// A monomial `a^i b^j x^k y^l` with `i + j` and `k + l` both even is
/// unconstrained; any other monomial must come with its pair swap
/// `a^k b^l x^i y^j` at the same coefficient.
pub fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, terms: usize, max_exp: u32, max_coeff: i64) -> Poly4 {
    let mut p = Poly4::zero();
    while p.terms.len() < terms {
        let exps: Exponents = std::array::from_fn(|_| rng.gen_range(0..=max_exp));
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-max_coeff..=max_coeff);
        }
        let c = BigInt::from(c);
        let even_pairs = (exps[0] + exps[1]).is_multiple_of(2) && (exps[2] + exps[3]).is_multiple_of(2);
        p.add_term(c.clone(), exps);
        let swapped = [exps[2], exps[3], exps[0], exps[1]];
        if !even_pairs && swapped != exps {
            p.add_term(c, swapped);
        }
    }
    p
}

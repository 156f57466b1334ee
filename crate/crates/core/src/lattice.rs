//! Enumeration of `B(n) = {(a,b,x,y) ∈ ℕ⁴ : ax + by = n}` and its coprime
//! subset `B'(n)` (additionally `gcd(a,b) = gcd(x,y) = 1`), the
//! two-variable divisor sum `σ'_{r,s}`, and brute-force convolution sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::arith::{divisor_table, divisors};
use crate::{Error, Natural, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quadruple {
    pub a: u64,
    pub b: u64,
    pub x: u64,
    pub y: u64,
}

impl Quadruple {
    pub fn new(a: u64, b: u64, x: u64, y: u64) -> Self {
        Quadruple { a, b, x, y }
    }

    pub fn weight(&self) -> u64 {
        self.a * self.x + self.b * self.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionSet {
    B,
    Bprime,
}

impl SolutionSet {
    pub fn name(self) -> &'static str {
        match self {
            SolutionSet::B => "B",
            SolutionSet::Bprime => "Bprime",
        }
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(SolutionSet::B),
            "Bprime" | "bprime" | "B'" | "Bp" => Ok(SolutionSet::Bprime),
            other => Err(Error::usage(format!("unknown solution set '{other}' (expected B or Bprime)"))),
        }
    }
}

fn check_n(n: u64, what: &str) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("{what}: n must be at least 2, got {n}")));
    }
    Ok(())
}

/// Visits every quadruple of the chosen set exactly once, ordered by
/// ascending `a`, then `x`, then `b`. Returns the number visited.
pub fn enumerate<F>(n: u64, set: SolutionSet, mut visitor: F) -> Result<u64>
where
    F: FnMut(&Quadruple),
{
    check_n(n, "enumerate")?;
    let table = divisor_table((n - 1) as usize);
    let mut count = 0u64;
    for a in 1..n {
        for x in 1..=(n - 1) / a {
            let m = n - a * x;
            for &b in &table[m as usize] {
                let y = m / b;
                if set == SolutionSet::Bprime && (gcd(a, b) != 1 || gcd(x, y) != 1) {
                    continue;
                }
                visitor(&Quadruple { a, b, x, y });
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Materializes the set; intended for small `n`.
pub fn collect(n: u64, set: SolutionSet) -> Result<Vec<Quadruple>> {
    let mut out = Vec::new();
    enumerate(n, set, |q| out.push(*q))?;
    Ok(out)
}

/// `σ'_{r,s}(m, n) = Σ d^r e^s` over `d | m`, `e | n` with
/// `gcd(d, e) = gcd(m/d, n/e) = 1`.
///
/// Returns 0 when `m ≤ 0` or `n ≤ 0`; the classical definition only
/// covers positive arguments and this extension mirrors `σ_k`.
pub fn sigma_prime(r: u32, s: u32, m: i64, n: i64) -> Natural {
    if m <= 0 || n <= 0 {
        return Natural::zero();
    }
    let (m, n) = (m as u64, n as u64);
    let dm = divisors(m).expect("positive");
    let dn = divisors(n).expect("positive");
    let mut acc = Natural::zero();
    for &d in &dm {
        for &e in &dn {
            if gcd(d, e) == 1 && gcd(m / d, n / e) == 1 {
                acc += BigUint::from(d).pow(r) * BigUint::from(e).pow(s);
            }
        }
    }
    acc
}

/// Σ_{m=1}^{n-1} σ'_{r,s}(m, n - m).
pub fn sigma_prime_convolution(r: u32, s: u32, n: u64) -> Result<Natural> {
    check_n(n, "sigma_prime_convolution")?;
    let n = n as i64;
    Ok((1..n).map(|m| sigma_prime(r, s, m, n - m)).sum())
}

/// Σ_{m=1}^{n-1} σ_r(m) σ_s(n - m).
pub fn sigma_convolution(r: u32, s: u32, n: u64) -> Result<Natural> {
    check_n(n, "sigma_convolution")?;
    let n = n as i64;
    Ok((1..n)
        .map(|m| crate::arith::sigma_k(r, m) * crate::arith::sigma_k(s, n - m))
        .sum())
}

/// Which pair of coordinates a monomial weight reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightVars {
    /// `x^r y^s`
    XY,
    /// `a^r b^s`
    AB,
}

/// `Σ u^r v^s` over the set, where `(u, v)` is `(x, y)` or `(a, b)`.
///
/// Accumulates in `u128` while that is provably safe and in
/// arbitrary precision otherwise.
pub fn monomial_sum(n: u64, set: SolutionSet, vars: WeightVars, r: u32, s: u32) -> Result<Natural> {
    check_n(n, "monomial_sum")?;
    let pick = move |q: &Quadruple| match vars {
        WeightVars::XY => (q.x, q.y),
        WeightVars::AB => (q.a, q.b),
    };
    // each term is below n^(r+s); the set has fewer than n^3 members
    let bits = 64 - n.leading_zeros();
    if (r + s + 3) * bits < 127 {
        let mut acc = 0u128;
        enumerate(n, set, |q| {
            let (u, v) = pick(q);
            acc += (u as u128).pow(r) * (v as u128).pow(s);
        })?;
        return Ok(Natural::from(acc));
    }
    let pow_r: Vec<Natural> = (0..n).map(|t| BigUint::from(t).pow(r)).collect();
    let pow_s: Vec<Natural> = (0..n).map(|t| BigUint::from(t).pow(s)).collect();
    let mut acc = Natural::zero();
    enumerate(n, set, |q| {
        let (u, v) = pick(q);
        acc += &pow_r[u as usize] * &pow_s[v as usize];
    })?;
    Ok(acc)
}

/// Brute-force convolution sum.
///
/// For `Bprime` this is `Σ x^r y^s` over `B'(n)`, equal to
/// `Σ_m σ'_{r,s}(m, n-m)`. For `B` it is `Σ a^r b^s` over `B(n)`, equal
/// to `Σ_m σ_r(m) σ_s(n-m)`.
pub fn brute_convolution(r: u32, s: u32, n: u64, set: SolutionSet) -> Result<Natural> {
    match set {
        SolutionSet::Bprime => monomial_sum(n, set, WeightVars::XY, r, s),
        SolutionSet::B => monomial_sum(n, set, WeightVars::AB, r, s),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreIdentityReport {
    pub r: u32,
    pub s: u32,
    pub n: u64,
    /// Labelled values of the six equal expressions.
    pub values: Vec<(&'static str, Natural)>,
    pub all_equal: bool,
}

/// Evaluates the six expressions that must coincide for the coprime set:
/// both orders of the `σ'` convolution and the four monomial sums.
pub fn check_pre_identity(r: u32, s: u32, n: u64) -> Result<PreIdentityReport> {
    check_n(n, "check_pre_identity")?;
    let values = vec![
        ("sum sigma'_{r,s}(m,n-m)", sigma_prime_convolution(r, s, n)?),
        ("sum sigma'_{s,r}(m,n-m)", sigma_prime_convolution(s, r, n)?),
        ("sum_B' x^r y^s", monomial_sum(n, SolutionSet::Bprime, WeightVars::XY, r, s)?),
        ("sum_B' x^s y^r", monomial_sum(n, SolutionSet::Bprime, WeightVars::XY, s, r)?),
        ("sum_B' a^r b^s", monomial_sum(n, SolutionSet::Bprime, WeightVars::AB, r, s)?),
        ("sum_B' a^s b^r", monomial_sum(n, SolutionSet::Bprime, WeightVars::AB, s, r)?),
    ];
    let all_equal = values.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(PreIdentityReport { r, s, n, values, all_equal })
}

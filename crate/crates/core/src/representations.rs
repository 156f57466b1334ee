//! Counting representations of `n` involving radicals.
//!
//! - `L_{r,s}(n)`: tuples `(a,b,c,d,x,y) ∈ ℕ₀² × ℕ⁴` with
//!   `(ʳ√(a+c), ˢ√(b+d), x, y) ∈ B(n)`.
//! - `M_{r,s}(n)`: tuples `(a,b,c,d,x,y,k,l) ∈ ℕ₀² × ℕ⁶` with
//!   `(ʳ√(k(a+c)), ˢ√(l(b+d)), x, y) ∈ B(n)` and `gcd(a,c) = gcd(b,d) = 1`.
//! - `L'`, `M'`: the same over `B'(n)`.
//!
//! All four equal a weighted sum `Σ u^r v^s` over the underlying set;
//! [`count_fast`] uses that, [`count_raw`] walks the tuples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::gcd;

use crate::arith::divisors;
use crate::lattice::{enumerate, monomial_sum, sigma_convolution, sigma_prime_convolution, SolutionSet, WeightVars};
use crate::{Error, Natural, Result};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Counter {
    L,
    M,
    Lprime,
    Mprime,
}

impl Counter {
    pub const ALL: [Counter; 4] = [Counter::L, Counter::M, Counter::Lprime, Counter::Mprime];

    pub fn set(self) -> SolutionSet {
        match self {
            Counter::L | Counter::M => SolutionSet::B,
            Counter::Lprime | Counter::Mprime => SolutionSet::Bprime,
        }
    }

    /// `M`-type counters split through divisors with coprime parts.
    pub fn is_divisor_split(self) -> bool {
        matches!(self, Counter::M | Counter::Mprime)
    }

    pub fn name(self) -> &'static str {
        match self {
            Counter::L => "L",
            Counter::M => "M",
            Counter::Lprime => "Lp",
            Counter::Mprime => "Mp",
        }
    }
}

impl fmt::Display for Counter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Counter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(Counter::L),
            "M" => Ok(Counter::M),
            "Lp" | "Lprime" | "L'" => Ok(Counter::Lprime),
            "Mp" | "Mprime" | "M'" => Ok(Counter::Mprime),
            other => Err(Error::usage(format!("unknown counter '{other}' (expected L, M, Lp or Mp)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountSpec {
    pub which: Counter,
    pub r: u32,
    pub s: u32,
    pub n: u64,
}

impl CountSpec {
    pub fn new(which: Counter, r: u32, s: u32, n: u64) -> Result<Self> {
        let spec = CountSpec { which, r, s, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 || self.s == 0 {
            return Err(Error::Domain(format!("counter orders must be positive, got r={} s={}", self.r, self.s)));
        }
        if self.n < 2 {
            return Err(Error::Domain(format!("counter argument must be at least 2, got {}", self.n)));
        }
        Ok(())
    }
}

/// `#{(a, c) ∈ ℕ₀ × ℕ : a + c = total}`, by walking `a`.
pub fn split_count(total: u64) -> u64 {
    (0..total).map(|a| total - a).filter(|&c| c >= 1).count() as u64
}

/// `#{(a, c) ∈ ℕ₀ × ℕ : a + c = total, gcd(a, c) = 1}` with `gcd(0, c) = c`.
pub fn coprime_split_count(total: u64) -> u64 {
    (0..total).filter(|&a| gcd(a, total - a) == 1).count() as u64
}

/// Counts via the collapsed form `Σ u^r v^s` over `B(n)` or `B'(n)`.
pub fn count_fast(spec: &CountSpec) -> Result<Natural> {
    spec.validate()?;
    monomial_sum(spec.n, spec.which.set(), WeightVars::AB, spec.r, spec.s)
}

fn power_u64(u: u64, e: u32) -> Option<u64> {
    u.checked_pow(e)
}

/// Work units `count_raw` would spend: candidate splits examined per
/// quadruple, summed over the set.
pub fn raw_work_estimate(spec: &CountSpec) -> Result<u128> {
    spec.validate()?;
    let mut work: u128 = 0;
    let mut overflow = false;
    let (r, s, split) = (spec.r, spec.s, spec.which.is_divisor_split());
    enumerate(spec.n, spec.which.set(), |q| {
        let (Some(ur), Some(vs)) = (power_u64(q.a, r), power_u64(q.b, s)) else {
            overflow = true;
            return;
        };
        // M walks every divisor e of u^r and then e candidate splits
        let side = |t: u64| -> u128 {
            if split {
                divisors(t).expect("positive").iter().map(|&e| e as u128).sum()
            } else {
                t as u128
            }
        };
        work = work.saturating_add(side(ur) + side(vs));
    })?;
    Ok(if overflow { u128::MAX } else { work })
}

/// Number of `(a, c[, k])` choices for one radical coordinate.
fn side_tuples(total: u64, divisor_split: bool) -> u64 {
    if !divisor_split {
        return split_count(total);
    }
    // k · e = total: k is determined by e
    divisors(total).expect("positive").into_iter().map(coprime_split_count).sum()
}

/// Counts by walking the tuple families per quadruple.
///
/// Each member `(u, v, x, y)` of the set contributes the product of the
/// number of admissible `(a, c[, k])` with `u^r` and of `(b, d[, l])` with
/// `v^s`. Fails with [`Error::Budget`] when [`raw_work_estimate`] exceeds
/// `budget`.
pub fn count_raw(spec: &CountSpec, budget: u128) -> Result<Natural> {
    let estimated = raw_work_estimate(spec)?;
    if estimated > budget {
        return Err(Error::Budget { estimated, budget });
    }
    let split = spec.which.is_divisor_split();
    let mut total = Natural::from(0u32);
    enumerate(spec.n, spec.which.set(), |q| {
        let ur = q.a.pow(spec.r);
        let vs = q.b.pow(spec.s);
        total += BigUint::from(side_tuples(ur, split)) * BigUint::from(side_tuples(vs, split));
    })?;
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmRow {
    pub n: u64,
    /// Fast counts in the order of [`Counter::ALL`].
    pub fast: [Natural; 4],
    /// Raw counts; `None` when skipped for budget.
    pub raw: [Option<Natural>; 4],
    pub sigma_convolution: Natural,
    pub sigma_prime_convolution: Natural,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmReport {
    pub r: u32,
    pub s: u32,
    pub rows: Vec<LmRow>,
}

impl LmReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().map(|r| r.raw.iter().filter(|v| v.is_none()).count()).sum()
    }
}

/// Checks `L = M = Σ σ_r(m)σ_s(n-m)` and `L' = M' = Σ σ'_{r,s}(m, n-m)`,
/// with raw counts where the budget allows.
pub fn verify_lm(r: u32, s: u32, lo: u64, hi: u64, budget: u128) -> Result<LmReport> {
    if lo > hi {
        return Err(Error::usage(format!("empty range {lo}..{hi}")));
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        let specs = Counter::ALL.map(|c| CountSpec { which: c, r, s, n });
        for spec in &specs {
            spec.validate()?;
        }
        let fast = [count_fast(&specs[0])?, count_fast(&specs[1])?, count_fast(&specs[2])?, count_fast(&specs[3])?];
        let mut raw: [Option<Natural>; 4] = Default::default();
        for (slot, spec) in raw.iter_mut().zip(&specs) {
            *slot = match count_raw(spec, budget) {
                Ok(v) => Some(v),
                Err(Error::Budget { .. }) => None,
                Err(e) => return Err(e),
            };
        }
        let sc = sigma_convolution(r, s, n)?;
        let spc = sigma_prime_convolution(r, s, n)?;
        let raw_ok = raw.iter().zip(&fast).all(|(raw, fast)| raw.as_ref().is_none_or(|v| v == fast));
        let pass = raw_ok && fast[0] == sc && fast[1] == sc && fast[2] == spc && fast[3] == spc;
        rows.push(LmRow { n, fast, raw, sigma_convolution: sc, sigma_prime_convolution: spc, pass });
    }
    Ok(LmReport { r, s, rows })
}

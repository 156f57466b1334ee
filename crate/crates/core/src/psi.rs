//! `ψ_s(n) = Σ_{d|n} μ(d) d^s` and the coprime residue power sums
//! `S_k(n) = Σ_{1 ≤ t < n, (t,n) = 1} t^k`.
//!
//! `S_k` is available through three independent routes (see
//! [`PowerSumMethod`]); they must always agree.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::gcd;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::{bernoulli, binomial, divisors, factorize, mobius};
use crate::closed_form::ClosedForm;
use crate::{Error, Natural, Ratio, Result};

/// Nonzero order `s` of `ψ_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiOrder(i32);

impl PsiOrder {
    pub fn new(s: i32) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("psi order s must be nonzero"));
        }
        Ok(PsiOrder(s))
    }

    pub fn get(self) -> i32 {
        self.0
    }
}

/// `d^s` as an exact rational, for any sign of `s`.
fn rational_pow(d: u64, s: i32) -> Ratio {
    let p = BigInt::from(d).pow(s.unsigned_abs());
    if s >= 0 {
        Ratio::from_integer(p)
    } else {
        Ratio::new(BigInt::one(), p)
    }
}

/// `ψ_s(n)` via the Möbius divisor sum.
pub fn psi(s: PsiOrder, n: u64) -> Result<Ratio> {
    if n == 0 {
        return Err(Error::domain("psi: n must be positive"));
    }
    let mut acc = Ratio::zero();
    for d in divisors(n)? {
        match mobius(d)? {
            0 => {}
            1 => acc += rational_pow(d, s.get()),
            _ => acc -= rational_pow(d, s.get()),
        }
    }
    Ok(acc)
}

/// `ψ_s(n)` via the Euler product `∏_{p|n} (1 - p^s)`.
pub fn psi_product(s: PsiOrder, n: u64) -> Result<Ratio> {
    let f = factorize(n)?;
    Ok(f
        .primes()
        .map(|p| Ratio::one() - rational_pow(p, s.get()))
        .fold(Ratio::one(), |acc, x| acc * x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerSumMethod {
    /// Enumerate the coprime residues.
    Direct,
    /// Möbius inversion over divisors with Bernoulli-expanded inner sums.
    MoebiusFaulhaber,
    /// The stored `ψ` closed forms, `k ≤ 12` only.
    ClosedTable,
}

impl PowerSumMethod {
    pub const ALL: [PowerSumMethod; 3] =
        [PowerSumMethod::Direct, PowerSumMethod::MoebiusFaulhaber, PowerSumMethod::ClosedTable];

    pub fn name(self) -> &'static str {
        match self {
            PowerSumMethod::Direct => "direct",
            PowerSumMethod::MoebiusFaulhaber => "moebius",
            PowerSumMethod::ClosedTable => "closed",
        }
    }
}

impl fmt::Display for PowerSumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PowerSumMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(PowerSumMethod::Direct),
            "moebius" | "moebius_faulhaber" => Ok(PowerSumMethod::MoebiusFaulhaber),
            "closed" | "closed_table" => Ok(PowerSumMethod::ClosedTable),
            other => Err(Error::usage(format!("unknown power-sum method '{other}'"))),
        }
    }
}

pub const CLOSED_TABLE_MAX_K: u32 = 12;

// (num, den, n_power, psi_order) rows for S_0 .. S_12.
const CLOSED_ROWS: [&[(i64, i64, u32, i32)]; 13] = [
    &[(1, 1, 1, -1)],
    &[(1, 2, 2, -1)],
    &[(1, 3, 3, -1), (1, 6, 1, 1)],
    &[(1, 4, 4, -1), (1, 4, 2, 1)],
    &[(1, 5, 5, -1), (1, 3, 3, 1), (-1, 30, 1, 3)],
    &[(1, 6, 6, -1), (5, 12, 4, 1), (-1, 12, 2, 3)],
    &[(1, 7, 7, -1), (1, 2, 5, 1), (-1, 6, 3, 3), (1, 42, 1, 5)],
    &[(1, 8, 8, -1), (7, 12, 6, 1), (-7, 24, 4, 3), (7, 84, 2, 5)],
    &[(1, 9, 9, -1), (2, 3, 7, 1), (-7, 15, 5, 3), (2, 9, 3, 5), (-1, 30, 1, 7)],
    &[(1, 10, 10, -1), (3, 4, 8, 1), (-7, 10, 6, 3), (1, 2, 4, 5), (-3, 20, 2, 7)],
    &[(1, 11, 11, -1), (5, 6, 9, 1), (-1, 1, 7, 3), (1, 1, 5, 5), (-1, 2, 3, 7), (5, 66, 1, 9)],
    &[
        (1, 12, 12, -1),
        (11, 12, 10, 1),
        (-11, 8, 8, 3),
        (11, 6, 6, 5),
        (-11, 8, 4, 7),
        (5, 12, 2, 9),
    ],
    &[
        (1, 13, 13, -1),
        (1, 1, 11, 1),
        (-11, 6, 9, 3),
        (22, 7, 7, 5),
        (-33, 10, 5, 7),
        (5, 3, 3, 9),
        (-691, 2730, 1, 11),
    ],
];

/// Closed form of `S_k(n)` for `0 ≤ k ≤ 12`, valid for `n ≥ 2`.
pub fn closed_power_sum_form(k: u32) -> Result<&'static ClosedForm> {
    static TABLE: OnceLock<Vec<ClosedForm>> = OnceLock::new();
    if k > CLOSED_TABLE_MAX_K {
        return Err(Error::Unsupported(format!(
            "closed power-sum table covers k <= {CLOSED_TABLE_MAX_K}, got k = {k}"
        )));
    }
    let table = TABLE.get_or_init(|| CLOSED_ROWS.iter().map(|rows| ClosedForm::from_rows(rows)).collect());
    Ok(&table[k as usize])
}

/// `Σ_{j=0}^{N-1} j^k` via the Bernoulli expansion (with `0^0 = 1`).
pub fn faulhaber(k: u32, upper: u64) -> Ratio {
    let big_n = Ratio::from_integer(BigInt::from(upper));
    let mut acc = Ratio::zero();
    for j in 0..=k {
        let b = bernoulli(j);
        if b.is_zero() {
            continue;
        }
        let c = Ratio::from_integer(BigInt::from(binomial(k + 1, j)));
        acc += c * b * num_traits::pow(big_n.clone(), (k + 1 - j) as usize);
    }
    acc / Ratio::from_integer(BigInt::from(k + 1))
}

fn direct_power_sum(k: u32, n: u64) -> Natural {
    (1..n)
        .filter(|&t| gcd(t, n) == 1)
        .map(|t| BigUint::from(t).pow(k))
        .sum()
}

fn moebius_faulhaber_power_sum(k: u32, n: u64) -> Result<Natural> {
    let mut acc = Ratio::zero();
    for d in divisors(n)? {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        let weight = Ratio::from_integer(BigInt::from(d).pow(k));
        let inner = faulhaber(k, n / d);
        if mu > 0 {
            acc += weight * inner;
        } else {
            acc -= weight * inner;
        }
    }
    ratio_to_natural(acc, "moebius_faulhaber power sum")
}

fn ratio_to_natural(v: Ratio, what: &str) -> Result<Natural> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Domain(format!("{what} produced non-natural value {v}")));
    }
    Ok(v.to_integer().to_biguint().expect("nonnegative"))
}

/// `S_k(n) = Σ t^k` over `1 ≤ t < n` with `gcd(t, n) = 1`.
pub fn coprime_power_sum(k: u32, n: u64, method: PowerSumMethod) -> Result<Natural> {
    if n < 2 {
        return Err(Error::domain("coprime_power_sum: n must be at least 2"));
    }
    match method {
        PowerSumMethod::Direct => Ok(direct_power_sum(k, n)),
        PowerSumMethod::MoebiusFaulhaber => moebius_faulhaber_power_sum(k, n),
        PowerSumMethod::ClosedTable => {
            let v = closed_power_sum_form(k)?.eval(n)?;
            ratio_to_natural(v, "closed power-sum table")
        }
    }
}

/// `Σ_{d|n} μ(d) d^k Σ_{j=1}^{L} j^k` with `L = n/d` (`inclusive`) or
/// `L = n/d - 1`, inner sums evaluated term by term.
pub fn mobius_power_sum(k: u32, n: u64, inclusive: bool) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for d in divisors(n)? {
        let mu = mobius(d)?;
        if mu == 0 {
            continue;
        }
        let top = if inclusive { n / d } else { n / d - 1 };
        let inner: BigInt = (1..=top).map(|j| BigInt::from(j).pow(k)).sum();
        let term = BigInt::from(d).pow(k) * inner;
        if mu > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: i32) -> PsiOrder {
        PsiOrder::new(s).unwrap()
    }

    #[test]
    fn psi_examples() {
        for s in [-3, -1, 1, 2, 7] {
            assert_eq!(psi(order(s), 1).unwrap(), Ratio::one());
        }
        assert_eq!(psi(order(-1), 2).unwrap(), Ratio::new(1.into(), 2.into()));
        assert_eq!(psi(order(3), 6).unwrap(), Ratio::from_integer(182.into()));
    }

    #[test]
    fn psi_errors() {
        assert!(PsiOrder::new(0).is_err());
        assert!(psi(order(1), 0).is_err());
    }

    #[test]
    fn psi_sum_equals_product() {
        for n in 1..400u64 {
            for s in [-3, -1, 1, 2, 5, 11] {
                assert_eq!(psi(order(s), n).unwrap(), psi_product(order(s), n).unwrap(), "s={s} n={n}");
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        for m in PowerSumMethod::ALL {
            assert_eq!(coprime_power_sum(0, 10, m).unwrap(), BigUint::from(4u32));
            assert_eq!(coprime_power_sum(1, 4, m).unwrap(), BigUint::from(4u32));
            assert_eq!(coprime_power_sum(2, 3, m).unwrap(), BigUint::from(5u32));
        }
    }

    #[test]
    fn power_sum_errors() {
        assert!(matches!(coprime_power_sum(1, 1, PowerSumMethod::Direct), Err(Error::Domain(_))));
        assert!(matches!(coprime_power_sum(13, 10, PowerSumMethod::ClosedTable), Err(Error::Unsupported(_))));
        // the other routes have no k limit
        assert_eq!(
            coprime_power_sum(13, 10, PowerSumMethod::Direct).unwrap(),
            coprime_power_sum(13, 10, PowerSumMethod::MoebiusFaulhaber).unwrap()
        );
    }

    #[test]
    fn faulhaber_matches_direct_sum() {
        for k in 0..=14u32 {
            for upper in 1..30u64 {
                let direct: BigInt = (0..upper).map(|j| BigInt::from(j).pow(k)).sum();
                assert_eq!(faulhaber(k, upper), Ratio::from_integer(direct), "k={k} N={upper}");
            }
        }
    }

    #[test]
    fn inner_limit_variants_agree() {
        for n in 2..200u64 {
            for k in 0..6 {
                assert_eq!(mobius_power_sum(k, n, true).unwrap(), mobius_power_sum(k, n, false).unwrap());
            }
        }
    }

    #[test]
    fn zeroth_power_sum_is_totient() {
        for n in 2..500u64 {
            let s0 = coprime_power_sum(0, n, PowerSumMethod::Direct).unwrap();
            let n_psi = Ratio::from_integer(BigInt::from(n)) * psi(order(-1), n).unwrap();
            assert_eq!(Ratio::from_integer(BigInt::from(s0.clone())), n_psi);
            assert_eq!(s0, BigUint::from(crate::arith::totient(n).unwrap()));
        }
    }

    #[test]
    fn methods_agree_small() {
        for n in 2..120u64 {
            for k in 0..=12 {
                let d = coprime_power_sum(k, n, PowerSumMethod::Direct).unwrap();
                assert_eq!(d, coprime_power_sum(k, n, PowerSumMethod::MoebiusFaulhaber).unwrap());
                assert_eq!(d, coprime_power_sum(k, n, PowerSumMethod::ClosedTable).unwrap());
            }
        }
    }
}

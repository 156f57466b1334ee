//! Classical arithmetic functions over desk-scale integers.
//!
//! Inputs are `u64` (or `i64` where the nonpositive convention matters);
//! anything that can grow past 64 bits is returned as a [`Natural`] or
//! [`Ratio`]. Factorizations and Bernoulli numbers are memoized in
//! process-wide tables that are safe to share between threads.

use std::fmt;
use std::sync::{Mutex, OnceLock};

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::{Error, Natural, Ratio, Result};

/// Prime factorization of a positive integer as `(prime, exponent)` pairs
/// with strictly increasing primes. The empty factorization is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn factor_cache() -> &'static DashMap<u64, Factorization> {
    static CACHE: OnceLock<DashMap<u64, Factorization>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

// Residues mod 30 coprime to 30, as gaps starting from 7.
const WHEEL_GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

fn trial_divide(mut n: u64) -> Factorization {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    let mut p = 7u64;
    let mut gap = 0usize;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += WHEEL_GAPS[gap];
        gap = (gap + 1) % WHEEL_GAPS.len();
    }
    if n > 1 {
        out.push((n, 1));
    }
    Factorization(out)
}

/// Factorize `n` by trial division over a mod-30 wheel.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::domain("factorize: n must be positive"));
    }
    let cache = factor_cache();
    if let Some(f) = cache.get(&n) {
        return Ok(f.clone());
    }
    let f = trial_divide(n);
    Ok(cache.entry(n).or_insert(f).clone())
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Ascending divisor lists for every `m` in `1..=limit` (index 0 is empty).
pub fn divisor_table(limit: usize) -> Vec<Vec<u64>> {
    let mut table = vec![Vec::new(); limit + 1];
    for d in 1..=limit {
        for m in (d..=limit).step_by(d) {
            table[m].push(d as u64);
        }
    }
    table
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.pairs().len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient, `φ(n) = n ∏_{p|n} (1 - 1/p)`.
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.primes().fold(n, |acc, p| acc / p * (p - 1)))
}

/// `σ_k(n) = Σ_{d|n} d^k`, extended by `σ_k(n) = 0` for `n ≤ 0`.
pub fn sigma_k(k: u32, n: i64) -> Natural {
    if n <= 0 {
        return Natural::zero();
    }
    let f = factorize(n as u64).expect("positive");
    // multiplicative: σ_k(p^e) = 1 + p^k + ... + p^{ek}
    f.pairs()
        .iter()
        .map(|&(p, e)| {
            let pk = BigUint::from(p).pow(k);
            let mut term = BigUint::one();
            let mut acc = BigUint::one();
            for _ in 0..e {
                term *= &pk;
                acc += &term;
            }
            acc
        })
        .product()
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn bernoulli_table() -> &'static Mutex<Vec<Ratio>> {
    static TABLE: OnceLock<Mutex<Vec<Ratio>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Ratio::one()]))
}

/// Bernoulli number `B_j` with the `B_1 = -1/2` convention.
///
/// Uses `Σ_{i=0}^{m} C(m+1, i) B_i = 0` for `m ≥ 1`.
pub fn bernoulli(j: u32) -> Ratio {
    let mut table = bernoulli_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= j as usize {
        let m = table.len() as u32;
        let mut acc = Ratio::zero();
        for (i, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Ratio::from_integer(BigInt::from(binomial(m + 1, i as u32))) * b;
            }
        }
        let next = -acc / Ratio::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    table[j as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;

    fn ratio(n: i64, d: i64) -> Ratio {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().pairs(), &[(97, 1)]);
        assert_eq!(factorize(0), Err(Error::Domain("factorize: n must be positive".into())));
    }

    #[test]
    fn factorize_reconstructs() {
        for n in 1..5000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value(), n);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.pairs().iter().all(|&(_, e)| e >= 1));
        }
        assert_eq!(factorize(999_983 * 2).unwrap().pairs(), &[(2, 1), (999_983, 1)]);
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(16).unwrap(), vec![1, 2, 4, 8, 16]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn divisor_table_matches_divisors() {
        let table = divisor_table(300);
        for m in 1..=300u64 {
            assert_eq!(table[m as usize], divisors(m).unwrap());
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(9).unwrap(), 6);
        assert_eq!(totient(10).unwrap(), 4);
        assert!(totient(0).is_err());
    }

    #[test]
    fn totient_counts_coprime_residues() {
        for n in 1..400u64 {
            let count = (1..=n).filter(|&t| gcd(t, n) == 1).count() as u64;
            assert_eq!(totient(n).unwrap(), count, "n = {n}");
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_k(1, 6), BigUint::from(12u32));
        assert_eq!(sigma_k(3, 2), BigUint::from(9u32));
        assert_eq!(sigma_k(2, -5), BigUint::zero());
        assert_eq!(sigma_k(0, 0), BigUint::zero());
    }

    #[test]
    fn sigma_matches_divisor_sum() {
        for n in 1..300i64 {
            for k in 0..5u32 {
                let direct: BigUint = divisors(n as u64)
                    .unwrap()
                    .into_iter()
                    .map(|d| BigUint::from(d).pow(k))
                    .sum();
                assert_eq!(sigma_k(k, n), direct);
            }
        }
    }

    #[test]
    fn divisor_sums_of_phi_and_mu() {
        for n in 2..=10_000u64 {
            let divs = divisors(n).unwrap();
            let phi_sum: u64 = divs.iter().map(|&d| totient(d).unwrap()).sum();
            let mu_sum: i64 = divs.iter().map(|&d| mobius(d).unwrap() as i64).sum();
            assert_eq!(phi_sum, n);
            assert_eq!(mu_sum, 0);
        }
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), ratio(1, 1));
        assert_eq!(bernoulli(1), ratio(-1, 2));
        assert_eq!(bernoulli(2), ratio(1, 6));
        assert_eq!(bernoulli(3), ratio(0, 1));
        assert_eq!(bernoulli(12), ratio(-691, 2730));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for j in 1..=15 {
            assert!(bernoulli(2 * j + 1).is_zero(), "B_{}", 2 * j + 1);
        }
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(13, 6), BigUint::from(1716u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
    }
}

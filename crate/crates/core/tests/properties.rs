use num_bigint::BigInt;
use num_integer::gcd;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sigma_prime::arith::{divisors, mobius, sigma_k, totient};
use sigma_prime::fit::{fit_with_values, MIN_TRAINING_POINTS};
use sigma_prime::identity::{eval_theorem, main_identity_sides, TheoremId, TheoremTag, Variant};
use sigma_prime::lattice::{brute_convolution, sigma_prime, SolutionSet};
use sigma_prime::poly::random_symmetric;
use sigma_prime::psi::{mobius_power_sum, psi, PsiOrder};
use sigma_prime::Ratio;

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=10_000, 1u64..=10_000).prop_filter("coprime", |(m, n)| gcd(*m, *n) == 1)
}

proptest! {
    #[test]
    fn totient_multiplicative((m, n) in coprime_pair()) {
        prop_assert_eq!(totient(m * n).unwrap(), totient(m).unwrap() * totient(n).unwrap());
    }

    #[test]
    fn mobius_multiplicative((m, n) in coprime_pair()) {
        prop_assert_eq!(mobius(m * n).unwrap(), mobius(m).unwrap() * mobius(n).unwrap());
    }

    #[test]
    fn sigma_multiplicative((m, n) in coprime_pair(), k in 0u32..6) {
        prop_assert_eq!(sigma_k(k, (m * n) as i64), sigma_k(k, m as i64) * sigma_k(k, n as i64));
    }

    #[test]
    fn psi_multiplicative((m, n) in coprime_pair(), s in prop_oneof![-4i32..0, 1i32..6]) {
        let s = PsiOrder::new(s).unwrap();
        prop_assert_eq!(psi(s, m * n).unwrap(), psi(s, m).unwrap() * psi(s, n).unwrap());
    }

    #[test]
    fn sigma_prime_swaps(m in 1i64..=200, n in 1i64..=200, r in 0u32..=5, s in 0u32..=5) {
        prop_assert_eq!(sigma_prime(r, s, m, n), sigma_prime(s, r, n, m));
    }

    #[test]
    fn inner_limit_variants_agree(n in 2u64..2_000, k in 0u32..=8) {
        prop_assert_eq!(mobius_power_sum(k, n, true).unwrap(), mobius_power_sum(k, n, false).unwrap());
    }

    #[test]
    fn fit_scales_with_the_data(num in -50i64..50, den in 1i64..20) {
        prop_assume!(num != 0);
        let factor = Ratio::new(num.into(), den.into());
        let train = [2u64, 3, 4, 5, 7, 9];
        prop_assert!(train.len() >= MIN_TRAINING_POINTS);
        let values: Vec<Ratio> = train
            .iter()
            .map(|&n| Ratio::from_integer(BigInt::from(brute_convolution(1, 5, n, SolutionSet::Bprime).unwrap())))
            .collect();
        let scaled_values: Vec<Ratio> = values.iter().map(|v| v * &factor).collect();
        let base = fit_with_values(1, 5, &train, &values).unwrap().coefficients.unwrap();
        let scaled = fit_with_values(1, 5, &train, &scaled_values).unwrap().coefficients.unwrap();
        prop_assert_eq!(scaled, base.scaled(&factor));
    }

    #[test]
    fn random_symmetric_polynomials_satisfy_identity(seed in any::<u64>(), n in 2u64..=30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_symmetric(&mut rng, 3, 3, 9);
        prop_assert!(f.symmetry_holds());
        for set in [SolutionSet::Bprime, SolutionSet::B] {
            prop_assert!(main_identity_sides(&f, n, set).unwrap().holds(), "{} at n={} over {}", f, n, set);
        }
    }
}

#[test]
fn totient_and_mobius_divisor_sums() {
    for n in 2..=10_000u64 {
        let ds = divisors(n).unwrap();
        assert_eq!(ds.iter().map(|&d| totient(d).unwrap()).sum::<u64>(), n);
        assert_eq!(ds.iter().map(|&d| i64::from(mobius(d).unwrap())).sum::<i64>(), 0);
    }
}

#[test]
fn coprime_compositions_count_totient() {
    for n in 2..=2000u64 {
        let count = (1..n).filter(|&x| gcd(x, n - x) == 1).count() as u64;
        assert_eq!(count, totient(n).unwrap(), "n = {n}");
    }
}

#[test]
fn theorem_values_are_integers() {
    for tag in TheoremTag::ALL {
        for n in 2..=60 {
            let v = eval_theorem(TheoremId::corrected(tag), n).unwrap();
            assert!(v.is_integer(), "{} at n={n}: {v}", tag.name());
        }
    }
    let printed = TheoremId::new(TheoremTag::T13, Variant::AsPrinted);
    assert!((2..=60).all(|n| eval_theorem(printed, n).is_ok()));
}

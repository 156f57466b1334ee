//! Both sides of the polynomial convolution identities over `B(n)` and
//! `B'(n)`, the closed-form evaluations of `Σ_m σ'_{r,s}(m, n-m)`, and the
//! classical Besge and Glaisher checks.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::gcd;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{divisors, sigma_k};
use crate::closed_form::ClosedForm;
use crate::lattice::{brute_convolution, enumerate, sigma_convolution, SolutionSet};
use crate::poly::{ExactSum, Poly4};
use crate::{Error, Natural, Ratio, Result};

/// Left and right side of the identity for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn to_i64(v: u64) -> i64 {
    i64::try_from(v).expect("desk-scale values fit in i64")
}

/// Six-term sum over the chosen set against its divisor/coprime-residue
/// counterpart. `f` must satisfy the symmetry condition.
pub fn main_identity_sides(f: &Poly4, n: u64, set: SolutionSet) -> Result<IdentitySides> {
    if n < 2 {
        return Err(Error::Domain(format!("main identity: n must be at least 2, got {n}")));
    }
    if !f.symmetry_holds() {
        return Err(Error::Precondition(format!(
            "f = {f} does not satisfy f(a,b,x,y) - f(x,y,a,b) = f(-a,-b,x,y) - f(x,y,-a,-b)"
        )));
    }
    let mut lhs = ExactSum::default();
    enumerate(n, set, |q| {
        let (a, b, x, y) = (to_i64(q.a), to_i64(q.b), to_i64(q.x), to_i64(q.y));
        lhs.add_eval(f, a, b, x, -y);
        lhs.sub_eval(f, a, -b, x, y);
        lhs.add_eval(f, a, a - b, x + y, y);
        lhs.sub_eval(f, a, a + b, y - x, y);
        lhs.add_eval(f, b - a, b, x, x + y);
        lhs.sub_eval(f, a + b, b, x, x - y);
    })?;
    let lhs = lhs.total();
    let rhs = match set {
        SolutionSet::Bprime => coprime_residue_side(f, n),
        SolutionSet::B => divisor_side(f, n)?,
    };
    Ok(IdentitySides { lhs, rhs })
}

fn coprime_residue_side(f: &Poly4, n: u64) -> BigInt {
    let nn = to_i64(n);
    let mut acc = ExactSum::default();
    for t in (1..n).filter(|&t| gcd(t, n) == 1) {
        let t = to_i64(t);
        acc.add_eval(f, 1, 0, nn, t);
        acc.sub_eval(f, nn, t, 1, 0);
        acc.add_eval(f, 0, 1, t, nn);
        acc.sub_eval(f, t, nn, 0, 1);
        acc.add_eval(f, 1, 1, nn - t, -t);
        acc.sub_eval(f, nn - t, -t, 1, 1);
    }
    acc.total()
}

fn divisor_side(f: &Poly4, n: u64) -> Result<BigInt> {
    let mut acc = ExactSum::default();
    for d in divisors(n)? {
        let q = to_i64(n / d);
        let d = to_i64(d);
        for x in 1..d {
            acc.add_eval(f, 0, q, x, d);
            acc.add_eval(f, q, 0, d, x);
            acc.add_eval(f, q, q, d - x, -x);
            acc.sub_eval(f, x, x - d, q, q);
            acc.sub_eval(f, x, d, 0, q);
            acc.sub_eval(f, d, x, q, 0);
        }
    }
    Ok(acc.total())
}

/// Test functions used to derive the closed forms, each satisfying the
/// symmetry condition.
pub const PROOF_POLYNOMIALS: [&str; 9] = [
    "x^2",
    "x^2 y^2",
    "x y^5 - 10 x^3 y^3",
    "x y^5 - x^3 y^3",
    "-22 x^7 y + 112 x^5 y^3",
    "x^7 y - x^5 y^3",
    "271 x^11 y - 1540 x^9 y^3 + 1584 x^7 y^5",
    "-2 x^11 y + 11 x^9 y^3 - 9 x^7 y^5",
    "8 x^11 y - 35 x^9 y^3 + 27 x^7 y^5",
];

pub fn proof_polynomials() -> Vec<Poly4> {
    PROOF_POLYNOMIALS.iter().map(|s| s.parse().expect("static polynomial")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    T11,
    T13,
    T15,
    T33,
    T17,
    T35,
    T111,
    T39,
    T57,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 9] = [
        TheoremTag::T11,
        TheoremTag::T13,
        TheoremTag::T15,
        TheoremTag::T33,
        TheoremTag::T17,
        TheoremTag::T35,
        TheoremTag::T111,
        TheoremTag::T39,
        TheoremTag::T57,
    ];

    pub fn orders(self) -> (u32, u32) {
        match self {
            TheoremTag::T11 => (1, 1),
            TheoremTag::T13 => (1, 3),
            TheoremTag::T15 => (1, 5),
            TheoremTag::T33 => (3, 3),
            TheoremTag::T17 => (1, 7),
            TheoremTag::T35 => (3, 5),
            TheoremTag::T111 => (1, 11),
            TheoremTag::T39 => (3, 9),
            TheoremTag::T57 => (5, 7),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::T11 => "t11",
            TheoremTag::T13 => "t13",
            TheoremTag::T15 => "t15",
            TheoremTag::T33 => "t33",
            TheoremTag::T17 => "t17",
            TheoremTag::T35 => "t35",
            TheoremTag::T111 => "t111",
            TheoremTag::T39 => "t39",
            TheoremTag::T57 => "t57",
        }
    }

    /// The tag covering `(r, s)` in either order.
    pub fn for_orders(r: u32, s: u32) -> Option<TheoremTag> {
        let key = (r.min(s), r.max(s));
        TheoremTag::ALL.into_iter().find(|t| t.orders() == key)
    }
}

/// Which published form to use; only `t13` has two distinct forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TheoremId {
    pub tag: TheoremTag,
    pub variant: Variant,
}

impl TheoremId {
    pub fn new(tag: TheoremTag, variant: Variant) -> Self {
        TheoremId { tag, variant }
    }

    pub fn corrected(tag: TheoremTag) -> Self {
        TheoremId { tag, variant: Variant::Corrected }
    }

    pub fn orders(&self) -> (u32, u32) {
        self.tag.orders()
    }

    /// True for the one stored form known to disagree with the oracle.
    pub fn is_known_erratum(&self) -> bool {
        self.tag == TheoremTag::T13 && self.variant == Variant::AsPrinted
    }

    pub fn closed_form(&self) -> &'static ClosedForm {
        theorem_form(*self)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::AsPrinted => write!(f, "{}:printed", self.tag.name()),
            Variant::Corrected => write!(f, "{}:corrected", self.tag.name()),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// `ID`, `ID:printed` or `ID:corrected`; a bare `ID` means corrected.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, variant) = match s.split_once(':') {
            None => (s, Variant::Corrected),
            Some((t, "printed")) | Some((t, "as_printed")) => (t, Variant::AsPrinted),
            Some((t, "corrected")) => (t, Variant::Corrected),
            Some((_, v)) => return Err(Error::usage(format!("unknown theorem variant '{v}'"))),
        };
        let tag = TheoremTag::ALL
            .into_iter()
            .find(|t| t.name() == tag)
            .ok_or_else(|| Error::usage(format!("unknown theorem id '{tag}'")))?;
        Ok(TheoremId { tag, variant })
    }
}

// (num, den, n_power, psi_order), fractions kept exactly as published.
fn theorem_rows(id: TheoremId) -> &'static [(i64, i64, u32, i32)] {
    match (id.tag, id.variant) {
        (TheoremTag::T11, _) => &[(5, 12, 3, -1), (-6, 12, 1, -1), (1, 12, 1, 1)],
        (TheoremTag::T13, Variant::AsPrinted) => &[(7, 10, 5, -1), (-10, 10, 1, -1), (1, 3, 3, 1), (-1, 30, 1, 3)],
        (TheoremTag::T13, Variant::Corrected) => {
            &[(7, 80, 5, -1), (-10, 80, 1, -1), (1, 24, 3, 1), (-1, 240, 1, 3)]
        }
        (TheoremTag::T15, _) => &[(540, 13608, 7, -1), (-1134, 13608, 1, -1), (1, 24, 5, 1), (9, 4536, 1, 5)],
        (TheoremTag::T33, _) => &[(1, 120, 7, -1), (-1, 120, 3, 3)],
        (TheoremTag::T17, _) => &[(176, 7680, 9, -1), (-480, 7680, 1, -1), (1, 24, 7, 1), (-1, 480, 1, 7)],
        (TheoremTag::T35, _) => &[(11, 5040, 9, -1), (-1, 240, 5, 3), (1, 504, 3, 5)],
        (TheoremTag::T111, _) => &[
            (5_223_960, 495_331_200, 13, -1),
            (-20_638_800, 495_331_200, 1, -1),
            (1, 24, 11, 1),
            (-691, 65520, 1, 11),
        ],
        (TheoremTag::T39, _) => &[(1, 2640, 13, -1), (-1, 240, 9, 3), (1, 264, 3, 9)],
        (TheoremTag::T57, _) => &[(1, 10080, 13, -1), (1, 504, 7, 5), (-1, 480, 5, 7)],
    }
}

fn theorem_form(id: TheoremId) -> &'static ClosedForm {
    static FORMS: OnceLock<Vec<(TheoremId, ClosedForm)>> = OnceLock::new();
    let forms = FORMS.get_or_init(|| {
        TheoremTag::ALL
            .into_iter()
            .flat_map(|t| [TheoremId::new(t, Variant::AsPrinted), TheoremId::new(t, Variant::Corrected)])
            .map(|id| (id, ClosedForm::from_rows(theorem_rows(id))))
            .collect()
    });
    &forms.iter().find(|(k, _)| *k == id).expect("every id is tabulated").1
}

/// Closed-form value of `Σ_{m=1}^{n-1} σ'_{r,s}(m, n-m)`.
pub fn eval_theorem(id: TheoremId, n: u64) -> Result<Ratio> {
    if n < 2 {
        return Err(Error::Domain(format!("eval_theorem: n must be at least 2, got {n}")));
    }
    id.closed_form().eval(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub n: u64,
    pub closed: Ratio,
    pub oracle: Natural,
    pub pass: bool,
    /// `closed / oracle` when the oracle is nonzero.
    pub ratio: Option<Ratio>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_counterexample(&self) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// The common `closed / oracle` ratio if every check shares one.
    pub fn uniform_ratio(&self) -> Option<Ratio> {
        let first = self.checks.first()?.ratio.clone()?;
        self.checks.iter().all(|c| c.ratio.as_ref() == Some(&first)).then_some(first)
    }
}

pub fn check_theorem_at(id: TheoremId, n: u64) -> Result<TheoremCheck> {
    let (r, s) = id.orders();
    let closed = eval_theorem(id, n)?;
    let oracle = brute_convolution(r, s, n, SolutionSet::Bprime)?;
    let oracle_q = Ratio::from_integer(BigInt::from(oracle.clone()));
    let pass = closed == oracle_q;
    let ratio = (!oracle_q.is_zero()).then(|| &closed / &oracle_q);
    Ok(TheoremCheck { n, closed, oracle, pass, ratio })
}

/// Compares the closed form against the brute-force oracle for every `n`
/// in `lo..=hi`, using up to `jobs` worker threads. Results are ordered by `n`.
pub fn verify_theorem(id: TheoremId, lo: u64, hi: u64, jobs: usize) -> Result<TheoremReport> {
    if lo > hi {
        return Err(Error::usage(format!("empty range {lo}..{hi}")));
    }
    if lo < 2 {
        return Err(Error::usage(format!("range must start at 2 or above, got {lo}")));
    }
    let checks = run_ordered(lo, hi, jobs, |n| check_theorem_at(id, n))?;
    Ok(TheoremReport { id, checks })
}

/// Maps `f` over `lo..=hi` on a pool of `jobs` threads, keeping input order.
pub fn run_ordered<T, F>(lo: u64, hi: u64, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    if jobs <= 1 {
        return (lo..=hi).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| (lo..=hi).into_par_iter().map(&f).collect())
}

fn require_n(n: u64, what: &str) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("{what}: n must be at least 2, got {n}")));
    }
    Ok(())
}

/// `12 Σ σ(m)σ(n-m) = 5σ_3(n) + (1 - 6n)σ(n)`.
pub fn besge_check(n: u64) -> Result<bool> {
    require_n(n, "besge_check")?;
    let lhs = BigInt::from(sigma_convolution(1, 1, n)?) * 12;
    let nn = BigInt::from(n);
    let rhs = BigInt::from(sigma_k(3, n as i64)) * 5 + (BigInt::one() - nn * 6) * BigInt::from(sigma_k(1, n as i64));
    Ok(lhs == rhs)
}

/// `240 Σ σ(m)σ_3(n-m) = 21σ_5(n) + (10 - 30n)σ_3(n) - σ(n)`.
pub fn glaisher_check(n: u64) -> Result<bool> {
    require_n(n, "glaisher_check")?;
    let lhs = BigInt::from(sigma_convolution(1, 3, n)?) * 240;
    let nn = BigInt::from(n);
    let s = |k| BigInt::from(sigma_k(k, n as i64));
    let rhs = s(5) * 21 + (BigInt::from(10) - nn * 30) * s(3) - s(1);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Ratio {
        Ratio::from_integer(BigInt::from(v))
    }

    fn id(s: &str) -> TheoremId {
        s.parse().unwrap()
    }

    #[test]
    fn main_identity_examples() {
        let x2: Poly4 = "x^2".parse().unwrap();
        assert!(main_identity_sides(&x2, 2, SolutionSet::Bprime).unwrap().holds());
        let x2y2: Poly4 = "x^2 y^2".parse().unwrap();
        assert!(main_identity_sides(&x2y2, 5, SolutionSet::Bprime).unwrap().holds());
        let a: Poly4 = "a".parse().unwrap();
        for set in [SolutionSet::B, SolutionSet::Bprime] {
            assert!(matches!(main_identity_sides(&a, 3, set), Err(Error::Precondition(_))));
        }
        assert!(matches!(main_identity_sides(&x2, 1, SolutionSet::B), Err(Error::Domain(_))));
    }

    #[test]
    fn x_squared_sides_have_known_shape() {
        // lhs = 4 Σ_{B'} xy and rhs = Σ_t (2t² - 2nt + 2n² - 2)
        let x2: Poly4 = "x^2".parse().unwrap();
        for n in 2..30u64 {
            let sides = main_identity_sides(&x2, n, SolutionSet::Bprime).unwrap();
            let xy = BigInt::from(brute_convolution(1, 1, n, SolutionSet::Bprime).unwrap());
            assert_eq!(sides.lhs, xy * 4);
            let nn = n as i64;
            let expected: i64 = (1..nn)
                .filter(|&t| gcd(t, nn) == 1)
                .map(|t| 2 * t * t - 2 * nn * t + 2 * nn * nn - 2)
                .sum();
            assert_eq!(sides.rhs, BigInt::from(expected));
        }
    }

    #[test]
    fn proof_polynomials_are_admissible() {
        for f in proof_polynomials() {
            assert!(f.symmetry_holds(), "{f}");
        }
    }

    #[test]
    fn identity_holds_small_range() {
        for f in proof_polynomials() {
            for n in 2..=15 {
                assert!(main_identity_sides(&f, n, SolutionSet::Bprime).unwrap().holds(), "{f} n={n}");
                assert!(main_identity_sides(&f, n, SolutionSet::B).unwrap().holds(), "{f} n={n} (B)");
            }
        }
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(eval_theorem(id("t11"), 3).unwrap(), q(6));
        assert_eq!(eval_theorem(id("t33"), 3).unwrap(), q(18));
        assert_eq!(eval_theorem(id("t15"), 3).unwrap(), q(36));
        assert_eq!(eval_theorem(id("t13:printed"), 2).unwrap(), q(8));
        assert_eq!(eval_theorem(id("t13:corrected"), 2).unwrap(), q(1));
        assert!(eval_theorem(id("t11"), 1).is_err());
    }

    #[test]
    fn theorem_id_parsing() {
        assert_eq!(id("t13"), TheoremId::corrected(TheoremTag::T13));
        assert_eq!(id("t13:printed").variant, Variant::AsPrinted);
        assert_eq!(id("t57:corrected").tag, TheoremTag::T57);
        assert!("t14".parse::<TheoremId>().is_err());
        assert!("t13:draft".parse::<TheoremId>().is_err());
        assert_eq!(TheoremTag::for_orders(7, 5), Some(TheoremTag::T57));
        assert_eq!(TheoremTag::for_orders(1, 9), None);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_theorem(id("t11"), 2, 50, 1).unwrap().all_pass());
        let printed = verify_theorem(id("t13:printed"), 2, 10, 1).unwrap();
        assert!(printed.checks.iter().all(|c| !c.pass));
        assert_eq!(printed.uniform_ratio(), Some(q(8)));
        assert_eq!(printed.first_counterexample().unwrap().n, 2);
        assert!(verify_theorem(id("t57"), 2, 20, 1).unwrap().all_pass());
        assert!(matches!(verify_theorem(id("t11"), 5, 4, 1), Err(Error::Usage(_))));
    }

    #[test]
    fn parallel_verification_is_ordered_and_identical() {
        let serial = verify_theorem(id("t35"), 2, 40, 1).unwrap();
        let parallel = verify_theorem(id("t35"), 2, 40, 4).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn besge_glaisher_examples() {
        assert!(besge_check(2).unwrap());
        assert!(glaisher_check(2).unwrap());
        assert!(besge_check(100).unwrap());
        assert!(besge_check(1).is_err());
        assert!(glaisher_check(0).is_err());
    }
}

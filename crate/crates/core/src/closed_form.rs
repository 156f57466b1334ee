//! Finite sums `Σ c · n^p · ψ_s(n)` with rational `c`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::psi::{psi, PsiOrder};
use crate::{Error, Ratio, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Ratio,
    pub n_power: u32,
    pub psi_order: PsiOrder,
}

#[derive(Debug, Clone, Default)]
pub struct ClosedForm {
    terms: Vec<Term>,
}

// slots are unique after `push`, so equality ignores term order
impl PartialEq for ClosedForm {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len() && self.terms.iter().all(|t| other.terms.contains(t))
    }
}

impl Eq for ClosedForm {}

impl ClosedForm {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from `(numerator, denominator, n_power, psi_order)` rows.
    pub fn from_rows(rows: &[(i64, i64, u32, i32)]) -> Self {
        let mut cf = ClosedForm::new();
        for &(num, den, p, s) in rows {
            let order = PsiOrder::new(s).expect("table psi orders are nonzero");
            cf.push(Ratio::new(BigInt::from(num), BigInt::from(den)), p, order);
        }
        cf
    }

    /// Adds a term, merging it with an existing `(n_power, psi_order)` slot.
    pub fn push(&mut self, coeff: Ratio, n_power: u32, psi_order: PsiOrder) {
        if let Some(t) = self
            .terms
            .iter_mut()
            .find(|t| t.n_power == n_power && t.psi_order == psi_order)
        {
            t.coeff += coeff;
        } else {
            self.terms.push(Term { coeff, n_power, psi_order });
        }
        self.terms.retain(|t| !t.coeff.is_zero());
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Coefficient attached to `n^p ψ_s(n)`, zero if absent.
    pub fn coeff(&self, n_power: u32, psi_order: i32) -> Ratio {
        self.terms
            .iter()
            .find(|t| t.n_power == n_power && t.psi_order.get() == psi_order)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Ratio::zero)
    }

    pub fn scaled(&self, factor: &Ratio) -> ClosedForm {
        let mut out = ClosedForm::new();
        for t in &self.terms {
            out.push(&t.coeff * factor, t.n_power, t.psi_order);
        }
        out
    }

    pub fn eval(&self, n: u64) -> Result<Ratio> {
        if n == 0 {
            return Err(Error::domain("closed form: n must be positive"));
        }
        let nr = Ratio::from_integer(BigInt::from(n));
        let mut acc = Ratio::zero();
        for t in &self.terms {
            let npow = num_traits::pow(nr.clone(), t.n_power as usize);
            acc += &t.coeff * npow * psi(t.psi_order, n)?;
        }
        Ok(acc)
    }

    /// Evaluates and insists the result is an integer.
    pub fn eval_integer(&self, n: u64) -> Result<BigInt> {
        let v = self.eval(n)?;
        if !v.is_integer() {
            return Err(Error::Domain(format!("closed form value {v} at n = {n} is not an integer")));
        }
        Ok(v.to_integer())
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = t.coeff.abs();
            if !c.is_one() {
                write!(f, "({c}) ")?;
            }
            match t.n_power {
                0 => {}
                1 => write!(f, "n ")?,
                p => write!(f, "n^{p} ")?,
            }
            write!(f, "psi_{}(n)", t.psi_order.get())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub coeff: crate::cli::RatioJson,
    pub n_power: u32,
    pub psi_order: i32,
}

impl ClosedForm {
    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|t| TermJson {
                coeff: crate::cli::RatioJson::from(&t.coeff),
                n_power: t.n_power,
                psi_order: t.psi_order.get(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_merges_and_drops_zero() {
        let mut cf = ClosedForm::from_rows(&[(1, 2, 3, -1)]);
        cf.push(Ratio::new(1.into(), 3.into()), 3, PsiOrder::new(-1).unwrap());
        assert_eq!(cf.coeff(3, -1), Ratio::new(5.into(), 6.into()));
        cf.push(Ratio::new((-5).into(), 6.into()), 3, PsiOrder::new(-1).unwrap());
        assert!(cf.terms().is_empty());
    }

    #[test]
    fn eval_totient_form() {
        // n ψ_{-1}(n) = φ(n)
        let cf = ClosedForm::from_rows(&[(1, 1, 1, -1)]);
        assert_eq!(cf.eval_integer(10).unwrap(), BigInt::from(4));
        assert_eq!(cf.eval_integer(9).unwrap(), BigInt::from(6));
    }

    #[test]
    fn non_integer_is_reported() {
        let cf = ClosedForm::from_rows(&[(1, 2, 0, 1)]);
        assert!(cf.eval_integer(4).is_err());
        assert_eq!(cf.eval_integer(3).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn display_is_readable() {
        let cf = ClosedForm::from_rows(&[(5, 12, 3, -1), (-1, 2, 1, -1), (1, 12, 1, 1)]);
        assert_eq!(cf.to_string(), "(5/12) n^3 psi_-1(n) - (1/2) n psi_-1(n) + (1/12) n psi_1(n)");
    }
}

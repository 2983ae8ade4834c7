//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    /// `coeffs[k]` multiplies `n^k`; no trailing zeros.
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Polynomial::new(vec![c])
    }

    /// `a·n + b`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Polynomial::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    /// `p(a·n + b)`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Polynomial {
        let inner = Polynomial::linear(a.clone(), b.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::new(vec![]), |acc, c| &(&acc * &inner) + &Polynomial::constant(c.clone()))
    }

    pub fn scale(&self, k: &Rat) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::new(vec![]);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

/// Renders in the variable `n`, highest degree first, e.g. `8n^3+12n^2+6n+1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            let coeff = format_rational(&a);
            let is_one = a.is_one();
            let body = match k {
                0 => coeff,
                1 if is_one => "n".to_string(),
                1 => format!("{}n", paren(&coeff)),
                _ if is_one => format!("n^{k}"),
                _ => format!("{}n^{k}", paren(&coeff)),
            };
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn paren(s: &str) -> String {
    if s.contains('/') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn p(v: &[i64]) -> Polynomial {
        Polynomial::new(v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 6, 12, 8]).to_string(), "8n^3+12n^2+6n+1");
        assert_eq!(p(&[1, 1]).to_string(), "n+1");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "n^3-n");
        assert_eq!(Polynomial::new(vec![rat(1), frac(3, 2)]).to_string(), "(3/2)n+1");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn compose_matches_evaluation() {
        let q = p(&[1, 6, 12, 8]);
        let shifted = q.compose_linear(&rat(-1), &rat(-1));
        for n in -4..5 {
            assert_eq!(shifted.eval_int(n), q.eval_int(-n - 1));
        }
    }

    #[test]
    fn product_and_degree() {
        let a = p(&[1, 1]);
        let cube = &(&a * &a) * &a;
        assert_eq!(cube, p(&[1, 3, 3, 1]));
        assert_eq!(cube.degree(), Some(3));
        assert!((&cube - &cube).is_zero());
    }
}

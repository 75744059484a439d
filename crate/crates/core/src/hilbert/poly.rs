use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::poly_binom;
use crate::error::{Error, Result};

/// `P(t) = sum_{i<d} (-1)^i e_i binom(t + d - 1 - i, d - 1 - i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    pub d: usize,
    pub e: Vec<BigInt>,
}

fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

impl HilbertPolynomial {
    pub fn new(d: usize, e: Vec<BigInt>) -> Self {
        assert_eq!(e.len(), d, "one coefficient per dimension");
        HilbertPolynomial { d, e }
    }

    /// Multiplicity `e_0` (zero when `d = 0`).
    pub fn leading(&self) -> BigInt {
        self.e.first().cloned().unwrap_or_default()
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.e.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let d = self.d as i64;
        self.e
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = (d - 1 - i as i64) as u64;
                let term = c * poly_binom(&(t + BigInt::from(k)), k);
                if i % 2 == 0 { term } else { -term }
            })
            .sum()
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// The polynomial of degree `< d` through `values[k] = P(start + k)`.
    pub fn from_values(d: usize, start: i64, values: &[BigInt]) -> Result<Self> {
        if values.len() < d {
            return Err(Error::InvalidInput(format!("{} values cannot fix a polynomial with {d} coefficients", values.len())));
        }
        if d == 0 {
            return Ok(HilbertPolynomial { d, e: Vec::new() });
        }
        let rows: Vec<Vec<BigRational>> = (0..d)
            .map(|k| {
                let t = BigInt::from(start + k as i64);
                (0..d)
                    .map(|i| {
                        let kk = (d - 1 - i) as u64;
                        let v = poly_binom(&(&t + BigInt::from(kk)), kk);
                        BigRational::from_integer(if i % 2 == 0 { v } else { -v })
                    })
                    .collect()
            })
            .collect();
        let rhs = values[..d].iter().cloned().map(BigRational::from_integer).collect();
        let sol = solve(rows, rhs).expect("binomial basis is invertible");
        let mut e = Vec::with_capacity(d);
        for s in sol {
            if !s.is_integer() {
                return Err(Error::NotHilbertPolynomial("values are not those of an integer-valued polynomial in this basis".into()));
            }
            e.push(s.to_integer());
        }
        let p = HilbertPolynomial { d, e };
        for (k, v) in values.iter().enumerate().skip(d) {
            if p.eval_i64(start + k as i64) != *v {
                return Err(Error::NotHilbertPolynomial(format!("values are not of degree below {d}")));
            }
        }
        Ok(p)
    }

    /// Coefficients in the power basis, constant term first.
    pub fn power_coefficients(&self) -> Vec<BigRational> {
        if self.d == 0 {
            return Vec::new();
        }
        let n = self.d;
        let rows = (0..n)
            .map(|k| (0..n).map(|j| BigRational::from_integer(BigInt::from(k).pow(j as u32))).collect())
            .collect();
        let rhs = (0..n).map(|k| BigRational::from_integer(self.eval_i64(k as i64))).collect();
        solve(rows, rhs).expect("Vandermonde matrix is invertible")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.power_coefficients();
        let mut parts: Vec<String> = Vec::new();
        for (j, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let mag = match j {
                0 => a.to_string(),
                _ if a.is_one() => String::new(),
                _ => a.to_string(),
            };
            let var = match j {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{j}"),
            };
            let body = if mag.is_empty() { var } else if var.is_empty() { mag } else { format!("{mag}*{var}") };
            parts.push(format!("{sign} {body}"));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let s = parts.join(" ");
        let s = s.strip_prefix("+ ").map(str::to_string).unwrap_or_else(|| format!("-{}", &s[2..]));
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fit_and_display() {
        let p = HilbertPolynomial::from_values(2, 0, &ints(&[1, 4, 7, 10])).unwrap();
        assert_eq!(p.e, ints(&[3, 2]));
        assert_eq!(p.to_string(), "3*t + 1");
        let q = HilbertPolynomial::new(2, ints(&[1, -16]));
        assert_eq!(q.to_string(), "t + 17");
        assert_eq!(q.eval_i64(-17), BigInt::zero());
        let r = HilbertPolynomial::new(3, ints(&[1, 0, 0]));
        assert_eq!(r.to_string(), "1/2*t^2 + 3/2*t + 1");
    }

    #[test]
    fn rejects_non_polynomial_values() {
        assert!(HilbertPolynomial::from_values(1, 0, &ints(&[1, 2])).is_err());
    }
}

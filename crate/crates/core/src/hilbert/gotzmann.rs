use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binom, poly_binom};
use crate::error::{Error, Result};

use super::HilbertPolynomial;

/// Steps taken one at a time at levels `c_j >= 2` before giving up.
pub const GOTZMANN_STEP_CAP: u64 = 1_000_000;

/// `P(t) = sum_{j=1}^s binom(t + c_j - j + 1, c_j)`, stored run-length
/// encoded as `(c, multiplicity)` with `c` strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannRep {
    pub d: usize,
    pub runs: Vec<(u32, BigInt)>,
    /// `B_i = #{j : c_j >= d - 1 - i}`.
    pub b: Vec<BigInt>,
}

impl GotzmannRep {
    /// The Gotzmann number `s = B_{d-1}`.
    pub fn s(&self) -> BigInt {
        self.runs.iter().map(|(_, m)| m.clone()).sum()
    }

    /// The full sequence `c_1, c_2, ...`, when short enough to list.
    pub fn sequence(&self, cap: usize) -> Option<Vec<u32>> {
        let s = self.s().to_usize()?;
        if s > cap {
            return None;
        }
        Some(self.runs.iter().flat_map(|(c, m)| std::iter::repeat(*c).take(m.to_usize().unwrap())).collect())
    }

    /// Re-sum the representation at `t`.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut j = BigInt::one();
        let mut acc = BigInt::zero();
        for (c, m) in &self.runs {
            let c = *c as u64;
            match c {
                0 => {
                    acc += m;
                    j += m;
                }
                _ => {
                    let mut k = BigInt::zero();
                    while &k < m {
                        acc += poly_binom(&(t + BigInt::from(c) - &j + 1), c);
                        j += 1;
                        k += 1;
                    }
                }
            }
        }
        acc
    }
}

/// Forward differences at 0: `delta[k] = (Δ^k Q)(0)`.
fn differences(vals: &[BigInt]) -> Vec<BigInt> {
    let mut cur = vals.to_vec();
    let mut out = Vec::with_capacity(vals.len());
    while !cur.is_empty() {
        out.push(cur[0].clone());
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// Greedy decomposition of a Hilbert polynomial.
pub fn gotzmann(p: &HilbertPolynomial) -> Result<GotzmannRep> {
    let d = p.d;
    let mut q: Vec<BigInt> = (0..d as i64).map(|t| p.eval_i64(t)).collect();
    let mut runs: Vec<(u32, BigInt)> = Vec::new();
    // Next index j (1-based).
    let mut j = BigInt::one();
    let mut steps = 0u64;
    let sub = |q: &mut Vec<BigInt>, c: u64, j: &BigInt| {
        for (t, v) in q.iter_mut().enumerate() {
            *v -= poly_binom(&(BigInt::from(t as u64 + c + 1) - j), c);
        }
    };
    loop {
        let delta = differences(&q);
        let Some(k) = delta.iter().rposition(|x| !x.is_zero()) else { break };
        if delta[k].is_negative() {
            return Err(Error::NotHilbertPolynomial(format!("negative leading coefficient at step {j}")));
        }
        if let Some((last, _)) = runs.last() {
            if k as u32 > *last {
                return Err(Error::NotHilbertPolynomial("Gotzmann sequence would increase".into()));
            }
        }
        let k32 = k as u32;
        let count = match k {
            // Constant C > 0: C more terms equal to 1.
            0 => {
                let c = delta[0].clone();
                for v in q.iter_mut() {
                    *v -= &c;
                }
                c
            }
            // a t + b: each step lowers the slope by one.
            1 => {
                let a = delta[1].clone();
                // sum_{i<a} (t - (j + i) + 2) = a t - a (j - 2) - a (a - 1) / 2
                let shift = &a * (&j - 2) + &a * (&a - 1) / 2;
                for (t, v) in q.iter_mut().enumerate() {
                    *v -= &a * BigInt::from(t) - &shift;
                }
                a
            }
            _ => {
                steps += 1;
                if steps > GOTZMANN_STEP_CAP {
                    return Err(Error::SizeCap(format!("Gotzmann representation longer than {GOTZMANN_STEP_CAP} terms above level 1")));
                }
                sub(&mut q, k as u64, &j);
                BigInt::one()
            }
        };
        j += &count;
        match runs.last_mut() {
            Some((c, m)) if *c == k32 => *m += count,
            _ => runs.push((k32, count)),
        }
    }
    let b = (0..d)
        .map(|i| runs.iter().filter(|(c, _)| *c as usize + i + 1 >= d).map(|(_, m)| m.clone()).sum())
        .collect();
    Ok(GotzmannRep { d, runs, b })
}

/// `B_i = (-1)^i e_i + sum_{k=1}^{i} (-1)^{k+1} binom(B_{i-k} + 1, k + 1)`.
pub fn b_via_recursion(e: &[BigInt], d: usize) -> Result<Vec<BigInt>> {
    if d == 0 {
        return Err(Error::InvalidInput("the recursion needs d >= 1".into()));
    }
    if e.len() < d {
        return Err(Error::IncompleteInput(format!("need e_0..e_{}, got {} values", d - 1, e.len())));
    }
    let mut b: Vec<BigInt> = Vec::with_capacity(d);
    for i in 0..d {
        let mut v = if i % 2 == 0 { e[i].clone() } else { -e[i].clone() };
        for k in 1..=i {
            let term = binom(&(&b[i - k] + 1), k as i64 + 1);
            if k % 2 == 1 {
                v += term;
            } else {
                v -= term;
            }
        }
        if !v.is_positive() {
            return Err(Error::InvalidInput(format!("B_{i} = {v} is not positive")));
        }
        b.push(v);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn hp(e: &[i64]) -> HilbertPolynomial {
        HilbertPolynomial::new(e.len(), ints(e))
    }

    #[test]
    fn line() {
        let g = gotzmann(&hp(&[1, 0])).unwrap();
        assert_eq!(g.sequence(10).unwrap(), vec![1]);
        assert_eq!(g.b, ints(&[1, 1]));
    }

    #[test]
    fn twisted_cubic_polynomial() {
        let p = hp(&[3, 2]);
        let g = gotzmann(&p).unwrap();
        assert_eq!(g.sequence(10).unwrap(), vec![1, 1, 1, 0]);
        assert_eq!(g.b, ints(&[3, 4]));
        assert_eq!(b_via_recursion(&p.e, 2).unwrap(), g.b);
        for t in -3..6 {
            assert_eq!(g.eval(&BigInt::from(t)), p.eval_i64(t));
        }
    }

    #[test]
    fn plane_plus_embedded_line() {
        let p = hp(&[1, -16]);
        let g = gotzmann(&p).unwrap();
        assert_eq!(g.runs, vec![(1, BigInt::from(1)), (0, BigInt::from(16))]);
        assert_eq!(g.s(), BigInt::from(17));
        assert_eq!(b_via_recursion(&p.e, 2).unwrap(), ints(&[1, 17]));
    }

    #[test]
    fn surface_level_two() {
        // binom(t+2,2) + binom(t,1) + binom(t-2,0) is (2, 1, 0) by construction.
        let vals: Vec<BigInt> = (0..3).map(|t: i64| binom(&BigInt::from(t + 2), 2) + BigInt::from(t) + 1).collect();
        let p = HilbertPolynomial::from_values(3, 0, &vals).unwrap();
        let g = gotzmann(&p).unwrap();
        assert_eq!(g.sequence(10).unwrap(), vec![2, 1, 0]);
        assert_eq!(b_via_recursion(&p.e, 3).unwrap(), g.b);
    }

    #[test]
    fn rejects_negative_leading() {
        assert!(gotzmann(&hp(&[-1, 0])).is_err());
        assert!(b_via_recursion(&ints(&[1, 5]), 2).is_err());
        assert_eq!(b_via_recursion(&ints(&[1, 0]), 2).unwrap(), ints(&[1, 1]));
    }
}

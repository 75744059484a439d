use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order with x1 > x2 > ... > xn.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    Lex,
    GrLex,
    GrevLex,
    /// Lex on the first `k` variables, ties broken by grevlex on the rest.
    Block(usize),
    /// Rows compared in turn; the first non-zero weight difference decides.
    Weights(Vec<Vec<i64>>),
}

impl TermOrder {
    /// Builds a weight order after checking that the matrix has full rank
    /// and that every variable is heavier than 1, which makes the order a
    /// total well-order refining divisibility.
    pub fn weights(rows: Vec<Vec<i64>>, nvars: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != nvars) {
            return Err(Error::InvalidOrder("weight rows must have one entry per variable".into()));
        }
        if int_rank(&rows) != nvars {
            return Err(Error::InvalidOrder("weight matrix is not of full rank".into()));
        }
        for j in 0..nvars {
            let first = rows.iter().map(|r| r[j]).find(|&w| w != 0);
            if !matches!(first, Some(w) if w > 0) {
                return Err(Error::InvalidOrder(format!(
                    "variable x{} is not larger than 1 under the weight matrix",
                    j + 1
                )));
            }
        }
        Ok(TermOrder::Weights(rows))
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::GrLex | TermOrder::GrevLex)
    }

    pub fn check(&self, nvars: usize) -> Result<()> {
        match self {
            TermOrder::Block(k) if *k > nvars => Err(Error::InvalidOrder(format!(
                "block split {k} exceeds {nvars} variables"
            ))),
            TermOrder::Weights(rows) if rows.iter().any(|r| r.len() != nvars) => Err(
                Error::InvalidOrder("weight matrix does not match the ring".into()),
            ),
            _ => Ok(()),
        }
    }

    /// Compare two monomials; lengths must agree.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Dimension(format!(
                "comparing monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp(a, b))
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match self {
            TermOrder::Lex => x.cmp(y),
            TermOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| x.cmp(y)),
            TermOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(x, y)),
            TermOrder::Block(k) => {
                let k = *k;
                x[..k].cmp(&y[..k]).then_with(|| {
                    let dx: u64 = x[k..].iter().map(|&e| e as u64).sum();
                    let dy: u64 = y[k..].iter().map(|&e| e as u64).sum();
                    dx.cmp(&dy).then_with(|| revlex(&x[k..], &y[k..]))
                })
            }
            TermOrder::Weights(rows) => {
                for r in rows {
                    let wx: i128 = r.iter().zip(x).map(|(w, &e)| *w as i128 * e as i128).sum();
                    let wy: i128 = r.iter().zip(y).map(|(w, &e)| *w as i128 * e as i128).sum();
                    match wx.cmp(&wy) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent
/// in the last differing variable is larger.
fn revlex(x: &[u32], y: &[u32]) -> Ordering {
    for (a, b) in x.iter().rev().zip(y.iter().rev()) {
        if a != b {
            return b.cmp(a);
        }
    }
    Ordering::Equal
}

fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let (a, b) = (m[rank][col], m[i][col]);
                let g = gcd(a, b);
                for j in 0..ncols {
                    m[i][j] = m[i][j] * (a / g) - m[rank][j] * (b / g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::GrLex => write!(f, "grlex"),
            TermOrder::GrevLex => write!(f, "grevlex"),
            TermOrder::Block(k) => write!(f, "block({k})"),
            TermOrder::Weights(rows) => write!(f, "weights({rows:?})"),
        }
    }
}

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorelTests {
    pub strongly_stable: bool,
    /// The saturation chain property `I : x_j^inf = I : (x_1..x_j)^inf`.
    pub borel_type: bool,
    /// Fixed by upper triangular matrices in the given characteristic.
    pub borel_fixed: bool,
}

/// `k` is digitwise dominated by `t` in base `p`.
fn p_dominated(mut k: u32, mut t: u32, p: u32) -> bool {
    if p == 0 {
        return k <= t;
    }
    while k > 0 {
        if k % p > t % p {
            return false;
        }
        k /= p;
        t /= p;
    }
    true
}

impl MonomialIdeal {
    pub fn is_strongly_stable(&self) -> bool {
        self.is_p_borel(0)
    }

    /// Moves `x_j^k -> x_i^k` (i < j) for every `k` dominated by the
    /// x_j-exponent in base `p`; `p = 0` gives strong stability.
    pub fn is_p_borel(&self, p: u32) -> bool {
        let n = self.nvars();
        for g in self.generators() {
            for j in 0..n {
                let t = g.exps()[j];
                let steps: Vec<u32> = if p == 0 {
                    (1..=t.min(1)).collect()
                } else {
                    (1..=t).filter(|&k| p_dominated(k, t, p)).collect()
                };
                for k in steps {
                    for i in 0..j {
                        let m = g.with_exp(j, t - k).with_exp(i, g.exps()[i] + k);
                        if !self.contains(&m) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_borel_type(&self) -> bool {
        (1..=self.nvars()).all(|j| self.var_saturate(j - 1) == self.saturate_first(j))
    }

    pub fn borel_tests(&self, characteristic: u32) -> BorelTests {
        BorelTests {
            strongly_stable: self.is_strongly_stable(),
            borel_type: self.is_borel_type(),
            borel_fixed: self.is_p_borel(characteristic),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Strong stability straight from the definition on all monomials of
    /// the ideal up to a degree.
    fn brute_strongly_stable(i: &MonomialIdeal, top: u32) -> bool {
        let n = i.nvars();
        (0..=top).all(|d| {
            crate::ring::monomials_of_degree(n, d).into_iter().filter(|m| i.contains(m)).all(|m: Monomial| {
                (0..n).all(|j| m.exps()[j] == 0 || (0..j).all(|k| i.contains(&m.with_exp(j, m.exps()[j] - 1).with_exp(k, m.exps()[k] + 1))))
            })
        })
    }

    #[test]
    fn small_cases() {
        let t = mi(2, &[&[1, 0]]).borel_tests(0);
        assert!(t.strongly_stable && t.borel_type && t.borel_fixed);
        assert!(!mi(2, &[&[0, 1]]).is_strongly_stable());
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(i.is_strongly_stable());
        assert!(brute_strongly_stable(&i, 5));
    }

    #[test]
    fn frobenius_power_is_p_borel_only() {
        // (x1^2, x2^2) is 2-Borel but not strongly stable.
        let i = mi(2, &[&[2, 0], &[0, 2]]);
        assert!(i.is_p_borel(2));
        assert!(!i.is_p_borel(3));
        assert!(!i.is_strongly_stable());
        assert!(!brute_strongly_stable(&i, 4));
        assert!(i.is_borel_type());
    }

    #[test]
    fn borel_type_without_stability() {
        let p = MonomialIdeal::prime(4, &[0, 1]);
        let q = mi(4, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 2, 0]]);
        let i = p.intersect(&q).unwrap();
        assert!(i.is_borel_type());
        assert!(!i.is_strongly_stable());
    }
}

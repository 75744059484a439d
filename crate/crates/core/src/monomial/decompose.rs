use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Monomial;

use super::MonomialIdeal;

/// Irredundant irreducible decomposition with the induced primary data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// Ideals generated by pure powers of variables.
    pub irreducible: Vec<MonomialIdeal>,
    /// Associated primes as sorted 0-based variable sets.
    pub associated_primes: Vec<Vec<usize>>,
    /// One primary component per associated prime, same order.
    pub primary: Vec<MonomialIdeal>,
}

fn is_irreducible(i: &MonomialIdeal) -> bool {
    i.generators().iter().all(|g| g.support().len() <= 1)
}

fn split(i: MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    let n = i.nvars();
    let Some(g) = i.generators().iter().find(|g| g.support().len() > 1).cloned() else {
        out.push(i);
        return;
    };
    let v = g.support()[0];
    let pure = Monomial::var_power(n, v, g.exps()[v]);
    let rest = g.strike(v);
    split(i.sum(&MonomialIdeal::new(n, vec![pure])).unwrap(), out);
    split(i.sum(&MonomialIdeal::new(n, vec![rest])).unwrap(), out);
}

/// Irreducible decomposition of a proper monomial ideal.
pub fn decompose(i: &MonomialIdeal) -> Result<Decomposition> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut comps = Vec::new();
    split(i.clone(), &mut comps);
    debug_assert!(comps.iter().all(is_irreducible));
    comps.sort_by(|a, b| a.generators().cmp(b.generators()));
    comps.dedup();
    // A component containing another one is redundant.
    let irreducible: Vec<MonomialIdeal> = comps
        .iter()
        .enumerate()
        .filter(|(k, q)| !comps.iter().enumerate().any(|(k2, q2)| k2 != *k && q.contains_ideal(q2)))
        .map(|(_, q)| q.clone())
        .collect();
    let mut associated_primes: Vec<Vec<usize>> = Vec::new();
    let mut primary: Vec<MonomialIdeal> = Vec::new();
    for q in &irreducible {
        let mut supp: Vec<usize> = q.generators().iter().map(|g| g.support()[0]).collect();
        supp.sort_unstable();
        match associated_primes.iter().position(|p| *p == supp) {
            Some(k) => primary[k] = primary[k].intersect(q).unwrap(),
            None => {
                associated_primes.push(supp);
                primary.push(q.clone());
            }
        }
    }
    Ok(Decomposition { irreducible, associated_primes, primary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn reintersect(d: &Decomposition, n: usize) -> MonomialIdeal {
        d.irreducible.iter().fold(MonomialIdeal::unit(n), |acc, q| acc.intersect(q).unwrap())
    }

    #[test]
    fn product_of_two_variables() {
        let d = decompose(&mi(2, &[&[1, 1]])).unwrap();
        assert_eq!(d.irreducible, vec![mi(2, &[&[0, 1]]), mi(2, &[&[1, 0]])]);
    }

    #[test]
    fn embedded_component() {
        let i = mi(2, &[&[2, 0], &[1, 1]]);
        let d = decompose(&i).unwrap();
        assert_eq!(d.irreducible.len(), 2);
        assert!(d.irreducible.contains(&mi(2, &[&[1, 0]])));
        assert!(d.irreducible.contains(&mi(2, &[&[2, 0], &[0, 1]])));
        assert!(d.associated_primes.contains(&vec![0]) && d.associated_primes.contains(&vec![0, 1]));
        // Membership brute force in low degree.
        let back = reintersect(&d, 2);
        for deg in 0..=3 {
            for m in crate::ring::monomials_of_degree(2, deg) {
                assert_eq!(back.contains(&m), i.contains(&m));
            }
        }
    }

    #[test]
    fn four_variable_example_components() {
        let p = MonomialIdeal::prime(4, &[0, 1]);
        let q = mi(4, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 2, 0]]);
        let i = p.intersect(&q).unwrap();
        let d = decompose(&i).unwrap();
        assert_eq!(reintersect(&d, 4), i);
        let mut ass = d.associated_primes.clone();
        ass.sort();
        assert_eq!(ass, vec![vec![0, 1], vec![0, 1, 2]]);
        let k = d.associated_primes.iter().position(|a| a.len() == 2).unwrap();
        assert_eq!(d.primary[k], p);
        assert_eq!(d.primary[1 - k], q);
    }

    #[test]
    fn unit_rejected() {
        assert_eq!(decompose(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }
}

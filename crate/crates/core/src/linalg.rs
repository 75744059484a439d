//! Dense exact linear algebra over a [`FieldSpec`].

use crate::ring::{Coeff, FieldSpec};

/// Row-reduces in place and returns the rank.
pub fn rank(k: &FieldSpec, mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(&rows[r][col]).unwrap();
        let pivot: Vec<Coeff> = rows[r].iter().map(|c| k.mul(c, &inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if k.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                if !k.is_zero(&pivot[j]) {
                    row[j] = k.sub(&row[j], &k.mul(&f, &pivot[j]));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Rank of an integer matrix regarded over `k`.
pub fn rank_int(k: &FieldSpec, rows: &[Vec<i64>]) -> usize {
    rank(k, rows.iter().map(|r| r.iter().map(|&v| k.from_i64(v)).collect()).collect())
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(k: &FieldSpec, m: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = m.len();
    let mut a: Vec<Vec<Coeff>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { k.one() } else { k.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !k.is_zero(&a[i][col]))?;
        a.swap(col, p);
        let inv = k.inv(&a[col][col]).unwrap();
        a[col] = a[col].iter().map(|c| k.mul(c, &inv)).collect();
        let pivot = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == col || k.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for j in 0..2 * n {
                row[j] = k.sub(&row[j], &k.mul(&f, &pivot[j]));
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(k: &FieldSpec, a: &[Vec<Coeff>], b: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(k.zero(), |acc, t| k.add(&acc, &k.mul(&row[t], &b[t][j])))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_inverse() {
        let k = FieldSpec::Rationals;
        assert_eq!(rank_int(&k, &[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_int(&k, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]), 2);
        let m: Vec<Vec<Coeff>> = vec![vec![k.from_i64(2), k.from_i64(1)], vec![k.from_i64(1), k.from_i64(1)]];
        let inv = inverse(&k, &m).unwrap();
        let id = mat_mul(&k, &m, &inv);
        assert_eq!(id[0][0], k.one());
        assert_eq!(id[0][1], k.zero());
        assert!(inverse(&k, &[vec![k.one(), k.one()], vec![k.one(), k.one()]]).is_none());
    }

    #[test]
    fn characteristic_matters() {
        let k = FieldSpec::prime(2).unwrap();
        assert_eq!(rank_int(&k, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 2);
        assert_eq!(rank_int(&FieldSpec::Rationals, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 3);
    }
}

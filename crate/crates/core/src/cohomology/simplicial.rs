//! Finite simplicial complexes on at most 64 vertices, with reduced
//! homology over a field.

use std::collections::HashMap;

use crate::linalg::rank_int;
use crate::ring::FieldSpec;

/// A downward closed family of vertex sets. The void complex has no faces;
/// the irrelevant complex has only the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub faces: Vec<u64>,
}

impl Complex {
    /// All subsets of `ground` satisfying `keep`, assumed downward closed.
    pub fn from_predicate(ground: u64, keep: impl Fn(u64) -> bool) -> Self {
        let mut faces = Vec::new();
        let mut sub = ground;
        loop {
            if keep(sub) {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & ground;
        }
        faces.sort_by_key(|f| (f.count_ones(), *f));
        Complex { faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: u64) -> bool {
        self.faces.binary_search_by_key(&(f.count_ones(), f), |g| (g.count_ones(), *g)).is_ok()
    }

    /// `lk F = {G : G and F disjoint, G u F a face}`.
    pub fn link(&self, f: u64) -> Complex {
        let mut faces: Vec<u64> = self.faces.iter().filter(|&&g| g & f == 0 && self.contains(g | f)).copied().collect();
        faces.sort_by_key(|g| (g.count_ones(), *g));
        Complex { faces }
    }

    /// Reduced Betti numbers `dim H~_i` for `i = -1..=dim`, as `(i, value)`
    /// with non-zero values only.
    pub fn reduced_homology(&self, k: &FieldSpec) -> Vec<(i64, usize)> {
        if self.faces.is_empty() {
            return Vec::new();
        }
        let top = self.faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
        // by_size[s] = faces with s vertices, i.e. of dimension s - 1.
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        // rank of the boundary from size s to size s - 1.
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows: Vec<Vec<i64>> = by_size[s]
                .iter()
                .map(|&f| {
                    let mut row = vec![0i64; by_size[s - 1].len()];
                    let mut sign = 1;
                    for v in 0..64 {
                        if f >> v & 1 == 1 {
                            row[index[&(f & !(1u64 << v))]] = sign;
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            ranks[s] = if rows.is_empty() || by_size[s - 1].is_empty() { 0 } else { rank_int(k, &rows) };
        }
        (0..=top)
            .filter_map(|s| {
                let betti = by_size[s].len() - ranks[s] - ranks[s + 1];
                (betti > 0).then_some((s as i64 - 1, betti))
            })
            .collect()
    }
}

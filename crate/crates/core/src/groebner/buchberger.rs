//! Buchberger's algorithm with Gebauer-Moeller pair elimination.

use crate::error::{Error, Result};
use crate::ring::{Monomial, TermOrder};

use super::kernel::{reduce, spoly, Arith, Reducer, Row};

/// How the next critical pair is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairStrategy {
    /// Smallest lcm degree first, ties broken by the term order.
    #[default]
    Normal,
    /// Oldest pair first.
    Fifo,
}

/// Resource caps and knobs for a Groebner computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// Largest admissible S-pair lcm degree.
    pub budget_degree: u64,
    /// Largest number of S-pairs reduced.
    pub max_pairs: usize,
    pub strategy: PairStrategy,
    /// Re-check every S-pair of the final basis.
    pub certify: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { budget_degree: 40, max_pairs: 2_000_000, strategy: PairStrategy::Normal, certify: true }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u64,
    seq: usize,
}

struct State<'o, C> {
    order: &'o TermOrder,
    polys: Vec<Reducer<C>>,
    live: Vec<bool>,
    pairs: Vec<Pair>,
    seq: usize,
}

impl<C> State<'_, C> {
    fn live_refs(&self) -> Vec<&Reducer<C>> {
        self.polys.iter().zip(&self.live).filter(|(_, &l)| l).map(|(p, _)| p).collect()
    }

    /// Insert a new element, pruning pairs by the Gebauer-Moeller criteria.
    fn update(&mut self, row: Row<C>) {
        let h = self.polys.len();
        let lh = row[0].0.clone();
        self.polys.push(Reducer::new(row));
        self.live.push(true);

        let mut cands: Vec<(usize, Monomial, bool)> = (0..h)
            .filter(|&g| self.live[g])
            .map(|g| {
                let lg = self.polys[g].lm();
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|c2| c2.1.divides(&c.1));
            if c.2 || !dominated {
                kept.push(c);
            }
        }
        let chosen: Vec<(usize, Monomial)> =
            kept.into_iter().filter(|c| !c.2).map(|c| (c.0, c.1)).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(polys[p.i].lm()) != p.lcm
                && lh.lcm(polys[p.j].lm()) != p.lcm)
        });
        for (g, l) in chosen {
            let deg = l.degree();
            self.pairs.push(Pair { i: g, j: h, lcm: l, deg, seq: self.seq });
            self.seq += 1;
        }
        for g in 0..h {
            if self.live[g] && lh.divides(self.polys[g].lm()) {
                self.live[g] = false;
            }
        }
    }

    fn select(&mut self, strategy: PairStrategy) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = match strategy {
            PairStrategy::Fifo => (0..self.pairs.len()).min_by_key(|&k| self.pairs[k].seq),
            PairStrategy::Normal => (0..self.pairs.len()).min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                p.deg.cmp(&q.deg).then(order.cmp(&p.lcm, &q.lcm)).then(p.seq.cmp(&q.seq))
            }),
        }?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Groebner basis of the rows, sorted by increasing leading monomial.
pub(crate) fn buchberger<A: Arith>(
    a: &A,
    order: &TermOrder,
    input: Vec<Row<A::C>>,
    opts: &GbOptions,
    truncate: Option<u64>,
) -> Result<Vec<Row<A::C>>> {
    let mut input: Vec<Row<A::C>> = input.into_iter().filter(|r| !r.is_empty()).collect();
    input.sort_by(|x, y| x[0].0.degree().cmp(&y[0].0.degree()).then(order.cmp(&x[0].0, &y[0].0)));
    let mut st = State { order, polys: Vec::new(), live: Vec::new(), pairs: Vec::new(), seq: 0 };
    for f in input {
        let r = reduce(a, order, f, &st.live_refs(), true);
        if let Some(lead) = r.first() {
            if lead.0.is_one() {
                return Ok(vec![r]);
            }
            st.update(r);
        }
    }
    let mut done = 0usize;
    while let Some(p) = st.select(opts.strategy) {
        if truncate.is_some_and(|t| p.deg > t) {
            continue;
        }
        if p.deg > opts.budget_degree {
            return Err(Error::Budget(format!(
                "S-pair of degree {} exceeds the degree budget {}",
                p.deg, opts.budget_degree
            )));
        }
        done += 1;
        if done > opts.max_pairs {
            return Err(Error::Budget(format!("more than {} S-pairs", opts.max_pairs)));
        }
        let s = spoly(a, order, &st.polys[p.i].row, &st.polys[p.j].row);
        let r = reduce(a, order, s, &st.live_refs(), true);
        if let Some(lead) = r.first() {
            if lead.0.is_one() {
                let mut r = r;
                a.normalize(&mut r);
                return Ok(vec![r]);
            }
            st.update(r);
        }
    }
    let basis = interreduce(a, order, st.polys.into_iter().zip(st.live).filter(|(_, l)| *l).map(|(p, _)| p.row).collect());
    if opts.certify && truncate.is_none() {
        certify(a, order, &basis)?;
    }
    Ok(basis)
}

/// Minimalize and fully reduce a Groebner basis.
pub(crate) fn interreduce<A: Arith>(a: &A, order: &TermOrder, rows: Vec<Row<A::C>>) -> Vec<Row<A::C>> {
    let mut rows: Vec<Row<A::C>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    rows.sort_by(|x, y| order.cmp(&x[0].0, &y[0].0));
    let mut minimal: Vec<Row<A::C>> = Vec::new();
    for r in rows {
        if !minimal.iter().any(|m| m[0].0.divides(&r[0].0)) {
            minimal.push(r);
        }
    }
    let reducers: Vec<Reducer<A::C>> = minimal.into_iter().map(Reducer::new).collect();
    (0..reducers.len())
        .map(|k| {
            let others: Vec<&Reducer<A::C>> =
                reducers.iter().enumerate().filter(|(k2, _)| *k2 != k).map(|(_, r)| r).collect();
            // The lead is irreducible by the others, so only the tail moves.
            reduce(a, order, reducers[k].row.clone(), &others, true)
        })
        .collect()
}

/// Every S-pair with non-coprime leads reduces to zero.
fn certify<A: Arith>(a: &A, order: &TermOrder, basis: &[Row<A::C>]) -> Result<()> {
    let reducers: Vec<Reducer<A::C>> = basis.iter().cloned().map(Reducer::new).collect();
    let refs: Vec<&Reducer<A::C>> = reducers.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i][0].0.is_coprime(&basis[j][0].0) {
                continue;
            }
            let s = spoly(a, order, &basis[i], &basis[j]);
            if !reduce(a, order, s, &refs, true).is_empty() {
                return Err(Error::InvalidInput("internal: Groebner certificate failed".into()));
            }
        }
    }
    Ok(())
}

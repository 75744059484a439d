use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cohomology::{
    cohomology, default_window, monomial_regularity, regularity, CohomologyTable, Confidence, RegMethod, RegOptions,
    RegStrategy,
};
use crate::corpus::{CorpusEntry, Recipe};
use crate::error::{Error, Result};
use crate::groebner::{gin, IdealHandle};
use crate::hilbert::{gotzmann, hilbert_of_ideal, series, HilbertSeries};
use crate::monomial::degree_data;
use crate::ring::{FieldSpec, TermOrder};

use super::eval::{eval_bound, f3_premise, f4_base, pi, sigma, spec, Hypothesis, Invariants};

/// What is known about whether `R/I` is reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reducedness {
    /// Checked: a squarefree monomial ideal.
    Known,
    /// Taken from the construction, e.g. a toric prime.
    Asserted,
    NonReduced,
    Unknown,
}

impl Reducedness {
    pub fn holds(&self) -> bool {
        matches!(self, Reducedness::Known | Reducedness::Asserted)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdegSource {
    /// Standard pairs of a monomial ideal.
    Exact,
    /// The degree of a prime.
    Prime,
    Supplied,
    /// Arithmetic degree of the grevlex initial ideal, which bounds it from above.
    InitialUpperBound,
    Unavailable,
}

/// An ideal together with the facts the audit cannot compute by itself.
#[derive(Clone, Debug)]
pub struct AuditInput {
    pub id: String,
    pub ideal: IdealHandle,
    pub reduced: Reducedness,
    pub adeg: Option<BigInt>,
    pub adeg_source: AdegSource,
    /// Exact local cohomology from outside the generic initial ideal route.
    pub cohomology: Option<CohomologyTable>,
}

impl AuditInput {
    /// Monomial ideals get exact reducedness and arithmetic degree; anything
    /// else starts unknown.
    pub fn new(id: impl Into<String>, ideal: IdealHandle) -> Self {
        let mut input = AuditInput {
            id: id.into(),
            ideal,
            reduced: Reducedness::Unknown,
            adeg: None,
            adeg_source: AdegSource::Unavailable,
            cohomology: None,
        };
        if let Some(m) = input.ideal.as_monomial() {
            input.reduced = if m.is_squarefree() { Reducedness::Known } else { Reducedness::NonReduced };
            if let Ok(dd) = degree_data(&m) {
                input.adeg = Some(BigInt::from(dd.adeg));
                input.adeg_source = AdegSource::Exact;
            }
        }
        input
    }

    pub fn with_adeg(mut self, adeg: BigInt, source: AdegSource) -> Self {
        self.adeg = Some(adeg);
        self.adeg_source = source;
        self
    }

    pub fn from_entry(entry: &CorpusEntry) -> Result<Self> {
        let mut input = AuditInput::new(entry.id.clone(), entry.ideal.clone());
        match entry.recipe {
            Recipe::RationalCurve { .. } | Recipe::TwistedCubic => {
                input.reduced = Reducedness::Asserted;
                let e = hilbert_of_ideal(&entry.ideal, &TermOrder::GrevLex)?.degree();
                input = input.with_adeg(e, AdegSource::Prime);
            }
            Recipe::DoubleLine { .. } => input.reduced = Reducedness::NonReduced,
            _ => {}
        }
        if input.adeg.is_none() {
            if let Some(a) = entry.known("adeg").and_then(|v| v.as_u64()) {
                input = input.with_adeg(BigInt::from(a), AdegSource::Supplied);
            }
        }
        if let Some(curve) = entry.monomial_curve() {
            input.cohomology = Some(curve.table(default_window(curve.degree as i64, 2)));
        }
        Ok(input)
    }
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub reg: RegOptions,
    /// Orders for the initial-ideal bounds.
    pub orders: Vec<TermOrder>,
    pub window: Option<(i64, i64)>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            reg: RegOptions::default(),
            orders: vec![TermOrder::Lex, TermOrder::GrLex, TermOrder::GrevLex],
            window: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GotzmannRun {
    pub c: u32,
    #[serde(with = "crate::serde_big")]
    pub count: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSnapshot {
    pub n: usize,
    pub d: usize,
    pub c: usize,
    /// Largest minimal generator degree.
    pub delta: Option<u64>,
    pub deltas: Vec<u64>,
    #[serde(with = "crate::serde_big::opt")]
    pub sigma: Option<BigInt>,
    #[serde(with = "crate::serde_big::opt")]
    pub pi: Option<BigInt>,
    #[serde(with = "crate::serde_big")]
    pub e: BigInt,
    #[serde(with = "crate::serde_big::vec")]
    pub e_list: Vec<BigInt>,
    #[serde(with = "crate::serde_big::opt")]
    pub adeg: Option<BigInt>,
    pub adeg_source: AdegSource,
    pub reduced: Reducedness,
    /// `reg(R/I)`.
    pub reg: Option<i64>,
    pub reg_confidence: Option<Confidence>,
    pub reg_method: Option<RegMethod>,
    #[serde(rename = "B_colength")]
    pub b_colength: Option<u64>,
    pub gotzmann_c: Vec<GotzmannRun>,
    #[serde(with = "crate::serde_big::opt")]
    pub gotzmann_s: Option<BigInt>,
    #[serde(rename = "B_list", with = "crate::serde_big::vec")]
    pub b_list: Vec<BigInt>,
    pub postulation: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub hypotheses_met: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unmet: Vec<String>,
    #[serde(with = "crate::serde_big::opt")]
    pub bound: Option<BigInt>,
    #[serde(with = "crate::serde_big::opt")]
    pub actual: Option<BigInt>,
    /// `None` when the actual value is only known from above and exceeds the bound.
    pub satisfied: Option<bool>,
    #[serde(with = "crate::serde_big::opt")]
    pub slack: Option<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundEntry {
    pub fn is_violation(&self) -> bool {
        self.hypotheses_met && self.satisfied == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditError {
    pub bound: String,
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub id: String,
    pub invariants: InvariantSnapshot,
    pub bounds: Vec<BoundEntry>,
    pub errors: Vec<AuditError>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.bounds.iter().filter(|b| b.is_violation()).collect()
    }
}

struct Facts {
    reduced: bool,
    d: u64,
    monomial: bool,
    delta: u64,
    min_delta: u64,
    infinite: bool,
}

impl Facts {
    fn holds(&self, h: &Hypothesis) -> bool {
        match *h {
            Hypothesis::Reduced => self.reduced,
            Hypothesis::DimAtLeast(k) => self.d >= k,
            Hypothesis::DimAtMost(k) => self.d <= k,
            Hypothesis::DimEquals(k) => self.d == k,
            Hypothesis::MonomialIdeal => self.monomial,
            Hypothesis::NoLinearForm => self.min_delta >= 2,
            Hypothesis::DeltaAtLeastTwo => self.delta >= 2,
            Hypothesis::InfiniteField => self.infinite,
        }
    }
}

/// One measured value of the bounded quantity, with an optional label such
/// as the degree `t` it was read at.
struct Sample {
    inv: Invariants,
    actual: BigInt,
    /// The actual value is only an upper bound.
    upper: bool,
    label: Option<String>,
}

struct Builder<'a> {
    facts: &'a Facts,
    bounds: Vec<BoundEntry>,
    errors: Vec<AuditError>,
}

impl Builder<'_> {
    fn fail(&mut self, name: &str, e: &Error) {
        self.errors.push(AuditError { bound: name.into(), code: e.code().into(), message: e.to_string() });
    }

    fn unmet(&self, base: &str) -> Vec<String> {
        spec(base)
            .map(|s| s.hypotheses.iter().filter(|h| !self.facts.holds(h)).map(|h| h.to_string()).collect())
            .unwrap_or_default()
    }

    /// Records the sample of least slack: the tightest point of a
    /// pointwise bound. Any exact violation wins.
    fn add(&mut self, name: &str, base: &str, samples: Result<Vec<Sample>>, extra_met: bool, note: Option<String>) {
        let unmet = self.unmet(base);
        let met = unmet.is_empty() && extra_met;
        let samples = match samples {
            Ok(s) => s,
            Err(e) => return self.fail(name, &e),
        };
        let mut best: Option<(BoundEntry, u8)> = None;
        for s in samples {
            let bound = match eval_bound(base, &s.inv) {
                Ok(b) => b,
                Err(Error::InvalidInput(msg)) if !met => {
                    let entry = BoundEntry {
                        name: name.into(),
                        hypotheses_met: false,
                        unmet: unmet.clone(),
                        bound: None,
                        actual: Some(s.actual),
                        satisfied: None,
                        slack: None,
                        note: Some(msg),
                    };
                    best.get_or_insert((entry, 0));
                    continue;
                }
                Err(e) => return self.fail(name, &e),
            };
            let slack = &bound - &s.actual;
            let satisfied = if !slack.is_negative() {
                Some(true)
            } else if s.upper {
                None
            } else {
                Some(false)
            };
            // Violations first, then inconclusive points, then least slack.
            let rank = match satisfied {
                Some(false) => 3,
                None => 2,
                Some(true) => 1,
            };
            let mut notes: Vec<String> = s.label.into_iter().collect();
            if s.upper {
                notes.push("actual is an upper bound".into());
            }
            notes.extend(note.clone());
            let entry = BoundEntry {
                name: name.into(),
                hypotheses_met: met,
                unmet: unmet.clone(),
                bound: Some(bound),
                actual: Some(s.actual),
                satisfied,
                slack: Some(slack),
                note: if notes.is_empty() { None } else { Some(notes.join("; ")) },
            };
            let better = match &best {
                None => true,
                Some((b, r)) => rank > *r || (rank == *r && entry.slack < b.slack),
            };
            if better {
                best = Some((entry, rank));
            }
        }
        if let Some((entry, _)) = best {
            self.bounds.push(entry);
        }
    }
}

fn scalar(inv: &Invariants, actual: impl Into<BigInt>, upper: bool) -> Result<Vec<Sample>> {
    Ok(vec![Sample { inv: inv.clone(), actual: actual.into(), upper, label: None }])
}

fn need_reg(reg: Option<i64>) -> Result<i64> {
    reg.ok_or_else(|| Error::IncompleteInput("reg".into()))
}

fn series_of(i: &IdealHandle) -> Result<HilbertSeries> {
    match i.as_monomial() {
        Some(m) => Ok(series(&m)),
        None => hilbert_of_ideal(i, &TermOrder::GrevLex),
    }
}

/// `ℓ(R/(I, x_{c+1}, ..., x_n))` in generic coordinates.
fn colength_b(i: &IdealHandle, opts: &RegOptions) -> Result<Option<u64>> {
    let m = match i.as_monomial() {
        Some(m) if m.is_borel_type() => m,
        _ => gin(i, &TermOrder::GrevLex, opts.seed, opts.trials)?.ideal,
    };
    Ok(degree_data(&m)?.colength_b)
}

/// Evaluates every bound against exactly computed invariants.
pub fn audit(input: &AuditInput, opts: &AuditOptions) -> Result<BoundReport> {
    let ideal = &input.ideal;
    let n = ideal.ring().nvars;
    let hs = series_of(ideal)?;
    if hs.is_zero() {
        return Err(Error::UnitIdeal);
    }
    let d = hs.dim;
    let c = n - d;
    let p = hs.polynomial();
    let e = hs.degree();
    let deltas = ideal.deltas()?;
    let mut errors = Vec::new();
    let mut record = |name: &str, e: &Error| {
        errors.push(AuditError { bound: name.into(), code: e.code().into(), message: e.to_string() })
    };

    let (mut adeg, mut adeg_source) = (input.adeg.clone(), input.adeg_source);
    if adeg.is_none() {
        match ideal.initial_ideal(&TermOrder::GrevLex).and_then(|m| degree_data(&m)) {
            Ok(dd) => {
                adeg = Some(BigInt::from(dd.adeg));
                adeg_source = AdegSource::InitialUpperBound;
            }
            Err(err) => record("adeg", &err),
        }
    }
    let cert = match regularity(ideal, RegStrategy::Auto, &opts.reg) {
        Ok(c) => Some(c),
        Err(err) => {
            record("reg", &err);
            None
        }
    };
    let reg_upper = cert.as_ref().is_some_and(|c| c.confidence == Confidence::NonGenericUpperBound);
    let reg = cert.as_ref().map(|c| c.reg);
    let rep = if d >= 1 {
        match gotzmann(&p) {
            Ok(g) => Some(g),
            Err(err) => {
                record("gotzmann", &err);
                None
            }
        }
    } else {
        None
    };
    let b_col = match colength_b(ideal, &opts.reg) {
        Ok(b) => b,
        Err(err) => {
            record("B_colength", &err);
            None
        }
    };

    let base = Invariants {
        n: Some(n as u64),
        d: Some(d as u64),
        c: Some(c as u64),
        deltas: if deltas.is_empty() { None } else { Some(deltas.clone()) },
        e: Some(e.clone()),
        adeg: adeg.clone(),
        reg,
        gotzmann_s: rep.as_ref().map(|g| g.s()),
        ..Default::default()
    };
    let snapshot = InvariantSnapshot {
        n,
        d,
        c,
        delta: deltas.first().copied(),
        deltas: deltas.clone(),
        sigma: sigma(&base).ok(),
        pi: pi(&base).ok(),
        e: e.clone(),
        e_list: p.e.clone(),
        adeg: adeg.clone(),
        adeg_source,
        reduced: input.reduced,
        reg,
        reg_confidence: cert.as_ref().map(|c| c.confidence),
        reg_method: cert.as_ref().map(|c| c.method),
        b_colength: b_col,
        gotzmann_c: rep
            .as_ref()
            .map(|g| g.runs.iter().map(|(c, m)| GotzmannRun { c: *c, count: m.clone() }).collect())
            .unwrap_or_default(),
        gotzmann_s: rep.as_ref().map(|g| g.s()),
        b_list: rep.as_ref().map(|g| g.b.clone()).unwrap_or_default(),
        postulation: hs.postulation_index(),
    };

    let facts = Facts {
        reduced: input.reduced.holds(),
        d: d as u64,
        monomial: ideal.is_monomial(),
        delta: deltas.first().copied().unwrap_or(0),
        min_delta: deltas.last().copied().unwrap_or(0),
        infinite: ideal.ring().field == FieldSpec::Rationals,
    };
    let adeg_note = (adeg_source == AdegSource::InitialUpperBound).then(|| "adeg is an upper bound".to_string());
    let mut b = Builder { facts: &facts, bounds: Vec::new(), errors };

    // Regularity.
    let reg_i = reg.map(|r| r + 1);
    for (name, ideal_level, uses_adeg) in
        [("C4", true, true), ("C6i", false, true), ("C7", true, true), ("E1", true, false), ("E2", false, false), ("E5i", false, false)]
    {
        let actual = if ideal_level { reg_i } else { reg };
        let samples = need_reg(actual).and_then(|a| scalar(&base, a, reg_upper));
        b.add(name, name, samples, true, if uses_adeg { adeg_note.clone() } else { None });
    }
    b.add("D2", "D2", scalar(&base, c as u64, false), true, adeg_note.clone());

    // Hilbert coefficients.
    for i in 1..d as u64 {
        let inv = Invariants { index: Some(i), ..base.clone() };
        let actual = p.e[i as usize].abs();
        let mut names = vec!["B3", "B3b", "C10", "E7", "B7"];
        names.push(if i == 1 { "E7i" } else { "E7ii" });
        for name in names {
            let samples = if name == "B3" || name == "B3b" {
                need_reg(reg).and_then(|_| scalar(&inv, actual.clone(), false))
            } else {
                scalar(&inv, actual.clone(), false)
            };
            let note = if matches!(name, "B3" | "C10" | "B7") { adeg_note.clone() } else { None };
            b.add(&format!("{name}[i={i}]"), name, samples, true, note);
        }
    }

    // Hilbert function.
    let t_top = (hs.postulation_index() as i64).max(reg.unwrap_or(0)) + d as i64 + 2;
    let d1 = (0..=t_top)
        .map(|t| Sample { inv: Invariants { t: Some(t), ..base.clone() }, actual: hs.value(t as u64), upper: false, label: Some(format!("t = {t}")) })
        .collect();
    b.add("D1", "D1", Ok(d1), true, None);

    // Local cohomology.
    let table = match &input.cohomology {
        Some(t) => Ok((t.clone(), false)),
        // Away from the exact routes the table is that of a generic initial
        // ideal, which bounds each h^i from above.
        None => cohomology(ideal, opts.window, &opts.reg).map(|(t, conf, _)| (t, conf != Confidence::Exact)),
    };
    match table {
        Ok((table, upper)) => {
            let (t0, t1) = table.window;
            let pointwise = |i: usize, lo: i64, hi: i64, inv: &Invariants| -> Vec<Sample> {
                (lo.max(t0)..=hi.min(t1))
                    .filter_map(|t| {
                        table.value(i, t).map(|v| Sample {
                            inv: Invariants { t: Some(t), ..inv.clone() },
                            actual: v.clone(),
                            upper,
                            label: Some(format!("t = {t}")),
                        })
                    })
                    .collect()
            };
            if d >= 1 {
                b.add("C6ii", "C6ii", Ok(pointwise(1, 0, t1, &base)), true, adeg_note.clone());
                b.add("C2", "C2", Ok(pointwise(1, -1, -1, &base)), true, adeg_note.clone());
            }
            b.add("E3", "E3", Ok(pointwise(0, 1, t1, &base)), true, None);
            b.add("E5ii", "E5ii", Ok(pointwise(0, 1, t1, &base)), true, None);
            b.add("A4i", "A4i", Ok(pointwise(0, 0, t1, &base)), true, None);
            if let Some(r) = reg {
                for j in 1..d {
                    let inv = Invariants { index: Some(j as u64), ..base.clone() };
                    b.add(&format!("A4ii[j={j}]"), "A4ii", Ok(pointwise(j, t0, r, &inv)), true, None);
                }
                if d >= 1 {
                    b.add("A4iii", "A4iii", Ok(pointwise(d, t0, r - 1, &base)), true, None);
                }
            }
        }
        Err(err) => b.fail("cohomology", &err),
    }

    // Gotzmann invariants through the combinatorial lemma.
    if let Some(g) = &rep {
        match f4_base(&base) {
            Ok(m) => {
                let premise = f3_premise(&p.e, &m, 1, 1);
                for (j, bj) in g.b.iter().enumerate() {
                    let inv = Invariants { m: Some(m.clone()), alpha: Some(1), beta: Some(1), index: Some(j as u64), ..base.clone() };
                    let met = *premise.as_ref().unwrap_or(&false);
                    let note = Some(format!("M = {m}, alpha = beta = 1"));
                    b.add(&format!("F3[j={j}]"), "F3", scalar(&inv, bj.clone(), false), met, note);
                }
            }
            Err(err) => b.fail("F3", &err),
        }
    }

    // Initial ideals.
    for order in &opts.orders {
        let r = ideal
            .initial_ideal(order)
            .and_then(|m| monomial_regularity(&m, &ideal.ring().field, RegStrategy::Auto))
            .map(|c| BigInt::from(c.reg_ideal()));
        match r {
            Ok(r) => {
                for name in ["F1", "F4i", "F4ii"] {
                    let samples = if name == "F1" { need_reg(reg).and_then(|_| scalar(&base, r.clone(), false)) } else { scalar(&base, r.clone(), false) };
                    let note = if name == "F4ii" { adeg_note.clone() } else { None };
                    b.add(&format!("{name}[{order}]"), name, samples, true, note);
                }
            }
            Err(err) => b.fail(&format!("in[{order}]"), &err),
        }
    }

    let Builder { bounds, errors, .. } = b;
    Ok(BoundReport { id: input.id.clone(), invariants: snapshot, bounds, errors })
}

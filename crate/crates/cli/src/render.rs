//! Human-readable text.

use num_bigint::BigInt;
use num_traits::One;

use cmreg::cohomology::CohomologyTable;
use cmreg::io::ReportDocument;

pub fn big(x: &BigInt) -> String {
    x.to_string()
}

pub fn bigs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(big).collect()
}

pub fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

/// Long numbers as a digit count, for tables.
fn short(x: &BigInt) -> String {
    let s = x.to_string();
    if s.len() <= 24 {
        s
    } else {
        format!("{}...({} digits)", &s[..8], s.trim_start_matches('-').len())
    }
}

/// Run-length form `(1, 0^16)`.
pub fn c_sequence(runs: &[(u32, BigInt)]) -> String {
    let parts: Vec<String> = runs
        .iter()
        .map(|(c, m)| if m.is_one() { c.to_string() } else { format!("{c}^{m}") })
        .collect();
    tuple(&parts)
}

pub fn cohomology_grid(t: &CohomologyTable) -> String {
    let (t0, t1) = t.window;
    let cells: Vec<Vec<String>> = t.h.iter().map(|row| row.iter().map(big).collect()).collect();
    let width = cells.iter().flatten().map(String::len).chain([3, t0.to_string().len(), t1.to_string().len()]).max().unwrap();
    let mut out = format!("{:>5}", "t");
    for k in t0..=t1 {
        out += &format!(" {k:>width$}");
    }
    out.push('\n');
    for (i, row) in cells.iter().enumerate() {
        out += &format!("{:>5}", format!("h^{i}"));
        for c in row {
            out += &format!(" {c:>width$}");
        }
        out.push('\n');
    }
    out += &format!("reg = {}\n", t.regularity());
    out
}

pub fn audit_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for r in &doc.ideals {
        let inv = &r.invariants;
        out += &format!(
            "== {}: n={} d={} c={} e={} adeg={} reg={}\n",
            r.id,
            inv.n,
            inv.d,
            inv.c,
            inv.e,
            inv.adeg.as_ref().map_or("?".into(), |a| a.to_string()),
            inv.reg.map_or("?".into(), |x| x.to_string())
        );
        for b in &r.bounds {
            let status = match (b.hypotheses_met, b.satisfied) {
                (true, Some(true)) => "ok",
                (true, Some(false)) => "VIOLATED",
                (false, Some(true)) => "ok (hypotheses unmet)",
                (false, Some(false)) => "fails (hypotheses unmet)",
                (_, None) => "inconclusive",
            };
            out += &format!(
                "  {:<14} {:>28} {:>28}  {}\n",
                b.name,
                b.actual.as_ref().map_or("-".into(), short),
                b.bound.as_ref().map_or("-".into(), short),
                status
            );
        }
        for e in &r.errors {
            out += &format!("  {:<14} error[{}]: {}\n", e.bound, e.code, e.message);
        }
    }
    let total: usize = doc.ideals.iter().map(|r| r.bounds.len()).sum();
    out += &format!("{} ideals, {} bound checks, {} violations\n", doc.ideals.len(), total, doc.violations());
    out
}

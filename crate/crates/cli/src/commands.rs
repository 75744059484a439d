use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use cmreg::bounds::{audit, finiteness_explorer, AuditOptions, BoundReport};
use cmreg::cohomology::{cohomology, default_window, hyperplane_section, regularity, RegOptions, RegStrategy};
use cmreg::groebner::{gin, GbOptions, IdealHandle};
use cmreg::hilbert::{b_via_recursion, gotzmann, hilbert_of_ideal, lex_segment_of_ideal};
use cmreg::io::{parse_order, IdealFile, ReportDocument, Seeds};
use cmreg::monomial::degree_data;
use cmreg::ring::TermOrder;
use cmreg::{Error, Result};

use crate::render::{big, bigs, c_sequence, cohomology_grid, tuple};
use crate::{Command, Format, Global, Show, Strategy};

pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    /// A bound with met hypotheses failed.
    pub violation: bool,
}

struct Loaded {
    file: IdealFile,
    ideal: IdealHandle,
    order: TermOrder,
}

fn gb_options(g: &Global) -> GbOptions {
    GbOptions { budget_degree: g.budget_degree, ..GbOptions::default() }
}

fn reg_options(g: &Global) -> RegOptions {
    RegOptions { seed: g.seed, trials: g.trials }
}

fn window(g: &Global) -> Result<Option<(i64, i64)>> {
    let Some(w) = &g.window else { return Ok(None) };
    let bad = || Error::InvalidInput(format!("window must be t0:t1, got {w:?}"));
    let (a, b) = w.split_once(':').ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(Error::InvalidInput(format!("empty window {a}:{b}")));
    }
    Ok(Some((a, b)))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path, g: &Global) -> Result<Loaded> {
    let file = IdealFile::parse(&read(path)?, g.strict)?;
    let ideal = file.ideal(&gb_options(g))?;
    let order = match &g.order {
        Some(o) => parse_order(o)?,
        None => file.order.clone().unwrap_or(TermOrder::GrevLex),
    };
    order.check(file.names.len())?;
    Ok(Loaded { file, ideal, order })
}

fn emit(g: &Global, text: String, value: Value) -> String {
    match g.format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).unwrap() + "\n",
    }
}

fn done(stdout: String, l: Option<&Loaded>) -> Output {
    Output { stdout, warnings: l.map(|l| l.file.warnings.clone()).unwrap_or_default(), violation: false }
}

pub fn run(cmd: &Command, g: &Global) -> Result<Output> {
    match cmd {
        Command::Gb { file } => {
            let l = load(file, g)?;
            let basis = l.ideal.gb(&l.order)?;
            let polys: Vec<String> = basis.generators().iter().map(|p| p.display_with(&l.file.names)).collect();
            let text = format!("order: {}\n{}\n", l.order, polys.join("\n"));
            Ok(done(emit(g, text, json!({"order": l.order.to_string(), "basis": polys})), Some(&l)))
        }
        Command::In { file } => {
            let l = load(file, g)?;
            let m = l.ideal.initial_ideal(&l.order)?;
            let gens: Vec<String> = m.generators().iter().map(|x| x.display_with(&l.file.names)).collect();
            let text = format!("in_{}(I) = ({})\n", l.order, gens.join(", "));
            Ok(done(emit(g, text, json!({"order": l.order.to_string(), "generators": gens})), Some(&l)))
        }
        Command::Gin { file } => {
            let l = load(file, g)?;
            let r = gin(&l.ideal, &l.order, g.seed, g.trials)?;
            let gens: Vec<String> = r.ideal.generators().iter().map(|x| x.display_with(&l.file.names)).collect();
            let text = format!(
                "gin_{}(I) = ({})\nagreement of {} trials (probabilistic, seeds {:?})\n",
                l.order,
                gens.join(", "),
                r.seeds.len(),
                r.seeds
            );
            let v = json!({"order": l.order.to_string(), "generators": gens, "seeds": r.seeds, "probabilistic_generic": r.probabilistic_generic});
            Ok(done(emit(g, text, v), Some(&l)))
        }
        Command::Hilbert { file, show } => hilbert(file, *show, g),
        Command::Reg { file, strategy } => {
            let l = load(file, g)?;
            let s = match strategy {
                Strategy::Auto => RegStrategy::Auto,
                Strategy::Hpv => RegStrategy::Hpv,
                Strategy::Ek => RegStrategy::Ek,
                Strategy::Gin => RegStrategy::Gin,
                Strategy::Koszul => RegStrategy::Koszul,
            };
            let c = regularity(&l.ideal, s, &reg_options(g))?;
            let text = format!(
                "reg(R/I) = {}, reg I = {}\nmethod: {}, confidence: {}\n",
                c.reg,
                c.reg_ideal(),
                json!(c.method).as_str().unwrap(),
                json!(c.confidence).as_str().unwrap()
            );
            let v = json!({"reg": c.reg, "reg_ideal": c.reg_ideal(), "reg_k": c.reg_k, "method": c.method, "confidence": c.confidence});
            Ok(done(emit(g, text, v), Some(&l)))
        }
        Command::Adeg { file } => {
            let l = load(file, g)?;
            let m = l
                .ideal
                .as_monomial()
                .ok_or_else(|| Error::Hypothesis("adeg needs a monomial ideal (see `in` for an initial ideal)".into()))?;
            let dd = degree_data(&m)?;
            let layers: Vec<String> = dd.adeg_r.iter().enumerate().map(|(k, v)| format!("{}:{v}", k as i64 - 1)).collect();
            let text = format!(
                "dim = {}, codim = {}\ndeg = {}, adeg = {}\nadeg layers (r:count) = {}\nB_colength = {}\n",
                dd.dim,
                dd.codim,
                dd.degree,
                dd.adeg,
                layers.join(" "),
                dd.colength_b.map_or("infinite".into(), |b| b.to_string())
            );
            let v = json!({"dim": dd.dim, "codim": dd.codim, "deg": dd.degree, "adeg": dd.adeg, "adeg_r": dd.adeg_r, "B_colength": dd.colength_b});
            Ok(done(emit(g, text, v), Some(&l)))
        }
        Command::Cohomology { file } => {
            let l = load(file, g)?;
            let curve = match l.file.recipe {
                Some(_) => l.file.corpus_entry("file", &gb_options(g))?.monomial_curve(),
                None => None,
            };
            let (t, conf, method) = match curve {
                Some(c) => {
                    let w = window(g)?.unwrap_or_else(|| default_window(c.degree as i64, 2));
                    (c.table(w), json!("exact"), json!("monomial-curve"))
                }
                None => {
                    let (t, conf, method) = cohomology(&l.ideal, window(g)?, &reg_options(g))?;
                    (t, json!(conf), json!(method))
                }
            };
            let text = format!(
                "{}method: {}, confidence: {}\n",
                cohomology_grid(&t),
                method.as_str().unwrap(),
                conf.as_str().unwrap()
            );
            let rows: Vec<Value> = t.h.iter().map(|r| json!(bigs(r))).collect();
            let v = json!({"window": [t.window.0, t.window.1], "dim": t.dim, "h": rows, "a": t.a, "regularity": t.regularity(), "method": method, "confidence": conf});
            Ok(done(emit(g, text, v), Some(&l)))
        }
        Command::LexSegment { file } => {
            let l = load(file, g)?;
            let m = lex_segment_of_ideal(&l.ideal)?;
            let gens: Vec<String> = m.generators().iter().map(|x| x.display_with(&l.file.names)).collect();
            let text = format!("L = ({})\n", gens.join(", "));
            Ok(done(emit(g, text, json!({"generators": gens})), Some(&l)))
        }
        Command::Section { file } => {
            let l = load(file, g)?;
            let cut = hyperplane_section(&l.ideal, g.seed)?;
            let names = &l.file.names[..l.file.names.len() - 1];
            let basis = cut.gb(&TermOrder::GrevLex)?;
            let polys: Vec<String> = basis.generators().iter().map(|p| p.display_with(names)).collect();
            let text = format!("vars: {}\ngens:\n{}", names.join(" "), polys.iter().map(|p| format!("  {p}\n")).collect::<String>());
            Ok(done(emit(g, text, json!({"vars": names, "basis": polys})), Some(&l)))
        }
        Command::Audit { path, report } => audit_cmd(path, report.as_deref(), g),
        Command::Enumerate { n, a, d } => {
            let r = finiteness_explorer(*n, *a, *d)?;
            let mut text = format!(
                "n = {}, adeg <= {}, dim = {}: {} ideals, {} Hilbert functions\n",
                r.n,
                r.a,
                r.d,
                r.ideals,
                r.functions.len()
            );
            for f in &r.functions {
                text += &format!(
                    "  P(t) = {}, H = {}, ideals {}, max reg I {}, least adeg {}\n",
                    f.polynomial,
                    tuple(&bigs(&f.values)),
                    f.count,
                    f.max_reg,
                    f.adeg
                );
            }
            text += &format!(
                "max reg I = {}\nC4 bound = {}\nwithin C4: {}\n",
                r.max_reg.map_or("-".into(), |m| m.to_string()),
                r.c4_bound.as_ref().map_or("-".into(), big),
                r.within_c4
            );
            Ok(Output { stdout: emit(g, text, serde_json::to_value(&r).unwrap()), warnings: Vec::new(), violation: false })
        }
    }
}

fn hilbert(file: &Path, show: Show, g: &Global) -> Result<Output> {
    let l = load(file, g)?;
    let hs = hilbert_of_ideal(&l.ideal, &TermOrder::GrevLex)?;
    let p = hs.polynomial();
    let mut text = String::new();
    let mut v = json!({"dim": hs.dim});
    if matches!(show, Show::Series | Show::All) {
        let q = hs.postulation_index();
        text += &format!(
            "dim = {}\nnumerator = {}\nh = {}\nH(0..{}) = {}\npostulation index = {q}\n",
            hs.dim,
            tuple(&bigs(&hs.numerator)),
            tuple(&bigs(&hs.h)),
            q + 2,
            tuple(&bigs(&hs.values(q + 2)))
        );
        v["numerator"] = json!(bigs(&hs.numerator));
        v["h"] = json!(bigs(&hs.h));
        v["values"] = json!(bigs(&hs.values(q + 2)));
        v["postulation"] = json!(q);
    }
    if !matches!(show, Show::Series) {
        text += &format!("P(t) = {p}\ne = {}\n", tuple(&bigs(&p.e)));
        v["polynomial"] = json!(p.to_string());
        v["e"] = json!(bigs(&p.e));
    }
    if matches!(show, Show::Gotzmann | Show::All) && hs.dim > 0 {
        let rep = gotzmann(&p)?;
        let rec = b_via_recursion(&p.e, p.d)?;
        if rec != rep.b {
            return Err(Error::NotHilbertPolynomial(format!(
                "B from the decomposition {} differs from the recursion {}",
                tuple(&bigs(&rep.b)),
                tuple(&bigs(&rec))
            )));
        }
        text += &format!("c-sequence = {}\nB = {}\ns = {}\n", c_sequence(&rep.runs), tuple(&bigs(&rep.b)), big(&rep.s()));
        v["c_runs"] = json!(rep.runs.iter().map(|(c, m)| json!({"c": c, "count": big(m)})).collect::<Vec<_>>());
        v["B"] = json!(bigs(&rep.b));
        v["s"] = json!(big(&rep.s()));
    }
    Ok(done(emit(g, text, v), Some(&l)))
}

fn ideal_files(path: &Path) -> Result<Vec<PathBuf>> {
    if path.is_file() {
        return Ok(vec![path.to_path_buf()]);
    }
    let dir = fs::read_dir(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut files: Vec<PathBuf> = dir
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::Io(format!("{}: no .ideal files", path.display())));
    }
    Ok(files)
}

fn audit_one(path: &Path, g: &Global, opts: &AuditOptions) -> Result<(BoundReport, f64, Vec<String>)> {
    let file = IdealFile::parse(&read(path)?, g.strict).map_err(|e| located(path, e))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("ideal");
    let start = Instant::now();
    let input = file.audit_input(stem, &gb_options(g)).map_err(|e| located(path, e))?;
    let report = audit(&input, opts).map_err(|e| located(path, e))?;
    let warnings = file.warnings.iter().map(|w| format!("{}: {w}", path.display())).collect();
    Ok((report, start.elapsed().as_secs_f64() * 1000.0, warnings))
}

/// Prefixes the message with the file, keeping the error code.
fn located(path: &Path, e: Error) -> Error {
    let p = path.display();
    match e {
        Error::Syntax { line, col, msg } => Error::Syntax { line, col, msg: format!("{p}: {msg}") },
        Error::Io(m) => Error::Io(m),
        Error::InvalidInput(m) => Error::InvalidInput(format!("{p}: {m}")),
        Error::NonHomogeneous(m) => Error::NonHomogeneous(format!("{m} in {p}")),
        other => other,
    }
}

fn audit_cmd(path: &Path, report: Option<&Path>, g: &Global) -> Result<Output> {
    let files = ideal_files(path)?;
    let mut opts = AuditOptions { window: window(g)?, reg: reg_options(g), ..AuditOptions::default() };
    if let Some(o) = &g.order {
        opts.orders = vec![parse_order(o)?];
    }
    let results: Vec<_> = files.par_iter().map(|f| audit_one(f, g, &opts)).collect::<Result<_>>()?;
    let mut timings = BTreeMap::new();
    let mut reports = Vec::new();
    let mut warnings = Vec::new();
    for (r, ms, w) in results {
        timings.insert(r.id.clone(), ms);
        reports.push(r);
        warnings.extend(w);
    }
    let doc = ReportDocument::new(Seeds { seed: g.seed, trials: g.trials }, reports, timings);
    if let Some(out) = report {
        fs::write(out, doc.render()).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    }
    let stdout = match g.format {
        Format::Json => doc.render() + "\n",
        Format::Text => crate::render::audit_text(&doc),
    };
    Ok(Output { stdout, warnings, violation: doc.violations() > 0 })
}

//! The line-oriented ideal file.
//!
//! ```text
//! # comment
//! id: double_line_t3
//! ring: Q                  # or GF(p)
//! vars: x y u v
//! order: grevlex           # lex | grlex | grevlex | block(k)
//! recipe: double_line t=3  # optional, enables recipe-specific data
//! reduced: no              # optional: yes | no | unknown
//! gens:
//!   x^2
//!   x*u^3 + y*v^3
//! expected:
//!   reg: 3
//!   e_list: [2, -2]
//! ```

use std::collections::BTreeMap;

use serde_json::Value;

use crate::bounds::{AdegSource, AuditInput, Reducedness};
use crate::corpus::{double_line, intersection, rational_curve, twisted_cubic, CorpusEntry, Known, Origin, Recipe};
use crate::error::{Error, Result};
use crate::groebner::{GbOptions, IdealHandle};
use crate::ring::{FieldSpec, Polynomial, Ring, TermOrder};

use super::poly::parse_terms;

const KEYS: &[&str] = &["id", "ring", "vars", "order", "recipe", "reduced", "gens", "expected"];

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub id: Option<String>,
    pub field: FieldSpec,
    pub names: Vec<String>,
    pub order: Option<TermOrder>,
    pub recipe: Option<Recipe>,
    pub reduced: Option<Reducedness>,
    pub gens: Vec<Polynomial>,
    pub expected: BTreeMap<String, Value>,
    /// Unknown keys skipped outside strict mode.
    pub warnings: Vec<String>,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let s = s.trim();
    if s == "Q" || s == "QQ" {
        return Ok(FieldSpec::Rationals);
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidField(format!("expected Q or GF(p), got {s:?}")))?;
    let p: u64 = inner.trim().parse().map_err(|_| Error::InvalidField(format!("bad characteristic {inner:?}")))?;
    FieldSpec::prime(p)
}

pub fn parse_order(s: &str) -> Result<TermOrder> {
    let s = s.trim();
    match s {
        "lex" => Ok(TermOrder::Lex),
        "grlex" => Ok(TermOrder::GrLex),
        "grevlex" => Ok(TermOrder::GrevLex),
        _ => {
            let k = s
                .strip_prefix("block(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.trim().parse().ok())
                .ok_or_else(|| Error::InvalidOrder(format!("expected lex, grlex, grevlex or block(k), got {s:?}")))?;
            Ok(TermOrder::Block(k))
        }
    }
}

pub fn parse_recipe(s: &str) -> Result<Recipe> {
    let mut words = s.split_whitespace();
    let name = words.next().ok_or_else(|| Error::InvalidInput("empty recipe".into()))?;
    let mut params = BTreeMap::new();
    for w in words {
        let (k, v) = w.split_once('=').ok_or_else(|| Error::InvalidInput(format!("recipe parameter {w:?} is not k=v")))?;
        let v: u64 = v.parse().map_err(|_| Error::InvalidInput(format!("recipe parameter {k} is not an integer")))?;
        params.insert(k.to_string(), v);
    }
    let get = |k: &str| params.get(k).copied().ok_or_else(|| Error::InvalidInput(format!("recipe {name} needs {k}")));
    let expect = |keys: &[&str]| -> Result<()> {
        match params.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidInput(format!("recipe {name} has no parameter {k}"))),
            None => Ok(()),
        }
    };
    let small = |v: u64| u32::try_from(v).map_err(|_| Error::InvalidInput(format!("recipe parameter {v} too large")));
    match name {
        "rational_curve" => {
            expect(&["e"])?;
            Ok(Recipe::RationalCurve { e: small(get("e")?)? })
        }
        "double_line" => {
            expect(&["t"])?;
            Ok(Recipe::DoubleLine { t: small(get("t")?)? })
        }
        "intersection" => {
            expect(&["n", "c", "r"])?;
            Ok(Recipe::Intersection { n: get("n")? as usize, c: get("c")? as usize, r: small(get("r")?)? })
        }
        "twisted_cubic" => {
            expect(&[])?;
            Ok(Recipe::TwistedCubic)
        }
        _ => Err(Error::InvalidInput(format!("unknown recipe {name:?}"))),
    }
}

fn recipe_text(r: &Recipe) -> Option<String> {
    match r {
        Recipe::RationalCurve { e } => Some(format!("rational_curve e={e}")),
        Recipe::DoubleLine { t } => Some(format!("double_line t={t}")),
        Recipe::Intersection { n, c, r } => Some(format!("intersection n={n} c={c} r={r}")),
        Recipe::TwistedCubic => Some("twisted_cubic".into()),
        _ => None,
    }
}

fn parse_reduced(s: &str) -> Result<Reducedness> {
    match s.trim() {
        "yes" | "true" => Ok(Reducedness::Asserted),
        "no" | "false" => Ok(Reducedness::NonReduced),
        "unknown" => Ok(Reducedness::Unknown),
        other => Err(Error::InvalidInput(format!("reduced must be yes, no or unknown, got {other:?}"))),
    }
}

/// Column (1-based) of the first non-blank character at or after byte `from`.
fn col_of(line: &str, from: usize) -> usize {
    let rest = &line[from..];
    let skip = rest.len() - rest.trim_start().len();
    line[..from + skip].chars().count() + 1
}

struct Block {
    key: String,
}

impl IdealFile {
    /// Parses the file text. `strict` turns unknown keys into errors.
    pub fn parse(text: &str, strict: bool) -> Result<IdealFile> {
        let mut top: BTreeMap<String, (usize, usize, String)> = BTreeMap::new();
        let mut gens_src: Vec<(usize, usize, String)> = Vec::new();
        let mut expected = BTreeMap::new();
        let mut warnings = Vec::new();
        let mut block: Option<Block> = None;
        for (k, raw) in text.lines().enumerate() {
            let ln = k + 1;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            let indented = line.starts_with(' ') || line.starts_with('\t');
            if indented {
                let Some(b) = &block else {
                    return Err(syntax(ln, col_of(line, 0), "indented line outside a gens: or expected: block"));
                };
                let start = line.len() - line.trim_start().len();
                match b.key.as_str() {
                    "gens" => gens_src.push((ln, start, line[start..].trim_end().to_string())),
                    "expected" => {
                        let body = line.trim();
                        let (key, val) = body
                            .split_once(':')
                            .ok_or_else(|| syntax(ln, col_of(line, 0), "expected key: value"))?;
                        let val = val.trim();
                        let parsed = serde_json::from_str(val).unwrap_or_else(|_| Value::String(val.to_string()));
                        expected.insert(key.trim().to_string(), parsed);
                    }
                    _ => unreachable!(),
                }
                continue;
            }
            let (key, val) = line.split_once(':').ok_or_else(|| syntax(ln, 1, "expected key: value"))?;
            let key = key.trim().to_string();
            let vstart = key.len() + 1;
            if !KEYS.contains(&key.as_str()) {
                if strict {
                    return Err(syntax(ln, 1, format!("unknown key {key:?}")));
                }
                warnings.push(format!("line {ln}: unknown key {key:?} ignored"));
                block = None;
                continue;
            }
            if top.contains_key(&key) {
                return Err(syntax(ln, 1, format!("duplicate key {key:?}")));
            }
            if key == "gens" || key == "expected" {
                block = Some(Block { key: key.clone() });
                if key == "gens" && !val.trim().is_empty() {
                    let off = line.find(':').unwrap() + 1;
                    let start = off + (val.len() - val.trim_start().len());
                    gens_src.push((ln, start, val.trim().to_string()));
                }
            } else {
                block = None;
            }
            top.insert(key, (ln, col_of(line, vstart.min(line.len())), val.trim().to_string()));
        }

        let at = |key: &str, e: Error| -> Error {
            match top.get(key) {
                Some((ln, col, _)) => syntax(*ln, *col, e.to_string()),
                None => e,
            }
        };
        let ring_val = top.get("ring").ok_or_else(|| syntax(1, 1, "missing ring: declaration"))?;
        let field = parse_field(&ring_val.2).map_err(|e| at("ring", e))?;
        let vars_val = top.get("vars").ok_or_else(|| syntax(1, 1, "missing vars: declaration"))?;
        let names: Vec<String> = vars_val.2.split_whitespace().map(str::to_string).collect();
        if names.is_empty() {
            return Err(syntax(vars_val.0, vars_val.1, "no variables declared"));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(syntax(vars_val.0, vars_val.1, format!("invalid variable name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(syntax(vars_val.0, vars_val.1, format!("variable {n:?} declared twice")));
            }
        }
        if !top.contains_key("gens") {
            return Err(syntax(1, 1, "missing gens: block"));
        }
        let order = match top.get("order") {
            Some((_, _, v)) => {
                let o = parse_order(v).map_err(|e| at("order", e))?;
                o.check(names.len()).map_err(|e| at("order", e))?;
                Some(o)
            }
            None => None,
        };
        let recipe = match top.get("recipe") {
            Some((_, _, v)) => Some(parse_recipe(v).map_err(|e| at("recipe", e))?),
            None => None,
        };
        let reduced = match top.get("reduced") {
            Some((_, _, v)) => Some(parse_reduced(v).map_err(|e| at("reduced", e))?),
            None => None,
        };
        let ring = Ring::new(names.len(), field);
        let mut gens = Vec::new();
        for (ln, start, src) in &gens_src {
            let terms = parse_terms(src, ring, &names, *ln, *start)?;
            let located: Vec<_> = terms.iter().map(|t| (t.mono.clone(), t.col, t.text.clone())).collect();
            let p = Polynomial::from_terms(ring, terms.into_iter().map(|t| (t.mono, t.coeff)))?;
            if !p.is_homogeneous() {
                let survives = |m: &crate::ring::Monomial| !field.is_zero(&p.coeff(m));
                let live: Vec<_> = located.iter().filter(|(m, _, _)| survives(m)).collect();
                let d0 = live[0].0.degree();
                let (_, col, text) = live.iter().find(|(m, _, _)| m.degree() != d0).unwrap();
                return Err(Error::NonHomogeneous(format!("{text} (line {ln}, column {col})")));
            }
            gens.push(p);
        }
        Ok(IdealFile {
            id: top.get("id").map(|v| v.2.clone()).filter(|s| !s.is_empty()),
            field,
            names,
            order,
            recipe,
            reduced,
            gens,
            expected,
            warnings,
        })
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.names.len(), self.field)
    }

    pub fn ideal(&self, opts: &GbOptions) -> Result<IdealHandle> {
        Ok(IdealHandle::new(self.ring(), self.gens.clone())?.with_options(opts.clone()).with_names(self.names.clone())?)
    }

    pub fn from_ideal(ideal: &IdealHandle) -> IdealFile {
        IdealFile {
            id: None,
            field: ideal.ring().field,
            names: ideal.names().to_vec(),
            order: None,
            recipe: None,
            reduced: None,
            gens: ideal.generators().to_vec(),
            expected: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    pub fn from_entry(entry: &CorpusEntry) -> IdealFile {
        let mut f = IdealFile::from_ideal(&entry.ideal);
        f.id = Some(entry.id.clone());
        f.recipe = recipe_text(&entry.recipe).map(|_| entry.recipe.clone());
        f.expected = entry.known.iter().map(|k| (k.name.clone(), k.value.clone())).collect();
        f
    }

    /// Text that parses back to the same file.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(id) = &self.id {
            out += &format!("id: {id}\n");
        }
        out += &format!("ring: {}\nvars: {}\n", self.field, self.names.join(" "));
        if let Some(o) = &self.order {
            out += &format!("order: {o}\n");
        }
        if let Some(r) = self.recipe.as_ref().and_then(recipe_text) {
            out += &format!("recipe: {r}\n");
        }
        if let Some(r) = self.reduced {
            let word = match r {
                Reducedness::Known | Reducedness::Asserted => "yes",
                Reducedness::NonReduced => "no",
                Reducedness::Unknown => "unknown",
            };
            out += &format!("reduced: {word}\n");
        }
        out += "gens:\n";
        for g in &self.gens {
            out += &format!("  {}\n", g.display_with(&self.names));
        }
        if !self.expected.is_empty() {
            out += "expected:\n";
            for (k, v) in &self.expected {
                out += &format!("  {k}: {v}\n");
            }
        }
        out
    }

    /// The corpus entry this file describes. With a recipe the entry is
    /// rebuilt from it, after checking that the listed generators define the
    /// same ideal.
    pub fn corpus_entry(&self, fallback_id: &str, opts: &GbOptions) -> Result<CorpusEntry> {
        let ideal = self.ideal(opts)?;
        let id = self.id.clone().unwrap_or_else(|| fallback_id.to_string());
        let supplied = self
            .expected
            .iter()
            .map(|(k, v)| Known { name: k.clone(), value: v.clone(), origin: Origin::Supplied });
        if let Some(r) = &self.recipe {
            let mut entry = match *r {
                Recipe::RationalCurve { e } => rational_curve(e)?,
                Recipe::DoubleLine { t } => double_line(t)?,
                Recipe::Intersection { n, c, r } => intersection(n, c, r)?,
                Recipe::TwistedCubic => twisted_cubic()?,
                _ => unreachable!("files only carry named recipes"),
            };
            if entry.ideal.ring() != ideal.ring() || !entry.ideal.same_ideal(&ideal)? {
                return Err(Error::InvalidInput(format!("{id}: generators do not match recipe {}", recipe_text(r).unwrap())));
            }
            entry.id = id;
            entry.ideal = ideal;
            for k in supplied {
                entry.known.retain(|old| old.name != k.name);
                entry.known.push(k);
            }
            return Ok(entry);
        }
        Ok(CorpusEntry { id, ideal, recipe: Recipe::Inline, known: supplied.collect(), checks: Vec::new() })
    }

    /// Audit input honouring the recipe, `reduced:` and a supplied `adeg`.
    pub fn audit_input(&self, fallback_id: &str, opts: &GbOptions) -> Result<AuditInput> {
        let entry = self.corpus_entry(fallback_id, opts)?;
        let mut input = AuditInput::from_entry(&entry)?;
        if let Some(r) = self.reduced {
            if input.reduced != Reducedness::Known {
                input.reduced = r;
            }
        }
        if input.adeg.is_none() {
            if let Some(a) = self.expected.get("adeg").and_then(|v| v.as_u64()) {
                input = input.with_adeg(a.into(), AdegSource::Supplied);
            }
        }
        Ok(input)
    }
}

pub fn parse_ideal_file(text: &str, strict: bool) -> Result<IdealFile> {
    IdealFile::parse(text, strict)
}

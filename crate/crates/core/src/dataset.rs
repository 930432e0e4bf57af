//! Record files for the classification-table corpus.
//!
//! A file is a sequence of `[record]` blocks of `key=value` lines; a line
//! starting with `#` is a comment. Recognized keys:
//!
//! | key            | meaning                                                  |
//! |----------------|----------------------------------------------------------|
//! | `id`           | unique identifier (required)                             |
//! | `source`       | table/row provenance                                     |
//! | `vars`         | `t,z,x,y` (default), `x1..x3`, or a comma list           |
//! | `poly`         | input polynomial, possibly a family (required)           |
//! | `bind`         | parameter values, e.g. `n=7,9 i=0` (cartesian product)   |
//! | `weights`      | explicit weight vector, otherwise inferred               |
//! | `tilde_poly`   | expected transformed polynomial (support is compared)    |
//! | `tilde_weights`| expected transformed weights (required)                  |
//! | `cone`         | expected reduced weights; absent means "not a cone"      |
//! | `diff`         | expected `Diff_E(0)` as `Name:num/den` pairs (required)  |
//! | `diff_wps`     | expected `Diff_{E/P}(0)`                                 |
//! | `D`            | expected divisor `D`                                     |
//! | `indices`      | complement indices, metadata only                        |
//! | `notes`        | free text                                                |
//! | `skip`         | reason; the record is loaded but not verified            |
//!
//! Every value may contain `{expr}` placeholders, integer expressions in the
//! bound parameters (`{2n-1}`, `{n}`), which are substituted once per binding.
//! Polynomial fields additionally accept generic binary forms `f_k(u,v)`
//! (instantiated as `u^k + v^k`) and alternative groups `(A ||| B)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use num_rational::BigRational;

use crate::different::{format_rational, parse_rational, BoundaryDivisor, StratumId};
use crate::error::{Error, Result};
use crate::parser::{parse_polynomial, render_compact};
use crate::poly::{normalize, Coefficient, Monomial, Polynomial, VarList};
use crate::weights::{infer_weights, quasi_degree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRecord {
    pub id: String,
    pub source: String,
    pub poly: Polynomial,
    pub weights: Option<Vec<u64>>,
    pub expect_tilde_poly: Option<Polynomial>,
    pub expect_tilde_weights: Vec<u64>,
    pub expect_cone: Option<Vec<u64>>,
    pub expect_diff: BoundaryDivisor,
    pub expect_diff_wps: Option<BoundaryDivisor>,
    pub expect_d: Option<BoundaryDivisor>,
    pub indices: Vec<u32>,
    pub notes: String,
    pub skip: Option<String>,
}

impl TableRecord {
    pub fn vars(&self) -> &VarList {
        self.poly.vars()
    }
}

/// Loads one record file.
pub fn load_records(path: impl AsRef<Path>) -> Result<Vec<TableRecord>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_records(&text)
}

/// Loads every `*.rec` file below `dir`, sorted by path. Ids must be unique
/// across the whole directory.
pub fn load_dir(dir: impl AsRef<Path>) -> Result<Vec<TableRecord>> {
    let dir = dir.as_ref();
    let mut files = Vec::new();
    collect_rec_files(dir, &mut files)?;
    files.sort();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for f in files {
        for rec in load_records(&f)? {
            if !seen.insert(rec.id.clone()) {
                return Err(Error::DuplicateId {
                    line: 0,
                    id: format!("{} (in {})", rec.id, f.display()),
                });
            }
            out.push(rec);
        }
    }
    Ok(out)
}

fn collect_rec_files(dir: &Path, out: &mut Vec<std::path::PathBuf>) -> Result<()> {
    let io = |e: std::io::Error| Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_dir() {
            collect_rec_files(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "rec") {
            out.push(path);
        }
    }
    Ok(())
}

const KEYS: [&str; 15] = [
    "id",
    "source",
    "vars",
    "poly",
    "bind",
    "weights",
    "tilde_poly",
    "tilde_weights",
    "cone",
    "diff",
    "diff_wps",
    "D",
    "indices",
    "notes",
    "skip",
];

struct RawBlock {
    line: usize,
    fields: BTreeMap<String, (usize, String)>,
}

pub fn parse_records(text: &str) -> Result<Vec<TableRecord>> {
    let mut blocks: Vec<RawBlock> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        // Only whole-line comments: `#` is legal inside ids such as `T6.41#1`.
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if content == "[record]" {
            blocks.push(RawBlock {
                line,
                fields: BTreeMap::new(),
            });
            continue;
        }
        let Some(block) = blocks.last_mut() else {
            return Err(Error::Format {
                line,
                message: "field outside a [record] block".into(),
            });
        };
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Format {
            line,
            message: format!("expected key=value, got `{content}`"),
        })?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Format {
                line,
                message: format!("unknown field `{key}`"),
            });
        }
        if block
            .fields
            .insert(key.to_string(), (line, value.trim().to_string()))
            .is_some()
        {
            return Err(Error::Format {
                line,
                message: format!("field `{key}` given twice"),
            });
        }
    }

    let mut out = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    for block in blocks {
        for rec in expand_block(&block)? {
            if !seen.insert(rec.id.clone()) {
                let line = block.fields.get("id").map_or(block.line, |(l, _)| *l);
                return Err(Error::DuplicateId { line, id: rec.id });
            }
            out.push(rec);
        }
    }
    Ok(out)
}

fn expand_block(block: &RawBlock) -> Result<Vec<TableRecord>> {
    let require = |key: &str| {
        block.fields.get(key).ok_or_else(|| Error::Format {
            line: block.line,
            message: format!("missing required field `{key}`"),
        })
    };
    require("id")?;
    require("poly")?;
    require("tilde_weights")?;
    require("diff")?;

    let bindings = match block.fields.get("bind") {
        Some((line, spec)) => parse_bindings(spec).map_err(|message| Error::Format {
            line: *line,
            message,
        })?,
        None => vec![Vec::new()],
    };

    let mut out = Vec::new();
    for binding in &bindings {
        let env: BTreeMap<char, i64> = binding.iter().copied().collect();
        let field = |key: &str| -> Result<Option<(usize, String)>> {
            match block.fields.get(key) {
                None => Ok(None),
                Some((line, value)) => substitute(value, &env)
                    .map(|v| Some((*line, v)))
                    .map_err(|message| Error::Format {
                        line: *line,
                        message,
                    }),
            }
        };
        let (_, mut id) = field("id")?.expect("checked");
        if !binding.is_empty() {
            let tag: Vec<String> = binding.iter().map(|(k, v)| format!("{k}={v}")).collect();
            id = format!("{id}[{}]", tag.join(","));
        }
        let vars = match field("vars")? {
            Some((line, spec)) => VarList::parse_spec(&spec).map_err(|e| Error::Format {
                line,
                message: e.to_string(),
            })?,
            None => VarList::tzxy(),
        };
        let weights = match field("weights")? {
            Some((line, s)) => Some(parse_u64_list(&s, line)?),
            None => None,
        };
        let (poly_line, poly_text) = field("poly")?.expect("checked");
        let polys = instantiate_generic_forms(&poly_text, &vars).map_err(|e| at_line(e, poly_line))?;
        for poly in &polys {
            check_family_member(poly, weights.as_deref(), &poly_text)
                .map_err(|e| at_line(e, poly_line))?;
        }
        let tildes = match field("tilde_poly")? {
            Some((line, text)) => {
                let t = instantiate_generic_forms(&text, &vars).map_err(|e| at_line(e, line))?;
                if t.len() != 1 && t.len() != polys.len() {
                    return Err(Error::Format {
                        line,
                        message: format!(
                            "tilde_poly has {} alternatives but poly has {}",
                            t.len(),
                            polys.len()
                        ),
                    });
                }
                Some(t)
            }
            None => None,
        };
        let (tw_line, tw) = field("tilde_weights")?.expect("checked");
        let expect_tilde_weights = parse_u64_list(&tw, tw_line)?;
        let expect_cone = match field("cone")? {
            Some((line, s)) => Some(parse_u64_list(&s, line)?),
            None => None,
        };
        let n = vars.len();
        let divisor = |key: &str| -> Result<Option<BoundaryDivisor>> {
            match field(key)? {
                Some((line, s)) => parse_divisor(&s, n, line).map(Some),
                None => Ok(None),
            }
        };
        let expect_diff = divisor("diff")?.expect("checked");
        let expect_diff_wps = divisor("diff_wps")?;
        let expect_d = divisor("D")?;
        let indices = match field("indices")? {
            Some((line, s)) => parse_u64_list(&s, line)?
                .into_iter()
                .map(|v| v as u32)
                .collect(),
            None => Vec::new(),
        };
        let source = field("source")?.map(|(_, s)| s).unwrap_or_default();
        let notes = field("notes")?.map(|(_, s)| s).unwrap_or_default();
        let skip = field("skip")?.map(|(_, s)| s);

        for (alt, poly) in polys.iter().enumerate() {
            let id = if polys.len() > 1 {
                format!("{id}#{}", alt + 1)
            } else {
                id.clone()
            };
            let tilde = tildes
                .as_ref()
                .map(|t| t[if t.len() == 1 { 0 } else { alt }].clone());
            out.push(TableRecord {
                id,
                source: source.clone(),
                poly: poly.clone(),
                weights: weights.clone(),
                expect_tilde_poly: tilde,
                expect_tilde_weights: expect_tilde_weights.clone(),
                expect_cone: expect_cone.clone(),
                expect_diff: expect_diff.clone(),
                expect_diff_wps: expect_diff_wps.clone(),
                expect_d: expect_d.clone(),
                indices: indices.clone(),
                notes: notes.clone(),
                skip: skip.clone(),
            });
        }
    }
    Ok(out)
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::InconsistentFamily { .. } | Error::Format { .. } => e,
        other => Error::Format {
            line,
            message: other.to_string(),
        },
    }
}

fn check_family_member(poly: &Polynomial, weights: Option<&[u64]>, family: &str) -> Result<()> {
    let outcome = match weights {
        Some(p) => quasi_degree(poly, p).map(|_| ()),
        None => infer_weights(poly).map(|_| ()),
    };
    outcome.map_err(|e| Error::InconsistentFamily {
        family: family.to_string(),
        reason: format!("{}: {e}", render_compact(poly)),
    })
}

fn parse_u64_list(s: &str, line: usize) -> Result<Vec<u64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>().map_err(|_| Error::Format {
                line,
                message: format!("`{t}` is not a nonnegative integer"),
            })
        })
        .collect()
}

/// `Name:num/den` pairs separated by commas; `0` or an empty value is the zero
/// divisor. Repeating a stratum is an error.
pub fn parse_divisor(s: &str, n: usize, line: usize) -> Result<BoundaryDivisor> {
    let mut out = BoundaryDivisor::new();
    let mut seen = HashSet::new();
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(out);
    }
    for item in s.split(',').map(str::trim) {
        let (name, value) = item.split_once(':').ok_or_else(|| Error::Format {
            line,
            message: format!("expected Name:num/den, got `{item}`"),
        })?;
        let stratum = StratumId::from_name(name, n).ok_or_else(|| Error::UnknownStratumName {
            line,
            name: name.trim().to_string(),
        })?;
        let value: BigRational = parse_rational(value).ok_or_else(|| Error::Format {
            line,
            message: format!("`{value}` is not a rational"),
        })?;
        if !seen.insert(stratum) {
            return Err(Error::Format {
                line,
                message: format!("stratum `{}` listed twice", name.trim()),
            });
        }
        out.add(stratum, value);
    }
    Ok(out)
}

fn parse_bindings(spec: &str) -> std::result::Result<Vec<Vec<(char, i64)>>, String> {
    let mut combos: Vec<Vec<(char, i64)>> = vec![Vec::new()];
    for group in spec.split_whitespace() {
        let (name, values) = group
            .split_once('=')
            .ok_or_else(|| format!("binding `{group}` is not name=v1,v2,..."))?;
        let mut chars = name.chars();
        let (Some(var), None) = (chars.next(), chars.next()) else {
            return Err(format!("parameter name `{name}` must be one letter"));
        };
        if !var.is_ascii_lowercase() {
            return Err(format!("parameter name `{name}` must be a lowercase letter"));
        }
        let values: Vec<i64> = values
            .split(',')
            .map(|v| v.trim().parse::<i64>().map_err(|_| format!("`{v}` is not an integer")))
            .collect::<std::result::Result<_, _>>()?;
        combos = combos
            .into_iter()
            .flat_map(|c| {
                values.iter().map(move |&v| {
                    let mut c = c.clone();
                    c.push((var, v));
                    c
                })
            })
            .collect();
    }
    Ok(combos)
}

/// Replaces every `{expr}` with its integer value under `env`.
pub fn substitute(text: &str, env: &BTreeMap<char, i64>) -> std::result::Result<String, String> {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| format!("unclosed `{{` in `{text}`"))?
            + open;
        let value = eval_expr(&rest[open + 1..close], env)?;
        write!(out, "{value}").expect("write to String");
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Integer arithmetic with `+ - *`, parentheses and implicit multiplication
/// (`2n`, `3(n-1)`).
pub fn eval_expr(expr: &str, env: &BTreeMap<char, i64>) -> std::result::Result<i64, String> {
    struct P<'a> {
        s: &'a [u8],
        pos: usize,
        env: &'a BTreeMap<char, i64>,
    }
    impl P<'_> {
        fn peek(&mut self) -> Option<u8> {
            while self.s.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
                self.pos += 1;
            }
            self.s.get(self.pos).copied()
        }
        fn sum(&mut self) -> std::result::Result<i64, String> {
            let mut acc = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    -self.product()?
                }
                _ => self.product()?,
            };
            loop {
                match self.peek() {
                    Some(b'+') => {
                        self.pos += 1;
                        acc += self.product()?;
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        acc -= self.product()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }
        fn product(&mut self) -> std::result::Result<i64, String> {
            let mut acc = self.atom()?;
            loop {
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        acc *= self.atom()?;
                    }
                    Some(c) if c == b'(' || c.is_ascii_alphanumeric() => acc *= self.atom()?,
                    _ => return Ok(acc),
                }
            }
        }
        fn atom(&mut self) -> std::result::Result<i64, String> {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let v = self.sum()?;
                    if self.peek() != Some(b')') {
                        return Err("expected `)`".into());
                    }
                    self.pos += 1;
                    Ok(v)
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        self.pos += 1;
                    }
                    std::str::from_utf8(&self.s[start..self.pos])
                        .expect("ascii")
                        .parse()
                        .map_err(|e| format!("{e}"))
                }
                Some(c) if c.is_ascii_lowercase() => {
                    self.pos += 1;
                    self.env
                        .get(&(c as char))
                        .copied()
                        .ok_or_else(|| format!("unbound parameter `{}`", c as char))
                }
                _ => Err("expected a number, parameter or `(`".into()),
            }
        }
    }
    let mut p = P {
        s: expr.as_bytes(),
        pos: 0,
        env,
    };
    let v = p.sum().map_err(|e| format!("in `{{{expr}}}`: {e}"))?;
    if p.peek().is_some() {
        return Err(format!("trailing input in `{{{expr}}}`"));
    }
    Ok(v)
}

/// Expands a family description into its canonical representatives.
///
/// `f_k(u, v)` (or `g_k`) becomes `u^k + v^k` (`1` when `k = 0`) and is
/// multiplied into its term. A top-level group `(A ||| B)` selects one
/// alternative; when several groups occur they are chosen in lockstep, so all
/// groups must list the same number of alternatives.
pub fn instantiate_generic_forms(text: &str, vars: &VarList) -> Result<Vec<Polynomial>> {
    let bad = |reason: String| Error::InconsistentFamily {
        family: text.to_string(),
        reason,
    };
    let mut fixed: Vec<Polynomial> = Vec::new();
    let mut groups: Vec<Vec<Polynomial>> = Vec::new();
    for term in split_top_level(text, "+").map_err(bad)? {
        let term = term.trim();
        if term.is_empty() {
            return Err(bad("empty term".into()));
        }
        if term.starts_with('(') && term.ends_with(')') && term.contains("|||") {
            let inner = &term[1..term.len() - 1];
            let alts = split_top_level(inner, "|||")
                .map_err(bad)?
                .into_iter()
                .map(|a| {
                    let mut expanded = instantiate_generic_forms(a.trim(), vars)?;
                    if expanded.len() != 1 {
                        return Err(bad("nested alternatives".into()));
                    }
                    Ok(expanded.remove(0))
                })
                .collect::<Result<Vec<_>>>()?;
            groups.push(alts);
        } else {
            fixed.push(expand_term(term, vars).map_err(|e| match e {
                Error::InconsistentFamily { .. } => e,
                other => bad(other.to_string()),
            })?);
        }
    }
    let choices = match groups.iter().map(Vec::len).max() {
        None => 1,
        Some(k) => {
            if groups.iter().any(|g| g.len() != k) {
                return Err(bad("alternative groups have different lengths".into()));
            }
            k
        }
    };
    (0..choices)
        .map(|c| {
            let parts = fixed.iter().chain(groups.iter().map(|g| &g[c]));
            let terms: Vec<(Monomial, Coefficient)> = parts
                .flat_map(|p| p.terms().map(|(m, c)| (m.clone(), c.clone())))
                .collect();
            normalize(vars, terms)
        })
        .collect()
}

fn split_top_level<'a>(s: &'a str, sep: &str) -> std::result::Result<Vec<&'a str>, String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(format!("unbalanced `)` in `{s}`"));
                }
            }
            _ if depth == 0 && s[i..].starts_with(sep) => {
                parts.push(&s[start..i]);
                i += sep.len();
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(format!("unbalanced `(` in `{s}`"));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn expand_term(term: &str, vars: &VarList) -> Result<Polynomial> {
    let mut rest = String::new();
    let mut forms: Vec<Polynomial> = Vec::new();
    let bytes = term.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if (c == b'f' || c == b'g') && bytes.get(i + 1) == Some(&b'_') {
            let mut j = i + 2;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            let degree: u32 = term[i + 2..j].parse().map_err(|_| Error::InconsistentFamily {
                family: term.to_string(),
                reason: "binary form needs a numeric degree".into(),
            })?;
            if bytes.get(j) != Some(&b'(') {
                return Err(Error::InconsistentFamily {
                    family: term.to_string(),
                    reason: "binary form needs arguments".into(),
                });
            }
            let close = term[j..].find(')').map(|k| k + j).ok_or_else(|| {
                Error::InconsistentFamily {
                    family: term.to_string(),
                    reason: "unclosed binary form".into(),
                }
            })?;
            let args: Vec<&str> = term[j + 1..close].split(',').collect();
            if args.len() != 2 {
                return Err(Error::InconsistentFamily {
                    family: term.to_string(),
                    reason: "binary form takes two arguments".into(),
                });
            }
            forms.push(binary_form(degree, args[0], args[1], vars)?);
            i = close + 1;
        } else {
            rest.push(c as char);
            i += 1;
        }
    }
    let rest = rest.trim();
    let mut acc = if rest.is_empty() {
        normalize(vars, [(Monomial::one(vars.len()), Coefficient::one())])?
    } else {
        parse_polynomial(rest, vars)?
    };
    if acc.len() != 1 {
        return Err(Error::InconsistentFamily {
            family: term.to_string(),
            reason: "a term must be a single monomial".into(),
        });
    }
    for f in &forms {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}

fn binary_form(k: u32, u: &str, v: &str, vars: &VarList) -> Result<Polynomial> {
    let one = Monomial::one(vars.len());
    if k == 0 {
        return normalize(vars, [(one, Coefficient::one())]);
    }
    let power = |arg: &str| -> Result<Monomial> {
        let p = parse_polynomial(arg.trim(), vars)?;
        let (m, c) = p.terms().next().expect("nonempty");
        if p.len() != 1 || *c != Coefficient::one() {
            return Err(Error::InconsistentFamily {
                family: arg.to_string(),
                reason: "binary form arguments must be monomials".into(),
            });
        }
        Ok(m.pow(k))
    };
    normalize(
        vars,
        [(power(u)?, Coefficient::one()), (power(v)?, Coefficient::one())],
    )
}

/// Writes records back in file form, one block per (expanded) record.
pub fn render_records(records: &[TableRecord]) -> String {
    let mut out = String::new();
    for (k, r) in records.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "[record]");
        let _ = writeln!(out, "id={}", r.id);
        if !r.source.is_empty() {
            let _ = writeln!(out, "source={}", r.source);
        }
        if !r.vars().is_tzxy() {
            let _ = writeln!(out, "vars={}", r.vars());
        }
        let _ = writeln!(out, "poly={}", render_compact(&r.poly));
        if let Some(w) = &r.weights {
            let _ = writeln!(out, "weights={}", list(w));
        }
        if let Some(t) = &r.expect_tilde_poly {
            let _ = writeln!(out, "tilde_poly={}", render_compact(t));
        }
        let _ = writeln!(out, "tilde_weights={}", list(&r.expect_tilde_weights));
        if let Some(c) = &r.expect_cone {
            let _ = writeln!(out, "cone={}", list(c));
        }
        let _ = writeln!(out, "diff={}", render_divisor(&r.expect_diff));
        if let Some(d) = &r.expect_diff_wps {
            let _ = writeln!(out, "diff_wps={}", render_divisor(d));
        }
        if let Some(d) = &r.expect_d {
            let _ = writeln!(out, "D={}", render_divisor(d));
        }
        if !r.indices.is_empty() {
            let idx: Vec<String> = r.indices.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "indices={}", idx.join(","));
        }
        if !r.notes.is_empty() {
            let _ = writeln!(out, "notes={}", r.notes);
        }
        if let Some(s) = &r.skip {
            let _ = writeln!(out, "skip={s}");
        }
    }
    out
}

/// `C1p:1/2,C13:2/3` with canonical names, or `0`.
pub fn render_divisor(d: &BoundaryDivisor) -> String {
    if d.is_zero() {
        return "0".to_string();
    }
    d.iter()
        .map(|(s, c)| format!("{}:{}", s.canonical_name(), format_rational(c)))
        .collect::<Vec<_>>()
        .join(",")
}

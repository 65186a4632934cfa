//! Preset catalog and serialization of tables, series and reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::betti::{AlgebraPreset, BettiTable};
use crate::error::{Error, Result};
use crate::series::BiSeries;

pub const SCHEMA_VERSION: u64 = 1;

/// Built-in presets: the Weyl, trigonometric Weyl and q-Weyl algebras and
/// their crossed products with `ℤ₂`. All have `d = 2`.
pub const BUILTIN: [(&str, &[u64]); 6] = [
    ("weyl", &[1]),
    ("trig", &[1, 1]),
    ("qweyl", &[1, 2, 1]),
    ("z2_weyl", &[1, 0, 1]),
    ("z2_trig", &[1, 0, 2]),
    ("z2_qweyl", &[1, 0, 5]),
];

#[derive(Serialize, Deserialize)]
struct PresetJson {
    name: String,
    d: i64,
    betti: Vec<i64>,
}

/// Resolve a preset: a built-in name, `gamma:ν`, an inline JSON object or a
/// path to a JSON file.
pub fn load_preset(name: &str) -> Result<AlgebraPreset> {
    if let Some((_, b)) = BUILTIN.iter().find(|(n, _)| *n == name) {
        return AlgebraPreset::new(name, 2, BettiTable::from_dense(b));
    }
    if let Some(nu) = name.strip_prefix("gamma:") {
        let nu: i64 = nu.trim().parse().map_err(|_| Error::UnknownPreset(name.to_string()))?;
        return gamma_preset(nu);
    }
    let trimmed = name.trim_start();
    if trimmed.starts_with('{') {
        return preset_from_json(trimmed);
    }
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(name)
            .map_err(|e| Error::InvalidPreset(format!("{name}: {e}")))?;
        return preset_from_json(&text);
    }
    Err(Error::UnknownPreset(name.to_string()))
}

/// `{0: 1, 2: ν - 1}` for a finite subgroup of `SL_2` with `ν` conjugacy classes.
pub fn gamma_preset(nu: i64) -> Result<AlgebraPreset> {
    if nu < 1 {
        return Err(Error::InvalidClassCount(nu));
    }
    AlgebraPreset::new(format!("gamma:{nu}"), 2, BettiTable::from_pairs([(0, 1), (2, nu as u64 - 1)]))
}

pub fn preset_from_json(text: &str) -> Result<AlgebraPreset> {
    let p: PresetJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidPreset(e.to_string()))?;
    if p.d <= 0 || p.d > u32::MAX as i64 {
        return Err(Error::InvalidPreset(format!("d = {} out of range", p.d)));
    }
    let mut dims = Vec::with_capacity(p.betti.len());
    for (i, &b) in p.betti.iter().enumerate() {
        if b < 0 {
            return Err(Error::InvalidPreset(format!("negative dimension {b} in degree {i}")));
        }
        dims.push(b as u64);
    }
    AlgebraPreset::new(p.name, p.d as u32, BettiTable::from_dense(&dims))
}

pub fn preset_to_json(p: &AlgebraPreset) -> String {
    let j = PresetJson {
        name: p.name.clone(),
        d: p.d as i64,
        betti: p.betti.to_dense().into_iter().map(|b| b as i64).collect(),
    };
    serde_json::to_string(&j).expect("plain data serializes")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// One named check in a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_report(self, Format::Plain))
    }
}

fn big_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn json_to_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        _ => Err(Error::Parse(format!("bad coefficient {v}"))),
    }
}

pub fn emit_series(s: &BiSeries, format: Format) -> String {
    match format {
        Format::Json => {
            let terms: Vec<Value> =
                s.terms().map(|(n, i, c)| json!([n, i, big_to_json(c)])).collect();
            let v = json!({
                "schema": "hhwreath.series",
                "version": SCHEMA_VERSION,
                "q_bound": s.q_bound(),
                "t_bound": s.t_bound(),
                "terms": terms,
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("n,i,dim\n");
            for (n, i, c) in s.terms() {
                out.push_str(&format!("{n},{i},{c}\n"));
            }
            out
        }
        Format::Plain => format!("{s}\n"),
    }
}

/// Inverse of [`emit_series`]. CSV and plain text carry no bounds; without
/// `bounds` they are taken from the largest exponents present. JSON records its own.
pub fn parse_series(text: &str, format: Format, bounds: Option<(usize, usize)>) -> Result<BiSeries> {
    let (terms, (qb, tb)) = match format {
        Format::Json => {
            let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            check_schema(&v, "hhwreath.series")?;
            let qb = get_usize(&v, "q_bound")?;
            let tb = get_usize(&v, "t_bound")?;
            let mut terms = Vec::new();
            for t in v["terms"].as_array().ok_or_else(|| Error::Parse("missing terms".into()))? {
                let a = t.as_array().filter(|a| a.len() == 3);
                let a = a.ok_or_else(|| Error::Parse(format!("bad term {t}")))?;
                let n = a[0].as_u64().ok_or_else(|| Error::Parse(format!("bad term {t}")))?;
                let i = a[1].as_u64().ok_or_else(|| Error::Parse(format!("bad term {t}")))?;
                terms.push((n as usize, i as usize, json_to_big(&a[2])?));
            }
            (terms, (qb, tb))
        }
        Format::Csv => {
            let mut terms = Vec::new();
            for line in csv_body(text, "n,i,dim")? {
                let f = split_fields(line, 3)?;
                terms.push((parse_num(f[0])?, parse_num(f[1])?, parse_big(f[2])?));
            }
            let b = bounds.unwrap_or_else(|| infer_bounds(&terms));
            (terms, b)
        }
        Format::Plain => {
            let terms = parse_plain(text.trim())?;
            let b = bounds.unwrap_or_else(|| infer_bounds(&terms));
            (terms, b)
        }
    };
    let mut s = BiSeries::zero(qb, tb);
    for (n, i, c) in terms {
        if n > qb || i > tb {
            return Err(Error::Parse(format!("term q^{n} t^{i} outside bounds ({qb}, {tb})")));
        }
        let cur = s.coeff(n, i);
        s.set(n, i, cur + c);
    }
    Ok(s)
}

pub fn emit_table(t: &BettiTable, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "schema": "hhwreath.betti",
                "version": SCHEMA_VERSION,
                "betti": t.to_dense(),
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("i,dim\n");
            for (i, d) in t.iter() {
                out.push_str(&format!("{i},{d}\n"));
            }
            out
        }
        Format::Plain => {
            let s = BiSeries::from_terms(
                0,
                t.max_degree().unwrap_or(0) as usize,
                t.iter().map(|(i, d)| (0, i as usize, d as i64)),
            );
            format!("{s}\n")
        }
    }
}

pub fn parse_table(text: &str, format: Format) -> Result<BettiTable> {
    let pairs: Vec<(usize, BigInt)> = match format {
        Format::Json => {
            let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            check_schema(&v, "hhwreath.betti")?;
            let arr = v["betti"].as_array().ok_or_else(|| Error::Parse("missing betti".into()))?;
            arr.iter()
                .enumerate()
                .map(|(i, x)| Ok((i, json_to_big(x)?)))
                .collect::<Result<_>>()?
        }
        Format::Csv => csv_body(text, "i,dim")?
            .map(|line| {
                let f = split_fields(line, 2)?;
                Ok((parse_num(f[0])?, parse_big(f[1])?))
            })
            .collect::<Result<_>>()?,
        Format::Plain => {
            let terms = parse_plain(text.trim())?;
            if terms.iter().any(|(n, _, _)| *n != 0) {
                return Err(Error::Parse("a Betti polynomial has no q".into()));
            }
            terms.into_iter().map(|(_, i, c)| (i, c)).collect()
        }
    };
    let mut out = BettiTable::new();
    for (i, c) in pairs {
        let d = c.to_u64().ok_or_else(|| Error::Parse(format!("bad dimension {c}")))?;
        out.add_dim(i as u32, d);
    }
    Ok(out)
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            let v = json!({
                "schema": "hhwreath.report",
                "version": SCHEMA_VERSION,
                "title": r.title,
                "passed": r.passed(),
                "checks": checks,
            });
            format!("{v}\n")
        }
        Format::Csv => {
            let mut out = String::from("name,passed,detail\n");
            for c in &r.checks {
                out.push_str(&format!("{},{},{}\n", csv_quote(&c.name), c.passed, csv_quote(&c.detail)));
            }
            out
        }
        Format::Plain => {
            let mut out = format!("{}\n", r.title);
            for c in &r.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("  {tag} {}: {}\n", c.name, c.detail));
            }
            out
        }
    }
}

/// JSON only; the other formats are for reading.
pub fn parse_report(text: &str) -> Result<Report> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_schema(&v, "hhwreath.report")?;
    let mut r = Report::new(v["title"].as_str().unwrap_or_default());
    for c in v["checks"].as_array().ok_or_else(|| Error::Parse("missing checks".into()))? {
        r.push(
            c["name"].as_str().unwrap_or_default(),
            c["passed"].as_bool().ok_or_else(|| Error::Parse("missing passed".into()))?,
            c["detail"].as_str().unwrap_or_default(),
        );
    }
    Ok(r)
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn check_schema(v: &Value, schema: &str) -> Result<()> {
    if v["schema"] != schema {
        return Err(Error::Parse(format!("expected schema {schema}")));
    }
    match v["version"].as_u64() {
        Some(SCHEMA_VERSION) => Ok(()),
        other => Err(Error::Parse(format!("unsupported schema version {other:?}"))),
    }
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    v[key].as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("missing {key}")))
}

fn csv_body<'a>(text: &'a str, header: &str) -> Result<impl Iterator<Item = &'a str>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == header => Ok(lines),
        _ => Err(Error::Parse(format!("expected CSV header {header:?}"))),
    }
}

fn split_fields(line: &str, k: usize) -> Result<Vec<&str>> {
    let f: Vec<&str> = line.split(',').map(str::trim).collect();
    if f.len() != k {
        return Err(Error::Parse(format!("expected {k} fields in {line:?}")));
    }
    Ok(f)
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad index {s:?}")))
}

fn parse_big(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn infer_bounds(terms: &[(usize, usize, BigInt)]) -> (usize, usize) {
    let qb = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let tb = terms.iter().map(|t| t.1).max().unwrap_or(0);
    (qb, tb)
}

/// Parser for the plain rendering: a signed sum of terms
/// `[c][q[^a]]( t[^b] | (poly in t) )`.
struct PlainParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl PlainParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos] == b' ' {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn power(&mut self, var: u8) -> Result<Option<usize>> {
        if !self.eat(var) {
            return Ok(None);
        }
        if self.eat(b'^') {
            let d = self.digits().ok_or_else(|| self.err())?;
            return Ok(Some(d.parse().map_err(|_| self.err())?));
        }
        Ok(Some(1))
    }

    fn err(&self) -> Error {
        Error::Parse(format!(
            "unexpected input at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn sum(&mut self) -> Result<Vec<(usize, usize, BigInt)>> {
        let mut out = Vec::new();
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else if first || self.eat(b'+') {
                false
            } else {
                break;
            };
            first = false;
            for (n, i, c) in self.term()? {
                out.push((n, i, if neg { -c } else { c }));
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Vec<(usize, usize, BigInt)>> {
        let coeff: Option<BigInt> = match self.digits() {
            Some(d) => Some(d.parse().map_err(|_| self.err())?),
            None => None,
        };
        let qexp = self.power(b'q')?;
        if self.eat(b'(') {
            let inner = self.sum()?;
            if !self.eat(b')') {
                return Err(self.err());
            }
            let c = coeff.unwrap_or_else(BigInt::one);
            let n = qexp.unwrap_or(0);
            return Ok(inner.into_iter().map(|(m, i, x)| (n + m, i, &c * x)).collect());
        }
        let texp = self.power(b't')?;
        if coeff.is_none() && qexp.is_none() && texp.is_none() {
            return Err(self.err());
        }
        let c = coeff.unwrap_or_else(BigInt::one);
        Ok(vec![(qexp.unwrap_or(0), texp.unwrap_or(0), c)])
    }
}

fn parse_plain(text: &str) -> Result<Vec<(usize, usize, BigInt)>> {
    let mut p = PlainParser { s: text.as_bytes(), pos: 0 };
    let terms = p.sum()?;
    if p.peek().is_some() {
        return Err(p.err());
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::{closed_form, ClosedForm};

    #[test]
    fn builtin_presets() {
        let q = load_preset("qweyl").unwrap();
        assert_eq!((q.d, q.betti.to_dense()), (2, vec![1, 2, 1]));
        assert_eq!(load_preset("z2_qweyl").unwrap().betti.to_dense(), vec![1, 0, 5]);
        assert_eq!(load_preset("gamma:4").unwrap().betti.to_dense(), vec![1, 0, 3]);
        assert!(matches!(load_preset("nope"), Err(Error::UnknownPreset(_))));
        assert!(load_preset("gamma:0").is_err());
    }

    #[test]
    fn user_json_presets() {
        let p = load_preset(r#"{"name": "k3", "d": 2, "betti": [1, 0, 22]}"#).unwrap();
        assert_eq!(p.betti.get(2), 22);
        assert_eq!(preset_from_json(&preset_to_json(&p)).unwrap(), p);
        assert!(load_preset(r#"{"name": "x", "d": 3, "betti": [1]}"#).is_err());
        assert!(load_preset(r#"{"name": "x", "d": 2, "betti": [1, -1]}"#).is_err());
        assert!(load_preset(r#"{"name": "x", "d": 2, "betti": [1, 0, 0, 1]}"#).is_err());
    }

    #[test]
    fn csv_rows_of_type_a_series() {
        let s = closed_form(ClosedForm::PA, 3, 6);
        let csv = emit_series(&s, Format::Csv);
        assert_eq!(csv, "n,i,dim\n0,0,1\n1,0,1\n2,0,1\n2,2,1\n3,0,1\n3,2,1\n3,4,1\n");
        assert_eq!(emit_series(&s, Format::Plain), "1 + q + q^2(1 + t^2) + q^3(1 + t^2 + t^4)\n");
    }

    #[test]
    fn empty_table_csv() {
        assert_eq!(emit_table(&BettiTable::new(), Format::Csv), "i,dim\n");
        assert_eq!(parse_table("i,dim\n", Format::Csv).unwrap(), BettiTable::new());
    }

    #[test]
    fn series_round_trips() {
        let mut s = closed_form(ClosedForm::PAQ, 5, 12);
        s.set(1, 3, BigInt::from(-7));
        s.set(4, 0, BigInt::from(10).pow(30));
        for f in [Format::Json, Format::Csv, Format::Plain] {
            let text = emit_series(&s, f);
            assert_eq!(parse_series(&text, f, Some((5, 12))).unwrap(), s, "{f:?}");
        }
        let z = BiSeries::zero(2, 2);
        assert_eq!(parse_series(&emit_series(&z, Format::Plain), Format::Plain, Some((2, 2))).unwrap(), z);
    }

    #[test]
    fn table_round_trips() {
        let t = BettiTable::from_pairs([(0, 1), (1, 2), (4, 5)]);
        for f in [Format::Json, Format::Csv, Format::Plain] {
            assert_eq!(parse_table(&emit_table(&t, f), f).unwrap(), t, "{f:?}");
        }
    }

    #[test]
    fn report_round_trip() {
        let mut r = Report::new("demo");
        r.push("a", true, "1 = 1");
        r.push("b, c", false, "quote \" inside");
        assert!(!r.passed());
        assert_eq!(parse_report(&emit_report(&r, Format::Json)).unwrap(), r);
        assert!(emit_report(&r, Format::Csv).contains("\"b, c\",false"));
    }

    #[test]
    fn plain_parser_rejects_garbage() {
        assert!(parse_series("1 + + q", Format::Plain, None).is_err());
        assert!(parse_series("q^2(1 + t", Format::Plain, None).is_err());
        assert!(parse_series("1 x", Format::Plain, None).is_err());
    }
}

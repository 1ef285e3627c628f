//! Report rows, parameter sweeps and their table, CSV and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, oracle_two_fano, PairingKind};
use crate::error::{Error, Result};
use crate::ring::Rational;
use crate::spaces::{CompleteIntersectionSpec, GrassmannianSpec};
use crate::spec_text::SpaceSpec;

pub const DEFAULT_CASE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    CompleteIntersection,
    Grassmannian,
    Product,
    P1Bundle,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ci" | "complete-intersection" => Ok(Family::CompleteIntersection),
            "grass" | "grassmannian" => Ok(Family::Grassmannian),
            "product" => Ok(Family::Product),
            "bundle" | "p1-bundle" => Ok(Family::P1Bundle),
            other => Err(Error::Precondition(format!(
                "unknown family '{other}' (expected complete-intersection, grassmannian, product or p1-bundle)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Precondition(format!("unknown format '{other}' (expected table, csv or json)"))),
        }
    }
}

/// Parameter ranges for a sweep.
///
/// Complete intersections range over `1 ≤ n ≤ max_n`, nondecreasing weight
/// tuples with entries in `1..=max_w`, `0 ≤ r ≤ min(max_r, n − 1)` and
/// nondecreasing degrees in `min_d..=max_d`. Grassmannians range over
/// `1 ≤ k ≤ max_k`, `2k ≤ n ≤ max_n`. Products take unordered pairs and
/// bundles take `0 ≤ c1L ≤ max_c1l` over a factor list: the complete
/// intersections above followed by the Grassmannians with `k ≥ 2` and
/// dimension at most `max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub family: Family,
    pub max_n: u64,
    pub max_r: u64,
    pub min_d: u64,
    pub max_d: u64,
    pub max_k: u64,
    pub max_w: u64,
    pub max_c1l: u64,
    pub boundary_only: bool,
    pub verbose: bool,
    pub cap: u64,
}

impl SweepConfig {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            max_n: 6,
            max_r: 2,
            min_d: 2,
            max_d: 4,
            max_k: 3,
            max_w: 1,
            max_c1l: 2,
            boundary_only: false,
            verbose: false,
            cap: DEFAULT_CASE_CAP,
        }
    }

    fn validate(&self) -> Result<()> {
        let bounds = [
            ("max-n", self.max_n),
            ("max-d", self.max_d),
            ("min-d", self.min_d),
            ("max-k", self.max_k),
            ("max-w", self.max_w),
            ("cap", self.cap),
        ];
        match bounds.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::Precondition(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }

    fn ci_specs(&self) -> impl Iterator<Item = CompleteIntersectionSpec> + '_ {
        (1..=self.max_n).flat_map(move |n| {
            Tuples::new(n as usize + 1, 1, self.max_w).flat_map(move |weights| {
                (0..=self.max_r.min(n - 1)).flat_map(move |r| {
                    let weights = weights.clone();
                    Tuples::new(r as usize, self.min_d, self.max_d).map(move |degrees| {
                        CompleteIntersectionSpec::new(weights.clone(), degrees)
                            .expect("sweep tuples satisfy the constructor bounds")
                    })
                })
            })
        })
    }

    fn grassmannian_specs(&self, min_k: u64, max_dim: Option<u64>) -> impl Iterator<Item = GrassmannianSpec> + '_ {
        (min_k..=self.max_k.min(self.max_n / 2)).flat_map(move |k| {
            let upper = match max_dim {
                Some(dim) => self.max_n.min(k + dim / k),
                None => self.max_n,
            };
            (2 * k.max(1)..=upper).map(move |n| {
                GrassmannianSpec::new(k as usize, n as usize).expect("sweep tuples satisfy the constructor bounds")
            })
        })
    }

    fn factors(&self) -> impl Iterator<Item = SpaceSpec> + '_ {
        self.ci_specs()
            .map(SpaceSpec::CompleteIntersection)
            .chain(self.grassmannian_specs(2, Some(self.max_n)).map(SpaceSpec::Grassmannian))
    }

    /// Number of tuples in range, saturating at `cap + 1`.
    pub fn case_count(&self) -> u64 {
        let limit = self.cap.saturating_add(1);
        let capped = |it: &mut dyn Iterator<Item = ()>| it.take(limit as usize).count() as u64;
        let count = match self.family {
            Family::CompleteIntersection => self.ci_count(limit),
            Family::Grassmannian => capped(&mut self.grassmannian_specs(1, None).map(|_| ())),
            Family::Product => {
                let f = self.factor_count(limit);
                f.saturating_mul(f.saturating_add(1)) / 2
            }
            Family::P1Bundle => {
                let f = self.factor_count(limit);
                f.saturating_mul(self.max_c1l.saturating_add(1))
            }
        };
        count.min(limit)
    }

    fn ci_count(&self, limit: u64) -> u64 {
        let degree_choices = (self.max_d + 1).saturating_sub(self.min_d);
        let mut total = 0u64;
        for n in 1..=self.max_n {
            let equations = (0..=self.max_r.min(n - 1))
                .fold(0u64, |acc, r| acc.saturating_add(multichoose(degree_choices, r)));
            total = total.saturating_add(multichoose(self.max_w, n + 1).saturating_mul(equations));
            if total >= limit {
                return limit;
            }
        }
        total
    }

    fn factor_count(&self, limit: u64) -> u64 {
        let ci = self.ci_count(limit);
        let grass = self.grassmannian_specs(2, Some(self.max_n)).take(limit as usize).count() as u64;
        ci.saturating_add(grass).min(limit)
    }

    /// All tuples in lexicographic parameter order.
    pub fn specs(&self) -> Result<Vec<SpaceSpec>> {
        self.validate()?;
        let count = self.case_count();
        if count > self.cap {
            return Err(Error::CaseCap { count, cap: self.cap });
        }
        Ok(match self.family {
            Family::CompleteIntersection => self.ci_specs().map(SpaceSpec::CompleteIntersection).collect(),
            Family::Grassmannian => self.grassmannian_specs(1, None).map(SpaceSpec::Grassmannian).collect(),
            Family::Product => {
                let factors: Vec<SpaceSpec> = self.factors().collect();
                let mut out = Vec::new();
                for (i, a) in factors.iter().enumerate() {
                    for b in &factors[i..] {
                        out.push(SpaceSpec::Product(Box::new(a.clone()), Box::new(b.clone())));
                    }
                }
                out
            }
            Family::P1Bundle => {
                let factors: Vec<SpaceSpec> = self.factors().collect();
                let mut out = Vec::new();
                for base in &factors {
                    for multiple in 0..=self.max_c1l {
                        out.push(SpaceSpec::Bundle { base: Box::new(base.clone()), multiple: multiple as i64 });
                    }
                }
                out
            }
        })
    }
}

/// Number of size-`r` multisets from `m` items, saturating at `u64::MAX`.
fn multichoose(m: u64, r: u64) -> u64 {
    if r == 0 {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let top = (m - 1) as u128 + r as u128;
    let mut c: u128 = 1;
    for i in 0..r.min(m - 1) as u128 {
        c = c * (top - i) / (i + 1);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// Nondecreasing tuples of a fixed length with entries in `lo..=hi`, in
/// lexicographic order.
struct Tuples {
    next: Option<Vec<u64>>,
    hi: u64,
}

impl Tuples {
    fn new(len: usize, lo: u64, hi: u64) -> Self {
        let next = (len == 0 || lo <= hi).then(|| vec![lo; len]);
        Self { next, hi }
    }
}

impl Iterator for Tuples {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut successor = current.clone();
        if let Some(i) = successor.iter().rposition(|&x| x < self.hi) {
            let v = successor[i] + 1;
            successor[i..].iter_mut().for_each(|x| *x = v);
            self.next = Some(successor);
        }
        Some(current)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub kind: PairingKind,
    pub generator: String,
    #[serde(with = "rational_text")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub spec: String,
    pub dim: usize,
    pub fano: bool,
    #[serde(with = "optional_rational_text")]
    pub fano_index: Option<Rational>,
    pub two_fano: bool,
    pub ch2_strict: bool,
    pub boundary_flag: bool,
    pub oracle: Option<bool>,
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessEntry>>,
}

impl ReportRow {
    /// Why the engine and the closed-form verdict differ, if they do.
    pub fn discrepancy_class(&self) -> Option<&'static str> {
        if self.agree {
            None
        } else if self.boundary_flag {
            Some("boundary")
        } else if self.dim < 2 {
            Some("vacuous")
        } else if self.spec.contains(" w=") {
            Some("weighted")
        } else {
            Some("unexplained")
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: u64,
    pub fano: u64,
    pub two_fano: u64,
    pub ch2_strict: u64,
    pub boundary: u64,
    pub with_oracle: u64,
    pub agreements: u64,
    pub disagreements: BTreeMap<String, u64>,
}

impl Summary {
    pub fn of(rows: &[ReportRow]) -> Self {
        let count = |f: fn(&ReportRow) -> bool| rows.iter().filter(|r| f(r)).count() as u64;
        let mut disagreements = BTreeMap::new();
        for class in rows.iter().filter_map(ReportRow::discrepancy_class) {
            *disagreements.entry(class.to_string()).or_insert(0) += 1;
        }
        Self {
            rows: rows.len() as u64,
            fano: count(|r| r.fano),
            two_fano: count(|r| r.two_fano),
            ch2_strict: count(|r| r.ch2_strict),
            boundary: count(|r| r.boundary_flag),
            with_oracle: count(|r| r.oracle.is_some()),
            agreements: count(|r| r.oracle.is_some() && r.agree),
            disagreements,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(rows: Vec<ReportRow>) -> Self {
        let summary = Summary::of(&rows);
        Self { rows, summary }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.to_table(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report rows serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let verbose = self.rows.iter().any(|r| r.witnesses.is_some());
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = CSV_COLUMNS.to_vec();
        if verbose {
            header.push("witnesses");
        }
        writer.write_record(&header).expect("in-memory csv write");
        for row in &self.rows {
            let mut record = vec![
                row.spec.clone(),
                row.dim.to_string(),
                row.fano.to_string(),
                row.fano_index.as_ref().map(render_rational).unwrap_or_default(),
                row.two_fano.to_string(),
                row.ch2_strict.to_string(),
                row.boundary_flag.to_string(),
                row.oracle.map(|o| o.to_string()).unwrap_or_default(),
                row.agree.to_string(),
            ];
            if verbose {
                record.push(render_witnesses(row.witnesses.as_deref().unwrap_or_default()));
            }
            writer.write_record(&record).expect("in-memory csv write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv flush")).expect("csv output is utf-8")
    }

    /// Rows of a CSV rendering.
    pub fn rows_from_csv(text: &str) -> Result<Vec<ReportRow>> {
        let format = |e: csv::Error| Error::Format(e.to_string());
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header = reader.headers().map_err(format)?.clone();
        let verbose = match header.len() {
            9 => false,
            10 if &header[9] == "witnesses" => true,
            _ => return Err(Error::Format(format!("unexpected csv header {header:?}"))),
        };
        if header.iter().take(9).ne(CSV_COLUMNS.iter().copied()) {
            return Err(Error::Format(format!("unexpected csv header {header:?}")));
        }
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(format)?;
            let flag = |i: usize| parse_bool(&record[i]);
            rows.push(ReportRow {
                spec: record[0].to_string(),
                dim: record[1].parse().map_err(|_| Error::Format(format!("bad dim '{}'", &record[1])))?,
                fano: flag(2)?,
                fano_index: match &record[3] {
                    "" => None,
                    text => Some(parse_rational(text)?),
                },
                two_fano: flag(4)?,
                ch2_strict: flag(5)?,
                boundary_flag: flag(6)?,
                oracle: match &record[7] {
                    "" => None,
                    _ => Some(flag(7)?),
                },
                agree: flag(8)?,
                witnesses: if verbose { Some(parse_witnesses(&record[9])?) } else { None },
            });
        }
        Ok(rows)
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<[String; 9]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.spec.clone(),
                    r.dim.to_string(),
                    r.fano.to_string(),
                    r.fano_index.as_ref().map_or("-".into(), render_rational),
                    r.two_fano.to_string(),
                    r.ch2_strict.to_string(),
                    r.boundary_flag.to_string(),
                    r.oracle.map_or("-".into(), |o| o.to_string()),
                    r.agree.to_string(),
                ]
            })
            .collect();
        let mut widths = CSV_COLUMNS.map(|c| c.chars().count());
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |fields: &[String]| {
            let mut s = String::new();
            for (i, (f, w)) in fields.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let pad = w - f.chars().count();
                if i == 0 {
                    s.push_str(f);
                    s.extend(std::iter::repeat(' ').take(pad));
                } else {
                    s.extend(std::iter::repeat(' ').take(pad));
                    s.push_str(f);
                }
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(&CSV_COLUMNS.map(String::from)));
        out.push('\n');
        for (cells, row) in cells.iter().zip(&self.rows) {
            out.push_str(&line(cells));
            out.push('\n');
            for w in row.witnesses.iter().flatten() {
                let _ = writeln!(out, "    {} · [{}] = {}", kind_text(w.kind), w.generator, render_rational(&w.value));
            }
        }
        let s = &self.summary;
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "rows {}  fano {}  two_fano {}  ch2_strict {}  boundary {}",
            s.rows, s.fano, s.two_fano, s.ch2_strict, s.boundary
        );
        let _ = write!(out, "oracle rows {}  agreements {}", s.with_oracle, s.agreements);
        for (class, n) in &s.disagreements {
            let _ = write!(out, "  {class} {n}");
        }
        out.push('\n');
        out
    }
}

pub const CSV_COLUMNS: [&str; 9] =
    ["spec", "dim", "fano", "fano_index", "two_fano", "ch2_strict", "boundary_flag", "oracle", "agree"];

/// `p/q`, or `p` when `q = 1`.
pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text).map_err(|_| Error::Format(format!("bad rational '{text}'")))
}

fn parse_bool(text: &str) -> Result<bool> {
    text.parse().map_err(|_| Error::Format(format!("bad boolean '{text}'")))
}

fn kind_text(kind: PairingKind) -> &'static str {
    match kind {
        PairingKind::C1Curve => "c1",
        PairingKind::Ch2Surface => "ch2",
    }
}

fn render_witnesses(ws: &[WitnessEntry]) -> String {
    ws.iter()
        .map(|w| format!("{}:{}={}", kind_text(w.kind), w.generator, render_rational(&w.value)))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_witnesses(text: &str) -> Result<Vec<WitnessEntry>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|item| {
            let bad = || Error::Format(format!("bad witness '{item}'"));
            let (kind, rest) = item.split_once(':').ok_or_else(bad)?;
            let (generator, value) = rest.rsplit_once('=').ok_or_else(bad)?;
            let kind = match kind {
                "c1" => PairingKind::C1Curve,
                "ch2" => PairingKind::Ch2Surface,
                _ => return Err(bad()),
            };
            Ok(WitnessEntry { kind, generator: generator.to_string(), value: parse_rational(value)? })
        })
        .collect()
}

mod rational_text {
    use super::{parse_rational, render_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

mod optional_rational_text {
    use super::{parse_rational, render_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&render_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|text| parse_rational(&text).map_err(D::Error::custom))
            .transpose()
    }
}

/// Build, classify and compare against the closed-form verdict.
pub fn row_for(spec: &SpaceSpec, verbose: bool) -> Result<ReportRow> {
    let space = spec.build()?;
    let record = classify(&space)?;
    let oracle = oracle_two_fano(&space)?;
    let witnesses = verbose.then(|| {
        record
            .witness_pairings
            .iter()
            .map(|w| WitnessEntry { kind: w.kind, generator: w.generator.clone(), value: w.value.clone() })
            .collect()
    });
    Ok(ReportRow {
        spec: space.label().to_string(),
        dim: record.dimension,
        fano: record.is_fano,
        fano_index: record.fano_index,
        two_fano: record.is_two_fano,
        ch2_strict: record.is_ch2_strictly_positive,
        boundary_flag: record.boundary_flag,
        agree: oracle.map_or(true, |o| o == record.is_two_fano),
        oracle,
        witnesses,
    })
}

/// One row for a textual descriptor, with witnesses.
pub fn run_classify(spec_text: &str) -> Result<ReportRow> {
    row_for(&SpaceSpec::parse(spec_text)?, true)
}

/// Every tuple in range, classified in parallel and returned in
/// lexicographic parameter order.
pub fn run_sweep(config: &SweepConfig) -> Result<Report> {
    let specs = config.specs()?;
    let rows = specs
        .par_iter()
        .map(|spec| row_for(spec, config.verbose))
        .collect::<Result<Vec<_>>>()?;
    let rows = if config.boundary_only {
        rows.into_iter().filter(|r| r.boundary_flag).collect()
    } else {
        rows
    };
    Ok(Report::new(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(family: Family) -> SweepConfig {
        SweepConfig::new(family)
    }

    #[test]
    fn counts_match_enumeration() {
        for family in [Family::CompleteIntersection, Family::Grassmannian, Family::Product, Family::P1Bundle] {
            for max_w in [1, 2] {
                let mut cfg = config(family);
                cfg.max_n = 4;
                cfg.max_w = max_w;
                assert_eq!(cfg.case_count(), cfg.specs().unwrap().len() as u64, "{family:?} w≤{max_w}");
            }
        }
        assert_eq!(multichoose(3, 2), 6);
        assert_eq!(multichoose(1, 40), 1);
        assert_eq!(multichoose(u64::MAX, 5), u64::MAX);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let all: Vec<Vec<u64>> = Tuples::new(2, 1, 3).collect();
        assert_eq!(all, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 2], vec![2, 3], vec![3, 3]]);
        assert_eq!(Tuples::new(0, 5, 1).collect::<Vec<_>>(), vec![Vec::<u64>::new()]);
        assert_eq!(Tuples::new(1, 5, 1).count(), 0);
    }

    #[test]
    fn grassmannian_sweep_agrees_except_on_the_boundary() {
        let mut cfg = config(Family::Grassmannian);
        cfg.max_k = 3;
        cfg.max_n = 8;
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(report.rows.len(), 7 + 5 + 3);
        for row in &report.rows {
            if !row.agree {
                assert!(row.boundary_flag, "{}", row.spec);
            }
        }
        assert_eq!(report.summary.disagreements.get("boundary"), Some(&2));
        assert_eq!(report.rows[0].spec, "grass k=1 n=2");
    }

    #[test]
    fn ci_sweep_matches_the_closed_form_away_from_the_boundary() {
        let mut cfg = config(Family::CompleteIntersection);
        cfg.max_n = 6;
        cfg.max_r = 2;
        cfg.max_d = 4;
        let report = run_sweep(&cfg).unwrap();
        for row in &report.rows {
            match row.discrepancy_class() {
                None | Some("boundary") | Some("vacuous") => {}
                other => panic!("{}: {other:?}", row.spec),
            }
        }
    }

    #[test]
    fn empty_range_gives_an_empty_report() {
        let mut cfg = config(Family::CompleteIntersection);
        cfg.max_n = 1;
        cfg.min_d = 3;
        cfg.max_d = 2;
        cfg.boundary_only = true;
        let report = run_sweep(&cfg).unwrap();
        assert!(report.rows.is_empty());
        let mut cfg = config(Family::Grassmannian);
        cfg.max_n = 1;
        assert!(run_sweep(&cfg).unwrap().rows.is_empty());
    }

    #[test]
    fn cap_refuses_with_the_count() {
        let mut cfg = config(Family::Product);
        cfg.cap = 10;
        match run_sweep(&cfg) {
            Err(Error::CaseCap { count, cap }) => assert!(count > cap && cap == 10),
            other => panic!("{other:?}"),
        }
        let mut cfg = config(Family::CompleteIntersection);
        cfg.max_n = u64::MAX / 4;
        assert!(matches!(cfg.specs(), Err(Error::CaseCap { .. })));
    }

    #[test]
    fn renderings_round_trip() {
        let mut cfg = config(Family::P1Bundle);
        cfg.max_n = 2;
        cfg.max_r = 1;
        cfg.max_d = 2;
        cfg.max_k = 1;
        for verbose in [false, true] {
            cfg.verbose = verbose;
            let report = run_sweep(&cfg).unwrap();
            assert!(!report.rows.is_empty());
            assert_eq!(Report::rows_from_csv(&report.to_csv()).unwrap(), report.rows);
            assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
        }
    }

    #[test]
    fn classify_row_for_the_cubic_fourfold() {
        let row = run_classify("ci n=5 d=3").unwrap();
        assert!(row.fano && !row.two_fano);
        assert_eq!(row.fano_index.as_ref().map(render_rational).as_deref(), Some("3"));
        assert_eq!(row.oracle, Some(false));
        assert!(row.agree);
    }
}

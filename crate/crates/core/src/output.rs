//! Flat row types for machine-readable output, written as CSV or JSON lines.
//!
//! Position sets are comma-separated ascending integers and rationals are
//! `p/q` strings or numerator/denominator pairs, so every row reads back
//! unchanged from either format.

use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::attractor::{format_positions, Verdict};
use crate::error::{Error, Result};
use crate::families::FamilyResult;
use crate::recurrence::{format_ratio, AppearanceProfile, GrowthReport, RecurrenceProfile};
use crate::solver::{GammaRecord, SpanExtremes};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    JsonLines,
}

/// Writes rows of one type in the chosen format; CSV gets a single header.
pub struct RowWriter<W: Write> {
    inner: Inner<W>,
}

enum Inner<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Json(W),
}

impl<W: Write> RowWriter<W> {
    pub fn new(out: W, format: Format) -> Self {
        let inner = match format {
            Format::Csv => Inner::Csv(Box::new(csv::Writer::from_writer(out))),
            Format::JsonLines => Inner::Json(out),
        };
        RowWriter { inner }
    }

    pub fn write<T: Serialize>(&mut self, row: &T) -> Result<()> {
        match &mut self.inner {
            Inner::Csv(w) => w.serialize(row).map_err(io_err),
            Inner::Json(w) => {
                serde_json::to_writer(&mut *w, row).map_err(io_err)?;
                w.write_all(b"\n").map_err(io_err)
            }
        }
    }

    pub fn flush(&mut self) -> Result<()> {
        match &mut self.inner {
            Inner::Csv(w) => w.flush().map_err(io_err),
            Inner::Json(w) => w.flush().map_err(io_err),
        }
    }
}

fn io_err(e: impl ToString) -> Error {
    Error::Io(e.to_string())
}

/// Reads back rows written by [`RowWriter`].
pub fn read_rows<T: DeserializeOwned>(text: &str, format: Format) -> Result<Vec<T>> {
    match format {
        Format::Csv => csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .map_err(io_err),
        Format::JsonLines => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(io_err))
            .collect(),
    }
}

/// Renders rows to a string.
pub fn render<T: Serialize>(rows: &[T], format: Format) -> Result<String> {
    let mut buf = Vec::new();
    {
        let mut w = RowWriter::new(&mut buf, format);
        for r in rows {
            w.write(r)?;
        }
        w.flush()?;
    }
    String::from_utf8(buf).map_err(io_err)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenRow {
    pub n: usize,
    pub word: String,
}

/// One gamma sweep row; unrequested columns stay empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaRow {
    pub n: usize,
    pub gamma: usize,
    /// False when the solver hit its budget; `gamma` is then an upper bound.
    pub proven: bool,
    pub witness: String,
    pub minspan: Option<usize>,
    pub maxspan: Option<usize>,
    pub delta_num: Option<u64>,
    pub delta_den: Option<u64>,
    pub greedy_size: Option<usize>,
}

impl From<&GammaRecord> for GammaRow {
    fn from(r: &GammaRecord) -> Self {
        GammaRow {
            n: r.n,
            gamma: r.gamma,
            proven: r.proven,
            witness: format_positions(&r.witness),
            minspan: r.minspan,
            maxspan: r.maxspan,
            delta_num: r.delta.map(|d| *d.numer()),
            delta_den: r.delta.map(|d| *d.denom()),
            greedy_size: r.greedy_size,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub n: usize,
    pub positions: String,
    pub verdict: String,
}

impl VerifyRow {
    pub fn new(n: usize, positions: &[usize], verdict: Verdict) -> Self {
        VerifyRow {
            n,
            positions: format_positions(positions),
            verdict: verdict.to_string(),
        }
    }

    pub fn verdict(&self) -> Result<Verdict> {
        Verdict::from_str(&self.verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyRow {
    pub n: usize,
    pub size: usize,
    pub positions: String,
    pub verdict: String,
}

/// A greedy addition: `index` was forced by the novel factor at
/// `factor_start` of length `factor_len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyStepRow {
    pub index: usize,
    pub factor_start: usize,
    pub factor_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub n: usize,
    /// Empty when `n` lies outside every case.
    pub case: String,
    pub claimed_size: Option<usize>,
    pub positions: String,
    pub verdict: Option<String>,
}

impl FamilyRow {
    pub fn new(r: &FamilyResult, verdict: Option<Verdict>) -> Self {
        FamilyRow {
            n: r.n,
            case: r.case.map(|c| c.to_string()).unwrap_or_default(),
            claimed_size: r.applicable().then_some(r.claimed_size),
            positions: format_positions(&r.positions),
            verdict: verdict.map(|v| v.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanRow {
    pub n: usize,
    pub gamma: Option<usize>,
    pub minspan: Option<usize>,
    pub min_witness: String,
    pub maxspan: Option<usize>,
    pub max_witness: String,
    /// Closed-form values where one is known for this sequence and `n`.
    pub closed_minspan: Option<usize>,
    pub closed_maxspan: Option<usize>,
}

impl SpanRow {
    /// `spans` is `None` when the search ran out of budget.
    pub fn new(n: usize, spans: Option<&SpanExtremes>) -> Self {
        SpanRow {
            n,
            gamma: spans.map(|s| s.min_witness.len()),
            minspan: spans.map(|s| s.minspan),
            min_witness: spans
                .map(|s| format_positions(&s.min_witness))
                .unwrap_or_default(),
            maxspan: spans.map(|s| s.maxspan),
            max_witness: spans
                .map(|s| format_positions(&s.max_witness))
                .unwrap_or_default(),
            closed_minspan: None,
            closed_maxspan: None,
        }
    }
}

/// Appearance and recurrence values for one factor length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub window: usize,
    pub len: usize,
    pub appearance: usize,
    /// Empty when unbounded within the window.
    pub recurrence: Option<usize>,
}

impl ProfileRow {
    pub fn rows(a: &AppearanceProfile, r: &RecurrenceProfile) -> Vec<ProfileRow> {
        a.values
            .iter()
            .zip(&r.values)
            .enumerate()
            .map(|(i, (&appearance, &recurrence))| ProfileRow {
                window: a.window,
                len: i + 1,
                appearance,
                recurrence,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsRow {
    pub window: usize,
    pub max_len: usize,
    pub appearance_constant: String,
    pub appearance_stable: bool,
    /// Empty when the word looks non-recurrent.
    pub recurrence_constant: Option<String>,
    pub recurrence_stable: bool,
}

impl ConstantsRow {
    pub fn new(a: &AppearanceProfile, r: &RecurrenceProfile) -> Self {
        ConstantsRow {
            window: a.window,
            max_len: a.values.len(),
            appearance_constant: format_ratio(a.constant),
            appearance_stable: a.stable,
            recurrence_constant: r.constant.map(format_ratio),
            recurrence_stable: r.stable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    pub construction: String,
    pub stride: Option<usize>,
    pub size: usize,
    pub positions: String,
    pub verdict: String,
    pub kept_levels: Option<usize>,
    pub c0: Option<usize>,
    pub bound_met: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub class: String,
    pub n_points: String,
    pub sizes: String,
    pub sources: String,
    pub constant_residual: f64,
    pub log_residual: f64,
    pub nonrecurrent: usize,
    /// Disjoint witnesses as `index+len`, separated by spaces.
    pub disjoint_witnesses: String,
}

impl From<&GrowthReport> for ClassifyRow {
    fn from(r: &GrowthReport) -> Self {
        let join = |it: Vec<String>, sep| it.join(sep);
        ClassifyRow {
            class: r.class.to_string(),
            n_points: join(r.points.iter().map(|p| p.n.to_string()).collect(), ","),
            sizes: join(r.points.iter().map(|p| p.size.to_string()).collect(), ","),
            sources: join(r.points.iter().map(|p| p.source.to_string()).collect(), ","),
            constant_residual: r.constant_residual,
            log_residual: r.log_residual,
            nonrecurrent: r.nonrecurrent.len(),
            disjoint_witnesses: join(
                r.disjoint
                    .iter()
                    .map(|w| format!("{}+{}", w.index, w.len))
                    .collect(),
                " ",
            ),
        }
    }
}

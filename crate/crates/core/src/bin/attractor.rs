use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use string_attractors::attractor::{is_attractor, parse_positions, Verdict};
use string_attractors::families::{self, pd_maxspan_closed, pd_minspan_closed};
use string_attractors::greedy::GreedyState;
use string_attractors::output::*;
use string_attractors::recurrence::{
    appearance_constant_estimate, classify_growth, dyadic_attractor, recurrence_constant_estimate,
    recurrent_attractor, stride_attractor, WindowedSequence,
};
use string_attractors::solver::{gamma_rows, span_extremes_with, SolverOptions, TableFields};
use string_attractors::{Builtin, Error, SequenceSpec};

/// String attractors of prefixes of infinite words.
#[derive(Parser)]
#[command(name = "attractor", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Builtin name (tm, pd, vtm, trib, pow2), `morphism:...` or `dfao:<path>`.
    #[arg(long)]
    seq: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Solver budget per prefix; 0 disables the limit.
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
    /// Worker count; 0 picks one per core.
    #[arg(long, env = "ATTRACTOR_THREADS", default_value_t = 0)]
    threads: usize,
}

/// Either a single length or every length up to a maximum.
#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Lengths {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
}

impl Lengths {
    fn values(&self) -> Vec<usize> {
        match (self.n, self.n_max) {
            (Some(n), _) => vec![n],
            (None, Some(m)) => (1..=m).collect(),
            (None, None) => Vec::new(),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a prefix of the sequence.
    Gen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// Exact minimum attractor size of prefixes.
    Gamma {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lengths: Lengths,
        /// Add minimum and maximum span columns.
        #[arg(long)]
        span: bool,
        /// Add the exact delta columns.
        #[arg(long)]
        delta: bool,
        /// Add the greedy attractor size column.
        #[arg(long)]
        greedy: bool,
        /// All optional columns.
        #[arg(long)]
        all: bool,
    },
    /// Check a position set against a prefix.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Comma-separated positions.
        #[arg(long)]
        set: String,
    },
    /// Greedy attractor of a prefix.
    Greedy {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Print each addition with the factor that forced it.
        #[arg(long)]
        steps: bool,
    },
    /// Closed-form family of a builtin sequence, verified.
    Family {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lengths: Lengths,
    },
    /// Minimum and maximum span over minimum attractors.
    Span {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        lengths: Lengths,
    },
    /// Appearance and recurrence constants on a window.
    Appearance {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4096)]
        window: usize,
        /// Largest factor length sampled; defaults to min(64, window/8).
        #[arg(long)]
        max_len: Option<usize>,
        /// One row per factor length instead of the constants.
        #[arg(long)]
        per_length: bool,
    },
    /// Attractors built from the appearance and recurrence constants.
    Bound {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        construction: Construction,
        /// Stride for the stride construction.
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long, default_value_t = 4096)]
        window: usize,
    },
    /// Heuristic constant-or-logarithmic classification of attractor growth.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated sample lengths.
        #[arg(long, default_value = "64,128,256,512,1024,2048,4096")]
        n_points: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Stride,
    Dyadic,
    Recurrent,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ConstructionFailed { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

impl Common {
    fn spec(&self) -> Result<SequenceSpec, Failure> {
        Ok(SequenceSpec::parse(&self.seq)?)
    }

    fn solver(&self) -> SolverOptions {
        match self.timeout_ms {
            0 => SolverOptions::unlimited(),
            ms => SolverOptions::with_timeout(Duration::from_millis(ms)),
        }
    }

    fn writer(&self) -> RowWriter<io::StdoutLock<'static>> {
        RowWriter::new(io::stdout().lock(), self.format.unwrap_or_default())
    }

    fn pool(&self) -> Result<rayon::ThreadPool, Failure> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn check(verdict: Verdict, what: &str) -> Outcome {
    match verdict {
        Verdict::Ok => Ok(()),
        v => Err(Failure::Verification(format!("{what}: {v}"))),
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Gen { common, n } => {
            let w = common.spec()?.prefix(n)?;
            match common.format {
                None => {
                    let mut out = io::stdout().lock();
                    writeln!(out, "{w}").map_err(|e| Failure::Usage(e.to_string()))?;
                }
                Some(_) => {
                    let mut out = common.writer();
                    out.write(&GenRow {
                        n,
                        word: w.to_string(),
                    })?;
                    out.flush()?;
                }
            }
            Ok(())
        }
        Cmd::Gamma {
            common,
            lengths,
            span,
            delta,
            greedy,
            all,
        } => {
            let fields = if all {
                TableFields::all()
            } else {
                TableFields {
                    span,
                    delta,
                    greedy,
                }
            };
            let rows = gamma_rows(
                &common.spec()?,
                &lengths.values(),
                fields,
                &common.solver(),
                common.threads,
            )?;
            let mut out = common.writer();
            for r in &rows {
                out.write(&GammaRow::from(r))?;
            }
            out.flush()?;
            Ok(())
        }
        Cmd::Verify { common, n, set } => {
            let w = common.spec()?.prefix(n)?;
            let positions = parse_positions(&set)?;
            let verdict = is_attractor(&w, &positions)?;
            let mut out = common.writer();
            out.write(&VerifyRow::new(n, &positions, verdict))?;
            out.flush()?;
            check(verdict, "supplied set")
        }
        Cmd::Greedy { common, n, steps } => {
            let mut state = GreedyState::new(common.spec()?);
            let set = state.attractor(n)?;
            let w = common.spec()?.prefix(n)?;
            let verdict = is_attractor(&w, &set)?;
            let mut out = common.writer();
            if steps {
                for s in state.history().iter().filter(|s| s.index < n) {
                    out.write(&GreedyStepRow {
                        index: s.index,
                        factor_start: s.factor_start,
                        factor_len: s.factor_len,
                    })?;
                }
            } else {
                out.write(&GreedyRow {
                    n,
                    size: set.len(),
                    positions: set.to_string(),
                    verdict: verdict.to_string(),
                })?;
            }
            out.flush()?;
            check(verdict, "greedy attractor")
        }
        Cmd::Family { common, lengths } => {
            let b: Builtin = common
                .seq
                .parse()
                .map_err(|_| Failure::Usage(format!("no family for `{}`", common.seq)))?;
            let rows: Vec<(FamilyRow, Option<Verdict>)> = common.pool()?.install(|| {
                lengths
                    .values()
                    .par_iter()
                    .map(|&n| {
                        let r = families::family(b, n)?;
                        let v = families::check(&r)?;
                        Ok((FamilyRow::new(&r, v), v))
                    })
                    .collect::<Result<_, Error>>()
            })?;
            let mut out = common.writer();
            for (row, _) in &rows {
                out.write(row)?;
            }
            out.flush()?;
            for (row, v) in rows {
                if let Some(v) = v {
                    check(v, &format!("family at n={}", row.n))?;
                }
            }
            Ok(())
        }
        Cmd::Span { common, lengths } => {
            let spec = common.spec()?;
            let is_pd = spec == SequenceSpec::from(Builtin::PeriodDoubling);
            let ns = lengths.values();
            let w = spec.prefix(ns.iter().copied().max().unwrap_or(0))?;
            let opts = common.solver();
            let rows: Vec<SpanRow> = common.pool()?.install(|| {
                ns.par_iter()
                    .map(|&n| {
                        let spans = span_extremes_with(&w.prefix(n), &opts)?;
                        let mut row = SpanRow::new(n, spans.as_ref());
                        if is_pd {
                            row.closed_minspan = pd_minspan_closed(n)?;
                            row.closed_maxspan = pd_maxspan_closed(n)?;
                        }
                        Ok(row)
                    })
                    .collect::<Result<_, Error>>()
            })?;
            let mut out = common.writer();
            for r in &rows {
                out.write(r)?;
            }
            out.flush()?;
            Ok(())
        }
        Cmd::Appearance {
            common,
            window,
            max_len,
            per_length,
        } => {
            let ws = WindowedSequence::new(common.spec()?, window)?;
            let l_max = max_len.unwrap_or((window / 8).clamp(1, 64));
            let a = appearance_constant_estimate(&ws, l_max)?;
            let r = recurrence_constant_estimate(&ws, l_max)?;
            if !a.stable || !r.stable {
                eprintln!("warning: values change when the window is doubled");
            }
            let mut out = common.writer();
            if per_length {
                for row in ProfileRow::rows(&a, &r) {
                    out.write(&row)?;
                }
            } else {
                out.write(&ConstantsRow::new(&a, &r))?;
            }
            out.flush()?;
            Ok(())
        }
        Cmd::Bound {
            common,
            n,
            construction,
            stride,
            window,
        } => {
            let ws = WindowedSequence::new(common.spec()?, window)?;
            let l_max = (window / 8).clamp(1, 64);
            let a_hat = appearance_constant_estimate(&ws, l_max)?.constant;
            let mut row = BoundRow {
                n,
                construction: String::new(),
                stride: None,
                size: 0,
                positions: String::new(),
                verdict: String::new(),
                kept_levels: None,
                c0: None,
                bound_met: None,
            };
            let set = match construction {
                Construction::Stride => {
                    row.construction = "stride".into();
                    row.stride = Some(stride);
                    stride_attractor(&ws, n, stride, a_hat)?
                }
                Construction::Dyadic => {
                    row.construction = "dyadic".into();
                    dyadic_attractor(&ws, n, a_hat)?
                }
                Construction::Recurrent => {
                    row.construction = "recurrent".into();
                    let r_hat = recurrence_constant_estimate(&ws, l_max)?
                        .constant
                        .ok_or_else(|| {
                            Failure::Usage("recurrence constant is unbounded on this window".into())
                        })?;
                    let rec = recurrent_attractor(&ws, n, a_hat, r_hat)?;
                    row.kept_levels = Some(rec.kept_levels);
                    row.c0 = Some(rec.c0);
                    row.bound_met = Some(rec.bound_met());
                    rec.set
                }
            };
            // The stride set only claims its own length range, which the
            // construction has already checked.
            let verdict = match construction {
                Construction::Stride => Verdict::Ok,
                _ => is_attractor(&ws.prefix(n)?, &set)?,
            };
            row.size = set.len();
            row.positions = set.to_string();
            row.verdict = verdict.to_string();
            let mut out = common.writer();
            out.write(&row)?;
            out.flush()?;
            check(verdict, "construction")
        }
        Cmd::Classify { common, n_points } => {
            let points = parse_positions(&n_points)?;
            let report = classify_growth(&common.spec()?, &points)?;
            let mut out = common.writer();
            out.write(&ClassifyRow::from(&report))?;
            out.flush()?;
            Ok(())
        }
    }
}

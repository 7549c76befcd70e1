//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Tolerances are fixed below and never loosened.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use num_rational::Ratio;
use rayon::prelude::*;
use string_attractors::families::*;
use string_attractors::greedy::GreedyState;
use string_attractors::recurrence::*;
use string_attractors::solver::{
    gamma_rows, gamma_table, span_extremes, SolverOptions, TableFields,
};
use string_attractors::{delta, factor_count, is_attractor, is_attractor_for_lengths};
use string_attractors::{Builtin, LengthRange, SequenceSpec, Verdict, Word};

/// Relative slack on the appearance constant in the greedy growth check.
const APPEARANCE_TOLERANCE: (u64, u64) = (5, 100);
const TM_TABLE_LIMIT: Duration = Duration::from_secs(5 * 60);
const TM_CLOSED_LIMIT: Duration = Duration::from_secs(30 * 60);
const DELTA_LIMIT: Duration = Duration::from_secs(10 * 60);

const TM_TABLE: [usize; 32] = [
    1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4,
];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn spec(b: Builtin) -> SequenceSpec {
    SequenceSpec::from(b)
}

fn exact(b: Builtin, n_max: usize) -> Result<Vec<usize>, String> {
    let fields = TableFields {
        span: false,
        delta: false,
        greedy: false,
    };
    let rows = gamma_table(&spec(b), n_max, fields, &SolverOptions::unlimited(), 0)
        .map_err(|e| e.to_string())?;
    Ok(rows.into_iter().map(|r| r.gamma).collect())
}

/// Checks every applicable family in `lo..=hi`; returns how many applied.
fn family_sweep(
    b: Builtin,
    lo: usize,
    hi: usize,
    size: impl Fn(&FamilyResult) -> usize + Sync,
) -> Result<usize, String> {
    let w = spec(b).prefix(hi).map_err(|e| e.to_string())?;
    let results: Vec<Result<bool, String>> = (lo..=hi)
        .into_par_iter()
        .map(|n| {
            let r = family(b, n).map_err(|e| e.to_string())?;
            let Some(case) = r.case else { return Ok(false) };
            let v = is_attractor(&w.prefix(n), &r.positions).map_err(|e| e.to_string())?;
            ensure(v == Verdict::Ok, || format!("{case} at n={n}: {v}"))?;
            ensure(r.positions.len() == size(&r), || {
                format!("{case} at n={n}: size {}", r.positions.len())
            })?;
            Ok(true)
        })
        .collect();
    let mut applied = 0;
    for r in results {
        applied += usize::from(r?);
    }
    Ok(applied)
}

fn c1_tm_table() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_attractor"))
        .args(["gamma", "--seq", "tm", "--n-max", "32", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("exit {:?}", out.status.code())
    })?;
    let text = String::from_utf8_lossy(&out.stdout);
    let got: Vec<usize> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap_or("").parse().unwrap_or(0))
        .collect();
    ensure(got == TM_TABLE, || format!("got {got:?}"))?;
    within(start, TM_TABLE_LIMIT)?;
    Ok(format!("32 rows match in {:.2?}", start.elapsed()))
}

fn c2_tm_closed() -> Check {
    let start = Instant::now();
    let g = exact(Builtin::ThueMorse, 59)?;
    for (i, &v) in g.iter().enumerate() {
        let closed = tm_gamma_closed(i + 1).map_err(|e| e.to_string())?;
        ensure(v == closed, || {
            format!("n={}: exact {v}, closed {closed}", i + 1)
        })?;
    }
    within(start, TM_CLOSED_LIMIT)?;
    Ok(format!("n = 1..59 in {:.2?}", start.elapsed()))
}

fn c3_pd() -> Check {
    let g = exact(Builtin::PeriodDoubling, 256)?;
    for (i, &v) in g.iter().enumerate().skip(1) {
        ensure(v == 2, || format!("gamma = {v} at n={}", i + 1))?;
    }
    let applied = family_sweep(Builtin::PeriodDoubling, 6, 4096, |_| 2)?;
    ensure(applied == 4091, || {
        format!("family applied at {applied} lengths")
    })?;
    let w = spec(Builtin::PeriodDoubling)
        .prefix(26)
        .map_err(|e| e.to_string())?;
    ensure(
        is_attractor(&w, &[7, 15])
            .map_err(|e| e.to_string())?
            .is_ok(),
        || "{7,15} fails at n=26".into(),
    )?;
    Ok("gamma = 2 on 2..256, family ok on 6..4096, {7,15} ok at 26".into())
}

fn c4_trib() -> Check {
    let g = exact(Builtin::Tribonacci, 200)?;
    for (i, &v) in g.iter().enumerate().skip(3) {
        ensure(v == 3, || format!("gamma = {v} at n={}", i + 1))?;
    }
    let applied = family_sweep(Builtin::Tribonacci, 4, 10_000, |_| 3)?;
    ensure(applied == 9997, || {
        format!("family applied at {applied} lengths")
    })?;
    Ok("gamma = 3 on 4..200, family size 3 ok on 4..10000".into())
}

fn c5_vtm() -> Check {
    let g = exact(Builtin::Vtm, 100)?;
    for (i, &v) in g.iter().enumerate() {
        let closed = vtm_gamma_closed(i + 1).map_err(|e| e.to_string())?;
        ensure(v == closed, || {
            format!("n={}: exact {v}, closed {closed}", i + 1)
        })?;
    }
    let applied = family_sweep(Builtin::Vtm, 13, 4096, |_| 4)?;
    Ok(format!(
        "closed form on 1..100, families ok at {applied} lengths up to 4096"
    ))
}

fn c6_pow2() -> Check {
    let limit = 3 * 4usize.pow(5);
    let applied = family_sweep(Builtin::PowersOfTwo, 3, limit, |r| {
        let c = r.case.expect("applicable");
        c.i as usize + if c.case == "a" { 2 } else { 3 }
    })?;
    let ns = [3, 6, 12, 24, 48, 96];
    let rows = gamma_rows(
        &spec(Builtin::PowersOfTwo),
        &ns,
        TableFields {
            span: false,
            delta: false,
            greedy: false,
        },
        &SolverOptions::unlimited(),
        0,
    )
    .map_err(|e| e.to_string())?;
    let mut detail = Vec::new();
    for r in rows {
        let fam = pow2_family(r.n).map_err(|e| e.to_string())?;
        let ws =
            WindowedSequence::new(spec(Builtin::PowersOfTwo), r.n).map_err(|e| e.to_string())?;
        let lower = disjoint_witnesses(&nonrecurrent_positions(&ws)).len();
        ensure(r.gamma <= fam.claimed_size && r.gamma >= lower, || {
            format!(
                "n={}: gamma {} family {} witnesses {lower}",
                r.n, r.gamma, fam.claimed_size
            )
        })?;
        detail.push(format!("{}:{}<={}", r.n, r.gamma, fam.claimed_size));
    }
    Ok(format!(
        "family sizes ok at {applied} lengths; gamma {}",
        detail.join(" ")
    ))
}

fn c7_delta() -> Check {
    let start = Instant::now();
    let tm60 = Word::from_symbols(thue_morse(60));
    let c = factor_count(&tm60, 13).map_err(|e| e.to_string())?;
    ensure(
        c == 40 && distinct_factors(&thue_morse(60), 13) == 40,
        || format!("d_13 = {c}"),
    )?;
    let d = delta(&tm60).map_err(|e| e.to_string())?;
    ensure(
        d >= Ratio::new(40, 13) && Ratio::new(40u64, 13) > Ratio::from_integer(3),
        || format!("delta = {d}"),
    )?;
    let words: Vec<Vec<u8>> = (1..=12).flat_map(|n| all_words(2, n)).collect();
    let bad = words.par_iter().find_any(|w| {
        let ww = Word::new(w.to_vec(), 2).unwrap();
        let (g, _) = string_attractors::solver::gamma(&ww).unwrap();
        delta(&ww).unwrap() > Ratio::from_integer(g as u64)
    });
    ensure(bad.is_none(), || format!("delta > gamma for {bad:?}"))?;
    within(start, DELTA_LIMIT)?;
    Ok(format!(
        "d_13 = 40, delta = {d}, delta <= gamma on {} binary words",
        words.len()
    ))
}

fn c8_oracle() -> Check {
    let mut words: Vec<(Vec<u8>, usize)> = (1..=10)
        .flat_map(|n| all_words(2, n))
        .map(|w| (w, 2))
        .collect();
    words.extend((1..=7).flat_map(|n| all_words(3, n)).map(|w| (w, 3)));
    let bad = words.par_iter().find_any(|(w, s)| {
        let (g, witness) =
            string_attractors::solver::gamma(&Word::new(w.clone(), *s).unwrap()).unwrap();
        g != naive_gamma(w) || !naive_is_attractor(w, &witness)
    });
    ensure(bad.is_none(), || format!("mismatch on {bad:?}"))?;
    Ok(format!("{} words agree", words.len()))
}

fn c9_spans() -> Check {
    let w = spec(Builtin::PeriodDoubling)
        .prefix(512)
        .map_err(|e| e.to_string())?;
    let rows: Vec<_> = (1..=512usize)
        .into_par_iter()
        .map(|n| (n, span_extremes(&w.prefix(n)).unwrap()))
        .collect();
    let mut gaps = Vec::new();
    for (n, s) in rows {
        let min = pd_minspan_closed(n).map_err(|e| e.to_string())?;
        let max = pd_maxspan_closed(n).map_err(|e| e.to_string())?;
        match min {
            Some(v) => ensure(s.minspan == v, || {
                format!("minspan n={n}: {} vs {v}", s.minspan)
            })?,
            None => gaps.push(format!("minspan({n})={}", s.minspan)),
        }
        match max {
            Some(v) => ensure(s.maxspan == v, || {
                format!("maxspan n={n}: {} vs {v}", s.maxspan)
            })?,
            None => gaps.push(format!("maxspan({n})={}", s.maxspan)),
        }
    }
    Ok(format!(
        "closed forms match on 1..512; outside the closed-form intervals: {}",
        gaps.join(" ")
    ))
}

fn c10_greedy() -> Check {
    let tol = Ratio::new(APPEARANCE_TOLERANCE.0, APPEARANCE_TOLERANCE.1);
    let results: Vec<Result<(), String>> = Builtin::ALL
        .par_iter()
        .map(|&b| {
            let name = b.name();
            let w = spec(b).prefix(4096).map_err(|e| e.to_string())?;
            let mut g = GreedyState::new(spec(b));
            g.advance_to(4096).map_err(|e| e.to_string())?;
            for n in 1..=4096 {
                let set = g.attractor(n).map_err(|e| e.to_string())?;
                let v = is_attractor(&w.prefix(n), &set).map_err(|e| e.to_string())?;
                ensure(v.is_ok(), || format!("{name} n={n}: {v}"))?;
            }
            let text = w.symbols();
            let steps = g.history();
            for (k, s) in steps.iter().enumerate() {
                let (p, l) = (s.factor_start, s.factor_len);
                ensure(naive_is_novel(text, p, l), || {
                    format!("{name} step {k}: factor not novel")
                })?;
                let proper_novel = (l > 1)
                    && (naive_is_novel(text, p, l - 1) || naive_is_novel(text, p + 1, l - 1));
                ensure(!proper_novel, || {
                    format!("{name} step {k}: a proper factor is novel")
                })?;
                if k > 0 {
                    let gap = s.index - steps[k - 1].index;
                    ensure(l <= gap, || {
                        format!("{name} step {k}: length {l} > gap {gap}")
                    })?;
                }
            }
            let ws = WindowedSequence::new(spec(b), 4096).map_err(|e| e.to_string())?;
            let a = appearance_constant_estimate(&ws, 64)
                .map_err(|e| e.to_string())?
                .constant;
            let factor = Ratio::from_integer(1) + (a * (Ratio::from_integer(1) + tol)).recip();
            for p in g.positions().windows(2).filter(|p| p[0] >= 16) {
                ensure(
                    Ratio::from_integer(p[1] as u64) >= factor * Ratio::from_integer(p[0] as u64),
                    || format!("{name}: {} -> {} grows by less than {factor}", p[0], p[1]),
                )?;
            }
            Ok(())
        })
        .collect();
    for r in results {
        r?;
    }
    Ok("verified at every n <= 4096, step properties and growth hold for all five".into())
}

fn c11_constructions() -> Check {
    let mut plateaus = Vec::new();
    for b in Builtin::ALL {
        let name = b.name();
        let ws = WindowedSequence::new(spec(b), 4096).map_err(|e| e.to_string())?;
        let a = appearance_constant_estimate(&ws, 64)
            .map_err(|e| e.to_string())?
            .constant;
        for s in [1, 2, 4, 8, 16] {
            for n in [64, 256, 1024] {
                let set = stride_attractor(&ws, n, s, a)
                    .map_err(|e| format!("{name} stride {s} n={n}: {e}"))?;
                let band = LengthRange::interval(s, (2 * s).min(n));
                let v = is_attractor_for_lengths(&ws.prefix(n).unwrap(), &set, &band)
                    .map_err(|e| e.to_string())?;
                ensure(v.is_ok(), || format!("{name} stride {s} n={n}: {v}"))?;
            }
        }
        let per_level = 2 * a.ceil().to_integer() as usize + 1;
        for n in [64, 256, 1024, 4096] {
            let set =
                dyadic_attractor(&ws, n, a).map_err(|e| format!("{name} dyadic n={n}: {e}"))?;
            let v = is_attractor(&ws.prefix(n).unwrap(), &set).map_err(|e| e.to_string())?;
            let bound = per_level * ((n + 2) as f64).log2().ceil() as usize;
            ensure(v.is_ok() && set.len() <= bound, || {
                format!("{name} dyadic n={n}: {v}, size {} > {bound}", set.len())
            })?;
        }
        if b == Builtin::PowersOfTwo {
            continue;
        }
        let r = recurrence_constant_estimate(&ws, 64)
            .map_err(|e| e.to_string())?
            .constant
            .ok_or_else(|| format!("{name}: recurrence unbounded"))?;
        let mut sizes = Vec::new();
        for n in [256, 512, 1024, 2048] {
            let x = recurrent_attractor(&ws, n, a, r)
                .map_err(|e| format!("{name} recurrent n={n}: {e}"))?;
            let v = is_attractor(&ws.prefix(n).unwrap(), &x.set).map_err(|e| e.to_string())?;
            ensure(v.is_ok(), || format!("{name} recurrent n={n}: {v}"))?;
            sizes.push(x.set.len());
        }
        ensure(sizes.iter().all(|&s| s == sizes[0]), || {
            format!("{name} recurrent sizes {sizes:?}")
        })?;
        plateaus.push(format!("{name}={}", sizes[0]));
    }
    Ok(format!(
        "stride and dyadic ok; recurrent sizes constant: {}",
        plateaus.join(" ")
    ))
}

fn c12_classify() -> Check {
    let points: Vec<usize> = (6..=12).map(|k| 1 << k).collect();
    let mut detail = Vec::new();
    for (b, want) in [
        (Builtin::ThueMorse, Growth::Constant),
        (Builtin::PeriodDoubling, Growth::Constant),
        (Builtin::Vtm, Growth::Constant),
        (Builtin::Tribonacci, Growth::Constant),
        (Builtin::PowersOfTwo, Growth::Logarithmic),
    ] {
        let r = classify_growth(&spec(b), &points).map_err(|e| e.to_string())?;
        ensure(r.class == want, || {
            format!("{}: {} (want {want})", b.name(), r.class)
        })?;
        if b == Builtin::PowersOfTwo {
            ensure(r.disjoint.len() >= 3, || {
                format!("pow2: {} disjoint witnesses", r.disjoint.len())
            })?;
            let ok = r
                .disjoint
                .windows(2)
                .all(|p| p[0].index + p[0].len <= p[1].index);
            ensure(ok, || "pow2 witnesses overlap".into())?;
        }
        detail.push(format!("{}={}", b.name(), r.class));
    }
    Ok(detail.join(" "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("thue-morse table via cli", c1_tm_table),
        ("thue-morse closed form", c2_tm_closed),
        ("period-doubling", c3_pd),
        ("tribonacci", c4_trib),
        ("vtm", c5_vtm),
        ("powers of two", c6_pow2),
        ("delta bound", c7_delta),
        ("oracle equivalence", c8_oracle),
        ("period-doubling spans", c9_spans),
        ("greedy", c10_greedy),
        ("window constructions", c11_constructions),
        ("growth classification", c12_classify),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

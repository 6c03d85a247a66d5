use std::collections::BTreeMap;

use anyhow::Context;
use cantor_quant::asymptotics::AsymptoticSample;
use cantor_quant::closed_form::optimal_error;
use cantor_quant::rational::{to_f64, to_wire};
use cantor_quant::{
    Word, build_alpha, canonical_split_set, coefficient_sequence, count_optimal_sets, dimension_sequence,
    distortion_closed_form, dp_optimal, lloyd_step, split_sets, u_forward, v_infinity,
};
use num_bigint::BigUint;
use serde_json::{Value, json};

use crate::output::{Output, OutputRecord, Table, float, rat};

/// Bad arguments that clap cannot catch; exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Most split sets `--split-set all` will enumerate.
pub const MAX_ENUMERATED_SETS: u64 = 10_000;

/// Largest DP level `verify` accepts.
pub const MAX_VERIFY_LEVEL: u32 = 14;

#[derive(Debug, Clone)]
pub enum SplitSelector {
    Canonical,
    All,
    Explicit(Vec<Word>),
}

impl std::str::FromStr for SplitSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "canonical" => Ok(SplitSelector::Canonical),
            "all" => Ok(SplitSelector::All),
            "" | "none" => Ok(SplitSelector::Explicit(Vec::new())),
            words => words
                .split(',')
                .map(|w| w.trim().parse::<Word>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()
                .map(SplitSelector::Explicit),
        }
    }
}

impl SplitSelector {
    fn describe(&self) -> String {
        match self {
            SplitSelector::Canonical => "canonical".into(),
            SplitSelector::All => "all".into(),
            SplitSelector::Explicit(words) => words.iter().map(Word::to_string).collect::<Vec<_>>().join(","),
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn words_json(words: &[Word]) -> Value {
    Value::Array(words.iter().map(|w| Value::String(w.to_string())).collect())
}

pub fn optimal_set(n: u64, selector: &SplitSelector) -> anyhow::Result<Output> {
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let count = count_optimal_sets(n);
    let sets: Vec<Vec<Word>> = match selector {
        SplitSelector::Canonical => vec![canonical_split_set(n)],
        SplitSelector::Explicit(words) => vec![words.clone()],
        SplitSelector::All => {
            if count > BigUint::from(MAX_ENUMERATED_SETS) {
                return Err(usage(format!(
                    "n = {n} has {count} optimal sets; --split-set all is limited to {MAX_ENUMERATED_SETS}"
                )));
            }
            split_sets(n).collect()
        }
    };

    let header = vec!["n", "set_index", "split_set", "point_index", "x", "y", "u", "total", "variance_term", "a_term"];
    let mut rows = Vec::new();
    let mut out_sets = Vec::new();
    for (set_index, split) in sets.iter().enumerate() {
        let alpha = build_alpha(n, split).map_err(|e| usage(e.to_string()))?;
        let report = distortion_closed_form(n, split).map_err(|e| usage(e.to_string()))?;
        let split_label = split.iter().map(Word::to_string).collect::<Vec<_>>().join(" ");
        let mut points = Vec::new();
        for (i, p) in alpha.points().iter().enumerate() {
            let u = u_forward(p);
            points.push(json!({ "x": rat(p.x()), "y": rat(&p.y()), "u": rat(&u) }));
            rows.push(vec![
                n.to_string(),
                set_index.to_string(),
                split_label.clone(),
                i.to_string(),
                to_wire(p.x()),
                to_wire(&p.y()),
                to_wire(&u),
                to_wire(&report.total),
                to_wire(&report.variance_term),
                to_wire(&report.a_term),
            ]);
        }
        out_sets.push(json!({
            "split_set": words_json(&report.split_set),
            "points": points,
            "distortion": {
                "total": rat(&report.total),
                "total_float": float(to_f64(&report.total)),
                "variance_term": rat(&report.variance_term),
                "a_term": rat(&report.a_term),
            },
        }));
    }
    Ok(Output {
        record: OutputRecord {
            command: "optimal-set".into(),
            parameters: params(&[("n", json!(n)), ("split_set", json!(selector.describe()))]),
            results: json!({ "optimal_set_count": count.to_string(), "sets": out_sets }),
        },
        table: Table { header, rows },
        ok: true,
    })
}

pub fn error_table(max_n: u64) -> anyhow::Result<Output> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let floor = v_infinity();
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let v = optimal_error(n);
        let excess = &v - &floor;
        out.push(json!({ "n": n, "v_n": rat(&v), "v_n_float": float(to_f64(&v)), "excess": rat(&excess) }));
        rows.push(vec![n.to_string(), to_wire(&v), float(to_f64(&v)), to_wire(&excess)]);
    }
    Ok(Output {
        record: OutputRecord {
            command: "error-table".into(),
            parameters: params(&[("max_n", json!(max_n))]),
            results: json!({ "v_infinity": rat(&floor), "rows": out }),
        },
        table: Table { header: vec!["n", "v_n", "v_n_float", "excess"], rows },
        ok: true,
    })
}

pub fn verify(max_n: u64, level: u32, max_depth: u32) -> anyhow::Result<Output> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    if level == 0 || level > MAX_VERIFY_LEVEL {
        return Err(usage(format!("--level must be in 1..={MAX_VERIFY_LEVEL}")));
    }
    if max_n > 1 << level {
        return Err(usage(format!("--max-n {max_n} exceeds 2^{level} = {} intervals", 1u64 << level)));
    }
    let mut all_ok = true;
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let split = canonical_split_set(n);
        let closed = distortion_closed_form(n, &split)?.total;
        let alpha = build_alpha(n, &split)?;
        let dp = dp_optimal(n, level).with_context(|| format!("DP search for n = {n} at level {level}"))?;
        let next = lloyd_step(&alpha, max_depth).with_context(|| format!("Lloyd step on the optimal set for n = {n}"))?;
        let dp_match = dp.value == closed;
        let points_match = dp.points.abscissas() == alpha.abscissas();
        let fixed = next == alpha;
        let pass = dp_match && points_match && fixed;
        all_ok &= pass;
        out.push(json!({
            "n": n,
            "closed_form": rat(&closed),
            "dp_value": rat(&dp.value),
            "dp_match": dp_match,
            "points_match": points_match,
            "lloyd_fixed_point": fixed,
            "pass": pass,
        }));
        rows.push(vec![
            n.to_string(),
            to_wire(&dp.value),
            to_wire(&closed),
            dp_match.to_string(),
            points_match.to_string(),
            fixed.to_string(),
            pass.to_string(),
        ]);
    }
    Ok(Output {
        record: OutputRecord {
            command: "verify".into(),
            parameters: params(&[
                ("level", json!(level)),
                ("max_n", json!(max_n)),
                ("max_refine_depth", json!(max_depth)),
            ]),
            results: json!({ "all_pass": all_ok, "rows": out }),
        },
        table: Table {
            header: vec!["n", "dp_value", "closed_form", "dp_match", "points_match", "lloyd_fixed_point", "pass"],
            rows,
        },
        ok: all_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Dimension,
    Coefficient,
}

pub fn asymptotics(kind: Kind, max_level: u32, plot_data: bool) -> anyhow::Result<Output> {
    if max_level == 0 || max_level > 63 {
        return Err(usage("--max-level must be in 1..=63"));
    }
    let samples = match kind {
        Kind::Dimension => dimension_sequence(max_level),
        Kind::Coefficient => coefficient_sequence(max_level),
    };
    let estimate = |s: &AsymptoticSample| match kind {
        Kind::Dimension => s.dim_estimate.map(float).unwrap_or_else(|| "nan".into()),
        Kind::Coefficient => float(s.coeff_estimate),
    };
    let (kind_name, column) = match kind {
        Kind::Dimension => ("dimension", "dim_estimate"),
        Kind::Coefficient => ("coefficient", "coeff_estimate"),
    };
    let parameters = params(&[
        ("kind", json!(kind_name)),
        ("max_level", json!(max_level)),
        ("plot_data", json!(plot_data)),
    ]);

    let (results, table) = if plot_data {
        let rows: Vec<Vec<String>> = samples.iter().map(|s| vec![s.n.to_string(), estimate(s)]).collect();
        let pairs: Vec<Value> = rows.iter().map(|r| json!([r[0], r[1]])).collect();
        (json!({ "columns": ["n", column], "data": pairs }), Table { header: vec!["n", column], rows })
    } else {
        let mut rows = Vec::new();
        let mut out = Vec::new();
        for s in &samples {
            let mut row = vec![s.level.to_string(), s.n.to_string(), to_wire(&s.v_n), to_wire(&s.excess)];
            let mut obj = json!({
                "level": s.level,
                "n": s.n.to_string(),
                "v_n": rat(&s.v_n),
                "excess": rat(&s.excess),
            });
            if kind == Kind::Coefficient {
                row.push(to_wire(&s.coeff_exact));
                obj["scaled_excess"] = rat(&s.coeff_exact);
            }
            row.push(estimate(s));
            obj[column] = Value::String(estimate(s));
            rows.push(row);
            out.push(obj);
        }
        let header = match kind {
            Kind::Dimension => vec!["level", "n", "v_n", "excess", "dim_estimate"],
            Kind::Coefficient => vec!["level", "n", "v_n", "excess", "scaled_excess", "coeff_estimate"],
        };
        (json!({ "v_infinity": rat(&v_infinity()), "rows": out }), Table { header, rows })
    };
    Ok(Output {
        record: OutputRecord { command: "asymptotics".into(), parameters, results },
        table,
        ok: true,
    })
}

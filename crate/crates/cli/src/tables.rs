use crate::output::{status, Table};
use anyhow::{bail, Context, Result};
use braidorb::charvar::{orbit_of_rep, AffineRep, LinearPart};
use braidorb::classify::table_rows;
use braidorb::cyclo::z;
use braidorb::linalg::normalize_line;
use braidorb::reflgrp::{stratum_examples, ReflGroup, Stratifier, Which};
use braidorb::tables::{self, TableCase};
use braidorb::Cyclotomic;
use rayon::prelude::*;

pub const TABLE_NAMES: [&str; 7] = ["reducible", "imprimitive", "tetrahedral", "octahedral", "icosahedral", "hessian", "witting"];

pub const COLUMNS: [&str; 6] = ["case-id", "lambda", "tau", "expected_size", "computed_size", "status"];

fn render_tuple(v: &[Cyclotomic]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.render()).collect();
    format!("({})", parts.join(", "))
}

fn render_line(v: &[Cyclotomic]) -> String {
    let v = normalize_line(v).unwrap_or_else(|| v.to_vec());
    let parts: Vec<String> = v.iter().map(|x| x.render()).collect();
    format!("[{}]", parts.join(" : "))
}

fn cases(name: &str) -> Option<Vec<TableCase>> {
    Some(match name {
        "reducible" => vec![
            tables::reducible_pair_case("reducible-pair-a5", &z(5, 1)),
            tables::reducible_triple_case("reducible-triple-3-4", &z(3, 1), &z(4, 1)),
        ],
        "imprimitive" => tables::imprimitive_examples(),
        "tetrahedral" => tables::tetrahedral_cases(),
        "octahedral" => tables::octahedral_cases(),
        "icosahedral" => tables::icosahedral_cases(),
        _ => return None,
    })
}

struct Task {
    id: String,
    lin: LinearPart,
    tau: Vec<Cyclotomic>,
    expected: u64,
}

fn four_puncture_table(cases: Vec<TableCase>, bound: usize) -> Result<(Table, bool)> {
    let mut tasks = Vec::new();
    for case in cases {
        let lin = LinearPart::new(case.lambda.clone())?;
        let predicted = table_rows(&lin).with_context(|| format!("case {}", case.id))?;
        let generic = predicted.iter().find(|r| r.generic).map(|r| r.tau.clone());
        for (k, row) in case.rows.iter().enumerate() {
            let (id, tau) = match &row.tau {
                Some(t) => (format!("{}:{}", case.id, k + 1), t.clone()),
                None => match &generic {
                    Some(t) => (format!("{}:other", case.id), t.clone()),
                    None => bail!("case {} has no generic representative", case.id),
                },
            };
            tasks.push(Task { id, lin: lin.clone(), tau, expected: row.size });
        }
    }
    let rows: Vec<Result<(Vec<String>, bool)>> = tasks
        .par_iter()
        .map(|t| {
            let rep = AffineRep::from_full(t.lin.clone(), t.tau.clone())?;
            let o = orbit_of_rep(&rep, bound)?;
            let ok = !o.exceeded_bound && o.size as u64 == t.expected;
            let computed = if o.exceeded_bound { format!(">{}", bound) } else { o.size.to_string() };
            Ok((
                vec![t.id.clone(), t.lin.render(), render_tuple(&t.tau), t.expected.to_string(), computed, status(ok).into()],
                ok,
            ))
        })
        .collect();
    collect(rows)
}

fn collect(rows: Vec<Result<(Vec<String>, bool)>>) -> Result<(Table, bool)> {
    let mut table = Table::new(&COLUMNS);
    let mut all = true;
    for r in rows {
        let (row, ok) = r?;
        all &= ok;
        table.rows.push(row);
    }
    Ok((table, all))
}

/// Representatives of every stratum row; a row passes when orbit size and both incidence counts match.
pub fn strata_table(which: Which) -> Result<(Table, bool)> {
    let s = Stratifier::new(ReflGroup::standard(which)?)?;
    let examples = stratum_examples(&s)?;
    let prefix = match which {
        Which::G25 => "hessian",
        Which::G32 => "witting",
    };
    let rows: Vec<Result<(Vec<String>, bool)>> = examples
        .par_iter()
        .map(|ex| {
            let label = s.stratify(&ex.point)?;
            let ok = label.orbit_size == ex.row.order
                && label.reflection_hyperplanes == ex.row.reflection
                && label.proper_planes == ex.row.proper;
            Ok((
                vec![
                    format!("{}:{}", prefix, ex.label),
                    which.name().to_string(),
                    render_line(&ex.point),
                    ex.row.order.to_string(),
                    label.orbit_size.to_string(),
                    status(ok).into(),
                ],
                ok,
            ))
        })
        .collect();
    collect(rows)
}

pub fn build(name: &str, bound: usize) -> Result<(Table, bool)> {
    match name {
        "hessian" => strata_table(Which::G25),
        "witting" => strata_table(Which::G32),
        other => match cases(other) {
            Some(c) => four_puncture_table(c, bound),
            None => bail!("unknown table `{}` (expected one of {} or all)", other, TABLE_NAMES.join(", ")),
        },
    }
}

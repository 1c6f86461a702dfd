use crate::output::{status, Report, Table};
use crate::parse;
use crate::tables as tbl;
use crate::RepArgs;
use anyhow::{anyhow, bail, Context, Result};
use braidorb::braid::parse_pure;
use braidorb::charvar::{normalize_rotated, orbit_of_rep, AffineRep, LinearPart, DEFAULT_ORBIT_BOUND};
use braidorb::classify::{classify_n4, gate as gate_rep, table_rows, verdict_agrees, Verdict};
use braidorb::coalesce::{equivariance_check, r_kl, CoalesceSpec};
use braidorb::connect::{
    eigenvalues, monodromy_numeric, numeric_closure, restricted_residues, same_spectrum, to_numeric, CMat, ConnectionSpec,
    LoopOptions,
};
use braidorb::cyclo::z;
use braidorb::reflgrp::{
    displayed_hessian_proper_planes, displayed_hyperplanes, lattice_census, same_subspaces, ReflGroup, Stratifier, Which,
};
use braidorb::{Cyclotomic, Rational};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use std::path::Path;

/// Flag values read from `--input`.
#[derive(Default)]
pub struct Input(Map<String, Value>);

impl Input {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else { return Ok(Input::default()) };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        match serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))? {
            Value::Object(m) => Ok(Input(m)),
            _ => bail!("{} must hold a JSON object", path.display()),
        }
    }

    pub fn str(&self, key: &str) -> Option<String> {
        Some(match self.0.get(key)? {
            Value::String(s) => s.clone(),
            Value::Array(a) => {
                a.iter().map(|v| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())).collect::<Vec<_>>().join(",")
            }
            other => other.to_string(),
        })
    }

    pub fn usize(&self, key: &str) -> Option<usize> {
        self.0.get(key)?.as_u64().map(|v| v as usize)
    }

    pub fn u64(&self, key: &str) -> Option<u64> {
        self.0.get(key)?.as_u64()
    }

    pub fn f64(&self, key: &str) -> Option<f64> {
        self.0.get(key)?.as_f64()
    }

    pub fn string(&self, flag: Option<String>, key: &str, default: &str) -> String {
        flag.or_else(|| self.str(key)).unwrap_or_else(|| default.to_string())
    }

    pub fn rep(&self, r: RepArgs) -> RepArgs {
        RepArgs {
            lambda: r.lambda.or_else(|| self.str("lambda")),
            tau: r.tau.or_else(|| self.str("tau")),
            n: r.n.or_else(|| self.usize("n")),
            bound: r.bound.or_else(|| self.usize("bound")),
        }
    }
}

fn linear(r: &RepArgs) -> Result<LinearPart> {
    let text = r.lambda.as_deref().ok_or_else(|| anyhow!("--lambda is required"))?;
    let lin = LinearPart::new(parse::cyclo_list(text)?)?;
    if let Some(n) = r.n {
        if n != lin.n() {
            bail!("--n {} does not match the {} entries of --lambda", n, lin.n());
        }
    }
    Ok(lin)
}

fn affine(r: &RepArgs, lin: &LinearPart) -> Result<AffineRep> {
    let Some(text) = r.tau.as_deref() else {
        return Ok(AffineRep::new(lin.clone(), lin.delta())?);
    };
    let tau = parse::cyclo_list(text)?;
    Ok(if tau.len() == lin.n() { AffineRep::from_full(lin.clone(), tau)? } else { AffineRep::new(lin.clone(), tau)? })
}

fn render_all(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(|x| x.render()).collect()
}

fn tuple(v: &[Cyclotomic]) -> String {
    format!("({})", render_all(v).join(", "))
}

pub fn orbit(r: RepArgs, points: bool) -> Result<Report> {
    let lin = linear(&r)?;
    let rep = affine(&r, &lin)?;
    let bound = r.bound.unwrap_or(DEFAULT_ORBIT_BOUND);
    let o = orbit_of_rep(&rep, bound)?;
    let mut v = json!({
        "lambda": lin.render(),
        "tau": tuple(&rep.full_tau()),
        "class": o.points[0].render(),
        "rotation": o.rotation,
        "size": o.size,
        "exceeded_bound": o.exceeded_bound,
        "bound": bound,
    });
    let mut report = Report::new(Value::Null);
    if points {
        let pts: Vec<String> = o.sorted_points().iter().map(|p| p.render()).collect();
        let mut t = Table::new(&["index", "point"]);
        t.rows = pts.iter().enumerate().map(|(i, p)| vec![i.to_string(), p.clone()]).collect();
        v["points"] = json!(pts);
        report.table = Some(t);
    }
    report.value = v;
    Ok(report)
}

pub fn classify4(r: RepArgs) -> Result<Report> {
    let lin = linear(&r)?;
    let cls = classify_n4(&lin)?;
    let rows = match table_rows(&lin) {
        Ok(rows) => rows,
        Err(braidorb::Error::NotFiniteCase) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let mut t = Table::new(&["tau", "size", "generic", "literal"]);
    let mut jrows = Vec::new();
    for row in &rows {
        t.rows.push(vec![tuple(&row.tau), row.size.to_string(), row.generic.to_string(), row.literal.to_string()]);
        jrows.push(json!({"tau": tuple(&row.tau), "size": row.size, "generic": row.generic, "literal": row.literal}));
    }
    let mut report = Report::new(json!({
        "lambda": lin.render(),
        "tag": cls.tag.name(),
        "finite_irreducible": cls.tag.is_finite_irreducible(),
        "p": cls.p.render(),
        "traces": render_all(&cls.traces),
        "t_squared": render_all(&cls.t_squared),
        "rows": jrows,
    }));
    report.table = Some(t);
    Ok(report)
}

fn verdict_parts(v: &Verdict) -> (&'static str, Option<u64>) {
    match v {
        Verdict::FiniteWithSize(s) => ("FiniteWithSize", Some(*s)),
        Verdict::FiniteBoundedBy(b) => ("FiniteBoundedBy", Some(*b)),
        Verdict::Infinite => ("Infinite", None),
        Verdict::ZeroClassFixedPoint => ("ZeroClassFixedPoint", None),
        Verdict::Undetermined => ("Undetermined", None),
    }
}

/// Random `λ_1,…,λ_{n−1}` in `μ_m` for one random `m ≤ 12`, so all entries share a small conductor.
fn random_linear_part(rng: &mut ChaCha8Rng, n: usize) -> Result<LinearPart> {
    let m: u32 = rng.gen_range(2..=12);
    Ok(LinearPart::from_first((0..n - 1).map(|_| z(m, rng.gen_range(0..m as i64))).collect())?)
}

pub fn gate(r: RepArgs, check: bool, samples: Option<usize>, seed: u64) -> Result<Report> {
    let Some(count) = samples else {
        let lin = linear(&r)?;
        let rep = affine(&r, &lin)?;
        let gv = gate_rep(&rep)?;
        let (name, size) = verdict_parts(&gv.verdict);
        let mut v = json!({
            "lambda": lin.render(),
            "tau": tuple(&rep.full_tau()),
            "verdict": name,
            "size": size,
            "reason": gv.reason,
        });
        let mut ok = true;
        if check {
            let bound = r.bound.unwrap_or(DEFAULT_ORBIT_BOUND);
            let o = orbit_of_rep(&rep, bound)?;
            let agrees = verdict_agrees(&gv.verdict, &o, bound);
            ok = agrees != Some(false);
            v["bfs_size"] = json!(o.size);
            v["exceeded_bound"] = json!(o.exceeded_bound);
            v["agrees"] = json!(agrees);
        }
        let mut report = Report::new(v);
        report.ok = ok;
        return Ok(report);
    };
    let fixed = r.lambda.as_ref().map(|_| linear(&r)).transpose()?;
    let n = match (&fixed, r.n) {
        (Some(l), _) => l.n(),
        (None, Some(n)) if n >= 3 => n,
        _ => bail!("--samples needs --lambda or --n (at least 3)"),
    };
    let bound = r.bound.unwrap_or(5_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Table::new(&["sample", "lambda", "tau", "verdict", "bfs_size", "agrees"]);
    let mut jrows = Vec::new();
    let mut ok = true;
    for i in 0..count {
        let lin = match &fixed {
            Some(l) => l.clone(),
            None => random_linear_part(&mut rng, n)?,
        };
        let tau: Vec<Cyclotomic> = (0..n - 1).map(|_| Cyclotomic::from_int(rng.gen_range(-3..=3))).collect();
        let rep = AffineRep::new(lin.clone(), tau)?;
        let gv = gate_rep(&rep)?;
        let (name, size) = verdict_parts(&gv.verdict);
        let o = orbit_of_rep(&rep, bound)?;
        let agrees = verdict_agrees(&gv.verdict, &o, bound);
        ok &= agrees != Some(false);
        let bfs = if o.exceeded_bound { format!(">{}", bound) } else { o.size.to_string() };
        let verdict = size.map_or(name.to_string(), |s| format!("{}({})", name, s));
        let agrees_s = agrees.map_or("n/a".to_string(), |a| a.to_string());
        t.rows.push(vec![i.to_string(), lin.render(), tuple(&rep.full_tau()), verdict.clone(), bfs.clone(), agrees_s]);
        jrows.push(json!({
            "lambda": lin.render(),
            "tau": tuple(&rep.full_tau()),
            "verdict": verdict,
            "reason": gv.reason,
            "bfs_size": bfs,
            "agrees": agrees,
        }));
    }
    let mut report = Report::new(json!({"seed": seed, "bound": bound, "samples": jrows, "all_agree": ok}));
    report.table = Some(t);
    report.ok = ok;
    Ok(report)
}

pub fn group(which: &str) -> Result<Report> {
    let which = parse::which(which)?;
    let g = ReflGroup::standard(which)?;
    let hyper = g.hyperplanes();
    let proper = g.proper_planes()?;
    let hyper_ok = same_subspaces(&hyper, &displayed_hyperplanes(which), 3);
    let proper_ok = match which {
        Which::G25 => Some(same_subspaces(&proper, &displayed_hessian_proper_planes(), 6)),
        Which::G32 => None,
    };
    let order_ok = g.order() as u64 == g.degree_product();
    let mut report = Report::new(json!({
        "order": g.order(),
        "reflections": g.reflections().len(),
        "hyperplanes": hyper.len(),
        "center": g.center_order(),
        "degrees": which.degrees(),
        "codegrees": which.codegrees(),
        "degree_product": g.degree_product(),
        "proper_planes": proper.len(),
        "hyperplanes_match_displayed": hyper_ok,
        "proper_planes_match_displayed": proper_ok,
        "transitive_on_hyperplanes": g.transitive_on_hyperplanes(),
    }));
    report.ok = order_ok && hyper_ok && proper_ok != Some(false);
    Ok(report)
}

pub fn strata(which: &str, point: Option<&str>) -> Result<Report> {
    let which = parse::which(which)?;
    let Some(point) = point else {
        let (t, ok) = tbl::strata_table(which)?;
        let mut report = Report::new(t.to_json());
        report.table = Some(t);
        report.ok = ok;
        return Ok(report);
    };
    let v = parse::cyclo_list(point)?;
    let s = Stratifier::new(ReflGroup::standard(which)?)?;
    let label = s.stratify(&v)?;
    Ok(Report::new(json!({
        "group": which.name(),
        "point": tuple(&v),
        "orbit_size": label.orbit_size,
        "reflection_hyperplanes": label.reflection_hyperplanes,
        "proper_planes": label.proper_planes,
        "special": label.special,
        "row": label.row.map(|r| json!({
            "order": r.order,
            "number": r.number,
            "reflection": r.reflection,
            "proper": r.proper,
        })),
    })))
}

pub fn lattice(which: &str) -> Result<Report> {
    let which = parse::which(which)?;
    let g = ReflGroup::standard(which)?;
    let c = lattice_census(&g.hyperplanes());
    let (planes, lines): (&[(usize, usize)], &[(usize, usize)]) = match which {
        Which::G25 => (&[(2, 12), (4, 9)], &[]),
        Which::G32 => (&[(2, 240), (4, 90)], &[(5, 360), (12, 40)]),
    };
    let same = |got: &std::collections::BTreeMap<usize, usize>, want: &[(usize, usize)]| {
        got.len() == want.len() && want.iter().all(|(k, n)| got.get(k) == Some(n))
    };
    let ok = same(&c.planes, planes) && same(&c.lines, lines);
    let as_map = |m: &std::collections::BTreeMap<usize, usize>| -> Map<String, Value> {
        m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()
    };
    let mut report = Report::new(json!({
        "group": which.name(),
        "hyperplanes": c.hyperplanes,
        "codim2_by_hyperplane_count": as_map(&c.planes),
        "codim3_by_hyperplane_count": as_map(&c.lines),
        "status": status(ok),
    }));
    report.ok = ok;
    Ok(report)
}

pub fn coalesce(r: RepArgs, k: Option<usize>, l: Option<usize>, word: Option<&str>) -> Result<Report> {
    let lin = linear(&r)?;
    let rep = affine(&r, &lin)?;
    let (Some(k), Some(l)) = (k, l) else { bail!("--k and --l are required") };
    let spec = CoalesceSpec::new(lin.n(), k, l)?;
    let out = r_kl(&rep, &spec)?;
    let class = normalize_rotated(&out).map(|(c, _)| c.render()).ok();
    let mut v = json!({
        "n": lin.n(),
        "k": k,
        "l": l,
        "input": {"lambda": lin.render(), "tau": tuple(&rep.full_tau())},
        "output": {"lambda": out.linear().render(), "tau": tuple(&out.full_tau()), "class": class},
    });
    let mut ok = true;
    if let Some(w) = word {
        let b = parse_pure(w, k)?;
        ok = equivariance_check(&rep, &spec, &b)?;
        v["word"] = json!(w);
        v["equivariant"] = json!(ok);
    }
    let mut report = Report::new(v);
    report.ok = ok;
    Ok(report)
}

pub struct MonodromyArgs {
    pub rank: usize,
    pub poles: Option<String>,
    pub theta: Option<String>,
    pub minus: bool,
    pub base: String,
    pub tol: f64,
    pub bound: Option<usize>,
    pub long_running: bool,
}

fn pair(c: Complex64) -> Value {
    json!([c.re, c.im])
}

pub fn monodromy(a: MonodromyArgs) -> Result<Report> {
    let (default_poles, expected): (&[f64], Option<usize>) = match a.rank {
        3 => (&[-1.0, 0.0, 1.0], Some(648)),
        4 => (&[-2.0, -1.0, 0.0, 1.0], Some(155_520)),
        r => bail!("--rank must be 3 or 4, got {}", r),
    };
    if a.rank == 4 && !a.long_running {
        bail!("the rank-4 closure enumerates 155520 matrices; pass --long-running to run it");
    }
    let sign = if a.minus { -1 } else { 1 };
    let (theta, expected) = match &a.theta {
        Some(t) => (parse::rational_list(t)?, None),
        None => (vec![Rational::new(1, 6); a.rank + 1], expected),
    };
    let theta: Vec<Rational> = theta.iter().map(|t| t * &Rational::from_int(sign)).collect();
    let spec = ConnectionSpec::new(theta)?;
    let residues = restricted_residues(&spec)?;
    if residues[0].rows() != a.rank {
        bail!("{} exponents give rank {}, not {}", spec.theta.len(), residues[0].rows(), a.rank);
    }
    let poles = match &a.poles {
        Some(p) => parse::float_list(p)?,
        None => default_poles.to_vec(),
    };
    if poles.len() != residues.len() {
        bail!("need {} poles, got {}", residues.len(), poles.len());
    }
    let base = parse::complex(&a.base)?;
    // dZ + Σ A_p dx/(x−p) Z = 0
    let data: Vec<(Complex64, CMat)> =
        residues.iter().zip(&poles).map(|(m, p)| (Complex64::new(*p, 0.0), -to_numeric(m))).collect();
    let loops = monodromy_numeric(&data, base, &LoopOptions::default())?;
    let mut local_ok = true;
    let mut gens = Vec::new();
    for l in &loops {
        let idx = data.iter().position(|(p, _)| *p == l.pole).expect("loop around a given pole");
        let t = residues[idx].trace().to_complex();
        let mut want = vec![Complex64::new(1.0, 0.0); a.rank];
        want[0] = (Complex64::new(0.0, -2.0 * std::f64::consts::PI) * t).exp();
        let ev = eigenvalues(&l.matrix);
        local_ok &= same_spectrum(&ev, &want, 1e-8);
        let rows: Vec<Value> =
            (0..a.rank).map(|i| Value::Array((0..a.rank).map(|j| pair(l.matrix[(i, j)])).collect())).collect();
        gens.push(json!({
            "pole": pair(l.pole),
            "matrix": rows,
            "eigenvalues": ev.iter().map(|e| pair(*e)).collect::<Vec<_>>(),
        }));
    }
    let mats: Vec<CMat> = loops.iter().map(|l| l.matrix.clone()).collect();
    let bound = a.bound.unwrap_or(expected.map_or(200_000, |e| e + 1));
    let closure = numeric_closure(&mats, a.tol, bound);
    let (size, closure_ok) = match (&closure, expected) {
        (Ok(s), Some(e)) => (json!(s), *s == e),
        (Ok(s), None) => (json!(s), true),
        (Err(e), _) => (json!(e.to_string()), false),
    };
    let mut report = Report::new(json!({
        "rank": a.rank,
        "theta": spec.theta.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "base": pair(base),
        "generators": gens,
        "local_eigenvalues_ok": local_ok,
        "closure_size": size,
        "expected_order": expected,
        "status": status(local_ok && closure_ok),
    }));
    report.ok = local_ok && closure_ok;
    Ok(report)
}

pub fn tables(which: &str, out: Option<&Path>, bound: usize) -> Result<Report> {
    let names: Vec<&str> = if which == "all" { tbl::TABLE_NAMES.to_vec() } else { vec![which] };
    let mut all = Table::new(&tbl::COLUMNS);
    let mut ok = true;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    for name in names {
        let (t, pass) = tbl::build(name, bound)?;
        if let Some(dir) = out {
            let path = dir.join(format!("{}.csv", name));
            std::fs::write(&path, t.to_csv()?).with_context(|| format!("writing {}", path.display()))?;
        }
        ok &= pass;
        all.rows.extend(t.rows);
    }
    let mut report = Report::new(all.to_json());
    report.table = Some(all);
    report.ok = ok;
    Ok(report)
}

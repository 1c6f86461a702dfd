//! Finiteness decisions: the four-puncture trace classification and the general gate.

use crate::braid::BraidWord;
use crate::charvar::{
    action_matrix_reduced, normalize, normalize_rotated, orbit, reduced_generators, stabilizer_of_class_in_group, AffineRep,
    LinearPart, OrbitResult, ProjClass,
};
use crate::cyclo::{z, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::{group_closure, normalize_line, parallel, promote_vec, vec_key, Mat, Vector};
use crate::tables::{self, TableCase};
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum N4Tag {
    Reducible,
    IrreducibleImprimitiveFinite(u64),
    IrreducibleImprimitiveInfinite,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    ZariskiDense,
}

impl N4Tag {
    pub fn name(&self) -> String {
        match self {
            N4Tag::Reducible => "Reducible".into(),
            N4Tag::IrreducibleImprimitiveFinite(m) => format!("IrreducibleImprimitiveFinite({})", m),
            N4Tag::IrreducibleImprimitiveInfinite => "IrreducibleImprimitiveInfinite".into(),
            N4Tag::Tetrahedral => "Tetrahedral".into(),
            N4Tag::Octahedral => "Octahedral".into(),
            N4Tag::Icosahedral => "Icosahedral".into(),
            N4Tag::ZariskiDense => "ZariskiDense".into(),
        }
    }

    /// Whether the projective monodromy group is finite and irreducible.
    pub fn is_finite_irreducible(&self) -> bool {
        matches!(self, N4Tag::IrreducibleImprimitiveFinite(_) | N4Tag::Tetrahedral | N4Tag::Octahedral | N4Tag::Icosahedral)
    }
}

impl fmt::Display for N4Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Debug)]
pub struct N4Class {
    pub tag: N4Tag,
    pub p: Cyclotomic,
    pub traces: [Cyclotomic; 3],
    pub t_squared: [Cyclotomic; 3],
}

fn require_n4(lin: &LinearPart) -> Result<()> {
    if lin.n() != 4 {
        return Err(Error::InvalidLinearPart(format!("expected 4 punctures, got {}", lin.n())));
    }
    Ok(())
}

/// `SL_2` lifts `(A_1, A_3)` of the generators on `(τ_2, τ_3)`, scaled by the chosen square roots.
pub fn sl2_lifts(lin: &LinearPart) -> Result<(Mat, Mat)> {
    require_n4(lin)?;
    if lin.get(1).is_one() {
        return Err(Error::LinearPartFirstTrivial);
    }
    let s: Vec<Cyclotomic> = (1..=3).map(|i| lin.get(i).sqrt_of_root()).collect::<Result<_>>()?;
    let a3 = action_matrix_reduced(lin, 1, 2)?.scale(&(&s[0] * &s[1]).inv());
    let a1 = action_matrix_reduced(lin, 2, 3)?.scale(&(&s[1] * &s[2]).inv());
    Ok((a1, a3))
}

/// Traces `(t_1, t_2, t_3)` of `A_1`, `A_2 = A_1A_3`, `A_3`.
pub fn traces(lin: &LinearPart) -> Result<[Cyclotomic; 3]> {
    let (a1, a3) = sl2_lifts(lin)?;
    let a2 = &a1 * &a3;
    Ok([a1.trace(), a2.trace(), a3.trace()])
}

fn p_from_traces(t: &[Cyclotomic; 3]) -> Cyclotomic {
    let sq = t.iter().fold(Cyclotomic::zero(), |acc, x| &acc + &(x * x));
    &sq - &(&(&t[0] * &t[1]) * &t[2])
}

/// `4 + ∏(1 − λ_i)`.
pub fn p_closed_form(lin: &LinearPart) -> Cyclotomic {
    let one = Cyclotomic::one();
    let prod = lin.values().iter().fold(one.clone(), |acc, l| &acc * &(&one - l));
    &Cyclotomic::from_int(4) + &prod
}

/// `P(λ) = t_1² + t_2² + t_3² − t_1t_2t_3`, cross-checked against the closed form.
pub fn p_value(lin: &LinearPart) -> Result<Cyclotomic> {
    require_n4(lin)?;
    if lin.get(1).is_one() {
        // the trace form needs λ_1 ≠ 1; the closed form is rotation invariant
        return Ok(p_closed_form(lin));
    }
    let t = traces(lin)?;
    let p = p_from_traces(&t);
    assert_eq!(p, p_closed_form(lin), "trace identity failed for {}", lin.render());
    Ok(p)
}

struct IcosaConstants {
    t2: Vec<Cyclotomic>,
    p: Vec<Cyclotomic>,
}

fn icosa_constants() -> IcosaConstants {
    let c = Cyclotomic::from_int;
    let zz = &z(5, 1) + &z(5, 4);
    let mu1 = &c(1) + &zz;
    let mu2 = zz.clone();
    IcosaConstants { t2: vec![c(0), c(1), &mu1 * &mu1, &mu2 * &mu2], p: vec![&c(2) - &mu2, c(3), &c(2) + &mu1] }
}

pub fn classify_n4(lin: &LinearPart) -> Result<N4Class> {
    require_n4(lin)?;
    if lin.iota() < 4 {
        let p = p_closed_form(lin);
        let zero = Cyclotomic::zero();
        return Ok(N4Class {
            tag: N4Tag::Reducible,
            p,
            traces: [zero.clone(), zero.clone(), zero.clone()],
            t_squared: [zero.clone(), zero.clone(), zero],
        });
    }
    let t = traces(lin)?;
    let p = p_value(lin)?;
    let t2 = [&t[0] * &t[0], &t[1] * &t[1], &t[2] * &t[2]];
    let c = Cyclotomic::from_int;
    let all_in = |set: &[Cyclotomic]| t2.iter().all(|x| set.contains(x));
    let zeros = t.iter().filter(|x| x.is_zero()).count();
    let tag = if zeros >= 2 {
        if zeros == 3 {
            N4Tag::IrreducibleImprimitiveFinite(2)
        } else {
            // t_i pairs λ_j, λ_k with {i,j,k} = {1,2,3}
            let i = t.iter().position(|x| !x.is_zero()).unwrap() + 1;
            let (j, k) = match i {
                1 => (2, 3),
                2 => (1, 3),
                _ => (1, 2),
            };
            match (lin.get(j) * lin.get(k)).order_of_root() {
                Some(m) => N4Tag::IrreducibleImprimitiveFinite(m),
                None => N4Tag::IrreducibleImprimitiveInfinite,
            }
        }
    } else if p == c(2) && all_in(&[c(0), c(1)]) {
        N4Tag::Tetrahedral
    } else if p == c(3) && all_in(&[c(0), c(1), c(2)]) {
        N4Tag::Octahedral
    } else {
        let k = icosa_constants();
        if k.p.contains(&p) && all_in(&k.t2) {
            N4Tag::Icosahedral
        } else {
            N4Tag::ZariskiDense
        }
    };
    Ok(N4Class { tag, p, traces: t, t_squared: t2 })
}

/// The finite group `⟨A_1, A_3⟩ ⊂ SL_2` for a finite irreducible case.
pub fn sl2_group(lin: &LinearPart) -> Result<Vec<Mat>> {
    let (a1, a3) = sl2_lifts(lin)?;
    group_closure(&[a1, a3], 1000).map_err(|_| Error::NotFiniteCase)
}

fn scalar_count(group: &[Mat]) -> usize {
    group.iter().filter(|g| g.scalar_value().is_some()).count()
}

/// Orbit size of a line under a finite linear group, by stabilizer counting.
pub fn orbit_size_by_stabilizer(coords: &[Cyclotomic], group: &[Mat]) -> u64 {
    (group.len() / stabilizer_of_class_in_group(coords, group)) as u64
}

#[derive(Clone, Debug)]
pub struct PredictedRow {
    /// `(τ_1, …, τ_n)`.
    pub tau: Vec<Cyclotomic>,
    pub size: u64,
    pub generic: bool,
    pub literal: bool,
}

fn tau_from_section(lin: &LinearPart, coords: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    let mut t = vec![Cyclotomic::zero()];
    t.extend_from_slice(coords);
    Ok(AffineRep::new(lin.clone(), t)?.full_tau())
}

/// The literal table case whose linear part equals `lin`, if any.
pub fn literal_case(lin: &LinearPart) -> Option<TableCase> {
    if lin.n() != 4 {
        return None;
    }
    let v = lin.values();
    for case in tables::platonic_cases() {
        if case.lambda.as_slice() == v {
            return Some(case);
        }
    }
    let one = Cyclotomic::one();
    let a = &v[0];
    if !a.is_one() && &v[3] == a && v[1] == v[2] && v[1] == -&a.inv() && !(a * a).is_one() && a.order_of_root().is_some() {
        return Some(tables::imprimitive_case("imprimitive", a));
    }
    if v[0].is_one() && v[1].is_one() && !v[2].is_one() && v[2].order_of_root().is_some() {
        return Some(tables::reducible_pair_case("reducible-pair", &v[2]));
    }
    if v[0] == one && v[1..].iter().all(|x| !x.is_one()) {
        return Some(tables::reducible_triple_case("reducible-triple", &v[1], &v[2]));
    }
    None
}

fn generic_point(group: &[Mat]) -> Vector {
    let c = Cyclotomic::from_int;
    let scalars = scalar_count(group);
    for k in 2.. {
        let v = vec![c(1), c(k)];
        if stabilizer_of_class_in_group(&v, group) == scalars {
            return v;
        }
    }
    unreachable!()
}

/// Special-orbit representatives with predicted sizes, plus one generic point.
pub fn table_rows(lin: &LinearPart) -> Result<Vec<PredictedRow>> {
    require_n4(lin)?;
    if lin.iota() < 4 {
        return reducible_rows(lin);
    }
    let cls = classify_n4(lin)?;
    if !cls.tag.is_finite_irreducible() {
        return Err(Error::NotFiniteCase);
    }
    let group = sl2_group(lin)?;
    let gen = generic_point(&group);
    let generic_row = PredictedRow {
        tau: tau_from_section(lin, &gen)?,
        size: orbit_size_by_stabilizer(&gen, &group),
        generic: true,
        literal: false,
    };
    if let Some(case) = literal_case(lin) {
        let mut rows: Vec<PredictedRow> = case
            .rows
            .iter()
            .filter_map(|r| r.tau.as_ref().map(|t| PredictedRow { tau: t.clone(), size: r.size, generic: false, literal: true }))
            .collect();
        rows.push(generic_row);
        return Ok(rows);
    }
    let mut rows = special_points(lin, &group)?;
    rows.sort_by_key(|r| r.size);
    rows.push(generic_row);
    Ok(rows)
}

/// Fixed points of the non-central elements, one per orbit.
fn special_points(lin: &LinearPart, group: &[Mat]) -> Result<Vec<PredictedRow>> {
    let exponent = group.iter().map(|g| g.order(240).expect("finite group")).fold(1u64, num_integer::lcm);
    let cond = num_integer::lcm(crate::cyclo::common_conductor(group.iter().flat_map(|g| g.entries())), exponent as u32);
    let group: Vec<Mat> = group.iter().map(|g| g.promoted(cond)).collect();
    let mut seen: HashSet<Vec<crate::rational::Rational>> = HashSet::new();
    let mut rows = Vec::new();
    for g in &group {
        if g.scalar_value().is_some() {
            continue;
        }
        let k = g.order(240).expect("finite group");
        for ev in g.root_of_unity_eigenvalues(k) {
            for v in g.eigenspace(&ev.promote(cond)) {
                let v = normalize_line(&promote_vec(&v, cond)).expect("eigenvector is nonzero");
                if seen.contains(&vec_key(&v)) {
                    continue;
                }
                for h in &group {
                    let w = normalize_line(&h.mul_vec(&v)).expect("invertible");
                    seen.insert(vec_key(&w));
                }
                rows.push(PredictedRow {
                    tau: tau_from_section(lin, &v)?,
                    size: orbit_size_by_stabilizer(&v, &group),
                    generic: false,
                    literal: false,
                });
            }
        }
    }
    Ok(rows)
}

fn reducible_rows(lin: &LinearPart) -> Result<Vec<PredictedRow>> {
    let c = Cyclotomic::from_int;
    if lin.iota() == 0 {
        return Ok(vec![PredictedRow { tau: vec![c(0), c(1), c(0), c(-1)], size: 1, generic: true, literal: true }]);
    }
    let Some(case) = literal_case(lin) else {
        return Err(Error::NotFiniteCase);
    };
    let mut rows: Vec<PredictedRow> = case
        .rows
        .iter()
        .filter_map(|r| r.tau.as_ref().map(|t| PredictedRow { tau: t.clone(), size: r.size, generic: false, literal: true }))
        .collect();
    if let Some(other) = case.rows.iter().find(|r| r.tau.is_none()) {
        // τ_1 ≠ 0 keeps the point off the fixed classes
        let rep = AffineRep::new(lin.clone(), vec![c(1), c(2), c(3)])?;
        rows.push(PredictedRow { tau: rep.full_tau(), size: other.size, generic: true, literal: false });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    FiniteWithSize(u64),
    FiniteBoundedBy(u64),
    Infinite,
    ZeroClassFixedPoint,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateVerdict {
    pub verdict: Verdict,
    pub reason: String,
}

fn verdict(v: Verdict, reason: impl Into<String>) -> GateVerdict {
    GateVerdict { verdict: v, reason: reason.into() }
}

/// Apply `σ_i` (Hurwitz) to a representation; this swaps λ_i and λ_{i+1}.
fn swap_punctures(rep: &AffineRep, i: usize) -> Result<AffineRep> {
    rep.act(&BraidWord::sigma(rep.n(), i)?)
}

/// Move the two nontrivial punctures to positions 1 and n with full braids.
fn two_puncture_normal_form(rep: &AffineRep) -> Result<AffineRep> {
    let n = rep.n();
    let pos: Vec<usize> = (1..=n).filter(|&i| !rep.linear().get(i).is_one()).collect();
    let (p, q) = (pos[0], pos[1]);
    let mut r = rep.clone();
    for i in (1..p).rev() {
        r = swap_punctures(&r, i)?;
    }
    for i in q..n {
        r = swap_punctures(&r, i)?;
    }
    Ok(r)
}

fn is_sixth_primitive(x: &Cyclotomic) -> bool {
    x.order_of_root() == Some(6)
}

/// `(ζ,ζ,ζ,ζ,ζ²)` up to permutation with ζ a primitive sixth root of unity.
pub fn is_hessian_linear_part(lin: &LinearPart) -> bool {
    if lin.n() != 5 {
        return false;
    }
    let v = lin.values();
    v.iter().any(|zeta| {
        is_sixth_primitive(zeta)
            && v.iter().filter(|x| *x == zeta).count() == 4
            && v.iter().filter(|x| **x == zeta * zeta).count() == 1
    })
}

/// `(ζ,…,ζ)` on six punctures with ζ a primitive sixth root of unity.
pub fn is_witting_linear_part(lin: &LinearPart) -> bool {
    lin.n() == 6 && is_sixth_primitive(lin.get(1)) && lin.values().iter().all(|x| x == lin.get(1))
}

pub const HESSIAN_GROUP_BOUND: usize = 4000;
pub const WITTING_ORBIT_BOUND: u64 = 25_920;

/// Decide whether the class of `rep` has a finite orbit under the pure braid group.
pub fn gate(rep: &AffineRep) -> Result<GateVerdict> {
    let lin = rep.linear();
    let n = lin.n();
    let iota = lin.iota();
    if iota == 0 {
        return Ok(verdict(Verdict::FiniteWithSize(1), "trivial linear part: the action is trivial"));
    }
    let (class, _) = normalize_rotated(rep)?;
    if class.is_zero_class() {
        return Ok(verdict(Verdict::ZeroClassFixedPoint, "abelian class [0] is fixed"));
    }
    if n == 3 {
        return Ok(verdict(Verdict::FiniteWithSize(1), "three punctures: the projective space is a point"));
    }
    if iota == 2 {
        let r = two_puncture_normal_form(rep)?;
        let a = r.linear().get(1).clone();
        let cls = normalize(&r)?;
        let k = cls.coords().iter().filter(|x| !x.is_zero()).count() as u32;
        if k == 1 {
            return Ok(verdict(Verdict::FiniteWithSize(1), "two nontrivial punctures, one nonzero coordinate: fixed point"));
        }
        return Ok(match a.order_of_root() {
            Some(w) => verdict(
                Verdict::FiniteWithSize(w.pow(k - 1)),
                format!("two nontrivial punctures: size ord(a)^(k-1) with ord(a)={}, k={}", w, k),
            ),
            None => verdict(Verdict::Infinite, "two nontrivial punctures and a is not a root of unity"),
        });
    }
    if iota < n {
        let full = rep.full_tau();
        let moving = (0..n).any(|i| lin.values()[i].is_one() && !full[i].is_zero());
        if moving {
            return Ok(verdict(Verdict::Infinite, "a puncture with trivial linear part carries a nonzero translation"));
        }
        if iota == 3 {
            return Ok(verdict(
                Verdict::FiniteWithSize(1),
                "three nontrivial punctures: the unique finite orbit is a fixed point",
            ));
        }
        let keep: Vec<usize> = (0..n).filter(|&i| !lin.values()[i].is_one()).collect();
        let sub_lin = LinearPart::new(keep.iter().map(|&i| lin.values()[i].clone()).collect())?;
        let sub = AffineRep::from_full(sub_lin, keep.iter().map(|&i| full[i].clone()).collect())?;
        let mut v = gate(&sub)?;
        v.reason = format!("trivial punctures removed; {}", v.reason);
        return Ok(v);
    }
    if !lin.all_roots_of_unity() {
        return Ok(verdict(Verdict::Undetermined, "linear part is not made of roots of unity"));
    }
    match n {
        4 => {
            let cls = classify_n4(lin)?;
            if cls.tag.is_finite_irreducible() {
                let group = sl2_group(lin)?;
                let s = orbit_size_by_stabilizer(class.coords(), &group);
                return Ok(verdict(Verdict::FiniteWithSize(s), format!("four punctures, {} group", cls.tag)));
            }
            Ok(verdict(Verdict::Infinite, format!("four punctures, {} group", cls.tag)))
        }
        5 => {
            if !is_hessian_linear_part(lin) {
                return Ok(verdict(Verdict::Infinite, "five punctures: linear part is not (z,z,z,z,z^2), z of order 6"));
            }
            let gens: Vec<Mat> = reduced_generators(lin)?.into_iter().map(|(_, m)| m).collect();
            let group = group_closure(&gens, HESSIAN_GROUP_BOUND)?;
            let s = orbit_size_by_stabilizer(class.coords(), &group);
            Ok(verdict(Verdict::FiniteWithSize(s), format!("five punctures, reflection group of order {}", group.len())))
        }
        6 => {
            if !is_witting_linear_part(lin) {
                return Ok(verdict(Verdict::Infinite, "six punctures: linear part is not (z,...,z), z of order 6"));
            }
            let res = orbit(&class, lin, WITTING_ORBIT_BOUND as usize)?;
            if res.exceeded_bound {
                return Ok(verdict(Verdict::FiniteBoundedBy(WITTING_ORBIT_BOUND), "six punctures, finite reflection group"));
            }
            Ok(verdict(Verdict::FiniteWithSize(res.size as u64), "six punctures, finite reflection group"))
        }
        _ => Ok(verdict(Verdict::Infinite, "at least seven punctures, all nontrivial: every orbit is infinite")),
    }
}

/// Whether a class lies on a line through an eigenvector of some matrix (used for checks).
pub fn is_eigenline(m: &Mat, coords: &[Cyclotomic]) -> bool {
    parallel(&m.mul_vec(coords), coords)
}

/// Convenience for callers holding a class rather than a representation.
pub fn rep_from_class(lin: &LinearPart, class: &ProjClass) -> Result<AffineRep> {
    let mut t = vec![Cyclotomic::zero()];
    if class.is_zero_class() {
        return AffineRep::new(lin.clone(), lin.delta());
    }
    t.extend_from_slice(class.coords());
    AffineRep::new(lin.clone(), t)
}

/// Whether a BFS result agrees with a verdict. `None` when the verdict predicts nothing
/// or predicts a size beyond the BFS bound.
pub fn verdict_agrees(v: &Verdict, o: &OrbitResult, bound: usize) -> Option<bool> {
    match v {
        Verdict::FiniteWithSize(s) => (*s as usize <= bound).then(|| !o.exceeded_bound && o.size as u64 == *s),
        Verdict::FiniteBoundedBy(b) => (*b as usize <= bound).then(|| !o.exceeded_bound && o.size as u64 <= *b),
        Verdict::Infinite => Some(o.exceeded_bound),
        Verdict::ZeroClassFixedPoint => Some(!o.exceeded_bound && o.size == 1),
        Verdict::Undetermined => None,
    }
}

/// `gate` for a linear part and a normalized class.
pub fn gate_class(lin: &LinearPart, class: &ProjClass) -> Result<GateVerdict> {
    gate(&rep_from_class(lin, class)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(v: &[Cyclotomic]) -> LinearPart {
        LinearPart::new(v.to_vec()).unwrap()
    }

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(k)
    }

    #[test]
    fn p_values() {
        assert_eq!(p_value(&lam(&[c(1), c(1), c(1), c(1)])).unwrap(), c(4));
        let e = |k| z(12, k);
        assert_eq!(p_value(&lam(&[e(1), e(5), e(3), e(3)])).unwrap(), c(2));
        let e = |k| z(24, k);
        assert_eq!(p_value(&lam(&[e(1), e(5), e(7), e(11)])).unwrap(), c(3));
    }

    #[test]
    fn classification_examples() {
        let a = z(5, 1);
        assert_eq!(classify_n4(&lam(&[c(1), c(1), a.clone(), a.inv()])).unwrap().tag, N4Tag::Reducible);
        let lin = lam(&[a.clone(), -&a.inv(), -&a.inv(), a.clone()]);
        assert_eq!(classify_n4(&lin).unwrap().tag, N4Tag::IrreducibleImprimitiveFinite(5));
        let al = |k| z(60, k);
        assert_eq!(classify_n4(&lam(&[al(1), al(29), al(11), al(19)])).unwrap().tag, N4Tag::Icosahedral);
        let e = |k| z(12, k);
        assert_eq!(classify_n4(&lam(&[e(1), e(5), e(3), e(3)])).unwrap().tag, N4Tag::Tetrahedral);
        let g = |k| z(7, k);
        assert_eq!(classify_n4(&lam(&[g(1), g(1), g(2), g(3)])).unwrap().tag, N4Tag::ZariskiDense);
    }

    #[test]
    fn gate_examples() {
        let a = z(4, 1);
        let lin = lam(&[a.clone(), c(1), c(1), c(1), c(1), a.inv()]);
        let rep = AffineRep::new(lin, vec![c(0), c(1), c(2), c(0), c(3)]).unwrap();
        assert_eq!(gate(&rep).unwrap().verdict, Verdict::FiniteWithSize(16));

        let (a1, a2) = (z(7, 1), z(7, 2));
        let a3 = (&a1 * &a2).inv();
        let lin = lam(&[c(1), c(1), a1.clone(), a2.clone(), a3.clone()]);
        let rep = AffineRep::new(lin.clone(), vec![c(0), c(0), c(0), -&a2]).unwrap();
        assert_eq!(rep.tau_n(), c(1));
        assert_eq!(gate(&rep).unwrap().verdict, Verdict::FiniteWithSize(1));
        let rep = AffineRep::new(lin, vec![c(1), c(0), c(0), c(0)]).unwrap();
        assert_eq!(gate(&rep).unwrap().verdict, Verdict::Infinite);

        let g = z(11, 1);
        let mut l7: Vec<Cyclotomic> = (1..=6).map(|k| g.pow(k)).collect();
        let p = l7.iter().fold(c(1), |acc, x| &acc * x);
        l7.push(p.inv());
        let rep = AffineRep::new(lam(&l7), vec![c(0), c(1), c(0), c(0), c(0), c(0)]).unwrap();
        assert_eq!(gate(&rep).unwrap().verdict, Verdict::Infinite);
    }

    fn bfs_size(lin: &LinearPart, tau: &[Cyclotomic]) -> usize {
        let rep = AffineRep::new(lin.clone(), tau[..lin.n() - 1].to_vec()).unwrap();
        orbit(&normalize(&rep).unwrap(), lin, 2000).unwrap().size
    }

    #[test]
    fn computed_rows_match_bfs() {
        let mut cases: Vec<Vec<Cyclotomic>> = tables::platonic_cases().into_iter().map(|c| c.lambda).collect();
        // Galois conjugates fall outside the literal tables
        cases.extend(tables::platonic_cases().iter().map(|c| c.lambda.iter().map(|x| x.galois(7)).collect()));
        for v in cases {
            let lin = lam(&v);
            let group = sl2_group(&lin).unwrap();
            let rows = special_points(&lin, &group).unwrap();
            let mut sizes: Vec<u64> = rows.iter().map(|r| r.size).collect();
            sizes.sort();
            assert_eq!(sizes.len(), 3, "{}", lin.render());
            for r in &rows {
                assert_eq!(bfs_size(&lin, &r.tau) as u64, r.size);
            }
            for r in table_rows(&lin).unwrap() {
                assert_eq!(bfs_size(&lin, &r.tau) as u64, r.size);
            }
        }
    }

    #[test]
    fn gate_agrees_with_bfs_on_four_punctures() {
        for case in tables::platonic_cases() {
            let lin = lam(&case.lambda);
            for r in case.rows.iter().filter_map(|r| r.tau.as_ref().map(|t| (t, r.size))) {
                let rep = AffineRep::new(lin.clone(), r.0[..3].to_vec()).unwrap();
                assert_eq!(gate(&rep).unwrap().verdict, Verdict::FiniteWithSize(r.1), "{}", case.id);
            }
        }
    }
}

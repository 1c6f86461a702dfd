//! Residue matrices of the linearized Schlesinger and Lauricella systems, and numeric monodromy.

use crate::charvar::{action_matrix_reduced, LinearPart};
use crate::cyclo::{z, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rational::Rational;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::f64::consts::PI;

pub type CMat = DMatrix<Complex64>;

fn cr(r: &Rational) -> Cyclotomic {
    Cyclotomic::from_rational(r.clone())
}

/// `e^{−2πi t}` for rational `t`, exactly.
pub fn exp_minus_two_pi_i(t: &Rational) -> Result<Cyclotomic> {
    let (num, den) = (t.numer().to_i64(), t.denom().to_i64());
    match (num, den) {
        (Some(a), Some(b)) if b <= u32::MAX as i64 => Ok(z(b as u32, (-a).rem_euclid(b))),
        _ => Err(Error::DegenerateParameters(format!("exponent {} too large", t))),
    }
}

/// Residues `R^{i,j}` of `Σ R^{i,j} d(t_i−t_j)/(t_i−t_j)`, keyed by `(i, j)` with `i < j` (1-based).
///
/// Indices in `fixed` are constant points; pairs of two fixed points carry no form.
#[derive(Clone, Debug)]
pub struct ResidueFamily {
    pub dim: usize,
    pub points: usize,
    pub fixed: Vec<usize>,
    pub mats: BTreeMap<(usize, usize), Mat>,
}

impl ResidueFamily {
    pub fn get(&self, i: usize, j: usize) -> Option<&Mat> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.mats.get(&key)
    }

    fn pair_is_fixed(&self, i: usize, j: usize) -> bool {
        self.fixed.contains(&i) && self.fixed.contains(&j)
    }

    fn res(&self, i: usize, j: usize) -> Mat {
        self.get(i, j).cloned().unwrap_or_else(|| Mat::zeros(self.dim, self.dim))
    }
}

/// Exponents `θ_1,…,θ_{n−1}` of the rank-one connection on `n` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSpec {
    pub theta: Vec<Rational>,
}

impl ConnectionSpec {
    pub fn new(theta: Vec<Rational>) -> Result<Self> {
        if theta.len() < 3 {
            return Err(Error::DimensionMismatch(format!("need at least 3 exponents, got {}", theta.len())));
        }
        Ok(ConnectionSpec { theta })
    }

    pub fn n(&self) -> usize {
        self.theta.len() + 1
    }

    fn th(&self, i: usize) -> &Rational {
        &self.theta[i - 1]
    }

    /// `λ_j = e^{−2πiθ_j}` for `j < n`, and `λ_n` closing the product.
    pub fn linear_part(&self) -> Result<LinearPart> {
        let first: Vec<Cyclotomic> = self.theta.iter().map(exp_minus_two_pi_i).collect::<Result<_>>()?;
        LinearPart::from_first(first)
    }
}

fn b_entry_mat(spec: &ConnectionSpec, i: usize, j: usize, size: usize, shift: usize) -> Mat {
    let mut m = Mat::zeros(size, size);
    let (ti, tj) = (cr(spec.th(i)), cr(spec.th(j)));
    let (a, b) = (i - 1 - shift, j - 1 - shift);
    m.set(a, a, tj.clone());
    m.set(b, b, ti.clone());
    m.set(a, b, -&ti);
    m.set(b, a, -&tj);
    m
}

/// The `(n−1)×(n−1)` residues `B^{i,j}` of the linearized Schlesinger system.
pub fn residues_b(spec: &ConnectionSpec) -> ResidueFamily {
    let m = spec.n() - 1;
    let mut mats = BTreeMap::new();
    for i in 1..=m {
        for j in i + 1..=m {
            mats.insert((i, j), b_entry_mat(spec, i, j, m, 0));
        }
    }
    ResidueFamily { dim: m, points: m, fixed: vec![], mats }
}

/// The `(n−2)×(n−2)` residues `C^{i,j}` of the quotient by the line spanned by `θ`.
pub fn residues_c(spec: &ConnectionSpec) -> Result<ResidueFamily> {
    if spec.th(1).is_zero() {
        return Err(Error::ThetaOneZero);
    }
    let n = spec.n();
    let d = n - 2;
    let mut mats = BTreeMap::new();
    for j in 2..n {
        let mut m = Mat::zeros(d, d);
        for k in 1..=d {
            let v = if k == j - 1 { spec.th(k + 1) + spec.th(1) } else { spec.th(k + 1).clone() };
            m.set(k - 1, j - 2, cr(&v));
        }
        mats.insert((1, j), m);
    }
    for i in 2..n {
        for j in i + 1..n {
            mats.insert((i, j), b_entry_mat(spec, i, j, d, 1));
        }
    }
    Ok(ResidueFamily { dim: d, points: n - 1, fixed: vec![], mats })
}

/// The residue identities of a flat logarithmic connection on a braid arrangement.
///
/// For every triple `i<j<k` with at most one fixed point, each residue of the triple commutes
/// with the sum of the other two; residues of disjoint pairs commute.
pub fn flatness_check(f: &ResidueFamily) -> bool {
    let p = f.points;
    let comm = |a: &Mat, b: &Mat| (&(a * b)).sub(&(b * a)).is_zero();
    for i in 1..=p {
        for j in i + 1..=p {
            for k in j + 1..=p {
                if [i, j, k].iter().filter(|x| f.fixed.contains(x)).count() >= 2 {
                    continue;
                }
                let (ij, ik, jk) = (f.res(i, j), f.res(i, k), f.res(j, k));
                if !comm(&ij, &ik.add(&jk)) || !comm(&ik, &ij.add(&jk)) || !comm(&jk, &ij.add(&ik)) {
                    return false;
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> =
        (1..=p).flat_map(|i| (i + 1..=p).map(move |j| (i, j))).filter(|&(i, j)| !f.pair_is_fixed(i, j)).collect();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if i != k && i != l && j != k && j != l && !comm(&f.res(i, j), &f.res(k, l)) {
                return false;
            }
        }
    }
    true
}

/// Parameters `(α, β_1,…,β_N, γ)` of the Lauricella `F_D` system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LauricellaParams {
    pub alpha: Rational,
    pub beta: Vec<Rational>,
    pub gamma: Rational,
}

impl LauricellaParams {
    /// `β_i = −θ_i`, `α = −Σ_{i<n} θ_i`, `γ = 1 − Σ_{i<n−1} θ_i`, with `n = N + 3`.
    pub fn from_theta(spec: &ConnectionSpec) -> Result<Self> {
        if spec.n() < 4 {
            return Err(Error::DimensionMismatch("need N >= 1, i.e. at least 4 points".into()));
        }
        let nn = spec.n() - 3;
        let sum = |upto: usize| spec.theta[..upto].iter().fold(Rational::from_int(0), |acc, t| &acc + t);
        Ok(LauricellaParams {
            alpha: -sum(nn + 2),
            beta: spec.theta[..nn].iter().map(|t| -t).collect(),
            gamma: &Rational::from_int(1) - &sum(nn + 1),
        })
    }

    pub fn n_vars(&self) -> usize {
        self.beta.len()
    }

    fn b(&self, i: usize) -> &Rational {
        &self.beta[i - 1]
    }
}

/// The `(N+1)×(N+1)` residues `E^{i,j}`, `i ≤ N`, of the first-order form of the `F_D` system.
///
/// Points `N+1` and `N+2` are fixed.
pub fn lauricella_e(p: &LauricellaParams) -> ResidueFamily {
    let nn = p.n_vars();
    let d = nn + 1;
    let one = Rational::from_int(1);
    let beta_sum = p.beta.iter().fold(Rational::from_int(0), |acc, b| &acc + b);
    let mut mats = BTreeMap::new();
    for i in 1..=nn {
        for j in i + 1..=nn {
            let mut m = Mat::zeros(d, d);
            m.set(i, i, cr(&-p.b(j)));
            m.set(j, j, cr(&-p.b(i)));
            m.set(i, j, cr(p.b(i)));
            m.set(j, i, cr(p.b(j)));
            mats.insert((i, j), m);
        }
        let mut m = Mat::zeros(d, d);
        m.set(i, i, cr(&(&(&one - &p.gamma) + &(&beta_sum - p.b(i)))));
        m.set(0, i, Cyclotomic::one());
        for k in 2..=d {
            if k != i + 1 {
                m.set(k - 1, i, cr(&-p.b(k - 1)));
            }
        }
        mats.insert((i, nn + 1), m);
        let mut m = Mat::zeros(d, d);
        m.set(i, i, cr(&(&p.gamma - &(&(&p.alpha + p.b(i)) + &one))));
        m.set(i, 0, cr(&-(&p.alpha * p.b(i))));
        for l in 2..=d {
            if l != i + 1 {
                m.set(i, l - 1, cr(&-p.b(i)));
            }
        }
        mats.insert((i, nn + 2), m);
    }
    ResidueFamily { dim: d, points: nn + 2, fixed: vec![nn + 1, nn + 2], mats }
}

/// The constant matrix `G = K + L + M` carrying the `F_D` system to the quotient system.
pub fn g_matrix(spec: &ConnectionSpec) -> Result<Mat> {
    let p = LauricellaParams::from_theta(spec)?;
    let nn = p.n_vars();
    let d = nn + 1;
    let beta_sum = p.beta.iter().fold(Rational::from_int(0), |acc, b| &acc + b);
    let cond = &(&p.alpha * p.b(1)) * &(&(&p.gamma - &Rational::from_int(1)) - &beta_sum);
    if cond.is_zero() {
        return Err(Error::DegenerateParameters("alpha * beta_1 * (gamma - 1 - sum beta) vanishes".into()));
    }
    let th = |i: usize| spec.th(i).clone();
    let mut g = vec![vec![Rational::from_int(0); d]; d];
    for j in 0..d {
        g[0][j] = &g[0][j] + &th(nn + 1);
    }
    g[0][nn - 1] = &g[0][nn - 1] + &p.alpha;
    for i in 2..=d {
        g[i - 1][nn - 1] = &g[i - 1][nn - 1] + &(&p.alpha * &th(i - 1));
    }
    for j in 1..nn {
        g[j + 1][j - 1] = &g[j + 1][j - 1] - &(&p.alpha * &th(nn + 1));
    }
    Ok(Mat::from_rows(g.iter().map(|r| r.iter().map(cr).collect()).collect()))
}

/// `E^{i,j} G = G C^{i,j}` for every `i ≤ N`, `i < j ≤ N+2`.
pub fn conjugation_check(spec: &ConnectionSpec) -> Result<bool> {
    let g = g_matrix(spec)?;
    let e = lauricella_e(&LauricellaParams::from_theta(spec)?);
    let c = residues_c(spec)?;
    Ok(e.mats.iter().all(|(&(i, j), ei)| c.get(i, j).is_some_and(|ci| &(ei * &g) == &(&g * ci))))
}

/// `(−1)^N θ_1 (αθ_{N+1})^N`, the determinant of `G`.
pub fn det_g_formula(spec: &ConnectionSpec) -> Result<Rational> {
    let p = LauricellaParams::from_theta(spec)?;
    let nn = p.n_vars();
    let base = &p.alpha * spec.th(nn + 1);
    let mut out = spec.th(1).clone();
    for _ in 0..nn {
        out = &out * &base;
    }
    Ok(if nn % 2 == 1 { -out } else { out })
}

/// `exp(−2πi R)` for a residue of rank at most one with nonzero rational trace.
///
/// Then `R² = tr(R)·R`, so the exponential is `I + (e^{−2πi tr R} − 1)/tr R · R`.
pub fn exp_rank_one_residue(r: &Mat) -> Result<Mat> {
    if r.rank() > 1 {
        return Err(Error::DegenerateParameters("residue has rank > 1".into()));
    }
    let n = r.rows();
    if r.is_zero() {
        return Ok(Mat::identity(n));
    }
    let t = r.trace().as_rational().ok_or(Error::DegenerateParameters("residue trace is not rational".into()))?;
    if t.is_zero() {
        return Err(Error::DegenerateParameters("nilpotent residue: exponential is not cyclotomic".into()));
    }
    let coef = (&exp_minus_two_pi_i(&t)? - &Cyclotomic::one()).scale(&(&Rational::from_int(1) / &t));
    Ok(Mat::identity(n).add(&r.scale(&coef)))
}

/// Compare `exp(−2πi C^{j,k})` with the action of `σ_{j,k}²` on section coordinates.
///
/// Both must be the identity or a reflection with nontrivial eigenvalue `λ_jλ_k`, with equal traces.
pub fn local_monodromy_matches(spec: &ConnectionSpec, j: usize, k: usize) -> Result<bool> {
    let c = residues_c(spec)?;
    let r = c.get(j, k).ok_or(Error::Index(format!("no residue C^{{{},{}}}", j, k)))?;
    let e = exp_rank_one_residue(r)?;
    let lin = spec.linear_part()?;
    let a = action_matrix_reduced(&lin, j, k)?;
    let eig = lin.get(j) * lin.get(k);
    let dim = Cyclotomic::from_int(e.rows() as i64 - 1);
    let id = Mat::identity(e.rows());
    let trace_ok = e.trace() == &dim + &eig && a.trace() == e.trace();
    let rank_ok = e.sub(&id).rank() <= 1 && a.sub(&id).rank() <= 1;
    Ok(trace_ok && rank_ok)
}

/// Restriction of the quotient system to the line where only `t_1` moves: poles `t_j`, residues `C^{1,j}`.
pub fn restricted_residues(spec: &ConnectionSpec) -> Result<Vec<Mat>> {
    let c = residues_c(spec)?;
    Ok((2..spec.n()).map(|j| c.get(1, j).expect("C^{1,j} exists").clone()).collect())
}

pub fn to_numeric(m: &Mat) -> CMat {
    CMat::from_fn(m.rows(), m.cols(), |i, j| m.at(i, j).to_complex())
}

#[derive(Clone, Debug)]
pub struct LoopOptions {
    /// Circle radius as a fraction of the smallest distance between poles.
    pub radius_factor: f64,
    pub tol: f64,
    pub initial_step: f64,
    pub min_step: f64,
}

impl Default for LoopOptions {
    fn default() -> Self {
        LoopOptions { radius_factor: 0.5, tol: 1e-12, initial_step: 1e-2, min_step: 1e-12 }
    }
}

#[derive(Clone, Debug)]
pub struct LoopMonodromy {
    pub pole: Complex64,
    pub matrix: CMat,
}

enum Piece {
    Segment(Complex64, Complex64),
    Circle(Complex64, f64, f64),
}

impl Piece {
    fn point(&self, s: f64) -> (Complex64, Complex64) {
        match *self {
            Piece::Segment(a, b) => (a + (b - a) * s, b - a),
            Piece::Circle(c, r, phase) => {
                let e = Complex64::from_polar(r, phase + 2.0 * PI * s);
                (c + e, e * Complex64::new(0.0, 2.0 * PI))
            }
        }
    }
}

struct System<'a> {
    poles: &'a [(Complex64, CMat)],
}

impl System<'_> {
    fn rhs(&self, piece: &Piece, s: f64, zm: &CMat) -> CMat {
        let (x, dx) = piece.point(s);
        let dim = zm.nrows();
        let mut a = CMat::zeros(dim, dim);
        for (p, r) in self.poles {
            a += r * (dx / (x - p));
        }
        a * zm
    }

    fn rk4(&self, piece: &Piece, s: f64, zm: &CMat, h: f64) -> CMat {
        let k1 = self.rhs(piece, s, zm);
        let k2 = self.rhs(piece, s + h / 2.0, &(zm + &k1 * Complex64::from(h / 2.0)));
        let k3 = self.rhs(piece, s + h / 2.0, &(zm + &k2 * Complex64::from(h / 2.0)));
        let k4 = self.rhs(piece, s + h, &(zm + &k3 * Complex64::from(h)));
        zm + (k1 + k2 * Complex64::from(2.0) + k3 * Complex64::from(2.0) + k4) * Complex64::from(h / 6.0)
    }

    /// Transport `zm` along `piece` with step-doubling RK4.
    fn transport(&self, piece: &Piece, mut zm: CMat, opts: &LoopOptions) -> Result<CMat> {
        let mut s = 0.0;
        let mut h = opts.initial_step;
        while s < 1.0 {
            h = h.min(1.0 - s);
            let big = self.rk4(piece, s, &zm, h);
            let half = self.rk4(piece, s, &zm, h / 2.0);
            let small = self.rk4(piece, s + h / 2.0, &half, h / 2.0);
            let err = (&small - &big).iter().map(|x| x.norm()).fold(0.0, f64::max);
            if err <= opts.tol {
                zm = &small + (&small - &big) / Complex64::from(15.0);
                s += h;
            }
            let factor = if err == 0.0 { 2.0 } else { (0.9 * (opts.tol / err).powf(0.2)).clamp(0.2, 2.0) };
            h *= factor;
            if h < opts.min_step && s < 1.0 {
                return Err(Error::IntegrationFailure(format!("step underflow at s = {}", s)));
            }
        }
        Ok(zm)
    }
}

fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let d = b - a;
    let t = if d.norm_sqr() == 0.0 { 0.0 } else { (((p - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0) };
    (a + d * t - p).norm()
}

/// Monodromy of `dZ = Σ_p R_p/(x−p) dx · Z` along one standard loop per pole.
///
/// Each loop runs straight from `base` towards its pole, turns once counterclockwise on a small
/// circle, and comes back. Loops are returned sorted by the argument of `pole − base`.
pub fn monodromy_numeric(poles: &[(Complex64, CMat)], base: Complex64, opts: &LoopOptions) -> Result<Vec<LoopMonodromy>> {
    let dim = poles.first().map_or(0, |(_, r)| r.nrows());
    if poles.iter().any(|(_, r)| r.nrows() != dim || r.ncols() != dim) {
        return Err(Error::DimensionMismatch("residues of different sizes".into()));
    }
    let mut gap = f64::INFINITY;
    for (a, (p, _)) in poles.iter().enumerate() {
        for (q, _) in &poles[a + 1..] {
            gap = gap.min((p - q).norm());
        }
    }
    let radius = if gap.is_finite() { opts.radius_factor * gap } else { opts.radius_factor };
    let sys = System { poles };
    let mut order: Vec<usize> = (0..poles.len()).collect();
    order.sort_by(|&a, &b| (poles[a].0 - base).arg().total_cmp(&(poles[b].0 - base).arg()));
    let mut out = Vec::new();
    for &idx in &order {
        let p = poles[idx].0;
        let dist = (base - p).norm();
        if dist <= radius {
            return Err(Error::PoleTooClose);
        }
        let u = (base - p) / dist;
        let entry = p + u * radius;
        for (k, (q, _)) in poles.iter().enumerate() {
            if k != idx && segment_distance(base, entry, *q) < radius {
                return Err(Error::PoleTooClose);
            }
        }
        let pieces = [Piece::Segment(base, entry), Piece::Circle(p, radius, u.arg()), Piece::Segment(entry, base)];
        let mut zm = CMat::identity(dim, dim);
        for piece in &pieces {
            zm = sys.transport(piece, zm, opts)?;
        }
        out.push(LoopMonodromy { pole: p, matrix: zm });
    }
    Ok(out)
}

fn max_dist(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Size of the group generated by `mats`, matching products by max-entry distance below `tol`.
pub fn numeric_closure(mats: &[CMat], tol: f64, bound: usize) -> Result<usize> {
    let Some(first) = mats.first() else { return Ok(1) };
    let dim = first.nrows();
    let mut elems = vec![CMat::identity(dim, dim)];
    let mut frontier = 0;
    while frontier < elems.len() {
        let cur = elems[frontier].clone();
        frontier += 1;
        for g in mats {
            let cand = g * &cur;
            let near: Vec<f64> = elems.iter().map(|e| max_dist(e, &cand)).filter(|&d| d < 2.0 * tol).collect();
            if near.len() > 1 {
                return Err(Error::AmbiguousMatch);
            }
            if near.first().is_some_and(|&d| d < tol) {
                continue;
            }
            if !near.is_empty() {
                return Err(Error::AmbiguousMatch);
            }
            elems.push(cand);
            if elems.len() > bound {
                return Err(Error::BoundExceeded(bound));
            }
        }
    }
    Ok(elems.len())
}

/// Eigenvalues of a complex matrix, from its Schur form.
pub fn eigenvalues(m: &CMat) -> Vec<Complex64> {
    let t = m.clone().schur().unpack().1;
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Whether two multisets of complex numbers agree within `tol` (greedy matching).
pub fn same_spectrum(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let best = (0..b.len()).filter(|&k| !used[k]).min_by(|&i, &j| (b[i] - x).norm().total_cmp(&(b[j] - x).norm()));
        match best {
            Some(k) if (b[k] - x).norm() < tol => {
                used[k] = true;
                true
            }
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sixths(n: usize, sign: i64) -> ConnectionSpec {
        ConnectionSpec::new(vec![r(sign, 6); n - 1]).unwrap()
    }

    #[test]
    fn b_residue_shape() {
        let spec = ConnectionSpec::new(vec![r(1, 6), r(1, 5), r(2, 7), r(1, 3)]).unwrap();
        let b = residues_b(&spec);
        for (&(i, j), m) in &b.mats {
            assert_eq!(m.trace(), cr(&(spec.th(i) + spec.th(j))));
            assert_eq!(m.rank(), 1);
        }
        assert_eq!(*b.get(1, 2).unwrap().at(0, 0), cr(&r(1, 5)));
    }

    #[test]
    fn c_residues_match_displayed_connection() {
        let c = restricted_residues(&sixths(5, 1)).unwrap();
        let (a, b) = (r(1, 3), r(1, 6));
        let col = |k: usize| {
            let mut m = Mat::zeros(3, 3);
            for i in 0..3 {
                m.set(i, k, cr(if i == k { &a } else { &b }));
            }
            m
        };
        assert_eq!(c, vec![col(0), col(1), col(2)]);
        assert!(matches!(residues_c(&ConnectionSpec::new(vec![r(0, 1), r(1, 3), r(1, 5)]).unwrap()), Err(Error::ThetaOneZero)));
    }

    #[test]
    fn families_are_flat() {
        let spec = ConnectionSpec::new(vec![r(1, 6), r(1, 5), r(2, 7), r(1, 3), r(3, 11)]).unwrap();
        assert!(flatness_check(&residues_b(&spec)));
        assert!(flatness_check(&residues_c(&spec).unwrap()));
        assert!(flatness_check(&lauricella_e(&LauricellaParams::from_theta(&spec).unwrap())));
        let mut bad = residues_c(&spec).unwrap();
        let m = bad.mats.get_mut(&(1, 2)).unwrap();
        m.set(0, 1, Cyclotomic::from_int(1));
        assert!(!flatness_check(&bad));
    }

    #[test]
    fn lauricella_conjugation() {
        for theta in
            [vec![r(1, 6); 4], vec![r(1, 5), r(2, 7), r(1, 3), r(3, 11)], vec![r(1, 6), r(1, 5), r(2, 7), r(1, 3), r(3, 11)]]
        {
            let spec = ConnectionSpec::new(theta).unwrap();
            assert!(conjugation_check(&spec).unwrap());
            let g = g_matrix(&spec).unwrap();
            assert_eq!(g.det(), cr(&det_g_formula(&spec).unwrap()));
        }
        // N = 2 at θ = 1/6: α = −2/3
        let d = det_g_formula(&sixths(5, 1)).unwrap();
        assert_eq!(d, &(&r(1, 6) * &r(-4, 6)) * &(&r(-4, 6) * &r(1, 36)));
        let degenerate = ConnectionSpec::new(vec![r(1, 3), r(1, 3), r(-2, 3), r(0, 1)]).unwrap();
        assert!(g_matrix(&degenerate).is_err());
    }

    #[test]
    fn exponential_of_residues() {
        let spec = ConnectionSpec::new(vec![r(1, 6), r(1, 5), r(2, 7), r(1, 3)]).unwrap();
        let c = residues_c(&spec).unwrap();
        for &(j, k) in c.mats.keys() {
            assert!(local_monodromy_matches(&spec, j, k).unwrap(), "({}, {})", j, k);
        }
        let e = exp_rank_one_residue(c.get(1, 2).unwrap()).unwrap();
        let lam = exp_minus_two_pi_i(&(&r(1, 6) + &r(1, 5))).unwrap();
        assert_eq!(e.reflection_eigenvalue(), Some(lam));
    }

    #[test]
    fn single_pole_loop() {
        let a = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![Complex64::from(1.0 / 3.0), 0.0.into(), 0.0.into()]));
        let out = monodromy_numeric(&[(Complex64::new(0.0, 0.0), a)], Complex64::new(1.0, 0.0), &LoopOptions::default()).unwrap();
        let want = [Complex64::from_polar(1.0, 2.0 * PI / 3.0), 1.0.into(), 1.0.into()];
        let m = &out[0].matrix;
        for i in 0..3 {
            for j in 0..3 {
                let w = if i == j { want[i] } else { Complex64::from(0.0) };
                assert!((m[(i, j)] - w).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn closure_of_small_groups() {
        assert_eq!(numeric_closure(&[CMat::identity(2, 2)], 1e-6, 10).unwrap(), 1);
        let rot = CMat::from_element(1, 1, Complex64::from_polar(1.0, 2.0 * PI / 5.0));
        assert_eq!(numeric_closure(&[rot], 1e-6, 10).unwrap(), 5);
        let irr = CMat::from_element(1, 1, Complex64::from_polar(1.0, 2.0));
        assert!(matches!(numeric_closure(&[irr], 1e-6, 50), Err(Error::BoundExceeded(50))));
    }
}

//! The reflection groups of orders 648 and 155520: enumeration, reflection
//! hyperplanes, proper planes, line-orbit strata and the hyperplane lattice.

use crate::braid::BraidWord;
use crate::charvar::{section_matrix, word_matrix_full, LinearPart};
use crate::cyclo::{q, z, Cyclotomic};
use crate::eisenstein::{cyclo_to_eis, EisMat};
use crate::error::{Error, Result};
use crate::linalg::{normalize_line, parallel, promote_vec, vec_key, Mat, Vector};
use crate::rational::Rational;
use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    G25,
    G32,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::G25 => "g25",
            Which::G32 => "g32",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Which::G25 => 3,
            Which::G32 => 4,
        }
    }

    pub fn degrees(self) -> &'static [u64] {
        match self {
            Which::G25 => &[6, 9, 12],
            Which::G32 => &[12, 18, 24, 30],
        }
    }

    pub fn codegrees(self) -> &'static [u64] {
        match self {
            Which::G25 => &[0, 3, 6],
            Which::G32 => &[0, 6, 12, 18],
        }
    }

    /// Order of the eigenvalue defining proper planes.
    pub fn proper_order(self) -> u32 {
        match self {
            Which::G25 => 6,
            Which::G32 => 12,
        }
    }

    pub fn generators(self) -> Vec<Mat> {
        match self {
            Which::G25 => g25(),
            Which::G32 => g32(),
        }
    }
}

impl std::str::FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g25" => Ok(Which::G25),
            "g32" => Ok(Which::G32),
            other => Err(Error::Index(format!("unknown group '{}', expected g25 or g32", other))),
        }
    }
}

fn w(k: i64) -> Cyclotomic {
    z(3, k)
}

fn c(k: i64) -> Cyclotomic {
    Cyclotomic::from_int(k)
}

fn rows(v: Vec<Vec<Cyclotomic>>) -> Mat {
    Mat::from_rows(v)
}

/// `(ω² − ω)/3`.
fn pref() -> Cyclotomic {
    &(&w(2) - &w(1)) * &q(1, 3)
}

pub fn g25() -> Vec<Mat> {
    let r1 = Mat::diag(&[c(1), c(1), w(2)]);
    let r2 = rows(vec![vec![w(1), w(2), w(2)], vec![w(2), w(1), w(2)], vec![w(2), w(2), w(1)]]).scale(&pref());
    let r3 = Mat::diag(&[c(1), w(2), c(1)]);
    vec![r1, r2, r3]
}

pub fn g32() -> Vec<Mat> {
    let o = c(0);
    let d = &w(1) - &w(2);
    let r1 = Mat::diag(&[c(1), c(1), w(2), c(1)]);
    let r2 = rows(vec![
        vec![w(1), w(2), w(2), o.clone()],
        vec![w(2), w(1), w(2), o.clone()],
        vec![w(2), w(2), w(1), o.clone()],
        vec![o.clone(), o.clone(), o.clone(), d.clone()],
    ])
    .scale(&pref());
    let r3 = Mat::diag(&[c(1), w(2), c(1), c(1)]);
    let r4 = rows(vec![
        vec![w(1), -&w(2), o.clone(), -&w(2)],
        vec![-&w(2), w(1), o.clone(), w(2)],
        vec![o.clone(), o.clone(), d, o.clone()],
        vec![-&w(2), w(2), o.clone(), w(1)],
    ])
    .scale(&pref());
    vec![r1, r2, r3, r4]
}

/// A linear subspace given by the reduced row echelon form of its equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    eqs: Mat,
    ambient: usize,
}

impl Subspace {
    pub fn from_equations(ambient: usize, eqs: &[Vector]) -> Self {
        if eqs.is_empty() {
            return Subspace { eqs: Mat::zeros(0, ambient), ambient };
        }
        let (r, piv) = Mat::from_rows(eqs.to_vec()).rref();
        let kept: Vec<Vector> = (0..piv.len()).map(|i| r.row(i)).collect();
        let eqs = if kept.is_empty() { Mat::zeros(0, ambient) } else { Mat::from_rows(kept) };
        Subspace { eqs, ambient }
    }

    pub fn equations(&self) -> Vec<Vector> {
        (0..self.eqs.rows()).map(|i| self.eqs.row(i)).collect()
    }

    pub fn codim(&self) -> usize {
        self.eqs.rows()
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.codim()
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.eqs.mul_vec(v).iter().all(|x| x.is_zero())
    }

    pub fn basis(&self) -> Vec<Vector> {
        if self.codim() == 0 {
            return Mat::identity(self.ambient).to_rows();
        }
        self.eqs.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut all = self.equations();
        all.extend(other.equations());
        Subspace::from_equations(self.ambient, &all)
    }

    /// Whether the hyperplane `c·x = 0` contains this subspace.
    pub fn lies_in_hyperplane(&self, eq: &[Cyclotomic]) -> bool {
        let mut all = self.equations();
        all.push(eq.to_vec());
        Mat::from_rows(all).rank() == self.codim()
    }

    /// Image under `g`, given `g⁻¹`.
    pub fn image(&self, g_inv: &Mat) -> Subspace {
        if self.codim() == 0 {
            return self.clone();
        }
        let m = &self.eqs * g_inv;
        Subspace::from_equations(self.ambient, &m.to_rows())
    }

    pub fn key(&self, cond: u32) -> Vec<Rational> {
        self.eqs.promoted(cond).key()
    }

    pub fn render(&self) -> String {
        let vars: Vec<String> = (1..=self.ambient).map(|i| format!("z{}", i)).collect();
        let parts: Vec<String> = self
            .equations()
            .iter()
            .map(|row| {
                let terms: Vec<String> = row
                    .iter()
                    .zip(&vars)
                    .filter(|(x, _)| !x.is_zero())
                    .map(|(x, v)| if x.is_one() { v.clone() } else { format!("({})*{}", x.render(), v) })
                    .collect();
                format!("{} = 0", terms.join(" + "))
            })
            .collect();
        parts.join(", ")
    }
}

pub const CACHE_ENV: &str = "BRAIDORB_CACHE_DIR";
const CACHE_HEADER: &str = "braidorb-elements v1";

/// A finite group enumerated as exact matrices over `(1/3)·Z[ω]`.
pub struct ReflGroup {
    pub which: Which,
    pub generators: Vec<Mat>,
    elements: Vec<EisMat>,
    complex: Vec<Vec<Complex64>>,
}

fn closure_eis(gens: &[EisMat], bound: usize) -> Result<Vec<EisMat>> {
    let dim = gens.first().map_or(0, |g| g.dim());
    let id = EisMat::identity(dim);
    let mut seen: HashSet<EisMat> = HashSet::new();
    seen.insert(id.clone());
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let h = elems[i].try_mul(g)?;
            if !seen.contains(&h) {
                seen.insert(h.clone());
                elems.push(h);
                if elems.len() > bound {
                    return Err(Error::BoundExceeded(bound));
                }
            }
        }
        i += 1;
    }
    Ok(elems)
}

fn cache_path(which: Which) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join(format!("{}-elements.txt", which.name())))
}

fn write_cache(path: &PathBuf, elems: &[EisMat]) -> Result<()> {
    let mut s = String::new();
    let dim = elems.first().map_or(0, |e| e.dim());
    writeln!(s, "{}", CACHE_HEADER).unwrap();
    writeln!(s, "{} {}", elems.len(), dim).unwrap();
    for e in elems {
        let mut first = true;
        for i in 0..dim {
            for j in 0..dim {
                let x = e.entry(i, j);
                if !first {
                    s.push(' ');
                }
                first = false;
                write!(s, "{} {}", x[0], x[1]).unwrap();
            }
        }
        s.push('\n');
    }
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    }
    std::fs::write(path, s).map_err(|e| Error::Cache(e.to_string()))
}

fn read_cache(path: &PathBuf, gens: &[EisMat]) -> Result<Vec<EisMat>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Err(Error::Cache("unknown cache format".into()));
    }
    let head: Vec<usize> = lines
        .next()
        .ok_or_else(|| Error::Cache("empty cache file".into()))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Cache("bad header".into())))
        .collect::<Result<_>>()?;
    let (count, dim) = (head[0], head[1]);
    let mut out = Vec::with_capacity(count);
    for line in lines {
        let v: Vec<i64> =
            line.split_whitespace().map(|t| t.parse().map_err(|_| Error::Cache("bad entry".into()))).collect::<Result<_>>()?;
        if v.len() != 2 * dim * dim {
            return Err(Error::Cache("bad row length".into()));
        }
        let mut m = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let k = 2 * (i * dim + j);
                m.set(i, j, crate::eisenstein::eis_to_cyclo([v[k], v[k + 1]]));
            }
        }
        out.push(EisMat::from_mat(&m)?);
    }
    if out.len() != count {
        return Err(Error::Cache("element count mismatch".into()));
    }
    let set: HashSet<&EisMat> = out.iter().collect();
    let closed = out.iter().take(64).all(|e| gens.iter().all(|g| e.try_mul(g).map_or(false, |h| set.contains(&h))));
    if set.len() != count || !gens.iter().all(|g| set.contains(g)) || !closed {
        return Err(Error::Cache("cached elements do not match the generators".into()));
    }
    Ok(out)
}

impl ReflGroup {
    /// Enumerate `⟨gens⟩`; `bound` guards against infinite input.
    pub fn closure(which: Which, gens: &[Mat], bound: usize) -> Result<Self> {
        let eg: Vec<EisMat> = gens.iter().map(EisMat::from_mat).collect::<Result<_>>()?;
        let elements = closure_eis(&eg, bound)?;
        Ok(Self::from_elements(which, gens.to_vec(), elements))
    }

    fn from_elements(which: Which, generators: Vec<Mat>, elements: Vec<EisMat>) -> Self {
        let complex = elements.iter().map(|e| e.to_complex()).collect();
        ReflGroup { which, generators, elements, complex }
    }

    /// The standard group, read from or written to the cache directory when `BRAIDORB_CACHE_DIR` is set.
    pub fn standard(which: Which) -> Result<Self> {
        let gens = which.generators();
        let expected: u64 = which.degrees().iter().product();
        if let Some(path) = cache_path(which) {
            let eg: Vec<EisMat> = gens.iter().map(EisMat::from_mat).collect::<Result<_>>()?;
            if path.exists() {
                if let Ok(elems) = read_cache(&path, &eg) {
                    return Ok(Self::from_elements(which, gens, elems));
                }
            }
            let g = Self::closure(which, &gens, expected as usize)?;
            write_cache(&path, &g.elements)?;
            return Ok(g);
        }
        Self::closure(which, &gens, expected as usize)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.which.dim()
    }

    pub fn degree_product(&self) -> u64 {
        self.which.degrees().iter().product()
    }

    pub fn element(&self, i: usize) -> Mat {
        self.elements[i].to_mat()
    }

    pub fn contains(&self, m: &Mat) -> bool {
        EisMat::from_mat(m).map_or(false, |e| self.elements.contains(&e))
    }

    pub fn center_order(&self) -> usize {
        self.elements.iter().filter(|e| e.to_mat().scalar_value().is_some()).count()
    }

    /// Elements `g` with `rank(g − I) = 1`.
    pub fn reflections(&self) -> Vec<Mat> {
        self.elements.iter().filter(|e| e.minus_scalar_has_rank_one([3, 0])).map(|e| e.to_mat()).collect()
    }

    /// Fixed hyperplanes of the reflections, deduplicated.
    pub fn hyperplanes(&self) -> Vec<Subspace> {
        let dim = self.dim();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for r in self.reflections() {
            let m = r.sub(&Mat::identity(dim));
            let s = Subspace::from_equations(dim, &m.to_rows());
            if seen.insert(s.key(3)) {
                out.push(s);
            }
        }
        out
    }

    /// Regular two-dimensional eigenspaces for eigenvalues of the proper order.
    pub fn proper_planes(&self) -> Result<Vec<Subspace>> {
        match self.which {
            Which::G25 => self.proper_planes_by_scan(),
            Which::G32 => self.proper_planes_by_orbit(),
        }
    }

    fn proper_planes_by_scan(&self) -> Result<Vec<Subspace>> {
        let dim = self.dim();
        let hyper: HashSet<Vec<Rational>> = self.hyperplanes().iter().map(|h| h.key(6)).collect();
        let roots: Vec<Cyclotomic> = primitive_roots(self.which.proper_order());
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for e in &self.elements {
            for ev in &roots {
                if !e.minus_scalar_has_rank_one(cyclo_to_eis(ev)?) {
                    continue;
                }
                let m = e.to_mat().sub(&Mat::identity(dim).scale(ev));
                let kernel = m.kernel();
                if kernel.len() != 2 {
                    continue;
                }
                let s = Subspace::from_equations(dim, &m.to_rows());
                let key = s.key(6);
                if hyper.contains(&key) {
                    continue;
                }
                if seen.insert(key) {
                    out.push(s);
                }
            }
        }
        Ok(out)
    }

    fn proper_planes_by_orbit(&self) -> Result<Vec<Subspace>> {
        let e = witting_proper_plane()?;
        let inv: Vec<Mat> = self.generators.iter().map(|g| g.inverse()).collect::<Result<_>>()?;
        let cond = 12;
        let mut seen = HashSet::new();
        seen.insert(e.key(cond));
        let mut out = vec![e];
        let mut i = 0;
        while i < out.len() {
            for gi in &inv {
                let s = out[i].image(gi);
                if seen.insert(s.key(cond)) {
                    out.push(s);
                }
            }
            i += 1;
        }
        Ok(out)
    }

    fn complex_vec(v: &[Cyclotomic]) -> Vec<Complex64> {
        let vc: Vec<Complex64> = v.iter().map(|x| x.to_complex()).collect();
        let norm = vc.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        vc.into_iter().map(|x| x / norm).collect()
    }

    fn scan(
        &self,
        v: &[Cyclotomic],
        exact: impl Fn(&Vector) -> bool + Sync,
        near: impl Fn(&[Complex64], &[Complex64]) -> bool + Sync,
    ) -> Vec<usize> {
        let vc = Self::complex_vec(v);
        let d = self.dim();
        (0..self.order())
            .into_par_iter()
            .filter(|&k| {
                let g = &self.complex[k];
                let gv: Vec<Complex64> = (0..d).map(|i| (0..d).map(|j| g[i * d + j] * vc[j]).sum()).collect();
                near(&gv, &vc) && exact(&self.elements[k].to_mat().mul_vec(v))
            })
            .collect()
    }

    /// Indices of elements mapping the line `[v]` to itself.
    ///
    /// A floating-point filter discards most elements; survivors are confirmed exactly.
    pub fn line_stabilizer(&self, v: &[Cyclotomic]) -> Vec<usize> {
        self.scan(
            v,
            |gv| parallel(gv, v),
            |a, b| (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] * b[j] - a[j] * b[i]).norm() < 1e-7)),
        )
    }

    /// Indices of elements fixing `v`.
    pub fn vector_stabilizer(&self, v: &[Cyclotomic]) -> Vec<usize> {
        self.scan(v, |gv| gv.as_slice() == v, |a, b| a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-7))
    }

    pub fn line_orbit_size(&self, v: &[Cyclotomic]) -> u64 {
        (self.order() / self.line_stabilizer(v).len()) as u64
    }

    /// Orders of the stabilizer of `v` and of the subgroup generated by the reflections fixing `v`.
    pub fn steinberg_check(&self, v: &[Cyclotomic]) -> Result<(usize, usize)> {
        let stab = self.vector_stabilizer(v).len();
        let fixing: Vec<EisMat> = self
            .elements
            .iter()
            .filter(|e| e.minus_scalar_has_rank_one([3, 0]) && e.to_mat().mul_vec(v).as_slice() == v)
            .cloned()
            .collect();
        let sub = if fixing.is_empty() { 1 } else { closure_eis(&fixing, self.order())?.len() };
        Ok((stab, sub))
    }

    /// Whether the generators move one reflection hyperplane onto every other.
    pub fn transitive_on_hyperplanes(&self) -> bool {
        let hs = self.hyperplanes();
        let Some(first) = hs.first() else { return true };
        let invs: Vec<Mat> = self.generators.iter().map(|g| g.inverse().expect("generators are invertible")).collect();
        let cond = 12;
        let mut seen = HashSet::from([first.key(cond)]);
        let mut queue = vec![first.clone()];
        while let Some(h) = queue.pop() {
            for gi in &invs {
                let img = h.image(gi);
                if seen.insert(img.key(cond)) {
                    queue.push(img);
                }
            }
        }
        seen.len() == hs.len()
    }
}

fn primitive_roots(n: u32) -> Vec<Cyclotomic> {
    (1..n as i64).filter(|&k| num_integer::gcd(k, n as i64) == 1).map(|k| z(n, k)).collect()
}

fn product(ms: &[&Mat]) -> Mat {
    ms.iter().skip(1).fold(ms[0].clone(), |acc, m| &acc * *m)
}

/// `T = R_1²R_2R_3²R_4R_2²R_3`, an element of order 24.
pub fn witting_t() -> Mat {
    let g = g32();
    let sq = |m: &Mat| m * m;
    product(&[&sq(&g[0]), &g[1], &sq(&g[2]), &g[3], &sq(&g[1]), &g[2]])
}

/// `R_1²R_2R_3²R_4`, an element with an eigenvalue of order 30.
pub fn witting_coxeter() -> Mat {
    let g = g32();
    let sq = |m: &Mat| m * m;
    product(&[&sq(&g[0]), &g[1], &sq(&g[2]), &g[3]])
}

/// The square root ζ of `−ω²` whose eigenplane `V(T², ζ)` matches the displayed equations.
pub fn witting_plane_root() -> Result<Cyclotomic> {
    let t2 = {
        let t = witting_t();
        &t * &t
    };
    for k in [1, 7] {
        let zeta = z(12, k);
        let m = t2.sub(&Mat::identity(4).scale(&zeta));
        let s = Subspace::from_equations(4, &m.to_rows());
        let (e1, e2) = witting_plane_display(&zeta);
        if s.codim() == 2 && s.lies_in_hyperplane(&e1) && s.lies_in_hyperplane(&e2) {
            return Ok(zeta);
        }
    }
    Err(Error::DegenerateParameters("no square root of -w^2 matches the displayed plane".into()))
}

fn witting_plane_display(zeta: &Cyclotomic) -> (Vector, Vector) {
    let p = |k: i64| zeta.pow(k);
    let a = &(&p(3) - &p(1).scale(&Rational::from_int(2))) + &c(1);
    let b = &(&(&p(3).scale(&Rational::from_int(2)) - &p(2).scale(&Rational::from_int(2))) - &p(1)) + &c(2);
    (vec![c(1), c(0), p(2), a.clone()], vec![c(0), c(1), -&a, -&b])
}

/// The proper plane `E = V(T², ζ)`.
pub fn witting_proper_plane() -> Result<Subspace> {
    let zeta = witting_plane_root()?;
    let t = witting_t();
    let m = (&t * &t).sub(&Mat::identity(4).scale(&zeta));
    Ok(Subspace::from_equations(4, &m.to_rows()))
}

/// Hyperplane equations as displayed: coordinate hyperplanes plus the `ξ, ξ′` families.
pub fn displayed_hyperplanes(which: Which) -> Vec<Subspace> {
    let d = which.dim();
    let mut eqs: Vec<Vector> = (0..d).map(|i| (0..d).map(|j| c((i == j) as i64)).collect()).collect();
    for a in 0..3 {
        for b in 0..3 {
            let (x, y) = (w(a), w(b));
            match which {
                Which::G25 => eqs.push(vec![c(1), x, y]),
                Which::G32 => {
                    eqs.push(vec![c(1), x.clone(), y.clone(), c(0)]);
                    eqs.push(vec![c(1), -&x, c(0), -&y]);
                    eqs.push(vec![c(1), c(0), -&x, y.clone()]);
                    eqs.push(vec![c(0), c(1), -&x, -&y]);
                }
            }
        }
    }
    eqs.iter().map(|e| Subspace::from_equations(d, std::slice::from_ref(e))).collect()
}

/// The nine planes `x − ω^k z`, `y − ω^k z`, `x − ω^k y`.
pub fn displayed_hessian_proper_planes() -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..3 {
        out.push(Subspace::from_equations(3, &[vec![c(1), c(0), -&w(k)]]));
        out.push(Subspace::from_equations(3, &[vec![c(0), c(1), -&w(k)]]));
        out.push(Subspace::from_equations(3, &[vec![c(1), -&w(k), c(0)]]));
    }
    out
}

/// Whether two subspace lists agree as sets.
pub fn same_subspaces(a: &[Subspace], b: &[Subspace], cond: u32) -> bool {
    let ka: HashSet<_> = a.iter().map(|s| s.key(cond)).collect();
    let kb: HashSet<_> = b.iter().map(|s| s.key(cond)).collect();
    ka.len() == a.len() && ka == kb
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCensus {
    pub hyperplanes: usize,
    /// Number of codimension-two intersections, by the number of hyperplanes containing them.
    pub planes: BTreeMap<usize, usize>,
    /// Number of codimension-three intersections, by the number of hyperplanes containing them.
    pub lines: BTreeMap<usize, usize>,
}

impl LatticeCensus {
    pub fn count_planes(&self, through: usize) -> usize {
        self.planes.get(&through).copied().unwrap_or(0)
    }

    pub fn count_lines(&self, through: usize) -> usize {
        self.lines.get(&through).copied().unwrap_or(0)
    }
}

/// Intersections of hyperplanes, grouped by codimension and by how many hyperplanes contain them.
pub fn lattice_census(hyperplanes: &[Subspace]) -> LatticeCensus {
    let n = hyperplanes.len();
    let eqs: Vec<Vector> = hyperplanes.iter().map(|h| h.equations()[0].clone()).collect();
    let ambient = hyperplanes.first().map_or(0, |h| h.ambient);
    let cond = crate::cyclo::common_conductor(eqs.iter().flatten());
    let mut flats: HashMap<Vec<Rational>, Subspace> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = Subspace::from_equations(ambient, &[eqs[i].clone(), eqs[j].clone()]);
            flats.entry(s.key(cond)).or_insert(s);
        }
    }
    if ambient > 3 {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = Subspace::from_equations(ambient, &[eqs[i].clone(), eqs[j].clone(), eqs[k].clone()]);
                    if s.codim() == 3 {
                        flats.entry(s.key(cond)).or_insert(s);
                    }
                }
            }
        }
    }
    let mut planes = BTreeMap::new();
    let mut lines = BTreeMap::new();
    for s in flats.values() {
        if s.codim() >= ambient {
            continue;
        }
        let through = eqs.iter().filter(|e| s.lies_in_hyperplane(e)).count();
        let target = if s.codim() == 2 { &mut planes } else { &mut lines };
        *target.entry(through).or_insert(0) += 1;
    }
    LatticeCensus { hyperplanes: n, planes, lines }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumRow {
    pub order: u64,
    pub number: &'static str,
    pub reflection: usize,
    pub proper: usize,
    pub special: Option<&'static str>,
}

fn srow(order: u64, number: &'static str, reflection: usize, proper: usize, special: Option<&'static str>) -> StratumRow {
    StratumRow { order, number, reflection, proper, special }
}

/// Orbits of lines in `P²` under the group of order 648.
pub fn strata_table(which: Which) -> Vec<StratumRow> {
    match which {
        Which::G25 => vec![
            srow(216, "generic", 0, 0, None),
            srow(72, "1", 0, 0, Some("order-9 eigenline")),
            srow(108, "one-parameter family", 0, 1, None),
            srow(54, "1", 0, 1, Some("order-12 eigenline")),
            srow(72, "one-parameter family", 1, 0, None),
            srow(36, "1", 1, 1, None),
            srow(12, "1", 2, 3, None),
            srow(9, "1", 4, 0, None),
        ],
        Which::G32 => vec![
            srow(25920, "generic", 0, 0, None),
            srow(5184, "1", 0, 0, Some("order-30 eigenline")),
            srow(12960, "one-parameter family", 0, 1, None),
            srow(6480, "1", 0, 1, Some("order-24 eigenline")),
            srow(8640, "two-parameter family", 1, 0, None),
            srow(2880, "1", 1, 0, Some("order-9 line in a hyperplane")),
            srow(2880, "one-parameter family", 2, 0, None),
            srow(1440, "1", 2, 3, None),
            srow(1080, "one-parameter family", 4, 0, None),
            srow(540, "1", 4, 6, None),
            srow(360, "1", 5, 0, None),
            srow(40, "1", 12, 0, None),
        ],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumLabel {
    pub orbit_size: u64,
    pub reflection_hyperplanes: usize,
    pub proper_planes: usize,
    pub special: Option<&'static str>,
    pub row: Option<StratumRow>,
}

/// A group together with its hyperplanes and proper planes.
pub struct Stratifier {
    pub group: ReflGroup,
    pub hyperplanes: Vec<Subspace>,
    pub proper: Vec<Subspace>,
}

impl Stratifier {
    pub fn new(group: ReflGroup) -> Result<Self> {
        let hyperplanes = group.hyperplanes();
        let proper = group.proper_planes()?;
        Ok(Stratifier { group, hyperplanes, proper })
    }

    pub fn stratify(&self, v: &[Cyclotomic]) -> Result<StratumLabel> {
        if v.len() != self.group.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, group acts on C^{}",
                v.len(),
                self.group.dim()
            )));
        }
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::DimensionMismatch("the zero vector is not a line".into()));
        }
        let refl = self.hyperplanes.iter().filter(|h| h.contains(v)).count();
        let prop = self.proper.iter().filter(|p| p.contains(v)).count();
        let size = self.group.line_orbit_size(v);
        let row =
            strata_table(self.group.which).into_iter().find(|r| r.order == size && r.reflection == refl && r.proper == prop);
        Ok(StratumLabel {
            orbit_size: size,
            reflection_hyperplanes: refl,
            proper_planes: prop,
            special: row.as_ref().and_then(|r| r.special),
            row,
        })
    }
}

/// A representative line for one stratum row, with the incidence data it should produce.
#[derive(Clone, Debug)]
pub struct StratumExample {
    pub label: String,
    pub point: Vector,
    pub row: StratumRow,
}

fn line_in(s: &Subspace, extra: &[Vector]) -> Option<Vector> {
    let l = s.intersect(&Subspace::from_equations(s.ambient, extra));
    (l.dim() == 1).then(|| l.basis()[0].clone())
}

/// One representative per row of `strata_table`, in the same order.
pub fn stratum_examples(s: &Stratifier) -> Result<Vec<StratumExample>> {
    let which = s.group.which;
    let specials = special_representatives(which)?;
    let sp = |name: &str| specials.iter().find(|(n, _)| *n == name).map(|(_, v)| v.clone()).expect("named special line");
    let missing = || Error::DegenerateParameters("no proper plane meets the chosen plane in a line".into());
    let points: Vec<(&str, Vector)> = match which {
        Which::G25 => vec![
            ("generic point", vec![c(1), c(2), c(5)]),
            ("order-9 eigenline", sp("order-9 eigenline")),
            ("point of a proper plane", vec![c(1), c(2), c(1)]),
            ("order-12 eigenline", sp("order-12 eigenline")),
            ("point of a reflection plane", vec![c(1), c(2), c(0)]),
            ("[1:1:0]", vec![c(1), c(1), c(0)]),
            ("[1:0:0]", vec![c(1), c(0), c(0)]),
            ("[1:-1:0]", vec![c(1), c(-1), c(0)]),
        ],
        Which::G32 => {
            let e = witting_proper_plane()?;
            let eb = e.basis();
            let on_e: Vector = eb[0].iter().zip(&eb[1]).map(|(a, b)| a + &b.scale(&Rational::from_int(3))).collect();
            let z3z4 = [vec![c(0), c(0), c(1), c(0)], vec![c(0), c(0), c(0), c(1)]];
            let diag = [vec![c(0), c(1), c(-1), c(0)], vec![c(0), c(0), c(0), c(1)]];
            let on_p = s.proper.iter().find_map(|p| line_in(p, &z3z4)).ok_or_else(missing)?;
            let on_pp = s.proper.iter().find_map(|p| line_in(p, &diag)).ok_or_else(missing)?;
            vec![
                ("generic point", vec![c(1), c(2), c(5), c(7)]),
                ("order-30 eigenline", sp("order-30 eigenline")),
                ("point of a proper plane", on_e),
                ("order-24 eigenline", sp("order-24 eigenline")),
                ("point of a reflection hyperplane", vec![c(1), c(2), c(5), c(0)]),
                ("order-9 line in a hyperplane", sp("order-9 line in a hyperplane")),
                ("point of {z3=z4=0}", vec![c(1), c(2), c(0), c(0)]),
                ("proper plane meets {z3=z4=0}", on_p),
                ("point of {z2=z3, z4=0}", vec![c(1), c(2), c(2), c(0)]),
                ("proper plane meets {z2=z3, z4=0}", on_pp),
                ("[1:-1:0:0]", vec![c(1), c(-1), c(0), c(0)]),
                ("[0:1:0:0]", vec![c(0), c(1), c(0), c(0)]),
            ]
        }
    };
    Ok(points
        .into_iter()
        .zip(strata_table(which))
        .map(|((label, point), row)| StratumExample { label: label.to_string(), point, row })
        .collect())
}

/// Named special lines, each checked to be the stated eigenvector.
pub fn special_representatives(which: Which) -> Result<Vec<(&'static str, Vector)>> {
    match which {
        Which::G25 => {
            let nu = z(9, 1);
            let m = rows(vec![vec![c(0), c(1), c(0)], vec![c(0), c(0), nu.pow(3)], vec![c(1), c(0), c(0)]]);
            let v9 = vec![nu.clone(), nu.pow(2), c(1)];
            check_eigen(&m, &v9, Some(&nu))?;
            let g = g25();
            let m12 = product(&[&g[0], &(&g[1] * &g[1]), &g[2]]);
            // [0:w:1] is not an eigenvector of this product (it lies on z1 = 0), so the
            // order-12 eigenline is computed.
            let v12 = m12
                .root_of_unity_eigenvalues(12)
                .into_iter()
                .filter(|e| e.order_of_root() == Some(12))
                .find_map(|e| {
                    let sp = m12.eigenspace(&e);
                    if sp.len() == 1 {
                        normalize_line(&sp[0])
                    } else {
                        None
                    }
                })
                .ok_or(Error::DegenerateParameters("no order-12 eigenline".into()))?;
            Ok(vec![("order-9 eigenline", v9), ("order-12 eigenline", v12)])
        }
        Which::G32 => {
            let v30 = find_display_root(30, &witting_coxeter(), |nu| {
                let p = |k: i64| nu.pow(k);
                vec![&(&p(7) + &p(1)) - &p(5), &p(7) - &p(6), &(&(&(&(&(-&p(8)) + &p(7)) + &p(6)) - &p(4)) - &p(2)) + &c(1), c(1)]
            })?;
            let v24 = find_display_root(24, &witting_t(), |nu| {
                let p = |k: i64| nu.pow(k);
                vec![&(&(-&p(10)) + &p(3)) - &c(1), &(&(&(&p(11) - &p(9)) + &p(6)) - &p(4)) + &p(1), &p(11) - &p(10), c(1)]
            })?;
            let nu = z(9, 1);
            let v9 = vec![nu.clone(), nu.pow(2), c(1), c(0)];
            Ok(vec![("order-30 eigenline", v30), ("order-24 eigenline", v24), ("order-9 line in a hyperplane", v9)])
        }
    }
}

fn check_eigen(m: &Mat, v: &[Cyclotomic], ev: Option<&Cyclotomic>) -> Result<Cyclotomic> {
    let mv = m.mul_vec(v);
    let k = v.iter().position(|x| !x.is_zero()).ok_or(Error::DegenerateParameters("zero vector".into()))?;
    let lam = &mv[k] / &v[k];
    let ok = mv.iter().zip(v).all(|(a, b)| *a == &lam * b) && ev.map_or(true, |e| *e == lam);
    if !ok {
        return Err(Error::DegenerateParameters("displayed vector is not the stated eigenvector".into()));
    }
    Ok(lam)
}

/// The primitive `n`-th root ν for which `build(ν)` is a `ν`-eigenvector of `m`.
fn find_display_root(n: u32, m: &Mat, build: impl Fn(&Cyclotomic) -> Vector) -> Result<Vector> {
    for nu in primitive_roots(n) {
        let v = build(&nu);
        if check_eigen(m, &v, Some(&nu)).is_ok() {
            return Ok(v);
        }
    }
    Err(Error::DegenerateParameters(format!("no primitive {}-th root gives an eigenvector", n)))
}

pub fn hessian_vertices() -> Vec<Vector> {
    let mut out = Vec::new();
    for j in 0..3 {
        for k in 0..3 {
            let base = [c(0), w(j), -&w(k)];
            for s in 0..3 {
                out.push((0..3).map(|i| base[(i + 3 - s) % 3].clone()).collect());
            }
        }
    }
    out
}

pub fn witting_vertices() -> Vec<Vector> {
    let mut out = Vec::new();
    for j in 0..3 {
        for k in 0..3 {
            for l in 0..3 {
                let (a, b, cc) = (w(j), w(k), w(l));
                // the fourth coordinate sign makes these the roots of the reflections
                let families = [
                    vec![c(0), a.clone(), -&b, -&cc],
                    vec![-&a, c(0), b.clone(), -&cc],
                    vec![a.clone(), -&b, c(0), -&cc],
                    vec![a.clone(), b.clone(), cc.clone(), c(0)],
                ];
                for f in families {
                    out.push(f.iter().map(|x| -x).collect());
                    out.push(f);
                }
            }
        }
    }
    // i·√3 = ω − ω², so every vertex has squared norm 3
    let i = &w(1) - &w(2);
    for pos in 0..4 {
        for j in 0..3 {
            for sign in [1, -1] {
                let mut v = vec![c(0); 4];
                v[pos] = (&i * &w(j)).scale(&Rational::from_int(sign));
                out.push(v);
            }
        }
    }
    out
}

/// Whether every matrix permutes the vertex set.
pub fn symmetry_check(gens: &[Mat], vertices: &[Vector]) -> bool {
    let cond = num_integer::lcm(
        crate::cyclo::common_conductor(vertices.iter().flatten()),
        crate::cyclo::common_conductor(gens.iter().flat_map(|g| g.entries())),
    );
    let keys: HashSet<Vec<Rational>> = vertices.iter().map(|v| vec_key(&promote_vec(v, cond))).collect();
    gens.iter().all(|g| vertices.iter().all(|v| keys.contains(&vec_key(&promote_vec(&g.mul_vec(v), cond)))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaChoice {
    /// ζ = −ω
    MinusOmega,
    /// ζ = −ω²
    MinusOmegaSquared,
}

/// The braid-action matrices `A_i` of `σ_i` for the all-equal linear part.
pub fn braid_generators_all_zeta(n: usize, zeta: &Cyclotomic) -> Result<Vec<Mat>> {
    let mut lam = vec![zeta.clone(); n];
    if n == 5 {
        lam[4] = zeta * zeta;
    }
    let lin = LinearPart::new(lam)?;
    (1..n - 1)
        .map(|i| {
            let full = word_matrix_full(&lin, &BraidWord::sigma(n, i)?)?;
            section_matrix(&lin, &full)
        })
        .collect()
}

/// The change-of-basis matrix relating the braid action to the standard generators.
pub fn conjugating_matrix(n: usize, zeta: &Cyclotomic) -> Result<Mat> {
    let z2 = zeta * zeta;
    match n {
        5 => Ok(rows(vec![vec![c(0), c(0), &c(1) - &z2], vec![z2.clone(), z2.clone(), c(1)], vec![z2.clone(), -zeta, c(1)]])),
        6 => Ok(rows(vec![
            vec![c(0), c(0), &c(1) - &z2, c(0)],
            vec![z2.clone(), z2.clone(), c(1), c(0)],
            vec![z2.clone(), -zeta, c(1), c(0)],
            vec![c(-1), c(0), c(1), zeta.clone()],
        ])),
        _ => Err(Error::Index(format!("n must be 5 or 6, got {}", n))),
    }
}

/// Check `R_i = P⁻¹ A_i^{e_i} P` with the exponents attached to the choice of ζ.
pub fn conjugacy_to_braid_action(n: usize, choice: ZetaChoice) -> Result<bool> {
    let zeta = match choice {
        ZetaChoice::MinusOmega => -&w(1),
        ZetaChoice::MinusOmegaSquared => -&w(2),
    };
    let a = braid_generators_all_zeta(n, &zeta)?;
    let p = conjugating_matrix(n, &zeta)?;
    let pi = p.inverse()?;
    let r = if n == 5 { g25() } else { g32() };
    Ok(a.iter().zip(&r).enumerate().all(|(i, (ai, ri))| {
        let squared = (i % 2 == 0) == (choice == ZetaChoice::MinusOmega);
        let e = if squared { ai * ai } else { ai.clone() };
        &(&pi * &e) * &p == *ri
    }))
}

/// Normalized line through `v`.
pub fn line(v: &[Cyclotomic]) -> Option<Vector> {
    normalize_line(v)
}

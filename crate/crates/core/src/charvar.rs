//! Affine representations of the punctured-sphere group, pure-braid action matrices,
//! normalization to the section `τ_1 = 0`, and orbit enumeration in projective space.

use crate::braid::{hurwitz_act, BraidWord, GroupElem, PureLetter, PureWord};
use crate::cyclo::{common_conductor, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::{normalize_line, parallel, promote_vec, vec_key, Mat, Vector};
use crate::rational::Rational;
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;

pub const DEFAULT_ORBIT_BOUND: usize = 200_000;

/// Affine map `z ↦ λz + τ`; composition is function composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine {
    pub lambda: Cyclotomic,
    pub tau: Cyclotomic,
}

impl Affine {
    pub fn new(lambda: Cyclotomic, tau: Cyclotomic) -> Self {
        Affine { lambda, tau }
    }

    pub fn identity() -> Self {
        Affine { lambda: Cyclotomic::one(), tau: Cyclotomic::zero() }
    }
}

impl GroupElem for Affine {
    fn compose(&self, o: &Self) -> Self {
        Affine { lambda: &self.lambda * &o.lambda, tau: &(&self.lambda * &o.tau) + &self.tau }
    }

    fn inverse(&self) -> Self {
        let li = self.lambda.inv();
        Affine { tau: -&(&self.tau * &li), lambda: li }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearPart {
    lambda: Vec<Cyclotomic>,
}

impl LinearPart {
    pub fn new(lambda: Vec<Cyclotomic>) -> Result<Self> {
        if lambda.len() < 3 {
            return Err(Error::InvalidLinearPart(format!("need n >= 3, got {}", lambda.len())));
        }
        if lambda.iter().any(|l| l.is_zero()) {
            return Err(Error::InvalidLinearPart("zero entry".into()));
        }
        let p = lambda.iter().fold(Cyclotomic::one(), |a, b| &a * b);
        if !p.is_one() {
            return Err(Error::InvalidLinearPart(format!("product of the λ_i is {}, not 1", p)));
        }
        let c = common_conductor(lambda.iter());
        Ok(LinearPart { lambda: promote_vec(&lambda, c) })
    }

    /// Build from λ_1..λ_{n−1}; λ_n is the inverse of their product.
    pub fn from_first(first: Vec<Cyclotomic>) -> Result<Self> {
        let p = first.iter().fold(Cyclotomic::one(), |a, b| &a * b);
        let last = p.try_inv().map_err(|_| Error::InvalidLinearPart("zero entry".into()))?;
        let mut v = first;
        v.push(last);
        Self::new(v)
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.lambda
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> &Cyclotomic {
        &self.lambda[i - 1]
    }

    pub fn conductor(&self) -> u32 {
        common_conductor(self.lambda.iter())
    }

    /// Number of λ_i different from 1.
    pub fn iota(&self) -> usize {
        self.lambda.iter().filter(|l| !l.is_one()).count()
    }

    pub fn all_roots_of_unity(&self) -> bool {
        self.lambda.iter().all(|l| l.order_of_root().is_some())
    }

    /// `(λ_1,…,λ_{n−1}) ↦ (1−λ_1,…,1−λ_{n−1})`, the conjugation direction.
    pub fn delta(&self) -> Vector {
        let one = Cyclotomic::one();
        self.lambda[..self.n() - 1].iter().map(|l| &one - l).collect()
    }

    /// Cyclic shift: new λ_i is old λ_{i+r}.
    pub fn rotate(&self, r: usize) -> Self {
        let n = self.n();
        LinearPart { lambda: (0..n).map(|i| self.lambda[(i + r) % n].clone()).collect() }
    }

    /// Smallest r with λ_{1+r} ≠ 1.
    pub fn first_nontrivial(&self) -> Option<usize> {
        self.lambda.iter().position(|l| !l.is_one())
    }

    /// ∏_{l=a}^{b} λ_l (1-based, empty product is 1).
    fn prod(&self, a: usize, b: usize) -> Cyclotomic {
        (a..=b).fold(Cyclotomic::one(), |acc, l| &acc * self.get(l))
    }

    fn prod_inv(&self, a: usize, b: usize) -> Cyclotomic {
        self.prod(a, b).inv()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.lambda.iter().map(|l| l.render()).collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineRep {
    linear: LinearPart,
    tau: Vector,
}

impl AffineRep {
    /// `tau` holds τ_1..τ_{n−1}; τ_n is derived from the product relation.
    pub fn new(linear: LinearPart, tau: Vec<Cyclotomic>) -> Result<Self> {
        if tau.len() + 1 != linear.n() {
            return Err(Error::DimensionMismatch(format!("expected {} translation entries, got {}", linear.n() - 1, tau.len())));
        }
        Ok(AffineRep { linear, tau })
    }

    /// Build from all n translations, checking the product relation.
    pub fn from_full(linear: LinearPart, tau: Vec<Cyclotomic>) -> Result<Self> {
        if tau.len() != linear.n() {
            return Err(Error::DimensionMismatch(format!("expected {} translations", linear.n())));
        }
        let last = tau[tau.len() - 1].clone();
        let rep = Self::new(linear, tau[..tau.len() - 1].to_vec())?;
        if rep.tau_n() != last {
            return Err(Error::InvalidTranslation("τ_n does not satisfy the product relation".into()));
        }
        Ok(rep)
    }

    pub fn from_affine_tuple(t: &[Affine]) -> Result<Self> {
        let lin = LinearPart::new(t.iter().map(|a| a.lambda.clone()).collect())?;
        Self::from_full(lin, t.iter().map(|a| a.tau.clone()).collect())
    }

    pub fn linear(&self) -> &LinearPart {
        &self.linear
    }

    pub fn tau(&self) -> &[Cyclotomic] {
        &self.tau
    }

    pub fn n(&self) -> usize {
        self.linear.n()
    }

    pub fn tau_n(&self) -> Cyclotomic {
        let n = self.n();
        let mut acc = Cyclotomic::zero();
        let mut pr = Cyclotomic::one();
        for k in 0..n - 1 {
            acc = &acc + &(&pr * &self.tau[k]);
            pr = &pr * &self.linear.lambda[k];
        }
        -&(&acc / &pr)
    }

    pub fn full_tau(&self) -> Vector {
        let mut v = self.tau.clone();
        v.push(self.tau_n());
        v
    }

    pub fn affine_tuple(&self) -> Vec<Affine> {
        self.linear.lambda.iter().cloned().zip(self.full_tau()).map(|(l, t)| Affine::new(l, t)).collect()
    }

    /// Conjugation by `z ↦ az + b`.
    pub fn conjugate(&self, a: &Cyclotomic, b: &Cyclotomic) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroScale);
        }
        let d = self.linear.delta();
        let tau = self.tau.iter().zip(&d).map(|(t, dk)| &(a * t) + &(b * dk)).collect();
        Ok(AffineRep { linear: self.linear.clone(), tau })
    }

    /// Cyclic shift of the full tuple: the new i-th loop is the old (i+r)-th.
    pub fn rotate(&self, r: usize) -> Self {
        let n = self.n();
        let full = self.full_tau();
        AffineRep { linear: self.linear.rotate(r), tau: (0..n - 1).map(|i| full[(i + r) % n].clone()).collect() }
    }

    /// Apply an arbitrary braid word through the Hurwitz action on the affine tuple.
    pub fn act(&self, w: &BraidWord) -> Result<Self> {
        Self::from_affine_tuple(&hurwitz_act(w, &self.affine_tuple()))
    }
}

/// Class in `P(H¹)` written in the section `τ_1 = 0`, or the abelian class `[0]`.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjClass {
    coords: Vector,
    zero: bool,
}

impl ProjClass {
    pub fn zero_class(n: usize) -> Self {
        ProjClass { coords: vec![Cyclotomic::zero(); n - 2], zero: true }
    }

    /// Canonicalize `[τ_2:…:τ_{n−1}]`; the zero vector gives `[0]`.
    pub fn from_coords(coords: &[Cyclotomic]) -> Self {
        match normalize_line(coords) {
            Some(c) => ProjClass { coords: c, zero: false },
            None => ProjClass { coords: coords.to_vec(), zero: true },
        }
    }

    pub fn coords(&self) -> &[Cyclotomic] {
        &self.coords
    }

    pub fn is_zero_class(&self) -> bool {
        self.zero
    }

    pub fn n(&self) -> usize {
        self.coords.len() + 2
    }

    pub fn key(&self, cond: u32) -> Vec<Rational> {
        if self.zero {
            return vec![];
        }
        vec_key(&promote_vec(&self.coords, cond))
    }

    pub fn render(&self) -> String {
        if self.zero {
            return "[0]".into();
        }
        let parts: Vec<String> = self.coords.iter().map(|c| c.render()).collect();
        format!("[{}]", parts.join(" : "))
    }
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Conjugate τ_1 to 0 and projectivize. Requires λ_1 ≠ 1.
pub fn normalize(rep: &AffineRep) -> Result<ProjClass> {
    let lin = rep.linear();
    if lin.get(1).is_one() {
        return Err(Error::LinearPartFirstTrivial);
    }
    let b = -&(&rep.tau[0] / &(&Cyclotomic::one() - lin.get(1)));
    let d = lin.delta();
    let coords: Vector = (1..rep.n() - 1).map(|k| &rep.tau[k] + &(&b * &d[k])).collect();
    Ok(ProjClass::from_coords(&coords))
}

/// Rotate so that λ_1 ≠ 1, then normalize. Returns the class and the rotation used.
pub fn normalize_rotated(rep: &AffineRep) -> Result<(ProjClass, usize)> {
    let r = rep.linear().first_nontrivial().ok_or(Error::LinearPartFirstTrivial)?;
    Ok((normalize(&rep.rotate(r))?, r))
}

/// Whether two representations are conjugate in Aff(C).
pub fn same_class(a: &AffineRep, b: &AffineRep) -> Result<bool> {
    if a.linear() != b.linear() {
        return Ok(false);
    }
    if a.linear().iota() == 0 {
        // translations only: conjugation rescales τ
        return Ok(parallel(a.tau(), b.tau()) && (a.tau().iter().all(|x| x.is_zero()) == b.tau().iter().all(|x| x.is_zero())));
    }
    Ok(normalize_rotated(a)?.0 == normalize_rotated(b)?.0)
}

fn check_ij(n: usize, i: usize, j: usize) -> Result<()> {
    if !(1 <= i && i < j && j < n) {
        return Err(Error::Index(format!("need 1 <= i < j <= n-1, got i={}, j={}, n={}", i, j, n)));
    }
    Ok(())
}

/// `(n−1)×(n−1)` matrix of `σ_{i,j}^2` on `(τ_1,…,τ_{n−1})`.
pub fn action_matrix_full(lin: &LinearPart, i: usize, j: usize) -> Result<Mat> {
    let n = lin.n();
    check_ij(n, i, j)?;
    let one = Cyclotomic::one();
    let (li, lj) = (lin.get(i), lin.get(j));
    let ai = &one - li;
    let aj = &one - lj;
    let aij = &ai * &aj;
    let mut m = Mat::identity(n - 1);
    // row τ'_i
    m.set(i - 1, i - 1, lj + &aij);
    m.set(i - 1, j - 1, &(&ai * &lin.prod(i, j)) + &(&aij * &lin.prod(i, j - 1)));
    for k in i + 1..j {
        m.set(i - 1, k - 1, &aij * &lin.prod(i, k - 1));
    }
    // row τ'_j
    m.set(j - 1, j - 1, li.clone());
    m.set(j - 1, i - 1, &aj * &lin.prod_inv(i + 1, j - 1));
    for k in i + 1..j {
        m.set(j - 1, k - 1, -&(&aij * &lin.prod_inv(k, j - 1)));
    }
    Ok(m)
}

/// `(n−2)×(n−2)` matrix of `σ_{i,j}^2` on the section coordinates `(τ_2,…,τ_{n−1})`.
pub fn action_matrix_reduced(lin: &LinearPart, i: usize, j: usize) -> Result<Mat> {
    let n = lin.n();
    check_ij(n, i, j)?;
    if lin.get(1).is_one() {
        return Err(Error::LinearPartFirstTrivial);
    }
    if i != 1 {
        let f = action_matrix_full(lin, i, j)?;
        return Ok(Mat::from_fn(n - 2, n - 2, |r, c| f.at(r + 1, c + 1).clone()));
    }
    let one = Cyclotomic::one();
    let l1 = lin.get(1);
    let aj = &one - lin.get(j);
    let p1j = lin.prod(1, j - 1);
    let mut m = Mat::identity(n - 2);
    // index of τ_ν in the section is ν − 2
    for nu in 2..n {
        if nu == j {
            m.set(j - 2, j - 2, l1 - &(&aj * &p1j));
            for k in 2..j {
                let bracket = &(&(&one - l1) * &lin.prod_inv(k, j - 1)) + &(&aj * &lin.prod(1, k - 1));
                m.set(j - 2, k - 2, -&(&aj * &bracket));
            }
        } else {
            let an = &one - lin.get(nu);
            m.set(nu - 2, j - 2, -&(&an * &p1j));
            for k in 2..j {
                let v = m.at(nu - 2, k - 2) - &(&(&an * &aj) * &lin.prod(1, k - 1));
                m.set(nu - 2, k - 2, v);
            }
        }
    }
    Ok(m)
}

/// Full matrix of a λ-preserving braid word, computed from the Hurwitz action on basis tuples.
pub fn word_matrix_full(lin: &LinearPart, w: &BraidWord) -> Result<Mat> {
    let n = lin.n();
    if w.strands() != n {
        return Err(Error::DimensionMismatch("braid strand count".into()));
    }
    let perm = w.permutation();
    if (0..n).any(|p| lin.values()[perm[p]] != lin.values()[p]) {
        return Err(Error::InvalidLinearPart("braid does not preserve the linear part".into()));
    }
    let mut cols = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        let mut e = vec![Cyclotomic::zero(); n - 1];
        e[k] = Cyclotomic::one();
        let rep = AffineRep::new(lin.clone(), e)?;
        cols.push(rep.act(w)?.tau);
    }
    Ok(Mat::from_fn(n - 1, n - 1, |r, c| cols[c][r].clone()))
}

/// Restrict a full action matrix to the section `τ_1 = 0` (conjugating τ_1 back to 0).
pub fn section_matrix(lin: &LinearPart, full: &Mat) -> Result<Mat> {
    let n = lin.n();
    if lin.get(1).is_one() {
        return Err(Error::LinearPartFirstTrivial);
    }
    let d = lin.delta();
    let inv = (&Cyclotomic::one() - lin.get(1)).inv();
    Ok(Mat::from_fn(n - 2, n - 2, |r, c| {
        let b = -&(full.at(0, c + 1) * &inv);
        full.at(r + 1, c + 1) + &(&b * &d[r + 1])
    }))
}

/// Reduced matrix of a pure word; the word acts last letter first, so matrices multiply in order.
pub fn pure_word_matrix(lin: &LinearPart, w: &PureWord) -> Result<Mat> {
    let mut m = Mat::identity(lin.n() - 2);
    for l in w.letters() {
        let g = action_matrix_reduced(lin, l.i, l.j)?.pow(l.exp as i64)?;
        m = &m * &g;
    }
    Ok(m)
}

pub fn apply_pure(class: &ProjClass, w: &PureWord, lin: &LinearPart) -> Result<ProjClass> {
    if class.is_zero_class() {
        return Ok(class.clone());
    }
    if w.letters().iter().any(|l| l.j >= lin.n()) {
        return Err(Error::Index("pure generators must satisfy j <= n-1".into()));
    }
    let m = pure_word_matrix(lin, w)?;
    Ok(ProjClass::from_coords(&m.mul_vec(class.coords())))
}

/// Generators `M_{i,j}^{±1}` of the projective action, skipping identities.
pub fn reduced_generators(lin: &LinearPart) -> Result<Vec<(PureLetter, Mat)>> {
    let n = lin.n();
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            let m = action_matrix_reduced(lin, i, j)?;
            if m.is_identity() {
                continue;
            }
            let inv = m.inverse()?;
            out.push((PureLetter { i, j, exp: 1 }, m));
            out.push((PureLetter { i, j, exp: -1 }, inv));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OrbitResult {
    /// Points in discovery order.
    pub points: Vec<ProjClass>,
    pub size: usize,
    pub exceeded_bound: bool,
    /// Rotation applied before normalizing, when the input was a representation.
    pub rotation: usize,
    parents: Vec<Option<(usize, PureLetter)>>,
    n: usize,
}

impl OrbitResult {
    /// Points sorted by their rendering.
    pub fn sorted_points(&self) -> Vec<ProjClass> {
        let mut v = self.points.clone();
        v.sort_by_cached_key(|p| p.render());
        v
    }

    /// A pure word carrying the start point to `points[idx]`.
    pub fn witness(&self, idx: usize) -> PureWord {
        let mut letters = Vec::new();
        let mut cur = idx;
        while let Some((p, l)) = self.parents[cur] {
            letters.push(l);
            cur = p;
        }
        // the letter applied last acts first, i.e. stands rightmost
        PureWord::new(self.n, letters).expect("generator indices are valid")
    }
}

/// Breadth-first closure of a class under all `M_{i,j}^{±1}`.
pub fn orbit(class: &ProjClass, lin: &LinearPart, bound: usize) -> Result<OrbitResult> {
    let n = lin.n();
    if class.n() != n {
        return Err(Error::DimensionMismatch("class and linear part sizes differ".into()));
    }
    let single = |exceeded| OrbitResult {
        points: vec![class.clone()],
        size: 1,
        exceeded_bound: exceeded,
        rotation: 0,
        parents: vec![None],
        n,
    };
    if class.is_zero_class() {
        return Ok(single(false));
    }
    let cond = lin.conductor().max(1);
    let cond = crate::cyclo::common_conductor(class.coords().iter().chain(std::iter::once(&Cyclotomic::zeta(cond, 1))));
    let gens: Vec<(PureLetter, Mat)> = reduced_generators(lin)?.into_iter().map(|(l, m)| (l, m.promoted(cond))).collect();
    let start = ProjClass { coords: promote_vec(class.coords(), cond), zero: false };
    let mut seen: HashMap<Vec<Rational>, usize> = HashMap::new();
    seen.insert(start.key(cond), 0);
    let mut points = vec![start];
    let mut parents = vec![None];
    let mut frontier = vec![0usize];
    let mut exceeded = false;
    'outer: while !frontier.is_empty() {
        let expand = |&idx: &usize| -> Vec<(usize, PureLetter, ProjClass, Vec<Rational>)> {
            let p = &points[idx];
            gens.iter()
                .map(|(l, m)| {
                    let c = ProjClass::from_coords(&m.mul_vec(p.coords()));
                    let k = c.key(cond);
                    (idx, *l, c, k)
                })
                .collect()
        };
        let images: Vec<_> =
            if frontier.len() > 64 { frontier.par_iter().map(expand).collect() } else { frontier.iter().map(expand).collect() };
        let mut next = Vec::new();
        for batch in images {
            for (from, l, c, k) in batch {
                if seen.contains_key(&k) {
                    continue;
                }
                seen.insert(k, points.len());
                next.push(points.len());
                points.push(c);
                parents.push(Some((from, l)));
                if points.len() > bound {
                    exceeded = true;
                    break 'outer;
                }
            }
        }
        frontier = next;
    }
    let size = points.len();
    Ok(OrbitResult { points, size, exceeded_bound: exceeded, rotation: 0, parents, n })
}

/// Orbit of the class of a representation, rotating first when λ_1 = 1.
pub fn orbit_of_rep(rep: &AffineRep, bound: usize) -> Result<OrbitResult> {
    let (class, r) = normalize_rotated(rep)?;
    let mut res = orbit(&class, &rep.linear().rotate(r), bound)?;
    res.rotation = r;
    Ok(res)
}

/// Number of `g` in `group` mapping the line through `coords` to itself.
pub fn stabilizer_of_class_in_group(coords: &[Cyclotomic], group: &[Mat]) -> usize {
    group.iter().filter(|g| parallel(&g.mul_vec(coords), coords)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::pure_sigma_ij;
    use crate::cyclo::z;

    fn lam(v: &[(u32, i64)]) -> LinearPart {
        LinearPart::new(v.iter().map(|&(n, k)| z(n, k)).collect()).unwrap()
    }

    fn tetra() -> LinearPart {
        lam(&[(12, 1), (12, 5), (12, 3), (12, 3)])
    }

    #[test]
    fn linear_part_checks() {
        assert!(LinearPart::new(vec![z(3, 1), z(3, 1), z(3, 2)]).is_err());
        let l = tetra();
        assert_eq!(l.iota(), 4);
        assert!(l.all_roots_of_unity());
        let f = LinearPart::from_first(vec![z(5, 1), z(5, 1), z(5, 1)]).unwrap();
        assert_eq!(f.get(4), &z(5, 2));
    }

    #[test]
    fn conjugation() {
        let l = tetra();
        let eta3 = z(12, 3);
        let rep = AffineRep::new(l.clone(), vec![eta3.clone(), Cyclotomic::zero(), Cyclotomic::zero()]).unwrap();
        assert_eq!(rep.conjugate(&Cyclotomic::one(), &Cyclotomic::zero()).unwrap(), rep);
        let b = -&(&eta3 / &(&Cyclotomic::one() - l.get(1)));
        assert!(rep.conjugate(&Cyclotomic::one(), &b).unwrap().tau()[0].is_zero());
        let d = AffineRep::new(l.clone(), l.delta()).unwrap();
        let c = d.conjugate(&Cyclotomic::one(), &Cyclotomic::from_int(-1)).unwrap();
        assert!(c.tau().iter().all(|x| x.is_zero()));
        assert_eq!(rep.conjugate(&Cyclotomic::zero(), &b), Err(Error::ZeroScale));
        assert!(normalize(&d).unwrap().is_zero_class());
    }

    #[test]
    fn normalize_section_point() {
        let l = lam(&[(5, 1), (5, 2), (5, 3), (5, 4)]);
        let rep = AffineRep::new(l, vec![Cyclotomic::zero(), Cyclotomic::one(), Cyclotomic::zero()]).unwrap();
        assert_eq!(normalize(&rep).unwrap().render(), "[1 : 0]");
    }

    #[test]
    fn first_trivial_requires_rotation() {
        let l = lam(&[(1, 0), (3, 1), (3, 2), (1, 0)]);
        let rep = AffineRep::new(l, vec![Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::one()]).unwrap();
        assert_eq!(normalize(&rep), Err(Error::LinearPartFirstTrivial));
        let (_, r) = normalize_rotated(&rep).unwrap();
        assert_eq!(r, 1);
    }

    #[test]
    fn reduced_n4_matrices() {
        let l = tetra();
        let (l1, l2, l3) = (l.get(1).clone(), l.get(2).clone(), l.get(3).clone());
        let one = Cyclotomic::one();
        let a3 = Mat::from_rows(vec![vec![&l1 * &l2, Cyclotomic::zero()], vec![&l1 * &(&l3 - &one), one.clone()]]);
        let a1 = Mat::from_rows(vec![vec![&(&l2 * &(&l3 - &one)) + &one, &l2 * &(&one - &l2)], vec![&one - &l3, l2.clone()]]);
        assert_eq!(action_matrix_reduced(&l, 1, 2).unwrap(), a3);
        assert_eq!(action_matrix_reduced(&l, 2, 3).unwrap(), a1);
    }

    #[test]
    fn formula_matrices_match_hurwitz() {
        let l = lam(&[(7, 1), (7, 3), (7, 5), (7, 2), (7, 3)]);
        for i in 1..5 {
            for j in i + 1..5 {
                let w = pure_sigma_ij(5, i, j).unwrap();
                let full = word_matrix_full(&l, &w).unwrap();
                assert_eq!(action_matrix_full(&l, i, j).unwrap(), full, "full {i},{j}");
                assert_eq!(action_matrix_reduced(&l, i, j).unwrap(), section_matrix(&l, &full).unwrap(), "reduced {i},{j}");
            }
        }
    }

    #[test]
    fn hessian_sigma_matrices() {
        let zeta = z(6, 1);
        let l = LinearPart::new(vec![zeta.clone(), zeta.clone(), zeta.clone(), zeta.clone(), zeta.pow(2)]).unwrap();
        let a: Vec<Mat> = (1..=3)
            .map(|i| section_matrix(&l, &word_matrix_full(&l, &BraidWord::sigma(5, i).unwrap()).unwrap()).unwrap())
            .collect();
        let c = |x: i64| Cyclotomic::from_int(x);
        let z2 = zeta.pow(2);
        let a1 = Mat::from_rows(vec![vec![-&zeta, c(0), c(0)], vec![-&zeta, c(1), c(0)], vec![-&zeta, c(0), c(1)]]);
        let a2 = Mat::from_rows(vec![vec![-&z2, zeta.clone(), c(0)], vec![c(1), c(0), c(0)], vec![c(0), c(0), c(1)]]);
        let a3 = Mat::from_rows(vec![vec![c(1), c(0), c(0)], vec![c(0), -&z2, zeta.clone()], vec![c(0), c(1), c(0)]]);
        assert_eq!(a, vec![a1, a2, a3]);
        assert!(crate::braid::check_braid_relations(&a, false));
        let swapped = [a[2].pow(2).unwrap(), a[1].clone(), a[2].clone()];
        assert!(!crate::braid::check_braid_relations(&swapped, false));
        let s13 = section_matrix(&l, &word_matrix_full(&l, &pure_sigma_ij(5, 1, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(s13, action_matrix_reduced(&l, 1, 3).unwrap());
        for x in &a {
            assert_eq!(x.order(10), Some(3));
        }
    }

    #[test]
    fn tetrahedral_orbit_size() {
        let l = tetra();
        let rep = AffineRep::new(l.clone(), vec![z(12, 3), Cyclotomic::zero(), Cyclotomic::zero()]).unwrap();
        let o = orbit_of_rep(&rep, 1000).unwrap();
        assert_eq!(o.size, 4);
        assert!(!o.exceeded_bound);
        let start = &o.points[0];
        for (idx, p) in o.points.iter().enumerate() {
            assert_eq!(&apply_pure(start, &o.witness(idx), &l).unwrap(), p);
        }
        let zc = ProjClass::zero_class(4);
        assert_eq!(orbit(&zc, &l, 10).unwrap().size, 1);
    }

    #[test]
    fn stabilizer_trivial_group() {
        let c = vec![Cyclotomic::one(), Cyclotomic::from_int(2)];
        assert_eq!(stabilizer_of_class_in_group(&c, &[Mat::identity(2)]), 1);
    }
}

//! Dense exact linear algebra over `Cyclotomic`.

use crate::cyclo::{common_conductor, Cyclotomic};
use crate::error::{Error, Result};
use crate::rational::Rational;
use std::fmt;
use std::ops::Mul;

pub type Vector = Vec<Cyclotomic>;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Cyclotomic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Cyclotomic::one();
        }
        m
    }

    pub fn diag(d: &[Cyclotomic]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Column matrix from a vector.
    pub fn column(v: &[Cyclotomic]) -> Self {
        Mat { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Promote all entries to a common conductor and return it.
    pub fn unify(&mut self) -> u32 {
        crate::cyclo::unify_all(&mut self.data)
    }

    pub fn promoted(&self, m: u32) -> Self {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.promote(m)).collect() }
    }

    pub fn conductor(&self) -> u32 {
        common_conductor(self.data.iter())
    }

    /// Hash key; meaningful only among matrices stored at one conductor.
    pub fn key(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for x in &self.data {
            x.key_into(&mut out);
        }
        out
    }

    pub fn try_mul(&self, o: &Mat) -> Result<Mat> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut data = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc: Option<Cyclotomic> = None;
                for k in 0..self.cols {
                    let a = self.at(i, k);
                    let b = o.at(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    acc = Some(match acc {
                        None => p,
                        Some(s) => &s + &p,
                    });
                }
                data.push(acc.unwrap_or_else(|| Cyclotomic::zero_in(self.at(i, 0).conductor())));
            }
        }
        Ok(Mat { rows: self.rows, cols: o.cols, data })
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc: Option<Cyclotomic> = None;
                for (k, x) in v.iter().enumerate() {
                    let a = self.at(i, k);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    let p = a * x;
                    acc = Some(match acc {
                        None => p,
                        Some(s) => &s + &p,
                    });
                }
                acc.unwrap_or_else(|| Cyclotomic::zero_in(v[0].conductor()))
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| if i == j { self.at(i, j).is_one() } else { self.at(i, j).is_zero() }))
    }

    /// The scalar c if the matrix equals c*I.
    pub fn scalar_value(&self) -> Option<Cyclotomic> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.at(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.at(i, j);
                let ok = if i == j { x == c } else { x.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c.clone())
    }

    pub fn trace(&self) -> Cyclotomic {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Cyclotomic::zero(), |s, i| &s + self.at(i, i))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        m.unify();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.at(r, c).inv();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) - &(&f * m.at(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space basis, returned in reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let cond = r.conductor();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Cyclotomic::zero_in(cond); self.cols];
            v[f] = Cyclotomic::rational_in(Rational::from_int(1), cond);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, f);
            }
            basis.push(v);
        }
        canonical_basis(&basis)
    }

    pub fn det(&self) -> Cyclotomic {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        m.unify();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Cyclotomic::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.at(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) * &inv;
                for j in c..n {
                    let v = m.at(i, j) - &(&f * m.at(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(Mat::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Mat> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Mat::identity(self.rows);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Smallest k <= bound with m^k = I.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Smallest k <= bound with m^k scalar.
    pub fn projective_order(&self, bound: u64) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.scalar_value().is_some() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// For a complex reflection (rank(m - I) = 1) returns its nontrivial eigenvalue.
    pub fn reflection_eigenvalue(&self) -> Option<Cyclotomic> {
        if !self.is_square() {
            return None;
        }
        let d = self.sub(&Mat::identity(self.rows));
        if d.rank() != 1 {
            return None;
        }
        Some(&self.trace() - &Cyclotomic::from_int(self.rows as i64 - 1))
    }

    pub fn is_complex_reflection(&self) -> bool {
        self.reflection_eigenvalue().is_some()
    }

    /// Basis of ker(m - ev I).
    pub fn eigenspace(&self, ev: &Cyclotomic) -> Vec<Vector> {
        let shifted = self.sub(&Mat::identity(self.rows).scale(ev));
        shifted.kernel()
    }

    /// Eigenvalues among the `order`-th roots of unity, for a matrix with m^order = I
    /// (or any matrix, in which case only the root-of-unity eigenvalues are found).
    pub fn root_of_unity_eigenvalues(&self, order: u64) -> Vec<Cyclotomic> {
        let mut out = Vec::new();
        for k in 0..order as i64 {
            let z = Cyclotomic::zeta(order as u32, k);
            if self.sub(&Mat::identity(self.rows).scale(&z)).rank() < self.rows {
                out.push(z);
            }
        }
        out
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.at(i, j).render()).collect()).collect()
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Mul<Mat> for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in self.render_rows() {
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row-reduce a list of vectors; the nonzero rows form a canonical basis of their span.
pub fn canonical_basis(vs: &[Vector]) -> Vec<Vector> {
    if vs.is_empty() {
        return vec![];
    }
    let (r, pivots) = Mat::from_rows(vs.to_vec()).rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

/// Scale so that the first nonzero coordinate is 1; None for the zero vector.
pub fn normalize_line(v: &[Cyclotomic]) -> Option<Vector> {
    let p = v.iter().position(|x| !x.is_zero())?;
    let inv = v[p].inv();
    Some(
        v.iter()
            .enumerate()
            .map(|(i, x)| if i == p { Cyclotomic::rational_in(Rational::from_int(1), x.conductor()) } else { x * &inv })
            .collect(),
    )
}

/// Whether u and v span the same line (both nonzero).
pub fn parallel(u: &[Cyclotomic], v: &[Cyclotomic]) -> bool {
    let n = u.len();
    for i in 0..n {
        for j in i + 1..n {
            if &u[i] * &v[j] != &u[j] * &v[i] {
                return false;
            }
        }
    }
    true
}

pub fn dot(u: &[Cyclotomic], v: &[Cyclotomic]) -> Cyclotomic {
    u.iter().zip(v).fold(Cyclotomic::zero(), |s, (a, b)| &s + &(a * b))
}

pub fn vec_key(v: &[Cyclotomic]) -> Vec<Rational> {
    let mut out = Vec::new();
    for x in v {
        x.key_into(&mut out);
    }
    out
}

pub fn promote_vec(v: &[Cyclotomic], m: u32) -> Vector {
    v.iter().map(|x| x.promote(m)).collect()
}

/// Matrix scaled so that its first nonzero entry is 1.
pub fn projective_normal(m: &Mat) -> Mat {
    match m.data.iter().find(|x| !x.is_zero()) {
        Some(p) => m.scale(&p.inv()),
        None => m.clone(),
    }
}

fn closure_with(gens: &[Mat], bound: usize, normal: impl Fn(&Mat) -> Mat) -> Result<Vec<Mat>> {
    let Some(first) = gens.first() else {
        return Ok(vec![]);
    };
    let cond = common_conductor(gens.iter().flat_map(|g| g.data.iter()));
    let gens: Vec<Mat> = gens.iter().map(|g| g.promoted(cond)).collect();
    let id = normal(&Mat::identity(first.rows).promoted(cond));
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.key());
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in &gens {
            let h = normal(&(&elems[i] * g));
            if seen.insert(h.key()) {
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

/// All products of the generators (a finite group is assumed; `bound` guards the size).
pub fn group_closure(gens: &[Mat], bound: usize) -> Result<Vec<Mat>> {
    closure_with(gens, bound, |m| m.clone())
}

/// Closure in PGL: elements are stored in `projective_normal` form.
pub fn projective_closure(gens: &[Mat], bound: usize) -> Result<Vec<Mat>> {
    closure_with(gens, bound, projective_normal)
}

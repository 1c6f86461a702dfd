//! Compact exact matrices with entries in `(1/3)·Z[ω]`, ω a primitive cube root of unity.
//!
//! Used to enumerate the large reflection groups without allocating
//! big rationals per entry. Products that would leave `(1/3)·Z[ω]` are reported.

use crate::cyclo::{z, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rational::Rational;
use num_complex::Complex64;
use num_traits::ToPrimitive;

/// `(a + bω) / 3`, stored as `[a, b]`.
pub type Eis = [i64; 2];

const DEN: i64 = 3;

fn eis_mul_raw(x: Eis, y: Eis) -> Eis {
    let (a, b, c, d) = (x[0], x[1], y[0], y[1]);
    [a * c - b * d, a * d + b * c - b * d]
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisMat {
    dim: usize,
    num: Vec<Eis>,
}

impl EisMat {
    pub fn identity(dim: usize) -> Self {
        let mut num = vec![[0, 0]; dim * dim];
        for i in 0..dim {
            num[i * dim + i] = [DEN, 0];
        }
        EisMat { dim, num }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Eis {
        self.num[i * self.dim + j]
    }

    pub fn try_mul(&self, o: &EisMat) -> Result<EisMat> {
        let d = self.dim;
        let mut num = vec![[0i64, 0i64]; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = [0i64, 0i64];
                for k in 0..d {
                    let p = eis_mul_raw(self.num[i * d + k], o.num[k * d + j]);
                    acc[0] += p[0];
                    acc[1] += p[1];
                }
                if acc[0] % DEN != 0 || acc[1] % DEN != 0 {
                    return Err(Error::DimensionMismatch("product leaves (1/3)Z[w]".into()));
                }
                num[i * d + j] = [acc[0] / DEN, acc[1] / DEN];
            }
        }
        Ok(EisMat { dim: d, num })
    }

    pub fn is_identity(&self) -> bool {
        *self == EisMat::identity(self.dim)
    }

    /// Whether `self − c·I` has rank exactly one, `c = (a + bω)/3`.
    pub fn minus_scalar_has_rank_one(&self, c: Eis) -> bool {
        let d = self.dim;
        let m: Vec<Eis> = (0..d * d)
            .map(|k| if k / d == k % d { [self.num[k][0] - c[0], self.num[k][1] - c[1]] } else { self.num[k] })
            .collect();
        if m.iter().all(|x| *x == [0, 0]) {
            return false;
        }
        for i1 in 0..d {
            for i2 in i1 + 1..d {
                for j1 in 0..d {
                    for j2 in j1 + 1..d {
                        let p = eis_mul_raw(m[i1 * d + j1], m[i2 * d + j2]);
                        let q = eis_mul_raw(m[i1 * d + j2], m[i2 * d + j1]);
                        if p != q {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Eis {
        (0..self.dim).fold([0, 0], |acc, i| [acc[0] + self.num[i * self.dim + i][0], acc[1] + self.num[i * self.dim + i][1]])
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        self.num.iter().map(|e| (Complex64::new(e[0] as f64, 0.0) + w * e[1] as f64) / DEN as f64).collect()
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_fn(self.dim, self.dim, |i, j| eis_to_cyclo(self.entry(i, j)))
    }

    /// Exact conversion; fails for entries outside `(1/3)·Z[ω]`.
    pub fn from_mat(m: &Mat) -> Result<EisMat> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("square matrix expected".into()));
        }
        let num = m.entries().iter().map(cyclo_to_eis).collect::<Result<Vec<_>>>()?;
        Ok(EisMat { dim: m.rows(), num })
    }
}

pub fn eis_to_cyclo(e: Eis) -> Cyclotomic {
    let third = Rational::new(1, DEN);
    let a = Cyclotomic::from_rational(&Rational::from_int(e[0]) * &third);
    let b = &Cyclotomic::from_rational(&Rational::from_int(e[1]) * &third) * &z(3, 1);
    &a + &b
}

fn small(r: &Rational) -> Result<i64> {
    let s = r.mul_int(DEN);
    if !s.is_integer() {
        return Err(Error::DimensionMismatch(format!("{} is outside (1/3)Z[w]", r)));
    }
    s.numer().to_i64().ok_or_else(|| Error::DimensionMismatch("entry too large".into()))
}

pub fn cyclo_to_eis(c: &Cyclotomic) -> Result<Eis> {
    let k = c.coeffs();
    match c.conductor() {
        1 => Ok([small(&k[0])?, 0]),
        3 => Ok([small(&k[0])?, small(&k[1])?]),
        // ζ_6 = 1 + ω
        6 => Ok([small(&(&k[0] + &k[1]))?, small(&k[1])?]),
        n => Err(Error::DimensionMismatch(format!("conductor {} is not in Q(w)", n))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_product() {
        let w = z(3, 1);
        let m = Mat::from_rows(vec![vec![Cyclotomic::one(), w.clone()], vec![&(&w * &w) - &Cyclotomic::one(), z(6, 1)]]);
        let e = EisMat::from_mat(&m).unwrap();
        assert_eq!(e.to_mat(), m);
        assert_eq!(e.try_mul(&e).unwrap().to_mat(), &m * &m);
        assert!(EisMat::from_mat(&Mat::identity(2).scale(&z(4, 1))).is_err());
    }
}

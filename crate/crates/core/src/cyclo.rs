//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! An element is stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
//! modulo the N-th cyclotomic polynomial, with `zeta_N = exp(2 pi i / N)`.
//! Mixed conductors are promoted to their lcm; results are never demoted, and
//! equality does not depend on the stored conductor.

use crate::error::{Error, Result};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

/// Per-conductor reduction data.
struct Field {
    phi: usize,
    /// `powers[j]` is z^j reduced mod Phi_N, for 0 <= j < N.
    powers: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field(n: u32) -> Arc<Field> {
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    if phi == 1 {
        // Phi_1 = x - 1, Phi_2 = x + 1: z is the constant -poly[0].
        let z = -poly[0];
        let mut v = 1i64;
        for _ in 0..n {
            powers.push(vec![v]);
            v *= z;
        }
    } else {
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by z and reduce the z^phi term
            let top = cur[phi - 1];
            for t in (1..phi).rev() {
                cur[t] = cur[t - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for t in 0..phi {
                    cur[t] -= top * poly[t];
                }
            }
        }
    }
    let f = Arc::new(Field { phi, powers });
    field_cache().write().unwrap().insert(n, f.clone());
    f
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut m = n;
    let mut res = n as usize;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            res -= res / p as usize;
        }
        p += 1;
    }
    if m > 1 {
        res -= res / m as usize;
    }
    res
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficients of Phi_N in ascending degree, obtained by dividing x^N - 1 by
/// Phi_d for every proper divisor d of N.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic_polynomial: N must be positive");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return (**p).clone();
    }
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let den = cyclotomic_polynomial(d as u32);
        num = exact_div_monic(&num, &den);
    }
    let out: Vec<i64> = num.into_iter().map(|c| c as i64).collect();
    poly_cache().write().unwrap().insert(n, Arc::new(out.clone()));
    out
}

fn exact_div_monic(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dd = den.len() - 1;
    let mut r = num.to_vec();
    let qlen = num.len() - dd;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = r[i + dd];
        q[i] = c;
        if c != 0 {
            for (t, &dc) in den.iter().enumerate() {
                r[i + t] -= c * dc as i128;
            }
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0), "inexact cyclotomic division");
    q
}

fn lcm32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero_in(n: u32) -> Self {
        assert!(n >= 1);
        Cyclotomic { n, c: vec![Rational::zero(); totient(n)] }
    }

    pub fn zero() -> Self {
        Self::zero_in(1)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_int(k))
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { n: 1, c: vec![r] }
    }

    pub fn rational_in(r: Rational, n: u32) -> Self {
        let mut z = Self::zero_in(n);
        z.c[0] = r;
        z
    }

    pub fn from_coeffs(n: u32, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), totient(n), "coefficient vector must have length phi(N)");
        Cyclotomic { n, c }
    }

    /// zeta_N^k with zeta_N = exp(2 pi i / N).
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "zeta: N must be positive");
        let f = field(n);
        let j = k.rem_euclid(n as i64) as usize;
        let c = f.powers[j].iter().map(|&v| Rational::from_int(v)).collect();
        Cyclotomic { n, c }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|r| r.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(|r| r.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Re-express in Q(zeta_M); M must be a multiple of the stored conductor.
    pub fn promote(&self, m: u32) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "promote: {} does not divide {}", self.n, m);
        let f = field(m);
        let step = (m / self.n) as usize;
        let mut out = vec![Rational::zero(); f.phi];
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (t, &v) in f.powers[k * step].iter().enumerate() {
                if v != 0 {
                    out[t] += &ck.mul_int(v);
                }
            }
        }
        Cyclotomic { n: m, c: out }
    }

    fn unify<'a>(a: &'a Self, b: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if a.n == b.n {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let m = lcm32(a.n, b.n);
            let a2 = if a.n == m { Cow::Borrowed(a) } else { Cow::Owned(a.promote(m)) };
            let b2 = if b.n == m { Cow::Borrowed(b) } else { Cow::Owned(b.promote(m)) };
            (a2, b2)
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        let (a, b) = Self::unify(self, o);
        let c = a.c.iter().zip(b.c.iter()).map(|(x, y)| x + y).collect();
        Cyclotomic { n: a.n, c }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let (a, b) = Self::unify(self, o);
        let c = a.c.iter().zip(b.c.iter()).map(|(x, y)| x - y).collect();
        Cyclotomic { n: a.n, c }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if let Some(r) = o.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(&r);
        }
        let (a, b) = Self::unify(self, o);
        let n = a.n;
        let f = field(n);
        let phi = f.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += &(x * y);
            }
        }
        let mut out: Vec<Rational> = prod[..phi].to_vec();
        for d in phi..prod.len() {
            let cd = &prod[d];
            if cd.is_zero() {
                continue;
            }
            for (t, &v) in f.powers[d % n as usize].iter().enumerate() {
                if v != 0 {
                    out[t] += &cd.mul_int(v);
                }
            }
        }
        Cyclotomic { n, c: out }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::rational_in(r.recip(), self.n));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.n).into_iter().map(Rational::from_int).collect();
        let a = trim(self.c.clone());
        // extended Euclid: track s with s*a = r (mod Phi)
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        debug_assert_eq!(r0.len(), 1, "element shares a factor with Phi_N");
        let inv_c = r0[0].recip();
        let phi = self.c.len();
        let (_, s) = poly_divrem(&s0, &cyclotomic_polynomial(self.n).into_iter().map(Rational::from_int).collect::<Vec<_>>());
        let mut out = vec![Rational::zero(); phi];
        for (i, v) in s.into_iter().enumerate() {
            out[i] = &v * &inv_c;
        }
        Ok(Cyclotomic { n: self.n, c: out })
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.try_inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Cyclotomic::rational_in(Rational::one(), self.n);
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
        acc
    }

    /// Smallest m >= 1 with x^m = 1, if x is a root of unity.
    pub fn order_of_root(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let l = (self.n as u64).lcm(&2);
        if !self.pow(l as i64).is_one() {
            return None;
        }
        let mut ord = l;
        for p in prime_factors(l) {
            while ord % p == 0 && self.pow((ord / p) as i64).is_one() {
                ord /= p;
            }
        }
        Some(ord)
    }

    /// Write a root of unity as zeta_m^k with m its order and gcd(k, m) = 1.
    pub fn root_exponent(&self) -> Result<(u32, i64)> {
        let m = self.order_of_root().ok_or(Error::NotRootOfUnity)? as u32;
        for k in 0..m.max(1) as i64 {
            if (k as u32).gcd(&m) != 1 && m != 1 {
                continue;
            }
            if &Cyclotomic::zeta(m, k) == self {
                return Ok((m, k));
            }
        }
        Err(Error::NotRootOfUnity)
    }

    /// Principal square root of a root of unity: zeta_M^k maps to zeta_{2M}^k.
    pub fn sqrt_of_root(&self) -> Result<Self> {
        let (m, k) = self.root_exponent()?;
        Ok(Cyclotomic::zeta(2 * m, k))
    }

    /// Galois automorphism zeta_N -> zeta_N^k, for gcd(k, N) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n;
        assert_eq!((k.rem_euclid(n as i64) as u32).gcd(&n), 1, "galois: exponent must be a unit");
        let f = field(n);
        let mut out = vec![Rational::zero(); f.phi];
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let idx = ((j as i64 * k).rem_euclid(n as i64)) as usize;
            for (t, &v) in f.powers[idx].iter().enumerate() {
                if v != 0 {
                    out[t] += &cj.mul_int(v);
                }
            }
        }
        Cyclotomic { n, c: out }
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let th = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            s += Complex64::from_polar(ck.to_f64(), th);
        }
        s
    }

    /// Text form at the smallest conductor, terms sorted by exponent; `parse_cyclo` reads it back.
    pub fn render(&self) -> String {
        let r = self.reduced();
        if let Some(q) = r.as_rational() {
            return q.to_string();
        }
        let mut out = String::new();
        for (k, ck) in r.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            if out.is_empty() {
                if ck.is_negative() {
                    out.push('-');
                }
            } else if ck.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = ck.abs();
            let power = match k {
                0 => String::new(),
                1 => format!("z{}", r.n),
                _ => format!("z{}^{}", r.n, k),
            };
            match (power.is_empty(), a.is_one()) {
                (true, _) => out.push_str(&a.to_string()),
                (false, true) => out.push_str(&power),
                (false, false) => out.push_str(&format!("{}*{}", a, power)),
            }
        }
        out
    }

    /// The same value stored at the smallest conductor whose field contains it.
    pub fn reduced(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q);
        }
        for d in divisors(self.n as u64) {
            let d = d as u32;
            if d == self.n {
                break;
            }
            if let Some(x) = self.express_in(d) {
                return x;
            }
        }
        self.clone()
    }

    /// Coordinates in the power basis of Q(zeta_d), if the value lies there.
    fn express_in(&self, d: u32) -> Option<Self> {
        let pd = totient(d);
        let cols: Vec<Vec<Rational>> = (0..pd).map(|k| Self::zeta(d, k as i64).promote(self.n).c).collect();
        let mut rows: Vec<Vec<Rational>> =
            (0..self.c.len()).map(|i| cols.iter().map(|col| col[i].clone()).chain([self.c[i].clone()]).collect()).collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..pd {
            let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
            rows.swap(pivot_row, p);
            let inv = &Rational::one() / &rows[pivot_row][col];
            for x in rows[pivot_row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows.len() {
                if r != pivot_row && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in 0..=pd {
                        let t = &f * &rows[pivot_row][j];
                        rows[r][j] -= &t;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if rows[pivot_row..].iter().any(|r| !r[pd].is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); pd];
        for (r, &col) in pivots.iter().enumerate() {
            x[col] = rows[r][pd].clone();
        }
        Some(Cyclotomic { n: d, c: x })
    }

    /// Hash key valid among elements that share a conductor.
    pub fn key_into(&self, out: &mut Vec<Rational>) {
        out.extend(self.c.iter().cloned());
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (t, bt) in b.iter().enumerate() {
            r[shift + t] -= &(&c * bt);
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = Cyclotomic::unify(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Cyclotomic::from_int(k)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$imp(rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$imp(rhs)
            }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$imp(&rhs)
            }
        }
    };
}
binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Cyclotomic {
    fn div_ref(&self, o: &Self) -> Self {
        self.try_div(o).expect("division by zero")
    }
}
binop!(Div, div, div_ref);

impl<'a> Neg for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Shorthand for `Cyclotomic::zeta`.
pub fn z(n: u32, k: i64) -> Cyclotomic {
    Cyclotomic::zeta(n, k)
}

pub fn q(n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_rational(Rational::new(n, d))
}

// ---------------------------------------------------------------------------
// Literal grammar
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := rational | 'z' INT | '(' expr ')' | '-' factor
//   rational := INT ('/' INT)?

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: expected one of [{}], found {}", self.pos, self.expected.join(", "), self.found)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        }
    }

    fn err(&mut self, expected: &[&str]) -> ParseError {
        let found = self.found();
        ParseError { pos: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        }
    }

    fn expr(&mut self) -> std::result::Result<Cyclotomic, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Cyclotomic, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    acc = acc.try_div(&d).map_err(|_| ParseError {
                        pos: at,
                        expected: vec!["nonzero divisor".into()],
                        found: "zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> std::result::Result<Cyclotomic, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let d = self.digits().ok_or_else(|| self.err(&["integer exponent"]))?;
            let e: i64 = d.parse().map_err(|_| ParseError {
                pos: at,
                expected: vec!["exponent fitting in 64 bits".into()],
                found: d.to_string(),
            })?;
            if neg && base.is_zero() {
                return Err(ParseError { pos: at, expected: vec!["nonzero base".into()], found: "zero".into() });
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> std::result::Result<Cyclotomic, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(&[")", "+", "-", "*", "/", "^"]));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'z') => {
                self.pos += 1;
                // conductor digits must follow immediately
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(ParseError {
                        pos: start,
                        expected: vec!["conductor digits".into()],
                        found: match self.s.get(start) {
                            Some(c) => format!("'{}'", *c as char),
                            None => "end of input".into(),
                        },
                    });
                }
                let d = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let n: u32 = d.parse().ok().filter(|&n| n >= 1).ok_or(ParseError {
                    pos: start,
                    expected: vec!["positive conductor".into()],
                    found: d.to_string(),
                })?;
                Ok(Cyclotomic::zeta(n, 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                // a '/' directly followed by digits belongs to the literal
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    if let Some(d) = self.digits() {
                        let den: BigInt = d.parse().unwrap();
                        if den == BigInt::from(0) {
                            return Err(ParseError { pos: at, expected: vec!["nonzero denominator".into()], found: "0".into() });
                        }
                        return Ok(Cyclotomic::from_rational(Rational::from_bigints(num, den)));
                    }
                    self.pos = save;
                }
                Ok(Cyclotomic::from_rational(Rational::from_bigints(num, BigInt::from(1))))
            }
            _ => Err(self.err(&["integer", "z<N>", "(", "-"])),
        }
    }
}

/// Parse a cyclotomic literal such as `z12^5 + 1/2` or `(1 - z3)^2`.
pub fn parse_cyclo(text: &str) -> std::result::Result<Cyclotomic, ParseError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(&["+", "-", "*", "/", "^", "end of input"]));
    }
    Ok(v)
}

impl FromStr for Cyclotomic {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse_cyclo(s)
    }
}

/// Promote every entry to the lcm of all conductors.
pub fn unify_all(xs: &mut [Cyclotomic]) -> u32 {
    let m = xs.iter().fold(1u32, |m, x| lcm32(m, x.n));
    for x in xs.iter_mut() {
        if x.n != m {
            *x = x.promote(m);
        }
    }
    m
}

pub fn common_conductor<'a>(xs: impl IntoIterator<Item = &'a Cyclotomic>) -> u32 {
    xs.into_iter().fold(1u32, |m, x| lcm32(m, x.n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_105_has_a_two() {
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn zeta_basics() {
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert_eq!(&z(6, 1) + &z(6, 5), Cyclotomic::one());
        assert_eq!(z(12, 6), Cyclotomic::from_int(-1));
        assert_eq!(z(5, 7), z(5, 2));
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn field_ops() {
        let x = &z(12, 5) + &Cyclotomic::from_int(3);
        assert!((&x * &x.inv()).is_one());
        let a = &Cyclotomic::one() - &z(3, 1);
        let b = &Cyclotomic::one() - &z(3, 2);
        assert_eq!(&a * &b, Cyclotomic::from_int(3));
        assert_eq!(&z(4, 1) * &z(3, 1), z(12, 7));
        assert!(Cyclotomic::zero_in(7).try_inv().is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(z(12, 5).order_of_root(), Some(12));
        assert_eq!(Cyclotomic::from_int(2).order_of_root(), None);
        assert_eq!((-z(3, 1)).order_of_root(), Some(6));
        assert_eq!(Cyclotomic::one().order_of_root(), Some(1));
        assert_eq!(Cyclotomic::from_int(-1).order_of_root(), Some(2));
    }

    #[test]
    fn square_roots() {
        assert_eq!(Cyclotomic::one().sqrt_of_root().unwrap(), Cyclotomic::one());
        assert_eq!(Cyclotomic::from_int(-1).sqrt_of_root().unwrap(), z(4, 1));
        assert_eq!(z(3, 1).sqrt_of_root().unwrap(), z(6, 1));
        assert_eq!(Cyclotomic::from_int(2).sqrt_of_root(), Err(Error::NotRootOfUnity));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_cyclo("z6").unwrap(), z(6, 1));
        let sq = parse_cyclo("(1 - z3)^2").unwrap();
        let expect = &(&Cyclotomic::one() - &z(3, 1).scale(&Rational::from_int(2))) + &z(3, 2);
        assert_eq!(sq, expect);
        assert_eq!(parse_cyclo("z4*z3").unwrap(), z(12, 7));
        assert_eq!(parse_cyclo("z12^5 + 1/2").unwrap(), &z(12, 5) + &q(1, 2));
        assert_eq!(parse_cyclo("-z5^-1").unwrap(), -z(5, 4));
        assert_eq!(parse_cyclo("1/z4").unwrap(), z(4, 3));
    }

    #[test]
    fn parse_errors_report_position() {
        let e = parse_cyclo("1 + * 2").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(e.expected.contains(&"integer".to_string()));
        let e = parse_cyclo("(z3 + 1").unwrap_err();
        assert!(e.expected.contains(&")".to_string()));
        assert!(parse_cyclo("z0").is_err());
        assert!(parse_cyclo("1/0").is_err());
        assert!(parse_cyclo("2 3").is_err());
    }

    #[test]
    fn render_round_trip() {
        let x = &(&z(12, 5).scale(&Rational::new(-3, 2)) + &q(1, 7)) + &z(12, 2);
        let s = x.render();
        assert_eq!(parse_cyclo(&s).unwrap(), x);
        assert_eq!(Cyclotomic::zero_in(9).render(), "0");
        assert_eq!(z(12, 3).render(), "z4");
        assert_eq!(z(12, 4).render(), "z3");
        assert_eq!(q(-3, 2).promote(8).render(), "-3/2");
        let r = (&z(5, 2) + &q(1, 3)).promote(20);
        assert_eq!(r.reduced().conductor(), 5);
        assert_eq!(parse_cyclo(&r.render()).unwrap(), r);
    }

    #[test]
    fn equality_is_conductor_blind() {
        let a = z(3, 1);
        assert_eq!(a.promote(12), a);
        assert_eq!(a.promote(12).conductor(), 12);
        assert_ne!(z(3, 1), z(3, 2));
    }

    #[test]
    fn galois_conjugation() {
        let x = &z(5, 1) + &z(5, 4);
        assert_eq!(x.galois(2), &z(5, 2) + &z(5, 3));
        let c = z(12, 5).to_complex();
        assert!((c.re - (5.0 * std::f64::consts::PI / 6.0).cos()).abs() < 1e-12);
    }
}

//! Braid words, free-group tuples and the Hurwitz action.
//!
//! `σ_i` sends `(t_i, t_{i+1})` to `(t_i t_{i+1} t_i⁻¹, t_i)`. A word acts letter by
//! letter starting from its last letter, so `act(w1·w2) = act(w1) ∘ act(w2)`.

use crate::cyclo::ParseError;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use std::fmt;

/// Operations the Hurwitz action needs from a group.
pub trait GroupElem: Clone {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// Freely reduced word in generators `a_1, a_2, …`; letter `±g` is `a_g^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        assert!(g >= 1, "free generators are numbered from 1");
        FreeWord(vec![g as i32])
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord::identity();
        for &l in letters {
            assert!(l != 0, "zero letter");
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluate under `a_g ↦ gens[g-1]`.
    pub fn eval<T: GroupElem>(&self, gens: &[T], identity: T) -> T {
        self.0.iter().fold(identity, |acc, &l| {
            let g = &gens[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc.compose(g)
            } else {
                acc.compose(&g.inverse())
            }
        })
    }
}

impl GroupElem for FreeWord {
    fn compose(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|&l| if l > 0 { format!("a{}", l) } else { format!("a{}^-1", -l) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The tuple `(a_1, …, a_n)`.
pub fn free_tuple(n: usize) -> Vec<FreeWord> {
    (1..=n).map(FreeWord::generator).collect()
}

/// Product `t_1 t_2 … t_n`.
pub fn tuple_product<T: GroupElem>(t: &[T]) -> Option<T> {
    let mut it = t.iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, x| acc.compose(x)))
}

/// Word in the Artin generators; letter `±i` is `σ_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::Index(format!("generator σ_{} on {} strands", l.unsigned_abs(), n)));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn sigma(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![i as i32])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Concatenation `self · other`.
    pub fn then(&self, other: &BraidWord) -> Self {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// Permutation of strand positions induced by the braid (0-based, `perm[p]` = image of p).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.n).collect();
        for &l in self.letters.iter().rev() {
            let i = l.unsigned_abs() as usize - 1;
            for p in perm.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|&l| if l > 0 { format!("s{}", l) } else { format!("s{}^-1", -l) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.n, self)
    }
}

fn sigma_step<T: GroupElem>(t: &mut [T], l: i32) {
    let i = l.unsigned_abs() as usize - 1;
    let x = t[i].clone();
    let y = t[i + 1].clone();
    if l > 0 {
        t[i] = x.compose(&y).compose(&x.inverse());
        t[i + 1] = x;
    } else {
        t[i] = y.clone();
        t[i + 1] = y.inverse().compose(&x).compose(&y);
    }
}

/// Hurwitz action of a braid word on an n-tuple of group elements.
pub fn hurwitz_act<T: GroupElem>(w: &BraidWord, t: &[T]) -> Vec<T> {
    assert_eq!(w.n, t.len(), "strand count does not match tuple length");
    let mut out = t.to_vec();
    for &l in w.letters.iter().rev() {
        sigma_step(&mut out, l);
    }
    out
}

fn ascending(a: usize, b: usize) -> Vec<i32> {
    (a..=b).map(|x| x as i32).collect()
}

fn descending(a: usize, b: usize) -> Vec<i32> {
    (b..=a).rev().map(|x| x as i32).collect()
}

fn inverse_letters(l: &[i32]) -> Vec<i32> {
    l.iter().rev().map(|x| -x).collect()
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::Index(format!("need 1 <= i < j <= n, got i={}, j={}, n={}", i, j, n)));
    }
    Ok(())
}

/// `σ_{i,j} = (σ_i…σ_{j−2}) σ_{j−1} (σ_i…σ_{j−2})⁻¹`.
pub fn sigma_ij(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    check_pair(n, i, j)?;
    let pre = if j >= i + 2 { ascending(i, j - 2) } else { vec![] };
    let mut letters = pre.clone();
    letters.push(j as i32 - 1);
    letters.extend(inverse_letters(&pre));
    BraidWord::new(n, letters)
}

pub fn pure_sigma_ij(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    Ok(sigma_ij(n, i, j)?.pow(2))
}

/// One letter `σ_{i,j}^{2·exp}` of a pure word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PureLetter {
    pub i: usize,
    pub j: usize,
    pub exp: i32,
}

/// Word in the pure generators `σ_{i,j}^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PureWord {
    n: usize,
    letters: Vec<PureLetter>,
}

impl PureWord {
    pub fn new(n: usize, letters: Vec<PureLetter>) -> Result<Self> {
        for l in &letters {
            check_pair(n, l.i, l.j)?;
        }
        Ok(PureWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        PureWord { n, letters: vec![] }
    }

    pub fn generator(n: usize, i: usize, j: usize, exp: i32) -> Result<Self> {
        Self::new(n, vec![PureLetter { i, j, exp }])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[PureLetter] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        PureWord { n: self.n, letters: self.letters.iter().rev().map(|l| PureLetter { exp: -l.exp, ..*l }).collect() }
    }

    pub fn then(&self, other: &PureWord) -> Self {
        assert_eq!(self.n, other.n, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PureWord { n: self.n, letters }
    }

    pub fn to_braid(&self) -> BraidWord {
        self.letters
            .iter()
            .fold(BraidWord::identity(self.n), |acc, l| acc.then(&pure_sigma_ij(self.n, l.i, l.j).expect("validated").pow(l.exp)))
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.exp == 1 { format!("p({},{})", l.i, l.j) } else { format!("p({},{})^{}", l.i, l.j, l.exp) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PB{}[{}]", self.n, self)
    }
}

/// Image of a pure word of `PB_k` under the strand-multiplying morphism `φ_{k,ℓ}` into `B_n`.
pub fn phi_kl(b: &PureWord, k: usize, l: usize, n: usize) -> Result<BraidWord> {
    if b.n != k {
        return Err(Error::Index(format!("word has {} strands, expected k={}", b.n, k)));
    }
    if !(2 <= k && k < n && 1 <= l && l <= k) {
        return Err(Error::Index(format!("need 1 <= l <= k < n, got k={}, l={}, n={}", k, l, n)));
    }
    let m = n - k;
    let mut out = BraidWord::identity(n);
    for g in &b.letters {
        let (i, j) = (g.i, g.j);
        let img = if j < l {
            pure_sigma_ij(n, i, j)?
        } else if i < l && l < j {
            pure_sigma_ij(n, i, j + m)?
        } else if l < i {
            pure_sigma_ij(n, i + m, j + m)?
        } else if j == l {
            let mut w = ascending(i, l + m - 1);
            w.extend(descending(l + m - 1, l - 1));
            if l >= i + 2 {
                w.extend(inverse_letters(&ascending(i, l - 2)));
            }
            BraidWord::new(n, w)?
        } else {
            // i == l < j
            let mut w = if j + m > l + m + 1 { inverse_letters(&ascending(l + m + 1, j + m - 1)) } else { vec![] };
            w.extend(descending(l + m, l));
            w.extend(ascending(l, j + m - 1));
            BraidWord::new(n, w)?
        };
        out = out.then(&img.pow(g.exp));
    }
    Ok(out)
}

enum Token {
    Sigma(usize, i32),
    Pure(usize, usize, i32),
}

fn perr(pos: usize, expected: &[&str], found: &str) -> Error {
    Error::Parse(ParseError { pos, expected: expected.iter().map(|s| s.to_string()).collect(), found: found.to_string() })
}

fn parse_tokens(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut p = 0;
    let skip_ws = |p: &mut usize| {
        while *p < bytes.len() && bytes[*p].is_ascii_whitespace() {
            *p += 1;
        }
    };
    let read_int = |p: &mut usize| -> Option<i64> {
        let start = *p;
        if *p < bytes.len() && bytes[*p] == b'-' {
            *p += 1;
        }
        let ds = *p;
        while *p < bytes.len() && bytes[*p].is_ascii_digit() {
            *p += 1;
        }
        if *p == ds {
            *p = start;
            return None;
        }
        text[start..*p].parse().ok()
    };
    let found_at = |p: usize| -> String { text[p..].chars().next().map_or("end of input".to_string(), |c| format!("'{}'", c)) };
    skip_ws(&mut p);
    if text[p..].trim() == "1" {
        return Ok(out);
    }
    while p < bytes.len() {
        let tok_start = p;
        let base = match bytes[p] {
            b's' => {
                p += 1;
                let i = read_int(&mut p).filter(|&i| i > 0).ok_or_else(|| perr(p, &["generator index"], &found_at(p)))?;
                Token::Sigma(i as usize, 1)
            }
            b'p' => {
                p += 1;
                if bytes.get(p) != Some(&b'(') {
                    return Err(perr(p, &["'('"], &found_at(p)));
                }
                p += 1;
                skip_ws(&mut p);
                let i = read_int(&mut p).filter(|&i| i > 0).ok_or_else(|| perr(p, &["index"], &found_at(p)))?;
                skip_ws(&mut p);
                if bytes.get(p) != Some(&b',') {
                    return Err(perr(p, &["','"], &found_at(p)));
                }
                p += 1;
                skip_ws(&mut p);
                let j = read_int(&mut p).filter(|&j| j > 0).ok_or_else(|| perr(p, &["index"], &found_at(p)))?;
                skip_ws(&mut p);
                if bytes.get(p) != Some(&b')') {
                    return Err(perr(p, &["')'"], &found_at(p)));
                }
                p += 1;
                Token::Pure(i as usize, j as usize, 1)
            }
            _ => return Err(perr(tok_start, &["'s'", "'p'"], &found_at(tok_start))),
        };
        let exp = if bytes.get(p) == Some(&b'^') {
            p += 1;
            read_int(&mut p).ok_or_else(|| perr(p, &["integer exponent"], &found_at(p)))? as i32
        } else {
            1
        };
        out.push(match base {
            Token::Sigma(i, _) => Token::Sigma(i, exp),
            Token::Pure(i, j, _) => Token::Pure(i, j, exp),
        });
        if p < bytes.len() && !bytes[p].is_ascii_whitespace() {
            return Err(perr(p, &["whitespace"], &found_at(p)));
        }
        skip_ws(&mut p);
    }
    Ok(out)
}

/// Parse `s3 s2^-1 p(1,4) p(1,4)^-1` into an Artin word on `n` strands.
pub fn parse_braid(text: &str, n: usize) -> Result<BraidWord> {
    let mut w = BraidWord::identity(n);
    for t in parse_tokens(text)? {
        let piece = match t {
            Token::Sigma(i, e) => BraidWord::sigma(n, i)?.pow(e),
            Token::Pure(i, j, e) => pure_sigma_ij(n, i, j)?.pow(e),
        };
        w = w.then(&piece);
    }
    Ok(w)
}

/// Parse a word that uses only `p(i,j)` tokens.
pub fn parse_pure(text: &str, n: usize) -> Result<PureWord> {
    let mut letters = Vec::new();
    for t in parse_tokens(text)? {
        match t {
            Token::Pure(i, j, exp) => letters.push(PureLetter { i, j, exp }),
            Token::Sigma(i, e) => return Err(Error::NotPureWord(format!("s{}^{}", i, e))),
        }
    }
    PureWord::new(n, letters)
}

/// Check the Artin relations for `gens[i-1] = image of σ_i`, and optionally the
/// sphere relation `σ_1…σ_{n−1}σ_{n−1}…σ_1 = 1` up to a scalar.
pub fn check_braid_relations(gens: &[Mat], sphere: bool) -> bool {
    let Some(first) = gens.first() else {
        return true;
    };
    let d = first.rows();
    if gens.iter().any(|g| !g.is_square() || g.rows() != d) {
        return false;
    }
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let (x, y) = (&gens[a], &gens[b]);
            let ok = if b == a + 1 { &(x * y) * x == &(y * x) * y } else { x * y == y * x };
            if !ok {
                return false;
            }
        }
    }
    if sphere {
        let mut p = Mat::identity(d);
        for g in gens.iter().chain(gens.iter().rev()) {
            p = &p * g;
        }
        if p.scalar_value().is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> FreeWord {
        FreeWord::from_letters(letters)
    }

    /// `a_s a_{s+1} … a_e` (empty when s > e).
    fn run(s: i32, e: i32) -> FreeWord {
        w(&(s..=e).collect::<Vec<_>>())
    }

    #[test]
    fn free_reduction() {
        assert!(w(&[1, 2, -2, -1]).is_empty());
        assert_eq!(w(&[1, 2]).compose(&w(&[-2, 3])), w(&[1, 3]));
        assert_eq!(w(&[1, -2]).inverse(), w(&[2, -1]));
    }

    #[test]
    fn single_generator_action() {
        let t = free_tuple(3);
        let out = hurwitz_act(&BraidWord::sigma(3, 1).unwrap(), &t);
        assert_eq!(out, vec![w(&[1, 2, -1]), w(&[1]), w(&[3])]);
        assert_eq!(hurwitz_act(&BraidWord::identity(3), &t), t);
        let back = hurwitz_act(&BraidWord::new(3, vec![1, -1]).unwrap(), &t);
        assert_eq!(back, t);
    }

    #[test]
    fn sigma_ij_words() {
        assert_eq!(sigma_ij(4, 1, 2).unwrap().to_string(), "s1");
        assert_eq!(sigma_ij(4, 2, 3).unwrap().to_string(), "s2");
        assert!(matches!(sigma_ij(4, 3, 3), Err(Error::Index(_))));
        assert!(matches!(sigma_ij(4, 2, 5), Err(Error::Index(_))));
    }

    #[test]
    fn sigma_ij_matches_displayed_actions() {
        for n in 2..=6 {
            let t = free_tuple(n);
            for i in 1..=n {
                for j in i + 1..=n {
                    let (ii, jj) = (i as i32, j as i32);
                    let a = run(ii, jj - 1);
                    let mid = run(ii + 1, jj - 1);
                    let s = hurwitz_act(&sigma_ij(n, i, j).unwrap(), &t);
                    assert_eq!(s[i - 1], a.compose(&w(&[jj])).compose(&a.inverse()));
                    assert_eq!(s[j - 1], mid.inverse().compose(&w(&[ii])).compose(&mid));
                    let s2 = hurwitz_act(&pure_sigma_ij(n, i, j).unwrap(), &t);
                    let full = run(ii, jj);
                    assert_eq!(s2[i - 1], full.compose(&mid.inverse()).compose(&w(&[ii])).compose(&mid).compose(&full.inverse()));
                    assert_eq!(s2[j - 1], mid.inverse().compose(&a).compose(&w(&[jj])).compose(&a.inverse()).compose(&mid));
                    for k in 1..=n {
                        if k != i && k != j {
                            assert_eq!(s[k - 1], t[k - 1]);
                            assert_eq!(s2[k - 1], t[k - 1]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_order() {
        let t = free_tuple(4);
        let w1 = BraidWord::new(4, vec![1, -3]).unwrap();
        let w2 = BraidWord::new(4, vec![2, 2, -1]).unwrap();
        assert_eq!(hurwitz_act(&w1.then(&w2), &t), hurwitz_act(&w1, &hurwitz_act(&w2, &t)));
        assert_eq!(tuple_product(&hurwitz_act(&w1.then(&w2), &t)), tuple_product(&t));
    }

    #[test]
    fn phi_simple_cases() {
        let b = PureWord::generator(4, 1, 2, 1).unwrap();
        assert_eq!(phi_kl(&b, 4, 4, 5).unwrap(), pure_sigma_ij(5, 1, 2).unwrap());
        let b = PureWord::generator(4, 2, 3, 1).unwrap();
        assert_eq!(phi_kl(&b, 4, 1, 5).unwrap(), pure_sigma_ij(5, 3, 4).unwrap());
        let b = PureWord::generator(4, 1, 3, 1).unwrap();
        assert_eq!(phi_kl(&b, 4, 2, 5).unwrap(), pure_sigma_ij(5, 1, 4).unwrap());
    }

    #[test]
    fn phi_images_are_pure() {
        for n in 4..=7 {
            for k in 3..n {
                for l in 1..=k {
                    for i in 1..=k {
                        for j in i + 1..=k {
                            let b = PureWord::generator(k, i, j, 1).unwrap();
                            assert!(phi_kl(&b, k, l, n).unwrap().is_pure(), "n={n} k={k} l={l} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_words() {
        let b = parse_braid("s3 s3^-1 s1", 4).unwrap();
        assert_eq!(b.letters(), &[3, -3, 1]);
        let p = parse_braid("p(1,3)", 4).unwrap();
        assert_eq!(p, pure_sigma_ij(4, 1, 3).unwrap());
        let pw = parse_pure("p(1,4) p(2,3)^-1", 5).unwrap();
        assert_eq!(pw.to_string(), "p(1,4) p(2,3)^-1");
        assert!(matches!(parse_pure("p(1,2) s1", 4), Err(Error::NotPureWord(_))));
        assert!(matches!(parse_braid("s4", 4), Err(Error::Index(_))));
        match parse_braid("s1 x2", 4) {
            Err(Error::Parse(e)) => assert_eq!(e.pos, 3),
            other => panic!("{:?}", other),
        }
        assert!(parse_braid("", 3).unwrap().is_empty());
        assert!(parse_braid("1", 3).unwrap().is_empty());
    }

    #[test]
    fn relations_on_trivial_and_bad_assignments() {
        let id = Mat::identity(3);
        assert!(check_braid_relations(&[id.clone(), id.clone(), id.clone()], true));
    }
}

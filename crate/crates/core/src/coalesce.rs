//! Merging consecutive punctures: the maps `r_{k,ℓ}` on representations.

use crate::braid::{phi_kl, PureWord};
use crate::charvar::{same_class, AffineRep, LinearPart};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};

/// Merge the block `ℓ, …, ℓ+n−k` of an `n`-puncture representation into one puncture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoalesceSpec {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl CoalesceSpec {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        if !(3 <= k && k < n && 1 <= l && l <= k) {
            return Err(Error::Index(format!("need 3 <= k < n and 1 <= l <= k, got n={}, k={}, l={}", n, k, l)));
        }
        Ok(CoalesceSpec { n, k, l })
    }

    /// Zero-based range of merged punctures.
    fn block(&self) -> std::ops::Range<usize> {
        self.l - 1..self.l + self.n - self.k
    }
}

pub fn r_kl(rep: &AffineRep, spec: &CoalesceSpec) -> Result<AffineRep> {
    if rep.n() != spec.n {
        return Err(Error::Index(format!("representation has {} punctures, spec expects {}", rep.n(), spec.n)));
    }
    let lam = rep.linear().values();
    let tau = rep.full_tau();
    let block = spec.block();
    let mut merged_l = Cyclotomic::one();
    let mut merged_t = Cyclotomic::zero();
    for i in block.clone() {
        merged_t = &merged_t + &(&merged_l * &tau[i]);
        merged_l = &merged_l * &lam[i];
    }
    let mut new_l: Vec<Cyclotomic> = lam[..block.start].to_vec();
    let mut new_t: Vec<Cyclotomic> = tau[..block.start].to_vec();
    new_l.push(merged_l);
    new_t.push(merged_t);
    new_l.extend_from_slice(&lam[block.end..]);
    new_t.extend_from_slice(&tau[block.end..]);
    // from_full re-checks the product relation on the output
    AffineRep::from_full(LinearPart::new(new_l)?, new_t)
}

/// Compare `β·r(ρ)` with `r(φ(β)·ρ)` as classes.
pub fn equivariance_check(rep: &AffineRep, spec: &CoalesceSpec, b: &PureWord) -> Result<bool> {
    equivariance_check_with(rep, spec, b, spec.l)
}

/// As [`equivariance_check`], but with the braid pushed forward along `φ_{k,phi_l}`.
pub fn equivariance_check_with(rep: &AffineRep, spec: &CoalesceSpec, b: &PureWord, phi_l: usize) -> Result<bool> {
    let lhs = r_kl(rep, spec)?.act(&b.to_braid())?;
    let rhs = r_kl(&rep.act(&phi_kl(b, spec.k, phi_l, spec.n)?)?, spec)?;
    same_class(&lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::z;

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(k)
    }

    #[test]
    fn merge_first_pair() {
        let l: Vec<Cyclotomic> = vec![z(7, 1), z(7, 2), z(7, 3), z(7, 4), z(7, 4)];
        let lin = LinearPart::new(l.clone()).unwrap();
        let rep = AffineRep::new(lin, vec![c(1), c(2), c(3), c(4)]).unwrap();
        let out = r_kl(&rep, &CoalesceSpec::new(5, 4, 1).unwrap()).unwrap();
        assert_eq!(out.linear().get(1), &(&l[0] * &l[1]));
        assert_eq!(out.tau()[0], &c(1) + &(&l[0] * &c(2)));
        assert_eq!(out.tau()[1], c(3));
    }

    #[test]
    fn trivial_block_drops_coordinates() {
        let a = z(5, 1);
        let lin = LinearPart::new(vec![a.clone(), c(1), c(1), c(1), a.inv()]).unwrap();
        let rep = AffineRep::new(lin, vec![c(2), c(0), c(0), c(0)]).unwrap();
        let out = r_kl(&rep, &CoalesceSpec::new(5, 3, 2).unwrap()).unwrap();
        assert_eq!(out.linear().values(), &[a.clone(), c(1), a.inv()]);
        assert_eq!(out.tau(), &[c(2), c(0)]);
    }

    #[test]
    fn spec_bounds() {
        assert!(CoalesceSpec::new(5, 5, 1).is_err());
        assert!(CoalesceSpec::new(5, 2, 1).is_err());
        assert!(CoalesceSpec::new(5, 4, 5).is_err());
    }

    #[test]
    fn equivariance_and_control() {
        let zeta = z(6, 1);
        let lin = LinearPart::new(vec![zeta.clone(), zeta.clone(), zeta.clone(), zeta.clone(), zeta.pow(2)]).unwrap();
        let rep = AffineRep::new(lin, vec![c(0), c(1), c(2), c(-1)]).unwrap();
        let spec = CoalesceSpec::new(5, 4, 2).unwrap();
        assert!(equivariance_check(&rep, &spec, &PureWord::identity(4)).unwrap());
        let b = PureWord::generator(4, 1, 3, 1).unwrap();
        assert!(equivariance_check(&rep, &spec, &b).unwrap());
        assert!(!equivariance_check_with(&rep, &spec, &b, 3).unwrap());
    }
}

//! Schur multiplier of a finite Lie ring through cyclic coefficients.
//!
//! `H^2(L, Z/N)` mixes `Ext(L/L^2, Z/N)` with `Hom(M(L), Z/N)`. Pushing
//! coefficients along `Z/N -> Z/(N e)`, `x -> e x` with `e = exp(L)` kills
//! the `Ext` part and is injective on the `Hom` part, so the image of the
//! induced map is `Hom(M(L), Z/N)`, which is `M(L)` once `exp M(L) | N`.

use crate::abgroup::{AbHom, FinAbGroup};
use crate::arith::{gcd, prime_factors};
use crate::cohomology::{h2_with, H2Group, Limits};
use crate::error::{Error, Result};
use crate::liering::LieRing;
use crate::par;

/// One modulus of the schedule.
#[derive(Debug, Clone)]
pub struct ScheduleEntry {
    pub modulus: u64,
    /// Invariant factors of `H^2(L, Z/N)`.
    pub h2: Vec<u64>,
    /// Invariant factors of the multiplier estimate at this modulus.
    pub multiplier: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct MultiplierResult {
    pub group: FinAbGroup,
    pub schedule: Vec<ScheduleEntry>,
    /// All schedule entries agree.
    pub stable: bool,
    /// `H^2(L, Z/N)` at the last modulus.
    pub witness: H2Group,
}

fn estimate(ring: &LieRing, m: u64, e: u64, limits: &Limits) -> Result<(ScheduleEntry, H2Group)> {
    let small = FinAbGroup::cyclic(m);
    let big_m = m
        .checked_mul(e)
        .ok_or(Error::Overflow("coefficient modulus"))?;
    let big = FinAbGroup::cyclic(big_m);
    let (h, hb) = par::join(
        || h2_with(ring, &small, limits),
        || h2_with(ring, &big, limits),
    );
    let (h, hb) = (h?, hb?);
    let push = AbHom::new(small.clone(), big.clone(), vec![vec![e % big_m]])?;
    let mut images = Vec::with_capacity(h.reps().len());
    for rep in h.reps() {
        images.push(hb.class_of(&rep.push_forward(&push)?)?);
    }
    let induced = AbHom::new(h.group().clone(), hb.group().clone(), images)?;
    let image = induced.image().as_group()?.group().invariant_factors();
    Ok((
        ScheduleEntry {
            modulus: m,
            h2: h.group().invariant_factors(),
            multiplier: image,
        },
        h,
    ))
}

/// `M(L)` over the schedule `N0, 2 N0, 6 N0` with `N0 = |L| exp(L)`.
pub fn schur_multiplier(ring: &LieRing) -> Result<MultiplierResult> {
    schur_multiplier_with(ring, &Limits::default())
}

pub fn schur_multiplier_with(ring: &LieRing, limits: &Limits) -> Result<MultiplierResult> {
    let n = limits.check_ring(ring)? as u64;
    let e = ring.additive().exponent()?;
    let n0 = n
        .checked_mul(e)
        .ok_or(Error::Overflow("coefficient modulus"))?;
    let moduli = [n0, 2 * n0, 6 * n0];
    let mut runs = par::map_slice(&moduli, |&m| estimate(ring, m, e, limits))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let stable = runs
        .windows(2)
        .all(|w| w[0].0.multiplier == w[1].0.multiplier);
    let (last, witness) = runs.pop().expect("three moduli");
    let group = FinAbGroup::from_moduli(last.multiplier.clone())?;
    let order_primes = prime_factors(n as u128);
    for m in group.moduli() {
        for p in prime_factors(u128::from(*m)) {
            if !order_primes.contains(&p) {
                return Err(Error::Internal(format!(
                    "multiplier has {p}-torsion but |L| = {n}"
                )));
            }
        }
    }
    let mut schedule: Vec<ScheduleEntry> = runs.into_iter().map(|r| r.0).collect();
    schedule.push(last);
    Ok(MultiplierResult {
        group,
        schedule,
        stable,
        witness,
    })
}

/// `Λ²(⊕ Z/d_i) = ⊕_{i<j} Z/gcd(d_i, d_j)` in invariant-factor form.
pub fn exterior_square(moduli: &[u64]) -> FinAbGroup {
    let mut out = Vec::new();
    for (i, &a) in moduli.iter().enumerate() {
        for &b in &moduli[i + 1..] {
            let g = gcd(a, b);
            if g > 1 {
                out.push(g);
            }
        }
    }
    FinAbGroup::from_moduli(out)
        .expect("divisors of valid moduli")
        .canonical()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_squares() {
        assert!(exterior_square(&[7]).is_trivial());
        assert_eq!(exterior_square(&[2, 2]).moduli(), &[2]);
        assert_eq!(exterior_square(&[2, 4, 4]).moduli(), &[2, 2, 4]);
        assert!(exterior_square(&[]).is_trivial());
    }

    #[test]
    fn abelian_multipliers() {
        for (moduli, want) in [
            (vec![4], vec![]),
            (vec![2, 2], vec![2]),
            (vec![2, 4], vec![2]),
            (vec![3, 3], vec![3]),
        ] {
            let l = LieRing::abelian(&moduli).unwrap();
            let m = schur_multiplier(&l).unwrap();
            assert!(m.stable);
            assert_eq!(m.group.moduli(), want.as_slice(), "{moduli:?}");
            assert_eq!(m.schedule.len(), 3);
        }
    }

    #[test]
    fn heisenberg_multiplier() {
        let l = LieRing::heisenberg(2).unwrap();
        let m = schur_multiplier(&l).unwrap();
        assert!(m.stable);
        assert_eq!(m.group.invariant_factors(), vec![2, 2]);
    }

    #[test]
    fn trivial_ring() {
        let m = schur_multiplier(&LieRing::abelian(&[]).unwrap()).unwrap();
        assert!(m.group.is_trivial());
        assert!(m.stable);
    }
}

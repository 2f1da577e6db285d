use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::arith::{add_mod, lcm_all, mul_mod, neg_mod, reduce_i128, sub_mod, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::snf::{snf, IntMatrix};

/// A finite abelian group `Z/d_1 (+) ... (+) Z/d_k` given by its generator
/// moduli. Moduli equal to 1 are legal (degenerate coordinates).
///
/// Elements are coefficient vectors with entry `i` in `[0, d_i)`. They are
/// enumerated in lexicographic order of the coefficient vector (the last
/// coordinate varies fastest), so index 0 is always the zero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    moduli: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(moduli: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(moduli.len());
        for (index, &m) in moduli.iter().enumerate() {
            if m < 1 {
                return Err(Error::InvalidModulus { index, value: m });
            }
            if m as u64 > MAX_MODULUS {
                return Err(Error::ModulusTooLarge(m as u128));
            }
            out.push(m as u64);
        }
        Ok(FinAbGroup { moduli: out })
    }

    pub fn from_moduli(moduli: Vec<u64>) -> Result<Self> {
        for (index, &m) in moduli.iter().enumerate() {
            if m < 1 {
                return Err(Error::InvalidModulus { index, value: 0 });
            }
            if m > MAX_MODULUS {
                return Err(Error::ModulusTooLarge(m as u128));
            }
        }
        Ok(FinAbGroup { moduli })
    }

    pub fn trivial() -> Self {
        FinAbGroup { moduli: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        assert!((1..=MAX_MODULUS).contains(&n), "cyclic order out of range");
        FinAbGroup { moduli: vec![n] }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> BigUint {
        self.moduli.iter().fold(BigUint::one(), |acc, &m| acc * m)
    }

    /// Order as a machine integer, when it fits.
    pub fn order_u128(&self) -> Option<u128> {
        self.moduli
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
    }

    /// Order as `usize`, for enumeration-sized groups.
    pub fn size(&self) -> Option<usize> {
        self.order_u128().and_then(|o| usize::try_from(o).ok())
    }

    /// Exponent (lcm of the moduli); 1 for the trivial group.
    pub fn exponent(&self) -> Result<u64> {
        lcm_all(self.moduli.iter().copied())
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.iter().all(|&m| m == 1)
    }

    /// Canonical invariant factors `d_1 | d_2 | ...`, all at least 2.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let nontrivial: Vec<u64> = self.moduli.iter().copied().filter(|&m| m > 1).collect();
        if nontrivial.len() <= 1 {
            return nontrivial;
        }
        let k = nontrivial.len();
        let mut m = IntMatrix::zeros(k, k);
        for (i, &d) in nontrivial.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        snf(&m)
            .diagonal()
            .iter()
            .map(|d| d.to_u64().expect("invariant factor divides the exponent"))
            .filter(|&d| d > 1)
            .collect()
    }

    /// The same group presented by its invariant factors.
    pub fn canonical(&self) -> FinAbGroup {
        FinAbGroup {
            moduli: self.invariant_factors(),
        }
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            coeffs: vec![0; self.rank()],
        }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coeffs = vec![0; self.rank()];
        coeffs[i] = 1 % self.moduli[i];
        GroupElement {
            group: self.clone(),
            coeffs,
        }
    }

    /// Element from arbitrary integer coefficients, reduced into range.
    pub fn element(&self, coeffs: &[i64]) -> Result<GroupElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coeffs.len(),
            });
        }
        Ok(GroupElement {
            group: self.clone(),
            coeffs: self.reduce_signed(coeffs),
        })
    }

    /// Wrap an already-reduced coefficient vector.
    pub fn element_raw(&self, coeffs: Vec<u64>) -> Result<GroupElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coeffs.len(),
            });
        }
        let coeffs = self.reduce(&coeffs);
        Ok(GroupElement {
            group: self.clone(),
            coeffs,
        })
    }

    pub(crate) fn reduce_signed(&self, coeffs: &[i64]) -> Vec<u64> {
        coeffs
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| reduce_i128(c as i128, m))
            .collect()
    }

    pub(crate) fn reduce(&self, coeffs: &[u64]) -> Vec<u64> {
        coeffs
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c % m)
            .collect()
    }

    pub(crate) fn add_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| add_mod(x, y, m))
            .collect()
    }

    pub(crate) fn add_assign_raw(&self, a: &mut [u64], b: &[u64]) {
        for ((x, &y), &m) in a.iter_mut().zip(b).zip(&self.moduli) {
            *x = add_mod(*x, y, m);
        }
    }

    pub(crate) fn sub_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| sub_mod(x, y, m))
            .collect()
    }

    pub(crate) fn neg_raw(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| neg_mod(x, m))
            .collect()
    }

    /// `q * a` for a residue `q` (taken mod each modulus).
    pub(crate) fn scale_raw(&self, a: &[u64], q: u64) -> Vec<u64> {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| mul_mod(x, q % m, m))
            .collect()
    }

    /// Mixed-radix index of a reduced coefficient vector.
    pub fn index_of(&self, coeffs: &[u64]) -> usize {
        coeffs
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    /// Coefficient vector of the element with the given enumeration index.
    pub fn element_at(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.rank()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        out
    }

    /// All elements in enumeration order. Only sensible for small groups.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let n = self.size().expect("group too large to enumerate");
        (0..n).map(move |i| self.element_at(i))
    }

    /// Order of an element.
    pub fn element_order(&self, a: &[u64]) -> u64 {
        lcm_all(
            a.iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| m / crate::arith::gcd(x, m)),
        )
        .expect("element order divides the exponent")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = self.invariant_factors();
        if inv.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = inv.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// An element of a [`FinAbGroup`], tagged with its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    group: FinAbGroup,
    coeffs: Vec<u64>,
}

impl GroupElement {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    fn check(&self, other: &GroupElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check(other)?;
        Ok(GroupElement {
            group: self.group.clone(),
            coeffs: self.group.add_raw(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check(other)?;
        Ok(GroupElement {
            group: self.group.clone(),
            coeffs: self.group.sub_raw(&self.coeffs, &other.coeffs),
        })
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            coeffs: self.group.neg_raw(&self.coeffs),
        }
    }

    pub fn scale(&self, q: i64) -> GroupElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(self.group.moduli())
            .map(|(&x, &m)| reduce_i128(x as i128 * q as i128, m))
            .collect();
        GroupElement {
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Canonical-form comparison; errors when parents differ.
    pub fn equals(&self, other: &GroupElement) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    pub fn order(&self) -> u64 {
        self.group.element_order(&self.coeffs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

//! Small-integer helpers shared by the modular and exact kernels.

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate. Products of two residues
/// are formed in `u128`, so this only bounds intermediate sums.
pub const MAX_MODULUS: u64 = 1 << 62;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let l = (a / gcd(a, b)) as u128 * b as u128;
    if l > MAX_MODULUS as u128 {
        return Err(Error::ModulusTooLarge(l));
    }
    Ok(l as u64)
}

pub fn lcm_all(values: impl IntoIterator<Item = u64>) -> Result<u64> {
    values.into_iter().try_fold(1u64, lcm)
}

/// Extended Euclid on signed values: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub fn reduce_i128(v: i128, m: u64) -> u64 {
    v.rem_euclid(m as i128) as u64
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

#[inline]
pub fn neg_mod(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = ext_gcd(a as i128, m as i128);
    (g == 1).then(|| reduce_i128(s, m))
}

/// A unit `u` modulo `m` with `u*a ≡ gcd(a, m) (mod m)`.
///
/// Used to normalize pivots to divisors of the modulus.
pub fn unit_normalizer(a: u64, m: u64) -> u64 {
    let a = a % m;
    if a == 0 || m == 1 {
        return 1 % m.max(1);
    }
    let d = gcd(a, m);
    let m1 = m / d;
    let u0 = inv_mod((a / d) % m1, m1).unwrap_or(0);
    let mut u = if m1 == 1 { 1 } else { u0 };
    while gcd(u, m) != 1 {
        u += m1;
    }
    u % m
}

/// Prime factors of `n` (distinct, ascending) by trial division.
pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizer_hits_gcd() {
        for m in 1..60u64 {
            for a in 0..m {
                let u = unit_normalizer(a, m);
                assert_eq!(gcd(u, m), 1, "u={u} m={m}");
                if a != 0 {
                    assert_eq!(mul_mod(u, a, m), gcd(a, m) % m, "a={a} m={m}");
                }
            }
        }
    }

    #[test]
    fn ext_gcd_signs() {
        for a in -20i128..20 {
            for b in -20i128..20 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(s * a + t * b, g);
                assert!(g >= 0);
            }
        }
    }

    #[test]
    fn lcm_overflow_is_reported() {
        assert!(lcm(1 << 61, 3).is_err());
        assert_eq!(lcm(1 << 40, 3 << 30).unwrap(), 3 << 40);
        assert_eq!(lcm_all([4, 6, 10]).unwrap(), 60);
    }
}

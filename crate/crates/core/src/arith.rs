// SPDX-License-Identifier: Apache-2.0

//! Integer helpers: gcd/lcm, Bézout coefficients, modular inverses, trial
//! division and binomial coefficients modulo a prime.

use crate::error::{Error, Result};

/// Result of the extended Euclidean algorithm: `u*x + v*y = g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntTriple {
    pub g: i64,
    pub u: i64,
    pub v: i64,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Extended gcd. The returned `g` is non-negative.
pub fn ext_gcd(x: i64, y: i64) -> Result<IntTriple> {
    if x == 0 && y == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (x as i128, y as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    Ok(IntTriple {
        g: old_r as i64,
        u: old_s as i64,
        v: old_t as i64,
    })
}

impl IntTriple {
    /// `lcm(x, y)` for the inputs this triple was computed from.
    pub fn lcm_of(&self, x: i64, y: i64) -> i64 {
        (x / self.g * y).abs()
    }
}

/// Inverse of `a` modulo `modulus`, if it exists. `modulus == 1` yields 0.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let t = ext_gcd(a as i64, modulus as i64).ok()?;
    if t.g != 1 {
        return None;
    }
    Some(t.u.rem_euclid(modulus as i64) as u64)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            let mut e = 0;
            while n % f == 0 {
                n /= f;
                e += 1;
            }
            out.push((f, e));
        }
        f += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `C(l, j) mod p` via Lucas' theorem (product of base-p digit binomials).
pub fn binom_mod_p(l: u64, j: i64, p: u64) -> u64 {
    if j < 0 || j as u64 > l {
        return 0;
    }
    let (mut l, mut j) = (l, j as u64);
    let mut acc = 1u64;
    while l > 0 || j > 0 {
        let (ld, jd) = (l % p, j % p);
        if jd > ld {
            return 0;
        }
        acc = acc * small_binom_mod(ld, jd, p) % p;
        l /= p;
        j /= p;
    }
    acc
}

// C(n, k) mod p for 0 <= k <= n < p, where every factor is invertible.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

/// `gcd(p^t - 1, modulus)` without forming `p^t`.
pub fn gcd_pow_minus_one(p: u64, t: u64, modulus: u64) -> u64 {
    if modulus == 0 {
        return 0;
    }
    let residue = (pow_mod(p, t, modulus) + modulus - 1) % modulus;
    gcd(residue, modulus)
}

/// Does `delta` divide `lcm(x, y)`?
pub fn divides_lcm(delta: u64, x: u64, y: u64) -> bool {
    // delta | lcm(x, y) iff delta | lcm(gcd(delta, x), gcd(delta, y)); keeps
    // everything bounded by delta.
    let l = lcm(gcd(delta, x), gcd(delta, y));
    l != 0 && l % delta == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom_exact(n: u64, k: u64) -> u128 {
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        acc
    }

    #[test]
    fn ext_gcd_examples() {
        let t = ext_gcd(3, 6).unwrap();
        assert_eq!(t.g, 3);
        assert_eq!(t.u * 3 + t.v * 6, 3);
        let t = ext_gcd(4, 6).unwrap();
        assert_eq!(t.g, 2);
        assert_eq!(t.u * 4 + t.v * 6, 2);
        assert_eq!(t.lcm_of(4, 6), 12);
        let t = ext_gcd(1, 17).unwrap();
        assert_eq!((t.g, t.u, t.v), (1, 1, 0));
        assert_eq!(ext_gcd(0, 0), Err(Error::BothZero));
        let t = ext_gcd(-4, 6).unwrap();
        assert_eq!(t.g, 2);
        assert_eq!(t.u * -4 + t.v * 6, 2);
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(binom_mod_p(9, 0, 5), 1);
        assert_eq!(binom_mod_p(7, 3, 7), 0);
        assert_eq!(binom_mod_p(10, 5, 7), 0);
        assert_eq!(binom_mod_p(3, 4, 7), 0);
        assert_eq!(binom_mod_p(3, -1, 7), 0);
    }

    #[test]
    fn lucas_matches_factorials() {
        for p in (2..=31).filter(|&p| is_prime(p)) {
            for l in 0..=30u64 {
                for j in 0..=l {
                    let expected = (binom_exact(l, j) % p as u128) as u64;
                    assert_eq!(binom_mod_p(l, j as i64, p), expected, "C({l},{j}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn factorization_and_divisors() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn gcd_pow_minus_one_matches_direct() {
        for p in [2u64, 3, 5, 7] {
            for t in 1..=10u64 {
                let direct = p.pow(t as u32) - 1;
                for m in 1..=60u64 {
                    assert_eq!(gcd_pow_minus_one(p, t, m), gcd(direct, m));
                }
            }
        }
    }

    #[test]
    fn divides_lcm_matches_direct() {
        for delta in 1..=40u64 {
            for x in 1..=30u64 {
                for y in 1..=30u64 {
                    assert_eq!(divides_lcm(delta, x, y), lcm(x, y) % delta == 0);
                }
            }
        }
    }

    #[test]
    fn mod_inverse_basics() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }
}

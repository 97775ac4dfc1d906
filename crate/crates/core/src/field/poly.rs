// SPDX-License-Identifier: Apache-2.0

//! Dense polynomials over Z_p, only as much as modulus validation and table
//! construction need. Coefficients are little-endian.

pub(crate) type ZpPoly = Vec<u64>;

pub(crate) fn trim(mut a: ZpPoly) -> ZpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

/// Remainder of `a` modulo `b` (b nonzero).
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> ZpPoly {
    let b = trim(b.to_vec());
    let mut a = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let factor = a[a.len() - 1] * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            let idx = shift + i;
            a[idx] = (a[idx] + p - factor * c % p) % p;
        }
        a = trim(a);
    }
    a
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> ZpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, modulus, p)
}

pub(crate) fn pow_mod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> ZpPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, modulus, p);
        }
        b = mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    rem(&acc, modulus, p)
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> ZpPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub(a: &[u64], b: &[u64], p: u64) -> ZpPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Irreducibility of a monic polynomial of degree `r >= 1` over Z_p:
/// `gcd(f, x^(p^k) - x) = 1` for every `k <= r/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let r = f.len() - 1;
    if r == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut frob = x.clone();
    for _ in 1..=r / 2 {
        frob = pow_mod(&frob, p, &f, p);
        let g = gcd(&f, &sub(&frob, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `r`, comparing
/// `(c_0, c_1, ..., c_{r-1})` with `c_0` most significant.
pub(crate) fn default_modulus(p: u64, r: u32) -> ZpPoly {
    let count = p.pow(r);
    for idx in 0..count {
        let mut coeffs = vec![0u64; r as usize + 1];
        let mut t = idx;
        for i in (0..r as usize).rev() {
            coeffs[i] = t % p;
            t /= p;
        }
        coeffs[r as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2: no roots, still reducible.
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree r over F_p
        fn count(p: u64, r: u32) -> usize {
            (0..p.pow(r))
                .filter(|&idx| {
                    let mut c = vec![0u64; r as usize + 1];
                    let mut t = idx;
                    for x in c.iter_mut().take(r as usize) {
                        *x = t % p;
                        t /= p;
                    }
                    c[r as usize] = 1;
                    is_irreducible(&c, p)
                })
                .count()
        }
        assert_eq!(count(2, 2), 1);
        assert_eq!(count(2, 3), 2);
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(2, 6), 9);
        assert_eq!(count(3, 2), 3);
        assert_eq!(count(3, 3), 8);
        assert_eq!(count(5, 2), 10);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
        assert_eq!(default_modulus(5, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(7, 2), vec![1, 0, 1]);
    }
}

// SPDX-License-Identifier: Apache-2.0

//! Property tests against oracles written independently of the library:
//! schoolbook polynomial arithmetic, exhaustive evaluation and direct search.

use std::sync::OnceLock;

use proptest::prelude::*;

use permbin::arith::{ext_gcd, gcd};
use permbin::binomial::{Binomial, BinomialJson};
use permbin::bounds::{enumerate_perm_binomials, EnumOptions};
use permbin::descent::{
    conjugate_invariance, descend, descend_to_intersection, gcd_lcm_identity_holds,
    gcd_nontrivial_property, scan_subfield_equivalents, smallest_field, smallest_field_by_scan,
    split_order, DescentJson, DescentReport,
};
use permbin::equivalence::{are_d_equivalent, class_id_of, d_class, substitution_witness};
use permbin::field::{is_monomial_permutation, FieldCtx, FieldElement};
use permbin::permtest::{
    binomial_criterion, brute_force_is_perm, hermite_dickson_full, witness_holds, PermVerdict,
    VerdictJson,
};

const FIELDS: [(u64, u32); 14] = [
    (2, 1), (3, 1), (5, 1), (7, 1), (13, 1), (31, 1),
    (2, 2), (2, 3), (3, 2), (2, 5), (5, 2), (3, 3), (2, 6), (7, 2),
];

fn fields() -> &'static [FieldCtx] {
    static CELL: OnceLock<Vec<FieldCtx>> = OnceLock::new();
    CELL.get_or_init(|| FIELDS.iter().map(|&(p, r)| FieldCtx::new(p, r, None).unwrap()).collect())
}

/// Permutation binomials of a few extension fields, found by brute force.
fn perm_pool() -> &'static [Binomial] {
    static CELL: OnceLock<Vec<Binomial>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for (p, r) in [(3, 2), (2, 4), (5, 2), (3, 3), (2, 6), (7, 2), (3, 4)] {
            let ctx = FieldCtx::new(p, r, None).unwrap();
            let q = ctx.q();
            for n in 2..q {
                for m in 1..n {
                    if gcd(n - m, q - 1) == 1 {
                        continue;
                    }
                    for a in ctx.nonzero_elements() {
                        let f = Binomial::new(&ctx, a, n, m).unwrap();
                        if brute_force_is_perm(&f).is_perm {
                            out.push(f);
                        }
                    }
                }
            }
        }
        out
    })
}

/// Schoolbook product of two elements as coefficient vectors modulo the
/// field's modulus.
fn oracle_mul(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> Vec<u64> {
    let p = ctx.p();
    let (x, y) = (ctx.coeffs(a), ctx.coeffs(b));
    let mut prod = vec![0u64; x.len() + y.len()];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % p;
        }
    }
    let r = ctx.r() as usize;
    if let Some(modulus) = ctx.modulus() {
        for k in (r..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &mi) in modulus.iter().enumerate() {
                let idx = k - r + i;
                prod[idx] = (prod[idx] + (p - c) * mi % p) % p;
            }
        }
    }
    prod.truncate(r);
    prod
}

fn field_and_elements() -> impl Strategy<Value = (FieldCtx, u64, u64, u64)> {
    (0..FIELDS.len(), any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(i, a, b, c)| {
        let ctx = fields()[i].clone();
        let q = ctx.q();
        (ctx, a % q, b % q, c % q)
    })
}

fn binomial_strategy() -> impl Strategy<Value = Binomial> {
    (0..FIELDS.len(), any::<u64>(), any::<u64>(), any::<u64>()).prop_filter_map(
        "field too small for a binomial",
        |(i, a, n, m)| {
            let ctx = fields()[i].clone();
            let q = ctx.q();
            if q < 3 {
                return None;
            }
            let n = 2 + n % (q - 2);
            let m = 1 + m % (n - 1);
            let a = ctx.element(1 + a % (q - 1))?;
            Binomial::new(&ctx, a, n, m).ok()
        },
    )
}

fn perm_strategy() -> impl Strategy<Value = Binomial> {
    any::<prop::sample::Index>().prop_map(|i| i.get(perm_pool()).clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn multiplication_matches_schoolbook((ctx, a, b, _) in field_and_elements()) {
        let (a, b) = (ctx.element(a).unwrap(), ctx.element(b).unwrap());
        prop_assert_eq!(ctx.coeffs(ctx.mul(a, b)), oracle_mul(&ctx, a, b));
    }

    #[test]
    fn field_axioms((ctx, a, b, c) in field_and_elements()) {
        let (a, b, c) = (ctx.element(a).unwrap(), ctx.element(b).unwrap(), ctx.element(c).unwrap());
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), ctx.zero());
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one());
            prop_assert_eq!(ctx.pow_u(a, ctx.q() - 1), ctx.one());
            let e = ctx.dlog(ctx.generator(), a).unwrap();
            prop_assert_eq!(ctx.dlog_bsgs(ctx.generator(), a).unwrap(), e);
            prop_assert_eq!(ctx.pow_u(ctx.generator(), e), a);
        }
        prop_assert_eq!(ctx.parse(&ctx.format(a)).unwrap(), a);
    }

    #[test]
    fn criterion_matches_brute_force(f in binomial_strategy()) {
        let fast = binomial_criterion(&f);
        let slow = brute_force_is_perm(&f);
        prop_assert_eq!(fast.is_perm, slow.is_perm, "{}", f);
        prop_assert!(witness_holds(&f, &fast));
        prop_assert!(witness_holds(&f, &slow));
        let hd = hermite_dickson_full(f.ctx(), f.terms()).unwrap();
        prop_assert_eq!(hd.is_perm, slow.is_perm);
    }

    #[test]
    fn verdict_and_binomial_json_round_trip(f in binomial_strategy()) {
        let ctx = f.ctx();
        for v in [binomial_criterion(&f), brute_force_is_perm(&f)] {
            let text = serde_json::to_string(&v.to_json(ctx)).unwrap();
            let back: VerdictJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(PermVerdict::from_json(ctx, &back).unwrap(), v);
        }
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back: BinomialJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Binomial::from_json(ctx, &back).unwrap(), f.clone());
        prop_assert_eq!(Binomial::parse(ctx, &f.to_text()).unwrap(), f);
    }

    #[test]
    fn equivalence_is_an_equivalence(f in binomial_strategy(), i in any::<u64>(), j in any::<u64>()) {
        let ctx = f.ctx();
        let q = ctx.q();
        let g = f.with_coefficient(ctx.element(1 + i % (q - 1)).unwrap()).unwrap();
        let h = f.with_coefficient(ctx.element(1 + j % (q - 1)).unwrap()).unwrap();
        prop_assert!(are_d_equivalent(&f, &f).unwrap());
        prop_assert_eq!(are_d_equivalent(&f, &g).unwrap(), are_d_equivalent(&g, &f).unwrap());
        if are_d_equivalent(&f, &g).unwrap() && are_d_equivalent(&g, &h).unwrap() {
            prop_assert!(are_d_equivalent(&f, &h).unwrap());
        }
        // b/a is a d-th power iff some eta has eta^d = b/a, found by search.
        let ratio = ctx.div(g.a(), f.a()).unwrap();
        let has_root = ctx.nonzero_elements().any(|eta| ctx.pow_u(eta, f.d()) == ratio);
        prop_assert_eq!(are_d_equivalent(&f, &g).unwrap(), has_root);
        prop_assert_eq!(substitution_witness(&f, &g).is_ok(), has_root);
        prop_assert_eq!(class_id_of(&f) == class_id_of(&g), has_root);
        prop_assert_eq!(d_class(&f).size() as u64, (q - 1) / f.d());
    }

    #[test]
    fn equivalent_binomials_share_verdicts(f in binomial_strategy(), i in any::<u64>()) {
        let ctx = f.ctx();
        let class = d_class(&f);
        let b = class.members[(i % class.members.len() as u64) as usize];
        let g = f.with_coefficient(b).unwrap();
        prop_assert_eq!(brute_force_is_perm(&f).is_perm, brute_force_is_perm(&g).is_perm);
        let w = substitution_witness(&f, &g).unwrap();
        prop_assert_eq!(ctx.pow_u(w.eta, f.d()), ctx.div(b, f.a()).unwrap());
    }

    #[test]
    fn monomials(k in 1u64..200, i in 0..FIELDS.len()) {
        let ctx = &fields()[i];
        let image: std::collections::BTreeSet<FieldElement> =
            ctx.elements().map(|x| ctx.pow_u(x, k)).collect();
        prop_assert_eq!(image.len() as u64 == ctx.q(), is_monomial_permutation(k, ctx.q()));
    }

    #[test]
    fn bezout(x in -1_000_000_000_000i64..1_000_000_000_000, y in -1_000_000_000_000i64..1_000_000_000_000) {
        prop_assume!(x != 0 || y != 0);
        let t = ext_gcd(x, y).unwrap();
        prop_assert_eq!(t.u as i128 * x as i128 + t.v as i128 * y as i128, t.g as i128);
        prop_assert_eq!(t.g as u64, gcd(x.unsigned_abs(), y.unsigned_abs()));
    }

    #[test]
    fn gcd_lcm_identity(a in 1i64..1_000_000, b in 1i64..1_000_000, c in 1i64..1_000_000) {
        prop_assert!(gcd_lcm_identity_holds(a, b, c));
    }

    #[test]
    fn order_split(delta in 1u64..5000, u in 1u64..5000, v in 1u64..5000) {
        let l = u / gcd(u, v) * v;
        match split_order(delta, u, v) {
            Ok((d1, d2)) => {
                prop_assert!(l % delta == 0);
                prop_assert_eq!(u % d1, 0);
                prop_assert_eq!(v % d2, 0);
                prop_assert_eq!(d1 / gcd(d1, d2) * d2, delta);
            }
            Err(_) => prop_assert!(l % delta != 0),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn descent_matches_scan(f in perm_strategy()) {
        let ctx = f.ctx();
        let r = ctx.r() as u64;
        let q = ctx.q();
        for s in (1..=r).filter(|s| r % s == 0) {
            let rep = descend(&f, s).unwrap();
            let scan = scan_subfield_equivalents(&f, s).unwrap();
            prop_assert_eq!(rep.exists, !scan.is_empty());
            prop_assert_eq!(&rep.coefficients, &scan);
            // the order test itself, from a brute-force order
            let order = (1..q).find(|&k| ctx.pow_u(f.a(), k) == ctx.one()).unwrap();
            let qs = ctx.p().pow(s as u32);
            let period = (q - 1) / f.d();
            let l = (qs - 1) / gcd(qs - 1, period) * period;
            prop_assert_eq!(rep.exists, l % order == 0);
            if rep.exists {
                prop_assert_eq!(rep.coefficients.len() as u64, gcd(qs - 1, period));
                prop_assert!(rep.reduced_maps_distinct(ctx).unwrap());
                for &b in &rep.coefficients {
                    prop_assert!(brute_force_is_perm(&f.with_coefficient(b).unwrap()).is_perm);
                }
                if ctx.p() != 2 {
                    prop_assert!(gcd_nontrivial_property(&f, s).unwrap());
                }
            }
            let text = serde_json::to_string(&rep.to_json(ctx)).unwrap();
            let back: DescentJson = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(DescentReport::from_json(ctx, &back).unwrap(), rep);
        }
    }

    #[test]
    fn descent_field_invariants(f in perm_strategy()) {
        let r = f.ctx().r() as u64;
        prop_assert_eq!(smallest_field(&f).unwrap(), smallest_field_by_scan(&f).unwrap());
        for e in 0..=r {
            prop_assert!(conjugate_invariance(&f, e).unwrap());
        }
        for t in 1..=12 {
            let via_t = descend_to_intersection(&f, t).unwrap();
            let direct = descend(&f, gcd(r, t)).unwrap();
            prop_assert_eq!(via_t.t, Some(t));
            prop_assert_eq!(DescentReport { t: None, ..via_t }, direct);
        }
    }
}

#[test]
fn classes_partition_small_fields() {
    for ctx in fields().iter().filter(|c| c.q() <= 32 && c.q() > 2) {
        let q = ctx.q();
        for n in 2..q {
            for m in 1..n {
                let mut seen = std::collections::BTreeSet::new();
                let mut total = 0;
                for a in ctx.nonzero_elements() {
                    let f = Binomial::new(ctx, a, n, m).unwrap();
                    let class = d_class(&f);
                    if class.class_id == a {
                        total += class.size();
                        for b in &class.members {
                            assert!(seen.insert(*b), "overlap over F_{q}");
                        }
                    }
                    assert_eq!(class_id_of(&f), class.class_id);
                }
                assert_eq!(total as u64, q - 1);
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force_census() {
    for ctx in fields().iter().filter(|c| c.q() <= 49) {
        let q = ctx.q();
        let mut expected = Vec::new();
        for n in 2..q {
            for m in (1..n).filter(|&m| gcd(n, m) == 1) {
                for a in ctx.nonzero_elements() {
                    let f = Binomial::new(ctx, a, n, m).unwrap();
                    if brute_force_is_perm(&f).is_perm {
                        expected.push((n, m, a));
                    }
                }
            }
        }
        let rows = enumerate_perm_binomials(ctx, &EnumOptions::default()).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.n, r.m, r.a)).collect();
        assert_eq!(got, expected, "F_{q}");
    }
}

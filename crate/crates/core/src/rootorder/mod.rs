//! Root multisets and the order `a <= b  <=>  b - a` is a non-negative
//! integer, together with the counting functions that drive the
//! composition-series machinery.

mod multiset;

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactpoly::Rational;

pub use multiset::RootMultiset;

/// `a <= b` in the integer-step order (`b - a` in `{0, 1, 2, ...}`), or the
/// strict version (`b - a` in `{1, 2, ...}`).
pub fn precedes(a: &Rational, b: &Rational, strict: bool) -> bool {
    let d = b - a;
    d.is_integer()
        && if strict {
            d.is_positive()
        } else {
            !d.is_negative()
        }
}

/// Representative of the coset `a + Z`, the fractional part in `[0, 1)`.
pub fn coset_key(a: &Rational) -> Rational {
    a - a.floor()
}

/// Splits `r` into its maximal chains, one per `Z`-coset, ordered by their
/// smallest element.
pub fn chain_decompose(r: &RootMultiset) -> Vec<RootMultiset> {
    let mut by_coset: BTreeMap<Rational, RootMultiset> = BTreeMap::new();
    for (v, k) in r.iter() {
        by_coset
            .entry(coset_key(v))
            .or_default()
            .insert(v.clone(), k);
    }
    let mut parts: Vec<RootMultiset> = by_coset.into_values().collect();
    parts.sort_by(|a, b| a.min().cmp(&b.min()));
    parts
}

/// Number of elements of `z` (with multiplicity) strictly preceding `beta`.
pub fn count_strictly_below(z: &RootMultiset, beta: &Rational) -> usize {
    z.count_where(|a| precedes(a, beta, true))
}

/// Number of elements of `z` (with multiplicity) at or above `beta`.
pub fn count_at_or_above(z: &RootMultiset, beta: &Rational) -> usize {
    z.count_where(|a| precedes(beta, a, false))
}

/// `ell(Z) = sum_{b in Z} |(R \ Z)_{< b}|`, the bound on the length of a
/// chain of star steps starting at `Z`.
pub fn ell(r: &RootMultiset, z: &RootMultiset) -> Result<usize> {
    let rest = r.difference(z)?;
    Ok(z.iter()
        .map(|(b, k)| k * count_strictly_below(&rest, b))
        .sum())
}

/// `phi_Z(beta) = min(|(R \ Z)_{< beta}|, |Z_{>= beta}|)`, the multiplicity
/// of `L(beta)` as a composition factor of `A_C(Z)`.
pub fn phi(r: &RootMultiset, z: &RootMultiset, beta: &Rational) -> Result<usize> {
    let rest = r.difference(z)?;
    if !r.contains(beta) {
        return Err(Error::NotARoot(beta.to_string()));
    }
    Ok(count_strictly_below(&rest, beta).min(count_at_or_above(z, beta)))
}

/// The closest element of `R \ X` strictly below `beta`, if any.
pub fn star_target(
    r: &RootMultiset,
    x: &RootMultiset,
    beta: &Rational,
) -> Result<Option<Rational>> {
    let rest = r.difference(x)?;
    Ok(rest
        .underlying()
        .filter(|a| precedes(a, beta, true))
        .max()
        .cloned())
}

/// `X * beta`: one copy of `beta` is replaced by the closest element of
/// `R \ X` strictly below it.
pub fn star(r: &RootMultiset, x: &RootMultiset, beta: &Rational) -> Result<RootMultiset> {
    if !x.contains(beta) {
        return Err(Error::NotAMember(beta.to_string()));
    }
    let hat = star_target(r, x, beta)?.ok_or_else(|| Error::StarUndefined(beta.to_string()))?;
    let mut out = x.clone();
    out.remove_one(beta);
    out.insert(hat, 1);
    Ok(out)
}

/// Whether `beta - alpha` is a positive integer for some `alpha` in `y`
/// and `beta` in `x`.
pub fn has_positive_gap(x: &RootMultiset, y: &RootMultiset) -> bool {
    x.underlying()
        .any(|b| y.underlying().any(|a| precedes(a, b, true)))
}

/// `|R_i cap X|` for each maximal chain `R_i` of `R`, in chain order.
pub fn chain_profile(r: &RootMultiset, x: &RootMultiset) -> Vec<usize> {
    chain_decompose(r)
        .iter()
        .map(|chain| {
            x.iter()
                .filter(|(v, _)| chain.contains(v))
                .map(|(_, k)| k)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{frac, int};
    use proptest::prelude::*;

    fn ms(v: &[i64]) -> RootMultiset {
        RootMultiset::from_ints(v)
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(&int(0), &int(2), false));
        assert!(!precedes(&int(0), &int(0), true));
        assert!(precedes(&int(0), &int(0), false));
        assert!(!precedes(&int(0), &frac(3, 2), false));
        assert!(!precedes(&int(2), &int(0), false));
    }

    #[test]
    fn chain_decompose_examples() {
        assert_eq!(chain_decompose(&ms(&[0, 2, 5, 7])), vec![ms(&[0, 2, 5, 7])]);
        let r = RootMultiset::from_values(vec![int(0), frac(3, 2), frac(5, 2)]);
        assert_eq!(
            chain_decompose(&r),
            vec![
                ms(&[0]),
                RootMultiset::from_values(vec![frac(3, 2), frac(5, 2)])
            ]
        );
        assert!(chain_decompose(&RootMultiset::new()).is_empty());
        // negative representatives land in the right coset
        let r = RootMultiset::from_values(vec![frac(-1, 2), frac(7, 2), int(-3)]);
        assert_eq!(chain_decompose(&r).len(), 2);
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell(&ms(&[0, 2]), &ms(&[2])).unwrap(), 1);
        assert_eq!(ell(&ms(&[0, 2, 5, 7]), &ms(&[2, 7])).unwrap(), 3);
        assert_eq!(ell(&ms(&[0, 2, 5, 7]), &ms(&[])).unwrap(), 0);
        assert_eq!(ell(&ms(&[0, 2]), &ms(&[3])), Err(Error::NotSubmultiset));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&ms(&[0, 2]), &ms(&[2]), &int(2)).unwrap(), 1);
        assert_eq!(phi(&ms(&[0, 2]), &ms(&[2]), &int(0)).unwrap(), 0);
        assert_eq!(phi(&ms(&[0, 2, 5, 7]), &ms(&[2, 7]), &int(5)).unwrap(), 1);
        assert!(matches!(
            phi(&ms(&[0, 2]), &ms(&[2]), &int(1)),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&ms(&[0, 2]), &ms(&[2]), &int(2)).unwrap(), ms(&[0]));
        assert_eq!(
            star(&ms(&[0, 2, 5, 7]), &ms(&[0, 7]), &int(7)).unwrap(),
            ms(&[0, 5])
        );
        assert_eq!(
            star(&ms(&[0, 2, 2]), &ms(&[2, 2]), &int(2)).unwrap(),
            ms(&[0, 2])
        );
        assert!(matches!(
            star(&ms(&[0, 2]), &ms(&[0]), &int(0)),
            Err(Error::StarUndefined(_))
        ));
        assert!(matches!(
            star(&ms(&[0, 2]), &ms(&[0]), &int(2)),
            Err(Error::NotAMember(_))
        ));
    }

    /// Brute-force star: scan every candidate in the complement.
    fn star_by_scan(r: &RootMultiset, x: &RootMultiset, beta: &Rational) -> Option<RootMultiset> {
        let rest = r.saturating_difference(x);
        let mut best: Option<&Rational> = None;
        for a in rest.values() {
            let d = beta - a;
            if d.is_integer() && d > int(0) && best.map_or(true, |b| d < beta - b) {
                best = Some(a);
            }
        }
        best.map(|hat| {
            let mut out = x.clone();
            out.remove_one(beta);
            out.insert(hat.clone(), 1);
            out
        })
    }

    fn arb_instance() -> impl Strategy<Value = (RootMultiset, RootMultiset)> {
        prop::collection::vec((-4i64..9, any::<bool>(), any::<bool>()), 0..7).prop_map(|v| {
            let mut r = RootMultiset::new();
            let mut x = RootMultiset::new();
            for (n, half, in_x) in v {
                let a = if half { frac(2 * n + 1, 2) } else { int(n) };
                r.insert(a.clone(), 1);
                if in_x {
                    x.insert(a, 1);
                }
            }
            (r, x)
        })
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-10i64..10, 1i64..3).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn order_is_partial(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert!(precedes(&a, &a, false));
            if precedes(&a, &b, false) && precedes(&b, &a, false) {
                prop_assert_eq!(&a, &b);
            }
            if precedes(&a, &b, false) && precedes(&b, &c, false) {
                prop_assert!(precedes(&a, &c, false));
            }
        }

        #[test]
        fn chains_partition_and_are_comparable((r, _x) in arb_instance()) {
            let parts = chain_decompose(&r);
            let total = parts.iter().fold(RootMultiset::new(), |acc, p| acc.union(p));
            prop_assert_eq!(total, r);
            for (i, p) in parts.iter().enumerate() {
                for a in p.underlying() {
                    for b in p.underlying() {
                        prop_assert!(precedes(a, b, false) || precedes(b, a, false));
                    }
                    for q in &parts[i + 1..] {
                        for b in q.underlying() {
                            prop_assert!(!precedes(a, b, false) && !precedes(b, a, false));
                        }
                    }
                }
            }
        }

        #[test]
        fn star_decreases_ell_and_keeps_chain_profile((r, x) in arb_instance()) {
            let l = ell(&r, &x).unwrap();
            for beta in x.underlying() {
                let scanned = star_by_scan(&r, &x, beta);
                match star(&r, &x, beta) {
                    Ok(next) => {
                        prop_assert_eq!(Some(next.clone()), scanned);
                        prop_assert!(ell(&r, &next).unwrap() + 1 <= l);
                        prop_assert_eq!(chain_profile(&r, &next), chain_profile(&r, &x));
                        prop_assert_eq!(next.len(), x.len());
                    }
                    Err(_) => prop_assert!(scanned.is_none()),
                }
            }
        }

        #[test]
        fn ell_zero_iff_phi_vanishes((r, x) in arb_instance()) {
            let l = ell(&r, &x).unwrap();
            let all_zero = r.underlying().all(|b| phi(&r, &x, b).unwrap() == 0);
            prop_assert_eq!(l == 0, all_zero);
            let y = r.difference(&x).unwrap();
            prop_assert_eq!(l == 0, !has_positive_gap(&x, &y));
        }
    }
}

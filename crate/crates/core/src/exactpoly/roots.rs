use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};
use crate::rootorder::RootMultiset;

impl Poly {
    /// Splits off every rational root with its multiplicity.
    ///
    /// Returns `(roots, cofactor)` with `self = lc * Poly_roots * cofactor`
    /// and `cofactor` monic without rational roots. Candidates come from the
    /// rational root theorem applied to the primitive integer form.
    pub fn rational_roots(&self) -> Result<(RootMultiset, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rest = self.monic();
        let mut roots = RootMultiset::new();

        let zero = Rational::zero();
        while rest.coeff(0).is_zero() && !rest.is_constant() {
            rest = rest.div_exact(&Poly::var())?;
            roots.insert(zero.clone(), 1);
        }
        if rest.is_constant() {
            return Ok((roots, rest));
        }

        let ints = primitive_integer_form(&rest);
        let lead = ints.last().expect("nonzero").abs();
        let tail = ints[0].abs();
        let bound = root_bound(&ints);
        let mut candidates: Vec<Rational> = Vec::new();
        for d in divisors(&lead) {
            let top = &bound * &d;
            let mut n = BigInt::one();
            while n <= top && n <= tail {
                if (&tail % &n).is_zero() {
                    let c = Rational::new(n.clone(), d.clone());
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
                n += 1;
            }
        }
        candidates.sort();
        candidates.dedup();

        for c in candidates {
            if rest.is_constant() {
                break;
            }
            let lin = Poly::linear_root(&c);
            while !rest.is_constant() && rest.eval(&c).is_zero() {
                rest = rest.div_exact(&lin)?;
                roots.insert(c.clone(), 1);
            }
        }
        Ok((roots, rest))
    }
}

/// Scales a rational polynomial to integer coefficients with content one.
fn primitive_integer_form(f: &Poly) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

/// An integer bounding the absolute value of every complex root,
/// `2 max |a_{n-i} / a_n|^(1/i)` rounded up.
fn root_bound(ints: &[BigInt]) -> BigInt {
    let n = ints.len() - 1;
    let lead = ints[n].abs();
    let mut best = BigInt::zero();
    for i in 1..=n {
        let mut a = ints[n - i].abs();
        if i == n {
            a = a.div_ceil(&BigInt::from(2));
        }
        let q = a.div_ceil(&lead);
        let r = q.nth_root(i as u32) + 1;
        best = best.max(r);
    }
    best * 2
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn roots_of_split_polynomial() {
        let (r, c) = Poly::from_ints(&[0, -2, 1]).rational_roots().unwrap();
        assert_eq!(r, RootMultiset::from_ints(&[0, 2]));
        assert!(c.is_one());
    }

    #[test]
    fn irreducible_cofactor_is_kept() {
        // (h-1)^2 (h^2+1)
        let f = &Poly::from_ints(&[1, -2, 1]) * &Poly::from_ints(&[1, 0, 1]);
        let (r, c) = f.rational_roots().unwrap();
        assert_eq!(r, RootMultiset::from_ints(&[1, 1]));
        assert_eq!(c, Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn half_integer_coefficients() {
        let f = Poly::new(vec![int(0), frac(-1, 2), frac(-1, 2)]);
        let (r, c) = f.rational_roots().unwrap();
        assert_eq!(r, RootMultiset::from_ints(&[0, -1]));
        assert!(c.is_one());
    }

    #[test]
    fn non_integer_roots() {
        // 6(h - 1/2)(h + 2/3)
        let r = RootMultiset::from_values(vec![frac(1, 2), frac(-2, 3)]);
        let f = Poly::from_roots(&r, &int(6)).unwrap();
        assert_eq!(f.rational_roots().unwrap().0, r);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(Poly::zero().rational_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divisor_listing() {
        let ds: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect();
        assert_eq!(ds, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn large_roots_and_bound() {
        let r =
            RootMultiset::from_values(vec![int(1000), int(-999), frac(-1, 7), int(30), int(32)]);
        let f = Poly::from_roots(&r, &int(3)).unwrap();
        assert_eq!(f.rational_roots().unwrap().0, r);
        let b = root_bound(&primitive_integer_form(&f));
        assert!(b >= BigInt::from(1000));
    }

    proptest! {
        #[test]
        fn recovers_roots(
            xs in prop::collection::vec((-9i64..9, 1i64..4), 0..6),
            xi in (1i64..7, 1i64..4, any::<bool>()),
        ) {
            let r = RootMultiset::from_values(xs.iter().map(|&(n, d)| frac(n, d)).collect());
            let lead = if xi.2 { frac(xi.0, xi.1) } else { -frac(xi.0, xi.1) };
            let f = Poly::from_roots(&r, &lead).unwrap();
            let (got, cof) = f.rational_roots().unwrap();
            prop_assert_eq!(got, r);
            prop_assert!(cof.is_one());
        }
    }
}

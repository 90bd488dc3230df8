//! Smith algebra data: the polynomial `g`, its companion `u` with
//! `g(h) = u(h-1) - u(h)`, central characters and dimensions of the
//! finite-dimensional simple modules `L(lambda)`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Degree, Poly, Rational};
use crate::rootorder::RootMultiset;

/// `S(g)` together with a fixed choice of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithAlgebra {
    g: Poly,
    u: Poly,
}

/// What a central character `C` determines: the roots of `u + C` and its
/// leading coefficient, with `u + C = leading * Poly_roots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacterData {
    pub c: Rational,
    pub roots: RootMultiset,
    pub leading: Rational,
}

impl SmithAlgebra {
    /// From `g`, choosing `u` with zero constant term.
    pub fn from_g(g: Poly) -> Result<Self> {
        let u = u_from_g(&g, &Rational::zero())?;
        Ok(SmithAlgebra { g, u })
    }

    pub fn from_u(u: Poly) -> Result<Self> {
        let g = g_from_u(&u)?;
        Ok(SmithAlgebra { g, u })
    }

    /// From the factored data `u + C = leading * Poly_roots`.
    pub fn from_roots(roots: &RootMultiset, leading: &Rational, c: &Rational) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::ConstantU);
        }
        let f = Poly::from_roots(roots, leading)?;
        Self::from_u(&f - &Poly::constant(c.clone()))
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    /// Factors `u + C` over the rationals.
    pub fn central_data(&self, c: &Rational) -> Result<CentralCharacterData> {
        let f = &self.u + &Poly::constant(c.clone());
        let (roots, cofactor) = f.rational_roots()?;
        if !cofactor.is_one() {
            return Err(Error::NotSplit);
        }
        let leading = f.leading().expect("deg u >= 1").clone();
        Ok(CentralCharacterData {
            c: c.clone(),
            roots,
            leading,
        })
    }

    pub fn simple_dim(&self, lambda: &Rational) -> Option<usize> {
        simple_dim(&self.u, lambda)
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// The unique `u` with `u(h-1) - u(h) = g(h)` and constant term `c0`.
///
/// The coefficient of `h^m` in `u(h-1) - u(h)` is
/// `sum_{k > m} c_k binom(k, m) (-1)^(k-m)`, which is triangular in the
/// unknowns and is solved from the top degree down.
pub fn u_from_g(g: &Poly, c0: &Rational) -> Result<Poly> {
    let d = g.degree().finite().ok_or(Error::ZeroG)?;
    let mut c = vec![Rational::zero(); d + 2];
    c[0] = c0.clone();
    for m in (0..=d).rev() {
        // g_m = -(m+1) c_{m+1} + sum_{k >= m+2} c_k binom(k,m) (-1)^(k-m)
        let mut rest = Rational::zero();
        for (k, ck) in c.iter().enumerate().skip(m + 2) {
            let term = ck * binomial(k, m);
            if (k - m) % 2 == 0 {
                rest += term;
            } else {
                rest -= term;
            }
        }
        c[m + 1] = (rest - g.coeff(m)) / int((m + 1) as i64);
    }
    Ok(Poly::new(c))
}

/// `g(h) = u(h-1) - u(h)`.
pub fn g_from_u(u: &Poly) -> Result<Poly> {
    match u.degree() {
        Degree::Finite(d) if d >= 1 => Ok(&u.shift(&int(-1)) - u),
        _ => Err(Error::ConstantU),
    }
}

/// The value of the Casimir `xy - u(h)` on the rank-one module with
/// `y.1 = p`, `x.1 = q`, i.e. `p(h+1) q(h) - u(h)`, which must be constant.
pub fn central_character(p: &Poly, q: &Poly, u: &Poly) -> Result<Rational> {
    let f = &(&p.shift(&int(1)) * q) - u;
    if f.is_constant() {
        Ok(f.coeff(0))
    } else {
        Err(Error::NotConstant(f.to_string()))
    }
}

/// Dimension of `L(lambda)`: the least `j >= 1` with
/// `u(lambda) - u(lambda - j) = 0`, or `None` when no such `j` exists.
pub fn simple_dim(u: &Poly, lambda: &Rational) -> Option<usize> {
    // j -> u(lambda) - u(lambda - j) as a polynomial in j
    let shifted = u.shift(lambda).reflect();
    let f = &Poly::constant(u.eval(lambda)) - &shifted;
    if f.is_zero() {
        // constant u: every j works
        return Some(1);
    }
    let (roots, _) = f.rational_roots().ok()?;
    roots
        .underlying()
        .filter(|j| j.is_integer() && j.is_positive())
        .min()
        .map(|j| j.to_integer().try_into().expect("dimension fits in usize"))
}

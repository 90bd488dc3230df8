//! Exponential modules `E(p, C, lambda, X)` on `k[t] e^p`, their duals and
//! the action matrices `P(h)`, `Q(h)` over the `k[h]`-basis
//! `e^p, t e^p, ..., t^(n-1) e^p`.

mod matrix;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};
use crate::rankone::{Generator, RankOneModule};
use crate::rootorder::{precedes, RootMultiset};
use crate::smith;

pub use matrix::{verify_central, verify_relations, PolyMatrix};

/// `coeff(t) e^p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylElement {
    pub coeff: Poly,
}

impl WeylElement {
    pub fn new(coeff: Poly) -> Self {
        WeylElement { coeff }
    }

    /// `t^k e^p`.
    pub fn monomial(k: usize) -> Self {
        WeylElement::new(Poly::monomial(Rational::one(), k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpModule {
    p_weyl: Poly,
    roots: RootMultiset,
    leading: Rational,
    c: Rational,
    lambda: Rational,
    xsub: RootMultiset,
    dual: bool,
    u: Poly,
    q_x: Poly,
    p_x: Poly,
}

/// What can be said about simplicity of an exponential module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple,
    Unknown,
}

impl ExpModule {
    /// `u + C = leading * Poly_roots`; `p_weyl` is the exponent in `t`.
    pub fn build(
        p_weyl: &Poly,
        roots: &RootMultiset,
        leading: &Rational,
        c: &Rational,
        lambda: &Rational,
        xsub: &RootMultiset,
        dual: bool,
    ) -> Result<Self> {
        if leading.is_zero() {
            return Err(Error::ZeroLeading);
        }
        if !roots.contains(lambda) {
            return Err(Error::NotAMember(lambda.to_string()));
        }
        let mut rest = roots.clone();
        rest.remove_one(lambda);
        let others = rest.difference(xsub)?;
        let u_plus_c = Poly::from_roots(roots, leading)?;
        let u = &u_plus_c - &Poly::constant(c.clone());
        let q_x = Poly::from_roots(xsub, &Rational::one())?;
        let p_x = Poly::from_roots(&others, leading)?.shift(&int(-1));
        let lhs = &(&Poly::linear_root(lambda) * &p_x.shift(&int(1))) * &q_x;
        if lhs != u_plus_c {
            return Err(Error::RelationViolated(
                "(h - lambda) P_X(h+1) Q_X(h) != u(h) + C".into(),
            ));
        }
        Ok(ExpModule {
            p_weyl: p_weyl.clone(),
            roots: roots.clone(),
            leading: leading.clone(),
            c: c.clone(),
            lambda: lambda.clone(),
            xsub: xsub.clone(),
            dual,
            u,
            q_x,
            p_x,
        })
    }

    pub fn p_weyl(&self) -> &Poly {
        &self.p_weyl
    }

    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    pub fn leading(&self) -> &Rational {
        &self.leading
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn xsub(&self) -> &RootMultiset {
        &self.xsub
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn g(&self) -> Poly {
        smith::g_from_u(&self.u).expect("deg u >= 1")
    }

    pub fn q_x(&self) -> &Poly {
        &self.q_x
    }

    pub fn p_x(&self) -> &Poly {
        &self.p_x
    }

    /// The same data with the dual flag set.
    pub fn dual(&self) -> Self {
        let mut m = self.clone();
        m.dual = true;
        m
    }

    /// Rank over `k[h]`, the degree of the exponent.
    pub fn rank(&self) -> Result<usize> {
        match self.p_weyl.degree().finite() {
            Some(n) if n >= 1 => Ok(n),
            _ => Err(Error::WrongDegree {
                expected: ">= 1".into(),
                found: self.p_weyl.degree().to_string(),
            }),
        }
    }

    /// `d/dt` on `f e^p`: `f' + f p'`.
    fn d(&self, f: &Poly) -> Poly {
        &f.derivative() + &(f * &self.p_weyl.derivative())
    }

    fn mul_t(f: &Poly) -> Poly {
        &Poly::var() * f
    }

    /// The image of `h`: `theta = t d + lambda + 1`, or `-d t + lambda + 1`
    /// for the dual.
    fn theta(&self, f: &Poly) -> Poly {
        let l1 = &self.lambda + int(1);
        let core = if self.dual {
            -self.d(&Self::mul_t(f))
        } else {
            Self::mul_t(&self.d(f))
        };
        &core + &f.scale(&l1)
    }

    /// `r(theta) f` by Horner.
    fn apply_in_theta(&self, r: &Poly, f: &Poly) -> Poly {
        r.coeffs()
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &self.theta(&acc) + &f.scale(c))
    }

    fn act_one(&self, g: Generator, f: &Poly) -> Poly {
        match (g, self.dual) {
            // x -> d Q_X(theta - 1), y -> t P_X(theta + 1)
            (Generator::X, false) => self.d(&self.apply_in_theta(&self.q_x.shift(&int(-1)), f)),
            (Generator::Y, false) => Self::mul_t(&self.apply_in_theta(&self.p_x.shift(&int(1)), f)),
            // under t -> d, d -> -t
            (Generator::X, true) => {
                -Self::mul_t(&self.apply_in_theta(&self.q_x.shift(&int(-1)), f))
            }
            (Generator::Y, true) => self.d(&self.apply_in_theta(&self.p_x.shift(&int(1)), f)),
            (Generator::H, _) => self.theta(f),
            (Generator::Z, _) => {
                let xy = self.act_one(Generator::X, &self.act_one(Generator::Y, f));
                &xy - &self.apply_in_theta(&self.u, f)
            }
        }
    }

    /// Applies a word in the generators, rightmost letter first.
    pub fn weyl_act(&self, word: &[Generator], v: &WeylElement) -> WeylElement {
        let coeff = word
            .iter()
            .rev()
            .fold(v.coeff.clone(), |acc, g| self.act_one(*g, &acc));
        WeylElement::new(coeff)
    }

    pub fn weyl_act_str(&self, word: &str, v: &WeylElement) -> Result<WeylElement> {
        Ok(self.weyl_act(&Generator::parse_word(word)?, v))
    }

    /// The element `sum_i r_i(h) . t^i e^p` of `k[t] e^p`.
    pub fn embed(&self, coords: &[Poly]) -> WeylElement {
        let coeff = coords
            .iter()
            .enumerate()
            .map(|(i, r)| self.apply_in_theta(r, &Poly::monomial(Rational::one(), i)))
            .fold(Poly::zero(), |acc, f| &acc + &f);
        WeylElement::new(coeff)
    }

    /// Coordinates of `t^s e^p` in the basis `t^i e^p`, `i < n`.
    pub fn khbasis_reduce(&self, s: usize) -> Result<Vec<Poly>> {
        self.reduce(&WeylElement::monomial(s))
    }

    /// Coordinates of an arbitrary element in the basis `t^i e^p`, `i < n`.
    ///
    /// `h . t^s e^p` has top term `±n a_n t^(s+n)`, which expresses
    /// `t^(s+n) e^p` through lower powers.
    pub fn reduce(&self, v: &WeylElement) -> Result<Vec<Poly>> {
        let n = self.rank()?;
        let top = v.coeff.degree().finite().unwrap_or(0);
        let mut basis: Vec<Vec<Poly>> = Vec::with_capacity(top + 1);
        for s in 0..=top {
            if s < n {
                let mut e = vec![Poly::zero(); n];
                e[s] = Poly::one();
                basis.push(e);
                continue;
            }
            let w = self.theta(&Poly::monomial(Rational::one(), s - n));
            let lead = w.coeff(s);
            let mut acc: Vec<Poly> = basis[s - n].iter().map(|r| &Poly::var() * r).collect();
            for (j, b) in basis.iter().enumerate().take(s) {
                let cj = w.coeff(j);
                if cj.is_zero() {
                    continue;
                }
                for (a, bj) in acc.iter_mut().zip(b) {
                    *a = &*a - &bj.scale(&cj);
                }
            }
            let inv = lead.recip();
            basis.push(acc.iter().map(|r| r.scale(&inv)).collect());
        }
        let mut out = vec![Poly::zero(); n];
        for (s, b) in basis.iter().enumerate() {
            let c = v.coeff.coeff(s);
            if c.is_zero() {
                continue;
            }
            for (o, bs) in out.iter_mut().zip(b) {
                *o = &*o + &bs.scale(&c);
            }
        }
        Ok(out)
    }

    /// The closed-form matrices of a non-dual module.
    pub fn exp_matrices(&self) -> Result<(PolyMatrix, PolyMatrix)> {
        if self.dual {
            return Err(Error::DualUnsupported);
        }
        let n = self.rank()?;
        let alpha = |j: usize| self.p_weyl.coeff(j);
        let top = int(n as i64) * alpha(n);
        let h_minus = |a: &Rational| Poly::linear_root(a);

        let mut q = PolyMatrix::zero(n);
        for j in 1..=n {
            q.set(0, j - 1, self.q_x.scale(&(int(j as i64) * alpha(j))));
        }
        let sub = &self.q_x * &h_minus(&self.lambda);
        for i in 1..n {
            q.set(i, i - 1, sub.clone());
        }

        let mut p = PolyMatrix::zero(n);
        for i in 0..n - 1 {
            p.set(i, i + 1, self.p_x.clone());
        }
        let inv = top.recip();
        let first = &self.p_x * &h_minus(&(&self.lambda + int(1)));
        p.set(n - 1, 0, first.scale(&inv));
        for j in 1..n {
            let c = -(int(j as i64) * alpha(j)) * &inv;
            p.set(n - 1, j, self.p_x.scale(&c));
        }
        Ok((p, q))
    }

    /// Matrices read off from the action: row `i` of `Q` is the reduction of
    /// `x . t^i e^p`, and likewise for `P` with `y`. Works for duals too.
    pub fn action_matrices(&self) -> Result<(PolyMatrix, PolyMatrix)> {
        let n = self.rank()?;
        let rows = |g: Generator| -> Result<PolyMatrix> {
            let rows = (0..n)
                .map(|i| self.reduce(&self.weyl_act(&[g], &WeylElement::monomial(i))))
                .collect::<Result<Vec<_>>>()?;
            PolyMatrix::new(rows)
        };
        Ok((rows(Generator::Y)?, rows(Generator::X)?))
    }

    /// No `mu` in `R \ {lambda}` with `mu - lambda` a positive integer.
    /// Requires `X = R \ {lambda}`.
    pub fn exp_simple_sufficient(&self) -> Result<bool> {
        let mut rest = self.roots.clone();
        rest.remove_one(&self.lambda);
        if self.xsub != rest {
            return Err(Error::WrongX);
        }
        let blocked = rest.underlying().any(|mu| precedes(&self.lambda, mu, true));
        Ok(!blocked)
    }

    /// Rank one is decided exactly through the identification; for higher
    /// rank only the sufficient condition is available.
    pub fn simplicity(&self) -> Result<Simplicity> {
        if self.rank()? == 1 {
            let m = self.rank_one_module()?;
            return Ok(if m.is_simple() {
                Simplicity::Simple
            } else {
                Simplicity::NotSimple
            });
        }
        match self.exp_simple_sufficient() {
            Ok(true) => Ok(Simplicity::Simple),
            Ok(false) | Err(Error::WrongX) => Ok(Simplicity::Unknown),
            Err(e) => Err(e),
        }
    }

    /// `(C, X, xi)` with this rank-one module isomorphic to `F_xi A_C(X)`.
    pub fn identify_rank_one(&self) -> Result<(Rational, RootMultiset, Rational)> {
        let n = self.p_weyl.degree().finite();
        if n != Some(1) {
            return Err(Error::WrongDegree {
                expected: "1".into(),
                found: self.p_weyl.degree().to_string(),
            });
        }
        let alpha = self.p_weyl.coeff(1);
        if self.dual {
            let mut x = self.xsub.clone();
            x.insert(self.lambda.clone(), 1);
            Ok((self.c.clone(), x, alpha.recip()))
        } else {
            Ok((self.c.clone(), self.xsub.clone(), alpha))
        }
    }

    /// The rank-one module named by [`identify_rank_one`](Self::identify_rank_one).
    pub fn rank_one_module(&self) -> Result<RankOneModule> {
        let (c, x, xi) = self.identify_rank_one()?;
        RankOneModule::build(&self.roots, &self.leading, &c, &x)?.twist(&xi)
    }
}

//! Rank-one modules `A_C(X, xi)`.
//!
//! The module is `k[h]` with `x.f = xi f(h+1) q(h)` and
//! `y.f = xi^-1 f(h-1) p(h)`, where `q = Poly_X` is monic and
//! `p(h) = (u(h-1) + C) / q(h-1)`. Submodules are the ideals `t k[h]` with
//! `t | t(h-1) p(h)` and `t | t(h+1) q(h)`; everything about simplicity,
//! composition series and the socle reduces to combinatorics of the root
//! multiset `R = Roots(u + C)` split as `X + Y`.

mod lattice;
mod series;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};
use crate::rootorder::{self, precedes, RootMultiset};
use crate::smith;

pub use lattice::{factored, LatticeNode, SubmoduleLattice, DEFAULT_NODE_CAP};
pub use series::{CompositionSeries, K0Decomposition, SeriesEnumeration, SeriesStep};

/// A rank-one module `A_C(X, xi)`, stored with its derived polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneModule {
    roots: RootMultiset,
    leading: Rational,
    c: Rational,
    x: RootMultiset,
    y: RootMultiset,
    twist: Rational,
    u: Poly,
    q: Poly,
    p: Poly,
}

/// A minimal nonzero element `t` of the submodule lattice: the gapless
/// chain `gamma+1, ..., beta` with `gamma` in `Y` and `beta` in `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalElement {
    pub gamma: Rational,
    pub beta: Rational,
    pub t: Poly,
    pub quotient_dim: usize,
}

impl MinimalElement {
    fn new(gamma: Rational, beta: Rational) -> Self {
        let steps = (&beta - &gamma).to_integer();
        let n: usize = steps.try_into().expect("chain length fits in usize");
        let t = (1..=n)
            .map(|j| Poly::linear_root(&(&gamma + int(j as i64))))
            .product();
        MinimalElement {
            gamma,
            beta,
            t,
            quotient_dim: n,
        }
    }

    /// Roots of `t`: `gamma+1, ..., beta`.
    pub fn roots(&self) -> RootMultiset {
        (1..=self.quotient_dim)
            .map(|j| &self.gamma + int(j as i64))
            .collect()
    }
}

/// One of the generators acting on a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
    H,
    /// The Casimir `xy - u(h)`.
    Z,
}

impl Generator {
    /// Parses a word such as `"xy"`; letters act right to left.
    pub fn parse_word(word: &str) -> Result<Vec<Generator>> {
        word.chars()
            .map(|c| match c {
                'x' => Ok(Generator::X),
                'y' => Ok(Generator::Y),
                'h' => Ok(Generator::H),
                'z' => Ok(Generator::Z),
                other => Err(Error::Invalid(format!("unknown generator {other:?}"))),
            })
            .collect()
    }
}

impl RankOneModule {
    /// Builds `A_C(X)` for `u + C = leading * Poly_R`, with twist one.
    pub fn build(
        roots: &RootMultiset,
        leading: &Rational,
        c: &Rational,
        x: &RootMultiset,
    ) -> Result<Self> {
        if leading.is_zero() {
            return Err(Error::ZeroLeading);
        }
        if roots.is_empty() {
            return Err(Error::ConstantU);
        }
        let y = roots.difference(x)?;
        let u_plus_c = Poly::from_roots(roots, leading)?;
        let u = &u_plus_c - &Poly::constant(c.clone());
        let q = Poly::from_roots(x, &Rational::one())?;
        let p = u_plus_c.shift(&int(-1)).div_exact(&q.shift(&int(-1)))?;
        let m = RankOneModule {
            roots: roots.clone(),
            leading: leading.clone(),
            c: c.clone(),
            x: x.clone(),
            y,
            twist: Rational::one(),
            u,
            q,
            p,
        };
        m.check_invariants()?;
        Ok(m)
    }

    /// Same algebra and central character, different `X`.
    pub fn with_x(&self, x: &RootMultiset) -> Result<Self> {
        let mut m = Self::build(&self.roots, &self.leading, &self.c, x)?;
        m.twist = self.twist.clone();
        Ok(m)
    }

    fn check_invariants(&self) -> Result<()> {
        let u_plus_c = &self.u + &Poly::constant(self.c.clone());
        if &self.q * &self.p.shift(&int(1)) != u_plus_c {
            return Err(Error::RelationViolated("q(h) p(h+1) != u(h) + C".into()));
        }
        let (y_roots, _) = self.p.shift(&int(1)).rational_roots()?;
        if y_roots != self.y {
            return Err(Error::RelationViolated("Y != Roots p(h+1)".into()));
        }
        let lhs = &(&self.q.shift(&int(-1)) * &self.p) - &(&self.p.shift(&int(1)) * &self.q);
        if lhs != self.g() {
            return Err(Error::RelationViolated(
                "q(h-1)p(h) - p(h+1)q(h) != g(h)".into(),
            ));
        }
        Ok(())
    }

    pub fn roots(&self) -> &RootMultiset {
        &self.roots
    }

    /// Leading coefficient of `u + C`.
    pub fn leading(&self) -> &Rational {
        &self.leading
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn x(&self) -> &RootMultiset {
        &self.x
    }

    pub fn y(&self) -> &RootMultiset {
        &self.y
    }

    /// The twist parameter `xi`, the leading coefficient of `x.1`.
    pub fn twist_param(&self) -> &Rational {
        &self.twist
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn g(&self) -> Poly {
        smith::g_from_u(&self.u).expect("deg u >= 1")
    }

    /// Monic `q = Poly_X`.
    pub fn q(&self) -> &Poly {
        &self.q
    }

    /// `p = (u(h-1) + C) / q(h-1)`, leading coefficient that of `u + C`.
    pub fn p(&self) -> &Poly {
        &self.p
    }

    /// `x.1 = xi q`.
    pub fn x_poly(&self) -> Poly {
        self.q.scale(&self.twist)
    }

    /// `y.1 = xi^-1 p`.
    pub fn y_poly(&self) -> Poly {
        self.p.scale(&self.twist.recip())
    }

    /// Applies a word in the generators to `f`, rightmost letter first.
    pub fn act(&self, word: &[Generator], f: &Poly) -> Poly {
        word.iter()
            .rev()
            .fold(f.clone(), |acc, g| self.act_one(*g, &acc))
    }

    /// [`act`](Self::act) with the word given as a string like `"xy"`.
    pub fn act_str(&self, word: &str, f: &Poly) -> Result<Poly> {
        Ok(self.act(&Generator::parse_word(word)?, f))
    }

    fn act_one(&self, g: Generator, f: &Poly) -> Poly {
        match g {
            Generator::X => &f.shift(&int(1)) * &self.x_poly(),
            Generator::Y => &f.shift(&int(-1)) * &self.y_poly(),
            Generator::H => &Poly::var() * f,
            Generator::Z => f.scale(&self.c),
        }
    }

    /// Simple iff no `alpha` in `Y`, `beta` in `X` with `beta - alpha` a
    /// positive integer.
    pub fn is_simple(&self) -> bool {
        !rootorder::has_positive_gap(&self.x, &self.y)
    }

    /// `ell(X)`, an upper bound for the number of steps in a composition
    /// series.
    pub fn ell(&self) -> usize {
        rootorder::ell(&self.roots, &self.x).expect("X is a submultiset of R")
    }

    /// Whether the monic `t` (or zero) lies in the submodule lattice.
    pub fn lattice_member(&self, t: &Poly) -> Result<bool> {
        if t.is_zero() {
            return Ok(true);
        }
        if !t.is_monic() {
            return Err(Error::NotMonic);
        }
        let by_y = &t.shift(&int(-1)) * &self.p;
        let by_x = &t.shift(&int(1)) * &self.q;
        Ok(t.divides(&by_y) && t.divides(&by_x))
    }

    /// All minimal elements of the lattice other than zero, sorted by
    /// `beta` then `gamma`. Empty exactly when the module is simple.
    pub fn minimal_elements(&self) -> Vec<MinimalElement> {
        let mut out = Vec::new();
        for beta in self.x.underlying() {
            for gamma in self.y.underlying() {
                if !precedes(gamma, beta, true) {
                    continue;
                }
                let blocked = self
                    .roots
                    .underlying()
                    .any(|r| precedes(gamma, r, true) && precedes(r, beta, true));
                if !blocked {
                    out.push(MinimalElement::new(gamma.clone(), beta.clone()));
                }
            }
        }
        out.sort_by(|a, b| (&a.beta, &a.gamma).cmp(&(&b.beta, &b.gamma)));
        out
    }

    /// Every maximal submodule `t k[h]`, paired with the module it is
    /// isomorphic to. The quotient is `L(beta)` of dimension
    /// `beta - gamma`.
    pub fn maximal_submodules(&self) -> Result<Vec<(MinimalElement, RankOneModule)>> {
        self.minimal_elements()
            .into_iter()
            .map(|me| {
                let child_x = rootorder::star(&self.roots, &self.x, &me.beta)?;
                if smith::simple_dim(&self.u, &me.beta) != Some(me.quotient_dim) {
                    return Err(Error::RelationViolated(format!(
                        "dim L({}) != {}",
                        me.beta, me.quotient_dim
                    )));
                }
                let child = self.with_x(&child_x)?;
                Ok((me, child))
            })
            .collect()
    }

    /// `F_lambda`: multiplies the twist parameter by `lambda`.
    pub fn twist(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroTwist);
        }
        let mut m = self.clone();
        m.twist = &m.twist * lambda;
        Ok(m)
    }

    /// `(C, X, xi)`, which determines the module up to isomorphism.
    pub fn canonical_triple(&self) -> (Rational, RootMultiset, Rational) {
        (self.c.clone(), self.x.clone(), self.twist.clone())
    }

    pub fn is_isomorphic(&self, other: &RankOneModule) -> bool {
        self.u == other.u && self.canonical_triple() == other.canonical_triple()
    }
}

/// Classifies the rank-one module with `y.1 = p`, `x.1 = q` over `S_u`:
/// returns `(C, X, xi)` with the module isomorphic to `F_xi A_C(X)`.
pub fn canonical_form(p: &Poly, q: &Poly, u: &Poly) -> Result<(Rational, RootMultiset, Rational)> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = smith::central_character(p, q, u)?;
    let xi = q.leading().expect("q nonzero").clone();
    let (x, cofactor) = q.rational_roots()?;
    if !cofactor.is_one() {
        return Err(Error::NotSplit);
    }
    let g = smith::g_from_u(u)?;
    let lhs = &(&q.shift(&int(-1)) * p) - &(&p.shift(&int(1)) * q);
    if lhs != g {
        return Err(Error::RelationViolated(
            "q(h-1)p(h) - p(h+1)q(h) != g(h)".into(),
        ));
    }
    Ok((c, x, xi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::frac;
    use proptest::prelude::*;

    fn ms(v: &[i64]) -> RootMultiset {
        RootMultiset::from_ints(v)
    }

    fn module(r: &[i64], x: &[i64]) -> RankOneModule {
        RankOneModule::build(&ms(r), &int(1), &int(0), &ms(x)).unwrap()
    }

    #[test]
    fn build_examples() {
        let m = module(&[0, 2], &[2]);
        assert_eq!(m.q(), &Poly::from_ints(&[-2, 1]));
        assert_eq!(m.p(), &Poly::from_ints(&[-1, 1]));

        let m = RankOneModule::build(&ms(&[0, 2, 5]), &int(3), &int(4), &ms(&[])).unwrap();
        assert!(m.q().is_one());
        let expect = Poly::from_roots(&ms(&[0, 2, 5]), &int(3))
            .unwrap()
            .shift(&int(-1));
        assert_eq!(m.p(), &expect);

        // u = -1/2 h(h+1), X = {-1}: q = h + 1, p = -1/2 (h - 1)
        let m = RankOneModule::build(&ms(&[0, -1]), &frac(-1, 2), &int(0), &ms(&[-1])).unwrap();
        assert_eq!(m.q(), &Poly::from_ints(&[1, 1]));
        assert_eq!(m.p(), &Poly::new(vec![frac(1, 2), frac(-1, 2)]));
        assert_eq!(m.g(), Poly::var());

        assert_eq!(
            RankOneModule::build(&ms(&[0, 2]), &int(1), &int(0), &ms(&[3])),
            Err(Error::NotSubmultiset)
        );
        assert_eq!(
            RankOneModule::build(&ms(&[0, 2]), &int(0), &int(0), &ms(&[])),
            Err(Error::ZeroLeading)
        );
    }

    #[test]
    fn x_equals_r_is_ordinary() {
        let m = module(&[0, 2, 2], &[0, 2, 2]);
        assert!(m.y().is_empty());
        assert!(m.p().is_constant());
        assert!(m.is_simple());
        assert!(m.minimal_elements().is_empty());
    }

    #[test]
    fn commutator_acts_as_g() {
        let m = module(&[0, 2], &[2]);
        let f = Poly::one();
        let yx = m.act_str("yx", &f).unwrap();
        let xy = m.act_str("xy", &f).unwrap();
        assert_eq!(&yx - &xy, m.g());
        let sl2 = RankOneModule::build(&ms(&[0, -1]), &frac(-1, 2), &int(0), &ms(&[-1]))
            .unwrap()
            .twist(&frac(-1, 2))
            .unwrap();
        assert_eq!(
            sl2.act_str("x", &f).unwrap(),
            Poly::from_ints(&[1, 1]).scale(&frac(-1, 2))
        );
        assert_eq!(m.act_str("z", &Poly::var()).unwrap(), Poly::zero());
    }

    #[test]
    fn simplicity_examples() {
        assert!(!module(&[0, 2], &[2]).is_simple());
        assert!(module(&[0, 2], &[0]).is_simple());
        assert!(module(&[0, 2], &[]).is_simple());
        assert!(module(&[0, 2], &[0, 2]).is_simple());
    }

    #[test]
    fn lattice_member_examples() {
        let m = module(&[0, 2], &[2]);
        assert!(m.lattice_member(&Poly::from_ints(&[2, -3, 1])).unwrap());
        assert!(m.lattice_member(&Poly::one()).unwrap());
        assert!(m.lattice_member(&Poly::zero()).unwrap());
        assert!(!m.lattice_member(&Poly::from_ints(&[-1, 1])).unwrap());
        assert_eq!(
            m.lattice_member(&Poly::from_ints(&[2, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn minimal_element_examples() {
        let mins = module(&[0, 2], &[2]).minimal_elements();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].gamma, int(0));
        assert_eq!(mins[0].beta, int(2));
        assert_eq!(mins[0].t, Poly::from_ints(&[2, -3, 1]));
        assert_eq!(mins[0].quotient_dim, 2);

        let mins = module(&[0, 2, 5, 7], &[2, 7]).minimal_elements();
        let pairs: Vec<_> = mins
            .iter()
            .map(|m| (m.gamma.clone(), m.beta.clone(), m.quotient_dim))
            .collect();
        assert_eq!(pairs, vec![(int(0), int(2), 2), (int(5), int(7), 2)]);

        assert!(module(&[0, 2], &[0]).minimal_elements().is_empty());
    }

    #[test]
    fn maximal_submodule_examples() {
        let subs = module(&[0, 2], &[2]).maximal_submodules().unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].1.x(), &ms(&[0]));
        assert_eq!(subs[0].0.quotient_dim, 2);

        let subs = module(&[0, 2, 2], &[2, 2]).maximal_submodules().unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].1.x(), &ms(&[0, 2]));
        assert_eq!(subs[0].0.quotient_dim, 2);
        assert!(subs[0].1.is_simple());

        assert!(module(&[0, 2], &[0])
            .maximal_submodules()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn submodule_is_isomorphic_to_child() {
        // t k[h] with the restricted action matches the child module
        let m = module(&[0, 2, 5, 7], &[2, 7]);
        for (me, child) in m.maximal_submodules().unwrap() {
            let qbar = (&me.t.shift(&int(1)) * m.q()).div_exact(&me.t).unwrap();
            assert_eq!(&qbar, child.q());
            let f = Poly::from_ints(&[1, -2, 3]);
            for w in ["x", "y", "h"] {
                let lhs = m.act_str(w, &(&me.t * &f)).unwrap();
                let rhs = &me.t * &child.act_str(w, &f).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        let u = Poly::from_ints(&[0, -2, 1]);
        let got =
            canonical_form(&Poly::from_ints(&[-1, 1]), &Poly::from_ints(&[-2, 1]), &u).unwrap();
        assert_eq!(got, (int(0), ms(&[2]), int(1)));

        let u = Poly::new(vec![int(0), frac(-1, 2), frac(-1, 2)]);
        let p = Poly::new(vec![frac(1, 2), frac(-1, 2)]);
        let q = Poly::from_ints(&[1, 1]);
        assert_eq!(
            canonical_form(&p, &q, &u).unwrap(),
            (int(0), ms(&[-1]), int(1))
        );
        // twisting by 3 scales q and divides p
        let got = canonical_form(&p.scale(&frac(1, 3)), &q.scale(&int(3)), &u).unwrap();
        assert_eq!(got, (int(0), ms(&[-1]), int(3)));

        let bad = canonical_form(&Poly::var(), &Poly::var(), &u);
        assert!(matches!(bad, Err(Error::NotConstant(_))));
        // q = h^2 + 1 does not split
        let u = Poly::from_ints(&[0, 0, 1, 0, 1]).shift(&int(0));
        let q = Poly::from_ints(&[1, 0, 1]);
        let p = Poly::from_ints(&[0, 0, 1]).shift(&int(-1));
        assert_eq!(canonical_form(&p, &q, &u), Err(Error::NotSplit));
    }

    #[test]
    fn twist_examples() {
        let m = module(&[0, 2, 5, 7], &[2, 7]);
        assert_eq!(m.twist(&int(1)).unwrap(), m);
        let a = m.twist(&int(2)).unwrap().twist(&frac(-1, 3)).unwrap();
        assert_eq!(a, m.twist(&frac(-2, 3)).unwrap());
        let t = m.twist(&frac(-1, 2)).unwrap();
        assert_eq!(t.twist_param(), &frac(-1, 2));
        assert_eq!(t.minimal_elements(), m.minimal_elements());
        assert_eq!(m.twist(&int(0)), Err(Error::ZeroTwist));
        let (c, x, xi) = canonical_form(&t.y_poly(), &t.x_poly(), t.u()).unwrap();
        assert_eq!((c, x, xi), t.canonical_triple());
    }

    fn arb_module() -> impl Strategy<Value = RankOneModule> {
        (
            prop::collection::vec((-3i64..7, any::<bool>(), any::<bool>()), 1..6),
            (1i64..4, any::<bool>()),
            -3i64..3,
            1i64..4,
        )
            .prop_map(|(v, (lead, neg), c, tw)| {
                let mut r = RootMultiset::new();
                let mut x = RootMultiset::new();
                for (n, half, in_x) in v {
                    let a = if half { frac(2 * n + 1, 2) } else { int(n) };
                    r.insert(a.clone(), 1);
                    if in_x {
                        x.insert(a, 1);
                    }
                }
                let lead = if neg { -int(lead) } else { int(lead) };
                RankOneModule::build(&r, &lead, &int(c), &x)
                    .unwrap()
                    .twist(&int(tw))
                    .unwrap()
            })
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-9i64..9, 1i64..3), 0..11)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| frac(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn defining_relations_hold(m in arb_module(), f in arb_poly()) {
            let act = |w: &str| m.act_str(w, &f).unwrap();
            prop_assert_eq!(&act("hy") - &act("yh"), act("y"));
            prop_assert_eq!(&act("hx") - &act("xh"), -act("x"));
            prop_assert_eq!(&act("yx") - &act("xy"), &m.g() * &f);
            prop_assert_eq!(&act("xy") - &(m.u() * &f), f.scale(m.c()));
            prop_assert_eq!(act("z"), f.scale(m.c()));
        }

        #[test]
        fn simplicity_agrees_with_ell(m in arb_module()) {
            let simple = m.is_simple();
            prop_assert_eq!(simple, m.minimal_elements().is_empty());
            prop_assert_eq!(simple, m.ell() == 0);
        }

        #[test]
        fn minimal_elements_are_members(m in arb_module()) {
            for me in m.minimal_elements() {
                prop_assert!(m.lattice_member(&me.t).unwrap());
                prop_assert_eq!(smith::simple_dim(m.u(), &me.beta), Some(me.quotient_dim));
            }
        }

        #[test]
        fn canonical_form_recovers_triple(m in arb_module()) {
            let got = canonical_form(&m.y_poly(), &m.x_poly(), m.u()).unwrap();
            prop_assert_eq!(got, m.canonical_triple());
        }
    }
}

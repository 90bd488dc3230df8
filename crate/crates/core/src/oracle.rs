//! Slow verifiers that work from the divisibility definition of the
//! submodule lattice, with no use of chains, stars or minimal-element
//! criteria on the side being checked.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};
use crate::rankone::{CompositionSeries, RankOneModule};
use crate::rootorder::{self, coset_key, RootMultiset};
use crate::smith;

/// Search region for candidate `t`: monic products of `(h - v)` with `v` in
/// `points`, at most `max_multiplicity` times each, of degree at most
/// `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub base_roots: RootMultiset,
    pub span: usize,
    pub max_degree: usize,
    pub max_multiplicity: usize,
}

impl GridSpec {
    /// Points `gamma + 1 + j` for `gamma` in `Y` and `0 <= j <= span`.
    pub fn for_module(m: &RankOneModule) -> Self {
        let (x, y) = (m.x(), m.y());
        let mut span = 0usize;
        let mut mult_bound = 0usize;
        let mut by_coset: BTreeMap<Rational, (Vec<Rational>, Vec<Rational>)> = BTreeMap::new();
        for v in x.values() {
            by_coset.entry(coset_key(v)).or_default().0.push(v.clone());
        }
        for v in y.values() {
            by_coset.entry(coset_key(v)).or_default().1.push(v.clone());
        }
        for (xs, ys) in by_coset.values() {
            if let (Some(hi), Some(lo)) = (xs.iter().max(), ys.iter().min()) {
                let gap = (hi - lo).to_integer();
                if gap > 0.into() {
                    span = span.max(gap.try_into().expect("span fits in usize"));
                }
            }
            mult_bound = mult_bound.max(xs.len().min(ys.len()));
        }
        let mut points = RootMultiset::new();
        for gamma in y.underlying() {
            for j in 0..=span {
                let v = gamma + int(1 + j as i64);
                if !points.contains(&v) {
                    points.insert(v, 1);
                }
            }
        }
        let max_r = m.roots().iter().map(|(_, k)| k).max().unwrap_or(0);
        let max_multiplicity = (max_r + 1).max(mult_bound).max(1);
        let max_degree = (m.roots().len() + span).max(counting_degree_bound(m, &points));
        GridSpec {
            base_roots: points,
            span,
            max_degree: max_degree.max(1),
            max_multiplicity,
        }
    }

    fn points(&self) -> Vec<Rational> {
        self.base_roots.underlying().cloned().collect()
    }

    /// Fails if some `v` in `[min Y + 1, max X]` of a coset is missing.
    fn check_covers(&self, m: &RankOneModule) -> Result<()> {
        for gamma in m.y().underlying() {
            for beta in m.x().underlying() {
                if !rootorder::precedes(gamma, beta, true) {
                    continue;
                }
                let n: usize = (beta - gamma).to_integer().try_into().expect("small gap");
                for j in 1..=n {
                    let v = gamma + int(j as i64);
                    if !self.base_roots.contains(&v) {
                        return Err(Error::GridTooSmall(format!("{v} is not a grid point")));
                    }
                }
                if n > self.max_degree {
                    return Err(Error::GridTooSmall(format!("degree {n} exceeds the cap")));
                }
            }
        }
        Ok(())
    }
}

/// Upper bound on the degree of any member: the multiplicity of `v` in `t`
/// is at most the number of `Y + 1` points at or below `v` and at most the
/// number of `X` points at or above `v` in its coset.
fn counting_degree_bound(m: &RankOneModule, points: &RootMultiset) -> usize {
    points
        .underlying()
        .map(|v| {
            let below = m
                .y()
                .count_where(|a| coset_key(a) == coset_key(v) && (a + int(1)) <= *v);
            let above = m
                .x()
                .count_where(|b| coset_key(b) == coset_key(v) && b >= v);
            below.min(above)
        })
        .sum()
}

/// `t | t(h-1) p(h)` and `t | t(h+1) q(h)` by exact division.
fn is_member(m: &RankOneModule, t: &Poly) -> bool {
    let divides = |a: &Poly| match a.div_rem(t) {
        Ok((_, r)) => r.is_zero(),
        Err(_) => false,
    };
    divides(&(&t.shift(&int(-1)) * m.p())) && divides(&(&t.shift(&int(1)) * m.q()))
}

fn poly_of(points: &[Rational], mult: &[usize]) -> Poly {
    points
        .iter()
        .zip(mult)
        .flat_map(|(v, &k)| std::iter::repeat_n(Poly::linear_root(v), k))
        .product()
}

struct Search<'a> {
    m: &'a RankOneModule,
    grid: &'a GridSpec,
    points: Vec<Rational>,
    /// Index of `v - 1` among the points, if present.
    below: Vec<Option<usize>>,
    /// Whether `v + 1` is a point.
    has_above: Vec<bool>,
    found: Vec<(Vec<usize>, Poly)>,
}

impl Search<'_> {
    /// Assigns multiplicities in increasing order of the points, pruning
    /// with root counts read off from the two divisibilities:
    /// `m_t(v) <= m_t(v-1) + m_{Y+1}(v)` and `m_t(v) <= m_t(v+1) + m_X(v)`.
    fn dfs(&mut self, i: usize, mult: &mut Vec<usize>, degree: usize) {
        if i == self.points.len() {
            let t = poly_of(&self.points, mult);
            if is_member(self.m, &t) {
                self.found.push((mult.clone(), t));
            }
            return;
        }
        let v = self.points[i].clone();
        let from_below = self.below[i].map_or(0, |j| mult[j]);
        let y_here = self.m.y().multiplicity(&(&v - int(1)));
        let x_here = self.m.x().multiplicity(&v);
        let cap = (from_below + y_here)
            .min(self.grid.max_multiplicity)
            .min(self.grid.max_degree - degree);
        let cap = if self.has_above[i] {
            cap
        } else {
            cap.min(x_here)
        };
        for k in 0..=cap {
            if let Some(j) = self.below[i] {
                let x_below = self.m.x().multiplicity(&self.points[j]);
                if mult[j] > k + x_below {
                    continue;
                }
            }
            mult[i] = k;
            self.dfs(i + 1, mult, degree + k);
        }
        mult[i] = 0;
    }
}

/// Every nonzero member of the lattice whose roots lie on the grid, sorted
/// by degree and then by root list.
pub fn brute_lattice(m: &RankOneModule, grid: &GridSpec) -> Result<Vec<Poly>> {
    grid.check_covers(m)?;
    let points = grid.points();
    let below = points
        .iter()
        .map(|v| points.iter().position(|w| *w == v - int(1)))
        .collect();
    let has_above = points
        .iter()
        .map(|v| points.contains(&(v + int(1))))
        .collect();
    let mut s = Search {
        m,
        grid,
        points: points.clone(),
        below,
        has_above,
        found: Vec::new(),
    };
    let mut mult = vec![0; points.len()];
    s.dfs(0, &mut mult, 0);
    let mut keyed: Vec<(usize, Vec<Rational>, Poly)> = s
        .found
        .into_iter()
        .map(|(mult, t)| {
            let roots: Vec<Rational> = points
                .iter()
                .zip(&mult)
                .flat_map(|(v, &k)| std::iter::repeat_n(v.clone(), k))
                .collect();
            (roots.len(), roots, t)
        })
        .collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, _, t)| t).collect())
}

/// Members other than `1` with no proper nontrivial monic divisor in the
/// lattice.
pub fn brute_minimal(m: &RankOneModule, grid: &GridSpec) -> Result<Vec<Poly>> {
    let members = brute_lattice(m, grid)?;
    let proper: Vec<&Poly> = members.iter().filter(|t| !t.is_constant()).collect();
    Ok(proper
        .iter()
        .filter(|t| {
            !proper.iter().any(|s| {
                s.degree() < t.degree() && matches!(t.div_rem(s), Ok((_, ref r)) if r.is_zero())
            })
        })
        .map(|t| (*t).clone())
        .collect())
}

/// Re-checks a composition series step by step.
pub fn validate_series(m: &RankOneModule, s: &CompositionSeries) -> bool {
    validate_series_inner(m, s).unwrap_or(false)
}

fn validate_series_inner(m: &RankOneModule, s: &CompositionSeries) -> Result<bool> {
    let mut stage = m.clone();
    for step in &s.steps {
        let grid = GridSpec::for_module(&stage);
        if !brute_minimal(&stage, &grid)?.contains(&step.t) {
            return Ok(false);
        }
        let (roots, _) = step.t.rational_roots()?;
        if RootMultiset::max(&roots) != Some(&step.beta) {
            return Ok(false);
        }
        if rootorder::star(m.roots(), stage.x(), &step.beta)? != step.stage {
            return Ok(false);
        }
        if smith::simple_dim(m.u(), &step.beta) != Some(step.quotient_dim)
            || step.t.degree().finite() != Some(step.quotient_dim)
        {
            return Ok(false);
        }
        let next = stage.with_x(&step.stage)?;
        // the submodule t k[h] carries x.t = t(h+1) q(h) = t . q_next
        let qbar = (&step.t.shift(&int(1)) * stage.q()).div_exact(&step.t)?;
        if &qbar != next.q() {
            return Ok(false);
        }
        stage = next;
    }
    let grid = GridSpec::for_module(&stage);
    Ok(brute_minimal(&stage, &grid)?.is_empty() && &s.socle == stage.x())
}

/// Endpoints of every sequence of star moves `X -> X ⋆ beta` (any `beta`
/// with a strictly preceding element of the complement) run until no move
/// applies.
pub fn star_termini(r: &RootMultiset, x: &RootMultiset) -> Result<BTreeSet<RootMultiset>> {
    let mut seen = BTreeSet::new();
    let mut termini = BTreeSet::new();
    let mut stack = vec![x.clone()];
    while let Some(z) = stack.pop() {
        if !seen.insert(z.clone()) {
            continue;
        }
        let mut moved = false;
        for beta in z.underlying() {
            if rootorder::star_target(r, &z, beta)?.is_some() {
                stack.push(rootorder::star(r, &z, beta)?);
                moved = true;
            }
        }
        if !moved {
            termini.insert(z);
        }
    }
    Ok(termini)
}

/// All submultisets `Z` of `R` with `ell(Z) = 0` and the same number of
/// elements as `X` in every chain of `R`, by enumeration.
pub fn socle_candidates(r: &RootMultiset, x: &RootMultiset) -> Result<Vec<RootMultiset>> {
    let chains = rootorder::chain_decompose(r);
    let target: Vec<usize> = chains
        .iter()
        .map(|c| x.count_where(|v| c.contains(v)))
        .collect();
    let entries: Vec<(Rational, usize)> = r.iter().map(|(v, k)| (v.clone(), k)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; entries.len()];
    loop {
        let z = RootMultiset::from_pairs(
            entries
                .iter()
                .zip(&pick)
                .filter(|(_, &k)| k > 0)
                .map(|((v, _), &k)| (v.clone(), k)),
        );
        let counts: Vec<usize> = chains
            .iter()
            .map(|c| z.count_where(|v| c.contains(v)))
            .collect();
        if counts == target && rootorder::ell(r, &z)? == 0 {
            out.push(z);
        }
        // odometer over 0..=multiplicity
        let mut i = 0;
        loop {
            if i == entries.len() {
                return Ok(out);
            }
            if pick[i] < entries[i].1 {
                pick[i] += 1;
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::frac;

    fn ms(v: &[i64]) -> RootMultiset {
        RootMultiset::from_ints(v)
    }

    fn module(r: &[i64], x: &[i64]) -> RankOneModule {
        RankOneModule::build(&ms(r), &int(1), &int(0), &ms(x)).unwrap()
    }

    /// No pruning: every multiplicity vector on the grid.
    fn exhaustive_lattice(m: &RankOneModule, grid: &GridSpec) -> Vec<Poly> {
        let points = grid.points();
        let mut mult = vec![0usize; points.len()];
        let mut out = Vec::new();
        loop {
            if mult.iter().sum::<usize>() <= grid.max_degree {
                let t = poly_of(&points, &mult);
                if is_member(m, &t) {
                    out.push(t);
                }
            }
            let mut i = 0;
            loop {
                if i == mult.len() {
                    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
                    return out;
                }
                if mult[i] < grid.max_multiplicity {
                    mult[i] += 1;
                    break;
                }
                mult[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn grid_for_two_roots() {
        let g = GridSpec::for_module(&module(&[0, 2], &[2]));
        assert_eq!(g.base_roots, ms(&[1, 2, 3]));
        assert_eq!(g.span, 2);
        assert!(g.max_degree >= 4);
    }

    #[test]
    fn lattice_examples() {
        let m = module(&[0, 2], &[2]);
        let l = brute_lattice(&m, &GridSpec::for_module(&m)).unwrap();
        assert_eq!(l, vec![Poly::one(), Poly::from_ints(&[2, -3, 1])]);

        let m = module(&[0, 2], &[0]);
        assert_eq!(
            brute_lattice(&m, &GridSpec::for_module(&m)).unwrap(),
            vec![Poly::one()]
        );
    }

    #[test]
    fn minimal_examples() {
        let m = module(&[0, 2, 5, 7], &[2, 7]);
        let got = brute_minimal(&m, &GridSpec::for_module(&m)).unwrap();
        assert_eq!(
            got,
            vec![Poly::from_ints(&[2, -3, 1]), Poly::from_ints(&[42, -13, 1])]
        );
        let m = module(&[0, 2], &[0]);
        assert!(brute_minimal(&m, &GridSpec::for_module(&m))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn products_of_disjoint_chains() {
        let m = module(&[0, 2, 5, 7], &[2, 7]);
        let l = brute_lattice(&m, &GridSpec::for_module(&m)).unwrap();
        let a = Poly::from_ints(&[2, -3, 1]);
        let b = Poly::from_ints(&[42, -13, 1]);
        assert!(l.contains(&(&a * &b)));
    }

    #[test]
    fn pruned_search_matches_exhaustive() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[0, 2], &[2]),
            (&[0, 0, 3], &[3]),
            (&[0, 1, 3], &[1, 3]),
            (&[0, 3, 3], &[3, 3]),
            (&[-1, 0, 2], &[0, 2]),
            (&[0, 1, 2], &[2]),
        ];
        for (r, x) in cases {
            let m = module(r, x);
            let g = GridSpec::for_module(&m);
            let mut fast = brute_lattice(&m, &g).unwrap();
            fast.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
            assert_eq!(fast, exhaustive_lattice(&m, &g), "{r:?} {x:?}");
        }
    }

    #[test]
    fn small_grid_is_reported() {
        let m = module(&[0, 2], &[2]);
        let g = GridSpec {
            base_roots: ms(&[1]),
            span: 0,
            max_degree: 2,
            max_multiplicity: 1,
        };
        assert!(matches!(brute_lattice(&m, &g), Err(Error::GridTooSmall(_))));
    }

    #[test]
    fn mixed_cosets() {
        let r = RootMultiset::from_values(vec![int(0), int(2), frac(1, 2), frac(5, 2)]);
        let x = RootMultiset::from_values(vec![int(2), frac(5, 2)]);
        let m = RankOneModule::build(&r, &int(1), &int(0), &x).unwrap();
        let got = brute_minimal(&m, &GridSpec::for_module(&m)).unwrap();
        let fast: Vec<Poly> = m.minimal_elements().into_iter().map(|e| e.t).collect();
        assert_eq!(got.len(), 2);
        for t in &fast {
            assert!(got.contains(t));
        }
    }

    #[test]
    fn series_validation() {
        let m = module(&[0, 2, 5, 7], &[2, 7]);
        let all = m.composition_series_all(10).unwrap().series;
        for s in &all {
            assert!(validate_series(&m, s));
        }
        let mut bad = all[0].clone();
        bad.steps.swap(1, 2);
        assert!(!validate_series(&m, &bad));
        let simple = module(&[0, 2], &[0]);
        let s = simple.composition_series_all(1).unwrap().series;
        assert!(validate_series(&simple, &s[0]));
    }

    #[test]
    fn socle_by_enumeration() {
        let r = ms(&[0, 2, 5, 7]);
        assert_eq!(
            star_termini(&r, &ms(&[2, 7])).unwrap(),
            BTreeSet::from([ms(&[0, 2])])
        );
        assert_eq!(
            socle_candidates(&r, &ms(&[2, 7])).unwrap(),
            vec![ms(&[0, 2])]
        );
    }
}

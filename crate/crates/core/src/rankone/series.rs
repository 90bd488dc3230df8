use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Rational};
use crate::rootorder::{self, RootMultiset};

use super::{MinimalElement, RankOneModule};

/// One step `A_C(X_{i-1}) ⊃ t_i A_C(X_{i-1}) ≃ A_C(X_i)` of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesStep {
    pub beta: Rational,
    pub gamma: Rational,
    /// The minimal element in the coordinates of the previous stage.
    pub t: Poly,
    pub quotient_dim: usize,
    /// `X_i`, the star of the previous stage at `beta`.
    pub stage: RootMultiset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSeries {
    pub steps: Vec<SeriesStep>,
    pub socle: RootMultiset,
}

impl CompositionSeries {
    pub fn betas(&self) -> Vec<Rational> {
        self.steps.iter().map(|s| s.beta.clone()).collect()
    }

    /// Sorted `(beta, dim L(beta))` pairs of the finite-dimensional factors.
    pub fn factors(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<_> = self
            .steps
            .iter()
            .map(|s| (s.beta.clone(), s.quotient_dim))
            .collect();
        out.sort();
        out
    }

    /// Composition length, counting the socle.
    pub fn length(&self) -> usize {
        self.steps.len() + 1
    }

    /// Generators `t_1, t_2 t_1, ...` of the terms of the series inside the
    /// original module.
    pub fn cumulative(&self) -> Vec<Poly> {
        let mut acc = Poly::one();
        self.steps
            .iter()
            .map(|s| {
                acc = &acc * &s.t;
                acc.clone()
            })
            .collect()
    }
}

/// Output of [`RankOneModule::composition_series_all`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEnumeration {
    pub series: Vec<CompositionSeries>,
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Decomposition {
    pub socle: RootMultiset,
    pub multiplicities: BTreeMap<Rational, usize>,
}

impl K0Decomposition {
    pub fn length(&self) -> usize {
        1 + self.multiplicities.values().sum::<usize>()
    }

    /// Sorted `(beta, multiplicity)` pairs with nonzero multiplicity.
    pub fn nonzero(&self) -> Vec<(Rational, usize)> {
        self.multiplicities
            .iter()
            .filter(|(_, &k)| k > 0)
            .map(|(b, &k)| (b.clone(), k))
            .collect()
    }
}

type Children = BTreeMap<RootMultiset, Vec<(MinimalElement, RankOneModule)>>;

impl RankOneModule {
    /// `X⋆`, the root multiset of the socle.
    pub fn socle(&self) -> RootMultiset {
        let mut x = self.x.clone();
        loop {
            let stage = self.with_x(&x).expect("stage X stays inside R");
            match stage.minimal_elements().first() {
                None => return x,
                Some(me) => {
                    x = rootorder::star(&self.roots, &x, &me.beta).expect("beta in X");
                }
            }
        }
    }

    /// Every composition series, depth first over minimal elements in
    /// `(beta, gamma)` order, stopping after `cap` series.
    pub fn composition_series_all(&self, cap: usize) -> Result<SeriesEnumeration> {
        if cap == 0 {
            return Err(Error::Invalid("cap must be positive".into()));
        }
        let mut out = SeriesEnumeration {
            series: Vec::new(),
            truncated: false,
        };
        let mut path = Vec::new();
        let mut memo = BTreeMap::new();
        self.series_dfs(self, &mut path, cap, &mut out, &mut memo)?;

        let first = out.series.first().expect("at least one series");
        let (len, factors) = (first.steps.len(), first.factors());
        for s in &out.series {
            if s.steps.len() != len || s.factors() != factors || s.socle != first.socle {
                return Err(Error::RelationViolated(
                    "composition series disagree on their factors".into(),
                ));
            }
        }
        Ok(out)
    }

    fn series_dfs(
        &self,
        stage: &RankOneModule,
        path: &mut Vec<SeriesStep>,
        cap: usize,
        out: &mut SeriesEnumeration,
        memo: &mut Children,
    ) -> Result<()> {
        let children = match memo.get(&stage.x) {
            Some(c) => c.clone(),
            None => {
                let c = stage.maximal_submodules()?;
                memo.insert(stage.x.clone(), c.clone());
                c
            }
        };
        if children.is_empty() {
            if out.series.len() == cap {
                out.truncated = true;
            } else {
                out.series.push(CompositionSeries {
                    steps: path.clone(),
                    socle: stage.x.clone(),
                });
            }
            return Ok(());
        }
        for (me, child) in children {
            if out.truncated {
                return Ok(());
            }
            path.push(step(me, &child));
            self.series_dfs(&child, path, cap, out, memo)?;
            path.pop();
        }
        Ok(())
    }

    /// `[A_C(X)] = [A_C(X⋆)] + sum phi_X(beta) [L(beta)]`.
    pub fn k0_decompose(&self) -> K0Decomposition {
        let multiplicities = self
            .roots
            .underlying()
            .map(|b| {
                let k = rootorder::phi(&self.roots, &self.x, b).expect("b is a root");
                (b.clone(), k)
            })
            .collect();
        K0Decomposition {
            socle: self.socle(),
            multiplicities,
        }
    }

    pub fn length(&self) -> usize {
        self.k0_decompose().length()
    }
}

fn step(me: MinimalElement, child: &RankOneModule) -> SeriesStep {
    SeriesStep {
        beta: me.beta,
        gamma: me.gamma,
        t: me.t,
        quotient_dim: me.quotient_dim,
        stage: child.x.clone(),
    }
}

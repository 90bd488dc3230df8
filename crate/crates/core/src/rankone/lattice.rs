use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::Poly;
use crate::rootorder::RootMultiset;

use super::RankOneModule;

pub const DEFAULT_NODE_CAP: usize = 10_000;

/// A nonzero submodule `t k[h]`, isomorphic to `A_C(stage)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNode {
    pub t: Poly,
    pub t_roots: RootMultiset,
    pub stage: RootMultiset,
    /// Distance from the whole module along cover relations.
    pub depth: usize,
}

/// The submodule lattice. Node 0 is the whole module; the zero submodule is
/// kept apart as [`zero`](Self::zero) and is covered by the socle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleLattice {
    pub nodes: Vec<LatticeNode>,
    /// Cover relations `(larger, smaller)` between node indices.
    pub edges: Vec<(usize, usize)>,
    pub socle: usize,
}

impl SubmoduleLattice {
    /// Index used for the zero submodule in [`all_edges`](Self::all_edges).
    pub fn zero(&self) -> usize {
        self.nodes.len()
    }

    /// Cover relations including the one from the socle to zero.
    pub fn all_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.push((self.socle, self.zero()));
        e
    }

    /// Number of submodules, counting zero.
    pub fn len(&self) -> usize {
        self.nodes.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> Vec<&Poly> {
        self.nodes.iter().map(|n| &n.t).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph submodules {\n  rankdir=TB;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let style = if i == self.socle {
                ", style=filled, fillcolor=lightblue"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "  n{i} [label=\"{}\\nX = {}\"{style}];",
                factored(&n.t_roots),
                n.stage
            );
        }
        let _ = writeln!(
            s,
            "  n{} [label=\"0\", style=filled, fillcolor=lightgray];",
            self.zero()
        );
        for (a, b) in self.all_edges() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// `(h - 1)(h - 2)^2`, or `1` for the empty multiset.
pub fn factored(roots: &RootMultiset) -> String {
    if roots.is_empty() {
        return "1".into();
    }
    roots
        .iter()
        .map(|(r, k)| {
            let lin = if r.is_zero() {
                "h".to_string()
            } else if r.is_negative() {
                format!("(h + {})", -r)
            } else {
                format!("(h - {r})")
            };
            if k == 1 {
                lin
            } else {
                format!("{lin}^{k}")
            }
        })
        .collect()
}

impl RankOneModule {
    /// Breadth-first closure of the module under maximal submodules.
    pub fn submodule_lattice(&self, cap: usize) -> Result<SubmoduleLattice> {
        let mut nodes = vec![LatticeNode {
            t: Poly::one(),
            t_roots: RootMultiset::new(),
            stage: self.x.clone(),
            depth: 0,
        }];
        let mut index: BTreeMap<Poly, usize> = BTreeMap::new();
        index.insert(Poly::one(), 0);
        let mut edges = Vec::new();
        let mut socle = None;
        let mut queue = VecDeque::from([0usize]);

        while let Some(i) = queue.pop_front() {
            let node = nodes[i].clone();
            let stage = self.with_x(&node.stage)?;
            let children = stage.maximal_submodules()?;
            if children.is_empty() {
                socle = Some(i);
            }
            for (me, child) in children {
                let t = &node.t * &me.t;
                let j = match index.get(&t) {
                    Some(&j) => j,
                    None => {
                        if nodes.len() >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        let j = nodes.len();
                        nodes.push(LatticeNode {
                            t: t.clone(),
                            t_roots: node.t_roots.union(&me.roots()),
                            stage: child.x.clone(),
                            depth: node.depth + 1,
                        });
                        index.insert(t, j);
                        queue.push_back(j);
                        j
                    }
                };
                edges.push((i, j));
            }
        }
        edges.sort();
        edges.dedup();
        Ok(SubmoduleLattice {
            nodes,
            edges,
            socle: socle.expect("a finite-length module has a socle"),
        })
    }
}

//! Isomorph-free exhaustive generation of graphs with a fixed vertex count
//! by canonical edge augmentation.
//!
//! Starting from the edgeless graph on `n` vertices, each accepted graph is
//! extended by one edge at a time. A child `C = P + e` is accepted only when
//! `e` lies in the automorphism orbit of the canonical removal edge of `C`,
//! so every isomorphism class appears exactly once in the search tree, at
//! the level equal to its edge count. A cheap isomorphism-invariant edge key
//! filters most non-canonical children before any canonical form is
//! computed; a per-parent code set removes duplicates caused by symmetric
//! parents. Degree caps prune during generation, and when only connected
//! leaves are wanted, subtrees that cannot reach connectivity within the
//! remaining edge budget are cut.
//!
//! Equivalence with a labeled brute-force oracle for all `n <= 6` is part of
//! the test suite.

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{Canonizer, PairOrbits};
use crate::graph::Graph;

/// Practical generation ceiling; beyond this, runtimes leave desk scale.
pub const MAX_ENUM_VERTICES: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),
    #[error("enumeration ceiling exceeded: {0}")]
    CeilingExceeded(String),
}

/// What to generate: one representative per isomorphism class of graphs on
/// `n` vertices with exactly `m` edges, optionally connected and
/// degree-capped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub m: usize,
    pub max_degree: Option<usize>,
    pub connected_only: bool,
}

impl EnumSpec {
    pub fn connected(n: usize, m: usize) -> Self {
        EnumSpec {
            n,
            m,
            max_degree: None,
            connected_only: true,
        }
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.n > MAX_ENUM_VERTICES {
            return Err(EnumError::CeilingExceeded(format!(
                "n={} exceeds the generation ceiling {}",
                self.n, MAX_ENUM_VERTICES
            )));
        }
        let max_m = self.n * self.n.saturating_sub(1) / 2;
        if self.m > max_m {
            return Err(EnumError::InvalidSpec(format!(
                "m={} exceeds {} possible edges on n={}",
                self.m, max_m, self.n
            )));
        }
        if self.connected_only && self.m + 1 < self.n {
            return Err(EnumError::InvalidSpec(format!(
                "connected graphs on n={} need at least {} edges, got m={}",
                self.n,
                self.n - 1,
                self.m
            )));
        }
        Ok(())
    }
}

/// One representative per isomorphism class, in deterministic order.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Graph>, EnumError> {
    let mut out = Vec::new();
    for_each(spec, |g| out.push(g.clone()))?;
    Ok(out)
}

/// Streaming variant of [`enumerate`].
pub fn for_each<F: FnMut(&Graph)>(spec: &EnumSpec, mut f: F) -> Result<(), EnumError> {
    spec.validate()?;
    let params = ScanParams {
        n: spec.n,
        m_max: spec.m,
        max_degree: spec.max_degree,
        connected_only: spec.connected_only,
    };
    scan_seq(&params, &mut |g, m| {
        if m == spec.m {
            f(g);
        }
    });
    Ok(())
}

/// Number of classes [`enumerate`] yields, without storing graphs.
pub fn count(spec: &EnumSpec) -> Result<u64, EnumError> {
    let mut c = 0u64;
    for_each(spec, |_| c += 1)?;
    Ok(c)
}

/// Multi-level scan parameters: visit every class with up to `m_max` edges.
#[derive(Debug, Clone)]
pub struct ScanParams {
    pub n: usize,
    pub m_max: usize,
    pub max_degree: Option<usize>,
    /// When set, visit only connected graphs and prune subtrees that cannot
    /// reach connectivity within the remaining edge budget.
    pub connected_only: bool,
}

/// Depth-first scan visiting every isomorphism class at every edge count
/// `<= m_max` exactly once, in a fixed order. With `connected_only`, only
/// connected classes reach the visitor.
pub fn scan_seq(params: &ScanParams, visit: &mut dyn FnMut(&Graph, usize)) {
    let root = Graph::new(params.n).expect("order bounded by caller");
    let mut canonizer = Canonizer::new();
    let connected_only = params.connected_only;
    recurse(
        &root,
        0,
        params.m_max,
        params,
        &mut canonizer,
        &mut |g, m| {
            if !connected_only || g.is_connected() {
                visit(g, m);
            }
        },
    );
}

/// Parallel fold over the same visit multiset as [`scan_seq`].
///
/// The tree is split at a fixed shallow level; subtrees fold independently
/// and merge in frontier order, so the result is identical for every worker
/// count provided `fold` is insensitive to the order of unrelated visits
/// (counters, top-value trackers, witness sets sorted on output).
pub fn scan_fold_par<A, I, F, M>(
    params: &ScanParams,
    workers: usize,
    init: I,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, &Graph, usize) + Sync,
    M: Fn(A, A) -> A,
{
    let split = params.m_max.min(6);
    let connected_only = params.connected_only;
    let filtered_fold = |acc: &mut A, g: &Graph, m: usize| {
        if !connected_only || g.is_connected() {
            fold(acc, g, m);
        }
    };
    let mut acc = init();
    let mut frontier: Vec<Graph> = Vec::new();
    {
        let root = Graph::new(params.n).expect("order bounded by caller");
        let mut canonizer = Canonizer::new();
        recurse(&root, 0, split, params, &mut canonizer, &mut |g, m| {
            if m < split {
                filtered_fold(&mut acc, g, m);
            } else {
                frontier.push(g.clone());
            }
        });
    }
    let run_subtree = |g: &Graph| {
        let mut local = init();
        let mut canonizer = Canonizer::new();
        recurse(
            g,
            split,
            params.m_max,
            params,
            &mut canonizer,
            &mut |h, m| filtered_fold(&mut local, h, m),
        );
        local
    };
    let parts: Vec<A> = if workers <= 1 {
        frontier.iter().map(run_subtree).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| frontier.par_iter().map(run_subtree).collect())
    };
    parts.into_iter().fold(acc, &merge)
}

fn recurse(
    g: &Graph,
    m: usize,
    m_stop: usize,
    params: &ScanParams,
    canonizer: &mut Canonizer,
    visit: &mut dyn FnMut(&Graph, usize),
) {
    visit(g, m);
    if m == m_stop {
        return;
    }
    let n = g.n();
    let degs = g.degrees();
    let mut seen_codes: Vec<crate::canon::CanonicalCode> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            if let Some(cap) = params.max_degree {
                if degs[u] + 1 > cap || degs[v] + 1 > cap {
                    continue;
                }
            }
            let child = g.with_edge(u, v).expect("pair checked non-adjacent");
            if params.connected_only {
                let needed = child.component_count() - 1;
                if needed > params.m_max - (m + 1) {
                    continue;
                }
            }
            if !added_edge_has_maximal_key(&child, (u, v)) {
                continue;
            }
            let out = canonizer.run(&child);
            let e_star = canonical_removal_edge(&out);
            let accepted = if out.generators.is_empty() {
                (u, v) == e_star
            } else {
                let mut orbits = PairOrbits::new(n, &out.generators);
                orbits.same_orbit((u, v), e_star)
            };
            if !accepted {
                continue;
            }
            if seen_codes.contains(&out.code) {
                continue;
            }
            seen_codes.push(out.code);
            recurse(&child, m + 1, m_stop, params, canonizer, visit);
        }
    }
}

type EdgeRank = ((usize, usize), (usize, usize));

/// Isomorphism-invariant edge key: sorted endpoint degrees.
fn edge_key(degs: &[usize], e: (usize, usize)) -> (usize, usize) {
    let (a, b) = (degs[e.0], degs[e.1]);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Cheap necessary condition for acceptance: the added edge must carry the
/// maximal key, because the canonical removal edge does by construction.
fn added_edge_has_maximal_key(child: &Graph, e: (usize, usize)) -> bool {
    let degs = child.degrees();
    let key = edge_key(&degs, e);
    child.edges().iter().all(|&f| edge_key(&degs, f) <= key)
}

/// The removal edge designated by the canonical form: among edges of the
/// canonical graph with maximal key, the one with the largest position pair,
/// mapped back to the input labeling.
fn canonical_removal_edge(out: &crate::canon::CanonOutcome) -> (usize, usize) {
    let cg = &out.graph;
    let degs = cg.degrees();
    let mut best: Option<(EdgeRank, (usize, usize))> = None;
    for &(i, j) in cg.edges().iter() {
        let rank = (edge_key(&degs, (i, j)), (j, i));
        if best.is_none() || rank > best.unwrap().0 {
            best = Some((rank, (i, j)));
        }
    }
    let (_, (ci, cj)) = best.expect("child graphs always have an edge");
    let mut inv = vec![0usize; cg.n()];
    for (old, &new) in out.relabel.iter().enumerate() {
        inv[new] = old;
    }
    let (a, b) = (inv[ci], inv[cj]);
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

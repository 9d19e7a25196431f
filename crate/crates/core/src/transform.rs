//! The five local rewritings and their exact Randic deltas.
//!
//! Site detection works on the rewritten ("post-attachment") graph: pendant
//! paths are maximal chains of degree-2 vertices ending in a degree-1
//! vertex, and hubs are their degree >= 3 anchors. Sites whose application
//! would create a multi-edge are excluded at detection time, so every
//! detected site is applicable.

use thiserror::Error;

use crate::graph::Graph;
use crate::radical::RadicalValue;
use crate::randic::randic_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// Merge two pendant paths hanging at one hub into one.
    T1,
    /// Move a pendant path from one anchor onto the path at another anchor.
    T2,
    /// Subdivide an edge (adds one vertex).
    T3,
    /// Rewire a pendant-ish edge from a degree >= 4 vertex onto a degree-2
    /// vertex sitting between suitable neighbors.
    T4,
    /// Rewire an edge away from a degree-3 core onto a degree-2 vertex next
    /// to a degree-4 vertex.
    T5,
}

impl TransformKind {
    pub const ALL: [TransformKind; 5] = [
        TransformKind::T1,
        TransformKind::T2,
        TransformKind::T3,
        TransformKind::T4,
        TransformKind::T5,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Some(TransformKind::T1),
            "t2" => Some(TransformKind::T2),
            "t3" => Some(TransformKind::T3),
            "t4" => Some(TransformKind::T4),
            "t5" => Some(TransformKind::T5),
            _ => None,
        }
    }
}

impl std::fmt::Display for TransformKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TransformKind::T1 => "t1",
            TransformKind::T2 => "t2",
            TransformKind::T3 => "t3",
            TransformKind::T4 => "t4",
            TransformKind::T5 => "t5",
        };
        f.write_str(s)
    }
}

/// Anchors of one applicable transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformSite {
    /// Detach the chain starting at `moved_first` from `hub` and append it
    /// to the tip of the chain starting at `target_first`.
    T1 {
        hub: usize,
        moved_first: usize,
        target_first: usize,
    },
    /// Detach the chain starting at `moved_first` from `anchor` and append
    /// it to the tip of the chain starting at `target_first` at
    /// `target_anchor`.
    T2 {
        anchor: usize,
        moved_first: usize,
        target_anchor: usize,
        target_first: usize,
    },
    /// Subdivide edge `(u, v)`.
    T3 { u: usize, v: usize },
    /// Replace edge `v4 u1` by `v2 u1`.
    T4 {
        v1: usize,
        v2: usize,
        v3: usize,
        v4: usize,
        u1: usize,
    },
    /// Replace edge `x2 w` by `x5 w`.
    T5 {
        x1: usize,
        x2: usize,
        x3: usize,
        x4: usize,
        x5: usize,
        x6: usize,
        w: usize,
    },
}

impl TransformSite {
    pub fn kind(&self) -> TransformKind {
        match self {
            TransformSite::T1 { .. } => TransformKind::T1,
            TransformSite::T2 { .. } => TransformKind::T2,
            TransformSite::T3 { .. } => TransformKind::T3,
            TransformSite::T4 { .. } => TransformKind::T4,
            TransformSite::T5 { .. } => TransformKind::T5,
        }
    }
}

impl std::fmt::Display for TransformSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            TransformSite::T1 {
                hub,
                moved_first,
                target_first,
            } => write!(f, "t1 hub={hub} moved={moved_first} target={target_first}"),
            TransformSite::T2 {
                anchor,
                moved_first,
                target_anchor,
                target_first,
            } => write!(
                f,
                "t2 anchor={anchor} moved={moved_first} target_anchor={target_anchor} target={target_first}"
            ),
            TransformSite::T3 { u, v } => write!(f, "t3 edge=({u},{v})"),
            TransformSite::T4 { v1, v2, v3, v4, u1 } => {
                write!(f, "t4 v1={v1} v2={v2} v3={v3} v4={v4} u1={u1}")
            }
            TransformSite::T5 {
                x1,
                x2,
                x3,
                x4,
                x5,
                x6,
                w,
            } => write!(f, "t5 x1={x1} x2={x2} x3={x3} x4={x4} x5={x5} x6={x6} w={w}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("site does not satisfy its preconditions on this graph: {0}")]
    InvalidSite(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// A maximal pendant chain `hub - first - ... - tip` with interior degrees 2
/// and `deg(tip) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct PendantChain {
    pub hub: usize,
    pub first: usize,
    pub tip: usize,
    pub len: usize,
}

/// All pendant chains, one per degree-1 vertex whose run ends at a vertex of
/// degree >= 3, sorted by `(hub, first)`.
pub(crate) fn pendant_chains(g: &Graph) -> Vec<PendantChain> {
    let mut chains = Vec::new();
    for tip in 0..g.n() {
        if g.degree(tip) != 1 {
            continue;
        }
        let mut prev = tip;
        let mut cur = g.neighbors(tip).next().expect("degree-1 vertex");
        let mut len = 1;
        while g.degree(cur) == 2 {
            let next = g
                .neighbors(cur)
                .find(|&x| x != prev)
                .expect("degree-2 vertex has another neighbor");
            prev = cur;
            cur = next;
            len += 1;
        }
        if g.degree(cur) >= 3 {
            chains.push(PendantChain {
                hub: cur,
                first: prev,
                tip,
                len,
            });
        }
    }
    chains.sort_by_key(|c| (c.hub, c.first));
    chains
}

/// Walk a chain from `first` away from `hub` and return its tip.
fn chain_tip(g: &Graph, hub: usize, first: usize) -> Option<usize> {
    let mut prev = hub;
    let mut cur = first;
    while g.degree(cur) == 2 {
        let next = g.neighbors(cur).find(|&x| x != prev)?;
        prev = cur;
        cur = next;
    }
    if g.degree(cur) == 1 {
        Some(cur)
    } else {
        None
    }
}

/// All sites of the given kind, in deterministic label order.
pub fn find_sites(g: &Graph, kind: TransformKind) -> Vec<TransformSite> {
    match kind {
        TransformKind::T1 => t1_sites(g),
        TransformKind::T2 => t2_sites(g),
        TransformKind::T3 => g
            .edges()
            .into_iter()
            .map(|(u, v)| TransformSite::T3 { u, v })
            .collect(),
        TransformKind::T4 => t4_sites(g),
        TransformKind::T5 => t5_sites(g),
    }
}

fn t1_sites(g: &Graph) -> Vec<TransformSite> {
    let chains = pendant_chains(g);
    let mut sites = Vec::new();
    for a in &chains {
        for b in &chains {
            if a.first == b.first || a.hub != b.hub {
                continue;
            }
            sites.push(TransformSite::T1 {
                hub: a.hub,
                moved_first: a.first,
                target_first: b.first,
            });
        }
    }
    sites.sort_by_key(|s| match *s {
        TransformSite::T1 {
            hub,
            moved_first,
            target_first,
        } => (hub, moved_first, target_first),
        _ => unreachable!(),
    });
    sites
}

fn t2_sites(g: &Graph) -> Vec<TransformSite> {
    let chains = pendant_chains(g);
    let mut sites = Vec::new();
    for moved in &chains {
        // Every neighbor of the anchor other than the moved chain head must
        // have degree >= 2 in the pre-attachment graph, which the rewritten
        // graph sees as: no further degree-1 neighbor at the anchor.
        let ok = g
            .neighbors(moved.hub)
            .all(|x| x == moved.first || g.degree(x) >= 2);
        if !ok {
            continue;
        }
        for target in &chains {
            if target.hub == moved.hub {
                continue;
            }
            sites.push(TransformSite::T2 {
                anchor: moved.hub,
                moved_first: moved.first,
                target_anchor: target.hub,
                target_first: target.first,
            });
        }
    }
    sites.sort_by_key(|s| match *s {
        TransformSite::T2 {
            anchor,
            moved_first,
            target_anchor,
            target_first,
        } => (anchor, moved_first, target_anchor, target_first),
        _ => unreachable!(),
    });
    sites
}

fn t4_sites(g: &Graph) -> Vec<TransformSite> {
    let mut sites = Vec::new();
    for v2 in 0..g.n() {
        if g.degree(v2) != 2 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v2).collect();
        for &(v1, v3) in &[(nbrs[0], nbrs[1]), (nbrs[1], nbrs[0])] {
            if g.degree(v1) < 2 || g.degree(v3) < 3 {
                continue;
            }
            for v4 in 0..g.n() {
                if g.degree(v4) < 4 || v4 == v1 || v4 == v2 || v4 == v3 {
                    continue;
                }
                for u1 in g.neighbors(v4) {
                    if u1 == v2 || g.has_edge(v2, u1) {
                        continue;
                    }
                    sites.push(TransformSite::T4 { v1, v2, v3, v4, u1 });
                }
            }
        }
    }
    sites.sort_by_key(|s| match *s {
        TransformSite::T4 { v1, v2, v3, v4, u1 } => (v2, v1, v3, v4, u1),
        _ => unreachable!(),
    });
    sites
}

fn t5_sites(g: &Graph) -> Vec<TransformSite> {
    let mut sites = Vec::new();
    for x2 in 0..g.n() {
        if g.degree(x2) != 3 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(x2).collect();
        for wi in 0..3 {
            let w = nbrs[wi];
            let mut others: Vec<usize> = (0..3).filter(|&i| i != wi).map(|i| nbrs[i]).collect();
            others.sort_unstable();
            let (x1, x3) = (others[0], others[1]);
            if g.degree(x1) != 3 || g.degree(x3) != 3 {
                continue;
            }
            for x5 in 0..g.n() {
                if g.degree(x5) != 2 || x5 == x2 {
                    continue;
                }
                let pn: Vec<usize> = g.neighbors(x5).collect();
                let (x4, x6) = if g.degree(pn[0]) == 4 && matches!(g.degree(pn[1]), 1 | 2) {
                    (pn[0], pn[1])
                } else if g.degree(pn[1]) == 4 && matches!(g.degree(pn[0]), 1 | 2) {
                    (pn[1], pn[0])
                } else {
                    continue;
                };
                if g.has_edge(x5, w) || x5 == w {
                    continue;
                }
                sites.push(TransformSite::T5 {
                    x1,
                    x2,
                    x3,
                    x4,
                    x5,
                    x6,
                    w,
                });
            }
        }
    }
    sites.sort_by_key(|s| match *s {
        TransformSite::T5 {
            x2,
            w,
            x5,
            x4,
            x6,
            x1,
            x3,
        } => (x2, w, x5, x4, x6, x1, x3),
        _ => unreachable!(),
    });
    sites
}

/// Apply one transformation. The site is revalidated against `g`.
pub fn apply_transform(g: &Graph, site: &TransformSite) -> Result<Graph, TransformError> {
    validate_site(g, site)?;
    let out = match *site {
        TransformSite::T1 {
            hub,
            moved_first,
            target_first,
        } => {
            let tip = chain_tip(g, hub, target_first)
                .ok_or_else(|| TransformError::InvalidSite("target chain broken".into()))?;
            g.without_edge(hub, moved_first)?
                .with_edge(tip, moved_first)?
        }
        TransformSite::T2 {
            anchor,
            moved_first,
            target_anchor,
            target_first,
        } => {
            let tip = chain_tip(g, target_anchor, target_first)
                .ok_or_else(|| TransformError::InvalidSite("target chain broken".into()))?;
            g.without_edge(anchor, moved_first)?
                .with_edge(tip, moved_first)?
        }
        TransformSite::T3 { u, v } => g.subdivide_edge(u, v)?,
        TransformSite::T4 { v2, v4, u1, .. } => g.without_edge(v4, u1)?.with_edge(v2, u1)?,
        TransformSite::T5 { x2, x5, w, .. } => g.without_edge(x2, w)?.with_edge(x5, w)?,
    };
    Ok(out)
}

/// Exact Randic change of applying `site` to `g`.
pub fn delta_randic(g: &Graph, site: &TransformSite) -> Result<RadicalValue, TransformError> {
    let after = apply_transform(g, site)?;
    Ok(randic_exact(&after).sub(&randic_exact(g)))
}

fn validate_site(g: &Graph, site: &TransformSite) -> Result<(), TransformError> {
    let fail = |msg: &str| Err(TransformError::InvalidSite(msg.to_string()));
    match *site {
        TransformSite::T1 {
            hub,
            moved_first,
            target_first,
        } => {
            if moved_first == target_first {
                return fail("chains must be distinct");
            }
            let chains = pendant_chains(g);
            let has = |first: usize| chains.iter().any(|c| c.hub == hub && c.first == first);
            if g.degree(hub) < 3 || !has(moved_first) || !has(target_first) {
                return fail("t1 pattern not present");
            }
            Ok(())
        }
        TransformSite::T2 {
            anchor,
            moved_first,
            target_anchor,
            target_first,
        } => {
            if anchor == target_anchor {
                return fail("anchors must be distinct");
            }
            let chains = pendant_chains(g);
            let ok_moved = chains
                .iter()
                .any(|c| c.hub == anchor && c.first == moved_first);
            let ok_target = chains
                .iter()
                .any(|c| c.hub == target_anchor && c.first == target_first);
            if !ok_moved || !ok_target {
                return fail("t2 pattern not present");
            }
            if g.degree(anchor) < 3 || g.degree(target_anchor) < 3 {
                return fail("t2 anchors must have degree >= 3");
            }
            let nbr_ok = g
                .neighbors(anchor)
                .all(|x| x == moved_first || g.degree(x) >= 2);
            if !nbr_ok {
                return fail("t2 anchor has another degree-1 neighbor");
            }
            Ok(())
        }
        TransformSite::T3 { u, v } => {
            if g.has_edge(u, v) {
                Ok(())
            } else {
                fail("t3 edge not present")
            }
        }
        TransformSite::T4 { v1, v2, v3, v4, u1 } => {
            let distinct = {
                let all = [v1, v2, v3, v4, u1];
                (0..5).all(|i| (i + 1..5).all(|j| all[i] != all[j]))
            };
            if !distinct {
                return fail("t4 vertices must be distinct");
            }
            if !(g.has_edge(v1, v2) && g.has_edge(v2, v3) && g.has_edge(v4, u1)) {
                return fail("t4 edges not present");
            }
            if g.degree(v1) < 2 || g.degree(v2) != 2 || g.degree(v3) < 3 || g.degree(v4) < 4 {
                return fail("t4 degree conditions violated");
            }
            if g.has_edge(v2, u1) {
                return fail("t4 rewiring would duplicate an edge");
            }
            Ok(())
        }
        TransformSite::T5 {
            x1,
            x2,
            x3,
            x4,
            x5,
            x6,
            w,
        } => {
            if w == x1 || w == x3 {
                return fail("t5 w must differ from x1 and x3");
            }
            let edges_ok = g.has_edge(x1, x2)
                && g.has_edge(x2, x3)
                && g.has_edge(x2, w)
                && g.has_edge(x4, x5)
                && g.has_edge(x5, x6);
            if !edges_ok {
                return fail("t5 edges not present");
            }
            let degrees_ok = g.degree(x1) == 3
                && g.degree(x2) == 3
                && g.degree(x3) == 3
                && g.degree(x4) == 4
                && g.degree(x5) == 2
                && matches!(g.degree(x6), 1 | 2);
            if !degrees_ok {
                return fail("t5 degree conditions violated");
            }
            if x5 == w || g.has_edge(x5, w) {
                return fail("t5 rewiring would duplicate an edge");
            }
            Ok(())
        }
    }
}

/// The extra hypotheses under which the T4 monotonicity claim applies: the
/// moved neighbor has degree <= 3, some other neighbor of `v4` has degree
/// <= 3, and `v4` realizes the maximum degree.
pub fn t4_claim_applicable(g: &Graph, site: &TransformSite) -> bool {
    let TransformSite::T4 { v4, u1, .. } = *site else {
        return false;
    };
    if g.degree(u1) > 3 {
        return false;
    }
    if g.degree(v4) != g.max_degree() {
        return false;
    }
    g.neighbors(v4).any(|x| x != u1 && g.degree(x) <= 3)
}

/// Witness for the T4 equality case: the rewiring below changes the Randic
/// index by exactly zero, with `deg(v1)=2`, `deg(v3)=3`, the moved neighbor
/// and one other neighbor of degree 3, and the remaining neighbors of the
/// degree-4 vertex of degree 4.
pub fn t4_equality_witness() -> (Graph, TransformSite) {
    // a=0 (deg 4), b=1, c=2 (deg 3), d=3, e=4 (deg 4), f=5, g=6 (deg 2).
    let g = Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 5),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 6),
            (5, 6),
        ],
    )
    .expect("witness edges are simple");
    let site = TransformSite::T4 {
        v1: 6,
        v2: 5,
        v3: 1,
        v4: 0,
        u1: 2,
    };
    (g, site)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn t3_sites_are_all_edges() {
        let star = Graph::star(4).unwrap();
        assert_eq!(find_sites(&star, TransformKind::T3).len(), 3);
        let c5 = Graph::cycle(5).unwrap();
        assert!(find_sites(&c5, TransformKind::T4).is_empty());
    }

    #[test]
    fn subdividing_a_cycle_edge_gives_the_next_cycle() {
        let c4 = Graph::cycle(4).unwrap();
        let site = TransformSite::T3 { u: 0, v: 1 };
        let out = apply_transform(&c4, &site).unwrap();
        assert_eq!(
            out.canonical_code(),
            Graph::cycle(5).unwrap().canonical_code()
        );
        // Subdividing an edge with a degree-2 endpoint changes R by 1/2.
        let delta = delta_randic(&c4, &site).unwrap();
        assert_eq!(delta, RadicalValue::from_ratio(1, 2));
    }

    /// Hub 0 carries chains of lengths 1, 2, 3; every ordered pair of
    /// distinct chains is a site.
    #[test]
    fn spider_t1_sites() {
        let spider =
            Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let sites = find_sites(&spider, TransformKind::T1);
        let got: Vec<(usize, usize, usize)> = sites
            .iter()
            .map(|s| match *s {
                TransformSite::T1 {
                    hub,
                    moved_first,
                    target_first,
                } => (hub, moved_first, target_first),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 1, 2),
                (0, 1, 4),
                (0, 2, 1),
                (0, 2, 4),
                (0, 4, 1),
                (0, 4, 2)
            ]
        );
        for s in &sites {
            let d = delta_randic(&spider, s).unwrap();
            assert_eq!(d.sign(), Ordering::Greater, "merging chains must raise R");
        }
    }

    #[test]
    fn t1_concatenates_chains_preserving_n_and_m() {
        // Hub 0 with chains {1} and {2,3}, held at degree 4 by a triangle so
        // it stays a hub afterwards.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (2, 3),
                (0, 5),
                (0, 6),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        )
        .unwrap();
        let site = TransformSite::T1 {
            hub: 0,
            moved_first: 1,
            target_first: 2,
        };
        let out = apply_transform(&g, &site).unwrap();
        assert_eq!(out.n(), g.n());
        assert_eq!(out.edge_count(), g.edge_count());
        assert!(out.is_connected());
        assert!(out.has_edge(3, 1));
        assert!(!out.has_edge(0, 1));
        let chains = pendant_chains(&out);
        assert_eq!(chains.len(), 1);
        assert_eq!(
            chains[0],
            PendantChain {
                hub: 0,
                first: 2,
                tip: 1,
                len: 3
            }
        );
    }

    #[test]
    fn t4_rewires_and_bookkeeps_degrees() {
        // Degree-4 vertex 0 with pendant 5; path 1-2-3 with deg(2)=2.
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 6),
                (4, 6),
                (1, 4),
            ],
        )
        .unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(2), 2);
        let site = TransformSite::T4 {
            v1: 1,
            v2: 2,
            v3: 3,
            v4: 0,
            u1: 5,
        };
        let out = apply_transform(&g, &site).unwrap();
        assert_eq!(out.degree(2), 3);
        assert_eq!(out.degree(0), 3);
        assert_eq!(out.n(), g.n());
        assert_eq!(out.edge_count(), g.edge_count());
    }

    #[test]
    fn t4_equality_witness_has_zero_delta() {
        let (g, site) = t4_equality_witness();
        assert!(g.is_connected());
        assert!(find_sites(&g, TransformKind::T4).contains(&site));
        assert!(t4_claim_applicable(&g, &site));
        let delta = delta_randic(&g, &site).unwrap();
        assert!(
            delta.is_zero(),
            "witness delta must be exactly zero, got {delta}"
        );
    }

    #[test]
    fn t5_site_detection_and_negative_delta() {
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 3),
                (2, 4),
                (2, 3),
                (4, 5),
                (4, 3),
                (5, 6),
            ],
        )
        .unwrap();
        let sites = find_sites(&g, TransformKind::T5);
        assert_eq!(
            sites,
            vec![TransformSite::T5 {
                x1: 1,
                x2: 0,
                x3: 2,
                x4: 4,
                x5: 5,
                x6: 6,
                w: 3
            }]
        );
        let delta = delta_randic(&g, &sites[0]).unwrap();
        assert_eq!(delta.sign(), Ordering::Less);
        assert!(delta.to_f64() < -0.0068);
    }

    #[test]
    fn invalid_sites_are_rejected() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(apply_transform(&c4, &TransformSite::T3 { u: 0, v: 2 }).is_err());
        let site = TransformSite::T4 {
            v1: 0,
            v2: 1,
            v3: 2,
            v4: 3,
            u1: 0,
        };
        assert!(apply_transform(&c4, &site).is_err());
    }

    #[test]
    fn transforms_preserve_invariants() {
        // T1/T2/T4/T5 keep n, m, cyclomatic number; T3 adds one vertex and
        // one edge; all preserve connectivity of connected input. The hosts
        // below carry sites of every kind.
        let spider =
            Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 4)])
                .unwrap();
        // Two anchors with chains for T2.
        let two_hubs = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (1, 4),
                (4, 5),
                (2, 6),
                (6, 7),
            ],
        )
        .unwrap();
        let (t4_host, _) = t4_equality_witness();
        let t5_host = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 3),
                (2, 4),
                (2, 3),
                (4, 5),
                (4, 3),
                (5, 6),
            ],
        )
        .unwrap();
        let mut sites_seen = [0usize; 5];
        for host in [&spider, &two_hubs, &t4_host, &t5_host] {
            for (ki, kind) in TransformKind::ALL.into_iter().enumerate() {
                for site in find_sites(host, kind) {
                    sites_seen[ki] += 1;
                    let out = apply_transform(host, &site).unwrap();
                    assert!(out.is_connected());
                    let grew = matches!(kind, TransformKind::T3);
                    assert_eq!(out.n(), host.n() + usize::from(grew));
                    assert_eq!(out.edge_count(), host.edge_count() + usize::from(grew));
                    assert_eq!(
                        out.cyclomatic_number().unwrap(),
                        host.cyclomatic_number().unwrap()
                    );
                }
            }
        }
        assert!(
            sites_seen.iter().all(|&c| c > 0),
            "every kind must be exercised, got {sites_seen:?}"
        );
    }
}

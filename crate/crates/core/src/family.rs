//! The extremal families: edge-type signatures or degree profiles, feasible
//! ranges, membership tests, and explicit constructions.
//!
//! Signature families (the lambda/gamma/omega series) are defined by their
//! `m_{i,j}` counts with one n-dependent entry; profile families (the
//! upsilon series) by their `n_i` counts. Constructions produce a member at
//! the minimal feasible order from a catalog of cubic base graphs, then grow
//! it one vertex at a time by subdividing a suitable edge; every constructed
//! graph is checked against the membership predicate.

use std::collections::BTreeMap;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerate::{self, EnumSpec};
use crate::graph::{EdgeTypeSignature, Graph};
use crate::radical::RadicalValue;
use crate::randic::{family_value, FamilyValueId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family name: {0}")]
    UnknownFamily(String),
    #[error("family {family} has cyclomatic number {expected}, got k={got}")]
    FixedK {
        family: String,
        expected: usize,
        got: usize,
    },
    #[error("family {family} requires k >= {required}, got {got}")]
    KTooSmall {
        family: String,
        required: usize,
        got: usize,
    },
    #[error("family {family} at k={k} is infeasible at n={n} (needs n {relation})")]
    Infeasible {
        family: String,
        k: usize,
        n: usize,
        relation: String,
    },
    #[error("no cubic base graph of order {0} in the catalog (orders 4 to 16)")]
    UnsupportedBaseOrder(usize),
    #[error("profile family has no edge-type signature")]
    ProfileFamily,
    #[error(transparent)]
    Enum(#[from] enumerate::EnumError),
}

/// Every family the tool knows by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    Lambda1,
    Gamma1,
    Lambda2,
    Gamma2,
    Omega1,
    Omega2,
    Omega3,
    Omega4,
    Omega5,
    Omega6,
    Omega7,
    Omega8,
    Upsilon1,
    Upsilon2,
    Upsilon3,
    Upsilon4,
    Upsilon5,
    Upsilon6,
    Regular3,
}

impl FamilyName {
    pub const ALL: [FamilyName; 19] = [
        FamilyName::Lambda1,
        FamilyName::Gamma1,
        FamilyName::Lambda2,
        FamilyName::Gamma2,
        FamilyName::Omega1,
        FamilyName::Omega2,
        FamilyName::Omega3,
        FamilyName::Omega4,
        FamilyName::Omega5,
        FamilyName::Omega6,
        FamilyName::Omega7,
        FamilyName::Omega8,
        FamilyName::Upsilon1,
        FamilyName::Upsilon2,
        FamilyName::Upsilon3,
        FamilyName::Upsilon4,
        FamilyName::Upsilon5,
        FamilyName::Upsilon6,
        FamilyName::Regular3,
    ];

    /// The omega and upsilon families carry a fixed cyclomatic number.
    pub fn fixed_k(&self) -> Option<usize> {
        match self {
            FamilyName::Omega1
            | FamilyName::Omega2
            | FamilyName::Omega5
            | FamilyName::Omega6
            | FamilyName::Upsilon1
            | FamilyName::Upsilon2
            | FamilyName::Upsilon5 => Some(5),
            FamilyName::Omega3
            | FamilyName::Omega4
            | FamilyName::Omega7
            | FamilyName::Omega8
            | FamilyName::Upsilon3
            | FamilyName::Upsilon4
            | FamilyName::Upsilon6 => Some(6),
            _ => None,
        }
    }

    /// The omega families are the general families at their fixed k.
    pub fn general_form(&self) -> Option<(FamilyName, usize)> {
        match self {
            FamilyName::Omega1 => Some((FamilyName::Lambda1, 5)),
            FamilyName::Omega2 => Some((FamilyName::Gamma1, 5)),
            FamilyName::Omega3 => Some((FamilyName::Lambda1, 6)),
            FamilyName::Omega4 => Some((FamilyName::Gamma1, 6)),
            FamilyName::Omega5 => Some((FamilyName::Gamma2, 5)),
            FamilyName::Omega6 => Some((FamilyName::Lambda2, 5)),
            FamilyName::Omega7 => Some((FamilyName::Gamma2, 6)),
            FamilyName::Omega8 => Some((FamilyName::Lambda2, 6)),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Lambda1 => "lambda1",
            FamilyName::Gamma1 => "gamma1",
            FamilyName::Lambda2 => "lambda2",
            FamilyName::Gamma2 => "gamma2",
            FamilyName::Omega1 => "omega1",
            FamilyName::Omega2 => "omega2",
            FamilyName::Omega3 => "omega3",
            FamilyName::Omega4 => "omega4",
            FamilyName::Omega5 => "omega5",
            FamilyName::Omega6 => "omega6",
            FamilyName::Omega7 => "omega7",
            FamilyName::Omega8 => "omega8",
            FamilyName::Upsilon1 => "upsilon1",
            FamilyName::Upsilon2 => "upsilon2",
            FamilyName::Upsilon3 => "upsilon3",
            FamilyName::Upsilon4 => "upsilon4",
            FamilyName::Upsilon5 => "upsilon5",
            FamilyName::Upsilon6 => "upsilon6",
            FamilyName::Regular3 => "regular3",
        }
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyName::ALL
            .iter()
            .copied()
            .find(|f| f.as_str() == s.to_ascii_lowercase())
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

impl std::fmt::Display for FamilyName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A family instantiated at a vertex count and cyclomatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(name: FamilyName, n: usize, k: usize) -> Result<Self, FamilyError> {
        let spec = FamilySpec { name, n, k };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        if let Some(fixed) = self.name.fixed_k() {
            if self.k != fixed {
                return Err(FamilyError::FixedK {
                    family: self.name.to_string(),
                    expected: fixed,
                    got: self.k,
                });
            }
        }
        let min_k = match self.name {
            FamilyName::Lambda1 | FamilyName::Gamma1 => 3,
            FamilyName::Lambda2 | FamilyName::Gamma2 => 4,
            FamilyName::Regular3 => 3,
            _ => self.k,
        };
        if self.k < min_k {
            return Err(FamilyError::KTooSmall {
                family: self.name.to_string(),
                required: min_k,
                got: self.k,
            });
        }
        let min_n = self.minimal_n();
        let feasible = if self.name == FamilyName::Regular3 {
            self.n == 2 * self.k - 2
        } else {
            self.n >= min_n
        };
        if !feasible {
            let relation = if self.name == FamilyName::Regular3 {
                format!("= {}", 2 * self.k - 2)
            } else {
                format!(">= {min_n}")
            };
            return Err(FamilyError::Infeasible {
                family: self.name.to_string(),
                k: self.k,
                n: self.n,
                relation,
            });
        }
        Ok(())
    }

    /// Smallest feasible order: the n-dependent count must be nonnegative.
    pub fn minimal_n(&self) -> usize {
        let k = self.k;
        match self.name {
            FamilyName::Lambda1 => 2 * k - 1,
            FamilyName::Gamma1 => 2 * k + 1,
            FamilyName::Lambda2 => 2 * k,
            FamilyName::Gamma2 => 2 * k - 2,
            FamilyName::Regular3 => 2 * k - 2,
            FamilyName::Omega1 => 9,
            FamilyName::Omega2 => 11,
            FamilyName::Omega3 => 11,
            FamilyName::Omega4 => 13,
            FamilyName::Omega5 => 8,
            FamilyName::Omega6 => 10,
            FamilyName::Omega7 => 10,
            FamilyName::Omega8 => 12,
            FamilyName::Upsilon1 => 8,
            FamilyName::Upsilon2 => 10,
            FamilyName::Upsilon3 => 10,
            FamilyName::Upsilon4 => 12,
            FamilyName::Upsilon5 => 7,
            FamilyName::Upsilon6 => 9,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.n + self.k - 1
    }

    /// What defines membership: an edge signature or a degree profile.
    pub fn requirement(&self) -> Requirement {
        let n = self.n as i64;
        let k = self.k as i64;
        let sig = |entries: &[((usize, usize), i64)]| {
            Requirement::Signature(EdgeTypeSignature::from_counts(
                &entries
                    .iter()
                    .map(|&((i, j), c)| {
                        debug_assert!(c >= 0, "infeasible count");
                        ((i, j), c as usize)
                    })
                    .collect::<Vec<_>>(),
            ))
        };
        let profile = |entries: &[(usize, i64)]| {
            Requirement::Profile(
                entries
                    .iter()
                    .filter(|&&(_, c)| c > 0)
                    .map(|&(d, c)| (d, c as usize))
                    .collect(),
            )
        };
        match self.name {
            FamilyName::Lambda1 => {
                sig(&[((3, 3), 3 * k - 4), ((2, 3), 2), ((2, 2), n - (2 * k - 1))])
            }
            FamilyName::Gamma1 => sig(&[
                ((3, 3), 3 * k - 2),
                ((2, 3), 1),
                ((1, 2), 1),
                ((2, 2), n - (2 * k + 1)),
            ]),
            FamilyName::Lambda2 => sig(&[((3, 3), 3 * k - 5), ((2, 3), 4), ((2, 2), n - 2 * k)]),
            FamilyName::Gamma2 => sig(&[
                ((4, 3), 4),
                ((3, 3), 3 * k - 9),
                ((2, 3), 2),
                ((2, 2), n - (2 * k - 2)),
            ]),
            FamilyName::Omega1 => sig(&[((3, 3), 11), ((2, 3), 2), ((2, 2), n - 9)]),
            FamilyName::Omega2 => sig(&[((3, 3), 13), ((2, 3), 1), ((1, 2), 1), ((2, 2), n - 11)]),
            FamilyName::Omega3 => sig(&[((3, 3), 14), ((2, 3), 2), ((2, 2), n - 11)]),
            FamilyName::Omega4 => sig(&[((3, 3), 16), ((2, 3), 1), ((1, 2), 1), ((2, 2), n - 13)]),
            FamilyName::Omega5 => sig(&[((4, 3), 4), ((3, 3), 6), ((2, 3), 2), ((2, 2), n - 8)]),
            FamilyName::Omega6 => sig(&[((3, 3), 10), ((2, 3), 4), ((2, 2), n - 10)]),
            FamilyName::Omega7 => sig(&[((4, 3), 4), ((3, 3), 9), ((2, 3), 2), ((2, 2), n - 10)]),
            FamilyName::Omega8 => sig(&[((3, 3), 13), ((2, 3), 4), ((2, 2), n - 12)]),
            FamilyName::Upsilon1 => profile(&[(3, 8), (2, n - 8)]),
            FamilyName::Upsilon2 => profile(&[(1, 1), (3, 9), (2, n - 10)]),
            FamilyName::Upsilon3 => profile(&[(3, 10), (2, n - 10)]),
            FamilyName::Upsilon4 => profile(&[(1, 1), (3, 11), (2, n - 12)]),
            FamilyName::Upsilon5 => profile(&[(4, 1), (3, 6), (2, n - 7)]),
            FamilyName::Upsilon6 => profile(&[(4, 1), (3, 8), (2, n - 9)]),
            FamilyName::Regular3 => profile(&[(3, n)]),
        }
    }

    /// Closed-form Randic value, where one is known (all but the upsilon
    /// profile families).
    pub fn expected_value(&self) -> Option<RadicalValue> {
        let id = match self.name {
            FamilyName::Lambda1 | FamilyName::Omega1 | FamilyName::Omega3 => FamilyValueId::Lambda1,
            FamilyName::Gamma1 | FamilyName::Omega2 | FamilyName::Omega4 => FamilyValueId::Gamma1,
            FamilyName::Lambda2 | FamilyName::Omega6 | FamilyName::Omega8 => FamilyValueId::Lambda2,
            FamilyName::Gamma2 | FamilyName::Omega5 | FamilyName::Omega7 => FamilyValueId::Gamma2,
            FamilyName::Regular3 => FamilyValueId::Regular3,
            _ => return None,
        };
        Some(family_value(id, self.n, self.k).expect("validated spec stays in range"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Requirement {
    Signature(EdgeTypeSignature),
    Profile(BTreeMap<usize, usize>),
}

/// The exact `m_{i,j}` map of a signature family with the n-dependent entry
/// filled in. Profile families are rejected.
pub fn family_signature(spec: &FamilySpec) -> Result<EdgeTypeSignature, FamilyError> {
    spec.validate()?;
    match spec.requirement() {
        Requirement::Signature(sig) => Ok(sig),
        Requirement::Profile(_) => Err(FamilyError::ProfileFamily),
    }
}

/// Membership: connected, right order, right cyclomatic number, and the
/// signature (or profile) matches exactly.
pub fn is_member(g: &Graph, spec: &FamilySpec) -> bool {
    if spec.validate().is_err() {
        return false;
    }
    if g.n() != spec.n || !g.is_connected() {
        return false;
    }
    match g.cyclomatic_number() {
        Ok(k) if k == spec.k => {}
        _ => return false,
    }
    match spec.requirement() {
        Requirement::Signature(sig) => g.edge_type_signature() == sig,
        Requirement::Profile(profile) => g.degree_profile().counts == profile,
    }
}

/// One deterministic member of the family, canonically labeled.
pub fn construct_member(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut g = base_member(spec)?;
    while g.n() < spec.n {
        g = grow_by_subdivision(&g, matches!(spec.requirement(), Requirement::Profile(_)));
    }
    debug_assert!(
        is_member(&g, spec),
        "construction violates membership for {spec:?}"
    );
    Ok(crate::canon::canonical_form(&g).graph)
}

/// All members up to isomorphism, via the enumerator with a degree cap.
pub fn enumerate_members(spec: &FamilySpec) -> Result<Vec<Graph>, FamilyError> {
    spec.validate()?;
    let cap = match spec.requirement() {
        Requirement::Signature(ref sig) => sig.counts.keys().map(|&(_, j)| j).max().unwrap_or(1),
        Requirement::Profile(ref p) => p.keys().copied().max().unwrap_or(1),
    };
    let enum_spec = EnumSpec {
        n: spec.n,
        m: spec.edge_count(),
        max_degree: Some(cap),
        connected_only: true,
    };
    let mut out = Vec::new();
    enumerate::for_each(&enum_spec, |g| {
        if is_member(g, spec) {
            out.push(g.clone());
        }
    })?;
    Ok(out)
}

/// Grow a member by one vertex: subdivide the first edge with a degree-2
/// endpoint (signature families need exactly 2 so that only `m_{2,2}`
/// grows; profile families accept any endpoint of degree <= 2, falling back
/// to an arbitrary edge, since subdividing never changes existing degrees).
fn grow_by_subdivision(g: &Graph, profile_family: bool) -> Graph {
    let degs = g.degrees();
    let edges = g.edges();
    let pick = edges
        .iter()
        .find(|&&(u, v)| degs[u].min(degs[v]) == 2)
        .or_else(|| {
            if profile_family {
                edges
                    .iter()
                    .find(|&&(u, v)| degs[u].min(degs[v]) <= 2)
                    .or(edges.first())
            } else {
                None
            }
        })
        .expect("feasible family members always have a growth edge");
    g.subdivide_edge(pick.0, pick.1).expect("edge exists")
}

/// Member at the minimal feasible order.
fn base_member(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let k = spec.k;
    if let Some((general, gk)) = spec.name.general_form() {
        return base_member(&FamilySpec {
            name: general,
            n: FamilySpec {
                name: general,
                n: spec.n,
                k: gk,
            }
            .minimal_n(),
            k: gk,
        });
    }
    match spec.name {
        // Cubic base minus one edge, endpoints rejoined through one new
        // vertex.
        FamilyName::Lambda1 => {
            let h = cubic_base(2 * k - 2)?;
            let (u, v) = h.edges()[0];
            let mut g = pad(&h, 1);
            g = g.without_edge(u, v).unwrap();
            let w = g.n() - 1;
            g = g.with_edge(u, w).unwrap().with_edge(w, v).unwrap();
            Ok(g)
        }
        // Cubic base with one edge subdivided and a two-vertex pendant path
        // at the subdivision vertex.
        FamilyName::Gamma1 => {
            let h = cubic_base(2 * k - 2)?;
            let (u, v) = h.edges()[0];
            let mut g = pad(&h, 3);
            let (x, p, t) = (h.n(), h.n() + 1, h.n() + 2);
            g = g.without_edge(u, v).unwrap();
            g = g.with_edge(u, x).unwrap().with_edge(x, v).unwrap();
            g = g.with_edge(x, p).unwrap().with_edge(p, t).unwrap();
            Ok(g)
        }
        // Cubic base minus two disjoint edges, each rejoined through one new
        // vertex.
        FamilyName::Lambda2 => {
            let h = cubic_base(2 * k - 2)?;
            let (e1, e2) = two_disjoint_edges(&h);
            let mut g = pad(&h, 2);
            let (w1, w2) = (h.n(), h.n() + 1);
            g = g.without_edge(e1.0, e1.1).unwrap();
            g = g.without_edge(e2.0, e2.1).unwrap();
            g = g.with_edge(e1.0, w1).unwrap().with_edge(w1, e1.1).unwrap();
            g = g.with_edge(e2.0, w2).unwrap().with_edge(w2, e2.1).unwrap();
            Ok(g)
        }
        // Cubic base on 2k-4 vertices: delete a perfect matching pair, hang
        // a degree-4 apex on the four endpoints, then reroute a third
        // disjoint edge through one new vertex. k=4 needs 3 disjoint edges
        // on 4 vertices, which do not exist, so that case is explicit.
        FamilyName::Gamma2 => {
            if k == 4 {
                return Ok(Graph::from_edges(
                    6,
                    &[
                        (0, 1),
                        (0, 2),
                        (0, 3),
                        (0, 4),
                        (1, 2),
                        (1, 3),
                        (2, 4),
                        (3, 5),
                        (5, 4),
                    ],
                )
                .expect("fixed base"));
            }
            let h = cubic_base(2 * k - 4)?;
            let (e1, e2, e3) = three_disjoint_edges(&h);
            let mut g = pad(&h, 2);
            let (apex, mid) = (h.n(), h.n() + 1);
            g = g.without_edge(e1.0, e1.1).unwrap();
            g = g.without_edge(e2.0, e2.1).unwrap();
            for v in [e1.0, e1.1, e2.0, e2.1] {
                g = g.with_edge(apex, v).unwrap();
            }
            g = g.without_edge(e3.0, e3.1).unwrap();
            g = g
                .with_edge(e3.0, mid)
                .unwrap()
                .with_edge(mid, e3.1)
                .unwrap();
            Ok(g)
        }
        FamilyName::Regular3 => cubic_base(2 * k - 2),
        // Profile families: smallest members assembled from the same
        // ingredients.
        FamilyName::Upsilon1 => cubic_base(8),
        FamilyName::Upsilon2 => {
            // Remove a vertex from the Petersen graph, join two of its
            // ex-neighbors, hang a pendant on the third.
            let p = petersen();
            let z = 0;
            let nbrs: Vec<usize> = p.neighbors(z).collect();
            let mut g = delete_vertex(&p, z);
            let map = |v: usize| if v > z { v - 1 } else { v };
            g = pad(&g, 1);
            g = g.with_edge(map(nbrs[0]), map(nbrs[1])).unwrap();
            g = g.with_edge(map(nbrs[2]), g.n() - 1).unwrap();
            Ok(g)
        }
        FamilyName::Upsilon3 => cubic_base(10),
        FamilyName::Upsilon4 => {
            let h = cubic_base(12)?;
            let z = 0;
            let nbrs: Vec<usize> = h.neighbors(z).collect();
            let (a, b) = if !h.has_edge(nbrs[0], nbrs[1]) {
                (nbrs[0], nbrs[1])
            } else if !h.has_edge(nbrs[0], nbrs[2]) {
                (nbrs[0], nbrs[2])
            } else {
                (nbrs[1], nbrs[2])
            };
            let c = *nbrs.iter().find(|&&x| x != a && x != b).unwrap();
            let mut g = delete_vertex(&h, z);
            let map = |v: usize| if v > z { v - 1 } else { v };
            g = pad(&g, 1);
            g = g.with_edge(map(a), map(b)).unwrap();
            g = g.with_edge(map(c), g.n() - 1).unwrap();
            Ok(g)
        }
        // Apex construction without the rerouted path.
        FamilyName::Upsilon5 | FamilyName::Upsilon6 => {
            let order = if spec.name == FamilyName::Upsilon5 {
                6
            } else {
                8
            };
            let h = cubic_base(order)?;
            let (e1, e2) = two_disjoint_edges(&h);
            let mut g = pad(&h, 1);
            let apex = h.n();
            g = g.without_edge(e1.0, e1.1).unwrap();
            g = g.without_edge(e2.0, e2.1).unwrap();
            for v in [e1.0, e1.1, e2.0, e2.1] {
                g = g.with_edge(apex, v).unwrap();
            }
            Ok(g)
        }
        _ => unreachable!("omega families delegate to their general form"),
    }
}

fn pad(g: &Graph, extra: usize) -> Graph {
    let mut out = Graph::new(g.n() + extra).expect("within bounds");
    for (u, v) in g.edges() {
        out.insert_edge(u, v).unwrap();
    }
    out
}

fn delete_vertex(g: &Graph, z: usize) -> Graph {
    let mut out = Graph::new(g.n() - 1).expect("within bounds");
    for (u, v) in g.edges() {
        if u == z || v == z {
            continue;
        }
        let map = |x: usize| if x > z { x - 1 } else { x };
        out.insert_edge(map(u), map(v)).unwrap();
    }
    out
}

fn two_disjoint_edges(g: &Graph) -> ((usize, usize), (usize, usize)) {
    let edges = g.edges();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if e1.0 != e2.0 && e1.0 != e2.1 && e1.1 != e2.0 && e1.1 != e2.1 {
                return (e1, e2);
            }
        }
    }
    panic!("catalog graphs all have two disjoint edges");
}

fn three_disjoint_edges(g: &Graph) -> ((usize, usize), (usize, usize), (usize, usize)) {
    let edges = g.edges();
    let disjoint =
        |a: (usize, usize), b: (usize, usize)| a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
    for (i, &e1) in edges.iter().enumerate() {
        for (j, &e2) in edges.iter().enumerate().skip(i + 1) {
            if !disjoint(e1, e2) {
                continue;
            }
            for &e3 in &edges[j + 1..] {
                if disjoint(e1, e3) && disjoint(e2, e3) {
                    return (e1, e2, e3);
                }
            }
        }
    }
    panic!("catalog graphs of order >= 6 all have three disjoint edges");
}

/// Generalized Petersen graph GP(h, s): outer cycle, spokes, inner cycle
/// with step `s`.
fn generalized_petersen(h: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..h {
        edges.push((i, (i + 1) % h));
        edges.push((i, h + i));
        edges.push((h + i, h + (i + s) % h));
    }
    Graph::from_edges(2 * h, &dedup_edges(edges)).expect("valid construction")
}

fn dedup_edges(edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (u, v) in edges {
        let key = if u < v { (u, v) } else { (v, u) };
        if seen.insert(key) {
            out.push(key);
        }
    }
    out
}

/// The Petersen graph GP(5, 2).
pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// A connected cubic graph of the given even order, from a fixed catalog.
pub fn cubic_base(order: usize) -> Result<Graph, FamilyError> {
    match order {
        4 => Ok(Graph::complete(4).unwrap()),
        6 => Ok(generalized_petersen(3, 1)),
        8 => Ok(generalized_petersen(4, 1)),
        10 => Ok(petersen()),
        12 => Ok(generalized_petersen(6, 2)),
        14 => Ok(generalized_petersen(7, 2)),
        16 => Ok(generalized_petersen(8, 3)),
        _ => Err(FamilyError::UnsupportedBaseOrder(order)),
    }
}

//! Canonical labeling by equitable partition refinement with backtracking.
//!
//! The search individualizes one vertex of the first non-singleton cell at a
//! time, refines, and keeps the lexicographically largest leaf image as the
//! canonical form. Leaves that reproduce the first or the current best image
//! certify automorphisms; discovered automorphisms prune sibling branches
//! that fix the individualized prefix. The collected generators are used by
//! the enumerator for edge-orbit computations, and their completeness is
//! cross-checked against brute force in the test suite.

use crate::graph::{Graph, MAX_VERTICES};

/// Total-order key with equal values exactly for isomorphic graphs.
///
/// The key is the graph6 serialization of the canonically relabeled graph,
/// so it doubles as a readable witness.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub String);

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct CanonOutcome {
    /// The canonically relabeled graph.
    pub graph: Graph,
    pub code: CanonicalCode,
    /// Maps original labels to canonical labels.
    pub relabel: Vec<usize>,
    /// Automorphism generators of the input graph, as maps old -> old.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> CanonOutcome {
    let mut c = Canonizer::new();
    c.run(g)
}

const N: usize = MAX_VERTICES;

/// Reusable search state; create once per worker and feed it many graphs.
pub struct Canonizer {
    adj: [u64; N],
    n: usize,
    best_image: [u64; N],
    best_perm: [usize; N],
    first_image: [u64; N],
    first_perm: [usize; N],
    have_leaf: bool,
    generators: Vec<Vec<usize>>,
    prefix: Vec<usize>,
    scratch_counts: [usize; N],
    scratch_order: [usize; N],
    dsu: [usize; N],
}

impl Default for Canonizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Canonizer {
    pub fn new() -> Self {
        Canonizer {
            adj: [0; N],
            n: 0,
            best_image: [0; N],
            best_perm: [0; N],
            first_image: [0; N],
            first_perm: [0; N],
            have_leaf: false,
            generators: Vec::new(),
            prefix: Vec::new(),
            scratch_counts: [0; N],
            scratch_order: [0; N],
            dsu: [0; N],
        }
    }

    pub fn run(&mut self, g: &Graph) -> CanonOutcome {
        let n = g.n();
        self.n = n;
        for v in 0..n {
            self.adj[v] = g.neighbor_mask(v);
        }
        self.have_leaf = false;
        self.generators.clear();
        self.prefix.clear();

        if n == 0 {
            let empty = Graph::new(0).unwrap();
            return CanonOutcome {
                code: CanonicalCode(empty.to_graph6()),
                graph: empty,
                relabel: Vec::new(),
                generators: Vec::new(),
            };
        }

        let mut lab = [0usize; N];
        let mut cell_end = [false; N];
        for (i, slot) in lab.iter_mut().enumerate().take(n) {
            *slot = i;
        }
        cell_end[n - 1] = true;
        self.refine(&mut lab, &mut cell_end);
        self.explore(&lab, &cell_end);

        let relabel: Vec<usize> = self.best_perm[..n].to_vec();
        let graph = g.permuted(&relabel);
        CanonOutcome {
            code: CanonicalCode(graph.to_graph6()),
            graph,
            relabel,
            generators: self.generators.clone(),
        }
    }

    /// One-dimensional equitable refinement: split every cell by neighbor
    /// counts into every current cell until stable. Subcells are ordered by
    /// ascending count, stably, which keeps the whole procedure
    /// label-deterministic.
    fn refine(&mut self, lab: &mut [usize; N], cell_end: &mut [bool; N]) {
        let n = self.n;
        loop {
            let mut changed = false;
            let mut s_start = 0;
            while s_start < n {
                let mut s_end = s_start;
                while !cell_end[s_end] {
                    s_end += 1;
                }
                let mut splitter: u64 = 0;
                for &v in lab.iter().take(s_end + 1).skip(s_start) {
                    splitter |= 1 << v;
                }

                let mut t_start = 0;
                while t_start < n {
                    let mut t_end = t_start;
                    while !cell_end[t_end] {
                        t_end += 1;
                    }
                    if t_end > t_start {
                        let len = t_end - t_start + 1;
                        let mut min_c = usize::MAX;
                        let mut max_c = 0;
                        for i in 0..len {
                            let c = (self.adj[lab[t_start + i]] & splitter).count_ones() as usize;
                            self.scratch_counts[i] = c;
                            min_c = min_c.min(c);
                            max_c = max_c.max(c);
                        }
                        if min_c != max_c {
                            changed = true;
                            // Stable bucket sort of the cell by count.
                            let mut pos = 0;
                            for target in min_c..=max_c {
                                let bucket_start = pos;
                                for i in 0..len {
                                    if self.scratch_counts[i] == target {
                                        self.scratch_order[pos] = lab[t_start + i];
                                        pos += 1;
                                    }
                                }
                                if pos > bucket_start {
                                    cell_end[t_start + pos - 1] = true;
                                }
                            }
                            debug_assert_eq!(pos, len);
                            lab[t_start..=t_end].copy_from_slice(&self.scratch_order[..len]);
                        }
                    }
                    t_start = t_end + 1;
                }
                s_start = s_end + 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn explore(&mut self, lab: &[usize; N], cell_end: &[bool; N]) {
        let n = self.n;
        // First non-singleton cell, if any.
        let mut start = 0;
        let mut target: Option<(usize, usize)> = None;
        while start < n {
            let mut end = start;
            while !cell_end[end] {
                end += 1;
            }
            if end > start {
                target = Some((start, end));
                break;
            }
            start = end + 1;
        }

        let Some((start, end)) = target else {
            self.process_leaf(lab);
            return;
        };

        let candidates: Vec<usize> = lab[start..=end].to_vec();
        let mut branched: Vec<usize> = Vec::with_capacity(candidates.len());
        for &v in &candidates {
            if self.in_branched_orbit(v, &branched) {
                continue;
            }
            branched.push(v);
            let mut lab2 = *lab;
            let mut cell_end2 = *cell_end;
            // Individualize: v first in its cell, split off as a singleton.
            let offset = lab2[start..=end].iter().position(|&x| x == v).unwrap();
            lab2[start..=end].copy_within(0..offset, 1);
            lab2[start] = v;
            cell_end2[start] = true;
            self.prefix.push(v);
            self.refine(&mut lab2, &mut cell_end2);
            self.explore(&lab2, &cell_end2);
            self.prefix.pop();
        }
    }

    /// True if some already-discovered automorphism fixing the current
    /// prefix pointwise maps `v` into the orbit of a branched sibling.
    fn in_branched_orbit(&mut self, v: usize, branched: &[usize]) -> bool {
        if branched.is_empty() || self.generators.is_empty() {
            return false;
        }
        let n = self.n;
        for (i, slot) in self.dsu.iter_mut().enumerate().take(n) {
            *slot = i;
        }
        // The borrow checker dislikes mutating dsu while iterating
        // generators, so unions go through local find loops.
        let mut applicable = false;
        for gi in 0..self.generators.len() {
            let fixes_prefix = self.prefix.iter().all(|&p| self.generators[gi][p] == p);
            if !fixes_prefix {
                continue;
            }
            applicable = true;
            for x in 0..n {
                let y = self.generators[gi][x];
                let (mut a, mut b) = (x, y);
                while self.dsu[a] != a {
                    a = self.dsu[a];
                }
                while self.dsu[b] != b {
                    b = self.dsu[b];
                }
                if a != b {
                    self.dsu[a] = b;
                }
            }
        }
        if !applicable {
            return false;
        }
        let root = |dsu: &[usize; N], mut x: usize| {
            while dsu[x] != x {
                x = dsu[x];
            }
            x
        };
        let rv = root(&self.dsu, v);
        branched.iter().any(|&w| root(&self.dsu, w) == rv)
    }

    fn process_leaf(&mut self, lab: &[usize; N]) {
        let n = self.n;
        let mut perm = [0usize; N];
        for (pos, &v) in lab.iter().enumerate().take(n) {
            perm[v] = pos;
        }
        let mut image = [0u64; N];
        for (pos, &v) in lab.iter().enumerate().take(n) {
            let mut row = 0u64;
            let mut m = self.adj[v];
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                row |= 1 << perm[u];
                m &= m - 1;
            }
            image[pos] = row;
        }

        if !self.have_leaf {
            self.have_leaf = true;
            self.first_image[..n].copy_from_slice(&image[..n]);
            self.first_perm[..n].copy_from_slice(&perm[..n]);
            self.best_image[..n].copy_from_slice(&image[..n]);
            self.best_perm[..n].copy_from_slice(&perm[..n]);
            return;
        }

        if image[..n] == self.first_image[..n] {
            self.record_automorphism_with(&perm, true);
            return;
        }
        match image[..n].cmp(&self.best_image[..n]) {
            std::cmp::Ordering::Greater => {
                self.best_image[..n].copy_from_slice(&image[..n]);
                self.best_perm[..n].copy_from_slice(&perm[..n]);
            }
            std::cmp::Ordering::Equal => {
                self.record_automorphism_with(&perm, false);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    /// Record the automorphism mapping the stored leaf (first or best) onto
    /// the current one: `sigma(u) = inv_current(stored_perm(u))`.
    fn record_automorphism_with(&mut self, perm: &[usize; N], against_first: bool) {
        let n = self.n;
        let stored = if against_first {
            &self.first_perm
        } else {
            &self.best_perm
        };
        let mut inv = [0usize; N];
        for (v, &p) in perm.iter().enumerate().take(n) {
            inv[p] = v;
        }
        let sigma: Vec<usize> = (0..n).map(|u| inv[stored[u]]).collect();
        if sigma.iter().enumerate().all(|(u, &s)| u == s) {
            return;
        }
        if !self.generators.contains(&sigma) {
            self.generators.push(sigma);
        }
    }
}

/// Union-find over unordered vertex pairs under a set of permutations.
/// Used to decide whether two edges lie in the same automorphism orbit.
pub struct PairOrbits {
    n: usize,
    parent: Vec<usize>,
}

impl PairOrbits {
    pub fn new(n: usize, generators: &[Vec<usize>]) -> Self {
        let size = n * n;
        let mut orbits = PairOrbits {
            n,
            parent: (0..size).collect(),
        };
        for g in generators {
            for u in 0..n {
                for v in (u + 1)..n {
                    let a = orbits.index(u, v);
                    let b = orbits.index(g[u], g[v]);
                    orbits.union(a, b);
                }
            }
        }
        orbits
    }

    fn index(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        a * self.n + b
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn same_orbit(&mut self, e: (usize, usize), f: (usize, usize)) -> bool {
        let a = self.index(e.0, e.1);
        let b = self.index(f.0, f.1);
        self.find(a) == self.find(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        permute(&mut current, 0, &mut perms);
        perms
    }

    fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, out);
            v.swap(k, i);
        }
    }

    #[test]
    fn relabelings_share_codes() {
        let c4 = Graph::cycle(4).unwrap();
        for perm in all_permutations(4) {
            assert_eq!(c4.permuted(&perm).canonical_code(), c4.canonical_code());
        }
        let p4 = Graph::path(4).unwrap();
        assert_ne!(c4.canonical_code(), p4.canonical_code());
    }

    #[test]
    fn k4_minus_edge_labelings_agree() {
        let a = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 3), (1, 3), (0, 3), (1, 2)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn relabel_matches_canonical_graph() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (0, 1)])
            .unwrap();
        let out = canonical_form(&g);
        assert_eq!(g.permuted(&out.relabel), out.graph);
        assert_eq!(out.graph.to_graph6(), out.code.0);
    }

    /// Generators discovered by the search must induce the same vertex and
    /// pair orbits as brute force over all permutations.
    #[test]
    fn generator_orbits_match_brute_force() {
        let mut graphs = vec![
            Graph::cycle(5).unwrap(),
            Graph::star(5).unwrap(),
            Graph::path(6).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::new(4).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        // Every graph on 4 vertices, by edge mask.
        let pairs4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs4
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            graphs.push(Graph::from_edges(4, &edges).unwrap());
        }
        for g in &graphs {
            let n = g.n();
            let out = canonical_form(g);
            let autos: Vec<Vec<usize>> = all_permutations(n)
                .into_iter()
                .filter(|p| &g.permuted(p) == g)
                .collect();

            let mut from_gens = PairOrbits::new(n, &out.generators);
            let mut from_brute = PairOrbits::new(n, &autos);
            for u in 0..n {
                for v in (u + 1)..n {
                    for x in 0..n {
                        for y in (x + 1)..n {
                            assert_eq!(
                                from_gens.same_orbit((u, v), (x, y)),
                                from_brute.same_orbit((u, v), (x, y)),
                                "pair orbit mismatch on {g:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` bitmask per vertex, which keeps every predicate
//! here branch-light: neighborhood intersection is a single AND, degree a
//! popcount. All constructions validate their inputs; a `Graph` value is
//! always simple (symmetric, irreflexive).

use crate::error::Error;
use crate::Result;

/// Hard cap on vertex count so adjacency rows fit in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

/// Per-vertex token budgets for the painting game.
///
/// Tokens are nonnegative; a vertex with 0 tokens is already lost for
/// Painter if it is still uncolored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TokenFn(pub Vec<u32>);

impl TokenFn {
    /// Constant token function `f(v) = k`.
    pub fn uniform(n: usize, k: u32) -> TokenFn {
        TokenFn(vec![k; n])
    }

    /// Degree-based tokens on `g`: `d(v) - 1` for high vertices,
    /// `d(v)` for low ones. `low` is a bitmask over the vertices of `g`.
    /// A high vertex of degree 0 gets 0 tokens (there is no room below
    /// an empty neighborhood), which correctly makes the game lost.
    pub fn degree_based(g: &Graph, low: u64) -> TokenFn {
        TokenFn(
            (0..g.n())
                .map(|v| {
                    let d = g.degree(v) as u32;
                    if low >> v & 1 == 1 {
                        d
                    } else {
                        d.saturating_sub(1)
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&t| t as u64).sum()
    }

    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.n() {
            return Err(Error::TokenLengthMismatch {
                got: self.0.len(),
                want: g.n(),
            });
        }
        Ok(())
    }

    /// Parses a CLI-style token spec against a concrete graph:
    /// `all=<k>`, a comma list like `2,3,3,1`, or `d1[:low=<indices>]`.
    pub fn parse(spec: &str, g: &Graph) -> Result<TokenFn> {
        let bad = || Error::BadTokenSpec(spec.to_string());
        if let Some(k) = spec.strip_prefix("all=") {
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            return Ok(TokenFn::uniform(g.n(), k));
        }
        if spec == "d1" {
            return Ok(TokenFn::degree_based(g, 0));
        }
        if let Some(rest) = spec.strip_prefix("d1:low=") {
            let mut low = 0u64;
            for part in rest.split(',') {
                let v: usize = part.trim().parse().map_err(|_| bad())?;
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
                low |= 1 << v;
            }
            return Ok(TokenFn::degree_based(g, low));
        }
        let vals: Vec<u32> = spec
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if vals.len() != g.n() {
            return Err(Error::TokenLengthMismatch {
                got: vals.len(),
                want: g.n(),
            });
        }
        Ok(TokenFn(vals))
    }
}

/// Partition of the vertices of a graph `G` into "high" vertices, whose
/// square degree meets the global maximum `Δ(G)²`, and "low" vertices,
/// which fall short of it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighLowMarking {
    pub n: usize,
    /// Bitmask of high vertices.
    pub high: u64,
}

impl HighLowMarking {
    pub fn is_high(&self, v: usize) -> bool {
        self.high >> v & 1 == 1
    }

    pub fn low_mask(&self) -> u64 {
        !self.high & mask_all(self.n)
    }

    /// Token budgets this marking induces on the square: high vertices
    /// get one token less than their square degree, low vertices their
    /// full square degree.
    pub fn tokens_on(&self, square: &Graph) -> TokenFn {
        TokenFn::degree_based(square, self.low_mask())
    }
}

pub(crate) fn mask_all(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n], labels: None })
    }

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops, and duplicate edges (in either order).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Attaches vertex labels (for figures-style names such as `v1`, `w2`).
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !mask_all(u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// `Some(k)` iff every vertex has degree exactly `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == mask_all(self.n) & !(1 << v))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask_all(self.n)
    }

    /// Distance-`d` power: vertices at graph distance 1..=d become adjacent.
    /// Labels carry over. `d = 0` is rejected as meaningless.
    pub fn power(&self, d: usize) -> Result<Graph> {
        if d == 0 {
            return Err(Error::OverBudget {
                op: "power",
                detail: "exponent must be at least 1".into(),
            });
        }
        let mut adj = self.adj.clone();
        // One BFS per vertex up to depth d; n <= 64 keeps this trivial.
        for v in 0..self.n {
            let mut reach = 1u64 << v;
            let mut frontier = 1u64 << v;
            for _ in 0..d {
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[u];
                }
                frontier = next & !reach;
                reach |= next;
            }
            adj[v] = reach & !(1 << v);
        }
        Ok(Graph { n: self.n, adj, labels: self.labels.clone() })
    }

    /// Square of the graph: shorthand for `power(2)`.
    pub fn square(&self) -> Graph {
        self.power(2).expect("power(2) is always in budget")
    }

    /// Join: disjoint union of `self` and `other` plus all edges between.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        let left = mask_all(self.n);
        let right = mask_all(n) & !left;
        for v in 0..self.n {
            adj[v] = self.adj[v] | right;
        }
        for v in 0..other.n {
            adj[self.n + v] = (other.adj[v] << self.n) | left;
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).cloned().collect()),
            _ => None,
        };
        Ok(Graph { n, adj, labels })
    }

    /// Induced subgraph on `verts`, in the given order. Returns the
    /// subgraph together with the map from new indices to old ones.
    pub fn induced(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut seen = 0u64;
        for &v in verts {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::DuplicateVertex(v));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        if let Some(ls) = &self.labels {
            g = g.with_labels(verts.iter().map(|&v| ls[v].clone()).collect());
        }
        Ok((g, verts.to_vec()))
    }

    /// Induced subgraph on the set bits of `mask`, in ascending order.
    pub fn induced_mask(&self, mask: u64) -> Result<(Graph, Vec<usize>)> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        self.induced(&verts)
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// For each edge `uv`, measures the `u`-`v` distance with the edge
    /// removed; the shortest cycle through `uv` is that distance plus one.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.dist_avoiding(u, v, (u, v)) {
                let cycle = d + 1;
                if best.map_or(true, |b| cycle < b) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// BFS distance from `s` to `t` ignoring the edge `skip`.
    fn dist_avoiding(&self, s: usize, t: usize, skip: (usize, usize)) -> Option<usize> {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut nb = self.adj[x];
                if x == skip.0 {
                    nb &= !(1 << skip.1);
                }
                if x == skip.1 {
                    nb &= !(1 << skip.0);
                }
                next |= nb;
            }
            frontier = next & !seen;
            seen |= next;
            if frontier >> t & 1 == 1 {
                return Some(d);
            }
        }
        None
    }

    /// Exact clique number by branch and bound on candidate bitmasks.
    pub fn clique_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        // Order vertices by descending degree so the first descent finds
        // a large clique early and the size bound starts pruning.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut best = 0;
        self.clique_search(mask_all(self.n), 0, &order, &mut best);
        best
    }

    fn clique_search(&self, mut cand: u64, size: usize, order: &[usize], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        for &v in order {
            if cand >> v & 1 == 0 {
                continue;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            cand &= !(1 << v);
            self.clique_search(self.adj[v] & cand, size + 1, order, best);
        }
    }

    /// Exact chromatic number by saturation-ordered branch and bound,
    /// seeded with the clique number as a lower bound. Refuses graphs
    /// with more than 20 vertices.
    pub fn chromatic_number(&self) -> Result<usize> {
        if self.n > 20 {
            return Err(Error::OverBudget {
                op: "chromatic_number",
                detail: format!("{} vertices exceeds the 20-vertex search budget", self.n),
            });
        }
        if self.n == 0 {
            return Ok(0);
        }
        let lower = self.clique_number();
        let mut upper = self.greedy_coloring_bound();
        if lower == upper {
            return Ok(lower);
        }
        let mut colors = vec![usize::MAX; self.n];
        for k in lower..upper {
            if self.try_color(k, &mut colors, 0) {
                upper = k;
                break;
            }
            colors.iter_mut().for_each(|c| *c = usize::MAX);
        }
        Ok(upper)
    }

    fn greedy_coloring_bound(&self) -> usize {
        // Saturation-greedy: repeatedly color the uncolored vertex seeing
        // the most distinct colors, breaking ties by degree.
        let mut colors = vec![usize::MAX; self.n];
        let mut used = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| colors[v] == usize::MAX)
                .max_by_key(|&v| (self.saturation(v, &colors), self.degree(v)))
                .unwrap();
            let mut c = 0;
            while self.sees_color(v, c, &colors) {
                c += 1;
            }
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn saturation(&self, v: usize, colors: &[usize]) -> usize {
        let mut seen = 0u64;
        let mut rest = self.adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if colors[u] != usize::MAX {
                seen |= 1 << colors[u];
            }
        }
        seen.count_ones() as usize
    }

    fn sees_color(&self, v: usize, c: usize, colors: &[usize]) -> bool {
        let mut rest = self.adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if colors[u] == c {
                return true;
            }
        }
        false
    }

    /// Tries to properly color with at most `k` colors, extending the
    /// partial assignment in `colors`, saturation-first.
    fn try_color(&self, k: usize, colors: &mut [usize], done: usize) -> bool {
        if done == self.n {
            return true;
        }
        let v = (0..self.n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation(v, colors), self.degree(v)))
            .unwrap();
        for c in 0..k {
            if self.sees_color(v, c, colors) {
                continue;
            }
            // Colors not yet used anywhere are interchangeable: trying one
            // fresh color suffices.
            let fresh = !colors.iter().any(|&x| x == c);
            colors[v] = c;
            if self.try_color(k, colors, done + 1) {
                return true;
            }
            colors[v] = usize::MAX;
            if fresh {
                break;
            }
        }
        false
    }

    /// Marks each vertex high or low by whether its square degree attains
    /// the maximum possible value `Δ(G)²`.
    pub fn classify_high_low(&self) -> HighLowMarking {
        let sq = self.square();
        let cap = self.max_degree() * self.max_degree();
        let mut high = 0u64;
        for v in 0..self.n {
            if sq.degree(v) == cap {
                high |= 1 << v;
            }
        }
        HighLowMarking { n: self.n, high }
    }

    /// A graph is Moore (diameter-2 case) iff it is Δ-regular on exactly
    /// Δ² + 1 vertices and its square is complete.
    pub fn is_moore(&self) -> bool {
        match self.regular_degree() {
            Some(d) => self.n == d * d + 1 && self.square().is_complete(),
            None => false,
        }
    }
}

/// Parses the plain edge-list format: first line `n m`, then `m` lines
/// `u v` with 0-based endpoints. `#` starts a comment; blank lines are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected two integers, got '{line}'"),
            });
        }
        let a: usize = nums[0].parse().map_err(|_| Error::Parse {
            line: idx + 1,
            msg: format!("bad integer '{}'", nums[0]),
        })?;
        let b: usize = nums[1].parse().map_err(|_| Error::Parse {
            line: idx + 1,
            msg: format!("bad integer '{}'", nums[1]),
        })?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 1, msg: "missing 'n m' header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Renders a graph in the same edge-list format `parse_edge_list` reads.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Graphviz DOT rendering, with labels when present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v} [label=\"{}\"];\n", g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    /// Brute-force girth: the vertex set of a shortest cycle induces that
    /// cycle exactly (a chord would shorten it), so it suffices to scan
    /// subsets for induced cycles. Only usable for n <= 12 or so.
    fn girth_brute(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best = None;
        for mask in 0u64..(1 << n) {
            let k = mask.count_ones() as usize;
            if k < 3 || best.map_or(false, |b| k >= b) {
                continue;
            }
            let (sub, _) = g.induced_mask(mask).unwrap();
            if sub.regular_degree() == Some(2) && sub.is_connected() {
                best = Some(k);
            }
        }
        best
    }

    /// Brute-force chromatic number: smallest k with a proper k^n assignment.
    fn chromatic_brute(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        'k: for k in 1..=n {
            let mut assign = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| assign[u] != assign[v]) {
                    return k;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        continue 'k;
                    }
                    assign[i] += 1;
                    if assign[i] < k {
                        break;
                    }
                    assign[i] = 0;
                    i += 1;
                }
            }
        }
        n
    }

    fn path(n: usize) -> Graph {
        named_graph(&format!("path {n}")).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        named_graph(&format!("cycle {n}")).unwrap()
    }

    fn complete(n: usize) -> Graph {
        named_graph(&format!("complete {n}")).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn power_of_path_adds_distance_two_pairs() {
        let p4 = path(4);
        let sq = p4.square();
        assert_eq!(sq.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        // Power with d >= diameter is complete.
        assert!(p4.power(3).unwrap().is_complete());
        assert!(p4.power(1).unwrap() == p4);
        assert!(p4.power(0).is_err());
    }

    #[test]
    fn join_degrees_and_commutativity() {
        let k1 = complete(1);
        let p3 = path(3);
        let j = k1.join(&p3).unwrap();
        // K1 vertex sees all of P3; P3 keeps its own degrees plus one.
        assert_eq!(j.degree(0), 3);
        assert_eq!(j.degree(1), 2);
        assert_eq!(j.degree(2), 3);
        assert_eq!(j.degree(3), 2);
        let ji = p3.join(&k1).unwrap();
        assert_eq!(j.edge_count(), ji.edge_count());
        assert_eq!(j.n(), 4);
        // join(K3, E2) is K4 minus nothing on 5 vertices: 3 + 6 edges.
        let e2 = Graph::empty(2).unwrap();
        let k3 = complete(3);
        assert_eq!(k3.join(&e2).unwrap().edge_count(), 9);
    }

    #[test]
    fn girth_matches_brute_force_on_small_graphs() {
        let mut cases: Vec<Graph> = vec![
            path(5),
            cycle(5),
            cycle(6),
            complete(4),
            named_graph("petersen").unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap(),
            Graph::empty(4).unwrap(),
        ];
        // A deterministic scatter of small graphs: all graphs on 5 vertices
        // with every third edge mask.
        for seed in (0u64..1024).step_by(3) {
            let pairs: Vec<(usize, usize)> = (0..5)
                .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
                .collect();
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| seed >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            cases.push(Graph::from_edges(5, &edges).unwrap());
        }
        for g in &cases {
            assert_eq!(g.girth(), girth_brute(g), "girth mismatch on {:?}", g.edges());
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(path(7).girth(), None);
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(named_graph("petersen").unwrap().girth(), Some(5));
        assert_eq!(named_graph("hoffman_singleton").unwrap().girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(complete(4).clique_number(), 4);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(named_graph("petersen").unwrap().clique_number(), 2);
        assert_eq!(named_graph("bk15").unwrap().clique_number(), 6);
        assert_eq!(Graph::empty(5).unwrap().clique_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().clique_number(), 0);
    }

    #[test]
    fn chromatic_matches_brute_force_on_small_graphs() {
        let cases: Vec<Graph> = vec![
            path(5),
            cycle(5),
            cycle(6),
            complete(5),
            named_graph("petersen").unwrap(),
            complete(3).join(&cycle(5)).unwrap(),
            cycle(6).square(),
        ];
        for g in &cases {
            assert_eq!(
                g.chromatic_number().unwrap(),
                chromatic_brute(g),
                "chromatic mismatch on {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn chromatic_of_join_k3_c5_is_six() {
        // C5 needs 3 colors, the K3 needs 3 more across the join.
        let g = complete(3).join(&cycle(5)).unwrap();
        assert_eq!(g.chromatic_number().unwrap(), 6);
    }

    #[test]
    fn chromatic_budget_enforced() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(g.chromatic_number(), Err(Error::OverBudget { .. })));
    }

    #[test]
    fn high_low_classification() {
        // C4 squared is K4: square degree 3 < 4 = Δ², so every vertex is low.
        let m = cycle(4).classify_high_low();
        assert_eq!(m.high, 0);
        // Petersen squared is K10: square degree 9 = 3², all high.
        let m = named_graph("petersen").unwrap().classify_high_low();
        assert_eq!(m.high, (1 << 10) - 1);
        // A path interior differs from its ends.
        let m = path(5).classify_high_low();
        assert!(!m.is_high(0) && m.is_high(2));
    }

    #[test]
    fn moore_recognition() {
        assert!(cycle(5).is_moore());
        assert!(named_graph("petersen").unwrap().is_moore());
        assert!(named_graph("hoffman_singleton").unwrap().is_moore());
        assert!(!cycle(6).is_moore());
        assert!(!path(5).is_moore());
        // Right vertex count, right regularity, but square not complete.
        assert!(!cycle(10).is_moore());
    }

    #[test]
    fn induced_keeps_order_and_mapping() {
        let g = cycle(5);
        let (sub, map) = g.induced(&[3, 0, 1]).unwrap();
        assert_eq!(map, vec![3, 0, 1]);
        assert!(sub.has_edge(1, 2) && !sub.has_edge(0, 2) && !sub.has_edge(0, 1));
        assert!(g.induced(&[0, 0]).is_err());
        assert!(g.induced(&[9]).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = named_graph("petersen").unwrap();
        let text = render_edge_list(&g);
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g.edges(), h.edges());
    }

    #[test]
    fn edge_list_parse_errors_carry_line_numbers() {
        let bad = "3 2\n0 1\n0 zebra\n";
        match parse_edge_list(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_edge_list("3 5\n0 1\n").is_err());
        assert!(parse_edge_list("# only comments\n").is_err());
        // Comments and blank lines are fine.
        let ok = "# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n";
        assert_eq!(parse_edge_list(ok).unwrap().edge_count(), 3);
    }

    #[test]
    fn dot_output_mentions_labels() {
        let g = named_graph("farlinked").unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("label=\"w2\""));
        assert!(dot.starts_with("graph g {"));
    }

    #[test]
    fn token_spec_parsing() {
        let g = cycle(4);
        assert_eq!(TokenFn::parse("all=2", &g).unwrap(), TokenFn::uniform(4, 2));
        assert_eq!(
            TokenFn::parse("2,3,1,0", &g).unwrap(),
            TokenFn(vec![2, 3, 1, 0])
        );
        assert_eq!(TokenFn::parse("d1", &g).unwrap(), TokenFn(vec![1, 1, 1, 1]));
        assert_eq!(
            TokenFn::parse("d1:low=1,3", &g).unwrap(),
            TokenFn(vec![1, 2, 1, 2])
        );
        assert!(TokenFn::parse("d1:low=9", &g).is_err());
        assert!(TokenFn::parse("2,3", &g).is_err());
        assert!(TokenFn::parse("frogs", &g).is_err());
    }

    #[test]
    fn marking_tokens_on_square() {
        let g = cycle(4);
        let marking = g.classify_high_low();
        let f = marking.tokens_on(&g.square());
        // All low on C4: tokens equal the K4 degrees.
        assert_eq!(f, TokenFn(vec![3, 3, 3, 3]));
    }
}

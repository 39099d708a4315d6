//! Orientations and exact circulation-parity counting.
//!
//! A circulation here is a subset of arcs with equal in- and out-degree
//! at every vertex. Counting them split by parity of the arc count is
//! the engine behind every orientation certificate in this crate: an
//! orientation whose even/odd counts differ, with out-degrees below the
//! token budgets, certifies a Painter win without playing the game.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, TokenFn};
use crate::named;
use crate::Result;

/// Orientation of a simple graph: at most one arc per vertex pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Builds a digraph, rejecting self-loops, duplicate arcs, and
    /// antiparallel pairs (the underlying graph must stay simple).
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Digraph> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: crate::graph::MAX_VERTICES });
        }
        let mut seen = std::collections::HashSet::new();
        let mut out_deg = vec![0; n];
        let mut in_deg = vec![0; n];
        for &(u, v) in &arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
            if seen.contains(&(v, u)) {
                return Err(Error::AntiparallelArcs(u, v));
            }
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        Ok(Digraph { n, arcs, out_deg, in_deg, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Digraph {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_deg[v]
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

    /// Forgets directions.
    pub fn underlying(&self) -> Graph {
        let g = Graph::from_edges(self.n, &self.arcs)
            .expect("digraph invariants imply a simple underlying graph");
        match &self.labels {
            Some(ls) => g.with_labels(ls.clone()),
            None => g,
        }
    }

    /// Reverses every arc.
    pub fn reverse(&self) -> Digraph {
        let arcs = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        Digraph {
            n: self.n,
            arcs,
            out_deg: self.in_deg.clone(),
            in_deg: self.out_deg.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Deletes a vertex set (by mask), dropping incident arcs. Vertex
    /// indices are preserved; deleted vertices simply become isolated
    /// and are ignored by circulation counting.
    fn drop_vertices(&self, gone: u64) -> Digraph {
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .copied()
            .filter(|&(u, v)| gone >> u & 1 == 0 && gone >> v & 1 == 0)
            .collect();
        Digraph::new(self.n, arcs).expect("subset of valid arcs stays valid")
    }
}

/// Turns an undirected graph plus an arc list into an orientation,
/// verifying the arcs cover every edge exactly once.
pub fn orient(g: &Graph, arcs: &[(usize, usize)]) -> Result<Digraph> {
    let mut remaining: std::collections::HashSet<(usize, usize)> =
        g.edges().into_iter().collect();
    for &(u, v) in arcs {
        let key = (u.min(v), u.max(v));
        if !g.has_edge(u, v) {
            return Err(Error::BadOrientation(format!(
                "arc {u}->{v} is not an edge of the graph"
            )));
        }
        if !remaining.remove(&key) {
            return Err(Error::BadOrientation(format!(
                "edge {}-{} oriented more than once",
                key.0, key.1
            )));
        }
    }
    if let Some(&(u, v)) = remaining.iter().min() {
        return Err(Error::BadOrientation(format!(
            "edge {u}-{v} left unoriented ({} edges missing)",
            remaining.len()
        )));
    }
    let d = Digraph::new(g.n(), arcs.to_vec())?;
    Ok(match g.labels() {
        Some(ls) => d.with_labels(ls.to_vec()),
        None => d,
    })
}

/// Even/odd census of circulations. The empty arc set is a circulation,
/// so `ee >= 1` always.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CirculationCount {
    pub ee: u64,
    pub eo: u64,
}

impl CirculationCount {
    pub fn diff(&self) -> i64 {
        // Counts of sub-2^64 magnitude; the difference fits i64 for every
        // instance the arc budget admits, but check anyway.
        let d = self.ee as i128 - self.eo as i128;
        i64::try_from(d).expect("difference of sub-budget counts fits i64")
    }
}

/// Exact subset DFS with per-vertex balance pruning.
///
/// `target[v]` is the required final out-minus-in balance at `v`.
/// Arcs are scanned in an order that finishes low-numbered vertices
/// early, so infeasible prefixes die as soon as a vertex closes.
fn count_with_targets(n: usize, arcs: &[(usize, usize)], target: &[i32]) -> Result<(u64, u64)> {
    let m = arcs.len();
    if m > 64 {
        return Err(Error::OverBudget {
            op: "count_circulations",
            detail: format!("{m} arcs exceeds the 64-arc limit"),
        });
    }
    let mut rem_out = vec![0i32; n];
    let mut rem_in = vec![0i32; n];
    for &(u, v) in arcs {
        rem_out[u] += 1;
        rem_in[v] += 1;
    }
    // Vertices no arc touches must already be balanced.
    for v in 0..n {
        if rem_out[v] == 0 && rem_in[v] == 0 && target[v] != 0 {
            return Ok((0, 0));
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        let (u, v) = arcs[i];
        (u.min(v), u.max(v))
    });
    let ordered: Vec<(usize, usize)> = order.into_iter().map(|i| arcs[i]).collect();

    struct Dfs<'a> {
        arcs: &'a [(usize, usize)],
        target: &'a [i32],
        bal: Vec<i32>,
        rem_out: Vec<i32>,
        rem_in: Vec<i32>,
        even: u64,
        odd: u64,
        overflow: bool,
    }

    impl Dfs<'_> {
        fn feasible(&self, v: usize) -> bool {
            let need = self.target[v] - self.bal[v];
            -self.rem_in[v] <= need && need <= self.rem_out[v]
        }

        fn run(&mut self, idx: usize, parity: u32) {
            if self.overflow {
                return;
            }
            if idx == self.arcs.len() {
                let slot = if parity == 0 { &mut self.even } else { &mut self.odd };
                match slot.checked_add(1) {
                    Some(next) => *slot = next,
                    None => self.overflow = true,
                }
                return;
            }
            let (u, v) = self.arcs[idx];
            self.rem_out[u] -= 1;
            self.rem_in[v] -= 1;

            // Skip the arc.
            if self.feasible(u) && self.feasible(v) {
                self.run(idx + 1, parity);
            }
            // Take the arc.
            self.bal[u] += 1;
            self.bal[v] -= 1;
            if self.feasible(u) && self.feasible(v) {
                self.run(idx + 1, parity ^ 1);
            }
            self.bal[u] -= 1;
            self.bal[v] += 1;
            self.rem_out[u] += 1;
            self.rem_in[v] += 1;
        }
    }

    let mut dfs = Dfs {
        arcs: &ordered,
        target,
        bal: vec![0; n],
        rem_out,
        rem_in,
        even: 0,
        odd: 0,
        overflow: false,
    };
    dfs.run(0, 0);
    if dfs.overflow {
        return Err(Error::CountOverflow);
    }
    Ok((dfs.even, dfs.odd))
}

/// Counts circulations of `d` split by parity. Budget: at most 64 arcs.
pub fn count_circulations(d: &Digraph) -> Result<CirculationCount> {
    let target = vec![0i32; d.n()];
    let (ee, eo) = count_with_targets(d.n(), d.arcs(), &target)?;
    Ok(CirculationCount { ee, eo })
}

/// Even-minus-odd circulation difference.
pub fn diff(d: &Digraph) -> Result<i64> {
    Ok(count_circulations(d)?.diff())
}

/// Inclusion-exclusion difference over a deletion set: the alternating
/// sum of `diff` over all ways of deleting a subset of `w`.
pub fn diff_restricted(d: &Digraph, w: &[usize]) -> Result<i64> {
    if w.len() > 16 {
        return Err(Error::OverBudget {
            op: "diff_restricted",
            detail: format!("{} deletion vertices exceeds the 16 limit", w.len()),
        });
    }
    let mut wmask = 0u64;
    for &v in w {
        if v >= d.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: d.n() });
        }
        if wmask >> v & 1 == 1 {
            return Err(Error::DuplicateVertex(v));
        }
        wmask |= 1 << v;
    }
    let mut total: i128 = 0;
    for pick in 0u64..(1 << w.len()) {
        let mut gone = 0u64;
        for (i, &v) in w.iter().enumerate() {
            if pick >> i & 1 == 1 {
                gone |= 1 << v;
            }
        }
        let sub = d.drop_vertices(gone);
        let term = diff(&sub)? as i128;
        if pick.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    i64::try_from(total).map_err(|_| Error::CountOverflow)
}

/// Feasibility of an orientation against token budgets: every vertex
/// must keep its out-degree strictly below its tokens.
pub fn indegree_feasibility(d: &Digraph, f: &TokenFn) -> Result<bool> {
    if f.len() != d.n() {
        return Err(Error::TokenLengthMismatch { got: f.len(), want: d.n() });
    }
    Ok((0..d.n()).all(|v| f.get(v) > d.out_degree(v) as u32))
}

/// Orientation certificate: the census, the claimed arc list, the token
/// budgets, and the verdict they support.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ATCertificate {
    pub lemma_id: String,
    pub ee: u64,
    pub eo: u64,
    pub diff: i64,
    pub arcs: Vec<(usize, usize)>,
    pub f: Vec<u32>,
    pub verdict: bool,
}

/// Recomputes the census of `d` and checks it against `f`: the verdict
/// is true iff the difference is nonzero and every out-degree fits under
/// its token budget.
pub fn verify_at_certificate(d: &Digraph, f: &TokenFn, lemma_id: &str) -> Result<ATCertificate> {
    f.check_len(&d.underlying())?;
    let count = count_circulations(d)?;
    let feasible = indegree_feasibility(d, f)?;
    let diff = count.diff();
    Ok(ATCertificate {
        lemma_id: lemma_id.to_string(),
        ee: count.ee,
        eo: count.eo,
        diff,
        arcs: d.arcs().to_vec(),
        f: (0..f.len()).map(|v| f.get(v)).collect(),
        verdict: diff != 0 && feasible,
    })
}

/// Outcome of an orientation search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AtSearchOutcome {
    /// First orientation (in lexicographic edge-direction order) with a
    /// nonzero difference and feasible out-degrees.
    Found(Box<Digraph>),
    /// Every feasible orientation has difference zero.
    Exhausted,
    /// The node budget ran out before the search settled.
    BudgetExceeded,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AtSearch {
    pub outcome: AtSearchOutcome,
    pub nodes: u64,
}

/// Searches all orientations of `g` for one certifying `f`-paintability:
/// out-degrees strictly below tokens and nonzero circulation difference.
///
/// The search walks edges in sorted order, trying `u->v` before `v->u`,
/// pruning as soon as an out-degree hits its budget, so the reported
/// orientation is deterministic. Every orientation is covered: the
/// out-degree constraint is not symmetric under reversal, so no
/// half-the-space shortcut is sound here.
pub fn search_at_orientation(g: &Graph, f: &TokenFn, budget: u64) -> Result<AtSearch> {
    f.check_len(g)?;
    let edges = g.edges();
    if edges.len() > 40 {
        return Err(Error::OverBudget {
            op: "search_at_orientation",
            detail: format!("{} edges exceeds the 40-edge limit", edges.len()),
        });
    }

    struct Search<'a> {
        edges: &'a [(usize, usize)],
        cap: Vec<i64>, // f(v) - 1, the max allowed out-degree
        out: Vec<i64>,
        nodes: u64,
        budget: u64,
        found: Option<Vec<(usize, usize)>>,
        arcs: Vec<(usize, usize)>,
        exceeded: bool,
        n: usize,
    }

    impl Search<'_> {
        fn run(&mut self, idx: usize) {
            if self.found.is_some() || self.exceeded {
                return;
            }
            if self.nodes >= self.budget {
                self.exceeded = true;
                return;
            }
            self.nodes += 1;
            if idx == self.edges.len() {
                let target = vec![0i32; self.n];
                if let Ok((ee, eo)) = count_with_targets(self.n, &self.arcs, &target) {
                    if ee != eo {
                        self.found = Some(self.arcs.clone());
                    }
                }
                return;
            }
            let (u, v) = self.edges[idx];
            for (tail, head) in [(u, v), (v, u)] {
                if self.out[tail] < self.cap[tail] {
                    self.out[tail] += 1;
                    self.arcs.push((tail, head));
                    self.run(idx + 1);
                    self.arcs.pop();
                    self.out[tail] -= 1;
                }
                if self.found.is_some() || self.exceeded {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        edges: &edges,
        cap: (0..g.n()).map(|v| f.get(v) as i64 - 1).collect(),
        out: vec![0; g.n()],
        nodes: 0,
        budget,
        found: None,
        arcs: Vec::with_capacity(edges.len()),
        exceeded: false,
        n: g.n(),
    };
    search.run(0);
    let outcome = if let Some(arcs) = search.found {
        let d = Digraph::new(g.n(), arcs)?;
        AtSearchOutcome::Found(Box::new(match g.labels() {
            Some(ls) => d.with_labels(ls.to_vec()),
            None => d,
        }))
    } else if search.exceeded {
        AtSearchOutcome::BudgetExceeded
    } else {
        AtSearchOutcome::Exhausted
    };
    Ok(AtSearch { outcome, nodes: search.nodes })
}

/// The square of an n-vertex path, every arc pointing from lower to
/// higher index: `v_i -> v_{i+1}` and `v_i -> v_{i+2}`.
pub fn path_square_digraph(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::OverBudget {
            op: "path_square_digraph",
            detail: format!("need at least 2 vertices, got {n}"),
        });
    }
    let mut arcs = Vec::with_capacity(2 * n - 3);
    for i in 0..n {
        if i + 1 < n {
            arcs.push((i, i + 1));
        }
        if i + 2 < n {
            arcs.push((i, i + 2));
        }
    }
    let d = Digraph::new(n, arcs)?;
    Ok(d.with_labels((1..=n).map(|i| format!("v{i}")).collect()))
}

/// Boundary-condition family for subgraph censuses of the oriented path
/// square.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeaklyEulerianMode {
    /// Interior balanced; one unit leaves v1 and enters vn.
    F1,
    /// Interior balanced; two units leave v1 and enter vn.
    F2,
    /// One unit leaves v1 and enters vn, with v2 overshooting out by one
    /// and v_{n-1} overshooting in by one.
    G,
}

impl WeaklyEulerianMode {
    pub fn parse(s: &str) -> Result<WeaklyEulerianMode> {
        match s {
            "f1" => Ok(WeaklyEulerianMode::F1),
            "f2" => Ok(WeaklyEulerianMode::F2),
            "g" => Ok(WeaklyEulerianMode::G),
            other => Err(Error::Parse {
                line: 1,
                msg: format!("unknown mode '{other}', expected f1, f2, or g"),
            }),
        }
    }
}

/// Even-minus-odd census of weakly eulerian subgraphs of the oriented
/// path square, by direct subset enumeration with the boundary
/// conditions of the chosen mode.
pub fn weakly_eulerian_diff(n: usize, mode: WeaklyEulerianMode) -> Result<i64> {
    let min_n = match mode {
        WeaklyEulerianMode::F1 => 2,
        WeaklyEulerianMode::F2 | WeaklyEulerianMode::G => 4,
    };
    if n < min_n {
        return Err(Error::OverBudget {
            op: "weakly_eulerian_diff",
            detail: format!("mode needs n >= {min_n}, got {n}"),
        });
    }
    let d = path_square_digraph(n)?;
    let mut target = vec![0i32; n];
    match mode {
        WeaklyEulerianMode::F1 => {
            target[0] = 1;
            target[n - 1] = -1;
        }
        WeaklyEulerianMode::F2 => {
            target[0] = 2;
            target[n - 1] = -2;
        }
        WeaklyEulerianMode::G => {
            target[0] = 1;
            target[1] = 1;
            target[n - 2] = -1;
            target[n - 1] = -1;
        }
    }
    let (ee, eo) = count_with_targets(n, d.arcs(), &target)?;
    Ok(ee as i64 - eo as i64)
}

/// Closed form the censuses are verified against: the f1 value cycles
/// -1, 0, 1 with the residue of n mod 3 (n = 3k-1, 3k, 3k+1).
pub fn f1_closed_form(n: usize) -> i64 {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Closed form for the extra census: the negated f1 pattern shifted to
/// its own base cases (g(4) = -1, g(5) = 1, g(6) = 0).
pub fn g_closed_form(n: usize) -> i64 {
    match n % 3 {
        0 => 0,
        1 => -1,
        _ => 1,
    }
}

fn check_cycle_pendant_n(op: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min || 2 * n + 6 > 64 {
        return Err(Error::OverBudget {
            op,
            detail: format!("n must be in [{min}, 29], got {n}"),
        });
    }
    Ok(())
}

/// Square of an n-cycle with one pendant tip u at v1, oriented clockwise
/// (`v_i -> v_{i+1}`, `v_i -> v_{i+2}`) with `u -> v_n`, `v_1 -> u`,
/// `v_2 -> u`.
pub(crate) fn cycle_pendant_orientation(n: usize) -> Result<Digraph> {
    check_cycle_pendant_n("cycle_pendant", n, 5)?;
    let u = n;
    let mut arcs = Vec::with_capacity(2 * n + 3);
    for i in 0..n {
        arcs.push((i, (i + 1) % n));
        arcs.push((i, (i + 2) % n));
    }
    arcs.push((u, n - 1));
    arcs.push((0, u));
    arcs.push((1, u));
    let mut labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    labels.push("u".to_string());
    Ok(Digraph::new(n + 1, arcs)?.with_labels(labels))
}

/// Square of an n-cycle with pendant tips w1 at v1 and w5 at v5,
/// oriented clockwise with `w1 -> v_n`, `v_1 -> w1`, `v_2 -> w1`,
/// `w5 -> v_4`, `v_5 -> w5`, `v_6 -> w5`.
pub(crate) fn cycle_2pendant_orientation(n: usize) -> Result<Digraph> {
    check_cycle_pendant_n("cycle_2pendant", n, 7)?;
    let w1 = n;
    let w5 = n + 1;
    let mut arcs = Vec::with_capacity(2 * n + 6);
    for i in 0..n {
        arcs.push((i, (i + 1) % n));
        arcs.push((i, (i + 2) % n));
    }
    arcs.push((w1, n - 1));
    arcs.push((0, w1));
    arcs.push((1, w1));
    arcs.push((w5, 3));
    arcs.push((4, w5));
    arcs.push((5, w5));
    let mut labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    labels.push("w1".to_string());
    labels.push("w5".to_string());
    Ok(Digraph::new(n + 2, arcs)?.with_labels(labels))
}

/// The n = 8 two-pendant square with the extra tip-to-tip edge, oriented
/// `w5 -> w1`.
pub(crate) fn cycle_2pendant_edge8_orientation() -> Digraph {
    let base = cycle_2pendant_orientation(8).expect("n = 8 is in range");
    let mut arcs = base.arcs().to_vec();
    arcs.push((9, 8));
    Digraph::new(10, arcs)
        .expect("extra arc keeps the digraph simple")
        .with_labels(base.labels().expect("base is labeled").to_vec())
}

/// Resolves a canned orientation id to its digraph and the token budgets
/// of its high/low marking.
pub fn lemma_orientation(id: &str) -> Result<(Digraph, TokenFn)> {
    let id = id.trim();
    for spec in named::FIXED_ORIENTATIONS {
        if spec.id == id {
            let d = Digraph::new(spec.labels.len(), spec.arcs.to_vec())?
                .with_labels(spec.labels.iter().map(|s| s.to_string()).collect());
            let f = TokenFn::degree_based(&d.underlying(), spec.low);
            return Ok((d, f));
        }
    }
    if id == "cycle_2pendant_edge8" {
        let d = cycle_2pendant_edge8_orientation();
        let f = TokenFn::degree_based(&d.underlying(), 0);
        return Ok((d, f));
    }
    if let Some((name, n)) = named::split_parametric(id) {
        let d = match name {
            "cycle_pendant" => cycle_pendant_orientation(n)?,
            "cycle_2pendant" => cycle_2pendant_orientation(n)?,
            "path_square" => path_square_digraph(n)?,
            _ => return Err(Error::UnknownOrientation(id.to_string())),
        };
        let f = TokenFn::degree_based(&d.underlying(), 0);
        return Ok((d, f));
    }
    Err(Error::UnknownOrientation(id.to_string()))
}

/// Every id `lemma_orientation` accepts.
pub fn known_orientation_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = named::FIXED_ORIENTATIONS.iter().map(|s| s.id).collect();
    ids.extend([
        "cycle_pendant <n>",
        "cycle_2pendant <n>",
        "cycle_2pendant_edge8",
        "path_square <n>",
    ]);
    ids
}

/// Parses the arc-list format: header `n m`, then `m` lines `u v`, each
/// an arc u->v. Comments and blanks as in the edge-list format.
pub fn parse_arc_list(text: &str) -> Result<Digraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
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
            arcs.push((a, b));
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 1, msg: "missing 'n m' header".into() })?;
    if arcs.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header declares {m} arcs but {} were given", arcs.len()),
        });
    }
    Digraph::new(n, arcs)
}

/// Renders a digraph in the format `parse_arc_list` reads.
pub fn render_arc_list(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.n(), d.arc_count());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

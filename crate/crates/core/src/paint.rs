//! The online list-coloring game, solved exactly.
//!
//! Each round the first player presents a nonempty set S of uncolored
//! vertices, spending one token per presented vertex; the second player
//! colors an independent subset of S. The first player wins if an
//! uncolored vertex runs out of tokens; the second wins once everything
//! is colored. `paint` decides the winner by memoized minimax and, on a
//! second-player win, extracts a strategy object that can be played
//! move by move, audited exhaustively, combined across a vertex split,
//! or serialized as a lookup table.
//!
//! Token counts are truncated to degree plus one up front. This is
//! exact, not heuristic: responding with a maximal independent set
//! colors a neighbor of every presented-but-uncolored vertex, so a
//! vertex survives at most deg(v) presentations before its last token
//! would matter, and deg(v)+1 tokens are already unbeatable.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, TokenFn};
use crate::Result;

const MAX_GAME_VERTICES: usize = 10;
const MAX_TOKEN_SUM: u64 = 60;

fn bit_vertices(mut m: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn mask_of(verts: &[usize]) -> u32 {
    verts.iter().fold(0, |m, &v| m | 1 << v)
}

/// Game-tree search state. Tokens live in 4-bit nibbles of a u64, one
/// per vertex, zeroed once a vertex is colored so that (mask, nibbles)
/// is a canonical state key.
#[derive(Clone, Debug)]
struct Solver {
    adj: Vec<u32>,
    /// mis[s] = maximal independent subsets of the set s, ordered so
    /// that the subset whose lowest differing vertex is present comes
    /// first. The solver tries them in this order, which makes the
    /// extracted strategy reproducible.
    mis: Vec<Vec<u32>>,
    memo: HashMap<(u32, u64), bool>,
    nodes: u64,
}

fn tok(t: u64, v: usize) -> u32 {
    (t >> (4 * v) & 0xF) as u32
}

fn pack_tokens(ts: &[u32]) -> u64 {
    let mut t = 0u64;
    for (v, &x) in ts.iter().enumerate() {
        debug_assert!(x <= 0xF);
        t |= (x as u64) << (4 * v);
    }
    t
}

fn set_first(a: u32, b: u32) -> std::cmp::Ordering {
    let d = a ^ b;
    if d == 0 {
        return std::cmp::Ordering::Equal;
    }
    if a >> d.trailing_zeros() & 1 == 1 {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

impl Solver {
    fn new(g: &Graph) -> Solver {
        let n = g.n();
        let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v) as u32).collect();
        let mut mis: Vec<Vec<u32>> = Vec::with_capacity(1 << n);
        for s in 0..(1u32 << n) {
            let mut sets = Vec::new();
            let mut i = s;
            loop {
                let independent = bit_vertices(i).iter().all(|&v| adj[v] & i == 0);
                if independent {
                    let maximal =
                        bit_vertices(s & !i).iter().all(|&w| adj[w] & i != 0);
                    if maximal {
                        sets.push(i);
                    }
                }
                if i == 0 {
                    break;
                }
                i = (i - 1) & s;
            }
            sets.sort_by(|&a, &b| set_first(a, b));
            mis.push(sets);
        }
        Solver { adj, mis, memo: HashMap::new(), nodes: 0 }
    }

    fn independent(&self, s: u32) -> bool {
        bit_vertices(s).iter().all(|&v| self.adj[v] & s == 0)
    }

    fn dead_vertex(&self, u: u32, t: u64) -> Option<usize> {
        bit_vertices(u).into_iter().find(|&v| tok(t, v) == 0)
    }

    /// Child state after the move (s, i): i gets colored, the rest of s
    /// loses a token.
    fn child(u: u32, t: u64, s: u32, i: u32) -> (u32, u64) {
        let mut ct = t;
        for v in bit_vertices(s & !i) {
            ct -= 1u64 << (4 * v); // nibble >= 1 here, no borrow
        }
        for v in bit_vertices(i) {
            ct &= !(0xFu64 << (4 * v));
        }
        (u & !i, ct)
    }

    fn solve(&mut self, u: u32, t: u64) -> bool {
        self.nodes += 1;
        if u == 0 {
            return true;
        }
        if self.dead_vertex(u, t).is_some() {
            return false;
        }
        if let Some(&r) = self.memo.get(&(u, t)) {
            return r;
        }
        let mut win = true;
        let mut s = u;
        loop {
            // Vertices on their last token must be colored now, so any
            // response skipping one is skippable, and if they conflict
            // the move refutes the whole position.
            let danger =
                bit_vertices(s).into_iter().filter(|&v| tok(t, v) == 1).fold(0, |m, v| m | 1 << v);
            let mut answered = false;
            if self.independent(danger) {
                for idx in 0..self.mis[s as usize].len() {
                    let i = self.mis[s as usize][idx];
                    if i & danger != danger {
                        continue;
                    }
                    let (cu, ct) = Solver::child(u, t, s, i);
                    if self.solve(cu, ct) {
                        answered = true;
                        break;
                    }
                }
            }
            if !answered {
                win = false;
                break;
            }
            s = (s - 1) & u;
            if s == 0 {
                break;
            }
        }
        self.memo.insert((u, t), win);
        win
    }

    /// Value of a state using only terminal rules and the memo. `None`
    /// means the solve never evaluated it, which replay order rules out
    /// for any state the extracted strategy can reach.
    fn known_value(&self, u: u32, t: u64) -> Option<bool> {
        if u == 0 {
            return Some(true);
        }
        if self.dead_vertex(u, t).is_some() {
            return Some(false);
        }
        self.memo.get(&(u, t)).copied()
    }

    /// First winning response to s from (u, t), in mis order.
    fn pick(&self, u: u32, t: u64, s: u32) -> Result<u32> {
        let danger =
            bit_vertices(s).into_iter().filter(|&v| tok(t, v) == 1).fold(0, |m, v| m | 1 << v);
        if self.independent(danger) {
            for &i in &self.mis[s as usize] {
                if i & danger != danger {
                    continue;
                }
                let (cu, ct) = Solver::child(u, t, s, i);
                if self.known_value(cu, ct) == Some(true) {
                    return Ok(i);
                }
            }
        }
        Err(Error::StrategyMismatch(
            "no winning response recorded for this position".into(),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaintStats {
    /// Game-tree nodes visited by the solve, counting memo hits.
    pub nodes: u64,
    pub memo_entries: usize,
    /// Token counts actually played with, after the degree+1 cut.
    pub effective_tokens: Vec<u32>,
}

pub struct PaintOutcome {
    pub painter_wins: bool,
    /// Present exactly when the second player wins.
    pub strategy: Option<Strategy>,
    pub stats: PaintStats,
}

fn effective_tokens(g: &Graph, f: &TokenFn) -> Vec<u32> {
    (0..g.n()).map(|v| f.get(v).min(g.degree(v) as u32 + 1)).collect()
}

/// Decides the game on `g` with token budgets `f`.
///
/// Budgets: at most 10 vertices and 60 total (truncated) tokens.
pub fn paint(g: &Graph, f: &TokenFn) -> Result<PaintOutcome> {
    f.check_len(g)?;
    if g.n() > MAX_GAME_VERTICES {
        return Err(Error::OverBudget {
            op: "paint",
            detail: format!("{} vertices exceeds the {MAX_GAME_VERTICES}-vertex limit", g.n()),
        });
    }
    let eff = effective_tokens(g, f);
    let total: u64 = eff.iter().map(|&x| x as u64).sum();
    if total > MAX_TOKEN_SUM {
        return Err(Error::OverBudget {
            op: "paint",
            detail: format!("{total} total tokens exceeds the {MAX_TOKEN_SUM} limit"),
        });
    }
    let mut solver = Solver::new(g);
    let u = if g.n() == 0 { 0 } else { (1u32 << g.n()) - 1 };
    let t = pack_tokens(&eff);
    let painter_wins = solver.solve(u, t);
    let stats = PaintStats {
        nodes: solver.nodes,
        memo_entries: solver.memo.len(),
        effective_tokens: eff.clone(),
    };
    let strategy = painter_wins.then(|| Strategy {
        graph: g.clone(),
        f: TokenFn(eff),
        rule: Rule::Solver(solver),
    });
    Ok(PaintOutcome { painter_wins, strategy, stats })
}

/// Decides the game with the degree-derived budgets: deg(v)-1 tokens on
/// plain vertices, deg(v) on the vertices of `low`.
pub fn is_d1_paintable(g: &Graph, low: u64) -> Result<PaintOutcome> {
    let f = TokenFn::degree_based(g, low);
    paint(g, &f)
}

/// A playable second-player strategy. Knows its graph and token budgets;
/// `cursor` starts a fresh play-through.
#[derive(Clone)]
pub struct Strategy {
    graph: Graph,
    f: TokenFn,
    rule: Rule,
}

#[derive(Clone)]
enum Rule {
    Solver(Solver),
    Table(BTreeMap<String, Vec<usize>>),
    Combined { h_verts: Vec<usize>, h: Box<Strategy>, rest: Box<Strategy> },
}

impl Strategy {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tokens(&self) -> &TokenFn {
        &self.f
    }

    pub fn cursor(&self) -> Cursor<'_> {
        let sub = match &self.rule {
            Rule::Combined { h, rest, .. } => {
                Some(Box::new((h.cursor(), rest.cursor())))
            }
            _ => None,
        };
        Cursor {
            strat: self,
            u: if self.graph.n() == 0 { 0 } else { (1u32 << self.graph.n()) - 1 },
            t: (0..self.graph.n()).map(|v| self.f.get(v)).collect(),
            sub,
        }
    }

    /// Wraps a lookup table produced by `strategy_to_table`.
    pub fn from_table(g: &Graph, f: &TokenFn, table: BTreeMap<String, Vec<usize>>) -> Result<Strategy> {
        f.check_len(g)?;
        Ok(Strategy { graph: g.clone(), f: f.clone(), rule: Rule::Table(table) })
    }
}

/// State of one play-through of a strategy.
#[derive(Clone)]
pub struct Cursor<'a> {
    strat: &'a Strategy,
    u: u32,
    t: Vec<u32>,
    sub: Option<Box<(Cursor<'a>, Cursor<'a>)>>,
}

fn key_string(n: usize, u: u32, t: &[u32], s: u32) -> String {
    let join = |m: u32| {
        bit_vertices(m).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    let toks = (0..n).map(|v| t[v].to_string()).collect::<Vec<_>>().join(",");
    format!("u={};t={};s={}", join(u), toks, join(s))
}

impl<'a> Cursor<'a> {
    pub fn uncolored(&self) -> Vec<usize> {
        bit_vertices(self.u)
    }

    pub fn tokens_left(&self, v: usize) -> u32 {
        self.t[v]
    }

    fn dead_vertex(&self) -> Option<usize> {
        bit_vertices(self.u).into_iter().find(|&v| self.t[v] == 0)
    }

    /// Applies one round: the presented set goes in as a mask, the
    /// colored set comes out. Advances internal state.
    fn respond(&mut self, s: u32) -> Result<u32> {
        debug_assert!(s != 0 && s & !self.u == 0);
        let i = self.choose(s)?;
        debug_assert!(i & !s == 0);
        self.u &= !i;
        for v in bit_vertices(s & !i) {
            if self.t[v] == 0 {
                return Err(Error::StrategyMismatch(format!(
                    "vertex {v} was presented with no tokens left"
                )));
            }
            self.t[v] -= 1;
        }
        for v in bit_vertices(i) {
            self.t[v] = 0;
        }
        Ok(i)
    }

    fn choose(&mut self, s: u32) -> Result<u32> {
        let strat = self.strat;
        match &strat.rule {
            Rule::Solver(solver) => solver.pick(self.u, pack_tokens(&self.t), s),
            Rule::Table(map) => {
                let key = key_string(strat.graph.n(), self.u, &self.t, s);
                let resp = map.get(&key).ok_or_else(|| {
                    Error::StrategyMismatch(format!("no table entry for {key}"))
                })?;
                let i = mask_of(resp);
                if i == 0 || i & !s != 0 {
                    return Err(Error::StrategyMismatch(format!(
                        "table response for {key} is not a nonempty subset of the presented set"
                    )));
                }
                let g = &strat.graph;
                for v in bit_vertices(i) {
                    if g.neighbors(v) as u32 & i != 0 {
                        return Err(Error::StrategyMismatch(format!(
                            "table response for {key} is not independent"
                        )));
                    }
                }
                Ok(i)
            }
            Rule::Combined { h_verts, .. } => {
                let h_mask = mask_of(h_verts);
                let g = &strat.graph;
                let n = g.n();
                let rest_verts: Vec<usize> =
                    (0..n).filter(|v| h_mask >> v & 1 == 0).collect();
                let (h_cursor, rest_cursor) = &mut **self.sub.as_mut().expect("combined cursor has children");

                let to_local = |verts: &[usize], m: u32| -> u32 {
                    verts.iter().enumerate().fold(0, |acc, (i, &v)| {
                        if m >> v & 1 == 1 { acc | 1 << i } else { acc }
                    })
                };
                let to_global = |verts: &[usize], m: u32| -> u32 {
                    verts.iter().enumerate().fold(0, |acc, (i, &v)| {
                        if m >> i & 1 == 1 { acc | 1 << v } else { acc }
                    })
                };

                let s_rest = s & !h_mask;
                let i_rest = if s_rest != 0 {
                    to_global(&rest_verts, rest_cursor.respond(to_local(&rest_verts, s_rest))?)
                } else {
                    0
                };
                // Presented protected vertices adjacent to what the
                // residual strategy just colored are withheld from the
                // protected sub-game; their global token pays for the
                // shielding.
                let shield: u32 = bit_vertices(i_rest)
                    .into_iter()
                    .fold(0, |acc, v| acc | g.neighbors(v) as u32);
                let s_h = s & h_mask & !shield;
                let i_h = if s_h != 0 {
                    to_global(h_verts, h_cursor.respond(to_local(h_verts, s_h))?)
                } else {
                    0
                };
                Ok(i_rest | i_h)
            }
        }
    }

    /// Canonical encoding of the full play state, including sub-game
    /// state hidden from the board.
    fn state_key(&self) -> Vec<u64> {
        let mut key = vec![self.u as u64];
        key.extend(self.t.iter().map(|&x| x as u64));
        if let Some(sub) = &self.sub {
            key.push(u64::MAX); // separator
            key.extend(sub.0.state_key());
            key.push(u64::MAX);
            key.extend(sub.1.state_key());
        }
        key
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlayRound {
    pub presented: Vec<usize>,
    pub colored: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlayOutcome {
    AllColored,
    ListerWin { vertex: usize, round: usize },
    ScriptEnded { uncolored: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlayTrace {
    pub rounds: Vec<PlayRound>,
    pub outcome: PlayOutcome,
}

/// Plays a strategy against a scripted sequence of presented sets.
/// Script steps are 1-based in error messages.
pub fn play(strat: &Strategy, script: &[Vec<usize>]) -> Result<PlayTrace> {
    let n = strat.graph.n();
    let mut cursor = strat.cursor();
    let mut rounds = Vec::new();
    if let Some(v) = cursor.dead_vertex() {
        return Ok(PlayTrace { rounds, outcome: PlayOutcome::ListerWin { vertex: v, round: 0 } });
    }
    for (idx, step) in script.iter().enumerate() {
        let round = idx + 1;
        if cursor.u == 0 {
            return Err(Error::BadScriptStep {
                round,
                msg: "all vertices are already colored".into(),
            });
        }
        if step.is_empty() {
            return Err(Error::BadScriptStep { round, msg: "empty presented set".into() });
        }
        let mut s = 0u32;
        for &v in step {
            if v >= n {
                return Err(Error::BadScriptStep {
                    round,
                    msg: format!("vertex {v} out of range"),
                });
            }
            if s >> v & 1 == 1 {
                return Err(Error::BadScriptStep {
                    round,
                    msg: format!("vertex {v} listed twice"),
                });
            }
            if cursor.u >> v & 1 == 0 {
                return Err(Error::BadScriptStep {
                    round,
                    msg: format!("vertex {v} is already colored"),
                });
            }
            s |= 1 << v;
        }
        let i = cursor.respond(s)?;
        rounds.push(PlayRound { presented: bit_vertices(s), colored: bit_vertices(i) });
        if let Some(v) = cursor.dead_vertex() {
            return Ok(PlayTrace {
                rounds,
                outcome: PlayOutcome::ListerWin { vertex: v, round },
            });
        }
    }
    let outcome = if cursor.u == 0 {
        PlayOutcome::AllColored
    } else {
        PlayOutcome::ScriptEnded { uncolored: cursor.uncolored() }
    };
    Ok(PlayTrace { rounds, outcome })
}

/// Exhaustively plays every legal adversary line against the strategy,
/// failing if any line ends with an uncolored vertex out of tokens.
/// Returns the number of distinct play states examined.
pub fn audit_strategy(strat: &Strategy) -> Result<u64> {
    fn walk(cursor: &Cursor, seen: &mut HashSet<Vec<u64>>, count: &mut u64) -> Result<()> {
        if !seen.insert(cursor.state_key()) {
            return Ok(());
        }
        *count += 1;
        if cursor.u == 0 {
            return Ok(());
        }
        if let Some(v) = cursor.dead_vertex() {
            return Err(Error::StrategyMismatch(format!(
                "strategy loses: vertex {v} ran out of tokens"
            )));
        }
        let u = cursor.u;
        let mut s = u;
        loop {
            let mut child = cursor.clone();
            child.respond(s)?;
            walk(&child, seen, count)?;
            s = (s - 1) & u;
            if s == 0 {
                break;
            }
        }
        Ok(())
    }
    let mut seen = HashSet::new();
    let mut count = 0;
    walk(&strat.cursor(), &mut seen, &mut count)?;
    Ok(count)
}

/// Splices a strategy for the induced subgraph on `h_verts` together
/// with one for the rest of the graph.
///
/// The residual strategy must use exactly the outer budgets of its
/// vertices. A protected vertex v needs enough outer tokens to pay for
/// both its sub-game budget and one shielding round per neighbor
/// outside the part: f(v) >= (deg_G(v) - deg_H(v)) + f_H(v).
pub fn combine_strategies(
    g: &Graph,
    h_verts: &[usize],
    h: Strategy,
    rest: Strategy,
    f: &TokenFn,
) -> Result<Strategy> {
    f.check_len(g)?;
    if g.n() > MAX_GAME_VERTICES {
        return Err(Error::OverBudget {
            op: "combine_strategies",
            detail: format!("{} vertices exceeds the {MAX_GAME_VERTICES}-vertex limit", g.n()),
        });
    }
    let mut h_sorted = h_verts.to_vec();
    h_sorted.sort_unstable();
    let (gh, _) = g.induced(&h_sorted)?;
    let rest_verts: Vec<usize> = {
        let hm = mask_of(&h_sorted);
        (0..g.n()).filter(|&v| hm >> v & 1 == 0).collect()
    };
    let (gr, _) = g.induced(&rest_verts)?;

    let same_structure = |a: &Graph, b: &Graph| {
        a.n() == b.n() && (0..a.n()).all(|v| a.neighbors(v) == b.neighbors(v))
    };
    if !same_structure(&gh, &h.graph) {
        return Err(Error::StrategyMismatch(
            "protected-part strategy was built for a different subgraph".into(),
        ));
    }
    if !same_structure(&gr, &rest.graph) {
        return Err(Error::StrategyMismatch(
            "residual strategy was built for a different subgraph".into(),
        ));
    }
    for (i, &v) in rest_verts.iter().enumerate() {
        if rest.f.get(i) != f.get(v) {
            return Err(Error::StrategyMismatch(format!(
                "residual strategy expects {} tokens on vertex {v}, outer budget is {}",
                rest.f.get(i),
                f.get(v)
            )));
        }
    }
    for (i, &v) in h_sorted.iter().enumerate() {
        let slack = (g.degree(v) - gh.degree(i)) as u32;
        if f.get(v) < slack + h.f.get(i) {
            return Err(Error::StrategyMismatch(format!(
                "vertex {v} needs {} tokens to cover shielding plus its sub-game budget, has {}",
                slack + h.f.get(i),
                f.get(v)
            )));
        }
    }
    Ok(Strategy {
        graph: g.clone(),
        f: f.clone(),
        rule: Rule::Combined { h_verts: h_sorted, h: Box::new(h), rest: Box::new(rest) },
    })
}

/// Flattens a strategy into a position table: every reachable
/// (uncolored, tokens, presented) triple mapped to the colored reply.
///
/// Fails if two play histories reach the same visible position but the
/// strategy answers differently (possible for combined strategies with
/// hidden sub-game state), or if the table would exceed `max_entries`.
pub fn strategy_to_table(
    strat: &Strategy,
    max_entries: usize,
) -> Result<BTreeMap<String, Vec<usize>>> {
    fn walk(
        cursor: &Cursor,
        seen: &mut HashSet<Vec<u64>>,
        table: &mut BTreeMap<String, Vec<usize>>,
        max_entries: usize,
    ) -> Result<()> {
        if !seen.insert(cursor.state_key()) {
            return Ok(());
        }
        if cursor.u == 0 {
            return Ok(());
        }
        if let Some(v) = cursor.dead_vertex() {
            return Err(Error::StrategyMismatch(format!(
                "strategy loses: vertex {v} ran out of tokens"
            )));
        }
        let n = cursor.strat.graph.n();
        let u = cursor.u;
        let mut s = u;
        loop {
            let mut child = cursor.clone();
            let i = child.respond(s)?;
            let key = key_string(n, u, &cursor.t, s);
            let resp = bit_vertices(i);
            match table.get(&key) {
                Some(prev) if *prev != resp => {
                    return Err(Error::StrategyNotTabular(format!(
                        "position {key} requires different responses under different histories"
                    )));
                }
                Some(_) => {}
                None => {
                    if table.len() >= max_entries {
                        return Err(Error::StrategyNotTabular(format!(
                            "table exceeds {max_entries} entries"
                        )));
                    }
                    table.insert(key, resp);
                }
            }
            walk(&child, seen, table, max_entries)?;
            s = (s - 1) & u;
            if s == 0 {
                break;
            }
        }
        Ok(())
    }
    let mut seen = HashSet::new();
    let mut table = BTreeMap::new();
    walk(&strat.cursor(), &mut seen, &mut table, max_entries)?;
    Ok(table)
}

/// On-disk form of a tabulated strategy.
#[derive(Serialize, Deserialize)]
pub struct StrategyFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub f: Vec<u32>,
    pub table: BTreeMap<String, Vec<usize>>,
}

pub fn strategy_to_json(strat: &Strategy, max_entries: usize) -> Result<String> {
    let table = strategy_to_table(strat, max_entries)?;
    let file = StrategyFile {
        n: strat.graph.n(),
        edges: strat.graph.edges(),
        f: (0..strat.f.len()).map(|v| strat.f.get(v)).collect(),
        table,
    };
    Ok(serde_json::to_string_pretty(&file).expect("strategy file serializes"))
}

pub fn strategy_from_json(text: &str) -> Result<Strategy> {
    let file: StrategyFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: 1, msg: format!("bad strategy file: {e}") })?;
    let g = Graph::from_edges(file.n, &file.edges)?;
    Strategy::from_table(&g, &TokenFn(file.f), file.table)
}

const MAX_CHOOSE_VERTICES: usize = 7;
const MAX_CHOOSE_TOKENS: u32 = 4;

/// Decides offline list colorability: does every assignment of lists of
/// the given sizes admit a proper coloring from the lists?
///
/// List assignments are enumerated up to color renaming: a color is
/// determined by the set of vertices whose lists contain it, so the
/// adversary state is the multiset of those vertex sets, built one
/// vertex at a time with memoization. A branch dies as soon as the
/// lists placed so far are themselves uncolorable, since any extension
/// would stay uncolorable.
///
/// Budgets: at most 7 vertices and 4 tokens per vertex.
pub fn is_f_choosable(g: &Graph, f: &TokenFn) -> Result<bool> {
    f.check_len(g)?;
    if g.n() > MAX_CHOOSE_VERTICES {
        return Err(Error::OverBudget {
            op: "is_f_choosable",
            detail: format!("{} vertices exceeds the {MAX_CHOOSE_VERTICES}-vertex limit", g.n()),
        });
    }
    if (0..g.n()).any(|v| f.get(v) > MAX_CHOOSE_TOKENS) {
        return Err(Error::OverBudget {
            op: "is_f_choosable",
            detail: format!("list sizes above {MAX_CHOOSE_TOKENS} are out of budget"),
        });
    }
    if g.n() == 0 {
        return Ok(true);
    }
    if (0..g.n()).any(|v| f.get(v) == 0) {
        return Ok(false);
    }

    // colors are kept as (member-mask, multiplicity) groups
    fn colorable(g: &Graph, colors: &[u64], upto: usize, assign: &mut Vec<usize>) -> bool {
        let w = assign.len();
        if w == upto {
            return true;
        }
        for (ci, &m) in colors.iter().enumerate() {
            if m >> w & 1 == 0 {
                continue;
            }
            if (0..w).any(|x| assign[x] == ci && g.has_edge(x, w)) {
                continue;
            }
            assign.push(ci);
            if colorable(g, colors, upto, assign) {
                return true;
            }
            assign.pop();
        }
        false
    }

    fn expand(groups: &BTreeMap<u64, u32>) -> Vec<u64> {
        let mut colors = Vec::new();
        for (&m, &c) in groups {
            for _ in 0..c {
                colors.push(m);
            }
        }
        colors
    }

    struct Search<'a> {
        g: &'a Graph,
        f: &'a TokenFn,
        memo: HashMap<Vec<u64>, bool>,
    }

    impl Search<'_> {
        // true iff every way of finishing the lists stays colorable
        fn all_extensions(&mut self, v: usize, groups: &BTreeMap<u64, u32>) -> bool {
            if v == self.g.n() {
                return true;
            }
            let key: Vec<u64> = std::iter::once(v as u64)
                .chain(groups.iter().map(|(&m, &c)| m << 8 | c as u64))
                .collect();
            if let Some(&r) = self.memo.get(&key) {
                return r;
            }
            let want = self.f.get(v);
            let entries: Vec<(u64, u32)> = groups.iter().map(|(&m, &c)| (m, c)).collect();
            let mut picks: Vec<u32> = vec![0; entries.len()];
            let result = self.pick_groups(v, want, 0, &entries, &mut picks, groups);
            self.memo.insert(key, result);
            result
        }

        // choose how many colors of each existing kind enter v's list
        fn pick_groups(
            &mut self,
            v: usize,
            budget: u32,
            idx: usize,
            entries: &[(u64, u32)],
            picks: &mut Vec<u32>,
            groups: &BTreeMap<u64, u32>,
        ) -> bool {
            if idx == entries.len() {
                let fresh = budget;
                let mut next: BTreeMap<u64, u32> = BTreeMap::new();
                for (i, &(m, c)) in entries.iter().enumerate() {
                    let taken = picks[i];
                    if c > taken {
                        *next.entry(m).or_insert(0) += c - taken;
                    }
                    if taken > 0 {
                        *next.entry(m | 1 << v).or_insert(0) += taken;
                    }
                }
                if fresh > 0 {
                    *next.entry(1 << v).or_insert(0) += fresh;
                }
                let colors = expand(&next);
                let mut assign = Vec::new();
                if !colorable(self.g, &colors, v + 1, &mut assign) {
                    return false;
                }
                return self.all_extensions(v + 1, &next);
            }
            let (_, avail) = entries[idx];
            for take in 0..=avail.min(budget) {
                picks[idx] = take;
                if !self.pick_groups(v, budget - take, idx + 1, entries, picks, groups) {
                    picks[idx] = 0;
                    return false;
                }
            }
            picks[idx] = 0;
            true
        }
    }

    let mut search = Search { g, f, memo: HashMap::new() };
    Ok(search.all_extensions(0, &BTreeMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(id: &str) -> Graph {
        named_graph(id).unwrap()
    }

    /// Reference solver: no maximal-set restriction, no danger cut, the
    /// responder tries every nonempty independent subset.
    fn paint_naive(g: &Graph, f: &[u32]) -> bool {
        type Memo = HashMap<(u32, Vec<u32>), bool>;
        fn indep(adj: &[u32], s: u32) -> bool {
            bit_vertices(s).iter().all(|&v| adj[v] & s == 0)
        }
        fn solve(adj: &[u32], u: u32, t: &[u32], memo: &mut Memo) -> bool {
            if u == 0 {
                return true;
            }
            if bit_vertices(u).iter().any(|&v| t[v] == 0) {
                return false;
            }
            if let Some(&r) = memo.get(&(u, t.to_vec())) {
                return r;
            }
            let mut win = true;
            let mut s = u;
            'outer: loop {
                let mut found = false;
                let mut i = s;
                loop {
                    if i != 0 && indep(adj, i) {
                        let mut ct = t.to_vec();
                        for v in bit_vertices(s & !i) {
                            ct[v] -= 1;
                        }
                        for v in bit_vertices(i) {
                            ct[v] = 0;
                        }
                        if solve(adj, u & !i, &ct, memo) {
                            found = true;
                            break;
                        }
                    }
                    if i == 0 {
                        break;
                    }
                    i = (i - 1) & s;
                }
                if !found {
                    win = false;
                    break 'outer;
                }
                s = (s - 1) & u;
                if s == 0 {
                    break;
                }
            }
            memo.insert((u, t.to_vec()), win);
            win
        }
        let adj: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v) as u32).collect();
        let u = if g.n() == 0 { 0 } else { (1u32 << g.n()) - 1 };
        let mut memo = Memo::new();
        solve(&adj, u, f, &mut memo)
    }

    #[test]
    fn single_edge_needs_a_second_token_somewhere() {
        let k2 = g("complete 2");
        assert!(!paint(&k2, &TokenFn(vec![1, 1])).unwrap().painter_wins);
        assert!(paint(&k2, &TokenFn(vec![1, 2])).unwrap().painter_wins);
        assert!(paint(&k2, &TokenFn(vec![2, 1])).unwrap().painter_wins);
    }

    #[test]
    fn complete_graphs_lose_with_two_tokens() {
        for id in ["complete 3", "complete 4"] {
            let k = g(id);
            let f = TokenFn::uniform(k.n(), 2);
            assert!(!paint(&k, &f).unwrap().painter_wins, "{id} should be a first-player win");
        }
    }

    #[test]
    fn stable_sets_win_with_single_tokens() {
        let s = g("empty 4");
        assert!(paint(&s, &TokenFn::uniform(4, 1)).unwrap().painter_wins);
    }

    #[test]
    fn matches_the_unrestricted_reference_solver() {
        // Every labeled graph on 4 vertices, two token profiles each.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for pick in 0u32..64 {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let graph = Graph::from_edges(4, &edges).unwrap();
            for f in [vec![2, 2, 2, 2], vec![1, 2, 2, 3]] {
                let ours = paint(&graph, &TokenFn(f.clone())).unwrap().painter_wins;
                let naive = paint_naive(&graph, &f);
                assert_eq!(ours, naive, "divergence on edge mask {pick} with f={f:?}");
            }
        }
    }

    #[test]
    fn reference_agreement_on_corpus_graphs() {
        for (id, f) in [
            ("cycle 5", vec![2, 2, 2, 2, 2]),
            ("cycle 6", vec![2, 2, 2, 2, 2, 2]),
            ("path 6", vec![1, 2, 2, 2, 2, 1]),
            ("k4_minus_e", vec![2, 3, 2, 2]),
        ] {
            let graph = g(id);
            assert_eq!(
                paint(&graph, &TokenFn(f.clone())).unwrap().painter_wins,
                paint_naive(&graph, &f),
                "divergence on {id}"
            );
        }
    }

    #[test]
    fn degree_plus_one_always_suffices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::from_edges(n, &edges).unwrap();
            let f = TokenFn((0..n).map(|v| graph.degree(v) as u32 + 1).collect());
            let out = paint(&graph, &f).unwrap();
            assert!(out.painter_wins);
            // Extra tokens beyond degree+1 are truncated and change nothing.
            let fat = TokenFn((0..n).map(|v| graph.degree(v) as u32 + 7).collect());
            let out2 = paint(&graph, &fat).unwrap();
            assert!(out2.painter_wins);
            assert_eq!(out2.stats.effective_tokens, f.0);
        }
    }

    #[test]
    fn winning_is_monotone_in_tokens() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..80 {
            let n = rng.gen_range(2..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::from_edges(n, &edges).unwrap();
            let f: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
            let wins = paint(&graph, &TokenFn(f.clone())).unwrap().painter_wins;
            if wins {
                let mut more = f.clone();
                let v = rng.gen_range(0..n);
                more[v] += 1;
                assert!(
                    paint(&graph, &TokenFn(more)).unwrap().painter_wins,
                    "extra token on vertex {v} flipped a win to a loss"
                );
            }
        }
    }

    #[test]
    fn c6_square_wins_with_three_tokens_everywhere() {
        let sq = g("c6_square");
        let out = paint(&sq, &TokenFn::uniform(6, 3)).unwrap();
        assert!(out.painter_wins);
        let audit = audit_strategy(out.strategy.as_ref().unwrap()).unwrap();
        assert!(audit > 0);
    }

    #[test]
    fn extracted_strategies_survive_every_adversary() {
        for (id, f) in [
            ("complete 2", vec![1, 2]),
            ("path 4", vec![1, 2, 2, 2]),
            ("cycle 4", vec![2, 2, 2, 2]),
            ("k4_minus_e", vec![2, 3, 2, 2]),
        ] {
            let graph = g(id);
            let out = paint(&graph, &TokenFn(f.clone())).unwrap();
            assert!(out.painter_wins, "{id} with {f:?} should be a win");
            audit_strategy(out.strategy.as_ref().unwrap())
                .unwrap_or_else(|e| panic!("audit failed on {id}: {e}"));
        }
    }

    #[test]
    fn strategies_are_reproducible() {
        let graph = g("cycle 4");
        let f = TokenFn::uniform(4, 2);
        let t1 = strategy_to_table(paint(&graph, &f).unwrap().strategy.as_ref().unwrap(), 10_000)
            .unwrap();
        let t2 = strategy_to_table(paint(&graph, &f).unwrap().strategy.as_ref().unwrap(), 10_000)
            .unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn play_follows_a_script() {
        let graph = g("complete 2");
        let out = paint(&graph, &TokenFn(vec![1, 2])).unwrap();
        let strat = out.strategy.unwrap();
        // Present both: vertex 0 is on its last token, so it gets colored.
        let trace = play(&strat, &[vec![0, 1], vec![1]]).unwrap();
        assert_eq!(trace.rounds[0].colored, vec![0]);
        assert_eq!(trace.outcome, PlayOutcome::AllColored);
        let trace = play(&strat, &[vec![1]]).unwrap();
        assert_eq!(trace.rounds[0].colored, vec![1]);
        assert_eq!(trace.outcome, PlayOutcome::ScriptEnded { uncolored: vec![0] });
        // Script errors.
        assert!(matches!(
            play(&strat, &[vec![]]),
            Err(Error::BadScriptStep { round: 1, .. })
        ));
        assert!(matches!(
            play(&strat, &[vec![0, 0]]),
            Err(Error::BadScriptStep { round: 1, .. })
        ));
        assert!(matches!(
            play(&strat, &[vec![0], vec![0]]),
            Err(Error::BadScriptStep { round: 2, .. })
        ));
        assert!(matches!(
            play(&strat, &[vec![0, 1], vec![1], vec![1]]),
            Err(Error::BadScriptStep { round: 3, .. })
        ));
        assert!(matches!(
            play(&strat, &[vec![7]]),
            Err(Error::BadScriptStep { round: 1, .. })
        ));
    }

    #[test]
    fn table_round_trip_plays_identically() {
        let graph = g("path 4");
        let f = TokenFn(vec![1, 2, 2, 2]);
        let out = paint(&graph, &f).unwrap();
        let strat = out.strategy.unwrap();
        let json = strategy_to_json(&strat, 100_000).unwrap();
        let table_strat = strategy_from_json(&json).unwrap();
        audit_strategy(&table_strat).unwrap();
        let scripts: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![0], vec![3], vec![1], vec![2]],
            vec![vec![0, 1, 2, 3], vec![1, 2], vec![2]],
            vec![vec![1, 3], vec![0, 2]],
        ];
        let mut finished = 0;
        for script in &scripts {
            let a = play(&strat, script);
            let b = play(&table_strat, script);
            assert_eq!(format!("{a:?}"), format!("{b:?}"), "traces diverge on {script:?}");
            if matches!(a, Ok(PlayTrace { outcome: PlayOutcome::AllColored, .. })) {
                finished += 1;
            }
        }
        assert!(finished >= 1, "no script colored everything");
    }

    #[test]
    fn combined_strategy_wins_the_whole_path() {
        // Path v0-v1-v2-v3, protected part = the middle edge {1,2}.
        let graph = g("path 4");
        let h_out = paint(&g("complete 2"), &TokenFn(vec![1, 2])).unwrap();
        let rest_out = paint(&g("empty 2"), &TokenFn(vec![1, 1])).unwrap();
        let f = TokenFn(vec![1, 2, 3, 1]);
        let combined = combine_strategies(
            &graph,
            &[1, 2],
            h_out.strategy.unwrap(),
            rest_out.strategy.unwrap(),
            &f,
        )
        .unwrap();
        audit_strategy(&combined).unwrap();
        // Round 1 colors the stable outer pair {0, 3} and shields both
        // middle vertices; the edge sub-game then finishes {1, 2}.
        let trace = play(&combined, &[vec![0, 1, 2, 3], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(trace.rounds[0].colored, vec![0, 3]);
        assert_eq!(trace.outcome, PlayOutcome::AllColored);
    }

    #[test]
    fn combine_rejects_bad_splits() {
        let graph = g("path 4");
        let h = paint(&g("complete 2"), &TokenFn(vec![1, 2])).unwrap().strategy.unwrap();
        let rest = paint(&g("empty 2"), &TokenFn(vec![1, 1])).unwrap().strategy.unwrap();
        // Tokens on the protected part too small: vertex 2 needs 1+2.
        let err = combine_strategies(&graph, &[1, 2], h.clone(), rest.clone(), &TokenFn(vec![1, 2, 2, 1]));
        assert!(matches!(err, Err(Error::StrategyMismatch(_))));
        // Residual budget mismatch on vertex 3.
        let err = combine_strategies(&graph, &[1, 2], h.clone(), rest.clone(), &TokenFn(vec![1, 2, 3, 3]));
        assert!(matches!(err, Err(Error::StrategyMismatch(_))));
        // Wrong protected subgraph: {0, 3} is stable, not an edge.
        let err = combine_strategies(&graph, &[0, 3], h, rest, &TokenFn(vec![1, 2, 3, 1]));
        assert!(matches!(err, Err(Error::StrategyMismatch(_))));
    }

    #[test]
    fn budgets_are_enforced() {
        let big = g("cycle 12");
        assert!(matches!(
            paint(&big, &TokenFn::uniform(12, 2)),
            Err(Error::OverBudget { .. })
        ));
        let k2 = g("complete 2");
        assert!(matches!(
            paint(&k2, &TokenFn(vec![40, 40])),
            Ok(_) // truncated to degree+1, inside the token budget
        ));
        assert!(matches!(
            is_f_choosable(&g("cycle 8"), &TokenFn::uniform(8, 2)),
            Err(Error::OverBudget { .. })
        ));
        assert!(matches!(
            is_f_choosable(&k2, &TokenFn(vec![5, 5])),
            Err(Error::OverBudget { .. })
        ));
    }

    #[test]
    fn d1_game_on_the_marked_chord_graph() {
        // Diamond with its three non-apex vertices marked low.
        let graph = g("k4_minus_e");
        let out = is_d1_paintable(&graph, 0b1110).unwrap();
        assert!(out.painter_wins);
        assert_eq!(out.stats.effective_tokens, vec![2, 3, 2, 2]);
    }

    #[test]
    fn choosability_on_classic_small_cases() {
        assert!(is_f_choosable(&g("cycle 4"), &TokenFn::uniform(4, 2)).unwrap());
        assert!(is_f_choosable(&g("cycle 6"), &TokenFn::uniform(6, 2)).unwrap());
        assert!(!is_f_choosable(&g("cycle 5"), &TokenFn::uniform(5, 2)).unwrap());
        assert!(!is_f_choosable(&g("cycle 3"), &TokenFn::uniform(3, 2)).unwrap());
        assert!(is_f_choosable(&g("path 4"), &TokenFn::uniform(4, 2)).unwrap());
        // Complete bipartite 2+3 is list-colorable from 2-lists, 3+3 is not.
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_f_choosable(&k23, &TokenFn::uniform(5, 2)).unwrap());
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_f_choosable(&k33, &TokenFn::uniform(6, 2)).unwrap());
        // Mixed budgets on a triangle.
        assert!(!is_f_choosable(&g("cycle 3"), &TokenFn(vec![1, 2, 2])).unwrap());
        assert!(is_f_choosable(&g("cycle 3"), &TokenFn(vec![2, 2, 3])).unwrap());
        assert!(is_f_choosable(&g("empty 3"), &TokenFn::uniform(3, 1)).unwrap());
        assert!(!is_f_choosable(&g("complete 2"), &TokenFn(vec![0, 1])).unwrap());
    }

    /// Reference for choosability: draw every list from a shared pool of
    /// sum-of-budgets colors. Any counterexample assignment uses at most
    /// that many distinct colors, so the pool is big enough.
    fn choosable_naive(g: &Graph, f: &[u32]) -> bool {
        let pool: u32 = f.iter().sum();
        fn assign_lists(
            g: &Graph,
            f: &[u32],
            pool: u32,
            v: usize,
            lists: &mut Vec<Vec<u32>>,
        ) -> bool {
            if v == g.n() {
                return colorable_from(g, lists, 0, &mut Vec::new());
            }
            fn combos(pool: u32, k: u32, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
                if cur.len() == k as usize {
                    out.push(cur.clone());
                    return;
                }
                for c in start..pool {
                    cur.push(c);
                    combos(pool, k, c + 1, cur, out);
                    cur.pop();
                }
            }
            let mut all = Vec::new();
            combos(pool, f[v], 0, &mut Vec::new(), &mut all);
            for list in all {
                lists.push(list);
                if !assign_lists(g, f, pool, v + 1, lists) {
                    lists.pop();
                    return false;
                }
                lists.pop();
            }
            true
        }
        fn colorable_from(g: &Graph, lists: &[Vec<u32>], v: usize, chosen: &mut Vec<u32>) -> bool {
            if v == g.n() {
                return true;
            }
            for &c in &lists[v] {
                if (0..v).any(|w| chosen[w] == c && g.has_edge(w, v)) {
                    continue;
                }
                chosen.push(c);
                if colorable_from(g, lists, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        assign_lists(g, f, pool, 0, &mut Vec::new())
    }

    #[test]
    fn choosability_matches_the_pooled_reference() {
        let cases: [(&str, Vec<u32>); 6] = [
            ("cycle 3", vec![1, 2, 2]),
            ("cycle 3", vec![2, 2, 2]),
            ("cycle 4", vec![2, 2, 2, 2]),
            ("path 4", vec![1, 2, 2, 2]),
            ("complete 4", vec![2, 2, 2, 2]),
            ("k4_minus_e", vec![2, 2, 2, 2]),
        ];
        for (id, f) in cases {
            let graph = g(id);
            assert_eq!(
                is_f_choosable(&graph, &TokenFn(f.clone())).unwrap(),
                choosable_naive(&graph, &f),
                "divergence on {id} with {f:?}"
            );
        }
    }

    #[test]
    fn greedy_budgets_are_always_choosable() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..40 {
            let n = rng.gen_range(1..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::from_edges(n, &edges).unwrap();
            if (0..n).any(|v| graph.degree(v) + 1 > MAX_CHOOSE_TOKENS as usize) {
                continue;
            }
            let f = TokenFn((0..n).map(|v| graph.degree(v) as u32 + 1).collect());
            assert!(is_f_choosable(&graph, &f).unwrap());
        }
    }

    #[test]
    fn paintable_implies_choosable_on_small_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        for _ in 0..30 {
            let n = rng.gen_range(2..=5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = Graph::from_edges(n, &edges).unwrap();
            let f = TokenFn((0..n).map(|_| rng.gen_range(1..=3)).collect());
            if paint(&graph, &f).unwrap().painter_wins {
                assert!(
                    is_f_choosable(&graph, &f).unwrap(),
                    "win without choosability on {:?} f={:?}",
                    graph.edges(),
                    f.0
                );
            }
        }
    }
}

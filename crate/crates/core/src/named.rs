//! Catalog of named graphs and the fixed orientation data behind them.
//!
//! Ids come in two flavors: parametric families (`path 7`, `cycle 6`,
//! `cycle_pendant 9`) and fixed graphs (`petersen`, `elspas4`,
//! `farlinked`, ...). The three transcribed fixtures live as edge-list
//! files under `fixtures/` and are embedded at compile time; a checksum
//! test guards them against accidental edits.

use crate::error::Error;
use crate::graph::{parse_edge_list, Graph};
use crate::Result;

pub(crate) const ELSPAS4_EDGES: &str = include_str!("../fixtures/elspas4.edges");
pub(crate) const ELSPAS5_EDGES: &str = include_str!("../fixtures/elspas5.edges");
pub(crate) const BK15_EDGES: &str = include_str!("../fixtures/bk15.edges");

/// A canned orientation: vertex labels, arc list, and the low-vertex set
/// that fixes its token budgets (low vertices keep their full degree,
/// high vertices get one less).
pub(crate) struct OrientationSpec {
    pub id: &'static str,
    pub labels: &'static [&'static str],
    pub arcs: &'static [(usize, usize)],
    pub low: u64,
}

/// K4 minus an edge; degree-3 vertices u1, u2; the single high vertex
/// is u1. Even/odd circulation census 2 / 1.
pub(crate) const FIG9A: OrientationSpec = OrientationSpec {
    id: "fig9a_k4e",
    labels: &["u1", "u2", "w1", "w2"],
    arcs: &[(2, 0), (1, 2), (0, 3), (3, 1), (1, 0)],
    low: 0b1110,
};

/// K3 join E2; clique {u1, u2, u5}, stable pair {w3, w4}; low vertices
/// are u5 (in the clique) and w3 (in the stable pair). Census 4 / 3.
pub(crate) const FIG9B: OrientationSpec = OrientationSpec {
    id: "fig9b_k3ve2",
    labels: &["u1", "u2", "w3", "w4", "u5"],
    arcs: &[
        (2, 0), (2, 1), (0, 3), (3, 1), (1, 0), (0, 4), (4, 1), (4, 2), (4, 3),
    ],
    low: 0b10100,
};

/// K4 join E2; clique {u1..u4}, stable pair {w5, w6}; the low vertex is
/// u4. Census 16 / 17.
pub(crate) const FIG9C: OrientationSpec = OrientationSpec {
    id: "fig9c_k4ve2",
    labels: &["u1", "u2", "u3", "u4", "w5", "w6"],
    arcs: &[
        (0, 4), (4, 1), (4, 2), (3, 4), (0, 5), (5, 1), (5, 2), (3, 5), (0, 3),
        (3, 1), (3, 2), (2, 0), (1, 2), (1, 0),
    ],
    low: 0b001000,
};

/// K2 join C4, all vertices high. Census 30 / 28.
pub(crate) const FIG9D: OrientationSpec = OrientationSpec {
    id: "fig9d_k2vc4",
    labels: &["u1", "u2", "c3", "c4", "c5", "c6"],
    arcs: &[
        (2, 0), (2, 1), (0, 3), (3, 1), (1, 0), (4, 5), (5, 3), (4, 2), (3, 2),
        (0, 4), (1, 4), (0, 5), (5, 1),
    ],
    low: 0,
};

/// K3 join P4, all vertices high. Census 108 / 107.
pub(crate) const FIG9E: OrientationSpec = OrientationSpec {
    id: "fig9e_k3vp4",
    labels: &["u1", "u2", "u3", "p4", "p5", "p6", "p7"],
    arcs: &[
        (1, 0), (2, 0), (2, 1), (4, 5), (5, 6), (0, 3), (3, 1), (3, 2), (0, 4),
        (1, 4), (4, 2), (0, 5), (5, 1), (5, 2), (0, 6), (1, 6), (6, 2), (4, 3),
    ],
    low: 0,
};

/// K3 join (K1 + P3), all vertices high. Census 88 / 87.
pub(crate) const FIG9F: OrientationSpec = OrientationSpec {
    id: "fig9f_k3vk1p3",
    labels: &["u1", "u2", "u3", "s4", "p5", "p6", "p7"],
    arcs: &[
        (1, 0), (2, 0), (1, 2), (5, 4), (6, 5), (0, 3), (3, 1), (2, 3), (0, 4),
        (4, 1), (4, 2), (0, 5), (5, 1), (5, 2), (0, 6), (1, 6), (6, 2),
    ],
    low: 0,
};

/// K4 join four independent vertices, all high. Census 512 / 515.
pub(crate) const FIG10A: OrientationSpec = OrientationSpec {
    id: "fig10a_k4v2e2a",
    labels: &["u1", "u2", "u3", "w4", "w5", "w6", "w7", "u8"],
    arcs: &[
        (1, 0), (2, 0), (2, 1), (0, 3), (3, 1), (3, 2), (0, 4), (1, 4), (4, 2),
        (0, 5), (5, 1), (5, 2), (0, 6), (1, 6), (6, 2), (1, 7), (7, 2), (0, 7),
        (7, 3), (4, 7), (7, 5), (6, 7),
    ],
    low: 0,
};

/// Same join with one edge w4-w5 added inside the four, all high.
/// Census 751 / 750.
pub(crate) const FIG10B: OrientationSpec = OrientationSpec {
    id: "fig10b_k4v2e2b",
    labels: &["u1", "u2", "u3", "w4", "w5", "w6", "w7", "u8"],
    arcs: &[
        (1, 0), (2, 0), (2, 1), (0, 3), (3, 1), (3, 2), (0, 4), (1, 4), (4, 2),
        (0, 5), (5, 1), (2, 5), (0, 6), (1, 6), (6, 2), (1, 7), (7, 2), (0, 7),
        (7, 3), (4, 7), (5, 7), (6, 7), (3, 4),
    ],
    low: 0,
};

/// Same join with a perfect matching w4-w5, w6-w7 inside the four, all
/// high. Census 1097 / 1096.
pub(crate) const FIG10C: OrientationSpec = OrientationSpec {
    id: "fig10c_k4v2e2c",
    labels: &["u1", "u2", "u3", "w4", "w5", "w6", "w7", "u8"],
    arcs: &[
        (1, 0), (2, 0), (2, 1), (0, 3), (3, 1), (3, 2), (0, 4), (4, 1), (2, 4),
        (0, 5), (1, 5), (5, 2), (0, 6), (1, 6), (6, 2), (1, 7), (7, 2), (0, 7),
        (7, 3), (4, 7), (5, 7), (6, 7), (4, 3), (5, 6),
    ],
    low: 0,
};

/// K6 join E3, all vertices high. Census 4394 / 4393.
pub(crate) const FIG10D: OrientationSpec = OrientationSpec {
    id: "fig10d_k6ve3",
    labels: &["u1", "u2", "u3", "u4", "u5", "u6", "w7", "w8", "w9"],
    arcs: &[
        (0, 3), (0, 4), (0, 5), (8, 0), (1, 0), (1, 2), (1, 3), (1, 4), (1, 5),
        (1, 7), (2, 0), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 8), (4, 8),
        (5, 3), (5, 4), (8, 5), (0, 6), (6, 1), (6, 3), (6, 4), (6, 5), (7, 0),
        (7, 2), (7, 3), (7, 4), (5, 7), (8, 1), (8, 2),
    ],
    low: 0,
};

/// Square of C6, all vertices high. Census 22 / 16.
pub(crate) const FIG10E: OrientationSpec = OrientationSpec {
    id: "fig10e_c6",
    labels: &["v1", "v2", "v3", "v4", "v5", "v6"],
    arcs: &[
        (1, 2), (1, 0), (0, 2), (3, 0), (3, 1), (0, 4), (2, 4), (5, 1), (5, 3),
        (2, 5), (4, 5), (4, 3),
    ],
    low: 0,
};

/// Square of a 5-cycle with pendants at v2 and v4 whose pendant tips
/// shared an extra far neighbor, since deleted. All vertices high.
pub(crate) const FARLINKED: OrientationSpec = OrientationSpec {
    id: "farlinked",
    labels: &["v1", "v2", "v3", "v4", "v5", "w2", "w4"],
    arcs: &[
        (0, 1), (0, 2), (1, 5), (1, 3), (1, 4), (5, 0), (5, 6), (2, 1), (2, 5),
        (2, 6), (2, 4), (3, 0), (3, 2), (3, 4), (6, 3), (6, 4), (4, 0),
    ],
    low: 0,
};

/// Square of a 5-cycle with pendants at v2, v4, and v5; the three tips
/// are pairwise far apart. All vertices high.
pub(crate) const THREEUNLINKED: OrientationSpec = OrientationSpec {
    id: "threeunlinked",
    labels: &["v1", "v2", "v3", "v4", "v5", "w2", "w4", "w5"],
    arcs: &[
        (0, 1), (0, 5), (0, 4), (0, 7), (1, 5), (1, 2), (1, 4), (5, 2), (2, 0),
        (2, 3), (3, 0), (3, 1), (3, 6), (6, 2), (4, 2), (4, 3), (4, 6), (4, 7),
        (7, 3),
    ],
    low: 0,
};

/// Square of a 5-cycle with pendants at v2 and v5, where w5 and v3
/// shared an extra far neighbor, since deleted. All vertices high.
pub(crate) const B1B2: OrientationSpec = OrientationSpec {
    id: "b1b2",
    labels: &["v1", "v2", "v3", "v4", "v5", "w2", "w5"],
    arcs: &[
        (0, 1), (0, 5), (0, 4), (0, 6), (1, 5), (1, 3), (1, 4), (5, 2), (2, 0),
        (2, 1), (2, 6), (3, 0), (3, 2), (3, 4), (4, 2), (6, 3), (6, 4),
    ],
    low: 0,
};

pub(crate) const FIXED_ORIENTATIONS: &[&OrientationSpec] = &[
    &FIG9A, &FIG9B, &FIG9C, &FIG9D, &FIG9E, &FIG9F, &FIG10A, &FIG10B, &FIG10C,
    &FIG10D, &FIG10E, &FARLINKED, &THREEUNLINKED, &B1B2,
];

impl OrientationSpec {
    pub(crate) fn underlying(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (u, v)).collect();
        Graph::from_edges(self.labels.len(), &edges)
            .expect("canned orientation data is simple")
            .with_labels(self.labels.iter().map(|s| s.to_string()).collect())
    }
}

fn labeled(g: Graph, prefix: &str) -> Graph {
    let n = g.n();
    g.with_labels((1..=n).map(|i| format!("{prefix}{i}")).collect())
}

fn path(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(labeled(Graph::from_edges(n, &edges)?, "v"))
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OverBudget {
            op: "named_graph",
            detail: format!("cycle needs at least 3 vertices, got {n}"),
        });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(labeled(Graph::from_edges(n, &edges)?, "v"))
}

fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    Ok(labeled(Graph::from_edges(n, &edges)?, "u"))
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    Graph::from_edges(10, &edges).expect("petersen data is simple")
}

/// Five pentagons and five pentagrams; pentagon h vertex j meets
/// pentagram i vertex (h*i + j) mod 5.
fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    let mut uniq: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    uniq.sort();
    uniq.dedup();
    Graph::from_edges(50, &uniq).expect("hoffman-singleton data is simple")
}

/// The cycle-with-pendant square: an n-cycle squared, a pendant tip u
/// adjacent to v1 and to v1's cycle neighbors v2 and vn.
fn cycle_pendant_graph(n: usize) -> Result<Graph> {
    Ok(crate::circulate::cycle_pendant_orientation(n)?.underlying())
}

fn cycle_2pendant_graph(n: usize) -> Result<Graph> {
    Ok(crate::circulate::cycle_2pendant_orientation(n)?.underlying())
}

fn cycle_2pendant_edge8_graph() -> Graph {
    crate::circulate::cycle_2pendant_edge8_orientation().underlying()
}

/// K4 minus one edge: u1, u2 of degree 3; w1, w2 of degree 2.
fn k4_minus_e() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        .expect("static data")
        .with_labels(vec!["u1".into(), "u2".into(), "w1".into(), "w2".into()])
}

fn join_of(a: Graph, b: Graph) -> Graph {
    a.join(&b).expect("join of named graphs stays within 64 vertices")
}

fn stable(n: usize, prefix: &str) -> Graph {
    labeled(Graph::empty(n).expect("small"), prefix)
}

/// Resolves a graph id. Parametric families take their parameter after a
/// space or underscore: `path 7`, `cycle_6`.
pub fn named_graph(id: &str) -> Result<Graph> {
    let id = id.trim();
    match id {
        "petersen" => return Ok(petersen()),
        "hoffman_singleton" => return Ok(hoffman_singleton()),
        "elspas4" => return parse_edge_list(ELSPAS4_EDGES),
        "elspas5" => return parse_edge_list(ELSPAS5_EDGES),
        "bk15" => return parse_edge_list(BK15_EDGES),
        "farlinked" => return Ok(FARLINKED.underlying()),
        "threeunlinked" => return Ok(THREEUNLINKED.underlying()),
        "b1b2" => return Ok(B1B2.underlying()),
        "cycle_2pendant_edge8" => return Ok(cycle_2pendant_edge8_graph()),
        "k4_minus_e" => return Ok(k4_minus_e()),
        "k3_join_e2" => return Ok(join_of(complete(3)?, stable(2, "w"))),
        "k4_join_e2" => return Ok(join_of(complete(4)?, stable(2, "w"))),
        "k4_join_2e2" => return Ok(join_of(complete(4)?, stable(4, "w"))),
        "k6_join_e3" => return Ok(join_of(complete(6)?, stable(3, "w"))),
        "k2_join_c4" => return Ok(join_of(complete(2)?, cycle(4)?)),
        "k3_join_p4" => return Ok(join_of(complete(3)?, path(4)?)),
        "k3_join_k1p3" => {
            // K1 + P3: an isolated vertex beside a three-vertex path.
            let k1p3 = Graph::from_edges(4, &[(1, 2), (2, 3)])?
                .with_labels(vec!["s1".into(), "p1".into(), "p2".into(), "p3".into()]);
            return Ok(join_of(complete(3)?, k1p3));
        }
        "c6_square" => return Ok(cycle(6)?.square()),
        _ => {}
    }
    let (name, param) = split_parametric(id).ok_or_else(|| Error::UnknownGraph(id.to_string()))?;
    match name {
        "path" => path(param),
        "cycle" => cycle(param),
        "complete" => complete(param),
        "empty" => Ok(stable(param, "v")),
        "cycle_pendant" => cycle_pendant_graph(param),
        "cycle_2pendant" => cycle_2pendant_graph(param),
        _ => Err(Error::UnknownGraph(id.to_string())),
    }
}

pub(crate) fn split_parametric(id: &str) -> Option<(&str, usize)> {
    let cut = id.rfind([' ', '_'])?;
    let (name, rest) = (&id[..cut], &id[cut + 1..]);
    rest.parse::<usize>().ok().map(|p| (name, p))
}

/// Every id `named_graph` accepts, parametric families shown with `<n>`.
pub fn known_graph_ids() -> Vec<&'static str> {
    vec![
        "path <n>",
        "cycle <n>",
        "complete <n>",
        "empty <n>",
        "petersen",
        "hoffman_singleton",
        "elspas4",
        "elspas5",
        "bk15",
        "farlinked",
        "threeunlinked",
        "b1b2",
        "cycle_pendant <n>",
        "cycle_2pendant <n>",
        "cycle_2pendant_edge8",
        "k4_minus_e",
        "k3_join_e2",
        "k4_join_e2",
        "k4_join_2e2",
        "k6_join_e3",
        "k2_join_c4",
        "k3_join_p4",
        "k3_join_k1p3",
        "c6_square",
    ]
}

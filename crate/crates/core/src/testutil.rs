//! Helpers shared by unit tests. Compiled only under cfg(test).

use crate::graph::Graph;

/// Backtracking graph isomorphism for small instances. Vertices of `a`
/// are mapped in order of decreasing degree; candidates must match on
/// degree and on adjacency with everything already placed.
pub(crate) fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(da[v]));
    da = order.iter().map(|&v| a.degree(v)).collect();

    fn place(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: &mut u64,
    ) -> bool {
        let i = map.len();
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.n() {
            if *used >> w & 1 == 1 || db[w] != da[i] {
                continue;
            }
            let ok = (0..i).all(|j| a.has_edge(v, order[j]) == b.has_edge(w, map[j]));
            if !ok {
                continue;
            }
            map.push(w);
            *used |= 1 << w;
            if place(a, b, order, da, db, map, used) {
                return true;
            }
            map.pop();
            *used &= !(1 << w);
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = 0u64;
    place(a, b, &order, &da, &db, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    #[test]
    fn isomorphism_basics() {
        let c5 = named_graph("cycle 5").unwrap();
        let p5 = named_graph("path 5").unwrap();
        assert!(isomorphic(&c5, &c5));
        assert!(!isomorphic(&c5, &p5));
        // Relabeled 4-cycle.
        let c4 = named_graph("cycle 4").unwrap();
        let shuffled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(isomorphic(&c4, &shuffled));
        let k4e = named_graph("k4_minus_e").unwrap();
        let other = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(isomorphic(&k4e, &other));
    }
}

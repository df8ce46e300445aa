//! Stoer-Wagner global minimum edge cut on a dense weight matrix.

use crate::error::{Error, Result};
use crate::graph::{CubeTopology, Vertex};

/// Dense `V x V` matrix; `2^10` vertices is about 4 MiB.
pub const MINCUT_MAX_N: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    /// `true` for vertices on the side that does not contain vertex 0.
    pub side: Vec<bool>,
}

pub fn global_min_cut(topo: &CubeTopology) -> Result<MinCut> {
    if topo.dimension() > MINCUT_MAX_N {
        return Err(Error::UnsupportedScale(format!(
            "global min cut handles n <= {MINCUT_MAX_N}"
        )));
    }
    let size = topo.vertex_count();
    let mut weight = vec![0u64; size * size];
    for u in 0..size as Vertex {
        for v in topo.neighbors_unchecked(u) {
            weight[u as usize * size + v as usize] += 1;
        }
    }
    Ok(stoer_wagner(size, weight))
}

fn stoer_wagner(size: usize, mut weight: Vec<u64>) -> MinCut {
    let mut groups: Vec<Vec<usize>> = (0..size).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..size).collect();
    let mut best = u64::MAX;
    let mut best_group = Vec::new();
    let mut key = vec![0u64; size];
    let mut added = vec![false; size];

    while active.len() > 1 {
        for &v in &active {
            key[v] = 0;
            added[v] = false;
        }
        let mut prev = active[0];
        added[prev] = true;
        for &v in &active {
            key[v] += weight[prev * size + v];
        }
        for step in 1..active.len() {
            let next = active
                .iter()
                .copied()
                .filter(|&v| !added[v])
                .max_by_key(|&v| (key[v], std::cmp::Reverse(v)))
                .expect("an unadded vertex remains");
            if step == active.len() - 1 {
                if key[next] < best {
                    best = key[next];
                    best_group = groups[next].clone();
                }
                // merge `next` into `prev`
                for &v in &active {
                    let w = weight[next * size + v];
                    weight[prev * size + v] += w;
                    weight[v * size + prev] += w;
                }
                weight[prev * size + prev] = 0;
                let moved = std::mem::take(&mut groups[next]);
                groups[prev].extend(moved);
                active.retain(|&v| v != next);
                break;
            }
            added[next] = true;
            for &v in &active {
                if !added[v] {
                    key[v] += weight[next * size + v];
                }
            }
            prev = next;
        }
    }

    let mut side = vec![false; size];
    for &v in &best_group {
        side[v] = true;
    }
    if side.first() == Some(&true) {
        side.iter_mut().for_each(|s| *s = !*s);
    }
    MinCut { value: best, side }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut_edges(topo: &CubeTopology, side: &[bool]) -> u64 {
        topo.edges()
            .filter(|e| {
                let (u, v) = e.endpoints();
                side[u as usize] != side[v as usize]
            })
            .count() as u64
    }

    #[test]
    fn regular_cubes_cut_at_degree() {
        for n in 2..=7 {
            for folded in [false, true] {
                let topo = CubeTopology::new(n, folded).unwrap();
                let mc = global_min_cut(&topo).unwrap();
                assert_eq!(mc.value, u64::from(topo.degree()), "{topo}");
                assert_eq!(cut_edges(&topo, &mc.side), mc.value);
                assert!(!mc.side[0]);
                assert!(mc.side.iter().any(|&s| s));
            }
        }
    }

    #[test]
    fn weighted_reference_graph() {
        // two 4-cycles joined by weights 1 and 3: min cut 4
        let edges = [
            (0, 1, 7),
            (1, 2, 2),
            (2, 3, 8),
            (3, 0, 3),
            (4, 5, 6),
            (5, 6, 1),
            (6, 7, 5),
            (7, 4, 4),
            (1, 4, 1),
            (2, 7, 3),
        ];
        let mut weight = vec![0u64; 64];
        for (u, v, w) in edges {
            weight[u * 8 + v] = w;
            weight[v * 8 + u] = w;
        }
        let mc = stoer_wagner(8, weight);
        assert_eq!(mc.value, 4);
        assert_eq!(
            mc.side,
            vec![false, false, false, false, true, true, true, true]
        );
    }

    #[test]
    fn too_large() {
        let topo = CubeTopology::folded_hypercube(11).unwrap();
        assert!(matches!(
            global_min_cut(&topo),
            Err(Error::UnsupportedScale(_))
        ));
    }
}

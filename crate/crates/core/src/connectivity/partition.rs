//! Exact `cλ_k` as the cheapest partition of the vertices into `k` nonempty
//! blocks.
//!
//! A partition with `c` cross edges leaves at least `k` components once those
//! edges are removed, and the components of any `k`-component cut form such a
//! partition, so the two minima coincide. Blocks are not required to be
//! connected.

use serde::{Deserialize, Serialize};

use super::cut::build_cut;
use super::mincut::{global_min_cut, MINCUT_MAX_N};
use super::theorem_g_max;
use crate::error::{invalid, Error, Result};
use crate::graph::{ComponentProfile, CubeTopology, EdgeCut, Vertex};

/// Assignment of each vertex to a block in `[0, block_count)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionWitness {
    blocks: Vec<u32>,
    block_count: usize,
}

impl PartitionWitness {
    /// Rejects empty blocks and out-of-range block ids.
    pub fn new(blocks: Vec<u32>, block_count: usize) -> Result<Self> {
        let mut used = vec![false; block_count];
        for &b in &blocks {
            let slot = used
                .get_mut(b as usize)
                .ok_or_else(|| invalid(format!("block {b} >= block count {block_count}")))?;
            *slot = true;
        }
        if used.iter().any(|u| !u) {
            return Err(invalid("every block must be nonempty"));
        }
        Ok(Self {
            blocks,
            block_count,
        })
    }

    /// Relabels blocks by first occurrence in vertex order.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![u32::MAX; self.block_count];
        let mut next = 0;
        let blocks = self
            .blocks
            .iter()
            .map(|&b| {
                if relabel[b as usize] == u32::MAX {
                    relabel[b as usize] = next;
                    next += 1;
                }
                relabel[b as usize]
            })
            .collect();
        Self {
            blocks,
            block_count: self.block_count,
        }
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of(&self, v: Vertex) -> u32 {
        self.blocks[v as usize]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count];
        for &b in &self.blocks {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// Edges of `topo` whose endpoints sit in different blocks.
    pub fn cross_edges(&self, topo: &CubeTopology) -> EdgeCut {
        topo.edges()
            .filter(|e| {
                let (u, v) = e.endpoints();
                self.blocks[u as usize] != self.blocks[v as usize]
            })
            .collect()
    }

    pub fn cut_value(&self, topo: &CubeTopology) -> u64 {
        self.cross_edges(topo).len() as u64
    }

    /// Components left after deleting the cross edges.
    pub fn profile(&self, topo: &CubeTopology) -> ComponentProfile {
        topo.components_after_removal(&self.cross_edges(topo))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMethod {
    GlobalMinCut,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClambdaOutcome {
    pub n: u32,
    pub k: usize,
    /// Minimum cross-edge count; an upper bound when `exact` is false.
    pub value: u64,
    pub witness: PartitionWitness,
    pub exact: bool,
    pub nodes: u64,
    pub method: SearchMethod,
}

/// `cλ_k(FQ_n)` with an attaining partition.
///
/// `k = 2` goes through Stoer-Wagner. Larger `k` runs the partition search
/// seeded with the `(k-1)` isolated-vertex construction, so on budget
/// exhaustion the returned value is still a real cut.
pub fn exact_clambda(n: u32, k: usize, budget: u64) -> Result<ClambdaOutcome> {
    let topo = CubeTopology::folded_hypercube(n)?;
    if k < 2 || k > topo.vertex_count() {
        return Err(invalid(format!(
            "k = {k} outside [2, {}]",
            topo.vertex_count()
        )));
    }
    if n > MINCUT_MAX_N {
        return Err(Error::UnsupportedScale(format!(
            "exact oracle handles n <= {MINCUT_MAX_N}"
        )));
    }
    if k == 2 {
        let mc = global_min_cut(&topo)?;
        let blocks = mc.side.iter().map(|&s| u32::from(s)).collect();
        return Ok(ClambdaOutcome {
            n,
            k,
            value: mc.value,
            witness: PartitionWitness::new(blocks, 2)?,
            exact: true,
            nodes: topo.vertex_count() as u64 - 1,
            method: SearchMethod::GlobalMinCut,
        });
    }
    let seed = construction_seed(&topo, k)?;
    partition_search(&topo, k, budget, Some(&seed))
}

/// The partition induced by the isolated-vertex construction: `{0}, ...,
/// {k-2}` and everything else. Uses the measured components when the
/// construction applies, otherwise the blocks directly.
fn construction_seed(topo: &CubeTopology, k: usize) -> Result<PartitionWitness> {
    let n = topo.dimension();
    let g = k as u64 - 1;
    if n >= 3 && g <= theorem_g_max(n) {
        if let Ok(built) = build_cut(n, g) {
            let labels = topo.component_labels(&built.cut);
            return PartitionWitness::new(labels, k);
        }
    }
    Ok(singleton_partition(topo, k))
}

fn singleton_partition(topo: &CubeTopology, k: usize) -> PartitionWitness {
    let blocks = (0..topo.vertex_count() as u32)
        .map(|v| {
            if (v as usize) < k - 1 {
                v
            } else {
                k as u32 - 1
            }
        })
        .collect();
    PartitionWitness {
        blocks,
        block_count: k,
    }
    .canonical()
}

/// Branch and bound over canonical `k`-block partitions.
///
/// Vertices are assigned in label order and may only open the next unused
/// block, so vertex 0 is always in block 0 and each partition is visited
/// once. A state is dropped when its cross edges so far plus the lookahead
/// bound reach the incumbent: every unassigned vertex will cut at least the
/// edges to assigned neighbours outside its best block.
///
/// With `seed = None` the search starts from an infinite incumbent and is
/// fully exhaustive. `budget` counts node expansions.
pub fn partition_search(
    topo: &CubeTopology,
    k: usize,
    budget: u64,
    seed: Option<&PartitionWitness>,
) -> Result<ClambdaOutcome> {
    let size = topo.vertex_count();
    if k < 1 || k > size {
        return Err(invalid(format!("k = {k} outside [1, {size}]")));
    }
    if size > 1 << MINCUT_MAX_N {
        return Err(Error::UnsupportedScale(format!(
            "partition search handles n <= {MINCUT_MAX_N}"
        )));
    }
    if let Some(s) = seed {
        if s.block_count != k || s.blocks.len() != size {
            return Err(invalid("seed partition does not match the instance"));
        }
    }
    let fallback = seed
        .cloned()
        .unwrap_or_else(|| singleton_partition(topo, k));
    let mut search = PartitionSearch::new(topo, k, budget);
    if let Some(s) = seed {
        search.best = s.cut_value(topo);
    }
    search.descend(0, 0);
    let exact = !search.aborted;
    let (value, witness) = match search.best_blocks {
        Some(blocks) => (
            search.best,
            PartitionWitness {
                blocks,
                block_count: k,
            },
        ),
        None => {
            let value = fallback.cut_value(topo);
            (value, fallback)
        }
    };
    Ok(ClambdaOutcome {
        n: topo.dimension(),
        k,
        value,
        witness: witness.canonical(),
        exact,
        nodes: search.nodes,
        method: SearchMethod::BranchAndBound,
    })
}

const UNASSIGNED: u32 = u32::MAX;

struct PartitionSearch {
    size: usize,
    k: usize,
    degree: usize,
    /// `size * degree` neighbour table.
    adj: Vec<u32>,
    block: Vec<u32>,
    /// `size * k`: assigned neighbours of each vertex per block.
    count: Vec<u32>,
    assigned_neighbors: Vec<u32>,
    best_block_count: Vec<u32>,
    cut: u64,
    lookahead: u64,
    best: u64,
    best_blocks: Option<Vec<u32>>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl PartitionSearch {
    fn new(topo: &CubeTopology, k: usize, budget: u64) -> Self {
        let size = topo.vertex_count();
        let degree = topo.degree() as usize;
        let adj = (0..size as Vertex)
            .flat_map(|v| topo.neighbors_unchecked(v))
            .collect();
        Self {
            size,
            k,
            degree,
            adj,
            block: vec![UNASSIGNED; size],
            count: vec![0; size * k],
            assigned_neighbors: vec![0; size],
            best_block_count: vec![0; size],
            cut: 0,
            lookahead: 0,
            best: u64::MAX,
            best_blocks: None,
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn pending_cost(&self, v: usize) -> u64 {
        u64::from(self.assigned_neighbors[v] - self.best_block_count[v])
    }

    fn assign(&mut self, v: usize, b: usize) {
        self.lookahead -= self.pending_cost(v);
        self.cut += u64::from(self.assigned_neighbors[v] - self.count[v * self.k + b]);
        self.block[v] = b as u32;
        for i in 0..self.degree {
            let u = self.adj[v * self.degree + i] as usize;
            if self.block[u] != UNASSIGNED {
                continue;
            }
            let before = self.pending_cost(u);
            let c = &mut self.count[u * self.k + b];
            *c += 1;
            let c = *c;
            self.assigned_neighbors[u] += 1;
            if c > self.best_block_count[u] {
                self.best_block_count[u] = c;
            }
            self.lookahead = self.lookahead + self.pending_cost(u) - before;
        }
    }

    fn unassign(&mut self, v: usize, b: usize) {
        for i in 0..self.degree {
            let u = self.adj[v * self.degree + i] as usize;
            if self.block[u] != UNASSIGNED {
                continue;
            }
            let before = self.pending_cost(u);
            self.count[u * self.k + b] -= 1;
            self.assigned_neighbors[u] -= 1;
            let row = &self.count[u * self.k..(u + 1) * self.k];
            self.best_block_count[u] = row.iter().copied().max().unwrap_or(0);
            self.lookahead = self.lookahead + self.pending_cost(u) - before;
        }
        self.block[v] = UNASSIGNED;
        self.cut -= u64::from(self.assigned_neighbors[v] - self.count[v * self.k + b]);
        self.lookahead += self.pending_cost(v);
    }

    fn descend(&mut self, v: usize, opened: usize) {
        if v == self.size {
            if opened == self.k && self.cut < self.best {
                self.best = self.cut;
                self.best_blocks = Some(self.block.clone());
            }
            return;
        }
        if self.nodes == self.budget {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        let remaining = self.size - v;
        let missing = self.k - opened;
        if missing > remaining {
            return;
        }
        let first = if missing == remaining { opened } else { 0 };
        let last = opened.min(self.k - 1);
        let mut options: Vec<(u64, usize)> = (first..=last)
            .map(|b| {
                let here = if b < opened {
                    self.count[v * self.k + b]
                } else {
                    0
                };
                (u64::from(self.assigned_neighbors[v] - here), b)
            })
            .collect();
        options.sort_unstable();
        let rest = self.lookahead - self.pending_cost(v);
        for (cost, b) in options {
            // neighbour lookahead only grows, so this check is safe before assigning
            if self.cut + cost + rest >= self.best {
                break;
            }
            self.assign(v, b);
            if self.cut + self.lookahead < self.best {
                self.descend(v + 1, opened.max(b + 1));
            }
            self.unassign(v, b);
            if self.aborted {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalPartition {
    pub witness: PartitionWitness,
    pub profile: ComponentProfile,
}

impl OptimalPartition {
    pub fn isolated_count(&self) -> usize {
        self.profile.isolated_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalCuts {
    pub n: u32,
    pub k: usize,
    pub value: u64,
    pub optima: Vec<OptimalPartition>,
    /// Number of `k`-block partitions examined.
    pub partitions: u64,
}

/// Every `k`-block partition of `FQ_3` attaining the minimum cross-edge count.
pub fn enumerate_optimal_cuts(n: u32, k: usize) -> Result<OptimalCuts> {
    let topo = CubeTopology::folded_hypercube(n)?;
    if n != 3 {
        return Err(Error::UnsupportedScale(format!(
            "all optimal partitions are only enumerated for n = 3, got {n}"
        )));
    }
    let size = topo.vertex_count();
    if k < 1 || k > size {
        return Err(invalid(format!("k = {k} outside [1, {size}]")));
    }
    let edges: Vec<(usize, usize)> = topo
        .edges()
        .map(|e| {
            let (u, v) = e.endpoints();
            (u as usize, v as usize)
        })
        .collect();
    let mut best = u64::MAX;
    let mut optima: Vec<Vec<u32>> = Vec::new();
    let mut partitions = 0;
    let mut blocks = vec![0u32; size];
    // restricted growth strings: blocks[i] <= 1 + max(blocks[..i])
    loop {
        let used = blocks.iter().max().map_or(0, |&b| b as usize + 1);
        if used == k {
            partitions += 1;
            let value = edges
                .iter()
                .filter(|&&(u, v)| blocks[u] != blocks[v])
                .count() as u64;
            if value < best {
                best = value;
                optima.clear();
            }
            if value == best {
                optima.push(blocks.clone());
            }
        }
        if !next_growth_string(&mut blocks, k) {
            break;
        }
    }
    let optima = optima
        .into_iter()
        .map(|blocks| {
            let witness = PartitionWitness {
                blocks,
                block_count: k,
            };
            let profile = witness.profile(&topo);
            OptimalPartition { witness, profile }
        })
        .collect();
    Ok(OptimalCuts {
        n,
        k,
        value: best,
        optima,
        partitions,
    })
}

/// Advances to the next restricted growth string using at most `k` blocks.
fn next_growth_string(blocks: &mut [u32], k: usize) -> bool {
    for i in (1..blocks.len()).rev() {
        let prefix_max = blocks[..i].iter().copied().max().unwrap_or(0);
        if blocks[i] <= prefix_max && (blocks[i] as usize) + 1 < k {
            blocks[i] += 1;
            blocks[i + 1..].iter_mut().for_each(|b| *b = 0);
            return true;
        }
    }
    false
}

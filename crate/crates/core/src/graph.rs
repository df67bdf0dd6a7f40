//! Connected multigraphs with a sink, and their combinatorial companions:
//! Laplacians, connected partitions, contractions and acyclic orientations.
//!
//! Vertices are `0`-based indices `0..vertex_count`. The companion CLI crate
//! translates to the `1`-based vertex names used in input files.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Limits;

/// A connected loopless multigraph with a designated sink vertex.
///
/// The multiplicity matrix is the single source of truth: contraction and
/// degree queries are row operations, and parallel edges collapse naturally
/// because an orientation assigns one direction per vertex pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    mult: Vec<Vec<u32>>,
    sink: usize,
}

impl Multigraph {
    /// Builds a multigraph from its multiplicity matrix.
    pub fn new(mult: Vec<Vec<u32>>, sink: usize) -> Result<Self> {
        let n = mult.len();
        if n < 2 {
            return Err(Error::TooFewVertices { vertices: n });
        }
        if sink >= n {
            return Err(Error::VertexOutOfRange {
                vertex: sink,
                vertex_count: n,
            });
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAPartition);
            }
            if row[i] != 0 {
                return Err(Error::LoopEdge { vertex: i });
            }
            for j in 0..n {
                if mult[i][j] != mult[j][i] {
                    return Err(Error::AsymmetricMultiplicity { i, j });
                }
            }
            // keep degrees inside u32 so edge-count exponents stay u32
            let deg: u64 = row.iter().map(|&m| m as u64).sum();
            if deg > u32::MAX as u64 {
                return Err(Error::LoopEdge { vertex: i });
            }
        }
        let g = Multigraph { mult, sink };
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(g)
    }

    /// Builds a multigraph from weighted edges `(u, v, multiplicity)`;
    /// repeated pairs accumulate. The sink defaults to the last vertex.
    pub fn from_weighted_edges(
        vertex_count: usize,
        edges: &[(usize, usize, u32)],
    ) -> Result<Self> {
        if vertex_count < 2 {
            return Err(Error::TooFewVertices {
                vertices: vertex_count,
            });
        }
        let mut mult = vec![vec![0u32; vertex_count]; vertex_count];
        for &(u, v, m) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            mult[u][v] += m;
            mult[v][u] += m;
        }
        Multigraph::new(mult, vertex_count - 1)
    }

    /// Simple edges with multiplicity one; sink = last vertex.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Multigraph::from_weighted_edges(vertex_count, &weighted)
    }

    /// Moves the sink to another vertex.
    pub fn with_sink(mut self, sink: usize) -> Result<Self> {
        if sink >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: sink,
                vertex_count: self.vertex_count(),
            });
        }
        self.sink = sink;
        Ok(self)
    }

    /// Path 0 - 1 - ... - (k-1).
    pub fn path(k: usize) -> Self {
        let edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
        Multigraph::from_edges(k, &edges).expect("path is connected")
    }

    /// Cycle on k vertices.
    pub fn cycle(k: usize) -> Self {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Multigraph::from_edges(k, &edges).expect("cycle is connected")
    }

    /// Complete graph on k vertices.
    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                edges.push((i, j));
            }
        }
        Multigraph::from_edges(k, &edges).expect("complete graph is connected")
    }

    /// Star with center 0 and k-1 leaves.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
        Multigraph::from_edges(k, &edges).expect("star is connected")
    }

    pub fn vertex_count(&self) -> usize {
        self.mult.len()
    }

    /// Number of non-sink vertices; the ambient dimension of configurations
    /// and exponent vectors.
    pub fn non_sink_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.mult[u][v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.mult[v].iter().sum()
    }

    /// Non-sink vertices in increasing order.
    pub fn non_sink_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| v != self.sink)
    }

    /// Position of a non-sink vertex in the non-sink order.
    pub fn non_sink_position(&self, v: usize) -> usize {
        debug_assert!(v != self.sink);
        if v < self.sink {
            v
        } else {
            v - 1
        }
    }

    /// Inverse of [`Multigraph::non_sink_position`].
    pub fn non_sink_at(&self, idx: usize) -> usize {
        if idx < self.sink {
            idx
        } else {
            idx + 1
        }
    }

    /// Unordered vertex pairs `(u, v)`, `u < v`, joined by at least one
    /// edge, in lexicographic order.
    pub fn support_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.mult[u][v] > 0 {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    /// Total number of edges, with multiplicity.
    pub fn edge_count(&self) -> u64 {
        let mut total = 0u64;
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                total += self.mult[u][v] as u64;
            }
        }
        total
    }

    /// Number of edges from `v` into the vertex set selected by `mask`.
    pub fn edges_into(&self, v: usize, mask: &[bool]) -> u32 {
        self.mult[v]
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&e, _)| e)
            .sum()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if self.mult[u][v] > 0 && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Whether `vertices` induces a connected subgraph.
    pub fn induces_connected(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() {
            return false;
        }
        let mut member = vec![false; self.vertex_count()];
        for &v in vertices {
            member[v] = true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![vertices[0]];
        seen[vertices[0]] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in 0..self.vertex_count() {
                if member[v] && !seen[v] && self.mult[u][v] > 0 {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == vertices.len()
    }

    /// Graph Laplacian: degrees on the diagonal, minus multiplicities off
    /// the diagonal. Rows sum to zero.
    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut lap = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    lap[i][j] = self.degree(i) as i64;
                } else {
                    lap[i][j] = -(self.mult[i][j] as i64);
                }
            }
        }
        lap
    }

    /// Laplacian with the sink row and column deleted. Rows and columns are
    /// indexed by the non-sink order.
    pub fn reduced_laplacian(&self) -> Vec<Vec<i64>> {
        let lap = self.laplacian();
        let mut red = Vec::with_capacity(self.non_sink_count());
        for (i, row) in lap.into_iter().enumerate() {
            if i == self.sink {
                continue;
            }
            let r: Vec<i64> = row
                .into_iter()
                .enumerate()
                .filter(|&(j, _)| j != self.sink)
                .map(|(_, x)| x)
                .collect();
            red.push(r);
        }
        red
    }

    /// Number of spanning trees, as |det| of the reduced Laplacian computed
    /// fraction-free in exact integers.
    pub fn spanning_tree_count(&self) -> BigUint {
        let det = linalg::determinant(linalg::from_i64(&self.reduced_laplacian()));
        det.abs().magnitude().clone()
    }

    /// Invariant factors > 1 of the reduced Laplacian: the sandpile group
    /// as a product of cyclic groups. Their product is the spanning-tree
    /// count.
    pub fn sandpile_group(&self) -> Vec<BigUint> {
        linalg::invariant_factors(linalg::from_i64(&self.reduced_laplacian()))
            .into_iter()
            .filter(|f| *f > BigUint::one())
            .collect()
    }

    /// Contracts each block of a connected partition to a single vertex,
    /// keeping all edges between distinct blocks and dropping the internal
    /// ones. Vertex `k` of the result is block `k` in canonical order; the
    /// sink is the block containing the original sink.
    pub fn contract(&self, partition: &ConnectedPartition) -> Result<Multigraph> {
        partition.validate(self)?;
        let m = partition.block_count();
        if m < 2 {
            return Err(Error::TooFewVertices { vertices: 1 });
        }
        let assign = partition.block_assignment(self.vertex_count());
        let mut mult = vec![vec![0u32; m]; m];
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                let (bu, bv) = (assign[u], assign[v]);
                if bu != bv {
                    mult[bu][bv] += self.mult[u][v];
                    mult[bv][bu] += self.mult[u][v];
                }
            }
        }
        Multigraph::new(mult, assign[self.sink])
    }

    /// All partitions of the vertex set whose blocks induce connected
    /// subgraphs, in canonical order (blocks sorted by minimum, partitions
    /// compared lexicographically as block lists). Includes the
    /// all-singletons and the one-block partition.
    pub fn connected_partitions(&self, limits: &Limits) -> Result<Vec<ConnectedPartition>> {
        limits.check_vertices(self.vertex_count())?;
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut assign = vec![0usize; n];
        self.partition_rec(1, 1, &mut assign, &mut out);
        out.sort();
        Ok(out)
    }

    fn partition_rec(
        &self,
        v: usize,
        blocks: usize,
        assign: &mut Vec<usize>,
        out: &mut Vec<ConnectedPartition>,
    ) {
        let n = self.vertex_count();
        if v == n {
            let mut blocks_vec: Vec<Vec<usize>> = vec![Vec::new(); blocks];
            for (vertex, &b) in assign.iter().enumerate() {
                blocks_vec[b].push(vertex);
            }
            if blocks_vec.iter().all(|b| self.induces_connected(b)) {
                out.push(ConnectedPartition { blocks: blocks_vec });
            }
            return;
        }
        for b in 0..=blocks {
            assign[v] = b;
            let next_blocks = blocks.max(b + 1);
            self.partition_rec(v + 1, next_blocks, assign, out);
        }
    }

    /// Acyclic orientations of this multigraph (parallel edges share one
    /// direction). With `unique_sink_only`, keeps exactly those whose only
    /// sink is the sink vertex. Canonical order: direction bitstrings over
    /// the lexicographic pair list, low-to-high direction first.
    pub fn acyclic_orientations(
        &self,
        unique_sink_only: bool,
        limits: &Limits,
    ) -> Result<Vec<AcyclicOrientation>> {
        limits.check_vertices(self.vertex_count())?;
        let pairs = self.support_pairs();
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut bits = Vec::with_capacity(pairs.len());
        let mut out_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        self.orient_rec(&pairs, &mut bits, &mut out_adj, unique_sink_only, &mut out);
        Ok(out)
    }

    fn orient_rec(
        &self,
        pairs: &[(usize, usize)],
        bits: &mut Vec<bool>,
        out_adj: &mut Vec<Vec<usize>>,
        unique_sink_only: bool,
        out: &mut Vec<AcyclicOrientation>,
    ) {
        let k = bits.len();
        if k == pairs.len() {
            let o = AcyclicOrientation {
                vertex_count: self.vertex_count(),
                pairs: pairs.to_vec(),
                towards_high: bits.clone(),
            };
            if !unique_sink_only || o.has_unique_sink_at(self.sink) {
                out.push(o);
            }
            return;
        }
        let (u, v) = pairs[k];
        for (towards_high, tail, head) in [(false, v, u), (true, u, v)] {
            // acyclic iff the new edge closes no directed path head -> tail
            if !reaches(out_adj, head, tail) {
                out_adj[tail].push(head);
                bits.push(towards_high);
                self.orient_rec(pairs, bits, out_adj, unique_sink_only, out);
                bits.pop();
                out_adj[tail].pop();
            }
        }
    }
}

fn reaches(adj: &[Vec<usize>], from: usize, to: usize) -> bool {
    if from == to {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if v == to {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// A partition of the vertex set into blocks, each inducing a connected
/// subgraph. Blocks are sorted internally and ordered by their minimum
/// element; the derived `Ord` is the canonical partition order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ConnectedPartition {
    blocks: Vec<Vec<usize>>,
}

impl ConnectedPartition {
    /// Normalizes and validates `blocks` against `graph`.
    pub fn new(graph: &Multigraph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let p = ConnectedPartition { blocks };
        p.validate(graph)?;
        Ok(p)
    }

    /// The all-singletons partition.
    pub fn singletons(graph: &Multigraph) -> Self {
        ConnectedPartition {
            blocks: (0..graph.vertex_count()).map(|v| vec![v]).collect(),
        }
    }

    /// The two-block partition `{I, complement}`.
    pub fn two_block(graph: &Multigraph, subset: &[usize]) -> Result<Self> {
        let mut member = vec![false; graph.vertex_count()];
        for &v in subset {
            if v >= graph.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: graph.vertex_count(),
                });
            }
            member[v] = true;
        }
        let inside: Vec<usize> = (0..graph.vertex_count()).filter(|&v| member[v]).collect();
        let outside: Vec<usize> = (0..graph.vertex_count()).filter(|&v| !member[v]).collect();
        ConnectedPartition::new(graph, vec![inside, outside])
    }

    pub(crate) fn validate(&self, graph: &Multigraph) -> Result<()> {
        let n = graph.vertex_count();
        let mut seen = vec![false; n];
        for block in &self.blocks {
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if seen[v] {
                    return Err(Error::NotAPartition);
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::NotAPartition);
        }
        for block in &self.blocks {
            if !graph.induces_connected(block) {
                return Err(Error::DisconnectedBlock {
                    block: block.clone(),
                });
            }
        }
        Ok(())
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Vertex -> block index map.
    pub fn block_assignment(&self, vertex_count: usize) -> Vec<usize> {
        let mut assign = vec![usize::MAX; vertex_count];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                assign[v] = b;
            }
        }
        assign
    }

    /// Index of the block containing `v`.
    pub fn block_containing(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("vertex in some block")
    }

    /// Whether every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &ConnectedPartition, vertex_count: usize) -> bool {
        let coarse = other.block_assignment(vertex_count);
        self.blocks.iter().all(|block| {
            let b0 = coarse[block[0]];
            block.iter().all(|&v| coarse[v] == b0)
        })
    }
}

/// An acyclic orientation: one direction per unordered vertex pair with
/// positive multiplicity, all parallel edges oriented together.
///
/// When attached to a cell of the bounded complex, the vertices here are
/// block indices of the contraction; for a bare graph they are the graph's
/// own vertices (the all-singletons base).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AcyclicOrientation {
    vertex_count: usize,
    pairs: Vec<(usize, usize)>,
    towards_high: Vec<bool>,
}

impl AcyclicOrientation {
    /// Builds an orientation from explicit directed pairs `(tail, head)`
    /// covering every support pair of `graph`.
    pub fn from_directed_pairs(graph: &Multigraph, directed: &[(usize, usize)]) -> Result<Self> {
        let pairs = graph.support_pairs();
        let mut towards_high = vec![None; pairs.len()];
        for &(t, h) in directed {
            let key = (t.min(h), t.max(h));
            let Ok(idx) = pairs.binary_search(&key) else {
                return Err(Error::VertexOutOfRange {
                    vertex: t.max(h),
                    vertex_count: graph.vertex_count(),
                });
            };
            towards_high[idx] = Some(t < h);
        }
        let towards_high: Option<Vec<bool>> = towards_high.into_iter().collect();
        let Some(towards_high) = towards_high else {
            return Err(Error::NotAPartition);
        };
        let o = AcyclicOrientation {
            vertex_count: graph.vertex_count(),
            pairs,
            towards_high,
        };
        Ok(o)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Support pairs `(u, v)` with `u < v`, lexicographic.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Direction bits aligned with [`AcyclicOrientation::pairs`]; `true`
    /// orients low -> high.
    pub fn bits(&self) -> &[bool] {
        &self.towards_high
    }

    /// Whether the pair `{u, v}` is in the support and directed `u -> v`.
    pub fn orients(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        match self.pairs.binary_search(&key) {
            Ok(idx) => self.towards_high[idx] == (u < v),
            Err(_) => false,
        }
    }

    /// Directed pairs `(tail, head)`.
    pub fn directed_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .zip(&self.towards_high)
            .map(|(&(u, v), &high)| if high { (u, v) } else { (v, u) })
            .collect()
    }

    /// Out-degree of `v` counted in support pairs (not multiplicities).
    pub fn out_degree_pairs(&self, v: usize) -> usize {
        self.directed_pairs().iter().filter(|&&(t, _)| t == v).count()
    }

    /// Vertices with no outgoing pair.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.vertex_count];
        for (t, _) in self.directed_pairs() {
            has_out[t] = true;
        }
        (0..self.vertex_count).filter(|&v| !has_out[v]).collect()
    }

    /// True iff `v` is the only sink.
    pub fn has_unique_sink_at(&self, v: usize) -> bool {
        self.sinks() == [v]
    }

    /// True iff the directed graph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (t, h) in self.directed_pairs() {
            adj[t].push(h);
        }
        // Kahn peeling
        let mut indeg = vec![0usize; self.vertex_count];
        for out in &adj {
            for &h in out {
                indeg[h] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for &h in &adj[u] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    stack.push(h);
                }
            }
        }
        removed == self.vertex_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn laplacian_examples() {
        let c4 = Multigraph::cycle(4);
        assert_eq!(
            c4.laplacian(),
            vec![
                vec![2, -1, 0, -1],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![-1, 0, -1, 2],
            ]
        );
        let edge = Multigraph::path(2);
        assert_eq!(edge.laplacian(), vec![vec![1, -1], vec![-1, 1]]);
        let doubled = Multigraph::from_weighted_edges(
            4,
            &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
        )
        .unwrap();
        let lap = doubled.laplacian();
        assert_eq!(lap[0][0], 3);
        assert_eq!(lap[1][1], 3);
        assert_eq!(lap[2][2], 2);
        assert_eq!(lap[3][3], 2);
        assert_eq!(lap[0][1], -2);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        for g in [
            Multigraph::cycle(4),
            Multigraph::complete(5),
            Multigraph::star(5),
        ] {
            for row in g.laplacian() {
                assert_eq!(row.iter().sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn reduced_laplacian_examples() {
        let c4 = Multigraph::cycle(4);
        assert_eq!(
            c4.reduced_laplacian(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        let path = Multigraph::path(3);
        assert_eq!(path.reduced_laplacian(), vec![vec![1, -1], vec![-1, 2]]);
        let k4 = Multigraph::complete(4);
        assert_eq!(
            k4.reduced_laplacian(),
            vec![vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]]
        );
    }

    // Brute-force spanning tree enumeration: choose n-1 edge copies, check
    // they form a spanning tree. Independent of the determinant path.
    fn spanning_trees_brute(g: &Multigraph) -> u64 {
        let mut copies = Vec::new();
        for (u, v) in g.support_pairs() {
            for _ in 0..g.multiplicity(u, v) {
                copies.push((u, v));
            }
        }
        let need = g.vertex_count() - 1;
        let mut count = 0u64;
        let total = copies.len();
        let mut choose = vec![0usize; need];
        fn rec(
            copies: &[(usize, usize)],
            total: usize,
            choose: &mut Vec<usize>,
            pos: usize,
            start: usize,
            g: &Multigraph,
            count: &mut u64,
        ) {
            if pos == choose.len() {
                let edges: Vec<_> = choose.iter().map(|&i| copies[i]).collect();
                let sub = Multigraph::from_edges(g.vertex_count(), &edges);
                if sub.is_ok() {
                    *count += 1;
                }
                return;
            }
            for i in start..total {
                choose[pos] = i;
                rec(copies, total, choose, pos + 1, i + 1, g, count);
            }
        }
        rec(&copies, total, &mut choose, 0, 0, g, &mut count);
        count
    }

    #[test]
    fn spanning_tree_counts() {
        let c4 = Multigraph::cycle(4);
        assert_eq!(c4.spanning_tree_count(), BigUint::from(4u8));
        assert_eq!(spanning_trees_brute(&c4), 4);
        let k4 = Multigraph::complete(4);
        assert_eq!(k4.spanning_tree_count(), BigUint::from(16u8));
        assert_eq!(spanning_trees_brute(&k4), 16);
        for tree in [Multigraph::path(5), Multigraph::star(6)] {
            assert_eq!(tree.spanning_tree_count(), BigUint::from(1u8));
        }
        let doubled = Multigraph::from_weighted_edges(
            4,
            &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)],
        )
        .unwrap();
        assert_eq!(doubled.spanning_tree_count(), BigUint::from(7u8));
        assert_eq!(spanning_trees_brute(&doubled), 7);
    }

    // Independent Smith oracle: determinantal divisors. d_k = gcd of all
    // k x k minors; invariant factors are d_k / d_{k-1}.
    fn snf_by_minor_gcds(m: &[Vec<i64>]) -> Vec<BigUint> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero;
        let n = m.len();
        let mut divisors = Vec::new();
        let mut prev = BigUint::from(1u8);
        for k in 1..=n {
            let mut g = BigInt::zero();
            let rows = subsets_of_size(n, k);
            for r in &rows {
                for c in &rows {
                    let minor: Vec<Vec<BigInt>> = r
                        .iter()
                        .map(|&i| c.iter().map(|&j| BigInt::from(m[i][j])).collect())
                        .collect();
                    g = g.gcd(&crate::linalg::determinant(minor));
                }
            }
            if g.is_zero() {
                break;
            }
            let g = g.magnitude().clone();
            divisors.push(&g / &prev);
            prev = g;
        }
        divisors
    }

    fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(n, k, 0, &mut cur, &mut out);
        out
    }

    #[test]
    fn sandpile_groups() {
        let c4 = Multigraph::cycle(4);
        assert_eq!(c4.sandpile_group(), vec![BigUint::from(4u8)]);
        let oracle = snf_by_minor_gcds(&c4.reduced_laplacian());
        assert_eq!(
            oracle.into_iter().filter(|f| *f > BigUint::from(1u8)).collect::<Vec<_>>(),
            c4.sandpile_group()
        );

        let k4 = Multigraph::complete(4);
        assert_eq!(
            k4.sandpile_group(),
            vec![BigUint::from(4u8), BigUint::from(4u8)]
        );
        let oracle = snf_by_minor_gcds(&k4.reduced_laplacian());
        assert_eq!(
            oracle.into_iter().filter(|f| *f > BigUint::from(1u8)).collect::<Vec<_>>(),
            k4.sandpile_group()
        );
        let prod: BigUint = k4.sandpile_group().iter().product();
        assert_eq!(prod, k4.spanning_tree_count());

        for tree in [Multigraph::path(4), Multigraph::star(5)] {
            assert!(tree.sandpile_group().is_empty());
        }
    }

    #[test]
    fn contraction_examples() {
        let c4 = Multigraph::cycle(4);
        // {1,2}/{3}/{4} in 1-based terms
        let p = ConnectedPartition::new(&c4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let t = c4.contract(&p).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.multiplicity(0, 1), 1); // edge 23 survives
        assert_eq!(t.multiplicity(1, 2), 1); // edge 34
        assert_eq!(t.multiplicity(0, 2), 1); // edge 14
        assert_eq!(t.sink(), 2);

        let singles = ConnectedPartition::singletons(&c4);
        assert_eq!(c4.contract(&singles).unwrap(), c4);

        let p = ConnectedPartition::new(&c4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let t = c4.contract(&p).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.multiplicity(0, 1), 2); // edges 23 and 14
    }

    #[test]
    fn contraction_rejects_disconnected_block() {
        let c4 = Multigraph::cycle(4);
        let err = ConnectedPartition::new(&c4, vec![vec![0, 2], vec![1], vec![3]]);
        assert!(matches!(err, Err(Error::DisconnectedBlock { .. })));
    }

    #[test]
    fn contraction_functorial_under_coarsening() {
        let g = Multigraph::complete(5);
        let p = ConnectedPartition::new(&g, vec![vec![0, 1], vec![2], vec![3], vec![4]]).unwrap();
        let step1 = g.contract(&p).unwrap();
        // coarsen: merge blocks {0,1} and {2} (vertices 0 and 1 of step1)
        let q1 = ConnectedPartition::new(&step1, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let two_step = step1.contract(&q1).unwrap();
        let q = ConnectedPartition::new(&g, vec![vec![0, 1, 2], vec![3], vec![4]]).unwrap();
        let one_step = g.contract(&q).unwrap();
        assert_eq!(two_step, one_step);
    }

    #[test]
    fn connected_partition_counts() {
        let path = Multigraph::path(3);
        let ps = path.connected_partitions(&limits()).unwrap();
        assert_eq!(ps.len(), 4); // {1|2|3}, {12|3}, {1|23}, {123}

        // Bell(4) = 15 minus the three partitions with a disconnected block
        // ({13|2|4}, {24|1|3}, {13|24}); equals the flat count of the cycle
        // matroid, 1 + 4 + 6 + 1.
        let c4 = Multigraph::cycle(4);
        assert_eq!(c4.connected_partitions(&limits()).unwrap().len(), 12);

        let k4 = Multigraph::complete(4);
        assert_eq!(k4.connected_partitions(&limits()).unwrap().len(), 15); // Bell(4)
    }

    #[test]
    fn connected_partitions_include_extremes_in_order() {
        let c4 = Multigraph::cycle(4);
        let ps = c4.connected_partitions(&limits()).unwrap();
        assert!(ps.contains(&ConnectedPartition::singletons(&c4)));
        assert!(ps
            .iter()
            .any(|p| p.block_count() == 1));
        let mut sorted = ps.clone();
        sorted.sort();
        assert_eq!(ps, sorted);
    }

    #[test]
    fn acyclic_orientation_counts() {
        let k4 = Multigraph::complete(4);
        assert_eq!(k4.acyclic_orientations(true, &limits()).unwrap().len(), 6);
        let c4 = Multigraph::cycle(4);
        assert_eq!(c4.acyclic_orientations(true, &limits()).unwrap().len(), 3);
        let path = Multigraph::path(3);
        let os = path.acyclic_orientations(true, &limits()).unwrap();
        assert_eq!(os.len(), 1);
        assert_eq!(os[0].directed_pairs(), vec![(0, 1), (1, 2)]);
    }

    // every orientation from the enumerator is acyclic, and the unsinked
    // enumeration matches a direct 2^E filter
    #[test]
    fn orientation_enumeration_matches_filter() {
        let g = Multigraph::cycle(4);
        let all = g.acyclic_orientations(false, &limits()).unwrap();
        assert!(all.iter().all(|o| o.is_acyclic()));
        assert_eq!(all.len(), 14); // 2^4 minus the two cyclic ones
        let pairs = g.support_pairs();
        let mut brute = 0;
        for mask in 0..1u32 << pairs.len() {
            let directed: Vec<_> = pairs
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| if mask >> k & 1 == 1 { (u, v) } else { (v, u) })
                .collect();
            let o = AcyclicOrientation::from_directed_pairs(&g, &directed).unwrap();
            if o.is_acyclic() {
                brute += 1;
            }
        }
        assert_eq!(brute, all.len());
    }

    #[test]
    fn vertex_bound_is_enforced() {
        let g = Multigraph::path(5);
        let tight = Limits {
            max_vertices: 4,
            ..Limits::default()
        };
        assert!(matches!(
            g.connected_partitions(&tight),
            Err(Error::VertexBound { .. })
        ));
        assert!(matches!(
            g.acyclic_orientations(false, &tight),
            Err(Error::VertexBound { .. })
        ));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Multigraph::from_edges(4, &[(0, 1), (2, 3)]),
            Err(Error::NotConnected)
        ));
        assert!(matches!(
            Multigraph::from_edges(2, &[(0, 0)]),
            Err(Error::LoopEdge { .. })
        ));
        assert!(matches!(
            Multigraph::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(Multigraph::cycle(4).with_sink(5).is_err());
    }
}

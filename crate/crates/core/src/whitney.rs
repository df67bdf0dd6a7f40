//! Whitney numbers of the lattice of connected partitions.
//!
//! The connected partitions of a graph, ordered by refinement with the
//! all-singletons partition at the bottom, form the lattice of flats of the
//! graphical arrangement. This module computes its Möbius function directly
//! by recursion over the poset and derives from it the doubly indexed
//! Whitney numbers, the simple Whitney numbers, and the chromatic
//! polynomial.
//!
//! Convention: with `n + 1` vertices, `rank(P) = n + 1 - #blocks(P)` and
//! `χ(t) = Σ_j w_j · t^{n+1-j}`. Some sources index the chromatic sum so
//! that the exponent reads `n - j`; the convention here is the one that
//! matches deletion–contraction and brute-force coloring counts on every
//! graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Multigraph;
use crate::Limits;

/// Whitney numbers and the chromatic polynomial of the partition lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhitneyTable {
    simple: Vec<i64>,
    doubly: Vec<Vec<i64>>,
    chromatic: Vec<i64>,
}

impl WhitneyTable {
    /// Signed simple Whitney numbers `w_0 .. w_n`.
    pub fn simple(&self) -> &[i64] {
        &self.simple
    }

    /// Signed doubly indexed Whitney numbers `w_{ij}`, `0 <= i, j <= n`.
    pub fn doubly(&self, i: usize, j: usize) -> i64 {
        self.doubly[i][j]
    }

    pub fn rank(&self) -> usize {
        self.simple.len() - 1
    }

    /// Chromatic coefficients: `coefficient(d)` is the coefficient of `t^d`.
    pub fn coefficient(&self, degree: usize) -> i64 {
        self.chromatic.get(degree).copied().unwrap_or(0)
    }

    /// Evaluates the chromatic polynomial at an integer.
    pub fn chromatic_at(&self, t: i64) -> i64 {
        let mut value = 0i64;
        for (d, &c) in self.chromatic.iter().enumerate() {
            value += c * t.pow(d as u32);
        }
        value
    }
}

/// Computes the Whitney table of the lattice of connected partitions.
pub fn whitney(graph: &Multigraph, limits: &Limits) -> Result<WhitneyTable> {
    let parts = graph.connected_partitions(limits)?;
    let nv = graph.vertex_count();
    let n = nv - 1; // lattice rank
    let assigns: Vec<Vec<usize>> = parts.iter().map(|p| p.block_assignment(nv)).collect();
    let ranks: Vec<usize> = parts.iter().map(|p| nv - p.block_count()).collect();

    // process coarsenings in rank order within each upset
    let mut by_rank: Vec<usize> = (0..parts.len()).collect();
    by_rank.sort_by_key(|&i| ranks[i]);

    let mut doubly = vec![vec![0i64; n + 1]; n + 1];
    for x in 0..parts.len() {
        let upset: Vec<usize> = by_rank
            .iter()
            .copied()
            .filter(|&z| refines(&assigns[x], &assigns[z]))
            .collect();
        let mut mu = vec![0i64; upset.len()];
        for (zi, &z) in upset.iter().enumerate() {
            if z == x {
                mu[zi] = 1;
            } else {
                let mut s = 0i64;
                for (wi, &w) in upset.iter().enumerate().take(zi) {
                    if refines(&assigns[w], &assigns[z]) {
                        s += mu[wi];
                    }
                }
                // also w == z positions before zi are impossible: ranks sorted
                mu[zi] = -s;
            }
            doubly[ranks[x]][ranks[z]] += mu[zi];
        }
    }

    let simple: Vec<i64> = (0..=n).map(|j| doubly[0][j]).collect();
    let mut chromatic = vec![0i64; nv + 1];
    for (j, &w) in simple.iter().enumerate() {
        chromatic[nv - j] = w;
    }
    Ok(WhitneyTable {
        simple,
        doubly,
        chromatic,
    })
}

// a refines b: every block of a sits inside one block of b
fn refines(a: &[usize], b: &[usize]) -> bool {
    let mut image = vec![usize::MAX; a.len()];
    for v in 0..a.len() {
        let ia = a[v];
        if image[ia] == usize::MAX {
            image[ia] = b[v];
        } else if image[ia] != b[v] {
            return false;
        }
    }
    true
}

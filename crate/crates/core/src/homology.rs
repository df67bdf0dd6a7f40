//! Exact rational homology of simplicial complexes and integer chain
//! complexes. Ranks come from fraction-free integer elimination; there is
//! no floating point and no tolerance anywhere.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;

/// An abstract simplicial complex given by its maximal faces.
///
/// An empty facet list denotes the empty complex, which still carries the
/// empty face: its reduced homology is one copy of the ground field in
/// degree -1 (the (-1)-sphere convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Normalizes: sorts faces, drops duplicates and non-maximal faces.
    pub fn from_faces(vertex_count: usize, faces: Vec<Vec<usize>>) -> Self {
        let mut sorted: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        sorted.sort();
        sorted.dedup();
        let facets: Vec<Vec<usize>> = sorted
            .iter()
            .filter(|f| {
                !sorted
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        SimplicialComplex {
            vertex_count,
            facets,
        }
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void_of_vertices(&self) -> bool {
        self.facets.is_empty()
    }

    /// All nonempty faces grouped by dimension, each group sorted.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Vec<usize>>> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in &self.facets {
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| facet[i])
                    .collect();
                all.insert(face);
            }
        }
        let top = all.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); top];
        for face in all {
            let d = face.len() - 1;
            by_dim[d].push(face);
        }
        by_dim
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Reduced rational Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    /// Rank in degree -1; nonzero only for the empty complex.
    pub minus_one: usize,
    /// Ranks in degrees 0, 1, 2, ...
    pub ranks: Vec<usize>,
}

impl ReducedHomology {
    /// Acyclic over the rationals: every reduced rank vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.minus_one == 0 && self.ranks.iter().all(|&r| r == 0)
    }

    pub fn rank(&self, dim: usize) -> usize {
        self.ranks.get(dim).copied().unwrap_or(0)
    }
}

/// Reduced homology ranks of a simplicial complex over the rationals.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> ReducedHomology {
    let by_dim = complex.faces_by_dimension();
    if by_dim.is_empty() {
        return ReducedHomology {
            minus_one: 1,
            ranks: Vec::new(),
        };
    }
    let top = by_dim.len() - 1;
    // boundary_ranks[d] = rank of ∂_d : C_d -> C_{d-1}, with ∂_0 the
    // augmentation onto the empty face
    let mut boundary_ranks = vec![0usize; top + 2];
    boundary_ranks[0] = 1; // augmentation has rank 1 once a vertex exists
    for d in 1..=top {
        let rows = &by_dim[d - 1];
        let cols = &by_dim[d];
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, face) in cols.iter().enumerate() {
            for (omit, _) in face.iter().enumerate() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let i = rows.binary_search(&sub).expect("closed under faces");
                m[i][j] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        boundary_ranks[d] = linalg::rank(linalg::from_i64(&m));
    }
    let ranks = (0..=top)
        .map(|d| by_dim[d].len() - boundary_ranks[d] - boundary_ranks[d + 1])
        .collect();
    ReducedHomology {
        minus_one: 0,
        ranks,
    }
}

/// Order complex of a finite poset: vertices are the elements, faces are
/// the chains. `less` must be a strict partial order.
pub fn order_complex(elements: usize, less: impl Fn(usize, usize) -> bool) -> SimplicialComplex {
    // covers of the order
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); elements];
    for a in 0..elements {
        for b in 0..elements {
            if less(a, b) && !(0..elements).any(|c| less(a, c) && less(c, b)) {
                covers[a].push(b);
            }
        }
    }
    let minimal: Vec<usize> = (0..elements)
        .filter(|&b| !(0..elements).any(|a| less(a, b)))
        .collect();
    // maximal chains = saturated cover paths from a minimal element to a
    // maximal one
    let mut facets = Vec::new();
    let mut chain = Vec::new();
    fn dfs(v: usize, covers: &[Vec<usize>], chain: &mut Vec<usize>, facets: &mut Vec<Vec<usize>>) {
        chain.push(v);
        if covers[v].is_empty() {
            facets.push(chain.clone());
        } else {
            for &w in &covers[v] {
                dfs(w, covers, chain, facets);
            }
        }
        chain.pop();
    }
    for &m in &minimal {
        dfs(m, &covers, &mut chain, &mut facets);
    }
    SimplicialComplex::from_faces(elements, facets)
}

/// A chain complex of free abelian groups with explicit integer boundary
/// matrices. `boundaries[k]` is the map from degree `k+1` to degree `k`,
/// stored as a `dims[k] x dims[k+1]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerChainComplex {
    pub dims: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

impl IntegerChainComplex {
    /// Verifies that consecutive boundary maps compose to zero.
    pub fn verify_composition(&self) -> Result<()> {
        for k in 0..self.boundaries.len().saturating_sub(1) {
            let prod = linalg::mat_mul_i64(&self.boundaries[k], &self.boundaries[k + 1]);
            for (i, row) in prod.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        return Err(Error::BoundaryComposition {
                            degree: k + 2,
                            row: i,
                            col: j,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn boundary_rank(&self, k: usize) -> usize {
        // rank of ∂_k : C_k -> C_{k-1}
        if k == 0 || k > self.boundaries.len() {
            0
        } else {
            linalg::rank(linalg::from_i64(&self.boundaries[k - 1]))
        }
    }

    /// Rational homology ranks `dim_k - rank ∂_k - rank ∂_{k+1}` after
    /// checking the composition.
    pub fn homology_ranks(&self) -> Result<Vec<usize>> {
        self.verify_composition()?;
        Ok((0..self.dims.len())
            .map(|k| self.dims[k] - self.boundary_rank(k) - self.boundary_rank(k + 1))
            .collect())
    }

    /// Torsion coefficients of the integral homology in each degree: the
    /// invariant factors greater than one of the boundary map one degree
    /// up. The rational ranks decide every acceptance check; this is an
    /// optional extra for exploring integral structure.
    pub fn torsion(&self) -> Vec<Vec<num_bigint::BigUint>> {
        use num_traits::One;
        (0..self.dims.len())
            .map(|k| {
                if k + 1 > self.boundaries.len() || self.boundaries[k].is_empty() {
                    Vec::new()
                } else {
                    linalg::invariant_factors(linalg::from_i64(&self.boundaries[k]))
                        .into_iter()
                        .filter(|f| *f > num_bigint::BigUint::one())
                        .collect()
                }
            })
            .collect()
    }

    /// Reduced rational homology, augmenting degree 0 by the all-ones map.
    /// This is the homology of the underlying space when the complex is the
    /// polyhedral boundary complex of a nonempty regular cell complex.
    pub fn reduced_homology_ranks(&self) -> Result<ReducedHomology> {
        self.verify_composition()?;
        if self.dims.is_empty() || self.dims[0] == 0 {
            return Ok(ReducedHomology {
                minus_one: 1,
                ranks: Vec::new(),
            });
        }
        let aug_rank = 1usize;
        let mut ranks = Vec::with_capacity(self.dims.len());
        for k in 0..self.dims.len() {
            let below = if k == 0 { aug_rank } else { self.boundary_rank(k) };
            ranks.push(self.dims[k] - below - self.boundary_rank(k + 1));
        }
        Ok(ReducedHomology {
            minus_one: 1 - aug_rank,
            ranks,
        })
    }
}

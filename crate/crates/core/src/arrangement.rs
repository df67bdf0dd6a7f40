//! The bounded complex of the sliced graphical arrangement.
//!
//! Slicing the graphical arrangement of `G` with `x_sink = 0, Σ x_i = 1`
//! produces an essential affine arrangement whose bounded cells are
//! described combinatorially: a cell is a connected partition of the
//! vertex set together with an acyclic orientation of the contraction whose
//! unique sink is the block containing the sink vertex. Its dimension is
//! `#blocks - 2`.
//!
//! Cells are stored combinatorially, never as coordinate polyhedra. The
//! face order is the covector order (refinement plus sign agreement on
//! crossing edges), which is exact and cheap; geometry is derived only for
//! 0-cells (`(1/|I|) e_I`) and for interior points (vertex barycenters),
//! and is cross-checked against the combinatorics in tests.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{AcyclicOrientation, ConnectedPartition, Multigraph};
use crate::ideal::ExponentVector;
use crate::{Limits, Rational};

/// A bounded cell: connected partition plus unique-sink acyclic orientation
/// of the contraction (orientation vertices are block indices).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Cell {
    partition: ConnectedPartition,
    orientation: AcyclicOrientation,
}

impl Cell {
    /// Validates the pair against the graph: at least two blocks, the
    /// orientation lives on the contraction, is acyclic, and its unique
    /// sink is the block containing the sink vertex.
    pub fn new(
        graph: &Multigraph,
        partition: ConnectedPartition,
        orientation: AcyclicOrientation,
    ) -> Result<Self> {
        let contraction = graph.contract(&partition)?;
        if orientation.vertex_count() != contraction.vertex_count()
            || orientation.pairs() != contraction.support_pairs()
        {
            return Err(Error::NotAPartition);
        }
        if !orientation.is_acyclic() || !orientation.has_unique_sink_at(contraction.sink()) {
            return Err(Error::NotUniqueSink);
        }
        Ok(Cell {
            partition,
            orientation,
        })
    }

    pub fn partition(&self) -> &ConnectedPartition {
        &self.partition
    }

    pub fn orientation(&self) -> &AcyclicOrientation {
        &self.orientation
    }

    pub fn dimension(&self) -> usize {
        self.partition.block_count() - 2
    }
}

/// Whether `face` lies in the closure of `cell`: the cell's partition
/// refines the face's, and on every edge crossing distinct blocks of the
/// face's partition the two orientations agree. Reflexive and transitive.
pub fn face_relation(graph: &Multigraph, face: &Cell, cell: &Cell) -> bool {
    let nv = graph.vertex_count();
    if !cell.partition.refines(&face.partition, nv) {
        return false;
    }
    let coarse = face.partition.block_assignment(nv);
    let fine = cell.partition.block_assignment(nv);
    for (u, v) in graph.support_pairs() {
        if coarse[u] == coarse[v] {
            continue;
        }
        let in_face = face.orientation.orients(coarse[u], coarse[v]);
        let in_cell = cell.orientation.orients(fine[u], fine[v]);
        if in_face != in_cell {
            return false;
        }
    }
    true
}

/// Monomial label of a cell: the exponent of a non-sink vertex `i` is the
/// number of edges (with multiplicity) oriented out of `i`'s block through
/// `i`. For a 0-cell with non-sink block `I` this is `d_I(i)`, the defining
/// exponent of the generator `m_I`.
pub fn cell_label(graph: &Multigraph, cell: &Cell) -> ExponentVector {
    let assign = cell.partition.block_assignment(graph.vertex_count());
    let mut exps = vec![0u32; graph.non_sink_count()];
    for i in graph.non_sink_vertices() {
        let mut out_edges = 0u32;
        for j in 0..graph.vertex_count() {
            if j != i
                && assign[i] != assign[j]
                && cell.orientation.orients(assign[i], assign[j])
            {
                out_edges += graph.multiplicity(i, j);
            }
        }
        exps[graph.non_sink_position(i)] = out_edges;
    }
    ExponentVector::new(exps)
}

type CellKey = (Vec<Vec<usize>>, Vec<bool>);

/// The bounded complex with labels, face incidences and exact coordinates.
///
/// Cells are grouped by dimension and canonically ordered within each
/// dimension (partition order, then orientation bitstring); the resulting
/// global index is the cell id. Ids `0..f_0` are the 0-cells.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    graph: Multigraph,
    cells: Vec<Cell>,
    dimensions: Vec<usize>,
    labels: Vec<ExponentVector>,
    facets_of: Vec<Vec<usize>>,
    zero_faces: Vec<Vec<usize>>,
    coords: Vec<Vec<Rational>>,
    index: BTreeMap<CellKey, usize>,
}

/// Builds the bounded complex of the sliced arrangement of `graph`.
pub fn bounded_complex(graph: &Multigraph, limits: &Limits) -> Result<LabeledComplex> {
    limits.check_vertices(graph.vertex_count())?;
    let mut by_dim: Vec<Vec<Cell>> = vec![Vec::new(); graph.vertex_count().saturating_sub(1)];
    for partition in graph.connected_partitions(limits)? {
        if partition.block_count() < 2 {
            continue;
        }
        let contraction = graph.contract(&partition)?;
        let dim = partition.block_count() - 2;
        for orientation in contraction.acyclic_orientations(true, limits)? {
            by_dim[dim].push(Cell {
                partition: partition.clone(),
                orientation,
            });
        }
    }
    while by_dim.last().is_some_and(|cells| cells.is_empty()) {
        by_dim.pop();
    }
    let cells: Vec<Cell> = by_dim.into_iter().flatten().collect();
    Ok(LabeledComplex::assemble(graph.clone(), cells))
}

impl LabeledComplex {
    fn assemble(graph: Multigraph, cells: Vec<Cell>) -> Self {
        let dimensions: Vec<usize> = cells.iter().map(Cell::dimension).collect();
        let labels: Vec<ExponentVector> =
            cells.iter().map(|c| cell_label(&graph, c)).collect();
        let zero_count = dimensions.iter().filter(|&&d| d == 0).count();
        let mut zero_faces = vec![Vec::new(); cells.len()];
        let mut facets_of = vec![Vec::new(); cells.len()];
        for (id, cell) in cells.iter().enumerate() {
            for z in 0..zero_count {
                if face_relation(&graph, &cells[z], cell) {
                    zero_faces[id].push(z);
                }
            }
            if dimensions[id] == 0 {
                continue;
            }
            for (fid, facet) in cells.iter().enumerate() {
                if dimensions[fid] + 1 == dimensions[id] && face_relation(&graph, facet, cell) {
                    facets_of[id].push(fid);
                }
            }
        }
        let coords: Vec<Vec<Rational>> = (0..zero_count)
            .map(|z| {
                let blocks = cells[z].partition.blocks();
                let inside = if blocks[0].contains(&graph.sink()) {
                    &blocks[1]
                } else {
                    &blocks[0]
                };
                let weight = Rational::new(1, inside.len() as i64);
                let mut point = vec![Rational::zero(); graph.vertex_count()];
                for &v in inside {
                    point[v] = weight;
                }
                point
            })
            .collect();
        let index = cells
            .iter()
            .enumerate()
            .map(|(id, c)| {
                (
                    (c.partition.blocks().to_vec(), c.orientation.bits().to_vec()),
                    id,
                )
            })
            .collect();
        LabeledComplex {
            graph,
            cells,
            dimensions,
            labels,
            facets_of,
            zero_faces,
            coords,
            index,
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn dimension_of(&self, id: usize) -> usize {
        self.dimensions[id]
    }

    pub fn label(&self, id: usize) -> &ExponentVector {
        &self.labels[id]
    }

    /// Ids of the codimension-one faces of a cell.
    pub fn facets_of(&self, id: usize) -> &[usize] {
        &self.facets_of[id]
    }

    /// Ids of the 0-cells in the closure of a cell.
    pub fn zero_faces_of(&self, id: usize) -> &[usize] {
        &self.zero_faces[id]
    }

    pub fn max_dimension(&self) -> Option<usize> {
        self.dimensions.iter().copied().max()
    }

    /// Face numbers `(f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(top) = self.max_dimension() else {
            return Vec::new();
        };
        let mut f = vec![0usize; top + 1];
        for &d in &self.dimensions {
            f[d] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &fk)| if k % 2 == 0 { fk as i64 } else { -(fk as i64) })
            .sum()
    }

    /// Exact coordinate of a 0-cell, a point of the slice in `Q^{n+1}`.
    pub fn coordinates(&self, zero_cell: usize) -> &[Rational] {
        &self.coords[zero_cell]
    }

    /// The defining subset `I` (non-sink block) of a 0-cell.
    pub fn zero_cell_subset(&self, zero_cell: usize) -> &[usize] {
        let blocks = self.cells[zero_cell].partition.blocks();
        if blocks[0].contains(&self.graph.sink()) {
            &blocks[1]
        } else {
            &blocks[0]
        }
    }

    /// Barycenter of the cell's 0-cells: a relative-interior point.
    pub fn interior_point(&self, id: usize) -> Vec<Rational> {
        let zeros = &self.zero_faces[id];
        let nv = self.graph.vertex_count();
        let mut point = vec![Rational::zero(); nv];
        for &z in zeros {
            for (i, &c) in self.coords[z].iter().enumerate() {
                point[i] += c;
            }
        }
        let count = Rational::new(zeros.len() as i64, 1);
        for c in point.iter_mut() {
            *c /= count;
        }
        point
    }

    /// Looks up a cell's id by its combinatorial data.
    pub fn find_cell(&self, cell: &Cell) -> Option<usize> {
        self.index
            .get(&(
                cell.partition.blocks().to_vec(),
                cell.orientation.bits().to_vec(),
            ))
            .copied()
    }

    /// The subcomplex of cells with label dividing `sigma`. Labels are the
    /// componentwise maxima of 0-face labels, so the result is closed under
    /// faces; dangling incidences (possible only on deliberately corrupted
    /// complexes) are dropped.
    pub fn restrict(&self, sigma: &ExponentVector) -> LabeledComplex {
        let keep: Vec<usize> = (0..self.cells.len())
            .filter(|&id| self.labels[id].divides(sigma))
            .collect();
        self.subcomplex(&keep)
    }

    fn subcomplex(&self, keep: &[usize]) -> LabeledComplex {
        let mut new_id = BTreeMap::new();
        for (new, &old) in keep.iter().enumerate() {
            new_id.insert(old, new);
        }
        let cells: Vec<Cell> = keep.iter().map(|&id| self.cells[id].clone()).collect();
        let dimensions: Vec<usize> = keep.iter().map(|&id| self.dimensions[id]).collect();
        let labels: Vec<ExponentVector> = keep.iter().map(|&id| self.labels[id].clone()).collect();
        let remap = |ids: &[usize]| -> Vec<usize> {
            ids.iter().filter_map(|id| new_id.get(id).copied()).collect()
        };
        let facets_of: Vec<Vec<usize>> =
            keep.iter().map(|&id| remap(&self.facets_of[id])).collect();
        let zero_faces: Vec<Vec<usize>> =
            keep.iter().map(|&id| remap(&self.zero_faces[id])).collect();
        let coords: Vec<Vec<Rational>> = keep
            .iter()
            .filter(|&&id| self.dimensions[id] == 0)
            .map(|&id| self.coords[id].clone())
            .collect();
        let index = cells
            .iter()
            .enumerate()
            .map(|(id, c)| {
                (
                    (c.partition.blocks().to_vec(), c.orientation.bits().to_vec()),
                    id,
                )
            })
            .collect();
        LabeledComplex {
            graph: self.graph.clone(),
            cells,
            dimensions,
            labels,
            facets_of,
            zero_faces,
            coords,
            index,
        }
    }

    /// Testing hook: deliberately corrupts one label so that verification
    /// failure paths can be exercised end to end.
    pub fn override_label(&mut self, id: usize, label: ExponentVector) {
        self.labels[id] = label;
    }
}

/// Result of locating a point of the slice in the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Located {
    /// The point lies in a bounded cell.
    Bounded { cell: Cell, label: ExponentVector },
    /// The minimal cell containing the point is unbounded.
    Unbounded,
}

/// Finds the inclusion-minimal arrangement cell containing `point`, which
/// must satisfy the slice constraints (sink coordinate zero, coordinate sum
/// one). Equal coordinates along edges merge vertices into blocks; the
/// remaining edges orient by comparison. The cell is bounded exactly when
/// the orientation's unique sink is the block containing the sink vertex.
pub fn locate(graph: &Multigraph, point: &[Rational]) -> Result<Located> {
    let nv = graph.vertex_count();
    if point.len() != nv
        || !point[graph.sink()].is_zero()
        || point.iter().sum::<Rational>() != Rational::new(1, 1)
    {
        return Err(Error::PointNotInSlice);
    }
    // merge along edges with equal values
    let mut repr: Vec<usize> = (0..nv).collect();
    fn find(repr: &mut Vec<usize>, v: usize) -> usize {
        if repr[v] != v {
            let root = find(repr, repr[v]);
            repr[v] = root;
            root
        } else {
            v
        }
    }
    for (u, v) in graph.support_pairs() {
        if point[u] == point[v] {
            let (ru, rv) = (find(&mut repr, u), find(&mut repr, v));
            if ru != rv {
                repr[ru.max(rv)] = ru.min(rv);
            }
        }
    }
    let mut blocks_map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..nv {
        let r = find(&mut repr, v);
        blocks_map.entry(r).or_default().push(v);
    }
    let partition = ConnectedPartition::new(graph, blocks_map.into_values().collect())?;
    let assign = partition.block_assignment(nv);
    let contraction = graph.contract(&partition)?;
    let directed: Vec<(usize, usize)> = contraction
        .support_pairs()
        .into_iter()
        .map(|(a, b)| {
            let pa = point[partition.blocks()[a][0]];
            let pb = point[partition.blocks()[b][0]];
            debug_assert!(pa != pb);
            if pa > pb {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let orientation = AcyclicOrientation::from_directed_pairs(&contraction, &directed)?;
    debug_assert!(orientation.is_acyclic());
    if !orientation.has_unique_sink_at(assign[graph.sink()]) {
        return Ok(Located::Unbounded);
    }
    let cell = Cell {
        partition,
        orientation,
    };
    let label = cell_label(graph, &cell);
    Ok(Located::Bounded { cell, label })
}

/// The star point of a nonempty restriction: with `J` the union of the
/// supports of the restricted 0-cell labels and `K` the connected component
/// of the sink in `G - J`, the point is `(1/|I|) e_I` for `I` the complement
/// of `K`. Every point of the restriction sees it along a straight segment.
pub fn star_point(complex: &LabeledComplex, sigma: &ExponentVector) -> Result<Vec<Rational>> {
    let graph = &complex.graph;
    let zero_count = complex.f_vector().first().copied().unwrap_or(0);
    let restricted: Vec<usize> = (0..zero_count)
        .filter(|&z| complex.labels[z].divides(sigma))
        .collect();
    if restricted.is_empty() {
        return Err(Error::EmptyRestriction);
    }
    let mut in_j = vec![false; graph.vertex_count()];
    for &z in &restricted {
        for pos in complex.labels[z].support() {
            in_j[graph.non_sink_at(pos)] = true;
        }
    }
    // component of the sink avoiding J
    let mut in_k = vec![false; graph.vertex_count()];
    let mut stack = vec![graph.sink()];
    in_k[graph.sink()] = true;
    while let Some(u) = stack.pop() {
        for v in 0..graph.vertex_count() {
            if graph.multiplicity(u, v) > 0 && !in_k[v] && !in_j[v] {
                in_k[v] = true;
                stack.push(v);
            }
        }
    }
    let inside: Vec<usize> = (0..graph.vertex_count()).filter(|&v| !in_k[v]).collect();
    let weight = Rational::new(1, inside.len() as i64);
    let mut point = vec![Rational::zero(); graph.vertex_count()];
    for &v in &inside {
        point[v] = weight;
    }
    // the construction lands in the restriction
    match locate(graph, &point)? {
        Located::Bounded { label, .. } if label.divides(sigma) => Ok(point),
        _ => Err(Error::EmptyRestriction),
    }
}

/// Finite visibility certificate for the star point: for every 0-cell of
/// the restriction, the midpoint of the segment to the star point must land
/// in a bounded cell of the restriction.
pub fn check_star_visibility(complex: &LabeledComplex, sigma: &ExponentVector) -> Result<bool> {
    let q = star_point(complex, sigma)?;
    let zero_count = complex.f_vector().first().copied().unwrap_or(0);
    for z in 0..zero_count {
        if !complex.labels[z].divides(sigma) {
            continue;
        }
        let half = Rational::new(1, 2);
        let midpoint: Vec<Rational> = complex.coords[z]
            .iter()
            .zip(&q)
            .map(|(&a, &b)| (a + b) * half)
            .collect();
        match locate(&complex.graph, &midpoint)? {
            Located::Bounded { label, .. } if label.divides(sigma) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// The colabeled subcomplex dual to the parking ideal: cells whose label is
/// positive in every coordinate, carrying colabels `a + 1 - label` where
/// `a` is the non-sink degree vector. The colabels of its top-dimensional
/// cells are the generators of the Alexander dual ideal.
///
/// Both normalizations of the colabel are reported: `a + 1 - label`, the
/// one whose top-cell values are the dual generators, and the unshifted
/// `a - label` for comparison.
#[derive(Clone, Debug)]
pub struct DualComplex {
    /// Ids (into the parent complex) of the member cells.
    pub member_ids: Vec<usize>,
    /// Colabels `a + 1 - label`, aligned with `member_ids`.
    pub colabels: Vec<ExponentVector>,
    /// Unshifted colabels `a - label`, aligned with `member_ids`.
    pub unshifted_colabels: Vec<ExponentVector>,
    /// Member counts by dimension.
    pub census: Vec<usize>,
    /// Colabels of the members of maximal dimension, sorted.
    pub top_colabels: Vec<ExponentVector>,
}

/// Builds the colabeled dual subcomplex of the bounded complex.
pub fn dual_subcomplex(complex: &LabeledComplex) -> DualComplex {
    let graph = &complex.graph;
    let degree_vector: Vec<u32> = graph.non_sink_vertices().map(|v| graph.degree(v)).collect();
    let member_ids: Vec<usize> = (0..complex.cell_count())
        .filter(|&id| complex.labels[id].exponents().iter().all(|&e| e > 0))
        .collect();
    let colabel_with = |id: usize, shift: u32| -> ExponentVector {
        ExponentVector::new(
            complex.labels[id]
                .exponents()
                .iter()
                .zip(&degree_vector)
                .map(|(&l, &a)| a + shift - l)
                .collect(),
        )
    };
    let colabels: Vec<ExponentVector> =
        member_ids.iter().map(|&id| colabel_with(id, 1)).collect();
    let unshifted_colabels: Vec<ExponentVector> =
        member_ids.iter().map(|&id| colabel_with(id, 0)).collect();
    let top = member_ids
        .iter()
        .map(|&id| complex.dimensions[id])
        .max()
        .unwrap_or(0);
    let mut census = vec![0usize; top + 1];
    for &id in &member_ids {
        census[complex.dimensions[id]] += 1;
    }
    let mut top_colabels: Vec<ExponentVector> = member_ids
        .iter()
        .zip(&colabels)
        .filter(|(&id, _)| complex.dimensions[id] == top)
        .map(|(_, c)| c.clone())
        .collect();
    top_colabels.sort();
    DualComplex {
        member_ids,
        colabels,
        unshifted_colabels,
        census,
        top_colabels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{alexander_dual, parking_ideal};

    fn limits() -> Limits {
        Limits::default()
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn f_vectors() {
        let c4 = bounded_complex(&Multigraph::cycle(4), &limits()).unwrap();
        assert_eq!(c4.f_vector(), vec![6, 8, 3]);
        let k4 = bounded_complex(&Multigraph::complete(4), &limits()).unwrap();
        assert_eq!(k4.f_vector(), vec![7, 12, 6]);
        let path = bounded_complex(&Multigraph::path(3), &limits()).unwrap();
        assert_eq!(path.f_vector(), vec![2, 1]);
    }

    #[test]
    fn zero_cells_carry_the_minimal_generators() {
        for g in [
            Multigraph::cycle(4),
            Multigraph::complete(4),
            Multigraph::path(4),
            Multigraph::star(5),
        ] {
            let x = bounded_complex(&g, &limits()).unwrap();
            let f0 = x.f_vector()[0];
            let mut labels: Vec<ExponentVector> =
                (0..f0).map(|z| x.label(z).clone()).collect();
            labels.sort();
            let gens = parking_ideal(&g).generators().to_vec();
            assert_eq!(labels, gens);
        }
    }

    #[test]
    fn labels_are_maxima_of_zero_face_labels() {
        for g in [Multigraph::cycle(4), Multigraph::complete(4)] {
            let x = bounded_complex(&g, &limits()).unwrap();
            for id in 0..x.cell_count() {
                let zeros = x.zero_faces_of(id);
                assert!(!zeros.is_empty());
                let join = zeros
                    .iter()
                    .map(|&z| x.label(z).clone())
                    .reduce(|a, b| a.lcm(&b))
                    .unwrap();
                assert_eq!(&join, x.label(id), "cell {id}");
                // and a polytope of dimension d has at least d+1 vertices
                assert!(zeros.len() > x.dimension_of(id));
            }
        }
    }

    #[test]
    fn proper_faces_have_strictly_smaller_labels() {
        for g in [Multigraph::cycle(4), Multigraph::complete(4)] {
            let x = bounded_complex(&g, &limits()).unwrap();
            for id in 0..x.cell_count() {
                for &f in x.facets_of(id) {
                    assert!(x.label(f).divides(x.label(id)));
                    assert_ne!(x.label(f), x.label(id));
                }
            }
        }
    }

    #[test]
    fn c4_one_cell_face_example() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        // the 1-cell ({1,2}|{3}|{4}, A->B->C, A->C): blocks 0-based
        let p = ConnectedPartition::new(&g, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let contraction = g.contract(&p).unwrap();
        let o = AcyclicOrientation::from_directed_pairs(&contraction, &[(0, 1), (1, 2), (0, 2)])
            .unwrap();
        let cell = Cell::new(&g, p, o).unwrap();
        let id = x.find_cell(&cell).unwrap();
        assert_eq!(x.dimension_of(id), 1);
        assert_eq!(x.label(id), &ev(&[1, 1, 1]));
        // 0-faces: v_{1,2} and v_{1,2,3}, not v_{1}
        let zeros: Vec<Vec<usize>> = x
            .zero_faces_of(id)
            .iter()
            .map(|&z| x.zero_cell_subset(z).to_vec())
            .collect();
        assert!(zeros.contains(&vec![0, 1]));
        assert!(zeros.contains(&vec![0, 1, 2]));
        assert_eq!(zeros.len(), 2);

        // reflexivity of the face order
        assert!(face_relation(&g, &cell, &cell));
    }

    #[test]
    fn two_cell_label_from_out_degrees() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        // 2-cell with orientation 1->2->3->4, 1->4 on the singleton base
        let o = AcyclicOrientation::from_directed_pairs(&g, &[(0, 1), (1, 2), (2, 3), (0, 3)])
            .unwrap();
        let cell = Cell::new(&g, ConnectedPartition::singletons(&g), o).unwrap();
        let id = x.find_cell(&cell).unwrap();
        assert_eq!(x.dimension_of(id), 2);
        assert_eq!(x.label(id), &ev(&[2, 1, 1]));
    }

    #[test]
    fn face_relation_is_transitive() {
        for g in [Multigraph::cycle(4), Multigraph::complete(4)] {
            let x = bounded_complex(&g, &limits()).unwrap();
            let n = x.cell_count();
            for a in 0..n {
                for b in 0..n {
                    if !face_relation(&g, x.cell(a), x.cell(b)) {
                        continue;
                    }
                    for c in 0..n {
                        if face_relation(&g, x.cell(b), x.cell(c)) {
                            assert!(
                                face_relation(&g, x.cell(a), x.cell(c)),
                                "({a}, {b}, {c})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zero_cell_coordinates_are_normalized_indicators() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        for z in 0..x.f_vector()[0] {
            let subset = x.zero_cell_subset(z).to_vec();
            let share = rat(1, subset.len() as i64);
            for (v, &c) in x.coordinates(z).iter().enumerate() {
                if subset.contains(&v) {
                    assert_eq!(c, share);
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn locate_examples() {
        let g = Multigraph::cycle(4);
        // star point of Fig-4 type: (1/3, 1/3, 1/3, 0) is v_{1,2,3}
        let p = vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(0, 1)];
        match locate(&g, &p).unwrap() {
            Located::Bounded { cell, label } => {
                assert_eq!(cell.partition().blocks(), &[vec![0, 1, 2], vec![3]]);
                assert_eq!(label, ev(&[1, 0, 1]));
            }
            Located::Unbounded => panic!("star point is bounded"),
        }
        // (1, 0, 0, 0) is the 0-cell v_{1}
        let p = vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        match locate(&g, &p).unwrap() {
            Located::Bounded { cell, label } => {
                assert_eq!(cell.partition().blocks(), &[vec![0], vec![1, 2, 3]]);
                assert_eq!(label, ev(&[2, 0, 0]));
            }
            Located::Unbounded => panic!("e_1 is a 0-cell"),
        }
        // even (0, 1, 0, 0): vertices 1 and 3 merge into the sink block
        // through the zero-valued edges, leaving v_{2}
        let p = vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)];
        match locate(&g, &p).unwrap() {
            Located::Bounded { cell, label } => {
                assert_eq!(cell.partition().blocks(), &[vec![0, 2, 3], vec![1]]);
                assert_eq!(label, ev(&[0, 2, 0]));
            }
            Located::Unbounded => panic!("e_2 is a 0-cell"),
        }
        // a second sink away from the sink vertex: unbounded
        let p = vec![rat(3, 5), rat(-1, 5), rat(3, 5), rat(0, 1)];
        assert_eq!(locate(&g, &p).unwrap(), Located::Unbounded);
        // unique sink at the wrong vertex: unbounded
        let p = vec![rat(3, 4), rat(3, 4), rat(-1, 2), rat(0, 1)];
        assert_eq!(locate(&g, &p).unwrap(), Located::Unbounded);
        // slice violations are rejected
        assert!(matches!(
            locate(&g, &[rat(1, 2), rat(1, 2), rat(0, 1), rat(1, 2)]),
            Err(Error::PointNotInSlice)
        ));
        assert!(matches!(
            locate(&g, &[rat(1, 2), rat(1, 4), rat(0, 1), rat(0, 1)]),
            Err(Error::PointNotInSlice)
        ));
    }

    #[test]
    fn interior_points_locate_back_to_their_cells() {
        for g in [Multigraph::cycle(4), Multigraph::complete(4), Multigraph::path(4)] {
            let x = bounded_complex(&g, &limits()).unwrap();
            for id in 0..x.cell_count() {
                let p = x.interior_point(id);
                match locate(&g, &p).unwrap() {
                    Located::Bounded { cell, label } => {
                        assert_eq!(x.find_cell(&cell), Some(id), "barycenter of cell {id}");
                        assert_eq!(&label, x.label(id));
                    }
                    Located::Unbounded => panic!("interior point of a bounded cell"),
                }
            }
        }
    }

    #[test]
    fn restriction_census_running_example() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        let r = x.restrict(&ev(&[1, 1, 2]));
        assert_eq!(r.f_vector(), vec![4, 4, 1]);
        let mut zero_labels: Vec<ExponentVector> =
            (0..4).map(|z| r.label(z).clone()).collect();
        zero_labels.sort();
        assert_eq!(
            zero_labels,
            vec![ev(&[0, 0, 2]), ev(&[0, 1, 1]), ev(&[1, 0, 1]), ev(&[1, 1, 0])]
        );
        let top = (0..r.cell_count()).find(|&id| r.dimension_of(id) == 2).unwrap();
        assert_eq!(r.label(top), &ev(&[1, 1, 2]));

        // the full label join restricts to the whole complex
        let all = x
            .restrict(&(0..x.cell_count()).map(|id| x.label(id).clone()).reduce(|a, b| a.lcm(&b)).unwrap());
        assert_eq!(all.f_vector(), x.f_vector());
        // σ = 0 leaves nothing
        assert_eq!(x.restrict(&ExponentVector::zero(3)).cell_count(), 0);
    }

    #[test]
    fn star_point_examples() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        let q = star_point(&x, &ev(&[1, 1, 2])).unwrap();
        assert_eq!(q, vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(0, 1)]);
        assert!(check_star_visibility(&x, &ev(&[1, 1, 2])).unwrap());

        // σ = join of all labels supports everything: I = all non-sink
        let max = (0..x.cell_count())
            .map(|id| x.label(id).clone())
            .reduce(|a, b| a.lcm(&b))
            .unwrap();
        let q = star_point(&x, &max).unwrap();
        assert_eq!(q, vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(0, 1)]);

        let path = Multigraph::path(3);
        let xp = bounded_complex(&path, &limits()).unwrap();
        let q = star_point(&xp, &ev(&[1, 1])).unwrap();
        assert_eq!(q, vec![rat(1, 2), rat(1, 2), rat(0, 1)]);

        assert!(matches!(
            star_point(&x, &ExponentVector::zero(3)),
            Err(Error::EmptyRestriction)
        ));
    }

    #[test]
    fn dual_subcomplex_running_example() {
        let g = Multigraph::cycle(4);
        let x = bounded_complex(&g, &limits()).unwrap();
        let dual = dual_subcomplex(&x);
        assert_eq!(dual.census, vec![0, 2, 3]); // two 1-cells, three 2-cells
        assert_eq!(
            dual.top_colabels,
            vec![ev(&[1, 2, 2]), ev(&[2, 1, 2]), ev(&[2, 2, 1])]
        );
        let m = parking_ideal(&g);
        let alex = alexander_dual(&m, &ev(&[2, 2, 2])).unwrap();
        assert_eq!(dual.top_colabels, alex.generators());

        // path: a = (1, 2), single top cell with label (1,1), colabel (1,2)
        let path = Multigraph::path(3);
        let xp = bounded_complex(&path, &limits()).unwrap();
        let dual = dual_subcomplex(&xp);
        assert_eq!(dual.census, vec![0, 1]);
        assert_eq!(dual.top_colabels, vec![ev(&[1, 2])]);
    }

    #[test]
    fn euler_characteristic_is_one() {
        for g in [
            Multigraph::cycle(4),
            Multigraph::complete(4),
            Multigraph::path(5),
            Multigraph::star(5),
        ] {
            let x = bounded_complex(&g, &limits()).unwrap();
            assert_eq!(x.euler_characteristic(), 1);
        }
    }

    #[test]
    fn cell_count_identity_with_contraction_orientations() {
        // f_{k-1} = Σ over connected partitions with k+1 blocks of the
        // number of unique-sink acyclic orientations of the contraction
        for g in [Multigraph::cycle(4), Multigraph::complete(4)] {
            let x = bounded_complex(&g, &limits()).unwrap();
            let f = x.f_vector();
            let parts = g.connected_partitions(&limits()).unwrap();
            for (d, &fd) in f.iter().enumerate() {
                let blocks = d + 2;
                let mut total = 0;
                for p in parts.iter().filter(|p| p.block_count() == blocks) {
                    total += g
                        .contract(p)
                        .unwrap()
                        .acyclic_orientations(true, &limits())
                        .unwrap()
                        .len();
                }
                assert_eq!(fd, total);
            }
        }
    }
}

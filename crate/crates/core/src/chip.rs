//! Chip-firing dynamics: configurations, stabilization, parking functions,
//! recurrent configurations and the orientation bijection.
//!
//! A configuration places chips on the non-sink vertices (indexed in the
//! non-sink order of the graph). Firing an unstable vertex subtracts the
//! corresponding column of the reduced Laplacian; chips sent to the sink
//! disappear.
//!
//! Parking functions are decided by the subset test itself: `c` is parking
//! iff every nonempty set `I` of non-sink vertices contains a vertex with
//! fewer chips than its out-degree `d_I`. This is the defining condition,
//! used directly (with witness pruning) rather than through a burning-style
//! shortcut. Recurrence is likewise decided through the equivalence
//! "`c` is recurrent iff `c_ω - c` is parking", where `c_ω` places
//! `degree - 1` chips everywhere; the reachability-style definition of
//! recurrence is not directly decidable and is not used.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{AcyclicOrientation, Multigraph};
use crate::ideal::ExponentVector;
use crate::Limits;

/// Chips on the non-sink vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Configuration(Vec<u64>);

impl Configuration {
    pub fn new(chips: Vec<u64>) -> Self {
        Configuration(chips)
    }

    pub fn zero(n: usize) -> Self {
        Configuration(vec![0; n])
    }

    pub fn chips(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Stable: every non-sink vertex carries fewer chips than its degree.
    pub fn is_stable(&self, graph: &Multigraph) -> bool {
        graph
            .non_sink_vertices()
            .all(|v| self.0[graph.non_sink_position(v)] < graph.degree(v) as u64)
    }

    /// Componentwise order. Returns `true` if `self <= other` everywhere.
    pub fn leq(&self, other: &Configuration) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// View as an exponent vector (entries must fit; parking functions do).
    pub fn to_exponents(&self) -> ExponentVector {
        ExponentVector::new(self.0.iter().map(|&c| c as u32).collect())
    }

    fn check_len(&self, graph: &Multigraph) -> Result<()> {
        if self.0.len() != graph.non_sink_count() {
            return Err(Error::ConfigurationLength {
                got: self.0.len(),
                expected: graph.non_sink_count(),
            });
        }
        Ok(())
    }
}

/// Fires the unstable non-sink vertex `v`: subtracts column `v` of the
/// reduced Laplacian. Firing a stable vertex or the sink is rejected.
pub fn fire(graph: &Multigraph, config: &Configuration, v: usize) -> Result<Configuration> {
    config.check_len(graph)?;
    if v == graph.sink() {
        return Err(Error::SinkVertex);
    }
    if v >= graph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: graph.vertex_count(),
        });
    }
    let pos = graph.non_sink_position(v);
    let deg = graph.degree(v) as u64;
    if config.0[pos] < deg {
        return Err(Error::StableVertex { vertex: v });
    }
    let mut chips = config.0.clone();
    chips[pos] -= deg;
    for u in graph.non_sink_vertices() {
        if u != v {
            chips[graph.non_sink_position(u)] += graph.multiplicity(u, v) as u64;
        }
    }
    Ok(Configuration(chips))
}

/// Vertex-selection policy during stabilization. The abelian property says
/// the result never depends on the choice; tests exercise both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiringPolicy {
    /// Always fire the unstable vertex of least index.
    LeastIndex,
    /// Always fire an unstable vertex carrying the most chips.
    GreedyMax,
}

/// Stabilizes a configuration, returning the stable result and how many
/// times each non-sink vertex fired.
pub fn stabilize(graph: &Multigraph, config: &Configuration) -> Result<(Configuration, Vec<u64>)> {
    stabilize_with(graph, config, FiringPolicy::LeastIndex)
}

/// Stabilization with an explicit firing policy.
pub fn stabilize_with(
    graph: &Multigraph,
    config: &Configuration,
    policy: FiringPolicy,
) -> Result<(Configuration, Vec<u64>)> {
    config.check_len(graph)?;
    let n = graph.non_sink_count();
    let mut chips = config.0.clone();
    let mut fire_counts = vec![0u64; n];
    loop {
        let mut chosen: Option<(usize, u64)> = None;
        for v in graph.non_sink_vertices() {
            let pos = graph.non_sink_position(v);
            let deg = graph.degree(v) as u64;
            if chips[pos] >= deg {
                match policy {
                    FiringPolicy::LeastIndex => {
                        chosen = Some((v, chips[pos]));
                        break;
                    }
                    FiringPolicy::GreedyMax => {
                        if chosen.is_none_or(|(_, best)| chips[pos] > best) {
                            chosen = Some((v, chips[pos]));
                        }
                    }
                }
            }
        }
        let Some((v, _)) = chosen else {
            return Ok((Configuration(chips), fire_counts));
        };
        let pos = graph.non_sink_position(v);
        chips[pos] -= graph.degree(v) as u64;
        for u in graph.non_sink_vertices() {
            if u != v {
                chips[graph.non_sink_position(u)] += graph.multiplicity(u, v) as u64;
            }
        }
        fire_counts[pos] += 1;
    }
}

/// The subset test: for every nonempty `I` of non-sink vertices, some
/// `i ∈ I` must satisfy `c_i < d_I(i)`.
pub fn is_parking(graph: &Multigraph, config: &Configuration) -> bool {
    if config.0.len() != graph.non_sink_count() {
        return false;
    }
    let n = graph.non_sink_count();
    // singleton bound first: c_i < degree(i)
    for v in graph.non_sink_vertices() {
        if config.0[graph.non_sink_position(v)] >= graph.degree(v) as u64 {
            return false;
        }
    }
    let mut mask = vec![false; graph.vertex_count()];
    'subsets: for bits in 1u64..(1u64 << n) {
        if bits.count_ones() < 2 {
            continue;
        }
        for idx in 0..n {
            mask[graph.non_sink_at(idx)] = bits >> idx & 1 == 1;
        }
        for idx in 0..n {
            if bits >> idx & 1 == 0 {
                continue;
            }
            let v = graph.non_sink_at(idx);
            let d_i = graph.degree(v) - graph.edges_into(v, &mask);
            if config.0[idx] < d_i as u64 {
                continue 'subsets; // witness found, next subset
            }
        }
        return false;
    }
    true
}

/// All parking functions, in lexicographic order. Their number equals the
/// spanning-tree count.
pub fn parking_functions(graph: &Multigraph, limits: &Limits) -> Result<Vec<Configuration>> {
    limits.check_vertices(graph.vertex_count())?;
    let n = graph.non_sink_count();
    let mut out = Vec::new();
    let mut chips = vec![0u64; n];
    backtrack_parking(graph, 0, &mut chips, &mut out);
    Ok(out)
}

fn backtrack_parking(
    graph: &Multigraph,
    pos: usize,
    chips: &mut Vec<u64>,
    out: &mut Vec<Configuration>,
) {
    let n = graph.non_sink_count();
    if pos == n {
        out.push(Configuration(chips.clone()));
        return;
    }
    let v = graph.non_sink_at(pos);
    let deg = graph.degree(v) as u64;
    'values: for value in 0..deg {
        chips[pos] = value;
        // every subset of the assigned prefix containing `pos` must keep a
        // witness; a fully violated subset can never recover
        let mut mask = vec![false; graph.vertex_count()];
        for bits in 0u64..(1u64 << pos) {
            let set = bits | (1 << pos);
            for idx in 0..=pos {
                mask[graph.non_sink_at(idx)] = set >> idx & 1 == 1;
            }
            let mut witness = false;
            for idx in 0..=pos {
                if set >> idx & 1 == 0 {
                    continue;
                }
                let u = graph.non_sink_at(idx);
                let d_u = graph.degree(u) - graph.edges_into(u, &mask);
                if chips[idx] < d_u as u64 {
                    witness = true;
                    break;
                }
            }
            if !witness {
                continue 'values;
            }
        }
        backtrack_parking(graph, pos + 1, chips, out);
    }
    chips[pos] = 0;
}

/// Componentwise-maximal parking functions. Their number equals the number
/// of acyclic orientations with the sink as unique sink.
pub fn maximal_parking_functions(
    graph: &Multigraph,
    limits: &Limits,
) -> Result<Vec<Configuration>> {
    let all = parking_functions(graph, limits)?;
    Ok(all
        .iter()
        .filter(|c| {
            !all.iter()
                .any(|d| *c != d && c.leq(d))
        })
        .cloned()
        .collect())
}

/// The maximally stable configuration: `degree(i) - 1` chips everywhere.
pub fn canonical_config(graph: &Multigraph) -> Configuration {
    Configuration(
        graph
            .non_sink_vertices()
            .map(|v| graph.degree(v) as u64 - 1)
            .collect(),
    )
}

/// A stable configuration `c` is recurrent iff `c_ω - c` is parking.
pub fn is_recurrent(graph: &Multigraph, config: &Configuration) -> Result<bool> {
    config.check_len(graph)?;
    if !config.is_stable(graph) {
        return Err(Error::UnstableConfiguration);
    }
    let omega = canonical_config(graph);
    let diff = Configuration(
        omega
            .0
            .iter()
            .zip(&config.0)
            .map(|(&w, &c)| w - c)
            .collect(),
    );
    Ok(is_parking(graph, &diff))
}

/// Candidate statistics for reading a configuration off an orientation.
/// Only one of them makes the orientation map a bijection onto the maximal
/// parking functions on every graph; [`resolve_orientation_reading`]
/// determines which, and [`orientation_config`] uses it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationReading {
    /// Chips at `i` = number of edges oriented into `i`.
    InDegree,
    /// Chips at `i` = number of edges oriented out of `i`.
    OutDegree,
    /// Chips at `i` = number of edges oriented out of `i`, minus one.
    OutDegreeMinusOne,
}

/// Configuration read off an acyclic orientation with the sink as unique
/// sink, under an explicit reading. Edge multiplicities count.
pub fn orientation_config_with(
    graph: &Multigraph,
    orientation: &AcyclicOrientation,
    reading: OrientationReading,
) -> Result<Configuration> {
    if orientation.vertex_count() != graph.vertex_count() {
        return Err(Error::ConfigurationLength {
            got: orientation.vertex_count(),
            expected: graph.vertex_count(),
        });
    }
    if !orientation.has_unique_sink_at(graph.sink()) || !orientation.is_acyclic() {
        return Err(Error::NotUniqueSink);
    }
    let mut chips = Vec::with_capacity(graph.non_sink_count());
    for v in graph.non_sink_vertices() {
        let mut out_edges = 0u64;
        let mut in_edges = 0u64;
        for u in 0..graph.vertex_count() {
            if u == v || graph.multiplicity(u, v) == 0 {
                continue;
            }
            if orientation.orients(v, u) {
                out_edges += graph.multiplicity(u, v) as u64;
            } else {
                in_edges += graph.multiplicity(u, v) as u64;
            }
        }
        chips.push(match reading {
            OrientationReading::InDegree => in_edges,
            OrientationReading::OutDegree => out_edges,
            OrientationReading::OutDegreeMinusOne => out_edges - 1,
        });
    }
    Ok(Configuration(chips))
}

/// Configuration of a unique-sink acyclic orientation, under the reading
/// that the bijection test singles out (out-degree minus one).
pub fn orientation_config(
    graph: &Multigraph,
    orientation: &AcyclicOrientation,
) -> Result<Configuration> {
    orientation_config_with(graph, orientation, OrientationReading::OutDegreeMinusOne)
}

/// Which readings make the orientation map injective with image exactly the
/// maximal parking functions, on this graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReadingResolution {
    pub in_degree: bool,
    pub out_degree: bool,
    pub out_degree_minus_one: bool,
}

/// Runs the empirical bijection test for all three candidate readings.
pub fn resolve_orientation_reading(
    graph: &Multigraph,
    limits: &Limits,
) -> Result<ReadingResolution> {
    let orientations = graph.acyclic_orientations(true, limits)?;
    let mut maximal = maximal_parking_functions(graph, limits)?;
    maximal.sort();
    let test = |reading: OrientationReading| -> Result<bool> {
        let mut image = Vec::with_capacity(orientations.len());
        for o in &orientations {
            image.push(orientation_config_with(graph, o, reading)?);
        }
        image.sort();
        let injective = image.windows(2).all(|w| w[0] != w[1]);
        Ok(injective && image == maximal)
    };
    Ok(ReadingResolution {
        in_degree: test(OrientationReading::InDegree)?,
        out_degree: test(OrientationReading::OutDegree)?,
        out_degree_minus_one: test(OrientationReading::OutDegreeMinusOne)?,
    })
}

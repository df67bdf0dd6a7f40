//! Monomial algebra on exponent vectors: the parking ideal of a graph,
//! standard monomials, lcm lattices, Alexander duality, and the upper
//! Koszul Betti-number oracle.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::homology::{reduced_homology_ranks, SimplicialComplex};
use crate::resolution::BettiTable;
use crate::Limits;

/// A monomial as its exponent vector. Derived comparisons are the
/// lexicographic (canonical) order; divisibility is [`ExponentVector::divides`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Componentwise order: `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Componentwise difference, if nonnegative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if other.divides(self) {
            Some(ExponentVector(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }
}

/// Renders an exponent vector as a monomial, e.g. `x1^2*x3`; the unit is `1`.
pub fn render_monomial(ev: &ExponentVector) -> String {
    let mut out = String::new();
    for (i, &e) in ev.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if e == 1 {
            let _ = write!(out, "x{}", i + 1);
        } else {
            let _ = write!(out, "x{}^{}", i + 1, e);
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// A monomial ideal, stored as the divisibility antichain of its minimal
/// generators in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes: drops duplicates and generators divisible by others.
    pub fn new(ambient: usize, generators: Vec<ExponentVector>) -> Self {
        let mut gens: Vec<ExponentVector> = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<ExponentVector> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| *h != **g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal {
            ambient,
            generators: minimal,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Whether `x^u` lies in the ideal.
    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(u))
    }

    /// Pure-power exponents per variable, or which variable lacks one.
    pub fn artinian_powers(&self) -> Result<Vec<u32>> {
        let mut powers = vec![None; self.ambient];
        for g in &self.generators {
            let mut supp = g.support();
            if let (Some(i), None) = (supp.next(), supp.next()) {
                let e = g.get(i);
                powers[i] = Some(powers[i].map_or(e, |p: u32| p.min(e)));
            }
        }
        powers
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or(Error::NotArtinian { variable: i }))
            .collect()
    }
}

/// The monomial `m_I` of a nonempty set `I` of non-sink vertices: the
/// exponent of `i ∈ I` is the number of edges from `i` out of `I`.
pub fn generator_for_subset(graph: &Multigraph, subset: &[usize]) -> Result<ExponentVector> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut mask = vec![false; graph.vertex_count()];
    for &v in subset {
        if v >= graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: graph.vertex_count(),
            });
        }
        if v == graph.sink() {
            return Err(Error::SubsetContainsSink);
        }
        mask[v] = true;
    }
    let mut exps = vec![0u32; graph.non_sink_count()];
    for &v in subset {
        let d = graph.degree(v) - graph.edges_into(v, &mask);
        exps[graph.non_sink_position(v)] = d;
    }
    Ok(ExponentVector(exps))
}

/// One subset monomial of the parking ideal with its minimality status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetMonomial {
    /// The defining set `I` of non-sink vertices.
    pub subset: Vec<usize>,
    pub exponents: ExponentVector,
    pub minimal: bool,
    /// For a non-minimal monomial, why it is redundant.
    pub reason: Option<NonMinimalReason>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonMinimalReason {
    /// The induced subgraph on `I` is disconnected.
    SubsetDisconnected,
    /// The induced subgraph on the complement of `I` is disconnected.
    ComplementDisconnected,
}

/// All `2^n - 1` subset monomials with their minimality classification.
/// `m_I` is minimal exactly when both `I` and its complement (which keeps
/// the sink) induce connected subgraphs.
pub fn subset_monomial_census(graph: &Multigraph, limits: &Limits) -> Result<Vec<SubsetMonomial>> {
    limits.check_vertices(graph.vertex_count())?;
    let n = graph.non_sink_count();
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for bits in 1u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| graph.non_sink_at(i))
            .collect();
        let complement: Vec<usize> = (0..graph.vertex_count())
            .filter(|&v| !subset.contains(&v))
            .collect();
        let reason = if !graph.induces_connected(&subset) {
            Some(NonMinimalReason::SubsetDisconnected)
        } else if !graph.induces_connected(&complement) {
            Some(NonMinimalReason::ComplementDisconnected)
        } else {
            None
        };
        out.push(SubsetMonomial {
            exponents: generator_for_subset(graph, &subset)?,
            subset,
            minimal: reason.is_none(),
            reason,
        });
    }
    Ok(out)
}

/// The parking ideal of the graph: generated by the `m_I` over subsets `I`
/// with both sides connected. These are exactly the minimal generators.
pub fn parking_ideal(graph: &Multigraph) -> MonomialIdeal {
    let n = graph.non_sink_count();
    let mut gens = Vec::new();
    for bits in 1u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| graph.non_sink_at(i))
            .collect();
        if !graph.induces_connected(&subset) {
            continue;
        }
        let complement: Vec<usize> = (0..graph.vertex_count())
            .filter(|&v| !subset.contains(&v))
            .collect();
        if !graph.induces_connected(&complement) {
            continue;
        }
        gens.push(generator_for_subset(graph, &subset).expect("valid subset"));
    }
    MonomialIdeal::new(n, gens)
}

/// The vertex-toppling binomial pairs `(x_i^{deg i}, Π_j x_j^{mult(i,j)})`,
/// one per non-sink vertex, written in all `n+1` variables. They generate
/// the Laplacian lattice; no claim of a Gröbner or full ideal basis.
pub fn toppling_pairs(graph: &Multigraph) -> Vec<(ExponentVector, ExponentVector)> {
    let nv = graph.vertex_count();
    graph
        .non_sink_vertices()
        .map(|i| {
            let mut head = vec![0u32; nv];
            head[i] = graph.degree(i);
            let mut tail = vec![0u32; nv];
            for (j, t) in tail.iter_mut().enumerate() {
                if j != i {
                    *t = graph.multiplicity(i, j);
                }
            }
            (ExponentVector(head), ExponentVector(tail))
        })
        .collect()
}

/// All monomials outside an artinian ideal, in lexicographic order.
pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let powers = ideal.artinian_powers()?;
    let mut out = Vec::new();
    let mut current = vec![0u32; ideal.ambient()];
    fn rec(
        ideal: &MonomialIdeal,
        powers: &[u32],
        pos: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        if pos == powers.len() {
            let ev = ExponentVector(current.clone());
            if !ideal.contains(&ev) {
                out.push(ev);
            }
            return;
        }
        for e in 0..powers[pos] {
            current[pos] = e;
            rec(ideal, powers, pos + 1, current, out);
        }
        current[pos] = 0;
    }
    rec(ideal, &powers, 0, &mut current, &mut out);
    Ok(out)
}

/// Componentwise-maximal standard monomials.
pub fn maximal_standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let all = standard_monomials(ideal)?;
    Ok(all
        .iter()
        .filter(|u| !all.iter().any(|v| *v != **u && u.divides(v)))
        .cloned()
        .collect())
}

/// The Alexander dual with respect to `a` of an ideal generated in degrees
/// dividing `x^a`: inside the box `[0, a]`, `x^u` lies in the dual exactly
/// when `x^{a-u}` lies outside the ideal, so the dual is generated by
/// `a - u` over the componentwise-maximal `u ≤ a` outside the ideal.
/// Dualizing twice with the same `a` gives back the ideal.
///
/// For an artinian ideal with generators dividing `x^a` the maximal `u` are
/// the maximal standard monomials; the box form is what makes the
/// involution work, since the dual of an artinian ideal has no pure powers.
pub fn alexander_dual(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<MonomialIdeal> {
    for (k, g) in ideal.generators().iter().enumerate() {
        if !g.divides(a) {
            return Err(Error::GeneratorExceedsDualBound { generator: k });
        }
    }
    let outside = box_monomials_outside(ideal, a);
    let gens = outside
        .iter()
        .filter(|u| !outside.iter().any(|v| *v != **u && u.divides(v)))
        .map(|u| a.checked_sub(u).expect("box monomials precede a"))
        .collect();
    Ok(MonomialIdeal::new(ideal.ambient(), gens))
}

// all u <= a with x^u outside the ideal
fn box_monomials_outside(ideal: &MonomialIdeal, a: &ExponentVector) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; ideal.ambient()];
    fn rec(
        ideal: &MonomialIdeal,
        a: &ExponentVector,
        pos: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        if pos == a.len() {
            let ev = ExponentVector(current.clone());
            if !ideal.contains(&ev) {
                out.push(ev);
            }
            return;
        }
        for e in 0..=a.get(pos) {
            current[pos] = e;
            rec(ideal, a, pos + 1, current, out);
        }
        current[pos] = 0;
    }
    rec(ideal, a, 0, &mut current, &mut out);
    out
}

/// The lcm lattice: joins of nonempty sets of generators, deduplicated and
/// sorted by total degree, then lexicographically.
pub fn lcm_lattice(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<ExponentVector>> {
    limits.check_generators(ideal.generators().len())?;
    let mut closed: BTreeSet<ExponentVector> = ideal.generators().iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        for a in &closed {
            for g in ideal.generators() {
                let join = a.lcm(g);
                if !closed.contains(&join) {
                    fresh.push(join);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        closed.extend(fresh);
    }
    let mut out: Vec<ExponentVector> = closed.into_iter().collect();
    out.sort_by_key(|ev| (ev.total_degree(), ev.clone()));
    Ok(out)
}

/// Independent Betti-number oracle via upper Koszul simplicial complexes:
/// for each `σ` in the lcm lattice, `β_{i,σ}` is the reduced rank of
/// `K^σ = {τ ⊆ [n] squarefree : x^{σ-τ} ∈ ideal}` in dimension `i - 2`,
/// computed in exact rational arithmetic. `β_1` counts minimal generators.
pub fn betti_oracle(ideal: &MonomialIdeal, limits: &Limits) -> Result<BettiTable> {
    limits.check_generators(ideal.generators().len())?;
    let n = ideal.ambient();
    limits.check_vertices(n)?;
    let mut table = BettiTable::new(n);
    for sigma in lcm_lattice(ideal, limits)? {
        let mut faces = Vec::new();
        for bits in 1u64..(1u64 << n) {
            let tau = ExponentVector(
                (0..n).map(|i| (bits >> i & 1) as u32).collect(),
            );
            let Some(rest) = sigma.checked_sub(&tau) else {
                continue;
            };
            if ideal.contains(&rest) {
                faces.push(tau.support().collect());
            }
        }
        // σ is in the lcm lattice, so the empty face (x^σ itself) is
        // always present; the complex can still have no vertices.
        let complex = SimplicialComplex::from_faces(n, faces);
        let h = reduced_homology_ranks(&complex);
        if h.minus_one > 0 {
            table.add(1, sigma.clone(), h.minus_one);
        }
        for (d, &r) in h.ranks.iter().enumerate() {
            if r > 0 {
                table.add(d + 2, sigma.clone(), r);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn subset_generator_examples() {
        let c4 = Multigraph::cycle(4);
        assert_eq!(generator_for_subset(&c4, &[0, 2]).unwrap(), ev(&[2, 0, 2]));
        assert_eq!(generator_for_subset(&c4, &[0]).unwrap(), ev(&[2, 0, 0]));
        let path = Multigraph::path(3);
        assert_eq!(generator_for_subset(&path, &[0, 1]).unwrap(), ev(&[0, 1]));
        assert!(matches!(
            generator_for_subset(&c4, &[]),
            Err(Error::EmptySubset)
        ));
        assert!(matches!(
            generator_for_subset(&c4, &[3]),
            Err(Error::SubsetContainsSink)
        ));
    }

    #[test]
    fn toppling_pair_examples() {
        let c4 = Multigraph::cycle(4);
        let pairs = toppling_pairs(&c4);
        assert_eq!(pairs[0], (ev(&[2, 0, 0, 0]), ev(&[0, 1, 0, 1]))); // x1^2 - x2x4
        assert_eq!(pairs[2], (ev(&[0, 0, 2, 0]), ev(&[0, 1, 0, 1]))); // x3^2 - x2x4
        let path = Multigraph::path(3);
        let pairs = toppling_pairs(&path);
        assert_eq!(pairs[1], (ev(&[0, 2, 0]), ev(&[1, 0, 1]))); // x2^2 - x1x3
    }

    #[test]
    fn parking_ideal_examples() {
        let c4 = Multigraph::cycle(4);
        let m = parking_ideal(&c4);
        let expected = [
            ev(&[0, 0, 2]),
            ev(&[0, 1, 1]),
            ev(&[0, 2, 0]),
            ev(&[1, 0, 1]),
            ev(&[1, 1, 0]),
            ev(&[2, 0, 0]),
        ];
        assert_eq!(m.generators(), &expected);

        let k4 = Multigraph::complete(4);
        let m = parking_ideal(&k4);
        assert_eq!(m.generators().len(), 7);
        assert!(m.generators().contains(&ev(&[3, 0, 0])));
        assert!(m.generators().contains(&ev(&[2, 2, 0])));
        assert!(m.generators().contains(&ev(&[1, 1, 1])));

        for tree in [Multigraph::path(4), Multigraph::star(5)] {
            let m = parking_ideal(&tree);
            let n = tree.non_sink_count();
            let mut vars: Vec<ExponentVector> = (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    ExponentVector::new(e)
                })
                .collect();
            vars.sort();
            assert_eq!(m.generators(), &vars);
        }
    }

    #[test]
    fn parking_ideal_is_minimalization_of_census() {
        for g in [
            Multigraph::cycle(4),
            Multigraph::complete(4),
            Multigraph::path(5),
            Multigraph::from_weighted_edges(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
                .unwrap(),
        ] {
            let census = subset_monomial_census(&g, &limits()).unwrap();
            let all = MonomialIdeal::new(
                g.non_sink_count(),
                census.iter().map(|s| s.exponents.clone()).collect(),
            );
            assert_eq!(all, parking_ideal(&g));
            // classification agrees with divisibility minimality
            for s in &census {
                let minimal_by_div = parking_ideal(&g).generators().contains(&s.exponents)
                    && census
                        .iter()
                        .filter(|t| t.minimal)
                        .filter(|t| t.exponents == s.exponents)
                        .count()
                        == 1;
                if s.minimal {
                    assert!(minimal_by_div, "subset {:?}", s.subset);
                }
            }
        }
    }

    #[test]
    fn census_flags_the_redundant_generator() {
        let c4 = Multigraph::cycle(4);
        let census = subset_monomial_census(&c4, &limits()).unwrap();
        let s = census.iter().find(|s| s.subset == vec![0, 2]).unwrap();
        assert!(!s.minimal);
        assert_eq!(s.exponents, ev(&[2, 0, 2]));
        assert_eq!(s.reason, Some(NonMinimalReason::SubsetDisconnected));
    }

    #[test]
    fn standard_monomial_examples() {
        // ⟨x1, x2, x3⟩^2
        let square = MonomialIdeal::new(
            3,
            vec![
                ev(&[2, 0, 0]),
                ev(&[0, 2, 0]),
                ev(&[0, 0, 2]),
                ev(&[1, 1, 0]),
                ev(&[0, 1, 1]),
                ev(&[1, 0, 1]),
            ],
        );
        let std = standard_monomials(&square).unwrap();
        assert_eq!(
            std,
            vec![ev(&[0, 0, 0]), ev(&[0, 0, 1]), ev(&[0, 1, 0]), ev(&[1, 0, 0])]
        );

        let maximal_ideal = MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert_eq!(standard_monomials(&maximal_ideal).unwrap(), vec![ev(&[0, 0])]);

        let m = parking_ideal(&Multigraph::complete(4));
        assert_eq!(standard_monomials(&m).unwrap().len(), 16);

        let not_artinian = MonomialIdeal::new(2, vec![ev(&[1, 0])]);
        assert!(matches!(
            standard_monomials(&not_artinian),
            Err(Error::NotArtinian { variable: 1 })
        ));
    }

    #[test]
    fn standard_monomials_are_parking_functions() {
        for g in [Multigraph::cycle(4), Multigraph::complete(4)] {
            let m = parking_ideal(&g);
            let std = standard_monomials(&m).unwrap();
            let parks = crate::chip::parking_functions(&g, &limits()).unwrap();
            let park_evs: Vec<ExponentVector> =
                parks.iter().map(|c| c.to_exponents()).collect();
            assert_eq!(std, park_evs);
            // cross-module: c parking ⟺ x^c not in the ideal
            for c in &parks {
                assert!(!m.contains(&c.to_exponents()));
            }
        }
    }

    #[test]
    fn alexander_dual_examples() {
        let c4 = Multigraph::cycle(4);
        let m = parking_ideal(&c4);
        let dual = alexander_dual(&m, &ev(&[2, 2, 2])).unwrap();
        assert_eq!(
            dual.generators(),
            &[ev(&[1, 2, 2]), ev(&[2, 1, 2]), ev(&[2, 2, 1])]
        );

        let maximal_ideal = MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[0, 1])]);
        let dual = alexander_dual(&maximal_ideal, &ev(&[1, 1])).unwrap();
        assert_eq!(dual.generators(), &[ev(&[1, 1])]);

        // tree ideal of K4: dual generators are a - (permutations of 012)
        let k4 = Multigraph::complete(4);
        let m = parking_ideal(&k4);
        let dual = alexander_dual(&m, &ev(&[3, 3, 3])).unwrap();
        assert_eq!(dual.generators().len(), 6);
        assert!(dual.generators().contains(&ev(&[3, 2, 1])));
        assert!(dual.generators().contains(&ev(&[1, 2, 3])));

        // generator exceeding a is rejected
        assert!(matches!(
            alexander_dual(&m, &ev(&[2, 2, 2])),
            Err(Error::GeneratorExceedsDualBound { .. })
        ));
    }

    #[test]
    fn alexander_dual_is_involutive() {
        let ideals = [
            parking_ideal(&Multigraph::cycle(4)),
            parking_ideal(&Multigraph::complete(4)),
            MonomialIdeal::new(2, vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 3])]),
        ];
        for ideal in ideals {
            let powers = ideal.artinian_powers().unwrap();
            let a = ExponentVector::new(powers);
            let twice = alexander_dual(&alexander_dual(&ideal, &a).unwrap(), &a).unwrap();
            assert_eq!(twice, ideal);
        }
    }

    #[test]
    fn lcm_lattice_examples() {
        let maximal_ideal = MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert_eq!(
            lcm_lattice(&maximal_ideal, &limits()).unwrap(),
            vec![ev(&[0, 1]), ev(&[1, 0]), ev(&[1, 1])]
        );

        let m = parking_ideal(&Multigraph::cycle(4));
        let lattice = lcm_lattice(&m, &limits()).unwrap();
        assert!(lattice.contains(&ev(&[1, 1, 1])));
        assert!(lattice.contains(&ev(&[2, 1, 1])));

        let single = MonomialIdeal::new(2, vec![ev(&[3, 1])]);
        assert_eq!(lcm_lattice(&single, &limits()).unwrap(), vec![ev(&[3, 1])]);

        let tight = Limits {
            max_generators: 2,
            ..Limits::default()
        };
        assert!(matches!(
            lcm_lattice(&m, &tight),
            Err(Error::GeneratorBound { .. })
        ));
    }

    #[test]
    fn betti_oracle_examples() {
        let m = parking_ideal(&Multigraph::cycle(4));
        let betti = betti_oracle(&m, &limits()).unwrap();
        assert_eq!(betti.ungraded(), vec![6, 8, 3]);

        // Koszul: β_i = C(n, i)
        for n in 2..=4usize {
            let vars: Vec<ExponentVector> = (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    ExponentVector::new(e)
                })
                .collect();
            let ideal = MonomialIdeal::new(n, vars);
            let betti = betti_oracle(&ideal, &limits()).unwrap();
            let expected: Vec<usize> = (1..=n).map(|i| binomial(n, i)).collect();
            assert_eq!(betti.ungraded(), expected);
        }

        let m = parking_ideal(&Multigraph::complete(4));
        let betti = betti_oracle(&m, &limits()).unwrap();
        assert_eq!(betti.ungraded(), vec![7, 12, 6]);

        // β_1 always counts minimal generators
        for g in [Multigraph::cycle(4), Multigraph::complete(4), Multigraph::path(4)] {
            let m = parking_ideal(&g);
            let betti = betti_oracle(&m, &limits()).unwrap();
            assert_eq!(betti.ungraded()[0], m.generators().len());
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn render_examples() {
        assert_eq!(render_monomial(&ev(&[2, 0, 1])), "x1^2*x3");
        assert_eq!(render_monomial(&ev(&[0, 0])), "1");
        assert_eq!(render_monomial(&ev(&[1, 1, 1])), "x1*x2*x3");
    }
}

//! Implementations of the six subcommands.

use std::time::Instant;

use num_bigint::BigUint;
use parkres_core::arrangement::{bounded_complex, dual_subcomplex, LabeledComplex};
use parkres_core::chip::{
    maximal_parking_functions, parking_functions, stabilize_with, Configuration, FiringPolicy,
};
use parkres_core::ideal::{
    alexander_dual, betti_oracle, parking_ideal, render_monomial, subset_monomial_census,
    ExponentVector, NonMinimalReason,
};
use parkres_core::resolution::{
    betti_conjecture_check, chain_complex, graded_betti_of_complex, verify_labeled_complex,
    VerificationReport,
};
use parkres_core::whitney::whitney;
use parkres_core::{Limits, Multigraph};
use serde::Serialize;

use crate::manifest::RunManifest;
use crate::output::{betti_line, frac, to_json, BettiDto, MonomialDto};
use crate::{InputError, RunOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Pretty,
}

/// Everything a command needs besides its own flags.
pub struct Context {
    pub graph: Multigraph,
    pub limits: Limits,
    pub format: Format,
    pub input_path: String,
    pub seed: Option<u64>,
    pub started: Instant,
}

impl Context {
    fn manifest(&self, command: &str) -> RunManifest {
        let mut m = RunManifest::new(&self.input_path, self.graph.sink(), command, self.seed);
        m.wall_time_ms = self.started.elapsed().as_millis();
        m
    }

    fn core<T>(&self, r: parkres_core::Result<T>) -> Result<T, InputError> {
        r.map_err(|e| InputError(format!("{e}")))
    }
}

fn emit<T: Serialize>(
    ctx: &Context,
    command: &str,
    result: T,
    pretty: String,
    exit_code: u8,
) -> RunOutcome {
    let manifest = ctx.manifest(command);
    let rendered = match ctx.format {
        Format::Json => to_json(manifest, result),
        Format::Pretty => format!("{}{}", manifest.pretty_header(), pretty),
    };
    RunOutcome {
        rendered,
        exit_code,
    }
}

fn subset_one_based(subset: &[usize]) -> Vec<usize> {
    subset.iter().map(|&v| v + 1).collect()
}

fn set_text(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(|&v| (v + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

// ---------------------------------------------------------------- gens --

#[derive(Serialize)]
struct GeneratorDto {
    subset: Vec<usize>,
    exponents: Vec<u32>,
    monomial: String,
}

#[derive(Serialize)]
struct RedundantDto {
    subset: Vec<usize>,
    exponents: Vec<u32>,
    monomial: String,
    reason: String,
}

#[derive(Serialize)]
struct GensResult {
    generator_count: usize,
    generators: Vec<GeneratorDto>,
    redundant: Vec<RedundantDto>,
}

pub fn run_gens(ctx: &Context) -> Result<RunOutcome, InputError> {
    let census = ctx.core(subset_monomial_census(&ctx.graph, &ctx.limits))?;
    let mut generators: Vec<GeneratorDto> = census
        .iter()
        .filter(|s| s.minimal)
        .map(|s| GeneratorDto {
            subset: subset_one_based(&s.subset),
            exponents: s.exponents.exponents().to_vec(),
            monomial: render_monomial(&s.exponents),
        })
        .collect();
    generators.sort_by(|a, b| a.exponents.cmp(&b.exponents));
    let redundant: Vec<RedundantDto> = census
        .iter()
        .filter(|s| !s.minimal)
        .map(|s| RedundantDto {
            subset: subset_one_based(&s.subset),
            exponents: s.exponents.exponents().to_vec(),
            monomial: render_monomial(&s.exponents),
            reason: match s.reason {
                Some(NonMinimalReason::SubsetDisconnected) => {
                    "induced subgraph on I is disconnected".to_string()
                }
                Some(NonMinimalReason::ComplementDisconnected) => {
                    "induced subgraph on the complement of I is disconnected".to_string()
                }
                None => String::new(),
            },
        })
        .collect();

    let mut pretty = format!("minimal generators ({}):\n", generators.len());
    for g in &generators {
        pretty.push_str(&format!(
            "  {}  I = {}\n",
            g.monomial,
            set_text(&g.subset.iter().map(|v| v - 1).collect::<Vec<_>>())
        ));
    }
    pretty.push_str(&format!("redundant subset monomials ({}):\n", redundant.len()));
    for r in &redundant {
        pretty.push_str(&format!(
            "  {}  I = {}  ({})\n",
            r.monomial,
            set_text(&r.subset.iter().map(|v| v - 1).collect::<Vec<_>>()),
            r.reason
        ));
    }
    let result = GensResult {
        generator_count: generators.len(),
        generators,
        redundant,
    };
    Ok(emit(ctx, "gens", result, pretty, 0))
}

// ------------------------------------------------------------- complex --

#[derive(Serialize)]
struct CellDto {
    id: usize,
    dimension: usize,
    blocks: Vec<Vec<usize>>,
    orientation: Vec<(usize, usize)>,
    label: Vec<u32>,
    monomial: String,
    facets: Vec<usize>,
    vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coordinates: Option<Vec<String>>,
}

#[derive(Serialize)]
struct ComplexResult {
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    cells: Vec<CellDto>,
}

fn cell_dtos(x: &LabeledComplex) -> Vec<CellDto> {
    (0..x.cell_count())
        .map(|id| {
            let cell = x.cell(id);
            CellDto {
                id,
                dimension: x.dimension_of(id),
                blocks: cell
                    .partition()
                    .blocks()
                    .iter()
                    .map(|b| subset_one_based(b))
                    .collect(),
                orientation: cell
                    .orientation()
                    .directed_pairs()
                    .iter()
                    .map(|&(t, h)| (t + 1, h + 1))
                    .collect(),
                label: x.label(id).exponents().to_vec(),
                monomial: render_monomial(x.label(id)),
                facets: x.facets_of(id).to_vec(),
                vertices: x.zero_faces_of(id).to_vec(),
                coordinates: (x.dimension_of(id) == 0)
                    .then(|| x.coordinates(id).iter().map(frac).collect()),
            }
        })
        .collect()
}

pub fn run_complex(ctx: &Context) -> Result<RunOutcome, InputError> {
    let x = ctx.core(bounded_complex(&ctx.graph, &ctx.limits))?;
    let f = x.f_vector();
    let mut pretty = format!(
        "f-vector: ({})\neuler characteristic: {}\ncells:\n",
        f.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        x.euler_characteristic()
    );
    for dto in cell_dtos(&x) {
        let blocks = dto
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect::<Vec<_>>()
            .join("|");
        let coord = dto
            .coordinates
            .as_ref()
            .map(|c| format!("  at ({})", c.join(", ")))
            .unwrap_or_default();
        pretty.push_str(&format!(
            "  {:>3}  dim {}  {}  label {}{}\n",
            dto.id, dto.dimension, blocks, dto.monomial, coord
        ));
    }
    let result = ComplexResult {
        f_vector: f,
        euler_characteristic: x.euler_characteristic(),
        cells: cell_dtos(&x),
    };
    Ok(emit(ctx, "complex", result, pretty, 0))
}

// ------------------------------------------------------------- resolve --

#[derive(Serialize)]
struct CheckDto {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct VerificationDto {
    passed: bool,
    checks: Vec<CheckDto>,
    orientation_reading: ReadingDto,
}

#[derive(Serialize)]
struct ReadingDto {
    in_degree: bool,
    out_degree: bool,
    out_degree_minus_one: bool,
    resolved: Option<String>,
}

#[derive(Serialize)]
struct ConjectureRowDto {
    homological_index: usize,
    cells: usize,
    orientation_sum: usize,
    maximal_parking_sum: usize,
    whitney_absolute: u64,
}

#[derive(Serialize)]
struct BoundaryDto {
    /// Maps cells of this dimension to their facets one dimension down.
    cell_dimension: usize,
    /// Global ids of the row cells (facets) and column cells.
    row_cells: Vec<usize>,
    column_cells: Vec<usize>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct ResolveResult {
    f_vector: Vec<usize>,
    betti: BettiDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<VerificationDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<BettiDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counts: Option<Vec<ConjectureRowDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundaries: Option<Vec<BoundaryDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    torsion: Option<Vec<Vec<String>>>,
}

fn reading_dto(report: &VerificationReport) -> ReadingDto {
    let r = report.reading;
    let resolved = match (r.in_degree, r.out_degree, r.out_degree_minus_one) {
        (false, false, true) => Some("out-degree-minus-one".to_string()),
        (true, false, false) => Some("in-degree".to_string()),
        (false, true, false) => Some("out-degree".to_string()),
        _ => None, // more than one candidate survives on this graph
    };
    ReadingDto {
        in_degree: r.in_degree,
        out_degree: r.out_degree,
        out_degree_minus_one: r.out_degree_minus_one,
        resolved,
    }
}

pub struct ResolveFlags {
    pub verify: bool,
    pub oracle: bool,
    pub counts: bool,
    /// Emit the signed boundary matrices as dense integer arrays.
    pub matrices: bool,
    /// Report torsion coefficients of the integral homology of the complex.
    pub torsion: bool,
    /// Testing hook: corrupt one cell label before verification.
    pub corrupt_cell: Option<usize>,
}

pub fn run_resolve(ctx: &Context, flags: &ResolveFlags) -> Result<RunOutcome, InputError> {
    let mut x = ctx.core(bounded_complex(&ctx.graph, &ctx.limits))?;
    if let Some(id) = flags.corrupt_cell {
        if id >= x.cell_count() {
            return Err(InputError(format!(
                "cell {id} out of range 0..{}",
                x.cell_count()
            )));
        }
        let bumped = ExponentVector::new(
            x.label(id).exponents().iter().map(|&e| e + 1).collect(),
        );
        x.override_label(id, bumped);
    }
    let verify = flags.verify || flags.oracle || flags.corrupt_cell.is_some();
    let report = if verify {
        Some(ctx.core(verify_labeled_complex(
            &ctx.graph,
            &x,
            &ctx.limits,
            flags.oracle,
        ))?)
    } else {
        None
    };
    let betti = graded_betti_of_complex(&x);
    let counts = if flags.counts {
        Some(ctx.core(betti_conjecture_check(&ctx.graph, &ctx.limits))?)
    } else {
        None
    };
    let chain = if flags.matrices || flags.torsion {
        Some(ctx.core(chain_complex(&x))?)
    } else {
        None
    };
    let boundaries = chain.as_ref().filter(|_| flags.matrices).map(|c| {
        let mut offsets = vec![0usize];
        for &d in &c.dims {
            offsets.push(offsets.last().unwrap() + d);
        }
        c.boundaries
            .iter()
            .enumerate()
            .map(|(k, m)| BoundaryDto {
                cell_dimension: k + 1,
                row_cells: (offsets[k]..offsets[k + 1]).collect(),
                column_cells: (offsets[k + 1]..offsets[k + 2]).collect(),
                matrix: m.clone(),
            })
            .collect::<Vec<_>>()
    });
    let torsion = chain.as_ref().filter(|_| flags.torsion).map(|c| {
        c.torsion()
            .iter()
            .map(|degree| degree.iter().map(|f| f.to_string()).collect())
            .collect::<Vec<Vec<String>>>()
    });

    let mut pretty = format!(
        "f-vector: ({})\nbetti: {}\n",
        x.f_vector()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        betti_line(&betti)
    );
    let mut exit_code = 0u8;
    if let Some(report) = &report {
        pretty.push_str(&format!(
            "verification: {}\n",
            if report.passed() { "PASS" } else { "FAIL" }
        ));
        for check in &report.checks {
            match &check.witness {
                Some(w) => pretty.push_str(&format!(
                    "  [{}] {}: {}\n",
                    if check.passed { "ok" } else { "FAIL" },
                    check.name,
                    w
                )),
                None => pretty.push_str(&format!(
                    "  [{}] {}\n",
                    if check.passed { "ok" } else { "FAIL" },
                    check.name
                )),
            }
        }
        let reading = reading_dto(report);
        pretty.push_str(&format!(
            "orientation reading: {}\n",
            reading.resolved.as_deref().unwrap_or("ambiguous on this graph")
        ));
        if !report.passed() {
            exit_code = 2;
        }
    }
    if let Some(counts) = &counts {
        pretty.push_str("betti count comparison (cells | orientations | maximal parking | whitney):\n");
        for row in &counts.counts {
            pretty.push_str(&format!(
                "  k = {}: {} | {} | {} | {}\n",
                row.homological_index,
                row.cells,
                row.orientation_sum,
                row.maximal_parking_sum,
                row.whitney_absolute
            ));
        }
        if !counts.passed() {
            exit_code = 2;
            if let Some(w) = &counts.witness {
                pretty.push_str(&format!("  mismatch: {w}\n"));
            }
        }
    }
    if let Some(torsion) = &torsion {
        let text: Vec<String> = torsion
            .iter()
            .enumerate()
            .map(|(d, fs)| format!("H_{d}: [{}]", fs.join(", ")))
            .collect();
        pretty.push_str(&format!("integral torsion: {}\n", text.join("  ")));
    }

    let result = ResolveResult {
        f_vector: x.f_vector(),
        betti: BettiDto::new(&betti),
        verification: report.as_ref().map(|r| VerificationDto {
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDto {
                    name: c.name.to_string(),
                    passed: c.passed,
                    witness: c.witness.clone(),
                })
                .collect(),
            orientation_reading: reading_dto(r),
        }),
        oracle: report
            .as_ref()
            .and_then(|r| r.oracle.as_ref())
            .map(BettiDto::new),
        counts: counts.as_ref().map(|c| {
            c.counts
                .iter()
                .map(|row| ConjectureRowDto {
                    homological_index: row.homological_index,
                    cells: row.cells,
                    orientation_sum: row.orientation_sum,
                    maximal_parking_sum: row.maximal_parking_sum,
                    whitney_absolute: row.whitney_absolute,
                })
                .collect()
        }),
        boundaries,
        torsion,
    };
    Ok(emit(ctx, "resolve", result, pretty, exit_code))
}

// ------------------------------------------------------------ sandpile --

pub enum SandpileAction {
    Stabilize(Vec<u64>),
    Group,
    Parking,
    Maximal,
}

#[derive(Serialize)]
struct StabilizeResult {
    initial: Vec<u64>,
    stabilized: Vec<u64>,
    fire_counts: Vec<u64>,
}

#[derive(Serialize)]
struct GroupResult {
    invariant_factors: Vec<String>,
    order: String,
    spanning_trees: String,
}

#[derive(Serialize)]
struct ParkingResult {
    count: usize,
    configurations: Vec<Vec<u64>>,
}

pub fn run_sandpile(ctx: &Context, action: &SandpileAction) -> Result<RunOutcome, InputError> {
    match action {
        SandpileAction::Stabilize(chips) => {
            let config = Configuration::new(chips.clone());
            let (stable, counts) =
                ctx.core(stabilize_with(&ctx.graph, &config, FiringPolicy::LeastIndex))?;
            let (check, _) =
                ctx.core(stabilize_with(&ctx.graph, &config, FiringPolicy::GreedyMax))?;
            debug_assert_eq!(stable, check);
            let pretty = format!(
                "stabilized: {}\nfire counts: {}\n",
                csv(stable.chips()),
                csv(&counts)
            );
            let result = StabilizeResult {
                initial: chips.clone(),
                stabilized: stable.chips().to_vec(),
                fire_counts: counts,
            };
            Ok(emit(ctx, "sandpile --stabilize", result, pretty, 0))
        }
        SandpileAction::Group => {
            let factors = ctx.graph.sandpile_group();
            let order: BigUint = factors.iter().product();
            let trees = ctx.graph.spanning_tree_count();
            let pretty = format!(
                "sandpile group invariant factors: [{}]\norder: {}\nspanning trees: {}\n",
                factors
                    .iter()
                    .map(BigUint::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
                order,
                trees
            );
            let result = GroupResult {
                invariant_factors: factors.iter().map(BigUint::to_string).collect(),
                order: order.to_string(),
                spanning_trees: trees.to_string(),
            };
            Ok(emit(ctx, "sandpile --group", result, pretty, 0))
        }
        SandpileAction::Parking => {
            let parks = ctx.core(parking_functions(&ctx.graph, &ctx.limits))?;
            sandpile_list(ctx, "sandpile --parking", "parking functions", parks)
        }
        SandpileAction::Maximal => {
            let parks = ctx.core(maximal_parking_functions(&ctx.graph, &ctx.limits))?;
            sandpile_list(ctx, "sandpile --maximal", "maximal parking functions", parks)
        }
    }
}

fn sandpile_list(
    ctx: &Context,
    command: &str,
    what: &str,
    configs: Vec<Configuration>,
) -> Result<RunOutcome, InputError> {
    let mut pretty = format!("{what} ({}):\n", configs.len());
    for c in &configs {
        pretty.push_str(&format!("  ({})\n", csv(c.chips())));
    }
    let result = ParkingResult {
        count: configs.len(),
        configurations: configs.iter().map(|c| c.chips().to_vec()).collect(),
    };
    Ok(emit(ctx, command, result, pretty, 0))
}

fn csv(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------- dual --

#[derive(Serialize)]
struct DualCellDto {
    id: usize,
    dimension: usize,
    colabel: Vec<u32>,
    monomial: String,
    /// The unshifted normalization `a - label`, for comparison.
    colabel_unshifted: Vec<u32>,
}

#[derive(Serialize)]
struct DualResult {
    dualizing_exponent: Vec<u32>,
    dual_generators: Vec<MonomialDto>,
    subcomplex_census: Vec<usize>,
    subcomplex_cells: Vec<DualCellDto>,
    top_colabels: Vec<MonomialDto>,
    oracle_betti: BettiDto,
}

pub fn run_dual(ctx: &Context) -> Result<RunOutcome, InputError> {
    let graph = &ctx.graph;
    let ideal = parking_ideal(graph);
    let degree_vector = ExponentVector::new(
        graph.non_sink_vertices().map(|v| graph.degree(v)).collect(),
    );
    let dual_ideal = ctx.core(alexander_dual(&ideal, &degree_vector))?;
    let x = ctx.core(bounded_complex(graph, &ctx.limits))?;
    let sub = dual_subcomplex(&x);
    let oracle = ctx.core(betti_oracle(&dual_ideal, &ctx.limits))?;

    let mut pretty = format!(
        "dualizing exponent: {}\ndual generators ({}):\n",
        render_monomial(&degree_vector),
        dual_ideal.generators().len()
    );
    for g in dual_ideal.generators() {
        pretty.push_str(&format!("  {}\n", render_monomial(g)));
    }
    pretty.push_str(&format!(
        "dual subcomplex census by dimension: ({})\n",
        sub.census
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    pretty.push_str(&format!("dual oracle betti: {}\n", betti_line(&oracle)));

    let result = DualResult {
        dualizing_exponent: degree_vector.exponents().to_vec(),
        dual_generators: dual_ideal.generators().iter().map(MonomialDto::new).collect(),
        subcomplex_census: sub.census.clone(),
        subcomplex_cells: sub
            .member_ids
            .iter()
            .enumerate()
            .map(|(k, &id)| DualCellDto {
                id,
                dimension: x.dimension_of(id),
                colabel: sub.colabels[k].exponents().to_vec(),
                monomial: render_monomial(&sub.colabels[k]),
                colabel_unshifted: sub.unshifted_colabels[k].exponents().to_vec(),
            })
            .collect(),
        top_colabels: sub.top_colabels.iter().map(MonomialDto::new).collect(),
        oracle_betti: BettiDto::new(&oracle),
    };
    Ok(emit(ctx, "dual", result, pretty, 0))
}

// ------------------------------------------------------------- whitney --

#[derive(Serialize)]
struct WhitneyResult {
    simple: Vec<i64>,
    simple_absolute: Vec<i64>,
    doubly: Vec<Vec<i64>>,
    chromatic_coefficients_by_degree: Vec<i64>,
    chromatic: String,
}

pub fn run_whitney(ctx: &Context) -> Result<RunOutcome, InputError> {
    let table = ctx.core(whitney(&ctx.graph, &ctx.limits))?;
    let n = table.rank();
    let degree = ctx.graph.vertex_count();
    let coefficients: Vec<i64> = (0..=degree).map(|d| table.coefficient(d)).collect();
    let chromatic = chromatic_text(&coefficients);
    let doubly: Vec<Vec<i64>> = (0..=n)
        .map(|i| (0..=n).map(|j| table.doubly(i, j)).collect())
        .collect();
    let pretty = format!(
        "whitney numbers: [{}]\nabsolute values: [{}]\nchromatic polynomial: {}\n",
        table
            .simple()
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        table
            .simple()
            .iter()
            .map(|w| w.abs().to_string())
            .collect::<Vec<_>>()
            .join(", "),
        chromatic
    );
    let result = WhitneyResult {
        simple: table.simple().to_vec(),
        simple_absolute: table.simple().iter().map(|w| w.abs()).collect(),
        doubly,
        chromatic_coefficients_by_degree: coefficients,
        chromatic,
    };
    Ok(emit(ctx, "whitney", result, pretty, 0))
}

fn chromatic_text(coefficients: &[i64]) -> String {
    let mut parts = Vec::new();
    for (d, &c) in coefficients.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let magnitude = c.abs();
        let term = match d {
            0 => format!("{magnitude}"),
            1 if magnitude == 1 => "t".to_string(),
            1 => format!("{magnitude}*t"),
            _ if magnitude == 1 => format!("t^{d}"),
            _ => format!("{magnitude}*t^{d}"),
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{term}") } else { term });
        } else {
            parts.push(format!("{} {term}", if c < 0 { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

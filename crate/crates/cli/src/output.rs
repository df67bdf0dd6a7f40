//! Shared emission helpers: JSON envelopes, exact fraction strings, and
//! DTOs for the library types that several commands print.

use parkres_core::ideal::{render_monomial, ExponentVector};
use parkres_core::resolution::BettiTable;
use parkres_core::Rational;
use serde::Serialize;

use crate::manifest::RunManifest;

/// Every artifact is `{ "manifest": ..., "result": ... }`.
#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub manifest: RunManifest,
    pub result: T,
}

pub fn to_json<T: Serialize>(manifest: RunManifest, result: T) -> String {
    let envelope = Envelope { manifest, result };
    let mut text = serde_json::to_string_pretty(&envelope).expect("serializable");
    text.push('\n');
    text
}

/// Exact fraction rendering: `"1/3"`, integers as `"2"`.
pub fn frac(r: &Rational) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A monomial with both exponent and rendered forms.
#[derive(Serialize, Clone)]
pub struct MonomialDto {
    pub exponents: Vec<u32>,
    pub monomial: String,
}

impl MonomialDto {
    pub fn new(ev: &ExponentVector) -> Self {
        MonomialDto {
            exponents: ev.exponents().to_vec(),
            monomial: render_monomial(ev),
        }
    }
}

#[derive(Serialize)]
pub struct FineBettiDto {
    pub index: usize,
    pub sigma: Vec<u32>,
    pub monomial: String,
    pub count: usize,
}

#[derive(Serialize)]
pub struct CoarseBettiDto {
    pub index: usize,
    pub total_degree: u64,
    pub count: usize,
}

#[derive(Serialize)]
pub struct BettiDto {
    pub total: Vec<usize>,
    pub by_total_degree: Vec<CoarseBettiDto>,
    pub fine: Vec<FineBettiDto>,
}

impl BettiDto {
    pub fn new(table: &BettiTable) -> Self {
        BettiDto {
            total: table.ungraded(),
            by_total_degree: table
                .coarse()
                .iter()
                .map(|(&(index, total_degree), &count)| CoarseBettiDto {
                    index,
                    total_degree,
                    count,
                })
                .collect(),
            fine: table
                .fine()
                .iter()
                .map(|(&(index, ref sigma), &count)| FineBettiDto {
                    index,
                    sigma: sigma.exponents().to_vec(),
                    monomial: render_monomial(sigma),
                    count,
                })
                .collect(),
        }
    }
}

/// Pretty one-liner for an ungraded Betti vector.
pub fn betti_line(table: &BettiTable) -> String {
    let parts: Vec<String> = table
        .ungraded()
        .iter()
        .enumerate()
        .map(|(i, b)| format!("b{} = {}", i + 1, b))
        .collect();
    parts.join(", ")
}

//! Category `O_c`: graded characters of simples, decomposition matrices,
//! finite-dimensional simples, transports between parameters and the
//! aspherical scan.

mod closed;
mod decomposition;
mod series;
mod transport;

use std::collections::BTreeMap;

use serde::Serialize;

pub use closed::{closed_forms, closed_forms_at, ClosedForm, DetSpace};
pub use decomposition::{
    blocks, decomposition_from_series, decomposition_matrix, finite_dimensionals, finite_from_series,
    induction_check, rank_one_simple, verify_reconstruction, DecompositionMatrix, InductionReport, IntMatrix,
};
pub use series::{graded_l_character, graded_l_characters, m_character, CharacterSeries};
pub use transport::{
    aspherical_scan, aspherical_witnesses, decomposition_matrix_at, negate_c_transport, scaling_permutation,
    sign_flip, transport_character, trivial_isotypic_series, TransportKind, TransportMap,
};

use crate::arith::rational::{format_rational, Rational};
use crate::cherednik::lowest_weight;
use crate::error::Result;
use crate::group::IrrepLabel;
use crate::hecke::is_semisimple;

/// Truncation used when none is given.
pub const DEFAULT_DEPTH: usize = 12;

/// Length of the invariant series examined by the aspherical scan.
pub const ASPHERICAL_SERIES_LEN: usize = 48;

/// Everything computed about `O_c` at one truncation depth.
#[derive(Clone, Debug, Serialize)]
pub struct CategoryReport {
    pub c: String,
    pub depth: usize,
    pub semisimple: bool,
    pub blocks: Vec<Vec<IrrepLabel>>,
    pub lowest_weights: BTreeMap<IrrepLabel, String>,
    pub n: IntMatrix,
    pub n_hat: IntMatrix,
    pub l_in_m: BTreeMap<IrrepLabel, String>,
    pub m_in_l: BTreeMap<IrrepLabel, String>,
    pub finite_dimensional: BTreeMap<IrrepLabel, i64>,
    /// Per simple, the multiplicities of each irreducible degree by degree.
    pub characters: BTreeMap<IrrepLabel, Vec<BTreeMap<IrrepLabel, i64>>>,
    pub aspherical: bool,
    pub aspherical_witnesses: Vec<IrrepLabel>,
}

pub fn category_report(c: &Rational, depth: usize) -> Result<CategoryReport> {
    let l = graded_l_characters(c, depth)?;
    let dm = decomposition_from_series(c, depth, &l)?;
    let finite = finite_from_series(&dm, &l)?;
    let witnesses = aspherical_witnesses(&dm, depth + 13)?;
    let mut characters = BTreeMap::new();
    for s in &l {
        let mut graded = Vec::with_capacity(s.terms.len());
        for n in 0..s.terms.len() {
            let v = s.multiplicities(n)?;
            graded.push(
                IrrepLabel::ALL
                    .iter()
                    .filter(|t| v.get(**t) != 0)
                    .map(|&t| (t, v.get(t)))
                    .collect(),
            );
        }
        characters.insert(s.tau, graded);
    }
    Ok(CategoryReport {
        c: format_rational(c),
        depth,
        semisimple: is_semisimple(c),
        blocks: blocks(c),
        lowest_weights: IrrepLabel::ALL
            .iter()
            .map(|&t| (t, format_rational(&lowest_weight(t, c))))
            .collect(),
        n: dm.n,
        n_hat: dm.n_hat,
        l_in_m: IrrepLabel::ALL
            .iter()
            .map(|&t| (t, dm.l_in_m(t).format_terms("M", &IrrepLabel::ALL)))
            .collect(),
        m_in_l: IrrepLabel::ALL
            .iter()
            .map(|&t| (t, dm.m_in_l(t).format_terms("L", &IrrepLabel::ALL)))
            .collect(),
        finite_dimensional: finite,
        characters,
        aspherical: !witnesses.is_empty(),
        aspherical_witnesses: witnesses,
    })
}

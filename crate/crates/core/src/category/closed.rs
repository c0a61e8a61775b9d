//! Closed-form characters of the finite-dimensional simples at `c = r/d`:
//! `det_V(1 − w t^r)/det_{h*}(1 − w t) · Σ χ_σ(w) t^{1 + k r}`.

use super::series::CharacterSeries;
use crate::arith::rational::{rat, Rational};
use crate::arith::CycNum;
use crate::chars::{molien_coefficients, ClassFunction};
use crate::group::{IrrepLabel, G12};
use IrrepLabel::*;

/// Which of `h*` or `h` appears in the numerator determinant.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DetSpace {
    Dual,
    Reflection,
}

impl DetSpace {
    fn label(self) -> IrrepLabel {
        match self {
            DetSpace::Dual => TwoMinus,
            DetSpace::Reflection => TwoPlus,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub d: u32,
    pub modulus: u32,
    pub residues: &'static [u32],
    pub tau: IrrepLabel,
    pub numerator: DetSpace,
    /// `(σ, k)` for a term `χ_σ(w)·t^{1 + k r}`.
    pub terms: &'static [(IrrepLabel, i64)],
    /// `dim L = dim_factor · r²`.
    pub dim_factor: i64,
}

const fn form(
    d: u32,
    modulus: u32,
    residues: &'static [u32],
    tau: IrrepLabel,
    numerator: DetSpace,
    terms: &'static [(IrrepLabel, i64)],
    dim_factor: i64,
) -> ClosedForm {
    ClosedForm {
        d,
        modulus,
        residues,
        tau,
        numerator,
        terms,
        dim_factor,
    }
}

const D12A: &[u32] = &[1, 11, 17, 19];
const D12B: &[u32] = &[5, 7, 13, 23];
const D4A: &[u32] = &[1, 3];
const D4B: &[u32] = &[5, 7];

static FORMS: [ClosedForm; 11] = [
    form(12, 24, D12A, OnePlus, DetSpace::Dual, &[(OnePlus, -1)], 1),
    form(12, 24, D12B, OnePlus, DetSpace::Reflection, &[(OnePlus, -1)], 1),
    form(4, 8, D4A, OnePlus, DetSpace::Dual, &[(OnePlus, -3), (TwoMinus, -2)], 3),
    form(4, 8, D4A, TwoPlus, DetSpace::Dual, &[(TwoPlus, 0), (OnePlus, 1)], 3),
    form(4, 8, D4A, ThreePlus, DetSpace::Dual, &[(ThreePlus, -1)], 3),
    form(4, 8, D4B, OnePlus, DetSpace::Reflection, &[(OnePlus, -3), (TwoPlus, -2)], 3),
    form(4, 8, D4B, TwoMinus, DetSpace::Reflection, &[(TwoMinus, 0), (OnePlus, 1)], 3),
    form(4, 8, D4B, ThreePlus, DetSpace::Reflection, &[(ThreePlus, -1)], 3),
    form(
        3,
        3,
        &[1, 2],
        OnePlus,
        DetSpace::Dual,
        &[
            (OnePlus, -4),
            (TwoMinus, -3),
            (ThreePlus, -2),
            (Four, -1),
            (ThreePlus, 0),
            (TwoPlus, 1),
            (OnePlus, 2),
        ],
        16,
    ),
    form(
        2,
        2,
        &[1],
        OnePlus,
        DetSpace::Dual,
        &[(OnePlus, -6), (TwoMinus, -5), (ThreePlus, -4), (Four, -3), (Two, -2)],
        12,
    ),
    form(
        2,
        2,
        &[1],
        Two,
        DetSpace::Dual,
        &[(Two, 0), (Four, 1), (ThreePlus, 2), (TwoPlus, 3), (OnePlus, 4)],
        12,
    ),
];

/// Every tabulated closed form.
pub fn closed_forms() -> Vec<&'static ClosedForm> {
    FORMS.iter().collect()
}

/// The closed forms valid at `c = r/d`.
pub fn closed_forms_at(d: u32, r: u32) -> Vec<&'static ClosedForm> {
    closed_forms().into_iter().filter(|f| f.applies(d, r)).collect()
}

impl ClosedForm {
    pub fn applies(&self, d: u32, r: u32) -> bool {
        self.d == d && self.residues.contains(&(r % self.modulus))
    }

    /// Expands the formula at `r` into a series from its lowest weight
    /// `1 + r·min k`, through `depth` further degrees.
    pub fn expand(&self, r: u32, depth: usize) -> CharacterSeries {
        let g = G12::shared();
        let r64 = i64::from(r);
        let kmin = self.terms.iter().map(|t| t.1).min().expect("nonempty");
        let mut terms = vec![ClassFunction::zero(); depth + 1];
        for class in 0..g.classes().len() {
            let m = &g.irrep(self.numerator.label()).images[g.classes()[class].representative];
            let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
            let p = [g.field().one(), -m.trace(), det];
            let molien = molien_coefficients(class, depth);
            let mut num: Vec<CycNum> = vec![g.field().zero(); depth + 1];
            for &(s, k) in self.terms {
                let chi = &g.character(s)[class];
                for (j, pj) in p.iter().enumerate() {
                    let e = ((k - kmin) * r64 + j as i64 * r64) as usize;
                    if e <= depth {
                        num[e] = &num[e] + &(chi * pj);
                    }
                }
            }
            for (n, slot) in terms.iter_mut().enumerate() {
                slot.0[class] = (0..=n).fold(g.field().zero(), |acc, e| acc + &num[e] * &molien[n - e]);
            }
        }
        CharacterSeries {
            tau: self.tau,
            c: rat(r64, i64::from(self.d)),
            lowest: Rational::from_integer((1 + kmin * r64).into()),
            terms,
        }
    }

    /// `dim_factor · r²`.
    pub fn stated_dimension(&self, r: u32) -> i64 {
        self.dim_factor * i64::from(r) * i64::from(r)
    }
}

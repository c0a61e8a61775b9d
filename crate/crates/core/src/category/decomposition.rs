//! Blocks, the decomposition matrices `n` and `n̂`, finite-dimensional simples
//! and the rank-one induction check.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use super::series::{graded_l_characters, m_character, CharacterSeries};
use crate::amatrix::in_a_nullspace;
use crate::arith::rational::{format_rational, is_integer, to_i64, Rational};
use crate::chars::{induce_from_parabolic, ClassFunction, GrothVector, ParabolicChar};
use crate::cherednik::lowest_weight;
use crate::error::{Error, Result};
use crate::group::IrrepLabel;

pub type IntMatrix = [[i64; 8]; 8];

fn weights(c: &Rational) -> Vec<Rational> {
    IrrepLabel::ALL.iter().map(|&t| lowest_weight(t, c)).collect()
}

/// Classes of `Irr(W)` under "lowest weights differ by an integer", each in
/// irrep order, listed by their first member.
pub fn blocks(c: &Rational) -> Vec<Vec<IrrepLabel>> {
    let h = weights(c);
    let mut out: Vec<Vec<IrrepLabel>> = Vec::new();
    for tau in IrrepLabel::ALL {
        match out
            .iter_mut()
            .find(|b| is_integer(&(&h[b[0].index()] - &h[tau.index()])))
        {
            Some(b) => b.push(tau),
            None => out.push(vec![tau]),
        }
    }
    out
}

/// `[M(τ)] = Σ n̂_{τσ}[L(σ)]` and `[L(τ)] = Σ n_{τσ}[M(σ)]`, rows indexed by `τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
    pub depth: usize,
    pub n_hat: IntMatrix,
    pub n: IntMatrix,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl DecompositionMatrix {
    pub fn identity(c: &Rational, depth: usize) -> Self {
        let id: IntMatrix = std::array::from_fn(|i| std::array::from_fn(|j| i64::from(i == j)));
        DecompositionMatrix {
            c: c.clone(),
            depth,
            n_hat: id,
            n: id,
        }
    }

    /// Builds both matrices from `n̂`, checking unit triangularity.
    pub fn from_n_hat(c: &Rational, depth: usize, n_hat: IntMatrix) -> Result<Self> {
        let h = weights(c);
        let mut order: Vec<usize> = (0..8).collect();
        order.sort_by(|&a, &b| h[a].cmp(&h[b]).then(a.cmp(&b)));
        let mut n: IntMatrix = [[0; 8]; 8];
        for &t in order.iter().rev() {
            let mut row = [0i64; 8];
            row[t] = 1;
            for s in 0..8 {
                if s != t && n_hat[t][s] != 0 {
                    for (r, x) in row.iter_mut().zip(&n[s]) {
                        *r -= n_hat[t][s] * x;
                    }
                }
            }
            n[t] = row;
        }
        let dm = DecompositionMatrix {
            c: c.clone(),
            depth,
            n_hat,
            n,
        };
        dm.check_triangular()?;
        Ok(dm)
    }

    /// `n` row of `τ`: `L(τ)` in the `M`-basis.
    pub fn l_in_m(&self, tau: IrrepLabel) -> GrothVector {
        GrothVector(self.n[tau.index()])
    }

    /// `n̂` row of `τ`: `M(τ)` in the `L`-basis.
    pub fn m_in_l(&self, tau: IrrepLabel) -> GrothVector {
        GrothVector(self.n_hat[tau.index()])
    }

    /// Re-expresses an `M`-basis vector in the `L`-basis.
    pub fn to_l_basis(&self, v: &GrothVector) -> GrothVector {
        GrothVector(std::array::from_fn(|s| (0..8).map(|t| v.0[t] * self.n_hat[t][s]).sum()))
    }

    /// Unit diagonal, off-diagonal support only on `h_c(σ) − h_c(τ) ∈ Z_{>0}`,
    /// and `n·n̂ = 1`.
    pub fn check_triangular(&self) -> Result<()> {
        let h = weights(&self.c);
        for (name, m) in [("n_hat", &self.n_hat), ("n", &self.n)] {
            for t in 0..8 {
                for s in 0..8 {
                    let ok = if s == t {
                        m[t][s] == 1
                    } else {
                        m[t][s] == 0 || to_i64(&(&h[s] - &h[t])).is_some_and(|k| k > 0)
                    };
                    if !ok {
                        return Err(Error::inconsistency(format!(
                            "{name} entry ({}, {}) = {} violates unit triangularity",
                            IrrepLabel::from_index(t),
                            IrrepLabel::from_index(s),
                            m[t][s]
                        )));
                    }
                }
            }
        }
        for t in 0..8 {
            for s in 0..8 {
                let v: i64 = (0..8).map(|k| self.n[t][k] * self.n_hat[k][s]).sum();
                if v != i64::from(t == s) {
                    return Err(Error::inconsistency("n is not the inverse of n_hat"));
                }
            }
        }
        Ok(())
    }
}

/// `Σ_σ k_σ·L(σ)` aligned to the weights of `target`, truncated to its depth.
fn combine(target: &CharacterSeries, coeffs: &GrothVector, l: &[CharacterSeries]) -> Result<Vec<ClassFunction>> {
    let mut out = vec![ClassFunction::zero(); target.terms.len()];
    for s in IrrepLabel::ALL {
        let k = coeffs.get(s);
        if k == 0 {
            continue;
        }
        for (n, slot) in out.iter_mut().enumerate() {
            let term = l[s.index()].term_at(&target.weight(n)).ok_or_else(|| {
                Error::domain(format!("series of L({s}) is too short for degree {n} of {}", target.tau))
            })?;
            *slot = slot.clone() + term.scale_int(k);
        }
    }
    Ok(out)
}

/// Greedy peeling: the lowest nonzero weight of `M(τ) − Σ k_σ L(σ)` must be a
/// genuine combination of `σ` with that lowest weight, which is then removed.
fn peel_row(
    tau: IrrepLabel,
    m: &CharacterSeries,
    l: &[CharacterSeries],
    h: &[Rational],
) -> Result<GrothVector> {
    let mut coeffs = GrothVector::unit(tau);
    let mut deficit: Vec<ClassFunction> = m.terms.clone();
    let taken = combine(m, &coeffs, l)?;
    for (d, t) in deficit.iter_mut().zip(taken) {
        *d = d.clone() - t;
    }
    for n in 0..deficit.len() {
        if deficit[n].is_zero() {
            continue;
        }
        let alpha = m.weight(n);
        let mult = deficit[n].decompose_virtual()?;
        let mut step = GrothVector::zero();
        for s in IrrepLabel::ALL {
            let k = mult.get(s);
            if k == 0 {
                continue;
            }
            if k < 0 || h[s.index()] != alpha || s == tau {
                return Err(Error::inconsistency(format!(
                    "truncation insufficient or data inconsistent: M({tau}) at weight {} has {k}·{s} unaccounted for",
                    format_rational(&alpha)
                )));
            }
            step.0[s.index()] = k;
        }
        let sub = combine(m, &step, l)?;
        for (d, t) in deficit.iter_mut().zip(sub) {
            *d = d.clone() - t;
        }
        coeffs = coeffs + step;
    }
    Ok(coeffs)
}

/// Computes `n̂` by peeling the graded `L`-characters, then `n` by inversion.
pub fn decomposition_matrix(c: &Rational, depth: usize) -> Result<DecompositionMatrix> {
    let l = graded_l_characters(c, depth)?;
    decomposition_from_series(c, depth, &l)
}

/// As [`decomposition_matrix`], from precomputed `L`-characters.
pub fn decomposition_from_series(c: &Rational, depth: usize, l: &[CharacterSeries]) -> Result<DecompositionMatrix> {
    let h = weights(c);
    for block in blocks(c) {
        for &t in &block {
            for &s in &block {
                let gap = to_i64(&(&h[s.index()] - &h[t.index()])).expect("same block");
                if gap > depth as i64 {
                    return Err(Error::domain(format!(
                        "truncation insufficient: depth {depth} does not reach L({s}) from M({t}) (gap {gap})"
                    )));
                }
            }
        }
    }
    let mut n_hat: IntMatrix = [[0; 8]; 8];
    for tau in IrrepLabel::ALL {
        let m = m_character(tau, c, depth);
        n_hat[tau.index()] = peel_row(tau, &m, l, &h)?.0;
    }
    let dm = DecompositionMatrix::from_n_hat(c, depth, n_hat)?;
    verify_reconstruction(&dm, l)?;
    Ok(dm)
}

/// `Σ_σ n̂_{τσ} ch L(σ) = ch M(τ)` weight by weight through the depth.
pub fn verify_reconstruction(dm: &DecompositionMatrix, l: &[CharacterSeries]) -> Result<()> {
    for tau in IrrepLabel::ALL {
        let m = m_character(tau, &dm.c, dm.depth);
        let sum = combine(&m, &dm.m_in_l(tau), l)?;
        if sum != m.terms {
            return Err(Error::inconsistency(format!("reconstruction of M({tau}) fails")));
        }
    }
    Ok(())
}

/// Finite-dimensional `L_c(τ)` and their dimensions. A series counts as
/// finite once three consecutive degrees vanish; its `n`-row must then lie
/// in the A-matrix nullspace.
pub fn finite_dimensionals(c: &Rational, depth: usize) -> Result<BTreeMap<IrrepLabel, i64>> {
    let l = graded_l_characters(c, depth)?;
    let dm = decomposition_from_series(c, depth, &l)?;
    finite_from_series(&dm, &l)
}

pub fn finite_from_series(dm: &DecompositionMatrix, l: &[CharacterSeries]) -> Result<BTreeMap<IrrepLabel, i64>> {
    let mut out = BTreeMap::new();
    for tau in IrrepLabel::ALL {
        let s = &l[tau.index()];
        if s.vanishing_start().is_none() {
            continue;
        }
        if !in_a_nullspace(&dm.c, &dm.l_in_m(tau)) {
            return Err(Error::inconsistency(format!(
                "L({tau}) has vanishing graded pieces but its n-row {} is not in the A-matrix nullspace",
                dm.l_in_m(tau)
            )));
        }
        out.insert(tau, s.total_dimension());
    }
    Ok(out)
}

/// `[L(ε)]` for the rank-one parabolic `Z/2` at parameter `c`, as
/// coefficients of `(M(ε₊), M(ε₋))`.
///
/// On `M(ε) = C[x]` the Dunkl operator sends `x^m` to
/// `(m − c·ε·(1 − (−1)^m)) x^{m−1}`; the first zero coefficient cuts off a
/// submodule `x^m C[x] ≅ M((−1)^m ε)`.
pub fn rank_one_simple(eps: ParabolicChar, c: &Rational) -> [i64; 2] {
    let sign = match eps {
        ParabolicChar::Trivial => 1,
        ParabolicChar::Sign => -1,
    };
    let own = if sign == 1 { 0 } else { 1 };
    let mut out = [0i64; 2];
    out[own] = 1;
    let bound = to_i64(&(c.abs() * Rational::from_integer(2.into())).ceil()).unwrap_or(0);
    for m in 1..=bound.max(0) {
        let odd = m % 2 == 1;
        let coeff = Rational::from_integer(m.into())
            - c * Rational::from_integer((if odd { 2 * sign } else { 0 }).into());
        if coeff == Rational::from_integer(0.into()) {
            let other = if odd { 1 - own } else { own };
            out[other] -= 1;
            break;
        }
    }
    out
}

/// `Ind(L(ε))` in the `M`- and `L`-bases of `O_c(G12)`.
#[derive(Clone, Debug, Serialize)]
pub struct InductionReport {
    pub epsilon: &'static str,
    pub parabolic_simple: [i64; 2],
    pub m_coefficients: GrothVector,
    pub l_coefficients: GrothVector,
}

/// Induces both rank-one simples and expands them through `n̂`; a negative
/// `L`-coefficient contradicts exactness of induction.
pub fn induction_check(dm: &DecompositionMatrix) -> Result<Vec<InductionReport>> {
    let mut out = Vec::new();
    for (eps, name) in [(ParabolicChar::Trivial, "+"), (ParabolicChar::Sign, "-")] {
        let simple = rank_one_simple(eps, &dm.c);
        let plus = induce_from_parabolic(ParabolicChar::Trivial);
        let minus = induce_from_parabolic(ParabolicChar::Sign);
        let m = GrothVector(std::array::from_fn(|i| simple[0] * plus.0[i] + simple[1] * minus.0[i]));
        let l = dm.to_l_basis(&m);
        if let Some(s) = IrrepLabel::ALL.iter().find(|s| l.get(**s) < 0) {
            return Err(Error::inconsistency(format!(
                "Ind(L(eps{name})) has negative multiplicity {} of L({s})",
                l.get(*s)
            )));
        }
        out.push(InductionReport {
            epsilon: name,
            parabolic_simple: simple,
            m_coefficients: m,
            l_coefficients: l,
        });
    }
    Ok(out)
}

//! Moving Grothendieck data and characters between parameters: the sign flip
//! `c → −c`, the scaling permutations `1/d → r/d`, and the aspherical scan
//! built on top of them.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::decomposition::{decomposition_matrix, DecompositionMatrix, IntMatrix};
use super::series::CharacterSeries;
use super::DEFAULT_DEPTH;
use crate::arith::rational::{rat, to_i64, Rational};
use crate::arith::{CycNum, UnityRoot};
use crate::chars::{molien_coefficients, sym_power_characters, ClassFunction};
use crate::cherednik::lowest_weight;
use crate::error::{Error, Result};
use crate::group::{IrrepLabel, G12};
use crate::hecke::is_semisimple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum TransportKind {
    SignFlip,
    Scaling { d: u32, r: u32 },
}

/// A relabelling `φ` of `Irr(W)` together with the Galois twist `γ` applied
/// to transported characters (`conjugate` is true for complex conjugation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportMap {
    pub kind: TransportKind,
    pub permutation: [IrrepLabel; 8],
    pub conjugate: bool,
}

impl TransportMap {
    pub fn apply(&self, tau: IrrepLabel) -> IrrepLabel {
        self.permutation[tau.index()]
    }

    pub fn is_identity(&self) -> bool {
        IrrepLabel::ALL.iter().all(|&t| self.apply(t) == t)
    }

    /// Whether `φ` exchanges `2+` and `2−` and fixes everything else.
    pub fn is_swap(&self) -> bool {
        IrrepLabel::ALL.iter().all(|&t| {
            self.apply(t)
                == match t {
                    IrrepLabel::TwoPlus => IrrepLabel::TwoMinus,
                    IrrepLabel::TwoMinus => IrrepLabel::TwoPlus,
                    other => other,
                }
        })
    }

    fn permute(&self, m: &IntMatrix) -> IntMatrix {
        let mut out = [[0; 8]; 8];
        for t in IrrepLabel::ALL {
            for s in IrrepLabel::ALL {
                out[self.apply(t).index()][self.apply(s).index()] = m[t.index()][s.index()];
            }
        }
        out
    }

    /// `n′_{φτ,φσ} = n_{τσ}` at the target parameter, revalidated there.
    pub fn transport_matrix(&self, dm: &DecompositionMatrix, target: &Rational) -> Result<DecompositionMatrix> {
        let out = DecompositionMatrix {
            c: target.clone(),
            depth: dm.depth,
            n_hat: self.permute(&dm.n_hat),
            n: self.permute(&dm.n),
        };
        out.check_triangular()?;
        Ok(out)
    }
}

/// `τ ↦ 1− ⊗ τ`, exchanging `O_c` and `O_{−c}`.
pub fn sign_flip() -> TransportMap {
    TransportMap {
        kind: TransportKind::SignFlip,
        permutation: IrrepLabel::ALL.map(IrrepLabel::sign_twist),
        conjugate: false,
    }
}

/// The decomposition matrices at `−c`.
pub fn negate_c_transport(dm: &DecompositionMatrix) -> DecompositionMatrix {
    let flip = sign_flip();
    DecompositionMatrix {
        c: -&dm.c,
        depth: dm.depth,
        n_hat: flip.permute(&dm.n_hat),
        n: flip.permute(&dm.n),
    }
}

/// `φ_{1/d, r/d}`.
///
/// Take `g: ζ_{2d} ↦ ζ_{2d}^k` with `k ≡ r (mod d)` a unit mod `2d`, so that
/// `g(ζ_d) = ζ_d^r`, and put `η = ζ_{2d}^{−r}·g(ζ_{2d})`. Then `φ` is `g`
/// acting on the character table, followed by `(2+ 2−)` when `η = −1`. The
/// action on `Q(ζ_8)` uses the same representative `k`.
pub fn scaling_permutation(d: u32, r: u32) -> Result<TransportMap> {
    if ![2, 3, 4, 12].contains(&d) {
        return Err(Error::domain(format!("scaling is defined for d in {{2,3,4,12}}, got {d}")));
    }
    if r == 0 || r.gcd(&d) != 1 {
        return Err(Error::domain(format!("r = {r} must be positive and coprime to d = {d}")));
    }
    let two_d = 2 * d;
    let k = if (r % two_d).gcd(&two_d) == 1 { r % two_d } else { (r + d) % two_d };
    let eta = &UnityRoot::new(rat(-i64::from(r), i64::from(two_d))) * &UnityRoot::new(rat(i64::from(k), i64::from(two_d)));
    let flip = if eta.exponent().is_zero() {
        false
    } else if eta.exponent() == &rat(1, 2) {
        true
    } else {
        return Err(Error::inconsistency(format!("eta is not a sign for d={d}, r={r}")));
    };
    let g = G12::shared();
    let mut permutation = IrrepLabel::ALL;
    for tau in IrrepLabel::ALL {
        let image: Vec<CycNum> = g
            .character(tau)
            .iter()
            .map(|x| x.galois(i64::from(k)))
            .collect::<Result<_>>()?;
        let target = IrrepLabel::ALL
            .into_iter()
            .find(|&s| g.character(s) == image.as_slice())
            .ok_or_else(|| Error::inconsistency(format!("Galois image of χ_{tau} is not a character")))?;
        permutation[tau.index()] = target;
    }
    if flip {
        for p in permutation.iter_mut() {
            *p = match *p {
                IrrepLabel::TwoPlus => IrrepLabel::TwoMinus,
                IrrepLabel::TwoMinus => IrrepLabel::TwoPlus,
                other => other,
            };
        }
    }
    let mut map = TransportMap {
        kind: TransportKind::Scaling { d, r },
        permutation,
        conjugate: false,
    };
    if !(map.is_identity() || map.is_swap()) {
        return Err(Error::inconsistency(format!("unexpected scaling permutation for d={d}, r={r}")));
    }
    map.conjugate = map.is_swap();
    Ok(map)
}

/// `[1, −tr_V(w), det_V(w)]`, the coefficients of `det_V(1 − w x)` at a class.
fn det_coefficients(v: IrrepLabel, class: usize) -> [CycNum; 3] {
    let g = G12::shared();
    let m = &g.irrep(v).images[g.classes()[class].representative];
    let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
    [g.field().one(), -m.trace(), det]
}

/// Character of `L_{r/d}(φτ)` from that of `L_{1/d}(τ)`:
/// `det_{φ(h*)}(1 − w t^r)/det_{h*}(1 − w t) · t^{1−r} · γ(ch(t^r, w))`.
///
/// When the input is not yet seen to vanish, only degrees below
/// `r·(depth_in + 1)` are determined; asking for more is an error.
pub fn transport_character(series: &CharacterSeries, r: u32, depth: usize) -> Result<CharacterSeries> {
    let d = u32::try_from(series.c.denom().clone())
        .map_err(|_| Error::domain("parameter denominator too large"))?;
    if series.c != rat(1, i64::from(d)) {
        return Err(Error::domain("transport_character expects a series at c = 1/d"));
    }
    let map = scaling_permutation(d, r)?;
    let ru = r as usize;
    if series.vanishing_start().is_none() && depth >= ru * (series.depth() + 1) {
        return Err(Error::domain(format!(
            "depth {depth} exceeds what a depth-{} series determines at r = {r}",
            series.depth()
        )));
    }
    let g = G12::shared();
    let dual = map.apply(IrrepLabel::TwoMinus);
    let mut terms = vec![ClassFunction::zero(); depth + 1];
    for class in 0..g.classes().len() {
        let det = det_coefficients(dual, class);
        let molien = molien_coefficients(class, depth);
        let input: Vec<CycNum> = series
            .at_class(class)
            .into_iter()
            .map(|x| if map.conjugate { x.conj() } else { x })
            .collect();
        // numerator polynomial in t: γ(ch)(t^r)·det(1 − w t^r), degrees ≤ depth
        let mut num = vec![g.field().zero(); depth + 1];
        for (n, a) in input.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, p) in det.iter().enumerate() {
                let e = ru * (n + j);
                if e <= depth {
                    num[e] = &num[e] + &(a * p);
                }
            }
        }
        for (m, slot) in terms.iter_mut().enumerate() {
            let v = (0..=m).fold(g.field().zero(), |acc, e| {
                if num[e].is_zero() {
                    acc
                } else {
                    acc + &num[e] * &molien[m - e]
                }
            });
            slot.0[class] = v;
        }
    }
    let r_rat = Rational::from_integer(r.into());
    Ok(CharacterSeries {
        tau: map.apply(series.tau),
        c: &series.c * &r_rat,
        lowest: &series.lowest * &r_rat + Rational::from_integer(1.into()) - &r_rat,
        terms,
    })
}

/// Decomposition matrices at any `c`: semisimple parameters give the
/// identity, otherwise `1/d` is computed and moved by scaling and sign flip.
pub fn decomposition_matrix_at(c: &Rational, depth: usize) -> Result<DecompositionMatrix> {
    if is_semisimple(c) {
        return Ok(DecompositionMatrix::identity(c, depth));
    }
    let a = c.abs();
    let r = u32::try_from(a.numer().clone()).map_err(|_| Error::domain("parameter too large"))?;
    let d = u32::try_from(a.denom().clone()).map_err(|_| Error::domain("parameter too large"))?;
    let base = decomposition_matrix(&rat(1, i64::from(d)), depth)?;
    let scaled = if r == 1 {
        base
    } else {
        scaling_permutation(d, r)?.transport_matrix(&base, &a)?
    };
    Ok(if c.is_negative() { negate_c_transport(&scaled) } else { scaled })
}

/// Multiplicity of the trivial representation in `L_c(τ)` at weights
/// `h_c(τ), h_c(τ)+1, …, h_c(τ)+len−1`, from `[L(τ)] = Σ n_{τσ}[M(σ)]`.
pub fn trivial_isotypic_series(dm: &DecompositionMatrix, tau: IrrepLabel, len: usize) -> Vec<i64> {
    let sym = sym_power_characters(len);
    let trivial = ClassFunction::irrep(IrrepLabel::OnePlus);
    let h_tau = lowest_weight(tau, &dm.c);
    let mut out = vec![0i64; len];
    for s in IrrepLabel::ALL {
        let k = dm.n[tau.index()][s.index()];
        if k == 0 {
            continue;
        }
        let gap = to_i64(&(lowest_weight(s, &dm.c) - &h_tau)).expect("support lies in the block") as usize;
        let chi = ClassFunction::irrep(s);
        for (j, slot) in out.iter_mut().enumerate().skip(gap) {
            let m = (&sym[j - gap] * &chi).inner(&trivial);
            let m = to_i64(&m.to_rational().expect("rational multiplicity")).expect("integer multiplicity");
            *slot += k * m;
        }
    }
    out
}

/// Simples of `O_c` with no `W`-invariants. The invariant Hilbert series of
/// `L_c(τ)` is a polynomial of degree at most `spread + 12` over
/// `(1 − t^6)(1 − t^8)`, so it vanishes iff its first `spread + 13`
/// coefficients do.
pub fn aspherical_witnesses(dm: &DecompositionMatrix, len: usize) -> Result<Vec<IrrepLabel>> {
    let mut out = Vec::new();
    for tau in IrrepLabel::ALL {
        let h_tau = lowest_weight(tau, &dm.c);
        let spread = IrrepLabel::ALL
            .iter()
            .filter(|s| dm.n[tau.index()][s.index()] != 0)
            .map(|&s| to_i64(&(lowest_weight(s, &dm.c) - &h_tau)).expect("block"))
            .max()
            .unwrap_or(0) as usize;
        let need = spread + 13;
        if need > len {
            return Err(Error::domain(format!(
                "series length {len} is below the bound {need} for L({tau}) at c = {}",
                crate::arith::format_rational(&dm.c)
            )));
        }
        if trivial_isotypic_series(dm, tau, need).iter().all(|&x| x == 0) {
            out.push(tau);
        }
    }
    Ok(out)
}

/// The candidates at which some simple module has no `W`-invariants.
pub fn aspherical_scan(candidates: &[Rational], len: usize) -> Result<BTreeSet<Rational>> {
    let mut out = BTreeSet::new();
    for c in candidates {
        let dm = decomposition_matrix_at(c, DEFAULT_DEPTH)?;
        if !aspherical_witnesses(&dm, len)?.is_empty() {
            out.insert(c.clone());
        }
    }
    Ok(out)
}

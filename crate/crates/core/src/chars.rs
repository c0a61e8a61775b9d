//! Class functions on G12: inner products, decompositions, symmetric powers
//! of `h*`, and induction from the rank-one parabolic `⟨e⟩`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::arith::{CycNum, Rational};
use crate::arith::rational::to_i64;
use crate::error::{Error, Result};
use crate::group::{IrrepLabel, G12};

/// A function on the eight conjugacy classes, in the fixed class order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction(pub Vec<CycNum>);

impl ClassFunction {
    pub fn zero() -> Self {
        let k = G12::shared().field();
        ClassFunction(vec![k.zero(); 8])
    }

    pub fn irrep(l: IrrepLabel) -> Self {
        ClassFunction(G12::shared().character(l).to_vec())
    }

    /// `Σ_τ v_τ χ_τ` for an integer vector over `Irr(W)`.
    pub fn from_groth(v: &GrothVector) -> Self {
        IrrepLabel::ALL
            .iter()
            .filter(|l| v.0[l.index()] != 0)
            .fold(Self::zero(), |acc, &l| acc + Self::irrep(l).scale_int(v.0[l.index()]))
    }

    pub fn values(&self) -> &[CycNum] {
        &self.0
    }

    /// Value at the identity.
    pub fn degree(&self) -> CycNum {
        self.0[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycNum::is_zero)
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = CycNum::from_int(k);
        ClassFunction(self.0.iter().map(|x| x * &k).collect())
    }

    pub fn map(&self, f: impl Fn(&CycNum) -> CycNum) -> Self {
        ClassFunction(self.0.iter().map(f).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(CycNum::conj)
    }

    /// `(1/48) Σ_C |C| a(C) conj(b(C))`.
    pub fn inner(&self, other: &ClassFunction) -> CycNum {
        let g = G12::shared();
        let sizes = g.class_sizes();
        let mut acc = g.field().zero();
        for c in 0..8 {
            if self.0[c].is_zero() || other.0[c].is_zero() {
                continue;
            }
            acc = acc + CycNum::from_int(sizes[c] as i64) * &self.0[c] * other.0[c].conj();
        }
        acc.scale(&Rational::new(1.into(), (g.order() as i64).into()))
    }

    /// Integer multiplicities of a virtual character.
    pub fn decompose_virtual(&self) -> Result<GrothVector> {
        let mut out = [0i64; 8];
        for l in IrrepLabel::ALL {
            let m = self.inner(&ClassFunction::irrep(l));
            let v = m
                .to_rational()
                .and_then(|r| to_i64(&r))
                .ok_or_else(|| Error::domain(format!("multiplicity of {l} is not an integer: {m}")))?;
            out[l.index()] = v;
        }
        Ok(GrothVector(out))
    }

    /// Multiplicities of a genuine character; negative entries are rejected.
    pub fn decompose(&self) -> Result<GrothVector> {
        let v = self.decompose_virtual()?;
        if let Some(l) = IrrepLabel::ALL.iter().find(|l| v.0[l.index()] < 0) {
            return Err(Error::domain(format!("negative multiplicity of {l}")));
        }
        Ok(v)
    }
}

impl Add for ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: ClassFunction) -> ClassFunction {
        ClassFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: ClassFunction) -> ClassFunction {
        ClassFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a * b).collect())
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        ClassFunction(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Integer coordinates over `Irr(W)` in the order 1+, 1−, 2, 2+, 2−, 3+, 3−, 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GrothVector(pub [i64; 8]);

impl GrothVector {
    pub fn zero() -> Self {
        GrothVector([0; 8])
    }

    pub fn unit(l: IrrepLabel) -> Self {
        let mut v = [0; 8];
        v[l.index()] = 1;
        GrothVector(v)
    }

    pub fn get(&self, l: IrrepLabel) -> i64 {
        self.0[l.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Total dimension `Σ v_τ dim τ`.
    pub fn dimension(&self) -> i64 {
        IrrepLabel::ALL
            .iter()
            .map(|l| self.0[l.index()] * l.dim() as i64)
            .sum()
    }

    /// Renders as a signed sum such as `M(1+) - M(2-) + M(1-)`, listing
    /// terms in the given order.
    pub fn format_terms(&self, symbol: &str, order: &[IrrepLabel]) -> String {
        let mut out = String::new();
        for &l in order {
            let k = self.0[l.index()];
            if k == 0 {
                continue;
            }
            let sign = if k < 0 { "-" } else { "+" };
            if out.is_empty() {
                if k < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if k.abs() != 1 {
                out.push_str(&format!("{}", k.abs()));
            }
            out.push_str(&format!("{symbol}({l})"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for GrothVector {
    type Output = GrothVector;
    fn add(self, rhs: GrothVector) -> GrothVector {
        GrothVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for GrothVector {
    type Output = GrothVector;
    fn sub(self, rhs: GrothVector) -> GrothVector {
        GrothVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl fmt::Display for GrothVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for GrothVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Character of `h*`.
pub fn dual_reflection_character() -> ClassFunction {
    let g = G12::shared();
    ClassFunction(g.classes().iter().map(|c| g.dual_action(c.representative).trace()).collect())
}

/// Characters of `S^0 h*, …, S^n h*`.
///
/// Uses `χ_{S^k} = tr·χ_{S^{k-1}} − det·χ_{S^{k-2}}` for the action on `h*`,
/// which is the recursion of complete homogeneous symmetric polynomials in
/// the two eigenvalues.
pub fn sym_power_characters(n: usize) -> Vec<ClassFunction> {
    let g = G12::shared();
    let k = g.field();
    let reps: Vec<usize> = g.classes().iter().map(|c| c.representative).collect();
    let tr: Vec<CycNum> = reps.iter().map(|&r| g.dual_action(r).trace()).collect();
    let det: Vec<CycNum> = reps
        .iter()
        .map(|&r| {
            let m = g.dual_action(r);
            m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
        })
        .collect();
    let mut out: Vec<ClassFunction> = Vec::with_capacity(n + 1);
    out.push(ClassFunction(vec![k.one(); 8]));
    if n >= 1 {
        out.push(ClassFunction(tr.clone()));
    }
    for d in 2..=n {
        let v = (0..8)
            .map(|c| &tr[c] * &out[d - 1].0[c] - &det[c] * &out[d - 2].0[c])
            .collect();
        out.push(ClassFunction(v));
    }
    out
}

/// Character of `S^n h*`.
pub fn sym_power_character(n: usize) -> ClassFunction {
    sym_power_characters(n).pop().expect("at least degree 0")
}

/// Decomposition of `S^n h* ⊗ τ` into irreducibles.
pub fn sym_power_decompose(n: usize, tau: IrrepLabel) -> GrothVector {
    (&sym_power_character(n) * &ClassFunction::irrep(tau))
        .decompose()
        .expect("tensor product of genuine characters")
}

/// Multiplicities `(m₊, m₋)` of the trivial and sign characters of `⟨e⟩`
/// in the restriction of `τ`.
pub fn restrict_to_parabolic(tau: IrrepLabel) -> (i64, i64) {
    let g = G12::shared();
    let chi_e = g.character(tau)[2].to_rational().expect("rational on reflections");
    let chi_e = to_i64(&chi_e).expect("integer on reflections");
    let d = tau.dim() as i64;
    ((d + chi_e) / 2, (d - chi_e) / 2)
}

/// Characters of the rank-one parabolic `⟨e⟩ ≅ Z/2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ParabolicChar {
    Trivial,
    Sign,
}

/// `Σ_τ m_ε(τ) [M(τ)]`, the Grothendieck image of inducing the standard
/// module of `⟨e⟩` with lowest space `ε`.
pub fn induce_from_parabolic(eps: ParabolicChar) -> GrothVector {
    GrothVector(std::array::from_fn(|i| {
        let (p, m) = restrict_to_parabolic(IrrepLabel::from_index(i));
        match eps {
            ParabolicChar::Trivial => p,
            ParabolicChar::Sign => m,
        }
    }))
}

/// Coefficients of `1/det_{h*}(1 − t w)` up to `t^n` at the class `c`,
/// by truncated power-series division.
pub fn molien_coefficients(class: usize, n: usize) -> Vec<CycNum> {
    let g = G12::shared();
    let m = g.dual_action(g.classes()[class].representative);
    let tr = m.trace();
    let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
    // denominator 1 − tr·t + det·t²
    let den = [g.field().one(), -tr, det];
    let mut out: Vec<CycNum> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut v = if k == 0 { g.field().one() } else { g.field().zero() };
        for j in 1..=2.min(k) {
            v = v - &den[j] * &out[k - j];
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groth_formatting() {
        let v = GrothVector([1, 1, 0, 0, -1, 0, 0, 0]);
        let order = [IrrepLabel::OnePlus, IrrepLabel::TwoMinus, IrrepLabel::OneMinus];
        assert_eq!(v.format_terms("M", &order), "M(1+) - M(2-) + M(1-)");
        assert_eq!(GrothVector([0, 0, 0, 0, 0, -2, 0, 0]).format_terms("L", &IrrepLabel::ALL), "-2L(3+)");
        assert_eq!(v.dimension(), 0);
    }
}

//! The 16×8 finiteness-test matrix: rows `(g, i)` for a class `g` and a root
//! `t_{g,i}` of `det_{h*}(1 − g t)`, columns `σ ∈ Irr(W)`, entries
//! `t_{g,i}^{h_c(σ)} χ_σ(g)`.

use num_integer::Integer;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::rational::to_i64;
use crate::arith::{span_rref, CycNum, ExactMatrix, Rational, UnityRoot};
use crate::chars::GrothVector;
use crate::cherednik::lowest_weight;
use crate::group::{IrrepLabel, CLASS_NAMES, G12};

/// Row label: class index and the root `t` (reciprocal of an eigenvalue on `h*`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARow {
    pub class: usize,
    pub t: UnityRoot,
}

#[derive(Clone, Debug)]
pub struct AMatrix {
    pub c: Rational,
    pub rows: Vec<ARow>,
    pub entries: ExactMatrix,
}

/// Rows ordered by class, then by the exponent of `t` in `[0, 1)`.
pub fn a_rows() -> Vec<ARow> {
    let g = G12::shared();
    let mut rows = Vec::with_capacity(16);
    for (ci, cl) in g.classes().iter().enumerate() {
        let mut ts: Vec<UnityRoot> = g
            .dual_eigenvalues(cl.representative)
            .iter()
            .map(UnityRoot::inv)
            .collect();
        ts.sort();
        rows.extend(ts.into_iter().map(|t| ARow { class: ci, t }));
    }
    rows
}

pub fn build_a_matrix(c: &Rational) -> AMatrix {
    let g = G12::shared();
    let rows = a_rows();
    let weights: Vec<Rational> = IrrepLabel::ALL.iter().map(|&s| lowest_weight(s, c)).collect();
    let entries = ExactMatrix::from_fn(rows.len(), 8, |r, s| {
        let row = &rows[r];
        let chi = &g.character(IrrepLabel::from_index(s))[row.class];
        if chi.is_zero() {
            return g.field().zero();
        }
        row.t.pow(&weights[s]).to_cyc() * chi
    });
    AMatrix {
        c: c.clone(),
        rows,
        entries,
    }
}

/// Reduced echelon basis of the right nullspace of `A` at `c`.
pub fn a_nullspace(c: &Rational) -> Vec<Vec<CycNum>> {
    let a = build_a_matrix(c);
    span_rref(&a.entries.echelon().nullspace())
}

/// The nullspace basis as primitive integer vectors, when it is rational.
pub fn a_nullspace_integral(c: &Rational) -> Option<Vec<GrothVector>> {
    a_nullspace(c).iter().map(|v| primitive_integer(v)).collect()
}

fn primitive_integer(v: &[CycNum]) -> Option<GrothVector> {
    let rats: Vec<Rational> = v.iter().map(CycNum::to_rational).collect::<Option<_>>()?;
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out = [0i64; 8];
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for (o, x) in out.iter_mut().zip(&ints) {
        let mut q = x / &g;
        if lead_negative {
            q = -q;
        }
        *o = to_i64(&Rational::from_integer(q))?;
    }
    Some(GrothVector(out))
}

/// Whether `A·v = 0` at `c`.
pub fn in_a_nullspace(c: &Rational, v: &GrothVector) -> bool {
    let a = build_a_matrix(c);
    let k = G12::shared().field();
    let col: Vec<CycNum> = v.0.iter().map(|&x| k.from_int(x)).collect();
    a.entries.mul_vec(&col).iter().all(CycNum::is_zero)
}

#[derive(Serialize)]
pub struct ARowReport {
    pub class: &'static str,
    pub t_exponent: String,
}

/// Serializable view of the matrix and its nullspace.
#[derive(Serialize)]
pub struct AMatrixReport {
    pub c: String,
    pub rows: Vec<ARowReport>,
    pub matrix: ExactMatrix,
    pub nullspace: Vec<Vec<CycNum>>,
}

impl AMatrix {
    pub fn report(&self) -> AMatrixReport {
        AMatrixReport {
            c: crate::arith::format_rational(&self.c),
            rows: self
                .rows
                .iter()
                .map(|r| ARowReport {
                    class: CLASS_NAMES[r.class],
                    t_exponent: crate::arith::format_rational(r.t.exponent()),
                })
                .collect(),
            matrix: self.entries.clone(),
            nullspace: span_rref(&self.entries.echelon().nullspace()),
        }
    }
}

//! Standard modules `M_c(τ) = S h* ⊗ τ` degree by degree: Dunkl operators,
//! the contravariant form `B_n`, its ranks, and singular vectors.
//!
//! A degree-`n` vector is stored in the basis `x1^{n-j} x2^j ⊗ v_k`, flattened
//! to index `j·dim τ + k`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{CycNum, ExactMatrix, Rational};
use crate::chars::{sym_power_character, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{IrrepLabel, ReflectionData, G12};

/// `h_c(τ) = 1 − c·Σ_s s|_τ`.
pub fn lowest_weight(tau: IrrepLabel, c: &Rational) -> Rational {
    Rational::from_integer(1.into()) - c * G12::shared().central_reflection_sum(tau)
}

/// The pair `(c, τ)` determining `M_c(τ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleContext {
    pub c: Rational,
    pub tau: IrrepLabel,
}

/// A homogeneous element of `M_c(τ)` of the given degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVec {
    pub degree: usize,
    pub coeffs: Vec<CycNum>,
}

/// The matrix of `B_n`: rows index `S^n h* ⊗ τ`, columns index `S^n h ⊗ τ*`
/// in the matching monomial basis and the dual basis of `τ`.
#[derive(Clone, Debug)]
pub struct FormMatrix {
    pub degree: usize,
    pub matrix: ExactMatrix,
}

/// Contragredient label: `2+` and `2−` are exchanged, the rest are self-dual.
pub fn dual_label(tau: IrrepLabel) -> IrrepLabel {
    match tau {
        IrrepLabel::TwoPlus => IrrepLabel::TwoMinus,
        IrrepLabel::TwoMinus => IrrepLabel::TwoPlus,
        other => other,
    }
}

/// Product of homogeneous binary forms given by coefficients of `x2^k`.
fn poly_mul(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let k = G12::shared().field();
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

/// `S^n(A)` for the linear substitution `x_i ↦ A_{1i} x1 + A_{2i} x2`;
/// column `j` holds the image of `x1^{n-j} x2^j`.
pub fn sym_power_matrix(a: &ExactMatrix, n: usize) -> ExactMatrix {
    let k = G12::shared().field();
    let l1 = vec![a.get(0, 0).clone(), a.get(1, 0).clone()];
    let l2 = vec![a.get(0, 1).clone(), a.get(1, 1).clone()];
    let mut pow1 = vec![vec![k.one()]];
    let mut pow2 = vec![vec![k.one()]];
    for i in 1..=n {
        pow1.push(poly_mul(&pow1[i - 1], &l1));
        pow2.push(poly_mul(&pow2[i - 1], &l2));
    }
    let cols: Vec<Vec<CycNum>> = (0..=n).map(|j| poly_mul(&pow1[n - j], &pow2[j])).collect();
    ExactMatrix::from_fn(n + 1, n + 1, |r, c| cols[c][r].clone())
}

/// `∂/∂x_i : S^n → S^{n-1}` as an `n × (n+1)` matrix.
fn partial_matrix(i: usize, n: usize) -> ExactMatrix {
    let k = G12::shared().field();
    let mut m = ExactMatrix::zeros(n, n + 1, k);
    for j in 0..=n {
        // x1^{n-j} x2^j
        if i == 0 && j < n {
            m.set(j, j, k.from_int((n - j) as i64));
        }
        if i == 1 && j > 0 {
            m.set(j - 1, j, k.from_int(j as i64));
        }
    }
    m
}

/// `(1 − s)/α : S^n → S^{n-1}`, where `s_dual` is the action of `s` on `h*`
/// and `alpha` the coordinates of `α` in the basis `x1, x2`.
pub fn delta_matrix(alpha: &[CycNum; 2], s_dual: &ExactMatrix, n: usize) -> Result<ExactMatrix> {
    let k = G12::shared().field();
    let s = sym_power_matrix(s_dual, n);
    let mut out = ExactMatrix::zeros(n, n + 1, k);
    let (a1, a2) = (&alpha[0], &alpha[1]);
    let a1_inv = a1.inv();
    let a2_inv = a2.inv();
    for col in 0..=n {
        // g = f − s.f for f = x1^{n-col} x2^col
        let g: Vec<CycNum> = (0..=n)
            .map(|r| {
                let base = if r == col { k.one() } else { k.zero() };
                base - s.get(r, col)
            })
            .collect();
        let mut q = vec![k.zero(); n];
        let exact = if let Some(inv) = &a1_inv {
            for j in 0..n {
                let prev = if j == 0 { k.zero() } else { a2 * &q[j - 1] };
                q[j] = (&g[j] - &prev) * inv;
            }
            let last = if n == 0 { k.zero() } else { a2 * &q[n - 1] };
            g[n] == last
        } else {
            let inv = a2_inv.as_ref().ok_or_else(|| Error::inconsistency("zero root"))?;
            for j in 0..n {
                q[j] = &g[j + 1] * inv;
            }
            g[0].is_zero()
        };
        if !exact {
            return Err(Error::inconsistency(
                "division by a root left a nonzero remainder",
            ));
        }
        for (r, v) in q.into_iter().enumerate() {
            out.set(r, col, v);
        }
    }
    Ok(out)
}

/// Degree-`n` data independent of `τ` and `c`.
struct DegreeData {
    partial: [ExactMatrix; 2],
    delta: Vec<ExactMatrix>,
    action: Vec<ExactMatrix>,
}

fn degree_data(n: usize) -> Arc<DegreeData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return d.clone();
    }
    let g = G12::shared();
    let delta = if n == 0 {
        Vec::new()
    } else {
        g.reflections()
            .iter()
            .map(|r| delta_matrix(&r.alpha, g.dual_action(r.element), n))
            .collect::<Result<Vec<_>>>()
            .expect("reflection data divides exactly")
    };
    let partial = if n == 0 {
        [ExactMatrix::zeros(0, 1, g.field()), ExactMatrix::zeros(0, 1, g.field())]
    } else {
        [partial_matrix(0, n), partial_matrix(1, n)]
    };
    let action = (0..g.order()).map(|w| sym_power_matrix(g.dual_action(w), n)).collect();
    let data = Arc::new(DegreeData { partial, delta, action });
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .entry(n)
        .or_insert(data)
        .clone()
}

/// `E_i = Σ_s (α_s, y_i) Δ_s ⊗ τ(s)` on degree `n`, so that
/// `D_{y_i} = ∂_i ⊗ 1 − c·E_i`.
fn reflection_terms(tau: IrrepLabel, n: usize) -> Arc<[ExactMatrix; 2]> {
    static CACHE: OnceLock<Mutex<HashMap<(IrrepLabel, usize), Arc<[ExactMatrix; 2]>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&(tau, n)) {
        return e.clone();
    }
    let g = G12::shared();
    let terms = reflection_terms_with(tau, n, g.reflections(), &degree_data(n).delta);
    let terms = Arc::new(terms);
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .entry((tau, n))
        .or_insert(terms)
        .clone()
}

fn reflection_terms_with(
    tau: IrrepLabel,
    n: usize,
    refl: &[ReflectionData],
    delta: &[ExactMatrix],
) -> [ExactMatrix; 2] {
    let g = G12::shared();
    let d = tau.dim();
    let rep = g.irrep(tau);
    let mut e = [
        ExactMatrix::zeros(n * d, (n + 1) * d, g.field()),
        ExactMatrix::zeros(n * d, (n + 1) * d, g.field()),
    ];
    for (r, dl) in refl.iter().zip(delta) {
        let block = dl.kron(&rep.images[r.element]);
        for (i, ei) in e.iter_mut().enumerate() {
            if !r.alpha[i].is_zero() {
                *ei = ei.add(&block.scale(&r.alpha[i]));
            }
        }
    }
    e
}

/// Cached sequences `B_0, …, B_n` keyed by `(c, τ)`.
type FormSeq = Arc<Mutex<Vec<ExactMatrix>>>;

fn form_cache() -> &'static Mutex<HashMap<ModuleContext, FormSeq>> {
    static CACHE: OnceLock<Mutex<HashMap<ModuleContext, FormSeq>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl ModuleContext {
    pub fn new(tau: IrrepLabel, c: Rational) -> Self {
        ModuleContext { c, tau }
    }

    pub fn dim_tau(&self) -> usize {
        self.tau.dim()
    }

    /// `dim S^n h* ⊗ τ`.
    pub fn piece_dim(&self, n: usize) -> usize {
        (n + 1) * self.dim_tau()
    }

    pub fn lowest_weight(&self) -> Rational {
        lowest_weight(self.tau, &self.c)
    }

    fn c_num(&self) -> CycNum {
        G12::shared().field().from_rational(&self.c)
    }

    /// Matrices of `D_{y_1}, D_{y_2} : M[n] → M[n-1]`.
    pub fn dunkl_matrices(&self, n: usize) -> [ExactMatrix; 2] {
        let g = G12::shared();
        let d = self.dim_tau();
        if n == 0 {
            let z = ExactMatrix::zeros(0, d, g.field());
            return [z.clone(), z];
        }
        let data = degree_data(n);
        let e = reflection_terms(self.tau, n);
        self.assemble_dunkl(&data.partial, &e)
    }

    /// Dunkl matrices built from caller-supplied reflection data.
    pub fn dunkl_matrices_with(&self, n: usize, refl: &[ReflectionData]) -> Result<[ExactMatrix; 2]> {
        let g = G12::shared();
        let delta = refl
            .iter()
            .map(|r| delta_matrix(&r.alpha, g.dual_action(r.element), n))
            .collect::<Result<Vec<_>>>()?;
        let e = reflection_terms_with(self.tau, n, refl, &delta);
        Ok(self.assemble_dunkl(&degree_data(n).partial, &e))
    }

    fn assemble_dunkl(&self, partial: &[ExactMatrix; 2], e: &[ExactMatrix; 2]) -> [ExactMatrix; 2] {
        let g = G12::shared();
        let id = ExactMatrix::identity(self.dim_tau(), g.field());
        let c = self.c_num();
        let build = |i: usize| {
            let base = partial[i].kron(&id);
            if self.c == Rational::from_integer(0.into()) {
                base
            } else {
                base.sub(&e[i].scale(&c))
            }
        };
        [build(0), build(1)]
    }

    /// `ρ(w)` on `M[n] = S^n h* ⊗ τ`.
    pub fn action_matrix(&self, w: usize, n: usize) -> ExactMatrix {
        let g = G12::shared();
        degree_data(n).action[w].kron(&g.irrep(self.tau).images[w])
    }

    pub fn dunkl_apply(&self, i: usize, u: &PolyVec) -> PolyVec {
        if u.degree == 0 {
            return PolyVec {
                degree: 0,
                coeffs: vec![G12::shared().field().zero(); self.dim_tau()],
            };
        }
        let d = &self.dunkl_matrices(u.degree)[i];
        PolyVec {
            degree: u.degree - 1,
            coeffs: d.mul_vec(&u.coeffs),
        }
    }

    /// Multiplication by the coordinate function `x_i`.
    pub fn mul_x(&self, i: usize, u: &PolyVec) -> PolyVec {
        let d = self.dim_tau();
        let n = u.degree;
        let mut out = vec![G12::shared().field().zero(); (n + 2) * d];
        for j in 0..=n {
            for k in 0..d {
                out[(j + i) * d + k] = u.coeffs[j * d + k].clone();
            }
        }
        PolyVec {
            degree: n + 1,
            coeffs: out,
        }
    }

    pub fn act(&self, w: usize, u: &PolyVec) -> PolyVec {
        PolyVec {
            degree: u.degree,
            coeffs: self.action_matrix(w, u.degree).mul_vec(&u.coeffs),
        }
    }

    /// The grading element: `Σ_i x_i D_{y_i} + 1 − c Σ_s s`.
    pub fn grading_apply(&self, u: &PolyVec) -> PolyVec {
        let g = G12::shared();
        let c = self.c_num();
        let mut acc = u.coeffs.clone();
        if u.degree > 0 {
            for i in 0..2 {
                let v = self.mul_x(i, &self.dunkl_apply(i, u));
                acc = acc.iter().zip(&v.coeffs).map(|(a, b)| a + b).collect();
            }
        }
        for r in g.reflections() {
            let v = self.act(r.element, u);
            acc = acc.iter().zip(&v.coeffs).map(|(a, b)| a - &(b * &c)).collect();
        }
        PolyVec {
            degree: u.degree,
            coeffs: acc,
        }
    }

    /// `B_0, …, B_n`, extending the cached sequence when needed.
    pub fn forms(&self, n: usize) -> Result<Vec<ExactMatrix>> {
        let seq = {
            let mut cache = form_cache().lock().unwrap_or_else(|e| e.into_inner());
            cache.entry(self.clone()).or_default().clone()
        };
        let mut seq = seq.lock().unwrap_or_else(|e| e.into_inner());
        if seq.is_empty() {
            seq.push(ExactMatrix::identity(self.dim_tau(), G12::shared().field()));
        }
        while seq.len() <= n {
            let m = seq.len() - 1;
            let next = self.next_form(&seq[m], m)?;
            seq.push(next);
        }
        Ok(seq[..=n].to_vec())
    }

    /// `B_{n+1}` from `B_n` via `B_{n+1}(u, y·v) = B_n(D_y u, v)`.
    fn next_form(&self, b: &ExactMatrix, n: usize) -> Result<ExactMatrix> {
        let d = self.dim_tau();
        let [d1, d2] = self.dunkl_matrices(n + 1);
        let left = d1.transpose().mul(b);
        let right = d2.transpose().mul(b);
        let rows = (n + 2) * d;
        for jp in 1..=n {
            for f in 0..d {
                let a = (jp - 1) * d + f;
                let bcol = jp * d + f;
                for r in 0..rows {
                    if right.get(r, a) != left.get(r, bcol) {
                        return Err(Error::inconsistency(format!(
                            "contravariant form is not well defined at degree {} for {}",
                            n + 1,
                            self.tau
                        )));
                    }
                }
            }
        }
        Ok(ExactMatrix::from_fn(rows, rows, |r, col| {
            let jp = col / d;
            let f = col % d;
            if jp <= n {
                left.get(r, col).clone()
            } else {
                right.get(r, n * d + f).clone()
            }
        }))
    }

    pub fn b_matrix(&self, n: usize) -> Result<FormMatrix> {
        let matrix = self.forms(n)?.pop().expect("nonempty");
        Ok(FormMatrix { degree: n, matrix })
    }

    /// `dim L_c(τ)[h_c(τ)+n]`, or the rank on the `σ`-isotypic part.
    pub fn b_rank(&self, n: usize, sigma: Option<IrrepLabel>) -> Result<usize> {
        let b = self.b_matrix(n)?.matrix;
        match sigma {
            None => Ok(b.rank()),
            Some(s) => {
                let p = self.isotypic_projector(s, n);
                let r = p.transpose().mul(&b).rank();
                if r % s.dim() != 0 {
                    return Err(Error::inconsistency(format!(
                        "isotypic rank {r} is not a multiple of dim {s}"
                    )));
                }
                Ok(r)
            }
        }
    }

    /// `e_σ = (dim σ/48) Σ_w conj χ_σ(w) ρ(w)` on `M[n]`.
    pub fn isotypic_projector(&self, sigma: IrrepLabel, n: usize) -> ExactMatrix {
        let g = G12::shared();
        let dim = self.piece_dim(n);
        let mut acc = ExactMatrix::zeros(dim, dim, g.field());
        for w in 0..g.order() {
            let coeff = g.character_at(sigma, w).conj();
            if coeff.is_zero() {
                continue;
            }
            acc = acc.add(&self.action_matrix(w, n).scale(&coeff));
        }
        let scale = Rational::new((sigma.dim() as i64).into(), (g.order() as i64).into());
        acc.map(|x| x.scale(&scale))
    }

    /// Character of a `W`-stable subspace given by a nullspace basis whose
    /// vectors have a 1 at their own free column and 0 at the others.
    fn subspace_character(&self, basis: &[Vec<CycNum>], free: &[usize], n: usize) -> ClassFunction {
        let g = G12::shared();
        let vals = g
            .classes()
            .iter()
            .map(|cl| {
                let rho = self.action_matrix(cl.representative, n);
                basis.iter().zip(free).fold(g.field().zero(), |acc, (v, &f)| {
                    let entry = rho
                        .row(f)
                        .iter()
                        .zip(v)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(g.field().zero(), |s, (a, b)| s + a * b);
                    acc + entry
                })
            })
            .collect();
        ClassFunction(vals)
    }

    /// Character of `M_c(τ)[h_c(τ)+n]`.
    pub fn m_piece_character(&self, n: usize) -> ClassFunction {
        &sym_power_character(n) * &ClassFunction::irrep(self.tau)
    }

    /// Character of the radical of `B_n`.
    pub fn radical_character(&self, n: usize) -> Result<ClassFunction> {
        let b = self.b_matrix(n)?.matrix;
        let e = b.transpose().echelon();
        let basis = e.nullspace();
        Ok(self.subspace_character(&basis, &e.free_columns(), n))
    }

    /// Character of `L_c(τ)[h_c(τ)+n]`.
    pub fn l_piece_character(&self, n: usize) -> Result<ClassFunction> {
        Ok(self.m_piece_character(n) - self.radical_character(n)?)
    }

    /// Character of the singular vectors `{u ∈ M[n] : D_y u = 0 ∀y}`.
    pub fn singular_subspace(&self, n: usize) -> ClassFunction {
        let [d1, d2] = self.dunkl_matrices(n);
        let e = d1.vstack(&d2).echelon();
        let basis = e.nullspace();
        self.subspace_character(&basis, &e.free_columns(), n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn partial_derivatives() {
        let d = partial_matrix(0, 2);
        // ∂1 x1² = 2 x1
        assert_eq!(d.get(0, 0), &CycNum::from_int(2));
        let d = partial_matrix(1, 2);
        // ∂2 x2² = 2 x2
        assert_eq!(d.get(1, 2), &CycNum::from_int(2));
    }

    #[test]
    fn lowest_weights() {
        assert_eq!(lowest_weight(IrrepLabel::ThreePlus, &rat(1, 12)), rat(2, 3));
        assert_eq!(lowest_weight(IrrepLabel::Two, &rat(7, 3)), rat(1, 1));
        assert_eq!(lowest_weight(IrrepLabel::OnePlus, &rat(1, 2)), rat(-5, 1));
    }
}

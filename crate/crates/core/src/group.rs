//! The reflection group G12 as an explicit matrix group over `Q(ζ8)`,
//! together with its conjugacy classes, reflections and irreducible
//! representations.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Serialize, Serializer};

use crate::arith::{CycNum, CyclotomicField, ExactMatrix, Rational, UnityRoot};
use crate::arith::rational::rat;
use crate::error::{Error, Result};

/// Conductor of the field containing all matrix entries and characters.
pub const CONDUCTOR: u32 = 8;

/// Irreducible representations, in the fixed order used for every vector
/// and matrix indexed by `Irr(W)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    OnePlus,
    OneMinus,
    Two,
    TwoPlus,
    TwoMinus,
    ThreePlus,
    ThreeMinus,
    Four,
}

impl IrrepLabel {
    pub const ALL: [IrrepLabel; 8] = [
        IrrepLabel::OnePlus,
        IrrepLabel::OneMinus,
        IrrepLabel::Two,
        IrrepLabel::TwoPlus,
        IrrepLabel::TwoMinus,
        IrrepLabel::ThreePlus,
        IrrepLabel::ThreeMinus,
        IrrepLabel::Four,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> IrrepLabel {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            IrrepLabel::OnePlus => "1+",
            IrrepLabel::OneMinus => "1-",
            IrrepLabel::Two => "2",
            IrrepLabel::TwoPlus => "2+",
            IrrepLabel::TwoMinus => "2-",
            IrrepLabel::ThreePlus => "3+",
            IrrepLabel::ThreeMinus => "3-",
            IrrepLabel::Four => "4",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            IrrepLabel::OnePlus | IrrepLabel::OneMinus => 1,
            IrrepLabel::Two | IrrepLabel::TwoPlus | IrrepLabel::TwoMinus => 2,
            IrrepLabel::ThreePlus | IrrepLabel::ThreeMinus => 3,
            IrrepLabel::Four => 4,
        }
    }

    /// `1− ⊗ τ`.
    pub fn sign_twist(self) -> IrrepLabel {
        match self {
            IrrepLabel::OnePlus => IrrepLabel::OneMinus,
            IrrepLabel::OneMinus => IrrepLabel::OnePlus,
            IrrepLabel::TwoPlus => IrrepLabel::TwoMinus,
            IrrepLabel::TwoMinus => IrrepLabel::TwoPlus,
            IrrepLabel::ThreePlus => IrrepLabel::ThreeMinus,
            IrrepLabel::ThreeMinus => IrrepLabel::ThreePlus,
            other => other,
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('\u{2212}', "-");
        IrrepLabel::ALL
            .into_iter()
            .find(|l| l.name() == norm)
            .ok_or_else(|| Error::UnknownIrrep(s.to_string()))
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Labels of the conjugacy classes, each named by a word representing it.
pub const CLASS_WORDS: [&str; 8] = ["", "efgefgefgefg", "e", "eg", "ef", "fg", "efg", "egf"];
pub const CLASS_NAMES: [&str; 8] = ["1", "(efg)^4", "e", "eg", "ef", "fg", "efg", "egf"];
const CLASS_SIZES: [usize; 8] = [1, 1, 12, 8, 6, 8, 6, 6];
const CLASS_ORDERS: [usize; 8] = [1, 2, 2, 3, 4, 6, 8, 8];

/// One element of a matrix group with the shortlex-minimal word reaching it.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: ExactMatrix,
    pub word: String,
}

/// Closure of `generators` (named by `names`) in breadth-first shortlex order.
///
/// Fails once more than `limit` distinct elements appear.
pub fn generate_group(
    generators: &[ExactMatrix],
    names: &[char],
    limit: usize,
) -> Result<Vec<GroupElement>> {
    assert_eq!(generators.len(), names.len());
    let n = generators.first().map_or(0, ExactMatrix::rows);
    let field = CyclotomicField::new(CONDUCTOR);
    let id = ExactMatrix::identity(n, &field);
    let mut seen: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut out = vec![GroupElement {
        matrix: id.clone(),
        word: String::new(),
    }];
    seen.insert(matrix_key(&id), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (g, &name) in generators.iter().zip(names) {
            let m = out[i].matrix.mul(g);
            let key = matrix_key(&m);
            if seen.contains_key(&key) {
                continue;
            }
            if out.len() == limit {
                return Err(Error::inconsistency(format!(
                    "group closure exceeds {limit} elements"
                )));
            }
            seen.insert(key, out.len());
            let word = format!("{}{}", out[i].word, name);
            queue.push_back(out.len());
            out.push(GroupElement { matrix: m, word });
        }
    }
    Ok(out)
}

fn matrix_key(m: &ExactMatrix) -> Vec<Rational> {
    m.entries().flat_map(|x| x.embed(CONDUCTOR).coeffs()).collect()
}

/// A conjugacy class with its canonical representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub name: &'static str,
    pub representative: usize,
    pub size: usize,
    pub order: usize,
    pub elements: Vec<usize>,
}

/// A reflection `s` with eigenvalue `λ_s` on `h*`, root `α_s ∈ h*` and
/// coroot `α_s^∨ ∈ h`, normalized so that `(α_s, α_s^∨) = 2` and the first
/// nonzero coordinate of `α_s` is 1.
#[derive(Clone, Debug)]
pub struct ReflectionData {
    pub element: usize,
    pub lambda: CycNum,
    pub alpha: [CycNum; 2],
    pub coroot: [CycNum; 2],
}

/// An irreducible representation given by a matrix for every group element.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: IrrepLabel,
    pub images: Vec<ExactMatrix>,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.label.dim()
    }
}

/// G12 with all derived data. Immutable once built.
#[derive(Debug)]
pub struct G12 {
    field: Arc<CyclotomicField>,
    elements: Vec<GroupElement>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    reflections: Vec<ReflectionData>,
    irreps: Vec<Irrep>,
    dual_action: Vec<ExactMatrix>,
    eigen_dual: Vec<[UnityRoot; 2]>,
    characters: Vec<Vec<CycNum>>,
}

fn cyc(field: &Arc<CyclotomicField>, terms: &[(i64, i64)]) -> CycNum {
    // Σ coeff·ζ^k over (coeff, k)
    terms
        .iter()
        .fold(field.zero(), |acc, &(c, k)| acc + field.zeta(k).scale(&rat(c, 1)))
}

fn int_matrix(field: &Arc<CyclotomicField>, rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect(),
    )
}

/// The reflection representation `h`: images of `e`, `f`, `g`.
pub fn generator_matrices() -> [ExactMatrix; 3] {
    let k = CyclotomicField::new(CONDUCTOR);
    let half = rat(1, 2);
    // a = (ζ³ − ζ)/2
    let a = cyc(&k, &[(1, 3), (-1, 1)]).scale(&half);
    let na = -&a;
    let e = ExactMatrix::from_rows(vec![vec![a.clone(), na.clone()], vec![na.clone(), na.clone()]]);
    let f = ExactMatrix::from_rows(vec![vec![a.clone(), a.clone()], vec![a.clone(), na]]);
    let g = ExactMatrix::from_rows(vec![
        vec![k.zero(), -k.zeta(1)],
        vec![k.zeta(3), k.zero()],
    ]);
    [e, f, g]
}

/// Table of characters as printed for G12, rows in irrep order, columns in
/// class order.
pub fn reference_character_table() -> Vec<Vec<CycNum>> {
    let k = CyclotomicField::new(CONDUCTOR);
    let s = cyc(&k, &[(1, 1), (1, 3)]);
    let ints: [[i64; 8]; 8] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, -1, 1, 1, 1, -1, -1],
        [2, 2, 0, -1, 2, -1, 0, 0],
        [2, -2, 0, -1, 0, 1, 9, -9],
        [2, -2, 0, -1, 0, 1, -9, 9],
        [3, 3, 1, 0, -1, 0, -1, -1],
        [3, 3, -1, 0, -1, 0, 1, 1],
        [4, -4, 0, 1, 0, -1, 0, 0],
    ];
    // ±9 marks ±√−2
    ints.iter()
        .map(|row| {
            row.iter()
                .map(|&v| match v {
                    9 => s.clone(),
                    -9 => -&s,
                    _ => k.from_int(v),
                })
                .collect()
        })
        .collect()
}

fn det2(m: &ExactMatrix) -> CycNum {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

fn inverse2(m: &ExactMatrix) -> ExactMatrix {
    let d = det2(m).inv().expect("group element is invertible");
    ExactMatrix::from_rows(vec![
        vec![m.get(1, 1) * &d, -(m.get(0, 1) * &d)],
        vec![-(m.get(1, 0) * &d), m.get(0, 0) * &d],
    ])
}

/// Eigenvalues of a 2×2 matrix of finite order as roots of unity, sorted by
/// exponent; `order` must be a multiple of both eigenvalue orders.
fn unity_eigenvalues(m: &ExactMatrix, order: u32) -> [UnityRoot; 2] {
    let big = CyclotomicField::new(order);
    let tr = m.trace().embed(order);
    let det = det2(m).embed(order);
    let roots: Vec<i64> = (0..order as i64)
        .filter(|&k| {
            let x = big.zeta(k);
            (&x * &x - &tr * &x + &det).is_zero()
        })
        .collect();
    let to_root = |k: i64| UnityRoot::new(rat(k, order as i64));
    match roots.as_slice() {
        [a, b] => [to_root(*a), to_root(*b)],
        [a] => [to_root(*a), to_root(*a)],
        _ => panic!("characteristic polynomial does not split into {order}th roots of unity"),
    }
}

/// Images of `e`, `f`, `g` for each irreducible representation.
fn irrep_generator_images(label: IrrepLabel) -> [ExactMatrix; 3] {
    let k = CyclotomicField::new(CONDUCTOR);
    let h = generator_matrices();
    let sign = || int_matrix(&k, &[&[-1]]);
    // S4 quotient e ↦ (12), f ↦ (34), g ↦ (23)
    let two = [
        int_matrix(&k, &[&[1, 0], &[-1, -1]]),
        int_matrix(&k, &[&[1, 0], &[-1, -1]]),
        int_matrix(&k, &[&[0, 1], &[1, 0]]),
    ];
    let three = [
        int_matrix(&k, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
        int_matrix(&k, &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]]),
        int_matrix(&k, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    ];
    let twist = |ms: [ExactMatrix; 3]| ms.map(|m| m.scale(&k.from_int(-1)));
    match label {
        IrrepLabel::OnePlus => [(); 3].map(|_| ExactMatrix::identity(1, &k)),
        IrrepLabel::OneMinus => [(); 3].map(|_| sign()),
        IrrepLabel::Two => two,
        IrrepLabel::TwoPlus => h,
        IrrepLabel::TwoMinus => twist(h),
        IrrepLabel::ThreePlus => three,
        IrrepLabel::ThreeMinus => twist(three),
        IrrepLabel::Four => {
            let [a, b, c] = two;
            let [x, y, z] = h;
            [a.kron(&x), b.kron(&y), c.kron(&z)]
        }
    }
}

impl G12 {
    /// Process-wide instance, built on first use.
    pub fn shared() -> &'static G12 {
        static G: OnceLock<G12> = OnceLock::new();
        G.get_or_init(|| G12::build().expect("G12 group data is consistent"))
    }

    pub fn build() -> Result<G12> {
        let field = CyclotomicField::new(CONDUCTOR);
        let gens = generator_matrices();
        let elements = generate_group(&gens, &['e', 'f', 'g'], 48)?;
        if elements.len() != 48 {
            return Err(Error::inconsistency(format!(
                "expected 48 elements, generated {}",
                elements.len()
            )));
        }
        let index: HashMap<Vec<Rational>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, el)| (matrix_key(&el.matrix), i))
            .collect();
        let lookup = |m: &ExactMatrix| -> Result<usize> {
            index
                .get(&matrix_key(m))
                .copied()
                .ok_or_else(|| Error::inconsistency("product left the group"))
        };
        let n = elements.len();
        let mut mult = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = lookup(&elements[i].matrix.mul(&elements[j].matrix))?;
            }
        }
        let inverse: Vec<usize> = (0..n)
            .map(|i| (0..n).find(|&j| mult[i][j] == 0).expect("inverse exists"))
            .collect();

        let orders: Vec<usize> = (0..n)
            .map(|i| {
                let mut k = 1;
                let mut x = i;
                while x != 0 {
                    x = mult[x][i];
                    k += 1;
                }
                k
            })
            .collect();

        // conjugacy classes, matched to the printed labels by invariants
        let word_element = |w: &str| -> Result<usize> {
            w.chars().try_fold(0usize, |acc, ch| {
                let g = match ch {
                    'e' => 1,
                    'f' => 2,
                    'g' => 3,
                    _ => unreachable!(),
                };
                Ok(mult[acc][g])
            })
        };
        debug_assert_eq!(&elements[1].word, "e");
        let traces: Vec<CycNum> = elements.iter().map(|e| e.matrix.trace()).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for (ci, word) in CLASS_WORDS.iter().enumerate() {
            let rep = word_element(word)?;
            let mut members: Vec<usize> = (0..n).map(|x| mult[mult[x][rep]][inverse[x]]).collect();
            members.sort_unstable();
            members.dedup();
            let triple_ok = members.len() == CLASS_SIZES[ci]
                && orders[rep] == CLASS_ORDERS[ci];
            if !triple_ok {
                return Err(Error::inconsistency(format!(
                    "class {} has size {} and order {}",
                    CLASS_NAMES[ci],
                    members.len(),
                    orders[rep]
                )));
            }
            for &m in &members {
                if class_of[m] != usize::MAX {
                    return Err(Error::inconsistency("class representatives are conjugate"));
                }
                class_of[m] = ci;
            }
            classes.push(ConjugacyClass {
                name: CLASS_NAMES[ci],
                representative: rep,
                size: members.len(),
                order: orders[rep],
                elements: members,
            });
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::inconsistency("conjugacy classes do not cover the group"));
        }
        // the (size, order, trace) triples separate the eight classes
        for a in 0..8 {
            for b in a + 1..8 {
                let (x, y) = (&classes[a], &classes[b]);
                if x.size == y.size
                    && x.order == y.order
                    && traces[x.representative] == traces[y.representative]
                {
                    return Err(Error::inconsistency("class invariants collide"));
                }
            }
        }

        let dual_action: Vec<ExactMatrix> = elements
            .iter()
            .map(|el| inverse2(&el.matrix).transpose())
            .collect();
        let eigen_dual = dual_action.iter().map(|m| unity_eigenvalues(m, 24)).collect();

        let reflections = Self::find_reflections(&field, &elements, &dual_action)?;

        let mut irreps = Vec::with_capacity(8);
        for label in IrrepLabel::ALL {
            let gimg = irrep_generator_images(label);
            let mut images: Vec<Option<ExactMatrix>> = vec![None; n];
            images[0] = Some(ExactMatrix::identity(label.dim(), &field));
            // parents come before children in shortlex order
            for i in 1..n {
                let w = &elements[i].word;
                let parent = &w[..w.len() - 1];
                let pi = word_element(parent)?;
                let gi = match w.as_bytes()[w.len() - 1] {
                    b'e' => 0,
                    b'f' => 1,
                    _ => 2,
                };
                let m = images[pi].as_ref().expect("parent image built").mul(&gimg[gi]);
                images[i] = Some(m);
            }
            let images: Vec<ExactMatrix> = images.into_iter().map(Option::unwrap).collect();
            // every Cayley-graph edge must be respected
            for i in 0..n {
                for (gi, g) in [1usize, 2, 3].iter().enumerate() {
                    if images[mult[i][*g]] != images[i].mul(&gimg[gi]) {
                        return Err(Error::inconsistency(format!(
                            "irrep {label} is not a homomorphism"
                        )));
                    }
                }
            }
            irreps.push(Irrep { label, images });
        }

        let characters: Vec<Vec<CycNum>> = irreps
            .iter()
            .map(|r| classes.iter().map(|c| r.images[c.representative].trace()).collect())
            .collect();
        let reference = reference_character_table();
        for (i, row) in characters.iter().enumerate() {
            if row != &reference[i] {
                return Err(Error::inconsistency(format!(
                    "character of {} disagrees with the reference table",
                    IrrepLabel::ALL[i]
                )));
            }
        }

        Ok(G12 {
            field,
            elements,
            mult,
            inverse,
            class_of,
            classes,
            reflections,
            irreps,
            dual_action,
            eigen_dual,
            characters,
        })
    }

    fn find_reflections(
        field: &Arc<CyclotomicField>,
        elements: &[GroupElement],
        dual_action: &[ExactMatrix],
    ) -> Result<Vec<ReflectionData>> {
        let id = ExactMatrix::identity(2, field);
        let mut out = Vec::new();
        for (i, el) in elements.iter().enumerate().skip(1) {
            let fixed = el.matrix.sub(&id);
            if fixed.rank() != 1 {
                continue;
            }
            // nontrivial eigenvalue on h* is det of the dual action
            let lambda = det2(&dual_action[i]);
            let eig = |m: &ExactMatrix, l: &CycNum| -> Vec<CycNum> {
                let shifted = m.sub(&id.scale(l));
                let mut ns = shifted.echelon().nullspace();
                assert_eq!(ns.len(), 1, "reflection eigenspace is a line");
                ns.pop().unwrap()
            };
            let mut alpha = eig(&dual_action[i], &lambda);
            let lead = alpha.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
            alpha = alpha.iter().map(|x| x * &lead).collect();
            let lambda_h = det2(&el.matrix);
            let mut coroot = eig(&el.matrix, &lambda_h);
            let pairing = &alpha[0] * &coroot[0] + &alpha[1] * &coroot[1];
            if pairing.is_zero() {
                return Err(Error::inconsistency("root and coroot are orthogonal"));
            }
            let scale = field.from_int(2) * pairing.inv().unwrap();
            coroot = coroot.iter().map(|x| x * &scale).collect();
            out.push(ReflectionData {
                element: i,
                lambda,
                alpha: [alpha[0].clone(), alpha[1].clone()],
                coroot: [coroot[0].clone(), coroot[1].clone()],
            });
        }
        Ok(out)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Index of the element named by a word in `e`, `f`, `g`.
    pub fn word_element(&self, w: &str) -> Result<usize> {
        w.chars().try_fold(0usize, |acc, ch| {
            let g = match ch {
                'e' => 1,
                'f' => 2,
                'g' => 3,
                other => return Err(Error::domain(format!("unknown generator {other:?}"))),
            };
            Ok(self.mult[acc][g])
        })
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_sizes(&self) -> [usize; 8] {
        std::array::from_fn(|i| self.classes[i].size)
    }

    pub fn reflections(&self) -> &[ReflectionData] {
        &self.reflections
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn irrep(&self, l: IrrepLabel) -> &Irrep {
        &self.irreps[l.index()]
    }

    /// Matrix of `w` acting on `h*`, i.e. `(w^{-1})^T`.
    pub fn dual_action(&self, a: usize) -> &ExactMatrix {
        &self.dual_action[a]
    }

    /// Eigenvalues of `w` on `h*` as 24th roots of unity.
    pub fn dual_eigenvalues(&self, a: usize) -> &[UnityRoot; 2] {
        &self.eigen_dual[a]
    }

    /// `χ_τ` on the class representatives.
    pub fn character(&self, l: IrrepLabel) -> &[CycNum] {
        &self.characters[l.index()]
    }

    /// `χ_τ(w)` for an arbitrary element.
    pub fn character_at(&self, l: IrrepLabel, a: usize) -> &CycNum {
        &self.characters[l.index()][self.class_of[a]]
    }

    /// The scalar by which `Σ_{s∈S} s` acts on `τ`.
    pub fn central_reflection_sum(&self, l: IrrepLabel) -> Rational {
        let chi = self.characters[l.index()][2]
            .to_rational()
            .expect("characters on reflections are rational");
        chi * Rational::from_integer((self.reflections.len() as i64).into())
            / Rational::from_integer((l.dim() as i64).into())
    }

    /// Class table and characters as a serializable report.
    pub fn report(&self) -> GroupReport {
        GroupReport {
            order: self.order(),
            reflections: self.reflections.len(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassReport {
                    name: c.name,
                    size: c.size,
                    order: c.order,
                    word: self.elements[c.representative].word.clone(),
                })
                .collect(),
            characters: IrrepLabel::ALL
                .iter()
                .map(|l| (l.name().to_string(), self.character(*l).to_vec()))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassReport {
    pub name: &'static str,
    pub size: usize,
    pub order: usize,
    pub word: String,
}

#[derive(Debug, Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub reflections: usize,
    pub classes: Vec<ClassReport>,
    pub characters: std::collections::BTreeMap<String, Vec<CycNum>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        let k = CyclotomicField::new(CONDUCTOR);
        let id = ExactMatrix::identity(2, &k);
        for m in generator_matrices() {
            assert_eq!(m.mul(&m), id);
        }
    }

    #[test]
    fn trivial_generators_give_trivial_group() {
        let k = CyclotomicField::new(CONDUCTOR);
        let els = generate_group(&[ExactMatrix::identity(2, &k)], &['e'], 48).unwrap();
        assert_eq!(els.len(), 1);
    }

    #[test]
    fn closure_limit_is_enforced() {
        let gens = generator_matrices();
        assert!(generate_group(&gens, &['e', 'f', 'g'], 47).unwrap_err().is_inconsistency());
    }

    #[test]
    fn label_parsing() {
        assert_eq!("2-".parse::<IrrepLabel>().unwrap(), IrrepLabel::TwoMinus);
        assert_eq!("3\u{2212}".parse::<IrrepLabel>().unwrap(), IrrepLabel::ThreeMinus);
        assert!("5".parse::<IrrepLabel>().is_err());
        for l in IrrepLabel::ALL {
            assert_eq!(l.sign_twist().sign_twist(), l);
            assert_eq!(IrrepLabel::from_index(l.index()), l);
        }
    }
}

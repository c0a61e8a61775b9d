use g12_core::arith::{CycNum, UnityRoot};
use g12_core::chars::{
    induce_from_parabolic, molien_coefficients, restrict_to_parabolic, sym_power_characters,
    sym_power_decompose, ClassFunction, GrothVector, ParabolicChar,
};
use g12_core::{IrrepLabel, G12};
use IrrepLabel::*;

fn irr(ls: &[IrrepLabel]) -> GrothVector {
    ls.iter().fold(GrothVector::zero(), |acc, &l| acc + GrothVector::unit(l))
}

#[test]
fn tensor_products_from_the_character_table() {
    let p = &ClassFunction::irrep(Two) * &ClassFunction::irrep(TwoPlus);
    assert_eq!(p.decompose().unwrap(), irr(&[Four]));
    let p = &ClassFunction::irrep(TwoMinus) * &ClassFunction::irrep(OneMinus);
    assert_eq!(p.decompose().unwrap(), irr(&[TwoPlus]));
}

#[test]
fn regular_character_decomposes_by_dimension() {
    let mut v = vec![CycNum::zero(); 8];
    v[0] = CycNum::from_int(48);
    let reg = ClassFunction(v);
    let d = reg.decompose().unwrap();
    for l in IrrepLabel::ALL {
        assert_eq!(d.get(l), l.dim() as i64);
    }
}

#[test]
fn negative_or_fractional_multiplicities_are_rejected() {
    let neg = ClassFunction::zero() - ClassFunction::irrep(OnePlus);
    assert!(neg.decompose().is_err());
    assert!(neg.decompose_virtual().is_ok());
    let mut v = vec![CycNum::zero(); 8];
    v[0] = CycNum::from_int(1);
    assert!(ClassFunction(v).decompose().is_err());
}

#[test]
fn symmetric_powers() {
    assert_eq!(sym_power_decompose(1, Two), irr(&[Four]));
    assert_eq!(sym_power_decompose(4, OnePlus), irr(&[Two, ThreePlus]));
    assert_eq!(sym_power_decompose(2, ThreePlus), irr(&[OnePlus, Two, ThreePlus, ThreeMinus]));
    assert_eq!(sym_power_decompose(1, OnePlus), irr(&[TwoMinus]));
    for n in 0..8 {
        for l in IrrepLabel::ALL {
            assert_eq!(sym_power_decompose(n, l).dimension(), ((n + 1) * l.dim()) as i64);
        }
    }
}

/// `Σ_{i+j=n} λ₁^i λ₂^j` from the eigenvalues on `h*`.
fn eigen_sym(a: &UnityRoot, b: &UnityRoot, n: usize) -> CycNum {
    (0..=n).fold(CycNum::zero(), |acc, i| {
        let x = a.pow(&g12_core::arith::rat(i as i64, 1));
        let y = b.pow(&g12_core::arith::rat((n - i) as i64, 1));
        acc + (&x * &y).to_cyc()
    })
}

#[test]
fn molien_identity_to_degree_twenty() {
    let g = G12::shared();
    let sym = sym_power_characters(20);
    for (c, class) in g.classes().iter().enumerate() {
        let molien = molien_coefficients(c, 20);
        let [a, b] = g.dual_eigenvalues(class.representative);
        for n in 0..=20 {
            assert_eq!(sym[n].0[c], molien[n], "class {c} degree {n}");
            assert_eq!(sym[n].0[c], eigen_sym(a, b, n), "class {c} degree {n}");
        }
    }
}

#[test]
fn parabolic_restriction_and_induction() {
    assert_eq!(restrict_to_parabolic(OnePlus), (1, 0));
    assert_eq!(restrict_to_parabolic(TwoPlus), (1, 1));
    assert_eq!(restrict_to_parabolic(ThreePlus), (2, 1));
    let p = induce_from_parabolic(ParabolicChar::Trivial);
    let m = induce_from_parabolic(ParabolicChar::Sign);
    assert_eq!(p, GrothVector([1, 0, 1, 1, 1, 2, 1, 2]));
    assert_eq!(p - m, GrothVector([1, -1, 0, 0, 0, 1, -1, 0]));
    for l in IrrepLabel::ALL {
        assert_eq!((p + m).get(l), l.dim() as i64);
    }
}

#[test]
fn frobenius_reciprocity() {
    // Ind from <e> of ε evaluated as a class function: the induced character
    // is (1/2) Σ_w over cosets; here computed directly from fixed points.
    let g = G12::shared();
    let e = g.word_element("e").unwrap();
    for (eps, sign) in [(ParabolicChar::Trivial, 1i64), (ParabolicChar::Sign, -1)] {
        let mut values = Vec::new();
        for class in g.classes() {
            let x = class.representative;
            // Ind χ(x) = (1/|H|) Σ_{y} χ̇(y x y⁻¹)
            let mut acc = 0i64;
            for y in 0..48 {
                let conj = g.mul(g.mul(y, x), g.inverse(y));
                if conj == 0 {
                    acc += 1;
                } else if conj == e {
                    acc += sign;
                }
            }
            values.push(CycNum::from_int(acc / 2));
        }
        let ind = ClassFunction(values).decompose().unwrap();
        assert_eq!(ind, induce_from_parabolic(eps));
    }
}

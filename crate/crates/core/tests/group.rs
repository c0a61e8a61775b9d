use g12_core::arith::{rat, CycNum, ExactMatrix};
use g12_core::group::{reference_character_table, CLASS_NAMES};
use g12_core::{IrrepLabel, G12};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn order_classes_and_reflections() {
    let g = G12::shared();
    assert_eq!(g.order(), 48);
    let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
    assert_eq!(sizes, vec![1, 1, 12, 8, 6, 8, 6, 6]);
    sizes.sort();
    assert_eq!(sizes.iter().sum::<usize>(), 48);
    let orders: Vec<usize> = g.classes().iter().map(|c| c.order).collect();
    assert_eq!(orders, vec![1, 2, 2, 3, 4, 6, 8, 8]);
    assert_eq!(g.reflections().len(), 12);
    assert!(g.reflections().iter().all(|r| g.class_of(r.element) == 2));
    assert!(g.reflections().iter().all(|r| r.lambda == CycNum::from_int(-1)));
    let names: Vec<&str> = g.classes().iter().map(|c| c.name).collect();
    assert_eq!(names, CLASS_NAMES.to_vec());
}

#[test]
fn reflection_data_is_normalized() {
    let g = G12::shared();
    let k = g.field();
    for r in g.reflections() {
        let s = &g.element(r.element).matrix;
        let coroot = vec![r.coroot[0].clone(), r.coroot[1].clone()];
        let image = s.mul_vec(&coroot);
        assert_eq!(image, coroot.iter().map(|x| -x).collect::<Vec<_>>());
        let pairing = &r.alpha[0] * &r.coroot[0] + &r.alpha[1] * &r.coroot[1];
        assert_eq!(pairing, k.from_int(2));
        let lead = r.alpha.iter().find(|x| !x.is_zero()).unwrap();
        assert!(lead.is_one());
        let id = ExactMatrix::identity(2, k);
        assert_eq!(s.sub(&id).rank(), 1);
        assert_eq!(s.mul(s), id);
    }
}

#[test]
fn characters_match_reference_and_are_orthonormal() {
    let g = G12::shared();
    let table = reference_character_table();
    let sizes = g.class_sizes();
    for a in IrrepLabel::ALL {
        assert_eq!(g.character(a), table[a.index()].as_slice());
        for b in IrrepLabel::ALL {
            let mut acc = CycNum::zero();
            for c in 0..8 {
                acc = acc
                    + CycNum::from_int(sizes[c] as i64) * &g.character(a)[c] * g.character(b)[c].conj();
            }
            let expected = if a == b { 48 } else { 0 };
            assert_eq!(acc, CycNum::from_int(expected), "{a} vs {b}");
        }
    }
    let dims: usize = IrrepLabel::ALL.iter().map(|l| l.dim() * l.dim()).sum();
    assert_eq!(dims, 48);
    let sqrt = CycNum::zeta(8, 1) + CycNum::zeta(8, 3);
    assert_eq!(g.character(IrrepLabel::TwoPlus)[6], sqrt);
}

#[test]
fn irreps_are_multiplicative_on_random_pairs() {
    let g = G12::shared();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..50 {
        let a = rng.gen_range(0..48);
        let b = rng.gen_range(0..48);
        for r in g.irreps() {
            assert_eq!(r.images[g.mul(a, b)], r.images[a].mul(&r.images[b]));
        }
    }
}

#[test]
fn presentation_relations_hold() {
    let g = G12::shared();
    for w in ["ee", "ff", "gg"] {
        assert_eq!(g.word_element(w).unwrap(), 0);
    }
    let z = g.word_element("efgefgefgefg").unwrap();
    assert_eq!(z, g.word_element("fgefgefgefge").unwrap());
    assert_eq!(z, g.word_element("gefgefgefgef").unwrap());
    assert_ne!(z, 0);
    assert_eq!(g.mul(z, z), 0);
    for x in 0..48 {
        assert_eq!(g.mul(x, z), g.mul(z, x));
    }
}

#[test]
fn central_reflection_sums() {
    let g = G12::shared();
    let expected = [12, -12, 0, 0, 0, 4, -4, 0];
    for l in IrrepLabel::ALL {
        assert_eq!(g.central_reflection_sum(l), rat(expected[l.index()], 1));
    }
}

#[test]
fn report_serializes() {
    let json = serde_json::to_string(&G12::shared().report()).unwrap();
    assert!(json.contains("\"order\":48"));
}

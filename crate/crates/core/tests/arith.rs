use g12_core::arith::rational::rat;
use g12_core::arith::{format_rational, parse_rational, rank_nullspace, root_of_unity, CycNum, CyclotomicField, ExactMatrix};
use proptest::prelude::*;

fn cyc(n: u32) -> impl Strategy<Value = CycNum> {
    let f = CyclotomicField::new(n);
    let deg = f.degree();
    prop::collection::vec((-4i64..=4, 1i64..=3), deg).prop_map(move |v| {
        v.iter()
            .enumerate()
            .fold(f.zero(), |acc, (j, &(p, q))| acc + f.zeta(j as i64).scale(&rat(p, q)))
    })
}

fn units(n: u32) -> Vec<i64> {
    (1..n as i64).filter(|k| num_gcd(*k, n as i64) == 1).collect()
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

/// A `rows × cols` matrix over `Q(ζ8)` of rank at most `k`, as a product.
fn low_rank() -> impl Strategy<Value = ExactMatrix> {
    (1usize..6, 1usize..6, 1usize..5).prop_flat_map(|(rows, cols, k)| {
        (
            prop::collection::vec(cyc(8), rows * k),
            prop::collection::vec(cyc(8), k * cols),
        )
            .prop_map(move |(a, b)| {
                let a = ExactMatrix::from_rows(a.chunks(k).map(<[CycNum]>::to_vec).collect());
                let b = ExactMatrix::from_rows(b.chunks(cols).map(<[CycNum]>::to_vec).collect());
                a.mul(&b)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in cyc(24), b in cyc(24), c in cyc(24)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn galois_composition(x in cyc(24), y in cyc(24), i in 0usize..8, j in 0usize..8) {
        let u = units(24);
        let (a, b) = (u[i], u[j]);
        let gb = x.galois(b).unwrap();
        prop_assert_eq!(gb.galois(a).unwrap(), x.galois(a * b).unwrap());
        prop_assert_eq!((&x * &y).galois(a).unwrap(), &x.galois(a).unwrap() * &y.galois(a).unwrap());
        prop_assert_eq!((&x + &y).galois(a).unwrap(), &x.galois(a).unwrap() + &y.galois(a).unwrap());
        prop_assert_eq!(x.galois(a + 24).unwrap(), x.galois(a).unwrap());
    }

    #[test]
    fn conjugation_is_the_last_galois_element(x in cyc(8)) {
        prop_assert_eq!(x.conj(), x.galois(7).unwrap());
        prop_assert_eq!(x.conj().conj(), x.clone());
        let norm = &x * &x.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn rank_plus_nullity(m in low_rank()) {
        let (rank, ns) = rank_nullspace(&m);
        prop_assert_eq!(rank + ns.len(), m.cols());
        prop_assert_eq!(rank, m.rank());
        prop_assert_eq!(rank, m.transpose().rank());
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(CycNum::is_zero));
        }
        if !ns.is_empty() {
            prop_assert_eq!(ExactMatrix::from_rows(ns.clone()).rank(), ns.len());
        }
    }

    #[test]
    fn roots_of_unity_multiply(p in -30i64..30, q in 1i64..25, s in -30i64..30, t in 1i64..25) {
        let (a, b) = (rat(p, q), rat(s, t));
        prop_assert_eq!(&root_of_unity(&a) * &root_of_unity(&b), root_of_unity(&(a + b)));
    }

    #[test]
    fn rational_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        prop_assert_eq!(parse_rational(&format!("{p}/{q}")).unwrap(), rat(p, q));
    }
}

#[test]
fn galois_rejects_non_units() {
    assert!(CycNum::zeta(24, 1).galois(3).is_err());
    assert!(CycNum::zeta(24, 1).galois(6).is_err());
}

use g12_core::amatrix::{a_nullspace, a_nullspace_integral, a_rows, build_a_matrix, in_a_nullspace};
use g12_core::arith::{rat, span_rref, CycNum, Rational, UnityRoot};
use g12_core::chars::GrothVector;

/// The printed matrix, in the variables ξ = e^{2πi/24} and y = ξ^c.
/// An entry is a list of terms `a^k` (meaning a·ξ^k) and an optional `y=N`.
const PRINTED: [&str; 16] = [
    "1^0 | 1^0 | 2^0 | 2^0 | 2^0 | 3^0 | 3^0 | 4^0",
    "1^0 | 1^0 | 2^0 | 2^0 | 2^0 | 3^0 | 3^0 | 4^0",
    "-1^0 y=-144 | -1^0 y=144 | -2^0 | 2^0 | 2^0 | -3^0 y=-48 | -3^0 y=48 | 4^0",
    "-1^0 y=-144 | -1^0 y=144 | -2^0 | 2^0 | 2^0 | -3^0 y=-48 | -3^0 y=48 | 4^0",
    "-1^0 y=-144 | 1^0 y=144 | 0 | 0 | 0 | -1^0 y=-48 | 1^0 y=48 | 0",
    "1^0 | -1^0 | 0 | 0 | 0 | 1^0 | -1^0 | 0",
    "1^4 -1^0 y=-96 | 1^4 -1^0 y=96 | -1^4 1^0 | -1^4 1^0 | -1^4 1^0 | 0 | 0 | 1^4 -1^0",
    "-1^4 y=-192 | -1^4 y=192 | 1^4 | 1^4 | 1^4 | 0 | 0 | -1^4",
    "-1^6 y=-216 | -1^6 y=216 | -2^6 | 0 | 0 | 1^6 y=-72 | 1^6 y=72 | 0",
    "1^6 y=-72 | 1^6 y=72 | 2^6 | 0 | 0 | -1^6 y=-24 | -1^6 y=24 | 0",
    "1^4 y=-48 | 1^4 y=48 | -1^4 | 1^4 | 1^4 | 0 | 0 | -1^4",
    "-1^4 1^0 y=-240 | -1^4 1^0 y=240 | 1^4 -1^0 | -1^4 1^0 | -1^4 1^0 | 0 | 0 | 1^4 -1^0",
    "-1^5 1^1 y=-252 | 1^5 -1^1 y=252 | 0 | -1^6 -1^0 | 1^6 1^0 | 1^5 -1^1 y=-84 | -1^5 1^1 y=84 | 0",
    "-1^3 y=-180 | 1^3 y=180 | 0 | 1^6 -1^0 | -1^6 1^0 | 1^3 y=-60 | -1^3 y=60 | 0",
    "1^5 -1^1 y=-108 | -1^5 1^1 y=108 | 0 | -1^6 -1^0 | 1^6 1^0 | -1^5 1^1 y=-36 | 1^5 -1^1 y=36 | 0",
    "1^3 y=-36 | -1^3 y=36 | 0 | 1^6 -1^0 | -1^6 1^0 | -1^3 y=-12 | 1^3 y=12 | 0",
];

fn printed_entry(s: &str, c: &Rational) -> CycNum {
    let mut coeff = CycNum::zero();
    let mut yexp = 0i64;
    for tok in s.split_whitespace() {
        if let Some(n) = tok.strip_prefix("y=") {
            yexp = n.parse().unwrap();
        } else if tok == "0" {
            return CycNum::zero();
        } else {
            let (a, k) = tok.split_once('^').unwrap();
            let a: i64 = a.parse().unwrap();
            let k: i64 = k.parse().unwrap();
            coeff = coeff + CycNum::zeta(24, k) * CycNum::from_int(a);
        }
    }
    // y^N = ξ^{cN}
    let y = UnityRoot::new(c * rat(yexp, 24)).to_cyc();
    coeff * y
}

fn printed_row(i: usize, c: &Rational) -> Vec<CycNum> {
    PRINTED[i].split('|').map(|e| printed_entry(e.trim(), c)).collect()
}

#[test]
fn rows_match_the_printed_matrix() {
    let cs = [rat(1, 12), rat(1, 4), rat(1, 3), rat(1, 2), rat(1, 7), rat(2, 5), rat(-3, 11)];
    let built: Vec<_> = cs.iter().map(build_a_matrix).collect();
    let mut used = [false; 16];
    for i in 0..16 {
        let j = (0..16)
            .find(|&j| {
                !used[j]
                    && cs.iter().zip(&built).all(|(c, a)| a.entries.row(j) == printed_row(i, c).as_slice())
            })
            .unwrap_or_else(|| panic!("printed row {} has no match", i + 1));
        used[j] = true;
    }
}

#[test]
fn identity_class_rows_are_dimensions() {
    let a = build_a_matrix(&rat(1, 3));
    let dims: Vec<CycNum> = [1, 1, 2, 2, 2, 3, 3, 4].iter().map(|&d| CycNum::from_int(d)).collect();
    assert_eq!(a_rows()[0].class, 0);
    assert_eq!(a.entries.row(0), dims.as_slice());
    assert_eq!(a.entries.row(1), dims.as_slice());
    assert!(a_rows()[0].t.exponent() == &rat(0, 1) && a_rows()[1].t.exponent() == &rat(0, 1));
}

fn span(vs: &[[i64; 8]]) -> Vec<Vec<CycNum>> {
    span_rref(&vs.iter().map(|v| v.iter().map(|&x| CycNum::from_int(x)).collect()).collect::<Vec<_>>())
}

#[test]
fn nullspaces_match_printed_bases() {
    let table: [(Rational, Vec<[i64; 8]>); 4] = [
        (rat(1, 12), vec![[1, 1, 0, 0, -1, 0, 0, 0]]),
        (
            rat(1, 4),
            vec![[1, 0, 0, 0, 0, 0, 1, -1], [0, 1, 0, 0, 0, 1, 0, -1], [0, 0, 0, 1, 0, -1, -1, 1]],
        ),
        (rat(1, 3), vec![[1, 1, -1, 0, 0, 0, 0, 0]]),
        (rat(1, 2), vec![[1, 0, 1, 0, 0, -1, 0, 0], [0, 1, 1, 0, 0, 0, -1, 0]]),
    ];
    for (c, basis) in &table {
        assert_eq!(a_nullspace(c), span(basis), "c = {c}");
        for v in basis {
            assert!(in_a_nullspace(c, &GrothVector(*v)));
        }
        assert_eq!(a_nullspace_integral(c).unwrap().len(), basis.len());
    }
    let e = a_nullspace_integral(&rat(1, 12)).unwrap();
    assert_eq!(e, vec![GrothVector([1, 1, 0, 0, -1, 0, 0, 0])]);
    assert!(a_nullspace(&rat(1, 5)).is_empty());
}

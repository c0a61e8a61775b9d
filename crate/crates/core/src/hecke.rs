//! Schur elements of the Hecke algebra of G12 and the semisimplicity test
//! for `O_c` obtained by evaluating them at `v = e^{πic}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::arith::rational::{format_rational, parse_rational};
use crate::arith::{rat, CycNum, Rational, UnityRoot};
use crate::error::{Error, Result};
use crate::group::IrrepLabel;

const SCHUR_DATA: &str = include_str!("../data/schur_g12.txt");

const HEADER: &str = "\
# Schur elements of the Hecke algebra of G12, q = v^2, xi = exp(2*pi*i/24).
# Each record: label unit v_power factor...
# A factor \"-k\" is (v - xi^k), \"+k\" is (v + xi^k); \"^m\" gives its multiplicity.
";

/// `(v − ξ^k)^m` when `plus` is false, `(v + ξ^k)^m` when it is true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurFactor {
    pub plus: bool,
    pub xi_power: u32,
    pub multiplicity: u32,
}

impl SchurFactor {
    /// The root `r` with the factor equal to `(v − r)^m`.
    pub fn root(&self) -> UnityRoot {
        let shift = if self.plus { 12 } else { 0 };
        UnityRoot::new(rat(i64::from(self.xi_power) + shift, 24))
    }
}

/// `unit · v^{v_power} · Π (v ∓ ξ^k)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElement {
    pub label: IrrepLabel,
    pub unit: Rational,
    pub v_power: i64,
    pub factors: Vec<SchurFactor>,
}

impl SchurElement {
    pub fn evaluate_at(&self, v: &UnityRoot) -> CycNum {
        let vc = v.to_cyc();
        let mut acc = CycNum::from_rational(&self.unit) * vc.pow(self.v_power);
        for f in &self.factors {
            let term = &vc - &f.root().to_cyc();
            acc = acc * term.pow(i64::from(f.multiplicity));
        }
        acc
    }

    pub fn vanishes_at(&self, v: &UnityRoot) -> bool {
        self.factors.iter().any(|f| &f.root() == v)
    }
}

fn parse_factor(tok: &str) -> Result<SchurFactor> {
    let bad = || Error::domain(format!("malformed Schur factor {tok:?}"));
    let (plus, rest) = match tok.as_bytes().first() {
        Some(b'+') => (true, &tok[1..]),
        Some(b'-') => (false, &tok[1..]),
        _ => return Err(bad()),
    };
    let (k, m) = match rest.split_once('^') {
        Some((k, m)) => (k, m.parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let xi_power = k.parse::<u32>().map_err(|_| bad())?;
    if m == 0 || xi_power >= 24 || k.starts_with('+') {
        return Err(bad());
    }
    Ok(SchurFactor {
        plus,
        xi_power,
        multiplicity: m,
    })
}

/// Parses the Schur data format; comment lines start with `#`.
pub fn parse_schur_table(text: &str) -> Result<Vec<SchurElement>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let label: IrrepLabel = toks.next().unwrap_or_default().parse()?;
        let unit = parse_rational(toks.next().ok_or_else(|| Error::domain("missing unit"))?)?;
        let v_power = toks
            .next()
            .and_then(|t| t.parse::<i64>().ok())
            .ok_or_else(|| Error::domain(format!("missing v power for {label}")))?;
        let factors = toks.map(parse_factor).collect::<Result<Vec<_>>>()?;
        out.push(SchurElement {
            label,
            unit,
            v_power,
            factors,
        });
    }
    Ok(out)
}

/// Inverse of [`parse_schur_table`], including the fixed header.
pub fn format_schur_table(elements: &[SchurElement]) -> String {
    let mut s = String::from(HEADER);
    for e in elements {
        write!(s, "{} {} {}", e.label, format_rational(&e.unit), e.v_power).unwrap();
        for f in &e.factors {
            let sign = if f.plus { '+' } else { '-' };
            write!(s, " {sign}{}", f.xi_power).unwrap();
            if f.multiplicity != 1 {
                write!(s, "^{}", f.multiplicity).unwrap();
            }
        }
        s.push('\n');
    }
    s
}

/// The shipped source text of the table.
pub fn schur_source() -> &'static str {
    SCHUR_DATA
}

/// The eight Schur elements in irrep order.
pub fn schur_elements() -> Vec<SchurElement> {
    let mut v = parse_schur_table(SCHUR_DATA).expect("shipped Schur data parses");
    v.sort_by_key(|e| e.label);
    v
}

/// `v = e^{πic}`.
pub fn hecke_parameter(c: &Rational) -> UnityRoot {
    UnityRoot::new(c / rat(2, 1))
}

pub fn schur_evaluate(sigma: IrrepLabel, c: &Rational) -> CycNum {
    schur_elements()[sigma.index()].evaluate_at(&hecke_parameter(c))
}

/// Whether `O_c` is semisimple: no Schur element vanishes at `e^{πic}`.
pub fn is_semisimple(c: &Rational) -> bool {
    let v = hecke_parameter(c);
    schur_elements().iter().all(|e| !e.evaluate_at(&v).is_zero())
}

/// Residues `m mod 12` for which `O_{m/12}` fails to be semisimple, scanning
/// `m = 1, …, 24`.
pub fn nonsemisimple_residues() -> BTreeSet<u32> {
    (1..=24)
        .filter(|&m| !is_semisimple(&rat(m, 12)))
        .map(|m| (m % 12) as u32)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_round_trips_exactly() {
        let els = schur_elements();
        assert_eq!(els.len(), 8);
        assert_eq!(format_schur_table(&els), SCHUR_DATA);
    }

    #[test]
    fn malformed_factors_are_rejected() {
        for bad in ["3", "-3^0", "+24", "-x", "-+3"] {
            assert!(parse_factor(bad).is_err(), "{bad}");
        }
    }
}

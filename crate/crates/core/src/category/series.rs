//! Graded characters `Σ_n Tr_{N[h+n]}(w) t^{h+n}` truncated at a depth.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::rational::{to_i64, Rational};
use crate::arith::CycNum;
use crate::chars::{sym_power_characters, ClassFunction, GrothVector};
use crate::cherednik::{lowest_weight, ModuleContext};
use crate::error::{Error, Result};
use crate::group::IrrepLabel;

/// A graded character known through `lowest + depth`. Term `n` is the
/// `W`-character of the weight space at `lowest + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    pub tau: IrrepLabel,
    pub c: Rational,
    pub lowest: Rational,
    pub terms: Vec<ClassFunction>,
}

impl CharacterSeries {
    pub fn depth(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn weight(&self, n: usize) -> Rational {
        &self.lowest + Rational::from_integer(n.into())
    }

    /// Term at weight `alpha`, zero when `alpha` is below the lowest weight;
    /// `None` when it lies past the truncation or off the weight lattice.
    pub fn term_at(&self, alpha: &Rational) -> Option<ClassFunction> {
        let n = to_i64(&(alpha - &self.lowest))?;
        if n < 0 {
            return Some(ClassFunction::zero());
        }
        self.terms.get(n as usize).cloned()
    }

    pub fn dimension_at(&self, n: usize) -> i64 {
        class_degree(&self.terms[n])
    }

    /// Sum of the dimensions of all known terms.
    pub fn total_dimension(&self) -> i64 {
        (0..self.terms.len()).map(|n| self.dimension_at(n)).sum()
    }

    pub fn multiplicities(&self, n: usize) -> Result<GrothVector> {
        self.terms[n].decompose()
    }

    /// First `n₀` with terms `n₀, n₀+1, n₀+2` all zero, if one exists
    /// inside the truncation.
    pub fn vanishing_start(&self) -> Option<usize> {
        let zero: Vec<bool> = self.terms.iter().map(ClassFunction::is_zero).collect();
        (0..zero.len().saturating_sub(2)).find(|&n| zero[n] && zero[n + 1] && zero[n + 2])
    }

    /// Values of the series at one class, term by term.
    pub fn at_class(&self, class: usize) -> Vec<CycNum> {
        self.terms.iter().map(|t| t.values()[class].clone()).collect()
    }

    /// Restricts to the first `depth + 1` terms.
    pub fn truncate(&self, depth: usize) -> CharacterSeries {
        let mut out = self.clone();
        out.terms.truncate(depth + 1);
        out
    }
}

pub(crate) fn class_degree(f: &ClassFunction) -> i64 {
    f.degree()
        .to_rational()
        .and_then(|r| to_i64(&r))
        .expect("character degree is an integer")
}

/// `χ_{S^n h*}·χ_τ` at weight `h_c(τ) + n`.
pub fn m_character(tau: IrrepLabel, c: &Rational, depth: usize) -> CharacterSeries {
    let chi = ClassFunction::irrep(tau);
    CharacterSeries {
        tau,
        c: c.clone(),
        lowest: lowest_weight(tau, c),
        terms: sym_power_characters(depth).iter().map(|s| s * &chi).collect(),
    }
}

type LCache = Mutex<HashMap<(Rational, IrrepLabel), Vec<ClassFunction>>>;

fn l_cache() -> &'static LCache {
    static CACHE: OnceLock<LCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Character of `L_c(τ)` through degree `depth`: `M_c(τ)[n]` minus the
/// radical of `B_n`.
pub fn graded_l_character(tau: IrrepLabel, c: &Rational, depth: usize) -> Result<CharacterSeries> {
    let key = (c.clone(), tau);
    let mut known = l_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&key)
        .cloned()
        .unwrap_or_default();
    if known.len() <= depth {
        let ctx = ModuleContext::new(tau, c.clone());
        for n in known.len()..=depth {
            known.push(ctx.l_piece_character(n)?);
        }
        let mut cache = l_cache().lock().unwrap_or_else(|e| e.into_inner());
        let slot = cache.entry(key).or_default();
        if slot.len() < known.len() {
            *slot = known.clone();
        }
    }
    known.truncate(depth + 1);
    Ok(CharacterSeries {
        tau,
        c: c.clone(),
        lowest: lowest_weight(tau, c),
        terms: known,
    })
}

/// [`graded_l_character`] for all eight irreducibles, one thread each.
pub fn graded_l_characters(c: &Rational, depth: usize) -> Result<Vec<CharacterSeries>> {
    std::thread::scope(|s| {
        let handles: Vec<_> = IrrepLabel::ALL
            .iter()
            .map(|&tau| s.spawn(move || graded_l_character(tau, c, depth)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::inconsistency("worker thread panicked"))))
            .collect()
    })
}

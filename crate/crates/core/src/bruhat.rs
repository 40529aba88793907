//! Bruhat order, lower intervals and their Poincaré coefficients.
//!
//! `u ≤ w` holds when some reduced word of `u` occurs as an ordered subword
//! of a reduced word of `w`. Two independent algorithms are provided: the
//! descent recursion for pairwise comparisons, and the sub-product dynamic
//! program that sweeps one reduced word of `w` and collects every subword
//! product, yielding the whole lower interval at once. The interval's
//! coefficient list `b_k = #{u ≤ w : l(u) = k}` is the Poincaré vector of
//! the associated variety; palindromicity of that vector is the rational
//! smoothness criterion.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::coxeter::{CoxeterElement, Side, WeylGroup};
use crate::{Error, Result};

/// The lower order ideal `{u : u ≤ w}` with its Poincaré coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatInterval {
    top: CoxeterElement,
    members: Vec<CoxeterElement>,
    poincare: Vec<BigUint>,
}

impl BruhatInterval {
    pub fn top(&self) -> &CoxeterElement {
        &self.top
    }

    /// Members sorted by (length, canonical word).
    pub fn members(&self) -> &[CoxeterElement] {
        &self.members
    }

    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    /// Coefficients `b_0..b_{l(w)}`, ascending degree.
    pub fn poincare(&self) -> &[BigUint] {
        &self.poincare
    }

    pub fn contains(&self, u: &CoxeterElement) -> bool {
        self.members.binary_search(u).is_ok()
    }

    /// True iff `b_k = b_{l(w)-k}` for all k: the rational smoothness test.
    pub fn is_palindromic(&self) -> bool {
        let b = &self.poincare;
        (0..b.len()).all(|k| b[k] == b[b.len() - 1 - k])
    }
}

/// Bruhat comparison by the descent recursion: pick a left descent s of w;
/// then u ≤ w iff (su ≤ sw when s is also a left descent of u, else u ≤ sw).
pub fn leq(group: &WeylGroup, u: &CoxeterElement, w: &CoxeterElement) -> Result<bool> {
    group.check_element(u)?;
    group.check_element(w)?;
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.is_identity() {
            return Ok(true);
        }
        if u.length() > w.length() {
            return Ok(false);
        }
        let s = w.word()[0]; // first letter of the canonical word is a left descent
        let sw = group.multiply_generator(&w, s, Side::Left)?;
        let su = group.multiply_generator(&u, s, Side::Left)?;
        if su.length() < u.length() {
            u = su;
        }
        w = sw;
    }
}

/// Lower interval `[e, w]` by the sub-product dynamic program over the
/// canonical reduced word of `w`.
pub fn lower_interval(group: &WeylGroup, w: &CoxeterElement) -> Result<BruhatInterval> {
    group.check_element(w)?;
    interval_from_word(group, w, &w.word().to_vec())
}

/// Same dynamic program over an explicitly supplied reduced word of `w`.
/// The result does not depend on which reduced word is used.
pub fn lower_interval_with_word(
    group: &WeylGroup,
    w: &CoxeterElement,
    word: &[usize],
) -> Result<BruhatInterval> {
    group.check_element(w)?;
    let product = group.element_from_word(word)?;
    if &product != w || word.len() != w.length() {
        return Err(Error::MalformedWord(format!(
            "{} is not a reduced word for {}",
            crate::coxeter::format_word(word),
            w
        )));
    }
    interval_from_word(group, w, word)
}

fn interval_from_word(
    group: &WeylGroup,
    w: &CoxeterElement,
    word: &[usize],
) -> Result<BruhatInterval> {
    let mut set: HashSet<CoxeterElement> = HashSet::new();
    set.insert(group.identity());
    for &s in word {
        let extended: Vec<CoxeterElement> = set
            .iter()
            .map(|u| group.multiply_generator(u, s, Side::Right))
            .collect::<Result<_>>()?;
        set.extend(extended);
    }
    let mut members: Vec<CoxeterElement> = set.into_iter().collect();
    members.sort();
    debug_assert!(members.binary_search(w).is_ok());

    let mut poincare = vec![BigUint::from(0u32); w.length() + 1];
    for u in &members {
        poincare[u.length()] += 1u32;
    }
    Ok(BruhatInterval {
        top: w.clone(),
        members,
        poincare,
    })
}

/// All covering pairs `u ⋖ v` inside the interval, sorted by
/// (l(u), word of u, word of v) for deterministic output.
pub fn covering_edges(
    group: &WeylGroup,
    interval: &BruhatInterval,
) -> Result<Vec<(CoxeterElement, CoxeterElement)>> {
    let members = interval.members();
    let mut edges = Vec::new();
    for v in members {
        for u in members {
            if u.length() + 1 != v.length() {
                continue;
            }
            if leq(group, u, v)? {
                edges.push((u.clone(), v.clone()));
            }
        }
    }
    edges.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    Ok(edges)
}

//! Smoothness of the associated varieties in series A, decided by
//! permutation pattern avoidance.
//!
//! A series-A Schubert-type variety is smooth exactly when the one-line
//! notation of its Weyl group label avoids both 3412 and 4231. The same
//! question answered through Poincaré-coefficient palindromicity (rational
//! smoothness) must agree in series A, which gives the engine two fully
//! independent oracles to cross-check.

use std::fmt;

use crate::coxeter::{CoxeterElement, WeylGroup};
use crate::{Error, Result};

/// A permutation of `{1..m}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        validate_one_line(&one_line)?;
        Ok(Permutation { one_line })
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.one_line.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Number of pairs i < j with values out of order.
    pub fn inversions(&self) -> usize {
        let v = &self.one_line;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A pattern is a (short) permutation matched inside longer ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    one_line: Vec<usize>,
}

impl Pattern {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        validate_one_line(&one_line)?;
        Ok(Pattern { one_line })
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }
}

fn validate_one_line(one_line: &[usize]) -> Result<()> {
    let m = one_line.len();
    let mut seen = vec![false; m];
    for &v in one_line {
        if v == 0 || v > m || seen[v - 1] {
            return Err(Error::MalformedPermutation(format!(
                "{one_line:?} is not a bijection on 1..{m}"
            )));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// The two patterns whose avoidance characterizes smoothness in series A.
pub fn smoothness_patterns() -> [Pattern; 2] {
    [
        Pattern::new(vec![3, 4, 1, 2]).expect("valid pattern"),
        Pattern::new(vec![4, 2, 3, 1]).expect("valid pattern"),
    ]
}

/// True iff some increasing index choice in `perm` carries the values of
/// `pat` in the same relative order. Naive scan with early pruning; fine for
/// the desk-scale permutations this engine targets.
pub fn contains_pattern(perm: &Permutation, pat: &Pattern) -> Result<bool> {
    let m = perm.len();
    let k = pat.len();
    if k > m {
        return Err(Error::PatternLongerThanPermutation {
            pattern: k,
            perm: m,
        });
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    Ok(search(perm.one_line(), pat.one_line(), 0, &mut chosen))
}

fn search(perm: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pat.len() {
        return true;
    }
    // Not enough positions left to finish the pattern.
    let remaining = pat.len() - j;
    for i in start..=perm.len().saturating_sub(remaining) {
        let v = perm[i];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(jj, &prev)| (pat[jj] < pat[j]) == (prev < v));
        if consistent {
            chosen.push(v);
            if search(perm, pat, i + 1, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Smoothness oracle for series A: the associated variety of `w` is smooth
/// iff its one-line notation avoids 3412 and 4231.
pub fn is_smooth_type_a(group: &WeylGroup, w: &CoxeterElement) -> Result<bool> {
    let perm = group.to_permutation(w)?;
    for pat in smoothness_patterns() {
        if perm.len() < pat.len() {
            continue;
        }
        if contains_pattern(&perm, &pat)? {
            return Ok(false);
        }
    }
    Ok(true)
}

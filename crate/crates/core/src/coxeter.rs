//! Weyl group elements as signed permutations of the positive roots.
//!
//! An element is stored as its action on the positive-root list (each root
//! maps to ± another positive root) together with its canonical reduced word.
//! The canonical word is the ShortLex-minimal reduced expression, recomputed
//! deterministically from the root action by repeatedly stripping the
//! smallest left descent. Length equals the number of positive roots sent to
//! negative roots, so both length and descent sets read off the action
//! directly.
//!
//! Generator indices are 1-based everywhere in the public API, matching the
//! serialized word form `"1,2,1"` (the empty word prints as `"e"`).

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::rootdata::{RootSystem, Series};
use crate::schubert::Permutation;
use crate::{Error, Result};

/// Side of a multiplication or descent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A subset of the simple generators, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    indices: BTreeSet<usize>,
}

impl GeneratorSet {
    pub fn empty() -> Self {
        GeneratorSet::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        GeneratorSet {
            indices: indices.into_iter().collect(),
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.contains(&index)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Element of a Weyl group: canonical reduced word plus the signed
/// permutation it induces on the positive roots.
///
/// Equality, hashing and ordering are all determined by the canonical word
/// (which in turn is a deterministic function of the action); ordering is by
/// (length, word), the ShortLex order used for every deterministic listing.
#[derive(Debug, Clone)]
pub struct CoxeterElement {
    word: Vec<usize>,
    action: Vec<i32>,
    fingerprint: u64,
}

impl CoxeterElement {
    /// Canonical reduced word, 1-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Coxeter length; equal to the number of inversions of the action.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of positive roots mapped to negative roots. Always equals
    /// `length()`; exposed so the two computations can be compared.
    pub fn inversion_count(&self) -> usize {
        self.action.iter().filter(|&&v| v < 0).count()
    }

}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.word == other.word
    }
}

impl Eq for CoxeterElement {}

impl Hash for CoxeterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.fingerprint.hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.word))
    }
}

/// Serializes a word as comma-separated 1-based indices; empty is `"e"`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses `"e"` or comma-separated 1-based generator indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::MalformedWord(s.to_string()));
    }
    s.split(',')
        .map(|part| {
            let index: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::MalformedWord(s.to_string()))?;
            if index == 0 {
                return Err(Error::MalformedWord(s.to_string()));
            }
            Ok(index)
        })
        .collect()
}

/// A Weyl group, realized through the reflection action of its generators on
/// the positive roots of a [`RootSystem`].
#[derive(Debug, Clone)]
pub struct WeylGroup {
    system: RootSystem,
    // tables[g][k] = signed image of the k-th positive root under s_{g+1},
    // encoded as ±(index+1).
    tables: Vec<Vec<i32>>,
    // simple_indices[g] = position of the g-th simple root in the root list.
    simple_indices: Vec<usize>,
    fingerprint: u64,
}

impl WeylGroup {
    pub fn new(system: RootSystem) -> Self {
        let rank = system.rank();
        let n = system.num_positive();
        let index_of = system.root_index_map();
        let tables = (0..rank)
            .map(|g| {
                (0..n)
                    .map(|k| {
                        let (idx, negated) = system.reflect_positive_root(g, k, &index_of);
                        let signed = (idx + 1) as i32;
                        if negated {
                            -signed
                        } else {
                            signed
                        }
                    })
                    .collect()
            })
            .collect();
        let simple_indices = (0..rank)
            .map(|g| {
                let mut unit = vec![0i64; rank];
                unit[g] = 1;
                index_of[&unit]
            })
            .collect();
        let fingerprint = fingerprint_of(&system);
        WeylGroup {
            system,
            tables,
            simple_indices,
            fingerprint,
        }
    }

    /// Parse a system spec, build the root system, and wrap it.
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(WeylGroup::new(RootSystem::parse(spec)?))
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.system.num_positive()
    }

    pub(crate) fn check_element(&self, w: &CoxeterElement) -> Result<()> {
        if w.fingerprint == self.fingerprint {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    fn check_generator(&self, s: usize) -> Result<()> {
        if s >= 1 && s <= self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: s,
                len: self.rank(),
            })
        }
    }

    pub fn identity(&self) -> CoxeterElement {
        let n = self.num_positive();
        let action = (1..=n as i32).collect();
        CoxeterElement {
            word: Vec::new(),
            action,
            fingerprint: self.fingerprint,
        }
    }

    /// The simple reflection with the given 1-based index.
    pub fn generator(&self, s: usize) -> Result<CoxeterElement> {
        self.multiply_generator(&self.identity(), s, Side::Right)
    }

    /// Multiplies by a simple reflection on the chosen side. Length changes
    /// by exactly ±1.
    pub fn multiply_generator(
        &self,
        w: &CoxeterElement,
        s: usize,
        side: Side,
    ) -> Result<CoxeterElement> {
        self.check_element(w)?;
        self.check_generator(s)?;
        let table = &self.tables[s - 1];
        let action: Vec<i32> = match side {
            // (w s)(α_k) = w(s(α_k))
            Side::Right => table.iter().map(|&t| apply_signed(&w.action, t)).collect(),
            // (s w)(α_k) = s(w(α_k))
            Side::Left => w.action.iter().map(|&t| apply_signed(table, t)).collect(),
        };
        Ok(self.element_from_action(action))
    }

    /// Product of two elements of the same group.
    pub fn multiply(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        self.check_element(u)?;
        self.check_element(v)?;
        // (u v)(α) = u(v(α))
        let action = v.action.iter().map(|&t| apply_signed(&u.action, t)).collect();
        Ok(self.element_from_action(action))
    }

    pub fn inverse(&self, w: &CoxeterElement) -> Result<CoxeterElement> {
        self.check_element(w)?;
        Ok(self.element_from_action(invert_signed(&w.action)))
    }

    /// Normalizes an arbitrary (possibly non-reduced) word into an element.
    pub fn element_from_word(&self, word: &[usize]) -> Result<CoxeterElement> {
        let mut w = self.identity();
        for &s in word {
            w = self.multiply_generator(&w, s, Side::Right)?;
        }
        Ok(w)
    }

    /// Descent set: generators s with `l(ws) < l(w)` (right) or
    /// `l(sw) < l(w)` (left).
    pub fn descents(&self, w: &CoxeterElement, side: Side) -> Result<GeneratorSet> {
        self.check_element(w)?;
        let action = match side {
            Side::Right => w.action.clone(),
            Side::Left => invert_signed(&w.action),
        };
        Ok(GeneratorSet::from_indices((1..=self.rank()).filter(|&g| {
            action[self.simple_indices[g - 1]] < 0
        })))
    }

    /// Longest element of the parabolic subgroup generated by `J`: the unique
    /// element of that subgroup whose right-descent set is exactly `J`.
    pub fn longest_element(&self, subset: &GeneratorSet) -> Result<CoxeterElement> {
        for s in subset.iter() {
            self.check_generator(s)?;
        }
        let mut w = self.identity();
        loop {
            // Multiply by the smallest generator in J that still lengthens w.
            let next = subset
                .iter()
                .find(|&g| w.action[self.simple_indices[g - 1]] > 0);
            match next {
                Some(g) => w = self.multiply_generator(&w, g, Side::Right)?,
                None => return Ok(w),
            }
        }
    }

    /// Longest element of the whole group.
    pub fn longest(&self) -> CoxeterElement {
        self.longest_element(&GeneratorSet::from_indices(1..=self.rank()))
            .expect("full generator set is valid")
    }

    /// All group elements, each exactly once, sorted by (length, canonical
    /// word). Fails with [`Error::GroupTooLarge`] once more than `max_order`
    /// elements have been found.
    pub fn enumerate(&self, max_order: u64) -> Result<Vec<CoxeterElement>> {
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut elements: Vec<CoxeterElement> = Vec::new();
        let mut level = vec![self.identity()];
        seen.insert(level[0].action.clone());
        while !level.is_empty() {
            if elements.len() + level.len() > max_order as usize {
                return Err(Error::GroupTooLarge { bound: max_order });
            }
            let mut next: Vec<CoxeterElement> = Vec::new();
            for w in &level {
                for s in 1..=self.rank() {
                    let ws = self.multiply_generator(w, s, Side::Right)?;
                    if ws.length() > w.length() && seen.insert(ws.action.clone()) {
                        next.push(ws);
                    }
                }
            }
            next.sort();
            elements.append(&mut level);
            level = next;
        }
        Ok(elements)
    }

    /// One-line notation of a series-A element, with the i-th generator
    /// acting as the adjacent transposition (i, i+1) on `{1..rank+1}`.
    pub fn to_permutation(&self, w: &CoxeterElement) -> Result<Permutation> {
        self.check_element(w)?;
        if self.system.series() != Series::A {
            return Err(Error::NotTypeA);
        }
        let m = self.rank() + 1;
        let mut one_line: Vec<usize> = (1..=m).collect();
        for &s in &w.word {
            one_line.swap(s - 1, s);
        }
        Permutation::new(one_line)
    }

    fn element_from_action(&self, action: Vec<i32>) -> CoxeterElement {
        let word = self.canonical_word(&action);
        CoxeterElement {
            word,
            action,
            fingerprint: self.fingerprint,
        }
    }

    /// ShortLex-minimal reduced word: repeatedly strip the smallest left
    /// descent. Each strip removes exactly one inversion.
    fn canonical_word(&self, action: &[i32]) -> Vec<usize> {
        let mut current = action.to_vec();
        let mut word = Vec::new();
        loop {
            let inverse = invert_signed(&current);
            let descent = (1..=self.rank()).find(|&g| inverse[self.simple_indices[g - 1]] < 0);
            match descent {
                Some(g) => {
                    word.push(g);
                    let table = &self.tables[g - 1];
                    for entry in &mut current {
                        *entry = apply_signed(table, *entry);
                    }
                }
                None => break,
            }
        }
        word
    }
}

fn apply_signed(action: &[i32], value: i32) -> i32 {
    let image = action[(value.unsigned_abs() as usize) - 1];
    if value < 0 {
        -image
    } else {
        image
    }
}

fn invert_signed(action: &[i32]) -> Vec<i32> {
    let mut inverse = vec![0i32; action.len()];
    for (k, &v) in action.iter().enumerate() {
        let idx = (v.unsigned_abs() as usize) - 1;
        let back = (k + 1) as i32;
        inverse[idx] = if v < 0 { -back } else { back };
    }
    inverse
}

fn fingerprint_of(system: &RootSystem) -> u64 {
    let mut hasher = DefaultHasher::new();
    system.datum().matrix().hash(&mut hasher);
    hasher.finish()
}

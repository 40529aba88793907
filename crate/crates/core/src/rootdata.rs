//! Root systems generated from Cartan data and the weight-parameter
//! predicates used to gate realization verdicts.
//!
//! Roots are stored as integer coordinate vectors in the simple-root basis,
//! coroots in the simple-coroot basis. The Cartan matrix convention is
//! `a[i][j] = value of the i-th simple coroot on the j-th simple root`, so the
//! simple reflection acts by `s_i(β) = β − (row_i · β) α_i`. Coroot expansions
//! come from running the same closure on the transposed matrix, which is the
//! Cartan matrix of the dual root system.
//!
//! Weights live in the fundamental-weight basis: `coords[i]` is the value of
//! the weight on the i-th simple coroot. All coordinates are exact rationals,
//! so the integral/regular/antidominant predicates are exact.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::{Error, Result};

/// Default ceiling on the number of positive roots the closure may generate
/// before the Cartan datum is rejected as non-finite.
pub const DEFAULT_ROOT_BOUND: usize = 10_000;

/// Classical series label, or `Custom` for an explicit Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    Custom,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::A => write!(f, "A"),
            Series::B => write!(f, "B"),
            Series::C => write!(f, "C"),
            Series::D => write!(f, "D"),
            Series::Custom => write!(f, "custom"),
        }
    }
}

/// A validated Cartan matrix together with its series label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    series: Series,
    rank: usize,
    matrix: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct MatrixSpec {
    cartan_matrix: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Standard Cartan matrix of a classical series.
    ///
    /// Ranks accepted: A requires rank ≥ 1, B and C rank ≥ 1 (rank 1
    /// degenerates to A1), D rank ≥ 2.
    pub fn from_series(series: Series, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::MalformedCartanMatrix(
                "rank must be at least 1".into(),
            ));
        }
        let min_rank = match series {
            Series::A | Series::B | Series::C => 1,
            Series::D => 2,
            Series::Custom => {
                return Err(Error::MalformedCartanMatrix(
                    "custom series requires an explicit matrix".into(),
                ))
            }
        };
        if rank < min_rank {
            return Err(Error::MalformedCartanMatrix(format!(
                "series {series} requires rank at least {min_rank}"
            )));
        }
        let matrix = standard_matrix(series, rank);
        let datum = CartanDatum {
            series,
            rank,
            matrix,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Cartan datum from an explicit integer matrix.
    pub fn custom(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::MalformedCartanMatrix("empty matrix".into()));
        }
        let datum = CartanDatum {
            series: Series::Custom,
            rank,
            matrix,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Parses `"A2"`, `"B3"`, `"D4"`, ... or a JSON object with a
    /// `"cartan_matrix"` key holding an integer matrix.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.starts_with('{') {
            let parsed: MatrixSpec = serde_json::from_str(spec)
                .map_err(|e| Error::MalformedSystemSpec(format!("{spec}: {e}")))?;
            return Self::custom(parsed.cartan_matrix);
        }
        let mut chars = spec.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::MalformedSystemSpec(spec.to_string()))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            _ => return Err(Error::MalformedSystemSpec(spec.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::MalformedSystemSpec(spec.to_string()))?;
        if rank == 0 {
            return Err(Error::MalformedSystemSpec(spec.to_string()));
        }
        Self::from_series(series, rank)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank;
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedCartanMatrix(format!(
                    "row {i} has length {} in a rank-{n} matrix",
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::MalformedCartanMatrix(format!(
                        "diagonal entry ({i},{j}) is {a}, expected 2"
                    )));
                }
                if i != j && a > 0 {
                    return Err(Error::MalformedCartanMatrix(format!(
                        "off-diagonal entry ({i},{j}) is {a}, expected ≤ 0"
                    )));
                }
                if i != j && (a == 0) != (self.matrix[j][i] == 0) {
                    return Err(Error::MalformedCartanMatrix(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree on vanishing"
                    )));
                }
            }
        }
        if self.series != Series::Custom && self.matrix != standard_matrix(self.series, n) {
            return Err(Error::MalformedCartanMatrix(format!(
                "matrix does not match the standard {}{} matrix",
                self.series, n
            )));
        }
        Ok(())
    }
}

fn standard_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        m[i][i] = 2;
        if i + 1 < rank {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    match series {
        Series::A | Series::Custom => {}
        // Last simple root short: the final coroot row pairs to -2.
        Series::B => {
            if rank >= 2 {
                m[rank - 1][rank - 2] = -2;
            }
        }
        // Last simple root long: transpose of the B arrangement.
        Series::C => {
            if rank >= 2 {
                m[rank - 2][rank - 1] = -2;
            }
        }
        // Fork: the last node attaches to node rank-2 instead of rank-1.
        Series::D => {
            m[rank - 1][rank - 2] = 0;
            m[rank - 2][rank - 1] = 0;
            if rank >= 3 {
                m[rank - 1][rank - 3] = -1;
                m[rank - 3][rank - 1] = -1;
            }
        }
    }
    m
}

/// A finite root system: positive roots in simple-root coordinates and
/// positive coroots in simple-coroot coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Generates the full positive system by simple-reflection closure, with
    /// the default root-count bound.
    pub fn build(datum: CartanDatum) -> Result<Self> {
        Self::build_with_root_bound(datum, DEFAULT_ROOT_BOUND)
    }

    /// Same as [`RootSystem::build`] with an explicit bound; exceeding it
    /// yields [`Error::NonFiniteType`].
    pub fn build_with_root_bound(datum: CartanDatum, bound: usize) -> Result<Self> {
        let positive_roots = close_positive_system(datum.matrix(), bound)?;
        let transposed = transpose(datum.matrix());
        let positive_coroots = close_positive_system(&transposed, bound)?;
        debug_assert_eq!(positive_roots.len(), positive_coroots.len());
        Ok(RootSystem {
            datum,
            positive_roots,
            positive_coroots,
        })
    }

    /// Convenience: parse a system spec and build.
    pub fn parse(spec: &str) -> Result<Self> {
        Self::build(CartanDatum::parse(spec)?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn series(&self) -> Series {
        self.datum.series
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    /// Number of positive roots N. Equals the complex dimension of the flag
    /// manifold of the group on one factor.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// Simple roots as coordinate unit vectors.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v
            })
            .collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// Image of the k-th positive root under the i-th simple reflection
    /// (0-based), as a signed index into the positive-root list: the result
    /// is `(index, negated)`.
    pub(crate) fn reflect_positive_root(
        &self,
        gen: usize,
        root_index: usize,
        index_of: &HashMap<Vec<i64>, usize>,
    ) -> (usize, bool) {
        let row = &self.datum.matrix()[gen];
        let beta = &self.positive_roots[root_index];
        let pairing: i64 = row.iter().zip(beta).map(|(a, b)| a * b).sum();
        let mut image = beta.clone();
        image[gen] -= pairing;
        if image.iter().all(|&c| c >= 0) {
            (index_of[&image], false)
        } else {
            for c in &mut image {
                *c = -*c;
            }
            (index_of[&image], true)
        }
    }

    pub(crate) fn root_index_map(&self) -> HashMap<Vec<i64>, usize> {
        self.positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect()
    }

    /// Half-sum of positive roots: value 1 on every simple coroot.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![BigRational::one(); self.rank()])
    }

    /// Value of `lambda` on the positive coroot with the given index.
    pub fn coroot_value(&self, lambda: &Weight, coroot_index: usize) -> Result<BigRational> {
        let coroot = self
            .positive_coroots
            .get(coroot_index)
            .ok_or(Error::IndexOutOfRange {
                index: coroot_index,
                len: self.positive_coroots.len(),
            })?;
        Ok(coroot
            .iter()
            .zip(lambda.coords())
            .map(|(&c, v)| BigRational::from(BigInt::from(c)) * v)
            .sum())
    }

    /// True iff every positive-coroot value is an integer. Negative roots
    /// give negated values, so checking the positive system suffices.
    pub fn is_integral(&self, lambda: &Weight) -> bool {
        self.coroot_values(lambda).all(|v| v.is_integer())
    }

    /// True iff no positive-coroot value is zero.
    pub fn is_regular(&self, lambda: &Weight) -> bool {
        self.coroot_values(lambda).all(|v| !v.is_zero())
    }

    /// True iff no positive-coroot value is a strictly positive integer.
    /// Zero is permitted: singular antidominant parameters are meaningful.
    pub fn is_antidominant(&self, lambda: &Weight) -> bool {
        self.coroot_values(lambda)
            .all(|v| !(v.is_integer() && v.is_positive()))
    }

    /// Shift from the lowest-weight parameter `mu` to the twisted-sheaf
    /// parameter `mu − rho`.
    pub fn shift_to_d_module_parameter(&self, mu: &Weight) -> Weight {
        mu.sub(&self.rho())
    }

    fn coroot_values<'a>(&'a self, lambda: &'a Weight) -> impl Iterator<Item = BigRational> + 'a {
        self.positive_coroots.iter().map(|coroot| {
            coroot
                .iter()
                .zip(lambda.coords())
                .map(|(&c, v)| BigRational::from(BigInt::from(c)) * v)
                .sum()
        })
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Closure of the simple roots under simple reflections, restricted to the
/// positive cone. Roots come out sorted by (height, coordinates), which fixes
/// the positive-root ordering everywhere downstream.
fn close_positive_system(matrix: &[Vec<i64>], bound: usize) -> Result<Vec<Vec<i64>>> {
    let rank = matrix.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        seen.insert(v.clone(), ());
        queue.push(v);
    }
    while let Some(beta) = queue.pop() {
        for i in 0..rank {
            let pairing: i64 = matrix[i].iter().zip(&beta).map(|(a, b)| a * b).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && !seen.contains_key(&image) {
                if seen.len() >= bound {
                    return Err(Error::NonFiniteType { limit: bound });
                }
                seen.insert(image.clone(), ());
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_keys().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    Ok(roots)
}

/// A weight in the fundamental-weight basis: `coords[i]` is its value on the
/// i-th simple coroot. Exact rational arithmetic throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Weight { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight {
            coords: coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        }
    }

    /// Parses a comma-separated list of exact rationals, e.g. `"-1,1/2,3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                BigRational::from_str(part.trim())
                    .map_err(|_| Error::MalformedWeight(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::MalformedWeight(s.to_string()));
        }
        Ok(Weight { coords })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn negate(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

//! Orbit calculus on the full flag space of a complex reductive group.
//!
//! Both orbit families on `X = X₀ × X₀ᶜ` are indexed by the Weyl group. For
//! the label `w`, the symmetric-subgroup orbit has complex dimension
//! `N + l(w)` (N = number of positive roots = dim X₀), its codimension
//! `q = N − l(w)` is the vanishing number of the dual real-group orbit, and
//! the lower Bruhat interval of `w` lists the orbits inside the closure of
//! one and the smallest invariant open neighborhood of the other (Matsuki
//! duality reverses closure order). On top of that bookkeeping this module
//! decides parabolicity and smoothness and emits the realization verdict:
//! smooth closures yield an irreducible realization, singular ones do not
//! come with that guarantee.

use std::fmt;

use num_bigint::BigUint;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bruhat::{self, BruhatInterval};
use crate::coxeter::{format_word, CoxeterElement, Side, WeylGroup};
use crate::rootdata::{RootSystem, Series, Weight};
use crate::schubert::{self, Permutation};
use crate::{Error, Result};

/// Dimension and duality bookkeeping for one Weyl-group label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub w: CoxeterElement,
    pub length: u64,
    /// Complex dimension of the symmetric-subgroup orbit: `N + l(w)`.
    pub dim_k_orbit: u64,
    /// Codimension of that orbit in the flag space: `N − l(w)`. The unique
    /// degree where compactly supported cohomology on the dual orbit lives.
    pub vanishing_number: u64,
    /// Complex dimension of the full flag space, `2N`.
    pub dim_flag: u64,
    /// Size of the lower Bruhat interval of `w`.
    pub interval_size: u64,
}

/// Which closure order a comparison refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSide {
    /// Symmetric-subgroup orbits: closure order is the Bruhat order.
    KOrbit,
    /// Real-group orbits: Matsuki duality reverses the order.
    G0Orbit,
}

/// Smoothness of the associated variety: established, refuted, or only the
/// rational-smoothness proxy is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Singular,
    RationalOnly,
}

impl Smoothness {
    pub fn as_str(self) -> &'static str {
        match self {
            Smoothness::Smooth => "true",
            Smoothness::Singular => "false",
            Smoothness::RationalOnly => "rational_only",
        }
    }
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the classification for one orbit label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Smooth associated variety: the construction realizes the unique
    /// irreducible submodule of the standard module.
    IrreducibleRealization,
    /// Singular associated variety: no such guarantee; the singular verdict
    /// is deliberately not "reducible".
    NotGuaranteedSingular,
    /// Only rational smoothness was established, so no smoothness-based
    /// conclusion is drawn.
    RationalOnlyCaveat,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::IrreducibleRealization => "IRREDUCIBLE_REALIZATION",
            Verdict::NotGuaranteedSingular => "NOT_GUARANTEED_SINGULAR",
            Verdict::RationalOnlyCaveat => "RATIONAL_ONLY_CAVEAT",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full classification of one orbit label.
///
/// Serializes to JSON with the stable field set `word, one_line, length,
/// dim_k_orbit, vanishing_number, interval_size, poincare, parabolic,
/// rationally_smooth, smooth, verdict`, in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub descriptor: OrbitDescriptor,
    pub poincare: Vec<BigUint>,
    /// One-line notation, series A only.
    pub one_line: Option<Permutation>,
    pub parabolic: bool,
    pub rationally_smooth: bool,
    pub smooth: Smoothness,
    pub verdict: Verdict,
}

impl Serialize for ClassificationRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("ClassificationRecord", 11)?;
        state.serialize_field("word", &format_word(self.descriptor.w.word()))?;
        state.serialize_field("one_line", &self.one_line.as_ref().map(|p| p.one_line()))?;
        state.serialize_field("length", &self.descriptor.length)?;
        state.serialize_field("dim_k_orbit", &self.descriptor.dim_k_orbit)?;
        state.serialize_field("vanishing_number", &self.descriptor.vanishing_number)?;
        state.serialize_field("interval_size", &self.descriptor.interval_size)?;
        state.serialize_field("poincare", &poincare_numbers(&self.poincare))?;
        state.serialize_field("parabolic", &self.parabolic)?;
        state.serialize_field("rationally_smooth", &self.rationally_smooth)?;
        state.serialize_field("smooth", self.smooth.as_str())?;
        state.serialize_field("verdict", self.verdict.as_str())?;
        state.end()
    }
}

/// Poincaré coefficients as JSON integers, at arbitrary precision.
pub fn poincare_numbers(poincare: &[BigUint]) -> Vec<serde_json::Number> {
    poincare
        .iter()
        .map(|b| {
            serde_json::from_str(&b.to_string()).expect("decimal digits parse as a JSON number")
        })
        .collect()
}

/// Degree/weight data for one realization, the unit Serre duality acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationDescriptor {
    pub degree: u64,
    pub weight: Weight,
    pub region: Region,
}

/// Whether a realization descriptor refers to a single orbit or to its
/// smallest invariant open neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Orbit,
    OpenSet,
}

/// Composition-factor prediction for induction from a maximal parabolic
/// subgroup of `GL(n₁+n₂)` with Levi block sizes `n₁, n₂`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InductionPrediction {
    pub n1: u64,
    pub n2: u64,
    pub factor_count: u64,
    pub irreducible: bool,
}

/// Dimensions, vanishing number and interval size for the label `w`.
pub fn orbit_descriptor(group: &WeylGroup, w: &CoxeterElement) -> Result<OrbitDescriptor> {
    let interval = bruhat::lower_interval(group, w)?;
    descriptor_from_interval(group, &interval)
}

fn descriptor_from_interval(
    group: &WeylGroup,
    interval: &BruhatInterval,
) -> Result<OrbitDescriptor> {
    let w = interval.top();
    group.check_element(w)?;
    let n = group.num_positive() as u64;
    let length = w.length() as u64;
    debug_assert!(length <= n);
    Ok(OrbitDescriptor {
        w: w.clone(),
        length,
        dim_k_orbit: n + length,
        vanishing_number: n - length,
        dim_flag: 2 * n,
        interval_size: interval.size(),
    })
}

/// Labels of the orbits composing the smallest invariant open set around the
/// orbit of `w`: exactly the lower Bruhat interval. `w` itself labels the
/// unique orbit closed in that open set.
pub fn u_w_members(group: &WeylGroup, w: &CoxeterElement) -> Result<Vec<CoxeterElement>> {
    Ok(bruhat::lower_interval(group, w)?.members().to_vec())
}

/// Closure comparison between two orbit labels. On the symmetric-subgroup
/// side this is the Bruhat order; on the real-group side the order reverses.
pub fn closure_order(
    group: &WeylGroup,
    u: &CoxeterElement,
    w: &CoxeterElement,
    side: OrbitSide,
) -> Result<bool> {
    match side {
        OrbitSide::KOrbit => bruhat::leq(group, u, w),
        OrbitSide::G0Orbit => bruhat::leq(group, w, u),
    }
}

/// True iff `w` is the longest element of the parabolic subgroup generated
/// by its own right descents. Exactly these labels give invariant open sets
/// that are preimages of open orbits on a generalized flag space.
pub fn is_parabolic(group: &WeylGroup, w: &CoxeterElement) -> Result<bool> {
    group.check_element(w)?;
    let descents = group.descents(w, Side::Right)?;
    Ok(&group.longest_element(&descents)? == w)
}

/// Classifies one label, computing its lower interval on the way.
pub fn classify(group: &WeylGroup, w: &CoxeterElement) -> Result<ClassificationRecord> {
    let interval = bruhat::lower_interval(group, w)?;
    classify_with_interval(group, &interval)
}

/// Classifies the top of an already-computed lower interval.
pub fn classify_with_interval(
    group: &WeylGroup,
    interval: &BruhatInterval,
) -> Result<ClassificationRecord> {
    let descriptor = descriptor_from_interval(group, interval)?;
    let w = interval.top();
    let parabolic = is_parabolic(group, w)?;
    let rationally_smooth = interval.is_palindromic();
    let series = group.system().series();

    let smooth = match series {
        Series::A => {
            if schubert::is_smooth_type_a(group, w)? {
                Smoothness::Smooth
            } else {
                Smoothness::Singular
            }
        }
        // Simply laced: smooth and rationally smooth coincide.
        Series::D => {
            if rationally_smooth {
                Smoothness::Smooth
            } else {
                Smoothness::Singular
            }
        }
        // Failing the rational test still refutes smoothness; passing it
        // does not establish smoothness here.
        Series::B | Series::C | Series::Custom => {
            if rationally_smooth {
                Smoothness::RationalOnly
            } else {
                Smoothness::Singular
            }
        }
    };
    let verdict = match smooth {
        Smoothness::Smooth => Verdict::IrreducibleRealization,
        Smoothness::Singular => Verdict::NotGuaranteedSingular,
        Smoothness::RationalOnly => Verdict::RationalOnlyCaveat,
    };
    let one_line = if series == Series::A {
        Some(group.to_permutation(w)?)
    } else {
        None
    };
    Ok(ClassificationRecord {
        descriptor,
        poincare: interval.poincare().to_vec(),
        one_line,
        parabolic,
        rationally_smooth,
        smooth,
        verdict,
    })
}

/// Predicted composition-factor count `min{n₁, n₂}` for the maximal-parabolic
/// induction with Levi block sizes `n₁ + n₂`; irreducible exactly when one
/// block has size 1. Reported as a prediction, confirmed only on small cases.
pub fn induction_prediction(n1: i64, n2: i64) -> Result<InductionPrediction> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::NonPositivePartition { n1, n2 });
    }
    let factor_count = n1.min(n2) as u64;
    Ok(InductionPrediction {
        n1: n1 as u64,
        n2: n2 as u64,
        factor_count,
        irreducible: factor_count == 1,
    })
}

/// Number of labels with vanishing number 1, i.e. length `N − 1`. Always
/// equals the number of simple generators.
pub fn count_vanishing_one_orbits(group: &WeylGroup, max_order: u64) -> Result<u64> {
    let target = group.num_positive() - 1;
    Ok(group
        .enumerate(max_order)?
        .iter()
        .filter(|w| w.length() == target)
        .count() as u64)
}

/// Serre duality on realization descriptors: degree `p ↦ 2N − p`, weight
/// negated, region unchanged. An involution.
pub fn serre_dual(
    system: &RootSystem,
    descriptor: &RealizationDescriptor,
) -> Result<RealizationDescriptor> {
    let total = 2 * system.num_positive() as u64;
    if descriptor.degree > total {
        return Err(Error::DegreeOutOfRange {
            degree: descriptor.degree,
            max: total,
        });
    }
    Ok(RealizationDescriptor {
        degree: total - descriptor.degree,
        weight: descriptor.weight.negate(),
        region: descriptor.region,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Weight;

    fn group(spec: &str) -> WeylGroup {
        WeylGroup::parse(spec).unwrap()
    }

    #[test]
    fn descriptor_for_the_identity_of_a2() {
        let g = group("A2");
        let d = orbit_descriptor(&g, &g.identity()).unwrap();
        assert_eq!(d.dim_k_orbit, 3);
        assert_eq!(d.vanishing_number, 3);
        assert_eq!(d.dim_flag, 6);
        assert_eq!(d.interval_size, 1);
    }

    #[test]
    fn descriptor_for_the_longest_of_a2() {
        let g = group("A2");
        let d = orbit_descriptor(&g, &g.longest()).unwrap();
        assert_eq!(d.dim_k_orbit, 6);
        assert_eq!(d.vanishing_number, 0);
        assert_eq!(d.interval_size, 6);
    }

    #[test]
    fn descriptor_for_s1s2_in_a3() {
        let g = group("A3");
        let w = g.element_from_word(&[1, 2]).unwrap();
        let d = orbit_descriptor(&g, &w).unwrap();
        assert_eq!(d.dim_k_orbit, 8);
        assert_eq!(d.vanishing_number, 4);
    }

    #[test]
    fn dimension_arithmetic_always_sums_to_the_flag_dimension() {
        for spec in ["A3", "B2"] {
            let g = group(spec);
            for w in g.enumerate(100).unwrap() {
                let d = orbit_descriptor(&g, &w).unwrap();
                assert_eq!(d.dim_k_orbit + d.vanishing_number, d.dim_flag);
            }
        }
    }

    #[test]
    fn open_set_members() {
        let g = group("A2");
        let only_e = u_w_members(&g, &g.identity()).unwrap();
        assert_eq!(only_e, vec![g.identity()]);

        let all = u_w_members(&g, &g.longest()).unwrap();
        assert_eq!(all.len(), 6);

        let w = g.element_from_word(&[1, 2]).unwrap();
        let four: Vec<String> = u_w_members(&g, &w)
            .unwrap()
            .iter()
            .map(|u| u.to_string())
            .collect();
        assert_eq!(four, vec!["e", "1", "2", "1,2"]);
    }

    #[test]
    fn closure_order_reverses_between_sides() {
        let g = group("A2");
        let e = g.identity();
        let w0 = g.longest();
        assert!(closure_order(&g, &e, &w0, OrbitSide::KOrbit).unwrap());
        assert!(!closure_order(&g, &e, &w0, OrbitSide::G0Orbit).unwrap());
        assert!(closure_order(&g, &w0, &e, OrbitSide::G0Orbit).unwrap());

        let s1 = g.generator(1).unwrap();
        let s1s2 = g.element_from_word(&[1, 2]).unwrap();
        assert!(closure_order(&g, &s1, &s1s2, OrbitSide::KOrbit).unwrap());
    }

    #[test]
    fn parabolic_labels_of_a2() {
        let g = group("A2");
        let parabolic: Vec<String> = g
            .enumerate(10)
            .unwrap()
            .iter()
            .filter(|w| is_parabolic(&g, w).unwrap())
            .map(|w| w.to_string())
            .collect();
        assert_eq!(parabolic, vec!["e", "1", "2", "1,2,1"]);
    }

    #[test]
    fn eight_parabolic_labels_in_a3() {
        let g = group("A3");
        let count = g
            .enumerate(30)
            .unwrap()
            .iter()
            .filter(|w| is_parabolic(&g, w).unwrap())
            .count();
        assert_eq!(count, 8);
    }

    #[test]
    fn every_a2_orbit_realizes_irreducibly() {
        let g = group("A2");
        for w in g.enumerate(10).unwrap() {
            let record = classify(&g, &w).unwrap();
            assert_eq!(record.verdict, Verdict::IrreducibleRealization);
        }
    }

    #[test]
    fn a3_has_exactly_two_singular_verdicts() {
        let g = group("A3");
        let mut irreducible = 0;
        let mut singular_one_lines = Vec::new();
        for w in g.enumerate(30).unwrap() {
            let record = classify(&g, &w).unwrap();
            match record.verdict {
                Verdict::IrreducibleRealization => irreducible += 1,
                Verdict::NotGuaranteedSingular => {
                    singular_one_lines.push(record.one_line.unwrap().one_line().to_vec());
                }
                Verdict::RationalOnlyCaveat => panic!("series A never gets the caveat"),
            }
        }
        assert_eq!(irreducible, 22);
        singular_one_lines.sort();
        assert_eq!(
            singular_one_lines,
            vec![vec![3, 4, 1, 2], vec![4, 2, 3, 1]]
        );
    }

    #[test]
    fn parabolic_implies_smooth_in_small_type_a() {
        for n in 1..=4 {
            let g = group(&format!("A{n}"));
            for w in g.enumerate(200).unwrap() {
                let record = classify(&g, &w).unwrap();
                if record.parabolic {
                    assert_ne!(record.smooth, Smoothness::Singular);
                }
            }
        }
    }

    #[test]
    fn non_simply_laced_series_get_the_caveat() {
        let g = group("B2");
        for w in g.enumerate(10).unwrap() {
            let record = classify(&g, &w).unwrap();
            // Every B2 interval is palindromic, so only the proxy applies.
            assert!(record.rationally_smooth);
            assert_eq!(record.smooth, Smoothness::RationalOnly);
            assert_eq!(record.verdict, Verdict::RationalOnlyCaveat);
            assert!(record.one_line.is_none());
        }
    }

    #[test]
    fn induction_predictions() {
        for n in 1..=8 {
            let p = induction_prediction(1, n).unwrap();
            assert_eq!(p.factor_count, 1);
            assert!(p.irreducible);
        }
        let p22 = induction_prediction(2, 2).unwrap();
        assert_eq!(p22.factor_count, 2);
        assert!(!p22.irreducible);
        assert_eq!(induction_prediction(3, 3).unwrap().factor_count, 3);

        // Symmetric under swapping the blocks.
        for (a, b) in [(1, 5), (2, 3), (4, 4)] {
            let p = induction_prediction(a, b).unwrap();
            let q = induction_prediction(b, a).unwrap();
            assert_eq!(p.factor_count, q.factor_count);
            assert_eq!(p.irreducible, q.irreducible);
        }

        assert!(matches!(
            induction_prediction(0, 3),
            Err(Error::NonPositivePartition { .. })
        ));
        assert!(matches!(
            induction_prediction(2, -1),
            Err(Error::NonPositivePartition { .. })
        ));
    }

    #[test]
    fn vanishing_number_one_census_matches_the_rank() {
        assert_eq!(count_vanishing_one_orbits(&group("A1"), 10).unwrap(), 1);
        assert_eq!(count_vanishing_one_orbits(&group("A2"), 10).unwrap(), 2);
        assert_eq!(count_vanishing_one_orbits(&group("A3"), 30).unwrap(), 3);
    }

    #[test]
    fn serre_duality_swaps_degree_and_negates_weight() {
        let sys = RootSystem::parse("A2").unwrap();
        let start = RealizationDescriptor {
            degree: 0,
            weight: sys.rho(),
            region: Region::OpenSet,
        };
        let dual = serre_dual(&sys, &start).unwrap();
        assert_eq!(dual.degree, 6);
        assert_eq!(dual.weight, Weight::from_integers(&[-1, -1]));
        assert_eq!(dual.region, Region::OpenSet);

        let back = serre_dual(&sys, &dual).unwrap();
        assert_eq!(back, start);
    }

    #[test]
    fn serre_duality_pairs_vanishing_number_with_orbit_dimension() {
        let g = group("A3");
        let sys = g.system();
        for w in g.enumerate(30).unwrap() {
            let d = orbit_descriptor(&g, &w).unwrap();
            let r = RealizationDescriptor {
                degree: d.vanishing_number,
                weight: sys.rho().negate(),
                region: Region::Orbit,
            };
            let dual = serre_dual(sys, &r).unwrap();
            assert_eq!(dual.degree, d.dim_k_orbit);
        }
    }

    #[test]
    fn serre_duality_rejects_out_of_range_degrees() {
        let sys = RootSystem::parse("A2").unwrap();
        let bad = RealizationDescriptor {
            degree: 7,
            weight: sys.rho(),
            region: Region::Orbit,
        };
        assert!(matches!(
            serre_dual(&sys, &bad),
            Err(Error::DegreeOutOfRange { degree: 7, max: 6 })
        ));
    }

    #[test]
    fn record_json_contract() {
        let g = group("A2");
        let record = classify(&g, &g.identity()).unwrap();
        let json = serde_json::to_string(&record).unwrap();
        assert_eq!(
            json,
            "{\"word\":\"e\",\"one_line\":[1,2,3],\"length\":0,\"dim_k_orbit\":3,\
             \"vanishing_number\":3,\"interval_size\":1,\"poincare\":[1],\
             \"parabolic\":true,\"rationally_smooth\":true,\"smooth\":\"true\",\
             \"verdict\":\"IRREDUCIBLE_REALIZATION\"}"
        );
    }
}

//! Cross-validation of the two Bruhat-order routes: the sub-product dynamic
//! program must agree with the descent-recursion comparison on entire groups,
//! and the relation must satisfy the partial-order axioms.

use flagorbit_core::{bruhat, CoxeterElement, WeylGroup};

fn elements(group: &WeylGroup) -> Vec<CoxeterElement> {
    group.enumerate(1000).unwrap()
}

#[test]
fn interval_dp_equals_pairwise_filter_up_to_a4() {
    for n in 1..=4 {
        let g = WeylGroup::parse(&format!("A{n}")).unwrap();
        let all = elements(&g);
        for w in &all {
            let interval = bruhat::lower_interval(&g, w).unwrap();
            let filtered: Vec<&CoxeterElement> = all
                .iter()
                .filter(|u| bruhat::leq(&g, u, w).unwrap())
                .collect();
            assert_eq!(interval.size() as usize, filtered.len(), "w = {w}");
            for u in filtered {
                assert!(interval.contains(u), "u = {u}, w = {w}");
            }
        }
    }
}

#[test]
fn full_a3_relation_tables_are_identical() {
    let g = WeylGroup::parse("A3").unwrap();
    let all = elements(&g);
    let via_dp: Vec<Vec<bool>> = all
        .iter()
        .map(|w| {
            let interval = bruhat::lower_interval(&g, w).unwrap();
            all.iter().map(|u| interval.contains(u)).collect()
        })
        .collect();
    let via_leq: Vec<Vec<bool>> = all
        .iter()
        .map(|w| {
            all.iter()
                .map(|u| bruhat::leq(&g, u, w).unwrap())
                .collect()
        })
        .collect();
    assert_eq!(via_dp, via_leq);
}

#[test]
fn order_axioms_hold_on_small_groups() {
    for n in 1..=3 {
        let g = WeylGroup::parse(&format!("A{n}")).unwrap();
        let all = elements(&g);
        let leq = |u: &CoxeterElement, w: &CoxeterElement| bruhat::leq(&g, u, w).unwrap();
        for u in &all {
            assert!(leq(u, u));
        }
        for u in &all {
            for w in &all {
                if leq(u, w) && leq(w, u) {
                    assert_eq!(u, w);
                }
            }
        }
        for a in &all {
            for b in &all {
                if !leq(a, b) {
                    continue;
                }
                for c in &all {
                    if leq(b, c) {
                        assert!(leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn multiplying_by_the_longest_element_reverses_the_order() {
    let g = WeylGroup::parse("A3").unwrap();
    let w0 = g.longest();
    let all = elements(&g);
    for u in &all {
        for w in &all {
            let w0w = g.multiply(&w0, w).unwrap();
            let w0u = g.multiply(&w0, u).unwrap();
            assert_eq!(
                bruhat::leq(&g, u, w).unwrap(),
                bruhat::leq(&g, &w0w, &w0u).unwrap(),
                "u = {u}, w = {w}"
            );
        }
    }
}

#[test]
fn interval_from_any_reduced_word_matches_the_canonical_one() {
    // All reduced words of the longest element of A3, generated by brute
    // force, must produce the same interval.
    let g = WeylGroup::parse("A3").unwrap();
    let w0 = g.longest();
    let canonical = bruhat::lower_interval(&g, &w0).unwrap();
    let mut words = vec![vec![]];
    for _ in 0..w0.length() {
        let mut extended = Vec::new();
        for word in &words {
            for s in 1..=3usize {
                let mut next = word.clone();
                next.push(s);
                let element = g.element_from_word(&next).unwrap();
                if element.length() == next.len() {
                    extended.push(next);
                }
            }
        }
        words = extended;
    }
    let reduced_words_of_w0: Vec<Vec<usize>> = words
        .into_iter()
        .filter(|word| g.element_from_word(word).unwrap() == w0)
        .collect();
    assert_eq!(reduced_words_of_w0.len(), 16); // standard count for S4
    for word in reduced_words_of_w0 {
        let interval = bruhat::lower_interval_with_word(&g, &w0, &word).unwrap();
        assert_eq!(interval, canonical);
    }
}

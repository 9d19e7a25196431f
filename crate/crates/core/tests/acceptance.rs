//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured facts. Run with `--nocapture` to see the lines; the numbered
//! test names serve the same purpose in the default libtest output.

use std::collections::BTreeSet;
use std::sync::LazyLock;

use randic_core::enumerate::{self, EnumSpec};
use randic_core::family::{
    construct_member, enumerate_members, family_signature, is_member, petersen, FamilyName,
    FamilySpec,
};
use randic_core::graph::Graph;
use randic_core::radical::RadicalValue;
use randic_core::randic::{family_value, randic_of_signature, FamilyValueId};
use randic_core::transform::{delta_randic, find_sites, TransformKind, TransformSite};
use randic_core::verify::{
    extremal_search, verify_claim, ClaimParams, ClaimStatus, ExtremalReport, SearchOptions,
};

const WORKERS: usize = 2;

fn search(n: usize, k: usize, top: usize, max_degree: Option<usize>) -> ExtremalReport {
    extremal_search(
        n,
        k,
        &SearchOptions {
            top,
            max_degree,
            workers: WORKERS,
        },
    )
    .expect("search within ceilings")
}

/// Criteria 2 and 3 share the full (n=9, k=5) ranking.
static TOP2_9_5: LazyLock<ExtremalReport> = LazyLock::new(|| search(9, 5, 2, None));

fn member_codes(name: FamilyName, n: usize, k: usize) -> BTreeSet<String> {
    let spec = FamilySpec::new(name, n, k).expect("feasible spec");
    enumerate_members(&spec)
        .expect("within enumeration ceilings")
        .iter()
        .map(|g| g.canonical_code().0)
        .collect()
}

fn maximizer_codes(report: &ExtremalReport, rank: usize) -> BTreeSet<String> {
    report.ranked[rank]
        .maximizers
        .iter()
        .map(|m| m.graph6.clone())
        .collect()
}

#[test]
fn criterion_01_max_at_n8_k5_is_4_exactly_on_cubic_graphs() {
    let report = search(8, 5, 1, None);
    assert_eq!(report.ranked[0].value, RadicalValue::from_integer(4));
    for m in &report.ranked[0].maximizers {
        assert!(
            (0..m.graph.n()).all(|v| m.graph.degree(v) == 3),
            "non-cubic maximizer {}",
            m.graph6
        );
    }
    // Conversely, every connected cubic graph on 8 vertices attains it.
    let cubic = enumerate::enumerate(&EnumSpec {
        n: 8,
        m: 12,
        max_degree: Some(3),
        connected_only: true,
    })
    .unwrap();
    assert_eq!(cubic.len(), 5);
    let cubic_codes: BTreeSet<String> = cubic.iter().map(|g| g.canonical_code().0).collect();
    assert_eq!(maximizer_codes(&report, 0), cubic_codes);
    println!(
        "criterion 01: PASS - value 4 attained exactly by the {} connected cubic graphs on 8 vertices",
        cubic.len()
    );
}

#[test]
fn criterion_02_first_max_at_n9_k5_is_the_lambda1_signature_class() {
    let report = &*TOP2_9_5;
    let expected = family_value(FamilyValueId::Lambda1, 9, 5).unwrap();
    assert_eq!(report.ranked[0].value, expected);
    assert_eq!(report.ranked[0].decimal, "4.483163247594");

    let spec = FamilySpec::new(FamilyName::Omega1, 9, 5).unwrap();
    let sig = family_signature(&spec).unwrap();
    for m in &report.ranked[0].maximizers {
        assert_eq!(m.graph.edge_type_signature(), sig, "maximizer {}", m.graph6);
    }
    // Two-sided: the maximizer set IS the signature class.
    assert_eq!(
        maximizer_codes(report, 0),
        member_codes(FamilyName::Omega1, 9, 5)
    );
    // The explicit construction is among them.
    let built = construct_member(&spec).unwrap();
    assert!(maximizer_codes(report, 0).contains(&built.to_graph6()));
    println!(
        "criterion 02: PASS - first maximum 9/2 - (5-2*sqrt(6))/6 attained exactly by the {} \
         graphs with signature (3,3):11 (2,3):2",
        report.ranked[0].maximizers.len()
    );
}

#[test]
fn criterion_03_second_max_at_n9_k5_is_the_gamma2_signature_class() {
    let report = &*TOP2_9_5;
    let expected = family_value(FamilyValueId::Gamma2, 9, 5).unwrap();
    assert_eq!(report.ranked[1].value, expected);
    assert_eq!(report.ranked[1].decimal, "4.471197119307");

    let spec = FamilySpec::new(FamilyName::Omega5, 9, 5).unwrap();
    let sig = family_signature(&spec).unwrap();
    for m in &report.ranked[1].maximizers {
        assert_eq!(m.graph.edge_type_signature(), sig, "maximizer {}", m.graph6);
    }
    assert_eq!(
        maximizer_codes(report, 1),
        member_codes(FamilyName::Omega5, 9, 5)
    );
    println!(
        "criterion 03: PASS - second maximum 9/2 - (6-(2*sqrt(3)+sqrt(6)))/3 attained exactly by \
         the {} graphs with signature (4,3):4 (3,3):6 (2,3):2 (2,2):1; this confirms the \
         second-maximum family under its edge-signature reading (its printed degree-3 host \
         profile is inconsistent with the degree-4 endpoints)",
        report.ranked[1].maximizers.len()
    );
}

#[test]
fn criterion_04_max_at_n10_k6_is_5_exactly_on_cubic_graphs() {
    // The unrestricted run fits the budget, so no degree stratification is
    // needed: coverage is the full class.
    let report = search(10, 6, 1, None);
    assert!(report.coverage.starts_with("exhaustive"));
    assert_eq!(report.ranked[0].value, RadicalValue::from_integer(5));
    for m in &report.ranked[0].maximizers {
        assert!((0..m.graph.n()).all(|v| m.graph.degree(v) == 3));
    }
    let cubic = enumerate::enumerate(&EnumSpec {
        n: 10,
        m: 15,
        max_degree: Some(3),
        connected_only: true,
    })
    .unwrap();
    assert_eq!(cubic.len(), 19);
    let cubic_codes: BTreeSet<String> = cubic.iter().map(|g| g.canonical_code().0).collect();
    assert_eq!(maximizer_codes(&report, 0), cubic_codes);
    assert!(maximizer_codes(&report, 0).contains(&petersen().canonical_code().0));
    println!(
        "criterion 04: PASS - value 5 attained exactly by the {} connected cubic graphs on 10 \
         vertices (Petersen among them), unrestricted enumeration of {} classes",
        cubic.len(),
        report.class_size
    );
}

#[test]
fn criterion_05_degree_identities_hold_up_to_n8() {
    let result = verify_claim(
        "degree_identities",
        &ClaimParams {
            n: Some(8),
            k: None,
            workers: WORKERS,
        },
    )
    .unwrap();
    assert_eq!(result.status, ClaimStatus::Pass, "{result}");
    println!("criterion 05: PASS - {}", result.coverage);
}

#[test]
fn criterion_06_same_degree_edge_bound_holds_up_to_n8() {
    let result = verify_claim(
        "mii_bound",
        &ClaimParams {
            n: Some(8),
            k: None,
            workers: WORKERS,
        },
    )
    .unwrap();
    assert_eq!(result.status, ClaimStatus::Pass, "{result}");
    println!("criterion 06: PASS - {}", result.coverage);
}

fn run_mono(id: &str) -> String {
    let result = verify_claim(
        id,
        &ClaimParams {
            n: Some(9),
            k: Some(6),
            workers: WORKERS,
        },
    )
    .unwrap();
    assert_eq!(result.status, ClaimStatus::Pass, "{result}");
    result.coverage.clone()
}

#[test]
fn criterion_07a_t1_deltas_positive() {
    let coverage = run_mono("mono_t1");
    println!("criterion 07a: PASS - t1 strictly increases R; {coverage}");
}

#[test]
fn criterion_07b_t2_deltas_positive() {
    let coverage = run_mono("mono_t2");
    println!("criterion 07b: PASS - t2 strictly increases R; {coverage}");
}

#[test]
fn criterion_07c_t5_deltas_below_margin() {
    let coverage = run_mono("mono_t5");
    println!("criterion 07c: PASS - t5 strictly decreases R by more than 0.0068; {coverage}");
}

#[test]
fn criterion_07d_t4_deltas_nonnegative_with_equality_witness() {
    let coverage = run_mono("mono_t4");
    // The constructed zero-delta witness is validated inside the claim; the
    // transform module also pins it as a unit test.
    println!(
        "criterion 07d: PASS - t4 never decreases R and the equality case is witnessed; {coverage}"
    );
}

#[test]
fn criterion_07e_t3_degree2_subdivisions_tie_exactly() {
    let coverage = run_mono("mono_t3");
    // Direct spot check: subdividing any (2,2) edge of a cycle gives the
    // same exact value, 1/2 above the base.
    let c7 = Graph::cycle(7).unwrap();
    let mut values = BTreeSet::new();
    for site in find_sites(&c7, TransformKind::T3) {
        let TransformSite::T3 { .. } = site else {
            continue;
        };
        let delta = delta_randic(&c7, &site).unwrap();
        assert_eq!(delta, RadicalValue::from_ratio(1, 2));
        values.insert(delta.to_decimal(12));
    }
    assert_eq!(values.len(), 1);
    println!("criterion 07e: PASS - degree-(2,2) subdivisions are pairwise R-equal; {coverage}");
}

#[test]
fn criterion_08_family_signatures_values_and_constructions_agree() {
    let mut checked = 0;
    for name in FamilyName::ALL {
        let ks: Vec<usize> = match name.fixed_k() {
            Some(k) => vec![k],
            None => match name {
                FamilyName::Lambda1 | FamilyName::Gamma1 | FamilyName::Regular3 => {
                    vec![3, 4, 5, 6]
                }
                _ => vec![4, 5, 6],
            },
        };
        for k in ks {
            let min_n = FamilySpec { name, n: 64, k }.minimal_n();
            let ns: Vec<usize> = if name == FamilyName::Regular3 {
                vec![min_n]
            } else {
                (min_n..=min_n + 4).collect()
            };
            for n in ns {
                let spec = FamilySpec::new(name, n, k).unwrap();
                if let Ok(sig) = family_signature(&spec) {
                    let via_sig = randic_of_signature(&sig);
                    assert_eq!(
                        via_sig,
                        spec.expected_value().unwrap(),
                        "{name} n={n} k={k}: signature route disagrees with the closed form"
                    );
                }
                let g = construct_member(&spec).unwrap();
                assert!(is_member(&g, &spec), "{name} n={n} k={k}");
                checked += 1;
            }
        }
    }
    println!(
        "criterion 08: PASS - {checked} (family, n, k) instances: signature values equal closed \
         forms exactly and every construction passes membership"
    );
}

#[test]
fn criterion_09_enumerator_matches_labeled_brute_force_up_to_n6() {
    // Independent oracle: iterate all labeled graphs as bitmasks, filter,
    // deduplicate by canonical code.
    fn oracle(spec: &EnumSpec) -> BTreeSet<String> {
        let n = spec.n;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            if mask.count_ones() as usize != spec.m {
                continue;
            }
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if spec.connected_only && !g.is_connected() {
                continue;
            }
            out.insert(g.canonical_code().0);
        }
        out
    }

    let mut classes = 0;
    for n in 0usize..=6 {
        for m in 0..=(n * n.saturating_sub(1) / 2) {
            for connected in [false, true] {
                if connected && m + 1 < n {
                    continue;
                }
                let spec = EnumSpec {
                    n,
                    m,
                    max_degree: None,
                    connected_only: connected,
                };
                let got: BTreeSet<String> = enumerate::enumerate(&spec)
                    .unwrap()
                    .iter()
                    .map(|g| g.canonical_code().0)
                    .collect();
                let want = oracle(&spec);
                assert_eq!(got, want, "n={n} m={m} connected={connected}");
                classes += got.len();
            }
        }
    }
    println!(
        "criterion 09: PASS - enumerator matches the labeled brute-force oracle class-for-class \
         for every (n <= 6, m, connectivity) combination ({classes} class checks)"
    );
}

#[test]
fn criterion_10_general_n_claims_are_covered_by_small_n_plus_properties() {
    // The all-n statements cannot be exhausted at desk scale. The suite
    // substitutes: exhaustive confirmation at the smallest admissible orders
    // (criteria 1-4), the counting identities and bounds they rest on
    // (criteria 5-6), the monotonicity of every rewriting used in their
    // derivations (criterion 7), and the exact family identities for all
    // parameters in range (criterion 8), over an enumerator proven against
    // brute force (criterion 9).
    let ids = randic_core::verify::claim_ids();
    for needed in [
        "first_max_general",
        "second_max_general",
        "cubic_max_general",
        "ranking_general",
    ] {
        assert!(ids.contains(&needed));
    }
    // The general claims run at their default small parameters.
    let r = verify_claim(
        "ranking_general",
        &ClaimParams {
            n: None,
            k: None,
            workers: WORKERS,
        },
    )
    .unwrap();
    assert_eq!(r.status, ClaimStatus::Pass, "{r}");
    println!(
        "criterion 10: PASS - general-n statements are exercised through their ingredients and \
         confirmed exhaustively at the smallest admissible parameters"
    );
}

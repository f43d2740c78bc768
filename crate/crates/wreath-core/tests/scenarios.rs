//! End-to-end report checks at sizes small enough to enumerate, pinning the
//! verdicts the tool is expected to reach, including the places where the
//! published catalog and the computed lattice part ways.

use wreath_core::catalog::{
    label_lattice, monolith_check, normalizer_check, verify_triple, MonolithMode,
};
use wreath_core::report::{Report, Status};
use wreath_core::wreath::WreathProduct;

fn build(product: &str) -> WreathProduct {
    WreathProduct::parse_and_build(product, 10_000).unwrap()
}

fn row<'a>(report: &'a Report, name: &str) -> &'a wreath_core::report::Check {
    report
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("report has no row named {name}"))
}

fn rows_with_status(report: &Report, status: Status) -> Vec<String> {
    report
        .checks
        .iter()
        .filter(|c| c.status == status)
        .map(|c| c.name.clone())
        .collect()
}

/// The order-48 lattice, with every member carrying a catalog label.
#[test]
fn depth_two_lattice_labels_at_order_48() {
    let w = build("S3*S2");
    let labeled = label_lattice(&w, 1_000_000).unwrap();
    let mut summary: Vec<String> = labeled
        .iter()
        .map(|(g, label)| format!("{label} ({})", g.order()))
        .collect();
    summary.sort();
    assert_eq!(
        summary,
        vec![
            "A*At (12)",
            "A*S (24)",
            "Diag (24)",
            "E (1)",
            "E*At (4)",
            "E*S (8)",
            "S*At (24)",
            "T~ (2)",
            "W (48)",
        ]
    );
}

/// Fifty listed candidates at depth three, of which five fail the normality
/// check and sixteen coincide with earlier entries, leaving 34 distinct
/// subgroups rather than the published 50.
#[test]
fn triple_catalog_verdicts() {
    let report = verify_triple(3, 10_000).unwrap();
    assert_eq!(report.worst_status(), Status::Discrepancy);

    assert_eq!(row(&report, "claims/candidates-constructed").observed, "50");
    assert_eq!(
        row(&report, "claims/candidates-constructed").status,
        Status::Pass
    );

    let distinct = row(&report, "claims/distinct-count");
    assert_eq!(distinct.status, Status::Discrepancy);
    assert_eq!(distinct.expected, "50");
    assert_eq!(distinct.observed, "34");

    let dichotomy = row(&report, "claims/even-sum-leaf-dichotomy");
    assert_eq!(dichotomy.status, Status::Discrepancy);
    for name in ["blocks(E*A)", "E*E*T~blk", "lift(W)*At-blk"] {
        assert!(
            dichotomy.observed.contains(name),
            "dichotomy violator list lost {name}: {}",
            dichotomy.observed
        );
    }

    let readings = row(&report, "claims/uniform-parity-readings");
    assert_eq!(readings.status, Status::Warn);
    assert!(readings.observed.contains("157464"));
    assert!(readings.observed.contains("39366"));

    let not_normal = rows_with_status(&report, Status::Discrepancy);
    for name in [
        "candidate/lift(S*At)*At-blk/normal",
        "candidate/lift(Diag)*At-blk/normal",
        "candidate/lift(A*At)*At-blk/normal",
        "candidate/lift(A*S)*At-blk/normal",
        "candidate/lift(W)*At-blk/normal",
    ] {
        assert!(
            not_normal.iter().any(|n| n == name),
            "expected {name} to fail normality"
        );
    }
    let failing_normality = not_normal
        .iter()
        .filter(|n| n.starts_with("candidate/") && n.ends_with("/normal"))
        .count();
    assert_eq!(failing_normality, 5);

    let failing_orders = report
        .checks
        .iter()
        .filter(|c| c.name.ends_with("/order") && c.status != Status::Pass)
        .count();
    assert_eq!(failing_orders, 0, "every candidate order should match");
}

/// The normalizer of A3 wr A3 inside S3 wr S3 has order 324, half of the
/// published 648, and A3 wr A3 is not normal in the even-sum overgroup
/// either. It is normal once the base level is restricted to alternating
/// entries.
#[test]
fn normalizer_of_the_double_alternating_subgroup() {
    let w = build("S3*S3");
    let report = normalizer_check(&w, 1_000_000).unwrap();
    assert_eq!(report.worst_status(), Status::Discrepancy);

    let order = row(&report, "claims/normalizer-order");
    assert_eq!(order.expected, "648");
    assert_eq!(order.observed, "324");
    assert_eq!(order.status, Status::Discrepancy);

    assert_eq!(
        row(&report, "claims/normal-in-A*At").status,
        Status::Discrepancy
    );
    assert_eq!(
        row(&report, "claims/normal-in-base-alternating-ambient").status,
        Status::Pass
    );
    assert_eq!(
        row(&report, "observed/normalizer-contains-A*A").status,
        Status::Pass
    );
    assert_eq!(
        row(
            &report,
            "observed/normalizer-is-top-full-over-uniform-parity-base"
        )
        .observed,
        "true"
    );
}

/// Exact monolith verdicts at the two enumerable sizes: the order-48 group
/// has two incomparable minimal normal subgroups, the order-1296 group has
/// a unique one, and it is the per-entry alternating subgroup rather than
/// the larger even-sum subgroup.
#[test]
fn monolith_exact_at_enumerable_sizes() {
    let w = build("S3*S2");
    let report = monolith_check(&w, MonolithMode::Exact { limit: 1_000_000 }).unwrap();
    let minimal = row(&report, "observed/minimal-normal-subgroups");
    assert_eq!(minimal.observed, "T~ (2), E*At (4)");
    assert_eq!(
        row(&report, "observed/monolith").observed,
        "not monolithic; minimal orders 2, 4"
    );
    assert_eq!(
        row(&report, "claims/reading-base-degree-even").status,
        Status::Discrepancy
    );

    let w = build("S3*S3");
    let report = monolith_check(&w, MonolithMode::Exact { limit: 1_000_000 }).unwrap();
    assert_eq!(
        row(&report, "observed/monolith").observed,
        "monolith = E*A (27)"
    );
}

/// One hundred seeded random closures at base degree six: five land on the
/// per-entry alternating subgroup and miss the even-sum generators, so the
/// containment claim fails with a concrete counterexample in the report.
#[test]
fn monolith_sampling_finds_the_counterexample() {
    let w = build("S3*S6");
    let report = monolith_check(
        &w,
        MonolithMode::Sampling {
            count: 100,
            seed: 0,
        },
    )
    .unwrap();
    assert_eq!(report.worst_status(), Status::Discrepancy);
    let claim = row(&report, "claims/sampling-closures-contain-even-sum-base");
    assert_eq!(claim.status, Status::Discrepancy);
    assert!(
        claim.observed.contains("95 of 100"),
        "unexpected tally: {}",
        claim.observed
    );
    assert!(
        claim
            .observed
            .contains("[()];[(2,6)(3,5),(1,4)(2,3,5,6),(1,5,6,3)(2,4)]"),
        "counterexample not printed verbatim: {}",
        claim.observed
    );
}

//! The acceptance gate. One test per shipping criterion, each printing a
//! single `criterion N: PASS` line (run with `--nocapture` to see them) and
//! failing loudly if the tool stops reproducing the pinned results.
//!
//! Three criteria pin verdicts where the computation contradicts the
//! published catalog; those lines carry the refutation in parentheses. The
//! tool reports such rows with status `discrepancy` and exit code 3, and
//! the gate asserts exactly that.

use std::collections::{HashMap, HashSet, VecDeque};
use std::process::Command;
use std::time::Instant;

use serde_json::Value;
use wreath_core::catalog::{family_group, Family};
use wreath_core::group::Group;
use wreath_core::rng::SeededRng;
use wreath_core::wreath::{LevelKind, WreathProduct};
use wreath_core::{Perm, Tableau, WreathSpec};

struct Run {
    exit: i32,
    doc: Value,
}

fn run_json(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_wreath"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("failed to launch the CLI binary");
    let stdout = String::from_utf8_lossy(&output.stdout);
    let doc: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| {
        panic!(
            "CLI did not print a JSON report for {:?}: {e}\nstdout: {stdout}\nstderr: {}",
            args,
            String::from_utf8_lossy(&output.stderr)
        )
    });
    Run {
        exit: output.status.code().expect("CLI was killed by a signal"),
        doc,
    }
}

fn checks(doc: &Value) -> &Vec<Value> {
    doc["checks"].as_array().expect("report has a checks array")
}

fn row<'a>(doc: &'a Value, name: &str) -> &'a Value {
    checks(doc)
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("report has no row named {name}"))
}

fn field<'a>(value: &'a Value, key: &str) -> &'a str {
    value[key]
        .as_str()
        .unwrap_or_else(|| panic!("{key} is not a string"))
}

fn build(product: &str) -> WreathProduct {
    WreathProduct::parse_and_build(product, 10_000).unwrap()
}

#[test]
fn criterion_01_depth_two_lattice_at_order_1296() {
    let started = Instant::now();
    let run = run_json(&["normal-subgroups", "S3*S3"]);
    let elapsed = started.elapsed();
    assert_eq!(run.exit, 0);
    assert_eq!(field(row(&run.doc, "lattice/count"), "observed"), "10");
    assert_eq!(field(row(&run.doc, "lattice/count"), "status"), "pass");
    assert_eq!(
        field(row(&run.doc, "lattice/orders"), "observed"),
        "1,27,54,108,216,324,648,648,648,1296"
    );
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}, budget is 30 s");
    println!(
        "criterion 1: PASS - S3*S3 has exactly 10 normal subgroups, orders \
         1,27,54,108,216,324,648,648,648,1296, in {elapsed:.1?}"
    );
}

#[test]
fn criterion_02_order_48_lattice_and_fingerprint() {
    let started = Instant::now();
    let run = run_json(&["normal-subgroups", "S3*S2"]);
    assert_eq!(run.exit, 0);
    assert_eq!(field(row(&run.doc, "lattice/count"), "observed"), "9");

    let w = build("S3*S2");
    let fp = w.group().fingerprint(1_000_000).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(fp.order.to_string(), "48");
    assert_eq!(fp.derived_order.to_string(), "12");
    assert_eq!(fp.center_order.to_string(), "2");
    assert_eq!(fp.abelian_invariants, vec![2, 2]);
    assert!(elapsed.as_secs() < 5, "took {elapsed:?}, budget is 5 s");
    println!(
        "criterion 2: PASS - S3*S2 has 9 normal subgroups and fingerprint \
         (48, 12, 2, C2 x C2), in {elapsed:.1?}"
    );
}

#[test]
fn criterion_03_catalog_at_degree_25() {
    let started = Instant::now();
    let run = run_json(&["catalog", "S5*S5"]);
    let elapsed = started.elapsed();
    assert_eq!(run.exit, 0, "catalog S5*S5 must exit 0");
    let result = field(&run.doc, "result");
    assert!(result == "pass" || result == "warn", "result was {result}");
    for token in ["E*A", "E*At", "T~", "E*S", "S*At", "Diag", "A*At", "A*S"] {
        for suffix in ["order", "normal", "contained-in"] {
            let name = format!("family/{token}/{suffix}");
            assert_eq!(
                field(row(&run.doc, &name), "status"),
                "pass",
                "{name} did not pass"
            );
        }
    }
    assert_eq!(
        field(row(&run.doc, "family/E*At/order"), "observed"),
        "12441600000"
    );
    assert_eq!(
        field(row(&run.doc, "family/A*At/order"), "observed"),
        "746496000000"
    );
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget is 2 min");
    println!(
        "criterion 3: PASS - all 8 proper catalog subgroups of S5*S5 verified \
         normal with exact orders, in {elapsed:.1?}"
    );
}

fn even_pair_seed(w: &WreathProduct) -> Perm {
    let spec = w.spec().clone();
    let m = spec.degrees()[1];
    let swap = Perm::from_cycles(m, &[vec![0, 1]]).unwrap();
    let mut base = vec![Perm::identity(m); spec.level_width(1)];
    base[0] = swap.clone();
    base[1] = swap;
    let top = vec![Perm::identity(spec.degrees()[0])];
    w.tableau_to_perm(&Tableau::new(vec![top, base]).unwrap())
        .unwrap()
}

fn lone_cycle_seed(w: &WreathProduct) -> Perm {
    let spec = w.spec().clone();
    let m = spec.degrees()[1];
    let cycle = Perm::from_cycles(m, &[vec![0, 1, 2]]).unwrap();
    w.tableau_to_perm(&Tableau::elementary(&spec, 1, 0, cycle).unwrap())
        .unwrap()
}

#[test]
fn criterion_04_normal_closures_of_the_two_seeds() {
    let started = Instant::now();
    for (product, pair_order, lone_order) in [
        ("S3*S3", "108", "27"),
        ("S5*S5", "12441600000", "777600000"),
    ] {
        let w = build(product);
        let spec = w.spec().clone();
        let kinds = w.kinds().to_vec();

        let pair_closure = w.group().normal_closure(&[even_pair_seed(&w)]).unwrap();
        assert_eq!(pair_closure.order().to_string(), pair_order);
        let even_sum = family_group(&spec, &kinds, Family::BaseEvenSum).unwrap();
        assert_eq!(pair_closure.order(), even_sum.order());
        assert!(even_sum.is_subgroup_of(&pair_closure));

        let lone_closure = w.group().normal_closure(&[lone_cycle_seed(&w)]).unwrap();
        assert_eq!(lone_closure.order().to_string(), lone_order);
        let per_entry = family_group(&spec, &kinds, Family::BaseAlternating).unwrap();
        assert_eq!(lone_closure.order(), per_entry.order());
        assert!(per_entry.is_subgroup_of(&lone_closure));
        assert!(lone_closure.is_subgroup_of(&pair_closure));
        assert!(!pair_closure.is_subgroup_of(&lone_closure));
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 4: PASS - closure of the transposition pair is the even-sum \
         base subgroup, order 108 at (3,3) and 12441600000 at (5,5) \
         (the claimed equal closure of a single 3-cycle is actually the smaller \
         per-entry alternating subgroup, orders 27 and 777600000; the catalog \
         verb reports this as a discrepancy), in {elapsed:.1?}"
    );
}

#[test]
fn criterion_05_derived_subgroup_and_center() {
    let run = run_json(&["catalog", "S3*S3"]);
    assert_eq!(run.exit, 0);
    let derived = row(&run.doc, "claims/derived-subgroup-order");
    assert_eq!(field(derived, "observed"), "324");
    assert_eq!(field(derived, "status"), "pass");
    assert_eq!(
        field(row(&run.doc, "claims/derived-subgroup-is-A*At"), "status"),
        "pass"
    );
    assert_eq!(
        field(row(&run.doc, "claims/center-trivial"), "status"),
        "pass"
    );
    println!(
        "criterion 5: PASS - derived subgroup of S3*S3 has order 324 and is the \
         A*At catalog member; the center is trivial"
    );
}

#[test]
fn criterion_06_parity_quotient_indices() {
    for (product, index) in [("S3*S3", "4"), ("S3*S3*S3", "8")] {
        let run = run_json(&["parity", product]);
        assert_eq!(run.exit, 0);
        assert_eq!(field(&run.doc, "result"), "pass");
        let quotient = row(&run.doc, "quotient/index");
        assert_eq!(field(quotient, "observed"), index);
        assert_eq!(
            field(row(&run.doc, "quotient/exponent-divides-two"), "status"),
            "pass"
        );
    }
    println!(
        "criterion 6: PASS - parity kernel N1 has index 4 in S3*S3 and 8 in \
         S3*S3*S3, with quotient exponent 2"
    );
}

#[test]
fn criterion_07_triple_catalog() {
    let started = Instant::now();
    let run = run_json(&["triple", "3"]);
    let elapsed = started.elapsed();
    assert_eq!(run.exit, 3, "triple 3 must flag the catalog discrepancies");
    let constructed = row(&run.doc, "claims/candidates-constructed");
    assert_eq!(field(constructed, "observed"), "50");
    assert_eq!(field(constructed, "status"), "pass");

    let mut normal_rows = 0;
    let mut failing: Vec<&str> = Vec::new();
    for check in checks(&run.doc) {
        let name = field(check, "name");
        if name.starts_with("candidate/") && name.ends_with("/order") {
            assert_eq!(field(check, "status"), "pass", "{name} did not pass");
        }
        if name.starts_with("candidate/") && name.ends_with("/normal") {
            normal_rows += 1;
            if field(check, "status") != "pass" {
                failing.push(name);
            }
        }
    }
    assert_eq!(normal_rows, 50);
    failing.sort_unstable();
    assert_eq!(
        failing,
        vec![
            "candidate/lift(A*At)*At-blk/normal",
            "candidate/lift(A*S)*At-blk/normal",
            "candidate/lift(Diag)*At-blk/normal",
            "candidate/lift(S*At)*At-blk/normal",
            "candidate/lift(W)*At-blk/normal",
        ]
    );

    let distinct = row(&run.doc, "claims/distinct-count");
    assert_eq!(field(distinct, "observed"), "34");
    assert_eq!(field(distinct, "status"), "discrepancy");
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, budget is 5 min");
    println!(
        "criterion 7: PASS - all 50 listed candidates constructed and checked by \
         chain membership in S3*S3*S3 (45 are normal, the 5 per-block even-sum \
         extensions of top-active families are not; 34 distinct subgroups rather \
         than 50, reported as a discrepancy), in {elapsed:.1?}"
    );
}

#[test]
fn criterion_08_monolith_exact_and_sampling() {
    let run = run_json(&["monolith", "S3*S2"]);
    assert_eq!(run.exit, 3, "the even-base-degree reading fails at (3,2)");
    assert_eq!(
        field(
            row(&run.doc, "observed/minimal-normal-subgroups"),
            "observed"
        ),
        "T~ (2), E*At (4)"
    );

    let run = run_json(&["monolith", "S3*S3"]);
    assert_eq!(run.exit, 0);
    assert_eq!(
        field(row(&run.doc, "observed/monolith"), "observed"),
        "monolith = E*A (27)"
    );

    let run = run_json(&["monolith", "S3*S6", "--sampling", "100"]);
    assert_eq!(run.exit, 3);
    let claim = row(&run.doc, "claims/sampling-closures-contain-even-sum-base");
    assert_eq!(field(claim, "status"), "discrepancy");
    let observed = field(claim, "observed");
    assert!(observed.contains("95 of 100"), "tally changed: {observed}");
    assert!(
        observed.contains("[()];[(2,6)(3,5),(1,4)(2,3,5,6),(1,5,6,3)(2,4)]"),
        "counterexample not printed verbatim: {observed}"
    );
    println!(
        "criterion 8: PASS - exact minimal normal subgroups at (3,2) and (3,3); \
         100 seeded closures at (3,6) (95 contain the even-sum base, the 5 \
         counterexamples are printed verbatim and reported as a discrepancy)"
    );
}

mod properties {
    use super::*;

    pub fn random_perm(degree: usize, rng: &mut SeededRng) -> Perm {
        let mut img: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            img.swap(i, rng.below(i + 1));
        }
        Perm::new(img).unwrap()
    }

    pub fn random_tableau(spec: &WreathSpec, rng: &mut SeededRng) -> Tableau {
        let levels = (0..spec.depth())
            .map(|i| {
                (0..spec.level_width(i))
                    .map(|_| random_perm(spec.degrees()[i], rng))
                    .collect()
            })
            .collect();
        Tableau::new(levels).unwrap()
    }

    pub fn images(p: &Perm) -> Vec<usize> {
        (0..p.degree()).map(|x| p.apply(x)).collect()
    }

    pub fn rank_identity() {
        let mut rng = SeededRng::new(0xacce_0001);
        for degree in 1..=8 {
            for _ in 0..500 {
                let p = random_perm(degree, &mut rng);
                let q = random_perm(degree, &mut rng);
                let pq = p.compose(&q).unwrap();
                assert!(pq.rank() <= p.rank() + q.rank());
                assert_eq!((p.rank() + q.rank() - pq.rank()) % 2, 0);
                assert_eq!(pq.is_even(), p.is_even() == q.is_even());
            }
        }
    }

    pub fn rank_vs_shortest_word() {
        for degree in 1..=6 {
            let mut transpositions = Vec::new();
            for i in 0..degree {
                for j in (i + 1)..degree {
                    transpositions.push(Perm::from_cycles(degree, &[vec![i, j]]).unwrap());
                }
            }
            let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
            dist.insert(images(&Perm::identity(degree)), 0);
            let mut queue = VecDeque::from([Perm::identity(degree)]);
            while let Some(p) = queue.pop_front() {
                let d = dist[&images(&p)];
                for t in &transpositions {
                    let next = p.compose(t).unwrap();
                    dist.entry(images(&next)).or_insert_with(|| {
                        queue.push_back(next.clone());
                        d + 1
                    });
                }
            }
            assert_eq!(dist.len(), (1..=degree).product::<usize>());
            for (img, d) in dist {
                assert_eq!(Perm::new(img).unwrap().rank(), d);
            }
        }
    }

    pub fn roundtrip_and_homomorphism() {
        for product in ["S3*S3", "S2*S3*S2", "S3*S3*S3"] {
            let w = build(product);
            let spec = w.spec().clone();
            let mut rng = SeededRng::new(0xacce_0002);
            for _ in 0..300 {
                let a = random_tableau(&spec, &mut rng);
                let b = random_tableau(&spec, &mut rng);
                let pa = w.tableau_to_perm(&a).unwrap();
                let pb = w.tableau_to_perm(&b).unwrap();
                assert!(w.perm_to_tableau(&pa).unwrap() == a);
                let lhs = w.tableau_to_perm(&a.multiply(&b).unwrap()).unwrap();
                assert!(lhs == pa.compose(&pb).unwrap());
            }
        }
    }

    pub fn truncation_laws() {
        for product in ["S3*S3", "S2*S3*S2", "S3*S3*S3"] {
            let w = build(product);
            let spec = w.spec().clone();
            let depth = spec.depth();
            let truncated: Vec<WreathProduct> = (1..=depth)
                .map(|k| {
                    WreathProduct::build(
                        WreathSpec::new(spec.degrees()[..k].to_vec()).unwrap(),
                        vec![LevelKind::Symmetric; k],
                        10_000,
                    )
                    .unwrap()
                })
                .collect();
            let mut rng = SeededRng::new(0xacce_0003);
            for trial in 0..300 {
                let a = random_tableau(&spec, &mut rng);
                let b = random_tableau(&spec, &mut rng);
                let k2 = 1 + trial % depth;
                let k1 = 1 + trial % k2;
                let lhs = w.project(&a.multiply(&b).unwrap(), k2).unwrap();
                let rhs = w
                    .project(&a, k2)
                    .unwrap()
                    .multiply(&w.project(&b, k2).unwrap())
                    .unwrap();
                assert!(lhs == rhs);
                let twice = truncated[k2 - 1]
                    .project(&w.project(&a, k2).unwrap(), k1)
                    .unwrap();
                assert!(twice == w.project(&a, k1).unwrap());
            }
        }
    }

    pub fn kernel_nesting() {
        let spec = WreathSpec::new(vec![3, 3, 3]).unwrap();
        let depth = spec.depth();
        let mut rng = SeededRng::new(0xacce_0004);
        for trial in 0..1000 {
            let mut levels = random_tableau(&spec, &mut rng).levels().to_vec();
            for level in levels.iter_mut().take(trial % (depth + 1)) {
                for entry in level.iter_mut() {
                    *entry = Perm::identity(entry.degree());
                }
            }
            if trial % 2 == 0 {
                for level in levels.iter_mut() {
                    if level.iter().map(Perm::rank).sum::<usize>() % 2 == 1 {
                        let swap = Perm::from_cycles(level[0].degree(), &[vec![0, 1]]).unwrap();
                        level[0] = level[0].compose(&swap).unwrap();
                    }
                }
            }
            let t = Tableau::new(levels).unwrap();
            let member: Vec<bool> = (1..=depth)
                .map(|i| Family::LevelParityKernel(i).contains_tableau(&t))
                .collect();
            for i in 1..depth {
                assert!(!member[i] || member[i - 1], "kernel nesting failed for {t}");
            }
        }
    }

    pub fn closure_vs_enumeration() {
        fn brute(ambient: &[Perm], seeds: &[Perm]) -> HashSet<Vec<usize>> {
            let mut set: HashSet<Vec<usize>> = HashSet::new();
            set.insert(images(&Perm::identity(ambient[0].degree())));
            for s in seeds {
                for g in ambient {
                    set.insert(images(&s.conjugate(g).unwrap()));
                }
            }
            loop {
                let elems: Vec<Perm> = set.iter().map(|v| Perm::new(v.clone()).unwrap()).collect();
                let before = set.len();
                for a in &elems {
                    for b in &elems {
                        set.insert(images(&a.compose(b).unwrap()));
                    }
                }
                if set.len() == before {
                    return set;
                }
            }
        }
        fn check(ambient: &Group, seeds: &[Perm]) {
            let computed = ambient.normal_closure(seeds).unwrap();
            let enumerated = brute(&ambient.elements(5_000).unwrap(), seeds);
            assert_eq!(computed.order().to_string(), enumerated.len().to_string());
            for img in &enumerated {
                assert!(computed.contains(&Perm::new(img.clone()).unwrap()));
            }
        }
        let s4 = Group::new(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        check(&s4, &[Perm::from_cycles(4, &[vec![0, 1]]).unwrap()]);
        check(&s4, &[Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap()]);
        check(
            &s4,
            &[Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()],
        );
        let small = build("S3*S2");
        let mut rng = SeededRng::new(0xacce_0005);
        for _ in 0..3 {
            check(small.group(), &[small.group().random_element(&mut rng)]);
        }
        let square = build("S3*S3");
        check(square.group(), &[even_pair_seed(&square)]);
        check(square.group(), &[lone_cycle_seed(&square)]);
    }
}

#[test]
fn criterion_09_property_suites() {
    let started = Instant::now();
    properties::rank_identity();
    properties::rank_vs_shortest_word();
    properties::roundtrip_and_homomorphism();
    properties::truncation_laws();
    properties::kernel_nesting();
    properties::closure_vs_enumeration();
    let elapsed = started.elapsed();
    println!(
        "criterion 9: PASS - rank identity (500 pairs per degree through 8), \
         rank vs shortest transposition word (exhaustive through degree 6), \
         leaf-action roundtrip and homomorphism (300 pairs per shape), \
         truncation laws (300 pairs per shape), kernel nesting (1000 tableaux), \
         and closure vs enumeration, in {elapsed:.1?}"
    );
}

#[test]
fn criterion_10_commutator_witness() {
    let run = run_json(&["witness", "S5*S5"]);
    assert_eq!(run.exit, 0);
    assert_eq!(field(&run.doc, "result"), "pass");
    assert_eq!(
        field(row(&run.doc, "witness/element"), "observed"),
        "[()];[(3,5,4),(),(),(),()]"
    );
    assert_eq!(
        field(row(&run.doc, "witness/support"), "observed"),
        "confined to the target vertex"
    );
    assert_eq!(
        field(row(&run.doc, "witness/target-parity"), "observed"),
        "even"
    );
    assert_eq!(field(row(&run.doc, "witness/nontrivial"), "status"), "pass");
    println!(
        "criterion 10: PASS - the double commutator at (5,5) is trivial at every \
         vertex except one even 3-cycle at the target"
    );
}

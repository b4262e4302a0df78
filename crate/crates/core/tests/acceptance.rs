//! End-to-end acceptance suite. Each test prints one pass line; a failed
//! assertion marks the criterion failed.

use std::time::{Duration, Instant};

use ssp2hcp::*;

fn inst(u: u32, subsets: &[&[u32]]) -> SspInstance {
    SspInstance::new(u, subsets.iter().map(|s| s.to_vec()).collect()).unwrap()
}

fn example_1() -> SspInstance {
    inst(4, &[&[1, 2, 3], &[2, 4]])
}

fn example_2() -> SspInstance {
    inst(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

fn convert(instance: &SspInstance) -> ReductionArtifact {
    match simplify(instance) {
        SimplificationResult::Reduced(sf) => build_graph(&sf).unwrap(),
        other => panic!("instance should reduce, got {other:?}"),
    }
}

fn solve(g: &DiGraph) -> SolveOutcome {
    find_hamiltonian_cycle(g, &SolveConfig::default()).unwrap()
}

/// Deterministic parameter grid for the randomized criteria.
fn random_instance(i: u64, max_u: u32, max_s: u32) -> SspInstance {
    let u = 2 + (i % (max_u as u64 - 1)) as u32;
    let s = 1 + ((i / (max_u as u64 - 1)) % max_s as u64) as u32;
    let max_size = 4.min(u);
    generate_random_instance(u, s, (2, max_size), 0x5eed_0000 + i).unwrap()
}

/// Decision of the conversion pipeline: Hamiltonicity of the converted
/// graph whenever one exists, the simplification verdict otherwise.
enum PipelineDecision {
    Graph(bool, Box<ReductionArtifact>, SolveOutcome),
    Simplified(bool),
}

fn pipeline_decision(instance: &SspInstance) -> PipelineDecision {
    let artifact = match simplify(instance) {
        SimplificationResult::Reduced(sf) => Some(build_graph(&sf).unwrap()),
        SimplificationResult::DecidedYes { witness, .. } => {
            let report = check_partition(instance, &witness).unwrap();
            assert!(report.is_solution, "YES witness must check out");
            // Convert anyway when the instance happens to be in simple
            // form (the exact-cover shortcut), for a stronger check.
            match SimpleForm::try_from_instance(instance.clone()) {
                Ok(sf) => Some(build_graph(&sf).unwrap()),
                Err(_) => return PipelineDecision::Simplified(true),
            }
        }
        SimplificationResult::DecidedNo { .. } => {
            match SimpleForm::try_from_instance(instance.clone()) {
                Ok(sf) => Some(build_graph(&sf).unwrap()),
                Err(_) => return PipelineDecision::Simplified(false),
            }
        }
    };
    let artifact = artifact.unwrap();
    let outcome = solve(artifact.graph());
    let yes = match &outcome {
        SolveOutcome::Hamiltonian { cycle, .. } => {
            assert!(verify_cycle(artifact.graph(), cycle));
            true
        }
        SolveOutcome::NonHamiltonian { .. } => false,
        SolveOutcome::Indeterminate { .. } => panic!("budget exhausted unexpectedly"),
    };
    PipelineDecision::Graph(yes, Box::new(artifact), outcome)
}

#[test]
fn criterion_1_example_1_end_to_end() {
    let instance = example_1();
    let artifact = convert(&instance);
    assert_eq!(artifact.graph().vertex_count(), 58);
    assert_eq!(artifact.graph().edge_count(), 122);
    assert_eq!(expected_counts(4, 2, 5), (58, 122));

    let started = Instant::now();
    let outcome = solve(artifact.graph());
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "solve took {elapsed:?}, budget is 5 s"
    );
    let cycle = outcome.cycle().expect("example 1 is Hamiltonian").clone();
    assert!(verify_cycle(artifact.graph(), &cycle));

    let extracted = extract_partition_original(&artifact, &cycle).unwrap();
    let report = check_partition(&instance, &extracted).unwrap();
    assert!(
        report.is_solution,
        "extracted partition must split both subsets"
    );

    // The published solution {1,4} | {2,3} is accepted as well.
    use Side::*;
    let published = Partition::from_sides(vec![One, Two, Two, One]);
    assert!(check_partition(&instance, &published).unwrap().is_solution);

    println!(
        "criterion 1 PASS: example 1 converts to 58/122, solves in {elapsed:?}, witnesses check"
    );
}

#[test]
fn criterion_2_example_2_end_to_end() {
    let instance = example_2();
    let artifact = convert(&instance);
    assert_eq!(artifact.graph().vertex_count(), 65);
    assert_eq!(artifact.graph().edge_count(), 134);

    let started = Instant::now();
    let outcome = solve(artifact.graph());
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "exhaustion took {elapsed:?}, budget is 60 s"
    );
    assert!(
        matches!(outcome, SolveOutcome::NonHamiltonian { .. }),
        "example 2 must be proven non-Hamiltonian"
    );
    assert_eq!(brute_force_ssp(&instance).unwrap(), None);

    println!("criterion 2 PASS: example 2 is 65/134, proven non-Hamiltonian in {elapsed:?}");
}

#[test]
fn criterion_3_occurrence_table_golden() {
    let instance = inst(6, &[&[1, 3, 6], &[2, 3, 4], &[2, 4, 6], &[1, 2, 5]]);
    let sf = SimpleForm::try_from_instance(instance).unwrap();
    let occ = occurrence_tables(&sf).unwrap();
    assert_eq!(occ.subsets_containing(1), &[1, 4]);
    assert_eq!(occ.positions(1), &[1, 1]);
    assert_eq!(occ.subsets_containing(2), &[2, 3, 4]);
    assert_eq!(occ.positions(2), &[1, 1, 2]);
    println!("criterion 3 PASS: occurrence tables match the worked example");
}

#[test]
fn criterion_4_cardinality_and_degree_profile() {
    let started = Instant::now();
    let mut built = 0u32;
    let mut seed = 0u64;
    while built < 500 {
        let u = 2 + (seed % 5) as u32; // 2..=6
        let s = 1 + ((seed / 5) % 5) as u32; // 1..=5
        let max_size = 4.min(u);
        let instance = generate_random_instance(u, s, (2, max_size), 0xcafe_0000 + seed).unwrap();
        seed += 1;
        let sf = match simplify(&instance) {
            SimplificationResult::Reduced(sf) => sf,
            _ => continue,
        };
        let artifact = build_graph(&sf).unwrap();
        let red = sf.instance();
        let (ev, ee) = expected_counts(
            red.universe_size() as u64,
            red.subset_count() as u64,
            red.total_entries(),
        );
        assert_eq!(artifact.graph().vertex_count() as u64, ev);
        assert_eq!(artifact.graph().edge_count(), ee);
        assert_degree_profile(&artifact);
        built += 1;
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "built 500 graphs in {elapsed:?}, budget is 30 s"
    );
    println!("criterion 4 PASS: 500 random conversions match the closed forms ({elapsed:?})");
}

fn assert_degree_profile(artifact: &ReductionArtifact) {
    let g = artifact.graph();
    let layout = artifact.layout();
    let u = layout.universe_size();
    let s = layout.subset_count();
    for e in 1..=u {
        let v1 = layout
            .flat_id(VertexLabel::U {
                element: e,
                slot: 1,
            })
            .unwrap();
        let v4 = layout
            .flat_id(VertexLabel::U {
                element: e,
                slot: 4,
            })
            .unwrap();
        assert_eq!(g.out_neighbors(v1).len(), 2, "U{e}:1 fans out to 2 and 3");
        assert_eq!(g.out_neighbors(v4).len(), 1, "U{e}:4 chains onward");
    }
    for slot in 1..=2 {
        let v = layout.flat_id(VertexLabel::C { slot }).unwrap();
        assert_eq!(g.out_neighbors(v).len(), 1);
        assert_eq!(g.in_neighbors(v).len(), 1);
    }
    for subset in 1..=s {
        let k = layout.subset_size(subset);
        let mut pass_through = vec![4];
        for j in 1..=k {
            pass_through.push(4 + 3 * j);
            pass_through.push(4 + 3 * k + 3 * j);
        }
        for slot in pass_through {
            let v = layout.flat_id(VertexLabel::S { subset, slot }).unwrap();
            assert_eq!(
                g.out_neighbors(v).len(),
                2,
                "S{subset}:{slot} has two out-arcs"
            );
            assert_eq!(
                g.in_neighbors(v),
                g.out_neighbors(v),
                "S{subset}:{slot} passes through a fixed pair"
            );
        }
    }
}

#[test]
fn criterion_5_equivalence_on_random_instances() {
    let started = Instant::now();
    let mut graphs = 0u32;
    let mut shortcuts = 0u32;
    for i in 0..200u64 {
        let instance = random_instance(i, 5, 4);
        let brute_yes = brute_force_ssp(&instance).unwrap().is_some();
        match pipeline_decision(&instance) {
            PipelineDecision::Graph(hcp_yes, ..) => {
                assert_eq!(
                    brute_yes, hcp_yes,
                    "oracle disagreement on instance {i}: {instance:?}"
                );
                graphs += 1;
            }
            PipelineDecision::Simplified(yes) => {
                assert_eq!(
                    brute_yes, yes,
                    "simplification disagreement on instance {i}: {instance:?}"
                );
                shortcuts += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "200 equivalence checks took {elapsed:?}, budget is 10 min"
    );
    println!(
        "criterion 5 PASS: 200 instances agree ({graphs} via graphs, {shortcuts} decided by simplification) in {elapsed:?}"
    );
}

#[test]
fn criterion_6_witness_properties() {
    let mut yes_instances = 0u32;
    for i in 0..200u64 {
        let instance = random_instance(i, 5, 4);
        let Some(brute) = brute_force_ssp(&instance).unwrap() else {
            continue;
        };
        let PipelineDecision::Graph(_, artifact, outcome) = pipeline_decision(&instance) else {
            continue;
        };
        yes_instances += 1;

        // (a) the brute-force solution traces to a verified cycle.
        let reduced = artifact.source().project_partition(&brute).unwrap();
        let traced = cycle_from_partition(&artifact, &reduced)
            .unwrap_or_else(|e| panic!("trace failed on instance {i}: {e}"));
        assert!(verify_cycle(artifact.graph(), &traced));

        // (b) the solver's cycle reads back as a solution.
        let cycle = outcome.cycle().expect("brute force says YES").clone();
        let extracted = extract_partition(&artifact, &cycle).unwrap();
        assert!(
            check_partition(artifact.source().instance(), &extracted)
                .unwrap()
                .is_solution
        );
        let lifted = extract_partition_original(&artifact, &cycle).unwrap();
        assert!(check_partition(&instance, &lifted).unwrap().is_solution);

        // (c) extraction inverts tracing.
        assert_eq!(extract_partition(&artifact, &traced).unwrap(), reduced);
    }
    assert!(yes_instances > 0, "the sample must contain YES instances");
    println!("criterion 6 PASS: witness round trips hold on {yes_instances} YES instances");
}

#[test]
fn criterion_7_negative_trace_golden() {
    let artifact = convert(&example_1());
    use Side::*;
    let p = Partition::from_sides(vec![One, Two, One, Two]);
    match cycle_from_partition(&artifact, &p) {
        Err(failure) => {
            assert_eq!(failure.subset_index, 2);
            assert_eq!(failure.detail, TraceDetail::MissingFlip);
        }
        Ok(_) => panic!("{{1,3}} | {{2,4}} must not trace to a cycle"),
    }
    println!("criterion 7 PASS: the bad partition fails on subset 2");
}

#[test]
fn criterion_8_solver_matches_permutation_oracle() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0xdecade);
    for case in 0..200u32 {
        let n = 1 + (case % 7);
        let density = 0.05 + 0.9 * f64::from(case % 10) / 9.0;
        let mut arcs = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if a != b && rng.gen_bool(density) {
                    arcs.push((a, b));
                }
            }
        }
        let g = DiGraph::from_arcs(n, &arcs).unwrap();
        let fast = solve(&g).is_hamiltonian();
        let slow = permutation_oracle(&g);
        assert_eq!(fast, slow, "disagreement on case {case}, graph {g:?}");
    }
    println!("criterion 8 PASS: 200 random graphs with n <= 7 match the permutation oracle");
}

/// Independent Hamiltonicity decision: try every permutation starting at
/// vertex 1.
fn permutation_oracle(g: &DiGraph) -> bool {
    fn extend(g: &DiGraph, path: &mut Vec<u32>, used: &mut Vec<bool>) -> bool {
        let n = g.vertex_count();
        let head = *path.last().unwrap();
        if path.len() == n as usize {
            return g.has_arc(head, 1);
        }
        for v in 2..=n {
            if !used[v as usize] && g.has_arc(head, v) {
                used[v as usize] = true;
                path.push(v);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[v as usize] = false;
            }
        }
        false
    }
    let n = g.vertex_count();
    if n == 0 {
        return false;
    }
    let mut used = vec![false; n as usize + 1];
    used[1] = true;
    extend(g, &mut vec![1], &mut used)
}

#[test]
fn criterion_9_simplification_suite() {
    // Rule 1: singleton subset decides NO.
    assert!(matches!(
        simplify(&inst(3, &[&[2]])),
        SimplificationResult::DecidedNo {
            reason: NoReason::SingletonSubset { subset: 1 }
        }
    ));
    // Rule 2: uncovered element removed.
    match simplify(&inst(4, &[&[1, 2], &[2, 3]])) {
        SimplificationResult::Reduced(sf) => {
            assert_eq!(sf.instance().universe_size(), 3);
            assert_eq!(sf.to_reduced_element(4), None);
        }
        other => panic!("expected Reduced, got {other:?}"),
    }
    // Rule 3: subset equal to the universe removed.
    match simplify(&inst(4, &[&[1, 2], &[2, 3], &[1, 2, 3, 4]])) {
        SimplificationResult::Reduced(sf) => {
            assert_eq!(sf.dropped_subsets(), &[3]);
            assert_eq!(sf.instance().subset_count(), 2);
        }
        other => panic!("expected Reduced, got {other:?}"),
    }
    // Rule 4: superset removed.
    match simplify(&inst(4, &[&[1, 2], &[1, 2, 3], &[2, 3], &[3, 4]])) {
        SimplificationResult::Reduced(sf) => {
            assert_eq!(sf.dropped_subsets(), &[2]);
        }
        other => panic!("expected Reduced, got {other:?}"),
    }
    // Fixpoint idempotence on 100 random reducible instances.
    let mut reduced_count = 0u32;
    let mut seed = 0u64;
    while reduced_count < 100 {
        let u = 2 + (seed % 5) as u32;
        let s = 1 + ((seed / 3) % 5) as u32;
        let instance = generate_random_instance(u, s, (2, 4.min(u)), 0xf1f0_0000 + seed).unwrap();
        seed += 1;
        if let SimplificationResult::Reduced(sf) = simplify(&instance) {
            match simplify(sf.instance()) {
                SimplificationResult::Reduced(again) => {
                    assert_eq!(again.instance(), sf.instance());
                    assert!(again.is_identity());
                }
                other => panic!("re-simplification changed the verdict: {other:?}"),
            }
            reduced_count += 1;
        }
    }
    println!("criterion 9 PASS: rule unit tests and idempotence on 100 reduced instances");
}

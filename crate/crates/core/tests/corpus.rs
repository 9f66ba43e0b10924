use clique_homotopy::graph::emit_graph6;
use clique_homotopy::harness::{connected_classes, enumerate_corpus, run_corpus, Check, CorpusSpec, RunOptions};

#[test]
fn degree_pruned_generation_matches_filtering() {
    let mut pruned: Vec<String> = connected_classes(7, 4).iter().map(emit_graph6).collect();
    let mut filtered: Vec<String> = connected_classes(7, usize::MAX)
        .iter()
        .filter(|g| g.max_degree() <= 4)
        .map(emit_graph6)
        .collect();
    pruned.sort();
    filtered.sort();
    assert_eq!(pruned, filtered);
}

#[test]
fn low_degree_counts() {
    // n = 6: 112 connected graphs, 34 of them cones (a vertex of degree 5),
    // and O_3 is excluded
    let per_n = |max_n| enumerate_corpus(&CorpusSpec::low_degree(max_n)).unwrap().len();
    assert_eq!(per_n(3), 4);
    assert_eq!(per_n(4), 10);
    assert_eq!(per_n(6) - per_n(5), 112 - 34 - 1);
}

#[test]
fn labeled_and_deduplicated_corpora_agree_on_classes() {
    use clique_homotopy::harness::CorpusSource;
    let labeled = CorpusSpec {
        source: CorpusSource::Generated { dedup: false },
        ..CorpusSpec::low_degree(4)
    };
    let graphs: Vec<_> = enumerate_corpus(&labeled)
        .unwrap()
        .into_iter()
        .map(Result::unwrap)
        .collect();
    // labeled connected graphs on 1..=4 vertices: 1 + 1 + 4 + 38
    assert_eq!(graphs.len(), 44);
    let classes = enumerate_corpus(&CorpusSpec::low_degree(4)).unwrap();
    for g in &graphs {
        let hits = classes
            .iter()
            .filter(|c| clique_homotopy::graph::is_isomorphic(c.as_ref().unwrap(), g).unwrap())
            .count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn reports_are_reproducible_across_thread_counts() {
    let run = |jobs| {
        let mut opts = RunOptions {
            jobs,
            ..RunOptions::default()
        };
        opts.verify.record_timings = false;
        let mut buf = Vec::new();
        let s = run_corpus(&CorpusSpec::low_degree(6), &Check::ALL, &opts, &mut buf).unwrap();
        assert_eq!(s.failed, 0);
        buf
    };
    assert_eq!(run(1), run(3));
}

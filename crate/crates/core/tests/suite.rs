use eil_core::catalog::graphs_up_to;
use eil_core::graph::named::*;
use eil_core::harness::*;
use eil_core::ideal::ambient;
use eil_core::{FieldChoice, Graph, HarnessError, MonomialIdeal, VertexSet};

const F2: FieldChoice = FieldChoice::Char2;

fn ideal_text(vars: &[&str], text: &str) -> Value {
    Value::Ideal(MonomialIdeal::parse(ambient(vars), text).unwrap().to_string())
}

fn int(v: &Option<Value>) -> i64 {
    match v {
        Some(Value::Int(k)) => *k,
        other => panic!("expected an integer, got {other:?}"),
    }
}

#[test]
fn spn_examples() {
    let o = check_prop_spn(&complete(2), F2).unwrap();
    assert!(o.holds());
    assert_eq!((int(&o.lhs), int(&o.rhs)), (2, 2));
    let o = check_prop_spn(&complete(3), F2).unwrap();
    assert_eq!((int(&o.lhs), int(&o.rhs)), (2, 2));
    let o = check_prop_spn(&Graph::empty(3).unwrap(), F2).unwrap();
    assert_eq!(o.status, Status::NotApplicable);
    assert!(o.lhs.is_none());
}

#[test]
fn star_examples() {
    let v = check_lemma_star(&complete(3));
    assert_eq!(v.len(), 1);
    assert!(v[0].holds());
    assert_eq!((int(&v[0].lhs), int(&v[0].rhs)), (0, -1));
    assert_eq!(check_lemma_star(&path(4))[0].status, Status::NotApplicable);
    assert_eq!(check_lemma_star(&whiskered_triangle())[0].status, Status::NotApplicable);
}

#[test]
fn int_examples() {
    let o = check_lemma_int(&complete(3), (0, 1)).unwrap();
    assert!(o.holds());
    assert_eq!(o.lhs, Some(ideal_text(&["x1", "x2", "x3"], "(x1*x2, x3)")));
    assert!(check_lemma_int(&complete(2), (0, 1)).unwrap().holds());
    let p4 = Graph::from_edge_list("a b\nb c\nc d").unwrap();
    let o = check_lemma_int(&p4, (1, 2)).unwrap();
    assert!(o.holds());
    assert_eq!(o.rhs, Some(ideal_text(&["a", "b", "c", "d"], "(a*b, b*c, c*d, a*d)")));
    assert!(matches!(check_lemma_int(&p4, (0, 3)), Err(HarnessError::Graph(_))));
}

#[test]
fn depth_lemma_examples() {
    let k3 = complete(3);
    for a in [VertexSet::EMPTY, VertexSet::singleton(2)] {
        for f in FieldChoice::ALL {
            assert!(check_lemma_depthlem(&k3, (0, 1), a, f).unwrap().holds());
            assert!(check_cor_cordepth(&k3, (0, 1), a, f).unwrap().holds());
        }
    }
    assert!(check_lemma_depthlem(&complete(2), (0, 1), VertexSet::EMPTY, F2)
        .unwrap()
        .holds());
    assert!(check_lemma_depthlem(&k3, (0, 1), VertexSet::singleton(0), F2).is_err());
}

#[test]
fn last_examples() {
    let o = check_lemma_last(&complete(3), (0, 1), VertexSet::EMPTY, F2).unwrap();
    assert!(o.holds());
    assert_eq!(int(&o.rhs), 0);
    let o = check_lemma_last(&whiskered_triangle(), (0, 1), VertexSet::EMPTY, F2).unwrap();
    assert!(o.holds());
    assert_eq!(int(&o.rhs), 1);
    let o = check_lemma_last(&complete(2), (0, 1), VertexSet::EMPTY, F2).unwrap();
    assert_eq!((int(&o.lhs), int(&o.rhs)), (2, 0));
}

#[test]
fn main_on_sharp_graphs() {
    for f in FieldChoice::ALL {
        let w = check_main(&whiskered_triangle(), f).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(
            (w[0].check_id.as_str(), int(&w[0].lhs), int(&w[0].rhs)),
            ("main1", 1, 1)
        );
        let wl = check_main(&whiskered_triangle_minus_leaf(), f).unwrap();
        let part2 = wl.iter().find(|o| o.check_id == "main2").unwrap();
        assert_eq!((int(&part2.lhs), int(&part2.rhs)), (1, 1));
        let p = check_main(&path(4), f).unwrap();
        assert_eq!(p.len(), 3);
        let part3 = p.iter().find(|o| o.check_id == "main3").unwrap();
        assert_eq!((int(&part3.lhs), int(&part3.rhs)), (2, 2));
    }
    assert_eq!(
        check_main(&Graph::empty(2).unwrap(), F2).unwrap()[0].status,
        Status::NotApplicable
    );
}

#[test]
fn sharp_examples_are_equalities() {
    for f in FieldChoice::ALL {
        let v = check_examples_sharp(f).unwrap();
        assert_eq!(v.len(), 9);
        assert!(v.iter().all(CheckOutcome::holds));
        let depths: Vec<i64> = v
            .iter()
            .filter(|o| o.check_id == "examples.depth")
            .map(|o| int(&o.lhs))
            .collect();
        let alphas: Vec<i64> = v
            .iter()
            .filter(|o| o.check_id == "examples.alpha2")
            .map(|o| int(&o.lhs))
            .collect();
        assert_eq!((depths, alphas), (vec![1, 1, 2], vec![3, 2, 2]));
    }
}

#[test]
fn colon_formula_examples() {
    let o = check_banerjee_colon(&complete(3), (0, 1), VertexSet::EMPTY).unwrap();
    assert!(o.holds());
    assert_eq!(
        o.lhs,
        Some(ideal_text(&["x1", "x2", "x3"], "(x1*x2, x1*x3, x2*x3, x3^2)"))
    );
    let two_edges = Graph::from_edge_list("x y\nu v").unwrap();
    let (x, y) = (two_edges.index_of("x").unwrap(), two_edges.index_of("y").unwrap());
    let o = check_banerjee_colon(&two_edges, (x, y), VertexSet::EMPTY).unwrap();
    assert!(o.holds());
    assert_eq!(o.lhs, Some(ideal_text(&["u", "v", "x", "y"], "(x*y, u*v)")));
    assert!(check_morey(&two_edges, (x, y)).unwrap().holds());
    let p4 = Graph::from_edge_list("a b\nb c\nc d").unwrap();
    let o = check_banerjee_colon(&p4, (1, 2), VertexSet::EMPTY).unwrap();
    assert!(o.holds());
    assert_eq!(o.lhs, Some(ideal_text(&["a", "b", "c", "d"], "(a*b, b*c, c*d, a*d)")));
}

#[test]
fn symbolic_examples() {
    let find = |v: &[CheckOutcome], id: &str| v.iter().find(|o| o.check_id == id).cloned().unwrap();
    let p4 = check_symbolic_square(&path(4), F2).unwrap();
    assert!(find(&p4, "symbolic.eq").holds());
    let k3 = check_symbolic_square(&complete(3), F2).unwrap();
    assert_eq!(find(&k3, "symbolic.eq").status, Status::NotApplicable);
    let tri = find(&k3, "symbolic.triangles");
    assert!(tri.holds());
    assert_eq!(tri.lhs, tri.rhs);
    assert_eq!(
        tri.rhs,
        Some(ideal_text(
            &["x1", "x2", "x3"],
            "(x1^2*x2^2, x1^2*x3^2, x2^2*x3^2, x1*x2*x3)"
        ))
    );
    assert!(find(&k3, "symbolic.depth").holds());
    assert!(find(&check_symbolic_square(&complete(2), F2).unwrap(), "symbolic.eq").holds());
}

#[test]
fn order_and_deletion_examples() {
    for g in [complete(3), complete(2), path(4)] {
        let o = check_order_decomposition(&g).unwrap();
        assert!(o.holds(), "{o:?}");
        assert!(o.witness.unwrap().note.unwrap().starts_with("order "));
    }
    assert_eq!(
        check_order_decomposition(&complete(5)).unwrap().status,
        Status::NotApplicable
    );
    assert!(check_deletion_bound(&complete(3), (0, 1), VertexSet::EMPTY)
        .unwrap()
        .holds());
    assert!(check_deletion_bound(&whiskered_triangle(), (0, 1), VertexSet::EMPTY)
        .unwrap()
        .holds());
    let o = check_deletion_bound(&complete(2), (0, 1), VertexSet::EMPTY).unwrap();
    assert_eq!((int(&o.lhs), int(&o.rhs)), (0, -1));
}

#[test]
fn all_checks_hold_up_to_five_vertices() {
    let corpus = graphs_up_to(5);
    let config = SuiteConfig::new(CheckId::ALL.to_vec(), FieldChoice::ALL.to_vec());
    let report = run_suite(&corpus, "graphs <= 5", &config).unwrap();
    assert!(!report.has_failures(), "{}", report.to_text());
    assert!(report.findings.is_empty(), "{}", report.to_text());
    assert!(!report.truncated);
    let s = &report.summary;
    assert_eq!(s.total, s.holds + s.fails + s.not_applicable);
    assert_eq!(s.total, report.outcomes.len());
    for o in &report.outcomes {
        assert_eq!(o.lhs.is_some(), o.status != Status::NotApplicable);
    }
}

#[test]
fn reports_are_deterministic() {
    let corpus = graphs_up_to(4);
    let config = SuiteConfig::new(parse_checks(&["all"]).unwrap(), vec![F2]);
    let render = || {
        let mut r = run_suite(&corpus, "graphs <= 4", &config).unwrap();
        r.zero_timings();
        (r.to_json().unwrap(), r.to_csv().unwrap())
    };
    assert_eq!(render(), render());
}

#[test]
fn empty_corpus_and_unknown_names() {
    let config = SuiteConfig::new(vec![CheckId::Main], vec![F2]);
    let r = run_suite(&[], "empty", &config).unwrap();
    assert_eq!(r.summary.total, 0);
    assert!(matches!(parse_checks(&["main", "nope"]), Err(HarnessError::UnknownCheck(s)) if s == "nope"));
    assert_eq!(parse_checks(&["main2", "main"]).unwrap(), vec![CheckId::Main]);
}

#[test]
fn large_pools_are_sampled_and_flagged() {
    // edge x1x2 with eleven further neighbours of x1
    let mut g = Graph::empty(13).unwrap();
    g.add_edge(0, 1).unwrap();
    for v in 2..13 {
        g.add_edge(0, v).unwrap();
    }
    let mut config = SuiteConfig::new(vec![CheckId::Deletion], vec![F2]);
    config.seed = 9;
    let (sets, sampled) = deletion_sets(&g, 0, 1, &config);
    assert!(sampled);
    assert!(sets.contains(&VertexSet::EMPTY));
    assert!(sets.contains(&g.admissible_pool(0, 1)));
    assert_eq!(deletion_sets(&g, 0, 1, &config).0, sets);
    let r = run_suite(&[g], "star", &config).unwrap();
    assert!(r.summary.sampled > 0);
    assert!(!r.has_failures());
}

#[test]
fn budget_truncates() {
    let corpus = graphs_up_to(4);
    let mut config = SuiteConfig::new(vec![CheckId::Spn], vec![F2]);
    config.budget.max_graphs = Some(3);
    let r = run_suite(&corpus, "graphs <= 4", &config).unwrap();
    assert!(r.truncated);
    assert_eq!(r.summary.total, 3);
}

#[test]
fn hunter_is_seeded() {
    let cfg = HuntConfig {
        n: 6,
        count: 20,
        edge_probability: 0.5,
        check_prefix: "main1".into(),
        suite: SuiteConfig {
            seed: 7,
            ..SuiteConfig::new(vec![CheckId::Main], vec![F2])
        },
    };
    let mut a = hunt(&cfg).unwrap();
    let mut b = hunt(&cfg).unwrap();
    a.zero_timings();
    b.zero_timings();
    assert_eq!(a, b);
    assert!(!a.has_failures());
    assert!(a.outcomes.iter().all(|o| o.check_id == "main1"));
}

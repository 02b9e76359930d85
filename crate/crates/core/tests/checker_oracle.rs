mod common;

use common::configs::{petersen_config, random_config, Brute};
use common::rng;
use packing_core::graph::named;
use packing_core::reducibility::{
    check_reducible, enumerate_precolorings, precoloring_consistent, precoloring_from_patterns, CheckOptions,
    Configuration, Engine, Stats, Verdict, FIRST_COUNT,
};
use rand::Rng;

fn run(cfg: &Configuration, engine: Engine, exhaustive_first: bool, limit: usize, resume: Option<Vec<u8>>) -> (Verdict, Vec<Vec<u8>>, Stats) {
    let opts = CheckOptions { exhaustive_first, witness_limit: limit, engine, resume, ..Default::default() };
    let r = check_reducible(cfg, &opts).unwrap();
    for w in &r.witnesses {
        assert_eq!(w.coloring, precoloring_from_patterns(cfg, &w.patterns));
    }
    (r.verdict, r.witnesses.into_iter().map(|w| w.patterns).collect(), r.stats)
}

#[test]
fn checker_matches_brute_force() {
    let mut r = rng(2024);
    let mut counts = [0usize; 2];
    let mut configs = 0;
    let mut mixed = 0;
    for i in 0..90 {
        let name = format!("cfg_{i}");
        let (cfg, brute) = match i % 3 {
            0 => {
                let c = random_config(&mut r, &name);
                let b = Brute::new(&c);
                (c, b)
            }
            1 => {
                let c = petersen_config(&mut r, &name);
                let b = Brute::new(&c);
                (c, b)
            }
            _ => loop {
                let c = petersen_config(&mut r, &name);
                let b = Brute::new(&c);
                if b.is_mixed() {
                    break (c, b);
                }
            },
        };
        assert!(cfg.n() <= 12 && cfg.triples.len() <= 2);
        mixed += brute.is_mixed() as usize;
        for exhaustive_first in [false, true] {
            for limit in [1, 3] {
                let (fails, stats) = brute.expect(exhaustive_first, &[], limit);
                let verdict = if fails.is_empty() { Verdict::Reducible } else { Verdict::Counterexample };
                for engine in [Engine::Faithful, Engine::Frontier, Engine::Auto] {
                    let got = run(&cfg, engine, exhaustive_first, limit, None);
                    assert_eq!(got, (verdict, fails.clone(), stats), "{} {engine:?} exhaustive={exhaustive_first} limit={limit}", cfg.name);
                }
                if limit == 1 {
                    counts[fails.is_empty() as usize] += 1;
                }
            }
        }
        configs += 1;
    }
    assert!(configs >= 50);
    // both verdicts are exercised
    assert!(counts[0] >= 10 && counts[1] >= 10, "counterexamples {}, reducible {}", counts[0], counts[1]);
    assert!(mixed >= 30, "only {mixed} configurations mix extending and failing precolorings");
}

#[test]
fn resume_matches_brute_force_suffix() {
    let mut r = rng(99);
    for i in 0..40 {
        let cfg = if i % 2 == 0 {
            random_config(&mut r, &format!("resume_{i}"))
        } else {
            petersen_config(&mut r, &format!("resume_{i}"))
        };
        let t = cfg.triples.len();
        if t == 0 {
            continue;
        }
        let brute = Brute::new(&cfg);
        let exhaustive_first = r.gen_bool(0.5);
        let first_max = if exhaustive_first { 30 } else { FIRST_COUNT as u8 };
        let cursor: Vec<u8> = (0..t).map(|k| r.gen_range(0..if k == 0 { first_max } else { 30 })).collect();
        let (fails, stats) = brute.expect(exhaustive_first, &cursor, 2);
        for engine in [Engine::Faithful, Engine::Frontier] {
            let (_, got_fails, got_stats) = run(&cfg, engine, exhaustive_first, 2, Some(cursor.clone()));
            assert_eq!((&got_fails, &got_stats), (&fails, &stats), "{} {engine:?} from {cursor:?}", cfg.name);
        }
    }
}

#[test]
fn bad_cursor_is_rejected() {
    let mut r = rng(5);
    let cfg = loop {
        let c = random_config(&mut r, "c");
        if c.triples.len() == 2 {
            break c;
        }
    };
    let opts = CheckOptions { resume: Some(vec![5, 0]), ..Default::default() };
    assert!(check_reducible(&cfg, &opts).is_err());
    let opts = CheckOptions { resume: Some(vec![0]), ..Default::default() };
    assert!(check_reducible(&cfg, &opts).is_err());
}

#[test]
fn enumeration_and_consistency_agree_with_brute_force() {
    let mut r = rng(31);
    for i in 0..30 {
        let cfg = random_config(&mut r, &format!("enum_{i}"));
        let brute = Brute::new(&cfg);
        for exhaustive_first in [false, true] {
            let listed: Vec<_> = enumerate_precolorings(&cfg, exhaustive_first).collect();
            let expected: Vec<_> = brute.in_mode(exhaustive_first).collect();
            assert_eq!(listed.len(), expected.len());
            for (pre, (idx, consistent, _)) in listed.iter().zip(expected) {
                assert_eq!(*pre, precoloring_from_patterns(&cfg, idx));
                assert_eq!(precoloring_consistent(&cfg, pre), *consistent);
            }
        }
    }
}

#[test]
fn whole_graph_configurations() {
    let petersen = Configuration::new("petersen", named::petersen(), named::petersen(), Vec::new()).unwrap();
    let r = check_reducible(&petersen, &CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Counterexample);
    assert_eq!(r.witness().unwrap().patterns, Vec::<u8>::new());
    assert_eq!(r.stats, Stats { precolorings_total: 1, pruned_inconsistent: 0, extended_ok: 0 });

    let k4 = named::complete(4).unwrap();
    let r = check_reducible(&Configuration::new("k4", k4.clone(), k4, Vec::new()).unwrap(), &CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Reducible);
    assert_eq!(r.stats.extended_ok, 1);
}

#[test]
fn extra_edges_only_prune_and_modes_nest() {
    let mut r = rng(77);
    for i in 0..30 {
        let cfg = random_config(&mut r, &format!("mono_{i}"));
        let plain = Configuration::new("plain", cfg.base.clone(), cfg.base.clone(), cfg.triples.clone()).unwrap();
        for pre in enumerate_precolorings(&cfg, true) {
            if precoloring_consistent(&cfg, &pre) {
                assert!(precoloring_consistent(&plain, &pre));
            }
        }
        let exhaustive = run(&cfg, Engine::Auto, true, 1, None).0;
        let default = run(&cfg, Engine::Auto, false, 1, None).0;
        if exhaustive == Verdict::Reducible {
            assert_eq!(default, Verdict::Reducible);
        }
    }
}

#[test]
fn synthetic_corpus_engines_agree() {
    let mut verdicts = Vec::new();
    for cfg in packing_core::reducibility::synthetic_corpus() {
        assert!(cfg.triples.len() <= 4);
        for exhaustive_first in [false, true] {
            let a = run(&cfg, Engine::Faithful, exhaustive_first, 2, None);
            let b = run(&cfg, Engine::Frontier, exhaustive_first, 2, None);
            assert_eq!(a, b, "{}", cfg.name);
            if !exhaustive_first {
                verdicts.push(a.0);
            }
        }
    }
    assert!(verdicts.contains(&Verdict::Reducible) && verdicts.contains(&Verdict::Counterexample));
}

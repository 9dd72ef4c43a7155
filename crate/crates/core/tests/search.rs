//! Search properties on the bundled theories at small orders.

use std::collections::HashSet;

use isoenum_core::canon::brute_force_canonicalize;
use isoenum_core::filter::{filter_models, FilterMode};
use isoenum_core::fol::{parse_theory, Theory};
use isoenum_core::ground::ground_theory;
use isoenum_core::kernel::{is_model, Cube};
use isoenum_core::search::{collect_models, CanonMode, SearchOptions, Strategy};

const THEORIES: &[(&str, &str)] = &[
    ("tarski", include_str!("../../../corpus/tarski.th")),
    ("involutive_lattices", include_str!("../../../corpus/involutive_lattices.th")),
    ("m_zeroids", include_str!("../../../corpus/m_zeroids.th")),
    ("near_rings", include_str!("../../../corpus/near_rings.th")),
    ("tarski_hsi", include_str!("../../../corpus/tarski_hsi.th")),
    ("loops", include_str!("../../../corpus/loops.th")),
    ("c_loops", include_str!("../../../corpus/c_loops.th")),
    ("ip_loops", include_str!("../../../corpus/ip_loops.th")),
];

fn theory(name: &str) -> Theory {
    let text = THEORIES.iter().find(|(n, _)| *n == name).unwrap().1;
    parse_theory(text).unwrap()
}

fn brute_keys(models: &[Cube]) -> HashSet<Vec<u8>> {
    models
        .iter()
        .map(|c| brute_force_canonicalize(c).unwrap().1 .0.into_bytes())
        .collect()
}

fn unpruned() -> SearchOptions {
    SearchOptions {
        canon: CanonMode::Off,
        lnh: false,
        ..SearchOptions::default()
    }
}

#[test]
fn models_are_models_and_pairwise_non_isomorphic() {
    for (name, text) in THEORIES {
        let t = parse_theory(text).unwrap();
        for n in 2..=5 {
            let (models, stats) = collect_models(&t, n, &SearchOptions::default()).unwrap();
            assert!(stats.is_complete());
            let ground = ground_theory(&t, n).unwrap();
            for m in &models {
                assert!(m.is_total(), "{name} order {n}");
                assert!(is_model(m, &ground), "{name} order {n}");
            }
            assert_eq!(brute_keys(&models).len(), models.len(), "{name} order {n}");
        }
    }
}

#[test]
fn pruned_search_covers_every_class() {
    for (name, text) in THEORIES {
        let t = parse_theory(text).unwrap();
        for n in 2..=4 {
            let (pruned, _) = collect_models(&t, n, &SearchOptions::default()).unwrap();
            let (all, _) = collect_models(&t, n, &unpruned()).unwrap();
            assert_eq!(brute_keys(&pruned), brute_keys(&all), "{name} order {n}");
        }
    }
}

#[test]
fn options_do_not_change_the_classes() {
    let t = theory("near_rings");
    let n = 4;
    let (reference, _) = collect_models(&t, n, &SearchOptions::default()).unwrap();
    let reference = brute_keys(&reference);
    for strategy in [Strategy::RowMajor, Strategy::Concentric] {
        for lnh in [true, false] {
            for propagation in [true, false] {
                for canon in [CanonMode::Graph, CanonMode::Perm] {
                    let opts = SearchOptions {
                        strategy,
                        lnh,
                        propagation,
                        canon,
                        ..SearchOptions::default()
                    };
                    let (models, _) = collect_models(&t, n, &opts).unwrap();
                    assert_eq!(models.len(), reference.len());
                    assert_eq!(brute_keys(&models), reference);
                }
            }
        }
    }
}

#[test]
fn filtering_all_models_gives_the_class_count() {
    for name in ["loops", "tarski_hsi", "involutive_lattices"] {
        let t = theory(name);
        for n in 2..=5 {
            let (all, _) = collect_models(&t, n, &unpruned()).unwrap();
            let (pruned, _) = collect_models(&t, n, &SearchOptions::default()).unwrap();
            let mut graph = Vec::new();
            let gs = filter_models(all.iter().cloned().map(Ok), FilterMode::Graph, |i, _| graph.push(i)).unwrap();
            let mut brute = Vec::new();
            filter_models(all.iter().cloned().map(Ok), FilterMode::BruteForce, |i, _| brute.push(i)).unwrap();
            assert_eq!(graph, brute, "{name} order {n}");
            assert_eq!(gs.kept as usize, pruned.len(), "{name} order {n}");
            assert_eq!(gs.read as usize, all.len());
        }
    }
}

/// Multiplication tables with identity 0 whose rows and columns are
/// permutations, built cell by cell.
fn normalized_latin_squares(n: usize) -> Vec<Vec<u8>> {
    fn fill(n: usize, t: &mut Vec<u8>, i: usize, out: &mut Vec<Vec<u8>>) {
        if i == n * n {
            out.push(t.clone());
            return;
        }
        let (r, c) = (i / n, i % n);
        if r == 0 || c == 0 {
            t[i] = (r + c) as u8;
            return fill(n, t, i + 1, out);
        }
        for v in 0..n as u8 {
            let clash = (0..c).any(|k| t[r * n + k] == v) || (0..r).any(|k| t[k * n + c] == v);
            if !clash {
                t[i] = v;
                fill(n, t, i + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    fill(n, &mut vec![0; n * n], 0, &mut out);
    out
}

#[test]
fn loop_counts_match_latin_square_oracle() {
    let t = theory("loops");
    for n in 2..=5 {
        let squares = normalized_latin_squares(n);
        let (models, _) = collect_models(&t, n, &SearchOptions::default()).unwrap();
        let layout = models.first().map(|m| m.layout().clone());
        let oracle: HashSet<Vec<u8>> = squares
            .into_iter()
            .map(|s| {
                let c = Cube::from_values(layout.clone().unwrap(), s).unwrap();
                brute_force_canonicalize(&c).unwrap().1 .0.into_bytes()
            })
            .collect();
        assert_eq!(brute_keys(&models), oracle, "order {n}");
    }
}

#[test]
fn normalized_latin_square_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| normalized_latin_squares(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 4, 56]);
}

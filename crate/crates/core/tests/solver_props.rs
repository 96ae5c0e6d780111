use proptest::prelude::*;
use roget_core::{fixture, score_test, Credit, Solver, SynonymQuestion, Thesaurus};

fn words(t: &Thesaurus) -> Vec<String> {
    t.index().keys().map(String::from).collect()
}

/// Nested loop over both reference sets.
fn brute_force(t: &Thesaurus, w1: &str, w2: &str) -> Option<(u8, usize)> {
    let (a, b) = (t.references(w1), t.references(w2));
    let all: Vec<u8> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .map(|(x, y)| t.reference_distance(x, y).unwrap().edges())
        .collect();
    let min = *all.iter().min()?;
    Some((min, all.iter().filter(|&&d| d == min).count()))
}

#[test]
fn pair_counts_match_brute_force_on_every_word_pair() {
    let t = fixture::thesaurus();
    let words = words(&t);
    for w1 in &words {
        for w2 in &words {
            let found = t.word_min_distance(w1, w2).unwrap();
            assert_eq!(Some((found.distance.edges(), found.pair_count())), brute_force(&t, w1, w2));
            let back = t.word_min_distance(w2, w1).unwrap();
            assert_eq!((back.distance, back.pair_count()), (found.distance, found.pair_count()));
            assert_eq!(t.similarity(w1, w2).unwrap().value() + found.distance.edges(), 16);
        }
        assert_eq!(t.similarity(w1, w1).unwrap().value(), 16);
    }
}

#[test]
fn ode_question() {
    let t = fixture::thesaurus();
    let q = SynonymQuestion::new("ode", ["heavy debt", "poem", "sweet smell", "surprise"], 1).unwrap();
    let result = Solver::new(&t).answer(&q);
    let distances: Vec<u8> = result.per_choice.iter().map(|c| c.distance.unwrap().edges()).collect();
    assert_eq!(distances, [12, 2, 16, 12]);
    assert_eq!(result.chosen(), Some(1));
    assert_eq!(result.verdict(), "CORRECT");
    assert_eq!(result.credit, Credit::FULL);
    assert_eq!(result.per_choice[0].contributing_token.as_deref(), Some("heavy"));
    for (c, token) in result.per_choice.iter().zip(["heavy", "poem", "sweet smell", "surprise"]) {
        assert_eq!(brute_force(&t, "ode", token).unwrap().1, c.pair_count);
    }
}

#[test]
fn tie_credits() {
    let t = fixture::thesaurus();
    let cases = [
        (["end", "finish", "nag", "ode"], Credit::HALF),
        (["end", "finish", "close", "nag"], Credit::THIRD),
        (["end", "finish", "close", "journey's end"], Credit::QUARTER),
    ];
    for (choices, credit) in cases {
        let q = SynonymQuestion::new("terminus", choices, 0).unwrap();
        let r = Solver::new(&t).answer(&q);
        assert!(r.is_tie());
        assert!(!r.correct);
        assert_eq!(r.credit, credit);
        assert_eq!(r.verdict(), "TIE");
    }
    let q = SynonymQuestion::new("devotion", ["abnormal affection", "infatuation", "nag", "terminus"], 0).unwrap();
    let r = Solver::new(&t).answer(&q);
    assert_eq!(r.tied_indices(), [0, 1]);
    assert_eq!(r.per_choice[0].distance.unwrap().edges(), 2);
    assert_eq!(r.credit, Credit::HALF);
    // gold outside the tie earns nothing
    let q = SynonymQuestion::new("devotion", ["abnormal affection", "infatuation", "nag", "terminus"], 2).unwrap();
    assert_eq!(Solver::new(&t).answer(&q).credit, Credit::ZERO);
}

#[test]
fn unanswerable_question() {
    let t = fixture::thesaurus();
    let q = SynonymQuestion::new("zzzz", ["end", "finish", "close", "nag"], 0).unwrap();
    let r = Solver::new(&t).answer(&q);
    assert!(r.is_unanswerable());
    assert_eq!(r.credit, Credit::ZERO);
    assert_eq!(r.verdict(), "NOT-FOUND");
}

fn question(words: &[String], picks: [usize; 5], gold: usize) -> SynonymQuestion {
    let w = |i: usize| words[i % words.len()].as_str();
    SynonymQuestion::new(w(picks[0]), [w(picks[1]), w(picks[2]), w(picks[3]), w(picks[4])], gold).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn chosen_is_best_by_distance_then_paths(picks in any::<[usize; 5]>(), gold in 0usize..4) {
        let t = fixture::thesaurus();
        let q = question(&words(&t), picks, gold);
        let r = Solver::new(&t).answer(&q);
        prop_assert_eq!(&r, &Solver::new(&t).answer(&q));

        // brute-force selector: lexicographic (distance, -paths), lowest index first
        let keyed: Vec<(u8, i64, usize)> = q.choices.iter().enumerate()
            .filter_map(|(i, c)| brute_force(&t, &q.problem, c).map(|(d, n)| (d, -(n as i64), i)))
            .collect();
        let best = keyed.iter().min().unwrap();
        prop_assert_eq!(r.chosen(), Some(best.2));
        let leaders = keyed.iter().filter(|k| k.0 == best.0 && k.1 == best.1).count();
        prop_assert_eq!(r.is_tie(), leaders > 1);
        prop_assert!(r.credit <= Credit::FULL);
        prop_assert_eq!(r.credit == Credit::FULL, r.correct);
        if keyed.iter().filter(|k| k.0 == best.0).count() == 1 && best.2 == q.gold {
            prop_assert!(r.correct);
        }
    }

    #[test]
    fn permuting_choices_keeps_the_verdict(picks in any::<[usize; 5]>(), gold in 0usize..4, perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let t = fixture::thesaurus();
        let q = question(&words(&t), picks, gold);
        let mut shuffled = q.clone();
        for (to, &from) in perm.iter().enumerate() {
            shuffled.choices[to] = q.choices[from].clone();
        }
        shuffled.gold = perm.iter().position(|&from| from == q.gold).unwrap();
        let (a, b) = (Solver::new(&t).answer(&q), Solver::new(&t).answer(&shuffled));
        prop_assert_eq!(a.correct, b.correct);
        prop_assert_eq!(a.credit, b.credit);
    }

    #[test]
    fn total_credit_is_bounded(picks in proptest::collection::vec((any::<[usize; 5]>(), 0usize..4), 1..20)) {
        let t = fixture::thesaurus();
        let qs: Vec<_> = picks.iter().map(|(p, g)| question(&words(&t), *p, *g)).collect();
        let (_, report) = score_test(&t, &qs).unwrap();
        prop_assert!(report.score.twelfths <= 12 * qs.len() as u64);
        prop_assert_eq!(report.question_count, qs.len());
    }
}

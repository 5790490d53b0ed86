use proptest::prelude::*;
use subseq_core::level::LevelParams;
use subseq_core::multi::{diagonals, multi_cap};
use subseq_core::{
    bar_multi, build_any_level, build_chain, build_common_level, build_k_level, build_level,
    build_naive_common, build_sa, equivalence_check, level_multi, trace_equivalence, Alphabet,
    Automaton, EnumerationConfig, Oracle, TupleIndexer,
};

fn text_strategy(symbols: &'static str, max_len: usize) -> impl Strategy<Value = Vec<char>> {
    let pool: Vec<char> = symbols.chars().collect();
    proptest::collection::vec(prop::sample::select(pool), 0..=max_len)
}

fn probe_alphabet(texts: &[&[char]]) -> Vec<char> {
    let a = Alphabet::from_texts(texts.iter().copied());
    let mut symbols = a.symbols().to_vec();
    symbols.push(a.fresh_symbol());
    symbols
}

fn single_variants(text: &[char]) -> Vec<Automaton> {
    let sigma = Alphabet::from_text(text).len().max(2) as u64;
    let mut out = vec![build_sa(text), build_chain(text), build_level(text)];
    out.extend((2..=sigma).map(|k| build_k_level(text, k).unwrap()));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn single_variants_match_oracle_and_sa_trace(text in text_strategy("abcd", 12)) {
        let alphabet = probe_alphabet(&[&text]);
        let cfg = EnumerationConfig::default();
        let oracle = Oracle::Subsequence(text.clone());
        let sa = build_sa(&text);
        for a in single_variants(&text) {
            prop_assert!(a.validate_forward().is_ok());
            let r = equivalence_check(&a, &oracle, &alphabet, 4, &cfg).unwrap();
            prop_assert!(r.is_equivalent(), "{} mismatches {:?}", a.variant(), r.mismatches);
            let chain = a.size_metrics().longest_default_chain;
            prop_assert!(r.max_defaults_per_char as usize <= chain);
            let t = trace_equivalence(&sa, &a, &alphabet, 4, &cfg).unwrap();
            prop_assert!(t.is_equivalent(), "{}: {:?}", a.variant(), t.counterexample);
        }
    }

    #[test]
    fn acceptance_is_prefix_closed(
        text in text_strategy("abc", 10),
        pattern in text_strategy("abcd", 6),
    ) {
        for a in single_variants(&text) {
            if a.accepts(&pattern) {
                for i in 0..pattern.len() {
                    prop_assert!(a.accepts(&pattern[..i]));
                }
            }
            let out = a.run(&pattern);
            prop_assert!(out.consumed_targets.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(out.accepted, out.reject_position.is_none());
        }
    }

    #[test]
    fn default_edges_raise_level(text in text_strategy("abcdefgh", 60)) {
        let n = text.len();
        let sigma = Alphabet::from_text(&text).len();
        let level = build_level(&text);
        let p = LevelParams::uncapped(n);
        for s in 1..=n {
            if let Some(d) = level.default_target(s as u32) {
                prop_assert!(p.level(d as usize) > p.level(s));
            }
        }
        if n > 0 {
            prop_assert!(level.size_metrics().longest_default_chain <= n.ilog2() as usize + 1);
        }
        for k in 2..=sigma.max(2) as u64 {
            let a = build_k_level(&text, k).unwrap();
            let p = LevelParams::alphabet_aware(k, sigma, n).unwrap();
            for s in 1..=n {
                if let Some(d) = a.default_target(s as u32) {
                    prop_assert!(p.level(d as usize) > p.level(s));
                }
            }
            let cap = p.cap().unwrap() as usize;
            prop_assert!(a.size_metrics().longest_default_chain <= cap + 1);
        }
    }

    #[test]
    fn pairs_match_oracles(s1 in text_strategy("abc", 6), s2 in text_strategy("abc", 6)) {
        let texts = vec![s1.clone(), s2.clone()];
        let alphabet = probe_alphabet(&[&s1, &s2]);
        let cfg = EnumerationConfig::default();
        let common = Oracle::Common(texts.clone());
        let naive = build_naive_common(&s1, &s2).unwrap();
        let level = build_common_level(&[&s1, &s2]).unwrap();
        let any = build_any_level(&[&s1, &s2]).unwrap();
        for a in [&naive, &level] {
            let r = equivalence_check(a, &common, &alphabet, 4, &cfg).unwrap();
            prop_assert!(r.is_equivalent(), "{} {:?}", a.variant(), r.mismatches);
        }
        let r = equivalence_check(&any, &Oracle::Any(texts), &alphabet, 4, &cfg).unwrap();
        prop_assert!(r.is_equivalent(), "any-level {:?}", r.mismatches);
        let t = trace_equivalence(&naive, &level, &alphabet, 4, &cfg).unwrap();
        prop_assert!(t.is_equivalent(), "{:?}", t.counterexample);
        for a in [&naive, &level, &any] {
            let ix = a.meta().tuple_indexer().unwrap();
            prop_assert!(a.validate(|u, v| ix.forward(u, v)).is_ok());
        }
    }

    #[test]
    fn displacement_identity(lengths in proptest::collection::vec(1usize..40, 2..4), cap in 1u32..6) {
        let ix = TupleIndexer::common(&lengths);
        let total = ix.total_states() as usize;
        for id in (1..total).step_by(7) {
            let t = ix.decode(id);
            if let Some(b) = bar_multi(&t, cap, &lengths) {
                let gap = 1usize << level_multi(&t, cap);
                for (x, y) in b.coords().iter().zip(t.coords()) {
                    prop_assert_eq!(x - y, gap);
                }
                prop_assert!(level_multi(&b, cap) > level_multi(&t, cap));
            }
        }
        let sum: usize = diagonals(&lengths).iter().map(|d| d.len).sum();
        prop_assert_eq!(sum, lengths.iter().product::<usize>());
    }
}

#[test]
fn full_base_k_level_equals_sa_language() {
    let text: Vec<char> = "abadca".chars().collect();
    let a = build_k_level(&text, 4).unwrap();
    assert_eq!(a.meta().sigma, Some(4));
    let alphabet: Vec<char> = "abcd".chars().collect();
    let cfg = EnumerationConfig::default();
    let t = trace_equivalence(&build_sa(&text), &a, &alphabet, 4, &cfg).unwrap();
    assert!(t.is_equivalent());
    assert_eq!(t.patterns_checked, 1 + 4 + 16 + 64 + 256);
}

#[test]
fn identical_triple_reduces_to_single_string() {
    let s: Vec<char> = "abc".chars().collect();
    let a = build_common_level(&[&s, &s, &s]).unwrap();
    let alphabet: Vec<char> = "abcd".chars().collect();
    let mut accepted = 0;
    let space = subseq_core::verify::PatternSpace::new(alphabet, 3);
    let mut buf = Vec::new();
    for i in 0..space.size() as u64 {
        space.pattern(i, &mut buf);
        if a.accepts(&buf) {
            accepted += 1;
            assert!(subseq_core::is_subsequence(&buf, &s));
        }
    }
    assert_eq!(accepted, 8);
    assert!(a.size_metrics().longest_default_chain <= multi_cap(3) as usize + 1);
}

#[test]
fn naive_ab_ba_language() {
    let (s1, s2): (Vec<char>, Vec<char>) = ("ab".chars().collect(), "ba".chars().collect());
    for a in [
        build_naive_common(&s1, &s2).unwrap(),
        build_common_level(&[&s1, &s2]).unwrap(),
    ] {
        let space = subseq_core::verify::PatternSpace::new(vec!['a', 'b'], 2);
        let mut buf = Vec::new();
        let mut accepted = Vec::new();
        for i in 0..space.size() as u64 {
            space.pattern(i, &mut buf);
            if a.accepts(&buf) {
                accepted.push(buf.iter().collect::<String>());
            }
        }
        assert_eq!(accepted, ["", "a", "b"]);
    }
    let any = build_any_level(&[&['x'][..], &['y'][..]]).unwrap();
    let space = subseq_core::verify::PatternSpace::new(vec!['x', 'y'], 2);
    let mut buf = Vec::new();
    let mut accepted = Vec::new();
    for i in 0..space.size() as u64 {
        space.pattern(i, &mut buf);
        if any.accepts(&buf) {
            accepted.push(buf.iter().collect::<String>());
        }
    }
    assert_eq!(accepted, ["", "x", "y"]);
}

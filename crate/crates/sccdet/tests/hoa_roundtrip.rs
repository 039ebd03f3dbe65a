use proptest::prelude::*;
use sccdet::hoa::{
    default_aps, explicit_alphabet, parse_hoa, serialize_dela, serialize_nba, to_dela, to_nba,
    Label,
};
use sccdet_core::generate::{gen_random_nba, random_corpus, running_example};
use sccdet_core::rabin::to_rabin;
use sccdet_core::{build_dela, Options};

fn label_text(l: &Label) -> String {
    match l {
        Label::True => "t".into(),
        Label::False => "f".into(),
        Label::Ap(j) => j.to_string(),
        Label::Not(x) => format!("!({})", label_text(x)),
        Label::And(x, y) => format!("({}) & ({})", label_text(x), label_text(y)),
        Label::Or(x, y) => format!("({}) | ({})", label_text(x), label_text(y)),
    }
}

fn label_strategy(aps: u32) -> impl Strategy<Value = Label> {
    let leaf = prop_oneof![
        Just(Label::True),
        Just(Label::False),
        (0..aps).prop_map(Label::Ap)
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|x| Label::Not(Box::new(x))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Label::And(Box::new(x), Box::new(y))),
            (inner.clone(), inner).prop_map(|(x, y)| Label::Or(Box::new(x), Box::new(y))),
        ]
    })
}

#[test]
fn corpus_nba_round_trip() {
    for (seed, nba) in random_corpus(200).chain([(u64::MAX, running_example())]) {
        let aps = default_aps(nba.alphabet_size()).unwrap();
        let text = serialize_nba(&nba, &aps).unwrap();
        let doc = parse_hoa(&text).unwrap();
        assert_eq!(to_nba(&doc).unwrap(), nba, "seed {seed}");
        let again = serialize_nba(&to_nba(&doc).unwrap(), &aps).unwrap();
        assert_eq!(again, text);
        assert_eq!(parse_hoa(&again).unwrap().canonical(), doc.canonical());
    }
}

#[test]
fn corpus_dela_and_rabin_round_trip() {
    for (seed, nba) in random_corpus(100) {
        let det = build_dela(&nba, &Options::default()).unwrap();
        let aps = default_aps(nba.alphabet_size()).unwrap();
        let text = serialize_dela(&det.dela, &aps, None).unwrap();
        let doc = parse_hoa(&text).unwrap();
        assert_eq!(to_dela(&doc).unwrap(), det.dela, "seed {seed}");
        assert_eq!(
            serialize_dela(&to_dela(&doc).unwrap(), &aps, None).unwrap(),
            text
        );

        let rabin = to_rabin(&det.dela, &det.layout).unwrap();
        let text = serialize_dela(&rabin, &aps, Some("Rabin 1")).unwrap();
        assert_eq!(to_dela(&parse_hoa(&text).unwrap()).unwrap(), rabin);
    }
}

#[test]
fn wider_alphabet_round_trip() {
    let nba = gen_random_nba(3, 4, 8, 1.2, 0.3);
    let aps: Vec<String> = ["x", "y z", "w\"q"].iter().map(|s| s.to_string()).collect();
    let text = serialize_nba(&nba, &aps).unwrap();
    let doc = parse_hoa(&text).unwrap();
    assert_eq!(doc.aps, aps);
    assert_eq!(to_nba(&doc).unwrap(), nba);
    assert!(serialize_nba(&nba, &aps[..2]).is_err());
}

proptest! {
    // Expanded edges per (source, letter) are exactly the original edges whose
    // label the letter satisfies.
    #[test]
    fn label_expansion_is_a_partition(labels in proptest::collection::vec((label_strategy(3), 0u32..2, 0u32..2), 1..6)) {
        let mut text = String::from("HOA: v1\nStates: 2\nStart: 0\nAP: 3 \"a\" \"b\" \"c\"\nAcceptance: 1 Inf(0)\n--BODY--\nState: 0\n");
        for (l, target, acc) in &labels {
            text.push_str(&format!("[{}] {}{}\n", label_text(l), target, if *acc == 1 { " {0}" } else { "" }));
        }
        text.push_str("State: 1\n--END--\n");
        let doc = parse_hoa(&text).unwrap();
        prop_assert_eq!(&doc.edges.iter().map(|e| e.label.clone()).collect::<Vec<_>>(),
                        &labels.iter().map(|x| x.0.clone()).collect::<Vec<_>>());
        let explicit = explicit_alphabet(&doc).unwrap();
        for letter in 0..8u32 {
            let mut got: Vec<(u32, Vec<u32>)> = explicit.edges.iter()
                .filter(|e| e.source == 0 && e.letter == letter)
                .map(|e| (e.target, e.colors.clone()))
                .collect();
            let mut want: Vec<(u32, Vec<u32>)> = labels.iter()
                .filter(|(l, _, _)| {
                    let bit = |j: u32| letter >> j & 1 == 1;
                    eval(l, &bit)
                })
                .map(|(_, t, acc)| (*t, if *acc == 1 { vec![0] } else { vec![] }))
                .collect();
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn random_nba_round_trip(seed in 0u64..10_000, n in 1usize..8, density in 1.0f64..2.5) {
        let nba = gen_random_nba(seed, n, 4, density, 0.3);
        let aps = default_aps(4).unwrap();
        let text = serialize_nba(&nba, &aps).unwrap();
        prop_assert_eq!(to_nba(&parse_hoa(&text).unwrap()).unwrap(), nba);
    }
}

// Reference evaluation written against the variable valuation directly.
fn eval(l: &Label, bit: &dyn Fn(u32) -> bool) -> bool {
    match l {
        Label::True => true,
        Label::False => false,
        Label::Ap(j) => bit(*j),
        Label::Not(x) => !eval(x, bit),
        Label::And(x, y) => eval(x, bit) & eval(y, bit),
        Label::Or(x, y) => eval(x, bit) | eval(y, bit),
    }
}

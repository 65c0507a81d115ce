mod common;

use cluster_scatter::folding::{check_admissible, GroupAction};
use cluster_scatter::lattice::is_maximal_green_sequence;
use common::*;

#[test]
fn seed_fixtures_match_builders() {
    assert_eq!(fixture_seed("s24").skew, s24().skew);
    assert_eq!(fixture_seed("markov_folded"), markov());
    assert_eq!(fixture_seed("a3"), a3());
    assert_eq!(fixture_seed("b2"), b2());
    assert_eq!(fixture_seed("a2"), a2());
    assert_eq!(fixture_seed("s24").d, s24().d);
    assert_eq!(fixture_sequence("s24").unwrap(), green());
    assert_eq!(s24_fold().folded.skew, markov().skew);
    assert_eq!(s24_fold().folded.d, markov().d);
}

#[test]
fn stored_sequences_are_maximal_green() {
    for name in SEED_FIXTURES {
        if let Some(seq) = fixture_sequence(name) {
            assert!(
                is_maximal_green_sequence(&fixture_seed(name), &seq),
                "{name}"
            );
        }
    }
}

#[test]
fn action_fixtures() {
    let load = |f: &str, r: usize| {
        let v: serde_json::Value = serde_json::from_str(&fixture_text(f)).unwrap();
        GroupAction::from_json(r, &v).unwrap()
    };
    let a = load("actions/a3_swap13.json", 3);
    assert!(check_admissible(&a3(), a.generators).is_ok());
    let s = load("actions/s24_antipodal.json", 6);
    assert_eq!(s.elements.len(), 2);
    assert!(check_admissible(&s24(), s.generators).is_ok());
    let bad = load("actions/a2_swap12.json", 2);
    assert!(check_admissible(&a2(), bad.generators).is_err());
    assert!(load("actions/trivial.json", 4).is_trivial());
}

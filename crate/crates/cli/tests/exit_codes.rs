use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;

fn schubert(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn success_is_zero() {
    let (code, doc, _) = schubert(&["--datum", r#"{"type":"A","rank":1,"isogeny":"adj"}"#, "adm", "list", "--mu", "[1]"]);
    assert_eq!(code, 0);
    assert_eq!(doc["size"], 3);
}

#[test]
fn failed_verification_is_one() {
    let (code, doc, _) = schubert(&["picard", "certify-fano", "--word", r#"["s","s"]"#, "--q", "[1,2]"]);
    assert_eq!(code, 1);
    assert_eq!(doc["certified"], false);
    let (code, doc, _) = schubert(&[
        "--datum", r#"{"type":"A","rank":1,"isogeny":"adj"}"#,
        "coherence", "verify", "--mu", "[1]", "--charges", "1", "--perturb",
    ]);
    assert_eq!(code, 1);
    assert_eq!(doc["all_equal"], false);
}

#[test]
fn bad_input_is_two() {
    for args in [
        vec!["--datum", r#"{"type":"E","rank":2}"#, "root-datum", "show"],
        vec!["adm", "list", "--mu", "[-1]"],
        vec!["picard", "anticanonical", "--word", "[0,1]", "--q", "[1,3]"],
        vec!["weyl", "length", "--element", "not json"],
        vec!["no-such-command"],
    ] {
        let (code, doc, stderr) = schubert(&args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(doc, Value::Null);
        assert!(!stderr.is_empty());
    }
}

#[test]
fn jobs_flag_does_not_change_output() {
    let args = ["--datum", r#"{"type":"A","rank":2,"isogeny":"adj"}"#, "coherence", "verify", "--mu", "[1,0]"];
    let (_, default, _) = schubert(&args);
    let mut single = vec!["--jobs", "1"];
    single.extend(args);
    assert_eq!(schubert(&single).1, default);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charge_ranges_are_inclusive(a in 0i64..20, len in 0i64..10) {
        let b = a + len;
        let expected: Vec<i64> = (a..=b).collect();
        prop_assert_eq!(&schubert_cli::input::charges(&format!("{a}..{b}")).unwrap(), &expected);
        prop_assert_eq!(&schubert_cli::input::charges(&format!("{a}..={b}")).unwrap(), &expected);
    }

    #[test]
    fn symbolic_words_map_to_nodes(symbols in prop::collection::vec(0usize..3, 0..8)) {
        let names: Vec<String> = symbols.iter().map(|i| format!("\"x{i}\"")).collect();
        let word = schubert_cli::input::word(3, &format!("[{}]", names.join(","))).unwrap();
        for (i, j) in (0..symbols.len()).flat_map(|i| (0..symbols.len()).map(move |j| (i, j))) {
            prop_assert_eq!(symbols[i] == symbols[j], word[i] == word[j]);
        }
    }
}

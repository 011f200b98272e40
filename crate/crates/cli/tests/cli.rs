use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(" = ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn expand_then_evaluate_round_trips() {
    for z in ["10/27", "(5-6i)/(-2+i)^4", "-7+3i", "(13-11i)/(-2+i)^5"] {
        let o = hurwitz(&["hcf", "expand", z]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        let cf = field(&text, "expansion");
        let back = stdout(&hurwitz(&["cf", "eval", cf]));
        let value = field(&text, "value");
        assert_eq!(back.trim(), value, "{z}");
    }
    let text = stdout(&hurwitz(&["hcf", "expand", "10/27"]));
    assert_eq!(field(&text, "digits"), "3, -3, -3");
    assert!(text.contains("convergent 3 = (10)/(27)"));
}

#[test]
fn csv_convergent_table() {
    let text = stdout(&hurwitz(&["hcf", "expand", "10/27", "--format", "csv"]));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,digit,p,q");
    assert_eq!(rows.last().unwrap(), &"3,-3,10,27");
}

#[test]
fn folding_reports_the_increment() {
    let text = stdout(&hurwitz(&["cf", "fold", "[0; 4, 4, -5]", "--unit"]));
    assert_eq!(field(&text, "folded"), "[0; 4, 4, -4, -6, 4, 4]");
    assert_eq!(field(&text, "value"), "1538/6561");
    let o = hurwitz(&["cf", "fold", "[0; 2, 3]", "--x", "-2+i"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "folded"), "[0; 2, 3, -2+i, -3, -2]");
}

#[test]
fn validity_exit_codes() {
    let bad = hurwitz(&["validity", "check", "-1+2i,1+i"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(field(&stdout(&bad), "verdict"), "Invalid");
    let good = hurwitz(&["validity", "check", "2+2i,2+i,-3+4i"]);
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(field(&stdout(&good), "verdict"), "Valid");
    let typo = hurwitz(&["validity", "check", "1+i,x"]);
    assert_eq!(typo.status.code(), Some(2));
}

#[test]
fn certificate_for_minus_two_plus_i_to_the_fourth() {
    let o = hurwitz(&["zaremba", "certify", "--base", "-2+i", "--power", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "numerator"), "5-6i");
    assert!(!field(&text, "transcript").contains("FAIL"));
}

#[test]
fn emitted_records_verify_and_tampering_fails() {
    let dir = std::env::temp_dir().join(format!("hurwitz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("five.txt");
    let p = path.to_str().unwrap();
    let o = hurwitz(&[
        "zaremba", "certify", "--base", "5", "--power", "6", "--all", "--emit", p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let ok = hurwitz(&["zaremba", "verify", p]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).lines().count(), 6);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("eta_sq = 49", "eta_sq = 4", 1)).unwrap();
    assert_eq!(hurwitz(&["zaremba", "verify", p]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn oracle_search() {
    let text = stdout(&hurwitz(&["zaremba", "search", "--den", "8"]));
    assert_eq!(field(&text, "denominator"), "8");
    let k: u32 = field(&text, "k_sq").parse().unwrap();
    assert!(k <= 64);
    let capped = hurwitz(&["zaremba", "search", "--den", "1000", "--cap", "10"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn xi_table_is_all_checks_and_deterministic() {
    let args = [
        "xi", "--base", "-2+i", "--tau", "5/2", "--lambda", "1", "--stages", "5",
    ];
    let first = hurwitz(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("stage,v,u,"));
    assert!(rows[1].starts_with("1,610,122,b^122,3,"));
    for row in &rows[1..] {
        assert_eq!(row.matches("true").count(), 3, "{row}");
    }
    assert_eq!(stdout(&hurwitz(&args)), text);
    let w = hurwitz(&[
        "xi",
        "--base",
        "-3+i",
        "--tau",
        "5/2",
        "--stages",
        "3",
        "--variant",
        "w:11",
    ]);
    assert_eq!(w.status.code(), Some(0));
    let bad = hurwitz(&["xi", "--base", "-2+i", "--tau", "3/2", "--stages", "3"]);
    assert_eq!(bad.status.code(), Some(2));
    let narrow = hurwitz(&[
        "xi",
        "--base",
        "-1+i",
        "--tau",
        "5/2",
        "--stages",
        "2",
        "--variant",
        "w:1",
    ]);
    assert_eq!(narrow.status.code(), Some(2));
}

#[test]
fn encode_prints_most_significant_first() {
    assert_eq!(
        stdout(&hurwitz(&["encode", "--base", "-2+i", "5"])).trim(),
        "1310"
    );
    assert_eq!(
        hurwitz(&["encode", "--base", "3", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn prototype_explore_and_export() {
    let text = stdout(&hurwitz(&["prototype", "explore"]));
    assert_eq!(field(&text, "states"), "13");
    let export = stdout(&hurwitz(&["prototype", "explore", "--export"]));
    assert!(export.lines().all(|l| l.split(',').count() == 3));
    assert_eq!(
        export,
        stdout(&hurwitz(&["prototype", "explore", "--export"]))
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hurwitz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hurwitz(&["cf", "fold", "[0; 2]"]).status.code(), Some(2));
    assert_eq!(
        hurwitz(&["zaremba", "certify", "--base", "7", "--power", "2"])
            .status
            .code(),
        Some(2)
    );
}

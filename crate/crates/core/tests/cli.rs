use rote::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rote").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gen_prints_prefixes() {
    assert_eq!(run(&["gen", "G:2|3", "3"]), (0, "110\n".into(), String::new()));
    let (code, out, _) = run(&["gen", "D:|1", "12"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().len(), 12);
    let (code, out, _) = run(&["gen", "G:|1", "9", "--rote"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim().len(), 9);
    assert!(out.starts_with('0'));
}

#[test]
fn bad_input_exits_with_usage_code() {
    assert_eq!(run(&["gen", "X:|1", "5"]).0, 2);
    assert_eq!(run(&["gen", "G:|1", "5", "--v0", "2"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["rec", "G:|1", "0"]).0, 2);
}

#[test]
fn cr_reports_exact_value() {
    let (code, out, _) = run(&["cr", "G:1,4|2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains('3'), "{out}");
    let (code, out, _) = run(&["--json", "cr", "G:|1"]);
    assert_eq!(code, 0);
    let j: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(j["spec"], "G:|1");
}

#[test]
fn recurrence_table_is_csv() {
    let (code, out, _) = run(&["rec", "G:|1", "--table", "30"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("N,interval_lo,interval_hi,case_tag,L"));
    assert!(lines.count() >= 3);
    let (code, out, _) = run(&["rec", "G:|1", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("R_v(6) = "), "{out}");
}

#[test]
fn seven_halves_rejects_d_start() {
    assert_eq!(run(&["seven-halves", "D:|1"]).0, 3);
    assert_eq!(run(&["seven-halves", "G:|1"]).0, 0);
}

#[test]
fn verify_passes_on_fibonacci() {
    let (code, out, err) = run(&["verify", "G:1|1", "--depth", "6", "--prefix-len", "5000", "--max-root-len", "200"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn convergents_csv_has_rows() {
    let (code, out, _) = run(&["convergents", "G:|2", "5"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 6);
}

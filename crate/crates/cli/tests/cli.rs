use std::process::Command;

fn grolat(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_grolat")).args(args).output().expect("binary runs")
}

#[test]
fn list_suites_names_every_suite() {
    let out = grolat(&["list-suites"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for s in grolat_cli::REGISTRY {
        assert!(text.lines().any(|l| l.starts_with(s.name)), "{}", s.name);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(grolat(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(grolat(&["verify", "--suite", "pushforward", "--mode", "sample", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(grolat(&["verify"]).status.code(), Some(2));
    assert_eq!(grolat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn passing_suite_writes_report_and_exits_zero() {
    let dir = std::env::temp_dir().join(format!("grolat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = grolat(&["verify", "--suite", "pushforward", "--m-max", "2", "--n-max", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "pushforward");
    assert_eq!(v["summary"]["fail"], 0);
    let md = grolat(&["verify", "--suite", "pushforward", "--m-max", "2", "--n-max", "2", "--format", "markdown"]);
    assert_eq!(md.status.code(), Some(0));
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.contains(&format!("pass {} · fail 0", v["summary"]["pass"])));
    std::fs::remove_dir_all(&dir).ok();
}

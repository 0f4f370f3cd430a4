use gmdeg::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use gmdeg::report::{Report, Status};
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gmdeg(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gmdeg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn report(o: &Output) -> Report {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("not a report ({e}):\n{}", o.stdout))
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, text: &str) {
    let value: Value = serde_json::from_str(text).unwrap();
    let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

#[test]
fn every_cheap_command_passes_and_matches_the_schema() {
    let v = schema();
    let diagram = write_temp("o\no o\n* 1 o\n* * * o\n* * * * *\n");
    let path = diagram.path().to_str().unwrap();
    for args in [
        vec!["chow", "verify"],
        vec!["gin", "validate", path],
        vec!["gin", "invariants", path],
        vec!["gin", "enumerate", "--degree", "6"],
        vec!["gin", "theorem-sextic"],
        vec!["lattice", "sextic"],
        vec!["lattice", "splittings"],
        vec!["lattice", "splittings", "--genus-bound", "5"],
        vec!["config", "verify"],
        vec!["config", "exclude"],
        vec!["config", "exclude", "--lines", "9"],
        vec!["fibration", "contact"],
        vec![
            "fibration",
            "strata",
            "--prime",
            "101",
            "--seed",
            "3",
            "--trials",
            "5000",
        ],
        vec![
            "fibration",
            "discriminant",
            "--prime",
            "101",
            "--seed",
            "3",
            "--points",
            "500",
        ],
    ] {
        let o = gmdeg(&args);
        assert_eq!(o.code, EXIT_PASS, "{args:?}\n{}", o.stderr);
        assert_valid(&v, &o.stdout);
        let r = report(&o);
        assert_eq!(r.status, Status::Pass);
        assert!(!r.records.is_empty(), "{args:?}");
        assert!(o.stderr.contains("checks passed"));
    }
}

#[test]
fn report_round_trips_through_parse_and_print() {
    let o = gmdeg(&["config", "exclude"]);
    let r = report(&o);
    assert_eq!(format!("{}\n", r.to_json()), o.stdout);
}

#[test]
fn enumerate_degree_six_lists_four_arrangements() {
    let r = report(&gmdeg(&["gin", "enumerate", "--degree", "6"]));
    let parts = &r.data["arrangements"];
    assert_eq!(parts, &serde_json::json!([[6], [5, 1], [4, 2], [3, 2, 1]]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["fibration", "strata", "--prime", "101"],
        vec!["fibration", "discriminant"],
        vec!["chow", "verify", "--bogus"],
        vec!["nonsense"],
        vec!["config", "exclude", "--lines", "4"],
        vec!["gin", "enumerate", "--degree", "0"],
        vec!["gin", "validate", "/nonexistent/diagram.txt"],
        vec!["fibration", "strata", "--prime", "100", "--seed", "1"],
    ] {
        let o = gmdeg(&args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(gmdeg(&["--help"]).code, EXIT_PASS);
    let v = gmdeg(&["--version"]);
    assert_eq!(v.code, EXIT_PASS);
    assert!(v.stdout.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn failing_check_exits_one_with_a_report() {
    let bad = write_temp("o\no *\n* * *\n");
    let o = gmdeg(&["gin", "validate", bad.path().to_str().unwrap()]);
    assert_eq!(o.code, EXIT_FAIL);
    assert_valid(&schema(), &o.stdout);
    let r = report(&o);
    assert_eq!(r.status, Status::Fail);
    assert!(o.stderr.contains("FAIL"));
    assert_eq!(
        r.data["violation"]["cells"],
        serde_json::json!([[1, 0], [0, 1]])
    );
}

#[test]
fn quiet_and_out() {
    let q = gmdeg(&["--quiet", "lattice", "sextic"]);
    assert_eq!(q.code, EXIT_PASS);
    assert!(q.stdout.is_empty() && q.stderr.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let o = gmdeg(&["lattice", "sextic", "--out", file.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&file).unwrap();
    assert_valid(&schema(), &text);
}

#[test]
fn paper_passes_and_is_deterministic() {
    let cfg = write_temp("[paper]\nprime = 32003\nseed = 1\ntrials = 20000\nexact = true\n");
    let args = ["paper", "--config", cfg.path().to_str().unwrap()];
    let a = gmdeg(&args);
    assert_eq!(a.code, EXIT_PASS, "{}", a.stderr);
    assert_valid(&schema(), &a.stdout);
    let b = gmdeg(&args);
    assert_eq!(a.stdout, b.stdout);

    let r = report(&a);
    for prefix in [
        "chow verify/",
        "gin theorem-sextic/",
        "lattice sextic/",
        "lattice splittings/",
        "config verify/",
        "config exclude/",
        "fibration contact/",
        "fibration strata/",
        "wiring/",
    ] {
        assert!(
            r.records.iter().any(|x| x.label.starts_with(prefix)),
            "{prefix}"
        );
    }
    assert_eq!(r.inputs["trials"], 20000);
}

#[test]
fn malformed_settings_are_usage_errors() {
    let cfg = write_temp("[paper]\nprim = 7\n");
    let o = gmdeg(&["paper", "--config", cfg.path().to_str().unwrap()]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("settings"));
}

#[test]
fn shipped_settings_file_parses() {
    let text = include_str!("../../../gmdeg.toml");
    let s = gmdeg::cli::Settings::parse(text).unwrap();
    assert_eq!(s.paper, gmdeg::cli::PaperSettings::default());
}

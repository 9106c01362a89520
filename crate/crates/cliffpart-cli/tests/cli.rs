use std::io::Write;
use std::process::Command;

use cliffpart_cli::report::{from_json, to_json, RunReport};
use cliffpart_cli::{run, EXIT_CAPACITY, EXIT_FAILURE, EXIT_PASS, EXIT_USAGE};

fn args(line: &str) -> Vec<String> {
    std::iter::once("cliffpart").chain(line.split_whitespace()).map(String::from).collect()
}

fn report(line: &str) -> RunReport {
    let out = run(&args(line), None);
    from_json(&out.stdout).unwrap_or_else(|e| panic!("{line}: {e}\n{}", out.stdout))
}

#[test]
fn every_report_kind_round_trips_through_json() {
    for line in [
        "partition --n 2 --p 2 --q 2 --a 0.3 --b 0.2 --method all",
        "partition --n 3 --p 2 --q 2 --a -0.4 --b 0.1 --method all --timings",
        "trace --n 3 --p 2 g1 gb1 g1 gb1 g1 gb1",
        "verify --seed 3",
        "partition --n 4 --p 3 --q 3 --method multisum",
    ] {
        let r = report(line);
        let text = to_json(&r);
        assert_eq!(from_json(&text).unwrap(), r, "{line}");
        assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }
}

#[test]
fn same_seed_gives_identical_bytes() {
    for line in ["verify --seed 7", "partition --method all --n 2 --p 3 --q 2", "verify --seed 7 --format csv"] {
        let first = run(&args(line), None);
        let second = run(&args(line), None);
        assert_eq!(first, second, "{line}");
    }
    assert_ne!(run(&args("verify --seed 7"), None).stdout, run(&args("verify --seed 8"), None).stdout);
}

#[test]
fn exit_codes_follow_the_contract() {
    let code = |line: &str| run(&args(line), None).code;
    assert_eq!(code("partition --n 2 --p 2 --q 2 --a 0.3 --b 0.2 --method all"), EXIT_PASS);
    assert_eq!(code("partition --n 4 --p 3 --q 3 --method multisum"), EXIT_CAPACITY);
    assert_eq!(code("partition --n 2 --method sideways"), EXIT_USAGE);
    assert_eq!(code("partition --n 1"), EXIT_USAGE);
    assert_eq!(code("partition --frobnicate"), EXIT_USAGE);
    assert_eq!(code("trace --n 3 --p 1 gb4"), EXIT_USAGE);
    assert_eq!(code("verify --inject-fault 0,3"), EXIT_FAILURE);
    assert_eq!(code("--help"), EXIT_PASS);
}

#[test]
fn zero_couplings_count_states() {
    let RunReport::Partition(r) = report("partition --n 3 --p 2 --q 3 --a 0 --b 0 --method brute") else {
        panic!("not a partition report");
    };
    assert_eq!(r.results[0].z_re, 729.0);
}

#[test]
fn all_skips_routes_that_cannot_run() {
    let RunReport::Partition(r) = report("partition --n 3 --p 2 --q 3 --method all") else {
        panic!("not a partition report");
    };
    let skipped: Vec<&str> = r.skipped.iter().map(|s| s.method.as_str()).collect();
    assert_eq!(skipped, ["multisum", "closed-form"]);
    assert!(r.passed);
}

#[test]
fn trace_examples() {
    for (line, phase) in [
        ("trace --n 2 --p 1 g1 g1", "w^0"),
        ("trace --n 3 --p 2 g1 g2 g1", "0"),
        ("trace --n 3 --p 1 g1 g1 g1", "w^0"),
    ] {
        let RunReport::Trace(r) = report(line) else { panic!("not a trace report") };
        assert!(r.agree, "{line}");
        assert_eq!(r.evaluations[0].phase.as_deref(), Some(phase), "{line}");
        assert_eq!(r.evaluations[1].phase.as_deref(), Some(phase), "{line}");
    }
}

#[test]
fn injected_fault_names_the_pair() {
    let RunReport::Verify(r) = report("verify --inject-fault 0,3") else { panic!("not a verify report") };
    let suite = r.suites.iter().find(|s| s.criterion == 8).unwrap();
    assert!(!suite.passed);
    assert!(suite.failures.iter().any(|f| f.contains("between g1 and gb2")), "{:?}", suite.failures);
    assert!(r.suites.iter().filter(|s| s.criterion != 8).all(|s| s.passed));
}

#[test]
fn guard_environment_and_flags() {
    let a = args("partition --n 2 --p 2 --q 2 --method brute");
    assert_eq!(run(&a, Some("brute=3")).code, EXIT_CAPACITY);
    assert_eq!(run(&a, Some("brute=4")).code, EXIT_PASS);
    assert_eq!(run(&a, Some("brute=x")).code, EXIT_USAGE);
    let flagged = args("partition --n 2 --p 2 --q 2 --method brute --brute-bits 4");
    assert_eq!(run(&flagged, Some("brute=3")).code, EXIT_PASS);
}

#[test]
fn config_file_supplies_defaults_that_flags_override() {
    let dir = std::env::temp_dir().join(format!("cliffpart-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.toml");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "n = 3\np = 2\nq = 3\na = 0.0\nb = 0.0\nmethod = \"brute\"\nformat = \"csv\"").unwrap();
    let out = run(&args(&format!("partition --config {}", path.display())), None);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("brute,3,2,3,"), "{}", out.stdout);
    assert!(out.stdout.contains("7.2900000000000000e2"));
    let out = run(&args(&format!("partition --config {} --q 2", path.display())), None);
    assert!(out.stdout.contains("brute,3,2,2,"));
    std::fs::write(&path, "colour = 3\n").unwrap();
    assert_eq!(run(&args(&format!("partition --config {}", path.display())), None).code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn csv_has_the_documented_columns() {
    let out = run(&args("partition --method all --format csv --timings"), None);
    let mut rows = csv::Reader::from_reader(out.stdout.as_bytes());
    let header: Vec<String> = rows.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["method", "n", "p", "q", "a", "b", "Z_re", "Z_im", "wall_ms", "terms"]);
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 5);
    assert!(records.iter().all(|r| r[8].parse::<f64>().is_ok()));
}

#[test]
fn binary_reads_the_guard_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_cliffpart"))
        .args(["partition", "--n", "2", "--p", "2", "--q", "2", "--method", "brute"])
        .env("CLIFFPART_GUARD_BITS", "brute=2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_CAPACITY));
    assert!(String::from_utf8_lossy(&out.stderr).contains("guard"));
}

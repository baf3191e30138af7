use std::path::PathBuf;
use std::process::Command as Process;

use isect_alg::{
    main_with_args, parse_args, run, Command, Format, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_OK,
    EXIT_USAGE,
};
use serde_json::Value;

fn cli(args: &str) -> isect_alg::Outcome {
    main_with_args(std::iter::once("isect-alg").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(&format!("{args} --format json"));
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

fn job_file(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn parses_flags() {
    let job = parse_args(["isect-alg", "generators", "--a", "5", "--b", "2"]).unwrap();
    assert_eq!(
        (job.command, job.a, job.b),
        (Command::Generators, vec![5], vec![2])
    );
    assert_eq!(job.format, Format::Text);
    assert_eq!(job.options.rs_bound, 25);
    assert_eq!(job.options.multiplier_bound, 4);
    assert_eq!(job.options.degree_cap, 10);

    let job = parse_args(["isect-alg", "bound", "--a", "5", "--b", "2"]).unwrap();
    assert_eq!(job.command, Command::Bound);

    let job = parse_args(["isect-alg", "fan", "--a", "1,3", "--b", "3,2"]).unwrap();
    // fan order puts the larger ratio first; the input order is kept in a, b
    assert_eq!(job.pair.a(), &[3, 1]);
    assert_eq!(job.a, vec![1, 3]);
}

#[test]
fn usage_errors_name_the_flag() {
    for (args, flag) in [
        ("generators --b 2", "--a"),
        ("generators --a 5", "--b"),
        ("generators --a -1 --b 2", "--a"),
        ("generators --a 1 --b x", "--b"),
        ("generators --a 1,2 --b 1", "--a/--b"),
        ("bound --a 5,1 --b 2,1", "--a"),
        ("fanlinear-check --a 1 --b 1", "--fan-linear"),
        (
            "fanlinear-check --a 1 --b 1 --fan-linear 1,2;3",
            "--fan-linear",
        ),
        (
            "fanlinear-check --a 1 --b 1 --fan-linear 1/0,2;2,1",
            "--fan-linear",
        ),
        ("verify --a 1 --b 1 --box 0", "--box"),
        ("generators --a 1 --b 1 --input x.json", "--input"),
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}");
        assert!(out.stderr.contains(flag), "{args}: {}", out.stderr);
    }
    assert_eq!(cli("nonsense --a 1 --b 1").code, EXIT_USAGE);
    assert_eq!(cli("--help").code, EXIT_OK);
}

#[test]
fn generators_text() {
    let out = cli("generators --a 5 --b 2");
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        "x1^2*v\nx1^5*u\nx1^5*u*v\nx1^5*u*v^2\nx1^6*u*v^3\nx1^10*u^2*v^5\nx1\n"
    );
}

#[test]
fn json_fields() {
    let v = json("generators --a 5 --b 2");
    assert_eq!(v["generators"].as_array().unwrap().len(), 7);
    assert!(v["generators"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([6, 1, 3])));

    let v = json("hilbert-basis --a 5 --b 2");
    assert_eq!(
        v["hilbert_bases"],
        serde_json::json!([[[0, 1], [1, 3], [2, 5]], [[1, 0], [1, 1], [1, 2], [2, 5]]])
    );

    assert_eq!(
        json("fund --a 5 --b 2")["fund"].as_array().unwrap().len(),
        7
    );
    assert_eq!(json("cf --a 5 --b 2")["cf"].as_array().unwrap().len(), 4);
    assert_eq!(json("count --a 5 --b 2")["count"], 4);
    assert_eq!(json("bound --a 5 --b 2")["bound"], 5);
    assert_eq!(json("dimension --a 3,2 --b 1,3")["dimension"], 4);
    assert_eq!(json("gorenstein --a 1 --b 1")["gorenstein"], true);
    assert_eq!(json("gorenstein --a 5 --b 2")["gorenstein"], false);
    assert_eq!(
        json("canonical --a 5 --b 2")["canonical_generators"],
        serde_json::json!([[6, 1, 1], [6, 1, 2], [7, 1, 3], [11, 2, 5]])
    );
    let fan = json("fan --a 5 --b 2");
    assert_eq!(fan["fan"]["cones"].as_array().unwrap().len(), 2);
}

#[test]
fn hilbert_series_output() {
    let v = json("hilbert-series --a 5 --b 2 --cap 8");
    let factors: Vec<Value> = v["denominator_factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["exponent"].clone())
        .collect();
    assert_eq!(
        factors,
        serde_json::from_str::<Vec<Value>>("[[0,0,1],[0,1,2],[2,5,10],[1,0,5]]").unwrap()
    );
    assert_eq!(v["degree_cap"], 8);
    assert_eq!(
        v["numerator_coefficients"][0]["exponent"],
        serde_json::json!([0, 0, 0])
    );
    let text = cli("hilbert-series --a 5 --b 2 --cap 8").stdout;
    assert!(text.contains("(1 - r^2*s^5*m1^10)"), "{text}");
}

#[test]
fn domain_errors_exit_three() {
    let out = cli("canonical --a 2,1 --b 4,2");
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stderr.contains("DegenerateInput"), "{}", out.stderr);
    let v = json("canonical --a 2,1 --b 4,2");
    assert_eq!(v["error"]["module"], "diophantine");
    assert_eq!(v["error"]["name"], "DegenerateInput");
    assert_eq!(cli("bound --a 6 --b 3").code, EXIT_DOMAIN);
    assert_eq!(cli("verify --a 5 --b 2 --box 3").code, EXIT_DOMAIN);
}

#[test]
fn checks_exit_four_on_failure() {
    assert_eq!(
        cli("fanlinear-check --a 1 --b 1 --fan-linear 1,2;2,1 --box 10").code,
        EXIT_OK
    );
    let out = cli("fanlinear-check --a 1 --b 1 --fan-linear 1,2;1,1 --box 10");
    assert_eq!(out.code, EXIT_CHECK_FAILED);
    assert!(out.stdout.contains("disagree"), "{}", out.stdout);
    assert_eq!(
        cli("normality --a 5 --b 2 --box 12 --multiplier 4").code,
        EXIT_OK
    );
    assert_eq!(
        cli("normality --a 1 --b 1 --fan-linear 1,2;2,1 --box 10").code,
        EXIT_OK
    );
}

#[test]
fn verify_agrees() {
    let out = cli("verify --a 5 --b 2 --box 25");
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v = json("verify --a 3,2 --b 1,3");
    for (k, verdict) in v["verified"].as_object().unwrap() {
        assert_eq!(verdict, &Value::Bool(true), "{k}");
    }
    // degenerate input skips the closed-form checks
    let v = json("verify --a 2,1 --b 4,2");
    assert_eq!(v["verified"]["minimal_positive"], Value::Null);
    assert_eq!(v["verified"]["hilbert_bases"], true);
}

#[test]
fn input_file() {
    let path = job_file(
        "job.json",
        r#"{"command": "fanlinear-check", "a": [1], "b": [1],
            "options": {"rs_bound": 10, "fan_linear": [[1, 2], ["2", "1/1"]]}}"#,
    );
    let job = parse_args(["isect-alg", "--input", path.to_str().unwrap()]).unwrap();
    assert_eq!(job.command, Command::FanlinearCheck);
    assert_eq!(job.options.rs_bound, 10);
    assert_eq!(run(&job).code, EXIT_OK);

    let bad = job_file(
        "bad.json",
        r#"{"command": "count", "a": [1], "b": [1], "extra": 1}"#,
    );
    let out = cli(&format!("--input {}", bad.display()));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--input"));

    let negative = job_file("neg.json", r#"{"command": "count", "a": [-1], "b": [1]}"#);
    let out = cli(&format!("--input {}", negative.display()));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("input field a"), "{}", out.stderr);
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        "fan --a 3,2 --b 1,3",
        "hilbert-basis --a 3,2 --b 1,3",
        "generators --a 6,1 --b 1,5",
        "hilbert-series --a 5 --b 2 --cap 12",
        "canonical --a 5 --b 2",
        "verify --a 5 --b 2",
        "canonical --a 2,1 --b 4,2",
    ] {
        let out = cli(&format!("{args} --format json"));
        let value: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(isect_alg::to_canonical_json(&value), out.stdout, "{args}");
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let run_with = |threads: &str| {
        let out = Process::new(env!("CARGO_BIN_EXE_isect-alg"))
            .args([
                "hilbert-series",
                "--a",
                "3,2",
                "--b",
                "1,3",
                "--cap",
                "9",
                "--format",
                "json",
            ])
            .env("ISECT_ALG_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let one = run_with("1");
    assert_eq!(one, run_with("4"));
    assert_eq!(one, run_with("4"));

    let bad = Process::new(env!("CARGO_BIN_EXE_isect-alg"))
        .args(["count", "--a", "5", "--b", "2"])
        .env("ISECT_ALG_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| {
        Process::new(env!("CARGO_BIN_EXE_isect-alg"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["count", "--a", "5", "--b", "2"]), Some(EXIT_OK));
    assert_eq!(status(&["count", "--a", "5"]), Some(EXIT_USAGE));
    assert_eq!(
        status(&["count", "--a", "2,1", "--b", "4,2"]),
        Some(EXIT_DOMAIN)
    );
}

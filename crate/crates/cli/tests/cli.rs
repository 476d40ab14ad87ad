use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn nonstoch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonstoch"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn info_prints_six_decimals() {
    let out = nonstoch(&["info", "--world", &fixture("world_xy.json"), "--vars", "X,Y"]);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains("\"bits\": 1.000000"), "{text}");
    assert_eq!(json(&out)["cells"], 2);
}

#[test]
fn joined_variables() {
    let out = nonstoch(&["info", "--world", &fixture("world_nc.json"), "--vars", "X1+X2,Y"]);
    assert_eq!(json(&out)["cells"], 4);
    let out = nonstoch(&["info", "--world", &fixture("world_nc.json"), "--vars", "X1,X2+Y"]);
    assert_eq!(json(&out)["cells"], 2);
}

#[test]
fn partition_is_an_array_of_cells() {
    let out = nonstoch(&["partition", "--world", &fixture("world_xy.json"), "--vars", "X,Y"]);
    let v = json(&out);
    assert_eq!(v, serde_json::json!([[["0"], ["1"]], [["2"], ["3"]]]));
}

#[test]
fn nc_and_conditional_info() {
    let nc = nonstoch(&["nc-info", "--world", &fixture("world_nc.json"), "--vars", "X1,X2,Y"]);
    assert_eq!(json(&nc)["cells"], 4);
    let ci = nonstoch(&[
        "cond-info",
        "--world",
        &fixture("world_cond.json"),
        "--vars",
        "X,Y",
        "--given",
        "W",
    ]);
    assert_eq!(json(&ci)["cells"], 2);
}

#[test]
fn adder_region_table() {
    let out = nonstoch(&["region", "--channel", &fixture("adder.json"), "--n", "1"]);
    let v = json(&out);
    let maximal: Vec<(u64, u64, u64)> = v["maximal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["mu0"].as_u64().unwrap(),
                c["mu1"].as_u64().unwrap(),
                c["mu2"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(maximal, vec![(3, 1, 1), (1, 2, 1), (1, 1, 2)]);
    let row = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["mu1"] == 2 && r["mu2"] == 2)
        .unwrap();
    assert_eq!(row["achievable"], false);
    assert!(row["witness"].is_null());
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
}

#[test]
fn csv_region() {
    let out = nonstoch(&[
        "oracle-region",
        "--channel",
        &fixture("adder.json"),
        "--n",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("mu0,mu1,mu2,achievable,witness"));
    assert!(text.contains("\n3,1,1,true,"));
    // Only five triples fit three outputs, and all of them are achievable.
    assert_eq!(text.lines().count(), 6);
    assert!(!text.contains("false"));

    let out = nonstoch(&[
        "region",
        "--channel",
        &fixture("adder.json"),
        "--n",
        "1",
        "--format",
        "csv",
    ]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("\n1,2,2,false,\n"));
}

#[test]
fn csv_is_refused_for_scalar_reports() {
    let out = nonstoch(&[
        "info",
        "--world",
        &fixture("world_xy.json"),
        "--vars",
        "X,Y",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn injective_adder_code_has_a_certificate() {
    let out = nonstoch(&[
        "verify",
        "--channel",
        &fixture("adder.json"),
        "--code",
        &fixture("code_adder_injective.json"),
    ]);
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert_eq!(v["certificate"]["y"], serde_json::json!(["1"]));
    assert_eq!(
        v["certificate"]["messages"],
        serde_json::json!({"mu0": 1, "mu1": 1, "mu2": 2})
    );
}

#[test]
fn synthesized_codes_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (channel, structure, mu) in [
        ("adder.json", "structure_adder.json", (3, 1, 1)),
        ("pentagon.json", "structure_pentagon.json", (1, 5, 1)),
    ] {
        let path = dir.path().join("code.json");
        let out = nonstoch(&[
            "synthesize",
            "--channel",
            &fixture(channel),
            "--structure",
            &fixture(structure),
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let code: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(code["mu"], serde_json::json!({"mu0": mu.0, "mu1": mu.1, "mu2": mu.2}));
        let verdict = nonstoch(&[
            "verify",
            "--channel",
            &fixture(channel),
            "--code",
            path.to_str().unwrap(),
        ]);
        assert_eq!(json(&verdict), serde_json::json!({"ok": true}));
    }
}

#[test]
fn region_witnesses_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = nonstoch(&["region", "--channel", &fixture("xor.json"), "--n", "2"]);
    let v = json(&out);
    for (corner, structure) in v["maximal"]
        .as_array()
        .unwrap()
        .iter()
        .zip(v["witnesses"].as_array().unwrap())
    {
        let path = dir.path().join("structure.json");
        std::fs::write(&path, structure.to_string()).unwrap();
        let code = json(&nonstoch(&[
            "synthesize",
            "--channel",
            &fixture("xor.json"),
            "--structure",
            path.to_str().unwrap(),
        ]));
        for k in ["mu0", "mu1", "mu2"] {
            assert_eq!(code["mu"][k], corner[k]);
        }
    }
}

#[test]
fn oracle_codes_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&nonstoch(&[
        "oracle-region",
        "--channel",
        &fixture("and.json"),
        "--n",
        "2",
    ]));
    let codes = v["codes"].as_array().unwrap();
    assert!(!codes.is_empty());
    for code in codes {
        let path = dir.path().join("code.json");
        std::fs::write(&path, code.to_string()).unwrap();
        let verdict = json(&nonstoch(&[
            "verify",
            "--channel",
            &fixture("and.json"),
            "--code",
            path.to_str().unwrap(),
        ]));
        assert_eq!(verdict["ok"], true);
    }
}

#[test]
fn single_user_pentagon() {
    let v = json(&nonstoch(&[
        "single-user",
        "--channel",
        &fixture("pentagon.json"),
        "--n",
        "2",
    ]));
    assert_eq!(v["cells"], 5);
    assert_eq!(v["independence_number"], 5);
    let adder = nonstoch(&["single-user", "--channel", &fixture("adder.json"), "--n", "1"]);
    assert_eq!(adder.status.code(), Some(1));
}

#[test]
fn exit_statuses() {
    let missing = nonstoch(&["region", "--channel", &fixture("missing_transition.json"), "--n", "1"]);
    assert_eq!(missing.status.code(), Some(1));
    let err = String::from_utf8(missing.stderr).unwrap();
    assert!(err.contains("x1=1, x2=0, w=0"), "{err}");

    assert_eq!(
        nonstoch(&["region", "--channel", &fixture("adder.json"), "--n", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(nonstoch(&["region", "--n", "1"]).status.code(), Some(1));
    assert_eq!(
        nonstoch(&["region", "--channel", &fixture("adder.json"), "--n", "x"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(nonstoch(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        nonstoch(&["info", "--world", "/nonexistent.json", "--vars", "X,Y"])
            .status
            .code(),
        Some(1)
    );

    let budget = nonstoch(&[
        "region",
        "--channel",
        &fixture("adder.json"),
        "--n",
        "2",
        "--strategy",
        "exhaustive",
    ]);
    assert_eq!(budget.status.code(), Some(2));
    let oracle = nonstoch(&[
        "oracle-region",
        "--channel",
        &fixture("pentagon.json"),
        "--n",
        "2",
        "--budget",
        "100",
    ]);
    assert_eq!(oracle.status.code(), Some(2));
    assert_eq!(nonstoch(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let args = ["region", "--channel", &fixture("and.json"), "--n", "1"];
    let stdout = nonstoch(&args).stdout;
    let mut with_file: Vec<&str> = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let out = nonstoch(&with_file);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

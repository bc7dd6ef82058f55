use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use slide_screen_cli::OPERATIONS;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_slide-screen"))
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = exec(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    let out = exec(args);
    if !out.status.success() {
        assert!(
            !out.stderr.is_empty(),
            "{args:?}: failure without a diagnostic"
        );
        assert!(out.stdout.is_empty(), "{args:?}: failure wrote to stdout");
    }
    out.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, body: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, body.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn classes(v: &Value) -> BTreeSet<(i64, i64)> {
    v["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c[0].as_i64().unwrap(), c[1].as_i64().unwrap()))
        .collect()
}

#[test]
fn figure_eight_bound_three_example() {
    let v = ok_json(&["screen", "brute", "--monodromy", "figure8", "--bound", "3"]);
    let got = classes(&v);
    for c in [(1, 0), (1, 1), (2, 1), (3, 2), (1, -1), (1, -2), (2, -3)] {
        assert!(got.contains(&c), "missing {c:?} in {got:?}");
    }
    assert_eq!(v["schema"], json!(1));
    assert_eq!(v["bound"], json!(3));
    assert_eq!(v["constraint"], json!({ "lower": -1, "upper": 1 }));
    assert_eq!(v["values"].as_array().unwrap().len(), got.len());
}

#[test]
fn unlink_is_admissible_example() {
    let dir = TempDir::new().unwrap();
    let link = write(
        dir.path(),
        "link.json",
        &json!({ "n": 2, "matrix": [[0, 0], [0, 0]] }),
    );
    let v = ok_json(&["link", "check", "--link-file", &link]);
    assert_eq!(v["gpr_admissible"], json!(true));
    let h = ok_json(&["link", "homology", "--link-file", &link]);
    assert_eq!(h["free_rank"], json!(2));
    assert_eq!(h["torsion"], json!([]));
}

#[test]
fn trefoil_bound_hundred_example() {
    let v = ok_json(&[
        "screen",
        "brute",
        "--monodromy",
        "trefoil",
        "--bound",
        "100",
    ]);
    assert_eq!(v["count"], json!(3));
    assert_eq!(classes(&v).len(), 3);
    assert!(v.get("note").is_none());
    let p = ok_json(&[
        "screen",
        "brute",
        "--monodromy",
        "trefoil",
        "--bound",
        "100",
        "--paper-form",
    ]);
    assert!(p["note"].is_string());
    assert_eq!(p["form"], json!("m^2 + mn + n^2"));
}

#[test]
fn output_is_identical_across_worker_counts() {
    let args = [
        "screen",
        "brute",
        "--monodromy",
        "figure8",
        "--bound",
        "40",
        "--lower",
        "-5",
        "--upper",
        "5",
    ];
    let reference = bin()
        .args(args)
        .env("SLIDE_SCREEN_THREADS", "1")
        .output()
        .unwrap();
    assert!(reference.status.success());
    for threads in ["2", "3", "8"] {
        let out = bin()
            .args(args)
            .env("SLIDE_SCREEN_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(
            out.stdout, reference.stdout,
            "differs with {threads} workers"
        );
    }
    let again = bin()
        .args(args)
        .env("SLIDE_SCREEN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(again.stdout, reference.stdout);
    let bad = bin()
        .args(args)
        .env("SLIDE_SCREEN_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes_distinguish_domain_from_malformed() {
    let dir = TempDir::new().unwrap();
    let asym = write(
        dir.path(),
        "asym.json",
        &json!({ "n": 2, "matrix": [[0, 1], [2, 0]] }),
    );
    let ragged = write(
        dir.path(),
        "ragged.json",
        &json!({ "n": 2, "matrix": [[0, 1], [1]] }),
    );
    let wrong_n = write(
        dir.path(),
        "n.json",
        &json!({ "n": 3, "matrix": [[0, 1], [1, 0]] }),
    );
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{not json").unwrap();
    let garbage = garbage.to_str().unwrap();
    let not_sp = write(
        dir.path(),
        "h.json",
        &json!({ "genus": 1, "matrix": [[2, 0], [0, 1]] }),
    );
    let link = write(
        dir.path(),
        "link.json",
        &json!({ "n": 2, "matrix": [[1, 3], [3, 2]] }),
    );

    assert_eq!(code(&["link", "check", "--link-file", &asym]), 1);
    assert_eq!(code(&["link", "check", "--link-file", &ragged]), 2);
    assert_eq!(code(&["link", "check", "--link-file", &wrong_n]), 2);
    assert_eq!(code(&["link", "check", "--link-file", garbage]), 2);
    assert_eq!(
        code(&["link", "check", "--link-file", "/nonexistent/link.json"]),
        2
    );
    assert_eq!(code(&["monodromy", "show", "--monodromy-file", &not_sp]), 1);
    assert_eq!(
        code(&[
            "link",
            "slide",
            "--link-file",
            &link,
            "--slider",
            "0",
            "--over",
            "0"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "link",
            "slide",
            "--link-file",
            &link,
            "--slider",
            "0",
            "--over",
            "5"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "link",
            "slide",
            "--link-file",
            &link,
            "--slider",
            "0",
            "--over",
            "1",
            "--sign",
            "2"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "screen",
            "brute",
            "--monodromy",
            "figure8",
            "--bound",
            "2",
            "--lower",
            "3",
            "--upper",
            "1"
        ]),
        1
    );
    assert_eq!(
        code(&["screen", "brute", "--monodromy", "figure8", "--bound", "0"]),
        1
    );
    assert_eq!(
        code(&["screen", "brute", "--monodromy", "figure8", "--bound", "x"]),
        2
    );
    assert_eq!(
        code(&[
            "screen",
            "brute",
            "--monodromy-file",
            &not_sp,
            "--bound",
            "2",
            "--paper-form"
        ]),
        1
    );
    assert_eq!(code(&["screen", "frobnicate"]), 2);
    assert_eq!(
        code(&[
            "fiber",
            "compress",
            "--genus",
            "2",
            "--separating",
            "--split",
            "1,2"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "fiber",
            "compress",
            "--genus",
            "2",
            "--separating",
            "--split",
            "1"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "fiber",
            "classify",
            "--genus",
            "2",
            "--separating",
            "--split",
            "1,1"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "fiber",
            "classify",
            "--genus",
            "2",
            "--orientation",
            "sideways"
        ]),
        2
    );
}

#[test]
fn slide_and_sequence_round_trip() {
    let dir = TempDir::new().unwrap();
    let link = write(
        dir.path(),
        "link.json",
        &json!({ "n": 2, "matrix": [[1, 3], [3, 2]] }),
    );
    let v = ok_json(&[
        "link",
        "slide",
        "--link-file",
        &link,
        "--slider",
        "0",
        "--over",
        "1",
    ]);
    assert_eq!(v["after"], json!({ "n": 2, "matrix": [[9, 5], [5, 2]] }));

    let after = write(dir.path(), "after.json", &v["after"]);
    let back = ok_json(&[
        "link",
        "slide",
        "--link-file",
        &after,
        "--slider",
        "0",
        "--over",
        "1",
        "--sign",
        "-1",
    ]);
    assert_eq!(back["after"]["matrix"], json!([[1, 3], [3, 2]]));

    let seq = json!({ "moves": [
        { "slider": 0, "over": 1, "sign": 1 },
        { "slider": 1, "over": 0, "sign": -1 },
    ]});
    let seq_path = write(dir.path(), "seq.json", &seq);
    let dual = ok_json(&["seq", "dual", "--seq-file", &seq_path]);
    assert_eq!(
        dual["moves"],
        json!([{ "slider": 0, "over": 1, "sign": -1 }, { "slider": 1, "over": 0, "sign": 1 }])
    );
    let dual_path = write(dir.path(), "dual.json", &json!({ "moves": dual["moves"] }));
    let twice = ok_json(&["seq", "dual", "--seq-file", &dual_path]);
    assert_eq!(twice["moves"], seq["moves"]);

    let applied = ok_json(&[
        "link",
        "slide",
        "--link-file",
        &link,
        "--seq-file",
        &seq_path,
    ]);
    assert_eq!(applied["moves"], seq["moves"]);
}

#[test]
fn monodromy_show_and_sum() {
    let v = ok_json(&[
        "monodromy",
        "show",
        "--monodromy",
        "figure8",
        "--act",
        "1,0",
    ]);
    assert_eq!(v["matrix"], json!([[2, 1], [1, 1]]));
    assert_eq!(v["symplectic"], json!(true));
    assert_eq!(v["form"], json!("-m^2 + mn + n^2"));
    assert_eq!(v["act"]["image"], json!([2, 1]));

    let dir = TempDir::new().unwrap();
    let file = write(
        dir.path(),
        "h.json",
        &json!({ "genus": 1, "matrix": [[1, 1], [0, 1]] }),
    );
    let sum = ok_json(&[
        "monodromy",
        "sum",
        "--monodromy",
        "figure8",
        "--monodromy",
        "trefoil",
        "--monodromy-file",
        &file,
        "--classes",
        "[[[1,0],[2,0]],[[1,1]],[[1,0]]]",
    ]);
    assert_eq!(sum["genus"], json!(3));
    let offsets: Vec<_> = sum["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["offset"].clone())
        .collect();
    assert_eq!(offsets, vec![json!(0), json!(2), json!(4)]);
    assert_eq!(sum["screen"]["blocks"][0]["pass"], json!(false));
    assert_eq!(sum["screen"]["blocks"][1]["pass"], json!(true));
    assert_eq!(sum["screen"]["pass"], json!(false));
}

#[test]
fn screen_fib_descend_family() {
    let fib = ok_json(&["screen", "fib", "--bound", "3"]);
    let brute = ok_json(&["screen", "brute", "--monodromy", "figure8", "--bound", "3"]);
    assert_eq!(fib["solutions"], brute["solutions"]);
    assert_eq!(fib["values"], brute["values"]);

    let d = ok_json(&[
        "screen",
        "descend",
        "--monodromy",
        "figure8",
        "--class",
        "8,5",
    ]);
    assert_eq!(d["terminal"], json!([1, 1]));
    assert_eq!(d["value"], d["terminal_value"]);
    let d = ok_json(&[
        "screen",
        "descend",
        "--monodromy",
        "figure8",
        "--class",
        "-2,3",
    ]);
    assert_eq!(d["terminal"], json!([1, 0]));

    let f = ok_json(&["screen", "family", "--classes", "[[1,2],[2,3],[3,5]]"]);
    assert_eq!(f["admissible"], json!(true));
    assert_eq!(f["primitive"], json!([true, true, true]));
    let f = ok_json(&["screen", "family", "--classes", "[[1,2],[3,5],[2,0]]"]);
    assert_eq!(f["admissible"], json!(false));
    assert_eq!(f["primitive"], json!([true, true, false]));
}

#[test]
fn fiber_commands() {
    let v = ok_json(&[
        "fiber",
        "compress",
        "--genus",
        "2",
        "--separating",
        "--split",
        "1,1",
    ]);
    assert_eq!(v["output"]["genera"], json!([1, 1]));
    assert_eq!(v["genus_drop"], json!([true, true]));
    assert_eq!(
        v["euler_characteristic"],
        json!({ "before": -2, "after": 0 })
    );

    let v = ok_json(&[
        "fiber",
        "classify",
        "--genus",
        "2",
        "--target",
        "double-s1xs2",
    ]);
    assert_eq!(v["outcome"]["case"], json!("sum_with_s1xs2"));
    assert_eq!(v["target"]["consistent"], json!(false));
    let v = ok_json(&[
        "fiber",
        "classify",
        "--genus",
        "2",
        "--separating",
        "--split",
        "1,1",
        "--orientation",
        "preserving",
    ]);
    assert_eq!(v["outcome"]["case"], json!("sum_of_fibered"));
}

#[test]
fn snf_reports_cokernel() {
    let v = ok_json(&["snf", "--matrix", "[[2,4,4],[-6,6,12],[10,-4,-16]]"]);
    assert_eq!(v["diagonal"], json!([2, 6, 12]));
    assert_eq!(v["cokernel"]["group"], json!("Z/2 + Z/6 + Z/12"));
    let rect = ok_json(&["snf", "--matrix", "[[1,2,3]]"]);
    assert_eq!(rect["cokernel"], Value::Null);
}

/// Every library operation maps to one subcommand, and every listed
/// subcommand exists.
#[test]
fn coverage_table() {
    let names: Vec<_> = OPERATIONS.iter().map(|(op, _)| *op).collect();
    let unique: BTreeSet<_> = names.iter().collect();
    assert_eq!(unique.len(), names.len(), "an operation is listed twice");
    let subcommands: BTreeSet<_> = OPERATIONS.iter().map(|(_, cmd)| *cmd).collect();
    assert_eq!(subcommands.len(), 13);
    for cmd in subcommands {
        let mut args: Vec<&str> = cmd.split(' ').collect();
        args.push("--help");
        assert_eq!(code(&args), 0, "no subcommand '{cmd}'");
    }
}

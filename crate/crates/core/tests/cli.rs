use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forest-res"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn symbols_both_methods() {
    let out = run(&[
        "symbols",
        "--method",
        "both",
        "--format",
        "json",
        &path("seven_vertex.txt"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["counts"], serde_json::json!([1, 6, 10, 7, 2]));
    assert_eq!(v["methods_agree"], true);
    assert_eq!(v["symbols"][1], serde_json::json!(["0*1"]));

    let out = run(&["symbols", "--format", "json", &path("path_tree.txt")]);
    let v = json(&out);
    let u = serde_json::json!(["0*1", "2*3", "3*4'", "4*5", "5*6"]);
    assert!(v["symbols"].as_array().unwrap().contains(&u));

    let out = run(&["symbols", "--format", "json", &path("edge.txt")]);
    assert_eq!(json(&out)["counts"], serde_json::json!([1, 1]));
}

#[test]
fn classification_report() {
    let out = run(&[
        "symbols",
        "--all",
        "--format",
        "json",
        &path("path_tree.txt"),
    ]);
    let v = json(&out);
    let reports = v["classification"].as_array().unwrap();
    assert_eq!(reports.len(), 1 << 7);
    let t1 = reports
        .iter()
        .find(|r| r["symbol"] == serde_json::json!(["0*1", "2*3"]))
        .unwrap();
    assert_eq!(t1["class"], "TYPE1");
    assert_eq!(t1["gaps"][0]["bridge"], "1*2");
}

#[test]
fn betti_outputs() {
    let out = run(&["betti", "--format", "json", &path("seven_vertex.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pd"], 4);
    let graded = v["graded"].as_array().unwrap();
    let get = |r: u64, d: u64| {
        graded
            .iter()
            .find(|e| e["r"] == r && e["d"] == d)
            .map_or(0, |e| e["value"].as_u64().unwrap())
    };
    assert_eq!(
        [
            get(1, 2),
            get(2, 3),
            get(2, 4),
            get(3, 4),
            get(3, 5),
            get(4, 6)
        ],
        [6, 6, 4, 1, 6, 2]
    );

    let text = String::from_utf8(run(&["betti", &path("seven_vertex.txt")]).stdout).unwrap();
    assert!(text.contains("total:"));
    assert!(text.trim_end().ends_with("pd: 4"));

    let csv = String::from_utf8(run(&["betti", "--format", "csv", &path("edgeless.txt")]).stdout)
        .unwrap();
    assert_eq!(csv, "r,d,value\n0,0,1\n");

    let pd = run(&["pd", &path("seven_vertex.txt")]);
    assert_eq!(String::from_utf8(pd.stdout).unwrap(), "4\n");
}

#[test]
fn resolution_output() {
    let out = run(&["resolution", "--format", "json", &path("edge.txt")]);
    let v = json(&out);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 1);
    assert_eq!(v["matrices"][0]["rows"], 1);
    assert_eq!(v["matrices"][0]["cols"], 1);
    assert_eq!(v["d2_zero"], true);
    assert_eq!(v["minimal"], true);

    let v = json(&run(&[
        "resolution",
        "--format",
        "json",
        &path("seven_vertex.txt"),
    ]));
    let ranks: Vec<usize> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["symbols"].as_array().unwrap().len())
        .collect();
    assert_eq!(ranks, [1, 6, 10, 7, 2]);
}

#[test]
fn verify_and_self_test() {
    let out = run(&["verify", &path("seven_vertex.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--corrupt", &path("seven_vertex.txt")]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "verify",
        "--random",
        "30",
        "--max-edges",
        "8",
        "--seed",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["instances"].as_array().unwrap().len(), 30);
}

#[test]
fn dot_documents() {
    let out = run(&[
        "dot",
        "--graph",
        "region",
        "--column",
        "0*1,2*3,3*4',4*5,5*6",
        &path("path_tree.txt"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("(0*1, 2*3, 3*4, 3*4')"));

    let out = run(&["dot", "--graph", "region", &path("edge.txt")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("[label=").count(), 2);

    let out = run(&[
        "dot",
        "--graph",
        "region",
        "--column",
        "0*1,9*9",
        &path("path_tree.txt"),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(
        run(&["betti", "--format", "yaml", &path("edge.txt")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["betti", "--cap", "0", &path("edge.txt")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["betti", "--root", "zz", &path("edge.txt")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "symbols",
            "--method",
            "filter",
            "--cap",
            "3",
            &path("seven_vertex.txt")
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn root_override_and_determinism() {
    let a = run(&["betti", "--format", "json", &path("seven_vertex.txt")]);
    let b = run(&[
        "betti",
        "--format",
        "json",
        "--root",
        "2''",
        &path("seven_vertex.txt"),
    ]);
    let (va, vb) = (json(&a), json(&b));
    assert_eq!(va["graded"], vb["graded"]);
    let again = run(&["betti", "--format", "json", &path("seven_vertex.txt")]);
    assert_eq!(a.stdout, again.stdout);

    let s1 = run(&[
        "symbols",
        "--format",
        "json",
        "--root",
        "3",
        &path("seven_vertex.txt"),
    ]);
    let v = json(&s1);
    assert_eq!(v["order"][0], "3");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("forest-res-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("pd.txt");
    let out = run(&["pd", "--out", target.to_str().unwrap(), &path("edge.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "1\n");
    std::fs::remove_dir_all(dir).unwrap();
}

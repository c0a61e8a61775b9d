use std::path::Path;
use std::process::{Command, Output};

fn g12(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g12"))
        .args(args)
        .env_remove("G12_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn semisimple_example() {
    let v = json(&g12(&["semisimple", "--c", "1/6"]));
    assert_eq!(v, serde_json::json!({ "semisimple": true }));
    let v = json(&g12(&["semisimple", "--c", "1/4"]));
    assert_eq!(v, serde_json::json!({ "semisimple": false }));
}

#[test]
fn brank_example() {
    let v = json(&g12(&["brank", "--c", "1/4", "--tau", "4", "--degree", "3"]));
    assert_eq!(v, serde_json::json!({ "rank": 7, "dim": 16 }));
}

#[test]
fn category_reports_match_goldens() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for c in ["1/12", "1/4", "1/3", "1/2"] {
        let out = g12(&["category", "--c", c, "--depth", "12"]);
        assert!(out.status.success());
        let golden = std::fs::read(dir.join(format!("category_{}.json", c.replace('/', "_")))).unwrap();
        assert!(out.stdout == golden, "report for c = {c} differs from its golden file");
    }
}

#[test]
fn category_row_at_one_twelfth() {
    let v = json(&g12(&["category", "--c", "1/12"]));
    assert_eq!(v["depth"], 12);
    assert_eq!(v["l_in_m"]["1+"], "M(1+) + M(1-) - M(2-)");
    assert_eq!(v["finite_dimensional"], serde_json::json!({ "1+": 1 }));
}

#[test]
fn output_is_deterministic_and_out_flag_writes_the_same_bytes() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("r.txt");
    let a = g12(&["weights", "--c", "1/3", "--format", "text"]);
    let b = g12(&["weights", "--c", "1/3", "--format", "text", "--out", path.to_str().unwrap()]);
    assert!(a.status.success() && b.status.success());
    assert!(b.stdout.is_empty());
    assert_eq!(a.stdout, std::fs::read(&path).unwrap());
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("3+: -1/3"), "{text}");
}

#[test]
fn keys_are_sorted() {
    let out = g12(&["blocks", "--c", "1/3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.find("\"blocks\"").unwrap() < text.find("\"c\"").unwrap());
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(g12(&["semisimple", "--c", "1/0"]).status.code(), Some(1));
    assert_eq!(g12(&["semisimple", "--c", "0.25"]).status.code(), Some(1));
    assert_eq!(g12(&["brank", "--c", "1/4", "--tau", "5", "--degree", "1"]).status.code(), Some(1));
    assert_eq!(g12(&["brank", "--c", "1/4", "--tau", "4", "--degree", "-1"]).status.code(), Some(1));
    assert_eq!(g12(&["aspherical", "--depth", "3"]).status.code(), Some(1));
    let shallow = g12(&["category", "--c", "1/2", "--depth", "8"]);
    assert_eq!(shallow.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&shallow.stderr).contains("truncation insufficient"));
}

#[test]
fn corrupt_cache_is_an_inconsistency() {
    let tmp = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_g12"))
            .args(["brank", "--c", "1/3", "--tau", "1+", "--degree", "4"])
            .env("G12_CACHE_DIR", tmp.path())
            .output()
            .unwrap()
    };
    let first = json(&run());
    assert_eq!(first, serde_json::json!({ "rank": 3, "dim": 5 }));
    let file = tmp.path().join("b_1_3_1+_4.json");
    assert!(file.exists());
    assert_eq!(json(&run()), first);

    let ident = g12(&["brank", "--c", "1/5", "--tau", "1+", "--degree", "1", "--export-form"]);
    let form = json(&ident)["form"].clone();
    std::fs::write(&file, serde_json::to_string(&form).unwrap()).unwrap();
    assert_eq!(run().status.code(), Some(2));
}

#[test]
fn other_verbs() {
    let v = json(&g12(&["singular", "--c", "1/2", "--tau", "1+", "--degree", "4"]));
    assert_eq!(v["multiplicities"], serde_json::json!({ "3+": 1 }));
    assert_eq!(v["weight"], "-1");
    let v = json(&g12(&["decompose-sym", "--tau", "1+", "--degree", "6"]));
    assert_eq!(v["dim"], 7);
    let v = json(&g12(&["amatrix", "--c", "1/2"]));
    assert_eq!(v["nullspace"].as_array().unwrap().len(), 2);
    let v = json(&g12(&["aspherical", "--c", "1/4"]));
    assert_eq!(v["aspherical"], true);
    let v = json(&g12(&["transport", "--c", "5/12"]));
    assert_eq!(v["l_in_m"]["1+"], "M(1+) + M(1-) - M(2+)");
    assert_eq!(v["maps"][0]["conjugate"], true);
}

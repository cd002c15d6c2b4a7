use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use skein::diagram::SlicedDiagram;
use skein::{Engine, Morphism};

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/golden")
}

#[test]
fn basis_listing() {
    let o = skein(&["basis", "-a", "uud", "-b", "uud"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("Hom(↑↑↓, ↑↑↓): 6 matchings\n"), "{text}");
    assert_eq!(text.lines().count(), 2 + 6);

    let o = skein(&["basis", "-a", "u", "-b", "d"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Hom(↑, ↓): 0 matchings\n");

    let o = skein(&["basis", "-a", "uX", "-b", "u"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("uX"));
}

#[test]
fn basis_json_lengths() {
    let o = skein(&["basis", "-a", "uud", "-b", "uud", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let lengths: Vec<u64> = v["basis"].as_array().unwrap().iter().map(|r| r["length"].as_u64().unwrap()).collect();
    assert_eq!(lengths, vec![0, 0, 1, 1, 1, 2]);
}

#[test]
fn canonical_rank_two() {
    let o = skein(&["canonical", "-a", "uu", "-b", "uu"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("C_T1 = T1 + q^-1 T0\n"));
}

#[test]
fn canonical_json_round_trips() {
    let o = skein(&["canonical", "-a", "uud", "-b", "uud", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 6);
    let cb = Engine::new().canonical_basis(&"uud".parse().unwrap(), &"uud".parse().unwrap()).unwrap();
    for (el, want) in elements.iter().zip(&cb.elements) {
        assert_eq!(&Morphism::from_json(&el["morphism"]).unwrap(), want);
    }
}

#[test]
fn canonical_of_zero_space_fails() {
    let o = skein(&["canonical", "-a", "u", "-b", "d"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("zero Hom space"));
}

#[test]
fn canonical_writes_file_and_tikz() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.tex");
    let o = skein(&["canonical", "-a", "uu", "-b", "uu", "--format", "tikz", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    let tex = std::fs::read_to_string(out).unwrap();
    assert_eq!(tex.matches("\\begin{tikzpicture}").count(), 2);
    assert!(tex.contains("C_T_1 = T_1 + q^{-1} T_0"));
}

#[test]
fn output_is_deterministic() {
    let args = ["qwb", "canonical", "-m", "2", "-n", "2", "--format", "json"];
    assert_eq!(skein(&args).stdout, skein(&args).stdout);
    let args = ["verify-paper", "--only", "qwb21,links", "--format", "json"];
    assert_eq!(skein(&args).stdout, skein(&args).stdout);
}

#[test]
fn homfly_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = skein(&["homfly", &write(dir.path(), "unknot.pd", "loops: 1\n")]);
    assert_eq!(stdout(&o), "(t - t^-1)/z^1\n");
    let o = skein(&["homfly", &write(dir.path(), "kink.pd", "X+[1,1,2,2]\n")]);
    assert_eq!(stdout(&o), "(t^2 - 1)/z^1\n");
    let o = skein(&["homfly", &write(dir.path(), "bad.pd", "X+[1,1,2,3]\n")]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn expand_routes_agree_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let text = "bottom: uud\n0 x+:uu\n1 x-:ud\n1 x+:du\n0 x-:uu\ntop: uud\n";
    let file = write(dir.path(), "d.txt", text);
    let cache = dir.path().join("cache");
    let run = |route: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_skein"))
            .args(["expand", &file, "--format", "json", "--route", route])
            .env("SKEIN_CACHE_DIR", &cache)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", stderr(&o));
        Morphism::from_json(&serde_json::from_slice(&o.stdout).unwrap()).unwrap()
    };
    let reduced = run("reduce");
    assert_eq!(reduced, Engine::new().expand(&text.parse::<SlicedDiagram>().unwrap()));
    assert_eq!(run("pairing"), reduced);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    assert_eq!(run("pairing"), reduced);
}

#[test]
fn render_draws_a_picture() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "d.txt", "bottom: ud\n0 cap:ud\ntop: -\n");
    let o = skein(&["render", &file]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("\\begin{tikzpicture}"));
}

#[test]
fn qwb_commands() {
    let o = skein(&["qwb", "canonical", "-m", "2", "-n", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("C_{s_{-1} e s_{-1}} = H_{-1} e H_{-1} + q^-1 e H_{-1} + q^-1 H_{-1} e + q^-2 e\n"), "{text}");
    let o = skein(&["qwb", "verify", "-m", "2", "-n", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("quadratic relation checked as (H_i - q)(H_i + q^-1) = 0\n"));
    assert!(text.trim_end().ends_with(", 0 failed"));
}

#[test]
fn verify_paper_filters() {
    let o = skein(&["verify-paper", "--only", "qwb21"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS  1 qwb21"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 1);

    let o = skein(&["verify-paper", "--only", "nope"]);
    assert!(!o.status.success());
}

#[test]
fn verify_paper_reports_table_errata() {
    let o = skein(&["verify-paper", "--only", "qwb31", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["criteria"][0]["status"], "FAIL");
    assert_eq!(v["criteria"][0]["errata_only"], true);
}

#[test]
fn corrupted_golden_file_fails_only_its_block() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["qwb_2_1.json", "qwb_2_2.json", "qwb_3_1.json"] {
        std::fs::copy(golden_dir().join(f), dir.path().join(f)).unwrap();
    }
    let p = dir.path().join("qwb_2_1.json");
    let text = std::fs::read_to_string(&p).unwrap();
    let corrupted = text.replacen("q^-2", "q^-3", 1);
    assert_ne!(corrupted, text);
    std::fs::write(&p, corrupted).unwrap();

    let o = skein(&["verify-paper", "--only", "qwb21,qwb22", "--golden-dir", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["criteria"][0]["status"], "FAIL");
    assert_eq!(v["criteria"][1]["status"], "PASS");
}

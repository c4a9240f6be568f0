use std::path::PathBuf;

use serde_json::Value;
use torzar_cli::{execute, InstanceFile, Outcome};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn torzar(args: &[&str]) -> Outcome {
    let mut argv = vec!["torzar"];
    argv.extend_from_slice(args);
    execute(argv)
}

fn records(o: &Outcome) -> Vec<Value> {
    let v: Value = serde_json::from_str(&o.stdout).expect("json report");
    assert_eq!(v["schema"], 1);
    v["records"].as_array().unwrap().clone()
}

fn write_instance(dir: &tempfile::TempDir, text: &str) -> String {
    let p = dir.path().join("inst.json");
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn vol_of_hyperplane_on_plane() {
    let o = torzar(&["vol", "-i", &fixture("p2.json"), "-c", "H"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(records(&o)[0]["value"], "1");
}

#[test]
fn diskant_on_blowup_fixture() {
    let o = torzar(&["diskant", "-i", &fixture("blp2.json"), "-a", "H", "-b", "2H-E"]);
    assert_eq!(o.code, 0);
    let r = &records(&o)[0];
    assert_eq!(r["verdict"], "holds");
    assert_eq!(r["margin"], "3/4");
}

#[test]
fn unknown_class_exits_2() {
    let o = torzar(&["vol", "-i", &fixture("p2.json"), "-c", "NOPE"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("unknown class"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(torzar(&["frobnicate"]).code, 2);
    assert_eq!(torzar(&["vol", "-i", &fixture("p2.json"), "-c", "H", "--bogus"]).code, 2);
    assert_eq!(torzar(&["vol", "-c", "H"]).code, 2);
    assert_eq!(torzar(&["vol", "-i", "/nonexistent/x.json", "-c", "H"]).code, 2);
    assert_eq!(torzar(&["vol", "-i", &fixture("p2.json"), "-c", "2*"]).code, 2);
    assert_eq!(torzar(&["restricted", "-i", &fixture("p2.json"), "-c", "H", "--ray", "5"]).code, 2);
    assert_eq!(torzar(&["restricted", "-i", &fixture("p2.json"), "-c", "H", "--ray", "1,1"]).code, 2);
    assert_eq!(torzar(&["suite", "--suite", "nope"]).code, 2);
    let help = torzar(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("diskant"));
}

#[test]
fn precondition_failures_exit_2() {
    let o = torzar(&["zariski", "-i", &fixture("p2.json"), "-c", "-H"]);
    assert_eq!(o.code, 2);
    let o = torzar(&["diskant", "-i", &fixture("blp2.json"), "-a", "E", "-b", "H"]);
    assert_eq!(o.code, 2);
}

#[test]
fn parse_errors_name_their_source() {
    let dir = tempfile::tempdir().unwrap();
    let out_of_range = r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,7]],"classes":{}}"#;
    let o = torzar(&["validate", "-i", &write_instance(&dir, out_of_range)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cone 2"), "{}", o.stderr);

    let short = r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]],"classes":{"D":["1","0"]}}"#;
    let o = torzar(&["validate", "-i", &write_instance(&dir, short)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("class 'D'"), "{}", o.stderr);

    let bad_rational = r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]],"classes":{"D":["1","x/2","0"]}}"#;
    let o = torzar(&["validate", "-i", &write_instance(&dir, bad_rational)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("bad rational"), "{}", o.stderr);

    let o = torzar(&["validate", "-i", &write_instance(&dir, "{\"dim\": 2,")]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 1"), "{}", o.stderr);

    let unknown_field = r#"{"dim":2,"rays":[],"cones":[],"extra":1}"#;
    assert_eq!(torzar(&["validate", "-i", &write_instance(&dir, unknown_field)]).code, 2);
}

#[test]
fn canonical_round_trip_and_stable_digest() {
    for name in ["p2.json", "blp2.json", "p1p1.json"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let file = InstanceFile::from_json(&text).unwrap();
        let again = InstanceFile::from_json(&file.canonical_json()).unwrap();
        assert_eq!(file, again);
        let a = file.clone().build().unwrap();
        let b = again.build().unwrap();
        assert_eq!(*a.fan, *b.fan);
        for (k, c) in &a.classes {
            assert_eq!(c.values(), b.classes[k].values());
        }
    }
    let one = r#"{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]],"classes":{"H":["2/2","0","0"]}}"#;
    let two = r#"{"classes":{"H":["1","0","0"]},"cones":[[0,1],[1,2],[2,0]],"rays":[[1,0],[0,1],[-1,-1]],"dim":2}"#;
    let a = InstanceFile::from_json(one).unwrap();
    let b = InstanceFile::from_json(two).unwrap();
    assert_eq!(a.digest(), b.digest());
}

#[test]
fn reports_are_byte_identical() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["thm-a", "-i", "", "-a", "H", "-b", "E"],
        vec!["suite", "--seed", "7", "--count", "3", "--suite", "kt"],
        vec!["gen", "--seed", "5", "--dim", "3", "--subdivisions", "1"],
    ];
    let blp2 = fixture("blp2.json");
    for mut args in runs {
        if args[0] == "thm-a" {
            args[2] = &blp2;
        }
        let first = torzar(&args);
        let second = torzar(&args);
        assert_eq!(first.code, 0, "{}", first.stderr);
        assert_eq!(first, second);
    }
}

#[test]
fn gen_output_is_a_valid_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let path = path.display().to_string();
    let o = torzar(&["gen", "--seed", "3", "--subdivisions", "2", "--out", &path]);
    assert_eq!(o.code, 0);
    let v = torzar(&["validate", "-i", &path]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    let recs = records(&v);
    assert_eq!(recs[0]["rays"], 6);
    let names: Vec<&str> = recs[1..].iter().map(|r| r["class"].as_str().unwrap()).collect();
    assert_eq!(names, ["C1", "C2", "C3", "omega"]);
    let o = torzar(&["big", "-i", &path, "-c", "omega"]);
    assert_eq!(records(&o)[0]["value"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json").display().to_string();
    let o = torzar(&["slope", "-i", &fixture("blp2.json"), "-a", "H", "-b", "2H-E", "--out", &path]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["records"][0]["value"], "1/2");
}

#[test]
fn seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_torzar");
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = std::process::Command::new(bin);
        cmd.args(args);
        match env {
            Some(s) => cmd.env("TORZAR_SEED", s),
            None => cmd.env_remove("TORZAR_SEED"),
        };
        cmd.output().unwrap()
    };
    let args = ["suite", "--suite", "orthogonality", "--count", "2"];
    let from_env = run(Some("40"), &args);
    assert_eq!(from_env.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&from_env.stdout).unwrap();
    assert_eq!(v["records"][0]["base_seed"], 40);
    let explicit = run(Some("40"), &["suite", "--suite", "orthogonality", "--count", "2", "--seed", "9"]);
    let v: Value = serde_json::from_slice(&explicit.stdout).unwrap();
    assert_eq!(v["records"][0]["base_seed"], 9);
    let unknown = run(None, &["vol", "-i", &fixture("p2.json"), "-c", "NOPE"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn every_fixture_command_holds() {
    let p2 = fixture("p2.json");
    let blp2 = fixture("blp2.json");
    let p1p1 = fixture("p1p1.json");
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", "-i", &p2],
        vec!["validate", "-i", &blp2],
        vec!["validate", "-i", &p1p1],
        vec!["newton", "-i", &blp2, "-c", "2H-E"],
        vec!["zariski", "-i", &blp2, "-c", "H+E"],
        vec!["product", "-i", &p1p1, "-c", "F", "-c", "S"],
        vec!["pair", "-i", &blp2, "-a", "H", "-b", "E"],
        vec!["nef", "-i", &blp2, "-c", "H"],
        vec!["psef", "-i", &blp2, "-c", "E"],
        vec!["big", "-i", &blp2, "-c", "E"],
        vec!["dpsef", "-i", &blp2, "-c", "H", "--ray", "(1,1)"],
        vec!["dbig", "-i", &blp2, "-c", "2H-E", "--ray", "3"],
        vec!["h0", "-i", &p2, "-c", "H", "--kmax", "4", "--ray", "2"],
        vec!["thm-a", "-i", &blp2, "-a", "2H-E", "-b", "E"],
        vec!["cor-c", "-i", &blp2, "-c", "2H-E", "--ray", "3"],
        vec!["morse", "-i", &blp2, "-a", "2H-E", "-b", "H"],
        vec!["kt", "-i", &p1p1, "-c", "F+S", "-c", "2F+S"],
        vec!["ortho", "-i", &blp2, "-c", "H+E"],
        vec!["thm-d", "-i", &blp2, "-a", "H", "-b", "2H-E"],
        vec!["cor-e", "-i", &p1p1, "-a", "F+S", "-b", "2F+2S"],
        vec!["integral", "-i", &p2, "-a", "2H", "-b", "H"],
        vec!["fujita-sections", "-i", &p2, "-c", "H"],
    ];
    for args in commands {
        let o = torzar(&args);
        assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
        let t = torzar(&[args.as_slice(), &["--format", "table"]].concat());
        assert_eq!(t.code, 0);
        assert!(t.stdout.ends_with("status  0\n"));
    }
}

#[test]
fn fixture_values() {
    let blp2 = fixture("blp2.json");
    let val = |args: &[&str]| records(&torzar(args))[0]["value"].clone();
    assert_eq!(val(&["pair", "-i", &blp2, "-a", "2H-E", "-b", "E"]), "1");
    assert_eq!(val(&["restricted", "-i", &blp2, "-c", "H", "--ray", "1,1"]), "0");
    assert_eq!(val(&["vol", "-i", &blp2, "-c", "H+1/2E"]), "1");
    let o = torzar(&["h0", "-i", &fixture("p2.json"), "-c", "H", "--kmax", "3"]);
    let counts: Vec<u64> = records(&o).iter().map(|r| r["value"].as_u64().unwrap()).collect();
    assert_eq!(counts, [3, 6, 10]);
    let z = &records(&torzar(&["zariski", "-i", &blp2, "-c", "H+E"]))[0];
    assert_eq!(z["support"], serde_json::json!([3]));
    let kt = &records(&torzar(&["cor-e", "-i", &fixture("p1p1.json"), "-a", "F+S", "-b", "2F+2S"]))[0];
    assert_eq!(kt["verdict"], "holds-with-equality");
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jacsplit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn expect_error(out: &Output, code: &str) {
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(out)["error"], code);
}

fn halve(args: &[&str]) -> (String, Value) {
    let mut full = vec!["halve"];
    full.extend_from_slice(args);
    let out = run(&full, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    (text, json_of(&out))
}

#[test]
fn halve_genus_one() {
    let (_, doc) = halve(&["--p", "11", "--roots", "0,1,3", "--point", "5,auto"]);
    let halves = doc["halves"].as_array().unwrap();
    assert_eq!(halves.len(), 4);
    let phis: Vec<&str> = halves.iter().map(|h| h["phi"].as_str().unwrap()).collect();
    assert_eq!(phis, ["000", "110", "101", "011"]);
    for h in halves {
        assert_eq!(h["U"].as_array().unwrap().len(), 2);
        assert_eq!(h["profile"]["values"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn halve_weierstrass_point() {
    let (_, doc) = halve(&["--p", "11", "--roots", "0,1,3", "--point", "0,0", "--profile-only"]);
    let halves = doc["halves"].as_array().unwrap();
    assert_eq!(halves.len(), 4);
    for h in halves {
        assert_eq!(h["profile"]["values"][0], serde_json::json!([0, 0]));
        assert!(h.get("U").is_none());
    }
}

#[test]
fn halve_validation_errors() {
    expect_error(&run(&["halve", "--p", "11", "--roots", "0,0,3", "--point", "5,auto"], None), "RepeatedRoot");
    expect_error(&run(&["halve", "--p", "12", "--roots", "0,1,3", "--point", "5,auto"], None), "BadModulus");
    expect_error(&run(&["halve", "--p", "11", "--roots", "0,1", "--point", "5,auto"], None), "WrongRootCount");
    expect_error(&run(&["halve", "--p", "11", "--roots", "0,1,3", "--point", "5,1"], None), "PointNotOnCurve");
    expect_error(&run(&["halve", "--p", "11", "--roots", "0,1,3"], None), "Usage");
}

#[test]
fn output_is_byte_stable() {
    let args = ["--p", "13", "--roots", "1,4,6,9,12", "--point", "3,auto"];
    let (a, doc) = halve(&args);
    let (b, _) = halve(&args);
    assert_eq!(a, b);
    let keys: Vec<&String> = doc.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["curve", "halves", "point"]);
    let v1 = run(&["verify", "--grid", "7x1", "--seed", "3"], None);
    let v2 = run(&["verify", "--grid", "7x1", "--seed", "3", "--sequential"], None);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn torsor_identity_and_flips() {
    let (text, doc) = halve(&["--p", "13", "--roots", "1,4,6,9,12", "--point", "3,auto"]);
    let out = run(&["torsor", "--phi", "00000"], Some(&text));
    assert_eq!(out.status.code(), Some(0));
    let t = json_of(&out);
    assert_eq!(t["equal"], true);
    for (before, after) in doc["halves"].as_array().unwrap().iter().zip(t["halves"].as_array().unwrap()) {
        for k in ["phi", "profile", "U", "V"] {
            assert_eq!(before[k], after[k]);
        }
    }

    // psi_beta for beta = third root, then an arbitrary even vector
    for phi in ["11011", "01100"] {
        let out = run(&["torsor", "--phi", phi, "--index", "5"], Some(&text));
        assert_eq!(out.status.code(), Some(0));
        let t = json_of(&out);
        assert_eq!(t["halves"].as_array().unwrap().len(), 1);
        assert_eq!(t["halves"][0]["equal"], true);
    }

    expect_error(&run(&["torsor", "--phi", "10000"], Some(&text)), "OddSupport");
    expect_error(&run(&["torsor", "--phi", "000"], Some(&text)), "BadSignVector");
    expect_error(&run(&["torsor", "--phi", "00000"], Some("{}")), "Parse");
}

#[test]
fn translate_round_trip() {
    let (text, doc) = halve(&["--p", "13", "--roots", "1,4,6,9,12", "--point", "3,auto"]);
    let dir = std::env::temp_dir().join(format!("jacsplit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("halves.json");
    std::fs::write(&input, &text).unwrap();

    let once = run(&["translate", "--in", input.to_str().unwrap(), "--index", "3", "--beta", "9"], None);
    assert_eq!(once.status.code(), Some(0));
    let once_doc = json_of(&once);
    assert_eq!(once_doc["equal"], true);
    let twice = run(&["translate", "--beta", "9"], Some(std::str::from_utf8(&once.stdout).unwrap()));
    assert_eq!(twice.status.code(), Some(0));
    let twice_doc = json_of(&twice);
    assert_eq!(twice_doc["U"], doc["halves"][3]["U"]);
    assert_eq!(twice_doc["V"], doc["halves"][3]["V"]);

    expect_error(&run(&["translate", "--in", input.to_str().unwrap(), "--beta", "2"], None), "RootNotInR");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn translate_from_flags() {
    // 2 is not a root, so (x - 2, 0) is not a divisor
    let out = run(&["translate", "--p", "11", "--roots", "0,1,3", "--U", "-2,1", "--V", "", "--beta", "0"], None);
    expect_error(&out, "InvalidDivisor");
    // the Weierstrass point alpha = 1 plus alpha = 0
    let out = run(&["translate", "--p", "11", "--roots", "0,1,3", "--U", "-1,1", "--V", "", "--beta", "0"], None);
    assert_eq!(out.status.code(), Some(0));
    let t = json_of(&out);
    assert_eq!(t["equal"], true);
    // T_{0,1} is the 2-torsion point supported on the remaining root
    assert_eq!(t["U"], serde_json::json!([[8, 0], [1, 0]]));
    let out = run(&["translate", "--p", "11", "--roots", "0,1,3", "--U", "0,1", "--V", "", "--beta", "0"], None);
    expect_error(&out, "WeierstrassInSupport");
    let out = run(&["translate", "--p", "11", "--roots", "0,1,3", "--U", "0,1", "--beta", "0"], None);
    expect_error(&out, "Usage");
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--grid", "5x2", "--brute-force", "on", "--max-points", "2", "--summary"], None);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["failures"], 0);
    assert_eq!(report["cells"][0]["tallies"]["brute_force"]["checked"], 2);
    assert!(report.get("cases").is_none());

    expect_error(&run(&["verify", "--grid", ""], None), "InvalidGrid");
    expect_error(&run(&["verify", "--grid", "5,7"], None), "InvalidGrid");
    expect_error(&run(&["verify", "--grid", "9x1"], None), "InvalidGrid");
    expect_error(&run(&["verify", "--grid", "5x3"], None), "InvalidGrid");
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("jacsplit-verify-{}.json", std::process::id()));
    let out = run(&["verify", "--grid", "7x1", "--max-curves", "2", "--out", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["curves"].as_array().unwrap().len(), 2);
    assert_eq!(report["cases"].as_array().unwrap().len(), 14);
    std::fs::remove_file(&path).unwrap();
}

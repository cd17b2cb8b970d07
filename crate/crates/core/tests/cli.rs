use cusp_core::cli::run;
use serde_json::Value;

fn cusp(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("cusp").chain(args.split_whitespace());
    let out = run(argv.map(std::ffi::OsString::from));
    (out.status, out.stdout, out.stderr)
}

fn json(args: &str) -> Value {
    let (status, stdout, stderr) = cusp(&format!("--json {args}"));
    assert_eq!(status, 0, "{args}: {stderr}");
    serde_json::from_str(&stdout).expect("stdout is json")
}

#[test]
fn semigroup_info_two_three() {
    let v = json("semigroup info --p 2 --q 3");
    assert_eq!(v["command"], "semigroup info");
    assert_eq!(v["results"]["conductor"], 2);
    assert_eq!(v["results"]["frobenius"], 1);
    assert_eq!(v["results"]["gaps"], serde_json::json!([1]));
}

#[test]
fn rado_witness_is_n_plus_one() {
    let v = json("rado witness --max-k 101 --n 100");
    assert_eq!(v["results"]["witnessSite"], 101);
    assert_eq!(v["results"]["decision"], "no");
}

#[test]
fn region_bound_example() {
    let v = json("theorem1 bound --max-k 12 --region 5");
    assert_eq!(v["results"]["nOmega"], 20);
    assert_eq!(v["results"]["overall"], "yes");
    let below = json("theorem1 bound --max-k 12 --region 5 --n 19");
    assert_eq!(below["results"]["overall"], "no");
}

#[test]
fn curve_and_nagata_reports() {
    let v = json("curve analyze --p 2 --q 3 --germ t^-1");
    for key in ["curve", "germ", "decision"] {
        assert!(v["results"].get(key).is_some(), "missing {key}");
    }
    let n = json("nagata demo --g inv --max-pow 4");
    let outcomes: Vec<&str> = n["findings"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["outcome"].as_str().unwrap())
        .collect();
    assert!(outcomes.contains(&"contradiction-with-paper"));
}

#[test]
fn multiplier_rejects_negative_exponents_as_domain_error() {
    let (status, _, stderr) = cusp("curve multiplier --p 3 --q 5 --a 1 --b -1");
    assert_eq!(status, 1);
    assert!(stderr.contains(">= 0"));
    assert!(json("curve multiplier --p 3 --q 5 --a 1 --b 2")["results"].is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(cusp("semigroup info --p 3 --q 5").0, 0);
    assert_eq!(cusp("--help").0, 0);
    let (status, _, stderr) = cusp("semigroup info --p 4 --q 6");
    assert_eq!(status, 1);
    assert!(stderr.contains("coprime"));
    assert_eq!(cusp("semigroup bogus").0, 2);
    assert_eq!(cusp("semigroup info --p x --q 3").0, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        "--json theorem1 bound --max-k 9 --region 4",
        "curve analyze --p 3 --q 7 --germ t+O(t^4)",
        "--json nagata demo --g expinv --max-pow 3",
    ] {
        assert_eq!(cusp(args), cusp(args), "{args}");
    }
}

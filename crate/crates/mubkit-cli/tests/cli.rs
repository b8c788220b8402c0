//! End-to-end tests of the `mubkit` binary: exit-code contract, output
//! shapes, and determinism.

use std::path::Path;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mubkit::io::{read_vector_set, write_vector_set};
use mubkit::vectors::{random_unit, VectorSet};

fn mubkit_cmd<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(args)
        .env_remove("MUBKIT_TOL")
        .output()
        .expect("binary must run")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal expected")
}

fn last_json_line(output: &Output) -> serde_json::Value {
    let stdout = String::from_utf8_lossy(&output.stdout);
    let line = stdout.lines().rev().find(|l| l.starts_with('{')).expect("machine block");
    serde_json::from_str(line).expect("machine block must be JSON")
}

fn file_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn construct_dim3_writes_twelve_labeled_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d3.json");
    let output = mubkit_cmd(["construct", "--dim", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);

    let value = file_json(&out);
    assert_eq!(value["dim"], 3);
    assert_eq!(value["vectors"].as_array().unwrap().len(), 12);
    let labels: Vec<&str> =
        value["labels"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    assert_eq!(labels.len(), 12);
    for basis in 0..4 {
        let tag = format!("B{basis}");
        assert_eq!(labels.iter().filter(|&&l| l == tag).count(), 3);
    }
    assert!(value["provenance"]["construction"].is_string());
}

#[test]
fn construct_dim6_exits_two_with_a_reason() {
    let output = mubkit_cmd(["construct", "--dim", "6"]);
    assert_eq!(exit_code(&output), 2);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("no maximal construction"), "stderr: {stderr}");
}

#[test]
fn construct_dim9_mols_gives_36_vectors_in_4_bases() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d9.json");
    let output = mubkit_cmd([
        "construct", "--dim", "9", "--method", "mols", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);

    let value = file_json(&out);
    assert_eq!(value["dim"], 9);
    assert_eq!(value["vectors"].as_array().unwrap().len(), 36);
    let mut labels: Vec<String> = value["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap().to_string())
        .collect();
    labels.dedup();
    assert_eq!(labels, ["B0", "B1", "B2", "B3"]);
}

#[test]
fn construct_is_deterministic_for_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let output = mubkit_cmd([
            "construct", "--dim", "5", "--method", "pauli", "--seed", "42",
            "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&output), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_constructed_family_reports_design_order_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d4.json");
    mubkit_cmd(["construct", "--dim", "4", "--out", out.to_str().unwrap()]);

    let output = mubkit_cmd(["verify", out.to_str().unwrap(), "--expect-design", "2"]);
    assert_eq!(exit_code(&output), 0);
    let machine = last_json_line(&output);
    assert_eq!(machine["design_order"], 2);
    assert_eq!(machine["mub_union"], true);
    let angles = machine["angles"].as_array().unwrap();
    assert_eq!(angles.len(), 2);
    assert!(angles[0].as_f64().unwrap().abs() < 1e-9);
    assert!((angles[1].as_f64().unwrap() - 0.25).abs() < 1e-9);
}

#[test]
fn verify_sic_flag_passes_on_builtin_orbit() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sic3.json");
    let output = mubkit_cmd([
        "construct", "--dim", "3", "--method", "sic", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);

    let output = mubkit_cmd(["verify", out.to_str().unwrap(), "--sic"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(last_json_line(&output)["sic"], true);
}

#[test]
fn verify_random_set_fails_design_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("random.json");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let set = VectorSet::new((0..5).map(|_| random_unit(3, &mut rng)).collect()).unwrap();
    write_vector_set(&path, &set, None).unwrap();

    let output = mubkit_cmd(["verify", path.to_str().unwrap(), "--expect-design", "1"]);
    assert_eq!(exit_code(&output), 1);
    assert_eq!(last_json_line(&output)["design_order"], 0);

    // without an expectation the report is informational: exit 0
    let output = mubkit_cmd(["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
}

#[test]
fn verify_rejects_malformed_input_with_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"dim\": 2, \"vectors\": [[[1.0, 0.0]]]}").unwrap();
    let output = mubkit_cmd(["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);

    let output = mubkit_cmd(["verify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn partition_round_trips_a_shuffled_union() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("shuffled.json");
    let out_dir = dir.path().join("bases");

    let union = mubkit::constructions::maximal_mubs(3).unwrap().union();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut vectors = union.vectors().to_vec();
    for i in (1..vectors.len()).rev() {
        vectors.swap(i, rng.random_range(0..=i));
    }
    write_vector_set(&input, &VectorSet::new(vectors).unwrap(), None).unwrap();

    let output = mubkit_cmd([
        "partition", input.to_str().unwrap(), "--out", out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(last_json_line(&output)["bases"], 4);
    for i in 0..4 {
        let (basis, _) = read_vector_set(&out_dir.join(format!("basis_{i}.json"))).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis.dim(), 3);
    }
}

#[test]
fn partition_rejects_a_sic_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sic.json");
    mubkit_cmd(["construct", "--dim", "3", "--method", "sic", "--out", path.to_str().unwrap()]);

    let output = mubkit_cmd(["partition", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("9 vectors"), "stderr: {stderr}");
}

#[test]
fn partition_rejects_a_truncated_union_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("truncated.json");
    let union = mubkit::constructions::maximal_mubs(3).unwrap().union();
    let truncated = VectorSet::new(union.vectors()[..11].to_vec()).unwrap();
    write_vector_set(&path, &truncated, None).unwrap();

    let output = mubkit_cmd(["partition", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 1);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("11 vectors"), "stderr: {stderr}");
}

#[test]
fn tolerance_env_var_is_honored_and_flag_wins() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("union.json");
    mubkit_cmd(["construct", "--dim", "3", "--out", path.to_str().unwrap()]);

    // an absurdly small edge tolerance empties the orthogonality graph
    let strict = Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(["partition", path.to_str().unwrap()])
        .env("MUBKIT_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(1));

    // an explicit flag overrides the environment
    let relaxed = Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(["partition", path.to_str().unwrap(), "--tol", "1e-8"])
        .env("MUBKIT_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(relaxed.status.code(), Some(0));
}

#[test]
fn bounds_match_the_documented_examples() {
    let output = mubkit_cmd(["bounds", "5"]);
    assert_eq!(exit_code(&output), 0);
    assert!(String::from_utf8_lossy(&output.stdout).contains("6 <= M(5) <= 6"));

    let output = mubkit_cmd(["bounds", "6"]);
    assert_eq!(exit_code(&output), 0);
    assert!(String::from_utf8_lossy(&output.stdout).contains("3 <= M(6) <= 7"));
    let machine = last_json_line(&output);
    assert_eq!(machine["lower"], 3);
    assert_eq!(machine["upper"], 7);

    let output = mubkit_cmd(["bounds", "1"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn usage_errors_exit_two() {
    let output = mubkit_cmd(["nonsense"]);
    assert_eq!(exit_code(&output), 2);

    let output = mubkit_cmd(["construct"]);
    assert_eq!(exit_code(&output), 2);

    let help = mubkit_cmd(["--help"]);
    assert_eq!(exit_code(&help), 0);
}

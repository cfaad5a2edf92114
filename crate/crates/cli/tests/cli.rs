use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symident")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_lines(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
}

#[test]
fn tableaux_counts() {
    for (shape, count) in [("32", 5), ("3", 1), ("321", 16)] {
        let o = run(&["tableaux", shape]);
        assert!(o.status.success());
        let out = stdout(&o);
        assert!(out.starts_with(&format!("partition {shape}: d = {count}\n")), "{out}");
        assert_eq!(out.lines().count(), count + 1);
    }
    let o = run(&["tableaux", "32"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("123/45"));
}

#[test]
fn bad_partition_is_a_usage_error() {
    let o = run(&["tableaux", "2x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rep_matrices() {
    let o = run(&["rep", "21", "213"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "A_iota\n1,0\n0,1\n\nA_p\n1,-1\n0,-1\n\nR(p)\n1,-1\n0,-1\n\n");
    let o = run(&["rep", "5", "12345"]);
    assert!(stdout(&o).ends_with("R(p)\n1\n\n"));
    let o = run(&["rep", "32", "23451"]);
    let out = stdout(&o);
    assert!(out.contains("A_iota\n1,0,0,0,-1\n0,1,0,0,0\n"), "{out}");
    assert!(out.contains("R(p)\n-1,-1,1,1,0\n-1,0,0,0,1\n0,-1,0,0,0\n-1,0,0,1,0\n0,-1,0,1,0\n"), "{out}");
}

#[test]
fn units_for_s2() {
    let o = run(&["units", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("U[2](1,1)\n1/2\t12\n1/2\t21\n"), "{out}");
    assert!(out.contains("U[11](1,1)\n1/2\t12\n-1/2\t21\n"), "{out}");
}

#[test]
fn units_for_s3_written_to_disk() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["units", "3", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let psi = fs::read_to_string(dir.path().join("psi.csv")).unwrap();
    let sixths = [
        [1, 2, 0, 0, 2, 1],
        [1, 0, 2, 2, 0, -1],
        [1, 2, 0, -2, -2, -1],
        [1, 0, 2, -2, -2, 1],
        [1, -2, -2, 2, 0, 1],
        [1, -2, -2, 0, 2, -1],
    ];
    let fmt = |v: i64| match v {
        0 => "0".to_string(),
        1 => "1/6".into(),
        -1 => "-1/6".into(),
        2 => "1/3".into(),
        -2 => "-1/3".into(),
        _ => unreachable!(),
    };
    let want: Vec<String> = sixths.iter().map(|r| r.map(fmt).join(",")).collect();
    assert_eq!(psi.lines().collect::<Vec<_>>(), want);
    let inv = fs::read_to_string(dir.path().join("psi_inv.csv")).unwrap();
    assert_eq!(inv.lines().nth(2), Some("0,1,-1,1,-1,0"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 8);
}

#[test]
fn octonions_degree_five_has_no_new_identities() {
    let o = run(&["identities", "octonions", "5", "--generators", "alt,r2,hp5", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let lines = data_lines(&o);
    assert_eq!(lines[0], "lambda,d_lambda,r_all,r_old,new_count");
    assert_eq!(lines.len(), 8);
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        assert_eq!(f[2], f[3], "{l}");
        assert_eq!(f[4], "0");
    }
}

#[test]
fn m2_degree_four_finds_s4() {
    let o = run(&["identities", "m2", "4", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let lines = data_lines(&o);
    assert!(lines.contains(&"1111,1,1,0,1".to_string()), "{lines:?}");
    let new: usize = lines[1..].iter().map(|l| l.rsplit(',').next().unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(new, 1);
}

#[test]
fn identities_output_is_deterministic() {
    let args = ["identities", "octonions", "4", "--generators", "alt", "--seed", "42", "--stable-iters", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn checkpoints_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let base = ["identities", "octonions", "5", "--generators", "alt", "--seed", "9", "--partitions", "11111,221"];
    let mut first: Vec<&str> = base.to_vec();
    first.extend(["--out", out]);
    let o = run(&first);
    assert_eq!(o.status.code(), Some(3));
    for name in ["report.csv", "checkpoint_11111.json", "checkpoint_221.json", "allmat_11111.csv", "oldmat_11111.csv"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
    assert!(dir.path().join("new_11111_1.txt").exists());
    let mut again = first.clone();
    again.push("--resume");
    let r = run(&again);
    assert_eq!(r.status.code(), Some(3));
    assert_eq!(data_lines(&o), data_lines(&r));
    let plain = run(&base);
    assert_eq!(data_lines(&plain), data_lines(&o));
}

#[test]
fn membership_verdicts() {
    let o = run(&["membership", "4", "--known", "alt", "--candidate", "altdeg4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = data_lines(&o);
    let ranks: Vec<&str> = lines[1..6].iter().map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(ranks, ["4", "12", "8", "10", "2"]);
    assert_eq!(lines.last().unwrap(), "member");

    let o = run(&["membership", "4", "--candidate", "s4"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(data_lines(&o).last().unwrap(), "not a member");

    let o = run(&["membership", "6", "--known", "alt,r2,hp5,hp6", "--candidate", "sz"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_lines(&o).last().unwrap(), "member");
}

#[test]
fn verify_reports_pass_and_witness() {
    let o = run(&["verify", "new6", "octonions", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass: 100 trials"));
    let o = run(&["verify", "hp5", "octonions", "--seed", "3", "--trials", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "hp5", "m3", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.starts_with("fail"));
    assert!(out.contains("x5 = ") && out.contains("value = "), "{out}");
}

#[test]
fn fixture_files_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["fixtures", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let hp6 = dir.path().join("hp6.txt");
    let o = run(&["verify", hp6.to_str().unwrap(), "octonions", "--seed", "1", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["identities"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

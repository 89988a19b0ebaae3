//! Behavior tests for the `gaussphi` binary: output formats, exit codes,
//! and determinism.

use std::process::{Command, Output};

use gaussphi::expansion::Expansion;
use gaussphi::GaussInt;

fn gaussphi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaussphi"))
        .args(args)
        .output()
        .expect("failed to run gaussphi")
}

fn stdout(args: &[&str]) -> String {
    let out = gaussphi(args);
    assert!(
        out.status.success(),
        "gaussphi {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn phi_prints_the_value() {
    assert_eq!(stdout(&["phi", "4", "1"]), "2\n");
    assert_eq!(stdout(&["phi", "1", "0"]), "0\n");
    assert_eq!(stdout(&["phi", "-7", "4"]), "4\n");
}

#[test]
fn phi_rejects_the_origin() {
    let out = gaussphi(&["phi", "0", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("phi undefined at 0"));
}

#[test]
fn expand_prints_canonical_digits() {
    assert_eq!(stdout(&["expand", "4", "0"]), "0,0,0,0,-1\n");
    assert_eq!(stdout(&["expand", "0", "1"]), "i\n");
    assert_eq!(stdout(&["expand", "4", "1"]), "1,1,-i\n");
}

#[test]
fn expand_output_round_trips() {
    for (re, im) in [(4, 1), (-9, 2), (0, -6), (123, -45)] {
        let text = stdout(&["expand", &re.to_string(), &im.to_string()]);
        let parsed: Expansion = text.trim().parse().unwrap();
        assert_eq!(parsed.evaluate(), GaussInt::new(re, im));
    }
}

#[test]
fn expand_backtrack_agrees_with_greedy() {
    for (re, im) in [(4, 1), (7, 0), (-5, 3)] {
        let (re, im) = (re.to_string(), im.to_string());
        assert_eq!(
            stdout(&["expand", &re, &im]),
            stdout(&["expand", "--backtrack", &re, &im])
        );
    }
}

#[test]
fn member_answers_both_ways() {
    assert_eq!(stdout(&["member", "B", "2", "4", "1"]), "true\n");
    assert_eq!(stdout(&["member", "B", "3", "4", "0"]), "false\n");
    assert_eq!(stdout(&["member", "oct", "2", "4", "1"]), "true\n");
}

#[test]
fn enumerate_emits_sorted_json_lines() {
    let text = stdout(&["enumerate", "B", "2", "-"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 49);
    assert_eq!(lines[0], "{\"re\":-4,\"im\":-1}");
    let mut parsed = Vec::new();
    for line in &lines {
        let body = line
            .strip_prefix("{\"re\":")
            .and_then(|s| s.strip_suffix("}"))
            .unwrap();
        let (re, im) = body.split_once(",\"im\":").unwrap();
        parsed.push((re.parse::<i64>().unwrap(), im.parse::<i64>().unwrap()));
    }
    let mut sorted = parsed.clone();
    sorted.sort();
    assert_eq!(parsed, sorted, "output not sorted by (re, im)");
}

#[test]
fn enumerate_writes_identical_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s2.jsonl");
    let via_stdout = stdout(&["enumerate", "S", "2", "-"]);
    let out = gaussphi(&["enumerate", "S", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), via_stdout);
    assert_eq!(via_stdout.lines().count(), 44);
}

#[test]
fn preimage_level_one_has_twelve_lines() {
    let text = stdout(&["preimage", "1", "-"]);
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn count_matches_table_columns() {
    assert_eq!(stdout(&["count", "s", "2"]), "44\n");
    assert_eq!(stdout(&["count", "b", "8"]), "6457\n");
    assert_eq!(stdout(&["count", "preimage", "25"]), "469680132\n");
}

#[test]
fn table_small_prefix() {
    assert_eq!(
        stdout(&["table", "2"]),
        "n,s_size,b_size,preimage_size\n0,4,5,5\n1,16,17,12\n2,44,49,32\n"
    );
}

#[test]
fn verify_lenstra_reports_sizes_and_passes() {
    let text = stdout(&["verify-lenstra", "2"]);
    assert!(text.contains("level 0: oracle 5, region 5, PASS"));
    assert!(text.contains("level 1: oracle 17, region 17, PASS"));
    assert!(text.contains("level 2: oracle 49, region 49, PASS"));
    assert!(text.contains("verify-lenstra: PASS"));
}

#[test]
fn unwritable_output_path_exits_with_code_one() {
    let out = gaussphi(&["table", "3", "--out", "/nonexistent-dir/t.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("i/o error"));
}

#[test]
fn cap_violations_exit_with_code_two() {
    let out = gaussphi(&["enumerate", "B", "31", "-"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gaussphi(&["verify-lenstra", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gaussphi(&["preimage", "4", "-", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn render_svg_has_one_cell_per_member() {
    let text = stdout(&["render", "B", "2"]);
    assert_eq!(text.matches("<rect ").count(), 49);
    let text = stdout(&["render", "S", "0"]);
    assert_eq!(text.matches("<rect ").count(), 4);
}

#[test]
fn render_pgm_raster_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oct2.pgm");
    let out = gaussphi(&[
        "render",
        "Oct",
        "2",
        "--format",
        "pgm",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bytes = std::fs::read(&path).unwrap();
    let header = b"P5\n9 9\n255\n";
    assert!(bytes.starts_with(header));
    assert_eq!(bytes.len(), header.len() + 81);
    let pixels = &bytes[header.len()..];
    assert_eq!(pixels.iter().filter(|&&p| p == 255).count(), 57); // |Oct_2|
                                                                  // the corners violate |re| + |im| <= 5, so the shape is an octagon
    for corner in [0, 8, 72, 80] {
        assert_eq!(pixels[corner], 0);
    }
    assert_eq!(pixels[4 * 9 + 4], 255); // the origin is a member of Oct_2
}

#[test]
fn bench_counts_agree_across_strategies() {
    let text = stdout(&["bench", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,strategy,wall_time,result"));
    let mut by_level: Vec<Vec<u128>> = vec![Vec::new(); 4];
    for line in lines {
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        let n: usize = fields[0].parse().unwrap();
        by_level[n].push(fields[3].parse().unwrap());
    }
    for (n, counts) in by_level.iter().enumerate() {
        assert_eq!(counts.len(), 3, "expected three strategies at n = {n}");
        assert!(counts.windows(2).all(|p| p[0] == p[1]));
    }
    assert_eq!(by_level[3][0], 76);
}

#[test]
fn commands_are_deterministic() {
    for args in [
        &["enumerate", "B", "3", "-"][..],
        &["expand", "9", "-4"],
        &["render", "D", "2"],
        &["table", "10"],
    ] {
        assert_eq!(stdout(args), stdout(args), "nondeterministic: {args:?}");
    }
}

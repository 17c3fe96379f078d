use std::path::PathBuf;
use std::process::Command;

use ncgraded::io::{parse_algebra, parse_color_lie, write_algebra, write_color_lie};
use ncgraded::{QColorLie, QPresentation};
use ncgraded_cli::dispatch;

fn fixtures_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"].iter().collect()
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(name).display().to_string()
}

fn fixture_files(ext: &str) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    v.sort();
    v
}

fn ncgraded(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ncgraded")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn hilbert_of_downup_4_4() {
    let r = dispatch(["ncgraded", "hilbert", &fixture("downup_4_-4.alg"), "--max-degree", "6"]);
    assert_eq!(r.field("dims"), Some("1, 2, 4, 6, 9, 12, 16"));
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn torsionfree_length_4_is_empty() {
    let (code, out) = ncgraded(&["torsionfree", &fixture("downup_4_-4.alg"), "--g", "x*y-2*y*x", "--length", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: empty\n"), "{out}");
}

#[test]
fn bad_jacobi_is_a_mathematical_failure() {
    let (code, out) = ncgraded(&["color-check", &fixture("bad_jacobi.cl")]);
    assert_eq!(code, 1);
    assert!(out.contains("violation: Jacobi identity fails"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ncgraded(&["frobnicate"]).0, 2);
    assert_eq!(ncgraded(&["hilbert"]).0, 2);
    assert_eq!(ncgraded(&["hilbert", "/no/such/file.alg"]).0, 2);
    // A relation in an undeclared generator, reported with its position.
    let dir = std::env::temp_dir().join(format!("ncgraded-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(&bad, "generators: x, y\nscalar: rational\nx*z\n").unwrap();
    let (code, out) = ncgraded(&["hilbert", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("bad.alg:3:3: unknown generator"), "{out}");
    // A tiny word budget is a resource error, not a failed check.
    let (code, out) = ncgraded(&["hilbert", &fixture("free2.alg"), "--max-degree", "12", "--budget", "100"]);
    assert_eq!(code, 2, "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_exits_0() {
    let (code, out) = ncgraded(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["hilbert", "torsionfree", "heisenberg-extract", "koszul"] {
        assert!(out.contains(sub), "{out}");
    }
}

#[test]
fn witness_is_found_when_not_given() {
    let r = dispatch(["ncgraded", "heisenberg", &fixture("d21.alg"), "--g", "x^2*y + 2*x*y*x + y*x^2"]);
    assert_eq!(r.exit_code(), 0, "{}", r.render());
    assert_eq!(r.field("u"), Some("-1"));
}

#[test]
fn non_normal_g_fails_with_exit_1() {
    let r = dispatch([
        "ncgraded",
        "torsionfree",
        &fixture("downup_4_-4.alg"),
        "--g",
        "x^2*y - 2*x*y*x + y*x^2",
        "--length",
        "4",
    ]);
    assert_eq!(r.exit_code(), 1, "{}", r.render());
}

#[test]
fn point_extend_reports_fiber() {
    // On the quantum plane xy = 2yx, after (1:0) the fiber is cut out by p_y = 0.
    let r = dispatch(["ncgraded", "point-extend", &fixture("qplane_2.alg"), "--points", "(1:0)"]);
    assert_eq!(r.field("fiber"), Some("single point (1:0)"), "{}", r.render());
    let r = dispatch(["ncgraded", "point-extend", &fixture("qplane_2.alg"), "--points", "(1:0),(0:1)"]);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn heisenberg_extract_passes_on_color_fixtures() {
    for f in ["heisenberg_1.cl", "heisenberg_2.cl", "heisenberg_1_3.cl"] {
        let r = dispatch(["ncgraded", "heisenberg-extract", &fixture(f)]);
        assert_eq!(r.exit_code(), 0, "{}", r.render());
    }
    // Abelian: n_L = 1, nothing to extract.
    let r = dispatch(["ncgraded", "heisenberg-extract", &fixture("abelian2.cl")]);
    assert_eq!(r.exit_code(), 2);
}

#[test]
fn reports_are_byte_identical() {
    let cases: [&[&str]; 3] = [
        &["compare", "uheis_2.alg", "qplane_2.alg", "--length", "3", "--samples", "40", "--seed", "7"],
        &["torsionfree", "downup_4_-4.alg", "--g", "x*y-2*y*x", "--length", "3", "--samples", "30", "--generic"],
        &["stabilize", "downup_2_-1.alg", "--from", "2", "--to", "5", "--samples", "20", "--seed", "3"],
    ];
    for case in cases {
        let args: Vec<String> = case
            .iter()
            .map(|a| if a.ends_with(".alg") { fixture(a) } else { a.to_string() })
            .collect();
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (c1, a) = ncgraded(&refs);
        let (c2, b) = ncgraded(&refs);
        assert_eq!((c1, &a), (c2, &b));
        assert!(a.contains("sha256:"));
    }
}

#[test]
fn different_seeds_change_samples() {
    let run = |seed: &str| {
        dispatch([
            "ncgraded",
            "compare",
            &fixture("downup_2_-1.alg"),
            &fixture("free2.alg"),
            "--length",
            "2",
            "--samples",
            "5",
            "--seed",
            seed,
        ])
        .render()
    };
    assert_ne!(run("1"), run("2"));
}

#[test]
fn algebra_fixtures_round_trip() {
    let files = fixture_files("alg");
    assert!(files.len() >= 7);
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        let p: QPresentation = parse_algebra(&text).unwrap();
        let q: QPresentation = parse_algebra(&write_algebra(&p)).unwrap();
        assert_eq!(p, q, "{}", f.display());
    }
}

#[test]
fn color_fixtures_round_trip() {
    let files = fixture_files("cl");
    assert!(files.len() >= 6);
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        let l: QColorLie = parse_color_lie(&text).unwrap();
        let once = write_color_lie(&l);
        let m: QColorLie = parse_color_lie(&once).unwrap();
        assert_eq!(l.names(), m.names(), "{}", f.display());
        assert_eq!(l.degrees(), m.degrees());
        assert_eq!(l.bicharacter(), m.bicharacter());
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                assert_eq!(l.bracket_basis(i, j), m.bracket_basis(i, j), "{} [{i},{j}]", f.display());
            }
        }
        assert_eq!(write_color_lie(&m), once);
    }
}

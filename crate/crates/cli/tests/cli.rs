use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use twotangle::movie::{Cell, Movie, Sheet};
use twotangle::{MorGen, Slice};

fn t2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_t2"))
        .args(args)
        .env_remove("T2_CATALOG")
        .output()
        .expect("t2 runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_sphere() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sphere.t2", "# a sphere\nv(i(cap), dual(i(cap)))\n");
    let o = t2(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1_I ⇒ 1_I\n");
}

#[test]
fn check_reports_parse_position() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.t2", "v(W,\n   nope)");
    let o = t2(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2:4"), "{err}");
}

#[test]
fn ill_typed_term_exits_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.t2", "cap ; cap ; pos");
    assert_eq!(t2(&["check", s(&f)]).status.code(), Some(2));
    let g = write(&dir, "worse.t2", "v(W, W)");
    assert_eq!(t2(&["check", s(&g)]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(t2(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(t2(&["check", "/nonexistent/file.t2"]).status.code(), Some(1));
    assert_eq!(t2(&["enumerate", "--sheets", "0"]).status.code(), Some(1));
    assert_eq!(t2(&["--help"]).status.code(), Some(0));
}

#[test]
fn zigzag_sides_are_one_step_apart() {
    let dir = TempDir::new().unwrap();
    let lhs = write(&dir, "zig_lhs.t2", "v(h(i(cap), id2(cap)), h(id2(cap), e(cap)))");
    let rhs = write(&dir, "zig_rhs.t2", "id2(cap)");
    let o = t2(&["eq", s(&lhs), s(&rhs), "--depth", "1"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.starts_with("equal in 1 step\n"), "{out}");
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn unknown_verdict_exits_three() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.t2", "v(W, dual(W))");
    let b = write(&dir, "b.t2", "id2(cap)");
    let o = t2(&["eq", s(&a), s(&b), "--depth", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "unknown within depth 0\n");
    let c = write(&dir, "c.t2", "W");
    assert_eq!(t2(&["eq", s(&a), s(&c)]).status.code(), Some(2));
}

#[test]
fn eval_circle_and_sphere() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "id3.t2m", "dim 3\nform\n1 0 0\n0 1 0\n0 0 1\n");
    let circle = write(&dir, "circle.t2", "cap ; cup");
    let o = t2(&["eval", s(&circle), "--model", s(&m)]);
    assert_eq!(stdout(&o), "[3]\n");
    let sphere = write(&dir, "sphere.t2", "v(i(cap), dual(i(cap)))");
    let o = t2(&["eval", s(&sphere), "--model", s(&m)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scalar: 1\npass\n"));
    let o = t2(&["eval", s(&sphere), "--model", s(&m), "--tolerance", "1e-9"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn eval_failure_exits_three() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "id2.t2m", "dim 2\nform\n1 0\n0 1\n");
    let cell = write(&dir, "icap.t2", "i(cap)");
    let o = t2(&["eval", s(&cell), "--model", s(&m)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).ends_with("fail\n"));
}

#[test]
fn bad_model_file_exits_two() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "sing.t2m", "dim 2\nform\n1 1\n1 1\n");
    let circle = write(&dir, "circle.t2", "cap ; cup");
    assert_eq!(t2(&["eval", s(&circle), "--model", s(&m)]).status.code(), Some(2));
}

#[test]
fn nonsymmetric_form_fails_the_writhing_equation() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "bad_form.t2m", "dim 2\nform\n1 1\n0 1\n");
    let o = t2(&["verify-model", s(&m)]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FAIL") && l.contains("writhing-equation")));
    assert!(out.lines().any(|l| l.starts_with("PASS") && l.contains("zigzag-2cell")));
}

#[test]
fn verify_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "h.t2m", "dim 2\nform\n0 1\n1 0\n");
    let args = ["verify-model", s(&m), "--seed", "5", "--per-schema", "3", "--format", "json"];
    let (a, b) = (t2(&args), t2(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with(r#"{"schema":"t2/1","entries":[{"id":0,"#));
}

#[test]
fn extra_catalog_from_environment() {
    let dir = TempDir::new().unwrap();
    let cat = write(&dir, "extra.cat", "relation writhe-loop: v(W, dual(W)) = id2(cap)\n");
    let model = write(&dir, "h.t2m", "dim 2\nform\n0 1\n1 0\n");
    let run = |env: Option<&Path>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_t2"));
        c.args(["verify-model", s(&model), "--per-schema", "1"]);
        match env {
            Some(p) => c.env("T2_CATALOG", p),
            None => c.env_remove("T2_CATALOG"),
        };
        c.output().unwrap()
    };
    assert!(!stdout(&run(None)).contains("writhe-loop"));
    assert!(stdout(&run(Some(&cat))).contains("PASS"));
    assert!(stdout(&run(Some(&cat))).contains(" writhe-loop "));
    let broken = write(&dir, "broken.cat", "relation x: W =\n");
    assert_eq!(run(Some(&broken)).status.code(), Some(2));
}

#[test]
fn render_ascii_and_svg() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "circle.t2", "cap ; cup");
    assert_eq!(stdout(&t2(&["render", s(&f)])), "\n/-\\\n| |\n\\-/\n\n");
    let svg = stdout(&t2(&["render", s(&f), "--svg"]));
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let w = write(&dir, "w.t2", "W");
    let movie = stdout(&t2(&["render", s(&w)]));
    assert_eq!(movie.matches("-- frame").count(), 2);
}

#[test]
fn normalize_is_idempotent() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "t.t2", "h(W, id2(cap))");
    let once = stdout(&t2(&["normalize", s(&f)]));
    let g = write(&dir, "u.t2", &once);
    assert_eq!(stdout(&t2(&["normalize", s(&g)])), once);
}

const WIDTH: usize = 3;

fn frames_fit(m: &Movie) -> bool {
    m.frames().iter().all(|f| f.max_width() <= WIDTH)
}

/// Elementary cells built directly from the generators, with every whisker
/// placement and orientation.
fn oracle_sheets() -> Vec<Sheet> {
    let gens = [MorGen::Cap, MorGen::Cup, MorGen::Pos, MorGen::Neg];
    let mut cells = Vec::new();
    for f in gens {
        for g in gens {
            for gap in 0..=WIDTH {
                cells.push(Cell::Tensor { f, gap, g });
            }
        }
    }
    for gen in gens {
        for left in 0..=WIDTH {
            for right in 0..=WIDTH {
                let s = Slice::new(left, gen, right);
                cells.push(Cell::BraidZf(s));
                cells.push(Cell::BraidfZ(s));
            }
        }
        cells.push(Cell::Unit(gen));
    }
    cells.push(Cell::Triangulator);
    cells.push(Cell::Writhe);
    let mut sheets = Vec::new();
    for cell in cells {
        for left in 0..=WIDTH {
            for right in 0..=WIDTH {
                for flipped in [false, true] {
                    let sheet = Sheet {
                        left,
                        right,
                        at: 0,
                        cell: cell.clone(),
                        flipped,
                    };
                    if sheet.source().max_width() <= WIDTH && sheet.target().max_width() <= WIDTH {
                        sheets.push(sheet);
                    }
                }
            }
        }
    }
    sheets
}

#[test]
fn enumerate_two_sheets_matches_nested_loop() {
    let sheets = oracle_sheets();
    let mut movies = BTreeSet::new();
    for a in &sheets {
        let one = Movie::new(a.source(), vec![a.clone()]).unwrap();
        let frame = one.target();
        movies.insert(one);
        for b in &sheets {
            for at in 0..=frame.len() {
                let placed = Sheet { at, ..b.clone() };
                if let Ok(m) = Movie::new(a.source(), vec![a.clone(), placed]) {
                    if frames_fit(&m) {
                        movies.insert(m);
                    }
                }
            }
        }
    }
    let o = t2(&["enumerate", "--sheets", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: BTreeSet<&str> = out.lines().collect();
    assert_eq!(lines.len(), out.lines().count(), "duplicate lines");
    assert_eq!(out.lines().count(), movies.len());
}

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn fsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsing"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// A manifest file under the target dir, removed on drop.
struct Manifest(PathBuf);

impl Manifest {
    fn path(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for Manifest {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn manifest(text: &str) -> Manifest {
    static NEXT: AtomicUsize = AtomicUsize::new(0);
    let name = format!("m{}-{}.toml", std::process::id(), NEXT.fetch_add(1, Ordering::SeqCst));
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    Manifest(path)
}

const EX32: &str = r#"
p = 2
vars = ["x", "y", "z"]
weights = [15, 10, 6]
relations = ["x^2 + y^3 + z^5"]
"#;

#[test]
fn passing_manifest_exits_zero() {
    let m = manifest(&format!("{EX32}\n[[check]]\nkind = \"ainv\"\nexpect = -1\n"));
    let out = fsing(&["run", m.path()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["passed"], 1);
    assert_eq!(report["checks"][0]["value"], -1);
}

#[test]
fn mismatch_exits_one() {
    let m = manifest(&format!("{EX32}\n[[check]]\nkind = \"ainv\"\nexpect = 0\n"));
    assert_eq!(fsing(&["run", m.path()]).status.code(), Some(1));
}

#[test]
fn undefined_ring_is_a_usage_error_with_location() {
    let m = manifest(&format!("{EX32}\n[[check]]\nkind = \"ainv\"\nring = \"nope\"\n"));
    let out = fsing(&["run", m.path()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("nope") && err.contains("line"), "{err}");
}

#[test]
fn empty_manifest_is_an_empty_report() {
    let m = manifest("");
    let out = fsing(&["run", m.path()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["total"], 0);
}

#[test]
fn parse_errors_exit_two() {
    let out = fsing(&["member", "--vars", "x,y", "--p", "3", "x^", "--ideal", "y"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(fsing(&["corpus", "ex9.9"]).status.code(), Some(2));
    assert_eq!(fsing(&["run", "/nonexistent/manifest.toml"]).status.code(), Some(2));
}

#[test]
fn corpus_json_is_deterministic() {
    let a = fsing(&["corpus", "ex3.2"]);
    let b = fsing(&["corpus", "ex3.2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("millis"));
    let timed = fsing(&["--timings", "corpus", "ex3.2"]);
    assert!(String::from_utf8_lossy(&timed.stdout).contains("millis"));
}

#[test]
fn corpus_lists_ids() {
    let out = fsing(&["corpus", "--list"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for id in ["ex3.2", "ex7.3", "props"] {
        assert!(text.contains(id), "{text}");
    }
}

#[test]
fn single_commands() {
    let ring = ["--vars", "x,y,z", "--weights", "15,10,6", "--rel", "x^2 + y^3 + z^5"];
    let run = |extra: &[&str]| {
        let mut args: Vec<&str> = extra.to_vec();
        args.extend_from_slice(&ring);
        let out = fsing(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        String::from_utf8(out.stdout).unwrap()
    };
    assert!(run(&["--p", "2", "fclosure", "x", "--ideal", "y", "--ideal", "z"]).starts_with("true"));
    assert!(run(&["--p", "7", "fedder"]).starts_with("true"));
    assert!(run(&["--p", "2", "ainv"]).starts_with("-1"));
    let json: serde_json::Value = serde_json::from_str(&run(&[
        "--p", "2", "--json", "member", "x^2", "--ideal", "y^2", "--ideal", "z^2",
    ]))
    .unwrap();
    assert_eq!(json["checks"][0]["value"], true);
}

#[test]
fn divisor_command() {
    let out = fsing(&[
        "divisor",
        "VS=-1/2,VT=1/3,VST=1/5",
        "--same-class",
        "VS=1/2,VT=1/3,VST=1/5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("true"));
}

use std::process::{Command, Output};

fn pnsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnsym")).args(args).output().expect("spawn pnsym")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let o = pnsym(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn element_commands() {
    assert_eq!(ok(&["imul", "F((1,1);[2,1])", "F((1,1);[2,1])"]), "F((1,1);[1,2]) + F((1,1);[2,1])");
    assert_eq!(ok(&["mul", "F(();[])", "F((2);[1])"]), "F((2);[1])");
    assert_eq!(ok(&["antipode", "F((1);[1])"]), "-F((1);[1])");
    assert_eq!(ok(&["antipode", "F((2);[1])"]), "-F((2);[1]) + F((1,1);[1,2])");
    assert_eq!(ok(&["mul", "F((1);[1])", "F((2);[1])", "F((1);[1])"]), "F((1,2,1);[1,2,3])");
    assert_eq!(ok(&["coproduct", "F((1);[1])"]), "F(();[]) (x) F((1);[1]) + F((1);[1]) (x) F(();[])");
}

#[test]
fn reduce_and_rank() {
    assert_eq!(ok(&["reduce", "((3,0,1,2,0);[4,5,1,3,2])"]), "((3,1,2);[3,1,2])");
    assert_eq!(ok(&["reduce", "((3,0,1,2,0);[4,1,3,2,5])"]), "((3,1,2);[3,2,1])");
    assert_eq!(ok(&["reduce", "((1);[1])"]), "((1);[1])");
    assert_eq!(ok(&["rank", "7"]), "11743");
}

#[test]
fn check_exit_codes() {
    let o = pnsym(&["check", "(p1*p2 - p2*p1)^5", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "holds");
    let o = pnsym(&["check", "(p1*p2 - p2*p1)^4", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fails: "));
    let o = pnsym(&["check", "(p1*p2 - q1)", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 9: unknown atom 'q'"), "{err}");
    assert!(err.contains("\n           ^"), "{err}");
}

#[test]
fn parse_failures_exit_2() {
    for args in [
        vec!["imul", "F((1,1);[2,1]", "F((1);[1])"],
        vec!["reduce", "((1,2);[1])"],
        vec!["antipode", "G((1);[1])"],
        vec!["rank", "-1"],
        vec!["check", "p1 ^ -1", "--degree", "1"],
    ] {
        let o = pnsym(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn ktable() {
    assert_eq!(ok(&["ktable", "1", "3", "--max", "10"]), "7");
    let o = pnsym(&["ktable", "1", "3", "--max", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(ok(&["--json", "ktable", "0", "5"]), r#"{"i":0,"j":5,"k":1,"max":15}"#);
}

#[test]
fn json_output() {
    assert_eq!(
        ok(&["--json", "imul", "F((1,1);[2,1])", "F((1,1);[2,1])"]),
        r#"[{"coeff":"1","alpha":[1,1],"sigma":[1,2]},{"coeff":"1","alpha":[1,1],"sigma":[2,1]}]"#
    );
    let json_in = r#"[{"coeff":"1/2","alpha":[1],"sigma":[1]}]"#;
    assert_eq!(ok(&["antipode", json_in]), "-1/2*F((1);[1])");
    assert_eq!(ok(&["--json", "rank", "4"]), r#"{"n":4,"rank":"49"}"#);
    assert_eq!(ok(&["--json", "reduce", "((0,2);[2,1])"]), r#"{"alpha":[2],"sigma":[1]}"#);
    let v = ok(&["--json", "check", "(p1*p2 - p2*p1)^5", "--degree", "3"]);
    assert!(v.contains(r#""holds":true"#), "{v}");
}

#[test]
fn deterministic_output_and_threads() {
    let args = ["imul", "F((1,2);[1,2]) - F((2,1);[1,2])", "F((1,1,1);[3,1,2]) + 2*F((2,1);[2,1])"];
    let a = pnsym(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_pnsym")).args(args).env("PNSYM_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn verify_small() {
    let out = ok(&["verify", "--model-size", "3", "--max-size", "2"]);
    assert!(out.lines().all(|l| l.starts_with("ok")), "{out}");
    assert!(out.contains("composition-formula"));
}

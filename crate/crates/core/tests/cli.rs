use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyck-peaks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gamma_golden() {
    let o = run(&["map", "--bijection", "gamma", "UUDUUDDDDDUUDUUUDUDD"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, b"DDUDUUDUUDUUDDDDUDUU\n");
}

#[test]
fn not_in_image() {
    let o = run(&["map", "--bijection", "f-inv", "UDDUUD"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotInImage"));
}

#[test]
fn map_round_trips_through_the_inverse_name() {
    for (name, inv, word) in [
        ("f", "f-inv", "UDDDUDUUUD"),
        ("g", "g-inv", "UDDUUDUD"),
        ("cf-phi", "cf-phi-inv", "DUUDDUDU"),
        ("tau", "tau-inv", "UDDUUD"),
        ("gamma", "gamma", "UDDDUU"),
    ] {
        let there = stdout(&run(&["map", "--bijection", name, word]));
        let back = stdout(&run(&["map", "--bijection", inv, there.trim()]));
        assert_eq!(back.trim(), word, "{name}");
    }
}

#[test]
fn stats_json() {
    let o = run(&["stats", "DUUD"]);
    assert_eq!(
        stdout(&o),
        "{\"n\":2,\"m\":1,\"peaks\":1,\"valleys\":1,\"double_ascents\":1,\"double_descents\":0,\"first\":\"D\",\"last\":\"D\"}\n"
    );
}

#[test]
fn census_is_stable_and_written_to_file() {
    let a = run(&["census", "--n", "5"]);
    let b = run(&["census", "--n", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.csv");
    let o = run(&[
        "census",
        "--n",
        "2",
        "--format",
        "csv",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&file).unwrap();
    assert!(csv.starts_with("n,m,k,first,last,count\n2,0,1,U,D,1\n"));
}

#[test]
fn word_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.txt");
    std::fs::write(&file, "UUDUUDDDDDUUDUUUDUDD\n").unwrap();
    let o = run(&[
        "map",
        "--bijection",
        "gamma",
        "--in",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.stdout, b"DDUDUUDUUDUUDDDDUDUU\n");
}

#[test]
fn render_svg_and_ascii() {
    let o = run(&["render", "UDDU", "--format", "svg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("<svg"));
    let o = run(&["render", "UUDD", "--format", "ascii"]);
    assert_eq!(stdout(&o), "*_ _\n|. /\n|/ .\n");
}

#[test]
fn verify_identities() {
    let o = run(&["verify", "--identity", "all", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 10);
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn usage_errors() {
    assert_eq!(
        run(&["verify", "--identity", "eq9", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(
        run(&["render", "UD", "--format", "png"]).status.code(),
        Some(2)
    );
}

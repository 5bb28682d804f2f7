use std::fs;
use std::path::{Path, PathBuf};

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str]) -> u8 {
    cli::main_with(std::iter::once("wavebench").chain(args.iter().copied()))
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(path: PathBuf) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn airy_table_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    let cfg = configs().join("airy-table.ini");
    for out in [&a, &b] {
        assert_eq!(run(&["airy-table", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]), 0);
    }
    let (ta, tb) = (fs::read(a.join("airy_table.json")).unwrap(), fs::read(b.join("airy_table.json")).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["result"]["zeros"].as_array().unwrap().len(), 50);
    assert_eq!(v["config"]["k"], 50);
    assert_eq!(v["build"], cli::BUILD_ID);
}

#[test]
fn airy_table_first_zeros() {
    let tmp = tempfile::tempdir().unwrap();
    assert_eq!(run(&["airy-table", "--k", "3", "--out", tmp.path().to_str().unwrap()]), 0);
    let v = json(tmp.path().join("airy_table.json"));
    let z: Vec<f64> = v["result"]["zeros"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (got, want) in z.iter().zip([2.338107410459767, 4.08794944413097, 5.520559828095551]) {
        assert!((got - want).abs() < 1e-13);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().to_str().unwrap();
    assert_eq!(run(&["airy-table", "--k", "0", "--out", out]), 2);
    assert_eq!(run(&["green", "--out", out]), 2);
    assert_eq!(run(&["no-such-command"]), 2);
    assert_eq!(run(&["airy-table", "--k", "3", "--workers", "0", "--out", out]), 2);
    let unknown = write_config(tmp.path(), "u.ini", "[airy]\nk = 3\nkk = 4\n");
    assert_eq!(run(&["airy-table", "--config", &unknown, "--out", out]), 2);
    let missing = tmp.path().join("nope.ini");
    assert_eq!(run(&["phase", "--config", missing.to_str().unwrap(), "--out", out]), 2);
}

#[test]
fn nyquist_violation_is_a_config_error() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "g.ini",
        "[params]\nh = 2^-5\na = 0.25\n[grid]\nt = 0 : 0.5\nt_step = 0.1\nx = 0.25\ny = 0\n",
    );
    assert_eq!(run(&["green", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 2);
}

#[test]
fn caustic_out_of_range_is_a_domain_error() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "c.ini", "[params]\nh = 2^-10\na = 0.25\n[caustics]\nn = 5\n");
    assert_eq!(run(&["caustics", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 3);
    let free = write_config(tmp.path(), "f.ini", "[params]\nh = 2^-10\na = 0.25\n[caustics]\nn = 5\nunrestricted = true\n");
    assert_eq!(run(&["caustics", "--config", &free, "--out", tmp.path().to_str().unwrap()]), 0);
}

#[test]
fn missed_tolerance_exits_with_four() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "c.ini",
        "[params]\nh = 2^-6\na = 0.25\n[grid]\nt = 0.3\nx = 0.2\ny = -0.5 : 0.5\n[compare]\ntolerance = 1e-30\n",
    );
    assert_eq!(run(&["compare", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 4);
    let v = json(tmp.path().join("compare.json"));
    assert_eq!(v["result"]["passed"], false);
}

#[test]
fn green_field_dump() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs().join("green.ini");
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for out in [&a, &b] {
        assert_eq!(run(&["green", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "--seed", "5"]), 0);
    }
    let csv = fs::read_to_string(a.join("green.csv")).unwrap();
    assert!(csv.starts_with("t,x,y,re,im\n"));
    assert_eq!(csv, fs::read_to_string(b.join("green.csv")).unwrap());
    assert_eq!(fs::read(a.join("green.json")).unwrap(), fs::read(b.join("green.json")).unwrap());
    let v = json(a.join("green.json"));
    assert_eq!(v["seed"], 5);
    assert_eq!(v["config"]["grid"]["y"][0]["step"], 2f64.powi(-6) / 8.0);
    assert_eq!(v["result"]["truncation"]["method"], "spectral");
    assert_eq!(v["result"]["samples"].as_u64().unwrap() as usize + 1, csv.lines().count());
}

#[test]
fn images_field_dump_has_energy_table() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "g.ini",
        "[params]\nh = 2^-5\na = 0.25\n[grid]\nt = 0.4\nx = 0.1, 0.2\ny = -0.5 : 0.5\n[field]\nmethod = images\n",
    );
    assert_eq!(run(&["green", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 0);
    let e = fs::read_to_string(tmp.path().join("green_energies.csv")).unwrap();
    assert!(e.starts_with("n,sup,mean_square\n"));
    assert!(e.lines().count() > 2);
}

#[test]
fn compare_at_reference_parameters() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs().join("compare.ini");
    assert_eq!(run(&["compare", "--config", cfg.to_str().unwrap(), "--out", tmp.path().to_str().unwrap()]), 0);
    let v = json(tmp.path().join("compare.json"));
    assert!(v["result"]["report"]["rel_linf"].as_f64().unwrap() <= 1e-3);
}

#[test]
fn caustics_report() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs().join("caustics.ini");
    assert_eq!(run(&["caustics", "--config", cfg.to_str().unwrap(), "--out", tmp.path().to_str().unwrap()]), 0);
    let v = json(tmp.path().join("caustics.json"));
    let ev = v["result"]["events"].as_array().unwrap();
    assert_eq!(ev.len(), 5);
    for (i, e) in ev.iter().enumerate() {
        let law = 0.4 * (i + 1) as f64;
        assert!((e["t_n"].as_f64().unwrap() - law).abs() <= 0.2 * law);
    }
    let cloud = fs::read_to_string(tmp.path().join("caustics_lagrangian.csv")).unwrap();
    assert!(cloud.starts_with("n,s,t_script,x,t,y\n"));
}

#[test]
fn decay_on_the_power_law_fixture() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs().join("decay-fixture.ini");
    assert_eq!(run(&["decay", "--config", cfg.to_str().unwrap(), "--out", tmp.path().to_str().unwrap()]), 0);
    let v = json(tmp.path().join("decay.json"));
    assert!((v["result"]["fit"]["fitted_exponent"].as_f64().unwrap() - 0.5).abs() < 1e-9);
    let csv = fs::read_to_string(tmp.path().join("decay.csv")).unwrap();
    assert!(csv.starts_with("t,sup,x,y\n"));
    assert_eq!(csv.lines().count(), 9);
}

#[test]
fn short_fixture_is_a_domain_error() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("f.csv"), "t,sup\n0.1,1\n0.2,0.5\n0.3,0.3\n").unwrap();
    let cfg = write_config(tmp.path(), "d.ini", "[params]\nh = 2^-10\na = 0.25\n[scan]\nmode = fixture\nfixture = f.csv\n");
    assert_eq!(run(&["decay", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 3);
}

#[test]
fn phase_on_the_flat_model_is_exact() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), "p.ini", "[phase]\nmetric = friedlander\nsamples = 20\n");
    assert_eq!(run(&["phase", "--config", &cfg, "--out", tmp.path().to_str().unwrap()]), 0);
    let v = json(tmp.path().join("phase.json"));
    assert_eq!(v["result"]["status"], "exact");
    assert_eq!(v["result"]["jets_zero"], true);
    assert!(v["result"]["control"].is_null());
}

#[test]
fn phase_certificate_is_seeded() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs().join("phase.ini");
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for out in [&a, &b] {
        assert_eq!(run(&["phase", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]), 0);
    }
    assert_eq!(fs::read(a.join("phase.json")).unwrap(), fs::read(b.join("phase.json")).unwrap());
    let v = json(a.join("phase.json"));
    assert_eq!(v["seed"], 2);
    assert_eq!(v["result"]["status"], "passed");
    assert!(v["result"]["control"]["slope"].as_f64().unwrap() < 3.5);
    let c = tmp.path().join("c");
    assert_eq!(run(&["phase", "--config", cfg.to_str().unwrap(), "--out", c.to_str().unwrap(), "--seed", "3"]), 0);
    assert_eq!(json(c.join("phase.json"))["seed"], 3);
}

#[test]
fn config_syntax() {
    use cli::config::{parse_number, AxisSpec, Config};
    assert_eq!(parse_number("2^-8"), Some(2f64.powi(-8)));
    assert_eq!(parse_number(" 0.25 "), Some(0.25));
    assert_eq!(parse_number("abc"), None);
    let c = Config::parse(
        "# comment\n[s]\nn = 1..4\nl = 1, 2^2, 3\nq = [[1, 0.5], [0.5, 2]]\nr = -1 : 1\nk = auto\n",
        PathBuf::new(),
    )
    .unwrap();
    assert_eq!(c.int_list("s", "n").unwrap(), Some(vec![1, 2, 3, 4]));
    assert_eq!(c.list("s", "l").unwrap(), Some(vec![1.0, 4.0, 3.0]));
    assert_eq!(c.matrix("s", "q").unwrap(), Some(vec![vec![1.0, 0.5], vec![0.5, 2.0]]));
    assert_eq!(c.axis("s", "r").unwrap(), Some(AxisSpec::Range { lo: -1.0, hi: 1.0 }));
    assert_eq!(c.auto_usize("s", "k").unwrap(), None);
    c.finish().unwrap();
    assert!(Config::parse("[s]\nk = 1\nk = 2\n", PathBuf::new()).is_err());
    assert!(Config::parse("k = 1\n", PathBuf::new()).is_err());
    let left = Config::parse("[s]\nk = 1\n", PathBuf::new()).unwrap();
    assert!(left.finish().is_err());
}

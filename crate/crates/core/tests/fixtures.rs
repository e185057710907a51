use std::fs;
use std::path::Path;

use hyperlambda::combinatorics::is_k_tight;
use hyperlambda::fixtures::{export_fixtures, fixture_catalog, run_fixture};
use hyperlambda::io::parse;
use hyperlambda::SolveOptions;

fn committed() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn committed_files_match_catalog() {
    let tmp = std::env::temp_dir().join(format!("hyperlambda-fixtures-{}", std::process::id()));
    let written = export_fixtures(&tmp).unwrap();
    for path in &written {
        let name = path.file_name().unwrap();
        let fresh = fs::read(path).unwrap();
        let disk = fs::read(committed().join(name)).unwrap_or_else(|_| panic!("missing fixtures/{name:?}"));
        assert_eq!(fresh, disk, "fixtures/{name:?} is stale");
    }
    fs::remove_dir_all(&tmp).unwrap();
}

#[test]
fn committed_graphs_parse_back() {
    for f in fixture_catalog() {
        let bytes = fs::read(committed().join(format!("{}.json", f.name))).unwrap();
        assert_eq!(parse(&bytes).unwrap(), f.graph, "{}", f.name);
    }
}

#[test]
fn serial_and_parallel_outcomes_agree() {
    for f in fixture_catalog() {
        let par = run_fixture(&f, &SolveOptions { parallel: true, ..SolveOptions::default() }).unwrap();
        let ser = run_fixture(&f, &SolveOptions { parallel: false, ..SolveOptions::default() }).unwrap();
        assert!(par.passed, "{par:?}");
        assert_eq!(par, ser);
    }
}

#[test]
fn one_tight_iff_connected_on_fixtures() {
    for f in fixture_catalog() {
        let t = is_k_tight(&f.graph, 1).unwrap().tight;
        assert_eq!(t, hyperlambda::combinatorics::is_connected(&f.graph), "{}", f.name);
    }
}

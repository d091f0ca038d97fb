mod common;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use common::*;
use lie_yamaguti::algebra::{check_lts_axioms, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::cli::{run, EXIT_FAILURE, EXIT_INPUT, EXIT_OK};
use lie_yamaguti::field::Field;
use lie_yamaguti::io::{parse_algebra, write_algebra, write_bundle, Bundle};
use lie_yamaguti::linalg::Matrix;
use lie_yamaguti::matched_pair::MatchedPair;
use lie_yamaguti::representation::Representation;
use tempfile::TempDir;

fn lyctl(args: &[&str]) -> (i32, String) {
    run(std::iter::once("lyctl").chain(args.iter().copied()))
}

fn put(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn pair_bundle(mp: &MatchedPair, maps: &[(&str, Matrix)]) -> String {
    let mut b = Bundle::from_pair(mp);
    for (name, m) in maps {
        b.maps.insert(name.to_string(), m.clone());
    }
    write_bundle(&b)
}

fn graph_pair() -> MatchedPair {
    MatchedPair::semidirect(Representation::adjoint(nonabelian(gf(2), LieMode::IteratedBracket))).unwrap()
}

fn inclusion_bundle(mp: &MatchedPair) -> String {
    let inc = mp.block_inclusion().unwrap();
    let f = mp.field();
    let n = inc.ambient.dim();
    let mut algebras = BTreeMap::new();
    algebras.insert("ambient".to_string(), inc.ambient.clone());
    let mut maps = BTreeMap::new();
    maps.insert("g_span".to_string(), Matrix::from_columns(f, n, &inc.g_span));
    maps.insert("h_span".to_string(), Matrix::from_columns(f, n, &inc.h_span));
    write_bundle(&Bundle { field: f, algebras, repdim: None, actions: BTreeMap::new(), maps })
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_ly_reports_pass_and_fail() {
    let dir = TempDir::new().unwrap();
    let good = put(dir.path(), "good.ly", &write_algebra(&sl2(Field::Rational, LieMode::IteratedBracket)));
    assert_eq!(lyctl(&["check-ly", path(&good)]), (EXIT_OK, "passed".into()));
    let bad = put(dir.path(), "bad.ly", "format 1\nfield Q\ndim 3\nb 1 2 3 1\nb 1 3 1 1\n");
    let (code, text) = lyctl(&["check-ly", path(&bad)]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(text.starts_with("failed:"), "{text}");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let broken = put(dir.path(), "broken.ly", "format 1\nfield Q\ndim 2\nb 1 2 9 1\n");
    let (code, text) = lyctl(&["check-ly", path(&broken)]);
    assert_eq!(code, EXIT_INPUT);
    assert!(text.contains("line 4"), "{text}");
    assert_eq!(lyctl(&["check-ly", "/nonexistent/file.ly"]).0, EXIT_INPUT);
    assert_eq!(lyctl(&["no-such-command"]).0, EXIT_INPUT);
    let good = put(dir.path(), "good.ly", &write_algebra(&LieYamagutiAlgebra::zero(Field::Rational, 2)));
    assert_eq!(lyctl(&["--field", "GF 5", "check-ly", path(&good)]).0, EXIT_INPUT);
    assert_eq!(lyctl(&["--field", "Q", "check-ly", path(&good)]).0, EXIT_OK);
    assert_eq!(lyctl(&["--help"]).0, EXIT_OK);
}

#[test]
fn fixtures_dir_resolves_relative_paths() {
    let dir = TempDir::new().unwrap();
    put(dir.path(), "zero.ly", &write_algebra(&LieYamagutiAlgebra::zero(gf(3), 2)));
    assert_eq!(lyctl(&["--fixtures-dir", path(dir.path()), "check-ly", "zero.ly"]).0, EXIT_OK);
}

#[test]
fn matched_pair_commands() {
    let dir = TempDir::new().unwrap();
    let mp = graph_pair();
    let file = put(dir.path(), "pair.bundle", &pair_bundle(&mp, &[]));
    assert_eq!(lyctl(&["check-mp", path(&file)]), (EXIT_OK, "passed".into()));
    assert_eq!(lyctl(&["check-rep", path(&file)]).0, EXIT_OK);
    let (code, text) = lyctl(&["bicrossed", path(&file)]);
    assert_eq!(code, EXIT_OK);
    let ambient = put(dir.path(), "ambient.ly", &text);
    assert_eq!(lyctl(&["check-ly", path(&ambient)]).0, EXIT_OK);
    let inc = put(dir.path(), "inc.bundle", &inclusion_bundle(&mp));
    let (code, text) = lyctl(&["canonical-mp", path(&inc)]);
    assert_eq!(code, EXIT_OK, "{text}");
    let canonical = put(dir.path(), "canonical.bundle", &text);
    assert_eq!(lyctl(&["check-mp", path(&canonical)]).0, EXIT_OK);
}

#[test]
fn deformation_map_commands() {
    let dir = TempDir::new().unwrap();
    let mp = graph_pair();
    let f = mp.field();
    let zero = Matrix::zeros(f, 2, 2);
    let file = put(dir.path(), "zero.bundle", &pair_bundle(&mp, &[("r", zero)]));
    assert_eq!(lyctl(&["check-defmap", path(&file)]).0, EXIT_OK);
    let (code, text) = lyctl(&["enumerate-defmaps", path(&file)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("6 deformation maps"), "{text}");
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("r = ")).count(), 6);
    assert_eq!(lyctl(&["--budget", "4", "enumerate-defmaps", path(&file)]).0, EXIT_INPUT);
    let (code, text) = lyctl(&["defmap-cohomology", path(&file)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("H^0 = "), "{text}");
    let inc = put(dir.path(), "inc.bundle", &inclusion_bundle(&mp));
    let (code, text) = lyctl(&["classify-complements", path(&inc)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("factorization index 2"), "{text}");
    let identity = Matrix::identity(f, 2);
    let bad = put(dir.path(), "bad.bundle", &pair_bundle(&mp, &[("r", identity)]));
    let valid = lyctl(&["check-defmap", path(&bad)]).0;
    let expected = if lie_yamaguti::deformation::check_deformation_map(&mp, &Matrix::identity(f, 2)).unwrap().passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    assert_eq!(valid, expected);
}

#[test]
fn cohomology_of_the_iterated_algebra() {
    let dir = TempDir::new().unwrap();
    let file = put(dir.path(), "a.ly", &write_algebra(&nonabelian(Field::Rational, LieMode::IteratedBracket)));
    assert_eq!(lyctl(&["cohomology", path(&file)]), (EXIT_OK, "H^1 = 2\nH^2 = 1\nH^3 = 1".into()));
    assert_eq!(lyctl(&["--max-degree", "1", "cohomology", path(&file)]), (EXIT_OK, "H^1 = 2".into()));
}

#[test]
fn maurer_cartan_commands() {
    let dir = TempDir::new().unwrap();
    let q = Field::Rational;
    let good = put(dir.path(), "a.ly", &write_algebra(&nonabelian(q, LieMode::IteratedBracket)));
    let (code, text) = lyctl(&["mc-check", path(&good)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("maurer-cartan: yes"), "{text}");

    let mp = MatchedPair::semidirect(Representation::adjoint(nonabelian(q, LieMode::IteratedBracket))).unwrap();
    let valid: Vec<Matrix> =
        grid(q).into_iter().filter(|r| lie_yamaguti::deformation::check_deformation_map(&mp, r).unwrap().passed()).collect();
    let r = valid.iter().find(|r| !r.is_zero()).unwrap().clone();
    let invalid = grid(q).into_iter().find(|m| !valid.contains(m)).unwrap();
    let yes = put(dir.path(), "yes.bundle", &pair_bundle(&mp, &[("r", r.clone())]));
    assert_eq!(lyctl(&["mc-equation", path(&yes)]).0, EXIT_OK);
    assert_eq!(lyctl(&["derived-brackets", path(&yes)]).0, EXIT_OK);
    let no = put(dir.path(), "no.bundle", &pair_bundle(&mp, &[("r", invalid.clone())]));
    assert_eq!(lyctl(&["mc-equation", path(&no)]).0, EXIT_FAILURE);
    let twist = put(dir.path(), "twist.bundle", &pair_bundle(&mp, &[("r", r), ("r_prime", invalid)]));
    let (code, text) = lyctl(&["twist-check", path(&twist)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("twisting identity holds"), "{text}");

    let gf3_pair = MatchedPair::semidirect(Representation::adjoint(nonabelian(gf(3), LieMode::IteratedBracket))).unwrap();
    let gf3 = put(dir.path(), "gf3.bundle", &pair_bundle(&gf3_pair, &[("r", Matrix::zeros(gf(3), 2, 2))]));
    assert_eq!(lyctl(&["mc-equation", path(&gf3)]).0, EXIT_INPUT);
}

#[test]
fn triple_system_commands() {
    let dir = TempDir::new().unwrap();
    for text in ["format 1\nfield GF 2\ndim 2\nt 1 2 1 2 1\n", "format 1\nfield GF 2\ndim 2\nt 1 2 1 1 1\n"] {
        let expected = check_lts_axioms(parse_algebra(text).unwrap().ternary()).passed();
        let lts = put(dir.path(), "lts.ly", text);
        assert_eq!(lyctl(&["lts-check", path(&lts)]).0, if expected { EXIT_OK } else { EXIT_FAILURE });
    }
    let with_binary = put(dir.path(), "ly.ly", "format 1\nfield Q\ndim 2\nb 1 2 2 1\n");
    assert_eq!(lyctl(&["lts-check", path(&with_binary)]).0, EXIT_INPUT);
    let zero = LieYamagutiAlgebra::zero(gf(2), 2);
    let mp = MatchedPair::direct(zero.clone(), zero).unwrap();
    let mut bundle = Bundle::from_pair(&mp);
    bundle.actions.remove("rho");
    bundle.actions.remove("psi");
    bundle.maps.insert("r".into(), Matrix::identity(gf(2), 2));
    let file = put(dir.path(), "lts.bundle", &write_bundle(&bundle));
    assert_eq!(lyctl(&["lts-check-mp", path(&file)]).0, EXIT_OK);
    assert_eq!(lyctl(&["lts-check-defmap", path(&file)]).0, EXIT_OK);
    let inc = put(dir.path(), "inc.bundle", &inclusion_bundle(&mp));
    let (code, text) = lyctl(&["lts-classify-complements", path(&inc)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.starts_with("16 deformation maps"), "{text}");
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let inc = put(dir.path(), "inc.bundle", &inclusion_bundle(&graph_pair()));
    let first = lyctl(&["classify-complements", path(&inc)]);
    for _ in 0..3 {
        assert_eq!(lyctl(&["classify-complements", path(&inc)]), first);
    }
}

//! Acceptance suite: twelve criteria, each printing one PASS/FAIL line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use lie_yamaguti::algebra::{check_lts_axioms, BinaryBracket, LieMode, LieYamagutiAlgebra};
use lie_yamaguti::cochain::{basis_wedge, pair_count, Cochain};
use lie_yamaguti::cohomology::{coboundary, defmap_cohomology_dims, defmap_coboundary, defmap_d};
use lie_yamaguti::deformation::{
    check_deformation_map, classify_complements, crossed_homomorphism_pair, derivation_pair,
    enumerate_deformation_maps, graph_span, rota_baxter_pair, rota_baxter_weight_one_pair, DeformationMap,
};
use lie_yamaguti::field::Field;
use lie_yamaguti::graded::{delta_pi, mc_check_pi};
use lie_yamaguti::linalg::{Matrix, Vector};
use lie_yamaguti::linfty::{build_vdata, derived_brackets, twisted_complex_dims, LInftyStructure};
use lie_yamaguti::lts::{classify_lts_complements, LieTripleSystem, LtsMatchedPair, LtsRepresentation};
use lie_yamaguti::matched_pair::{check_action_conditions, MatchedPair};
use lie_yamaguti::representation::Representation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: u128 = 1 << 20;

/// Complement-class count of the graph-characterization instance, frozen after the first run.
const CENSUS_INDEX: usize = 2;

type Outcome = Result<String, String>;

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

/// Dims (2, 2) semidirect product of `[e1, e2] = e2` (iterated ternary) with its adjoint, over GF(2).
fn graph_instance() -> MatchedPair {
    MatchedPair::semidirect(Representation::adjoint(nonabelian(gf(2), LieMode::IteratedBracket))).unwrap()
}

fn graph_instance_maps() -> Vec<DeformationMap> {
    enumerate_deformation_maps(&graph_instance(), BUDGET).unwrap()
}

fn axiom_equivalence() -> Outcome {
    let tables = gf2_dim2_tables();
    let mut valid = 0;
    for (b, t) in &tables {
        let axioms = LieYamagutiAlgebra::new(b.clone(), t.clone()).unwrap().check_axioms().passed();
        ensure(mc_check_pi(b, t) == axioms, || format!("disagreement on {b:?} {t:?}"))?;
        valid += axioms as usize;
    }
    Ok(format!("{} tables, {valid} algebras", tables.len()))
}

fn small_algebras(f: Field) -> Vec<LieYamagutiAlgebra> {
    let mut out = vec![LieYamagutiAlgebra::zero(f, 1), LieYamagutiAlgebra::zero(f, 2), LieYamagutiAlgebra::zero(f, 3)];
    for mode in [LieMode::IteratedBracket, LieMode::ZeroTernary] {
        out.push(nonabelian(f, mode));
        out.push(sl2(f, mode));
        out.push(heisenberg(f, mode));
    }
    out
}

fn bicrossed_soundness() -> Outcome {
    let mut counts = [0usize; 3];
    for f in [Field::Rational, gf(3)] {
        let gs = small_algebras(f);
        let hs: Vec<_> = gs.iter().filter(|a| a.dim() <= 2).cloned().collect();
        let mut pairs = Vec::new();
        for g in &gs {
            for h in &hs {
                pairs.push((0, MatchedPair::direct(g.clone(), h.clone())));
            }
            for n in 1..=2 {
                pairs.push((1, MatchedPair::semidirect(Representation::zero(g.clone(), n))));
            }
        }
        for h in &hs {
            pairs.push((1, MatchedPair::semidirect(Representation::adjoint(h.clone()))));
            for g in &gs {
                let zero = Representation::zero(g.clone(), h.dim());
                pairs.push((2, MatchedPair::action(zero, h.clone())));
                if g == h {
                    let adj = Representation::adjoint(g.clone());
                    if check_action_conditions(&adj, h).passed() {
                        pairs.push((2, MatchedPair::action(adj, h.clone())));
                    }
                }
            }
        }
        for mode in [LieMode::IteratedBracket, LieMode::ZeroTernary] {
            if let Some(rep) = sl2_standard(f, mode) {
                pairs.push((1, MatchedPair::semidirect(rep.clone())));
                pairs.push((2, MatchedPair::action(rep, LieYamagutiAlgebra::zero(f, 2))));
            }
        }
        for (kind, mp) in pairs {
            let mp = mp.map_err(|e| format!("constructor rejected a valid pair: {e}"))?;
            let report = mp.bicrossed().unwrap().check_axioms();
            ensure(report.passed(), || format!("bicrossed product fails: {report}"))?;
            counts[kind] += 1;
        }
    }
    let total: usize = counts.iter().sum();
    ensure(total >= 50, || format!("only {total} pairs"))?;
    Ok(format!("{total} pairs ({} direct, {} semidirect, {} action)", counts[0], counts[1], counts[2]))
}

fn graph_characterization() -> Outcome {
    let mp = graph_instance();
    let ambient = mp.bicrossed().unwrap();
    let mut found = 0;
    for r in all_matrices(2, 2, 2) {
        let dm = check_deformation_map(&mp, &r).unwrap().passed();
        let sub = ambient.is_subalgebra(&graph_span(&mp, &r));
        ensure(dm == sub, || format!("disagreement at {r:?}"))?;
        found += dm as usize;
    }
    Ok(format!("16 maps, {found} deformation maps"))
}

fn induced_structures() -> Outcome {
    let maps = graph_instance_maps();
    for dm in &maps {
        let mp = dm.pair();
        let r = dm.map();
        let algebra = dm.induced_algebra();
        ensure(algebra.check_axioms().passed(), || format!("induced algebra fails for {r:?}"))?;
        let rep = dm.induced_representation();
        ensure(rep.check().passed(), || format!("induced representation fails for {r:?}"))?;
        ensure(dm.induced_derived_closed_form() == rep.derived_all(), || format!("closed form differs for {r:?}"))?;
        // Transport the graph's brackets to h and compare.
        let h = mp.h();
        let lift = |a: &Vector| (r.apply(a), a.clone());
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let (a, b) = (lift(&h.basis(i)), lift(&h.basis(j)));
                let (_, top) = mp.bicrossed_bracket((&a.0, &a.1), (&b.0, &b.1));
                ensure(top == algebra.bracket(&h.basis(i), &h.basis(j)), || format!("binary transport at {r:?}"))?;
                for k in 0..h.dim() {
                    let c = lift(&h.basis(k));
                    let (_, top) = mp.bicrossed_triple((&a.0, &a.1), (&b.0, &b.1), (&c.0, &c.1));
                    let expected = algebra.triple(&h.basis(i), &h.basis(j), &h.basis(k));
                    ensure(top == expected, || format!("ternary transport at {r:?}"))?;
                }
            }
        }
    }
    Ok(format!("{} deformation maps", maps.len()))
}

fn complement_completeness() -> Outcome {
    let mp = graph_instance();
    let ambient = mp.bicrossed().unwrap();
    let f = ambient.field();
    let g_span: Vec<Vector> = (0..2).map(|i| ambient.basis(i)).collect();
    let found: BTreeSet<Vec<Vector>> = subspaces(2, 4, 2)
        .into_iter()
        .filter(|s| complements(4, f, &g_span, s) && closed_under_brackets(&ambient, s))
        .map(|s| canonical(f, 4, &s))
        .collect();
    let graphs: BTreeSet<Vec<Vector>> = graph_instance_maps().iter().map(|dm| canonical(f, 4, &dm.graph())).collect();
    ensure(found == graphs, || format!("{} complement subalgebras vs {} graphs", found.len(), graphs.len()))?;
    Ok(format!("{} complement subalgebras", found.len()))
}

fn census_partition() -> Outcome {
    let mp = graph_instance();
    let census = classify_complements(&mp.block_inclusion().unwrap(), BUDGET).unwrap();
    let k = census.maps.len();
    ensure(census.is_equivalence(), || "relation is not an equivalence".into())?;
    let mut seen = vec![false; k];
    for class in &census.classes {
        for &i in class {
            ensure(!seen[i], || format!("map {i} in two classes"))?;
            seen[i] = true;
            for j in 0..k {
                ensure(census.related[i][j] == class.contains(&j), || format!("class of {i} disagrees at {j}"))?;
            }
        }
    }
    ensure(seen.iter().all(|&s| s), || "classes do not cover the maps".into())?;
    ensure(census.factorization_index == census.classes.len(), || "index differs from class count".into())?;
    let classes = isomorphism_classes(&census.inclusion.ambient, &census.complements);
    ensure(classes == census.factorization_index, || format!("{classes} isomorphism classes of complements"))?;
    ensure(census.factorization_index == CENSUS_INDEX, || {
        format!("index {} differs from the recorded {CENSUS_INDEX}", census.factorization_index)
    })?;
    Ok(format!("{k} maps in {} classes", census.classes.len()))
}

fn coboundary_fixtures(f: Field) -> Vec<Representation> {
    let mut out = Vec::new();
    for mode in [LieMode::IteratedBracket, LieMode::ZeroTernary] {
        out.push(Representation::adjoint(nonabelian(f, mode)));
        out.push(Representation::adjoint(sl2(f, mode)));
        out.push(Representation::adjoint(heisenberg(f, mode)));
        out.extend(sl2_standard(f, mode));
    }
    out.push(Representation::zero(LieYamagutiAlgebra::zero(f, 3), 2));
    out
}

/// `l1 ∘ l1 = 0` as matrices on cochains with zero and one wedge slot.
fn l1_squares_to_zero(ls: &LInftyStructure) -> bool {
    (0..2).all(|w| ls.l1_matrix(w + 1).unwrap().mul(&ls.l1_matrix(w).unwrap()).is_zero())
}

fn differential_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in [Field::Rational, gf(5)] {
        let fixtures = coboundary_fixtures(f);
        for _ in 0..50 {
            let rep = &fixtures[rng.gen_range(0..fixtures.len())];
            let wedges = rng.gen_range(0..3);
            let c = random_cochain(f, rep.algebra().dim(), rep.repdim(), wedges, &mut rng);
            let once = coboundary(rep.algebra(), rep, &c).unwrap();
            ensure(coboundary(rep.algebra(), rep, &once).unwrap().is_zero(), || {
                format!("δ∘δ ≠ 0 in degree {} over {f:?}", wedges + 1)
            })?;
        }
    }
    let maps = graph_instance_maps();
    for dm in &maps {
        let g = dm.pair().g();
        for p in 0..pair_count(g.dim()) {
            let d = Cochain::from_map(&defmap_d(dm, &basis_wedge(g.dim(), p, g.field())));
            ensure(defmap_coboundary(dm, &d).unwrap().is_zero(), || format!("corner fails for {:?}", dm.map()))?;
        }
        for wedges in 0..2 {
            for _ in 0..4 {
                let c = random_cochain(g.field(), dm.pair().h().dim(), g.dim(), wedges, &mut rng);
                let twice = defmap_coboundary(dm, &defmap_coboundary(dm, &c).unwrap()).unwrap();
                ensure(twice.is_zero(), || format!("∂_r∘∂_r ≠ 0 for {:?}", dm.map()))?;
            }
        }
    }
    let mut twisted = 0;
    for mp in rational_family() {
        let ls = derived_brackets(&build_vdata(&mp).unwrap());
        ensure(l1_squares_to_zero(&ls), || "untwisted l1∘l1 ≠ 0".into())?;
        for r in valid_grid_maps(&mp).into_iter().take(3) {
            let tw = ls.twist(&DeformationMap::new(mp.clone(), r.clone()).unwrap()).unwrap();
            ensure(l1_squares_to_zero(&tw), || format!("l1^r∘l1^r ≠ 0 for {r:?}"))?;
            twisted += 1;
        }
    }
    Ok(format!("100 random cochains, {} census maps, {twisted} twisted structures", maps.len()))
}

/// Rational dims (2, 2) pairs used by the Maurer-Cartan criteria.
fn rational_family() -> Vec<MatchedPair> {
    let q = Field::Rational;
    let iter = nonabelian(q, LieMode::IteratedBracket);
    let flat = nonabelian(q, LieMode::ZeroTernary);
    vec![
        MatchedPair::semidirect(Representation::adjoint(iter.clone())).unwrap(),
        MatchedPair::semidirect(Representation::adjoint(flat.clone())).unwrap(),
        MatchedPair::semidirect_swapped(Representation::adjoint(iter.clone())).unwrap(),
        MatchedPair::direct(iter, flat).unwrap(),
    ]
}

fn valid_grid_maps(mp: &MatchedPair) -> Vec<Matrix> {
    grid(mp.field()).into_iter().filter(|r| check_deformation_map(mp, r).unwrap().passed()).collect()
}

fn mc_characterization() -> Outcome {
    let mut summary = Vec::new();
    for mp in rational_family() {
        let ls = derived_brackets(&build_vdata(&mp).unwrap());
        let mut found = 0;
        for r in grid(mp.field()) {
            let mc = ls.mc_equation(&r).unwrap().is_zero();
            ensure(mc == check_deformation_map(&mp, &r).unwrap().passed(), || format!("disagreement at {r:?}"))?;
            found += mc as usize;
        }
        summary.push(found.to_string());
    }
    Ok(format!("81 maps per pair, solutions {}", summary.join("/")))
}

fn twisting_law() -> Outcome {
    let mp = rational_family().remove(0);
    let ls = derived_brackets(&build_vdata(&mp).unwrap());
    let r = valid_grid_maps(&mp).into_iter().find(|r| !r.is_zero()).ok_or("no nonzero deformation map")?;
    let tw = ls.twist(&DeformationMap::new(mp.clone(), r.clone()).unwrap()).unwrap();
    let mut still = 0;
    for rp in grid(mp.field()) {
        let lhs = tw.mc_equation(&rp).unwrap();
        let sum = r.add(&rp);
        ensure(lhs == ls.mc_equation(&sum).unwrap(), || format!("twisted equation differs at {rp:?}"))?;
        let dm = check_deformation_map(&mp, &sum).unwrap().passed();
        ensure(lhs.is_zero() == dm, || format!("iff fails at {rp:?}"))?;
        still += dm as usize;
    }
    Ok(format!("81 perturbations, {still} keep a deformation map"))
}

fn cohomology_agreement() -> Outcome {
    let mut checked = 0;
    for algebra in [
        nonabelian(Field::Rational, LieMode::IteratedBracket),
        nonabelian(Field::Rational, LieMode::ZeroTernary),
        sl2(Field::Rational, LieMode::IteratedBracket),
        heisenberg(Field::Rational, LieMode::IteratedBracket),
        LieYamagutiAlgebra::zero(Field::Rational, 3),
    ] {
        let adj = Representation::adjoint(algebra.clone());
        let n = algebra.dim();
        for wedges in 0..3 {
            for i in 0..Cochain::space_dim(n, n, wedges) {
                let c = Cochain::basis(algebra.field(), n, n, wedges, i);
                ensure(delta_pi(&algebra, &c).unwrap() == coboundary(&algebra, &adj, &c).unwrap(), || {
                    format!("δ_π differs on basis cochain {i} of degree {}", wedges + 1)
                })?;
                checked += 1;
            }
        }
    }
    let mut maps = 0;
    for mp in rational_family() {
        let ls = derived_brackets(&build_vdata(&mp).unwrap());
        for r in valid_grid_maps(&mp).into_iter().take(4) {
            let dm = DeformationMap::new(mp.clone(), r.clone()).unwrap();
            let twisted = twisted_complex_dims(&ls.twist(&dm).unwrap(), 3).unwrap();
            let direct = defmap_cohomology_dims(&dm, 3).unwrap();
            for n in 2..=3 {
                let a = twisted.iter().find(|e| e.0 == n).unwrap().1;
                let b = direct.iter().find(|e| e.0 == n).unwrap().1;
                ensure(a == b, || format!("H^{n} differs for {r:?}: {a} vs {b}"))?;
            }
            maps += 1;
        }
    }
    Ok(format!("{checked} basis cochains, {maps} deformation maps"))
}

fn specializations() -> Outcome {
    let mut counts = [0usize; 4];
    let algebras = gf2_algebras();
    let mut reps: Vec<Representation> = Vec::new();
    for g in &algebras {
        reps.extend(gf2_line_representations(g));
        reps.push(Representation::adjoint(g.clone()));
        reps.push(Representation::zero(g.clone(), 2));
    }
    for rep in &reps {
        let (m, n) = (rep.algebra().dim(), rep.repdim());
        let der = derivation_pair(rep.clone()).unwrap();
        for d in all_matrices(2, n, m) {
            let lib = check_deformation_map(&der, &d).unwrap().passed();
            ensure(lib == is_derivation(rep, &d), || format!("derivation disagreement at {d:?}"))?;
            counts[0] += 1;
        }
        let rb = rota_baxter_pair(rep.clone()).unwrap();
        for r in all_matrices(2, m, n) {
            let lib = check_deformation_map(&rb, &r).unwrap().passed();
            ensure(lib == is_rota_baxter(rep, None, &r), || format!("weight-0 disagreement at {r:?}"))?;
            counts[1] += 1;
        }
        for h in algebras.iter().filter(|h| h.dim() == n) {
            if !check_action_conditions(rep, h).passed() {
                continue;
            }
            let ch = crossed_homomorphism_pair(rep.clone(), h.clone()).unwrap();
            for d in all_matrices(2, n, m) {
                let lib = check_deformation_map(&ch, &d).unwrap().passed();
                ensure(lib == is_crossed_homomorphism(rep, h, &d), || format!("crossed disagreement at {d:?}"))?;
                counts[2] += 1;
            }
            let rb1 = rota_baxter_weight_one_pair(rep.clone(), h.clone()).unwrap();
            for r in all_matrices(2, m, n) {
                let lib = check_deformation_map(&rb1, &r).unwrap().passed();
                ensure(lib == is_rota_baxter(rep, Some(h), &r), || format!("weight-1 disagreement at {r:?}"))?;
                counts[3] += 1;
            }
        }
    }
    Ok(format!(
        "{} algebras, {} representations; maps checked: {} derivation, {} weight 0, {} crossed, {} weight 1",
        algebras.len(),
        reps.len(),
        counts[0],
        counts[1],
        counts[2],
        counts[3]
    ))
}

fn same_algebra(a: &LieYamagutiAlgebra, b: &LieYamagutiAlgebra) -> bool {
    a.binary() == b.binary() && a.ternary() == b.ternary()
}

fn same_representation(a: &Representation, b: &Representation) -> bool {
    a.rho_all() == b.rho_all() && a.mu_all() == b.mu_all() && a.derived_all() == b.derived_all()
}

fn lts_coherence() -> Outcome {
    let f = gf(2);
    let mut systems = vec![LieTripleSystem::zero(f, 1)];
    for (_, t) in gf2_dim2_tables() {
        let lts = check_lts_axioms(&t).passed();
        let ly = LieYamagutiAlgebra::new(BinaryBracket::zero(f, 2), t.clone()).unwrap().check_axioms().passed();
        ensure(lts == ly, || format!("axiom disagreement on {t:?}"))?;
        if lts && !systems.iter().any(|s: &LieTripleSystem| s.ternary() == &t) {
            systems.push(LieTripleSystem::new(t).unwrap());
        }
    }
    let mut reps: Vec<LtsRepresentation> = Vec::new();
    for s in &systems {
        let n = s.dim();
        let adj = LtsRepresentation::adjoint(s.clone());
        ensure(same_representation(&adj.to_ly(), &Representation::adjoint(s.to_ly())), || "adjoint differs".into())?;
        reps.push(adj);
        reps.push(LtsRepresentation::zero(s.clone(), 2));
        for mu in all_matrices(2, 1, n * n) {
            let mats: Vec<Matrix> = (0..n * n).map(|k| Matrix::from_fn(f, 1, 1, |_, _| mu.get(0, k).clone())).collect();
            let zero_rho = vec![Matrix::zeros(f, 1, 1); n];
            let ly = Representation::new(s.to_ly(), 1, zero_rho, mats.clone()).unwrap().check().passed();
            let lts = LtsRepresentation::new(s.clone(), 1, mats);
            ensure(lts.is_ok() == ly, || "representation check disagreement".into())?;
            reps.extend(lts);
        }
    }
    let mut pairs = Vec::new();
    for on_h in &reps {
        let v = on_h.repdim();
        let h = if v == on_h.system().dim() && on_h == &LtsRepresentation::adjoint(on_h.system().clone()) {
            vec![LieTripleSystem::zero(f, v), on_h.system().clone()]
        } else {
            vec![LieTripleSystem::zero(f, v)]
        };
        for h in h {
            let g_dim = on_h.system().dim();
            let mut backs = vec![LtsRepresentation::zero(h.clone(), g_dim)];
            if h.dim() == 1 && h.ternary().is_zero() && g_dim <= 2 {
                backs.extend(all_matrices(2, g_dim, g_dim).into_iter().filter_map(|m| LtsRepresentation::new(h.clone(), g_dim, vec![m]).ok()));
            }
            for on_g in backs {
                let lts = LtsMatchedPair::unchecked(on_h.clone(), on_g.clone()).unwrap();
                let ly = MatchedPair::new(on_h.to_ly(), on_g.to_ly()).unwrap().check().passed();
                ensure(lts.check().passed() == ly, || "matched pair check disagreement".into())?;
                if ly {
                    pairs.push(lts);
                }
            }
        }
    }
    let mut maps = 0;
    for lts in &pairs {
        let ly = lts.to_ly().unwrap();
        let ambient = lts.bicrossed().unwrap();
        ensure(same_algebra(&ambient.to_ly(), &ly.bicrossed().unwrap()), || "bicrossed products differ".into())?;
        for r in all_matrices(2, lts.g().dim(), lts.h().dim()) {
            let is_dm = lts.check_deformation_map(&r).unwrap().passed();
            ensure(is_dm == check_deformation_map(&ly, &r).unwrap().passed(), || format!("defmap disagreement at {r:?}"))?;
            let graph = lts.graph_span(&r);
            ensure(graph == graph_span(&ly, &r), || "graphs differ".into())?;
            ensure(ambient.is_subsystem(&graph) == ly.bicrossed().unwrap().is_subalgebra(&graph), || {
                "subsystem test differs".into()
            })?;
            if is_dm {
                let dm = DeformationMap::new(ly.clone(), r.clone()).unwrap();
                ensure(same_algebra(&lts.induced_system(&r).unwrap().to_ly(), &dm.induced_algebra()), || {
                    format!("induced systems differ at {r:?}")
                })?;
                let rep = lts.induced_representation(&r).unwrap().to_ly();
                ensure(same_representation(&rep, &dm.induced_representation()), || "induced representations differ".into())?;
            }
            maps += 1;
        }
    }
    let census_pair = pairs.iter().find(|p| p.g().dim() == 2 && p.h().dim() == 2 && !p.g().ternary().is_zero());
    if let Some(p) = census_pair {
        let ly = p.to_ly().unwrap();
        let inc = ly.block_inclusion().unwrap();
        let a = classify_lts_complements(&p.bicrossed().unwrap(), &inc.g_span, &inc.h_span, BUDGET).unwrap();
        let b = classify_complements(&inc, BUDGET).unwrap();
        ensure(a.classes == b.classes, || "census classes differ".into())?;
    }
    Ok(format!("{} systems, {} representations, {} matched pairs, {maps} maps", systems.len(), reps.len(), pairs.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("axiom equivalence of the Maurer-Cartan test", axiom_equivalence),
        ("bicrossed product soundness", bicrossed_soundness),
        ("graph characterization", graph_characterization),
        ("induced structures", induced_structures),
        ("complement completeness", complement_completeness),
        ("census partition", census_partition),
        ("differential laws", differential_laws),
        ("Maurer-Cartan characterization", mc_characterization),
        ("twisting law", twisting_law),
        ("cohomology agreement", cohomology_agreement),
        ("specialization dual paths", specializations),
        ("triple system embedding coherence", lts_coherence),
    ];
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, run)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
                        Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
                    });
                    (outcome, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = Vec::new();
    for (k, ((name, _), (outcome, secs))) in criteria.iter().zip(&results).enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", k + 1),
            Err(why) => {
                println!("criterion {:>2} {name}: FAIL ({why}; {secs:.1}s)", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

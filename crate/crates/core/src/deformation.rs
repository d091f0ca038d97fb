//! Deformation maps `r: h -> g` in a matched pair, their graphs, the structures they induce on
//! `h`, and the classification of complements over finite fields.

use rayon::prelude::*;

use crate::algebra::{BinaryBracket, LieYamagutiAlgebra, TernaryBracket};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::{check_factorization, Inclusion, MatchedPair};
use crate::report::Report;
use crate::representation::Representation;

/// Default cap on the number of candidates scanned by exhaustive searches.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// Both deformation identities on all basis pairs and triples of `h`.
pub fn check_deformation_map(mp: &MatchedPair, r: &Matrix) -> Result<Report> {
    check_shape(mp, r)?;
    let (g, h) = (mp.g(), mp.h());
    let n = h.dim();
    let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let rs: Vec<Vector> = (0..n).map(|i| r.column(i)).collect();
    let back = mp.on_g();
    let mut report = Report::new();
    report.check("deformation-binary", &[n, n], |t| {
        let (a, b, ra, rb) = (&hs[t[0]], &hs[t[1]], &rs[t[0]], &rs[t[1]]);
        let mut lhs = g.bracket(ra, rb);
        lhs = &lhs + &back.act(a, rb);
        lhs = &lhs - &back.act(b, ra);
        &lhs - &r.apply(&twisted_bracket(mp, r, a, b))
    });
    report.check("deformation-ternary", &[n, n, n], |t| {
        let (a, b, c) = (&hs[t[0]], &hs[t[1]], &hs[t[2]]);
        let (ra, rb, rc) = (&rs[t[0]], &rs[t[1]], &rs[t[2]]);
        let mut lhs = g.triple(ra, rb, rc);
        lhs = &lhs + &back.derived_act(a, b, rc);
        lhs = &lhs + &back.mu_act(b, c, ra);
        lhs = &lhs - &back.mu_act(a, c, rb);
        &lhs - &r.apply(&twisted_triple(mp, r, a, b, c))
    });
    Ok(report)
}

/// `[a, b]' + rho_{r a} b - rho_{r b} a`
fn twisted_bracket(mp: &MatchedPair, r: &Matrix, a: &Vector, b: &Vector) -> Vector {
    let act = mp.on_h();
    let mut out = mp.h().bracket(a, b);
    out = &out + &act.act(&r.apply(a), b);
    &out - &act.act(&r.apply(b), a)
}

/// `{a, b, c}' + D(r a, r b) c + mu(r b, r c) a - mu(r a, r c) b`
fn twisted_triple(mp: &MatchedPair, r: &Matrix, a: &Vector, b: &Vector, c: &Vector) -> Vector {
    let act = mp.on_h();
    let (ra, rb, rc) = (r.apply(a), r.apply(b), r.apply(c));
    let mut out = mp.h().triple(a, b, c);
    out = &out + &act.derived_act(&ra, &rb, c);
    out = &out + &act.mu_act(&rb, &rc, a);
    &out - &act.mu_act(&ra, &rc, b)
}

fn check_shape(mp: &MatchedPair, r: &Matrix) -> Result<()> {
    if r.rows() != mp.g().dim() || r.cols() != mp.h().dim() || r.field() != mp.field() {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {}x{} over {}",
            r.rows(),
            r.cols(),
            mp.g().dim(),
            mp.h().dim(),
            mp.field()
        )));
    }
    Ok(())
}

/// Basis `(r e_j, e_j)` of the graph of `r` inside the bicrossed product.
pub fn graph_span(mp: &MatchedPair, r: &Matrix) -> Vec<Vector> {
    let h = mp.h();
    (0..h.dim()).map(|j| r.column(j).concat(&h.basis(j))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationMap {
    pair: MatchedPair,
    map: Matrix,
}

impl DeformationMap {
    pub fn new(pair: MatchedPair, map: Matrix) -> Result<Self> {
        let report = check_deformation_map(&pair, &map)?;
        if !report.passed() {
            return Err(Error::axioms("deformation map identities", report));
        }
        Ok(DeformationMap { pair, map })
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn graph(&self) -> Vec<Vector> {
        graph_span(&self.pair, &self.map)
    }

    /// `h_r`: the brackets of `h` twisted by `r`.
    pub fn induced_algebra(&self) -> LieYamagutiAlgebra {
        let (mp, r) = (&self.pair, &self.map);
        let h = mp.h();
        let (f, n) = (h.field(), h.dim());
        let binary = BinaryBracket::from_fn(f, n, |i, j| twisted_bracket(mp, r, &h.basis(i), &h.basis(j)))
            .expect("twisted bracket of a deformation map is antisymmetric");
        let ternary =
            TernaryBracket::from_fn(f, n, |i, j, k| twisted_triple(mp, r, &h.basis(i), &h.basis(j), &h.basis(k)))
                .expect("twisted triple of a deformation map is antisymmetric");
        LieYamagutiAlgebra::new(binary, ternary).expect("shapes agree")
    }

    /// `(g; psi_r, nu_r)` as a representation of [`DeformationMap::induced_algebra`]. Not validated.
    pub fn induced_representation(&self) -> Representation {
        let (mp, r) = (&self.pair, &self.map);
        let (g, h) = (mp.g(), mp.h());
        let (act, back) = (mp.on_h(), mp.on_g());
        let (f, m, n) = (g.field(), g.dim(), h.dim());
        let xs: Vec<Vector> = (0..m).map(|i| g.basis(i)).collect();
        let psi = (0..n)
            .map(|a| {
                let alpha = h.basis(a);
                let ra = r.apply(&alpha);
                let cols: Vec<Vector> = xs
                    .iter()
                    .map(|x| {
                        let mut v = back.act(&alpha, x);
                        v = &v + &g.bracket(&ra, x);
                        &v + &r.apply(&act.act(x, &alpha))
                    })
                    .collect();
                Matrix::from_columns(f, m, &cols)
            })
            .collect();
        let mut nu = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (alpha, beta) = (h.basis(a), h.basis(b));
                let (ra, rb) = (r.apply(&alpha), r.apply(&beta));
                let cols: Vec<Vector> = xs
                    .iter()
                    .map(|x| {
                        let mut v = back.mu_act(&alpha, &beta, x);
                        v = &v + &g.triple(x, &ra, &rb);
                        let inner = &act.derived_act(x, &ra, &beta) - &act.mu_act(x, &rb, &alpha);
                        &v - &r.apply(&inner)
                    })
                    .collect();
                nu.push(Matrix::from_columns(f, m, &cols));
            }
        }
        Representation::new(self.induced_algebra(), m, psi, nu).expect("shapes agree")
    }

    /// `D(a, b) x` of the induced representation from its closed form, indexed `a * dim h + b`.
    pub fn induced_derived_closed_form(&self) -> Vec<Matrix> {
        let (mp, r) = (&self.pair, &self.map);
        let (g, h) = (mp.g(), mp.h());
        let (act, back) = (mp.on_h(), mp.on_g());
        let (f, m, n) = (g.field(), g.dim(), h.dim());
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (alpha, beta) = (h.basis(a), h.basis(b));
                let (ra, rb) = (r.apply(&alpha), r.apply(&beta));
                let cols: Vec<Vector> = (0..m)
                    .map(|i| {
                        let x = g.basis(i);
                        let mut v = back.derived_act(&alpha, &beta, &x);
                        v = &v + &g.triple(&ra, &rb, &x);
                        let inner = &act.mu_act(&ra, &x, &beta) - &act.mu_act(&rb, &x, &alpha);
                        &v + &r.apply(&inner)
                    })
                    .collect();
                out.push(Matrix::from_columns(f, m, &cols));
            }
        }
        out
    }
}

/// Whether `sigma` satisfies both equivalence identities between `r` and `other`, which say
/// that `sigma` is an isomorphism `h_r -> h_other`.
pub fn check_dm_equivalence(r: &DeformationMap, other: &DeformationMap, sigma: &Matrix) -> Result<bool> {
    if r.pair != other.pair {
        return Err(Error::Dimension("deformation maps live in different matched pairs".into()));
    }
    let n = r.pair.h().dim();
    if sigma.rows() != n || sigma.cols() != n {
        return Err(Error::Dimension(format!("sigma must be {n}x{n}")));
    }
    if !sigma.is_invertible() {
        return Err(Error::NotInvertible("sigma".into()));
    }
    let h = r.pair.h();
    let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let ss: Vec<Vector> = (0..n).map(|i| sigma.column(i)).collect();
    let (mp, r0, r1) = (&r.pair, &r.map, &other.map);
    let mut ok = true;
    crate::report::for_each_tuple(&[n, n], |t| {
        let lhs = sigma.apply(&twisted_bracket(mp, r0, &hs[t[0]], &hs[t[1]]));
        ok = lhs == twisted_bracket(mp, r1, &ss[t[0]], &ss[t[1]]);
        ok
    });
    if !ok {
        return Ok(false);
    }
    crate::report::for_each_tuple(&[n, n, n], |t| {
        let lhs = sigma.apply(&twisted_triple(mp, r0, &hs[t[0]], &hs[t[1]], &hs[t[2]]));
        ok = lhs == twisted_triple(mp, r1, &ss[t[0]], &ss[t[1]], &ss[t[2]]);
        ok
    });
    Ok(ok)
}

/// The `index`-th `rows x cols` matrix over a finite field, entries in row-major order with the
/// first entry most significant.
pub fn matrix_from_index(field: Field, rows: usize, cols: usize, mut index: u128) -> Matrix {
    let p = field.order().expect("finite field") as u128;
    let mut m = Matrix::zeros(field, rows, cols);
    for k in (0..rows * cols).rev() {
        m.set(k / cols, k % cols, field.element((index % p) as u64));
        index /= p;
    }
    m
}

/// `p^(rows * cols)`, or an error if it exceeds `budget`.
pub fn matrix_count(field: Field, rows: usize, cols: usize, budget: u128) -> Result<u128> {
    let p = field.order().ok_or(Error::InfiniteField)? as u128;
    let mut count: u128 = 1;
    for _ in 0..rows * cols {
        count = count.saturating_mul(p);
    }
    if count > budget {
        return Err(Error::Budget { needed: count, budget });
    }
    Ok(count)
}

/// Every deformation map of a matched pair over a finite field, in the order of
/// [`matrix_from_index`].
pub fn enumerate_deformation_maps(mp: &MatchedPair, budget: u128) -> Result<Vec<DeformationMap>> {
    let (m, n) = (mp.g().dim(), mp.h().dim());
    let f = mp.field();
    let count = matrix_count(f, m, n, budget)?;
    let maps: Vec<Matrix> = (0..count)
        .into_par_iter()
        .filter_map(|k| {
            let r = matrix_from_index(f, m, n, k);
            match check_deformation_map(mp, &r) {
                Ok(report) if report.passed() => Some(r),
                _ => None,
            }
        })
        .collect();
    Ok(maps.into_iter().map(|map| DeformationMap { pair: mp.clone(), map }).collect())
}

/// Every invertible `n x n` matrix over a finite field.
pub fn general_linear_group(field: Field, n: usize, budget: u128) -> Result<Vec<Matrix>> {
    let count = matrix_count(field, n, n, budget)?;
    Ok((0..count)
        .into_par_iter()
        .map(|k| matrix_from_index(field, n, n, k))
        .filter(Matrix::is_invertible)
        .collect())
}

/// Deformation maps of the canonical matched pair of a strong complement, grouped up to equivalence.
#[derive(Clone, Debug)]
pub struct ComplementCensus {
    pub inclusion: Inclusion,
    pub pair: MatchedPair,
    pub maps: Vec<DeformationMap>,
    /// Complement of each map, in ambient coordinates.
    pub complements: Vec<Vec<Vector>>,
    /// `related[i][j]` is true when some invertible `sigma` carries map `i` to map `j`.
    pub related: Vec<Vec<bool>>,
    /// Indices into `maps`, each class sorted, classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
    pub factorization_index: usize,
}

impl ComplementCensus {
    /// Whether the found relation is reflexive, symmetric and transitive.
    pub fn is_equivalence(&self) -> bool {
        let k = self.related.len();
        (0..k).all(|i| self.related[i][i])
            && (0..k).all(|i| (0..k).all(|j| self.related[i][j] == self.related[j][i]))
            && (0..k).all(|i| {
                (0..k).all(|j| !self.related[i][j] || (0..k).all(|l| !self.related[j][l] || self.related[i][l]))
            })
    }
}

/// Classifies the complements of `g` in the ambient algebra, given a strong complement `h`.
pub fn classify_complements(inc: &Inclusion, budget: u128) -> Result<ComplementCensus> {
    let ambient = &inc.ambient;
    let f = ambient.field();
    if !f.is_finite() {
        return Err(Error::InfiniteField);
    }
    let pair = MatchedPair::canonical(inc)?;
    let maps = enumerate_deformation_maps(&pair, budget)?;
    let group = general_linear_group(f, pair.h().dim(), budget)?;

    let (m, d) = (pair.g().dim(), ambient.dim());
    let adapted: Vec<Vector> = inc.g_span.iter().chain(&inc.h_span).cloned().collect();
    let to_ambient = Matrix::from_columns(f, d, &adapted);
    let mut complements = Vec::with_capacity(maps.len());
    for dm in &maps {
        let span: Vec<Vector> = dm.graph().iter().map(|v| to_ambient.apply(v)).collect();
        if !check_factorization(ambient, &inc.g_span, &span, false) {
            return Err(Error::Factorization("graph of a deformation map is not a complement".into()));
        }
        complements.push(span);
    }
    debug_assert!(complements.iter().all(|c| c.len() == d - m));

    let k = maps.len();
    let related: Vec<Vec<bool>> = (0..k)
        .into_par_iter()
        .map(|i| {
            (0..k)
                .map(|j| group.iter().any(|s| check_dm_equivalence(&maps[i], &maps[j], s).unwrap_or(false)))
                .collect()
        })
        .collect();

    let mut class_of: Vec<Option<usize>> = vec![None; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        if class_of[i].is_some() {
            continue;
        }
        let c = classes.len();
        let mut members = vec![i];
        class_of[i] = Some(c);
        let mut stack = vec![i];
        while let Some(a) = stack.pop() {
            for b in 0..k {
                if class_of[b].is_none() && (related[a][b] || related[b][a]) {
                    class_of[b] = Some(c);
                    members.push(b);
                    stack.push(b);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let factorization_index = classes.len();
    Ok(ComplementCensus { inclusion: inc.clone(), pair, maps, complements, related, classes, factorization_index })
}

/// Whether `span` is a `g`-complement subalgebra in `ambient`.
pub fn is_complement(ambient: &LieYamagutiAlgebra, g_span: &[Vector], span: &[Vector]) -> bool {
    check_factorization(ambient, g_span, span, false)
}

/// `(h, g, 0, 0)`: deformation maps `g -> h` are the homomorphisms.
pub fn homomorphism_pair(source: LieYamagutiAlgebra, target: LieYamagutiAlgebra) -> Result<MatchedPair> {
    MatchedPair::direct(target, source)
}

/// `(V, g, 0, (rho, mu))`: deformation maps `g -> V` are the derivations with values in `V`.
pub fn derivation_pair(rep: Representation) -> Result<MatchedPair> {
    MatchedPair::semidirect_swapped(rep)
}

/// `(g, V, (rho, mu), 0)`: deformation maps `V -> g` are the relative Rota-Baxter operators of weight 0.
pub fn rota_baxter_pair(rep: Representation) -> Result<MatchedPair> {
    MatchedPair::semidirect(rep)
}

/// `(h, g, 0, (rho, mu))` for an action of `g` on `h`: deformation maps `g -> h` are the
/// crossed homomorphisms.
pub fn crossed_homomorphism_pair(action: Representation, h: LieYamagutiAlgebra) -> Result<MatchedPair> {
    Ok(MatchedPair::action(action, h)?.swap())
}

/// `(g, h, (rho, mu), 0)` for an action of `g` on `h`: deformation maps `h -> g` are the
/// relative Rota-Baxter operators of weight 1.
pub fn rota_baxter_weight_one_pair(action: Representation, h: LieYamagutiAlgebra) -> Result<MatchedPair> {
    MatchedPair::action(action, h)
}

/// A `rows x cols` matrix from integer entries in row-major order.
pub fn grid_matrix(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(entries[i * cols + j]))
}

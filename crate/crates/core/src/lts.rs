//! Lie triple systems as Lie-Yamaguti algebras with zero binary bracket.
//!
//! Each structure here has a direct checker written in triple-system terms and a conversion
//! into the corresponding Lie-Yamaguti structure; the heavier operations (complements, census)
//! go through that embedding.

use crate::algebra::{check_lts_axioms, LieYamagutiAlgebra, TernaryBracket};
use crate::deformation::{classify_complements, ComplementCensus};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::{Inclusion, MatchedPair};
use crate::report::Report;
use crate::representation::{flatten, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTripleSystem {
    ternary: TernaryBracket,
}

impl LieTripleSystem {
    pub fn new(ternary: TernaryBracket) -> Result<Self> {
        let report = check_lts_axioms(&ternary);
        if !report.passed() {
            return Err(Error::axioms("Lie triple system axioms", report));
        }
        Ok(LieTripleSystem { ternary })
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        LieTripleSystem { ternary: TernaryBracket::zero(field, dim) }
    }

    /// The ternary part of an algebra whose binary bracket vanishes.
    pub fn from_ly(algebra: &LieYamagutiAlgebra) -> Result<Self> {
        if !algebra.binary().is_zero() {
            return Err(Error::Dimension("binary bracket is not zero".into()));
        }
        LieTripleSystem::new(algebra.ternary().clone())
    }

    pub fn to_ly(&self) -> LieYamagutiAlgebra {
        LieYamagutiAlgebra::from_lts(self.ternary.clone()).expect("validated at construction")
    }

    pub fn field(&self) -> Field {
        self.ternary.field()
    }

    pub fn dim(&self) -> usize {
        self.ternary.dim()
    }

    pub fn ternary(&self) -> &TernaryBracket {
        &self.ternary
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field(), self.dim(), i)
    }

    pub fn triple(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.ternary.apply(x, y, z)
    }

    pub fn check(&self) -> Report {
        check_lts_axioms(&self.ternary)
    }

    pub fn is_subsystem(&self, span: &[Vector]) -> bool {
        self.to_ly().is_subalgebra(span)
    }
}

/// `(V; mu)` with `D(x, y) = mu(y, x) - mu(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtsRepresentation {
    system: LieTripleSystem,
    repdim: usize,
    mu: Vec<Matrix>,
    derived: Vec<Matrix>,
}

impl LtsRepresentation {
    /// Checks both representation conditions.
    pub fn new(system: LieTripleSystem, repdim: usize, mu: Vec<Matrix>) -> Result<Self> {
        let rep = LtsRepresentation::unchecked(system, repdim, mu)?;
        let report = rep.check();
        if !report.passed() {
            return Err(Error::axioms("Lie triple system representation", report));
        }
        Ok(rep)
    }

    fn unchecked(system: LieTripleSystem, repdim: usize, mu: Vec<Matrix>) -> Result<Self> {
        let n = system.dim();
        if mu.len() != n * n || mu.iter().any(|m| m.rows() != repdim || m.cols() != repdim) {
            return Err(Error::Dimension(format!("mu must hold {} matrices of size {repdim}x{repdim}", n * n)));
        }
        let derived = (0..n * n).map(|k| mu[(k % n) * n + k / n].sub(&mu[k])).collect();
        Ok(LtsRepresentation { system, repdim, mu, derived })
    }

    pub fn zero(system: LieTripleSystem, repdim: usize) -> Self {
        let n = system.dim();
        let f = system.field();
        LtsRepresentation::unchecked(system, repdim, vec![Matrix::zeros(f, repdim, repdim); n * n])
            .expect("shapes agree")
    }

    /// `mu(x, y) z = {z, x, y}`.
    pub fn adjoint(system: LieTripleSystem) -> Self {
        let n = system.dim();
        let f = system.field();
        let mu = (0..n * n)
            .map(|k| {
                let cols: Vec<Vector> = (0..n)
                    .map(|z| system.triple(&system.basis(z), &system.basis(k / n), &system.basis(k % n)))
                    .collect();
                Matrix::from_columns(f, n, &cols)
            })
            .collect();
        LtsRepresentation::unchecked(system, n, mu).expect("shapes agree")
    }

    /// Drops `rho` from a Lie-Yamaguti representation of a triple system; `rho` must vanish.
    pub fn from_ly(rep: &Representation) -> Result<Self> {
        if rep.rho_all().iter().any(|m| !m.is_zero()) {
            return Err(Error::Dimension("rho is not zero".into()));
        }
        LtsRepresentation::new(LieTripleSystem::from_ly(rep.algebra())?, rep.repdim(), rep.mu_all().to_vec())
    }

    pub fn to_ly(&self) -> Representation {
        let f = self.system.field();
        let rho = vec![Matrix::zeros(f, self.repdim, self.repdim); self.system.dim()];
        Representation::new(self.system.to_ly(), self.repdim, rho, self.mu.clone()).expect("shapes agree")
    }

    pub fn system(&self) -> &LieTripleSystem {
        &self.system
    }

    pub fn repdim(&self) -> usize {
        self.repdim
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.system.dim() + j]
    }

    pub fn mu_all(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn derived(&self, i: usize, j: usize) -> &Matrix {
        &self.derived[i * self.system.dim() + j]
    }

    pub fn derived_all(&self) -> &[Matrix] {
        &self.derived
    }

    pub fn mu_of(&self, x: &Vector, y: &Vector) -> Matrix {
        bilinear(self.system.field(), self.repdim, self.system.dim(), &self.mu, x, y)
    }

    pub fn derived_of(&self, x: &Vector, y: &Vector) -> Matrix {
        bilinear(self.system.field(), self.repdim, self.system.dim(), &self.derived, x, y)
    }

    pub fn mu_act(&self, x: &Vector, y: &Vector, v: &Vector) -> Vector {
        self.mu_of(x, y).apply(v)
    }

    pub fn derived_act(&self, x: &Vector, y: &Vector, v: &Vector) -> Vector {
        self.derived_of(x, y).apply(v)
    }

    pub fn check(&self) -> Report {
        let s = &self.system;
        let n = s.dim();
        let e: Vec<Vector> = (0..n).map(|i| s.basis(i)).collect();
        let mu = |x: &Vector, y: &Vector| self.mu_of(x, y);
        let d = |x: &Vector, y: &Vector| self.derived_of(x, y);
        let mut report = Report::new();
        report.check("lts-rep-mu-mu", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            flatten(
                mu(z, w)
                    .mul(&mu(x, y))
                    .sub(&mu(y, w).mul(&mu(x, z)))
                    .sub(&mu(x, &s.triple(y, z, w)))
                    .add(&d(y, z).mul(&mu(x, w))),
            )
        });
        report.check("lts-rep-mu-of-ternary", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let lhs = mu(&s.triple(x, y, z), w).add(&mu(z, &s.triple(x, y, w)));
            let rhs = d(x, y).mul(&mu(z, w)).sub(&mu(z, w).mul(&d(x, y)));
            flatten(lhs.sub(&rhs))
        });
        report
    }
}

fn bilinear(field: Field, repdim: usize, n: usize, table: &[Matrix], x: &Vector, y: &Vector) -> Matrix {
    let mut m = Matrix::zeros(field, repdim, repdim);
    for (i, a) in x.support() {
        for (j, b) in y.support() {
            m.axpy(&(a * b), &table[i * n + j]);
        }
    }
    m
}

/// `(g, h, mu, nu)`: `on_h` is `(h; mu)` over `g` and `on_g` is `(g; nu)` over `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtsMatchedPair {
    on_h: LtsRepresentation,
    on_g: LtsRepresentation,
}

const LTS_COMPAT: [&str; 6] =
    ["lts-compat-1", "lts-compat-2", "lts-compat-3", "lts-compat-4", "lts-compat-5", "lts-compat-6"];

impl LtsMatchedPair {
    /// Validates the six compatibility conditions; the representations are validated on construction.
    pub fn new(on_h: LtsRepresentation, on_g: LtsRepresentation) -> Result<Self> {
        let pair = LtsMatchedPair::unchecked(on_h, on_g)?;
        let report = pair.check();
        if !report.passed() {
            return Err(Error::axioms("Lie triple system matched pair", report));
        }
        Ok(pair)
    }

    pub fn unchecked(on_h: LtsRepresentation, on_g: LtsRepresentation) -> Result<Self> {
        if on_h.repdim() != on_g.system().dim() || on_g.repdim() != on_h.system().dim() {
            return Err(Error::Dimension("actions do not match the systems".into()));
        }
        Ok(LtsMatchedPair { on_h, on_g })
    }

    pub fn from_ly(mp: &MatchedPair) -> Result<Self> {
        LtsMatchedPair::new(LtsRepresentation::from_ly(mp.on_h())?, LtsRepresentation::from_ly(mp.on_g())?)
    }

    /// The embedded Lie-Yamaguti matched pair with zero binary brackets and zero `rho`, `psi`.
    pub fn to_ly(&self) -> Result<MatchedPair> {
        MatchedPair::new(self.on_h.to_ly(), self.on_g.to_ly())?.validate()
    }

    pub fn g(&self) -> &LieTripleSystem {
        self.on_h.system()
    }

    pub fn h(&self) -> &LieTripleSystem {
        self.on_g.system()
    }

    pub fn on_h(&self) -> &LtsRepresentation {
        &self.on_h
    }

    pub fn on_g(&self) -> &LtsRepresentation {
        &self.on_g
    }

    /// The six compatibility conditions. The first three are stated for `mu`, the last three
    /// are their mirror images for `nu`.
    pub fn check(&self) -> Report {
        let mut report = lts_block(&self.on_h, &self.on_g, [LTS_COMPAT[0], LTS_COMPAT[1], LTS_COMPAT[2]]);
        report.merge(lts_block(&self.on_g, &self.on_h, [LTS_COMPAT[3], LTS_COMPAT[4], LTS_COMPAT[5]]));
        report
    }

    pub fn bicrossed(&self) -> Result<LieTripleSystem> {
        let (m, n) = (self.g().dim(), self.h().dim());
        let f = self.g().field();
        let (g, h) = (self.g(), self.h());
        let ternary = TernaryBracket::from_fn(f, m + n, |i, j, k| {
            let (x, a) = Vector::basis(f, m + n, i).split(m);
            let (y, b) = Vector::basis(f, m + n, j).split(m);
            let (z, c) = Vector::basis(f, m + n, k).split(m);
            let mut top = g.triple(&x, &y, &z);
            top = &top + &self.on_g.derived_act(&a, &b, &z);
            top = &top + &self.on_g.mu_act(&b, &c, &x);
            top = &top - &self.on_g.mu_act(&a, &c, &y);
            let mut bottom = h.triple(&a, &b, &c);
            bottom = &bottom + &self.on_h.derived_act(&x, &y, &c);
            bottom = &bottom + &self.on_h.mu_act(&y, &z, &a);
            bottom = &bottom - &self.on_h.mu_act(&x, &z, &b);
            top.concat(&bottom)
        })?;
        LieTripleSystem::new(ternary)
    }

    /// The deformation identity for `r: h -> g`.
    pub fn check_deformation_map(&self, r: &Matrix) -> Result<Report> {
        let (g, h) = (self.g(), self.h());
        let (m, n) = (g.dim(), h.dim());
        if r.rows() != m || r.cols() != n {
            return Err(Error::Dimension(format!("map must be {m}x{n}")));
        }
        let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
        let rs: Vec<Vector> = (0..n).map(|i| r.column(i)).collect();
        let mut report = Report::new();
        report.check("lts-deformation", &[n, n, n], |t| {
            let (a, b, c) = (&hs[t[0]], &hs[t[1]], &hs[t[2]]);
            let (ra, rb, rc) = (&rs[t[0]], &rs[t[1]], &rs[t[2]]);
            let mut lhs = g.triple(ra, rb, rc);
            lhs = &lhs + &self.on_g.derived_act(a, b, rc);
            lhs = &lhs + &self.on_g.mu_act(b, c, ra);
            lhs = &lhs - &self.on_g.mu_act(a, c, rb);
            &lhs - &r.apply(&self.twisted_triple(r, a, b, c))
        });
        Ok(report)
    }

    fn twisted_triple(&self, r: &Matrix, a: &Vector, b: &Vector, c: &Vector) -> Vector {
        let (ra, rb, rc) = (r.apply(a), r.apply(b), r.apply(c));
        let mut out = self.h().triple(a, b, c);
        out = &out + &self.on_h.derived_act(&ra, &rb, c);
        out = &out + &self.on_h.mu_act(&rb, &rc, a);
        &out - &self.on_h.mu_act(&ra, &rc, b)
    }

    /// The system induced on `h` by a deformation map.
    pub fn induced_system(&self, r: &Matrix) -> Result<LieTripleSystem> {
        let h = self.h();
        let ternary = TernaryBracket::from_fn(h.field(), h.dim(), |i, j, k| {
            self.twisted_triple(r, &h.basis(i), &h.basis(j), &h.basis(k))
        })?;
        LieTripleSystem::new(ternary)
    }

    /// `(g; nu_r)` over the induced system.
    pub fn induced_representation(&self, r: &Matrix) -> Result<LtsRepresentation> {
        let (g, h) = (self.g(), self.h());
        let (f, m, n) = (g.field(), g.dim(), h.dim());
        let mut nu = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (alpha, beta) = (h.basis(a), h.basis(b));
                let (ra, rb) = (r.apply(&alpha), r.apply(&beta));
                let cols: Vec<Vector> = (0..m)
                    .map(|i| {
                        let x = g.basis(i);
                        let mut v = self.on_g.mu_act(&alpha, &beta, &x);
                        v = &v + &g.triple(&x, &ra, &rb);
                        let inner = &self.on_h.derived_act(&x, &ra, &beta) - &self.on_h.mu_act(&x, &rb, &alpha);
                        &v - &r.apply(&inner)
                    })
                    .collect();
                nu.push(Matrix::from_columns(f, m, &cols));
            }
        }
        LtsRepresentation::new(self.induced_system(r)?, m, nu)
    }

    /// Basis `(r e_j, e_j)` of the graph of `r`.
    pub fn graph_span(&self, r: &Matrix) -> Vec<Vector> {
        let h = self.h();
        (0..h.dim()).map(|j| r.column(j).concat(&h.basis(j))).collect()
    }
}

fn lts_block(acting: &LtsRepresentation, back: &LtsRepresentation, names: [&'static str; 3]) -> Report {
    let (g, h) = (acting.system(), back.system());
    let (m, n) = (g.dim(), h.dim());
    let xs: Vec<Vector> = (0..m).map(|i| g.basis(i)).collect();
    let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let mu = |x: &Vector, y: &Vector, a: &Vector| acting.mu_act(x, y, a);
    let dm = |x: &Vector, y: &Vector, a: &Vector| acting.derived_act(x, y, a);
    let nu = |a: &Vector, b: &Vector, x: &Vector| back.mu_act(a, b, x);
    let dn = |a: &Vector, b: &Vector, x: &Vector| back.derived_act(a, b, x);
    let ht = |a: &Vector, b: &Vector, c: &Vector| h.triple(a, b, c);
    let mut report = Report::new();
    report.check(names[0], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let mut r = mu(x, y, &ht(a, b, c));
        r = &r - &ht(a, b, &mu(x, y, c));
        r = &r + &mu(&dn(a, b, x), y, c);
        &r + &mu(x, &dn(a, b, y), c)
    });
    report.check(names[1], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let mut r = &mu(&nu(a, b, x), y, c) - &mu(&nu(a, c, x), y, b);
        r = &r - &mu(x, &dn(b, c, y), a);
        &r + &ht(b, c, &mu(x, y, a))
    });
    report.check(names[2], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let mut r = mu(x, &nu(a, b, y), c);
        r = &r - &ht(&mu(x, y, c), a, b);
        r = &r + &dm(y, &nu(c, a, x), b);
        &r - &mu(y, &nu(c, b, x), a)
    });
    report
}

/// Canonical matched pair of a strong complement in a triple system.
pub fn lts_canonical(ambient: &LieTripleSystem, g_span: &[Vector], h_span: &[Vector]) -> Result<LtsMatchedPair> {
    let inc = Inclusion { ambient: ambient.to_ly(), g_span: g_span.to_vec(), h_span: h_span.to_vec() };
    LtsMatchedPair::from_ly(&MatchedPair::canonical(&inc)?)
}

/// Complement census of a triple system, computed through the embedding.
pub fn classify_lts_complements(
    ambient: &LieTripleSystem,
    g_span: &[Vector],
    h_span: &[Vector],
    budget: u128,
) -> Result<ComplementCensus> {
    let inc = Inclusion { ambient: ambient.to_ly(), g_span: g_span.to_vec(), h_span: h_span.to_vec() };
    classify_complements(&inc, budget)
}

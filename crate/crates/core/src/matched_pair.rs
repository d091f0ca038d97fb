//! Matched pairs of Lie-Yamaguti algebras, bicrossed products and factorizations.
//!
//! A matched pair couples `g` and `h` through two representations: `(h; rho, mu)` of `g`
//! and `(g; psi, nu)` of `h`. The eighteen compatibility conditions come in two mirrored
//! blocks of nine; the second block is the first one evaluated on the swapped pair.

use crate::algebra::{BinaryBracket, LieYamagutiAlgebra, TernaryBracket};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::Report;
use crate::representation::{flatten, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    on_h: Representation,
    on_g: Representation,
    validated: bool,
}

const FIRST_BLOCK: [&str; 9] = [
    "compat-1", "compat-2", "compat-3", "compat-4", "compat-5", "compat-6", "compat-7", "compat-8", "compat-9",
];
const SECOND_BLOCK: [&str; 9] = [
    "compat-10", "compat-11", "compat-12", "compat-13", "compat-14", "compat-15", "compat-16", "compat-17",
    "compat-18",
];

impl MatchedPair {
    /// `on_h` is `(h; rho, mu)` over `g`, `on_g` is `(g; psi, nu)` over `h`. Not validated.
    pub fn new(on_h: Representation, on_g: Representation) -> Result<Self> {
        let (g, h) = (on_h.algebra(), on_g.algebra());
        if on_h.repdim() != h.dim() || on_g.repdim() != g.dim() {
            return Err(Error::Dimension(format!(
                "actions on spaces of dims ({}, {}) do not match algebras of dims ({}, {})",
                on_g.repdim(),
                on_h.repdim(),
                g.dim(),
                h.dim()
            )));
        }
        if g.field() != h.field() {
            return Err(Error::InvalidField("matched pair over different fields".into()));
        }
        Ok(MatchedPair { on_h, on_g, validated: false })
    }

    /// Checks both representations and the eighteen compatibility conditions.
    pub fn validate(mut self) -> Result<Self> {
        for (what, rep) in [("representation of g on h", &self.on_h), ("representation of h on g", &self.on_g)] {
            if !rep.algebra().is_validated() {
                let report = rep.algebra().check_axioms();
                if !report.passed() {
                    return Err(Error::axioms("Lie-Yamaguti axioms", report));
                }
            }
            if !rep.is_validated() {
                let report = rep.check();
                if !report.passed() {
                    return Err(Error::axioms(what, report));
                }
            }
        }
        let report = self.check();
        if !report.passed() {
            return Err(Error::axioms("matched pair compatibility", report));
        }
        self.validated = true;
        Ok(self)
    }

    /// Zero actions between two algebras.
    pub fn direct(g: LieYamagutiAlgebra, h: LieYamagutiAlgebra) -> Result<Self> {
        let (m, n) = (g.dim(), h.dim());
        MatchedPair::new(Representation::zero(g, n), Representation::zero(h, m))?.validate()
    }

    /// `(g, V, (rho, mu), 0)` with `V` carrying zero brackets.
    pub fn semidirect(rep: Representation) -> Result<Self> {
        let v = LieYamagutiAlgebra::zero(rep.field(), rep.repdim());
        let m = rep.algebra().dim();
        MatchedPair::new(rep, Representation::zero(v, m))?.validate()
    }

    /// `(V, g, 0, (rho, mu))`, the mirror image of [`MatchedPair::semidirect`].
    pub fn semidirect_swapped(rep: Representation) -> Result<Self> {
        Ok(MatchedPair::semidirect(rep)?.swap())
    }

    /// A Lie-Yamaguti action of `g` on `h`: a representation satisfying the action conditions,
    /// paired with zero actions back.
    pub fn action(rep: Representation, h: LieYamagutiAlgebra) -> Result<Self> {
        if rep.repdim() != h.dim() {
            return Err(Error::Dimension("action space does not match the acted-on algebra".into()));
        }
        let report = check_action_conditions(&rep, &h);
        if !report.passed() {
            return Err(Error::axioms("Lie-Yamaguti action conditions", report));
        }
        let m = rep.algebra().dim();
        MatchedPair::new(rep, Representation::zero(h, m))?.validate()
    }

    /// `(h, g, (psi, nu), (rho, mu))`
    pub fn swap(&self) -> Self {
        MatchedPair { on_h: self.on_g.clone(), on_g: self.on_h.clone(), validated: self.validated }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn field(&self) -> Field {
        self.g().field()
    }

    pub fn g(&self) -> &LieYamagutiAlgebra {
        self.on_h.algebra()
    }

    pub fn h(&self) -> &LieYamagutiAlgebra {
        self.on_g.algebra()
    }

    /// `(h; rho, mu)` as a representation of `g`.
    pub fn on_h(&self) -> &Representation {
        &self.on_h
    }

    /// `(g; psi, nu)` as a representation of `h`.
    pub fn on_g(&self) -> &Representation {
        &self.on_g
    }

    /// The eighteen compatibility conditions (representations are not re-checked).
    pub fn check(&self) -> Report {
        let mut report = compat_block(&self.on_h, &self.on_g, FIRST_BLOCK);
        report.merge(compat_block(&self.on_g, &self.on_h, SECOND_BLOCK));
        report
    }

    /// The six derivation-type identities implied by the compatibility conditions.
    pub fn check_consequences(&self) -> Report {
        let mut report = consequence_block(&self.on_h, &self.on_g, ["consequence-1", "consequence-2", "consequence-3"]);
        report.merge(consequence_block(&self.on_g, &self.on_h, ["consequence-4", "consequence-5", "consequence-6"]));
        report
    }

    /// `[(x, a), (y, b)]` in the bicrossed product.
    pub fn bicrossed_bracket(&self, (x, a): (&Vector, &Vector), (y, b): (&Vector, &Vector)) -> (Vector, Vector) {
        let (g, h) = (self.g(), self.h());
        let mut top = g.bracket(x, y);
        top = &top + &self.on_g.act(a, y);
        top = &top - &self.on_g.act(b, x);
        let mut bottom = h.bracket(a, b);
        bottom = &bottom + &self.on_h.act(x, b);
        bottom = &bottom - &self.on_h.act(y, a);
        (top, bottom)
    }

    /// `{(x, a), (y, b), (z, c)}` in the bicrossed product.
    pub fn bicrossed_triple(
        &self,
        (x, a): (&Vector, &Vector),
        (y, b): (&Vector, &Vector),
        (z, c): (&Vector, &Vector),
    ) -> (Vector, Vector) {
        let (g, h) = (self.g(), self.h());
        let mut top = g.triple(x, y, z);
        top = &top + &self.on_g.derived_act(a, b, z);
        top = &top + &self.on_g.mu_act(b, c, x);
        top = &top - &self.on_g.mu_act(a, c, y);
        let mut bottom = h.triple(a, b, c);
        bottom = &bottom + &self.on_h.derived_act(x, y, c);
        bottom = &bottom + &self.on_h.mu_act(y, z, a);
        bottom = &bottom - &self.on_h.mu_act(x, z, b);
        (top, bottom)
    }

    /// The bicrossed product on `g ⊕ h`, with `g` in the first coordinates.
    pub fn bicrossed(&self) -> Result<LieYamagutiAlgebra> {
        let (m, n) = (self.g().dim(), self.h().dim());
        let f = self.field();
        let split = |i: usize| Vector::basis(f, m + n, i).split(m);
        let binary = BinaryBracket::from_fn(f, m + n, |i, j| {
            let ((x, a), (y, b)) = (split(i), split(j));
            let (top, bottom) = self.bicrossed_bracket((&x, &a), (&y, &b));
            top.concat(&bottom)
        })?;
        let ternary = TernaryBracket::from_fn(f, m + n, |i, j, k| {
            let ((x, a), (y, b), (z, c)) = (split(i), split(j), split(k));
            let (top, bottom) = self.bicrossed_triple((&x, &a), (&y, &b), (&z, &c));
            top.concat(&bottom)
        })?;
        let algebra = LieYamagutiAlgebra::new(binary, ternary)?;
        if self.validated {
            Ok(algebra.assume_validated(true))
        } else {
            algebra.validate()
        }
    }

    /// Block inclusion of `g ⊕ 0` and `0 ⊕ h` in the bicrossed product.
    pub fn block_inclusion(&self) -> Result<Inclusion> {
        let (m, n) = (self.g().dim(), self.h().dim());
        let f = self.field();
        Ok(Inclusion {
            ambient: self.bicrossed()?,
            g_span: (0..m).map(|i| Vector::basis(f, m + n, i)).collect(),
            h_span: (m..m + n).map(|i| Vector::basis(f, m + n, i)).collect(),
        })
    }

    /// Whether `(u, v)` intertwines `self` with `other`; `u` and `v` must be automorphisms of
    /// `g` and `h`.
    pub fn check_equivalence(&self, other: &MatchedPair, u: &Matrix, v: &Matrix) -> Result<Report> {
        let (g, h) = (self.g(), self.h());
        if other.g() != g || other.h() != h {
            return Err(Error::Dimension("matched pairs over different algebras".into()));
        }
        if !g.is_isomorphism(g, u) {
            return Err(Error::NotAutomorphism("u is not an automorphism of g".into()));
        }
        if !h.is_isomorphism(h, v) {
            return Err(Error::NotAutomorphism("v is not an automorphism of h".into()));
        }
        let (m, n) = (g.dim(), h.dim());
        let e: Vec<Vector> = (0..m).map(|i| g.basis(i)).collect();
        let f: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
        let ue: Vec<Vector> = (0..m).map(|i| u.column(i)).collect();
        let vf: Vec<Vector> = (0..n).map(|i| v.column(i)).collect();
        let mut report = Report::new();
        report.check("intertwine-rho", &[m, n], |t| {
            let lhs = v.apply(&self.on_h.act(&e[t[0]], &f[t[1]]));
            &lhs - &other.on_h.act(&ue[t[0]], &vf[t[1]])
        });
        report.check("intertwine-mu", &[m, m, n], |t| {
            let lhs = v.apply(&self.on_h.mu_act(&e[t[0]], &e[t[1]], &f[t[2]]));
            &lhs - &other.on_h.mu_act(&ue[t[0]], &ue[t[1]], &vf[t[2]])
        });
        report.check("intertwine-psi", &[n, m], |t| {
            let lhs = u.apply(&self.on_g.act(&f[t[0]], &e[t[1]]));
            &lhs - &other.on_g.act(&vf[t[0]], &ue[t[1]])
        });
        report.check("intertwine-nu", &[n, n, m], |t| {
            let lhs = u.apply(&self.on_g.mu_act(&f[t[0]], &f[t[1]], &e[t[2]]));
            &lhs - &other.on_g.mu_act(&vf[t[0]], &vf[t[1]], &ue[t[2]])
        });
        Ok(report)
    }

    /// Extracts the canonical matched pair of a strong factorization.
    pub fn canonical(inc: &Inclusion) -> Result<Self> {
        if !check_factorization(&inc.ambient, &inc.g_span, &inc.h_span, true) {
            return Err(Error::Factorization("spans do not strongly factorize the ambient algebra".into()));
        }
        let e = &inc.ambient;
        let fld = e.field();
        let (m, n) = (inc.g_span.len(), inc.h_span.len());
        let adapted: Vec<Vector> = inc.g_span.iter().chain(&inc.h_span).cloned().collect();
        let basis = Matrix::from_columns(fld, m + n, &adapted);
        let local = e.change_basis(&basis)?;
        let g = e.restrict(&inc.g_span)?;
        let h = e.restrict(&inc.h_span)?;
        let emb = |x: Option<&Vector>, a: Option<&Vector>| {
            let x = x.cloned().unwrap_or_else(|| Vector::zeros(fld, m));
            let a = a.cloned().unwrap_or_else(|| Vector::zeros(fld, n));
            x.concat(&a)
        };
        let gb: Vec<Vector> = (0..m).map(|i| Vector::basis(fld, m, i)).collect();
        let hb: Vec<Vector> = (0..n).map(|i| Vector::basis(fld, n, i)).collect();

        let mut rho_cols = vec![Vec::with_capacity(n); m];
        let mut psi_cols = vec![Vec::with_capacity(m); n];
        for (i, x) in gb.iter().enumerate() {
            for (a_idx, a) in hb.iter().enumerate() {
                let (top, bottom) = local.bracket(&emb(Some(x), None), &emb(None, Some(a))).split(m);
                rho_cols[i].push(bottom);
                psi_cols[a_idx].push(-top);
            }
        }
        let mut mu = Vec::with_capacity(m * m);
        for (i, x) in gb.iter().enumerate() {
            for (j, y) in gb.iter().enumerate() {
                let mut cols = Vec::with_capacity(n);
                for (a_idx, a) in hb.iter().enumerate() {
                    let (top, bottom) =
                        local.triple(&emb(None, Some(a)), &emb(Some(x), None), &emb(Some(y), None)).split(m);
                    if !top.is_zero() {
                        return Err(Error::ForbiddenComponent(format!(
                            "{{h_{}, g_{}, g_{}}} has a g-component {top}",
                            a_idx + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                    cols.push(bottom);
                }
                mu.push(Matrix::from_columns(fld, n, &cols));
            }
        }
        let mut nu = Vec::with_capacity(n * n);
        for (a_idx, a) in hb.iter().enumerate() {
            for (b_idx, b) in hb.iter().enumerate() {
                let mut cols = Vec::with_capacity(m);
                for (i, x) in gb.iter().enumerate() {
                    let (top, bottom) =
                        local.triple(&emb(Some(x), None), &emb(None, Some(a)), &emb(None, Some(b))).split(m);
                    if !bottom.is_zero() {
                        return Err(Error::ForbiddenComponent(format!(
                            "{{g_{}, h_{}, h_{}}} has an h-component {bottom}",
                            i + 1,
                            a_idx + 1,
                            b_idx + 1
                        )));
                    }
                    cols.push(top);
                }
                nu.push(Matrix::from_columns(fld, m, &cols));
            }
        }
        let rho = rho_cols.iter().map(|c| Matrix::from_columns(fld, n, c)).collect();
        let psi = psi_cols.iter().map(|c| Matrix::from_columns(fld, m, c)).collect();
        let pair = MatchedPair::new(Representation::new(g, n, rho, mu)?, Representation::new(h, m, psi, nu)?)?
            .validate()?;
        let rebuilt = pair.bicrossed()?;
        if rebuilt.binary() != local.binary() || rebuilt.ternary() != local.ternary() {
            return Err(Error::Factorization(
                "bicrossed product of the extracted pair differs from the ambient algebra".into(),
            ));
        }
        Ok(pair)
    }
}

/// A subalgebra `g` of an ambient algebra together with a complement `h`, both given by bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub ambient: LieYamagutiAlgebra,
    pub g_span: Vec<Vector>,
    pub h_span: Vec<Vector>,
}

/// Whether the ambient algebra factorizes through the two spans; with `strong`, also requires
/// `{g, h, h} ⊂ g` and `{h, g, g} ⊂ h`.
pub fn check_factorization(ambient: &LieYamagutiAlgebra, g_span: &[Vector], h_span: &[Vector], strong: bool) -> bool {
    let f = ambient.field();
    let d = ambient.dim();
    let gs = Subspace::span(f, d, g_span);
    let hs = Subspace::span(f, d, h_span);
    let all: Vec<Vector> = g_span.iter().chain(h_span).cloned().collect();
    if Subspace::span(f, d, &all).dim() != d || gs.dim() + hs.dim() != d {
        return false;
    }
    if !ambient.is_subalgebra(g_span) || !ambient.is_subalgebra(h_span) {
        return false;
    }
    if !strong {
        return true;
    }
    for x in gs.basis() {
        for a in hs.basis() {
            for b in hs.basis() {
                if !gs.contains(&ambient.triple(x, a, b)) {
                    return false;
                }
            }
        }
    }
    for a in hs.basis() {
        for x in gs.basis() {
            for y in gs.basis() {
                if !hs.contains(&ambient.triple(a, x, y)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Conditions making a representation `(h; rho, mu)` a Lie-Yamaguti action on the algebra `h`.
pub fn check_action_conditions(rep: &Representation, h: &LieYamagutiAlgebra) -> Report {
    let g = rep.algebra();
    let (m, n) = (g.dim(), h.dim());
    let a: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let rho = |i: usize, v: &Vector| rep.rho(i).apply(v);
    let mu = |i: usize, j: usize, v: &Vector| rep.mu(i, j).apply(v);
    let mut report = Report::new();
    report.check("action-rho-derives-binary", &[m, n, n], |t| {
        let (i, p, q) = (t[0], &a[t[1]], &a[t[2]]);
        let lhs = rho(i, &h.bracket(p, q));
        let rhs = &h.bracket(&rho(i, p), q) + &h.bracket(p, &rho(i, q));
        &lhs - &rhs
    });
    report.check("action-rho-commutes-ternary", &[m, n, n, n], |t| {
        let (i, p, q, r) = (t[0], &a[t[1]], &a[t[2]], &a[t[3]]);
        &rho(i, &h.triple(p, q, r)) - &h.triple(p, q, &rho(i, r))
    });
    report.check("action-rho-ternary-skew", &[m, n, n, n], |t| {
        let (i, p, q, r) = (t[0], &a[t[1]], &a[t[2]], &a[t[3]]);
        &h.triple(&rho(i, p), q, r) + &h.triple(p, &rho(i, q), r)
    });
    report.check("action-mu-kills-binary", &[m, m, n, n], |t| mu(t[0], t[1], &h.bracket(&a[t[2]], &a[t[3]])));
    report.check("action-mu-kills-ternary", &[m, m, n, n, n], |t| {
        mu(t[0], t[1], &h.triple(&a[t[2]], &a[t[3]], &a[t[4]]))
    });
    report.check("action-mu-central-binary", &[m, m, n, n], |t| h.bracket(&mu(t[0], t[1], &a[t[2]]), &a[t[3]]));
    report.check("action-mu-central-ternary-first", &[m, m, n, n, n], |t| {
        h.triple(&mu(t[0], t[1], &a[t[2]]), &a[t[3]], &a[t[4]])
    });
    report.check("action-mu-central-ternary-last", &[m, m, n, n, n], |t| {
        h.triple(&a[t[2]], &a[t[3]], &mu(t[0], t[1], &a[t[4]]))
    });
    report
}

/// Nine compatibility conditions for `acting = (h; rho, mu)` over `g` and `back = (g; psi, nu)`
/// over `h`. Tuples list the `g` variables `x, y, z` first, then the `h` variables.
fn compat_block(acting: &Representation, back: &Representation, names: [&'static str; 9]) -> Report {
    let g = acting.algebra();
    let h = back.algebra();
    let (m, n) = (g.dim(), h.dim());
    let xs: Vec<Vector> = (0..m).map(|i| g.basis(i)).collect();
    let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let rho = |x: &Vector, a: &Vector| acting.act(x, a);
    let mu = |x: &Vector, y: &Vector, a: &Vector| acting.mu_act(x, y, a);
    let dr = |x: &Vector, y: &Vector, a: &Vector| acting.derived_act(x, y, a);
    let psi = |a: &Vector, x: &Vector| back.act(a, x);
    let nu = |a: &Vector, b: &Vector, x: &Vector| back.mu_act(a, b, x);
    let dp = |a: &Vector, b: &Vector, x: &Vector| back.derived_act(a, b, x);
    let hb = |a: &Vector, b: &Vector| h.bracket(a, b);
    let ht = |a: &Vector, b: &Vector, c: &Vector| h.triple(a, b, c);

    let mut report = Report::new();
    report.check(names[0], &[m, n, n], |t| {
        let (x, a, b) = (&xs[t[0]], &hs[t[1]], &hs[t[2]]);
        let lhs = rho(x, &hb(a, b));
        let mut rhs = &hb(&rho(x, a), b) + &hb(a, &rho(x, b));
        rhs = &rhs + &rho(&psi(b, x), a);
        rhs = &rhs - &rho(&psi(a, x), b);
        &lhs - &rhs
    });
    report.check(names[1], &[m, n, n, n], |t| {
        let (x, a, b, c) = (&xs[t[0]], &hs[t[1]], &hs[t[2]], &hs[t[3]]);
        let lhs = rho(x, &ht(a, b, c));
        let rhs = &ht(a, b, &rho(x, c)) - &rho(&dp(a, b, x), c);
        &lhs - &rhs
    });
    report.check(names[2], &[m, n, n, n], |t| {
        let (x, a, b, c) = (&xs[t[0]], &hs[t[1]], &hs[t[2]], &hs[t[3]]);
        &ht(&rho(x, a), b, c) + &ht(a, &rho(x, b), c)
    });
    report.check(names[3], &[m, n, n, n], |t| {
        let (x, a, b, c) = (&xs[t[0]], &hs[t[1]], &hs[t[2]], &hs[t[3]]);
        &rho(&nu(a, b, x), c) - &rho(&nu(a, c, x), b)
    });
    report.check(names[4], &[m, m, n, n], |t| {
        let (x, y, a, b) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]]);
        let lhs = mu(x, y, &hb(a, b));
        let rhs = &mu(&psi(b, x), y, a) - &mu(&psi(a, x), y, b);
        &lhs - &rhs
    });
    report.check(names[5], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let lhs = mu(x, y, &ht(a, b, c));
        let mut rhs = ht(a, b, &mu(x, y, c));
        rhs = &rhs - &mu(&dp(a, b, x), y, c);
        rhs = &rhs - &mu(x, &dp(a, b, y), c);
        &lhs - &rhs
    });
    report.check(names[6], &[m, m, n, n], |t| {
        let (x, y, a, b) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]]);
        &mu(x, &psi(a, y), b) - &hb(a, &mu(x, y, b))
    });
    report.check(names[7], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let lhs = &mu(&nu(a, b, x), y, c) - &mu(&nu(a, c, x), y, b);
        let rhs = &mu(x, &dp(b, c, y), a) - &ht(b, c, &mu(x, y, a));
        &lhs - &rhs
    });
    report.check(names[8], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let lhs = mu(x, &nu(a, b, y), c);
        let mut rhs = ht(&mu(x, y, c), a, b);
        rhs = &rhs - &dr(y, &nu(c, a, x), b);
        rhs = &rhs + &mu(y, &nu(c, b, x), a);
        &lhs - &rhs
    });
    report
}

/// `D(x, y)` acts on `h` by derivations, and `D(psi_a x, y) + D(x, psi_a y) = 0`.
fn consequence_block(acting: &Representation, back: &Representation, names: [&'static str; 3]) -> Report {
    let g = acting.algebra();
    let h = back.algebra();
    let (m, n) = (g.dim(), h.dim());
    let xs: Vec<Vector> = (0..m).map(|i| g.basis(i)).collect();
    let hs: Vec<Vector> = (0..n).map(|i| h.basis(i)).collect();
    let d = |x: &Vector, y: &Vector, a: &Vector| acting.derived_act(x, y, a);
    let mut report = Report::new();
    report.check(names[0], &[m, m, n, n], |t| {
        let (x, y, a, b) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]]);
        let lhs = d(x, y, &h.bracket(a, b));
        let rhs = &h.bracket(&d(x, y, a), b) + &h.bracket(a, &d(x, y, b));
        &lhs - &rhs
    });
    report.check(names[1], &[m, m, n, n, n], |t| {
        let (x, y, a, b, c) = (&xs[t[0]], &xs[t[1]], &hs[t[2]], &hs[t[3]], &hs[t[4]]);
        let lhs = d(x, y, &h.triple(a, b, c));
        let mut rhs = h.triple(&d(x, y, a), b, c);
        rhs = &rhs + &h.triple(a, &d(x, y, b), c);
        rhs = &rhs + &h.triple(a, b, &d(x, y, c));
        &lhs - &rhs
    });
    report.check(names[2], &[n, m, m], |t| {
        let (a, x, y) = (&hs[t[0]], &xs[t[1]], &xs[t[2]]);
        let psi_x = back.act(a, x);
        let psi_y = back.act(a, y);
        flatten(acting.derived_of(&psi_x, y).add(&acting.derived_of(x, &psi_y)))
    });
    report
}

//! Representations `(V; rho, mu)` of a Lie-Yamaguti algebra.

use crate::algebra::{BinaryBracket, LieYamagutiAlgebra, TernaryBracket};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::report::Report;

/// `rho[i]` is the matrix of `rho(e_i)` on `V`, `mu[i * n + j]` the matrix of `mu(e_i, e_j)`.
/// The derived operator `D(e_i, e_j)` is recomputed from these at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    algebra: LieYamagutiAlgebra,
    repdim: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    derived: Vec<Matrix>,
    validated: bool,
}

impl Representation {
    pub fn new(algebra: LieYamagutiAlgebra, repdim: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        let field = algebra.field();
        if rho.len() != n || mu.len() != n * n {
            return Err(Error::Dimension(format!(
                "representation of a dim-{n} algebra needs {n} rho and {} mu matrices, got {} and {}",
                n * n,
                rho.len(),
                mu.len()
            )));
        }
        for m in rho.iter().chain(&mu) {
            if m.rows() != repdim || m.cols() != repdim {
                return Err(Error::Dimension(format!(
                    "action matrix is {}x{}, expected {repdim}x{repdim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::InvalidField("action matrix over a different field".into()));
            }
        }
        let derived = derived_d(&algebra, repdim, &rho, &mu);
        Ok(Representation { algebra, repdim, rho, mu, derived, validated: false })
    }

    pub fn zero(algebra: LieYamagutiAlgebra, repdim: usize) -> Self {
        let n = algebra.dim();
        let z = Matrix::zeros(algebra.field(), repdim, repdim);
        let mut rep = Representation::new(algebra, repdim, vec![z.clone(); n], vec![z; n * n])
            .expect("zero actions have consistent shapes");
        rep.validated = true;
        rep
    }

    /// `rho(x) y = [x, y]`, `mu(x, y) z = {z, x, y}`.
    pub fn adjoint(algebra: LieYamagutiAlgebra) -> Self {
        let n = algebra.dim();
        let f = algebra.field();
        let rho = (0..n)
            .map(|i| Matrix::from_fn(f, n, n, |r, c| algebra.binary().coeff(i, c, r).clone()))
            .collect();
        let mut mu = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mu.push(Matrix::from_fn(f, n, n, |r, c| algebra.ternary().coeff(c, i, j, r).clone()));
            }
        }
        let validated = algebra.is_validated();
        let mut rep = Representation::new(algebra, n, rho, mu).expect("adjoint shapes");
        rep.validated = validated;
        rep
    }

    /// A Lie-algebra representation `rho` of the bracket, extended by `mu(x, y) = rho(y) rho(x)`.
    /// Pairs with the iterated-bracket ternary structure.
    pub fn from_lie_module(algebra: LieYamagutiAlgebra, rho: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        let repdim = rho.first().map_or(0, |m| m.rows());
        if rho.len() != n {
            return Err(Error::Dimension(format!("need {n} rho matrices, got {}", rho.len())));
        }
        let mut mu = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mu.push(rho[j].mul(&rho[i]));
            }
        }
        Representation::new(algebra, repdim, rho, mu)?.validate()
    }

    pub fn validate(mut self) -> Result<Self> {
        let report = self.check();
        if !report.passed() {
            return Err(Error::axioms("representation conditions", report));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn algebra(&self) -> &LieYamagutiAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn repdim(&self) -> usize {
        self.repdim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.algebra.dim() + j]
    }

    /// `D(e_i, e_j)`
    pub fn derived(&self, i: usize, j: usize) -> &Matrix {
        &self.derived[i * self.algebra.dim() + j]
    }

    pub fn rho_all(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu_all(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn derived_all(&self) -> &[Matrix] {
        &self.derived
    }

    pub fn rho_of(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.repdim, self.repdim);
        for (i, c) in x.support() {
            m.axpy(c, &self.rho[i]);
        }
        m
    }

    pub fn mu_of(&self, x: &Vector, y: &Vector) -> Matrix {
        bilinear(self.field(), self.repdim, self.algebra.dim(), &self.mu, x, y)
    }

    pub fn derived_of(&self, x: &Vector, y: &Vector) -> Matrix {
        bilinear(self.field(), self.repdim, self.algebra.dim(), &self.derived, x, y)
    }

    /// `rho(x) v`
    pub fn act(&self, x: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field(), self.repdim);
        for (i, c) in x.support() {
            out.axpy(c, &self.rho[i].apply(v));
        }
        out
    }

    /// `mu(x, y) v`
    pub fn mu_act(&self, x: &Vector, y: &Vector, v: &Vector) -> Vector {
        self.bilinear_act(&self.mu, x, y, v)
    }

    /// `D(x, y) v`
    pub fn derived_act(&self, x: &Vector, y: &Vector, v: &Vector) -> Vector {
        self.bilinear_act(&self.derived, x, y, v)
    }

    fn bilinear_act(&self, table: &[Matrix], x: &Vector, y: &Vector, v: &Vector) -> Vector {
        let n = self.algebra.dim();
        let mut out = Vector::zeros(self.field(), self.repdim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                out.axpy(&(a * b), &table[i * n + j].apply(v));
            }
        }
        out
    }

    /// The five representation conditions on basis tuples; residuals are flattened matrices.
    pub fn check(&self) -> Report {
        let g = &self.algebra;
        let n = g.dim();
        let e: Vec<Vector> = (0..n).map(|i| g.basis(i)).collect();
        let rho = |x: &Vector| self.rho_of(x);
        let mu = |x: &Vector, y: &Vector| self.mu_of(x, y);
        let d = |x: &Vector, y: &Vector| self.derived_of(x, y);
        let mut report = Report::new();
        report.check("rep-mu-of-bracket-left", &[n, n, n], |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let r = mu(&g.bracket(x, y), z).sub(&mu(x, z).mul(&rho(y))).add(&mu(y, z).mul(&rho(x)));
            flatten(r)
        });
        report.check("rep-mu-of-bracket-right", &[n, n, n], |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let r = mu(x, &g.bracket(y, z)).sub(&rho(y).mul(&mu(x, z))).add(&rho(z).mul(&mu(x, y)));
            flatten(r)
        });
        report.check("rep-rho-of-ternary", &[n, n, n], |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let dxy = d(x, y);
            let r = rho(&g.triple(x, y, z)).sub(&dxy.mul(&rho(z))).add(&rho(z).mul(&dxy));
            flatten(r)
        });
        report.check("rep-mu-mu", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let r = mu(z, w)
                .mul(&mu(x, y))
                .sub(&mu(y, w).mul(&mu(x, z)))
                .sub(&mu(x, &g.triple(y, z, w)))
                .add(&d(y, z).mul(&mu(x, w)));
            flatten(r)
        });
        report.check("rep-mu-of-ternary", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let dxy = d(x, y);
            let lhs = mu(&g.triple(x, y, z), w).add(&mu(z, &g.triple(x, y, w)));
            let rhs = dxy.mul(&mu(z, w)).sub(&mu(z, w).mul(&dxy));
            flatten(lhs.sub(&rhs))
        });
        report
    }

    /// The semidirect product on `g ⊕ V`.
    pub fn semidirect(&self) -> Result<LieYamagutiAlgebra> {
        let g = &self.algebra;
        let (n, m) = (g.dim(), self.repdim);
        let f = self.field();
        let split = |i: usize| -> (Vector, Vector) {
            let v = Vector::basis(f, n + m, i);
            v.split(n)
        };
        let binary = BinaryBracket::from_fn(f, n + m, |i, j| {
            let ((x, a), (y, b)) = (split(i), split(j));
            let top = g.bracket(&x, &y);
            let bottom = &self.act(&x, &b) - &self.act(&y, &a);
            top.concat(&bottom)
        })?;
        let ternary = TernaryBracket::from_fn(f, n + m, |i, j, k| {
            let ((x, a), (y, b), (z, c)) = (split(i), split(j), split(k));
            let top = g.triple(&x, &y, &z);
            let mut bottom = self.derived_act(&x, &y, &c);
            bottom = &bottom + &self.mu_act(&y, &z, &a);
            bottom = &bottom - &self.mu_act(&x, &z, &b);
            top.concat(&bottom)
        })?;
        let algebra = LieYamagutiAlgebra::new(binary, ternary)?;
        if self.validated && g.is_validated() {
            Ok(algebra.assume_validated(true))
        } else {
            algebra.validate()
        }
    }
}

/// `D(e_i, e_j) = rho_i rho_j - rho_j rho_i - rho_[e_i,e_j] - mu(e_i,e_j) + mu(e_j,e_i)`.
pub fn derived_d(algebra: &LieYamagutiAlgebra, repdim: usize, rho: &[Matrix], mu: &[Matrix]) -> Vec<Matrix> {
    let n = algebra.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut d = rho[i].mul(&rho[j]).sub(&rho[j].mul(&rho[i]));
            for (k, c) in algebra.binary().on_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    d.axpy(&-c, &rho[k]);
                }
            }
            d = d.sub(&mu[i * n + j]).add(&mu[j * n + i]);
            debug_assert_eq!(d.rows(), repdim);
            out.push(d);
        }
    }
    out
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

pub(crate) fn flatten(m: Matrix) -> Vector {
    Vector(m.entries().to_vec())
}

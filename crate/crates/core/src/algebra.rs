//! Lie-Yamaguti algebras given by structure constants.
//!
//! A binary bracket is stored as a dense tensor `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k`, and a ternary bracket as `t[i][j][k][l]` with
//! `{e_i, e_j, e_k} = sum_l t[i][j][k][l] e_l`. Antisymmetry is validated at construction
//! and never imposed silently.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::Report;

/// Antisymmetric bilinear bracket on a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryBracket {
    field: Field,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl BinaryBracket {
    pub fn new(field: Field, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != dim * dim * dim {
            return Err(Error::Dimension(format!(
                "binary bracket of dim {dim} needs {} coefficients, got {}",
                dim * dim * dim,
                coeffs.len()
            )));
        }
        let b = BinaryBracket { field, dim, coeffs };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    let a = b.coeff(i, j, k);
                    let ok = if i == j { a.is_zero() } else { (a + b.coeff(j, i, k)).is_zero() };
                    if !ok {
                        return Err(Error::Antisymmetry(format!(
                            "binary coefficients at ({},{},{}) and ({},{},{})",
                            i + 1,
                            j + 1,
                            k + 1,
                            j + 1,
                            i + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(b)
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        BinaryBracket { field, dim, coeffs: vec![field.zero(); dim * dim * dim] }
    }

    /// Tabulates `[e_i, e_j]` from a function on basis pairs.
    pub fn from_fn<F: FnMut(usize, usize) -> Vector>(field: Field, dim: usize, mut f: F) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket value has wrong length");
                coeffs.extend(v.0);
            }
        }
        BinaryBracket::new(field, dim, coeffs)
    }

    /// Builds a bracket from `(i, j, k, c)` entries (0-based) meaning `[e_i, e_j]` has `c` on `e_k`;
    /// the opposite orientation is filled in.
    pub fn from_i64(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut b = BinaryBracket::zero(field, dim);
        for &(i, j, k, c) in entries {
            let c = field.from_i64(c);
            b.coeffs[(i * dim + j) * dim + k] = c.clone();
            b.coeffs[(j * dim + i) * dim + k] = -c;
        }
        BinaryBracket::new(field, dim, b.coeffs).expect("entries must be off-diagonal")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn on_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim;
        &self.coeffs[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                out.axpy_slice(&(a * b), self.on_basis(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// Trilinear bracket antisymmetric in its first two arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryBracket {
    field: Field,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl TernaryBracket {
    pub fn new(field: Field, dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let n4 = dim * dim * dim * dim;
        if coeffs.len() != n4 {
            return Err(Error::Dimension(format!(
                "ternary bracket of dim {dim} needs {n4} coefficients, got {}",
                coeffs.len()
            )));
        }
        let t = TernaryBracket { field, dim, coeffs };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        let a = t.coeff(i, j, k, l);
                        let ok = if i == j { a.is_zero() } else { (a + t.coeff(j, i, k, l)).is_zero() };
                        if !ok {
                            return Err(Error::Antisymmetry(format!(
                                "ternary coefficients at ({},{},{},{}) and ({},{},{},{})",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1,
                                j + 1,
                                i + 1,
                                k + 1,
                                l + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        TernaryBracket { field, dim, coeffs: vec![field.zero(); dim * dim * dim * dim] }
    }

    pub fn from_fn<F: FnMut(usize, usize, usize) -> Vector>(field: Field, dim: usize, mut f: F) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(dim * dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), dim, "bracket value has wrong length");
                    coeffs.extend(v.0);
                }
            }
        }
        TernaryBracket::new(field, dim, coeffs)
    }

    /// `(i, j, k, l, c)` entries (0-based); the `(j, i, k, l)` orientation is filled in.
    pub fn from_i64(field: Field, dim: usize, entries: &[(usize, usize, usize, usize, i64)]) -> Self {
        let mut t = TernaryBracket::zero(field, dim);
        for &(i, j, k, l, c) in entries {
            let c = field.from_i64(c);
            t.coeffs[((i * dim + j) * dim + k) * dim + l] = c.clone();
            t.coeffs[((j * dim + i) * dim + k) * dim + l] = -c;
        }
        TernaryBracket::new(field, dim, t.coeffs).expect("entries must be off-diagonal")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.dim;
        &self.coeffs[((i * n + j) * n + k) * n + l]
    }

    pub fn on_basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let n = self.dim;
        let start = ((i * n + j) * n + k) * n;
        &self.coeffs[start..start + n]
    }

    pub fn apply(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                if i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in z.support() {
                    out.axpy_slice(&(&ab * c), self.on_basis(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// How [`LieYamagutiAlgebra::from_lie`] fills the ternary bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieMode {
    /// `{x, y, z} = 0`
    ZeroTernary,
    /// `{x, y, z} = [[x, y], z]`
    IteratedBracket,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieYamagutiAlgebra {
    field: Field,
    dim: usize,
    binary: BinaryBracket,
    ternary: TernaryBracket,
    validated: bool,
}

impl LieYamagutiAlgebra {
    /// An unvalidated candidate; only shapes and fields are checked.
    pub fn new(binary: BinaryBracket, ternary: TernaryBracket) -> Result<Self> {
        if binary.dim != ternary.dim {
            return Err(Error::Dimension(format!(
                "binary bracket has dim {}, ternary bracket has dim {}",
                binary.dim, ternary.dim
            )));
        }
        if binary.field != ternary.field {
            return Err(Error::InvalidField("brackets over different fields".into()));
        }
        Ok(LieYamagutiAlgebra { field: binary.field, dim: binary.dim, binary, ternary, validated: false })
    }

    /// Runs the axiom checker and marks the algebra validated, or returns the report as an error.
    pub fn validate(mut self) -> Result<Self> {
        let report = self.check_axioms();
        if !report.passed() {
            return Err(Error::axioms("Lie-Yamaguti axioms", report));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        LieYamagutiAlgebra {
            field,
            dim,
            binary: BinaryBracket::zero(field, dim),
            ternary: TernaryBracket::zero(field, dim),
            validated: true,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary(&self) -> &BinaryBracket {
        &self.binary
    }

    pub fn ternary(&self) -> &TernaryBracket {
        &self.ternary
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zeros(self.field, self.dim)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.binary.apply(x, y)
    }

    pub fn triple(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.ternary.apply(x, y, z)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        Vector(self.binary.on_basis(i, j).to_vec())
    }

    pub fn triple_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        Vector(self.ternary.on_basis(i, j, k).to_vec())
    }

    /// Evaluates the four defining identities on every basis tuple.
    pub fn check_axioms(&self) -> Report {
        let n = self.dim;
        let e: Vec<Vector> = (0..n).map(|i| self.basis(i)).collect();
        let br = |x: &Vector, y: &Vector| self.bracket(x, y);
        let tr = |x: &Vector, y: &Vector, z: &Vector| self.triple(x, y, z);
        let mut report = Report::new();
        report.check("cyclic-sum", &[n, n, n], |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let mut r = br(&br(x, y), z);
            r = &r + &br(&br(y, z), x);
            r = &r + &br(&br(z, x), y);
            r = &r + &tr(x, y, z);
            r = &r + &tr(y, z, x);
            &r + &tr(z, x, y)
        });
        report.check("ternary-cyclic-on-brackets", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let r = &tr(&br(x, y), z, w) + &tr(&br(y, z), x, w);
            &r + &tr(&br(z, x), y, w)
        });
        report.check("ternary-derives-binary", &[n, n, n, n], |t| {
            let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let lhs = tr(x, y, &br(z, w));
            let rhs = &br(&tr(x, y, z), w) + &br(z, &tr(x, y, w));
            &lhs - &rhs
        });
        report.merge(check_ternary_derivation(&self.ternary));
        report
    }

    pub fn from_lie(binary: BinaryBracket, mode: LieMode) -> Result<Self> {
        let jacobi = check_jacobi(&binary);
        if !jacobi.passed() {
            return Err(Error::axioms("Jacobi identity", jacobi));
        }
        let field = binary.field;
        let n = binary.dim;
        let ternary = match mode {
            LieMode::ZeroTernary => TernaryBracket::zero(field, n),
            LieMode::IteratedBracket => TernaryBracket::from_fn(field, n, |i, j, k| {
                let xy = Vector(binary.on_basis(i, j).to_vec());
                binary.apply(&xy, &Vector::basis(field, n, k))
            })?,
        };
        LieYamagutiAlgebra::new(binary, ternary)?.validate()
    }

    /// Builds `[x, y] = x.y - y.x` and `{x, y, z} = -(x.y).z` from a left Leibniz product
    /// given as `product[(i * n + j) * n + k]`.
    pub fn from_leibniz(field: Field, dim: usize, product: &[Scalar]) -> Result<Self> {
        if product.len() != dim * dim * dim {
            return Err(Error::Dimension(format!(
                "Leibniz product of dim {dim} needs {} coefficients, got {}",
                dim * dim * dim,
                product.len()
            )));
        }
        let leibniz = check_left_leibniz(field, dim, product);
        if !leibniz.passed() {
            return Err(Error::axioms("left Leibniz identity", leibniz));
        }
        let mul = |x: &Vector, y: &Vector| leibniz_apply(field, dim, product, x, y);
        let e = |i| Vector::basis(field, dim, i);
        let binary = BinaryBracket::from_fn(field, dim, |i, j| &mul(&e(i), &e(j)) - &mul(&e(j), &e(i)))?;
        let ternary = TernaryBracket::from_fn(field, dim, |i, j, k| -mul(&mul(&e(i), &e(j)), &e(k)))?;
        LieYamagutiAlgebra::new(binary, ternary)?.validate()
    }

    /// A Lie triple system viewed as an algebra with zero binary bracket.
    pub fn from_lts(ternary: TernaryBracket) -> Result<Self> {
        let report = check_lts_axioms(&ternary);
        if !report.passed() {
            return Err(Error::axioms("Lie triple system axioms", report));
        }
        let binary = BinaryBracket::zero(ternary.field, ternary.dim);
        let mut a = LieYamagutiAlgebra::new(binary, ternary)?;
        a.validated = true;
        Ok(a)
    }

    /// Block-diagonal structure on `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::InvalidField("direct sum of algebras over different fields".into()));
        }
        let (m, n) = (self.dim, other.dim);
        let total = m + n;
        let binary = BinaryBracket::from_fn(self.field, total, |i, j| match (i < m, j < m) {
            (true, true) => self.bracket_basis(i, j).concat(&Vector::zeros(self.field, n)),
            (false, false) => Vector::zeros(self.field, m).concat(&other.bracket_basis(i - m, j - m)),
            _ => Vector::zeros(self.field, total),
        })?;
        let ternary = TernaryBracket::from_fn(self.field, total, |i, j, k| {
            if i < m && j < m && k < m {
                self.triple_basis(i, j, k).concat(&Vector::zeros(self.field, n))
            } else if i >= m && j >= m && k >= m {
                Vector::zeros(self.field, m).concat(&other.triple_basis(i - m, j - m, k - m))
            } else {
                Vector::zeros(self.field, total)
            }
        })?;
        let mut sum = LieYamagutiAlgebra::new(binary, ternary)?;
        sum.validated = self.validated && other.validated;
        Ok(sum)
    }

    /// Whether `span` is closed under both brackets.
    pub fn is_subalgebra(&self, span: &[Vector]) -> bool {
        let s = Subspace::span(self.field, self.dim, span);
        let b = s.basis();
        for x in b {
            for y in b {
                if !s.contains(&self.bracket(x, y)) {
                    return false;
                }
                for z in b {
                    if !s.contains(&self.triple(x, y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks `map([x,y]) = [map x, map y]` and the ternary analogue on basis tuples.
    /// `map` has `target.dim()` rows and `self.dim()` columns.
    pub fn check_homomorphism(&self, target: &Self, map: &Matrix) -> Report {
        assert_eq!((map.rows(), map.cols()), (target.dim, self.dim), "homomorphism shape");
        let n = self.dim;
        let images: Vec<Vector> = (0..n).map(|i| map.column(i)).collect();
        let mut report = Report::new();
        report.check("hom-binary", &[n, n], |t| {
            let lhs = map.apply(&self.bracket_basis(t[0], t[1]));
            &lhs - &target.bracket(&images[t[0]], &images[t[1]])
        });
        report.check("hom-ternary", &[n, n, n], |t| {
            let lhs = map.apply(&self.triple_basis(t[0], t[1], t[2]));
            &lhs - &target.triple(&images[t[0]], &images[t[1]], &images[t[2]])
        });
        report
    }

    pub fn is_homomorphism(&self, target: &Self, map: &Matrix) -> bool {
        self.check_homomorphism(target, map).passed()
    }

    /// Whether `map` is an invertible homomorphism onto `target`.
    pub fn is_isomorphism(&self, target: &Self, map: &Matrix) -> bool {
        map.is_invertible() && self.is_homomorphism(target, map)
    }

    /// The same algebra written in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix) -> Result<Self> {
        let inverse = basis
            .inverse()
            .ok_or_else(|| Error::NotInvertible("change-of-basis matrix is singular".into()))?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|i| basis.column(i)).collect();
        let binary = BinaryBracket::from_fn(self.field, n, |i, j| inverse.apply(&self.bracket(&cols[i], &cols[j])))?;
        let ternary = TernaryBracket::from_fn(self.field, n, |i, j, k| {
            inverse.apply(&self.triple(&cols[i], &cols[j], &cols[k]))
        })?;
        let mut a = LieYamagutiAlgebra::new(binary, ternary)?;
        a.validated = self.validated;
        Ok(a)
    }

    /// Restriction to a subalgebra with the given basis, in that basis.
    pub fn restrict(&self, basis: &[Vector]) -> Result<Self> {
        let k = basis.len();
        let m = Matrix::from_columns(self.field, self.dim, basis);
        if m.rank() != k {
            return Err(Error::Dimension("subalgebra basis is linearly dependent".into()));
        }
        let coords = |v: &Vector| -> Result<Vector> {
            m.solve(v).ok_or_else(|| Error::Dimension("span is not closed under the brackets".into()))
        };
        let mut bin = Vec::with_capacity(k * k * k);
        for i in 0..k {
            for j in 0..k {
                bin.extend(coords(&self.bracket(&basis[i], &basis[j]))?.0);
            }
        }
        let mut ter = Vec::with_capacity(k * k * k * k);
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    ter.extend(coords(&self.triple(&basis[i], &basis[j], &basis[l]))?.0);
                }
            }
        }
        let mut a = LieYamagutiAlgebra::new(
            BinaryBracket::new(self.field, k, bin)?,
            TernaryBracket::new(self.field, k, ter)?,
        )?;
        a.validated = self.validated;
        Ok(a)
    }

    /// Marks an algebra as validated without running the checker; used for constructions
    /// whose axioms are guaranteed by a validated input.
    pub(crate) fn assume_validated(mut self, validated: bool) -> Self {
        self.validated = validated;
        self
    }
}

/// Jacobi identity of a binary bracket, law "jacobi".
pub fn check_jacobi(binary: &BinaryBracket) -> Report {
    let n = binary.dim;
    let f = binary.field;
    let e: Vec<Vector> = (0..n).map(|i| Vector::basis(f, n, i)).collect();
    let br = |x: &Vector, y: &Vector| binary.apply(x, y);
    let mut report = Report::new();
    report.check("jacobi", &[n, n, n], |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let r = &br(&br(x, y), z) + &br(&br(y, z), x);
        &r + &br(&br(z, x), y)
    });
    report
}

fn leibniz_apply(field: Field, n: usize, product: &[Scalar], x: &Vector, y: &Vector) -> Vector {
    let mut out = Vector::zeros(field, n);
    for (i, a) in x.support() {
        for (j, b) in y.support() {
            out.axpy_slice(&(a * b), &product[(i * n + j) * n..(i * n + j + 1) * n]);
        }
    }
    out
}

/// `x.(y.z) = (x.y).z + y.(x.z)` on basis triples, law "left-leibniz".
pub fn check_left_leibniz(field: Field, dim: usize, product: &[Scalar]) -> Report {
    let mul = |x: &Vector, y: &Vector| leibniz_apply(field, dim, product, x, y);
    let e: Vec<Vector> = (0..dim).map(|i| Vector::basis(field, dim, i)).collect();
    let mut report = Report::new();
    report.check("left-leibniz", &[dim, dim, dim], |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let lhs = mul(x, &mul(y, z));
        let rhs = &mul(&mul(x, y), z) + &mul(y, &mul(x, z));
        &lhs - &rhs
    });
    report
}

/// The ternary bracket acts as a derivation of itself, law "ternary-derives-ternary".
pub fn check_ternary_derivation(ternary: &TernaryBracket) -> Report {
    let n = ternary.dim;
    let f = ternary.field;
    let e: Vec<Vector> = (0..n).map(|i| Vector::basis(f, n, i)).collect();
    let tr = |x: &Vector, y: &Vector, z: &Vector| ternary.apply(x, y, z);
    let mut report = Report::new();
    report.check("ternary-derives-ternary", &[n, n, n, n, n], |t| {
        let (x, y, z, w, u) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]);
        let lhs = tr(x, y, &tr(z, w, u));
        let mut rhs = tr(&tr(x, y, z), w, u);
        rhs = &rhs + &tr(z, &tr(x, y, w), u);
        rhs = &rhs + &tr(z, w, &tr(x, y, u));
        &lhs - &rhs
    });
    report
}

/// Lie triple system axioms: the cyclic identity ("ternary-cyclic") and the derivation law.
pub fn check_lts_axioms(ternary: &TernaryBracket) -> Report {
    let n = ternary.dim;
    let f = ternary.field;
    let e: Vec<Vector> = (0..n).map(|i| Vector::basis(f, n, i)).collect();
    let tr = |x: &Vector, y: &Vector, z: &Vector| ternary.apply(x, y, z);
    let mut report = Report::new();
    report.check("ternary-cyclic", &[n, n, n], |t| {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let r = &tr(x, y, z) + &tr(y, z, x);
        &r + &tr(z, x, y)
    });
    report.merge(check_ternary_derivation(ternary));
    report
}

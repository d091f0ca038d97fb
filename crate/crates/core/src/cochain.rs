//! Cochains on `∧²`-tensor powers.
//!
//! A cochain with `k` wedge slots from a space of dimension `s` to one of dimension `t` has a
//! first part `(∧²)^k -> T` (only when `k >= 1`) and a second part `(∧²)^k ⊗ S -> T`. With
//! `k = 0` the second part is just a linear map `S -> T`, so degree-0 and higher cochains share
//! one layout. `∧²` uses the basis `e_i ∧ e_j`, `i < j`, in lexicographic order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Vector};

/// A sparse element of `∧²`, as `(pair index, coefficient)` terms.
pub type Wedge = Vec<(usize, Scalar)>;

pub fn pair_count(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// Index of `e_i ∧ e_j` for `i < j`.
pub fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_of(dim: usize, mut index: usize) -> (usize, usize) {
    for i in 0..dim {
        let row = dim - i - 1;
        if index < row {
            return (i, i + 1 + index);
        }
        index -= row;
    }
    panic!("pair index out of range")
}

/// `x ∧ y` on the reduced basis.
pub fn wedge(x: &Vector, y: &Vector) -> Wedge {
    let dim = x.len();
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !c.is_zero() {
                out.push((pair_index(dim, i, j), c));
            }
        }
    }
    out
}

pub fn basis_wedge(dim: usize, index: usize, field: Field) -> Wedge {
    debug_assert!(index < pair_count(dim));
    vec![(index, field.one())]
}

/// `base^exp` as a `usize`.
fn power(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |acc, _| acc * base)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    field: Field,
    source: usize,
    target: usize,
    wedges: usize,
    part_i: Vec<Scalar>,
    part_ii: Vec<Scalar>,
}

impl Cochain {
    /// `(len part_i, len part_ii)` for the given shape.
    pub fn part_lens(source: usize, target: usize, wedges: usize) -> (usize, usize) {
        let tuples = power(pair_count(source), wedges);
        let first = if wedges == 0 { 0 } else { tuples * target };
        (first, tuples * source * target)
    }

    /// Dimension of the space of cochains of this shape.
    pub fn space_dim(source: usize, target: usize, wedges: usize) -> usize {
        let (a, b) = Cochain::part_lens(source, target, wedges);
        a + b
    }

    pub fn zero(field: Field, source: usize, target: usize, wedges: usize) -> Self {
        let (a, b) = Cochain::part_lens(source, target, wedges);
        Cochain { field, source, target, wedges, part_i: vec![field.zero(); a], part_ii: vec![field.zero(); b] }
    }

    pub fn from_parts(
        field: Field,
        source: usize,
        target: usize,
        wedges: usize,
        part_i: Vec<Scalar>,
        part_ii: Vec<Scalar>,
    ) -> Result<Self> {
        let (a, b) = Cochain::part_lens(source, target, wedges);
        if part_i.len() != a || part_ii.len() != b {
            return Err(Error::Dimension(format!(
                "cochain parts have {} and {} entries, expected {a} and {b}",
                part_i.len(),
                part_ii.len()
            )));
        }
        Ok(Cochain { field, source, target, wedges, part_i, part_ii })
    }

    /// Splits a flat coordinate vector (first part, then second part).
    pub fn from_vector(source: usize, target: usize, wedges: usize, v: &Vector) -> Result<Self> {
        let (a, _) = Cochain::part_lens(source, target, wedges);
        let field = v.iter().next().map(Scalar::field).unwrap_or(Field::Rational);
        if v.len() != Cochain::space_dim(source, target, wedges) {
            return Err(Error::Dimension("coordinate vector has the wrong length".into()));
        }
        Cochain::from_parts(field, source, target, wedges, v.0[..a].to_vec(), v.0[a..].to_vec())
    }

    /// The `index`-th coordinate basis cochain.
    pub fn basis(field: Field, source: usize, target: usize, wedges: usize, index: usize) -> Self {
        let mut c = Cochain::zero(field, source, target, wedges);
        let a = c.part_i.len();
        if index < a {
            c.part_i[index] = field.one();
        } else {
            c.part_ii[index - a] = field.one();
        }
        c
    }

    /// A degree-0 cochain from a `target x source` matrix.
    pub fn from_map(m: &Matrix) -> Self {
        let (t, s) = (m.rows(), m.cols());
        let mut part_ii = Vec::with_capacity(s * t);
        for x in 0..s {
            for out in 0..t {
                part_ii.push(m.get(out, x).clone());
            }
        }
        Cochain { field: m.field(), source: s, target: t, wedges: 0, part_i: Vec::new(), part_ii }
    }

    /// The linear map of a degree-0 cochain.
    pub fn to_map(&self) -> Matrix {
        assert_eq!(self.wedges, 0, "only degree-0 cochains are linear maps");
        Matrix::from_fn(self.field, self.target, self.source, |out, x| self.part_ii[x * self.target + out].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Number of `∧²` slots; the cochain lies in `C^(wedges + 1)`.
    pub fn wedges(&self) -> usize {
        self.wedges
    }

    pub fn part_i(&self) -> &[Scalar] {
        &self.part_i
    }

    pub fn part_ii(&self) -> &[Scalar] {
        &self.part_ii
    }

    pub fn to_vector(&self) -> Vector {
        Vector(self.part_i.iter().chain(&self.part_ii).cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.part_i.iter().chain(&self.part_ii).all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Cochain) -> bool {
        self.source == other.source && self.target == other.target && self.wedges == other.wedges
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "cochain shapes differ");
        let zip = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Cochain { part_i: zip(&self.part_i, &other.part_i), part_ii: zip(&self.part_ii, &other.part_ii), ..self.clone() }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let map = |a: &[Scalar]| a.iter().map(|x| x * c).collect();
        Cochain { part_i: map(&self.part_i), part_ii: map(&self.part_ii), ..self.clone() }
    }

    fn flat(&self, pairs: &[usize]) -> usize {
        let w = pair_count(self.source);
        pairs.iter().fold(0, |acc, &p| acc * w + p)
    }

    /// First part on basis wedges.
    pub fn at_i(&self, pairs: &[usize]) -> &[Scalar] {
        debug_assert!(self.wedges > 0 && pairs.len() == self.wedges);
        let start = self.flat(pairs) * self.target;
        &self.part_i[start..start + self.target]
    }

    /// Second part on basis wedges and the basis vector `e_x`.
    pub fn at_ii(&self, pairs: &[usize], x: usize) -> &[Scalar] {
        debug_assert!(pairs.len() == self.wedges);
        let start = (self.flat(pairs) * self.source + x) * self.target;
        &self.part_ii[start..start + self.target]
    }

    /// Multilinear evaluation of the first part.
    pub fn eval_i(&self, args: &[Wedge]) -> Vector {
        let mut out = Vector::zeros(self.field, self.target);
        if self.wedges == 0 {
            return out;
        }
        self.expand(args, &mut |pairs, c| out.axpy_slice(c, self.at_i(pairs)));
        out
    }

    /// Multilinear evaluation of the second part.
    pub fn eval_ii(&self, args: &[Wedge], x: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.target);
        self.expand(args, &mut |pairs, c| {
            for (i, a) in x.support() {
                out.axpy_slice(&(c * a), self.at_ii(pairs, i));
            }
        });
        out
    }

    fn expand(&self, args: &[Wedge], visit: &mut dyn FnMut(&[usize], &Scalar)) {
        debug_assert_eq!(args.len(), self.wedges);
        if args.iter().any(Vec::is_empty) {
            return;
        }
        let mut idx = vec![0usize; args.len()];
        let mut pairs = vec![0usize; args.len()];
        loop {
            let mut c = self.field.one();
            for (s, &k) in idx.iter().enumerate() {
                pairs[s] = args[s][k].0;
                c = &c * &args[s][k].1;
            }
            visit(&pairs, &c);
            let mut pos = args.len();
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < args[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Builds a cochain entry by entry: `first` receives basis pair indices, `second` also the
    /// index of the trailing basis vector. Entries are computed in parallel.
    pub fn tabulate<F1, F2>(field: Field, source: usize, target: usize, wedges: usize, first: F1, second: F2) -> Self
    where
        F1: Fn(&[usize]) -> Vector + Sync,
        F2: Fn(&[usize], usize) -> Vector + Sync,
    {
        let w = pair_count(source);
        let tuples = power(w, wedges);
        let unflat = |mut flat: usize| {
            let mut pairs = vec![0usize; wedges];
            for slot in (0..wedges).rev() {
                pairs[slot] = flat % w;
                flat /= w;
            }
            pairs
        };
        let part_i: Vec<Scalar> = if wedges == 0 {
            Vec::new()
        } else {
            (0..tuples).into_par_iter().flat_map_iter(|t| first(&unflat(t)).0).collect()
        };
        let part_ii: Vec<Scalar> = (0..tuples * source)
            .into_par_iter()
            .flat_map_iter(|k| second(&unflat(k / source), k % source).0)
            .collect();
        Cochain { field, source, target, wedges, part_i, part_ii }
    }
}

/// Every `(p, q)`-shuffle of `0..p+q` with its sign: the permutation lists `σ(0..p+q)`,
/// increasing on the first `p` and on the last `q` positions.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, bool)> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, bool)>) {
        if chosen.len() == p {
            let rest: Vec<usize> = (0..n).filter(|i| !chosen.contains(i)).collect();
            let mut perm = chosen.clone();
            perm.extend(rest);
            // inversions between the two blocks
            let inversions: usize = chosen.iter().enumerate().map(|(k, &c)| c - k).sum();
            out.push((perm, inversions % 2 == 1));
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, p, &mut chosen, &mut out);
    out
}

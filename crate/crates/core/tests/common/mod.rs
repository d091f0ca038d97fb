//! Fixtures and test-only oracles shared by the integration tests. The oracles are written
//! from the defining identities and avoid the library routines they are compared against.

#![allow(dead_code)]

use lie_yamaguti::algebra::{BinaryBracket, LieMode, LieYamagutiAlgebra, TernaryBracket};
use lie_yamaguti::cochain::Cochain;
use lie_yamaguti::field::{Field, Scalar};
use lie_yamaguti::linalg::{Matrix, Vector};
use lie_yamaguti::representation::Representation;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// `[e1, e2] = e2`.
pub fn nonabelian(field: Field, mode: LieMode) -> LieYamagutiAlgebra {
    LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(field, 2, &[(0, 1, 1, 1)]), mode).unwrap()
}

/// Basis `(h, e, f)`.
pub fn sl2(field: Field, mode: LieMode) -> LieYamagutiAlgebra {
    let b = BinaryBracket::from_i64(field, 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]);
    LieYamagutiAlgebra::from_lie(b, mode).unwrap()
}

/// `[e1, e2] = e3`.
pub fn heisenberg(field: Field, mode: LieMode) -> LieYamagutiAlgebra {
    LieYamagutiAlgebra::from_lie(BinaryBracket::from_i64(field, 3, &[(0, 1, 2, 1)]), mode).unwrap()
}

/// The defining two-dimensional module of `sl2`.
pub fn sl2_standard(field: Field, mode: LieMode) -> Option<Representation> {
    let rho = vec![
        Matrix::from_i64(field, &[&[1, 0], &[0, -1]]),
        Matrix::from_i64(field, &[&[0, 1], &[0, 0]]),
        Matrix::from_i64(field, &[&[0, 0], &[1, 0]]),
    ];
    let rep = Representation::from_lie_module(sl2(field, mode), rho).ok()?;
    rep.check().passed().then_some(rep)
}

/// Every antisymmetric pair of dim-2 tables over GF(2): two binary and four ternary coefficients.
pub fn gf2_dim2_tables() -> Vec<(BinaryBracket, TernaryBracket)> {
    let f = gf(2);
    (0u32..64)
        .map(|bits| {
            let bit = |k: u32| ((bits >> k) & 1) as i64;
            let b = BinaryBracket::from_i64(f, 2, &[(0, 1, 0, bit(0)), (0, 1, 1, bit(1))]);
            let t = TernaryBracket::from_i64(
                f,
                2,
                &[(0, 1, 0, 0, bit(2)), (0, 1, 0, 1, bit(3)), (0, 1, 1, 0, bit(4)), (0, 1, 1, 1, bit(5))],
            );
            (b, t)
        })
        .collect()
}

/// Every Lie-Yamaguti algebra of dimension 1 or 2 over GF(2), validated.
pub fn gf2_algebras() -> Vec<LieYamagutiAlgebra> {
    let mut out = vec![LieYamagutiAlgebra::zero(gf(2), 1).validate().unwrap()];
    for (b, t) in gf2_dim2_tables() {
        if let Ok(a) = LieYamagutiAlgebra::new(b, t).and_then(|a| a.validate()) {
            out.push(a);
        }
    }
    out
}

/// All `rows x cols` matrices over GF(p), by direct counting.
pub fn all_matrices(p: u64, rows: usize, cols: usize) -> Vec<Matrix> {
    let f = gf(p);
    let total = (p as usize).pow((rows * cols) as u32);
    (0..total)
        .map(|mut k| {
            Matrix::from_fn(f, rows, cols, |_, _| {
                let digit = k % p as usize;
                k /= p as usize;
                f.from_i64(digit as i64)
            })
        })
        .collect()
}

/// Every validated representation of `g` on a one-dimensional space over GF(2).
pub fn gf2_line_representations(g: &LieYamagutiAlgebra) -> Vec<Representation> {
    let n = g.dim();
    let count = n + n * n;
    let f = g.field();
    (0..1usize << count)
        .filter_map(|bits| {
            let entry = |k: usize| Matrix::from_fn(f, 1, 1, |_, _| f.from_i64(((bits >> k) & 1) as i64));
            let rho = (0..n).map(entry).collect();
            let mu = (n..count).map(entry).collect();
            let rep = Representation::new(g.clone(), 1, rho, mu).ok()?;
            rep.check().passed().then_some(rep)
        })
        .collect()
}

/// The `(x, y)` operator built from `rho` and `mu`: `rho_x rho_y - rho_y rho_x - rho_[x,y] - mu(x,y) + mu(y,x)`.
pub fn derived_oracle(rep: &Representation, x: &Vector, y: &Vector) -> Matrix {
    let g = rep.algebra();
    let (rx, ry) = (rep.rho_of(x), rep.rho_of(y));
    rx.mul(&ry)
        .sub(&ry.mul(&rx))
        .sub(&rep.rho_of(&g.bracket(x, y)))
        .sub(&rep.mu_of(x, y))
        .add(&rep.mu_of(y, x))
}

fn basis(field: Field, n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(field, n, i)).collect()
}

fn all_pairs<F: FnMut(&Vector, &Vector) -> bool>(vs: &[Vector], mut f: F) -> bool {
    vs.iter().all(|x| vs.iter().all(|y| f(x, y)))
}

fn all_triples<F: FnMut(&Vector, &Vector, &Vector) -> bool>(vs: &[Vector], mut f: F) -> bool {
    vs.iter().all(|x| vs.iter().all(|y| vs.iter().all(|z| f(x, y, z))))
}

/// `d[x,y] = rho_x d y - rho_y d x` and `d{x,y,z} = D(x,y) d z + mu(y,z) d x - mu(x,z) d y`.
pub fn is_derivation(rep: &Representation, d: &Matrix) -> bool {
    let g = rep.algebra();
    let xs = basis(g.field(), g.dim());
    let binary = all_pairs(&xs, |x, y| {
        d.apply(&g.bracket(x, y)) == &rep.rho_of(x).apply(&d.apply(y)) - &rep.rho_of(y).apply(&d.apply(x))
    });
    binary
        && all_triples(&xs, |x, y, z| {
            let rhs = &(&derived_oracle(rep, x, y).apply(&d.apply(z)) + &rep.mu_of(y, z).apply(&d.apply(x)))
                - &rep.mu_of(x, z).apply(&d.apply(y));
            d.apply(&g.triple(x, y, z)) == rhs
        })
}

/// The derivation identities with the brackets of `h` added to the right-hand sides.
pub fn is_crossed_homomorphism(rep: &Representation, h: &LieYamagutiAlgebra, d: &Matrix) -> bool {
    let g = rep.algebra();
    let xs = basis(g.field(), g.dim());
    let binary = all_pairs(&xs, |x, y| {
        let (dx, dy) = (d.apply(x), d.apply(y));
        let rhs = &(&h.bracket(&dx, &dy) + &rep.rho_of(x).apply(&dy)) - &rep.rho_of(y).apply(&dx);
        d.apply(&g.bracket(x, y)) == rhs
    });
    binary
        && all_triples(&xs, |x, y, z| {
            let (dx, dy, dz) = (d.apply(x), d.apply(y), d.apply(z));
            let mut rhs = h.triple(&dx, &dy, &dz);
            rhs = &rhs + &derived_oracle(rep, x, y).apply(&dz);
            rhs = &rhs + &rep.mu_of(y, z).apply(&dx);
            rhs = &rhs - &rep.mu_of(x, z).apply(&dy);
            d.apply(&g.triple(x, y, z)) == rhs
        })
}

/// Relative Rota-Baxter identities for `R : V -> g`; `h` supplies the brackets on `V` for weight 1
/// and is `None` for weight 0.
pub fn is_rota_baxter(rep: &Representation, h: Option<&LieYamagutiAlgebra>, r: &Matrix) -> bool {
    let g = rep.algebra();
    let vs = basis(g.field(), rep.repdim());
    let binary = all_pairs(&vs, |a, b| {
        let (ra, rb) = (r.apply(a), r.apply(b));
        let mut inner = &rep.rho_of(&ra).apply(b) - &rep.rho_of(&rb).apply(a);
        if let Some(h) = h {
            inner = &inner + &h.bracket(a, b);
        }
        g.bracket(&ra, &rb) == r.apply(&inner)
    });
    binary
        && all_triples(&vs, |a, b, c| {
            let (ra, rb, rc) = (r.apply(a), r.apply(b), r.apply(c));
            let mut inner = derived_oracle(rep, &ra, &rb).apply(c);
            inner = &inner + &rep.mu_of(&rb, &rc).apply(a);
            inner = &inner - &rep.mu_of(&ra, &rc).apply(b);
            if let Some(h) = h {
                inner = &inner + &h.triple(a, b, c);
            }
            g.triple(&ra, &rb, &rc) == r.apply(&inner)
        })
}

/// Canonical row-reduced basis of a span, used as a set key.
pub fn canonical(field: Field, dim: usize, span: &[Vector]) -> Vec<Vector> {
    let (reduced, pivots) = Matrix::from_rows(field, dim, span).rref();
    (0..pivots.len()).map(|i| Vector(reduced.row(i).to_vec())).collect()
}

fn rank_of(field: Field, dim: usize, vs: &[Vector]) -> usize {
    Matrix::from_rows(field, dim, vs).rank()
}

/// Every `k`-dimensional subspace of GF(p)^n, as the row-reduced basis for each pivot pattern
/// and each filling of the free entries.
pub fn subspaces(p: u64, n: usize, k: usize) -> Vec<Vec<Vector>> {
    let f = gf(p);
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    choose(n, k, 0, &mut pivots, &mut |piv| {
        let free: Vec<(usize, usize)> =
            (0..k).flat_map(|row| ((piv[row] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (row, c))).collect();
        for mut code in 0..(p as usize).pow(free.len() as u32) {
            let mut rows: Vec<Vector> = (0..k).map(|row| Vector::basis(f, n, piv[row])).collect();
            for &(row, c) in &free {
                rows[row][c] = f.from_i64((code % p as usize) as i64);
                code /= p as usize;
            }
            out.push(rows);
        }
    });
    out
}

fn choose(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        choose(n, k, i + 1, acc, visit);
        acc.pop();
    }
}

/// Closure of a span under both brackets, by rank comparison.
pub fn closed_under_brackets(ambient: &LieYamagutiAlgebra, span: &[Vector]) -> bool {
    let (f, n) = (ambient.field(), ambient.dim());
    let r = rank_of(f, n, span);
    let inside = |v: Vector| {
        let mut vs = span.to_vec();
        vs.push(v);
        rank_of(f, n, &vs) == r
    };
    all_pairs(span, |x, y| inside(ambient.bracket(x, y))) && all_triples(span, |x, y, z| inside(ambient.triple(x, y, z)))
}

/// `span` meets `g_span` trivially and together they fill the ambient space.
pub fn complements(n: usize, field: Field, g_span: &[Vector], span: &[Vector]) -> bool {
    let mut all = g_span.to_vec();
    all.extend_from_slice(span);
    rank_of(field, n, &all) == n && g_span.len() + span.len() == n
}

pub fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    field.from_i64(rng.gen_range(-3..=3))
}

pub fn random_cochain(field: Field, source: usize, target: usize, wedges: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let len = Cochain::space_dim(source, target, wedges);
    let v = Vector((0..len).map(|_| random_scalar(field, rng)).collect());
    Cochain::from_vector(source, target, wedges, &v).unwrap()
}

/// The 81 maps `2 x 2` with entries in `{-1, 0, 1}`.
pub fn grid(field: Field) -> Vec<Matrix> {
    (0..81u32)
        .map(|k| {
            let e: Vec<i64> = (0..4).map(|s| (k / 3u32.pow(s) % 3) as i64 - 1).collect();
            Matrix::from_fn(field, 2, 2, |i, j| field.from_i64(e[i * 2 + j]))
        })
        .collect()
}

/// Structure constants of the restriction of `ambient` to a subalgebra, in the given basis.
fn restricted_tables(ambient: &LieYamagutiAlgebra, span: &[Vector]) -> (Vec<Vector>, Vec<Vector>) {
    let (f, n) = (ambient.field(), ambient.dim());
    let coords = |v: Vector| Matrix::from_columns(f, n, span).solve(&v).expect("span is closed");
    let binary = span.iter().flat_map(|x| span.iter().map(move |y| (x, y))).map(|(x, y)| coords(ambient.bracket(x, y))).collect();
    let mut ternary = Vec::new();
    for x in span {
        for y in span {
            for z in span {
                ternary.push(coords(ambient.triple(x, y, z)));
            }
        }
    }
    (binary, ternary)
}

/// Number of isomorphism classes among subalgebras of equal dimension over GF(p), by trying
/// every invertible change of basis.
pub fn isomorphism_classes(ambient: &LieYamagutiAlgebra, spans: &[Vec<Vector>]) -> usize {
    let Some(k) = spans.first().map(Vec::len) else { return 0 };
    let f = ambient.field();
    let invertible: Vec<Matrix> = all_matrices(f.characteristic(), k, k).into_iter().filter(|m| m.rank() == k).collect();
    let tables: Vec<_> = spans.iter().map(|s| restricted_tables(ambient, s)).collect();
    let rebased = |a: usize, m: &Matrix| {
        let moved: Vec<Vector> = (0..k)
            .map(|j| {
                let mut v = Vector::zeros(f, ambient.dim());
                for (i, c) in m.column(j).iter().enumerate() {
                    v.axpy(c, &spans[a][i]);
                }
                v
            })
            .collect();
        restricted_tables(ambient, &moved)
    };
    let mut representatives: Vec<usize> = Vec::new();
    for a in 0..spans.len() {
        let known = representatives.iter().any(|&b| invertible.iter().any(|m| rebased(a, m) == tables[b]));
        if !known {
            representatives.push(a);
        }
    }
    representatives.len()
}

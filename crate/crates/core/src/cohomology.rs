//! Cohomology of a Lie-Yamaguti algebra with coefficients in a representation, and the
//! cohomology of a deformation map.

use rayon::prelude::*;

use crate::algebra::LieYamagutiAlgebra;
use crate::cochain::{pair_count, pair_of, wedge, Cochain, Wedge};
use crate::deformation::DeformationMap;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Vector};
use crate::representation::Representation;

fn sign(field: Field, negative: bool) -> crate::field::Scalar {
    field.from_i64(if negative { -1 } else { 1 })
}

/// The coboundary of `cochain`, which gains one wedge slot.
pub fn coboundary(algebra: &LieYamagutiAlgebra, rep: &Representation, cochain: &Cochain) -> Result<Cochain> {
    let (dim, repdim) = (algebra.dim(), rep.repdim());
    if cochain.source() != dim || cochain.target() != repdim || rep.algebra().dim() != dim {
        return Err(Error::Dimension(format!(
            "cochain maps dimension {} to {}, representation is of dimension {dim} on {repdim}",
            cochain.source(),
            cochain.target()
        )));
    }
    let field = algebra.field();
    let n = cochain.wedges() + 1;
    let e: Vec<Vector> = (0..dim).map(|i| algebra.basis(i)).collect();
    let basis_wedge = |p: usize| {
        let (i, j) = pair_of(dim, p);
        (e[i].clone(), e[j].clone())
    };
    let lifted = |pairs: &[usize]| -> Vec<Wedge> { pairs.iter().map(|&p| vec![(p, field.one())]).collect() };
    // slot j of the sum over i < j: the derivation action of X_i on X_j
    let derive_slot = |pi: usize, pj: usize| -> Wedge {
        let (xi, yi) = basis_wedge(pi);
        let (xj, yj) = basis_wedge(pj);
        let mut w = wedge(&algebra.triple(&xi, &yi, &xj), &yj);
        w.extend(wedge(&xj, &algebra.triple(&xi, &yi, &yj)));
        w
    };
    let without = |args: &[Wedge], k: usize| -> Vec<Wedge> {
        args.iter().enumerate().filter(|&(s, _)| s != k).map(|(_, w)| w.clone()).collect()
    };
    let outer_sign = sign(field, (n - 1) % 2 == 1);

    let first = |pairs: &[usize]| -> Vector {
        let args = lifted(pairs);
        let (xn, yn) = basis_wedge(pairs[n - 1]);
        let head = &args[..n - 1];
        let mut out = rep.act(&xn, &cochain.eval_ii(head, &yn));
        out = &out - &rep.act(&yn, &cochain.eval_ii(head, &xn));
        out = &out - &cochain.eval_ii(head, &algebra.bracket(&xn, &yn));
        let mut out = out.scale(&outer_sign);
        if n >= 2 {
            for k in 0..n - 1 {
                let (xk, yk) = basis_wedge(pairs[k]);
                let v = rep.derived_act(&xk, &yk, &cochain.eval_i(&without(&args, k)));
                out.axpy(&sign(field, k % 2 == 1), &v);
            }
            for i in 0..n {
                for j in i + 1..n {
                    let mut rest = args.clone();
                    rest[j] = derive_slot(pairs[i], pairs[j]);
                    let v = cochain.eval_i(&without(&rest, i));
                    out.axpy(&sign(field, i % 2 == 0), &v);
                }
            }
        }
        out
    };

    let second = |pairs: &[usize], x: usize| -> Vector {
        let args = lifted(pairs);
        let x = &e[x];
        let (xn, yn) = basis_wedge(pairs[n - 1]);
        let head = &args[..n - 1];
        let mut out = rep.mu_act(&yn, x, &cochain.eval_ii(head, &xn));
        out = &out - &rep.mu_act(&xn, x, &cochain.eval_ii(head, &yn));
        let mut out = out.scale(&outer_sign);
        for k in 0..n {
            let (xk, yk) = basis_wedge(pairs[k]);
            let rest = without(&args, k);
            let v = rep.derived_act(&xk, &yk, &cochain.eval_ii(&rest, x));
            out.axpy(&sign(field, k % 2 == 1), &v);
            let v = cochain.eval_ii(&rest, &algebra.triple(&xk, &yk, x));
            out.axpy(&sign(field, k % 2 == 0), &v);
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut rest = args.clone();
                rest[j] = derive_slot(pairs[i], pairs[j]);
                let v = cochain.eval_ii(&without(&rest, i), x);
                out.axpy(&sign(field, i % 2 == 0), &v);
            }
        }
        out
    };

    Ok(Cochain::tabulate(field, dim, repdim, n, first, second))
}

/// Matrix of a linear operator between cochain spaces, assembled column by column from the
/// images of basis cochains.
pub fn operator_matrix<F>(field: Field, source: usize, target: usize, wedges: usize, op: F) -> Result<Matrix>
where
    F: Fn(&Cochain) -> Result<Cochain> + Sync,
{
    let cols = Cochain::space_dim(source, target, wedges);
    let columns: Vec<Vector> = (0..cols)
        .into_par_iter()
        .map(|k| op(&Cochain::basis(field, source, target, wedges, k)).map(|c| c.to_vector()))
        .collect::<Result<_>>()?;
    let rows = Cochain::space_dim(source, target, wedges + 1);
    Ok(Matrix::from_columns(field, rows, &columns))
}

/// Cohomology dimensions from the ranks of consecutive differentials: `spaces[k]` is the
/// dimension of the `k`-th space and `ranks[k]` the rank of the differential leaving it.
fn dims_from_ranks(spaces: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..spaces.len())
        .map(|k| spaces[k] - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}

/// `(n, dim H^n)` for `n = 1..=max_n`; the complex starts at `C^1`.
pub fn cohomology_dims(algebra: &LieYamagutiAlgebra, rep: &Representation, max_n: usize) -> Result<Vec<(usize, usize)>> {
    let (dim, repdim) = (algebra.dim(), rep.repdim());
    let mut spaces = Vec::new();
    let mut ranks = Vec::new();
    for n in 1..=max_n {
        spaces.push(Cochain::space_dim(dim, repdim, n - 1));
        let m = operator_matrix(algebra.field(), dim, repdim, n - 1, |c| coboundary(algebra, rep, c))?;
        ranks.push(m.rank());
    }
    Ok(dims_from_ranks(&spaces, &ranks).into_iter().enumerate().map(|(k, d)| (k + 1, d)).collect())
}

/// The degree-0 differential of the deformation map complex: `d(x∧y)α = r(D(x,y)α) − ⟦x,y,rα⟧`,
/// with `D` the derived action of `g` on `h`.
pub fn defmap_d(dm: &DeformationMap, element: &Wedge) -> Matrix {
    let mp = dm.pair();
    let (g, h) = (mp.g(), mp.h());
    let r = dm.map();
    let field = g.field();
    let mut out = Matrix::zeros(field, g.dim(), h.dim());
    for (p, c) in element {
        let (i, j) = pair_of(g.dim(), *p);
        let (x, y) = (g.basis(i), g.basis(j));
        let term = Matrix::from_columns(
            field,
            g.dim(),
            &(0..h.dim())
                .map(|a| {
                    let alpha = h.basis(a);
                    &r.apply(&mp.on_h().derived_act(&x, &y, &alpha)) - &g.triple(&x, &y, &r.apply(&alpha))
                })
                .collect::<Vec<_>>(),
        );
        out.axpy(c, &term);
    }
    out
}

/// Matrix of `d : ∧²g -> Hom(h, g)` in the cochain coordinates of degree 0.
pub fn defmap_d_matrix(dm: &DeformationMap) -> Matrix {
    let g = dm.pair().g();
    let field = g.field();
    let w = pair_count(g.dim());
    let columns: Vec<Vector> =
        (0..w).map(|p| Cochain::from_map(&defmap_d(dm, &vec![(p, field.one())])).to_vector()).collect();
    Matrix::from_columns(field, g.dim() * dm.pair().h().dim(), &columns)
}

/// The differential `∂_r` on cochains of positive degree: the coboundary of the induced algebra
/// with coefficients in the induced representation on `g`.
pub fn defmap_coboundary(dm: &DeformationMap, cochain: &Cochain) -> Result<Cochain> {
    coboundary(&dm.induced_algebra(), &dm.induced_representation(), cochain)
}

/// `(n, dim H^n_r)` for `n = 0..=max_n`, where degree 0 is `∧²g` with differential [`defmap_d`].
pub fn defmap_cohomology_dims(dm: &DeformationMap, max_n: usize) -> Result<Vec<(usize, usize)>> {
    let (g, h) = (dm.pair().g().dim(), dm.pair().h().dim());
    let induced = dm.induced_algebra();
    let rep = dm.induced_representation();
    let mut spaces = vec![pair_count(g)];
    let mut ranks = vec![defmap_d_matrix(dm).rank()];
    for n in 1..=max_n {
        spaces.push(Cochain::space_dim(h, g, n - 1));
        let m = operator_matrix(induced.field(), h, g, n - 1, |c| coboundary(&induced, &rep, c))?;
        ranks.push(m.rank());
    }
    Ok(dims_from_ranks(&spaces, &ranks).into_iter().enumerate().collect())
}

//! The diamond product and the graded Lie bracket on `C^{•+1}(g, g)`, and the Maurer-Cartan
//! element of a Lie-Yamaguti structure.
//!
//! A cochain with `p` wedge slots has graded degree `p`. Degree-0 cochains are linear maps and
//! have no first part; the general shuffle formulas cover every regime once a missing first part
//! is read as zero.

use crate::algebra::{BinaryBracket, LieYamagutiAlgebra, TernaryBracket};
use crate::cochain::{pair_count, pair_of, shuffles, wedge, Cochain, Wedge};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Vector;

fn sign(field: Field, negative: bool) -> Scalar {
    field.from_i64(if negative { -1 } else { 1 })
}

fn check_shapes(p: &Cochain, q: &Cochain) -> Result<usize> {
    let n = p.source();
    if p.target() != n || q.source() != n || q.target() != n {
        return Err(Error::Dimension(format!(
            "graded cochains must be endomorphism-valued on one space, got {}->{} and {}->{}",
            p.source(),
            p.target(),
            q.source(),
            q.target()
        )));
    }
    Ok(n)
}

/// The wedge arguments of a basis tuple together with the vector pair of each slot.
struct Slots {
    args: Vec<Wedge>,
    vectors: Vec<(Vector, Vector)>,
}

impl Slots {
    fn new(field: Field, dim: usize, pairs: &[usize]) -> Slots {
        let args = pairs.iter().map(|&p| vec![(p, field.one())]).collect();
        let vectors = pairs
            .iter()
            .map(|&p| {
                let (i, j) = pair_of(dim, p);
                (Vector::basis(field, dim, i), Vector::basis(field, dim, j))
            })
            .collect();
        Slots { args, vectors }
    }

    fn pick(&self, positions: &[usize]) -> Vec<Wedge> {
        positions.iter().map(|&k| self.args[k].clone()).collect()
    }
}

/// The two mixed sums, where an output of `q` is wedged into slot `k` of `p`. `tail` is the
/// trailing vector for the second part, or `None` for the first part.
fn insertion_sums(p: &Cochain, q: &Cochain, slots: &Slots, tail: Option<&Vector>) -> Vector {
    let field = p.field();
    let (pw, qw) = (p.wedges(), q.wedges());
    let mut out = Vector::zeros(field, p.target());
    for k in 1..=pw {
        let outer = sign(field, ((k - 1) * qw) % 2 == 1);
        let (x, y) = &slots.vectors[k + qw - 1];
        let rest: Vec<Wedge> = slots.args[k + qw..].to_vec();
        for (perm, odd) in shuffles(k - 1, qw) {
            let c = &outer * &sign(field, odd);
            let head = slots.pick(&perm[..k - 1]);
            let inner = slots.pick(&perm[k - 1..]);
            for w in [wedge(&q.eval_ii(&inner, x), y), wedge(x, &q.eval_ii(&inner, y))] {
                let mut args = head.clone();
                args.push(w);
                args.extend(rest.iter().cloned());
                let v = match tail {
                    None => p.eval_i(&args),
                    Some(t) => p.eval_ii(&args, t),
                };
                out.axpy(&c, &v);
            }
        }
    }
    out
}

/// `(P ⋄ Q)_I` on basis wedges.
pub(crate) fn diamond_first(p: &Cochain, q: &Cochain, pairs: &[usize]) -> Vector {
    let field = p.field();
    let slots = Slots::new(field, p.source(), pairs);
    let (pw, qw) = (p.wedges(), q.wedges());
    let mut out = insertion_sums(p, q, &slots, None);
    if qw >= 1 {
        let outer = sign(field, (pw * qw) % 2 == 1);
        let last = pw + qw - 1;
        // shuffles fixing the last position: a (p, q-1)-shuffle of the rest, last slot to Q
        for (mut perm, odd) in shuffles(pw, qw - 1) {
            perm.push(last);
            let c = &outer * &sign(field, odd);
            let inner = q.eval_i(&slots.pick(&perm[pw..]));
            out.axpy(&c, &p.eval_ii(&slots.pick(&perm[..pw]), &inner));
        }
    }
    out
}

/// `(P ⋄ Q)_II` on basis wedges and the basis vector `e_x`.
pub(crate) fn diamond_second(p: &Cochain, q: &Cochain, pairs: &[usize], x: usize) -> Vector {
    let field = p.field();
    let slots = Slots::new(field, p.source(), pairs);
    let e = Vector::basis(field, p.source(), x);
    let (pw, qw) = (p.wedges(), q.wedges());
    let mut out = insertion_sums(p, q, &slots, Some(&e));
    let outer = sign(field, (pw * qw) % 2 == 1);
    for (perm, odd) in shuffles(pw, qw) {
        let c = &outer * &sign(field, odd);
        let inner = q.eval_ii(&slots.pick(&perm[pw..]), &e);
        out.axpy(&c, &p.eval_ii(&slots.pick(&perm[..pw]), &inner));
    }
    out
}

pub fn diamond(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let n = check_shapes(p, q)?;
    let wedges = p.wedges() + q.wedges();
    Ok(Cochain::tabulate(p.field(), n, n, wedges, |t| diamond_first(p, q, t), |t, x| diamond_second(p, q, t, x)))
}

/// Sign `(−1)^{pq}` of the graded commutator.
fn commutator_sign(p: &Cochain, q: &Cochain) -> Scalar {
    sign(p.field(), (p.wedges() * q.wedges()) % 2 == 1)
}

pub(crate) fn bracket_first(p: &Cochain, q: &Cochain, pairs: &[usize]) -> Vector {
    let mut out = diamond_first(p, q, pairs);
    out.axpy(&-commutator_sign(p, q), &diamond_first(q, p, pairs));
    out
}

pub(crate) fn bracket_second(p: &Cochain, q: &Cochain, pairs: &[usize], x: usize) -> Vector {
    let mut out = diamond_second(p, q, pairs, x);
    out.axpy(&-commutator_sign(p, q), &diamond_second(q, p, pairs, x));
    out
}

/// `[P, Q] = P ⋄ Q − (−1)^{pq} Q ⋄ P`.
pub fn graded_bracket(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let n = check_shapes(p, q)?;
    let wedges = p.wedges() + q.wedges();
    Ok(Cochain::tabulate(p.field(), n, n, wedges, |t| bracket_first(p, q, t), |t, x| bracket_second(p, q, t, x)))
}

/// The degree-1 cochain carrying a pair of brackets.
pub fn pi_from_brackets(binary: &BinaryBracket, ternary: &TernaryBracket) -> Cochain {
    let (field, n) = (binary.field(), binary.dim());
    let w = pair_count(n);
    let mut part_i = Vec::with_capacity(w * n);
    let mut part_ii = Vec::with_capacity(w * n * n);
    for p in 0..w {
        let (i, j) = pair_of(n, p);
        part_i.extend_from_slice(binary.on_basis(i, j));
        for x in 0..n {
            part_ii.extend_from_slice(ternary.on_basis(i, j, x));
        }
    }
    Cochain::from_parts(field, n, n, 1, part_i, part_ii).expect("shapes follow from the brackets")
}

pub fn pi(algebra: &LieYamagutiAlgebra) -> Cochain {
    pi_from_brackets(algebra.binary(), algebra.ternary())
}

/// Whether the brackets give a Maurer-Cartan element. Tests `π ⋄ π = 0`, which is `[π, π] = 0`
/// away from characteristic 2 and stays meaningful over GF(2).
pub fn mc_check_pi(binary: &BinaryBracket, ternary: &TernaryBracket) -> bool {
    let p = pi_from_brackets(binary, ternary);
    diamond(&p, &p).map(|c| c.is_zero()).unwrap_or(false)
}

/// `δ_π(P) = (−1)^{n−1} [π, P]` for `P ∈ C^n`.
pub fn delta_pi(algebra: &LieYamagutiAlgebra, cochain: &Cochain) -> Result<Cochain> {
    let b = graded_bracket(&pi(algebra), cochain)?;
    Ok(if cochain.wedges() % 2 == 1 { b.scale(&algebra.field().from_i64(-1)) } else { b })
}

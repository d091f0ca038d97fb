//! Derived brackets on `C^{•+1}(h, g)` from the bicrossed structure of a matched pair.
//!
//! The ambient graded Lie algebra is `C^{•+1}(g ⊕ h, g ⊕ h)` with `g` first. Cochains from `h`
//! to `g` embed as those vanishing unless every input lies in `h`, with values in `g`; the
//! projection restricts to `h` inputs and keeps the `g` part of the output. The structure element
//! is the Maurer-Cartan element of the bicrossed product.

use crate::cochain::{pair_count, pair_index, pair_of, Cochain};
use crate::cohomology::operator_matrix;
use crate::deformation::DeformationMap;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::graded::{bracket_first, bracket_second, diamond, graded_bracket, pi};
use crate::linalg::{Matrix, Vector};
use crate::matched_pair::MatchedPair;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct VData {
    pair: MatchedPair,
    structure: Cochain,
}

/// Maps a pair index of `h` to the pair index of the same wedge in `g ⊕ h`.
fn lift_pair(g: usize, h: usize, p: usize) -> usize {
    let (a, b) = pair_of(h, p);
    pair_index(g + h, g + a, g + b)
}

impl VData {
    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    /// The Maurer-Cartan element of the bicrossed product.
    pub fn structure(&self) -> &Cochain {
        &self.structure
    }

    fn dims(&self) -> (usize, usize) {
        (self.pair.g().dim(), self.pair.h().dim())
    }

    pub fn field(&self) -> Field {
        self.pair.field()
    }

    /// Embeds a cochain from `h` to `g` into the ambient algebra.
    pub fn lift(&self, cochain: &Cochain) -> Result<Cochain> {
        let (g, h) = self.dims();
        if cochain.source() != h || cochain.target() != g {
            return Err(Error::Dimension(format!(
                "expected a cochain from dimension {h} to {g}, got {} to {}",
                cochain.source(),
                cochain.target()
            )));
        }
        let n = g + h;
        let field = self.field();
        let big_pairs = pair_count(n);
        // inverse of lift_pair on the pairs that lie in h
        let mut restrict = vec![None; big_pairs];
        for p in 0..pair_count(h) {
            restrict[lift_pair(g, h, p)] = Some(p);
        }
        let small = |pairs: &[usize]| pairs.iter().map(|&p| restrict[p]).collect::<Option<Vec<usize>>>();
        let embed = |values: &[Scalar]| {
            let mut v = Vector::zeros(field, n);
            for (k, c) in values.iter().enumerate() {
                v[k] = c.clone();
            }
            v
        };
        Ok(Cochain::tabulate(
            field,
            n,
            n,
            cochain.wedges(),
            |pairs| match small(pairs) {
                Some(s) => embed(cochain.at_i(&s)),
                None => Vector::zeros(field, n),
            },
            |pairs, x| match (small(pairs), x >= g) {
                (Some(s), true) => embed(cochain.at_ii(&s, x - g)),
                _ => Vector::zeros(field, n),
            },
        ))
    }

    /// Restricts an ambient cochain to `h` inputs and keeps the `g` part of its values.
    pub fn project(&self, cochain: &Cochain) -> Cochain {
        let (g, h) = self.dims();
        let lifted = |pairs: &[usize]| pairs.iter().map(|&p| lift_pair(g, h, p)).collect::<Vec<_>>();
        Cochain::tabulate(
            self.field(),
            h,
            g,
            cochain.wedges(),
            |pairs| Vector(cochain.at_i(&lifted(pairs))[..g].to_vec()),
            |pairs, x| Vector(cochain.at_ii(&lifted(pairs), g + x)[..g].to_vec()),
        )
    }

    /// `p[A, B]`, evaluating the bracket only where the projection looks.
    fn project_bracket(&self, a: &Cochain, b: &Cochain) -> Cochain {
        let (g, h) = self.dims();
        let lifted = |pairs: &[usize]| pairs.iter().map(|&p| lift_pair(g, h, p)).collect::<Vec<_>>();
        Cochain::tabulate(
            self.field(),
            h,
            g,
            a.wedges() + b.wedges(),
            |pairs| Vector(bracket_first(a, b, &lifted(pairs)).0[..g].to_vec()),
            |pairs, x| Vector(bracket_second(a, b, &lifted(pairs), g + x).0[..g].to_vec()),
        )
    }

    /// The V-data conditions: the structure element squares to zero, projects to zero, and
    /// embedded cochains of degrees 0 and 1 pairwise commute.
    pub fn check(&self) -> Result<Report> {
        let (g, h) = self.dims();
        let field = self.field();
        let mut report = Report::new();
        let square = diamond(&self.structure, &self.structure)?;
        report.check("vdata-structure-squares-to-zero", &[1], |_| square.to_vector());
        let projected = self.project(&self.structure);
        report.check("vdata-structure-projects-to-zero", &[1], |_| projected.to_vector());
        let mut generators = Vec::new();
        for wedges in 0..2 {
            for k in 0..Cochain::space_dim(h, g, wedges) {
                generators.push(self.lift(&Cochain::basis(field, h, g, wedges, k))?);
            }
        }
        let count = generators.len();
        let brackets: Vec<Vector> = (0..count * count)
            .map(|k| graded_bracket(&generators[k / count], &generators[k % count]).map(|c| c.to_vector()))
            .collect::<Result<_>>()?;
        report.check("vdata-abelian", &[count, count], |t| brackets[t[0] * count + t[1]].clone());
        Ok(report)
    }
}

/// The V-data of a matched pair. The pair is validated first.
pub fn build_vdata(mp: &MatchedPair) -> Result<VData> {
    let pair = mp.clone().validate()?;
    let structure = pi(&pair.bicrossed()?);
    let vd = VData { pair, structure };
    let report = vd.check()?;
    if !report.passed() {
        return Err(Error::axioms("V-data", report));
    }
    Ok(vd)
}

/// Derived brackets, optionally twisted by a deformation map.
#[derive(Clone, Debug)]
pub struct LInftyStructure {
    vdata: VData,
    twist: Option<DeformationMap>,
    /// structure element for the unary bracket: `Π + [Π, r] + ½[[Π, r], r]`
    unary: Cochain,
    /// structure element for the binary bracket: `Π + [Π, r]`
    binary: Cochain,
}

pub fn derived_brackets(vd: &VData) -> LInftyStructure {
    LInftyStructure {
        vdata: vd.clone(),
        twist: None,
        unary: vd.structure.clone(),
        binary: vd.structure.clone(),
    }
}

fn require_division_by_six(field: Field) -> Result<()> {
    match field.characteristic() {
        2 => Err(Error::Characteristic(2)),
        3 => Err(Error::Characteristic(3)),
        _ => Ok(()),
    }
}

impl LInftyStructure {
    pub fn vdata(&self) -> &VData {
        &self.vdata
    }

    pub fn twist_map(&self) -> Option<&DeformationMap> {
        self.twist.as_ref()
    }

    pub fn field(&self) -> Field {
        self.vdata.field()
    }

    pub fn l1(&self, a: &Cochain) -> Result<Cochain> {
        let la = self.vdata.lift(a)?;
        Ok(self.vdata.project_bracket(&self.unary, &la))
    }

    pub fn l2(&self, a: &Cochain, b: &Cochain) -> Result<Cochain> {
        let inner = graded_bracket(&self.binary, &self.vdata.lift(a)?)?;
        Ok(self.vdata.project_bracket(&inner, &self.vdata.lift(b)?))
    }

    pub fn l3(&self, a: &Cochain, b: &Cochain, c: &Cochain) -> Result<Cochain> {
        self.nested(&[a, b, c])
    }

    /// `p[⋯[[Π, a₁], a₂], …, a_k]` with the untwisted structure element; zero for `k ≥ 4`.
    pub fn nested(&self, inputs: &[&Cochain]) -> Result<Cochain> {
        let (last, init) = inputs.split_last().ok_or_else(|| Error::Dimension("no inputs".into()))?;
        let mut acc = self.vdata.structure.clone();
        for a in init {
            acc = graded_bracket(&acc, &self.vdata.lift(a)?)?;
        }
        Ok(self.vdata.project_bracket(&acc, &self.vdata.lift(last)?))
    }

    /// `l₁(r) + ½ l₂(r, r) + ⅙ l₃(r, r, r)` for a linear map `r : h -> g`.
    pub fn mc_equation(&self, r: &Matrix) -> Result<Cochain> {
        let field = self.field();
        require_division_by_six(field)?;
        let c = Cochain::from_map(r);
        let half = field.ratio(1, 2).expect("characteristic checked");
        let sixth = field.ratio(1, 6).expect("characteristic checked");
        let l1 = self.l1(&c)?;
        let l2 = self.l2(&c, &c)?;
        let l3 = self.l3(&c, &c, &c)?;
        Ok(l1.add(&l2.scale(&half)).add(&l3.scale(&sixth)))
    }

    /// The structure twisted by `r`. Twisting an already twisted structure adds the maps.
    pub fn twist(&self, r: &DeformationMap) -> Result<LInftyStructure> {
        let field = self.field();
        require_division_by_six(field)?;
        if r.pair() != &self.vdata.pair {
            return Err(Error::Dimension("deformation map belongs to a different matched pair".into()));
        }
        let total = match &self.twist {
            Some(prev) => DeformationMap::new(self.vdata.pair.clone(), prev.map().add(r.map()))?,
            None => r.clone(),
        };
        let pi = &self.vdata.structure;
        let lr = self.vdata.lift(&Cochain::from_map(total.map()))?;
        let once = graded_bracket(pi, &lr)?;
        let twice = graded_bracket(&once, &lr)?;
        let half = field.ratio(1, 2).expect("characteristic checked");
        Ok(LInftyStructure {
            vdata: self.vdata.clone(),
            twist: Some(total),
            unary: pi.add(&once).add(&twice.scale(&half)),
            binary: pi.add(&once),
        })
    }

    /// Matrix of the unary bracket from cochains with `wedges` slots.
    pub fn l1_matrix(&self, wedges: usize) -> Result<Matrix> {
        let (g, h) = (self.vdata.pair.g().dim(), self.vdata.pair.h().dim());
        operator_matrix(self.field(), h, g, wedges, |c| self.l1(c))
    }
}

/// `(n, dim)` of the cohomology of the unary bracket for `n = 1..=max_n`, starting at `C^1(h, g)`.
pub fn twisted_complex_dims(ls: &LInftyStructure, max_n: usize) -> Result<Vec<(usize, usize)>> {
    let (g, h) = (ls.vdata.pair.g().dim(), ls.vdata.pair.h().dim());
    let mut out = Vec::new();
    let mut incoming = 0;
    for n in 1..=max_n {
        let rank = ls.l1_matrix(n - 1)?.rank();
        out.push((n, Cochain::space_dim(h, g, n - 1) - rank - incoming));
        incoming = rank;
    }
    Ok(out)
}

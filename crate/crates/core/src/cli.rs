//! The `lyctl` command line: every command reads one input file and prints a deterministic
//! report. Exit status 0 means success, 1 a mathematical failure, 2 an input error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cochain::{pair_of, Cochain};
use crate::cohomology::{cohomology_dims, defmap_cohomology_dims};
use crate::deformation::{check_deformation_map, classify_complements, enumerate_deformation_maps, ComplementCensus, DeformationMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::mc_check_pi;
use crate::io::{parse_algebra, parse_bundle, write_algebra, write_bundle, Bundle};
use crate::linalg::{Matrix, Vector};
use crate::linfty::{build_vdata, derived_brackets};
use crate::lts::{LieTripleSystem, LtsMatchedPair, LtsRepresentation};
use crate::matched_pair::{Inclusion, MatchedPair};
use crate::report::Report;
use crate::representation::Representation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lyctl", version, about = "Exact computations with Lie-Yamaguti algebras")]
pub struct Cli {
    /// Required field of the input ("Q" or "GF p"); a file over another field is rejected.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Highest cohomology degree to compute.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_degree: usize,
    /// Largest number of candidate maps an enumeration may visit.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    pub budget: u64,
    /// Directory that relative input paths are resolved against.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Lie-Yamaguti axioms of an algebra file.
    CheckLy { file: PathBuf },
    /// Check a representation bundle (algebra g, repdim or algebra h, rho/mu).
    CheckRep { file: PathBuf },
    /// Check the compatibility conditions of a matched pair bundle.
    CheckMp { file: PathBuf },
    /// Print the bicrossed product of a matched pair bundle.
    Bicrossed { file: PathBuf },
    /// Print the canonical matched pair of a strong complement (algebra ambient, maps g_span, h_span).
    CanonicalMp { file: PathBuf },
    /// Check that map r of a matched pair bundle is a deformation map.
    CheckDefmap { file: PathBuf },
    /// List all deformation maps of a matched pair bundle over a finite field.
    EnumerateDefmaps { file: PathBuf },
    /// Classify the complements of g (algebra ambient, maps g_span, h_span).
    ClassifyComplements { file: PathBuf },
    /// Cohomology dimensions: adjoint coefficients for an algebra file, or a representation bundle.
    Cohomology { file: PathBuf },
    /// Cohomology dimensions of deformation map r of a matched pair bundle.
    DefmapCohomology { file: PathBuf },
    /// Whether the brackets of an algebra file form a Maurer-Cartan element.
    McCheck { file: PathBuf },
    /// Print the derived brackets evaluated on map r of a matched pair bundle.
    DerivedBrackets { file: PathBuf },
    /// Print the Maurer-Cartan residual of map r of a matched pair bundle.
    McEquation { file: PathBuf },
    /// Check the twisting identity for deformation map r and map r_prime.
    TwistCheck { file: PathBuf },
    /// Check the Lie triple system axioms of an algebra file without binary entries.
    LtsCheck { file: PathBuf },
    /// Check a Lie triple system matched pair bundle (mu and nu only).
    LtsCheckMp { file: PathBuf },
    /// Check that map r is a deformation map of a Lie triple system matched pair.
    LtsCheckDefmap { file: PathBuf },
    /// Classify complements in a Lie triple system (algebra ambient, maps g_span, h_span).
    LtsClassifyComplements { file: PathBuf },
}

/// Result of a command before it is turned into an exit status.
enum Outcome {
    Pass(String),
    Fail(String),
}

fn from_report(report: &Report) -> Outcome {
    if report.passed() {
        Outcome::Pass("passed".into())
    } else {
        Outcome::Fail(format!("failed: {report}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    match execute(&cli) {
        Ok(Outcome::Pass(text)) => (EXIT_OK, text),
        Ok(Outcome::Fail(text)) => (EXIT_FAILURE, text),
        Err(e) if e.is_input_error() => (EXIT_INPUT, format!("error: {e}")),
        Err(e) => (EXIT_FAILURE, format!("failed: {e}")),
    }
}

fn parse_field_flag(text: &str) -> Result<Field> {
    match text.split_whitespace().collect::<Vec<_>>()[..] {
        ["Q"] => Ok(Field::Rational),
        ["GF", p] => Field::prime(p.parse().map_err(|_| Error::Parse(format!("invalid prime '{p}'")))?),
        [p] if p.starts_with("GF") => {
            Field::prime(p[2..].parse().map_err(|_| Error::Parse(format!("invalid field '{text}'")))?)
        }
        _ => Err(Error::Parse(format!("invalid field '{text}', expected Q or GF p"))),
    }
}

struct Context<'a> {
    cli: &'a Cli,
}

impl Context<'_> {
    fn read(&self, file: &Path) -> Result<String> {
        let path = match &self.cli.fixtures_dir {
            Some(dir) if file.is_relative() => dir.join(file),
            _ => file.to_path_buf(),
        };
        Ok(std::fs::read_to_string(path)?)
    }

    fn expect_field(&self, field: Field) -> Result<()> {
        if let Some(text) = &self.cli.field {
            let wanted = parse_field_flag(text)?;
            if wanted != field {
                return Err(Error::InvalidField(format!("input is over {field}, --field asks for {wanted}")));
            }
        }
        Ok(())
    }

    fn algebra(&self, file: &Path) -> Result<crate::algebra::LieYamagutiAlgebra> {
        let a = parse_algebra(&self.read(file)?)?;
        self.expect_field(a.field())?;
        Ok(a)
    }

    fn bundle(&self, file: &Path) -> Result<Bundle> {
        let b = parse_bundle(&self.read(file)?)?;
        self.expect_field(b.field)?;
        Ok(b)
    }

    fn budget(&self) -> u128 {
        self.cli.budget as u128
    }
}

fn format_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn format_vector(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Nonzero entries of a cochain, one per line, with 1-based wedge pairs.
fn format_cochain(c: &Cochain) -> String {
    let mut lines = Vec::new();
    let w = crate::cochain::pair_count(c.source());
    let tuples = (0..c.wedges()).fold(1usize, |acc, _| acc * w);
    let pairs_of = |mut flat: usize| {
        let mut pairs = vec![0; c.wedges()];
        for slot in (0..c.wedges()).rev() {
            pairs[slot] = flat % w;
            flat /= w;
        }
        pairs
    };
    let label = |pairs: &[usize]| {
        pairs
            .iter()
            .map(|&p| {
                let (i, j) = pair_of(c.source(), p);
                format!("e{}^e{}", i + 1, j + 1)
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    for t in 0..tuples {
        let pairs = pairs_of(t);
        if c.wedges() > 0 {
            let v = Vector(c.at_i(&pairs).to_vec());
            if !v.is_zero() {
                lines.push(format!("  I({}) = {}", label(&pairs), format_vector(&v)));
            }
        }
        for x in 0..c.source() {
            let v = Vector(c.at_ii(&pairs, x).to_vec());
            if !v.is_zero() {
                let sep = if c.wedges() > 0 { ", " } else { "" };
                lines.push(format!("  II({}{sep}e{}) = {}", label(&pairs), x + 1, format_vector(&v)));
            }
        }
    }
    if lines.is_empty() {
        "  0".into()
    } else {
        lines.join("\n")
    }
}

fn format_dims(dims: &[(usize, usize)]) -> String {
    dims.iter().map(|(n, d)| format!("H^{n} = {d}")).collect::<Vec<_>>().join("\n")
}

fn inclusion(bundle: &Bundle) -> Result<Inclusion> {
    let ambient = bundle.algebra("ambient")?.clone();
    let columns = |m: &Matrix| (0..m.cols()).map(|j| m.column(j)).collect::<Vec<_>>();
    let g_span = columns(bundle.map("g_span")?);
    let h_span = columns(bundle.map("h_span")?);
    for v in g_span.iter().chain(&h_span) {
        if v.len() != ambient.dim() {
            return Err(Error::Dimension("span vectors must have the ambient dimension".into()));
        }
    }
    Ok(Inclusion { ambient, g_span, h_span })
}

fn format_census(census: &ComplementCensus) -> String {
    let mut out = format!(
        "{} deformation maps\nfactorization index {}\n",
        census.maps.len(),
        census.factorization_index
    );
    for (k, class) in census.classes.iter().enumerate() {
        out.push_str(&format!("class {}:\n", k + 1));
        for &i in class {
            out.push_str(&format!("  r = {}\n", format_matrix(census.maps[i].map())));
        }
    }
    out.trim_end().to_string()
}

/// Validated pair, reporting which layer failed.
fn validated_pair(bundle: &Bundle) -> Result<MatchedPair> {
    bundle.matched_pair()?.validate()
}

fn lts_pair(bundle: &Bundle) -> Result<(LtsMatchedPair, Report)> {
    for name in ["rho", "psi"] {
        if bundle.actions.contains_key(name) {
            return Err(Error::Parse(format!("Lie triple system bundles carry no '{name}' entries")));
        }
    }
    let mp = bundle.matched_pair()?;
    let g = LieTripleSystem::from_ly(mp.g())?;
    let h = LieTripleSystem::from_ly(mp.h())?;
    let on_h = LtsRepresentation::new(g, mp.h().dim(), mp.on_h().mu_all().to_vec())?;
    let on_g = LtsRepresentation::new(h, mp.g().dim(), mp.on_g().mu_all().to_vec())?;
    let pair = LtsMatchedPair::unchecked(on_h, on_g)?;
    let report = pair.check();
    Ok((pair, report))
}

fn lts_system(a: &crate::algebra::LieYamagutiAlgebra) -> Result<LieTripleSystem> {
    if !a.binary().is_zero() {
        return Err(Error::Parse("Lie triple system files carry no binary entries".into()));
    }
    LieTripleSystem::new(a.ternary().clone())
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let ctx = Context { cli };
    Ok(match &cli.command {
        Command::CheckLy { file } => from_report(&ctx.algebra(file)?.check_axioms()),
        Command::CheckRep { file } => {
            let rep = ctx.bundle(file)?.representation()?;
            let mut report = rep.algebra().check_axioms();
            report.merge(rep.check());
            from_report(&report)
        }
        Command::CheckMp { file } => {
            let mp = ctx.bundle(file)?.matched_pair()?;
            let mut report = mp.g().check_axioms();
            report.merge(mp.h().check_axioms());
            report.merge(mp.on_h().check());
            report.merge(mp.on_g().check());
            report.merge(mp.check());
            from_report(&report)
        }
        Command::Bicrossed { file } => {
            let mp = validated_pair(&ctx.bundle(file)?)?;
            Outcome::Pass(write_algebra(&mp.bicrossed()?).trim_end().to_string())
        }
        Command::CanonicalMp { file } => {
            let inc = inclusion(&ctx.bundle(file)?)?;
            let mp = MatchedPair::canonical(&inc)?;
            Outcome::Pass(write_bundle(&Bundle::from_pair(&mp)).trim_end().to_string())
        }
        Command::CheckDefmap { file } => {
            let b = ctx.bundle(file)?;
            let mp = validated_pair(&b)?;
            from_report(&check_deformation_map(&mp, b.map("r")?)?)
        }
        Command::EnumerateDefmaps { file } => {
            let mp = validated_pair(&ctx.bundle(file)?)?;
            let maps = enumerate_deformation_maps(&mp, ctx.budget())?;
            let mut out = format!("{} deformation maps", maps.len());
            for dm in &maps {
                out.push_str(&format!("\n  r = {}", format_matrix(dm.map())));
            }
            Outcome::Pass(out)
        }
        Command::ClassifyComplements { file } => {
            let census = classify_complements(&inclusion(&ctx.bundle(file)?)?, ctx.budget())?;
            Outcome::Pass(format_census(&census))
        }
        Command::Cohomology { file } => {
            let text = ctx.read(file)?;
            let is_bundle = text.lines().any(|l| l.split_whitespace().next() == Some("algebra"));
            let rep = if is_bundle {
                let b = parse_bundle(&text)?;
                ctx.expect_field(b.field)?;
                b.representation()?.validate()?
            } else {
                let a = parse_algebra(&text)?;
                ctx.expect_field(a.field())?;
                Representation::adjoint(a.validate()?)
            };
            let algebra = rep.algebra().clone().validate()?;
            Outcome::Pass(format_dims(&cohomology_dims(&algebra, &rep, cli.max_degree)?))
        }
        Command::DefmapCohomology { file } => {
            let b = ctx.bundle(file)?;
            let dm = DeformationMap::new(validated_pair(&b)?, b.map("r")?.clone())?;
            Outcome::Pass(format_dims(&defmap_cohomology_dims(&dm, cli.max_degree)?))
        }
        Command::McCheck { file } => {
            let a = ctx.algebra(file)?;
            let mc = mc_check_pi(a.binary(), a.ternary());
            let axioms = a.check_axioms();
            let text = format!(
                "maurer-cartan: {}\naxioms: {axioms}",
                if mc { "yes" } else { "no" }
            );
            if mc {
                Outcome::Pass(text)
            } else {
                Outcome::Fail(text)
            }
        }
        Command::DerivedBrackets { file } => {
            let b = ctx.bundle(file)?;
            let ls = derived_brackets(&build_vdata(&validated_pair(&b)?)?);
            let r = Cochain::from_map(b.map("r")?);
            Outcome::Pass(format!(
                "l1(r):\n{}\nl2(r, r):\n{}\nl3(r, r, r):\n{}",
                format_cochain(&ls.l1(&r)?),
                format_cochain(&ls.l2(&r, &r)?),
                format_cochain(&ls.l3(&r, &r, &r)?)
            ))
        }
        Command::McEquation { file } => {
            let b = ctx.bundle(file)?;
            let ls = derived_brackets(&build_vdata(&validated_pair(&b)?)?);
            let residual = ls.mc_equation(b.map("r")?)?;
            let text = format!("residual:\n{}", format_cochain(&residual));
            if residual.is_zero() {
                Outcome::Pass(text)
            } else {
                Outcome::Fail(text)
            }
        }
        Command::TwistCheck { file } => {
            let b = ctx.bundle(file)?;
            let mp = validated_pair(&b)?;
            let ls = derived_brackets(&build_vdata(&mp)?);
            let dm = DeformationMap::new(mp.clone(), b.map("r")?.clone())?;
            let r2 = b.map("r_prime")?;
            let twisted = ls.twist(&dm)?.mc_equation(r2)?;
            let shifted = ls.mc_equation(&dm.map().add(r2))?;
            if twisted != shifted {
                return Ok(Outcome::Fail("twisting identity violated".into()));
            }
            let sum_is_defmap = check_deformation_map(&mp, &dm.map().add(r2))?.passed();
            Outcome::Pass(format!(
                "twisting identity holds\nr_prime is a maurer-cartan element of the twist: {}\nr + r_prime is a deformation map: {}",
                if twisted.is_zero() { "yes" } else { "no" },
                if sum_is_defmap { "yes" } else { "no" }
            ))
        }
        Command::LtsCheck { file } => {
            let a = ctx.algebra(file)?;
            if !a.binary().is_zero() {
                return Err(Error::Parse("Lie triple system files carry no binary entries".into()));
            }
            from_report(&crate::algebra::check_lts_axioms(a.ternary()))
        }
        Command::LtsCheckMp { file } => from_report(&lts_pair(&ctx.bundle(file)?)?.1),
        Command::LtsCheckDefmap { file } => {
            let b = ctx.bundle(file)?;
            let (pair, report) = lts_pair(&b)?;
            if !report.passed() {
                return Err(Error::axioms("Lie triple system matched pair", report));
            }
            from_report(&pair.check_deformation_map(b.map("r")?)?)
        }
        Command::LtsClassifyComplements { file } => {
            let b = ctx.bundle(file)?;
            let inc = inclusion(&b)?;
            lts_system(&inc.ambient)?;
            let census = classify_complements(&inc, ctx.budget())?;
            Outcome::Pass(format_census(&census))
        }
    })
}

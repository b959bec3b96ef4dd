//! `rbleib` subcommands. [`run`] does all the work and returns the text for
//! both streams, so the binary is a thin shell around it.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{
    check_leibniz, check_rota_baxter, induced_bracket_star, iterated_bracket, iterated_bracket_closed,
    nilpotency_degree, verify_nilpotent_vanishing, RBLeibnizAlgebra,
};
use crate::cohomology::{cohomology_table, coboundary, differential_with, ComplexKind};
use crate::deform::{check_deformation, check_infinitesimal_cocycle, infinitesimal, order_residual, TruncatedDeformation};
use crate::error::{Error, Result};
use crate::extension::{
    canonical_section, check_extension, extension_cocycle, extension_cocycle_pair, section_induced_actions,
    AbelianExtension,
};
use crate::io::document::{parse_document, AlgebraDocument, ExtensionBlock, RepresentationBlock};
use crate::io::report::Report;
use crate::par::{set_thread_cap, Exec};
use crate::repr::{check_rb_representation, dual_representation, induced_representation, Representation};
use crate::violation::{Law, Violation};

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "RBLEIB_THREADS";

/// Column count above which `cohomology` warns.
pub const COLUMN_WARNING: usize = 100_000;

#[derive(Parser, Debug)]
#[command(name = "rbleib", version, about = "Exact computations for Rota-Baxter Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ComplexArg {
    La,
    Rbo,
    Rbla,
}

impl From<ComplexArg> for ComplexKind {
    fn from(c: ComplexArg) -> Self {
        match c {
            ComplexArg::La => ComplexKind::La,
            ComplexArg::Rbo => ComplexKind::Rbo,
            ComplexArg::Rbla => ComplexKind::Rbla,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Leibniz and Rota-Baxter identities (and the representation, if given).
    Validate { file: PathBuf },
    /// Cohomology dimensions in degrees 0..=N.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = ComplexArg::Rbla)]
        complex: ComplexArg,
        /// Print every differential as a rational grid.
        #[arg(long)]
        emit_matrices: bool,
    },
    /// Star bracket and the n-th iterated bracket.
    Induced {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Dual of the representation (self-representation by default).
    Dual { file: PathBuf },
    /// Nilpotency degree of the Rota-Baxter operator.
    Nilpotency { file: PathBuf },
    /// Order-by-order deformation equations and the infinitesimal cocycle.
    Deform {
        file: PathBuf,
        /// Highest order to check; defaults to the document's order.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Cocycle (ψ, χ) of an abelian extension through its canonical section.
    Extension { file: PathBuf },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut stderr = String::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                set_thread_cap(n);
            }
            _ => stderr.push_str(&format!("warning: ignoring {THREADS_ENV}={v:?}; expected a positive integer\n")),
        }
    }
    match dispatch(cli.command, &mut stderr) {
        Ok(report) => Outcome { code: if report.passed() { 0 } else { 1 }, stdout: report.render(), stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome { code: 2, stdout: String::new(), stderr }
        }
    }
}

fn load(path: &PathBuf) -> Result<AlgebraDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn dispatch(command: Command, stderr: &mut String) -> Result<Report> {
    match command {
        Command::Validate { file } => validate(&load(&file)?),
        Command::Cohomology { file, max_degree, complex, emit_matrices } => {
            cohomology(&load(&file)?, max_degree, complex.into(), emit_matrices, stderr)
        }
        Command::Induced { file, power } => induced(&load(&file)?, power),
        Command::Dual { file } => dual(&load(&file)?),
        Command::Nilpotency { file } => nilpotency(&load(&file)?),
        Command::Deform { file, order } => deform(&load(&file)?, order),
        Command::Extension { file } => extension(&load(&file)?),
    }
}

fn algebra_violations(a: &RBLeibnizAlgebra) -> Result<(Vec<Violation>, Vec<Violation>)> {
    Ok((check_leibniz(a.bracket())?, check_rota_baxter(a.algebra(), a.operator())?))
}

/// Writes the axiom verdicts; returns whether the input is usable.
fn axioms(report: &mut Report, doc: &AlgebraDocument, always_print: bool) -> Result<bool> {
    let (lb, rb) = algebra_violations(&doc.algebra)?;
    let mut ok = lb.is_empty() && rb.is_empty();
    if always_print || !ok {
        report.verdicts(&[("leibniz", &lb), ("rota-baxter", &rb)]);
    }
    if let Some(RepresentationBlock::Explicit(r)) = &doc.representation {
        let v = check_rb_representation(&doc.algebra, r)?;
        if always_print || !v.is_empty() {
            report.verdicts(&[("representation", &v)]);
        }
        ok &= v.is_empty();
    }
    Ok(ok)
}

fn describe_representation(doc: &AlgebraDocument, r: &Representation) -> String {
    match doc.representation {
        Some(RepresentationBlock::Explicit(_)) => format!("representation: explicit, dim_v {}", r.dim_v()),
        _ => format!("representation: self, dim_v {}", r.dim_v()),
    }
}

fn validate(doc: &AlgebraDocument) -> Result<Report> {
    let mut report = Report::new("validate");
    report.line(format!("dim {}", doc.algebra.dim()));
    axioms(&mut report, doc, true)?;
    Ok(report)
}

fn cohomology(
    doc: &AlgebraDocument,
    max_degree: usize,
    kind: ComplexKind,
    emit_matrices: bool,
    stderr: &mut String,
) -> Result<Report> {
    let mut report = Report::new(&format!(
        "cohomology --max-degree {max_degree} --complex {kind}{}",
        if emit_matrices { " --emit-matrices" } else { "" }
    ));
    if !axioms(&mut report, doc, false)? {
        return Ok(report);
    }
    let r = doc.representation_or_self();
    let (dg, dv) = (doc.algebra.dim(), r.dim_v());
    if let Some(w) = column_warning(dg, dv, max_degree) {
        stderr.push_str(&w);
    }
    report.line(describe_representation(doc, &r));
    report.line(format!("complex: {kind}"));
    let exec = Exec::default();
    report.table(&cohomology_table(&doc.algebra, &r, kind, max_degree, exec)?);
    if emit_matrices {
        for n in 0..=max_degree {
            let m = differential_with(&doc.algebra, &r, kind, n, exec)?;
            report.matrix(&format!("d^{n}"), &m);
        }
    }
    Ok(report)
}

/// Warning text for the first degree whose cochain count `dim_g^n * dim_v`
/// exceeds [`COLUMN_WARNING`].
fn column_warning(dg: usize, dv: usize, max_degree: usize) -> Option<String> {
    (0..=max_degree).find_map(|n| {
        let cols = dg.checked_pow(n as u32).and_then(|p| p.checked_mul(dv));
        match cols {
            Some(c) if c <= COLUMN_WARNING => None,
            _ => Some(format!(
                "warning: degree {n} has dim_g^n * dim_v = {} columns (above {COLUMN_WARNING}); this may be slow\n",
                cols.map_or_else(|| "more than usize::MAX".to_string(), |c| c.to_string())
            )),
        }
    })
}

fn induced(doc: &AlgebraDocument, power: usize) -> Result<Report> {
    let mut report = Report::new(&format!("induced --power {power}"));
    if !axioms(&mut report, doc, false)? {
        return Ok(report);
    }
    let a = &doc.algebra;
    let star = induced_bracket_star(a);
    report.constants("star bracket", star.bracket());
    let (lb, rb) = algebra_violations(&star)?;
    report.verdicts(&[("star leibniz", &lb), ("star rota-baxter", &rb)]);
    let it = iterated_bracket(a, power);
    report.constants(&format!("iterated bracket n={power}"), &it);
    report.check("binomial closed form", it == iterated_bracket_closed(a, power));
    Ok(report)
}

fn dual(doc: &AlgebraDocument) -> Result<Report> {
    let mut report = Report::new("dual");
    if !axioms(&mut report, doc, false)? {
        return Ok(report);
    }
    let r = doc.representation_or_self();
    report.line(describe_representation(doc, &r));
    let d = dual_representation(&doc.algebra, &r)?;
    report.constants("dual left [x, u, w]", d.left());
    report.constants("dual right [u, x, w]", d.right());
    report.operator("dual t_v", d.operator());
    let v = check_rb_representation(&doc.algebra, &d)?;
    report.verdicts(&[("dual rb-representation", &v)]);
    let ind = induced_representation(&doc.algebra, &r)?;
    let v = check_rb_representation(&induced_bracket_star(&doc.algebra), &ind)?;
    report.verdicts(&[("induced rb-representation", &v)]);
    Ok(report)
}

fn nilpotency(doc: &AlgebraDocument) -> Result<Report> {
    let mut report = Report::new("nilpotency");
    match nilpotency_degree(doc.algebra.operator())? {
        None => report.line("not nilpotent"),
        Some(n) => {
            report.line(format!("degree {n}"));
            let (lb, rb) = algebra_violations(&doc.algebra)?;
            if lb.is_empty() && rb.is_empty() {
                let mut ok = true;
                for k in 2 * n + 1..=2 * n + 3 {
                    ok &= verify_nilpotent_vanishing(&doc.algebra, k)?;
                }
                report.check(&format!("iterated brackets vanish for k = {}..{}", 2 * n + 1, 2 * n + 3), ok);
            }
        }
    }
    Ok(report)
}

fn missing(block: &str, command: &str) -> Error {
    Error::Document(format!("`{command}` needs a `{block}` block"))
}

fn deform(doc: &AlgebraDocument, order: Option<usize>) -> Result<Report> {
    let block = doc.deformation.as_ref().ok_or_else(|| missing("deformation", "deform"))?;
    let full = block.mu.len();
    let k = order.unwrap_or(full);
    if k > full {
        return Err(Error::Document(format!("--order {k} exceeds the document's deformation order {full}")));
    }
    let mut report = Report::new(&format!("deform --order {k}"));
    let d = TruncatedDeformation::from_base(&doc.algebra, block.mu[..k].to_vec(), block.t[..k].to_vec())?;
    let violations = check_deformation(&d, k)?;
    let mut first_failure = None;
    for n in 0..=k {
        let at = |law: Law| -> Vec<Violation> {
            violations.iter().filter(|v| v.degree == Some(n) && v.law == law).cloned().collect()
        };
        let (b, t) = (at(Law::DeformBracket), at(Law::DeformOperator));
        if !(b.is_empty() && t.is_empty()) && first_failure.is_none() {
            first_failure = Some(n);
        }
        report.verdicts(&[(&format!("order {n} bracket"), &b), ("operator", &t)]);
    }
    match infinitesimal(&d) {
        None => report.line("infinitesimal: none (constant deformation)"),
        Some(inf) if first_failure.is_some_and(|f| f < inf.degree) => {
            report.line(format!("infinitesimal: degree {}, 2-cocycle: not checked", inf.degree));
        }
        Some(inf) => {
            let ok = check_infinitesimal_cocycle(&doc.algebra, &d)?;
            report.check(&format!("infinitesimal: degree {}, 2-cocycle", inf.degree), ok);
        }
    }
    if first_failure.is_none() {
        let (tri, bi) = order_residual(&d);
        let zero = tri.is_zero() && bi.is_zero();
        report.line(format!("residual at order {}: {}", k + 1, if zero { "zero" } else { "nonzero" }));
    }
    Ok(report)
}

fn extension(doc: &AlgebraDocument) -> Result<Report> {
    let block = doc.extension.as_ref().ok_or_else(|| missing("extension", "extension"))?;
    let mut report = Report::new("extension");
    if !axioms(&mut report, doc, false)? {
        return Ok(report);
    }
    let base = &doc.algebra;
    let e = match block {
        ExtensionBlock::Cocycle { psi, chi } => {
            let r = doc.representation_or_self();
            report.line(describe_representation(doc, &r));
            AbelianExtension::from_cocycle(base, &r, psi, chi)?
        }
        ExtensionBlock::Raw { total, inclusion, projection, fiber_operator } => AbelianExtension::new(
            total.clone(),
            fiber_operator.clone(),
            inclusion.clone(),
            projection.clone(),
            base.clone(),
        )?,
    };
    let v = check_extension(&e)?;
    if !report.verdicts(&[("extension", &v)]) {
        return Ok(report);
    }
    let s = canonical_section(&e)?;
    let (psi, chi) = extension_cocycle(&e, &s)?;
    report.constants("psi [x, y, w]", &psi.to_bilinear()?);
    report.operator("chi", &chi.to_operator()?);
    let rep = section_induced_actions(&e, &s)?;
    if let ExtensionBlock::Cocycle { .. } = block {
        report.check("induced actions match the representation", rep == doc.representation_or_self());
    }
    let z = extension_cocycle_pair(&e, &s)?;
    let image = coboundary(base, &rep, &z)?;
    report.check("2-cocycle", image.is_zero());
    Ok(report)
}

//! The `koszul` command line tool.
//!
//! Exit codes: 0 ran (verdicts are printed, not signalled), 1 internal
//! inconsistency between independent computations, 2 usage or parse error,
//! 3 axiom violation, 4 precondition violation.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{Completeness, IncidenceAlgebra};
use crate::builders::Fixture;
use crate::error::{Error, Result};
use crate::format::{parse_facet_list, PosetFile};
use crate::homology::{is_cm, is_seq_acyclic, seq_cm_witness};
use crate::interval::RelationKind;
use crate::koszul::{
    action_disagreements, is_koszul_ideal, is_koszul_ring, is_quadratic, tor_bar,
    tor_topological, MonomialRightIdeal, TorTable,
};
use crate::linalg::Field;
use crate::numerology::{
    hilbert_matrix, poincare_from_h_diagonals, poincare_matrix, verify_koszul_identity, PolyMatrix,
};
use crate::simplicial::SimplicialComplex;
use crate::sr::duality_crosscheck;

#[derive(Parser, Debug)]
#[command(name = "koszul", version, about = "Koszul and Cohen-Macaulay checks for posets and simplicial complexes")]
struct Cli {
    /// Tab-separated output.
    #[arg(long, global = true)]
    tsv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poset validity and gradedness.
    Check { file: String },
    /// Axiom reports for the file's interval relation.
    Axioms { file: String },
    /// Koszulness of the associated graded ring, or of the file's ideal.
    Koszul {
        file: String,
        #[arg(long, default_value = "q")]
        field: Field,
        #[arg(long)]
        ideal: bool,
    },
    /// Tor tables.
    Tor {
        file: String,
        #[arg(long, default_value = "q")]
        field: Field,
        #[arg(long, value_enum, default_value_t = ModuleArg::Ring)]
        module: ModuleArg,
        #[arg(long, value_enum, default_value_t = BackendArg::Topo)]
        backend: BackendArg,
    },
    /// Hilbert and Poincaré matrices and the identity P(t)Q(-t) = I.
    Matrices {
        file: String,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Quadraticity via gallery connectivity of open intervals.
    Quadratic { file: String },
    /// Sequential Cohen-Macaulayness of a simplicial complex.
    Seqcm {
        #[arg(long)]
        facets: String,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Componentwise linearity of a Stanley-Reisner ideal against its
    /// Alexander dual. The facets describe the dual complex unless --dual.
    Sr {
        #[arg(long)]
        facets: String,
        #[arg(long)]
        vertices: usize,
        /// The facets describe the complex itself rather than its dual.
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Prints a built-in poset file.
    Fixture { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleArg {
    Ring,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Topo,
    Bar,
    Both,
}

struct Report<'a> {
    tsv: bool,
    out: &'a mut dyn Write,
}

impl Report<'_> {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> std::io::Result<()> {
        if self.tsv {
            writeln!(self.out, "{key}\t{value}")
        } else {
            writeln!(self.out, "{key}: {value}")
        }
    }

    fn flag(&mut self, key: &str, value: bool) -> std::io::Result<()> {
        self.kv(key, if value { "TRUE" } else { "FALSE" })
    }

    fn matrix(&mut self, key: &str, m: &PolyMatrix) -> std::io::Result<()> {
        if self.tsv {
            for (r, row) in m.entries.iter().enumerate() {
                for (c, p) in row.iter().enumerate() {
                    let coeffs: Vec<String> = p.coeffs().iter().map(i64::to_string).collect();
                    let coeffs = if coeffs.is_empty() { "0".to_string() } else { coeffs.join(",") };
                    writeln!(self.out, "{key}\t{}\t{}\t{coeffs}", m.labels[r], m.labels[c])?;
                }
            }
            Ok(())
        } else {
            writeln!(self.out, "{key}:")?;
            write!(self.out, "{m}")
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let mut report = Report { tsv: cli.tsv, out };
    match dispatch(cli.command, stdin, &mut report) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}", describe_error(&e));
            exit_code(&e)
        }
    }
}

fn describe_error(e: &Error) -> String {
    match e {
        Error::AxiomViolation(_) => format!("{e} (the axioms command prints a witness)"),
        _ => e.to_string(),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) => 1,
        Error::AxiomViolation(_) => 3,
        Error::Precondition(_) => 4,
        _ => 2,
    }
}

enum Failure {
    Io(std::io::Error),
    Domain(Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read_file(path: &str, stdin: &mut dyn Read) -> std::result::Result<PosetFile, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| std::io::Error::new(e.kind(), format!("{path}: {e}")))?;
    }
    Ok(PosetFile::parse(&text)?)
}

fn algebra_of(file: &PosetFile) -> Result<IncidenceAlgebra> {
    file.algebra()
}

fn ideal_of(file: &PosetFile, algebra: &IncidenceAlgebra) -> Result<MonomialRightIdeal> {
    let gens = file
        .ideal_generators(algebra)?
        .ok_or_else(|| Error::Precondition("the file has no 'ideal:' line".into()))?;
    MonomialRightIdeal::from_generators(algebra, &gens)
}

fn dispatch(command: Command, stdin: &mut dyn Read, r: &mut Report) -> std::result::Result<i32, Failure> {
    match command {
        Command::Check { file } => {
            let file = read_file(&file, stdin)?;
            let p = &file.poset;
            r.kv("ELEMENTS", p.len())?;
            r.kv("COVERS", p.cover_relations().len())?;
            r.kv("INTERVALS", p.intervals().len())?;
            r.kv("HEIGHT", p.height().map_or("NONE".to_string(), |h| h.to_string()))?;
            match p.grading_witness() {
                None => r.flag("GRADED", true)?,
                Some(w) => {
                    r.flag("GRADED", false)?;
                    r.kv("GRADING-WITNESS", format!("[{},{}]", p.name(w.lo), p.name(w.hi)))?;
                }
            }
            r.kv("VERDICT", "VALID")?;
        }
        Command::Axioms { file } => {
            let file = read_file(&file, stdin)?;
            let rel = file.relation()?;
            r.kv("RELATION", kind_name(rel.kind()))?;
            r.kv("CLASSES", rel.num_classes())?;
            let reports = rel.validate_axioms();
            for rep in &reports {
                r.kv(&format!("AXIOM-{}", rep.axiom), rep.verdict)?;
                if let Some(w) = &rep.witness {
                    r.kv(&format!("WITNESS-{}", rep.axiom), rel.describe(w))?;
                }
            }
            let valid = reports.iter().all(|x| x.passed());
            r.kv("VERDICT", if valid { "VALID" } else { "INVALID" })?;
        }
        Command::Koszul { file, field, ideal } => {
            let file = read_file(&file, stdin)?;
            let alg = algebra_of(&file)?;
            let rel = alg.relation();
            r.kv("FIELD", field)?;
            let verdict = if ideal {
                let j = ideal_of(&file, &alg)?;
                r.kv("MODULE", "ideal")?;
                r.kv("IDEAL-CLASSES", j.members().len())?;
                let disagreements = action_disagreements(&alg, &j);
                r.kv("ACTION-DISAGREEMENTS", disagreements.len())?;
                for (b, a, g) in disagreements {
                    r.kv(
                        "ACTION-DISAGREEMENT",
                        format!("{} {} {}", rel.class_label(b), rel.class_label(a), rel.class_label(g)),
                    )?;
                }
                is_koszul_ideal(&alg, &j, field)?
            } else {
                r.kv("MODULE", "ring")?;
                is_koszul_ring(&alg, field)?
            };
            r.kv("VERDICT", if verdict.koszul { "KOSZUL" } else { "NOT-KOSZUL" })?;
            if let Some(w) = verdict.witness {
                r.kv("WITNESS-INTERVAL", rel.class_label(w.class))?;
                if !ideal {
                    r.kv("WITNESS-FACE", format!("{{{}}}", w.face.join(" ")))?;
                }
                r.kv("WITNESS-HOMOLOGY", format!("i={} j={}", w.homology.0, w.homology.1))?;
            }
        }
        Command::Tor { file, field, module, backend } => {
            let file = read_file(&file, stdin)?;
            let alg = algebra_of(&file)?;
            let ideal = match module {
                ModuleArg::Ring => None,
                ModuleArg::Ideal => Some(ideal_of(&file, &alg)?),
            };
            let i_max = alg.relation().poset().len();
            r.kv("FIELD", field)?;
            r.kv("MODULE", match module { ModuleArg::Ring => "ring", ModuleArg::Ideal => "ideal" })?;
            let topo = (backend != BackendArg::Bar).then(|| tor_topological(&alg, ideal.as_ref(), field));
            let bar = if backend != BackendArg::Topo {
                Some(tor_bar(&alg, ideal.as_ref(), field, Some(i_max))?)
            } else {
                None
            };
            let shown = topo.as_ref().or(bar.as_ref()).expect("one backend runs");
            r.kv("BACKEND", match backend {
                BackendArg::Topo => "topological",
                BackendArg::Bar => "bar",
                BackendArg::Both => "topological+bar",
            })?;
            print_tor(r, &alg, shown)?;
            if let (Some(t), Some(b)) = (&topo, &bar) {
                let diffs = t.differences(b, i_max);
                r.kv("MAX-DEGREE", i_max)?;
                r.kv("AGREEMENT", if diffs.is_empty() { "PASS" } else { "FAIL" })?;
                for ((s, tg, i, j), x, y) in &diffs {
                    r.kv(
                        "MISMATCH",
                        format!("{} {} i={i} j={j} topological={x} bar={y}", point(&alg, *s), point(&alg, *tg)),
                    )?;
                }
                if !diffs.is_empty() {
                    return Ok(1);
                }
            }
        }
        Command::Matrices { file, field } => {
            let file = read_file(&file, stdin)?;
            let alg = algebra_of(&file)?;
            r.kv("FIELD", field)?;
            let p = hilbert_matrix(&alg);
            r.kv("POINTS", p.labels.join(" "))?;
            r.matrix("P(t)", &p)?;
            r.matrix("Q(t)", &poincare_matrix(&alg, field))?;
            let koszul = is_koszul_ring(&alg, field)?.koszul;
            r.flag("KOSZUL", koszul)?;
            if alg.completeness() == Completeness::AmbientSemigroup {
                r.kv("IDENTITY", "SKIPPED")?;
                r.kv("IDENTITY-NOTE", "semigroup window; P(t) is truncated to the window")?;
            } else {
                let (holds, product) = verify_koszul_identity(&alg, field);
                r.kv("IDENTITY", if holds { "PASS" } else { "FAIL" })?;
                if !holds {
                    r.matrix("P(t)Q(-t)", &product)?;
                    if koszul {
                        return Ok(1);
                    }
                    r.kv("IDENTITY-NOTE", "informational; not Koszul, no identity is expected")?;
                }
            }
            if koszul {
                let agree = poincare_from_h_diagonals(&alg) == poincare_matrix(&alg, field);
                r.kv("Q-FROM-H-DIAGONALS", if agree { "MATCH" } else { "MISMATCH" })?;
                if !agree {
                    return Ok(1);
                }
            }
        }
        Command::Quadratic { file } => {
            let file = read_file(&file, stdin)?;
            let alg = algebra_of(&file)?;
            let v = is_quadratic(&alg)?;
            r.kv("VERDICT", if v.quadratic { "QUADRATIC" } else { "NOT-QUADRATIC" })?;
            if let Some((class, d)) = v.witness {
                r.kv("WITNESS-INTERVAL", alg.relation().class_label(class))?;
                r.kv("WITNESS-DIMENSION", d)?;
            }
            match v.tor2_off_diagonal {
                None => r.kv("TOR2-OFF-DIAGONAL", "NONE")?,
                Some(((s, t, _, j), dim)) => r.kv(
                    "TOR2-OFF-DIAGONAL",
                    format!("{} {} j={j} dim={dim}", point(&alg, s), point(&alg, t)),
                )?,
            }
        }
        Command::Seqcm { facets, field } => {
            let c = parse_facet_list(&facets, None)?;
            r.kv("FIELD", field)?;
            describe_complex(r, "COMPLEX", &c)?;
            r.flag("PURE", c.is_pure())?;
            r.flag("SEQ-ACYCLIC", is_seq_acyclic(&c, field))?;
            r.flag("CM", is_cm(&c, field))?;
            let w = seq_cm_witness(&c, field);
            r.flag("SEQCM", w.is_none())?;
            r.kv("VERDICT", if w.is_none() { "SEQUENTIALLY-CM" } else { "NOT-SEQUENTIALLY-CM" })?;
            if let Some((face, (i, j))) = w {
                r.kv("WITNESS-FACE", format!("{{{}}}", c.face_labels(&face).join(" ")))?;
                r.kv("WITNESS-HOMOLOGY", format!("i={i} j={j}"))?;
            }
        }
        Command::Sr { facets, vertices, dual, field } => {
            let given = parse_facet_list(&facets, Some(vertices))?;
            let complex = if dual { given } else { given.alexander_dual() };
            let rep = duality_crosscheck(&complex, field)?;
            let ideal = crate::sr::SquarefreeIdeal::of_complex(&complex);
            r.kv("FIELD", field)?;
            describe_complex(r, "COMPLEX", &complex)?;
            describe_complex(r, "DUAL", &rep.dual)?;
            r.kv("IDEAL", ideal.generator_names().join(" "))?;
            r.kv(
                "SCOPE",
                format!("squarefree classes of the divisor poset of x1..x{vertices}; classes with repeated variables are not examined"),
            )?;
            r.kv("CLASSES-CHECKED", rep.linearity.classes_checked)?;
            let lin = rep.linearity.componentwise_linear;
            r.kv("VERDICT", if lin { "COMPONENTWISE-LINEAR" } else { "NOT-COMPONENTWISE-LINEAR" })?;
            if let Some((class, (i, j))) = &rep.linearity.witness {
                r.kv("WITNESS-CLASS", class)?;
                r.kv("WITNESS-HOMOLOGY", format!("i={i} j={j}"))?;
            }
            r.flag("SEQCM", rep.dual_seq_cm)?;
            r.flag("DUAL-PURE", rep.dual_pure)?;
            if let Some(cm) = rep.dual_cm {
                r.flag("CM", cm)?;
            }
            r.kv("AGREEMENT", if rep.agreement() { "PASS" } else { "FAIL" })?;
            if !rep.agreement() {
                return Ok(1);
            }
        }
        Command::Fixture { name } => {
            let f = Fixture::from_name(&name)?;
            writeln!(r.out, "# {}", f.name())?;
            write!(r.out, "{}", PosetFile::from_poset(f.poset()))?;
        }
    }
    Ok(0)
}

fn kind_name(kind: RelationKind) -> &'static str {
    match kind {
        RelationKind::Trivial => "trivial",
        RelationKind::Classes => "classes",
        RelationKind::Semigroup => "semigroup",
    }
}

fn point(alg: &IncidenceAlgebra, class: usize) -> String {
    alg.relation().point_label(class).to_string()
}

fn print_tor(r: &mut Report, alg: &IncidenceAlgebra, table: &TorTable) -> std::io::Result<()> {
    r.kv("ENTRIES", table.entries().len())?;
    for (&(s, t, i, j), &dim) in table.entries() {
        if r.tsv {
            writeln!(r.out, "TOR\t{}\t{}\t{i}\t{j}\t{dim}", point(alg, s), point(alg, t))?;
        } else {
            writeln!(r.out, "TOR: {} {} i={i} j={j} dim={dim}", point(alg, s), point(alg, t))?;
        }
    }
    Ok(())
}

fn describe_complex(r: &mut Report, key: &str, c: &SimplicialComplex) -> std::io::Result<()> {
    r.kv(key, c)?;
    r.kv(&format!("{key}-DIMENSION"), c.dim().map_or("NONE".to_string(), |d| d.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let args: Vec<String> = std::iter::once("koszul").chain(args.iter().copied()).map(String::from).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fixture_then_koszul() {
        let (code, text, _) = run_str(&["fixture", "DBLCHAIN"], "");
        assert_eq!(code, 0);
        let (code, out, _) = run_str(&["koszul", "-"], &text);
        assert_eq!(code, 0);
        assert!(out.contains("VERDICT: NOT-KOSZUL\n"));
        assert!(out.contains("WITNESS-INTERVAL: [0^,1^]\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["check", "-"], "elements: a\ncovers: a<b\n").0, 2);
        assert_eq!(run_str(&["koszul", "-", "--field", "4"], "").0, 2);
        assert_eq!(run_str(&["bogus"], "").0, 2);
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
        // the two covers of a diamond identified, but their tops differ
        let bad = "elements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\nequiv: classes\nclass: [0,a] [a,1]\n";
        assert_eq!(run_str(&["koszul", "-"], bad).0, 3);
        let diamond = "elements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\n";
        assert_eq!(run_str(&["koszul", "-", "--ideal"], diamond).0, 4);
        assert_eq!(run_str(&["sr", "--facets", "", "--vertices", "2"], "").0, 4);
    }
}

use std::io::{self, IsTerminal, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use simplicial::complexes::{listing_order, realize};
use simplicial::constructions::{self, SubSSet};
use simplicial::document::{Object, ObjectDocument, parse_document, parse_subset, serialize_document};
use simplicial::fincat::{nerve, validate_category};
use simplicial::homology::{euler_characteristic, homology_up_to, pi0};
use simplicial::horn::{RecognitionReport, is_groupoid_nerve_up_to, is_kan_up_to, is_nerve_up_to, is_quasicategory_up_to};
use simplicial::sset::count_simplicial_maps;
use simplicial::FiniteSSet;

#[derive(Parser)]
#[command(name = "sset", version, about = "Build and inspect finitely presented simplicial sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an object and write its document to stdout
    Build {
        #[command(subcommand)]
        spec: BuildSpec,
    },
    /// Check the simplicial identities, complex closure, or category laws
    Validate {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Bounded horn-filler recognition
    Check {
        kind: CheckKind,
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        bound: usize,
    },
    /// Integral homology in degrees 0..=max
    Homology {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        max: usize,
    },
    /// Alternating count of nondegenerate simplices
    Euler {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Path components
    Pi0 {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Number of simplicial maps between two objects
    HomCount { source: String, target: String },
    /// Number of n-simplices of the mapping space Map(K, L)
    MapSpace {
        source: String,
        target: String,
        #[arg(long)]
        level: usize,
    },
    /// Standard realization of a complex as an OFF mesh
    Realize {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum BuildSpec {
    Simplex {
        n: usize,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    Boundary {
        n: usize,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    Horn {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    Nerve {
        category: String,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
    Product { left: String, right: String },
    Coproduct { left: String, right: String },
    /// Collapse a face-closed subset, given as {"members": [[dim, index], ...]}
    Collapse { file: String, subset: String },
    Skeleton { file: String, m: usize },
    FromOriented {
        file: String,
        #[arg(long, default_value_t = 4)]
        truncation: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Kan,
    Qcat,
    Nerve,
    GroupoidNerve,
}

enum Failure {
    /// Validation or check failed: exit 1.
    Rejected(String),
    /// Bad input or usage: exit 2.
    Error(String),
}

type Outcome = Result<String, Failure>;

fn error(e: impl ToString) -> Failure {
    Failure::Error(e.to_string())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| error(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| error(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<ObjectDocument, Failure> {
    parse_document(&read_input(path)?).map_err(|e| error(format!("{path}: {e}")))
}

fn load_sset(path: &str) -> Result<(String, FiniteSSet), Failure> {
    let doc = load(path)?;
    match doc.object {
        Object::SSet(k) => Ok((doc.name, k)),
        other => Err(error(format!("{path}: expected an sset document, found {}", other.kind()))),
    }
}

/// Loads an sset and rejects it if the simplicial identities fail.
fn load_valid(path: &str) -> Result<(String, FiniteSSet), Failure> {
    let (name, k) = load_sset(path)?;
    let report = k.validate();
    if let Some(v) = report.violations.first() {
        return Err(Failure::Rejected(format!("{path}: {v}")));
    }
    Ok((name, k))
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Self {
            color: io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()),
        }
    }

    fn verdict(&self, ok: bool, text: &str) -> String {
        match (self.color, ok) {
            (false, _) => text.to_string(),
            (true, true) => format!("\x1b[32m{text}\x1b[0m"),
            (true, false) => format!("\x1b[31m{text}\x1b[0m"),
        }
    }
}

fn emit(name: String, k: FiniteSSet) -> Outcome {
    Ok(serialize_document(&ObjectDocument::sset(name, k)))
}

fn build(spec: BuildSpec) -> Outcome {
    match spec {
        BuildSpec::Simplex { n, truncation } => emit(format!("Δ[{n}]"), constructions::standard_simplex(n, truncation).map_err(error)?),
        BuildSpec::Boundary { n, truncation } => emit(format!("∂Δ[{n}]"), constructions::boundary(n, truncation).map_err(error)?),
        BuildSpec::Horn { n, k, truncation } => emit(format!("Λ^{k}[{n}]"), constructions::horn(n, k, truncation).map_err(error)?),
        BuildSpec::Nerve { category, truncation } => {
            let doc = load(&category)?;
            let Object::Category(c) = doc.object else {
                return Err(error(format!("{category}: expected a category document")));
            };
            let report = validate_category(&c);
            if !report.is_valid() {
                let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::Rejected(lines.join("\n")));
            }
            emit(format!("N({})", doc.name), nerve(&c, truncation).map_err(error)?)
        }
        BuildSpec::Product { left, right } => {
            let ((a, k), (b, l)) = (load_sset(&left)?, load_sset(&right)?);
            emit(format!("{a} × {b}"), constructions::product(&k, &l).map_err(error)?.sset)
        }
        BuildSpec::Coproduct { left, right } => {
            let ((a, k), (b, l)) = (load_sset(&left)?, load_sset(&right)?);
            emit(format!("{a} ⊔ {b}"), constructions::coproduct(&k, &l).map_err(error)?)
        }
        BuildSpec::Collapse { file, subset } => {
            let (a, k) = load_sset(&file)?;
            let keys = parse_subset(&read_input(&subset)?).map_err(|e| error(format!("{subset}: {e}")))?;
            let sub = SubSSet::new(&k, keys).map_err(error)?;
            emit(format!("{a}/A"), constructions::collapse(&k, &sub).map_err(error)?.0)
        }
        BuildSpec::Skeleton { file, m } => {
            let (a, k) = load_sset(&file)?;
            emit(format!("sk_{m} {a}"), constructions::skeleton(&k, m).map_err(error)?)
        }
        BuildSpec::FromOriented { file, truncation } => {
            let doc = load(&file)?;
            let body = match doc.object {
                Object::OrientedComplex(b) | Object::Complex(b) => b,
                other => return Err(error(format!("{file}: expected a complex document, found {}", other.kind()))),
            };
            let oriented = body.oriented().map_err(|e| Failure::Rejected(e.to_string()))?;
            emit(doc.name, constructions::oriented_to_sset(&oriented, truncation).map_err(error)?)
        }
    }
}

fn validate(file: &str, style: &Style) -> Outcome {
    let doc = load(file)?;
    let problems: Vec<String> = match &doc.object {
        Object::SSet(k) => k.validate().violations.iter().map(|v| v.to_string()).collect(),
        Object::Complex(b) => b.complex().err().map(|e| e.0.iter().map(|v| v.to_string()).collect()).unwrap_or_default(),
        Object::OrientedComplex(b) => b.oriented().err().map(|e| e.0.iter().map(|v| v.to_string()).collect()).unwrap_or_default(),
        Object::Category(c) => validate_category(c).violations.iter().map(|v| v.to_string()).collect(),
    };
    if problems.is_empty() {
        Ok(style.verdict(true, "valid"))
    } else {
        Err(Failure::Rejected(format!("{}\n{}", style.verdict(false, "invalid"), problems.join("\n"))))
    }
}

fn check(kind: CheckKind, file: &str, bound: usize, style: &Style) -> Outcome {
    let (_, k) = load_valid(file)?;
    let report: RecognitionReport = match kind {
        CheckKind::Kan => is_kan_up_to(&k, bound),
        CheckKind::Qcat => is_quasicategory_up_to(&k, bound),
        CheckKind::Nerve => is_nerve_up_to(&k, bound),
        CheckKind::GroupoidNerve => is_groupoid_nerve_up_to(&k, bound),
    }
    .map_err(error)?;
    let summary = report.summary(&k);
    let (verdict, rest) = summary.split_at(4);
    let line = format!("{}{}", style.verdict(report.passed(), verdict), rest);
    if report.passed() { Ok(line) } else { Err(Failure::Rejected(line)) }
}

fn run(cli: Cli) -> Outcome {
    let style = Style::detect();
    match cli.command {
        Command::Build { spec } => build(spec),
        Command::Validate { file } => validate(&file, &style),
        Command::Check { kind, file, bound } => check(kind, &file, bound, &style),
        Command::Homology { file, max } => {
            let (_, k) = load_valid(&file)?;
            let groups = homology_up_to(&k, max).map_err(error)?;
            Ok(groups.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("\n"))
        }
        Command::Euler { file } => {
            let (_, k) = load_valid(&file)?;
            Ok(euler_characteristic(&k).to_string())
        }
        Command::Pi0 { file } => {
            let (_, k) = load_valid(&file)?;
            let p = pi0(&k);
            let mut lines = vec![p.count.to_string()];
            for c in 0..p.count {
                let members: Vec<String> = (0..k.count(0))
                    .filter(|&v| p.of_vertex[v] == c)
                    .map(|v| k.describe(&simplicial::SimplexRef::nondegenerate(simplicial::SimplexKey::new(0, v))))
                    .collect();
                lines.push(format!("{c}: {}", members.join(" ")));
            }
            Ok(lines.join("\n"))
        }
        Command::HomCount { source, target } => {
            let ((_, k), (_, l)) = (load_valid(&source)?, load_valid(&target)?);
            Ok(count_simplicial_maps(&k, &l).map_err(error)?.to_string())
        }
        Command::MapSpace { source, target, level } => {
            let ((_, k), (_, l)) = (load_valid(&source)?, load_valid(&target)?);
            Ok(constructions::mapping_space_level(&k, &l, level).map_err(error)?.len().to_string())
        }
        Command::Realize { file, out } => {
            let doc = load(&file)?;
            let body = match doc.object {
                Object::Complex(b) | Object::OrientedComplex(b) => b,
                other => return Err(error(format!("{file}: expected a complex document, found {}", other.kind()))),
            };
            let complex = body.complex().map_err(|e| Failure::Rejected(e.to_string()))?;
            let mesh = realize(&complex, &listing_order(&complex)).map_err(error)?.to_off();
            match out {
                Some(path) => {
                    std::fs::write(&path, &mesh).map_err(|e| error(format!("{path}: {e}")))?;
                    Ok(format!("wrote {path}"))
                }
                None => Ok(mesh.trim_end().to_string()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, text, to_err) = match run(cli) {
        Ok(text) => (0, text, false),
        Err(Failure::Rejected(text)) => (1, text, false),
        Err(Failure::Error(text)) => (2, format!("error: {text}"), true),
    };
    if to_err {
        eprintln!("{text}");
    } else if !text.is_empty() {
        let mut out = io::stdout().lock();
        let text = if text.ends_with('\n') { text } else { text + "\n" };
        // a closed pipe is not worth reporting
        let _ = out.write_all(text.as_bytes());
    }
    ExitCode::from(code)
}

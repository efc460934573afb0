//! `intcat`: validate, construct and audit internal categories stored as structured-text files.
//!
//! Exit codes: 0 success, 1 refuted or counterexample, 2 input error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use intcat::audit::{run_audit, AuditConfig, Axiom};
use intcat::classify::{classify_full_mono, section_of_ff_epi};
use intcat::factorisation::{factor_internal, BaseOfs, EpiMono, IsoAll};
use intcat::internal::{functors, nat_trans, Cat, WorkBudget};
use intcat::io::{
    category_doc, functor_doc, nat_trans_doc, oracle_from_internal, oracle_functors, oracle_nat_trans, parse_cat,
    parse_functor, parse_nat_trans, to_structured,
};
use intcat::limits2d::{copower_by_two, internal_hom_bounded, power_by_two};
use intcat::Error;

#[derive(Parser)]
#[command(name = "intcat", version, about = "Internal categories over finite sets")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for corpus and functor sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest object count of a corpus category.
    #[arg(long, global = true, default_value_t = 4)]
    max_objects: usize,
    /// Largest arrow count of a corpus category.
    #[arg(long, global = true, default_value_t = 10)]
    max_arrows: usize,
    /// Search-node limit for enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    size_bound: u64,
    /// Restrict the audit to these axioms (repeatable), e.g. `nno`, `twoValued`.
    #[arg(long, global = true, value_parser = parse_axiom)]
    suite: Vec<Axiom>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// A human-readable summary followed by the structured document.
    Text,
    /// The structured document only.
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ofs {
    EpiMono,
    IsoAll,
}

#[derive(Subcommand)]
enum Command {
    /// Check a category, functor or 2-cell file against its axioms.
    Validate { file: PathBuf },
    /// Factor a functor through a lifted factorisation system.
    Factor {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Ofs::EpiMono)]
        ofs: Ofs,
    },
    /// The internal hom `[X, Y]` with its evaluation functor.
    Hom { x: PathBuf, y: PathBuf },
    /// The power `A^2`.
    Power { file: PathBuf },
    /// The copower `2 ⊗ A`.
    Copower { file: PathBuf },
    /// The classifying functor of a full mono.
    Classify { file: PathBuf },
    /// A section of a fully faithful functor that is surjective on objects.
    Section { file: PathBuf },
    /// Check every axiom over a seeded corpus.
    Audit,
    /// Compare a construction against the naive oracle.
    OracleCompare {
        /// Compare `[X, Y]` with the enumerated functors and natural transformations.
        #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with = "power", required_unless_present = "power")]
        hom: Option<Vec<PathBuf>>,
        /// Compare `A^2` with the enumerated functor category `[2, A]`.
        #[arg(long, value_name = "A")]
        power: Option<PathBuf>,
    },
}

fn parse_axiom(s: &str) -> Result<Axiom, String> {
    serde_json::from_value(Value::String(s.to_string())).map_err(|_| {
        let names: Vec<String> = Axiom::ALL.iter().map(|a| serde_json::to_value(a).unwrap().to_string()).collect();
        format!("unknown suite `{s}`; expected one of {}", names.join(", "))
    })
}

/// A finished command: its exit code, summary and document.
struct Outcome {
    code: u8,
    summary: String,
    document: String,
}

impl Outcome {
    fn ok(summary: String, document: Value) -> Self {
        Outcome { code: 0, summary, document: to_structured(&document) }
    }
}

/// Errors are input errors unless a command says otherwise.
enum Failure {
    Refuted(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_cat(path: &Path) -> Result<Cat, Failure> {
    parse_cat(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_functor(path: &Path) -> Result<intcat::internal::InternalFunctor, Failure> {
    parse_functor(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn size(c: &Cat) -> String {
    format!("{} objects, {} arrows", c.objects(), c.arrows())
}

fn validate(path: &Path) -> Result<Outcome, Failure> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: parse error at line {}: {e}", path.display(), e.line())))?;
    let parsed = if value.get("C0").is_some() {
        parse_cat(&text).map(|c| (format!("valid category: {}", size(&c)), json!(category_doc(&c))))
    } else if value.get("f0").is_some() {
        parse_functor(&text).map(|f| (format!("valid functor: {} to {}", size(f.dom()), size(f.cod())), json!(functor_doc(&f))))
    } else if value.get("alpha").is_some() {
        parse_nat_trans(&text).map(|a| (format!("valid 2-cell with {} components", a.alpha().dom().size()), json!(nat_trans_doc(&a))))
    } else {
        return Err(Failure::Input(format!("{}: not a category, functor or 2-cell document", path.display())));
    };
    match parsed {
        Ok((summary, doc)) => Ok(Outcome::ok(summary, doc)),
        Err(Error::Validation(report)) => Ok(Outcome {
            code: 1,
            summary: format!("invalid: {report}"),
            document: to_structured(&report),
        }),
        Err(e) => Err(Failure::Input(format!("{}: {e}", path.display()))),
    }
}

fn factor(path: &Path, ofs: Ofs) -> Result<Outcome, Failure> {
    let f = load_functor(path)?;
    let system: &dyn BaseOfs = match ofs {
        Ofs::EpiMono => &EpiMono,
        Ofs::IsoAll => &IsoAll,
    };
    let fact = factor_internal(&f, system)?;
    let summary = format!("{} factorisation through a middle category with {}", system.name(), size(&fact.middle));
    let doc = json!({
        "middle": category_doc(&fact.middle),
        "left": functor_doc(&fact.left),
        "right": functor_doc(&fact.right),
    });
    Ok(Outcome::ok(summary, doc))
}

fn hom(x: &Path, y: &Path, bound: u64) -> Result<Outcome, Failure> {
    let (x, y) = (load_cat(x)?, load_cat(y)?);
    let h = internal_hom_bounded(&x, &y, bound as u128)?;
    let summary = format!("internal hom: {} ({} search nodes)", size(&h.carrier), h.work());
    let doc = json!({ "carrier": category_doc(&h.carrier), "evaluation": functor_doc(&h.evaluation) });
    Ok(Outcome::ok(summary, doc))
}

fn power(path: &Path) -> Result<Outcome, Failure> {
    let p = power_by_two(&load_cat(path)?)?;
    let doc = json!({
        "carrier": category_doc(&p.carrier),
        "sourceProjection": functor_doc(&p.source_proj),
        "targetProjection": functor_doc(&p.target_proj),
        "universalCell": nat_trans_doc(&p.universal_cell),
    });
    Ok(Outcome::ok(format!("power by 2: {}", size(&p.carrier)), doc))
}

fn copower(path: &Path) -> Result<Outcome, Failure> {
    let p = copower_by_two(&load_cat(path)?)?;
    let doc = json!({
        "carrier": category_doc(&p.carrier),
        "coprojection0": functor_doc(&p.coproj0),
        "coprojection1": functor_doc(&p.coproj1),
        "universalCell": nat_trans_doc(&p.universal_cell),
    });
    Ok(Outcome::ok(format!("copower by 2: {}", size(&p.carrier)), doc))
}

fn classify(path: &Path) -> Result<Outcome, Failure> {
    let f = load_functor(path)?;
    match classify_full_mono(&f) {
        Ok(chi) => Ok(Outcome::ok("classified full mono".into(), json!({ "chi": functor_doc(&chi) }))),
        Err(e @ Error::NotFullMono) => Err(Failure::Refuted(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn section(path: &Path) -> Result<Outcome, Failure> {
    let e = load_functor(path)?;
    match section_of_ff_epi(&e) {
        Ok(cert) => {
            cert.verify(&e)?;
            let doc = json!({ "section": functor_doc(&cert.section), "unit": nat_trans_doc(&cert.unit) });
            Ok(Outcome::ok("section with invertible unit".into(), doc))
        }
        Err(err @ Error::NotFfEpi(_)) => Err(Failure::Refuted(err.to_string())),
        Err(err) => Err(err.into()),
    }
}

fn audit(g: &Global) -> Outcome {
    let config = AuditConfig {
        seed: g.seed,
        max_objects: g.max_objects,
        max_arrows: g.max_arrows,
        size_bound: g.size_bound,
        suites: if g.suite.is_empty() { Axiom::ALL.to_vec() } else { g.suite.clone() },
        ..AuditConfig::default()
    };
    let report = run_audit(&config);
    let code = if report.matches_expectations() { 0 } else { 1 };
    Outcome { code, summary: report.to_text().trim_end().to_string(), document: report.to_structured() }
}

fn oracle_compare_hom(x: &Path, y: &Path, bound: u64) -> Result<Outcome, Failure> {
    let (x, y) = (load_cat(x)?, load_cat(y)?);
    let limit = bound as u128;
    let h = internal_hom_bounded(&x, &y, limit)?;
    let (nx, ny) = (oracle_from_internal(&x), oracle_from_internal(&y));
    let fs = oracle_functors(&nx, &ny, limit)?;
    let mut cells = 0;
    for f in &fs {
        for g in &fs {
            cells += oracle_nat_trans(&nx, &ny, f, g, limit)?.len();
        }
    }
    let agrees = h.carrier.objects() == fs.len() && h.carrier.arrows() == cells;
    let doc = json!({
        "match": agrees,
        "internal": { "objects": h.carrier.objects(), "arrows": h.carrier.arrows() },
        "oracle": { "functors": fs.len(), "naturalTransformations": cells },
    });
    let verdict = if agrees { "match" } else { "mismatch" };
    let summary = format!(
        "{verdict}: internal hom has {} objects and {} arrows; oracle found {} functors and {} natural transformations",
        h.carrier.objects(),
        h.carrier.arrows(),
        fs.len(),
        cells
    );
    Ok(Outcome { code: if agrees { 0 } else { 1 }, summary, document: to_structured(&doc) })
}

fn oracle_compare_power(a: &Path, bound: u64) -> Result<Outcome, Failure> {
    let a = load_cat(a)?;
    let p = power_by_two(&a)?;
    let two = intcat::limits2d::free_arrow().into_cat();
    let mut budget = WorkBudget::new(bound as u128);
    let fs = functors(&two, &a, &mut budget)?;
    let mut cells = 0;
    for f in &fs {
        for g in &fs {
            cells += nat_trans(f, g, &mut budget)?.len();
        }
    }
    let (na, nt) = (oracle_from_internal(&a), oracle_from_internal(&two));
    let oracle_fs = oracle_functors(&nt, &na, bound as u128)?;
    let agrees = p.carrier.objects() == fs.len()
        && p.carrier.arrows() == cells
        && oracle_fs.len() == fs.len()
        && p.carrier.objects() == a.arrows();
    let doc = json!({
        "match": agrees,
        "power": { "objects": p.carrier.objects(), "arrows": p.carrier.arrows() },
        "functorCategory": { "functors": fs.len(), "naturalTransformations": cells },
        "oracleFunctors": oracle_fs.len(),
    });
    let verdict = if agrees { "match" } else { "mismatch" };
    let summary = format!(
        "{verdict}: power by 2 has {} objects and {} arrows; [2, A] has {} functors and {} natural transformations",
        p.carrier.objects(),
        p.carrier.arrows(),
        fs.len(),
        cells
    );
    Ok(Outcome { code: if agrees { 0 } else { 1 }, summary, document: to_structured(&doc) })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let bound = cli.global.size_bound;
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Factor { file, ofs } => factor(file, *ofs),
        Command::Hom { x, y } => hom(x, y, bound),
        Command::Power { file } => power(file),
        Command::Copower { file } => copower(file),
        Command::Classify { file } => classify(file),
        Command::Section { file } => section(file),
        Command::Audit => Ok(audit(&cli.global)),
        Command::OracleCompare { hom: Some(pair), .. } => oracle_compare_hom(&pair[0], &pair[1], bound),
        Command::OracleCompare { power: Some(a), .. } => oracle_compare_power(a, bound),
        Command::OracleCompare { .. } => Err(Failure::Input("oracle-compare needs --hom X Y or --power A".into())),
    }
}

/// Writes to stdout, ignoring a closed pipe so `| head` does not abort.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.global.format == Format::Text {
                emit(&format!("{}\n", out.summary));
            }
            emit(&out.document);
            ExitCode::from(out.code)
        }
        Err(Failure::Refuted(message)) => {
            emit(&format!("refuted: {message}\n"));
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

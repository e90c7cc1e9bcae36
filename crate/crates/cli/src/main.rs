use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gorlab::catalog::{self, CaseId, Certificate, Params};
use gorlab::text::{parse_ideal_file, parse_scalar};
use gorlab::{annihilator, parse_dual, parse_poly, DualGenerator, FieldDescriptor, Ideal};

#[derive(Parser)]
#[command(name = "gorlab", version, about = "Gorenstein ideals with Hilbert function 1,4,4,1: annihilators, resolutions, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Annihilator of a dual form: minimal generators, μ and Hilbert function.
    Ann {
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
        #[arg(long)]
        dual: String,
    },
    /// Run the pipeline for one catalog case.
    Case {
        #[arg(long)]
        id: CaseId,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Defaults to the case's own field.
        #[arg(long)]
        field: Option<FieldDescriptor>,
        /// Write the certificate JSON here, whether or not the checks pass.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every case at its default parameters, plus the characteristic-two example.
    VerifyAll {
        /// Directory receiving one certificate per case.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the Betti tables stored in a certificate.
    Betti {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Colon ideal `I : (f)` for an ideal file.
    Colon {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        by: String,
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
    },
    /// Hilbert series of `Q/I` for an ideal file.
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
    },
    /// Re-run the randomized search for a quadratic case.
    SearchQ6 {
        #[arg(long, default_value_t = catalog::Q6_FROZEN_SEED)]
        seed: u64,
    },
}

/// Failure kinds, mapped to exit codes 1 and 2.
enum Failure {
    Check(String),
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Ann { field, dual } => ann(field, &dual),
        Command::Case { id, a, b, field, out } => case(id, a, b, field, out.as_deref()),
        Command::VerifyAll { out_dir } => verify_all(out_dir.as_deref()),
        Command::Betti { cert } => betti(&cert),
        Command::Colon { ideal, by, field } => {
            let i = read_ideal(&ideal, field)?;
            let f = parse_poly(&by, field)?;
            let c = i.colon(&f)?;
            let mut out = String::new();
            for g in c.minimal_generators().generators {
                writeln!(out, "{g}").expect("string write");
            }
            Ok(out)
        }
        Command::Hilbert { ideal, field } => {
            let i = read_ideal(&ideal, field)?;
            let mut out = format!("HS(Q/I) = {}\n", i.hilbert_series());
            match i.artinian_hilbert_function(catalog::degree_cap()) {
                Some(hf) => writeln!(out, "HF = {}", join(&hf)),
                None => writeln!(out, "dimension {}", i.hilbert_series().dimension()),
            }
            .expect("string write");
            Ok(out)
        }
        Command::SearchQ6 { seed } => {
            let inst = catalog::search_q6(seed)?;
            let frozen = catalog::frozen_q6(FieldDescriptor::Rationals)?;
            let mut out = String::new();
            writeln!(out, "seed {seed}: accepted after {} draws", inst.attempts).expect("string write");
            for r in 0..5 {
                let row: Vec<String> = inst.t.row(r).iter().map(|p| p.to_string()).collect();
                writeln!(out, "T[{}] = [{}]", r + 1, row.join(", ")).expect("string write");
            }
            writeln!(out, "f = {}", inst.f).expect("string write");
            let same = inst.t == frozen.t && inst.f == frozen.f;
            writeln!(out, "matches frozen instance: {}", if same { "yes" } else { "no" }).expect("string write");
            Ok(out)
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" ")
}

fn read_ideal(path: &Path, field: FieldDescriptor) -> Result<Ideal, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let gens = parse_ideal_file(&text, field)?;
    Ok(Ideal::new(field, gens)?)
}

fn ann(field: FieldDescriptor, dual: &str) -> Outcome {
    let f = DualGenerator::new(parse_dual(dual, field)?)?;
    let i = annihilator(&f);
    let mg = i.minimal_generators();
    let mut out = String::new();
    for g in &mg.generators {
        writeln!(out, "{g}").expect("string write");
    }
    let hist: Vec<String> = mg.histogram.iter().map(|(d, n)| format!("{n} in degree {d}")).collect();
    writeln!(out, "mu = {} ({})", mg.count(), hist.join(", ")).expect("string write");
    match i.artinian_hilbert_function(catalog::degree_cap()) {
        Some(hf) => writeln!(out, "HF = {}", join(&hf)),
        None => writeln!(out, "HF: not Artinian below degree {}", catalog::degree_cap()),
    }
    .expect("string write");
    Ok(out)
}

fn render(cert: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "case {} over {}{}", cert.case, cert.field, if cert.params.is_empty() { String::new() } else { format!(" with {}", cert.params) })
        .expect("string write");
    for c in &cert.checks {
        writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name).expect("string write");
        if !c.pass {
            for line in c.detail.lines() {
                writeln!(out, "    {line}").expect("string write");
            }
        }
    }
    for n in &cert.notes {
        writeln!(out, "note: {n}").expect("string write");
    }
    if let Some(b) = &cert.betti_cone {
        writeln!(out, "Betti table of Q/I:\n{b}").expect("string write");
    }
    writeln!(out, "{}", if cert.pass() { "all checks passed" } else { "some checks FAILED" }).expect("string write");
    out
}

fn write_cert(cert: &Certificate, path: &Path) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(&cert.to_json())?;
    std::fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn case(id: CaseId, a: Option<String>, b: Option<String>, field: Option<FieldDescriptor>, out: Option<&Path>) -> Outcome {
    let field = field.unwrap_or(id.default_field());
    let mut params = Params::new();
    for (name, v) in [('a', a), ('b', b)] {
        if let Some(v) = v {
            params.set(name, parse_scalar(&v, field)?);
        }
    }
    if params.is_empty() && !id.parameter_names().is_empty() {
        params = id.default_params();
    }
    let cert = catalog::run_case(id, &params, field)?;
    if let Some(path) = out {
        write_cert(&cert, path)?;
    }
    let text = render(&cert);
    if cert.pass() {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn verify_all(out_dir: Option<&Path>) -> Outcome {
    let mut out = String::new();
    let mut ok = true;
    for (id, res) in catalog::verify_all() {
        match res {
            Ok(cert) => {
                if let Some(dir) = out_dir {
                    write_cert(&cert, &dir.join(format!("{id}.json")))?;
                }
                let totals = cert.betti_cone.as_ref().map(|b| b.totals()).unwrap_or_default();
                let totals: Vec<i64> = totals.into_iter().map(|n| n as i64).collect();
                writeln!(out, "{} {id} ({} checks, Betti {})", if cert.pass() { "PASS" } else { "FAIL" }, cert.checks.len(), join(&totals))
                    .expect("string write");
                for c in cert.failed() {
                    writeln!(out, "    failed: {}", c.name).expect("string write");
                }
                ok &= cert.pass();
            }
            Err(e) => {
                writeln!(out, "FAIL {id}: {e}").expect("string write");
                ok = false;
            }
        }
    }
    let r = catalog::example_char_two()?;
    writeln!(
        out,
        "{} char_two (GF(2): {} generators, x^3 + y*z*w {}; Q: {} quadrics)",
        if r.pass() { "PASS" } else { "FAIL" },
        r.gf2_generators.len(),
        if r.gf2_has_cubic { "minimal" } else { "missing" },
        r.q_generators.len()
    )
    .expect("string write");
    ok &= r.pass();
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn betti(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    let cert = Certificate::from_json(&v).map_err(Failure::Input)?;
    let mut out = format!("case {}\n", cert.case);
    if let Some(b) = &cert.betti_g {
        writeln!(out, "G (resolution of Q/J):\n{b}").expect("string write");
    }
    match &cert.betti_cone {
        Some(b) => writeln!(out, "cone (resolution of Q/I):\n{b}").expect("string write"),
        None => writeln!(out, "no cone recorded").expect("string write"),
    }
    Ok(out)
}

//! Batch front end: every subcommand reads JSON arguments and prints one JSON
//! document with sorted keys and rationals rendered as strings.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 malformed input.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde::Serialize;
use serde_json::{json, Map, Value};

use schubert_core::admissible::{
    admissible_set, chain_coefficients, double_cosets, AdmissiblePoset, CosetPolicy,
};
use schubert_core::affine_weyl::AffineWeylGroup;
use schubert_core::coherence::{verify_coherence, CoherenceOptions, Verdict};
use schubert_core::demazure::{demazure_char, AffineWeight};
use schubert_core::picard::{
    anticanonical_degrees, boundary_matrix, fano_perturbation, is_ample, is_semiample,
    line_bundle_degrees,
};
use schubert_core::affine_weyl::Word;
use schubert_core::root_data::{Coweight, RootDatum};

pub mod args;
pub mod input;
pub mod selftest;

use args::{
    AdmCmd, Cli, CoherenceCmd, Command, DemazureCmd, PicardCmd, Policy, RootDatumCmd, WeylCmd,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub enum Failure {
    /// Malformed or out-of-domain input.
    Input(String),
    /// A verification ran and did not pass; the report is still printed.
    Verification(Value),
}

impl From<schubert_core::Error> for Failure {
    fn from(e: schubert_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Rebuilds every object with keys in sorted order.
pub fn canonical(value: Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

pub fn render(value: Value) -> String {
    let mut text = serde_json::to_string_pretty(&canonical(value)).expect("JSON values always render");
    text.push('\n');
    text
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("documents serialise to JSON")
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = with_pool(cli.jobs, || dispatch(&cli));
    match result {
        Ok(value) => {
            let _ = out.write_all(render(value).as_bytes());
            EXIT_OK
        }
        Err(Failure::Verification(value)) => {
            let _ = out.write_all(render(value).as_bytes());
            let _ = writeln!(err, "verification failed");
            EXIT_FAILED
        }
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

#[cfg(feature = "parallel")]
fn with_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_pool<R>(_jobs: usize, f: impl FnOnce() -> R) -> R {
    f()
}

fn dispatch(cli: &Cli) -> Result<Value, Failure> {
    let datum = input::datum(cli.datum.as_deref())?;
    let group = AffineWeylGroup::new(datum.clone()).with_bound(cli.bound);
    match &cli.command {
        Command::RootDatum(RootDatumCmd::Show) => Ok(show_datum(&group)),
        Command::Weyl(cmd) => weyl(&group, cmd),
        Command::Adm(AdmCmd::List(a)) => {
            let mu: Coweight = input::parse("mu", &a.mu)?;
            let facet = facet(a.facet.as_deref())?;
            let poset = poset(&group, &mu, &facet, a.policy)?;
            Ok(poset_document(&group, &poset, a.policy))
        }
        Command::Demazure(DemazureCmd::Char(a)) => {
            let letters = input::word(group.nodes(), &a.word)?;
            let nu: AffineWeight = input::parse("weight", &a.weight)?;
            let omega = match &a.omega {
                Some(text) => {
                    let tau = input::element(&group, text)?;
                    if group.length(&tau) != 0 {
                        return Err(schubert_core::Error::NotLengthZero.into());
                    }
                    tau
                }
                None => group.identity(),
            };
            let word = Word { letters, omega };
            let chi = demazure_char(&group, &word, &nu)?;
            let mut doc = to_value(&chi);
            doc["dim"] = json!(chi.dim());
            Ok(doc)
        }
        Command::Picard(cmd) => picard(&datum, cli.p, group.nodes(), cmd),
        Command::Coherence(CoherenceCmd::Verify(a)) => {
            let mu: Coweight = input::parse("mu", &a.mu)?;
            let multiples = input::charges(&a.charges)?;
            let options = CoherenceOptions {
                facet: facet(a.facet.as_deref())?,
                policy: policy(a.policy),
                base: a
                    .weight
                    .as_deref()
                    .map(|w| input::parse::<AffineWeight>("weight", w))
                    .transpose()?,
                perturb: a.perturb,
            };
            let reports = verify_coherence(&group, &mu, &multiples, &options)?;
            let all_equal = reports.iter().all(|r| r.verdict == Verdict::Equal);
            let doc = json!({ "reports": reports, "all_equal": all_equal });
            if all_equal {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
        Command::Selftest(a) => {
            let doc = selftest::run(a.seed, a.cases);
            if doc["passed"] == json!(true) {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
    }
}

fn policy(p: Policy) -> CosetPolicy {
    match p {
        Policy::Lift => CosetPolicy::LiftInAdm,
        Policy::MaxRep => CosetPolicy::MaxRepInAdm,
    }
}

fn facet(text: Option<&str>) -> Result<Vec<usize>, Failure> {
    match text {
        Some(t) => input::parse("facet", t),
        None => Ok(Vec::new()),
    }
}

fn poset(
    group: &AffineWeylGroup,
    mu: &Coweight,
    facet: &[usize],
    p: Policy,
) -> Result<AdmissiblePoset, Failure> {
    let adm = admissible_set(group, mu)?;
    if facet.is_empty() {
        Ok(adm)
    } else {
        Ok(double_cosets(group, &adm, facet, policy(p))?)
    }
}

fn show_datum(group: &AffineWeylGroup) -> Value {
    let d = group.datum();
    json!({
        "datum": d.config(),
        "cartan": d.cartan(),
        "affine_cartan": d.affine_cartan(),
        "positive_roots": d.positive_roots(),
        "positive_coroots": d.positive_coroots(),
        "highest_root": d.highest_root(),
        "highest_coroot": d.highest_root_coroot(),
        "marks": d.marks(),
        "comarks": d.comarks(),
        "coxeter_number": d.coxeter_number(),
        "dual_coxeter_number": d.dual_coxeter_number(),
        "rho": d.rho(),
        "fundamental_group_order": d.fundamental_group_order(),
        "finite_weyl_order": group.finite_weyl_order(),
    })
}

fn weyl(group: &AffineWeylGroup, cmd: &WeylCmd) -> Result<Value, Failure> {
    match cmd {
        WeylCmd::Length(a) => {
            let w = input::element(group, &a.element)?;
            Ok(json!({ "length": group.length(&w) }))
        }
        WeylCmd::ReducedWord(a) => {
            let w = input::element(group, &a.element)?;
            let word = group.reduced_word(&w);
            Ok(json!({
                "length": word.len(),
                "word": word.letters,
                "omega": group.to_doc(&word.omega),
            }))
        }
        WeylCmd::Leq(a) => {
            let v = input::element(group, &a.left)?;
            let w = input::element(group, &a.right)?;
            Ok(json!({ "leq": group.bruhat_leq(&v, &w) }))
        }
        WeylCmd::Interval(a) => {
            let w = input::element(group, &a.element)?;
            let elements: Vec<Value> = group
                .bruhat_interval(&w)?
                .iter()
                .map(|v| json!({ "element": group.to_doc(v), "length": group.length(v) }))
                .collect();
            Ok(json!({ "size": elements.len(), "elements": elements }))
        }
    }
}

fn poset_document(group: &AffineWeylGroup, poset: &AdmissiblePoset, p: Policy) -> Value {
    let coefficients = chain_coefficients(poset);
    let elements: Vec<Value> = poset
        .elements()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let word = group.reduced_word(w);
            json!({
                "index": i,
                "element": group.to_doc(w),
                "length": poset.lengths()[i],
                "reduced_word": word.letters,
                "omega": group.to_doc(&word.omega),
                "coefficient": coefficients[i],
            })
        })
        .collect();
    let mut doc = json!({
        "mu": poset.mu(),
        "facet": poset.facet(),
        "size": poset.len(),
        "elements": elements,
        "covers": poset.covers(),
        "maximal": poset.maximal(),
        "experimental": !poset.facet().is_empty(),
    });
    if !poset.facet().is_empty() {
        doc["policy"] = json!(match p {
            Policy::Lift => "lift",
            Policy::MaxRep => "max-rep",
        });
    }
    doc
}

fn picard(datum: &RootDatum, p: i64, nodes: usize, cmd: &PicardCmd) -> Result<Value, Failure> {
    match cmd {
        PicardCmd::Degrees(a) => {
            let word = input::word(nodes, &a.word)?;
            let nu: AffineWeight = input::parse("weight", &a.weight)?;
            let d = line_bundle_degrees(datum, &word, &nu)?;
            let mut doc = to_value(&d);
            doc["ample"] = json!(is_ample(&d));
            doc["semiample"] = json!(is_semiample(&d));
            Ok(doc)
        }
        PicardCmd::Matrix(a) => {
            let word = input::word(nodes, &a.word)?;
            Ok(json!({ "word": word, "matrix": boundary_matrix(datum, &word)? }))
        }
        PicardCmd::Anticanonical(a) => {
            let word = input::word(nodes, &a.word)?;
            let q = input::q_sequence(p, word.len(), a.q.as_deref())?;
            let k = anticanonical_degrees(datum, &word, &q)?;
            let mut doc = to_value(&k);
            doc["p"] = json!(p);
            doc["ample"] = json!(is_ample(&k.total));
            Ok(doc)
        }
        PicardCmd::CertifyFano(a) => {
            let word = input::word(nodes, &a.word)?;
            let q = input::q_sequence(p, word.len(), a.q.as_deref())?;
            match fano_perturbation(datum, &word, &q)? {
                Some(cert) => {
                    let passes = cert.passes();
                    let mut doc = to_value(&cert);
                    doc["certified"] = json!(passes);
                    doc["q"] = to_value(&q);
                    if passes {
                        Ok(doc)
                    } else {
                        Err(Failure::Verification(doc))
                    }
                }
                None => Err(Failure::Verification(json!({
                    "certified": false,
                    "epsilon": null,
                    "word": word,
                    "q": q,
                    "reason": "q increases along a repeated letter",
                }))),
            }
        }
    }
}

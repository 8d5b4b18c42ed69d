//! The `knotgeo` command line.
//!
//! Exit codes: 0 success, 1 a verifier found violations, 2 usage error,
//! 3 malformed or unsuitable input.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braid::{closure_stats, parse_braid, BraidWord, ParseError};
use crate::garside3::{conjugate_to_positive, left_canonical_form, murasugi_class};
use crate::seifert::signature_nullity_of_closure;
use crate::theorems::{
    check_main_omissions, geography_csv, geography_table, link_report, link_report_two_bridge, smooth,
    verify_inequality, verify_main_theorem, verify_smoothing_lemma, verify_t2c_theorem, GeographyTable, LinkReport,
    Report, Sharding, TheoremError, DEFAULT_SAMPLES,
};
use crate::twobridge::{
    alternating_crossing_number, family_invariants, fraction, gl_signature, parse_conway, Family, TwoBridgeError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "knotgeo", version, about = "Signature, nullity and crossing numbers of braid closures and 2-bridge links")]
struct Cli {
    /// Emit JSON (one object per input line in batch mode).
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV; tables only.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left-canonical Garside form of a 3-braid.
    Nf(WordArgs),
    /// Murasugi class and whether the braid is conjugate to a positive one.
    Classify(WordArgs),
    /// Signature, nullity, components and first Betti number of the closure.
    Sig(WordArgs),
    /// Full report: name, signature, crossing number, braid index.
    /// Accepts a braid word or a Conway notation `C(...)`.
    Invariants(WordArgs),
    /// Fraction, crossing number and signature of a Conway diagram.
    TwoBridge {
        #[arg(allow_hyphen_values = true)]
        conway: String,
    },
    /// Smooth the crossing at a 0-based position.
    Smooth {
        #[arg(allow_hyphen_values = true)]
        word: String,
        position: usize,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Run a finite verifier.
    Verify(VerifyArgs),
    /// Which (crossing number, signature) pairs are realized.
    Geography {
        #[arg(long, default_value_t = 12)]
        max_crossings: i64,
    },
}

#[derive(Debug, clap::Args)]
struct WordArgs {
    /// Braid word such as `1 -2 1` or `B4: 1 2 3`; `-` reads one per line from stdin.
    #[arg(allow_hyphen_values = true)]
    input: String,
    /// Strand count for words without a `B<n>:` prefix.
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Claim {
    /// Positive 3-braids with σ = 2 − cr.
    Main,
    /// Homogeneous 3-braids with |σ| = cr − 1.
    T2c,
    /// |σ| + n + s ≤ cr + 1.
    Inequality,
    /// |Δσ| ≤ c after c smoothings.
    Smoothing,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    claim: Claim,
    /// Word length bound (default 12 for main and t2c, 10 for inequality, 8 for smoothing).
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Strand count for the inequality check.
    #[arg(long, default_value_t = 3)]
    strands: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Run only this shard and print its partial report.
    #[arg(long)]
    shard_index: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        Failure::Input(format!("error: {e}"))
    }
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn new(text: String, json: Value) -> Output {
        Output { text, json, code: EXIT_OK }
    }
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure::Input(format!("error: {e}"))
}

fn annotate(text: &str, e: &ParseError) -> Failure {
    let at = e.position.min(text.len());
    let column = text.char_indices().take_while(|&(i, _)| i < at).count();
    Failure::Input(format!("error: {e}\n  {text}\n  {}^", " ".repeat(column)))
}

fn read_word(text: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    let w = parse_braid(text).map_err(|e| annotate(text, &e))?;
    match strands {
        Some(n) if !text.trim_start().starts_with('B') => w.with_strands(n).map_err(input_error),
        _ => Ok(w),
    }
}

/// Adds `σᵢσᵢ⁻¹` for each missing generator so split closures get a connected Seifert surface.
fn connected(w: &BraidWord) -> BraidWord {
    if closure_stats(w).connected_surface {
        return w.clone();
    }
    let mut letters = w.letters().to_vec();
    for i in 1..w.strands() as i32 {
        if !letters.iter().any(|l| l.abs() == i) {
            letters.extend([i, -i]);
        }
    }
    BraidWord::new(w.strands(), letters).expect("same generators")
}

fn sigma_nullity(w: &BraidWord) -> Result<(i64, i64), Failure> {
    if w.strands() == 1 {
        return Ok((0, 0));
    }
    signature_nullity_of_closure(&connected(w)).map_err(input_error)
}

fn nf(w: &BraidWord) -> Result<Output, Failure> {
    let form = left_canonical_form(w).map_err(input_error)?;
    let text = form.to_string();
    let json = json!({
        "word": w,
        "normal_form": text,
        "inf": form.inf(),
        "sup": form.sup(),
        "canonical_length": form.canonical_length(),
    });
    Ok(Output::new(text, json))
}

fn classify(w: &BraidWord) -> Result<Output, Failure> {
    let class = murasugi_class(w).map_err(input_error)?;
    let (positive, witness) = conjugate_to_positive(w).map_err(input_error)?;
    let mut text = format!("class: {class}\nconjugate to positive: {positive}");
    if let Some(p) = &witness {
        text.push_str(&format!("\npositive word: {p}"));
    }
    let json = json!({
        "word": w,
        "class": class,
        "class_name": class.to_string(),
        "conjugate_to_positive": positive,
        "positive_word": witness,
    });
    Ok(Output::new(text, json))
}

fn sig(w: &BraidWord) -> Result<Output, Failure> {
    let (sigma, nullity) = sigma_nullity(w)?;
    let stats = closure_stats(w);
    let text = format!("sigma: {sigma}\nnullity: {nullity}\ncomponents: {}\nb1: {}", stats.components, stats.betti);
    let json = json!({
        "word": w,
        "sigma": sigma,
        "nullity": nullity,
        "components": stats.components,
        "b1": stats.betti,
    });
    Ok(Output::new(text, json))
}

fn link_text(r: &LinkReport) -> String {
    let mut text = format!("name: {}\nsigma: {}\nnullity: {}\ncomponents: {}", r.label(), r.sigma, r.nullity, r.components);
    if let Some(cr) = r.crossing_number {
        let bound = match cr.status {
            crate::theorems::CrossingStatus::Exact => "",
            crate::theorems::CrossingStatus::UpperBound => " (upper bound)",
        };
        text.push_str(&format!("\ncrossing number: {}{bound}", cr.value));
    }
    if let Some(b) = r.braid_index {
        text.push_str(&format!("\nbraid index: {b}"));
    }
    text
}

fn invariants(input: &str, strands: Option<usize>) -> Result<Output, Failure> {
    let report = if input.trim_start().starts_with('C') {
        let d = parse_conway(input).map_err(|e| annotate(input, &e))?;
        link_report_two_bridge(&d)?
    } else {
        link_report(&read_word(input, strands)?)?
    };
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["label"] = json!(report.label());
    Ok(Output::new(link_text(&report), json))
}

fn two_bridge(input: &str) -> Result<Output, Failure> {
    let d = parse_conway(input).map_err(|e| annotate(input, &e))?;
    let (numerator, denominator) = fraction(&d).map_err(input_error)?;
    let components = d.components().map_err(input_error)?;
    let cr = alternating_crossing_number(&d).map_err(input_error)?;
    let signature = match gl_signature(&d) {
        Ok(s) => Some(s),
        Err(TwoBridgeError::LinkNeedsOrientation(_)) => None,
        Err(e) => return Err(input_error(e)),
    };
    let formula = match d.family() {
        Family::Generic => None,
        _ => Some(family_invariants(&d).map_err(input_error)?),
    };
    let mut text = format!("diagram: {d}\nfraction: {numerator}/{denominator}\ncomponents: {components}\ncrossing number: {cr}");
    match signature {
        Some((s, n)) => text.push_str(&format!("\nsigma: {s}\nnullity: {n}")),
        None => text.push_str("\nsigma: needs an orientation family (@pqr, @pq2r, @5p)"),
    }
    let json = json!({
        "diagram": d.to_string(),
        "numerator": numerator.to_string(),
        "denominator": denominator.to_string(),
        "components": components,
        "crossing_number": cr,
        "sigma": signature.map(|s| s.0),
        "nullity": signature.map(|s| s.1),
        "family_formula": formula.map(|(cr, sigma)| json!({"crossing_number": cr, "sigma": sigma})),
    });
    Ok(Output::new(text, json))
}

fn smooth_cmd(w: &BraidWord, position: usize) -> Result<Output, Failure> {
    let smoothed = smooth(w, position)?;
    let (before, _) = sigma_nullity(w)?;
    let (after, _) = sigma_nullity(&smoothed)?;
    let text = format!("smoothed: {smoothed}\nsigma: {before} -> {after}\ndelta sigma: {}", after - before);
    let json = json!({
        "word": w,
        "position": position,
        "smoothed": smoothed,
        "sigma_before": before,
        "sigma_after": after,
        "delta_sigma": after - before,
    });
    Ok(Output::new(text, json))
}

fn run_claim(args: &VerifyArgs, sharding: Sharding) -> Result<Report, TheoremError> {
    match args.claim {
        Claim::Main => verify_main_theorem(args.max_crossings.unwrap_or(12), sharding),
        Claim::T2c => verify_t2c_theorem(args.max_crossings.unwrap_or(12), sharding),
        Claim::Inequality => {
            verify_inequality(args.max_crossings.unwrap_or(10), args.strands, args.samples, args.seed, sharding)
        }
        Claim::Smoothing => verify_smoothing_lemma(args.max_crossings.unwrap_or(8), args.samples, args.seed, sharding),
    }
}

fn report_text(r: &Report) -> String {
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut text = format!(
        "claim: {} ({})\nchecked: {}\nviolations: {}",
        r.claim,
        params.join(", "),
        r.checked,
        r.violations.len()
    );
    for v in &r.violations {
        text.push_str(&format!("\n  {}: {}", v.word, v.detail));
    }
    if !r.findings.is_empty() {
        text.push_str("\nfindings:");
        for f in &r.findings {
            text.push_str(&format!(
                "\n  {}: {} words, cr {}, sigma {}, least {}",
                f.label, f.count, f.crossing_number, f.sigma, f.word
            ));
        }
    }
    text.push_str(if r.ok() { "\nresult: verified" } else { "\nresult: VIOLATIONS" });
    text
}

fn verify(args: &VerifyArgs) -> Result<Output, Failure> {
    let usage = |e: TheoremError| Failure::Usage(format!("error: {e}"));
    let report = match args.shard_index {
        Some(i) => run_claim(args, Sharding::new(args.shards, i).map_err(usage)?).map_err(usage)?,
        None if args.shards <= 1 => run_claim(args, Sharding::default()).map_err(usage)?,
        None => {
            let parts: Vec<Sharding> =
                (0..args.shards).map(|i| Sharding::new(args.shards, i)).collect::<Result<_, _>>().map_err(usage)?;
            let results: Vec<Result<Report, TheoremError>> = std::thread::scope(|s| {
                let handles: Vec<_> = parts.iter().map(|&p| s.spawn(move || run_claim(args, p))).collect();
                handles.into_iter().map(|h| h.join().expect("verifier thread panicked")).collect()
            });
            let reports = results.into_iter().collect::<Result<Vec<_>, _>>().map_err(usage)?;
            let mut merged = Report::merge(reports).expect("at least one shard");
            if let Claim::Main = args.claim {
                check_main_omissions(&mut merged, args.max_crossings.unwrap_or(12));
            }
            merged
        }
    };
    let code = if report.ok() { EXIT_OK } else { EXIT_VIOLATIONS };
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(Output { text: report_text(&report), json, code })
}

fn geography_text(t: &GeographyTable) -> String {
    let mut lines = vec![format!("rows d = {}..{}, columns c = 1..{}; o realized, x not realized", t.max_c - 1, 1 - t.max_c, t.max_c)];
    for d in (1 - t.max_c..t.max_c).rev() {
        let cells: String = (1..=t.max_c)
            .map(|c| match t.row(c, d) {
                Some(r) if r.realizable => 'o',
                Some(_) => 'x',
                None => ' ',
            })
            .flat_map(|ch| [ch, ' '])
            .collect();
        lines.push(format!("{d:>4} | {}", cells.trim_end()));
    }
    lines.join("\n")
}

fn geography(max_c: i64, format: Format) -> Result<Output, Failure> {
    let table = geography_table(max_c).map_err(|e| Failure::Usage(format!("error: {e}")))?;
    let text = if format == Format::Csv { geography_csv(&table) } else { geography_text(&table) };
    let json = serde_json::to_value(&table).expect("serializable");
    Ok(Output::new(text, json))
}

fn emit(out: &mut dyn Write, output: &Output, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", output.json),
        Format::Csv => write!(out, "{}", output.text),
        Format::Text => writeln!(out, "{}", output.text),
    }
}

/// Runs `handle` on `input`, or on each nonempty stdin line when `input` is `-`.
fn batch(
    input: &str,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    format: Format,
    handle: &dyn Fn(&str) -> Result<Output, Failure>,
) -> std::io::Result<i32> {
    let lines: Vec<String> = if input == "-" {
        stdin.lines().collect::<Result<Vec<_>, _>>()?
    } else {
        vec![input.to_string()]
    };
    let mut code = EXIT_OK;
    let numbered = input == "-";
    for (k, line) in lines.iter().enumerate() {
        if numbered && line.trim().is_empty() {
            continue;
        }
        match handle(line) {
            Ok(o) => {
                emit(out, &o, format)?;
                code = code.max(o.code);
            }
            Err(Failure::Input(msg)) | Err(Failure::Usage(msg)) => {
                if numbered {
                    writeln!(err, "line {}: {msg}", k + 1)?;
                } else {
                    writeln!(err, "{msg}")?;
                }
                code = EXIT_INPUT;
            }
        }
    }
    Ok(code)
}

fn dispatch(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    if format == Format::Csv && !matches!(cli.command, Command::Geography { .. }) {
        writeln!(err, "error: --csv applies to tables only (geography)")?;
        return Ok(EXIT_USAGE);
    }
    let single = |r: Result<Output, Failure>, out: &mut dyn Write, err: &mut dyn Write| -> std::io::Result<i32> {
        match r {
            Ok(o) => {
                emit(out, &o, format)?;
                Ok(o.code)
            }
            Err(Failure::Usage(msg)) => {
                writeln!(err, "{msg}")?;
                Ok(EXIT_USAGE)
            }
            Err(Failure::Input(msg)) => {
                writeln!(err, "{msg}")?;
                Ok(EXIT_INPUT)
            }
        }
    };
    match &cli.command {
        Command::Nf(a) => batch(&a.input, stdin, out, err, format, &|t| nf(&read_word(t, a.strands)?)),
        Command::Classify(a) => batch(&a.input, stdin, out, err, format, &|t| classify(&read_word(t, a.strands)?)),
        Command::Sig(a) => batch(&a.input, stdin, out, err, format, &|t| sig(&read_word(t, a.strands)?)),
        Command::Invariants(a) => batch(&a.input, stdin, out, err, format, &|t| invariants(t, a.strands)),
        Command::TwoBridge { conway } => batch(conway, stdin, out, err, format, &two_bridge),
        Command::Smooth { word, position, strands } => {
            batch(word, stdin, out, err, format, &|t| smooth_cmd(&read_word(t, *strands)?, *position))
        }
        Command::Verify(args) => single(verify(args), out, err),
        Command::Geography { max_crossings } => single(geography(*max_crossings, format), out, err),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

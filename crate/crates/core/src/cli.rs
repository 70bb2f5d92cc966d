//! Command-line front end. [`run`] parses arguments, dispatches, and writes a
//! report; the binary only forwards its exit code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{build_commutative_uninorm, build_nary_direct, build_table};
use crate::domain::{fold_slice, BinTable, Word};
use crate::error::{Error, Result};
use crate::evaluate::{check_word_law, Evaluator};
use crate::explore::{
    alternating_report, build_alternating, build_poset_fixture, compare_enumerations,
    enumerate_class_brute, enumerate_class_gspec, find_mmt_gap, poset_fixture_report, BruteSpace,
    LeadingSign,
};
use crate::extract::{check_derived, derive_nary, extract_binary, reconstruct_gspec};
use crate::gspec::{critical_pairs, mmt_condition, sym_check};
use crate::io;
use crate::verify::{
    check_monotone, check_n_associative, class_check_with_order, find_neutral_elements,
    idempotency_witness, quasitrivial_witness, AssocWitness, Derived, MonotoneReport, Operation,
    Order,
};

/// Environment variable holding the worker-thread count for enumeration.
pub const WORKERS_ENV: &str = "NSEMIGROUP_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "nsemigroup", version, about = "Idempotent monotone n-ary semigroups on finite chains")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the binary table of a generator.
    Build {
        #[arg(long)]
        gspec: PathBuf,
        /// Output file; `.csv` selects CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a tuple with the single-pass evaluator.
    Eval {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        neutral: usize,
        #[arg(long)]
        tuple: String,
        /// Also fold the table and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate a tuple directly from a generator.
    NaryEval {
        #[arg(long)]
        gspec: PathBuf,
        #[arg(long)]
        tuple: String,
        #[arg(long, value_enum, default_value_t = NaryMode::Direct)]
        mode: NaryMode,
    },
    /// Check class membership of a table or of its derived n-ary operation.
    Check(CheckArgs),
    /// Recover the binary table of an n-ary table through a neutral element.
    Extract {
        #[arg(long)]
        nary: PathBuf,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        neutral: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a generator that rebuilds a class table.
    Reconstruct {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive the n-ary operation and extract it back.
    Roundtrip {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        arity: usize,
    },
    /// Enumerate the class on a k-chain.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Source::Both)]
        source: Source,
        /// Brute-force space; defaults to full for k <= 3, quasitrivial above.
        #[arg(long, value_enum)]
        space: Option<Space>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List generators meeting the level-set condition but not symmetry.
    MmtGap {
        #[arg(long)]
        kmax: usize,
    },
    /// Build a counterexample fixture.
    Fixture(FixtureArgs),
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long)]
    table: PathBuf,
    /// Check the derived operation of this arity instead.
    #[arg(long)]
    nary: Option<usize>,
    /// Partial order for the monotonicity check.
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Same as the global --json.
    #[arg(long)]
    json_report: bool,
    /// Also check the word law up to this total length.
    #[arg(long)]
    word_law: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("fixture_kind").required(true).args(["poset_q", "alternating"])))]
struct FixtureArgs {
    /// Poset fixture on `{m, M} ∪ Z_q`.
    #[arg(long)]
    poset_q: Option<usize>,
    /// Alternating operation `m,n` on `Z_m`.
    #[arg(long)]
    alternating: Option<String>,
    #[arg(long, value_enum, default_value_t = Sign::Plus)]
    sign: Sign,
    /// Radius of the integer window for the monotonicity check.
    #[arg(long, default_value_t = 5)]
    window: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NaryMode {
    Direct,
    Uninorm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Gspec,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Space {
    Full,
    Quasitrivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

/// Machine-readable outcome of one command. A failing report carries at
/// least one witness.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: Verdict,
    pub result: Value,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    lines: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            verdict: Verdict::Pass,
            result: Value::Null,
            witnesses: Vec::new(),
            error: None,
            timing_ms: None,
            lines: Vec::new(),
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn witness(&mut self, w: Value) {
        self.verdict = Verdict::Fail;
        self.witnesses.push(w);
    }

    fn render_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        for w in &self.witnesses {
            s.push_str(&format!("witness: {w}\n"));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!("error: {e}\n"));
        }
        if let Some(ms) = self.timing_ms {
            s.push_str(&format!("time: {ms} ms\n"));
        }
        s.push_str(&format!(
            "{}: {}\n",
            self.command,
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Error => "error",
            }
        ));
        s
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return e.exit_code();
        }
    };
    let json_out = cli.json || matches!(&cli.command, Command::Check(c) if c.json_report);
    let start = Instant::now();
    let name = command_name(&cli.command);
    let mut report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            let mut r = Report::new(name);
            r.verdict = Verdict::Error;
            r.error = Some(e.to_string());
            r
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = if json_out { io::to_json(&report) } else { report.render_text() };
    if out.write_all(text.as_bytes()).is_err() {
        return Verdict::Error.exit_code();
    }
    report.verdict.exit_code()
}

/// Sizes the global thread pool from [`WORKERS_ENV`] when set.
pub fn configure_workers() {
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Build { .. } => "build",
        Command::Eval { .. } => "eval",
        Command::NaryEval { .. } => "nary-eval",
        Command::Check(_) => "check",
        Command::Extract { .. } => "extract",
        Command::Reconstruct { .. } => "reconstruct",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Enumerate { .. } => "enumerate",
        Command::MmtGap { .. } => "mmt-gap",
        Command::Fixture(_) => "fixture",
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let mut r = Report::new(command_name(&cli.command));
    match &cli.command {
        Command::Build { gspec, out } => build(&mut r, gspec, out.as_deref())?,
        Command::Eval { table, neutral, tuple, oracle } => {
            eval(&mut r, table, *neutral, tuple, *oracle)?
        }
        Command::NaryEval { gspec, tuple, mode } => nary_eval(&mut r, gspec, tuple, *mode)?,
        Command::Check(args) => check(&mut r, args, cli.seed)?,
        Command::Extract { nary, arity, neutral, out } => {
            extract(&mut r, nary, *arity, *neutral, out.as_deref())?
        }
        Command::Reconstruct { table, out } => reconstruct(&mut r, table, out.as_deref())?,
        Command::Roundtrip { table, arity } => roundtrip(&mut r, table, *arity)?,
        Command::Enumerate { k, source, space, out } => {
            enumerate(&mut r, *k, *source, *space, out.as_deref())?
        }
        Command::MmtGap { kmax } => mmt_gap(&mut r, *kmax)?,
        Command::Fixture(args) => fixture(&mut r, args)?,
    }
    Ok(r)
}

fn rows_text(t: &BinTable) -> Vec<String> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect()
}

fn build(r: &mut Report, gspec: &Path, out: Option<&Path>) -> Result<()> {
    let s = io::read_gspec(gspec)?;
    let t = build_table(&s);
    if let Some(p) = out {
        io::write_table(p, &t)?;
    }
    r.lines.extend(rows_text(&t));
    r.result = json!({ "table": io::TableFile::from_table(&t), "sym": sym_check(&s) });
    Ok(())
}

fn eval(r: &mut Report, table: &Path, neutral: usize, tuple: &str, oracle: bool) -> Result<()> {
    let t = io::read_table(table)?;
    let word = Word::parse(tuple)?;
    let ev = Evaluator::new(t, neutral)?;
    let value = ev.eval_word(&word)?;
    r.line(value.to_string());
    let mut result = json!({ "tuple": word.items(), "value": value });
    if oracle {
        let fold = fold_slice(ev.table(), word.items())?;
        let agree = fold == value;
        r.line(format!("oracle agreement: {agree}"));
        result["oracle"] = json!({ "fold": fold, "agree": agree });
        if !agree {
            r.witness(json!({ "law": "oracle", "inputs": word.items(), "left": value, "right": fold }));
        }
    }
    r.result = result;
    Ok(())
}

fn nary_eval(r: &mut Report, gspec: &Path, tuple: &str, mode: NaryMode) -> Result<()> {
    let s = io::read_gspec(gspec)?;
    let word = Word::parse(tuple)?;
    let value = match mode {
        NaryMode::Direct => build_nary_direct(&s, word.items())?,
        NaryMode::Uninorm => build_commutative_uninorm(&s, word.items())?,
    };
    r.line(value.to_string());
    r.result = json!({ "tuple": word.items(), "value": value });
    Ok(())
}

fn assoc_witness(w: &AssocWitness) -> Value {
    json!({
        "law": "associativity",
        "inputs": w.tuple,
        "position": w.position,
        "left": w.left,
        "right": w.right,
    })
}

fn monotone_witness(m: &MonotoneReport) -> Option<Value> {
    m.witness.as_ref().map(|w| {
        json!({
            "law": "monotone",
            "coordinate": w.coordinate,
            "inputs": w.context,
            "breaks_preserving": w.breaks_preserving,
            "breaks_reversing": w.breaks_reversing,
        })
    })
}

/// One witness per candidate `e`: an input it fails to fix.
fn neutral_witnesses(f: &impl Operation) -> Vec<Value> {
    let (k, n) = (f.size(), f.arity());
    let mut out = Vec::new();
    'candidates: for e in 0..k {
        for i in 0..n {
            for x in 0..k {
                let mut args = vec![e; n];
                args[i] = x;
                let v = f.eval(&args);
                if v != x {
                    out.push(json!({ "law": "neutral", "candidate": e, "inputs": args, "left": v, "right": x }));
                    continue 'candidates;
                }
            }
        }
    }
    out
}

fn check(r: &mut Report, args: &CheckArgs, seed: u64) -> Result<()> {
    let t = io::read_table(&args.table)?;
    let order = match &args.poset {
        Some(p) => {
            let poset = io::read_poset(p)?;
            if poset.size() != t.size() {
                return Err(Error::ChainMismatch { expected: t.size(), found: poset.size() });
            }
            Order::Poset(poset)
        }
        None => Order::Chain,
    };
    match args.nary {
        None | Some(2) => {
            let c = class_check_with_order(&t, &order)?;
            if let Some(w) = &c.associative {
                r.witness(assoc_witness(w));
            }
            if let Some((a, v)) = c.idempotent {
                r.witness(json!({ "law": "idempotent", "inputs": [a, a], "left": v, "right": a }));
            }
            if let Some(w) = monotone_witness(&c.monotone) {
                r.witness(w);
            }
            if c.neutral_elements.is_empty() {
                for w in neutral_witnesses(&t) {
                    r.witness(w);
                }
            }
            r.line(format!("associative: {}", c.is_associative()));
            r.line(format!("idempotent: {}", c.is_idempotent()));
            r.line(format!("monotone: {} (increasing: {})", c.monotone.monotone, c.monotone.increasing));
            r.line(format!("neutral elements: {:?}", c.neutral_elements));
            r.line(format!("quasitrivial: {}", c.is_quasitrivial()));
            r.line(format!("in class: {}", c.in_class));
            r.result = serde_json::to_value(&c)?;
        }
        Some(n) => {
            let d = Derived::new(&t, n)?;
            let assoc = check_n_associative(&d)?;
            let idem = idempotency_witness(&d);
            let mono = check_monotone(&d, &order)?;
            let neutral = find_neutral_elements(&d);
            let qt = quasitrivial_witness(&d)?;
            if let Some(w) = &assoc.witness {
                r.witness(assoc_witness(w));
            }
            if let Some((a, v)) = idem {
                r.witness(json!({ "law": "idempotent", "inputs": vec![a; n], "left": v, "right": a }));
            }
            if let Some(w) = monotone_witness(&mono) {
                r.witness(w);
            }
            if neutral.is_empty() {
                for w in neutral_witnesses(&d) {
                    r.witness(w);
                }
            }
            let in_class = assoc.holds && idem.is_none() && mono.monotone && !neutral.is_empty();
            r.line(format!("arity: {n}"));
            r.line(format!("{n}-associative: {}", assoc.holds));
            r.line(format!("idempotent: {}", idem.is_none()));
            r.line(format!("monotone: {} (increasing: {})", mono.monotone, mono.increasing));
            r.line(format!("neutral elements: {neutral:?}"));
            r.line(format!("quasitrivial: {}", qt.is_none()));
            r.line(format!("in class: {in_class}"));
            r.result = json!({
                "arity": n,
                "associative": assoc,
                "idempotent": idem,
                "monotone": mono,
                "neutral_elements": neutral,
                "quasitrivial": qt,
                "in_class": in_class,
            });
        }
    }
    if let Some(max_len) = args.word_law {
        let w = check_word_law(&t, max_len, seed);
        for v in &w.violations {
            r.witness(json!({
                "law": "word",
                "inputs": [v.left, v.right],
                "left": v.whole,
                "right": v.combined,
            }));
        }
        r.line(format!("word law up to length {max_len}: {}", w.holds()));
        r.result["word_law"] = serde_json::to_value(&w)?;
    }
    Ok(())
}

fn extract(r: &mut Report, nary: &Path, arity: usize, neutral: usize, out: Option<&Path>) -> Result<()> {
    let f = io::read_nary(nary)?;
    if f.arity() != arity {
        return Err(Error::Parse(format!("file holds a {}-ary table, expected {arity}", f.arity())));
    }
    let t = extract_binary(&f, neutral)?;
    let derived = check_derived(&f, &t)?;
    if let Some((tuple, lhs, rhs)) = &derived.witness {
        r.witness(json!({ "law": "derived", "inputs": tuple, "left": lhs, "right": rhs }));
    }
    if let Some(p) = out {
        io::write_table(p, &t)?;
    }
    r.lines.extend(rows_text(&t));
    r.line(format!("derived from extracted table: {}", derived.holds));
    r.result = json!({ "table": io::TableFile::from_table(&t), "derived": derived.holds });
    Ok(())
}

fn reconstruct(r: &mut Report, table: &Path, out: Option<&Path>) -> Result<()> {
    let t = io::read_table(table)?;
    let s = reconstruct_gspec(&t)?;
    if let Some(p) = out {
        io::write_gspec(p, &s)?;
    }
    let draft = s.to_draft();
    r.line(format!("e = {}", draft.e));
    r.line(format!("g = {:?}", draft.g));
    for tie in &draft.ties {
        r.line(format!("tie ({}, {}) = {:?}", tie.a, tie.b, tie.choice));
    }
    r.result = json!({
        "gspec": draft,
        "sym": sym_check(&s),
        "mmt": mmt_condition(&s),
        "critical_pairs": critical_pairs(&s),
    });
    Ok(())
}

fn roundtrip(r: &mut Report, table: &Path, arity: usize) -> Result<()> {
    let t = io::read_table(table)?;
    let e = *find_neutral_elements(&t).first().ok_or(Error::NoNeutral)?;
    let back = extract_binary(&derive_nary(&t, arity)?, e)?;
    for x in 0..t.size() {
        for y in 0..t.size() {
            if back.get(x, y) != t.get(x, y) {
                r.witness(json!({ "law": "roundtrip", "inputs": [x, y], "left": back.get(x, y), "right": t.get(x, y) }));
            }
        }
    }
    r.line(format!("roundtrip at arity {arity} through e = {e}: {}", back == t));
    r.result = json!({ "arity": arity, "neutral": e, "identity": back == t });
    Ok(())
}

fn enumerate(
    r: &mut Report,
    k: usize,
    source: Source,
    space: Option<Space>,
    out: Option<&Path>,
) -> Result<()> {
    let space = match space {
        Some(Space::Full) => BruteSpace::Full,
        Some(Space::Quasitrivial) => BruteSpace::Quasitrivial,
        None => BruteSpace::default_for(k),
    };
    let tables: Vec<BinTable> = match source {
        Source::Gspec => {
            let audited = enumerate_class_gspec(k)?;
            r.result = json!({
                "k": k,
                "source": "gspec",
                "count": audited.len(),
                "tables": audited
                    .iter()
                    .map(|(t, a)| json!({ "table": t.rows(), "audit": a }))
                    .collect::<Vec<_>>(),
            });
            audited.into_keys().collect()
        }
        Source::Brute => {
            let set = enumerate_class_brute(k, space)?;
            r.result = json!({
                "k": k,
                "source": "brute",
                "space": space,
                "count": set.len(),
                "tables": set.iter().map(BinTable::rows).collect::<Vec<_>>(),
            });
            set.into_iter().collect()
        }
        Source::Both => {
            if space != BruteSpace::default_for(k) {
                return Err(Error::Parse("--space only applies to --source brute".into()));
            }
            let rep = compare_enumerations(k)?;
            for t in &rep.only_from_gspecs {
                r.witness(json!({ "law": "enumeration", "only_in": "gspec", "table": t }));
            }
            for t in &rep.only_brute {
                r.witness(json!({ "law": "enumeration", "only_in": "brute", "table": t }));
            }
            r.line(format!("from generators: {}", rep.from_gspecs));
            r.line(format!("brute force ({:?}): {}", rep.brute_space, rep.brute));
            r.line(format!("noncommutative: {}", rep.extra_critical_count));
            r.result = serde_json::to_value(&rep)?;
            r.result["tables"] = json!(rep.tables.iter().map(BinTable::rows).collect::<Vec<_>>());
            rep.tables
        }
    };
    r.line(format!("k = {k}: {} class tables", tables.len()));
    if let Some(dir) = out {
        let width = tables.len().to_string().len();
        for (i, t) in tables.iter().enumerate() {
            io::write_table(dir.join(format!("table_{i:0width$}.json")), t)?;
        }
        io::write_json(dir.join("report.json"), &r.result)?;
    }
    Ok(())
}

fn mmt_gap(r: &mut Report, kmax: usize) -> Result<()> {
    let gaps = find_mmt_gap(kmax)?;
    for k in 1..=kmax {
        let at_k: Vec<_> = gaps.iter().filter(|w| w.k == k).collect();
        let in_class = at_k.iter().filter(|w| w.in_class_some_ties).count();
        r.line(format!("k = {k}: {} generators (in class for some ties: {in_class})", at_k.len()));
    }
    r.result = json!({ "kmax": kmax, "count": gaps.len(), "witnesses": gaps });
    Ok(())
}

fn parse_pair(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((
            a.parse().map_err(|_| Error::Parse(format!("bad modulus {a:?}")))?,
            b.parse().map_err(|_| Error::Parse(format!("bad arity {b:?}")))?,
        )),
        _ => Err(Error::Parse(format!("expected m,n, got {text:?}"))),
    }
}

fn fixture(r: &mut Report, args: &FixtureArgs) -> Result<()> {
    if let Some(q) = args.poset_q {
        let f = build_poset_fixture(q)?;
        let rep = poset_fixture_report(&f)?;
        if let Some(dir) = &args.out {
            io::write_table(dir.join("table.json"), &f.table)?;
            io::write_poset(dir.join("poset.json"), &f.poset)?;
        }
        r.line(format!("elements: {}", (0..q + 2).map(|i| f.label(i)).collect::<Vec<_>>().join(" ")));
        r.lines.extend(rows_text(&f.table));
        r.line(format!("associative: {}", rep.associative));
        r.line(format!("poset monotone: {}", rep.monotone.monotone));
        r.line(format!("neutral elements: {:?}", rep.neutral_elements));
        for (j, w) in &rep.idempotency {
            r.line(format!("F_{j} idempotent: {}", w.is_none()));
        }
        r.result = json!({
            "labels": (0..q + 2).map(|i| f.label(i)).collect::<Vec<_>>(),
            "table": io::TableFile::from_table(&f.table),
            "poset": f.poset.to_file(),
            "report": rep,
        });
    } else if let Some(spec) = &args.alternating {
        let (m, n) = parse_pair(spec)?;
        let sign = match args.sign {
            Sign::Plus => LeadingSign::Plus,
            Sign::Minus => LeadingSign::Minus,
        };
        let g = build_alternating(m, n, sign)?;
        let rep = alternating_report(&g, args.window)?;
        r.line(format!("{n}-associative: {}", rep.associativity.holds));
        r.line(format!("{n}-ary group: {}", rep.group_witness.is_none()));
        r.line(format!("neutral elements: {:?}", rep.neutral_elements));
        r.line(format!("idempotent: {}", rep.idempotent));
        r.line(format!("window monotone: {} {:?}", rep.window_monotone.monotone, rep.window_monotone.directions));
        r.result = serde_json::to_value(&rep)?;
        if let Some(dir) = &args.out {
            io::write_nary(dir.join("nary.json"), &crate::verify::NaryTable::tabulate(&g)?)?;
            io::write_json(dir.join("report.json"), &rep)?;
        }
    }
    Ok(())
}

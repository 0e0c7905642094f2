use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use realflag::bockstein::torsion_verdict;
use realflag::incidence::{incidence_coefficient, kocherlakota_m, tangent_count};
use realflag::poincare::{mod2_poincare, rational_poincare, torsion_poincare, IntPolynomial};
use realflag::schubert_ring::{intersection_number, lr_product, GrassBox, RealGrassmannian, RingElement};
use realflag::tables::{validate_named, TableReport, TABLE_NAMES};
use realflag::{cohomology, Coefficients, DimVector, GradedComplex, OrderedSetPartition, YoungDiagram};

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "REALFLAG_THREADS";
const DEFAULT_MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "realflag", version, about = "Integral cohomology of real flag manifolds")]
struct Cli {
    /// Output format (each command has its own default)
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,
    /// Largest N accepted before enumerating cells
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Write the output to a file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology groups of Fl_D(R^N) in every degree
    Cohomology {
        /// Dimension vector, e.g. 1,1,1,1
        dims: String,
        /// Coefficients: Z, Q or GF2
        #[arg(long, short, default_value = "Z")]
        coeffs: String,
        /// Also print generators
        #[arg(long)]
        generators: bool,
    },
    /// Validate the golden generator tables (or `all`)
    Tables { name: String },
    /// Signed incidence graph
    Graph { dims: String },
    /// Incidence coefficient of adjacent cells I > J
    Incidence { upper: String, lower: String },
    /// Check that all torsion has order 2, by Smith form and by Sq^1
    TorsionCheck { dims: String },
    /// Product of two Schubert classes in a Grassmannian
    SchubertMult {
        lambda: String,
        mu: String,
        /// Complex Grassmannian Gr_K(C^N), given as K,N
        #[arg(long, conflicts_with = "real")]
        grassmannian: Option<String>,
        /// Real Grassmannian Gr_K(R^N), given as K,N; labels are full-size diagrams
        #[arg(long)]
        real: Option<String>,
    },
    /// Lower bound for a doubled real Schubert problem in Gr_K(R^N)
    LowerBound {
        k: usize,
        n: usize,
        /// Conditions as full-size diagrams, `2,2^9` for nine copies
        #[arg(required = true)]
        diagrams: Vec<String>,
    },
    /// Poincaré polynomials from closed formulas
    Poincare { dims: String },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn input<T>(what: &str, text: &str, r: realflag::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| usage(format!("argument {} = {:?}: {}", what, text, e)))
}

fn internal(e: realflag::Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

/// Result of a command: text to print and whether validation succeeded.
struct Output {
    text: String,
    ok: bool,
}

fn done(text: String) -> Result<Output, Failure> {
    Ok(Output { text, ok: true })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn multinomial(dims: &DimVector) -> u128 {
    let mut total: u128 = 1;
    let mut seen = 0u128;
    for &d in dims.parts() {
        for i in 1..=d as u128 {
            seen += 1;
            total = total * seen / i;
        }
    }
    total
}

/// Column (1-based) of the first entry of `text` that is not a positive integer.
fn bad_entry(text: &str) -> Option<(usize, &str)> {
    let mut pos = 0;
    for tok in text.split(',') {
        let t = tok.trim();
        if !t.is_empty() && t.parse::<usize>().map_or(true, |v| v == 0) {
            return Some((pos + tok.find(t).unwrap() + 1, t));
        }
        pos += tok.len() + 1;
    }
    None
}

fn parse_dv(text: &str) -> Result<DimVector, Failure> {
    if let Some((col, tok)) = bad_entry(text) {
        return Err(usage(format!(
            "argument D = {:?}: entry {:?} at column {} is not a positive integer",
            text, tok, col
        )));
    }
    input("D", text, text.parse())
}

/// Parses `D` and applies the size guard before any enumeration.
fn parse_dims(text: &str, max_n: usize) -> Result<DimVector, Failure> {
    let d = parse_dv(text)?;
    if d.n() > max_n {
        return Err(usage(format!(
            "N = {} exceeds the size limit {} ({} cells); pass --max-n {} to proceed",
            d.n(),
            max_n,
            multinomial(&d),
            d.n()
        )));
    }
    if d.n() > DEFAULT_MAX_N {
        eprintln!(
            "warning: N = {} is above the default limit {}; enumerating {} cells",
            d.n(),
            DEFAULT_MAX_N,
            multinomial(&d)
        );
    }
    Ok(d)
}

fn parse_pair(what: &str, text: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    match parts[..] {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(k), Ok(n)) if k > 0 && k < n => Ok((k, n)),
            _ => Err(usage(format!("argument {} = {:?}: expected K,N with 0 < K < N", what, text))),
        },
        _ => Err(usage(format!("argument {} = {:?}: expected K,N", what, text))),
    }
}

fn parse_diagram(what: &str, text: &str) -> Result<YoungDiagram, Failure> {
    input(what, text, text.parse())
}

/// `λ` or `λ^e`.
fn parse_power(text: &str) -> Result<Vec<YoungDiagram>, Failure> {
    let (body, exp) = match text.split_once('^') {
        Some((b, e)) => {
            let e: usize = e
                .trim()
                .parse()
                .map_err(|_| usage(format!("argument {:?}: bad exponent {:?}", text, e)))?;
            (b, e)
        }
        None => (text, 1),
    };
    let d = parse_diagram("diagram", body)?;
    Ok(vec![d; exp])
}

fn reject_format(cmd: &str, f: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(usage(format!("{} does not support --format {:?}", cmd, f).to_lowercase()))
    }
}

fn poly_json(p: &IntPolynomial) -> Value {
    json!(p.coeffs())
}

fn cmd_cohomology(dims: &str, coeffs: &str, generators: bool, f: Format, max_n: usize) -> Result<Output, Failure> {
    reject_format("cohomology", f, &[Format::Table, Format::Json])?;
    let d = parse_dims(dims, max_n)?;
    let coeffs: Coefficients = input("--coeffs", coeffs, coeffs.parse())?;
    let c = GradedComplex::build(&d).map_err(internal)?;
    let h = cohomology(&c, coeffs, generators).map_err(internal)?;
    match f {
        Format::Json => done(pretty(&serde_json::to_value(&h).unwrap())),
        _ => done(h.render_table()),
    }
}

fn render_tables(reports: &[TableReport], f: Format) -> String {
    match f {
        Format::Json => pretty(&serde_json::to_value(reports).unwrap()),
        _ => reports.iter().map(|r| r.render()).collect::<Vec<_>>().join("\n"),
    }
}

fn cmd_tables(name: &str, f: Format) -> Result<Output, Failure> {
    reject_format("tables", f, &[Format::Table, Format::Json])?;
    let names: Vec<&str> = if name == "all" {
        TABLE_NAMES.to_vec()
    } else if TABLE_NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(usage(format!(
            "unknown table {:?}; expected one of {} or all",
            name,
            TABLE_NAMES.join(", ")
        )));
    };
    let reports = names
        .iter()
        .map(|n| validate_named(n))
        .collect::<realflag::Result<Vec<_>>>()
        .map_err(internal)?;
    let ok = reports.iter().all(|r| r.passed());
    Ok(Output {
        text: render_tables(&reports, f),
        ok,
    })
}

fn cmd_graph(dims: &str, f: Format, max_n: usize) -> Result<Output, Failure> {
    let d = parse_dims(dims, max_n)?;
    let c = GradedComplex::build(&d).map_err(internal)?;
    match f {
        Format::Dot => done(c.to_dot()),
        Format::Json => done(pretty(&c.to_json())),
        Format::Table => {
            let mut s = String::new();
            for (i, j, v) in c.edges() {
                writeln!(s, "{} -> {} {:+}", i, j, v).unwrap();
            }
            done(s)
        }
    }
}

fn cell_text(p: &OrderedSetPartition) -> String {
    if p.dims().is_complete() && p.n() <= 9 {
        p.compact()
    } else {
        p.to_string()
    }
}

fn cmd_incidence(upper: &str, lower: &str, f: Format) -> Result<Output, Failure> {
    reject_format("incidence", f, &[Format::Table, Format::Json])?;
    let i: OrderedSetPartition = input("I", upper, upper.parse())?;
    let j = input("J", lower, OrderedSetPartition::parse_with(lower, &i.dims()))?;
    let pair = i
        .adjacency_with(&j)
        .ok_or_else(|| usage(format!("{} and {} are not adjacent (J < I)", i, j)))?;
    let rec = incidence_coefficient(&i, pair.a, pair.b);
    let t = tangent_count(&j, pair.b, pair.a);
    let m = kocherlakota_m(&i, &j).map_err(internal)?;
    let s = rec.sign_terms;
    match f {
        Format::Json => done(pretty(&json!({
            "I": cell_text(&i),
            "J": cell_text(&j),
            "a": pair.a,
            "b": pair.b,
            "value": rec.value,
            "c": [s.c1, s.c2, s.c3, s.c4],
            "s": s.total(),
            "N": rec.parity_witness,
            "T": t,
            "m": m,
            "signed_value": rec.signed_value(),
        }))),
        _ => {
            let mut out = String::new();
            writeln!(out, "[{}, {}] = {}", cell_text(&i), cell_text(&j), rec.value).unwrap();
            writeln!(out, "exchange a = {}, b = {}", pair.a, pair.b).unwrap();
            writeln!(out, "c1..c4 = {} {} {} {}, s = {}", s.c1, s.c2, s.c3, s.c4, s.total()).unwrap();
            writeln!(out, "N = {}, T = {}, m = {}", rec.parity_witness, t, m).unwrap();
            writeln!(out, "signed value = {:+}", rec.signed_value()).unwrap();
            done(out)
        }
    }
}

fn cmd_torsion_check(dims: &str, f: Format, max_n: usize) -> Result<Output, Failure> {
    reject_format("torsion-check", f, &[Format::Table, Format::Json])?;
    let d = parse_dims(dims, max_n)?;
    let c = GradedComplex::build(&d).map_err(internal)?;
    let v = torsion_verdict(&c).map_err(internal)?;
    let p2 = mod2_poincare(&d);
    let text = match f {
        Format::Json => {
            let mut j = serde_json::to_value(&v).unwrap();
            j["verdict"] = json!(v.holds());
            j["mod2"] = poly_json(&p2);
            pretty(&j)
        }
        _ => {
            let mut s = String::new();
            writeln!(s, "D = {}", d).unwrap();
            writeln!(s, "verdict: {}", v.holds()).unwrap();
            writeln!(s, "P_0     = {}", v.rational).unwrap();
            writeln!(s, "P_2     = {}", p2).unwrap();
            writeln!(s, "P_beta  = {}", v.bockstein).unwrap();
            writeln!(s, "P_Tor   = {}", v.predicted_torsion).unwrap();
            writeln!(s, "SNF torsion summands = {}", v.snf_torsion).unwrap();
            s
        }
    };
    Ok(Output { text, ok: v.holds() })
}

fn render_element(e: &RingElement, f: Format) -> String {
    match f {
        Format::Json => pretty(&serde_json::to_value(e).unwrap()),
        _ => format!("{}\n", e),
    }
}

fn cmd_schubert_mult(
    lambda: &str,
    mu: &str,
    grassmannian: Option<&str>,
    real: Option<&str>,
    f: Format,
) -> Result<Output, Failure> {
    reject_format("schubert-mult", f, &[Format::Table, Format::Json])?;
    let l = parse_diagram("lambda", lambda)?;
    let m = parse_diagram("mu", mu)?;
    if let Some(r) = real {
        let (k, n) = parse_pair("--real", r)?;
        let gr = input("--real", r, RealGrassmannian::new(k, n))?;
        let prod = input("lambda/mu", &format!("{} {}", l, m), gr.product_classes(&l, &m))?;
        return done(render_element(&prod, f));
    }
    let g = grassmannian.ok_or_else(|| usage("schubert-mult needs --grassmannian K,N or --real K,N"))?;
    let (k, n) = parse_pair("--grassmannian", g)?;
    let prod = input("lambda/mu", &format!("{} {}", l, m), lr_product(&l, &m, GrassBox::new(k, n - k)))?;
    done(render_element(&prod, f))
}

fn cmd_lower_bound(k: usize, n: usize, diagrams: &[String], f: Format) -> Result<Output, Failure> {
    reject_format("lower-bound", f, &[Format::Table, Format::Json])?;
    let mut conds = Vec::new();
    for d in diagrams {
        conds.extend(parse_power(d)?);
    }
    let gr = input("K,N", &format!("{},{}", k, n), RealGrassmannian::new(k, n))?;
    let what = format!("{} in Gr_{}(R^{})", diagrams.join(" "), k, n);
    let bound = input("diagrams", &what, gr.lower_bound(&conds))?;
    let halves: Vec<YoungDiagram> = conds.iter().map(|d| d.halve().unwrap()).collect();
    let hb = gr.half_box();
    // the half-size complex problem lives in Gr_h(C^{h+w})
    let half_problem = format!("Gr_{}(C^{})", hb.height, hb.height + hb.width);
    debug_assert_eq!(intersection_number(&halves, hb).ok(), Some(bound));
    match f {
        Format::Json => done(pretty(&json!({
            "K": k,
            "N": n,
            "conditions": conds.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "half_conditions": halves.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "half_problem": half_problem,
            "lower_bound": bound,
        }))),
        _ => done(format!(
            "{}\nat least {} real solutions ({} conditions; half-size problem in {})\n",
            bound,
            bound,
            conds.len(),
            half_problem
        )),
    }
}

fn cmd_poincare(dims: &str, f: Format) -> Result<Output, Failure> {
    reject_format("poincare", f, &[Format::Table, Format::Json])?;
    let d = parse_dv(dims)?;
    let p0 = rational_poincare(&d);
    let p2 = mod2_poincare(&d);
    let pt = torsion_poincare(&d).map_err(internal)?;
    let degrees: Vec<usize> = p0
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat(k).take(c.max(0) as usize))
        .collect();
    match f {
        Format::Json => done(pretty(&json!({
            "D": d.to_string(),
            "rational": poly_json(&p0),
            "mod2": poly_json(&p2),
            "torsion": poly_json(&pt),
            "rational_degrees": degrees,
        }))),
        _ => {
            let mut s = String::new();
            writeln!(s, "D = {}", d).unwrap();
            writeln!(s, "P_0   = {}", p0).unwrap();
            writeln!(s, "P_2   = {}", p2).unwrap();
            writeln!(s, "P_Tor = {}", pt).unwrap();
            let list: Vec<String> = degrees.iter().map(|k| k.to_string()).collect();
            writeln!(s, "rational generators in degrees {}", list.join(" ")).unwrap();
            done(s)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Cohomology {
            dims,
            coeffs,
            generators,
        } => cmd_cohomology(dims, coeffs, *generators, fmt(Format::Table), cli.max_n),
        Command::Tables { name } => cmd_tables(name, fmt(Format::Table)),
        Command::Graph { dims } => cmd_graph(dims, fmt(Format::Dot), cli.max_n),
        Command::Incidence { upper, lower } => cmd_incidence(upper, lower, fmt(Format::Table)),
        Command::TorsionCheck { dims } => cmd_torsion_check(dims, fmt(Format::Table), cli.max_n),
        Command::SchubertMult {
            lambda,
            mu,
            grassmannian,
            real,
        } => cmd_schubert_mult(lambda, mu, grassmannian.as_deref(), real.as_deref(), fmt(Format::Table)),
        Command::LowerBound { k, n, diagrams } => cmd_lower_bound(*k, *n, diagrams, fmt(Format::Table)),
        Command::Poincare { dims } => cmd_poincare(dims, fmt(Format::Table)),
    }
}

fn configure_threads() {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return;
    };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("warning: could not set {} threads: {}", n, e);
            }
        }
        _ => eprintln!("warning: ignoring {}={:?}", THREADS_VAR, v),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &out.text) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("validation failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

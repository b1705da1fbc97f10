//! `monolin`: command-line access to linearizations, equifications and
//! Betti-number computations for monomial ideals.

mod selfcheck;
mod session;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monolin::equification::{deequify, lin_general, lin_general_z1};
use monolin::quotients::order_of;
use monolin::{
    betti_closed_form, betti_from_quotients, betti_splitting_check, cluster_profile,
    colon_sequence, equify, find_linear_quotient_order, linearize, oracle_betti, parse_monomial,
    radical_star_lin, BettiTable, Coefficients, Criterion, Error, ExponentBound, Hypergraph,
    LcmLattice, LinMode, Linearized, MonomialIdeal, OracleConfig, OrderSearch, YIndexing,
};
use serde_json::{json, Value};

use session::{parse_session, Session};

/// Environment variable overriding the oracle's lcm-lattice cap.
const CAP_VAR: &str = "MONOLIN_LATTICE_CAP";

#[derive(Parser)]
#[command(
    name = "monolin",
    version,
    about = "Linearization and equification of monomial ideals"
)]
struct Cli {
    /// Session file (ring declaration and named ideals); stdin if omitted.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Inline session text, e.g. "ring x,y; I = x^3, y^2".
    #[arg(short = 'e', long = "expr", global = true, conflicts_with = "input")]
    expr: Option<String>,
    /// Name of the ideal to operate on.
    #[arg(long, global = true)]
    ideal: Option<String>,
    #[arg(short, long, value_enum, default_value = "ascii", global = true)]
    format: Format,
    /// Coefficient field for the homology oracle.
    #[arg(long, value_enum, default_value = "rational", global = true)]
    coefficients: Field,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Field {
    Rational,
    /// Integers modulo 2^61-1.
    Prime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Quotients,
    ClosedForm,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Ideal,
    Lin,
    StarLin,
}

#[derive(Subcommand)]
enum Command {
    /// Linearization with per-variable exponent bounds.
    Lin {
        /// Name the new variables after the generators.
        #[arg(long)]
        by_monomial: bool,
    },
    /// Linearization with one uniform exponent bound.
    StarLin {
        #[arg(long)]
        by_monomial: bool,
    },
    /// Lift every generator to the top degree with a new variable z.
    Equify,
    /// Undo `equify`: set z = 1 and minimalize.
    Deequify,
    /// Linearization of the equification.
    LinGeneral {
        /// Set z = 1 in the result.
        #[arg(long)]
        z1: bool,
    },
    /// Graded Betti table.
    Betti {
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
        /// Compute for the ideal itself or for one of its linearizations.
        #[arg(long, value_enum, default_value = "ideal")]
        of: Target,
    },
    /// Test for linear quotients, searching for an order if none is given.
    LqCheck {
        /// Comma-separated generators in the order to test, or `canonical`.
        #[arg(long)]
        order: Option<String>,
    },
    /// Radical of the ideal, or of its starred linearization.
    Radical {
        #[arg(long)]
        star_lin: bool,
    },
    /// Alexander dual of a squarefree ideal.
    Dual,
    /// Keep the generators below an exponent bound.
    Crop {
        /// Comma-separated bound, one entry per variable.
        #[arg(long)]
        bound: String,
    },
    /// Edge multiplicities and clusters of a squarefree equigenerated ideal.
    Clusters,
    /// The lcm-lattice.
    LcmLattice {
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
        /// Use the lattice of the equification.
        #[arg(long)]
        equified: bool,
    },
    /// Hypergraph queries on a squarefree ideal or an edge file.
    Hypergraph {
        /// Edge file: one edge per line as 1-based vertex indices.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[command(subcommand)]
        query: HyperQuery,
    },
    /// Compare Betti numbers with the splitting formula.
    SplittingCheck {
        /// Names of the two parts; defaults to the complete and last parts of
        /// the linearization.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<String>>,
    },
    /// Recover the source ideal from a linearization.
    Retrieve {
        /// The input is a starred linearization.
        #[arg(long)]
        star: bool,
    },
    /// Randomized consistency checks.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum HyperQuery {
    /// Proper-chain distance between two edges, given as monomials or as
    /// comma-separated vertex lists.
    Distance { first: String, second: String },
    /// Largest distance between edges.
    Diam,
    /// Diameter test for a linear resolution.
    Criterion,
    /// The hypergraph itself.
    Show,
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::Resource(_) => 4,
            _ => 3,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn oracle_config(field: Field) -> Result<OracleConfig, CliError> {
    let mut config = OracleConfig::default();
    if let Ok(v) = std::env::var(CAP_VAR) {
        config.lattice_cap = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{CAP_VAR} must be a positive integer")))?;
    }
    config.coefficients = match field {
        Field::Rational => Coefficients::Rational,
        Field::Prime => Coefficients::LargePrime,
    };
    Ok(config)
}

fn read_session(cli: &Cli) -> Result<Session, CliError> {
    let text = match (&cli.expr, &cli.input) {
        (Some(e), _) => e.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    match parse_session(&text) {
        Ok(session) => Ok(session?),
        Err(e) => Err(usage(e.to_string())),
    }
}

fn ideal_output(i: &MonomialIdeal, format: Format) -> Result<String, CliError> {
    match format {
        Format::Ascii => Ok(format!("{i}\n")),
        Format::Json => Ok(pretty(&i.to_json())),
        Format::Dot => Err(usage(
            "dot output is only available for lcm-lattice and hypergraph",
        )),
    }
}

fn table_output(t: &BettiTable, format: Format, warning: Option<&str>) -> Result<String, CliError> {
    match format {
        Format::Ascii => Ok(match warning {
            Some(w) => format!("{t}warning: {w}\n"),
            None => t.to_string(),
        }),
        Format::Json => {
            let mut v = t.to_json();
            if let Some(w) = warning {
                v["warning"] = json!(w);
            }
            Ok(pretty(&v))
        }
        Format::Dot => Err(usage(
            "dot output is only available for lcm-lattice and hypergraph",
        )),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn linearized(i: &MonomialIdeal, mode: LinMode, by_monomial: bool) -> Result<Linearized, Error> {
    let indexing = if by_monomial {
        YIndexing::ByMonomial
    } else {
        YIndexing::Positional
    };
    linearize(i, mode, indexing)
}

fn betti(cli: &Cli, i: &MonomialIdeal, method: Method, of: Target) -> Result<String, CliError> {
    let lin_of = |mode| linearized(i, mode, false);
    let target = match of {
        Target::Ideal => None,
        Target::Lin => Some(lin_of(LinMode::Lin)?),
        Target::StarLin => Some(lin_of(LinMode::Star)?),
    };
    let subject = target.as_ref().map_or(i, Linearized::ideal);
    let (table, warning) = match method {
        Method::Oracle => {
            let (multi, table) = oracle_betti(subject, &oracle_config(cli.coefficients)?)?;
            (table, multi.warning())
        }
        Method::Quotients => {
            let og = match &target {
                Some(l) => l.canonical_order()?,
                None => {
                    match find_linear_quotient_order(i, monolin::quotients::DEFAULT_SEARCH_BUDGET)?
                    {
                        OrderSearch::Found(order) => colon_sequence(i, &order)?,
                        OrderSearch::NoneExists => {
                            return Err(Error::Domain(
                                "the ideal has no linear quotients order".into(),
                            )
                            .into())
                        }
                        OrderSearch::Inconclusive => {
                            return Err(
                                Error::Resource("order search budget exhausted".into()).into()
                            )
                        }
                    }
                }
            };
            (betti_from_quotients(&og)?, None)
        }
        Method::ClosedForm => {
            if of != Target::StarLin {
                return Err(Error::Domain(
                    "the closed form describes the starred linearization; pass --of star-lin"
                        .into(),
                )
                .into());
            }
            (betti_closed_form(i)?, None)
        }
    };
    table_output(&table, cli.format, warning)
}

fn lq_check(cli: &Cli, i: &MonomialIdeal, order: Option<&str>) -> Result<String, CliError> {
    let og = match order {
        Some("canonical") => colon_sequence(i, &(0..i.num_gens()).collect::<Vec<_>>())?,
        Some(list) => {
            let seq = parse_ideal_list(list, i)?;
            colon_sequence(i, &order_of(i, &seq)?)?
        }
        None => match find_linear_quotient_order(i, monolin::quotients::DEFAULT_SEARCH_BUDGET)? {
            OrderSearch::Found(o) => colon_sequence(i, &o)?,
            OrderSearch::NoneExists => {
                return Ok(match cli.format {
                    Format::Json => pretty(&json!({ "linear_quotients": false, "order": null })),
                    _ => "linear quotients: no order exists\n".into(),
                })
            }
            OrderSearch::Inconclusive => {
                return Err(Error::Resource("order search budget exhausted".into()).into())
            }
        },
    };
    let ring = i.ring();
    let gens: Vec<String> = og
        .generators()
        .iter()
        .map(|g| g.display(ring).to_string())
        .collect();
    let r = og.r();
    let r_text: Vec<String> = r.iter().map(ToString::to_string).collect();
    match cli.format {
        Format::Json => Ok(pretty(&json!({
            "linear_quotients": og.has_linear_quotients(),
            "order": gens,
            "r": r,
            "colons": (0..og.len()).map(|k| og.colon_ideal(k).to_string()).collect::<Vec<_>>(),
        }))),
        Format::Ascii => Ok(match og.first_failure() {
            None => format!(
                "linear quotients: yes; r = {}\norder: {}\n",
                r_text.join(","),
                gens.join(", ")
            ),
            Some(k) => format!(
                "linear quotients: no; colon {} = {}\norder: {}\n",
                k + 1,
                og.colon_ideal(k),
                gens.join(", ")
            ),
        }),
        Format::Dot => Err(usage(
            "dot output is only available for lcm-lattice and hypergraph",
        )),
    }
}

/// A comma-separated monomial list in the ring of `i`, kept in input order.
fn parse_ideal_list(list: &str, i: &MonomialIdeal) -> Result<Vec<monolin::Monomial>, CliError> {
    list.split(',')
        .map(|t| parse_monomial(t.trim(), i.ring()).map_err(CliError::from))
        .collect()
}

fn edge_from_text(text: &str, ring: Option<&MonomialIdeal>) -> Result<Vec<usize>, CliError> {
    let t = text.trim();
    if t.chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c == ' ')
    {
        return t
            .split([',', ' '])
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(usage(format!("bad vertex `{s}`"))),
            })
            .collect();
    }
    let i = ring.ok_or_else(|| usage("edges must be vertex lists when reading an edge file"))?;
    Ok(parse_monomial(t, i.ring())?.support())
}

fn hypergraph(cli: &Cli, edges: Option<&PathBuf>, query: &HyperQuery) -> Result<String, CliError> {
    let (h, source) = match edges {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            (Hypergraph::parse(&text)?, None)
        }
        None => {
            let session = read_session(cli)?;
            let i = session.get(cli.ideal.as_deref()).map_err(usage)?.clone();
            (Hypergraph::from_ideal(&i)?, Some(i))
        }
    };
    if cli.format == Format::Dot {
        return Ok(h.to_dot()?);
    }
    let json = cli.format == Format::Json;
    let dist = |d: Option<usize>| d.map_or("infinite".to_string(), |x| x.to_string());
    Ok(match query {
        HyperQuery::Distance { first, second } => {
            let e = edge_from_text(first, source.as_ref())?;
            let f = edge_from_text(second, source.as_ref())?;
            let d = h.distance(&e, &f)?;
            if json {
                pretty(&json!({ "distance": d }))
            } else {
                format!("distance: {}\n", dist(d))
            }
        }
        HyperQuery::Diam => {
            let d = h.diameter()?;
            if json {
                pretty(&json!({ "diameter": d }))
            } else {
                format!("diameter: {}\n", dist(d))
            }
        }
        HyperQuery::Criterion => match h.linear_resolution_criterion()? {
            Criterion::Applicable { diameter, linear } => {
                if json {
                    pretty(&json!({ "applicable": true, "diameter": diameter, "linear": linear }))
                } else {
                    let d = h.uniformity().unwrap_or(0);
                    format!(
                        "criterion applies; diameter {} {} {d}: linear resolution {}\n",
                        dist(diameter),
                        if linear { "<=" } else { ">" },
                        if linear { "yes" } else { "no" }
                    )
                }
            }
            Criterion::Inapplicable(why) => {
                if json {
                    pretty(&json!({ "applicable": false, "reason": why }))
                } else {
                    format!("criterion inapplicable: {why}\n")
                }
            }
        },
        HyperQuery::Show => {
            if json {
                pretty(
                    &json!({ "vertices": h.vertex_count(), "edges": h.edges().iter().map(|e| e.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>() }),
                )
            } else {
                h.to_text()
            }
        }
    })
}

fn lattice(cli: &Cli, i: &MonomialIdeal, dot: bool, equified: bool) -> Result<String, CliError> {
    let subject = if equified { equify(i)? } else { i.clone() };
    let cap = oracle_config(cli.coefficients)?.lattice_cap;
    let l = LcmLattice::new(&subject, cap)?;
    if dot || cli.format == Format::Dot {
        return Ok(l.to_dot());
    }
    let ring = l.ring();
    let names: Vec<String> = l
        .elements()
        .iter()
        .map(|u| u.display(ring).to_string())
        .collect();
    let covers = l.covers();
    if cli.format == Format::Json {
        return Ok(pretty(&json!({ "elements": names, "covers": covers })));
    }
    let mut s = format!("{} elements, {} covers\n", names.len(), covers.len());
    for (k, n) in names.iter().enumerate() {
        let up: Vec<String> = covers
            .iter()
            .filter(|c| c.0 == k)
            .map(|c| names[c.1].clone())
            .collect();
        s.push_str(&format!(
            "{n} < {}\n",
            if up.is_empty() {
                "-".into()
            } else {
                up.join(", ")
            }
        ));
    }
    Ok(s)
}

fn splitting(cli: &Cli, session: &Session, parts: Option<&[String]>) -> Result<String, CliError> {
    let config = oracle_config(cli.coefficients)?;
    let i = session.get(cli.ideal.as_deref()).map_err(usage)?;
    let (whole, j, k) = match parts {
        Some([a, b]) => {
            let j = session.get(Some(a)).map_err(usage)?.clone();
            let k = session.get(Some(b)).map_err(usage)?.clone();
            (i.clone(), j, k)
        }
        Some(_) => return Err(usage("--parts takes two names")),
        None => {
            let l = linearized(i, LinMode::Lin, false)?;
            (
                l.ideal().clone(),
                l.part_ideal(l.complete_range()),
                l.part_ideal(l.last_range()),
            )
        }
    };
    let report = betti_splitting_check(&whole, &j, &k, &config)?;
    if cli.format == Format::Json {
        return Ok(pretty(&json!({
            "splitting": report.is_splitting(),
            "whole": report.i_table.to_json(),
            "first": report.j_table.to_json(),
            "second": report.k_table.to_json(),
            "intersection": report.meet_table.to_json(),
            "mismatches": report.mismatches.iter().map(|&(a, b, l, r)| json!({"i": a, "j": b, "actual": l, "predicted": r})).collect::<Vec<_>>(),
        })));
    }
    let mut s = format!(
        "betti splitting: {}\n",
        if report.is_splitting() { "yes" } else { "no" }
    );
    for (name, t) in [
        ("whole", &report.i_table),
        ("first part", &report.j_table),
        ("second part", &report.k_table),
        ("intersection", &report.meet_table),
    ] {
        s.push_str(&format!("{name}:\n{t}"));
    }
    for (a, b, l, r) in &report.mismatches {
        s.push_str(&format!("beta_{a},{b}: {l} but the formula gives {r}\n"));
    }
    Ok(s)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if let Command::Selfcheck { seed, cases } = cli.command {
        return selfcheck::run(seed, cases).map_err(|message| CliError { code: 1, message });
    }
    if let Command::Hypergraph { edges, query } = &cli.command {
        return hypergraph(cli, edges.as_ref(), query);
    }
    let session = read_session(cli)?;
    let i = session.get(cli.ideal.as_deref()).map_err(usage)?;
    let f = cli.format;
    match &cli.command {
        Command::Lin { by_monomial } | Command::StarLin { by_monomial } => {
            let mode = if matches!(cli.command, Command::Lin { .. }) {
                LinMode::Lin
            } else {
                LinMode::Star
            };
            let l = linearized(i, mode, *by_monomial)?;
            match f {
                Format::Json => Ok(pretty(&l.to_json())),
                _ => ideal_output(l.ideal(), f),
            }
        }
        Command::Equify => ideal_output(&equify(i)?, f),
        Command::Deequify => ideal_output(&deequify(i)?, f),
        Command::LinGeneral { z1 } => {
            if *z1 {
                ideal_output(&lin_general_z1(i)?, f)
            } else {
                let l = lin_general(i)?;
                match f {
                    Format::Json => Ok(pretty(&l.to_json())),
                    _ => ideal_output(l.ideal(), f),
                }
            }
        }
        Command::Betti { method, of } => betti(cli, i, *method, *of),
        Command::LqCheck { order } => lq_check(cli, i, order.as_deref()),
        Command::Radical { star_lin } => {
            if !*star_lin {
                return ideal_output(&i.radical(), f);
            }
            let r = radical_star_lin(i)?;
            match f {
                Format::Ascii => Ok(format!(
                    "{}\ndegree {} = {}*{} + {}; pathological generators: {}\n",
                    r.ideal,
                    i.generating_degree().unwrap_or(0),
                    r.a,
                    i.max_exponent(),
                    r.b,
                    r.pathological.len()
                )),
                _ => {
                    let mut v = r.ideal.to_json();
                    v["pathological"] = json!(r.pathological.len());
                    Ok(pretty(&v))
                }
            }
        }
        Command::Dual => ideal_output(&i.alexander_dual()?, f),
        Command::Crop { bound } => {
            let v = bound
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| usage(format!("bad bound entry `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ideal_output(&i.crop(&ExponentBound(v))?, f)
        }
        Command::Clusters => {
            let p = cluster_profile(i)?;
            match f {
                Format::Json => Ok(pretty(&p.to_json(i.ring()))),
                _ => {
                    let clusters: Vec<String> = p
                        .clusters
                        .iter()
                        .map(|(j, c)| format!("C_{j} = {c}"))
                        .collect();
                    let shared = p.edges.values().filter(|&&m| m >= 2).count();
                    Ok(format!(
                        "n = {}, m = {}, d = {}\n{} edges, {} shared\nclusters: {}\nN = {}\n",
                        p.n,
                        p.m,
                        p.d,
                        p.edges.len(),
                        shared,
                        if clusters.is_empty() {
                            "none".into()
                        } else {
                            clusters.join(", ")
                        },
                        p.max_cluster()
                    ))
                }
            }
        }
        Command::LcmLattice { dot, equified } => lattice(cli, i, *dot, *equified),
        Command::SplittingCheck { parts } => splitting(cli, &session, parts.as_deref()),
        Command::Retrieve { star } => {
            let mode = if *star { LinMode::Star } else { LinMode::Lin };
            ideal_output(&monolin::linearization::retrieve_from_ideal(i, mode)?, f)
        }
        Command::Hypergraph { .. } | Command::Selfcheck { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use turanlab::budget::Budget;
use turanlab::canon::canonize;
use turanlab::construct::parse_expr;
use turanlab::decomposition::{covering_family, decomposition_family};
use turanlab::extremal::{certify_candidate, enumerate_extremal_with, Method};
use turanlab::family::{family_q_bipartite, is_family_free, ForbiddenFamily, Freeness};
use turanlab::graph6::parse_graph6_lines;
use turanlab::invariants::{
    chromatic_number, clique_number, covering_number, independence_number, independent_covering_order,
};
use turanlab::pattern::{parse_family, parse_pattern};
use turanlab::suite::{run_suite, Status, SuiteOptions, SUITES};
use turanlab::symmetry::{
    classify_dichotomy, find_symmetric_families, Dichotomy, find_symmetric_vertices, in_symmetry_class, verify_extremal_shape,
};
use turanlab::{Error, Graph, Outcome};

const GRAPH_HELP: &str = "\
Graph arguments:
  path:L                 path on L vertices
  cycle:L                cycle on L vertices
  clique:K               complete graph on K vertices
  g6:STRING              a graph6 string
  expr:EXPR              a construction expression, e.g. expr:join(K(2),T(12,3))
  family:NAME(P,...)     a named graph or family, e.g. family:icosa, family:gst(20,2,4)
  EXPR                   a bare construction expression
  @FILE                  every graph6 line of FILE

Exit codes: 0 success or true, 1 false, 2 usage error, 3 undecided or out of budget.
Search budgets are read from TURANLAB_BUDGET_MS (milliseconds, unlimited if unset).";

#[derive(Parser)]
#[command(name = "turanlab", version, about = "Turán-type extremal graph theory toolkit", after_help = GRAPH_HELP)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    G6,
    Edges,
    Adjacency,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exhaustive,
    LabeledBruteforce,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph or every member of a named family.
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value_t = Out::G6)]
        out: Out,
    },
    /// Test hosts for freeness of the forbidden patterns.
    Check {
        host: String,
        #[arg(long, required = true)]
        forbid: Vec<String>,
        /// Claimed edge count; the verdict also requires it to match.
        #[arg(long)]
        edges: Option<usize>,
        /// Also compare the edge count with the exhaustive extremal number.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Exact scalar invariants.
    Invariants { graph: String },
    /// Decomposition family and covering family of the forbidden patterns.
    Decompose {
        #[arg(long, required = true)]
        forbid: Vec<String>,
        /// Largest candidate order for the decomposition family.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Symmetric vertices, symmetric block families and class membership.
    Symmetry {
        graph: String,
        /// Look for a family of blocks of this order.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        tau_min: usize,
        /// Classify the family found with --k against paths on L vertices.
        #[arg(long, value_name = "L", requires = "k")]
        dichotomy: Option<usize>,
        /// Test membership in the symmetric class with r parts and constant c.
        #[arg(long, num_args = 2, value_names = ["R", "C"])]
        class: Option<Vec<usize>>,
    },
    /// Verify the extremal shape with parameters q, r and t.
    Shape {
        graph: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
    },
    /// Exact extremal number and extremal graphs for small n.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, required = true)]
        forbid: Vec<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Exhaustive)]
        method: MethodArg,
    },
    /// Run a named self-check suite, or all of them.
    VerifySuite {
        /// One of turan, paths, observation1, d-identity, certificates,
        /// decomposition, shape, enumerator, dichotomy, all.
        name: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Number of random cases for the randomised suites.
        #[arg(long)]
        cases: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Verdict {
    True,
    False,
    Undecided,
}

impl Verdict {
    fn code(self) -> u8 {
        match self {
            Verdict::True => 0,
            Verdict::False => 1,
            Verdict::Undecided => 3,
        }
    }

    /// False beats undecided, which beats true.
    fn combine(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Undecided, _) | (_, Verdict::Undecided) => Verdict::Undecided,
            _ => Verdict::True,
        }
    }
}

const KINDS: [&str; 6] = ["path", "cycle", "clique", "g6", "expr", "family"];

fn read_graphs(arg: &str) -> Result<Vec<(String, Graph)>, Error> {
    if let Some(file) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(file).map_err(|e| Error::InvalidParameter(format!("{file}: {e}")))?;
        let graphs = parse_graph6_lines(&text)?;
        return Ok(graphs.into_iter().map(|g| (g.to_graph6(), g)).collect());
    }
    match arg.split_once(':') {
        Some((kind, _)) if KINDS.contains(&kind) => parse_pattern(arg),
        _ => Ok(vec![(arg.to_string(), parse_expr(arg)?.eval()?)]),
    }
}

/// Comma-separated, or `-` when empty.
fn list(vs: &[usize]) -> String {
    if vs.is_empty() {
        return "-".to_string();
    }
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

struct Report {
    out: String,
    verdict: Verdict,
}

impl Report {
    fn new() -> Self {
        Report { out: String::new(), verdict: Verdict::True }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn json(&mut self, v: serde_json::Value) {
        self.line(v.to_string());
    }

    fn verdict(&mut self, v: Verdict) {
        self.verdict = self.verdict.combine(v);
    }
}

fn construct(r: &mut Report, fmt: Format, spec: &str, out: Out) -> Result<(), Error> {
    for (label, g) in read_graphs(spec)? {
        if fmt == Format::Jsonl {
            r.json(json!({
                "label": label,
                "graph6": g.to_graph6(),
                "order": g.order(),
                "edges": g.edge_count(),
            }));
            continue;
        }
        match out {
            Out::G6 => r.line(g.to_graph6()),
            Out::Edges => {
                r.line(format!("{} {}", g.order(), g.edge_count()));
                for (u, v) in g.edges() {
                    r.line(format!("{u} {v}"));
                }
            }
            Out::Adjacency => {
                for u in 0..g.order() {
                    r.line((0..g.order()).map(|v| if g.has_edge(u, v) { '1' } else { '0' }).collect::<String>());
                }
            }
        }
    }
    Ok(())
}

fn check(r: &mut Report, fmt: Format, host: &str, forbid: &[String], edges: Option<usize>, exhaustive: bool) -> Result<(), Error> {
    let fam: ForbiddenFamily = parse_family(forbid)?;
    let budget = Budget::from_env();
    for (_, g) in read_graphs(host)? {
        let (freeness, edge_ok, exhaustive_ok) = match edges {
            Some(claimed) => {
                let v = certify_candidate(&g, &fam, claimed, budget, exhaustive)?;
                (v.freeness.clone(), Some(v.edges_match()), v.matches_exhaustive)
            }
            None if exhaustive => {
                let v = certify_candidate(&g, &fam, g.edge_count(), budget, true)?;
                (v.freeness, None, v.matches_exhaustive)
            }
            None => (is_family_free(&g, &fam, budget), None, None),
        };
        let (mut verdict, status, member, witness) = match &freeness {
            Freeness::Free => (Verdict::True, "free", None, None),
            Freeness::Contains { member, witness } => (Verdict::False, "contains", Some(*member), Some(witness.clone())),
            Freeness::Undecided { member } => (Verdict::Undecided, "undecided", Some(*member), None),
        };
        if edge_ok == Some(false) || exhaustive_ok == Some(false) {
            verdict = verdict.combine(Verdict::False);
        }
        r.verdict(verdict);
        if fmt == Format::Jsonl {
            r.json(json!({
                "graph6": g.to_graph6(),
                "status": status,
                "member": member.map(|m| fam.labels()[m].clone()),
                "witness": witness,
                "edges": g.edge_count(),
                "claimed": edges,
                "edges_match": edge_ok,
                "matches_exhaustive": exhaustive_ok,
            }));
            continue;
        }
        let mut line = format!("{} {status}", g.to_graph6());
        if let Some(m) = member {
            write!(line, " {}", fam.labels()[m]).unwrap();
        }
        if let Some(w) = &witness {
            write!(line, " witness={}", list(w)).unwrap();
        }
        if let Some(c) = edges {
            write!(line, " edges={} claimed={c}", g.edge_count()).unwrap();
        }
        if let Some(m) = exhaustive_ok {
            write!(line, " matches_exhaustive={m}").unwrap();
        }
        r.line(line);
    }
    Ok(())
}

fn invariants(r: &mut Report, fmt: Format, arg: &str) -> Result<(), Error> {
    for (i, (label, g)) in read_graphs(arg)?.into_iter().enumerate() {
        let canon = canonize(&g);
        let bipartite = g.is_bipartite();
        let cover = if bipartite { Some(independent_covering_order(&g)?) } else { None };
        let rows: Vec<(&str, serde_json::Value)> = vec![
            ("label", json!(label)),
            ("graph6", json!(g.to_graph6())),
            ("order", json!(g.order())),
            ("edges", json!(g.edge_count())),
            ("min_degree", json!(g.min_degree())),
            ("max_degree", json!(g.max_degree())),
            ("clique_number", json!(clique_number(&g))),
            ("chromatic_number", json!(chromatic_number(&g))),
            ("independence_number", json!(independence_number(&g))),
            ("covering_number", json!(covering_number(&g))),
            ("connected", json!(g.is_connected())),
            ("bipartite", json!(bipartite)),
            ("independent_covering_order", json!(cover)),
            ("orbits", json!(canon.orbits.len())),
            ("canonical", json!(canon.form.cert_str())),
        ];
        if fmt == Format::Jsonl {
            r.json(serde_json::Value::Object(rows.into_iter().map(|(k, v)| (k.to_string(), v)).collect()));
            continue;
        }
        if i > 0 {
            r.line("");
        }
        for (k, v) in rows {
            match v {
                serde_json::Value::String(s) => r.line(format!("{k} {s}")),
                serde_json::Value::Null => r.line(format!("{k} -")),
                v => r.line(format!("{k} {v}")),
            }
        }
    }
    Ok(())
}

fn decompose(r: &mut Report, fmt: Format, forbid: &[String], bound: Option<usize>) -> Result<(), Error> {
    let fam: ForbiddenFamily = parse_family(forbid)?;
    let res = decomposition_family(&fam, bound, Budget::from_env())?;
    let cover = covering_family(&fam)?;
    let q_bip = family_q_bipartite(&fam);
    if res.undecided > 0 {
        r.verdict(Verdict::Undecided);
    }
    let m: Vec<String> = res.members.iter().map(Graph::to_graph6).collect();
    let b: Vec<String> = cover.iter().map(Graph::to_graph6).collect();
    if fmt == Format::Jsonl {
        r.json(json!({
            "r": fam.r(),
            "t": fam.t(),
            "q": fam.q(),
            "q_bipartite": q_bip,
            "decomposition": m,
            "search_bound": res.search_bound,
            "complete": res.complete,
            "undecided": res.undecided,
            "has_bipartite": res.has_bipartite,
            "covering": b,
        }));
        return Ok(());
    }
    r.line(format!("r {}", fam.r()));
    r.line(format!("t {}", fam.t()));
    r.line(format!("q {}", fam.q()));
    r.line(format!("q_bipartite {}", q_bip.map_or("-".to_string(), |q| q.to_string())));
    r.line(format!(
        "decomposition count={} bound={} complete={} undecided={} has_bipartite={}",
        m.len(),
        res.search_bound,
        res.complete,
        res.undecided,
        res.has_bipartite
    ));
    for g in &m {
        r.line(format!("M {g}"));
    }
    r.line(format!("covering count={}", b.len()));
    for g in &b {
        r.line(format!("B {g}"));
    }
    Ok(())
}

fn outcome_verdict<T>(o: &Outcome<T>) -> Verdict {
    match o {
        Outcome::Found(_) => Verdict::True,
        Outcome::Absent => Verdict::False,
        Outcome::Undecided => Verdict::Undecided,
    }
}

fn outcome_name<T>(o: &Outcome<T>) -> &'static str {
    match o {
        Outcome::Found(_) => "found",
        Outcome::Absent => "absent",
        Outcome::Undecided => "undecided",
    }
}

fn symmetry(
    r: &mut Report,
    fmt: Format,
    arg: &str,
    k: Option<usize>,
    tau_min: usize,
    dichotomy: Option<usize>,
    class: Option<&[usize]>,
) -> Result<(), Error> {
    let budget = Budget::from_env();
    for (_, g) in read_graphs(arg)? {
        let mut obj = serde_json::Map::new();
        let g6 = g.to_graph6();
        obj.insert("graph6".into(), json!(g6));
        let mut text = vec![format!("graph {g6}")];

        let classes: Vec<Vec<usize>> = find_symmetric_vertices(&g).into_iter().filter(|c| c.len() > 1).collect();
        text.push(format!("symmetric_classes {}", classes.len()));
        text.extend(classes.iter().map(|c| format!("class {}", list(c))));
        obj.insert("symmetric_classes".into(), json!(classes));

        if let Some(k) = k {
            let out = find_symmetric_families(&g, k, tau_min, budget)?;
            r.verdict(outcome_verdict(&out));
            text.push(format!("family {}", outcome_name(&out)));
            obj.insert("family".into(), json!(outcome_name(&out)));
            if let Outcome::Found(fam) = &out {
                text.push(format!("tau {} k {} cross_edges {}", fam.tau(), fam.block_order(), fam.has_cross_edges()));
                text.extend(fam.blocks.iter().map(|b| format!("block {}", list(b))));
                obj.insert("blocks".into(), json!(fam.blocks));
                obj.insert("isos".into(), json!(fam.isos));
                if let Some(l) = dichotomy {
                    let d = classify_dichotomy(fam, l)?;
                    text.push(match &d {
                        Dichotomy::CliqueBlocks => "dichotomy clique_blocks".to_string(),
                        Dichotomy::Apexed { apexes } => format!("dichotomy apexed {}", list(apexes)),
                        Dichotomy::Neither => "dichotomy neither".to_string(),
                        Dichotomy::HypothesisNotMet(why) => format!("dichotomy hypothesis_not_met {why}"),
                    });
                    obj.insert("dichotomy".into(), serde_json::to_value(&d).expect("serialises"));
                }
            }
        }
        if let Some(rc) = class {
            let (rr, c) = (rc[0], rc[1]);
            let out = in_symmetry_class(&g, rr, c, budget)?;
            r.verdict(outcome_verdict(&out));
            text.push(format!("class_member {}", outcome_name(&out)));
            obj.insert("class_member".into(), json!(outcome_name(&out)));
            if let Outcome::Found(cert) = &out {
                text.push(format!("omitted {}", list(&cert.omitted)));
                for (i, part) in cert.parts.iter().enumerate() {
                    let blocks: Vec<String> = part.iter().map(|b| list(b)).collect();
                    text.push(format!("part {} {}", i + 1, blocks.join(" ")));
                }
                obj.insert("certificate".into(), serde_json::to_value(cert).expect("serialises"));
            }
        }
        if fmt == Format::Jsonl {
            r.json(serde_json::Value::Object(obj));
        } else {
            text.into_iter().for_each(|l| r.line(l));
        }
    }
    Ok(())
}

fn shape(r: &mut Report, fmt: Format, arg: &str, q: usize, rr: usize, t: usize) -> Result<(), Error> {
    for (_, g) in read_graphs(arg)? {
        let cert = verify_extremal_shape(&g, q, rr, t);
        r.verdict(if cert.is_some() { Verdict::True } else { Verdict::False });
        if fmt == Format::Jsonl {
            r.json(json!({ "graph6": g.to_graph6(), "accepted": cert.is_some(), "certificate": cert }));
            continue;
        }
        r.line(format!("{} {}", g.to_graph6(), if cert.is_some() { "accepted" } else { "rejected" }));
        if let Some(c) = cert {
            r.line(format!("W {}", list(&c.w)));
            for (i, (p, core)) in c.parts.iter().zip(&c.cores).enumerate() {
                r.line(format!("S{} {} core {}", i + 1, list(p), list(core)));
            }
        }
    }
    Ok(())
}

fn extremal(r: &mut Report, fmt: Format, n: usize, forbid: &[String], method: MethodArg) -> Result<(), Error> {
    let fam: ForbiddenFamily = parse_family(forbid)?;
    let method = match method {
        MethodArg::Exhaustive => Method::Exhaustive,
        MethodArg::LabeledBruteforce => Method::LabeledBruteForce,
    };
    let rep = enumerate_extremal_with(n, &fam, method)?;
    match fmt {
        Format::Text => r.out.push_str(&rep.to_text()),
        Format::Jsonl => r.line(rep.to_json_line()),
    }
    Ok(())
}

fn verify_suite(r: &mut Report, fmt: Format, name: &str, opts: SuiteOptions) -> Result<(), Error> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    for name in names {
        let rep = run_suite(name, &opts)?;
        r.verdict(match rep.status() {
            Status::Pass => Verdict::True,
            Status::Fail => Verdict::False,
            Status::Undecided => Verdict::Undecided,
        });
        r.out.push_str(&match fmt {
            Format::Text => rep.to_text(),
            Format::Jsonl => rep.to_json_lines(),
        });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Report, Error> {
    let mut r = Report::new();
    let fmt = cli.format;
    match &cli.command {
        Command::Construct { spec, out } => construct(&mut r, fmt, spec, *out)?,
        Command::Check { host, forbid, edges, exhaustive } => check(&mut r, fmt, host, forbid, *edges, *exhaustive)?,
        Command::Invariants { graph } => invariants(&mut r, fmt, graph)?,
        Command::Decompose { forbid, bound } => decompose(&mut r, fmt, forbid, *bound)?,
        Command::Symmetry { graph, k, tau_min, dichotomy, class } => {
            symmetry(&mut r, fmt, graph, *k, *tau_min, *dichotomy, class.as_deref())?
        }
        Command::Shape { graph, q, r: rr, t } => shape(&mut r, fmt, graph, *q, *rr, *t)?,
        Command::Extremal { n, forbid, method } => extremal(&mut r, fmt, *n, forbid, *method)?,
        Command::VerifySuite { name, nmax, cases } => {
            verify_suite(&mut r, fmt, name, SuiteOptions { nmax: *nmax, seed: cli.seed, cases: *cases })?
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(r) => {
            print!("{}", r.out);
            ExitCode::from(r.verdict.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

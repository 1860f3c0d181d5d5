//! Self-checks run by `turanlab verify-suite` and by the acceptance tests.
//!
//! Every suite is deterministic for a given [`SuiteOptions`]; random inputs
//! come from a ChaCha generator seeded with `seed`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::bit;
use crate::budget::{Budget, Outcome};
use crate::canon::certificate;
use crate::construct::named::{f_st, g_st, icosahedron_family};
use crate::construct::{blow_up, complete, cycle, edge_count_turan, empty, k_plus, path, turan, turan_part_sizes};
use crate::decomposition::{decomposes, decomposition_family};
use crate::error::{invalid, Result};
use crate::extremal::{d_inverse, d_operation, enumerate_extremal, path_extremal_oracle, EXHAUSTIVE_MAX};
use crate::family::{is_family_free, ForbiddenFamily, Freeness};
use crate::generate::{count_classes, labeled_classes, LABELED_MAX};
use crate::graph::Graph;
use crate::subgraph::{contains_subgraph, find_embedding};
use crate::symmetry::{
    classify_dichotomy, replicate, verify_extremal_shape, verify_extremal_shape_exhaustive, Dichotomy,
    ShapeCertificate, SymmetricFamily,
};

pub const SUITES: [&str; 9] = [
    "turan",
    "paths",
    "observation1",
    "d-identity",
    "certificates",
    "decomposition",
    "shape",
    "enumerator",
    "dichotomy",
];

/// Node budget for containment tests whose outcome may be reported as
/// undecided.
pub const CERTIFICATE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// `Fail` if any check failed, else `Undecided` if any is undecided.
    pub fn status(&self) -> Status {
        let has = |s| self.checks.iter().any(|c| c.status == s);
        if has(Status::Fail) {
            Status::Fail
        } else if has(Status::Undecided) {
            Status::Undecided
        } else {
            Status::Pass
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// One `STATUS name detail` line per check.
    pub fn to_text(&self) -> String {
        self.checks.iter().map(|c| format!("{} {} {}\n", c.status, c.name, c.detail)).collect()
    }

    /// One JSON object per check.
    pub fn to_json_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let line = serde_json::json!({
                    "suite": self.suite,
                    "status": c.status,
                    "name": c.name,
                    "detail": c.detail,
                });
                format!("{line}\n")
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest order for the exhaustive suites.
    pub nmax: usize,
    pub seed: u64,
    /// Number of random cases; each suite has its own default.
    pub cases: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { nmax: 8, seed: 0, cases: None }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, ok: bool, name: impl Into<String>, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.0.push(Check { status, name: name.into(), detail: detail.into() });
    }

    fn push_status(&mut self, status: Status, name: impl Into<String>, detail: impl Into<String>) {
        self.0.push(Check { status, name: name.into(), detail: detail.into() });
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut c = Checks(Vec::new());
    match name {
        "turan" => turan_suite(opts, &mut c)?,
        "paths" => paths_suite(opts, &mut c)?,
        "observation1" => observation1_suite(opts, &mut c)?,
        "d-identity" => d_identity_suite(opts, &mut c)?,
        "certificates" => certificates_suite(&mut c)?,
        "decomposition" => decomposition_suite(&mut c)?,
        "shape" => shape_suite(opts, &mut c)?,
        "enumerator" => enumerator_suite(opts, &mut c)?,
        "dichotomy" => dichotomy_suite(opts, &mut c)?,
        _ => return Err(invalid(format!("unknown suite '{name}' (expected one of {})", SUITES.join(", ")))),
    }
    Ok(SuiteReport { suite: name.to_string(), checks: c.0 })
}

fn nmax(opts: &SuiteOptions) -> Result<usize> {
    if opts.nmax > EXHAUSTIVE_MAX {
        return Err(invalid(format!("--nmax is at most {EXHAUSTIVE_MAX}")));
    }
    Ok(opts.nmax)
}

fn single(g: Graph) -> Result<ForbiddenFamily> {
    ForbiddenFamily::single(g)
}

fn turan_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    let nmax = nmax(opts)?;
    for r in 2..=3 {
        let fam = single(complete(r + 1)?)?;
        for n in r + 1..=nmax {
            let rep = enumerate_extremal(n, &fam)?;
            let want = vec![certificate(&turan(n, r)?)];
            c.push(
                rep.ex == edge_count_turan(n, r) && rep.graphs == want,
                format!("turan n={n} r={r}"),
                format!("ex={} graphs={}", rep.ex, rep.graphs.len()),
            );
        }
    }
    Ok(())
}

fn paths_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    let nmax = nmax(opts)?;
    for l in 3..=6 {
        let fam = single(path(l)?)?;
        for n in l..=nmax {
            let oracle = path_extremal_oracle(n, l)?;
            let rep = enumerate_extremal(n, &fam)?;
            c.push(
                rep.ex == oracle.ex && rep.graphs == oracle.certificates(),
                format!("paths n={n} l={l}"),
                format!("ex={} oracle={} graphs={} oracle_graphs={}", rep.ex, oracle.ex, rep.graphs.len(), oracle.graphs.len()),
            );
        }
    }
    Ok(())
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in 0..u {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// A random recursive tree plus independent extra edges with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    let mut g = random_graph(rng, n, p)?;
    for v in 1..n {
        let u = rng.gen_range(0..v);
        if !g.has_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// A uniformly paired `d`-regular simple graph; pairings with loops or
/// repeated edges are redrawn.
pub fn random_regular(rng: &mut impl Rng, n: usize, d: usize) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(invalid(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'draw: loop {
        stubs.shuffle(rng);
        let mut g = Graph::new(n)?;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'draw;
            }
            g.add_edge(u, v);
        }
        return Ok(g);
    }
}

fn random_relabel(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A pattern `F` on 2 to 5 vertices and an `F`-free host with at least `|F|`
/// pairwise non-adjacent symmetric blocks, randomly relabelled.
pub fn random_symmetric_instance(rng: &mut impl Rng) -> Result<(Graph, SymmetricFamily)> {
    loop {
        let (f_order, f_p) = (rng.gen_range(2..=5), rng.gen_range(0.0..0.6));
        let f = random_connected(rng, f_order, f_p)?;
        let (k, k_p) = (rng.gen_range(1..=3), rng.gen_range(0.0..0.8));
        let block = random_connected(rng, k, k_p)?;
        let tau = f.order() + rng.gen_range(0..=2);
        let b = rng.gen_range(0..=5);
        let base_p = rng.gen_range(0.0..0.6);
        let base = random_graph(rng, b, base_p)?;
        let p_attach = rng.gen_range(0.0..0.7);
        let attach: Vec<Vec<usize>> =
            (0..k).map(|_| (0..b).filter(|_| rng.gen_bool(p_attach)).collect()).collect();

        let mut parts = vec![&base];
        parts.extend(std::iter::repeat_n(&block, tau));
        let mut host = Graph::disjoint_union(&parts)?;
        for j in 0..tau {
            for (i, outs) in attach.iter().enumerate() {
                for &u in outs {
                    host.add_edge(b + j * k + i, u);
                }
            }
        }
        if contains_subgraph(&host, &f).is_some() {
            continue;
        }
        let perm = random_relabel(rng, host.order());
        let host = host.relabeled(&perm);
        let blocks: Vec<Vec<usize>> = (0..tau).map(|j| (0..k).map(|i| perm[b + j * k + i]).collect()).collect();
        let isos = blocks[1..].to_vec();
        return Ok((f, SymmetricFamily { host, blocks, isos }));
    }
}

fn observation1_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for case in 0..opts.cases.unwrap_or(500) {
        let (f, fam) = random_symmetric_instance(&mut rng)?;
        let valid = fam.validate().is_ok() && !fam.has_cross_edges() && fam.tau() >= f.order();
        let grown = replicate(&fam)?;
        let free = contains_subgraph(&grown, &f).is_none();
        c.push(
            valid && free,
            format!("observation1 case={case}"),
            format!(
                "pattern={} host={} blocks={}x{} replicated_free={free}",
                f.to_graph6(),
                fam.host.to_graph6(),
                fam.tau(),
                fam.block_order()
            ),
        );
    }
    Ok(())
}

/// A graph with a shape certificate whose cores are all nonempty: `q - 1`
/// vertices in `W`, `r` balanced parts, and at most `t^2` non-core vertices
/// per part, wired at random wherever the core condition allows.
pub fn random_shaped(rng: &mut impl Rng) -> Result<(Graph, ShapeCertificate)> {
    let q = rng.gen_range(1..=3);
    let r = rng.gen_range(2..=4);
    let t: usize = rng.gen_range(1..=2);
    let rest = r * rng.gen_range(3..=6) + rng.gen_range(0..r);
    let n = q - 1 + rest;
    let p = rng.gen_range(0.2..0.8);

    let w: Vec<usize> = (0..q - 1).collect();
    let mut parts = Vec::new();
    let mut cores = Vec::new();
    let mut next = q - 1;
    for size in turan_part_sizes(rest, r) {
        let part: Vec<usize> = (next..next + size).collect();
        let loose = rng.gen_range(0..=(t * t).min(size - 1));
        cores.push(part[loose..].to_vec());
        parts.push(part);
        next += size;
    }
    let mut part_of = vec![usize::MAX; n];
    let mut is_core = vec![false; n];
    for (i, (part, core)) in parts.iter().zip(&cores).enumerate() {
        for &v in part {
            part_of[v] = i;
        }
        for &v in core {
            is_core[v] = true;
        }
    }
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in 0..u {
            let same = part_of[u] != usize::MAX && part_of[u] == part_of[v];
            let edge = if is_core[u] || is_core[v] {
                !same
            } else {
                rng.gen_bool(p)
            };
            if edge {
                g.add_edge(u, v);
            }
        }
    }
    let cert = ShapeCertificate { w, parts, cores };
    cert.verify(&g, q, r, t)?;
    Ok((g, cert))
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn d_identity_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for case in 0..opts.cases.unwrap_or(50) {
        let (h, cert) = random_shaped(&mut rng)?;
        let (m, q, r) = (h.order(), cert.q(), cert.r());
        let (dh, dcert) = d_operation(&h, &cert)?;
        let gain = dh.edge_count() - h.edge_count();
        let want = (q - 1) + m * (r - 1) + binom2(r);
        let (back, _) = d_inverse(&dh, &dcert)?;
        let same = certificate(&back) == certificate(&h);
        c.push(
            gain == want && same,
            format!("d-identity case={case}"),
            format!("m={m} q={q} r={r} gain={gain} expected={want} inverse_isomorphic={same}"),
        );
    }
    Ok(())
}

fn freeness_status(f: &Freeness) -> (Status, String) {
    match f {
        Freeness::Free => (Status::Pass, "free".into()),
        Freeness::Contains { member, .. } => (Status::Fail, format!("contains member {member}")),
        Freeness::Undecided { member } => (Status::Undecided, format!("undecided at member {member}")),
    }
}

fn certificates_suite(c: &mut Checks) -> Result<()> {
    let budget = Budget::nodes(CERTIFICATE_BUDGET);
    let c333 = single(blow_up(&complete(3)?, 2)?)?;
    for n in 8usize..=24 {
        let (hi, lo) = (n.div_ceil(2), n / 2);
        let plus = k_plus(&[hi, lo])?;
        let want = hi * lo + hi / 2 + lo / 2;
        let (st, free) = freeness_status(&is_family_free(&plus, &c333, budget));
        let ok = st == Status::Pass && plus.edge_count() == want;
        c.push(ok, format!("kplus n={n}"), format!("{free} edges={} expected={want}", plus.edge_count()));

        let apex = Graph::join(&[&complete(1)?, &turan(n - 1, 2)?])?;
        let want = (n - 1) + edge_count_turan(n - 1, 2);
        let (st, free) = freeness_status(&is_family_free(&apex, &c333, budget));
        let ok = st == Status::Pass && apex.edge_count() == want;
        c.push(ok, format!("apex-turan n={n}"), format!("{free} edges={} expected={want}", apex.edge_count()));
    }

    let icosa = ForbiddenFamily::new(icosahedron_family().iter().map(|e| e.eval()).collect::<Result<_>>()?)?;
    for n in 14..=20 {
        let g = Graph::join(&[&complete(2)?, &turan(n - 2, 3)?])?;
        let (st, free) = freeness_status(&is_family_free(&g, &icosa, budget));
        c.push_status(st, format!("icosa n={n}"), format!("{free} edges={}", g.edge_count()));
    }

    for (s, t, n) in [(2, 4, 20), (3, 3, 21)] {
        let g = g_st(n, s, t)?.eval()?;
        let m = n - s + 1;
        let want = m.div_ceil(2) * (m / 2) + (s - 1) * m + binom2(s - 1) + t * t - 3 * t + 3;
        c.push(
            g.edge_count() == want,
            format!("gst-edges s={s} t={t} n={n}"),
            format!("edges={} expected={want}", g.edge_count()),
        );
        let f = f_st(s, t)?.eval()?;
        let (st, free) = match find_embedding(&g, &f, budget) {
            Outcome::Absent if f.order() > g.order() => (Status::Pass, "free (pattern larger than host)".to_string()),
            Outcome::Absent => (Status::Pass, "free".to_string()),
            Outcome::Found(_) => (Status::Fail, "contains the pattern".to_string()),
            Outcome::Undecided => (Status::Undecided, "undecided".to_string()),
        };
        c.push_status(st, format!("gst-free s={s} t={t} n={n}"), format!("{free} pattern_order={}", f.order()));
    }
    Ok(())
}

fn without_isolated(g: &Graph) -> Graph {
    g.induced((0..g.order()).filter(|&v| g.degree(v) > 0).fold(0, |m, v| m | bit(v)))
}

fn decomposition_suite(c: &mut Checks) -> Result<()> {
    for k in [3, 4] {
        let fam = single(complete(k)?)?;
        let res = decomposition_family(&fam, None, Budget::unlimited())?;
        let exact = res.complete && res.members.len() == 1 && certificate(&res.members[0]) == certificate(&complete(2)?);
        let mut minimal = true;
        for (i, m) in res.members.iter().enumerate() {
            minimal &= decomposes(m, &fam, Budget::unlimited())?.is_found();
            for (u, v) in m.edges() {
                let mut h = m.clone();
                h.remove_edge(u, v);
                minimal &= !decomposes(&without_isolated(&h), &fam, Budget::unlimited())?.is_found();
            }
            for (j, other) in res.members.iter().enumerate() {
                minimal &= i == j || contains_subgraph(m, other).is_none();
            }
        }
        let members: Vec<String> = res.members.iter().map(Graph::to_graph6).collect();
        c.push(
            exact && minimal,
            format!("decomposition K{k}"),
            format!("members=[{}] complete={} minimal={minimal}", members.join(","), res.complete),
        );
    }
    Ok(())
}

fn shape_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    for (q, r, n) in [(1, 2, 10), (3, 2, 13), (2, 3, 14)] {
        let g = Graph::join(&[&empty(q - 1)?, &turan(n - q + 1, r)?])?;
        let cert = verify_extremal_shape(&g, q, r, 1);
        let ok = cert.as_ref().is_some_and(|cert| cert.verify(&g, q, r, 1).is_ok());
        c.push(ok, format!("shape-accept q={q} r={r} n={n}"), format!("accepted={}", cert.is_some()));
    }
    let c7 = cycle(7)?;
    let got = verify_extremal_shape(&c7, 1, 2, 1);
    let oracle = verify_extremal_shape_exhaustive(&c7, 1, 2, 1);
    c.push(got.is_none() && oracle.is_none(), "shape-reject C7", format!("accepted={} oracle={}", got.is_some(), oracle.is_some()));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for case in 0..opts.cases.unwrap_or(20) {
        let n = [8, 10][rng.gen_range(0..2)];
        let g = random_regular(&mut rng, n, 3)?;
        let got = verify_extremal_shape(&g, 1, 2, 1);
        let oracle = verify_extremal_shape_exhaustive(&g, 1, 2, 1);
        c.push(
            got.is_none() && oracle.is_none(),
            format!("shape-reject regular case={case}"),
            format!("graph={} accepted={} oracle={}", g.to_graph6(), got.is_some(), oracle.is_some()),
        );
    }
    Ok(())
}

const CLASS_COUNTS: [usize; 7] = [1, 1, 2, 4, 11, 34, 156];

fn enumerator_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    for n in 1..=opts.nmax.min(LABELED_MAX) {
        let augmented = count_classes(n);
        let labelled = labeled_classes(n, |_| true)?.len();
        c.push(
            augmented == labelled && labelled == CLASS_COUNTS[n],
            format!("enumerator n={n}"),
            format!("augmentation={augmented} labelled={labelled} expected={}", CLASS_COUNTS[n]),
        );
    }
    Ok(())
}

fn dichotomy_suite(opts: &SuiteOptions, c: &mut Checks) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cases: Vec<(String, usize, Graph, Vec<Vec<usize>>, Dichotomy)> = Vec::new();
    for (l, tau) in [(4, 4), (4, 5), (6, 6), (6, 7)] {
        let k = l - 1;
        let kk = complete(k)?;
        let host = Graph::disjoint_union(&vec![&kk; tau])?;
        let blocks = (0..tau).map(|i| (i * k..(i + 1) * k).collect()).collect();
        cases.push((format!("l={l} {tau}K{k}"), l, host, blocks, Dichotomy::CliqueBlocks));
    }
    for (l, tau) in [(4, 6), (4, 9), (6, 10), (6, 15)] {
        let a = (l - 2) / 2;
        let host = Graph::join(&[&complete(a)?, &empty(tau)?])?;
        let blocks = (a..a + tau).map(|v| vec![v]).collect();
        let apexes = (0..a).collect();
        cases.push((format!("l={l} K{a}vE{tau}"), l, host, blocks, Dichotomy::Apexed { apexes }));
    }
    for (label, l, host, blocks, want) in cases {
        for relabel in [false, true] {
            let perm: Vec<usize> = if relabel {
                random_relabel(&mut rng, host.order())
            } else {
                (0..host.order()).collect()
            };
            let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().map(|&v| perm[v]).collect()).collect();
            let isos = blocks[1..].to_vec();
            let fam = SymmetricFamily { host: host.relabeled(&perm), blocks, isos };
            let want = match &want {
                Dichotomy::Apexed { apexes } => {
                    let mut a: Vec<usize> = apexes.iter().map(|&v| perm[v]).collect();
                    a.sort_unstable();
                    Dichotomy::Apexed { apexes: a }
                }
                other => other.clone(),
            };
            let got = classify_dichotomy(&fam, l)?;
            c.push(
                got == want,
                format!("dichotomy {label}{}", if relabel { " relabelled" } else { "" }),
                format!("got={got:?}"),
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_regular(&mut rng, 10, 3).unwrap();
            assert!(g.degrees().iter().all(|&d| d == 3));
            let (h, cert) = random_shaped(&mut rng).unwrap();
            cert.check(&h).unwrap();
            let (f, fam) = random_symmetric_instance(&mut rng).unwrap();
            fam.validate().unwrap();
            assert!(contains_subgraph(&fam.host, &f).is_none());
        }
    }

    #[test]
    fn quick_suites_pass() {
        let opts = SuiteOptions { nmax: 6, seed: 1, cases: Some(10) };
        for name in SUITES {
            let rep = run_suite(name, &opts).unwrap();
            assert_eq!(rep.status(), Status::Pass, "{}", rep.to_text());
        }
        assert!(run_suite("nope", &opts).is_err());
    }
}

//! Named graphs and forbidden families, each built from a construction
//! expression so its layout is the documented one.
//!
//! Graph witnesses that embed a pattern into "one class" use part index 1,
//! the first Turán part after the leading clique or independent set.

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

use super::{complete_multipartite, expr::Expr};

/// A named object: a single graph or a labelled family of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    Graph(Expr),
    Family(Vec<(String, Expr)>),
}

impl Named {
    /// Evaluated members; a single graph is a one-member list.
    pub fn graphs(&self) -> Result<Vec<(String, Graph)>> {
        match self {
            Named::Graph(e) => Ok(vec![("G".to_string(), e.eval()?)]),
            Named::Family(ms) => ms.iter().map(|(l, e)| Ok((l.clone(), e.eval()?))).collect(),
        }
    }
}

/// Registry entry: name, parameter names, smallest legal parameters, description.
pub struct NamedSpec {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub smallest: &'static [usize],
    pub about: &'static str,
}

pub const REGISTRY: &[NamedSpec] = &[
    NamedSpec { name: "icosa", params: &[], smallest: &[], about: "family {P6*3K1*3K1, (K12+K2)*(K2+K1)*3K1, 2K3*3K1*3K1}" },
    NamedSpec { name: "icosahedron", params: &[], smallest: &[], about: "the icosahedron graph" },
    NamedSpec { name: "gen_icosa", params: &["l", "r", "m"], smallest: &[4, 2, 5], about: "three-member family generalising icosa; l even >= 4, 2 <= r <= l-2, m >= l+1" },
    NamedSpec { name: "bimatching", params: &["l", "r", "m"], smallest: &[3, 2, 6], about: "four-member family with a path-extremal part; l >= 3, r >= 2, m >= 2l" },
    NamedSpec { name: "clique", params: &["r"], smallest: &[1], about: "family {K_(r+1)}" },
    NamedSpec { name: "dstar_family", params: &[], smallest: &[], about: "family {3K2*E10, P5*E10}" },
    NamedSpec { name: "dstar", params: &["a", "b"], smallest: &[0, 0], about: "double star: adjacent centres 0 and 1 with a and b leaves" },
    NamedSpec { name: "cycle_blowup", params: &["k", "p"], smallest: &[3, 1], about: "C_k with every edge blown up to K_(p+1)" },
    NamedSpec { name: "fst", params: &["s", "t"], smallest: &[2, 4], about: "odd ballooning of K_(s,t) with all cycles of length 5; 2 <= s <= t, s+t >= 6" },
    NamedSpec { name: "gnak", params: &["n", "a", "k"], smallest: &[3, 1, 2], about: "K_(a-1)*T(n-a+1,2) plus K_(k-1,k-1) in one part" },
    NamedSpec { name: "gprime_na4", params: &["n", "a"], smallest: &[17, 1], about: "K_(a-1)*T(n-a+1,2) plus 3K3 in one part" },
    NamedSpec { name: "gst", params: &["n", "s", "t"], smallest: &[4, 2, 2], about: "K_(s-1)*T(n-s+1,2) plus K_(t-1,t-1) minus a (t-2)-matching in one class" },
    NamedSpec { name: "gprime33", params: &["n"], smallest: &[7], about: "K2*T(n-2,2) plus a triangle in one class" },
    NamedSpec { name: "gdprime33", params: &["n"], smallest: &[9], about: "E2*T(n-2,2) plus a C4 in one class" },
    NamedSpec { name: "gstar", params: &["n"], smallest: &[0], about: "T(n,2) plus a (near) perfect matching in each part" },
    NamedSpec { name: "gnr", params: &["n", "r"], smallest: &[0, 1], about: "T(n,r) plus a (near) perfect matching in each part" },
];

fn t(n: usize, r: usize) -> Expr {
    Expr::Turan(n, r)
}

fn k(n: usize) -> Expr {
    Expr::Complete(n)
}

fn e(n: usize) -> Expr {
    Expr::Empty(n)
}

fn family(members: Vec<Expr>) -> Named {
    Named::Family(members.into_iter().enumerate().map(|(i, m)| (format!("F{}", i + 1), m)).collect())
}

/// `F1 = P6*3K1*3K1`, `F2 = (K_{1,2} u K2)*(K2 u K1)*3K1`, `F3 = 2K3*3K1*3K1`.
pub fn icosahedron_family() -> Vec<Expr> {
    vec![
        Expr::join(vec![Expr::Path(6), e(3), e(3)]),
        Expr::join(vec![
            Expr::union(vec![Expr::Multipartite(vec![1, 2]), k(2)]),
            Expr::union(vec![k(2), k(1)]),
            e(3),
        ]),
        Expr::join(vec![Expr::repeat(2, k(3)), e(3), e(3)]),
    ]
}

pub fn icosahedron() -> Graph {
    // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let mut edges = Vec::new();
    for i in 0..5 {
        let (u, u_next) = (1 + i, 1 + (i + 1) % 5);
        let (l, l_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, u), (u, u_next), (l, l_next), (l, 11), (u, l), (u_next, l)]);
    }
    Graph::from_edges(12, &edges).expect("12 vertices")
}

/// The three-member family for even `l >= 4`, `2 <= r <= l-2`, `m >= l+1`.
pub fn general_icosahedron_family(l: usize, r: usize, m: usize) -> Result<Vec<Expr>> {
    if l < 4 || l % 2 == 1 || r < 2 || r > l - 2 || m < l + 1 {
        return Err(invalid(format!(
            "gen_icosa needs even l >= 4, 2 <= r <= l-2, m >= l+1; got l={l} r={r} m={m}"
        )));
    }
    Ok(vec![
        Expr::join(vec![Expr::union(vec![Expr::Path(l), e(m)]), t(m * (r - 1), r - 1)]),
        Expr::join(vec![
            Expr::union(vec![Expr::Multipartite(vec![1, 2]), Expr::repeat(m, k(2))]),
            Expr::repeat(m, k(2)),
            t(m * (r - 2), r - 2),
        ]),
        Expr::join(vec![Expr::union(vec![k(l / 2), k(l - 1), e(m)]), t(m * (r - 1), r - 1)]),
    ])
}

/// The four-member family for `l >= 3`, `r >= 2`, `m >= 2l`.
pub fn bi_matching_family(l: usize, r: usize, m: usize) -> Result<Vec<Expr>> {
    if l < 3 || r < 2 || m < 2 * l {
        return Err(invalid(format!(
            "bimatching needs l >= 3, r >= 2, m >= 2l; got l={l} r={r} m={m}"
        )));
    }
    Ok(vec![
        Expr::join(vec![Expr::union(vec![Expr::Path(l), e(m)]), t(m * (r - 1), r - 1)]),
        Expr::join(vec![Expr::repeat(m, k(2)), Expr::repeat(m, k(2)), t(m * (r - 2), r - 2)]),
        Expr::join(vec![
            Expr::union(vec![Expr::repeat(2, k(l - 1)), e(m)]),
            Expr::union(vec![k(2), e(m)]),
            t(m * (r - 2), r - 2),
        ]),
        Expr::join(vec![
            Expr::union(vec![k(l - 1), e(m)]),
            Expr::union(vec![k(l - 1), e(m)]),
            t(m * (r - 2), r - 2),
        ]),
    ])
}

/// Double star with centres 0 and 1; leaves of 0 come first.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_edges(2 + a + b, &edges)
}

/// `K_{a-1} * T(n-a+1, 2)` with the pattern in the first Turán part.
fn clique_join_embed(n: usize, a: usize, pattern: Expr, what: &str) -> Result<Expr> {
    if a == 0 || n + 1 < a {
        return Err(invalid(format!("{what} needs 1 <= a <= n+1")));
    }
    Ok(Expr::embed(Expr::join(vec![k(a - 1), t(n - a + 1, 2)]), 1, pattern))
}

/// `G_{n,a,k}`: `K_{a-1} * T(n-a+1,2)` plus `K_{k-1,k-1}` in one part.
pub fn g_nak(n: usize, a: usize, kk: usize) -> Result<Expr> {
    if kk < 2 {
        return Err(invalid("gnak needs k >= 2"));
    }
    clique_join_embed(n, a, Expr::Multipartite(vec![kk - 1, kk - 1]), "gnak")
}

/// `G'_{n,a,4}`: `K_{a-1} * T(n-a+1,2)` plus `3K3` in one part.
pub fn g_prime_na4(n: usize, a: usize) -> Result<Expr> {
    clique_join_embed(n, a, Expr::repeat(3, k(3)), "gprime_na4")
}

/// `K_{t-1,t-1}` minus the matching `{i, t-1+i}` for `i < t-2`.
pub fn gst_pattern(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(invalid("gst needs t >= 2"));
    }
    let mut h = complete_multipartite(&[t - 1, t - 1])?;
    for i in 0..t - 2 {
        h.remove_edge(i, t - 1 + i);
    }
    Ok(h)
}

/// `G_{s,t}` on `n` vertices.
pub fn g_st(n: usize, s: usize, tt: usize) -> Result<Expr> {
    if s < 2 || s > tt {
        return Err(invalid(format!("gst needs 2 <= s <= t; got s={s} t={tt}")));
    }
    clique_join_embed(n, s, Expr::Literal(gst_pattern(tt)?), "gst")
}

/// `G'_{3,3}`: `K2 * T(n-2,2)` plus a triangle in one class.
pub fn g_prime_33(n: usize) -> Result<Expr> {
    clique_join_embed(n, 3, k(3), "gprime33")
}

/// `G''_{3,3}`: `E2 * T(n-2,2)` plus a `C4` in one class.
pub fn g_dprime_33(n: usize) -> Result<Expr> {
    if n < 2 {
        return Err(invalid("gdprime33 needs n >= 2"));
    }
    Ok(Expr::embed(Expr::join(vec![e(2), t(n - 2, 2)]), 1, Expr::Cycle(4)))
}

/// Odd ballooning of `K_{s,t}` with every cycle of length 5.
pub fn f_st(s: usize, tt: usize) -> Result<Expr> {
    if s < 2 || s > tt || s + tt < 6 {
        return Err(invalid(format!("fst needs 2 <= s <= t and s+t >= 6; got s={s} t={tt}")));
    }
    Ok(Expr::OddBalloon(Box::new(Expr::Multipartite(vec![s, tt])), vec![5]))
}

/// Looks up a registry entry and builds it.
pub fn named(name: &str, params: &[usize]) -> Result<Named> {
    let spec = REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownPattern(format!("no named graph or family '{name}'")))?;
    if params.len() != spec.params.len() {
        return Err(invalid(format!(
            "{name} takes {} parameter(s) ({}), got {}",
            spec.params.len(),
            spec.params.join(","),
            params.len()
        )));
    }
    let p = params;
    Ok(match name {
        "icosa" => family(icosahedron_family()),
        "icosahedron" => Named::Graph(Expr::Literal(icosahedron())),
        "gen_icosa" => family(general_icosahedron_family(p[0], p[1], p[2])?),
        "bimatching" => family(bi_matching_family(p[0], p[1], p[2])?),
        "clique" => {
            if p[0] == 0 {
                return Err(invalid("clique family needs r >= 1"));
            }
            family(vec![k(p[0] + 1)])
        }
        "dstar_family" => family(vec![
            Expr::join(vec![Expr::repeat(3, k(2)), e(10)]),
            Expr::join(vec![Expr::Path(5), e(10)]),
        ]),
        "dstar" => Named::Graph(Expr::Literal(double_star(p[0], p[1])?)),
        "cycle_blowup" => Named::Graph(Expr::BlowUp(Box::new(Expr::Cycle(p[0])), p[1])),
        "fst" => Named::Graph(f_st(p[0], p[1])?),
        "gnak" => Named::Graph(g_nak(p[0], p[1], p[2])?),
        "gprime_na4" => Named::Graph(g_prime_na4(p[0], p[1])?),
        "gst" => Named::Graph(g_st(p[0], p[1], p[2])?),
        "gprime33" => Named::Graph(g_prime_33(p[0])?),
        "gdprime33" => Named::Graph(g_dprime_33(p[0])?),
        "gstar" => Named::Graph(Expr::matchings(t(p[0], 2))),
        "gnr" => {
            if p[1] == 0 {
                return Err(invalid("gnr needs r >= 1"));
            }
            Named::Graph(Expr::matchings(t(p[0], p[1])))
        }
        _ => unreachable!("registry and builder table disagree on {name}"),
    })
}

/// Parses `name` or `name(p1,...,pk)`.
pub fn parse_named(text: &str) -> Result<Named> {
    let text = text.trim();
    let (name, params) = match text.split_once('(') {
        None => (text, Vec::new()),
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| invalid(format!("missing ')' in '{text}'")))?;
            let params = inner
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| invalid(format!("bad parameter '{s}'"))))
                .collect::<Result<Vec<_>>>()?;
            (name.trim(), params)
        }
    };
    named(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::chromatic_number;

    #[test]
    fn icosahedron_is_five_regular() {
        let g = icosahedron();
        assert_eq!(g.edge_count(), 30);
        assert!((0..12).all(|v| g.degree(v) == 5));
        assert_eq!(chromatic_number(&g), 4);
    }

    #[test]
    fn icosahedron_family_orders_and_chi() {
        let fs: Vec<Graph> = icosahedron_family().iter().map(|e| e.eval().unwrap()).collect();
        assert_eq!(fs.iter().map(Graph::order).collect::<Vec<_>>(), vec![12, 11, 12]);
        let chis: Vec<usize> = fs.iter().map(chromatic_number).collect();
        assert_eq!(chis, vec![4, 5, 5]);
    }

    #[test]
    fn registry_smallest_parameters_build() {
        for spec in REGISTRY {
            let named = named(spec.name, spec.smallest)
                .unwrap_or_else(|e| panic!("{}: {e}", spec.name));
            named.graphs().unwrap_or_else(|e| panic!("{}: {e}", spec.name));
        }
    }

    #[test]
    fn gnak_example() {
        let g = g_nak(12, 2, 2).unwrap().eval().unwrap();
        // K_1 * T(11,2): 11 + 6*5 edges, plus one edge inside the first part
        assert_eq!(g.edge_count(), 11 + 30 + 1);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn gst_pattern_at_three_is_p4() {
        let h = gst_pattern(3).unwrap();
        assert!(crate::canon::is_isomorphic(&h, &super::super::path(4).unwrap()));
        assert_eq!(gst_pattern(4).unwrap().edge_count(), 7);
    }

    #[test]
    fn parse_named_forms() {
        assert!(matches!(parse_named("icosa").unwrap(), Named::Family(ref m) if m.len() == 3));
        assert!(matches!(parse_named("gst(20, 2, 4)").unwrap(), Named::Graph(_)));
        assert!(parse_named("gst(20,4,2)").is_err());
        assert!(matches!(parse_named("nope"), Err(Error::UnknownPattern(_))));
        assert!(parse_named("fst(3").is_err());
    }
}

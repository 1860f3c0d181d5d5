//! Pattern shorthand used on the command line and in the Python module.
//!
//! ```text
//! path:L        path on L vertices
//! cycle:L       cycle on L vertices
//! clique:K      complete graph on K vertices
//! g6:STRING     a graph6 string
//! expr:EXPR     a construction expression
//! family:NAME(P1,...,Pk)   every member of a named graph or family
//! ```

use crate::construct::{complete, cycle, named::parse_named, parse_expr, path};
use crate::error::{invalid, Error, Result};
use crate::family::ForbiddenFamily;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

fn number(kind: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("{kind}: expected a vertex count, got '{s}'")))
}

/// Labelled graphs described by one pattern.
pub fn parse_pattern(text: &str) -> Result<Vec<(String, Graph)>> {
    let text = text.trim();
    let (kind, arg) = text
        .split_once(':')
        .ok_or_else(|| Error::UnknownPattern(format!("'{text}' has no 'kind:' prefix")))?;
    let one = |g: Graph| Ok(vec![(text.to_string(), g)]);
    match kind {
        "path" => one(path(number(kind, arg)?)?),
        "cycle" => one(cycle(number(kind, arg)?)?),
        "clique" => one(complete(number(kind, arg)?)?),
        "g6" => one(parse_graph6(arg.trim())?),
        "expr" => one(parse_expr(arg)?.eval()?),
        "family" => Ok(parse_named(arg)?
            .graphs()?
            .into_iter()
            .map(|(label, g)| (format!("{}/{label}", arg.trim()), g))
            .collect()),
        _ => Err(Error::UnknownPattern(format!(
            "unknown pattern kind '{kind}' (expected path, cycle, clique, g6, expr or family)"
        ))),
    }
}

/// A graph from a pattern that must describe exactly one graph.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut gs = parse_pattern(text)?;
    if gs.len() != 1 {
        return Err(invalid(format!("'{text}' describes {} graphs, expected one", gs.len())));
    }
    Ok(gs.remove(0).1)
}

/// The family formed by every graph of every pattern, in order.
pub fn parse_family<S: AsRef<str>>(patterns: &[S]) -> Result<ForbiddenFamily> {
    let mut members = Vec::new();
    for p in patterns {
        members.extend(parse_pattern(p.as_ref())?);
    }
    ForbiddenFamily::with_labels(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!(parse_graph("path:4").unwrap().edge_count(), 3);
        assert_eq!(parse_graph("cycle:5").unwrap().edge_count(), 5);
        assert_eq!(parse_graph("clique:4").unwrap().edge_count(), 6);
        assert_eq!(parse_graph("g6:Bw").unwrap().edge_count(), 3);
        assert_eq!(parse_graph("expr:join(K(2),T(8,2))").unwrap().edge_count(), 33);
        let fam = parse_family(&["family:icosa"]).unwrap();
        assert_eq!((fam.len(), fam.r(), fam.t()), (3, 3, 12));
        assert_eq!(fam.labels()[0], "icosa/F1");
        assert!(parse_pattern("tree:4").is_err());
        assert!(parse_pattern("path4").is_err());
        assert!(parse_graph("family:icosa").is_err());
    }
}

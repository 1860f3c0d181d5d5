//! Construction expressions: a term language over primitives and operators.
//!
//! ```text
//! expr  := P(n) | C(n) | K(n) | K(n1,...,nr) | E(n) | Kbar(n) | T(n,r) | g6(<graph6>)
//!        | join(expr,...) | union(expr,...) | repeat(t,expr) | blowup(expr,p)
//!        | balloon(expr,len) | balloon(expr,[len,...]) | matchings(expr)
//!        | embed(expr,part,expr) | kplus(n1,...,nr) | gnr(n,r)
//! ```
//!
//! Every value carries a list of parts. Turán and complete multipartite
//! primitives contribute their parts, a join concatenates the parts of its
//! operands, and anything else is a single part. `matchings` and `embed`
//! address these parts.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::parse_graph6;

use super::{
    add_part_matchings, blow_up, complete_multipartite, cycle, embed_in_part, odd_balloon,
    part_masks, path, turan_part_sizes,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Multipartite(Vec<usize>),
    Turan(usize, usize),
    Literal(Graph),
    Join(Vec<Expr>),
    Union(Vec<Expr>),
    Repeat(usize, Box<Expr>),
    BlowUp(Box<Expr>, usize),
    /// One length for every edge, or one per edge in lexicographic order.
    OddBalloon(Box<Expr>, Vec<usize>),
    AddPartMatchings(Box<Expr>),
    EmbedInPart { host: Box<Expr>, part: usize, pattern: Box<Expr> },
}

/// An evaluated expression with its part layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub parts: Vec<u64>,
}

impl Built {
    fn whole(graph: Graph) -> Built {
        let parts = vec![graph.vertices()];
        Built { graph, parts }
    }
}

impl Expr {
    pub fn eval(&self) -> Result<Graph> {
        eval(self).map(|b| b.graph)
    }

    pub fn join(parts: Vec<Expr>) -> Expr {
        Expr::Join(parts)
    }

    pub fn union(parts: Vec<Expr>) -> Expr {
        Expr::Union(parts)
    }

    pub fn repeat(t: usize, e: Expr) -> Expr {
        Expr::Repeat(t, Box::new(e))
    }

    pub fn matchings(e: Expr) -> Expr {
        Expr::AddPartMatchings(Box::new(e))
    }

    pub fn embed(host: Expr, part: usize, pattern: Expr) -> Expr {
        Expr::EmbedInPart { host: Box::new(host), part, pattern: Box::new(pattern) }
    }
}

pub fn eval(e: &Expr) -> Result<Built> {
    Ok(match e {
        Expr::Path(n) => Built::whole(path(*n)?),
        Expr::Cycle(n) => Built::whole(cycle(*n)?),
        Expr::Complete(n) => Built::whole(Graph::complete(*n)?),
        Expr::Empty(n) => Built::whole(Graph::new(*n)?),
        Expr::Literal(g) => Built::whole(g.clone()),
        Expr::Multipartite(sizes) => multipartite(sizes)?,
        Expr::Turan(n, r) => multipartite(&turan_part_sizes(*n, *r))?,
        Expr::Join(items) => {
            let built = items.iter().map(eval).collect::<Result<Vec<_>>>()?;
            let graph = Graph::join(&built.iter().map(|b| &b.graph).collect::<Vec<_>>())?;
            let mut parts = Vec::new();
            let mut off = 0;
            for b in &built {
                parts.extend(b.parts.iter().map(|p| p << off));
                off += b.graph.order();
            }
            Built { graph, parts }
        }
        Expr::Union(items) => {
            let built = items.iter().map(eval).collect::<Result<Vec<_>>>()?;
            Built::whole(Graph::disjoint_union(&built.iter().map(|b| &b.graph).collect::<Vec<_>>())?)
        }
        Expr::Repeat(t, inner) => {
            let g = eval(inner)?.graph;
            let n = t.saturating_mul(g.order());
            if n > MAX_ORDER {
                return Err(Error::TooManyVertices(n));
            }
            Built::whole(Graph::disjoint_union(&vec![&g; *t])?)
        }
        Expr::BlowUp(inner, p) => Built::whole(blow_up(&eval(inner)?.graph, *p)?),
        Expr::OddBalloon(inner, lens) => Built::whole(odd_balloon(&eval(inner)?.graph, lens)?),
        Expr::AddPartMatchings(inner) => {
            let b = eval(inner)?;
            Built { graph: add_part_matchings(&b.graph, &b.parts), parts: b.parts }
        }
        Expr::EmbedInPart { host, part, pattern } => {
            let b = eval(host)?;
            let mask = *b.parts.get(*part).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "part index {part} out of range ({} parts)",
                    b.parts.len()
                ))
            })?;
            let p = eval(pattern)?.graph;
            Built { graph: embed_in_part(&b.graph, mask, &p)?, parts: b.parts }
        }
    })
}

fn multipartite(sizes: &[usize]) -> Result<Built> {
    let total = sizes.iter().fold(0usize, |a, &s| a.saturating_add(s));
    if total > MAX_ORDER {
        return Err(Error::TooManyVertices(total));
    }
    Ok(Built { graph: complete_multipartite(sizes)?, parts: part_masks(sizes, 0) })
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            Expr::Path(n) => write!(f, "P({n})"),
            Expr::Cycle(n) => write!(f, "C({n})"),
            Expr::Complete(n) => write!(f, "K({n})"),
            Expr::Empty(n) => write!(f, "E({n})"),
            // one part reads back as a clique, so print the edgeless equivalent
            Expr::Multipartite(s) if s.len() < 2 => write!(f, "E({})", s.iter().sum::<usize>()),
            Expr::Multipartite(s) => {
                f.write_str("K(")?;
                list(f, s)?;
                f.write_str(")")
            }
            Expr::Turan(n, r) => write!(f, "T({n},{r})"),
            Expr::Literal(g) => write!(f, "g6({})", g.to_graph6()),
            Expr::Join(xs) => {
                f.write_str("join(")?;
                list(f, xs)?;
                f.write_str(")")
            }
            Expr::Union(xs) => {
                f.write_str("union(")?;
                list(f, xs)?;
                f.write_str(")")
            }
            Expr::Repeat(t, e) => write!(f, "repeat({t},{e})"),
            Expr::BlowUp(e, p) => write!(f, "blowup({e},{p})"),
            Expr::OddBalloon(e, lens) => match lens.as_slice() {
                [l] => write!(f, "balloon({e},{l})"),
                _ => {
                    write!(f, "balloon({e},[")?;
                    list(f, lens)?;
                    f.write_str("])")
                }
            },
            Expr::AddPartMatchings(e) => write!(f, "matchings({e})"),
            Expr::EmbedInPart { host, part, pattern } => {
                write!(f, "embed({host},{part},{pattern})")
            }
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        parse_expr(s)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

enum Arg {
    Int(usize),
    List(Vec<usize>),
    Expr(Expr),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Expr { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
        }
        if start == self.pos || self.s[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.error("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Expr { pos: start, msg: "integer out of range".into() })
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(c) if c.is_ascii_digit() => Ok(Arg::Int(self.int()?)),
            Some(b'[') => {
                self.pos += 1;
                let mut xs = vec![self.int()?];
                while self.eat(b',') {
                    xs.push(self.int()?);
                }
                self.expect(b']')?;
                Ok(Arg::List(xs))
            }
            _ => Ok(Arg::Expr(self.expr()?)),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let start = self.pos;
        let name = self.ident()?;
        self.expect(b'(')?;
        if name == "g6" {
            self.skip_ws();
            let from = self.pos;
            while self.s.get(self.pos).is_some_and(|&c| c != b')') {
                self.pos += 1;
            }
            let body = std::str::from_utf8(&self.s[from..self.pos]).unwrap_or("").trim();
            let g = parse_graph6(body).map_err(|e| Error::Expr { pos: from, msg: e.to_string() })?;
            self.expect(b')')?;
            return Ok(Expr::Literal(g));
        }
        let mut args = vec![self.arg()?];
        while self.eat(b',') {
            args.push(self.arg()?);
        }
        self.expect(b')')?;
        build(&name, args).map_err(|msg| Error::Expr { pos: start, msg })
    }
}

fn build(name: &str, args: Vec<Arg>) -> std::result::Result<Expr, String> {
    let ints = |args: &[Arg]| -> std::result::Result<Vec<usize>, String> {
        args.iter()
            .map(|a| match a {
                Arg::Int(i) => Ok(*i),
                _ => Err(format!("{name} takes integer arguments")),
            })
            .collect()
    };
    let arity = |k: usize| -> std::result::Result<(), String> {
        if args.len() == k {
            Ok(())
        } else {
            Err(format!("{name} takes {k} argument(s), got {}", args.len()))
        }
    };
    let one_int = || -> std::result::Result<usize, String> {
        arity(1)?;
        Ok(ints(&args)?[0])
    };
    Ok(match name {
        "P" => Expr::Path(one_int()?),
        "C" => Expr::Cycle(one_int()?),
        "E" | "Kbar" => Expr::Empty(one_int()?),
        "K" if args.len() == 1 => Expr::Complete(one_int()?),
        "K" => Expr::Multipartite(ints(&args)?),
        "T" => {
            arity(2)?;
            let v = ints(&args)?;
            Expr::Turan(v[0], v[1])
        }
        "kplus" => {
            let sizes = ints(&args)?;
            let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            if hi - lo > 2 {
                return Err("kplus part sizes may differ by at most 2".into());
            }
            Expr::matchings(Expr::Multipartite(sizes))
        }
        "gnr" => {
            arity(2)?;
            let v = ints(&args)?;
            if v[1] == 0 {
                return Err("gnr needs r >= 1".into());
            }
            Expr::matchings(Expr::Turan(v[0], v[1]))
        }
        "join" | "union" => {
            let xs = args
                .into_iter()
                .map(|a| match a {
                    Arg::Expr(e) => Ok(e),
                    _ => Err(format!("{name} takes expression arguments")),
                })
                .collect::<std::result::Result<Vec<_>, String>>()?;
            if name == "join" {
                Expr::Join(xs)
            } else {
                Expr::Union(xs)
            }
        }
        "repeat" => match <[Arg; 2]>::try_from(args) {
            Ok([Arg::Int(t), Arg::Expr(e)]) => Expr::repeat(t, e),
            _ => return Err("repeat takes (count, expr)".into()),
        },
        "blowup" => match <[Arg; 2]>::try_from(args) {
            Ok([Arg::Expr(e), Arg::Int(p)]) => Expr::BlowUp(Box::new(e), p),
            _ => return Err("blowup takes (expr, p)".into()),
        },
        "balloon" => match <[Arg; 2]>::try_from(args) {
            Ok([Arg::Expr(e), Arg::Int(l)]) => Expr::OddBalloon(Box::new(e), vec![l]),
            Ok([Arg::Expr(e), Arg::List(ls)]) => Expr::OddBalloon(Box::new(e), ls),
            _ => return Err("balloon takes (expr, length) or (expr, [lengths])".into()),
        },
        "matchings" => match <[Arg; 1]>::try_from(args) {
            Ok([Arg::Expr(e)]) => Expr::matchings(e),
            _ => return Err("matchings takes one expression".into()),
        },
        "embed" => match <[Arg; 3]>::try_from(args) {
            Ok([Arg::Expr(h), Arg::Int(i), Arg::Expr(p)]) => Expr::embed(h, i, p),
            _ => return Err("embed takes (host, part, pattern)".into()),
        },
        _ => return Err(format!("unknown constructor '{name}'")),
    })
}

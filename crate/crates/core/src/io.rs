//! Plain-text formats. Every format ignores blank lines and everything after
//! a `#`; line numbers in errors are 1-based and count those lines too.
//!
//! * edge list: `n m`, then `m` lines `u v`;
//! * vertex values (weights or a half): lines `index p/q`, each index once;
//! * distribution: `halves k`, then per half a line `half p/q` giving its
//!   probability followed by its vertex-value lines;
//! * homomorphism: `n_source n_target`, then lines `v image`.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homomorphism::Homomorphism;
use crate::rational::{fmt, parse, Rational};
use crate::weighted::{Half, HalfDistribution, WeightFunction};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty content lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn two<'a>(line: usize, toks: &[&'a str]) -> Result<(&'a str, &'a str)> {
    match toks {
        [a, b] => Ok((a, b)),
        _ => Err(perr(line, format!("expected 2 fields, found {}", toks.len()))),
    }
}

fn num(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| perr(line, format!("`{s}` is not a non-negative integer")))
}

fn ratio(line: usize, s: &str) -> Result<Rational> {
    parse(s).ok_or_else(|| perr(line, format!("`{s}` is not a rational")))
}

pub fn read_text(path: impl AsRef<Path>) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| perr(0, "empty edge list"))?;
    let (n, m) = two(l0, &head)?;
    let (n, m) = (num(l0, n)?, num(l0, m)?);
    let mut edges = Vec::with_capacity(m);
    for (l, toks) in lines {
        let (u, v) = two(l, &toks)?;
        let (u, v) = (num(l, u)?, num(l, v)?);
        if u >= n || v >= n {
            return Err(perr(l, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(perr(l0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges).map_err(|e| perr(l0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn collect_values<'a>(
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
    n: usize,
    first: usize,
) -> Result<Vec<Rational>> {
    let mut vals: Vec<Option<Rational>> = vec![None; n];
    for (l, toks) in lines {
        let (i, x) = two(l, &toks)?;
        let i = num(l, i)?;
        if i >= n {
            return Err(perr(l, format!("index {i} out of range 0..{n}")));
        }
        if vals[i].is_some() {
            return Err(perr(l, format!("index {i} given twice")));
        }
        vals[i] = Some(ratio(l, x)?);
    }
    vals.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| perr(first, format!("no value for vertex {i}"))))
        .collect()
}

/// One value per vertex `0..n`.
pub fn parse_vertex_values(text: &str, n: usize) -> Result<Vec<Rational>> {
    collect_values(content_lines(text), n, 1)
}

pub fn write_vertex_values(values: &[Rational]) -> String {
    values.iter().enumerate().fold(String::new(), |mut out, (i, x)| {
        let _ = writeln!(out, "{i} {}", fmt(x));
        out
    })
}

pub fn parse_weights(text: &str, g: Arc<Graph>) -> Result<WeightFunction> {
    let w = parse_vertex_values(text, g.n())?;
    WeightFunction::new(g, w)
}

pub fn parse_half(text: &str, wf: Arc<WeightFunction>) -> Result<Half> {
    let s = parse_vertex_values(text, wf.graph().n())?;
    Half::new(wf, s)
}

pub fn parse_distribution(text: &str, wf: Arc<WeightFunction>) -> Result<HalfDistribution> {
    let n = wf.graph().n();
    let lines: Vec<(usize, Vec<&str>)> = content_lines(text).collect();
    let Some((l0, head)) = lines.first() else { return Err(perr(0, "empty distribution")) };
    let (tag, k) = two(*l0, head)?;
    if tag != "halves" {
        return Err(perr(*l0, "expected `halves k`"));
    }
    let k = num(*l0, k)?;
    let starts: Vec<usize> = (1..lines.len()).filter(|&i| lines[i].1[0] == "half").collect();
    if starts.len() != k {
        return Err(perr(*l0, format!("header announces {k} halves, found {}", starts.len())));
    }
    if starts.first() != Some(&1) && !starts.is_empty() {
        return Err(perr(lines[1].0, "values before the first `half` line"));
    }
    let mut entries = Vec::with_capacity(k);
    for (j, &st) in starts.iter().enumerate() {
        let (l, toks) = &lines[st];
        let (_, p) = two(*l, toks)?;
        let p = ratio(*l, p)?;
        let end = starts.get(j + 1).copied().unwrap_or(lines.len());
        let body = lines[st + 1..end].iter().map(|(l, t)| (*l, t.clone()));
        let s = collect_values(body, n, *l)?;
        entries.push((Half::new(wf.clone(), s)?, p));
    }
    HalfDistribution::new(entries)
}

pub fn write_distribution(dist: &HalfDistribution) -> String {
    let mut out = format!("halves {}\n", dist.len());
    for (h, p) in dist.entries() {
        let _ = writeln!(out, "half {}", fmt(p));
        out.push_str(&write_vertex_values(h.values()));
    }
    out
}

pub fn parse_homomorphism(text: &str, source: Arc<Graph>, target: Arc<Graph>) -> Result<Homomorphism> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| perr(0, "empty homomorphism file"))?;
    let (ns, nt) = two(l0, &head)?;
    let (ns, nt) = (num(l0, ns)?, num(l0, nt)?);
    if ns != source.n() || nt != target.n() {
        return Err(perr(l0, format!("sizes {ns} {nt} do not match graphs {} {}", source.n(), target.n())));
    }
    let mut map: Vec<Option<usize>> = vec![None; ns];
    for (l, toks) in lines {
        let (v, img) = two(l, &toks)?;
        let (v, img) = (num(l, v)?, num(l, img)?);
        if v >= ns || img >= nt {
            return Err(perr(l, "vertex out of range"));
        }
        if map[v].replace(img).is_some() {
            return Err(perr(l, format!("vertex {v} mapped twice")));
        }
    }
    let map = map
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| perr(l0, format!("no image for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(source, target, map)
}

pub fn write_homomorphism(phi: &Homomorphism) -> String {
    let mut out = format!("{} {}\n", phi.source().n(), phi.target().n());
    for (v, i) in phi.map().iter().enumerate() {
        let _ = writeln!(out, "{v} {i}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::{make_fd, make_petersen};
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# C5\n5 5\n0 1\n1 2 # rim\n2 3\n\n3 4\n4 0\n").unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(0, 4));
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn distribution_round_trip() {
        let wf = Arc::new(WeightFunction::uniform(make_fd(2).unwrap()).unwrap());
        let text = "halves 2\nhalf 1/2\n0 1/5\n1 1/5\n2 1/10\n3 0\n4 0\nhalf 1/2\n0 0\n1 0\n2 1/5\n3 1/5\n4 1/10\n";
        let d = parse_distribution(text, wf.clone()).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(write_distribution(&d), text);
        assert!(parse_distribution("halves 3\nhalf 1\n0 1/5\n1 1/5\n2 1/10\n3 0\n4 0\n", wf).is_err());
    }

    #[test]
    fn homomorphism_round_trip() {
        let c5 = Arc::new(make_fd(2).unwrap());
        let (g, part) = crate::graph::blowup(&c5, &[2, 1, 1, 1, 1]).unwrap();
        let phi = Homomorphism::new(g, c5.clone(), part.assignment().to_vec()).unwrap();
        let text = write_homomorphism(&phi);
        let back = parse_homomorphism(&text, phi.source_arc().clone(), c5).unwrap();
        assert_eq!(back.map(), phi.map());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                let mut e: Vec<(usize, usize)> =
                    pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
                e.sort_unstable();
                e.dedup();
                Graph::new(n, e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trips(g in arb_graph()) {
            let back = parse_edge_list(&write_edge_list(&g)).unwrap();
            prop_assert_eq!(back.n(), g.n());
            prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }

        #[test]
        fn weights_round_trip(raw in proptest::collection::vec(1i64..50, 10)) {
            let total: i64 = raw.iter().sum();
            let w: Vec<Rational> = raw.iter().map(|&x| rat(x, total)).collect();
            let g = Arc::new(make_petersen());
            let wf = parse_weights(&write_vertex_values(&w), g).unwrap();
            prop_assert_eq!(wf.weights(), &w[..]);
        }
    }
}

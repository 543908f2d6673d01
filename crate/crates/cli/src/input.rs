//! Reading graphs from graph6 streams and edge-list files.

use hamspec::{parse_graph6, Graph};

/// One input graph with where it came from.
#[derive(Debug)]
pub struct Record {
    /// 1-based line of the record's first line.
    pub line: usize,
    pub id: String,
    pub graph: Graph,
}

#[derive(Debug)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// Edge list when the first data line is two integers, graph6 otherwise.
    Auto,
    Graph6,
    Edges,
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines().find(|l| !is_skippable(l)).is_some_and(|l| {
        let parts: Vec<&str> = l.split_whitespace().collect();
        parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
    })
}

/// Parses every record in `text`, calling `sink` in input order. Stops after
/// the first failure when `strict` is set. Returns the number of failures.
pub fn read_records(
    text: &str,
    format: InputFormat,
    strict: bool,
    mut sink: impl FnMut(Result<Record, ParseFailure>),
) -> usize {
    let edges = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Graph6 => false,
        InputFormat::Edges => true,
    };
    if edges {
        read_edge_lists(text, strict, sink)
    } else {
        let mut failures = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            match parse_graph6(line.trim().as_bytes()) {
                Ok(graph) => sink(Ok(Record { line: i + 1, id: line.trim().to_string(), graph })),
                Err(e) => {
                    failures += 1;
                    sink(Err(ParseFailure { line: i + 1, message: e.to_string() }));
                    if strict {
                        break;
                    }
                }
            }
        }
        failures
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(format!("expected two integers, found {:?}", line.trim()));
    }
    let a = parts[0].parse().map_err(|_| format!("not a nonnegative integer: {:?}", parts[0]))?;
    let b = parts[1].parse().map_err(|_| format!("not a nonnegative integer: {:?}", parts[1]))?;
    Ok((a, b))
}

/// Edge lists: a header line `n m`, then `m` lines `u v` with 0-based
/// vertices. Several lists may follow one another.
fn read_edge_lists(text: &str, strict: bool, mut sink: impl FnMut(Result<Record, ParseFailure>)) -> usize {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !is_skippable(l)).peekable();
    let mut failures = 0;
    let mut fail = |line: usize, message: String, sink: &mut dyn FnMut(Result<Record, ParseFailure>)| {
        failures += 1;
        sink(Err(ParseFailure { line, message }));
    };
    while let Some((i, header)) = lines.next() {
        let start = i + 1;
        let (n, m) = match parse_pair(header) {
            Ok(nm) => nm,
            Err(e) => {
                fail(start, format!("edge-list header: {e}"), &mut sink);
                if strict {
                    break;
                }
                continue;
            }
        };
        let mut graph = match Graph::empty(n) {
            Ok(g) => Some(g),
            Err(e) => {
                fail(start, e.to_string(), &mut sink);
                None
            }
        };
        let mut error = graph.is_none();
        for k in 0..m {
            let Some((j, l)) = lines.next() else {
                fail(start, format!("expected {m} edges, found {k}"), &mut sink);
                error = true;
                break;
            };
            if error {
                continue;
            }
            let added = parse_pair(l).and_then(|(u, v)| {
                graph.as_mut().expect("graph present").add_edge(u, v).map_err(|e| e.to_string())
            });
            if let Err(e) = added {
                fail(j + 1, e, &mut sink);
                error = true;
            }
        }
        if error {
            if strict {
                break;
            }
            continue;
        }
        let graph = graph.expect("graph present");
        sink(Ok(Record { line: start, id: format!("edges@{start}"), graph }));
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(text: &str, format: InputFormat, strict: bool) -> (Vec<Record>, Vec<ParseFailure>) {
        let (mut ok, mut bad) = (Vec::new(), Vec::new());
        read_records(text, format, strict, |r| match r {
            Ok(r) => ok.push(r),
            Err(e) => bad.push(e),
        });
        (ok, bad)
    }

    #[test]
    fn detects_edge_lists() {
        let (ok, bad) = collect("3 2\n0 1\n1 2\n", InputFormat::Auto, false);
        assert!(bad.is_empty());
        assert_eq!(ok[0].graph.edge_count(), 2);
        let (ok, _) = collect("DQc\n", InputFormat::Auto, false);
        assert_eq!(ok[0].graph.n(), 5);
    }

    #[test]
    fn keeps_going_after_bad_records() {
        let (ok, bad) = collect("DQc\nnot graph6 !\nD~{\n", InputFormat::Graph6, false);
        assert_eq!(ok.len(), 2);
        assert_eq!(bad[0].line, 2);
        let (ok, bad) = collect("DQc\nnot graph6 !\nD~{\n", InputFormat::Graph6, true);
        assert_eq!((ok.len(), bad.len()), (1, 1));
    }

    #[test]
    fn edge_list_errors() {
        let (ok, bad) = collect("3 1\n0 3\n2 2\n1 0\n0 1\n", InputFormat::Edges, false);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].line, 2);
        assert_eq!(ok.len(), 1);
        let (_, bad) = collect("3 2\n0 1\n", InputFormat::Edges, false);
        assert!(bad[0].message.contains("expected 2 edges"));
    }
}

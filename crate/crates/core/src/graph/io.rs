use super::{Graph, GraphError};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`. `#` starts a comment; blank lines are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line `n m`"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(parse_err(line_no, format!("unexpected field `{extra}`")));
    }
    Ok((a, b))
}

fn g6_err(message: impl Into<String>) -> GraphError {
    GraphError::Graph6(message.into())
}

/// Decodes one graph6 record. Accepts the one-byte order prefix (n <= 62)
/// and the `~`-prefixed three-byte form; an optional `>>graph6<<` header
/// and trailing line terminator are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(g6_err("empty record")),
        [126, 126, ..] => return Err(g6_err("orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated length field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(g6_err("long length field used for an order below 63"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} adjacency bytes for n={n}, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err("nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}

/// Encodes a graph in graph6. Only the short and `~` forms are produced.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 long form supports n <= 258047");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

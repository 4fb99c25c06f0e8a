//! graph6, JSON and DOT serialization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("colour list has {got} entries for {expected} edges")]
    ColourCount { expected: usize, got: usize },
}

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| FormatError::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size"));
        }
        (
            (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]),
            &bytes[4..],
        )
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(rest[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// `{"n": .., "edges": [[u, v], ..]}` with `u < v` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Coloured graph: colours are parallel to the edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouredGraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub colours: Vec<u32>,
}

impl ColouredGraphJson {
    pub fn new(g: &Graph, colours: Vec<u32>) -> Self {
        let GraphJson { n, edges } = g.into();
        ColouredGraphJson { n, edges, colours }
    }

    /// Splits into the graph and colours re-ordered to the graph's edge order.
    pub fn into_parts(self) -> Result<(Graph, Vec<u32>), FormatError> {
        if self.colours.len() != self.edges.len() {
            return Err(FormatError::ColourCount {
                expected: self.edges.len(),
                got: self.colours.len(),
            });
        }
        let g = Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        let mut colours = vec![0; g.edge_count()];
        for (&[u, v], &c) in self.edges.iter().zip(&self.colours) {
            colours[g.edge_index(u, v).unwrap()] = c;
        }
        Ok((g, colours))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json serializes")
}

pub fn from_json(s: &str) -> Result<Graph, FormatError> {
    let j: GraphJson = serde_json::from_str(s)?;
    Ok(Graph::try_from(j)?)
}

/// Accepts either graph6 (optionally with header) or the JSON object form.
/// A JSON object carrying `colours` is accepted and the colours ignored.
pub fn parse_graph_text(s: &str) -> Result<Graph, FormatError> {
    let t = s.trim();
    if t.starts_with('{') {
        from_json(t)
    } else {
        let line = t.lines().next().unwrap_or("");
        from_graph6(line.trim())
    }
}

pub fn to_dot(g: &Graph, colours: Option<&[u32]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match colours {
            Some(c) => out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", c[i])),
            None => out.push_str(&format!("  {u} -- {v};\n")),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // A-C, A-E, B-D, D-E on five vertices
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_large_size_prefix() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63 + 0, 63 + 1, 63 + 6]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_wrong_length() {
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C ").is_err());
    }

    #[test]
    fn json_roundtrip_and_order() {
        let g = from_json(r#"{"n":4,"edges":[[2,3],[1,0]]}"#).unwrap();
        assert_eq!(to_json(&g), r#"{"n":4,"edges":[[0,1],[2,3]]}"#);
        assert!(from_json(r#"{"n":2,"edges":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn coloured_json_reorders_colours() {
        let j: ColouredGraphJson =
            serde_json::from_str(r#"{"n":3,"edges":[[1,2],[0,1]],"colours":[7,5]}"#).unwrap();
        let (g, c) = j.into_parts().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(c, vec![5, 7]);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let d = to_dot(&Graph::path(3), Some(&[1, 2]));
        assert!(d.contains("0 -- 1 [label=\"1\"]"));
        assert!(d.contains("1 -- 2 [label=\"2\"]"));
    }
}

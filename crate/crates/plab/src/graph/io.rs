//! Graph serialization: JSON objects and plain edge lists, both 0-indexed.

use serde::{Deserialize, Serialize};

use super::{Graph, OuterplanarEmbedding, VertexLabel};
use crate::error::{Error, Result};

/// JSON form: `{"n": int, "edges": [[u,v],...], "labels": optional list}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges(),
        labels: g.labels().map(|l| l.to_vec()),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph json: {e}")))?;
    let mut g = Graph::from_edges(doc.n, &doc.edges)?;
    if let Some(labels) = doc.labels {
        if labels.len() != doc.n {
            return Err(Error::Parse("label count != n".into()));
        }
        g.set_labels(labels);
    }
    g.check_invariants()?;
    Ok(g)
}

/// Plain edge list: one `u v` pair per line; `#` starts a comment. The
/// vertex count is one more than the largest id mentioned, or the value of a
/// leading `# n = X` comment when present.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n = {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    let mut max_seen = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let c = comment.trim();
            if let Some(rest) = c.strip_prefix("n =").or_else(|| c.strip_prefix("n=")) {
                declared_n = Some(rest.trim().parse::<usize>().map_err(|e| {
                    Error::Parse(format!("line {}: bad vertex count: {e}", lineno + 1))
                })?);
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected 'u v', got {line:?}",
                    lineno + 1
                )))
            }
        };
        let u: usize = u
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        let v: usize = v
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        max_seen = Some(max_seen.map_or(u.max(v), |m: usize| m.max(u.max(v))));
        edges.push((u, v));
    }
    let n = declared_n.unwrap_or(max_seen.map_or(0, |m| m + 1));
    Graph::from_edges(n, &edges)
}

/// Embeddings serialize as `{"outer_cycle": [...], "chords": [[u,v],...]}`.
pub fn embedding_to_json(emb: &OuterplanarEmbedding) -> String {
    serde_json::to_string_pretty(emb).expect("embedding serialization")
}

pub fn embedding_from_json(text: &str) -> Result<OuterplanarEmbedding> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("embedding json: {e}")))
}

#[cfg(test)]
mod tests {
    use super::super::{cycle, random_maximal_outerplanar};
    use super::*;

    #[test]
    fn json_roundtrip_preserves_graph_and_labels() {
        let p = super::super::cartesian_product(&[cycle(3).unwrap(), cycle(4).unwrap()]).unwrap();
        let g = p.graph().clone();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_roundtrip_and_comments() {
        let g = cycle(5).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(from_edge_list(&text).unwrap(), g);
        let with_isolated = "# n = 3\n0 1\n";
        assert_eq!(from_edge_list(with_isolated).unwrap().vertex_count(), 3);
    }

    #[test]
    fn malformed_lines_report_position() {
        let err = from_edge_list("0 1\n2\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn embedding_roundtrip() {
        let (_, emb) = random_maximal_outerplanar(8, 1).unwrap();
        let back = embedding_from_json(&embedding_to_json(&emb)).unwrap();
        assert_eq!(emb, back);
    }
}

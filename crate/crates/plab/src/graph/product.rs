//! Cartesian products of graphs.

use super::{Graph, VertexLabel};
use crate::error::{Error, Result};

/// A Cartesian product together with its factor structure.
///
/// Vertex indices are mixed-radix over the factor sizes with the first
/// factor most significant, so `index = (..(c0 * n1 + c1) * n2 + c2)..`.
/// Two vertices are adjacent iff they agree in all but one coordinate and
/// differ by an edge of that factor.
#[derive(Debug, Clone)]
pub struct ProductStructure {
    factors: Vec<Graph>,
    graph: Graph,
}

/// Builds the Cartesian product of `factors` (at least one, each nonempty).
/// The result carries `ProductCoordinate` labels.
pub fn cartesian_product(factors: &[Graph]) -> Result<ProductStructure> {
    if factors.is_empty() {
        return Err(Error::parameter("cartesian product needs at least one factor"));
    }
    for (i, f) in factors.iter().enumerate() {
        if f.vertex_count() == 0 {
            return Err(Error::parameter(format!("product factor {i} is empty")));
        }
    }
    let sizes: Vec<usize> = factors.iter().map(Graph::vertex_count).collect();
    let total: usize = sizes.iter().product();

    let coords_of = |mut v: usize| -> Vec<usize> {
        let mut c = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            c[i] = v % sizes[i];
            v /= sizes[i];
        }
        c
    };

    let mut edges = Vec::new();
    for v in 0..total {
        let coords = coords_of(v);
        // stride of coordinate i
        let mut stride = 1;
        for i in (0..sizes.len()).rev() {
            for &w in factors[i].neighbors(coords[i]) {
                if w > coords[i] {
                    edges.push((v, v + (w - coords[i]) * stride));
                }
            }
            stride *= sizes[i];
        }
    }
    let mut graph = Graph::from_edges(total, &edges)?;
    graph.set_labels(
        (0..total)
            .map(|v| VertexLabel::ProductCoordinate(coords_of(v)))
            .collect(),
    );
    Ok(ProductStructure {
        factors: factors.to_vec(),
        graph,
    })
}

impl ProductStructure {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn coords(&self, v: usize) -> Vec<usize> {
        let mut c = vec![0; self.factors.len()];
        let mut rest = v;
        for i in (0..self.factors.len()).rev() {
            let n = self.factors[i].vertex_count();
            c[i] = rest % n;
            rest /= n;
        }
        c
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        assert_eq!(coords.len(), self.factors.len());
        let mut v = 0;
        for (i, &c) in coords.iter().enumerate() {
            debug_assert!(c < self.factors[i].vertex_count());
            v = v * self.factors[i].vertex_count() + c;
        }
        v
    }

    /// Vertex obtained from `v` by replacing coordinate `i` with `c`.
    pub fn with_coord(&self, v: usize, i: usize, c: usize) -> usize {
        let mut coords = self.coords(v);
        coords[i] = c;
        self.index(&coords)
    }

    /// Distance between `u` and `v` within factor `i` only.
    pub fn factor_distance(&self, i: usize, u: usize, v: usize) -> usize {
        let cu = self.coords(u)[i];
        let cv = self.coords(v)[i];
        self.factors[i].distance(cu, cv).expect("factors are connected")
    }
}

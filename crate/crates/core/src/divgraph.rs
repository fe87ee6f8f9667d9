//! Divisibility graphs on sets of positive integers.
//!
//! `D(X)` has vertex set `X \ {1}` and joins `a < b` whenever `a | b`. Only
//! the underlying undirected graph is kept.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown graph format `{0}` (expected dot or json)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DivisibilityGraph {
    vertices: Vec<u128>,
    /// Pairs `(a, b)` with `a < b` and `a | b`, lexicographically sorted.
    edges: Vec<(u128, u128)>,
}

/// Builds `D(X)` from a multiset of sizes; ones and duplicates are dropped.
pub fn build_divgraph<I: IntoIterator<Item = u128>>(sizes: I) -> DivisibilityGraph {
    let mut vertices: Vec<u128> = sizes.into_iter().filter(|&s| s > 1).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if b % a == 0 {
                edges.push((a, b));
            }
        }
    }
    DivisibilityGraph { vertices, edges }
}

impl DivisibilityGraph {
    pub fn vertices(&self) -> &[u128] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u128, u128)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn position(&self, v: u128) -> usize {
        self.vertices
            .binary_search(&v)
            .expect("edge endpoints are vertices")
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            vertices: &'a [u128],
            edges: Vec<[u128; 2]>,
        }
        let repr = Repr {
            vertices: &self.vertices,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&repr).expect("graphs serialize")
    }

    /// Parses the JSON form, re-deriving the edges from the vertex set.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<u128>,
            #[allow(dead_code)]
            edges: Vec<[u128; 2]>,
        }
        let repr: Repr = serde_json::from_str(text)?;
        Ok(build_divgraph(repr.vertices))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph D {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// Connected components, each sorted, ordered by least vertex.
pub fn components(g: &DivisibilityGraph) -> Vec<Vec<u128>> {
    let mut sets = DisjointSets::new(g.vertices.len());
    for &(a, b) in &g.edges {
        sets.union(g.position(a), g.position(b));
    }
    let mut by_root: BTreeMap<usize, Vec<u128>> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, &v) in g.vertices.iter().enumerate() {
        let root = sets.find(i);
        let comp = by_root.entry(root).or_default();
        if comp.is_empty() {
            order.push(root);
        }
        comp.push(v);
    }
    // vertices are visited ascending, so first-seen order is least-vertex order
    order
        .into_iter()
        .map(|root| by_root.remove(&root).expect("seen root"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    K1,
    K2,
    Other { order: usize, edges: usize },
}

impl Component {
    pub fn order(self) -> usize {
        match self {
            Component::K1 => 1,
            Component::K2 => 2,
            Component::Other { order, .. } => order,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            Component::K1 => 0,
            Component::K2 => 1,
            Component::Other { edges, .. } => edges,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Component::K1 => f.write_str("K1"),
            Component::K2 => f.write_str("K2"),
            Component::Other { order, edges } if edges == order * (order - 1) / 2 => {
                write!(f, "K{order}")
            }
            // not complete: order and edge count
            Component::Other { order, edges } => write!(f, "G({order},{edges})"),
        }
    }
}

/// Multiset of component descriptors, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentShape {
    components: Vec<Component>,
}

impl ComponentShape {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.order()).sum()
    }
}

impl fmt::Display for ComponentShape {
    /// `nKm` coefficient notation, e.g. `K2+3K1`; the empty graph renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut iter = self.components.iter().peekable();
        while let Some(c) = iter.next() {
            let mut count = 1;
            while iter.peek() == Some(&c) {
                iter.next();
                count += 1;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if count > 1 {
                write!(f, "{count}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn classify_shape(g: &DivisibilityGraph) -> ComponentShape {
    let comps = components(g);
    let mut edge_counts = vec![0usize; comps.len()];
    for &(a, _) in &g.edges {
        let idx = comps
            .iter()
            .position(|c| c.binary_search(&a).is_ok())
            .expect("edge inside a component");
        edge_counts[idx] += 1;
    }
    let mut components: Vec<Component> = comps
        .iter()
        .zip(edge_counts)
        .map(|(c, edges)| match (c.len(), edges) {
            (1, _) => Component::K1,
            (2, 1) => Component::K2,
            (order, edges) => Component::Other { order, edges },
        })
        .collect();
    components.sort_by(|a, b| {
        b.order()
            .cmp(&a.order())
            .then(b.edge_count().cmp(&a.edge_count()))
    });
    ComponentShape { components }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(GraphError::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_graph(g: &DivisibilityGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => g.to_dot(),
        ExportFormat::Json => g.to_json(),
    }
}

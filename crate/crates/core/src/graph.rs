//! Undirected simple graphs stored as dense binary adjacency matrices,
//! edge-list ingestion, and degree utilities.

use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use ndarray::Array2;

use crate::error::{Error, Result};

/// Undirected simple graph: symmetric 0/1 adjacency with zero diagonal.
///
/// Entries are stored as `f64` (exactly `0.0` or `1.0`) so the matrix can be
/// centered and rescaled without conversion.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adjacency: Array2<f64>,
    node_names: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an adjacency matrix, validating that it is square,
    /// symmetric, binary, and has a zero diagonal.
    pub fn from_adjacency(adjacency: Array2<f64>) -> Result<Self> {
        validate_adjacency(&adjacency)?;
        Ok(Self {
            adjacency,
            node_names: None,
        })
    }

    /// Builds a graph on `n` nodes from undirected edges given as index pairs.
    /// Duplicate edges collapse; self-loops are rejected via the diagonal check.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = Array2::zeros((n, n));
        for &(i, j) in edges {
            adjacency[[i, j]] = 1.0;
            adjacency[[j, i]] = 1.0;
        }
        Self::from_adjacency(adjacency)
    }

    /// Construction path for adjacency matrices that are valid by
    /// construction (sampling, induced subgraphs).
    pub(crate) fn from_adjacency_unchecked(
        adjacency: Array2<f64>,
        node_names: Option<Vec<String>>,
    ) -> Self {
        debug_assert!(validate_adjacency(&adjacency).is_ok());
        Self {
            adjacency,
            node_names,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.nrows()
    }

    pub fn adjacency(&self) -> &Array2<f64> {
        &self.adjacency
    }

    /// Original node identifiers, when the graph came from an edge list.
    pub fn node_names(&self) -> Option<&[String]> {
        self.node_names.as_deref()
    }

    pub fn edge_count(&self) -> usize {
        let ones = self.adjacency.iter().filter(|&&x| x == 1.0).count();
        ones / 2
    }

    /// Degree of every node: row sums of the adjacency matrix.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency
            .rows()
            .into_iter()
            .map(|row| row.iter().filter(|&&x| x == 1.0).count())
            .collect()
    }
}

fn validate_adjacency(a: &Array2<f64>) -> Result<()> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    for i in 0..rows {
        if a[[i, i]] != 0.0 {
            return Err(Error::NonzeroDiagonal {
                i,
                value: a[[i, i]],
            });
        }
        for j in (i + 1)..rows {
            let x = a[[i, j]];
            if x != 0.0 && x != 1.0 {
                return Err(Error::NotBinary { i, j, value: x });
            }
            if x != a[[j, i]] {
                return Err(Error::NotSymmetric {
                    i,
                    j,
                    a: x,
                    b: a[[j, i]],
                });
            }
        }
    }
    Ok(())
}

/// Node degrees together with their frequency table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    pub degrees: Vec<usize>,
    pub counts: BTreeMap<usize, usize>,
}

impl DegreeHistogram {
    /// CSV with header `degree,count`, rows sorted by degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (degree, count) in &self.counts {
            out.push_str(&format!("{degree},{count}\n"));
        }
        out
    }
}

/// Reads a whitespace-separated edge list into a graph.
///
/// Node tokens are arbitrary strings and get dense indices in first-appearance
/// order. Lines starting with `#` and blank lines are skipped; duplicate edges
/// collapse to one; self-loop lines are dropped.
pub fn read_edge_list<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;

    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (line_no, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedEdgeLine {
                path: path.to_path_buf(),
                line: line_no + 1,
                content: trimmed.to_string(),
            });
        }
        let mut id = |token: &str| -> usize {
            if let Some(&i) = index.get(token) {
                i
            } else {
                let i = names.len();
                index.insert(token.to_string(), i);
                names.push(token.to_string());
                i
            }
        };
        let u = id(tokens[0]);
        let v = id(tokens[1]);
        if u != v {
            edges.push((u, v));
        }
    }

    if edges.is_empty() {
        return Err(Error::NoEdges {
            path: path.to_path_buf(),
        });
    }

    let n = names.len();
    let mut adjacency = Array2::zeros((n, n));
    for (u, v) in edges {
        adjacency[[u, v]] = 1.0;
        adjacency[[v, u]] = 1.0;
    }
    Ok(Graph::from_adjacency_unchecked(adjacency, Some(names)))
}

/// Writes one edge per line (`i < j`), using node names when present.
/// Inverse of [`read_edge_list`] up to node ordering.
pub fn write_edge_list<P: AsRef<Path>>(g: &Graph, path: P) -> Result<()> {
    let path = path.as_ref();
    let mut file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = |i: usize| -> String {
        match g.node_names() {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    };
    let n = g.n();
    for i in 0..n {
        for j in (i + 1)..n {
            if g.adjacency()[[i, j]] == 1.0 {
                writeln!(file, "{} {}", name(i), name(j)).map_err(|source| Error::Io {
                    path: path.to_path_buf(),
                    source,
                })?;
            }
        }
    }
    Ok(())
}

/// Induced subgraph on the largest connected component.
///
/// Ties between equal-sized components go to the one containing the smallest
/// original node index. Idempotent on connected graphs.
pub fn largest_connected_component(g: &Graph) -> Graph {
    let n = g.n();
    let mut component = vec![usize::MAX; n];
    let mut n_components = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let c = n_components;
        n_components += 1;
        let mut stack = vec![start];
        component[start] = c;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if g.adjacency()[[u, v]] == 1.0 && component[v] == usize::MAX {
                    component[v] = c;
                    stack.push(v);
                }
            }
        }
    }

    let mut sizes = vec![0usize; n_components];
    for &c in &component {
        sizes[c] += 1;
    }
    // Components are discovered in order of their minimum node index, so the
    // first maximal one wins ties.
    let best = (0..n_components)
        .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
        .expect("graph has at least one component");

    let keep: Vec<usize> = (0..n).filter(|&i| component[i] == best).collect();
    let m = keep.len();
    let mut adjacency = Array2::zeros((m, m));
    for (ai, &i) in keep.iter().enumerate() {
        for (aj, &j) in keep.iter().enumerate() {
            adjacency[[ai, aj]] = g.adjacency()[[i, j]];
        }
    }
    let names = g
        .node_names()
        .map(|names| keep.iter().map(|&i| names[i].clone()).collect());
    Graph::from_adjacency_unchecked(adjacency, names)
}

/// Degrees plus their frequency table.
pub fn degree_histogram(g: &Graph) -> DegreeHistogram {
    let degrees = g.degrees();
    let mut counts = BTreeMap::new();
    for &d in &degrees {
        *counts.entry(d).or_insert(0) += 1;
    }
    DegreeHistogram { degrees, counts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_temp(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn read_simple_edge_list() {
        let f = write_temp("a b\nb c\n");
        let g = read_edge_list(f.path()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.node_names().unwrap(), ["a", "b", "c"]);
    }

    #[test]
    fn duplicates_collapse_and_self_loops_drop() {
        let f = write_temp("a b\nb a\na a\n");
        let g = read_edge_list(f.path()).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let f = write_temp("# header\n\na b\n  \n# trailing\nb c\n");
        let g = read_edge_list(f.path()).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let f = write_temp("a b\na b c\n");
        match read_edge_list(f.path()) {
            Err(Error::MalformedEdgeLine { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected MalformedEdgeLine, got {other:?}"),
        }
    }

    #[test]
    fn empty_file_is_no_edges() {
        let f = write_temp("");
        assert!(matches!(
            read_edge_list(f.path()),
            Err(Error::NoEdges { .. })
        ));
    }

    #[test]
    fn self_loops_only_is_no_edges() {
        let f = write_temp("a a\n");
        assert!(matches!(
            read_edge_list(f.path()),
            Err(Error::NoEdges { .. })
        ));
    }

    #[test]
    fn from_adjacency_rejects_asymmetry_and_diagonal() {
        let mut a = Array2::zeros((2, 2));
        a[[0, 1]] = 1.0;
        assert!(matches!(
            Graph::from_adjacency(a),
            Err(Error::NotSymmetric { .. })
        ));

        let mut b = Array2::zeros((2, 2));
        b[[0, 0]] = 1.0;
        assert!(matches!(
            Graph::from_adjacency(b),
            Err(Error::NonzeroDiagonal { .. })
        ));

        let mut c = Array2::zeros((2, 2));
        c[[0, 1]] = 0.5;
        c[[1, 0]] = 0.5;
        assert!(matches!(
            Graph::from_adjacency(c),
            Err(Error::NotBinary { .. })
        ));
    }

    #[test]
    fn lcc_connected_graph_unchanged() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let lcc = largest_connected_component(&g);
        assert_eq!(lcc, g.clone());
        // idempotent
        assert_eq!(largest_connected_component(&lcc), lcc);
    }

    #[test]
    fn lcc_picks_larger_component() {
        // component {0,1,2} (path) and component {3,4} (edge)
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let lcc = largest_connected_component(&g);
        assert_eq!(lcc.n(), 3);
        assert_eq!(lcc.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn lcc_tie_goes_to_smallest_index() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let names: Vec<String> = ["w", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let g = Graph::from_adjacency_unchecked(g.adjacency().clone(), Some(names));
        let lcc = largest_connected_component(&g);
        assert_eq!(lcc.n(), 2);
        assert_eq!(lcc.node_names().unwrap(), ["w", "x"]);
    }

    #[test]
    fn degree_histogram_triangle_and_star() {
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let h = degree_histogram(&triangle);
        assert_eq!(h.degrees, vec![2, 2, 2]);
        assert_eq!(h.counts, BTreeMap::from([(2, 3)]));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = degree_histogram(&star);
        assert_eq!(h.degrees, vec![3, 1, 1, 1]);
        assert_eq!(h.counts, BTreeMap::from([(1, 3), (3, 1)]));
        assert_eq!(h.to_csv(), "degree,count\n1,3\n3,1\n");
    }

    #[test]
    fn histogram_counts_sum_to_n_and_degrees_to_twice_edges() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        let h = degree_histogram(&g);
        assert_eq!(h.counts.values().sum::<usize>(), g.n());
        assert_eq!(h.degrees.iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn edge_list_round_trip_preserves_named_adjacency() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (1, 4), (2, 3), (0, 3)]).unwrap();
        let names: Vec<String> = ["n0", "n1", "n2", "n3", "n4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let g = Graph::from_adjacency_unchecked(g.adjacency().clone(), Some(names));

        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_list(&g, f.path()).unwrap();
        let back = read_edge_list(f.path()).unwrap();

        assert_eq!(back.n(), g.n());
        // align by names: node order may differ after the round trip
        let pos: HashMap<&str, usize> = back
            .node_names()
            .unwrap()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let orig_names = g.node_names().unwrap();
        for i in 0..g.n() {
            for j in 0..g.n() {
                let bi = pos[orig_names[i].as_str()];
                let bj = pos[orig_names[j].as_str()];
                assert_eq!(g.adjacency()[[i, j]], back.adjacency()[[bi, bj]]);
            }
        }
    }
}

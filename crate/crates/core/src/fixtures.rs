//! Small reference networks embedded in the library.

use crate::graph::{load_edge_list, EdgeListOptions, Graph};
use crate::scalar::Scalar;

/// Zachary's karate club, 34 nodes and 78 undirected edges, 1-based.
pub const KARATE_EDGES: &str = "\
1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n1 18\n1 20\n1 22\n1 32
2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31
3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33
4 8\n4 13\n4 14
5 7\n5 11
6 7\n6 11\n6 17
7 17
9 31\n9 33\n9 34
10 34
14 34
15 33\n15 34
16 33\n16 34
19 33\n19 34
20 34
21 33\n21 34
23 33\n23 34
24 26\n24 28\n24 30\n24 33\n24 34
25 26\n25 28\n25 32
26 32
27 30\n27 34
28 34
29 32\n29 34
30 33\n30 34
31 33\n31 34
32 33\n32 34
33 34
";

/// The six-node digraph used to illustrate small-damping PageRank, 1-based.
pub const SIX_NODE_EDGES: &str = "\
1 2\n1 3
3 1\n3 2\n3 5
4 5\n4 6
5 4\n5 6
6 4
";

pub fn karate<T: Scalar>() -> Graph<T> {
    load_edge_list(KARATE_EDGES, EdgeListOptions::default()).expect("embedded karate fixture")
}

pub fn six_node<T: Scalar>() -> Graph<T> {
    let opts = EdgeListOptions {
        directed: true,
        ..Default::default()
    };
    load_edge_list(SIX_NODE_EDGES, opts).expect("embedded six-node fixture")
}

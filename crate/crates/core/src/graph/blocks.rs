use serde::{Deserialize, Serialize};

use super::DenseGraph;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted. An isolated vertex is a block
    /// on its own.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub isolated: Vec<usize>,
}

/// Biconnected components by the lowpoint method, with an explicit stack.
pub fn blocks(g: &DenseGraph) -> BlockDecomposition {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut out = BlockDecomposition::default();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = time;
            time += 1;
            out.isolated.push(root);
            out.blocks.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    out.cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    out.blocks.sort();
    out
}

/// Every block induces a complete graph.
pub fn is_block_graph(g: &DenseGraph) -> bool {
    blocks(g).blocks.iter().all(|b| g.is_clique(b))
}

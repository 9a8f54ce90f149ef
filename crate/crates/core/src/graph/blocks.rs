//! Biconnected-component (block) decomposition of a connected graph.

use super::{Graph, GraphError};

/// A maximal 2-connected subgraph or a bridge edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Vertices of the block, ascending.
    pub vertices: Vec<usize>,
    /// Edges of the block as sorted pairs.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
    cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        let mut parent_edge_skipped = false;
        for v in self.g.neighbors(u) {
            if Some(v) == parent && !parent_edge_skipped {
                parent_edge_skipped = true;
                continue;
            }
            if self.disc[v] == 0 {
                children += 1;
                self.edge_stack.push((u, v));
                self.dfs(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() {
                        self.cut[u] = true;
                    }
                    self.pop_block(u, v);
                }
            } else if self.disc[v] < self.disc[u] {
                // back edge
                self.edge_stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            self.cut[u] = true;
        }
    }

    fn pop_block(&mut self, u: usize, v: usize) {
        let mut edges = Vec::new();
        while let Some(e) = self.edge_stack.pop() {
            edges.push((e.0.min(e.1), e.0.max(e.1)));
            if e == (u, v) {
                break;
            }
        }
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        self.blocks.push(Block { vertices, edges });
    }
}

/// Standard biconnected-component decomposition; errors on disconnected input.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.n() == 0 {
        return Ok(BlockDecomposition {
            blocks: Vec::new(),
            cut_vertices: Vec::new(),
        });
    }
    let mut t = Tarjan {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; g.n()],
    };
    t.dfs(0, None);
    let cut_vertices = (0..g.n()).filter(|&v| t.cut[v]).collect();
    let mut blocks = t.blocks;
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

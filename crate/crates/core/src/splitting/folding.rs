//! Stallings folding of based graphs labelled by free generators.

use std::collections::BTreeMap;

use crate::words::{Family, Generator, Word};

/// A folded based graph. Vertex 0 is the base vertex.
#[derive(Debug, Clone)]
pub struct FoldedGraph {
    /// `edges[v][letter] = w`, including inverse letters; deterministic per
    /// vertex because no two edges with the same label leave a vertex.
    edges: Vec<BTreeMap<Generator, usize>>,
}

impl FoldedGraph {
    /// Fold the bouquet of loops spelling `words` at the base vertex.
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let mut f = Folder::default();
        f.new_vertex();
        for w in words {
            if w.is_empty() {
                continue;
            }
            let letters = w.letters();
            let mut at = 0;
            for (k, &g) in letters.iter().enumerate() {
                let next = if k + 1 == letters.len() { 0 } else { f.new_vertex() };
                f.add_edge(at, g, next);
                at = next;
            }
        }
        f.finish()
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|m| m.len()).sum::<usize>() / 2
    }

    /// Read `w` from the base vertex; `true` iff the path exists and closes up,
    /// i.e. `w` lies in the subgroup the graph represents.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut at = 0;
        for g in w.letters() {
            match self.edges[at].get(g) {
                Some(&next) => at = next,
                None => return false,
            }
        }
        at == 0
    }

    /// `true` iff the graph is the rose on `x1 … x_rank`, i.e. the subgroup is
    /// the whole free group of that rank.
    pub fn is_full_rose(&self, rank: u32) -> bool {
        self.vertex_count() == 1
            && (1..=rank).all(|i| self.edges[0].get(&Generator::x(i)) == Some(&0))
            && self.edges[0].len() == 2 * rank as usize
    }
}

#[derive(Default)]
struct Folder {
    edges: Vec<BTreeMap<Generator, usize>>,
    parent: Vec<usize>,
    pending: Vec<(usize, usize)>,
}

impl Folder {
    fn new_vertex(&mut self) -> usize {
        self.edges.push(BTreeMap::new());
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn add_edge(&mut self, from: usize, g: Generator, to: usize) {
        self.insert_half(from, g, to);
        self.insert_half(to, g.inverse(), from);
        self.drain();
    }

    fn insert_half(&mut self, from: usize, g: Generator, to: usize) {
        let from = self.find(from);
        let to = self.find(to);
        match self.edges[from].get(&g) {
            Some(&existing) => {
                let existing = self.find(existing);
                if existing != to {
                    self.pending.push((existing, to));
                }
            }
            None => {
                self.edges[from].insert(g, to);
            }
        }
    }

    /// Identify vertices queued by folds until the graph is deterministic.
    fn drain(&mut self) {
        while let Some((u, v)) = self.pending.pop() {
            let (u, v) = (self.find(u), self.find(v));
            if u == v {
                continue;
            }
            let (keep, gone) = if u < v { (u, v) } else { (v, u) };
            self.parent[gone] = keep;
            let moved = std::mem::take(&mut self.edges[gone]);
            for (g, t) in moved {
                self.insert_half(keep, g, t);
            }
        }
    }

    fn finish(mut self) -> FoldedGraph {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut next = 0;
        for (v, slot) in id.iter_mut().enumerate() {
            if self.find(v) == v {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = vec![BTreeMap::new(); next];
        for v in 0..n {
            if id[v] == usize::MAX {
                continue;
            }
            let targets: Vec<(Generator, usize)> = self.edges[v].iter().map(|(&g, &t)| (g, t)).collect();
            for (g, t) in targets {
                let t = self.find(t);
                edges[id[v]].insert(g, id[t]);
            }
        }
        FoldedGraph { edges }
    }
}

/// Whether the image words (over `x1 … x_rank`) generate the free group of
/// that rank.
pub fn generates_free_group(images: &[Word], rank: u32) -> bool {
    debug_assert!(images.iter().all(|w| w.letters().iter().all(|g| g.family() == Family::X)));
    FoldedGraph::from_words(images).is_full_rose(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    #[test]
    fn standard_images_generate() {
        assert!(generates_free_group(&[w("1"), w("x1")], 1));
        assert!(generates_free_group(&[w("1"), w("x1"), w("1"), w("x2")], 2));
    }

    #[test]
    fn folding_collapses_to_rose() {
        assert!(generates_free_group(&[w("x1 x2"), w("x2")], 2));
        assert!(generates_free_group(&[w("x1 x1 x1"), w("x1 x1")], 1));
        assert!(generates_free_group(&[w("x1 x2 X1"), w("x1"), w("x2 x2")], 2));
    }

    #[test]
    fn proper_subgroups_are_detected() {
        let g = FoldedGraph::from_words(&[w("x1 x1"), w("x1")]);
        assert!(g.is_full_rose(1));
        assert!(!g.is_full_rose(2));
        assert!(!generates_free_group(&[w("x1 x1"), w("1")], 1));
        let g = FoldedGraph::from_words(&[w("x1 x1"), w("1")]);
        assert_eq!(g.vertex_count(), 2);
        assert!(g.accepts(&w("x1 x1 x1 x1")));
        assert!(!g.accepts(&w("x1")));
        // <x1 x2 X1> with a tail at the base
        let g = FoldedGraph::from_words(&[w("x1 x2 X1")]);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.accepts(&w("x2")));
    }

    #[test]
    fn folding_merges_through_chains() {
        // <x1 x2 X1, x1> = <x1, x2>
        assert!(generates_free_group(&[w("x1 x2 X1"), w("x1")], 2));
        // <x1 x2, x2 x1> has index > 1
        assert!(!generates_free_group(&[w("x1 x2"), w("x2 x1")], 2));
        assert!(FoldedGraph::from_words(&[w("x1 x2"), w("x2 x1")]).accepts(&w("x1 x2 x2 x1")));
    }
}

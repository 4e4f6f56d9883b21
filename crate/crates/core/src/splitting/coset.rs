//! HLT coset enumeration over the trivial subgroup: relator tracing with
//! definitions, a deduction stack processed by scanning, and coincidence
//! processing.

use crate::words::{Family, Generator, Word};

const NONE: usize = usize::MAX;

/// A closed coset table, renumbered so coset numbers follow first appearance
/// in a breadth-first walk from coset 0 (columns `x1, X1, x2, X2, …`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    columns: usize,
    table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Coset reached from `coset` by reading `w` (over `x` generators).
    pub fn act(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &g| self.table[c][column(g)])
    }

    pub fn row(&self, coset: usize) -> &[usize] {
        &self.table[coset]
    }

    pub fn columns(&self) -> usize {
        self.columns
    }
}

fn column(g: Generator) -> usize {
    debug_assert_eq!(g.family(), Family::X);
    2 * (g.index() as usize - 1) + usize::from(g.is_inverse())
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

struct Enumerator {
    columns: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    limit: usize,
    relators: Vec<Vec<usize>>,
    deductions: Vec<(usize, usize)>,
}

const MAX_DEDUCTIONS: usize = 4096;

/// Enumerate cosets of the trivial subgroup in `⟨x1 … x_n | relators⟩`.
/// Returns `None` if more than `limit` cosets would have to be defined.
pub fn enumerate_cosets(generators: u32, relators: &[Word], limit: usize) -> Option<CosetTable> {
    let columns = 2 * generators as usize;
    let relators: Vec<Vec<usize>> = relators
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.letters().iter().map(|&g| column(g)).collect())
        .collect();
    let mut e =
        Enumerator { columns, table: Vec::new(), parent: Vec::new(), limit, relators, deductions: Vec::new() };
    e.define()?;
    let mut c = 0;
    while c < e.table.len() {
        if e.parent[c] == c {
            for k in 0..e.relators.len() {
                if e.parent[c] != c {
                    break;
                }
                let rel = e.relators[k].clone();
                e.scan_and_fill(c, &rel)?;
                e.process_deductions();
            }
            for x in 0..columns {
                if e.parent[c] != c {
                    break;
                }
                if e.table[c][x] == NONE {
                    let d = e.define()?;
                    e.table[c][x] = d;
                    e.table[d][inv(x)] = c;
                    e.push_deduction(c, x);
                    e.process_deductions();
                }
            }
        }
        c += 1;
    }
    Some(e.standardize())
}

impl Enumerator {
    fn define(&mut self) -> Option<usize> {
        if self.table.len() >= self.limit {
            return None;
        }
        self.table.push(vec![NONE; self.columns]);
        self.parent.push(self.parent.len());
        Some(self.table.len() - 1)
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn push_deduction(&mut self, c: usize, x: usize) {
        if self.deductions.len() < MAX_DEDUCTIONS {
            self.deductions.push((c, x));
        }
    }

    /// Scan every relator from each deduced coset and its neighbour without
    /// defining new cosets.
    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            let c = self.rep(c);
            let t = self.table[c][x];
            for k in 0..self.relators.len() {
                let rel = std::mem::take(&mut self.relators[k]);
                for start in [c, t] {
                    if start != NONE && self.parent[start] == start {
                        self.scan(start, &rel);
                    }
                }
                self.relators[k] = rel;
            }
        }
    }

    fn scan(&mut self, c: usize, w: &[usize]) {
        let n = w.len();
        let (mut f, mut i, mut b, mut j) = (c, 0, c, n);
        while i < j && self.table[f][w[i]] != NONE {
            f = self.table[f][w[i]];
            i += 1;
        }
        if i == j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j > i && self.table[b][inv(w[j - 1])] != NONE {
            b = self.table[b][inv(w[j - 1])];
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.table[f][w[i]] = b;
            self.table[b][inv(w[i])] = f;
            self.push_deduction(f, w[i]);
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Option<()> {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        let mut b = c;
        let mut j = n;
        loop {
            while i < j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j > i && self.table[b][inv(w[j - 1])] != NONE {
                b = self.table[b][inv(w[j - 1])];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Some(());
            }
            if j == i + 1 {
                // deduction closes the cycle
                self.table[f][w[i]] = b;
                self.table[b][inv(w[i])] = f;
                self.push_deduction(f, w[i]);
                return Some(());
            }
            let d = self.define()?;
            self.table[f][w[i]] = d;
            self.table[d][inv(w[i])] = f;
            self.push_deduction(f, w[i]);
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.parent[gone] = keep;
        queue.push(gone);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut k = 0;
        while k < queue.len() {
            let e = queue[k];
            k += 1;
            for x in 0..self.columns {
                let delta = self.table[e][x];
                if delta == NONE {
                    continue;
                }
                if self.table[delta][inv(x)] == e {
                    self.table[delta][inv(x)] = NONE;
                }
                let mu = self.rep(e);
                let nu = self.rep(delta);
                if self.table[mu][x] != NONE {
                    let t = self.table[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.table[nu][inv(x)] != NONE {
                    let t = self.table[nu][inv(x)];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][inv(x)] = mu;
                }
            }
        }
    }

    fn standardize(mut self) -> CosetTable {
        let n = self.table.len();
        // resolve stale references to merged cosets
        for c in 0..n {
            if self.parent[c] != c {
                continue;
            }
            for x in 0..self.columns {
                let t = self.table[c][x];
                self.table[c][x] = self.rep(t);
            }
        }
        let mut order = vec![NONE; n];
        let mut seq = vec![0usize];
        order[0] = 0;
        let mut k = 0;
        while k < seq.len() {
            let c = seq[k];
            k += 1;
            for x in 0..self.columns {
                let t = self.table[c][x];
                if order[t] == NONE {
                    order[t] = seq.len();
                    seq.push(t);
                }
            }
        }
        let table = seq.iter().map(|&c| self.table[c].iter().map(|&t| order[t]).collect()).collect();
        CosetTable { columns: self.columns, table }
    }
}

//! Coset enumeration over the trivial subgroup (HLT strategy with
//! coincidence processing), giving the regular representation of a finitely
//! presented group.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::word::{inverse_letter, Letter};

/// Default ceiling on the number of cosets ever defined.
pub const DEFAULT_COSET_LIMIT: usize = 100_000;

const NONE: usize = usize::MAX;

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    limit: usize,
}

impl Enumerator {
    fn new(generators: usize, limit: usize) -> Self {
        let cols = 2 * generators;
        Enumerator { cols, table: vec![vec![NONE; cols]], parent: vec![0], limit }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: Letter) -> Result<()> {
        if self.table.len() >= self.limit {
            return Err(Error::CosetLimit { limit: self.limit });
        }
        let d = self.table.len();
        self.table.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inverse_letter(x)] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                let xi = inverse_letter(x);
                if self.table[f][xi] == e {
                    self.table[f][xi] = NONE;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][xi] != NONE {
                    let t = self.table[f1][xi];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][xi] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[Letter]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][inverse_letter(w[j as usize])] != NONE {
                b = self.table[b][inverse_letter(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][w[i]] = b;
                self.table[b][inverse_letter(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// A complete coset table of the trivial subgroup: `table[c][x]` is the coset
/// `c · x`, cosets numbered in breadth-first order from the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub table: Vec<Vec<usize>>,
    /// A word (as letters) reaching each coset from coset 0.
    pub words: Vec<Vec<Letter>>,
}

/// Enumerates the cosets of the trivial subgroup in `⟨gens | relators⟩`.
pub fn enumerate_cosets(generators: usize, relators: &[Vec<Letter>], limit: usize) -> Result<CosetTable> {
    let mut e = Enumerator::new(generators, limit);
    let mut c = 0;
    while c < e.table.len() {
        if e.live(c) {
            for r in relators {
                e.scan_and_fill(c, r)?;
                if !e.live(c) {
                    break;
                }
            }
            if e.live(c) {
                for x in 0..e.cols {
                    if e.table[c][x] == NONE {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    // Renumber live cosets breadth-first from the identity coset.
    let mut index = vec![NONE; e.table.len()];
    let mut order = vec![0usize];
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    index[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for x in 0..e.cols {
            let b = e.rep(e.table[a][x]);
            if index[b] == NONE {
                index[b] = order.len();
                let mut w = words[index[a]].clone();
                w.push(x);
                words.push(w);
                order.push(b);
                queue.push_back(b);
            }
        }
    }
    let table: Vec<Vec<usize>> =
        order.iter().map(|&a| (0..e.cols).map(|x| index[e.rep(e.table[a][x])]).collect()).collect();
    Ok(CosetTable { table, words })
}

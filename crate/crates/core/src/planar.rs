//! Left-right planarity test (Brandes' formulation of the de
//! Fraysseix–Rosenstiehl criterion), test only, no embedding. Both DFS
//! phases are iterative so deep graphs do not exhaust the call stack.
//! Loops and parallel edges are ignored.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        core::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'a> {
    adj: Vec<Vec<(usize, usize)>>,
    /// Oriented edges `(tail, head)`, indexed by undirected edge id.
    edges: &'a [(usize, usize)],
    oriented: Vec<bool>,
    /// Orientation chosen for each edge: `(tail, head)`.
    dir: Vec<(usize, usize)>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    ordered_adjs: Vec<Vec<usize>>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState<'_> {
    fn head(&self, e: usize) -> usize {
        self.dir[e].1
    }

    fn tail(&self, e: usize) -> usize {
        self.dir[e].0
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn orient(&mut self, root: usize) {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.height.len()];
        let mut skip_init = vec![false; self.edges.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.adj[v].len() {
                let (w, id) = self.adj[v][ind[v]];
                if !skip_init[id] {
                    if self.oriented[id] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[id] = true;
                    self.dir[id] = (v, w);
                    self.lowpt[id] = self.height[v];
                    self.lowpt2[id] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = id;
                        self.height[w] = self.height[v] + 1;
                        stack.push(v);
                        stack.push(w);
                        skip_init[id] = true;
                        break;
                    }
                    self.lowpt[id] = self.height[w];
                }
                self.nesting_depth[id] = 2 * self.lowpt[id];
                if self.lowpt2[id] < self.height[v] {
                    self.nesting_depth[id] += 1;
                }
                if e != NONE {
                    if self.lowpt[id] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[id]);
                        self.lowpt[e] = self.lowpt[id];
                    } else if self.lowpt[id] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[id]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[id]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_len(&self) -> usize {
        self.stack.len()
    }

    fn test(&mut self, root: usize) -> bool {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.height.len()];
        let mut skip_init = vec![false; self.edges.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let mut skip_final = false;
            while ind[v] < self.ordered_adjs[v].len() {
                let ei = self.ordered_adjs[v][ind[v]];
                let w = self.head(ei);
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.top_len();
                    if ei == self.parent_edge[w] {
                        stack.push(v);
                        stack.push(w);
                        skip_init[ei] = true;
                        skip_final = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair { left: Interval::EMPTY, right: Interval { low: ei, high: ei } });
                }
                if self.lowpt[ei] < self.height[v] {
                    if ind[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !skip_final && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair { left: Interval::EMPTY, right: Interval::EMPTY };
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.reference[p.right.low] = q.right.high;
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail(e);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.head(p.left.high) == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.head(p.right.high) == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("a return edge of e is on the stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) { hl } else { hr };
        }
    }
}

/// Whether the underlying simple graph of `g` is planar. Linear time.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            if u < v {
                let id = edges.len();
                edges.push((u, v));
                adj[u].push((v, id));
                adj[v].push((u, id));
            }
        }
    }
    let m = edges.len();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut st = LrState {
        adj,
        edges: &edges,
        oriented: vec![false; m],
        dir: vec![(NONE, NONE); m],
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        ordered_adjs: vec![Vec::new(); n],
        lowpt_edge: vec![NONE; m],
        reference: vec![NONE; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    for id in 0..m {
        let (t, _) = st.dir[id];
        st.ordered_adjs[t].push(id);
    }
    for v in 0..n {
        let mut out = core::mem::take(&mut st.ordered_adjs[v]);
        out.sort_by_key(|&id| st.nesting_depth[id]);
        st.ordered_adjs[v] = out;
    }
    roots.into_iter().all(|r| st.test(r))
}

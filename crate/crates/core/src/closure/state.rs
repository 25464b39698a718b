use crate::bitset::BitRows;
use crate::closure::graph::ClosureGraph;
use crate::closure::ClosureError;
use crate::graph::{check_vertex_count, Arc, VertexId};

const NONE: u32 = u32::MAX;

/// Streaming state of the predecessor-propagation algorithm.
///
/// Holds, for every vertex `v`, the set `P(v)` of vertices known to reach
/// `v` by a strict journey over the steps consumed so far, and the pending
/// set `P+(v)` collected during the current step.
///
/// `P(v)` starts as `{v}` and is only materialized as a bitset row the first
/// time `v` is the head of an arc, so initialization is O(n) and every
/// step costs O(|E_i| · n / 64) word operations.
#[derive(Clone, Debug)]
pub struct PredecessorState {
    n: usize,
    steps_consumed: usize,
    mu_seen: usize,
    /// Row of `P(v)` in `preds`, or `NONE` for `{v}`.
    pred_row: Vec<u32>,
    preds: BitRows,
    /// Pending sets, reused across steps. All rows are empty between steps.
    pending: BitRows,
    pending_slot: Vec<u32>,
    touched: Vec<u32>,
    /// Number of vertices with `|P(v)| = n`.
    saturated: usize,
    max_pred_len: usize,
    completed_at: Option<usize>,
    finalized: bool,
}

impl PredecessorState {
    pub fn new(n: usize) -> Result<Self, ClosureError> {
        check_vertex_count(n).map_err(|_| ClosureError::NoVertices)?;
        let saturated = if n == 1 { 1 } else { 0 };
        Ok(PredecessorState {
            n,
            steps_consumed: 0,
            mu_seen: 0,
            pred_row: vec![NONE; n],
            preds: BitRows::new(n),
            pending: BitRows::new(n),
            pending_slot: vec![NONE; n],
            touched: Vec::new(),
            saturated,
            max_pred_len: 1,
            completed_at: (n == 1).then_some(0),
            finalized: false,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps_consumed(&self) -> usize {
        self.steps_consumed
    }

    /// Largest arc set consumed so far.
    pub fn mu_seen(&self) -> usize {
        self.mu_seen
    }

    /// True iff `|P(v)| = n` for every `v`.
    pub fn is_complete(&self) -> bool {
        self.saturated == self.n
    }

    /// Step (1-based) at which the state first became complete; `Some(0)`
    /// when it was complete at initialization.
    pub fn completed_at_step(&self) -> Option<usize> {
        self.completed_at
    }

    pub fn is_finalized(&self) -> bool {
        self.finalized
    }

    fn row(&self, v: usize) -> Option<usize> {
        match self.pred_row[v] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    /// `|P(v)|`, including `v` itself.
    pub fn predecessor_count(&self, v: VertexId) -> usize {
        self.row(v.index()).map_or(1, |r| self.preds.count(r))
    }

    /// Whether `u ∈ P(v)`.
    pub fn has_predecessor(&self, v: VertexId, u: VertexId) -> bool {
        match self.row(v.index()) {
            None => u == v,
            Some(r) => self.preds.contains(r, u.index()),
        }
    }

    /// `P(v)` in increasing order, including `v`.
    pub fn predecessors(&self, v: VertexId) -> Vec<VertexId> {
        match self.row(v.index()) {
            None => vec![v],
            Some(r) => self.preds.ones(r).map(|u| VertexId(u as u32)).collect(),
        }
    }

    /// `max_v |P(v) \ {v}|`.
    pub fn max_foreign_predecessors(&self) -> usize {
        self.max_pred_len - 1
    }

    /// `max_v |P(v) \ {v}| <= t · μ_t` after `t` consumed steps: each foreign
    /// predecessor is the tail of a distinct consumed arc.
    pub fn satisfies_predecessor_bound(&self) -> bool {
        self.max_foreign_predecessors() <= self.steps_consumed * self.mu_seen
    }

    /// True when no pending set holds anything, as required between steps.
    pub fn pending_is_empty(&self) -> bool {
        self.touched.is_empty() && (0..self.pending.rows()).all(|r| self.pending.count(r) == 0)
    }

    /// Consumes one step.
    ///
    /// Every arc `(u, v)` adds `P(u)` as it stood when the step began to
    /// `P+(v)`; the pending sets are merged only once all arcs have been
    /// seen, so two arcs of the same step never chain.
    pub fn process_step(&mut self, arcs: &[Arc]) -> Result<(), ClosureError> {
        if self.finalized {
            return Err(ClosureError::Finalized);
        }
        let n = self.n;
        if let Some(a) = arcs
            .iter()
            .find(|a| a.tail.index() >= n || a.head.index() >= n)
        {
            return Err(ClosureError::VertexOutOfRange {
                tail: a.tail,
                head: a.head,
                n,
            });
        }

        for a in arcs {
            let (u, v) = (a.tail.index(), a.head.index());
            let slot = match self.pending_slot[v] {
                NONE => {
                    let slot = self.touched.len();
                    if slot == self.pending.rows() {
                        self.pending.push_empty();
                    }
                    self.pending_slot[v] = slot as u32;
                    self.touched.push(v as u32);
                    slot
                }
                s => s as usize,
            };
            match self.pred_row[u] {
                NONE => self.pending.insert(slot, u),
                r => self.pending.union_from(slot, self.preds.row(r as usize)),
            }
        }

        for (slot, &v) in self.touched.iter().enumerate() {
            let v = v as usize;
            self.pending_slot[v] = NONE;
            let row = match self.pred_row[v] {
                NONE => {
                    let r = self.preds.push_empty();
                    self.preds.insert(r, v);
                    self.pred_row[v] = r as u32;
                    r
                }
                r => r as usize,
            };
            let before = self.preds.count(row);
            self.preds.drain_from(row, &mut self.pending, slot);
            let after = self.preds.count(row);
            if before < n && after == n {
                self.saturated += 1;
            }
            self.max_pred_len = self.max_pred_len.max(after);
        }
        self.touched.clear();

        self.steps_consumed += 1;
        self.mu_seen = self.mu_seen.max(arcs.len());
        if self.completed_at.is_none() && self.is_complete() {
            self.completed_at = Some(self.steps_consumed);
        }
        debug_assert!(self.satisfies_predecessor_bound());
        Ok(())
    }

    /// Closure of the steps consumed so far, without ending the stream.
    pub fn snapshot(&self) -> ClosureGraph {
        let n = self.n;
        if self.is_complete() {
            return ClosureGraph::complete(n);
        }
        // One pass over the bits collects the arcs head-major and counts
        // out-degrees; a counting sort then lays them out tail-major. Heads
        // ascend within each row because the pairs are in ascending `v`.
        let mut offsets = vec![0usize; n + 1];
        let mut pairs = Vec::with_capacity(self.foreign_pair_count());
        self.for_each_foreign_pred(|u, v| {
            offsets[u + 1] += 1;
            pairs.push((u as u32, v as u32));
        });
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut heads = vec![VertexId(0); pairs.len()];
        for &(u, v) in &pairs {
            let slot = &mut offsets[u as usize];
            heads[*slot] = VertexId(v);
            *slot += 1;
        }
        // Each `offsets[u]` now holds the end of row `u`; shift back.
        offsets.copy_within(0..n, 1);
        offsets[0] = 0;
        ClosureGraph::from_rows(n, offsets, heads)
    }

    fn foreign_pair_count(&self) -> usize {
        self.pred_row
            .iter()
            .filter(|&&r| r != NONE)
            .map(|&r| self.preds.count(r as usize) - 1)
            .sum()
    }

    /// Calls `f(u, v)` for every `u ∈ P(v) \ {v}`, with `v` ascending.
    fn for_each_foreign_pred(&self, mut f: impl FnMut(usize, usize)) {
        for (v, &r) in self.pred_row.iter().enumerate() {
            if r == NONE {
                continue;
            }
            for (i, &word) in self.preds.row(r as usize).iter().enumerate() {
                let mut bits = word;
                if i == v / 64 {
                    bits &= !(1u64 << (v % 64));
                }
                while bits != 0 {
                    f(i * 64 + bits.trailing_zeros() as usize, v);
                    bits &= bits - 1;
                }
            }
        }
    }

    /// Ends the stream and returns `{(u, v) : u ∈ P(v) \ {v}}`, or the
    /// complete graph when every vertex has all others as predecessors.
    pub fn finalize(&mut self) -> ClosureGraph {
        self.finalized = true;
        self.snapshot()
    }
}

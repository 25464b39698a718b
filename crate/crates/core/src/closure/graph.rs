use crate::closure::ClosureError;
use crate::graph::{Arc, VertexId};

/// Static, loop-free digraph holding a journey transitive closure.
///
/// Stored tail-major with sorted successor rows, so adjacency tests are a
/// binary search. A complete closure is kept implicitly as `V×V` minus loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureGraph {
    n: usize,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Complete,
    Rows {
        offsets: Vec<usize>,
        heads: Vec<VertexId>,
    },
}

impl ClosureGraph {
    pub fn complete(n: usize) -> Self {
        ClosureGraph {
            n,
            repr: Repr::Complete,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(n, vec![0; n + 1], Vec::new())
    }

    /// Builds a closure from arbitrary arcs; loops and duplicates are dropped.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let mut arcs: Vec<Arc> = arcs.into_iter().filter(|a| !a.is_loop()).collect();
        arcs.sort_unstable();
        arcs.dedup();
        assert!(
            arcs.iter().all(|a| a.tail.index() < n && a.head.index() < n),
            "arc endpoint outside [0, {n})"
        );
        let mut offsets = vec![0; n + 1];
        for a in &arcs {
            offsets[a.tail.index() + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let heads = arcs.into_iter().map(|a| a.head).collect();
        Self::from_rows(n, offsets, heads)
    }

    /// `offsets` has `n + 1` entries; row `u` is `heads[offsets[u]..offsets[u+1]]`,
    /// strictly increasing and without `u`.
    pub(crate) fn from_rows(n: usize, offsets: Vec<usize>, heads: Vec<VertexId>) -> Self {
        // Rows must be sorted and loop-free; callers build them that way.
        debug_assert_eq!(offsets.len(), n + 1);
        debug_assert_eq!(offsets[n], heads.len());
        if heads.len() == n * (n - 1) {
            return Self::complete(n);
        }
        ClosureGraph {
            n,
            repr: Repr::Rows { offsets, heads },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        match &self.repr {
            Repr::Complete => self.n * (self.n - 1),
            Repr::Rows { heads, .. } => heads.len(),
        }
    }

    /// True iff every ordered pair of distinct vertices is an arc.
    pub fn is_complete(&self) -> bool {
        matches!(self.repr, Repr::Complete)
    }

    /// Arc membership. Loops are never arcs.
    pub fn contains(&self, tail: VertexId, head: VertexId) -> bool {
        if tail == head || tail.index() >= self.n || head.index() >= self.n {
            return false;
        }
        match &self.repr {
            Repr::Complete => true,
            Repr::Rows { offsets, heads } => {
                let u = tail.index();
                heads[offsets[u]..offsets[u + 1]].binary_search(&head).is_ok()
            }
        }
    }

    /// Whether a journey `u ⇝ v` exists. `u = v` is always true (the empty
    /// journey), even though the arc set itself never contains loops.
    pub fn journey_exists(&self, u: VertexId, v: VertexId) -> Result<bool, ClosureError> {
        for vertex in [u, v] {
            if vertex.index() >= self.n {
                return Err(ClosureError::UnknownVertex { vertex, n: self.n });
            }
        }
        Ok(u == v || self.contains(u, v))
    }

    /// Successors of `u` in increasing order.
    pub fn successors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let n = self.n as u32;
        let (row, all) = match &self.repr {
            Repr::Complete => (&[][..], u.index() < self.n),
            Repr::Rows { offsets, heads } => {
                let row = match offsets.get(u.index()..u.index() + 2) {
                    Some(w) => &heads[w[0]..w[1]],
                    None => &[][..],
                };
                (row, false)
            }
        };
        let full = (0..if all { n } else { 0 })
            .map(VertexId)
            .filter(move |&v| v != u);
        row.iter().copied().chain(full)
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n as u32).flat_map(move |u| {
            let tail = VertexId(u);
            self.successors(tail).map(move |head| Arc { tail, head })
        })
    }

    pub fn is_subgraph_of(&self, other: &ClosureGraph) -> bool {
        self.n == other.n
            && (other.is_complete() || self.arcs().all(|a| other.contains(a.tail, a.head)))
    }
}

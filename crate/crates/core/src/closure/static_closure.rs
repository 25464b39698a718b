use std::collections::VecDeque;

use crate::graph::{Arc, VertexId};

/// Transitive closure of the single static digraph `(V, arcs)`.
///
/// Returns `(u, v)` for every nonempty directed path `u -> ... -> v` with
/// `u != v`, sorted. A breadth-first search runs from each tail only, over
/// the subgraph induced by `arcs`, so the cost is `O(|arcs|)` per tail.
pub fn static_closure_step(arcs: &[Arc], n: usize) -> Vec<Arc> {
    debug_assert!(arcs
        .iter()
        .all(|a| a.tail.index() < n && a.head.index() < n));
    if arcs.is_empty() {
        return Vec::new();
    }

    // Compact the touched vertices into local ids.
    let mut vertices: Vec<VertexId> = arcs.iter().flat_map(|a| [a.tail, a.head]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let local = |v: VertexId| vertices.binary_search(&v).unwrap();

    let count = vertices.len();
    let mut offsets = vec![0usize; count + 1];
    let mut local_arcs: Vec<(usize, usize)> = arcs
        .iter()
        .map(|a| (local(a.tail), local(a.head)))
        .collect();
    local_arcs.sort_unstable();
    local_arcs.dedup();
    for &(t, _) in &local_arcs {
        offsets[t + 1] += 1;
    }
    for i in 0..count {
        offsets[i + 1] += offsets[i];
    }
    let targets: Vec<usize> = local_arcs.iter().map(|&(_, h)| h).collect();

    let mut seen = vec![usize::MAX; count];
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    for source in 0..count {
        if offsets[source] == offsets[source + 1] {
            continue;
        }
        // `seen[x] == source` marks x as visited in this search.
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for &y in &targets[offsets[x]..offsets[x + 1]] {
                if seen[y] != source {
                    seen[y] = source;
                    queue.push_back(y);
                    if y != source {
                        out.push(Arc {
                            tail: vertices[source],
                            head: vertices[y],
                        });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs(pairs: &[(u32, u32)]) -> Vec<Arc> {
        pairs.iter().map(|&(u, v)| Arc::new(u, v)).collect()
    }

    #[test]
    fn path() {
        assert_eq!(
            static_closure_step(&arcs(&[(0, 1), (1, 2)]), 3),
            arcs(&[(0, 1), (0, 2), (1, 2)])
        );
    }

    #[test]
    fn cycle_excludes_loops() {
        assert_eq!(
            static_closure_step(&arcs(&[(0, 1), (1, 0)]), 2),
            arcs(&[(0, 1), (1, 0)])
        );
    }

    #[test]
    fn sparse_labels_and_empty() {
        assert!(static_closure_step(&[], 5).is_empty());
        assert_eq!(
            static_closure_step(&arcs(&[(9, 4), (4, 7), (2, 2)]), 10),
            arcs(&[(4, 7), (9, 4), (9, 7)])
        );
    }
}

//! Canonical labeling for desk-scale hypergraphs by exhaustive search over
//! invariant-respecting relabelings, done component by component.
//!
//! The canonical form is a well-defined representative of the isomorphism
//! class (not necessarily the label-minimal graph): components are
//! canonicalized independently, ordered by size and canonical edge list, and
//! packed onto consecutive labels.

use crate::hypergraph::UniformHypergraph;
use crate::set::VertexSet;

/// A deterministic representative of the isomorphism class of `h`.
pub fn canonical_form(h: &UniformHypergraph) -> UniformHypergraph {
    let mut comps: Vec<(usize, Vec<u64>)> = h
        .components()
        .into_iter()
        .map(|c| {
            let (sub, _) = h.induced(c).expect("component lies in the graph");
            (c.len(), canonical_component(&sub))
        })
        .collect();
    comps.sort();

    let mut edges: Vec<VertexSet> = Vec::with_capacity(h.edge_count());
    let mut offset = 0usize;
    for (size, comp_edges) in comps {
        for mask in comp_edges {
            let shifted = VertexSet::from_labels(
                VertexSet::from_mask(mask).iter().map(|v| v + offset),
            )
            .expect("labels stay within the original range");
            edges.push(shifted);
        }
        offset += size;
    }
    UniformHypergraph::new(h.vertex_count(), h.uniformity(), edges)
        .expect("relabeling preserves validity")
}

pub fn are_isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.uniformity() == b.uniformity()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

/// Minimal sorted edge-mask list over all relabelings of one connected
/// component that respect the vertex invariant classes.
fn canonical_component(g: &UniformHypergraph) -> Vec<u64> {
    let c = g.vertex_count();
    if g.edge_count() == 0 {
        return Vec::new();
    }

    // Invariant per vertex: (degree, sorted neighbor degrees). Classes sorted
    // by invariant get consecutive label blocks; only within-class orders vary.
    let degrees = g.degrees();
    let invariant: Vec<(usize, Vec<usize>)> = (1..=c)
        .map(|v| {
            let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|u| degrees[u - 1]).collect();
            nbr.sort_unstable();
            (degrees[v - 1], nbr)
        })
        .collect();

    let mut classes: Vec<(&(usize, Vec<usize>), Vec<usize>)> = Vec::new();
    let mut order: Vec<usize> = (1..=c).collect();
    order.sort_by(|&a, &b| invariant[a - 1].cmp(&invariant[b - 1]));
    for v in order {
        match classes.last_mut() {
            Some((inv, members)) if **inv == invariant[v - 1] => members.push(v),
            _ => classes.push((&invariant[v - 1], vec![v])),
        }
    }

    // `slots[p]` lists the candidate original vertices for new label p + 1.
    let mut slots: Vec<Vec<usize>> = Vec::with_capacity(c);
    for (_, members) in &classes {
        for _ in 0..members.len() {
            slots.push(members.clone());
        }
    }

    let mut assignment = vec![0usize; c + 1]; // old label -> new label
    let mut used = vec![false; c + 1];
    let mut best: Option<Vec<u64>> = None;
    assign(g, &slots, 0, &mut assignment, &mut used, &mut best);
    best.expect("at least one relabeling exists")
}

fn assign(
    g: &UniformHypergraph,
    slots: &[Vec<usize>],
    position: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut Option<Vec<u64>>,
) {
    if position == slots.len() {
        let mut edges: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| {
                let mut mask = 0u64;
                for v in e.iter() {
                    mask |= 1u64 << (assignment[v] - 1);
                }
                mask
            })
            .collect();
        edges.sort_unstable();
        match best {
            Some(b) if *b <= edges => {}
            _ => *best = Some(edges),
        }
        return;
    }
    for &old in &slots[position] {
        if used[old] {
            continue;
        }
        used[old] = true;
        assignment[old] = position + 1;
        assign(g, slots, position + 1, assignment, used, best);
        used[old] = false;
    }
}

//! Low-level algebra on node lists of piecewise-affine increasing maps.
//!
//! A node list `(x_0, y_0), ..., (x_n, y_n)` with strictly increasing
//! coordinates denotes the piecewise-affine map interpolating the nodes on
//! the span `[x_0, x_n]`. All routines here are exact.

use crate::numerics::GoldenNumber;

/// One breakpoint of a piecewise-linear map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    pub x: GoldenNumber,
    pub y: GoldenNumber,
}

impl Node {
    pub fn new(x: GoldenNumber, y: GoldenNumber) -> Self {
        Node { x, y }
    }

    pub fn fixed(x: GoldenNumber) -> Self {
        Node { y: x.clone(), x }
    }

    pub fn swap(&self) -> Self {
        Node {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

/// Exact slope of the segment from `a` to `b`.
pub fn slope(a: &Node, b: &Node) -> GoldenNumber {
    let dx = b.x.clone() - &a.x;
    let dy = b.y.clone() - &a.y;
    dy * dx.try_inv().expect("nodes strictly increasing")
}

/// Checks that both coordinate sequences increase strictly; returns the
/// index of the first offending node.
pub fn check_strictly_increasing(nodes: &[Node]) -> Result<(), usize> {
    for i in 1..nodes.len() {
        if nodes[i].x <= nodes[i - 1].x || nodes[i].y <= nodes[i - 1].y {
            return Err(i);
        }
    }
    Ok(())
}

/// Index of the segment containing `x`; `nodes` must span it.
fn segment_index(nodes: &[Node], x: &GoldenNumber) -> usize {
    debug_assert!(*x >= nodes[0].x && *x <= nodes[nodes.len() - 1].x);
    // Last i with nodes[i].x <= x, capped to a real segment start.
    match nodes.binary_search_by(|n| n.x.cmp(x)) {
        Ok(i) => i.min(nodes.len() - 2),
        Err(ins) => ins - 1,
    }
}

/// Evaluates the interpolant at `x` within the span.
pub fn eval_in_span(nodes: &[Node], x: &GoldenNumber) -> GoldenNumber {
    let i = segment_index(nodes, x);
    let s = slope(&nodes[i], &nodes[i + 1]);
    nodes[i].y.clone() + s * (x.clone() - &nodes[i].x)
}

/// Evaluates the inverse map at `y` within the range span.
pub fn eval_inverse_in_span(nodes: &[Node], y: &GoldenNumber) -> GoldenNumber {
    let swapped: Vec<Node> = nodes.iter().map(Node::swap).collect();
    eval_in_span(&swapped, y)
}

/// Drops interior nodes whose two adjacent segments share a slope. The
/// endpoints always stay.
pub fn normalize(nodes: Vec<Node>) -> Vec<Node> {
    if nodes.len() <= 2 {
        return nodes;
    }
    let mut out: Vec<Node> = Vec::with_capacity(nodes.len());
    out.push(nodes[0].clone());
    for i in 1..nodes.len() - 1 {
        if slope(&nodes[i - 1], &nodes[i]) != slope(&nodes[i], &nodes[i + 1]) {
            out.push(nodes[i].clone());
        }
    }
    out.push(nodes[nodes.len() - 1].clone());
    out
}

/// Node list of `x -> g(f(x))` over the common span. Breakpoints are the
/// breakpoints of `f` together with `f`-preimages of the breakpoints of `g`.
pub fn compose_in_span(f: &[Node], g: &[Node]) -> Vec<Node> {
    let mut breaks = std::collections::BTreeSet::new();
    for n in f {
        breaks.insert(n.x.clone());
    }
    let lo = &f[0].y;
    let hi = &f[f.len() - 1].y;
    for n in g {
        if n.x >= *lo && n.x <= *hi {
            breaks.insert(eval_inverse_in_span(f, &n.x));
        }
    }
    let nodes = breaks
        .into_iter()
        .map(|x| {
            let y = eval_in_span(g, &eval_in_span(f, &x));
            Node::new(x, y)
        })
        .collect();
    normalize(nodes)
}

/// The maximal closed subsets of the span on which the map is the identity,
/// as sorted disjoint closed intervals (points appear as degenerate pairs).
pub fn fixed_sets_in_span(nodes: &[Node]) -> Vec<(GoldenNumber, GoldenNumber)> {
    let mut blocks: Vec<(GoldenNumber, GoldenNumber)> = Vec::new();
    let one = GoldenNumber::one();
    for i in 0..nodes.len() - 1 {
        let (a, b) = (&nodes[i], &nodes[i + 1]);
        let s = slope(a, b);
        if s == one {
            if a.y == a.x {
                push_block(&mut blocks, (a.x.clone(), b.x.clone()));
            }
        } else {
            // y_i + s (x - x_i) = x  <=>  x (1 - s) = y_i - s x_i.
            let x_star = (a.y.clone() - s.clone() * &a.x)
                * (one.clone() - s).try_inv().expect("slope is not 1");
            if x_star >= a.x && x_star <= b.x {
                push_block(&mut blocks, (x_star.clone(), x_star));
            }
        }
    }
    blocks
}

fn push_block(
    blocks: &mut Vec<(GoldenNumber, GoldenNumber)>,
    block: (GoldenNumber, GoldenNumber),
) {
    if let Some(last) = blocks.last_mut() {
        if block.0 <= last.1 {
            if block.1 > last.1 {
                last.1 = block.1;
            }
            return;
        }
    }
    blocks.push(block);
}

/// Open complement of a sorted list of closed blocks inside `[lo, hi]`.
pub fn complement_in_span(
    blocks: &[(GoldenNumber, GoldenNumber)],
    lo: &GoldenNumber,
    hi: &GoldenNumber,
) -> Vec<(GoldenNumber, GoldenNumber)> {
    let mut out = Vec::new();
    let mut cursor = lo.clone();
    for (a, b) in blocks {
        if *a > cursor {
            out.push((cursor.clone(), a.clone()));
        }
        if *b > cursor {
            cursor = b.clone();
        }
    }
    if *hi > cursor {
        out.push((cursor, hi.clone()));
    }
    out
}

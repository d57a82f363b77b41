//! Maximum flow by FIFO push-relabel on real capacities.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Residual capacities at or below this are treated as saturated.
pub const FLOW_EPS: f64 = 1e-9;

/// A directed network with nonnegative capacities.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, f64)>,
}

impl FlowNetwork {
    /// Panics if `source == sink` or either is out of range.
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: f64) -> Result<()> {
        if from >= self.nodes || to >= self.nodes || from == to {
            return Err(Error::InvalidArgument(format!("bad arc {from} -> {to}")));
        }
        if !(capacity >= 0.0) || !capacity.is_finite() {
            return Err(Error::NegativeCapacity { from, to, capacity });
        }
        self.arcs.push((from, to, capacity));
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, f64)] {
        &self.arcs
    }

    /// Total capacity of arcs leaving the node set `side`.
    pub fn cut_capacity(&self, side: &[bool]) -> f64 {
        self.arcs
            .iter()
            .filter(|&&(u, v, _)| side[u] && !side[v])
            .map(|&(_, _, c)| c)
            .sum()
    }
}

/// A minimum s-t cut.
#[derive(Clone, Debug, PartialEq)]
pub struct StCut {
    pub value: f64,
    /// Sorted node ids; contains the source, never the sink.
    pub source_side: Vec<usize>,
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<f64>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn build(net: &FlowNetwork) -> Self {
        let mut r = Residual {
            head: Vec::with_capacity(2 * net.arcs.len()),
            cap: Vec::with_capacity(2 * net.arcs.len()),
            adj: vec![Vec::new(); net.nodes],
        };
        for &(u, v, c) in &net.arcs {
            // Edge e and its reverse e ^ 1.
            r.adj[u].push(r.head.len());
            r.head.push(v);
            r.cap.push(c);
            r.adj[v].push(r.head.len());
            r.head.push(u);
            r.cap.push(0.0);
        }
        r
    }
}

/// Max flow / min cut. The returned side is the set reachable from the source
/// in the final residual network, i.e. the minimum cut closest to the source.
pub fn min_st_cut(net: &FlowNetwork) -> StCut {
    let n = net.nodes;
    let (s, t) = (net.source, net.sink);
    let mut g = Residual::build(net);
    let mut height = vec![0usize; n];
    let mut excess = vec![0.0f64; n];
    let mut current = vec![0usize; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    height[s] = n;
    for k in 0..g.adj[s].len() {
        let e = g.adj[s][k];
        let d = g.cap[e];
        if d > 0.0 {
            let v = g.head[e];
            g.cap[e] -= d;
            g.cap[e ^ 1] += d;
            excess[v] += d;
            excess[s] -= d;
            if v != t && !queued[v] && excess[v] > FLOW_EPS {
                queued[v] = true;
                queue.push_back(v);
            }
        }
    }
    let max_height = 2 * n + 1;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        while excess[u] > FLOW_EPS {
            if current[u] == g.adj[u].len() {
                let next = g.adj[u]
                    .iter()
                    .filter(|&&e| g.cap[e] > FLOW_EPS)
                    .map(|&e| height[g.head[e]] + 1)
                    .min();
                match next {
                    Some(h) if h <= max_height => {
                        height[u] = h;
                        current[u] = 0;
                    }
                    // Only reachable through round-off; the stranded excess is below tolerance.
                    _ => {
                        excess[u] = 0.0;
                        break;
                    }
                }
                continue;
            }
            let e = g.adj[u][current[u]];
            let v = g.head[e];
            if g.cap[e] > FLOW_EPS && height[u] == height[v] + 1 {
                let d = excess[u].min(g.cap[e]);
                g.cap[e] -= d;
                g.cap[e ^ 1] += d;
                excess[u] -= d;
                excess[v] += d;
                if v != s && v != t && !queued[v] && excess[v] > FLOW_EPS {
                    queued[v] = true;
                    queue.push_back(v);
                }
            } else {
                current[u] += 1;
            }
        }
    }
    let mut side = vec![false; n];
    side[s] = true;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &e in &g.adj[u] {
            let v = g.head[e];
            if !side[v] && g.cap[e] > FLOW_EPS {
                side[v] = true;
                stack.push(v);
            }
        }
    }
    // Never put the sink on the source side, even under round-off.
    side[t] = false;
    StCut {
        value: net.cut_capacity(&side),
        source_side: (0..n).filter(|&v| side[v]).collect(),
    }
}

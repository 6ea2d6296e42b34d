//! Edge streams: event types, ordering transforms, and a planted-partition
//! generator.
//!
//! A stream is a replayable, ordered sequence of undirected edge arrivals.
//! The same `(u, v)` pair may arrive more than once; downstream consumers
//! decide what repeats mean. Timestamps are dense indices `0..len` — arrival
//! order is the only temporal information the samplers consume.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::{Error, NodeId, Result};

/// One undirected edge arrival. Self-loops are rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeEvent {
    pub u: NodeId,
    pub v: NodeId,
    /// Discrete arrival index, strictly increasing within a stream.
    pub t: u64,
}

impl EdgeEvent {
    pub fn new(u: NodeId, v: NodeId, t: u64) -> Result<Self> {
        if u == v {
            return Err(Error::Config(format!("self-loop ({u},{u}) is not a valid event")));
        }
        Ok(EdgeEvent { u, v, t })
    }

    /// Endpoints with the smaller id first, for use as a set key.
    pub fn key(&self) -> (NodeId, NodeId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// An ordered, replayable sequence of edge events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeStream {
    events: Vec<EdgeEvent>,
}

impl EdgeStream {
    /// Builds a stream from `(u, v)` pairs in the given order, assigning
    /// dense timestamps.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (NodeId, NodeId)>) -> Result<Self> {
        let events = pairs
            .into_iter()
            .enumerate()
            .map(|(t, (u, v))| EdgeEvent::new(u, v, t as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(EdgeStream { events })
    }

    pub(crate) fn from_events_unchecked(events: Vec<EdgeEvent>) -> Self {
        EdgeStream { events }
    }

    pub fn events(&self) -> &[EdgeEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &EdgeEvent> {
        self.events.iter()
    }

    /// Distinct node identifiers appearing in the stream.
    pub fn node_count(&self) -> usize {
        let mut nodes = BTreeSet::new();
        for e in &self.events {
            nodes.insert(e.u);
            nodes.insert(e.v);
        }
        nodes.len()
    }

    /// Distinct undirected edges in the stream (duplicates collapsed).
    pub fn distinct_edges(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.events.iter().map(|e| e.key()).collect()
    }

    /// Concatenates `self` followed by `other`, reassigning dense timestamps.
    pub fn concat(&self, other: &EdgeStream) -> EdgeStream {
        let events = self
            .events
            .iter()
            .chain(other.events.iter())
            .enumerate()
            .map(|(t, e)| EdgeEvent { u: e.u, v: e.v, t: t as u64 })
            .collect();
        EdgeStream { events }
    }
}

/// Ground-truth community label per node, paired with a stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroundTruthLabels {
    labels: BTreeMap<NodeId, u64>,
}

impl GroundTruthLabels {
    pub fn from_map(labels: BTreeMap<NodeId, u64>) -> Self {
        GroundTruthLabels { labels }
    }

    pub fn get(&self, node: NodeId) -> Option<u64> {
        self.labels.get(&node).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, u64)> + '_ {
        self.labels.iter().map(|(&n, &c)| (n, c))
    }

    /// Checks that every labeled node occurs somewhere in `stream`.
    pub fn validate_against(&self, stream: &EdgeStream) -> Result<()> {
        let mut nodes = BTreeSet::new();
        for e in stream.iter() {
            nodes.insert(e.u);
            nodes.insert(e.v);
        }
        for (&node, _) in &self.labels {
            if !nodes.contains(&node) {
                return Err(Error::Config(format!(
                    "labeled node {node} does not appear in the stream"
                )));
            }
        }
        Ok(())
    }
}

/// In-place Fisher-Yates shuffle: walks indices downward, swapping each with
/// a uniformly drawn earlier-or-equal position.
pub(crate) fn fisher_yates<T, R: Rng>(items: &mut [T], rng: &mut R) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// Returns a uniformly random reordering of `stream`, fully determined by
/// `seed`. Timestamps are reassigned to `0..len`.
pub fn randomize_order(stream: &EdgeStream, seed: u64) -> Result<EdgeStream> {
    if stream.is_empty() {
        return Err(Error::EmptyInput("cannot reorder an empty stream".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(NodeId, NodeId)> = stream.iter().map(|e| (e.u, e.v)).collect();
    fisher_yates(&mut pairs, &mut rng);
    EdgeStream::from_pairs(pairs)
}

/// Applies `floor(y * len)` pairwise position swaps between uniformly chosen
/// distinct event pairs. The edge multiset is unchanged; timestamps are
/// reassigned to `0..len`.
pub fn perturb_order(stream: &EdgeStream, y: f64, seed: u64) -> Result<EdgeStream> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::Config(format!("perturbation fraction {y} outside [0, 1]")));
    }
    let mut pairs: Vec<(NodeId, NodeId)> = stream.iter().map(|e| (e.u, e.v)).collect();
    let swaps = (y * stream.len() as f64).floor() as usize;
    if swaps > 0 && stream.len() >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..swaps {
            let i = rng.random_range(0..pairs.len());
            let mut j = rng.random_range(0..pairs.len());
            while j == i {
                j = rng.random_range(0..pairs.len());
            }
            pairs.swap(i, j);
        }
    }
    EdgeStream::from_pairs(pairs)
}

/// Planted-partition random graph: `n_nodes` split into `k_comms` near-equal
/// blocks, each intra-block pair an edge with probability `p_in` and each
/// inter-block pair with `p_out`. Edges are emitted in seeded random order.
pub fn generate_planted_partition(
    n_nodes: usize,
    k_comms: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<(EdgeStream, GroundTruthLabels)> {
    if k_comms == 0 || n_nodes < k_comms {
        return Err(Error::Config(format!(
            "need n_nodes >= k_comms >= 1, got n_nodes={n_nodes}, k_comms={k_comms}"
        )));
    }
    if !(0.0..=1.0).contains(&p_in) || !(0.0..=1.0).contains(&p_out) || p_out >= p_in {
        return Err(Error::Config(format!(
            "need 0 <= p_out < p_in <= 1, got p_in={p_in}, p_out={p_out}"
        )));
    }

    // Blocks of near-equal size; the first (n mod k) blocks get one extra node.
    let base = n_nodes / k_comms;
    let extra = n_nodes % k_comms;
    let mut labels = BTreeMap::new();
    let mut block_of = vec![0u64; n_nodes];
    let mut next = 0usize;
    for block in 0..k_comms {
        let size = base + usize::from(block < extra);
        for node in next..next + size {
            block_of[node] = block as u64;
            labels.insert(node as NodeId, block as u64);
        }
        next += size;
    }

    let intra_pairs: u64 = (0..k_comms)
        .map(|b| {
            let s = (base + usize::from(b < extra)) as u64;
            s * s.saturating_sub(1) / 2
        })
        .sum();
    let total_pairs = (n_nodes as u64) * (n_nodes as u64 - 1) / 2;
    let expected = p_in * intra_pairs as f64 + p_out * (total_pairs - intra_pairs) as f64;
    if expected == 0.0 {
        return Err(Error::Config(
            "degenerate parameters: expected edge count is zero".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(NodeId, NodeId)> = Vec::new();
    for u in 0..n_nodes {
        for v in (u + 1)..n_nodes {
            let p = if block_of[u] == block_of[v] { p_in } else { p_out };
            if p >= 1.0 || (p > 0.0 && rng.random_bool(p)) {
                pairs.push((u as NodeId, v as NodeId));
            }
        }
    }
    if pairs.is_empty() {
        return Err(Error::Config(
            "degenerate parameters: generated zero edges".into(),
        ));
    }
    fisher_yates(&mut pairs, &mut rng);
    Ok((
        EdgeStream::from_pairs(pairs)?,
        GroundTruthLabels::from_map(labels),
    ))
}

//! DAG and undirected-graph structure: parent/predecessor/family queries,
//! moralization, perfection and decomposability tests, clique enumeration,
//! acyclic-orientation enumeration and separation tests.
//!
//! Vertices are labeled 1..=p. A `Dag` is any acyclic digraph; the numbering
//! convention (every edge i → j has i > j) is a separate property queried via
//! [`Dag::satisfies_convention`] and required by the completion procedures.
//! [`topological_relabel`] renumbers an arbitrary acyclic edge list so the
//! convention holds.

use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range 1..={p}")]
    VertexOutOfRange { v: usize, p: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("directed cycle detected: {0:?}")]
    CycleDetected(Vec<usize>),
    #[error("graph is not decomposable")]
    NotDecomposable,
    #[error("vertex sets must be pairwise disjoint and in range")]
    OverlappingSets,
    #[error("edge ({0}, {1}) violates the numbering convention i \u{2192} j \u{21d2} i > j")]
    ConventionViolated(usize, usize),
    #[error("graph file parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn check_vertex(v: usize, p: usize) -> Result<(), GraphError> {
    if v < 1 || v > p {
        Err(GraphError::VertexOutOfRange { v, p })
    } else {
        Ok(())
    }
}

// ── Dag ─────────────────────────────────────────────────────────────

/// Directed acyclic graph on vertices 1..=p. Edge (i, j) means i → j,
/// i.e. i is a parent of j. Admission rejects self-loops, duplicate and
/// out-of-range edges, and directed cycles.
#[derive(Debug, Clone, PartialEq)]
pub struct Dag {
    p: usize,
    edges: BTreeSet<(usize, usize)>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

impl Dag {
    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        let mut parents = vec![Vec::new(); p + 1];
        let mut children = vec![Vec::new(); p + 1];
        for &(i, j) in edges {
            check_vertex(i, p)?;
            check_vertex(j, p)?;
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if !set.insert((i, j)) {
                return Err(GraphError::DuplicateEdge(i, j));
            }
            parents[j].push(i);
            children[i].push(j);
        }
        for v in parents.iter_mut().chain(children.iter_mut()) {
            v.sort_unstable();
        }
        let dag = Dag {
            p,
            edges: set,
            parents,
            children,
        };
        if let Some(cycle) = dag.find_cycle() {
            return Err(GraphError::CycleDetected(cycle));
        }
        Ok(dag)
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        // Kahn elimination; leftovers all lie on or feed a cycle.
        let mut indeg = vec![0usize; self.p + 1];
        for &(_, j) in &self.edges {
            indeg[j] += 1;
        }
        let mut stack: Vec<usize> = (1..=self.p).filter(|&v| indeg[v] == 0).collect();
        let mut removed = vec![false; self.p + 1];
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in &self.children[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        let start = (1..=self.p).find(|&v| !removed[v])?;
        // walk parents inside the leftover set until a vertex repeats
        let mut path = vec![start];
        let mut seen = vec![usize::MAX; self.p + 1];
        seen[start] = 0;
        let mut cur = start;
        loop {
            let pred = *self.parents[cur]
                .iter()
                .find(|&&u| !removed[u])
                .expect("leftover vertex must have a leftover parent");
            if seen[pred] != usize::MAX {
                let mut cycle: Vec<usize> = path[seen[pred]..].to_vec();
                cycle.reverse();
                return Some(cycle);
            }
            seen[pred] = path.len();
            path.push(pred);
            cur = pred;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Directed edges (i, j) with i → j, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        self.edges.contains(&(u, w)) || self.edges.contains(&(w, u))
    }

    /// pa(j): vertices with an edge into j, sorted.
    pub fn parents(&self, j: usize) -> &[usize] {
        assert!(j >= 1 && j <= self.p, "vertex out of range");
        &self.parents[j]
    }

    /// ch(j): vertices j points to, sorted.
    pub fn children(&self, j: usize) -> &[usize] {
        assert!(j >= 1 && j <= self.p, "vertex out of range");
        &self.children[j]
    }

    /// fa(j) = pa(j) ∪ {j}, sorted.
    pub fn family(&self, j: usize) -> Vec<usize> {
        let mut f = self.parents(j).to_vec();
        let pos = f.partition_point(|&u| u < j);
        f.insert(pos, j);
        f
    }

    /// Adjacent vertices (parents and children), sorted.
    pub fn neighbors(&self, j: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self
            .parents(j)
            .iter()
            .chain(self.children(j))
            .copied()
            .collect();
        n.sort_unstable();
        n.dedup();
        n
    }

    /// pr(j) = { i : i > j, i ∉ pa(j) }, sorted. Meaningful under the
    /// numbering convention.
    pub fn predecessors(&self, j: usize) -> Vec<usize> {
        assert!(j >= 1 && j <= self.p, "vertex out of range");
        ((j + 1)..=self.p)
            .filter(|&i| !self.has_edge(i, j))
            .collect()
    }

    /// True iff every edge (i, j) has i > j.
    pub fn satisfies_convention(&self) -> bool {
        self.edges.iter().all(|&(i, j)| i > j)
    }

    pub fn undirected_version(&self) -> UGraph {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(i, j)| (i, j)).collect();
        UGraph::new(self.p, &edges).expect("skeleton of a valid DAG is a valid graph")
    }

    /// All induced subgraphs i → k ← j with i, j non-adjacent, reported once
    /// per unordered parent pair as (i, k, j) with i > j, sorted by
    /// (k, i, j).
    pub fn immoralities(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for k in 1..=self.p {
            let pa = &self.parents[k];
            for a in 0..pa.len() {
                for b in (a + 1)..pa.len() {
                    let (lo, hi) = (pa[a], pa[b]);
                    if !self.adjacent(lo, hi) {
                        out.push((hi, k, lo));
                    }
                }
            }
        }
        out.sort_unstable_by_key(|&(i, k, j)| (k, i, j));
        out
    }

    /// A DAG is perfect when it has no immoralities, i.e. every parent set
    /// induces a complete subgraph.
    pub fn is_perfect(&self) -> bool {
        self.immoralities().is_empty()
    }

    /// Undirected version plus an edge {i, j} for every immorality (i, k, j).
    pub fn moral_graph(&self) -> UGraph {
        let mut edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(i, j)| if i < j { (i, j) } else { (j, i) })
            .collect();
        for (i, _, j) in self.immoralities() {
            edges.insert(if i < j { (i, j) } else { (j, i) });
        }
        let list: Vec<(usize, usize)> = edges.into_iter().collect();
        UGraph::new(self.p, &list).expect("moral graph of a valid DAG is a valid graph")
    }

    /// The sequence D⁽⁰⁾, …, D⁽ⁿ⁾ where each step adds, for every immorality
    /// i → k ← j with i > j of the current DAG, the edge i → j; all edges of
    /// one round are added simultaneously. Terminates with a perfect DAG.
    /// Requires the numbering convention so the added edges keep the DAG
    /// acyclic.
    pub fn immorality_closure(&self) -> Result<Vec<Dag>, GraphError> {
        if let Some(&(i, j)) = self.edges.iter().find(|&&(i, j)| i <= j) {
            return Err(GraphError::ConventionViolated(i, j));
        }
        let mut seq = vec![self.clone()];
        loop {
            let cur = seq.last().unwrap();
            let im = cur.immoralities();
            if im.is_empty() {
                return Ok(seq);
            }
            let mut edges = cur.edges.clone();
            for (i, _, j) in im {
                edges.insert((i, j));
            }
            let list: Vec<(usize, usize)> = edges.into_iter().collect();
            let next = Dag::new(self.p, &list).expect("closure preserves the convention");
            seq.push(next);
        }
    }
}

// ── Relabeling ──────────────────────────────────────────────────────

/// Vertex relabeling permutation; `map(old) = new`, labels 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Relabeling {
    perm: Vec<usize>,
}

impl Relabeling {
    pub fn identity(p: usize) -> Self {
        Relabeling {
            perm: (0..=p).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len() - 1
    }

    pub fn map(&self, old: usize) -> usize {
        assert!(old >= 1 && old < self.perm.len(), "vertex out of range");
        self.perm[old]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Relabeling {
        let mut inv = vec![0; self.perm.len()];
        for old in 1..self.perm.len() {
            inv[self.perm[old]] = old;
        }
        Relabeling { perm: inv }
    }

    /// Pairs (old, new) for reporting.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..self.perm.len())
            .map(|old| (old, self.perm[old]))
            .collect()
    }
}

/// Renumbers an arbitrary directed edge list so that every edge i → j has
/// i > j, returning the relabeled DAG and the permutation used. The
/// permutation is the identity when the input already satisfies the
/// convention. Fails with a witness cycle when the input digraph is cyclic.
pub fn topological_relabel(
    p: usize,
    edges: &[(usize, usize)],
) -> Result<(Dag, Relabeling), GraphError> {
    // admission checks shared with Dag::new, minus acyclicity
    let mut set = BTreeSet::new();
    for &(i, j) in edges {
        check_vertex(i, p)?;
        check_vertex(j, p)?;
        if i == j {
            return Err(GraphError::SelfLoop(i));
        }
        if !set.insert((i, j)) {
            return Err(GraphError::DuplicateEdge(i, j));
        }
    }
    if edges.iter().all(|&(i, j)| i > j) {
        let dag = Dag::new(p, edges).expect("convention implies acyclic");
        return Ok((dag, Relabeling::identity(p)));
    }
    let mut indeg = vec![0usize; p + 1];
    let mut children = vec![Vec::new(); p + 1];
    let mut parents = vec![Vec::new(); p + 1];
    for &(i, j) in &set {
        indeg[j] += 1;
        children[i].push(j);
        parents[j].push(i);
    }
    // Assign labels p, p-1, … along a topological order, always taking the
    // in-degree-0 vertex with the largest original label so conventional
    // inputs keep their labels.
    let mut heap: std::collections::BinaryHeap<usize> =
        (1..=p).filter(|&v| indeg[v] == 0).collect();
    let mut perm = vec![0usize; p + 1];
    let mut next = p;
    while let Some(v) = heap.pop() {
        perm[v] = next;
        next -= 1;
        for &w in &children[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(w);
            }
        }
    }
    if next > 0 {
        // leftover vertices contain a directed cycle; walk parents to find it
        let start = (1..=p).find(|&v| perm[v] == 0).unwrap();
        let mut path = vec![start];
        let mut seen = vec![usize::MAX; p + 1];
        seen[start] = 0;
        let mut cur = start;
        loop {
            let pred = *parents[cur].iter().find(|&&u| perm[u] == 0).unwrap();
            if seen[pred] != usize::MAX {
                let mut cycle: Vec<usize> = path[seen[pred]..].to_vec();
                cycle.reverse();
                return Err(GraphError::CycleDetected(cycle));
            }
            seen[pred] = path.len();
            path.push(pred);
            cur = pred;
        }
    }
    let relabeled: Vec<(usize, usize)> = set.iter().map(|&(i, j)| (perm[i], perm[j])).collect();
    let dag = Dag::new(p, &relabeled).expect("topological labels imply acyclic");
    Ok((dag, Relabeling { perm }))
}

// ── UGraph ──────────────────────────────────────────────────────────

/// Undirected graph on vertices 1..=p, no self-loops.
#[derive(Debug, Clone, PartialEq)]
pub struct UGraph {
    p: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl UGraph {
    pub fn new(p: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        let mut adj = vec![BTreeSet::new(); p + 1];
        for &(u, w) in edges {
            check_vertex(u, p)?;
            check_vertex(w, p)?;
            if u == w {
                return Err(GraphError::SelfLoop(u));
            }
            let key = if u < w { (u, w) } else { (w, u) };
            if !set.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].insert(w);
            adj[w].insert(u);
        }
        Ok(UGraph { p, edges: set, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs (u, w) with u < w.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        let key = if u < w { (u, w) } else { (w, u) };
        self.edges.contains(&key)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        assert!(v >= 1 && v <= self.p, "vertex out of range");
        self.adj[v].iter().copied().collect()
    }

    pub fn is_complete_subset(&self, vs: &[usize]) -> bool {
        for a in 0..vs.len() {
            for b in (a + 1)..vs.len() {
                if !self.has_edge(vs[a], vs[b]) {
                    return false;
                }
            }
        }
        true
    }

    /// All maximal cliques via Bron–Kerbosch with pivoting. Each clique is
    /// sorted ascending and the list is in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: BTreeSet<usize> = (1..=self.p).collect();
        let x = BTreeSet::new();
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        // pivot: vertex of P ∪ X covering the most of P; lowest label on ties
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .map(|u| (self.adj[u].intersection(&p).count(), std::cmp::Reverse(u)))
            .max()
            .map(|(_, std::cmp::Reverse(u))| u)
            .unwrap();
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|v| !self.adj[pivot].contains(v))
            .collect();
        let mut p = p;
        for v in candidates {
            r.push(v);
            let p_next: BTreeSet<usize> = p.intersection(&self.adj[v]).copied().collect();
            let x_next: BTreeSet<usize> = x.intersection(&self.adj[v]).copied().collect();
            self.bron_kerbosch(r, p_next, x_next, out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }

    /// Maximum cardinality search visit order; ties broken by lowest label.
    pub fn mcs_order(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.p + 1];
        let mut visited = vec![false; self.p + 1];
        let mut order = Vec::with_capacity(self.p);
        for _ in 0..self.p {
            let mut best = 0;
            let mut best_w = 0;
            for v in 1..=self.p {
                if !visited[v] && (best == 0 || weight[v] > best_w) {
                    best = v;
                    best_w = weight[v];
                }
            }
            visited[best] = true;
            order.push(best);
            for &w in &self.adj[best] {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        order
    }

    /// Perfect elimination ordering when the graph is chordal, `None`
    /// otherwise. The ordering lists vertices in elimination order: each
    /// vertex's neighbors among the later entries form a clique.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let order = self.mcs_order();
        let mut pos = vec![0usize; self.p + 1];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        for (k, &v) in order.iter().enumerate() {
            let earlier: Vec<usize> = self.adj[v]
                .iter()
                .copied()
                .filter(|&w| pos[w] < k)
                .collect();
            if let Some(&m) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != m && !self.has_edge(w, m) {
                        return None;
                    }
                }
            }
        }
        let mut elim = order;
        elim.reverse();
        Some(elim)
    }

    /// True iff the graph is chordal (no induced cycle of length ≥ 4),
    /// decided by maximum cardinality search plus the elimination check.
    pub fn is_decomposable(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// A perfect DAG version of a decomposable graph: each edge is oriented
    /// from the earlier-visited endpoint of the maximum cardinality search to
    /// the later-visited one, so every parent set is an earlier-visited
    /// neighborhood and hence complete. Deterministic given the MCS
    /// tie-break. The result generally does not satisfy the numbering
    /// convention; relabel before completing against it.
    pub fn perfect_dag_version(&self) -> Result<Dag, GraphError> {
        if self.perfect_elimination_ordering().is_none() {
            return Err(GraphError::NotDecomposable);
        }
        let order = self.mcs_order();
        let mut pos = vec![0usize; self.p + 1];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, w)| if pos[u] < pos[w] { (u, w) } else { (w, u) })
            .collect();
        Ok(Dag::new(self.p, &edges).expect("orientation along a visit order is acyclic"))
    }

    /// All acyclic orientations of the edges, in the raw labeling (not
    /// relabeled to the numbering convention). Exponential in the edge
    /// count.
    pub fn enumerate_acyclic_orientations(&self) -> Vec<Dag> {
        let edges = self.edges();
        let m = edges.len();
        assert!(
            m < usize::BITS as usize,
            "too many edges to enumerate orientations"
        );
        let mut out = Vec::new();
        for mask in 0usize..(1 << m) {
            let oriented: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(b, &(u, w))| if mask >> b & 1 == 0 { (u, w) } else { (w, u) })
                .collect();
            if let Ok(dag) = Dag::new(self.p, &oriented) {
                out.push(dag);
            }
        }
        out
    }

    /// True iff every path from A to B intersects S. A, B, S must be
    /// pairwise disjoint.
    pub fn separates(&self, a: &[usize], b: &[usize], s: &[usize]) -> Result<bool, GraphError> {
        let mut mark = vec![0u8; self.p + 1];
        for (&v, tag) in a
            .iter()
            .map(|v| (v, 1u8))
            .chain(b.iter().map(|v| (v, 2)))
            .chain(s.iter().map(|v| (v, 3)))
        {
            check_vertex(v, self.p).map_err(|_| GraphError::OverlappingSets)?;
            if mark[v] != 0 {
                return Err(GraphError::OverlappingSets);
            }
            mark[v] = tag;
        }
        let mut queue: Vec<usize> = a.to_vec();
        let mut visited = vec![false; self.p + 1];
        for &v in a {
            visited[v] = true;
        }
        while let Some(v) = queue.pop() {
            for &w in &self.adj[v] {
                if visited[w] || mark[w] == 3 {
                    continue;
                }
                if mark[w] == 2 {
                    return Ok(false);
                }
                visited[w] = true;
                queue.push(w);
            }
        }
        Ok(true)
    }
}

// ── Graph files ─────────────────────────────────────────────────────

/// Header of a graph file: `dag <p>` or `ugraph <p>`; subsequent lines hold
/// one edge `<i> <j>` each (for `dag`, meaning i → j). `#` starts a comment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Dag,
    UGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphFile {
    Dag(Dag),
    UGraph(UGraph),
}

/// Header and raw edge list of a graph file, before admission checks.
#[derive(Debug, Clone, PartialEq)]
pub struct RawGraph {
    pub kind: GraphKind,
    pub p: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Parses the header and raw edge list without constructing a graph, so
/// callers may relabel a convention-violating DAG before admission.
pub fn parse_graph_edges(text: &str) -> Result<RawGraph, GraphError> {
    let mut kind = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match kind {
            None => {
                let bad = || GraphError::Parse {
                    line: lineno + 1,
                    msg: "expected header `dag <p>` or `ugraph <p>`".into(),
                };
                if toks.len() != 2 {
                    return Err(bad());
                }
                let k = match toks[0] {
                    "dag" => GraphKind::Dag,
                    "ugraph" => GraphKind::UGraph,
                    _ => return Err(bad()),
                };
                let p: usize = toks[1].parse().map_err(|_| bad())?;
                kind = Some((k, p));
            }
            Some(_) => {
                if toks.len() != 2 {
                    return Err(GraphError::Parse {
                        line: lineno + 1,
                        msg: "expected an edge line `<i> <j>`".into(),
                    });
                }
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| GraphError::Parse {
                        line: lineno + 1,
                        msg: format!("invalid vertex `{t}`"),
                    })
                };
                edges.push((parse(toks[0])?, parse(toks[1])?));
            }
        }
    }
    match kind {
        Some((kind, p)) => Ok(RawGraph { kind, p, edges }),
        None => Err(GraphError::Parse {
            line: 1,
            msg: "empty graph file".into(),
        }),
    }
}

/// Parses and admits a graph file.
pub fn parse_graph_file(text: &str) -> Result<GraphFile, GraphError> {
    let raw = parse_graph_edges(text)?;
    match raw.kind {
        GraphKind::Dag => Ok(GraphFile::Dag(Dag::new(raw.p, &raw.edges)?)),
        GraphKind::UGraph => Ok(GraphFile::UGraph(UGraph::new(raw.p, &raw.edges)?)),
    }
}

impl Dag {
    pub fn to_graph_file(&self) -> String {
        let mut out = format!("dag {}\n", self.p);
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl UGraph {
    pub fn to_graph_file(&self) -> String {
        let mut out = format!("ugraph {}\n", self.p);
        for (u, w) in self.edges() {
            out.push_str(&format!("{u} {w}\n"));
        }
        out
    }
}

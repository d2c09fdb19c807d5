//! Digraphs, tournaments, strong components and Hamilton cycles.
//!
//! Vertices are iterated in declaration order everywhere, so every operation
//! here is deterministic for a fixed input.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dice::{die_name, validate_name};
use crate::error::{invalid, Error, Result};

/// A directed graph on named vertices without self-loops.
///
/// Both `(u, v)` and `(v, u)` may be present; a pair may also have no arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<bool>>,
}

impl Digraph {
    /// A graph with the given vertices and no arcs.
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            validate_name(name)?;
            if index.insert(name.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {name}")));
            }
        }
        let n = names.len();
        Ok(Digraph {
            names,
            index,
            adj: vec![vec![false; n]; n],
        })
    }

    /// A graph from vertex names and `(from, to)` arcs given by name.
    pub fn with_arcs<S: AsRef<str>>(vertices: &[S], arcs: &[(S, S)]) -> Result<Self> {
        let mut g = Digraph::new(vertices.iter().map(|v| v.as_ref().to_string()))?;
        for (u, v) in arcs {
            g.add_arc_by_name(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Vertices `0..n` named `A`, `B`, ... with no arcs.
    pub fn with_vertex_count(n: usize) -> Self {
        Digraph::new((0..n).map(die_name)).expect("generated names are valid")
    }

    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<()> {
        let n = self.len();
        if from >= n || to >= n {
            return Err(invalid(format!("arc ({from}, {to}) out of range")));
        }
        if from == to {
            return Err(invalid(format!("self-loop on {}", self.names[from])));
        }
        self.adj[from][to] = true;
        Ok(())
    }

    pub fn add_arc_by_name(&mut self, from: &str, to: &str) -> Result<()> {
        let u = self.require(from)?;
        let v = self.require(to)?;
        self.add_arc(u, v)
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| invalid(format!("unknown vertex {name}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.adj[from][to]
    }

    /// All arcs ordered by source, then target.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().flatten().filter(|&&a| a).count()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        let n = self.len();
        (0..n).all(|u| (u + 1..n).all(|v| self.adj[u][v] != self.adj[v][u]))
    }

    /// Unordered pairs with no arc in either direction.
    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adj[u][v] && !self.adj[v][u])
            .collect()
    }

    /// The subgraph induced by `vertices`, in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut g = Digraph::new(vertices.iter().map(|&v| self.names[v].clone()))
            .expect("names already validated");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                g.adj[i][j] = self.adj[u][v];
            }
        }
        g
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_digraph(self))
    }
}

/// A digraph with exactly one arc between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament(Digraph);

impl Tournament {
    pub fn new(g: Digraph) -> Result<Self> {
        if !g.is_tournament() {
            return Err(invalid("graph is not a tournament"));
        }
        Ok(Tournament(g))
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `u` beats `v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.0.has_arc(u, v)
    }

    pub fn induced(&self, vertices: &[usize]) -> Tournament {
        Tournament(self.0.induced(vertices))
    }
}

impl TryFrom<Digraph> for Tournament {
    type Error = Error;

    fn try_from(g: Digraph) -> Result<Self> {
        Tournament::new(g)
    }
}

impl AsRef<Digraph> for Tournament {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

/// Strong components and the acyclic quotient between them.
///
/// Components are listed in a topological order of the quotient (sources
/// first); ties go to the component holding the earliest-declared vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    dag: Digraph,
}

impl Condensation {
    /// Vertex sets, each in declaration order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Quotient graph; vertex `k` is component `k`.
    pub fn dag(&self) -> &Digraph {
        &self.dag
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Strongly connected components (Kosaraju, iterative).
pub fn strong_components(g: &Digraph) -> Condensation {
    let n = g.len();

    // First pass: finishing order on g.
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((u, next)) = stack.last_mut() {
            let u = *u;
            if let Some(v) = (*next..n).find(|&v| g.adj[u][v]) {
                *next = v + 1;
                if !visited[v] {
                    visited[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }

    // Second pass: reverse graph in decreasing finish time.
    let mut raw_of = vec![usize::MAX; n];
    let mut raw_count = 0;
    for &root in order.iter().rev() {
        if raw_of[root] != usize::MAX {
            continue;
        }
        raw_of[root] = raw_count;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for (v, owner) in raw_of.iter_mut().enumerate() {
                if g.adj[v][u] && *owner == usize::MAX {
                    *owner = raw_count;
                    stack.push(v);
                }
            }
        }
        raw_count += 1;
    }

    let mut members = vec![Vec::new(); raw_count];
    for v in 0..n {
        members[raw_of[v]].push(v);
    }
    let mut raw_adj = vec![vec![false; raw_count]; raw_count];
    for (u, v) in g.arcs() {
        if raw_of[u] != raw_of[v] {
            raw_adj[raw_of[u]][raw_of[v]] = true;
        }
    }

    // Kahn's algorithm, preferring the component with the smallest vertex.
    let mut indegree: Vec<usize> = (0..raw_count)
        .map(|c| (0..raw_count).filter(|&d| raw_adj[d][c]).count())
        .collect();
    let mut done = vec![false; raw_count];
    let mut topo = Vec::with_capacity(raw_count);
    for _ in 0..raw_count {
        let c = (0..raw_count)
            .filter(|&c| !done[c] && indegree[c] == 0)
            .min_by_key(|&c| members[c][0])
            .expect("quotient of strong components is acyclic");
        done[c] = true;
        topo.push(c);
        for d in 0..raw_count {
            if raw_adj[c][d] {
                indegree[d] -= 1;
            }
        }
    }

    let mut rank = vec![0; raw_count];
    for (k, &c) in topo.iter().enumerate() {
        rank[c] = k;
    }
    let components: Vec<Vec<usize>> = topo.iter().map(|&c| members[c].clone()).collect();
    let component_of: Vec<usize> = raw_of.iter().map(|&c| rank[c]).collect();
    let mut dag = Digraph::new((0..raw_count).map(|k| format!("C{k}"))).expect("valid names");
    for c in 0..raw_count {
        for d in 0..raw_count {
            if raw_adj[c][d] {
                dag.adj[rank[c]][rank[d]] = true;
            }
        }
    }
    Condensation {
        components,
        component_of,
        dag,
    }
}

/// Exactly one strong component.
pub fn is_strong(g: &Digraph) -> bool {
    strong_components(g).len() == 1
}

fn describe(g: &Digraph, vertices: &[usize]) -> String {
    let names: Vec<&str> = vertices.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

/// A directed Hamilton cycle of a strong tournament, starting at the
/// earliest-declared vertex.
///
/// Grows a cycle from the first 3-cycle found. An outside vertex is inserted
/// between consecutive cycle vertices `c -> v -> c'` when possible. When no
/// outside vertex fits, each one either beats or loses to the whole cycle, and
/// strongness guarantees an arc `u -> w` from a dominated `u` to a dominating
/// `w`, which are spliced in together as `c0 -> u -> w -> c1`.
pub fn hamilton_cycle(t: &Tournament) -> Result<Vec<usize>> {
    let n = t.len();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "a Hamilton cycle needs at least 3 vertices, got {n}"
        )));
    }
    let cond = strong_components(t.as_digraph());
    if cond.len() > 1 {
        let top = &cond.components()[0];
        return Err(Error::Precondition(format!(
            "tournament is not strong: component {} beats every other vertex",
            describe(t.as_digraph(), top)
        )));
    }

    let mut cycle = first_three_cycle(t).ok_or_else(|| {
        Error::Internal("strong tournament without a 3-cycle".into())
    })?;
    let mut on_cycle = vec![false; n];
    for &v in &cycle {
        on_cycle[v] = true;
    }

    while cycle.len() < n {
        let outside: Vec<usize> = (0..n).filter(|&v| !on_cycle[v]).collect();
        let len = cycle.len();
        let single = outside.iter().find_map(|&v| {
            (0..len)
                .find(|&p| t.beats(cycle[p], v) && t.beats(v, cycle[(p + 1) % len]))
                .map(|p| (v, p))
        });
        if let Some((v, p)) = single {
            cycle.insert(p + 1, v);
            on_cycle[v] = true;
            continue;
        }
        let (dominated, dominating): (Vec<usize>, Vec<usize>) =
            outside.iter().partition(|&&v| t.beats(cycle[0], v));
        let pair = dominated
            .iter()
            .find_map(|&u| dominating.iter().find(|&&w| t.beats(u, w)).map(|&w| (u, w)));
        let (u, w) = pair.ok_or_else(|| {
            Error::Internal("no splice arc found in a strong tournament".into())
        })?;
        cycle.insert(1, w);
        cycle.insert(1, u);
        on_cycle[u] = true;
        on_cycle[w] = true;
    }

    let start = cycle.iter().position(|&v| v == 0).expect("cycle covers all vertices");
    cycle.rotate_left(start);
    Ok(cycle)
}

fn first_three_cycle(t: &Tournament) -> Option<Vec<usize>> {
    let n = t.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if t.beats(i, j) && t.beats(j, k) && t.beats(k, i) {
                    return Some(vec![i, j, k]);
                }
                if t.beats(i, k) && t.beats(k, j) && t.beats(j, i) {
                    return Some(vec![i, k, j]);
                }
            }
        }
    }
    None
}

/// Whether a digraph's missing pairs can be oriented to make it strong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectability {
    Connectable,
    /// Every vertex in `from` has an arc to every vertex in `to`, and no arc
    /// goes back.
    DirectedCut { from: Vec<usize>, to: Vec<usize> },
    /// Two vertices with at most one arc between them.
    TwoVertices,
}

impl Connectability {
    pub fn is_connectable(&self) -> bool {
        matches!(self, Connectability::Connectable)
    }
}

struct Blocks {
    parent: Vec<usize>,
}

impl Blocks {
    fn new(n: usize) -> Self {
        Blocks {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            cur = std::mem::replace(&mut self.parent[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Decides strong connectability by the merge-quotient method, with a
/// witness cut when the answer is no.
///
/// Pairs with arcs both ways or no arc can never straddle a complete directed
/// cut, so they are merged; blocks with arcs in both directions between them
/// are merged until nothing changes. The quotient is then a tournament, and a
/// complete directed cut exists exactly when that tournament is not strong.
///
/// Two-vertex graphs are decided directly: only the 2-cycle is strong.
pub fn connectability(g: &Digraph) -> Connectability {
    let n = g.len();
    if n == 2 {
        return match (g.has_arc(0, 1), g.has_arc(1, 0)) {
            (true, true) => Connectability::Connectable,
            (true, false) => Connectability::DirectedCut {
                from: vec![0],
                to: vec![1],
            },
            (false, true) => Connectability::DirectedCut {
                from: vec![1],
                to: vec![0],
            },
            (false, false) => Connectability::TwoVertices,
        };
    }
    if n < 2 {
        return Connectability::Connectable;
    }

    let mut blocks = Blocks::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_arc(u, v) == g.has_arc(v, u) {
                blocks.union(u, v);
            }
        }
    }
    loop {
        let mut forward = HashMap::new();
        for (u, v) in g.arcs() {
            let (bu, bv) = (blocks.find(u), blocks.find(v));
            if bu != bv {
                forward.insert((bu, bv), (u, v));
            }
        }
        let two_way = forward
            .keys()
            .find(|&&(a, b)| forward.contains_key(&(b, a)))
            .copied();
        match two_way {
            Some((a, b)) => {
                blocks.union(a, b);
            }
            None => break,
        }
    }

    let roots: Vec<usize> = {
        let mut r: Vec<usize> = (0..n).map(|v| blocks.find(v)).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    if roots.len() < 2 {
        return Connectability::Connectable;
    }
    let slot: HashMap<usize, usize> = roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut quotient = Digraph::with_vertex_count(roots.len());
    for (u, v) in g.arcs() {
        let (bu, bv) = (slot[&blocks.find(u)], slot[&blocks.find(v)]);
        if bu != bv {
            quotient.adj[bu][bv] = true;
        }
    }
    let cond = strong_components(&quotient);
    if cond.len() == 1 {
        return Connectability::Connectable;
    }
    let top: Vec<usize> = cond.components()[0].clone();
    let (from, to): (Vec<usize>, Vec<usize>) =
        (0..n).partition(|&v| top.contains(&slot[&blocks.find(v)]));
    Connectability::DirectedCut { from, to }
}

/// See [`connectability`].
pub fn is_strongly_connectable(g: &Digraph) -> bool {
    connectability(g).is_connectable()
}

/// A uniformly random labeled tournament on `n` vertices named `A`, `B`, ...
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 {
        return Err(invalid("a tournament needs at least one vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(draw_tournament(n, &mut rng))
}

fn draw_tournament(n: usize, rng: &mut ChaCha8Rng) -> Tournament {
    let mut g = Digraph::with_vertex_count(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<bool>() {
                g.adj[u][v] = true;
            } else {
                g.adj[v][u] = true;
            }
        }
    }
    Tournament(g)
}

/// A random strong tournament: tournaments are drawn from one seeded stream
/// until a strong one appears.
pub fn random_strong_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 || n == 2 {
        return Err(invalid(format!("no strong tournament has {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let t = draw_tournament(n, &mut rng);
        if is_strong(t.as_digraph()) {
            return Ok(t);
        }
    }
}

/// A random digraph: each unordered pair independently gets no arc, one arc
/// either way, or both arcs, with equal odds.
pub fn random_digraph(n: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Digraph::with_vertex_count(n);
    for u in 0..n {
        for v in u + 1..n {
            match rng.gen_range(0..4) {
                0 => {}
                1 => g.adj[u][v] = true,
                2 => g.adj[v][u] = true,
                _ => {
                    g.adj[u][v] = true;
                    g.adj[v][u] = true;
                }
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[&str], arcs: &[(&str, &str)]) -> Digraph {
        Digraph::with_arcs(vertices, arcs).unwrap()
    }

    fn three_cycle() -> Digraph {
        graph(&["A", "B", "C"], &[("A", "B"), ("B", "C"), ("C", "A")])
    }

    fn transitive3() -> Digraph {
        graph(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")])
    }

    pub(crate) fn worked_tournament() -> Tournament {
        let g = graph(
            &["A", "B", "C", "D", "E"],
            &[
                ("A", "B"),
                ("B", "C"),
                ("C", "D"),
                ("D", "E"),
                ("E", "A"),
                ("A", "C"),
                ("B", "D"),
                ("B", "E"),
                ("C", "E"),
                ("A", "D"),
            ],
        );
        Tournament::new(g).unwrap()
    }

    /// Reachability by repeated squaring of the adjacency relation.
    fn reach(g: &Digraph) -> Vec<Vec<bool>> {
        let n = g.len();
        let mut r: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| u == v || g.has_arc(u, v)).collect())
            .collect();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Digraph::new(["a", "a"]).is_err());
        let mut g = Digraph::new(["a", "b"]).unwrap();
        assert!(g.add_arc_by_name("a", "a").is_err());
        assert!(g.add_arc_by_name("a", "z").is_err());
        assert!(Tournament::new(g).is_err());
    }

    #[test]
    fn components_of_three_cycle() {
        let c = strong_components(&three_cycle());
        assert_eq!(c.components(), &[vec![0, 1, 2]]);
        assert!(is_strong(&three_cycle()));
    }

    #[test]
    fn components_of_transitive() {
        let c = strong_components(&transitive3());
        assert_eq!(c.components(), &[vec![0], vec![1], vec![2]]);
        let dag = c.dag();
        assert!(dag.has_arc(0, 1) && dag.has_arc(0, 2) && dag.has_arc(1, 2));
        assert_eq!(dag.arc_count(), 3);
        assert!(!is_strong(&transitive3()));
    }

    #[test]
    fn components_match_reachability() {
        for seed in 0..40 {
            let g = random_digraph(7, seed);
            let r = reach(&g);
            let c = strong_components(&g);
            for (u, row) in r.iter().enumerate() {
                for (v, &forward) in row.iter().enumerate() {
                    let same = forward && r[v][u];
                    assert_eq!(same, c.component_of(u) == c.component_of(v));
                }
            }
            // Sources first: no arc from a later component to an earlier one.
            for (u, v) in g.arcs() {
                assert!(c.component_of(u) <= c.component_of(v));
            }
        }
    }

    #[test]
    fn worked_tournament_is_strong() {
        let t = worked_tournament();
        assert_eq!(strong_components(t.as_digraph()).len(), 1);
        assert_eq!(hamilton_cycle(&t).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn hamilton_of_three_cycle() {
        let t = Tournament::new(three_cycle()).unwrap();
        assert_eq!(hamilton_cycle(&t).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn hamilton_needs_strong() {
        let t = Tournament::new(transitive3()).unwrap();
        let err = hamilton_cycle(&t).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("{a}")));
        let one = Tournament::new(Digraph::new(["x"]).unwrap()).unwrap();
        assert!(hamilton_cycle(&one).is_err());
    }

    #[test]
    fn two_vertices() {
        let mut g = Digraph::new(["a", "b"]).unwrap();
        assert_eq!(connectability(&g), Connectability::TwoVertices);
        g.add_arc(0, 1).unwrap();
        assert!(!is_strongly_connectable(&g));
        g.add_arc(1, 0).unwrap();
        assert!(is_strongly_connectable(&g));
    }

    #[test]
    fn connectable_examples() {
        assert!(is_strongly_connectable(&three_cycle()));
        assert_eq!(
            connectability(&transitive3()),
            Connectability::DirectedCut {
                from: vec![0],
                to: vec![1, 2]
            }
        );
        assert!(is_strongly_connectable(&Digraph::new(["a", "b", "c"]).unwrap()));
        assert!(is_strongly_connectable(&Digraph::new(["a"]).unwrap()));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_tournament(6, 3).unwrap(), random_tournament(6, 3).unwrap());
        assert_eq!(random_tournament(1, 0).unwrap().len(), 1);
        for seed in 0..10 {
            let t = random_strong_tournament(6, seed).unwrap();
            assert!(t.as_digraph().is_tournament());
            assert!(is_strong(t.as_digraph()));
        }
        assert!(random_strong_tournament(2, 0).is_err());
        assert!(random_tournament(0, 0).is_err());
    }

    #[test]
    fn induced_keeps_arcs() {
        let t = worked_tournament();
        let sub = t.induced(&[0, 2, 4]);
        assert_eq!(sub.as_digraph().names(), &["A", "C", "E"]);
        assert!(sub.beats(0, 1) && sub.beats(1, 2) && sub.beats(2, 0));
    }
}

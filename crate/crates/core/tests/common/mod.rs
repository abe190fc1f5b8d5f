#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zd_labeling::graph::Edge;
use zd_labeling::{LabeledGraph, Modulus};

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Endpoint list of an unlabeled graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Shape {
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.n
    }

    /// Two-coloring by BFS, written independently of the library.
    pub fn is_bipartite(&self) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut color = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &y in &adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn with_labels(&self, d: u64, labels: &[Option<u64>]) -> LabeledGraph {
        let vertices = (0..self.n).map(|i| format!("v{i}")).collect();
        let edges = self
            .edges
            .iter()
            .zip(labels)
            .map(|(&(u, v), &label)| Edge { u, v, label })
            .collect();
        LabeledGraph::from_parts(Modulus::new(d).unwrap(), vertices, edges).unwrap()
    }

    /// Edge labels induced by a vertex labeling.
    pub fn induced(&self, d: u64, f: &[u64]) -> LabeledGraph {
        let labels: Vec<Option<u64>> = self.edges.iter().map(|&(u, v)| Some((f[u] + f[v]) % d)).collect();
        self.with_labels(d, &labels)
    }

    pub fn random_additive(&self, d: u64, rng: &mut TestRng) -> (LabeledGraph, Vec<u64>) {
        let f: Vec<u64> = (0..self.n).map(|_| rng.gen_range(0..d)).collect();
        (self.induced(d, &f), f)
    }

    pub fn random_labels(&self, d: u64, rng: &mut TestRng) -> LabeledGraph {
        let labels: Vec<Option<u64>> = self.edges.iter().map(|_| Some(rng.gen_range(0..d))).collect();
        self.with_labels(d, &labels)
    }
}

/// Random connected simple graph: a random spanning tree plus extra edges.
pub fn random_connected(n: usize, m: usize, rng: &mut TestRng) -> Shape {
    let max = n * (n - 1) / 2;
    assert!(m + 1 >= n && m <= max);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let (a, b) = (order[i], order[rng.gen_range(0..i)]);
        present.insert((a.min(b), a.max(b)));
        edges.push((a, b));
    }
    while edges.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && present.insert((a.min(b), a.max(b))) {
            edges.push((a, b));
        }
    }
    edges.shuffle(rng);
    Shape { n, edges }
}

/// Random connected simple graph with `n_lo <= n <= n_hi` and a random edge
/// count up to `max_m`.
pub fn random_connected_upto(n_lo: usize, n_hi: usize, max_m: usize, rng: &mut TestRng) -> Shape {
    let n = rng.gen_range(n_lo..=n_hi);
    let hi = max_m.min(n * (n - 1) / 2).max(n - 1);
    let m = rng.gen_range(n - 1..=hi);
    random_connected(n, m, rng)
}

/// Random multigraph: no self-loops, parallel edges and isolated vertices
/// allowed.
pub fn random_multigraph(n: usize, m: usize, rng: &mut TestRng) -> Shape {
    let edges = if n < 2 {
        Vec::new()
    } else {
        (0..m)
            .map(|_| {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                (a, b)
            })
            .collect()
    };
    Shape { n, edges }
}

/// All connected labeled simple graphs on exactly `n` vertices.
pub fn all_connected_labeled(n: usize) -> Vec<Shape> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| Shape {
            n,
            edges: pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect(),
        })
        .filter(Shape::is_connected)
        .collect()
}

fn bit(n: usize, a: usize, b: usize) -> u64 {
    let (a, b) = (a.min(b), a.max(b));
    1 << (a * n + b)
}

/// Lexicographically least adjacency mask over vertex orderings that sort by
/// (degree, sorted neighbour degrees); permutations only act within classes.
fn canonical(n: usize, mask: u64) -> u64 {
    let mut adj = vec![Vec::new(); n];
    for a in 0..n {
        for b in a + 1..n {
            if mask & bit(n, a, b) != 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    let key: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = adj[v].iter().map(|&w| adj[w].len()).collect();
            nd.sort_unstable();
            (adj[v].len(), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key[a].cmp(&key[b]));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if key[c[0]] == key[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    permute_classes(n, &classes, 0, &mut perm, mask, &mut best);
    best
}

fn permute_classes(n: usize, classes: &[Vec<usize>], c: usize, perm: &mut Vec<usize>, mask: u64, best: &mut u64) {
    if c == classes.len() {
        // perm[i] = old vertex placed at position i
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                if mask & bit(n, a, b) != 0 {
                    out |= bit(n, pos[a], pos[b]);
                }
            }
        }
        *best = (*best).min(out);
        return;
    }
    let mut class = classes[c].clone();
    heap_permutations(&mut class, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        permute_classes(n, classes, c + 1, perm, mask, best);
        perm.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    rec(k, items, f);
}

/// One representative of every isomorphism class of simple graphs on exactly
/// `n` vertices with at most `max_m` edges.
pub fn nonisomorphic_graphs(n: usize, max_m: usize) -> Vec<Shape> {
    assert!(n * n <= 64);
    let mut level: HashSet<u64> = HashSet::from([0]);
    let mut all: Vec<u64> = vec![0];
    for _ in 0..max_m {
        let mut next = HashSet::new();
        for &mask in &level {
            for a in 0..n {
                for b in a + 1..n {
                    if mask & bit(n, a, b) == 0 {
                        next.insert(canonical(n, mask | bit(n, a, b)));
                    }
                }
            }
        }
        let mut sorted: Vec<u64> = next.iter().copied().collect();
        sorted.sort_unstable();
        all.extend(sorted);
        level = next;
    }
    all.into_iter()
        .map(|mask| Shape {
            n,
            edges: (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| mask & bit(n, a, b) != 0)
                .collect(),
        })
        .collect()
}

/// Every vector `x` in `Z_d^m` with `A x ≡ 0`, by exhaustion.
pub fn brute_force_kernel(shape: &Shape, d: u64) -> HashSet<Vec<u64>> {
    let m = shape.edges.len();
    let total = d.pow(m as u32);
    let mut out = HashSet::new();
    let mut x = vec![0u64; m];
    let mut sums = vec![0u64; shape.n];
    for index in 0..total {
        let mut rest = index;
        for slot in x.iter_mut() {
            *slot = rest % d;
            rest /= d;
        }
        sums.iter_mut().for_each(|s| *s = 0);
        for (j, &(u, v)) in shape.edges.iter().enumerate() {
            sums[u] += x[j];
            sums[v] += x[j];
        }
        if sums.iter().all(|s| s % d == 0) {
            out.insert(x.clone());
        }
    }
    out
}

/// The Z_d-span of `gens`, by closure under adding each generator.
pub fn span(gens: &[Vec<u64>], m: usize, d: u64) -> HashSet<Vec<u64>> {
    let mut out = HashSet::from([vec![0u64; m]]);
    let mut queue: VecDeque<Vec<u64>> = VecDeque::from([vec![0u64; m]]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % d).collect();
            if out.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    out
}

/// gcd of the maximal minors of the 0/1 incidence matrix, by cofactor
/// expansion over `i128`.
pub fn brute_gcd_maximal_minors(shape: &Shape) -> u128 {
    let n = shape.n;
    let m = shape.edges.len();
    let k = n.min(m);
    if k == 0 {
        return 1;
    }
    let a: Vec<Vec<i128>> = (0..n)
        .map(|i| shape.edges.iter().map(|&(u, v)| i128::from(u == i || v == i)).collect())
        .collect();
    let mut g: u128 = 0;
    for rows in subsets(n, k) {
        for cols in subsets(m, k) {
            let sub: Vec<Vec<i128>> = rows.iter().map(|&r| cols.iter().map(|&c| a[r][c]).collect()).collect();
            g = gcd(g, laplace(&sub).unsigned_abs());
            if g == 1 {
                return 1;
            }
        }
    }
    g
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn laplace(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    let mut det = 0;
    for j in 0..n {
        if a[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * a[0][j] * laplace(&minor);
    }
    det
}

pub const CHORDED_SQUARE: &str = "d 4\nedge 1 2 1\nedge 2 3 0\nedge 3 4 1\nedge 1 4 0\nedge 2 4 1\n";

//! Property tests of the graph kernel, verifiers, file formats and solvers
//! against brute-force oracles.

use std::collections::HashSet;

use grid_ramsey::chromatic::{
    agreement_graph, chromatic_number, is_bipartite, proper_coloring, union_subgraph, Bipartition,
};
use grid_ramsey::cli::format::ColoringFile;
use grid_ramsey::constructions::{grid_from_rows, rows_from_grid};
use grid_ramsey::rng::{stream, uniform_grid, uniform_hyper};
use grid_ramsey::solve::{exact_f, exact_g, Checkpoint, ProblemSpec, SearchState, SolveOptions, Verdict};
use grid_ramsey::verify::{find_alternating_rectangle, verify_pq};
use grid_ramsey::{Color, ColorId, ColorTable, EdgePartition, GraphColoring, Rectangle, SimpleGraph};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn brute_chi(g: &SimpleGraph) -> usize {
    let n = g.n();
    (1..=n)
        .find(|&k| {
            let mut col = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| col[u] != col[v]) {
                    return true;
                }
                let mut i = 0;
                while i < n && col[i] + 1 == k {
                    col[i] = 0;
                    i += 1;
                }
                if i == n {
                    return false;
                }
                col[i] += 1;
            }
        })
        .unwrap_or(0)
}

fn coloring_strategy(max_n: usize, k: usize, r: usize) -> impl Strategy<Value = GraphColoring> {
    (k.max(1)..=max_n, any::<u64>()).prop_map(move |(n, seed)| uniform_hyper(n, k, r, &mut stream(seed, 0)).unwrap())
}

/// Lexicographically first p-set with fewer than q colors, by direct enumeration.
fn naive_pq(c: &GraphColoring, p: usize, q: usize) -> Option<Vec<usize>> {
    let n = c.n();
    let k = c.k();
    let psets = combos(n, p);
    psets.into_iter().find(|s| {
        let colors: HashSet<ColorId> = combos(p, k)
            .iter()
            .map(|idx| c.color_of(&idx.iter().map(|&i| s[i]).collect::<Vec<_>>()).unwrap())
            .collect();
        colors.len() < q
    })
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chromatic_number_matches_brute_force(g in graph_strategy(8)) {
        let res = chromatic_number(&g, 8);
        prop_assert_eq!(res.chi(), Some(brute_chi(&g)));
    }

    #[test]
    fn chromatic_number_is_monotone(g in graph_strategy(9), u in 0usize..9, v in 0usize..9) {
        let before = chromatic_number(&g, 9).chi().unwrap();
        let mut h = g.clone();
        if u < h.n() && v < h.n() && u != v {
            h.add_edge(u, v).unwrap();
        }
        let after = chromatic_number(&h, 9).chi().unwrap();
        prop_assert!(before <= after && after <= before + 1);
    }

    #[test]
    fn proper_coloring_agrees_with_chi(g in graph_strategy(8), r in 1usize..5) {
        let chi = brute_chi(&g);
        match proper_coloring(&g, r) {
            Some(c) => {
                prop_assert!(chi <= r);
                prop_assert!(g.is_proper(&c));
                prop_assert!(c.iter().all(|&x| x < r));
            }
            None => prop_assert!(chi > r),
        }
    }

    #[test]
    fn bipartite_iff_two_colorable(g in graph_strategy(10)) {
        let two = chromatic_number(&g, 2).at_most(2);
        match is_bipartite(&g) {
            Bipartition::TwoColoring(side) => {
                prop_assert!(two);
                prop_assert!(g.is_proper(&side));
            }
            Bipartition::OddCycle(cycle) => {
                prop_assert!(!two);
                prop_assert_eq!(cycle.len() % 2, 1);
                let distinct: HashSet<_> = cycle.iter().collect();
                prop_assert_eq!(distinct.len(), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn agreement_graph_is_symmetric(a in coloring_strategy(9, 2, 3), seed in any::<u64>()) {
        let b = uniform_hyper(a.n(), 2, 3, &mut stream(seed, 1)).unwrap();
        let ab = agreement_graph(&a, &b).unwrap();
        prop_assert_eq!(&ab, &agreement_graph(&b, &a).unwrap());
        for u in 0..a.n() {
            for v in u + 1..a.n() {
                prop_assert_eq!(ab.has_edge(u, v), a.value_of(&[u, v]) == b.value_of(&[u, v]));
            }
        }
    }

    #[test]
    fn class_unions_are_edge_unions(c in coloring_strategy(9, 2, 4), mask1 in 0u8..16, mask2 in 0u8..16) {
        let p = EdgePartition::new(c.n(), 4, c.ids().iter().map(|id| id.unwrap().0).collect()).unwrap();
        let set = |m: u8| (0..4).filter(|b| m >> b & 1 == 1).collect::<Vec<usize>>();
        let (j1, j2) = (set(mask1), set(mask2));
        let both = set(mask1 | mask2);
        let g1 = union_subgraph(&p, &j1).unwrap();
        let g2 = union_subgraph(&p, &j2).unwrap();
        let g = union_subgraph(&p, &both).unwrap();
        for u in 0..c.n() {
            for v in u + 1..c.n() {
                prop_assert_eq!(g.has_edge(u, v), g1.has_edge(u, v) || g2.has_edge(u, v));
            }
        }
    }

    #[test]
    fn verify_pq_matches_naive_graphs(c in coloring_strategy(10, 2, 3), p in 3usize..6, q in 2usize..5) {
        prop_assume!(p <= c.n() && q <= p * (p - 1) / 2);
        let got = verify_pq(&c, p, q).unwrap().map(|v| v.vertices);
        prop_assert_eq!(got, naive_pq(&c, p, q));
    }

    #[test]
    fn verify_pq_matches_naive_triples(c in coloring_strategy(8, 3, 3), q in 2usize..4) {
        prop_assume!(c.n() >= 4);
        let got = verify_pq(&c, 4, q).unwrap().map(|v| v.vertices);
        prop_assert_eq!(got, naive_pq(&c, 4, q));
    }

    #[test]
    fn rectangle_scan_matches_naive(m in 1usize..5, n in 1usize..6, r in 1usize..4, seed in any::<u64>()) {
        let g = uniform_grid(m, n, r, &mut stream(seed, 0));
        let mut first = None;
        'outer: for i in 0..m {
            for i2 in i + 1..m {
                for j in 0..n {
                    for j2 in j + 1..n {
                        if g.row(i, j, j2) == g.row(i2, j, j2) && g.col(i, i2, j) == g.col(i, i2, j2) {
                            first = Some(Rectangle::new(i, j, i2, j2));
                            break 'outer;
                        }
                    }
                }
            }
        }
        prop_assert_eq!(find_alternating_rectangle(&g), first);
    }

    #[test]
    fn rows_round_trip_through_grids(m in 1usize..5, n in 2usize..7, seed in any::<u64>()) {
        let mut rng = stream(seed, 0);
        let rows: Vec<GraphColoring> = (0..m).map(|_| uniform_hyper(n, 2, 3, &mut rng).unwrap()).collect();
        if let Ok(g) = grid_from_rows(&rows, 3) {
            let back = rows_from_grid(&g);
            prop_assert_eq!(back.len(), m);
            for (a, b) in rows.iter().zip(&back) {
                for u in 0..n {
                    for v in u + 1..n {
                        prop_assert_eq!(a.value_of(&[u, v]), b.value_of(&[u, v]));
                    }
                }
            }
        }
    }

    #[test]
    fn graph_files_round_trip(c in coloring_strategy(9, 2, 5)) {
        let f = ColoringFile::from_coloring(c.clone());
        let text = f.to_text();
        let back = ColoringFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        let ColoringFile::Graph(d) = back else { panic!("kind changed") };
        for u in 0..c.n() {
            for v in u + 1..c.n() {
                prop_assert_eq!(c.value_of(&[u, v]), d.value_of(&[u, v]));
            }
        }
    }

    #[test]
    fn hyper_files_round_trip(c in coloring_strategy(8, 3, 4), holes in proptest::collection::vec(any::<bool>(), 56)) {
        let mut partial = GraphColoring::empty(c.n(), 3, ColorTable::new()).unwrap();
        let mut i = 0;
        c.for_each_colored(|s, id| {
            if !holes[i % holes.len()] {
                partial.set(s, Color(vec![c.table().value(id).nested(), grid_ramsey::Part::set(1, 2)])).unwrap();
            }
            i += 1;
        });
        let text = ColoringFile::Hyper(partial.clone()).to_text();
        let back = ColoringFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn grid_files_round_trip(m in 1usize..4, n in 1usize..5, r in 1usize..4, seed in any::<u64>()) {
        let g = uniform_grid(m, n, r, &mut stream(seed, 0));
        let text = ColoringFile::Grid(g).to_text();
        let back = ColoringFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn checkpoints_round_trip(
        grid in any::<bool>(),
        a in 1usize..9, b in 1usize..9, r in 1usize..9,
        symmetry in any::<bool>(),
        nodes in any::<u64>(),
        path in proptest::collection::vec(0u32..9, 0..30),
    ) {
        let problem = if grid { ProblemSpec::Grid { m: a, n: b } } else { ProblemSpec::Hyper { n: a + 3, p: 3, q: 2, k: 2 } };
        let path: Vec<u32> = path.into_iter().map(|v| v % r as u32).collect();
        let cp = Checkpoint { problem, r, symmetry, state: SearchState { path, nodes } };
        let text = cp.to_text();
        let back = Checkpoint::parse(&text).unwrap();
        prop_assert_eq!(&back, &cp);
        prop_assert_eq!(back.to_text(), text);
    }
}

fn verdict(v: Verdict) -> usize {
    match v {
        Verdict::Exact(x) => x,
        Verdict::AboveLimit(l) => panic!("above limit {l}"),
    }
}

/// Some `r`-coloring of the `m x n` grid without alternating rectangles, by brute force.
fn brute_grid_exists(m: usize, n: usize, r: usize) -> bool {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            for j2 in j + 1..n {
                edges.push((0, i, j, j2));
            }
        }
    }
    for j in 0..n {
        for i in 0..m {
            for i2 in i + 1..m {
                edges.push((1, i, i2, j));
            }
        }
    }
    let idx = |e: (u8, usize, usize, usize)| edges.iter().position(|&x| x == e).unwrap();
    let mut rects = Vec::new();
    for i in 0..m {
        for i2 in i + 1..m {
            for j in 0..n {
                for j2 in j + 1..n {
                    rects.push([idx((0, i, j, j2)), idx((0, i2, j, j2)), idx((1, i, i2, j)), idx((1, i, i2, j2))]);
                }
            }
        }
    }
    let len = edges.len();
    let total = (r as u64).pow(len as u32);
    (0..total).any(|mut code| {
        let mut a = vec![0; len];
        for slot in a.iter_mut() {
            *slot = code % r as u64;
            code /= r as u64;
        }
        rects.iter().all(|q| !(a[q[0]] == a[q[1]] && a[q[2]] == a[q[3]]))
    })
}

#[test]
fn small_g_values_are_minimal() {
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 4)] {
        let v = verdict(exact_g(m, n, 6, SolveOptions::default()).unwrap().verdict);
        assert!(brute_grid_exists(m, n, v), "g({m},{n}) = {v} has no brute-force witness");
        assert!(v == 1 || !brute_grid_exists(m, n, v - 1), "g({m},{n}) < {v} by brute force");
    }
}

#[test]
fn symmetry_breaking_does_not_change_values() {
    let off = SolveOptions { symmetry: false, ..SolveOptions::default() };
    let on = SolveOptions::default();
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let a = exact_g(m, n, 6, on).unwrap();
        let b = exact_g(m, n, 6, off).unwrap();
        assert_eq!(a.verdict, b.verdict, "g({m},{n})");
        assert!(a.stats.nodes <= b.stats.nodes);
    }
    // K_4: (3,2) needs 2 colors, (3,3) needs 3, (4,6) needs 6
    for (p, q, want) in [(3, 2, 2), (3, 3, 3), (4, 6, 6)] {
        let a = exact_f(4, p, q, 2, 8, on).unwrap();
        let b = exact_f(4, p, q, 2, 8, off).unwrap();
        assert_eq!(a.verdict, Verdict::Exact(want), "f(4,{p},{q})");
        assert_eq!(a.verdict, b.verdict);
    }
}

#[test]
fn ramsey_three_three() {
    // a 2-coloring of K_5 avoids monochromatic triangles, none of K_6 does
    let five = exact_f(5, 3, 2, 2, 4, SolveOptions::default()).unwrap();
    assert_eq!(five.verdict, Verdict::Exact(2));
    let six = exact_f(6, 3, 2, 2, 4, SolveOptions::default()).unwrap();
    assert_eq!(six.verdict, Verdict::Exact(3));
}

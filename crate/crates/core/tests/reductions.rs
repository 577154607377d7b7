mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use updom_core::oracle::upper_domination_number;
use updom_core::pathdecomp::gadget_decomposition;
use updom_core::reductions::{
    csp_reduction_witness, gen_csp_reduction, gen_is_reduction, is_reduction_witness, CliquePartitionedIsInstance,
    CspInstance, CspReductionOutput, ReductionError,
};
use updom_core::{check_minimal, Graph};

/// All set partitions of `0..n` (restricted growth strings).
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn grow(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(v);
            grow(v + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![v]);
        grow(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    grow(0, n, &mut Vec::new(), &mut out);
    out
}

/// Every clique-partitioned source on `n` vertices: each set partition with
/// every choice of edges between different cliques.
fn all_sources(n: usize) -> Vec<CliquePartitionedIsInstance> {
    let mut out = Vec::new();
    for cliques in set_partitions(n) {
        let owner = |v: usize| cliques.iter().position(|c| c.contains(&v)).unwrap();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let (inside, across): (Vec<_>, Vec<_>) = pairs.into_iter().partition(|&(u, v)| owner(u) == owner(v));
        for mask in 0u32..1 << across.len() {
            let chosen = across.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let graph = Graph::from_edges(n, inside.iter().copied().chain(chosen)).unwrap();
            out.push(CliquePartitionedIsInstance {
                graph,
                cliques: cliques.clone(),
            });
        }
    }
    out
}

/// One vertex per clique with no edge between them, if any.
fn one_per_clique(inst: &CliquePartitionedIsInstance) -> Option<Vec<usize>> {
    fn pick(inst: &CliquePartitionedIsInstance, i: usize, chosen: &mut Vec<usize>) -> bool {
        if i == inst.k() {
            return true;
        }
        for &v in &inst.cliques[i] {
            if chosen.iter().all(|&u| !inst.graph.has_edge(u, v)) {
                chosen.push(v);
                if pick(inst, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    pick(inst, 0, &mut chosen).then_some(chosen)
}

#[test]
fn is_reduction_preserves_the_answer_on_all_small_sources() {
    let mut checked = 0;
    for n in 1..=3 {
        for inst in all_sources(n) {
            let out = gen_is_reduction(&inst, 5).unwrap();
            assert!(out.graph.n() <= 18);
            let has_is = one_per_clique(&inst).is_some();
            let gamma = upper_domination_number(&out.graph, 20).unwrap();
            assert_eq!(has_is, gamma >= 5 * inst.k(), "cliques {:?}", inst.cliques);
            checked += 1;
        }
    }
    // n=1: 1; n=2: 1 + 2; n=3: 1 + 3·4 + 8
    assert_eq!(checked, 1 + 3 + 21);
}

/// Random source with `k` cliques and a planted independent transversal.
fn planted_source<R: Rng>(k: usize, rng: &mut R) -> (CliquePartitionedIsInstance, Vec<usize>) {
    let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
    let n: usize = sizes.iter().sum();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cliques = Vec::new();
    let mut start = 0;
    for &s in &sizes {
        let mut c = order[start..start + s].to_vec();
        c.sort_unstable();
        cliques.push(c);
        start += s;
    }
    let planted: Vec<usize> = cliques.iter().map(|c| c[rng.gen_range(0..c.len())]).collect();
    let owner = |v: usize| cliques.iter().position(|c| c.contains(&v)).unwrap();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same = owner(u) == owner(v);
            let both_planted = planted.contains(&u) && planted.contains(&v);
            if same || (!both_planted && rng.gen_bool(0.5)) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(n, edges).unwrap();
    (CliquePartitionedIsInstance { graph, cliques }, planted)
}

#[test]
fn is_witnesses_at_scale() {
    let mut rng = common::rng(31);
    for t in 0..20 {
        let k = 1 + t % 5;
        let (inst, planted) = planted_source(k, &mut rng);
        for a in [2, 5, 9] {
            let out = gen_is_reduction(&inst, a).unwrap();
            let s = is_reduction_witness(&inst, a, &planted).unwrap();
            assert_eq!(s.size(), out.budget);
            assert_eq!(out.budget, a * k);
            assert_eq!(check_minimal(&out.graph, &s.set).unwrap(), s);
            assert_eq!(s.independent, s.set);
        }
    }
}

#[test]
fn is_reduction_structure() {
    let mut rng = common::rng(32);
    for t in 0..20 {
        let (inst, _) = planted_source(1 + t % 5, &mut rng);
        let a = 5;
        let out = gen_is_reduction(&inst, a).unwrap();
        let n = inst.graph.n();
        assert_eq!(out.graph.n(), a * n + inst.k());
        assert_eq!(out.graph.edge_count(), a * a * inst.graph.edge_count() + a * n);
        for (i, clique) in inst.cliques.iter().enumerate() {
            let mut expected: Vec<usize> = clique.iter().flat_map(|&u| out.block(u)).collect();
            expected.sort_unstable();
            assert_eq!(out.graph.neighbors(out.apexes[i]), expected.as_slice());
        }
        for u in 0..n {
            assert!(out.graph.is_independent(&out.block(u).collect::<Vec<_>>()));
        }
    }
}

#[test]
fn is_witness_rejections() {
    let (inst, _) = planted_source(3, &mut common::rng(33));
    let clique = &inst.cliques[0];
    if clique.len() >= 2 {
        assert!(matches!(
            is_reduction_witness(&inst, 5, &clique[..2]),
            Err(ReductionError::NotIndependent(..))
        ));
    }
    assert!(matches!(
        is_reduction_witness(&inst, 5, &[]),
        Err(ReductionError::WrongSize { expected: 3, actual: 0 })
    ));
}

fn random_csp(seed: u64, n: usize, q: usize, m: usize, accepted: usize) -> (CspInstance, Vec<u8>) {
    CspInstance::random_satisfiable(n, q, m, accepted, &mut common::rng(seed))
}

#[test]
fn csp_witnesses_at_scale() {
    let mut rng = common::rng(41);
    let mut largest = 0;
    for t in 0..20u64 {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=2.min(n));
        let m = rng.gen_range(1..=2);
        let accepted = rng.gen_range(1..=3);
        let (inst, assignment) = random_csp(t, n, q, m, accepted);
        let out = gen_csp_reduction(&inst).unwrap();
        let s = csp_reduction_witness(&out, &assignment).unwrap();
        let a = 4 * q + 2;
        let f = (2 * n + 1) * (4 * n + 1);
        assert_eq!(out.budget, f * m * (2 * n + a) + 2 * n);
        assert!(s.size() >= out.budget, "{} < {}", s.size(), out.budget);
        assert_eq!(check_minimal(&out.graph, &s.set).unwrap(), s);
        largest = largest.max(out.graph.n());
    }
    assert!(largest > 5_000, "largest target has {largest} vertices");
}

/// Edge counts of each construction rule, read off the graph.
fn edge_families(out: &CspReductionOutput) -> [usize; 6] {
    let main = out.main_part_size();
    let section_of = |v: usize| out.sections.iter().position(|s| s.vertices().contains(&v));
    let mut counts = [0usize; 6];
    for (u, v) in out.graph.edges() {
        let family = if v < main {
            0 // path
        } else {
            let s = &out.sections[section_of(v).unwrap()];
            let in_k = |x: usize| (s.k_start..s.l_start).contains(&x);
            let in_l = |x: usize| (s.l_start..s.apex).contains(&x);
            if u < main {
                assert!(in_k(v));
                1 // path to K
            } else if v == s.apex {
                assert!(in_l(u));
                5 // apex to L
            } else if in_k(u) && in_k(v) {
                2
            } else if in_l(u) && in_l(v) {
                3
            } else {
                assert!(in_k(u) && in_l(v));
                4 // K to L
            }
        };
        counts[family] += 1;
    }
    counts
}

#[test]
fn csp_reduction_structure() {
    for (seed, (n, q, m, accepted)) in [(1, 1, 1, 1), (2, 1, 2, 3), (2, 2, 1, 4), (3, 2, 2, 2), (3, 3, 1, 2)]
        .into_iter()
        .enumerate()
    {
        let (inst, _) = random_csp(seed as u64, n, q, m, accepted);
        let out = gen_csp_reduction(&inst).unwrap();
        out.check_structure().unwrap();
        let (a, f) = (4 * q + 2, (2 * n + 1) * (4 * n + 1));
        assert_eq!((out.a, out.f), (a, f));
        assert_eq!(out.main_part_size(), n * (4 * f * m + 6));
        assert_eq!(out.sections.len(), f * m);
        for s in &out.sections {
            assert_eq!(s.vertices().len(), 2 * a * s.accepted + 1);
        }
        let c = accepted;
        let sections = f * m;
        let clique = a * c * (a * c - 1) / 2;
        let expected = [
            n * (4 * f * m + 5),
            sections * q * c * 2 * a,
            sections * clique,
            sections * clique,
            sections * (a * c + a * a * c * (c - 1)),
            sections * a * c,
        ];
        assert_eq!(edge_families(&out), expected);
        assert_eq!(out.graph.edge_count(), out.expected_edge_count());
    }
}

#[test]
fn generators_are_deterministic() {
    let (inst, _) = random_csp(7, 2, 2, 2, 3);
    assert_eq!(gen_csp_reduction(&inst).unwrap(), gen_csp_reduction(&inst).unwrap());
    let (src, _) = planted_source(4, &mut common::rng(8));
    assert_eq!(gen_is_reduction(&src, 5).unwrap(), gen_is_reduction(&src, 5).unwrap());
}

#[test]
fn gadget_width_minus_n_is_constant_in_m() {
    for (n, q, c) in [(1, 1, 1), (1, 1, 6), (2, 1, 3), (2, 2, 2), (3, 2, 4), (3, 3, 1)] {
        let mut offsets = Vec::new();
        for m in 1..=3 {
            for seed in 0..2 {
                let (inst, _) = random_csp(100 * m as u64 + seed, n, q, m, c);
                let out = gen_csp_reduction(&inst).unwrap();
                let d = gadget_decomposition(&out).unwrap();
                let width = d.validate(&out.graph).unwrap();
                let a = 4 * q + 2;
                assert!(width <= n + 2 * a * 6usize.pow(q as u32) + 4);
                assert_eq!(width, n + 2 * a * c + 3);
                offsets.push(width - n);
            }
        }
        assert!(offsets.windows(2).all(|w| w[0] == w[1]), "{offsets:?}");
    }
}

#[test]
fn gadget_decomposition_rejects_tampered_metadata() {
    let (inst, _) = random_csp(3, 1, 1, 1, 2);
    let mut out = gen_csp_reduction(&inst).unwrap();
    out.budget += 1;
    assert!(gadget_decomposition(&out).is_err());
}

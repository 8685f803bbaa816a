use hypermatch::combinatorics::{binom, iter_bits, small_binomial, KSubsets};
use hypermatch::constructions::{is_saturated, saturate};
use hypermatch::formulas::{
    alpha_k, alpha_k_bounds, anti_ramsey_3, s_threshold, turan_3, turan_conjectured, Validity,
};
use hypermatch::oracle::{cross_intersecting_search, epsilon_contains, theta_good_vertices};
use hypermatch::rainbow::{
    build_h1_coloring, find_rainbow_matching, scan_perfect_matchings, EvenSplit, OddSplit,
};
use hypermatch::shifting::{is_dominance_closed, is_stable, shift, stabilize};
use hypermatch::{Count, EdgeColoring, EdgeMask, Exact, SetFamily, UniformHypergraph};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn pick(n: usize, k: usize, bits: u64) -> UniformHypergraph {
    let masks = KSubsets::new(n, k)
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, e)| e);
    UniformHypergraph::from_masks(n, k, masks).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (3..=max_n, 2..=3usize, any::<u64>()).prop_map(|(n, k, bits)| pick(n, k, bits))
}

fn three_graph(max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (3..=max_n, any::<u64>()).prop_map(|(n, bits)| pick(n, 3, bits))
}

fn brute_nu(edges: &[EdgeMask], used: EdgeMask) -> usize {
    let mut best = 0;
    for (i, &e) in edges.iter().enumerate() {
        if e & used == 0 {
            best = best.max(1 + brute_nu(&edges[i + 1..], used | e));
        }
    }
    best
}

fn brute_clique(h: &UniformHypergraph) -> usize {
    (1u64..1 << h.n())
        .filter(|s| s.count_ones() as usize >= h.k())
        .filter(|&s| {
            KSubsets::new(h.n(), h.k())
                .filter(|e| e & !s == 0)
                .all(|e| h.contains(e))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn int(v: Option<Count>) -> i64 {
    v.unwrap().to_i64().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matching_number_matches_exhaustive(h in graph(7)) {
        let nu = h.matching_number();
        prop_assert_eq!(nu, brute_nu(h.edges(), 0));
        let m = h.maximum_matching();
        prop_assert_eq!(m.size(), nu);
        prop_assert!(m.edges().iter().all(|&e| h.contains(e)));
        for s in 0..=nu + 1 {
            prop_assert_eq!(h.has_matching_of_size(s), nu >= s);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_number_is_monotone(h in graph(7), drop in any::<u64>(), v in 1usize..=3) {
        let sub: Vec<EdgeMask> = h.edges().iter().copied().enumerate()
            .filter(|(i, _)| drop >> i & 1 == 1).map(|(_, e)| e).collect();
        let smaller = h.remove_edges(&sub).unwrap();
        prop_assert!(smaller.matching_number() <= h.matching_number());
        let fewer = h.remove_vertices(&[v]).unwrap();
        prop_assert!(fewer.matching_number() <= h.matching_number());
    }

    #[test]
    fn clique_number_matches_exhaustive(n in 3usize..=6, k in 2usize..=3, bits in any::<u64>(), extra in any::<u64>()) {
        let h = pick(n, k, bits);
        let w = h.clique_number();
        prop_assert_eq!(w, brute_clique(&h));
        prop_assert!(pick(n, k, bits | extra).clique_number() >= w);
    }

    #[test]
    fn degree_sum_counts_incidences(h in graph(7)) {
        let total: usize = (1..=h.n()).map(|v| h.degree(v).unwrap()).sum();
        prop_assert_eq!(total, h.k() * h.edge_count());
        for v in 1..=h.n() {
            prop_assert_eq!(h.neighborhood(v).unwrap().len(), h.degree(v).unwrap());
        }
    }

    #[test]
    fn text_round_trip(h in graph(7)) {
        let text = h.to_text();
        let back = UniformHypergraph::from_text(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, h);
    }

    #[test]
    fn shifts_preserve_size_and_never_raise_nu(h in three_graph(7), i in 1usize..7, d in 1usize..6) {
        let j = i + d;
        prop_assume!(j <= h.n());
        let shifted = shift(&h, i, j).unwrap();
        prop_assert_eq!(shifted.edge_count(), h.edge_count());
        prop_assert!(shifted.matching_number() <= h.matching_number());
    }

    #[test]
    fn stabilization_is_idempotent_and_closed(h in three_graph(7)) {
        let st = stabilize(&h);
        prop_assert_eq!(st.edge_count(), h.edge_count());
        prop_assert!(st.matching_number() <= h.matching_number());
        prop_assert_eq!(&stabilize(&st), &st);
        prop_assert!(is_stable(&st));
        prop_assert!(is_dominance_closed(&st));
        prop_assert_eq!(is_stable(&h), is_dominance_closed(&h));
    }

    #[test]
    fn saturation_is_saturated(h in three_graph(7), s in 1usize..=2) {
        prop_assume!(h.matching_number() <= s);
        let sat = saturate(&h, s).unwrap();
        prop_assert!(h.edges().iter().all(|&e| sat.contains(e)));
        prop_assert!(is_saturated(&sat, s));
        prop_assert!(sat.matching_number() <= s);
    }

    #[test]
    fn epsilon_and_theta_are_monotone(a in three_graph(6), bits in any::<u64>(), p in 0i64..40, q in 0i64..40) {
        let b = pick(a.n(), 3, bits);
        let (lo, hi) = (p.min(q), p.max(q));
        let small = Exact::new(lo.into(), 200.into());
        let large = Exact::new(hi.into(), 200.into());
        if epsilon_contains(&a, &b, &small).unwrap() {
            prop_assert!(epsilon_contains(&a, &b, &large).unwrap());
        }
        let few = theta_good_vertices(&a, &b, &small).unwrap();
        let many = theta_good_vertices(&a, &b, &large).unwrap();
        prop_assert!(few.iter().all(|v| many.contains(v)));
        prop_assert!(epsilon_contains(&a, &a, &Exact::from_integer(0.into())).unwrap());
    }

    #[test]
    fn rainbow_search_agrees_with_scan(colors in proptest::collection::vec(0u32..6, 20)) {
        let c = EdgeColoring::new(6, 3, colors).unwrap();
        let scan = scan_perfect_matchings(&c, 1).unwrap();
        prop_assert_eq!(scan.examined, 10);
        let found = find_rainbow_matching(&c, 2);
        prop_assert_eq!(found.is_some(), scan.witness.is_some());
        if let Some(m) = found {
            prop_assert!(c.is_rainbow(&m).unwrap());
            prop_assert!(m.is_perfect(6));
        }
    }
}

#[test]
fn complete_graph_clique_is_everything() {
    for n in 3..=8 {
        for k in 2..=3 {
            let h = UniformHypergraph::complete(n, k).unwrap();
            assert_eq!(h.clique_number(), n);
            assert_eq!(h.matching_number(), n / k);
        }
    }
}

#[test]
fn odd_traces_partition_the_balanced_edges() {
    for (n, k) in [(9, 3), (12, 3), (15, 5)] {
        let split = OddSplit::new(n, k).unwrap();
        assert_eq!(split.traces.len(), small_binomial(k + 1, k.div_ceil(2)) as usize / 2);
        for (i, a) in split.traces.iter().enumerate() {
            for b in &split.traces[i + 1..] {
                assert_ne!(a & b, 0);
            }
        }
        let c = build_h1_coloring(n, k).unwrap();
        let inner = small_binomial(n - k - 1, k) as u32;
        for (e, color) in c.iter() {
            let t = (e & split.w).count_ones() as usize;
            if t == 0 {
                assert!((1..=inner).contains(&color));
            } else if t == k.div_ceil(2) {
                assert!(color > inner);
            } else {
                assert_eq!(color, 0);
            }
        }
    }
}

#[test]
fn even_classes_are_pairwise_cross_intersecting() {
    for (n, k) in [(12, 4), (16, 4), (18, 6)] {
        let split = EvenSplit::new(n, k).unwrap();
        assert_eq!(split.traces.len(), small_binomial(k, k / 2 - 1) as usize);
        let class = |b: EdgeMask| [b | split.x, split.w & !(b | split.x)];
        for (i, &bi) in split.traces.iter().enumerate() {
            let own = class(bi);
            // the two traces of one class are complementary in W
            assert_eq!(own[0] & own[1], 0);
            for &bt in &split.traces[i + 1..] {
                for x in class(bi) {
                    for y in class(bt) {
                        assert_ne!(x & y, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn turan_3_matches_the_general_formula() {
    for n in 3..=200u64 {
        for s in 1..=n / 3 {
            let general = int(turan_conjectured(n, 3, s).integer());
            assert_eq!(general, int(turan_3(n, s + 1).integer()), "n={n} s={s}");
            if n >= 3 * (s + 1) {
                let (nn, ss) = (n as i64, s as i64);
                let cover = binom(nn, 3) - binom(nn - ss, 3);
                let clique = binom(3 * ss + 2, 3);
                assert_eq!(Count::from(general), cover.max(clique));
            }
        }
    }
}

#[test]
fn anti_ramsey_exceeds_turan_by_two_or_five() {
    for s in 3..=20u64 {
        for n in 3 * s..=8 * s {
            let ar = int(anti_ramsey_3(n, s).integer());
            let ex = int(turan_3(n, s - 1).integer());
            let gap = if n == 3 * s { 5 } else { 2 };
            assert_eq!(ar - ex, gap, "n={n} s={s}");
            assert_ne!(anti_ramsey_3(n, s).valid, Validity::OutOfRange);
        }
    }
}

#[test]
fn alpha_lies_between_its_bounds() {
    let tol = Exact::new(1.into(), Count::from(10u64).pow(12));
    for k in 3..=10 {
        let (lo, hi) = alpha_k(k, &tol).unwrap();
        let (lower, upper) = alpha_k_bounds(k);
        assert!(lower < lo && hi < upper, "k={k}");
    }
}

#[test]
fn threshold_stays_within_one_of_alpha_n() {
    let alpha3 = (-3.0 + 321f64.sqrt()) / 52.0;
    for n in (30u64..=3_000).step_by(97).chain([30_000]) {
        let s0 = s_threshold(n, 3).unwrap() as f64;
        assert!((s0 - alpha3 * n as f64).abs() < 1.0, "n={n} s0={s0}");
    }
}

fn canonical(m: usize, family: &[EdgeMask]) -> Vec<EdgeMask> {
    let mut best: Option<Vec<EdgeMask>> = None;
    let mut perm: Vec<usize> = (0..m).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut image: Vec<EdgeMask> = family
            .iter()
            .map(|&e| iter_bits(e).map(|b| 1u64 << p[b.trailing_zeros() as usize]).sum())
            .collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    });
    best.unwrap()
}

fn permute(p: &mut Vec<usize>, i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        visit(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, visit);
        p.swap(i, j);
    }
}

#[test]
fn extremal_cross_intersecting_pairs_are_the_two_known_shapes() {
    let (m, l) = (5, 2);
    let result = cross_intersecting_search(m, l).unwrap();
    assert_eq!(result.value, 8);
    let star = SetFamily::from_sets(m, l, (2..=m).map(|x| vec![1, x])).unwrap();
    let single = SetFamily::from_sets(m, l, [vec![1, 2]]).unwrap();
    let meeting = SetFamily::from_masks(m, l, KSubsets::new(m, l).filter(|e| e & 0b11 != 0)).unwrap();
    let shapes = [
        (canonical(m, star.members()), canonical(m, star.members())),
        (canonical(m, single.members()), canonical(m, meeting.members())),
    ];
    assert!(!result.extremal.is_empty());
    for (a, b) in &result.extremal {
        assert!(a.is_cross_intersecting(b).unwrap());
        assert_eq!((a.len() + b.len()) as u64, result.value);
        let pair = (canonical(m, a.members()), canonical(m, b.members()));
        let swapped = (pair.1.clone(), pair.0.clone());
        assert!(
            shapes.contains(&pair) || shapes.contains(&swapped),
            "unexpected extremal pair {a:?} / {b:?}"
        );
    }
}

#[test]
fn perfect_lower_bound_meets_ar3_once_the_clique_term_wins() {
    use hypermatch::formulas::lower_bound_perfect;
    for s in 3..=120u64 {
        let n = 3 * s;
        let lb = int(lower_bound_perfect(n, 3).unwrap().integer());
        let ar = int(anti_ramsey_3(n, s).integer());
        let (nn, ss) = (n as i64, s as i64);
        let clique_wins = binom(3 * ss - 4, 3) >= binom(nn, 3) - binom(nn - ss + 2, 3);
        assert_eq!(lb == ar, clique_wins, "n={n}");
        assert!(lb <= ar);
    }
    assert_eq!(int(anti_ramsey_3(9, 3).integer()), 33);
    assert_eq!(int(lower_bound_perfect(9, 3).unwrap().integer()), 15);
}

#[test]
fn small_two_class_colorings_have_no_rainbow_perfect_matching() {
    use hypermatch::combinatorics::perfect_matching_count;
    use hypermatch::rainbow::{build_h2_coloring, certify_no_rainbow_perfect_matching_threads};
    for (n, k, even) in [(12, 4, true), (15, 5, false), (15, 3, false)] {
        let c = if even { build_h2_coloring(n, k) } else { build_h1_coloring(n, k) }.unwrap();
        let cert = certify_no_rainbow_perfect_matching_threads(&c, 4).unwrap();
        assert!(cert.verdict, "n={n} k={k}");
        assert_eq!(Count::from(cert.search_size), perfect_matching_count(n, k));
    }
}

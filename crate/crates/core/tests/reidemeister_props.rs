use knotlab::diagram::Perturbation;
use knotlab::invariants::invariant_tuple;
use knotlab::seifert::seifert_circles;
use knotlab::{Crossing, PlanarDiagram};
use proptest::prelude::*;

fn samples() -> Vec<PlanarDiagram> {
    let fixture = include_str!("data/knotinfo_upto10.txt");
    fixture
        .lines()
        .filter(|l| !l.starts_with('#'))
        .step_by(9)
        .map(|line| {
            let pd = line.rsplit('|').next().unwrap();
            let crossings = pd
                .split(';')
                .map(|x| {
                    let v: Vec<u32> = x.split(',').map(|s| s.parse().unwrap()).collect();
                    Crossing::new(v[0], v[1], v[2], v[3])
                })
                .collect();
            PlanarDiagram::from_crossings(crossings).unwrap()
        })
        .chain([PlanarDiagram::unknot(), PlanarDiagram::trefoil()])
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perturbation_preserves_invariants(idx in 0usize..30, seed in any::<u64>(), steps in 1usize..30) {
        let all = samples();
        let pd = &all[idx % all.len()];
        let before = invariant_tuple(pd).unwrap();
        let after_pd = pd.reidemeister_perturb(&Perturbation::Seeded { seed, steps }).unwrap();
        let report = after_pd.validate();
        prop_assert!(report.ok, "{}", report.summary());
        prop_assert!(after_pd.crossing_count() <= pd.crossing_count() + 8);
        prop_assert_eq!(invariant_tuple(&after_pd).unwrap(), before);
        let s = seifert_circles(&after_pd).unwrap();
        prop_assert_eq!(s.seifert_graph.len(), after_pd.crossing_count());
        prop_assert!(s.graph_is_connected());
    }

    #[test]
    fn mirror_is_an_involution(idx in 0usize..30, seed in any::<u64>()) {
        let all = samples();
        let pd = all[idx % all.len()]
            .reidemeister_perturb(&Perturbation::Seeded { seed, steps: 5 })
            .unwrap();
        prop_assert_eq!(pd.mirror().unwrap().mirror().unwrap(), pd.clone());
        prop_assert_eq!(pd.mirror().unwrap().writhe().unwrap(), -pd.writhe().unwrap());
    }

    #[test]
    fn pd_text_round_trips(idx in 0usize..30, seed in any::<u64>()) {
        let all = samples();
        let pd = all[idx % all.len()]
            .reidemeister_perturb(&Perturbation::Seeded { seed, steps: 8 })
            .unwrap();
        let back = PlanarDiagram::parse_pd(&pd.to_pd_string()).unwrap();
        prop_assert_eq!(back, pd);
    }
}

#[test]
fn r3_moves_occur_and_preserve_invariants() {
    use knotlab::diagram::Move;
    // count how often an explicit R3 applies somewhere along random walks
    let mut applied = 0;
    for pd in samples() {
        let before = invariant_tuple(&pd).unwrap();
        for seed in 0..20u64 {
            let d = pd.reidemeister_perturb(&Perturbation::Seeded { seed, steps: 6 }).unwrap();
            let n = d.crossing_count();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if let Ok(e) = d.reidemeister_perturb(&Perturbation::Moves(vec![Move::R3 {
                            crossings: [a, b, c],
                        }])) {
                            applied += 1;
                            assert!(e.validate().ok);
                            assert_eq!(invariant_tuple(&e).unwrap(), before);
                            assert_eq!(e.crossing_count(), n);
                        }
                    }
                }
            }
        }
    }
    assert!(applied > 10, "only {applied} R3 moves applied");
}

use knotlab::branched::{
    branch_equations, build_bf, carries_closed_surface, has_positive_solution_bounded, persistence_certificate,
    transversely_orientable, BranchCurve, BranchedSurfaceModel, Relation, Sector, Verdict,
};
use proptest::prelude::*;

fn relation(b: bool) -> Relation {
    if b {
        Relation::Opposite
    } else {
        Relation::Same
    }
}

fn model(sectors: u32, curves: &[(u32, u32, u32, bool, bool)]) -> BranchedSurfaceModel {
    BranchedSurfaceModel {
        sectors: (0..sectors).map(|id| Sector { id, euler_characteristic: -1 }).collect(),
        branch_curves: curves
            .iter()
            .enumerate()
            .map(|(i, &(m, a, b, ra, rb))| BranchCurve {
                id: i as u32,
                merged_side: m,
                sheet_sides: [a, b],
                self_intersections: 0,
                orientation_relation: [relation(ra), relation(rb)],
            })
            .collect(),
        ..Default::default()
    }
}

fn toy() -> impl Strategy<Value = BranchedSurfaceModel> {
    (1u32..=3).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n, 0..n, any::<bool>(), any::<bool>()), 0..=3)
            .prop_map(move |curves| model(n, &curves))
    })
}

/// Renames sectors by `perm` and reverses the curve order.
fn relabel(m: &BranchedSurfaceModel, perm: &[u32]) -> BranchedSurfaceModel {
    let mut out = m.clone();
    for s in &mut out.sectors {
        s.id = perm[s.id as usize] + 10;
    }
    for c in &mut out.branch_curves {
        c.merged_side = perm[c.merged_side as usize] + 10;
        c.sheet_sides = c.sheet_sides.map(|s| perm[s as usize] + 10);
        c.id += 100;
    }
    out.sectors.reverse();
    out.branch_curves.reverse();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn solver_matches_enumeration(m in toy()) {
        let a = branch_equations(&m);
        prop_assert_eq!(carries_closed_surface(&m), has_positive_solution_bounded(&a, m.sectors.len(), 8));
    }

    #[test]
    fn orientability_ignores_labels(m in toy(), shuffle in Just(()).prop_perturb(|_, mut rng| {
        let mut p = vec![0u32, 1, 2];
        for i in (1..3).rev() {
            p.swap(i, (rng.next_u32() as usize) % (i + 1));
        }
        p
    })) {
        let n = m.sectors.len();
        let perm: Vec<u32> = shuffle.iter().copied().filter(|&x| (x as usize) < n).collect();
        let r = relabel(&m, &perm);
        prop_assert_eq!(transversely_orientable(&m), transversely_orientable(&r));
        prop_assert_eq!(carries_closed_surface(&m), carries_closed_surface(&r));
    }

    #[test]
    fn model_text_round_trips(m in toy()) {
        prop_assert_eq!(BranchedSurfaceModel::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn verdict_is_the_conjunction(g in 0u32..=10, certified in any::<bool>(), xings in 0u32..2, flip in any::<bool>()) {
        let mut m = build_bf(g);
        m.branch_curves[0].self_intersections = xings;
        if flip {
            m.branch_curves[0].orientation_relation[0] = Relation::Opposite;
        }
        let r = persistence_certificate(&m, certified).unwrap();
        let all = r.branch_curve_embedded
            && r.carries_no_closed_surface
            && r.transversely_orientable
            && r.disks_on_distinct_components
            && r.incompressibility_certified;
        prop_assert_eq!(r.verdict == Verdict::PersistentlyLaminar, all);
        prop_assert_eq!(r.branch_curve_embedded, xings == 0);
        prop_assert_eq!(r.transversely_orientable, !flip);
        prop_assert_eq!(r.verdict == Verdict::EssentialOnlyUnknown, r.combinatorial_checks_pass() && !certified);
    }
}

#[test]
fn bf_family_passes_every_check() {
    for g in 0..=10 {
        let m = build_bf(g);
        let r = persistence_certificate(&m, true).unwrap();
        assert!(r.combinatorial_checks_pass(), "g = {g}");
        assert_eq!(r.horizontal_boundary_euler_characteristic, 2 * r.euler_characteristic);
        assert!(m.horizontal_boundary.iter().all(|b| b.genus == g + 1 && b.circles == 1));
    }
}

#[test]
fn no_curves_is_orientable_and_carries_everything() {
    let m = model(3, &[]);
    assert!(transversely_orientable(&m));
    assert!(carries_closed_surface(&m));
}

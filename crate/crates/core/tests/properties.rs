use dyck_peaks::bijections::{
    apply_cf_phi, apply_cf_phi_inverse, apply_f, apply_f_inverse, complement_phi, gamma,
    reverse_theta,
};
use dyck_peaks::path::{
    below_up_count, diagonal_crossings, path_from_peaks, peak_coordinates, LatticePoint, Step,
    StepWord,
};
use dyck_peaks::stats::stat_record;
use proptest::prelude::*;

fn any_path(max_n: usize) -> impl Strategy<Value = StepWord> {
    (1..=max_n).prop_flat_map(|n| {
        let mut steps = vec![Step::Up; n];
        steps.extend(vec![Step::Down; n]);
        Just(steps)
            .prop_shuffle()
            .prop_map(|s| StepWord::new(s).unwrap())
    })
}

proptest! {
    #[test]
    fn peaks_determine_the_path(p in any_path(20)) {
        let peaks = peak_coordinates(&p);
        prop_assume!(!peaks.is_empty());
        prop_assert_eq!(path_from_peaks(p.semilength(), &peaks).unwrap(), p);
    }

    #[test]
    fn below_and_weakly_above_up_steps_sum_to_n(p in any_path(20)) {
        let verts: Vec<LatticePoint> = p.vertices();
        let above = p
            .steps()
            .iter()
            .zip(&verts)
            .filter(|(s, v)| **s == Step::Up && v.y >= v.x)
            .count();
        prop_assert_eq!(below_up_count(p.steps()) + above, p.semilength());
    }

    #[test]
    fn involutions(p in any_path(20)) {
        prop_assert_eq!(complement_phi(&complement_phi(&p)), p.clone());
        prop_assert_eq!(reverse_theta(&reverse_theta(&p)), p.clone());
        prop_assert_eq!(gamma(&gamma(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn gamma_complements_the_class(p in any_path(20)) {
        let n = p.semilength();
        let q = gamma(&p).unwrap();
        let (a, b) = (stat_record(&p).unwrap(), stat_record(&q).unwrap());
        prop_assert_eq!(b.m, n - a.m);
        prop_assert_eq!(b.peaks, n - a.peaks);
        prop_assert_eq!(b.first, a.first.flip());
        prop_assert_eq!(b.last, a.last.flip());
        prop_assert_eq!(diagonal_crossings(&q), diagonal_crossings(&p));
    }

    #[test]
    fn f_round_trip(p in any_path(16)) {
        let n = p.semilength();
        let r = stat_record(&p).unwrap();
        prop_assume!(r.first == Step::Up && (2..n).contains(&r.m));
        let q = apply_f(&p).unwrap();
        let s = stat_record(&q).unwrap();
        prop_assert_eq!((s.m, s.peaks, s.first, s.last), (r.m - 1, r.peaks, Step::Up, r.last));
        prop_assert_eq!(apply_f_inverse(&q).unwrap(), p);
    }

    #[test]
    fn cf_phi_round_trip(p in any_path(16)) {
        let n = p.semilength();
        let r = stat_record(&p).unwrap();
        prop_assume!(r.first != r.last && (2..n).contains(&r.m));
        let q = apply_cf_phi(&p).unwrap();
        prop_assert_eq!(stat_record(&q).unwrap().m, r.m - 1);
        prop_assert_eq!(apply_cf_phi_inverse(&q).unwrap(), p);
    }
}

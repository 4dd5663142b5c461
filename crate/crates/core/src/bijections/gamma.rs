use crate::path::{path_from_peaks, peak_coordinates, LatticePoint, PeakList, StepWord};

use super::BijectionError;

/// Peak-complement map: the new peak x-set is `{0..n-1} \ X` and the new
/// y-set is `{1..n} \ Y`, paired in increasing order. Sends `(n, m, k)` to
/// `(n, n-m, n-k)` and is an involution.
pub fn gamma(path: &StepWord) -> Result<StepWord, BijectionError> {
    let n = path.semilength();
    if n == 0 {
        return Err(BijectionError::EmptyPath);
    }
    let peaks = peak_coordinates(path);
    let mut in_x = vec![false; n];
    let mut in_y = vec![false; n + 1];
    for p in peaks.points() {
        in_x[p.x] = true;
        in_y[p.y] = true;
    }
    let xs = (0..n).filter(|&x| !in_x[x]);
    let ys = (1..=n).filter(|&y| !in_y[y]);
    let complement = xs.zip(ys).map(|(x, y)| LatticePoint::new(x, y)).collect();
    // complements of strictly increasing sets of equal size are again
    // strictly increasing and of equal size n - k
    let complement = PeakList::new(n, complement).expect("complement peak list is valid");
    Ok(path_from_peaks(n, &complement).expect("validated above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;
    use crate::stats::stat_record;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    #[test]
    fn golden_pair() {
        let p = w("UUDUUDDDDDUUDUUUDUDD");
        let q = gamma(&p).unwrap();
        assert_eq!(q.to_string(), "DDUDUUDUUDUUDDDDUDUU");
        let pts: Vec<(usize, usize)> = peak_coordinates(&q)
            .points()
            .iter()
            .map(|p| (p.x, p.y))
            .collect();
        assert_eq!(pts, vec![(2, 1), (3, 3), (4, 5), (5, 7), (9, 8)]);
        let r = stat_record(&q).unwrap();
        assert_eq!(
            (r.n, r.m, r.peaks, r.first, r.last),
            (10, 7, 5, crate::Step::Down, crate::Step::Up)
        );
        assert_eq!(gamma(&q).unwrap(), p);
    }

    #[test]
    fn staircase_and_small() {
        assert_eq!(gamma(&w("UDUDUD")).unwrap(), w("DDDUUU"));
        let q = gamma(&w("UUDD")).unwrap();
        assert_eq!(q, w("DUDU"));
        let r = stat_record(&q).unwrap();
        assert_eq!((r.n, r.m, r.peaks), (2, 2, 1));
        assert_eq!(gamma(&StepWord::empty()), Err(BijectionError::EmptyPath));
    }
}

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::bijections::{self, BijectionError, BijectionId, FPrimeCase};
use crate::enumeration::{EnumError, PathIter, DEFAULT_MAX_N};
use crate::path::{diagonal_crossings, is_dyck, is_negative_dyck, Step, StepWord};
use crate::stats::{stat_record, StatRecord};

use super::{Counterexample, Sweep, Target, VerifyError, VerifyReport};

use Step::{Down as D, Up as U};

pub type MapFn = fn(&StepWord) -> Result<StepWord, BijectionError>;

/// The maps a suite exercises. Tests swap in deliberately broken versions to
/// confirm that the sweeps catch them.
#[derive(Clone, Copy)]
pub struct MapSet {
    pub phi: MapFn,
    pub theta: MapFn,
    pub gamma: MapFn,
    pub f: MapFn,
    pub f_inv: MapFn,
    pub g: MapFn,
    pub g_inv: MapFn,
    pub cf_phi: MapFn,
    pub cf_phi_inv: MapFn,
    pub tau: MapFn,
    pub tau_inv: MapFn,
    pub classify: fn(&StepWord) -> Result<FPrimeCase, BijectionError>,
}

impl Default for MapSet {
    fn default() -> Self {
        MapSet {
            phi: |p| Ok(bijections::complement_phi(p)),
            theta: |p| Ok(bijections::reverse_theta(p)),
            gamma: bijections::gamma,
            f: bijections::apply_f,
            f_inv: bijections::apply_f_inverse,
            g: bijections::apply_g,
            g_inv: bijections::apply_g_inverse,
            cf_phi: bijections::apply_cf_phi,
            cf_phi_inv: bijections::apply_cf_phi_inverse,
            tau: bijections::apply_tau,
            tau_inv: bijections::apply_tau_inverse,
            classify: bijections::classify_fprime_case,
        }
    }
}

pub fn verify_bijection(id: BijectionId, n_max: usize) -> Result<VerifyReport, VerifyError> {
    verify_bijection_with(&MapSet::default(), id, n_max)
}

pub fn verify_bijection_with(
    maps: &MapSet,
    id: BijectionId,
    n_max: usize,
) -> Result<VerifyReport, VerifyError> {
    if n_max == 0 {
        return Err(VerifyError::EmptyRange);
    }
    if n_max > DEFAULT_MAX_N {
        return Err(EnumError::ResourceBound {
            n: n_max,
            max: DEFAULT_MAX_N,
        }
        .into());
    }
    let sweep = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut ctx = Ctx::new(n, maps);
            match id {
                BijectionId::Phi => ctx.phi(),
                BijectionId::Theta => ctx.theta(),
                BijectionId::Gamma => ctx.gamma(),
                BijectionId::F | BijectionId::FInv => ctx.lowering(),
                BijectionId::G | BijectionId::GInv => ctx.excursion(),
                BijectionId::CfPhi | BijectionId::CfPhiInv => ctx.union(),
                BijectionId::Tau | BijectionId::TauInv => ctx.single_return(),
            }
            ctx.sweep
        })
        .reduce(Sweep::default, Sweep::merge);
    Ok(VerifyReport::from_sweep(
        Target::Bijection(id),
        n_max,
        sweep,
    ))
}

/// Membership in cases a to e computed by direct search over all splits of
/// `U·S·D·Q`, without the maximal-prefix scans the classifier uses.
/// Outside `first = U`, `1 <= m <= n-2` every entry is false.
pub fn fprime_case_predicates(path: &StepWord) -> [bool; 5] {
    let mut out = [false; 5];
    let s = path.steps();
    let n = path.semilength();
    let m = crate::path::below_up_count(s);
    if s.first() != Some(&U) || m < 1 || m + 2 > n {
        return out;
    }
    // U·S·D with S Dyck is a prime Dyck factor, so j is the first return
    let Some(j) = (1..s.len()).find(|&j| s[j] == D && is_dyck(&s[1..j])) else {
        return out;
    };
    let inner_empty = j == 1;
    let q = &s[j + 1..];
    let q_up = q.first() == Some(&U);
    let nm_split = (1..=q.len()).any(|i| is_negative_dyck(&q[..i]) && is_dyck(&q[i..]));
    match (inner_empty, q_up) {
        (false, true) => out[0] = true,
        (false, false) => out[1] = true,
        (true, true) => out[2] = true,
        (true, false) if nm_split => out[4] = true,
        (true, false) => out[3] = true,
    }
    out
}

/// `N·M·D·U` with `N` nonempty negative Dyck and `M` nonempty Dyck, by
/// search over every split point.
pub fn hat_du_predicate(path: &StepWord) -> bool {
    let s = path.steps();
    let len = s.len();
    if len < 2 || s[len - 2..] != [D, U] {
        return false;
    }
    let body = &s[..len - 2];
    (1..body.len()).any(|i| is_negative_dyck(&body[..i]) && is_dyck(&body[i..]))
}

/// The image of `τ`: a Dyck path that neither starts with `UD` nor is prime.
fn tau_image_predicate(path: &StepWord) -> bool {
    let s = path.steps();
    if !is_dyck(s) || s.len() < 4 || s[..2] == [U, D] {
        return false;
    }
    // prime iff the only return to the diagonal is at the end
    (2..s.len()).step_by(2).any(|i| is_dyck(&s[..i]))
}

type Cls = (usize, usize, Step, Step);

fn cls(r: &StatRecord) -> Cls {
    (r.m, r.peaks, r.first, r.last)
}

struct Ctx<'a> {
    n: usize,
    maps: &'a MapSet,
    paths: Vec<(StepWord, StatRecord)>,
    sweep: Sweep,
}

impl<'a> Ctx<'a> {
    fn new(n: usize, maps: &'a MapSet) -> Self {
        let paths = PathIter::new(n)
            .map(|p| {
                let r = stat_record(&p).expect("n >= 1");
                (p, r)
            })
            .collect();
        Ctx {
            n,
            maps,
            paths,
            sweep: Sweep::default(),
        }
    }

    fn check(&mut self, ok: bool, p: &StepWord, r: &StatRecord, detail: impl FnOnce() -> String) {
        let n = self.n;
        self.sweep.check(ok, || Counterexample {
            n,
            m: Some(r.m),
            k: Some(r.peaks),
            word: Some(p.clone()),
            detail: detail(),
        });
    }

    fn count(&mut self, ok: bool, m: usize, k: usize, detail: impl FnOnce() -> String) {
        let n = self.n;
        self.sweep.check(ok, || Counterexample {
            n,
            m: Some(m),
            k: Some(k),
            word: None,
            detail: detail(),
        });
    }

    /// Applies `map`, recording a failure when it errors.
    fn apply(
        &mut self,
        name: &str,
        map: MapFn,
        p: &StepWord,
        r: &StatRecord,
    ) -> Option<(StepWord, StatRecord)> {
        match map(p) {
            Ok(q) => match stat_record(&q) {
                Ok(qr) if qr.n == self.n => Some((q, qr)),
                _ => {
                    self.check(false, p, r, || {
                        format!("{name} changed the semilength: {q}")
                    });
                    None
                }
            },
            Err(e) => {
                self.check(false, p, r, || {
                    format!("{name} rejected an in-domain path: {e}")
                });
                None
            }
        }
    }

    /// Records a failure if `q` was already produced from another input.
    fn injective(
        &mut self,
        seen: &mut HashMap<StepWord, StepWord>,
        name: &str,
        p: &StepWord,
        r: &StatRecord,
        q: StepWord,
    ) {
        let clash = seen.get(&q).cloned();
        self.check(clash.is_none(), p, r, || {
            format!(
                "{name} is not injective: {q} is also the image of {}",
                clash.unwrap_or_default()
            )
        });
        seen.entry(q).or_insert_with(|| p.clone());
    }

    fn paths(&self) -> Vec<(StepWord, StatRecord)> {
        self.paths.clone()
    }

    fn phi(&mut self) {
        let n = self.n;
        for (p, r) in self.paths() {
            let Some((q, qr)) = self.apply("phi", self.maps.phi, &p, &r) else {
                continue;
            };
            let back = (self.maps.phi)(&q);
            self.check(back.as_ref() == Ok(&p), &p, &r, || {
                "phi is not an involution".into()
            });
            self.check(
                qr.m == n - r.m
                    && qr.valleys == r.peaks
                    && qr.double_ascents == r.double_descents
                    && qr.first == r.first.flip()
                    && qr.last == r.last.flip(),
                &p,
                &r,
                || format!("phi class law fails: image {q}"),
            );
            self.rotation(&p, &r);
        }
    }

    fn theta(&mut self) {
        let n = self.n;
        for (p, r) in self.paths() {
            let Some((q, qr)) = self.apply("theta", self.maps.theta, &p, &r) else {
                continue;
            };
            let back = (self.maps.theta)(&q);
            self.check(back.as_ref() == Ok(&p), &p, &r, || {
                "theta is not an involution".into()
            });
            self.check(
                qr.m == n - r.m
                    && qr.peaks == r.valleys
                    && qr.double_ascents == r.double_ascents
                    && qr.first == r.last
                    && qr.last == r.first,
                &p,
                &r,
                || format!("theta class law fails: image {q}"),
            );
            self.rotation(&p, &r);
        }
    }

    /// `φ∘θ` keeps `m` and swaps double ascents with double descents.
    fn rotation(&mut self, p: &StepWord, r: &StatRecord) {
        let q = (self.maps.theta)(p).and_then(|t| (self.maps.phi)(&t));
        let ok = match &q {
            Ok(q) => stat_record(q).is_ok_and(|qr| {
                qr.m == r.m
                    && qr.double_ascents == r.double_descents
                    && qr.double_descents == r.double_ascents
                    && qr.peaks == r.peaks
            }),
            Err(_) => false,
        };
        self.check(ok, p, r, || {
            "phi(theta(P)) does not swap double ascents and descents".into()
        });
    }

    fn gamma(&mut self) {
        let n = self.n;
        let mut seen = HashMap::new();
        for (p, r) in self.paths() {
            let Some((q, qr)) = self.apply("gamma", self.maps.gamma, &p, &r) else {
                continue;
            };
            let back = (self.maps.gamma)(&q);
            self.check(back.as_ref() == Ok(&p), &p, &r, || {
                "gamma is not an involution".into()
            });
            self.check(
                qr.m == n - r.m
                    && qr.peaks == n - r.peaks
                    && qr.first == r.first.flip()
                    && qr.last == r.last.flip(),
                &p,
                &r,
                || {
                    format!(
                        "gamma class law fails: image {q} has m={} k={}",
                        qr.m, qr.peaks
                    )
                },
            );
            self.check(
                diagonal_crossings(&q) == diagonal_crossings(&p),
                &p,
                &r,
                || format!("gamma moves the diagonal crossings: image {q}"),
            );
            self.injective(&mut seen, "gamma", &p, &r, q);
        }
    }

    fn lowering(&mut self) {
        let n = self.n;
        let maps = *self.maps;
        // (m, k, last) -> (sources at m+1, case a-d targets at m, case e at m)
        let mut tally: BTreeMap<(usize, usize, Step), [u64; 3]> = BTreeMap::new();
        let mut seen_f = HashMap::new();
        let mut seen_inv = HashMap::new();
        for (p, r) in self.paths() {
            if r.first != U {
                continue;
            }
            if (2..n).contains(&r.m) {
                tally.entry((r.m - 1, r.peaks, r.last)).or_default()[0] += 1;
                if let Some((q, qr)) = self.apply("f", maps.f, &p, &r) {
                    self.check(
                        (qr.m, qr.peaks, qr.first, qr.last) == (r.m - 1, r.peaks, U, r.last),
                        &p,
                        &r,
                        || format!("f class law fails: image {q} has m={} k={}", qr.m, qr.peaks),
                    );
                    let preds = fprime_case_predicates(&q);
                    self.check(!preds[4], &p, &r, || format!("f image {q} is in case e"));
                    let back = (maps.f_inv)(&q);
                    self.check(back.as_ref() == Ok(&p), &p, &r, || {
                        format!("f-inv(f(P)) != P via {q}: {back:?}")
                    });
                    self.injective(&mut seen_f, "f", &p, &r, q);
                }
            }
            if (1..n - 1).contains(&r.m) {
                let preds = fprime_case_predicates(&p);
                let holding: Vec<usize> = (0..5).filter(|&i| preds[i]).collect();
                self.check(holding.len() == 1, &p, &r, || {
                    format!("case predicates {preds:?} do not pick exactly one case")
                });
                let case = (maps.classify)(&p);
                let agrees = matches!(&case, Ok(c) if holding == [c.index()]);
                self.check(agrees, &p, &r, || {
                    format!("classifier says {case:?}, direct search says {holding:?}")
                });
                if let Ok(c) = &case {
                    self.check(reassemble(c) == p, &p, &r, || {
                        format!("case {} parts do not reassemble", c.letter())
                    });
                }
                if preds[4] {
                    tally.entry((r.m, r.peaks, r.last)).or_default()[2] += 1;
                    self.check(r.last == D, &p, &r, || {
                        "case e path ends with an up step".into()
                    });
                    let res = (maps.f_inv)(&p);
                    self.check(res == Err(BijectionError::NotInImage), &p, &r, || {
                        format!("f-inv on a case e path gave {res:?}")
                    });
                } else {
                    tally.entry((r.m, r.peaks, r.last)).or_default()[1] += 1;
                    if let Some((q, qr)) = self.apply("f-inv", maps.f_inv, &p, &r) {
                        self.check(
                            (qr.m, qr.peaks, qr.first, qr.last) == (r.m + 1, r.peaks, U, r.last),
                            &p,
                            &r,
                            || format!("f-inv class law fails: image {q}"),
                        );
                        let fwd = (maps.f)(&q);
                        self.check(fwd.as_ref() == Ok(&p), &p, &r, || {
                            format!("f(f-inv(P)) != P via {q}: {fwd:?}")
                        });
                        self.injective(&mut seen_inv, "f-inv", &p, &r, q);
                    }
                }
            }
        }
        for (&(m, k, last), &[sources, image, hat]) in &tally {
            // f bijects level m+1 onto cases a-d at level m, class by class
            self.count(sources == image, m, k, || {
                format!("last={last}: {sources} paths at m+1 but {image} case a-d paths at m")
            });
            if last == U {
                // p^UU_{n,m+1,k} = p^UU_{n,m,k}
                self.count(hat == 0 && sources == image, m, k, || {
                    format!("UU count at m+1 is {sources}, at m is {}", image + hat)
                });
            }
        }
    }

    fn excursion(&mut self) {
        let n = self.n;
        let maps = *self.maps;
        let mut hat_ud: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        let mut hat_du: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        let mut seen_g = HashMap::new();
        let mut seen_inv = HashMap::new();
        for (p, r) in self.paths() {
            if fprime_case_predicates(&p)[4] {
                *hat_ud.entry((r.m, r.peaks)).or_default() += 1;
                if let Some((q, qr)) = self.apply("g", maps.g, &p, &r) {
                    self.check(
                        cls(&qr) == (r.m + 1, r.peaks - 1, D, U) && hat_du_predicate(&q),
                        &p,
                        &r,
                        || format!("g image {q} is not in the hat DU class at (m+1, k-1)"),
                    );
                    let back = (maps.g_inv)(&q);
                    self.check(back.as_ref() == Ok(&p), &p, &r, || {
                        format!("g-inv(g(P)) != P via {q}: {back:?}")
                    });
                    self.injective(&mut seen_g, "g", &p, &r, q);
                }
            }
            if (r.first, r.last) == (D, U) && (2..n).contains(&r.m) {
                let hat = hat_du_predicate(&p);
                if hat {
                    *hat_du.entry((r.m - 1, r.peaks + 1)).or_default() += 1;
                }
                match (maps.g_inv)(&p) {
                    Ok(q) => {
                        let qr = stat_record(&q).ok();
                        let ok =
                            hat && qr.as_ref().is_some_and(|qr| {
                                (qr.m, qr.peaks, qr.first, qr.last) == (r.m - 1, r.peaks + 1, U, D)
                            }) && fprime_case_predicates(&q)[4];
                        self.check(ok, &p, &r, || {
                            format!("g-inv image {q} is not a case e path at (m-1, k+1)")
                        });
                        let fwd = (maps.g)(&q);
                        self.check(fwd.as_ref() == Ok(&p), &p, &r, || {
                            format!("g(g-inv(P)) != P via {q}: {fwd:?}")
                        });
                        self.injective(&mut seen_inv, "g-inv", &p, &r, q);
                    }
                    Err(e) => {
                        self.check(!hat && e == BijectionError::NotInHatDU, &p, &r, || {
                            format!("g-inv rejected the path with {e}")
                        });
                    }
                }
            }
        }
        let keys: Vec<_> = hat_ud.keys().chain(hat_du.keys()).copied().collect();
        for (m, k) in keys {
            let (a, b) = (hat_ud.get(&(m, k)), hat_du.get(&(m, k)));
            self.count(a == b, m, k, || {
                format!("{a:?} case e paths but {b:?} hat DU paths at (m+1, k-1)")
            });
        }
    }

    fn union(&mut self) {
        let n = self.n;
        let maps = *self.maps;
        let mut sizes: BTreeMap<(usize, usize), [u64; 2]> = BTreeMap::new();
        let mut seen = HashMap::new();
        let mut seen_inv = HashMap::new();
        let mut add = |m: usize, k: usize, side: usize| {
            if (1..n - 1).contains(&m) {
                sizes.entry((m, k)).or_default()[side] += 1;
            }
        };
        for (_, r) in &self.paths {
            match (r.first, r.last) {
                (D, U) => {
                    if r.m >= 1 {
                        add(r.m - 1, r.peaks, 0);
                    }
                    add(r.m, r.peaks, 1);
                }
                (U, D) => {
                    if r.m >= 1 {
                        add(r.m - 1, r.peaks - 1, 0);
                    }
                    add(r.m, r.peaks - 1, 1);
                }
                _ => {}
            }
        }
        for ((m, k), [src, dst]) in sizes {
            self.count(src == dst, m, k, || {
                format!("union at m+1 has {src} paths, union at m has {dst}")
            });
        }
        if n < 3 {
            return;
        }
        for (p, r) in self.paths() {
            let mixed = r.first != r.last;
            if mixed && (2..n).contains(&r.m) {
                let Some((q, qr)) = self.apply("cf-phi", maps.cf_phi, &p, &r) else {
                    continue;
                };
                let hat = hat_du_predicate(&p);
                let e = fprime_case_predicates(&q)[4];
                let expected = match (r.first, hat) {
                    (U, _) => (r.m - 1, r.peaks, U, D),
                    (D, true) => (r.m - 1, r.peaks + 1, U, D),
                    (D, false) => (r.m - 1, r.peaks, D, U),
                };
                let case_ok = match (r.first, hat) {
                    (U, _) => !e,
                    (D, true) => e,
                    (D, false) => true,
                };
                self.check(cls(&qr) == expected && case_ok, &p, &r, || {
                    format!("cf-phi image {q} is in the wrong part of the union")
                });
                let back = (maps.cf_phi_inv)(&q);
                self.check(back.as_ref() == Ok(&p), &p, &r, || {
                    format!("cf-phi-inv(cf-phi(P)) != P via {q}: {back:?}")
                });
                self.injective(&mut seen, "cf-phi", &p, &r, q);
            }
            if mixed && (1..n - 1).contains(&r.m) {
                let Some((q, qr)) = self.apply("cf-phi-inv", maps.cf_phi_inv, &p, &r) else {
                    continue;
                };
                let ok = qr.m == r.m + 1 && qr.first != qr.last;
                self.check(ok, &p, &r, || {
                    format!("cf-phi-inv image {q} is outside the union at m+1")
                });
                let fwd = (maps.cf_phi)(&q);
                self.check(fwd.as_ref() == Ok(&p), &p, &r, || {
                    format!("cf-phi(cf-phi-inv(P)) != P via {q}: {fwd:?}")
                });
                self.injective(&mut seen_inv, "cf-phi-inv", &p, &r, q);
            }
        }
    }

    fn single_return(&mut self) {
        let n = self.n;
        let maps = *self.maps;
        let mut sources: BTreeMap<usize, u64> = BTreeMap::new();
        let mut dyck: BTreeMap<usize, u64> = BTreeMap::new();
        let mut seen = HashMap::new();
        let mut seen_inv = HashMap::new();
        for (p, r) in self.paths() {
            let ud = (r.first, r.last) == (U, D);
            if ud && r.m == 1 {
                *sources.entry(r.peaks).or_default() += 1;
                if let Some((q, qr)) = self.apply("tau", maps.tau, &p, &r) {
                    self.check(
                        cls(&qr) == (0, r.peaks, U, D) && tau_image_predicate(&q),
                        &p,
                        &r,
                        || format!("tau image {q} is not a Dyck path with S, Q nonempty"),
                    );
                    let back = (maps.tau_inv)(&q);
                    self.check(back.as_ref() == Ok(&p), &p, &r, || {
                        format!("tau-inv(tau(P)) != P via {q}: {back:?}")
                    });
                    self.injective(&mut seen, "tau", &p, &r, q);
                }
            }
            if r.m == 0 {
                *dyck.entry(r.peaks).or_default() += 1;
                let image = tau_image_predicate(&p);
                match (maps.tau_inv)(&p) {
                    Ok(q) => {
                        let ok =
                            image && stat_record(&q).is_ok_and(|qr| cls(&qr) == (1, r.peaks, U, D));
                        self.check(ok, &p, &r, || {
                            format!("tau-inv image {q} is not in P^UD at m=1")
                        });
                        let fwd = (maps.tau)(&q);
                        self.check(fwd.as_ref() == Ok(&p), &p, &r, || {
                            format!("tau(tau-inv(P)) != P via {q}: {fwd:?}")
                        });
                        self.injective(&mut seen_inv, "tau-inv", &p, &r, q);
                    }
                    Err(e) => self.check(!image, &p, &r, || {
                        format!("tau-inv rejected the path with {e}")
                    }),
                }
            }
        }
        if n < 2 {
            return;
        }
        // paths starting UD are UD·S', prime ones are U·S'·D, with S' Dyck
        // of semilength n-1
        let prev: Vec<StatRecord> = PathIter::new(n - 1)
            .filter_map(|p| stat_record(&p).ok())
            .filter(|r| r.m == 0)
            .collect();
        for k in 0..n {
            let got = sources.get(&(k + 1)).copied().unwrap_or(0);
            let whole = dyck.get(&(k + 1)).copied().unwrap_or(0);
            let removed = prev
                .iter()
                .filter(|r| r.peaks == k || r.peaks == k + 1)
                .count() as u64;
            self.count(whole.checked_sub(removed) == Some(got), 1, k, || {
                format!("|P^UD_(n,1,k+1)| = {got} but {whole} - {removed} Dyck paths qualify")
            });
        }
    }
}

fn reassemble(case: &FPrimeCase) -> StepWord {
    let (u, d) = (&[U][..], &[D][..]);
    match case {
        FPrimeCase::CaseA { inner, tail } => StepWord::concat(&[u, inner.steps(), d, tail.steps()]),
        FPrimeCase::CaseB {
            inner,
            excursion,
            tail,
        } => StepWord::concat(&[u, inner.steps(), d, excursion.steps(), tail.steps()]),
        FPrimeCase::CaseC { dyck, tail } => StepWord::concat(&[u, d, dyck.steps(), tail.steps()]),
        FPrimeCase::CaseD {
            negative,
            dyck,
            excursion,
            tail,
        } => StepWord::concat(&[
            u,
            d,
            negative.steps(),
            dyck.steps(),
            excursion.steps(),
            tail.steps(),
        ]),
        FPrimeCase::CaseE { negative, dyck } => {
            StepWord::concat(&[u, d, negative.steps(), dyck.steps()])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    #[test]
    fn predicates_on_examples() {
        assert_eq!(
            fprime_case_predicates(&w("UDUDDU")),
            [false, false, true, false, false]
        );
        assert_eq!(
            fprime_case_predicates(&w("UUDDUDDU")),
            [true, false, false, false, false]
        );
        assert_eq!(
            fprime_case_predicates(&w("UDDUUDDUUD")),
            [false, false, false, true, false]
        );
        assert_eq!(
            fprime_case_predicates(&w("UDDUUD")),
            [false, false, false, false, true]
        );
        assert_eq!(fprime_case_predicates(&w("UUDD")), [false; 5]);
        assert!(hat_du_predicate(&w("DUUDDU")));
        assert!(!hat_du_predicate(&w("DUDUDU")));
        assert!(!hat_du_predicate(&w("DDUUDU")));
        assert!(tau_image_predicate(&w("UUDDUD")));
        assert!(!tau_image_predicate(&w("UUUDDD")));
        assert!(!tau_image_predicate(&w("UDUUDD")));
    }

    #[test]
    fn every_suite_passes_small() {
        for id in BijectionId::ALL {
            let r = verify_bijection(id, 6).unwrap();
            assert!(r.passed(), "{}", r.to_text());
            assert!(r.checked_cases > 0, "{id}");
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(
            verify_bijection(BijectionId::F, 0).unwrap_err(),
            VerifyError::EmptyRange
        );
        assert!(matches!(
            verify_bijection(BijectionId::F, 15),
            Err(VerifyError::Enumeration(EnumError::ResourceBound { .. }))
        ));
    }
}

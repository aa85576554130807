use rayon::prelude::*;
use squareice::fschur::{vanishing_check, verify_main_theorem_with, Target};
use squareice::lattice::{
    check_symmetry, enumerate_states, gt_to_state, partition_function_in, state_to_gt,
    BoundarySpec, RectWeights, Strategy,
};
use squareice::shapes::{enumerate_gt, enumerate_staircases, gt_to_staircase, staircase_to_gt};
use squareice::yangbaxter::{
    star_triangle_sides_with, verify_star_triangle_with, BoundarySextuple, CrossingWeights,
};
use squareice::Partition;

use crate::report::{CheckRecord, Report};

/// Limits for [`verify_all`]: every partition with `1..=max_n` parts, each at most `max_part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_part: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 3,
            max_part: 3,
        }
    }
}

/// Both weight tables; the defaults are the ones the identities hold for.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Weights {
    pub rect: RectWeights,
    pub cross: CrossingWeights,
}

pub fn main_check(l: &Partition, w: &Weights) -> CheckRecord {
    CheckRecord::timed("main", format!("λ={l}"), || match verify_main_theorem_with(
        l,
        Strategy::ViaGt,
        &w.rect,
    ) {
        Ok(c) => {
            let z =
                partition_function_in(&BoundarySpec::for_partition(l), Strategy::ViaGt, &w.rect)
                    .map(|z| z.render_canonical())
                    .unwrap_or_default();
            (
                c.passed(),
                vec![
                    ("z", z),
                    ("lhs", c.lhs.render_canonical()),
                    ("rhs", c.rhs.render_canonical()),
                ],
            )
        }
        Err(e) => (false, vec![("error", e.to_string())]),
    })
}

pub fn symmetry_check(l: &Partition, w: &Weights) -> CheckRecord {
    CheckRecord::timed("symmetry", format!("λ={l}"), || {
        let z = partition_function_in(&BoundarySpec::for_partition(l), Strategy::ViaGt, &w.rect)
            .expect("natural boundary");
        let failing: Vec<String> = check_symmetry(&z)
            .into_iter()
            .filter(|c| !c.passed())
            .map(|c| format!("s{}", c.i))
            .collect();
        (failing.is_empty(), vec![("failing", failing.join(","))])
    })
}

pub fn degree_check(l: &Partition, w: &Weights) -> CheckRecord {
    CheckRecord::timed("degree", format!("λ={l}"), || {
        let z = partition_function_in(&BoundarySpec::for_partition(l), Strategy::ViaGt, &w.rect)
            .expect("natural boundary");
        let n = l.n() as i64;
        let bound = l.size() as i64 + n * (n - 1) / 2;
        let d = z.x_degree();
        (
            d.is_none_or(|d| d <= bound),
            vec![("degree", format!("{d:?}")), ("bound", bound.to_string())],
        )
    })
}

pub fn bijection_check(l: &Partition) -> CheckRecord {
    CheckRecord::timed("bijection", format!("λ={l}"), || {
        let m = l.largest() as usize + l.n();
        let gts = enumerate_gt(l);
        let stairs = enumerate_staircases(l);
        let states = enumerate_states(l, Strategy::Backtrack);
        let counts = gts.len() == stairs.len() && gts.len() == states.len();
        let gt_round = gts.iter().all(|g| {
            gt_to_state(g, m).is_ok_and(|s| state_to_gt(&s).as_ref() == Ok(g))
                && staircase_to_gt(&gt_to_staircase(g)).as_ref() == Ok(g)
        });
        let other_round = stairs
            .iter()
            .all(|s| staircase_to_gt(s).is_ok_and(|g| gt_to_staircase(&g) == *s))
            && states
                .iter()
                .all(|s| state_to_gt(s).is_ok_and(|g| gt_to_state(&g, m).as_ref() == Ok(s)));
        (
            counts && gt_round && other_round,
            vec![
                ("patterns", gts.len().to_string()),
                ("staircases", stairs.len().to_string()),
                ("states", states.len().to_string()),
                ("round_trips", (gt_round && other_round).to_string()),
            ],
        )
    })
}

pub fn strategy_check(l: &Partition) -> CheckRecord {
    CheckRecord::timed("strategies", format!("λ={l}"), || {
        let mut a = enumerate_states(l, Strategy::ViaGt);
        let mut b = enumerate_states(l, Strategy::Backtrack);
        a.sort();
        b.sort();
        (
            a == b,
            vec![
                ("via_gt", a.len().to_string()),
                ("backtrack", b.len().to_string()),
            ],
        )
    })
}

/// `λ` against every `μ` in `grid`, for one target.
pub fn vanishing_row(l: &Partition, grid: &[Partition], target: Target) -> CheckRecord {
    let name = match target {
        Target::Z => "vanishing-z",
        Target::Schur => "vanishing-schur",
    };
    CheckRecord::timed(name, format!("λ={l}"), || {
        let mut failing = Vec::new();
        for mu in grid {
            match vanishing_check(l, mu, target) {
                Ok(v) if v.passed() => {}
                Ok(_) => failing.push(mu.to_string()),
                Err(e) => failing.push(format!("{mu}: {e}")),
            }
        }
        (
            failing.is_empty(),
            vec![
                ("mu_count", grid.len().to_string()),
                ("failing", failing.join(" ")),
            ],
        )
    })
}

pub fn vanishing_pair(l: &Partition, mu: &Partition, target: Target) -> CheckRecord {
    let name = match target {
        Target::Z => "vanishing-z",
        Target::Schur => "vanishing-schur",
    };
    CheckRecord::timed(name, format!("λ={l} μ={mu}"), || {
        match vanishing_check(l, mu, target) {
            Ok(v) => {
                let mut values = vec![
                    ("value", v.value.render_canonical()),
                    ("contained", v.contained.to_string()),
                ];
                if let Some(d) = v.diagonal_matches {
                    values.push(("diagonal_matches", d.to_string()));
                }
                (v.passed(), values)
            }
            Err(e) => (false, vec![("error", e.to_string())]),
        }
    })
}

pub fn yang_baxter_case(b: BoundarySextuple, w: &Weights) -> CheckRecord {
    CheckRecord::timed("yang-baxter", format!("{b} (mask {})", b.mask()), || {
        let (lhs, rhs) = star_triangle_sides_with(b, &w.rect, &w.cross);
        (
            lhs == rhs,
            vec![
                ("lhs", lhs.render_canonical()),
                ("rhs", rhs.render_canonical()),
            ],
        )
    })
}

pub fn yang_baxter_all(w: &Weights) -> Vec<CheckRecord> {
    verify_star_triangle_with(&w.rect, &w.cross)
        .cases
        .iter()
        .map(|c| yang_baxter_case(c.sextuple, w))
        .collect()
}

/// Every check within `bounds`, with the default weights.
pub fn verify_all(bounds: Bounds) -> Report {
    verify_all_with(bounds, &Weights::default())
}

/// Every check within `bounds`. Records come out in a fixed order regardless of
/// how the work is scheduled.
pub fn verify_all_with(bounds: Bounds, w: &Weights) -> Report {
    type Job<'a> = Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=bounds.max_n {
        let grid = Partition::in_box(n, bounds.max_part);
        for l in grid.clone() {
            let grid = grid.clone();
            jobs.push(Box::new(move || {
                vec![
                    bijection_check(&l),
                    strategy_check(&l),
                    symmetry_check(&l, w),
                    degree_check(&l, w),
                    vanishing_row(&l, &grid, Target::Z),
                    vanishing_row(&l, &grid, Target::Schur),
                    main_check(&l, w),
                ]
            }));
        }
    }
    jobs.push(Box::new(|| yang_baxter_all(w)));
    let records = jobs.par_iter().flat_map_iter(|job| job()).collect();
    Report::new("all", records)
}

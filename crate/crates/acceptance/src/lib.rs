//! The ten acceptance criteria of the skein engine as plain functions.
//!
//! Each criterion returns a [`Verdict`] with a one-line summary of what was
//! measured. [`run`] adds the wall-clock budget: a criterion that computes
//! the right answer too slowly fails.

use asymptotics::{octahedron_rate, root_identity, root_identity_uniform, v8_f64, volume_experiment};
use diagram_io::library::{corpus, one_slot, pretzel, two_slot, unknot};
use diagram_io::{braid_closure, parse_pd, Diagram, Twist, TwistTemplate};
use khovanov::{ckh, euler_characteristic, homology, stable_range, BigradedGroups};
use laurent_core::{eval::to_f64, series_truncate, BigFloat, RationalFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_bracket::{
    agreeing_coefficients, bracket_diagram, bracket_state_sum, colored_bracket, colored_jones,
    jones_infinity, twist_normalized, valuation,
};
use spin_network::{fusion_sum, jones_infinity_closed_form, template_trace};
use std::time::{Duration, Instant};
use temperley_lieb::{absorb_check, check_projector, jones_wenzl};

/// Decimal digits used for every root-of-unity evaluation.
pub const DIGITS: usize = 40;

/// Seed of the random diagrams in the oracle comparison.
pub const ORACLE_SEED: u64 = 0x5eed_b7ac;

#[derive(Clone, Debug)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Self::new(false, detail)
    }
}

/// A criterion with its identifier and time budget.
pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub budget: Duration,
    pub check: fn() -> Verdict,
}

/// The outcome of running one criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub budget: Duration,
    pub detail: String,
}

impl Report {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<5} {:<28} {:>8.2}s / {:>4}s  {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

pub fn run(c: &Criterion) -> Report {
    let start = Instant::now();
    let v = (c.check)();
    let elapsed = start.elapsed();
    let in_time = elapsed <= c.budget;
    let detail = if in_time {
        v.detail
    } else {
        format!("{}; over the time budget", v.detail)
    };
    Report {
        id: c.id,
        title: c.title,
        passed: v.passed && in_time,
        elapsed,
        budget: c.budget,
        detail,
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: "1", title: "projector axioms", budget: secs(10), check: projector_axioms },
        Criterion { id: "2", title: "unknot normalization", budget: secs(30), check: normalization },
        Criterion { id: "3", title: "decategorification", budget: secs(300), check: decategorification },
        Criterion { id: "4", title: "fusion expansion", budget: secs(600), check: fusion },
        Criterion { id: "5", title: "reduction consistency", budget: secs(600), check: reduction },
        Criterion { id: "6", title: "root identity", budget: secs(120), check: root_identity_check },
        Criterion { id: "7", title: "volume trend", budget: secs(600), check: volume_trend },
        Criterion { id: "8", title: "stabilization (Jones)", budget: secs(120), check: jones_stabilization },
        Criterion { id: "9", title: "stabilization (Kh)", budget: secs(600), check: kh_stabilization },
        Criterion { id: "10", title: "oracle equivalence", budget: secs(600), check: oracle_equivalence },
    ]
}

pub fn projector_axioms() -> Verdict {
    for n in 1..=5 {
        let c = check_projector(&jones_wenzl(n));
        if !c.all() {
            return Verdict::fail(format!("p_{n}: {c:?}"));
        }
    }
    for n in 1..=5 {
        for m in 1..=n {
            if !absorb_check(m, n) {
                return Verdict::fail(format!("absorption fails for m = {m}, n = {n}"));
            }
        }
    }
    Verdict::new(true, "p_1..p_5 exact; 15 absorption pairs")
}

pub fn normalization() -> Verdict {
    let u = parse_pd("U").expect("unknot");
    for n in 1..=4 {
        match colored_jones(&u, n, true) {
            Ok(j) if j.is_one() => {}
            Ok(j) => return Verdict::fail(format!("J_{n}(U) = {j}")),
            Err(e) => return Verdict::fail(format!("n = {n}: {e}")),
        }
    }
    Verdict::new(true, "J_n(U) = 1 for n = 1..4")
}

fn torus(k: usize) -> Diagram {
    one_slot(Twist::Negative).twist_fill(&[k]).expect("one-slot fill")
}

fn euler_corpus() -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> =
        corpus().into_iter().map(|(n, d)| (n.to_string(), d)).collect();
    for k in 2..=6 {
        out.push((format!("T(2,{k})"), torus(k)));
    }
    out.push(("T(2,10)".into(), torus(10)));
    out.push((
        "two-slot (2,3)".into(),
        two_slot(Twist::Positive).twist_fill(&[2, 3]).expect("fill"),
    ));
    out.push((
        "pretzel (1,1,1)".into(),
        pretzel(Twist::Negative).twist_fill(&[1, 1, 1]).expect("fill"),
    ));
    out
}

pub fn decategorification() -> Verdict {
    let diagrams = euler_corpus();
    let mut largest = 0;
    for (name, d) in &diagrams {
        if d.crossing_count() > 10 {
            return Verdict::fail(format!("{name} has {} crossings", d.crossing_count()));
        }
        largest = largest.max(d.crossing_count());
        let h = match ckh(d) {
            Ok(c) => homology(&c),
            Err(e) => return Verdict::fail(format!("{name}: {e}")),
        };
        let jones = match colored_jones(d, 1, false) {
            Ok(j) => j,
            Err(e) => return Verdict::fail(format!("{name}: {e}")),
        };
        if RationalFunc::from_poly(euler_characteristic(&h)) != jones {
            return Verdict::fail(format!("{name}: Euler characteristic differs"));
        }
    }
    Verdict::new(
        diagrams.len() >= 8,
        format!("{} diagrams up to {largest} crossings", diagrams.len()),
    )
}

fn fusion_templates() -> Vec<(&'static str, TwistTemplate)> {
    let mut out = vec![("unknot", unknot())];
    for twist in [Twist::Negative, Twist::Positive] {
        out.push(("one-slot", one_slot(twist)));
        out.push(("two-slot", two_slot(twist)));
    }
    out
}

/// Every tuple in `{0..=max}^len`.
fn tuples(len: usize, max: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..=max).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect()
    })
}

pub fn fusion() -> Verdict {
    let mut cases = 0;
    for (name, t) in fusion_templates() {
        for n in 1..=2 {
            for k in tuples(t.slot_count(), 3) {
                let direct = t
                    .twist_fill(&k)
                    .map_err(|e| e.to_string())
                    .and_then(|d| colored_bracket(&d, n).map_err(|e| e.to_string()));
                let sum = fusion_sum(&t, n, &k).map_err(|e| e.to_string());
                match (sum, direct) {
                    (Ok(a), Ok(b)) if a == b => cases += 1,
                    (Ok(_), Ok(_)) => {
                        return Verdict::fail(format!("{name} n = {n} k = {k:?}: sums differ"))
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        return Verdict::fail(format!("{name} n = {n} k = {k:?}: {e}"))
                    }
                }
            }
        }
    }
    Verdict::new(true, format!("{cases} cases with t <= 2, n <= 2, k_i <= 3"))
}

pub fn reduction() -> Verdict {
    let templates = [
        ("one-slot", one_slot(Twist::Negative)),
        ("two-slot", two_slot(Twist::Negative)),
        ("pretzel", pretzel(Twist::Negative)),
        ("two-slot+", two_slot(Twist::Positive)),
    ];
    let mut counted = Vec::new();
    for (name, t) in &templates {
        let mut triangles = None;
        for n in 1..=2 {
            let trace = match template_trace(t, n) {
                Ok(tr) => tr,
                Err(e) => return Verdict::fail(format!("{name} n = {n}: {e}")),
            };
            if !trace.triangles_only() {
                return Verdict::fail(format!("{name} n = {n}: moves other than triangles"));
            }
            let closed = jones_infinity_closed_form(t, n).map_err(|e| e.to_string());
            let direct = jones_infinity(t, n).map_err(|e| e.to_string());
            match (closed, direct) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Ok(_)) => return Verdict::fail(format!("{name} n = {n}: values differ")),
                (Err(e), _) | (_, Err(e)) => return Verdict::fail(format!("{name} n = {n}: {e}")),
            }
            triangles = Some(trace.triangles);
        }
        counted.push(format!("{name} T={}", triangles.unwrap_or(0)));
    }
    Verdict::new(counted.len() >= 3, format!("n = 1, 2; {}", counted.join(", ")))
}

fn distance_to_one(v: &laurent_core::MpComplex) -> BigFloat {
    v.sub(&laurent_core::MpComplex::one(v.precision())).abs()
}

pub fn root_identity_check() -> Verdict {
    let tolerance = 1e-30;
    let mut failing = Vec::new();
    for n in 2..=8 {
        match root_identity(n, DIGITS) {
            Ok(v) => {
                let d = to_f64(&distance_to_one(&v));
                if !(d < tolerance) {
                    failing.push(format!("n={n} value {:+.0}", v.re_f64()));
                }
            }
            Err(e) => failing.push(format!("n={n}: {e}")),
        }
    }
    // The literal uniform-color ratio, reported alongside.
    let literal_ok = (2..=8)
        .filter(|&n| {
            root_identity_uniform(n, DIGITS)
                .map(|v| to_f64(&distance_to_one(&v)) < tolerance)
                .unwrap_or(false)
        })
        .count();
    let detail = if failing.is_empty() {
        "theta(n,n,2n)/O(n) = 1 for n = 2..8".to_string()
    } else {
        format!(
            "theta(n,n,2n)/O(n) misses 1 at {}; theta(n,n,n)/O(n) holds at {literal_ok}/7",
            failing.join(", ")
        )
    };
    Verdict::new(failing.is_empty(), detail)
}

pub fn volume_trend() -> Verdict {
    let ns = [10, 20, 30, 40, 50];
    let v8 = v8_f64();
    let octa = match octahedron_rate(&ns, DIGITS) {
        Ok(s) => s,
        Err(e) => return Verdict::fail(format!("octahedron: {e}")),
    };
    let rates = octa.rates();
    let first_gap = v8 - rates[0];
    let last_gap = v8 - rates[rates.len() - 1];
    let trend = octa.is_strictly_increasing() && last_gap * 2.0 <= first_gap;

    let experiment = match volume_experiment(&pretzel(Twist::Negative), &ns, DIGITS) {
        Ok(x) => x,
        Err(e) => return Verdict::fail(format!("volume experiment: {e}")),
    };
    let last = experiment.series.last_rate().unwrap_or(f64::NAN);
    let within = (last - experiment.target).abs() <= 0.25 * experiment.target;

    let shown: Vec<String> = rates.iter().map(|r| format!("{r:.3}")).collect();
    let detail = format!(
        "octahedron [{}] gap ratio {:.2} ({}); pretzel T={} rate {last:.3} vs 2T*v8 = {:.3} ({})",
        shown.join(", "),
        first_gap / last_gap,
        if trend { "ok" } else { "not ok" },
        experiment.triangles,
        experiment.target,
        if within { "ok" } else { "not within 25%" },
    );
    Verdict::new(trend && within, detail)
}

/// Leading coefficients on which the series of `f` and `limit` agree,
/// counted from the valuation of `limit` up to `order`.
fn agreement_by_series(f: &RationalFunc, limit: &RationalFunc, order: i64) -> Result<i64, String> {
    let start = valuation(limit).ok_or("zero limit")?;
    let a = series_truncate(f, order).map_err(|e| e.to_string())?;
    let b = series_truncate(limit, order).map_err(|e| e.to_string())?;
    let agree = (start..=order).take_while(|&e| a.coeff(e) == b.coeff(e)).count();
    Ok(agree as i64)
}

pub fn jones_stabilization() -> Verdict {
    let t = one_slot(Twist::Negative);
    let limit = match jones_infinity(&t, 1) {
        Ok(l) => l,
        Err(e) => return Verdict::fail(e.to_string()),
    };
    let start = valuation(&limit).unwrap_or(0);
    let mut agree = Vec::new();
    for k in 2..=10 {
        let f = match twist_normalized(&t, 1, &[k]) {
            Ok(f) => f,
            Err(e) => return Verdict::fail(format!("k = {k}: {e}")),
        };
        let order = start + 8 * k as i64 + 16;
        let by_series = match agreement_by_series(&f, &limit, order) {
            Ok(a) => a,
            Err(e) => return Verdict::fail(format!("k = {k}: {e}")),
        };
        if Some(by_series) != agreeing_coefficients(&f, &limit) {
            return Verdict::fail(format!("k = {k}: series count {by_series} disagrees"));
        }
        agree.push(by_series);
    }
    let grows = agree.windows(3).all(|w| w[2] >= w[0] + 1);
    let shown: Vec<String> = agree.iter().map(|a| a.to_string()).collect();
    Verdict::new(grows, format!("agreeing coefficients for k = 2..10: {}", shown.join(" ")))
}

pub fn kh_stabilization() -> Verdict {
    let mut seq: Vec<BigradedGroups> = Vec::new();
    for k in 2..=8 {
        match ckh(&torus(k)) {
            Ok(c) => seq.push(homology(&c)),
            Err(e) => return Verdict::fail(format!("k = {k}: {e}")),
        }
    }
    let m = match stable_range(&seq) {
        Ok(m) => m,
        Err(e) => return Verdict::fail(e.to_string()),
    };
    let Some(m) = m.into_iter().collect::<Option<Vec<i64>>>() else {
        return Verdict::fail("two consecutive groups are equal");
    };
    let nondecreasing = m.windows(2).all(|w| w[0] <= w[1]);
    let increases = m.windows(2).filter(|w| w[1] > w[0]).count();
    Verdict::new(
        nondecreasing && increases >= 3,
        format!("m(k) for k = 2..8: {m:?}, {increases} increases"),
    )
}

/// A random braid closure with at most `max_crossings` crossings.
pub fn random_diagram(rng: &mut ChaCha8Rng, max_crossings: usize) -> Diagram {
    let strands = rng.gen_range(2..=5);
    let len = rng.gen_range(1..=max_crossings);
    let word: Vec<(usize, Twist)> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands);
            let t = if rng.gen_bool(0.5) { Twist::Positive } else { Twist::Negative };
            (g, t)
        })
        .collect();
    braid_closure(strands, &word)
}

pub fn oracle_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut largest = 0;
    for i in 0..200 {
        let d = random_diagram(&mut rng, 12);
        largest = largest.max(d.crossing_count());
        let fast = bracket_diagram(&d).map_err(|e| e.to_string());
        let naive = bracket_state_sum(&d).map_err(|e| e.to_string());
        match (fast, naive) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => return Verdict::fail(format!("diagram {i}: brackets differ")),
            (Err(e), _) | (_, Err(e)) => return Verdict::fail(format!("diagram {i}: {e}")),
        }
    }
    Verdict::new(true, format!("200 random braid closures up to {largest} crossings"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_enumerate_the_box() {
        assert_eq!(tuples(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(tuples(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn random_diagrams_respect_the_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(random_diagram(&mut rng, 12).crossing_count() <= 12);
        }
    }

    #[test]
    fn series_agreement_counts_leading_terms() {
        let limit = RationalFunc::from_poly(laurent_core::LaurentPoly::from_terms([(0, 1), (4, 1)]));
        let f = RationalFunc::from_poly(laurent_core::LaurentPoly::from_terms([(0, 1), (4, 2)]));
        assert_eq!(agreement_by_series(&f, &limit, 10).unwrap(), 4);
        assert_eq!(agreeing_coefficients(&f, &limit), Some(4));
    }
}

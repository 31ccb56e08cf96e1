//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use ghc_core::exact::{cone_member, cones_intersect_trivially, int, rat, ConeIntersection};
use ghc_core::fk::{finite_type_by_cones, levi_decompose, solvable_finite_type};
use ghc_core::mathieu::{sp_bounded, sp_degree, sp_equivalent, sp_fiber_irreducible, SpWeight};
use ghc_core::principal::{
    a1_multiplicity, euler_rhs, exponents, nonintegral_weight, partition_p, PrincipalData,
};
use ghc_core::shadow::{fernando_fk, parabolic_pm, shadow, RootSubalgebra};
use ghc_core::{CartanType, QVector, Rational, RootSystem, Series};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn build(ty: CartanType) -> RootSystem {
    RootSystem::build(ty.series, ty.rank).expect("valid type")
}

fn simple_types_up_to_rank_8() -> Vec<CartanType> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(CartanType::new(Series::A, n));
        if n >= 2 {
            out.push(CartanType::new(Series::B, n));
            out.push(CartanType::new(Series::C, n));
        }
        if n >= 3 {
            out.push(CartanType::new(Series::D, n));
        }
    }
    for (s, n) in [(Series::E, 6), (Series::E, 7), (Series::E, 8), (Series::F, 4), (Series::G, 2)] {
        out.push(CartanType::new(s, n));
    }
    out
}

fn classical_root_count(ty: CartanType) -> usize {
    let n = ty.rank;
    match ty.series {
        Series::A => n * (n + 1),
        Series::B | Series::C => 2 * n * n,
        Series::D => 2 * n * (n - 1),
        Series::E => [72, 126, 240][n - 6],
        Series::F => 48,
        Series::G => 12,
    }
}

fn classical_exponents(ty: CartanType) -> Vec<u64> {
    let n = ty.rank as u64;
    match ty.series {
        Series::A => (1..=n).collect(),
        Series::B | Series::C => (0..n).map(|i| 2 * i + 1).collect(),
        Series::D => {
            let mut e: Vec<u64> = (0..n - 1).map(|i| 2 * i + 1).collect();
            e.push(n - 1);
            e.sort();
            e
        }
        Series::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Series::F => vec![1, 5, 7, 11],
        Series::G => vec![1, 5],
    }
}

fn root_counts() -> Outcome {
    let types = simple_types_up_to_rank_8();
    for &ty in &types {
        let rs = build(ty);
        ensure!(
            rs.num_roots() == classical_root_count(ty),
            "{ty}: {} roots, expected {}",
            rs.num_roots(),
            classical_root_count(ty)
        );
    }
    Ok(format!("{} types", types.len()))
}

fn exponent_table() -> Outcome {
    let types = simple_types_up_to_rank_8();
    for &ty in &types {
        let got = exponents(&build(ty));
        ensure!(got == classical_exponents(ty), "{ty}: {got:?}");
    }
    Ok(format!("{} types", types.len()))
}

fn cone_test_matches_solvable_test() -> Outcome {
    let mut checked = 0;
    for n in [2, 3] {
        let rs = build(CartanType::new(Series::A, n));
        for roots in rs.closed_subsets() {
            let l = RootSubalgebra::new(&rs, roots).map_err(|e| e.to_string())?;
            if !levi_decompose(&l).is_solvable() {
                continue;
            }
            let cones = finite_type_by_cones(&l).map_err(|e| e.to_string())?.finite_type;
            let solvable = solvable_finite_type(&l).map_err(|e| e.to_string())?.finite_type;
            ensure!(cones == solvable, "A{n} {:?}: cone {cones}, solvable {solvable}", l.roots());
            checked += 1;
        }
    }
    Ok(format!("{checked} solvable subalgebras"))
}

fn reductive_subalgebras_are_finite_type() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        let rs = build(CartanType::new(Series::A, n));
        for roots in rs.closed_subsets() {
            if rs.negate_set(&roots) != roots {
                continue;
            }
            let l = RootSubalgebra::new(&rs, roots).map_err(|e| e.to_string())?;
            let v = finite_type_by_cones(&l).map_err(|e| e.to_string())?;
            ensure!(v.finite_type, "A{n} {:?} reported infinite type", l.roots());
            checked += 1;
        }
    }
    Ok(format!("{checked} reductive subalgebras"))
}

fn small_systems() -> Vec<RootSystem> {
    [(Series::A, 2), (Series::A, 3), (Series::C, 2)]
        .into_iter()
        .map(|(s, n)| build(CartanType::new(s, n)))
        .collect()
}

fn shadow_parabolic_is_parabolic() -> Outcome {
    let mut checked = 0;
    for rs in small_systems() {
        for roots in rs.closed_subsets() {
            let fk = RootSubalgebra::new(&rs, roots).map_err(|e| e.to_string())?;
            let pm = parabolic_pm(&shadow(&fk).map_err(|e| e.to_string())?);
            ensure!(rs.is_closed(&pm), "{}: p_M of {:?} not closed", rs.cartan_type(), fk.roots());
            ensure!(
                pm.union(&rs.negate_set(&pm)) == rs.all_roots_set(),
                "{}: p_M of {:?} misses roots",
                rs.cartan_type(),
                fk.roots()
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} subsets"))
}

fn fernando_round_trip() -> Outcome {
    let mut forms = 0;
    for rs in small_systems() {
        let mut seen = HashSet::new();
        for roots in rs.closed_subsets() {
            let fk = RootSubalgebra::new(&rs, roots).map_err(|e| e.to_string())?;
            let form = fernando_fk(&shadow(&fk).map_err(|e| e.to_string())?);
            if !seen.insert(form.clone()) {
                continue;
            }
            let again = RootSubalgebra::new(&rs, form.clone()).map_err(|e| e.to_string())?;
            let back = fernando_fk(&shadow(&again).map_err(|e| e.to_string())?);
            ensure!(back == form, "{}: {form:?} came back as {back:?}", rs.cartan_type());
            forms += 1;
        }
    }
    Ok(format!("{forms} distinct F ∪ plus forms"))
}

fn rank_two_and_three() -> Vec<RootSystem> {
    [
        (Series::A, 2),
        (Series::B, 2),
        (Series::C, 2),
        (Series::G, 2),
        (Series::A, 3),
        (Series::B, 3),
        (Series::C, 3),
        (Series::D, 3),
    ]
    .into_iter()
    .map(|(s, n)| build(CartanType::new(s, n)))
    .collect()
}

fn euler_characteristic_matches_multiplicity() -> Outcome {
    let mut checked = 0;
    for rs in rank_two_and_three() {
        let pd = PrincipalData::new(&rs).map_err(|e| e.to_string())?;
        for n in 0..=10 {
            let lambda = nonintegral_weight(&rs, &int(n + 2)).map_err(|e| e.to_string())?;
            ensure!(!rs.is_integral(&lambda).unwrap(), "helper returned an integral weight");
            for m in 0..=20 {
                let a1 = a1_multiplicity(&pd, m, &lambda).map_err(|e| e.to_string())? as i128;
                let euler = euler_rhs(&pd, m, &lambda).map_err(|e| e.to_string())?;
                ensure!(a1 == -euler, "{} m={m} λ(h)={}: {a1} vs {euler}", rs.cartan_type(), n + 2);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (type, λ(h), m) triples"))
}

fn minimal_ktype_has_multiplicity_one() -> Outcome {
    let mut checked = 0;
    for rs in rank_two_and_three() {
        let pd = PrincipalData::new(&rs).map_err(|e| e.to_string())?;
        for n in 0..=10u64 {
            let lambda = nonintegral_weight(&rs, &int(n as i64 + 2)).map_err(|e| e.to_string())?;
            for m in 0..=n {
                let mult = a1_multiplicity(&pd, m, &lambda).map_err(|e| e.to_string())?;
                let expected = u128::from(m == n);
                ensure!(mult == expected, "{} n={n} m={m}: multiplicity {mult}", rs.cartan_type());
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (type, n, m) triples"))
}

/// Counts multisets of coloured parts summing to `target` by explicit
/// enumeration: parts are visited in a fixed order and each branch picks
/// how many copies of the current part to take.
fn enumerate_partitions(parts: &[u64], target: i64) -> u128 {
    fn go(parts: &[u64], remaining: i64) -> u128 {
        if remaining == 0 {
            return 1;
        }
        let Some((&first, rest)) = parts.split_first() else {
            return 0;
        };
        let mut total = 0;
        let mut left = remaining;
        while left >= 0 {
            total += go(rest, left);
            left -= first as i64;
        }
        total
    }
    if target < 0 {
        return 0;
    }
    go(parts, target)
}

fn partition_function_oracle() -> Outcome {
    let mut checked = 0;
    for (s, n) in [(Series::A, 2), (Series::A, 3), (Series::C, 2), (Series::C, 3), (Series::G, 2)] {
        let rs = build(CartanType::new(s, n));
        let pd = PrincipalData::new(&rs).map_err(|e| e.to_string())?;
        for multiset in [pd.nbar_multiset(), pd.nbar_kperp_multiset()] {
            let parts: Vec<u64> = multiset
                .iter()
                .flat_map(|(&p, &c)| std::iter::repeat_n(p, c))
                .collect();
            for target in -4..=40i64 {
                let got = partition_p(multiset, &int(target)).map_err(|e| e.to_string())?;
                let want = enumerate_partitions(&parts, target);
                ensure!(got == want, "{s}{n} {multiset:?} at {target}: {got} vs {want}");
                checked += 1;
            }
            ensure!(partition_p(multiset, &rat(7, 3)).unwrap() == 0, "non-integral target");
        }
    }
    Ok(format!("{checked} (multiset, target) pairs"))
}

/// Weyl's formula for `D₂`, positive roots `ε₁ ± ε₂`, `ρ = ε₁`.
fn d2_dimension(l1: Rational, l2: Rational) -> Rational {
    (&l1 - &l2 + int(1)) * (l1 + l2 + int(1))
}

fn mathieu_fixtures() -> Outcome {
    let sp = |a: (i64, i64), b: (i64, i64)| SpWeight::new(vec![rat(a.0, a.1), rat(b.0, b.1)]).unwrap();
    let x = sp((3, 2), (1, 2));
    ensure!(sp_bounded(&x), "(3/2, 1/2) bounded");
    ensure!(!sp_bounded(&sp((1, 2), (3, 2))), "(1/2, 3/2) not bounded");
    ensure!(!sp_bounded(&sp((1, 1), (0, 1))), "(1, 0) not bounded");
    ensure!(sp_equivalent(&x, &sp((3, 2), (-1, 2))).unwrap(), "sign of last entry");
    ensure!(sp_equivalent(&x, &x).unwrap(), "reflexive");
    ensure!(!sp_equivalent(&x, &sp((5, 2), (1, 2))).unwrap(), "different first entries");
    ensure!(sp_fiber_irreducible(&[int(0), int(0)]), "(0, 0) irreducible");
    ensure!(!sp_fiber_irreducible(&[rat(1, 2), int(0)]), "(1/2, 0) reducible");
    ensure!(sp_fiber_irreducible(&[rat(1, 3), rat(2, 3)]), "(1/3, 2/3) irreducible");
    for (a, b, want) in [((3, 2), (1, 2), 5u128), ((3, 2), (-1, 2), 6), ((5, 2), (1, 2), 9)] {
        let x = sp(a, b);
        let got = sp_degree(&x).map_err(|e| e.to_string())?;
        let oracle = d2_dimension(rat(a.0, a.1) + int(1), rat(b.0, b.1) + int(1)) / int(2);
        ensure!(oracle == Rational::from_integer((want as i64).into()), "oracle disagrees with fixture {want}");
        ensure!(got == want, "degree of {:?}: {got}, expected {want}", x.to_strings());
    }
    Ok("table and degrees 5, 6, 9".into())
}

const GRID: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (3, 2), (2, 1)];

/// Every combination of `gens` with coefficients from `GRID`.
fn grid_points(gens: &[QVector], dim: usize) -> HashSet<QVector> {
    let mut points = HashSet::from([QVector::zeros(dim)]);
    for g in gens {
        let mut next = HashSet::new();
        for p in &points {
            for &(a, b) in &GRID {
                next.insert(p.add_scaled(&rat(a, b), g));
            }
        }
        points = next;
    }
    points
}

/// Null space of the columns `cols` of `m` (rows × n), by elimination.
fn null_space(m: &[Vec<Rational>], cols: &[usize]) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect();
    let k = cols.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x /= &lead;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..k {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); k];
            v[free] = int(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][free].clone();
            }
            v
        })
        .collect()
}

/// Carathéodory: `v` lies in the cone iff it is a nonnegative combination
/// of some linearly independent subset of the generators.
fn member_by_caratheodory(v: &QVector, gens: &[QVector]) -> bool {
    if v.is_zero() {
        return true;
    }
    let dim = v.dim();
    for mask in 1u32..(1 << gens.len()) {
        let subset: Vec<usize> = (0..gens.len()).filter(|i| mask & (1 << i) != 0).collect();
        // Columns: chosen generators, then -v; a kernel vector with last entry 1 solves the system.
        let m: Vec<Vec<Rational>> = (0..dim)
            .map(|k| {
                let mut row: Vec<Rational> = subset.iter().map(|&i| gens[i][k].clone()).collect();
                row.push(-&v[k]);
                row
            })
            .collect();
        let cols: Vec<usize> = (0..=subset.len()).collect();
        let kernel = null_space(&m, &cols);
        if kernel.len() != 1 {
            continue;
        }
        let z = &kernel[0];
        let last = z[subset.len()].clone();
        if last.is_zero() {
            continue;
        }
        if z[..subset.len()].iter().all(|c| !(c / &last).is_negative()) {
            return true;
        }
    }
    false
}

/// The cones meet nontrivially iff `{(a, b) ≥ 0 : Aa = Bb}` has an extreme
/// ray with `Aa ≠ 0`; extreme rays are the sign-definite kernel vectors of
/// minimal support.
fn meets_by_extreme_rays(gens_a: &[QVector], gens_b: &[QVector]) -> bool {
    let dim = gens_a[0].dim();
    let (na, nb) = (gens_a.len(), gens_b.len());
    let m: Vec<Vec<Rational>> = (0..dim)
        .map(|k| {
            let mut row: Vec<Rational> = gens_a.iter().map(|g| g[k].clone()).collect();
            row.extend(gens_b.iter().map(|g| -&g[k]));
            row
        })
        .collect();
    for mask in 1u32..(1 << (na + nb)) {
        let cols: Vec<usize> = (0..na + nb).filter(|i| mask & (1 << i) != 0).collect();
        let kernel = null_space(&m, &cols);
        if kernel.len() != 1 {
            continue;
        }
        let z = &kernel[0];
        let positive = z.iter().all(|c| c.is_positive());
        let negative = z.iter().all(|c| c.is_negative());
        if !(positive || negative) {
            continue;
        }
        let mut point = QVector::zeros(dim);
        for (j, &c) in cols.iter().enumerate() {
            if c < na {
                point = point.add_scaled(&z[j], &gens_a[c]);
            }
        }
        if !point.is_zero() {
            return true;
        }
    }
    false
}

fn cone_fixture_systems() -> Vec<RootSystem> {
    [
        (Series::A, 2),
        (Series::A, 3),
        (Series::B, 2),
        (Series::C, 2),
        (Series::B, 3),
        (Series::C, 3),
        (Series::G, 2),
    ]
    .into_iter()
    .map(|(s, n)| build(CartanType::new(s, n)))
    .collect()
}

fn pick(rng: &mut StdRng, rs: &RootSystem, count: usize) -> Vec<QVector> {
    let mut roots = rs.roots().to_vec();
    roots.shuffle(rng);
    roots.truncate(count);
    roots
}

fn cone_kernel_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut memberships, mut intersections) = (0, 0);
    for rs in cone_fixture_systems() {
        let dim = rs.ambient_dim();
        ensure!(dim <= 4, "fixture dimension {dim}");
        for _ in 0..20 {
            let size = rng.gen_range(1..=6);
            let gens = pick(&mut rng, &rs, size);
            let grid = grid_points(&gens, dim);
            let mut grid_list: Vec<QVector> = grid.iter().cloned().collect();
            grid_list.sort();
            let mut targets: Vec<QVector> = grid_list.choose_multiple(&mut rng, 10).cloned().collect();
            for t in targets.clone() {
                targets.push(-&t);
            }
            for _ in 0..15 {
                targets.push(QVector::new((0..dim).map(|_| int(rng.gen_range(-2..=2))).collect()));
            }
            for v in &targets {
                let got = cone_member(v, &gens).map_err(|e| e.to_string())?;
                if grid.contains(v) {
                    ensure!(got.is_some(), "{v} is a grid combination but reported outside");
                }
                ensure!(
                    got.is_some() == member_by_caratheodory(v, &gens),
                    "{}: membership of {v} disagrees with Carathéodory",
                    rs.cartan_type()
                );
                if let Some(c) = got {
                    ensure!(c.iter().all(|x| !x.is_negative()), "negative coefficient");
                    ensure!(QVector::combination(dim, &c, &gens) == *v, "certificate does not reproduce {v}");
                }
                memberships += 1;
            }
        }
        for _ in 0..20 {
            let (sa, sb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let gens_a = pick(&mut rng, &rs, sa);
            let gens_b = pick(&mut rng, &rs, sb);
            let grid_a = grid_points(&gens_a, dim);
            let grid_b = grid_points(&gens_b, dim);
            let grid_meets = grid_a.iter().any(|p| !p.is_zero() && grid_b.contains(p));
            let verdict = cones_intersect_trivially(&gens_a, &gens_b).map_err(|e| e.to_string())?;
            if grid_meets {
                ensure!(!verdict.is_trivial(), "grid finds a common point but cones reported disjoint");
            }
            ensure!(
                verdict.is_trivial() != meets_by_extreme_rays(&gens_a, &gens_b),
                "{}: intersection verdict disagrees with extreme-ray oracle",
                rs.cartan_type()
            );
            if let ConeIntersection::Meets(w) = &verdict {
                ensure!(w.verify(&gens_a, &gens_b), "witness fails substitution");
                ensure!(!w.point.is_zero(), "zero witness");
            }
            intersections += 1;
        }
    }
    Ok(format!("{memberships} memberships, {intersections} intersections"))
}

fn ghc(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ghc"))
        .args(args)
        .env_remove("GHC_MAX_RANK")
        .output()
        .expect("run ghc");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn cli_determinism() -> Outcome {
    let invocations: &[&[&str]] = &[
        &["root-system", "--series", "F", "--rank", "4"],
        &["shadow", "--series", "C", "--rank", "2", "--subalgebra", "0,1,2,3"],
        &["fk-test", "--series", "A", "--rank", "3", "--subalgebra", "0"],
        &["solvable-test", "--series", "C", "--rank", "2", "--subalgebra", "1,2,3"],
        &["primal-test", "--series", "A", "--rank", "2", "--subalgebra", "0,3", "--toral", "1,-1,0"],
        &["mathieu", "--lambda", "3/2,-1/2", "--eta", "1/3,2/3"],
        &["ktype-series", "--series", "G", "--rank", "2", "--lambda-h", "6"],
        &["exponents", "--series", "E", "--rank", "7"],
        &["census", "--series", "A", "--rank", "3"],
        &["census", "--series", "A", "--rank", "3", "--dedup"],
    ];
    for args in invocations {
        let (first, c1) = ghc(args);
        let (second, c2) = ghc(args);
        ensure!(c1 == 0 && c2 == 0, "{args:?} exited {c1}/{c2}");
        ensure!(first == second, "{args:?} output differs between runs");
        ensure!(
            serde_json::from_slice::<serde_json::Value>(&first).is_ok(),
            "{args:?} did not print JSON"
        );
    }
    let (out, code) = ghc(&["exponents", "--series", "G", "--rank", "2"]);
    ensure!(code == 0 && out == b"{\"exponents\":[1,5]}\n", "G2 exponents: exit {code}");
    let (_, code) = ghc(&["fk-test", "--series", "B", "--rank", "2"]);
    ensure!(code == 3, "fk-test on B2 exited {code}");
    let (out, code) = ghc(&["ktype-series", "--series", "A", "--rank", "2", "--lambda", "1,0,-1"]);
    ensure!(code == 2, "integral lambda exited {code}");
    ensure!(
        String::from_utf8_lossy(&out).contains("lambda must be non-integral"),
        "integral lambda message"
    );
    Ok(format!("{} commands twice, 3 exit-code examples", invocations.len()))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "root counts, all simple types rank ≤ 8", limit: secs(1), run: root_counts },
        Criterion { id: 2, name: "exponents from heights match the classical table", limit: secs(1), run: exponent_table },
        Criterion { id: 3, name: "cone test agrees with solvable test on A2, A3", limit: secs(60), run: cone_test_matches_solvable_test },
        Criterion { id: 4, name: "reductive root subalgebras of A_n (n ≤ 3) are of finite type", limit: secs(60), run: reductive_subalgebras_are_finite_type },
        Criterion { id: 5, name: "p_M is parabolic on A2, A3, C2", limit: secs(60), run: shadow_parabolic_is_parabolic },
        Criterion { id: 6, name: "Fernando round trip on A2, A3, C2", limit: None, run: fernando_round_trip },
        Criterion { id: 7, name: "a1 multiplicity equals minus the Euler characteristic", limit: secs(10), run: euler_characteristic_matches_multiplicity },
        Criterion { id: 8, name: "minimal k-type at λ(h) − 2 with multiplicity 1", limit: None, run: minimal_ktype_has_multiplicity_one },
        Criterion { id: 9, name: "partition function vs explicit enumeration", limit: secs(10), run: partition_function_oracle },
        Criterion { id: 10, name: "sp(4) bounded/equivalence/fiber table and degrees", limit: None, run: mathieu_fixtures },
        Criterion { id: 11, name: "cone kernel vs grid search and exact oracles", limit: None, run: cone_kernel_oracle },
        Criterion { id: 12, name: "CLI determinism and exit codes", limit: None, run: cli_determinism },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS  [{:>2}] {} ({detail}; {elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL  [{:>2}] {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

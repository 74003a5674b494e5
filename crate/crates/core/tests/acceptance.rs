//! Acceptance criteria, one PASS/FAIL line each.
//!
//! `cargo test --release -p golodscope-core --test acceptance`

mod common;

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use golodscope_core::homology::linalg::{self, IntColumn, ModP};
use golodscope_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

// Time limits per criterion. All other comparisons are exact.
const GOLDEN_LIMIT: Duration = Duration::from_secs(10);
const FULL_SCAN_LIMIT: Duration = Duration::from_secs(120);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(600);
const PROPERTY_SUITE_LIMIT: Duration = Duration::from_secs(900);

const SEED: u64 = 0x5eed_0f_c0de;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn set(c: &SimplicialComplex, labels: &[&str]) -> VertexSet {
    c.vertex_set(labels).unwrap()
}

fn betti_matches(c: &SimplicialComplex, field: FieldSpec, expected: &str) -> Check {
    let start = Instant::now();
    let table = hochster_betti(c, field).map_err(|e| e.to_string())?;
    within(start, GOLDEN_LIMIT, "Betti table")?;
    let want = BettiPolynomial::parse(expected).expect("golden polynomial parses");
    ensure(table.polynomial() == want, || format!("over {field}: got {}, want {want}", table.polynomial()))
}

fn criterion_1() -> Check {
    let c = mobius_with_two_discs();
    betti_matches(&c, q(), "(x^2+15x^3)t + 35x^4t^2 + 26x^5t^3 + (5x^6+x^7)t^4")?;
    betti_matches(&c, fp(2), "(x^2+15x^3)t + 35x^4t^2 + (26x^5+2x^6)t^3 + (7x^6+2x^7)t^4 + x^7t^5")?;
    ensure(regularity(&c, q()).unwrap() == 3 && regularity(&c, fp(2)).unwrap() == 3, || "regularity".into())
}

fn criterion_2() -> Check {
    let c = subdivided_projective_plane();
    betti_matches(&c, q(), "(3x^2+11x^3)t + (3x^3+28x^4)t^2 + (x^4+24x^5)t^3 + 7x^6t^4")?;
    betti_matches(&c, fp(2), "(3x^2+11x^3)t + (3x^3+28x^4)t^2 + (x^4+24x^5)t^3 + (7x^6+x^7)t^4 + x^7t^5")
}

fn verdict_flips(c: &SimplicialComplex, trivial_over: &[FieldSpec], named: (VertexSet, VertexSet, usize)) -> Check {
    for field in [q(), fp(2), fp(3), fp(5), fp(7)] {
        let start = Instant::now();
        let v = product_trivial(c, field, &PairScope::All).map_err(|e| e.to_string())?;
        within(start, FULL_SCAN_LIMIT, "full scan")?;
        let expected = trivial_over.contains(&field);
        ensure(v.product_trivial == expected, || format!("over {field}: trivial = {}", v.product_trivial))?;
        if !expected {
            let hit = v
                .failing_pairs
                .iter()
                .any(|r| (r.left.clone(), r.right.clone(), r.degree) == named);
            ensure(hit, || format!("over {field}: named pair not among {} failures", v.failing_pairs.len()))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let one = mobius_with_two_discs();
    let named = (set(&one, &["a", "b"]), set(&one, &["1", "2", "3", "4", "5"]), 2);
    verdict_flips(&one, &[fp(2)], named)?;
    let two = subdivided_projective_plane();
    let named = (set(&two, &["1", "5", "a"]), set(&two, &["2", "3", "4", "b"]), 2);
    verdict_flips(&two, &[q(), fp(3), fp(5), fp(7)], named)
}

fn criterion_4() -> Check {
    for t in [BTreeSet::from([2]), BTreeSet::from([3])] {
        for (name, c, inside) in [
            ("delta", golod_in_primes(&t).unwrap(), true),
            ("gamma", golod_outside_primes(&t).unwrap(), false),
        ] {
            let start = Instant::now();
            for field in [q(), fp(2), fp(3), fp(5), fp(7)] {
                let v = golod_verdict(&c, field).map_err(|e| e.to_string())?;
                let p = field.characteristic();
                let expected = if inside { t.contains(&p) } else { !t.contains(&p) };
                ensure(v.product_trivial == expected, || {
                    format!("{name}({t:?}) over {field}: trivial = {}", v.product_trivial)
                })?;
            }
            within(start, CONSTRUCTION_LIMIT, name)?;
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    let cases = [
        ("first example", mobius_with_two_discs(), false, BTreeSet::from([2]), true),
        ("second example", subdivided_projective_plane(), true, BTreeSet::from([2]), true),
        ("delta({2,3})", golod_in_primes(&BTreeSet::from([2, 3])).unwrap(), false, BTreeSet::from([2, 3]), false),
    ];
    for (name, c, rational, exceptional, small) in cases {
        let s = characteristic_scan(&c).map_err(|e| e.to_string())?;
        ensure(s.rational_verdict == rational && s.exceptional_primes == exceptional, || {
            format!("{name}: ({}, {:?})", s.rational_verdict, s.exceptional_primes)
        })?;
        for p in golodscope_core::primes::primes_up_to(SCAN_SAFETY_BOUND) {
            // small complexes are checked against the unpruned scan
            let scope = if small { PairScope::All } else { PairScope::Pruned };
            let direct = product_trivial(&c, fp(p), &scope).unwrap().product_trivial;
            let scanned = s.verdicts.get(&p).copied().unwrap_or(s.rational_verdict);
            ensure(direct == scanned, || format!("{name}: F_{p} direct {direct}, scan {scanned}"))?;
        }
    }
    Ok(())
}

fn chain_and_coefficient_identities(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..500 {
        let c = random_complex(rng, 1..=8, 1..=8, 4);
        let chains = build_chain_complex(&c);
        ensure(chains.is_chain_complex(), || format!("trial {trial}: boundary of boundary"))?;
        let integral = homology(&c, Coefficients::Integral);
        let top = c.dim();
        let alternating: i64 = (-1..=top)
            .map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 } * integral.rank(d) as i64)
            .sum();
        ensure(alternating == chains.euler_characteristic(), || format!("trial {trial}: Euler characteristic"))?;
        for p in [2, 3] {
            let direct = homology(&c, Coefficients::Field(fp(p)));
            let predicted = integral.universal_coefficients(fp(p));
            ensure((-1..=top).all(|d| direct.rank(d) == predicted.rank(d)), || {
                format!("trial {trial}: universal coefficients over F_{p}")
            })?;
        }
    }
    Ok(())
}

fn smith_against_minors(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..500 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let snf = smith_normal_form(&IntMatrix::from_dense_rows(&rows));
        let want = divisors_by_minors(&rows);
        ensure(snf.divisors == want && snf.rank == want.len(), || {
            format!("trial {trial}: {rows:?} gave {:?}, minors give {want:?}", snf.divisors)
        })?;
    }
    Ok(())
}

fn chordality_and_degree_one(rng: &mut ChaCha8Rng) -> Check {
    let mut chordal_count = 0;
    for trial in 0..200 {
        let c = random_graph(rng, 2..=7, 0.3..0.8);
        let n = c.n_vertices();
        let g = Graph::one_skeleton(&c);
        let chordal = chordal_by_brute_force(&g);
        ensure(chordal == g.is_chordal(), || format!("trial {trial}: LexBFS disagrees"))?;
        let all_vanish = all_pairs(n)
            .iter()
            .all(|(i, j)| induced_map_vanishes(&c, i, j, 1, q()).unwrap().vanishes);
        ensure(chordal == all_vanish, || format!("trial {trial}: chordal {chordal}, φ₁ all vanish {all_vanish}"))?;
        chordal_count += usize::from(chordal);
    }
    ensure((20..=180).contains(&chordal_count), || format!("unbalanced sample: {chordal_count} of 200 chordal"))
}

fn one_dimensional_verdicts(rng: &mut ChaCha8Rng) -> Check {
    for trial in 0..200 {
        let c = random_graph(rng, 2..=8, 0.2..0.9);
        let chordal = Graph::one_skeleton(&c).is_chordal();
        for field in [q(), fp(2), fp(3)] {
            let all = product_trivial(&c, field, &PairScope::All).unwrap().product_trivial;
            let pruned = golod_verdict(&c, field).unwrap().product_trivial;
            ensure(all == chordal && pruned == chordal, || format!("trial {trial} over {field}"))?;
        }
    }
    Ok(())
}

fn add_into(acc: &mut HashMap<u32, i64>, col: &IntColumn, scale: i64) {
    for &(r, v) in col {
        *acc.entry(r).or_insert(0) += v * scale;
    }
}

fn is_boundary(field: FieldSpec, boundaries: &[IntColumn], image: IntColumn) -> bool {
    let mut with = boundaries.to_vec();
    with.push(image);
    linalg::rank(field, boundaries) == linalg::rank(field, &with)
}

fn image_of(map: &ChainMap, d: isize, chain: &[(u32, i64)], p: i64) -> IntColumn {
    let mut acc = HashMap::new();
    for &(k, v) in chain {
        add_into(&mut acc, &map.degree(d)[k as usize], v);
    }
    let mut out: IntColumn = acc.into_iter().map(|(r, v)| (r, v.rem_euclid(p))).filter(|e| e.1 != 0).collect();
    out.sort_unstable();
    out
}

/// Part 2 of the lemma on one pair: `None` if a random cycle of `Δ|_{I∪J}` has
/// no face whose parts are facets of `Δ|_I` and `Δ|_J`, otherwise whether its
/// image survives.
fn facet_instance(
    c: &SimplicialComplex,
    i_set: &VertexSet,
    j_set: &VertexSet,
    degree: isize,
    p: u64,
    rng: &mut ChaCha8Rng,
) -> Option<bool> {
    let map = join_inclusion_chain_map(c, i_set, j_set).unwrap();
    let back: Vec<usize> = i_set.union(j_set).iter().collect();
    let basis = map.source.basis(degree);
    let facets = |s: &VertexSet| -> BTreeSet<Face> {
        let r = c.restrict(s).unwrap();
        r.complex.facets().iter().map(|f| f.map_indices(|v| r.back_map[v])).collect()
    };
    let (fi, fj) = (facets(i_set), facets(j_set));
    let kernel = linalg::kernel_with(&ModP::new(p), map.source.boundary(degree)).unwrap();
    let mut acc: HashMap<u32, i64> = HashMap::new();
    for z in &kernel {
        let r = rng.gen_range(0..p) as i64;
        for &(k, v) in z {
            *acc.entry(k).or_insert(0) += r * v as i64;
        }
    }
    let cycle: Vec<(u32, i64)> =
        acc.into_iter().map(|(k, v)| (k, v.rem_euclid(p as i64))).filter(|e| e.1 != 0).collect();
    let special = cycle.iter().any(|&(k, _)| {
        let f = basis[k as usize].map_indices(|v| back[v]);
        fi.contains(&f.intersect(i_set)) && fj.contains(&f.intersect(j_set))
    });
    let target_bd = map.target.boundary(degree + 1);
    special.then(|| !is_boundary(fp(p), target_bd, image_of(&map, degree, &cycle, p as i64)))
}

fn complete_cycle_lemma(rng: &mut ChaCha8Rng) -> Check {
    let mut complete_checked = 0;
    for trial in 0..150 {
        let c = random_complex(rng, 3..=7, 3..=9, 4);
        let n = c.n_vertices();
        let pairs = all_pairs(n);
        let (i_set, j_set) = pairs[rng.gen_range(0..pairs.len())].clone();
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let field = fp(p);
        let degree = rng.gen_range(1..=2);
        let map = join_inclusion_chain_map(&c, &i_set, &j_set).unwrap();
        let union = i_set.union(&j_set);
        let source = c.restrict(&union).unwrap().complex;
        let target_bd = map.target.boundary(degree + 1).to_vec();
        let basis = map.source.basis(degree);
        // part 1: complete cycles map to boundaries
        for s in complete_cycle_simplices(&source, degree as usize) {
            let chain: Vec<(u32, i64)> =
                s.boundary().map(|(f, sign)| (basis.binary_search(&f).unwrap() as u32, sign)).collect();
            ensure(is_boundary(field, &target_bd, image_of(&map, degree, &chain, p as i64)), || {
                format!("trial {trial}: complete cycle {s:?} survives")
            })?;
            complete_checked += 1;
        }
    }
    let mut facet_checked = 0;
    for trial in 0..150 {
        // the hypothesis needs sparse complexes: graphs in degree 1, surfaces-ish in degree 2
        let (c, degree) = if trial % 2 == 0 {
            (random_graph(rng, 4..=7, 0.3..0.6), 1)
        } else {
            (random_complex(rng, 4..=7, 4..=10, 3), 2)
        };
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let mut pairs = all_pairs(c.n_vertices());
        pairs.shuffle(rng);
        if let Some(found) = pairs.iter().find_map(|(i, j)| facet_instance(&c, i, j, degree, p, rng)) {
            ensure(found, || format!("trial {trial}: cycle through a double facet vanished"))?;
            facet_checked += 1;
        }
    }
    ensure(complete_checked >= 20 && facet_checked >= 10, || {
        format!("too few instances: {complete_checked} complete, {facet_checked} facet")
    })
}

fn pruned_equals_all(rng: &mut ChaCha8Rng) -> Check {
    let mut nontrivial = 0;
    for trial in 0..100 {
        let c = random_complex(rng, 3..=9, 3..=10, 4);
        for field in [q(), fp(2)] {
            let all = product_trivial(&c, field, &PairScope::All).unwrap();
            let pruned = product_trivial(&c, field, &PairScope::Pruned).unwrap();
            ensure(all.product_trivial == pruned.product_trivial, || {
                format!("trial {trial} over {field}: All {} vs Pruned {}", all.product_trivial, pruned.product_trivial)
            })?;
            nontrivial += usize::from(!all.product_trivial);
        }
    }
    ensure((20..=180).contains(&nontrivial), || format!("unbalanced sample: {nontrivial} of 200 nontrivial"))
}

fn relabelled(c: &SimplicialComplex, prefix: &str) -> SimplicialComplex {
    let labels = (0..c.n_vertices()).map(|k| format!("{prefix}{k}")).collect();
    SimplicialComplex::from_index_facets(labels, c.facets().to_vec()).unwrap()
}

fn join_nontriviality(rng: &mut ChaCha8Rng) -> Check {
    let mut found = 0;
    let mut attempts = 0;
    while found < 50 {
        attempts += 1;
        if attempts > 5000 {
            return Err("could not sample enough homologically nonzero pairs".into());
        }
        let a = relabelled(&random_complex(rng, 2..=4, 2..=4, 3), "a");
        let b = relabelled(&random_complex(rng, 2..=4, 2..=4, 3), "b");
        let (ha, hb) = (homology(&a, Coefficients::Field(q())), homology(&b, Coefficients::Field(q())));
        let da = (0..=a.dim()).find(|&d| ha.rank(d) > 0);
        let db = (0..=b.dim()).find(|&d| hb.rank(d) > 0);
        let (Some(da), Some(db)) = (da, db) else { continue };
        found += 1;
        let j = a.join(&b).unwrap();
        let left: VertexSet = (0..a.n_vertices()).collect();
        let right: VertexSet = (a.n_vertices()..j.n_vertices()).collect();
        let degree = (da + db + 1) as usize;
        let v = product_trivial(&j, q(), &PairScope::All).unwrap();
        let named = PairSpec::new(left, right, degree).canonical();
        let hit = v
            .failing_pairs
            .iter()
            .any(|r| r.left == named.left && r.right == named.right && r.degree == degree);
        ensure(!v.product_trivial && hit, || format!("join of {a:?} and {b:?}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let suites: [(&str, fn(&mut ChaCha8Rng) -> Check); 7] = [
        ("chain complex, Euler and universal coefficients", chain_and_coefficient_identities),
        ("Smith form against minors", smith_against_minors),
        ("chordality against degree-one maps", chordality_and_degree_one),
        ("one-dimensional verdicts", one_dimensional_verdicts),
        ("complete-cycle lemma", complete_cycle_lemma),
        ("pruned scope equals full scope", pruned_equals_all),
        ("joins are never trivial", join_nontriviality),
    ];
    for (name, suite) in suites {
        let t = Instant::now();
        suite(&mut rng).map_err(|e| format!("{name}: {e}"))?;
        println!("    {name}: ok ({:.1} s)", t.elapsed().as_secs_f64());
    }
    within(start, PROPERTY_SUITE_LIMIT, "property suites")
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut trials = 0;
    let mut attempts = 0;
    while trials < 50 {
        attempts += 1;
        if attempts > 5000 {
            return Err("could not sample enough complete cycles".into());
        }
        let c = random_complex(&mut rng, 4..=7, 4..=10, 3);
        let n = c.n_vertices();
        let degree = rng.gen_range(1..=2);
        let missing: Vec<Face> =
            complete_cycle_simplices(&c, degree).into_iter().filter(|s| !c.contains_face(s)).collect();
        if missing.is_empty() {
            continue;
        }
        let additions: Vec<Face> = missing.iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
        let additions = if additions.is_empty() { missing[..1].to_vec() } else { additions };
        let pairs = all_pairs(n);
        for _ in 0..5 {
            let (i, j) = &pairs[rng.gen_range(0..pairs.len())];
            for field in [q(), fp(2)] {
                let same = skeleton_independence_check(&c, degree, i, j, field, &additions).unwrap();
                ensure(same, || format!("trial {trials}: adding {additions:?} changed φ_{degree}"))?;
            }
        }
        trials += 1;
    }
    let suspension = SimplicialComplex::from_facets(
        ["1", "2", "3", "a", "b"],
        [["1", "2", "a"], ["1", "3", "a"], ["2", "3", "a"], ["1", "2", "b"], ["1", "3", "b"], ["2", "3", "b"]],
    )
    .unwrap();
    let polar = suspension.with_faces(&[Face::new(set(&suspension, &["a", "b"]).iter())]).unwrap();
    for field in [q(), fp(2), fp(3)] {
        ensure(!product_trivial(&suspension, field, &PairScope::All).unwrap().product_trivial, || {
            format!("suspension of the triangle trivial over {field}")
        })?;
        ensure(product_trivial(&polar, field, &PairScope::All).unwrap().product_trivial, || {
            format!("with the polar edge still nontrivial over {field}")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 first example Betti polynomials over Q and F2", criterion_1),
        ("2 second example Betti polynomials over Q and F2", criterion_2),
        ("3 verdict flips and named failing pairs, full scan", criterion_3),
        ("4 characteristic-dependent constructions, T = {2}, {3}", criterion_4),
        ("5 characteristic scans", criterion_5),
        ("6 property suites", criterion_6),
        ("7 skeleton dependence and the suspension remark", criterion_7),
    ];
    let only: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, check) in criteria {
        if !only.is_empty() && !only.iter().any(|o| name.starts_with(o.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {name}: PASS ({secs:.1} s)"),
            Err(e) => {
                failed += 1;
                println!("criterion {name}: FAIL ({secs:.1} s): {e}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

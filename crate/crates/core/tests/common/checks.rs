//! Randomized cross-checks shared by the property tests and the acceptance run.
//! Each returns a description of the first disagreement it finds.

use super::*;
use deltamat::bits::{self, Mask};
use deltamat::poly::{self, TransitionWeights};
use deltamat::setsys::{normal_form, Gen};
use deltamat::{bicycle, Automorphism, Field, Gf4, IntPoly, Matroid, PackedVec, RectMatrix, SetSystem, SquareMatrix, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// A random binary or quaternary delta-matroid.
pub fn random_vf_safe(rng: &mut impl Rng, n: usize) -> SetSystem {
    if rng.gen_bool(0.5) {
        random_binary_delta_matroid(rng, n)
    } else {
        random_quaternary_delta_matroid(rng, n)
    }
}

pub fn binary_fixtures() -> Vec<Matroid> {
    let mut out = vec![looped_graph(), diamond(), k4(), Matroid::fano(), Matroid::fano().dual()];
    for n in 1..=4 {
        out.push(uniform(n, n));
        out.push(uniform(1, n + 1));
        out.push(uniform(n, n + 1));
    }
    out
}

pub fn transition_recursive_matches_direct(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(0..=8);
        let m = random_vf_safe(rng, n);
        let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let direct = ok(poly::transition_direct(&m, &TransitionWeights::from_ints(a, b, 0)), "direct")?;
        let rec = ok(poly::transition_recursive(&m, &rat(a), &rat(b)), "recursive")?;
        ensure!(direct == rec, "[{a},{b},0] on {m}: direct {direct}, recursive {rec}");
    }
    Ok(())
}

pub fn penrose_routes_agree(rng: &mut impl Rng, random: usize) -> Outcome {
    let mut ms = binary_fixtures();
    for _ in 0..random {
        let n = rng.gen_range(1..=8);
        let r = rng.gen_range(1..=n);
        ms.push(random_represented(rng, Field::Gf2, r, n));
    }
    for m in ms {
        let ss = m.set_system();
        let direct = ok(poly::penrose_direct(ss), "direct")?;
        let rec = ok(poly::penrose_recursive(ss), "recursive")?;
        ensure!(direct == rec, "{ss}: direct {direct}, recursive {rec}");
        for &z in [m.bases()[0], *m.bases().last().unwrap()].iter() {
            let fun = ok(poly::penrose_fundamental(&m, z), "fundamental")?;
            ensure!(direct == fun, "{ss} basis {}: direct {direct}, fundamental {fun}", ss.ground().format_set(z));
        }
    }
    Ok(())
}

pub fn p1_graph_routes_agree(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(0..=10);
        let loops = rng.gen_bool(0.7);
        let g = random_graph(rng, n, loops);
        let (d, r) = (poly::p1_graph_direct(&g), poly::p1_graph_recursive(&g));
        ensure!(d == r, "graph {g:?}: direct {d}, recursive {r}");
    }
    Ok(())
}

pub fn multivariate_symmetry(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(0..=6);
        let m = random_set_system(rng, n, 0.3);
        let v = m.ground().full();
        let (a, b, c) = (rng.gen_range(-2..=3), rng.gen_range(-2..=3), rng.gen_range(-2..=3));
        let q = |s: &SetSystem, w: (i64, i64, i64)| ok(poly::transition_direct(s, &TransitionWeights::from_ints(w.0, w.1, w.2)), "transition");
        let base = q(&m, (a, b, c))?;
        let plus = q(&ok(m.loop_complement(v), "+V")?, (a, c, b))?;
        let dual_pivot = q(&ok(m.dual_pivot(v), "dual pivot V")?, (c, b, a))?;
        let twist = q(&ok(m.twist(v), "*V")?, (b, a, c))?;
        ensure!(base == plus && base == dual_pivot && base == twist, "{m} [{a},{b},{c}]: {base} / {plus} / {dual_pivot} / {twist}");
    }
    Ok(())
}

pub fn even_sign_laws(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(1..=7);
        let m = random_even_set_system(rng, n, 0.3);
        let dm = ok(m.d(), "d")?;
        let dt = ok(m.d_dual(), "d*")?;
        let sign = |k: usize| rat(if k % 2 == 0 { 1 } else { -1 });
        for (a, b) in [(1, 1), (1, -1), (2, 3), (-1, 2)] {
            let q = |a: i64, b: i64| ok(poly::transition_direct(&m, &TransitionWeights::from_ints(a, b, 0)), "transition");
            let lhs = q(a, b)?;
            let flip_b = q(a, -b)?.reflect().scale(&sign(dm));
            let flip_a = q(-a, b)?.reflect().scale(&sign(dt));
            ensure!(lhs == flip_b && lhs == flip_a, "{m} [{a},{b},0]: {lhs} / {flip_b} / {flip_a}");
        }
    }
    Ok(())
}

/// Involutions, the S₃ relations per element, dual pivot as *X+X*X, normal forms,
/// and M+Y ∗̄ X = M*X+(X∪Y)*(X\Y).
pub fn s3_relations(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(1..=6);
        let m = random_set_system(rng, n, 0.35);
        let (x, y) = (random_subset(rng, n), random_subset(rng, n));
        let t = |s: &SetSystem, z| s.twist(z).unwrap();
        let l = |s: &SetSystem, z| s.loop_complement(z).unwrap();
        let dp = |s: &SetSystem, z| s.dual_pivot(z).unwrap();
        ensure!(t(&t(&m, x), x) == m, "*X*X on {m}");
        ensure!(l(&l(&m, x), x) == m, "+X+X on {m}");
        ensure!(dp(&dp(&m, x), x) == m, "dual pivot twice on {m}");
        ensure!(dp(&m, x) == t(&l(&t(&m, x), x), x), "dual pivot vs *X+X*X on {m}");
        let tl = |s: &SetSystem| l(&t(s, x), x);
        ensure!(tl(&tl(&tl(&m))) == m, "(*X+X)^3 on {m}");
        ensure!(t(&l(&m, x), y) == l(&t(&m, y), x) || x & y != 0, "disjoint twist and loop complement commute on {m}");
        let lhs = dp(&l(&m, y), x);
        let rhs = t(&l(&t(&m, x), x | y), x & !y);
        ensure!(lhs == rhs, "M+Y dual pivot X vs M*X+(X∪Y)*(X\\Y) on {m}");
        let word: Vec<(Gen, Mask)> = (0..rng.gen_range(1..=6))
            .map(|_| ([Gen::Twist, Gen::LoopComplement, Gen::DualPivot][rng.gen_range(0..3)], random_subset(rng, n)))
            .collect();
        let nf = normal_form(&word);
        ensure!(nf.z1 & !nf.z2 == 0, "normal form with Z1 not inside Z2");
        ensure!(ok(nf.apply(&m), "normal form")? == ok(m.apply_word(&word), "word")?, "normal form of {word:?} on {m}");
    }
    Ok(())
}

pub fn tucker_identity(rng: &mut impl Rng, count: usize) -> Outcome {
    let mut done = 0;
    while done < count {
        let n = rng.gen_range(1..=6);
        let a = SquareMatrix::new(Field::Gf4, deltamat::Ground::numbered(n), random_matrix(rng, Field::Gf4, n, n).rows().to_vec()).unwrap();
        let x = random_subset(rng, n);
        let px = a.principal_minor(x);
        if px.is_zero() {
            continue;
        }
        done += 1;
        let p = ok(a.ppt(x), "ppt")?;
        for y in bits::submasks(bits::full(n)) {
            ensure!(p.principal_minor(y) * px == a.principal_minor(x ^ y), "det((A*X)[Y]) det A[X] vs det A[X Δ Y] for\n{a}");
        }
    }
    Ok(())
}

pub fn pu_loop_complement(rng: &mut impl Rng, count: usize) -> Outcome {
    for k in 0..count {
        let n = rng.gen_range(1..=6);
        let (field, alpha) = if k % 2 == 0 { (Field::Gf2, Automorphism::Id) } else { (Field::Gf4, Automorphism::Inv) };
        let a = random_alpha_symmetric(rng, field, alpha, n);
        ensure!(a.is_pu(), "not PU:\n{a}");
        let x = random_subset(rng, n);
        ensure!(a.diag_complement(x).delta_matroid() == ok(a.delta_matroid().loop_complement(x), "+X")?, "M_(A+X) vs M_A + X for\n{a}");
    }
    Ok(())
}

pub fn inv_symmetric_minors(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(1..=7);
        let a = random_inv_symmetric(rng, n);
        ensure!(ok(a.is_alpha_symmetric(Automorphism::Inv), "symmetry")?, "generator produced a non inv-symmetric matrix");
        for x in bits::submasks(bits::full(n)) {
            let d = a.principal_minor(x);
            ensure!(d == Gf4::ZERO || d == Gf4::ONE, "minor {d} on {x:b} of\n{a}");
        }
    }
    Ok(())
}

/// Every vector of GF(4)^n.
pub fn all_vectors(n: usize) -> Vec<PackedVec> {
    (0..1usize << (2 * n))
        .map(|code| PackedVec::from_entries(&(0..n).map(|i| Gf4::from_code(((code >> (2 * i)) & 3) as u8)).collect::<Vec<_>>()))
        .collect()
}

fn same_space(basis: &[PackedVec], members: &[PackedVec]) -> bool {
    let dim = deltamat::vector::rank_of(basis, 64);
    dim == basis.len() && members.len() == 1usize << (2 * dim) && basis.iter().all(|b| members.contains(b))
}

/// ker(A+(X∪Y)*(X\Y)) with A = R(B, inv) equals the enumerated
/// {v ∈ ker B | π_Y(v) ∈ inv((ker B)^⊥)}.
pub fn matrix_bicycle_kernels(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(1..=n);
        let m = random_represented(rng, Field::Gf4, r, n);
        let z = m.bases()[rng.gen_range(0..m.bases().len())];
        let b = ok(bicycle::standard_representation(&m, z), "standard representation")?;
        let a = ok(bicycle::r_matrix(&b, Automorphism::Inv), "R(B, inv)")?;
        let everything = all_vectors(n);
        let in_ker = |v: &PackedVec| b.rows().iter().all(|row| row.dot(*v).is_zero());
        let ker: Vec<PackedVec> = everything.iter().copied().filter(in_ker).collect();
        // a spanning set of ker B, checked against the enumeration
        let ker_basis = b.kernel();
        ensure!(same_space(&ker_basis, &ker), "kernel basis of\n{b}");
        for y in bits::submasks(bits::full(n)) {
            let expect: Vec<PackedVec> = ker
                .iter()
                .copied()
                .filter(|v| ker_basis.iter().all(|u| v.project(y).apply(Automorphism::Inv).dot(*u).is_zero()))
                .collect();
            let a2 = ok(a.diag_complement(z | y).ppt(z & !y), "ppt")?;
            ensure!(same_space(&a2.null_space(), &expect), "Y = {y:b} for\n{b}");
        }
    }
    Ok(())
}

/// Row operations and nonzero column scalings: the same matroid, another representation.
pub fn mutate(rng: &mut impl Rng, b: &RectMatrix) -> RectMatrix {
    let mut out = b.clone();
    let rows = out.nrows();
    for _ in 0..6 {
        let (i, k) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
        if i != k {
            out.add_row_multiple(i, k, random_scalar(rng, Field::Gf4));
        } else {
            out.swap_rows(i, (i + 1) % rows);
        }
    }
    for j in 0..out.ncols() {
        out.scale_column(j, random_nonzero(rng, Field::Gf4));
    }
    out
}

pub fn quaternary_fixtures(rng: &mut impl Rng, count: usize) -> Vec<Matroid> {
    let mut out = vec![u25_quaternary()];
    while out.len() < count {
        let n = rng.gen_range(2..=6);
        let r = rng.gen_range(1..n);
        out.push(random_represented(rng, Field::Gf4, r, n));
    }
    out
}

pub fn representation_independence(rng: &mut impl Rng, fixtures: usize, mutations: usize) -> Outcome {
    for m in quaternary_fixtures(rng, fixtures) {
        let b = m.representation().expect("column matroid keeps its matrix").clone();
        let g = m.ground().clone();
        let mut reps = vec![b.clone()];
        reps.extend((0..mutations).map(|_| mutate(rng, &b)));
        for rep in &reps {
            ensure!(Matroid::column_matroid(rep) == m, "mutation changed the matroid of\n{b}");
            let ker = ok(Subspace::new(Field::Gf4, g.clone(), rep.kernel()), "kernel")?;
            for y in bits::submasks(g.full()) {
                let bc = ok(bicycle::bicycle_space(&ker, y), "bicycle space")?;
                let bm = ok(bicycle::bicycle_matroid(m.set_system(), y), "bicycle matroid")?;
                ensure!(bc.matroid() == bm, "Y = {} on\n{rep}", g.format_set(y));
                ensure!(bc.dim() == ok(bicycle::bicycle_dimension(m.set_system(), y), "dimension")?, "dimension at Y = {}", g.format_set(y));
            }
        }
    }
    Ok(())
}

fn sets_of(m: &Matroid) -> Vec<Mask> {
    m.bases().to_vec()
}

/// Minimal nonempty subsets lying in no basis.
pub fn circuits_oracle(bases: &[Mask], n: usize) -> Vec<Mask> {
    let dependent = |x: Mask| !bases.iter().any(|&b| x & !b == 0);
    bits::submasks(bits::full(n))
        .filter(|&x| x != 0 && dependent(x) && bits::ones(x).all(|u| !dependent(x & !bits::bit(u))))
        .collect()
}

pub fn orthogonal_oracle(b1: &[Mask], b2: &[Mask], n: usize) -> bool {
    let (c1, c2) = (circuits_oracle(b1, n), circuits_oracle(b2, n));
    c1.iter().all(|&x| c2.iter().all(|&y| (x & y).count_ones() != 1))
}

pub fn max_matroids_orthogonal(rng: &mut impl Rng, count: usize) -> Outcome {
    let mut systems: Vec<SetSystem> = binary_fixtures().iter().map(|m| m.set_system().clone()).collect();
    systems.push(u25_quaternary().into_set_system());
    for _ in 0..count {
        let n = rng.gen_range(1..=8);
        systems.push(random_vf_safe(rng, n));
    }
    for m in systems {
        let v = m.ground().full();
        let parts = [m.max_sets(), ok(m.twist(v), "*V")?.max_sets(), ok(m.loop_complement(v), "+V")?.max_sets()];
        let ms: Vec<Matroid> = parts.iter().map(|p| ok(Matroid::from_bases(p.clone()), "max sets")).collect::<Result<_, _>>()?;
        for i in 0..3 {
            for j in i + 1..3 {
                let lib = ok(ms[i].is_orthogonal(&ms[j]), "orthogonality")?;
                let oracle = orthogonal_oracle(&sets_of(&ms[i]), &sets_of(&ms[j]), m.n());
                ensure!(lib && oracle, "parts {i} and {j} of {m}: library {lib}, oracle {oracle}");
            }
        }
    }
    Ok(())
}

pub fn eulerian_bipartite_duality(rng: &mut impl Rng, count: usize) -> Outcome {
    let mut ms = binary_fixtures();
    for _ in 0..count {
        let n = rng.gen_range(1..=8);
        let r = rng.gen_range(0..=n);
        ms.push(random_represented(rng, Field::Gf2, r, n));
    }
    for m in ms {
        let ss = m.set_system();
        let eul = bicycle::is_eulerian_by_circuits(&m);
        let bip_dual = bicycle::is_bipartite(&m.dual());
        ensure!(eul == bip_dual, "{ss}: Eulerian {eul}, dual bipartite {bip_dual}");
        if m.representation().is_some() {
            ensure!(eul == ok(bicycle::is_eulerian(&m), "Eulerian")?, "{ss}: cycle-space and circuit-cover Eulerian differ");
        }
        ensure!(eul == ok(bicycle::is_eulerian_gen(ss), "gen")?, "{ss}: generalized Eulerian differs");
        ensure!(bicycle::is_bipartite(&m) == ok(bicycle::is_bipartite_gen(ss), "gen")?, "{ss}: generalized bipartite differs");
    }
    Ok(())
}

/// Σ_X Σ_{Z⊆X} w^{n((A+Z)[X])} against Q_{[1,1,1]}(M_A)(w).
pub fn interlace_identity(rng: &mut impl Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let n = rng.gen_range(0..=5);
        let a = random_inv_symmetric(rng, n);
        let mut coeffs = vec![0i64; n + 1];
        for x in bits::submasks(bits::full(n)) {
            for z in bits::submasks(x) {
                coeffs[a.diag_complement(z).principal(x).nullity()] += 1;
            }
        }
        let lhs = IntPoly::from_ints(&coeffs).to_rational();
        let rhs = ok(poly::transition_direct(&a.delta_matroid(), &TransitionWeights::from_ints(1, 1, 1)), "transition")?;
        ensure!(lhs == rhs, "interlace sum {lhs} vs transition {rhs} for\n{a}");
    }
    Ok(())
}

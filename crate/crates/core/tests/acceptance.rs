//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Expected values are written out literally in surface syntax and parsed,
//! or come from an independent construction (closed forms, hand sums).

use std::process::ExitCode;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supercontact_core::calculus::susy::{
    alpha_n1, alpha_std, eps, epsb, susy_map_n1, susy_map_n2, susy_vector_field,
};
use supercontact_core::calculus::{exterior_derivative, interior_product, lie_derivative};
use supercontact_core::components::{delta_components, expand_superfield, Supermultiplet121};
use supercontact_core::contact::{
    classify_contact_vf, hamiltonian_vf, hamiltonian_vf_closed_form, is_nonvanishing, kernel_basis,
    nondegenerate_on, reeb, ContactKind, OneForm,
};
use supercontact_core::lie::{
    decompose_mc, maurer_cartan, standard_coset, LieAlgebraPresentation, LieValued,
};
use supercontact_core::parse::{parse_expr, parse_vf, print_canonical, print_vf, ParserContext};
use supercontact_core::verify::verify_paper;
use supercontact_core::{
    canonicalize, Chart, Coeff, CoordinateMap, Generator, Parity, RawExpr, SuperExpr, VectorField,
};

const CASES: usize = 200;

struct Criterion {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

fn ctx2() -> ParserContext {
    ParserContext::new(Chart::r1n2())
}

fn ctx1() -> ParserContext {
    ParserContext::new(Chart::r1n1())
}

fn e2(s: &str) -> SuperExpr {
    parse_expr(s, &ctx2()).unwrap()
}

fn v2(s: &str) -> VectorField {
    parse_vf(s, &ctx2()).unwrap()
}

fn e1(s: &str) -> SuperExpr {
    parse_expr(s, &ctx1()).unwrap()
}

fn v1(s: &str) -> VectorField {
    parse_vf(s, &ctx1()).unwrap()
}

const ALPHA: &str = "dt + i*(th*dthb + thb*dth)";
const Q: &str = "@th + i*thb*@t";
const QB: &str = "@thb + i*th*@t";
const D: &str = "@th - i*thb*@t";
const DB: &str = "@thb - i*th*@t";
const R: &str = "-i*th*@th + i*thb*@thb";

fn bracket(x: &VectorField, y: &VectorField) -> VectorField {
    x.graded_commutator(y).unwrap()
}

fn c01() -> Criterion {
    let mut c = Criterion::new();
    let (q, qb, p) = (v2(Q), v2(QB), v2("@t"));
    let zero = v2("0*@t");
    c.eq("[Q,Qb]", bracket(&q, &qb), v2("2*i*@t"));
    c.eq("[Q,Q]", bracket(&q, &q), zero.clone());
    c.eq("[Qb,Qb]", bracket(&qb, &qb), zero.clone());
    c.eq("[Q,P]", bracket(&q, &p), zero.clone());
    c.eq("[Qb,P]", bracket(&qb, &p), zero);
    c
}

fn c02() -> Criterion {
    let mut c = Criterion::new();
    let chart = Chart::r1n2();
    let da = exterior_derivative(&chart, &e2(ALPHA));
    c.eq("d(alpha)", print_canonical(&da), "2*i*dth*dthb".to_string());
    c.check(
        "d(d(alpha)) = 0",
        exterior_derivative(&chart, &da).is_zero(),
    );
    c
}

fn c03() -> Criterion {
    let mut c = Criterion::new();
    let a = OneForm::new(Chart::r1n2(), e2(ALPHA)).unwrap();
    let k = kernel_basis(&a).unwrap();
    c.eq("basis", k.basis.clone(), vec![v2(D), v2(DB)]);
    c.eq("corank", k.corank, (1, 0));
    c.check(
        "i_D alpha = 0",
        interior_product(&v2(D), a.expr()).is_zero(),
    );
    c.check(
        "i_Db alpha = 0",
        interior_product(&v2(DB), a.expr()).is_zero(),
    );
    c
}

fn c04() -> Criterion {
    let mut c = Criterion::new();
    let a = OneForm::new(Chart::r1n2(), e2(ALPHA)).unwrap();
    let da = a.d();
    c.eq(
        "i_D d(alpha)",
        interior_product(&v2(D), &da),
        e2("-2*i*dthb"),
    );
    c.eq(
        "i_Db d(alpha)",
        interior_product(&v2(DB), &da),
        e2("-2*i*dth"),
    );
    let k = kernel_basis(&a).unwrap();
    c.check("det body != 0", nondegenerate_on(&a, &k).unwrap());
    c
}

fn c05() -> Criterion {
    let mut c = Criterion::new();
    let map = susy_map_n2(&eps(), &epsb());
    // hand-written map, compared against the built-in one
    let pairs = [
        ("t", e2("t + i*(eps*thb - th*epsb)")),
        ("th", e2("th + eps")),
        ("thb", e2("thb + epsb")),
    ];
    let refs: Vec<(&str, SuperExpr)> = pairs.iter().map(|(n, e)| (*n, e.clone())).collect();
    c.eq(
        "map",
        CoordinateMap::from_pairs(Chart::r1n2(), &refs).unwrap(),
        map.clone(),
    );
    c.eq(
        "dt'",
        map.differential_image(0),
        e2("dt - i*epsb*dth - i*eps*dthb"),
    );
    c.eq("alpha'", map.pullback(&e2(ALPHA)).unwrap(), e2(ALPHA));
    c
}

fn c06() -> Criterion {
    let mut c = Criterion::new();
    let a = e2(ALPHA);
    c.check("L_Q alpha", lie_derivative(&v2(Q), &a).is_zero());
    c.check("L_Qb alpha", lie_derivative(&v2(QB), &a).is_zero());
    let x = v2("eps*@th + epsb*@thb + i*(eps*thb + epsb*th)*@t");
    c.eq(
        "eps Q + epsb Qb",
        x.clone(),
        susy_vector_field(&eps(), &epsb()),
    );
    c.check(
        "L_(eps Q + epsb Qb) alpha",
        lie_derivative(&x, &a).is_zero(),
    );
    c
}

fn c07() -> Criterion {
    let mut c = Criterion::new();
    let a = OneForm::new(Chart::r1n2(), e2(ALPHA)).unwrap();
    let p = reeb(&a).unwrap();
    c.eq("P", p.clone(), v2("@t"));
    c.eq(
        "i_P alpha",
        interior_product(&p, a.expr()),
        SuperExpr::one(),
    );
    c.check("i_P d(alpha) = 0", interior_product(&p, &a.d()).is_zero());
    c.eq(
        "P strict",
        classify_contact_vf(&p, &a).kind,
        ContactKind::Strict,
    );
    c
}

fn c08() -> Criterion {
    let mut c = Criterion::new();
    let z = bracket(&v2(D), &v2(DB));
    c.eq("[D,Db]", z.clone(), v2("-2*i*@t"));
    let pairing = interior_product(&z, &e2(ALPHA));
    c.check("i_[D,Db] alpha != 0", !pairing.is_zero());
    c.note(format!("i_[D,Db] alpha = {}", print_canonical(&pairing)));
    c
}

fn c09() -> Criterion {
    let mut c = Criterion::new();
    let mut ctx = ctx2();
    ctx.declare_odd_constant("eta1");
    ctx.declare_odd_constant("eta2");
    let pe = |s: &str| parse_expr(s, &ctx).unwrap();
    // beta = eta1*eta2 is even and squares to zero, so e^{-i beta} = 1 - i beta exactly
    let map = CoordinateMap::from_pairs(
        Chart::r1n2(),
        &[
            ("th", pe("(1 - i*eta1*eta2)*th")),
            ("thb", pe("(1 + i*eta1*eta2)*thb")),
        ],
    )
    .unwrap();
    c.eq("R pullback", map.pullback(&e2(ALPHA)).unwrap(), e2(ALPHA));
    let (r, q, qb, p) = (v2(R), v2(Q), v2(QB), v2("@t"));
    c.eq("[R,Q]", bracket(&r, &q), v2("i*(@th + i*thb*@t)"));
    c.eq("[R,Qb]", bracket(&r, &qb), v2("-i*(@thb + i*th*@t)"));
    c.check("[R,P] = 0", bracket(&r, &p).is_zero());
    c.check("[R,R] = 0", bracket(&r, &r).is_zero());
    c
}

fn fun(n: &str, p: Parity, k: u32) -> SuperExpr {
    SuperExpr::gen(Generator::function(n, p, k))
}

/// Independent closed form: `(a + i/2(th chi + chib thb)) @t + (i/2)(Db Ups) @th + (i/2)(D Ups) @thb`,
/// with `D`, `Db` built from literal text.
fn closed_form(a: &SuperExpr, chi: &SuperExpr, chib: &SuperExpr, ups: &SuperExpr) -> VectorField {
    let half_i = e2("1/2*i");
    let (th, thb) = (e2("th"), e2("thb"));
    let xt = a + &(&half_i * &(&th * chi + chib * &thb));
    let xth = &half_i * &v2(DB).apply(ups);
    let xthb = &half_i * &v2(D).apply(ups);
    VectorField::new(Chart::r1n2(), vec![xt, xth, xthb])
}

fn assemble(a: &SuperExpr, chi: &SuperExpr, chib: &SuperExpr, cc: &SuperExpr) -> SuperExpr {
    let i = SuperExpr::i();
    let (th, thb) = (e2("th"), e2("thb"));
    a + &(&i * &(&th * chi)) + &i * &(chib * &thb) + &i * &(&(&th * &thb) * cc)
}

fn random_poly(rng: &mut ChaCha8Rng, odd_prefix: Option<&str>) -> SuperExpr {
    let t = e2("t");
    let mut acc = SuperExpr::zero();
    let mut power = SuperExpr::one();
    for k in 0..4 {
        let coeff = Coeff::ratio(rng.random_range(-5..=5), rng.random_range(1..=3));
        let mono = match odd_prefix {
            Some(pre) => &power * &SuperExpr::gen(Generator::odd_constant(&format!("{pre}{k}"))),
            None => power.clone(),
        };
        acc = acc + mono.scale(&coeff);
        power = &power * &t;
    }
    acc
}

fn c10() -> Criterion {
    let mut c = Criterion::new();
    let a_form = OneForm::new(Chart::r1n2(), e2(ALPHA)).unwrap();
    let (a, chi, chib, cc) = (
        fun("a", Parity::Even, 0),
        fun("chi", Parity::Odd, 0),
        fun("chib", Parity::Odd, 0),
        fun("c", Parity::Even, 0),
    );
    let ups = assemble(&a, &chi, &chib, &cc);
    c.eq(
        "component shape",
        ups.clone(),
        e2("a(t) + i*th*chi(t) + i*chib(t)*thb + i*th*thb*c(t)"),
    );
    let x = hamiltonian_vf(&a_form, &ups).unwrap();
    c.eq("generic", x.clone(), closed_form(&a, &chi, &chib, &ups));
    c.eq(
        "library closed form",
        hamiltonian_vf_closed_form(&ups).unwrap(),
        x.clone(),
    );
    c.eq(
        "L_X alpha = dot(Ups) alpha",
        lie_derivative(&x, a_form.expr()),
        &ups.time_derivative() * a_form.expr(),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut agree = 0;
    for _ in 0..50 {
        let (a, chi, chib, cc) = (
            random_poly(&mut rng, None),
            random_poly(&mut rng, Some("k")),
            random_poly(&mut rng, Some("kb")),
            random_poly(&mut rng, None),
        );
        let ups = assemble(&a, &chi, &chib, &cc);
        let x = hamiltonian_vf(&a_form, &ups).unwrap();
        if x == closed_form(&a, &chi, &chib, &ups)
            && lie_derivative(&x, a_form.expr()) == &ups.time_derivative() * a_form.expr()
        {
            agree += 1;
        }
    }
    c.eq("random instances agreeing", agree, 50);

    c.eq(
        "Ups = 1",
        hamiltonian_vf(&a_form, &SuperExpr::one()).unwrap(),
        v2("@t"),
    );
    c.check(
        "odd Ups rejected",
        hamiltonian_vf(&a_form, &fun("chi", Parity::Odd, 0)).is_err(),
    );

    let ups = e2("2*(eps*thb - th*epsb)");
    let got = hamiltonian_vf(&a_form, &ups).unwrap();
    let want = v2("eps*@th + epsb*@thb + i*(eps*thb + epsb*th)*@t");
    c.note(format!("X for 2(eps thb - th epsb) = {}", print_vf(&got)));
    c.eq(
        "Ups = 2(eps thb - th epsb) gives eps Q + epsb Qb",
        print_vf(&got),
        print_vf(&want),
    );
    c
}

fn c11() -> Criterion {
    let mut c = Criterion::new();
    let a_form = OneForm::new(Chart::r1n2(), e2(ALPHA)).unwrap();
    let ups = e2("lam*t + 2*t*(eps*thb - th*epsb)");
    let x = hamiltonian_vf(&a_form, &ups).unwrap();
    c.eq(
        "i_X alpha = Ups",
        interior_product(&x, a_form.expr()),
        ups.clone(),
    );
    let rhs = &v2("@t").apply(&ups) * a_form.expr() - exterior_derivative(&Chart::r1n2(), &ups);
    c.eq(
        "i_X d(alpha) = P(Ups) alpha - d(Ups)",
        interior_product(&x, &a_form.d()),
        rhs,
    );
    let display = [
        e2("lam*t + i*t*(eps*thb - th*epsb)"),
        e2("1/2*lam*th + eps*(t - i*th*thb)"),
        e2("1/2*lam*thb + (t + i*th*thb)*epsb"),
    ];
    for (k, name) in ["t", "th", "thb"].iter().enumerate() {
        let got = x.component(k);
        if *got == display[k] {
            c.note(format!("d{name} agrees with display"));
        } else {
            c.note(format!(
                "d{name} = {} differs from display by {}",
                print_canonical(got),
                print_canonical(&(got - &display[k]))
            ));
        }
    }
    c
}

fn c12() -> Criterion {
    let mut c = Criterion::new();
    let m = Supermultiplet121::standard();
    c.eq(
        "expansion",
        expand_superfield(&m),
        e2("q(t) + i*th*psi(t) + i*psib(t)*thb + i*th*thb*b(t)"),
    );
    let v = delta_components(&susy_vector_field(&eps(), &epsb()), &m).unwrap();
    c.eq("dq", v.dq, e2("i*eps*psi(t) + i*psib(t)*epsb"));
    c.eq("dpsi", v.dpsi, e2("(b(t) - q'(t))*epsb"));
    c.eq("dpsib", v.dpsib, e2("eps*(b(t) + q'(t))"));
    c.eq("db", v.db, e2("i*psib'(t)*epsb - i*eps*psi'(t)"));
    c
}

fn c13() -> Criterion {
    let mut c = Criterion::new();
    let alg = Arc::new(LieAlgebraPresentation::n2());
    let x = LieValued::from_pairs(
        alg.clone(),
        &[("P", e2("i*t")), ("Q", e2("i*th")), ("Qb", e2("i*thb"))],
    )
    .unwrap();
    c.eq(
        "coset exponent",
        Some(x.clone()),
        standard_coset(&alg).map(|(_, x)| x),
    );
    let mc = maurer_cartan(&Chart::r1n2(), &x, 16).unwrap();
    c.check("terminates by order 2", mc.order <= 2);
    let split = decompose_mc(&mc.omega, &["P"]).unwrap();
    let p = split.stabilizer.coefficient("P").unwrap().clone();
    c.note(format!("Omega_P = {}", print_canonical(&p)));
    c.eq(
        "Omega_Q",
        mc.omega.coefficient("Q").unwrap().clone(),
        e2("dth"),
    );
    c.eq(
        "Omega_Qb",
        mc.omega.coefficient("Qb").unwrap().clone(),
        e2("dthb"),
    );
    c.eq(
        "Omega_P = alpha",
        print_canonical(&p),
        print_canonical(&alpha_std()),
    );
    c
}

fn c14() -> Criterion {
    let mut c = Criterion::new();
    let a1 = e1("dt + i*th*dth");
    c.eq("alpha_1", a1.clone(), alpha_n1());
    let form = OneForm::new(Chart::r1n1(), a1.clone()).unwrap();
    c.check("nonvanishing", is_nonvanishing(&form));
    let k = kernel_basis(&form).unwrap();
    c.eq("kernel", k.basis.clone(), vec![v1("@th - i*th*@t")]);
    c.check("nondegenerate", nondegenerate_on(&form, &k).unwrap());
    c.eq("Reeb", reeb(&form).unwrap(), v1("@t"));
    let (q, p) = (v1("@th + i*th*@t"), v1("@t"));
    c.eq("[Q,Q]", bracket(&q, &q), v1("2*i*@t"));
    c.check("[Q,P] = 0", bracket(&q, &p).is_zero());
    let map = CoordinateMap::from_pairs(
        Chart::r1n1(),
        &[("t", e1("t + i*eps*th")), ("th", e1("th + eps"))],
    )
    .unwrap();
    c.eq("susy map", map.clone(), susy_map_n1(&eps()));
    c.eq("pullback", map.pullback(&a1).unwrap(), a1.clone());
    let alg = Arc::new(LieAlgebraPresentation::n1());
    let x = LieValued::from_pairs(alg, &[("P", e1("i*t")), ("Q", e1("i*th"))]).unwrap();
    let mc = maurer_cartan(&Chart::r1n1(), &x, 16).unwrap();
    let omega_p = mc.omega.coefficient("P").unwrap().clone();
    c.note(format!("Omega_P = {}", print_canonical(&omega_p)));
    c.eq(
        "MC P-component = alpha_1",
        print_canonical(&omega_p),
        print_canonical(&a1),
    );
    c
}

// ---------------------------------------------------------------- properties

fn leaves() -> Vec<Generator> {
    let ch = Chart::r1n2();
    let mut g: Vec<Generator> = (0..3).map(|i| ch.coordinate(i)).collect();
    g.extend((0..3).map(|i| ch.differential(i)));
    g.push(Generator::odd_constant("eps"));
    g.push(Generator::odd_constant("epsb"));
    g.push(Generator::parameter("lam"));
    g.push(Generator::function("q", Parity::Even, 0));
    g.push(Generator::function("q", Parity::Even, 1));
    g.push(Generator::function("psi", Parity::Odd, 0));
    g.push(Generator::function("b", Parity::Even, 2));
    g
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    let re = Coeff::ratio(rng.random_range(-4..=4), rng.random_range(1..=3));
    let im = Coeff::ratio(rng.random_range(-2..=2), rng.random_range(1..=2));
    &re + &(&Coeff::i() * &im)
}

fn random_raw(rng: &mut ChaCha8Rng, pool: &[Generator], depth: u32) -> RawExpr {
    let pick = if depth == 0 {
        rng.random_range(0..2)
    } else {
        rng.random_range(0..5)
    };
    match pick {
        0 => RawExpr::Num(random_coeff(rng)),
        1 => RawExpr::Gen(pool[rng.random_range(0..pool.len())].clone()),
        2 => RawExpr::Add(
            (0..rng.random_range(2..4))
                .map(|_| random_raw(rng, pool, depth - 1))
                .collect(),
        ),
        3 => RawExpr::Mul(
            (0..rng.random_range(2..4))
                .map(|_| random_raw(rng, pool, depth - 1))
                .collect(),
        ),
        _ => RawExpr::Neg(Box::new(random_raw(rng, pool, depth - 1))),
    }
}

fn random_expr(rng: &mut ChaCha8Rng, pool: &[Generator]) -> SuperExpr {
    canonicalize(&random_raw(rng, pool, 3))
}

fn functions_only(pool: &[Generator]) -> Vec<Generator> {
    pool.iter()
        .filter(|g| !g.is_differential())
        .cloned()
        .collect()
}

/// Random vector field of the given parity, components free of differentials.
fn random_vf(rng: &mut ChaCha8Rng, parity: Parity) -> VectorField {
    let ch = Chart::r1n2();
    let pool = functions_only(&leaves());
    let comps = (0..3)
        .map(|i| random_expr(rng, &pool).part(parity + ch.parity(i)))
        .collect();
    VectorField::new(ch, comps)
}

fn random_parity(rng: &mut ChaCha8Rng) -> Parity {
    if rng.random_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Canonical form rebuilt as an unsorted sum of products.
fn to_raw_shuffled(e: &SuperExpr, rng: &mut ChaCha8Rng) -> RawExpr {
    let mut terms = Vec::new();
    for (term, coeff) in e.terms() {
        let mut factors: Vec<Generator> = Vec::new();
        for (g, k) in term.even_factors() {
            for _ in 0..*k {
                factors.push(g.clone());
            }
        }
        let odd = term.odd_factors().to_vec();
        // insert even factors at random places; odd order is kept so no sign changes
        let mut seq: Vec<RawExpr> = odd.into_iter().map(RawExpr::Gen).collect();
        for g in factors {
            let at = rng.random_range(0..=seq.len());
            seq.insert(at, RawExpr::Gen(g));
        }
        seq.insert(0, RawExpr::Num(coeff.clone()));
        terms.push(RawExpr::Mul(seq));
    }
    let n = terms.len();
    for k in (1..n).rev() {
        terms.swap(k, rng.random_range(0..=k));
    }
    RawExpr::Add(terms)
}

fn random_map(rng: &mut ChaCha8Rng) -> CoordinateMap {
    let ch = Chart::r1n2();
    let pool: Vec<Generator> = vec![
        ch.coordinate(1),
        ch.coordinate(2),
        Generator::odd_constant("eps"),
        Generator::odd_constant("epsb"),
        Generator::parameter("lam"),
    ];
    // t moves by a nilpotent even shift so function symbols can be transported
    let shift = random_expr(rng, &pool).part(Parity::Even);
    let shift = &shift - &shift.body();
    let t_img = &ch.coord_expr(0) + &shift;
    let mut odd_imgs = Vec::new();
    for i in 1..3 {
        let lin =
            &ch.coord_expr(i).scale(&Coeff::int(rng.random_range(1..=3))) + &ch.coord_expr(3 - i);
        let extra = random_expr(rng, &pool).part(Parity::Odd);
        odd_imgs.push(lin + extra);
    }
    CoordinateMap::new(ch, vec![t_img, odd_imgs[0].clone(), odd_imgs[1].clone()]).unwrap()
}

fn c15() -> Criterion {
    let mut c = Criterion::new();
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let pool = leaves();
    let chart = Chart::r1n2();

    let mut bad = 0;
    for _ in 0..CASES {
        let e = random_expr(&mut rng, &pool);
        if canonicalize(&to_raw_shuffled(&e, &mut rng)) != e {
            bad += 1;
        }
    }
    c.eq("canonicalization idempotence failures", bad, 0);

    let mut bad = 0;
    for _ in 0..CASES {
        let (pa, pb) = (random_parity(&mut rng), random_parity(&mut rng));
        let a = random_expr(&mut rng, &pool).part(pa);
        let b = random_expr(&mut rng, &pool).part(pb);
        let ba = &b * &a;
        let want = if pa.is_odd() && pb.is_odd() { -ba } else { ba };
        if &a * &b != want {
            bad += 1;
        }
    }
    c.eq("supercommutativity failures", bad, 0);

    let mut bad = 0;
    for _ in 0..CASES {
        let w = random_expr(&mut rng, &pool);
        if !exterior_derivative(&chart, &exterior_derivative(&chart, &w)).is_zero() {
            bad += 1;
        }
    }
    c.eq("d^2 = 0 failures", bad, 0);

    let mut bad = 0;
    for _ in 0..CASES {
        let ps = [
            random_parity(&mut rng),
            random_parity(&mut rng),
            random_parity(&mut rng),
        ];
        let (x, y, z) = (
            random_vf(&mut rng, ps[0]),
            random_vf(&mut rng, ps[1]),
            random_vf(&mut rng, ps[2]),
        );
        let lhs = bracket(&x, &bracket(&y, &z));
        let second = bracket(&y, &bracket(&x, &z));
        let second = if ps[0].is_odd() && ps[1].is_odd() {
            -&second
        } else {
            second
        };
        if lhs != &bracket(&bracket(&x, &y), &z) + &second {
            bad += 1;
        }
    }
    c.eq("graded Jacobi failures", bad, 0);

    let mut bad = 0;
    for _ in 0..CASES {
        let (px, py) = (random_parity(&mut rng), random_parity(&mut rng));
        let (x, y) = (random_vf(&mut rng, px), random_vf(&mut rng, py));
        let w = random_expr(&mut rng, &pool);
        let lhs = lie_derivative(&bracket(&x, &y), &w);
        let yx = lie_derivative(&y, &lie_derivative(&x, &w));
        let yx = if px.is_odd() && py.is_odd() { -yx } else { yx };
        if lhs != lie_derivative(&x, &lie_derivative(&y, &w)) - yx {
            bad += 1;
        }
    }
    c.eq("L_[X,Y] = [L_X, L_Y] failures", bad, 0);

    let mut bad = 0;
    for _ in 0..CASES {
        let (phi, psi) = (random_map(&mut rng), random_map(&mut rng));
        let w = random_expr(&mut rng, &pool);
        let composed = phi.compose(&psi).unwrap();
        let ok_f =
            composed.pullback(&w).unwrap() == psi.pullback(&phi.pullback(&w).unwrap()).unwrap();
        let ok_d = phi.pullback(&exterior_derivative(&chart, &w)).unwrap()
            == exterior_derivative(&chart, &phi.pullback(&w).unwrap());
        if !(ok_f && ok_d) {
            bad += 1;
        }
    }
    c.eq("pullback functoriality / d-commutation failures", bad, 0);

    let mut bad = 0;
    let ctx = ctx2();
    for _ in 0..CASES {
        let e = random_expr(&mut rng, &pool);
        if parse_expr(&print_canonical(&e), &ctx).ok() != Some(e) {
            bad += 1;
        }
    }
    c.eq("parse/print roundtrip failures", bad, 0);
    c
}

fn c16() -> Criterion {
    let mut c = Criterion::new();
    let mutated = e2("dt + th*dthb + thb*dth");
    let report = verify_paper(Some(&mutated));
    c.check("overall fails", !report.passed());
    for g in 4..=7 {
        c.check(&format!("group {g} fails"), !report.group_passed(g));
    }
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|k| {
            k.group >= 4 && k.group <= 7 && k.status != supercontact_core::verify::Status::Pass
        })
        .map(|k| k.id)
        .collect();
    c.note(format!("failed in 4-7: {}", failed.join(", ")));
    c
}

fn main() -> ExitCode {
    let criteria: [(u8, &str, fn() -> Criterion); 16] = [
        (1, "SUSY algebra", c01),
        (2, "d(alpha) and d^2", c02),
        (3, "kernel distribution", c03),
        (4, "nondegeneracy", c04),
        (5, "SUSY pullback invariance", c05),
        (6, "strict contact SUSY fields", c06),
        (7, "Reeb field", c07),
        (8, "Frobenius failure", c08),
        (9, "R-symmetry", c09),
        (10, "Hamiltonian vector fields", c10),
        (11, "superconformal-like example", c11),
        (12, "component SUSY table", c12),
        (13, "Maurer-Cartan form (N=2)", c13),
        (14, "N=1 suite", c14),
        (15, "property suites", c15),
        (16, "negative control", c16),
    ];
    let mut failed = 0;
    for (n, title, run) in criteria {
        let result = std::panic::catch_unwind(run);
        let (ok, extra) = match result {
            Ok(c) => {
                let mut extra = c.failures.clone();
                extra.extend(c.notes.iter().map(|s| format!("note: {s}")));
                (c.failures.is_empty(), extra)
            }
            Err(_) => (false, vec!["panicked".to_string()]),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {} {title}",
            if ok { "PASS" } else { "FAIL" }
        );
        for line in extra {
            println!("    {line}");
        }
    }
    println!("{} of 16 criteria passed", 16 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The fixed, ordered list of identity checks run by `verify paper`.
//!
//! Every check is exact: expressions are compared after canonicalization.
//! Checks that depend on the contact form take it as input so that a
//! mutated form can be run through the same list.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::calculus::susy::{
    alpha_n1, alpha_std, eps, epsb, susy_map_n1, susy_map_n2, susy_vector_field,
};
use crate::calculus::{
    exterior_derivative, interior_product, lie_derivative, Chart, CoordinateMap, SusyFields,
    VectorField,
};
use crate::coeff::Coeff;
use crate::components::{delta_components, expand_superfield, Supermultiplet121};
use crate::contact::{
    classify_contact_vf, hamiltonian_vf, hamiltonian_vf_closed_form, infinitesimal_transformations,
    is_nonvanishing, kernel_basis, nondegenerate_on, reeb, ContactKind, OneForm,
};
use crate::error::ContactError;
use crate::expr::SuperExpr;
use crate::generator::{Generator, Parity};
use crate::lie::{
    decompose_mc, flatness_defect, maurer_cartan, standard_coset, LieAlgebraPresentation,
    DEFAULT_ORDER_CAP,
};
use crate::parse::{print_canonical, print_vf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub detail: String,
    /// Acceptance group this check belongs to.
    #[serde(skip)]
    pub group: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub overall: Status,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn group_passed(&self, group: u8) -> bool {
        self.checks
            .iter()
            .filter(|c| c.group == group)
            .all(|c| c.status == Status::Pass)
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{s} {:<28} {:<44} {}\n", c.id, c.anchor, c.detail));
        }
        let passed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

type Outcome = Result<(bool, String), String>;

struct Builder {
    checks: Vec<Check>,
    group: u8,
}

impl Builder {
    fn run(&mut self, id: &'static str, anchor: &'static str, f: impl FnOnce() -> Outcome) {
        let (status, detail) = match f() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.checks.push(Check {
            id,
            anchor,
            status,
            detail,
            group: self.group,
        });
    }
}

fn same(got: &SuperExpr, want: &SuperExpr) -> (bool, String) {
    if got == want {
        (true, print_canonical(got))
    } else {
        (
            false,
            format!(
                "expected {}, got {}",
                print_canonical(want),
                print_canonical(got)
            ),
        )
    }
}

fn same_vf(got: &VectorField, want: &VectorField) -> (bool, String) {
    if got == want {
        (true, print_vf(got))
    } else {
        (
            false,
            format!("expected {}, got {}", print_vf(want), print_vf(got)),
        )
    }
}

fn c(re: i64, im: i64) -> SuperExpr {
    SuperExpr::constant(Coeff::gaussian(re, im))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `a + i th chi + i chib thb + i th thb c` with the four components
/// random polynomials in `t` of degree at most 3. Odd components carry a
/// fresh odd constant per monomial.
pub fn random_component_superfield(rng: &mut ChaCha8Rng) -> SuperExpr {
    let t = Chart::r1n2().coord_expr(0);
    let mut poly = |odd: Option<&str>| {
        let mut acc = SuperExpr::zero();
        let mut power = SuperExpr::one();
        for k in 0..4 {
            let coeff = Coeff::gaussian(rng.random_range(-3..=3), rng.random_range(-3..=3));
            let mono = match odd {
                Some(prefix) => {
                    &power * &SuperExpr::gen(Generator::odd_constant(&format!("{prefix}{k}")))
                }
                None => power.clone(),
            };
            acc = acc + mono.scale(&coeff);
            power = &power * &t;
        }
        acc
    };
    let m = Supermultiplet121 {
        q: poly(None),
        psi: poly(Some("eta")),
        psib: poly(Some("etab")),
        b: poly(None),
    };
    expand_superfield(&m)
}

fn n2_fields() -> SusyFields {
    SusyFields::for_chart(&Chart::r1n2()).expect("built-in chart")
}

fn beta() -> SuperExpr {
    &SuperExpr::gen(Generator::odd_constant("eta1"))
        * &SuperExpr::gen(Generator::odd_constant("eta2"))
}

/// Run every check. `alpha` replaces the standard `r1n2` contact form in
/// all checks that use it.
pub fn verify_paper(alpha: Option<&SuperExpr>) -> Report {
    let chart = Chart::r1n2();
    let a_expr = alpha.cloned().unwrap_or_else(alpha_std);
    let form = || OneForm::new(chart.clone(), a_expr.clone()).map_err(err);
    let f = n2_fields();
    let (q, qb, p, r, d, db) = (
        f.q.clone(),
        f.qb.clone().unwrap(),
        f.p.clone(),
        f.r.clone().unwrap(),
        f.d.clone(),
        f.db.clone().unwrap(),
    );
    let (th, thb) = (chart.coord_expr(1), chart.coord_expr(2));
    let (dth, dthb) = (chart.differential_expr(1), chart.differential_expr(2));
    let mut b = Builder {
        checks: Vec::new(),
        group: 1,
    };

    let bracket = |x: &VectorField, y: &VectorField, want: &VectorField| -> Outcome {
        Ok(same_vf(&x.graded_commutator(y).map_err(err)?, want))
    };
    let zero = VectorField::zero(chart.clone());
    let two_i_p = p.scale_left(&c(0, 2));
    b.run("n2.bracket.QQb", "[Q,Qb] = 2i d/dt", || {
        bracket(&q, &qb, &two_i_p)
    });
    b.run("n2.bracket.QQ", "[Q,Q] = 0", || bracket(&q, &q, &zero));
    b.run("n2.bracket.QbQb", "[Qb,Qb] = 0", || {
        bracket(&qb, &qb, &zero)
    });
    b.run("n2.bracket.QP", "[Q,P] = 0", || bracket(&q, &p, &zero));
    b.run("n2.bracket.QbP", "[Qb,P] = 0", || bracket(&qb, &p, &zero));

    b.group = 2;
    b.run("n2.dalpha", "d(alpha) = 2i dth dthb", || {
        Ok(same(&form()?.d(), &(&c(0, 2) * &(&dth * &dthb))))
    });
    b.run("n2.ddalpha", "d(d(alpha)) = 0", || {
        Ok(same(
            &exterior_derivative(&chart, &form()?.d()),
            &SuperExpr::zero(),
        ))
    });

    b.group = 3;
    b.run("n2.kernel", "ker(alpha) = span{D, Db}", || {
        let k = kernel_basis(&form()?).map_err(err)?;
        let text = k.basis.iter().map(print_vf).collect::<Vec<_>>().join("; ");
        Ok((
            k.basis == vec![d.clone(), db.clone()] && k.corank == (1, 0),
            text,
        ))
    });
    b.run(
        "n2.kernel.annihilates",
        "i_D alpha = i_Db alpha = 0",
        || {
            let a = form()?;
            let (x, y) = (
                interior_product(&d, a.expr()),
                interior_product(&db, a.expr()),
            );
            Ok((
                x.is_zero() && y.is_zero(),
                format!("{}; {}", print_canonical(&x), print_canonical(&y)),
            ))
        },
    );

    b.group = 4;
    b.run("n2.nondeg.iD", "i_D d(alpha) = -2i dthb", || {
        Ok(same(
            &interior_product(&d, &form()?.d()),
            &(&c(0, -2) * &dthb),
        ))
    });
    b.run("n2.nondeg.iDb", "i_Db d(alpha) = -2i dth", || {
        Ok(same(
            &interior_product(&db, &form()?.d()),
            &(&c(0, -2) * &dth),
        ))
    });
    b.run(
        "n2.nondeg.det",
        "d(alpha) nondegenerate on ker(alpha)",
        || {
            let a = form()?;
            let k = kernel_basis(&a).map_err(err)?;
            let ok = nondegenerate_on(&a, &k).map_err(err)?;
            Ok((ok, format!("nondegenerate: {ok}")))
        },
    );

    b.group = 5;
    let susy = susy_map_n2(&eps(), &epsb());
    b.run(
        "n2.pullback.dt",
        "dt' = dt - i epsb dth - i eps dthb",
        || {
            let want = chart.differential_expr(0)
                - &c(0, 1) * &(&epsb() * &dth)
                - &c(0, 1) * &(&eps() * &dthb);
            Ok(same(&susy.differential_image(0), &want))
        },
    );
    b.run(
        "n2.pullback.alpha",
        "SUSY pullback of alpha = alpha",
        || {
            let a = form()?;
            Ok(same(&susy.pullback(a.expr()).map_err(err)?, a.expr()))
        },
    );

    b.group = 6;
    let strict = |x: &VectorField| -> Outcome {
        Ok(same(&lie_derivative(x, form()?.expr()), &SuperExpr::zero()))
    };
    b.run("n2.strict.Q", "L_Q alpha = 0", || strict(&q));
    b.run("n2.strict.Qb", "L_Qb alpha = 0", || strict(&qb));
    b.run("n2.strict.susy", "L_(eps Q + epsb Qb) alpha = 0", || {
        strict(&susy_vector_field(&eps(), &epsb()))
    });

    b.group = 7;
    b.run("n2.reeb", "Reeb field = d/dt", || {
        Ok(same_vf(&reeb(&form()?).map_err(err)?, &p))
    });
    b.run(
        "n2.reeb.conditions",
        "i_P alpha = 1, i_P d(alpha) = 0",
        || {
            let a = form()?;
            let pr = reeb(&a).map_err(err)?;
            let (x, y) = (
                interior_product(&pr, a.expr()),
                interior_product(&pr, &a.d()),
            );
            Ok((
                x == SuperExpr::one() && y.is_zero(),
                format!("{}; {}", print_canonical(&x), print_canonical(&y)),
            ))
        },
    );
    b.run(
        "n2.reeb.strict_algebra",
        "P, Q, Qb strict contact for alpha",
        || {
            let a = form()?;
            let kinds: Vec<ContactKind> = [&p, &q, &qb]
                .iter()
                .map(|x| classify_contact_vf(x, &a).kind)
                .collect();
            Ok((
                kinds.iter().all(|k| *k == ContactKind::Strict),
                format!("{kinds:?}"),
            ))
        },
    );

    b.group = 8;
    let ddb = d.graded_commutator(&db);
    b.run("n2.frobenius.bracket", "[D,Db] = -2i d/dt", || {
        Ok(same_vf(
            ddb.as_ref().map_err(err)?,
            &p.scale_left(&c(0, -2)),
        ))
    });
    b.run("n2.frobenius.pairing", "i_[D,Db] alpha != 0", || {
        let x = interior_product(ddb.as_ref().map_err(err)?, form()?.expr());
        Ok((!x.is_zero(), print_canonical(&x)))
    });

    b.group = 9;
    b.run(
        "n2.rsym.pullback",
        "alpha invariant under th -> e^{-i beta} th",
        || {
            let ib = &SuperExpr::i() * &beta();
            let map = CoordinateMap::from_pairs(
                chart.clone(),
                &[
                    ("th", &(SuperExpr::one() - ib.clone()) * &th),
                    ("thb", &(SuperExpr::one() + ib) * &thb),
                ],
            )
            .map_err(err)?;
            let a = form()?;
            Ok(same(&map.pullback(a.expr()).map_err(err)?, a.expr()))
        },
    );
    b.run(
        "n2.rsym.table",
        "[R,Q] = iQ, [R,Qb] = -iQb, [R,P] = [R,R] = 0",
        || {
            let got = [
                r.graded_commutator(&q).map_err(err)?,
                r.graded_commutator(&qb).map_err(err)?,
                r.graded_commutator(&p).map_err(err)?,
                r.graded_commutator(&r).map_err(err)?,
            ];
            let want = [
                q.scale_left(&c(0, 1)),
                qb.scale_left(&c(0, -1)),
                zero.clone(),
                zero.clone(),
            ];
            let text = got.iter().map(print_vf).collect::<Vec<_>>().join("; ");
            Ok((got == want, text))
        },
    );

    b.group = 10;
    let generic = expand_superfield(&Supermultiplet121::from_symbols("a", "chi", "chib", "c"));
    b.run("n2.ham.closed_form", "X_Ups solver = closed form", || {
        let got = hamiltonian_vf(&form()?, &generic).map_err(err)?;
        Ok(same_vf(
            &got,
            &hamiltonian_vf_closed_form(&generic).map_err(err)?,
        ))
    });
    b.run(
        "n2.ham.random50",
        "X_Ups solver = closed form, 50 random",
        || {
            let a = form()?;
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for k in 0..50 {
                let ups = random_component_superfield(&mut rng);
                let got = hamiltonian_vf(&a, &ups).map_err(err)?;
                let want = hamiltonian_vf_closed_form(&ups).map_err(err)?;
                if got != want {
                    return Ok((
                        false,
                        format!(
                            "instance {k}: expected {}, got {}",
                            print_vf(&want),
                            print_vf(&got)
                        ),
                    ));
                }
            }
            Ok((true, "50/50 agree".into()))
        },
    );
    b.run(
        "n2.ham.table",
        "delta t, delta th, delta thb of X_Ups",
        || {
            let x = hamiltonian_vf(&form()?, &generic).map_err(err)?;
            let fun = |n: &str, p, k| SuperExpr::gen(Generator::function(n, p, k));
            let (av, ad, chi, chid, chib, chibd, cv) = (
                fun("a", Parity::Even, 0),
                fun("a", Parity::Even, 1),
                fun("chi", Parity::Odd, 0),
                fun("chi", Parity::Odd, 1),
                fun("chib", Parity::Odd, 0),
                fun("chib", Parity::Odd, 1),
                fun("c", Parity::Even, 0),
            );
            let half = SuperExpr::constant(Coeff::ratio(1, 2));
            let i = SuperExpr::i();
            let tht = &th * &thb;
            let want = [
                &av + &(&(&i * &half) * &(&th * &chi + &chib * &thb)),
                &half * &(&chib + &(&th * &(&ad + &cv)) - &(&i * &(&tht * &chibd))),
                -(&half * &(&chi - &(&(&ad - &cv) * &thb) + &(&i * &(&(&chid * &th) * &thb)))),
            ];
            let got: Vec<SuperExpr> = infinitesimal_transformations(&x)
                .into_iter()
                .map(|(_, e)| e)
                .collect();
            let text = got
                .iter()
                .map(print_canonical)
                .collect::<Vec<_>>()
                .join("; ");
            Ok((got == want, text))
        },
    );
    b.run("n2.ham.multiplier", "L_X alpha = dot(Ups) alpha", || {
        let a = form()?;
        let x = hamiltonian_vf(&a, &generic).map_err(err)?;
        Ok(same(
            &lie_derivative(&x, a.expr()),
            &(&generic.time_derivative() * a.expr()),
        ))
    });
    b.run(
        "n2.ham.susy",
        "Ups = 2(eps thb - th epsb) gives eps Q + epsb Qb",
        || {
            let ups = &c(2, 0) * &(&eps() * &thb - &th * &epsb());
            let got = hamiltonian_vf(&form()?, &ups).map_err(err)?;
            Ok(same_vf(&got, &susy_vector_field(&eps(), &epsb())))
        },
    );
    b.run("n2.ham.unit", "Ups = 1 gives d/dt", || {
        Ok(same_vf(
            &hamiltonian_vf(&form()?, &SuperExpr::one()).map_err(err)?,
            &p,
        ))
    });
    b.run("n2.ham.odd_rejected", "odd Ups rejected", || {
        let odd = SuperExpr::gen(Generator::function("chi", Parity::Odd, 0));
        match hamiltonian_vf(&form()?, &odd) {
            Err(ContactError::OddSuperfield) => Ok((true, ContactError::OddSuperfield.to_string())),
            other => Ok((false, format!("{other:?}"))),
        }
    });

    b.group = 11;
    b.run(
        "n2.ham.superconformal",
        "Ups = lam t + 2t(eps thb - th epsb)",
        || {
            let a = form()?;
            let t = chart.coord_expr(0);
            let lam = SuperExpr::gen(Generator::parameter("lam"));
            let ups = &lam * &t + &c(2, 0) * &(&t * &(&eps() * &thb - &th * &epsb()));
            let x = hamiltonian_vf(&a, &ups).map_err(err)?;
            let ok = interior_product(&x, a.expr()) == ups
                && interior_product(&x, &a.d())
                    == &reeb(&a).map_err(err)?.apply(&ups) * a.expr()
                        - exterior_derivative(&chart, &ups);
            let half_lam = &SuperExpr::constant(Coeff::ratio(1, 2)) * &lam;
            let i = SuperExpr::i();
            let tht = &th * &thb;
            let display = [
                &lam * &t + &(&i * &(&t * &(&eps() * &thb - &th * &epsb()))),
                &half_lam * &th + &eps() * &(&t - &(&i * &tht)),
                &half_lam * &thb + &(&t + &(&i * &tht)) * &epsb(),
            ];
            let mut notes = Vec::new();
            for ((name, got), want) in infinitesimal_transformations(&x)
                .into_iter()
                .zip(display.iter())
            {
                if got == *want {
                    notes.push(format!(
                        "d{name} = {} (agrees with display)",
                        print_canonical(&got)
                    ));
                } else {
                    notes.push(format!(
                        "d{name} = {} (display differs by {})",
                        print_canonical(&got),
                        print_canonical(&(&got - want))
                    ));
                }
            }
            Ok((ok, notes.join("; ")))
        },
    );

    b.group = 12;
    b.run(
        "n2.components.susy",
        "component SUSY table of (q, psi, psib, b)",
        || {
            let m = Supermultiplet121::standard();
            let v = delta_components(&susy_vector_field(&eps(), &epsb()), &m).map_err(err)?;
            let i = SuperExpr::i();
            let fun = |n: &str, p, k| SuperExpr::gen(Generator::function(n, p, k));
            let qd = fun("q", Parity::Even, 1);
            let want = [
                &i * &(&eps() * &m.psi) + &i * &(&m.psib * &epsb()),
                &(&m.b - &qd) * &epsb(),
                &eps() * &(&m.b + &qd),
                &i * &(&fun("psib", Parity::Odd, 1) * &epsb())
                    - &i * &(&eps() * &fun("psi", Parity::Odd, 1)),
            ];
            let got = [v.dq, v.dpsi, v.dpsib, v.db];
            let text = got
                .iter()
                .map(print_canonical)
                .collect::<Vec<_>>()
                .join("; ");
            Ok((got == want, text))
        },
    );

    b.group = 13;
    let n2_alg = Arc::new(LieAlgebraPresentation::n2());
    let n2_mc = || {
        let (ch, x) = standard_coset(&n2_alg).expect("built-in coset");
        maurer_cartan(&ch, &x, DEFAULT_ORDER_CAP).map_err(err)
    };
    b.run(
        "n2.mc.presentation",
        "abstract brackets = vector field brackets",
        || {
            let ok = n2_alg.matches_vector_fields(&[p.clone(), q.clone(), qb.clone()]);
            Ok((ok, format!("{ok}")))
        },
    );
    b.run(
        "n2.mc.terminates",
        "Hadamard series stops by order 2",
        || {
            let mc = n2_mc()?;
            Ok((
                mc.order <= 2,
                format!("first vanishing term at order {}", mc.order),
            ))
        },
    );
    b.run(
        "n2.mc.flatness",
        "d(iOmega) + 1/2 [iOmega, iOmega] = 0",
        || {
            let mc = n2_mc()?;
            Ok((flatness_defect(&chart, &mc.i_omega).is_zero(), "0".into()))
        },
    );
    b.run("n2.mc.stabilizer", "P-component of Omega = alpha", || {
        let mc = n2_mc()?;
        let split = decompose_mc(&mc.omega, &["P"]).map_err(err)?;
        Ok(same(split.stabilizer.coefficient("P").expect("P"), &a_expr))
    });

    b.group = 14;
    let c1 = Chart::r1n1();
    let f1 = SusyFields::for_chart(&c1).expect("built-in chart");
    let n1_form = || OneForm::new(c1.clone(), alpha_n1()).map_err(err);
    b.run("n1.nonvanishing", "alpha_1 nonvanishing", || {
        let ok = is_nonvanishing(&n1_form()?);
        Ok((ok, format!("{ok}")))
    });
    b.run("n1.kernel", "ker(alpha_1) = span{D}", || {
        let k = kernel_basis(&n1_form()?).map_err(err)?;
        let text = k.basis.iter().map(print_vf).collect::<Vec<_>>().join("; ");
        Ok((k.basis == vec![f1.d.clone()], text))
    });
    b.run("n1.nondeg", "d(alpha_1) nondegenerate on ker", || {
        let a = n1_form()?;
        let ok = nondegenerate_on(&a, &kernel_basis(&a).map_err(err)?).map_err(err)?;
        Ok((ok, format!("nondegenerate: {ok}")))
    });
    b.run("n1.reeb", "Reeb field of alpha_1 = d/dt", || {
        Ok(same_vf(&reeb(&n1_form()?).map_err(err)?, &f1.p))
    });
    b.run("n1.bracket.QQ", "[Q,Q] = 2i d/dt", || {
        Ok(same_vf(
            &f1.q.graded_commutator(&f1.q).map_err(err)?,
            &f1.p.scale_left(&c(0, 2)),
        ))
    });
    b.run("n1.bracket.QP", "[Q,P] = 0", || {
        Ok(same_vf(
            &f1.q.graded_commutator(&f1.p).map_err(err)?,
            &VectorField::zero(c1.clone()),
        ))
    });
    b.run(
        "n1.pullback",
        "alpha_1 invariant under t' = t + i eps th, th' = th + eps",
        || {
            let a = alpha_n1();
            Ok(same(&susy_map_n1(&eps()).pullback(&a).map_err(err)?, &a))
        },
    );
    b.run(
        "n1.mc.stabilizer",
        "P-component of Omega_1 = alpha_1",
        || {
            let alg = Arc::new(LieAlgebraPresentation::n1());
            let (ch, x) = standard_coset(&alg).expect("built-in coset");
            let mc = maurer_cartan(&ch, &x, DEFAULT_ORDER_CAP).map_err(err)?;
            let split = decompose_mc(&mc.omega, &["P"]).map_err(err)?;
            Ok(same(
                split.stabilizer.coefficient("P").expect("P"),
                &alpha_n1(),
            ))
        },
    );

    let overall = if b.checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Report {
        overall,
        checks: b.checks,
    }
}

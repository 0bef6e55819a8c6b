use crate::calculus::{exterior_derivative, interior_product, Chart, SusyFields, VectorField};
use crate::components::collect_components;
use crate::contact::{reeb, solver, OneForm};
use crate::error::ContactError;
use crate::expr::SuperExpr;
use crate::generator::Parity;

/// The unique even `X` with `i_X alpha = ups` and
/// `i_X d(alpha) = P(ups) alpha - d(ups)`, `P` the Reeb field.
pub fn hamiltonian_vf(alpha: &OneForm, ups: &SuperExpr) -> Result<VectorField, ContactError> {
    if !ups.has_parity(Parity::Even) {
        return Err(ContactError::OddSuperfield);
    }
    if ups.contains_differentials() {
        return Err(ContactError::NotComponentForm(
            "superfield contains differentials".into(),
        ));
    }
    let chart = alpha.chart();
    let p = reeb(alpha)?;
    let da = alpha.d();
    let rhs = &p.apply(ups) * alpha.expr() - exterior_derivative(chart, ups);
    let x = solver::solve_even_field(
        chart,
        &[alpha.expr().clone(), da.clone()],
        &[ups.clone(), rhs.clone()],
    )?;
    if interior_product(&x, alpha.expr()) != *ups || interior_product(&x, &da) != rhs {
        return Err(ContactError::Internal(
            "Hamiltonian conditions not met".into(),
        ));
    }
    Ok(x)
}

/// `(a + i/2 (th chi + chib thb)) @t + i/2 (Db ups) @th + i/2 (D ups) @thb`
/// for `ups = a + i th chi + i chib thb + i th thb c` on `r1n2`.
pub fn hamiltonian_vf_closed_form(ups: &SuperExpr) -> Result<VectorField, ContactError> {
    if !ups.has_parity(Parity::Even) {
        return Err(ContactError::NotComponentForm(
            "superfield is not even".into(),
        ));
    }
    let comps =
        collect_components(ups).map_err(|e| ContactError::NotComponentForm(e.to_string()))?;
    let chart = Chart::r1n2();
    let f = SusyFields::for_chart(&chart)?;
    let minus_i = -SuperExpr::i();
    let a = comps.f0;
    let chi = &minus_i * &comps.f1;
    let chib = &minus_i * &comps.f2;
    let half_i = SuperExpr::constant(&crate::Coeff::i() * &crate::Coeff::ratio(1, 2));
    let (th, thb) = (chart.coord_expr(1), chart.coord_expr(2));
    let xt = &a + &(&half_i * &(&th * &chi + &chib * &thb));
    let xth = &half_i * &f.db.expect("r1n2").apply(ups);
    let xthb = &half_i * &f.d.apply(ups);
    Ok(VectorField::new(chart, vec![xt, xth, xthb]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::lie_derivative;
    use crate::calculus::susy::{eps, epsb, susy_vector_field};
    use crate::components::{expand_superfield, Supermultiplet121};
    use crate::Generator;

    fn generic() -> SuperExpr {
        expand_superfield(&Supermultiplet121::from_symbols("a", "chi", "chib", "c"))
    }

    #[test]
    fn closed_form_agrees() {
        let ups = generic();
        let alpha = OneForm::standard_n2();
        assert_eq!(
            hamiltonian_vf(&alpha, &ups).unwrap(),
            hamiltonian_vf_closed_form(&ups).unwrap()
        );
    }

    #[test]
    fn multiplier_law() {
        let ups = generic();
        let alpha = OneForm::standard_n2();
        let x = hamiltonian_vf(&alpha, &ups).unwrap();
        assert_eq!(
            lie_derivative(&x, alpha.expr()),
            &ups.time_derivative() * alpha.expr()
        );
    }

    #[test]
    fn unit_gives_reeb() {
        let alpha = OneForm::standard_n2();
        assert_eq!(
            hamiltonian_vf(&alpha, &SuperExpr::one()).unwrap(),
            VectorField::partial(Chart::r1n2(), 0)
        );
    }

    #[test]
    fn susy_generator() {
        let c = Chart::r1n2();
        let alpha = OneForm::standard_n2();
        let x = susy_vector_field(&eps(), &epsb());
        // i_X alpha is the superfield that generates X
        let ups = interior_product(&x, alpha.expr());
        assert_eq!(hamiltonian_vf(&alpha, &ups).unwrap(), x);
        let two_i = SuperExpr::constant(crate::Coeff::gaussian(0, 2));
        assert_eq!(
            ups,
            &two_i * &(&eps() * &c.coord_expr(2) - &c.coord_expr(1) * &epsb())
        );
    }

    #[test]
    fn odd_rejected() {
        let alpha = OneForm::standard_n2();
        let odd = SuperExpr::gen(Generator::function("chi", Parity::Odd, 0));
        assert_eq!(
            hamiltonian_vf(&alpha, &odd),
            Err(ContactError::OddSuperfield)
        );
    }
}

//! Truncated associator axioms for the 2-jet `Φ = 1 + c ħ² [Ω₁₂, Ω₂₃]`.
//!
//! Tensor legs are numbered from 0. A grouped leg such as `12` in `Φ_{12,3,4}`
//! is a set of legs, and `Ω_{A,B} = Σ_{a∈A, b∈B} Ω_ab`.

use crate::algebra::{on_leg, ratio, series_exp, QMat, Rational, TruncatedSeries};
use crate::bialgebra::DYModule;
use crate::error::{Error, Result};
use crate::report::Check;

/// Modules on fixed tensor legs with leg-insertion plumbing.
pub struct LegSpace<'a> {
    modules: Vec<&'a DYModule>,
    dims: Vec<usize>,
    order: usize,
}

impl<'a> LegSpace<'a> {
    pub fn new(modules: &[&'a DYModule], order: usize) -> Result<Self> {
        if modules.is_empty() || modules.len() > 4 {
            return Err(Error::Invalid("between 1 and 4 tensor legs are supported".into()));
        }
        let g = modules[0].action.len();
        if modules.iter().any(|m| m.action.len() != g) {
            return Err(Error::Invalid("modules over different bialgebras".into()));
        }
        Ok(LegSpace { modules: modules.to_vec(), dims: modules.iter().map(|m| m.dim).collect(), order })
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// `Ω_ab` for distinct legs.
    pub fn omega(&self, a: usize, b: usize) -> QMat {
        let (va, vb) = (self.modules[a], self.modules[b]);
        let mut acc = QMat::zeros(self.dim(), self.dim());
        for i in 0..va.action.len() {
            let x = on_leg(&va.action[i], a, &self.dims).mul(&on_leg(&vb.coaction[i], b, &self.dims));
            let y = on_leg(&va.coaction[i], a, &self.dims).mul(&on_leg(&vb.action[i], b, &self.dims));
            acc = acc.add(&x).add(&y);
        }
        acc
    }

    /// `Ω_{A,B}` for disjoint leg groups.
    pub fn omega_groups(&self, a: &[usize], b: &[usize]) -> QMat {
        let mut acc = QMat::zeros(self.dim(), self.dim());
        for &x in a {
            for &y in b {
                acc = acc.add(&self.omega(x, y));
            }
        }
        acc
    }

    /// `Φ_{A,B,C} = 1 + c ħ² [Ω_{A,B}, Ω_{B,C}]`.
    pub fn phi(&self, a: &[usize], b: &[usize], c: &[usize], coeff: &Rational) -> TruncatedSeries<Rational> {
        let comm = self.omega_groups(a, b).commutator(&self.omega_groups(b, c));
        let one = TruncatedSeries::identity(self.dim(), self.order);
        one.add(&TruncatedSeries::monomial(comm.scale(coeff), 2, self.order)).expect("same shape")
    }

    /// `R_{A,B} = exp(ħ Ω_{A,B} / 2)`.
    pub fn r(&self, a: &[usize], b: &[usize]) -> TruncatedSeries<Rational> {
        if self.order == 0 {
            return TruncatedSeries::identity(self.dim(), 0);
        }
        series_exp(&self.omega_groups(a, b).scale(&ratio(1, 2)), 1, self.order).expect("k >= 1")
    }
}

fn compare(name: &str, lhs: &TruncatedSeries<Rational>, rhs: &TruncatedSeries<Rational>) -> Check {
    let diff = lhs.sub(rhs).expect("same shape");
    match diff.lowest_degree() {
        None => Check::pass(name),
        Some(k) => Check::fail(name, format!("sides differ at ħ^{k}")),
    }
}

fn product(factors: &[TruncatedSeries<Rational>]) -> TruncatedSeries<Rational> {
    let mut it = factors.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |acc, f| acc.mul(f).expect("same shape"))
}

/// Pentagon on four legs, hexagons and duality on the first three, all mod `ħ^{order+1}`.
pub fn check_associator_axioms_truncated(
    modules: [&DYModule; 4],
    order: usize,
    coeff: &Rational,
) -> Result<Vec<Check>> {
    if order > 2 {
        return Err(Error::Invalid("the 2-jet associator supports truncation order at most 2".into()));
    }
    let s4 = LegSpace::new(&modules, order)?;
    let lhs = s4.phi(&[0, 1], &[2], &[3], coeff).mul(&s4.phi(&[0], &[1], &[2, 3], coeff))?;
    let rhs = product(&[
        s4.phi(&[0], &[1], &[2], coeff),
        s4.phi(&[0], &[1, 2], &[3], coeff),
        s4.phi(&[1], &[2], &[3], coeff),
    ]);
    let mut out = vec![compare("pentagon", &lhs, &rhs)];

    let s3 = LegSpace::new(&modules[..3], order)?;
    let p = |a: usize, b: usize, c: usize| s3.phi(&[a], &[b], &[c], coeff);
    let inv = |x: TruncatedSeries<Rational>| x.inverse().expect("invertible constant term");
    let hex1_lhs = s3.r(&[0, 1], &[2]);
    let hex1_rhs = product(&[p(2, 0, 1), s3.r(&[0], &[2]), inv(p(0, 2, 1)), s3.r(&[1], &[2]), p(0, 1, 2)]);
    out.push(compare("hexagon/merged-first", &hex1_lhs, &hex1_rhs));
    let hex2_lhs = s3.r(&[0], &[1, 2]);
    let hex2_rhs = product(&[inv(p(1, 2, 0)), s3.r(&[0], &[2]), p(1, 0, 2), s3.r(&[0], &[1]), inv(p(0, 1, 2))]);
    out.push(compare("hexagon/merged-second", &hex2_lhs, &hex2_rhs));
    out.push(compare("duality", &p(2, 1, 0), &inv(p(0, 1, 2))));
    Ok(out)
}

/// The 2-jet coefficient `1/24`.
pub fn drinfeld_coefficient() -> Rational {
    ratio(1, 24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{sl2_borel_standard, DYModule};
    use crate::report::all_passed;

    #[test]
    fn two_jet_passes() {
        let v = sl2_borel_standard(1);
        let checks = check_associator_axioms_truncated([&v, &v, &v, &v], 2, &drinfeld_coefficient()).unwrap();
        assert!(all_passed(&checks), "{checks:?}");
    }

    #[test]
    fn wrong_coefficient_fails_at_second_order() {
        let v = sl2_borel_standard(1);
        let checks = check_associator_axioms_truncated([&v, &v, &v, &v], 2, &ratio(1, 12)).unwrap();
        let hex: Vec<_> = checks.iter().filter(|c| c.name.starts_with("hexagon")).collect();
        assert!(hex.iter().all(|c| !c.passed() && c.witness.as_deref() == Some("sides differ at ħ^2")));
        let low = check_associator_axioms_truncated([&v, &v, &v, &v], 1, &ratio(1, 12)).unwrap();
        assert!(all_passed(&low));
    }

    #[test]
    fn order_zero_is_trivial() {
        let t = DYModule::trivial(2);
        let v = sl2_borel_standard(1);
        assert!(all_passed(&check_associator_axioms_truncated([&v, &t, &v, &t], 0, &ratio(5, 1)).unwrap()));
    }
}

//! Two-sided ideals: window-truncated exact spans with replayable
//! certificates, and the constructive witness algorithms.

mod certificate;
mod echelon;
mod span;
mod witness;

pub use certificate::{Certificate, ChainStep};
pub use span::{
    contains_unit, ideal_window_span, intersect_with_a_window, membership, span_intersection_element,
    window_products, IdealWindowSpan, Monomial, ProductSpec, Window,
};
pub use witness::{
    default_period, find_indicator, in_paired_subspace, prime_refutation, prime_witness,
    proper_ideal_from_nondense_orbit, verify_paired_form, witness_in_a, witness_in_commutant,
    zero_intersection_generator, PrimeRefutation, PrimeWitness,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coeff::CoeffFn;
    use crate::commutant::in_commutant_structural;
    use crate::crossed::{parse_element, CrossedElement};
    use crate::dynsys::{Point, SystemModel};
    use crate::error::Error;
    use crate::exactnum::GaussianRational;

    fn finite(images: &[usize]) -> Arc<SystemModel> {
        Arc::new(SystemModel::finite(images.to_vec()).unwrap())
    }

    fn shift() -> Arc<SystemModel> {
        Arc::new(SystemModel::shift())
    }

    fn circle(q: GaussianRational) -> Arc<SystemModel> {
        Arc::new(SystemModel::circle(q).unwrap())
    }

    fn el(s: &Arc<SystemModel>, text: &str) -> CrossedElement {
        parse_element(s, text).unwrap()
    }

    fn w(d: usize, r: usize) -> Window {
        Window::new(d, r).unwrap()
    }

    fn assert_replays(cert: &Certificate, gens: &[CrossedElement], window: Option<&Window>, claim: &CrossedElement) {
        assert_eq!(&cert.replay(gens, window).unwrap(), claim);
        let s = gens[0].model();
        let back = Certificate::from_json(s, &cert.to_json()).unwrap();
        assert_eq!(&back, cert);
    }

    #[test]
    fn span_examples() {
        let s = finite(&[1, 0]);
        let gens = [el(&s, "e_0")];
        let span = ideal_window_span(&gens, &w(1, 1)).unwrap();
        for target in ["e_0", "e_1"] {
            let t = el(&s, target);
            let cert = span.membership(&t).unwrap().expect("in span");
            assert_replays(&cert, &gens, Some(&w(1, 1)), &t);
        }
        assert_eq!(ideal_window_span(&[CrossedElement::zero(&s)], &w(1, 1)).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(ideal_window_span(&[], &w(1, 1)).unwrap_err(), Error::EmptyGenerators);
        let t = finite(&[0, 1]);
        assert_eq!(ideal_window_span(&[el(&s, "e_0"), el(&t, "e_0")], &w(1, 1)).unwrap_err(), Error::ModelMismatch);
    }

    #[test]
    fn membership_absent_and_overflow() {
        let s = finite(&[1, 0, 2]);
        let gens = [el(&s, "e_0 + e_1")];
        for d in 1..=3 {
            let span = ideal_window_span(&gens, &w(d, 1)).unwrap();
            assert!(span.membership(&el(&s, "e_2")).unwrap().is_none());
        }
        let span = ideal_window_span(&gens, &w(1, 1)).unwrap();
        assert!(matches!(span.membership(&el(&s, "e_0*d^9")), Err(Error::WindowOverflow(_))));
    }

    #[test]
    fn basis_is_reduced_echelon() {
        let s = finite(&[1, 2, 0]);
        let span = ideal_window_span(&[el(&s, "e_0 + 2*e_1*d^1")], &w(1, 1)).unwrap();
        let m = span.basis_matrix();
        let red = crate::exactnum::rref(&m);
        assert_eq!(red.matrix, m);
        assert_eq!(red.rank(), span.rank());
    }

    #[test]
    fn contains_unit_examples() {
        let q = GaussianRational::from_fracs(3, 5, 4, 5);
        let c = circle(q.clone());
        let gens = [el(&c, "t - 1")];
        let cert = contains_unit(&gens, &w(1, 1)).unwrap().expect("unit found");
        assert_replays(&cert, &gens, Some(&w(1, 1)), &el(&c, "1"));

        let one_point = finite(&[0]);
        for d in 1..=6 {
            assert!(contains_unit(&[el(&one_point, "1 - d^1")], &w(d, 1)).unwrap().is_none());
        }
        let cyc = finite(&[1, 2, 0]);
        assert!(contains_unit(&[el(&cyc, "e_0")], &w(2, 1)).unwrap().is_some());
        assert_eq!(contains_unit(&[el(&shift(), "e_0")], &w(1, 1)), Err(Error::NotUnital));
    }

    #[test]
    fn intersect_with_a_examples() {
        let sh = shift();
        let span = ideal_window_span(&[el(&sh, "e_0 + e_1*d^1")], &w(1, 1)).unwrap();
        let inter = intersect_with_a_window(&span);
        let e0 = CoeffFn::basis(&sh, 0).unwrap();
        assert!(inter.contains(&e0), "{inter:?}");

        let s = finite(&[1, 0]);
        for d in 1..=3 {
            let span = ideal_window_span(&[el(&s, "1 + d^2")], &w(d, 1)).unwrap();
            assert!(intersect_with_a_window(&span).is_empty());
        }
        let span = ideal_window_span(&[el(&s, "e_1")], &w(1, 1)).unwrap();
        assert!(!intersect_with_a_window(&span).is_empty());
    }

    #[test]
    fn witness_in_a_examples() {
        let sh = shift();
        let f = el(&sh, "e_0 + e_1*d^1");
        let (a, cert) = witness_in_a(&f).unwrap();
        assert_eq!(a, CoeffFn::basis(&sh, 0).unwrap());
        assert_replays(&cert, &[f], None, &CrossedElement::from_coeff(&sh, a).unwrap());

        let f = el(&sh, "e_5*d^3");
        let (a, cert) = witness_in_a(&f).unwrap();
        assert_eq!(a, CoeffFn::basis(&sh, 5).unwrap());
        assert_replays(&cert, &[f], None, &CrossedElement::from_coeff(&sh, a).unwrap());

        assert_eq!(witness_in_a(&CrossedElement::zero(&sh)).unwrap_err(), Error::ZeroElement);
        let s = finite(&[1, 0]);
        assert!(matches!(witness_in_a(&el(&s, "e_0")), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn zero_intersection_examples() {
        let s = finite(&[1, 0]);
        let (gen, f) = zero_intersection_generator(&s, 2).unwrap();
        assert_eq!(gen, el(&s, "1 + d^2"));
        assert_eq!(f, CoeffFn::one(&s).unwrap());
        assert!(verify_paired_form(&s, 2, &gen, &w(3, 1)).unwrap());

        let c = circle(GaussianRational::i());
        let (gen, _) = zero_intersection_generator(&c, 4).unwrap();
        assert_eq!(gen, el(&c, "1 + d^4"));
        assert!(verify_paired_form(&c, 4, &gen, &w(5, 1)).unwrap());

        assert!(matches!(zero_intersection_generator(&shift(), 3), Err(Error::PreconditionFailed(_))));
        assert!(!in_paired_subspace(&el(&s, "e_0"), 2));
        assert!(in_paired_subspace(&el(&s, "e_0*d^-1 + e_0*d^1"), 2));
        assert!(matches!(verify_paired_form(&s, 2, &el(&s, "1 + d^1"), &w(1, 1)), Err(Error::PreconditionFailed(_))));

        let two_orbit = finite(&[1, 0, 2]);
        assert_eq!(default_period(&two_orbit), Some(1));
        let (gen, _) = zero_intersection_generator(&two_orbit, 1).unwrap();
        assert_eq!(gen, el(&two_orbit, "e_2 + e_2*d^1"));
        assert!(verify_paired_form(&two_orbit, 1, &gen, &w(3, 1)).unwrap());
    }

    #[test]
    fn witness_in_commutant_examples() {
        let s = finite(&[1, 0]);
        let f = el(&s, "1 + d^1");
        let (c, cert, iterations) = witness_in_commutant(&f).unwrap();
        assert_eq!(c, el(&s, "e_0"));
        assert_eq!(iterations, 1);
        assert_replays(&cert, &[f], None, &c);

        let f = el(&s, "e_0*d^2");
        let (c, cert, iterations) = witness_in_commutant(&f).unwrap();
        assert_eq!(c, el(&s, "e_0"));
        assert_eq!(iterations, 0);
        assert_replays(&cert, &[f], None, &c);

        let sh = shift();
        let f = el(&sh, "e_2*d^-1 + 3*e_0");
        let (c, _, iterations) = witness_in_commutant(&f).unwrap();
        assert_eq!(iterations, 0);
        assert!(in_commutant_structural(&sh, &c).member);
        let c1 = circle(GaussianRational::i());
        assert!(matches!(witness_in_commutant(&el(&c1, "t")), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn proper_ideal_examples() {
        let s = finite(&[1, 0, 2]);
        let (gens, ok) = proper_ideal_from_nondense_orbit(&s, &Point::Finite(2), &w(2, 1)).unwrap();
        assert_eq!(gens, vec![el(&s, "e_0"), el(&s, "e_1")]);
        assert!(ok);

        let c = circle(GaussianRational::i());
        let (gens, ok) = proper_ideal_from_nondense_orbit(&c, &Point::Circle(GaussianRational::one()), &w(2, 2)).unwrap();
        assert_eq!(gens, vec![el(&c, "t^4 - 1")]);
        assert!(ok);

        let cyc = finite(&[1, 2, 0]);
        assert!(matches!(
            proper_ideal_from_nondense_orbit(&cyc, &Point::Finite(0), &w(1, 1)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn prime_refutation_examples() {
        let s = finite(&[1, 0, 2]);
        let r = prime_refutation(&s, &w(2, 1)).unwrap();
        assert_eq!(r.gens1, vec![el(&s, "e_2")]);
        assert_eq!(r.gens2, vec![el(&s, "e_0"), el(&s, "e_1")]);
        assert!(r.verified);

        let s = finite(&[1, 0, 3, 2]);
        let r = prime_refutation(&s, &w(2, 1)).unwrap();
        assert_eq!(r.gens1, vec![el(&s, "e_2"), el(&s, "e_3")]);
        assert!(r.verified);

        assert!(matches!(prime_refutation(&finite(&[1, 2, 3, 0]), &w(1, 1)), Err(Error::PreconditionFailed(_))));
        assert!(matches!(prime_refutation(&shift(), &w(1, 1)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn prime_witness_examples() {
        let cyc = finite(&[1, 2, 0]);
        let (f, g) = (el(&cyc, "e_0"), el(&cyc, "e_1"));
        let pw = prime_witness(&f, &g, &w(2, 1)).unwrap().expect("common element");
        assert!(!pw.element.is_zero());
        assert_replays(&pw.cert_f, &[f], Some(&w(2, 1)), &pw.element);
        assert_replays(&pw.cert_g, &[g], Some(&w(2, 1)), &pw.element);

        let sh = shift();
        let (f, g) = (el(&sh, "e_0"), el(&sh, "e_3"));
        let pw = prime_witness(&f, &g, &w(3, 3)).unwrap().expect("common element");
        assert_replays(&pw.cert_f, &[f], Some(&w(3, 3)), &pw.element);
        assert_replays(&pw.cert_g, &[g], Some(&w(3, 3)), &pw.element);

        let s = finite(&[1, 0, 2]);
        for d in 1..=3 {
            assert!(prime_witness(&el(&s, "e_0"), &el(&s, "e_2"), &w(d, 1)).unwrap().is_none());
        }
        assert_eq!(
            prime_witness(&CrossedElement::zero(&s), &el(&s, "e_2"), &w(1, 1)).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn find_indicator_in_shift_ideal() {
        let sh = shift();
        let f = el(&sh, "e_1 + 2*e_-1*d^2");
        let (e, cert) = find_indicator(std::slice::from_ref(&f), &w(2, 1)).unwrap().expect("indicator");
        assert_replays(&cert, &[f], Some(&w(2, 1)), &CrossedElement::from_coeff(&sh, e).unwrap());
    }
}

use cambrian::sortable::{cambrian_interval, cambrian_interval_with, CoxeterElement, IntervalOptions};
use cambrian::sweep::sortables_up_to;
use cambrian::weak::upper_covers;
use cambrian::{systems, Bond, CoxeterSystem, Element, Error};

fn longest(sys: &CoxeterSystem) -> Element {
    let mut w = sys.identity();
    while let Some(up) = upper_covers(&w).unwrap().into_iter().next() {
        w = up;
    }
    w
}

/// `∏ (h + e + 1) / (e + 1)` over the exponents `e`.
fn coxeter_catalan(h: u64, exponents: &[u64]) -> u64 {
    let num: u64 = exponents.iter().map(|e| h + e + 1).product();
    let den: u64 = exponents.iter().map(|e| e + 1).product();
    num / den
}

#[test]
fn full_cambrian_lattices_have_catalan_size() {
    let cases = [
        (systems::a2(), coxeter_catalan(3, &[1, 2])),
        (systems::a3(), coxeter_catalan(4, &[1, 2, 3])),
        (systems::b3(), coxeter_catalan(6, &[1, 3, 5])),
        (systems::h3(), coxeter_catalan(10, &[1, 5, 9])),
    ];
    for (sys, count) in cases {
        let top = longest(&sys);
        for gamma in CoxeterElement::all(sys.rank()) {
            let i = cambrian_interval(&sys.identity(), &top, &gamma).unwrap();
            assert_eq!(i.len() as u64, count, "{:?}", sys.names());
            assert!(i.lattice().is_trim());
            assert!(i.lattice().is_semidistributive());
        }
    }
}

#[test]
fn dihedral_cambrian_lattices() {
    for m in 2..=8 {
        let sys = systems::dihedral(Bond::Finite(m));
        let gamma = CoxeterElement::standard(2);
        let i = cambrian_interval(&sys.identity(), &longest(&sys), &gamma).unwrap();
        assert_eq!(i.len(), m as usize + 2);
        // m = 2 gives the square, which is graded and distributive.
        assert_eq!(i.lattice().is_graded(), m == 2);
    }
}

#[test]
fn infinite_dihedral_sortables_form_two_chains() {
    let sys = systems::dihedral(Bond::Infinite);
    let gamma = CoxeterElement::standard(2);
    let sortables = sortables_up_to(&sys, &gamma, 12).unwrap();
    // Everything starting with s1, plus the single generator s2.
    assert_eq!(sortables.len(), 1 + 12 + 1);
    let top = sys.canonicalize(&[0, 1, 0, 1, 0, 1]).unwrap();
    let i = cambrian_interval(&sys.identity(), &top, &gamma).unwrap();
    assert_eq!(i.len(), 7);
    assert!(i.lattice().is_distributive());
}

#[test]
fn pentagon_labels_are_sorting_words() {
    let sys = systems::a2();
    let top = sys.parse_element("s1 s2 s1").unwrap();
    let i = cambrian_interval(&sys.identity(), &top, &CoxeterElement::standard(2)).unwrap();
    assert_eq!(i.lattice().labels(), ["ε", "s1", "s2", "s1 s2", "s1 s2 s1"]);
    assert_eq!(i.lattice().covers().len(), 5);
    // Under γ = s2 s1 the same element sorts differently.
    let other = CoxeterElement::new(2, vec![1, 0]).unwrap();
    let i = cambrian_interval(&sys.identity(), &top, &other).unwrap();
    assert!(i.lattice().labels().contains(&"s2 s1 s2".to_string()));
}

#[test]
fn sub_intervals_match_direct_construction() {
    let i = cambrian::fixtures::affine_c3_interval().compute().unwrap();
    let l = i.lattice();
    for (k, u) in i.elements().iter().enumerate() {
        let direct = cambrian_interval(u, i.top(), i.gamma()).unwrap();
        let sub = l.sublattice_interval(k, l.top()).unwrap();
        assert_eq!(direct.lattice(), &sub);
    }
}

#[test]
fn endpoint_errors() {
    let sys = systems::affine_c3();
    let gamma = CoxeterElement::standard(4);
    let bad = sys.parse_element("s0 s2 s3 s1").unwrap();
    let err = cambrian_interval(&sys.identity(), &bad, &gamma).unwrap_err();
    assert!(matches!(&err, Error::NotSortable { role: "top", .. }));
    assert!(err.to_string().contains("s0 s2 s3 | s1"), "{err}");
    let u = sys.parse_element("s2").unwrap();
    let v = sys.parse_element("s0").unwrap();
    assert!(matches!(cambrian_interval(&u, &v, &gamma), Err(Error::NotBelow { .. })));
    let top = sys.parse_element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3").unwrap();
    let options = IntervalOptions { max_elems: Some(10), sortable: None };
    assert!(matches!(
        cambrian_interval_with(&sys.identity(), &top, &gamma, &options),
        Err(Error::ResourceLimit { .. })
    ));
    let other = systems::affine_c3();
    let foreign = other.parse_element("s0").unwrap();
    assert!(cambrian_interval(&sys.identity(), &foreign, &gamma).is_err());
    assert!(CoxeterElement::parse(&sys, "s0 s1 s2").is_err());
    assert!(CoxeterElement::parse(&sys, "s0 s1 s1 s3").is_err());
}

//! Exhaustive checks of structural invariants on small built-in objects.

use inverse_hom::crossprod::{
    coinvariants, conjugation_action, crossed_product, diagonal_algebra, dual_numbers,
    hochschild_chain_complex, hochschild_cochain_complex, hochschild_cohomology,
    hochschild_homology, induced_partial_action, invariants_sub, matrix_algebra, phi_map,
    semigroup_algebra, trivial_action, Bimodule,
};
use inverse_hom::field::{PrimeField, Rationals};
use inverse_hom::invmon::{
    chain_semilattice, cyclic_group, direct_product, symmetric_inverse_monoid, trivial_monoid,
    InverseMonoid,
};
use inverse_hom::monhom::{
    cohomology_complex, homology_complex, regular_module, trivial_module_ke, Side,
    DEFAULT_CAP_COLUMNS,
};
use inverse_hom::steinberg::{
    bisections, discrete_groupoid, group_as_groupoid, pair_groupoid, verify_steinberg_cohomology,
    verify_steinberg_homology, SteinbergData,
};

fn small_monoids(max: usize) -> Vec<InverseMonoid> {
    let mut v = vec![trivial_monoid()];
    for n in 1..=3 {
        v.push(symmetric_inverse_monoid(n).unwrap());
    }
    for n in 2..=max {
        v.push(chain_semilattice(n).unwrap());
        v.push(cyclic_group(n).unwrap());
    }
    let c2 = chain_semilattice(2).unwrap();
    let z2 = cyclic_group(2).unwrap();
    v.push(direct_product(&c2, &z2));
    v.push(direct_product(&z2, &z2));
    v.push(direct_product(&c2, &c2));
    v.push(direct_product(
        &symmetric_inverse_monoid(1).unwrap(),
        &cyclic_group(3).unwrap(),
    ));
    v.retain(|s| s.size() <= max);
    v
}

#[test]
fn inverses_and_natural_order() {
    for s in small_monoids(8) {
        let n = s.size();
        for a in 0..n {
            assert_eq!(s.product(&[a, s.inv(a), a]), a);
            assert_eq!(s.inv(s.inv(a)), a);
            assert!(s.natural_leq(a, a));
            for b in 0..n {
                if s.natural_leq(a, b) && s.natural_leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in 0..n {
                    if s.natural_leq(a, b) {
                        assert!(s.natural_leq(s.mul(a, c), s.mul(b, c)));
                        assert!(s.natural_leq(s.mul(c, a), s.mul(c, b)));
                        if s.natural_leq(b, c) {
                            assert!(s.natural_leq(a, c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_is_a_congruence_and_matches_the_definition() {
    for s in small_monoids(7) {
        let n = s.size();
        let cls = s.sigma_classes();
        for a in 0..n {
            for b in 0..n {
                // a σ b iff some u lies below both
                let below = (0..n).any(|u| s.natural_leq(u, a) && s.natural_leq(u, b));
                assert_eq!(cls[a] == cls[b], below, "monoid of size {n}, ({a},{b})");
                if s.is_e_unitary() {
                    let e = |x: usize| s.is_idempotent(x);
                    assert_eq!(
                        cls[a] == cls[b],
                        e(s.mul(s.inv(a), b)) && e(s.mul(a, s.inv(b)))
                    );
                }
                if cls[a] == cls[b] {
                    for c in 0..n {
                        for d in 0..n {
                            if cls[c] == cls[d] {
                                assert_eq!(cls[s.mul(a, c)], cls[s.mul(b, d)]);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn group_image_of_a_group_is_itself() {
    let z2 = cyclic_group(2).unwrap();
    for g in [
        cyclic_group(3).unwrap(),
        cyclic_group(4).unwrap(),
        direct_product(&z2, &z2),
    ] {
        let img = g.max_group_image().unwrap();
        let p = &img.proj;
        assert_eq!(img.group.size(), g.size());
        for a in 0..g.size() {
            for b in 0..g.size() {
                assert_eq!(p[g.mul(a, b)], img.group.mul(p[a], p[b]));
            }
        }
    }
}

#[test]
fn complex_shapes_do_not_depend_on_the_field() {
    let f5 = PrimeField::new(5).unwrap();
    for s in small_monoids(4) {
        let q = homology_complex(&s, &trivial_module_ke(&s, Rationals, Side::Left), 2).unwrap();
        let p = homology_complex(&s, &trivial_module_ke(&s, f5, Side::Left), 2).unwrap();
        assert_eq!(q.space_dims, p.space_dims);
        let q = cohomology_complex(&s, &regular_module(&s, Rationals, Side::Left), 2).unwrap();
        let p = cohomology_complex(&s, &regular_module(&s, f5, Side::Left), 2).unwrap();
        assert_eq!(q.space_dims, p.space_dims);
    }
}

#[test]
fn hochschild_degree_zero_matches_coinvariants_and_invariants() {
    let algebras = [
        dual_numbers(Rationals),
        matrix_algebra(Rationals, 2),
        diagonal_algebra(Rationals, 3),
        semigroup_algebra(Rationals, &symmetric_inverse_monoid(2).unwrap()),
    ];
    for a in algebras {
        // the trivial monoid makes the crossed product a copy of `a`
        let c = crossed_product(&trivial_action(&trivial_monoid(), &a)).unwrap();
        let m = Bimodule::regular(c.algebra());
        let (quot, _) = coinvariants(&m, &c).unwrap();
        let (inc, _) = invariants_sub(&m, &c).unwrap();
        assert_eq!(
            hochschild_homology(c.algebra(), &m, 1).unwrap()[0],
            quot.dim()
        );
        assert_eq!(
            hochschild_cohomology(c.algebra(), &m, 1).unwrap()[0],
            inc.cols()
        );
        assert!(
            hochschild_chain_complex(c.algebra(), &m, 3, DEFAULT_CAP_COLUMNS)
                .unwrap()
                .is_complex()
        );
        assert!(
            hochschild_cochain_complex(c.algebra(), &m, 3, DEFAULT_CAP_COLUMNS)
                .unwrap()
                .is_complex()
        );
    }
}

#[test]
fn crossed_product_naturality() {
    let c2z2 = direct_product(&chain_semilattice(2).unwrap(), &cyclic_group(2).unwrap());
    for s in [
        c2z2,
        chain_semilattice(3).unwrap(),
        cyclic_group(3).unwrap(),
    ] {
        let c = crossed_product(&conjugation_action(&s, Rationals)).unwrap();
        for x in 0..s.size() {
            for y in 0..s.size() {
                assert_eq!(
                    c.algebra().mul(c.gamma(x), c.gamma(y)),
                    c.gamma(s.mul(x, y)).to_vec()
                );
            }
        }
        // E-unitary: the dimension is the sum of the partial-action domains
        let p = induced_partial_action(c.action()).unwrap();
        let domains: usize = (0..p.group().size())
            .map(|g| p.algebra().left_mult(p.domain(g)).rank())
            .sum();
        assert_eq!(c.dim(), domains);
        let (_, report) = phi_map(&c).unwrap();
        assert!(report.passed() && report.bijective && report.bimodule_map);
    }
}

fn isomorphic(a: &InverseMonoid, b: &InverseMonoid) -> bool {
    fn extend(
        a: &InverseMonoid,
        b: &InverseMonoid,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = map.len();
        if k == a.size() {
            return (0..k).all(|x| (0..k).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
        }
        for t in 0..b.size() {
            if !used[t] && a.is_idempotent(k) == b.is_idempotent(t) {
                used[t] = true;
                map.push(t);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    a.size() == b.size() && extend(a, b, &mut Vec::new(), &mut vec![false; b.size()])
}

#[test]
fn bisections_of_pair_groupoids_are_symmetric_inverse_monoids() {
    for n in 1..=2 {
        let (s, _) = bisections(&pair_groupoid(n).unwrap()).unwrap();
        assert!(
            isomorphic(&s, &symmetric_inverse_monoid(n).unwrap()),
            "n = {n}"
        );
    }
    let (s, _) = bisections(&discrete_groupoid(2).unwrap()).unwrap();
    assert!(!isomorphic(&s, &symmetric_inverse_monoid(2).unwrap()));
}

#[test]
fn steinberg_verifiers_on_more_groupoids() {
    let f3 = PrimeField::new(3).unwrap();
    for g in [
        pair_groupoid(3).unwrap(),
        group_as_groupoid(&cyclic_group(3).unwrap()).unwrap(),
    ] {
        let d = SteinbergData::new(&g, Rationals).unwrap();
        let m = Bimodule::regular(&d.steinberg_algebra);
        assert!(verify_steinberg_homology(&d, &m, 1).unwrap().passed());
        assert!(verify_steinberg_cohomology(&d, &m, 1).unwrap().passed());
        let d = SteinbergData::new(&g, f3).unwrap();
        let m = Bimodule::regular(&d.steinberg_algebra);
        assert!(verify_steinberg_homology(&d, &m, 1).unwrap().passed());
    }
}

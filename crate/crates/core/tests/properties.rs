//! Randomized properties of the linear algebra, monoids, complexes and documents.

use std::collections::BTreeSet;

use inverse_hom::exactla::{induced_map, Matrix, QuotientSpace, SparseMatrix};
use inverse_hom::field::{Field, PrimeField, Rationals};
use inverse_hom::invmon::{symmetric_inverse_monoid, InverseMonoid};
use inverse_hom::monhom::{
    cohomology_complex, homology_complex, regular_module, trivial_module_ke, Side,
};
use inverse_hom::serial::{from_json, scalar_from_json, scalar_to_json, ModuleDoc, MonoidDoc};
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn rational(r: usize, c: usize, e: &[i64]) -> Matrix<Rationals> {
    Matrix::from_i64(Rationals, r, c, e).unwrap()
}

/// The inverse submonoid of `I(3)` generated by `gens`.
fn generated_submonoid(gens: &[usize]) -> InverseMonoid {
    let big = symmetric_inverse_monoid(3).unwrap();
    let mut set: BTreeSet<usize> = gens.iter().map(|&g| g % big.size()).collect();
    set.insert(big.unit());
    let inverses: Vec<usize> = set.iter().map(|&s| big.inv(s)).collect();
    set.extend(inverses);
    loop {
        let elems: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &elems {
            for &b in &elems {
                set.insert(big.mul(a, b));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let elems: Vec<usize> = set.into_iter().collect();
    let pos = |x: usize| elems.binary_search(&x).unwrap();
    let table = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| pos(big.mul(a, b))).collect())
        .collect();
    InverseMonoid::from_table(table, pos(big.unit())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity((r, c, e) in small_matrix(6)) {
        let m = rational(r, c, &e);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn sparse_and_dense_ranks_agree((r, c, e) in small_matrix(7), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let q = rational(r, c, &e);
        prop_assert_eq!(SparseMatrix::from_dense(&q).rank(), q.rank());
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_i64(f, r, c, &e).unwrap();
        prop_assert_eq!(SparseMatrix::from_dense(&m).rank(), m.rank());
        prop_assert_eq!(SparseMatrix::from_dense(&m).to_dense(), m);
    }

    #[test]
    fn quotient_coordinates((n, k, e) in small_matrix(6)) {
        let span = rational(n, k, &e);
        let q = QuotientSpace::new(n, &span).unwrap();
        prop_assert_eq!(q.dim(), n - span.rank());
        prop_assert!(q.projection.mul(&q.section).is_identity());
        prop_assert!(q.projection.mul(&span).is_zero());
        for j in 0..span.cols() {
            prop_assert!(q.contains(&span.column(j)));
        }
    }

    #[test]
    fn induced_maps_commute(
        (n, k, e) in small_matrix(5),
        f_entries in prop::collection::vec(-2i64..=2, 25),
    ) {
        let span = rational(n, k, &e);
        let dom = QuotientSpace::new(n, &span).unwrap();
        let g = rational(n, n, &f_entries[..n * n]);
        let cod_span = g.mul(&span);
        let cod = QuotientSpace::new(n, &cod_span).unwrap();
        let h = induced_map(&g, &dom, &cod).unwrap();
        prop_assert_eq!(h.mul(&dom.projection), cod.projection.mul(&g));
    }

    #[test]
    fn rational_parse_format_round_trip(a in -1000i64..1000, b in 1i64..1000) {
        let f = Rationals;
        let x = f.div(&f.from_i64(a), &f.from_i64(b)).unwrap();
        prop_assert_eq!(f.parse(&f.format(&x)).unwrap(), x.clone());
        prop_assert_eq!(scalar_from_json(&f, &scalar_to_json(&f, &x)).unwrap(), x.clone());
        if a != 0 {
            prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        }
    }

    #[test]
    fn prime_field_arithmetic(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 101]), a in 0i64..500, b in 0i64..500) {
        let f = PrimeField::new(p).unwrap();
        let (x, y) = (f.from_i64(a), f.from_i64(b));
        prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x);
        prop_assert_eq!(f.mul(&x, &y), f.from_i64((a * b) % p as i64));
        prop_assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
        if !f.is_zero(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        }
    }

    #[test]
    fn generated_submonoids(gens in prop::collection::vec(0usize..34, 0..4)) {
        let s = generated_submonoid(&gens);
        for a in 0..s.size() {
            let b = s.inv(a);
            prop_assert_eq!(s.mul(s.mul(a, b), a), a);
            prop_assert_eq!(s.mul(s.mul(b, a), b), b);
        }
        let sigma = s.sigma_classes();
        for a in 0..s.size() {
            for b in 0..s.size() {
                if sigma[a] == sigma[b] {
                    for c in 0..s.size() {
                        prop_assert_eq!(sigma[s.mul(a, c)], sigma[s.mul(b, c)]);
                        prop_assert_eq!(sigma[s.mul(c, a)], sigma[s.mul(c, b)]);
                    }
                }
            }
        }
        let v = trivial_module_ke(&s, Rationals, Side::Left);
        prop_assert!(homology_complex(&s, &v, 2).unwrap().is_complex());
        prop_assert!(cohomology_complex(&s, &v, 2).unwrap().is_complex());
        let f2 = PrimeField::new(2).unwrap();
        let r = regular_module(&s, f2, Side::Left);
        prop_assert!(homology_complex(&s, &r, 2).unwrap().is_complex());
    }

    #[test]
    fn documents_round_trip(gens in prop::collection::vec(0usize..34, 0..3)) {
        let s = generated_submonoid(&gens);
        let doc = MonoidDoc::from_monoid(&s);
        let text = serde_json::to_string(&doc).unwrap();
        let back: MonoidDoc = from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        let t = back.build().unwrap();
        prop_assert_eq!(t.table(), s.table());
        let m = regular_module(&s, Rationals, Side::Left);
        let mdoc = ModuleDoc::from_module(&m);
        let back: ModuleDoc = from_json(&serde_json::to_string(&mdoc).unwrap()).unwrap();
        prop_assert_eq!(back.build(&t, Rationals).unwrap(), m);
    }
}

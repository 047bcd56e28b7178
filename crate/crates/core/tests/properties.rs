mod common;

use std::collections::BTreeSet;

use frieze_lab::cycle::{cycle_sum, is_canonical, zero_contract};
use frieze_lab::enumerate::{enumerate_cycles, EnumerationTask};
use frieze_lab::eta::{eta, eta_inv, Matrix2};
use frieze_lab::frieze::make_frieze;
use frieze_lab::io::CycleDocument;
use frieze_lab::reduce::{decompose, is_reducible, search_split};
use frieze_lab::{DihedralElement, Domain, QuiddityCycle, RingElement, Sign, SubsetSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        Just(Domain::Integer),
        Just(Domain::Rational),
        Just(Domain::Gaussian),
        (2u64..40).prop_map(Domain::Modular),
    ]
}

fn element(d: Domain) -> BoxedStrategy<RingElement> {
    match d {
        Domain::Integer => (-1000i64..1000).prop_map(RingElement::int).boxed(),
        Domain::Rational => (-60i64..60, 1i64..30)
            .prop_map(|(p, q)| RingElement::rational(p, q))
            .boxed(),
        Domain::Gaussian => (-60i64..60, -60i64..60)
            .prop_map(|(a, b)| RingElement::gaussian(a, b))
            .boxed(),
        Domain::Modular(n) => (-100i64..100).prop_map(move |v| RingElement::modular(v, n)).boxed(),
    }
}

fn triple() -> impl Strategy<Value = (RingElement, RingElement, RingElement)> {
    domain().prop_flat_map(|d| (element(d), element(d), element(d)))
}

fn int_cycle() -> impl Strategy<Value = QuiddityCycle> {
    (any::<u64>(), 1usize..=4).prop_map(|(seed, pieces)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(-4..=4);
        let bases = [
            QuiddityCycle::from_ints(&[1, 1, 1]).unwrap(),
            QuiddityCycle::from_ints(&[-1, -1, -1]).unwrap(),
            QuiddityCycle::from_ints(&[a, 0, -a, 0]).unwrap(),
        ];
        common::random_glued(&mut rng, &bases, pieces)
    })
}

proptest! {
    #[test]
    fn ring_axioms((x, y, z) in triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert_eq!(&x - &y, &x + &(-&y));
        let one = RingElement::one(x.domain());
        prop_assert_eq!(&x * &one, x.clone());
    }

    #[test]
    fn printed_form_is_canonical((x, y, _z) in triple()) {
        let back = RingElement::parse(x.domain(), &x.to_string()).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(x == y, x.to_string() == y.to_string());
    }

    #[test]
    fn units_of_order_two((x, _y, _z) in triple()) {
        if x.is_pm_one().is_some() {
            prop_assert_eq!(&x * &x, RingElement::one(x.domain()));
        }
    }

    #[test]
    fn determinant_laws((x, y, z) in triple()) {
        let one = RingElement::one(x.domain());
        prop_assert_eq!(eta(&x).det(), one.clone());
        let a = Matrix2::new(x.clone(), y.clone(), z.clone(), x.clone()).unwrap();
        let b = Matrix2::new(z.clone(), x.clone(), y.clone(), y.clone()).unwrap();
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
        let id = Matrix2::identity(x.domain());
        prop_assert_eq!(&eta(&x) * &eta_inv(&x), id.clone());
        prop_assert_eq!(&eta_inv(&x) * &eta(&x), id);
    }

    #[test]
    fn eta_identities((a, b, _c) in triple()) {
        let d = a.domain();
        let zero = RingElement::zero(d);
        let rhs = (&(&eta(&a) * &eta(&zero)) * &eta(&b)).neg();
        prop_assert_eq!(eta(&(&a + &b)), rhs);
        prop_assert_eq!(&eta(&zero) * &eta(&zero), Matrix2::identity(d).neg());
    }

    #[test]
    fn sum_laws(a in int_cycle(), b in int_cycle()) {
        let s = cycle_sum(&a, &b).unwrap();
        prop_assert_eq!(s.lambda(), -(a.lambda() * b.lambda()));
        prop_assert_eq!(s.len(), a.len() + b.len() - 2);
        prop_assert_eq!(common::lambda_of(&common::ints(&s)), Some(i64::from(s.lambda().to_i8())));
        let neutral = cycle_sum(&a, &QuiddityCycle::from_ints(&[0, 0]).unwrap()).unwrap();
        prop_assert_eq!(neutral, a);
    }

    #[test]
    fn frieze_is_tame(c in int_cycle()) {
        let f = make_frieze(&c);
        prop_assert!(f.is_tame());
        let m = c.len() as isize;
        for i in 0..m {
            for j in i..=i + m {
                let seg: Vec<i64> = (i..j - 1).map(|k| common::ints(&c)[(k % m) as usize]).collect();
                let want = if j == i { 0 } else { common::product(&seg)[0][0] };
                prop_assert_eq!(f.get(i, j).unwrap().to_i64(), Some(want));
            }
        }
    }

    #[test]
    fn witnesses_are_sound(c in int_cycle()) {
        if let Some(w) = is_reducible(&c, &SubsetSpec::whole(Domain::Integer)).unwrap() {
            prop_assert!(w.check(&c).is_ok());
            prop_assert_eq!(c.lambda(), -(w.summand_a.lambda() * w.summand_b.lambda()));
        }
    }

    #[test]
    fn whole_ring_routes_agree(c in int_cycle()) {
        let whole = SubsetSpec::whole(Domain::Integer);
        let by_unit = is_reducible(&c, &whole).unwrap();
        let by_search = search_split(&c, &whole).unwrap();
        prop_assert_eq!(by_unit.is_some(), by_search.is_some());
        if let Some(w) = by_search {
            prop_assert!(w.check(&c).is_ok());
        }
    }

    #[test]
    fn leaves_are_classified(c in int_cycle()) {
        let t = decompose(&c, &SubsetSpec::whole(Domain::Integer)).unwrap();
        for leaf in t.leaves() {
            let e = common::ints(leaf);
            let ok = match e.len() {
                3 => e == [1, 1, 1] || e == [-1, -1, -1],
                4 => {
                    let canon = common::canonical(&e);
                    (-100..=100).filter(|a: &i64| a.abs() != 1).any(|a| common::canonical(&[a, 0, -a, 0]) == canon)
                }
                _ => false,
            };
            prop_assert!(ok, "unexpected leaf ({})", leaf);
        }
    }

    #[test]
    fn cycle_documents_round_trip(c in int_cycle()) {
        let doc = CycleDocument::from_cycle(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back = CycleDocument::from_json(&text).unwrap().to_cycle().unwrap();
        prop_assert_eq!(back, c);
    }
}

#[test]
fn dihedral_action_preserves_lambda_exhaustively() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut by_length = [0; 9];
    let bases = [
        QuiddityCycle::from_ints(&[1, 1, 1]).unwrap(),
        QuiddityCycle::from_ints(&[-1, -1, -1]).unwrap(),
        QuiddityCycle::from_ints(&[2, 0, -2, 0]).unwrap(),
        QuiddityCycle::from_ints(&[0, 0]).unwrap(),
    ];
    while by_length[2..].iter().any(|&n| n < 5) {
        let pieces = rng.gen_range(1..=6);
        let c = common::random_glued(&mut rng, &bases, pieces);
        let m = c.len();
        if !(2..=8).contains(&m) {
            continue;
        }
        by_length[m] += 1;
        let all: Vec<_> = DihedralElement::all(m).collect();
        assert_eq!(all.len(), 2 * m);
        for s in &all {
            let image = c.apply_dihedral(*s).unwrap();
            assert_eq!(image.lambda(), c.lambda(), "({c}) under {s}");
            assert_eq!(common::lambda_of(&common::ints(&image)), Some(i64::from(c.lambda().to_i8())));
            for t in &all {
                let step = image.apply_dihedral(*t).unwrap();
                assert_eq!(step, c.apply_dihedral(s.then(t, m)).unwrap(), "{s} then {t} on ({c})");
            }
            assert_eq!(image.apply_dihedral(s.inverse(m)).unwrap(), c);
        }
        assert!(is_canonical(c.canonical().entries()));
    }
}

#[test]
fn zero_contraction_undoes_gluing() {
    for a in -6..=6 {
        let c = QuiddityCycle::from_ints(&[a, 0, -a, 0]).unwrap();
        for pos in [1, 3] {
            let r = zero_contract(&c, pos).unwrap();
            assert_eq!(common::ints(&r), [0, 0]);
            assert_eq!(r.lambda(), Sign::Minus);
        }
    }
}

#[test]
fn enumeration_matches_naive_filter() {
    for (values, m) in [(vec![-2, -1, 0, 1, 2], 5), (vec![-3, -1, 0, 2, 3], 4), (vec![0, 1, 2, 3], 6), (vec![-1, 1], 7)] {
        let naive: Vec<Vec<i64>> = common::all_sequences(&values, m)
            .into_iter()
            .filter(|cs| common::lambda_of(cs).is_some())
            .collect();
        let task = EnumerationTask::new(Domain::Integer, common::elems(&values), m).unwrap();
        let got: BTreeSet<Vec<i64>> = enumerate_cycles(&task).iter().map(common::ints).collect();
        let want: BTreeSet<Vec<i64>> = naive.iter().cloned().collect();
        assert_eq!(got, want, "candidates {values:?}, m = {m}");

        let orbits = enumerate_cycles(&task.clone().with_dedup(true));
        let canon: BTreeSet<Vec<i64>> = naive.iter().map(|c| common::canonical(c)).collect();
        let listed: Vec<Vec<i64>> = orbits.iter().map(common::ints).collect();
        assert_eq!(listed.iter().cloned().collect::<BTreeSet<_>>(), canon);
        assert_eq!(listed.len(), canon.len(), "orbit representatives repeat");
        let orbit_sizes: usize = canon
            .iter()
            .map(|c| common::dihedral_images(c).into_iter().collect::<BTreeSet<_>>().len())
            .sum();
        assert_eq!(orbit_sizes, naive.len());
    }
}

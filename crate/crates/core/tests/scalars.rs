mod common;

use common::small_gaussian;
use mv_core::scalars::{inv_quantum_int, quantum_int, quantum_int_t};
use mv_core::{GaussianRational, Scalar};
use proptest::prelude::*;

/// A ring expression kept as a tree so that it can be evaluated numerically
/// without going through the canonical form.
#[derive(Clone, Debug)]
enum Expr {
    Const(GaussianRational),
    ZPow(i32),
    U(i32),
    A,
    B,
    QInt(i32),
    InvQInt(i32),
    QIntT(i32),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    InvertQ(Box<Expr>),
}

#[derive(Clone, Debug)]
struct Point {
    z: GaussianRational,
    u: GaussianRational,
    a: GaussianRational,
    b: GaussianRational,
}

fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn zpow(z: &GaussianRational, e: i32) -> GaussianRational {
    z.powi(e as i64).unwrap()
}

impl Expr {
    fn build(&self) -> Scalar {
        match self {
            Expr::Const(c) => Scalar::from_gaussian(c.clone()),
            Expr::ZPow(e) => Scalar::z_pow(*e),
            Expr::U(e) => Scalar::u_pow(*e),
            Expr::A => Scalar::a(),
            Expr::B => Scalar::b(),
            Expr::QInt(n) => quantum_int(*n).unwrap(),
            Expr::InvQInt(n) => inv_quantum_int(*n).unwrap(),
            Expr::QIntT(n) => quantum_int_t(*n),
            Expr::Add(x, y) => &x.build() + &y.build(),
            Expr::Mul(x, y) => &x.build() * &y.build(),
            Expr::InvertQ(x) => x.build().invert_q(),
        }
    }

    fn eval(&self, pt: &Point) -> GaussianRational {
        match self {
            Expr::Const(c) => c.clone(),
            Expr::ZPow(e) => zpow(&pt.z, *e),
            Expr::U(e) => pt.u.powi(*e as i64).unwrap(),
            Expr::A => pt.a.clone(),
            Expr::B => pt.b.clone(),
            Expr::QInt(n) => &zpow(&pt.z, *n) - &zpow(&pt.z, -n),
            Expr::InvQInt(n) => (&zpow(&pt.z, *n) - &zpow(&pt.z, -n)).inv().unwrap(),
            Expr::QIntT(n) => {
                let uinv = pt.u.inv().unwrap();
                &(&uinv * &zpow(&pt.z, *n)) - &(&pt.u * &zpow(&pt.z, -n))
            }
            Expr::Add(x, y) => &x.eval(pt) + &y.eval(pt),
            Expr::Mul(x, y) => &x.eval(pt) * &y.eval(pt),
            Expr::InvertQ(x) => {
                let inv = Point {
                    z: pt.z.inv().unwrap(),
                    ..pt.clone()
                };
                x.eval(&inv)
            }
        }
    }
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        small_gaussian().prop_map(Expr::Const),
        (-4i32..=4).prop_map(Expr::ZPow),
        (-2i32..=2).prop_map(Expr::U),
        Just(Expr::A),
        Just(Expr::B),
        (1i32..=6).prop_map(Expr::QInt),
        (1i32..=6).prop_map(Expr::InvQInt),
        (-3i32..=3).prop_map(Expr::QIntT),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Add(Box::new(x), Box::new(y))),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| Expr::Mul(Box::new(x), Box::new(y))),
            inner.prop_map(|x| Expr::InvertQ(Box::new(x))),
        ]
    })
}

/// Points off the unit circle, so no quantum integer vanishes.
fn point() -> impl Strategy<Value = Point> {
    let nonzero = |lo: i64, hi: i64| {
        (lo..=hi, 1i64..=3, -2i64..=2)
            .prop_filter("nonzero", |(re, _, im)| *re != 0 || *im != 0)
            .prop_map(|(re, den, im)| {
                &GaussianRational::ratio(re, den) + &(&GaussianRational::i() * &g(im))
            })
    };
    (
        (2i64..=5, -1i64..=1),
        nonzero(-3, 3),
        nonzero(-3, 3),
        nonzero(-3, 3),
    )
        .prop_map(|((zr, zi), u, a, b)| Point {
            z: &g(zr) + &(&GaussianRational::i() * &g(zi)),
            u,
            a,
            b,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_agrees_with_evaluation(e in expr(), pts in prop::collection::vec(point(), 20)) {
        let s = e.build();
        for pt in &pts {
            let direct = e.eval(pt);
            let canonical = s.eval_point(&pt.z, &pt.a, &pt.b, &pt.u).unwrap();
            prop_assert_eq!(direct, canonical);
        }
    }
}

proptest! {
    #[test]
    fn ring_laws(x in expr(), y in expr(), w in expr()) {
        let (x, y, w) = (x.build(), y.build(), w.build());
        prop_assert_eq!(&(&x + &y) * &w, &(&x * &w) + &(&y * &w));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(x.invert_q().invert_q(), x);
    }

    #[test]
    fn rendering_is_deterministic(x in expr()) {
        let s = x.build();
        prop_assert_eq!(s.render(), s.clone().render());
        prop_assert_eq!(s.render(), (&s + &Scalar::zero()).render());
    }
}

#[test]
fn quantum_integer_addition_law() {
    for m in -10i32..=10 {
        for n in -10i32..=10 {
            let q = |k: i32| {
                if k == 0 {
                    Scalar::zero()
                } else {
                    quantum_int(k).unwrap()
                }
            };
            let rhs = &q(n).mul_z_pow(m) + &q(m).mul_z_pow(-n);
            assert_eq!(q(m + n), rhs, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn spot_evaluations() {
    let f = &(&Scalar::one() - &Scalar::u_pow(2)) * &inv_quantum_int(1).unwrap();
    assert_eq!(
        f.eval_point(&g(2), &g(0), &g(0), &g(3)).unwrap(),
        GaussianRational::ratio(-16, 3)
    );
    assert_eq!(
        quantum_int(2)
            .unwrap()
            .eval_point(&g(2), &g(0), &g(0), &g(1))
            .unwrap(),
        GaussianRational::ratio(15, 4)
    );
    let inv1 = inv_quantum_int(1).unwrap();
    let sq = &inv1 * &inv1;
    assert_eq!(sq.invert_q(), sq);
    assert!(inv1.eval_point(&g(1), &g(0), &g(0), &g(1)).is_err());
}

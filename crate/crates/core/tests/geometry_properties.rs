mod common;

use cantor_quant::geometry::min_rho_on_segment;
use cantor_quant::{ConstraintPoint, Rational, rho, u_forward, u_inverse};
use common::q;
use proptest::prelude::*;

#[test]
fn round_trip_is_exact() {
    for j in 1..=64u64 {
        for i in 0..50 {
            let t = q(i * 7 % 50, 49);
            let p = u_inverse(j, &t).unwrap();
            assert_eq!(u_forward(&p), t);
        }
    }
}

#[test]
fn optimal_segment_is_the_last_one() {
    let n = 12;
    for i in 0..=30 {
        let x = q(i, 30);
        let mins: Vec<Rational> = (1..=n).map(|t| min_rho_on_segment(&x, t)).collect();
        assert!(mins.windows(2).all(|w| w[1] <= w[0]), "x = {x}");
    }
}

proptest! {
    #[test]
    fn u_forward_preserves_order(j in 1u64..40, a in -1000i64..1000, b in -1000i64..1000) {
        prop_assume!(a != b);
        let (xa, xb) = (q(a, 1000), q(b, 1000));
        let pa = ConstraintPoint::new(j, xa.clone());
        let pb = ConstraintPoint::new(j, xb.clone());
        if let (Ok(pa), Ok(pb)) = (pa, pb) {
            prop_assert_eq!(xa < xb, u_forward(&pa) < u_forward(&pb));
        }
    }

    #[test]
    fn rho_splits_into_two_halves(
        t in 1u64..30,
        xn in -300i64..300, xd in 1i64..40,
        an in -100i64..100,
    ) {
        let x = q(xn, xd);
        let a = q(an, 100);
        prop_assume!(a >= q(-1, t as i64) && a <= q(1, 1));
        let p = ConstraintPoint::new(t, a.clone()).unwrap();
        let inv = q(1, t as i64);
        let lhs = rho(&x, &p);
        let d1 = q(2, 1) * &a - (&x - &inv);
        let d2 = &x + &inv;
        prop_assert_eq!(lhs, (&d1 * &d1 + &d2 * &d2) / q(2, 1));
    }

    #[test]
    fn u_inverse_stays_on_segment(j in 1u64..50, tn in -200i64..400) {
        let t = q(tn, 100);
        match u_inverse(j, &t) {
            Ok(p) => {
                prop_assert_eq!(p.y(), p.x() + q(1, j as i64));
                prop_assert_eq!(u_forward(&p), t);
            }
            Err(_) => prop_assert!(t < q(-1, j as i64) || t > q(2, 1) + q(1, j as i64)),
        }
    }
}

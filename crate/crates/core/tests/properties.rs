use std::cmp::Ordering;

use proptest::prelude::*;

use gridlink::generators::{assemble_path, covering_circuit, distance_optimal_trail};
use gridlink::geometry::{lattice_points_on_segment, point_on_segment, Segment};
use gridlink::io::ChainDocument;
use gridlink::{classify, Chain, ChainKind, Dihedral, GridScalar, Node, Point, Rational, Scalar};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Sign of `a/b + (c/d)·√2` by squaring, with `b, d > 0`.
fn sign_by_squares(a: i64, b: i64, c: i64, d: i64) -> Ordering {
    // Scale by b·d > 0: sign of A + C√2 with A = a·d, C = c·b.
    let (a, c) = (a as i128 * d as i128, c as i128 * b as i128);
    match (a.signum(), c.signum()) {
        (0, s) | (s, 0) => s.cmp(&0),
        (1, 1) => Ordering::Greater,
        (-1, -1) => Ordering::Less,
        _ => {
            // Opposite signs: the larger square wins.
            let side = (a * a).cmp(&(2 * c * c));
            if a > 0 { side } else { side.reverse() }
        }
    }
}

fn scalar(a: i64, b: i64, c: i64, d: i64) -> Scalar {
    Scalar::new(rat(a, b), rat(c, d))
}

fn generated() -> impl Strategy<Value = Chain> {
    (2usize..14, 0u8..3).prop_filter_map("no such chain", |(n, k)| match k {
        0 => assemble_path(n).ok(),
        1 => covering_circuit(n).ok(),
        _ => distance_optimal_trail(n).ok(),
    })
}

fn dihedral() -> impl Strategy<Value = Dihedral> {
    (0usize..8).prop_map(|i| Dihedral::ALL[i])
}

fn small_point() -> impl Strategy<Value = Point> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6, -3i64..4)
        .prop_map(|(x, dx, y, dy, s)| Point::new(scalar(x, dx, s, 2), Scalar::ratio(y, dy)))
}

proptest! {
    #[test]
    fn sign_matches_squares_and_floats(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500) {
        let x = scalar(a, b, c, d);
        let exact = x.sign();
        prop_assert_eq!(exact, sign_by_squares(a, b, c, d));
        let f = a as f64 / b as f64 + (c as f64 / d as f64) * std::f64::consts::SQRT_2;
        if f.abs() > 1e-9 {
            prop_assert_eq!(exact, f.partial_cmp(&0.0).unwrap());
        }
    }

    #[test]
    fn classification_survives_symmetry(c in generated(), g in dihedral()) {
        let flags = |c: &Chain| {
            let k = classify(c).unwrap();
            (k.is_covering_trail, k.is_covering_path, k.is_covering_circuit, k.is_covering_cycle)
        };
        let moved = c.transformed(g);
        prop_assert_eq!(flags(&moved), flags(&c));
        let revisits = |c: &Chain| c.visit_report().unwrap().revisited().len();
        prop_assert_eq!(revisits(&moved), revisits(&c));
        prop_assert_eq!(moved.total_length().unwrap(), c.total_length().unwrap());
    }

    #[test]
    fn reversal_keeps_coverage_and_length(c in generated()) {
        let rev = c.reversed();
        let (a, b) = (classify(&c).unwrap(), classify(&rev).unwrap());
        prop_assert_eq!(a.strongest(), b.strongest());
        prop_assert_eq!(rev.link_length(), c.link_length());
        prop_assert_eq!(rev.total_length().unwrap(), c.total_length().unwrap());
        prop_assert_eq!(rev.reversed(), c);
    }

    #[test]
    fn translation_keeps_length(c in generated(), dx in -5i64..5, dy in -5i64..5) {
        let t = c.translated(dx, dy);
        prop_assert_eq!(t.total_length().unwrap(), c.total_length().unwrap());
        prop_assert_eq!(t.translated(-dx, -dy), c);
    }

    #[test]
    fn json_round_trip(pts in prop::collection::vec(small_point(), 2..8), n in 1usize..10) {
        let Ok(c) = Chain::new(n, pts, ChainKind::Unknown) else { return Ok(()) };
        let json = ChainDocument::from_chain(&c).to_json();
        let back = ChainDocument::from_json(&json).unwrap().to_chain().unwrap();
        prop_assert_eq!(back.vertices(), c.vertices());
        prop_assert_eq!(ChainDocument::from_chain(&back).to_json(), json);
    }

    #[test]
    fn lattice_points_grow_with_the_segment(
        x0 in -3i64..12, y0 in -3i64..12, dx in -6i64..7, dy in -6i64..7, k in 1i64..4, n in 1usize..12,
    ) {
        prop_assume!(dx != 0 || dy != 0);
        let a = Point::from_ints(x0, y0);
        let short = Segment::new(a.clone(), Point::from_ints(x0 + dx, y0 + dy)).unwrap();
        let long = Segment::new(a, Point::from_ints(x0 + k * dx, y0 + k * dy)).unwrap();
        let (ps, pl) = (lattice_points_on_segment(&short, n), lattice_points_on_segment(&long, n));
        prop_assert!(ps.iter().all(|v| pl.contains(v)));
        prop_assert!(ps.len() <= pl.len());
    }

    #[test]
    fn lattice_points_agree_with_membership(
        ax in -2i64..8, ay in -2i64..8, bx in -2i64..8, by in -2i64..8, s in -2i64..3, n in 1usize..7,
    ) {
        let a = Point::new(scalar(ax, 1, s, 3), Scalar::from_int(ay));
        let b = Point::from_ints(bx, by);
        let Ok(seg) = Segment::new(a, b) else { return Ok(()) };
        let found = lattice_points_on_segment(&seg, n);
        let ni = n as i64;
        for x in 0..ni {
            for y in 0..ni {
                let on = point_on_segment(&Node::new(x, y).to_point(), &seg);
                prop_assert_eq!(on, found.contains(&Node::new(x, y)), "({}, {})", x, y);
            }
        }
    }
}

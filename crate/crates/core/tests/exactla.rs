mod common;

use num_bigint::BigInt;
use oscoh::exactla::{
    field_rank, integer_rank, parse_rational, rank_mod_p, smith_normal_form, FieldMatrix, IntMatrix,
    ModP, NumberField, Rational, Scalar,
};
use oscoh::Error;
use proptest::prelude::*;

fn int(rows: &[&[i64]]) -> IntMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    IntMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qmat(rows: &[Vec<i64>], cols: usize) -> FieldMatrix<Rational> {
    FieldMatrix::new(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

#[test]
fn field_rank_examples() {
    assert_eq!(field_rank(&qmat(&vec![vec![0; 4]; 3], 4)), 0);
    let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| i64::from(i == j)).collect()).collect();
    assert_eq!(field_rank(&qmat(&id, 5)), 5);
    assert_eq!(field_rank(&qmat(&[vec![1, 2, 3], vec![2, 4, 6]], 3)), 1);
    assert_eq!(field_rank(&FieldMatrix::<Rational>::new(Vec::new(), 0)), 0);
}

#[test]
fn smith_examples() {
    assert_eq!(smith_normal_form(&int(&[&[2, 0], &[0, 6]])), big(&[2, 6]));
    assert_eq!(smith_normal_form(&int(&[&[2, 4], &[6, 8]])), big(&[2, 4]));
    assert_eq!(smith_normal_form(&int(&[&[0, 0, 0], &[0, 0, 0]])), big(&[]));
}

#[test]
fn mod_p_examples() {
    assert_eq!(rank_mod_p(&int(&[&[3, 0], &[0, 3]]), 3).unwrap(), 0);
    assert_eq!(rank_mod_p(&IntMatrix::identity(4), 5).unwrap(), 4);
    assert_eq!(rank_mod_p(&int(&[&[1, 2], &[2, 4]]), 3).unwrap(), 1);
    assert_eq!(rank_mod_p(&IntMatrix::identity(2), 4), Err(Error::NotPrime { value: 4 }));
}

#[test]
fn rationals_parse_and_reduce() {
    assert_eq!(parse_rational("6/-4").unwrap(), Rational::new((-3).into(), 2.into()));
    assert_eq!(parse_rational(" 10/4 ").unwrap().denom(), &BigInt::from(2));
    assert_eq!(parse_rational("\u{2212}2/3").unwrap(), Rational::new((-2).into(), 3.into()));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("1.5").is_err());
}

#[test]
fn eisenstein_arithmetic() {
    let k = NumberField::eisenstein();
    let w = k.generator();
    let w3 = w.times(&w).times(&w);
    assert_eq!(w3, k.from_rational(q(1)));
    let one_plus = w.plus(&k.from_rational(q(1)));
    // 1 + w = -w^2, a unit
    assert_eq!(one_plus.times(&one_plus.inverse()), k.from_rational(q(1)));
    assert!(NumberField::new(big(&[1, 2])).is_err());
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        (prop::collection::vec(prop::collection::vec(-4i64..=4, c), r), Just(c))
    })
}

/// Determinant by cofactor expansion, for tiny matrices.
fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn echelon_rank(rows: &[Vec<i64>], p: Option<i64>) -> usize {
    let mut e = match p {
        Some(p) => common::Echelon::modular(p as i128),
        None => common::Echelon::rational(),
    };
    for r in rows {
        e.insert(r.iter().map(|&x| x as i128).collect());
    }
    e.rank()
}

proptest! {
    #[test]
    fn ranks_agree_with_reference((rows, cols) in small_matrix(6, 6)) {
        let m = IntMatrix::from_i64(&rows, cols);
        let r = integer_rank(&m);
        prop_assert_eq!(r, echelon_rank(&rows, None));
        prop_assert_eq!(field_rank(&qmat(&rows, cols)), r);
        prop_assert_eq!(smith_normal_form(&m).len(), r);
        for p in [2u64, 3, 5, 7] {
            let rp = rank_mod_p(&m, p).unwrap();
            prop_assert_eq!(rp, echelon_rank(&rows, Some(p as i64)));
            prop_assert!(rp <= r);
            let pb = BigInt::from(p);
            let units = smith_normal_form(&m).iter().filter(|d| (*d % &pb) != BigInt::from(0)).count();
            prop_assert_eq!(rp, units);
            let residues: Vec<Vec<ModP>> = rows.iter().map(|row| row.iter().map(|&x| ModP::new(x, p)).collect()).collect();
            prop_assert_eq!(field_rank(&FieldMatrix::new(residues, cols)), rp);
        }
    }

    #[test]
    fn smith_factors_divide_and_multiply_to_det((rows, _) in small_matrix(4, 4).prop_filter("square", |(r, c)| r.len() == *c)) {
        let n = rows.len();
        let d = smith_normal_form(&IntMatrix::from_i64(&rows, n));
        for w in d.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
        prop_assert!(d.iter().all(|x| *x > BigInt::from(0)));
        let det = det(&rows);
        if det != 0 {
            let prod: BigInt = d.iter().product();
            prop_assert_eq!(prod, BigInt::from(det.abs()));
        }
    }

    #[test]
    fn rank_invariant_under_permutation_and_scaling(
        (rows, cols) in small_matrix(5, 5),
        seed in any::<u64>(),
        scale in prop::sample::select(vec![-3i64, -1, 2, 5]),
    ) {
        let base = field_rank(&qmat(&rows, cols));
        let mut permuted = rows.clone();
        let n = permuted.len();
        permuted.rotate_left((seed as usize) % n);
        let col_shift = (seed as usize / 7) % cols;
        for r in permuted.iter_mut() {
            r.rotate_left(col_shift);
        }
        prop_assert_eq!(field_rank(&qmat(&permuted, cols)), base);
        let mut scaled: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let i = (seed as usize) % n;
        scaled[i] = scaled[i].iter().map(|x| x * Rational::new(scale.into(), 7.into())).collect();
        prop_assert_eq!(field_rank(&FieldMatrix::new(scaled, cols)), base);
    }

    #[test]
    fn number_field_is_associative_and_evaluates_homomorphically(
        a in prop::collection::vec(-5i64..=5, 2),
        b in prop::collection::vec(-5i64..=5, 2),
        c in prop::collection::vec(-5i64..=5, 2),
    ) {
        let k = NumberField::eisenstein();
        let el = |v: &[i64]| k.element(v.iter().map(|&x| q(x)).collect());
        let (x, y, z) = (el(&a), el(&b), el(&c));
        prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
        prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        // evaluate at the complex root exp(2 pi i / 3)
        let w = common::omega();
        let ev = |e: &oscoh::NfElem| {
            let cs: Vec<f64> = e.coeffs().iter().map(|r| r.numer().to_string().parse::<f64>().unwrap() / r.denom().to_string().parse::<f64>().unwrap()).collect();
            let c0 = cs.first().copied().unwrap_or(0.0);
            let c1 = cs.get(1).copied().unwrap_or(0.0);
            (c0 + c1 * w.0, c1 * w.1)
        };
        let (xr, xi) = ev(&x);
        let (yr, yi) = ev(&y);
        let (pr, pi) = ev(&x.times(&y));
        prop_assert!((pr - (xr * yr - xi * yi)).abs() < 1e-9);
        prop_assert!((pi - (xr * yi + xi * yr)).abs() < 1e-9);
        if !x.vanishes() {
            prop_assert_eq!(x.times(&x.inverse()), k.from_rational(q(1)));
        }
    }
}

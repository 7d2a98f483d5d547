//! Built-in arrangements.

use std::sync::Arc;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exactla::{NfElem, NumberField, Rational};

pub const NAMES: &[&str] = &[
    "boolean(n)",
    "three-lines",
    "example-lstrict",
    "ceva3",
    "maclane",
    "maclane-matroid",
    "ceva3-section",
    "maclane-section",
    "product-example",
];

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn rational(rows: &[&[i64]], labels: &[&str]) -> Arrangement {
    Arrangement::from_rational_forms(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
        .and_then(|a| a.with_labels(labels.iter().map(ToString::to_string).collect()))
        .expect("catalog arrangement is valid")
}

/// Coordinate hyperplanes `z_1 ... z_n`.
pub fn boolean(n: usize) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::Parse("boolean arrangement needs n >= 1".into()));
    }
    let rows = (0..n)
        .map(|i| (0..=n).map(|j| q(i64::from(i == j))).collect())
        .collect();
    Arrangement::from_rational_forms(rows)?.with_labels((1..=n).map(|i| format!("z{i}")).collect())
}

/// Three lines through the origin of `C^2`.
pub fn three_lines() -> Arrangement {
    rational(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]], &["x", "y", "x+y"])
}

/// `x(x+y+z)(x+y-z)y(x-y-z)(x-y+z)z`, in factor order.
pub fn example_lstrict() -> Arrangement {
    rational(
        &[
            &[1, 0, 0, 0],
            &[1, 1, 1, 0],
            &[1, 1, -1, 0],
            &[0, 1, 0, 0],
            &[1, -1, -1, 0],
            &[1, -1, 1, 0],
            &[0, 0, 1, 0],
        ],
        &["x", "x+y+z", "x+y-z", "y", "x-y-z", "x-y+z", "z"],
    )
}

/// Forms over `Q(omega)`; each coefficient is `a + b*omega` given as `(a, b)`.
fn eisenstein(rows: &[[(i64, i64); 4]], labels: &[&str]) -> Arrangement {
    let k = NumberField::eisenstein();
    let elem = |(a, b): (i64, i64)| -> NfElem { k.element(vec![q(a), q(b)]) };
    let rows: Vec<Vec<NfElem>> = rows.iter().map(|r| r.iter().map(|&c| elem(c)).collect()).collect();
    Arrangement::from_number_field_forms(Arc::clone(&k), rows)
        .and_then(|a| a.with_labels(labels.iter().map(ToString::to_string).collect()))
        .expect("catalog arrangement is valid")
}

const ZERO: (i64, i64) = (0, 0);
const ONE: (i64, i64) = (1, 0);
const M_ONE: (i64, i64) = (-1, 0);
const OMEGA: (i64, i64) = (0, 1);
const M_OMEGA: (i64, i64) = (0, -1);
// omega^2 = -1 - omega
const OMEGA2: (i64, i64) = (-1, -1);
const M_OMEGA2: (i64, i64) = (1, 1);

/// `(x^3-y^3)(x^3-z^3)(y^3-z^3)`, each cubic split as `(u-v)(u-wv)(u-w^2v)`.
pub fn ceva3() -> Arrangement {
    eisenstein(
        &[
            [ONE, M_ONE, ZERO, ZERO],
            [ONE, M_OMEGA, ZERO, ZERO],
            [ONE, M_OMEGA2, ZERO, ZERO],
            [ONE, ZERO, M_ONE, ZERO],
            [ONE, ZERO, M_OMEGA, ZERO],
            [ONE, ZERO, M_OMEGA2, ZERO],
            [ZERO, ONE, M_ONE, ZERO],
            [ZERO, ONE, M_OMEGA, ZERO],
            [ZERO, ONE, M_OMEGA2, ZERO],
        ],
        &["x-y", "x-wy", "x-w^2y", "x-z", "x-wz", "x-w^2z", "y-z", "y-wz", "y-w^2z"],
    )
}

/// `xy(y-x)z(z-x-w^2y)(z+wy)(z-x)(z+w^2x+wy)`, in factor order.
pub fn maclane() -> Arrangement {
    eisenstein(
        &[
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, ONE, ZERO, ZERO],
            [M_ONE, ONE, ZERO, ZERO],
            [ZERO, ZERO, ONE, ZERO],
            [M_ONE, M_OMEGA2, ONE, ZERO],
            [ZERO, OMEGA, ONE, ZERO],
            [M_ONE, ZERO, ONE, ZERO],
            [OMEGA2, OMEGA, ONE, ZERO],
        ],
        &["x", "y", "y-x", "z", "z-x-w^2y", "z+wy", "z-x", "z+w^2x+wy"],
    )
}

/// Lines of the MacLane `8_3` configuration (1-based) matching the
/// realization in [`maclane`].
pub const MACLANE_TRIPLES: [[usize; 3]; 8] = [
    [1, 2, 3],
    [1, 4, 7],
    [1, 6, 8],
    [2, 4, 6],
    [2, 5, 7],
    [3, 5, 6],
    [3, 7, 8],
    [4, 5, 8],
];


/// The rank-3 paving matroid on the eight MacLane triples.
pub fn maclane_matroid() -> Arrangement {
    let circuits: Vec<Vec<usize>> =
        MACLANE_TRIPLES.iter().map(|t| t.iter().map(|i| i - 1).collect()).collect();
    Arrangement::from_circuits(8, &circuits, Some(3), None)
        .and_then(|a| a.with_labels(maclane().labels().to_vec()))
        .expect("MacLane matroid is valid")
}

pub fn ceva3_section() -> Arrangement {
    ceva3().generic_section(2).expect("rank 3 arrangement has a plane section")
}

pub fn maclane_section() -> Arrangement {
    maclane().generic_section(2).expect("rank 3 arrangement has a plane section")
}

pub fn product_example() -> Arrangement {
    Arrangement::product(&ceva3_section(), &maclane_section()).expect("product of sections is valid")
}

/// Look up a catalog entry by name; `boolean(n)` takes its size inline.
pub fn lookup(name: &str) -> Result<Arrangement> {
    let name = name.trim();
    if let Some(arg) = name.strip_prefix("boolean(").and_then(|s| s.strip_suffix(')')) {
        let n: usize = arg.trim().parse().map_err(|_| Error::UnknownCatalog(name.into()))?;
        return boolean(n);
    }
    Ok(match name {
        "three-lines" => three_lines(),
        "example-lstrict" | "lstrict" => example_lstrict(),
        "ceva3" => ceva3(),
        "maclane" => maclane(),
        "maclane-matroid" => maclane_matroid(),
        "ceva3-section" => ceva3_section(),
        "maclane-section" => maclane_section(),
        "product-example" => product_example(),
        _ => return Err(Error::UnknownCatalog(name.into())),
    })
}

/// Weight vectors used by the worked examples, as `(k, N)`.
pub mod weights {
    /// `k'` on the Ceva(3) planes (and on its section), `N = 3`.
    pub const CEVA: [i64; 9] = [1, 1, 1, 1, 1, 1, -2, -2, -2];
    /// `k''` on the MacLane section, `N = 3`.
    pub const MACLANE_SECTION: [i64; 8] = [1, 0, -1, 1, -1, -1, 1, 0];
    /// `lambda = (1,0,0,1,1,0,1) / 2` on the seven planes of `example-lstrict`.
    pub const LSTRICT: [i64; 7] = [1, 0, 0, 1, 1, 0, 1];

    /// `k(u, v) = u (1,0,2,1,2,2,1,0) + v (2,2,2,1,1,0,0,1)` on MacLane.
    pub fn maclane(u: i64, v: i64) -> [i64; 8] {
        let a = [1, 0, 2, 1, 2, 2, 1, 0];
        let b = [2, 2, 2, 1, 1, 0, 0, 1];
        std::array::from_fn(|i| u * a[i] + v * b[i])
    }
}


use super::{CartanType, Series};
use crate::exact::linalg::Matrix;
use crate::exact::{int, QVector, Rational};

/// Simple roots and the ambient inner product for `ty`.
pub(super) fn simple_roots(ty: CartanType) -> (Vec<QVector>, Matrix) {
    let n = ty.rank;
    match ty.series {
        Series::A => {
            let simple = (0..n).map(|i| eps_diff(n + 1, i, i + 1)).collect();
            (simple, identity(n + 1))
        }
        Series::B => {
            let mut simple: Vec<QVector> = (0..n - 1).map(|i| eps_diff(n, i, i + 1)).collect();
            simple.push(QVector::basis(n, n - 1, int(1)));
            (simple, identity(n))
        }
        Series::C => {
            let mut simple: Vec<QVector> = (0..n - 1).map(|i| eps_diff(n, i, i + 1)).collect();
            simple.push(QVector::basis(n, n - 1, int(2)));
            (simple, identity(n))
        }
        Series::D => {
            let mut simple: Vec<QVector> = (0..n - 1).map(|i| eps_diff(n, i, i + 1)).collect();
            let mut last = QVector::zeros(n).into_coords();
            last[n - 2] = int(1);
            last[n - 1] = int(1);
            simple.push(QVector::new(last));
            (simple, identity(n))
        }
        Series::E | Series::F | Series::G => {
            let gram = exceptional_gram(ty);
            let simple = (0..n).map(|i| QVector::basis(n, i, int(1))).collect();
            (simple, gram)
        }
    }
}

fn eps_diff(dim: usize, i: usize, j: usize) -> QVector {
    let mut v = QVector::zeros(dim).into_coords();
    v[i] = int(1);
    v[j] = int(-1);
    QVector::new(v)
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| int(i64::from(i == j))).collect())
        .collect()
}

/// Symmetrized Cartan matrix `(α_i, α_j)` in Bourbaki numbering, short roots
/// of squared length 2.
fn exceptional_gram(ty: CartanType) -> Matrix {
    let n = ty.rank;
    let (lengths, edges): (Vec<i64>, Vec<(usize, usize, i64)>) = match ty.series {
        Series::G => (vec![2, 6], vec![(0, 1, -3)]),
        Series::F => (vec![4, 4, 2, 2], vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)]),
        Series::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            let mut edges = vec![(0, 2, -1), (1, 3, -1)];
            edges.extend((2..n - 1).map(|i| (i, i + 1, -1)));
            (vec![2; n], edges)
        }
        _ => unreachable!("classical types use ε-coordinates"),
    };
    let mut g: Matrix = vec![vec![Rational::from_integer(0.into()); n]; n];
    for (i, &l) in lengths.iter().enumerate() {
        g[i][i] = int(l);
    }
    for (i, j, v) in edges {
        g[i][j] = int(v);
        g[j][i] = int(v);
    }
    g
}

//! Materialization of the structured matrix families: generalized Pascal
//! triangles, 7-matrices, Toeplitz matrices, the bespoke integer families,
//! binomial triangles, and the two factors of the Toeplitz factorization.
//!
//! All matrices are square, indexed from (0, 0), and immutable once built.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, QuadScalar, Rational};
use crate::sequence::{binomial, gibonacci_window, GibonacciParams, SequenceSpec};

/// Row-major square matrix of exact scalars sharing one field tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: FieldTag,
    order: usize,
    entries: Vec<QuadScalar>,
}

impl DenseMatrix {
    pub fn from_rows(field: FieldTag, rows: Vec<Vec<QuadScalar>>) -> Result<DenseMatrix> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::BadSpec("matrix order must be at least 1".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::BadSpec("matrix rows must be square".into()));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field.d(),
                        right: e.field().d(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(DenseMatrix {
            field,
            order,
            entries,
        })
    }

    fn from_fn(
        field: FieldTag,
        order: usize,
        mut f: impl FnMut(usize, usize) -> QuadScalar,
    ) -> DenseMatrix {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        DenseMatrix {
            field,
            order,
            entries,
        }
    }

    pub fn identity(field: FieldTag, order: usize) -> DenseMatrix {
        DenseMatrix::from_fn(field, order, |i, j| {
            if i == j {
                QuadScalar::one(field)
            } else {
                QuadScalar::zero(field)
            }
        })
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadScalar {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[QuadScalar] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[QuadScalar]> {
        self.entries.chunks(self.order)
    }

    /// The top-left block of the given order.
    pub fn leading_block(&self, order: usize) -> DenseMatrix {
        assert!(order >= 1 && order <= self.order);
        DenseMatrix::from_fn(self.field, order, |i, j| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.field, self.order, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch {
                left: self.field.d(),
                right: rhs.field.d(),
            });
        }
        if self.order != rhs.order {
            return Err(Error::BadSpec(format!(
                "order mismatch in product: {} vs {}",
                self.order, rhs.order
            )));
        }
        Ok(DenseMatrix::from_fn(self.field, self.order, |i, j| {
            let mut acc = QuadScalar::zero(self.field);
            for k in 0..self.order {
                let term = self.get(i, k) * rhs.get(k, j);
                acc = acc + term;
            }
            acc
        }))
    }

    /// Zero below the first subdiagonal.
    pub fn is_upper_hessenberg(&self) -> bool {
        for i in 0..self.order {
            for j in 0..self.order {
                if i > j + 1 && !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when every entry is a plain integer (radical part zero,
    /// denominator one).
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }
}

/// Rank-one bump delta * E(i, j) applied after family construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modifier {
    pub i: usize,
    pub j: usize,
    pub delta: QuadScalar,
}

/// The matrix families the crate knows how to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixFamily {
    /// First column alpha, first row beta, interior = left + above.
    Pascal {
        alpha: SequenceSpec,
        beta: SequenceSpec,
    },
    /// First column alpha, first row beta, interior = above-left + above.
    Seven {
        alpha: SequenceSpec,
        beta: SequenceSpec,
    },
    /// Constant diagonals: first column alpha, first row beta.
    Toeplitz {
        alpha: SequenceSpec,
        beta: SequenceSpec,
    },
    /// Diagonal c, strict upper part a, strict lower part b.
    ToeplitzAbc {
        a: QuadScalar,
        b: QuadScalar,
        c: QuadScalar,
    },
    BespokeA,
    BespokeB,
    BespokeC,
    BespokeD,
    /// Lower triangle of binomial coefficients, unit diagonal.
    UnipotentL,
    UnipotentU,
    /// Unit lower-triangular factor of the Toeplitz factorization.
    FactorL {
        a: QuadScalar,
        b: QuadScalar,
        r: QuadScalar,
    },
    /// Upper Hessenberg factor of the Toeplitz factorization.
    FactorH {
        a: QuadScalar,
        b: QuadScalar,
        r: QuadScalar,
    },
}

/// Declarative description of a square matrix of a given order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpec {
    pub field: FieldTag,
    pub order: usize,
    pub family: MatrixFamily,
    pub modifiers: Vec<Modifier>,
}

impl MatrixSpec {
    pub fn new(field: FieldTag, order: usize, family: MatrixFamily) -> MatrixSpec {
        MatrixSpec {
            field,
            order,
            family,
            modifiers: Vec::new(),
        }
    }

    pub fn with_modifiers(mut self, modifiers: Vec<Modifier>) -> MatrixSpec {
        self.modifiers = modifiers;
        self
    }

    /// The same spec at a different order.
    pub fn at_order(&self, order: usize) -> MatrixSpec {
        MatrixSpec {
            order,
            ..self.clone()
        }
    }
}

/// Build the matrix a spec describes.
pub fn build(spec: &MatrixSpec) -> Result<DenseMatrix> {
    if spec.order == 0 {
        return Err(Error::BadSpec("matrix order must be at least 1".into()));
    }
    let field = spec.field;
    let n = spec.order - 1;
    let mut matrix = match &spec.family {
        MatrixFamily::Pascal { alpha, beta } => {
            let (col, row) = border_sequences(field, alpha, beta, n)?;
            build_bordered(field, spec.order, &col, &row, |grid, i, j| {
                &grid[i][j - 1] + &grid[i - 1][j]
            })
        }
        MatrixFamily::Seven { alpha, beta } => {
            let (col, row) = border_sequences(field, alpha, beta, n)?;
            build_bordered(field, spec.order, &col, &row, |grid, i, j| {
                &grid[i - 1][j - 1] + &grid[i - 1][j]
            })
        }
        MatrixFamily::Toeplitz { alpha, beta } => {
            let (col, row) = border_sequences(field, alpha, beta, n)?;
            DenseMatrix::from_fn(field, spec.order, |i, j| {
                if i >= j {
                    col[i - j].clone()
                } else {
                    row[j - i].clone()
                }
            })
        }
        MatrixFamily::ToeplitzAbc { a, b, c } => {
            for s in [a, b, c] {
                if s.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field.d(),
                        right: s.field().d(),
                    });
                }
            }
            DenseMatrix::from_fn(field, spec.order, |i, j| {
                if i == j {
                    c.clone()
                } else if i < j {
                    a.clone()
                } else {
                    b.clone()
                }
            })
        }
        MatrixFamily::BespokeA => build_bespoke_a(field, spec.order)?,
        MatrixFamily::BespokeB => build_bespoke_b(field, spec.order)?,
        MatrixFamily::BespokeC => build_bespoke_c(field, spec.order)?,
        MatrixFamily::BespokeD => build_bespoke_d(field, spec.order)?,
        MatrixFamily::UnipotentL => DenseMatrix::from_fn(field, spec.order, |i, j| {
            QuadScalar::from_rational(field, Rational::from_integer(binomial(i, j)))
        }),
        MatrixFamily::UnipotentU => DenseMatrix::from_fn(field, spec.order, |i, j| {
            QuadScalar::from_rational(field, Rational::from_integer(binomial(j, i)))
        }),
        MatrixFamily::FactorL { a, b, r } => build_factor_l(a, b, r, n)?,
        MatrixFamily::FactorH { a, b, r } => build_factor_h(a, b, r, n)?,
    };
    apply_modifiers(&mut matrix, &spec.modifiers)?;
    Ok(matrix)
}

fn border_sequences(
    field: FieldTag,
    alpha: &SequenceSpec,
    beta: &SequenceSpec,
    n: usize,
) -> Result<(Vec<QuadScalar>, Vec<QuadScalar>)> {
    let col = crate::sequence::materialize(alpha, n)?;
    let row = crate::sequence::materialize(beta, n)?;
    for w in [&col, &row] {
        if w.field() != field {
            return Err(Error::FieldMismatch {
                left: field.d(),
                right: w.field().d(),
            });
        }
    }
    if col.get(0) != row.get(0) {
        return Err(Error::GammaMismatch {
            alpha0: col.get(0).to_string(),
            beta0: row.get(0).to_string(),
        });
    }
    Ok((col.terms().to_vec(), row.terms().to_vec()))
}

fn build_bordered(
    field: FieldTag,
    order: usize,
    col: &[QuadScalar],
    row: &[QuadScalar],
    interior: impl Fn(&[Vec<QuadScalar>], usize, usize) -> QuadScalar,
) -> DenseMatrix {
    let mut grid: Vec<Vec<QuadScalar>> = vec![row.to_vec()];
    for i in 1..order {
        let mut r = Vec::with_capacity(order);
        r.push(col[i].clone());
        grid.push(r);
        for j in 1..order {
            let value = interior(&grid, i, j);
            grid[i].push(value);
        }
    }
    DenseMatrix::from_fn(field, order, |i, j| grid[i][j].clone())
}

fn require_rational_field(field: FieldTag) -> Result<()> {
    if !field.is_rational() {
        return Err(Error::BadSpec(
            "bespoke families are defined over plain rationals (d = 0)".into(),
        ));
    }
    Ok(())
}

fn int(field: FieldTag, v: i64) -> QuadScalar {
    QuadScalar::from_integer(field, v)
}

fn build_bespoke_a(field: FieldTag, order: usize) -> Result<DenseMatrix> {
    require_rational_field(field)?;
    let mut grid = vec![vec![QuadScalar::zero(field); order]; order];
    for i in 0..order {
        for j in 0..order {
            grid[i][j] = if i == 0 || j == 0 {
                QuadScalar::one(field)
            } else {
                let drift = int(field, i as i64 - j as i64);
                &grid[i][j - 1] + &grid[i - 1][j] + drift
            };
        }
    }
    DenseMatrix::from_rows(field, grid)
}

fn build_bespoke_b(field: FieldTag, order: usize) -> Result<DenseMatrix> {
    require_rational_field(field)?;
    let mut grid = vec![vec![QuadScalar::zero(field); order]; order];
    for i in 0..order {
        for j in 0..order {
            grid[i][j] = if i == 0 {
                int(field, j as i64 + 2)
            } else if j == 0 {
                let i = i as i64;
                grid[i as usize - 1][0].mul_int(&BigInt::from(4)) + int(field, i * i - 7 * i - 5)
            } else {
                let drift = int(field, -2 * (i as i64 + j as i64));
                &grid[i][j - 1] + &grid[i - 1][j] + drift
            };
        }
    }
    DenseMatrix::from_rows(field, grid)
}

fn build_bespoke_c(field: FieldTag, order: usize) -> Result<DenseMatrix> {
    require_rational_field(field)?;
    let mut grid = vec![vec![QuadScalar::zero(field); order]; order];
    for i in 0..order {
        for j in 0..order {
            grid[i][j] = if i == 0 && j <= 1 {
                int(field, 2 - j as i64)
            } else if i == 0 {
                grid[0][j - 2].mul_int(&BigInt::from(2)) - &grid[0][j - 1]
            } else if j == 0 {
                // 3 C(i-1, 0) + 5(3^(i-1) - 2i - 1)/2; the division is exact,
                // which the integrality guard below re-checks.
                let power = BigInt::from(3).pow(i as u32 - 1);
                let term = Rational::new(
                    BigInt::from(5) * (power - BigInt::from(2 * i as i64) - BigInt::one()),
                    BigInt::from(2),
                );
                let entry = grid[i - 1][0].mul_int(&BigInt::from(3))
                    + QuadScalar::from_rational(field, term);
                if !entry.is_integer() {
                    return Err(Error::NonIntegerEntry { i, j });
                }
                entry
            } else {
                let drift = int(field, -2 * i as i64);
                &grid[i - 1][j - 1] + &grid[i - 1][j] + drift
            };
        }
    }
    DenseMatrix::from_rows(field, grid)
}

/// First column the positive squares, the rest the upper-triangular
/// binomial pattern C(j, i) (which makes row 0 all ones).
fn build_bespoke_d(field: FieldTag, order: usize) -> Result<DenseMatrix> {
    require_rational_field(field)?;
    Ok(DenseMatrix::from_fn(field, order, |i, j| {
        if j == 0 {
            let side = i as i64 + 1;
            int(field, side * side)
        } else {
            QuadScalar::from_rational(field, Rational::from_integer(binomial(j, i)))
        }
    }))
}

/// Unit lower-triangular factor: column 0 carries (-1)^i G*(i-1), column 1
/// carries (-1)^(i+1) G*(i), and later columns repeat column 1 shifted down,
/// where G* is the (0, 1, r, 1) family extended by G*(-1) = 1.
pub fn build_factor_l(
    a: &QuadScalar,
    b: &QuadScalar,
    r: &QuadScalar,
    n: usize,
) -> Result<DenseMatrix> {
    let field = common_field(a, b, r)?;
    let barred = GibonacciParams::barred(r.clone());
    // offset by one so index 0 holds G*(-1) = 1
    let mut bar = vec![QuadScalar::one(field)];
    bar.extend(gibonacci_window(&barred, n.max(1)));
    let entry = |i: usize, j: usize| -> QuadScalar {
        let value = if j == 0 {
            bar[i].clone()
        } else if i + 1 >= j {
            bar[i + 2 - j].clone()
        } else {
            return QuadScalar::zero(field);
        };
        if (i + j) % 2 == 1 {
            -value
        } else {
            value
        }
    };
    Ok(DenseMatrix::from_fn(field, n + 1, entry))
}

/// Upper Hessenberg factor: rows 0 and 1 carry the G(a, b, r, 1) terms,
/// the subdiagonal below row 1 is the constant r*a - 2b.
pub fn build_factor_h(
    a: &QuadScalar,
    b: &QuadScalar,
    r: &QuadScalar,
    n: usize,
) -> Result<DenseMatrix> {
    let field = common_field(a, b, r)?;
    let params = GibonacciParams::new(a.clone(), b.clone(), r.clone(), QuadScalar::one(field))?;
    let g = gibonacci_window(&params, n.max(1));
    let subdiagonal = r * a - QuadScalar::from_integer(field, 2) * b;
    Ok(DenseMatrix::from_fn(field, n + 1, |i, j| {
        if i <= 1 {
            if j == 0 {
                if i == 0 {
                    g[0].clone()
                } else {
                    -&g[1]
                }
            } else if j >= i {
                g[j - i].clone()
            } else {
                QuadScalar::zero(field)
            }
        } else if i == j + 1 {
            subdiagonal.clone()
        } else {
            QuadScalar::zero(field)
        }
    }))
}

fn common_field(a: &QuadScalar, b: &QuadScalar, r: &QuadScalar) -> Result<FieldTag> {
    let field = a.field();
    for s in [b, r] {
        if s.field() != field {
            return Err(Error::FieldMismatch {
                left: field.d(),
                right: s.field().d(),
            });
        }
    }
    Ok(field)
}

fn apply_modifiers(matrix: &mut DenseMatrix, modifiers: &[Modifier]) -> Result<()> {
    for m in modifiers {
        if m.i >= matrix.order || m.j >= matrix.order {
            return Err(Error::IndexOutOfRange {
                i: m.i,
                j: m.j,
                order: matrix.order,
            });
        }
        if m.delta.field() != matrix.field {
            return Err(Error::FieldMismatch {
                left: matrix.field.d(),
                right: m.delta.field().d(),
            });
        }
        let idx = m.i * matrix.order + m.j;
        matrix.entries[idx] = &matrix.entries[idx] + &m.delta;
    }
    Ok(())
}

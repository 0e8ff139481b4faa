//! Structural checks: equimodularity of matrix families, the L*H Toeplitz
//! factorization, recurrence identities of second-order families, and a
//! brute-force matcher that names a minor sequence when it coincides with a
//! scaled/shifted Fibonacci, Lucas, Pell, or Jacobsthal subsequence.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::{build, build_factor_h, build_factor_l, MatrixFamily, MatrixSpec};
use crate::minors::leading_minors;
use crate::scalar::{QuadScalar, Rational};
use crate::sequence::{gibonacci_window, materialize, GibonacciParams, SequenceSpec};

/// First place two minor sequences disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    /// Minor index at which the sequences part ways.
    pub order: usize,
    /// Indices into the compared spec list.
    pub left_spec: usize,
    pub right_spec: usize,
    pub left_value: QuadScalar,
    pub right_value: QuadScalar,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "minor {} differs: spec {} gives {} but spec {} gives {}",
            self.order, self.left_spec, self.left_value, self.right_spec, self.right_value
        )
    }
}

/// Outcome of comparing the leading minors of several matrix specs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquimodularReport {
    pub specs: Vec<MatrixSpec>,
    pub upto: usize,
    pub verdict: bool,
    pub first_divergence: Option<Divergence>,
    /// The shared minor sequence when the verdict is true.
    pub common_minors: Option<Vec<QuadScalar>>,
}

/// Compare the leading principal minors of two or more specs through index
/// `upto`, reporting the first divergence with witnesses.
pub fn check_equimodular(specs: &[MatrixSpec], upto: usize) -> Result<EquimodularReport> {
    if specs.len() < 2 {
        return Err(Error::BadSpec(
            "equimodularity needs at least two specs".into(),
        ));
    }
    let field = specs[0].field;
    for s in &specs[1..] {
        if s.field != field {
            return Err(Error::FieldMismatch {
                left: field.d(),
                right: s.field.d(),
            });
        }
    }
    let minor_lists: Vec<Vec<QuadScalar>> = specs
        .iter()
        .map(|s| {
            Ok(leading_minors(&build(&s.at_order(upto + 1))?)
                .values()
                .to_vec())
        })
        .collect::<Result<_>>()?;
    for k in 0..=upto {
        for (idx, minors) in minor_lists.iter().enumerate().skip(1) {
            if minors[k] != minor_lists[0][k] {
                return Ok(EquimodularReport {
                    specs: specs.to_vec(),
                    upto,
                    verdict: false,
                    first_divergence: Some(Divergence {
                        order: k,
                        left_spec: 0,
                        right_spec: idx,
                        left_value: minor_lists[0][k].clone(),
                        right_value: minors[k].clone(),
                    }),
                    common_minors: None,
                });
            }
        }
    }
    Ok(EquimodularReport {
        specs: specs.to_vec(),
        upto,
        verdict: true,
        first_divergence: None,
        common_minors: Some(minor_lists.into_iter().next().unwrap()),
    })
}

/// The six matrices built from a sequence pair with a common first term:
/// both Toeplitz orders, both Pascal triangles of the transformed pair, and
/// both 7-matrices mixing a transformed column with an untransformed row.
pub fn six_family_specs(
    alpha: &SequenceSpec,
    beta: &SequenceSpec,
    order: usize,
) -> Result<Vec<MatrixSpec>> {
    let field = alpha.field()?;
    if beta.field()? != field {
        return Err(Error::FieldMismatch {
            left: field.d(),
            right: beta.field()?.d(),
        });
    }
    let alpha0 = materialize(alpha, 0)?.get(0).clone();
    let beta0 = materialize(beta, 0)?.get(0).clone();
    if alpha0 != beta0 {
        return Err(Error::GammaMismatch {
            alpha0: alpha0.to_string(),
            beta0: beta0.to_string(),
        });
    }
    let ba = SequenceSpec::binomial(alpha.clone());
    let bb = SequenceSpec::binomial(beta.clone());
    let families = vec![
        MatrixFamily::Toeplitz {
            alpha: alpha.clone(),
            beta: beta.clone(),
        },
        MatrixFamily::Toeplitz {
            alpha: beta.clone(),
            beta: alpha.clone(),
        },
        MatrixFamily::Pascal {
            alpha: ba.clone(),
            beta: bb.clone(),
        },
        MatrixFamily::Pascal {
            alpha: bb.clone(),
            beta: ba.clone(),
        },
        MatrixFamily::Seven {
            alpha: ba,
            beta: beta.clone(),
        },
        MatrixFamily::Seven {
            alpha: bb,
            beta: alpha.clone(),
        },
    ];
    Ok(families
        .into_iter()
        .map(|family| MatrixSpec::new(field, order, family))
        .collect())
}

/// Equimodularity of the six-matrix family of a sequence pair.
pub fn check_six_family(
    alpha: &SequenceSpec,
    beta: &SequenceSpec,
    upto: usize,
) -> Result<EquimodularReport> {
    let specs = six_family_specs(alpha, beta, upto + 1)?;
    check_equimodular(&specs, upto)
}

/// Entrywise check that the Toeplitz matrix of a G(a, b, r, 1) window and
/// its alternating companion equals the product of its unit
/// lower-triangular and upper Hessenberg factors.
pub fn verify_factorization(
    a: &QuadScalar,
    b: &QuadScalar,
    r: &QuadScalar,
    n: usize,
) -> Result<bool> {
    let field = a.field();
    let params = GibonacciParams::new(a.clone(), b.clone(), r.clone(), QuadScalar::one(field))?;
    let g = SequenceSpec::gibonacci(params);
    let toeplitz = build(&MatrixSpec::new(
        field,
        n + 1,
        MatrixFamily::Toeplitz {
            alpha: SequenceSpec::alternate(g.clone()),
            beta: g,
        },
    ))?;
    let lower = build_factor_l(a, b, r, n)?;
    let hessenberg = build_factor_h(a, b, r, n)?;
    let product = lower.matmul(&hessenberg)?;
    Ok(product == toeplitz)
}

/// Addition and Cassini/Simpson style identities of the (0, 1, r, 1)
/// family, evaluated exactly at one index pair.
pub fn verify_gibonacci_identities(r: &QuadScalar, m: usize, n: usize) -> bool {
    let field = r.field();
    let barred = GibonacciParams::barred(r.clone());
    // offset by one so bar[0] is the index -1 value
    let mut bar = vec![QuadScalar::one(field)];
    bar.extend(gibonacci_window(&barred, m + n + 1));
    let at = |idx: usize| &bar[idx]; // at(k) = value at index k - 1
    let addition = at(n + m + 1) == &(at(n + 1) * at(m) + at(n + 2) * at(m + 1));
    let sign = if m.is_multiple_of(2) {
        QuadScalar::one(field)
    } else {
        -QuadScalar::one(field)
    };
    let cassini = (at(m + 2) * at(m) - at(m + 1) * at(m + 1)) == sign;
    addition && cassini
}

/// The four named second-order families the matcher searches over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    Fibonacci,
    Lucas,
    Pell,
    Jacobsthal,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 4] = [
        NamedFamily::Fibonacci,
        NamedFamily::Lucas,
        NamedFamily::Pell,
        NamedFamily::Jacobsthal,
    ];

    pub fn params(&self) -> GibonacciParams {
        match self {
            NamedFamily::Fibonacci => GibonacciParams::fibonacci(),
            NamedFamily::Lucas => GibonacciParams::lucas(),
            NamedFamily::Pell => GibonacciParams::pell(),
            NamedFamily::Jacobsthal => GibonacciParams::jacobsthal(),
        }
    }

    pub fn letter(&self) -> char {
        match self {
            NamedFamily::Fibonacci => 'F',
            NamedFamily::Lucas => 'L',
            NamedFamily::Pell => 'P',
            NamedFamily::Jacobsthal => 'J',
        }
    }
}

/// One way a window matches a named family: sign * rho^max(n-1, 0) *
/// X(sigma n + tau).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceMatch {
    pub family: NamedFamily,
    pub negated: bool,
    pub rho: Rational,
    pub sigma: usize,
    pub tau: i64,
}

impl fmt::Display for SequenceMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-")?;
        }
        if !self.rho.is_one() {
            write!(f, "({})^(n-1)*", self.rho)?;
        }
        write!(f, "{}[", self.family.letter())?;
        match self.sigma {
            1 => write!(f, "n")?,
            s => write!(f, "{s}n")?,
        }
        match self.tau.cmp(&0) {
            std::cmp::Ordering::Greater => write!(f, "+{}", self.tau)?,
            std::cmp::Ordering::Less => write!(f, "{}", self.tau)?,
            std::cmp::Ordering::Equal => {}
        }
        write!(f, "]")
    }
}

// Search grid for the matcher. Bounded and documented so results are
// reproducible; the matcher reports every hit and never claims uniqueness.
const RHO_MAX_NUMERATOR: i64 = 9;
const RHO_MAX_DENOMINATOR: i64 = 3;
const TAU_BOUND: i64 = 4;
/// Indices below this are reached through the exact backward extension of
/// the recurrence.
const BACKWARD_EXTENSION: i64 = TAU_BOUND + 1;

/// Test a window of minors against scaled/shifted named subsequences.
/// Windows shorter than four terms or containing irrational values match
/// nothing.
pub fn identify_minor_sequence(values: &[QuadScalar]) -> Vec<SequenceMatch> {
    if values.len() < 4 {
        return Vec::new();
    }
    if !values.iter().all(|v| v.is_rational_value()) {
        return Vec::new();
    }
    let window: Vec<Rational> = values.iter().map(|v| v.rational_part().clone()).collect();
    let len = window.len() as i64;
    let max_index = 2 * (len - 1) + TAU_BOUND;

    let mut matches = Vec::new();
    for family in NamedFamily::ALL {
        let table = extended_family_table(&family, max_index);
        let value_at = |idx: i64| -> &Rational { &table[(idx + BACKWARD_EXTENSION) as usize] };
        for sigma in [1i64, 2] {
            for tau in -TAU_BOUND..=TAU_BOUND {
                for rho in rho_grid() {
                    for negated in [false, true] {
                        let mut rho_power = Rational::one();
                        let mut all_match = true;
                        for (n, actual) in window.iter().enumerate() {
                            let n = n as i64;
                            let mut expected = &rho_power * value_at(sigma * n + tau);
                            if negated {
                                expected = -expected;
                            }
                            if &expected != actual {
                                all_match = false;
                                break;
                            }
                            if n >= 1 {
                                rho_power *= &rho;
                            }
                        }
                        if all_match {
                            matches.push(SequenceMatch {
                                family,
                                negated,
                                rho: rho.clone(),
                                sigma: sigma as usize,
                                tau,
                            });
                        }
                    }
                }
            }
        }
    }
    matches
}

fn rho_grid() -> Vec<Rational> {
    let mut grid = Vec::new();
    for den in 1..=RHO_MAX_DENOMINATOR {
        for num in 1..=RHO_MAX_NUMERATOR {
            if num_integer::gcd(num, den) == 1 {
                grid.push(Rational::new(num.into(), den.into()));
            }
        }
    }
    grid
}

/// Family values from index -BACKWARD_EXTENSION through max_index, the
/// negative part obtained by running the recurrence backwards exactly.
fn extended_family_table(family: &NamedFamily, max_index: i64) -> Vec<Rational> {
    let params = family.params();
    let forward = gibonacci_window(&params, max_index.max(1) as usize);
    let r = params.r().rational_part().clone();
    let s = params.s().rational_part().clone();
    let x = |k: usize| forward[k].rational_part().clone();
    let mut backward = Vec::new(); // backward[j] = value at index -(j + 1)
    let mut hi = x(1);
    let mut mid = x(0);
    for _ in 0..BACKWARD_EXTENSION {
        let low = (&hi - &r * &mid) / &s;
        backward.push(low.clone());
        hi = mid;
        mid = low;
    }
    let mut table: Vec<Rational> = backward.into_iter().rev().collect();
    table.extend((0..=max_index.max(1) as usize).map(x));
    table
}

//! Univariate min-plus polynomials viewed as piecewise-linear functions.
//!
//! A polynomial of degree `n` is stored as `c_0, …, c_n`, where `c_j` is the
//! coefficient of `x^{n-j}`; as a function it is
//! `p(x) = min_j (c_j + (n - j)·x)`. Two polynomials are equivalent when they
//! define the same function, which happens exactly when their coefficient
//! points `(j, c_j)` have the same lower convex hull.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{format_rational, rational_from_usize, serialize_rational, MinPlus, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolynomialFile", into = "PolynomialFile")]
pub struct MinPlusPolynomial {
    coeffs: Vec<MinPlus>,
}

/// On-disk form: `{"degree": n, "coeffs": [c_0, …, c_n]}`.
#[derive(Serialize, Deserialize)]
struct PolynomialFile {
    degree: usize,
    coeffs: Vec<MinPlus>,
}

impl TryFrom<PolynomialFile> for MinPlusPolynomial {
    type Error = String;

    fn try_from(file: PolynomialFile) -> std::result::Result<Self, String> {
        if file.coeffs.len() != file.degree + 1 {
            return Err(format!(
                "degree {} needs {} coefficients, found {}",
                file.degree,
                file.degree + 1,
                file.coeffs.len()
            ));
        }
        Ok(MinPlusPolynomial {
            coeffs: file.coeffs,
        })
    }
}

impl From<MinPlusPolynomial> for PolynomialFile {
    fn from(p: MinPlusPolynomial) -> Self {
        PolynomialFile {
            degree: p.degree(),
            coeffs: p.coeffs,
        }
    }
}

impl MinPlusPolynomial {
    pub fn new(coeffs: Vec<MinPlus>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        Ok(MinPlusPolynomial { coeffs })
    }

    /// `x^n ⊕ c_1⊗x^{n-1} ⊕ ⋯ ⊕ c_n` from the lower coefficients `c_1..c_n`.
    pub fn monic(lower: impl IntoIterator<Item = MinPlus>) -> Self {
        let coeffs = std::iter::once(MinPlus::unit()).chain(lower).collect();
        MinPlusPolynomial { coeffs }
    }

    /// `x^n`.
    pub fn x_power(n: usize) -> Self {
        Self::monic(std::iter::repeat_n(MinPlus::Epsilon, n))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MinPlus] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == MinPlus::unit()
    }

    fn require_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NotMonic(self.coeffs[0].to_string()))
        }
    }

    /// `min_j (c_j + (n - j)·x)`.
    pub fn evaluate(&self, x: &MinPlus) -> MinPlus {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .fold(MinPlus::Epsilon, |acc, (j, c)| acc.oplus(&c.otimes(&x.power(n - j))))
    }

    /// The equivalent polynomial whose coefficients lie on the lower convex
    /// hull of the points `(j, c_j)`, so that it splits into linear factors.
    ///
    /// Walks the hull from the leading coefficient: from the current pivot
    /// pick the smallest slope to any later finite coefficient (the farthest
    /// one on ties), fill the skipped coefficients by linear interpolation
    /// and move the pivot. Trailing `ε` coefficients are kept and become the
    /// `x^r` factor.
    pub fn canonicalize(&self) -> Result<Self> {
        self.require_monic()?;
        Ok(MinPlusPolynomial {
            coeffs: lower_hull(&self.coeffs),
        })
    }

    /// True when both polynomials have the same degree and define the same
    /// function.
    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.degree() == other.degree() && lower_hull(&self.coeffs) == lower_hull(&other.coeffs)
    }

    /// Splits a monic polynomial into `(x ⊕ p_1)^{m_1} ⊗ ⋯ ⊗ x^r`.
    pub fn factorize(&self) -> Result<Factorization> {
        let canonical = self.canonicalize()?;
        let hull = HullShape::of(&canonical.coeffs);
        Ok(Factorization {
            factors: hull.roots,
            xpower: self.degree() - hull.last,
        })
    }

    /// Smallest root, `ε` when the polynomial is `x^n`.
    pub fn min_root(&self) -> Result<MinPlus> {
        self.require_monic()?;
        Ok(HullShape::of(&lower_hull(&self.coeffs))
            .roots
            .first()
            .map_or(MinPlus::Epsilon, |(r, _)| MinPlus::Finite(r.clone())))
    }

    /// Corners of the graph of the function, left to right.
    pub fn breakpoints(&self) -> Vec<Breakpoint> {
        let hull = lower_hull(&self.coeffs);
        let shape = HullShape::of(&hull);
        let Some(first) = shape.first else {
            return Vec::new();
        };
        let mut slope = self.degree() - first;
        shape
            .roots
            .into_iter()
            .map(|(x, multiplicity)| {
                let y = self
                    .evaluate(&MinPlus::Finite(x.clone()))
                    .into_finite()
                    .expect("finite at a root");
                let slope_left = slope;
                slope -= multiplicity;
                Breakpoint {
                    x,
                    y,
                    slope_left,
                    slope_right: slope,
                }
            })
            .collect()
    }

    /// Breakpoints plus one point on each outer ray, enough to draw the
    /// whole graph. Empty when the polynomial is identically `ε`.
    pub fn plot_points(&self) -> Vec<(Rational, Rational)> {
        let breaks = self.breakpoints();
        let one = Rational::from_integer(1.into());
        let (left, right) = match (breaks.first(), breaks.last()) {
            (Some(a), Some(b)) => (&a.x - &one, &b.x + &one),
            _ => (-one.clone(), one),
        };
        let at = |x: Rational| {
            self.evaluate(&MinPlus::Finite(x.clone()))
                .into_finite()
                .map(|y| (x, y))
        };
        let Some(first) = at(left) else {
            return Vec::new();
        };
        let mut points = vec![first];
        points.extend(breaks.into_iter().map(|b| (b.x, b.y)));
        points.extend(at(right));
        points
    }
}

/// Points `(j, c_j)` on the lower hull, with skipped coefficients filled in
/// by linear interpolation. Indices before the first or after the last finite
/// coefficient stay `ε`.
fn lower_hull(coeffs: &[MinPlus]) -> Vec<MinPlus> {
    let mut out = vec![MinPlus::Epsilon; coeffs.len()];
    let Some(mut pivot) = coeffs.iter().position(MinPlus::is_finite) else {
        return out;
    };
    out[pivot] = coeffs[pivot].clone();
    loop {
        let base = coeffs[pivot].finite().expect("pivot is finite");
        let mut best: Option<(Rational, usize)> = None;
        for (k, c) in coeffs.iter().enumerate().skip(pivot + 1) {
            let Some(c) = c.finite() else { continue };
            let slope = (c - base) / rational_from_usize(k - pivot);
            // `<=` keeps the farthest index among equal slopes.
            if best.as_ref().is_none_or(|(s, _)| slope <= *s) {
                best = Some((slope, k));
            }
        }
        let Some((slope, next)) = best else {
            return out;
        };
        for (offset, l) in (pivot + 1..next).enumerate() {
            out[l] = MinPlus::Finite(base + &slope * rational_from_usize(offset + 1));
        }
        out[next] = coeffs[next].clone();
        pivot = next;
    }
}

/// Root data read off hull coefficients.
struct HullShape {
    first: Option<usize>,
    last: usize,
    roots: Vec<(Rational, usize)>,
}

impl HullShape {
    fn of(hull: &[MinPlus]) -> Self {
        let first = hull.iter().position(MinPlus::is_finite);
        let mut last = first.unwrap_or(0);
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        if let Some(first) = first {
            for j in first + 1..hull.len() {
                let (Some(prev), Some(cur)) = (hull[j - 1].finite(), hull[j].finite()) else {
                    break;
                };
                last = j;
                let root = cur - prev;
                match roots.last_mut() {
                    Some((r, m)) if *r == root => *m += 1,
                    _ => roots.push((root, 1)),
                }
            }
        }
        HullShape { first, last, roots }
    }
}

/// A corner of the graph of a polynomial function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Breakpoint {
    #[serde(serialize_with = "serialize_rational")]
    pub x: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub y: Rational,
    pub slope_left: usize,
    pub slope_right: usize,
}

/// `(x ⊕ p_1)^{m_1} ⊗ ⋯ ⊗ (x ⊕ p_k)^{m_k} ⊗ x^r` with `p_1 < ⋯ < p_k`.
///
/// Serializes as `{"factors": [{"root", "multiplicity"}], "xpower"}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Rational, usize)>,
    xpower: usize,
}

impl Factorization {
    /// Sorts and merges the given `(root, multiplicity)` pairs; zero
    /// multiplicities are dropped.
    pub fn new(factors: impl IntoIterator<Item = (Rational, usize)>, xpower: usize) -> Self {
        let mut sorted: Vec<(Rational, usize)> =
            factors.into_iter().filter(|(_, m)| *m > 0).collect();
        sorted.sort();
        let mut merged: Vec<(Rational, usize)> = Vec::with_capacity(sorted.len());
        for (root, m) in sorted {
            match merged.last_mut() {
                Some((r, acc)) if *r == root => *acc += m,
                _ => merged.push((root, m)),
            }
        }
        Factorization {
            factors: merged,
            xpower,
        }
    }

    pub fn factors(&self) -> &[(Rational, usize)] {
        &self.factors
    }

    pub fn xpower(&self) -> usize {
        self.xpower
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum::<usize>() + self.xpower
    }

    pub fn distinct_roots(&self) -> Vec<Rational> {
        self.factors.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn min_root(&self) -> MinPlus {
        self.factors
            .first()
            .map_or(MinPlus::Epsilon, |(r, _)| MinPlus::Finite(r.clone()))
    }

    /// Multiplies the factors out. The coefficient of `x^{n-j}` is the sum of
    /// the `j` smallest roots (counted with multiplicity), or `ε` once the
    /// roots run out.
    pub fn expand(&self) -> MinPlusPolynomial {
        let roots = self
            .factors
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r, *m));
        let mut acc = Rational::from_integer(0.into());
        let mut lower: Vec<MinPlus> = roots
            .map(|r| {
                acc += r;
                MinPlus::Finite(acc.clone())
            })
            .collect();
        lower.extend(std::iter::repeat_n(MinPlus::Epsilon, self.xpower));
        MinPlusPolynomial::monic(lower)
    }
}

impl Serialize for Factorization {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Factor<'a> {
            #[serde(serialize_with = "serialize_rational")]
            root: &'a Rational,
            multiplicity: usize,
        }
        #[derive(Serialize)]
        struct Shape<'a> {
            factors: Vec<Factor<'a>>,
            xpower: usize,
        }
        Shape {
            factors: self
                .factors
                .iter()
                .map(|(root, multiplicity)| Factor {
                    root,
                    multiplicity: *multiplicity,
                })
                .collect(),
            xpower: self.xpower,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(r, m)| {
                let base = format!("(x ⊕ {})", format_rational(r));
                if *m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        match self.xpower {
            0 => {}
            1 => parts.push("x".into()),
            r => parts.push(format!("x^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊗ "))
        }
    }
}

impl fmt::Display for MinPlusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_finite())
            .map(|(j, c)| {
                let x = match n - j {
                    0 => String::new(),
                    1 => "x".to_string(),
                    k => format!("x^{k}"),
                };
                match (c == &MinPlus::unit(), x.is_empty()) {
                    (true, false) => x,
                    (_, true) => c.to_string(),
                    (false, false) => format!("{c}⊗{x}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&terms.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn poly(cs: &[Option<i64>]) -> MinPlusPolynomial {
        MinPlusPolynomial::new(
            cs.iter()
                .map(|c| c.map_or(MinPlus::Epsilon, MinPlus::from_int))
                .collect(),
        )
        .unwrap()
    }

    fn two_roots() -> MinPlusPolynomial {
        poly(&[Some(0), Some(2), Some(6)])
    }

    #[test]
    fn evaluate_examples() {
        let p = two_roots();
        assert_eq!(p.evaluate(&MinPlus::from_int(3)), MinPlus::from_int(5));
        assert_eq!(p.evaluate(&MinPlus::from_int(2)), MinPlus::from_int(4));
        assert_eq!(p.evaluate(&MinPlus::Epsilon), MinPlus::from_int(6));
        assert_eq!(
            MinPlusPolynomial::x_power(3).evaluate(&MinPlus::Epsilon),
            MinPlus::Epsilon
        );
    }

    #[test]
    fn canonicalize_tropdet_example() {
        let g = poly(&[Some(0), Some(3), Some(8), Some(6), Some(20), None, None, None]);
        assert_eq!(
            g.canonicalize().unwrap(),
            poly(&[Some(0), Some(2), Some(4), Some(6), Some(20), None, None, None])
        );
    }

    #[test]
    fn canonicalize_recursive_example() {
        let g = poly(&[Some(0), Some(3), Some(6), Some(6), Some(9), Some(12), Some(12), Some(15)]);
        assert_eq!(
            g.canonicalize().unwrap(),
            poly(&[Some(0), Some(2), Some(4), Some(6), Some(8), Some(10), Some(12), Some(15)])
        );
    }

    #[test]
    fn canonical_is_fixed_point() {
        let p = two_roots();
        assert_eq!(p.canonicalize().unwrap(), p);
    }

    #[test]
    fn canonicalize_interpolates_fractions() {
        // Hull from (0,0) to (3,1) passes through 1/3 and 2/3.
        let p = poly(&[Some(0), Some(5), None, Some(1)]);
        let c = p.canonicalize().unwrap();
        assert_eq!(
            c.coeffs(),
            &[
                MinPlus::unit(),
                MinPlus::ratio(1, 3),
                MinPlus::ratio(2, 3),
                MinPlus::from_int(1)
            ]
        );
    }

    #[test]
    fn non_monic_rejected() {
        let p = poly(&[Some(1), Some(2)]);
        assert!(matches!(p.canonicalize(), Err(Error::NotMonic(_))));
        assert!(matches!(p.factorize(), Err(Error::NotMonic(_))));
        let p = poly(&[None, Some(2)]);
        assert!(matches!(p.factorize(), Err(Error::NotMonic(_))));
    }

    #[test]
    fn equivalence_examples() {
        let p = two_roots();
        let expanded = Factorization::new([(q(2), 1), (q(4), 1)], 0).expand();
        assert!(p.is_equivalent(&expanded));
        assert!(p.is_equivalent(&p));
        assert!(poly(&[Some(0), Some(0), Some(0)]).is_equivalent(&poly(&[Some(0), Some(1), Some(0)])));
        assert!(!poly(&[Some(0), Some(0), Some(0)]).is_equivalent(&poly(&[Some(0), Some(0), Some(1)])));
        assert!(!p.is_equivalent(&poly(&[Some(0), Some(2), Some(6), None])));
    }

    #[test]
    fn factorize_examples() {
        let f = two_roots().factorize().unwrap();
        assert_eq!(f.factors(), &[(q(2), 1), (q(4), 1)]);
        assert_eq!(f.xpower(), 0);
        assert_eq!(f.to_string(), "(x ⊕ 2) ⊗ (x ⊕ 4)");

        let g = poly(&[Some(0), Some(3), Some(8), Some(6), Some(20), None, None, None]);
        let f = g.factorize().unwrap();
        assert_eq!(f.factors(), &[(q(2), 3), (q(14), 1)]);
        assert_eq!(f.xpower(), 3);
        assert_eq!(f.to_string(), "(x ⊕ 2)^3 ⊗ (x ⊕ 14) ⊗ x^3");

        let h = poly(&[Some(0), Some(3), Some(6), Some(6), Some(9), Some(12), Some(12), Some(15)]);
        let f = h.factorize().unwrap();
        assert_eq!(f.factors(), &[(q(2), 6), (q(3), 1)]);
        assert_eq!(f.xpower(), 0);

        let f = MinPlusPolynomial::x_power(4).factorize().unwrap();
        assert!(f.factors().is_empty());
        assert_eq!(f.xpower(), 4);
        assert_eq!(f.min_root(), MinPlus::Epsilon);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            Factorization::new([(q(2), 1), (q(4), 1)], 0).expand(),
            two_roots()
        );
        assert_eq!(Factorization::new([], 5).expand(), MinPlusPolynomial::x_power(5));
        assert_eq!(
            Factorization::new([(q(14), 1), (q(2), 3)], 3).expand(),
            poly(&[Some(0), Some(2), Some(4), Some(6), Some(20), None, None, None])
        );
    }

    #[test]
    fn breakpoint_examples() {
        let b = two_roots().breakpoints();
        assert_eq!(
            b,
            vec![
                Breakpoint { x: q(2), y: q(4), slope_left: 2, slope_right: 1 },
                Breakpoint { x: q(4), y: q(6), slope_left: 1, slope_right: 0 },
            ]
        );
        assert!(MinPlusPolynomial::x_power(3).breakpoints().is_empty());

        let h = poly(&[Some(0), Some(3), Some(6), Some(6), Some(9), Some(12), Some(12), Some(15)]);
        let xs: Vec<Rational> = h.breakpoints().into_iter().map(|b| b.x).collect();
        assert_eq!(xs, vec![q(2), q(3)]);
        let b = h.breakpoints();
        assert_eq!((b[0].slope_left, b[0].slope_right), (7, 1));
        assert_eq!((b[1].slope_left, b[1].slope_right), (1, 0));
    }

    #[test]
    fn plot_points_include_rays() {
        let pts = two_roots().plot_points();
        assert_eq!(
            pts,
            vec![(q(1), q(2)), (q(2), q(4)), (q(4), q(6)), (q(5), q(6))]
        );
        let pts = MinPlusPolynomial::x_power(2).plot_points();
        assert_eq!(pts, vec![(q(-1), q(-2)), (q(1), q(2))]);
    }

    #[test]
    fn display_forms() {
        let g = poly(&[Some(0), Some(3), Some(8), Some(6), Some(20), None, None, None]);
        assert_eq!(g.to_string(), "x^7 ⊕ 3⊗x^6 ⊕ 8⊗x^5 ⊕ 6⊗x^4 ⊕ 20⊗x^3");
        assert_eq!(two_roots().to_string(), "x^2 ⊕ 2⊗x ⊕ 6");
    }

    #[test]
    fn json_shape() {
        let p = two_roots();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"degree":2,"coeffs":[0,2,6]}"#);
        let back: MinPlusPolynomial = serde_json::from_str(r#"{"degree":2,"coeffs":[0,"2","inf"]}"#).unwrap();
        assert_eq!(back, poly(&[Some(0), Some(2), None]));
        assert!(serde_json::from_str::<MinPlusPolynomial>(r#"{"degree":3,"coeffs":[0,1]}"#).is_err());
    }
}

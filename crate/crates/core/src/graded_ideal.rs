//! Homogeneous ideals of `ℚ[X,Y]` compared degree by degree.
//!
//! For a homogeneous ideal `I` the degree-`t` piece `I_t` is the `ℚ`-span of
//! all `X^{t−s−j} Y^j · g` with `g` a generator of degree `s <= t`. Pieces are
//! kept as matrices in reduced row-echelon form (leftmost pivots, pivot entries
//! equal to 1), so two spans are equal exactly when their matrices are.
//!
//! Once `t` exceeds every generator degree, `I_t = S_1·I_{t−1}`, so pieces up
//! to the largest generator degree determine the ideal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial_ideal::MonIdeal;

pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::parse(format!("bad rational {s:?}"));
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// A nonzero homogeneous polynomial of degree `t`; `coeffs[i]` is the
/// coefficient of `X^{t−i} Y^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct HomPoly {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    deg: usize,
    coeffs: Vec<String>,
}

impl TryFrom<PolyJson> for HomPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        if j.coeffs.len() != j.deg + 1 {
            return Err(Error::parse(format!(
                "degree {} needs {} coefficients, got {}",
                j.deg,
                j.deg + 1,
                j.coeffs.len()
            )));
        }
        let coeffs = j.coeffs.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>()?;
        HomPoly::new(coeffs)
    }
}

impl From<HomPoly> for PolyJson {
    fn from(p: HomPoly) -> Self {
        PolyJson {
            deg: p.degree(),
            coeffs: p.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl HomPoly {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().all(Zero::is_zero) {
            return Err(Error::domain("a homogeneous generator must be nonzero"));
        }
        Ok(HomPoly { coeffs })
    }

    /// From integer coefficients, `coeffs[i]` multiplying `X^{t−i} Y^i`.
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        HomPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn monomial(x: u64, y: u64) -> Self {
        let t = (x + y) as usize;
        let mut coeffs = vec![Rational::zero(); t + 1];
        coeffs[y as usize] = Rational::one();
        HomPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        HomPoly {
            coeffs: convolve(&self.coeffs, &other.coeffs),
        }
    }

    /// Scales so that the first nonzero coefficient is 1.
    pub fn monic(&self) -> HomPoly {
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).unwrap().clone();
        HomPoly {
            coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
        }
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.degree() as u64;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = crate::monomial_ideal::ExpPair::new(t - i as u64, i as u64).to_string();
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (mag.is_one(), mono.as_str()) {
                (true, _) => write!(f, "{mono}")?,
                (false, "1") => write!(f, "{mag}")?,
                (false, _) => write!(f, "{mag} {mono}")?,
            }
        }
        Ok(())
    }
}

fn convolve(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// A matrix whose rows span a subspace of the degree-`t` forms, in reduced
/// row-echelon form.
pub type Piece = Vec<Vec<Rational>>;

/// Reduced row-echelon form with leftmost pivots scaled to 1; zero rows dropped.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> Piece {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// A homogeneous ideal of `ℚ[X,Y]` given by nonzero homogeneous generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GensJson", into = "GensJson")]
pub struct GradedIdeal2 {
    gens: Vec<HomPoly>,
}

#[derive(Serialize, Deserialize)]
struct GensJson {
    gens: Vec<HomPoly>,
}

impl TryFrom<GensJson> for GradedIdeal2 {
    type Error = Error;

    fn try_from(j: GensJson) -> Result<Self> {
        GradedIdeal2::new(j.gens)
    }
}

impl From<GradedIdeal2> for GensJson {
    fn from(i: GradedIdeal2) -> Self {
        GensJson { gens: i.gens }
    }
}

impl GradedIdeal2 {
    pub fn new(gens: Vec<HomPoly>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::domain("a graded ideal needs at least one generator"));
        }
        Ok(GradedIdeal2 { gens })
    }

    pub fn from_monomial(i: &MonIdeal) -> Self {
        GradedIdeal2 {
            gens: i.gens().iter().map(|g| HomPoly::monomial(g.x, g.y)).collect(),
        }
    }

    pub fn gens(&self) -> &[HomPoly] {
        &self.gens
    }

    pub fn max_degree(&self) -> usize {
        self.gens.iter().map(HomPoly::degree).max().unwrap()
    }

    pub fn min_degree(&self) -> usize {
        self.gens.iter().map(HomPoly::degree).min().unwrap()
    }

    /// Basis of `I_t` in reduced row-echelon form.
    pub fn graded_piece(&self, t: usize) -> Piece {
        let mut rows = Vec::new();
        for g in &self.gens {
            let s = g.degree();
            if s > t {
                continue;
            }
            for j in 0..=t - s {
                let mut row = vec![Rational::zero(); t + 1];
                for (k, c) in g.coeffs.iter().enumerate() {
                    row[k + j] = c.clone();
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Vec::new();
        }
        rref(rows)
    }

    pub fn rank(&self, t: usize) -> usize {
        self.graded_piece(t).len()
    }

    /// Generators are all pairwise products, scaled monic and deduplicated.
    pub fn product(&self, other: &GradedIdeal2) -> GradedIdeal2 {
        let mut gens: Vec<HomPoly> = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let h = f.mul(g).monic();
                if !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        GradedIdeal2 { gens }
    }

    /// Ideal equality, decided on the pieces of degree at most the largest
    /// generator degree of either side.
    pub fn equals(&self, other: &GradedIdeal2) -> bool {
        let top = self.max_degree().max(other.max_degree());
        (0..=top).all(|t| self.graded_piece(t) == other.graded_piece(t))
    }
}

/// Span of all products `f·g` with `f` a row of `a` (degree `da`) and `g` a row
/// of `b`, in reduced row-echelon form.
pub fn span_product(a: &Piece, b: &Piece) -> Piece {
    let mut rows = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            rows.push(convolve(f, g));
        }
    }
    rref(rows)
}

/// The degree-`t+1` span `S_1 · piece` of a degree-`t` piece.
pub fn times_linear_forms(piece: &Piece) -> Piece {
    let x = vec![Rational::one(), Rational::zero()];
    let y = vec![Rational::zero(), Rational::one()];
    span_product(piece, &vec![x, y])
}

/// Checks `(IJ)_{d+e} = I_d · J_e` for the min-degrees `d`, `e` of two
/// monomial ideals, both sides computed as exact row-reduced spans.
pub fn min_degree_piece_check(i: &MonIdeal, j: &MonIdeal) -> bool {
    let (d, e) = (i.mdeg() as usize, j.mdeg() as usize);
    let gi = GradedIdeal2::from_monomial(i);
    let gj = GradedIdeal2::from_monomial(j);
    let lhs = gi.product(&gj).graded_piece(d + e);
    let rhs = span_product(&gi.graded_piece(d), &gj.graded_piece(e));
    lhs == rhs
}

/// `⟨X², XY + Y²⟩` and `⟨X², XY − Y²⟩`, whose product is `𝔠₄` over `ℚ`.
pub fn c4_factors() -> (GradedIdeal2, GradedIdeal2) {
    let x2 = HomPoly::from_ints(&[1, 0, 0]).unwrap();
    let plus = HomPoly::from_ints(&[0, 1, 1]).unwrap();
    let minus = HomPoly::from_ints(&[0, 1, -1]).unwrap();
    (
        GradedIdeal2::new(vec![x2.clone(), plus]).unwrap(),
        GradedIdeal2::new(vec![x2, minus]).unwrap(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial_ideal::{build_a, build_b, build_c};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn pieces() {
        let m = GradedIdeal2::from_monomial(&build_a(1).unwrap());
        assert_eq!(m.rank(2), 3);
        let c4 = GradedIdeal2::from_monomial(&build_c(4).unwrap());
        assert_eq!(
            c4.graded_piece(4),
            vec![
                row(&[1, 0, 0, 0, 0]),
                row(&[0, 1, 0, 0, 0]),
                row(&[0, 0, 1, 0, 0]),
                row(&[0, 0, 0, 0, 1])
            ]
        );
        let (f, _) = c4_factors();
        assert_eq!(f.rank(2), 2);
        assert_eq!(f.rank(1), 0);
    }

    #[test]
    fn products() {
        let x = GradedIdeal2::new(vec![HomPoly::monomial(1, 0)]).unwrap();
        let y = GradedIdeal2::new(vec![HomPoly::monomial(0, 1)]).unwrap();
        assert_eq!(x.product(&y).gens(), &[HomPoly::monomial(1, 1)]);

        let m = GradedIdeal2::from_monomial(&build_a(1).unwrap());
        assert_eq!(m.product(&m).gens().len(), 3);

        let (f, g) = c4_factors();
        let fg = f.product(&g);
        let expect = [
            HomPoly::from_ints(&[1, 0, 0, 0, 0]).unwrap(),
            HomPoly::from_ints(&[0, 1, -1, 0, 0]).unwrap(),
            HomPoly::from_ints(&[0, 1, 1, 0, 0]).unwrap(),
            HomPoly::from_ints(&[0, 0, 1, 0, -1]).unwrap(),
        ];
        assert_eq!(fg.gens().len(), 4);
        assert!(expect.iter().all(|p| fg.gens().contains(p)));
    }

    #[test]
    fn equality() {
        let (f, g) = c4_factors();
        let c4 = GradedIdeal2::from_monomial(&build_c(4).unwrap());
        assert!(f.product(&g).equals(&c4));
        assert!(c4.equals(&c4));
        let x = GradedIdeal2::new(vec![HomPoly::monomial(1, 0)]).unwrap();
        let y = GradedIdeal2::new(vec![HomPoly::monomial(0, 1)]).unwrap();
        assert!(!x.equals(&y));
        // <X^2, XY + Y^2> squared is not c4
        assert!(!f.product(&f).equals(&c4));
    }

    #[test]
    fn min_degree_piece_examples() {
        let m = build_a(1).unwrap();
        assert!(min_degree_piece_check(&m, &m));
        assert!(min_degree_piece_check(&build_b(2).unwrap(), &build_b(3).unwrap()));
        assert!(min_degree_piece_check(&build_c(4).unwrap(), &m));
    }

    #[test]
    fn rref_is_idempotent() {
        let p = rref(vec![row(&[2, 4, 6]), row(&[1, 1, 1]), row(&[3, 5, 7])]);
        assert_eq!(p.len(), 2);
        assert_eq!(rref(p.clone()), p);
        assert_eq!(p[0][0], rat(1));
    }

    #[test]
    fn json_and_display() {
        let p = HomPoly::new(vec![rat(1), Rational::new(BigInt::from(-1), BigInt::from(2)), rat(0)]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"deg":2,"coeffs":["1","-1/2","0"]}"#);
        assert_eq!(serde_json::from_str::<HomPoly>(&json).unwrap(), p);
        assert_eq!(p.to_string(), "X^2 - 1/2 X Y");
        assert!(serde_json::from_str::<HomPoly>(r#"{"deg":1,"coeffs":["0","0"]}"#).is_err());
        assert!(serde_json::from_str::<HomPoly>(r#"{"deg":2,"coeffs":["1"]}"#).is_err());
        let (f, _) = c4_factors();
        let back: GradedIdeal2 = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}

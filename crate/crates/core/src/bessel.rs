//! Bessel polynomials, their Taylor re-expansion at `x = -1`, and the
//! short-chord distribution of perfect matchings. The coefficient of
//! `(x+1)^i` in `theta_n(x)` counts the perfect matchings on `2n` vertices
//! with exactly `i` short chords.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matching::{perfect_matchings, Matching};

/// A polynomial with exact integer coefficients, index = degree. The zero
/// polynomial stores no coefficients; otherwise the leading one is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^d` (zero past the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = c.abs();
            let one = mag == BigInt::from(1);
            match d {
                0 => write!(f, "{mag}")?,
                1 => {
                    if one {
                        write!(f, "x")?
                    } else {
                        write!(f, "{mag}x")?
                    }
                }
                _ => {
                    if one {
                        write!(f, "x^{d}")?
                    } else {
                        write!(f, "{mag}x^{d}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// The Bessel polynomial `theta_n(x)`, coefficient of `x^k` equal to
/// `(2n-k)! / (k! (n-k)! 2^{n-k})`. The division is exact; this is asserted.
pub fn bessel_theta(n: usize) -> IntPolynomial {
    let coeffs = (0..=n)
        .map(|k| {
            let numerator = factorial(2 * n - k);
            let denominator = factorial(k) * factorial(n - k) * BigInt::from(2).pow((n - k) as u32);
            let (q, r) = (&numerator / &denominator, &numerator % &denominator);
            assert!(r.is_zero(), "theta_{n} coefficient {k} must divide exactly");
            q
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Coefficients of `p(x + a)`, by Horner's scheme over `Z[x]`. With
/// `a = -1` this re-expands `p` around `x = -1`.
pub fn shift_expand(p: &IntPolynomial, a: i64) -> IntPolynomial {
    let a = BigInt::from(a);
    let mut acc: Vec<BigInt> = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs().iter().rev() {
        // acc <- acc * (x + a) + c
        acc.push(BigInt::zero());
        for i in (0..acc.len() - 1).rev() {
            let carry = acc[i].clone();
            acc[i + 1] += &carry;
            acc[i] = &acc[i] * &a;
        }
        if let Some(c0) = acc.first_mut() {
            *c0 += c;
        }
    }
    IntPolynomial::new(acc)
}

/// `h[i] = #{perfect matchings on 2n vertices with exactly i short chords}`,
/// by brute force over `M_{2n,0}`.
pub fn short_chord_distribution(n: usize) -> Vec<u64> {
    let ms = perfect_matchings(2 * n);
    ms.par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, m| {
                acc[m.short_set().len()] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// Replaces every short chord by an unmatched vertex, re-indexing. Sends a
/// perfect matching with `i` short chords to a short-chord-free matching on
/// `2n - i` vertices with `i` singletons.
pub fn collapse_short_chords(m: &Matching) -> Matching {
    let shorts = m.short_set();
    let dropped: Vec<usize> = shorts.members().map(|i| i + 1).collect(); // closers
    let kept: Vec<usize> = (1..=m.n())
        .filter(|v| dropped.binary_search(v).is_err())
        .collect();
    let pos = |v: usize| kept.binary_search(&v).expect("kept vertex") + 1;
    let chords: Vec<(usize, usize)> = m
        .chords()
        .iter()
        .filter(|&&(a, b)| b != a + 1)
        .map(|&(a, b)| (pos(a), pos(b)))
        .collect();
    let singles: Vec<usize> = m
        .singletons()
        .iter()
        .map(|&v| pos(v))
        .chain(shorts.members().map(pos))
        .collect();
    Matching::new(kept.len(), chords, singles).expect("collapse keeps a valid partition")
}

/// Inverse of [`collapse_short_chords`]: expands every singleton into a
/// short chord, shifting later vertices up.
pub fn expand_singletons(m: &Matching) -> Matching {
    let singles = m.singletons();
    let shift = |v: usize| v + singles.partition_point(|&s| s < v);
    let chords: Vec<(usize, usize)> = m
        .chords()
        .iter()
        .map(|&(a, b)| (shift(a), shift(b)))
        .chain(singles.iter().map(|&s| {
            let a = shift(s);
            (a, a + 1)
        }))
        .collect();
    Matching::new(m.n() + singles.len(), chords, []).expect("expansion keeps a valid partition")
}

/// Two-row Schur coefficients of `M_{N,f}` with respect to short chords,
/// computed through Bessel polynomials alone: `c_k` is the coefficient of
/// `(x+1)^f` in `theta_{(N+f-2k)/2}(x)`.
pub fn schur_coeffs_via_bessel(n: usize, f: usize) -> Result<Vec<BigInt>> {
    if f > n || !(n - f).is_multiple_of(2) {
        return Err(Error::SizeMismatch(format!(
            "M({n},{f}) is empty: need f <= N with N - f even"
        )));
    }
    let half = (n - f) / 2;
    Ok((0..=half)
        .map(|k| {
            let vertices = n + f - 2 * k; // even because N - f is
            let theta = bessel_theta(vertices / 2);
            shift_expand(&theta, -1).coeff(f)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::enumerate_matchings;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn theta_small() {
        assert_eq!(bessel_theta(0).coeffs(), &big(&[1])[..]);
        assert_eq!(bessel_theta(1).coeffs(), &big(&[1, 1])[..]);
        assert_eq!(bessel_theta(2).coeffs(), &big(&[3, 3, 1])[..]);
        assert_eq!(bessel_theta(3).coeffs(), &big(&[15, 15, 6, 1])[..]);
        assert_eq!(bessel_theta(3).to_string(), "x^3 + 6x^2 + 15x + 15");
    }

    #[test]
    fn shift_examples() {
        let t2 = bessel_theta(2);
        assert_eq!(shift_expand(&t2, -1).coeffs(), &big(&[1, 1, 1])[..]);
        assert_eq!(shift_expand(&t2, 0), t2);
        let t3 = bessel_theta(3);
        assert_eq!(shift_expand(&t3, -1).coeffs(), &big(&[5, 6, 3, 1])[..]);
        // Sanity: shifting back is the identity.
        assert_eq!(shift_expand(&shift_expand(&t3, -1), 1), t3);
        assert_eq!(shift_expand(&IntPolynomial::zero(), -1), IntPolynomial::zero());
    }

    #[test]
    fn shift_matches_evaluation() {
        // p(x + a) evaluated at x0 equals p(x0 + a).
        let p = IntPolynomial::new(big(&[7, -3, 0, 2, 5]));
        for a in [-3i64, -1, 0, 2] {
            let q = shift_expand(&p, a);
            for x0 in -4i64..=4 {
                assert_eq!(
                    q.eval(&BigInt::from(x0)),
                    p.eval(&BigInt::from(x0 + a)),
                    "a = {a}, x0 = {x0}"
                );
            }
        }
    }

    #[test]
    fn distribution_small() {
        assert_eq!(short_chord_distribution(0), vec![1]);
        assert_eq!(short_chord_distribution(2), vec![1, 1, 1]);
        assert_eq!(short_chord_distribution(3), vec![5, 6, 3, 1]);
    }

    #[test]
    fn distribution_matches_bessel_shift() {
        for n in 0..=6 {
            let h = short_chord_distribution(n);
            let shifted = shift_expand(&bessel_theta(n), -1);
            let want: Vec<BigInt> = h.iter().map(|&x| BigInt::from(x)).collect();
            let mut got: Vec<BigInt> = (0..=n).map(|i| shifted.coeff(i)).collect();
            while got.last().is_some_and(|c| c.is_zero()) && got.len() > want.len() {
                got.pop();
            }
            assert_eq!(got, want, "n = {n}");
            // Total is the double factorial (2n-1)!!.
            let mut dfac = 1u64;
            let mut k = 2 * n;
            while k > 1 {
                dfac *= (k - 1) as u64;
                k -= 2;
            }
            assert_eq!(h.iter().sum::<u64>(), dfac);
        }
    }

    #[test]
    fn collapse_example_and_inverse() {
        let m: Matching = "{(1,5),(2,3),(4,6)}".parse().unwrap();
        let collapsed = collapse_short_chords(&m);
        assert_eq!(collapsed, "{(1,4),(2),(3,5)}".parse().unwrap());
        assert_eq!(expand_singletons(&collapsed), m);
    }

    #[test]
    fn collapse_is_bijective_with_matching_counts() {
        // h(P_{2n}, i) = #{short-chord-free matchings on 2n - i vertices
        // with i singletons}, witnessed by the collapse map itself.
        for n in 0..=5usize {
            let h = short_chord_distribution(n);
            for (i, &count) in h.iter().enumerate() {
                let images: Vec<Matching> = perfect_matchings(2 * n)
                    .into_iter()
                    .filter(|m| m.short_set().len() == i)
                    .map(|m| {
                        let c = collapse_short_chords(&m);
                        assert!(c.short_set().is_empty(), "collapse left a short chord");
                        assert_eq!(expand_singletons(&c), m, "round trip failed");
                        c
                    })
                    .collect();
                let mut unique = images.clone();
                unique.sort_unstable();
                unique.dedup();
                assert_eq!(unique.len() as u64, count, "injectivity at n={n}, i={i}");
                let direct = enumerate_matchings(2 * n - i, i)
                    .into_iter()
                    .filter(|m| m.short_set().is_empty())
                    .count();
                assert_eq!(direct as u64, count, "independent count at n={n}, i={i}");
            }
        }
    }

    #[test]
    fn bessel_coefficients_examples() {
        assert_eq!(schur_coeffs_via_bessel(6, 0).unwrap(), big(&[5, 1, 0, 1]));
        assert_eq!(schur_coeffs_via_bessel(3, 1).unwrap(), big(&[1, 1]));
        assert_eq!(schur_coeffs_via_bessel(0, 0).unwrap(), big(&[1]));
        assert!(schur_coeffs_via_bessel(5, 0).is_err());
    }

    #[test]
    fn bessel_coefficients_match_direct_counts() {
        // c_k = #{m in M_{N-2k,f} : Short(m) empty} by enumeration.
        for n in 0..=9usize {
            let mut f = n % 2;
            while f <= n {
                let via_bessel = schur_coeffs_via_bessel(n, f).unwrap();
                for (k, c) in via_bessel.iter().enumerate() {
                    let direct = enumerate_matchings(n - 2 * k, f)
                        .into_iter()
                        .filter(|m| m.short_set().is_empty())
                        .count();
                    assert_eq!(c, &BigInt::from(direct), "N={n}, f={f}, k={k}");
                }
                f += 2;
            }
        }
    }
}

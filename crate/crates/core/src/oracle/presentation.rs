//! Graded basis counts of small monomial presentations.
//!
//! A cyclic piece is `Z[x_1, ..., x_m] / I` shifted by the degree of its
//! generator, where `I` has a Gröbner basis whose leading monomials are
//! listed in `leading`. The standard monomials (those divisible by no leading
//! monomial) form a `Z`-basis, so counting them by degree gives the graded
//! rank. Generators of degree 0 must be bounded by a pure power in `leading`.

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: &'static str,
    pub degree: usize,
}

#[derive(Debug, Clone)]
pub struct CyclicPiece {
    pub generators: Vec<Generator>,
    /// Exponent vectors of the leading monomials of the relations.
    pub leading: Vec<Vec<u32>>,
    /// Degree of the module generator.
    pub shift: usize,
}

impl CyclicPiece {
    pub fn polynomial(generators: &[(&'static str, usize)]) -> Self {
        CyclicPiece {
            generators: generators
                .iter()
                .map(|&(name, degree)| Generator { name, degree })
                .collect(),
            leading: Vec::new(),
            shift: 0,
        }
    }

    pub fn with_leading(mut self, monomial: &[(&'static str, u32)]) -> Self {
        let mut e = vec![0; self.generators.len()];
        for &(name, k) in monomial {
            let idx = self
                .generators
                .iter()
                .position(|g| g.name == name)
                .unwrap_or_else(|| panic!("unknown generator {name}"));
            e[idx] = k;
        }
        self.leading.push(e);
        self
    }

    pub fn shifted(mut self, shift: usize) -> Self {
        self.shift = shift;
        self
    }

    fn exponent_cap(&self, idx: usize) -> Option<u32> {
        self.leading
            .iter()
            .filter(|m| m.iter().enumerate().all(|(j, &e)| j == idx || e == 0))
            .map(|m| m[idx] - 1)
            .min()
    }

    fn is_standard(&self, e: &[u32]) -> bool {
        !self
            .leading
            .iter()
            .any(|m| m.iter().zip(e).all(|(&l, &x)| x >= l))
    }

    /// Standard monomials per degree, `0..=bound`.
    pub fn graded_counts(&self, bound: usize) -> Vec<u64> {
        let mut counts = vec![0u64; bound + 1];
        if self.shift > bound {
            return counts;
        }
        let caps: Vec<u32> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| match (g.degree, self.exponent_cap(i)) {
                (0, Some(c)) => c,
                (0, None) => panic!("degree-0 generator {} is unbounded", g.name),
                (d, c) => {
                    let by_degree = ((bound - self.shift) / d) as u32;
                    c.map_or(by_degree, |c| c.min(by_degree))
                }
            })
            .collect();
        let mut e = vec![0u32; self.generators.len()];
        self.walk(0, self.shift, &caps, &mut e, &mut counts);
        counts
    }

    fn walk(&self, i: usize, deg: usize, caps: &[u32], e: &mut Vec<u32>, counts: &mut [u64]) {
        if deg >= counts.len() {
            return;
        }
        if i == e.len() {
            if self.is_standard(e) {
                counts[deg] += 1;
            }
            return;
        }
        for k in 0..=caps[i] {
            let d = deg + k as usize * self.generators[i].degree;
            if d >= counts.len() {
                break;
            }
            e[i] = k;
            self.walk(i + 1, d, caps, e, counts);
        }
        e[i] = 0;
    }
}

/// A direct sum of cyclic pieces.
#[derive(Debug, Clone, Default)]
pub struct ModulePresentation(pub Vec<CyclicPiece>);

impl ModulePresentation {
    pub fn graded_counts(&self, bound: usize) -> Vec<u64> {
        let mut acc = vec![0u64; bound + 1];
        for piece in &self.0 {
            for (a, c) in acc.iter_mut().zip(piece.graded_counts(bound)) {
                *a += c;
            }
        }
        acc
    }
}

/// `Z[z, q]/(q^2 - 1)` with `z` of degree 1.
pub fn su2_semidirect_ring() -> CyclicPiece {
    CyclicPiece::polynomial(&[("z", 1), ("q", 0)]).with_leading(&[("q", 2)])
}

/// `Z[sigma1, sigma2, q]/(q^2 - 1, (q - 1) sigma1)`.
pub fn su3_semidirect_ring() -> CyclicPiece {
    CyclicPiece::polynomial(&[("sigma1", 1), ("sigma2", 2), ("q", 0)])
        .with_leading(&[("q", 2)])
        .with_leading(&[("q", 1), ("sigma1", 1)])
}

/// `K^0` and `K^1` of `SU(2) x| Z/2` acting on `SU(2)` through `gamma`:
/// `Z[z,q]/(q^2-1) + Z[z](q-1)` and `0`.
pub fn su2_gamma() -> (ModulePresentation, ModulePresentation) {
    (
        ModulePresentation(vec![
            su2_semidirect_ring(),
            CyclicPiece::polynomial(&[("z", 1)]),
        ]),
        ModulePresentation::default(),
    )
}

/// `K^0 = R(SU(3) x| Z/2) + Z[sigma1, sigma2]{z}` and
/// `K^1 = Z[z, t] + Z[sigma2](q - 1)`.
pub fn su3_gamma() -> (ModulePresentation, ModulePresentation) {
    (
        ModulePresentation(vec![
            su3_semidirect_ring(),
            CyclicPiece::polynomial(&[("sigma1", 1), ("sigma2", 2)]).shifted(1),
        ]),
        ModulePresentation(vec![
            CyclicPiece::polynomial(&[("z", 1), ("t", 1)]),
            CyclicPiece::polynomial(&[("sigma2", 2)]),
        ]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ring_counts() {
        let p = CyclicPiece::polynomial(&[("x", 1), ("y", 1)]);
        assert_eq!(p.graded_counts(4), vec![1, 2, 3, 4, 5]);
        let p = CyclicPiece::polynomial(&[("x", 1), ("y", 2)]).shifted(1);
        assert_eq!(p.graded_counts(5), vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn semidirect_rings() {
        assert_eq!(su2_semidirect_ring().graded_counts(3), vec![2, 2, 2, 2]);
        // 1, q | s1 | s1^2, s2, q s2 | s1^3, s1 s2
        assert_eq!(su3_semidirect_ring().graded_counts(3), vec![2, 1, 3, 2]);
    }

    #[test]
    fn golden_tables() {
        let (k0, k1) = su3_gamma();
        assert_eq!(k0.graded_counts(3), vec![2, 2, 4, 4]);
        assert_eq!(k1.graded_counts(3), vec![2, 2, 4, 4]);
        let (k0, k1) = su2_gamma();
        assert_eq!(k0.graded_counts(10), vec![3; 11]);
        assert_eq!(k1.graded_counts(10), vec![0; 11]);
    }

    #[test]
    #[should_panic(expected = "unbounded")]
    fn unbounded_degree_zero_generator() {
        CyclicPiece::polynomial(&[("q", 0)]).graded_counts(2);
    }
}

//! Subspaces of the symplectic space F_2^{2n}: duals, radicals, and the
//! isotropic/hyperbolic decomposition with its entanglement degree.

use crate::bits::{stack_symplectic, symplectic_inner, unstack_symplectic, Gf2Matrix, SymplecticVector};
use crate::error::{Error, Result};

/// A subspace given by a canonical (reduced row echelon) basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    n: usize,
    basis: Vec<SymplecticVector>,
}

impl Subspace {
    /// Span of arbitrary generators; reduces to a canonical independent basis.
    pub fn from_generators(n: usize, generators: &[SymplecticVector]) -> Subspace {
        let mut m = stack_symplectic(n, generators);
        let rank = m.rref().len();
        let mut basis = unstack_symplectic(&m);
        basis.truncate(rank);
        Subspace { n, basis }
    }

    pub fn zero(n: usize) -> Subspace {
        Subspace { n, basis: vec![] }
    }

    pub fn full(n: usize) -> Subspace {
        let mut gens = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut v = SymplecticVector::zero(n);
            v.set_pair(i, 1, 0);
            gens.push(v);
            let mut v = SymplecticVector::zero(n);
            v.set_pair(i, 0, 1);
            gens.push(v);
        }
        Subspace::from_generators(n, &gens)
    }

    pub fn ambient_len(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SymplecticVector] {
        &self.basis
    }

    pub fn matrix(&self) -> Gf2Matrix {
        stack_symplectic(self.n, &self.basis)
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut all = self.basis.clone();
        all.push(v.clone());
        stack_symplectic(self.n, &all).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// S^{perp s}: all vectors with zero symplectic product against S.
    pub fn symplectic_dual(&self) -> Subspace {
        // <(a|b), (a'|b')> = a.b' + b.a', so the dual is the kernel of the
        // basis matrix with halves swapped.
        let mut m = Gf2Matrix::zero(self.dim(), 2 * self.n);
        for (r, v) in self.basis.iter().enumerate() {
            for i in 0..self.n {
                m.set(r, i, v.b_bit(i));
                m.set(r, self.n + i, v.a_bit(i));
            }
        }
        let k = m.kernel();
        Subspace::from_generators(self.n, &unstack_symplectic(&k))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.n, other.n);
        let w = 2 * self.n;
        let mut m = Gf2Matrix::zero(self.dim() + other.dim(), 2 * w);
        for (r, v) in self.basis.iter().enumerate() {
            for i in 0..self.n {
                m.set(r, i, v.a_bit(i));
                m.set(r, self.n + i, v.b_bit(i));
                m.set(r, w + i, v.a_bit(i));
                m.set(r, w + self.n + i, v.b_bit(i));
            }
        }
        for (r0, v) in other.basis.iter().enumerate() {
            let r = self.dim() + r0;
            for i in 0..self.n {
                m.set(r, i, v.a_bit(i));
                m.set(r, self.n + i, v.b_bit(i));
            }
        }
        m.rref();
        let mut gens = Vec::new();
        for r in 0..m.rows() {
            let left_zero = (0..w).all(|c| m.get(r, c) == 0);
            let right_nonzero = (w..2 * w).any(|c| m.get(r, c) == 1);
            if left_zero && right_nonzero {
                let mut v = SymplecticVector::zero(self.n);
                for i in 0..self.n {
                    v.set_pair(i, m.get(r, w + i), m.get(r, w + self.n + i));
                }
                gens.push(v);
            }
        }
        Subspace::from_generators(self.n, &gens)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.n, other.n);
        let mut gens = self.basis.clone();
        gens.extend_from_slice(&other.basis);
        Subspace::from_generators(self.n, &gens)
    }

    /// S_I = S intersect S^{perp s}.
    pub fn radical(&self) -> Subspace {
        self.intersect(&self.symplectic_dual())
    }

    /// c = (dim S - dim radical(S)) / 2.
    pub fn entanglement_degree(&self) -> usize {
        let diff = self.dim() - self.radical().dim();
        assert!(diff % 2 == 0, "dim S - dim radical(S) must be even");
        diff / 2
    }

    /// Symplectic Gram-Schmidt: S = S_I (+) S_E with S_E in hyperbolic
    /// standard form. Basis vectors are scanned in deterministic order;
    /// the partner of the current vector is the first later one with
    /// symplectic product 1.
    pub fn gram_schmidt(&self) -> SgsDecomposition {
        let mut rest: Vec<SymplecticVector> = self.basis.clone();
        let mut isotropic = Vec::new();
        let mut pairs = Vec::new();
        while !rest.is_empty() {
            let e = rest.remove(0);
            let partner = rest
                .iter()
                .position(|w| symplectic_inner(&e, w).unwrap() == 1);
            match partner {
                None => isotropic.push(e),
                Some(p) => {
                    let f = rest.remove(p);
                    for u in rest.iter_mut() {
                        if symplectic_inner(u, &f).unwrap() == 1 {
                            u.xor_assign(&e);
                        }
                        if symplectic_inner(u, &e).unwrap() == 1 {
                            u.xor_assign(&f);
                        }
                    }
                    pairs.push((e, f));
                }
            }
        }
        SgsDecomposition {
            n: self.n,
            isotropic_basis: isotropic,
            hyperbolic_pairs: pairs,
        }
    }
}

/// Result of symplectic Gram-Schmidt: an isotropic basis (dimension l) plus
/// c hyperbolic pairs.
#[derive(Clone, Debug)]
pub struct SgsDecomposition {
    n: usize,
    pub isotropic_basis: Vec<SymplecticVector>,
    pub hyperbolic_pairs: Vec<(SymplecticVector, SymplecticVector)>,
}

impl SgsDecomposition {
    pub fn isotropic_dim(&self) -> usize {
        self.isotropic_basis.len()
    }

    pub fn pair_count(&self) -> usize {
        self.hyperbolic_pairs.len()
    }

    pub fn dim(&self) -> usize {
        self.isotropic_dim() + 2 * self.pair_count()
    }

    /// Span of the isotropic part.
    pub fn isotropic_span(&self) -> Subspace {
        Subspace::from_generators(self.n, &self.isotropic_basis)
    }

    /// Span of the hyperbolic pairs (the entanglement subspace).
    pub fn entanglement_span(&self) -> Subspace {
        let mut gens = Vec::new();
        for (e, f) in &self.hyperbolic_pairs {
            gens.push(e.clone());
            gens.push(f.clone());
        }
        Subspace::from_generators(self.n, &gens)
    }

    /// Span of everything.
    pub fn span(&self) -> Subspace {
        self.isotropic_span().sum(&self.entanglement_span())
    }

    /// Check the pairing and orthogonality invariants.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidArgument(msg));
        for (i, (ei, fi)) in self.hyperbolic_pairs.iter().enumerate() {
            for (j, (ej, fj)) in self.hyperbolic_pairs.iter().enumerate() {
                let delta = u8::from(i == j);
                if symplectic_inner(ei, fj)? != delta {
                    return fail(format!("<e_{i}, f_{j}> != delta"));
                }
                if symplectic_inner(ei, ej)? != 0 || symplectic_inner(fi, fj)? != 0 {
                    return fail(format!("pair vectors {i},{j} not orthogonal"));
                }
            }
        }
        for (i, v) in self.isotropic_basis.iter().enumerate() {
            for w in &self.isotropic_basis {
                if symplectic_inner(v, w)? != 0 {
                    return fail(format!("isotropic vector {i} not orthogonal"));
                }
            }
            for (e, f) in &self.hyperbolic_pairs {
                if symplectic_inner(v, e)? != 0 || symplectic_inner(v, f)? != 0 {
                    return fail(format!("isotropic vector {i} meets a pair"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SymplecticVector {
        SymplecticVector::parse(s).unwrap()
    }

    #[test]
    fn dual_of_zero_is_full() {
        let s = Subspace::zero(3);
        let d = s.symplectic_dual();
        assert_eq!(d.dim(), 6);
    }

    #[test]
    fn dual_of_single_x_at_n1() {
        let s = Subspace::from_generators(1, &[sv("1|0")]);
        let d = s.symplectic_dual();
        assert_eq!(d.dim(), 1);
        assert!(d.contains(&sv("1|0")));
    }

    #[test]
    fn dual_dimension_complement() {
        let s = Subspace::from_generators(2, &[sv("10|00"), sv("01|00")]);
        let d = s.symplectic_dual();
        assert_eq!(s.dim() + d.dim(), 4);
        assert_eq!(d.symplectic_dual(), s);
    }

    #[test]
    fn radical_of_isotropic_is_itself() {
        let s = Subspace::from_generators(2, &[sv("10|00"), sv("01|00")]);
        assert_eq!(s.radical(), s);
        assert_eq!(s.entanglement_degree(), 0);
    }

    #[test]
    fn radical_of_hyperbolic_pair_is_zero() {
        let s = Subspace::from_generators(1, &[sv("1|0"), sv("0|1")]);
        assert_eq!(s.radical().dim(), 0);
        assert_eq!(s.entanglement_degree(), 1);
    }

    #[test]
    fn radical_mixed_example() {
        let s = Subspace::from_generators(2, &[sv("10|00"), sv("00|10"), sv("01|00")]);
        let r = s.radical();
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&sv("01|00")));
    }

    #[test]
    fn sgs_totally_isotropic() {
        let s = Subspace::from_generators(2, &[sv("10|00"), sv("01|00")]);
        let d = s.gram_schmidt();
        assert_eq!(d.pair_count(), 0);
        assert_eq!(d.isotropic_dim(), 2);
        d.verify().unwrap();
        assert_eq!(d.span(), s);
    }

    #[test]
    fn sgs_single_pair() {
        let s = Subspace::from_generators(1, &[sv("1|0"), sv("0|1")]);
        let d = s.gram_schmidt();
        assert_eq!(d.pair_count(), 1);
        assert_eq!(d.isotropic_dim(), 0);
        d.verify().unwrap();
    }

    #[test]
    fn sgs_isotropic_part_spans_radical() {
        let s = Subspace::from_generators(2, &[sv("10|00"), sv("00|10"), sv("01|00")]);
        let d = s.gram_schmidt();
        assert_eq!(d.isotropic_span(), s.radical());
        assert_eq!(d.dim(), s.dim());
        d.verify().unwrap();
    }

    #[test]
    fn full_space_is_all_pairs() {
        let s = Subspace::full(3);
        assert_eq!(s.dim(), 6);
        let d = s.gram_schmidt();
        assert_eq!(d.pair_count(), 3);
        d.verify().unwrap();
    }
}

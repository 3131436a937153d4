//! Additive and linear codes over GF(4): duals, radicals, classification,
//! the radical/ACD decomposition, and exact minimum-weight enumeration.

use serde::{Deserialize, Serialize};

use crate::bits::SymplecticVector;
use crate::error::{Error, Result};
use crate::field::{hermitian_inner, Gf4, Gf4Vector};
use crate::symplectic::Subspace;

/// Default enumeration cap for [`AdditiveCode::min_weight`].
pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

/// A GF(2)-linear (additive) subgroup of GF(4)^n, stored as its symplectic
/// preimage under the isometry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdditiveCode {
    space: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyFlags {
    pub trace_self_orthogonal: bool,
    pub acd: bool,
    pub dual_containing: bool,
}

/// Outcome of a minimum-weight enumeration.
#[derive(Clone, Debug)]
pub struct WeightReport {
    pub min_weight: usize,
    pub witness: Gf4Vector,
    pub enumerated: u64,
}

impl AdditiveCode {
    pub fn from_gf4_generators(n: usize, generators: &[Gf4Vector]) -> Result<AdditiveCode> {
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch(g.len(), n));
            }
        }
        let pre: Vec<SymplecticVector> = generators.iter().map(SymplecticVector::from_gf4).collect();
        Ok(AdditiveCode {
            space: Subspace::from_generators(n, &pre),
        })
    }

    pub fn from_subspace(space: Subspace) -> AdditiveCode {
        AdditiveCode { space }
    }

    pub fn zero(n: usize) -> AdditiveCode {
        AdditiveCode {
            space: Subspace::zero(n),
        }
    }

    pub fn full(n: usize) -> AdditiveCode {
        AdditiveCode {
            space: Subspace::full(n),
        }
    }

    pub fn len(&self) -> usize {
        self.space.ambient_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// log2 of the code size.
    pub fn size_log2(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn generators(&self) -> Vec<Gf4Vector> {
        self.space.basis().iter().map(|v| v.to_gf4()).collect()
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        self.space.contains(&SymplecticVector::from_gf4(v))
    }

    pub fn is_subcode_of(&self, other: &AdditiveCode) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    /// C^{perp t}, transported through the isometry from the symplectic dual.
    pub fn trace_dual(&self) -> AdditiveCode {
        AdditiveCode {
            space: self.space.symplectic_dual(),
        }
    }

    /// R_t(C) = C intersect C^{perp t}.
    pub fn trace_radical(&self) -> AdditiveCode {
        AdditiveCode {
            space: self.space.radical(),
        }
    }

    pub fn sum(&self, other: &AdditiveCode) -> AdditiveCode {
        AdditiveCode {
            space: self.space.sum(&other.space),
        }
    }

    pub fn intersect(&self, other: &AdditiveCode) -> AdditiveCode {
        AdditiveCode {
            space: self.space.intersect(&other.space),
        }
    }

    pub fn classify(&self) -> ClassifyFlags {
        let so = self
            .space
            .basis()
            .iter()
            .all(|u| self.space.basis().iter().all(|v| {
                crate::bits::symplectic_inner(u, v).unwrap() == 0
            }));
        let radical_dim = self.space.radical().dim();
        let dual = self.trace_dual();
        ClassifyFlags {
            trace_self_orthogonal: so,
            acd: radical_dim == 0,
            dual_containing: dual.is_subcode_of(self),
        }
    }

    /// C = R_t(C) (+) C_e with C_e an ACD code, via symplectic Gram-Schmidt.
    pub fn decompose(&self) -> (AdditiveCode, AdditiveCode) {
        let d = self.space.gram_schmidt();
        (
            AdditiveCode {
                space: d.isotropic_span(),
            },
            AdditiveCode {
                space: d.entanglement_span(),
            },
        )
    }

    /// Entanglement degree c of the symplectic preimage.
    pub fn entanglement_degree(&self) -> usize {
        self.space.entanglement_degree()
    }

    /// True when the code is closed under multiplication by w, i.e. GF(4)-linear.
    pub fn is_linear(&self) -> bool {
        self.generators()
            .iter()
            .all(|g| self.contains(&g.scale(Gf4::OMEGA)))
    }

    /// Exact minimum symbol weight over `C \ exclude` (over `C \ {0}` when
    /// `exclude` is absent), by a Gray-code walk over the message space.
    pub fn min_weight(&self, exclude: Option<&AdditiveCode>, cap: u64) -> Result<WeightReport> {
        let m = self.size_log2();
        let n = self.len();
        let needed = 1u128 << m;
        if needed > u128::from(cap) {
            return Err(Error::EnumerationCap { needed, cap });
        }
        if let Some(ex) = exclude {
            if !ex.is_subcode_of(self) {
                return Err(Error::InvalidArgument(
                    "exclude set is not a subcode of the enumerated code".into(),
                ));
            }
            if ex.size_log2() == m {
                return Err(Error::EmptySearchSet);
            }
        } else if m == 0 {
            return Err(Error::EmptySearchSet);
        }

        let gens: Vec<(Vec<u64>, Vec<u64>)> = self
            .space
            .basis()
            .iter()
            .map(|v| (v.a_words().to_vec(), v.b_words().to_vec()))
            .collect();
        let words = gens.first().map_or(1, |(a, _)| a.len());

        // Echelon basis of the exclude set, for cheap membership reduction.
        let ex_rows: Vec<(usize, Vec<u64>, Vec<u64>)> = match exclude {
            None => vec![],
            Some(ex) => ex
                .space
                .basis()
                .iter()
                .map(|v| {
                    let pivot = (0..n)
                        .map(|i| (i, v.a_bit(i)))
                        .chain((0..n).map(|i| (n + i, v.b_bit(i))))
                        .find(|&(_, bit)| bit == 1)
                        .map(|(p, _)| p)
                        .expect("nonzero basis vector");
                    (pivot, v.a_words().to_vec(), v.b_words().to_vec())
                })
                .collect(),
        };
        let in_exclude = |a: &[u64], b: &[u64]| -> bool {
            if ex_rows.is_empty() {
                return false;
            }
            let mut ra = a.to_vec();
            let mut rb = b.to_vec();
            for (pivot, ea, eb) in &ex_rows {
                let bit = if *pivot < n {
                    (ra[pivot / 64] >> (pivot % 64)) & 1
                } else {
                    let p = pivot - n;
                    (rb[p / 64] >> (p % 64)) & 1
                };
                if bit == 1 {
                    for (x, y) in ra.iter_mut().zip(ea) {
                        *x ^= y;
                    }
                    for (x, y) in rb.iter_mut().zip(eb) {
                        *x ^= y;
                    }
                }
            }
            ra.iter().all(|&w| w == 0) && rb.iter().all(|&w| w == 0)
        };

        let mut cw_a = vec![0u64; words];
        let mut cw_b = vec![0u64; words];
        let mut best: usize = usize::MAX;
        let mut witness: Option<(Vec<u64>, Vec<u64>)> = None;
        let total: u64 = 1u64 << m;
        for x in 1..total {
            let idx = x.trailing_zeros() as usize;
            for (w, g) in cw_a.iter_mut().zip(&gens[idx].0) {
                *w ^= g;
            }
            for (w, g) in cw_b.iter_mut().zip(&gens[idx].1) {
                *w ^= g;
            }
            let weight: usize = cw_a
                .iter()
                .zip(&cw_b)
                .map(|(&a, &b)| (a | b).count_ones() as usize)
                .sum();
            if weight < best && !in_exclude(&cw_a, &cw_b) {
                best = weight;
                witness = Some((cw_a.clone(), cw_b.clone()));
            }
        }
        match witness {
            None => Err(Error::EmptySearchSet),
            Some((wa, wb)) => {
                let mut v = SymplecticVector::zero(n);
                for i in 0..n {
                    v.set_pair(i, ((wa[i / 64] >> (i % 64)) & 1) as u8, ((wb[i / 64] >> (i % 64)) & 1) as u8);
                }
                Ok(WeightReport {
                    min_weight: best,
                    witness: v.to_gf4(),
                    enumerated: total - 1,
                })
            }
        }
    }
}

/// A GF(4)-linear code given by a GF(4)-independent basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    n: usize,
    basis: Vec<Gf4Vector>,
}

impl LinearCode {
    pub fn from_generators(n: usize, generators: &[Gf4Vector]) -> Result<LinearCode> {
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch(g.len(), n));
            }
        }
        let mut mat: Vec<Gf4Vector> = generators.to_vec();
        let basis = gf4_rref(&mut mat);
        Ok(LinearCode { n, basis })
    }

    pub fn zero(n: usize) -> LinearCode {
        LinearCode { n, basis: vec![] }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// GF(4) dimension k.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Gf4Vector] {
        &self.basis
    }

    /// View as an additive code: m = 2k, generated by the basis and its w-multiples.
    pub fn as_additive(&self) -> AdditiveCode {
        let mut gens = Vec::with_capacity(2 * self.dim());
        for b in &self.basis {
            gens.push(b.clone());
            gens.push(b.scale(Gf4::OMEGA));
        }
        AdditiveCode::from_gf4_generators(self.n, &gens).expect("lengths agree")
    }

    /// D^{perp h}: kernel of the conjugated basis matrix over GF(4).
    pub fn hermitian_dual(&self) -> LinearCode {
        let conj_rows: Vec<Gf4Vector> = self
            .basis
            .iter()
            .map(|b| Gf4Vector::new(b.symbols().iter().map(|s| s.conj()).collect()))
            .collect();
        LinearCode {
            n: self.n,
            basis: gf4_kernel(self.n, &conj_rows),
        }
    }

    /// R_h(D) = D intersect D^{perp h}.
    pub fn hermitian_radical(&self) -> LinearCode {
        self.intersect(&self.hermitian_dual())
    }

    pub fn intersect(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(self.n, other.n);
        // Zassenhaus over GF(4).
        let width = 2 * self.n;
        let mut rows: Vec<Gf4Vector> = Vec::new();
        for v in &self.basis {
            let mut w = Gf4Vector::zero(width);
            for i in 0..self.n {
                w.set(i, v.get(i));
                w.set(self.n + i, v.get(i));
            }
            rows.push(w);
        }
        for v in &other.basis {
            let mut w = Gf4Vector::zero(width);
            for i in 0..self.n {
                w.set(i, v.get(i));
            }
            rows.push(w);
        }
        let reduced = gf4_rref(&mut rows);
        let mut gens = Vec::new();
        for row in &reduced {
            let left_zero = (0..self.n).all(|i| row.get(i).is_zero());
            if left_zero {
                let right = Gf4Vector::new((0..self.n).map(|i| row.get(self.n + i)).collect());
                if !right.is_zero() {
                    gens.push(right);
                }
            }
        }
        let mut gens_mut = gens;
        let basis = gf4_rref(&mut gens_mut);
        LinearCode { n: self.n, basis }
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        gf4_rref(&mut rows).len() == self.dim()
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.basis.iter().all(|u| {
            self.basis
                .iter()
                .all(|v| hermitian_inner(u, v).unwrap().is_zero())
        })
    }

    pub fn is_hermitian_lcd(&self) -> bool {
        self.hermitian_radical().dim() == 0
    }
}

/// Reduced row echelon form over GF(4); returns the independent basis rows.
fn gf4_rref(rows: &mut Vec<Gf4Vector>) -> Vec<Gf4Vector> {
    if rows.is_empty() {
        return vec![];
    }
    let width = rows[0].len();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].get(c).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        // normalize pivot to 1: multiply by inverse (x^-1 = x^2 for x != 0)
        let inv = rows[r].get(c).conj();
        if inv != Gf4::ONE {
            rows[r] = rows[r].scale(inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i].get(c).is_zero() {
                let factor = rows[i].get(c);
                let sub = rows[r].scale(factor);
                rows[i] = rows[i].add(&sub);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|v| !v.is_zero());
    rows.clone()
}

/// Basis of {x : M x = 0} over GF(4), for M given by rows.
fn gf4_kernel(cols: usize, rows: &[Gf4Vector]) -> Vec<Gf4Vector> {
    let mut m = rows.to_vec();
    let reduced = gf4_rref(&mut m);
    let mut pivots = Vec::new();
    for row in &reduced {
        let p = (0..cols).find(|&c| !row.get(c).is_zero()).expect("nonzero row");
        pivots.push(p);
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = Gf4Vector::zero(cols);
        v.set(f, Gf4::ONE);
        // pivot entries solve row . v = 0: v[p_i] = -reduced[i][f] = reduced[i][f]
        for (i, &p) in pivots.iter().enumerate() {
            v.set(p, reduced[i].get(f));
        }
        out.push(v);
    }
    gf4_rref(&mut out)
}

/// On-disk schema for a single code (`0/1/w/W` generator strings).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeSpec {
    pub name: String,
    pub length: usize,
    pub kind: CodeKind,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed: Option<ClaimedParams>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Additive,
    Linear,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ClaimedParams {
    pub size_log2: usize,
    pub min_distance: Option<usize>,
}

impl CodeSpec {
    pub fn parse_generators(&self) -> Result<Vec<Gf4Vector>> {
        self.generators
            .iter()
            .map(|s| {
                let v = Gf4Vector::parse(s)?;
                if v.len() != self.length {
                    return Err(Error::Parse(format!(
                        "generator '{s}' has length {} but code length is {}",
                        v.len(),
                        self.length
                    )));
                }
                Ok(v)
            })
            .collect()
    }

    pub fn to_additive(&self) -> Result<AdditiveCode> {
        let gens = self.parse_generators()?;
        let code = AdditiveCode::from_gf4_generators(self.length, &gens)?;
        if let Some(claimed) = &self.claimed {
            if code.size_log2() != claimed.size_log2 {
                return Err(Error::Catalog(format!(
                    "code '{}': claimed size_log2 {} but generators span {}",
                    self.name,
                    claimed.size_log2,
                    code.size_log2()
                )));
            }
        }
        Ok(code)
    }

    pub fn to_linear(&self) -> Result<LinearCode> {
        if self.kind != CodeKind::Linear {
            return Err(Error::NotLinear);
        }
        LinearCode::from_generators(self.length, &self.parse_generators()?)
    }

    pub fn from_additive(name: &str, code: &AdditiveCode) -> CodeSpec {
        CodeSpec {
            name: name.to_string(),
            length: code.len(),
            kind: CodeKind::Additive,
            generators: code.generators().iter().map(|g| g.to_string()).collect(),
            claimed: Some(ClaimedParams {
                size_log2: code.size_log2(),
                min_distance: None,
            }),
        }
    }

    pub fn load(path: &std::path::Path) -> Result<CodeSpec> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, gens: &[&str]) -> AdditiveCode {
        let v: Vec<Gf4Vector> = gens.iter().map(|s| Gf4Vector::parse(s).unwrap()).collect();
        AdditiveCode::from_gf4_generators(n, &v).unwrap()
    }

    #[test]
    fn dual_of_zero_is_full() {
        let c = AdditiveCode::zero(3);
        let d = c.trace_dual();
        assert_eq!(d.size_log2(), 6);
    }

    #[test]
    fn dual_dimensions() {
        let c = code(3, &["w00", "0w0"]);
        let d = c.trace_dual();
        assert_eq!(c.size_log2() + d.size_log2(), 6);
        assert_eq!(d.trace_dual(), c);
    }

    #[test]
    fn classify_zero_and_full() {
        let z = AdditiveCode::zero(2);
        let f = z.classify();
        assert!(f.trace_self_orthogonal);
        assert!(f.acd); // R_t = {0} holds literally
        assert!(!f.dual_containing);

        let full = AdditiveCode::full(2);
        let f = full.classify();
        assert!(f.dual_containing);
        assert!(f.acd);
        assert!(!f.trace_self_orthogonal);
    }

    #[test]
    fn radical_of_acd_is_zero() {
        let c = AdditiveCode::full(2);
        assert_eq!(c.trace_radical().size_log2(), 0);
        let (r, ce) = c.decompose();
        assert_eq!(r.size_log2(), 0);
        assert_eq!(ce, c);
    }

    #[test]
    fn decompose_self_orthogonal() {
        let c = code(2, &["ww"]);
        assert!(c.classify().trace_self_orthogonal);
        let (r, ce) = c.decompose();
        assert_eq!(r, c);
        assert_eq!(ce.size_log2(), 0);
    }

    #[test]
    fn decompose_direct_sum() {
        let c = code(3, &["w00", "W00", "0ww"]);
        let (r, ce) = c.decompose();
        assert_eq!(r.sum(&ce), c);
        assert_eq!(r.intersect(&ce).size_log2(), 0);
        assert!(ce.classify().acd);
        assert_eq!(r, c.trace_radical());
    }

    #[test]
    fn min_weight_simple() {
        let c = code(4, &["w0W1", "01w0"]);
        let report = c.min_weight(None, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(report.min_weight, 2);
        assert_eq!(report.enumerated, 3);
        assert!(c.contains(&report.witness));
        assert_eq!(report.witness.symbol_weight(), 2);
    }

    #[test]
    fn min_weight_empty_set() {
        let c = code(2, &["w0"]);
        assert!(matches!(
            c.min_weight(Some(&c), DEFAULT_ENUM_CAP),
            Err(Error::EmptySearchSet)
        ));
        assert!(matches!(
            AdditiveCode::zero(2).min_weight(None, DEFAULT_ENUM_CAP),
            Err(Error::EmptySearchSet)
        ));
    }

    #[test]
    fn min_weight_exclude_must_be_subcode() {
        let c = code(2, &["w0"]);
        let other = code(2, &["0w"]);
        assert!(c.min_weight(Some(&other), DEFAULT_ENUM_CAP).is_err());
    }

    #[test]
    fn min_weight_cap() {
        let c = AdditiveCode::full(3);
        assert!(matches!(
            c.min_weight(None, 16),
            Err(Error::EnumerationCap { .. })
        ));
    }

    #[test]
    fn linearity_check() {
        let lin = LinearCode::from_generators(2, &[Gf4Vector::parse("1w").unwrap()]).unwrap();
        let add = lin.as_additive();
        assert_eq!(add.size_log2(), 2 * lin.dim());
        assert!(add.is_linear());
        let not_lin = code(2, &["w0"]);
        assert!(!not_lin.is_linear());
    }

    #[test]
    fn hermitian_dual_dimensions() {
        let d = LinearCode::from_generators(4, &[Gf4Vector::parse("1w00").unwrap()]).unwrap();
        let dual = d.hermitian_dual();
        assert_eq!(d.dim() + dual.dim(), 4);
        assert_eq!(dual.hermitian_dual(), d);
        // hermitian dual viewed additively equals the trace dual
        assert_eq!(dual.as_additive(), d.as_additive().trace_dual());
    }

    #[test]
    fn hermitian_dual_of_zero() {
        let z = LinearCode::zero(3);
        assert_eq!(z.hermitian_dual().dim(), 3);
    }

    #[test]
    fn code_spec_round_trip() {
        let c = code(3, &["w01", "0wW"]);
        let spec = CodeSpec::from_additive("test", &c);
        let back = spec.to_additive().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn code_spec_claim_mismatch() {
        let spec = CodeSpec {
            name: "bad".into(),
            length: 2,
            kind: CodeKind::Additive,
            generators: vec!["w0".into()],
            claimed: Some(ClaimedParams {
                size_log2: 2,
                min_distance: None,
            }),
        };
        assert!(spec.to_additive().is_err());
    }
}

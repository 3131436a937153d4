//! Parameter derivation for stabilizer and entanglement-assisted codes,
//! protector matching, and guaranteed protector lengths.

use std::fmt;

use serde::Serialize;

use crate::code::{AdditiveCode, LinearCode};
use crate::error::{Error, Result};

/// Standard stabilizer code parameters [[n,k,d]].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QeccParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    /// Set when k = 0 and the reported d is the classical distance of the
    /// (self-dual) stabilizer itself.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub degenerate: bool,
}

impl fmt::Display for QeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{}]]", self.n, self.k, d),
            None => write!(f, "[[{},{},?]]", self.n, self.k),
        }
    }
}

/// Entanglement-assisted code parameters [[n,k,d;c]] with isotropic log-size l.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EaqeccParams {
    pub n: usize,
    pub k: usize,
    pub d_ea: Option<usize>,
    pub c: usize,
    pub l: usize,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub degenerate: bool,
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d_ea {
            Some(d) => write!(f, "[[{},{},{};{}]]", self.n, self.k, d, self.c),
            None => write!(f, "[[{},{},?;{}]]", self.n, self.k, self.c),
        }
    }
}

/// A combination code [[n,k,d;c]] + [[m,k_b,d_b]].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CombinationParams {
    pub ea: EaqeccParams,
    pub protector: QeccParams,
}

impl CombinationParams {
    pub fn matching(&self) -> MatchFlags {
        match_check(&self.ea, &self.protector)
    }
}

impl fmt::Display for CombinationParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.ea, self.protector)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchFlags {
    pub matches: bool,
    pub faithful: bool,
    pub proper: bool,
}

/// Guaranteed protector length for a given ebit count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub s: usize,
    pub m: usize,
    pub m_s: usize,
}

fn m_level(s: usize) -> usize {
    (4usize.pow(s as u32) - 1) / 3
}

/// Derive [[n, n-m, d]] from a trace self-orthogonal additive stabilizer.
pub fn qecc_params(stab: &AdditiveCode, with_distance: bool, cap: u64) -> Result<QeccParams> {
    if !stab.classify().trace_self_orthogonal {
        return Err(Error::NotSelfOrthogonal);
    }
    let n = stab.len();
    let m = stab.size_log2();
    let k = n - m;
    let mut degenerate = false;
    let d = if with_distance {
        if k == 0 {
            // dual = stabilizer, so N(S)\S is empty; report the classical
            // distance of the code itself
            degenerate = true;
            Some(stab.min_weight(None, cap)?.min_weight)
        } else {
            Some(stab.trace_dual().min_weight(Some(stab), cap)?.min_weight)
        }
    } else {
        None
    };
    Ok(QeccParams { n, k, d, degenerate })
}

/// Derive [[n, n-c-l, d_ea; c]] from an arbitrary additive EA-stabilizer.
pub fn eaqecc_params(stab: &AdditiveCode, with_distance: bool, cap: u64) -> Result<EaqeccParams> {
    let n = stab.len();
    let m = stab.size_log2();
    let c = stab.entanglement_degree();
    let l = m - 2 * c;
    let k = n - c - l;
    let mut degenerate = false;
    let d_ea = if with_distance {
        let radical = stab.trace_radical();
        let dual = stab.trace_dual();
        if dual.size_log2() == radical.size_log2() {
            degenerate = true;
            Some(stab.min_weight(None, cap)?.min_weight)
        } else {
            Some(dual.min_weight(Some(&radical), cap)?.min_weight)
        }
    } else {
        None
    };
    Ok(EaqeccParams {
        n,
        k,
        d_ea,
        c,
        l,
        degenerate,
    })
}

/// Matching flags between an EA code and a candidate protector.
pub fn match_check(ea: &EaqeccParams, b: &QeccParams) -> MatchFlags {
    let matches = b.k >= ea.c;
    MatchFlags {
        matches,
        faithful: matches && b.d.is_some_and(|d| d >= 3),
        proper: b.k == ea.c,
    }
}

/// Guaranteed [[m, c, 3]] protector length for c ebits.
pub fn protector_bound(c: usize) -> Result<BoundResult> {
    if c < 1 {
        return Err(Error::InvalidArgument("ebit count must be >= 1".into()));
    }
    // s >= 2 with M_{s-1} < c <= M_s
    let mut s = 2;
    while c > m_level(s) {
        s += 1;
    }
    let m_s = m_level(s);
    // c <= M_s - 2s is exactly where [[c+2s, c, 3]] meets the quantum Hamming
    // bound 2^{2s} >= 1 + 3(c+2s), with equality at the perfect codes
    // (c = 1, 15, 77, ...); beyond it two more stabilizer qubits are needed.
    let first_case = c + 2 * s <= m_s;
    let m = if first_case { c + 2 * s } else { c + 2 * (s + 1) };
    Ok(BoundResult { s, m, m_s })
}

/// Assemble combination parameters from an EA-stabilizer and a protector
/// stabilizer, enforcing matching.
pub fn combination_params(
    stab: &AdditiveCode,
    protector_stab: &AdditiveCode,
    with_distance: bool,
    cap: u64,
) -> Result<CombinationParams> {
    let ea = eaqecc_params(stab, with_distance, cap)?;
    let protector = qecc_params(protector_stab, with_distance, cap)?;
    if protector.k < ea.c {
        return Err(Error::MatchingViolated {
            kb: protector.k,
            c: ea.c,
        });
    }
    Ok(CombinationParams { ea, protector })
}

/// Combination parameters from GF(4)-linear codes: D on the sender side,
/// a Hermitian self-orthogonal D_b on the receiver side.
pub fn linear_combination_params(
    code: &LinearCode,
    protector_code: &LinearCode,
    with_distance: bool,
    cap: u64,
) -> Result<CombinationParams> {
    if !protector_code.is_hermitian_self_orthogonal() {
        return Err(Error::NotHermitianSelfOrthogonal);
    }
    let n = code.len();
    let u = code.dim();
    let r = code.hermitian_radical().dim();
    let c = u - r;
    let k = n - c - 2 * r;
    let m = protector_code.len();
    let v = protector_code.dim();
    let kb = m - 2 * v;
    if kb < c {
        return Err(Error::MatchingViolated { kb, c });
    }
    let mut ea = eaqecc_params(&code.as_additive(), with_distance, cap)?;
    let protector = qecc_params(&protector_code.as_additive(), with_distance, cap)?;
    debug_assert_eq!(ea.c, c);
    debug_assert_eq!(ea.k, k);
    debug_assert_eq!(protector.k, kb);
    ea.c = c;
    ea.k = k;
    Ok(CombinationParams { ea, protector })
}

/// One member of a Proposition-4.1 family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SoFamilyEntry {
    pub params: EaqeccParams,
    pub equivalent_to_qecc: bool,
}

/// The [[N-c, N-2u, d_dual; c]] family, c = 1..u, from an [N,u] Hermitian
/// self-orthogonal code with the stated dual distance.
pub fn so_family(len: usize, u: usize, d_dual: usize) -> Result<Vec<SoFamilyEntry>> {
    if u == 0 {
        return Ok(vec![]);
    }
    if 2 * u > len {
        return Err(Error::InvalidArgument(
            "self-orthogonal dimension exceeds n/2".into(),
        ));
    }
    Ok((1..=u)
        .map(|c| {
            let n = len - c;
            let k = len - 2 * u;
            SoFamilyEntry {
                params: EaqeccParams {
                    n,
                    k,
                    d_ea: Some(d_dual),
                    c,
                    l: n - c - k,
                    degenerate: false,
                },
                equivalent_to_qecc: true,
            }
        })
        .collect())
}

/// Parse an inline `n,k,d[,c]` tuple; `d` may be `?` for unknown.
pub fn parse_inline_params(s: &str) -> Result<(usize, usize, Option<usize>, Option<usize>)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(Error::Parse(format!(
            "expected n,k,d or n,k,d,c but got '{s}'"
        )));
    }
    let num = |t: &str| -> Result<usize> {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid integer '{t}' in '{s}'")))
    };
    let n = num(parts[0])?;
    let k = num(parts[1])?;
    let d = if parts[2] == "?" { None } else { Some(num(parts[2])?) };
    let c = if parts.len() == 4 { Some(num(parts[3])?) } else { None };
    Ok((n, k, d, c))
}

//! Analytic performance model on the depolarizing channel: partial binomial
//! success probabilities, the receiver-noise threshold solver, and the
//! comparison tables.

use serde::Serialize;

use crate::error::{Error, Result};

/// Block length and minimum distance of one code component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub len: usize,
    pub dist: usize,
}

impl Block {
    pub fn new(len: usize, dist: usize) -> Block {
        Block { len, dist }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    // exact in u128 for every n used here (n <= 64)
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// P(C) = sum_{i=0}^{t} C(N,i) p^i (1-p)^{N-i} with t = floor((d-1)/2).
///
/// Terms are summed smallest first (largest i first) so the partial sums
/// stay well conditioned at small p.
pub fn p_correct(block_len: usize, dist: usize, p: f64) -> f64 {
    assert!(block_len >= 1 && dist >= 1);
    assert!((0.0..=1.0).contains(&p), "probability out of range: {p}");
    let t = (dist - 1) / 2;
    let t = t.min(block_len);
    let q = 1.0 - p;
    let mut acc = 0.0;
    for i in (0..=t).rev() {
        acc += binomial(block_len, i) as f64 * p.powi(i as i32) * q.powi((block_len - i) as i32);
    }
    acc.min(1.0)
}

/// P(D) = P(D^ea) * P(D^b).
pub fn p_combination(ea: Block, b: Block, p_a: f64, p_b: f64) -> f64 {
    p_correct(ea.len, ea.dist, p_a) * p_correct(b.len, b.dist, p_b)
}

/// Largest p_b in [0, min(p_a, 1/2)] with P(D) >= P(C) at the given p_a, by
/// bisection on the monotone-decreasing partial binomial sum. The storage
/// channel is assumed no noisier than the transmit channel, hence the cap at
/// p_a. `None` when the combination loses even at p_b = 0.
pub fn max_pb(ea: Block, b: Block, reference: Block, p_a: f64, tol: f64) -> Result<Option<f64>> {
    if tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let target = p_correct(reference.len, reference.dist, p_a);
    if p_combination(ea, b, p_a, 0.0) < target {
        return Ok(None);
    }
    let mut lo = 0.0f64;
    let mut hi = p_a.min(0.5);
    if p_combination(ea, b, p_a, hi) >= target {
        return Ok(Some(hi));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if p_combination(ea, b, p_a, mid) >= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(lo))
}

/// One row of a comparison table.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComparisonRow {
    pub p_a: f64,
    pub max_p_b: Option<f64>,
    pub ratio: Option<f64>,
    pub p_d: Option<f64>,
    pub p_c: f64,
}

/// Evaluate the comparison at every grid point.
pub fn comparison_table(
    ea: Block,
    b: Block,
    reference: Block,
    grid: &[f64],
    tol: f64,
) -> Result<Vec<ComparisonRow>> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("empty p_a grid".into()));
    }
    grid.iter()
        .map(|&p_a| {
            let p_c = p_correct(reference.len, reference.dist, p_a);
            let max_p_b = max_pb(ea, b, reference, p_a, tol)?;
            Ok(ComparisonRow {
                p_a,
                max_p_b,
                ratio: max_p_b.map(|pb| pb / p_a),
                p_d: max_p_b.map(|pb| p_combination(ea, b, p_a, pb)),
                p_c,
            })
        })
        .collect()
}

/// A named table configuration: codes, reference, and p_a grid.
#[derive(Clone, Debug)]
pub struct TableConfig {
    pub ea: Block,
    pub b: Block,
    pub reference: Block,
    pub grid: Vec<f64>,
}

/// Grid step underlying the published comparison tables. The printed p_a
/// column rounds the grid to four decimals (0.0100, 0.0199, ..., 0.1585);
/// the P(C) values pin the unrounded step to 0.009899, not 0.0099.
pub const TABLE_PA_STEP: f64 = 0.009899;

fn grid(points: usize) -> Vec<f64> {
    (0..points).map(|j| 0.0100 + TABLE_PA_STEP * j as f64).collect()
}

/// [[12,1,7;1]]+[[5,1,3]] vs [[17,1,7]], 16 rows.
pub fn table1_config() -> TableConfig {
    TableConfig {
        ea: Block::new(12, 7),
        b: Block::new(5, 3),
        reference: Block::new(17, 7),
        grid: grid(16),
    }
}

/// [[12,4,7;8]]+[[14,8,3]] vs [[25,4,7]], 11 rows.
pub fn table2_config() -> TableConfig {
    TableConfig {
        ea: Block::new(12, 7),
        b: Block::new(14, 3),
        reference: Block::new(25, 7),
        grid: grid(11),
    }
}

/// [[13,3,9;10]]+[[16,10,3]] vs [[27,3,9]], 15 rows.
pub fn table3_config() -> TableConfig {
    TableConfig {
        ea: Block::new(13, 9),
        b: Block::new(16, 3),
        reference: Block::new(27, 9),
        grid: grid(15),
    }
}

pub fn run_table(cfg: &TableConfig, tol: f64) -> Result<Vec<ComparisonRow>> {
    comparison_table(cfg.ea, cfg.b, cfg.reference, &cfg.grid, tol)
}

/// CSV with the table's decimal formats (4,4,4,6,6).
pub fn rows_to_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from("p_a,max_p_b,ratio,P_D,P_C\n");
    for r in rows {
        let opt4 = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.4}"));
        let opt6 = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
        out.push_str(&format!(
            "{:.4},{},{},{},{:.6}\n",
            r.p_a,
            opt4(r.max_p_b),
            opt4(r.ratio),
            opt6(r.p_d),
            r.p_c
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_correct_degenerate_cases() {
        assert_eq!(p_correct(10, 5, 0.0), 1.0);
        let got = p_correct(5, 3, 0.1);
        let want = 0.9f64.powi(5) + 5.0 * 0.1 * 0.9f64.powi(4);
        assert!((got - want).abs() < 1e-15);
    }

    #[test]
    fn p_correct_table1_anchor() {
        let got = p_correct(17, 7, 0.0100);
        assert!((got - 0.999979).abs() < 2e-6, "got {got}");
    }

    #[test]
    fn p_combination_anchors() {
        let got = p_combination(Block::new(12, 7), Block::new(5, 3), 0.0100, 0.0013);
        assert!((got - 0.999979).abs() < 2e-6, "got {got}");
        // Table row p_a = 0.0298 (grid point 0.0100 + 2 * step), mu = 0.2744
        let p_a = 0.0100 + 2.0 * TABLE_PA_STEP;
        let got = p_combination(Block::new(12, 7), Block::new(14, 3), p_a, p_a * 0.2744);
        assert!((got - 0.993983).abs() < 3e-6, "got {got}");
        // p_b = 0 leaves only the EA factor
        let ea = Block::new(12, 7);
        let alone = p_correct(12, 7, 0.03);
        assert_eq!(p_combination(ea, Block::new(5, 3), 0.03, 0.0), alone);
    }

    #[test]
    fn max_pb_table_anchors() {
        let pb = max_pb(
            Block::new(12, 7),
            Block::new(5, 3),
            Block::new(17, 7),
            0.0100,
            1e-8,
        )
        .unwrap()
        .unwrap();
        assert!((pb / 0.0100 - 0.1288).abs() < 0.005, "ratio {}", pb / 0.0100);

        let pb = max_pb(
            Block::new(13, 9),
            Block::new(16, 3),
            Block::new(27, 9),
            0.0496,
            1e-8,
        )
        .unwrap()
        .unwrap();
        assert!((pb / 0.0496 - 0.1858).abs() < 0.005, "ratio {}", pb / 0.0496);
    }

    #[test]
    fn max_pb_none_when_reference_wins_at_zero() {
        // reference distance far beyond the EA part
        let r = max_pb(
            Block::new(12, 3),
            Block::new(5, 3),
            Block::new(12, 11),
            0.2,
            1e-8,
        )
        .unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn comparison_table_shapes() {
        let t1 = run_table(&table1_config(), 1e-8).unwrap();
        assert_eq!(t1.len(), 16);
        let t2 = run_table(&table2_config(), 1e-8).unwrap();
        assert_eq!(t2.len(), 11);
        let t3 = run_table(&table3_config(), 1e-8).unwrap();
        assert_eq!(t3.len(), 15);
        assert!((t1[0].p_a - 0.0100).abs() < 1e-12);
        assert!((t1[15].p_a - 0.158485).abs() < 1e-9);
        // last two Table 1 rows hit the p_b <= p_a cap
        let r = &t1[15];
        assert!((r.max_p_b.unwrap() - r.p_a).abs() < 1e-12);
        assert!(r.p_d.unwrap() > r.p_c);
    }

    #[test]
    fn empty_grid_rejected() {
        let c = table1_config();
        assert!(comparison_table(c.ea, c.b, c.reference, &[], 1e-8).is_err());
    }

    #[test]
    fn csv_format() {
        let rows = [ComparisonRow {
            p_a: 0.0100,
            max_p_b: Some(0.0013),
            ratio: Some(0.1288),
            p_d: Some(0.999979),
            p_c: 0.999979,
        }];
        let csv = rows_to_csv(&rows);
        assert_eq!(
            csv,
            "p_a,max_p_b,ratio,P_D,P_C\n0.0100,0.0013,0.1288,0.999979,0.999979\n"
        );
    }
}

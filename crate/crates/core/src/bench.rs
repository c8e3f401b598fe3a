//! The timing comparison between the two normal-form engines on identical
//! random inputs, with a verdict-agreement check on every sampled pair.

use std::time::Instant;

use crate::band::{artin_to_band, bkl_nf};
use crate::garside::garside_nf;
use crate::sampling::{random_braid_word, rng};

/// One cell of the timing table.
#[derive(Debug, Clone)]
pub struct BenchCell {
    pub strands: usize,
    pub length: usize,
    pub samples: usize,
    pub garside_ms: f64,
    pub bkl_ms: f64,
    pub agreements: usize,
}

pub const DEFAULT_LENGTHS: [usize; 3] = [100, 500, 2000];
pub const DEFAULT_STRANDS: [usize; 3] = [10, 25, 50];
pub const DEFAULT_SEED: u64 = 0x6272616964;

/// Runs both engines on `samples` random word pairs per cell. Words are
/// drawn in the Artin letters and embedded into band letters, so both
/// engines normalize inputs of the same length; the equality verdicts of
/// every pair must agree or the run aborts.
pub fn bench_table(
    strands: &[usize],
    lengths: &[usize],
    samples: usize,
    seed: u64,
) -> Vec<BenchCell> {
    let mut out = Vec::new();
    let mut r = rng(seed);
    for &n in strands {
        for &m in lengths {
            let mut garside_ms = 0.0;
            let mut bkl_ms = 0.0;
            let mut agreements = 0;
            for _ in 0..samples {
                let w1 = random_braid_word(&mut r, n, m);
                let w2 = random_braid_word(&mut r, n, m);
                let b1 = artin_to_band(&w1);
                let b2 = artin_to_band(&w2);

                let t = Instant::now();
                let g1 = garside_nf(&w1);
                let g2 = garside_nf(&w2);
                garside_ms += t.elapsed().as_secs_f64() * 1000.0;
                let verdict_garside = g1 == g2;

                let t = Instant::now();
                let k1 = bkl_nf(&b1);
                let k2 = bkl_nf(&b2);
                bkl_ms += t.elapsed().as_secs_f64() * 1000.0;
                let verdict_bkl = k1 == k2;

                assert_eq!(
                    verdict_garside, verdict_bkl,
                    "normal-form engines disagree at n={n}, m={m}"
                );
                agreements += 1;
            }
            out.push(BenchCell {
                strands: n,
                length: m,
                samples,
                garside_ms,
                bkl_ms,
                agreements,
            });
        }
    }
    out
}

/// Renders the table as aligned plain text.
pub fn format_table(cells: &[BenchCell]) -> String {
    let mut out = String::from(
        "  n     m  samples  garside_ms      bkl_ms  agree\n",
    );
    for c in cells {
        out.push_str(&format!(
            "{:>3} {:>5} {:>8} {:>11.2} {:>11.2} {:>5}/{}\n",
            c.strands, c.length, c.samples, c.garside_ms, c.bkl_ms, c.agreements, c.samples
        ));
    }
    out
}

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use braid_core::band::{artin_to_band, bkl_nf};
use braid_core::garside::garside_nf;
use braid_core::sampling::{random_braid_word, rng};

fn bench_normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_forms");
    for &(n, m) in &[(6usize, 50usize), (10, 100), (16, 200)] {
        let mut r = rng(0xbead);
        let word = random_braid_word(&mut r, n, m);
        let band = artin_to_band(&word);
        group.bench_with_input(
            BenchmarkId::new("garside", format!("n{n}_m{m}")),
            &word,
            |b, w| b.iter(|| garside_nf(w)),
        );
        group.bench_with_input(
            BenchmarkId::new("bkl", format!("n{n}_m{m}")),
            &band,
            |b, w| b.iter(|| bkl_nf(w)),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_normal_forms);
criterion_main!(benches);

//! Parallel kernels against their sequential reference paths.
//!
//! The two hot scans — exhaustive toughness and the induced-2K2 pair
//! scan — dispatch to rayon under the `parallel` feature; this bench pits
//! them against the always-available serial implementations on the same
//! inputs. Run with `cargo bench -p toughwalks`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use toughwalks::generators::{gen_complete_multipartite, gen_split_graph};
use toughwalks::oracles::{brute_force_toughness, brute_force_toughness_serial, Budget};
use toughwalks::recognition::{find_induced_2k2, find_induced_2k2_serial};
use toughwalks::Ratio;

fn toughness_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("toughness_scan");
    group.sample_size(10);
    let budget = Budget::default();
    for n in [14usize, 17, 19] {
        let g = gen_split_graph(n, Ratio::new(1, 2), 0xbe7c);
        group.bench_with_input(BenchmarkId::new("parallel", n), &g, |b, g| {
            b.iter(|| brute_force_toughness(g, &budget).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("serial", n), &g, |b, g| {
            b.iter(|| brute_force_toughness_serial(g, &budget).unwrap())
        });
    }
    group.finish();
}

fn two_k2_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("two_k2_scan");
    group.sample_size(10);
    // 2K2-free inputs force the full pair scan (no early exit)
    for n in [120usize, 200] {
        let g = gen_split_graph(n, Ratio::new(1, 2), 0x2b2);
        group.bench_with_input(BenchmarkId::new("parallel", n), &g, |b, g| {
            b.iter(|| assert!(find_induced_2k2(g).is_none()))
        });
        group.bench_with_input(BenchmarkId::new("serial", n), &g, |b, g| {
            b.iter(|| assert!(find_induced_2k2_serial(g).is_none()))
        });
    }
    let kbig = gen_complete_multipartite(&[40, 40, 40]);
    group.bench_with_input(BenchmarkId::new("parallel", "K40,40,40"), &kbig, |b, g| {
        b.iter(|| assert!(find_induced_2k2(g).is_none()))
    });
    group.bench_with_input(BenchmarkId::new("serial", "K40,40,40"), &kbig, |b, g| {
        b.iter(|| assert!(find_induced_2k2_serial(g).is_none()))
    });
    group.finish();
}

criterion_group!(benches, toughness_scan, two_k2_scan);
criterion_main!(benches);

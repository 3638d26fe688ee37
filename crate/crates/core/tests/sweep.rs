use bumpft::harness::emit::{read_csv, read_json, write_csv, write_json};
use bumpft::harness::sweep::{k_grid, run_sweep_with, Spacing};
use bumpft::oscquad::QuadOptions;
use bumpft::{BumpParams, Execution};

fn csv_bytes(exec: Execution) -> Vec<u8> {
    let grid = k_grid(0.5, 150.0, 120, Spacing::Linear).unwrap();
    let records =
        run_sweep_with(BumpParams::canonical(), &grid, &QuadOptions::with_tol(1e-12), exec).unwrap();
    let mut out = Vec::new();
    write_csv(&records, &mut out).unwrap();
    out
}

#[test]
fn sweep_output_is_reproducible() {
    let first = csv_bytes(Execution::default());
    assert_eq!(first, csv_bytes(Execution::default()));
    assert_eq!(first, csv_bytes(Execution::Sequential));
}

#[test]
fn sweep_round_trips_through_files() {
    let grid = k_grid(1.0, 1e3, 40, Spacing::Log).unwrap();
    let params = BumpParams::new(3.0, 0.5).unwrap();
    let records =
        run_sweep_with(params, &grid, &QuadOptions::with_tol(1e-12), Execution::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();

    let csv_path = dir.path().join("sweep.csv");
    write_csv(&records, std::fs::File::create(&csv_path).unwrap()).unwrap();
    assert_eq!(read_csv(std::fs::File::open(&csv_path).unwrap()).unwrap(), records);

    let json_path = dir.path().join("sweep.json");
    write_json(&records, std::fs::File::create(&json_path).unwrap()).unwrap();
    assert_eq!(read_json(std::fs::File::open(&json_path).unwrap()).unwrap(), records);
}

#[test]
fn grid_endpoints_are_exact() {
    for spacing in [Spacing::Linear, Spacing::Log] {
        let g = k_grid(0.5, 150.0, 200, spacing).unwrap();
        assert_eq!(g.len(), 200);
        assert_eq!(g[0], 0.5);
        assert_eq!(g[199], 150.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
    assert!(k_grid(2.0, 1.0, 10, Spacing::Linear).is_err());
    assert!(k_grid(0.0, 1.0, 10, Spacing::Log).is_err());
}

use k3aut::lattice::{genus_enumerate, IntegralLattice};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn probe_rank6_genus() {
    let c = IntegralLattice::from_i64(&[
        vec![-4, 1, 1, 0, 0, 1],
        vec![1, -4, 1, 1, 0, 0],
        vec![1, 1, -4, 1, 1, 0],
        vec![0, 1, 1, -4, 1, 1],
        vec![0, 0, 1, 1, -4, 1],
        vec![1, 0, 0, 1, 1, -4],
    ])
    .unwrap();
    assert_eq!(c.det().to_string(), "1183");
    let t0 = std::time::Instant::now();
    let g = genus_enumerate(&c, 2).unwrap();
    eprintln!("classes {} mass {} in {:?}", g.class_count(), g.mass, t0.elapsed());
    assert_eq!(g.class_count(), 23);
    assert_eq!(g.mass, BigRational::new(BigInt::from(2669), BigInt::from(2016)));
}

#[test]
fn probe_e8_genus() {
    let e8 = IntegralLattice::from_i64(&[
        vec![2, -1, 0, 0, 0, 0, 0, 0],
        vec![-1, 2, -1, 0, 0, 0, 0, 0],
        vec![0, -1, 2, -1, 0, 0, 0, 0],
        vec![0, 0, -1, 2, -1, 0, 0, 0],
        vec![0, 0, 0, -1, 2, -1, 0, -1],
        vec![0, 0, 0, 0, -1, 2, -1, 0],
        vec![0, 0, 0, 0, 0, -1, 2, 0],
        vec![0, 0, 0, 0, -1, 0, 0, 2],
    ])
    .unwrap();
    let t0 = std::time::Instant::now();
    let g = genus_enumerate(&e8, 3).unwrap();
    eprintln!("E8 classes {} mass {} in {:?}", g.class_count(), g.mass, t0.elapsed());
    assert_eq!(g.class_count(), 1);
    assert_eq!(g.aut_orders[0], BigInt::from(696729600u64));
}

use arthurkit::partitions::{
    all_partitions, bv_dual, collapse, dominates, enumerate, is_valid, transpose, OrbitFamily, Partition,
};
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Dominance-maximal valid partitions below `q`, by exhaustive search.
fn brute_collapse(q: &Partition, fam: OrbitFamily) -> Vec<Partition> {
    let below: Vec<Partition> = enumerate(q.total(), fam)
        .into_iter()
        .filter(|x| dominates(q, x).unwrap())
        .collect();
    below
        .iter()
        .filter(|x| !below.iter().any(|y| y != *x && dominates(y, x).unwrap()))
        .cloned()
        .collect()
}

#[test]
fn transpose_examples() {
    assert_eq!(transpose(&p("[2,2]")), p("[2,2]"));
    assert_eq!(transpose(&p("[4,2,1]")), p("[3,2,1,1]"));
    assert_eq!(transpose(&p("[3,3,3]")), p("[3,3,3]"));
}

#[test]
fn dominance_examples() {
    assert!(dominates(&p("[4]"), &p("[2,2]")).unwrap());
    assert!(dominates(&p("[2,2]"), &p("[2,2]")).unwrap());
    assert!(dominates(&p("[3,1]"), &p("[2,2]")).unwrap());
    assert!(!dominates(&p("[2,2]"), &p("[3,1]")).unwrap());
    assert!(dominates(&p("[3]"), &p("[2,2]")).is_err());
}

#[test]
fn validity_examples() {
    assert!(is_valid(&p("[3,1,1]"), OrbitFamily::B));
    assert!(!is_valid(&p("[3,1]"), OrbitFamily::C));
    assert!(is_valid(&p("[2,2]"), OrbitFamily::C));
}

#[test]
fn collapse_examples() {
    assert_eq!(collapse(&p("[3,2]"), OrbitFamily::B).unwrap(), p("[3,1,1]"));
    assert_eq!(collapse(&p("[2,2,2]"), OrbitFamily::D).unwrap(), p("[2,2,1,1]"));
    assert_eq!(collapse(&p("[2,2]"), OrbitFamily::C).unwrap(), p("[2,2]"));
}

#[test]
fn collapse_matches_brute_force_small() {
    for total in 1..=12 {
        for q in all_partitions(total) {
            for fam in [OrbitFamily::B, OrbitFamily::C, OrbitFamily::D] {
                if !fam.total_ok(total) {
                    continue;
                }
                let maxima = brute_collapse(&q, fam);
                assert_eq!(maxima.len(), 1, "{fam} below {q}: {maxima:?}");
                assert_eq!(collapse(&q, fam).unwrap(), maxima[0], "{fam} collapse of {q}");
            }
        }
    }
}

#[test]
fn bv_examples() {
    assert_eq!(bv_dual(&p("[2,2]"), OrbitFamily::C, OrbitFamily::B).unwrap(), p("[3,1,1]"));
    assert_eq!(bv_dual(&p("[3,3,3]"), OrbitFamily::B, OrbitFamily::C).unwrap(), p("[3,3,2]"));
    assert_eq!(bv_dual(&p("[3,3]"), OrbitFamily::D, OrbitFamily::D).unwrap(), p("[2,2,1,1]"));
}

#[test]
fn enumerate_examples() {
    let c4: Vec<Partition> = ["[4]", "[2,2]", "[2,1,1]", "[1,1,1,1]"].iter().map(|s| p(s)).collect();
    assert_eq!(enumerate(4, OrbitFamily::C), c4);
    assert_eq!(enumerate(0, OrbitFamily::A), vec![Partition::empty()]);
    assert_eq!(enumerate(3, OrbitFamily::B), vec![p("[3]"), p("[1,1,1]")]);
}

#[test]
fn partition_counts_match_euler() {
    // p(n) for n = 0..15
    let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];
    for (n, &k) in known.iter().enumerate() {
        assert_eq!(all_partitions(n as u32).len(), k, "p({n})");
    }
}

#[test]
fn parse_forms_agree() {
    assert_eq!(p("[3,2^2,1^3]"), p("[3,2,2,1,1,1]"));
    assert_eq!(p("[3,2,2,1,1,1]").to_exponent_string(), "[3,2^2,1^3]");
    assert!("[a]".parse::<Partition>().is_err());
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..8, 0..8).prop_map(Partition::new)
}

fn same_total_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1u32..14).prop_flat_map(|n| {
        let all = all_partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn transpose_is_an_involution(q in arb_partition()) {
        prop_assert_eq!(transpose(&transpose(&q)), q);
    }

    #[test]
    fn transpose_reverses_dominance((x, y) in same_total_pair()) {
        prop_assert_eq!(dominates(&x, &y).unwrap(), dominates(&transpose(&y), &transpose(&x)).unwrap());
    }

    #[test]
    fn collapse_is_valid_dominated_and_idempotent(q in arb_partition(), f in 0usize..3) {
        let fam = [OrbitFamily::B, OrbitFamily::C, OrbitFamily::D][f];
        prop_assume!(fam.total_ok(q.total()));
        let c = collapse(&q, fam).unwrap();
        prop_assert!(is_valid(&c, fam));
        prop_assert!(dominates(&q, &c).unwrap());
        prop_assert_eq!(collapse(&c, fam).unwrap(), c);
    }

    #[test]
    fn bv_dual_lands_in_target_family(q in arb_partition(), f in 0usize..4) {
        let (d, t) = [(OrbitFamily::A, OrbitFamily::A), (OrbitFamily::C, OrbitFamily::B),
                      (OrbitFamily::B, OrbitFamily::C), (OrbitFamily::D, OrbitFamily::D)][f];
        prop_assume!(d.total_ok(q.total()) && is_valid(&q, d));
        let out = bv_dual(&q, d, t).unwrap();
        prop_assert!(is_valid(&out, t));
    }
}

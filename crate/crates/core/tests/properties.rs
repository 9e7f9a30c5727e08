//! Randomized invariants on words reached by random Hurwitz walks from `e`.

use hurwitz_core::catalan::{dyck_statistics, DyckPath};
use hurwitz_core::chain::reconstruct;
use hurwitz_core::metrics::{bubble_sort_bound, bubble_sort_meet, certify_meet};
use hurwitz_core::weak::down_operator;
use hurwitz_core::{inversion_table, phi, rank, FactorWord, Move, Permutation};
use proptest::prelude::*;

/// A word of `F_n` reached by up to 60 random moves.
fn word() -> impl Strategy<Value = FactorWord> {
    (3usize..=9).prop_flat_map(|n| {
        prop::collection::vec((any::<bool>(), 1..n - 1), 0..60).prop_map(move |moves| {
            moves.into_iter().fold(FactorWord::base(n), |w, (right, i)| {
                let m = if right { Move::Right(i) } else { Move::Left(i) };
                m.apply(&w).unwrap()
            })
        })
    })
}

fn word_pair() -> impl Strategy<Value = (FactorWord, FactorWord)> {
    (3usize..=8).prop_flat_map(|n| {
        let walk = prop::collection::vec((any::<bool>(), 1..n - 1), 0..60);
        (walk.clone(), walk).prop_map(move |(a, b)| {
            let run = |moves: Vec<(bool, usize)>| {
                moves.into_iter().fold(FactorWord::base(n), |w, (right, i)| {
                    if right { w.hurwitz_right(i).unwrap() } else { w.hurwitz_left(i).unwrap() }
                })
            };
            (run(a), run(b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn moves_preserve_product_and_invert(w in word()) {
        let c = Permutation::long_cycle(w.n());
        prop_assert_eq!(w.product(), c.clone());
        for i in 1..w.n() - 1 {
            let r = w.hurwitz_right(i).unwrap();
            prop_assert_eq!(r.product(), c.clone());
            prop_assert_eq!(r.hurwitz_left(i).unwrap(), w);
        }
    }

    #[test]
    fn string_forms_round_trip(w in word()) {
        prop_assert_eq!(w.to_string().parse::<FactorWord>().unwrap(), w);
        prop_assert_eq!(FactorWord::from_compact_label(&w.compact_label()).unwrap(), w);
    }

    #[test]
    fn iota_is_an_involution(w in word()) {
        let i = w.iota();
        prop_assert_eq!(i.product(), w.product());
        prop_assert_eq!(i.iota(), w);
    }

    #[test]
    fn phi_contracts_edges(w in word()) {
        let p = phi(&w);
        for v in w.neighbors() {
            prop_assert!(p.cayley_distance(&phi(&v)) <= 1);
        }
        prop_assert_eq!(rank(&w), p.inversion_count());
    }

    #[test]
    fn inversion_data_determines_word(w in word()) {
        let table = inversion_table(&w);
        prop_assert_eq!(reconstruct(w.n(), &table.all(), &table.left()).unwrap(), w);
        let (r, l, n) = table.counts();
        prop_assert_eq!(r + l + n, rank(&w));
    }

    #[test]
    fn down_operators_lower_or_fix(w in word()) {
        for i in 1..w.n() - 1 {
            let d = down_operator(&w, i).unwrap();
            prop_assert!(rank(&d) <= rank(&w));
            prop_assert_eq!(down_operator(&d, i).unwrap(), d);
        }
    }

    #[test]
    fn bubble_sort_paths_certify((v, w) in word_pair()) {
        let path = bubble_sort_meet(&v, &w).unwrap();
        prop_assert!(certify_meet(&v, &w, &path));
        prop_assert!(path.len() <= bubble_sort_bound(v.n()));
    }

    #[test]
    fn dyck_paths_round_trip(bits in prop::collection::vec(any::<bool>(), 0..24)) {
        // Balanced sequence from arbitrary bits: close whenever forced or chosen.
        let half = bits.len();
        let (mut steps, mut open, mut used) = (Vec::new(), 0usize, 0usize);
        for b in bits {
            if used < half && (open == 0 || b) {
                steps.push(1i8);
                open += 1;
                used += 1;
            } else if open > 0 {
                steps.push(-1);
                open -= 1;
            }
        }
        steps.extend(std::iter::repeat(-1).take(open));
        let p = DyckPath::new(steps).unwrap();
        prop_assert_eq!(DyckPath::parse(&p.to_string()).unwrap(), p.clone());
        let s = dyck_statistics(&p);
        let m = p.semilength();
        prop_assert!(s.area <= m * m.saturating_sub(1) / 2);
    }
}

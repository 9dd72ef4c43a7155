//! Cubes, domain permutations and the compact fixed-width encoding.

mod cube;
mod encoding;
mod layout;
mod perm;

pub use cube::{Cube, TrailEntry, FALSE, TRUE, UNASSIGNED};
pub use encoding::{decode, encode, Encoding, HEADER_LEN};
pub use layout::{Layout, MAX_ORDER};
pub use perm::{apply_perm, Permutation};

pub(crate) use encoding::encode_into;
pub(crate) use perm::apply_unchecked;

use crate::ground::{ClauseStatus, GroundClauseSet};

/// True iff the cube is total and every ground clause holds in it.
pub fn is_model(c: &Cube, g: &GroundClauseSet) -> bool {
    c.is_total() && (0..g.num_clauses()).all(|i| g.clause_status(i, c.values()) == ClauseStatus::Satisfied)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fol::{parse_theory, Signature};
    use crate::ground::ground_theory;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn layout(spec: &str, n: usize) -> Arc<Layout> {
        Layout::new(Signature::from_spec(spec).unwrap(), n).unwrap()
    }

    fn model(spec: &str, n: usize, values: &[u8]) -> Cube {
        Cube::from_values(layout(spec, n), values.to_vec()).unwrap()
    }

    pub(crate) const FIG1_A: [u8; 16] = [0, 1, 0, 3, 1, 2, 1, 2, 2, 1, 2, 1, 3, 0, 3, 0];
    pub(crate) const FIG1_B: [u8; 16] = [0, 1, 2, 0, 1, 3, 3, 1, 2, 0, 0, 2, 3, 1, 1, 3];
    pub(crate) const FIG1_C: [u8; 16] = [0, 0, 2, 3, 1, 1, 3, 3, 2, 2, 0, 0, 3, 3, 1, 1];

    #[test]
    fn fig1_renamings() {
        let a = model("*/2", 4, &FIG1_A);
        let b = model("*/2", 4, &FIG1_B);
        let c = model("*/2", 4, &FIG1_C);
        assert_eq!(apply_perm(&Permutation::transposition(4, 2, 3), &a).unwrap(), b);
        assert_eq!(apply_perm(&Permutation::transposition(4, 1, 3), &b).unwrap(), c);
    }

    #[test]
    fn identity_is_neutral() {
        let mut c = Cube::empty(layout("f/1, g/2", 3));
        c.assign(0, 2, true);
        c.assign(5, 1, false);
        let img = apply_perm(&Permutation::identity(3), &c).unwrap();
        assert_eq!(img, c);
        assert_eq!(img.trail(), c.trail());
    }

    #[test]
    fn relation_values_keep_truth() {
        let mut c = Cube::empty(layout("f/1, rel r/1", 2));
        c.assign(2, TRUE, true);
        c.assign(0, 1, true);
        let img = apply_perm(&Permutation::transposition(2, 0, 1), &c).unwrap();
        // r(0)=T moves to r(1)=T, f(0)=1 moves to f(1)=0
        assert_eq!(img.values(), &[UNASSIGNED, 0, UNASSIGNED, TRUE]);
    }

    #[test]
    fn pinned_elements_cannot_move() {
        let t = parse_theory("0 * x = x.").unwrap();
        let l = Layout::new(t.signature, 3).unwrap();
        let c = Cube::empty(l);
        assert!(apply_perm(&Permutation::transposition(3, 0, 1), &c).is_err());
        assert!(apply_perm(&Permutation::transposition(3, 1, 2), &c).is_ok());
    }

    #[test]
    fn example_model_encoding() {
        let m = model("f/2", 2, &[0, 1, 0, 1]);
        let e = encode(&m);
        assert_eq!(e.tables(), &[0, 1, 0, 1]);
        assert_eq!(e.len(), HEADER_LEN + 4);
        let mut c = Cube::empty(layout("f/2", 2));
        c.assign(0, 0, true);
        assert_eq!(encode(&c).tables(), &[0, UNASSIGNED, UNASSIGNED, UNASSIGNED]);
    }

    #[test]
    fn decode_rejects_bad_input() {
        let l = layout("f/2", 2);
        let good = encode(&Cube::empty(l.clone()));
        let mut short = good.clone().into_bytes();
        short.pop();
        assert!(decode(&l, &Encoding::from_bytes(short)).is_err());
        let mut bad = good.clone().into_bytes();
        bad[HEADER_LEN] = 7;
        assert!(decode(&l, &Encoding::from_bytes(bad)).is_err());
        let other = layout("g/2", 2);
        assert!(matches!(
            decode(&other, &good),
            Err(crate::Error::SignatureMismatch(_))
        ));
        assert!(Encoding::from_hex("0g").is_err());
    }

    #[test]
    fn is_model_examples() {
        let empty = parse_theory("functions */2.").unwrap();
        let g = ground_theory(&empty, 4).unwrap();
        assert!(is_model(&Cube::from_values(g.layout().clone(), FIG1_C.to_vec()).unwrap(), &g));

        let cancel = parse_theory("x * y = x * z -> y = z.").unwrap();
        let g = ground_theory(&cancel, 2).unwrap();
        let row_constant = Cube::from_values(g.layout().clone(), vec![0, 0, 1, 1]).unwrap();
        assert!(!is_model(&row_constant, &g));
        let m = Cube::from_values(g.layout().clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(is_model(&m, &g));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u8).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn arb_cube(n: usize) -> impl Strategy<Value = Cube> {
        let l = layout("c/0, f/1, g/2, h/3, rel r/2", n);
        let cells = l.num_cells();
        let symbols: Vec<bool> = (0..cells).map(|c| l.is_relation(l.symbol_of(c))).collect();
        proptest::collection::vec((any::<bool>(), 0..n as u8, any::<bool>()), cells).prop_map(
            move |entries| {
                let values = entries
                    .iter()
                    .zip(&symbols)
                    .map(|(&(set, v, b), &rel)| match (set, rel) {
                        (false, _) => UNASSIGNED,
                        (true, true) => if b { TRUE } else { FALSE },
                        (true, false) => v,
                    })
                    .collect();
                Cube::from_values(l.clone(), values).unwrap()
            },
        )
    }

    fn assigned_per_symbol(c: &Cube) -> Vec<usize> {
        (0..c.layout().num_symbols())
            .map(|s| c.table(s).iter().filter(|&&v| v != UNASSIGNED).count())
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn encoding_round_trip(c in (2usize..=4).prop_flat_map(arb_cube)) {
            let e = encode(&c);
            prop_assert_eq!(decode(c.layout(), &e).unwrap(), c.clone());
            prop_assert_eq!(Encoding::from_hex(&e.to_hex()).unwrap(), e);
        }
    }

    proptest! {
        #[test]
        fn permutation_action_laws(
            (c, p, q) in (2usize..=4).prop_flat_map(|n| (arb_cube(n), arb_perm(n), arb_perm(n)))
        ) {
            let pq = apply_perm(&p.compose(&q), &c).unwrap();
            let stepwise = apply_perm(&p, &apply_perm(&q, &c).unwrap()).unwrap();
            prop_assert_eq!(&pq, &stepwise);
            let back = apply_perm(&p.inverse(), &apply_perm(&p, &c).unwrap()).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(assigned_per_symbol(&apply_perm(&p, &c).unwrap()), assigned_per_symbol(&c));
        }
    }
}

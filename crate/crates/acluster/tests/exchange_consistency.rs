//! The induced exchange variables intertwine tau mutation with ordinary
//! exchange-variable mutation: mutating the tau seed and reading off y's
//! agrees with mutating the y-seed and substituting the initial y's.

use std::collections::BTreeMap;

use acluster::{translation_word, TauSeed};
use ratexpr::RatExpr;
use xcluster::{case, XSeed};

fn initial_y_map(seed: &TauSeed) -> BTreeMap<String, RatExpr> {
    seed.y_from_tau()
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, y)| (format!("y{}", i + 1), y))
        .collect()
}

#[test]
fn single_mutations_commute_with_the_exchange_variable_map() {
    let c = case("A7p").unwrap();
    for tau0 in [TauSeed::six_row(), TauSeed::eight_row()] {
        let map = initial_y_map(&tau0);
        let x0 = XSeed::initial(c.quiver.clone());
        for j in 1..=tau0.n() {
            let from_tau = tau0.mutate(j).unwrap().y_from_tau().unwrap();
            let x = x0.mutate(j).unwrap();
            for i in 1..=tau0.n() {
                let from_x = x.var(i).substitute_all(&map).unwrap();
                assert!(
                    from_tau[i - 1].equals(&from_x),
                    "vertex {i} after mutation at {j}"
                );
            }
        }
    }
}

#[test]
fn the_translation_word_commutes_with_the_exchange_variable_map() {
    let c = case("A7p").unwrap();
    let w = translation_word();
    let tau0 = TauSeed::six_row();
    let map = initial_y_map(&tau0);
    let from_tau = tau0.apply_word(&w).unwrap().y_from_tau().unwrap();
    let x = XSeed::initial(c.quiver.clone()).apply_word(&w).unwrap();
    for i in 1..=tau0.n() {
        let from_x = x.var(i).substitute_all(&map).unwrap();
        assert!(from_tau[i - 1].equals(&from_x), "vertex {i}");
    }
}

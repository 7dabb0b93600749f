use super::relations::{conflict_ix, lessdot_ix};
use crate::net::InhibitorNet;

/// `name` with primes appended until it is not a node of `net` or `taken`.
pub(crate) fn fresh_name(net: &InhibitorNet, taken: &[String], name: String) -> String {
    let mut out = name;
    while net.is_place(&out) || net.is_transition(&out) || taken.contains(&out) {
        out.push('\'');
    }
    out
}

/// Close direct conflict under inheritance along `⋖`, adding for each new
/// pair `t # t'` an initially marked place `({t,t'},#)` consumed by both.
pub fn saturate(net: &InhibitorNet) -> InhibitorNet {
    let n = net.transitions().len();
    let all = vec![true; n];
    let ld = lessdot_ix(net, &all);
    let mut conflict = conflict_ix(net, &all);
    loop {
        let mut changed = false;
        for t in 0..n {
            for t1 in 0..n {
                if !conflict[t][t1] {
                    continue;
                }
                for t2 in 0..n {
                    if ld[t1][t2] && t2 != t && !conflict[t][t2] {
                        conflict[t][t2] = true;
                        conflict[t2][t] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let direct = conflict_ix(net, &all);
    let names = net.transitions();
    let mut b = net.to_builder();
    let mut added = Vec::new();
    for t in 0..n {
        for u in t + 1..n {
            if conflict[t][u] && !direct[t][u] {
                let place = fresh_name(net, &added, format!("({{{},{}}},#)", names[t], names[u]));
                b.place(place.clone()).mark(place.clone());
                b.consume(place.clone(), names[t].clone())
                    .consume(place.clone(), names[u].clone());
                added.push(place);
            }
        }
    }
    b.build().expect("saturation of a valid net")
}

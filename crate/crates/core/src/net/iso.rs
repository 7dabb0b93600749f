use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::InhibitorNet;

/// A bijection between two nets preserving flow, inhibitor arcs and the
/// initial marking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isomorphism {
    pub places: BTreeMap<String, String>,
    pub transitions: BTreeMap<String, String>,
}

impl Isomorphism {
    /// True when every node maps to the node with the same name.
    pub fn is_identity(&self) -> bool {
        self.places.iter().chain(&self.transitions).all(|(a, b)| a == b)
    }
}

/// Per-net adjacency used by the search.
struct View<'a> {
    net: &'a InhibitorNet,
    /// Per place: (producers, consumers, inhibited), as transition indices.
    place_adj: Vec<[Vec<usize>; 3]>,
}

impl<'a> View<'a> {
    fn new(net: &'a InhibitorNet) -> Self {
        let mut place_adj = vec![[Vec::new(), Vec::new(), Vec::new()]; net.places.len()];
        for t in 0..net.transitions.len() {
            for &s in &net.post[t] {
                place_adj[s][0].push(t);
            }
            for &s in &net.pre[t] {
                place_adj[s][1].push(t);
            }
            for &s in &net.inhib[t] {
                place_adj[s][2].push(t);
            }
        }
        View { net, place_adj }
    }

    fn transition_arcs(&self, t: usize) -> [&[usize]; 3] {
        [&self.net.pre[t], &self.net.post[t], &self.net.inhib[t]]
    }
}

/// Joint colour refinement on both nets so colours are comparable.
fn refine(a: &View, b: &View) -> (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>) {
    type Sig = (usize, Vec<(u8, usize)>);
    let mut pa: Vec<usize> = a.net.initial.iter().map(|&c| c as usize).collect();
    let mut pb: Vec<usize> = b.net.initial.iter().map(|&c| c as usize).collect();
    let mut ta = vec![0usize; a.net.transitions.len()];
    let mut tb = vec![0usize; b.net.transitions.len()];
    let classes = |p: &[usize], q: &[usize], t: &[usize], u: &[usize]| {
        let mut all: Vec<(u8, usize)> = p.iter().chain(q).map(|&c| (0, c)).collect();
        all.extend(t.iter().chain(u).map(|&c| (1, c)));
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut count = classes(&pa, &pb, &ta, &tb);
    loop {
        let mut dict: HashMap<Sig, usize> = HashMap::new();
        let mut intern = |sig: Sig| {
            let next = dict.len();
            *dict.entry(sig).or_insert(next)
        };
        let tsig = |v: &View, p: &[usize], t: &[usize], i: usize| -> Sig {
            let mut nb = Vec::new();
            for (k, arcs) in v.transition_arcs(i).iter().enumerate() {
                nb.extend(arcs.iter().map(|&s| (k as u8, p[s])));
            }
            nb.sort_unstable();
            (t[i], nb)
        };
        let psig = |v: &View, p: &[usize], t: &[usize], i: usize| -> Sig {
            let mut nb = Vec::new();
            for (k, adj) in v.place_adj[i].iter().enumerate() {
                nb.extend(adj.iter().map(|&x| (k as u8, t[x])));
            }
            nb.sort_unstable();
            (p[i], nb)
        };
        let mut sigs_ta: Vec<Sig> = (0..ta.len()).map(|i| tsig(a, &pa, &ta, i)).collect();
        let mut sigs_tb: Vec<Sig> = (0..tb.len()).map(|i| tsig(b, &pb, &tb, i)).collect();
        let mut sigs_pa: Vec<Sig> = (0..pa.len()).map(|i| psig(a, &pa, &ta, i)).collect();
        let mut sigs_pb: Vec<Sig> = (0..pb.len()).map(|i| psig(b, &pb, &tb, i)).collect();
        // Tag place and transition signatures apart.
        for s in sigs_ta.iter_mut().chain(sigs_tb.iter_mut()) {
            s.1.push((9, 0));
        }
        let nta: Vec<usize> = sigs_ta.into_iter().map(&mut intern).collect();
        let ntb: Vec<usize> = sigs_tb.into_iter().map(&mut intern).collect();
        for s in sigs_pa.iter_mut().chain(sigs_pb.iter_mut()) {
            s.1.push((8, 0));
        }
        let npa: Vec<usize> = sigs_pa.into_iter().map(&mut intern).collect();
        let npb: Vec<usize> = sigs_pb.into_iter().map(&mut intern).collect();
        let next = classes(&npa, &npb, &nta, &ntb);
        pa = npa;
        pb = npb;
        ta = nta;
        tb = ntb;
        if next == count {
            return (pa, pb, ta, tb);
        }
        count = next;
    }
}

struct Search<'a> {
    a: View<'a>,
    b: View<'a>,
    ta_col: Vec<usize>,
    tb_col: Vec<usize>,
    /// Pairwise overlap profile of transitions in each net.
    prof_a: Vec<Vec<[u16; 9]>>,
    prof_b: Vec<Vec<[u16; 9]>>,
    /// Identity-by-name preference.
    same_name: Vec<Option<usize>>,
}

fn overlap(x: &[usize], y: &[usize]) -> u16 {
    x.iter().filter(|s| y.binary_search(s).is_ok()).count() as u16
}

fn profile(v: &View) -> Vec<Vec<[u16; 9]>> {
    let n = v.net.transitions.len();
    let mut out = vec![vec![[0u16; 9]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let ai = v.transition_arcs(i);
            let aj = v.transition_arcs(j);
            for x in 0..3 {
                for y in 0..3 {
                    out[i][j][x * 3 + y] = overlap(ai[x], aj[y]);
                }
            }
        }
    }
    out
}

impl Search<'_> {
    fn run(&self, order: &[usize], map: &mut Vec<Option<usize>>, used: &mut Vec<bool>, k: usize) -> Option<Vec<usize>> {
        if k == order.len() {
            let full: Vec<usize> = map.iter().map(|m| m.expect("complete")).collect();
            return self.places_match(&full).then_some(full);
        }
        let i = order[k];
        let mut candidates: Vec<usize> = (0..self.b.net.transitions.len())
            .filter(|&j| !used[j] && self.tb_col[j] == self.ta_col[i])
            .collect();
        if let Some(j) = self.same_name[i] {
            if let Some(pos) = candidates.iter().position(|&c| c == j) {
                candidates.remove(pos);
                candidates.insert(0, j);
            }
        }
        for j in candidates {
            let consistent = order[..k].iter().all(|&i2| {
                let j2 = map[i2].expect("assigned");
                self.prof_a[i][i2] == self.prof_b[j][j2] && self.prof_a[i2][i] == self.prof_b[j2][j]
            }) && self.prof_a[i][i] == self.prof_b[j][j];
            if !consistent {
                continue;
            }
            map[i] = Some(j);
            used[j] = true;
            if let Some(found) = self.run(order, map, used, k + 1) {
                return Some(found);
            }
            map[i] = None;
            used[j] = false;
        }
        None
    }

    /// Place signature under a transition mapping.
    fn place_sig(&self, v: &View, s: usize, tmap: Option<&[usize]>) -> (u32, [Vec<usize>; 3]) {
        let adj = &v.place_adj[s];
        let lift = |xs: &Vec<usize>| {
            let mut out: Vec<usize> = xs.iter().map(|&t| tmap.map_or(t, |m| m[t])).collect();
            out.sort_unstable();
            out
        };
        (v.net.initial[s], [lift(&adj[0]), lift(&adj[1]), lift(&adj[2])])
    }

    fn places_match(&self, tmap: &[usize]) -> bool {
        let mut left: Vec<_> = (0..self.a.net.places.len())
            .map(|s| self.place_sig(&self.a, s, Some(tmap)))
            .collect();
        let mut right: Vec<_> = (0..self.b.net.places.len())
            .map(|s| self.place_sig(&self.b, s, None))
            .collect();
        left.sort();
        right.sort();
        left == right
    }
}

/// Search for an isomorphism from `a` to `b`. The name-preserving mapping
/// is tried first, so identical nets yield the identity.
pub fn find_isomorphism(a: &InhibitorNet, b: &InhibitorNet) -> Option<Isomorphism> {
    if a.places.len() != b.places.len() || a.transitions.len() != b.transitions.len() {
        return None;
    }
    let va = View::new(a);
    let vb = View::new(b);
    let (pa, pb, ta, tb) = refine(&va, &vb);
    let hist = |cols: &[usize]| {
        let mut c = cols.to_vec();
        c.sort_unstable();
        c
    };
    if hist(&pa) != hist(&pb) || hist(&ta) != hist(&tb) {
        return None;
    }
    let same_name = a.transitions.iter().map(|t| b.transition_index(t)).collect();
    let search = Search {
        prof_a: profile(&va),
        prof_b: profile(&vb),
        a: va,
        b: vb,
        ta_col: ta,
        tb_col: tb,
        same_name,
    };
    // Most constrained colours first.
    let mut order: Vec<usize> = (0..a.transitions.len()).collect();
    let freq = |c: usize| search.ta_col.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&i| (freq(search.ta_col[i]), i));
    let mut map = vec![None; a.transitions.len()];
    let mut used = vec![false; b.transitions.len()];
    let tmap = search.run(&order, &mut map, &mut used, 0)?;

    // Pair places with equal signatures, preferring equal names.
    let mut pool: BTreeMap<(u32, [Vec<usize>; 3]), Vec<usize>> = BTreeMap::new();
    for s in 0..b.places.len() {
        pool.entry(search.place_sig(&search.b, s, None)).or_default().push(s);
    }
    let mut places = BTreeMap::new();
    for s in 0..a.places.len() {
        let bucket = pool.get_mut(&search.place_sig(&search.a, s, Some(&tmap)))?;
        let pick = bucket.iter().position(|&x| b.places[x] == a.places[s]).unwrap_or(0);
        let target = bucket.remove(pick);
        places.insert(a.places[s].clone(), b.places[target].clone());
    }
    let transitions = tmap
        .iter()
        .enumerate()
        .map(|(i, &j)| (a.transitions[i].clone(), b.transitions[j].clone()))
        .collect();
    Some(Isomorphism { places, transitions })
}

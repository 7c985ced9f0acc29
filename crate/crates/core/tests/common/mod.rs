//! Brute-force reference implementations shared by the integration tests.
//! Everything here works label by label from the definitions and avoids the
//! crate's bitset fast paths.

#![allow(dead_code)]

use argagg::{ArgumentationFramework, Label, Labeling, LabelingSpace, MeasureKind};

pub fn attackers(af: &ArgumentationFramework, a: usize) -> Vec<usize> {
    (0..af.len()).filter(|&b| af.attacks_between(b, a)).collect()
}

pub fn is_admissible(af: &ArgumentationFramework, l: &Labeling) -> bool {
    (0..af.len()).all(|a| match l.get(a) {
        Label::In => attackers(af, a).iter().all(|&b| l.get(b) == Label::Out),
        Label::Out => attackers(af, a).iter().any(|&b| l.get(b) == Label::In),
        Label::Undec => true,
    })
}

pub fn is_complete(af: &ArgumentationFramework, l: &Labeling) -> bool {
    is_admissible(af, l)
        && (0..af.len()).all(|a| {
            l.get(a) != Label::Undec || {
                let att = attackers(af, a);
                !att.iter().all(|&b| l.get(b) == Label::Out) && !att.iter().any(|&b| l.get(b) == Label::In)
            }
        })
}

pub fn labelings(n: usize) -> Vec<Labeling> {
    LabelingSpace::new(n).collect()
}

pub fn admissible(af: &ArgumentationFramework) -> Vec<Labeling> {
    labelings(af.len()).into_iter().filter(|l| is_admissible(af, l)).collect()
}

pub fn complete(af: &ArgumentationFramework) -> Vec<Labeling> {
    labelings(af.len()).into_iter().filter(|l| is_complete(af, l)).collect()
}

/// `a ⊑ b`, label by label.
pub fn leq(a: &Labeling, b: &Labeling) -> bool {
    (0..a.len()).all(|i| a.get(i) == Label::Undec || a.get(i) == b.get(i))
}

pub fn compatible(a: &Labeling, b: &Labeling) -> bool {
    (0..a.len()).all(|i| !matches!((a.get(i), b.get(i)), (Label::In, Label::Out) | (Label::Out, Label::In)))
}

/// The element of `among` that every other element is below, if any.
pub fn greatest(among: &[Labeling]) -> Option<Labeling> {
    among.iter().copied().find(|g| among.iter().all(|x| leq(x, g)))
}

pub fn least(among: &[Labeling]) -> Option<Labeling> {
    among.iter().copied().find(|g| among.iter().all(|x| leq(g, x)))
}

pub fn greatest_admissible_below(af: &ArgumentationFramework, adm: &[Labeling], l: &Labeling) -> Labeling {
    let below: Vec<Labeling> = adm.iter().copied().filter(|x| leq(x, l)).collect();
    let _ = af;
    greatest(&below).expect("the admissible labelings below any labeling have a maximum")
}

pub fn least_complete_above(comp: &[Labeling], l: &Labeling) -> Option<Labeling> {
    let above: Vec<Labeling> = comp.iter().copied().filter(|x| leq(l, x)).collect();
    least(&above)
}

pub fn meet(ballots: &[Labeling]) -> Labeling {
    let n = ballots[0].len();
    let labels: Vec<Label> = (0..n)
        .map(|i| {
            let first = ballots[0].get(i);
            if first != Label::Undec && ballots.iter().all(|b| b.get(i) == first) {
                first
            } else {
                Label::Undec
            }
        })
        .collect();
    Labeling::from_labels(&labels)
}

pub fn join(ballots: &[Labeling]) -> Labeling {
    let n = ballots[0].len();
    let labels: Vec<Label> = (0..n)
        .map(|i| {
            let has_in = ballots.iter().any(|b| b.get(i) == Label::In);
            let has_out = ballots.iter().any(|b| b.get(i) == Label::Out);
            match (has_in, has_out) {
                (true, false) => Label::In,
                (false, true) => Label::Out,
                _ => Label::Undec,
            }
        })
        .collect();
    Labeling::from_labels(&labels)
}

/// Issues as sorted member lists, from a scan of the complete labelings.
pub fn issues(af: &ArgumentationFramework) -> Vec<Vec<usize>> {
    let comp = complete(af);
    let in_sync = |a: usize, b: usize| {
        comp.iter().all(|l| l.get(a) == l.get(b)) || comp.iter().all(|l| l.get(a) == l.get(b).mirror())
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for a in 0..af.len() {
        match blocks.iter_mut().find(|blk| in_sync(blk[0], a)) {
            Some(blk) => blk.push(a),
            None => blocks.push(vec![a]),
        }
    }
    blocks
}

pub fn hamming(a: &Labeling, b: &Labeling) -> Vec<usize> {
    (0..a.len()).filter(|&i| a.get(i) != b.get(i)).collect()
}

fn clash(x: Label, y: Label) -> bool {
    matches!((x, y), (Label::In, Label::Out) | (Label::Out, Label::In))
}

/// Per-argument distance with `undec` midway: 0, 1, or `alpha` for in against out.
pub fn label_distance(x: Label, y: Label, alpha: f64) -> f64 {
    if x == y {
        0.0
    } else if clash(x, y) {
        alpha
    } else {
        1.0
    }
}

/// Distance from the definitions: arguments or issues count once, io clashes count `alpha`.
pub fn distance(kind: MeasureKind, a: &Labeling, b: &Labeling, blocks: &[Vec<usize>], alpha: f64) -> f64 {
    let singletons: Vec<Vec<usize>> = (0..a.len()).map(|i| vec![i]).collect();
    let units = match kind {
        MeasureKind::Hs | MeasureKind::Hd | MeasureKind::IuoHs | MeasureKind::IuoHd => &singletons,
        _ => blocks,
    };
    units
        .iter()
        .map(|u| {
            let worst = u.iter().map(|&i| label_distance(a.get(i), b.get(i), alpha)).fold(0.0, f64::max);
            if kind.is_iuo() {
                worst
            } else if worst > 0.0 {
                1.0
            } else {
                0.0
            }
        })
        .sum()
}

/// `(io, du)` unit indices for the IUO set measures.
pub fn iuo_units(a: &Labeling, b: &Labeling, units: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut io = Vec::new();
    let mut du = Vec::new();
    for (k, u) in units.iter().enumerate() {
        if u.iter().any(|&i| clash(a.get(i), b.get(i))) {
            io.push(k);
        } else if u.iter().any(|&i| a.get(i) != b.get(i)) {
            du.push(k);
        }
    }
    (io, du)
}

pub fn units_differing(a: &Labeling, b: &Labeling, units: &[Vec<usize>]) -> Vec<usize> {
    (0..units.len()).filter(|&k| units[k].iter().any(|&i| a.get(i) != b.get(i))).collect()
}

fn subset(x: &[usize], y: &[usize]) -> bool {
    x.iter().all(|i| y.contains(i))
}

/// Whether an agent with top `top` weakly prefers `l1` to `l2`.
pub fn weak_prefers(kind: MeasureKind, top: &Labeling, l1: &Labeling, l2: &Labeling, blocks: &[Vec<usize>], alpha: f64) -> bool {
    let singletons: Vec<Vec<usize>> = (0..top.len()).map(|i| vec![i]).collect();
    let units = match kind {
        MeasureKind::Hs | MeasureKind::Hd | MeasureKind::IuoHs | MeasureKind::IuoHd => &singletons,
        _ => blocks,
    };
    match kind {
        MeasureKind::Hs | MeasureKind::Iws => {
            subset(&units_differing(top, l1, units), &units_differing(top, l2, units))
        }
        MeasureKind::IuoHs | MeasureKind::IuoIws => {
            let (io1, du1) = iuo_units(top, l1, units);
            let (io2, du2) = iuo_units(top, l2, units);
            subset(&io1, &io2) && subset(&du1, &du2)
        }
        _ => distance(kind, top, l1, blocks, alpha) <= distance(kind, top, l2, blocks, alpha),
    }
}

pub fn strictly_prefers(kind: MeasureKind, top: &Labeling, l1: &Labeling, l2: &Labeling, blocks: &[Vec<usize>], alpha: f64) -> bool {
    weak_prefers(kind, top, l1, l2, blocks, alpha) && !weak_prefers(kind, top, l2, l1, blocks, alpha)
}

/// `l1` Pareto dominates `l2` for agents `(top, class)`.
pub fn dominates(agents: &[(Labeling, MeasureKind)], l1: &Labeling, l2: &Labeling, blocks: &[Vec<usize>], alpha: f64) -> bool {
    agents.iter().all(|(t, k)| weak_prefers(*k, t, l1, l2, blocks, alpha))
        && agents.iter().any(|(t, k)| strictly_prefers(*k, t, l1, l2, blocks, alpha))
}

pub fn skeptical(af: &ArgumentationFramework, ballots: &[Labeling]) -> Labeling {
    greatest_admissible_below(af, &admissible(af), &meet(ballots))
}

//! Exact Hopf axiom verification over basis triples with sparse
//! contraction. Failures carry a witness: the offending basis indices and
//! the nonzero residual scalar.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNumber;
use crate::report::VerificationReport;

use super::FinHopfAlgebra;

type SparseVec = BTreeMap<u32, CycNumber>;
type SparseTwoLeg = BTreeMap<(u32, u32), CycNumber>;

fn acc(map: &mut SparseVec, key: u32, val: CycNumber) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().try_add(&val).expect("uniform order");
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
    }
}

fn acc2(map: &mut SparseTwoLeg, key: (u32, u32), val: CycNumber) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().try_add(&val).expect("uniform order");
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
    }
}

/// First difference between two sparse accumulations, as (key, residual).
fn sparse_diff<K: Ord + Copy>(
    lhs: &BTreeMap<K, CycNumber>,
    rhs: &BTreeMap<K, CycNumber>,
) -> Option<(K, CycNumber)> {
    for (k, v) in lhs {
        match rhs.get(k) {
            Some(w) if w == v => {}
            Some(w) => return Some((*k, v.try_sub(w).expect("uniform order"))),
            None => return Some((*k, v.clone())),
        }
    }
    for (k, w) in rhs {
        if !lhs.contains_key(k) {
            return Some((*k, w.neg()));
        }
    }
    None
}

/// Checks every Hopf axiom exactly: associativity, unit, coassociativity,
/// counit, Δ and ε multiplicative, and both antipode identities when an
/// antipode is present. Failures are report entries, never errors.
pub fn verify_axioms(h: &FinHopfAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new();
    let d = h.dim();
    let order = h.cyc_order();

    // Pair products e_i e_j as sparse vectors, grouped once.
    let mut pair_products: Vec<SparseVec> = vec![SparseVec::new(); d * d];
    for (&(i, j, k), c) in h.mult().iter() {
        pair_products[i as usize * d + j as usize].insert(k, c.clone());
    }
    let comult_by_source = h.comult().grouped_by_first();

    // Associativity: (e_i e_j) e_k = e_i (e_j e_k).
    'assoc: {
        for i in 0..d {
            for j in 0..d {
                let w = &pair_products[i * d + j];
                for k in 0..d {
                    let mut lhs = SparseVec::new();
                    for (&m, v) in w {
                        for (&t, u) in &pair_products[m as usize * d + k] {
                            acc(&mut lhs, t, v * u);
                        }
                    }
                    let mut rhs = SparseVec::new();
                    for (&m, v) in &pair_products[j * d + k] {
                        for (&t, u) in &pair_products[i * d + m as usize] {
                            acc(&mut rhs, t, v * u);
                        }
                    }
                    if let Some((l, residual)) = sparse_diff(&lhs, &rhs) {
                        report.fail(
                            "axiom-associativity",
                            format!("(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k}) at output e{l}"),
                            residual.to_string(),
                        );
                        break 'assoc;
                    }
                }
            }
        }
        report.pass("axiom-associativity");
    }

    // Unit: 1·e_j = e_j = e_j·1.
    'unit: {
        let left = h.left_mult_matrix(h.unit_vector());
        if !left.is_identity() {
            let (i, j, residual) = first_matrix_defect(&left, d, order);
            report.fail(
                "axiom-unit",
                format!("1·e{j} has wrong e{i} coefficient"),
                residual.to_string(),
            );
            break 'unit;
        }
        let right = h.right_mult_matrix(h.unit_vector());
        if !right.is_identity() {
            let (i, j, residual) = first_matrix_defect(&right, d, order);
            report.fail(
                "axiom-unit",
                format!("e{j}·1 has wrong e{i} coefficient"),
                residual.to_string(),
            );
            break 'unit;
        }
        report.pass("axiom-unit");
    }

    // Coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ on every basis element.
    'coassoc: {
        for k in 0..d {
            let mut lhs: BTreeMap<(u32, u32, u32), CycNumber> = BTreeMap::new();
            let mut rhs: BTreeMap<(u32, u32, u32), CycNumber> = BTreeMap::new();
            for &(m, w, c1) in &comult_by_source[k] {
                for &(u, v, c2) in &comult_by_source[m as usize] {
                    let val = c1 * c2;
                    if !val.is_zero() {
                        let e = lhs.entry((u, v, w)).or_insert_with(|| CycNumber::zero(order));
                        *e = &*e + &val;
                    }
                }
            }
            for &(u, m, c1) in &comult_by_source[k] {
                for &(v, w, c2) in &comult_by_source[m as usize] {
                    let val = c1 * c2;
                    if !val.is_zero() {
                        let e = rhs.entry((u, v, w)).or_insert_with(|| CycNumber::zero(order));
                        *e = &*e + &val;
                    }
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            if let Some(((u, v, w), residual)) = sparse_diff(&lhs, &rhs) {
                report.fail(
                    "axiom-coassociativity",
                    format!("Δ²(e{k}) differs at e{u}⊗e{v}⊗e{w}"),
                    residual.to_string(),
                );
                break 'coassoc;
            }
        }
        report.pass("axiom-coassociativity");
    }

    // Counit: (ε⊗id)Δ = id = (id⊗ε)Δ.
    'counit: {
        for k in 0..d {
            let mut left = vec![CycNumber::zero(order); d];
            let mut right = vec![CycNumber::zero(order); d];
            for &(i, j, c) in &comult_by_source[k] {
                let ei = &h.counit_vector()[i as usize];
                if !ei.is_zero() {
                    left[j as usize] = &left[j as usize] + &(ei * c);
                }
                let ej = &h.counit_vector()[j as usize];
                if !ej.is_zero() {
                    right[i as usize] = &right[i as usize] + &(ej * c);
                }
            }
            for t in 0..d {
                let expect = if t == k {
                    CycNumber::one(order)
                } else {
                    CycNumber::zero(order)
                };
                if left[t] != expect {
                    report.fail(
                        "axiom-counit",
                        format!("(ε⊗id)Δ(e{k}) differs at e{t}"),
                        (&left[t] - &expect).to_string(),
                    );
                    break 'counit;
                }
                if right[t] != expect {
                    report.fail(
                        "axiom-counit",
                        format!("(id⊗ε)Δ(e{k}) differs at e{t}"),
                        (&right[t] - &expect).to_string(),
                    );
                    break 'counit;
                }
            }
        }
        report.pass("axiom-counit");
    }

    // Δ is an algebra map: Δ(e_i e_j) = Δ(e_i)Δ(e_j), Δ(1) = 1⊗1.
    'comult_alg: {
        let mut delta_one = SparseTwoLeg::new();
        for (k, uk) in h.unit_vector().iter().enumerate() {
            if uk.is_zero() {
                continue;
            }
            for &(i, j, c) in &comult_by_source[k] {
                acc2(&mut delta_one, (i, j), uk * c);
            }
        }
        let mut one_one = SparseTwoLeg::new();
        for (i, ui) in h.unit_vector().iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, uj) in h.unit_vector().iter().enumerate() {
                if uj.is_zero() {
                    continue;
                }
                acc2(&mut one_one, (i as u32, j as u32), ui * uj);
            }
        }
        if let Some(((i, j), residual)) = sparse_diff(&delta_one, &one_one) {
            report.fail(
                "axiom-comult-algebra-map",
                format!("Δ(1) ≠ 1⊗1 at e{i}⊗e{j}"),
                residual.to_string(),
            );
            break 'comult_alg;
        }
        for i in 0..d {
            for j in 0..d {
                let mut lhs = SparseTwoLeg::new();
                for (&m, v) in &pair_products[i * d + j] {
                    for &(u, w, c) in &comult_by_source[m as usize] {
                        acc2(&mut lhs, (u, w), v * c);
                    }
                }
                let mut rhs = SparseTwoLeg::new();
                for &(u1, v1, c1) in &comult_by_source[i] {
                    for &(u2, v2, c2) in &comult_by_source[j] {
                        let c12 = c1 * c2;
                        for (&ku, wu) in &pair_products[u1 as usize * d + u2 as usize] {
                            let c12wu = &c12 * wu;
                            for (&kv, wv) in &pair_products[v1 as usize * d + v2 as usize] {
                                acc2(&mut rhs, (ku, kv), &c12wu * wv);
                            }
                        }
                    }
                }
                if let Some(((u, v), residual)) = sparse_diff(&lhs, &rhs) {
                    report.fail(
                        "axiom-comult-algebra-map",
                        format!("Δ(e{i}·e{j}) ≠ Δ(e{i})Δ(e{j}) at e{u}⊗e{v}"),
                        residual.to_string(),
                    );
                    break 'comult_alg;
                }
            }
        }
        report.pass("axiom-comult-algebra-map");
    }

    // ε is an algebra map: ε(e_i e_j) = ε(e_i)ε(e_j), ε(1) = 1.
    'counit_alg: {
        let eps_one = h.counit_of(h.unit_vector());
        if !eps_one.is_one() {
            report.fail(
                "axiom-counit-algebra-map",
                "ε(1) ≠ 1",
                (&eps_one - &CycNumber::one(order)).to_string(),
            );
            break 'counit_alg;
        }
        for i in 0..d {
            for j in 0..d {
                let mut lhs = CycNumber::zero(order);
                for (&m, v) in &pair_products[i * d + j] {
                    let em = &h.counit_vector()[m as usize];
                    if !em.is_zero() {
                        lhs = &lhs + &(v * em);
                    }
                }
                let rhs = &h.counit_vector()[i] * &h.counit_vector()[j];
                if lhs != rhs {
                    report.fail(
                        "axiom-counit-algebra-map",
                        format!("ε(e{i}·e{j}) ≠ ε(e{i})ε(e{j})"),
                        (&lhs - &rhs).to_string(),
                    );
                    break 'counit_alg;
                }
            }
        }
        report.pass("axiom-counit-algebra-map");
    }

    // Antipode identities, when an antipode is present.
    match h.antipode() {
        None => {
            report.skip("axiom-antipode-left", "no antipode present");
            report.skip("axiom-antipode-right", "no antipode present");
        }
        Some(s) => {
            let mut fail_left = None;
            let mut fail_right = None;
            for k in 0..d {
                let mut left = vec![CycNumber::zero(order); d];
                let mut right = vec![CycNumber::zero(order); d];
                for &(i, j, c) in &comult_by_source[k] {
                    // Σ S(e_i)·e_j
                    let s_col: Vec<CycNumber> =
                        (0..d).map(|r| s.at(r, i as usize).clone()).collect();
                    for (r, sv) in s_col.iter().enumerate() {
                        if sv.is_zero() {
                            continue;
                        }
                        for (&t, w) in &pair_products[r * d + j as usize] {
                            left[t as usize] = &left[t as usize] + &(&(c * sv) * w);
                        }
                    }
                    // Σ e_i·S(e_j)
                    let s_col: Vec<CycNumber> =
                        (0..d).map(|r| s.at(r, j as usize).clone()).collect();
                    for (r, sv) in s_col.iter().enumerate() {
                        if sv.is_zero() {
                            continue;
                        }
                        for (&t, w) in &pair_products[i as usize * d + r] {
                            right[t as usize] = &right[t as usize] + &(&(c * sv) * w);
                        }
                    }
                }
                let eps_k = &h.counit_vector()[k];
                for t in 0..d {
                    let expect = eps_k * &h.unit_vector()[t];
                    if fail_left.is_none() && left[t] != expect {
                        fail_left = Some((k, t, &left[t] - &expect));
                    }
                    if fail_right.is_none() && right[t] != expect {
                        fail_right = Some((k, t, &right[t] - &expect));
                    }
                }
                if fail_left.is_some() && fail_right.is_some() {
                    break;
                }
            }
            match fail_left {
                None => report.pass("axiom-antipode-left"),
                Some((k, t, residual)) => report.fail(
                    "axiom-antipode-left",
                    format!("Σ S(e_(1))e_(2) ≠ ε·1 on e{k} at e{t}"),
                    residual.to_string(),
                ),
            }
            match fail_right {
                None => report.pass("axiom-antipode-right"),
                Some((k, t, residual)) => report.fail(
                    "axiom-antipode-right",
                    format!("Σ e_(1)S(e_(2)) ≠ ε·1 on e{k} at e{t}"),
                    residual.to_string(),
                ),
            }
        }
    }

    report
}

fn first_matrix_defect(
    m: &crate::linalg::FieldMatrix,
    d: usize,
    order: u32,
) -> (usize, usize, CycNumber) {
    for i in 0..d {
        for j in 0..d {
            let expect = if i == j {
                CycNumber::one(order)
            } else {
                CycNumber::zero(order)
            };
            if m.at(i, j) != &expect {
                return (i, j, m.at(i, j) - &expect);
            }
        }
    }
    unreachable!("called only on defective matrices")
}

//! Literal finite-orbit data for four punctures: linear parts, special
//! translation parts and orbit sizes.

use crate::cyclo::{z, Cyclotomic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Reducible,
    Imprimitive,
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    /// `(τ_1,…,τ_4)` as printed; `None` stands for "other orbits".
    pub tau: Option<Vec<Cyclotomic>>,
    pub size: u64,
}

#[derive(Clone, Debug)]
pub struct TableCase {
    pub id: String,
    pub family: Family,
    pub lambda: Vec<Cyclotomic>,
    pub rows: Vec<TableRow>,
}

fn c(k: i64) -> Cyclotomic {
    Cyclotomic::from_int(k)
}

fn row(tau: [Cyclotomic; 4], size: u64) -> TableRow {
    TableRow { tau: Some(tau.to_vec()), size }
}

fn other(size: u64) -> TableRow {
    TableRow { tau: None, size }
}

/// Imprimitive case `(a, −a⁻¹, −a⁻¹, a)` for a root of unity `a` with `a² ≠ 1`.
pub fn imprimitive_case(id: &str, a: &Cyclotomic) -> TableCase {
    let ai = a.inv();
    let a2 = a * a;
    let m = a2.order_of_root().expect("a must be a root of unity");
    let second = if m % 2 == 0 { [c(0), c(1), c(0), -&a2] } else { [c(0), c(2), &c(1) + a, a - &a2] };
    TableCase {
        id: id.into(),
        family: Family::Imprimitive,
        lambda: vec![a.clone(), -&ai, -&ai, a.clone()],
        rows: vec![row([c(0), c(1), a.clone(), c(0)], 2), row([c(0), c(0), c(1), a.clone()], m), row(second, m), other(2 * m)],
    }
}

/// Reducible case `(1, 1, a, a⁻¹)` with `a` a root of unity of order k.
pub fn reducible_pair_case(id: &str, a: &Cyclotomic) -> TableCase {
    let k = a.order_of_root().expect("a must be a root of unity");
    TableCase {
        id: id.into(),
        family: Family::Reducible,
        lambda: vec![c(1), c(1), a.clone(), a.inv()],
        rows: vec![row([c(0), c(1), c(-1), c(0)], 1), row([c(1), c(0), c(-1), c(0)], 1), other(k)],
    }
}

/// Reducible case `(1, λ_2, λ_3, λ_4)` with all `λ_i ≠ 1`; other orbits are infinite.
pub fn reducible_triple_case(id: &str, l2: &Cyclotomic, l3: &Cyclotomic) -> TableCase {
    let l4 = (l2 * l3).inv();
    TableCase {
        id: id.into(),
        family: Family::Reducible,
        lambda: vec![c(1), l2.clone(), l3.clone(), l4],
        rows: vec![row([c(0), c(0), -l3, c(1)], 1)],
    }
}

pub fn tetrahedral_cases() -> Vec<TableCase> {
    let eta = z(12, 1);
    let e = |k: i64| eta.pow(k);
    let first = TableCase {
        id: "tetra-1".into(),
        family: Family::Tetrahedral,
        lambda: vec![e(1), e(5), e(3), e(3)],
        rows: vec![
            row([e(3), c(0), c(0), c(1)], 4),
            row([c(0), e(5), c(-1), c(0)], 4),
            row([c(0), c(0), e(3), c(-1)], 6),
            other(12),
        ],
    };
    let zeta = z(6, 1);
    let zp = |k: i64| zeta.pow(k);
    let second = TableCase {
        id: "tetra-2".into(),
        family: Family::Tetrahedral,
        lambda: vec![c(-1), zp(1), zp(1), zp(1)],
        rows: vec![
            row([c(0), c(0), zp(1), c(-1)], 4),
            row([c(0), &c(1) - &zp(2), zp(1), zp(1)], 4),
            row([c(0), c(1), &zp(1) + &eta, &(&(&zp(2) * &eta) + &zp(1)) - &c(1)], 6),
            other(12),
        ],
    };
    vec![first, second]
}

pub fn octahedral_cases() -> Vec<TableCase> {
    let eta = z(24, 1);
    let e = |k: i64| eta.pow(k);
    let first = TableCase {
        id: "octa-1".into(),
        family: Family::Octahedral,
        lambda: vec![e(1), e(5), e(7), e(11)],
        rows: vec![
            row([c(0), c(0), c(1), e(5)], 6),
            row([c(0), c(1), c(0), c(1)], 8),
            row([e(1), c(0), c(0), c(1)], 12),
            other(24),
        ],
    };
    let eta = z(12, 1);
    let e = |k: i64| eta.pow(k);
    let nu = z(24, 1);
    let second = TableCase {
        id: "octa-2".into(),
        family: Family::Octahedral,
        lambda: vec![e(1), -&e(1), e(2), e(2)],
        rows: vec![
            row([e(4), c(0), c(0), c(1)], 6),
            row([c(0), c(0), e(2), c(-1)], 8),
            row([c(0), &nu + &e(3), nu.inv(), c(1)], 12),
            other(24),
        ],
    };
    vec![first, second]
}

pub fn icosahedral_cases() -> Vec<TableCase> {
    let mut out = Vec::new();
    let beta = z(60, 1);
    let b = |k: i64| beta.pow(k);

    let a = |k: i64| b(k);
    out.push(TableCase {
        id: "icosa-1".into(),
        family: Family::Icosahedral,
        lambda: vec![a(1), a(29), a(11), a(19)],
        rows: vec![
            row([c(0), c(1), c(0), a(50)], 12),
            row([c(1), c(0), c(0), a(49)], 20),
            row([c(0), c(0), c(1), a(19)], 30),
            other(60),
        ],
    });

    let a = |k: i64| b(3 * k);
    let bt = b(1);
    out.push(TableCase {
        id: "icosa-2".into(),
        family: Family::Icosahedral,
        lambda: vec![a(1), a(9), a(7), a(3)],
        rows: vec![
            row([a(12), c(0), c(0), a(5)], 12),
            row([c(0), &(&(&bt + &a(5)) + &a(2)) + &a(1), &c(1) + &a(3), &(&bt + &a(1)) * &(&c(1) - &(&a(3) * &bt))], 20),
            row([c(0), c(0), a(17), c(1)], 30),
            other(60),
        ],
    });

    let a = |k: i64| b(2 * k);
    out.push(TableCase {
        id: "icosa-3".into(),
        family: Family::Icosahedral,
        lambda: vec![a(9), a(9), a(1), a(11)],
        rows: vec![
            row([c(0), c(0), a(16), c(1)], 12),
            row([a(10), c(0), c(0), a(6)], 20),
            row(
                [
                    c(0),
                    &(&a(1) + &c(1)) * &(&a(11) + &c(1)),
                    &(&(&bt + &a(14)) - &a(5)) + &a(4),
                    &(&(&bt + &c(1)) * &a(14)) + &a(4),
                ],
                30,
            ),
            other(60),
        ],
    });

    out.push(TableCase {
        id: "icosa-4".into(),
        family: Family::Icosahedral,
        lambda: vec![a(5), a(5), a(1), a(19)],
        rows: vec![
            row([a(11), c(0), c(0), c(-1)], 12),
            row([c(0), c(0), c(1), a(14)], 20),
            row([c(0), c(1), &a(5) * &(&c(1) + &bt), &a(4) * &(&a(10) - &bt)], 30),
            other(60),
        ],
    });

    let a = |k: i64| b(4 * k);
    out.push(TableCase {
        id: "icosa-5".into(),
        family: Family::Icosahedral,
        lambda: vec![a(1), a(4), a(2), a(8)],
        rows: vec![
            row([a(12), c(0), c(0), -&a(5)], 12),
            row([c(0), c(0), a(2), c(-1)], 20),
            row(
                [c(0), &(&(&(&(&b(56) + &b(13)) + &b(12)) + &b(8)) - &b(6)) - &b(2), &c(1) + &b(22), &(&b(19) + &b(18)) - &b(8)],
                30,
            ),
            other(60),
        ],
    });

    let a = |k: i64| b(12 * k);
    let g = |k: i64| b(2 * k);
    out.push(TableCase {
        id: "icosa-6".into(),
        family: Family::Icosahedral,
        lambda: vec![-&a(1), -&a(1), -&a(1), -&a(2)],
        rows: vec![
            row([c(0), c(0), a(1), c(1)], 12),
            row([c(0), &(&g(5) + &g(4)) - &c(1), &(&g(4) + &g(1)) - &a(1), &(&a(1) * &g(1)) - &g(5)], 20),
            row([c(0), &(&b(11) + &b(9)) - &b(1), &b(9) - &c(1), &a(1) * &(&b(6) + &b(3))], 30),
            other(60),
        ],
    });
    out
}

/// Cases checked by the acceptance run for the imprimitive table.
pub fn imprimitive_examples() -> Vec<TableCase> {
    vec![imprimitive_case("imprim-a10", &z(10, 1)), imprimitive_case("imprim-a8", &z(8, 1))]
}

/// All literal platonic cases.
pub fn platonic_cases() -> Vec<TableCase> {
    let mut v = tetrahedral_cases();
    v.extend(octahedral_cases());
    v.extend(icosahedral_cases());
    v
}

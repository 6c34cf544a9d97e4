//! The eight acceptance criteria. Each prints one PASS/FAIL line followed
//! by its first divergences, naming the subject and cell; the run exits
//! nonzero if any criterion fails.
//!
//! 1. golden tables, every cell, under 2 s
//! 2. sequence prefixes
//! 3. generating-function identities up to order 12
//! 4. Euler transform of the f=1 columns up to order 11
//! 5. brute-force oracles against the recurrence triangles, under 60 s
//! 6. flip clusters for N=0..8, under 10 s
//! 7. structural identities
//! 8. codec examples and round trips for N<=7
use std::fmt::Display;
use std::time::{Duration, Instant};

use circle_topo::expr::{
    decode_base4, decode_binary, encode_base4, encode_base4_str, encode_binary, encode_binary_str,
    enumerate_family, flip_clusters,
};
use circle_topo::golden;
use circle_topo::intersect::IntersectCounts;
use circle_topo::partition::binomial;
use circle_topo::series::euler_transform;
use circle_topo::{marked, nested, Count, FamilyId, Series, Table};

struct Criterion {
    id: u32,
    title: &'static str,
    checks: usize,
    failures: Vec<String>,
    start: Instant,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Self {
            id,
            title,
            checks: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, subject: &str, at: &str, want: T, got: T) {
        self.checks += 1;
        if want != got {
            self.failures
                .push(format!("{subject} at {at}: expected {want}, got {got}"));
        }
    }

    fn within(&mut self, limit: Duration) {
        let took = self.start.elapsed();
        self.checks += 1;
        if took >= limit {
            self.failures
                .push(format!("runtime {took:?} exceeds {limit:?}"));
        }
    }

    fn report(self) -> bool {
        let ok = self.failures.is_empty();
        println!(
            "{} criterion {}: {} ({} checks, {} failing, {:.2?})",
            if ok { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks,
            self.failures.len(),
            self.start.elapsed()
        );
        for f in self.failures.iter().take(10) {
            println!("    {f}");
        }
        ok
    }
}

fn cell(n: usize, f: usize) -> String {
    format!("N={n}, f={f}")
}

fn series(t: &Table, order: usize) -> Series {
    Series::from_coeffs(t.totals().values()[..=order].to_vec(), order)
}

/// `1 / (1 - g)` for a series without constant term.
fn inverse_one_minus(g: &Series) -> Series {
    let mut acc = Series::one(g.order());
    let mut p = Series::one(g.order());
    for _ in 0..g.order() {
        p = p.mul(g).unwrap();
        acc = acc.add(&p).unwrap();
    }
    acc
}

/// `(f^2 + f(z^2)) / 2`: unordered pairs.
fn half_square(f: &Series) -> Series {
    f.mul(f)
        .unwrap()
        .add(&f.substitute_power(2))
        .unwrap()
        .div_exact(&Count::from(2u32), "half square")
        .unwrap()
}

fn criterion_1_golden_tables() -> Criterion {
    let mut c = Criterion::new(1, "golden tables reproduced cell by cell");
    let all = IntersectCounts::<Count>::compute(12).unwrap();
    for t in golden::tables() {
        let tri = match t.family {
            FamilyId::X => all.x.clone(),
            FamilyId::Xt => all.xt.clone(),
            FamilyId::X2 => all.x2.clone(),
            FamilyId::X3 => all.x3.clone(),
            fam => Table::compute(fam, t.max_n()).unwrap(),
        };
        for row in &t.rows {
            c.eq(
                t.name,
                &format!("N={}, total", row.n),
                row.total.clone(),
                tri.row_total(row.n),
            );
            for (i, want) in row.cells.iter().enumerate() {
                c.eq(
                    t.name,
                    &cell(row.n, i + 1),
                    want.clone(),
                    tri.cell(row.n, i + 1),
                );
            }
        }
    }
    c.within(Duration::from_secs(2));
    c
}

fn criterion_2_sequence_prefixes() -> Criterion {
    let mut c = Criterion::new(2, "sequence prefixes");
    let all = IntersectCounts::<Count>::compute(12).unwrap();
    let env = nested::envelope::<Count>(9).unwrap();
    for g in golden::sequences() {
        let got = match g.name.as_str() {
            "D" => &all.d.d,
            "Dhat" => &all.d.d_hat,
            "Dbar" => &all.d.d_bar,
            "Dtilde" => &all.d.d_tilde,
            "envelope" => &env,
            _ => continue,
        };
        assert!(got.len() >= g.values.len(), "{} is too short", g.name);
        for (i, want) in g.values.iter().enumerate() {
            c.eq(&g.name, &format!("n={i}"), want.clone(), got.get(i));
        }
    }
    c
}

fn criterion_3_generating_functions() -> Criterion {
    let mut c = Criterion::new(3, "generating-function identities to order 12");
    let n = 12;
    let all = IntersectCounts::<Count>::compute(n).unwrap();
    let cs = series(&Table::compute(FamilyId::C, n).unwrap(), n);
    let geo = inverse_one_minus(&cs.shift(1));
    let one = Series::one(n);

    let m = one
        .add(&cs.mul(&cs).unwrap().shift(1).mul(&geo).unwrap())
        .unwrap();
    let m_tri = Table::compute(FamilyId::M, n).unwrap();
    let m_lib = marked::m_series_identity::<Count>(n).unwrap();
    for i in 0..=n {
        c.eq(
            "M(z) library form",
            &format!("n={i}"),
            m_lib.coeff(i),
            m.coeff(i),
        );
        c.eq("M(z)", &format!("n={i}"), m_tri.row_total(i), m.coeff(i));
    }

    let d_hat = half_square(&cs);
    let d = cs.mul(&d_hat).unwrap();
    let x = d.mul(&cs).unwrap().shift(2).mul(&geo).unwrap();
    let xt = d_hat.mul(&cs).unwrap().shift(2).mul(&geo).unwrap();
    for i in 2..=n {
        c.eq("X(z)", &format!("n={i}"), all.x.row_total(i), x.coeff(i));
        c.eq("Xt(z)", &format!("n={i}"), all.xt.row_total(i), xt.coeff(i));
        // the bare-pair counts read off each table's first column
        let from_x = all.x.cell(i, 1) - all.x.row_total(i - 1);
        let from_xt = all.xt.cell(i, 1) - all.xt.row_total(i - 1);
        c.eq(
            "D = C*Dhat",
            &format!("n={}", i - 2),
            from_x,
            d.coeff(i - 2),
        );
        c.eq("Dhat", &format!("n={}", i - 2), from_xt, d_hat.coeff(i - 2));
    }

    let d_tilde = half_square(&series(&all.x2, n));
    let golden_tilde = golden::sequence("Dtilde").unwrap().values;
    for i in 0..=n {
        c.eq(
            "Dtilde",
            &format!("n={i}"),
            all.d.d_tilde.get(i),
            d_tilde.coeff(i),
        );
        if let Some(w) = golden_tilde.get(i) {
            c.eq(
                "Dtilde printed",
                &format!("n={i}"),
                w.clone(),
                d_tilde.coeff(i),
            );
        }
    }
    c
}

fn criterion_4_euler_transform() -> Criterion {
    let mut c = Criterion::new(4, "row totals are the Euler transform of column f=1");
    let n = 11;
    let all = IntersectCounts::<Count>::compute(n).unwrap();
    let tables = [
        ("C", Table::compute(FamilyId::C, n).unwrap()),
        ("kC k=2", Table::compute(FamilyId::KC(2), n).unwrap()),
        ("kC k=3", Table::compute(FamilyId::KC(3), n).unwrap()),
        ("X2", all.x2),
        ("X3", all.x3),
    ];
    for (name, t) in &tables {
        let e = euler_transform(&t.column1(), n).unwrap();
        for i in 0..=n {
            c.eq(name, &format!("n={i}"), t.row_total(i), e.coeff(i));
        }
    }
    c
}

fn criterion_5_oracle_equivalence() -> Criterion {
    let mut c = Criterion::new(5, "brute-force enumeration matches the recurrences");
    let limits = [
        (FamilyId::C, 7),
        (FamilyId::M, 7),
        (FamilyId::Mv, 7),
        (FamilyId::X, 7),
        (FamilyId::Xt, 7),
        (FamilyId::X2, 7),
        (FamilyId::X3, 6),
    ];
    for (fam, limit) in limits {
        let t = Table::compute(fam, limit).unwrap();
        for n in fam.first_index()..=limit {
            let e = enumerate_family(fam, n).unwrap();
            c.eq(
                fam.name(),
                &format!("N={n}, total"),
                t.row_total(n),
                Count::from(e.count()),
            );
            for f in 1..=n {
                c.eq(
                    fam.name(),
                    &cell(n, f),
                    t.cell(n, f),
                    Count::from(e.histogram[f]),
                );
            }
        }
    }
    c.within(Duration::from_secs(60));
    c
}

fn criterion_6_flip_clusters() -> Criterion {
    let mut c = Criterion::new(6, "flip clusters for N=0..8");
    let want = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
    for (n, w) in want.into_iter().enumerate() {
        c.eq(
            "clusters",
            &format!("N={n}"),
            w,
            flip_clusters(n).unwrap().len(),
        );
    }
    c.within(Duration::from_secs(10));
    c
}

fn criterion_7_structural_identities() -> Criterion {
    let mut c = Criterion::new(7, "structural identities");
    let n = 12;
    let all = IntersectCounts::<Count>::compute(n).unwrap();
    let m = Table::compute(FamilyId::M, n).unwrap();
    let mv = Table::compute(FamilyId::Mv, n).unwrap();
    let one = Count::from(1u32);
    for i in 1..=n {
        c.eq("M", &cell(i, i), one.clone(), m.cell(i, i));
    }
    for i in 2..=n {
        for t in [&all.x, &all.xt] {
            let name = t.family().name();
            c.eq(name, &cell(i, i), Count::from(0u32), t.cell(i, i));
            c.eq(name, &cell(i, i - 1), one.clone(), t.cell(i, i - 1));
        }
        c.eq(
            "Mv column 1 = Mv_{N-1}",
            &cell(i, 1),
            mv.row_total(i - 1),
            mv.cell(i, 1),
        );
        c.eq(
            "Mv column 2 = Mv column 1",
            &cell(i, 2),
            mv.cell(i, 1),
            mv.cell(i, 2),
        );
    }
    c.eq(
        "X3 - X2 at N=3",
        &cell(3, 1),
        Count::from(6u32),
        all.x3.cell(3, 1) - all.x2.cell(3, 1),
    );
    // stated as cell(N, N-1) = binom(N+k-1, k-1)
    for k in 1..=3u32 {
        let t = Table::compute(FamilyId::KC(k), n).unwrap();
        let ku = k as usize;
        for i in 2..=n {
            c.eq(
                &format!("kC k={k} diagonal"),
                &cell(i, i - 1),
                binomial::<Count>(i + ku - 1, ku - 1),
                t.cell(i, i - 1),
            );
        }
    }
    c
}

fn criterion_8_codecs() -> Criterion {
    let mut c = Criterion::new(8, "codec examples and round trips");
    let binary = [
        ("()", "10"),
        ("()()", "1010"),
        ("(())", "1100"),
        ("()()()", "101010"),
        ("()(())", "101100"),
        ("(())()", "110010"),
        ("(()())", "110100"),
        ("((()))", "111000"),
    ];
    for (e, want) in binary {
        c.eq(
            "binary",
            e,
            want.to_string(),
            encode_binary_str(e).unwrap().digits,
        );
    }
    c.eq(
        "binary value",
        "((()))",
        Count::from(56u32),
        encode_binary_str("((()))").unwrap().value,
    );
    for (e, want) in [("[[]]", "3322"), ("([[()]]())", "1331022100")] {
        c.eq("base4", e, want.to_string(), encode_base4_str(e).unwrap());
    }
    for n in 0..=7 {
        for e in enumerate_family(FamilyId::C, n).unwrap().exprs {
            let code = encode_binary(&e).unwrap();
            let back = decode_binary(&code.digits).unwrap();
            c.eq(
                "C round trip",
                &e.to_string(),
                e.to_string(),
                back.to_string(),
            );
        }
        if n >= 1 {
            for e in enumerate_family(FamilyId::M, n).unwrap().exprs {
                let back = decode_base4(&encode_base4(&e).unwrap()).unwrap();
                c.eq(
                    "M round trip",
                    &e.to_string(),
                    e.to_string(),
                    back.to_string(),
                );
            }
        }
    }
    c
}

fn main() {
    let criteria: [fn() -> Criterion; 8] = [
        criterion_1_golden_tables,
        criterion_2_sequence_prefixes,
        criterion_3_generating_functions,
        criterion_4_euler_transform,
        criterion_5_oracle_equivalence,
        criterion_6_flip_clusters,
        criterion_7_structural_identities,
        criterion_8_codecs,
    ];
    let failed = criteria.iter().filter(|run| !run().report()).count();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

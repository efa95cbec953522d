//! Published orbit-size tables for combs and zippers, and their reproduction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use super::theorems::multiset_notation;
use crate::dynamics::{k_orbits, lcm_all};
use crate::error::{Error, Result};
use crate::families;
use crate::par::Exec;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFamily {
    Comb,
    /// Bounded union of two open combs; the published zipper data.
    Zipper,
    /// Bounded union of two combs. No published data.
    ClosedZipper,
}

impl TableFamily {
    pub fn poset(self, n: usize) -> Result<Poset> {
        match self {
            TableFamily::Comb => families::comb(n),
            TableFamily::Zipper => families::open_zipper(n),
            TableFamily::ClosedZipper => families::zipper(n),
        }
    }

    pub fn name(self, n: usize) -> String {
        match self {
            TableFamily::Comb => format!("C_{n}"),
            TableFamily::Zipper => format!("Z_{n}"),
            TableFamily::ClosedZipper => format!("Z̄_{n}"),
        }
    }
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "comb" => Ok(TableFamily::Comb),
            "zipper" => Ok(TableFamily::Zipper),
            "closed-zipper" => Ok(TableFamily::ClosedZipper),
            _ => Err(Error::Parse(format!("unknown table family {s:?} (comb, zipper, closed-zipper)"))),
        }
    }
}

struct PublishedRow {
    n: usize,
    m: usize,
    sizes: &'static str,
    order: u64,
}

const fn row(n: usize, m: usize, sizes: &'static str, order: u64) -> PublishedRow {
    PublishedRow { n, m, sizes, order }
}

// verbatim, including entry order and notation
const COMB_TABLE: &[PublishedRow] = &[
    row(3, 4, "6^1", 6),
    row(3, 5, "8^1, 12^1", 24),
    row(3, 6, "15^1", 15),
    row(4, 5, "12^2", 12),
    row(4, 6, "15^2, 40^1, 60^1", 60),
    row(4, 7, "30^3, 48^1, 72^1", 720),
    row(4, 8, "35^3", 35),
    row(5, 6, "60^2", 60),
    row(5, 7, "30^6, 60^6, 72^2, 120^2", 360),
    row(5, 8, "35^6, 70^6, 140^2, 210^3, 336^1, 504^1", 5040),
    row(5, 9, "240^3, 280^3, 384^1, 576^1", 40320),
    row(5, 10, "315^3", 315),
    row(6, 7, "60^{12}", 60),
    row(6, 8, "70^{12}, 210^6, 420^6, 504^2, 840^2", 2520),
    row(6, 9, "240^6, 280^{26}, 336^8, 480^6, 504^8, 576^2, 840^6, 960^2", 20160),
    row(6, 10, "315^{26}, 378^8, 567^8, 576^9, 945^6, 720^9, 1152^3, 2520^3", 362880),
    row(6, 11, "630^{15}, 640^9, 800^9, 1280^3, 2800^3", 403200),
    row(6, 12, "693^{15}", 693),
];

const ZIPPER_TABLE: &[PublishedRow] = &[
    row(1, 3, "1^1", 1),
    row(1, 4, "2^2, 3^2, 6^2", 6),
    row(1, 5, "2^1, 4^1, 8^{12}", 8),
    row(1, 6, "10^{16}", 10),
    row(1, 7, "4^2, 12^6", 12),
    row(2, 4, "2^2", 2),
    row(2, 5, "3^3, 6^{12}, 8^6, 24^6", 24),
    row(2, 6, "8^8, 10^{12}, 15^{108}, 30^{36}, 40^8, 120^6", 120),
    row(2, 7, "4^2, 9^{54}, 12^6, 18^{378}, 36^{60}, 48^{80}. 144^{60}", 144),
    row(2, 8, "21^{540}, 42^{30}, 56^{300}, 168^{180}", 168),
    row(2, 9, "6^3, 12^{39}, 24^{216}, 64^{588}, 192^{210}", 192),
    row(2, 10, "72^{560}, 2216^{84}", 216),
    row(2, 11, "16^8, 80^{200}", 80),
];

/// A known typo in a published row together with its corrected reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub n: usize,
    pub m: usize,
    pub corrected: &'static str,
    pub note: &'static str,
}

pub const ZIPPER_ERRATA: &[Erratum] = &[
    Erratum {
        n: 2,
        m: 7,
        corrected: "4^2, 9^{54}, 12^6, 18^{378}, 36^{60}, 48^{80}, 144^{60}",
        note: "period between 48^{80} and 144^{60} read as a comma",
    },
    Erratum {
        n: 2,
        m: 10,
        corrected: "72^{560}, 216^{84}",
        note: "2216^{84} read as 216^{84}; 2216 does not divide the printed order 216",
    },
];

fn published_rows(family: TableFamily) -> &'static [PublishedRow] {
    match family {
        TableFamily::Comb => COMB_TABLE,
        TableFamily::Zipper => ZIPPER_TABLE,
        TableFamily::ClosedZipper => &[],
    }
}

fn erratum(family: TableFamily, n: usize, m: usize) -> Option<&'static Erratum> {
    match family {
        TableFamily::Zipper => ZIPPER_ERRATA.iter().find(|e| e.n == n && e.m == m),
        _ => None,
    }
}

/// The `(n, m)` cells with published data.
pub fn published_cells(family: TableFamily) -> Vec<(usize, usize)> {
    published_rows(family).iter().map(|r| (r.n, r.m)).collect()
}

/// Parses `k^l` / `k^{l}` entries separated by `", "`. Repeated sizes and
/// any other separator are errors.
pub fn parse_multiset(s: &str) -> Result<BTreeMap<usize, usize>> {
    let err = |msg: String| Error::Parse(format!("{msg} in {s:?}"));
    let mut out = BTreeMap::new();
    for entry in s.split(", ") {
        let (k, l) = entry
            .split_once('^')
            .ok_or_else(|| err(format!("entry {entry:?} lacks '^'")))?;
        let l = match l.strip_prefix('{') {
            Some(inner) => inner
                .strip_suffix('}')
                .ok_or_else(|| err(format!("unbalanced braces in {entry:?}")))?,
            None => l,
        };
        let parse_num = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("bad number {t:?}")));
            }
            t.parse().map_err(|_| err(format!("bad number {t:?}")))
        };
        let (k, l) = (parse_num(k)?, parse_num(l)?);
        if k == 0 || l == 0 {
            return Err(err(format!("zero in {entry:?}")));
        }
        if out.insert(k, l).is_some() {
            return Err(err(format!("size {k} repeated")));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// Matches after applying a recorded erratum.
    Erratum,
    Unpublished,
}

impl RowStatus {
    pub fn label(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "mismatch",
            RowStatus::Erratum => "erratum",
            RowStatus::Unpublished => "unpublished",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub size: usize,
    pub published: usize,
    pub computed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub poset: String,
    pub n: usize,
    pub m: usize,
    pub multiset: String,
    #[serde(serialize_with = "ser_sizes")]
    pub sizes: BTreeMap<usize, usize>,
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
    pub status: RowStatus,
    pub published: Option<String>,
    pub published_order: Option<u64>,
    pub diffs: Vec<CellDiff>,
    pub notes: Vec<String>,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_sizes<S: serde::Serializer>(v: &BTreeMap<usize, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, l) in v {
        map.serialize_entry(&k.to_string(), l)?;
    }
    map.end()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub family: TableFamily,
    pub rows: Vec<TableRow>,
}

impl Table {
    /// No row is a mismatch.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != RowStatus::Mismatch)
    }

    pub fn row(&self, n: usize, m: usize) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.n == n && r.m == m)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("poset\tm\tsizes\torder\tstatus\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.poset,
                r.m,
                r.multiset,
                r.order,
                r.status.label()
            ));
        }
        out
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.multiset.chars().count()).max().unwrap_or(0);
        let mut last = None;
        for r in &self.rows {
            let name = if last == Some(r.n) { String::new() } else { r.poset.clone() };
            last = Some(r.n);
            writeln!(
                f,
                "{name:<5} {:>3}  {:<width$}  {:>8}  {}",
                r.m,
                r.multiset,
                r.order,
                r.status.label()
            )?;
            if let Some(p) = &r.published {
                if r.status != RowStatus::Match {
                    writeln!(f, "{:11}published: {p} (order {})", "", r.published_order.unwrap_or(0))?;
                }
            }
            for d in &r.diffs {
                writeln!(f, "{:11}size {}: published {} computed {}", "", d.size, d.published, d.computed)?;
            }
            for n in &r.notes {
                writeln!(f, "{:11}note: {n}", "")?;
            }
        }
        Ok(())
    }
}

/// Which `m` to tabulate for each poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MRange {
    /// `h + 1 ..= #P`.
    All,
    Range(RangeInclusive<usize>),
}

fn compare(family: TableFamily, n: usize, m: usize, row: &mut TableRow) {
    let Some(published) = published_rows(family).iter().find(|r| r.n == n && r.m == m) else {
        row.status = RowStatus::Unpublished;
        return;
    };
    row.published = Some(published.sizes.to_string());
    row.published_order = Some(published.order);
    let fix = erratum(family, n, m);
    let reading = fix.map_or(published.sizes, |e| e.corrected);
    if let Some(e) = fix {
        row.notes.push(e.note.to_string());
    }
    let reference = match parse_multiset(reading) {
        Ok(r) => r,
        Err(e) => {
            row.notes.push(e.to_string());
            row.status = RowStatus::Mismatch;
            return;
        }
    };
    let implied = lcm_all(reference.keys().copied());
    if implied != BigUint::from(published.order) {
        row.notes.push(format!(
            "published order {} differs from the lcm {implied} of the published sizes",
            published.order
        ));
    }
    let mut keys: Vec<usize> = reference.keys().chain(row.sizes.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    row.diffs = keys
        .into_iter()
        .filter_map(|size| {
            let p = reference.get(&size).copied().unwrap_or(0);
            let c = row.sizes.get(&size).copied().unwrap_or(0);
            (p != c).then_some(CellDiff {
                size,
                published: p,
                computed: c,
            })
        })
        .collect();
    let order_ok = row.order == BigUint::from(published.order);
    if !order_ok {
        row.notes.push(format!("order: published {}, computed {}", published.order, row.order));
    }
    row.status = match (row.diffs.is_empty() && order_ok, fix.is_some()) {
        (false, _) => RowStatus::Mismatch,
        (true, true) => RowStatus::Erratum,
        (true, false) => RowStatus::Match,
    };
}

/// Computes `o_m` and the order of `∂_K` for every requested cell and
/// compares each against the published row, if any. Cells run
/// independently; rows come back sorted by `(n, m)`.
pub fn reproduce_table(family: TableFamily, ns: RangeInclusive<usize>, ms: &MRange, exec: Exec) -> Result<Table> {
    let mut cells = Vec::new();
    for n in ns {
        let p = family.poset(n)?;
        let all = p.height() + 1..=p.len();
        let (lo, hi) = match ms {
            MRange::All => (*all.start(), *all.end()),
            MRange::Range(r) => ((*r.start()).max(*all.start()), (*r.end()).min(*all.end())),
        };
        for m in lo..=hi {
            cells.push((n, m));
        }
    }
    let rows: Vec<Result<TableRow>> = exec.map(&cells, |&(n, m)| {
        let p = family.poset(n)?;
        let d = k_orbits(&p, m, exec)?;
        let sizes = d.sizes();
        let plain: Vec<usize> = sizes.iter().flat_map(|(&k, &l)| std::iter::repeat_n(k, l)).collect();
        let mut row = TableRow {
            poset: family.name(n),
            n,
            m,
            multiset: multiset_notation(&plain),
            sizes,
            order: d.order(),
            status: RowStatus::Unpublished,
            published: None,
            published_order: None,
            diffs: Vec::new(),
            notes: Vec::new(),
        };
        compare(family, n, m, &mut row);
        Ok(row)
    });
    Ok(Table {
        family,
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

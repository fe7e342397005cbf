//! Partitions in the k×(n−k) box and Schubert-class arithmetic.
//!
//! Classes of the Grassmannian G(k,n) are indexed by weakly decreasing
//! integer sequences with exactly k parts, each at most n−k. Products are
//! computed two ways: [`pieri`] handles multiplication by the special class
//! of a single-row partition, and [`lr_multiply`] is the general product via
//! direct enumeration of Littlewood–Richardson skew tableaux. The two routes
//! are checked against each other in the tests; pieri is what the component
//! formulas use, lr_multiply is the consistency oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// The k×(n−k) box of G(k,n): k rows, parts bounded by width = n−k.
///
/// Requires 1 < k < n−1, so the width is at least 2 and the Grassmannian is
/// not a projective space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoxContext {
    k: usize,
    n: usize,
}

impl BoxContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 || n < k + 2 || n - k < 2 {
            return Err(Error::InvalidBox { k, n });
        }
        Ok(BoxContext { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximum part size, n−k.
    pub fn width(&self) -> i64 {
        (self.n - self.k) as i64
    }

    /// Codimension of the point class, k(n−k).
    pub fn box_size(&self) -> i64 {
        self.k as i64 * self.width()
    }

    /// Validate a raw part list against this box.
    ///
    /// Partitions always carry exactly k parts, zero-padded; a short or long
    /// list is rejected rather than silently padded, because class-table
    /// comparisons depend on the exact multiplicity of each entry.
    pub fn validate_partition(&self, parts: &[i64]) -> Result<Partition> {
        if parts.len() != self.k {
            return Err(Error::WrongPartitionLength {
                expected: self.k,
                got: parts.len(),
            });
        }
        for &p in parts {
            if p < 0 {
                return Err(Error::NegativePart { value: p });
            }
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        if parts[0] > self.width() {
            return Err(Error::PartExceedsWidth {
                part: parts[0],
                width: self.width(),
            });
        }
        Ok(Partition {
            parts: parts.to_vec(),
        })
    }

    /// Parse the bracketed text form, e.g. `[3,3,2]`, and validate it.
    pub fn parse_partition(&self, text: &str) -> Result<Partition> {
        self.validate_partition(&parse_parts(text)?)
    }

    /// All partitions that fit in the box, in lexicographic order.
    pub fn all_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.k);
        fn rec(cur: &mut Vec<i64>, k: usize, max: i64, out: &mut Vec<Partition>) {
            if cur.len() == k {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(cur, k, p, out);
                cur.pop();
            }
        }
        rec(&mut cur, self.k, self.width(), &mut out);
        out
    }
}

/// Weakly decreasing sequence of exactly k nonnegative parts, each ≤ n−k.
///
/// Construct through [`BoxContext::validate_partition`]; the raw parts are
/// only reachable read-only afterwards.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Codimension of the corresponding Schubert class: the sum of parts.
    pub fn codimension(&self) -> i64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(i64::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// Parse `[3,3,2]` into a raw part list (no box validation).
pub fn parse_parts(text: &str) -> Result<Vec<i64>> {
    let s = text.trim();
    let err = || Error::ParsePartition(text.to_string());
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(err)?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|part| part.trim().parse::<i64>().map_err(|_| err()))
        .collect()
}

/// A single Schubert class σ_a in a fixed box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertClass {
    partition: Partition,
    context: BoxContext,
}

impl SchubertClass {
    pub fn new(partition: Partition, context: BoxContext) -> Result<Self> {
        context.validate_partition(partition.parts())?;
        Ok(SchubertClass { partition, context })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn context(&self) -> BoxContext {
        self.context
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma{}", self.partition)
    }
}

/// Formal integer combination of Schubert classes in one box.
///
/// Zero coefficients are never stored. Products of genuine Schubert classes
/// only ever produce nonnegative coefficients; the type still allows signed
/// sums so differences can be tested for vanishing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassSum {
    context: BoxContext,
    terms: BTreeMap<Partition, i64>,
}

impl ClassSum {
    pub fn zero(context: BoxContext) -> Self {
        ClassSum {
            context,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_class(class: &SchubertClass) -> Self {
        let mut sum = ClassSum::zero(class.context());
        sum.add_term(class.partition().clone(), 1);
        sum
    }

    pub fn context(&self) -> BoxContext {
        self.context
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The (partition, coefficient) pair of a single-term sum, if it is one.
    pub fn single_term(&self) -> Option<(&Partition, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(p, &c)| (p, c))
        } else {
            None
        }
    }

    pub fn coefficient(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, p: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ClassSum) -> ClassSum {
        assert_eq!(self.context, other.context, "class sums from different boxes");
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, factor: i64) -> ClassSum {
        let mut out = ClassSum::zero(self.context);
        for (p, &c) in &self.terms {
            out.add_term(p.clone(), c * factor);
        }
        out
    }

    /// Full cohomology product, extended bilinearly over [`lr_multiply`].
    pub fn multiply(&self, other: &ClassSum) -> Result<ClassSum> {
        assert_eq!(self.context, other.context, "class sums from different boxes");
        let mut out = ClassSum::zero(self.context);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let prod = lr_multiply(a, b, self.context)?;
                out = out.add(&prod.scale(ca * cb));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ClassSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c == 1 {
                write!(f, "sigma{}", p)?;
            } else {
                write!(f, "{}*sigma{}", c, p)?;
            }
        }
        Ok(())
    }
}

/// All partitions obtained from `base` by adding a horizontal strip of size
/// `h`: componentwise b_i ≥ base_i with b_i ≤ base_{i−1} (and b_1 ≤ width),
/// total increase exactly h. The bound b_i ≤ base_{i−1} says no two added
/// cells share a column.
fn horizontal_strips(base: &[i64], h: i64, width: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(base.len());
    fn rec(base: &[i64], row: usize, left: i64, width: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if row == base.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if row == 0 { width } else { base[row - 1] };
        let lo = base[row];
        let hi = cap.min(lo + left);
        for b in lo..=hi {
            cur.push(b);
            rec(base, row + 1, left - (b - lo), width, cur, out);
            cur.pop();
        }
    }
    rec(base, 0, h, width, &mut cur, &mut out);
    out
}

/// Pieri rule: σ_h · σ_a as a multiplicity-free sum over the partitions that
/// interlace `a` (horizontal strips of size h), truncated to the box.
pub fn pieri(h: i64, a: &Partition, ctx: BoxContext) -> Result<ClassSum> {
    ctx.validate_partition(a.parts())?;
    if h < 1 || h > ctx.width() {
        return Err(Error::PieriDegreeOutOfRange {
            h,
            width: ctx.width(),
        });
    }
    let mut sum = ClassSum::zero(ctx);
    for parts in horizontal_strips(a.parts(), h, ctx.width()) {
        sum.add_term(Partition { parts }, 1);
    }
    Ok(sum)
}

/// General Schubert-class product with Littlewood–Richardson coefficients,
/// truncated to the box. Symmetric in its arguments.
///
/// c^ν_{ab} counts the skew tableaux of shape ν/a and content b that are
/// semistandard with a lattice reverse reading word. Such tableaux are
/// exactly chains of horizontal strips (value v fills the v-th strip; the
/// strip geometry forces the semistandard conditions), and for those the
/// lattice condition reduces to a per-row count inequality: the number of
/// v's in the first r rows may not exceed the number of (v−1)'s in the first
/// r−1 rows. The enumeration below walks the strip chains directly. Keeping
/// every intermediate shape inside the box loses nothing, because chains are
/// increasing and only final shapes inside the box are collected.
pub fn lr_multiply(a: &Partition, b: &Partition, ctx: BoxContext) -> Result<ClassSum> {
    ctx.validate_partition(a.parts())?;
    ctx.validate_partition(b.parts())?;
    let mut counts: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    chains(a.parts(), None, b.parts(), 0, ctx.width(), &mut counts);
    let mut sum = ClassSum::zero(ctx);
    for (parts, mult) in counts {
        sum.add_term(Partition { parts }, mult);
    }
    Ok(sum)
}

fn chains(
    cur: &[i64],
    prev_rows: Option<&[i64]>,
    content: &[i64],
    idx: usize,
    width: i64,
    out: &mut BTreeMap<Vec<i64>, i64>,
) {
    if idx == content.len() {
        *out.entry(cur.to_vec()).or_insert(0) += 1;
        return;
    }
    for next in horizontal_strips(cur, content[idx], width) {
        let rows: Vec<i64> = next.iter().zip(cur).map(|(n, c)| n - c).collect();
        if let Some(prev) = prev_rows {
            // Lattice condition against the previous value's row counts.
            let mut placed = 0;
            let mut available = 0;
            let mut ok = true;
            for r in 0..rows.len() {
                placed += rows[r];
                if r > 0 {
                    available += prev[r - 1];
                }
                if placed > available {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
        }
        chains(&next, Some(&rows), content, idx + 1, width, out);
    }
}

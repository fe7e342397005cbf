//! Homogeneous polynomials over the rationals, graded ideals, Macaulay
//! matrices, and the Hom-space dimension oracle.
//!
//! The central object is the multiplication map from generator-multiplier
//! pairs into a fixed graded piece S_e; its matrix (the Macaulay matrix)
//! realizes the degree-e part of an ideal as a column space. Rank gives the
//! Hilbert function, the kernel gives degree-e syzygies, and the non-pivot
//! monomials give coordinates on the quotient (S/I)_e. On top of these,
//! [`hom_dimension`] counts the degree-zero module maps I → S/I by brute
//! force: one free image per generator, one linear constraint per syzygy.
//!
//! Column counts at the largest degrees used here run into the thousands,
//! but almost all columns are unit vectors (a linear generator times a
//! monomial is a monomial). Everything therefore runs through the sparse
//! echelon accumulator from the linear-algebra kernel; the dense
//! [`macaulay_matrix`] is exposed for inspection and for cross-checking the
//! sparse path at small sizes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    format_rat, parse_rat, NullTrackingEchelon, Rat, RationalMatrix, SparseEchelon, SparseVec,
};

/// Exponent vector, one entry per variable x_0…x_V.
///
/// Ordered by total degree first, then lexicographically on the exponent
/// vector, so for a fixed degree the x_0-heaviest monomial is largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn constant(varcount: usize) -> Self {
        Monomial {
            exps: vec![0; varcount],
        }
    }

    pub fn variable(varcount: usize, var: usize) -> Self {
        let mut exps = vec![0; varcount];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn varcount(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{i}")),
                _ => parts.push(format!("x{i}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of the given degree, largest first (graded lexicographic,
/// x_0-major). Count is C(degree + varcount − 1, degree).
pub fn monomials_of_degree(varcount: usize, degree: u32) -> Vec<Monomial> {
    assert!(varcount >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut exps = vec![0u32; varcount];
    fn rec(exps: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial { exps: exps.clone() });
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(exps, var + 1, left - e, out);
        }
        exps[var] = 0;
    }
    rec(&mut exps, 0, degree, &mut out);
    out
}

/// One term of the JSON wire form: {"coeff": "3/2", "exps": [2, 1, 0]}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// Homogeneous polynomial of a fixed degree in a fixed variable set.
///
/// Zero coefficients are never stored; the zero polynomial keeps its stated
/// degree so graded arithmetic stays well-typed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPoly {
    varcount: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Rat>,
}

impl HomogeneousPoly {
    pub fn zero(varcount: usize, degree: u32) -> Self {
        HomogeneousPoly {
            varcount,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Build from (monomial, coefficient) pairs, merging duplicates.
    /// Panics on inhomogeneous input; use the JSON constructor for
    /// untrusted data.
    pub fn from_terms(
        varcount: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Self {
        let mut poly = Self::zero(varcount, degree);
        for (m, c) in terms {
            poly.add_term(m, c);
        }
        poly
    }

    pub fn monomial_term(varcount: usize, monomial: Monomial, coeff: Rat) -> Self {
        let degree = monomial.degree();
        Self::from_terms(varcount, degree, [(monomial, coeff)])
    }

    pub fn variable(varcount: usize, var: usize) -> Self {
        Self::monomial_term(varcount, Monomial::variable(varcount, var), Rat::one())
    }

    pub fn variable_power(varcount: usize, var: usize, degree: u32) -> Self {
        let mut exps = vec![0; varcount];
        exps[var] = degree;
        Self::monomial_term(varcount, Monomial::new(exps), Rat::one())
    }

    fn add_term(&mut self, monomial: Monomial, coeff: Rat) {
        assert_eq!(monomial.varcount(), self.varcount, "variable count mismatch");
        assert_eq!(monomial.degree(), self.degree, "inhomogeneous term");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero(self.varcount, self.degree);
        }
        let mut out = Self::zero(self.varcount, self.degree);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.varcount, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero(self.varcount, self.degree + m.degree());
        for (ma, ca) in &self.terms {
            out.terms.insert(ma.mul(m), ca.clone());
        }
        out
    }

    /// Partial derivative with respect to one variable (degree drops by one;
    /// constants differentiate to the zero polynomial).
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.varcount, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[var] = e - 1;
            out.add_term(Monomial::new(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.varcount, "evaluation point length");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Pad with trailing zero exponents to live in a larger variable set.
    pub fn extend_variables(&self, varcount: usize) -> Self {
        assert!(varcount >= self.varcount, "cannot drop variables");
        let mut out = Self::zero(varcount, self.degree);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps.resize(varcount, 0);
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Every degree-d monomial with a small nonzero integer coefficient
    /// drawn from a seeded generator; deterministic for a fixed seed.
    pub fn dense_seeded(varcount: usize, degree: u32, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terms = monomials_of_degree(varcount, degree).into_iter().map(|m| {
            let c = loop {
                let v: i64 = rng.gen_range(-5..=5);
                if v != 0 {
                    break v;
                }
            };
            (m, Rat::from_integer(c.into()))
        });
        Self::from_terms(varcount, degree, terms)
    }

    pub fn to_json_terms(&self) -> Vec<PolyTermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTermJson {
                coeff: format_rat(c),
                exps: m.exps.clone(),
            })
            .collect()
    }

    /// Parse the JSON term list form; validates homogeneity and the
    /// variable count.
    pub fn from_json_terms(varcount: usize, terms: &[PolyTermJson]) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::ParsePolynomial("empty term list".into()));
        }
        let mut degree = None;
        let mut poly = None;
        for t in terms {
            if t.exps.len() != varcount {
                return Err(Error::ParsePolynomial(format!(
                    "term has {} exponents, expected {}",
                    t.exps.len(),
                    varcount
                )));
            }
            let m = Monomial::new(t.exps.clone());
            let d = *degree.get_or_insert_with(|| m.degree());
            if m.degree() != d {
                return Err(Error::ParsePolynomial(format!(
                    "inhomogeneous terms: degree {} next to degree {}",
                    m.degree(),
                    d
                )));
            }
            let c = parse_rat(&t.coeff)?;
            poly.get_or_insert_with(|| HomogeneousPoly::zero(varcount, d))
                .add_term(m, c);
        }
        Ok(poly.expect("at least one term"))
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c < &Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let is_constant = m.degree() == 0;
            if magnitude.is_one() && !is_constant {
                write!(f, "{m}")?;
            } else if is_constant {
                write!(f, "{}", format_rat(&magnitude))?;
            } else {
                write!(f, "{}*{m}", format_rat(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// Homogeneous ideal given by explicit generators in ℚ[x_0…x_V].
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    varcount: usize,
    generators: Vec<HomogeneousPoly>,
}

impl GradedIdeal {
    /// Generators must be nonzero; an ideal may have no generators at all
    /// (the zero ideal).
    pub fn new(varcount: usize, generators: Vec<HomogeneousPoly>) -> Result<Self> {
        for g in &generators {
            assert_eq!(g.varcount(), varcount, "generator variable count mismatch");
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(GradedIdeal {
            varcount,
            generators,
        })
    }

    pub fn varcount(&self) -> usize {
        self.varcount
    }

    pub fn generators(&self) -> &[HomogeneousPoly] {
        &self.generators
    }
}

/// A degree-d hypersurface inside the m-plane {x_{m+1} = … = x_N = 0} of
/// ℙ^N: the ideal (f, x_{m+1}, …, x_N) with f in the first m+1 variables.
#[derive(Clone, Debug)]
pub struct HypersurfaceIdealSpec {
    ambient: usize,
    plane_dim: usize,
    degree: u32,
    form: HomogeneousPoly,
}

impl HypersurfaceIdealSpec {
    pub fn new(ambient: usize, plane_dim: usize, degree: u32, form: HomogeneousPoly) -> Result<Self> {
        if plane_dim < 2 || plane_dim > ambient {
            return Err(Error::InvalidHypersurfaceSpec(format!(
                "need 2 <= m <= N, got m={plane_dim}, N={ambient}"
            )));
        }
        if degree == 0 {
            return Err(Error::InvalidHypersurfaceSpec("degree must be >= 1".into()));
        }
        if form.is_zero() {
            return Err(Error::InvalidHypersurfaceSpec("form is zero".into()));
        }
        if form.varcount() != plane_dim + 1 {
            return Err(Error::InvalidHypersurfaceSpec(format!(
                "form must use exactly the {} plane variables, got {}",
                plane_dim + 1,
                form.varcount()
            )));
        }
        if form.degree() != degree {
            return Err(Error::InvalidHypersurfaceSpec(format!(
                "form degree {} does not match d={}",
                form.degree(),
                degree
            )));
        }
        Ok(HypersurfaceIdealSpec {
            ambient,
            plane_dim,
            degree,
            form,
        })
    }

    /// The sparse instance f = x_0^d.
    pub fn sparse(ambient: usize, plane_dim: usize, degree: u32) -> Result<Self> {
        let form = HomogeneousPoly::variable_power(plane_dim + 1, 0, degree);
        Self::new(ambient, plane_dim, degree, form)
    }

    /// A dense instance: every degree-d monomial in the plane variables,
    /// with a small nonzero integer coefficient from a seeded generator.
    pub fn dense_seeded(ambient: usize, plane_dim: usize, degree: u32, seed: u64) -> Result<Self> {
        let form = HomogeneousPoly::dense_seeded(plane_dim + 1, degree, seed);
        Self::new(ambient, plane_dim, degree, form)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn plane_dim(&self) -> usize {
        self.plane_dim
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn form(&self) -> &HomogeneousPoly {
        &self.form
    }
}

/// The ideal (f, x_{m+1}, …, x_N) of a hypersurface-in-a-plane spec, in all
/// N+1 ambient variables.
pub fn hypersurface_ideal(spec: &HypersurfaceIdealSpec) -> GradedIdeal {
    let varcount = spec.ambient + 1;
    let mut generators = vec![spec.form.extend_variables(varcount)];
    for v in spec.plane_dim + 1..=spec.ambient {
        generators.push(HomogeneousPoly::variable(varcount, v));
    }
    GradedIdeal::new(varcount, generators).expect("spec generators are nonzero")
}

/// Macaulay structure at degree e: the row monomial order plus each column
/// of the multiplication map, kept sparse.
struct MacaulayStructure {
    row_monomials: Vec<Monomial>,
    /// (generator index, multiplier monomial, column entries)
    columns: Vec<(usize, Monomial, SparseVec)>,
}

fn macaulay_structure(ideal: &GradedIdeal, e: u32) -> MacaulayStructure {
    let row_monomials = monomials_of_degree(ideal.varcount(), e);
    let row_index: BTreeMap<&Monomial, usize> = row_monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut columns = Vec::new();
    for (gi, g) in ideal.generators().iter().enumerate() {
        if g.degree() > e {
            continue;
        }
        for mult in monomials_of_degree(ideal.varcount(), e - g.degree()) {
            let mut entries: SparseVec = g
                .terms()
                .iter()
                .map(|(m, c)| (row_index[&m.mul(&mult)], c.clone()))
                .collect();
            entries.sort_by_key(|(i, _)| *i);
            columns.push((gi, mult, entries));
        }
    }
    MacaulayStructure {
        row_monomials,
        columns,
    }
}

/// Dense matrix of the multiplication map ⊕_i S_{e−deg g_i} → S_e.
///
/// Rows follow [`monomials_of_degree`]; columns are (generator, multiplier)
/// pairs in generator order. Its rank is dim I_e and its kernel is the space
/// of degree-e syzygies. Generators of degree above e contribute no columns.
pub fn macaulay_matrix(ideal: &GradedIdeal, e: u32) -> RationalMatrix {
    let st = macaulay_structure(ideal, e);
    let mut m = RationalMatrix::zeros(st.row_monomials.len(), st.columns.len());
    for (j, (_, _, entries)) in st.columns.iter().enumerate() {
        for (i, c) in entries {
            m.set(*i, j, c.clone());
        }
    }
    m
}

/// dim (S/I)_e, computed as (number of degree-e monomials) − rank of the
/// Macaulay matrix. The rank is taken by streaming the sparse columns, which
/// keeps the large degree-8 instances in six variables comfortably in
/// memory; the dense matrix route gives the same number and the tests check
/// that on small cases.
pub fn hilbert_function(ideal: &GradedIdeal, e: u32) -> usize {
    let st = macaulay_structure(ideal, e);
    let mut ech = SparseEchelon::new();
    for (_, _, entries) in st.columns {
        ech.insert(entries);
    }
    st.row_monomials.len() - ech.rank()
}

/// Basis of the degree-e syzygies {(h_1,…,h_r) : Σ h_i g_i = 0} with h_i
/// homogeneous of degree e − deg g_i (zero when that is negative).
pub fn syzygies_in_degree(ideal: &GradedIdeal, e: u32) -> Vec<Vec<HomogeneousPoly>> {
    let st = macaulay_structure(ideal, e);
    let mut ech = NullTrackingEchelon::new();
    let mut combos = Vec::new();
    for (j, (_, _, entries)) in st.columns.iter().enumerate() {
        if let Some(combo) = ech.insert(entries.clone(), j) {
            combos.push(combo);
        }
    }
    debug_assert_eq!(ech.rank() + combos.len(), st.columns.len());
    combos
        .into_iter()
        .map(|combo| {
            let mut tuple: Vec<HomogeneousPoly> = ideal
                .generators()
                .iter()
                .map(|g| HomogeneousPoly::zero(ideal.varcount(), e.saturating_sub(g.degree())))
                .collect();
            for (j, c) in combo {
                let (gi, mult, _) = &st.columns[j];
                tuple[*gi].add_term(mult.clone(), c);
            }
            tuple
        })
        .collect()
}

/// Coordinates on (S/I)_e: the monomials missed by the ideal's pivots, plus
/// the reduction map onto them.
pub struct QuotientBasis {
    degree: u32,
    row_monomials: Vec<Monomial>,
    echelon: SparseEchelon,
    basis_positions: Vec<usize>,
    slot_of_position: BTreeMap<usize, usize>,
}

impl QuotientBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis_positions.len()
    }

    /// The monomials whose residues form the basis, in matrix order.
    pub fn monomials(&self) -> Vec<Monomial> {
        self.basis_positions
            .iter()
            .map(|&i| self.row_monomials[i].clone())
            .collect()
    }

    /// Express a degree-e polynomial in the basis coordinates.
    pub fn reduce(&self, p: &HomogeneousPoly) -> Vec<Rat> {
        assert_eq!(p.degree(), self.degree, "degree mismatch in reduction");
        let row_index: BTreeMap<&Monomial, usize> = self
            .row_monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut v: SparseVec = p
            .terms()
            .iter()
            .map(|(m, c)| (row_index[m], c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        let reduced = self.echelon.full_reduce(v);
        let mut coords = vec![Rat::zero(); self.dim()];
        for (i, c) in reduced {
            coords[self.slot_of_position[&i]] = c;
        }
        coords
    }
}

/// Compute the quotient coordinates for (S/I)_e.
pub fn quotient_basis(ideal: &GradedIdeal, e: u32) -> QuotientBasis {
    let st = macaulay_structure(ideal, e);
    let mut ech = SparseEchelon::new();
    for (_, _, entries) in st.columns {
        ech.insert(entries);
    }
    let basis_positions: Vec<usize> = (0..st.row_monomials.len())
        .filter(|&i| !ech.is_pivot(i))
        .collect();
    let slot_of_position = basis_positions
        .iter()
        .enumerate()
        .map(|(slot, &pos)| (pos, slot))
        .collect();
    QuotientBasis {
        degree: e,
        row_monomials: st.row_monomials,
        echelon: ech,
        basis_positions,
        slot_of_position,
    }
}

/// Outcome of the Hom-space count: free image coordinates minus the rank of
/// the syzygy constraints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomDimension {
    pub unknowns: usize,
    pub constraint_rank: usize,
}

impl HomDimension {
    pub fn dimension(&self) -> usize {
        self.unknowns - self.constraint_rank
    }
}

/// dim Hom_S(I, S/I)_0 with syzygy constraints imposed through degree
/// `bound`.
///
/// A degree-zero map φ is fixed by the images φ(g_i) ∈ (S/I)_{deg g_i}; each
/// syzygy (h_1,…,h_r) forces Σ h_i φ(g_i) = 0 in the quotient. For ideals
/// whose generators form a regular sequence the Koszul syzygies generate the
/// whole syzygy module, so any bound ≥ max over generator pairs of
/// (deg g_i + deg g_j) is exact; for other ideals the result is an upper
/// bound on the true dimension. Bounds below that pair maximum are rejected.
pub fn hom_dimension(ideal: &GradedIdeal, bound: u32) -> Result<usize> {
    Ok(hom_dimension_detailed(ideal, bound)?.dimension())
}

/// [`hom_dimension`] with the unknown count and constraint rank broken out,
/// so callers can see whether any constraint was actually binding.
pub fn hom_dimension_detailed(ideal: &GradedIdeal, bound: u32) -> Result<HomDimension> {
    let degrees: Vec<u32> = ideal.generators().iter().map(|g| g.degree()).collect();
    let mut required = 0;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            required = required.max(degrees[i] + degrees[j]);
        }
    }
    if bound < required {
        return Err(Error::HomBoundTooSmall { bound, required });
    }

    fn cached<'a>(
        cache: &'a mut BTreeMap<u32, QuotientBasis>,
        ideal: &GradedIdeal,
        e: u32,
    ) -> &'a QuotientBasis {
        cache.entry(e).or_insert_with(|| quotient_basis(ideal, e))
    }
    let mut quotients: BTreeMap<u32, QuotientBasis> = BTreeMap::new();

    let mut offsets = Vec::with_capacity(degrees.len());
    let mut unknowns = 0;
    for &d in &degrees {
        offsets.push(unknowns);
        unknowns += cached(&mut quotients, ideal, d).dim();
    }

    let mut constraints = SparseEchelon::new();
    for e in 0..=bound {
        let syzygies = syzygies_in_degree(ideal, e);
        if syzygies.is_empty() {
            continue;
        }
        let target_dim = cached(&mut quotients, ideal, e).dim();
        if target_dim == 0 {
            continue;
        }
        // Rows of the constraint block for one syzygy: one scalar equation
        // per quotient coordinate of (S/I)_e, with unknowns ordered by
        // (generator, basis monomial).
        for tuple in &syzygies {
            let mut rows = vec![vec![Rat::zero(); unknowns]; target_dim];
            for (gi, h) in tuple.iter().enumerate() {
                if h.is_zero() {
                    continue;
                }
                let gen_monomials = cached(&mut quotients, ideal, degrees[gi]).monomials();
                for (b, mono) in gen_monomials.iter().enumerate() {
                    let coords = cached(&mut quotients, ideal, e).reduce(&h.mul_monomial(mono));
                    for (t, c) in coords.into_iter().enumerate() {
                        if !c.is_zero() {
                            rows[t][offsets[gi] + b] = c;
                        }
                    }
                }
            }
            for row in rows {
                let sparse: SparseVec = row
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                constraints.insert(sparse);
            }
        }
    }

    Ok(HomDimension {
        unknowns,
        constraint_rank: constraints.rank(),
    })
}

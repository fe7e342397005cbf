//! Plücker coordinates and the geometry of m-planes inside a Grassmannian.
//!
//! G(k,n) sits in ℙ^N, N = C(n,k) − 1, via the k×k minors of a spanning
//! matrix. This module provides the embedding, the quadratic relations
//! cutting out its image, the inverse map for decomposable points, Schubert
//! variety membership against an explicit flag, and the two maximal families
//! of projective m-planes contained in the Grassmannian:
//!
//! * SUB planes: all k-subspaces squeezed between a fixed (k−1)-dimensional
//!   core and a fixed (k+m)-dimensional envelope;
//! * QUOT planes: all k-subspaces between a fixed (k−m)-dimensional core and
//!   a fixed (k+1)-dimensional envelope.
//!
//! [`classify_plane`] recovers which family an explicitly given plane
//! belongs to by sampling points, pulling each back to a k-subspace, and
//! reading the dimensions of the common intersection and joint span,
//! exactly the core/envelope signature above.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat, Rat, RationalMatrix};
use crate::poly::{syzygies_in_degree, GradedIdeal, HomogeneousPoly, Monomial};
use crate::schubert::{BoxContext, Partition, SchubertClass};

/// Index bookkeeping for G(k,n) ⊂ ℙ^N: the lexicographic table of k-subsets
/// of the column set {0..n−1}, one Plücker coordinate per subset.
#[derive(Clone, Debug)]
pub struct GrassmannianContext {
    k: usize,
    n: usize,
    subsets: Vec<Vec<usize>>,
    index_of: BTreeMap<Vec<usize>, usize>,
}

impl GrassmannianContext {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 || n < k + 2 {
            return Err(Error::InvalidBox { k, n });
        }
        let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
        let index_of = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(GrassmannianContext {
            k,
            n,
            subsets,
            index_of,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of Plücker coordinates, C(n,k).
    pub fn coordinate_count(&self) -> usize {
        self.subsets.len()
    }

    /// Dimension N of the ambient projective space.
    pub fn plucker_dim(&self) -> usize {
        self.subsets.len() - 1
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn index_of(&self, subset: &[usize]) -> usize {
        self.index_of[subset]
    }

    /// The partition box for Schubert classes on this Grassmannian.
    pub fn box_context(&self) -> BoxContext {
        BoxContext::new(self.k, self.n).expect("context bounds imply a valid box")
    }
}

/// Projective point in Plücker coordinates (at least one nonzero entry).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerPoint {
    coords: Vec<Rat>,
}

impl PluckerPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(PluckerPoint { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Scale so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> Vec<Rat> {
        let lead = self
            .coords
            .iter()
            .find(|c| !c.is_zero())
            .expect("invariant: some coordinate is nonzero");
        self.coords.iter().map(|c| c / lead).collect()
    }

    pub fn projectively_equal(&self, other: &PluckerPoint) -> bool {
        self.coords.len() == other.coords.len() && self.normalized() == other.normalized()
    }
}

/// Complete flag in ℚ^n presented as an invertible matrix: F_j is the span
/// of the first j rows.
#[derive(Clone, Debug)]
pub struct FlagBasis {
    vectors: RationalMatrix,
}

impl FlagBasis {
    pub fn new(vectors: RationalMatrix) -> Result<Self> {
        assert_eq!(vectors.rows(), vectors.cols(), "flag matrix must be square");
        if vectors.rank() < vectors.rows() {
            return Err(Error::SingularFlag);
        }
        Ok(FlagBasis { vectors })
    }

    /// The coordinate flag F_j = span{e_1..e_j}.
    pub fn standard(n: usize) -> Self {
        FlagBasis {
            vectors: RationalMatrix::identity(n),
        }
    }

    /// A deterministic pseudo-random invertible basis for the given seed.
    pub fn seeded(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let m = RationalMatrix::from_fn(n, n, |_, _| {
                Rat::from_integer(rng.gen_range(-5i64..=5).into())
            });
            if m.rank() == n {
                return FlagBasis { vectors: m };
            }
        }
    }

    pub fn n(&self) -> usize {
        self.vectors.rows()
    }

    pub fn vectors(&self) -> &RationalMatrix {
        &self.vectors
    }

    /// Basis matrix of F_j (the first j rows).
    pub fn subspace(&self, j: usize) -> RationalMatrix {
        self.vectors.select_rows(&(0..j).collect::<Vec<_>>())
    }
}

/// The two families of maximal m-planes in a Grassmannian.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlaneFamily {
    /// Fixed (k−1)-core, varying line inside a (k+m)-envelope.
    Sub,
    /// Fixed (k−m)-core, varying hyperplane of a (k+1)-envelope.
    Quot,
}

impl PlaneFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            PlaneFamily::Sub => "SUB",
            PlaneFamily::Quot => "QUOT",
        }
    }

    pub fn parse(tag: &str) -> Result<Self> {
        match tag {
            "SUB" => Ok(PlaneFamily::Sub),
            "QUOT" => Ok(PlaneFamily::Quot),
            other => Err(Error::ParseFamilySpec(format!(
                "unknown family tag {other:?}, expected \"SUB\" or \"QUOT\""
            ))),
        }
    }
}

impl fmt::Display for PlaneFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A fully specified plane family instance: which family, which plane
/// dimension m, and against which flag.
#[derive(Clone, Debug)]
pub struct PlaneFamilySpec {
    family: PlaneFamily,
    m: usize,
    flag: FlagBasis,
    context: GrassmannianContext,
}

#[derive(Serialize, Deserialize)]
struct PlaneFamilySpecWire {
    family: String,
    k: usize,
    n: usize,
    m: usize,
    flag: Vec<Vec<String>>,
}

impl PlaneFamilySpec {
    pub fn new(
        family: PlaneFamily,
        m: usize,
        flag: FlagBasis,
        context: GrassmannianContext,
    ) -> Result<Self> {
        if flag.n() != context.n() {
            return Err(Error::MalformedMatrix(format!(
                "flag basis is {}x{} but the Grassmannian needs n={}",
                flag.n(),
                flag.n(),
                context.n()
            )));
        }
        if m < 2 {
            return Err(Error::PlaneDimensionTooSmall { m });
        }
        let (k, n) = (context.k(), context.n());
        let max_m = match family {
            PlaneFamily::Sub => n - k,
            PlaneFamily::Quot => k,
        };
        if m > max_m {
            return Err(Error::InvalidFamilySpec {
                family: family.tag(),
                k,
                n,
                m,
                max_m,
            });
        }
        Ok(PlaneFamilySpec {
            family,
            m,
            flag,
            context,
        })
    }

    pub fn family(&self) -> PlaneFamily {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn flag(&self) -> &FlagBasis {
        &self.flag
    }

    pub fn context(&self) -> &GrassmannianContext {
        &self.context
    }

    pub fn to_json_string(&self) -> String {
        let wire = PlaneFamilySpecWire {
            family: self.family.tag().to_string(),
            k: self.context.k(),
            n: self.context.n(),
            m: self.m,
            flag: (0..self.flag.n())
                .map(|i| self.flag.vectors().row(i).iter().map(format_rat).collect())
                .collect(),
        };
        serde_json::to_string(&wire).expect("wire struct serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let wire: PlaneFamilySpecWire =
            serde_json::from_str(text).map_err(|e| Error::ParseFamilySpec(e.to_string()))?;
        let family = PlaneFamily::parse(&wire.family)?;
        let context = GrassmannianContext::new(wire.k, wire.n)?;
        if wire.flag.len() != wire.n || wire.flag.iter().any(|row| row.len() != wire.n) {
            return Err(Error::MalformedMatrix(format!(
                "flag must be a {0}x{0} array of rationals",
                wire.n
            )));
        }
        let mut rows = Vec::with_capacity(wire.n);
        for row in &wire.flag {
            rows.push(row.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?);
        }
        let flag = FlagBasis::new(RationalMatrix::from_rows(rows))?;
        PlaneFamilySpec::new(family, wire.m, flag, context)
    }
}

/// Serialize a matrix as a list of columns of rational strings.
pub fn matrix_to_columns(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.cols())
        .map(|j| m.col(j).iter().map(format_rat).collect())
        .collect()
}

/// Parse the column-list form back into a matrix.
pub fn matrix_from_columns(columns: &[Vec<String>]) -> Result<RationalMatrix> {
    if columns.is_empty() || columns[0].is_empty() {
        return Err(Error::MalformedMatrix("no columns given".into()));
    }
    let rows = columns[0].len();
    if columns.iter().any(|c| c.len() != rows) {
        return Err(Error::MalformedMatrix(
            "columns have inconsistent lengths".into(),
        ));
    }
    let mut parsed = Vec::with_capacity(columns.len());
    for c in columns {
        parsed.push(c.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?);
    }
    Ok(RationalMatrix::from_fn(rows, columns.len(), |i, j| {
        parsed[j][i].clone()
    }))
}

/// Plücker embedding: coordinate at subset J is the k×k minor of `m` on
/// columns J, in the context's index order.
pub fn plucker_embed(m: &RationalMatrix, ctx: &GrassmannianContext) -> Result<PluckerPoint> {
    assert_eq!(m.rows(), ctx.k(), "matrix must have k rows");
    assert_eq!(m.cols(), ctx.n(), "matrix must have n columns");
    m.require_rank(ctx.k())?;
    let k = ctx.k();
    let coords = ctx
        .subsets()
        .iter()
        .map(|j| {
            RationalMatrix::from_fn(k, k, |r, c| m.entry(r, j[c]).clone()).determinant()
        })
        .collect();
    Ok(PluckerPoint::new(coords).expect("full-rank matrix has a nonzero minor"))
}

/// The quadratic shuffle relations cutting out the Grassmannian: for each
/// (k−1)-subset A and (k+1)-subset B, the alternating sum over b ∈ B of
/// ±p_{A∪{b}}·p_{B∖{b}}, with signs from sorting b into A and its position
/// in B. Identically-zero outputs are dropped and the rest are normalized
/// to leading coefficient 1 and deduplicated.
pub fn plucker_relations(ctx: &GrassmannianContext) -> Vec<HomogeneousPoly> {
    let varcount = ctx.coordinate_count();
    let mut seen: BTreeMap<String, HomogeneousPoly> = BTreeMap::new();
    for a in (0..ctx.n()).combinations(ctx.k() - 1) {
        for b in (0..ctx.n()).combinations(ctx.k() + 1) {
            let mut terms = Vec::new();
            for (t, &bt) in b.iter().enumerate() {
                if a.contains(&bt) {
                    continue;
                }
                let greater = a.iter().filter(|&&x| x > bt).count();
                let sign = if (t + greater) % 2 == 0 { 1 } else { -1 };
                let mut joined = a.clone();
                joined.push(bt);
                joined.sort_unstable();
                let removed: Vec<usize> = b.iter().copied().filter(|&x| x != bt).collect();
                let mut exps = vec![0u32; varcount];
                exps[ctx.index_of(&joined)] += 1;
                exps[ctx.index_of(&removed)] += 1;
                terms.push((Monomial::new(exps), Rat::from_integer(sign.into())));
            }
            let poly = HomogeneousPoly::from_terms(varcount, 2, terms);
            if poly.is_zero() {
                continue;
            }
            let lead = poly
                .terms()
                .iter()
                .next_back()
                .map(|(_, c)| c.clone())
                .expect("nonzero polynomial has a leading term");
            let canonical = poly.scale(&(Rat::one() / lead));
            seen.entry(canonical.to_string()).or_insert(canonical);
        }
    }
    seen.into_values().collect()
}

/// Does every Plücker relation vanish exactly at the point?
pub fn on_grassmannian(p: &PluckerPoint, ctx: &GrassmannianContext) -> bool {
    assert_eq!(p.coords().len(), ctx.coordinate_count(), "coordinate count");
    plucker_relations(ctx)
        .iter()
        .all(|rel| rel.eval(p.coords()).is_zero())
}

/// Invert the embedding at a decomposable point: the k-subspace is the
/// kernel {v : v ∧ ω = 0} of wedging with the k-vector ω whose coordinates
/// are p. Each (k+1)-subset C gives one linear condition with coefficient
/// (−1)^{pos of j in C}·p_{C∖{j}} on v_j.
pub fn plane_from_plucker(p: &PluckerPoint, ctx: &GrassmannianContext) -> Result<RationalMatrix> {
    assert_eq!(p.coords().len(), ctx.coordinate_count(), "coordinate count");
    let n = ctx.n();
    let conditions: Vec<Vec<usize>> = (0..n).combinations(ctx.k() + 1).collect();
    let mut ann = RationalMatrix::zeros(conditions.len(), n);
    for (row, c) in conditions.iter().enumerate() {
        for (pos, &j) in c.iter().enumerate() {
            let without: Vec<usize> = c.iter().copied().filter(|&x| x != j).collect();
            let coeff = p.coords()[ctx.index_of(&without)].clone();
            ann.set(row, j, if pos % 2 == 0 { coeff } else { -coeff });
        }
    }
    let kernel = ann.nullspace();
    if kernel.len() != ctx.k() {
        return Err(Error::NotDecomposable {
            annihilator_dim: kernel.len(),
            k: ctx.k(),
        });
    }
    Ok(RationalMatrix::from_fn(ctx.k(), n, |i, j| {
        kernel[i].entry(j, 0).clone()
    }))
}

/// Linear map ℙ^m → ℙ^N whose image is the family's plane of k-subspaces.
///
/// SUB: with flag rows v_1..v_n, column j is the embedding of
/// span{v_1..v_{k−1}, v_{k+j}}; the image at parameter (a_0:…:a_m) is the
/// subspace spanned by the core and Σ a_j v_{k+j}.
///
/// QUOT: the plane of subspaces V with F_{k−m} ⊂ V ⊂ F_{k+1}, parametrized
/// by the hyperplane of F_{k+1}/F_{k−m} cut out by the dual coordinates;
/// column j is (−1)^j times the embedding of the envelope basis with its
/// (j+1)-st quotient vector removed (the interior-product expansion of the
/// envelope's top wedge against the dual covector).
pub fn parametrize_plane(spec: &PlaneFamilySpec) -> Result<RationalMatrix> {
    let ctx = spec.context();
    let (k, m) = (ctx.k(), spec.m());
    let mut columns = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let (row_indices, sign): (Vec<usize>, i64) = match spec.family() {
            PlaneFamily::Sub => {
                let mut rows: Vec<usize> = (0..k - 1).collect();
                rows.push(k - 1 + j);
                (rows, 1)
            }
            PlaneFamily::Quot => {
                let rows: Vec<usize> = (0..=k)
                    .filter(|&r| r != k - m + j)
                    .collect();
                (rows, if j % 2 == 0 { 1 } else { -1 })
            }
        };
        let sub = spec.flag().vectors().select_rows(&row_indices);
        let point = plucker_embed(&sub, ctx)?;
        let factor = Rat::from_integer(sign.into());
        columns.push(point.coords().iter().map(|c| c * &factor).collect::<Vec<_>>());
    }
    let map = RationalMatrix::from_fn(ctx.coordinate_count(), m + 1, |i, j| columns[j][i].clone());
    assert_eq!(map.rank(), m + 1, "family columns are independent for an invertible flag");
    Ok(map)
}

/// Membership of the k-subspace spanned by v's rows in the Schubert variety
/// of the partition against the given flag: all k conditions
/// dim(V ∩ F_{n−k+i−a_i}) ≥ i must hold, with the intersection dimension
/// computed as k + j − rank of the stacked bases.
pub fn schubert_membership(
    v: &RationalMatrix,
    partition: &Partition,
    flag: &FlagBasis,
) -> Result<bool> {
    let n = flag.n();
    let k = v.rows();
    assert_eq!(v.cols(), n, "subspace ambient dimension mismatch");
    v.require_rank(k)?;
    let box_ctx = BoxContext::new(k, n)?;
    let partition = box_ctx.validate_partition(partition.parts())?;
    for (idx, &part) in partition.parts().iter().enumerate() {
        let i = idx + 1;
        let j = (n - k + i) as i64 - part;
        let j = usize::try_from(j).expect("box bound keeps the flag step positive");
        let meet_dim = (k + j) as i64 - v.vstack(&flag.subspace(j)).rank() as i64;
        if meet_dim < i as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// What [`classify_plane`] found: the family tag, its Schubert class, and
/// the core/envelope dimensions that identified it.
#[derive(Clone, Debug)]
pub struct PlaneClassification {
    pub family: PlaneFamily,
    pub class: SchubertClass,
    /// Dimension of the intersection of all sampled k-subspaces.
    pub core_dim: usize,
    /// Dimension of the span of all sampled k-subspaces.
    pub span_dim: usize,
}

/// Identify which maximal family an explicitly given m-plane in ℙ^N belongs
/// to.
///
/// Samples the m+1 coordinate parameters plus the all-ones point, pulls
/// each image back to a k-subspace, and reads the signature
/// (dim ∩, dim Σ): (k−1, k+m) means SUB, (k−m, k+1) means QUOT. If a sample
/// point fails to pull back (it is not on the Grassmannian) or the
/// signature is ambiguous, additional deterministic pseudo-random samples
/// are drawn up to a total of 2(m+2) before giving up.
pub fn classify_plane(
    plane: &RationalMatrix,
    ctx: &GrassmannianContext,
) -> Result<PlaneClassification> {
    assert_eq!(
        plane.rows(),
        ctx.coordinate_count(),
        "plane must be given in Plücker coordinates"
    );
    let m = plane.cols().checked_sub(1).expect("plane has at least one column");
    if m < 2 {
        return Err(Error::PlaneDimensionTooSmall { m });
    }
    plane.require_rank(m + 1)?;
    let (k, n) = (ctx.k(), ctx.n());
    let box_ctx = ctx.box_context();

    let mut params: Vec<Vec<Rat>> = (0..=m)
        .map(|j| {
            (0..=m)
                .map(|i| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    params.push(vec![Rat::one(); m + 1]);

    let mut rng = ChaCha8Rng::seed_from_u64(0x0070_6c61_6e65);
    let cap = 2 * (m + 2);
    let mut subspaces: Vec<RationalMatrix> = Vec::new();
    let mut all_converted = true;
    let mut next = 0;

    loop {
        while next < params.len() {
            let image = plane.apply(&params[next]);
            next += 1;
            let point = PluckerPoint::new(image).expect("full-rank plane maps nonzero parameters to nonzero points");
            match plane_from_plucker(&point, ctx) {
                Ok(sub) => subspaces.push(sub),
                Err(_) => all_converted = false,
            }
        }

        if all_converted && subspaces.len() >= m + 2 {
            let core = subspaces
                .iter()
                .skip(1)
                .fold(subspaces[0].clone(), |acc, s| acc.row_space_intersection(s));
            let span = subspaces
                .iter()
                .skip(1)
                .fold(subspaces[0].clone(), |acc, s| acc.row_space_sum(s));
            let (core_dim, span_dim) = (core.rows(), span.rows());

            if m <= n - k && core_dim == k - 1 && span_dim == k + m {
                let mut parts = vec![(n - k) as i64; k - 1];
                parts.push((n - k - m) as i64);
                let class =
                    SchubertClass::new(box_ctx.validate_partition(&parts)?, box_ctx)?;
                return Ok(PlaneClassification {
                    family: PlaneFamily::Sub,
                    class,
                    core_dim,
                    span_dim,
                });
            }
            if m <= k && core_dim == k - m && span_dim == k + 1 {
                let mut parts = vec![(n - k) as i64; k - m];
                parts.extend(std::iter::repeat_n((n - k - 1) as i64, m));
                let class =
                    SchubertClass::new(box_ctx.validate_partition(&parts)?, box_ctx)?;
                return Ok(PlaneClassification {
                    family: PlaneFamily::Quot,
                    class,
                    core_dim,
                    span_dim,
                });
            }
        }

        if params.len() >= cap {
            return Err(Error::UnclassifiablePlane);
        }
        let fresh = loop {
            let v: Vec<Rat> = (0..=m)
                .map(|_| Rat::from_integer(rng.gen_range(-9i64..=9).into()))
                .collect();
            if v.iter().any(|c| !c.is_zero()) {
                break v;
            }
        };
        params.push(fresh);
    }
}

/// Is there a nonconstant common factor of f and g? Exact test over ℚ: a
/// common factor exists iff some (a, b) with deg a < deg g satisfies
/// a·f + b·g = 0, i.e. iff the multiplication-map kernel in total degree
/// deg f + deg g − 1 is nonzero (the Koszul pair (g, −f) only shows up one
/// degree higher).
fn shares_factor(f: &HomogeneousPoly, g: &HomogeneousPoly) -> bool {
    let ideal = GradedIdeal::new(f.varcount(), vec![f.clone(), g.clone()])
        .expect("both polynomials are nonzero");
    let degree = f.degree() + g.degree() - 1;
    !syzygies_in_degree(&ideal, degree).is_empty()
}

/// The projective span of the degree-d hypersurface {f = 0} inside the
/// plane's image, returned as a linear map with the same column space.
///
/// A linear form on ℙ^N vanishes on the hypersurface exactly when its
/// pullback along the plane map vanishes modulo f; since the pullback has
/// degree 1 and d ≥ 2, "multiple of f" forces the pullback to be zero, so
/// the conditions are the left kernel of the plane matrix and the span is
/// its full column space. Squarefreeness is what makes "vanishes on the
/// zero locus" equal to "multiple of f", and it is checked exactly:
/// gcd(f, ∂f/∂x_i) must be constant for every variable.
pub fn span_of_hypersurface(
    plane: &RationalMatrix,
    f: &HomogeneousPoly,
) -> Result<RationalMatrix> {
    let width = plane.cols();
    assert_eq!(f.varcount(), width, "form must live on the plane's ℙ^m");
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = f.degree();
    if degree < 2 {
        return Err(Error::SpanDegreeTooSmall { degree });
    }
    for var in 0..width {
        let partial = f.derivative(var);
        if partial.is_zero() || shares_factor(f, &partial) {
            return Err(Error::NotSquarefree { var });
        }
    }
    plane.require_rank(width)?;

    let conditions = plane.transpose().nullspace();
    if conditions.is_empty() {
        return Ok(RationalMatrix::identity(plane.rows()));
    }
    let condition_rows = RationalMatrix::from_fn(conditions.len(), plane.rows(), |i, j| {
        conditions[i].entry(j, 0).clone()
    });
    let span = condition_rows.nullspace();
    Ok(RationalMatrix::from_fn(plane.rows(), span.len(), |i, j| {
        span[j].entry(i, 0).clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;
    use proptest::prelude::*;
    use rand::Rng;

    fn g(k: usize, n: usize) -> GrassmannianContext {
        GrassmannianContext::new(k, n).unwrap()
    }

    fn seeded_subspace(k: usize, n: usize, seed: u64) -> RationalMatrix {
        FlagBasis::seeded(n, seed).subspace(k)
    }

    fn unit_point(ctx: &GrassmannianContext, index: usize) -> PluckerPoint {
        let mut coords = vec![Rat::zero(); ctx.coordinate_count()];
        coords[index] = Rat::one();
        PluckerPoint::new(coords).unwrap()
    }

    #[test]
    fn context_index_table_is_lexicographic() {
        let ctx = g(2, 4);
        assert_eq!(ctx.coordinate_count(), 6);
        assert_eq!(ctx.plucker_dim(), 5);
        assert_eq!(
            ctx.subsets(),
            &[
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(ctx.index_of(&[1, 3]), 4);
        assert!(matches!(
            GrassmannianContext::new(1, 4),
            Err(Error::InvalidBox { k: 1, n: 4 })
        ));
        assert!(GrassmannianContext::new(3, 4).is_err());
    }

    #[test]
    fn embed_coordinate_plane() {
        let ctx = g(2, 4);
        let m = RationalMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let p = plucker_embed(&m, &ctx).unwrap();
        assert_eq!(p.coords()[0], rat_int(1));
        assert!(p.coords()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn embed_expands_minors() {
        let ctx = g(2, 4);
        let m = RationalMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        let p = plucker_embed(&m, &ctx).unwrap();
        let expected = [1, 1, 0, 0, 0, 0].map(rat_int);
        assert_eq!(p.coords(), expected.as_slice());
    }

    #[test]
    fn embed_is_projectively_invariant_under_row_operations() {
        let ctx = g(2, 4);
        let m = seeded_subspace(2, 4, 3);
        let mixed: Vec<Rat> = m
            .row(0)
            .iter()
            .zip(m.row(1))
            .map(|(a, b)| a * rat_int(3) + b * rat_int(2))
            .collect();
        let altered = RationalMatrix::from_rows(vec![m.row(1).to_vec(), mixed]);
        let p = plucker_embed(&m, &ctx).unwrap();
        let q = plucker_embed(&altered, &ctx).unwrap();
        assert!(p.projectively_equal(&q));
    }

    #[test]
    fn embed_rejects_rank_deficient_matrix() {
        let ctx = g(2, 4);
        let m = RationalMatrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8]]);
        assert!(matches!(
            plucker_embed(&m, &ctx),
            Err(Error::RankDeficient { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn single_relation_in_smallest_grassmannian() {
        let ctx = g(2, 4);
        let relations = plucker_relations(&ctx);
        assert_eq!(relations.len(), 1);
        let expected = HomogeneousPoly::from_terms(
            6,
            2,
            [
                (Monomial::new(vec![1, 0, 0, 0, 0, 1]), rat_int(1)),
                (Monomial::new(vec![0, 1, 0, 0, 1, 0]), rat_int(-1)),
                (Monomial::new(vec![0, 0, 1, 1, 0, 0]), rat_int(1)),
            ],
        );
        assert_eq!(relations[0], expected);
    }

    #[test]
    fn five_independent_relations_in_g25() {
        let ctx = g(2, 5);
        let relations = plucker_relations(&ctx);
        assert_eq!(relations.len(), 5);
        let monomials: Vec<Monomial> = relations
            .iter()
            .flat_map(|r| r.terms().keys().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let coeffs = RationalMatrix::from_fn(relations.len(), monomials.len(), |i, j| {
            relations[i].coefficient(&monomials[j])
        });
        assert_eq!(coeffs.rank(), 5);
    }

    #[test]
    fn relations_vanish_on_embedded_subspaces() {
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let ctx = g(k, n);
            let relations = plucker_relations(&ctx);
            for seed in 0..50 {
                let p = plucker_embed(&seeded_subspace(k, n, seed), &ctx).unwrap();
                for rel in &relations {
                    assert!(
                        rel.eval(p.coords()).is_zero(),
                        "relation failed for k={k} n={n} seed={seed}"
                    );
                }
            }
        }
    }

    #[test]
    fn grassmannian_membership_of_points() {
        let ctx = g(2, 4);
        let embedded = plucker_embed(&seeded_subspace(2, 4, 9), &ctx).unwrap();
        assert!(on_grassmannian(&embedded, &ctx));
        let off = PluckerPoint::new(
            vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
        )
        .unwrap();
        assert!(!on_grassmannian(&off, &ctx));
        for i in 0..6 {
            assert!(on_grassmannian(&unit_point(&ctx, i), &ctx));
        }
    }

    #[test]
    fn plane_from_plucker_round_trips() {
        for (k, n) in [(2, 4), (3, 6)] {
            let ctx = g(k, n);
            for seed in 0..10 {
                let m = seeded_subspace(k, n, 100 + seed);
                let p = plucker_embed(&m, &ctx).unwrap();
                let back = plane_from_plucker(&p, &ctx).unwrap();
                assert!(back.row_spaces_equal(&m), "k={k} n={n} seed={seed}");
                let again = plucker_embed(&back, &ctx).unwrap();
                assert!(p.projectively_equal(&again));
            }
        }
    }

    #[test]
    fn plane_of_coordinate_point_is_coordinate_subspace() {
        let ctx = g(2, 4);
        let p = unit_point(&ctx, ctx.index_of(&[0, 2]));
        let plane = plane_from_plucker(&p, &ctx).unwrap();
        let expected = RationalMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert!(plane.row_spaces_equal(&expected));
    }

    #[test]
    fn nondecomposable_point_is_rejected() {
        let ctx = g(2, 4);
        let p = PluckerPoint::new(
            vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
        )
        .unwrap();
        assert!(matches!(
            plane_from_plucker(&p, &ctx),
            Err(Error::NotDecomposable {
                annihilator_dim: 0,
                k: 2
            })
        ));
    }

    #[test]
    fn sub_family_standard_flag_hits_coordinate_points() {
        let ctx = g(2, 4);
        let spec =
            PlaneFamilySpec::new(PlaneFamily::Sub, 2, FlagBasis::standard(4), ctx).unwrap();
        let map = parametrize_plane(&spec).unwrap();
        // columns are the points p_{01}, p_{02}, p_{03}
        for j in 0..3 {
            for i in 0..6 {
                assert_eq!(*map.entry(i, j) == rat_int(1), i == j);
                if i != j {
                    assert!(map.entry(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn quot_family_standard_flag_spans_inside_envelope() {
        let ctx = g(2, 4);
        let spec =
            PlaneFamilySpec::new(PlaneFamily::Quot, 2, FlagBasis::standard(4), ctx.clone())
                .unwrap();
        let map = parametrize_plane(&spec).unwrap();
        // image plane is spanned by the coordinate points p_{01}, p_{02},
        // p_{12}: every subspace lies inside the envelope span{e_0,e_1,e_2}
        let span_rows = RationalMatrix::from_fn(3, 6, |i, j| map.entry(j, i).clone());
        let expected = RationalMatrix::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        assert!(span_rows.row_spaces_equal(&expected));
        // interior-product signs: columns are +p_{12}, −p_{02}, +p_{01}
        assert_eq!(*map.entry(3, 0), rat_int(1));
        assert_eq!(*map.entry(1, 1), rat_int(-1));
        assert_eq!(*map.entry(0, 2), rat_int(1));
    }

    #[test]
    fn family_images_stay_on_grassmannian() {
        let ctx = g(3, 6);
        let relations = plucker_relations(&ctx);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for family in [PlaneFamily::Sub, PlaneFamily::Quot] {
            for m in [2usize, 3] {
                let spec = PlaneFamilySpec::new(
                    family,
                    m,
                    FlagBasis::seeded(6, 40 + m as u64),
                    ctx.clone(),
                )
                .unwrap();
                let map = parametrize_plane(&spec).unwrap();
                for _ in 0..25 {
                    let param: Vec<Rat> = (0..=m)
                        .map(|_| Rat::from_integer(rng.gen_range(-7i64..=7).into()))
                        .collect();
                    if param.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let image = map.apply(&param);
                    for rel in &relations {
                        assert!(
                            rel.eval(&image).is_zero(),
                            "{family:?} m={m} param left the Grassmannian"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn family_spec_validation() {
        let ctx = g(2, 4);
        assert!(matches!(
            PlaneFamilySpec::new(PlaneFamily::Sub, 1, FlagBasis::standard(4), ctx.clone()),
            Err(Error::PlaneDimensionTooSmall { m: 1 })
        ));
        assert!(matches!(
            PlaneFamilySpec::new(PlaneFamily::Sub, 3, FlagBasis::standard(4), ctx.clone()),
            Err(Error::InvalidFamilySpec { max_m: 2, .. })
        ));
        let ctx25 = g(2, 5);
        assert!(matches!(
            PlaneFamilySpec::new(PlaneFamily::Quot, 3, FlagBasis::standard(5), ctx25),
            Err(Error::InvalidFamilySpec { max_m: 2, .. })
        ));
        let singular = RationalMatrix::zeros(4, 4);
        assert!(matches!(FlagBasis::new(singular), Err(Error::SingularFlag)));
    }

    #[test]
    fn family_spec_json_round_trip() {
        let ctx = g(3, 6);
        let spec = PlaneFamilySpec::new(
            PlaneFamily::Sub,
            2,
            FlagBasis::seeded(6, 5),
            ctx,
        )
        .unwrap();
        let text = spec.to_json_string();
        let back = PlaneFamilySpec::from_json_str(&text).unwrap();
        assert_eq!(back.family(), PlaneFamily::Sub);
        assert_eq!(back.m(), 2);
        assert_eq!(back.flag().vectors(), spec.flag().vectors());
        assert!(matches!(
            PlaneFamilySpec::from_json_str("{\"family\":\"MID\"}"),
            Err(Error::ParseFamilySpec(_))
        ));
        assert!(PlaneFamilySpec::from_json_str("not json").is_err());
    }

    #[test]
    fn matrix_column_serialization_round_trips() {
        let m = seeded_subspace(3, 4, 8).transpose();
        let cols = matrix_to_columns(&m);
        assert_eq!(cols.len(), 3);
        let back = matrix_from_columns(&cols).unwrap();
        assert_eq!(back, m);
        assert!(matrix_from_columns(&[]).is_err());
        assert!(matrix_from_columns(&[vec!["1".into()], vec![]]).is_err());
        assert!(matrix_from_columns(&[vec!["x".into()]]).is_err());
    }

    #[test]
    fn families_land_in_their_schubert_varieties() {
        let ctx = g(3, 6);
        let flag = FlagBasis::seeded(6, 21);
        let box_ctx = ctx.box_context();
        let cases = [
            (PlaneFamily::Sub, vec![3, 3, 1]),
            (PlaneFamily::Quot, vec![3, 2, 2]),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(500);
        for (family, parts) in cases {
            let spec = PlaneFamilySpec::new(family, 2, flag.clone(), ctx.clone()).unwrap();
            let map = parametrize_plane(&spec).unwrap();
            let partition = box_ctx.validate_partition(&parts).unwrap();
            let mut params = vec![
                vec![rat_int(1), rat_int(0), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
                vec![rat_int(1), rat_int(1), rat_int(1)],
            ];
            params.push((0..3).map(|_| Rat::from_integer(rng.gen_range(1i64..=9).into())).collect());
            for param in params {
                let v = plane_from_plucker(
                    &PluckerPoint::new(map.apply(&param)).unwrap(),
                    &ctx,
                )
                .unwrap();
                assert!(
                    schubert_membership(&v, &partition, &flag).unwrap(),
                    "{family:?} point failed membership"
                );
            }
        }
    }

    #[test]
    fn zero_partition_membership_is_vacuous() {
        let ctx = g(3, 6);
        let flag = FlagBasis::seeded(6, 22);
        let v = seeded_subspace(3, 6, 23);
        let zero = ctx.box_context().validate_partition(&[0, 0, 0]).unwrap();
        assert!(schubert_membership(&v, &zero, &flag).unwrap());
    }

    #[test]
    fn generic_members_fail_strictly_larger_partitions() {
        let ctx = g(3, 6);
        let flag = FlagBasis::seeded(6, 31);
        let box_ctx = ctx.box_context();
        let cases = [
            (PlaneFamily::Sub, vec![3i64, 3, 1]),
            (PlaneFamily::Quot, vec![3i64, 2, 2]),
        ];
        for (family, parts) in cases {
            let spec = PlaneFamilySpec::new(family, 2, flag.clone(), ctx.clone()).unwrap();
            let map = parametrize_plane(&spec).unwrap();
            let generic = vec![rat_int(3), rat_int(5), rat_int(7)];
            let v = plane_from_plucker(&PluckerPoint::new(map.apply(&generic)).unwrap(), &ctx)
                .unwrap();
            for candidate in box_ctx.all_partitions() {
                let strictly_larger = candidate
                    .parts()
                    .iter()
                    .zip(&parts)
                    .all(|(c, p)| c >= p)
                    && candidate.codimension() > parts.iter().sum::<i64>();
                if strictly_larger {
                    assert!(
                        !schubert_membership(&v, &candidate, &flag).unwrap(),
                        "{family:?} generic member claimed to lie in {candidate}"
                    );
                }
            }
        }
    }

    #[test]
    fn membership_rejects_rank_deficient_input() {
        let flag = FlagBasis::standard(6);
        let v = RationalMatrix::from_int_rows(&[
            &[1, 0, 0, 0, 0, 0],
            &[2, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
        ]);
        let box_ctx = BoxContext::new(3, 6).unwrap();
        let zero = box_ctx.validate_partition(&[0, 0, 0]).unwrap();
        assert!(schubert_membership(&v, &zero, &flag).is_err());
    }

    #[test]
    fn classification_round_trips_on_both_families() {
        for (k, n) in [(2usize, 4usize), (2, 5), (3, 6), (3, 7)] {
            let ctx = g(k, n);
            for family in [PlaneFamily::Sub, PlaneFamily::Quot] {
                let max_m = match family {
                    PlaneFamily::Sub => n - k,
                    PlaneFamily::Quot => k,
                };
                for m in 2..=max_m {
                    let spec = PlaneFamilySpec::new(
                        family,
                        m,
                        FlagBasis::seeded(n, 7 + m as u64),
                        ctx.clone(),
                    )
                    .unwrap();
                    let map = parametrize_plane(&spec).unwrap();
                    let found = classify_plane(&map, &ctx).unwrap();
                    assert_eq!(found.family, family, "k={k} n={n} m={m}");
                    let expected_parts: Vec<i64> = match family {
                        PlaneFamily::Sub => {
                            let mut p = vec![(n - k) as i64; k - 1];
                            p.push((n - k - m) as i64);
                            p
                        }
                        PlaneFamily::Quot => {
                            let mut p = vec![(n - k) as i64; k - m];
                            p.extend(std::iter::repeat_n((n - k - 1) as i64, m));
                            p
                        }
                    };
                    assert_eq!(found.class.partition().parts(), expected_parts.as_slice());
                }
            }
        }
    }

    #[test]
    fn classification_signature_dimensions_in_g24() {
        let ctx = g(2, 4);
        let sub = PlaneFamilySpec::new(PlaneFamily::Sub, 2, FlagBasis::standard(4), ctx.clone())
            .unwrap();
        let found = classify_plane(&parametrize_plane(&sub).unwrap(), &ctx).unwrap();
        assert_eq!((found.core_dim, found.span_dim), (1, 4));
        let quot =
            PlaneFamilySpec::new(PlaneFamily::Quot, 2, FlagBasis::standard(4), ctx.clone())
                .unwrap();
        let found = classify_plane(&parametrize_plane(&quot).unwrap(), &ctx).unwrap();
        assert_eq!((found.core_dim, found.span_dim), (0, 3));
    }

    #[test]
    fn plane_not_inside_grassmannian_is_unclassifiable() {
        let ctx = g(2, 4);
        // spanned by the points p_{01}, p_{23}, p_{02}: each vertex is
        // decomposable but the plane leaves the Grassmannian
        let mut plane = RationalMatrix::zeros(6, 3);
        plane.set(0, 0, rat_int(1));
        plane.set(5, 1, rat_int(1));
        plane.set(1, 2, rat_int(1));
        assert!(matches!(
            classify_plane(&plane, &ctx),
            Err(Error::UnclassifiablePlane)
        ));
    }

    #[test]
    fn span_of_smooth_cubic_recovers_the_plane() {
        let ctx = g(3, 6);
        let spec = PlaneFamilySpec::new(
            PlaneFamily::Quot,
            2,
            FlagBasis::seeded(6, 11),
            ctx,
        )
        .unwrap();
        let plane = parametrize_plane(&spec).unwrap();
        let f = HomogeneousPoly::dense_seeded(3, 3, 42);
        let span = span_of_hypersurface(&plane, &f).unwrap();
        assert_eq!(span.cols(), 3);
        assert!(span.transpose().row_spaces_equal(&plane.transpose()));
        // idempotent in column space
        let twice = span_of_hypersurface(&span, &f).unwrap();
        assert!(twice.transpose().row_spaces_equal(&plane.transpose()));
        // invariant under reparametrization of the source
        let reparam = plane.matmul(&RationalMatrix::from_int_rows(&[
            &[1, 2, 0],
            &[0, 1, 5],
            &[3, 0, 1],
        ]));
        let span2 = span_of_hypersurface(&reparam, &f).unwrap();
        assert!(span2.transpose().row_spaces_equal(&plane.transpose()));
    }

    #[test]
    fn span_guards_reject_bad_forms() {
        let ctx = g(2, 4);
        let spec =
            PlaneFamilySpec::new(PlaneFamily::Sub, 2, FlagBasis::standard(4), ctx).unwrap();
        let plane = parametrize_plane(&spec).unwrap();
        let squared = HomogeneousPoly::from_terms(
            3,
            3,
            [(Monomial::new(vec![2, 1, 0]), rat_int(1))],
        );
        assert!(matches!(
            span_of_hypersurface(&plane, &squared),
            Err(Error::NotSquarefree { .. })
        ));
        let linear = HomogeneousPoly::variable(3, 0);
        assert!(matches!(
            span_of_hypersurface(&plane, &linear),
            Err(Error::SpanDegreeTooSmall { degree: 1 })
        ));
        let zero = HomogeneousPoly::zero(3, 3);
        assert!(matches!(
            span_of_hypersurface(&plane, &zero),
            Err(Error::ZeroPolynomial)
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn embedding_round_trip_is_identity_on_row_spaces(
            entries in proptest::collection::vec(-5i64..=5, 8)
        ) {
            let m = RationalMatrix::from_fn(2, 4, |i, j| rat_int(entries[4 * i + j]));
            prop_assume!(m.rank() == 2);
            let ctx = g(2, 4);
            let p = plucker_embed(&m, &ctx).unwrap();
            prop_assert!(on_grassmannian(&p, &ctx));
            let back = plane_from_plucker(&p, &ctx).unwrap();
            prop_assert!(back.row_spaces_equal(&m));
        }
    }
}

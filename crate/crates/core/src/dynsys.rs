//! Concrete dynamical systems `(Δ, σ̃)` on character spaces.
//!
//! Three models are supported:
//!
//! * [`SystemModel::FinitePermutation`]: `Δ = {0..N-1}` discrete, `σ̃(x) = perm[x]`.
//! * [`SystemModel::IntegerShift`]: `Δ = ℤ` discrete, `σ̃(n) = n + 1`.
//! * [`SystemModel::CircleRotation`]: `Δ` the unit circle, coefficient algebra the
//!   Laurent polynomials with `σ(t) = q·t`. Since `σ̃(μ) = μ ∘ σ⁻¹`, the point
//!   `z` is sent to `q⁻¹·z`.
//!
//! Subsets of `Δ` are kept symbolic ([`PointSet`]) so the infinite models stay
//! exactly decidable.

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// A bijection of `{0..N-1}` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidModel("permutation must act on at least one point".into()));
        }
        let mut seen = vec![false; images.len()];
        for (i, &x) in images.iter().enumerate() {
            if x >= images.len() {
                return Err(Error::InvalidModel(format!(
                    "permutation[{i}] = {x} is out of range 0..{}",
                    images.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidModel(format!(
                    "permutation[{i}] = {x} repeats an earlier image"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation of `n` points from disjoint cycles, e.g. `&[&[0, 1], &[2]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidModel(format!("cycle entry {x} out of range")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Length of the cycle through `x`.
    pub fn cycle_len(&self, x: usize) -> usize {
        let mut y = self.0[x];
        let mut len = 1;
        while y != x {
            y = self.0[y];
            len += 1;
        }
        len
    }

    /// `perm^k(x)` for any integer `k`.
    pub fn apply_pow(&self, x: usize, k: i64) -> usize {
        let len = self.cycle_len(x) as i64;
        let steps = k.rem_euclid(len);
        (0..steps).fold(x, |y, _| self.0[y])
    }

    /// Cycles in canonical order (by smallest element, each starting there).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut y = self.0[start];
            while y != start {
                seen[y] = true;
                cycle.push(y);
                y = self.0[y];
            }
            out.push(cycle);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1usize, |acc, c| acc.lcm(&c.len()))
    }

    /// All permutations of `n` points in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

/// Model-level stand-ins for the analytic hypotheses on the coefficient algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub unital: bool,
    pub regular_bumps: bool,
    pub character_space_infinite: bool,
}

/// A computable stand-in for the pair `(Δ(A), σ̃)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SystemModel {
    FinitePermutation(Permutation),
    IntegerShift,
    CircleRotation(GaussianRational),
}

impl SystemModel {
    pub fn finite(images: Vec<usize>) -> Result<Self> {
        Ok(SystemModel::FinitePermutation(Permutation::new(images)?))
    }

    pub fn shift() -> Self {
        SystemModel::IntegerShift
    }

    /// Rotation model; `q` must satisfy `q·conj(q) = 1` exactly.
    pub fn circle(q: GaussianRational) -> Result<Self> {
        if !q.norm_sq().is_one() {
            return Err(Error::InvalidModel(format!("q = {q} is not on the unit circle")));
        }
        Ok(SystemModel::CircleRotation(q))
    }

    pub fn capabilities(&self) -> Capabilities {
        match self {
            SystemModel::FinitePermutation(_) => Capabilities {
                unital: true,
                regular_bumps: true,
                character_space_infinite: false,
            },
            SystemModel::IntegerShift => Capabilities {
                unital: false,
                regular_bumps: true,
                character_space_infinite: true,
            },
            SystemModel::CircleRotation(_) => Capabilities {
                unital: true,
                regular_bumps: false,
                character_space_infinite: true,
            },
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SystemModel::FinitePermutation(_) => "finite",
            SystemModel::IntegerShift => "shift",
            SystemModel::CircleRotation(_) => "circle",
        }
    }

    /// Number of points for finite models.
    pub fn finite_size(&self) -> Option<usize> {
        match self {
            SystemModel::FinitePermutation(p) => Some(p.len()),
            _ => None,
        }
    }

    /// Every point of a finite model, in canonical order.
    pub fn finite_points(&self) -> Option<Vec<Point>> {
        self.finite_size().map(|n| (0..n).map(Point::Finite).collect())
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        let ok = match (self, p) {
            (SystemModel::FinitePermutation(perm), Point::Finite(x)) => *x < perm.len(),
            (SystemModel::IntegerShift, Point::Shift(_)) => true,
            (SystemModel::CircleRotation(_), Point::Circle(z)) => z.norm_sq().is_one(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!("point {p} does not belong to the {} model", self.kind_name())))
        }
    }

    /// Bound `B` such that the periodic-point sets are decided by `1 ≤ n ≤ B`:
    /// the permutation order, 4 for rotations by elements of ℚ(i), and 1 for the shift.
    pub fn period_bound(&self) -> usize {
        match self {
            SystemModel::FinitePermutation(p) => p.order(),
            SystemModel::IntegerShift => 1,
            SystemModel::CircleRotation(_) => 4,
        }
    }
}

impl fmt::Display for SystemModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemModel::FinitePermutation(p) => write!(f, "finite{:?}", p.images()),
            SystemModel::IntegerShift => write!(f, "shift"),
            SystemModel::CircleRotation(q) => write!(f, "circle(q={q})"),
        }
    }
}

/// A character `μ ∈ Δ(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(usize),
    Shift(i64),
    Circle(GaussianRational),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => write!(f, "{x}"),
            Point::Shift(n) => write!(f, "{n}"),
            Point::Circle(z) => write!(f, "{z}"),
        }
    }
}

/// Symbolic subset of `Δ`.
///
/// Construct through [`PointSet::finite`] / [`PointSet::cofinite`] so that
/// lists are sorted and deduplicated, and so that finite models collapse
/// full and empty lists to `All` / `Empty`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointSet {
    Empty,
    All,
    Finite(Vec<Point>),
    CofiniteComplementOf(Vec<Point>),
}

impl PointSet {
    pub fn finite(model: &SystemModel, mut points: Vec<Point>) -> PointSet {
        points.sort();
        points.dedup();
        if points.is_empty() {
            return PointSet::Empty;
        }
        if model.finite_size() == Some(points.len()) {
            return PointSet::All;
        }
        PointSet::Finite(points)
    }

    pub fn cofinite(model: &SystemModel, mut points: Vec<Point>) -> PointSet {
        if let Some(all) = model.finite_points() {
            let rest = all.into_iter().filter(|p| !points.contains(p)).collect();
            return PointSet::finite(model, rest);
        }
        points.sort();
        points.dedup();
        if points.is_empty() {
            PointSet::All
        } else {
            PointSet::CofiniteComplementOf(points)
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PointSet::Empty)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            PointSet::Empty => false,
            PointSet::All => true,
            PointSet::Finite(ps) => ps.binary_search(p).is_ok(),
            PointSet::CofiniteComplementOf(ps) => ps.binary_search(p).is_err(),
        }
    }

    /// Set inclusion, assuming both sides are normalized for the same model.
    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        use PointSet::*;
        match (self, other) {
            (Empty, _) | (_, All) => true,
            (_, Empty) => false,
            (All, _) => false,
            (Finite(a), _) => a.iter().all(|p| other.contains(p)),
            (CofiniteComplementOf(_), Finite(_)) => false,
            (CofiniteComplementOf(a), CofiniteComplementOf(b)) => b.iter().all(|p| a.contains(p)),
        }
    }

    /// Intersection for normalized sets of the same model.
    pub fn intersect(&self, model: &SystemModel, other: &PointSet) -> PointSet {
        use PointSet::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => Empty,
            (All, x) | (x, All) => x.clone(),
            (Finite(a), x) | (x, Finite(a)) => {
                PointSet::finite(model, a.iter().filter(|p| x.contains(p)).cloned().collect())
            }
            (CofiniteComplementOf(a), CofiniteComplementOf(b)) => {
                PointSet::cofinite(model, a.iter().chain(b).cloned().collect())
            }
        }
    }

    /// Explicit member list when the set is finite or the model is finite.
    pub fn enumerate(&self, model: &SystemModel) -> Option<Vec<Point>> {
        match self {
            PointSet::Empty => Some(Vec::new()),
            PointSet::Finite(ps) => Some(ps.clone()),
            PointSet::All => model.finite_points(),
            PointSet::CofiniteComplementOf(_) => None,
        }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ps: &[Point]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            PointSet::Empty => write!(f, "{{}}"),
            PointSet::All => write!(f, "All"),
            PointSet::Finite(ps) => write!(f, "{{{}}}", list(ps)),
            PointSet::CofiniteComplementOf(ps) => write!(f, "All \\ {{{}}}", list(ps)),
        }
    }
}

/// `σ̃ᵏ(p)`.
pub fn apply_sigma_tilde(s: &SystemModel, p: &Point, k: i64) -> Result<Point> {
    s.check_point(p)?;
    Ok(match (s, p) {
        (SystemModel::FinitePermutation(perm), Point::Finite(x)) => Point::Finite(perm.apply_pow(*x, k)),
        (SystemModel::IntegerShift, Point::Shift(n)) => Point::Shift(n + k),
        (SystemModel::CircleRotation(q), Point::Circle(z)) => Point::Circle(z * &q.pow(-k)?),
        _ => unreachable!("check_point accepted a mismatched point"),
    })
}

/// The only roots of unity in ℚ(i) are `±1, ±i`, since `φ(m) ≤ 2` forces `m ∈ {1, 2, 3, 4, 6}`
/// and the primitive cube and sixth roots need `√-3 ∉ ℚ(i)`.
pub fn is_root_of_unity(q: &GaussianRational) -> bool {
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    *q == one || *q == -&one || *q == i || *q == -&i
}

/// `Perⁿ = {μ : σ̃ⁿ(μ) = μ}`.
pub fn per_n(s: &SystemModel, n: i64) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok(match s {
        SystemModel::FinitePermutation(perm) => {
            let fixed = (0..perm.len())
                .filter(|&x| perm.apply_pow(x, n) == x)
                .map(Point::Finite)
                .collect();
            PointSet::finite(s, fixed)
        }
        SystemModel::IntegerShift => PointSet::Empty,
        SystemModel::CircleRotation(q) => {
            if q.pow(n)?.is_one() {
                PointSet::All
            } else {
                PointSet::Empty
            }
        }
    })
}

pub fn aperiodic_points_dense(s: &SystemModel) -> bool {
    match s {
        SystemModel::FinitePermutation(_) => false,
        SystemModel::IntegerShift => true,
        SystemModel::CircleRotation(q) => !is_root_of_unity(q),
    }
}

pub fn has_empty_interior(s: &SystemModel, ps: &PointSet) -> bool {
    match s {
        SystemModel::FinitePermutation(_) | SystemModel::IntegerShift => ps.is_empty(),
        SystemModel::CircleRotation(_) => matches!(ps, PointSet::Empty | PointSet::Finite(_)),
    }
}

/// Evaluates both sides of "aperiodic points dense ⇔ every `Perⁿ` has empty interior"
/// and reports whether they agree. The right side is checked for
/// `1 ≤ n ≤ max(n_max, period_bound)`, which covers every `n` in these models.
pub fn check_baire_lemma(s: &SystemModel, n_max: usize) -> bool {
    let lhs = aperiodic_points_dense(s);
    let bound = n_max.max(s.period_bound()) as i64;
    let rhs = (1..=bound).all(|n| has_empty_interior(s, &per_n(s, n).expect("n > 0")));
    lhs == rhs
}

/// Orbit segment `{σ̃ᵏ(p) : |k| ≤ radius}` in canonical order, and whether it
/// already contains the whole (finite) orbit.
pub fn orbit(s: &SystemModel, p: &Point, radius: usize) -> Result<(Vec<Point>, bool)> {
    s.check_point(p)?;
    let r = radius as i64;
    let mut points = Vec::with_capacity(2 * radius + 1);
    for k in -r..=r {
        points.push(apply_sigma_tilde(s, p, k)?);
    }
    // 2r+1 consecutive iterates cover the orbit iff the period is at most 2r+1.
    let mut complete = false;
    let mut y = p.clone();
    for _ in 0..=(2 * r) {
        y = apply_sigma_tilde(s, &y, 1)?;
        if y == *p {
            complete = true;
            break;
        }
    }
    points.sort();
    points.dedup();
    Ok((points, complete))
}

pub fn is_minimal(s: &SystemModel) -> bool {
    match s {
        SystemModel::FinitePermutation(perm) => perm.cycles().len() == 1,
        SystemModel::IntegerShift => true,
        SystemModel::CircleRotation(q) => !is_root_of_unity(q),
    }
}

pub fn is_topologically_transitive(s: &SystemModel) -> bool {
    match s {
        // Singletons are open, so U = {x}, V = {y} must meet along an orbit.
        SystemModel::FinitePermutation(perm) => perm.cycles().len() == 1,
        SystemModel::IntegerShift => true,
        SystemModel::CircleRotation(q) => !is_root_of_unity(q),
    }
}

/// Two disjoint invariant nonempty open sets whose closures cover `Δ`, for
/// non-transitive finite systems. `None` when the system is transitive.
pub fn disjoint_invariant_open_sets(s: &SystemModel) -> Result<Option<(PointSet, PointSet)>> {
    if is_topologically_transitive(s) {
        return Ok(None);
    }
    match s {
        SystemModel::FinitePermutation(_) => {
            // U = {0}; O1 is the union of its iterates, O2 the complement of its closure.
            let (o1, _) = orbit(s, &Point::Finite(0), s.period_bound())?;
            let o2 = PointSet::cofinite(s, o1.clone());
            Ok(Some((PointSet::finite(s, o1), o2)))
        }
        other => Err(Error::Unsupported(format!(
            "open-set enumeration on the {} model",
            other.kind_name()
        ))),
    }
}

/// Open `U ∋ p` whose images `σ̃ⁱ(U)`, `-m ≤ i ≤ n`, are pairwise disjoint.
pub fn separated_neighborhood(s: &SystemModel, p: &Point, m: usize, n: usize) -> Result<PointSet> {
    if let SystemModel::CircleRotation(_) = s {
        return Err(Error::Unsupported("open arcs on the circle model".into()));
    }
    s.check_point(p)?;
    let mut iterates = Vec::new();
    for i in -(m as i64)..=(n as i64) {
        iterates.push(apply_sigma_tilde(s, p, i)?);
    }
    let count = iterates.len();
    iterates.sort();
    iterates.dedup();
    if iterates.len() != count {
        return Err(Error::NotSeparable);
    }
    Ok(PointSet::finite(s, vec![p.clone()]))
}

/// Checks "transitive and `Perⁿ⁰ = Δ` ⇒ `Δ` is a single finite orbit".
pub fn verify_toptraper(s: &SystemModel, n0: usize) -> bool {
    let premise = is_topologically_transitive(s)
        && matches!(per_n(s, n0 as i64), Ok(PointSet::All));
    if !premise {
        return true;
    }
    match s {
        SystemModel::FinitePermutation(perm) => {
            let (points, complete) = orbit(s, &Point::Finite(0), perm.len()).expect("valid point");
            complete && points.len() == perm.len()
        }
        // Infinite character spaces can never be a single finite orbit.
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> SystemModel {
        SystemModel::finite(vec![1, 0]).unwrap()
    }

    fn cycles(n: usize, cs: &[&[usize]]) -> SystemModel {
        SystemModel::FinitePermutation(Permutation::from_cycles(n, cs).unwrap())
    }

    fn circle(q: GaussianRational) -> SystemModel {
        SystemModel::circle(q).unwrap()
    }

    fn pyth() -> GaussianRational {
        GaussianRational::from_fracs(3, 5, 4, 5)
    }

    #[test]
    fn model_validation() {
        assert!(SystemModel::finite(vec![]).is_err());
        assert!(SystemModel::finite(vec![0, 0]).is_err());
        assert!(SystemModel::finite(vec![0, 2]).is_err());
        assert!(SystemModel::circle(GaussianRational::from_ints(1, 1)).is_err());
        assert!(SystemModel::circle(pyth()).is_ok());
    }

    #[test]
    fn sigma_tilde_examples() {
        assert_eq!(apply_sigma_tilde(&swap(), &Point::Finite(0), 3).unwrap(), Point::Finite(1));
        assert_eq!(apply_sigma_tilde(&SystemModel::shift(), &Point::Shift(5), -2).unwrap(), Point::Shift(3));
        let c = circle(GaussianRational::i());
        assert_eq!(
            apply_sigma_tilde(&c, &Point::Circle(GaussianRational::one()), 1).unwrap(),
            Point::Circle(-GaussianRational::i())
        );
        assert!(matches!(
            apply_sigma_tilde(&swap(), &Point::Shift(0), 1),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn per_n_examples() {
        assert_eq!(per_n(&swap(), 1).unwrap(), PointSet::Empty);
        assert_eq!(per_n(&swap(), 2).unwrap(), PointSet::All);
        assert_eq!(per_n(&SystemModel::shift(), 7).unwrap(), PointSet::Empty);
        assert_eq!(per_n(&circle(GaussianRational::i()), 4).unwrap(), PointSet::All);
        assert_eq!(per_n(&circle(GaussianRational::i()), 2).unwrap(), PointSet::Empty);
        assert_eq!(per_n(&swap(), 0), Err(Error::ZeroPeriod));
        let two_orbit = cycles(3, &[&[0, 1]]);
        assert_eq!(per_n(&two_orbit, 1).unwrap(), PointSet::Finite(vec![Point::Finite(2)]));
    }

    #[test]
    fn density_and_interior() {
        assert!(!aperiodic_points_dense(&swap()));
        assert!(aperiodic_points_dense(&SystemModel::shift()));
        assert!(aperiodic_points_dense(&circle(pyth())));
        assert!(!has_empty_interior(&swap(), &PointSet::All));
        let c = circle(GaussianRational::i());
        assert!(has_empty_interior(&c, &PointSet::finite(&c, vec![Point::Circle(GaussianRational::one())])));
        assert!(has_empty_interior(&SystemModel::shift(), &PointSet::Empty));
    }

    #[test]
    fn baire_examples() {
        assert!(check_baire_lemma(&swap(), 4));
        assert!(check_baire_lemma(&SystemModel::shift(), 10));
        assert!(check_baire_lemma(&circle(GaussianRational::i()), 8));
        // n_max below the permutation order still sees Per⁶ = All.
        assert!(check_baire_lemma(&cycles(5, &[&[0, 1, 2], &[3, 4]]), 1));
    }

    #[test]
    fn orbit_examples() {
        let c3 = cycles(3, &[&[0, 1, 2]]);
        let (pts, complete) = orbit(&c3, &Point::Finite(0), 5).unwrap();
        assert_eq!(pts, vec![Point::Finite(0), Point::Finite(1), Point::Finite(2)]);
        assert!(complete);

        let (pts, complete) = orbit(&SystemModel::shift(), &Point::Shift(0), 2).unwrap();
        assert_eq!(pts, (-2..=2).map(Point::Shift).collect::<Vec<_>>());
        assert!(!complete);

        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let (pts, complete) = orbit(&circle(i.clone()), &Point::Circle(one.clone()), 10).unwrap();
        let mut expected = vec![
            Point::Circle(one.clone()),
            Point::Circle(-&i),
            Point::Circle(-&one),
            Point::Circle(i),
        ];
        expected.sort();
        assert_eq!(pts, expected);
        assert!(complete);
    }

    #[test]
    fn orbit_completeness_boundary() {
        // A 5-cycle is covered by radius 2 (five consecutive iterates), not by radius 1.
        let c5 = cycles(5, &[&[0, 1, 2, 3, 4]]);
        assert!(orbit(&c5, &Point::Finite(0), 2).unwrap().1);
        assert!(!orbit(&c5, &Point::Finite(0), 1).unwrap().1);
    }

    #[test]
    fn minimality_and_transitivity() {
        assert!(is_minimal(&cycles(3, &[&[0, 1, 2]])));
        assert!(!is_minimal(&cycles(3, &[&[0, 1]])));
        assert!(is_minimal(&SystemModel::shift()));
        assert!(!is_minimal(&circle(GaussianRational::i())));
        assert!(!is_topologically_transitive(&cycles(3, &[&[0, 1]])));
        assert!(is_topologically_transitive(&cycles(4, &[&[0, 1, 2, 3]])));
        assert!(is_topologically_transitive(&circle(pyth())));
    }

    #[test]
    fn invariant_open_sets() {
        let s = cycles(3, &[&[0, 1]]);
        let (o1, o2) = disjoint_invariant_open_sets(&s).unwrap().unwrap();
        assert_eq!(o1, PointSet::Finite(vec![Point::Finite(0), Point::Finite(1)]));
        assert_eq!(o2, PointSet::Finite(vec![Point::Finite(2)]));
        assert_eq!(disjoint_invariant_open_sets(&cycles(3, &[&[0, 1, 2]])).unwrap(), None);
        let s = cycles(4, &[&[0, 1], &[2, 3]]);
        let (o1, o2) = disjoint_invariant_open_sets(&s).unwrap().unwrap();
        assert_eq!(o1, PointSet::Finite(vec![Point::Finite(0), Point::Finite(1)]));
        assert_eq!(o2, PointSet::Finite(vec![Point::Finite(2), Point::Finite(3)]));
        assert!(matches!(
            disjoint_invariant_open_sets(&circle(GaussianRational::i())),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn separated_neighborhoods() {
        let c4 = cycles(4, &[&[0, 1, 2, 3]]);
        assert_eq!(
            separated_neighborhood(&c4, &Point::Finite(0), 1, 2).unwrap(),
            PointSet::Finite(vec![Point::Finite(0)])
        );
        assert_eq!(
            separated_neighborhood(&SystemModel::shift(), &Point::Shift(0), 3, 3).unwrap(),
            PointSet::Finite(vec![Point::Shift(0)])
        );
        assert_eq!(separated_neighborhood(&swap(), &Point::Finite(0), 1, 1), Err(Error::NotSeparable));
        assert!(matches!(
            separated_neighborhood(&circle(pyth()), &Point::Circle(GaussianRational::one()), 1, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn toptraper_examples() {
        assert!(verify_toptraper(&cycles(3, &[&[0, 1, 2]]), 3));
        assert!(verify_toptraper(&SystemModel::shift(), 5));
        assert!(verify_toptraper(&cycles(3, &[&[0, 1]]), 2));
    }

    #[test]
    fn permutation_enumeration() {
        let counts: Vec<usize> = (1..=5).map(|n| Permutation::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 120]);
        assert_eq!(Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap().order(), 6);
    }

    #[test]
    fn point_set_algebra() {
        let s = SystemModel::shift();
        let a = PointSet::finite(&s, vec![Point::Shift(2), Point::Shift(1), Point::Shift(2)]);
        assert_eq!(a, PointSet::Finite(vec![Point::Shift(1), Point::Shift(2)]));
        let co = PointSet::cofinite(&s, vec![Point::Shift(1)]);
        assert!(!a.is_subset_of(&co));
        assert!(PointSet::finite(&s, vec![Point::Shift(2)]).is_subset_of(&co));
        assert_eq!(a.intersect(&s, &co), PointSet::Finite(vec![Point::Shift(2)]));
        assert!(!PointSet::All.is_subset_of(&co));
        assert_eq!(PointSet::cofinite(&swap(), vec![Point::Finite(0)]), PointSet::Finite(vec![Point::Finite(1)]));
    }
}

//! Twist algebras `K(A)` and `K(A, F)` over a subresiduated lattice, and the
//! way back: the quotient `T/θ` by `x θ y iff x -> y = 1 = y -> x`, with the
//! comparison maps `ρ_T : T -> K(T/θ)` and `α_A : A -> K(A)/θ`.

use thiserror::Error;

use crate::algebra::hom::{hom_failure, is_injective};
use crate::algebra::suites::verify_sna;
use crate::algebra::{AlgebraError, SnaAlgebra};
use crate::elemset::{Elem, ElemSet};
use crate::lattice::FiniteLattice;
use crate::partition::{congruence_witness, Partition};
use crate::signature::{FiniteAlgebra, Signature};
use crate::srl::{is_subresiduated_filter, verify_srl, Srl, SrlError};
use crate::verdict::CheckMode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("not a subresiduated lattice: {0}")]
    NotAnSrl(String),
    #[error("not a subresiduated Nelson algebra: {0}")]
    NotAnSna(String),
    #[error("{0} is not a subresiduated filter")]
    NotSubresiduatedFilter(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Srl(#[from] SrlError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `K(A)` or `K(A, F)`. Element `i` is the pair `pairs()[i]`; pairs are in
/// lexicographic order of source indices.
#[derive(Debug, Clone)]
pub struct TwistAlgebra {
    algebra: SnaAlgebra,
    source: Srl,
    filter: Option<ElemSet>,
    pairs: Vec<(Elem, Elem)>,
    index: Vec<Option<Elem>>,
}

impl TwistAlgebra {
    pub fn algebra(&self) -> &SnaAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> SnaAlgebra {
        self.algebra
    }

    pub fn source(&self) -> &Srl {
        &self.source
    }

    pub fn filter(&self) -> Option<&ElemSet> {
        self.filter.as_ref()
    }

    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn pair(&self, x: Elem) -> (Elem, Elem) {
        self.pairs[x]
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    /// Index of `(a, b)` if it belongs to the carrier.
    pub fn index_of(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.index[a * self.source.size() + b]
    }

    /// Index of the pair named `(a,b)` by source element names.
    pub fn index_by_names(&self, a: &str, b: &str) -> Option<Elem> {
        self.index_of(self.source.elem(a)?, self.source.elem(b)?)
    }

    /// `(0, 0)`, the center of every twist.
    pub fn center(&self) -> Elem {
        let z = self.source.bottom();
        self.index_of(z, z).expect("(0,0) is in every twist")
    }
}

fn require_srl(a: &Srl) -> Result<(), TwistError> {
    match verify_srl(a, CheckMode::FirstFailure).first_failure() {
        None => Ok(()),
        Some(f) => Err(TwistError::NotAnSrl(f.to_string())),
    }
}

fn require_sna(t: &SnaAlgebra) -> Result<(), TwistError> {
    match verify_sna(t, CheckMode::FirstFailure).first_failure() {
        None => Ok(()),
        Some(f) => Err(TwistError::NotAnSna(f.to_string())),
    }
}

pub fn pair_name(a: &Srl, p: (Elem, Elem)) -> String {
    format!("({},{})", a.name(p.0), a.name(p.1))
}

fn twist_of_pairs(a: &Srl, pairs: Vec<(Elem, Elem)>, filter: Option<ElemSet>) -> Result<TwistAlgebra, TwistError> {
    let n = a.size();
    let k = pairs.len();
    let mut index = vec![None; n * n];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        index[x * n + y] = Some(i);
    }
    let names = pairs.iter().map(|&p| pair_name(a, p)).collect();
    let mut leq = vec![false; k * k];
    let mut imp = vec![0; k * k];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for (j, &(u, v)) in pairs.iter().enumerate() {
            leq[i * k + j] = a.leq(x, u) && a.leq(v, y);
            let target = (a.imp(x, u), a.meet(x, v));
            imp[i * k + j] = index[target.0 * n + target.1].ok_or_else(|| {
                TwistError::Invariant(format!(
                    "{} => {} = {} leaves the carrier",
                    pair_name(a, (x, y)),
                    pair_name(a, (u, v)),
                    pair_name(a, target)
                ))
            })?;
        }
    }
    let neg = pairs
        .iter()
        .map(|&(x, y)| {
            index[y * n + x]
                .ok_or_else(|| TwistError::Invariant(format!("~{} leaves the carrier", pair_name(a, (x, y)))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let lattice = FiniteLattice::from_leq(names, leq).map_err(AlgebraError::from)?;
    let algebra = SnaAlgebra::new(lattice, imp, neg)?;
    Ok(TwistAlgebra {
        algebra,
        source: a.clone(),
        filter,
        pairs,
        index,
    })
}

/// `K(A) = {(a, b) : a ^ b = 0}`.
pub fn twist_full(a: &Srl) -> Result<TwistAlgebra, TwistError> {
    require_srl(a)?;
    let n = a.size();
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| a.meet(x, y) == a.bottom())
        .collect();
    twist_of_pairs(a, pairs, None)
}

/// `K(A, F) = {(a, b) in K(A) : a v b in F}` for a subresiduated filter `F`.
/// Closure of the carrier under the operations is checked, not assumed.
pub fn twist_filtered(a: &Srl, f: &ElemSet) -> Result<TwistAlgebra, TwistError> {
    require_srl(a)?;
    if f.universe() != a.size() || !is_subresiduated_filter(a, f)? {
        return Err(TwistError::NotSubresiduatedFilter(
            f.display_with(a.names()).to_string(),
        ));
    }
    let full = twist_full(a)?;
    let members = ElemSet::from_elems(
        full.size(),
        (0..full.size()).filter(|&i| {
            let (x, y) = full.pair(i);
            f.contains(a.join(x, y))
        }),
    );
    if let Some(why) = subuniverse_failure(&full.algebra.signature(), &members) {
        return Err(TwistError::Invariant(format!("K(A, F) is not closed: {why}")));
    }
    let pairs = members.iter().map(|i| full.pair(i)).collect();
    twist_of_pairs(a, pairs, Some(f.clone()))
}

fn subuniverse_failure(sig: &Signature<'_>, s: &ElemSet) -> Option<String> {
    if sig.is_subuniverse(s) {
        None
    } else {
        Some(format!("{} is not a subuniverse", s.display_with(sig.names)))
    }
}

/// The lattice-and-implication reduct `(^, v, ->, 0, 1)` of an algebra.
fn implication_reduct(t: &SnaAlgebra) -> Signature<'_> {
    let mut sig = t.signature();
    sig.unary.clear();
    sig
}

/// `x θ y iff x -> y = 1 and y -> x = 1`, checked to be compatible with
/// `^`, `v` and `->`.
pub fn theta(t: &SnaAlgebra) -> Result<Partition, TwistError> {
    require_sna(t)?;
    let one = t.top();
    let p = Partition::from_relation(t.size(), |x, y| t.imp(x, y) == one && t.imp(y, x) == one);
    for x in 0..t.size() {
        for y in 0..t.size() {
            let related = t.imp(x, y) == one && t.imp(y, x) == one;
            if related != p.same(x, y) {
                return Err(TwistError::Invariant("θ is not an equivalence relation".into()));
            }
        }
    }
    if let Some(why) = congruence_witness(&implication_reduct(t), &p) {
        return Err(TwistError::Invariant(format!("θ is not compatible: {why}")));
    }
    Ok(p)
}

/// `T/θ` as a subresiduated lattice. Class `i` is named after its least
/// member `representatives[i]`.
#[derive(Debug, Clone)]
pub struct ThetaQuotient {
    pub partition: Partition,
    pub srl: Srl,
    pub class_of: Vec<Elem>,
    pub representatives: Vec<Elem>,
}

/// Builds `T/θ` with `x/θ <= y/θ iff x -> y = 1` and
/// `x/θ -> y/θ = (x -> y)/θ`, then checks that the result is a subresiduated
/// lattice whose `D` is `{(1 -> x)/θ}`.
pub fn quotient_srl(t: &SnaAlgebra) -> Result<ThetaQuotient, TwistError> {
    let partition = theta(t)?;
    let reps = partition.representatives();
    let k = reps.len();
    let class_of: Vec<Elem> = (0..t.size()).map(|x| partition.block_of(x)).collect();
    let one = t.top();
    let names = reps.iter().map(|&r| format!("[{}]", t.name(r))).collect();
    let mut leq = vec![false; k * k];
    let mut imp = vec![0; k * k];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            leq[i * k + j] = t.imp(x, y) == one;
            imp[i * k + j] = class_of[t.imp(x, y)];
        }
    }
    for x in 0..t.size() {
        for y in 0..t.size() {
            let (cx, cy) = (class_of[x], class_of[y]);
            if leq[cx * k + cy] != (t.imp(x, y) == one) {
                return Err(TwistError::Invariant(format!(
                    "order on T/θ depends on representatives at ({}, {})",
                    t.name(x),
                    t.name(y)
                )));
            }
        }
    }
    let lattice = FiniteLattice::from_leq(names, leq).map_err(AlgebraError::from)?;
    for x in 0..t.size() {
        for y in 0..t.size() {
            let (cx, cy) = (class_of[x], class_of[y]);
            if lattice.meet(cx, cy) != class_of[t.meet(x, y)] || lattice.join(cx, cy) != class_of[t.join(x, y)] {
                return Err(TwistError::Invariant(format!(
                    "lattice operations of T/θ disagree with T at ({}, {})",
                    t.name(x),
                    t.name(y)
                )));
            }
        }
    }
    let srl = Srl::from_imp_table(lattice, imp)?;
    let boxes = ElemSet::from_elems(k, (0..t.size()).map(|x| class_of[t.boxed(x)]));
    if &boxes != srl.d_set() {
        return Err(TwistError::Invariant("D of T/θ differs from {(1 -> x)/θ}".into()));
    }
    srl.validate()?;
    require_srl(&srl)?;
    Ok(ThetaQuotient {
        partition,
        srl,
        class_of,
        representatives: reps,
    })
}

/// `ρ_T(x) = (x/θ, ~x/θ)` into `K(T/θ)`.
#[derive(Debug, Clone)]
pub struct RhoMap {
    pub quotient: ThetaQuotient,
    pub twist: TwistAlgebra,
    pub map: Vec<Elem>,
    pub surjective: bool,
}

/// Builds `ρ_T` and checks that it is an injective homomorphism.
pub fn rho(t: &SnaAlgebra) -> Result<RhoMap, TwistError> {
    let quotient = quotient_srl(t)?;
    let twist = twist_full(&quotient.srl)?;
    let map = (0..t.size())
        .map(|x| {
            let p = (quotient.class_of[x], quotient.class_of[t.neg(x)]);
            twist.index_of(p.0, p.1).ok_or_else(|| {
                TwistError::Invariant(format!(
                    "ρ({}) = {} is not in K(T/θ)",
                    t.name(x),
                    pair_name(&quotient.srl, p)
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(why) = hom_failure(&t.signature(), &twist.algebra.signature(), &map) {
        return Err(TwistError::Invariant(format!("ρ is not a homomorphism: {why}")));
    }
    if !is_injective(&map) {
        return Err(TwistError::Invariant("ρ is not injective".into()));
    }
    let surjective = t.size() == twist.size();
    Ok(RhoMap {
        quotient,
        twist,
        map,
        surjective,
    })
}

/// `α_A(a) = (a, ¬a)/θ` from `A` onto `K(A)/θ`.
#[derive(Debug, Clone)]
pub struct AlphaMap {
    pub twist: TwistAlgebra,
    pub quotient: ThetaQuotient,
    pub map: Vec<Elem>,
}

/// Builds `α_A` and checks that it is an isomorphism of subresiduated
/// lattices.
pub fn alpha(a: &Srl) -> Result<AlphaMap, TwistError> {
    let twist = twist_full(a)?;
    let quotient = quotient_srl(&twist.algebra)?;
    let map: Vec<Elem> = (0..a.size())
        .map(|x| {
            let i = twist.index_of(x, a.neg(x)).expect("(a, ¬a) is in K(A)");
            quotient.class_of[i]
        })
        .collect();
    if let Some(why) = hom_failure(&a.signature(), &quotient.srl.signature(), &map) {
        return Err(TwistError::Invariant(format!("α is not a homomorphism: {why}")));
    }
    if !is_injective(&map) || map.len() != quotient.srl.size() {
        return Err(TwistError::Invariant("α is not bijective".into()));
    }
    Ok(AlphaMap { twist, quotient, map })
}

/// `K(f)(a, b) = (f(a), f(b))` for a homomorphism `f : A -> B` of
/// subresiduated lattices, as a map `ka -> kb` of twist indices.
pub fn lift_hom(ka: &TwistAlgebra, kb: &TwistAlgebra, f: &[Elem]) -> Result<Vec<Elem>, TwistError> {
    if let Some(why) = hom_failure(&ka.source.signature(), &kb.source.signature(), f) {
        return Err(TwistError::NotAHomomorphism(why));
    }
    let map = ka
        .pairs
        .iter()
        .map(|&(x, y)| {
            kb.index_of(f[x], f[y]).ok_or_else(|| {
                TwistError::Invariant(format!(
                    "K(f){} = {} is not in the codomain",
                    pair_name(&ka.source, (x, y)),
                    pair_name(&kb.source, (f[x], f[y]))
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(why) = hom_failure(&ka.algebra.signature(), &kb.algebra.signature(), &map) {
        return Err(TwistError::Invariant(format!("K(f) is not a homomorphism: {why}")));
    }
    Ok(map)
}

/// `C(g)(x/θ) = g(x)/θ` for a homomorphism `g : T -> U`, as a map between
/// the quotients `qt` of `T` and `qu` of `U`.
pub fn drop_hom(
    t: &SnaAlgebra,
    u: &SnaAlgebra,
    qt: &ThetaQuotient,
    qu: &ThetaQuotient,
    g: &[Elem],
) -> Result<Vec<Elem>, TwistError> {
    if let Some(why) = hom_failure(&t.signature(), &u.signature(), g) {
        return Err(TwistError::NotAHomomorphism(why));
    }
    let map: Vec<Elem> = qt.representatives.iter().map(|&r| qu.class_of[g[r]]).collect();
    for x in 0..t.size() {
        if map[qt.class_of[x]] != qu.class_of[g[x]] {
            return Err(TwistError::Invariant(format!(
                "C(g) depends on the representative of {}",
                t.name(x)
            )));
        }
    }
    if let Some(why) = hom_failure(&qt.srl.signature(), &qu.srl.signature(), &map) {
        return Err(TwistError::Invariant(format!("C(g) is not a homomorphism: {why}")));
    }
    Ok(map)
}

/// Checks `C(K(f)) ∘ α_A = α_B ∘ f` pointwise for `f : A -> B`.
pub fn check_alpha_naturality(a: &Srl, b: &Srl, f: &[Elem]) -> Result<(), TwistError> {
    let (aa, ab) = (alpha(a)?, alpha(b)?);
    let kf = lift_hom(&aa.twist, &ab.twist, f)?;
    let ckf = drop_hom(aa.twist.algebra(), ab.twist.algebra(), &aa.quotient, &ab.quotient, &kf)?;
    for x in 0..a.size() {
        if ckf[aa.map[x]] != ab.map[f[x]] {
            return Err(TwistError::Invariant(format!("α is not natural at {}", a.name(x))));
        }
    }
    Ok(())
}

/// Checks `K(C(g)) ∘ ρ_T = ρ_U ∘ g` pointwise for `g : T -> U`.
pub fn check_rho_naturality(t: &SnaAlgebra, u: &SnaAlgebra, g: &[Elem]) -> Result<(), TwistError> {
    let (rt, ru) = (rho(t)?, rho(u)?);
    let cg = drop_hom(t, u, &rt.quotient, &ru.quotient, g)?;
    let kcg = lift_hom(&rt.twist, &ru.twist, &cg)?;
    for x in 0..t.size() {
        if kcg[rt.map[x]] != ru.map[g[x]] {
            return Err(TwistError::Invariant(format!("ρ is not natural at {}", t.name(x))));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hom::is_isomorphic;
    use crate::lattice::build_lattice;
    use crate::srl::make_srl;

    fn s1() -> Srl {
        let l = build_lattice(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let d = l.subset(&["0", "1"]).unwrap();
        make_srl(l, d).unwrap()
    }

    fn c2() -> Srl {
        let l = build_lattice(&["0", "1"], &[("0", "1")]).unwrap();
        let d = l.subset(&["0", "1"]).unwrap();
        make_srl(l, d).unwrap()
    }

    #[test]
    fn twist_of_s1_has_nine_elements() {
        let k = twist_full(&s1()).unwrap();
        let names: Vec<&str> = k.algebra().names().iter().map(String::as_str).collect();
        assert_eq!(
            names,
            ["(0,0)", "(0,a)", "(0,b)", "(0,1)", "(a,0)", "(a,b)", "(b,0)", "(b,a)", "(1,0)"]
        );
        assert_eq!(k.algebra().name(k.algebra().bottom()), "(0,1)");
        assert_eq!(k.algebra().name(k.algebra().top()), "(1,0)");
        assert_eq!(k.algebra().center(), Some(k.center()));
    }

    #[test]
    fn twist_of_c2_is_the_three_chain() {
        let k = twist_full(&c2()).unwrap();
        assert_eq!(k.size(), 3);
        assert!(k.algebra().lattice().is_chain());
    }

    #[test]
    fn remark_top_iff_first_coordinates_ordered() {
        let a = s1();
        let k = twist_full(&a).unwrap();
        let t = k.algebra();
        for x in 0..k.size() {
            for y in 0..k.size() {
                assert_eq!(t.imp(x, y) == t.top(), a.leq(k.pair(x).0, k.pair(y).0));
            }
        }
    }

    #[test]
    fn quotient_of_twist_is_the_source() {
        let a = s1();
        let k = twist_full(&a).unwrap();
        let q = quotient_srl(k.algebra()).unwrap();
        assert_eq!(q.partition.num_blocks(), 4);
        assert!(is_isomorphic(&q.srl.signature(), &a.signature()));
        let r = rho(k.algebra()).unwrap();
        assert!(r.surjective);
        let al = alpha(&a).unwrap();
        assert_eq!(al.map.len(), 4);
    }

    #[test]
    fn filter_must_be_subresiduated() {
        let a = s1();
        let top_only = a.lattice().subset(&["1"]).unwrap();
        assert!(matches!(
            twist_filtered(&a, &top_only),
            Err(TwistError::NotSubresiduatedFilter(_))
        ));
        let full = ElemSet::full(4);
        assert_eq!(twist_filtered(&a, &full).unwrap().size(), 9);
    }

    #[test]
    fn lifting_identity_is_identity() {
        let a = s1();
        let k = twist_full(&a).unwrap();
        let id: Vec<Elem> = (0..4).collect();
        assert_eq!(lift_hom(&k, &k, &id).unwrap(), (0..9).collect::<Vec<_>>());
        check_alpha_naturality(&a, &a, &id).unwrap();
    }
}

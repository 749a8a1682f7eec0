//! Random-restart least squares for SU(2) representations.
//!
//! A trial draws one uniform point of `S^3` per generator, then runs
//! projected gradient descent on `defect` with Barzilai-Borwein step
//! proposals, Armijo backtracking, and renormalization after every step.
//! Trials are independent and run in parallel in fixed-size batches; the
//! winner is always the qualifying trial with the lowest restart index.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::presentation::GroupPresentation;
use super::quaternion::Quaternion;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_EPS: f64 = 1e-2;
pub const DEFAULT_RESTARTS: u64 = 200;

pub const NEGATIVE_RESULT_DISCLAIMER: &str = "no irreducible representation was found; \
    this is numerical evidence only, not a proof that none exists";

const MAX_ITERS: usize = 4000;
const BATCH: u64 = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuaternionAssignment {
    pub images: Vec<Quaternion>,
}

impl QuaternionAssignment {
    pub fn new(images: Vec<Quaternion>) -> Self {
        QuaternionAssignment { images }
    }

    pub fn normalized(&self) -> Self {
        QuaternionAssignment::new(self.images.iter().map(|q| q.normalized()).collect())
    }

    /// A uniform point of `(S^3)^n` from the stream `(seed, index)`.
    pub fn random(n: usize, seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let images = (0..n)
            .map(|_| loop {
                let q = Quaternion::new(
                    rng.sample(StandardNormal),
                    rng.sample(StandardNormal),
                    rng.sample(StandardNormal),
                    rng.sample(StandardNormal),
                );
                if q.norm_sq() > 1e-12 {
                    break q.normalized();
                }
            })
            .collect();
        QuaternionAssignment { images }
    }
}

fn letter(images: &[Quaternion], l: i32) -> Quaternion {
    let g = images[l.unsigned_abs() as usize - 1];
    if l > 0 {
        g
    } else {
        g.conj()
    }
}

/// The image of a word; inverse letters use the conjugate, so this is the
/// group-theoretic value only for unit images.
pub fn evaluate_word(word: &[i32], a: &QuaternionAssignment) -> Quaternion {
    word.iter()
        .fold(Quaternion::ONE, |acc, &l| acc * letter(&a.images, l))
}

fn check_len(pres: &GroupPresentation, a: &QuaternionAssignment) {
    assert_eq!(
        pres.generator_count,
        a.images.len(),
        "assignment length must match the generator count"
    );
}

/// `Σ_r ‖ρ(r) - 1‖²`.
pub fn defect(pres: &GroupPresentation, a: &QuaternionAssignment) -> f64 {
    check_len(pres, a);
    pres.relators
        .iter()
        .map(|r| (evaluate_word(r, a) - Quaternion::ONE).norm_sq())
        .sum()
}

fn ambient_gradient(pres: &GroupPresentation, a: &QuaternionAssignment) -> Vec<Quaternion> {
    let mut grad = vec![Quaternion::default(); a.images.len()];
    let mut suffix = Vec::new();
    for word in &pres.relators {
        // suffix[k] = L_{k+1} ... L_n
        suffix.clear();
        suffix.resize(word.len() + 1, Quaternion::ONE);
        for k in (0..word.len()).rev() {
            suffix[k] = letter(&a.images, word[k]) * suffix[k + 1];
        }
        let residual = suffix[0] - Quaternion::ONE;
        let mut prefix = Quaternion::ONE;
        for (k, &l) in word.iter().enumerate() {
            // d‖P L S - 1‖² / dL = 2 conj(P) (W - 1) conj(S)
            let g = (prefix.conj() * residual * suffix[k + 1].conj()).scale(2.0);
            let idx = l.unsigned_abs() as usize - 1;
            grad[idx] = grad[idx] + if l > 0 { g } else { g.conj() };
            prefix = prefix * letter(&a.images, l);
        }
    }
    grad
}

/// Riemannian gradient of `defect` on `(S^3)^n`.
pub fn defect_gradient(pres: &GroupPresentation, a: &QuaternionAssignment) -> Vec<Quaternion> {
    check_len(pres, a);
    ambient_gradient(pres, a)
        .into_iter()
        .zip(&a.images)
        .map(|(g, &x)| g.tangent_at(x))
        .collect()
}

/// `max ‖gh - hg‖` over pairs of images; 0 for fewer than two generators.
pub fn irreducibility_margin(a: &QuaternionAssignment) -> f64 {
    let imgs = &a.images;
    let mut best: f64 = 0.0;
    for i in 0..imgs.len() {
        for j in i + 1..imgs.len() {
            best = best.max(imgs[i].commutator_norm(imgs[j]));
        }
    }
    best
}

pub fn is_irreducible(a: &QuaternionAssignment, eps: f64) -> bool {
    irreducibility_margin(a) > eps
}

/// Nearest-subgroup guess for the image of a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageClass {
    Cyclic,
    BinaryDihedral,
    NonDihedral,
}

const CLASS_TOL: f64 = 1e-4;

/// Heuristic: cyclic if the images commute, binary dihedral if every image
/// lies in the normalizer of one circle subgroup `{cos t + sin t · u}`.
pub fn classify_image(a: &QuaternionAssignment, eps: f64) -> ImageClass {
    if !is_irreducible(a, eps) {
        return ImageClass::Cyclic;
    }
    let unit = |v: [f64; 3]| {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        (n > 1e-6).then(|| [v[0] / n, v[1] / n, v[2] / n])
    };
    let cross = |u: [f64; 3], v: [f64; 3]| {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    };
    let axes: Vec<[f64; 3]> = a.images.iter().filter_map(|q| unit(q.imag())).collect();
    let mut candidates = axes.clone();
    for i in 0..axes.len() {
        for j in i + 1..axes.len() {
            candidates.extend(unit(cross(axes[i], axes[j])));
        }
    }
    let fits = |u: [f64; 3]| {
        a.images.iter().all(|q| {
            let v = q.imag();
            let along = v[0] * u[0] + v[1] * u[1] + v[2] * u[2];
            let perp_sq = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - along * along).max(0.0);
            // in the circle, or in the coset of pure imaginaries orthogonal to u
            perp_sq.sqrt() < CLASS_TOL || (q.w * q.w + along * along).sqrt() < CLASS_TOL
        })
    };
    if candidates.into_iter().any(fits) {
        ImageClass::BinaryDihedral
    } else {
        ImageClass::NonDihedral
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepSearchResult {
    pub found: bool,
    pub assignment: Option<QuaternionAssignment>,
    /// Defect of the winning trial, or of the lowest-defect trial if none won.
    pub defect: f64,
    pub irreducibility_margin: f64,
    pub restarts_used: u64,
    pub seed: u64,
    /// Heuristic, present only when `found`.
    pub image_class: Option<ImageClass>,
}

#[derive(Debug, Clone)]
struct Trial {
    index: u64,
    point: QuaternionAssignment,
    defect: f64,
    margin: f64,
}

fn retract(x: &QuaternionAssignment, dir: &[Quaternion], alpha: f64) -> QuaternionAssignment {
    QuaternionAssignment::new(
        x.images
            .iter()
            .zip(dir)
            .map(|(&q, &d)| (q - d.scale(alpha)).normalized())
            .collect(),
    )
}

fn sq_norm(v: &[Quaternion]) -> f64 {
    v.iter().map(|q| q.norm_sq()).sum()
}

/// Local minimization from `x`; stops once `defect < target`.
pub fn minimize_defect(
    pres: &GroupPresentation,
    mut x: QuaternionAssignment,
    target: f64,
) -> (QuaternionAssignment, f64) {
    let mut f = defect(pres, &x);
    let mut g = defect_gradient(pres, &x);
    let mut step = 0.1;
    for _ in 0..MAX_ITERS {
        let gn2 = sq_norm(&g);
        if f < target || gn2 < 1e-30 {
            break;
        }
        let mut alpha = step;
        let (x_new, f_new) = loop {
            let cand = retract(&x, &g, alpha);
            let fc = defect(pres, &cand);
            if fc <= f - 1e-4 * alpha * gn2 {
                break (cand, fc);
            }
            alpha *= 0.5;
            if alpha < 1e-18 {
                return (x, f);
            }
        };
        let g_new = defect_gradient(pres, &x_new);
        let (mut ss, mut sy) = (0.0, 0.0);
        for k in 0..g.len() {
            let s = x_new.images[k] - x.images[k];
            ss += s.norm_sq();
            sy += s.dot(g_new[k] - g[k]);
        }
        step = if sy > 0.0 {
            (ss / sy).clamp(1e-6, 10.0)
        } else {
            (2.0 * alpha).min(10.0)
        };
        x = x_new;
        f = f_new;
        g = g_new;
    }
    (x, f)
}

fn run_trial(pres: &GroupPresentation, seed: u64, index: u64, tol: f64) -> Trial {
    let start = QuaternionAssignment::random(pres.generator_count, seed, index);
    let (point, defect) = minimize_defect(pres, start, tol * 1e-3);
    Trial {
        index,
        margin: irreducibility_margin(&point),
        point,
        defect,
    }
}

/// Searches for `ρ` with `defect < tol` and commutator margin `> eps`.
pub fn search_irreducible(
    pres: &GroupPresentation,
    restarts: u64,
    seed: u64,
    tol: f64,
    eps: f64,
) -> Result<RepSearchResult> {
    if restarts == 0 {
        return Err(Error::invalid("restarts must be at least 1"));
    }
    if !(tol > 0.0 && tol.is_finite()) || !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::invalid(format!(
            "tol and eps must be positive, got {tol}, {eps}"
        )));
    }
    let mut best: Option<Trial> = None;
    let mut start = 0;
    while start < restarts {
        let end = (start + BATCH).min(restarts);
        let trials: Vec<Trial> = (start..end)
            .into_par_iter()
            .map(|k| run_trial(pres, seed, k, tol))
            .collect();
        if let Some(w) = trials.iter().find(|t| t.defect < tol && t.margin > eps) {
            return Ok(RepSearchResult {
                found: true,
                image_class: Some(classify_image(&w.point, eps)),
                assignment: Some(w.point.clone()),
                defect: w.defect,
                irreducibility_margin: w.margin,
                restarts_used: w.index + 1,
                seed,
            });
        }
        for t in trials {
            if best.as_ref().is_none_or(|b| t.defect < b.defect) {
                best = Some(t);
            }
        }
        start = end;
    }
    let best = best.expect("restarts >= 1");
    Ok(RepSearchResult {
        found: false,
        assignment: None,
        defect: best.defect,
        irreducibility_margin: best.margin,
        restarts_used: restarts,
        seed,
        image_class: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::presentation::{lens_presentation, surgery_presentation};
    use crate::Slope;
    use std::f64::consts::PI;
    use Quaternion as Q;

    #[test]
    fn defect_examples() {
        let lens5 = lens_presentation(5).unwrap();
        let root = Q::from_axis_angle([1.0, 0.0, 0.0], 2.0 * PI / 5.0);
        assert!(defect(&lens5, &QuaternionAssignment::new(vec![root])) < 1e-12);
        let j = QuaternionAssignment::new(vec![Q::J]);
        assert!((defect(&lens5, &j) - 2.0).abs() < 1e-12);
        let pres = surgery_presentation(2, 3, Slope::integer(1)).unwrap();
        let ones = QuaternionAssignment::new(vec![Q::ONE; 2]);
        assert_eq!(defect(&pres, &ones), 0.0);
        assert!(sq_norm(&defect_gradient(&pres, &ones)).sqrt() < 1e-8);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(
            &QuaternionAssignment::new(vec![Q::I, Q::J]),
            0.5
        ));
        assert!(!is_irreducible(
            &QuaternionAssignment::new(vec![Q::I, Q::I]),
            0.5
        ));
        assert!(!is_irreducible(
            &QuaternionAssignment::new(vec![Q::K]),
            1e-9
        ));
    }

    #[test]
    fn random_points_are_unit_and_reproducible() {
        let a = QuaternionAssignment::random(3, 7, 11);
        assert_eq!(a, QuaternionAssignment::random(3, 7, 11));
        assert_ne!(a, QuaternionAssignment::random(3, 7, 12));
        assert!(a.images.iter().all(|q| (q.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn classification() {
        // ⟨i, j⟩ is the quaternion group, binary dihedral of order 8
        let q8 = QuaternionAssignment::new(vec![Q::I, Q::J]);
        assert_eq!(classify_image(&q8, 1e-2), ImageClass::BinaryDihedral);
        let z = Q::from_axis_angle([0.0, 0.0, 1.0], 0.3);
        let bd = QuaternionAssignment::new(vec![z, Q::I]);
        assert_eq!(classify_image(&bd, 1e-2), ImageClass::BinaryDihedral);
        let a = Q::from_axis_angle([1.0, 0.0, 0.0], 0.4);
        let b = Q::from_axis_angle([0.0, 0.6, 0.8], 1.1);
        let generic = QuaternionAssignment::new(vec![a, b]);
        assert_eq!(classify_image(&generic, 1e-2), ImageClass::NonDihedral);
        let abelian = QuaternionAssignment::new(vec![a, a]);
        assert_eq!(classify_image(&abelian, 1e-2), ImageClass::Cyclic);
    }

    #[test]
    fn argument_validation() {
        let pres = lens_presentation(3).unwrap();
        assert!(search_irreducible(&pres, 0, 1, 1e-10, 1e-2).is_err());
        assert!(search_irreducible(&pres, 1, 1, 0.0, 1e-2).is_err());
        assert!(search_irreducible(&pres, 1, 1, 1e-10, f64::NAN).is_err());
    }
}

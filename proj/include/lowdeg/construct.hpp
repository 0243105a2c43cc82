#pragma once

#include "lowdeg/motion.hpp"

namespace lowdeg {

// Motions with prescribed exceptional degree reduction. Every constructor
// returns the reduced monic normal form of its result.
namespace construct {

// norm(H) R H + eps E H from a monic seed motion R + eps E.
// Throws StudyViolation when the seed is not a motion polynomial and
// PreconditionError when the seed is not monic or H = 0.
MotionPolynomial exceptional(const QuatPoly& r, const QuatPoly& e, const QuatPoly& h);

// c R + eps F D with c = norm(H) for a right factor H of R (H = R when
// omitted). R and F must lie in span{1, k}, D in span{i, j}, and
// deg(F D) <= deg(c R). Throws PreconditionError("not planar form").
MotionPolynomial planar(const QuatPoly& r, const QuatPoly& d, const QuatPoly& f);
MotionPolynomial planar(const QuatPoly& r, const QuatPoly& d, const QuatPoly& f, const QuatPoly& h);

// norm(Q) Q + eps D Q with deg Q = 1 and deg D = 2.
MotionPolynomial darboux(const QuatPoly& q, const QuatPoly& d);

// (f + eps G) C for a Darboux motion C, deg f = 1 and G vectorial.
MotionPolynomial wunderlich(const RealPoly& f, const QuatPoly& g, const MotionPolynomial& c);

// (t^2 + 1)(t - k) + eps (t i + j).
MotionPolynomial cardan();
// Conjugate of the Cardan motion.
MotionPolynomial oldham();
// darboux(t - k, i + (t^2 + 2) k)
MotionPolynomial darboux_example();
// darboux(t - k, (t^2 + 2) k): translation along the rotation axis.
MotionPolynomial vertical_darboux_example();
// wunderlich(t + 1, 2 i - j, darboux_example())
MotionPolynomial wunderlich_example();

}  // namespace construct

}  // namespace lowdeg

#pragma once

#include <string>

#include "sbrace/cohomology_rb.hpp"
#include "sbrace/cohomology_rrb.hpp"
#include "sbrace/cohomology_sb.hpp"

namespace sbrace {

// RRB -> RB on the semidirect product. Coefficients K x L, pair (k,l) encoded
// as k*|L| + l, with R_I(k,l) = (0, S(k) - l) and
//   gamma_(a,b)(k,l) = (nu_b^-1(mu_a(k) + f(l,a)), sigma_b(l)).
GroupAction induced_gamma(const RRBModule& m);
RBModule induced_rb_module(const RRBModule& m);
RbCochain omega_rb(const RRBModule& m, const RrbCochain& c);

// Brace -> square. Coefficients I x I, pair (a,b) encoded as a*|I| + b.
ActionTriplet induced_triplet_square(const ActionTriplet& t);
SbCochain omega_sb(const ActionTriplet& t, const SbCochain& c);

// RB -> brace: triplet and cocycle of the brace induced by an RB extension.
//   xi_x = gamma_R(x)^-1, zeta_x = gamma_x,
//   eps_x(y) = gamma_{x R(x)}(y + R_I(y)) - gamma_R(x)(R_I(y))
ActionTriplet triplet_from_rb_module(const RBModule& m);
SbCochain psi_tilde(const RBModule& m, const RbCochain& c);

// RRB -> brace, for K = L with S = id over an RRB group (H., Ho, lambda, id).
ActionTriplet triplet_from_rrb_module(const RRBModule& m);
SbCochain psi(const RRBModule& m, const RrbCochain& c);

// Quadruple nu = xi, mu = zeta, sigma = eps, f(k,h) = -zeta_h(k) + xi_h(eps_h(k))
// over rrb_from_brace(H) with coefficients (I, I, trivial, id).
RRBModule rrb_module_from_triplet(const ActionTriplet& t);

struct DiagramInstance {
    ActionTriplet triplet;         // on (H, I)
    RRBModule rrb;                 // over rrb_from_brace(H)
    RBModule rb;                   // over square_operator(H), coefficients I x I
    ActionTriplet square_triplet;  // on (square_brace(H), I x I)
};

// Builds the four contexts; throws DiagramFails if the two induced triplets on
// the square differ.
DiagramInstance make_diagram_instance(const ActionTriplet& t);

struct DiagramResult {
    SbCochain difference;  // psi_tilde(omega_rb(c)) - omega_sb(psi(c))
    ElementMap theta;      // difference = sb_coboundary(theta)
    std::string witness;   // "explicit" or "search"
};

// Throws NotCocycle for c outside Z^2 and DiagramFails if the difference is
// not a coboundary.
DiagramResult diagram_check(const DiagramInstance& inst, const RrbCochain& c,
                            std::uint64_t bound = kSearchBound);

// theta(h,g) = (0, -chi(g)) on the square.
ElementMap diagram_witness(const DiagramInstance& inst, const RrbCochain& c);

}  // namespace sbrace

#pragma once

#include <optional>
#include <vector>

#include "sbrace/cochain.hpp"
#include "sbrace/rota_baxter.hpp"

namespace sbrace {

// Module (K, L, trivial, S) over an RRB group (A, B, beta, T) with action
// (nu, mu, sigma, f): nu covariant B on K, mu contravariant A on K, sigma
// contravariant B on L, and f : L x A -> K.
struct RRBModule {
    RRBGroup base;
    FiniteGroup k;
    FiniteGroup l;
    ElementMap s_op;  // K -> L
    GroupAction nu;
    GroupAction mu;
    GroupAction sigma;
    Cochain2 f;  // rows L, cols A
};

Verdict check_rrb_module(const RRBModule& m);
// nu_b1(f(l, beta_b2(a))) = nu_b1b2(f(sigma_b2(l), a)). Not among the module
// conditions, but needed for phi on the extension to be an action.
Verdict check_rrb_phi_compatibility(const RRBModule& m);
RRBModule validate_rrb_module(const RRBGroup& base, const FiniteGroup& k, const FiniteGroup& l,
                              const ElementMap& s_op, const GroupAction& nu, const GroupAction& mu,
                              const GroupAction& sigma, const Cochain2& f);
// Trivial actions and f = 0.
RRBModule trivial_rrb_module(const RRBGroup& base, const FiniteGroup& k, const FiniteGroup& l,
                             const ElementMap& s_op);

struct RrbCochain {
    Cochain2 tau1;  // A x A -> K
    Cochain2 tau2;  // B x B -> L
    Cochain2 rho;   // A x B -> K
    ElementMap chi; // A -> L
    bool operator==(const RrbCochain& o) const = default;
};

extern const char* const kRrbEquationNames[];

void rrb_residual(const RRBModule& m, const RrbCochain& c, const ResidualSink& sink);
Verdict is_rrb_cocycle(const RRBModule& m, const RrbCochain& c);
RrbCochain rrb_coboundary(const RRBModule& m, const ElementMap& kappa1, const ElementMap& kappa2);
std::optional<std::pair<ElementMap, ElementMap>> is_rrb_coboundary(const RRBModule& m, const RrbCochain& c,
                                                                   std::uint64_t bound = kSearchBound);

SlotSpace rrb_slots(const RRBModule& m);
SlotSpace rrb_kappa_slots(const RRBModule& m);
std::vector<Elem> rrb_to_slots(const RrbCochain& c);
RrbCochain rrb_from_slots(const RRBModule& m, const std::vector<Elem>& v);
std::pair<ElementMap, ElementMap> kappa_from_slots(const RRBModule& m, const std::vector<Elem>& v);

// Z^2 as the kernel of the residual map; nullopt unless K and L are
// elementary abelian for one prime.
std::optional<linear::FpLinearMap> rrb_cocycle_map(const RRBModule& m);

ClassCount h2_rrb(const RRBModule& m, std::uint64_t bound = kSearchBound);

struct RrbExtension {
    RRBGroup total;
    RRBGroup base;
    RRBGroup kernel;  // (K, L, trivial, S)
    ElementMap incl_h;  // K -> H
    ElementMap incl_g;  // L -> G
    ElementMap proj_h;  // H -> A
    ElementMap proj_g;  // G -> B
};

Verdict check_rrb_extension(const RrbExtension& e);

// Carrier H = A x K (a*|K| + k) and G = B x L (b*|L| + l):
//   phi_(b,l)(a,k) = (beta_b(a), rho(a,b) + nu_b(f(l,a) + k))
//   R(a,k) = (T(a), chi(a) + S(nu^-1_T(a)(k)))
struct RrbTables {
    std::vector<Elem> h;
    std::vector<Elem> g;
    std::vector<ElementMap> phi;
    ElementMap r;
};
RrbTables rrb_extension_tables(const RRBModule& m, const RrbCochain& c);
// Builds and validates; returns the first failure instead of throwing.
Verdict check_rrb_tables(const RRBModule& m, const RrbTables& t);
RrbExtension extension_from_rrb_cocycle(const RRBModule& m, const RrbCochain& c);

RRBModule rrb_module_from_extension(const RrbExtension& e, const ElementMap& s_h, const ElementMap& s_g);
RrbCochain rrb_cocycle_from_extension(const RrbExtension& e, const ElementMap& s_h, const ElementMap& s_g);

// K normal abelian in H, L normal abelian in G, phi_G(K) = K, L acting
// trivially on K and on H/K, R(K) in L, and R descending to H/K -> G/L.
RrbExtension rrb_extension_from_ideal(const RRBGroup& e, const Subset& k, const Subset& l);
std::optional<std::pair<ElementMap, ElementMap>> find_rrb_equivalence(const RrbExtension& a, const RrbExtension& b,
                                                                      std::uint64_t bound = kSearchBound);

}  // namespace sbrace

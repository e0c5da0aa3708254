#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sbrace/cochain.hpp"
#include "sbrace/rota_baxter.hpp"

namespace sbrace {

// Coefficients (I, R_I) over an RB group (H, R_H): gamma is a contravariant
// action of H on I and R_I an endomorphism satisfying the module law
//   gamma_{R(h)}(R_I(z)) = R_I(gamma_{h R(h)}(z + R_I(z)) - gamma_{R(h)}(R_I(z))).
struct RBModule {
    RBOperator base;
    FiniteGroup coeff;
    ElementMap r_i;
    GroupAction gamma;
};

Verdict check_rb_module(const RBModule& m);
RBModule validate_rb_module(const RBOperator& base, const FiniteGroup& coeff, const ElementMap& r_i,
                            const GroupAction& gamma);
RBModule trivial_rb_module(const RBOperator& base, const FiniteGroup& coeff, const ElementMap& r_i);

struct RbCochain {
    Cochain2 tau;
    ElementMap r;
    bool operator==(const RbCochain& o) const = default;
};

extern const char* const kRbEquationNames[];

void rb_residual(const RBModule& m, const RbCochain& c, const ResidualSink& sink);
Verdict is_rb_cocycle(const RBModule& m, const RbCochain& c);
// (delta theta, Phi theta) with Phi(theta)(h) = R_I(gamma_{R(h)}(theta(h))) - theta(R(h)).
RbCochain rb_coboundary(const RBModule& m, const ElementMap& theta);
std::optional<ElementMap> is_rb_coboundary(const RBModule& m, const RbCochain& c,
                                           std::uint64_t bound = kSearchBound);

SlotSpace rb_slots(const RBModule& m);
SlotSpace rb_theta_slots(const RBModule& m);
std::vector<Elem> rb_to_slots(const RbCochain& c);
RbCochain rb_from_slots(const RBModule& m, const std::vector<Elem>& v);

ClassCount h2_rb(const RBModule& m, std::uint64_t bound = kSearchBound);

struct RbExtension {
    RBOperator total;
    RBOperator base;
    RBOperator kernel;  // (I, R_I)
    ElementMap inclusion;
    ElementMap projection;
};

Verdict check_rb_extension(const RbExtension& e);
// Carrier H x I, pair (h,y) encoded as h*|I| + y:
//   (h1,y1)(h2,y2) = (h1 h2, tau(h1,h2) + gamma_h2(y1) + y2)
//   R(h,y) = (R_H(h), r(h) + R_I(gamma_{R_H(h)}(y)))
std::pair<std::vector<Elem>, ElementMap> rb_extension_tables(const RBModule& m, const RbCochain& c);
RbExtension extension_from_rb_cocycle(const RBModule& m, const RbCochain& c);

RBModule rb_module_from_extension(const RbExtension& e, const ElementMap& section);
// tau(h1,h2) = s(h1 h2)^-1 s(h1) s(h2), r(h) = s(R(h))^-1 R(s(h)).
RbCochain rb_cocycle_from_extension(const RbExtension& e, const ElementMap& section);

// Requires I normal abelian, R(I) in I, and R(x i) in R(x) I.
RbExtension rb_extension_from_ideal(const RBOperator& e, const Subset& ideal);
std::optional<ElementMap> find_rb_equivalence(const RbExtension& a, const RbExtension& b,
                                              std::uint64_t bound = kSearchBound);

}  // namespace sbrace

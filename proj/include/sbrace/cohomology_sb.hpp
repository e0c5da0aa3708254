#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sbrace/brace.hpp"
#include "sbrace/cochain.hpp"

namespace sbrace {

// Module data for extensions of a brace M by an abelian group I, viewed as a
// trivial brace. xi is a covariant action of (M,o), zeta a contravariant action
// of (M,.), eps a contravariant action of (M,o), all on I.
struct ActionTriplet {
    SkewBrace base;
    FiniteGroup coeff;
    GroupAction xi;
    GroupAction zeta;
    GroupAction eps;
};

Verdict check_good_triplet(const ActionTriplet& t);
ActionTriplet validate_good_triplet(const SkewBrace& base, const FiniteGroup& coeff, const GroupAction& xi,
                                    const GroupAction& zeta, const GroupAction& eps);
ActionTriplet trivial_triplet(const SkewBrace& base, const FiniteGroup& coeff);

// g measures the additive twist, f the multiplicative one.
struct SbCochain {
    Cochain2 g;
    Cochain2 f;
    bool operator==(const SbCochain& o) const = default;
};

extern const char* const kSbEquationNames[];

void sb_residual(const ActionTriplet& t, const SbCochain& c, const ResidualSink& sink);
Verdict is_sb_cocycle(const ActionTriplet& t, const SbCochain& c);
SbCochain sb_coboundary(const ActionTriplet& t, const ElementMap& theta);
// Exhaustive over normalized theta within `bound`; above it, solved over F_p
// when I is elementary abelian, otherwise SearchTooLarge.
std::optional<ElementMap> is_sb_coboundary(const ActionTriplet& t, const SbCochain& c,
                                           std::uint64_t bound = kSearchBound);

SlotSpace sb_slots(const ActionTriplet& t);
SlotSpace sb_theta_slots(const ActionTriplet& t);
std::vector<Elem> sb_to_slots(const SbCochain& c);
SbCochain sb_from_slots(const ActionTriplet& t, const std::vector<Elem>& v);
ElementMap theta_from_slots(int n, const std::vector<Elem>& v);
std::vector<Elem> theta_to_slots(const ElementMap& theta);

ClassCount h2_sb(const ActionTriplet& t, std::uint64_t bound = kSearchBound);

// 0 -> I -> E -> M -> 0 with I a trivial-brace ideal.
struct SbExtension {
    SkewBrace total;
    SkewBrace base;
    FiniteGroup coeff;
    ElementMap inclusion;   // I -> E
    ElementMap projection;  // E -> M
};

Verdict check_sb_extension(const SbExtension& e);
// Carrier M x I, pair (m,y) encoded as m*|I| + y:
//   (m1,y1).(m2,y2) = (m1 m2, g(m1,m2) + zeta_m2(y1) + y2)
//   (m1,y1)o(m2,y2) = (m1 o m2, f(m1,m2) + xi_{m1 o m2} eps_m2 xi_m1^-1(y1) + xi_m1(y2))
std::pair<std::vector<Elem>, std::vector<Elem>> sb_extension_tables(const ActionTriplet& t, const SbCochain& c);
SbExtension extension_from_sb_cocycle(const ActionTriplet& t, const SbCochain& c);

Verdict check_section(const ElementMap& s, const ElementMap& projection, int base_order);
ElementMap canonical_section(const ElementMap& projection, int base_order);

ActionTriplet triplet_from_extension(const SbExtension& e, const ElementMap& section);
SbCochain sb_cocycle_from_extension(const SbExtension& e, const ElementMap& section);

// Requires the ideal to be abelian and a trivial brace.
SbExtension sb_extension_from_ideal(const SkewBrace& e, const Subset& ideal);
// Brace isomorphism commuting with inclusions and projections, found by
// searching lifts s2(m) + theta(m) of a section of the second extension.
std::optional<ElementMap> find_sb_equivalence(const SbExtension& a, const SbExtension& b,
                                              std::uint64_t bound = kSearchBound);

}  // namespace sbrace
